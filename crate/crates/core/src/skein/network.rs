//! Planar networks of crossings and Temperley-Lieb boxes, evaluated by a
//! frontier state sum.
//!
//! Nodes are absorbed one at a time. After each step the open edges (one
//! end absorbed, the other not) are paired up by the strands already
//! resolved; that pairing is the whole state, so partial smoothings with the
//! same connectivity are merged and their coefficients added.

use indexmap::IndexMap;
use rayon::prelude::*;

use crate::algebra::{LaurentPoly, Ring};
use crate::diagram::Diagram;

/// One term of a box: a perfect matching of its slots (`pairing[i]` is the
/// partner of slot `i`) with a Laurent coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxTerm {
    pub pairing: Vec<usize>,
    pub coeff: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    /// Edges counterclockwise, starting at the incoming under-strand.
    Crossing([usize; 4]),
    /// A planar box with slots in counterclockwise order.
    Box { slots: Vec<usize>, terms: Vec<BoxTerm> },
}

impl Node {
    fn slots(&self) -> &[usize] {
        match self {
            Node::Crossing(e) => e,
            Node::Box { slots, .. } => slots,
        }
    }
}

/// Edges are `0..edge_count`; every edge meets node slots exactly twice.
/// `free_loops` counts closed circles that meet no node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlanarNetwork {
    pub nodes: Vec<Node>,
    pub edge_count: usize,
    pub free_loops: usize,
}

impl PlanarNetwork {
    /// Crossing-only network of a diagram; framings and colors are ignored.
    pub fn from_diagram(d: &Diagram) -> Self {
        let mut index = std::collections::BTreeMap::new();
        for c in d.components() {
            for &a in &c.arcs {
                let next = index.len();
                index.insert(a, next);
            }
        }
        let nodes = d.crossings().iter().map(|x| Node::Crossing(x.arcs.map(|a| index[&a]))).collect();
        Self { nodes, edge_count: index.len(), free_loops: d.loop_count() }
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Crossing(_))).count()
    }

    /// Greedy elimination order keeping the frontier narrow.
    fn elimination_order(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut absorbed_ends = vec![0u8; self.edge_count];
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let mut best: Option<(i64, usize)> = None;
            for (v, node) in self.nodes.iter().enumerate() {
                if done[v] {
                    continue;
                }
                let slots = node.slots();
                let closes = slots.iter().filter(|&&e| absorbed_ends[e] == 1).count() as i64;
                let opens = slots
                    .iter()
                    .filter(|&&e| absorbed_ends[e] == 0 && slots.iter().filter(|&&f| f == e).count() == 1)
                    .count() as i64;
                let score = closes - opens;
                if best.is_none_or(|(s, _)| score > s) {
                    best = Some((score, v));
                }
            }
            let (_, v) = best.unwrap();
            done[v] = true;
            for &e in self.nodes[v].slots() {
                absorbed_ends[e] += 1;
            }
            order.push(v);
        }
        order
    }
}

enum Weight<E> {
    Shift(i64),
    Elem(E),
}

#[derive(Clone, Copy)]
enum SlotKind {
    /// Open edge at this index of the incoming frontier.
    Frontier(usize),
    /// Edge opened by this node, at this index of the outgoing frontier.
    New(usize),
    /// Both ends of the edge are slots of this node.
    SelfEdge(usize),
}

struct Step<E> {
    kinds: Vec<SlotKind>,
    /// Incoming-frontier index -> slot of this node holding that edge.
    slot_of_old: Vec<Option<usize>>,
    /// Incoming-frontier index -> outgoing-frontier index for untouched edges.
    old_to_new: Vec<usize>,
    new_len: usize,
    terms: Vec<(Vec<usize>, Weight<E>)>,
}

/// Value of the network: every full resolution contributes the product of
/// its weights times `delta` per closed loop.
pub fn state_sum<R: Ring>(net: &PlanarNetwork, ring: &R) -> R::Elem {
    let order = net.elimination_order();
    let max_slots = net.nodes.iter().map(|n| n.slots().len()).max().unwrap_or(0);
    let delta = ring.embed(&LaurentPoly::delta());
    let mut delta_pows = vec![ring.one()];
    for i in 1..=(max_slots / 2).max(net.free_loops) {
        let next = ring.mul(&delta_pows[i - 1], &delta);
        delta_pows.push(next);
    }
    let mut frontier: Vec<usize> = Vec::new();
    let mut states: IndexMap<Vec<u16>, R::Elem> = IndexMap::new();
    states.insert(Vec::new(), ring.one());
    for &v in &order {
        let (step, next_frontier) = plan_step(&net.nodes[v], &frontier, ring);
        let entries: Vec<(Vec<u16>, R::Elem)> = states.into_iter().collect();
        let expand = |(key, value): &(Vec<u16>, R::Elem)| {
            let mut out = Vec::with_capacity(step.terms.len());
            for (pairing, weight) in &step.terms {
                let (next, loops) = transition(&step, key, pairing);
                let w = match weight {
                    Weight::Shift(e) => ring.shift(value, *e),
                    Weight::Elem(c) => ring.mul(value, c),
                };
                let w = if loops == 0 { w } else { ring.mul(&w, &delta_pows[loops]) };
                if !ring.is_zero(&w) {
                    out.push((next, w));
                }
            }
            out
        };
        let expanded: Vec<Vec<(Vec<u16>, R::Elem)>> = if entries.len() >= 256 {
            entries.par_iter().map(expand).collect()
        } else {
            entries.iter().map(expand).collect()
        };
        let mut next_states: IndexMap<Vec<u16>, R::Elem> = IndexMap::with_capacity(expanded.len());
        for (key, w) in expanded.into_iter().flatten() {
            match next_states.get_mut(&key) {
                Some(acc) => ring.add_assign(acc, &w),
                None => {
                    next_states.insert(key, w);
                }
            }
        }
        states = next_states;
        frontier = next_frontier;
    }
    debug_assert!(frontier.is_empty());
    let total = states.swap_remove(&Vec::new()).unwrap_or_else(|| ring.zero());
    ring.mul(&total, &delta_pows[net.free_loops])
}

fn plan_step<R: Ring>(node: &Node, frontier: &[usize], ring: &R) -> (Step<R::Elem>, Vec<usize>) {
    let slots = node.slots();
    let pos_old = |e: usize| frontier.binary_search(&e).ok();
    let mut next: Vec<usize> = frontier.iter().copied().filter(|e| !slots.contains(e)).collect();
    for (i, &e) in slots.iter().enumerate() {
        if pos_old(e).is_none() && slots.iter().enumerate().all(|(j, &f)| j == i || f != e) {
            next.push(e);
        }
    }
    next.sort_unstable();
    let pos_new = |e: usize| next.binary_search(&e).expect("edge in outgoing frontier");
    let kinds = slots
        .iter()
        .enumerate()
        .map(|(i, &e)| match pos_old(e) {
            Some(p) => SlotKind::Frontier(p),
            None => match slots.iter().enumerate().position(|(j, &f)| j != i && f == e) {
                Some(j) => SlotKind::SelfEdge(j),
                None => SlotKind::New(pos_new(e)),
            },
        })
        .collect();
    let mut slot_of_old = vec![None; frontier.len()];
    for (i, &e) in slots.iter().enumerate() {
        if let Some(p) = pos_old(e) {
            slot_of_old[p] = Some(i);
        }
    }
    let old_to_new =
        frontier.iter().map(|&e| if slots.contains(&e) { usize::MAX } else { pos_new(e) }).collect();
    let terms = match node {
        Node::Crossing(_) => vec![(vec![1, 0, 3, 2], Weight::Shift(1)), (vec![3, 2, 1, 0], Weight::Shift(-1))],
        Node::Box { terms, .. } => {
            terms.iter().map(|t| (t.pairing.clone(), Weight::Elem(ring.embed(&t.coeff)))).collect()
        }
    };
    let new_len = next.len();
    (Step { kinds, slot_of_old, old_to_new, new_len, terms }, next)
}

/// New frontier pairing and number of loops closed by resolving the node
/// with `pairing`.
fn transition<E>(step: &Step<E>, partner: &[u16], pairing: &[usize]) -> (Vec<u16>, usize) {
    let m = pairing.len();
    let mut visited = vec![false; m];
    let mut next = vec![u16::MAX; step.new_len];
    // Walks out of the node along the edge at slot `k`, re-entering through
    // the pairing whenever the path comes back, until it reaches an open end.
    let follow = |mut k: usize, visited: &mut Vec<bool>| -> usize {
        loop {
            visited[k] = true;
            let j = match step.kinds[k] {
                SlotKind::New(n) => return n,
                SlotKind::SelfEdge(j) => j,
                SlotKind::Frontier(f) => {
                    let g = partner[f] as usize;
                    match step.slot_of_old[g] {
                        Some(j) => j,
                        None => return step.old_to_new[g],
                    }
                }
            };
            visited[j] = true;
            k = pairing[j];
        }
    };
    for f in 0..partner.len() {
        if step.slot_of_old[f].is_some() {
            continue;
        }
        let nf = step.old_to_new[f];
        if next[nf] != u16::MAX {
            continue;
        }
        let g = partner[f] as usize;
        let t = match step.slot_of_old[g] {
            Some(j) => {
                visited[j] = true;
                follow(pairing[j], &mut visited)
            }
            None => step.old_to_new[g],
        };
        next[nf] = t as u16;
        next[t] = nf as u16;
    }
    for i in 0..m {
        if let SlotKind::New(n) = step.kinds[i] {
            if next[n] != u16::MAX {
                continue;
            }
            visited[i] = true;
            let t = follow(pairing[i], &mut visited);
            next[n] = t as u16;
            next[t] = n as u16;
        }
    }
    let mut loops = 0;
    for i in 0..m {
        if visited[i] {
            continue;
        }
        loops += 1;
        let mut k = i;
        loop {
            visited[k] = true;
            let j = pairing[k];
            visited[j] = true;
            k = match step.kinds[j] {
                SlotKind::SelfEdge(o) => o,
                SlotKind::Frontier(f) => step.slot_of_old[partner[f] as usize].expect("closed path stays inside"),
                SlotKind::New(_) => unreachable!("open edge on a closed path"),
            };
            if k == i {
                break;
            }
        }
    }
    (next, loops)
}
