//! Framed, possibly dotted or colored, link diagrams in PD notation.
//!
//! Each crossing lists four arc labels counterclockwise, starting with the
//! incoming under-strand: the under-strand runs `a -> c`, the over-strand
//! runs `b -> d` or `d -> b`. Arc labels are consecutive along each
//! component in its declared cyclic order.

mod format;
mod linking;

use std::collections::{BTreeMap, BTreeSet};

pub use format::parse_diagram;
pub use linking::{linking_matrix, signature_nullity, Inertia, LinkingMatrix};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub id: u32,
    /// Framing of the attaching curve. Always 0 on dotted components.
    pub framing: i64,
    pub dotted: bool,
    /// Part of an ordinary (spectator) link rather than surgery data.
    pub barred: bool,
    /// Color `n` labels the `(n+1)`-dimensional irrep.
    pub color: Option<u32>,
    /// Arc labels in cyclic order; empty for a crossingless circle.
    pub arcs: Vec<u32>,
}

impl Component {
    pub fn new(id: u32, framing: i64) -> Self {
        Self { id, framing, dotted: false, barred: false, color: None, arcs: Vec::new() }
    }

    pub fn dotted(id: u32) -> Self {
        Self { dotted: true, ..Self::new(id, 0) }
    }

    pub fn is_loop(&self) -> bool {
        self.arcs.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [u32; 4],
    over_to_d: bool,
}

impl Crossing {
    /// `+1` when the over-strand runs `d -> b`.
    pub fn sign(&self) -> i64 {
        if self.over_to_d {
            -1
        } else {
            1
        }
    }

    pub fn under(&self) -> (u32, u32) {
        (self.arcs[0], self.arcs[2])
    }

    /// Over-strand as `(incoming, outgoing)`.
    pub fn over(&self) -> (u32, u32) {
        if self.over_to_d {
            (self.arcs[1], self.arcs[3])
        } else {
            (self.arcs[3], self.arcs[1])
        }
    }

    /// Slot index (0..4) of the incoming over-strand.
    pub fn over_in_slot(&self) -> usize {
        if self.over_to_d {
            1
        } else {
            3
        }
    }

    /// Same crossing with the strands exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.arcs;
        if self.over_to_d {
            // new under b -> d, new over a -> c enters at the new d-slot
            Crossing { arcs: [b, c, d, a], over_to_d: false }
        } else {
            Crossing { arcs: [d, a, b, c], over_to_d: true }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    components: Vec<Component>,
    crossings: Vec<Crossing>,
}

impl Diagram {
    pub fn empty() -> Self {
        Self { components: Vec::new(), crossings: Vec::new() }
    }

    /// Crossingless circle with the given framing.
    pub fn unknot(framing: i64) -> Self {
        Self { components: vec![Component::new(1, framing)], crossings: Vec::new() }
    }

    /// Validates a PD description and resolves over-strand directions from
    /// the declared arc order.
    pub fn new(components: Vec<Component>, crossings: Vec<[u32; 4]>) -> Result<Self> {
        validate_components(&components)?;
        let succ = successor_map(&components);
        let mut uses: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &crossings {
            for &a in x {
                *uses.entry(a).or_default() += 1;
            }
        }
        for (&arc, &n) in &uses {
            if !succ.contains_key(&arc) {
                return Err(Error::Validation(format!("arc {arc} is not declared by any component")));
            }
            if n != 2 {
                return Err(Error::Validation(format!("arc {arc} is used {n} times (expected 2)")));
            }
        }
        for c in &components {
            for a in &c.arcs {
                if !uses.contains_key(a) {
                    return Err(Error::Validation(format!("arc {a} of component {} appears in no crossing", c.id)));
                }
            }
        }
        let mut dirs: Vec<Option<bool>> = Vec::with_capacity(crossings.len());
        for (i, &[a, b, c, d]) in crossings.iter().enumerate() {
            if succ[&a] != c {
                return Err(Error::Validation(format!(
                    "crossing {}: under-strand {a} -> {c} does not follow the component order",
                    i + 1
                )));
            }
            let fwd = succ[&b] == d;
            let bwd = succ[&d] == b;
            if !fwd && !bwd {
                return Err(Error::Validation(format!(
                    "crossing {}: over-strand arcs {b}, {d} are not consecutive",
                    i + 1
                )));
            }
            dirs.push((fwd != bwd).then_some(fwd));
        }
        resolve_ambiguous(&crossings, &mut dirs);
        let crossings: Vec<Crossing> =
            crossings.iter().zip(dirs).map(|(&arcs, dir)| Crossing { arcs, over_to_d: dir.unwrap() }).collect();
        let diagram = Self { components, crossings };
        diagram.check_consistency()?;
        Ok(diagram)
    }

    /// Assembles a diagram whose crossing directions are already known and
    /// renumbers arcs consecutively in component order.
    fn from_oriented(components: Vec<Component>, crossings: Vec<Crossing>) -> Self {
        let mut relabel = BTreeMap::new();
        let mut next = 1u32;
        for c in &components {
            for &a in &c.arcs {
                relabel.insert(a, next);
                next += 1;
            }
        }
        let components = components
            .into_iter()
            .map(|c| Component { arcs: c.arcs.iter().map(|a| relabel[a]).collect(), ..c })
            .collect();
        let crossings = crossings
            .into_iter()
            .map(|x| Crossing { arcs: x.arcs.map(|a| relabel[&a]), over_to_d: x.over_to_d })
            .collect();
        let d = Self { components, crossings };
        if let Err(e) = d.check_consistency() {
            panic!("internal diagram construction produced an invalid diagram: {e}");
        }
        d
    }

    fn check_consistency(&self) -> Result<()> {
        validate_components(&self.components)?;
        let succ = successor_map(&self.components);
        let mut heads: BTreeMap<u32, usize> = BTreeMap::new();
        let mut tails: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &self.crossings {
            for (i, o) in [x.under(), x.over()] {
                if succ.get(&i) != Some(&o) {
                    return Err(Error::Validation(format!("strand {i} -> {o} does not follow the component order")));
                }
                *heads.entry(i).or_default() += 1;
                *tails.entry(o).or_default() += 1;
            }
        }
        for &a in succ.keys() {
            if heads.get(&a) != Some(&1) || tails.get(&a) != Some(&1) {
                return Err(Error::Validation(format!("arc {a} does not run between exactly two crossing passages")));
            }
        }
        let owner = self.arc_owner();
        let mut pair_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for x in &self.crossings {
            let (u, o) = (owner[&x.arcs[0]], owner[&x.arcs[1]]);
            if u != o {
                *pair_counts.entry((u.min(o), u.max(o))).or_default() += 1;
            }
        }
        if let Some(((i, j), _)) = pair_counts.iter().find(|(_, &n)| n % 2 == 1) {
            return Err(Error::Validation(format!(
                "components {} and {} cross an odd number of times",
                self.components[*i].id, self.components[*j].id
            )));
        }
        Ok(())
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn loop_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_loop()).count()
    }

    pub fn arc_count(&self) -> usize {
        self.components.iter().map(|c| c.arcs.len()).sum()
    }

    /// Map from arc label to component index.
    pub fn arc_owner(&self) -> BTreeMap<u32, usize> {
        let mut owner = BTreeMap::new();
        for (i, c) in self.components.iter().enumerate() {
            for &a in &c.arcs {
                owner.insert(a, i);
            }
        }
        owner
    }

    /// Component indices `(under, over)` of every crossing.
    pub fn crossing_components(&self) -> Vec<(usize, usize)> {
        let owner = self.arc_owner();
        self.crossings.iter().map(|x| (owner[&x.arcs[0]], owner[&x.arcs[1]])).collect()
    }

    /// Blackboard writhe of the whole diagram.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(Crossing::sign).sum()
    }

    /// Writhe of the crossings of component `i` with itself.
    pub fn self_writhe(&self, i: usize) -> i64 {
        self.crossing_components()
            .iter()
            .zip(&self.crossings)
            .filter(|((u, o), _)| *u == i && *o == i)
            .map(|(_, x)| x.sign())
            .sum()
    }

    pub fn set_framing(&mut self, i: usize, framing: i64) {
        self.components[i].framing = framing;
    }

    pub fn with_framings(mut self, framings: &[i64]) -> Self {
        assert_eq!(framings.len(), self.components.len());
        for (c, &f) in self.components.iter_mut().zip(framings) {
            c.framing = f;
        }
        self
    }

    /// Marks component `i` as a dotted circle (framing forced to 0).
    pub fn with_dotted(mut self, i: usize) -> Self {
        self.components[i].dotted = true;
        self.components[i].framing = 0;
        self
    }

    /// Marks component `i` as a barred spectator of the given color.
    pub fn with_barred(mut self, i: usize, color: u32) -> Self {
        self.components[i].barred = true;
        self.components[i].color = Some(color);
        self
    }

    /// Exchanges over and under at every crossing and negates framings.
    pub fn mirror(&self) -> Self {
        let components = self.components.iter().map(|c| Component { framing: -c.framing, ..c.clone() }).collect();
        let crossings = self.crossings.iter().map(Crossing::switched).collect();
        Self { components, crossings }
    }

    /// Adds a split unknot of framing `sign` (first Kirby move).
    pub fn blow_up(&self, sign: i64) -> Self {
        assert!(sign == 1 || sign == -1, "blow-up framing must be +1 or -1");
        let id = self.components.iter().map(|c| c.id).max().unwrap_or(0) + 1;
        let mut out = self.clone();
        out.components.push(Component::new(id, sign));
        out
    }

    /// Split union; arcs and ids of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Diagram) -> Self {
        let arc_shift = self.components.iter().flat_map(|c| c.arcs.iter().copied()).max().unwrap_or(0);
        let id_shift = self.components.iter().map(|c| c.id).max().unwrap_or(0);
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| Component {
            id: c.id + id_shift,
            arcs: c.arcs.iter().map(|a| a + arc_shift).collect(),
            ..c.clone()
        }));
        let mut crossings = self.crossings.clone();
        crossings.extend(
            other.crossings.iter().map(|x| Crossing { arcs: x.arcs.map(|a| a + arc_shift), over_to_d: x.over_to_d }),
        );
        Self { components, crossings }
    }

    /// Keeps only the listed components (in the given order), dropping every
    /// crossing that involves a removed component and merging the arcs
    /// around it.
    pub fn sublink(&self, keep: &[usize]) -> Self {
        let owner = self.arc_owner();
        let kept: BTreeSet<usize> = keep.iter().copied().collect();
        let mut crossings = Vec::new();
        // Arcs that disappear are merged into their predecessor.
        let mut dropped: BTreeSet<u32> = BTreeSet::new();
        for x in &self.crossings {
            let (u, o) = (owner[&x.arcs[0]], owner[&x.arcs[1]]);
            match (kept.contains(&u), kept.contains(&o)) {
                (true, true) => crossings.push(*x),
                (true, false) => {
                    dropped.insert(x.arcs[2]);
                }
                (false, true) => {
                    dropped.insert(x.over().1);
                }
                (false, false) => {}
            }
        }
        let mut rep: BTreeMap<u32, u32> = BTreeMap::new();
        let mut components = Vec::new();
        for &i in keep {
            let c = &self.components[i];
            let mut arcs = Vec::new();
            if let Some(first) = c.arcs.iter().position(|a| !dropped.contains(a)) {
                let n = c.arcs.len();
                let mut last = c.arcs[first];
                for k in 0..n {
                    let a = c.arcs[(first + k) % n];
                    if dropped.contains(&a) {
                        rep.insert(a, last);
                    } else {
                        arcs.push(a);
                        last = a;
                    }
                }
            }
            components.push(Component { arcs, ..c.clone() });
        }
        // Every crossing of a kept component may have been removed; such a
        // component becomes a crossingless circle.
        let crossings: Vec<Crossing> = crossings
            .into_iter()
            .map(|x| Crossing { arcs: x.arcs.map(|a| *rep.get(&a).unwrap_or(&a)), over_to_d: x.over_to_d })
            .collect();
        let used: BTreeSet<u32> = crossings.iter().flat_map(|x| x.arcs).collect();
        for c in &mut components {
            if c.arcs.iter().all(|a| !used.contains(a)) {
                c.arcs.clear();
            }
        }
        Self::from_oriented(components, crossings)
    }

    /// Inserts curls so that each component's self-writhe equals its
    /// framing; the blackboard framing of the result is the declared one.
    pub fn with_blackboard_framing(&self) -> Self {
        let mut components = self.components.clone();
        let mut crossings = self.crossings.clone();
        let mut next = components.iter().flat_map(|c| c.arcs.iter().copied()).max().unwrap_or(0) + 1;
        for i in 0..components.len() {
            let kinks = components[i].framing - self.self_writhe(i);
            if kinks == 0 {
                continue;
            }
            let positive = kinks > 0;
            let mut remaining = kinks.unsigned_abs();
            if components[i].arcs.is_empty() {
                let (x, y) = (next, next + 1);
                next += 2;
                crossings.push(if positive {
                    Crossing { arcs: [x, x, y, y], over_to_d: false }
                } else {
                    Crossing { arcs: [x, y, y, x], over_to_d: true }
                });
                components[i].arcs = vec![x, y];
                remaining -= 1;
            }
            let mut cur = components[i].arcs[0];
            let mut pos = 0usize;
            for _ in 0..remaining {
                let (y, z) = (next, next + 1);
                next += 2;
                // the passage where `cur` currently ends now receives `z`
                let (xi, slot) = crossings
                    .iter()
                    .enumerate()
                    .find_map(|(j, x)| {
                        if x.arcs[0] == cur {
                            Some((j, 0))
                        } else if x.arcs[x.over_in_slot()] == cur {
                            Some((j, x.over_in_slot()))
                        } else {
                            None
                        }
                    })
                    .expect("every arc ends at a crossing");
                crossings[xi].arcs[slot] = z;
                crossings.push(if positive {
                    Crossing { arcs: [cur, z, y, y], over_to_d: false }
                } else {
                    Crossing { arcs: [cur, y, y, z], over_to_d: true }
                });
                components[i].arcs.splice(pos + 1..pos + 1, [y, z]);
                cur = z;
                pos += 2;
            }
        }
        Self::from_oriented(components, crossings)
    }

    /// Closure of a braid on `strands` strands. Generator `i` (1-based) is
    /// the positive crossing of strands `i` and `i+1`; `-i` its inverse.
    /// Components are ordered by the lowest strand position they occupy and
    /// carry framing 0.
    pub fn from_braid(strands: usize, word: &[i32]) -> Self {
        let mut cur: Vec<u32> = (1..=strands as u32).collect();
        let mut next = strands as u32 + 1;
        let mut raw: Vec<Crossing> = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize;
            assert!(i >= 1 && i < strands, "generator {g} out of range for {strands} strands");
            let (left, right) = (cur[i - 1], cur[i]);
            let (nl, nr) = (next, next + 1);
            next += 2;
            raw.push(if g > 0 {
                // over: bottom-left -> top-right
                Crossing { arcs: [right, nr, nl, left], over_to_d: false }
            } else {
                // over: bottom-right -> top-left
                Crossing { arcs: [left, right, nr, nl], over_to_d: true }
            });
            cur[i - 1] = nl;
            cur[i] = nr;
        }
        // close: bottom label p is the same arc as the top arc at p
        let close: BTreeMap<u32, u32> = (1..=strands as u32).map(|p| (p, cur[p as usize - 1])).collect();
        for x in &mut raw {
            for a in &mut x.arcs {
                if let Some(&t) = close.get(a) {
                    *a = t;
                }
            }
        }
        let mut succ: BTreeMap<u32, u32> = BTreeMap::new();
        for x in &raw {
            for (i, o) in [x.under(), x.over()] {
                succ.insert(i, o);
            }
        }
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut components = Vec::new();
        for p in 0..strands {
            let start = cur[p];
            if !succ.contains_key(&start) {
                components.push(Component::new(components.len() as u32 + 1, 0));
                continue;
            }
            if seen.contains(&start) {
                continue;
            }
            let mut arcs = vec![start];
            seen.insert(start);
            let mut a = succ[&start];
            while a != start {
                arcs.push(a);
                seen.insert(a);
                a = succ[&a];
            }
            components.push(Component { arcs, ..Component::new(components.len() as u32 + 1, 0) });
        }
        Self::from_oriented(components, raw)
    }

    /// Oriented smoothing of crossing `site`: the result has one crossing
    /// fewer; components are retraced and carry framing 0.
    pub fn oriented_smoothing(&self, site: usize) -> Self {
        let x = self.crossings[site];
        let (u_in, u_out) = x.under();
        let (o_in, o_out) = x.over();
        let mut crossings: Vec<Crossing> =
            self.crossings.iter().enumerate().filter(|&(i, _)| i != site).map(|(_, c)| *c).collect();
        // merge each pair of joined arcs under the incoming label
        let mut rename: BTreeMap<u32, u32> = BTreeMap::new();
        let mut free_loops = 0usize;
        for (head, tail) in [(u_in, o_out), (o_in, u_out)] {
            if head == tail {
                free_loops += 1;
            } else {
                rename.insert(tail, head);
            }
        }
        let resolve = |mut a: u32, rename: &BTreeMap<u32, u32>| {
            while let Some(&b) = rename.get(&a) {
                if b == a {
                    break;
                }
                a = b;
            }
            a
        };
        for c in &mut crossings {
            for a in &mut c.arcs {
                *a = resolve(*a, &rename);
            }
        }
        let mut new_succ: BTreeMap<u32, u32> = BTreeMap::new();
        for c in &crossings {
            for (i, o) in [c.under(), c.over()] {
                new_succ.insert(i, o);
            }
        }
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        let mut starts: Vec<u32> = new_succ.keys().copied().collect();
        starts.sort_unstable();
        for s in starts {
            if seen.contains(&s) {
                continue;
            }
            let mut arcs = vec![s];
            seen.insert(s);
            let mut a = new_succ[&s];
            while a != s {
                arcs.push(a);
                seen.insert(a);
                a = new_succ[&a];
            }
            components.push(Component { arcs, ..Component::new(components.len() as u32 + 1, 0) });
        }
        for _ in 0..free_loops {
            components.push(Component::new(components.len() as u32 + 1, 0));
        }
        for _ in 0..self.loop_count() {
            components.push(Component::new(components.len() as u32 + 1, 0));
        }
        Self::from_oriented(components, crossings)
    }

    /// True when the two diagrams have the same crossings and loops after
    /// renaming arcs; framings and component metadata are ignored.
    pub fn same_up_to_relabeling(&self, other: &Diagram) -> bool {
        if self.crossing_count() != other.crossing_count()
            || self.loop_count() != other.loop_count()
            || self.arc_count() != other.arc_count()
        {
            return false;
        }
        let occ_a = self.occurrences();
        let occ_b = other.occurrences();
        let n = self.crossing_count();
        let mut state = Matching { xmap: vec![None; n], used: vec![false; n], arcs: BTreeMap::new(), back: BTreeMap::new() };
        for x in 0..n {
            if state.xmap[x].is_some() {
                continue;
            }
            let mut found = false;
            for y in 0..n {
                if state.used[y] {
                    continue;
                }
                let mut trial = state.clone();
                if trial.propagate(x, y, self, other, &occ_a, &occ_b) {
                    state = trial;
                    found = true;
                    break;
                }
            }
            if !found {
                return false;
            }
        }
        true
    }

    fn occurrences(&self) -> BTreeMap<u32, Vec<(usize, usize)>> {
        let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.arcs.iter().enumerate() {
                occ.entry(a).or_default().push((i, s));
            }
        }
        occ
    }

    /// The diagram with crossing `site` switched.
    pub fn switch_crossing(&self, site: usize) -> Self {
        let mut out = self.clone();
        out.crossings[site] = out.crossings[site].switched();
        out
    }
}

#[derive(Clone)]
struct Matching {
    xmap: Vec<Option<usize>>,
    used: Vec<bool>,
    arcs: BTreeMap<u32, u32>,
    back: BTreeMap<u32, u32>,
}

type Occurrences = BTreeMap<u32, Vec<(usize, usize)>>;

impl Matching {
    fn propagate(&mut self, x: usize, y: usize, a: &Diagram, b: &Diagram, occ_a: &Occurrences, occ_b: &Occurrences) -> bool {
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            if self.xmap[x] == Some(y) {
                continue;
            }
            if self.xmap[x].is_some() || self.used[y] {
                return false;
            }
            let (cx, cy) = (a.crossings[x], b.crossings[y]);
            if cx.over_to_d != cy.over_to_d {
                return false;
            }
            self.xmap[x] = Some(y);
            self.used[y] = true;
            for s in 0..4 {
                let (p, q) = (cx.arcs[s], cy.arcs[s]);
                if *self.arcs.entry(p).or_insert(q) != q || *self.back.entry(q).or_insert(p) != p {
                    return false;
                }
                let other_p = occ_a[&p].iter().copied().find(|&o| o != (x, s)).unwrap();
                let other_q = occ_b[&q].iter().copied().find(|&o| o != (y, s)).unwrap();
                if other_p.1 != other_q.1 {
                    return false;
                }
                stack.push((other_p.0, other_q.0));
            }
        }
        true
    }
}

fn validate_components(components: &[Component]) -> Result<()> {
    let mut ids = BTreeSet::new();
    let mut arcs = BTreeSet::new();
    for c in components {
        if !ids.insert(c.id) {
            return Err(Error::Validation(format!("duplicate component id {}", c.id)));
        }
        if c.dotted && c.framing != 0 {
            return Err(Error::Validation(format!("dotted component {} has nonzero framing {}", c.id, c.framing)));
        }
        if c.barred && c.dotted {
            return Err(Error::Validation(format!("component {} is both barred and dotted", c.id)));
        }
        if c.barred && c.color.is_none() {
            return Err(Error::Validation(format!("barred component {} has no color", c.id)));
        }
        for &a in &c.arcs {
            if a == 0 {
                return Err(Error::Validation("arc labels must be positive".into()));
            }
            if !arcs.insert(a) {
                return Err(Error::Validation(format!("arc {a} declared twice")));
            }
        }
    }
    Ok(())
}

fn successor_map(components: &[Component]) -> BTreeMap<u32, u32> {
    let mut succ = BTreeMap::new();
    for c in components {
        let n = c.arcs.len();
        for i in 0..n {
            succ.insert(c.arcs[i], c.arcs[(i + 1) % n]);
        }
    }
    succ
}

/// Two-arc components make `b -> d` and `d -> b` both consistent with the
/// arc order. Such crossings are settled by requiring one incoming and one
/// outgoing passage per arc; a component that is over at both of its
/// crossings stays ambiguous and is oriented `b -> d` at its first one.
fn resolve_ambiguous(crossings: &[[u32; 4]], dirs: &mut [Option<bool>]) {
    while dirs.iter().any(Option::is_none) {
        // arcs entering and leaving resolved passages; the over passage of an
        // unresolved crossing is absent, so any hit is another passage
        let mut heads = BTreeSet::new();
        let mut tails = BTreeSet::new();
        for (x, dir) in crossings.iter().zip(dirs.iter()) {
            heads.insert(x[0]);
            tails.insert(x[2]);
            if let Some(fwd) = dir {
                let (h, t) = if *fwd { (x[1], x[3]) } else { (x[3], x[1]) };
                heads.insert(h);
                tails.insert(t);
            }
        }
        let mut progress = false;
        for i in 0..crossings.len() {
            if dirs[i].is_some() {
                continue;
            }
            let [_, b, _, d] = crossings[i];
            if tails.contains(&b) || heads.contains(&d) {
                dirs[i] = Some(true);
                progress = true;
            } else if heads.contains(&b) || tails.contains(&d) {
                dirs[i] = Some(false);
                progress = true;
            }
        }
        if !progress {
            let first = dirs.iter().position(Option::is_none).unwrap();
            dirs[first] = Some(true);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_text() -> &'static str {
        "component 1 framing=0 arcs=1,2,3,4,5,6\nx 1 4 2 5\nx 3 6 4 1\nx 5 2 6 3\n"
    }

    #[test]
    fn trefoil_writhe() {
        let d = parse_diagram(trefoil_text()).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.mirror().writhe(), 3);
    }

    #[test]
    fn braid_closures() {
        let hopf = Diagram::from_braid(2, &[1, 1]);
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.writhe(), 2);
        let tref = Diagram::from_braid(2, &[1, 1, 1]);
        assert_eq!(tref.component_count(), 1);
        assert_eq!(tref.writhe(), 3);
        let unlink = Diagram::from_braid(3, &[1, -1]);
        assert_eq!(unlink.component_count(), 3);
        assert_eq!(unlink.loop_count(), 1);
        let borromean = Diagram::from_braid(3, &[1, -2, 1, -2, 1, -2]);
        assert_eq!(borromean.component_count(), 3);
        assert_eq!(borromean.writhe(), 0);
    }

    #[test]
    fn blow_up_adds_split_unknots() {
        let d = Diagram::empty().blow_up(1);
        assert_eq!(d.components(), &[Component::new(1, 1)]);
        let t = Diagram::from_braid(2, &[1, 1, 1]).blow_up(-1);
        assert_eq!(t.component_count(), 2);
        assert_eq!(linking_matrix(&t).rows(), vec![vec![0, 0], vec![0, -1]]);
        assert_eq!(t.blow_up(1).blow_up(1).component_count(), 4);
    }

    #[test]
    fn mirror_is_an_involution() {
        for d in [Diagram::unknot(2), Diagram::from_braid(3, &[1, -2, 1, 1, -2]), Diagram::from_braid(2, &[1, 1, 1])] {
            assert_eq!(d.mirror().mirror(), d);
            assert_eq!(d.mirror().writhe(), -d.writhe());
        }
        assert_eq!(Diagram::unknot(0).mirror(), Diagram::unknot(0));
    }

    #[test]
    fn kinks_realize_framing() {
        for f in -3..=3 {
            let d = Diagram::unknot(f).with_blackboard_framing();
            assert_eq!(d.self_writhe(0), f);
            assert_eq!(d.crossing_count(), f.unsigned_abs() as usize);
        }
        let t = Diagram::from_braid(3, &[1, 1, 1, 2, 2]).with_framings(&[-2, 1]);
        let bb = t.with_blackboard_framing();
        assert_eq!(bb.self_writhe(0), -2);
        assert_eq!(bb.self_writhe(1), 1);
        assert_eq!(bb.crossing_count(), 5 + 5 + 1);
        assert_eq!(linking_matrix(&bb), linking_matrix(&t));
    }

    #[test]
    fn validation_errors() {
        // arc 7 appears once
        let bad = "component 1 framing=0 arcs=1,2,3,4,5,6\nx 1 4 2 5\nx 3 6 4 1\nx 5 2 6 7\n";
        assert!(matches!(parse_diagram(bad), Err(Error::Validation(_))));
        let dotted = "component 1 framing=2 dotted arcs=loop\n";
        assert!(matches!(parse_diagram(dotted), Err(Error::Validation(_))));
        let order = "component 1 framing=0 arcs=1,2,3,4,5,6\nx 2 4 1 5\nx 3 6 4 1\nx 5 2 6 3\n";
        assert!(matches!(parse_diagram(order), Err(Error::Validation(_))));
    }

    #[test]
    fn smoothing_and_switching() {
        let tref = Diagram::from_braid(2, &[1, 1, 1]);
        let hopf = tref.oriented_smoothing(0);
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.crossing_count(), 2);
        assert_eq!(linking_matrix(&hopf).get(0, 1).abs(), 1);
        let sw = tref.switch_crossing(1);
        assert_eq!(sw.writhe(), 1);
        // smoothing the Hopf clasp gives one unknot with a single crossing
        let u = hopf.oriented_smoothing(0);
        assert_eq!((u.component_count(), u.crossing_count()), (1, 1));
        // a kink smooths to a split circle
        let kink = Diagram::unknot(1).with_blackboard_framing();
        let two = kink.oriented_smoothing(0);
        assert_eq!((two.component_count(), two.crossing_count(), two.loop_count()), (2, 0, 2));
    }

    #[test]
    fn sublink_drops_components() {
        let chain = Diagram::from_braid(3, &[1, 1, 2, 2]).with_framings(&[1, 2, 3]);
        let ends = chain.sublink(&[0, 2]);
        assert_eq!(ends.crossing_count(), 0);
        assert_eq!(ends.loop_count(), 2);
        assert_eq!(ends.components()[1].framing, 3);
        let first_two = chain.sublink(&[0, 1]);
        assert_eq!(first_two.crossing_count(), 2);
        assert_eq!(linking_matrix(&first_two).rows(), vec![vec![1, 1], vec![1, 2]]);
    }
}
