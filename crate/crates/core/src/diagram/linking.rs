//! Linking matrices and their exact inertia.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Diagram;

/// Symmetric integer matrix: framings on the diagonal, pairwise linking
/// numbers off it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![0; dim * dim] }
    }

    /// Panics if `rows` is not square and symmetric.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "linking matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * dim + j] = v;
            }
        }
        for i in 0..dim {
            for j in 0..i {
                assert_eq!(m.get(i, j), m.get(j, i), "linking matrix must be symmetric");
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.dim + j] = v;
        self.entries[j * self.dim + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[i64]>::to_vec).collect()
    }

    /// Principal submatrix on the given indices.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        let mut m = Self::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.entries[a * indices.len() + b] = self.get(i, j);
            }
        }
        m
    }
}

/// Framings and linking numbers of all components, in component order.
pub fn linking_matrix(d: &Diagram) -> LinkingMatrix {
    let n = d.component_count();
    let mut m = LinkingMatrix::zeros(n);
    let mut twice = vec![0i64; n * n];
    for ((u, o), x) in d.crossing_components().into_iter().zip(d.crossings()) {
        if u != o {
            twice[u * n + o] += x.sign();
            twice[o * n + u] += x.sign();
        }
    }
    for i in 0..n {
        m.set_sym(i, i, d.components()[i].framing);
        for j in 0..i {
            m.set_sym(i, j, twice[i * n + j] / 2);
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Counts of positive, negative and zero eigenvalues, computed exactly by
/// symmetric Gaussian elimination over the rationals.
pub fn signature_nullity(m: &LinkingMatrix) -> Inertia {
    let n = m.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from(m.get(i, j)))).collect())
        .collect();
    let mut inertia = Inertia::default();
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        if let Some(p) = active.iter().copied().find(|&i| !a[i][i].is_zero()) {
            let pivot = a[p][p].clone();
            if pivot.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            active.retain(|&i| i != p);
            for &i in &active {
                let f = &a[i][p] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for &j in &active {
                    let delta = &f * &a[p][j];
                    a[i][j] -= delta;
                }
            }
            continue;
        }
        // zero diagonal: either the row is zero, or a 2x2 hyperbolic block
        let i = active[0];
        match active.iter().copied().find(|&j| j != i && !a[i][j].is_zero()) {
            None => {
                inertia.nullity += 1;
                active.retain(|&k| k != i);
            }
            Some(j) => {
                // [[0, b], [b, 0]] has one positive and one negative eigenvalue
                inertia.positive += 1;
                inertia.negative += 1;
                let b = a[i][j].clone();
                active.retain(|&k| k != i && k != j);
                // Schur complement of the block [[0,b],[b,0]]:
                // M' = M - (r_i, r_j) B^{-1} (r_i, r_j)^T with B^{-1} = [[0,1/b],[1/b,0]]
                for &k in &active {
                    for &l in &active {
                        let delta = (&a[k][i] * &a[j][l] + &a[k][j] * &a[i][l]) / &b;
                        a[k][l] -= delta;
                    }
                }
            }
        }
    }
    inertia
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_inertias() {
        let cases: &[(&[&[i64]], (usize, usize, usize))] = &[
            (&[], (0, 0, 0)),
            (&[&[1]], (1, 0, 0)),
            (&[&[0]], (0, 0, 1)),
            (&[&[0, 1], &[1, 0]], (1, 1, 0)),
            (&[&[1, 2], &[2, 1]], (1, 1, 0)),
            (&[&[2, 1], &[1, 2]], (2, 0, 0)),
            (&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 1]], (2, 1, 0)),
            (&[&[0, 0, 0], &[0, 0, 2], &[0, 2, 0]], (1, 1, 1)),
        ];
        for (rows, (p, q, z)) in cases {
            let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
            let got = signature_nullity(&LinkingMatrix::from_rows(&rows));
            assert_eq!((got.positive, got.negative, got.nullity), (*p, *q, *z), "{rows:?}");
        }
    }

    #[test]
    fn hopf_linking_number() {
        let hopf = Diagram::from_braid(2, &[1, 1]).with_framings(&[3, -1]);
        assert_eq!(linking_matrix(&hopf).rows(), vec![vec![3, 1], vec![1, -1]]);
        assert_eq!(linking_matrix(&hopf.mirror()).rows(), vec![vec![-3, -1], vec![-1, 1]]);
    }
}
