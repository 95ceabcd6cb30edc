use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Incremental integer lattice accumulator: a column-style Hermite basis of
/// the span of everything inserted so far.
///
/// Columns are kept sparse and indexed by their pivot (topmost nonzero) row,
/// which keeps insertion cheap for the long streams of short columns the
/// chain-complex code produces.
#[derive(Debug, Clone)]
pub struct LatticeBasis {
    dim: usize,
    /// pivot row -> column, sorted by pivot; each column's leading entry is
    /// positive and sits strictly below all earlier pivots' rows.
    cols: std::collections::BTreeMap<usize, Vec<(usize, BigInt)>>,
}

impl LatticeBasis {
    pub fn new(dim: usize) -> Self {
        LatticeBasis {
            dim,
            cols: Default::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Inserts the span of `col`; returns true when the lattice grew.
    pub fn insert(&mut self, col: &[(usize, BigInt)]) -> bool {
        let mut v: Vec<(usize, BigInt)> = col
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .cloned()
            .collect();
        v.sort_by_key(|(i, _)| *i);
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0), "duplicate row index");
        let mut grew = false;
        loop {
            let Some(&(row, _)) = v.first() else { return grew };
            assert!(row < self.dim, "row index out of range");
            match self.cols.get(&row) {
                None => {
                    if v[0].1.is_negative() {
                        for (_, c) in &mut v {
                            *c = -std::mem::take(c);
                        }
                    }
                    self.cols.insert(row, v);
                    return true;
                }
                Some(pivot) => {
                    let a = &pivot[0].1;
                    let b = &v[0].1;
                    if (b % a).is_zero() {
                        let q = b / a;
                        v = sub_scaled(&v, pivot, &q);
                    } else {
                        // gcd step: replace pivot with the gcd combination,
                        // keep reducing the remainder.
                        let e = a.extended_gcd(b);
                        // e.gcd = e.x * a + e.y * b
                        let pivot = pivot.clone();
                        let combined = add_scaled(
                            &scale(&pivot, &e.x),
                            &scale(&v, &e.y),
                        );
                        let qa = a / &e.gcd;
                        let qb = b / &e.gcd;
                        // New remainder candidate: (b/g)*pivot - (a/g)*v has
                        // zero in this row.
                        let rem = sub_scaled(&scale(&pivot, &qb), &scale(&v, &qa), &BigInt::from(1));
                        self.cols.insert(row, combined);
                        grew = true;
                        v = rem;
                    }
                }
            }
        }
    }

    /// Reduces `col` modulo the lattice; returns the (possibly nonzero)
    /// remainder with no row at an existing pivot position... only exact
    /// eliminations are applied, so a zero result means membership.
    pub fn contains(&self, col: &[(usize, BigInt)]) -> bool {
        let mut v: Vec<(usize, BigInt)> = col
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .cloned()
            .collect();
        v.sort_by_key(|(i, _)| *i);
        while let Some(&(row, _)) = v.first() {
            match self.cols.get(&row) {
                None => return false,
                Some(pivot) => {
                    let a = &pivot[0].1;
                    let b = &v[0].1;
                    if !(b % a).is_zero() {
                        return false;
                    }
                    let q = b / a;
                    v = sub_scaled(&v, pivot, &q);
                }
            }
        }
        true
    }

    /// Dense basis matrix (dim x rank), columns ordered by pivot row.
    pub fn basis_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.dim, self.cols.len());
        for (j, col) in self.cols.values().enumerate() {
            for (i, c) in col {
                m.set(*i, j, c.clone());
            }
        }
        m
    }
}

fn scale(v: &[(usize, BigInt)], s: &BigInt) -> Vec<(usize, BigInt)> {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, c)| (*i, c * s)).collect()
}

/// a - q * b, both sorted sparse.
fn sub_scaled(
    a: &[(usize, BigInt)],
    b: &[(usize, BigInt)],
    q: &BigInt,
) -> Vec<(usize, BigInt)> {
    merge(a, b, |x, y| x - q * y)
}

fn add_scaled(a: &[(usize, BigInt)], b: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    merge(a, b, |x, y| x + y)
}

fn merge(
    a: &[(usize, BigInt)],
    b: &[(usize, BigInt)],
    f: impl Fn(&BigInt, &BigInt) -> BigInt,
) -> Vec<(usize, BigInt)> {
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let val;
        let row;
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            row = a[i].0;
            val = f(&a[i].1, &zero);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            row = b[j].0;
            val = f(&zero, &b[j].1);
            j += 1;
        } else {
            row = a[i].0;
            val = f(&a[i].1, &b[j].1);
            i += 1;
            j += 1;
        }
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cokernel_of, FgAbelianGroup};

    fn sv(entries: &[(usize, i64)]) -> Vec<(usize, BigInt)> {
        entries.iter().map(|(i, c)| (*i, BigInt::from(*c))).collect()
    }

    #[test]
    fn accumulates_spans() {
        let mut l = LatticeBasis::new(3);
        assert!(l.insert(&sv(&[(0, 2), (1, 2)])));
        assert!(l.insert(&sv(&[(1, 3)])));
        assert!(!l.insert(&sv(&[(0, 2), (1, 5)])));
        assert!(l.contains(&sv(&[(0, 2), (1, 2)])));
        assert!(l.contains(&sv(&[(0, 4), (1, 1)])));
        assert!(!l.contains(&sv(&[(0, 1)])));
        assert!(!l.contains(&sv(&[(2, 1)])));
        assert_eq!(l.rank(), 2);
        // Z^3 / <(2,2,0),(0,3,0)> has cokernel Z + Z/6.
        let q = cokernel_of(&l.basis_matrix());
        assert_eq!(q, FgAbelianGroup::new(1, vec![BigInt::from(6)]));
    }

    #[test]
    fn gcd_combination() {
        let mut l = LatticeBasis::new(1);
        l.insert(&sv(&[(0, 6)]));
        l.insert(&sv(&[(0, 10)]));
        assert!(l.contains(&sv(&[(0, 2)])));
        assert!(!l.contains(&sv(&[(0, 1)])));
    }

    #[test]
    fn matches_dense_route_on_random_input() {
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..30 {
            let dim = (next() % 5 + 1) as usize;
            let ncols = (next() % 8) as usize;
            let mut l = LatticeBasis::new(dim);
            let mut dense = IntMatrix::zero(dim, ncols);
            for j in 0..ncols {
                let mut col = Vec::new();
                for i in 0..dim {
                    let c = (next() % 9) as i64 - 4;
                    if c != 0 {
                        col.push((i, BigInt::from(c)));
                        dense.set(i, j, BigInt::from(c));
                    }
                }
                l.insert(&col);
            }
            assert_eq!(cokernel_of(&l.basis_matrix()), cokernel_of(&dense));
        }
    }
}
