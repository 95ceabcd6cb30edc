use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::group::{FiniteGroup, GroupError, SubgroupLattice};
use crate::linalg::IntMatrix;

/// The table of marks of the ambient group: entry (H, K) counts the
/// K-fixed points of G/H. Rows and columns run over subgroup conjugacy
/// classes ordered by subgroup order, which makes the matrix lower
/// triangular with positive diagonal.
#[derive(Debug, Clone, Serialize)]
pub struct TableOfMarks {
    pub matrix: IntMatrix,
}

impl TableOfMarks {
    pub fn compute(group: &FiniteGroup) -> Result<Self, GroupError> {
        let lat = group.subgroups()?;
        let classes = lat.classes();
        let n = classes.len();
        let matrix = IntMatrix::from_fn(n, n, |hi, ki| {
            let h = &lat.subgroup(classes[hi].representative).elements;
            let k = &lat.subgroup(classes[ki].representative).elements;
            BigInt::from(count_fixed_cosets(group, h, k))
        });
        Ok(TableOfMarks { matrix })
    }
}

/// `|(G/H)^K|`: cosets gH with g^{-1} K g inside H.
fn count_fixed_cosets(group: &FiniteGroup, h: &[usize], k: &[usize]) -> usize {
    let mut count = 0;
    for g in group.elements() {
        let ginv = group.inv(g);
        if k.iter().all(|&x| {
            let moved = group.mul(group.mul(ginv, x), g);
            h.binary_search(&moved).is_ok()
        }) {
            count += 1;
        }
    }
    count / h.len()
}

/// Burnside ring data for every subgroup of the ambient group: bases are
/// H-conjugacy classes of subgroups of H, with restriction and product
/// structure from double cosets.
pub struct BurnsideRing {
    group: FiniteGroup,
    tables: Vec<BurnsideTable>,
}

#[derive(Debug, Clone)]
pub struct BurnsideTable {
    /// Lattice ids of the class representatives (least id per H-class),
    /// ascending; this is the basis order of A(H).
    pub class_reps: Vec<usize>,
    /// Lattice id of any subgroup of H -> basis index of its H-class.
    class_of: BTreeMap<usize, usize>,
}

impl BurnsideTable {
    pub fn rank(&self) -> usize {
        self.class_reps.len()
    }

    pub fn basis_index(&self, lattice_id: usize) -> usize {
        self.class_of[&lattice_id]
    }
}

impl std::fmt::Debug for BurnsideRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BurnsideRing(order {}, {} subgroup tables)",
            self.group.order(),
            self.tables.len()
        )
    }
}

impl BurnsideRing {
    pub fn new(group: &FiniteGroup) -> Result<Self, GroupError> {
        let lat = group.subgroups()?;
        let mut tables = Vec::with_capacity(lat.subgroups().len());
        for h in lat.subgroups() {
            let inside = lat.contained_in(h.id);
            let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
            let mut class_reps = Vec::new();
            for &k in &inside {
                if class_of.contains_key(&k) {
                    continue;
                }
                let idx = class_reps.len();
                class_reps.push(k);
                // Orbit of k under conjugation by elements of H.
                for &g in &h.elements {
                    class_of.entry(lat.conjugate_id(k, g)).or_insert(idx);
                }
            }
            tables.push(BurnsideTable { class_reps, class_of });
        }
        Ok(BurnsideRing {
            group: group.clone(),
            tables,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn table(&self, subgroup_id: usize) -> &BurnsideTable {
        &self.tables[subgroup_id]
    }

    pub fn rank(&self, subgroup_id: usize) -> usize {
        self.tables[subgroup_id].rank()
    }

    fn lat(&self) -> &SubgroupLattice {
        self.group.subgroups().expect("lattice already enumerated")
    }

    /// Decomposition of H/L as a K-set (K, L <= H): basis vector over
    /// A(K), one summand `K/(K meet hLh^{-1})` per double coset K h L.
    fn coset_space_restriction(&self, k_id: usize, l_id: usize, h_id: usize) -> Vec<BigInt> {
        let lat = self.lat();
        let k_table = &self.tables[k_id];
        let mut out = vec![BigInt::from(0); k_table.rank()];
        let h_elems = &lat.subgroup(h_id).elements;
        let k_elems = &lat.subgroup(k_id).elements;
        let l_elems = &lat.subgroup(l_id).elements;
        let g = &self.group;
        let mut seen: BTreeMap<usize, bool> = BTreeMap::new();
        for &h in h_elems {
            if seen.contains_key(&h) {
                continue;
            }
            for &a in k_elems {
                for &b in l_elems {
                    seen.insert(g.mul(g.mul(a, h), b), true);
                }
            }
            // Stabilizer class: K meet h L h^{-1}.
            let conj_l: Vec<usize> = l_elems.iter().map(|&x| g.conjugate(h, x)).collect();
            let inter: Vec<usize> = k_elems
                .iter()
                .copied()
                .filter(|x| conj_l.contains(x))
                .collect();
            let stab_id = lat.id_of(&inter).expect("intersection is a subgroup");
            out[k_table.basis_index(stab_id)] += 1;
        }
        out
    }

    /// Restriction matrix `A(H) -> A(K)`, K <= H.
    pub fn restriction_matrix(&self, h_id: usize, k_id: usize) -> IntMatrix {
        let h_table = &self.tables[h_id];
        let k_rank = self.tables[k_id].rank();
        let cols: Vec<Vec<BigInt>> = h_table
            .class_reps
            .iter()
            .map(|&l| self.coset_space_restriction(k_id, l, h_id))
            .collect();
        IntMatrix::from_fn(k_rank, h_table.rank(), |i, j| cols[j][i].clone())
    }

    /// Induction matrix `A(K) -> A(H)`: `[K/L] -> [H/L]`.
    pub fn induction_matrix(&self, h_id: usize, k_id: usize) -> IntMatrix {
        let h_table = &self.tables[h_id];
        let k_table = &self.tables[k_id];
        IntMatrix::from_fn(h_table.rank(), k_table.rank(), |i, j| {
            let l = k_table.class_reps[j];
            BigInt::from(u8::from(h_table.basis_index(l) == i))
        })
    }

    /// Conjugation matrix `A(H) -> A(gHg^{-1})`.
    pub fn conjugation_matrix(&self, h_id: usize, g_elt: usize, target_id: usize) -> IntMatrix {
        let lat = self.lat();
        let h_table = &self.tables[h_id];
        let t_table = &self.tables[target_id];
        IntMatrix::from_fn(t_table.rank(), h_table.rank(), |i, j| {
            let moved = lat.conjugate_id(h_table.class_reps[j], g_elt);
            BigInt::from(u8::from(t_table.basis_index(moved) == i))
        })
    }

    /// Product decomposition `[H/K] * [H/L]` in A(H) via double cosets.
    pub fn product_decomposition(&self, h_id: usize, i: usize, j: usize) -> Vec<BigInt> {
        let h_table = &self.tables[h_id];
        let k = h_table.class_reps[i];
        let l = h_table.class_reps[j];
        // H/K x H/L decomposes with one orbit per double coset K h L,
        // stabilizer K meet hLh^{-1}; this is the same computation as
        // restricting H/L to K and inducing back up point-by-point.
        let lat = self.lat();
        let mut out = vec![BigInt::from(0); h_table.rank()];
        let g = &self.group;
        let h_elems = &lat.subgroup(h_id).elements;
        let k_elems = &lat.subgroup(k).elements;
        let l_elems = &lat.subgroup(l).elements;
        let mut seen = std::collections::BTreeSet::new();
        for &h in h_elems {
            if seen.contains(&h) {
                continue;
            }
            for &a in k_elems {
                for &b in l_elems {
                    seen.insert(g.mul(g.mul(a, h), b));
                }
            }
            let conj_l: Vec<usize> = l_elems.iter().map(|&x| g.conjugate(h, x)).collect();
            let inter: Vec<usize> = k_elems
                .iter()
                .copied()
                .filter(|x| conj_l.contains(x))
                .collect();
            let stab_id = lat.id_of(&inter).expect("intersection is a subgroup");
            out[h_table.basis_index(stab_id)] += 1;
        }
        out
    }

    /// Index of the unit `[H/H]`.
    pub fn unit_index(&self, h_id: usize) -> usize {
        self.tables[h_id].basis_index(h_id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn marks_of_c2() {
        let g = corpus::cyclic(2);
        let marks = TableOfMarks::compute(&g).unwrap();
        assert_eq!(
            marks.matrix,
            IntMatrix::from_rows_i64(&[vec![2, 0], vec![1, 1]])
        );
    }

    #[test]
    fn marks_of_trivial_group() {
        let g = corpus::cyclic(1);
        let marks = TableOfMarks::compute(&g).unwrap();
        assert_eq!(marks.matrix, IntMatrix::from_rows_i64(&[vec![1]]));
    }

    #[test]
    fn marks_of_s3() {
        let g = corpus::symmetric(3);
        let marks = TableOfMarks::compute(&g).unwrap();
        let m = &marks.matrix;
        assert_eq!(m.rows(), 4);
        // First column: indices [G:H] = 6, 3, 2, 1.
        let first: Vec<String> = (0..4).map(|i| m.get(i, 0).to_string()).collect();
        assert_eq!(first, vec!["6", "3", "2", "1"]);
        // Lower triangular with positive diagonal, nonsingular.
        for i in 0..4 {
            assert!(m.get(i, i) > &BigInt::from(0));
            for j in i + 1..4 {
                assert_eq!(m.get(i, j), &BigInt::from(0));
            }
        }
        assert_ne!(m.determinant(), BigInt::from(0));
    }

    #[test]
    fn burnside_ranks() {
        let g = corpus::symmetric(3);
        let b = BurnsideRing::new(&g).unwrap();
        // A(1) = Z, A(C2) = Z^2, A(C3) = Z^2, A(S3) = Z^4.
        let lat = g.subgroups().unwrap();
        assert_eq!(b.rank(lat.trivial_id()), 1);
        assert_eq!(b.rank(lat.full_id()), 4);
        let c2 = lat.subgroups().iter().find(|s| s.order == 2).unwrap().id;
        assert_eq!(b.rank(c2), 2);
    }

    #[test]
    fn restriction_counts_cosets() {
        // res^{S3}_{C2}[S3/C3]: C2 acts freely on the 2-point set S3/C3,
        // wait -- |S3/C3| = 2 and C2 moves the two cosets... the double
        // cosets C2\S3/C3 give one free C2-orbit: [C2/1].
        let g = corpus::symmetric(3);
        let b = BurnsideRing::new(&g).unwrap();
        let lat = g.subgroups().unwrap();
        let c2 = lat.subgroups().iter().find(|s| s.order == 2).unwrap().id;
        let c3 = lat.subgroups().iter().find(|s| s.order == 3).unwrap().id;
        let full = lat.full_id();
        let res = b.restriction_matrix(full, c2);
        let h_table = b.table(full);
        let col = h_table.basis_index(c3);
        let k_table = b.table(c2);
        // Expect exactly [C2/1].
        assert_eq!(
            res.get(k_table.basis_index(lat.trivial_id()), col),
            &BigInt::from(1)
        );
        assert_eq!(res.get(k_table.basis_index(c2), col), &BigInt::from(0));
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let g = corpus::quaternion8();
        let b = BurnsideRing::new(&g).unwrap();
        let lat = g.subgroups().unwrap();
        for h in 0..lat.subgroups().len() {
            let unit = b.unit_index(h);
            for i in 0..b.rank(h) {
                let dec = b.product_decomposition(h, unit, i);
                for (k, v) in dec.iter().enumerate() {
                    assert_eq!(*v, BigInt::from(u8::from(k == i)));
                }
            }
        }
    }

    #[test]
    fn product_matches_mark_homomorphism() {
        // Marks turn products into pointwise products: m(x*y) = m(x).m(y)
        // componentwise, where m is the row of fixed-point counts. Checked
        // on A(S3) basis pairs.
        let g = corpus::symmetric(3);
        let b = BurnsideRing::new(&g).unwrap();
        let lat = g.subgroups().unwrap();
        let full = lat.full_id();
        let table = b.table(full);
        let rank = table.rank();
        // marks[i][c] = |(S3/K_i)^{K_c}|
        let mark = |i: usize, c: usize| -> i64 {
            let h = &lat.subgroup(table.class_reps[i]).elements;
            let k = &lat.subgroup(table.class_reps[c]).elements;
            count_fixed_cosets(&g, h, k) as i64
        };
        for i in 0..rank {
            for j in 0..rank {
                let dec = b.product_decomposition(full, i, j);
                for c in 0..rank {
                    let lhs: BigInt = (0..rank)
                        .map(|t| dec[t].clone() * BigInt::from(mark(t, c)))
                        .sum();
                    assert_eq!(lhs, BigInt::from(mark(i, c) * mark(j, c)));
                }
            }
        }
    }
}
