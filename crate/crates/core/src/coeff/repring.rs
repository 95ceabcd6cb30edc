use num_bigint::BigInt;

use crate::group::FiniteGroup;
use crate::linalg::IntMatrix;

use super::chartab::CharacterTable;
use super::cyclotomic::Cyclotomic;

/// A class function on one enumerated subgroup, stored by that subgroup's
/// class index.
pub type ClassFunction = Vec<Cyclotomic>;

/// Character data for one subgroup, indexed in ambient group elements.
#[derive(Debug, Clone)]
pub struct SubgroupTable {
    /// Sorted ambient elements of the subgroup.
    pub elements: Vec<usize>,
    /// Class representatives as ambient elements.
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// Ambient element -> class index (usize::MAX outside the subgroup).
    class_of: Vec<usize>,
    pub degrees: Vec<usize>,
    /// Irreducibles as rows over the classes.
    pub irreducibles: Vec<ClassFunction>,
}

impl SubgroupTable {
    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn irreducible_count(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn class_of(&self, ambient_element: usize) -> usize {
        let c = self.class_of[ambient_element];
        assert!(c != usize::MAX, "element outside subgroup");
        c
    }

    pub fn contains(&self, ambient_element: usize) -> bool {
        self.class_of[ambient_element] != usize::MAX
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The complex representation ring of every subgroup of a fixed ambient
/// group, with exact character tables throughout. All cyclotomic values
/// share one conductor: the exponent of the ambient group.
pub struct RepRing {
    group: FiniteGroup,
    conductor: usize,
    tables: Vec<SubgroupTable>,
}

impl std::fmt::Debug for RepRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RepRing(order {}, {} subgroup tables, conductor {})",
            self.group.order(),
            self.tables.len(),
            self.conductor
        )
    }
}

impl RepRing {
    /// Computes character tables for every subgroup in the lattice.
    pub fn new(group: &FiniteGroup) -> Result<Self, crate::group::GroupError> {
        let lat = group.subgroups()?;
        let conductor = group.exponent();
        let mut tables = Vec::with_capacity(lat.subgroups().len());
        for sub in lat.subgroups() {
            let (as_group, embed) = group.subgroup_as_group(&sub.elements)?;
            let t = CharacterTable::compute(&as_group, conductor);
            let mut class_of = vec![usize::MAX; group.order()];
            for local in 0..as_group.order() {
                class_of[embed[local]] = t.classes.class_of[local];
            }
            tables.push(SubgroupTable {
                elements: sub.elements.clone(),
                class_reps: t.classes.reps.iter().map(|&r| embed[r]).collect(),
                class_sizes: t.classes.sizes.clone(),
                class_of,
                degrees: t.degrees.clone(),
                irreducibles: t.values.clone(),
            });
        }
        Ok(RepRing {
            group: group.clone(),
            conductor,
            tables,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn table(&self, subgroup_id: usize) -> &SubgroupTable {
        &self.tables[subgroup_id]
    }

    pub fn rank(&self, subgroup_id: usize) -> usize {
        self.tables[subgroup_id].irreducible_count()
    }

    /// `<a, b>` over the subgroup; exact and rational by construction.
    pub fn inner_product(&self, subgroup_id: usize, a: &[Cyclotomic], b: &[Cyclotomic]) -> i128 {
        let t = &self.tables[subgroup_id];
        let mut acc = Cyclotomic::zero(self.conductor);
        for c in 0..t.class_count() {
            acc = acc.add(&a[c].mul(&b[c].conj()).scale(t.class_sizes[c] as i128));
        }
        acc.div_exact(t.order() as i128)
            .expect("inner product not divisible by subgroup order")
            .as_integer()
            .expect("inner product must be rational")
    }

    /// Restriction of a class function on H to K (value pullback). K must
    /// be contained in H.
    pub fn restrict_class_function(
        &self,
        h_id: usize,
        k_id: usize,
        values: &[Cyclotomic],
    ) -> ClassFunction {
        let h = &self.tables[h_id];
        let k = &self.tables[k_id];
        k.class_reps
            .iter()
            .map(|&rep| values[h.class_of(rep)].clone())
            .collect()
    }

    /// Induction of a class function from K to H by the standard formula
    /// `(ind f)(h) = (1/|K|) sum over x in H with x^{-1} h x in K of
    /// f(x^{-1} h x)`.
    pub fn induce_class_function(
        &self,
        h_id: usize,
        k_id: usize,
        values: &[Cyclotomic],
    ) -> ClassFunction {
        let h = &self.tables[h_id];
        let k = &self.tables[k_id];
        let g = &self.group;
        h.class_reps
            .iter()
            .map(|&rep| {
                let mut acc = Cyclotomic::zero(self.conductor);
                for &x in &h.elements {
                    let conj = g.mul(g.mul(g.inv(x), rep), x);
                    if k.contains(conj) {
                        acc = acc.add(&values[k.class_of(conj)]);
                    }
                }
                acc.div_exact(k.order() as i128)
                    .expect("induced character formula must divide exactly")
            })
            .collect()
    }

    /// Conjugation transport of a class function on H to one on gHg^{-1}:
    /// the transported function sends y to f(g^{-1} y g).
    pub fn conjugate_class_function(
        &self,
        h_id: usize,
        g_elt: usize,
        target_id: usize,
        values: &[Cyclotomic],
    ) -> ClassFunction {
        let h = &self.tables[h_id];
        let t = &self.tables[target_id];
        let g = &self.group;
        let ginv = g.inv(g_elt);
        t.class_reps
            .iter()
            .map(|&y| values[h.class_of(g.conjugate(ginv, y))].clone())
            .collect()
    }

    /// Decomposition of a class function on H into irreducible
    /// multiplicities.
    pub fn decompose(&self, h_id: usize, values: &[Cyclotomic]) -> Vec<i128> {
        let t = &self.tables[h_id];
        (0..t.irreducible_count())
            .map(|i| self.inner_product(h_id, values, &t.irreducibles[i]))
            .collect()
    }

    /// Restriction matrix `R(H) -> R(K)` on irreducible bases, K <= H.
    pub fn restriction_matrix(&self, h_id: usize, k_id: usize) -> IntMatrix {
        let h = &self.tables[h_id];
        let k = &self.tables[k_id];
        IntMatrix::from_fn(k.irreducible_count(), h.irreducible_count(), |i, j| {
            let res = self.restrict_class_function(h_id, k_id, &h.irreducibles[j]);
            BigInt::from(self.inner_product(k_id, &res, &k.irreducibles[i]))
        })
    }

    /// Induction matrix `R(K) -> R(H)` on irreducible bases, K <= H,
    /// computed through the induced-character formula.
    pub fn induction_matrix(&self, h_id: usize, k_id: usize) -> IntMatrix {
        let h = &self.tables[h_id];
        let k = &self.tables[k_id];
        let induced: Vec<ClassFunction> = (0..k.irreducible_count())
            .map(|j| self.induce_class_function(h_id, k_id, &k.irreducibles[j]))
            .collect();
        IntMatrix::from_fn(h.irreducible_count(), k.irreducible_count(), |i, j| {
            BigInt::from(self.inner_product(h_id, &induced[j], &h.irreducibles[i]))
        })
    }

    /// Conjugation matrix `R(H) -> R(gHg^{-1})`: a permutation of the
    /// irreducible bases.
    pub fn conjugation_matrix(&self, h_id: usize, g_elt: usize, target_id: usize) -> IntMatrix {
        let h = &self.tables[h_id];
        let t = &self.tables[target_id];
        assert_eq!(h.irreducible_count(), t.irreducible_count());
        IntMatrix::from_fn(
            t.irreducible_count(),
            h.irreducible_count(),
            |i, j| {
                let moved = self.conjugate_class_function(h_id, g_elt, target_id, &h.irreducibles[j]);
                let hit = moved
                    .iter()
                    .zip(&t.irreducibles[i])
                    .all(|(a, b)| a.equals(b));
                BigInt::from(u8::from(hit))
            },
        )
    }

    /// Multiplication constants at H: the decomposition of
    /// `chi_i * chi_j` into irreducibles.
    pub fn product_decomposition(&self, h_id: usize, i: usize, j: usize) -> Vec<i128> {
        let t = &self.tables[h_id];
        let prod: ClassFunction = t.irreducibles[i]
            .iter()
            .zip(&t.irreducibles[j])
            .map(|(a, b)| a.mul(b))
            .collect();
        self.decompose(h_id, &prod)
    }

    /// Index of the trivial character at H.
    pub fn unit_index(&self, h_id: usize) -> usize {
        let t = &self.tables[h_id];
        (0..t.irreducible_count())
            .find(|&i| t.irreducibles[i].iter().all(|v| v.as_integer() == Some(1)))
            .expect("trivial character exists")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn s3_ring() -> (FiniteGroup, RepRing) {
        let g = corpus::symmetric(3);
        let r = RepRing::new(&g).unwrap();
        (g, r)
    }

    #[test]
    fn ranks_are_class_counts() {
        let (g, r) = s3_ring();
        let lat = g.subgroups().unwrap();
        let ranks: Vec<usize> = (0..lat.subgroups().len()).map(|i| r.rank(i)).collect();
        // Subgroups ordered: 1, C2 x3, C3, S3 with 1, 2, 2, 2, 3, 3 irreducibles.
        assert_eq!(ranks, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn induction_from_c3_gives_standard_character() {
        // ind_{C3}^{S3} of a nontrivial character is the 2-dimensional
        // irreducible: computed by the induced-character formula and
        // cross-checked against the known value (2, -1, 0).
        let (g, r) = s3_ring();
        let lat = g.subgroups().unwrap();
        let c3 = lat.subgroups().iter().find(|s| s.order == 3).unwrap().id;
        let full = lat.full_id();
        let m = r.induction_matrix(full, c3);
        // Columns: three characters of C3; the nontrivial ones (indices
        // past the unit) induce to exactly the 2-dim irreducible.
        let unit = r.unit_index(c3);
        let two_dim_index = r
            .table(full)
            .degrees
            .iter()
            .position(|&d| d == 2)
            .unwrap();
        for j in 0..3 {
            if j == unit {
                continue;
            }
            for i in 0..3 {
                let expected = i128::from(i == two_dim_index);
                assert_eq!(m.get(i, j), &BigInt::from(expected));
            }
        }
    }

    #[test]
    fn restriction_of_standard_to_c2() {
        // res of the 2-dim irreducible to C2 is trivial + sign.
        let (g, r) = s3_ring();
        let lat = g.subgroups().unwrap();
        let c2 = lat.subgroups().iter().find(|s| s.order == 2).unwrap().id;
        let full = lat.full_id();
        let m = r.restriction_matrix(full, c2);
        let two_dim = r.table(full).degrees.iter().position(|&d| d == 2).unwrap();
        assert_eq!(m.get(0, two_dim), &BigInt::from(1));
        assert_eq!(m.get(1, two_dim), &BigInt::from(1));
    }

    #[test]
    fn frobenius_reciprocity_exhaustive_small() {
        // <ind a, b>_H = <a, res b>_K for all irreducibles over all
        // subgroup pairs of S3 and Q8.
        for g in [corpus::symmetric(3), corpus::quaternion8()] {
            let r = RepRing::new(&g).unwrap();
            let lat = g.subgroups().unwrap();
            for h in 0..lat.subgroups().len() {
                for k in lat.contained_in(h) {
                    let kt = r.table(k);
                    let ht = r.table(h);
                    for a in 0..kt.irreducible_count() {
                        let ind = r.induce_class_function(h, k, &kt.irreducibles[a]);
                        for b in 0..ht.irreducible_count() {
                            let res =
                                r.restrict_class_function(h, k, &ht.irreducibles[b]);
                            assert_eq!(
                                r.inner_product(h, &ind, &ht.irreducibles[b]),
                                r.inner_product(k, &kt.irreducibles[a], &res),
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn induction_restriction_as_regular_multiplication_on_c2() {
        // On C2: ind then res from/to the trivial subgroup multiplies by
        // the regular character (1,1) + (1,-1).
        let g = corpus::cyclic(2);
        let r = RepRing::new(&g).unwrap();
        let lat = g.subgroups().unwrap();
        let (triv, full) = (lat.trivial_id(), lat.full_id());
        let composite = r
            .induction_matrix(full, triv)
            .checked_mul(&r.restriction_matrix(full, triv))
            .unwrap();
        // Multiplication by (1+sign): matrix [[1,1],[1,1]].
        let expected = IntMatrix::from_rows_i64(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(composite, expected);
    }

    #[test]
    fn conjugation_permutes_irreducibles() {
        let g = corpus::symmetric(4);
        let r = RepRing::new(&g).unwrap();
        let lat = g.subgroups().unwrap();
        for sub in lat.subgroups().iter().filter(|s| s.order == 2) {
            for ge in g.elements().take(8) {
                let target = lat.conjugate_id(sub.id, ge);
                let m = r.conjugation_matrix(sub.id, ge, target);
                // Permutation matrix: each row and column sums to 1.
                for i in 0..m.rows() {
                    let row_sum: BigInt = (0..m.cols()).map(|j| m.get(i, j).clone()).sum();
                    assert_eq!(row_sum, BigInt::from(1));
                }
            }
        }
    }

    #[test]
    fn product_decomposition_is_unital_and_symmetric() {
        let (_, r) = s3_ring();
        let full = 5; // S3 itself
        let unit = r.unit_index(full);
        for i in 0..3 {
            let dec = r.product_decomposition(full, unit, i);
            let expected: Vec<i128> = (0..3).map(|k| i128::from(k == i)).collect();
            assert_eq!(dec, expected);
            for j in 0..3 {
                assert_eq!(
                    r.product_decomposition(full, i, j),
                    r.product_decomposition(full, j, i)
                );
            }
        }
    }
}
