use num_bigint::BigInt;
use num_traits::Zero;

use super::{kernel_basis, lattice_quotient, FgAbelianGroup, IntMatrix, LatticeBasis, LinalgError};

/// Chain complex of free Z-modules: `ranks[n]` in degree `n`, with boundary
/// `boundaries[n]: degree n -> degree n-1` (so `boundaries[0]` is absent and
/// `boundaries.len() == ranks.len() - 1` when nonempty... stored shifted by
/// one: `boundaries[n-1]` is the map out of degree `n`).
#[derive(Debug, Clone)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Builds a complex and verifies both shape and `c_n . c_{n+1} = 0`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, LinalgError> {
        assert_eq!(
            boundaries.len(),
            ranks.len().saturating_sub(1),
            "one boundary per adjacent degree pair"
        );
        for (n, b) in boundaries.iter().enumerate() {
            if b.rows() != ranks[n] || b.cols() != ranks[n + 1] {
                return Err(LinalgError::DimensionMismatch(
                    b.rows(),
                    b.cols(),
                    ranks[n],
                    ranks[n + 1],
                ));
            }
        }
        for n in 0..boundaries.len().saturating_sub(1) {
            let composite = boundaries[n].checked_mul(&boundaries[n + 1])?;
            if !composite.is_zero() {
                return Err(LinalgError::NotAComplex(n + 2));
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    /// Boundary map out of degree `n` (degree n -> degree n-1).
    pub fn boundary(&self, n: usize) -> Option<&IntMatrix> {
        if n == 0 || n > self.boundaries.len() {
            None
        } else {
            Some(&self.boundaries[n - 1])
        }
    }

    /// `ker(c_n) / im(c_{n+1})`. Degrees above the stored range are treated
    /// as zero modules on the incoming side.
    pub fn homology(&self, n: usize) -> Result<FgAbelianGroup, LinalgError> {
        if n >= self.ranks.len() {
            return Err(LinalgError::DegreeOutOfRange(n, self.ranks.len()));
        }
        let cycles = match self.boundary(n) {
            Some(b) => kernel_basis(b),
            None => IntMatrix::identity(self.ranks[n]),
        };
        let image = match self.boundary(n + 1) {
            Some(b) => {
                let mut l = LatticeBasis::new(self.ranks[n]);
                for j in 0..b.cols() {
                    let col: Vec<(usize, BigInt)> = (0..b.rows())
                        .map(|i| (i, b.get(i, j).clone()))
                        .filter(|(_, v)| !v.is_zero())
                        .collect();
                    l.insert(&col);
                }
                l.basis_matrix()
            }
            None => IntMatrix::zero(self.ranks[n], 0),
        };
        Ok(lattice_quotient(&cycles, &image))
    }

    /// All homology groups in degrees `0..=max_degree`.
    pub fn homology_all(&self, max_degree: usize) -> Result<Vec<FgAbelianGroup>, LinalgError> {
        (0..=max_degree).map(|n| self.homology(n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_complex_is_exact() {
        // 0 -> Z --id--> Z -> 0
        let c = ChainComplex::new(vec![1, 1], vec![IntMatrix::identity(1)]).unwrap();
        assert!(c.homology(0).unwrap().is_trivial());
        assert!(c.homology(1).unwrap().is_trivial());
    }

    #[test]
    fn zero_boundaries_give_back_modules() {
        let c = ChainComplex::new(
            vec![2, 3, 1],
            vec![IntMatrix::zero(2, 3), IntMatrix::zero(3, 1)],
        )
        .unwrap();
        assert_eq!(c.homology(0).unwrap(), FgAbelianGroup::free(2));
        assert_eq!(c.homology(1).unwrap(), FgAbelianGroup::free(3));
        assert_eq!(c.homology(2).unwrap(), FgAbelianGroup::free(1));
    }

    #[test]
    fn rejects_non_complex() {
        let err = ChainComplex::new(
            vec![1, 1, 1],
            vec![IntMatrix::identity(1), IntMatrix::identity(1)],
        )
        .unwrap_err();
        assert!(matches!(err, LinalgError::NotAComplex(_)));
    }

    #[test]
    fn torsion_in_homology() {
        // 0 -> Z --(x2)--> Z -> 0 has H_0 = Z/2.
        let c = ChainComplex::new(vec![1, 1], vec![IntMatrix::from_rows_i64(&[vec![2]])]).unwrap();
        assert_eq!(c.homology(0).unwrap(), FgAbelianGroup::cyclic(2));
        assert!(c.homology(1).unwrap().is_trivial());
    }

    #[test]
    fn circle_complex() {
        // Simplicial circle: 3 vertices, 3 edges; H_0 = Z, H_1 = Z.
        let boundary = IntMatrix::from_rows_i64(&[
            vec![-1, 0, 1],
            vec![1, -1, 0],
            vec![0, 1, -1],
        ]);
        let c = ChainComplex::new(vec![3, 3], vec![boundary]).unwrap();
        assert_eq!(c.homology(0).unwrap(), FgAbelianGroup::free(1));
        assert_eq!(c.homology(1).unwrap(), FgAbelianGroup::free(1));
    }
}
