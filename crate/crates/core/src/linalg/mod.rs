//! Exact integer linear algebra: matrices over arbitrary-precision integers,
//! Smith normal form with unimodular transforms, finitely generated abelian
//! groups, integer lattices, and homology of chain complexes.

mod abelian;
mod complex;
mod lattice;
mod matrix;
mod snf;
mod solve;

pub use abelian::FgAbelianGroup;
pub use complex::ChainComplex;
pub use lattice::LatticeBasis;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
pub use solve::{
    cokernel_exponent, cokernel_of, divides, kernel_basis, lattice_contains, lattice_quotient,
    lcm_with_zero, solve_membership, Obstruction,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix dimensions {0}x{1} and {2}x{3} are incompatible")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("boundary maps do not compose to zero at degree {0}")]
    NotAComplex(usize),
    #[error("degree {0} out of range for complex of length {1}")]
    DegreeOutOfRange(usize, usize),
}
