//! Concrete coefficient systems: exact character tables (and through them
//! the complex representation ring) and the Burnside ring with its table of
//! marks, plus the induction-surjectivity reports built on top of them.

mod burnside;
mod chartab;
mod cyclotomic;
mod induction;
mod repring;

pub use burnside::{BurnsideRing, TableOfMarks};
pub use chartab::{CharacterTable, ElementClasses};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use induction::{induction_cokernel, CoefficientRing, InductionReport};
pub use repring::{ClassFunction, RepRing};
