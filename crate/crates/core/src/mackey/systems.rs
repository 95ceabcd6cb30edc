use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff::{BurnsideRing, RepRing};
use crate::group::{FiniteGroup, GroupError};
use crate::linalg::IntMatrix;

use super::data::{CoefficientData, MackeyFunctorData};
use super::green::{GreenData, GreenFunctorData};

impl CoefficientData for RepRing {
    fn group(&self) -> &FiniteGroup {
        RepRing::group(self)
    }

    fn name(&self) -> &str {
        "complex representation ring"
    }

    fn rank(&self, h: usize) -> usize {
        RepRing::rank(self, h)
    }

    fn restriction(&self, h: usize, k: usize) -> IntMatrix {
        self.restriction_matrix(h, k)
    }

    fn induction(&self, h: usize, k: usize) -> IntMatrix {
        self.induction_matrix(h, k)
    }

    fn conjugation(&self, h: usize, g: usize, target: usize) -> IntMatrix {
        self.conjugation_matrix(h, g, target)
    }
}

impl GreenData for RepRing {
    fn product(&self, h: usize, i: usize, j: usize) -> Vec<BigInt> {
        self.product_decomposition(h, i, j)
            .into_iter()
            .map(BigInt::from)
            .collect()
    }

    fn unit_vector(&self, h: usize) -> Vec<BigInt> {
        let u = self.unit_index(h);
        (0..RepRing::rank(self, h))
            .map(|i| BigInt::from(u8::from(i == u)))
            .collect()
    }
}

impl CoefficientData for BurnsideRing {
    fn group(&self) -> &FiniteGroup {
        BurnsideRing::group(self)
    }

    fn name(&self) -> &str {
        "Burnside ring"
    }

    fn rank(&self, h: usize) -> usize {
        BurnsideRing::rank(self, h)
    }

    fn restriction(&self, h: usize, k: usize) -> IntMatrix {
        self.restriction_matrix(h, k)
    }

    fn induction(&self, h: usize, k: usize) -> IntMatrix {
        self.induction_matrix(h, k)
    }

    fn conjugation(&self, h: usize, g: usize, target: usize) -> IntMatrix {
        self.conjugation_matrix(h, g, target)
    }
}

impl GreenData for BurnsideRing {
    fn product(&self, h: usize, i: usize, j: usize) -> Vec<BigInt> {
        self.product_decomposition(h, i, j)
    }

    fn unit_vector(&self, h: usize) -> Vec<BigInt> {
        let u = self.unit_index(h);
        (0..BurnsideRing::rank(self, h))
            .map(|i| BigInt::from(u8::from(i == u)))
            .collect()
    }
}

/// The complex representation ring as a Green functor.
pub fn rep_ring_green(group: &FiniteGroup) -> Result<GreenFunctorData, GroupError> {
    Ok(GreenFunctorData::new(Arc::new(RepRing::new(group)?)))
}

/// The Burnside ring as a Green functor.
pub fn burnside_green(group: &FiniteGroup) -> Result<GreenFunctorData, GroupError> {
    Ok(GreenFunctorData::new(Arc::new(BurnsideRing::new(group)?)))
}

/// Wrapper that corrupts one induction matrix entry; the axiom checker must
/// catch it.
pub struct CorruptedTransfer {
    pub inner: Arc<dyn CoefficientData>,
    /// (h, k) pair whose induction matrix gets one entry bumped.
    pub target_pair: (usize, usize),
}

impl CoefficientData for CorruptedTransfer {
    fn group(&self) -> &FiniteGroup {
        self.inner.group()
    }

    fn name(&self) -> &str {
        "corrupted transfer fixture"
    }

    fn rank(&self, h: usize) -> usize {
        self.inner.rank(h)
    }

    fn restriction(&self, h: usize, k: usize) -> IntMatrix {
        self.inner.restriction(h, k)
    }

    fn induction(&self, h: usize, k: usize) -> IntMatrix {
        let mut m = self.inner.induction(h, k);
        if (h, k) == self.target_pair && m.rows() > 0 && m.cols() > 0 {
            let bumped = m.get(0, 0) + BigInt::from(1);
            m.set(0, 0, bumped);
        }
        m
    }

    fn conjugation(&self, h: usize, g: usize, target: usize) -> IntMatrix {
        self.inner.conjugation(h, g, target)
    }
}

/// Corrupted Mackey functor built over the representation ring: flips the
/// transfer from the first proper subgroup into the full group.
pub fn corrupted_rep_ring(group: &FiniteGroup) -> Result<MackeyFunctorData, GroupError> {
    let rep = Arc::new(RepRing::new(group)?);
    let lat = group.subgroups()?;
    let full = lat.full_id();
    let k = lat
        .contained_in(full)
        .into_iter()
        .find(|&k| k != full)
        .expect("group has a proper subgroup");
    Ok(MackeyFunctorData::new(Arc::new(CorruptedTransfer {
        inner: rep,
        target_pair: (full, k),
    })))
}
