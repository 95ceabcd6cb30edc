use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finitely generated abelian group `Z^free_rank + Z/d_1 + ... + Z/d_k`
/// with `d_1 | d_2 | ... | d_k` and every `d_i >= 2`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Self {
        for d in &invariant_factors {
            assert!(*d >= BigInt::from(2), "invariant factor below 2");
        }
        for w in invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain violated");
        }
        FgAbelianGroup {
            free_rank,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        Self::new(0, vec![])
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, vec![])
    }

    pub fn cyclic(d: u64) -> Self {
        match d {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => Self::new(0, vec![BigInt::from(d)]),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Exponent of the group: lcm of the invariant factors, or 0 when the
    /// group has a free part (infinite exponent).
    pub fn exponent(&self) -> BigInt {
        if self.free_rank > 0 {
            return BigInt::zero();
        }
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(BigInt::one)
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    /// The p-primary part: free part is discarded (localization at p keeps
    /// it, but the p-torsion question is what the callers ask), and each
    /// invariant factor is replaced by its p-power divisor.
    pub fn p_primary_part(&self, p: u64) -> FgAbelianGroup {
        let p = BigInt::from(p);
        let mut factors = Vec::new();
        for d in &self.invariant_factors {
            let mut q = BigInt::one();
            let mut rest = d.clone();
            while (&rest % &p).is_zero() {
                rest /= &p;
                q *= &p;
            }
            if q > BigInt::one() {
                factors.push(q);
            }
        }
        FgAbelianGroup::new(0, factors)
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{}", d));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parts() {
        let g = FgAbelianGroup::new(2, vec![BigInt::from(2), BigInt::from(6)]);
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!(g.exponent(), BigInt::zero());
        assert_eq!(g.torsion_order(), BigInt::from(12));
        assert_eq!(
            g.p_primary_part(2),
            FgAbelianGroup::new(0, vec![BigInt::from(2), BigInt::from(2)])
        );
        assert_eq!(
            g.p_primary_part(3),
            FgAbelianGroup::new(0, vec![BigInt::from(3)])
        );
        assert!(FgAbelianGroup::trivial().is_trivial());
        assert_eq!(FgAbelianGroup::cyclic(1), FgAbelianGroup::trivial());
    }
}
