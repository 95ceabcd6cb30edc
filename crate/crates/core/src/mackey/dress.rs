use num_bigint::BigInt;
use num_traits::Zero;

use crate::gset::{GAction, GSet, GSetError, PowerAction};
use crate::linalg::{ChainComplex, IntMatrix};

use super::data::{Evaluation, MackeyFunctorData};

/// Which functorial direction the complex uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// The chain complex `... -> M(S^2) -> M(S^1) -> M(S^0)` (with `S^0` the
/// one-point set) whose boundaries are alternating sums of the maps induced
/// by coordinate-omission projections. The contravariant variant is the
/// cochain version, stored with the arrows reversed so the same
/// `ChainComplex` machinery applies: degree n holds `M(S^n)` and the stored
/// map at degree n+1 is the coboundary out of degree n transposed into
/// chain-direction shape.
pub fn dress_complex(
    m: &MackeyFunctorData,
    s: &GSet,
    n_max: usize,
    variance: Variance,
    product_cap: usize,
) -> Result<ChainComplex, GSetError> {
    if s.size() == 0 {
        return Err(GSetError::EmptyGSet);
    }
    let data = dress_data(m, s, n_max, product_cap)?;
    let mut ranks = Vec::with_capacity(n_max + 1);
    for ev in &data.evaluations {
        ranks.push(ev.total_rank);
    }
    let mut boundaries = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let b = match variance {
            Variance::Covariant => data.chain_boundary(m, n),
            Variance::Contravariant => data.cochain_coboundary(m, n).transpose(),
        };
        boundaries.push(b);
    }
    ChainComplex::new(ranks, boundaries).map_err(|e| match e {
        crate::linalg::LinalgError::NotAComplex(n) => {
            panic!("projection boundaries must square to zero (degree {})", n)
        }
        other => panic!("dress complex shape error: {other}"),
    })
}

/// Shared evaluation data for the powers `S^0 .. S^n`.
pub struct DressData {
    pub evaluations: Vec<Evaluation>,
    sizes: Vec<usize>,
    base_size: usize,
}

pub fn dress_data(
    m: &MackeyFunctorData,
    s: &GSet,
    n_max: usize,
    product_cap: usize,
) -> Result<DressData, GSetError> {
    if s.size() == 0 {
        return Err(GSetError::EmptyGSet);
    }
    let mut evaluations = Vec::with_capacity(n_max + 1);
    let mut sizes = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let size = s.size().checked_pow(n as u32).unwrap_or(usize::MAX);
        if size > product_cap {
            return Err(GSetError::CapExceeded(size, product_cap));
        }
        let power = PowerAction::new(s, n);
        evaluations.push(m.evaluate(&power));
        sizes.push(size);
    }
    Ok(DressData {
        evaluations,
        sizes,
        base_size: s.size(),
    })
}

impl DressData {
    /// Index arithmetic for the projection omitting 1-based coordinate `i`
    /// out of `S^n`.
    pub fn project(&self, n: usize, i: usize, point: usize) -> usize {
        debug_assert!(i >= 1 && i <= n);
        let s = self.base_size;
        // Split digits (most significant = first coordinate).
        let below = s.pow((n - i) as u32); // strictly lower digits
        let high = point / (below * s);
        let low = point % below;
        high * below + low
    }

    /// `c_n = sum_{i=1}^n (-1)^i M_*(pr_i^n)`: `M(S^n) -> M(S^{n-1})`.
    pub fn chain_boundary(&self, m: &MackeyFunctorData, n: usize) -> IntMatrix {
        let src = &self.evaluations[n];
        let tgt = &self.evaluations[n - 1];
        let mut acc = IntMatrix::zero(tgt.total_rank, src.total_rank);
        for i in 1..=n {
            let part = m.covariant_matrix(src, tgt, |x| self.project(n, i, x));
            acc = if i % 2 == 1 { &acc - &part } else { &acc + &part };
        }
        acc
    }

    /// `c^{n-1} = sum_{i=1}^{n} (-1)^i M^*(pr_i^{n})`: `M(S^{n-1}) -> M(S^n)`.
    pub fn cochain_coboundary(&self, m: &MackeyFunctorData, n: usize) -> IntMatrix {
        let src = &self.evaluations[n];
        let tgt = &self.evaluations[n - 1];
        let mut acc = IntMatrix::zero(src.total_rank, tgt.total_rank);
        for i in 1..=n {
            let part = m.contravariant_matrix(src, tgt, |x| self.project(n, i, x));
            acc = if i % 2 == 1 { &acc - &part } else { &acc + &part };
        }
        acc
    }

    /// Sparse column of the chain boundary `c_n` at one basis position of
    /// `M(S^n)` -- used where the full matrix would be enormous.
    pub fn boundary_column(
        &self,
        m: &MackeyFunctorData,
        n: usize,
        position: usize,
    ) -> Vec<(usize, BigInt)> {
        let src = &self.evaluations[n];
        let tgt = &self.evaluations[n - 1];
        let block_idx = src.block_of_position(position);
        let in_block = position - src.blocks[block_idx].offset;
        let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
        for i in 1..=n {
            let col =
                m.covariant_apply_basis(src, tgt, |x| self.project(n, i, x), block_idx, in_block);
            let sign = if i % 2 == 1 { -1 } else { 1 };
            for (row, v) in col {
                let entry = acc.entry(row).or_insert_with(BigInt::zero);
                *entry += v * BigInt::from(sign);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    pub fn size(&self, n: usize) -> usize {
        self.sizes[n]
    }
}
