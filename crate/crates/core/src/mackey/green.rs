use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::data::{CoefficientData, MackeyFunctorData};
use crate::linalg::IntMatrix;

/// Multiplicative structure on top of a coefficient system: each value
/// `U(G/H)` carries an associative unital ring structure given on basis
/// pairs.
pub trait GreenData: CoefficientData {
    /// Decomposition of `e_i * e_j` in the basis of `U(G/H)`.
    fn product(&self, h: usize, i: usize, j: usize) -> Vec<BigInt>;
    /// The unit of `U(G/H)` in the basis.
    fn unit_vector(&self, h: usize) -> Vec<BigInt>;
}

/// A Green functor: Mackey data plus ring structure per value.
#[derive(Clone)]
pub struct GreenFunctorData {
    mackey: MackeyFunctorData,
    green: Arc<dyn GreenData>,
}

impl std::fmt::Debug for GreenFunctorData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GreenFunctorData({})", self.mackey.name())
    }
}

impl GreenFunctorData {
    pub fn new(green: Arc<dyn GreenData>) -> Self {
        GreenFunctorData {
            mackey: MackeyFunctorData::new(green.clone()),
            green,
        }
    }

    pub fn mackey(&self) -> &MackeyFunctorData {
        &self.mackey
    }

    pub fn name(&self) -> &str {
        self.mackey.name()
    }

    pub fn rank(&self, h: usize) -> usize {
        self.mackey.rank(h)
    }

    pub fn unit(&self, h: usize) -> Vec<BigInt> {
        self.green.unit_vector(h)
    }

    /// Bilinear product of coefficient vectors at `U(G/H)`.
    pub fn multiply(&self, h: usize, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let rank = self.rank(h);
        let mut out = vec![BigInt::zero(); rank];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let dec = self.green.product(h, i, j);
                for (k, c) in dec.into_iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += xi * yj * c;
                    }
                }
            }
        }
        out
    }

    /// Left-multiplication matrix by the basis element `e_i` at H.
    pub fn left_multiplication(&self, h: usize, i: usize) -> IntMatrix {
        let rank = self.rank(h);
        IntMatrix::from_fn(rank, rank, |r, j| self.green.product(h, i, j)[r].clone())
    }

    /// Ring axioms at one subgroup: associativity on basis triples and the
    /// unit law.
    pub fn verify_ring_axioms(&self, h: usize) -> Result<(), GreenViolation> {
        let rank = self.rank(h);
        let unit = self.unit(h);
        let basis = |i: usize| -> Vec<BigInt> {
            (0..rank).map(|k| BigInt::from(u8::from(k == i))).collect()
        };
        for i in 0..rank {
            let e = basis(i);
            if self.multiply(h, &unit, &e) != e || self.multiply(h, &e, &unit) != e {
                return Err(GreenViolation {
                    subgroup: h,
                    rule: "unit law".into(),
                    witness: format!("basis {}", i),
                });
            }
            for j in 0..rank {
                for k in 0..rank {
                    let lhs = self.multiply(h, &self.multiply(h, &e, &basis(j)), &basis(k));
                    let rhs = self.multiply(h, &e, &self.multiply(h, &basis(j), &basis(k)));
                    if lhs != rhs {
                        return Err(GreenViolation {
                            subgroup: h,
                            rule: "associativity".into(),
                            witness: format!("basis triple ({}, {}, {})", i, j, k),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Restrictions are unital ring maps: checked on every inclusion pair
    /// of enumerated subgroups.
    pub fn verify_restrictions_are_ring_maps(&self) -> Result<(), GreenViolation> {
        let lat = self.mackey.group().subgroups().expect("lattice");
        for h in 0..lat.subgroups().len() {
            for k in lat.contained_in(h) {
                let res = self.mackey.restriction(h, k);
                let unit_h = self.unit(h);
                if res.mul_vec(&unit_h) != self.unit(k) {
                    return Err(GreenViolation {
                        subgroup: h,
                        rule: "restriction preserves units".into(),
                        witness: format!("restriction to subgroup {}", k),
                    });
                }
                let rank = self.rank(h);
                for i in 0..rank {
                    for j in 0..rank {
                        let ei: Vec<BigInt> =
                            (0..rank).map(|t| BigInt::from(u8::from(t == i))).collect();
                        let ej: Vec<BigInt> =
                            (0..rank).map(|t| BigInt::from(u8::from(t == j))).collect();
                        let lhs = res.mul_vec(&self.multiply(h, &ei, &ej));
                        let rhs = self.multiply(k, &res.mul_vec(&ei), &res.mul_vec(&ej));
                        if lhs != rhs {
                            return Err(GreenViolation {
                                subgroup: h,
                                rule: "restriction is multiplicative".into(),
                                witness: format!("pair ({}, {}) to subgroup {}", i, j, k),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenViolation {
    pub subgroup: usize,
    pub rule: String,
    pub witness: String,
}

impl std::fmt::Display for GreenViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} violated at subgroup {} ({})",
            self.rule, self.subgroup, self.witness
        )
    }
}

/// A pairing `U x M -> M` making each `M(G/H)` a `U(G/H)`-module; supplied
/// on basis pairs. For a Green functor acting on itself the product is the
/// pairing.
pub trait PairingData: Send + Sync {
    /// Coefficients of `u_i . m_j` in the basis of `M(G/H)`.
    fn act(&self, h: usize, u_basis: usize, m_basis: usize) -> Vec<BigInt>;
}

/// Self-action of a Green functor.
pub struct SelfPairing(pub GreenFunctorData);

impl PairingData for SelfPairing {
    fn act(&self, h: usize, u_basis: usize, m_basis: usize) -> Vec<BigInt> {
        self.0.green.product(h, u_basis, m_basis)
    }
}

/// Deliberately broken module structure: the unit acts as multiplication by
/// a constant. Exists to prove the pairing checker can fail.
pub struct ScaledPairing {
    pub inner: Arc<dyn PairingData>,
    pub scale: i64,
}

impl PairingData for ScaledPairing {
    fn act(&self, h: usize, u_basis: usize, m_basis: usize) -> Vec<BigInt> {
        self.inner
            .act(h, u_basis, m_basis)
            .into_iter()
            .map(|v| v * BigInt::from(self.scale))
            .collect()
    }
}

/// Frobenius/pairing verification: the projection formulas on every
/// inclusion pair of subgroups, conjugation compatibility, and the module
/// laws (unit acting as the identity, associativity of the action).
pub fn check_green_pairing(
    u: &GreenFunctorData,
    m: &MackeyFunctorData,
    pairing: &dyn PairingData,
) -> Result<(), GreenViolation> {
    let lat = u.mackey().group().subgroups().expect("lattice");
    let act = |h: usize, x: &[BigInt], y: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); m.rank(h)];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in pairing.act(h, i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += xi * yj * c;
                    }
                }
            }
        }
        out
    };
    let e = |n: usize, i: usize| -> Vec<BigInt> {
        (0..n).map(|t| BigInt::from(u8::from(t == i))).collect()
    };

    for h in 0..lat.subgroups().len() {
        let ur = u.rank(h);
        let mr = m.rank(h);
        // Module laws.
        let unit = u.unit(h);
        for j in 0..mr {
            let mj = e(mr, j);
            if act(h, &unit, &mj) != mj {
                return Err(GreenViolation {
                    subgroup: h,
                    rule: "unit acts as identity".into(),
                    witness: format!("module basis {}", j),
                });
            }
        }
        for i in 0..ur {
            for i2 in 0..ur {
                for j in 0..mr {
                    let lhs = act(h, &u.multiply(h, &e(ur, i), &e(ur, i2)), &e(mr, j));
                    let rhs = act(h, &e(ur, i), &act(h, &e(ur, i2), &e(mr, j)));
                    if lhs != rhs {
                        return Err(GreenViolation {
                            subgroup: h,
                            rule: "action associativity".into(),
                            witness: format!("({}, {}, {})", i, i2, j),
                        });
                    }
                }
            }
        }

        // Projection formulas along every inclusion f: G/K -> G/H.
        for k in lat.contained_in(h) {
            let res_u = u.mackey().restriction(h, k);
            let res_m = m.restriction(h, k);
            let ind_m = m.induction(h, k);
            let ur_k = u.rank(k);
            let mr_k = m.rank(k);
            for i in 0..ur {
                let x = e(ur, i);
                let res_x = res_u.mul_vec(&x);
                // res(x . y) = res(x) . res(y)
                for j in 0..mr {
                    let y = e(mr, j);
                    let lhs = res_m.mul_vec(&act(h, &x, &y));
                    let rhs = act(k, &res_x, &res_m.mul_vec(&y));
                    if lhs != rhs {
                        return Err(GreenViolation {
                            subgroup: h,
                            rule: "restriction is a pairing map".into(),
                            witness: format!("x={} y={} K={}", i, j, k),
                        });
                    }
                }
                // x . ind(y) = ind(res(x) . y)
                for j in 0..mr_k {
                    let y = e(mr_k, j);
                    let lhs = act(h, &x, &ind_m.mul_vec(&y));
                    let rhs = ind_m.mul_vec(&act(k, &res_x, &y));
                    if lhs != rhs {
                        return Err(GreenViolation {
                            subgroup: h,
                            rule: "first projection formula".into(),
                            witness: format!("x={} y={} K={}", i, j, k),
                        });
                    }
                }
            }
            // ind(x) . y = ind(x . res(y))
            let ind_u = u.mackey().induction(h, k);
            for i in 0..ur_k {
                let x = e(ur_k, i);
                let ind_x = ind_u.mul_vec(&x);
                for j in 0..mr {
                    let y = e(mr, j);
                    let lhs = act(h, &ind_x, &y);
                    let rhs = ind_m.mul_vec(&act(k, &x, &res_m.mul_vec(&y)));
                    if lhs != rhs {
                        return Err(GreenViolation {
                            subgroup: h,
                            rule: "second projection formula".into(),
                            witness: format!("x={} y={} K={}", i, j, k),
                        });
                    }
                }
            }
        }

        // Conjugation compatibility: c_g(x . y) = c_g(x) . c_g(y).
        for g in u.mackey().group().generators().to_vec() {
            let target = lat.conjugate_id(h, g);
            let cu = u.mackey().conjugation(h, g);
            let cm = m.conjugation(h, g);
            for i in 0..ur {
                for j in 0..mr {
                    let lhs = cm.mul_vec(&act(h, &e(ur, i), &e(mr, j)));
                    let rhs = act(
                        target,
                        &cu.mul_vec(&e(ur, i)),
                        &cm.mul_vec(&e(mr, j)),
                    );
                    if lhs != rhs {
                        return Err(GreenViolation {
                            subgroup: h,
                            rule: "conjugation is a pairing map".into(),
                            witness: format!("g={} x={} y={}", g, i, j),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}
