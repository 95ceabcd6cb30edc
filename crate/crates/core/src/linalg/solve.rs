use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{smith_normal_form, FgAbelianGroup, IntMatrix};

/// Cokernel of `a: Z^cols -> Z^rows` (columns span the image).
///
/// Also the answer to "is this map surjective": the cokernel is trivial
/// exactly when it is.
pub fn cokernel_of(a: &IntMatrix) -> FgAbelianGroup {
    let s = smith_normal_form(a);
    let factors = s.invariant_factors();
    FgAbelianGroup::new(a.rows() - s.rank, factors)
}

/// Basis of the integer kernel lattice of `a`, as columns of a matrix.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    // A * V = U^{-1} * D, so columns of V past the rank map to zero.
    let free = a.cols() - s.rank;
    IntMatrix::from_fn(a.cols(), free, |i, j| s.v.get(i, s.rank + j).clone())
}

/// Invariant-factor obstruction produced when `a x = b` has no integer
/// solution: in Smith coordinates, row `index` requires `d | value` and
/// fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub index: usize,
    pub divisor: BigInt,
    pub value: BigInt,
}

/// Solves `a x = b` over the integers; returns a witness solution or the
/// invariant-factor obstruction.
pub fn solve_membership(a: &IntMatrix, b: &[BigInt]) -> Result<Vec<BigInt>, Obstruction> {
    assert_eq!(a.rows(), b.len(), "rhs length mismatch");
    let s = smith_normal_form(a);
    let c = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..a.rows() {
        let d = if i < a.cols() {
            s.d.get(i, i).clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !c[i].is_zero() {
                return Err(Obstruction {
                    index: i,
                    divisor: BigInt::zero(),
                    value: c[i].clone(),
                });
            }
        } else {
            let (q, r) = c[i].div_rem(&d);
            if !r.is_zero() {
                return Err(Obstruction {
                    index: i,
                    divisor: d,
                    value: r,
                });
            }
            y[i] = q;
        }
    }
    Ok(s.v.mul_vec(&y))
}

/// Quotient `N / D` of two sublattices of the same ambient `Z^n`, where the
/// columns of `num` span `N` and the columns of `den` span `D <= N`.
///
/// Panics if some denominator column lies outside the numerator lattice.
pub fn lattice_quotient(num: &IntMatrix, den: &IntMatrix) -> FgAbelianGroup {
    assert_eq!(num.rows(), den.rows(), "ambient dimension mismatch");
    let coords = IntMatrix::from_fn(num.cols(), den.cols(), |_, _| BigInt::zero());
    let mut coords = coords;
    for j in 0..den.cols() {
        let col = den.column(j);
        let x = solve_membership(num, &col)
            .expect("denominator lattice not contained in numerator lattice");
        for i in 0..num.cols() {
            coords.set(i, j, x[i].clone());
        }
    }
    cokernel_of(&coords)
}

/// True when every column of `sub` lies in the lattice spanned by the
/// columns of `ambient`.
pub fn lattice_contains(ambient: &IntMatrix, sub: &IntMatrix) -> bool {
    (0..sub.cols()).all(|j| solve_membership(ambient, &sub.column(j)).is_ok())
}

/// Smallest positive integer `e` such that `e * Z^rows` lands in the column
/// span of `a`; `None` when the span has lower rank than the ambient space.
pub fn cokernel_exponent(a: &IntMatrix) -> Option<BigInt> {
    let c = cokernel_of(a);
    if c.free_rank > 0 {
        None
    } else {
        Some(c.exponent())
    }
}

/// Exact divisibility helper used by callers comparing cokernel sizes.
pub fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        return b.is_zero();
    }
    (b % a).is_zero()
}

/// `lcm` that treats zero as "infinite".
pub fn lcm_with_zero(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b / a.gcd(b)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_examples() {
        // Multiplication by 2 on Z.
        let a = IntMatrix::from_rows_i64(&[vec![2]]);
        assert_eq!(cokernel_of(&a), FgAbelianGroup::cyclic(2));
        // Any unimodular matrix has trivial cokernel.
        let u = IntMatrix::from_rows_i64(&[vec![2, 1], vec![1, 1]]);
        assert!(cokernel_of(&u).is_trivial());
        // Zero map Z^0 -> Z^2.
        let z = IntMatrix::zero(2, 0);
        assert_eq!(cokernel_of(&z), FgAbelianGroup::free(2));
    }

    #[test]
    fn membership_examples() {
        let a = IntMatrix::from_rows_i64(&[vec![2]]);
        assert_eq!(solve_membership(&a, &[BigInt::zero()]).unwrap(), vec![BigInt::zero()]);
        let err = solve_membership(&a, &[BigInt::from(3)]).unwrap_err();
        assert_eq!(err.divisor, BigInt::from(2));
        let ok = solve_membership(&a, &[BigInt::from(6)]).unwrap();
        assert_eq!(a.mul_vec(&ok), vec![BigInt::from(6)]);
    }

    #[test]
    fn kernel_and_quotient() {
        // x + y + z = 0 has kernel of rank 2.
        let a = IntMatrix::from_rows_i64(&[vec![1, 1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        for j in 0..2 {
            assert!(a.mul_vec(&k.column(j)).iter().all(|v| v.is_zero()));
        }
        // Z^2 / <2e1, e2> = Z/2.
        let num = IntMatrix::identity(2);
        let den = IntMatrix::from_rows_i64(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(lattice_quotient(&num, &den), FgAbelianGroup::cyclic(2));
    }

    #[test]
    fn cokernel_invariant_under_unimodular_change() {
        let a = IntMatrix::from_rows_i64(&[vec![2, 4], vec![6, 8]]);
        let p = IntMatrix::from_rows_i64(&[vec![1, 1], vec![0, 1]]);
        let q = IntMatrix::from_rows_i64(&[vec![1, 0], vec![3, 1]]);
        let b = &(&p * &a) * &q;
        assert_eq!(cokernel_of(&a), cokernel_of(&b));
    }
}
