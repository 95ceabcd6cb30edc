use std::fmt;

/// An element of `Z[zeta_m]`, stored as an integer combination of the m-th
/// roots of unity `zeta^0 .. zeta^{m-1}` (i.e. an element of
/// `Z[x]/(x^m - 1)` mapped onto the cyclotomic field). Addition and
/// multiplication act on this redundant representation; equality and
/// integer extraction go through the normal form modulo the m-th cyclotomic
/// polynomial.
///
/// Coefficients use checked i128 arithmetic: magnitudes stay tiny at the
/// group orders this crate handles, and an overflow would panic rather than
/// corrupt a result.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<i128>,
}

impl Cyclotomic {
    pub fn zero(conductor: usize) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![0; conductor],
        }
    }

    pub fn from_integer(conductor: usize, n: i128) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = n;
        c
    }

    /// `zeta_m^k` scaled by `mult`.
    pub fn root_power(conductor: usize, k: usize, mult: i128) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[k % conductor] = mult;
        c
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.checked_add(*b).expect("cyclotomic overflow"))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.checked_sub(*b).expect("cyclotomic overflow"))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let m = self.conductor;
        let mut out = vec![0i128; m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if *b == 0 {
                    continue;
                }
                let idx = (i + j) % m;
                out[idx] = out[idx]
                    .checked_add(a.checked_mul(*b).expect("cyclotomic overflow"))
                    .expect("cyclotomic overflow");
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs: out,
        }
    }

    pub fn scale(&self, n: i128) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a.checked_mul(n).expect("cyclotomic overflow"))
                .collect(),
        }
    }

    /// Complex conjugation: `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.conductor;
        let mut out = vec![0i128; m];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[(m - k) % m] += a;
        }
        Cyclotomic {
            conductor: m,
            coeffs: out,
        }
    }

    /// Reduction modulo the m-th cyclotomic polynomial: coefficients on the
    /// power basis `1, x, ..., x^{phi(m)-1}`.
    pub fn normal_form(&self) -> Vec<i128> {
        let phi = cyclotomic_polynomial(self.conductor);
        let deg = phi.len() - 1; // phi(m)
        let mut rem = self.coeffs.clone();
        // Divide by the monic polynomial phi, keeping the remainder.
        for i in (deg..rem.len()).rev() {
            let lead = rem[i];
            if lead == 0 {
                continue;
            }
            for (j, &c) in phi.iter().enumerate() {
                rem[i - deg + j] = rem[i - deg + j]
                    .checked_sub(lead.checked_mul(c).expect("cyclotomic overflow"))
                    .expect("cyclotomic overflow");
            }
            debug_assert_eq!(rem[i], 0);
        }
        rem.truncate(deg.max(1));
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form().iter().all(|&c| c == 0)
    }

    pub fn equals(&self, other: &Self) -> bool {
        assert_eq!(self.conductor, other.conductor);
        self.sub(other).is_zero()
    }

    /// The rational integer this element equals, if any.
    pub fn as_integer(&self) -> Option<i128> {
        let nf = self.normal_form();
        if nf[1..].iter().all(|&c| c == 0) {
            Some(nf[0])
        } else {
            None
        }
    }

    /// Exact division by a positive integer; `None` if not divisible.
    pub fn div_exact(&self, n: i128) -> Option<Self> {
        assert!(n != 0);
        let nf = self.normal_form();
        if nf.iter().any(|&c| c % n != 0) {
            return None;
        }
        let mut coeffs = vec![0i128; self.conductor];
        for (i, &c) in nf.iter().enumerate() {
            coeffs[i] = c / n;
        }
        Some(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    /// Re-embeds into a larger conductor `m2` (a multiple of the current
    /// one) via `zeta_m = zeta_{m2}^{m2/m}`.
    pub fn embed(&self, m2: usize) -> Self {
        assert_eq!(m2 % self.conductor, 0, "conductor must divide target");
        let step = m2 / self.conductor;
        let mut out = vec![0i128; m2];
        for (k, &a) in self.coeffs.iter().enumerate() {
            out[k * step] += a;
        }
        Cyclotomic {
            conductor: m2,
            coeffs: out,
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nf = self.normal_form();
        if let Some(n) = self.as_integer() {
            return write!(f, "{}", n);
        }
        let terms: Vec<String> = nf
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => format!("{}", c),
                1 => format!("{}*z", c),
                _ => format!("{}*z^{}", c, k),
            })
            .collect();
        write!(f, "({})[{}]", terms.join(" + "), self.conductor)
    }
}

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// computed by exact division of `x^m - 1` by all lower `Phi_d`. Memoized;
/// normal forms reduce against this constantly.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i128> {
    use std::sync::Mutex;
    static CACHE: Mutex<Vec<Option<Vec<i128>>>> = Mutex::new(Vec::new());
    assert!(m >= 1);
    {
        let cache = CACHE.lock().unwrap();
        if let Some(Some(hit)) = cache.get(m) {
            return hit.clone();
        }
    }
    // x^m - 1
    let mut num = vec![0i128; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in 1..m {
        if m % d != 0 {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = poly_div_exact(&num, &phi_d);
    }
    let mut cache = CACHE.lock().unwrap();
    if cache.len() <= m {
        cache.resize(m + 1, None);
    }
    cache[m] = Some(num.clone());
    num
}

/// Exact division of integer polynomials (divisor monic), constant first.
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i128; qn + 1];
    for i in (0..=qn).rev() {
        let lead = rem[i + dn];
        quot[i] = lead;
        if lead == 0 {
            continue;
        }
        for (j, &c) in den.iter().enumerate() {
            rem[i + j] -= lead * c;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division not exact");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn arithmetic_and_normal_form() {
        // In Z[zeta_3]: 1 + z + z^2 = 0.
        let m = 3;
        let sum = Cyclotomic::root_power(m, 0, 1)
            .add(&Cyclotomic::root_power(m, 1, 1))
            .add(&Cyclotomic::root_power(m, 2, 1));
        assert!(sum.is_zero());
        // zeta_4^2 = -1.
        let i = Cyclotomic::root_power(4, 1, 1);
        let i2 = i.mul(&i);
        assert_eq!(i2.as_integer(), Some(-1));
        // Conjugation inverts: z * conj(z) = 1.
        let z = Cyclotomic::root_power(5, 1, 1);
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(1));
    }

    #[test]
    fn division_and_embedding() {
        let m = 2;
        // 1 + 3*zeta_2 = 1 - 3 = -2, divisible by 2.
        let v = Cyclotomic::from_integer(m, 1).add(&Cyclotomic::root_power(m, 1, 3));
        let half = v.div_exact(2).unwrap();
        assert_eq!(half.as_integer(), Some(-1));
        assert!(v.div_exact(4).is_none());
        // Embedding zeta_3 into conductor 6 preserves arithmetic.
        let z3 = Cyclotomic::root_power(3, 1, 1);
        let z3e = z3.embed(6);
        assert!(z3e.mul(&z3e).mul(&z3e).sub(&Cyclotomic::from_integer(6, 1)).is_zero());
        // Golden-ratio style element of Z[zeta_5]: -(z + z^4) has
        // minimal polynomial x^2 - x - 1.
        let a = Cyclotomic::root_power(5, 1, -1).add(&Cyclotomic::root_power(5, 4, -1));
        let lhs = a.mul(&a).sub(&a).sub(&Cyclotomic::from_integer(5, 1));
        assert!(lhs.is_zero());
    }
}
