use crate::group::FiniteGroup;

use super::cyclotomic::Cyclotomic;

/// Conjugacy classes of group elements, ordered by least member (so the
/// identity class is first).
#[derive(Debug, Clone)]
pub struct ElementClasses {
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
    /// Class of the inverses of a class's members.
    pub inverse_class: Vec<usize>,
}

impl ElementClasses {
    pub fn compute(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let cid = reps.len();
            let mut size = 0;
            for g in group.elements() {
                let y = group.conjugate(g, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = cid;
                    size += 1;
                }
            }
            reps.push(x);
            sizes.push(size);
        }
        let inverse_class = reps.iter().map(|&r| class_of[group.inv(r)]).collect();
        ElementClasses {
            reps,
            sizes,
            class_of,
            inverse_class,
        }
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

/// Exact complex character table: irreducible characters as rows of
/// cyclotomic integers over the conjugacy classes.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub classes: ElementClasses,
    pub degrees: Vec<usize>,
    /// `values[i][j]` is the i-th irreducible at the j-th class.
    pub values: Vec<Vec<Cyclotomic>>,
    pub conductor: usize,
    pub group_order: usize,
}

impl CharacterTable {
    /// Burnside-Dixon-Schneider: diagonalize the class-algebra structure
    /// constants over a prime field `F_q` with `q = 1 mod exponent`, then
    /// lift eigenvalue data to exact cyclotomic character values through
    /// discrete logarithms. `conductor` must be a multiple of the group
    /// exponent (the ambient group's exponent, when computing tables of
    /// subgroups).
    pub fn compute(group: &FiniteGroup, conductor: usize) -> CharacterTable {
        let n = group.order();
        let e = group.exponent();
        assert_eq!(conductor % e, 0, "conductor must be a multiple of the exponent");
        let classes = ElementClasses::compute(group);
        let r = classes.count();

        // Field: q = 1 mod e, q comfortably above both 2n and the largest
        // degree, so multiplicities and degrees lift uniquely.
        let q = find_field_prime(e as u64, (2 * n as u64).max(200));

        // Structure constants a[i][j][k] = #{x in C_i : x^{-1} z_k in C_j},
        // i.e. the number of ways z_k factors as (element of C_i)(element
        // of C_j).
        let mut a = vec![vec![vec![0u64; r]; r]; r];
        for (k, &zk) in classes.reps.iter().enumerate() {
            for x in group.elements() {
                let i = classes.class_of[x];
                let y = group.mul(group.inv(x), zk);
                let j = classes.class_of[y];
                a[i][j][k] += 1;
            }
        }

        // Common eigenvectors of the class multiplication matrices
        // (A_i)[j][k] = a[i][j][k] over F_q.
        let mut subspaces: Vec<Vec<Vec<u64>>> = vec![identity_basis(r)];
        for i in 1..r {
            let ai: Vec<Vec<u64>> = (0..r)
                .map(|j| (0..r).map(|k| a[i][j][k] % q).collect())
                .collect();
            let mut next = Vec::new();
            for basis in subspaces {
                if basis.len() == 1 {
                    next.push(basis);
                    continue;
                }
                next.extend(split_by_eigenvalues(&ai, &basis, q));
            }
            subspaces = next;
            if subspaces.iter().all(|b| b.len() == 1) {
                break;
            }
        }
        assert!(
            subspaces.iter().all(|b| b.len() == 1),
            "class algebra failed to split over F_{}",
            q
        );

        // Each line yields the central character omega and then the degree.
        let inv_sizes: Vec<u64> = classes
            .sizes
            .iter()
            .map(|&s| mod_inv(s as u64 % q, q))
            .collect();
        let mut rows: Vec<(usize, Vec<u64>)> = Vec::new(); // (degree, chi mod q)
        for basis in &subspaces {
            let v = &basis[0];
            assert!(v[0] != 0, "central character does not see the identity");
            let scale = mod_inv(v[0], q);
            let omega: Vec<u64> = v.iter().map(|&x| x * scale % q).collect();
            // 1/d^2 = (1/n) sum_j omega_j * omega_{j*} / |C_j|
            let mut t = 0u64;
            for j in 0..r {
                t = (t + omega[j] * omega[classes.inverse_class[j]] % q * inv_sizes[j]) % q;
            }
            let d2 = mod_inv(t, q) * (n as u64 % q) % q;
            let degree = (1..=isqrt(n))
                .find(|&d| (d as u64 * d as u64) % q == d2)
                .expect("no integer degree matches") as usize;
            let chi_q: Vec<u64> = (0..r)
                .map(|j| degree as u64 % q * omega[j] % q * inv_sizes[j] % q)
                .collect();
            rows.push((degree, chi_q));
        }

        // Lift: chi(g) = sum_k m_k zeta_o^k with m_k recovered from the
        // values of chi at the powers of g.
        let z = primitive_root(q);
        let mut lifted: Vec<(usize, Vec<Cyclotomic>)> = Vec::new();
        for (degree, chi_q) in rows {
            let mut values = Vec::with_capacity(r);
            for (j, &g) in classes.reps.iter().enumerate() {
                let o = group.element_order(g);
                let theta = mod_pow(z, (q - 1) / o as u64, q);
                let theta_inv = mod_inv(theta, q);
                let inv_o = mod_inv(o as u64 % q, q);
                let mut value = Cyclotomic::zero(conductor);
                // chi at successive powers of g.
                let mut chi_pows = Vec::with_capacity(o);
                let mut p = 0usize; // current power as element: start g^0 = 0
                for _ in 0..o {
                    chi_pows.push(chi_q[classes.class_of[p]]);
                    p = group.mul(p, g);
                }
                for k in 0..o {
                    let mut mk = 0u64;
                    let tpow = mod_pow(theta_inv, k as u64, q);
                    let mut tl = 1u64;
                    for &cp in chi_pows.iter() {
                        mk = (mk + cp * tl) % q;
                        tl = tl * tpow % q;
                    }
                    mk = mk * inv_o % q;
                    assert!(
                        mk <= degree as u64,
                        "multiplicity lift out of range: {} > {}",
                        mk,
                        degree
                    );
                    if mk != 0 {
                        value = value.add(&Cyclotomic::root_power(
                            conductor,
                            k * (conductor / o),
                            mk as i128,
                        ));
                    }
                }
                values.push(value);
            }
            lifted.push((degree, values));
        }

        // Deterministic row order: trivial character first, then by degree
        // and lexicographic normal forms.
        let mut keyed: Vec<(Vec<i128>, usize, Vec<Cyclotomic>)> = lifted
            .into_iter()
            .map(|(d, vals)| {
                let mut key: Vec<i128> = vec![d as i128];
                let is_trivial = vals.iter().all(|v| v.as_integer() == Some(1));
                key[0] = if is_trivial { -1 } else { d as i128 };
                for v in &vals {
                    key.extend(v.normal_form());
                }
                (key, d, vals)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let degrees: Vec<usize> = keyed.iter().map(|(_, d, _)| *d).collect();
        let values: Vec<Vec<Cyclotomic>> = keyed.into_iter().map(|(_, _, v)| v).collect();

        let table = CharacterTable {
            classes,
            degrees,
            values,
            conductor,
            group_order: n,
        };
        table.verify();
        table
    }

    /// Exact orthogonality and degree checks; panics on violation.
    pub fn verify(&self) {
        let n = self.group_order;
        let r = self.classes.count();
        assert_eq!(self.values.len(), r, "need as many irreducibles as classes");
        let deg_sq: usize = self.degrees.iter().map(|d| d * d).sum();
        assert_eq!(deg_sq, n, "sum of squared degrees must be the order");
        for d in &self.degrees {
            assert_eq!(n % d, 0, "degrees divide the group order");
        }
        // Row orthogonality.
        for i in 0..r {
            for j in 0..r {
                let mut acc = Cyclotomic::zero(self.conductor);
                for c in 0..r {
                    let term = self.values[i][c]
                        .mul(&self.values[j][c].conj())
                        .scale(self.classes.sizes[c] as i128);
                    acc = acc.add(&term);
                }
                let expected = if i == j { n as i128 } else { 0 };
                assert_eq!(
                    acc.as_integer(),
                    Some(expected),
                    "row orthogonality failed at ({}, {})",
                    i,
                    j
                );
            }
        }
        // Column orthogonality.
        for c1 in 0..r {
            for c2 in 0..r {
                let mut acc = Cyclotomic::zero(self.conductor);
                for i in 0..r {
                    acc = acc.add(&self.values[i][c1].mul(&self.values[i][c2].conj()));
                }
                let expected = if c1 == c2 {
                    (n / self.classes.sizes[c1]) as i128
                } else {
                    0
                };
                assert_eq!(
                    acc.as_integer(),
                    Some(expected),
                    "column orthogonality failed at ({}, {})",
                    c1,
                    c2
                );
            }
        }
    }

    /// `<a, b> = (1/|G|) sum sizes * a * conj(b)`; exact, must be a
    /// rational integer (true whenever a and b are virtual characters).
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> i128 {
        let mut acc = Cyclotomic::zero(self.conductor);
        for c in 0..self.classes.count() {
            acc = acc.add(&a[c].mul(&b[c].conj()).scale(self.classes.sizes[c] as i128));
        }
        let divided = acc
            .div_exact(self.group_order as i128)
            .expect("inner product not divisible by the order");
        divided
            .as_integer()
            .expect("inner product of class functions must be rational")
    }

    /// Index of the trivial character (always 0 by the sort order).
    pub fn trivial_index(&self) -> usize {
        0
    }
}

fn identity_basis(r: usize) -> Vec<Vec<u64>> {
    (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()
}

fn isqrt(n: usize) -> usize {
    let mut d = 0;
    while (d + 1) * (d + 1) <= n {
        d += 1;
    }
    d
}

pub fn mod_pow(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

pub fn mod_inv(a: u64, q: u64) -> u64 {
    assert!(a % q != 0, "inverting zero mod {}", q);
    mod_pow(a, q - 2, q)
}

fn find_field_prime(e: u64, min: u64) -> u64 {
    let mut q = (min / e) * e + 1;
    loop {
        if q > min && is_prime_u64(q) {
            return q;
        }
        q += e;
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn primitive_root(q: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = q - 1;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..q)
        .find(|&z| factors.iter().all(|&f| mod_pow(z, (q - 1) / f, q) != 1))
        .expect("prime field has a primitive root")
}

/// Splits an invariant subspace into the eigenspaces of `matrix` restricted
/// to it, scanning every field element as a candidate eigenvalue.
fn split_by_eigenvalues(matrix: &[Vec<u64>], basis: &[Vec<u64>], q: u64) -> Vec<Vec<Vec<u64>>> {
    let dim = basis.len();
    // Row-reduce the basis for coordinate solving.
    let (echelon, pivots) = row_reduce(basis.to_vec(), q);
    // Restriction R: columns are coordinates of A * b_i in the basis.
    let mut restriction = vec![vec![0u64; dim]; dim];
    for (bi, b) in basis.iter().enumerate() {
        let image = mat_vec(matrix, b, q);
        let coords = solve_in_echelon(&echelon, &pivots, &image, q);
        for (ci, c) in coords.into_iter().enumerate() {
            restriction[ci][bi] = c;
        }
    }
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..q {
        if found == dim {
            break;
        }
        // kernel of (R - lambda I)
        let mut shifted = restriction.clone();
        for i in 0..dim {
            shifted[i][i] = (shifted[i][i] + q - lambda % q) % q;
        }
        let kernel = kernel_basis_mod(&shifted, q);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        // Map kernel coordinates back to ambient vectors.
        let sub: Vec<Vec<u64>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![0u64; basis[0].len()];
                for (i, &c) in k.iter().enumerate() {
                    for (j, &bj) in basis[i].iter().enumerate() {
                        v[j] = (v[j] + c * bj) % q;
                    }
                }
                v
            })
            .collect();
        out.push(sub);
    }
    assert_eq!(found, dim, "eigenspaces must exhaust the subspace");
    out
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], q: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a * b) % q))
        .collect()
}

/// Gaussian elimination to reduced row echelon form; returns (rows, pivot
/// columns).
fn row_reduce(mut rows: Vec<Vec<u64>>, q: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = mod_inv(rows[rank][col], q);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + (q - f) * rows[rank][j]) % q;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

fn solve_in_echelon(echelon: &[Vec<u64>], pivots: &[usize], v: &[u64], q: u64) -> Vec<u64> {
    let mut rem = v.to_vec();
    let mut coords = vec![0u64; echelon.len()];
    for (i, &p) in pivots.iter().enumerate() {
        let c = rem[p];
        coords[i] = c;
        if c != 0 {
            for j in 0..rem.len() {
                rem[j] = (rem[j] + (q - c) * echelon[i][j] % q) % q;
            }
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "vector not in subspace");
    coords
}

fn kernel_basis_mod(m: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let dim = m.len();
    let rows: Vec<Vec<u64>> = (0..dim).map(|i| m[i].clone()).collect();
    let (echelon, pivots) = row_reduce(rows, q);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; dim];
            v[fc] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = (q - echelon[i][fc]) % q;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn table(g: &FiniteGroup) -> CharacterTable {
        CharacterTable::compute(g, g.exponent())
    }

    #[test]
    fn c2_table() {
        let t = table(&corpus::cyclic(2));
        assert_eq!(t.degrees, vec![1, 1]);
        // Rows (1, 1) and (1, -1).
        assert_eq!(t.values[0][1].as_integer(), Some(1));
        assert_eq!(t.values[1][1].as_integer(), Some(-1));
    }

    #[test]
    fn s3_table() {
        let t = table(&corpus::symmetric(3));
        assert_eq!(t.degrees, vec![1, 1, 2]);
        // The degree-2 row is (2, -1, 0) on classes (e, 3-cycles,
        // transpositions) -- classes here are ordered by least element, so
        // locate them by size.
        let two_dim = 2;
        let by_rep_order: Vec<usize> = t
            .classes
            .reps
            .iter()
            .map(|&r| corpus::symmetric(3).element_order(r))
            .collect();
        for (j, &o) in by_rep_order.iter().enumerate() {
            let v = t.values[two_dim][j].as_integer().unwrap();
            match o {
                1 => assert_eq!(v, 2),
                2 => assert_eq!(v, 0),
                3 => assert_eq!(v, -1),
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn q8_table() {
        let t = table(&corpus::quaternion8());
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
        // Degree-2 row: 2 at identity, -2 at the central involution, 0
        // elsewhere.
        let q8 = corpus::quaternion8();
        for (j, &r) in t.classes.reps.iter().enumerate() {
            let v = t.values[4][j].as_integer().unwrap();
            match q8.element_order(r) {
                1 => assert_eq!(v, 2),
                2 => assert_eq!(v, -2),
                4 => assert_eq!(v, 0),
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn a4_has_cube_roots_of_unity() {
        let t = table(&corpus::alternating(4));
        assert_eq!(t.degrees, vec![1, 1, 1, 3]);
        // The two nontrivial linear characters take non-rational values.
        let non_rational = t
            .values
            .iter()
            .flat_map(|row| row.iter())
            .filter(|v| v.as_integer().is_none())
            .count();
        assert!(non_rational > 0);
    }

    #[test]
    fn a5_table() {
        let t = table(&corpus::alternating(5));
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 3, 3, 4, 5]);
    }

    #[test]
    fn whole_corpus_tables_verify() {
        for (name, g) in corpus::all() {
            let t = table(&g);
            assert_eq!(
                t.degrees.iter().map(|d| d * d).sum::<usize>(),
                g.order(),
                "{}",
                name
            );
        }
    }
}
