use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gset::{GSet, GSetError};
use crate::linalg::{cokernel_of, solve_membership, FgAbelianGroup, IntMatrix};

use super::data::{Evaluation, MackeyFunctorData};
use super::green::GreenFunctorData;
use super::twist::{twist_by, NaturalTransformationData, TwistedData};

/// Verdict of the projectivity criterion: the projection `S -> G/G` induces
/// a surjection `U(S) -> U(G/G)` exactly when U is S-projective.
#[derive(Debug, Clone)]
pub struct ProjectivityReport {
    pub projective: bool,
    /// Invariant factors and free rank of the cokernel (the certificate).
    pub cokernel: FgAbelianGroup,
    /// The matrix of `U_*(pr)` on the orbit bases.
    pub transfer_matrix: IntMatrix,
}

/// Decides S-projectivity of a Green functor through the surjectivity of
/// the transfer along `S -> G/G`.
pub fn is_s_projective(u: &GreenFunctorData, s: &GSet) -> Result<ProjectivityReport, GSetError> {
    if s.size() == 0 {
        return Err(GSetError::EmptyGSet);
    }
    let m = u.mackey();
    let ev_s = m.evaluate(s);
    let point = GSet::point(m.group());
    let ev_pt = m.evaluate(&point);
    let transfer = m.covariant_matrix(&ev_s, &ev_pt, |_| 0);
    let cokernel = cokernel_of(&transfer);
    Ok(ProjectivityReport {
        projective: cokernel.is_trivial(),
        cokernel,
        transfer_matrix: transfer,
    })
}

/// An element `a` of `U(S)` with `U_*(pr)(a) = 1`, when one exists.
pub fn unit_preimage(u: &GreenFunctorData, s: &GSet) -> Result<Option<Vec<BigInt>>, GSetError> {
    let report = is_s_projective(u, s)?;
    let lat = u.mackey().group().subgroups()?;
    let unit = u.unit(lat.full_id());
    Ok(solve_membership(&report.transfer_matrix, &unit).ok())
}

/// Natural splittings of both transformations attached to `S`, constructed
/// from a unit preimage `a` in `U(S)`:
///
/// * `section_of_transfer` (per subgroup H) maps `M(G/H) -> M(S x G/H)` by
///   `m -> a| . pr^*(m)`; composing with the transfer gives the identity.
/// * `retraction_of_coprojection` maps `M(S x G/H) -> M(G/H)` by
///   `m' -> pr_*(a| . m')`; composing after the coprojection gives the
///   identity.
///
/// Both are verified: the splitting identities hold per subgroup and
/// naturality holds on all generating morphisms.
pub struct SplittingData {
    pub twisted: MackeyFunctorData,
    pub transfer: NaturalTransformationData,
    pub coprojection: NaturalTransformationData,
    pub section: NaturalTransformationData,
    pub retraction: NaturalTransformationData,
}

pub fn construct_splittings(
    u: &GreenFunctorData,
    s: &GSet,
    witness: &[BigInt],
) -> Result<SplittingData, GSetError> {
    let m = u.mackey();
    let g = m.group().clone();
    let lat = g.subgroups()?;
    let twist = TwistedData::new(m, s)?;
    let (twisted, transfer, coprojection) = twist_by(m, s)?;
    let ev_s = m.evaluate(s);

    let nsub = lat.subgroups().len();
    let mut sections = Vec::with_capacity(nsub);
    let mut retractions = Vec::with_capacity(nsub);
    for h in 0..nsub {
        let prod_eval = twist.product_eval(h);
        let csize = twist.product_set(h).size() / s.size();
        // a restricted along pr_S: S x G/H -> S.
        let pull_s = m.contravariant_matrix(prod_eval, &ev_s, |p| p / csize);
        let a_restricted = pull_s.mul_vec(witness);
        // Multiplication by a| as a matrix on M(S x G/H), blockwise.
        let mult_a = multiplication_matrix(u, prod_eval, &a_restricted);
        let pull_t = coprojection.components[h].clone();
        let push_t = transfer.components[h].clone();
        let section = &mult_a * &pull_t;
        let retraction = &push_t * &mult_a;
        // Splitting identities.
        let id = IntMatrix::identity(m.rank(h));
        assert_eq!(
            &push_t * &section,
            id,
            "transfer . section must be the identity at subgroup {}",
            h
        );
        assert_eq!(
            &retraction * &pull_t,
            id,
            "retraction . coprojection must be the identity at subgroup {}",
            h
        );
        sections.push(section);
        retractions.push(retraction);
    }
    let section = NaturalTransformationData {
        source: m.clone(),
        target: twisted.clone(),
        components: sections,
    };
    let retraction = NaturalTransformationData {
        source: twisted.clone(),
        target: m.clone(),
        components: retractions,
    };
    section
        .verify_naturality()
        .expect("constructed section must be natural");
    retraction
        .verify_naturality()
        .expect("constructed retraction must be natural");
    Ok(SplittingData {
        twisted,
        transfer,
        coprojection,
        section,
        retraction,
    })
}

/// Multiplication by a fixed vector of `U(T)` as a matrix on the orbit
/// basis: blockwise ring multiplication at each stabilizer.
fn multiplication_matrix(
    u: &GreenFunctorData,
    eval: &Evaluation,
    x: &[BigInt],
) -> IntMatrix {
    let n = eval.total_rank;
    let mut out = IntMatrix::zero(n, n);
    for block in &eval.blocks {
        let h = block.stab_id;
        let xs = &x[block.offset..block.offset + block.rank];
        for j in 0..block.rank {
            let ej: Vec<BigInt> = (0..block.rank)
                .map(|t| BigInt::from(u8::from(t == j)))
                .collect();
            let prod = u.multiply(h, xs, &ej);
            for (i, v) in prod.into_iter().enumerate() {
                if !v.is_zero() {
                    out.set(block.offset + i, block.offset + j, v);
                }
            }
        }
    }
    out
}

/// Searches for an integer retraction of the coprojection `theta^S` by
/// solving the full linear system: splitting identities at every subgroup
/// plus naturality over all generating morphisms. Feasible for small `S`;
/// this is the independent route the projectivity criterion is checked
/// against.
pub fn splitting_by_solving(
    m: &MackeyFunctorData,
    s: &GSet,
) -> Result<Option<Vec<IntMatrix>>, GSetError> {
    let lat = m.group().subgroups()?;
    let (twisted, _transfer, coprojection) = twist_by(m, s)?;
    let nsub = lat.subgroups().len();

    // Unknowns: entries of rho_h (rank(h) x twisted_rank(h)), row-major,
    // concatenated over subgroups.
    let mut offsets = Vec::with_capacity(nsub);
    let mut total = 0usize;
    for h in 0..nsub {
        offsets.push(total);
        total += m.rank(h) * twisted.rank(h);
    }
    let var = |h: usize, i: usize, j: usize, tw_rank: usize| offsets[h] + i * tw_rank + j;

    let mut rows: Vec<Vec<(usize, BigInt)>> = Vec::new();
    let mut rhs: Vec<BigInt> = Vec::new();

    // rho_h . theta^_h = id.
    for h in 0..nsub {
        let theta = &coprojection.components[h];
        let (r, t) = (m.rank(h), twisted.rank(h));
        for i in 0..r {
            for c in 0..r {
                let mut row = Vec::new();
                for j in 0..t {
                    let v = theta.get(j, c);
                    if !v.is_zero() {
                        row.push((var(h, i, j, t), v.clone()));
                    }
                }
                rows.push(row);
                rhs.push(BigInt::from(u8::from(i == c)));
            }
        }
    }

    // Naturality: for every generating morphism with matrices A (on M) and
    // B (on M_S) in matching directions, rho_target . B = A . rho_source.
    let mut add_naturality = |h_from: usize, h_to: usize, a: &IntMatrix, b: &IntMatrix| {
        let (r_to, t_to) = (m.rank(h_to), twisted.rank(h_to));
        let (r_from, t_from) = (m.rank(h_from), twisted.rank(h_from));
        debug_assert_eq!(a.rows(), r_to);
        debug_assert_eq!(a.cols(), r_from);
        debug_assert_eq!(b.rows(), t_to);
        debug_assert_eq!(b.cols(), t_from);
        for i in 0..r_to {
            for c in 0..t_from {
                let mut row: Vec<(usize, BigInt)> = Vec::new();
                // (rho_to . B)_{ic} = sum_j rho_to[i][j] B[j][c]
                for j in 0..t_to {
                    let v = b.get(j, c);
                    if !v.is_zero() {
                        row.push((var(h_to, i, j, t_to), v.clone()));
                    }
                }
                // -(A . rho_from)_{ic} = -sum_k A[i][k] rho_from[k][c]
                for k in 0..r_from {
                    let v = a.get(i, k);
                    if !v.is_zero() {
                        row.push((var(h_from, k, c, t_from), -v.clone()));
                    }
                }
                rows.push(row);
                rhs.push(BigInt::zero());
            }
        }
    };

    for h in 0..nsub {
        for k in lat.contained_in(h) {
            add_naturality(k, h, &m.induction(h, k), &twisted.induction(h, k));
            add_naturality(h, k, &m.restriction(h, k), &twisted.restriction(h, k));
        }
        for &g in m.group().generators() {
            let t = lat.conjugate_id(h, g);
            add_naturality(h, t, &m.conjugation(h, g), &twisted.conjugation(h, g));
        }
    }

    // Assemble and solve.
    let mut system = IntMatrix::zero(rows.len(), total);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            system.add_to(r, *c, v);
        }
    }
    match solve_membership(&system, &rhs) {
        Ok(solution) => {
            let mut out = Vec::with_capacity(nsub);
            for h in 0..nsub {
                let (r, t) = (m.rank(h), twisted.rank(h));
                out.push(IntMatrix::from_fn(r, t, |i, j| {
                    solution[var(h, i, j, t)].clone()
                }));
            }
            Ok(Some(out))
        }
        Err(_) => Ok(None),
    }
}

/// Convenience wrapper: a one followed by zeros (the unit coefficient
/// vector shape used in tests).
pub fn basis_vector(n: usize, i: usize) -> Vec<BigInt> {
    (0..n)
        .map(|t| if t == i { BigInt::one() } else { BigInt::zero() })
        .collect()
}
