use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gset::{CartesianSquare, GMap, GSet, GSetError};
use crate::linalg::IntMatrix;

use super::data::MackeyFunctorData;

/// Failure report for a double-coset check: the two composite matrices and
/// a basis vector on which they disagree.
#[derive(Debug, Clone)]
pub struct AxiomViolation {
    pub witness_column: usize,
    pub via_corner: Vec<BigInt>,
    pub via_base: Vec<BigInt>,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "double coset formula fails on basis vector {}: {:?} != {:?}",
            self.witness_column, self.via_corner, self.via_base
        )
    }
}

/// Verifies the double coset formula `M_*(p1) . M^*(p2) = M^*(f1) . M_*(f2)`
/// on a cartesian square, both as matrices `M(S2) -> M(S1)`.
pub fn check_double_coset(
    m: &MackeyFunctorData,
    square: &CartesianSquare,
) -> Result<(), AxiomViolation> {
    let ev_corner = m.evaluate(&square.corner);
    let ev_s1 = m.evaluate(square.proj1.target());
    let ev_s2 = m.evaluate(square.proj2.target());
    let ev_s0 = m.evaluate(square.f1.target());

    let push_p1 = m.covariant_matrix(&ev_corner, &ev_s1, |x| square.proj1.apply(x));
    let pull_p2 = m.contravariant_matrix(&ev_corner, &ev_s2, |x| square.proj2.apply(x));
    let pull_f1 = m.contravariant_matrix(&ev_s1, &ev_s0, |x| square.f1.apply(x));
    let push_f2 = m.covariant_matrix(&ev_s2, &ev_s0, |x| square.f2.apply(x));

    let via_corner = &push_p1 * &pull_p2;
    let via_base = &pull_f1 * &push_f2;
    if via_corner == via_base {
        return Ok(());
    }
    let col = (0..via_corner.cols())
        .find(|&j| via_corner.column(j) != via_base.column(j))
        .expect("matrices differ");
    Err(AxiomViolation {
        witness_column: col,
        via_corner: via_corner.column(col),
        via_base: via_base.column(col),
    })
}

/// Additivity: with the orbit-block bases, `M(S0 + S1)` must literally be
/// `M(S0) + M(S1)`; the inclusion-induced matrices must compose to the
/// identity.
pub fn check_additivity(m: &MackeyFunctorData, s0: &GSet, s1: &GSet) -> Result<(), String> {
    let union = s0
        .disjoint_union(s1)
        .map_err(|e| format!("union failed: {e}"))?;
    let ev_union = m.evaluate(&union);
    let ev0 = m.evaluate(s0);
    let ev1 = m.evaluate(s1);
    if ev_union.total_rank != ev0.total_rank + ev1.total_rank {
        return Err("rank additivity failed".into());
    }
    let push0 = m.covariant_matrix(&ev0, &ev_union, |x| x);
    let push1 = m.covariant_matrix(&ev1, &ev_union, |x| x + s0.size());
    let pull0 = m.contravariant_matrix(&ev0, &ev_union, |x| x);
    let pull1 = m.contravariant_matrix(&ev1, &ev_union, |x| x + s0.size());
    // (M^*(i_0) x M^*(i_1)) . (M_*(i_0) + M_*(i_1)) = id
    let stacked_push = stack_cols(&push0, &push1);
    let stacked_pull = stack_rows(&pull0, &pull1);
    let composite = &stacked_pull * &stacked_push;
    if composite != IntMatrix::identity(composite.rows()) {
        return Err("additivity composite is not the identity".into());
    }
    Ok(())
}

fn stack_cols(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.hstack(b).expect("same row count")
}

fn stack_rows(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.transpose()
        .hstack(&b.transpose())
        .expect("same col count")
        .transpose()
}

/// The default deterministic square sample: for every subgroup K (class
/// representatives) and every pair of Burnside-basis subgroups of K, the
/// pullback of the two coset projections into G/K. These squares realize
/// exactly the double-coset decompositions.
pub fn orbit_projection_squares(
    m: &MackeyFunctorData,
    size_cap: usize,
) -> Result<Vec<CartesianSquare>, GSetError> {
    let g = m.group();
    let lat = g.subgroups()?;
    let mut out = Vec::new();
    for class in lat.classes() {
        let k = class.representative;
        let target = GSet::coset_space(g, &lat.subgroup(k).elements)?;
        // Subgroups of K up to K-conjugacy, by least lattice id.
        let mut reps: Vec<usize> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for sub in lat.contained_in(k) {
            if seen.contains(&sub) {
                continue;
            }
            reps.push(sub);
            for &e in &lat.subgroup(k).elements {
                seen.insert(lat.conjugate_id(sub, e));
            }
        }
        for &h1 in &reps {
            for &h2 in &reps {
                let s1 = GSet::coset_space(g, &lat.subgroup(h1).elements)?;
                let s2 = GSet::coset_space(g, &lat.subgroup(h2).elements)?;
                if s1.size() * s2.size() > size_cap {
                    continue;
                }
                let f1 = coset_projection(&s1, &target)?;
                let f2 = coset_projection(&s2, &target)?;
                out.push(CartesianSquare::pullback(&f1, &f2)?);
            }
        }
    }
    Ok(out)
}

/// The projection `G/H -> G/K` for `H <= K`, sending `gH` to `gK`. The
/// equivariance validation inside `GMap::new` rejects pairs where H is not
/// actually contained in K.
pub fn coset_projection(source: &GSet, target: &GSet) -> Result<GMap, GSetError> {
    // Point x of G/H is the coset of its transporter; point 0 is always
    // the identity coset.
    let src_orbits = source.orbit_data();
    let mut point_map = vec![0usize; source.size()];
    for x in 0..source.size() {
        let t = src_orbits.transporter(x);
        point_map[x] = target.apply(t, 0);
    }
    GMap::new(source, target, point_map)
}

/// Seeded random squares: random coset-space legs over a random base orbit,
/// with maps chosen uniformly from the available equivariant choices.
pub fn random_squares(
    m: &MackeyFunctorData,
    count: usize,
    seed: u64,
    size_cap: usize,
) -> Result<Vec<CartesianSquare>, GSetError> {
    let g = m.group();
    let lat = g.subgroups()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nsub = lat.subgroups().len();
    let mut out = Vec::new();
    let mut guard = 0;
    while out.len() < count && guard < count * 50 {
        guard += 1;
        let k0 = rng.gen_range(0..nsub);
        let s0 = GSet::coset_space(g, &lat.subgroup(k0).elements)?;
        // Legs: disjoint unions of one or two orbits.
        let mut pick_leg = |rng: &mut ChaCha8Rng| -> Result<GSet, GSetError> {
            let a = rng.gen_range(0..nsub);
            let sa = GSet::coset_space(g, &lat.subgroup(a).elements)?;
            if rng.gen_bool(0.4) {
                let b = rng.gen_range(0..nsub);
                let sb = GSet::coset_space(g, &lat.subgroup(b).elements)?;
                sa.disjoint_union(&sb)
            } else {
                Ok(sa)
            }
        };
        let s1 = pick_leg(&mut rng)?;
        let s2 = pick_leg(&mut rng)?;
        if s1.size() * s2.size() > size_cap {
            continue;
        }
        let (Some(f1), Some(f2)) = (
            random_gmap(&s1, &s0, &mut rng),
            random_gmap(&s2, &s0, &mut rng),
        ) else {
            continue;
        };
        out.push(CartesianSquare::pullback(&f1, &f2)?);
    }
    Ok(out)
}

/// A uniformly random equivariant map, if any exists: picks a random fixed
/// point of the stabilizer for each orbit base.
fn random_gmap(s: &GSet, t: &GSet, rng: &mut ChaCha8Rng) -> Option<GMap> {
    let orbits = s.orbit_data();
    let mut point_map = vec![usize::MAX; s.size()];
    for orbit in orbits.orbits() {
        let stab = orbits.stabilizer_of_base(s, orbit);
        let fixed = t.fixed_points(&stab);
        if fixed.is_empty() {
            return None;
        }
        let image = fixed[rng.gen_range(0..fixed.len())];
        for x in orbits.orbit_points(orbit) {
            point_map[x] = t.apply(orbits.transporter(x), image);
        }
    }
    Some(GMap::new(s, t, point_map).expect("constructed map is equivariant"))
}
