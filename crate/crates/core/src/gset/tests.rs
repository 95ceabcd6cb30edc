use super::*;
use crate::corpus;

fn s3_c2_coset_space() -> (FiniteGroup, GSet) {
    let g = corpus::symmetric(3);
    let lat = g.subgroups().unwrap();
    let c2 = lat
        .subgroups()
        .iter()
        .find(|s| s.order == 2)
        .unwrap()
        .elements
        .clone();
    let gs = GSet::coset_space(&g, &c2).unwrap();
    (g, gs)
}

#[test]
fn coset_space_shapes() {
    let g = corpus::symmetric(3);
    let lat = g.subgroups().unwrap();
    // G/G is a point.
    let full = GSet::coset_space(&g, &lat.subgroup(lat.full_id()).elements).unwrap();
    assert_eq!(full.size(), 1);
    // G/1 is free of size |G|.
    let free = GSet::coset_space(&g, &[0]).unwrap();
    assert_eq!(free.size(), 6);
    let reps = free.orbit_reps_with_stabilizers();
    assert_eq!(reps.len(), 1);
    assert_eq!(reps[0].1, vec![0]);
    // Not-a-subgroup input is rejected.
    let two_elt = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
    assert!(GSet::coset_space(&g, &[0, two_elt]).is_err());
}

#[test]
fn s3_mod_c2_has_conjugate_stabilizers() {
    let (g, gs) = s3_c2_coset_space();
    assert_eq!(gs.size(), 3);
    let lat = g.subgroups().unwrap();
    let reps = gs.orbit_reps_with_stabilizers();
    assert_eq!(reps.len(), 1);
    // Base point stabilizer is exactly the C2 we started from, and the
    // point stabilizers run over its three conjugates.
    let base_stab = lat.id_of(&reps[0].1).unwrap();
    assert_eq!(lat.subgroup(base_stab).order, 2);
    let mut stab_ids = std::collections::BTreeSet::new();
    for x in 0..gs.size() {
        let stab: Vec<usize> = g.elements().filter(|&h| gs.apply(h, x) == x).collect();
        stab_ids.insert(lat.id_of(&stab).unwrap());
    }
    assert_eq!(stab_ids.len(), 3);
    assert!(stab_ids
        .iter()
        .all(|&id| lat.subgroup(id).class_id == lat.subgroup(base_stab).class_id));
}

#[test]
fn burnside_orbit_count_identity() {
    // #orbits * |G| = sum over g of |Fix(g)| for every constructed G-set.
    let g = corpus::symmetric(4);
    let lat = g.subgroups().unwrap();
    for sub in lat.subgroups().iter().step_by(5) {
        let gs = GSet::coset_space(&g, &sub.elements).unwrap();
        let orbit_count = gs.orbit_data().orbit_count();
        let fix_sum: usize = g.elements().map(|h| gs.fixed_points(&[h]).len()).sum();
        assert_eq!(orbit_count * g.order(), fix_sum);
    }
}

#[test]
fn product_of_s3_c2_with_itself() {
    // 9 points in 2 orbits with stabilizer classes [C2] and [1], matching
    // the two double cosets C2\S3/C2 (orbit sizes 3 and 6).
    let (g, gs) = s3_c2_coset_space();
    let prod = gs.product(&gs, DEFAULT_PRODUCT_CAP).unwrap();
    assert_eq!(prod.size(), 9);
    let reps = prod.orbit_reps_with_stabilizers();
    assert_eq!(reps.len(), 2);
    let mut sizes: Vec<usize> = reps.iter().map(|(_, s)| g.order() / s.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![3, 6]);
    let mut stab_orders: Vec<usize> = reps.iter().map(|(_, s)| s.len()).collect();
    stab_orders.sort_unstable();
    assert_eq!(stab_orders, vec![1, 2]);
}

#[test]
fn pullback_over_point_is_product() {
    let (_, gs) = s3_c2_coset_space();
    let to_pt = GMap::to_point(&gs);
    let square = CartesianSquare::pullback(&to_pt, &to_pt).unwrap();
    assert_eq!(square.corner.size(), 9);
    // Projections are equivariant by construction; orbit structure matches
    // the direct product route.
    let direct = gs.product(&gs, DEFAULT_PRODUCT_CAP).unwrap();
    assert_eq!(
        square.corner.orbit_data().orbit_count(),
        direct.orbit_data().orbit_count()
    );
}

#[test]
fn pullback_along_identity_is_isomorphic_to_source() {
    let (_, gs) = s3_c2_coset_space();
    let id = GMap::identity(&gs);
    let to_self = GMap::identity(&gs);
    let square = CartesianSquare::pullback(&id, &to_self).unwrap();
    assert_eq!(square.corner.size(), gs.size());
    // The first projection is a bijection.
    let mut seen: Vec<bool> = vec![false; gs.size()];
    for i in 0..square.corner.size() {
        seen[square.proj1.apply(i)] = true;
    }
    assert!(seen.into_iter().all(|b| b));
}

#[test]
fn gmap_counts_match_fixed_points() {
    let g = corpus::symmetric(3);
    let lat = g.subgroups().unwrap();
    let point = GSet::point(&g);
    let free = GSet::coset_space(&g, &[0]).unwrap();
    // maps(G/H, G/G) = 1 for every H.
    for sub in lat.subgroups() {
        let s = GSet::coset_space(&g, &sub.elements).unwrap();
        assert_eq!(enumerate_gmaps(&s, &point, 1000).unwrap().len(), 1);
    }
    // maps(G/1, G/1) = |G|.
    assert_eq!(enumerate_gmaps(&free, &free, 1000).unwrap().len(), 6);
    // maps(G/C2, G/C3) = 0: no point of G/C3 is fixed by a C2.
    let c2 = lat.subgroups().iter().find(|s| s.order == 2).unwrap();
    let c3 = lat.subgroups().iter().find(|s| s.order == 3).unwrap();
    let s_c2 = GSet::coset_space(&g, &c2.elements).unwrap();
    let s_c3 = GSet::coset_space(&g, &c3.elements).unwrap();
    assert!(enumerate_gmaps(&s_c2, &s_c3, 1000).unwrap().is_empty());
    // General identity: #maps(G/H, T) = |T^H|.
    for sub in lat.subgroups() {
        let s = GSet::coset_space(&g, &sub.elements).unwrap();
        for target in [&s_c2, &s_c3, &free] {
            let count = enumerate_gmaps(&s, target, 1000).unwrap().len();
            assert_eq!(count, target.fixed_points(&sub.elements).len());
        }
    }
}

#[test]
fn fixed_points_examples() {
    let (g, gs) = s3_c2_coset_space();
    let lat = g.subgroups().unwrap();
    let c3 = lat.subgroups().iter().find(|s| s.order == 3).unwrap();
    assert!(gs.fixed_points(&c3.elements).is_empty());
}

#[test]
fn union_and_empty() {
    let (_, gs) = s3_c2_coset_space();
    let empty = GSet::empty(gs.group());
    let u = empty.disjoint_union(&gs).unwrap();
    assert_eq!(u.size(), gs.size());
    // Zero-fold product is the one-point set.
    let p0 = gs.power(0, 10).unwrap();
    assert_eq!(p0.size(), 1);
}

#[test]
fn product_cap_enforced() {
    let (_, gs) = s3_c2_coset_space();
    assert!(matches!(
        gs.power(10, DEFAULT_PRODUCT_CAP),
        Err(GSetError::CapExceeded(..))
    ));
}

#[test]
fn mismatched_groups_rejected() {
    let a = corpus::cyclic(2);
    let b = corpus::cyclic(2);
    let sa = GSet::point(&a);
    let sb = GSet::point(&b);
    assert!(matches!(
        sa.product(&sb, 100),
        Err(GSetError::MismatchedGroups)
    ));
}

#[test]
fn lazy_power_matches_dense_power() {
    use super::action::{materialize, GAction, PowerAction};
    let (_, gs) = s3_c2_coset_space();
    let dense = gs.power(3, DEFAULT_PRODUCT_CAP).unwrap();
    let lazy = PowerAction::new(&gs, 3);
    assert_eq!(dense.size(), lazy.size());
    for g in gs.group().elements() {
        for x in 0..dense.size() {
            assert_eq!(dense.apply(g, x), lazy.act(g, x));
        }
    }
    let mat = materialize(&lazy);
    assert_eq!(mat.size(), dense.size());
    // Orbit scans agree as well.
    assert_eq!(
        dense.orbit_data().orbit_count(),
        OrbitData::compute(&lazy).orbit_count()
    );
}

#[test]
fn product_orbits_match_double_cosets() {
    // Orbits of G/H x G/K correspond to double cosets H\G/K.
    let g = corpus::symmetric(4);
    let lat = g.subgroups().unwrap();
    for (hi, ki) in [(3usize, 7usize), (2, 2), (10, 4)] {
        let h = &lat.subgroup(hi % lat.subgroups().len()).elements;
        let k = &lat.subgroup(ki % lat.subgroups().len()).elements;
        let sh = GSet::coset_space(&g, h).unwrap();
        let sk = GSet::coset_space(&g, k).unwrap();
        let prod = sh.product(&sk, DEFAULT_PRODUCT_CAP).unwrap();
        // Count double cosets HgK directly.
        let mut seen = vec![false; g.order()];
        let mut dc = 0;
        for x in g.elements() {
            if seen[x] {
                continue;
            }
            dc += 1;
            for &a in h {
                for &b in k {
                    seen[g.mul(g.mul(a, x), b)] = true;
                }
            }
        }
        assert_eq!(prod.orbit_data().orbit_count(), dc);
    }
}
