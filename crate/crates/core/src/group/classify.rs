use super::{GroupError, SubgroupLattice};

/// Structural classes of finite groups decided by exhaustive search over the
/// enumerated lattice. The p-parameterized classes follow the usual
/// definitions: p-elementary means an internal direct product `C x P` with C
/// cyclic of order prime to p and P a p-group; p-hyperelementary weakens the
/// direct product to an extension `1 -> C -> G -> P -> 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Cyclic,
    PGroup(u64),
    PElementary(u64),
    PHyperelementary(u64),
    Elementary,
    Hyperelementary,
    AllFinite,
}

impl ClassTag {
    pub fn validate(&self) -> Result<(), GroupError> {
        match self {
            ClassTag::PGroup(p) | ClassTag::PElementary(p) | ClassTag::PHyperelementary(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(GroupError::InvalidPrime(*p))
                }
            }
            _ => Ok(()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            ClassTag::Cyclic => "cyclic".into(),
            ClassTag::PGroup(p) => format!("{}-group", p),
            ClassTag::PElementary(p) => format!("{}-elementary", p),
            ClassTag::PHyperelementary(p) => format!("{}-hyperelementary", p),
            ClassTag::Elementary => "elementary".into(),
            ClassTag::Hyperelementary => "hyperelementary".into(),
            ClassTag::AllFinite => "all-finite".into(),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2usize;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// Splits `n` as `p^k * m` with `p` not dividing `m`; returns `(p^k, m)`.
fn p_part(n: usize, p: u64) -> (usize, usize) {
    let p = p as usize;
    let mut pk = 1;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        pk *= p;
    }
    (pk, m)
}

/// Classification of the subgroup `id` within its ambient lattice. Tags must
/// already be validated.
pub(super) fn classify_elements(lat: &SubgroupLattice, id: usize, tag: ClassTag) -> bool {
    let group = lat.group();
    let sub = lat.subgroup(id);
    let n = sub.order;
    match tag {
        ClassTag::AllFinite => true,
        ClassTag::Cyclic => sub
            .elements
            .iter()
            .any(|&x| group.element_order(x) == n),
        ClassTag::PGroup(p) => p_part(n, p).1 == 1,
        ClassTag::PElementary(p) => {
            let (pk, m) = p_part(n, p);
            // Need C cyclic of order m and P of order p^k, both normal in
            // the subgroup, intersecting trivially. Exhaustive over the
            // enumerated lattice.
            let inside = lat.contained_in(id);
            let cyclics: Vec<usize> = inside
                .iter()
                .copied()
                .filter(|&c| {
                    lat.subgroup(c).order == m
                        && classify_elements(lat, c, ClassTag::Cyclic)
                        && lat.is_normal_in(c, id)
                })
                .collect();
            if cyclics.is_empty() {
                return false;
            }
            let p_subs: Vec<usize> = inside
                .iter()
                .copied()
                .filter(|&q| lat.subgroup(q).order == pk && lat.is_normal_in(q, id))
                .collect();
            cyclics.iter().any(|&c| {
                p_subs.iter().any(|&q| {
                    intersection_is_trivial(lat, c, q)
                })
            })
        }
        ClassTag::PHyperelementary(p) => {
            let (_, m) = p_part(n, p);
            // A normal cyclic subgroup of order exactly the p'-part forces
            // the quotient to be a p-group.
            lat.contained_in(id).into_iter().any(|c| {
                lat.subgroup(c).order == m
                    && classify_elements(lat, c, ClassTag::Cyclic)
                    && lat.is_normal_in(c, id)
            })
        }
        ClassTag::Elementary => {
            if n == 1 {
                return true;
            }
            prime_divisors(n)
                .into_iter()
                .any(|p| classify_elements(lat, id, ClassTag::PElementary(p)))
        }
        ClassTag::Hyperelementary => {
            if n == 1 {
                return true;
            }
            prime_divisors(n)
                .into_iter()
                .any(|p| classify_elements(lat, id, ClassTag::PHyperelementary(p)))
        }
    }
}

fn intersection_is_trivial(lat: &SubgroupLattice, a: usize, b: usize) -> bool {
    let bs = &lat.subgroup(b).elements;
    lat.subgroup(a)
        .elements
        .iter()
        .filter(|&&x| x != 0)
        .all(|x| bs.binary_search(x).is_err())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn check(gname: &str, g: &crate::group::FiniteGroup, tag: ClassTag, expect: bool) {
        let lat = g.subgroups().unwrap();
        let full = lat.full_id();
        assert_eq!(
            lat.classify(full, tag).unwrap(),
            expect,
            "{} with {:?}",
            gname,
            tag
        );
    }

    #[test]
    fn trivial_group_is_everything() {
        let g = corpus::cyclic(1);
        check("C1", &g, ClassTag::PElementary(2), true);
        check("C1", &g, ClassTag::Elementary, true);
        check("C1", &g, ClassTag::Cyclic, true);
    }

    #[test]
    fn s3_is_hyperelementary_not_elementary() {
        // C3 is a normal cyclic subgroup with quotient C2, so S3 is
        // 2-hyperelementary; no direct decomposition C x P exists.
        let g = corpus::symmetric(3);
        check("S3", &g, ClassTag::PHyperelementary(2), true);
        check("S3", &g, ClassTag::Elementary, false);
        check("S3", &g, ClassTag::Hyperelementary, true);
        check("S3", &g, ClassTag::PElementary(2), false);
        check("S3", &g, ClassTag::PElementary(3), false);
        check("S3", &g, ClassTag::PHyperelementary(3), false);
    }

    #[test]
    fn c6_is_2_elementary() {
        // C6 = C3 x C2 via the internal direct product search.
        let g = corpus::cyclic(6);
        check("C6", &g, ClassTag::PElementary(2), true);
        check("C6", &g, ClassTag::PElementary(3), true);
        check("C6", &g, ClassTag::PElementary(5), true);
        check("C6", &g, ClassTag::Cyclic, true);
    }

    #[test]
    fn p_groups_are_p_elementary() {
        for g in [corpus::dihedral(4), corpus::quaternion8()] {
            check("2-group", &g, ClassTag::PGroup(2), true);
            check("2-group", &g, ClassTag::PElementary(2), true);
            check("2-group", &g, ClassTag::Elementary, true);
            check("2-group", &g, ClassTag::Cyclic, false);
        }
    }

    #[test]
    fn a4_is_not_hyperelementary() {
        let g = corpus::alternating(4);
        check("A4", &g, ClassTag::Elementary, false);
        check("A4", &g, ClassTag::Hyperelementary, false);
    }

    #[test]
    fn invalid_prime_rejected() {
        let g = corpus::cyclic(2);
        let lat = g.subgroups().unwrap();
        assert!(matches!(
            lat.classify(0, ClassTag::PElementary(4)),
            Err(GroupError::InvalidPrime(4))
        ));
    }

    #[test]
    fn classification_is_conjugation_invariant_and_monotone() {
        let g = corpus::symmetric(4);
        let lat = g.subgroups().unwrap();
        let tags = [
            ClassTag::Cyclic,
            ClassTag::PElementary(2),
            ClassTag::PHyperelementary(2),
            ClassTag::Elementary,
            ClassTag::Hyperelementary,
        ];
        for s in lat.subgroups() {
            for tag in tags {
                let v = lat.classify(s.id, tag).unwrap();
                // Conjugation invariance.
                for ge in g.elements() {
                    let c = lat.conjugate_id(s.id, ge);
                    assert_eq!(lat.classify(c, tag).unwrap(), v);
                }
                // Closure under subgroups.
                if v {
                    for inner in lat.contained_in(s.id) {
                        assert!(
                            lat.classify(inner, tag).unwrap(),
                            "subgroup of a {:?} group must be {:?}",
                            tag,
                            tag
                        );
                    }
                }
            }
            // Elementary implies hyperelementary.
            if lat.classify(s.id, ClassTag::Elementary).unwrap() {
                assert!(lat.classify(s.id, ClassTag::Hyperelementary).unwrap());
            }
        }
    }
}
