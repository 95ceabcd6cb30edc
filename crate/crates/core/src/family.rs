//! Families of subgroups: conjugation-and-subgroup-closed sets, built from
//! classification tags, pulled back along homomorphisms, and combined.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::group::{ClassTag, FiniteGroup, GroupError, GroupHom};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family lives over a different group")]
    FamilyGroupMismatch,
    #[error("family is empty")]
    EmptyFamily,
    #[error("family is not closed under taking subgroups")]
    NotSubgroupClosed,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Well-known family tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyTag {
    /// Finite cyclic subgroups.
    Fcy,
    /// p-elementary subgroups.
    ElementaryP(u64),
    /// p-hyperelementary subgroups.
    HyperelementaryP(u64),
    /// Elementary subgroups (some prime).
    Elementary,
    /// Hyperelementary subgroups (some prime).
    Hyperelementary,
    /// p-subgroups.
    PGroups(u64),
    /// All subgroups.
    Fin,
    /// Only the trivial subgroup.
    Trivial,
}

impl FamilyTag {
    pub fn label(&self) -> String {
        match self {
            FamilyTag::Fcy => "FCY".into(),
            FamilyTag::ElementaryP(p) => format!("E_{}", p),
            FamilyTag::HyperelementaryP(p) => format!("H_{}", p),
            FamilyTag::Elementary => "E".into(),
            FamilyTag::Hyperelementary => "H".into(),
            FamilyTag::PGroups(p) => format!("{}-groups", p),
            FamilyTag::Fin => "FIN".into(),
            FamilyTag::Trivial => "TRIV".into(),
        }
    }

    fn class_tag(&self) -> Option<ClassTag> {
        match self {
            FamilyTag::Fcy => Some(ClassTag::Cyclic),
            FamilyTag::ElementaryP(p) => Some(ClassTag::PElementary(*p)),
            FamilyTag::HyperelementaryP(p) => Some(ClassTag::PHyperelementary(*p)),
            FamilyTag::Elementary => Some(ClassTag::Elementary),
            FamilyTag::Hyperelementary => Some(ClassTag::Hyperelementary),
            FamilyTag::PGroups(p) => Some(ClassTag::PGroup(*p)),
            FamilyTag::Fin => Some(ClassTag::AllFinite),
            FamilyTag::Trivial => None,
        }
    }
}

/// A family of subgroups of a fixed finite group, stored as a set of
/// subgroup conjugacy class ids. Storing classes makes conjugation closure
/// structural; subgroup closure is verified on construction.
#[derive(Clone)]
pub struct FamilySpec {
    group: FiniteGroup,
    member_class_ids: BTreeSet<usize>,
    label: String,
}

impl std::fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FamilySpec({} over order-{} group, {} classes)",
            self.label,
            self.group.order(),
            self.member_class_ids.len()
        )
    }
}

impl FamilySpec {
    /// Builds a family from explicit class ids, verifying closure under
    /// passage to subgroups (conjugation closure is structural).
    pub fn from_class_ids(
        group: &FiniteGroup,
        class_ids: BTreeSet<usize>,
        label: &str,
    ) -> Result<Self, FamilyError> {
        let lat = group.subgroups()?;
        for &cid in &class_ids {
            let rep = lat.class(cid).representative;
            for sub in lat.contained_in(rep) {
                if !class_ids.contains(&lat.subgroup(sub).class_id) {
                    return Err(FamilyError::NotSubgroupClosed);
                }
            }
        }
        Ok(FamilySpec {
            group: group.clone(),
            member_class_ids: class_ids,
            label: label.to_string(),
        })
    }

    /// The family of all subgroups in a classification class, e.g. all
    /// cyclic or all p-elementary subgroups. Closure under subgroups holds
    /// because every such class is subgroup-closed; it is re-verified here.
    pub fn from_tag(group: &FiniteGroup, tag: FamilyTag) -> Result<Self, FamilyError> {
        let lat = group.subgroups()?;
        let mut classes = BTreeSet::new();
        match tag.class_tag() {
            Some(ct) => {
                ct.validate()?;
                for (cid, class) in lat.classes().iter().enumerate() {
                    if lat.classify(class.representative, ct)? {
                        classes.insert(cid);
                    }
                }
            }
            None => {
                classes.insert(lat.subgroup(lat.trivial_id()).class_id);
            }
        }
        Self::from_class_ids(group, classes, &tag.label())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn member_class_ids(&self) -> &BTreeSet<usize> {
        &self.member_class_ids
    }

    pub fn is_empty(&self) -> bool {
        self.member_class_ids.is_empty()
    }

    pub fn contains_class(&self, class_id: usize) -> bool {
        self.member_class_ids.contains(&class_id)
    }

    pub fn contains_subgroup(&self, subgroup_id: usize) -> Result<bool, FamilyError> {
        let lat = self.group.subgroups()?;
        Ok(self.contains_class(lat.subgroup(subgroup_id).class_id))
    }

    /// Whether the whole group belongs to the family.
    pub fn contains_full_group(&self) -> Result<bool, FamilyError> {
        let lat = self.group.subgroups()?;
        Ok(self.contains_class(lat.subgroup(lat.full_id()).class_id))
    }

    /// Representative subgroup ids of the member classes, ascending.
    pub fn class_representatives(&self) -> Result<Vec<usize>, FamilyError> {
        let lat = self.group.subgroups()?;
        Ok(self
            .member_class_ids
            .iter()
            .map(|&cid| lat.class(cid).representative)
            .collect())
    }

    /// Member classes maximal under subconjugacy: no member class sits
    /// strictly inside (a conjugate of) another member.
    pub fn maximal_class_ids(&self) -> Result<Vec<usize>, FamilyError> {
        let lat = self.group.subgroups()?;
        let mut maximal = Vec::new();
        'outer: for &cid in &self.member_class_ids {
            let rep = lat.class(cid).representative;
            for &other in &self.member_class_ids {
                if other == cid {
                    continue;
                }
                // rep strictly inside some member of class `other`?
                for &m in &lat.class(other).members {
                    if lat.subgroup(m).order > lat.subgroup(rep).order
                        && lat.is_contained(rep, m)
                    {
                        continue 'outer;
                    }
                }
            }
            maximal.push(cid);
        }
        Ok(maximal)
    }

    /// Pullback along a homomorphism into this family's group: all
    /// subgroups of the source whose image lies in the family.
    pub fn pullback(&self, phi: &GroupHom) -> Result<FamilySpec, FamilyError> {
        if !FiniteGroup::same(phi.target(), &self.group) {
            return Err(FamilyError::FamilyGroupMismatch);
        }
        let source = phi.source();
        let src_lat = source.subgroups()?;
        let tgt_lat = self.group.subgroups()?;
        let mut classes = BTreeSet::new();
        for sub in src_lat.subgroups() {
            let image = phi.image_of_set(&sub.elements);
            let image_id = tgt_lat
                .id_of(&image)
                .expect("image of a subgroup is a subgroup");
            if self.contains_class(tgt_lat.subgroup(image_id).class_id) {
                classes.insert(sub.class_id);
            }
        }
        FamilySpec::from_class_ids(source, classes, &format!("pullback({})", self.label))
    }

    /// Union or intersection with another family over the same group.
    pub fn combine(&self, other: &FamilySpec, union: bool) -> Result<FamilySpec, FamilyError> {
        if !FiniteGroup::same(&self.group, &other.group) {
            return Err(FamilyError::FamilyGroupMismatch);
        }
        let classes: BTreeSet<usize> = if union {
            self.member_class_ids
                .union(&other.member_class_ids)
                .copied()
                .collect()
        } else {
            self.member_class_ids
                .intersection(&other.member_class_ids)
                .copied()
                .collect()
        };
        let op = if union { "|" } else { "&" };
        FamilySpec::from_class_ids(
            &self.group,
            classes,
            &format!("({}{}{})", self.label, op, other.label),
        )
    }

    /// Report form for JSON output: label plus the element sets of the class
    /// representatives and which classes are maximal.
    pub fn report(&self) -> Result<FamilyReport, FamilyError> {
        let lat = self.group.subgroups()?;
        Ok(FamilyReport {
            label: self.label.clone(),
            class_representatives: self
                .member_class_ids
                .iter()
                .map(|&cid| lat.subgroup(lat.class(cid).representative).elements.clone())
                .collect(),
            maximal_classes: self.maximal_class_ids()?,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub label: String,
    pub class_representatives: Vec<Vec<usize>>,
    pub maximal_classes: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn fin_is_everything() {
        let g = corpus::symmetric(3);
        let fin = FamilySpec::from_tag(&g, FamilyTag::Fin).unwrap();
        assert_eq!(fin.member_class_ids().len(), 4);
        assert!(fin.contains_full_group().unwrap());
    }

    #[test]
    fn fcy_s3_is_three_classes() {
        let g = corpus::symmetric(3);
        let fcy = FamilySpec::from_tag(&g, FamilyTag::Fcy).unwrap();
        assert_eq!(fcy.member_class_ids().len(), 3);
        assert!(!fcy.contains_full_group().unwrap());
        // Maximal members: C2 and C3.
        let lat = g.subgroups().unwrap();
        let mut maximal_orders: Vec<usize> = fcy
            .maximal_class_ids()
            .unwrap()
            .iter()
            .map(|&cid| lat.subgroup(lat.class(cid).representative).order)
            .collect();
        maximal_orders.sort_unstable();
        assert_eq!(maximal_orders, vec![2, 3]);
    }

    #[test]
    fn hyperelementary_family_of_q8_is_all() {
        let g = corpus::quaternion8();
        let h = FamilySpec::from_tag(&g, FamilyTag::Hyperelementary).unwrap();
        assert_eq!(h.member_class_ids().len(), 6);
        assert!(h.contains_full_group().unwrap());
    }

    #[test]
    fn every_family_is_subgroup_closed() {
        for (_, g) in corpus::all() {
            if g.order() > 24 {
                continue;
            }
            let lat = g.subgroups().unwrap();
            for tag in [FamilyTag::Fcy, FamilyTag::Elementary, FamilyTag::Hyperelementary] {
                let fam = FamilySpec::from_tag(&g, tag).unwrap();
                for &cid in fam.member_class_ids() {
                    let rep = lat.class(cid).representative;
                    for inner in lat.contained_in(rep) {
                        assert!(fam.contains_class(lat.subgroup(inner).class_id));
                    }
                }
            }
        }
    }

    #[test]
    fn pullback_examples() {
        let s3 = corpus::symmetric(3);
        let c2 = corpus::cyclic(2);
        // Identity pullback is the identity.
        let fcy = FamilySpec::from_tag(&s3, FamilyTag::Fcy).unwrap();
        let pulled = fcy.pullback(&GroupHom::identity(&s3)).unwrap();
        assert_eq!(pulled.member_class_ids(), fcy.member_class_ids());
        // Through the trivial group everything pulls back to everything.
        let triv_group = corpus::cyclic(1);
        let triv_fam = FamilySpec::from_tag(&triv_group, FamilyTag::Trivial).unwrap();
        let to_trivial = GroupHom::to_trivial(&s3, &triv_group);
        let all = triv_fam.pullback(&to_trivial).unwrap();
        assert_eq!(all.member_class_ids().len(), 4);
        // Sign map: {trivial} pulls back to subgroups of the kernel C3.
        let gen_images: Vec<(usize, usize)> = s3
            .generators()
            .iter()
            .map(|&g| (g, if s3.element_order(g) == 2 { 1 } else { 0 }))
            .collect();
        let sign = GroupHom::build(&s3, &c2, &gen_images).unwrap();
        let triv_c2 = FamilySpec::from_tag(&c2, FamilyTag::Trivial).unwrap();
        let kernel_subs = triv_c2.pullback(&sign).unwrap();
        let lat = s3.subgroups().unwrap();
        let orders: Vec<usize> = kernel_subs
            .class_representatives()
            .unwrap()
            .iter()
            .map(|&id| lat.subgroup(id).order)
            .collect();
        assert_eq!(orders, vec![1, 3]);
    }

    #[test]
    fn pullback_composes_contravariantly() {
        // psi*(phi*F) = (phi . psi)*F
        let s3 = corpus::symmetric(3);
        let c2 = corpus::cyclic(2);
        let gen_images: Vec<(usize, usize)> = s3
            .generators()
            .iter()
            .map(|&g| (g, if s3.element_order(g) == 2 { 1 } else { 0 }))
            .collect();
        let phi = GroupHom::build(&s3, &c2, &gen_images).unwrap();
        // psi: C2 -> S3 sending the generator to a transposition.
        let transposition = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let psi = GroupHom::build(&c2, &s3, &[(1, transposition)]).unwrap();
        let f = FamilySpec::from_tag(&c2, FamilyTag::Trivial).unwrap();
        let via_phi = f.pullback(&phi).unwrap();
        let lhs = via_phi.pullback(&psi).unwrap();
        let composed = GroupHom::compose(&phi, &psi);
        let rhs = f.pullback(&composed).unwrap();
        assert_eq!(lhs.member_class_ids(), rhs.member_class_ids());
    }

    #[test]
    fn inclusion_pullback_is_intersection() {
        // For an inclusion i: K -> G, i*F = {H <= K : H in F}.
        let g = corpus::symmetric(4);
        let lat = g.subgroups().unwrap();
        let s3_sub = lat.subgroups().iter().find(|s| s.order == 6).unwrap();
        let (k, elems) = g.subgroup_as_group(&s3_sub.elements).unwrap();
        let incl = GroupHom::inclusion(&k, &g, &elems);
        let fcy_g = FamilySpec::from_tag(&g, FamilyTag::Fcy).unwrap();
        let pulled = fcy_g.pullback(&incl).unwrap();
        let expected = FamilySpec::from_tag(&k, FamilyTag::Fcy).unwrap();
        assert_eq!(pulled.member_class_ids(), expected.member_class_ids());
    }

    #[test]
    fn combine_examples() {
        let g = corpus::quaternion8();
        let fcy = FamilySpec::from_tag(&g, FamilyTag::Fcy).unwrap();
        let e = FamilySpec::from_tag(&g, FamilyTag::Elementary).unwrap();
        // F union F = F.
        let ff = fcy.combine(&fcy, true).unwrap();
        assert_eq!(ff.member_class_ids(), fcy.member_class_ids());
        // Cyclic groups are elementary, so E union FCY = E.
        let union = e.combine(&fcy, true).unwrap();
        assert_eq!(union.member_class_ids(), e.member_class_ids());
        // FCY(S3) intersect {2-groups-closed family} = {1, C2}.
        let s3 = corpus::symmetric(3);
        let fcy3 = FamilySpec::from_tag(&s3, FamilyTag::Fcy).unwrap();
        let e2 = FamilySpec::from_tag(&s3, FamilyTag::PGroups(2)).unwrap();
        let meet = fcy3.combine(&e2, false).unwrap();
        let lat = s3.subgroups().unwrap();
        let orders: Vec<usize> = meet
            .class_representatives()
            .unwrap()
            .iter()
            .map(|&id| lat.subgroup(id).order)
            .collect();
        assert_eq!(orders, vec![1, 2]);
        // Mismatched groups rejected.
        assert!(matches!(
            fcy.combine(&fcy3, true),
            Err(FamilyError::FamilyGroupMismatch)
        ));
    }
}
