use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;

use super::classify::{classify_elements, ClassTag};
use super::{FiniteGroup, GroupError};

/// One enumerated subgroup. `elements` is sorted and always contains 0.
#[derive(Debug, Clone)]
pub struct SubgroupRecord {
    pub elements: Vec<usize>,
    pub order: usize,
    /// Index into the lattice's subgroup list.
    pub id: usize,
    /// Index of this subgroup's conjugacy class.
    pub class_id: usize,
    pub is_normal: bool,
    /// An element `u` with `u H u^{-1}` equal to the class representative.
    pub rep_conjugator: usize,
}

/// A conjugacy class of subgroups. The representative is the member with
/// lexicographically least element set (they all share one order).
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Complete subgroup lattice of a finite group, with conjugacy classes and
/// cached classification verdicts.
pub struct SubgroupLattice {
    group: FiniteGroup,
    subgroups: Vec<SubgroupRecord>,
    classes: Vec<SubgroupClass>,
    by_elements: BTreeMap<Vec<usize>, usize>,
    tag_cache: Mutex<BTreeMap<(usize, ClassTag), bool>>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubgroupLattice({} subgroups in {} classes)",
            self.subgroups.len(),
            self.classes.len()
        )
    }
}

impl SubgroupLattice {
    /// Enumerates every subgroup by cyclic extension: all cyclic subgroups
    /// first, then closure under joins with cyclic subgroups until stable.
    /// Every subgroup is the join of its cyclic subgroups, so this is
    /// complete.
    pub fn enumerate(group: &FiniteGroup) -> Self {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(vec![0]);
        let mut cyclics: Vec<Vec<usize>> = Vec::new();
        for x in 1..group.order() {
            let c = group.closure(&[x]);
            if seen.insert(c.clone()) {
                cyclics.push(c);
            }
        }
        let mut worklist: Vec<Vec<usize>> = seen.iter().cloned().collect();
        while let Some(h) = worklist.pop() {
            for c in &cyclics {
                if c.iter().all(|x| h.binary_search(x).is_ok()) {
                    continue;
                }
                let seed: Vec<usize> = h.iter().chain(c.iter()).copied().collect();
                let join = group.closure(&seed);
                if seen.insert(join.clone()) {
                    worklist.push(join);
                }
            }
        }

        // Deterministic global order: by order, then lexicographic elements.
        let mut sets: Vec<Vec<usize>> = seen.into_iter().collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

        let by_elements: BTreeMap<Vec<usize>, usize> = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();

        // Conjugacy classes. Scanning in sorted order makes the first member
        // of each class its lexicographically least element set.
        let mut class_of = vec![usize::MAX; sets.len()];
        let mut conjugator = vec![0usize; sets.len()];
        let mut classes: Vec<SubgroupClass> = Vec::new();
        for i in 0..sets.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![i];
            class_of[i] = cid;
            conjugator[i] = 0;
            for g in group.elements() {
                let mut conj: Vec<usize> = sets[i]
                    .iter()
                    .map(|&x| group.conjugate(g, x))
                    .collect();
                conj.sort_unstable();
                let j = by_elements[&conj];
                if class_of[j] == usize::MAX {
                    class_of[j] = cid;
                    // g * rep * g^{-1} = member j, so member j conjugates
                    // back to the representative by g^{-1}... we store u
                    // with u * H_j * u^{-1} = rep, i.e. u = g^{-1}.
                    conjugator[j] = group.inv(g);
                    members.push(j);
                }
            }
            members.sort_unstable();
            classes.push(SubgroupClass {
                representative: i,
                members,
            });
        }

        let subgroups: Vec<SubgroupRecord> = sets
            .iter()
            .enumerate()
            .map(|(i, s)| SubgroupRecord {
                elements: s.clone(),
                order: s.len(),
                id: i,
                class_id: class_of[i],
                is_normal: classes[class_of[i]].members.len() == 1,
                rep_conjugator: conjugator[i],
            })
            .collect();

        SubgroupLattice {
            group: group.clone(),
            subgroups,
            classes,
            by_elements,
            tag_cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[SubgroupRecord] {
        &self.subgroups
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn subgroup(&self, id: usize) -> &SubgroupRecord {
        &self.subgroups[id]
    }

    pub fn class(&self, class_id: usize) -> &SubgroupClass {
        &self.classes[class_id]
    }

    /// Id of the subgroup with exactly this element set.
    pub fn id_of(&self, elements: &[usize]) -> Option<usize> {
        let mut key = elements.to_vec();
        key.sort_unstable();
        key.dedup();
        self.by_elements.get(&key).copied()
    }

    pub fn trivial_id(&self) -> usize {
        0
    }

    pub fn full_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Containment test between enumerated subgroups.
    pub fn is_contained(&self, inner: usize, outer: usize) -> bool {
        let big = &self.subgroups[outer].elements;
        self.subgroups[inner]
            .elements
            .iter()
            .all(|x| big.binary_search(x).is_ok())
    }

    /// Ids of all subgroups contained in `outer`, ascending.
    pub fn contained_in(&self, outer: usize) -> Vec<usize> {
        (0..self.subgroups.len())
            .filter(|&i| self.is_contained(i, outer))
            .collect()
    }

    /// Id of `g * H * g^{-1}`.
    pub fn conjugate_id(&self, id: usize, g: usize) -> usize {
        let mut conj: Vec<usize> = self.subgroups[id]
            .elements
            .iter()
            .map(|&x| self.group.conjugate(g, x))
            .collect();
        conj.sort_unstable();
        self.by_elements[&conj]
    }

    /// Whether `inner` is normal inside `outer` (both must satisfy
    /// containment).
    pub fn is_normal_in(&self, inner: usize, outer: usize) -> bool {
        let outer_elems = &self.subgroups[outer].elements;
        outer_elems
            .iter()
            .all(|&g| self.conjugate_id(inner, g) == inner)
    }

    /// Classification verdict for a subgroup, cached per conjugacy class.
    pub fn classify(&self, id: usize, tag: ClassTag) -> Result<bool, GroupError> {
        tag.validate()?;
        let class_id = self.subgroups[id].class_id;
        if let Some(&v) = self.tag_cache.lock().unwrap().get(&(class_id, tag)) {
            return Ok(v);
        }
        let rep = self.classes[class_id].representative;
        let v = classify_elements(self, rep, tag);
        self.tag_cache
            .lock()
            .unwrap()
            .insert((class_id, tag), v);
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn cyclic_prime_has_two_subgroups() {
        for p in [2usize, 3, 5, 7] {
            let g = corpus::cyclic(p);
            let lat = g.subgroups().unwrap();
            assert_eq!(lat.subgroups().len(), 2);
            assert_eq!(lat.classes().len(), 2);
        }
    }

    #[test]
    fn s3_lattice() {
        // Brute-force oracle: 6 subgroups in 4 classes; class sizes sum to 6.
        let g = corpus::symmetric(3);
        let lat = g.subgroups().unwrap();
        assert_eq!(lat.subgroups().len(), 6);
        assert_eq!(lat.classes().len(), 4);
        let mut sizes: Vec<usize> = lat.classes().iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 3]);
        let orders: Vec<usize> = lat.subgroups().iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        // Lagrange.
        assert!(orders.iter().all(|o| 6 % o == 0));
    }

    #[test]
    fn q8_all_subgroups_normal() {
        let g = corpus::quaternion8();
        let lat = g.subgroups().unwrap();
        assert_eq!(lat.subgroups().len(), 6);
        assert_eq!(lat.classes().len(), 6);
        assert!(lat.subgroups().iter().all(|s| s.is_normal));
    }

    #[test]
    fn conjugates_share_class_and_conjugator_works() {
        let g = corpus::symmetric(4);
        let lat = g.subgroups().unwrap();
        for s in lat.subgroups() {
            for ge in g.elements() {
                let cid = lat.conjugate_id(s.id, ge);
                assert_eq!(lat.subgroup(cid).class_id, s.class_id);
            }
            // rep_conjugator maps this subgroup onto its representative.
            let rep = lat.class(s.class_id).representative;
            assert_eq!(lat.conjugate_id(s.id, s.rep_conjugator), rep);
        }
        assert_eq!(lat.subgroups().len(), 30);
        assert_eq!(lat.classes().len(), 11);
    }

    #[test]
    fn a5_count() {
        let g = corpus::alternating(5);
        let lat = g.subgroups().unwrap();
        assert_eq!(lat.subgroups().len(), 59);
        assert_eq!(lat.classes().len(), 9);
    }

    #[test]
    fn order_cap_enforced() {
        let g = corpus::cyclic(12);
        assert!(matches!(
            g.subgroup_lattice(10),
            Err(GroupError::OrderCapExceeded(12, 10))
        ));
    }
}
