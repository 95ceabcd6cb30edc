use super::{FiniteGroup, GroupError};

/// A homomorphism between finite groups, stored as the full element map.
#[derive(Clone)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<usize>,
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, kernel order {})",
            self.source.order(),
            self.target.order(),
            self.kernel_elements().len()
        )
    }
}

impl GroupHom {
    /// Extends an assignment on generators to the whole group, or reports
    /// why it cannot be done. `generator_images` pairs source generators
    /// with target elements; every generator of `source` must appear.
    pub fn build(
        source: &FiniteGroup,
        target: &FiniteGroup,
        generator_images: &[(usize, usize)],
    ) -> Result<Self, GroupError> {
        for &g in source.generators() {
            if !generator_images.iter().any(|&(x, _)| x == g) {
                return Err(GroupError::NotDefinedOnGenerators(g));
            }
        }
        let mut images = vec![usize::MAX; source.order()];
        images[0] = 0;
        for &(x, y) in generator_images {
            if x >= source.order() || y >= target.order() {
                return Err(GroupError::NotAHomomorphism(x, y));
            }
            if images[x] != usize::MAX && images[x] != y {
                return Err(GroupError::NotAHomomorphism(x, x));
            }
            images[x] = y;
        }
        // Propagate: phi(x * g) = phi(x) * phi(g) over assigned seeds.
        let seeds: Vec<usize> = generator_images.iter().map(|&(x, _)| x).collect();
        let mut frontier: Vec<usize> = vec![0];
        frontier.extend(&seeds);
        while let Some(x) = frontier.pop() {
            for &g in &seeds {
                let xg = source.mul(x, g);
                let img = target.mul(images[x], images[g]);
                if images[xg] == usize::MAX {
                    images[xg] = img;
                    frontier.push(xg);
                } else if images[xg] != img {
                    return Err(GroupError::NotAHomomorphism(x, g));
                }
            }
        }
        if images.iter().any(|&v| v == usize::MAX) {
            // Generators failed to generate; the group constructor prevents
            // this for its own generator set, but be defensive for custom
            // seeds.
            return Err(GroupError::NotDefinedOnGenerators(
                images.iter().position(|&v| v == usize::MAX).unwrap(),
            ));
        }
        // Full verification.
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(GroupError::NotAHomomorphism(a, b));
                }
            }
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images: (0..group.order()).collect(),
        }
    }

    /// The unique map to the trivial group.
    pub fn to_trivial(source: &FiniteGroup, trivial: &FiniteGroup) -> Self {
        assert_eq!(trivial.order(), 1);
        GroupHom {
            source: source.clone(),
            target: trivial.clone(),
            images: vec![0; source.order()],
        }
    }

    /// Inclusion of a subgroup, where `elements` lists the subgroup's
    /// members in the order used by `sub`'s indexing.
    pub fn inclusion(sub: &FiniteGroup, ambient: &FiniteGroup, elements: &[usize]) -> Self {
        assert_eq!(sub.order(), elements.len());
        GroupHom {
            source: sub.clone(),
            target: ambient.clone(),
            images: elements.to_vec(),
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// phi . psi, applying `psi` first.
    pub fn compose(phi: &GroupHom, psi: &GroupHom) -> GroupHom {
        assert!(FiniteGroup::same(psi.target(), phi.source()));
        GroupHom {
            source: psi.source.clone(),
            target: phi.target.clone(),
            images: psi.images.iter().map(|&x| phi.images[x]).collect(),
        }
    }

    pub fn kernel_elements(&self) -> Vec<usize> {
        (0..self.source.order())
            .filter(|&x| self.images[x] == 0)
            .collect()
    }

    pub fn image_elements(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.images.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Image of a subgroup's element set, sorted.
    pub fn image_of_set(&self, elements: &[usize]) -> Vec<usize> {
        let mut img: Vec<usize> = elements.iter().map(|&x| self.images[x]).collect();
        img.sort_unstable();
        img.dedup();
        img
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn identity_hom() {
        let g = corpus::symmetric(3);
        let id = GroupHom::identity(&g);
        assert_eq!(id.kernel_elements(), vec![0]);
        assert_eq!(id.image_elements().len(), 6);
    }

    #[test]
    fn sign_map_s3_to_c2() {
        let s3 = corpus::symmetric(3);
        let c2 = corpus::cyclic(2);
        // Send every transposition to the generator, 3-cycles to identity.
        let gen_images: Vec<(usize, usize)> = s3
            .generators()
            .iter()
            .map(|&g| {
                let ord = s3.element_order(g);
                (g, if ord == 2 { 1 } else { 0 })
            })
            .collect();
        let sign = GroupHom::build(&s3, &c2, &gen_images).unwrap();
        let kernel = sign.kernel_elements();
        assert_eq!(kernel.len(), 3);
        let lat = s3.subgroups().unwrap();
        let kid = lat.id_of(&kernel).unwrap();
        assert_eq!(lat.subgroup(kid).order, 3);
    }

    #[test]
    fn order_obstruction_detected() {
        // S3 -> C3 sending a transposition to a generator cannot extend.
        let s3 = corpus::symmetric(3);
        let c3 = corpus::cyclic(3);
        let gen_images: Vec<(usize, usize)> = s3
            .generators()
            .iter()
            .map(|&g| {
                let ord = s3.element_order(g);
                (g, if ord == 2 { 1 } else { 0 })
            })
            .collect();
        assert!(matches!(
            GroupHom::build(&s3, &c3, &gen_images),
            Err(GroupError::NotAHomomorphism(..))
        ));
    }

    #[test]
    fn missing_generator_detected() {
        let s3 = corpus::symmetric(3);
        let c2 = corpus::cyclic(2);
        let first = s3.generators()[0];
        assert!(matches!(
            GroupHom::build(&s3, &c2, &[(first, 1)]),
            Err(GroupError::NotDefinedOnGenerators(_))
        ));
    }
}
