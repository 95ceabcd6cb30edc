//! Finite groups given by full multiplication tables, their subgroup
//! lattices, subgroup classification (cyclic, p-elementary, hyperelementary,
//! ...), and homomorphisms.

mod classify;
mod hom;
mod lattice;

pub use classify::ClassTag;
pub use hom::GroupHom;
pub use lattice::{SubgroupLattice, SubgroupRecord};

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on group order for subgroup enumeration and everything
/// downstream of it.
pub const DEFAULT_ORDER_CAP: usize = 96;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not associative (witness ({0}, {1}, {2}))")]
    TableNotAssociative(usize, usize, usize),
    #[error("element 0 is not a two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("generator {0} is not a permutation of degree {1}")]
    PermutationsInvalid(usize, usize),
    #[error("group order {0} exceeds cap {1}")]
    OrderCapExceeded(usize, usize),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("map is not defined on generator {0}")]
    NotDefinedOnGenerators(usize),
    #[error("assignment does not extend to a homomorphism (witness ({0}, {1}))")]
    NotAHomomorphism(usize, usize),
    #[error("{0} is not prime")]
    InvalidPrime(u64),
    #[error("table is not square or is empty")]
    MalformedTable,
}

/// External construction recipe, either a full multiplication table or
/// permutation generators (cycles are 1-based).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupSpec {
    Table { table: Vec<Vec<usize>> },
    Perm { degree: usize, generators: Vec<Vec<Vec<usize>>> },
}

struct GroupInner {
    order: usize,
    mul: Vec<usize>, // row-major order x order
    inv: Vec<usize>,
    generators: Vec<usize>,
    origin: String,
    lattice: OnceLock<SubgroupLattice>,
}

/// A finite group on elements `0..order` with `0` the identity. Cheap to
/// clone; all data is immutable and shared.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {}, {})", self.order(), self.origin())
    }
}

impl FiniteGroup {
    pub fn build(spec: &GroupSpec) -> Result<Self, GroupError> {
        match spec {
            GroupSpec::Table { table } => Self::from_table(table, "table"),
            GroupSpec::Perm { degree, generators } => Self::from_permutations(*degree, generators),
        }
    }

    /// Validates and wraps a full multiplication table. Index 0 must be the
    /// identity.
    pub fn from_table(table: &[Vec<usize>], origin: &str) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::MalformedTable);
        }
        if table
            .iter()
            .flatten()
            .any(|&v| v >= n)
        {
            return Err(GroupError::MalformedTable);
        }
        // Identity.
        for x in 0..n {
            if table[0][x] != x || table[x][0] != x {
                return Err(GroupError::NoIdentity);
            }
        }
        // Inverses.
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x][y] == 0 && table[y][x] == 0) {
                Some(y) => inv[x] = y,
                None => return Err(GroupError::NoInverse(x)),
            }
        }
        // Associativity, brute force; orders stay small enough.
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::TableNotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in table {
            mul.extend_from_slice(row);
        }
        let generators = minimal_generating_sequence(n, &mul);
        Ok(FiniteGroup {
            inner: Arc::new(GroupInner {
                order: n,
                mul,
                inv,
                generators,
                origin: origin.to_string(),
                lattice: OnceLock::new(),
            }),
        })
    }

    /// Closes permutation generators (given as cycle lists, 1-based) under
    /// composition; the identity becomes element 0 and the generators keep
    /// their discovery order.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<Vec<usize>>],
    ) -> Result<Self, GroupError> {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        for (gi, cycles) in generators.iter().enumerate() {
            let mut p: Vec<usize> = (0..degree).collect();
            let mut seen = vec![false; degree];
            for cycle in cycles {
                for &pt in cycle {
                    if pt == 0 || pt > degree || seen[pt - 1] {
                        return Err(GroupError::PermutationsInvalid(gi, degree));
                    }
                    seen[pt - 1] = true;
                }
                for w in 0..cycle.len() {
                    let from = cycle[w] - 1;
                    let to = cycle[(w + 1) % cycle.len()] - 1;
                    p[from] = to;
                }
            }
            perms.push(p);
        }
        Self::from_perm_tables(degree, &perms)
    }

    /// Same as `from_permutations` but with generators as one-line images.
    pub fn from_perm_tables(degree: usize, gens: &[Vec<usize>]) -> Result<Self, GroupError> {
        for (gi, p) in gens.iter().enumerate() {
            let mut seen = vec![false; degree];
            if p.len() != degree {
                return Err(GroupError::PermutationsInvalid(gi, degree));
            }
            for &img in p {
                if img >= degree || seen[img] {
                    return Err(GroupError::PermutationsInvalid(gi, degree));
                }
                seen[img] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(identity, 0usize);
        // BFS closure; compose every known element with every generator.
        let mut frontier = vec![0usize];
        while let Some(e) = frontier.pop() {
            for g in gens {
                let current = elements[e].clone();
                let product: Vec<usize> = (0..degree).map(|x| g[current[x]]).collect();
                if !index.contains_key(&product) {
                    index.insert(product.clone(), elements.len());
                    frontier.push(elements.len());
                    elements.push(product);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<usize> = (0..degree).map(|x| elements[a][elements[b][x]]).collect();
                table[a][b] = *index.get(&prod).expect("closure incomplete");
            }
        }
        let mut group = Self::from_table(&table, &format!("perm(degree {})", degree))?;
        // Keep the declared generators rather than a recomputed set.
        let gen_ids: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        Arc::get_mut(&mut group.inner)
            .expect("fresh group is uniquely owned")
            .generators = gen_ids;
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul[a * self.inner.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inv[a]
    }

    /// g * x * g^{-1}
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn generators(&self) -> &[usize] {
        &self.inner.generators
    }

    pub fn origin(&self) -> &str {
        &self.inner.origin
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.inner.order
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut n = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Identity test for shared group structure. Two separately built copies
    /// of isomorphic groups are deliberately distinct here.
    pub fn same(a: &FiniteGroup, b: &FiniteGroup) -> bool {
        Arc::ptr_eq(&a.inner, &b.inner)
    }

    /// Subgroup closure of a set of elements.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order()];
        in_set[0] = true;
        let mut members = vec![0usize];
        let mut frontier: Vec<usize> = Vec::new();
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                members.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            let snapshot: Vec<usize> = members.clone();
            for &y in &snapshot {
                for z in [self.mul(x, y), self.mul(y, x), self.inv(x)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        members.push(z);
                        frontier.push(z);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// The enumerated and classified subgroup lattice, computed once and
    /// cached. Fails when the order exceeds `cap`.
    pub fn subgroup_lattice(&self, cap: usize) -> Result<&SubgroupLattice, GroupError> {
        if self.order() > cap {
            return Err(GroupError::OrderCapExceeded(self.order(), cap));
        }
        Ok(self
            .inner
            .lattice
            .get_or_init(|| SubgroupLattice::enumerate(self)))
    }

    /// Lattice with the default order cap.
    pub fn subgroups(&self) -> Result<&SubgroupLattice, GroupError> {
        self.subgroup_lattice(DEFAULT_ORDER_CAP)
    }

    /// The subgroup with the given sorted element set, reindexed as a group
    /// of its own (identity first, remaining elements in ambient order),
    /// together with the map from new indices back to ambient elements.
    pub fn subgroup_as_group(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(GroupError::NotASubgroup);
        }
        let pos: std::collections::HashMap<usize, usize> =
            elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut table = vec![vec![0usize; elems.len()]; elems.len()];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = self.mul(a, b);
                match pos.get(&p) {
                    Some(&k) => table[i][j] = k,
                    None => return Err(GroupError::NotASubgroup),
                }
            }
        }
        let sub = FiniteGroup::from_table(&table, &format!("subgroup of {}", self.origin()))?;
        Ok((sub, elems))
    }
}

/// Greedy generating sequence: repeatedly adjoin the least element outside
/// the closure so far. Deterministic and small, not guaranteed minimum-size.
fn minimal_generating_sequence(n: usize, mul: &[usize]) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = vec![false; n];
    closed[0] = true;
    let mut count = 1;
    while count < n {
        let next = (0..n).find(|&x| !closed[x]).unwrap();
        gens.push(next);
        // close
        let mut frontier = vec![next];
        closed[next] = true;
        count += 1;
        while let Some(x) = frontier.pop() {
            for y in 0..n {
                if closed[y] {
                    let z = mul[x * n + y];
                    if !closed[z] {
                        closed[z] = true;
                        count += 1;
                        frontier.push(z);
                    }
                    let z2 = mul[y * n + x];
                    if !closed[z2] {
                        closed[z2] = true;
                        count += 1;
                        frontier.push(z2);
                    }
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_table() {
        let g = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], "c2").unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.is_abelian());
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn bad_table_rejected() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]], "bad").unwrap_err();
        assert!(matches!(
            err,
            GroupError::NoInverse(_) | GroupError::TableNotAssociative(..) | GroupError::NoIdentity
        ));
    }

    #[test]
    fn s3_from_permutations() {
        // Closure of (1 2) and (1 2 3): order 6, non-abelian. The oracle is
        // the closure enumeration itself plus the expected order.
        let g = FiniteGroup::from_permutations(
            3,
            &[vec![vec![1, 2]], vec![vec![1, 2, 3]]],
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.exponent(), 6);
        // Element orders multiset: 1, 2, 2, 2, 3, 3.
        let mut orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn invalid_permutation_rejected() {
        let err = FiniteGroup::from_permutations(3, &[vec![vec![1, 4]]]).unwrap_err();
        assert!(matches!(err, GroupError::PermutationsInvalid(..)));
        let err = FiniteGroup::from_permutations(3, &[vec![vec![1, 2], vec![2, 3]]]).unwrap_err();
        assert!(matches!(err, GroupError::PermutationsInvalid(..)));
    }

    #[test]
    fn closure_and_subgroup_extraction() {
        let g = FiniteGroup::from_permutations(
            3,
            &[vec![vec![1, 2]], vec![vec![1, 2, 3]]],
        )
        .unwrap();
        // A 3-cycle generates C3.
        let three_cycle = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let c3 = g.closure(&[three_cycle]);
        assert_eq!(c3.len(), 3);
        let (sub, back) = g.subgroup_as_group(&c3).unwrap();
        assert_eq!(sub.order(), 3);
        assert_eq!(back.len(), 3);
        assert!(g.subgroup_as_group(&[0, three_cycle]).is_err());
    }
}
