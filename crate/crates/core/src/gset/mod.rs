//! Finite G-sets: orbit decompositions, disjoint unions, products, pullback
//! squares, and enumeration of equivariant maps.
//!
//! Large product sets never materialize their action tables; the `GAction`
//! trait lets orbit scans walk `S^n` point by point.

mod action;
mod orbits;

pub use action::{DisjointUnionAction, GAction, PowerAction, ProductAction};
pub use orbits::{OrbitData, OrbitInfo};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};

/// Default cap on materialized product sizes.
pub const DEFAULT_PRODUCT_CAP: usize = 20_000;
/// Default cap on enumerated equivariant map counts.
pub const DEFAULT_GMAP_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GSetError {
    #[error("operands live over different groups")]
    MismatchedGroups,
    #[error("maps do not share a target")]
    MismatchedTargets,
    #[error("{0} is not a subgroup of the ambient group")]
    NotASubgroup(String),
    #[error("set of size {0} exceeds cap {1}")]
    CapExceeded(usize, usize),
    #[error("equivariant map count {0} exceeds cap {1}")]
    CountCapExceeded(usize, usize),
    #[error("operation requires a non-empty G-set")]
    EmptyGSet,
    #[error("point map is not equivariant at (g={0}, x={1})")]
    NotEquivariant(usize, usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite left G-set with a dense action table.
#[derive(Clone)]
pub struct GSet {
    group: FiniteGroup,
    size: usize,
    /// `action[g * size + x]` is `g . x`.
    action: Vec<u32>,
}

impl std::fmt::Debug for GSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GSet({} points over order-{} group)", self.size, self.group.order())
    }
}

impl GSet {
    /// Wraps a raw action table, verifying the unit and composition laws.
    pub fn new(group: &FiniteGroup, size: usize, act: impl Fn(usize, usize) -> usize) -> Self {
        let mut action = vec![0u32; group.order() * size];
        for g in group.elements() {
            for x in 0..size {
                let y = act(g, x);
                assert!(y < size, "action out of range");
                action[g * size + x] = y as u32;
            }
        }
        let s = GSet {
            group: group.clone(),
            size,
            action,
        };
        s.validate();
        s
    }

    fn validate(&self) {
        for x in 0..self.size {
            assert_eq!(self.apply(0, x), x, "identity must act trivially");
        }
        // Compatibility on (generator, anything) pairs pins down the whole
        // table; the full triple loop is quadratic in the order and shows
        // up on every product construction.
        for &g in self.group.generators() {
            for h in self.group.elements() {
                let gh = self.group.mul(g, h);
                for x in 0..self.size {
                    assert_eq!(
                        self.apply(g, self.apply(h, x)),
                        self.apply(gh, x),
                        "action not compatible with multiplication"
                    );
                }
            }
        }
    }

    pub fn empty(group: &FiniteGroup) -> Self {
        GSet {
            group: group.clone(),
            size: 0,
            action: Vec::new(),
        }
    }

    /// The one-point G-set `G/G`.
    pub fn point(group: &FiniteGroup) -> Self {
        GSet::new(group, 1, |_, _| 0)
    }

    /// Left coset space `G/H` for an enumerated subgroup. Point 0 is the
    /// coset `H` itself, and points are numbered by their least member.
    pub fn coset_space(group: &FiniteGroup, subgroup_elements: &[usize]) -> Result<Self, GSetError> {
        let lat_check = group.closure(subgroup_elements);
        if lat_check.len() != subgroup_elements.len() {
            return Err(GSetError::NotASubgroup(format!("{:?}", subgroup_elements)));
        }
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for &h in subgroup_elements {
                coset_of[group.mul(g, h)] = c;
            }
            reps.push(g);
        }
        let size = reps.len();
        let mut action = vec![0u32; n * size];
        for g in 0..n {
            for (c, &r) in reps.iter().enumerate() {
                action[g * size + c] = coset_of[group.mul(g, r)] as u32;
            }
        }
        Ok(GSet {
            group: group.clone(),
            size,
            action,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    pub fn orbit_data(&self) -> OrbitData {
        OrbitData::compute(self)
    }

    /// Fixed points of a set of group elements.
    pub fn fixed_points(&self, elements: &[usize]) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| elements.iter().all(|&h| self.apply(h, x) == x))
            .collect()
    }

    /// Disjoint union; points of `other` are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet, GSetError> {
        if !FiniteGroup::same(&self.group, &other.group) {
            return Err(GSetError::MismatchedGroups);
        }
        let size = self.size + other.size;
        Ok(GSet::new(&self.group, size, |g, x| {
            if x < self.size {
                self.apply(g, x)
            } else {
                self.size + other.apply(g, x - self.size)
            }
        }))
    }

    /// Cartesian product with the diagonal action; points ordered
    /// lexicographically, left factor major.
    pub fn product(&self, other: &GSet, cap: usize) -> Result<GSet, GSetError> {
        if !FiniteGroup::same(&self.group, &other.group) {
            return Err(GSetError::MismatchedGroups);
        }
        let size = self.size.checked_mul(other.size).unwrap_or(usize::MAX);
        if size > cap {
            return Err(GSetError::CapExceeded(size, cap));
        }
        Ok(GSet::new(&self.group, size, |g, x| {
            let (a, b) = (x / other.size, x % other.size);
            self.apply(g, a) * other.size + other.apply(g, b)
        }))
    }

    /// n-fold product `S^n` with lexicographic point order; `S^0` is the
    /// one-point set.
    pub fn power(&self, n: usize, cap: usize) -> Result<GSet, GSetError> {
        let mut acc = GSet::point(&self.group);
        for _ in 0..n {
            acc = acc.product(self, cap)?;
        }
        Ok(acc)
    }

    /// Serializable form per the external interface.
    pub fn to_json(&self) -> GSetJson {
        GSetJson {
            group: self.group.origin().to_string(),
            size: self.size,
            action: self
                .group
                .elements()
                .map(|g| (0..self.size).map(|x| self.apply(g, x)).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GSetJson {
    pub group: String,
    pub size: usize,
    pub action: Vec<Vec<usize>>,
}

/// An equivariant map of G-sets, stored pointwise.
#[derive(Clone)]
pub struct GMap {
    source: GSet,
    target: GSet,
    point_map: Vec<usize>,
}

impl std::fmt::Debug for GMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GMap({} -> {}: {:?})", self.source.size(), self.target.size(), self.point_map)
    }
}

impl GMap {
    pub fn new(source: &GSet, target: &GSet, point_map: Vec<usize>) -> Result<Self, GSetError> {
        if !FiniteGroup::same(source.group(), target.group()) {
            return Err(GSetError::MismatchedGroups);
        }
        assert_eq!(point_map.len(), source.size());
        for g in source.group().elements() {
            for x in 0..source.size() {
                if point_map[source.apply(g, x)] != target.apply(g, point_map[x]) {
                    return Err(GSetError::NotEquivariant(g, x));
                }
            }
        }
        Ok(GMap {
            source: source.clone(),
            target: target.clone(),
            point_map,
        })
    }

    pub fn identity(s: &GSet) -> Self {
        GMap {
            source: s.clone(),
            target: s.clone(),
            point_map: (0..s.size()).collect(),
        }
    }

    /// The unique map to `G/G`.
    pub fn to_point(s: &GSet) -> Self {
        GMap {
            source: s.clone(),
            target: GSet::point(s.group()),
            point_map: vec![0; s.size()],
        }
    }

    pub fn source(&self) -> &GSet {
        &self.source
    }

    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.point_map[x]
    }

    pub fn points(&self) -> &[usize] {
        &self.point_map
    }
}

/// A pullback square of finite G-sets: the fiber product `S` of
/// `f1: S1 -> S0` and `f2: S2 -> S0` with its two coordinate projections.
#[derive(Debug, Clone)]
pub struct CartesianSquare {
    pub corner: GSet,
    pub proj1: GMap,
    pub proj2: GMap,
    pub f1: GMap,
    pub f2: GMap,
}

impl CartesianSquare {
    /// Builds the fiber product `{(x1, x2) : f1(x1) = f2(x2)}` with points in
    /// lexicographic order.
    pub fn pullback(f1: &GMap, f2: &GMap) -> Result<Self, GSetError> {
        if !FiniteGroup::same(f1.source().group(), f2.source().group()) {
            return Err(GSetError::MismatchedGroups);
        }
        if f1.target().size() != f2.target().size() {
            return Err(GSetError::MismatchedTargets);
        }
        // Structural identity of the shared target matters for commuting;
        // sizes alone do not prove it, so compare tables.
        let t1 = f1.target();
        let t2 = f2.target();
        for g in t1.group().elements() {
            for x in 0..t1.size() {
                if t1.apply(g, x) != t2.apply(g, x) {
                    return Err(GSetError::MismatchedTargets);
                }
            }
        }
        let s1 = f1.source();
        let s2 = f2.source();
        let mut points = Vec::new();
        for x1 in 0..s1.size() {
            for x2 in 0..s2.size() {
                if f1.apply(x1) == f2.apply(x2) {
                    points.push((x1, x2));
                }
            }
        }
        let index: std::collections::HashMap<(usize, usize), usize> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let corner = GSet::new(s1.group(), points.len(), |g, i| {
            let (x1, x2) = points[i];
            index[&(s1.apply(g, x1), s2.apply(g, x2))]
        });
        let proj1 = GMap::new(&corner, s1, points.iter().map(|&(x1, _)| x1).collect())?;
        let proj2 = GMap::new(&corner, s2, points.iter().map(|&(_, x2)| x2).collect())?;
        let square = CartesianSquare {
            corner,
            proj1,
            proj2,
            f1: f1.clone(),
            f2: f2.clone(),
        };
        square.verify_commutes();
        Ok(square)
    }

    fn verify_commutes(&self) {
        for i in 0..self.corner.size() {
            assert_eq!(
                self.f1.apply(self.proj1.apply(i)),
                self.f2.apply(self.proj2.apply(i)),
                "pullback square must commute"
            );
        }
    }
}

/// All equivariant maps `S -> T`, ordered lexicographically by the images of
/// the orbit base points. The count is the product over orbits of
/// `|T^{stabilizer}|`.
pub fn enumerate_gmaps(s: &GSet, t: &GSet, cap: usize) -> Result<Vec<GMap>, GSetError> {
    if !FiniteGroup::same(s.group(), t.group()) {
        return Err(GSetError::MismatchedGroups);
    }
    let orbits = s.orbit_data();
    let mut choices: Vec<Vec<usize>> = Vec::new();
    let mut total: usize = 1;
    for orbit in orbits.orbits() {
        let stab = orbits.stabilizer_of_base(s, orbit);
        let fixed = t.fixed_points(&stab);
        total = total.saturating_mul(fixed.len());
        if total > cap {
            return Err(GSetError::CountCapExceeded(total, cap));
        }
        choices.push(fixed);
    }
    if s.size() == 0 {
        return Ok(vec![GMap::new(s, t, vec![])?]);
    }
    let mut maps = Vec::with_capacity(total);
    let mut selector = vec![0usize; choices.len()];
    'outer: loop {
        // Materialize this choice of base-point images.
        let mut point_map = vec![usize::MAX; s.size()];
        for (oi, orbit) in orbits.orbits().iter().enumerate() {
            if choices[oi].is_empty() {
                return Ok(Vec::new());
            }
            let image = choices[oi][selector[oi]];
            for x in orbits.orbit_points(orbit) {
                let g = orbits.transporter(x);
                point_map[x] = t.apply(g, image);
            }
        }
        maps.push(GMap::new(s, t, point_map)?);
        // Odometer.
        for i in (0..selector.len()).rev() {
            selector[i] += 1;
            if selector[i] < choices[i].len() {
                continue 'outer;
            }
            selector[i] = 0;
        }
        break;
    }
    Ok(maps)
}

#[cfg(test)]
mod tests;
