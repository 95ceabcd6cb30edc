use super::action::GAction;

/// One orbit of a G-set scan.
#[derive(Debug, Clone)]
pub struct OrbitInfo {
    /// Least point of the orbit.
    pub base: usize,
    pub size: usize,
}

/// Orbit decomposition of a (possibly implicit) finite G-set: orbit ids,
/// base points, and a transporter element per point.
///
/// Orbits are numbered by increasing base point, which makes every
/// downstream basis ordering reproducible.
pub struct OrbitData {
    orbit_id: Vec<u32>,
    /// `transporter[x] * base(orbit of x) = x`.
    transporter: Vec<u32>,
    orbits: Vec<OrbitInfo>,
    group_order: usize,
}

impl std::fmt::Debug for OrbitData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "OrbitData({} points in {} orbits)",
            self.orbit_id.len(),
            self.orbits.len()
        )
    }
}

impl OrbitData {
    pub fn compute(set: &(impl GAction + ?Sized)) -> OrbitData {
        let n = set.size();
        let group = set.group();
        let gens: Vec<usize> = if group.generators().is_empty() {
            vec![0]
        } else {
            group.generators().to_vec()
        };
        let mut orbit_id = vec![u32::MAX; n];
        let mut transporter = vec![0u32; n];
        let mut orbits = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for start in 0..n {
            if orbit_id[start] != u32::MAX {
                continue;
            }
            let oid = orbits.len() as u32;
            orbit_id[start] = oid;
            transporter[start] = 0;
            let mut count = 1usize;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for &g in &gens {
                    let y = set.act(g, x);
                    if orbit_id[y] == u32::MAX {
                        orbit_id[y] = oid;
                        transporter[y] = group.mul(g, transporter[x] as usize) as u32;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            orbits.push(OrbitInfo { base: start, size: count });
        }
        OrbitData {
            orbit_id,
            transporter,
            orbits,
            group_order: group.order(),
        }
    }

    pub fn orbits(&self) -> &[OrbitInfo] {
        &self.orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_of(&self, x: usize) -> usize {
        self.orbit_id[x] as usize
    }

    /// Group element carrying the orbit's base point to `x`.
    pub fn transporter(&self, x: usize) -> usize {
        self.transporter[x] as usize
    }

    /// Points of an orbit, ascending.
    pub fn orbit_points(&self, orbit: &OrbitInfo) -> Vec<usize> {
        let oid = self.orbit_id[orbit.base];
        (orbit.base..self.orbit_id.len())
            .filter(|&x| self.orbit_id[x] == oid)
            .collect()
    }

    /// Stabilizer of the base point of an orbit, as a sorted element list.
    /// The orbit-stabilizer count is asserted on the way out.
    pub fn stabilizer_of_base(&self, set: &(impl GAction + ?Sized), orbit: &OrbitInfo) -> Vec<usize> {
        let stab: Vec<usize> = set
            .group()
            .elements()
            .filter(|&g| set.act(g, orbit.base) == orbit.base)
            .collect();
        assert_eq!(
            stab.len() * orbit.size,
            self.group_order,
            "orbit-stabilizer mismatch"
        );
        stab
    }

}

impl super::GSet {
    /// Orbit representatives with stabilizers: `(base point, stabilizer
    /// elements)` per orbit, ascending by base point.
    pub fn orbit_reps_with_stabilizers(&self) -> Vec<(usize, Vec<usize>)> {
        let data = OrbitData::compute(self);
        data.orbits
            .iter()
            .map(|o| (o.base, data.stabilizer_of_base(self, o)))
            .collect()
    }
}
