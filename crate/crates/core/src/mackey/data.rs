use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::group::FiniteGroup;
use crate::gset::{GAction, OrbitData};
use crate::linalg::IntMatrix;

/// The structure maps a coefficient system must provide on the subgroup
/// lattice: value ranks and restriction/induction/conjugation matrices.
/// Subgroups are lattice ids of the ambient group; values are free
/// Z-modules in a fixed basis per subgroup.
pub trait CoefficientData: Send + Sync {
    fn group(&self) -> &FiniteGroup;
    fn name(&self) -> &str;
    fn rank(&self, h: usize) -> usize;
    /// `M(G/H) -> M(G/K)` for K <= H.
    fn restriction(&self, h: usize, k: usize) -> IntMatrix;
    /// `M(G/K) -> M(G/H)` for K <= H.
    fn induction(&self, h: usize, k: usize) -> IntMatrix;
    /// `M(G/H) -> M(G/gHg^{-1})`; `target` is the lattice id of the
    /// conjugate subgroup.
    fn conjugation(&self, h: usize, g: usize, target: usize) -> IntMatrix;
}

/// A Mackey functor presented by per-conjugacy-class data, with all derived
/// matrices cached. Evaluation on arbitrary G-sets and induced maps of
/// arbitrary G-maps are assembled orbit-block by orbit-block.
#[derive(Clone)]
pub struct MackeyFunctorData {
    source: Arc<dyn CoefficientData>,
    cache: Arc<Caches>,
}

#[derive(Default)]
struct Caches {
    res: Mutex<BTreeMap<(usize, usize), Arc<IntMatrix>>>,
    ind: Mutex<BTreeMap<(usize, usize), Arc<IntMatrix>>>,
    conj: Mutex<BTreeMap<(usize, usize), Arc<IntMatrix>>>,
    /// Composite orbit-map blocks keyed by (stabilizer, transporter,
    /// target stabilizer); the hot path of power-set scans.
    orbit_cov: Mutex<BTreeMap<(usize, usize, usize), Arc<IntMatrix>>>,
    orbit_con: Mutex<BTreeMap<(usize, usize, usize), Arc<IntMatrix>>>,
}

impl std::fmt::Debug for MackeyFunctorData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MackeyFunctorData({} over order-{} group)",
            self.source.name(),
            self.group().order()
        )
    }
}

impl MackeyFunctorData {
    pub fn new(source: Arc<dyn CoefficientData>) -> Self {
        MackeyFunctorData {
            source,
            cache: Arc::new(Caches::default()),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.source.group()
    }

    pub fn name(&self) -> &str {
        self.source.name()
    }

    pub fn rank(&self, h: usize) -> usize {
        self.source.rank(h)
    }

    pub fn restriction(&self, h: usize, k: usize) -> Arc<IntMatrix> {
        if let Some(hit) = self.cache.res.lock().unwrap().get(&(h, k)) {
            return hit.clone();
        }
        let m = Arc::new(self.source.restriction(h, k));
        self.cache.res.lock().unwrap().insert((h, k), m.clone());
        m
    }

    pub fn induction(&self, h: usize, k: usize) -> Arc<IntMatrix> {
        if let Some(hit) = self.cache.ind.lock().unwrap().get(&(h, k)) {
            return hit.clone();
        }
        let m = Arc::new(self.source.induction(h, k));
        self.cache.ind.lock().unwrap().insert((h, k), m.clone());
        m
    }

    pub fn conjugation(&self, h: usize, g: usize) -> Arc<IntMatrix> {
        if let Some(hit) = self.cache.conj.lock().unwrap().get(&(h, g)) {
            return hit.clone();
        }
        let lat = self.group().subgroups().expect("lattice available");
        let target = lat.conjugate_id(h, g);
        let m = Arc::new(self.source.conjugation(h, g, target));
        self.cache.conj.lock().unwrap().insert((h, g), m.clone());
        m
    }

    /// Evaluation bookkeeping for `M(T)`: one block per orbit, ordered by
    /// orbit base point.
    pub fn evaluate(&self, set: &(impl GAction + ?Sized)) -> Evaluation {
        let lat = self.group().subgroups().expect("lattice available");
        let orbit_data = OrbitData::compute(set);
        let mut blocks = Vec::with_capacity(orbit_data.orbit_count());
        let mut offset = 0;
        for orbit in orbit_data.orbits() {
            let stab = orbit_data.stabilizer_of_base(set, orbit);
            let stab_id = lat.id_of(&stab).expect("stabilizer is enumerated");
            let rank = self.rank(stab_id);
            blocks.push(OrbitBlock {
                base: orbit.base,
                stab_id,
                offset,
                rank,
            });
            offset += rank;
        }
        Evaluation {
            orbit_data,
            blocks,
            total_rank: offset,
        }
    }

    /// Matrix of an orbit map `G/K -> G/K'` sending the base coset to
    /// `w K'` (covariant direction): `ind . conj_{w^{-1}}`.
    fn orbit_map_covariant(&self, k: usize, w: usize, k_target: usize) -> IntMatrix {
        let g = self.group();
        let lat = g.subgroups().expect("lattice available");
        let winv = g.inv(w);
        let mid = lat.conjugate_id(k, winv);
        let conj = self.conjugation(k, winv);
        let ind = self.induction(k_target, mid);
        &*ind * &*conj
    }

    /// Contravariant side of the same orbit map: `conj_w . res`.
    fn orbit_map_contravariant(&self, k: usize, w: usize, k_target: usize) -> IntMatrix {
        let g = self.group();
        let lat = g.subgroups().expect("lattice available");
        let winv = g.inv(w);
        let mid = lat.conjugate_id(k, winv);
        let res = self.restriction(k_target, mid);
        let conj = self.conjugation(mid, w);
        &*conj * &*res
    }

    /// `M_*(f)` for an equivariant `f` between evaluated G-sets.
    pub fn covariant_matrix(
        &self,
        src: &Evaluation,
        tgt: &Evaluation,
        f: impl Fn(usize) -> usize,
    ) -> IntMatrix {
        let mut out = IntMatrix::zero(tgt.total_rank, src.total_rank);
        for block in &src.blocks {
            let (t_block, w) = tgt.locate(f(block.base));
            let m = self.orbit_map_covariant(block.stab_id, w, t_block.stab_id);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let v = m.get(i, j);
                    if !v.is_zero() {
                        out.add_to(t_block.offset + i, block.offset + j, v);
                    }
                }
            }
        }
        out
    }

    /// `M^*(f)`.
    pub fn contravariant_matrix(
        &self,
        src: &Evaluation,
        tgt: &Evaluation,
        f: impl Fn(usize) -> usize,
    ) -> IntMatrix {
        let mut out = IntMatrix::zero(src.total_rank, tgt.total_rank);
        for block in &src.blocks {
            let (t_block, w) = tgt.locate(f(block.base));
            let m = self.orbit_map_contravariant(block.stab_id, w, t_block.stab_id);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let v = m.get(i, j);
                    if !v.is_zero() {
                        out.add_to(block.offset + i, t_block.offset + j, v);
                    }
                }
            }
        }
        out
    }

    /// Covariant image of one basis vector, kept sparse: used by the
    /// operator-level certificate checks on large power sets.
    pub fn covariant_apply_basis(
        &self,
        src: &Evaluation,
        tgt: &Evaluation,
        f: impl Fn(usize) -> usize,
        src_block_idx: usize,
        basis_in_block: usize,
    ) -> Vec<(usize, BigInt)> {
        let block = &src.blocks[src_block_idx];
        let (t_block, w) = tgt.locate(f(block.base));
        let m = self.orbit_map_covariant(block.stab_id, w, t_block.stab_id);
        (0..m.rows())
            .filter_map(|i| {
                let v = m.get(i, basis_in_block);
                if v.is_zero() {
                    None
                } else {
                    Some((t_block.offset + i, v.clone()))
                }
            })
            .collect()
    }
}

/// Basis bookkeeping for `M(T)`: orbit blocks in base-point order.
pub struct Evaluation {
    pub orbit_data: OrbitData,
    pub blocks: Vec<OrbitBlock>,
    pub total_rank: usize,
}

#[derive(Debug, Clone)]
pub struct OrbitBlock {
    pub base: usize,
    pub stab_id: usize,
    pub offset: usize,
    pub rank: usize,
}

impl Evaluation {
    /// Orbit block containing the point, together with the transporter `w`
    /// carrying the block's base to that point.
    pub fn locate(&self, point: usize) -> (&OrbitBlock, usize) {
        let oid = self.orbit_data.orbit_of(point);
        (&self.blocks[oid], self.orbit_data.transporter(point))
    }

    /// Index of the block whose basis covers position `pos`, found by
    /// binary search over offsets.
    pub fn block_of_position(&self, pos: usize) -> usize {
        debug_assert!(pos < self.total_rank);
        let mut lo = 0;
        let mut hi = self.blocks.len();
        while lo + 1 < hi {
            let mid = (lo + hi) / 2;
            if self.blocks[mid].offset <= pos {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}
