use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::gset::{GSet, GSetError};
use crate::linalg::IntMatrix;

use super::data::{CoefficientData, Evaluation, MackeyFunctorData};

/// The product-twisted Mackey functor `T -> M(S x T)`, presented on the
/// subgroup lattice by evaluating M on the products `S x G/H`.
pub struct TwistedData {
    m: MackeyFunctorData,
    s: GSet,
    /// Per lattice subgroup: the product G-set `S x G/H`, its evaluation
    /// under M, and the plain coset space with its evaluation.
    products: Vec<GSet>,
    product_evals: Vec<Evaluation>,
    cosets: Vec<GSet>,
    coset_evals: Vec<Evaluation>,
}

impl TwistedData {
    pub fn new(m: &MackeyFunctorData, s: &GSet) -> Result<Self, GSetError> {
        if s.size() == 0 {
            return Err(GSetError::EmptyGSet);
        }
        let g = m.group().clone();
        let lat = g.subgroups()?;
        let mut products = Vec::new();
        let mut product_evals = Vec::new();
        let mut cosets = Vec::new();
        let mut coset_evals = Vec::new();
        for sub in lat.subgroups() {
            let coset = GSet::coset_space(&g, &sub.elements)?;
            let product = s.product(&coset, usize::MAX)?;
            product_evals.push(m.evaluate(&product));
            coset_evals.push(m.evaluate(&coset));
            products.push(product);
            cosets.push(coset);
        }
        Ok(TwistedData {
            m: m.clone(),
            s: s.clone(),
            products,
            product_evals,
            cosets,
            coset_evals,
        })
    }

    pub fn product_set(&self, h: usize) -> &GSet {
        &self.products[h]
    }

    pub fn product_eval(&self, h: usize) -> &Evaluation {
        &self.product_evals[h]
    }

    pub fn coset_eval(&self, h: usize) -> &Evaluation {
        &self.coset_evals[h]
    }

    /// Covariant transfer component `theta(G/H) = M_*(pr): M(S x G/H) ->
    /// M(G/H)`.
    pub fn transfer_component(&self, h: usize) -> IntMatrix {
        let csize = self.cosets[h].size();
        self.m
            .covariant_matrix(&self.product_evals[h], &self.coset_evals[h], |p| p % csize)
    }

    /// Contravariant component `theta^(G/H) = M^*(pr): M(G/H) ->
    /// M(S x G/H)`.
    pub fn restriction_component(&self, h: usize) -> IntMatrix {
        let csize = self.cosets[h].size();
        self.m
            .contravariant_matrix(&self.product_evals[h], &self.coset_evals[h], |p| p % csize)
    }
}

impl CoefficientData for TwistedData {
    fn group(&self) -> &FiniteGroup {
        self.m.group()
    }

    fn name(&self) -> &str {
        "product-twisted functor"
    }

    fn rank(&self, h: usize) -> usize {
        self.product_evals[h].total_rank
    }

    fn restriction(&self, h: usize, k: usize) -> IntMatrix {
        // id_S x proj: S x G/K -> S x G/H, contravariant side.
        let csize_k = self.cosets[k].size();
        let csize_h = self.cosets[h].size();
        let proj = coset_to_coset(&self.cosets[k], &self.cosets[h]);
        self.m.contravariant_matrix(
            &self.product_evals[k],
            &self.product_evals[h],
            |p| (p / csize_k) * csize_h + proj[p % csize_k],
        )
    }

    fn induction(&self, h: usize, k: usize) -> IntMatrix {
        let csize_k = self.cosets[k].size();
        let csize_h = self.cosets[h].size();
        let proj = coset_to_coset(&self.cosets[k], &self.cosets[h]);
        self.m.covariant_matrix(
            &self.product_evals[k],
            &self.product_evals[h],
            |p| (p / csize_k) * csize_h + proj[p % csize_k],
        )
    }

    fn conjugation(&self, h: usize, g: usize, target: usize) -> IntMatrix {
        // id_S x (xH -> x g^{-1} (gHg^{-1})).
        let csize_h = self.cosets[h].size();
        let csize_t = self.cosets[target].size();
        let ginv = self.m.group().inv(g);
        // The coset gH corresponds to the point reached from base by its
        // transporter; map point by point through the group action.
        let src_orbit = self.cosets[h].orbit_data();
        let map: Vec<usize> = (0..csize_h)
            .map(|x| {
                let t = src_orbit.transporter(x); // t H = coset x
                self.cosets[target].apply(self.m.group().mul(t, ginv), 0)
            })
            .collect();
        self.m.covariant_matrix(
            &self.product_evals[h],
            &self.product_evals[target],
            |p| (p / csize_h) * csize_t + map[p % csize_h],
        )
    }
}

/// Pointwise table of the projection `G/K -> G/H` for `K <= H`.
fn coset_to_coset(source: &GSet, target: &GSet) -> Vec<usize> {
    let orbits = source.orbit_data();
    (0..source.size())
        .map(|x| target.apply(orbits.transporter(x), 0))
        .collect()
}

/// A natural transformation between two lattice-presented Mackey functors,
/// stored componentwise.
pub struct NaturalTransformationData {
    pub source: MackeyFunctorData,
    pub target: MackeyFunctorData,
    pub components: Vec<IntMatrix>,
}

impl NaturalTransformationData {
    /// Naturality on the generating morphisms: all inclusion projections
    /// (both variances) and all conjugations by group generators.
    pub fn verify_naturality(&self) -> Result<(), String> {
        let lat = self.source.group().subgroups().map_err(|e| e.to_string())?;
        for h in 0..lat.subgroups().len() {
            for k in lat.contained_in(h) {
                let lhs = self.components[h]
                    .checked_mul(&self.source.induction(h, k))
                    .map_err(|e| e.to_string())?;
                let rhs = self
                    .target
                    .induction(h, k)
                    .checked_mul(&self.components[k])
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("covariant naturality fails at pair ({h}, {k})"));
                }
                let lhs = self.components[k]
                    .checked_mul(&self.source.restriction(h, k))
                    .map_err(|e| e.to_string())?;
                let rhs = self
                    .target
                    .restriction(h, k)
                    .checked_mul(&self.components[h])
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("contravariant naturality fails at pair ({h}, {k})"));
                }
            }
            for &g in self.source.group().generators() {
                let t = lat.conjugate_id(h, g);
                let lhs = self.components[t]
                    .checked_mul(&self.source.conjugation(h, g))
                    .map_err(|e| e.to_string())?;
                let rhs = self
                    .target
                    .conjugation(h, g)
                    .checked_mul(&self.components[h])
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("conjugation naturality fails at ({h}, g={g})"));
                }
            }
        }
        Ok(())
    }
}

/// Builds the twisted functor `M_S` together with the transfer
/// `theta: M_S -> M` and the coprojection `theta^: M -> M_S`, both verified
/// natural on the generating morphisms.
pub fn twist_by(
    m: &MackeyFunctorData,
    s: &GSet,
) -> Result<(MackeyFunctorData, NaturalTransformationData, NaturalTransformationData), GSetError> {
    let data = Arc::new(TwistedData::new(m, s)?);
    let twisted = MackeyFunctorData::new(data.clone());
    let lat = m.group().subgroups()?;
    let n = lat.subgroups().len();
    let transfer = NaturalTransformationData {
        source: twisted.clone(),
        target: m.clone(),
        components: (0..n).map(|h| data.transfer_component(h)).collect(),
    };
    let coprojection = NaturalTransformationData {
        source: m.clone(),
        target: twisted.clone(),
        components: (0..n).map(|h| data.restriction_component(h)).collect(),
    };
    transfer
        .verify_naturality()
        .expect("transfer must be natural");
    coprojection
        .verify_naturality()
        .expect("coprojection must be natural");
    Ok((twisted, transfer, coprojection))
}
