//! Right modules over a based algebra, realised as quiver representations.
//!
//! An arrow `a: s -> t` acts as a linear map `M_s -> M_t`, stored as a
//! `dims[t] x dims[s]` matrix. A path `a1*a2*...*ak` therefore acts by the
//! product `M_ak ... M_a1`.

mod decompose;
mod duality;
mod hom;
mod ops;
mod subreps;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{BasedAlgebra, PathWord};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

pub use decompose::{
    decompose, indecomposable_data, is_isomorphic, AddCategory, Approximation, Decomposition,
    Indecomposable, DEFAULT_SEED,
};
pub use duality::{
    dualize, dualize_map, injective_envelope, injective_module, projective_cover,
    projective_module, projective_sum, simple_module, ProjectiveSum,
};
pub use hom::{hom_space, HomSpace};
pub use ops::{
    cokernel, image, kernel, quotient_by, radical, socle, submodule, submodule_generated, top,
};
pub use subreps::enumerate_submodules;

struct Inner<F: Field> {
    algebra: Arc<BasedAlgebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Mat<F>>,
    name: String,
}

/// A finite-dimensional right module.
#[derive(Clone)]
pub struct ModuleRep<F: Field>(Arc<Inner<F>>);

impl<F: Field> fmt::Debug for ModuleRep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep({} dims={:?})", self.0.name, self.0.dims)
    }
}

impl<F: Field> ModuleRep<F> {
    /// Validates shapes and relations.
    pub fn new(algebra: Arc<BasedAlgebra<F>>, dims: Vec<usize>, maps: Vec<Mat<F>>) -> Result<Self> {
        let m = Self::new_unchecked(algebra, dims, maps);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<BasedAlgebra<F>>,
        dims: Vec<usize>,
        maps: Vec<Mat<F>>,
    ) -> Self {
        ModuleRep(Arc::new(Inner { algebra, dims, maps, name: String::new() }))
    }

    pub fn zero(algebra: &Arc<BasedAlgebra<F>>) -> Self {
        let n = algebra.vertex_count();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Mat::zeros(0, 0))
            .collect();
        Self::new_unchecked(algebra.clone(), vec![0; n], maps)
    }

    pub fn named(&self, name: impl Into<String>) -> Self {
        ModuleRep(Arc::new(Inner {
            algebra: self.0.algebra.clone(),
            dims: self.0.dims.clone(),
            maps: self.0.maps.clone(),
            name: name.into(),
        }))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn algebra(&self) -> &Arc<BasedAlgebra<F>> {
        &self.0.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, a: usize) -> &Mat<F> {
        &self.0.maps[a]
    }

    pub fn maps(&self) -> &[Mat<F>] {
        &self.0.maps
    }

    /// Same data, attached to a structurally identical algebra.
    pub fn with_algebra(&self, algebra: &Arc<BasedAlgebra<F>>) -> Result<Self> {
        if !same_algebra(&self.0.algebra, algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(ModuleRep(Arc::new(Inner {
            algebra: algebra.clone(),
            dims: self.0.dims.clone(),
            maps: self.0.maps.clone(),
            name: self.0.name.clone(),
        })))
    }

    pub fn validate(&self) -> Result<()> {
        let a = &self.0.algebra;
        let q = a.quiver();
        if self.0.dims.len() != q.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "expected {} vertex dimensions, got {}",
                q.vertex_count(),
                self.0.dims.len()
            )));
        }
        if self.0.maps.len() != q.arrows().len() {
            return Err(Error::InvalidModule(format!(
                "expected {} arrow maps, got {}",
                q.arrows().len(),
                self.0.maps.len()
            )));
        }
        for (k, arrow) in q.arrows().iter().enumerate() {
            let want = (self.0.dims[arrow.target], self.0.dims[arrow.source]);
            if self.0.maps[k].shape() != want {
                return Err(Error::InvalidModule(format!(
                    "map for arrow {} has shape {:?}, expected {:?}",
                    arrow.label,
                    self.0.maps[k].shape(),
                    want
                )));
            }
        }
        for r in a.relations() {
            let (s, t) = (r.terms[0].1.start, r.terms[0].1.end(q));
            let mut acc = Mat::zeros(self.0.dims[t], self.0.dims[s]);
            for (c, p) in &r.terms {
                acc = &acc + &self.path_matrix(p).scale(c);
            }
            if !acc.is_zero() {
                return Err(Error::InvalidModule(format!(
                    "relation {} does not hold",
                    r.display(q)
                )));
            }
        }
        // Every path of nilpotency length must act as zero as well.
        let n = a.nilpotency();
        let mut layer: Vec<(PathWord, Mat<F>)> = (0..q.vertex_count())
            .map(|v| (PathWord::trivial(v), Mat::identity(self.0.dims[v])))
            .collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for (p, m) in &layer {
                if m.is_zero() {
                    continue;
                }
                for a in q.arrows_from(p.end(q)) {
                    let mut w = p.clone();
                    w.arrows.push(a);
                    next.push((w, &self.0.maps[a] * m));
                }
            }
            layer = next;
        }
        if let Some((p, _)) = layer.iter().find(|(_, m)| !m.is_zero()) {
            return Err(Error::InvalidModule(format!(
                "path {} of length {n} acts nontrivially",
                p.display(q)
            )));
        }
        Ok(())
    }

    /// Matrix of the action of a path, `dims[end] x dims[start]`.
    pub fn path_matrix(&self, p: &PathWord) -> Mat<F> {
        let mut m = Mat::identity(self.0.dims[p.start]);
        for &a in &p.arrows {
            m = &self.0.maps[a] * &m;
        }
        m
    }

    /// Matrix of the action of basis element `b`.
    pub fn basis_matrix(&self, b: usize) -> Mat<F> {
        self.path_matrix(&self.0.algebra.basis()[b])
    }

    /// Offsets of each vertex block in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.0.dims.len());
        let mut acc = 0;
        for &d in &self.0.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Structural equality of data (not isomorphism).
    pub fn same_data(&self, other: &Self) -> bool {
        same_algebra(&self.0.algebra, &other.0.algebra)
            && self.0.dims == other.0.dims
            && self.0.maps == other.0.maps
    }

    pub fn dim_string(&self) -> String {
        self.0.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("")
    }

    pub fn label(&self) -> String {
        if self.0.name.is_empty() {
            format!("[{}]", self.dim_string())
        } else {
            self.0.name.clone()
        }
    }
}

pub fn same_algebra<F: Field>(a: &Arc<BasedAlgebra<F>>, b: &Arc<BasedAlgebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || a.same_as(b)
}

pub(crate) fn check_same<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<()> {
    if same_algebra(m.algebra(), n.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// A homomorphism of right modules, given vertex by vertex.
#[derive(Clone)]
pub struct ModuleMap<F: Field> {
    source: ModuleRep<F>,
    target: ModuleRep<F>,
    mats: Vec<Mat<F>>,
}

impl<F: Field> fmt::Debug for ModuleMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({} -> {}: {:?})", self.source.label(), self.target.label(), self.mats)
    }
}

impl<F: Field> ModuleMap<F> {
    pub fn new(source: &ModuleRep<F>, target: &ModuleRep<F>, mats: Vec<Mat<F>>) -> Result<Self> {
        check_same(source, target)?;
        let f = ModuleMap { source: source.clone(), target: target.clone(), mats };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: &ModuleRep<F>, target: &ModuleRep<F>, mats: Vec<Mat<F>>) -> Self {
        ModuleMap { source: source.clone(), target: target.clone(), mats }
    }

    pub fn validate(&self) -> Result<()> {
        let q = self.source.algebra().quiver();
        if self.mats.len() != q.vertex_count() {
            return Err(Error::InvalidMap("wrong number of vertex matrices".into()));
        }
        for v in 0..q.vertex_count() {
            let want = (self.target.dim_at(v), self.source.dim_at(v));
            if self.mats[v].shape() != want {
                return Err(Error::InvalidMap(format!(
                    "matrix at vertex {v} has shape {:?}, expected {want:?}",
                    self.mats[v].shape()
                )));
            }
        }
        for (k, a) in q.arrows().iter().enumerate() {
            let lhs = &self.mats[a.target] * self.source.map(k);
            let rhs = self.target.map(k) * &self.mats[a.source];
            if lhs != rhs {
                return Err(Error::InvalidMap(format!("does not commute with arrow {}", a.label)));
            }
        }
        Ok(())
    }

    pub fn zero(source: &ModuleRep<F>, target: &ModuleRep<F>) -> Self {
        let mats = (0..source.dims().len())
            .map(|v| Mat::zeros(target.dim_at(v), source.dim_at(v)))
            .collect();
        ModuleMap::new_unchecked(source, target, mats)
    }

    pub fn identity(m: &ModuleRep<F>) -> Self {
        let mats = m.dims().iter().map(|&d| Mat::identity(d)).collect();
        ModuleMap::new_unchecked(m, m, mats)
    }

    pub fn source(&self) -> &ModuleRep<F> {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep<F> {
        &self.target
    }

    pub fn mat(&self, v: usize) -> &Mat<F> {
        &self.mats[v]
    }

    pub fn mats(&self) -> &[Mat<F>] {
        &self.mats
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        assert_eq!(self.target.dims(), other.source.dims(), "maps are not composable");
        let mats = self.mats.iter().zip(&other.mats).map(|(f, g)| g * f).collect();
        ModuleMap::new_unchecked(&self.source, &other.target, mats)
    }

    pub fn add(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        let mats = self.mats.iter().zip(&other.mats).map(|(f, g)| f + g).collect();
        ModuleMap::new_unchecked(&self.source, &self.target, mats)
    }

    pub fn sub(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        let mats = self.mats.iter().zip(&other.mats).map(|(f, g)| f - g).collect();
        ModuleMap::new_unchecked(&self.source, &self.target, mats)
    }

    pub fn scale(&self, c: &F) -> ModuleMap<F> {
        let mats = self.mats.iter().map(|f| f.scale(c)).collect();
        ModuleMap::new_unchecked(&self.source, &self.target, mats)
    }

    /// Re-labels source and target with modules of identical shape.
    pub fn retarget(&self, source: &ModuleRep<F>, target: &ModuleRep<F>) -> ModuleMap<F> {
        debug_assert_eq!(source.dims(), self.source.dims());
        debug_assert_eq!(target.dims(), self.target.dims());
        ModuleMap::new_unchecked(source, target, self.mats.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(|m| m.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<ModuleMap<F>> {
        let mats: Option<Vec<Mat<F>>> = self.mats.iter().map(|m| m.inverse()).collect();
        mats.map(|m| ModuleMap::new_unchecked(&self.target, &self.source, m))
    }

    /// All entries concatenated vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<F> {
        self.mats.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    pub fn from_flat(source: &ModuleRep<F>, target: &ModuleRep<F>, v: &[F]) -> ModuleMap<F> {
        let mut mats = Vec::new();
        let mut off = 0;
        for k in 0..source.dims().len() {
            let (r, c) = (target.dim_at(k), source.dim_at(k));
            mats.push(Mat::new(r, c, v[off..off + r * c].to_vec()));
            off += r * c;
        }
        ModuleMap::new_unchecked(source, target, mats)
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total_matrix(&self) -> Mat<F> {
        let blocks: Vec<&Mat<F>> = self.mats.iter().collect();
        Mat::block_diag(&blocks)
    }
}

/// Direct sum with its canonical injections and projections.
pub struct DirectSum<F: Field> {
    pub module: ModuleRep<F>,
    pub injections: Vec<ModuleMap<F>>,
    pub projections: Vec<ModuleMap<F>>,
}

pub fn direct_sum<F: Field>(algebra: &Arc<BasedAlgebra<F>>, parts: &[ModuleRep<F>]) -> DirectSum<F> {
    let q = algebra.quiver();
    let n = q.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim_at(v)).sum()).collect();
    let maps: Vec<Mat<F>> = (0..q.arrows().len())
        .map(|a| {
            let blocks: Vec<&Mat<F>> = parts.iter().map(|p| p.map(a)).collect();
            Mat::block_diag(&blocks)
        })
        .collect();
    let module = ModuleRep::new_unchecked(algebra.clone(), dims.clone(), maps);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut off = vec![0usize; n];
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let mut i = Mat::zeros(dims[v], p.dim_at(v));
            let mut pr = Mat::zeros(p.dim_at(v), dims[v]);
            for k in 0..p.dim_at(v) {
                i[(off[v] + k, k)] = F::one();
                pr[(k, off[v] + k)] = F::one();
            }
            inj.push(i);
            proj.push(pr);
            off[v] += p.dim_at(v);
        }
        injections.push(ModuleMap::new_unchecked(p, &module, inj));
        projections.push(ModuleMap::new_unchecked(&module, p, proj));
    }
    DirectSum { module, injections, projections }
}

/// The map `⊕ X_k -> Y` assembled from components.
pub fn map_from_sum<F: Field>(sum: &DirectSum<F>, parts: &[ModuleMap<F>], target: &ModuleRep<F>) -> ModuleMap<F> {
    let mut acc = ModuleMap::zero(&sum.module, target);
    for (p, f) in sum.projections.iter().zip(parts) {
        acc = acc.add(&p.then(f));
    }
    acc
}

/// The map `X -> ⊕ Y_k` assembled from components.
pub fn map_to_sum<F: Field>(source: &ModuleRep<F>, parts: &[ModuleMap<F>], sum: &DirectSum<F>) -> ModuleMap<F> {
    let mut acc = ModuleMap::zero(source, &sum.module);
    for (i, f) in sum.injections.iter().zip(parts) {
        acc = acc.add(&f.then(i));
    }
    acc
}

/// A short exact sequence `0 -> L -> M -> N -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSeq<F: Field> {
    pub incl: ModuleMap<F>,
    pub proj: ModuleMap<F>,
}

impl<F: Field> ShortExactSeq<F> {
    pub fn new(incl: ModuleMap<F>, proj: ModuleMap<F>) -> Result<Self> {
        let s = ShortExactSeq { incl, proj };
        s.validate()?;
        Ok(s)
    }

    pub fn left(&self) -> &ModuleRep<F> {
        self.incl.source()
    }

    pub fn middle(&self) -> &ModuleRep<F> {
        self.incl.target()
    }

    pub fn right(&self) -> &ModuleRep<F> {
        self.proj.target()
    }

    pub fn validate(&self) -> Result<()> {
        self.incl.validate()?;
        self.proj.validate()?;
        if self.incl.target().dims() != self.proj.source().dims() {
            return Err(Error::InvalidSequence("maps are not composable".into()));
        }
        if !self.incl.is_injective() {
            return Err(Error::InvalidSequence("first map is not injective".into()));
        }
        if !self.proj.is_surjective() {
            return Err(Error::InvalidSequence("second map is not surjective".into()));
        }
        if !self.incl.then(&self.proj).is_zero() {
            return Err(Error::InvalidSequence("composite is nonzero".into()));
        }
        for v in 0..self.middle().dims().len() {
            if self.left().dim_at(v) + self.right().dim_at(v) != self.middle().dim_at(v) {
                return Err(Error::InvalidSequence(format!("not exact at vertex {v}")));
            }
        }
        Ok(())
    }

    /// `0 -> X -> X ⊕ Y -> Y -> 0`.
    pub fn split(x: &ModuleRep<F>, y: &ModuleRep<F>) -> Self {
        let s = direct_sum(x.algebra(), &[x.clone(), y.clone()]);
        ShortExactSeq { incl: s.injections[0].clone(), proj: s.projections[1].clone() }
    }

    /// Whether the sequence splits, decided by lifting the identity of the right end.
    pub fn is_split(&self) -> bool {
        let hs = hom_space(self.right(), self.middle()).expect("same algebra");
        let id = ModuleMap::identity(self.right()).flatten();
        let images: Vec<Vec<F>> = hs.basis().iter().map(|s| s.then(&self.proj).flatten()).collect();
        if images.is_empty() {
            return self.right().is_zero();
        }
        let a = Mat::from_cols(id.len(), &images);
        a.solve_vec(&id).is_some()
    }
}

#[cfg(test)]
mod tests;
