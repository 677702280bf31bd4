use std::sync::Arc;

use crate::algebra::BasedAlgebra;
use crate::field::Field;
use crate::linalg::Mat;

use super::ops::radical;
use super::{ModuleMap, ModuleRep};

/// `⊕_l e_{i_l} A` with the coordinates of each summand recorded.
#[derive(Clone, Debug)]
pub struct ProjectiveSum<F: Field> {
    pub module: ModuleRep<F>,
    pub vertices: Vec<usize>,
    /// `paths[l][v]`: basis indices of `e_{i_l} A e_v`, in coordinate order.
    paths: Vec<Vec<Vec<usize>>>,
    /// `offsets[l][v]`: first coordinate of summand `l` at vertex `v`.
    offsets: Vec<Vec<usize>>,
}

impl<F: Field> ProjectiveSum<F> {
    pub fn algebra(&self) -> &Arc<BasedAlgebra<F>> {
        self.module.algebra()
    }

    /// The coordinate vector at vertex `v` of the algebra element `x` in summand `l`.
    pub fn embed(&self, l: usize, v: usize, x: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.module.dim_at(v)];
        for (k, &b) in self.paths[l][v].iter().enumerate() {
            out[self.offsets[l][v] + k] = x[b].clone();
        }
        out
    }

    /// The algebra element of summand `l` in a vector at vertex `v`.
    pub fn component(&self, l: usize, v: usize, vec: &[F]) -> Vec<F> {
        let mut x = vec![F::zero(); self.algebra().dim()];
        for (k, &b) in self.paths[l][v].iter().enumerate() {
            x[b] = vec[self.offsets[l][v] + k].clone();
        }
        x
    }

    /// The generator `e_{i_l}` of summand `l`, as a vector at vertex `i_l`.
    pub fn generator(&self, l: usize) -> Vec<F> {
        let i = self.vertices[l];
        let a = self.algebra();
        self.embed(l, i, &a.basis_vector(a.idempotent(i)))
    }

    /// The homomorphism sending generator `l` to `images[l] ∈ M_{i_l}`.
    pub fn map_to(&self, m: &ModuleRep<F>, images: &[Vec<F>]) -> ModuleMap<F> {
        let a = self.algebra();
        let n = a.vertex_count();
        let mut mats: Vec<Mat<F>> = (0..n).map(|v| Mat::zeros(m.dim_at(v), self.module.dim_at(v))).collect();
        for (l, x) in images.iter().enumerate() {
            for (v, mat) in mats.iter_mut().enumerate() {
                for (k, &b) in self.paths[l][v].iter().enumerate() {
                    let y = m.basis_matrix(b).mul_vec(x);
                    for (r, val) in y.into_iter().enumerate() {
                        mat[(r, self.offsets[l][v] + k)] = val;
                    }
                }
            }
        }
        ModuleMap::new_unchecked(&self.module, m, mats)
    }

    /// Images of the generators under `f`.
    pub fn generator_images(&self, f: &ModuleMap<F>) -> Vec<Vec<F>> {
        (0..self.vertices.len())
            .map(|l| f.mat(self.vertices[l]).mul_vec(&self.generator(l)))
            .collect()
    }
}

pub fn projective_sum<F: Field>(algebra: &Arc<BasedAlgebra<F>>, vertices: &[usize]) -> ProjectiveSum<F> {
    let q = algebra.quiver();
    let n = q.vertex_count();
    let paths: Vec<Vec<Vec<usize>>> = vertices
        .iter()
        .map(|&i| (0..n).map(|v| algebra.paths_between(i, v)).collect())
        .collect();
    let mut dims = vec![0usize; n];
    let mut offsets = Vec::new();
    for p in &paths {
        let mut off = Vec::new();
        for v in 0..n {
            off.push(dims[v]);
            dims[v] += p[v].len();
        }
        offsets.push(off);
    }
    let mut maps = Vec::new();
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let mut m = Mat::zeros(dims[t], dims[s]);
        let ab = algebra.arrow_basis(k);
        for (l, p) in paths.iter().enumerate() {
            for (c, &b) in p[s].iter().enumerate() {
                for (target_b, coef) in algebra.mult(b, ab) {
                    let r = p[t]
                        .iter()
                        .position(|&x| x == *target_b)
                        .expect("product stays in the summand");
                    m[(offsets[l][t] + r, offsets[l][s] + c)] += coef.clone();
                }
            }
        }
        maps.push(m);
    }
    let module = ModuleRep::new_unchecked(algebra.clone(), dims, maps);
    ProjectiveSum { module, vertices: vertices.to_vec(), paths, offsets }
}

/// `P(i) = e_i A`.
pub fn projective_module<F: Field>(algebra: &Arc<BasedAlgebra<F>>, i: usize) -> ModuleRep<F> {
    projective_sum(algebra, &[i]).module.named(format!("P{i}"))
}

pub fn simple_module<F: Field>(algebra: &Arc<BasedAlgebra<F>>, i: usize) -> ModuleRep<F> {
    let q = algebra.quiver();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(v == i)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| Mat::zeros(dims[a.target], dims[a.source]))
        .collect();
    ModuleRep::new_unchecked(algebra.clone(), dims, maps).named(format!("S{i}"))
}

/// The vector-space dual, a module over the opposite algebra.
pub fn dualize<F: Field>(m: &ModuleRep<F>) -> ModuleRep<F> {
    let op = m.algebra().opposite();
    let maps = m.maps().iter().map(|x| x.transpose()).collect();
    ModuleRep::new_unchecked(op, m.dims().to_vec(), maps)
}

/// `D f: D N -> D M` for `f: M -> N`.
pub fn dualize_map<F: Field>(f: &ModuleMap<F>) -> ModuleMap<F> {
    let src = dualize(f.target());
    let tgt = dualize(f.source());
    let mats = f.mats().iter().map(|x| x.transpose()).collect();
    ModuleMap::new_unchecked(&src, &tgt, mats)
}

/// `I(i) = D(A e_i)`.
pub fn injective_module<F: Field>(algebra: &Arc<BasedAlgebra<F>>, i: usize) -> ModuleRep<F> {
    let op = algebra.opposite();
    dualize(&projective_module(&op, i)).named(format!("I{i}"))
}

/// Minimal projective cover `P -> M`.
pub fn projective_cover<F: Field>(m: &ModuleRep<F>) -> (ProjectiveSum<F>, ModuleMap<F>) {
    let (_, rad) = radical(m);
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for v in 0..m.dims().len() {
        let comp = rad.mat(v).complement_basis();
        for j in 0..comp.cols() {
            vertices.push(v);
            images.push(comp.col(j));
        }
    }
    let ps = projective_sum(m.algebra(), &vertices);
    let f = ps.map_to(m, &images);
    (ps, f)
}

/// Minimal injective envelope `M -> I`, with the vertices of the indecomposable
/// injective summands of `I` in order.
pub fn injective_envelope<F: Field>(m: &ModuleRep<F>) -> (ModuleRep<F>, ModuleMap<F>, Vec<usize>) {
    let dm = dualize(m);
    let (ps, p) = projective_cover(&dm);
    let d = dualize_map(&p);
    let i = d.target().clone();
    let f = d.retarget(m, &i);
    (i, f, ps.vertices)
}
