use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

use super::{ModuleMap, ModuleRep};

/// The submodule with the given vertex bases (columns), and its inclusion.
pub fn submodule<F: Field>(m: &ModuleRep<F>, bases: &[Mat<F>]) -> Result<(ModuleRep<F>, ModuleMap<F>)> {
    let q = m.algebra().quiver();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let mut maps = Vec::with_capacity(q.arrows().len());
    for (k, a) in q.arrows().iter().enumerate() {
        let img = m.map(k) * &bases[a.source];
        let x = bases[a.target]
            .solve(&img)?
            .ok_or_else(|| Error::InvalidModule(format!("subspace not stable under arrow {}", a.label)))?;
        maps.push(x);
    }
    let sub = ModuleRep::new_unchecked(m.algebra().clone(), dims, maps);
    let incl = ModuleMap::new_unchecked(&sub, m, bases.to_vec());
    Ok((sub, incl))
}

/// `M / S` for a submodule given by vertex bases, with the projection.
pub fn quotient_by<F: Field>(m: &ModuleRep<F>, bases: &[Mat<F>]) -> Result<(ModuleRep<F>, ModuleMap<F>)> {
    let q = m.algebra().quiver();
    let n = q.vertex_count();
    let mut projs = Vec::with_capacity(n);
    let mut sections = Vec::with_capacity(n);
    for (v, b) in bases.iter().enumerate().take(n) {
        let c = b.complement_basis();
        let t = b.hstack(&c);
        let tinv = t
            .inverse()
            .ok_or_else(|| Error::InvalidModule(format!("dependent subspace basis at vertex {v}")))?;
        let rows: Vec<usize> = (b.cols()..t.cols()).collect();
        projs.push(tinv.select_rows(&rows));
        sections.push(c);
    }
    let dims: Vec<usize> = sections.iter().map(|c| c.cols()).collect();
    let mut maps = Vec::with_capacity(q.arrows().len());
    for (k, a) in q.arrows().iter().enumerate() {
        let mut prod = m.map(k) * &sections[a.source];
        prod = &projs[a.target] * &prod;
        maps.push(prod);
    }
    let quot = ModuleRep::new_unchecked(m.algebra().clone(), dims, maps);
    let proj = ModuleMap::new_unchecked(m, &quot, projs);
    // Stability of the submodule is equivalent to the projection commuting.
    proj.validate()
        .map_err(|_| Error::InvalidModule("quotient by a non-submodule".into()))?;
    Ok((quot, proj))
}

pub fn kernel<F: Field>(f: &ModuleMap<F>) -> (ModuleRep<F>, ModuleMap<F>) {
    let bases: Vec<Mat<F>> = f.mats().iter().map(|m| m.kernel_basis()).collect();
    submodule(f.source(), &bases).expect("kernel is a submodule")
}

/// Image of `f` with the factorisation `source -> image -> target`.
pub fn image<F: Field>(f: &ModuleMap<F>) -> (ModuleRep<F>, ModuleMap<F>, ModuleMap<F>) {
    let bases: Vec<Mat<F>> = f.mats().iter().map(|m| m.column_space()).collect();
    let (im, incl) = submodule(f.target(), &bases).expect("image is a submodule");
    let mats = f
        .mats()
        .iter()
        .zip(&bases)
        .map(|(m, b)| b.solve(m).expect("shapes").expect("lies in image"))
        .collect();
    let onto = ModuleMap::new_unchecked(f.source(), &im, mats);
    (im, onto, incl)
}

pub fn cokernel<F: Field>(f: &ModuleMap<F>) -> (ModuleRep<F>, ModuleMap<F>) {
    let bases: Vec<Mat<F>> = f.mats().iter().map(|m| m.column_space()).collect();
    quotient_by(f.target(), &bases).expect("image is a submodule")
}

/// Vertex bases of the smallest submodule containing the given homogeneous vectors.
pub fn submodule_generated<F: Field>(m: &ModuleRep<F>, gens: &[(usize, Vec<F>)]) -> Vec<Mat<F>> {
    let q = m.algebra().quiver();
    let n = q.vertex_count();
    let mut spans: Vec<Mat<F>> = (0..n).map(|v| Mat::zeros(m.dim_at(v), 0)).collect();
    let mut queue: Vec<(usize, Vec<F>)> = gens.to_vec();
    while let Some((v, x)) = queue.pop() {
        let col = Mat::from_cols(x.len(), &[x.clone()]);
        let cand = spans[v].hstack(&col);
        if cand.rank() == spans[v].cols() {
            continue;
        }
        spans[v] = cand;
        for a in q.arrows_from(v) {
            let y = m.map(a).mul_vec(&x);
            if y.iter().any(|c| !c.is_zero()) {
                queue.push((q.arrow(a).target, y));
            }
        }
    }
    spans
}

/// `M rad A`: at each vertex the sum of images of incoming arrows.
pub fn radical<F: Field>(m: &ModuleRep<F>) -> (ModuleRep<F>, ModuleMap<F>) {
    let q = m.algebra().quiver();
    let bases: Vec<Mat<F>> = (0..q.vertex_count())
        .map(|t| {
            let mut acc = Mat::zeros(m.dim_at(t), 0);
            for a in q.arrows_into(t) {
                acc = acc.hstack(m.map(a));
            }
            acc.column_space()
        })
        .collect();
    submodule(m, &bases).expect("radical is a submodule")
}

/// Elements killed by every arrow.
pub fn socle<F: Field>(m: &ModuleRep<F>) -> (ModuleRep<F>, ModuleMap<F>) {
    let q = m.algebra().quiver();
    let bases: Vec<Mat<F>> = (0..q.vertex_count())
        .map(|s| {
            let mut acc = Mat::zeros(0, m.dim_at(s));
            for a in q.arrows_from(s) {
                acc = acc.vstack(m.map(a));
            }
            acc.kernel_basis()
        })
        .collect();
    submodule(m, &bases).expect("socle is a submodule")
}

/// `M / rad M` with the projection.
pub fn top<F: Field>(m: &ModuleRep<F>) -> (ModuleRep<F>, ModuleMap<F>) {
    let (_, incl) = radical(m);
    quotient_by(m, incl.mats()).expect("radical is a submodule")
}
