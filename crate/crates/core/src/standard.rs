//! Small standard algebras and modules.

use std::sync::Arc;

use crate::algebra::{build_based_algebra, Arrow, BasedAlgebra, PathWord, Quiver, Relation};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Mat;
use crate::modrep::ModuleRep;

/// Path algebra of `0 <- 1 <- ... <- n-1`, arrow `k` going from `k+1` to `k`.
pub fn linear_a<F: Field>(n: usize) -> Result<Arc<BasedAlgebra<F>>> {
    let arrows = (0..n.saturating_sub(1))
        .map(|k| Arrow { label: format!("x{}", k + 1), source: k + 1, target: k })
        .collect();
    build_based_algebra(Quiver::new(n, arrows)?, vec![])
}

/// Cyclic quiver `i -> i+1 (mod n)` modulo all paths of length `loewy`.
pub fn cyclic_nakayama<F: Field>(n: usize, loewy: usize) -> Result<Arc<BasedAlgebra<F>>> {
    let arrows: Vec<Arrow> = (0..n)
        .map(|k| Arrow { label: format!("y{k}"), source: k, target: (k + 1) % n })
        .collect();
    let q = Quiver::new(n, arrows)?;
    let rels = (0..n)
        .map(|s| {
            let arrows = (0..loewy).map(|j| (s + j) % n).collect();
            Relation { terms: vec![(F::one(), PathWord { start: s, arrows })] }
        })
        .collect();
    build_based_algebra(q, rels)
}

/// The module of `linear_a(n)` with a copy of the field on vertices `lo..=hi`
/// and identity maps along the arrows inside the interval.
pub fn interval_module<F: Field>(a: &Arc<BasedAlgebra<F>>, lo: usize, hi: usize) -> Result<ModuleRep<F>> {
    let q = a.quiver();
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(lo <= v && v <= hi)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|ar| {
            let mut m = Mat::zeros(dims[ar.target], dims[ar.source]);
            if dims[ar.target] == 1 && dims[ar.source] == 1 {
                m[(0, 0)] = F::one();
            }
            m
        })
        .collect();
    Ok(ModuleRep::new(a.clone(), dims, maps)?.named(format!("[{lo}..{hi}]")))
}

/// All indecomposables of `linear_a(n)` (the interval modules), ordered by
/// length then by lower end.
pub fn linear_a_indecomposables<F: Field>(a: &Arc<BasedAlgebra<F>>) -> Result<Vec<ModuleRep<F>>> {
    let n = a.vertex_count();
    let mut out = Vec::new();
    for len in 1..=n {
        for lo in 0..=n - len {
            out.push(interval_module(a, lo, lo + len - 1)?);
        }
    }
    Ok(out)
}

/// Uniserial module over `cyclic_nakayama(n, loewy)` with top at `top` and
/// the given length.
pub fn nakayama_uniserial<F: Field>(a: &Arc<BasedAlgebra<F>>, top: usize, len: usize) -> Result<ModuleRep<F>> {
    let n = a.vertex_count();
    let mut dims = vec![0usize; n];
    for j in 0..len {
        dims[(top + j) % n] += 1;
    }
    // Basis: position j of the composition series sits at vertex (top + j) mod n;
    // inside each vertex, positions are ordered by j.
    let pos = |j: usize| -> (usize, usize) {
        let v = (top + j) % n;
        let idx = (0..j).filter(|&k| (top + k) % n == v).count();
        (v, idx)
    };
    let mut maps: Vec<Mat<F>> = (0..n).map(|k| Mat::zeros(dims[(k + 1) % n], dims[k])).collect();
    for j in 0..len.saturating_sub(1) {
        let (v, i) = pos(j);
        let (w, i2) = pos(j + 1);
        debug_assert_eq!(w, (v + 1) % n);
        maps[v][(i2, i)] = F::one();
    }
    Ok(ModuleRep::new(a.clone(), dims, maps)?.named(format!("U{top}.{len}")))
}
