use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

use super::ops::submodule_generated;
use super::ModuleRep;

fn canonical<F: Field>(bases: &[Mat<F>]) -> Vec<Mat<F>> {
    bases
        .iter()
        .map(|b| {
            let (r, p) = b.transpose().rref();
            r.select_rows(&(0..p.len()).collect::<Vec<_>>())
        })
        .collect()
}

fn all_vectors<F: Field>(elems: &[F], d: usize, budget: usize) -> Result<Vec<Vec<F>>> {
    let count = (elems.len() as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if count > budget as u128 {
        return Err(Error::Budget(format!("{count} vectors in dimension {d}")));
    }
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * elems.len());
        for v in &out {
            for e in elems {
                let mut w = v.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        out = next;
    }
    Ok(out)
}

/// All submodules of `m`, as vertex bases (columns) in canonical form.
///
/// Only available over finite fields small enough to enumerate; `budget`
/// bounds both the vectors examined per vertex and the submodules found.
pub fn enumerate_submodules<F: Field>(m: &ModuleRep<F>, budget: usize) -> Result<Vec<Vec<Mat<F>>>> {
    let elems = F::elements().ok_or_else(|| {
        Error::Budget(format!("submodule enumeration needs a small finite field, not {}", F::name()))
    })?;
    let n = m.dims().len();
    let vectors: Vec<Vec<Vec<F>>> = (0..n)
        .map(|v| all_vectors(&elems, m.dim_at(v), budget))
        .collect::<Result<_>>()?;
    let zero: Vec<Mat<F>> = (0..n).map(|v| Mat::zeros(m.dim_at(v), 0)).collect();
    let mut seen: HashSet<Vec<Mat<F>>> = HashSet::new();
    let mut found = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(canonical(&zero));
    queue.push_back(zero);
    while let Some(s) = queue.pop_front() {
        found.push(s.clone());
        if found.len() > budget {
            return Err(Error::Budget(format!("more than {budget} submodules")));
        }
        let mut gens: Vec<(usize, Vec<F>)> = Vec::new();
        for (v, b) in s.iter().enumerate() {
            for j in 0..b.cols() {
                gens.push((v, b.col(j)));
            }
        }
        for v in 0..n {
            for x in &vectors[v] {
                if x.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let col = Mat::from_cols(x.len(), &[x.clone()]);
                if s[v].hstack(&col).rank() == s[v].cols() {
                    continue;
                }
                let mut g = gens.clone();
                g.push((v, x.clone()));
                let next = submodule_generated(m, &g);
                let key = canonical(&next);
                if seen.insert(key) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(found)
}
