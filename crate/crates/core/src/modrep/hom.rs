use crate::error::Result;
use crate::field::Field;
use crate::linalg::Mat;

use super::{check_same, ModuleMap, ModuleRep};

/// A basis of `Hom(M, N)` together with the data to take coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    source: ModuleRep<F>,
    target: ModuleRep<F>,
    basis: Vec<ModuleMap<F>>,
    /// Flattened basis maps as columns.
    cols: Mat<F>,
}

impl<F: Field> HomSpace<F> {
    pub fn source(&self) -> &ModuleRep<F> {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep<F> {
        &self.target
    }

    pub fn basis(&self) -> &[ModuleMap<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in the basis; `None` if `f` is not a homomorphism
    /// between these modules.
    pub fn coords(&self, f: &ModuleMap<F>) -> Option<Vec<F>> {
        let v = f.flatten();
        if v.len() != self.cols.rows() {
            return None;
        }
        if self.basis.is_empty() {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        self.cols.solve_vec(&v)
    }

    pub fn combine(&self, coeffs: &[F]) -> ModuleMap<F> {
        let mut acc = ModuleMap::zero(&self.source, &self.target);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    /// Flattened basis as columns of a matrix.
    pub fn matrix(&self) -> &Mat<F> {
        &self.cols
    }
}

/// Unknown layout: vertex blocks of `N_v x M_v` matrices, row-major.
fn layout<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>) -> (Vec<usize>, usize) {
    let mut off = Vec::new();
    let mut acc = 0;
    for v in 0..m.dims().len() {
        off.push(acc);
        acc += n.dim_at(v) * m.dim_at(v);
    }
    (off, acc)
}

/// Basis of `Hom(M, N)` from the commutation equations `f_t M_a = N_a f_s`.
pub fn hom_space<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<HomSpace<F>> {
    check_same(m, n)?;
    let (off, unknowns) = layout(m, n);
    let q = m.algebra().quiver();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ms, mt, ns, nt) = (m.dim_at(s), m.dim_at(t), n.dim_at(s), n.dim_at(t));
        if ms == 0 || nt == 0 {
            continue;
        }
        let ma = m.map(k);
        let na = n.map(k);
        for r in 0..nt {
            for c in 0..ms {
                let mut row = vec![F::zero(); unknowns];
                for kk in 0..mt {
                    let x = &ma[(kk, c)];
                    if !x.is_zero() {
                        row[off[t] + r * mt + kk] += x.clone();
                    }
                }
                for kk in 0..ns {
                    let x = &na[(r, kk)];
                    if !x.is_zero() {
                        row[off[s] + kk * ms + c] -= x.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Mat::identity(unknowns)
    } else {
        Mat::from_rows(rows).kernel_basis()
    };
    let basis = (0..kernel.cols())
        .map(|j| ModuleMap::from_flat(m, n, &kernel.col(j)))
        .collect();
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis, cols: kernel })
}
