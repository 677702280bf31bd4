//! Krull-Schmidt decomposition by Fitting's lemma, local endomorphism
//! certificates, and minimal approximations by finite lists of indecomposables.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

use super::hom::{hom_space, HomSpace};
use super::ops::submodule;
use super::{check_same, direct_sum, DirectSum, ModuleMap, ModuleRep};

pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

const RANDOM_ATTEMPTS: usize = 96;

/// An indecomposable module with a certified local endomorphism ring.
#[derive(Clone, Debug)]
pub struct Indecomposable<F: Field> {
    pub module: ModuleRep<F>,
    end: HomSpace<F>,
    /// Flattened basis of the radical of the endomorphism ring, as columns.
    rad: Mat<F>,
}

impl<F: Field> Indecomposable<F> {
    pub fn end(&self) -> &HomSpace<F> {
        &self.end
    }

    pub fn end_dim(&self) -> usize {
        self.end.dim()
    }

    /// Basis of the radical of `End(M)`.
    pub fn radical_basis(&self) -> Vec<ModuleMap<F>> {
        (0..self.rad.cols())
            .map(|j| ModuleMap::from_flat(&self.module, &self.module, &self.rad.col(j)))
            .collect()
    }

    /// Whether an endomorphism is a non-unit.
    pub fn in_radical(&self, f: &ModuleMap<F>) -> bool {
        let v = f.flatten();
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        if self.rad.cols() == 0 {
            return false;
        }
        self.rad.solve_vec(&v).is_some()
    }

    /// An isomorphism `self -> other` when `other` is isomorphic to `self`.
    pub fn iso_to(&self, other: &ModuleRep<F>) -> Result<Option<ModuleMap<F>>> {
        check_same(&self.module, other)?;
        if self.module.dims() != other.dims() {
            return Ok(None);
        }
        let there = hom_space(&self.module, other)?;
        let back = hom_space(other, &self.module)?;
        for f in there.basis() {
            for g in back.basis() {
                if !self.in_radical(&f.then(g)) {
                    return Ok(Some(f.clone()));
                }
            }
        }
        Ok(None)
    }
}

/// Summands up to isomorphism with multiplicities, plus the pieces found.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub summands: Vec<(Indecomposable<F>, usize)>,
}

impl<F: Field> Decomposition<F> {
    pub fn total_count(&self) -> usize {
        self.summands.iter().map(|(_, k)| k).sum()
    }

    pub fn modules(&self) -> Vec<ModuleRep<F>> {
        self.summands.iter().map(|(i, _)| i.module.clone()).collect()
    }
}

enum Analysis<F: Field> {
    Local(Mat<F>),
    Split(Vec<Mat<F>>, Vec<Mat<F>>),
}

fn eigen_split<F: Field>(m: &ModuleRep<F>, phi: &ModuleMap<F>) -> Option<(Option<(Vec<Mat<F>>, Vec<Mat<F>>)>, Option<F>)> {
    // Returns a splitting when `phi` has two distinct eigenvalues in F, or the
    // unique eigenvalue when `phi` is a scalar plus a nilpotent.
    let n = m.total_dim() as u32;
    let cp = phi.total_matrix().charpoly();
    let roots = F::roots(&cp);
    let lam = roots.first()?.clone();
    let shifted: Vec<Mat<F>> = phi
        .mats()
        .iter()
        .map(|x| x - &Mat::identity(x.rows()).scale(&lam))
        .collect();
    let powered: Vec<Mat<F>> = shifted.iter().map(|x| x.pow(n)).collect();
    if powered.iter().all(|x| x.is_zero()) {
        return Some((None, Some(lam)));
    }
    if roots.len() < 2 {
        // Nonlinear factor of the characteristic polynomial: not split over F.
        return None;
    }
    let ker: Vec<Mat<F>> = powered.iter().map(|x| x.kernel_basis()).collect();
    let im: Vec<Mat<F>> = powered.iter().map(|x| x.column_space()).collect();
    Some((Some((ker, im)), None))
}

fn analyse<F: Field>(m: &ModuleRep<F>, end: &HomSpace<F>, rng: &mut ChaCha8Rng) -> Result<Analysis<F>> {
    let len = end.matrix().rows();
    if end.dim() == 1 {
        return Ok(Analysis::Local(Mat::zeros(len, 0)));
    }
    let id = ModuleMap::identity(m);
    let mut shifted: Vec<Vec<F>> = Vec::new();
    let mut unsplit = false;
    for b in end.basis() {
        match eigen_split(m, b) {
            Some((Some((k, i)), _)) => return Ok(Analysis::Split(k, i)),
            Some((None, Some(lam))) => shifted.push(b.sub(&id.scale(&lam)).flatten()),
            _ => unsplit = true,
        }
    }
    let mut extra: Vec<ModuleMap<F>> = Vec::new();
    if !unsplit {
        let v = Mat::from_cols(len, &shifted).column_space();
        let idv = id.flatten();
        let contains_id = v.cols() > 0 && v.solve_vec(&idv).is_some();
        let vmaps: Vec<ModuleMap<F>> =
            (0..v.cols()).map(|j| ModuleMap::from_flat(m, m, &v.col(j))).collect();
        if !contains_id && v.cols() + 1 == end.dim() {
            // Closure under products and nilpotency of the powers V^k.
            let mut power = vmaps.clone();
            let mut closed = true;
            let mut nilpotent = false;
            for _ in 0..=m.total_dim() {
                let mut prods: Vec<Vec<F>> = Vec::new();
                for x in &power {
                    for y in &vmaps {
                        let p = y.then(x);
                        if !p.is_zero() {
                            if v.cols() == 0 || v.solve_vec(&p.flatten()).is_none() {
                                closed = false;
                                extra.push(p.clone());
                            }
                            prods.push(p.flatten());
                        }
                    }
                }
                if !closed {
                    break;
                }
                if prods.is_empty() {
                    nilpotent = true;
                    break;
                }
                let next = Mat::from_cols(len, &prods).column_space();
                if next.cols() == power.len() {
                    extra.extend(power.iter().cloned());
                    break;
                }
                power = (0..next.cols()).map(|j| ModuleMap::from_flat(m, m, &next.col(j))).collect();
            }
            if closed && nilpotent {
                return Ok(Analysis::Local(v));
            }
        } else if contains_id {
            extra.extend(vmaps);
        }
    }
    for phi in &extra {
        if let Some((Some((k, i)), _)) = eigen_split(m, phi) {
            return Ok(Analysis::Split(k, i));
        }
    }
    for _ in 0..RANDOM_ATTEMPTS {
        let coeffs: Vec<F> = (0..end.dim()).map(|_| F::random(rng)).collect();
        let phi = end.combine(&coeffs);
        if let Some((Some((k, i)), _)) = eigen_split(m, &phi) {
            return Ok(Analysis::Split(k, i));
        }
    }
    Err(Error::DecompositionFailed(format!(
        "no splitting endomorphism found for module with dimension vector {:?} over {}",
        m.dims(),
        F::name()
    )))
}

/// Certifies that `m` is indecomposable; `Ok(None)` when it splits.
pub fn indecomposable_data<F: Field>(m: &ModuleRep<F>, seed: u64) -> Result<Option<Indecomposable<F>>> {
    if m.is_zero() {
        return Ok(None);
    }
    let end = hom_space(m, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match analyse(m, &end, &mut rng)? {
        Analysis::Local(rad) => Ok(Some(Indecomposable { module: m.clone(), end, rad })),
        Analysis::Split(..) => Ok(None),
    }
}

fn split_all<F: Field>(m: &ModuleRep<F>, rng: &mut ChaCha8Rng, out: &mut Vec<Indecomposable<F>>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = hom_space(m, m)?;
    match analyse(m, &end, rng)? {
        Analysis::Local(rad) => {
            out.push(Indecomposable { module: m.clone(), end, rad });
            Ok(())
        }
        Analysis::Split(ker, im) => {
            let (a, _) = submodule(m, &ker)?;
            let (b, _) = submodule(m, &im)?;
            split_all(&a, rng, out)?;
            split_all(&b, rng, out)
        }
    }
}

/// Decomposes `m` into indecomposables grouped by isomorphism class.
///
/// Classes are ordered by dimension vector; the representative of each class
/// is the first piece found.
pub fn decompose<F: Field>(m: &ModuleRep<F>, seed: u64) -> Result<Decomposition<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pieces = Vec::new();
    split_all(m, &mut rng, &mut pieces)?;
    let mut classes: Vec<(Indecomposable<F>, usize)> = Vec::new();
    'outer: for p in pieces {
        for (c, k) in classes.iter_mut() {
            if c.iso_to(&p.module)?.is_some() {
                *k += 1;
                continue 'outer;
            }
        }
        classes.push((p, 1));
    }
    classes.sort_by(|a, b| {
        (a.0.module.total_dim(), a.0.module.dims()).cmp(&(b.0.module.total_dim(), b.0.module.dims()))
    });
    Ok(Decomposition { summands: classes })
}

/// Isomorphism test: a cheap search for an invertible map, then comparison of
/// decompositions.
pub fn is_isomorphic<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>, seed: u64) -> Result<bool> {
    check_same(m, n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let mn = hom_space(m, n)?;
    let nm = hom_space(n, m)?;
    if mn.dim() != nm.dim() {
        return Ok(false);
    }
    if hom_space(m, m)?.dim() != hom_space(n, n)?.dim() || mn.dim() == 0 {
        return Ok(false);
    }
    if mn.basis().iter().any(|f| f.is_iso()) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let coeffs: Vec<F> = (0..mn.dim()).map(|_| F::random(&mut rng)).collect();
        if mn.combine(&coeffs).is_iso() {
            return Ok(true);
        }
    }
    let dm = decompose(m, seed)?;
    let dn = decompose(n, seed)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.summands.len()];
    for (x, k) in &dm.summands {
        let mut found = false;
        for (j, (y, l)) in dn.summands.iter().enumerate() {
            if !used[j] && k == l && x.iso_to(&y.module)?.is_some() {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A minimal approximation: the sum, which generators occur in it, and the map.
#[derive(Clone)]
pub struct Approximation<F: Field> {
    pub sum: ModuleRep<F>,
    /// Generator index of each summand of `sum`, in order.
    pub summands: Vec<usize>,
    pub map: ModuleMap<F>,
}

/// `add` of a finite list of pairwise non-isomorphic indecomposables.
#[derive(Clone, Debug)]
pub struct AddCategory<F: Field> {
    gens: Vec<Indecomposable<F>>,
}

impl<F: Field> AddCategory<F> {
    /// Decomposes the given modules and keeps one representative per class.
    pub fn new(modules: &[ModuleRep<F>], seed: u64) -> Result<Self> {
        let mut gens: Vec<Indecomposable<F>> = Vec::new();
        for m in modules {
            for (x, _) in decompose(m, seed)?.summands {
                let mut seen = false;
                for g in &gens {
                    if g.iso_to(&x.module)?.is_some() {
                        seen = true;
                        break;
                    }
                }
                if !seen {
                    gens.push(x);
                }
            }
        }
        Ok(AddCategory { gens })
    }

    pub fn from_indecomposables(gens: Vec<Indecomposable<F>>) -> Self {
        AddCategory { gens }
    }

    pub fn generators(&self) -> &[Indecomposable<F>] {
        &self.gens
    }

    pub fn modules(&self) -> Vec<ModuleRep<F>> {
        self.gens.iter().map(|g| g.module.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Index of the generator isomorphic to the indecomposable `x`.
    pub fn find(&self, x: &ModuleRep<F>) -> Result<Option<usize>> {
        for (i, g) in self.gens.iter().enumerate() {
            if g.iso_to(x)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Whether `x` lies in the additive closure.
    pub fn contains(&self, x: &ModuleRep<F>, seed: u64) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        for (s, _) in decompose(x, seed)?.summands {
            if self.find(&s.module)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Radical morphisms `C_k -> C_j` between generators.
    fn radical_maps(&self, k: usize, j: usize) -> Result<Vec<ModuleMap<F>>> {
        if k == j {
            Ok(self.gens[k].radical_basis())
        } else {
            Ok(hom_space(&self.gens[k].module, &self.gens[j].module)?.basis().to_vec())
        }
    }

    /// Minimal right approximation `C_X -> X`.
    pub fn right_approximation(&self, x: &ModuleRep<F>) -> Result<Approximation<F>> {
        let mut parts: Vec<ModuleRep<F>> = Vec::new();
        let mut summands = Vec::new();
        let mut maps: Vec<ModuleMap<F>> = Vec::new();
        let homs: Vec<HomSpace<F>> = self
            .gens
            .iter()
            .map(|g| hom_space(&g.module, x))
            .collect::<Result<_>>()?;
        for k in 0..self.gens.len() {
            let hk = &homs[k];
            if hk.dim() == 0 {
                continue;
            }
            let mut radical_part: Vec<Vec<F>> = Vec::new();
            for j in 0..self.gens.len() {
                if homs[j].dim() == 0 {
                    continue;
                }
                for r in self.radical_maps(k, j)? {
                    for g in homs[j].basis() {
                        let c = r.then(g);
                        if !c.is_zero() {
                            radical_part.push(hk.coords(&c).expect("lies in Hom"));
                        }
                    }
                }
            }
            let r = Mat::from_cols(hk.dim(), &radical_part);
            let comp = r.complement_basis();
            for c in 0..comp.cols() {
                parts.push(self.gens[k].module.clone());
                summands.push(k);
                maps.push(hk.combine(&comp.col(c)));
            }
        }
        let sum = direct_sum(x.algebra(), &parts);
        let map = super::map_from_sum(&sum, &maps, x);
        Ok(Approximation { sum: sum.module, summands, map })
    }

    /// Minimal left approximation `X -> C^X`.
    pub fn left_approximation(&self, x: &ModuleRep<F>) -> Result<Approximation<F>> {
        let mut parts: Vec<ModuleRep<F>> = Vec::new();
        let mut summands = Vec::new();
        let mut maps: Vec<ModuleMap<F>> = Vec::new();
        let homs: Vec<HomSpace<F>> = self
            .gens
            .iter()
            .map(|g| hom_space(x, &g.module))
            .collect::<Result<_>>()?;
        for k in 0..self.gens.len() {
            let hk = &homs[k];
            if hk.dim() == 0 {
                continue;
            }
            let mut radical_part: Vec<Vec<F>> = Vec::new();
            for j in 0..self.gens.len() {
                if homs[j].dim() == 0 {
                    continue;
                }
                for r in self.radical_maps(j, k)? {
                    for g in homs[j].basis() {
                        let c = g.then(&r);
                        if !c.is_zero() {
                            radical_part.push(hk.coords(&c).expect("lies in Hom"));
                        }
                    }
                }
            }
            let r = Mat::from_cols(hk.dim(), &radical_part);
            let comp = r.complement_basis();
            for c in 0..comp.cols() {
                parts.push(self.gens[k].module.clone());
                summands.push(k);
                maps.push(hk.combine(&comp.col(c)));
            }
        }
        let sum: DirectSum<F> = direct_sum(x.algebra(), &parts);
        let map = super::map_to_sum(x, &maps, &sum);
        Ok(Approximation { sum: sum.module, summands, map })
    }
}
