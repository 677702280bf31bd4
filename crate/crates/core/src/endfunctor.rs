//! Endomorphism algebras of a basic module, possibly modulo an ideal `[C]`,
//! rebuilt as bound quiver algebras, and the functor `Hom(G, -)` into their
//! module categories.
//!
//! A path `s -> t` of the rebuilt algebra stands for a map `G_t -> G_s`, so
//! that `e_s Γ e_t = Hom(G_t, G_s)` and the product of paths is composition.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{build_based_algebra, Arrow, BasedAlgebra, PathWord, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::modrep::{decompose, hom_space, indecomposable_data, Indecomposable, ModuleMap, ModuleRep};
use crate::relexact::{quotient_hom, QuotientHom, SubcatSpec};

const PATH_BUDGET: usize = 50_000;

/// `End(G)` or `End(G) / [C](G, G)` with an explicit quiver presentation.
#[derive(Clone)]
pub struct EndPresentation<F: Field> {
    summands: Vec<ModuleRep<F>>,
    subcat: SubcatSpec<F>,
    /// `homs[s][t]` is `Hom(G_s, G_t)` modulo the ideal.
    homs: Vec<Vec<QuotientHom<F>>>,
    arrow_maps: Vec<ModuleMap<F>>,
    algebra: Arc<BasedAlgebra<F>>,
}

impl<F: Field> fmt::Debug for EndPresentation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EndPresentation")
            .field("summands", &self.summands.iter().map(|m| m.label()).collect::<Vec<_>>())
            .field("algebra", &self.algebra)
            .finish()
    }
}

impl<F: Field> EndPresentation<F> {
    /// Indecomposable summands `G_0, ..., G_{n-1}`; vertex `i` belongs to `G_i`.
    pub fn summands(&self) -> &[ModuleRep<F>] {
        &self.summands
    }

    pub fn subcat(&self) -> &SubcatSpec<F> {
        &self.subcat
    }

    pub fn algebra(&self) -> &Arc<BasedAlgebra<F>> {
        &self.algebra
    }

    pub fn quiver(&self) -> &Quiver {
        self.algebra.quiver()
    }

    /// The map `G_t -> G_s` chosen for arrow `a: s -> t`.
    pub fn arrow_map(&self, a: usize) -> &ModuleMap<F> {
        &self.arrow_maps[a]
    }

    /// `Hom(G_s, G_t)` modulo the ideal.
    pub fn hom(&self, s: usize, t: usize) -> &QuotientHom<F> {
        &self.homs[s][t]
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `cartan[s][t] = dim e_s Γ e_t`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let n = self.summands.len();
        (0..n).map(|s| (0..n).map(|t| self.homs[t][s].dim()).collect()).collect()
    }

    /// The map represented by a path.
    pub fn evaluate(&self, p: &PathWord) -> ModuleMap<F> {
        let mut m = ModuleMap::identity(&self.summands[p.start]);
        for &a in &p.arrows {
            m = self.arrow_maps[a].then(&m);
        }
        m
    }
}

/// `End(G)` for the basic module underlying `gens`.
pub fn end_algebra<F: Field>(gens: &[ModuleRep<F>], seed: u64) -> Result<EndPresentation<F>> {
    present(gens, SubcatSpec::empty(), seed)
}

/// `End(G) / [C](G, G)`; summands of `G` lying in `C` are dropped.
pub fn stable_end_algebra<F: Field>(
    gens: &[ModuleRep<F>],
    subcat: &SubcatSpec<F>,
    seed: u64,
) -> Result<EndPresentation<F>> {
    present(gens, subcat.clone(), seed)
}

fn basic_summands<F: Field>(gens: &[ModuleRep<F>], subcat: &SubcatSpec<F>, seed: u64) -> Result<Vec<ModuleRep<F>>> {
    let mut out: Vec<ModuleRep<F>> = Vec::new();
    let mut data: Vec<Indecomposable<F>> = Vec::new();
    for g in gens {
        let dec = decompose(g, seed)?;
        let whole = dec.total_count() == 1;
        for (x, _) in dec.summands {
            // An indecomposable generator keeps its own basis and name.
            let m = if whole { g.clone() } else { x.module.clone() };
            let mut seen = false;
            for d in &data {
                if Indecomposable::iso_to(d, &m)?.is_some() {
                    seen = true;
                    break;
                }
            }
            if seen || subcat.contains(&m, seed)? {
                continue;
            }
            data.push(x);
            out.push(m);
        }
    }
    Ok(out)
}

fn rep<F: Field>(q: &QuotientHom<F>, c: &[F]) -> ModuleMap<F> {
    q.hom.combine(&q.coset.mul_vec(c))
}

/// Row echelon form grown one vector at a time.
struct Echelon<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        v
    }

    /// Adds `v`; returns false when it was already in the span.
    fn insert(&mut self, v: &[F]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, r) in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(&v) {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

fn present<F: Field>(gens: &[ModuleRep<F>], subcat: SubcatSpec<F>, seed: u64) -> Result<EndPresentation<F>> {
    let summands = basic_summands(gens, &subcat, seed)?;
    let n = summands.len();
    let mut homs = Vec::with_capacity(n);
    for s in &summands {
        let mut row = Vec::with_capacity(n);
        for t in &summands {
            row.push(quotient_hom(s, t, &subcat)?);
        }
        homs.push(row);
    }

    // Radical of the quotient category between summands, in coset coordinates.
    let mut rad: Vec<Vec<Mat<F>>> = vec![Vec::with_capacity(n); n];
    for s in 0..n {
        for t in 0..n {
            let q = &homs[s][t];
            let m = if s != t {
                Mat::identity(q.dim())
            } else {
                let data = indecomposable_data(&summands[s], seed)?.ok_or_else(|| {
                    Error::DecompositionFailed(format!("{} is not indecomposable", summands[s].label()))
                })?;
                let cols: Vec<Vec<F>> = data.radical_basis().iter().map(|f| q.coset_coords(f)).collect();
                Mat::from_cols(q.dim(), &cols).column_space()
            };
            rad[s].push(m);
        }
    }

    // Irreducible maps: a complement of rad^2 inside rad.
    let mut arrows = Vec::new();
    let mut arrow_maps = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // Arrow i -> j is a map G_j -> G_i.
            let q = &homs[j][i];
            if q.dim() == 0 {
                continue;
            }
            let mut span = Echelon::new();
            for u in 0..n {
                let (a, b) = (&rad[j][u], &rad[u][i]);
                for x in 0..a.cols() {
                    let f = rep(&homs[j][u], &a.col(x));
                    for y in 0..b.cols() {
                        let g = rep(&homs[u][i], &b.col(y));
                        span.insert(&q.coset_coords(&f.then(&g)));
                    }
                }
            }
            let r = &rad[j][i];
            for x in 0..r.cols() {
                let c = r.col(x);
                if span.insert(&c) {
                    arrows.push(Arrow { label: format!("a{}", arrows.len()), source: i, target: j });
                    arrow_maps.push(rep(q, &c));
                }
            }
        }
    }
    let quiver = Quiver::new(n, arrows)?;

    // Evaluate paths layer by layer until every path of some length vanishes.
    let mut paths: Vec<PathWord> = Vec::new();
    let mut maps: Vec<ModuleMap<F>> = Vec::new();
    let mut coords: Vec<Vec<F>> = Vec::new();
    let mut layer: Vec<usize> = Vec::new();
    for v in 0..n {
        layer.push(paths.len());
        paths.push(PathWord::trivial(v));
        let id = ModuleMap::identity(&summands[v]);
        coords.push(homs[v][v].coset_coords(&id));
        maps.push(id);
    }
    loop {
        let mut next = Vec::new();
        for &k in &layer {
            let p = paths[k].clone();
            for a in quiver.arrows_from(p.end(&quiver)) {
                let t = quiver.arrow(a).target;
                let m = arrow_maps[a].then(&maps[k]);
                let mut w = p.clone();
                w.arrows.push(a);
                next.push(paths.len());
                coords.push(homs[t][p.start].coset_coords(&m));
                paths.push(w);
                maps.push(m);
                if paths.len() > PATH_BUDGET {
                    return Err(Error::Budget(format!("more than {PATH_BUDGET} paths")));
                }
            }
        }
        let done = next.iter().all(|&k| coords[k].iter().all(|x| x.is_zero()));
        layer = next;
        if done {
            break;
        }
    }
    let cap = paths.last().map_or(0, |p| p.len());

    // The paths must span every block.
    let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (k, p) in paths.iter().enumerate() {
        blocks.entry((p.start, p.end(&quiver))).or_default().push(k);
    }
    for i in 0..n {
        for j in 0..n {
            let want = homs[j][i].dim();
            let got = blocks
                .get(&(i, j))
                .map_or(0, |ks| Mat::from_cols(want, &ks.iter().map(|&k| coords[k].clone()).collect::<Vec<_>>()).rank());
            if got != want {
                return Err(Error::Certification(format!(
                    "paths {i} -> {j} span {got} of {want} dimensions"
                )));
            }
        }
    }

    // Relations: kernel of evaluation, thinned to a generating set.
    let index: HashMap<PathWord, usize> = paths.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    let mut candidates: Vec<Vec<(usize, F)>> = Vec::new();
    let mut keys: Vec<_> = blocks.keys().copied().collect();
    keys.sort();
    for key in keys {
        let ks: Vec<usize> = blocks[&key].iter().copied().filter(|&k| paths[k].len() >= 2).collect();
        if ks.is_empty() {
            continue;
        }
        let dim = homs[key.1][key.0].dim();
        let e = Mat::from_cols(dim, &ks.iter().map(|&k| coords[k].clone()).collect::<Vec<_>>());
        let kb = e.kernel_basis();
        for c in 0..kb.cols() {
            let v = kb.col(c);
            candidates.push(ks.iter().zip(v).filter(|(_, x)| !x.is_zero()).map(|(&k, x)| (k, x)).collect());
        }
    }
    let degree = |r: &Vec<(usize, F)>| {
        let lens = r.iter().map(|(k, _)| paths[*k].len());
        (lens.clone().max().unwrap_or(0), lens.min().unwrap_or(0), r.len())
    };
    candidates.sort_by_key(degree);

    let mut ideal: Echelon<F> = Echelon::new();
    let mut relations = Vec::new();
    let total = paths.len();
    let dense = |r: &[(usize, F)]| {
        let mut v = vec![F::zero(); total];
        for (k, x) in r {
            v[*k] = x.clone();
        }
        v
    };
    for r in candidates {
        if ideal.contains(&dense(&r)) {
            continue;
        }
        let (s, t) = (paths[r[0].0].start, paths[r[0].0].end(&quiver));
        let min_len = r.iter().map(|(k, _)| paths[*k].len()).min().unwrap_or(0);
        for u in paths.iter().filter(|u| u.end(&quiver) == s) {
            for w in paths.iter().filter(|w| w.start == t) {
                if u.len() + min_len + w.len() > cap {
                    continue;
                }
                let mut v = vec![F::zero(); total];
                for (k, x) in &r {
                    let mut arrows = u.arrows.clone();
                    arrows.extend(&paths[*k].arrows);
                    arrows.extend(&w.arrows);
                    if let Some(&idx) = index.get(&PathWord { start: u.start, arrows }) {
                        v[idx] = v[idx].clone() + x.clone();
                    }
                }
                ideal.insert(&v);
            }
        }
        relations.push(Relation { terms: r.iter().map(|(k, x)| (x.clone(), paths[*k].clone())).collect() });
    }

    let algebra = build_based_algebra(quiver, relations)?;
    let want: usize = homs.iter().flatten().map(|q| q.dim()).sum();
    if algebra.dim() != want {
        return Err(Error::Certification(format!(
            "rebuilt algebra has dimension {}, expected {want}",
            algebra.dim()
        )));
    }
    let pres = EndPresentation { summands, subcat, homs, arrow_maps, algebra };
    verify_multiplication(&pres)?;
    Ok(pres)
}

/// Checks the structure constants of the rebuilt algebra against composition
/// of the represented maps.
fn verify_multiplication<F: Field>(pres: &EndPresentation<F>) -> Result<()> {
    let alg = &pres.algebra;
    let q = alg.quiver();
    let evals: Vec<ModuleMap<F>> = alg.basis().iter().map(|p| pres.evaluate(p)).collect();
    for b1 in 0..alg.dim() {
        for b2 in 0..alg.dim() {
            let (s, m, t) = (alg.source(b1), alg.target(b1), alg.target(b2));
            if alg.source(b2) != m {
                continue;
            }
            let block = &pres.homs[t][s];
            let direct = block.coset_coords(&evals[b2].then(&evals[b1]));
            let mut via = vec![F::zero(); block.dim()];
            for (k, c) in alg.mult(b1, b2) {
                let ck = block.coset_coords(&evals[*k]);
                for (x, y) in via.iter_mut().zip(ck) {
                    *x = x.clone() + c.clone() * y;
                }
            }
            if via != direct {
                return Err(Error::Certification(format!(
                    "product {} * {} disagrees with composition",
                    alg.basis()[b1].display(q),
                    alg.basis()[b2].display(q)
                )));
            }
        }
    }
    Ok(())
}

/// `Hom(G, x)` modulo the ideal, as a right module over the rebuilt algebra.
pub fn hom_functor<F: Field>(pres: &EndPresentation<F>, x: &ModuleRep<F>) -> Result<ModuleRep<F>> {
    let spaces: Vec<QuotientHom<F>> =
        pres.summands.iter().map(|g| quotient_hom(g, x, &pres.subcat)).collect::<Result<_>>()?;
    let dims: Vec<usize> = spaces.iter().map(|q| q.dim()).collect();
    let q = pres.quiver();
    let mut maps = Vec::with_capacity(q.arrows().len());
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (src, tgt) = (&spaces[arrow.source], &spaces[arrow.target]);
        let cols: Vec<Vec<F>> =
            src.coset_basis().iter().map(|phi| tgt.coset_coords(&pres.arrow_maps[a].then(phi))).collect();
        maps.push(Mat::from_cols(tgt.dim(), &cols));
    }
    let name = if x.name().is_empty() { String::new() } else { format!("F({})", x.name()) };
    Ok(ModuleRep::new(pres.algebra.clone(), dims, maps)?.named(name))
}

/// The image of `f: x -> y` under the functor, between `fx` and `fy`.
pub fn hom_functor_map<F: Field>(
    pres: &EndPresentation<F>,
    f: &ModuleMap<F>,
    fx: &ModuleRep<F>,
    fy: &ModuleRep<F>,
) -> Result<ModuleMap<F>> {
    let mut mats = Vec::with_capacity(pres.summands.len());
    for g in &pres.summands {
        let sx = quotient_hom(g, f.source(), &pres.subcat)?;
        let sy = quotient_hom(g, f.target(), &pres.subcat)?;
        let cols: Vec<Vec<F>> = sx.coset_basis().iter().map(|phi| sy.coset_coords(&phi.then(f))).collect();
        mats.push(Mat::from_cols(sy.dim(), &cols));
    }
    ModuleMap::new(fx, fy, mats)
}

/// One pair of the fully-faithfulness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfEntry {
    pub source: usize,
    pub target: usize,
    /// Dimension of the source-side Hom, modulo the ideal.
    pub quotient_dim: usize,
    pub image_dim: usize,
    pub gamma_dim: usize,
}

impl FfEntry {
    pub fn pass(&self) -> bool {
        self.quotient_dim == self.image_dim && self.image_dim == self.gamma_dim
    }
}

#[derive(Clone, Debug)]
pub struct FfReport {
    pub entries: Vec<FfEntry>,
}

impl FfReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(FfEntry::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FfEntry> {
        self.entries.iter().filter(|e| !e.pass())
    }
}

/// Compares `Hom(x, y) / [C]` with `Hom_Γ(F x, F y)` for all pairs of `objects`:
/// the functor must be injective on the quotient and the dimensions must agree.
pub fn fully_faithful_check<F: Field>(pres: &EndPresentation<F>, objects: &[ModuleRep<F>]) -> Result<FfReport> {
    let images: Vec<ModuleRep<F>> = objects.iter().map(|x| hom_functor(pres, x)).collect::<Result<_>>()?;
    let mut entries = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            let q = quotient_hom(x, y, &pres.subcat)?;
            let gamma = hom_space(&images[i], &images[j])?;
            let flat: Vec<Vec<F>> = q
                .coset_basis()
                .iter()
                .map(|f| hom_functor_map(pres, f, &images[i], &images[j]).map(|m| m.flatten()))
                .collect::<Result<_>>()?;
            let len = flat.first().map_or(0, |v| v.len());
            let image_dim = if flat.is_empty() { 0 } else { Mat::from_cols(len, &flat).rank() };
            entries.push(FfEntry {
                source: i,
                target: j,
                quotient_dim: q.dim(),
                image_dim,
                gamma_dim: gamma.dim(),
            });
        }
    }
    Ok(FfReport { entries })
}

/// A vertex bijection `σ` with `#arrows(i -> j) = #arrows'(σi -> σj)`, if any.
pub fn quiver_isomorphism(a: &Quiver, b: &Quiver) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.arrows().len() != b.arrows().len() {
        return None;
    }
    let count = |q: &Quiver| {
        let mut c = vec![vec![0usize; n]; n];
        for ar in q.arrows() {
            c[ar.source][ar.target] += 1;
        }
        c
    };
    let (ca, cb) = (count(a), count(b));
    let degree = |c: &Vec<Vec<usize>>, v: usize| {
        (c[v].iter().sum::<usize>(), (0..n).map(|u| c[u][v]).sum::<usize>(), c[v][v])
    };
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn search(
        v: usize,
        n: usize,
        ca: &[Vec<usize>],
        cb: &[Vec<usize>],
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ok: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || !ok(v, w) {
                continue;
            }
            let consistent = (0..v).all(|u| ca[u][v] == cb[sigma[u]][w] && ca[v][u] == cb[w][sigma[u]]);
            if !consistent || ca[v][v] != cb[w][w] {
                continue;
            }
            sigma[v] = w;
            used[w] = true;
            if search(v + 1, n, ca, cb, sigma, used, ok) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    let ok = |v: usize, w: usize| degree(&ca, v) == degree(&cb, w);
    search(0, n, &ca, &cb, &mut sigma, &mut used, &ok).then_some(sigma)
}

/// Whether two Cartan matrices agree after relabelling vertices by `sigma`.
pub fn cartan_matches(a: &[Vec<usize>], b: &[Vec<usize>], sigma: &[usize]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (0..a.len()).all(|j| a[i][j] == b[sigma[i]][sigma[j]]))
}

/// Cartan matrix of a based algebra, `dim e_s A e_t`.
pub fn algebra_cartan<F: Field>(alg: &BasedAlgebra<F>) -> Vec<Vec<usize>> {
    let n = alg.vertex_count();
    (0..n).map(|s| (0..n).map(|t| alg.paths_between(s, t).len()).collect()).collect()
}

#[cfg(test)]
mod tests;
