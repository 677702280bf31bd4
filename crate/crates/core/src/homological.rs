//! Minimal resolutions, Ext, the transpose and Auslander-Reiten translates,
//! pushouts and pullbacks of short exact sequences, and Auslander-Buchweitz
//! approximations.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::modrep::{
    cokernel, decompose, direct_sum, dualize, hom_space, indecomposable_data, injective_envelope,
    kernel, map_from_sum, map_to_sum, projective_cover, projective_sum, AddCategory,
    Indecomposable, ModuleMap, ModuleRep, ShortExactSeq,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M -> 0` or a
/// minimal injective coresolution `0 -> M -> I^0 -> I^1 -> ...`, kept as the
/// short exact pieces `Ω^{k+1} -> P_k -> Ω^k` (resp. `Σ^k -> I^k -> Σ^{k+1}`).
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub kind: ResolutionKind,
    pub module: ModuleRep<F>,
    /// `P_k` (resp. `I^k`).
    pub terms: Vec<ModuleRep<F>>,
    /// Vertices of the indecomposable summands of each term.
    pub term_vertices: Vec<Vec<usize>>,
    /// `Ω^k` (resp. `Σ^k`), with `syzygies[0] = M`.
    pub syzygies: Vec<ModuleRep<F>>,
    /// Projective: covers `P_k -> Ω^k`. Injective: envelopes `Σ^k -> I^k`.
    pub covers: Vec<ModuleMap<F>>,
    /// Projective: inclusions `Ω^{k+1} -> P_k`. Injective: projections `I^k -> Σ^{k+1}`.
    pub links: Vec<ModuleMap<F>>,
    /// The last syzygy computed is zero.
    pub terminated: bool,
}

impl<F: Field> Resolution<F> {
    /// Length when the resolution terminated (0 for a projective, resp. injective, module).
    pub fn length(&self) -> Option<usize> {
        self.terminated.then(|| self.terms.len().saturating_sub(1))
    }

    /// Differential `P_k -> P_{k-1}` (resp. `I^{k-1} -> I^k`) for `k >= 1`.
    pub fn differential(&self, k: usize) -> ModuleMap<F> {
        match self.kind {
            ResolutionKind::Projective => self.covers[k].then(&self.links[k - 1]),
            ResolutionKind::Injective => self.links[k - 1].then(&self.covers[k]),
        }
    }

    /// Vertex-wise exactness at every node, and minimality.
    pub fn verify(&self) -> bool {
        let n = self.module.dims().len();
        for k in 0..self.terms.len() {
            let short = match self.kind {
                ResolutionKind::Projective => {
                    ShortExactSeq::new(self.links[k].clone(), self.covers[k].clone())
                }
                ResolutionKind::Injective => {
                    ShortExactSeq::new(self.covers[k].clone(), self.links[k].clone())
                }
            };
            if short.is_err() {
                return false;
            }
            if k >= 1 {
                let d = self.differential(k);
                let prev = &self.covers[k - 1];
                let comp = match self.kind {
                    ResolutionKind::Projective => d.then(prev),
                    ResolutionKind::Injective => prev.then(&d),
                };
                if !comp.is_zero() {
                    return false;
                }
            }
        }
        // Minimality: each syzygy lies in the radical of the cover (dually,
        // each envelope is essential, which is the same statement after duality).
        if self.kind == ResolutionKind::Projective {
            for (k, link) in self.links.iter().enumerate() {
                let (_, incl) = crate::modrep::radical(&self.terms[k]);
                for v in 0..n {
                    let both = incl.mat(v).hstack(link.mat(v));
                    if both.rank() != incl.mat(v).rank() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn min_proj_resolution<F: Field>(m: &ModuleRep<F>, bound: usize) -> Resolution<F> {
    let mut res = Resolution {
        kind: ResolutionKind::Projective,
        module: m.clone(),
        terms: Vec::new(),
        term_vertices: Vec::new(),
        syzygies: vec![m.clone()],
        covers: Vec::new(),
        links: Vec::new(),
        terminated: m.is_zero(),
    };
    let mut cur = m.clone();
    for _ in 0..=bound {
        if cur.is_zero() {
            res.terminated = true;
            break;
        }
        let (ps, cover) = projective_cover(&cur);
        let (k, incl) = kernel(&cover);
        res.terms.push(ps.module.clone());
        res.term_vertices.push(ps.vertices.clone());
        res.covers.push(cover);
        res.links.push(incl);
        res.syzygies.push(k.clone());
        cur = k;
    }
    if cur.is_zero() {
        res.terminated = true;
    }
    res
}

pub fn min_inj_resolution<F: Field>(m: &ModuleRep<F>, bound: usize) -> Resolution<F> {
    let mut res = Resolution {
        kind: ResolutionKind::Injective,
        module: m.clone(),
        terms: Vec::new(),
        term_vertices: Vec::new(),
        syzygies: vec![m.clone()],
        covers: Vec::new(),
        links: Vec::new(),
        terminated: m.is_zero(),
    };
    let mut cur = m.clone();
    for _ in 0..=bound {
        if cur.is_zero() {
            res.terminated = true;
            break;
        }
        let (i, env, verts) = injective_envelope(&cur);
        let (c, proj) = cokernel(&env);
        res.terms.push(i);
        res.term_vertices.push(verts);
        res.covers.push(env);
        res.links.push(proj);
        res.syzygies.push(c.clone());
        cur = c;
    }
    if cur.is_zero() {
        res.terminated = true;
    }
    res
}

/// Rank of the span of flattened maps.
fn span_rank<F: Field>(len: usize, maps: impl Iterator<Item = ModuleMap<F>>) -> usize {
    let cols: Vec<Vec<F>> = maps.map(|f| f.flatten()).collect();
    if cols.is_empty() || len == 0 {
        return 0;
    }
    Mat::from_cols(len, &cols).rank()
}

/// `dim Ext^i(M, N)` from a projective resolution of `M` computed to at least
/// length `i - 1`.
pub fn ext_from_resolution<F: Field>(res: &Resolution<F>, n: &ModuleRep<F>, i: usize) -> Result<usize> {
    assert_eq!(res.kind, ResolutionKind::Projective);
    if i == 0 {
        return Ok(hom_space(&res.module, n)?.dim());
    }
    if i >= res.syzygies.len() {
        if res.terminated {
            return Ok(0);
        }
        return Err(Error::DepthExceeded(i));
    }
    let omega = &res.syzygies[i];
    if omega.is_zero() {
        return Ok(0);
    }
    let h = hom_space(omega, n)?;
    let from_p = hom_space(&res.terms[i - 1], n)?;
    let incl = &res.links[i - 1];
    let len = h.matrix().rows();
    let r = span_rank(len, from_p.basis().iter().map(|g| incl.then(g)));
    Ok(h.dim() - r)
}

/// `dim Ext^i(M, N)` from an injective coresolution of `N`.
pub fn ext_from_coresolution<F: Field>(m: &ModuleRep<F>, res: &Resolution<F>, i: usize) -> Result<usize> {
    assert_eq!(res.kind, ResolutionKind::Injective);
    if i == 0 {
        return Ok(hom_space(m, &res.module)?.dim());
    }
    if i >= res.syzygies.len() {
        if res.terminated {
            return Ok(0);
        }
        return Err(Error::DepthExceeded(i));
    }
    let sigma = &res.syzygies[i];
    if sigma.is_zero() {
        return Ok(0);
    }
    let h = hom_space(m, sigma)?;
    let to_i = hom_space(m, &res.terms[i - 1])?;
    let proj = &res.links[i - 1];
    let len = h.matrix().rows();
    let r = span_rank(len, to_i.basis().iter().map(|g| g.then(proj)));
    Ok(h.dim() - r)
}

pub fn ext_dim<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>, i: usize) -> Result<usize> {
    let res = min_proj_resolution(m, i);
    ext_from_resolution(&res, n, i)
}

/// Independent computation through the injective coresolution of `n`.
pub fn ext_dim_dual<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>, i: usize) -> Result<usize> {
    let res = min_inj_resolution(n, i);
    ext_from_coresolution(m, &res, i)
}

/// `dim Ext^i(M, N)` for `i = 0..=max_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub source: String,
    pub target: String,
    pub dims: Vec<usize>,
}

pub fn ext_table<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>, max_i: usize) -> Result<ExtTable> {
    let res = min_proj_resolution(m, max_i);
    let dims = (0..=max_i).map(|i| ext_from_resolution(&res, n, i)).collect::<Result<_>>()?;
    Ok(ExtTable { source: m.label(), target: n.label(), dims })
}

/// `Tr M`, a module over the opposite algebra, from a minimal presentation
/// `P_1 -> P_0 -> M -> 0`.
pub fn transpose<F: Field>(m: &ModuleRep<F>) -> ModuleRep<F> {
    let op = m.algebra().opposite();
    if m.is_zero() {
        return ModuleRep::zero(&op);
    }
    let (p0, cover0) = projective_cover(m);
    let (omega, incl) = kernel(&cover0);
    let (p1, cover1) = projective_cover(&omega);
    let d = cover1.then(&incl);
    let q0 = projective_sum(&op, &p0.vertices);
    let q1 = projective_sum(&op, &p1.vertices);
    // d sends generator k of P_1 to sum_l lambda_{lk} in P_0; dualising
    // sends generator l of Q_0 to sum_k lambda_{lk} in Q_1.
    let gens = p1.generator_images(&d);
    let mut images = Vec::new();
    for (l, &il) in p0.vertices.iter().enumerate() {
        let mut acc = vec![F::zero(); q1.module.dim_at(il)];
        for (k, &jk) in p1.vertices.iter().enumerate() {
            let lambda = p0.component(l, jk, &gens[k]);
            let v = q1.embed(k, il, &lambda);
            for (a, b) in acc.iter_mut().zip(v) {
                *a += b;
            }
        }
        images.push(acc);
    }
    let dstar = q0.map_to(&q1.module, &images);
    cokernel(&dstar).0
}

/// `τ = D Tr`.
pub fn tau<F: Field>(m: &ModuleRep<F>) -> ModuleRep<F> {
    dualize(&transpose(m))
}

/// `τ⁻ = Tr D`.
pub fn tau_minus<F: Field>(m: &ModuleRep<F>) -> ModuleRep<F> {
    transpose(&dualize(m))
}

/// `h` with `h ∘ epi = g`, for a surjection `epi: X -> E` and `g: X -> N`
/// vanishing on the kernel of `epi`.
pub fn factor_through_epi<F: Field>(epi: &ModuleMap<F>, g: &ModuleMap<F>) -> Result<ModuleMap<F>> {
    let mut mats = Vec::new();
    for v in 0..epi.mats().len() {
        let x = epi
            .mat(v)
            .transpose()
            .solve(&g.mat(v).transpose())?
            .ok_or_else(|| Error::Certification("map does not factor through the epimorphism".into()))?;
        mats.push(x.transpose());
    }
    let h = ModuleMap::new_unchecked(epi.target(), g.target(), mats);
    h.validate()?;
    Ok(h)
}

/// `h` with `mono ∘ h = g`, for an injection `mono: K -> X` and `g: Y -> X`
/// landing in its image.
pub fn factor_through_mono<F: Field>(mono: &ModuleMap<F>, g: &ModuleMap<F>) -> Result<ModuleMap<F>> {
    let mut mats = Vec::new();
    for v in 0..mono.mats().len() {
        let x = mono
            .mat(v)
            .solve(g.mat(v))?
            .ok_or_else(|| Error::Certification("map does not factor through the monomorphism".into()))?;
        mats.push(x);
    }
    let h = ModuleMap::new_unchecked(g.source(), mono.source(), mats);
    h.validate()?;
    Ok(h)
}

/// Some `h: B -> A` with `f ∘ h = g`, for `f: A -> X` and `g: B -> X`.
pub fn lift_through<F: Field>(f: &ModuleMap<F>, g: &ModuleMap<F>) -> Result<Option<ModuleMap<F>>> {
    let hs = hom_space(g.source(), f.source())?;
    let target = g.flatten();
    if target.iter().all(|x| x.is_zero()) {
        return Ok(Some(ModuleMap::zero(g.source(), f.source())));
    }
    let cols: Vec<Vec<F>> = hs.basis().iter().map(|h| h.then(f).flatten()).collect();
    if cols.is_empty() {
        return Ok(None);
    }
    Ok(Mat::from_cols(target.len(), &cols).solve_vec(&target).map(|c| hs.combine(&c)))
}

/// Some `h: A -> B` with `h ∘ f = g`, for `f: X -> A` and `g: X -> B`.
pub fn extend_through<F: Field>(f: &ModuleMap<F>, g: &ModuleMap<F>) -> Result<Option<ModuleMap<F>>> {
    let hs = hom_space(f.target(), g.target())?;
    let target = g.flatten();
    if target.iter().all(|x| x.is_zero()) {
        return Ok(Some(ModuleMap::zero(f.target(), g.target())));
    }
    let cols: Vec<Vec<F>> = hs.basis().iter().map(|h| f.then(h).flatten()).collect();
    if cols.is_empty() {
        return Ok(None);
    }
    Ok(Mat::from_cols(target.len(), &cols).solve_vec(&target).map(|c| hs.combine(&c)))
}

/// A pushout or pullback: the new sequence and the comparison map between middle terms.
#[derive(Clone, Debug)]
pub struct SquareResult<F: Field> {
    pub seq: ShortExactSeq<F>,
    /// Pushout: `M -> E`. Pullback: `E -> M`.
    pub middle: ModuleMap<F>,
}

/// Pushout of `L -> M -> N` along `f: L -> L'`.
pub fn pushout<F: Field>(ses: &ShortExactSeq<F>, f: &ModuleMap<F>) -> Result<SquareResult<F>> {
    let a = ses.middle().algebra().clone();
    let lp = f.target().clone();
    let sum = direct_sum(&a, &[lp.clone(), ses.middle().clone()]);
    let minus_incl = ses.incl.scale(&-F::one());
    let into = map_to_sum(ses.left(), &[f.clone(), minus_incl], &sum);
    let (_, pi) = cokernel(&into);
    let new_incl = sum.injections[0].then(&pi);
    let to_n = map_from_sum(&sum, &[ModuleMap::zero(&lp, ses.right()), ses.proj.clone()], ses.right());
    let new_proj = factor_through_epi(&pi, &to_n)?;
    let middle = sum.injections[1].then(&pi);
    Ok(SquareResult { seq: ShortExactSeq::new(new_incl, new_proj)?, middle })
}

/// Pullback of `L -> M -> N` along `g: N' -> N`.
pub fn pullback<F: Field>(ses: &ShortExactSeq<F>, g: &ModuleMap<F>) -> Result<SquareResult<F>> {
    let a = ses.middle().algebra().clone();
    let np = g.source().clone();
    let sum = direct_sum(&a, &[ses.middle().clone(), np.clone()]);
    let minus_g = g.scale(&-F::one());
    let out = map_from_sum(&sum, &[ses.proj.clone(), minus_g], ses.right());
    let (_, k) = kernel(&out);
    let from_l = map_to_sum(ses.left(), &[ses.incl.clone(), ModuleMap::zero(ses.left(), &np)], &sum);
    let new_incl = factor_through_mono(&k, &from_l)?;
    let new_proj = k.then(&sum.projections[1]);
    let middle = k.then(&sum.projections[0]);
    Ok(SquareResult { seq: ShortExactSeq::new(new_incl, new_proj)?, middle })
}

/// Representatives of a basis of `Ext^1(C, A)` as short exact sequences
/// `0 -> A -> E -> C -> 0`, obtained by pushing out the projective
/// presentation of `C` along cocycles.
pub fn extension_basis<F: Field>(c: &ModuleRep<F>, a: &ModuleRep<F>) -> Result<Vec<ShortExactSeq<F>>> {
    if c.is_zero() {
        return Ok(Vec::new());
    }
    let (_, cover) = projective_cover(c);
    let (omega, incl) = kernel(&cover);
    if omega.is_zero() {
        return Ok(Vec::new());
    }
    let pres = ShortExactSeq::new(incl.clone(), cover)?;
    let h = hom_space(&omega, a)?;
    let from_p = hom_space(pres.middle(), a)?;
    let restricted: Vec<Vec<F>> = from_p
        .basis()
        .iter()
        .map(|g| h.coords(&incl.then(g)).expect("restriction is a homomorphism"))
        .collect();
    let r = Mat::from_cols(h.dim(), &restricted).column_space();
    let comp = r.complement_basis();
    let mut out = Vec::new();
    for j in 0..comp.cols() {
        let eta = h.combine(&comp.col(j));
        out.push(pushout(&pres, &eta)?.seq);
    }
    Ok(out)
}

/// The two conflations produced by [`ab_approximation`].
#[derive(Clone, Debug)]
pub struct AbApproximation<F: Field> {
    /// `Y_C -> X_C -> C`.
    pub right: ShortExactSeq<F>,
    /// `C -> Y^C -> X^C`.
    pub left: ShortExactSeq<F>,
    /// Length of the `X`-resolution of `C` used by the construction.
    pub resolution_length: usize,
}

fn zero_seq_ending<F: Field>(c: &ModuleRep<F>) -> ShortExactSeq<F> {
    let z = ModuleRep::zero(c.algebra());
    ShortExactSeq { incl: ModuleMap::zero(&z, c), proj: ModuleMap::identity(c) }
}

/// Left `W`-approximation of `x` as a conflation `x -> W -> X'`; the map must be injective.
fn cogenerator_seq<F: Field>(x: &ModuleRep<F>, w: &AddCategory<F>) -> Result<ShortExactSeq<F>> {
    let ap = w.left_approximation(x)?;
    if !ap.map.is_injective() {
        return Err(Error::Certification(format!(
            "left approximation of {} is not injective",
            x.label()
        )));
    }
    let (_, proj) = cokernel(&ap.map);
    ShortExactSeq::new(ap.map, proj)
}

/// Auslander-Buchweitz approximations of `c` with respect to `add x_gens`
/// and its cogenerator `add w_gens`.
pub fn ab_approximation<F: Field>(
    c: &ModuleRep<F>,
    x_gens: &[ModuleRep<F>],
    w_gens: &[ModuleRep<F>],
    depth: usize,
    seed: u64,
) -> Result<AbApproximation<F>> {
    let x = AddCategory::new(x_gens, seed)?;
    let w = AddCategory::new(w_gens, seed)?;
    ab_inner(c, &x, &w, depth, 0, seed)
}

fn ab_inner<F: Field>(
    c: &ModuleRep<F>,
    x: &AddCategory<F>,
    w: &AddCategory<F>,
    depth: usize,
    level: usize,
    seed: u64,
) -> Result<AbApproximation<F>> {
    if x.contains(c, seed)? {
        return Ok(AbApproximation {
            right: zero_seq_ending(c),
            left: cogenerator_seq(c, w)?,
            resolution_length: 0,
        });
    }
    if level >= depth {
        return Err(Error::DepthExceeded(depth));
    }
    let ap = x.right_approximation(c)?;
    if !ap.map.is_surjective() {
        return Err(Error::NotSurjective(level));
    }
    let (d, d_incl) = kernel(&ap.map);
    let first = ShortExactSeq::new(d_incl, ap.map.clone())?;
    let inner = ab_inner(&d, x, w, depth, level + 1, seed)?;
    // Push D -> X_0 -> C out along D -> Y^D.
    let po = pushout(&first, &inner.left.incl)?;
    let right = po.seq.clone();
    let e = right.middle().clone();
    let ew = cogenerator_seq(&e, w)?;
    // C = E / Y^D embeds in G = W / Y^D with cokernel W / E.
    let y_in_w = right.incl.then(&ew.incl);
    let (_, g_proj) = cokernel(&y_in_w);
    let c_to_g = factor_through_epi(&right.proj, &ew.incl.then(&g_proj))?;
    let g_to_f = factor_through_epi(&g_proj, &ew.proj)?;
    let left = ShortExactSeq::new(c_to_g.retarget(c, c_to_g.target()), g_to_f)?;
    Ok(AbApproximation {
        right: ShortExactSeq::new(right.incl.clone(), right.proj.retarget(right.middle(), c))?,
        left,
        resolution_length: inner.resolution_length + 1,
    })
}

/// The almost split sequence `τM -> E -> M` ending at a non-projective
/// indecomposable `m`, as a pushout of the projective presentation of `m`
/// along a generator of the socle of `Ext^1(M, τM)` over `End(M)`.
pub fn almost_split_sequence<F: Field>(m: &ModuleRep<F>, seed: u64) -> Result<ShortExactSeq<F>> {
    let data = indecomposable_data(m, seed)?
        .ok_or_else(|| Error::Precondition(format!("{} is not indecomposable", m.label())))?;
    let t = tau(m);
    if t.is_zero() {
        return Err(Error::Precondition(format!("{} is projective", m.label())));
    }
    let t = t.with_algebra(m.algebra())?;
    let (_, cover) = projective_cover(m);
    let (omega, incl) = kernel(&cover);
    let pres = ShortExactSeq::new(incl.clone(), cover.clone())?;
    let h = hom_space(&omega, &t)?;
    let from_p = hom_space(pres.middle(), &t)?;
    let cobound: Vec<Vec<F>> = from_p
        .basis()
        .iter()
        .map(|g| h.coords(&incl.then(g)).expect("restriction is a homomorphism"))
        .collect();
    let r = Mat::from_cols(h.dim(), &cobound).column_space();
    let annihilator = r.left_kernel_basis();
    // Stack, over a basis of rad End(M), the conditions "η ∘ r̃ is a coboundary".
    let mut conditions = Mat::zeros(0, h.dim());
    for rad in data.radical_basis() {
        let lifted = lift_through(&cover, &cover.then(&rad))?
            .ok_or_else(|| Error::Certification("endomorphism does not lift to the cover".into()))?;
        let on_omega = factor_through_mono(&incl, &incl.then(&lifted))?;
        let cols: Vec<Vec<F>> = h
            .basis()
            .iter()
            .map(|eta| h.coords(&on_omega.then(eta)).expect("composite lies in Hom"))
            .collect();
        let act = Mat::from_cols(h.dim(), &cols);
        conditions = conditions.vstack(&(&annihilator * &act));
    }
    let socle = conditions.kernel_basis();
    let base = r.rank();
    for j in 0..socle.cols() {
        let cand = socle.select_cols(&[j]);
        if r.hstack(&cand).rank() > base {
            let eta = h.combine(&cand.col(0));
            return Ok(pushout(&pres, &eta)?.seq);
        }
    }
    Err(Error::Certification(format!("no almost split sequence found for {}", m.label())))
}

/// Indecomposable direct predecessors of `m` in the Auslander-Reiten quiver.
pub fn ar_predecessors<F: Field>(m: &ModuleRep<F>, seed: u64) -> Result<Vec<ModuleRep<F>>> {
    if tau(m).is_zero() {
        let (rad, _) = crate::modrep::radical(m);
        return Ok(decompose(&rad, seed)?.modules());
    }
    Ok(decompose(almost_split_sequence(m, seed)?.middle(), seed)?.modules())
}

/// Indecomposable direct successors of `m` in the Auslander-Reiten quiver.
pub fn ar_successors<F: Field>(m: &ModuleRep<F>, seed: u64) -> Result<Vec<ModuleRep<F>>> {
    let next = tau_minus(m);
    if next.is_zero() {
        let (_, incl) = crate::modrep::socle(m);
        let (quot, _) = cokernel(&incl);
        return Ok(decompose(&quot, seed)?.modules());
    }
    let next = next.with_algebra(m.algebra())?;
    Ok(decompose(almost_split_sequence(&next, seed)?.middle(), seed)?.modules())
}

/// All indecomposables reachable from the projectives in the
/// Auslander-Reiten quiver, which is every indecomposable when the algebra
/// is representation-finite. Fails once `limit` classes have been found.
pub fn enumerate_indecomposables<F: Field>(
    algebra: &std::sync::Arc<crate::algebra::BasedAlgebra<F>>,
    limit: usize,
    seed: u64,
) -> Result<Vec<ModuleRep<F>>> {
    let mut found: Vec<Indecomposable<F>> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for v in 0..algebra.vertex_count() {
        queue.push_back(crate::modrep::projective_module(algebra, v));
    }
    while let Some(m) = queue.pop_front() {
        let mut seen = false;
        for x in &found {
            if x.iso_to(&m)?.is_some() {
                seen = true;
                break;
            }
        }
        if seen {
            continue;
        }
        if found.len() >= limit {
            return Err(Error::Budget(format!("more than {limit} indecomposables")));
        }
        let data = indecomposable_data(&m, seed)?
            .ok_or_else(|| Error::Certification(format!("{} is decomposable", m.label())))?;
        found.push(data);
        queue.extend(ar_predecessors(&m, seed)?);
        queue.extend(ar_successors(&m, seed)?);
    }
    let mut out: Vec<ModuleRep<F>> = found.into_iter().map(|x| x.module).collect();
    out.sort_by(|a, b| (a.total_dim(), a.dims()).cmp(&(b.total_dim(), b.dims())));
    Ok(out)
}

/// Global dimension, if at most `bound`, from the simples.
pub fn global_dimension<F: Field>(
    algebra: &std::sync::Arc<crate::algebra::BasedAlgebra<F>>,
    bound: usize,
) -> Option<usize> {
    let mut best = 0;
    for v in 0..algebra.vertex_count() {
        let s = crate::modrep::simple_module(algebra, v);
        best = best.max(min_proj_resolution(&s, bound).length()?);
    }
    Some(best)
}

#[cfg(test)]
mod tests;
