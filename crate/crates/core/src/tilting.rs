//! Injective dimension, self-orthogonality, finite resolutions by `add U`,
//! cotilting and Wakamatsu tilting checks, and membership in `⊥U` and `X_W`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::{ext_dim, min_inj_resolution};
use crate::modrep::{
    cokernel, decompose, injective_module, is_isomorphic, kernel, projective_module, AddCategory,
    ModuleRep, ShortExactSeq,
};
use crate::relexact::is_cogenerated_by;

pub fn injective_dimension<F: Field>(u: &ModuleRep<F>, bound: usize) -> Option<usize> {
    min_inj_resolution(u, bound).length()
}

/// Largest injective dimension among the given modules, if all are bounded.
pub fn max_injective_dimension<F: Field>(us: &[ModuleRep<F>], bound: usize) -> Option<usize> {
    let mut best = 0;
    for u in us {
        best = best.max(injective_dimension(u, bound)?);
    }
    Some(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfOrthogonality {
    /// `dim Ext^i(U, U)` for `i = 1..=bound`.
    pub dims: Vec<usize>,
    pub pass: bool,
}

pub fn is_self_orthogonal<F: Field>(u: &ModuleRep<F>, bound: usize) -> Result<SelfOrthogonality> {
    let dims: Vec<usize> = (1..=bound).map(|i| ext_dim(u, u, i)).collect::<Result<_>>()?;
    let pass = dims.iter().all(|&d| d == 0);
    Ok(SelfOrthogonality { dims, pass })
}

/// A finite resolution `0 -> U_n -> ... -> U_0 -> target -> 0` (or, for
/// coresolutions, `0 -> target -> U_0 -> ... -> U_n -> 0`) by objects of an
/// additive category, kept as its short exact pieces.
#[derive(Clone, Debug)]
pub struct HatChain<F: Field> {
    pub target: ModuleRep<F>,
    pub pieces: Vec<ShortExactSeq<F>>,
    /// The last (co)syzygy, which lies in the category.
    pub last: ModuleRep<F>,
}

impl<F: Field> HatChain<F> {
    pub fn length(&self) -> usize {
        self.pieces.len()
    }

    /// Each piece is exact and consecutive pieces connect.
    pub fn verify(&self) -> bool {
        self.pieces.iter().all(|p| p.validate().is_ok())
    }
}

/// Greedy descent by minimal right `add(u_gens)`-approximations.
pub fn hat_membership<F: Field>(
    target: &ModuleRep<F>,
    u_gens: &[ModuleRep<F>],
    depth: usize,
    seed: u64,
) -> Result<HatChain<F>> {
    let cat = AddCategory::new(u_gens, seed)?;
    let mut pieces = Vec::new();
    let mut cur = target.clone();
    for step in 0..=depth {
        if cat.contains(&cur, seed)? {
            return Ok(HatChain { target: target.clone(), pieces, last: cur });
        }
        if step == depth {
            break;
        }
        let ap = cat.right_approximation(&cur)?;
        if !ap.map.is_surjective() {
            return Err(Error::NotSurjective(step));
        }
        let (k, incl) = kernel(&ap.map);
        pieces.push(ShortExactSeq::new(incl, ap.map)?);
        cur = k;
    }
    Err(Error::DepthExceeded(depth))
}

/// Greedy coresolution by minimal left `add(u_gens)`-approximations, each of
/// which must be injective.
pub fn cohat_membership<F: Field>(
    target: &ModuleRep<F>,
    u_gens: &[ModuleRep<F>],
    depth: usize,
    seed: u64,
) -> Result<HatChain<F>> {
    let cat = AddCategory::new(u_gens, seed)?;
    let mut pieces = Vec::new();
    let mut cur = target.clone();
    for step in 0..=depth {
        if cat.contains(&cur, seed)? {
            return Ok(HatChain { target: target.clone(), pieces, last: cur });
        }
        if step == depth {
            break;
        }
        let ap = cat.left_approximation(&cur)?;
        if !ap.map.is_injective() {
            return Err(Error::Certification(format!("left approximation at step {step} is not injective")));
        }
        let (c, proj) = cokernel(&ap.map);
        pieces.push(ShortExactSeq::new(ap.map, proj)?);
        cur = c;
    }
    Err(Error::DepthExceeded(depth))
}

/// `DΛ` as a list of indecomposable injectives.
pub fn dual_lambda<F: Field>(algebra: &std::sync::Arc<crate::algebra::BasedAlgebra<F>>) -> Vec<ModuleRep<F>> {
    (0..algebra.vertex_count()).map(|v| injective_module(algebra, v)).collect()
}

pub fn lambda_modules<F: Field>(algebra: &std::sync::Arc<crate::algebra::BasedAlgebra<F>>) -> Vec<ModuleRep<F>> {
    (0..algebra.vertex_count()).map(|v| projective_module(algebra, v)).collect()
}

#[derive(Clone, Debug)]
pub struct CotiltingReport {
    pub module: String,
    pub injective_dimension: Option<usize>,
    pub self_orthogonality: SelfOrthogonality,
    /// Length of the `add U`-resolution of each indecomposable injective, or the failure.
    pub hat_lengths: std::result::Result<Vec<usize>, String>,
    pub n: usize,
}

impl CotiltingReport {
    pub fn id_ok(&self) -> bool {
        matches!(self.injective_dimension, Some(d) if d <= self.n)
    }

    pub fn hat_ok(&self) -> bool {
        matches!(&self.hat_lengths, Ok(v) if v.iter().all(|&l| l <= self.n))
    }

    pub fn pass(&self) -> bool {
        self.id_ok() && self.self_orthogonality.pass && self.hat_ok()
    }
}

impl fmt::Display for CotiltingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = match self.injective_dimension {
            Some(d) => d.to_string(),
            None => "unbounded".to_string(),
        };
        let hat = match &self.hat_lengths {
            Ok(v) => format!("{v:?}"),
            Err(e) => format!("failed ({e})"),
        };
        write!(
            f,
            "{}: id = {id}, self-orthogonal {:?} -> {}, DΛ resolution lengths {hat}, {}-cotilting: {}",
            self.module,
            self.self_orthogonality.dims,
            self.self_orthogonality.pass,
            self.n,
            if self.pass() { "pass" } else { "fail" }
        )
    }
}

/// Checks that `u` is `n`-cotilting: `id u <= n`, `Ext^{1..=bound}(u, u) = 0`,
/// and every indecomposable injective has an `add u`-resolution of length `<= n`.
pub fn is_cotilting<F: Field>(u: &ModuleRep<F>, n: usize, bound: usize, seed: u64) -> Result<CotiltingReport> {
    if bound < n {
        return Err(Error::Precondition("bound must be at least n".into()));
    }
    let id = injective_dimension(u, bound);
    let so = is_self_orthogonal(u, bound)?;
    let gens = decompose(u, seed)?.modules();
    let mut lengths = Vec::new();
    let mut failure = None;
    for i in dual_lambda(u.algebra()) {
        match hat_membership(&i, &gens, n, seed) {
            Ok(c) => lengths.push(c.length()),
            Err(e) => {
                failure = Some(format!("{}: {e}", i.label()));
                break;
            }
        }
    }
    Ok(CotiltingReport {
        module: u.label(),
        injective_dimension: id,
        self_orthogonality: so,
        hat_lengths: match failure {
            None => Ok(lengths),
            Some(e) => Err(e),
        },
        n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpMembership {
    pub module: String,
    /// `dim Ext^i(X, U)` for `i = 1..=id U`.
    pub dims: Vec<usize>,
    pub member: bool,
}

/// Membership in `⊥u`, given `id u` (higher Ext vanish automatically).
pub fn perp_membership<F: Field>(x: &ModuleRep<F>, u: &ModuleRep<F>, id_u: usize) -> Result<PerpMembership> {
    let dims: Vec<usize> = (1..=id_u).map(|i| ext_dim(x, u, i)).collect::<Result<_>>()?;
    let member = dims.iter().all(|&d| d == 0);
    Ok(PerpMembership { module: x.label(), dims, member })
}

/// Indices of the fixtures lying in `⊥u`.
pub fn perp_fixture_list<F: Field>(fixtures: &[ModuleRep<F>], u: &ModuleRep<F>, bound: usize) -> Result<Vec<usize>> {
    let id = injective_dimension(u, bound)
        .ok_or_else(|| Error::Precondition(format!("id {} exceeds {bound}", u.label())))?;
    let mut out = Vec::new();
    for (k, x) in fixtures.iter().enumerate() {
        if perp_membership(x, u, id)?.member {
            out.push(k);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XwVerdict {
    /// The coresolution ended in zero after the given number of steps.
    Finite(usize),
    /// Cosyzygy `k` is isomorphic to cosyzygy `j < k`.
    Periodic { from: usize, to: usize },
    NotMember(String),
    Undetermined,
}

impl XwVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, XwVerdict::Finite(_) | XwVerdict::Periodic { .. })
    }
}

impl fmt::Display for XwVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XwVerdict::Finite(n) => write!(f, "member (coresolution of length {n})"),
            XwVerdict::Periodic { from, to } => write!(f, "member (cosyzygy {to} ≅ cosyzygy {from})"),
            XwVerdict::NotMember(why) => write!(f, "not a member: {why}"),
            XwVerdict::Undetermined => f.write_str("undetermined"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct XwWitness<F: Field> {
    pub verdict: XwVerdict,
    /// `X^0 = x, X^1, ...`.
    pub cosyzygies: Vec<ModuleRep<F>>,
    pub pieces: Vec<ShortExactSeq<F>>,
}

fn in_perp<F: Field>(x: &ModuleRep<F>, w: &[ModuleRep<F>], bound: usize) -> Result<Option<(usize, String)>> {
    for i in 1..=bound {
        for g in w {
            if ext_dim(x, g, i)? != 0 {
                return Ok(Some((i, g.label())));
            }
        }
    }
    Ok(None)
}

/// Membership in `X_W`: `x ∈ ⊥W` with a coresolution by minimal left
/// `add W`-approximations whose cosyzygies stay in `⊥W`. The search stops at
/// `depth` steps unless a cosyzygy vanishes or repeats up to isomorphism.
/// `ext_bound` limits the Ext degrees tested for `⊥W`; it should be at least
/// the injective dimension of `W` when that is finite.
pub fn xw_membership<F: Field>(
    x: &ModuleRep<F>,
    w_gens: &[ModuleRep<F>],
    depth: usize,
    ext_bound: usize,
    seed: u64,
) -> Result<XwWitness<F>> {
    let cat = AddCategory::new(w_gens, seed)?;
    let w = cat.modules();
    let mut cosyzygies = vec![x.clone()];
    let mut pieces = Vec::new();
    let done = |verdict, cosyzygies, pieces| Ok(XwWitness { verdict, cosyzygies, pieces });
    if let Some((i, g)) = in_perp(x, &w, ext_bound)? {
        return done(XwVerdict::NotMember(format!("Ext^{i}({}, {g}) ≠ 0", x.label())), cosyzygies, pieces);
    }
    let mut cur = x.clone();
    for step in 0..depth {
        if cur.is_zero() {
            return done(XwVerdict::Finite(step), cosyzygies, pieces);
        }
        let ap = cat.left_approximation(&cur)?;
        if !ap.map.is_injective() {
            return done(
                XwVerdict::NotMember(format!("left approximation of cosyzygy {step} is not injective")),
                cosyzygies,
                pieces,
            );
        }
        let (next, proj) = cokernel(&ap.map);
        pieces.push(ShortExactSeq::new(ap.map, proj)?);
        if let Some((i, g)) = in_perp(&next, &w, ext_bound)? {
            return done(
                XwVerdict::NotMember(format!("cosyzygy {} has Ext^{i}(-, {g}) ≠ 0", step + 1)),
                cosyzygies,
                pieces,
            );
        }
        if next.is_zero() {
            cosyzygies.push(next);
            return done(XwVerdict::Finite(step + 1), cosyzygies, pieces);
        }
        for (j, earlier) in cosyzygies.iter().enumerate() {
            if earlier.dims() == next.dims() && is_isomorphic(earlier, &next, seed)? {
                let to = cosyzygies.len();
                cosyzygies.push(next);
                return done(XwVerdict::Periodic { from: j, to }, cosyzygies, pieces);
            }
        }
        cosyzygies.push(next.clone());
        cur = next;
    }
    done(XwVerdict::Undetermined, cosyzygies, pieces)
}

#[derive(Clone, Debug)]
pub struct WakamatsuReport {
    pub self_orthogonal: bool,
    pub projectives: Vec<(String, XwVerdict)>,
}

impl WakamatsuReport {
    /// `Some(true)` on pass, `Some(false)` on a definite failure, `None` if undetermined.
    pub fn verdict(&self) -> Option<bool> {
        if !self.self_orthogonal || self.projectives.iter().any(|(_, v)| matches!(v, XwVerdict::NotMember(_))) {
            return Some(false);
        }
        if self.projectives.iter().all(|(_, v)| v.is_member()) {
            Some(true)
        } else {
            None
        }
    }
}

/// `add W` is self-orthogonal (up to `ext_bound`) and every indecomposable
/// projective lies in `X_W`.
pub fn is_wakamatsu_tilting<F: Field>(
    w_gens: &[ModuleRep<F>],
    depth: usize,
    ext_bound: usize,
    seed: u64,
) -> Result<WakamatsuReport> {
    let first = w_gens.first().ok_or_else(|| Error::Precondition("empty W".into()))?;
    let cat = AddCategory::new(w_gens, seed)?;
    let w = cat.modules();
    let mut self_orthogonal = true;
    'outer: for a in &w {
        for b in &w {
            for i in 1..=ext_bound {
                if ext_dim(a, b, i)? != 0 {
                    self_orthogonal = false;
                    break 'outer;
                }
            }
        }
    }
    let mut projectives = Vec::new();
    for p in lambda_modules(first.algebra()) {
        let v = xw_membership(&p, &w, depth, ext_bound, seed)?.verdict;
        projectives.push((p.label(), v));
    }
    Ok(WakamatsuReport { self_orthogonal, projectives })
}

#[derive(Clone, Debug)]
pub struct TorsionfreeReport {
    pub extension_closed: bool,
    pub submodule_closed: bool,
    pub sequences_checked: usize,
    pub witnesses: Vec<String>,
}

impl TorsionfreeReport {
    pub fn pass(&self) -> bool {
        self.extension_closed && self.submodule_closed
    }
}

/// Closure of `add(members)` under extensions (over the given sequences) and
/// submodules (every fixture cogenerated by the members must be a member;
/// `fixtures` must list all indecomposables).
pub fn torsionfree_class_check<F: Field>(
    members: &[ModuleRep<F>],
    fixtures: &[ModuleRep<F>],
    sequences: &[ShortExactSeq<F>],
    seed: u64,
) -> Result<TorsionfreeReport> {
    let cat = AddCategory::new(members, seed)?;
    let gens = cat.modules();
    let mut witnesses = Vec::new();
    let mut checked = 0;
    let mut extension_closed = true;
    for s in sequences {
        if cat.contains(s.left(), seed)? && cat.contains(s.right(), seed)? {
            checked += 1;
            if !cat.contains(s.middle(), seed)? {
                extension_closed = false;
                witnesses.push(format!("extension {} of {} by {}", s.middle().label(), s.right().label(), s.left().label()));
            }
        }
    }
    let mut submodule_closed = true;
    for y in fixtures {
        if cat.find(y)?.is_none() && is_cogenerated_by(y, &gens)? {
            submodule_closed = false;
            witnesses.push(format!("{} embeds in the class", y.label()));
        }
    }
    Ok(TorsionfreeReport { extension_closed, submodule_closed, sequences_checked: checked, witnesses })
}

/// Submodule closure by explicit enumeration over a small finite field.
pub fn submodule_closed_enumerated<F: Field>(members: &[ModuleRep<F>], budget: usize, seed: u64) -> Result<bool> {
    let cat = AddCategory::new(members, seed)?;
    for g in cat.modules() {
        for bases in crate::modrep::enumerate_submodules(&g, budget)? {
            let (s, _) = crate::modrep::submodule(&g, &bases)?;
            if !cat.contains(&s, seed)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
