//! Finite-dimensional algebras presented by a quiver with admissible relations.
//!
//! Paths are written left to right in the order the arrows are traversed:
//! for `a: 0 -> 1` and `b: 1 -> 2` the word `a*b` is the path `0 -> 2`, and
//! the product in the algebra is concatenation of words. With this
//! convention the indecomposable projective right module `e_i A` is spanned
//! by the paths starting at `i`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::field::{parse_scalar, Field};
use crate::linalg::Mat;

/// Default maximal path length considered when saturating the relation ideal.
pub const DEFAULT_SATURATION: usize = 16;

/// Hard cap on the number of surviving paths explored during construction.
const PATH_BUDGET: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut labels = BTreeSet::new();
        for a in &arrows {
            if a.source >= vertices || a.target >= vertices {
                return Err(Error::Quiver(format!(
                    "arrow {} has endpoint outside 0..{vertices}",
                    a.label
                )));
            }
            if a.label.is_empty() || !labels.insert(a.label.clone()) {
                return Err(Error::Quiver(format!("duplicate or empty arrow label {:?}", a.label)));
            }
            if a.label.starts_with(|c: char| c.is_ascii_digit()) || a.label.contains(['*', '+', '-', '/', ' ']) {
                return Err(Error::Quiver(format!("arrow label {:?} is not a name", a.label)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Convenience constructor from `(label, source, target)` triples.
    pub fn from_triples(vertices: usize, arrows: &[(&str, usize, usize)]) -> Result<Self> {
        Self::new(
            vertices,
            arrows
                .iter()
                .map(|&(l, s, t)| Arrow { label: l.to_string(), source: s, target: t })
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Same vertices, every arrow turned around, labels kept.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Arrow endpoints only, ignoring labels.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().map(|a| (a.source, a.target)).collect()
    }
}

/// A path in a quiver: a start vertex and a composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(v: usize) -> Self {
        PathWord { start: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        PathWord { start: q.arrow(a).source, arrows: vec![a] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrow(a).target)
    }

    pub fn from_labels(q: &Quiver, labels: &[&str]) -> Result<Self> {
        let mut arrows = Vec::new();
        for l in labels {
            arrows.push(
                q.arrow_index(l)
                    .ok_or_else(|| Error::Quiver(format!("unknown arrow {l}")))?,
            );
        }
        let Some(&first) = arrows.first() else {
            return Err(Error::Quiver("empty path word".into()));
        };
        let p = PathWord { start: q.arrow(first).source, arrows };
        p.validate(q)?;
        Ok(p)
    }

    pub fn validate(&self, q: &Quiver) -> Result<()> {
        let mut at = self.start;
        for &a in &self.arrows {
            if q.arrow(a).source != at {
                return Err(Error::Quiver(format!("path {} is not composable", self.display(q))));
            }
            at = q.arrow(a).target;
        }
        Ok(())
    }

    /// Concatenation `self` then `other`, if composable.
    pub fn concat(&self, q: &Quiver, other: &PathWord) -> Option<PathWord> {
        if self.end(q) != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(PathWord { start: self.start, arrows })
    }

    pub fn reversed(&self, q: &Quiver) -> PathWord {
        PathWord { start: self.end(q), arrows: self.arrows.iter().rev().copied().collect() }
    }

    fn contains_word(&self, w: &[usize]) -> bool {
        !w.is_empty() && self.arrows.windows(w.len()).any(|x| x == w)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.start)
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// Degree-lexicographic order on paths.
fn deglex_key(p: &PathWord) -> (usize, usize, &[usize]) {
    (p.arrows.len(), p.start, &p.arrows)
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation<F> {
    pub terms: Vec<(F, PathWord)>,
}

impl<F: Field> Relation<F> {
    /// Parses `"a*b - 2*c*d*e"`; numeric factors are coefficients.
    pub fn parse(q: &Quiver, s: &str) -> Result<Self> {
        let mut terms: Vec<(F, PathWord)> = Vec::new();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in s.chars() {
            if ch == '+' || ch == '-' {
                if !cur.trim().is_empty() {
                    chunks.push((neg, std::mem::take(&mut cur)));
                    neg = false;
                } else {
                    cur.clear();
                }
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if !cur.trim().is_empty() {
            chunks.push((neg, cur));
        }
        if chunks.is_empty() {
            return Err(Error::NonAdmissible(format!("empty relation {s:?}")));
        }
        for (neg, chunk) in chunks {
            let mut coeff = F::one();
            let mut labels = Vec::new();
            for tok in chunk.split(|c: char| c == '*' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                if tok.starts_with(|c: char| c.is_ascii_digit()) {
                    let v = parse_scalar::<F>(tok)
                        .ok_or_else(|| Error::NonAdmissible(format!("bad coefficient {tok:?}")))?;
                    coeff *= v;
                } else {
                    labels.push(tok);
                }
            }
            if neg {
                coeff = -coeff;
            }
            let p = PathWord::from_labels(q, &labels)?;
            terms.push((coeff, p));
        }
        let r = Relation { terms };
        r.validate(q)?;
        Ok(r)
    }

    pub fn validate(&self, q: &Quiver) -> Result<()> {
        let first = self
            .terms
            .first()
            .ok_or_else(|| Error::NonAdmissible("relation without terms".into()))?;
        let (s, t) = (first.1.start, first.1.end(q));
        for (c, p) in &self.terms {
            p.validate(q)?;
            if p.len() < 2 {
                return Err(Error::NonAdmissible(format!(
                    "term {} has length {} < 2",
                    p.display(q),
                    p.len()
                )));
            }
            if p.start != s || p.end(q) != t {
                return Err(Error::NonAdmissible(format!(
                    "terms {} and {} are not parallel",
                    first.1.display(q),
                    p.display(q)
                )));
            }
            if c.is_zero() {
                return Err(Error::NonAdmissible(format!("zero coefficient on {}", p.display(q))));
            }
        }
        Ok(())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut out = String::new();
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let r = c.to_repr();
            let (neg, mag) = match r.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, r),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&p.display(q));
        }
        out
    }

    pub fn reversed(&self, q: &Quiver) -> Relation<F> {
        Relation { terms: self.terms.iter().map(|(c, p)| (c.clone(), p.reversed(q))).collect() }
    }
}

/// Sparse vector over basis indices.
pub type Sparse<F> = Vec<(usize, F)>;

/// A finite-dimensional algebra with an explicit path basis and structure constants.
pub struct BasedAlgebra<F: Field> {
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    basis: Vec<PathWord>,
    mult: Vec<Vec<Sparse<F>>>,
    idempotents: Vec<usize>,
    arrow_basis: Vec<usize>,
    index: HashMap<PathWord, usize>,
    /// Every path of this length is zero.
    nilpotency: usize,
    fingerprint: u64,
    opposite: OnceLock<Arc<BasedAlgebra<F>>>,
    origin: Weak<BasedAlgebra<F>>,
}

impl<F: Field> fmt::Debug for BasedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasedAlgebra")
            .field("vertices", &self.quiver.vertex_count())
            .field("arrows", &self.quiver.arrows().len())
            .field("dim", &self.basis.len())
            .finish()
    }
}

/// Builds the algebra `kQ / I` where `I` is generated by `rels`.
pub fn build_based_algebra<F: Field>(
    q: Quiver,
    rels: Vec<Relation<F>>,
) -> Result<Arc<BasedAlgebra<F>>> {
    build_based_algebra_with(q, rels, DEFAULT_SATURATION)
}

pub fn build_based_algebra_with<F: Field>(
    q: Quiver,
    rels: Vec<Relation<F>>,
    saturation: usize,
) -> Result<Arc<BasedAlgebra<F>>> {
    for r in &rels {
        r.validate(&q)?;
    }
    let monomials: Vec<Vec<usize>> = rels
        .iter()
        .filter(|r| r.is_monomial())
        .map(|r| r.terms[0].1.arrows.clone())
        .collect();
    let general: Vec<&Relation<F>> = rels.iter().filter(|r| !r.is_monomial()).collect();
    let alive = |p: &PathWord| !monomials.iter().any(|m| p.contains_word(m));

    // Surviving paths, grouped by length.
    let mut by_len: Vec<Vec<PathWord>> = vec![(0..q.vertex_count()).map(PathWord::trivial).collect()];
    let mut total = by_len[0].len();
    let extend = |layer: &[PathWord]| -> Vec<PathWord> {
        let mut next = Vec::new();
        for p in layer {
            for a in q.arrows_from(p.end(&q)) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                let np = PathWord { start: p.start, arrows };
                if alive(&np) {
                    next.push(np);
                }
            }
        }
        next
    };

    let mut nilpotency = None;
    for len in 1..=saturation + 1 {
        let layer = extend(&by_len[len - 1]);
        total += layer.len();
        if total > PATH_BUDGET {
            return Err(Error::Saturation(saturation));
        }
        by_len.push(layer);
        if by_len[len].is_empty() {
            nilpotency = Some(len);
            break;
        }
        if general.is_empty() || len < 2 {
            continue;
        }
        // Does the ideal truncated at this length already contain a whole layer?
        let (reduced, _, index) = ideal_span(&q, &general, &by_len, len, &alive);
        let contains = |p: &PathWord| -> bool {
            let col = index[p];
            reduced_contains_unit(&reduced, col)
        };
        if let Some(n) = (1..=len).find(|&n| by_len[n].iter().all(&contains)) {
            nilpotency = Some(n);
            break;
        }
    }
    let Some(n) = nilpotency else {
        return Err(Error::Saturation(saturation));
    };
    by_len.truncate(n);

    // Quotient of kQ / J^n by the image of the ideal.
    let (reduced, pivots, _) = ideal_span(&q, &general, &by_len, n - 1, &alive);
    let cols: Vec<PathWord> = ordered_paths(&by_len, n - 1);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis: Vec<PathWord> = (0..cols.len())
        .filter(|c| !pivot_set.contains(c))
        .map(|c| cols[c].clone())
        .collect();
    basis.sort_by(|a, b| deglex_key(a).cmp(&deglex_key(b)));
    let bindex: HashMap<PathWord, usize> =
        basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

    // Normal form of every surviving path of length < n.
    let mut normal: HashMap<PathWord, Sparse<F>> = HashMap::new();
    for p in &cols {
        if let Some(&b) = bindex.get(p) {
            normal.insert(p.clone(), vec![(b, F::one())]);
        }
    }
    for (row, &pc) in pivots.iter().enumerate() {
        let mut nf = Vec::new();
        for c in 0..cols.len() {
            if c == pc || pivot_set.contains(&c) {
                continue;
            }
            let v = &reduced[(row, c)];
            if !v.is_zero() {
                nf.push((bindex[&cols[c]], -v.clone()));
            }
        }
        nf.sort_by_key(|x| x.0);
        normal.insert(cols[pc].clone(), nf);
    }

    let dim = basis.len();
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if let Some(p) = basis[i].concat(&q, &basis[j]) {
                if p.len() < n && alive(&p) {
                    mult[i][j] = normal[&p].clone();
                }
            }
        }
    }
    let idempotents = (0..q.vertex_count()).map(|v| bindex[&PathWord::trivial(v)]).collect();
    let mut arrow_basis = Vec::new();
    for a in 0..q.arrows().len() {
        let p = PathWord::arrow(&q, a);
        match bindex.get(&p) {
            Some(&b) => arrow_basis.push(b),
            None => {
                return Err(Error::NonAdmissible(format!(
                    "arrow {} vanishes in the quotient",
                    q.arrow(a).label
                )))
            }
        }
    }
    Ok(Arc::new(BasedAlgebra::assemble(
        q,
        rels,
        basis,
        mult,
        idempotents,
        arrow_basis,
        n,
    )))
}

/// Surviving paths of length `<= max_len`, largest in deglex order first.
fn ordered_paths(by_len: &[Vec<PathWord>], max_len: usize) -> Vec<PathWord> {
    let mut cols: Vec<PathWord> = by_len[..=max_len.min(by_len.len() - 1)]
        .iter()
        .flatten()
        .cloned()
        .collect();
    cols.sort_by(|a, b| deglex_key(b).cmp(&deglex_key(a)));
    cols
}

/// Row-reduced span of `p * r * q` inside paths of length `<= max_len`,
/// truncating longer terms.
#[allow(clippy::type_complexity)]
fn ideal_span<F: Field>(
    q: &Quiver,
    general: &[&Relation<F>],
    by_len: &[Vec<PathWord>],
    max_len: usize,
    alive: &dyn Fn(&PathWord) -> bool,
) -> (Mat<F>, Vec<usize>, HashMap<PathWord, usize>) {
    let cols = ordered_paths(by_len, max_len);
    let index: HashMap<PathWord, usize> =
        cols.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut rows: Vec<Vec<F>> = Vec::new();
    let top = max_len.min(by_len.len() - 1);
    for r in general {
        let (s, t) = (r.terms[0].1.start, r.terms[0].1.end(q));
        let min_term = r.terms.iter().map(|x| x.1.len()).min().unwrap_or(0);
        for lp in 0..=top {
            for p in by_len[lp].iter().filter(|p| p.end(q) == s) {
                for lq in 0..=top {
                    if lp + lq + min_term > max_len {
                        break;
                    }
                    for w in by_len[lq].iter().filter(|w| w.start == t) {
                        let mut row = vec![F::zero(); cols.len()];
                        let mut nonzero = false;
                        for (c, term) in &r.terms {
                            let full = p.concat(q, term).and_then(|x| x.concat(q, w)).unwrap();
                            if full.len() <= max_len && alive(&full) {
                                if let Some(&ix) = index.get(&full) {
                                    row[ix] += c.clone();
                                    nonzero = true;
                                }
                            }
                        }
                        if nonzero {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let m = if rows.is_empty() { Mat::zeros(0, cols.len()) } else { Mat::from_rows(rows) };
    let (r, piv) = m.rref();
    let rank = piv.len();
    let r = r.block(0, 0, rank, cols.len());
    (r, piv, index)
}

fn reduced_contains_unit<F: Field>(reduced: &Mat<F>, col: usize) -> bool {
    for i in 0..reduced.rows() {
        let row = reduced.row(i);
        if let Some(lead) = row.iter().position(|x| !x.is_zero()) {
            if lead == col {
                return row.iter().enumerate().all(|(j, x)| j == col || x.is_zero());
            }
        }
    }
    false
}

impl<F: Field> BasedAlgebra<F> {
    fn assemble(
        quiver: Quiver,
        relations: Vec<Relation<F>>,
        basis: Vec<PathWord>,
        mult: Vec<Vec<Sparse<F>>>,
        idempotents: Vec<usize>,
        arrow_basis: Vec<usize>,
        nilpotency: usize,
    ) -> Self {
        let index = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut h = DefaultHasher::new();
        F::name().hash(&mut h);
        quiver.vertex_count().hash(&mut h);
        quiver.shape().hash(&mut h);
        basis.hash(&mut h);
        mult.hash(&mut h);
        BasedAlgebra {
            quiver,
            relations,
            basis,
            mult,
            idempotents,
            arrow_basis,
            index,
            nilpotency,
            fingerprint: h.finish(),
            opposite: OnceLock::new(),
            origin: Weak::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    pub fn basis_index(&self, p: &PathWord) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn source(&self, b: usize) -> usize {
        self.basis[b].start
    }

    pub fn target(&self, b: usize) -> usize {
        self.basis[b].end(&self.quiver)
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn arrow_basis(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    /// Length bound: every path of at least this length is zero.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Equality of quiver shape, path basis and structure constants.
    pub fn same_as(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.quiver.vertex_count() == other.quiver.vertex_count()
            && self.quiver.shape() == other.quiver.shape()
            && self.basis == other.basis
            && self.mult == other.mult
    }

    /// Structure constants of `b_i * b_j`.
    pub fn mult(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in &self.mult[i][j] {
                    out[*k] += a.clone() * b.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<F> {
        let mut u = vec![F::zero(); self.dim()];
        for &e in &self.idempotents {
            u[e] = F::one();
        }
        u
    }

    pub fn basis_vector(&self, b: usize) -> Vec<F> {
        let mut u = vec![F::zero(); self.dim()];
        u[b] = F::one();
        u
    }

    /// Basis indices of `e_s A e_t`.
    pub fn paths_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.source(b) == s && self.target(b) == t).collect()
    }

    /// Basis indices of paths of positive length (a basis of the radical).
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&b| !self.basis[b].is_trivial()).collect()
    }

    /// Normal form of an arbitrary path, `None` when the path is not composable.
    pub fn path_element(&self, p: &PathWord) -> Option<Vec<F>> {
        p.validate(&self.quiver).ok()?;
        let mut acc = self.basis_vector(self.idempotents[p.start]);
        for &a in &p.arrows {
            acc = self.mul(&acc, &self.basis_vector(self.arrow_basis[a]));
        }
        Some(acc)
    }

    pub fn check_associativity(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_vector_mul(i, j);
                for k in 0..d {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let jk = self.basis_vector_mul(j, k);
                    let right = self.mul(&self.basis_vector(i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn basis_vector_mul(&self, i: usize, j: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        for (k, c) in &self.mult[i][j] {
            v[*k] += c.clone();
        }
        v
    }

    /// `sum e_i = 1` and `e_i e_j = delta_ij e_i`.
    pub fn check_idempotents(&self) -> bool {
        let u = self.unit();
        for b in 0..self.dim() {
            let x = self.basis_vector(b);
            if self.mul(&u, &x) != x || self.mul(&x, &u) != x {
                return false;
            }
        }
        for (i, &ei) in self.idempotents.iter().enumerate() {
            for (j, &ej) in self.idempotents.iter().enumerate() {
                let p = self.basis_vector_mul(ei, ej);
                let expect = if i == j { self.basis_vector(ei) } else { vec![F::zero(); self.dim()] };
                if p != expect {
                    return false;
                }
            }
        }
        true
    }

    /// The opposite algebra on the same basis, with reversed paths and product.
    ///
    /// The opposite of an opposite is the original `Arc`.
    pub fn opposite(self: &Arc<Self>) -> Arc<BasedAlgebra<F>> {
        if let Some(o) = self.origin.upgrade() {
            return o;
        }
        self.opposite
            .get_or_init(|| {
                let d = self.dim();
                let q = self.quiver.reversed();
                let basis: Vec<PathWord> = self.basis.iter().map(|p| p.reversed(&self.quiver)).collect();
                let mut mult = vec![vec![Vec::new(); d]; d];
                for (i, row) in mult.iter_mut().enumerate() {
                    for (j, slot) in row.iter_mut().enumerate() {
                        *slot = self.mult[j][i].clone();
                    }
                }
                let rels = self.relations.iter().map(|r| r.reversed(&self.quiver)).collect();
                let mut op = BasedAlgebra::assemble(
                    q,
                    rels,
                    basis,
                    mult,
                    self.idempotents.clone(),
                    self.arrow_basis.clone(),
                    self.nilpotency,
                );
                op.origin = Arc::downgrade(self);
                Arc::new(op)
            })
            .clone()
    }

    /// Human-readable summary of the presentation.
    pub fn describe(&self) -> String {
        let q = &self.quiver;
        let mut s = format!(
            "vertices: {}\narrows: {}\ndimension: {}\n",
            q.vertex_count(),
            q.arrows().len(),
            self.dim()
        );
        for a in q.arrows() {
            s.push_str(&format!("  {}: {} -> {}\n", a.label, a.source, a.target));
        }
        for r in &self.relations {
            s.push_str(&format!("  relation {}\n", r.display(q)));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F1009};

    fn a4() -> Arc<BasedAlgebra<Rational>> {
        let q = Quiver::from_triples(4, &[("a", 1, 0), ("b", 2, 1), ("c", 3, 2)]).unwrap();
        build_based_algebra(q, vec![]).unwrap()
    }

    #[test]
    fn point_algebra() {
        let q = Quiver::new(1, vec![]).unwrap();
        let a = build_based_algebra::<Rational>(q, vec![]).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.check_associativity());
    }

    #[test]
    fn linear_a4_has_dimension_ten() {
        let a = a4();
        assert_eq!(a.dim(), 10);
        assert!(a.check_associativity());
        assert!(a.check_idempotents());
        assert_eq!(a.nilpotency(), 4);
    }

    #[test]
    fn cyclic_nakayama_loewy_four() {
        let q = Quiver::from_triples(3, &[("a", 0, 2), ("b", 1, 0), ("c", 2, 1)]).unwrap();
        let rels = ["a*c*b*a", "c*b*a*c", "b*a*c*b"]
            .iter()
            .map(|s| Relation::<F1009>::parse(&q, s).unwrap())
            .collect();
        let a = build_based_algebra(q, rels).unwrap();
        assert_eq!(a.dim(), 12);
        assert!(a.check_associativity());
    }

    #[test]
    fn commutative_square() {
        let q = Quiver::from_triples(4, &[("a", 0, 1), ("b", 1, 3), ("c", 0, 2), ("d", 2, 3)]).unwrap();
        let r = Relation::<Rational>::parse(&q, "a*b - c*d").unwrap();
        let a = build_based_algebra(q, vec![r]).unwrap();
        assert_eq!(a.dim(), 9);
        assert!(a.check_associativity());
    }

    #[test]
    fn unbounded_relations_hit_saturation() {
        let q = Quiver::from_triples(1, &[("x", 0, 0), ("y", 0, 0)]).unwrap();
        let r = Relation::<F1009>::parse(&q, "x*y - y*x").unwrap();
        let err = build_based_algebra_with(q, vec![r], 6).unwrap_err();
        assert_eq!(err, Error::Saturation(6));
    }

    #[test]
    fn non_admissible_relations_rejected() {
        let q = Quiver::from_triples(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap();
        assert!(Relation::<Rational>::parse(&q, "a - b").is_err());
        let q = Quiver::from_triples(3, &[("a", 0, 1), ("b", 1, 2), ("c", 0, 2), ("d", 2, 2)]).unwrap();
        assert!(Relation::<Rational>::parse(&q, "a*b - c*d*d").is_ok());
        assert!(Relation::<Rational>::parse(&q, "a*b - d*d").is_err());
    }

    #[test]
    fn opposite_is_reversed_path_algebra() {
        let a = a4();
        let op = a.opposite();
        let rev = build_based_algebra::<Rational>(a.quiver().reversed(), vec![]).unwrap();
        assert_eq!(op.dim(), rev.dim());
        for i in 0..op.dim() {
            for j in 0..op.dim() {
                let pi = &op.basis()[i];
                let pj = &op.basis()[j];
                let expect = pi.concat(op.quiver(), pj);
                let got = op.mult(i, j);
                match expect {
                    Some(p) => {
                        let k = op.basis_index(&p).unwrap();
                        assert_eq!(got, &vec![(k, Rational::from_i64(1))]);
                        assert!(rev.basis_index(&p).is_some());
                    }
                    None => assert!(got.is_empty()),
                }
            }
        }
        let opop = op.opposite();
        assert!(Arc::ptr_eq(&opop, &a));
        assert!(opop.same_as(&a));
    }

    #[test]
    fn relation_roundtrip_display() {
        let q = Quiver::from_triples(4, &[("a", 0, 1), ("b", 1, 3), ("c", 0, 2), ("d", 2, 3)]).unwrap();
        let r = Relation::<Rational>::parse(&q, "a*b - 1/2 c*d").unwrap();
        assert_eq!(r.display(&q), "a*b - 1/2*c*d");
        assert_eq!(Relation::<Rational>::parse(&q, &r.display(&q)).unwrap(), r);
    }
}
