//! TOML file formats: algebras, modules, subcategories, short exact
//! sequences and pipeline configurations.
//!
//! Paths inside a file are relative to that file. Matrices are row-major
//! lists of rows; entries are integers or `"a/b"` strings.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use cotilt_core::field::parse_scalar;
use cotilt_core::{build_based_algebra, Arrow, BasedAlgebra, Field, Mat, ModuleMap, ModuleRep, Quiver, Relation};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowEntry {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default)]
    pub name: String,
    /// `any` for integer data, `q` when fractions occur, `p=<prime>` otherwise.
    #[serde(default = "any_field")]
    pub field: String,
    pub vertices: usize,
    #[serde(default)]
    pub arrows: Vec<ArrowEntry>,
    /// Signed sums of paths, read left to right: `"a*b"` is `a` followed by `b`.
    #[serde(default)]
    pub relations: Vec<String>,
}

fn any_field() -> String {
    "any".into()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

pub type Rows = Vec<Vec<Scalar>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    #[serde(default)]
    pub name: String,
    pub algebra: String,
    pub dims: Vec<usize>,
    /// Arrow label to a `dims[target] x dims[source]` matrix; missing arrows act by zero.
    #[serde(default)]
    pub maps: BTreeMap<String, Rows>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubcatFile {
    pub modules: Vec<String>,
    /// Closure assertions, checked against the fixtures when present.
    #[serde(default)]
    pub submodule_closed: Option<bool>,
    #[serde(default)]
    pub quotient_closed: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SesFile {
    pub left: String,
    pub middle: String,
    pub right: String,
    /// One matrix per vertex.
    pub incl: Vec<Rows>,
    pub proj: Vec<Rows>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Expectations {
    pub quotient_count: Option<usize>,
    pub gamma_vertices: Option<usize>,
    pub gamma_arrows: Option<usize>,
    pub gamma_dim: Option<usize>,
    pub cotilting_n: Option<usize>,
    pub injective_dimension: Option<usize>,
    pub census: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum SubcatMode {
    /// `C = Sub M`, computed from the fixtures.
    #[default]
    Sub,
    /// `C = add M` as given.
    Add,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub pipeline: String,
    #[serde(default)]
    pub name: String,
    pub algebra: String,
    /// Directory holding one file per indecomposable `Λ`-module.
    pub fixtures: String,
    /// `main1`: modules generating `C`.
    #[serde(default)]
    pub m: Vec<String>,
    #[serde(default)]
    pub subcategory: SubcatMode,
    /// `main2`: summands of the generator.
    #[serde(default)]
    pub generator: Vec<String>,
    /// Frozen presentation of `Γ`, required for the census.
    pub gamma_algebra: Option<String>,
    pub gamma_fixtures: Option<String>,
    /// A presentation `Γ` is compared with, up to relabelling vertices.
    pub expected_gamma: Option<String>,
    pub field: Option<String>,
    pub seed: Option<u64>,
    #[serde(default = "default_bound")]
    pub ext_bound: usize,
    #[serde(default)]
    pub expect: Expectations,
}

fn default_bound() -> usize {
    4
}

pub fn read_toml<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_toml<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let text = toml::to_string(value)?;
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn scalar<F: Field>(s: &Scalar) -> Result<F> {
    match s {
        Scalar::Int(v) => Ok(F::from_i64(*v)),
        Scalar::Text(t) => parse_scalar(t).ok_or_else(|| anyhow!("{t:?} is not a scalar of {}", F::name())),
    }
}

pub fn to_scalar<F: Field>(x: &F) -> Scalar {
    let r = x.to_repr();
    match r.parse::<i64>() {
        Ok(v) => Scalar::Int(v),
        Err(_) => Scalar::Text(r),
    }
}

pub fn matrix<F: Field>(rows: &Rows, shape: (usize, usize)) -> Result<Mat<F>> {
    let (r, c) = shape;
    if r == 0 || c == 0 {
        if rows.iter().any(|row| !row.is_empty()) {
            bail!("expected an empty {r}x{c} matrix");
        }
        return Ok(Mat::zeros(r, c));
    }
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        bail!("expected a {r}x{c} matrix");
    }
    let data = rows.iter().flatten().map(scalar).collect::<Result<Vec<F>>>()?;
    Ok(Mat::new(r, c, data))
}

pub fn to_rows<F: Field>(m: &Mat<F>) -> Rows {
    if m.cols() == 0 {
        return vec![];
    }
    (0..m.rows()).map(|i| m.row(i).iter().map(to_scalar).collect()).collect()
}

fn check_field<F: Field>(declared: &str, what: &Path) -> Result<()> {
    let ok = match declared {
        "any" | "q" => true,
        d => d.strip_prefix("p=").and_then(|p| p.parse::<u64>().ok()) == Some(F::characteristic()),
    };
    if !ok {
        bail!("{} is declared over {declared}, cannot read it over {}", what.display(), F::name());
    }
    Ok(())
}

pub fn algebra_from_file<F: Field>(file: &AlgebraFile, origin: &Path) -> Result<Arc<BasedAlgebra<F>>> {
    check_field::<F>(&file.field, origin)?;
    let arrows = file
        .arrows
        .iter()
        .map(|a| Arrow { label: a.label.clone(), source: a.source, target: a.target })
        .collect();
    let q = Quiver::new(file.vertices, arrows)?;
    let rels = file.relations.iter().map(|r| Relation::parse(&q, r)).collect::<cotilt_core::Result<Vec<_>>>()?;
    Ok(build_based_algebra(q, rels)?)
}

pub fn algebra_to_file<F: Field>(alg: &BasedAlgebra<F>, name: &str, field: &str) -> AlgebraFile {
    let q = alg.quiver();
    AlgebraFile {
        name: name.into(),
        field: field.into(),
        vertices: q.vertex_count(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowEntry { label: a.label.clone(), source: a.source, target: a.target })
            .collect(),
        relations: alg.relations().iter().map(|r| r.display(q)).collect(),
    }
}

pub fn module_to_file<F: Field>(m: &ModuleRep<F>, algebra: &str) -> ModuleFile {
    let q = m.algebra().quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(k, _)| !m.map(*k).is_zero())
        .map(|(k, a)| (a.label.clone(), to_rows(m.map(k))))
        .collect();
    ModuleFile { name: m.name().into(), algebra: algebra.into(), dims: m.dims().to_vec(), maps }
}

pub fn map_rows<F: Field>(f: &ModuleMap<F>) -> Vec<Rows> {
    f.mats().iter().map(to_rows).collect()
}

/// Reads files and caches algebras by canonical path.
pub struct Loader<F: Field> {
    algebras: HashMap<PathBuf, Arc<BasedAlgebra<F>>>,
}

impl<F: Field> Default for Loader<F> {
    fn default() -> Self {
        Loader { algebras: HashMap::new() }
    }
}

fn canonical(path: &Path) -> Result<PathBuf> {
    path.canonicalize().with_context(|| format!("resolving {}", path.display()))
}

pub fn relative(base: &Path, p: &str) -> PathBuf {
    let dir = if base.is_dir() { base } else { base.parent().unwrap_or(Path::new(".")) };
    dir.join(p)
}

impl<F: Field> Loader<F> {
    pub fn algebra(&mut self, path: &Path) -> Result<Arc<BasedAlgebra<F>>> {
        let key = canonical(path)?;
        if let Some(a) = self.algebras.get(&key) {
            return Ok(a.clone());
        }
        let file: AlgebraFile = read_toml(&key)?;
        let a = algebra_from_file(&file, &key).with_context(|| format!("building {}", key.display()))?;
        self.algebras.insert(key, a.clone());
        Ok(a)
    }

    /// Registers an algebra built in memory under a file path.
    pub fn insert_algebra(&mut self, path: &Path, a: Arc<BasedAlgebra<F>>) -> Result<()> {
        self.algebras.insert(canonical(path)?, a);
        Ok(())
    }

    pub fn module(&mut self, path: &Path) -> Result<ModuleRep<F>> {
        let file: ModuleFile = read_toml(path)?;
        let alg = self.algebra(&relative(path, &file.algebra))?;
        module_from_file(&file, &alg).with_context(|| format!("loading {}", path.display()))
    }

    pub fn modules(&mut self, base: &Path, list: &[String]) -> Result<Vec<ModuleRep<F>>> {
        list.iter().map(|p| self.module(&relative(base, p))).collect()
    }

    /// Every `*.toml` module file of a directory, in file name order.
    pub fn module_dir(&mut self, dir: &Path) -> Result<Vec<ModuleRep<F>>> {
        module_files(dir)?.iter().map(|p| self.module(p)).collect()
    }

    pub fn subcat(&mut self, path: &Path) -> Result<(Vec<ModuleRep<F>>, SubcatFile)> {
        let file: SubcatFile = read_toml(path)?;
        let mods = self.modules(path, &file.modules)?;
        Ok((mods, file))
    }

    pub fn ses(&mut self, path: &Path) -> Result<cotilt_core::ShortExactSeq<F>> {
        let file: SesFile = read_toml(path)?;
        let l = self.module(&relative(path, &file.left))?;
        let m = self.module(&relative(path, &file.middle))?;
        let r = self.module(&relative(path, &file.right))?;
        let incl = map_from_rows(&file.incl, &l, &m)?;
        let proj = map_from_rows(&file.proj, &m, &r)?;
        Ok(cotilt_core::ShortExactSeq::new(incl, proj)?)
    }
}

pub fn module_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("listing {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn module_from_file<F: Field>(file: &ModuleFile, alg: &Arc<BasedAlgebra<F>>) -> Result<ModuleRep<F>> {
    let q = alg.quiver();
    if file.dims.len() != q.vertex_count() {
        bail!("expected {} dimensions, found {}", q.vertex_count(), file.dims.len());
    }
    for label in file.maps.keys() {
        if q.arrow_index(label).is_none() {
            bail!("unknown arrow {label:?}");
        }
    }
    let mut maps = Vec::with_capacity(q.arrows().len());
    for a in q.arrows() {
        let shape = (file.dims[a.target], file.dims[a.source]);
        maps.push(match file.maps.get(&a.label) {
            Some(rows) => matrix(rows, shape).with_context(|| format!("arrow {}", a.label))?,
            None => Mat::zeros(shape.0, shape.1),
        });
    }
    Ok(ModuleRep::new(alg.clone(), file.dims.clone(), maps)?.named(file.name.clone()))
}

pub fn map_from_rows<F: Field>(rows: &[Rows], x: &ModuleRep<F>, y: &ModuleRep<F>) -> Result<ModuleMap<F>> {
    let n = x.dims().len();
    if rows.len() != n {
        bail!("expected {n} vertex matrices, found {}", rows.len());
    }
    let mats = (0..n)
        .map(|v| matrix(&rows[v], (y.dim_at(v), x.dim_at(v))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleMap::new(x, y, mats)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cotilt_core::field::{Rational, F1009};
    use cotilt_core::standard::{cyclic_nakayama, interval_module, linear_a};

    #[test]
    fn algebra_roundtrip() {
        let a = cyclic_nakayama::<F1009>(3, 4).unwrap();
        let f = algebra_to_file(&a, "nakayama", "any");
        let text = toml::to_string(&f).unwrap();
        let back: AlgebraFile = toml::from_str(&text).unwrap();
        let b = algebra_from_file::<F1009>(&back, Path::new("x")).unwrap();
        assert!(a.same_as(&b));
    }

    #[test]
    fn module_roundtrip_with_fractions() {
        let a = linear_a::<Rational>(3).unwrap();
        let m = interval_module(&a, 0, 2).unwrap();
        let half = Rational::from_i64(1) / Rational::from_i64(2);
        let scaled = ModuleRep::new(a.clone(), m.dims().to_vec(), m.maps().iter().map(|x| x.scale(&half)).collect())
            .unwrap()
            .named("h");
        let f = module_to_file(&scaled, "a3.toml");
        let text = toml::to_string(&f).unwrap();
        assert!(text.contains("1/2"));
        let back: ModuleFile = toml::from_str(&text).unwrap();
        let m2 = module_from_file(&back, &a).unwrap();
        assert!(m2.same_data(&scaled));
        // The same file reads over a prime field where 2 is invertible.
        let p = linear_a::<F1009>(3).unwrap();
        assert!(module_from_file(&back, &p).is_ok());
    }

    #[test]
    fn rejects_bad_shapes() {
        let a = linear_a::<F1009>(2).unwrap();
        let f = ModuleFile {
            name: "bad".into(),
            algebra: String::new(),
            dims: vec![1, 1],
            maps: [("x1".to_string(), vec![vec![Scalar::Int(1), Scalar::Int(0)]])].into_iter().collect(),
        };
        assert!(module_from_file(&f, &a).is_err());
        let mut g = f.clone();
        g.maps = [("zz".to_string(), vec![vec![Scalar::Int(1)]])].into_iter().collect();
        assert!(module_from_file(&g, &a).is_err());
    }

    #[test]
    fn field_declarations() {
        assert!(check_field::<F1009>("p=1009", Path::new("x")).is_ok());
        assert!(check_field::<F1009>("p=2", Path::new("x")).is_err());
        assert!(check_field::<Rational>("q", Path::new("x")).is_ok());
    }
}
