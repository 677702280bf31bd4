//! The fixture corpus: algebras, indecomposable modules, subcategories,
//! pipeline configs, a census table and a SHA-256 manifest.
//!
//! Generation runs over the rationals so that every file reads back over
//! any supported field. The `Γ`-side lists come from AR-knitting
//! ([`enumerate_indecomposables`]) and are frozen with the rest.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use cotilt_core::endfunctor::{end_algebra, stable_end_algebra};
use cotilt_core::field::Rational;
use cotilt_core::homological::enumerate_indecomposables;
use cotilt_core::modrep::decompose;
use cotilt_core::standard::{cyclic_nakayama, interval_module, linear_a, nakayama_uniserial};
use cotilt_core::{BasedAlgebra, Field, ModuleRep};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::formats::{
    algebra_to_file, map_rows, module_files, module_to_file, write_toml, AlgebraFile, ArrowEntry, Expectations, Loader,
    PipelineConfig, SesFile, SubcatFile, SubcatMode,
};
use crate::pipeline::main1_setup;

type Q = Rational;

pub const MANIFEST: &str = "MANIFEST.sha256";
pub const CENSUS: &str = "census.toml";

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Census {
    /// Number of indecomposable module files per fixture directory.
    pub counts: BTreeMap<String, usize>,
    pub note: String,
}

/// Paper-style name of an interval module of `linear_a(n)`: its composition
/// factors from the top down, vertices numbered from 1.
fn interval_name(lo: usize, hi: usize) -> String {
    (lo..=hi).rev().map(|v| (v + 1).to_string()).collect()
}

fn nakayama_name(top: usize, len: usize, n: usize) -> String {
    (0..len).map(|j| ((top + j) % n + 1).to_string()).collect()
}

fn linear_fixtures(a: &std::sync::Arc<BasedAlgebra<Q>>) -> Result<Vec<ModuleRep<Q>>> {
    let n = a.vertex_count();
    let mut out = Vec::new();
    for lo in 0..n {
        for hi in lo..n {
            out.push(interval_module(a, lo, hi)?.named(interval_name(lo, hi)));
        }
    }
    out.sort_by(|x, y| x.name().cmp(y.name()));
    Ok(out)
}

fn nakayama_fixtures(a: &std::sync::Arc<BasedAlgebra<Q>>, loewy: usize) -> Result<Vec<ModuleRep<Q>>> {
    let n = a.vertex_count();
    let mut out = Vec::new();
    for top in 0..n {
        for len in 1..=loewy {
            out.push(nakayama_uniserial(a, top, len)?.named(nakayama_name(top, len, n)));
        }
    }
    out.sort_by(|x, y| x.name().cmp(y.name()));
    Ok(out)
}

/// Reverses every arrow at `v`; `v` must be a sink or a source of a quiver without relations.
pub fn reflect_at(file: &AlgebraFile, v: usize) -> Result<AlgebraFile> {
    if !file.relations.is_empty() {
        bail!("reflection is only defined here for path algebras");
    }
    let ins = file.arrows.iter().filter(|a| a.target == v).count();
    let outs = file.arrows.iter().filter(|a| a.source == v).count();
    if ins > 0 && outs > 0 {
        bail!("vertex {v} is neither a sink nor a source");
    }
    let mut out = file.clone();
    for a in out.arrows.iter_mut() {
        if a.source == v || a.target == v {
            std::mem::swap(&mut a.source, &mut a.target);
        }
    }
    out.name = format!("{} reflected at {v}", file.name);
    Ok(out)
}

fn arrows(list: &[(&str, usize, usize)]) -> Vec<ArrowEntry> {
    list.iter().map(|&(l, s, t)| ArrowEntry { label: l.into(), source: s, target: t }).collect()
}

/// Reference presentation of `Γ` for the Nakayama example, vertices numbered from 0.
pub fn reference_gamma_main1() -> AlgebraFile {
    AlgebraFile {
        name: "reference Γ for the Nakayama example".into(),
        field: "any".into(),
        vertices: 4,
        arrows: arrows(&[("delta", 0, 2), ("epsilon", 1, 0), ("alpha", 1, 3), ("beta", 3, 1), ("gamma", 2, 1)]),
        relations: ["beta*alpha", "gamma*alpha", "delta*gamma*epsilon", "beta*epsilon", "alpha*beta - epsilon*delta*gamma"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    }
}

/// Reference presentation of `Γ = End(G)` for the A4 example: `1 <- 2 <- 3 <- 4`, `5 -> 3`,
/// with the path `5 -> 3 -> 2` zero.
pub fn reference_gamma_main2() -> AlgebraFile {
    AlgebraFile {
        name: "reference Γ for the A4 example".into(),
        field: "any".into(),
        vertices: 5,
        arrows: arrows(&[("b", 1, 0), ("c", 2, 1), ("d", 3, 2), ("e", 4, 2)]),
        relations: vec!["e*c".into()],
    }
}

struct Writer {
    root: PathBuf,
}

impl Writer {
    fn algebra(&self, name: &str, file: &AlgebraFile) -> Result<()> {
        write_toml(&self.root.join("algebras").join(format!("{name}.toml")), file)
    }

    fn modules(&self, dir: &str, algebra: &str, mods: &[ModuleRep<Q>]) -> Result<()> {
        let path = self.root.join(dir);
        if path.exists() {
            fs::remove_dir_all(&path)?;
        }
        for m in mods {
            let f = module_to_file(m, &format!("../algebras/{algebra}.toml"));
            write_toml(&path.join(format!("{}.toml", m.name())), &f)?;
        }
        Ok(())
    }

    fn config(&self, name: &str, cfg: &PipelineConfig) -> Result<()> {
        write_toml(&self.root.join("configs").join(format!("{name}.toml")), cfg)
    }
}

fn field_tag(a: &BasedAlgebra<Q>) -> &'static str {
    let fractional = a.relations().iter().flat_map(|r| r.terms.iter()).any(|(c, _)| c.to_repr().contains('/'));
    if fractional {
        "q"
    } else {
        "any"
    }
}

/// Names `Γ`-modules by dimension vector, with a letter for repeats, and
/// prefixes the enumeration index so that file order is enumeration order.
fn name_gamma_modules(mods: Vec<ModuleRep<Q>>) -> Vec<ModuleRep<Q>> {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    mods.into_iter()
        .enumerate()
        .map(|(k, m)| {
            let d = m.dim_string();
            let c = seen.entry(d.clone()).or_default();
            let suffix = if *c == 0 { String::new() } else { ((b'a' + *c as u8) as char).to_string() };
            *c += 1;
            m.named(format!("{k:02}-{d}{suffix}"))
        })
        .collect()
}

fn gamma_corpus(w: &Writer, name: &str, gamma: &std::sync::Arc<BasedAlgebra<Q>>, seed: u64) -> Result<usize> {
    w.algebra(name, &algebra_to_file(gamma, name, field_tag(gamma)))?;
    let mods = name_gamma_modules(enumerate_indecomposables(gamma, 500, seed)?);
    w.modules(name, name, &mods)?;
    Ok(mods.len())
}

fn config(pipeline: &str, name: &str, algebra: &str, fixtures: &str) -> PipelineConfig {
    PipelineConfig {
        pipeline: pipeline.into(),
        name: name.into(),
        algebra: format!("../algebras/{algebra}.toml"),
        fixtures: format!("../{fixtures}"),
        m: vec![],
        subcategory: SubcatMode::Sub,
        generator: vec![],
        gamma_algebra: None,
        gamma_fixtures: None,
        expected_gamma: None,
        field: Some("p=1009".into()),
        seed: Some(1),
        ext_bound: 4,
        expect: Expectations::default(),
    }
}

fn with_gamma(mut c: PipelineConfig, gamma: &str) -> PipelineConfig {
    c.gamma_algebra = Some(format!("../algebras/{gamma}.toml"));
    c.gamma_fixtures = Some(format!("../{gamma}"));
    c
}

/// Writes the whole corpus under `root` and returns the census.
pub fn generate(root: &Path, seed: u64) -> Result<Census> {
    fs::create_dir_all(root)?;
    let w = Writer { root: root.to_path_buf() };
    let mut counts = BTreeMap::new();

    let a4 = linear_a::<Q>(4)?;
    let a5 = linear_a::<Q>(5)?;
    let nak = cyclic_nakayama::<Q>(3, 4)?;
    let a4_file = algebra_to_file(&a4, "A4", "any");
    w.algebra("a4", &a4_file)?;
    w.algebra("a5", &algebra_to_file(&a5, "A5", "any"))?;
    w.algebra("nakayama", &algebra_to_file(&nak, "Nakayama(3, 4)", "any"))?;
    w.algebra("reference-gamma-main1", &reference_gamma_main1())?;
    w.algebra("reference-gamma-main2", &reference_gamma_main2())?;
    w.algebra("a4-apr-reflection", &reflect_at(&a4_file, 0)?)?;

    let a4_mods = linear_fixtures(&a4)?;
    let a5_mods = linear_fixtures(&a5)?;
    let nak_mods = nakayama_fixtures(&nak, 4)?;
    w.modules("a4", "a4", &a4_mods)?;
    w.modules("a5", "a5", &a5_mods)?;
    w.modules("nakayama", "nakayama", &nak_mods)?;
    counts.insert("a4".into(), a4_mods.len());
    counts.insert("a5".into(), a5_mods.len());
    counts.insert("nakayama".into(), nak_mods.len());

    let by_name = |mods: &[ModuleRep<Q>], n: &str| mods.iter().find(|m| m.name() == n).cloned().expect("fixture");

    // main2: G = P(1) ⊕ P(2) ⊕ P(3) ⊕ P(4) ⊕ S(3), vertices numbered from 1.
    let g_names = ["1", "21", "321", "4321", "3"];
    let g: Vec<ModuleRep<Q>> = g_names.iter().map(|n| by_name(&a4_mods, n)).collect();
    let gamma2 = end_algebra(&g, seed)?;
    counts.insert("gamma-main2".into(), gamma_corpus(&w, "gamma-main2", gamma2.algebra(), seed)?);

    // main2 with G = Λ ⊕ DΛ.
    let gd_names = ["1", "21", "321", "4321", "4", "43", "432"];
    let gd: Vec<ModuleRep<Q>> = gd_names.iter().map(|n| by_name(&a4_mods, n)).collect();
    let gamma2d = end_algebra(&gd, seed)?;
    counts.insert("gamma-main2-dual".into(), gamma_corpus(&w, "gamma-main2-dual", gamma2d.algebra(), seed)?);

    // main1 over Nakayama with M = S(1), and over A4 with M = S(1) (APR).
    let s_nak = by_name(&nak_mods, "1");
    let setup = main1_setup(&nak_mods, std::slice::from_ref(&s_nak), SubcatMode::Sub, seed)?;
    let gamma1 = stable_end_algebra(&setup.hat_m(seed)?, &setup.subcat, seed)?;
    counts.insert("gamma-main1".into(), gamma_corpus(&w, "gamma-main1", gamma1.algebra(), seed)?);

    let s_a4 = by_name(&a4_mods, "1");
    let setup = main1_setup(&a4_mods, std::slice::from_ref(&s_a4), SubcatMode::Sub, seed)?;
    let gamma_apr = stable_end_algebra(&setup.hat_m(seed)?, &setup.subcat, seed)?;
    counts.insert("gamma-apr".into(), gamma_corpus(&w, "gamma-apr", gamma_apr.algebra(), seed)?);

    let mut c = with_gamma(config("main2", "A4 with the five-summand generator", "a4", "a4"), "gamma-main2");
    c.generator = g_names.iter().map(|n| format!("../a4/{n}.toml")).collect();
    c.expected_gamma = Some("../algebras/reference-gamma-main2.toml".into());
    c.expect = Expectations {
        gamma_vertices: Some(5),
        gamma_arrows: Some(4),
        injective_dimension: Some(2),
        cotilting_n: Some(2),
        census: Some(10),
        ..Default::default()
    };
    w.config("a4-main2", &c)?;

    let mut c = with_gamma(config("main2", "A4 with G = Λ ⊕ DΛ", "a4", "a4"), "gamma-main2-dual");
    c.generator = gd_names.iter().map(|n| format!("../a4/{n}.toml")).collect();
    // Regression values recorded from the first full run.
    c.expect = Expectations {
        gamma_vertices: Some(7),
        gamma_arrows: Some(6),
        gamma_dim: Some(22),
        injective_dimension: Some(2),
        cotilting_n: Some(2),
        census: Some(10),
        ..Default::default()
    };
    w.config("a4-main2-dual", &c)?;

    let mut c = config("main2", "A4 with G = Λ", "a4", "a4");
    c.gamma_algebra = Some("../algebras/a4.toml".into());
    c.gamma_fixtures = Some("../a4".into());
    c.generator = ["1", "21", "321", "4321"].iter().map(|n| format!("../a4/{n}.toml")).collect();
    c.expected_gamma = Some("../algebras/a4.toml".into());
    c.expect = Expectations { injective_dimension: Some(0), cotilting_n: Some(2), census: Some(10), ..Default::default() };
    w.config("a4-main2-lambda", &c)?;

    let mut c = with_gamma(config("main1", "Nakayama(3, 4) with C = add S(1)", "nakayama", "nakayama"), "gamma-main1");
    c.m = vec!["../nakayama/1.toml".into()];
    c.expected_gamma = Some("../algebras/reference-gamma-main1.toml".into());
    c.expect = Expectations {
        quotient_count: Some(11),
        gamma_vertices: Some(4),
        gamma_arrows: Some(5),
        cotilting_n: Some(1),
        census: Some(11),
        ..Default::default()
    };
    w.config("nakayama-main1", &c)?;

    let mut c = with_gamma(config("main1", "A4 with S = S(1), the APR tilt", "a4", "a4"), "gamma-apr");
    c.m = vec!["../a4/1.toml".into()];
    c.expected_gamma = Some("../algebras/a4-apr-reflection.toml".into());
    c.expect = Expectations {
        quotient_count: Some(9),
        gamma_vertices: Some(4),
        gamma_arrows: Some(3),
        cotilting_n: Some(1),
        census: Some(9),
        ..Default::default()
    };
    w.config("a4-apr-main1", &c)?;

    let mut c = config("main1", "A5 with C = add(P(4)/S(1))", "a5", "a5");
    c.m = vec!["../a5/432.toml".into()];
    c.subcategory = SubcatMode::Add;
    w.config("a5-main1", &c)?;

    write_toml(
        &root.join("subcats").join("nakayama-s1.toml"),
        &SubcatFile { modules: vec!["../nakayama/1.toml".into()], submodule_closed: Some(true), quotient_closed: None },
    )?;
    write_toml(
        &root.join("subcats").join("a4-s1.toml"),
        &SubcatFile { modules: vec!["../a4/1.toml".into()], submodule_closed: Some(true), quotient_closed: None },
    )?;
    write_toml(
        &root.join("subcats").join("a5-m.toml"),
        &SubcatFile { modules: vec!["../a5/432.toml".into()], submodule_closed: Some(false), quotient_closed: None },
    )?;

    // 0 -> S(1) -> P(2) -> S(2) -> 0 over A4.
    let (s1, p2, s2) = (by_name(&a4_mods, "1"), by_name(&a4_mods, "21"), by_name(&a4_mods, "2"));
    let incl = cotilt_core::modrep::hom_space(&s1, &p2)?.basis()[0].clone();
    let proj = cotilt_core::modrep::hom_space(&p2, &s2)?.basis()[0].clone();
    write_toml(
        &root.join("sequences").join("a4-s1-p2-s2.toml"),
        &SesFile {
            left: "../a4/1.toml".into(),
            middle: "../a4/21.toml".into(),
            right: "../a4/2.toml".into(),
            incl: map_rows(&incl),
            proj: map_rows(&proj),
        },
    )?;

    let census = Census {
        counts,
        note: "indecomposable counts; the gamma-* lists are derived by AR-knitting at generation time".into(),
    };
    write_toml(&root.join(CENSUS), &census)?;
    write_manifest(root)?;
    Ok(census)
}

fn all_files(root: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for e in fs::read_dir(&dir).with_context(|| format!("listing {}", dir.display()))? {
            let p = e?.path();
            if p.is_dir() {
                stack.push(p);
            } else if p.file_name().is_some_and(|n| n != MANIFEST) {
                out.push(p);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn digest(path: &Path) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(format!("{:x}", Sha256::digest(&bytes)))
}

fn rel_name(root: &Path, p: &Path) -> String {
    p.strip_prefix(root).unwrap_or(p).to_string_lossy().replace('\\', "/")
}

pub fn write_manifest(root: &Path) -> Result<()> {
    let mut text = String::new();
    for p in all_files(root)? {
        text.push_str(&format!("{}  {}\n", digest(&p)?, rel_name(root, &p)));
    }
    fs::write(root.join(MANIFEST), text)?;
    Ok(())
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub files: usize,
    pub modules: usize,
    pub problems: Vec<String>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Checks hashes, loads every module over `F`, certifies indecomposability
/// and compares the per-directory counts with the census table.
pub fn verify<F: Field>(root: &Path, seed: u64) -> Result<VerifyReport> {
    let mut r = VerifyReport::default();
    let manifest = fs::read_to_string(root.join(MANIFEST)).context("reading the manifest")?;
    let mut listed = BTreeMap::new();
    for line in manifest.lines().filter(|l| !l.trim().is_empty()) {
        let Some((hash, name)) = line.split_once("  ") else {
            r.problems.push(format!("malformed manifest line {line:?}"));
            continue;
        };
        listed.insert(name.to_string(), hash.to_string());
    }
    for p in all_files(root)? {
        let name = rel_name(root, &p);
        match listed.remove(&name) {
            Some(h) if h == digest(&p)? => r.files += 1,
            Some(_) => r.problems.push(format!("{name}: checksum mismatch")),
            None => r.problems.push(format!("{name}: not in the manifest")),
        }
    }
    for name in listed.keys() {
        r.problems.push(format!("{name}: listed but missing"));
    }
    let census: Census = crate::formats::read_toml(&root.join(CENSUS))?;
    let mut loader: Loader<F> = Loader::default();
    for (dir, &count) in &census.counts {
        let files = module_files(&root.join(dir))?;
        if files.len() != count {
            r.problems.push(format!("{dir}: {} modules, census says {count}", files.len()));
        }
        for f in files {
            match loader.module(&f) {
                Ok(m) => {
                    r.modules += 1;
                    if decompose(&m, seed)?.total_count() != 1 {
                        r.problems.push(format!("{}: not indecomposable", rel_name(root, &f)));
                    }
                }
                Err(e) => r.problems.push(format!("{}: {e:#}", rel_name(root, &f))),
            }
        }
    }
    Ok(r)
}
