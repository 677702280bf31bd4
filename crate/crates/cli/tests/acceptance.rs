//! One line per acceptance criterion, printed to stderr.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use cotilt::formats::{read_toml, AlgebraFile, Loader, SubcatMode};
use cotilt::pipeline::{main1_setup, run};
use cotilt::report::{render, Format, PipelineReport, Verdict};
use cotilt_core::endfunctor::{end_algebra, hom_functor, quiver_isomorphism, stable_end_algebra};
use cotilt_core::homological::{
    ab_approximation, enumerate_indecomposables, ext_dim, ext_dim_dual, lift_through, tau, tau_minus,
};
use cotilt_core::linalg::random_consistency;
use cotilt_core::modrep::{direct_sum, hom_space, is_isomorphic, ModuleMap};
use cotilt_core::relexact::{
    ar_duality_holds, fixture_sequences, image_closed_sampled, is_conflation, is_deflation, is_inflation,
    pullback_deflation, pushout_inflation, ExactStructureSpec, StructureKind, SubcatSpec,
};
use cotilt_core::tilting::{
    cohat_membership, dual_lambda, hat_membership, injective_dimension, lambda_modules, perp_membership,
    xw_membership, XwVerdict,
};
use cotilt_core::{Arrow, ModuleRep, Quiver, Rational, F1009};

type K = F1009;
const SEED: u64 = 1;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn config(name: &str) -> PathBuf {
    root().join("configs").join(format!("{name}.toml"))
}

fn fact<'a>(r: &'a PipelineReport, stage: &str, key: &str) -> &'a str {
    r.stage(stage).unwrap_or_else(|| panic!("no stage {stage}")).get(key).unwrap_or_else(|| panic!("no {stage}.{key}"))
}

fn num(r: &PipelineReport, stage: &str, key: &str) -> usize {
    fact(r, stage, key).parse().unwrap()
}

fn timed(name: &str) -> (PipelineReport, Duration) {
    let t = Instant::now();
    let r = run::<K>(&config(name), "p=1009", SEED).unwrap();
    (r, t.elapsed())
}

fn modules(dir: &str) -> Vec<ModuleRep<K>> {
    Loader::<K>::default().module_dir(&root().join(dir)).unwrap()
}

fn by_name(list: &[ModuleRep<K>], name: &str) -> ModuleRep<K> {
    list.iter().find(|m| m.name() == name).unwrap_or_else(|| panic!("no fixture {name}")).clone()
}

fn sum(mods: &[ModuleRep<K>]) -> ModuleRep<K> {
    direct_sum(mods[0].algebra(), mods).module
}

fn criterion_1() -> String {
    let (r, took) = timed("a4-main2");
    assert!(r.pass, "{}", render(&r, Format::Text));
    assert_eq!(num(&r, "cotilting", "injective dimension"), 2);
    assert_eq!(num(&r, "fully-faithful", "pairs"), 100);
    assert_eq!(num(&r, "fully-faithful", "failures"), 0);
    assert_eq!(num(&r, "perp-census", "census"), 10);
    assert_eq!(num(&r, "perp-census", "images"), 10);
    assert_eq!(num(&r, "fixtures", "indecomposable fixtures"), 10);
    assert!(render(&r, Format::Text).contains("injective dimension = 2"));
    assert!(took < Duration::from_secs(10));
    format!("id U = 2, 100/100 pairs fully faithful, census 10 = 10 fixtures, {took:.2?}")
}

fn criterion_2() -> String {
    let (r, took) = timed("nakayama-main1");
    assert!(r.pass, "{}", render(&r, Format::Text));
    assert_eq!(num(&r, "fixtures", "indecomposable fixtures"), 12);
    assert_eq!(num(&r, "quotient", "nonzero indecomposables"), 11);
    assert_eq!(r.stage("relative-projectives").unwrap().verdict, Verdict::Pass);
    assert_eq!(r.stage("relative-injectives").unwrap().verdict, Verdict::Pass);
    assert_eq!(num(&r, "gamma", "vertices"), 4);
    assert_eq!(num(&r, "gamma", "arrows"), 5);
    assert_eq!(r.stage("gamma-expected").unwrap().verdict, Verdict::Pass);
    assert_eq!(num(&r, "cotilting", "n"), 1);
    assert_eq!(r.stage("cotilting").unwrap().verdict, Verdict::Pass);
    let m = num(&r, "zero-kernels", "morphisms");
    assert!(m > 0);
    assert_eq!(num(&r, "zero-kernels", "factored"), m);
    assert!(took < Duration::from_secs(30));
    format!("11 quotient objects, Γ with 4 vertices and 5 arrows, U 1-cotilting, {m}/{m} morphisms with 0-kernels, {took:.2?}")
}

fn criterion_3() -> String {
    let (r, _) = timed("a5-main1");
    assert!(!r.pass);
    let z = r.stage("zero-kernels").unwrap();
    assert_eq!(z.verdict, Verdict::Fail);
    assert!(num(&r, "zero-kernels", "obstructed") >= 1);
    let named: Vec<_> = z.witnesses.iter().filter(|w| w.contains(" -> ") && w.ends_with("obstructed")).collect();
    assert!(!named.is_empty());
    // The subcategory is image-closed but not submodule-closed.
    let a5 = modules("a5");
    let c = SubcatSpec::verified(&[by_name(&a5, "432")], &a5, SEED).unwrap();
    assert!(image_closed_sampled(&c, 5, SEED).unwrap());
    assert!(!c.submodule_closed);
    format!("0-kernels fail, e.g. {}", named[0])
}

/// Reverses the arrows at a sink by hand.
fn reflect(file: &AlgebraFile, v: usize) -> Quiver {
    let arrows = file
        .arrows
        .iter()
        .map(|a| {
            let (s, t) = if a.source == v || a.target == v { (a.target, a.source) } else { (a.source, a.target) };
            Arrow { label: a.label.clone(), source: s, target: t }
        })
        .collect();
    Quiver::new(file.vertices, arrows).unwrap()
}

fn criterion_4() -> String {
    let (r, _) = timed("a4-apr-main1");
    assert!(r.pass, "{}", render(&r, Format::Text));
    let a4 = modules("a4");
    let setup = main1_setup(&a4, &[by_name(&a4, "1")], SubcatMode::Sub, SEED).unwrap();
    let pres = stable_end_algebra(&setup.hat_m(SEED).unwrap(), &setup.subcat, SEED).unwrap();
    let file: AlgebraFile = read_toml(&root().join("algebras/a4.toml")).unwrap();
    assert!(file.relations.is_empty());
    // S(1) is simple projective and not injective: vertex 0 is a sink.
    assert!(file.arrows.iter().all(|a| a.source != 0));
    let want = reflect(&file, 0);
    let sigma = quiver_isomorphism(pres.quiver(), &want).expect("Gabriel quiver of Γ is the reflected quiver");
    assert_eq!(pres.quiver().arrows().len(), 3);
    format!("Γ quiver ≅ A4 reflected at vertex 1 (vertex map {sigma:?})")
}

fn homological_suite(alg: &str, mods: &[ModuleRep<K>]) -> usize {
    let a = mods[0].algebra().clone();
    let mut checks = 0;
    for p in lambda_modules(&a) {
        assert!(tau(&p).is_zero(), "{alg}: τ of a projective");
        checks += 1;
    }
    for i in dual_lambda(&a) {
        assert!(tau_minus(&i).is_zero(), "{alg}: τ⁻ of an injective");
        checks += 1;
    }
    for m in mods {
        let t = tau(m);
        if !t.is_zero() {
            let back = tau_minus(&t.with_algebra(&a).unwrap()).with_algebra(&a).unwrap();
            assert!(is_isomorphic(&back, m, SEED).unwrap(), "{alg}: τ⁻τ {}", m.label());
            checks += 1;
        }
    }
    for x in mods {
        for y in mods {
            for i in 0..=4 {
                assert_eq!(ext_dim(x, y, i).unwrap(), ext_dim_dual(x, y, i).unwrap(), "{alg}: Ext^{i}({}, {})", x.label(), y.label());
                checks += 1;
            }
        }
    }
    checks
}

fn criterion_5() -> String {
    let mut checks = 0;
    let mut names = Vec::new();
    let mut loader = Loader::<K>::default();
    let mut files: Vec<_> = std::fs::read_dir(root().join("algebras")).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    for f in files {
        let stem = f.file_stem().unwrap().to_string_lossy().to_string();
        let dir = root().join(&stem);
        let mods = if dir.is_dir() {
            loader.module_dir(&dir).unwrap()
        } else {
            let a = loader.algebra(&f).unwrap();
            enumerate_indecomposables(&a, 500, SEED).unwrap()
        };
        checks += homological_suite(&stem, &mods);
        names.push(stem);
    }
    let q = random_consistency::<Rational>(1000, 7, 5);
    let p = random_consistency::<F1009>(1000, 7, 6);
    assert!(q.pass(), "{:?}", q.failures);
    assert!(p.pass(), "{:?}", p.failures);
    format!("{checks} τ/Ext checks on {} algebras, 2000 random matrices consistent", names.len())
}

fn axiom_suite(mods: &[ModuleRep<K>], gens: &[ModuleRep<K>]) -> usize {
    let seqs = fixture_sequences(mods, SEED).unwrap();
    let c = SubcatSpec::new(gens, SEED).unwrap();
    let spec = |k| ExactStructureSpec::new(k, c.clone());
    let mut checks = 0;
    for s in &seqs {
        let from = is_conflation(s, &spec(StructureKind::FromC)).unwrap();
        let to = is_conflation(s, &spec(StructureKind::ToC)).unwrap();
        assert_eq!(is_conflation(s, &spec(StructureKind::BothC)).unwrap(), from && to);
        for x in mods {
            assert!(ar_duality_holds(s, x).unwrap());
        }
        checks += 1 + mods.len();
    }
    for kind in [StructureKind::FromC, StructureKind::ToC, StructureKind::BothC] {
        let e = spec(kind);
        let confl: Vec<_> = seqs.iter().filter(|s| is_conflation(s, &e).unwrap()).collect();
        for s in &confl {
            // Pullbacks of deflations and pushouts of inflations along basis maps.
            for x in mods {
                for g in hom_space(x, s.right()).unwrap().basis() {
                    assert!(is_deflation(&pullback_deflation(&s.proj, g).unwrap(), &e).unwrap(), "{kind} pullback");
                    checks += 1;
                }
                for g in hom_space(s.left(), x).unwrap().basis() {
                    assert!(is_inflation(&pushout_inflation(&s.incl, g).unwrap(), &e).unwrap(), "{kind} pushout");
                    checks += 1;
                }
            }
            // Composites through an isomorphism of the connecting objects.
            for t in &confl {
                if s.right().dims() == t.middle().dims() {
                    if let Some(phi) = first_iso(s.right(), t.middle()) {
                        assert!(is_deflation(&s.proj.then(&phi).then(&t.proj), &e).unwrap(), "{kind} composite deflation");
                        checks += 1;
                    }
                }
                if s.middle().dims() == t.left().dims() {
                    if let Some(phi) = first_iso(s.middle(), t.left()) {
                        assert!(is_inflation(&s.incl.then(&phi).then(&t.incl), &e).unwrap(), "{kind} composite inflation");
                        checks += 1;
                    }
                }
            }
        }
    }
    checks
}

fn first_iso(x: &ModuleRep<K>, y: &ModuleRep<K>) -> Option<ModuleMap<K>> {
    if x.is_zero() && y.is_zero() {
        return Some(ModuleMap::zero(x, y));
    }
    cotilt_core::modrep::indecomposable_data(x, SEED)
        .ok()
        .flatten()
        .and_then(|d| d.iso_to(y).ok().flatten())
}

fn criterion_6() -> String {
    let nak = modules("nakayama");
    let a4 = modules("a4");
    let g: Vec<_> = ["1", "21", "321", "4321", "3"].iter().map(|n| by_name(&a4, n)).collect();
    let n1 = axiom_suite(&nak, &[by_name(&nak, "1")]);
    let n2 = axiom_suite(&a4, &g);
    format!("{} axiom instances re-certified", n1 + n2)
}

/// A cotilting `Γ`-module from the main2 example and from the APR instance,
/// with the frozen `Γ`-fixtures re-homed onto the computed `Γ`.
fn cotilting_cases() -> Vec<(ModuleRep<K>, usize, Vec<ModuleRep<K>>)> {
    let a4 = modules("a4");
    let lambda = a4[0].algebra().clone();
    let g: Vec<_> = ["1", "21", "321", "4321", "3"].iter().map(|n| by_name(&a4, n)).collect();
    let pres = end_algebra(&g, SEED).unwrap();
    let mut parts = dual_lambda(&lambda);
    for x in &g {
        let t = tau(x);
        if !t.is_zero() {
            parts.push(t.with_algebra(&lambda).unwrap());
        }
    }
    let u2 = hom_functor(&pres, &sum(&parts)).unwrap();
    let fx2 = modules("gamma-main2").iter().map(|m| m.with_algebra(pres.algebra()).unwrap()).collect();

    let setup = main1_setup(&a4, &[by_name(&a4, "1")], SubcatMode::Sub, SEED).unwrap();
    let apr = stable_end_algebra(&setup.hat_m(SEED).unwrap(), &setup.subcat, SEED).unwrap();
    let u1 = hom_functor(&apr, &sum(&setup.hat_n(SEED).unwrap())).unwrap();
    let fx1 = modules("gamma-apr").iter().map(|m| m.with_algebra(apr.algebra()).unwrap()).collect();
    vec![(u2, 2, fx2), (u1, 1, fx1)]
}

fn criterion_7() -> String {
    let mut inputs = 0;
    for (u, n, fixtures) in cotilting_cases() {
        let id = injective_dimension(&u, 6).unwrap();
        assert_eq!(id, n);
        let in_x = |m: &ModuleRep<K>| perp_membership(m, &u, id).unwrap().member;
        let w = cotilt_core::modrep::decompose(&u, SEED).unwrap().modules();
        let x: Vec<_> = fixtures.iter().filter(|m| in_x(m)).cloned().collect();
        for c in &fixtures {
            let r = ab_approximation(c, &x, &w, 6, SEED).unwrap();
            r.right.validate().unwrap();
            r.left.validate().unwrap();
            assert!(is_conflation(&r.right, &ExactStructureSpec::full()).unwrap());
            assert!(in_x(r.right.middle()) && in_x(r.left.right()));
            let yc = hat_membership(r.right.left(), &w, n, SEED).unwrap();
            assert!(yc.length() < n.max(1) && yc.verify());
            assert!(hat_membership(r.left.middle(), &w, n, SEED).unwrap().verify());
            for xm in &x {
                for f in hom_space(xm, c).unwrap().basis() {
                    assert!(lift_through(&r.right.proj, f).unwrap().is_some(), "{} -> {}", xm.label(), c.label());
                }
            }
            inputs += 1;
        }
    }
    assert!(inputs >= 20);
    let mut compared = 0;
    for dir in ["a4", "a5", "nakayama"] {
        let mods = modules(dir);
        let di = dual_lambda(mods[0].algebra());
        for m in &mods {
            let by_hat = cohat_membership(m, &di, 6, SEED).ok().map(|c| c.length());
            assert_eq!(by_hat, injective_dimension(m, 6), "{dir}/{}", m.label());
            compared += 1;
        }
    }
    format!("{inputs} approximation inputs re-certified, add DΛ coresolutions give id on {compared} fixtures")
}

fn criterion_8() -> String {
    let nak = modules("nakayama");
    let lam = lambda_modules(nak[0].algebra());
    for m in &nak {
        let v = xw_membership(m, &lam, 8, 4, SEED).unwrap().verdict;
        assert!(v.is_member(), "{}: {v}", m.label());
        if !tau(m).is_zero() {
            assert!(matches!(v, XwVerdict::Periodic { .. }), "{}: {v}", m.label());
        }
    }
    let a4 = modules("a4");
    let lam = lambda_modules(a4[0].algebra());
    let mut gp = Vec::new();
    for m in &a4 {
        let member = xw_membership(m, &lam, 8, 4, SEED).unwrap().verdict.is_member();
        let projective = tau(m).is_zero() && lam.iter().any(|p| is_isomorphic(p, m, SEED).unwrap());
        assert_eq!(member, projective, "{}", m.label());
        if member {
            gp.push(m.label());
        }
    }
    assert_eq!(gp.len(), 4);
    format!("12/12 Nakayama fixtures Gorenstein projective, A4: exactly {}", gp.join(", "))
}

fn criterion_9() -> String {
    let bin = env!("CARGO_BIN_EXE_cotilt");
    let mut runs = 0;
    for c in ["a4-main2", "a4-main2-lambda", "a4-main2-dual", "nakayama-main1", "a4-apr-main1", "a5-main1"] {
        for fmt in ["text", "json", "csv"] {
            let out = || Command::new(bin).args(["report", "--format", fmt]).arg(config(c)).output().unwrap();
            let (a, b) = (out(), out());
            assert!(matches!(a.status.code(), Some(0 | 1)) && !a.stdout.is_empty(), "{c}: {}", String::from_utf8_lossy(&a.stderr));
            assert_eq!(a.stdout, b.stdout, "{c} --format {fmt}");
            runs += 1;
        }
    }
    format!("{runs} report pairs byte-identical")
}

/// Written to stderr directly so the lines show up without `--nocapture`.
fn report(line: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> String); 9] = [
        ("main2 on A4 with the five-summand generator", criterion_1),
        ("main1 on Nakayama(3, 4) with C = add S", criterion_2),
        ("A5 negative control", criterion_3),
        ("APR instance", criterion_4),
        ("homological property suite", criterion_5),
        ("exact-structure axiom suite", criterion_6),
        ("Auslander-Buchweitz approximations", criterion_7),
        ("Gorenstein projectives", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(detail) => report(&format!("criterion {}: PASS  {name}: {detail}", k + 1)),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                report(&format!("criterion {}: FAIL  {name}: {msg}", k + 1));
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
