use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cotilt::field::FieldChoice;
use cotilt::formats::{algebra_to_file, module_to_file, read_toml, relative, write_toml, Loader, ModuleFile};
use cotilt::report::{render, Format};
use cotilt::{fixtures, pipeline, with_field};
use cotilt_core::endfunctor::{end_algebra, stable_end_algebra};
use cotilt_core::homological::{enumerate_indecomposables, ext_table, global_dimension, tau, tau_minus};
use cotilt_core::modrep::{decompose, direct_sum, dualize, hom_space};
use cotilt_core::relexact::{
    is_conflation, n_kernels_check, quotient_hom, zero_kernel_factorization, ExactStructureSpec, StructureKind,
    SubcatSpec,
};
use cotilt_core::tilting::{is_cotilting, perp_fixture_list};
use cotilt_core::{Field, ModuleRep};

#[derive(Parser)]
#[command(name = "cotilt", version, about = "Cotilting and relative exact structures over bound quiver algebras")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Ground field: `q` or `p=<prime>`.
    #[arg(long, global = true)]
    field: Option<FieldChoice>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect an algebra file.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Operations on a single module file.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Dimension and basis size of Hom(M, N).
    Hom { m: PathBuf, n: PathBuf },
    /// Dimensions of Ext^i(M, N).
    Ext {
        m: PathBuf,
        n: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_i: usize,
    },
    /// Checks a short exact sequence against an exact structure.
    Conflation {
        #[command(subcommand)]
        cmd: ConflationCmd,
    },
    /// Morphisms in the quotient by a subcategory.
    Quotient {
        #[command(subcommand)]
        cmd: QuotientCmd,
    },
    /// Cotilting checks.
    Cotilt {
        #[command(subcommand)]
        cmd: CotiltCmd,
    },
    /// The perpendicular category of a module.
    Perp {
        #[command(subcommand)]
        cmd: PerpCmd,
    },
    /// Presents End(G), or its quotient by a subcategory, as a bound quiver algebra.
    Endalg {
        modules: Vec<PathBuf>,
        /// Subcategory file to quotient by.
        #[arg(long)]
        stable: Option<PathBuf>,
        #[arg(long, default_value = "End")]
        name: String,
        /// Write the algebra file here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs an end-to-end pipeline.
    Pipeline {
        #[command(subcommand)]
        cmd: PipelineCmd,
    },
    /// Runs the pipeline named in a config and prints its report.
    Report {
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Builds or checks the fixture corpus.
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCmd,
    },
    /// Lists the indecomposables of a representation-finite algebra.
    Enumerate {
        algebra: PathBuf,
        #[arg(long, default_value_t = 500)]
        limit: usize,
        /// Write one module file per indecomposable into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Loads the algebra and checks associativity and the idempotents.
    Check { path: PathBuf },
    /// Prints quiver, relations, basis size and Cartan matrix.
    Info {
        path: PathBuf,
        #[arg(long, default_value_t = 6)]
        gldim_bound: usize,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    Validate { path: PathBuf },
    Decompose { path: PathBuf },
    /// Auslander-Reiten translate, printed as a module file.
    Tau {
        path: PathBuf,
        #[arg(long)]
        inverse: bool,
    },
    /// Dimension vector of the dual module over the opposite algebra.
    Dual { path: PathBuf },
}

#[derive(Subcommand)]
enum ConflationCmd {
    Check {
        ses: PathBuf,
        #[arg(long, value_parser = parse_structure, default_value = "full")]
        structure: StructureKind,
        #[arg(long)]
        subcat: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum QuotientCmd {
    /// Dimension of Hom(X, Y) modulo maps factoring through the subcategory.
    Hom {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        subcat: PathBuf,
    },
    /// 0-kernel verdicts for the basis morphisms X -> Y.
    Factor {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        subcat: PathBuf,
        /// Directory of test objects (indecomposables of the module category).
        #[arg(long)]
        fixtures: PathBuf,
    },
}

#[derive(Subcommand)]
enum CotiltCmd {
    /// Whether the direct sum of the given modules is n-cotilting.
    Verify {
        modules: Vec<PathBuf>,
        #[arg(short, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

#[derive(Subcommand)]
enum PerpCmd {
    /// Which fixtures X have Ext^i(X, U) = 0 for all i >= 1.
    Census {
        #[arg(long, required = true, num_args = 1..)]
        u: Vec<PathBuf>,
        #[arg(long)]
        fixtures: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

#[derive(Subcommand)]
enum PipelineCmd {
    Main1 {
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Main2 {
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    Generate { dir: PathBuf },
    Verify { dir: PathBuf },
}

fn parse_structure(s: &str) -> std::result::Result<StructureKind, String> {
    match s {
        "full" => Ok(StructureKind::Full),
        "from-c" => Ok(StructureKind::FromC),
        "to-c" => Ok(StructureKind::ToC),
        "both-c" => Ok(StructureKind::BothC),
        _ => Err(format!("unknown structure {s:?}; use full, from-c, to-c or both-c")),
    }
}

struct Ctx {
    field: FieldChoice,
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { field: cli.field.unwrap_or_default(), seed: cli.seed.unwrap_or(1) };
    match dispatch(&cli, &ctx) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli, ctx: &Ctx) -> Result<bool> {
    let seed = ctx.seed;
    match &cli.cmd {
        Cmd::Pipeline { cmd } => {
            let (config, format, want) = match cmd {
                PipelineCmd::Main1 { config, format } => (config, *format, "main1"),
                PipelineCmd::Main2 { config, format } => (config, *format, "main2"),
            };
            let cfg = pipeline::load_config(config)?;
            if cfg.pipeline != want {
                bail!("{} configures pipeline {}, not {want}", config.display(), cfg.pipeline);
            }
            run_pipeline(cli, config, format)
        }
        Cmd::Report { config, format } => run_pipeline(cli, config, *format),
        Cmd::Fixtures { cmd: FixturesCmd::Generate { dir } } => {
            let census = fixtures::generate(dir, seed)?;
            for (k, v) in &census.counts {
                println!("{k}: {v}");
            }
            Ok(true)
        }
        Cmd::Fixtures { cmd: FixturesCmd::Verify { dir } } => {
            let r = with_field!(ctx.field, K => fixtures::verify::<K>(dir, seed))?;
            println!("{} files, {} modules checked", r.files, r.modules);
            for p in &r.problems {
                println!("  {p}");
            }
            Ok(r.pass())
        }
        cmd => with_field!(ctx.field, K => command::<K>(cmd, seed)),
    }
}

fn run_pipeline(cli: &Cli, config: &Path, format: Format) -> Result<bool> {
    let cfg = pipeline::load_config(config)?;
    let field = match (cli.field, &cfg.field) {
        (Some(f), _) => f,
        (None, Some(s)) => s.parse().map_err(anyhow::Error::msg)?,
        (None, None) => FieldChoice::default(),
    };
    let seed = cli.seed.or(cfg.seed).unwrap_or(1);
    let report = with_field!(field, K => pipeline::run::<K>(config, &field.to_string(), seed))?;
    print!("{}", render(&report, format));
    Ok(report.pass)
}

fn load_all<F: Field>(loader: &mut Loader<F>, paths: &[PathBuf]) -> Result<Vec<ModuleRep<F>>> {
    paths.iter().map(|p| loader.module(p)).collect()
}

fn sum_of<F: Field>(mods: &[ModuleRep<F>]) -> Result<ModuleRep<F>> {
    let first = mods.first().context("at least one module is needed")?;
    if mods.len() == 1 {
        return Ok(first.clone());
    }
    let name = mods.iter().map(|m| m.label()).collect::<Vec<_>>().join(" ⊕ ");
    Ok(direct_sum(first.algebra(), mods).module.named(name))
}

fn subcat_from<F: Field>(loader: &mut Loader<F>, path: &Path, seed: u64) -> Result<SubcatSpec<F>> {
    let (mods, file) = loader.subcat(path)?;
    let mut s = SubcatSpec::new(&mods, seed)?;
    s.submodule_closed = file.submodule_closed.unwrap_or(false);
    s.quotient_closed = file.quotient_closed.unwrap_or(false);
    Ok(s)
}

/// Absolute path of the algebra a module file refers to.
fn algebra_path_of(module: &Path) -> Result<String> {
    let file: ModuleFile = read_toml(module)?;
    let base = module.parent().unwrap_or(Path::new("."));
    let p = relative(base, &file.algebra);
    Ok(fs::canonicalize(&p).with_context(|| format!("resolving {}", p.display()))?.display().to_string())
}

fn command<F: Field>(cmd: &Cmd, seed: u64) -> Result<bool> {
    let mut loader: Loader<F> = Loader::default();
    match cmd {
        Cmd::Algebra { cmd: AlgebraCmd::Check { path } } => {
            let a = loader.algebra(path)?;
            let ok = a.check_associativity() && a.check_idempotents();
            println!("{}: dimension {}, associative and unital: {ok}", path.display(), a.dim());
            Ok(ok)
        }
        Cmd::Algebra { cmd: AlgebraCmd::Info { path, gldim_bound } } => {
            let a = loader.algebra(path)?;
            println!("{}", a.describe());
            println!("dimension {}", a.dim());
            for (s, row) in cotilt_core::endfunctor::algebra_cartan(&a).iter().enumerate() {
                println!("cartan row {s}: {row:?}");
            }
            match global_dimension(&a, *gldim_bound) {
                Some(d) => println!("global dimension {d}"),
                None => println!("global dimension > {gldim_bound}"),
            }
            Ok(true)
        }
        Cmd::Module { cmd: ModuleCmd::Validate { path } } => {
            let m = loader.module(path)?;
            m.validate()?;
            println!("{}: dims {:?}, relations hold", m.label(), m.dims());
            Ok(true)
        }
        Cmd::Module { cmd: ModuleCmd::Decompose { path } } => {
            let m = loader.module(path)?;
            let d = decompose(&m, seed)?;
            println!("{} splits into {} indecomposable summands", m.label(), d.total_count());
            for x in d.modules() {
                println!("  {}", x.dim_string());
            }
            Ok(true)
        }
        Cmd::Module { cmd: ModuleCmd::Tau { path, inverse } } => {
            let m = loader.module(path)?;
            let t = if *inverse { tau_minus(&m) } else { tau(&m) };
            let name = format!("{}{}", if *inverse { "τ⁻" } else { "τ" }, m.label());
            let file = module_to_file(&t.named(name), &algebra_path_of(path)?);
            print!("{}", toml::to_string(&file)?);
            Ok(true)
        }
        Cmd::Module { cmd: ModuleCmd::Dual { path } } => {
            let m = loader.module(path)?;
            let d = dualize(&m);
            println!("D{} over the opposite algebra: dims {:?}", m.label(), d.dims());
            Ok(true)
        }
        Cmd::Hom { m, n } => {
            let (m, n) = (loader.module(m)?, loader.module(n)?);
            println!("dim Hom({}, {}) = {}", m.label(), n.label(), hom_space(&m, &n)?.dim());
            Ok(true)
        }
        Cmd::Ext { m, n, max_i } => {
            let (m, n) = (loader.module(m)?, loader.module(n)?);
            let t = ext_table(&m, &n, *max_i)?;
            for (i, d) in t.dims.iter().enumerate() {
                println!("dim Ext^{i}({}, {}) = {d}", t.source, t.target);
            }
            Ok(true)
        }
        Cmd::Conflation { cmd: ConflationCmd::Check { ses, structure, subcat } } => {
            let s = loader.ses(ses)?;
            let spec = match (structure, subcat) {
                (StructureKind::Full, _) => ExactStructureSpec::full(),
                (kind, Some(p)) => ExactStructureSpec::new(*kind, subcat_from(&mut loader, p, seed)?),
                (kind, None) => bail!("structure {kind} needs --subcat"),
            };
            let ok = is_conflation(&s, &spec)?;
            println!("{} -> {} -> {} is a {} conflation: {ok}", s.left().label(), s.middle().label(), s.right().label(), spec.kind);
            Ok(ok)
        }
        Cmd::Quotient { cmd: QuotientCmd::Hom { x, y, subcat } } => {
            let (x, y) = (loader.module(x)?, loader.module(y)?);
            let c = subcat_from(&mut loader, subcat, seed)?;
            let q = quotient_hom(&x, &y, &c)?;
            println!("dim Hom({}, {}) = {}, through C {}, quotient {}", x.label(), y.label(), q.dim() + q.ideal_dim(), q.ideal_dim(), q.dim());
            Ok(true)
        }
        Cmd::Quotient { cmd: QuotientCmd::Factor { x, y, subcat, fixtures } } => {
            let (x, y) = (loader.module(x)?, loader.module(y)?);
            let c = subcat_from(&mut loader, subcat, seed)?;
            let tests = loader.module_dir(fixtures)?;
            let basis = quotient_hom(&x, &y, &c)?.coset_basis();
            let morphisms: Vec<_> =
                basis.iter().enumerate().map(|(k, f)| (format!("{} -> {} #{k}", x.label(), y.label()), f.clone())).collect();
            for (name, f) in &morphisms {
                let z = zero_kernel_factorization(f, &c, &tests)?;
                println!("{name}: factorization certified {}", z.certified());
            }
            let report = n_kernels_check(&morphisms, &c, 0, &tests, seed)?;
            for e in &report.entries {
                println!("{}: {}", e.morphism, e.verdict);
            }
            Ok(report.pass())
        }
        Cmd::Cotilt { cmd: CotiltCmd::Verify { modules, n, bound } } => {
            let u = sum_of(&load_all(&mut loader, modules)?)?;
            let r = is_cotilting(&u, *n, *bound, seed)?;
            println!("{r}");
            Ok(r.pass())
        }
        Cmd::Perp { cmd: PerpCmd::Census { u, fixtures, bound } } => {
            let u = sum_of(&load_all(&mut loader, u)?)?;
            let xs = loader.module_dir(fixtures)?;
            let members = perp_fixture_list(&xs, &u, *bound)?;
            for &k in &members {
                println!("{}", xs[k].label());
            }
            println!("{} of {} fixtures lie in the perpendicular category", members.len(), xs.len());
            Ok(true)
        }
        Cmd::Endalg { modules, stable, name, out } => {
            let g = load_all(&mut loader, modules)?;
            let pres = match stable {
                Some(p) => stable_end_algebra(&g, &subcat_from(&mut loader, p, seed)?, seed)?,
                None => end_algebra(&g, seed)?,
            };
            let file = algebra_to_file(pres.algebra(), name, "any");
            match out {
                Some(p) => write_toml(p, &file)?,
                None => print!("{}", toml::to_string(&file)?),
            }
            Ok(true)
        }
        Cmd::Enumerate { algebra, limit, out } => {
            let a = loader.algebra(algebra)?;
            let mods = enumerate_indecomposables(&a, *limit, seed)?;
            let abs = fs::canonicalize(algebra)?.display().to_string();
            for (k, m) in mods.iter().enumerate() {
                println!("{k:3}  {}", m.dim_string());
                if let Some(dir) = out {
                    let f = module_to_file(&m.named(format!("{k:02}-{}", m.dim_string())), &abs);
                    write_toml(&dir.join(format!("{k:02}-{}.toml", m.dim_string())), &f)?;
                }
            }
            println!("{} indecomposables", mods.len());
            Ok(true)
        }
        Cmd::Pipeline { .. } | Cmd::Report { .. } | Cmd::Fixtures { .. } => unreachable!("handled before field dispatch"),
    }
}
