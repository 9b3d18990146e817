//! The `infbh` command line: verifiers and constructions over JSON model files.
//!
//! Exit codes: 0 success, 1 violations found, 2 input or precondition error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use infbh::catalog;
use infbh::constructions::{self as cons, DendriformVariant, FreeSpace, FreeVariant, Side, Sign};
use infbh::model::{self, matches_expectation, Kind, Model};
use infbh::structures::{HopfModule, LeftComodule, LeftModule};
use infbh::ybe::{self, YbeReport};
use infbh::{BiForm, Elem2, Endo, Error, Report, Result, Scalar};

/// Stdout writes that ignore a closed pipe (e.g. `infbh ... | head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "infbh", version, about = "Exact checks and constructions for λ-infinitesimal BiHom bialgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Common output flags.
#[derive(clap::Args, Debug)]
struct Out {
    /// Print a machine-readable JSON report.
    #[arg(long)]
    json: bool,
    /// Write the constructed model here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct JsonFlag {
    /// Print a machine-readable JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Auto,
    Algebra,
    Coalgebra,
    Bialgebra,
    Module,
    Comodule,
    HopfModule,
    HopfBimodule,
    RotaBaxter,
    Dendriform,
    Prelie,
    PrelieCoalgebra,
    Augmented,
    Coaugmented,
}

impl KindArg {
    fn kind(self) -> Option<Kind> {
        Some(match self {
            KindArg::Auto => return None,
            KindArg::Algebra => Kind::Algebra,
            KindArg::Coalgebra => Kind::Coalgebra,
            KindArg::Bialgebra => Kind::Bialgebra,
            KindArg::Module => Kind::Module,
            KindArg::Comodule => Kind::Comodule,
            KindArg::HopfModule => Kind::HopfModule,
            KindArg::HopfBimodule => Kind::HopfBimodule,
            KindArg::RotaBaxter => Kind::RotaBaxter,
            KindArg::Dendriform => Kind::Dendriform,
            KindArg::Prelie => Kind::PreLie,
            KindArg::PrelieCoalgebra => Kind::PreLieCoalgebra,
            KindArg::Augmented => Kind::Augmented,
            KindArg::Coaugmented => Kind::Coaugmented,
        })
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Prec,
    Succ,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FromArg {
    Plain,
    Unital,
    Counital,
    ComoduleW0,
    ModuleW0,
    Qt,
    AntiQt,
    Coqt,
    AntiCoqt,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom of the structure in a model file.
    Verify {
        file: String,
        #[arg(long, value_enum, default_value = "auto")]
        kind: KindArg,
        /// Also check the twisted dendriform relations.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        flags: JsonFlag,
    },
    /// Twist an untwisted bialgebra by the four maps in `--maps`.
    Twist {
        file: String,
        #[arg(long)]
        maps: String,
        #[command(flatten)]
        out: Out,
    },
    /// Trivial coproduct on a unital algebra (or trivial product with `--co`).
    Trivial {
        file: String,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        co: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Coproduct induced by an element r of A ⊗ A.
    DeltaR {
        file: String,
        #[arg(long)]
        r: String,
        #[arg(long)]
        anti: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Product induced by a bilinear form σ on C.
    MuSigma {
        file: String,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        anti: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Residual of the associative BiHom Yang–Baxter equation for r.
    Ybe {
        file: String,
        #[arg(long)]
        r: String,
        #[arg(long)]
        anti: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        flags: JsonFlag,
    },
    /// Residual of the dual equation for a bilinear form σ.
    CoYbe {
        file: String,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        anti: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        flags: JsonFlag,
    },
    /// Dual bialgebra (or dual Hopf module) in the dual basis.
    Dualize {
        file: String,
        #[command(flatten)]
        out: Out,
    },
    /// Tensor product of two augmented algebras (coaugmented coalgebras with `--co`).
    Tensor {
        a: String,
        b: String,
        #[arg(long)]
        co: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Pre-Lie algebra from a bialgebra.
    Prelie {
        file: String,
        #[arg(long)]
        noninv: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Pre-Lie coalgebra from a bialgebra.
    PrelieCoalgebra {
        file: String,
        #[arg(long)]
        noninv: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Rota–Baxter operator from a solution r.
    RotaBaxter {
        file: String,
        #[arg(long)]
        r: String,
        #[arg(long, value_enum, allow_hyphen_values = true)]
        sign: SignArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Dendriform structure from a Rota–Baxter model.
    Dendriform {
        file: String,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[command(flatten)]
        out: Out,
    },
    /// Build a Hopf module.
    HopfModule {
        file: String,
        #[arg(long, value_enum)]
        from: FromArg,
        /// Model whose `dim` and maps describe the tensored space V (free variants).
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: Out,
    },
    /// Enumerate solutions r with entries from a coefficient list.
    SearchR {
        file: String,
        /// Comma-separated scalars, e.g. "-1,0,1".
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        anti: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Keep only r fixed by all four maps.
        #[arg(long)]
        invariant: bool,
        #[command(flatten)]
        flags: JsonFlag,
    },
    /// List, print or self-test the built-in examples.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        selftest: bool,
        /// Write every entry as NAME.json into this directory.
        #[arg(long)]
        write: Option<PathBuf>,
        #[command(flatten)]
        flags: JsonFlag,
    },
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::PreconditionFailed { report, .. } | Error::NotBialgebra(report) = &e {
                eprint!("{report}");
            }
            EXIT_ERROR
        }
    }
}

/// Reads a model from a path, or from the catalog with `catalog:NAME`.
pub fn load(spec: &str) -> Result<Model> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return catalog::get(name);
    }
    let text = fs::read_to_string(spec).map_err(|e| Error::Parse { path: spec.to_string(), message: e.to_string() })?;
    Model::parse(&text).map_err(|e| match e {
        Error::Parse { path, message } => Error::Parse { path: format!("{spec}: {path}"), message },
        other => other,
    })
}

fn save(model: &Model, path: &Path) -> Result<()> {
    fs::write(path, model.to_json()).map_err(|e| Error::Parse { path: path.display().to_string(), message: e.to_string() })
}

fn parse_scalar(s: &str) -> Result<Scalar> {
    Scalar::parse(s.trim())
}

/// `--lambda`, else the main file's weight, else the auxiliary file's.
fn weight(flag: &Option<String>, main: &Model, aux: Option<&Model>) -> Result<Scalar> {
    if let Some(s) = flag {
        return parse_scalar(s);
    }
    main.lambda.clone().or_else(|| aux.and_then(|m| m.lambda.clone())).ok_or(Error::MissingWeight)
}

fn pretty(v: &Json) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn report_json(kind: Option<Kind>, report: &Report) -> Json {
    let mut v = serde_json::to_value(report).expect("serializable");
    if let (Some(k), Some(obj)) = (kind, v.as_object_mut()) {
        obj.insert("kind".into(), json!(k.name()));
    }
    v
}

fn exit_for(report: &Report) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    }
}

fn print_report(kind: Option<Kind>, report: &Report, as_json: bool) {
    if as_json {
        outln!("{}", pretty(&report_json(kind, report)));
    } else {
        if let Some(k) = kind {
            out!("{k}: ");
        }
        if report.passed() {
            outln!("PASS");
        } else {
            outln!("FAIL ({} violations)", report.violations.len());
            out!("{report}");
        }
    }
}

/// Writes a constructed model and reports the verdict of verifying it.
fn emit(model: Model, out: &Out) -> Result<i32> {
    let (kind, report) = model::verify(&model, None, false)?;
    match &out.output {
        Some(path) => {
            save(&model, path)?;
            print_report(Some(kind), &report, out.json);
        }
        None if out.json => {
            let mut v = report_json(Some(kind), &report);
            v["model"] = serde_json::to_value(model.to_file()).expect("serializable");
            outln!("{}", pretty(&v));
        }
        None => {
            out!("{}", model.to_json());
            eprint!("{kind}: ");
            if report.passed() {
                eprintln!("PASS");
            } else {
                eprintln!("FAIL\n{report}");
            }
        }
    }
    Ok(exit_for(&report))
}

fn print_ybe(y: &YbeReport, as_json: bool) {
    if as_json {
        outln!("{}", pretty(&serde_json::to_value(y).expect("serializable")));
        return;
    }
    let n = y.residual.dim();
    let residual = infbh::Value::from_dense(y.residual.coeffs(), &[n, n, n]);
    outln!("solution: {}", if y.is_solution { "yes" } else { "no" });
    outln!("residual: {residual}");
    for (k, v) in &y.characterization {
        outln!("{k}: {v}");
    }
}

/// `r` from a file, accepting a `sigma` field with the same coefficients.
fn r_of(m: &Model) -> Result<Elem2> {
    m.r().or_else(|e| m.sigma.as_ref().map(|s| s.to_elem2()).ok_or(e))
}

/// `σ` from a file, accepting an `r` field with the same coefficients.
fn sigma_of(m: &Model) -> Result<BiForm> {
    m.sigma().or_else(|e| m.r.as_ref().map(BiForm::from_elem2).ok_or(e))
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Verify { file, kind, full, flags } => {
            let m = load(&file)?;
            let (k, report) = model::verify(&m, kind.kind(), full)?;
            print_report(Some(k), &report, flags.json);
            Ok(exit_for(&report))
        }
        Command::Twist { file, maps, out } => {
            let b = load(&file)?.bialgebra()?;
            let m = load(&maps)?;
            let t = cons::yau_twist(&b, &m.alpha(), &m.beta(), &m.psi(), &m.omega())?;
            emit(Model::from_bialgebra(&t), &out)
        }
        Command::Trivial { file, side, lambda, co, out } => {
            let m = load(&file)?;
            let l = weight(&lambda, &m, None)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let b = if co {
                cons::trivial_product(&m.coalgebra()?, &m.alpha(), &m.beta(), &l, side)?
            } else {
                cons::trivial_coproduct(&m.algebra()?, &m.psi(), &m.omega(), &l, side)?
            };
            emit(Model::from_bialgebra(&b), &out)
        }
        Command::DeltaR { file, r, anti, lambda, out } => {
            let m = load(&file)?;
            let rm = load(&r)?;
            let l = weight(&lambda, &m, Some(&rm))?;
            let b = cons::delta_r(&m.algebra()?, &m.psi(), &m.omega(), &r_of(&rm)?, &l, anti)?;
            emit(Model::from_bialgebra(&b), &out)
        }
        Command::MuSigma { file, sigma, anti, lambda, out } => {
            let m = load(&file)?;
            let sm = load(&sigma)?;
            let l = weight(&lambda, &m, Some(&sm))?;
            let b = cons::mu_sigma(&m.coalgebra()?, &m.alpha(), &m.beta(), &sigma_of(&sm)?, &l, anti)?;
            emit(Model::from_bialgebra(&b), &out)
        }
        Command::Ybe { file, r, anti, lambda, flags } => {
            let m = load(&file)?;
            let rm = load(&r)?;
            let l = weight(&lambda, &m, Some(&rm))?;
            let y = ybe::abhybe_residual(&m.algebra()?, &m.psi(), &m.omega(), &r_of(&rm)?, &l, anti)?;
            print_ybe(&y, flags.json);
            Ok(if y.is_solution { EXIT_OK } else { EXIT_VIOLATIONS })
        }
        Command::CoYbe { file, sigma, anti, lambda, flags } => {
            let m = load(&file)?;
            let sm = load(&sigma)?;
            let l = weight(&lambda, &m, Some(&sm))?;
            let y = ybe::coabhybe_residual(&m.coalgebra()?, &m.alpha(), &m.beta(), &sigma_of(&sm)?, &l, anti)?;
            print_ybe(&y, flags.json);
            Ok(if y.is_solution { EXIT_OK } else { EXIT_VIOLATIONS })
        }
        Command::Dualize { file, out } => {
            let m = load(&file)?;
            let dual = if m.infer_kind()? == Kind::HopfModule {
                Model::from_hopf_module(&cons::dualize_hopf_module(&m.hopf_module()?))
            } else {
                Model::from_bialgebra(&cons::dualize(&m.bialgebra()?))
            };
            emit(dual, &out)
        }
        Command::Tensor { a, b, co, out } => {
            let (ma, mb) = (load(&a)?, load(&b)?);
            let t = if co {
                Model::from_coaugmented(&cons::coaug_tensor_product(&ma.coaugmented()?, &mb.coaugmented()?)?)
            } else {
                Model::from_augmented(&cons::aug_tensor_product(&ma.augmented()?, &mb.augmented()?)?)
            };
            emit(t, &out)
        }
        Command::Prelie { file, noninv, out } => {
            let b = load(&file)?.bialgebra()?;
            let p = if noninv { cons::prelie_noninv(&b)? } else { cons::prelie_from_bialgebra(&b)? };
            emit(Model::from_prelie(&p), &out)
        }
        Command::PrelieCoalgebra { file, noninv, out } => {
            let b = load(&file)?.bialgebra()?;
            emit(Model::from_prelie_coalgebra(&cons::prelie_coalgebra(&b, noninv)?), &out)
        }
        Command::RotaBaxter { file, r, sign, lambda, out } => {
            let m = load(&file)?;
            let rm = load(&r)?;
            let l = weight(&lambda, &m, Some(&rm))?;
            let sign = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            let rb = cons::rota_baxter_from_r(&m.algebra()?, &m.psi(), &m.omega(), &r_of(&rm)?, &l, sign)?;
            emit(Model::from_rota_baxter(&rb), &out)
        }
        Command::Dendriform { file, variant, out } => {
            let rb = load(&file)?.rota_baxter()?;
            let v = match variant {
                VariantArg::Prec => DendriformVariant::Prec,
                VariantArg::Succ => DendriformVariant::Succ,
            };
            emit(Model::from_dendriform(&cons::dendriform_from_rb(&rb, v)?), &out)
        }
        Command::HopfModule { file, from, space, r, sigma, lambda, out } => {
            let m = load(&file)?;
            let h = hopf_module(&m, from, space.as_deref(), r.as_deref(), sigma.as_deref(), &lambda)?;
            emit(Model::from_hopf_module(&h), &out)
        }
        Command::SearchR { file, coeffs, anti, lambda, invariant, flags } => {
            let m = load(&file)?;
            let l = weight(&lambda, &m, None)?;
            let cs = coeffs.split(',').map(parse_scalar).collect::<Result<Vec<_>>>()?;
            let found = ybe::grid_search_r(&m.algebra()?, &m.psi(), &m.omega(), &l, anti, &cs, invariant)?;
            let n = m.dim;
            let rows: Vec<Json> = found
                .iter()
                .map(|r| json!(infbh::Value::from_dense(r.coeffs(), &[n, n])))
                .collect();
            if flags.json {
                outln!("{}", pretty(&json!({ "count": rows.len(), "solutions": rows })));
            } else {
                outln!("{} solutions", found.len());
                for r in &found {
                    outln!("{}", infbh::Value::from_dense(r.coeffs(), &[n, n]));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { name, selftest, write, flags } => catalog_cmd(name, selftest, write, flags.json),
    }
}

fn block_module(m: &Model) -> Result<Option<(LeftModule, Endo, Endo)>> {
    Ok(match &m.module {
        Some(b) => {
            let id = Endo::identity(b.dim);
            let module = m.left_module()?;
            Some((module, b.psi.clone().unwrap_or_else(|| id.clone()), b.omega.clone().unwrap_or(id)))
        }
        None => None,
    })
}

fn block_comodule(m: &Model) -> Result<Option<(LeftComodule, Endo, Endo)>> {
    Ok(match &m.comodule {
        Some(b) => {
            let id = Endo::identity(b.dim);
            let co = m.left_comodule()?;
            Some((co, b.alpha.clone().unwrap_or_else(|| id.clone()), b.beta.clone().unwrap_or(id)))
        }
        None => None,
    })
}

/// Dispatches `hopf-module --from`. The regular (co)module with the base's
/// own maps is used whenever the file carries no module or comodule block.
fn hopf_module(m: &Model, from: FromArg, space: Option<&str>, r: Option<&str>, sigma: Option<&str>, lambda: &Option<String>) -> Result<HopfModule> {
    match from {
        FromArg::Plain | FromArg::Unital | FromArg::Counital | FromArg::ComoduleW0 | FromArg::ModuleW0 => {
            let b = m.bialgebra()?;
            let base_space = || FreeSpace { dim: b.dim(), alpha: b.alpha().clone(), beta: b.beta().clone(), psi: b.psi().clone(), omega: b.omega().clone() };
            let variant = match from {
                FromArg::Plain => FreeVariant::Plain,
                FromArg::Unital => FreeVariant::Unital,
                FromArg::Counital => FreeVariant::Counital,
                FromArg::ComoduleW0 => {
                    let (co, alpha, beta) = block_comodule(m)?.unwrap_or_else(|| {
                        let co = LeftComodule::regular(&b.coalgebra);
                        (co, b.alpha().clone(), b.beta().clone())
                    });
                    let v = FreeSpace { dim: co.dim, alpha, beta, psi: co.psi.clone(), omega: co.omega.clone() };
                    return cons::hopf_module_free(&b, &v, &FreeVariant::ComoduleW0(co.coaction));
                }
                _ => {
                    let (md, psi, omega) = block_module(m)?.unwrap_or_else(|| {
                        let md = LeftModule::regular(&b.algebra);
                        (md, b.psi().clone(), b.omega().clone())
                    });
                    let v = FreeSpace { dim: md.dim, alpha: md.alpha.clone(), beta: md.beta.clone(), psi, omega };
                    return cons::hopf_module_free(&b, &v, &FreeVariant::ModuleW0(md.action));
                }
            };
            let v = match space {
                Some(s) => {
                    let sm = load(s)?;
                    FreeSpace { dim: sm.dim, alpha: sm.alpha(), beta: sm.beta(), psi: sm.psi(), omega: sm.omega() }
                }
                None if b.alpha().is_identity() && b.beta().is_identity() && b.psi().is_identity() && b.omega().is_identity() => FreeSpace::trivial(1),
                None => base_space(),
            };
            cons::hopf_module_free(&b, &v, &variant)
        }
        FromArg::Qt | FromArg::AntiQt => {
            let rm = load(r.ok_or_else(|| Error::MissingField("--r".into()))?)?;
            let l = weight(lambda, m, Some(&rm))?;
            let alg = m.algebra()?;
            let (md, psi_m, omega_m) = block_module(m)?.unwrap_or_else(|| (LeftModule::regular(&alg), m.psi(), m.omega()));
            cons::hopf_module_from_qt(&alg, &m.psi(), &m.omega(), &r_of(&rm)?, &l, from == FromArg::AntiQt, &md, &psi_m, &omega_m)
        }
        FromArg::Coqt | FromArg::AntiCoqt => {
            let sm = load(sigma.ok_or_else(|| Error::MissingField("--sigma".into()))?)?;
            let l = weight(lambda, m, Some(&sm))?;
            let co = m.coalgebra()?;
            let (cm, alpha_m, beta_m) = block_comodule(m)?.unwrap_or_else(|| (LeftComodule::regular(&co), m.alpha(), m.beta()));
            cons::hopf_module_from_coqt(&co, &m.alpha(), &m.beta(), &sigma_of(&sm)?, &l, from == FromArg::AntiCoqt, &cm, &alpha_m, &beta_m)
        }
    }
}

fn catalog_cmd(name: Option<String>, selftest: bool, write: Option<PathBuf>, as_json: bool) -> Result<i32> {
    if let Some(dir) = write {
        fs::create_dir_all(&dir).map_err(|e| Error::Parse { path: dir.display().to_string(), message: e.to_string() })?;
        for m in catalog::all() {
            let name = m.name.clone().expect("named");
            save(&m, &dir.join(format!("{name}.json")))?;
        }
        return Ok(EXIT_OK);
    }
    if selftest {
        let models = match &name {
            Some(n) => vec![catalog::get(n)?],
            None => catalog::all(),
        };
        let mut ok = true;
        let mut rows = vec![];
        for m in models {
            let name = m.name.clone().expect("named");
            let (kind, report) = model::verify(&m, None, false)?;
            let good = matches_expectation(&report, m.expect.as_ref().expect("catalog entries declare expectations"));
            let round_trip = Model::parse(&m.to_json())? == m;
            ok &= good && round_trip;
            if as_json {
                rows.push(json!({ "name": name, "kind": kind.name(), "ok": good && round_trip, "passed": report.passed() }));
            } else {
                outln!("{} {name} ({kind})", if good && round_trip { "ok  " } else { "FAIL" });
            }
        }
        if as_json {
            outln!("{}", pretty(&json!({ "ok": ok, "entries": rows })));
        }
        return Ok(if ok { EXIT_OK } else { EXIT_VIOLATIONS });
    }
    match name {
        Some(n) => out!("{}", catalog::get(&n)?.to_json()),
        None if as_json => outln!("{}", pretty(&json!(catalog::NAMES))),
        None => {
            for n in catalog::NAMES {
                outln!("{n}");
            }
        }
    }
    Ok(EXIT_OK)
}
