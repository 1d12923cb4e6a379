//! The `apolarkit` command line: argument parsing, dispatch over the scalar
//! field, JSON and text reports, and exit codes.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::apolarity::{
    apolar_ideal_component, basis_forms, catalecticant, is_apolar_pointset, is_in_power_span, partial_space, PointSet,
};
use crate::constructions::{catalog_json, family_f_example, paper_plane_substitution, random_power_sum};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDesc, Fp, Fp2, Fp2Ctx, Q};
use crate::form::{Alphabet, HomogeneousForm};
use crate::rank_loci::{
    classify_singularity, descend_to_prime_field, drop_on_line, interpolate_drop_curve_on_lines, random_line,
    singular_points_plane_curve, Singularity,
};
use crate::repro::{checks_to_json, restrict_to_first_plane, run_case, CASES};
use crate::resolutions::{full_betti, graded_betti, m2_matrix, GradedQuotient, LinearFormMatrix};
use crate::text::{parse_form, ParseOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "APOLARKIT_THREADS";

/// Seed used by `repro` when none is given.
pub const DEFAULT_REPRO_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "apolarkit", version, about = "Apolarity, Betti tables and rank loci of cubic fourfolds")]
pub struct Cli {
    /// Scalar field: q, fp:<p> or fp2:<p>.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Seed for every random choice.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Plane {
    /// No restriction.
    None,
    /// The plane z -> (z0+z1+z2, z0+z1, z1, z0, z0+z2, z2).
    Reference,
    /// The plane x3 = x4 = x5 = 0.
    First,
}

/// Forms are given inline or as `@path`.
#[derive(Debug, Subcommand, Serialize)]
pub enum Command {
    /// Catalecticant ranks, apolar ideal dimensions and bases for a form.
    Apolar { form: String },
    /// Betti table of the apolar ideal of a form, or of the ideal of points.
    Betti {
        #[arg(long, conflicts_with_all = ["points", "points_file"])]
        form: Option<String>,
        /// Number of random points of P^5.
        #[arg(long, conflicts_with = "points_file")]
        points: Option<usize>,
        /// JSON array of points.
        #[arg(long)]
        points_file: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_i: usize,
        #[arg(long, default_value_t = 7)]
        max_j: usize,
        /// Highest degree of the coordinate ring of the points kept (default: max_j + 1).
        #[arg(long)]
        top: Option<usize>,
    },
    /// The 35x21 matrix of linear second syzygies of a cubic (default f(1,-1,1,-1,1)).
    M2 {
        form: Option<String>,
        /// Randomize the three bases with this seed.
        #[arg(long)]
        basis_seed: Option<u64>,
        /// Random points at which to report the rank.
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// Degree of a rank-drop locus on lines, and its curve on a plane.
    Ranklocus {
        /// Cubic whose M2 is studied (default f(1,-1,1,-1,1)).
        #[arg(long, conflicts_with = "matrix")]
        form: Option<String>,
        /// A matrix of linear forms as JSON instead of M2.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Plane::None)]
        plane: Plane,
        #[arg(long, default_value_t = 20)]
        threshold: usize,
        #[arg(long, default_value_t = 5)]
        lines: usize,
        /// Interpolate the drop curve (three variables only).
        #[arg(long)]
        curve: bool,
        #[arg(long, default_value_t = 9)]
        degree: usize,
    },
    /// Every built-in constant as polynomial text.
    Catalog,
    /// A random power sum of cubes and its apolarity checks.
    Powersum {
        #[arg(long)]
        count: usize,
        /// Force the first four linear forms into a common plane.
        #[arg(long)]
        coplanar: bool,
    },
    /// Recompute a published value and compare (`all` runs every case).
    Repro { case: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Apolar { .. } => "apolar",
            Command::Betti { .. } => "betti",
            Command::M2 { .. } => "m2",
            Command::Ranklocus { .. } => "ranklocus",
            Command::Catalog => "catalog",
            Command::Powersum { .. } => "powersum",
            Command::Repro { .. } => "repro",
        }
    }
}

/// Result of one command before wrapping.
struct Outcome {
    result: Value,
    text: String,
    mismatch: bool,
}

/// Command state shared by every handler.
struct Job<'a> {
    cli: &'a Cli,
    /// Contents of every input read, in order, for the input hash.
    inputs: Vec<String>,
}

impl Job<'_> {
    fn read(&mut self, arg: &str) -> Result<String> {
        let text = match arg.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Serialization(format!("{path}: {e}")))?,
            None => arg.to_string(),
        };
        self.inputs.push(text.clone());
        Ok(text)
    }

    fn read_path(&mut self, path: &Path) -> Result<String> {
        self.read(&format!("@{}", path.display()))
    }

    fn seed(&self) -> Result<u64> {
        self.cli
            .seed
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("`{}` makes random choices and needs --seed", self.cli.command.name()) })
    }

    fn form<F: Field>(&mut self, ctx: &F::Ctx, arg: &str) -> Result<HomogeneousForm<F>> {
        let text = self.read(arg)?;
        parse_form(ctx, text.trim(), ParseOptions::default())
    }
}

fn texts<F: Field>(forms: &[HomogeneousForm<F>]) -> Vec<String> {
    forms.iter().map(ToString::to_string).collect()
}

fn point_text<F: Field>(p: &[F]) -> String {
    format!("({})", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(":"))
}

fn run_apolar<F: Field>(job: &mut Job, ctx: &F::Ctx, form: &str) -> Result<Outcome> {
    let f = job.form::<F>(ctx, form)?;
    let d = f.degree();
    let ranks = (0..=d).map(|k| Ok(catalecticant(&f, k)?.rank())).collect::<Result<Vec<_>>>()?;
    let ideal_dims = (0..=d + 1).map(|k| Ok(apolar_ideal_component(&f, k)?.dim())).collect::<Result<Vec<_>>>()?;
    let dual = f.alphabet().dual();
    let partials = basis_forms(&partial_space(&f)?, f.alphabet())?;
    let quadrics = if d >= 2 { basis_forms(&apolar_ideal_component(&f, 2)?, dual)? } else { vec![] };
    let text = format!(
        "form: {f}\nhilbert function: {ranks:?}\ndim I_f(k), k = 0..{}: {ideal_dims:?}\nI_f(2) basis:\n{}\nfirst partials:\n{}\n",
        d + 1,
        quadrics.iter().map(|q| format!("  {q}")).collect::<Vec<_>>().join("\n"),
        partials.iter().map(|q| format!("  {q}")).collect::<Vec<_>>().join("\n"),
    );
    Ok(Outcome {
        result: json!({
            "form": f.to_string(),
            "degree": d,
            "num_vars": f.num_vars(),
            "hilbert_function": ranks,
            "apolar_ideal_dims": ideal_dims,
            "apolar_ideal_quadrics": texts(&quadrics),
            "partial_space": texts(&partials),
        }),
        text,
        mismatch: false,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_betti<F: Field>(
    job: &mut Job,
    ctx: &F::Ctx,
    form: &Option<String>,
    points: Option<usize>,
    points_file: &Option<PathBuf>,
    max_i: usize,
    max_j: usize,
    top: Option<usize>,
) -> Result<Outcome> {
    let (source, table) = if let Some(form) = form {
        let f = job.form::<F>(ctx, form)?;
        ("form", full_betti(&GradedQuotient::apolar_algebra(&f)?)?)
    } else {
        let z = if let Some(path) = points_file {
            let text = job.read_path(path)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Serialization(e.to_string()))?;
            PointSet::<F>::from_json(ctx, &v)?
        } else if let Some(count) = points {
            let mut rng = ChaCha8Rng::seed_from_u64(job.seed()?);
            PointSet::<F>::random(ctx, 6, count, &mut rng)
        } else {
            return Err(Error::Parse { pos: 0, msg: "betti needs --form, --points or --points-file".into() });
        };
        let a = GradedQuotient::of_points(&z, top.unwrap_or(max_j + 1))?;
        ("points", graded_betti(&a, max_i, max_j)?)
    };
    let rendered = table.render();
    Ok(Outcome {
        result: json!({"source": source, "window": [max_i, max_j], "table": table.to_json(), "rendered": rendered}),
        text: rendered,
        mismatch: false,
    })
}

fn default_or_form<F: Field>(job: &mut Job, ctx: &F::Ctx, form: &Option<String>) -> Result<HomogeneousForm<F>> {
    match form {
        Some(s) => job.form(ctx, s),
        None => Ok(family_f_example(ctx)),
    }
}

fn random_point<F: Field, R: Rng>(ctx: &F::Ctx, n: usize, rng: &mut R) -> Vec<F> {
    (0..n).map(|_| F::random(ctx, rng)).collect()
}

fn run_m2<F: Field>(job: &mut Job, ctx: &F::Ctx, form: &Option<String>, basis_seed: Option<u64>, samples: usize) -> Result<Outcome> {
    let f = default_or_form::<F>(job, ctx, form)?;
    let m = m2_matrix(&f, basis_seed)?;
    let ranks = if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(job.seed()?);
        (0..samples).map(|_| m.rank_at_point(&random_point::<F, _>(ctx, 6, &mut rng))).collect::<Result<Vec<_>>>()?
    } else {
        vec![]
    };
    let mut text = format!("M2 of {f}: {}x{}, ranks at random points {ranks:?}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.entry(r, c).to_string()).collect();
        text.push_str(&format!("{r:>2}: {}\n", row.join(", ")));
    }
    Ok(Outcome { result: json!({"form": f.to_string(), "matrix": m.to_json(), "ranks": ranks}), text, mismatch: false })
}

#[allow(clippy::too_many_arguments)]
fn run_ranklocus<F: Field>(
    job: &mut Job,
    ctx: &F::Ctx,
    form: &Option<String>,
    matrix: &Option<PathBuf>,
    plane: Plane,
    threshold: usize,
    lines: usize,
    curve: bool,
    degree: usize,
    descend: impl Fn(&HomogeneousForm<F>) -> Option<String>,
) -> Result<Outcome> {
    let seed = job.seed()?;
    let (source, m) = match matrix {
        Some(path) => {
            let text = job.read_path(path)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Serialization(e.to_string()))?;
            (format!("file {}", path.display()), LinearFormMatrix::<F>::from_json(ctx, &v)?)
        }
        None => {
            let f = default_or_form::<F>(job, ctx, form)?;
            (format!("M2 of {f}"), m2_matrix(&f, None)?)
        }
    };
    let m = match plane {
        Plane::None => m,
        Plane::Reference => {
            let subst: Vec<_> = paper_plane_substitution::<F>(ctx).into_iter().map(|l| l.with_alphabet(Alphabet::Z)).collect();
            m.restrict(&subst)?
        }
        Plane::First => restrict_to_first_plane(&m)?,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degrees = Vec::with_capacity(lines);
    let mut full = Vec::with_capacity(lines);
    for _ in 0..lines {
        let (p, q) = random_line::<F, _>(ctx, m.num_vars(), &mut rng);
        let d = drop_on_line(&m, &p, &q, threshold, rng.gen())?;
        degrees.push(d.degree);
        full.push(d.full_degree);
    }
    let mut result = json!({
        "matrix": {"source": source, "rows": m.rows(), "cols": m.cols(), "num_vars": m.num_vars(), "plane": plane},
        "threshold": threshold,
        "line_degrees": degrees,
        "line_full_degrees": full,
    });
    let mut text = format!("{source}, {}x{} in {} variables, threshold {threshold}\nline degrees {degrees:?} (with multiplicity {full:?})\n", m.rows(), m.cols(), m.num_vars());
    if curve {
        let fit = interpolate_drop_curve_on_lines(&m, threshold, degree, rng.gen(), 400)?;
        let sing = singular_points_plane_curve(&fit.form)?;
        let kinds = sing.iter().map(|p| classify_singularity(&fit.form, p)).collect::<Result<Vec<_>>>()?;
        let classification = kinds.iter().copied().max_by_key(|k| *k as u8).unwrap_or(Singularity::Smooth);
        let base = descend(&fit.form);
        text.push_str(&format!("curve: {}\n", fit.form));
        if let Some(b) = &base {
            text.push_str(&format!("over the prime field: {b}\n"));
        }
        for (p, k) in sing.iter().zip(&kinds) {
            text.push_str(&format!("singular point {} {k}\n", point_text(p)));
        }
        result["curve"] = json!(fit.form.to_string());
        result["curve_prime_field"] = json!(base);
        result["lines_used"] = json!(fit.lines_used);
        result["singular_points"] = json!(sing.iter().map(|p| p.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());
        result["singularities"] = json!(kinds);
        result["classification"] = json!(classification);
    }
    Ok(Outcome { result, text, mismatch: false })
}

fn run_powersum<F: Field>(job: &mut Job, ctx: &F::Ctx, count: usize, coplanar: bool) -> Result<Outcome> {
    let ps = random_power_sum::<F>(ctx, count, job.seed()?, coplanar)?;
    let z = PointSet::new(ctx, ps.forms.iter().map(|l| l.coeffs().to_vec()).collect())?;
    let apolar = is_apolar_pointset(&z, &ps.f)?;
    let span = is_in_power_span(&z, &ps.f)?;
    let text = format!(
        "f = {}\nforms:\n{}\nweights: {}\ndual points apolar: {apolar}\nin span of cubes: {span}\n",
        ps.f,
        ps.forms.iter().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n"),
        ps.weights.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    );
    Ok(Outcome {
        result: json!({
            "forms": texts(&ps.forms),
            "weights": ps.weights.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "f": ps.f.to_string(),
            "apolar_pointset": apolar,
            "in_power_span": span,
        }),
        text,
        mismatch: false,
    })
}

fn run_repro(job: &Job, case: &str) -> Result<Outcome> {
    let seed = job.cli.seed.unwrap_or(DEFAULT_REPRO_SEED);
    let names: Vec<&str> = if case == "all" { CASES.to_vec() } else { vec![case] };
    let mut reports = Vec::new();
    let mut text = String::new();
    let mut mismatch = false;
    for name in names {
        let checks = run_case(name, seed)?;
        for c in &checks {
            mismatch |= !c.passed;
            let first = c.detail.lines().next().unwrap_or("");
            text.push_str(&format!("{} {name}: {}{}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, if first.is_empty() { String::new() } else { format!(" ({first})") }));
        }
        reports.push(checks_to_json(name, &checks));
    }
    Ok(Outcome { result: json!({"seed": seed, "cases": reports}), text, mismatch })
}

/// Commands that depend on the scalar field, for one concrete field.
fn run_in<F: Field>(job: &mut Job, ctx: &F::Ctx, descend: impl Fn(&HomogeneousForm<F>) -> Option<String>) -> Result<Outcome> {
    let cli = job.cli;
    match &cli.command {
        Command::Apolar { form } => run_apolar::<F>(job, ctx, form),
        Command::Betti { form, points, points_file, max_i, max_j, top } => {
            run_betti::<F>(job, ctx, form, *points, points_file, *max_i, *max_j, *top)
        }
        Command::M2 { form, basis_seed, samples } => run_m2::<F>(job, ctx, form, *basis_seed, *samples),
        Command::Ranklocus { form, matrix, plane, threshold, lines, curve, degree } => {
            run_ranklocus::<F>(job, ctx, form, matrix, *plane, *threshold, *lines, *curve, *degree, descend)
        }
        Command::Powersum { count, coplanar } => run_powersum::<F>(job, ctx, *count, *coplanar),
        Command::Catalog => {
            let v = catalog_json();
            let text = serde_json::to_string_pretty(&v).expect("catalog serializes");
            Ok(Outcome { result: v, text, mismatch: false })
        }
        Command::Repro { case } => run_repro(job, case),
    }
}

/// Maps an error to its exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnknownField(_) | Error::Serialization(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

/// Runs a parsed command and returns the report text and exit code.
pub fn execute(cli: &Cli) -> (String, i32) {
    let field = match cli.field.parse::<FieldDesc>() {
        Ok(f) => f,
        Err(e) => return (format!("error: {e}\n"), exit_code(&e)),
    };
    let mut job = Job { cli, inputs: Vec::new() };
    let outcome = match field {
        FieldDesc::Rational => run_in::<Q>(&mut job, &(), |_| None),
        FieldDesc::Prime(p) => run_in::<Fp>(&mut job, &p, |_| None),
        FieldDesc::PrimeSquare(p) => {
            run_in::<Fp2>(&mut job, &Fp2Ctx::new(p), |f| descend_to_prime_field(f).map(|g| g.to_string()))
        }
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return (format!("error: {e}\n"), exit_code(&e)),
    };
    let mut hasher = Sha256::new();
    hasher.update(serde_json::to_string(&cli.command).expect("command serializes"));
    for input in &job.inputs {
        hasher.update([0u8]);
        hasher.update(input);
    }
    let hash: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    let code = if outcome.mismatch { EXIT_MISMATCH } else { EXIT_OK };
    let body = match cli.format {
        Format::Json => {
            let report = json!({
                "command": cli.command.name(),
                "version": env!("CARGO_PKG_VERSION"),
                "field": field.to_string(),
                "seed": cli.seed,
                "input_sha256": hash,
                "result": outcome.result,
            });
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
        Format::Text => format!(
            "# apolarkit {} {} field={} seed={} input={}\n{}",
            env!("CARGO_PKG_VERSION"),
            cli.command.name(),
            field,
            cli.seed.map_or("none".to_string(), |s| s.to_string()),
            &hash[..16],
            outcome.text
        ),
    };
    (body, code)
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&n| n > 0) {
        // fails only if a pool already exists, which then stays in use
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    configure_threads();
    let (body, code) = execute(&cli);
    if code == EXIT_PARSE || code == EXIT_PRECONDITION {
        eprint!("{body}");
        return code;
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_PRECONDITION;
            }
        }
        None => print!("{body}"),
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (String, i32) {
        let cli = Cli::try_parse_from(std::iter::once("apolarkit").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn apolar_of_fermat() {
        let (out, code) = run(&["apolar", "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["hilbert_function"], json!([1, 6, 6, 1]));
        assert_eq!(v["result"]["apolar_ideal_dims"][2], 15);
        assert_eq!(v["command"], "apolar");
        assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
    }

    #[test]
    fn parse_errors_exit_with_two() {
        let (out, code) = run(&["apolar", "x0^3+*x1"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(out.contains("byte"), "{out}");
        let (_, code) = run(&["--field", "fp:4", "catalog"]);
        assert_eq!(code, EXIT_PARSE);
        let (_, code) = run(&["betti", "--points", "3"]);
        assert_eq!(code, EXIT_PARSE, "missing seed");
    }

    #[test]
    fn precondition_errors_exit_with_three() {
        let (_, code) = run(&["--field", "fp:3", "apolar", "x0^3"]);
        assert_eq!(code, EXIT_PRECONDITION);
        let (_, code) = run(&["--seed", "1", "betti", "--points", "4", "--top", "3", "--max-j", "5"]);
        assert_eq!(code, EXIT_PRECONDITION);
        let (_, code) = run(&["repro", "nonsense"]);
        assert_eq!(code, EXIT_PRECONDITION);
    }

    #[test]
    fn one_point_gives_koszul_numbers() {
        let pts = std::env::temp_dir().join("apolarkit-one-point.json");
        std::fs::write(&pts, "[[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\"]]").unwrap();
        let (out, code) = run(&["betti", "--points-file", pts.to_str().unwrap(), "--max-j", "6"]);
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        // the ideal of a point is generated by five linear forms
        let want: Vec<Value> = (0..=5).map(|i| json!([i, i, crate::monomial::binomial(5, i)])).collect();
        assert_eq!(v["result"]["table"]["entries"], json!(want));
    }

    #[test]
    fn identical_jobs_give_identical_bytes() {
        let a = run(&["--seed", "4", "--field", "fp:101", "powersum", "--count", "5"]);
        let b = run(&["--seed", "4", "--field", "fp:101", "powersum", "--count", "5"]);
        assert_eq!(a, b);
        assert_eq!(a.1, 0);
        let v: Value = serde_json::from_str(&a.0).unwrap();
        assert_eq!(v["result"]["apolar_pointset"], true);
        assert_eq!(v["result"]["in_power_span"], true);
    }

    #[test]
    fn repro_reports_pass_lines() {
        let (out, code) = run(&["--format", "text", "repro", "drk3-scan"]);
        assert_eq!(code, 0);
        assert!(out.contains("PASS drk3-scan"), "{out}");
    }

    #[test]
    fn text_betti_for_a_form() {
        let (out, code) = run(&["--format", "text", "betti", "--form", "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3"]);
        assert_eq!(code, 0);
        // the Fermat cubic is not general: extra quadric syzygies appear
        assert!(out.contains("1:  - 15 40 45 24  5"), "{out}");
    }
}
