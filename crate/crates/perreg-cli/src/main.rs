//! Command-line front end for the periodic-regions library.
//!
//! Subcommands map one-to-one onto the library modules: stratum component
//! classification, cylinder-count bounds, extremal partition search,
//! configuration analysis, feasibility witnesses, exact ratio formulas,
//! distribution tables, identity and integral verification, and primitive
//! lattice counting on the torus.
//!
//! Exit codes: 0 on success, 1 when a verify subcommand ran its checks but at
//! least one failed, 2 on usage errors (unknown flags, malformed input,
//! parameters outside a formula's domain).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use periodic_regions::configurations::{
    extremal_mean_area, first_cylinder_index, hyperelliptic_admissibility_guard, q_max,
    simple_complement_feasibility, spin_parity,
};
use periodic_regions::exact::{display_rational, parse_rational};
use periodic_regions::oracles::{
    correlation_integral, cusp_integral, i_prime_integral, i_x_integral, j_p_integral,
    EvaluationPlan,
};
use periodic_regions::ratios::{self, VolumeFactor};
use periodic_regions::special::{
    rational_to_f64, uniform_grid, verify_combi1, verify_combi2, verify_combi4,
    VerificationReport,
};
use periodic_regions::strata::parse_stratum;
use periodic_regions::torus::convergence_table;
use periodic_regions::{ComponentLabel, Configuration, Rational};

#[derive(Parser)]
#[command(
    name = "perreg",
    version,
    about = "Combinatorics and counting asymptotics of periodic regions on translation surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the connected components of a stratum (genus 4 and up)
    Classify {
        /// Cone point orders, e.g. "6" or "3,3" or "H(2,2,2)"
        #[arg(long)]
        stratum: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Upper bound for the number of cylinders in one configuration
    Qmax {
        /// Cone point orders, e.g. "2,2,2"
        #[arg(long)]
        stratum: String,
    },
    /// Maximize the mean cylinder count ratio over partitions of 2g - 2
    Extremal {
        /// Ambient genus, at least 2
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Validate a configuration file and report its derived invariants
    ConfigAnalyze {
        /// Path to a configuration JSON file
        #[arg(long)]
        config: PathBuf,
    },
    /// Decide whether a component admits a configuration with simple pieces
    Feasibility {
        /// Cone point orders, e.g. "8" or "2,2,2,2"
        #[arg(long)]
        stratum: String,
        /// Component label: hyperelliptic, even-spin, odd-spin, non-hyperelliptic
        #[arg(long)]
        label: String,
    },
    /// Evaluate the exact ratio formulas: all six families, or one by name
    Ratios {
        /// Single formula to evaluate; omit to print the full table
        #[arg(long, value_enum)]
        formula: Option<Formula>,
        /// Boundary stratum dimension (svc-area-p, area-p-conf, region-tail,
        /// region-tail-asymptote)
        #[arg(long)]
        n: Option<u32>,
        /// Number of cylinders
        #[arg(long)]
        q: Option<u32>,
        /// Ambient stratum dimension (mean-area-p, first-cyl-tail, correlation)
        #[arg(long)]
        d: Option<u32>,
        /// Area exponent, a nonnegative rational like "2" or "1/2"
        #[arg(long)]
        p: Option<String>,
        /// Area fraction in [0, 1), a rational like "1/4" or "0.25"
        #[arg(long)]
        x: Option<String>,
        /// Component dimensions for volume-product, e.g. "3,4"
        #[arg(long)]
        dims: Option<String>,
        /// Component volumes for volume-product: rationals or symbols, e.g. "1/2,V2"
        #[arg(long)]
        factors: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Tabulate the tail distribution of the total cylinder area as CSV
    Distribution {
        /// Boundary stratum dimension, at least 1
        #[arg(long)]
        n: u32,
        /// Number of cylinders, at least 1
        #[arg(long)]
        q: u32,
        /// Evaluation grid "start:end:step" with rational entries, e.g. "0:1:0.01"
        #[arg(long)]
        grid: String,
    },
    /// Exhaustively check the binomial identities behind the ratio formulas
    VerifyIdentities {
        /// Row bound for the alternating binomial sums
        #[arg(long, default_value_t = 30)]
        a_max: u32,
        /// Column bound for the alternating binomial sums
        #[arg(long, default_value_t = 30)]
        b_max: u32,
        /// Dimension bound for the inclusion-exclusion kernel
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        /// Cylinder bound for the inclusion-exclusion kernel
        #[arg(long, default_value_t = 20)]
        q_max: u32,
        /// Dimension and cylinder bound for the Beta expansion check
        #[arg(long, default_value_t = 12)]
        beta_max: u32,
        /// Number of grid points in [0, 1) for the Beta expansion check
        #[arg(long, alias = "grid", default_value_t = 9)]
        grid_points: u32,
    },
    /// Evaluate one moduli-space integral numerically against its closed form
    VerifyIntegrals {
        #[arg(long, value_enum)]
        family: Family,
        /// mc (Monte Carlo, three standard errors) or quad (adaptive quadrature)
        #[arg(long, value_enum, default_value_t = Method::Quad)]
        method: Method,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        q: u32,
        /// Area exponent, a nonnegative rational
        #[arg(long, default_value = "0")]
        p: String,
        /// First area threshold in [0, 1)
        #[arg(long, default_value = "0")]
        x: String,
        /// Second area threshold in [0, 1) (corr only)
        #[arg(long, default_value = "0")]
        x1: String,
        /// Cusp width cutoff, a positive rational (cusp only)
        #[arg(long, default_value = "1/2")]
        eps: String,
        /// Monte Carlo sample count
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Monte Carlo seed; falls back to the SV_SEED variable, then to 0
        #[arg(long)]
        seed: Option<u64>,
        /// Quadrature relative tolerance
        #[arg(long, default_value_t = 1e-8)]
        rel_tol: f64,
    },
    /// Count primitive lattice points and compare the density to 6/pi^2
    TorusCount {
        /// Comma-separated radii, e.g. "10,100,1000"
        #[arg(long, value_delimiter = ',', required = true)]
        radii: Vec<u32>,
        #[arg(long, alias = "out", value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formula {
    SvcAreaP,
    MeanAreaP,
    AreaPConf,
    FirstCylTail,
    RegionTail,
    RegionTailAsymptote,
    Correlation,
    TorusConstant,
    VolumeProduct,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Cusp,
    Jp,
    Ix,
    Iprime,
    Corr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Mc,
    Quad,
}

/// A usage error: printed to stderr as `error: ...`, exit code 2.
struct UsageError(String);

fn usage(message: impl Into<String>) -> UsageError {
    UsageError(message.into())
}

/// Everything a subcommand produces: the stdout payload and whether the
/// checks it ran (if any) all passed. Non-verifying subcommands report true.
struct CmdOutput {
    stdout: String,
    verified: bool,
}

impl CmdOutput {
    fn text(stdout: String) -> Self {
        CmdOutput {
            stdout,
            verified: true,
        }
    }

    fn json(value: &impl serde::Serialize) -> Self {
        let line = serde_json::to_string(value).expect("output structures serialize");
        CmdOutput::text(line + "\n")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<CmdOutput, UsageError> {
    match command {
        Command::Classify { stratum, format } => classify(&stratum, format),
        Command::Qmax { stratum } => {
            let stratum = parse_stratum(&stratum).map_err(|e| usage(e.to_string()))?;
            Ok(CmdOutput::text(format!("{}\n", q_max(&stratum))))
        }
        Command::Extremal { genus, format } => extremal(genus, format),
        Command::ConfigAnalyze { config } => config_analyze(&config),
        Command::Feasibility { stratum, label } => feasibility(&stratum, &label),
        Command::Ratios {
            formula,
            n,
            q,
            d,
            p,
            x,
            dims,
            factors,
            format,
        } => {
            let params = RatioParams {
                n,
                q,
                d,
                p,
                x,
                dims,
                factors,
            };
            match formula {
                Some(formula) => ratio_formula(formula, &params, format),
                None => ratio_table(&params, format),
            }
        }
        Command::Distribution { n, q, grid } => distribution(n, q, &grid),
        Command::VerifyIdentities {
            a_max,
            b_max,
            n_max,
            q_max,
            beta_max,
            grid_points,
        } => verify_identities(a_max, b_max, n_max, q_max, beta_max, grid_points),
        Command::VerifyIntegrals {
            family,
            method,
            n,
            q,
            p,
            x,
            x1,
            eps,
            samples,
            seed,
            rel_tol,
        } => {
            let args = IntegralArgs {
                n,
                q,
                p,
                x,
                x1,
                eps,
                samples,
                seed,
                rel_tol,
            };
            verify_integrals(family, method, args)
        }
        Command::TorusCount { radii, format } => torus_count(&radii, format),
    }
}

fn classify(stratum: &str, format: Format) -> Result<CmdOutput, UsageError> {
    let stratum = parse_stratum(stratum).map_err(|e| usage(e.to_string()))?;
    let components = stratum
        .classify_components()
        .map_err(|e| usage(e.to_string()))?;
    match format {
        Format::Table => {
            let names: Vec<&str> = components.iter().map(|c| c.name()).collect();
            Ok(CmdOutput::text(format!(
                "{stratum}: {}\n",
                names.join(", ")
            )))
        }
        Format::Json => Ok(CmdOutput::json(&serde_json::json!({
            "stratum": stratum,
            "components": components,
        }))),
    }
}

fn extremal(genus: u32, format: Format) -> Result<CmdOutput, UsageError> {
    if genus < 2 {
        return Err(usage(format!(
            "the extremal search needs genus >= 2, got {genus}"
        )));
    }
    let search = extremal_mean_area(genus);
    let partition = search
        .best_partition
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    match format {
        Format::Table => Ok(CmdOutput::text(format!(
            "partition ({partition}) value {}\n",
            display_rational(&search.value)
        ))),
        Format::Json => Ok(CmdOutput::json(&serde_json::json!({
            "genus": genus,
            "best_partition": search.best_partition,
            "value": display_rational(&search.value),
            "candidates": search.candidates,
            "unique": search.unique,
        }))),
    }
}

fn config_analyze(path: &PathBuf) -> Result<CmdOutput, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let config = Configuration::from_json(&text)
        .map_err(|e| usage(format!("malformed configuration: {e}")))?;
    let analysis = config
        .analyze()
        .map_err(|e| usage(format!("invalid configuration: {e}")))?;
    Ok(CmdOutput::json(&serde_json::json!({
        "analysis": analysis,
        "spin_parity": spin_parity(&config).to_string(),
        "first_cylinder_gap": first_cylinder_index(&config),
        "hyperelliptic_admissible": hyperelliptic_admissibility_guard(&config),
    })))
}

fn feasibility(stratum: &str, label: &str) -> Result<CmdOutput, UsageError> {
    let stratum = parse_stratum(stratum).map_err(|e| usage(e.to_string()))?;
    let label = ComponentLabel::from_str(label).map_err(|e| usage(e.to_string()))?;
    let report =
        simple_complement_feasibility(&stratum, label).map_err(|e| usage(e.to_string()))?;
    Ok(CmdOutput::json(&serde_json::json!({
        "stratum": stratum,
        "label": label,
        "verdict": report.verdict,
        "witness": report.witness,
    })))
}

struct RatioParams {
    n: Option<u32>,
    q: Option<u32>,
    d: Option<u32>,
    p: Option<String>,
    x: Option<String>,
    dims: Option<String>,
    factors: Option<String>,
}

impl RatioParams {
    fn n(&self) -> Result<u32, UsageError> {
        let n = self.n.ok_or_else(|| usage("--n is required"))?;
        if n < 1 {
            return Err(usage("--n must be at least 1"));
        }
        Ok(n)
    }

    fn q(&self) -> Result<u32, UsageError> {
        let q = self.q.ok_or_else(|| usage("--q is required"))?;
        if q < 1 {
            return Err(usage("--q must be at least 1"));
        }
        Ok(q)
    }

    fn d(&self, min: u32) -> Result<u32, UsageError> {
        let d = self.d.ok_or_else(|| usage("--d is required"))?;
        if d < min {
            return Err(usage(format!("--d must be at least {min} here, got {d}")));
        }
        Ok(d)
    }

    fn p(&self) -> Result<Rational, UsageError> {
        let text = self.p.as_deref().ok_or_else(|| usage("--p is required"))?;
        let p = parse_rational(text).map_err(|e| usage(format!("--p: {e}")))?;
        if p < Rational::from_integer(0.into()) {
            return Err(usage(format!("--p must be nonnegative, got {text}")));
        }
        Ok(p)
    }

    fn x(&self) -> Result<Rational, UsageError> {
        let text = self.x.as_deref().ok_or_else(|| usage("--x is required"))?;
        let x = parse_rational(text).map_err(|e| usage(format!("--x: {e}")))?;
        if x < Rational::from_integer(0.into()) || x >= Rational::from_integer(1.into()) {
            return Err(usage(format!("--x must lie in [0, 1), got {text}")));
        }
        Ok(x)
    }

    fn dims(&self) -> Result<Vec<u32>, UsageError> {
        let text = self
            .dims
            .as_deref()
            .ok_or_else(|| usage("--dims is required"))?;
        let dims: Vec<u32> = text
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| usage(format!("--dims: `{piece}` is not a positive integer")))
            })
            .collect::<Result<_, _>>()?;
        if dims.is_empty() || dims.contains(&0) {
            return Err(usage("--dims needs one positive dimension per component"));
        }
        Ok(dims)
    }

    fn factors(&self) -> Result<Vec<VolumeFactor>, UsageError> {
        let text = self
            .factors
            .as_deref()
            .ok_or_else(|| usage("--factors is required"))?;
        text.split(',')
            .map(|piece| {
                let piece = piece.trim();
                if piece.is_empty() {
                    return Err(usage("--factors has an empty entry"));
                }
                Ok(match parse_rational(piece) {
                    Ok(value) => VolumeFactor::Number(value),
                    Err(_) => VolumeFactor::Symbol(piece.to_string()),
                })
            })
            .collect()
    }
}

/// Renders one evaluated formula. Table mode prints the bare value; JSON mode
/// wraps it with the formula name and, where it exists, an f64 view.
fn ratio_output(
    formula: &str,
    value: String,
    numeric: Option<f64>,
    format: Format,
) -> CmdOutput {
    match format {
        Format::Table => CmdOutput::text(value + "\n"),
        Format::Json => CmdOutput::json(&serde_json::json!({
            "formula": formula,
            "value": value,
            "numeric": numeric,
        })),
    }
}

fn ratio_formula(
    formula: Formula,
    params: &RatioParams,
    format: Format,
) -> Result<CmdOutput, UsageError> {
    let rational_out = |name: &str, value: Rational| {
        let numeric = rational_to_f64(&value);
        Ok(ratio_output(
            name,
            display_rational(&value),
            Some(numeric),
            format,
        ))
    };
    match formula {
        Formula::SvcAreaP => {
            let constant = ratios::svc_area_p(params.n()?, params.q()?, &params.p()?);
            Ok(ratio_output(
                "svc-area-p",
                constant.to_string(),
                None,
                format,
            ))
        }
        Formula::MeanAreaP => rational_out(
            "mean-area-p",
            ratios::mean_area_p(params.d(3)?, &params.p()?),
        ),
        Formula::AreaPConf => rational_out(
            "area-p-conf",
            ratios::area_p_conf_ratio(params.n()?, params.q()?, &params.p()?),
        ),
        Formula::FirstCylTail => rational_out(
            "first-cyl-tail",
            ratios::first_cyl_tail(params.d(3)?, &params.x()?),
        ),
        Formula::RegionTail => rational_out(
            "region-tail",
            ratios::region_tail(params.n()?, params.q()?, &params.x()?),
        ),
        Formula::RegionTailAsymptote => rational_out(
            "region-tail-asymptote",
            ratios::region_tail_asymptote(params.n()?, params.q()?),
        ),
        Formula::Correlation => rational_out(
            "correlation",
            ratios::correlation_ratio(params.d(4)?, &params.x()?),
        ),
        Formula::TorusConstant => {
            let constant = ratios::torus_constant();
            let numeric = constant.value.to_f64(1.0);
            match format {
                Format::Table => Ok(CmdOutput::text(format!(
                    "{} = {}\n",
                    constant.value,
                    fmt_real(numeric)
                ))),
                Format::Json => Ok(CmdOutput::json(&serde_json::json!({
                    "formula": "torus-constant",
                    "value": constant.value.to_string(),
                    "numeric": numeric,
                    "cusp_volume": constant.cusp_volume.to_string(),
                    "moduli_volume": constant.moduli_volume.to_string(),
                    "derivation": constant.from_derivation().to_string(),
                }))),
            }
        }
        Formula::VolumeProduct => {
            let dims = params.dims()?;
            let factors = params.factors()?;
            if dims.len() != factors.len() {
                return Err(usage(format!(
                    "--dims lists {} components but --factors lists {}",
                    dims.len(),
                    factors.len()
                )));
            }
            let product = ratios::boundary_volume_product(&dims, &factors);
            Ok(ratio_output(
                "volume-product",
                product.to_string(),
                None,
                format,
            ))
        }
    }
}

/// All six ratio families at one parameter point. The moment families take
/// (n, q, p) or (d, p); the tail families take (n, q, x) or (d, x); the
/// correlation ratio needs d >= 4 because it conditions on a second cylinder.
fn ratio_table(params: &RatioParams, format: Format) -> Result<CmdOutput, UsageError> {
    let n = params.n()?;
    let q = params.q()?;
    let d = params.d(4)?;
    let p = params.p()?;
    let x = params.x()?;
    let rows = [
        ("svc-area-p", ratios::svc_area_p(n, q, &p).to_string()),
        ("mean-area-p", display_rational(&ratios::mean_area_p(d, &p))),
        (
            "area-p-conf",
            display_rational(&ratios::area_p_conf_ratio(n, q, &p)),
        ),
        (
            "first-cyl-tail",
            display_rational(&ratios::first_cyl_tail(d, &x)),
        ),
        (
            "region-tail",
            display_rational(&ratios::region_tail(n, q, &x)),
        ),
        (
            "correlation",
            display_rational(&ratios::correlation_ratio(d, &x)),
        ),
    ];
    match format {
        Format::Table => {
            let mut out = String::new();
            for (name, value) in &rows {
                let _ = writeln!(out, "{name}: {value}");
            }
            Ok(CmdOutput::text(out))
        }
        Format::Json => {
            let ratios: serde_json::Map<String, serde_json::Value> = rows
                .iter()
                .map(|(name, value)| (name.to_string(), serde_json::Value::from(value.clone())))
                .collect();
            Ok(CmdOutput::json(&serde_json::json!({
                "n": n,
                "q": q,
                "d": d,
                "p": display_rational(&p),
                "x": display_rational(&x),
                "ratios": ratios,
            })))
        }
    }
}

fn distribution(n: u32, q: u32, grid: &str) -> Result<CmdOutput, UsageError> {
    if n < 1 || q < 1 {
        return Err(usage("distribution needs --n and --q at least 1"));
    }
    let pieces: Vec<&str> = grid.split(':').collect();
    let [start, end, step] = pieces.as_slice() else {
        return Err(usage(format!(
            "--grid must look like start:end:step, got `{grid}`"
        )));
    };
    let parse = |part: &str, name: &str| {
        parse_rational(part).map_err(|e| usage(format!("--grid {name}: {e}")))
    };
    let start = parse(start, "start")?;
    let end = parse(end, "end")?;
    let step = parse(step, "step")?;
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    if start < zero || end > one || start > end {
        return Err(usage("--grid needs 0 <= start <= end <= 1"));
    }
    if step <= zero {
        return Err(usage("--grid step must be positive"));
    }
    let poly = ratios::region_tail_poly(n, q);
    let mut out = String::from("x,region_tail\n");
    let mut x = start;
    while x <= end {
        let value = poly.eval(&x);
        let _ = writeln!(
            out,
            "{},{}",
            fmt_real(rational_to_f64(&x)),
            fmt_real(rational_to_f64(&value))
        );
        x += &step;
    }
    Ok(CmdOutput::text(out))
}

fn verify_identities(
    a_max: u32,
    b_max: u32,
    n_max: u32,
    q_max: u32,
    beta_max: u32,
    grid_points: u32,
) -> Result<CmdOutput, UsageError> {
    if grid_points < 1 {
        return Err(usage("--grid-points must be at least 1"));
    }
    let grid = uniform_grid(grid_points);
    let reports = [
        verify_combi1(a_max, b_max),
        verify_combi2(n_max, q_max),
        verify_combi4(beta_max, beta_max, &grid),
    ];
    let mut out = String::new();
    let mut verified = true;
    for report in &reports {
        render_report(&mut out, report);
        verified &= report.all_passed();
    }
    Ok(CmdOutput {
        stdout: out,
        verified,
    })
}

fn render_report(out: &mut String, report: &VerificationReport) {
    if report.all_passed() {
        let _ = writeln!(
            out,
            "{}: PASS ({} cases)",
            report.identity, report.cases_checked
        );
    } else {
        let _ = writeln!(
            out,
            "{}: FAIL ({} of {} cases)",
            report.identity,
            report.failures.len(),
            report.cases_checked
        );
        for failure in report.failures.iter().take(5) {
            let _ = writeln!(out, "  {failure}");
        }
    }
}

struct IntegralArgs {
    n: u32,
    q: u32,
    p: String,
    x: String,
    x1: String,
    eps: String,
    samples: u64,
    seed: Option<u64>,
    rel_tol: f64,
}

fn verify_integrals(
    family: Family,
    method: Method,
    args: IntegralArgs,
) -> Result<CmdOutput, UsageError> {
    let plan = match method {
        Method::Mc => EvaluationPlan::MonteCarlo {
            samples: args.samples,
            seed: resolve_seed(args.seed)?,
        },
        Method::Quad => EvaluationPlan::Quadrature {
            rel_tol: args.rel_tol,
        },
    };
    let parse = |text: &str, name: &str| {
        parse_rational(text).map_err(|e| usage(format!("--{name}: {e}")))
    };
    let comparison = match family {
        Family::Cusp => {
            let eps = rational_to_f64(&parse(&args.eps, "eps")?);
            cusp_integral(args.q, &parse(&args.p, "p")?, eps, &plan)
        }
        Family::Jp => j_p_integral(args.n, args.q, &parse(&args.p, "p")?, &plan),
        Family::Ix => i_x_integral(args.n, args.q, &parse(&args.x, "x")?, &plan),
        Family::Iprime => i_prime_integral(args.n, args.q, &parse(&args.x, "x")?, &plan),
        Family::Corr => correlation_integral(
            args.n,
            args.q,
            &parse(&args.x, "x")?,
            &parse(&args.x1, "x1")?,
            &plan,
        ),
    }
    .map_err(|e| usage(e.to_string()))?;
    let line = serde_json::to_string(&comparison).expect("comparison serializes");
    Ok(CmdOutput {
        stdout: line + "\n",
        verified: comparison.pass,
    })
}

fn torus_count(radii: &[u32], format: TableFormat) -> Result<CmdOutput, UsageError> {
    if radii.contains(&0) {
        return Err(usage("--radii entries must be at least 1"));
    }
    let table = convergence_table(radii);
    match format {
        TableFormat::Json => Ok(CmdOutput::json(&table)),
        TableFormat::Csv => {
            let limit = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);
            let mut out = String::from("L,count,density,density_minus_6_over_pi2\n");
            for row in &table {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    row.radius,
                    row.count,
                    fmt_real(row.density),
                    fmt_real(row.density - limit)
                );
            }
            Ok(CmdOutput::text(out))
        }
    }
}

/// Explicit seed, else the SV_SEED environment variable, else 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, UsageError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("SV_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| usage(format!("SV_SEED must be an unsigned integer, got `{text}`"))),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(usage("SV_SEED is set but is not valid UTF-8"))
        }
    }
}

/// Fixed-precision decimal rendering with 15 significant digits, switching to
/// scientific notation outside a comfortable exponent range. Zero prints as
/// a bare `0` so that exact zeros are recognizable.
fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let decimals = 14 - x.abs().log10().floor() as i32;
    if (0..=17).contains(&decimals) {
        format!("{:.*}", decimals as usize, x)
    } else {
        format!("{:.14e}", x)
    }
}

#[cfg(test)]
mod tests {
    use super::fmt_real;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(fmt_real(0.0), "0");
        assert_eq!(fmt_real(1.0), "1.00000000000000");
        assert_eq!(fmt_real(0.01), "0.0100000000000000");
        assert_eq!(fmt_real(0.6079271018540267), "0.607927101854027");
        assert_eq!(fmt_real(-0.25), "-0.250000000000000");
        assert_eq!(fmt_real(1.0e-9), "1.00000000000000e-9");
        assert_eq!(fmt_real(3.0e18), "3.00000000000000e18");
    }
}
