//! The `superharrison` command line. [`run`] takes the argument vector and
//! two sinks so tests can drive it without spawning a process.
//!
//! Exit codes: 0 success, 1 mathematical negative (invalid algebra or
//! deformation, failed property suite), 2 input error, 3 resource ceiling,
//! 4 internal consistency failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use superharrison::algebra::ValidationReport;
use superharrison::cohomology::{cohomology, derivation_space};
use superharrison::combinatorics::{enumerate_shuffles, sigma_o_sign, ParityVector, Permutation};
use superharrison::deformation::{deformation_classes, first_order_deformation_check, square_zero_extension};
use superharrison::io::{
    algebra_to_json, cochain_file, cochain_to_json, describe_cochain, load_algebra, load_cochain,
    load_module, AlgebraFile,
};
use superharrison::verify::{run_suite, Suite, VerifyOptions};
use superharrison::{Cochain, CohomologyResult, ComplexKind, Error, Limits, SuperAlgebra, SuperModule};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Overrides the default cochain-dimension ceiling when `--max-cochain-dim`
/// is absent.
pub const CEILING_ENV: &str = "SUPERHARRISON_MAX_COCHAIN_DIM";

#[derive(Debug, Parser)]
#[command(
    name = "superharrison",
    version,
    about = "Hochschild and super-Harrison cohomology of supercommutative algebras over Q"
)]
struct Cli {
    /// Largest cochain-space dimension any step may build.
    #[arg(long, global = true, value_name = "N")]
    max_cochain_dim: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate the algebra axioms.
    Check {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// List the (P, N−P) shuffles of 1..N, one image list per line.
    Shuffles { n: usize, p: usize },
    /// The σ° sign of a permutation against a parity vector.
    Sign {
        /// 1-based images, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        perm: Vec<usize>,
        /// 0/1 per slot, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        parity: Vec<u8>,
    },
    /// Dimensions and representatives of H^N.
    Cohomology {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "self")]
        module: String,
        #[arg(long)]
        degree: usize,
        /// `harrison` or `hochschild`.
        #[arg(long, default_value = "harrison")]
        kind: String,
        #[arg(long)]
        json: bool,
    },
    /// Basis of the parity-preserving derivations A → M.
    Derivations {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "self")]
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// Check m + tψ as a first-order deformation.
    DeformCheck {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        json: bool,
    },
    /// H² of the self-module: classes of first-order deformations.
    DeformClasses {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Build and validate the square-zero extension A ⊕ M twisted by ψ.
    Extend {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "self")]
        module: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        json: bool,
    },
    /// Run property suites (`all` or a comma separated list).
    Verify {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 20)]
        pairs: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// What a subcommand produced, before it is written out.
struct Report {
    code: i32,
    text: String,
    json: Value,
    digest: Option<String>,
}

impl Report {
    fn new(code: i32, text: String, json: Value) -> Self {
        Report {
            code,
            text,
            json,
            digest: None,
        }
    }

    fn digest(mut self, parts: &[&str]) -> Self {
        let mut hasher = Sha256::new();
        for p in parts {
            hasher.update(p.as_bytes());
            hasher.update([0u8]);
        }
        self.digest = Some(hex::encode(hasher.finalize()));
        self
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let json_mode = wants_json(&cli.command);
    match execute(cli) {
        Ok(report) => {
            let written = if json_mode {
                let mut doc = json!({ "command": echo });
                if let Some(d) = &report.digest {
                    doc["input_digest"] = json!(d);
                }
                doc["exit_code"] = json!(report.code);
                doc["result"] = report.json;
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json values serialize"))
            } else {
                out.write_all(report.text.as_bytes())
            };
            if written.is_err() {
                return EXIT_INPUT;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "superharrison: {e}");
            exit_code(&e)
        }
    }
}

fn wants_json(c: &Command) -> bool {
    match c {
        Command::Shuffles { .. } | Command::Sign { .. } => false,
        Command::Check { json, .. }
        | Command::Cohomology { json, .. }
        | Command::Derivations { json, .. }
        | Command::DeformCheck { json, .. }
        | Command::DeformClasses { json, .. }
        | Command::Extend { json, .. }
        | Command::Verify { json, .. } => *json,
    }
}

fn limits(flag: Option<usize>) -> Result<Limits, Error> {
    let mut limits = Limits::default();
    if let Some(n) = flag {
        limits.max_cochain_dim = n;
    } else if let Ok(v) = std::env::var(CEILING_ENV) {
        limits.max_cochain_dim = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{CEILING_ENV} must be a non-negative integer, got `{v}`")))?;
    }
    Ok(limits)
}

/// Loads an algebra and rejects it unless it satisfies every axiom.
fn valid_algebra(spec: &str) -> Result<(SuperAlgebra, String), Error> {
    let a = load_algebra(spec)?;
    if let Some(v) = a.validate().first() {
        return Err(Error::Parse(format!("{spec} is not a supercommutative superalgebra: {v}")));
    }
    let canonical = algebra_to_json(&a);
    Ok((a, canonical))
}

fn execute(cli: Cli) -> Result<Report, Error> {
    let limits = limits(cli.max_cochain_dim)?;
    match cli.command {
        Command::Check { algebra, .. } => {
            let a = load_algebra(&algebra)?;
            let canonical = algebra_to_json(&a);
            Ok(check_report(&a, &a.validate()).digest(&[&canonical]))
        }
        Command::Shuffles { n, p } => {
            let mut text = String::new();
            for s in enumerate_shuffles(n, p)? {
                text.push_str(&s.perm().to_string());
                text.push('\n');
            }
            Ok(Report::new(EXIT_OK, text, Value::Null))
        }
        Command::Sign { perm, parity } => {
            let perm = Permutation::from_images(&perm)?;
            let parity = ParityVector::from_bits(&parity)?;
            let sign = sigma_o_sign(&perm, &parity)?;
            Ok(Report::new(EXIT_OK, format!("{sign}\n"), Value::Null))
        }
        Command::Cohomology {
            algebra,
            module,
            degree,
            kind,
            ..
        } => {
            let kind: ComplexKind = kind.parse()?;
            let (a, canonical) = valid_algebra(&algebra)?;
            let m = load_module(&a, &module)?;
            let r = cohomology(&a, &m, degree, kind, &limits)?;
            Ok(cohomology_report(&a, &m, &r).digest(&[&canonical, &module]))
        }
        Command::Derivations { algebra, module, .. } => {
            let (a, canonical) = valid_algebra(&algebra)?;
            let m = load_module(&a, &module)?;
            limits.check(&a, &m, 0)?;
            let der = derivation_space(&a, &m)?;
            let basis = der
                .vectors()
                .iter()
                .map(|v| Cochain::from_coeffs(&a, &m, 1, v.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let mut text = format!("dim Der = {}\n", basis.len());
            for (i, d) in basis.iter().enumerate() {
                text.push_str(&format!("derivation {}: {}\n", i + 1, describe_cochain(&a, &m, d)));
            }
            let json = json!({
                "dim": basis.len(),
                "basis": basis.iter().map(|d| cochain_value(&a, &m, d)).collect::<Vec<_>>(),
            });
            Ok(Report::new(EXIT_OK, text, json).digest(&[&canonical, &module]))
        }
        Command::DeformCheck { algebra, psi, .. } => {
            let (a, canonical) = valid_algebra(&algebra)?;
            let m = load_module(&a, "self")?;
            limits.check(&a, &m, 2)?;
            let psi = load_cochain(&a, &m, &psi)?;
            let report = first_order_deformation_check(&a, &psi)?;
            let valid = report.is_valid();
            let mut text = format!(
                "associative mod t^2: {}\nsupercommutative mod t^2: {}\nparity preserving: {}\n",
                yes_no(report.associative_mod_t2()),
                yes_no(report.supercommutative_mod_t2()),
                yes_no(report.parity_ok())
            );
            for r in report.reasons() {
                text.push_str(&format!("reason: {r}\n"));
            }
            text.push_str(if valid { "verdict: valid\n" } else { "verdict: invalid\n" });
            let json = json!({
                "valid": valid,
                "associative_mod_t2": report.associative_mod_t2(),
                "associativity_witness": report.associativity_witness.map(|(i, j, k)| vec![i, j, k]),
                "supercommutative_mod_t2": report.supercommutative_mod_t2(),
                "supercommutativity_witness": report.supercommutativity_witness.map(|(i, j)| vec![i, j]),
                "parity_ok": report.parity_ok(),
                "reasons": report.reasons(),
            });
            let code = if valid { EXIT_OK } else { EXIT_NEGATIVE };
            let psi_text = cochain_to_json(&a, &m, &psi);
            Ok(Report::new(code, text, json).digest(&[&canonical, &psi_text]))
        }
        Command::DeformClasses { algebra, .. } => {
            let (a, canonical) = valid_algebra(&algebra)?;
            let m = load_module(&a, "self")?;
            let r = deformation_classes(&a, &limits)?;
            Ok(cohomology_report(&a, &m, &r).digest(&[&canonical]))
        }
        Command::Extend { algebra, module, psi, .. } => {
            let (a, canonical) = valid_algebra(&algebra)?;
            let m = load_module(&a, &module)?;
            limits.check(&a, &m, 2)?;
            let psi = load_cochain(&a, &m, &psi)?;
            if !psi.is_parity_preserving(&a, &m) {
                return Err(Error::Parse("ψ must be parity preserving".into()));
            }
            let ext = square_zero_extension(&a, &m, &psi)?;
            let report = ext.algebra.validate();
            let mut check = check_report(&ext.algebra, &report);
            check.text = format!("{}{}", algebra_to_json(&ext.algebra), "\n") + &check.text;
            check.json = json!({
                "algebra": serde_json::to_value(AlgebraFile::from_algebra(&ext.algebra)).expect("plain data"),
                "inclusion": ext.inclusion,
                "projection": ext.projection,
                "validation": check.json,
            });
            let psi_text = cochain_to_json(&a, &m, &psi);
            Ok(check.digest(&[&canonical, &module, &psi_text]))
        }
        Command::Verify {
            algebra,
            suite,
            max_degree,
            samples,
            pairs,
            seed,
            ..
        } => {
            let (a, canonical) = valid_algebra(&algebra)?;
            let suites = Suite::parse_list(&suite)?;
            let opts = VerifyOptions {
                max_degree,
                samples,
                equivalence_pairs: pairs,
                seed,
                limits,
            };
            let mut text = String::new();
            let mut results = Vec::new();
            let mut code = EXIT_OK;
            for s in suites {
                let r = run_suite(&a, s, &opts)?;
                if !r.passed {
                    code = EXIT_NEGATIVE;
                }
                text.push_str(&format!("{r}\n"));
                results.push(json!({
                    "suite": s.name(),
                    "passed": r.passed,
                    "checks": r.checked,
                    "detail": r.detail,
                }));
            }
            Ok(Report::new(code, text, json!({ "suites": results })).digest(&[&canonical]))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check_report(a: &SuperAlgebra, report: &ValidationReport) -> Report {
    let odd = (0..a.dim()).filter(|&i| a.parity(i).is_odd()).count();
    let mut text = String::new();
    if report.is_valid() {
        text.push_str(&format!(
            "valid supercommutative superalgebra: dim {}, {} even, {odd} odd\n",
            a.dim(),
            a.dim() - odd
        ));
    } else {
        text.push_str(&format!("invalid: {} violation(s)\n", report.violations.len()));
        for v in &report.violations {
            text.push_str(&format!("  {v}\n"));
        }
    }
    let json = json!({
        "valid": report.is_valid(),
        "dim": a.dim(),
        "violations": report.violations.iter().map(|v| json!({"kind": v.kind(), "detail": v.to_string()})).collect::<Vec<_>>(),
    });
    let code = if report.is_valid() { EXIT_OK } else { EXIT_NEGATIVE };
    Report::new(code, text, json)
}

fn cochain_value(a: &SuperAlgebra, m: &SuperModule, f: &Cochain) -> Value {
    serde_json::to_value(cochain_file(a, m, f)).expect("plain data")
}

fn cohomology_report(a: &SuperAlgebra, m: &SuperModule, r: &CohomologyResult) -> Report {
    let mut text = format!(
        "H^{} ({})\ndim C = {}\ndim Z = {}\ndim B = {}\ndim H = {}\n",
        r.degree, r.kind, r.dim_cochain, r.dim_cocycle, r.dim_coboundary, r.dim_cohomology
    );
    for (i, rep) in r.representatives.iter().enumerate() {
        text.push_str(&format!("representative {}: {}\n", i + 1, describe_cochain(a, m, rep)));
    }
    let json = json!({
        "degree": r.degree,
        "kind": r.kind.to_string(),
        "dim_cochain": r.dim_cochain,
        "dim_cocycle": r.dim_cocycle,
        "dim_coboundary": r.dim_coboundary,
        "dim_cohomology": r.dim_cohomology,
        "representatives": r.representatives.iter().map(|c| cochain_value(a, m, c)).collect::<Vec<_>>(),
    });
    Report::new(EXIT_OK, text, json)
}
