//! conekit command line: norm computation, central-map classification,
//! Sinkhorn normal forms and the reproduction suites. Every command prints a
//! single JSON report on standard output; diagnostics go to standard error.
//!
//! Exit codes: 0 success, 1 failing reproduction check, 2 input/schema error,
//! 3 unsupported space pair, 4 solver failure, 5 map not interior/positive,
//! 6 no convergence.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use conekit::classify::{classify_central, lor_eb_falsify, CentralMap, Verdict};
use conekit::cones::{ConeDescriptor, ConeMap};
use conekit::error::Error;
use conekit::lorentz::sinkhorn_normal_form;
use conekit::numerics::Mat;
use conekit::report::{repro_to_entries, ReportFile, ReproReport, ResultEntry};
use conekit::repro;
use conekit::spaces::{Family, OperatorMatrix, SpaceDescriptor};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "conekit", version, about = "Operator ideal norms and cone-map classification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NormKind {
    Op,
    Hs,
    Nuc,
    Pi2,
    Gamma2,
    #[value(name = "gamma2star")]
    Gamma2Star,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Peres,
    Nonconvexity,
    Nonassoc,
    #[value(name = "square-cone")]
    SquareCone,
    #[value(name = "psd-factorization")]
    PsdFactorization,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute an operator ideal norm of the matrix in FILE.
    Norm {
        #[arg(long, value_enum)]
        kind: NormKind,
        #[arg(long = "in")]
        input: String,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Classify the central map `lambda (+) u` from FILE.
    Classify {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        lambda: Option<f64>,
        /// Falsification trials for the one-sided Lorentz-EB search (0 = skip).
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Sinkhorn normal form of an interior Lorentz-to-Lorentz map.
    ///
    /// The input matrix acts on cone coordinates: `(cod.dim + 1) x (dom.dim + 1)`.
    Sinkhorn {
        #[arg(long = "in")]
        input: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 10_000)]
        max_iter: usize,
    },
    /// Run reproduction suites and report every check.
    Reproduce {
        #[arg(long, value_enum)]
        which: Suite,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// On-disk matrix format: row-major data plus space descriptors.
#[derive(Debug, Serialize, Deserialize)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
    dom: SpaceField,
    cod: SpaceField,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct SpaceField {
    family: Family,
    dim: usize,
}

impl MatrixFile {
    fn load(path: &str) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        let parsed: MatrixFile =
            serde_json::from_str(&text).map_err(|e| format!("invalid matrix file: {e}"))?;
        if parsed.rows * parsed.cols != parsed.data.len() {
            return Err(format!(
                "data length {} does not match rows*cols = {}",
                parsed.data.len(),
                parsed.rows * parsed.cols
            ));
        }
        if parsed.dom.dim == 0 || parsed.cod.dim == 0 {
            return Err("space dimensions must be positive".into());
        }
        Ok(parsed)
    }

    fn operator(&self) -> Result<OperatorMatrix<f64>, String> {
        let dom = SpaceDescriptor::new(self.dom.family, self.dom.dim);
        let cod = SpaceDescriptor::new(self.cod.family, self.cod.dim);
        if self.rows != cod.dim || self.cols != dom.dim {
            return Err(format!(
                "matrix is {}x{} but the spaces need {}x{}",
                self.rows, self.cols, cod.dim, dom.dim
            ));
        }
        Ok(OperatorMatrix::new(
            Mat::from_vec(self.rows, self.cols, self.data.clone()),
            dom,
            cod,
        ))
    }

    fn lorentz_map(&self) -> Result<ConeMap<f64>, String> {
        if self.dom.family != Family::L2 || self.cod.family != Family::L2 {
            return Err("Lorentz maps use l2 space descriptors".into());
        }
        let (n, m) = (self.dom.dim, self.cod.dim);
        if self.rows != m + 1 || self.cols != n + 1 {
            return Err(format!(
                "cone map must be {}x{} for Lorentz({n}) -> Lorentz({m})",
                m + 1,
                n + 1
            ));
        }
        Ok(ConeMap::new(
            Mat::from_vec(self.rows, self.cols, self.data.clone()),
            ConeDescriptor::Lorentz(n),
            ConeDescriptor::Lorentz(m),
        ))
    }

    fn echo(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix file serializes")
    }
}

fn default_seed(explicit: Option<u64>) -> u64 {
    explicit
        .or_else(|| std::env::var("CONEKIT_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(0)
}

fn error_exit(e: &Error) -> ExitCode {
    let code = match e {
        Error::DimensionMismatch(_) => 2,
        Error::Unsupported(_) | Error::DimensionTooLarge(_) => 3,
        Error::Solver(_) => 4,
        Error::NotInterior(_) | Error::NotPositive | Error::NotAutomorphism(_) => 5,
        Error::NoConvergence(_) => 6,
        Error::DegenerateIntersection | Error::InvalidW => 2,
    };
    eprintln!("error: {e}");
    ExitCode::from(code)
}

fn norm_anchor(kind: NormKind) -> &'static str {
    match kind {
        NormKind::Op => "operator norm (positivity threshold of the central map)",
        NormKind::Hs => "Hilbert-Schmidt norm (max-entanglement annihilation threshold)",
        NormKind::Nuc => "nuclear norm (entanglement-breaking threshold)",
        NormKind::Pi2 => "2-summing norm (Lorentz-annihilation threshold into Lorentz cones)",
        NormKind::Gamma2 => "Hilbert-factorization norm gamma2 (Lorentz factorization threshold)",
        NormKind::Gamma2Star => "2-dominated norm gamma2* (Lorentz entanglement-breaking threshold)",
    }
}

fn class_anchor(class: conekit::classify::MapClass) -> &'static str {
    use conekit::classify::MapClass::*;
    match class {
        Positive => "positive iff op(u) <= lambda",
        Eb => "entanglement breaking iff nuc(u) <= lambda",
        LorFact => "factors through a Lorentz cone iff gamma2(u) <= lambda",
        LorEb => "breaks Lorentz entanglement iff gamma2*(u) <= lambda",
        LorEaIntoLorentz => "annihilates Lorentzian entanglement into a Lorentz cone iff pi2(u) <= lambda",
        MaxEa => "annihilates max entanglement between Lorentz cones iff hs(u) <= lambda",
    }
}

fn suite_anchor(name: &str) -> &'static str {
    if name.starts_with("peres") {
        "PPT entangled state pipeline; trace witness Tr[BTA] < 0"
    } else if name.starts_with("nonconvexity") {
        "superadditive annihilation threshold alpha off the square cone"
    } else if name.starts_with("nonassoc") {
        "bracketing thresholds 1 vs sqrt(n) for the triple tensor"
    } else if name.starts_with("square_cone") {
        "2-summing property of the square: pi2 = op norm"
    } else {
        "Choi positivity of compositions through gamma2*-bounded central maps"
    }
}

fn run() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Norm { kind, input, tol } => {
            let file = match MatrixFile::load(&input) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let op = match file.operator() {
                Ok(op) => op,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let computed = match kind {
                NormKind::Op => conekit::spaces::op_norm(&op),
                NormKind::Hs => conekit::idealnorms::hs(&op),
                NormKind::Nuc => conekit::idealnorms::nuclear(&op),
                NormKind::Pi2 => conekit::idealnorms::pi2(&op),
                NormKind::Gamma2 => conekit::idealnorms::gamma2(&op),
                NormKind::Gamma2Star => conekit::idealnorms::gamma2_star(&op),
            };
            let value = match computed {
                Ok(v) => v,
                Err(e) => return error_exit(&e),
            };
            let report = ReportFile {
                command: format!("norm --kind {kind:?}").to_lowercase(),
                inputs: file.echo(),
                results: vec![ResultEntry {
                    label: format!("{kind:?}").to_lowercase(),
                    value,
                    threshold: None,
                    tolerance: tol,
                    pass: true,
                    paper_anchor: norm_anchor(kind).into(),
                }],
                seed: 0,
                version: VERSION.into(),
            };
            println!("{}", report.to_json());
            ExitCode::SUCCESS
        }
        Cmd::Classify { input, lambda, trials, seed, tol } => {
            let file = match MatrixFile::load(&input) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let lambda = match lambda.or(file.lambda) {
                Some(l) => l,
                None => {
                    eprintln!("error: --lambda or a \"lambda\" field is required");
                    return ExitCode::from(2);
                }
            };
            let op = match file.operator() {
                Ok(op) => op,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let central = CentralMap::new(lambda, op);
            let seed = default_seed(seed);
            let classification = classify_central(&central, tol);
            let mut results: Vec<ResultEntry> = classification
                .entries
                .iter()
                .map(|e| ResultEntry {
                    label: format!("{:?}", e.class).to_lowercase(),
                    value: e.certifying_value.unwrap_or(f64::NAN),
                    threshold: Some(e.threshold),
                    tolerance: e.tolerance,
                    pass: e.verdict == Verdict::True,
                    paper_anchor: match e.verdict {
                        Verdict::Unsupported => "unsupported space pair for this class",
                        _ => class_anchor(e.class),
                    }
                    .into(),
                })
                .collect();
            if trials > 0 {
                match lor_eb_falsify(&central.cone_map(), trials, seed) {
                    Ok(witness) => results.push(ResultEntry {
                        label: "lor_eb_falsifier".into(),
                        value: witness.as_ref().map(|w| w.trial as f64).unwrap_or(-1.0),
                        threshold: None,
                        tolerance: tol,
                        pass: witness.is_none(),
                        paper_anchor:
                            "one-sided falsifier: a witness disproves LorEB, absence proves nothing"
                                .into(),
                    }),
                    Err(e) => return error_exit(&e),
                }
            }
            let report = ReportFile {
                command: "classify".into(),
                inputs: file.echo(),
                results,
                seed,
                version: VERSION.into(),
            };
            println!("{}", report.to_json());
            ExitCode::SUCCESS
        }
        Cmd::Sinkhorn { input, tol, max_iter } => {
            let file = match MatrixFile::load(&input) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let map = match file.lorentz_map() {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let form = match sinkhorn_normal_form(&map, tol, max_iter) {
                Ok(f) => f,
                Err(e) => return error_exit(&e),
            };
            #[derive(Serialize)]
            struct FormOut {
                a: Vec<f64>,
                b: Vec<f64>,
                v: Vec<f64>,
                residual: f64,
            }
            let out = FormOut {
                a: form.a.data().to_vec(),
                b: form.b.data().to_vec(),
                v: form.v.clone(),
                residual: form.residual,
            };
            let report = ReportFile {
                command: "sinkhorn".into(),
                inputs: serde_json::json!({
                    "matrix": file.echo(),
                    "normal_form": serde_json::to_value(&out).unwrap(),
                }),
                results: vec![ResultEntry {
                    label: "residual".into(),
                    value: form.residual,
                    threshold: Some(tol),
                    tolerance: tol,
                    pass: true,
                    paper_anchor: "normal form B P A = 1 (+) diag(v) with |v_i| <= 1".into(),
                }],
                seed: 0,
                version: VERSION.into(),
            };
            println!("{}", report.to_json());
            ExitCode::SUCCESS
        }
        Cmd::Reproduce { which, seed } => {
            let seed = default_seed(seed);
            let suites: Result<Vec<ReproReport>, Error> = match which {
                Suite::Peres => repro::peres_pipeline(seed).map(|r| vec![r]),
                Suite::Nonconvexity => repro::nonconvexity_check().map(|r| vec![r]),
                Suite::Nonassoc => (2..=4).map(repro::nonassociativity_check).collect(),
                Suite::SquareCone => repro::square_cone_check(500, seed).map(|r| vec![r]),
                Suite::PsdFactorization => {
                    repro::psd_factorization_check(200, seed).map(|r| vec![r])
                }
                Suite::All => repro::run_all(seed),
            };
            let suites = match suites {
                Ok(s) => s,
                Err(e) => return error_exit(&e),
            };
            let all_pass = suites.iter().all(|r| r.overall);
            let results: Vec<ResultEntry> = suites
                .iter()
                .flat_map(|r| repro_to_entries(r, suite_anchor(&r.name)))
                .collect();
            let report = ReportFile {
                command: format!("reproduce --which {which:?}").to_lowercase(),
                inputs: serde_json::json!({ "suites": suites.iter().map(|r| r.name.clone()).collect::<Vec<_>>() }),
                results,
                seed,
                version: VERSION.into(),
            };
            println!("{}", report.to_json());
            for r in &suites {
                eprintln!("suite {}: {}", r.name, if r.overall { "ok" } else { "FAILED" });
            }
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    run()
}
