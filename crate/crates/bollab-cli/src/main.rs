//! Command-line front end: verify user tensors, classify, build envelopes
//! and loops, and run the catalog-wide regression report.
//!
//! Exit codes: 0 on success/pass, 1 on verification failure, 2 on usage or
//! I/O errors. Failure paths print a JSON error object to stdout and a human
//! line to stderr.

use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bollab::catalog::{self, Kind, Payload};
use bollab::classify::{
    classify_lts3, isomorphic_bol, normalize_lts2, BetaReading, IsotopyWitness, Verdict,
};
use bollab::envelope::{canonical_envelope, standard_embedding, EnvelopePairJson};
use bollab::linalg::QMat;
use bollab::loops::{check_left_bol, check_power_assoc, tangent_tensors};
use bollab::report::{render_text, run_report, ReportOptions};
use bollab::sample;
use bollab::scalar::Scalar;
use bollab::structures::{
    verify_bol, verify_lie, verify_lts, BolAlgebra, LieAlgebra, LieTripleSystem, TensorJson,
    ValidityReport,
};

#[derive(Parser)]
#[command(
    name = "bollab",
    about = "Exact verification, classification, and loop validation for \
             3-dimensional Bol algebras and Lie triple systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; defaults to text on a terminal, json when piped.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Lie,
    Lts,
    Bol,
}

#[derive(Args)]
struct NumericOpts {
    /// Sample count for stochastic identity checks.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Sampling radius around the origin.
    #[arg(long, default_value_t = 0.1)]
    radius: f64,
    /// Residual tolerance.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// RNG seed; identical seeds reproduce identical output bytes.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the defining identities of a tensor file or catalog entry.
    Verify {
        /// Path to a structure-constant JSON file, or a catalog id.
        input: String,
        /// Force the verifier instead of inferring from the tensors present.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Classify a Lie triple system (dimension 3, or 2 via the beta form).
    Classify {
        input: String,
        /// Use the alternative printed reading of the 2-dimensional formula.
        #[arg(long)]
        as_printed_beta: bool,
    },
    /// Build the standard enveloping pair of a Lie triple system.
    Envelope {
        input: String,
        /// Quotient by the maximal ideal inside h afterwards.
        #[arg(long)]
        canonical: bool,
    },
    /// Run the left Bol and power-associativity checks on a catalog loop.
    LoopCheck {
        id: String,
        #[command(flatten)]
        numeric: NumericOpts,
    },
    /// Extract tangent tensors of a catalog loop by jets and compare with
    /// its generating Bol algebra.
    Tangent {
        id: String,
        /// Differencing step.
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Comparison tolerance.
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
    },
    /// Isomorphism verdict for two Bol algebra entries, or an isotopy
    /// witness check when --witness is given.
    Isotopy {
        id1: String,
        id2: String,
        /// JSON file with {"phi": [[...]], "xi": [...]} over rationals.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// List or show catalog entries; optionally export the JSON fixtures.
    Catalog {
        /// Show one entry in full.
        #[arg(long)]
        id: Option<String>,
        /// Filter by kind (lts3, lts2, bol-algebra, envelope-pair, loop-law, right-alt).
        #[arg(long)]
        kind: Option<String>,
        /// Filter by id prefix, e.g. BOL/III.
        #[arg(long)]
        prefix: Option<String>,
        /// Write one JSON fixture per entry into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run the full catalog regression report.
    Report {
        #[command(flatten)]
        numeric: NumericOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            Format::Text
        } else {
            Format::Json
        }
    });
    match run(cli.command, format) {
        Ok(code) => code,
        Err(err) => {
            let obj = json!({ "error": err });
            println!("{obj}");
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Resolve an input to a tensor: a readable file path first, then the
/// fixture directory named by BOLLAB_FIXTURES, then the embedded catalog.
fn load_tensor(input: &str) -> Result<TensorJson, String> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        return parse_tensor_json(&text, input);
    }
    if let Ok(dir) = std::env::var("BOLLAB_FIXTURES") {
        let p = Path::new(&dir).join(catalog::fixture_file_name(input));
        if p.is_file() {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            return parse_tensor_json(&text, input);
        }
    }
    let entry = catalog::catalog_get(input).map_err(|e| e.to_string())?;
    match &entry.payload {
        Payload::Lts3(m) | Payload::Lts2(m) => Ok(TensorJson::from_lts(m)),
        Payload::Bol { algebra, .. } => Ok(TensorJson::from_bol(algebra)),
        Payload::Loop { tangent, .. } => Ok(TensorJson::from_bol(tangent)),
        Payload::Pair(p) => Ok(TensorJson::from_lie(&p.algebra)),
        Payload::RightAlt(_) => {
            Err(format!("{input} is a right-alternative table; no antisymmetric tensor view"))
        }
    }
}

/// Parse tensor JSON, also accepting full fixture files (with a `tensor`
/// field) and reporting line/column on malformed input.
fn parse_tensor_json(text: &str, origin: &str) -> Result<TensorJson, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        format!("malformed JSON in {origin} at line {}, column {}: {e}", e.line(), e.column())
    })?;
    let candidate = if value.get("tensor").is_some() {
        value.get("tensor").cloned().unwrap()
    } else {
        value
    };
    serde_json::from_value(candidate)
        .map_err(|e| format!("invalid structure-constant schema in {origin}: {e}"))
}

fn infer_kind(t: &TensorJson, forced: Option<KindArg>) -> KindArg {
    if let Some(k) = forced {
        return k;
    }
    if let Some(k) = &t.kind {
        return match k.as_str() {
            "lie" => KindArg::Lie,
            "lts" => KindArg::Lts,
            _ => KindArg::Bol,
        };
    }
    match (t.bilinear.is_empty(), t.trilinear.is_empty()) {
        (false, true) => KindArg::Lie,
        (true, false) => KindArg::Lts,
        _ => KindArg::Bol,
    }
}

fn emit_validity(report: &ValidityReport, format: Format) -> ExitCode {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
        Format::Text => {
            if report.is_valid() {
                println!("valid: {} identity instances checked", report.checked);
            } else {
                println!(
                    "INVALID: {} violations out of {} checked",
                    report.violations.len(),
                    report.checked
                );
                for v in report.violations.iter().take(10) {
                    println!("  {} at {:?}: defect {:?}", v.identity, v.indices, v.defect);
                }
                if report.violations.len() > 10 {
                    println!("  ... {} more", report.violations.len() - 10);
                }
            }
        }
    }
    if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: Command, format: Format) -> Result<ExitCode, String> {
    match cmd {
        Command::Verify { input, kind } => {
            let t = load_tensor(&input)?;
            let kind = infer_kind(&t, kind);
            let report = match kind {
                KindArg::Lie => {
                    let bracket = t.bilinear_tensor().map_err(|e| e.to_string())?;
                    verify_lie(&LieAlgebra::with_label(bracket, input.clone()))
                }
                KindArg::Lts => {
                    let tri = t.trilinear_tensor().map_err(|e| e.to_string())?;
                    verify_lts(&LieTripleSystem::with_label(tri, input.clone()))
                }
                KindArg::Bol => {
                    let dot = t.bilinear_tensor().map_err(|e| e.to_string())?;
                    let tri = t.trilinear_tensor().map_err(|e| e.to_string())?;
                    verify_bol(&BolAlgebra::with_label(dot, tri, input.clone()))
                }
            };
            Ok(emit_validity(&report, format))
        }
        Command::Classify { input, as_printed_beta } => {
            let t = load_tensor(&input)?;
            let tri = t.trilinear_tensor().map_err(|e| e.to_string())?;
            let m = LieTripleSystem::with_label(tri, input.clone());
            if m.dim == 2 {
                let reading =
                    if as_printed_beta { BetaReading::AsPrinted } else { BetaReading::default() };
                let form = normalize_lts2(&m, reading).map_err(|e| e.to_string())?;
                match format {
                    Format::Json => println!(
                        "{}",
                        json!({
                            "case": format!("{:?}", form.case),
                            "beta_diag": form.beta_diag,
                        })
                    ),
                    Format::Text => println!("{:?} with beta diag {:?}", form.case, form.beta_diag),
                }
                return Ok(ExitCode::SUCCESS);
            }
            let c = classify_lts3(&m).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "type": c.tag.to_string(),
                        "exact_normalizer": c.normalizer.is_some(),
                    })
                ),
                Format::Text => println!(
                    "{}{}",
                    c.tag,
                    if c.normalizer.is_some() { " (exact normalizer found)" } else { "" }
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Envelope { input, canonical } => {
            let t = load_tensor(&input)?;
            let tri = t.trilinear_tensor().map_err(|e| e.to_string())?;
            let m = LieTripleSystem::with_label(tri, input.clone());
            let mut pair = standard_embedding(&m).map_err(|e| e.to_string())?;
            if canonical {
                pair = canonical_envelope(&pair);
            }
            let out = EnvelopePairJson::from_pair(&pair);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
                Format::Text => {
                    println!(
                        "envelope: dim {} = {} tangent + {} subalgebra; generates: {}",
                        pair.dim(),
                        pair.tangent.dim(),
                        pair.subalgebra.dim(),
                        pair.tangent_generates()
                    );
                    for (k, i, j, v) in pair.algebra.bracket.entries() {
                        println!("  [e{}, e{}] ~ {} e{}", i + 1, j + 1, v, k + 1);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LoopCheck { id, numeric } => {
            validate_numeric(&numeric)?;
            let entry = catalog::catalog_get(&id).map_err(|e| e.to_string())?;
            let l = entry
                .to_loop()
                .ok_or_else(|| format!("{id} is not a loop-law entry"))?;
            let mut rng = sample::sampler(numeric.seed);
            let bol = check_left_bol(&l, numeric.samples, numeric.radius, numeric.tol, &mut rng);
            let mut rng = sample::sampler(numeric.seed.wrapping_add(1));
            let power = check_power_assoc(
                &l,
                numeric.samples.min(100),
                numeric.radius,
                3,
                numeric.tol,
                &mut rng,
            );
            let pass = bol.pass && power.pass;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({ "id": id, "left_bol": bol, "power_assoc": power, "pass": pass })
                ),
                Format::Text => {
                    println!(
                        "{id}: left Bol residual {:.3e} over {} samples ({} skipped) -> {}",
                        bol.max_residual,
                        bol.samples,
                        bol.skipped,
                        if bol.pass { "pass" } else { "FAIL" }
                    );
                    println!(
                        "{id}: power associativity residual {:.3e} -> {}",
                        power.max_residual,
                        if power.pass { "pass" } else { "FAIL" }
                    );
                }
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Tangent { id, step, tol } => {
            let entry = catalog::catalog_get(&id).map_err(|e| e.to_string())?;
            let l = entry
                .to_loop()
                .ok_or_else(|| format!("{id} is not a loop-law entry"))?;
            let tangent = match &entry.payload {
                Payload::Loop { tangent, .. } => tangent,
                _ => unreachable!(),
            };
            let t = tangent_tensors(&l, step).map_err(|e| e.to_string())?;
            let d = bollab::loops::tangent_distance(&t, tangent);
            let pass = d <= tol;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({ "id": id, "max_deviation": d, "tol": tol, "pass": pass })
                ),
                Format::Text => println!(
                    "{id}: tangent tensors deviate by {d:.3e} from the generating algebra \
                     (tol {tol:.1e}) -> {}",
                    if pass { "pass" } else { "FAIL" }
                ),
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Isotopy { id1, id2, witness } => {
            let b1 = entry_bol(&id1)?;
            let b2 = entry_bol(&id2)?;
            if let Some(wpath) = witness {
                let text = std::fs::read_to_string(&wpath)
                    .map_err(|e| format!("cannot read {}: {e}", wpath.display()))?;
                let w: WitnessJson = serde_json::from_str(&text)
                    .map_err(|e| format!("invalid witness JSON: {e}"))?;
                let p1 = entry_pair(&id1)?;
                let p2 = entry_pair(&id2)?;
                let witness = IsotopyWitness { phi: w.phi_matrix()?, xi: w.xi.clone() };
                let ok = bollab::classify::isotopy_witness_check(&p1, &p2, &witness)
                    .map_err(|e| e.to_string())?;
                match format {
                    Format::Json => {
                        println!("{}", json!({ "witness_accepted": ok }))
                    }
                    Format::Text => println!(
                        "witness {}",
                        if ok { "accepted" } else { "REJECTED" }
                    ),
                }
                return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
            }
            let verdict = isomorphic_bol(&b1, &b2).map_err(|e| e.to_string())?;
            let (tag, detail) = match &verdict {
                Verdict::Witness(p) => ("isomorphic", format!("witness rows {:?}", matrix_rows(p))),
                Verdict::Distinguished(_) => {
                    ("distinguished", "invariant vectors differ".to_string())
                }
                Verdict::Inconclusive => ("inconclusive", "bounded search found nothing".into()),
            };
            match format {
                Format::Json => println!("{}", json!({ "verdict": tag, "detail": detail })),
                Format::Text => println!("{tag}: {detail}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { id, kind, prefix, export } => {
            if let Some(dir) = export {
                catalog::export_fixtures(&dir).map_err(|e| format!("export failed: {e}"))?;
                match format {
                    Format::Json => println!(
                        "{}",
                        json!({ "exported": catalog::catalog().len(), "dir": dir })
                    ),
                    Format::Text => println!(
                        "exported {} fixtures to {}",
                        catalog::catalog().len(),
                        dir.display()
                    ),
                }
                return Ok(ExitCode::SUCCESS);
            }
            if let Some(id) = id {
                let entry = catalog::catalog_get(&id).map_err(|e| e.to_string())?;
                let out = catalog::entry_to_json(entry);
                match format {
                    Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
                    Format::Text => {
                        println!("{} ({:?})", entry.id, entry.kind);
                        println!(
                            "  source: {} -- {:?}",
                            entry.provenance.section, entry.provenance.anchor
                        );
                        for (k, v) in &entry.parameters {
                            println!("  {k} = {v}");
                        }
                        for d in &entry.defects {
                            println!("  defect: {d}");
                        }
                        for r in &entry.cross_refs {
                            println!("  cross-ref ({}): {} -> {}", r.checker, r.claim, r.target);
                        }
                    }
                }
                return Ok(ExitCode::SUCCESS);
            }
            let kind = match kind.as_deref() {
                None => None,
                Some("lts3") => Some(Kind::Lts3),
                Some("lts2") => Some(Kind::Lts2),
                Some("bol-algebra") => Some(Kind::BolAlgebra),
                Some("envelope-pair") => Some(Kind::EnvelopePair),
                Some("loop-law") => Some(Kind::LoopLaw),
                Some("right-alt") => Some(Kind::RightAlt),
                Some(other) => return Err(format!("unknown kind filter {other:?}")),
            };
            let ids = catalog::catalog_list(kind, prefix.as_deref());
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&ids).unwrap()),
                Format::Text => {
                    for i in &ids {
                        println!("{i}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { numeric } => {
            validate_numeric(&numeric)?;
            let opts = ReportOptions {
                seed: numeric.seed,
                samples: numeric.samples,
                radius: numeric.radius,
                tol: numeric.tol,
            };
            let report = run_report(&opts);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Text => print!("{}", render_text(&report)),
            }
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn validate_numeric(n: &NumericOpts) -> Result<(), String> {
    if n.samples == 0 {
        return Err("samples must be positive".into());
    }
    if !(n.radius > 0.0 && n.radius <= 1.0) {
        return Err("radius must lie in (0, 1]".into());
    }
    if !(n.tol > 0.0) {
        return Err("tol must be positive".into());
    }
    Ok(())
}

fn entry_bol(id: &str) -> Result<BolAlgebra, String> {
    let entry = catalog::catalog_get(id).map_err(|e| e.to_string())?;
    match &entry.payload {
        Payload::Bol { algebra, .. } => Ok(algebra.clone()),
        Payload::Loop { tangent, .. } => Ok(tangent.clone()),
        Payload::RightAlt(r) => bollab::loops::bol_from_right_alt(r).map_err(|e| e.to_string()),
        _ => Err(format!("{id} does not carry a Bol algebra")),
    }
}

fn entry_pair(id: &str) -> Result<bollab::envelope::EnvelopePair, String> {
    let entry = catalog::catalog_get(id).map_err(|e| e.to_string())?;
    match &entry.payload {
        Payload::Bol { pair: Some(p), .. } | Payload::Loop { pair: Some(p), .. } => Ok(p.clone()),
        Payload::Pair(p) => Ok(p.clone()),
        _ => Err(format!("{id} has no envelope pair")),
    }
}

#[derive(serde::Deserialize)]
struct WitnessJson {
    phi: Vec<Vec<Scalar>>,
    xi: Vec<Scalar>,
}

impl WitnessJson {
    fn phi_matrix(&self) -> Result<QMat, String> {
        if self.phi.is_empty() {
            return Err("empty phi".into());
        }
        Ok(QMat::from_rows(self.phi.clone()))
    }
}

fn matrix_rows(p: &QMat) -> Vec<Vec<String>> {
    (0..p.rows()).map(|i| p.row(i).iter().map(|x| x.to_string()).collect()).collect()
}
