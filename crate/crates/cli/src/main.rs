//! Command-line surface: build/validate POVMs, evaluate entropies, run
//! optimizations and certificates, reproduce the reference tables and
//! estimate Haar averages.

mod formats;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use povmlab_core::bloch::{povm_bloch_vectors, pure_state_from_bloch, BlochVector};
use povmlab_core::catalog::{
    builtin_sic, cube_vertices, dodecahedron_vertices, hs_povm,
    icosahedron_vertices, icosidodecahedron_vertices, cuboctahedron_vertices,
    octahedron_vertices, sic_from_fiducial, tetrahedron_vertices, BuiltinSic, PolyhedronName,
    PolyhedronSpec, WeylHeisenberg,
};
use povmlab_core::entropy::{
    alpha_entropy, jones_average, shannon_entropy, sic_min_relative_entropy, AlphaKind,
};
use povmlab_core::optimize::{
    landscape_scan, optimize, verify_maximizer_set, Objective, OptConfig, Sense,
};
use povmlab_core::quantum::{Povm, PureState};
use povmlab_core::random::average_relative_entropy;
use povmlab_core::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use formats::{FiducialFile, PovmFile, RunRecord, StateFile};

#[derive(Parser)]
#[command(name = "povmlab", version, about = "finite quantum measurements, entropy landscapes and optimality certificates")]
struct Cli {
    /// Emit a single machine-readable RunRecord JSON object
    #[arg(long, global = true)]
    json: bool,
    /// RNG seed; seeded runs are bit-reproducible (timestamps omitted)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a catalog POVM or a Weyl-Heisenberg SIC from a fiducial file
    Build {
        #[arg(long, conflicts_with = "fiducial")]
        povm: Option<String>,
        #[arg(long)]
        fiducial: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Min/max relative entropy for every qubit HS-POVM type
    TableHs {
        #[arg(long, default_value_t = 256)]
        starts: usize,
    },
    /// Closed-form minimum, Haar average and optimized maximum for SIC-POVMs
    TableSic {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        /// d=8 fiducial file (required for the Hoggar maximum column)
        #[arg(long)]
        fiducial: Option<PathBuf>,
        #[arg(long, default_value_t = 128)]
        starts: usize,
    },
    /// Monte Carlo average of the relative entropy over Haar-random states
    Average {
        #[arg(long)]
        povm: String,
        #[arg(long)]
        samples: usize,
    },
    /// Certify a candidate orbit as the global entropy maximizer
    Certify {
        #[arg(long)]
        povm: String,
        /// Orbit name (tetrahedron, octahedron, cube, icosahedron,
        /// dodecahedron, twin-tetrahedron, ...) or "self" for the POVM's own
        /// Bloch configuration
        #[arg(long)]
        candidate: String,
    },
    /// Search for extremal pure states of the outcome entropy
    Optimize {
        #[arg(long)]
        povm: String,
        #[arg(long, default_value = "max", value_parser = ["max", "min"])]
        sense: String,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value = "tsallis", value_parser = ["tsallis", "renyi"])]
        kind: String,
        #[arg(long, default_value_t = 64)]
        starts: usize,
    },
    /// Entropy of the outcome distribution of a state under a POVM file
    Entropy {
        #[arg(long)]
        povm_file: PathBuf,
        #[arg(long)]
        state_file: PathBuf,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value = "tsallis", value_parser = ["tsallis", "renyi"])]
        kind: String,
    },
    /// Entropy landscape of a qubit POVM as CSV (theta,phi,H,Hrel)
    Landscape {
        #[arg(long)]
        povm: String,
        #[arg(long, default_value_t = 1000)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    /// input / structural problem -> exit 2
    Input(String),
    /// numeric verdict failure -> exit 1
    Verdict(String),
}

impl From<povmlab_core::Error> for CliError {
    fn from(e: povmlab_core::Error) -> Self {
        match e {
            povmlab_core::Error::CertificateFailed(msg) => CliError::Verdict(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn tolerances() -> Tolerances {
    let mut tol = Tolerances::default();
    if let Ok(v) = std::env::var("POVMLAB_TOL") {
        if let Ok(x) = v.parse::<f64>() {
            tol.structural = x;
        }
    }
    tol
}

fn load_fiducial(path: &Path) -> Result<Povm, CliError> {
    let file: FiducialFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    let group = match file.group.as_deref() {
        Some("cyclic") => WeylHeisenberg::Cyclic,
        Some("three-qubit") => WeylHeisenberg::ThreeQubit,
        Some(other) => {
            return Err(CliError::Input(format!("unknown covariance group {other:?}")))
        }
        None if file.dim == 8 => WeylHeisenberg::ThreeQubit,
        None => WeylHeisenberg::Cyclic,
    };
    Ok(sic_from_fiducial(&file.into_record()?, group)?)
}

/// Resolve a POVM by catalog name or JSON file path.
fn resolve_povm(name: &str) -> Result<Povm, CliError> {
    let by_name = match name {
        "tetrahedron" => Some(PolyhedronName::Tetrahedron),
        "cube" => Some(PolyhedronName::Cube),
        "octahedron" => Some(PolyhedronName::Octahedron),
        "icosahedron" => Some(PolyhedronName::Icosahedron),
        "dodecahedron" => Some(PolyhedronName::Dodecahedron),
        "cuboctahedron" => Some(PolyhedronName::Cuboctahedron),
        "icosidodecahedron" => Some(PolyhedronName::Icosidodecahedron),
        "digon" => Some(PolyhedronName::Digon),
        _ => None,
    };
    if let Some(p) = by_name {
        return Ok(hs_povm(&PolyhedronSpec::new(p)?)?);
    }
    if let Some(n) = name.strip_prefix("ngon-") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Input(format!("bad polygon size in {name:?}")))?;
        return Ok(hs_povm(&PolyhedronSpec::new(PolyhedronName::Ngon(n))?)?);
    }
    match name {
        "tetrahedral-sic" | "2-sic" => return Ok(builtin_sic(BuiltinSic::Tetrahedral)?),
        "hesse" | "hesse-sic" => return Ok(builtin_sic(BuiltinSic::Hesse)?),
        _ => {}
    }
    if let Some(t) = name.strip_prefix("generic3:") {
        let t: f64 = t
            .parse()
            .map_err(|_| CliError::Input(format!("bad parameter in {name:?}")))?;
        return Ok(builtin_sic(BuiltinSic::Generic3(t))?);
    }
    let path = Path::new(name);
    if path.exists() {
        if name.ends_with(".json") {
            let text = fs::read_to_string(path)?;
            // fiducial files have a "vector" field, POVM files "effects"
            if text.contains("\"effects\"") {
                let file: PovmFile = serde_json::from_str(&text)?;
                return Ok(file.into_povm()?);
            }
            return load_fiducial(path);
        }
        return Err(CliError::Input(format!("{name}: expected a .json file")));
    }
    Err(CliError::Input(format!("unknown POVM {name:?}")))
}

fn orbit_vertices(name: &str) -> Option<Vec<[f64; 3]>> {
    let vs = match name {
        "tetrahedron" => tetrahedron_vertices(),
        "twin-tetrahedron" => tetrahedron_vertices()
            .iter()
            .map(|v| [-v[0], -v[1], -v[2]])
            .collect(),
        "cube" => cube_vertices(),
        "octahedron" => octahedron_vertices(),
        "icosahedron" => icosahedron_vertices(),
        "dodecahedron" => dodecahedron_vertices(),
        "cuboctahedron" => cuboctahedron_vertices(),
        "icosidodecahedron" => icosidodecahedron_vertices(),
        _ => return None,
    };
    Some(vs)
}

fn bloch_of(vs: &[[f64; 3]]) -> Vec<BlochVector> {
    vs.iter()
        .map(|v| BlochVector::qubit(v[0], v[1], v[2]))
        .collect()
}

fn states_of(vs: &[[f64; 3]]) -> Vec<PureState> {
    vs.iter()
        .map(|v| pure_state_from_bloch(&BlochVector::qubit(v[0], v[1], v[2])).unwrap())
        .collect()
}

/// Name the orbit a set of optimizer states forms, if it is one of the
/// catalog configurations.
fn classify_orbit(states: &[PureState]) -> String {
    for name in [
        "tetrahedron",
        "twin-tetrahedron",
        "octahedron",
        "cube",
        "icosahedron",
        "dodecahedron",
        "cuboctahedron",
        "icosidodecahedron",
    ] {
        let expected = states_of(&orbit_vertices(name).unwrap());
        if verify_maximizer_set(states, &expected, 1.0 - 1e-6).ok {
            return name.replace('-', " ");
        }
    }
    "unidentified".to_string()
}

fn fmt5(x: f64) -> String {
    // clamp numeric dust so 0 never prints as -0.00000
    let x = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{x:.5}")
}

struct Ctx {
    json: bool,
    seed: Option<u64>,
    started: Instant,
}

impl Ctx {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    /// Print either the human-readable lines or one RunRecord.
    fn emit(&self, command: &str, config: Value, outputs: Value, text: &str) {
        if self.json {
            let record = RunRecord {
                command: command.to_string(),
                config,
                version: env!("CARGO_PKG_VERSION"),
                timestamp_unix: if self.seed.is_some() {
                    None
                } else {
                    SystemTime::now()
                        .duration_since(UNIX_EPOCH)
                        .ok()
                        .map(|d| d.as_secs())
                },
                outputs,
                duration_ms: if self.seed.is_some() {
                    None
                } else {
                    Some(self.started.elapsed().as_millis())
                },
            };
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        } else {
            println!("{text}");
        }
    }
}

fn cmd_build(
    ctx: &Ctx,
    povm: Option<String>,
    fiducial: Option<PathBuf>,
    out: &Path,
) -> Result<(), CliError> {
    let povm = match (povm, fiducial) {
        (Some(name), None) => resolve_povm(&name)?,
        (None, Some(path)) => load_fiducial(&path)?,
        _ => return Err(CliError::Input("pass exactly one of --povm / --fiducial".into())),
    };
    let report = povm.validate(&tolerances());
    if !report.accepted() {
        return Err(CliError::Input(format!(
            "constructed POVM fails validation: {report:?}"
        )));
    }
    let file = PovmFile::from_povm(&povm);
    fs::write(out, serde_json::to_string_pretty(&file)?)?;
    ctx.emit(
        "build",
        json!({ "label": povm.label(), "out": out.display().to_string() }),
        json!({
            "dim": povm.dim(),
            "outcomes": povm.outcomes(),
            "identity_residual": report.identity_residual,
            "min_eigenvalue": report.min_eigenvalue,
        }),
        &format!(
            "wrote {} ({} effects, dim {}) to {}",
            povm.label(),
            povm.outcomes(),
            povm.dim(),
            out.display()
        ),
    );
    Ok(())
}

fn cmd_table_hs(ctx: &Ctx, starts: usize) -> Result<(), CliError> {
    let ic = [
        PolyhedronName::Tetrahedron,
        PolyhedronName::Octahedron,
        PolyhedronName::Cube,
        PolyhedronName::Cuboctahedron,
        PolyhedronName::Icosahedron,
        PolyhedronName::Dodecahedron,
        PolyhedronName::Icosidodecahedron,
    ];
    // label, minimal configuration, minimum, maximal configuration, maximum
    let mut rows: Vec<[String; 5]> = Vec::new();

    let digon = hs_povm(&PolyhedronSpec::new(PolyhedronName::Digon)?)?;
    let dmax = optimize(
        &digon,
        &OptConfig { starts, seed: ctx.seed(), ..OptConfig::default() },
    )?;
    let dmin = optimize(
        &digon,
        &OptConfig { sense: Sense::Minimize, starts, seed: ctx.seed(), ..OptConfig::default() },
    )?;
    rows.push([
        "digon".into(),
        "equator".into(),
        fmt5(dmax.relative_entropy),
        "digon".into(),
        fmt5(dmin.relative_entropy),
    ]);
    // analytic n -> infinity limit of the regular polygon series
    rows.push([
        "regular n-gon (n->inf)".into(),
        "digon".into(),
        fmt5(0.0),
        "dual n-gon".into(),
        fmt5(1.0 - core::f64::consts::LN_2),
    ]);
    for name in ic {
        let povm = hs_povm(&PolyhedronSpec::new(name)?)?;
        let max_h = optimize(
            &povm,
            &OptConfig { starts, seed: ctx.seed(), ..OptConfig::default() },
        )?;
        let min_h = optimize(
            &povm,
            &OptConfig { sense: Sense::Minimize, starts, seed: ctx.seed(), ..OptConfig::default() },
        )?;
        let minimal: Vec<PureState> = max_h.optima.iter().map(|o| o.state.clone()).collect();
        let maximal: Vec<PureState> = min_h.optima.iter().map(|o| o.state.clone()).collect();
        rows.push([
            name.label(),
            classify_orbit(&minimal),
            fmt5(max_h.relative_entropy),
            classify_orbit(&maximal),
            fmt5(min_h.relative_entropy),
        ]);
    }
    let average = jones_average(2);

    let mut text = format!(
        "{:<24} {:<18} {:>8}  {:<18} {:>8}\n",
        "POVM configuration", "min configuration", "minimum", "max configuration", "maximum"
    );
    for r in &rows {
        text += &format!("{:<24} {:<18} {:>8}  {:<18} {:>8}\n", r[0], r[1], r[2], r[3], r[4]);
    }
    text += &format!("{:<24} {}", "average relative entropy", fmt5(average));
    ctx.emit(
        "table-hs",
        json!({ "starts": starts, "seed": ctx.seed() }),
        json!({
            "rows": rows.iter().map(|r| json!({
                "povm": r[0], "min_configuration": r[1], "minimum": r[2],
                "max_configuration": r[3], "maximum": r[4],
            })).collect::<Vec<_>>(),
            "average": fmt5(average),
        }),
        &text,
    );
    Ok(())
}

fn cmd_table_sic(
    ctx: &Ctx,
    dims: &[usize],
    fiducial: Option<&Path>,
    starts: usize,
) -> Result<(), CliError> {
    // label, minimum, average, maximal configuration, maximum, bound
    let mut rows: Vec<[String; 6]> = Vec::new();
    for &d in dims {
        let bound = ((2.0 * d as f64) / (d as f64 + 1.0)).ln();
        let min = fmt5(sic_min_relative_entropy(d));
        let avg = fmt5(jones_average(d));
        let sics: Vec<(String, Option<Povm>)> = match d {
            2 => vec![("2".into(), Some(builtin_sic(BuiltinSic::Tetrahedral)?))],
            3 => vec![
                ("3 (generic)".into(), Some(builtin_sic(BuiltinSic::Generic3(0.5))?)),
                ("3 (Hesse)".into(), Some(builtin_sic(BuiltinSic::Hesse)?)),
            ],
            8 => {
                let povm = match fiducial {
                    Some(path) => {
                        let povm = load_fiducial(path)?;
                        if povm.dim() != 8 {
                            return Err(CliError::Input(
                                "d=8 row needs an 8-dimensional fiducial".into(),
                            ));
                        }
                        Some(povm)
                    }
                    None => None,
                };
                vec![("8 (Hoggar)".into(), povm)]
            }
            other => vec![(format!("{other}"), None)],
        };
        for (label, povm) in sics {
            let (max_conf, max) = match povm {
                Some(povm) => {
                    let run = optimize(
                        &povm,
                        &OptConfig {
                            sense: Sense::Minimize,
                            starts,
                            seed: ctx.seed(),
                            ..OptConfig::default()
                        },
                    )?;
                    (
                        format!("{} states", run.optima.len()),
                        fmt5(run.relative_entropy),
                    )
                }
                None => ("?".into(), "?".into()),
            };
            rows.push([label, min.clone(), avg.clone(), max_conf, max, fmt5(bound)]);
        }
    }
    let mut text = format!(
        "{:<12} {:>8} {:>8}  {:<12} {:>8} {:>8}\n",
        "dimension", "minimum", "average", "max config", "maximum", "bound"
    );
    for r in &rows {
        text += &format!(
            "{:<12} {:>8} {:>8}  {:<12} {:>8} {:>8}\n",
            r[0], r[1], r[2], r[3], r[4], r[5]
        );
    }
    text += "bound ln(2d/(d+1)) on the maximum is probably not achievable in general";
    ctx.emit(
        "table-sic",
        json!({ "dims": dims, "starts": starts, "seed": ctx.seed() }),
        json!({
            "rows": rows.iter().map(|r| json!({
                "dimension": r[0], "minimum": r[1], "average": r[2],
                "max_configuration": r[3], "maximum": r[4], "bound": r[5],
            })).collect::<Vec<_>>(),
        }),
        &text,
    );
    Ok(())
}

fn cmd_average(ctx: &Ctx, name: &str, samples: usize) -> Result<(), CliError> {
    let povm = resolve_povm(name)?;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed());
    let mc = average_relative_entropy(&povm, samples, &mut rng)?;
    let exact = jones_average(povm.dim());
    let sigmas = (mc.estimate - exact).abs() / mc.stderr;
    ctx.emit(
        "average",
        json!({ "povm": name, "samples": samples, "seed": ctx.seed() }),
        json!({
            "estimate": mc.estimate,
            "stderr": mc.stderr,
            "jones_average": exact,
            "sigmas_from_jones": sigmas,
        }),
        &format!(
            "estimate {:.5} +- {:.5} over {} samples; Jones average {:.5} ({:.2} sigma)",
            mc.estimate, mc.stderr, samples, exact, sigmas
        ),
    );
    Ok(())
}

fn cmd_certify(ctx: &Ctx, name: &str, candidate: &str) -> Result<(), CliError> {
    let povm = resolve_povm(name)?;
    let cand: Vec<BlochVector> = if candidate == "self" {
        povm_bloch_vectors(&povm)?
    } else if candidate.ends_with(".json") {
        let files: Vec<formats::BlochFile> =
            serde_json::from_str(&fs::read_to_string(candidate)?)?;
        files
            .into_iter()
            .map(|f| BlochVector::new(f.dim, f.coords))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        match orbit_vertices(candidate) {
            Some(vs) => bloch_of(&vs),
            None => return Err(CliError::Input(format!("unknown candidate orbit {candidate:?}"))),
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed());
    let report = povmlab_core::certify::build_certificate(
        &povm,
        &cand,
        None,
        &tolerances(),
        &mut rng,
    )?;
    ctx.emit(
        "certify",
        json!({ "povm": name, "candidate": candidate, "seed": ctx.seed() }),
        formats::certificate_json(&report),
        &format!(
            "certified: max entropy {:.6} (min relative entropy {:.6}) on the {candidate} orbit\n\
             decomposition: {}",
            report.certified_value,
            report.certified_min_relative_entropy,
            match &report.decomposition {
                povmlab_core::certify::Decomposition::Constant { value } =>
                    format!("constant bound {value:.6}"),
                povmlab_core::certify::Decomposition::InvariantFit { invariant, a, b, residual, .. } =>
                    format!("{} fit A={a:.6}, B={b:+.6e}, residual {residual:.2e}", invariant.name()),
            }
        ),
    );
    Ok(())
}

fn parse_objective(alpha: Option<f64>, kind: &str) -> Objective {
    match alpha {
        None => Objective::Entropy,
        Some(alpha) => Objective::AlphaEntropy {
            alpha,
            kind: if kind == "renyi" {
                AlphaKind::Renyi
            } else {
                AlphaKind::Tsallis
            },
        },
    }
}

fn cmd_optimize(
    ctx: &Ctx,
    name: &str,
    sense: &str,
    alpha: Option<f64>,
    kind: &str,
    starts: usize,
) -> Result<(), CliError> {
    let povm = resolve_povm(name)?;
    let config = OptConfig {
        objective: parse_objective(alpha, kind),
        sense: if sense == "min" { Sense::Minimize } else { Sense::Maximize },
        starts,
        seed: ctx.seed(),
        ..OptConfig::default()
    };
    let res = optimize(&povm, &config)?;
    ctx.emit(
        "optimize",
        json!({
            "povm": name, "sense": sense, "alpha": alpha, "kind": kind,
            "starts": starts, "seed": ctx.seed(),
        }),
        formats::opt_result_json(&res),
        &format!(
            "best value {:.10} (entropy {:.10}, relative entropy {:.10})\n\
             {} optimal state(s), {} local runs dropped, {} evaluations",
            res.best_value,
            res.entropy,
            res.relative_entropy,
            res.optima.len(),
            res.dropped,
            res.evaluations
        ),
    );
    Ok(())
}

fn cmd_entropy(
    ctx: &Ctx,
    povm_file: &Path,
    state_file: &Path,
    alpha: Option<f64>,
    kind: &str,
) -> Result<(), CliError> {
    let povm_json: PovmFile = serde_json::from_str(&fs::read_to_string(povm_file)?)?;
    let povm = povm_json.into_povm()?;
    let report = povm.validate(&tolerances());
    if !report.accepted() {
        return Err(CliError::Input(format!("POVM file fails validation: {report:?}")));
    }
    let state_json: StateFile = serde_json::from_str(&fs::read_to_string(state_file)?)?;
    let psi = state_json.into_state()?;
    let p = povm.outcome_probabilities_pure(&psi)?;
    let value = match parse_objective(alpha, kind) {
        Objective::Entropy => shannon_entropy(&p)?,
        Objective::AlphaEntropy { alpha, kind } => alpha_entropy(&p, alpha, kind)?,
    };
    let shannon = shannon_entropy(&p)?;
    let relative = (povm.outcomes() as f64).ln() - shannon;
    ctx.emit(
        "entropy",
        json!({
            "povm_file": povm_file.display().to_string(),
            "state_file": state_file.display().to_string(),
            "alpha": alpha, "kind": kind,
        }),
        json!({
            "value": value,
            "shannon_entropy": shannon,
            "relative_entropy": relative,
            "probabilities": p,
        }),
        &format!(
            "value {value:.10} (Shannon entropy {shannon:.10}, relative entropy {relative:.10})"
        ),
    );
    Ok(())
}

fn cmd_landscape(
    ctx: &Ctx,
    name: &str,
    points: usize,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let povm = resolve_povm(name)?;
    let rows = landscape_scan(&povm, points)?;
    let mut csv = String::from("theta,phi,H,Hrel\n");
    for r in &rows {
        csv += &format!(
            "{:.12},{:.12},{:.12},{:.12}\n",
            r.theta, r.phi, r.entropy, r.relative_entropy
        );
    }
    match out {
        Some(path) => {
            fs::write(path, &csv)?;
            ctx.emit(
                "landscape",
                json!({ "povm": name, "points": points, "out": path.display().to_string() }),
                json!({ "rows": rows.len() }),
                &format!("wrote {} rows to {}", rows.len(), path.display()),
            );
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        started: Instant::now(),
    };
    match cli.cmd {
        Cmd::Build { povm, fiducial, out } => cmd_build(&ctx, povm, fiducial, &out),
        Cmd::TableHs { starts } => cmd_table_hs(&ctx, starts),
        Cmd::TableSic { dims, fiducial, starts } => {
            cmd_table_sic(&ctx, &dims, fiducial.as_deref(), starts)
        }
        Cmd::Average { povm, samples } => cmd_average(&ctx, &povm, samples),
        Cmd::Certify { povm, candidate } => cmd_certify(&ctx, &povm, &candidate),
        Cmd::Optimize { povm, sense, alpha, kind, starts } => {
            cmd_optimize(&ctx, &povm, &sense, alpha, &kind, starts)
        }
        Cmd::Entropy { povm_file, state_file, alpha, kind } => {
            cmd_entropy(&ctx, &povm_file, &state_file, alpha, &kind)
        }
        Cmd::Landscape { povm, points, out } => {
            cmd_landscape(&ctx, &povm, points, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verdict(msg)) => {
            eprintln!("verdict: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
