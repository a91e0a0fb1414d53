//! `walg` command-line front end: orbit combinatorics, the abelianized
//! algebra and its central series, desk-scale modular reports, and the
//! regression suite. Every report is emitted as deterministic JSON (or
//! plain text with `--text`); exit code 0 = success, 2 = invalid input,
//! 3 = a mathematical check failed.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use walg::abelian::{
    build_ab_algebra, center_image_proper, z_series, AbError, Convention,
};
use walg::modular::{
    build_gl3, build_sl2, build_sl3, qeta_report, theorem_d_check, ModularError,
    ModularReport, NilpotentKind, RestrictedLieAlgebra,
};
use walg::orbits::{
    induce, krull_dim_ab, orbit_profile, rigid_finiteness_flag, sheets_containing, is_rigid,
    LeviDescriptor, Partition, SpectrumKind,
};
use walg::poly::PolyJson;
use walg::suite::{run_suite, SuiteConfig};

const EXIT_INVALID_INPUT: i32 = 2;
const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser)]
#[command(name = "walg", version, about = "Abelianized W-algebras of type A: orbits, central series, modular checks")]
struct Cli {
    /// Emit human-readable text instead of JSON
    #[arg(long, global = true)]
    text: bool,
    /// Emit JSON (the default)
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    Printed,
    Worked,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Printed => Convention::Printed,
            ConventionArg::Worked => Convention::WorkedExample,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgebraArg {
    Sl2,
    Gl3,
    Sl3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckArg {
    Qeta,
    #[value(name = "theoremD", alias = "theoremd")]
    TheoremD,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NilpotentArg {
    Regular,
    Minimal,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension data of the nilpotent orbit with the given Jordan type
    Orbit {
        /// decreasing comma-separated parts, e.g. 3,2,2
        #[arg(long)]
        partition: String,
    },
    /// Induce a tuple of nilpotent orbits from a Levi subalgebra
    Induce {
        /// Levi block sizes, comma-separated
        #[arg(long)]
        levi: String,
        /// one partition per block, semicolon-separated, e.g. "1,1;2"
        #[arg(long)]
        orbits: String,
    },
    /// Sheets through the orbit, its Krull dimension and rigidity
    Sheets {
        #[arg(long)]
        partition: String,
    },
    /// Free generators and reduction data of the abelianized algebra
    Abelianize {
        #[arg(long)]
        partition: String,
        /// series truncation order
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Printed)]
        convention: ConventionArg,
    },
    /// Coefficients of the central polynomial z(u)
    Zpoly {
        #[arg(long)]
        partition: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Printed)]
        convention: ConventionArg,
    },
    /// Whether the image of the centre is a proper subalgebra
    CenterTest {
        #[arg(long)]
        partition: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Printed)]
        convention: ConventionArg,
    },
    /// Desk-scale modular reports (induced modules, simple dimensions)
    Modular {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        /// single prime; omit to run the default list 3,5,7
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, value_enum, default_value_t = CheckArg::All)]
        check: CheckArg,
        #[arg(long, value_enum, default_value_t = NilpotentArg::Regular)]
        nilpotent: NilpotentArg,
    },
    /// Run the full regression suite
    Suite {
        /// seed for the randomized sweeps
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// substring filter on criterion tags
        #[arg(long)]
        only: Option<String>,
        /// cap on N for the exhaustive partition sweeps
        #[arg(long)]
        max_n: Option<u32>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn invalid(msg: impl ToString) -> Failure {
    Failure { code: EXIT_INVALID_INPUT, message: msg.to_string() }
}

fn check_failed(msg: impl ToString) -> Failure {
    Failure { code: EXIT_CHECK_FAILED, message: msg.to_string() }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| invalid(format!("bad partition {s:?}: {e}")))?;
    Partition::new(&parts)
        .map_err(|e| invalid(format!("bad partition {s:?}: {e}")))
}

fn ab_error(e: AbError) -> Failure {
    match e {
        AbError::RelationViolation(_) => check_failed(e),
        _ => invalid(e),
    }
}

#[derive(Serialize)]
struct OrbitOut {
    orbit_dim: u32,
    d_e: u32,
    r: u32,
    conjugate: Vec<u32>,
}

#[derive(Serialize)]
struct SheetOut {
    levi: Vec<u32>,
    rigid_orbits: Vec<Vec<u32>>,
    nilpotent_rep: Vec<u32>,
    z_dim: u32,
}

#[derive(Serialize)]
struct ZpolyOut {
    partition: Vec<u32>,
    convention: String,
    u_degree: u32,
    /// coefficient of u^{N-k} at index k
    z: Vec<PolyJson>,
    /// nonzero coefficients at negative powers, keyed by k > N
    validity: Vec<(usize, PolyJson)>,
}

fn convention_name(c: ConventionArg) -> &'static str {
    match c {
        ConventionArg::Printed => "printed",
        ConventionArg::Worked => "worked",
    }
}

fn build_algebra(a: AlgebraArg, p: u64) -> Result<RestrictedLieAlgebra, ModularError> {
    match a {
        AlgebraArg::Sl2 => build_sl2(p),
        AlgebraArg::Gl3 => build_gl3(p),
        AlgebraArg::Sl3 => build_sl3(p),
    }
}

/// Renders a JSON report as indented text lines.
fn render_text(v: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        serde_json::Value::Object(m) => {
            for (k, val) in m {
                match val {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {val}\n")),
                }
            }
        }
        serde_json::Value::Array(a) => {
            for val in a {
                match val {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {val}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{v}\n")),
    }
}

fn emit(value: serde_json::Value, text: bool) {
    if text {
        let mut s = String::new();
        render_text(&value, 0, &mut s);
        print!("{s}");
    } else {
        println!("{}", serde_json::to_string(&value).expect("serializable"));
    }
}

fn run(cmd: Cmd) -> Result<serde_json::Value, Failure> {
    match cmd {
        Cmd::Orbit { partition } => {
            let lam = parse_partition(&partition)?;
            let p = orbit_profile(&lam);
            let out = OrbitOut {
                orbit_dim: p.orbit_dim,
                d_e: p.d_e,
                r: p.r,
                conjugate: lam.conjugate().parts().to_vec(),
            };
            Ok(serde_json::to_value(out).unwrap())
        }
        Cmd::Induce { levi, orbits } => {
            let blocks: Vec<u32> = levi
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|e| invalid(format!("bad levi {levi:?}: {e}")))?;
            let levi = LeviDescriptor::new(&blocks).map_err(|e| invalid(e))?;
            let orbit_parts: Vec<Partition> = orbits
                .split(';')
                .map(parse_partition)
                .collect::<Result<_, _>>()?;
            let induced = induce(&levi, &orbit_parts).map_err(|e| invalid(e))?;
            Ok(json!({
                "levi": levi.blocks(),
                "orbits": orbit_parts.iter().map(|o| o.parts().to_vec()).collect::<Vec<_>>(),
                "induced": induced.parts(),
            }))
        }
        Cmd::Sheets { partition } => {
            let lam = parse_partition(&partition)?;
            let sheets: Vec<SheetOut> = sheets_containing(&lam)
                .into_iter()
                .map(|s| SheetOut {
                    levi: s.levi.blocks().to_vec(),
                    rigid_orbits: s.rigid_orbits.iter().map(|o| o.parts().to_vec()).collect(),
                    nilpotent_rep: s.nilpotent_rep.parts().to_vec(),
                    z_dim: s.z_dim,
                })
                .collect();
            Ok(json!({
                "partition": lam.parts(),
                "sheets": serde_json::to_value(sheets).unwrap(),
                "krull_dim": krull_dim_ab(&lam),
                "rigid": is_rigid(&lam),
                "spectrum": match rigid_finiteness_flag(&lam) {
                    SpectrumKind::FiniteSpectrum => "finite",
                    SpectrumKind::PositiveDimensional => "positive-dimensional",
                },
            }))
        }
        Cmd::Abelianize { partition, order, convention } => {
            let lam = parse_partition(&partition)?;
            let alg = build_ab_algebra(&lam, order, convention.into()).map_err(ab_error)?;
            let residuals = alg.dd_residuals();
            Ok(json!({
                "partition": lam.parts(),
                "order": order,
                "convention": convention_name(convention),
                "free_generators": alg.free_gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "homogeneous": alg.is_homogeneous(),
                "recursion_residuals": residuals.len(),
                "truncation": alg.truncation_status(),
            }))
        }
        Cmd::Zpoly { partition, order, convention } => {
            let lam = parse_partition(&partition)?;
            let alg = build_ab_algebra(&lam, order, convention.into()).map_err(ab_error)?;
            let z = z_series(&alg).map_err(ab_error)?;
            let out = ZpolyOut {
                partition: lam.parts().to_vec(),
                convention: convention_name(convention).into(),
                u_degree: z.u_degree,
                z: z.z_polys.iter().map(|p| p.to_json()).collect(),
                validity: z.validity.iter().map(|(k, p)| (*k, p.to_json())).collect(),
            };
            Ok(serde_json::to_value(out).unwrap())
        }
        Cmd::CenterTest { partition, order, convention } => {
            let lam = parse_partition(&partition)?;
            let alg = build_ab_algebra(&lam, order, convention.into()).map_err(ab_error)?;
            let (proper, witness) = center_image_proper(&alg).map_err(ab_error)?;
            Ok(json!({
                "proper": proper,
                "witness": witness.map(|g| g.to_string()),
            }))
        }
        Cmd::Modular { algebra, prime, check, nilpotent } => {
            let primes: Vec<u64> = match prime {
                Some(p) => vec![p],
                None => vec![3, 5, 7],
            };
            let kind = match nilpotent {
                NilpotentArg::Regular => NilpotentKind::Regular,
                NilpotentArg::Minimal => NilpotentKind::Minimal,
            };
            let mut reports: Vec<ModularReport> = Vec::new();
            for p in primes {
                let l = build_algebra(algebra, p).map_err(|e| invalid(e))?;
                let run_qeta = matches!(check, CheckArg::Qeta | CheckArg::All);
                let run_d = matches!(check, CheckArg::TheoremD | CheckArg::All);
                if run_qeta {
                    reports.push(qeta_report(&l, kind).map_err(|e| invalid(e))?);
                }
                if run_d {
                    reports.push(theorem_d_check(&l, kind).map_err(|e| invalid(e))?);
                }
            }
            let all_pass = reports.iter().all(|r| r.all_pass());
            let value = if reports.len() == 1 {
                serde_json::to_value(&reports[0]).unwrap()
            } else {
                serde_json::to_value(&reports).unwrap()
            };
            if all_pass {
                Ok(value)
            } else {
                Err(check_failed(serde_json::to_string(&value).unwrap()))
            }
        }
        Cmd::Suite { seed, only, max_n } => {
            let cfg = SuiteConfig { seed, max_n, only };
            let report = run_suite(&cfg);
            let value = serde_json::to_value(&report).unwrap();
            if report.all_pass() {
                Ok(value)
            } else {
                Err(check_failed(serde_json::to_string(&value).unwrap()))
            }
        }
    }
}

fn main() {
    if let Ok(threads) = std::env::var("WALG_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(value) => {
            emit(value, cli.text);
        }
        Err(f) => {
            // failed-check payloads are already JSON; keep them intact
            let detail: serde_json::Value = serde_json::from_str(&f.message)
                .unwrap_or_else(|_| serde_json::Value::String(f.message.clone()));
            emit(json!({ "error": detail }), cli.text);
            std::process::exit(f.code);
        }
    }
}
