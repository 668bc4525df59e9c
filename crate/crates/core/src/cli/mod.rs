//! Command-line front end. [`run`] parses arguments, writes results to the
//! given streams and returns the process exit code.

pub mod verify;

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::arithmetic::{
    chi, chi_raw, embedding_numbers, multilayer_demo, theta, ArithmeticError, ChiReport,
    RamificationData, Validated,
};
use crate::building::{Building, BuildingError};
use crate::exactnum::{format_rational, BigInteger};
use crate::qcombinatorics::vertex_degree;
use crate::simplicial::{euler_characteristic, to_dump, Complex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "btquot",
    version,
    about = "Euler characteristics and simplex counts of quotients of Bruhat-Tits buildings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct DataArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    q: u64,
    /// Degrees of the ramified places, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    degrees: Vec<u32>,
    /// Numerators of the local invariants, in the order of --degrees.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    invariants: Option<Vec<i64>>,
}

impl DataArgs {
    fn data(&self) -> RamificationData {
        let d = RamificationData::new(self.q, self.n, &self.degrees);
        match &self.invariants {
            Some(a) => d.with_invariants(a),
            None => d,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler characteristic of the quotient.
    Chi {
        #[command(flatten)]
        data: DataArgs,
        /// Also print χ as a polynomial in q.
        #[arg(long)]
        symbolic: bool,
        /// Evaluate the formula as a rational without requiring n prime.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        json: bool,
    },
    /// Numbers of simplices of each dimension in the quotient.
    Theta {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', default_value = "1,1")]
        degrees: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Optimal embedding numbers and special vertex orbits.
    Embed {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate a ball around the standard vertex of the building over F_p((π)).
    Building {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        dump: Option<std::path::PathBuf>,
    },
    /// The explicit quotient for two ramified places of degree one.
    Demo {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        dump: Option<std::path::PathBuf>,
    },
    /// Run self-check suites.
    Verify {
        #[arg(value_parser = ["andrews", "degrees", "lemma21", "congruence", "integrality", "all"])]
        suite: String,
    },
}

/// Failure of a subcommand, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<ArithmeticError> for Failure {
    fn from(e: ArithmeticError) -> Self {
        let code = if e.is_input_error() {
            EXIT_VALIDATION
        } else {
            EXIT_INTERNAL
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<BuildingError> for Failure {
    fn from(e: BuildingError) -> Self {
        let code = match e {
            BuildingError::UnsupportedField(_)
            | BuildingError::RankTooSmall(_)
            | BuildingError::FieldTooLarge { .. }
            | BuildingError::TooLarge { .. } => EXIT_VALIDATION,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut warnings = Vec::new();
    match execute(cli.command, &mut warnings) {
        Ok(text) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cmd: Command, warnings: &mut Vec<String>) -> Result<String, Failure> {
    match cmd {
        Command::Chi {
            data,
            symbolic,
            raw,
            json,
        } => chi_command(&data.data(), symbolic, raw, json, warnings),
        Command::Theta {
            n,
            q,
            degrees,
            json,
        } => theta_command(&RamificationData::new(q, n, &degrees), json, warnings),
        Command::Embed { data, json } => embed_command(&data.data(), json, warnings),
        Command::Building { n, p, radius, dump } => building_command(n, p, radius, dump),
        Command::Demo { n, q, dump } => demo_command(n, q, dump),
        Command::Verify { suite } => verify_command(&suite),
    }
}

fn strings(xs: &[BigInteger]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<width$}  {v}");
    }
    s
}

fn warn_on(v: &[crate::arithmetic::Warning], warnings: &mut Vec<String>) {
    warnings.extend(v.iter().map(|w| w.to_string()));
}

fn validated(d: &RamificationData) -> Result<Validated, Failure> {
    crate::arithmetic::validate_data(d).map_err(|e| ArithmeticError::Invalid(e).into())
}

fn chi_command(
    d: &RamificationData,
    symbolic: bool,
    raw: bool,
    as_json: bool,
    warnings: &mut Vec<String>,
) -> Result<String, Failure> {
    if raw {
        let v = validated(d)?;
        warn_on(&v.warnings, warnings);
        let value = chi_raw(d)?;
        return Ok(if as_json {
            let j = json!({
                "n": v.n.to_string(),
                "q": v.q.to_string(),
                "degrees": joined_array(&v.degrees),
                "chi_raw": format_rational(&value),
            });
            format!("{}\n", j)
        } else {
            format!("{}\n", format_rational(&value))
        });
    }
    let report = chi(d)?;
    warn_on(&report.warnings, warnings);
    let emb = embedding_numbers(d)?;
    let th = theta(d)?;
    if as_json {
        return Ok(format!(
            "{}\n",
            chi_json(&report, &emb, &th.theta, symbolic)
        ));
    }
    let mut rows = vec![
        ("n", report.n.to_string()),
        ("q", report.q.to_string()),
        ("degrees", joined(&report.degrees)),
        ("invariants", joined(&report.invariants)),
        ("wp(R,n)", report.wp_n.to_string()),
        ("volume", format_rational(&report.volume)),
        ("chi", report.chi.to_string()),
    ];
    if symbolic {
        let poly = report
            .chi_poly
            .as_ref()
            .map(|p| p.to_string())
            .unwrap_or_default();
        rows.push(("chi(q)", poly));
    }
    rows.extend([
        ("W", report.w.to_string()),
        ("m(B)", emb.m_b.to_string()),
        ("local m", joined(&emb.local_m)),
        ("chi = 1 mod q", report.congruence_ok.to_string()),
        ("h", joined(&report.h)),
        ("theta", joined(&th.theta)),
    ]);
    Ok(table(&rows))
}

fn joined_array<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn chi_json(
    r: &ChiReport,
    emb: &crate::arithmetic::EmbeddingReport,
    theta: &[BigInteger],
    symbolic: bool,
) -> Value {
    let poly = match (&r.chi_poly, symbolic) {
        (Some(p), true) => {
            Value::Array(strings(p.coeffs()).into_iter().map(Value::String).collect())
        }
        _ => Value::Null,
    };
    json!({
        "n": r.n.to_string(),
        "q": r.q.to_string(),
        "degrees": joined_array(&r.degrees),
        "wp_n": r.wp_n.to_string(),
        "volume": {
            "num": r.volume.numer().to_string(),
            "den": r.volume.denom().to_string(),
        },
        "chi": r.chi.to_string(),
        "chi_poly": poly,
        "W": r.w.to_string(),
        "mB": emb.m_b.to_string(),
        "local_m": strings(&emb.local_m),
        "congruence_ok": r.congruence_ok,
        "h": strings(&r.h),
        "theta": strings(theta),
    })
}

fn theta_command(
    d: &RamificationData,
    as_json: bool,
    warnings: &mut Vec<String>,
) -> Result<String, Failure> {
    let v = validated(d)?;
    warn_on(&v.warnings, warnings);
    let th = theta(d)?;
    if as_json {
        let j = json!({
            "n": v.n.to_string(),
            "q": v.q.to_string(),
            "degrees": joined_array(&v.degrees),
            "theta": strings(&th.theta),
            "closed_form_used": th.closed_form_used,
        });
        return Ok(format!("{j}\n"));
    }
    let labels: Vec<String> = (0..th.theta.len()).map(|i| format!("theta_{i}")).collect();
    let rows: Vec<(&str, String)> = labels
        .iter()
        .zip(&th.theta)
        .map(|(l, t)| (l.as_str(), t.to_string()))
        .collect();
    Ok(table(&rows))
}

fn embed_command(
    d: &RamificationData,
    as_json: bool,
    warnings: &mut Vec<String>,
) -> Result<String, Failure> {
    let v = validated(d)?;
    warn_on(&v.warnings, warnings);
    let e = embedding_numbers(d)?;
    if as_json {
        let subfields: serde_json::Map<String, Value> = e
            .subfields
            .iter()
            .map(|(m, ok)| (m.to_string(), Value::Bool(*ok)))
            .collect();
        let j = json!({
            "n": v.n.to_string(),
            "q": v.q.to_string(),
            "degrees": joined_array(&e.degrees),
            "local_m": strings(&e.local_m),
            "mB": e.m_b.to_string(),
            "W": e.w.to_string(),
            "subfields": subfields,
        });
        return Ok(format!("{j}\n"));
    }
    let subfields: Vec<String> = e
        .subfields
        .iter()
        .map(|(m, ok)| format!("F_q^{m}:{}", if *ok { "yes" } else { "no" }))
        .collect();
    Ok(table(&[
        ("degrees", joined(&e.degrees)),
        ("local m", joined(&e.local_m)),
        ("m(B)", e.m_b.to_string()),
        ("W", e.w.to_string()),
        ("subfields", subfields.join(" ")),
    ]))
}

fn write_dump(path: &std::path::Path, x: &Complex) -> Result<(), Failure> {
    std::fs::write(path, to_dump(x)).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

fn building_command(
    n: usize,
    p: u32,
    radius: usize,
    dump: Option<std::path::PathBuf>,
) -> Result<String, Failure> {
    let b = Building::for_radius(n, p, radius)?;
    let center = b.standard_vertex();
    let ball = b.ball(&center, radius)?;
    let x = ball.complex();
    let mut rows: Vec<(String, String)> = vec![
        ("n".into(), n.to_string()),
        ("p".into(), p.to_string()),
        ("radius".into(), radius.to_string()),
    ];
    for (d, c) in x.counts().iter().enumerate() {
        rows.push((format!("{d}-simplices"), c.to_string()));
    }
    rows.push((
        "euler characteristic".into(),
        euler_characteristic(x).to_string(),
    ));
    let mut types = vec![0usize; n];
    for v in ball.vertices() {
        types[v.vertex_type()] += 1;
    }
    rows.push(("vertices by type".into(), joined(&types)));
    for i in 1..n {
        let at = b.simplices_at(&center, i)?.len();
        let formula = vertex_degree(n as u32, i as u32)
            .map_err(|e| ArithmeticError::from(e))?
            .eval_int(&BigInteger::from(p));
        rows.push((
            format!("{i}-simplices at center"),
            format!("{at} (formula {formula})"),
        ));
    }
    if let Some(path) = dump {
        write_dump(&path, x)?;
    }
    let borrowed: Vec<(&str, String)> = rows.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    Ok(table(&borrowed))
}

fn demo_command(n: u32, q: u64, dump: Option<std::path::PathBuf>) -> Result<String, Failure> {
    let x = multilayer_demo(n, q)?;
    let th = theta(&RamificationData::new(q, n, &[1, 1]))?;
    let report = chi(&RamificationData::new(q, n, &[1, 1]))?;
    if let Some(path) = dump {
        write_dump(&path, &x)?;
    }
    let counts: Vec<usize> = x.counts();
    Ok(table(&[
        ("n", n.to_string()),
        ("q", q.to_string()),
        ("simplices", joined(&counts)),
        ("theta", joined(&th.theta)),
        ("euler characteristic", euler_characteristic(&x).to_string()),
        ("chi", report.chi.to_string()),
    ]))
}

fn verify_command(suite: &str) -> Result<String, Failure> {
    let names: Vec<&str> = if suite == "all" {
        verify::SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut s = String::new();
    let mut failed = Vec::new();
    for name in names {
        let r = verify::run_suite(name).ok_or_else(|| Failure {
            code: EXIT_USAGE,
            message: format!("unknown suite {name}"),
        })?;
        let status = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(
            s,
            "{:<12} {:<6} {} cases, {} failures",
            r.name,
            status,
            r.cases,
            r.failures.len()
        );
        failed.extend(r.failures.iter().map(|f| format!("{}: {f}", r.name)));
    }
    if failed.is_empty() {
        Ok(s)
    } else {
        Err(Failure {
            code: EXIT_INTERNAL,
            message: format!("{s}{}", failed.join("\n")),
        })
    }
}
