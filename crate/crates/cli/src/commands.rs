use serde::Serialize;
use triortho::code::{build_code, BuildOptions, TriorthogonalCode};
use triortho::field::{saturating_pow, PrimeModulus};
use triortho::gates::third_level_gate;
use triortho::overhead::{best_per_prime, gamma, gamma_scaling_check, search_best_gamma, OverheadRecord};
use triortho::sim::{verify_transversal_action, MAX_DIMENSION};

use crate::args::{CodeSource, Command, Format, Output};
use crate::error::{exit, CliError};
use crate::io::{self, code_id, CodeDescriptor};
use crate::selftest;
use crate::verify::verify_code;

/// Noted in overhead reports: the exponent uses the family's `d = l − k`.
pub const GAMMA_NOTE: &str = "d = l - k in the denominator of gamma";
pub const SEARCH_P_MAX: u32 = 100_000;

/// Text to emit and whether the run passed.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn pass(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// Runs a parsed command, writing its output, and returns the exit code.
pub fn run(command: Command) -> u8 {
    let (result, out) = match command {
        Command::Construct { source, out } => (construct(&source, &out), Some(out)),
        Command::Verify { input, budget, out } => (verify(&input, budget, &out), Some(out)),
        Command::Simulate {
            source,
            tolerance,
            out,
        } => (simulate(&source, tolerance, &out), Some(out)),
        Command::Gamma { n, k, d, out } => (gamma_cmd(n, k, d, &out), Some(out)),
        Command::Search { p_max, out } => (search(p_max, &out), Some(out)),
        Command::Selftest { only } => (selftest_cmd(&only), None),
    };
    let emitted = result.and_then(|o| {
        match out.as_ref().and_then(|o| o.output.as_ref()) {
            Some(path) => io::write_file(path, &o.text)?,
            None => print!("{}", o.text),
        }
        Ok(o.passed)
    });
    match emitted {
        Ok(true) => exit::PASS,
        Ok(false) => exit::VERIFICATION_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn require_format(out: &Output, allowed: &[Format], default: Format) -> Result<Format, CliError> {
    let f = out.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Parameter(format!(
            "format {f:?} not supported here (use one of {allowed:?})"
        )))
    }
}

fn modulus(p: u64) -> Result<PrimeModulus, CliError> {
    Ok(PrimeModulus::new(p)?)
}

/// `(p, l, k)` from a source that is not qutrit or matrix based.
fn rs_params(source: &CodeSource) -> Result<(PrimeModulus, usize, usize), CliError> {
    match (source.p, source.l, source.k) {
        (Some(p), Some(l), Some(k)) => Ok((modulus(p)?, l, k)),
        _ => Err(CliError::Parameter("--p, --l and --k are required".into())),
    }
}

pub fn load_code(source: &CodeSource) -> Result<TriorthogonalCode, CliError> {
    if source.qutrit {
        return Ok(selftest::qutrit_code(source.budget)?);
    }
    if let Some(path) = &source.from_matrix {
        let h = io::parse_matrix_text(&io::read_file(path)?)?;
        return Ok(TriorthogonalCode::from_matrix(&h, source.budget)?);
    }
    let (p, l, k) = rs_params(source)?;
    let opts = BuildOptions {
        puncture: source.puncture.clone(),
        budget: source.budget,
    };
    Ok(build_code(p, l, k, &opts)?)
}

fn construct(source: &CodeSource, out: &Output) -> Result<Outcome, CliError> {
    require_format(out, &[Format::Json], Format::Json)?;
    if source.input.is_some() {
        return Err(CliError::Parameter("--input is only accepted by simulate".into()));
    }
    let code = load_code(source)?;
    Ok(Outcome::pass(CodeDescriptor::from_code(&code).to_json()))
}

fn verify(input: &std::path::Path, budget: u64, out: &Output) -> Result<Outcome, CliError> {
    let format = require_format(out, &[Format::Json, Format::Text], Format::Json)?;
    let desc = CodeDescriptor::parse(&io::read_file(input)?)?;
    let code = desc.to_code()?;
    let report = verify_code(&code, budget);
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                s.push_str(&format!("{:<7} {}: {}\n", format!("{:?}", c.status).to_uppercase(), c.name, c.detail));
            }
            s.push_str(if report.passed { "all claims hold\n" } else { "verification failed\n" });
            s
        }
        _ => io::to_sorted_json(&report),
    };
    Ok(Outcome {
        text,
        passed: report.passed,
    })
}

#[derive(Serialize)]
struct FailureEntry {
    u: Vec<u32>,
    deviation: f64,
}

#[derive(Serialize)]
struct SimulateReport {
    code_id: String,
    gate: String,
    max_deviation: f64,
    failures: Vec<FailureEntry>,
}

fn simulate(source: &CodeSource, tolerance: f64, out: &Output) -> Result<Outcome, CliError> {
    require_format(out, &[Format::Json], Format::Json)?;
    let code = match source.input.as_deref() {
        Some(path) => CodeDescriptor::parse(&io::read_file(path)?)?.to_code()?,
        None => {
            if !source.qutrit && source.from_matrix.is_none() {
                // Refuse before construction: building a large code is itself slow.
                let (p, _, k) = rs_params(source)?;
                let n = (p.get() as usize).saturating_sub(k);
                let dim = saturating_pow(p.as_u64(), n);
                if dim > MAX_DIMENSION {
                    return Err(CliError::ResourceCap(format!(
                        "state dimension {}^{n} exceeds the simulator cap {MAX_DIMENSION}",
                        p.get()
                    )));
                }
            }
            load_code(source)?
        }
    };
    let gate = third_level_gate(code.modulus())?;
    let report = verify_transversal_action(&code, &gate, tolerance)?;
    let mut failures: Vec<FailureEntry> = report
        .failures
        .iter()
        .map(|f| FailureEntry {
            u: f.u.clone(),
            deviation: f.deviation,
        })
        .collect();
    if report.max_stabilizer_deviation >= tolerance {
        // Reported as a failure with an empty logical label.
        failures.push(FailureEntry {
            u: Vec::new(),
            deviation: report.max_stabilizer_deviation,
        });
    }
    let passed = failures.is_empty();
    let text = io::to_sorted_json(&SimulateReport {
        code_id: code_id(&code),
        gate: format!("U_{{{},{}}}", gate.m(), gate.a()),
        max_deviation: report.max_deviation,
        failures,
    });
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct GammaReport {
    n: usize,
    k: usize,
    d: usize,
    gamma: f64,
}

fn gamma_cmd(n: usize, k: usize, d: usize, out: &Output) -> Result<Outcome, CliError> {
    let format = require_format(out, &[Format::Text, Format::Json], Format::Text)?;
    let g = gamma(n, k, d)?;
    Ok(Outcome::pass(match format {
        Format::Json => io::to_sorted_json(&GammaReport { n, k, d, gamma: g }),
        _ => format!("{g:.6}\n"),
    }))
}

#[derive(Serialize)]
struct RecordJson {
    p: u32,
    l: usize,
    k: usize,
    n: usize,
    d: usize,
    gamma: f64,
}

impl From<&OverheadRecord> for RecordJson {
    fn from(r: &OverheadRecord) -> Self {
        RecordJson {
            p: r.p,
            l: r.l,
            k: r.k,
            n: r.n,
            d: r.d,
            gamma: r.gamma,
        }
    }
}

#[derive(Serialize)]
struct SearchSummary {
    p_max: u32,
    note: &'static str,
    c_fit: Option<f64>,
    monotone_ok: Option<bool>,
    best: Vec<RecordJson>,
}

fn search(p_max: u32, out: &Output) -> Result<Outcome, CliError> {
    let format = require_format(out, &[Format::Csv, Format::Json], Format::Csv)?;
    if p_max > SEARCH_P_MAX {
        return Err(CliError::Parameter(format!("--p-max must be at most {SEARCH_P_MAX}")));
    }
    let records = search_best_gamma(p_max);
    Ok(Outcome::pass(match format {
        Format::Json => {
            let best = best_per_prime(&records);
            let scaling = gamma_scaling_check(&best).ok();
            io::to_sorted_json(&SearchSummary {
                p_max,
                note: GAMMA_NOTE,
                c_fit: scaling.map(|s| s.c_fit),
                monotone_ok: scaling.map(|s| s.monotone_ok),
                best: best.iter().map(RecordJson::from).collect(),
            })
        }
        _ => io::records_csv(&records),
    }))
}

fn selftest_cmd(only: &[u8]) -> Result<Outcome, CliError> {
    let ids: Vec<u8> = if only.is_empty() { (1..=10).collect() } else { only.to_vec() };
    let mut passed = true;
    let mut text = String::new();
    for id in ids {
        let outcome = selftest::run(id)
            .ok_or_else(|| CliError::Parameter(format!("no criterion {id} (valid: 1 to 10)")))?;
        passed &= outcome.passed;
        let line = format!("{outcome}\n");
        // Progress is visible while later criteria run.
        eprint!("{line}");
        text.push_str(&line);
    }
    text.push_str(if passed { "all criteria passed\n" } else { "some criteria failed\n" });
    Ok(Outcome { text, passed })
}
