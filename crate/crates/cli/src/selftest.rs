//! The acceptance suite: ten criteria with pinned tolerances, each producing
//! one pass/fail line.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triortho::code::{build_code, BuildOptions, TriorthogonalCode};
use triortho::enumerate::Odometer;
use triortho::field::{primes_up_to, saturating_pow, PrimeModulus};
use triortho::gates::{
    cubic_phase_sum, p3_phase_sum, search_qutrit_code, ternary_mod9_sum, third_level_gate,
};
use triortho::linalg::FpVector;
use triortho::overhead::{gamma, gamma_scaling_check, search_best_gamma, search_best_per_prime};
use triortho::reed_solomon::{prs_min_distance, rs_generator, rs_triply_even, RsCodeSpec};
use triortho::sim::verify_transversal_action;
use triortho::star::{check_triorthogonal, check_triply_even, power_weight, TriplyEvenMode};
use triortho::weight::DEFAULT_BUDGET;

use crate::verify::SEED;

pub const GAMMA_35_6_6: (f64, f64) = (0.979, 0.989);
pub const GAMMA_35_6_6_ROUNDED: &str = "0.98";
pub const GAMMA_83_14_15: (f64, f64) = (0.6570, 0.6578);
pub const SUB_HH_N: usize = 83;
pub const SUB_HH_GAMMA: f64 = 0.6779;
pub const SUITE_P_MIN: u32 = 5;
pub const SUITE_P_MAX: u32 = 31;
pub const IDENTITY_LIMIT: u128 = 1_000_000;
pub const SIM_TOLERANCE: f64 = 1e-9;
pub const SCALING_P_MAX: u32 = 10_000;
pub const TERNARY_RANDOM_INPUTS: usize = 100_000;
pub const AUDIT_BUDGET: u64 = 100_000_000;
/// Shape of the searched qutrit code: one logical row, two stabilizer rows.
pub const QUTRIT_SHAPE: (usize, usize) = (1, 2);
pub const QUTRIT_N_MAX: usize = 9;
/// Enough for construction; distances are not part of criteria 4 and 6.
const SUITE_BUDGET: u64 = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{:>2}] {}: {} ({:.2?})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed
        )
    }
}

pub const TITLES: [&str; 10] = [
    "gamma reproduction",
    "code construction reproduction",
    "sub-83 block size point",
    "tri-orthogonality suite",
    "triply-even criterion",
    "exact cubic phase identity",
    "end-to-end simulation",
    "qutrit machinery",
    "gamma scaling",
    "distance audit",
];

/// Runs criterion `id` (1 to 10).
pub fn run(id: u8) -> Option<CriterionOutcome> {
    let title = *TITLES.get(usize::from(id).checked_sub(1)?)?;
    let start = Instant::now();
    let (passed, detail) = match id {
        1 => gamma_reproduction(),
        2 => code_construction(),
        3 => sub_hh_point(),
        4 => triorthogonality_suite(),
        5 => triply_even_criterion(),
        6 => cubic_identity(),
        7 => end_to_end_simulation(),
        8 => qutrit_machinery(),
        9 => gamma_scaling(),
        10 => distance_audit(),
        _ => return None,
    };
    Some(CriterionOutcome {
        id,
        title,
        passed,
        detail,
        elapsed: start.elapsed(),
    })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=10).filter_map(run).collect()
}

fn fp(p: u32) -> PrimeModulus {
    PrimeModulus::new(p as u64).expect("prime")
}

fn within(x: f64, (lo, hi): (f64, f64)) -> bool {
    lo <= x && x <= hi
}

fn gamma_reproduction() -> (bool, String) {
    let g1 = gamma(35, 6, 6).expect("valid");
    let g2 = gamma(83, 14, 15).expect("valid");
    let rounded = format!("{g1:.2}");
    let ok = within(g1, GAMMA_35_6_6) && rounded == GAMMA_35_6_6_ROUNDED && within(g2, GAMMA_83_14_15);
    (
        ok,
        format!("γ(35,6,6) = {g1:.6} (rounds to {rounded}), γ(83,14,15) = {g2:.6}"),
    )
}

/// `(p, l, k)`, expected `(n, k, d)`, whether `d` must be verified.
type ConstructionCase = (u32, usize, usize, (usize, usize, usize), bool);

fn code_construction() -> (bool, String) {
    let cases: [ConstructionCase; 3] = [
        (41, 12, 6, (35, 6, 6), false),
        (97, 29, 14, (83, 14, 15), false),
        (13, 4, 1, (12, 1, 3), true),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, l, k, want, verified) in cases {
        let opts = BuildOptions {
            puncture: None,
            budget: DEFAULT_BUDGET,
        };
        match build_code(fp(p), l, k, &opts) {
            Ok(code) => {
                let c = code.params();
                let good = (c.n, c.k, c.d) == want && c.d_verified == verified;
                ok &= good;
                parts.push(format!(
                    "({p},{l},{k}) → [[{},{},{}]] {}{}",
                    c.n,
                    c.k,
                    c.d,
                    if c.d_verified { "verified" } else { "unverified" },
                    if good {
                        String::new()
                    } else {
                        format!(" (expected [[{},{},{}]])", want.0, want.1, want.2)
                    }
                ));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("({p},{l},{k}) → error: {e}"));
            }
        }
    }
    (ok, parts.join("; "))
}

fn sub_hh_point() -> (bool, String) {
    let records = search_best_gamma(100);
    let hit = records
        .iter()
        .filter(|r| r.n == SUB_HH_N && r.gamma < SUB_HH_GAMMA)
        .min_by(|a, b| a.gamma.total_cmp(&b.gamma));
    match hit {
        Some(r) => (
            true,
            format!("p={} l={} k={} n={} d={} γ = {:.6} < {SUB_HH_GAMMA}", r.p, r.l, r.k, r.n, r.d, r.gamma),
        ),
        None => (false, format!("no record with n = {SUB_HH_N} and γ < {SUB_HH_GAMMA}")),
    }
}

/// Every `(p, l, k)` of the tri-orthogonality suite.
pub fn suite_parameters() -> Vec<(u32, usize, usize)> {
    let mut out = Vec::new();
    for p in primes_up_to(SUITE_P_MAX).into_iter().filter(|&p| p >= SUITE_P_MIN) {
        for l in 1..=(p as usize + 1) / 3 {
            for k in 1..l {
                out.push((p, l, k));
            }
        }
    }
    out
}

fn suite_code(p: u32, l: usize, k: usize) -> Result<TriorthogonalCode, triortho::Error> {
    let opts = BuildOptions {
        puncture: None,
        budget: SUITE_BUDGET,
    };
    build_code(fp(p), l, k, &opts)
}

fn triorthogonality_suite() -> (bool, String) {
    let params = suite_parameters();
    let mut failures = Vec::new();
    for &(p, l, k) in &params {
        let code = match suite_code(p, l, k) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("({p},{l},{k}): {e}"));
                continue;
            }
        };
        let h = code.stacked_h();
        let tri = check_triorthogonal(&h).is_ok();
        let eps = code.epsilon().iter().all(|&e| e == 1);
        let h1_sq = (0..code.h1().nrows()).all(|r| power_weight(&code.h1().row_vector(r), 2) == p - 1);
        let h0_sq = (0..code.h0().nrows()).all(|r| power_weight(&code.h0().row_vector(r), 2) == 0);
        if !(tri && eps && h1_sq && h0_sq) {
            failures.push(format!(
                "({p},{l},{k}): triorthogonal={tri} ε=1:{eps} H1²≡−1:{h1_sq} H0²≡0:{h0_sq}"
            ));
        }
    }
    (
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} codes over primes {SUITE_P_MIN}..={SUITE_P_MAX}", params.len())
        } else {
            format!("{} of {} codes failed: {}", failures.len(), params.len(), failures.join("; "))
        },
    )
}

fn triply_even_criterion() -> (bool, String) {
    let mut checked = 0;
    let mut boundary = 0;
    let mut disagreements = Vec::new();
    for p in primes_up_to(SUITE_P_MAX) {
        for l in 1..=p as usize {
            let gen = rs_generator(fp(p), l).expect("1 ≤ l ≤ p");
            let predicted = rs_triply_even(fp(p), l);
            let triples = check_triply_even(&gen, TriplyEvenMode::BasisTriples).is_ok();
            let dual = check_triply_even(&gen, TriplyEvenMode::DualContainment).is_ok();
            checked += 1;
            if 3 * l == p as usize + 1 {
                boundary += 1;
            }
            if predicted != triples || predicted != dual {
                disagreements.push(format!(
                    "(p={p}, l={l}): predicate {predicted}, basis triples {triples}, dual containment {dual}"
                ));
            }
        }
    }
    (
        disagreements.is_empty(),
        if disagreements.is_empty() {
            format!("{checked} (p,l) pairs agree, {boundary} of them on the boundary 3l = p+1")
        } else {
            disagreements.join("; ")
        },
    )
}

fn cubic_identity() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut codes = 0;
    let mut vectors = 0usize;
    let mut failures = Vec::new();
    for (p, l, k) in suite_parameters() {
        if saturating_pow(p as u64, k) > IDENTITY_LIMIT {
            continue;
        }
        let Ok(code) = suite_code(p, l, k) else {
            failures.push(format!("({p},{l},{k}): construction failed"));
            continue;
        };
        codes += 1;
        let m = fp(p);
        let r0 = code.h0().nrows();
        let mut odo = Odometer::new(m, k);
        while odo.advance().is_some() {
            let logical = FpVector::new(m, odo.digits().to_vec()).expect("digits < p");
            let mut shifted = odo.digits().to_vec();
            shifted.extend((0..r0).map(|_| rng.gen_range(0..p)));
            let shifted = FpVector::new(m, shifted).expect("digits < p");
            for u in [&logical, &shifted] {
                vectors += 1;
                if let Err(e) = cubic_phase_sum(code.h1(), code.h0(), u) {
                    failures.push(format!("({p},{l},{k}) u={:?}: {e}", u.entries()));
                }
            }
        }
    }
    (
        failures.is_empty(),
        if failures.is_empty() {
            format!("{vectors} coefficient vectors over {codes} codes")
        } else {
            failures.join("; ")
        },
    )
}

fn end_to_end_simulation() -> (bool, String) {
    let code = match build_code(fp(7), 2, 1, &BuildOptions::default()) {
        Ok(c) => c,
        Err(e) => return (false, e.to_string()),
    };
    let gate = third_level_gate(fp(7)).expect("p ≥ 5");
    match verify_transversal_action(&code, &gate, SIM_TOLERANCE) {
        Ok(r) => (
            r.passed() && r.logical_states == 7 && r.max_stabilizer_deviation < SIM_TOLERANCE,
            format!(
                "{} logical states, max deviation {:.3e}, max stabilizer deviation {:.3e}",
                r.logical_states, r.max_deviation, r.max_stabilizer_deviation
            ),
        ),
        Err(e) => (false, e.to_string()),
    }
}

/// The searched qutrit code used by criterion 8 and `construct --qutrit`.
pub fn qutrit_code(budget: u64) -> Result<TriorthogonalCode, triortho::Error> {
    let (k, r0) = QUTRIT_SHAPE;
    let (h1, h0) = search_qutrit_code(k, r0, QUTRIT_N_MAX)
        .ok_or(triortho::Error::ParameterOutOfRange("no qutrit code within the search bound"))?;
    TriorthogonalCode::from_matrix(&h1.stack(&h0)?, budget)
}

fn qutrit_machinery() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();

    let mut mismatches = 0;
    for a in 0..9u32 {
        for b in 0..9u32 {
            mismatches += usize::from(ternary_mod9_sum(&[a, b]) != (a + b) % 9);
            for c in 0..9u32 {
                mismatches += usize::from(ternary_mod9_sum(&[a, b, c]) != (a + b + c) % 9);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..TERNARY_RANDOM_INPUTS {
        let len = rng.gen_range(5..64);
        let values: Vec<u32> = (0..len).map(|_| rng.gen_range(0..9)).collect();
        mismatches += usize::from(ternary_mod9_sum(&values) != values.iter().sum::<u32>() % 9);
    }
    ok &= mismatches == 0;
    parts.push(format!(
        "ternary sum: {mismatches} mismatches over 81 pairs, 729 triples, {TERNARY_RANDOM_INPUTS} random inputs"
    ));

    let code = match qutrit_code(DEFAULT_BUDGET) {
        Ok(c) => c,
        Err(e) => return (false, format!("{}; qutrit code: {e}", parts.join("; "))),
    };
    let m = fp(3);
    let rows = code.h1().nrows() + code.h0().nrows();
    let mut odo = Odometer::new(m, rows);
    let mut tested = 0;
    let mut violations = 0;
    while odo.advance().is_some() {
        let u = FpVector::new(m, odo.digits().to_vec()).expect("digits < 3");
        tested += 1;
        violations += usize::from(p3_phase_sum(code.h1(), code.h0(), &u).is_err());
    }
    ok &= violations == 0;
    parts.push(format!(
        "[[{},{},{}]] code H1 = {:?}, H0 = {:?}: identity {} of {tested} vectors",
        code.n(),
        code.k(),
        code.params().d,
        code.h1().to_rows(),
        code.h0().to_rows(),
        tested - violations
    ));

    let gate = third_level_gate(m).expect("p = 3");
    match verify_transversal_action(&code, &gate, SIM_TOLERANCE) {
        Ok(r) => {
            ok &= r.passed() && r.max_stabilizer_deviation < SIM_TOLERANCE;
            parts.push(format!(
                "U_{{2,1}} max deviation {:.3e}, stabilizer deviation {:.3e}",
                r.max_deviation, r.max_stabilizer_deviation
            ));
        }
        Err(e) => {
            ok = false;
            parts.push(format!("simulation: {e}"));
        }
    }
    (ok, parts.join("; "))
}

fn gamma_scaling() -> (bool, String) {
    let records = search_best_per_prime(SCALING_P_MAX);
    match gamma_scaling_check(&records) {
        Ok(s) => {
            let last = records.last().expect("at least ten records");
            (
                s.monotone_ok && s.c_fit.is_finite(),
                format!(
                    "{} primes ≤ {SCALING_P_MAX}, running minimum non-increasing: {}, c_fit = {:.4}, best γ at p={} is {:.4}",
                    s.primes, s.monotone_ok, s.c_fit, last.p, last.gamma
                ),
            )
        }
        Err(e) => (false, e.to_string()),
    }
}

/// One row of the distance audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub p: u32,
    pub l: usize,
    pub puncture: Vec<usize>,
    pub measured: Option<usize>,
    pub claimed: usize,
}

impl AuditEntry {
    pub fn name(&self) -> String {
        format!("PRS(p={}, l={}, A={:?})", self.p, self.l, self.puncture)
    }
}

/// Exact distance of every `PRS_{p−l,A}` in the suite within [`AUDIT_BUDGET`];
/// `measured` is `None` where enumeration is out of budget.
pub fn distance_audit_entries() -> Vec<AuditEntry> {
    suite_parameters()
        .into_iter()
        .map(|(p, l, k)| {
            let spec = RsCodeSpec::with_leading_puncture(fp(p), l, k).expect("valid puncture");
            let measured = prs_min_distance(&spec, AUDIT_BUDGET).ok().map(|a| a.measured);
            AuditEntry {
                p,
                l,
                puncture: spec.puncture_set().to_vec(),
                measured,
                claimed: l - k,
            }
        })
        .collect()
}

fn distance_audit() -> (bool, String) {
    let entries = distance_audit_entries();
    let measured: Vec<&AuditEntry> = entries.iter().filter(|e| e.measured.is_some()).collect();
    let mismatched: Vec<&&AuditEntry> = measured
        .iter()
        .filter(|e| e.measured != Some(e.claimed))
        .collect();
    let off_by_one = mismatched
        .iter()
        .filter(|e| e.measured == Some(e.claimed + 1))
        .count();
    let mut detail = format!(
        "{} instances, {} enumerated, {} match l−k",
        entries.len(),
        measured.len(),
        measured.len() - mismatched.len()
    );
    if !mismatched.is_empty() {
        detail.push_str(&format!(
            "; {} counterexamples ({} with measured = l−k+1), e.g. ",
            mismatched.len(),
            off_by_one
        ));
        let named: Vec<String> = mismatched
            .iter()
            .take(3)
            .map(|e| format!("{} measured {} claimed {}", e.name(), e.measured.unwrap_or(0), e.claimed))
            .collect();
        detail.push_str(&named.join(", "));
    }
    (mismatched.is_empty() && !measured.is_empty(), detail)
}
