//! Claim-by-claim verification of a stored code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use triortho::code::{logical_distance, validate_code, CheckStatus, EpsilonRule, TriorthogonalCode};
use triortho::enumerate::Odometer;
use triortho::error::Error;
use triortho::field::saturating_pow;
use triortho::gates::{cubic_phase_sum, p3_phase_sum, PhaseExponent};
use triortho::linalg::FpVector;
use triortho::star::{check_triorthogonal, power_weight};

use crate::io::code_id;

/// Coefficient spaces up to this size are enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;
/// Random coefficient vectors drawn when enumeration is out of reach.
pub const SAMPLES: usize = 10_000;
/// Seed of every sampled check, so reports are reproducible.
pub const SEED: u64 = 0x0072_696f_7274_686f;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl From<CheckStatus> for Status {
    fn from(s: CheckStatus) -> Self {
        match s {
            CheckStatus::Pass => Status::Pass,
            CheckStatus::Fail => Status::Fail,
            CheckStatus::Skipped => Status::Skipped,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl ClaimCheck {
    fn new(name: &str, ok: bool, detail: String) -> Self {
        ClaimCheck {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub code_id: String,
    pub passed: bool,
    pub checks: Vec<ClaimCheck>,
}

/// How much of the coefficient space a phase-identity run covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coverage {
    /// Every coefficient vector over all rows of `H`.
    AllRows,
    /// Every logical vector, each with random `H0` coefficients.
    LogicalRows,
    /// Random coefficient vectors only.
    Sampled,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityOutcome {
    pub tested: usize,
    pub coverage: Coverage,
    /// First coefficient vector violating the identity.
    pub violation: Option<(Vec<u32>, Error)>,
}

fn phase_identity(code: &TriorthogonalCode, u: &FpVector) -> Result<PhaseExponent, Error> {
    if code.modulus().get() == 3 {
        p3_phase_sum(code.h1(), code.h0(), u)
    } else {
        cubic_phase_sum(code.h1(), code.h0(), u)
    }
}

/// Checks the transversal phase identity (cubic for `p ≥ 5`, mod 9 for
/// `p = 3`) over as much of the coefficient space as [`EXHAUSTIVE_LIMIT`]
/// allows.
pub fn check_phase_identity(code: &TriorthogonalCode) -> IdentityOutcome {
    let p = code.modulus();
    let k = code.h1().nrows();
    let r0 = code.h0().nrows();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = IdentityOutcome {
        tested: 0,
        coverage: Coverage::AllRows,
        violation: None,
    };
    let test = |coeffs: Vec<u32>, out: &mut IdentityOutcome| {
        out.tested += 1;
        let u = FpVector::new(p, coeffs).expect("reduced coefficients");
        match phase_identity(code, &u) {
            Ok(_) => true,
            Err(e) => {
                out.violation = Some((u.into_entries(), e));
                false
            }
        }
    };
    if saturating_pow(p.as_u64(), k + r0) <= EXHAUSTIVE_LIMIT {
        let mut odo = Odometer::new(p, k + r0);
        while odo.advance().is_some() {
            if !test(odo.digits().to_vec(), &mut out) {
                break;
            }
        }
    } else if saturating_pow(p.as_u64(), k) <= EXHAUSTIVE_LIMIT {
        out.coverage = Coverage::LogicalRows;
        let mut odo = Odometer::new(p, k);
        while odo.advance().is_some() {
            let mut c = odo.digits().to_vec();
            c.extend((0..r0).map(|_| rng.gen_range(0..p.get())));
            if !test(c, &mut out) {
                break;
            }
        }
    } else {
        out.coverage = Coverage::Sampled;
        for _ in 0..SAMPLES {
            let c = (0..k + r0).map(|_| rng.gen_range(0..p.get())).collect();
            if !test(c, &mut out) {
                break;
            }
        }
    }
    out
}

/// Verifies every claim a stored code makes about itself.
pub fn verify_code(code: &TriorthogonalCode, budget: u64) -> VerifyReport {
    let mut checks = Vec::new();
    let h = code.stacked_h();
    let n = h.ncols();

    checks.push(match check_triorthogonal(&h) {
        Ok(()) => ClaimCheck::new("triorthogonal", true, "all distinct pairs and triples vanish".into()),
        Err(w) => ClaimCheck::new("triorthogonal", false, format!("witness {w}")),
    });

    let bad_h0: Vec<usize> = (0..code.h0().nrows())
        .filter(|&r| power_weight(&code.h0().row_vector(r), 2) != 0)
        .collect();
    let bad_h1: Vec<usize> = (0..code.h1().nrows())
        .filter(|&r| power_weight(&code.h1().row_vector(r), 2) == 0)
        .collect();
    checks.push(ClaimCheck::new(
        "squared_weights",
        bad_h0.is_empty() && bad_h1.is_empty(),
        format!("H0 rows with nonzero squared weight: {bad_h0:?}; H1 rows with zero squared weight: {bad_h1:?}"),
    ));

    let rule = EpsilonRule::for_prime(code.modulus());
    let recomputed: Vec<u64> = (0..code.h1().nrows())
        .map(|r| rule.weight(&code.h1().row_vector(r)))
        .collect();
    checks.push(ClaimCheck::new(
        "epsilon",
        recomputed == code.epsilon(),
        format!(
            "stored {:?}, recomputed {recomputed:?} (mod {})",
            code.epsilon(),
            rule.modulus(code.modulus())
        ),
    ));

    let rank_h = h.rank();
    let rank_g = code.g().rank();
    checks.push(ClaimCheck::new(
        "g_spans_kernel",
        rank_g == code.g().nrows() && rank_h + rank_g == n,
        format!("rank(H) = {rank_h}, rank(G) = {rank_g} of {} rows, n = {n}", code.g().nrows()),
    ));

    let params = code.params();
    checks.push(ClaimCheck::new(
        "params",
        params.n == n && params.k == code.h1().nrows(),
        format!("stored n = {}, k = {}; matrices give n = {n}, k = {}", params.n, params.k, code.h1().nrows()),
    ));

    let validation = validate_code(code, budget);
    for c in &validation.checks {
        checks.push(ClaimCheck {
            name: c.name.to_string(),
            status: c.status.into(),
            detail: c.detail.clone(),
        });
    }

    checks.push(match logical_distance(code.h1(), code.g(), budget) {
        Ok(d) if params.d_verified => ClaimCheck::new(
            "distance",
            d == params.d,
            format!("stored d = {} (verified), exact d = {d}", params.d),
        ),
        Ok(d) => ClaimCheck::new(
            "distance",
            params.d <= d,
            format!("stored d = {} (unverified), exact d = {d}", params.d),
        ),
        Err(Error::BudgetExceeded { required, .. }) => ClaimCheck {
            name: "distance".into(),
            status: if params.d_verified { Status::Fail } else { Status::Skipped },
            detail: format!(
                "stored d = {} ({}); exact enumeration needs {required} > budget {budget}",
                params.d,
                if params.d_verified { "claimed verified" } else { "unverified" }
            ),
        },
        Err(e) => ClaimCheck::new("distance", false, e.to_string()),
    });

    let identity = check_phase_identity(code);
    let coverage = match identity.coverage {
        Coverage::AllRows => "all coefficient vectors",
        Coverage::LogicalRows => "all logical vectors with random stabilizer shifts",
        Coverage::Sampled => "random coefficient vectors",
    };
    checks.push(match &identity.violation {
        None => ClaimCheck::new(
            "phase_identity",
            true,
            format!("{} vectors tested ({coverage})", identity.tested),
        ),
        Some((u, e)) => ClaimCheck::new("phase_identity", false, format!("u = {u:?}: {e}")),
    });

    VerifyReport {
        code_id: code_id(code),
        passed: checks.iter().all(|c| c.status != Status::Fail),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use triortho::code::{build_code, BuildOptions};
    use triortho::field::PrimeModulus;

    fn p7() -> TriorthogonalCode {
        build_code(PrimeModulus::new(7).unwrap(), 2, 1, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn p7_passes_everything() {
        let report = verify_code(&p7(), 100_000_000);
        assert!(report.passed, "{report:?}");
        assert!(report.checks.iter().all(|c| c.status == Status::Pass));
        assert_eq!(report.code_id, "p7-l2-k1-A0");
    }

    #[test]
    fn tampered_epsilon_fails_only_dependent_claims() {
        let code = p7();
        let bad = TriorthogonalCode::from_parts(
            code.modulus(),
            code.l(),
            code.puncture_set().to_vec(),
            code.h0().clone(),
            code.h1().clone(),
            code.g().clone(),
            vec![2],
            code.params(),
        );
        let report = verify_code(&bad, 100_000_000);
        assert!(!report.passed);
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(failed, ["epsilon"]);
    }

    #[test]
    fn large_code_samples_identity() {
        let code = build_code(PrimeModulus::new(41).unwrap(), 12, 6, &BuildOptions::default()).unwrap();
        let out = check_phase_identity(&code);
        assert_eq!(out.coverage, Coverage::Sampled);
        assert_eq!(out.tested, SAMPLES);
        assert!(out.violation.is_none());
        let report = verify_code(&code, 10_000);
        assert!(report.passed, "{report:?}");
    }
}
