//! Overhead exponent `γ = log(n/k) / log(d)` over the punctured Reed-Solomon
//! family `[[p−k, k, l−k]]` and the search for small `γ` across primes.

use alloc::vec::Vec;

use crate::code::{logical_distance, TriorthogonalCode};
use crate::error::{Error, Result};
use crate::field::{primes_up_to, PrimeModulus};

/// Natural-log ratio `ln(n/k) / ln(d)`.
pub fn gamma(n: usize, k: usize, d: usize) -> Result<f64> {
    if k == 0 || n <= k {
        return Err(Error::ParameterOutOfRange("γ needs n > k ≥ 1"));
    }
    if d < 2 {
        return Err(Error::ParameterOutOfRange("γ needs d ≥ 2"));
    }
    Ok(libm::log(n as f64 / k as f64) / libm::log(d as f64))
}

/// `(n, k, d) = (p−k, k, l−k)` for `3l ≤ p+1`, `k ≤ l`.
pub fn family_params(p: PrimeModulus, l: usize, k: usize) -> Result<(usize, usize, usize)> {
    let pu = p.get() as usize;
    if 3 * l > pu + 1 {
        return Err(Error::TriplyEvenViolated { p: p.get(), l });
    }
    if k > l {
        return Err(Error::ParameterOutOfRange("need k ≤ l"));
    }
    Ok((pu - k, k, l - k))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OverheadRecord {
    pub p: u32,
    pub l: usize,
    pub k: usize,
    pub n: usize,
    pub d: usize,
    pub gamma: f64,
}

impl OverheadRecord {
    pub fn new(p: PrimeModulus, l: usize, k: usize) -> Result<Self> {
        let (n, k, d) = family_params(p, l, k)?;
        Ok(OverheadRecord {
            p: p.get(),
            l,
            k,
            n,
            d,
            gamma: gamma(n, k, d)?,
        })
    }

    /// Strict preference: smaller `γ`, then smaller `l`, then smaller `k`.
    fn better_than(&self, other: &OverheadRecord) -> bool {
        (self.gamma, self.l, self.k) < (other.gamma, other.l, other.k)
    }
}

fn l_max(p: u32) -> usize {
    (p as usize + 1) / 3
}

/// Best record for one `(p, k)`. For fixed `n` and `k`, `γ` falls as `d`
/// grows, so `l = ⌊(p+1)/3⌋` is optimal.
fn best_for_k(p: PrimeModulus, k: usize) -> Option<OverheadRecord> {
    let l = l_max(p.get());
    (l >= k + 2).then(|| OverheadRecord::new(p, l, k).expect("admissible"))
}

/// For each prime `p ≤ p_max` and each `k` with an admissible `l`, the
/// record minimizing `γ` over `l`. Sorted by `p`, then `k`.
pub fn search_best_gamma(p_max: u32) -> Vec<OverheadRecord> {
    let mut out = Vec::new();
    for p in primes_up_to(p_max) {
        let m = PrimeModulus::new(p as u64).expect("prime");
        out.extend((1..).map_while(|k| best_for_k(m, k)));
    }
    out
}

/// Same frontier as [`search_best_gamma`], by scanning every `(l, k)`.
pub fn search_exhaustive(p_max: u32) -> Vec<OverheadRecord> {
    let mut out = Vec::new();
    for p in primes_up_to(p_max) {
        let m = PrimeModulus::new(p as u64).expect("prime");
        for k in 1..l_max(p) {
            let mut best: Option<OverheadRecord> = None;
            for l in k + 2..=l_max(p) {
                let r = OverheadRecord::new(m, l, k).expect("admissible");
                if best.as_ref().is_none_or(|b| r.better_than(b)) {
                    best = Some(r);
                }
            }
            out.extend(best);
        }
    }
    out
}

/// The minimum-`γ` record of each prime, in order of `p`.
pub fn best_per_prime(records: &[OverheadRecord]) -> Vec<OverheadRecord> {
    let mut out: Vec<OverheadRecord> = Vec::new();
    for r in records {
        match out.last_mut() {
            Some(last) if last.p == r.p => {
                if r.better_than(last) {
                    *last = *r;
                }
            }
            _ => out.push(*r),
        }
    }
    out.sort_by_key(|r| r.p);
    out
}

/// [`best_per_prime`] of [`search_best_gamma`] without materializing the
/// full frontier.
pub fn search_best_per_prime(p_max: u32) -> Vec<OverheadRecord> {
    let mut out = Vec::new();
    for p in primes_up_to(p_max) {
        let m = PrimeModulus::new(p as u64).expect("prime");
        let mut best: Option<OverheadRecord> = None;
        for r in (1..).map_while(|k| best_for_k(m, k)) {
            if best.as_ref().is_none_or(|b| r.better_than(b)) {
                best = Some(r);
            }
        }
        out.extend(best);
    }
    out
}

/// Output of [`gamma_scaling_check`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingSummary {
    /// `max_p γ(p) · ln p`.
    pub c_fit: f64,
    /// Whether the running minimum of best `γ` is non-increasing in `p`.
    pub monotone_ok: bool,
    pub primes: usize,
}

/// Fits `best γ(p) ≤ c / ln p` over at least ten primes.
pub fn gamma_scaling_check(records: &[OverheadRecord]) -> Result<ScalingSummary> {
    let best = best_per_prime(records);
    if best.len() < 10 {
        return Err(Error::TooFewRecords {
            found: best.len(),
            needed: 10,
        });
    }
    let mut c_fit = 0.0f64;
    let mut running = f64::INFINITY;
    let mut previous = f64::INFINITY;
    let mut monotone_ok = true;
    for r in &best {
        c_fit = c_fit.max(r.gamma * libm::log(r.p as f64));
        running = running.min(r.gamma);
        if running > previous {
            monotone_ok = false;
        }
        previous = running;
    }
    Ok(ScalingSummary {
        c_fit,
        monotone_ok: monotone_ok && c_fit.is_finite(),
        primes: best.len(),
    })
}

/// Weight of the lightest undetected Z-type logical error: the exponent of
/// leading-order error suppression.
pub fn error_suppression_order(code: &TriorthogonalCode, budget: u64) -> Result<usize> {
    logical_distance(code.h1(), code.g(), budget)
}
