//! Exact minimum distance of linear codes over `F_p`.
//!
//! A weight distribution is obtained from whichever side is smaller: the code
//! itself is enumerated directly when `p^dim` is small, otherwise its dual is
//! enumerated and the MacWilliams identity recovers the code's distribution.
//! Minimum weight outside an excluded subspace `E ⊆ C` is the first weight
//! where `A_w(C) > A_w(E)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::enumerate::weight_counts;
use crate::error::{Error, Result};
use crate::field::saturating_pow;
use crate::linalg::FpMatrix;

/// Default cap on the number of enumerated codewords.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Which side of a code was enumerated to get its weight distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Code,
    Dual,
}

/// Number of vectors the cheaper side of `rowspan(m)` has.
pub fn enumeration_cost(m: &FpMatrix) -> u128 {
    let r = m.rank();
    cost_for_rank(m, r).0
}

fn cost_for_rank(m: &FpMatrix, rank: usize) -> (u128, Side) {
    let p = m.modulus().as_u64();
    let direct = saturating_pow(p, rank);
    let dual = saturating_pow(p, m.ncols() - rank);
    if direct <= dual {
        (direct, Side::Code)
    } else {
        (dual, Side::Dual)
    }
}

/// Weight distribution `A_0..A_n` of a linear code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: Vec<BigUint>,
    pub side: Side,
}

impl WeightDistribution {
    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// Smallest positive weight that occurs, if any.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| !self.counts[w].is_zero())
    }
}

/// Weight distribution of `rowspan(m)`, enumerating the cheaper side.
pub fn weight_distribution(m: &FpMatrix, budget: u64) -> Result<WeightDistribution> {
    let basis = m.row_basis();
    let (cost, side) = cost_for_rank(m, basis.nrows());
    if cost > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: cost,
            budget,
            upper_bound: None,
        });
    }
    Ok(distribution_via(&basis, side))
}

/// Weight distribution computed from a chosen side, ignoring any budget.
pub fn distribution_via(m: &FpMatrix, side: Side) -> WeightDistribution {
    let n = m.ncols();
    let q = m.modulus().as_u64();
    match side {
        Side::Code => {
            let basis = m.row_basis();
            WeightDistribution {
                counts: weight_counts(&basis).into_iter().map(BigUint::from).collect(),
                side,
            }
        }
        Side::Dual => {
            let dual = m.kernel_basis();
            let dual_counts = weight_counts(&dual);
            let dual_size = BigUint::from(q).pow(dual.nrows() as u32);
            WeightDistribution {
                counts: macwilliams(&dual_counts, n, q, &dual_size),
                side,
            }
        }
    }
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        table[i][0] = BigInt::one();
        for j in 1..=i {
            table[i][j] = &table[i - 1][j - 1] + &table[i - 1][j];
        }
    }
    table
}

/// Krawtchouk polynomial `K_j(i)` for length `n` over an alphabet of size `q`.
fn krawtchouk(j: usize, i: usize, n: usize, q: u64, binom: &[Vec<BigInt>]) -> BigInt {
    let mut acc = BigInt::zero();
    let qm1 = BigInt::from(q - 1);
    for s in 0..=j.min(i) {
        if j - s > n - i {
            continue;
        }
        let term = &binom[i][s] * &binom[n - i][j - s] * qm1.pow((j - s) as u32);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// MacWilliams transform: the weight distribution of `D^⊥` from that of `D`.
///
/// `dual_counts[i]` is the number of weight-`i` words of `D`, and `dual_size`
/// is `|D|`. Panics if the transform does not divide exactly, which can only
/// happen when the inputs are not the distribution of a linear code.
pub fn macwilliams(dual_counts: &[u64], n: usize, q: u64, dual_size: &BigUint) -> Vec<BigUint> {
    let binom = binomials(n);
    let size = BigInt::from(dual_size.clone());
    (0..=n)
        .map(|j| {
            let mut acc = BigInt::zero();
            for (i, &b) in dual_counts.iter().enumerate() {
                if b != 0 {
                    acc += BigInt::from(b) * krawtchouk(j, i, n, q, &binom);
                }
            }
            let (quot, rem) = (&acc / &size, &acc % &size);
            assert!(rem.is_zero(), "MacWilliams transform is not integral");
            quot.to_biguint().expect("weight counts are nonnegative")
        })
        .collect()
}

/// Basis of `rowspan(a) ∩ rowspan(b)`.
pub fn intersection(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    let duals = a.kernel_basis().stack(&b.kernel_basis())?;
    Ok(duals.kernel_basis())
}

/// Minimum Hamming weight over nonzero codewords of `rowspan(g)` that do not
/// lie in `rowspan(exclude)`. Exact; fails with [`Error::BudgetExceeded`] when
/// neither side of the code (or of the excluded part) is small enough.
pub fn min_weight(g: &FpMatrix, exclude: Option<&FpMatrix>, budget: u64) -> Result<usize> {
    let basis = g.row_basis();
    if basis.nrows() == 0 {
        return Err(Error::NoCodewords);
    }
    let excluded = match exclude {
        None => None,
        Some(e) => {
            let eb = e.row_basis();
            if eb.nrows() == 0 {
                None
            } else if basis.stack(&eb)?.rank() == basis.nrows() {
                Some(eb)
            } else {
                Some(intersection(&basis, &eb)?.row_basis())
            }
        }
    };
    if let Some(e) = &excluded {
        if e.nrows() == basis.nrows() {
            return Err(Error::NoCodewords);
        }
    }

    let (code_cost, code_side) = cost_for_rank(&basis, basis.nrows());
    let (excl_cost, excl_side) = match &excluded {
        Some(e) => cost_for_rank(e, e.nrows()),
        None => (0, Side::Code),
    };
    let total = code_cost.saturating_add(excl_cost);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: total,
            budget,
            upper_bound: row_upper_bound(g, excluded.as_ref()),
        });
    }

    let code = distribution_via(&basis, code_side);
    let excl = excluded.as_ref().map(|e| distribution_via(e, excl_side));
    (1..=g.ncols())
        .find(|&w| {
            let c = code.count(w);
            match &excl {
                None => !c.is_zero(),
                Some(e) => c > e.count(w),
            }
        })
        .ok_or(Error::NoCodewords)
}

/// Lightest row of `g` outside `rowspan(exclude)`: an upper bound on the
/// minimum weight that costs no enumeration.
fn row_upper_bound(g: &FpMatrix, exclude: Option<&FpMatrix>) -> Option<usize> {
    (0..g.nrows())
        .map(|r| g.row_vector(r))
        .filter(|v| !v.is_zero())
        .filter(|v| match exclude {
            None => true,
            Some(e) => matches!(e.in_rowspan(v), Ok(None)),
        })
        .map(|v| v.weight())
        .min()
}
