//! Diagonal gates `U_{m,a} = Σ_j exp(2πi j^a / p^m) |j⟩⟨j|` and the exact
//! phase identities behind their transversal action on tri-orthogonal codes.
//!
//! Phases are kept as exact exponents `numerator / p^m`.

use alloc::vec::Vec;

use crate::enumerate::Odometer;
use crate::error::{Error, Result};
use crate::field::{saturating_pow, PrimeModulus};
use crate::linalg::{FpMatrix, FpVector};
use crate::star::{check_triorthogonal, power_weight};

/// `U_{m,a}` on a `p`-dimensional qudit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GateSpec {
    p: PrimeModulus,
    m: u32,
    a: u32,
}

impl GateSpec {
    /// Requires `m ≥ 1`, `1 ≤ a ≤ p−1` and `p^m < 2^63`.
    pub fn new(p: PrimeModulus, m: u32, a: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ParameterOutOfRange("precision m must be ≥ 1"));
        }
        if a == 0 || a >= p.get() {
            return Err(Error::UnsupportedGate { p: p.get(), m, a });
        }
        if saturating_pow(p.as_u64(), m as usize) >= 1u128 << 63 {
            return Err(Error::ParameterOutOfRange("p^m must be below 2^63"));
        }
        Ok(GateSpec { p, m, a })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    /// `p^m`.
    pub fn denominator(&self) -> u64 {
        self.p.as_u64().pow(self.m)
    }
}

impl core::fmt::Display for GateSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "U_{{{},{}}} (p={})", self.m, self.a, self.p.get())
    }
}

/// The phase `exp(2πi · numerator / modulus)`, stored exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PhaseExponent {
    numerator: u64,
    modulus: u64,
}

impl PhaseExponent {
    pub fn new(numerator: u64, modulus: u64) -> Self {
        assert!(modulus > 0, "phase modulus must be positive");
        PhaseExponent {
            numerator: numerator % modulus,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(0, modulus)
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn checked_add(self, other: PhaseExponent) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::DimensionMismatch {
                expected: self.modulus as usize,
                found: other.modulus as usize,
            });
        }
        let s = (self.numerator as u128 + other.numerator as u128) % self.modulus as u128;
        Ok(Self::new(s as u64, self.modulus))
    }

    /// Fraction of a full turn, in `[0, 1)`.
    pub fn turns(&self) -> f64 {
        self.numerator as f64 / self.modulus as f64
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Phase of `U_{m,a}` on `|j⟩`: `j^a mod p^m`, `j` taken in `[0, p)`.
pub fn gate_phase(g: &GateSpec, j: u32) -> PhaseExponent {
    let q = g.denominator();
    let j = j % g.p.get();
    PhaseExponent::new(powmod(j as u64, g.a as u64, q), q)
}

/// Clifford-hierarchy level `(p−1)(m−1) + a`.
pub fn hierarchy_level(g: &GateSpec) -> u64 {
    (g.p.as_u64() - 1) * (g.m as u64 - 1) + g.a as u64
}

/// `U_{1,3}` for `p ≥ 5`, `U_{2,1}` for `p = 3`.
pub fn third_level_gate(p: PrimeModulus) -> Result<GateSpec> {
    match p.get() {
        2 => Err(Error::UnsupportedGate { p: 2, m: 1, a: 3 }),
        3 => GateSpec::new(p, 2, 1),
        _ => GateSpec::new(p, 1, 3),
    }
}

/// `f = Σ_a u_a h^a` over the rows of `[H1; H0]`; `u` may cover only `H1`,
/// in which case the `H0` coefficients are zero.
fn combine_rows(h1: &FpMatrix, h0: &FpMatrix, u: &FpVector) -> Result<(FpVector, Vec<u32>)> {
    let p = h1.modulus();
    let k = h1.nrows();
    let m = k + h0.nrows();
    if u.len() != k && u.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: u.len(),
        });
    }
    if h0.ncols() != h1.ncols() {
        return Err(Error::DimensionMismatch {
            expected: h1.ncols(),
            found: h0.ncols(),
        });
    }
    let mut f = alloc::vec![0u32; h1.ncols()];
    let rows = h1.rows().chain(h0.rows());
    for (&c, row) in u.entries().iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (x, &h) in f.iter_mut().zip(row) {
            *x = p.add(*x, p.mul(c, h));
        }
    }
    Ok((FpVector::new(p, f)?, u.entries()[..k].to_vec()))
}

/// Checks `Σ_i f_i³ = Σ_a u_a³ ε_a (mod p)` for `f = Σ_a u_a h^a` and returns
/// the common value. `ε_a = Σ_i (h^a_i)³` is taken over the `H1` rows.
pub fn cubic_phase_sum(h1: &FpMatrix, h0: &FpMatrix, u: &FpVector) -> Result<PhaseExponent> {
    let p = h1.modulus();
    let (f, logical) = combine_rows(h1, h0, u)?;
    let lhs = power_weight(&f, 3);
    let mut rhs = 0u32;
    for (a, &ua) in logical.iter().enumerate() {
        let eps = power_weight(&h1.row_vector(a), 3);
        rhs = p.add(rhs, p.mul(p.pow(ua, 3), eps));
    }
    if lhs != rhs {
        return Err(Error::IdentityViolation {
            lhs: lhs as u64,
            rhs: rhs as u64,
            modulus: p.as_u64(),
        });
    }
    Ok(PhaseExponent::new(lhs as u64, p.as_u64()))
}

/// `Σ values mod 9` computed only through ternary digits `v = v0 + 3·v1`:
/// every inner operation is mod 3, with carries of the low digit folded into
/// the high digit through elementary symmetric sums.
pub fn ternary_mod9_sum(values: &[u32]) -> u32 {
    // e1, e2, e3: elementary symmetric sums of the low digits.
    // sq: Σ v0²; mixed: Σ_{i<j} (v0_i² v0_j + v0_i v0_j²); high: Σ v1.
    let (mut e1, mut e2, mut e3, mut sq, mut mixed, mut high) = (0u32, 0u32, 0u32, 0u32, 0u32, 0u32);
    for &v in values {
        let v = v % 9;
        let (b, c) = (v % 3, v / 3);
        mixed = (mixed + sq * b + e1 * b * b) % 3;
        e3 = (e3 + e2 * b) % 3;
        e2 = (e2 + e1 * b) % 3;
        e1 = (e1 + b) % 3;
        sq = (sq + b * b) % 3;
        high = (high + c) % 3;
    }
    (e1 + 9 * 3 - 3 * e2 - 3 * mixed + 3 * e3 + 3 * high) % 9
}

/// Qutrit analogue of [`cubic_phase_sum`]: checks
/// `Σ_i lift(f_i) = Σ_a u_a ε_a (mod 9)` with `ε_a = Σ_i lift(h^a_i) mod 9`
/// and returns the common value.
pub fn p3_phase_sum(h1: &FpMatrix, h0: &FpMatrix, u: &FpVector) -> Result<PhaseExponent> {
    if h1.modulus().get() != 3 {
        return Err(Error::ParameterOutOfRange("p3_phase_sum needs p = 3"));
    }
    let (f, logical) = combine_rows(h1, h0, u)?;
    let lhs = ternary_mod9_sum(f.entries());
    let mut rhs = 0u32;
    for (a, &ua) in logical.iter().enumerate() {
        let eps = ternary_mod9_sum(h1.row(a));
        rhs = (rhs + ua * eps) % 9;
    }
    if lhs != rhs {
        return Err(Error::IdentityViolation {
            lhs: lhs as u64,
            rhs: rhs as u64,
            modulus: 9,
        });
    }
    Ok(PhaseExponent::new(lhs as u64, 9))
}

/// Whether `[H1; H0]` over `F_3` carries a transversal `U_{2,1}`: it is
/// tri-orthogonal with independent rows, `H1` rows have nonzero squared
/// weight and `ε ≢ 0 (mod 3)`, `H0` rows have zero squared weight, and the
/// mod-9 phase identity holds for every coefficient vector.
pub fn is_qutrit_code(h1: &FpMatrix, h0: &FpMatrix) -> bool {
    let p = h1.modulus();
    if p.get() != 3 || h1.nrows() == 0 {
        return false;
    }
    let Ok(h) = h1.stack(h0) else { return false };
    if check_triorthogonal(&h).is_err() || h.rank() != h.nrows() {
        return false;
    }
    for r in 0..h1.nrows() {
        let row = h1.row_vector(r);
        if power_weight(&row, 2) == 0 || ternary_mod9_sum(row.entries()).is_multiple_of(3) {
            return false;
        }
    }
    if (0..h0.nrows()).any(|r| power_weight(&h0.row_vector(r), 2) != 0) {
        return false;
    }
    let mut odo = Odometer::new(p, h.nrows());
    while odo.advance().is_some() {
        let u = FpVector::new(p, odo.digits().to_vec()).expect("digits < p");
        if p3_phase_sum(h1, h0, &u).is_err() {
            return false;
        }
    }
    true
}

/// Smallest qutrit code with `k` logical rows and `r0` stabilizer rows, as
/// `(H1, H0)`. Candidates are multisets of nonzero columns over `F_3^{k+r0}`,
/// searched by length `n = 1..=n_max` and then lexicographically by column
/// type, so the result is deterministic.
pub fn search_qutrit_code(k: usize, r0: usize, n_max: usize) -> Option<(FpMatrix, FpMatrix)> {
    let p = PrimeModulus::new(3).expect("prime");
    let rows = k + r0;
    if k == 0 || rows == 0 || rows > 6 {
        return None;
    }
    let mut types: Vec<Vec<u32>> = Vec::new();
    let mut odo = Odometer::new(p, rows);
    while odo.advance().is_some() {
        if odo.digits().iter().any(|&x| x != 0) {
            types.push(odo.digits().to_vec());
        }
    }
    for n in rows..=n_max {
        // Non-decreasing type indices: one representative per column multiset.
        let mut idx = alloc::vec![0usize; n];
        loop {
            if let Some(found) = candidate(p, &types, &idx, k, rows) {
                return Some(found);
            }
            // Rightmost position that can still grow; everything after it resets.
            let Some(i) = (0..n).rev().find(|&i| idx[i] + 1 < types.len()) else {
                break;
            };
            idx[i] += 1;
            let v = idx[i];
            idx[i + 1..].iter_mut().for_each(|x| *x = v);
        }
    }
    None
}

fn candidate(
    p: PrimeModulus,
    types: &[Vec<u32>],
    idx: &[usize],
    k: usize,
    rows: usize,
) -> Option<(FpMatrix, FpMatrix)> {
    let n = idx.len();
    let mut h = FpMatrix::zeros(p, rows, n);
    for (c, &t) in idx.iter().enumerate() {
        for (r, &x) in types[t].iter().enumerate() {
            h.set(r, c, x);
        }
    }
    let h1 = h.select_rows(&(0..k).collect::<Vec<_>>());
    let h0 = h.select_rows(&(k..rows).collect::<Vec<_>>());
    is_qutrit_code(&h1, &h0).then_some((h1, h0))
}
