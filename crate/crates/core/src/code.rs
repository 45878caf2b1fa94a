//! Assembly and validation of tri-orthogonal CSS codes.
//!
//! A tri-orthogonal matrix `H` is split into `H1` (rows with nonzero squared
//! weight: logical representatives) and `H0` (rows with zero squared weight:
//! X stabilizers). `G`, a basis of the kernel of `H`, gives the Z stabilizers.
//! The Reed-Solomon pipeline obtains `H` by putting the generator of `RS_l`
//! into almost-systematic form on the puncture set `A`:
//!
//! ```text
//!         A     A^c
//!     ( −1_k | H1 )
//!     (  0   | H0 )
//! ```

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::linalg::{FpMatrix, FpVector};
use crate::reed_solomon::{rs_generator, rs_triply_even, RsCodeSpec};
use crate::star::{check_triorthogonal, power_weight};
use crate::weight::{min_weight, DEFAULT_BUDGET};

/// `[[n, k, d]]`, with `d_verified` set when `d` came from exact enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_verified: bool,
}

/// How the logical gate powers `ε_a` are computed from the rows of `H1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsilonRule {
    /// `Σ_i (h_i)^3 mod p`, for the `U_{1,3}` gate.
    CubicModP,
    /// `Σ_i h_i mod 9` over the integer lift of each entry, for `U_{2,1}` on qutrits.
    LinearMod9,
}

impl EpsilonRule {
    pub fn for_prime(p: PrimeModulus) -> Self {
        if p.get() == 3 {
            EpsilonRule::LinearMod9
        } else {
            EpsilonRule::CubicModP
        }
    }

    pub fn modulus(self, p: PrimeModulus) -> u64 {
        match self {
            EpsilonRule::CubicModP => p.as_u64(),
            EpsilonRule::LinearMod9 => 9,
        }
    }

    pub fn weight(self, row: &FpVector) -> u64 {
        match self {
            EpsilonRule::CubicModP => power_weight(row, 3) as u64,
            EpsilonRule::LinearMod9 => row.entries().iter().map(|&x| x as u64).sum::<u64>() % 9,
        }
    }
}

/// An assembled tri-orthogonal quantum code. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriorthogonalCode {
    modulus: PrimeModulus,
    l: Option<usize>,
    puncture: Vec<usize>,
    h0: FpMatrix,
    h1: FpMatrix,
    g: FpMatrix,
    epsilon: Vec<u64>,
    params: CodeParams,
    distance_literal: Option<usize>,
}

/// Knobs for [`build_code`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Puncture positions; defaults to `{0, …, k−1}`.
    pub puncture: Option<Vec<usize>>,
    /// Enumeration budget for exact distances.
    pub budget: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            puncture: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl TriorthogonalCode {
    /// Builds a code from an arbitrary matrix `H`, partitioning its rows by
    /// squared weight and taking `G` as a kernel basis. The distance is
    /// exact if within `budget`, otherwise the cheap row bound, unverified.
    pub fn from_matrix(h: &FpMatrix, budget: u64) -> Result<Self> {
        let (h0, h1) = partition_rows(h);
        Self::assemble(h.modulus(), None, Vec::new(), h1, h0, None, budget)
    }

    /// Reassembles a code from stored parts without recomputing anything.
    /// Use [`TriorthogonalCode::check_invariants`] or [`validate_code`] on
    /// untrusted input.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        modulus: PrimeModulus,
        l: Option<usize>,
        puncture: Vec<usize>,
        h0: FpMatrix,
        h1: FpMatrix,
        g: FpMatrix,
        epsilon: Vec<u64>,
        params: CodeParams,
    ) -> Self {
        TriorthogonalCode {
            modulus,
            l,
            puncture,
            h0,
            h1,
            g,
            epsilon,
            params,
            distance_literal: None,
        }
    }

    fn assemble(
        modulus: PrimeModulus,
        l: Option<usize>,
        puncture: Vec<usize>,
        h1: FpMatrix,
        h0: FpMatrix,
        claimed_distance: Option<usize>,
        budget: u64,
    ) -> Result<Self> {
        let h = h1.stack(&h0)?;
        let g = h.kernel_basis();
        let rule = EpsilonRule::for_prime(modulus);
        let epsilon = (0..h1.nrows()).map(|r| rule.weight(&h1.row_vector(r))).collect();
        let n = h.ncols();
        let k = h1.nrows();

        let (d, d_verified) = match logical_distance(&h1, &g, budget) {
            Ok(d) => (d, true),
            Err(Error::BudgetExceeded { upper_bound, .. }) => {
                (claimed_distance.or(upper_bound).unwrap_or(0), false)
            }
            Err(Error::NoCodewords | Error::NoLogicalQudits) => (0, false),
            Err(e) => return Err(e),
        };
        let distance_literal = if k == 0 {
            None
        } else {
            min_weight(&h1, Some(&g), budget).ok()
        };
        let code = TriorthogonalCode {
            modulus,
            l,
            puncture,
            h0,
            h1,
            g,
            epsilon,
            params: CodeParams {
                n,
                k,
                d,
                d_verified,
            },
            distance_literal,
        };
        code.check_invariants()?;
        Ok(code)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// RS dimension, for codes built by [`build_code`].
    pub fn l(&self) -> Option<usize> {
        self.l
    }

    pub fn puncture_set(&self) -> &[usize] {
        &self.puncture
    }

    pub fn h0(&self) -> &FpMatrix {
        &self.h0
    }

    pub fn h1(&self) -> &FpMatrix {
        &self.h1
    }

    pub fn g(&self) -> &FpMatrix {
        &self.g
    }

    /// `[H1; H0]`.
    pub fn stacked_h(&self) -> FpMatrix {
        self.h1.stack(&self.h0).expect("same shape")
    }

    pub fn epsilon(&self) -> &[u64] {
        &self.epsilon
    }

    pub fn epsilon_rule(&self) -> EpsilonRule {
        EpsilonRule::for_prime(self.modulus)
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    /// Minimum weight over `span(H1) \ span(G)`, the literal reading of the
    /// distance formula; `None` if not computed.
    pub fn distance_literal(&self) -> Option<usize> {
        self.distance_literal
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    /// Checks every structural invariant of an assembled code.
    pub fn check_invariants(&self) -> Result<()> {
        let h = self.stacked_h();
        check_triorthogonal(&h).map_err(Error::NotTriorthogonal)?;
        if (0..self.h0.nrows()).any(|r| power_weight(&self.h0.row_vector(r), 2) != 0) {
            return Err(Error::InvariantViolated("H0 row with nonzero squared weight"));
        }
        if (0..self.h1.nrows()).any(|r| power_weight(&self.h1.row_vector(r), 2) == 0) {
            return Err(Error::InvariantViolated("H1 row with zero squared weight"));
        }
        if !h.mul(&self.g.transpose())?.is_zero() {
            return Err(Error::InvariantViolated("H · G^T ≠ 0"));
        }
        if h.rank() != h.nrows() {
            return Err(Error::InvariantViolated("rows of H are dependent"));
        }
        if h.nrows() + self.g.rank() != h.ncols() {
            return Err(Error::InvariantViolated("rank(H) + rank(G) ≠ n"));
        }
        let rule = self.epsilon_rule();
        let expected: Vec<u64> = (0..self.h1.nrows())
            .map(|r| rule.weight(&self.h1.row_vector(r)))
            .collect();
        if expected != self.epsilon {
            return Err(Error::InvariantViolated("ε does not match the rows of H1"));
        }
        Ok(())
    }
}

/// Minimum weight of `span([H1; G]) \ span(G)`: the lightest Z-type logical
/// operator.
pub fn logical_distance(h1: &FpMatrix, g: &FpMatrix, budget: u64) -> Result<usize> {
    if h1.nrows() == 0 {
        return Err(Error::NoLogicalQudits);
    }
    min_weight(&h1.stack(g)?, Some(g), budget)
}

/// Row-equivalent basis of `rowspan(rs_gen)` that is `−I` on the puncture
/// columns for the first `k` rows and zero there for the rest; returns those
/// two blocks restricted to the complement as `(H1, H0)`.
pub fn systematic_puncture(rs_gen: &FpMatrix, puncture: &[usize]) -> Result<(FpMatrix, FpMatrix)> {
    let k = puncture.len();
    let mut m = rs_gen.clone();
    if let Err(rank) = m.eliminate_on_columns(puncture) {
        return Err(Error::PunctureRankDeficient { rank, wanted: k });
    }
    for r in 0..k {
        m.negate_row(r);
    }
    let keep: Vec<usize> = (0..m.ncols()).filter(|c| !puncture.contains(c)).collect();
    let h1 = m.select_rows(&(0..k).collect::<Vec<_>>()).select_columns(&keep);
    let h0 = m
        .select_rows(&(k..m.nrows()).collect::<Vec<_>>())
        .select_columns(&keep);
    Ok((h1, h0))
}

/// Splits rows by squared weight: `(H0, H1)` with `Σ h_i² = 0` in `H0`.
/// Row order is preserved within each part.
pub fn partition_rows(h: &FpMatrix) -> (FpMatrix, FpMatrix) {
    let (zero, nonzero): (Vec<usize>, Vec<usize>) =
        (0..h.nrows()).partition(|&r| power_weight(&h.row_vector(r), 2) == 0);
    (h.select_rows(&zero), h.select_rows(&nonzero))
}

/// The tri-orthogonal code obtained by puncturing `RS_l` on `k` positions:
/// claimed parameters `[[p−k, k, l−k]]`.
pub fn build_code(p: PrimeModulus, l: usize, k: usize, opts: &BuildOptions) -> Result<TriorthogonalCode> {
    if !rs_triply_even(p, l) {
        return Err(Error::TriplyEvenViolated { p: p.get(), l });
    }
    if k == 0 || k > l {
        return Err(Error::ParameterOutOfRange("need 1 ≤ k ≤ l"));
    }
    let puncture = opts.puncture.clone().unwrap_or_else(|| (0..k).collect());
    if puncture.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: puncture.len(),
        });
    }
    let spec = RsCodeSpec::new(p, l, puncture)?;
    let gen = rs_generator(p, l)?;
    let (h1, h0) = systematic_puncture(&gen, spec.puncture_set())?;

    // The squared-weight partition must reproduce the systematic split.
    let (part0, part1) = partition_rows(&h1.stack(&h0)?);
    if part1 != h1 || part0 != h0 {
        return Err(Error::InvariantViolated("squared-weight partition disagrees with puncture"));
    }
    TriorthogonalCode::assemble(
        p,
        Some(l),
        spec.puncture_set().to_vec(),
        h1,
        h0,
        Some(l - k),
        opts.budget,
    )
}

/// Outcome of a single named check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: String) -> Self {
        Check {
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        }
    }

    fn skipped(name: &'static str, detail: String) -> Self {
        Check {
            name,
            status: CheckStatus::Skipped,
            detail,
        }
    }
}

/// Result of [`validate_code`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// Rescaling factors that bring each X logical into canonical pairing.
    pub alphas: Vec<u32>,
    /// Minimum weight of `span([H1;G]) \ span(G)`.
    pub d_z: Option<usize>,
    /// Minimum weight of `span(H) \ span(H0)`.
    pub d_x: Option<usize>,
    /// Minimum weight of `span(H1) \ span(G)`.
    pub d_literal: Option<usize>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks that `CSS(X, H0; Z, G)` is a valid code with `k` logical qudits.
pub fn validate_code(code: &TriorthogonalCode, budget: u64) -> ValidationReport {
    let p = code.modulus;
    let h0 = &code.h0;
    let h1 = &code.h1;
    let g = &code.g;
    let k = h1.nrows();
    let n = code.params.n;
    let mut checks = Vec::new();

    let ortho = |m: &FpMatrix| m.mul(&g.transpose()).map(|x| x.is_zero()).unwrap_or(false);
    let h0_ok = ortho(h0);
    let h1_ok = ortho(h1);
    checks.push(Check::new(
        "stabilizer_orthogonality",
        h0_ok && h1_ok,
        format!("H0·G^T = 0: {h0_ok}, H1·G^T = 0: {h1_ok}"),
    ));

    // Pairing between logical X (rows of H1) and logical Z (rows of H1).
    let mut alphas = Vec::with_capacity(k);
    let mut pairing_ok = true;
    let mut detail = String::new();
    for a in 0..k {
        for b in 0..k {
            let v = crate::linalg::dot(p, h1.row(a), h1.row(b));
            if a != b && v != 0 {
                pairing_ok = false;
                detail = format!("logicals {a} and {b} pair to {v}");
            }
        }
        match p.inv(crate::linalg::dot(p, h1.row(a), h1.row(a))) {
            Ok(alpha) => alphas.push(alpha),
            Err(_) => {
                pairing_ok = false;
                alphas.push(0);
                detail = format!("logical {a} pairs trivially with itself");
            }
        }
    }
    if pairing_ok {
        // After rescaling X logicals, the pairing matrix must be the identity.
        for (a, &alpha) in alphas.iter().enumerate() {
            let scaled = h1.row_vector(a).scale(alpha);
            for b in 0..k {
                let v = scaled.dot(&h1.row_vector(b)).unwrap_or(u32::MAX);
                if v != u32::from(a == b) {
                    pairing_ok = false;
                    detail = format!("rescaled pairing ({a},{b}) = {v}");
                }
            }
        }
        if pairing_ok {
            detail = format!("α = {alphas:?}");
        }
    }
    checks.push(Check::new("canonical_commutation", pairing_ok, detail));

    let r1 = h1.rank();
    let r0 = h0.rank();
    let r10 = h1.stack(h0).map(|m| m.rank()).unwrap_or(0);
    checks.push(Check::new(
        "logical_independence",
        r1 == k && r10 == r1 + r0,
        format!("rank(H1) = {r1} of {k}, rank([H1;H0]) = {r10}, rank(H0) = {r0}"),
    ));

    let rg = g.rank();
    let logical = n as i64 - r0 as i64 - rg as i64;
    checks.push(Check::new(
        "logical_dimension",
        logical == k as i64 && code.params.k == k,
        format!("n − rank(H0) − rank(G) = {logical}, rows of H1 = {k}, stated k = {}", code.params.k),
    ));

    let h0_in_g = g.stack(h0).map(|m| m.rank() == rg).unwrap_or(false);
    checks.push(Check::new(
        "h0_within_g",
        h0_in_g,
        format!("span(H0) ⊆ span(G): {h0_in_g}"),
    ));

    let d_z = logical_distance(h1, g, budget).ok();
    let d_x = h1
        .stack(h0)
        .ok()
        .filter(|_| k > 0)
        .and_then(|h| min_weight(&h, Some(h0), budget).ok());
    let d_literal = if k > 0 {
        min_weight(h1, Some(g), budget).ok()
    } else {
        None
    };
    match (d_z, d_x) {
        (Some(z), Some(x)) => checks.push(Check::new(
            "distance_order",
            z <= x,
            format!("d_Z = {z}, d_X = {x}"),
        )),
        _ => checks.push(Check::skipped(
            "distance_order",
            format!("distances not enumerable within budget {budget}"),
        )),
    }

    ValidationReport {
        checks,
        alphas,
        d_z,
        d_x,
        d_literal,
    }
}

/// Computational-basis labels in the support of the encoded state `|u⟩`:
/// `{Σ_a u_a h^a + h : h ∈ span(H0)}`, sorted.
pub fn encoded_state_support(code: &TriorthogonalCode, u: &FpVector) -> Result<Vec<FpVector>> {
    let shift = code.h1.combine(u.entries())?;
    let basis = code.h0.row_basis();
    let p = code.modulus;
    let mut out = BTreeSet::new();
    crate::enumerate::for_each_codeword(&basis, |_, w| {
        let entries = w
            .iter()
            .zip(shift.entries())
            .map(|(&a, &b)| p.add(a, b))
            .collect();
        out.insert(FpVector::new(p, entries).expect("reduced"));
    });
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn p7() -> TriorthogonalCode {
        build_code(fp(7), 2, 1, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn systematic_puncture_p7() {
        let gen = rs_generator(fp(7), 2).unwrap();
        let (h1, h0) = systematic_puncture(&gen, &[0]).unwrap();
        assert_eq!(h1.to_rows(), vec![vec![6; 6]]);
        assert_eq!(h0.to_rows(), vec![vec![1, 2, 3, 4, 5, 6]]);
        let row = h1.row_vector(0);
        assert_eq!(power_weight(&row, 3), 1);
        assert_eq!(power_weight(&row, 2), 6);
    }

    #[test]
    fn systematic_puncture_rejects_rank_deficient_columns() {
        // RS_1 has rank 1 on any pair of columns.
        let gen = rs_generator(fp(7), 1).unwrap();
        assert_eq!(
            systematic_puncture(&gen, &[0, 1]),
            Err(Error::PunctureRankDeficient { rank: 1, wanted: 2 })
        );
    }

    #[test]
    fn partition_examples() {
        let code = p7();
        let (h0, h1) = partition_rows(&code.stacked_h());
        assert_eq!(&h0, code.h0());
        assert_eq!(&h1, code.h1());
        let z = FpMatrix::zeros(fp(5), 3, 4);
        let (h0, h1) = partition_rows(&z);
        assert_eq!(h0.nrows(), 3);
        assert_eq!(h1.nrows(), 0);
    }

    #[test]
    fn p7_code() {
        let code = p7();
        assert_eq!(code.epsilon(), &[1]);
        let params = code.params();
        assert_eq!((params.n, params.k), (6, 1));
        // Weight-2 logical: (1,0,0,0,0,...) cannot commute with H0 = (1..6),
        // but e.g. 2·e_1 − e_2 does, so d_Z = 2 = l − k + 1.
        assert_eq!(params.d, 2);
        assert!(params.d_verified);
        assert_eq!(code.g().nrows(), 4);
    }

    #[test]
    fn large_codes_have_formula_parameters() {
        let code = build_code(fp(41), 12, 6, &BuildOptions::default()).unwrap();
        assert_eq!(code.params(), CodeParams { n: 35, k: 6, d: 6, d_verified: false });
        assert!(code.epsilon().iter().all(|&e| e == 1));
    }

    #[test]
    fn p13_distance_is_exact() {
        let code = build_code(fp(13), 4, 1, &BuildOptions::default()).unwrap();
        let params = code.params();
        assert_eq!((params.n, params.k), (12, 1));
        assert!(params.d_verified);
        // PRS_{9,{0}} is MDS with length 12 and dimension 9.
        assert_eq!(params.d, 4);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            build_code(fp(7), 3, 1, &BuildOptions::default()),
            Err(Error::TriplyEvenViolated { p: 7, l: 3 })
        );
        assert!(build_code(fp(13), 4, 0, &BuildOptions::default()).is_err());
        assert!(build_code(fp(13), 4, 5, &BuildOptions::default()).is_err());
        let opts = BuildOptions { puncture: Some(vec![3, 5]), budget: DEFAULT_BUDGET };
        assert!(build_code(fp(13), 4, 1, &opts).is_err());
        let opts = BuildOptions { puncture: Some(vec![5]), budget: DEFAULT_BUDGET };
        let code = build_code(fp(13), 4, 1, &opts).unwrap();
        assert_eq!(code.puncture_set(), &[5]);
        assert_eq!(code.epsilon(), &[1]);
    }

    #[test]
    fn validate_p7() {
        let report = validate_code(&p7(), DEFAULT_BUDGET);
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.alphas, vec![6]);
        assert_eq!(report.d_z, Some(2));
    }

    #[test]
    fn validate_p13_distances() {
        let code = build_code(fp(13), 4, 1, &BuildOptions::default()).unwrap();
        let report = validate_code(&code, DEFAULT_BUDGET);
        assert!(report.passed());
        let (z, x) = (report.d_z.unwrap(), report.d_x.unwrap());
        assert!(z <= x);
        assert_eq!(z, 4);
        // PRS_{4,{0}}: length 12, dimension 4, MDS distance 9.
        assert_eq!(x, 9);
    }

    #[test]
    fn validate_detects_corruption() {
        let code = p7();
        let mut h1 = code.h1().clone();
        h1.set(0, 0, 5);
        let bad = TriorthogonalCode::from_parts(
            code.modulus(),
            code.l(),
            code.puncture_set().to_vec(),
            code.h0().clone(),
            h1,
            code.g().clone(),
            code.epsilon().to_vec(),
            code.params(),
        );
        let report = validate_code(&bad, DEFAULT_BUDGET);
        assert!(!report.passed());
        assert_eq!(report.get("stabilizer_orthogonality").unwrap().status, CheckStatus::Fail);
        assert!(bad.check_invariants().is_err());
    }

    #[test]
    fn encoded_support() {
        let code = p7();
        let p = fp(7);
        let zero = encoded_state_support(&code, &FpVector::zeros(p, 1)).unwrap();
        assert_eq!(zero.len(), 7);
        for (c, v) in zero.iter().enumerate() {
            let _ = c;
            assert!(code.h0().in_rowspan(v).unwrap().is_some());
        }
        let one = encoded_state_support(&code, &FpVector::from_i64(p, &[1])).unwrap();
        assert_eq!(one.len(), 7);
        assert!(one.contains(&FpVector::from_i64(p, &[6; 6])));
        let mut all = BTreeSet::new();
        for u in 0..7 {
            for v in encoded_state_support(&code, &FpVector::from_i64(p, &[u])).unwrap() {
                assert!(all.insert(v), "supports overlap");
            }
        }
        assert_eq!(all.len(), 49);
    }

    #[test]
    fn construction_claims_small_primes() {
        for p in crate::field::primes_up_to(31).into_iter().filter(|&p| p >= 5) {
            let m = fp(p as u64);
            for l in 1..=((p as usize + 1) / 3) {
                for k in 1..l {
                    let opts = BuildOptions { puncture: None, budget: 10_000 };
                    let code = build_code(m, l, k, &opts).unwrap();
                    assert!(code.epsilon().iter().all(|&e| e == 1));
                    for r in 0..k {
                        assert_eq!(power_weight(&code.h1().row_vector(r), 2), p - 1);
                    }
                    for r in 0..code.h0().nrows() {
                        assert_eq!(power_weight(&code.h0().row_vector(r), 2), 0);
                    }
                    assert_eq!(code.params().n, p as usize - k);
                }
            }
        }
    }

    #[test]
    fn from_matrix_partitions() {
        let p = fp(7);
        let gen = rs_generator(p, 2).unwrap();
        let (h1, h0) = systematic_puncture(&gen, &[0]).unwrap();
        let h = h0.stack(&h1).unwrap();
        let code = TriorthogonalCode::from_matrix(&h, DEFAULT_BUDGET).unwrap();
        assert_eq!(code.h1(), &h1);
        assert_eq!(code.h0(), &h0);
        assert_eq!(code.params().d, 2);
    }
}
