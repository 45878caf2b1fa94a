//! Dense state-vector simulation of small qudit registers.
//!
//! Basis index `Σ_i d_i p^{n−1−i}`: qudit 0 is the most significant digit.
//! Phases are accumulated exactly as exponents and exponentiated once per
//! amplitude.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::code::{encoded_state_support, TriorthogonalCode};
use crate::enumerate::Odometer;
use crate::error::{Error, Result};
use crate::field::{saturating_pow, PrimeModulus};
use crate::gates::{gate_phase, GateSpec, PhaseExponent};
use crate::linalg::FpVector;

/// Largest supported Hilbert-space dimension `p^n`.
pub const MAX_DIMENSION: u128 = 1 << 24;

fn unit_phase(turns: f64) -> Complex64 {
    let (s, c) = libm::sincos(TAU * turns);
    Complex64::new(c, s)
}

fn check_cap(p: PrimeModulus, n: usize) -> Result<usize> {
    let dim = saturating_pow(p.as_u64(), n);
    if dim > MAX_DIMENSION {
        return Err(Error::CapExceeded {
            dimension: dim,
            cap: MAX_DIMENSION,
        });
    }
    Ok(dim as usize)
}

/// A pure state of `n` qudits of dimension `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuditState {
    p: PrimeModulus,
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl QuditState {
    /// The computational basis state `|digits⟩`.
    pub fn basis_state(p: PrimeModulus, digits: &FpVector) -> Result<Self> {
        let n = digits.len();
        let dim = check_cap(p, n)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index_of(p, digits.entries())] = Complex64::new(1.0, 0.0);
        Ok(QuditState { p, n, amplitudes })
    }

    /// Wraps raw amplitudes; the length must be exactly `p^n`.
    pub fn from_amplitudes(p: PrimeModulus, n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = check_cap(p, n)?;
        if amplitudes.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: amplitudes.len(),
            });
        }
        Ok(QuditState { p, n, amplitudes })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn qudits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.amplitudes.iter().map(|a| a.norm_sqr()).sum())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QuditState) -> Result<Complex64> {
        if self.amplitudes.len() != other.amplitudes.len() {
            return Err(Error::DimensionMismatch {
                expected: self.amplitudes.len(),
                found: other.amplitudes.len(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn scaled(&self, c: Complex64) -> QuditState {
        QuditState {
            p: self.p,
            n: self.n,
            amplitudes: self.amplitudes.iter().map(|a| a * c).collect(),
        }
    }

    /// `X^h |j⟩ = |j + h⟩`, digit-wise mod `p`.
    pub fn apply_x(&self, h: &[u32]) -> Result<QuditState> {
        self.check_len(h.len())?;
        let p = self.p;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        let mut digits = vec![0u32; self.n];
        for (idx, &amp) in self.amplitudes.iter().enumerate() {
            if amp == Complex64::new(0.0, 0.0) {
                continue;
            }
            digits_of(p, idx, &mut digits);
            for (d, &s) in digits.iter_mut().zip(h) {
                *d = p.add(*d, s);
            }
            out[index_of(p, &digits)] = amp;
        }
        Ok(QuditState {
            p,
            n: self.n,
            amplitudes: out,
        })
    }

    /// `Z^g |j⟩ = ω^{g·j} |j⟩` with `ω = exp(2πi/p)`.
    pub fn apply_z(&self, g: &[u32]) -> Result<QuditState> {
        self.check_len(g.len())?;
        let p = self.p;
        let phases: Vec<Complex64> = p.elements().map(|e| unit_phase(e as f64 / p.get() as f64)).collect();
        let mut digits = vec![0u32; self.n];
        let amplitudes = self
            .amplitudes
            .iter()
            .enumerate()
            .map(|(idx, &amp)| {
                digits_of(p, idx, &mut digits);
                amp * phases[crate::linalg::dot(p, &digits, g) as usize]
            })
            .collect();
        Ok(QuditState {
            p,
            n: self.n,
            amplitudes,
        })
    }

    /// Applies `g` to every qudit.
    pub fn apply_transversal_diagonal(&self, g: &GateSpec) -> Result<QuditState> {
        if g.modulus() != self.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: g.modulus().get(),
            });
        }
        let q = g.denominator();
        let table: Vec<u64> = self.p.elements().map(|j| gate_phase(g, j).numerator()).collect();
        let mut digits = vec![0u32; self.n];
        let amplitudes = self
            .amplitudes
            .iter()
            .enumerate()
            .map(|(idx, &amp)| {
                digits_of(self.p, idx, &mut digits);
                let num = digits
                    .iter()
                    .fold(0u128, |acc, &d| (acc + table[d as usize] as u128) % q as u128);
                amp * unit_phase(PhaseExponent::new(num as u64, q).turns())
            })
            .collect();
        Ok(QuditState {
            p: self.p,
            n: self.n,
            amplitudes,
        })
    }

    /// Reorders qudits: qudit `i` of the result is qudit `perm[i]` of `self`.
    pub fn permute_qudits(&self, perm: &[usize]) -> Result<QuditState> {
        self.check_len(perm.len())?;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        let mut digits = vec![0u32; self.n];
        let mut moved = vec![0u32; self.n];
        for (idx, &amp) in self.amplitudes.iter().enumerate() {
            digits_of(self.p, idx, &mut digits);
            for (m, &src) in moved.iter_mut().zip(perm) {
                *m = digits[src];
            }
            out[index_of(self.p, &moved)] = amp;
        }
        Ok(QuditState {
            p: self.p,
            n: self.n,
            amplitudes: out,
        })
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }
}

/// Basis index of a digit string.
pub fn index_of(p: PrimeModulus, digits: &[u32]) -> usize {
    digits
        .iter()
        .fold(0usize, |acc, &d| acc * p.get() as usize + d as usize)
}

/// Inverse of [`index_of`], written into `out`.
pub fn digits_of(p: PrimeModulus, mut index: usize, out: &mut [u32]) {
    let base = p.get() as usize;
    for d in out.iter_mut().rev() {
        *d = (index % base) as u32;
        index /= base;
    }
}

/// `|u⟩_L`: the uniform superposition over [`encoded_state_support`].
pub fn encode(code: &TriorthogonalCode, u: &FpVector) -> Result<QuditState> {
    let p = code.modulus();
    let dim = check_cap(p, code.n())?;
    let support = encoded_state_support(code, u)?;
    let amp = Complex64::new(1.0 / libm::sqrt(support.len() as f64), 0.0);
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
    for v in &support {
        amplitudes[index_of(p, v.entries())] = amp;
    }
    Ok(QuditState {
        p,
        n: code.n(),
        amplitudes,
    })
}

/// Largest `|1 − ⟨ψ|S ψ⟩|` over the X-type (`H0` rows) and Z-type (`G` rows)
/// stabilizer generators.
pub fn stabilizer_deviation(code: &TriorthogonalCode, state: &QuditState) -> Result<f64> {
    let one = Complex64::new(1.0, 0.0);
    let mut worst = 0.0f64;
    for h in code.h0().rows() {
        worst = worst.max((one - state.inner(&state.apply_x(h)?)?).norm());
    }
    for g in code.g().rows() {
        worst = worst.max((one - state.inner(&state.apply_z(g)?)?).norm());
    }
    Ok(worst)
}

/// Logical phase predicted for `g^{⊗n}` on `|u⟩_L`: `Σ_a ε_a u_a³ / p` for
/// `U_{1,3}` (`p ≥ 5`), `Σ_a ε_a u_a / 9` for `U_{2,1}` (`p = 3`).
pub fn predicted_phase(code: &TriorthogonalCode, g: &GateSpec, u: &FpVector) -> Result<PhaseExponent> {
    let p = code.modulus();
    let (pu, m, a) = (g.modulus().get(), g.m(), g.a());
    let eps = code.epsilon();
    if u.len() != eps.len() {
        return Err(Error::DimensionMismatch {
            expected: eps.len(),
            found: u.len(),
        });
    }
    let q = match (pu, m, a) {
        (3, 2, 1) if p.get() == 3 => 9u64,
        (pp, 1, 3) if pp >= 5 && pp == p.get() => p.as_u64(),
        _ => return Err(Error::UnsupportedGate { p: pu, m, a }),
    };
    let num = u.entries().iter().zip(eps).fold(0u64, |acc, (&ua, &e)| {
        let ua = ua as u64;
        let power = if q == 9 { ua } else { ua * ua % q * ua % q };
        (acc + power * (e % q)) % q
    });
    Ok(PhaseExponent::new(num, q))
}

/// A logical input whose deviation exceeded the tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct SimulationFailure {
    pub u: Vec<u32>,
    pub deviation: f64,
}

/// Result of [`verify_transversal_action`].
#[derive(Clone, Debug, PartialEq)]
pub struct SimulationReport {
    pub gate: GateSpec,
    /// Max over `u` of `|1 − ⟨s2|s1⟩|`.
    pub max_deviation: f64,
    /// Max stabilizer deviation over all encoded inputs.
    pub max_stabilizer_deviation: f64,
    pub logical_states: usize,
    pub failures: Vec<SimulationFailure>,
}

impl SimulationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `u ∈ F_p^k`, compares `g^{⊗n} |u⟩_L` against `|u⟩_L` times the
/// predicted logical phase.
pub fn verify_transversal_action(code: &TriorthogonalCode, g: &GateSpec, tol: f64) -> Result<SimulationReport> {
    let p = code.modulus();
    check_cap(p, code.n())?;
    let k = code.k();
    if k == 0 {
        return Err(Error::NoLogicalQudits);
    }
    let one = Complex64::new(1.0, 0.0);
    let mut report = SimulationReport {
        gate: *g,
        max_deviation: 0.0,
        max_stabilizer_deviation: 0.0,
        logical_states: 0,
        failures: Vec::new(),
    };
    let mut odo = Odometer::new(p, k);
    while odo.advance().is_some() {
        let u = FpVector::new(p, odo.digits().to_vec())?;
        let enc = encode(code, &u)?;
        let s1 = enc.apply_transversal_diagonal(g)?;
        let s2 = enc.scaled(unit_phase(predicted_phase(code, g, &u)?.turns()));
        let dev = (one - s2.inner(&s1)?).norm();
        let stab = stabilizer_deviation(code, &enc)?;
        report.max_deviation = report.max_deviation.max(dev);
        report.max_stabilizer_deviation = report.max_stabilizer_deviation.max(stab);
        report.logical_states += 1;
        if dev >= tol || !dev.is_finite() {
            report.failures.push(SimulationFailure {
                u: u.into_entries(),
                deviation: dev,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_code, BuildOptions};
    use crate::gates::{search_qutrit_code, third_level_gate};
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn p7() -> TriorthogonalCode {
        build_code(fp(7), 2, 1, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn basis_state_examples() {
        let s = QuditState::basis_state(fp(3), &FpVector::from_i64(fp(3), &[2])).unwrap();
        assert_eq!(s.amplitudes()[2], Complex64::new(1.0, 0.0));
        let s = QuditState::basis_state(fp(5), &FpVector::from_i64(fp(5), &[1, 2])).unwrap();
        assert_eq!(s.amplitudes()[7], Complex64::new(1.0, 0.0));
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cap_is_enforced() {
        let p = fp(97);
        assert!(matches!(
            QuditState::basis_state(p, &FpVector::zeros(p, 4)),
            Err(Error::CapExceeded { .. })
        ));
        let code = build_code(fp(41), 12, 6, &BuildOptions { puncture: None, budget: 10_000 }).unwrap();
        let g = third_level_gate(fp(41)).unwrap();
        assert!(matches!(
            verify_transversal_action(&code, &g, 1e-9),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn single_qudit_cube_phase() {
        let p = fp(5);
        let g = GateSpec::new(p, 1, 3).unwrap();
        let s = QuditState::basis_state(p, &FpVector::from_i64(p, &[2])).unwrap();
        let out = s.apply_transversal_diagonal(&g).unwrap();
        let expected = unit_phase(3.0 / 5.0);
        assert!((out.amplitudes()[2] - expected).norm() < 1e-12);
        let zero = QuditState::basis_state(p, &FpVector::zeros(p, 3)).unwrap();
        assert_eq!(zero.apply_transversal_diagonal(&g).unwrap(), zero);
    }

    #[test]
    fn encoding_p7() {
        let code = p7();
        let p = fp(7);
        let zero = encode(&code, &FpVector::zeros(p, 1)).unwrap();
        let nonzero: Vec<usize> = (0..zero.amplitudes().len())
            .filter(|&i| zero.amplitudes()[i].norm() > 0.0)
            .collect();
        assert_eq!(nonzero.len(), 7);
        // Multiples of (1,2,3,4,5,6).
        let mut expected: Vec<usize> = (0..7u32)
            .map(|c| index_of(p, &(1..=6).map(|i| c * i % 7).collect::<Vec<_>>()))
            .collect();
        expected.sort_unstable();
        assert_eq!(nonzero, expected);
        let states: Vec<QuditState> = (0..7)
            .map(|u| encode(&code, &FpVector::from_i64(p, &[u])).unwrap())
            .collect();
        for (a, sa) in states.iter().enumerate() {
            assert!(stabilizer_deviation(&code, sa).unwrap() < 1e-9);
            for (b, sb) in states.iter().enumerate() {
                let ip = sa.inner(sb).unwrap();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((ip - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn transversal_u13_on_p7() {
        let code = p7();
        let g = third_level_gate(fp(7)).unwrap();
        let report = verify_transversal_action(&code, &g, 1e-9).unwrap();
        assert_eq!(report.logical_states, 7);
        assert!(report.passed(), "{report:?}");
        assert!(report.max_deviation < 1e-9);
        assert!(report.max_stabilizer_deviation < 1e-9);
    }

    #[test]
    fn wrong_prediction_is_reported() {
        let code = p7();
        let tampered = TriorthogonalCode::from_parts(
            code.modulus(),
            code.l(),
            code.puncture_set().to_vec(),
            code.h0().clone(),
            code.h1().clone(),
            code.g().clone(),
            alloc::vec![2],
            code.params(),
        );
        let g = third_level_gate(fp(7)).unwrap();
        let report = verify_transversal_action(&tampered, &g, 1e-9).unwrap();
        assert_eq!(report.failures.len(), 6);
        assert!(report.failures.iter().all(|f| f.u != alloc::vec![0]));
    }

    #[test]
    fn transversal_u21_on_qutrit_code() {
        let (h1, h0) = search_qutrit_code(1, 2, 9).unwrap();
        let code = TriorthogonalCode::from_matrix(&h1.stack(&h0).unwrap(), 10_000).unwrap();
        let g = third_level_gate(fp(3)).unwrap();
        let report = verify_transversal_action(&code, &g, 1e-9).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.max_stabilizer_deviation < 1e-9);
    }

    #[test]
    fn simulation_agrees_with_exact_phase_sum() {
        let code = p7();
        let g = third_level_gate(fp(7)).unwrap();
        let p = fp(7);
        for u in 0..7 {
            let uv = FpVector::from_i64(p, &[u]);
            let exact = crate::gates::cubic_phase_sum(code.h1(), code.h0(), &uv).unwrap();
            assert_eq!(predicted_phase(&code, &g, &uv).unwrap(), exact);
        }
    }

    fn arb_state(p: u32, n: usize) -> impl Strategy<Value = QuditState> {
        let dim = (p as usize).pow(n as u32);
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim).prop_filter_map("zero state", move |v| {
            let amps: Vec<Complex64> = v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect();
            let norm = libm::sqrt(amps.iter().map(|a| a.norm_sqr()).sum());
            (norm > 1e-6).then(|| {
                let amps = amps.into_iter().map(|a| a / norm).collect();
                QuditState::from_amplitudes(PrimeModulus::new(p as u64).unwrap(), n, amps).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn diagonal_gate_preserves_norm(s in arb_state(5, 3), a in 1u32..5, m in 1u32..3) {
            let g = GateSpec::new(fp(5), m, a).unwrap();
            let out = s.apply_transversal_diagonal(&g).unwrap();
            prop_assert!((out.norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn transversal_gate_commutes_with_relabeling(s in arb_state(3, 4), perm in Just(alloc::vec![0usize, 1, 2, 3]).prop_shuffle()) {
            let g = GateSpec::new(fp(3), 2, 1).unwrap();
            let a = s.apply_transversal_diagonal(&g).unwrap().permute_qudits(&perm).unwrap();
            let b = s.permute_qudits(&perm).unwrap().apply_transversal_diagonal(&g).unwrap();
            let diff: f64 = a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| (x - y).norm()).sum();
            prop_assert!(diff < 1e-12);
        }

        #[test]
        fn index_roundtrip(p_idx in 0usize..4, digits in proptest::collection::vec(0u32..100, 0..6)) {
            let p = fp([2u64, 3, 5, 7][p_idx]);
            let digits: Vec<u32> = digits.into_iter().map(|d| d % p.get()).collect();
            let mut back = alloc::vec![0u32; digits.len()];
            digits_of(p, index_of(p, &digits), &mut back);
            prop_assert_eq!(back, digits);
        }
    }
}
