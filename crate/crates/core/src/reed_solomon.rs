//! Reed-Solomon codes over `F_p` with evaluation points `0, 1, …, p−1`, their
//! duals, and the shortened / punctured codes used by the quantum construction.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::linalg::{FpMatrix, FpVector};
use crate::weight::min_weight;

/// An element of `F_p[x]/(x^p − x)`, stored by coefficients of `x^0..x^{p−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    modulus: PrimeModulus,
    coeffs: Vec<u32>,
}

impl Polynomial {
    /// Builds a polynomial from any coefficient list, folding exponents
    /// `e ≥ p` back with `x^p = x`.
    pub fn new(modulus: PrimeModulus, coeffs: &[u32]) -> Self {
        let p = modulus.get() as usize;
        let mut out = alloc::vec![0u32; p];
        for (e, &c) in coeffs.iter().enumerate() {
            let c = c % modulus.get();
            let slot = reduce_exponent(e, p);
            out[slot] = modulus.add(out[slot], c);
        }
        Polynomial {
            modulus,
            coeffs: out,
        }
    }

    pub fn monomial(modulus: PrimeModulus, degree: usize) -> Self {
        let mut c = alloc::vec![0u32; degree + 1];
        c[degree] = 1;
        Self::new(modulus, &c)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.modulus;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| p.add(p.mul(acc, x), c))
    }

    /// Product in the quotient ring.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let p = self.modulus;
        let mut raw = alloc::vec![0u32; self.coeffs.len() + other.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                raw[i + j] = p.add(raw[i + j], p.mul(a, b));
            }
        }
        Polynomial::new(p, &raw)
    }
}

fn reduce_exponent(e: usize, p: usize) -> usize {
    if e < p {
        e
    } else {
        (e - 1) % (p - 1) + 1
    }
}

/// The evaluation map `α ↦ (α(0), α(1), …, α(p−1))`.
pub fn ev(poly: &Polynomial) -> FpVector {
    let p = poly.modulus;
    let entries = p.elements().map(|u| poly.eval(u)).collect();
    FpVector::new(p, entries).expect("evaluations are reduced")
}

/// Rows `ev(x^0), …, ev(x^{dim−1})`; `dim = 0` gives an empty matrix.
fn evaluation_rows(p: PrimeModulus, dim: usize) -> FpMatrix {
    let n = p.get() as usize;
    let mut m = FpMatrix::zeros(p, 0, n);
    for d in 0..dim {
        let row: Vec<u32> = p.elements().map(|u| p.pow(u, d as u64)).collect();
        m.push_row(&row).expect("length p");
    }
    m
}

/// Generator matrix of `RS_l`.
pub fn rs_generator(p: PrimeModulus, l: usize) -> Result<FpMatrix> {
    if l == 0 || l > p.get() as usize {
        return Err(Error::ParameterOutOfRange("RS dimension l must satisfy 1 ≤ l ≤ p"));
    }
    Ok(evaluation_rows(p, l))
}

/// Generator of `RS_l^⊥ = RS_{p−l}`.
pub fn rs_dual(p: PrimeModulus, l: usize) -> Result<FpMatrix> {
    if l == 0 || l >= p.get() as usize {
        return Err(Error::ParameterOutOfRange("dual needs 1 ≤ l ≤ p−1"));
    }
    rs_generator(p, p.get() as usize - l)
}

/// `RS_l` is triply even exactly when `3l ≤ p+1`: products of two
/// polynomials of degree `< l` then have degree `≤ p−l−1`, so they lie in
/// `RS_{p−l} = RS_l^⊥` without any reduction mod `x^p − x`.
pub fn rs_triply_even(p: PrimeModulus, l: usize) -> bool {
    3 * l as u64 <= p.as_u64() + 1
}

/// Which of the two complementary RS codes an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    /// `RS_l`.
    Code,
    /// `RS_{p−l}`.
    Complement,
}

/// `(p, l, A)`: an RS dimension together with an ordered puncture set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsCodeSpec {
    p: PrimeModulus,
    l: usize,
    puncture: Vec<usize>,
}

impl RsCodeSpec {
    pub fn new(p: PrimeModulus, l: usize, puncture: Vec<usize>) -> Result<Self> {
        let n = p.get() as usize;
        if l == 0 || l > n {
            return Err(Error::ParameterOutOfRange("RS dimension l must satisfy 1 ≤ l ≤ p"));
        }
        if puncture.len() > l {
            return Err(Error::ParameterOutOfRange("puncture set larger than l"));
        }
        for (i, &a) in puncture.iter().enumerate() {
            if a >= n {
                return Err(Error::ParameterOutOfRange("puncture position outside 0..p"));
            }
            if puncture[..i].contains(&a) {
                return Err(Error::ParameterOutOfRange("repeated puncture position"));
            }
        }
        Ok(RsCodeSpec { p, l, puncture })
    }

    /// Puncture set `A = {0, …, k−1}`.
    pub fn with_leading_puncture(p: PrimeModulus, l: usize, k: usize) -> Result<Self> {
        Self::new(p, l, (0..k).collect())
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.puncture.len()
    }

    pub fn puncture_set(&self) -> &[usize] {
        &self.puncture
    }

    /// Coordinates outside `A`, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.p.get() as usize)
            .filter(|i| !self.puncture.contains(i))
            .collect()
    }

    fn dimension(&self, which: Which) -> usize {
        match which {
            Which::Code => self.l,
            Which::Complement => self.p.get() as usize - self.l,
        }
    }

    fn generator(&self, which: Which) -> FpMatrix {
        evaluation_rows(self.p, self.dimension(which))
    }
}

/// Generator of the shortened code: codewords vanishing on `A`, restricted to
/// the complement of `A`.
pub fn shorten(spec: &RsCodeSpec, which: Which) -> FpMatrix {
    let g = spec.generator(which);
    let on_a = g.select_columns(spec.puncture_set());
    // Coefficient vectors c with c · G|_A = 0.
    let coeffs = on_a.transpose().kernel_basis();
    let mut out = FpMatrix::zeros(spec.p, 0, g.ncols());
    for r in 0..coeffs.nrows() {
        let word = g.combine(coeffs.row(r)).expect("coefficient length matches");
        out.push_row(word.entries()).expect("length p");
    }
    out.select_columns(&spec.complement())
}

/// Generator of the punctured code: the RS generator with the `A` columns deleted.
pub fn puncture(spec: &RsCodeSpec, which: Which) -> FpMatrix {
    spec.generator(which).select_columns(&spec.complement())
}

/// Measured versus claimed minimum distance of `PRS_{p−l,A}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceAudit {
    pub p: u32,
    pub l: usize,
    pub puncture: Vec<usize>,
    pub measured: usize,
    /// The claimed value `l − k`.
    pub claimed: usize,
}

impl DistanceAudit {
    pub fn matches(&self) -> bool {
        self.measured == self.claimed
    }
}

/// Exact minimum distance of `PRS_{p−l,A}`, the code whose distance is the
/// Z-distance of the quantum code, compared against the claimed `l − k`.
pub fn prs_min_distance(spec: &RsCodeSpec, budget: u64) -> Result<DistanceAudit> {
    let code = puncture(spec, Which::Complement);
    let measured = min_weight(&code, None, budget)?;
    Ok(DistanceAudit {
        p: spec.p.get(),
        l: spec.l,
        puncture: spec.puncture.clone(),
        measured,
        claimed: spec.l - spec.k(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::{check_triply_even, star, TriplyEvenMode};
    use crate::weight::DEFAULT_BUDGET;
    use alloc::vec;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn ev_examples() {
        let p = fp(5);
        assert_eq!(ev(&Polynomial::monomial(p, 0)).entries(), &[1, 1, 1, 1, 1]);
        assert_eq!(ev(&Polynomial::monomial(p, 1)).entries(), &[0, 1, 2, 3, 4]);
        assert_eq!(ev(&Polynomial::monomial(p, 2)).entries(), &[0, 1, 4, 4, 1]);
    }

    #[test]
    fn ev_is_injective_on_monomials() {
        for p in [2u64, 3, 5, 7, 11] {
            let m = fp(p);
            let g = rs_generator(m, p as usize).unwrap();
            assert_eq!(g.rank(), p as usize);
        }
    }

    #[test]
    fn generator_examples() {
        let p = fp(5);
        assert_eq!(rs_generator(p, 1).unwrap().to_rows(), vec![vec![1; 5]]);
        let g2 = rs_generator(p, 2).unwrap();
        assert_eq!(g2.to_rows(), vec![vec![1, 1, 1, 1, 1], vec![0, 1, 2, 3, 4]]);
        assert_eq!(min_weight(&g2, None, DEFAULT_BUDGET), Ok(4));
        assert_eq!(rs_generator(fp(7), 7).unwrap().rank(), 7);
        assert!(rs_generator(p, 0).is_err());
        assert!(rs_generator(p, 6).is_err());
    }

    #[test]
    fn dual_examples() {
        let p = fp(5);
        let g2 = rs_generator(p, 2).unwrap();
        let g3 = rs_dual(p, 2).unwrap();
        assert_eq!(g3, rs_generator(p, 3).unwrap());
        assert!(g2.mul(&g3.transpose()).unwrap().is_zero());
        // The kernel of RS_2 spans RS_3.
        assert!(g2.kernel_basis().same_rowspan(&g3).unwrap());

        let p3 = fp(3);
        let ones = rs_generator(p3, 1).unwrap();
        let d = rs_dual(p3, 1).unwrap();
        assert_eq!(d, rs_generator(p3, 2).unwrap());
        assert!(ones.mul(&d.transpose()).unwrap().is_zero());
        assert!(rs_dual(p, 5).is_err());
    }

    #[test]
    fn dual_dimensions_sum_to_p() {
        for p in [3u64, 5, 7, 11, 13] {
            let m = fp(p);
            for l in 1..p as usize {
                let g = rs_generator(m, l).unwrap();
                let d = rs_dual(m, l).unwrap();
                assert_eq!(g.rank() + d.rank(), p as usize);
                assert!(g.mul(&d.transpose()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn shorten_examples() {
        let p = fp(5);
        let spec = RsCodeSpec::new(p, 2, vec![0]).unwrap();
        // SRS_{3,{0}}: polynomials of degree < 3 with a root at 0.
        let s = shorten(&spec, Which::Complement);
        assert_eq!(s.rank(), 2);
        let expected = FpMatrix::from_rows(p, 4, &[vec![1, 2, 3, 4], vec![1, 4, 4, 1]]).unwrap();
        assert!(s.same_rowspan(&expected).unwrap());

        let none = RsCodeSpec::new(p, 2, vec![]).unwrap();
        assert_eq!(shorten(&none, Which::Code), rs_generator(p, 2).unwrap());
    }

    #[test]
    fn puncture_examples() {
        let p = fp(5);
        let spec = RsCodeSpec::new(p, 2, vec![0]).unwrap();
        let pr = puncture(&spec, Which::Code);
        assert_eq!(pr.to_rows(), vec![vec![1, 1, 1, 1], vec![1, 2, 3, 4]]);
        let none = RsCodeSpec::new(p, 2, vec![]).unwrap();
        assert_eq!(puncture(&none, Which::Code), rs_generator(p, 2).unwrap());
        // PRS_{2,{0}} is orthogonal to SRS_{3,{0}}.
        let s = shorten(&spec, Which::Complement);
        assert!(pr.mul(&s.transpose()).unwrap().is_zero());
        assert_eq!(pr.rank() + s.rank(), 4);
    }

    #[test]
    fn spec_validation() {
        let p = fp(7);
        assert!(RsCodeSpec::new(p, 2, vec![0, 1, 2]).is_err());
        assert!(RsCodeSpec::new(p, 3, vec![1, 1]).is_err());
        assert!(RsCodeSpec::new(p, 3, vec![7]).is_err());
        assert!(RsCodeSpec::new(p, 0, vec![]).is_err());
        assert_eq!(RsCodeSpec::with_leading_puncture(p, 3, 2).unwrap().complement(), vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn triply_even_criterion_examples() {
        assert!(rs_triply_even(fp(7), 2));
        assert!(rs_triply_even(fp(41), 12));
        assert!(!rs_triply_even(fp(7), 3));
        // Boundary 3l = p + 1 holds.
        assert!(rs_triply_even(fp(5), 2));
        assert!(check_triply_even(&rs_generator(fp(5), 2).unwrap(), TriplyEvenMode::BasisTriples).is_ok());
    }

    #[test]
    fn criterion_matches_exhaustive_check_small_primes() {
        for p in crate::field::primes_up_to(31) {
            let m = fp(p as u64);
            for l in 1..=p as usize {
                let g = rs_generator(m, l).unwrap();
                assert_eq!(
                    rs_triply_even(m, l),
                    check_triply_even(&g, TriplyEvenMode::BasisTriples).is_ok(),
                    "p={p} l={l}"
                );
            }
        }
    }

    #[test]
    fn prs_distance_is_one_more_than_claimed() {
        // PRS_{p−l,A} is MDS of length p−k and dimension p−l.
        let audit = prs_min_distance(&RsCodeSpec::new(fp(13), 4, vec![0]).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(audit.measured, 4);
        assert_eq!(audit.claimed, 3);
        assert!(!audit.matches());

        let audit = prs_min_distance(&RsCodeSpec::new(fp(7), 2, vec![0]).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!((audit.measured, audit.claimed), (2, 1));

        // A = ∅: PRS_{p−l,∅} = RS_{p−l}, distance p − (p−l) + 1 = l + 1.
        let audit = prs_min_distance(&RsCodeSpec::new(fp(7), 2, vec![]).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(audit.measured, 3);
    }

    fn arb_poly() -> impl Strategy<Value = (u64, Vec<u32>, Vec<u32>)> {
        prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_flat_map(|p| {
            (
                Just(p),
                prop::collection::vec(0u32..p as u32, 0..=p as usize),
                prop::collection::vec(0u32..p as u32, 0..=p as usize),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn ev_maps_product_to_star((p, a, b) in arb_poly()) {
            let m = fp(p);
            let pa = Polynomial::new(m, &a);
            let pb = Polynomial::new(m, &b);
            prop_assert_eq!(ev(&pa.mul(&pb)), star(&ev(&pa), &ev(&pb)).unwrap());
        }

        #[test]
        fn puncture_and_shorten_dimensions(
            p in prop::sample::select(vec![5u64, 7, 11, 13]),
            l_frac in 0.0f64..1.0,
            k_frac in 0.0f64..1.0,
        ) {
            let m = fp(p);
            let l = 1 + (((p as usize - 1) / 2 - 1) as f64 * l_frac) as usize;
            let k = (l as f64 * k_frac) as usize;
            let spec = RsCodeSpec::with_leading_puncture(m, l, k).unwrap();
            let prs = puncture(&spec, Which::Code);
            let srs = shorten(&spec, Which::Complement);
            prop_assert_eq!(prs.rank(), l);
            prop_assert_eq!(srs.rank(), p as usize - l - k);
            prop_assert!(prs.mul(&srs.transpose()).unwrap().is_zero());
        }
    }
}
