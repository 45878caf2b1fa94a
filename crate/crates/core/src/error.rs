use core::fmt;

use crate::star::StarWitness;

/// Errors produced by the code construction and verification pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus is not a prime below 2^31.
    NotPrime(u64),
    /// Inverse of zero requested.
    DivisionByZero,
    /// Operand shapes do not line up.
    DimensionMismatch { expected: usize, found: usize },
    /// Operands live over different prime fields.
    ModulusMismatch { left: u32, right: u32 },
    /// A scalar parameter lies outside its admissible range.
    ParameterOutOfRange(&'static str),
    /// `RS_l` is not triply even for this `(p, l)`.
    TriplyEvenViolated { p: u32, l: usize },
    /// The puncture columns of the generator do not have full rank.
    PunctureRankDeficient { rank: usize, wanted: usize },
    /// Exhaustive enumeration would exceed the configured budget.
    BudgetExceeded {
        required: u128,
        budget: u64,
        /// Weight of the lightest generator row outside the excluded span.
        upper_bound: Option<usize>,
    },
    /// Every codeword is zero or excluded, so no minimum exists.
    NoCodewords,
    /// Two independent evaluations of a phase identity disagree.
    IdentityViolation { lhs: u64, rhs: u64, modulus: u64 },
    /// A matrix that must be tri-orthogonal is not.
    NotTriorthogonal(StarWitness),
    /// A structural invariant of an assembled code failed.
    InvariantViolated(&'static str),
    /// A dense state of this size exceeds the simulator cap.
    CapExceeded { dimension: u128, cap: u128 },
    /// The gate has no transversal-action prediction for this code.
    UnsupportedGate { p: u32, m: u32, a: u32 },
    /// The code has no logical qudits.
    NoLogicalQudits,
    /// Not enough records to fit a scaling law.
    TooFewRecords { found: usize, needed: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "modulus {p} is not a prime below 2^31"),
            Error::DivisionByZero => f.write_str("inverse of zero"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::ParameterOutOfRange(what) => write!(f, "parameter out of range: {what}"),
            Error::TriplyEvenViolated { p, l } => write!(
                f,
                "3l ≤ p+1 failed (3·{l} = {} > {} = p+1)",
                3 * l,
                *p as u64 + 1
            ),
            Error::PunctureRankDeficient { rank, wanted } => write!(
                f,
                "puncture set unusable: its columns have rank {rank}, need {wanted}"
            ),
            Error::BudgetExceeded {
                required,
                budget,
                upper_bound,
            } => {
                write!(
                    f,
                    "enumeration of {required} vectors exceeds budget {budget}"
                )?;
                if let Some(b) = upper_bound {
                    write!(f, " (minimum weight ≤ {b})")?;
                }
                Ok(())
            }
            Error::NoCodewords => f.write_str("no nonzero codeword outside the excluded span"),
            Error::IdentityViolation { lhs, rhs, modulus } => write!(
                f,
                "phase identity violated: {lhs} ≠ {rhs} (mod {modulus})"
            ),
            Error::NotTriorthogonal(w) => write!(f, "matrix is not tri-orthogonal: {w}"),
            Error::InvariantViolated(what) => write!(f, "code invariant violated: {what}"),
            Error::CapExceeded { dimension, cap } => write!(
                f,
                "state dimension {dimension} exceeds simulator cap {cap}"
            ),
            Error::UnsupportedGate { p, m, a } => write!(
                f,
                "no transversal prediction for U_{{{m},{a}}} at p = {p}"
            ),
            Error::NoLogicalQudits => f.write_str("code has no logical qudits"),
            Error::TooFewRecords { found, needed } => {
                write!(f, "need at least {needed} records, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
