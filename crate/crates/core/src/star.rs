//! The componentwise star-product and the tri-orthogonality / triply-even
//! predicates built on it.
//!
//! Tri-orthogonality of a matrix quantifies over *distinct* rows (pairs
//! `a < b`, triples `a < b < c`), whereas triple-evenness of a space quantifies
//! over arbitrary codewords, so on a basis it needs `a ≤ b ≤ c`. The two
//! checks are kept separate.

use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::FpMatrix;
use crate::linalg::FpVector;

/// A violated orthogonality condition: the rows involved and the nonzero sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarWitness {
    Pair { rows: (usize, usize), value: u32 },
    Triple { rows: (usize, usize, usize), value: u32 },
}

impl StarWitness {
    pub fn value(&self) -> u32 {
        match *self {
            StarWitness::Pair { value, .. } | StarWitness::Triple { value, .. } => value,
        }
    }
}

impl fmt::Display for StarWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StarWitness::Pair { rows: (a, b), value } => {
                write!(f, "rows ({a},{b}) have product sum {value}")
            }
            StarWitness::Triple {
                rows: (a, b, c),
                value,
            } => write!(f, "rows ({a},{b},{c}) have product sum {value}"),
        }
    }
}

/// Componentwise product `u * v`.
pub fn star(u: &FpVector, v: &FpVector) -> Result<FpVector> {
    if u.modulus() != v.modulus() {
        return Err(Error::ModulusMismatch {
            left: u.modulus().get(),
            right: v.modulus().get(),
        });
    }
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    let p = u.modulus();
    let entries = u
        .entries()
        .iter()
        .zip(v.entries())
        .map(|(&a, &b)| p.mul(a, b))
        .collect();
    Ok(FpVector::new(p, entries).expect("products are reduced"))
}

/// Star-product of one or more vectors, folded left to right.
pub fn star_all(vectors: &[&FpVector]) -> Result<FpVector> {
    let (first, rest) = vectors
        .split_first()
        .ok_or(Error::ParameterOutOfRange("star product of no vectors"))?;
    rest.iter().try_fold((*first).clone(), |acc, v| star(&acc, v))
}

/// `Σ_i u_i^t mod p`.
pub fn power_weight(u: &FpVector, t: u32) -> u32 {
    let p = u.modulus();
    u.entries()
        .iter()
        .fold(0, |acc, &x| p.add(acc, p.pow(x, t as u64)))
}

/// `|u * v * w| = Σ_i u_i v_i w_i mod p` on raw rows.
pub(crate) fn triple_sum(p: crate::field::PrimeModulus, u: &[u32], v: &[u32], w: &[u32]) -> u32 {
    let pm = p.as_u64();
    let mut acc = 0u64;
    for ((&a, &b), &c) in u.iter().zip(v).zip(w) {
        acc = (acc + (a as u64 * b as u64 % pm) * c as u64) % pm;
    }
    acc as u32
}

/// Checks both conditions of a tri-orthogonal matrix over distinct rows.
/// Returns the first violation in lexicographic order: all pairs are checked
/// before any triple.
pub fn check_triorthogonal(h: &FpMatrix) -> core::result::Result<(), StarWitness> {
    let p = h.modulus();
    let m = h.nrows();
    for a in 0..m {
        for b in a + 1..m {
            let value = crate::linalg::dot(p, h.row(a), h.row(b));
            if value != 0 {
                return Err(StarWitness::Pair { rows: (a, b), value });
            }
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let value = triple_sum(p, h.row(a), h.row(b), h.row(c));
                if value != 0 {
                    return Err(StarWitness::Triple {
                        rows: (a, b, c),
                        value,
                    });
                }
            }
        }
    }
    Ok(())
}

/// How [`check_triply_even`] decides the property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriplyEvenMode {
    /// `|g^a * g^b * g^c| = 0` for all basis triples `a ≤ b ≤ c`;
    /// sufficient by trilinearity.
    BasisTriples,
    /// `g^a * g^b ∈ V^⊥` for all `a ≤ b`, testing membership in an explicit
    /// basis of the dual.
    DualContainment,
}

/// Decides whether `rowspan(g)` is triply even.
pub fn check_triply_even(
    g: &FpMatrix,
    mode: TriplyEvenMode,
) -> core::result::Result<(), StarWitness> {
    let p = g.modulus();
    let m = g.nrows();
    match mode {
        TriplyEvenMode::BasisTriples => {
            for a in 0..m {
                for b in a..m {
                    for c in b..m {
                        let value = triple_sum(p, g.row(a), g.row(b), g.row(c));
                        if value != 0 {
                            return Err(StarWitness::Triple {
                                rows: (a, b, c),
                                value,
                            });
                        }
                    }
                }
            }
            Ok(())
        }
        TriplyEvenMode::DualContainment => {
            let dual = g.kernel_basis();
            for a in 0..m {
                for b in a..m {
                    let prod = star(&g.row_vector(a), &g.row_vector(b)).expect("same shape");
                    if dual.in_rowspan(&prod).expect("same shape").is_none() {
                        let value = (0..m)
                            .map(|c| triple_sum(p, g.row(a), g.row(b), g.row(c)))
                            .find(|&v| v != 0)
                            .unwrap_or(0);
                        return Err(StarWitness::Pair { rows: (a, b), value });
                    }
                }
            }
            Ok(())
        }
    }
}
