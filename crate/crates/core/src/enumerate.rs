//! Exhaustive enumeration of coefficient vectors and codewords.
//!
//! Coefficient vectors are visited in lexicographic order with the last digit
//! running fastest, so every enumeration in the crate is reproducible.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeModulus;
use crate::linalg::FpMatrix;

/// Lexicographic counter over `F_p^len`.
#[derive(Clone, Debug)]
pub struct Odometer {
    p: u32,
    digits: Vec<u32>,
    started: bool,
    done: bool,
}

impl Odometer {
    pub fn new(p: PrimeModulus, len: usize) -> Self {
        Odometer {
            p: p.get(),
            digits: vec![0; len],
            started: false,
            done: false,
        }
    }

    /// Advances to the next vector and returns the index of the leftmost digit
    /// that changed; every digit from there to the end moved by `+1 mod p`.
    /// Returns `None` once all `p^len` vectors have been visited.
    pub fn advance(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            // The zero vector is the first element; report "nothing changed".
            return Some(self.digits.len());
        }
        let mut i = self.digits.len();
        while i > 0 {
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.p {
                return Some(i);
            }
            self.digits[i] = 0;
        }
        self.done = true;
        None
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }
}

/// Calls `visit(coefficients, codeword)` for every `u ∈ F_p^r` with codeword
/// `u · basis`, in lexicographic order of `u`. The codeword is maintained
/// incrementally: each odometer step adds one copy of every changed row.
pub fn for_each_codeword(basis: &FpMatrix, mut visit: impl FnMut(&[u32], &[u32])) {
    let p = basis.modulus();
    let mut odo = Odometer::new(p, basis.nrows());
    let mut word = vec![0u32; basis.ncols()];
    while let Some(changed) = odo.advance() {
        for r in changed..basis.nrows() {
            for (w, &x) in word.iter_mut().zip(basis.row(r)) {
                *w = p.add(*w, x);
            }
        }
        visit(odo.digits(), &word);
    }
}

/// Counts codewords of `rowspan(basis)` by Hamming weight. The rows of `basis`
/// must be linearly independent, otherwise codewords are counted with
/// multiplicity.
pub fn weight_counts(basis: &FpMatrix) -> Vec<u64> {
    let p = basis.modulus();
    let n = basis.ncols();
    let mut counts = vec![0u64; n + 1];
    let mut odo = Odometer::new(p, basis.nrows());
    let mut word = vec![0u32; n];
    let mut weight = 0usize;
    while let Some(changed) = odo.advance() {
        for r in changed..basis.nrows() {
            for (w, &x) in word.iter_mut().zip(basis.row(r)) {
                if x == 0 {
                    continue;
                }
                let old = *w;
                let new = p.add(old, x);
                *w = new;
                if old == 0 {
                    weight += 1;
                } else if new == 0 {
                    weight -= 1;
                }
            }
        }
        counts[weight] += 1;
    }
    counts
}
