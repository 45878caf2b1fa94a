//! Dense vectors and matrices over `F_p` with exact Gaussian elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;

/// A vector over `F_p` with entries stored as canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector {
    modulus: PrimeModulus,
    entries: Vec<u32>,
}

impl FpVector {
    /// Builds a vector from arbitrary integers, normalizing each into `[0, p)`.
    pub fn from_i64(modulus: PrimeModulus, values: &[i64]) -> Self {
        FpVector {
            modulus,
            entries: values.iter().map(|&v| modulus.normalize(v)).collect(),
        }
    }

    /// Builds a vector from entries already reduced mod `p`.
    pub fn new(modulus: PrimeModulus, entries: Vec<u32>) -> Result<Self> {
        if entries.iter().any(|&e| e >= modulus.get()) {
            return Err(Error::ParameterOutOfRange("vector entry not in [0, p)"));
        }
        Ok(FpVector { modulus, entries })
    }

    pub fn zeros(modulus: PrimeModulus, len: usize) -> Self {
        FpVector {
            modulus,
            entries: vec![0; len],
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    pub fn dot(&self, other: &FpVector) -> Result<u32> {
        check_same(self.modulus, other.modulus)?;
        check_len(self.len(), other.len())?;
        Ok(dot(self.modulus, &self.entries, &other.entries))
    }

    pub fn add(&self, other: &FpVector) -> Result<FpVector> {
        check_same(self.modulus, other.modulus)?;
        check_len(self.len(), other.len())?;
        let p = self.modulus;
        Ok(FpVector {
            modulus: p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: u32) -> FpVector {
        let p = self.modulus;
        FpVector {
            modulus: p,
            entries: self.entries.iter().map(|&a| p.mul(a, c)).collect(),
        }
    }

    /// Keeps only the listed coordinates, in the given order.
    pub fn select(&self, columns: &[usize]) -> FpVector {
        FpVector {
            modulus: self.modulus,
            entries: columns.iter().map(|&c| self.entries[c]).collect(),
        }
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn dot(p: PrimeModulus, a: &[u32], b: &[u32]) -> u32 {
    let pm = p.as_u64();
    let mut acc = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        acc = (acc + x as u64 * y as u64) % pm;
    }
    acc as u32
}

fn check_same(a: PrimeModulus, b: PrimeModulus) -> Result<()> {
    if a != b {
        return Err(Error::ModulusMismatch {
            left: a.get(),
            right: b.get(),
        });
    }
    Ok(())
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// A dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    modulus: PrimeModulus,
    nrows: usize,
    ncols: usize,
    data: Vec<u32>,
}

/// Output of [`FpMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The reduced matrix, same shape as the input (zero rows at the bottom).
    pub reduced: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(modulus: PrimeModulus, nrows: usize, ncols: usize) -> Self {
        FpMatrix {
            modulus,
            nrows,
            ncols,
            data: vec![0; nrows * ncols],
        }
    }

    pub fn identity(modulus: PrimeModulus, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of already-reduced entries.
    pub fn from_rows(modulus: PrimeModulus, ncols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            check_len(ncols, r.len())?;
            if r.iter().any(|&e| e >= modulus.get()) {
                return Err(Error::ParameterOutOfRange("matrix entry not in [0, p)"));
            }
            data.extend_from_slice(r);
        }
        Ok(FpMatrix {
            modulus,
            nrows: rows.len(),
            ncols,
            data,
        })
    }

    /// Builds a matrix from signed integers, normalizing into `[0, p)`.
    pub fn from_i64_rows(modulus: PrimeModulus, ncols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            check_len(ncols, r.len())?;
            data.extend(r.iter().map(|&v| modulus.normalize(v)));
        }
        Ok(FpMatrix {
            modulus,
            nrows: rows.len(),
            ncols,
            data,
        })
    }

    pub fn from_vectors(modulus: PrimeModulus, ncols: usize, rows: &[FpVector]) -> Result<Self> {
        let mut m = FpMatrix::zeros(modulus, 0, ncols);
        for r in rows {
            m.push_row(r.entries())?;
            check_same(modulus, r.modulus())?;
        }
        Ok(m)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.ncols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.ncols + c] = v % self.modulus.get();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn row_vector(&self, r: usize) -> FpVector {
        FpVector {
            modulus: self.modulus,
            entries: self.row(r).to_vec(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.nrows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[u32]) -> Result<()> {
        check_len(self.ncols, row.len())?;
        let p = self.modulus.get();
        self.data.extend(row.iter().map(|&e| e % p));
        self.nrows += 1;
        Ok(())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        check_same(self.modulus, other.modulus)?;
        check_len(self.ncols, other.ncols)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix {
            modulus: self.modulus,
            nrows: self.nrows + other.nrows,
            ncols: self.ncols,
            data,
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.ncols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        FpMatrix {
            modulus: self.modulus,
            nrows: rows.len(),
            ncols: self.ncols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(self.nrows * cols.len());
        for r in 0..self.nrows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        FpMatrix {
            modulus: self.modulus,
            nrows: self.nrows,
            ncols: cols.len(),
            data,
        }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.modulus, self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                t.data[c * self.nrows + r] = self.get(r, c);
            }
        }
        t
    }

    /// `self · other`.
    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        check_same(self.modulus, other.modulus)?;
        check_len(self.ncols, other.nrows)?;
        let ot = other.transpose();
        let mut out = FpMatrix::zeros(self.modulus, self.nrows, other.ncols);
        for r in 0..self.nrows {
            for c in 0..other.ncols {
                out.data[r * other.ncols + c] = dot(self.modulus, self.row(r), ot.row(c));
            }
        }
        Ok(out)
    }

    /// `self · v`.
    pub fn mul_vec(&self, v: &FpVector) -> Result<FpVector> {
        check_same(self.modulus, v.modulus)?;
        check_len(self.ncols, v.len())?;
        Ok(FpVector {
            modulus: self.modulus,
            entries: self
                .rows()
                .map(|row| dot(self.modulus, row, v.entries()))
                .collect(),
        })
    }

    /// `coeffs · self`, the linear combination of rows.
    pub fn combine(&self, coeffs: &[u32]) -> Result<FpVector> {
        check_len(self.nrows, coeffs.len())?;
        let p = self.modulus;
        let pm = p.as_u64();
        let mut acc = vec![0u64; self.ncols];
        for (r, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (a, &x) in acc.iter_mut().zip(self.row(r)) {
                *a = (*a + c as u64 * x as u64) % pm;
            }
        }
        Ok(FpVector {
            modulus: p,
            entries: acc.into_iter().map(|a| a as u32).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    /// Reduced row-echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.ncols {
            if rank == m.nrows {
                break;
            }
            let Some(pivot_row) = (rank..m.nrows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(rank, pivot_row);
            let inv = p.inv(m.get(rank, col)).expect("pivot is nonzero");
            m.scale_row(rank, inv);
            for r in 0..m.nrows {
                if r != rank {
                    let factor = m.get(r, col);
                    if factor != 0 {
                        m.add_scaled_row(r, rank, p.neg(factor));
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Rref {
            reduced: m,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_basis(&self) -> FpMatrix {
        let Rref {
            reduced, rank, ..
        } = self.rref();
        let rows: Vec<usize> = (0..rank).collect();
        reduced.select_rows(&rows)
    }

    /// A basis of `{v : self · v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> FpMatrix {
        let p = self.modulus;
        let Rref {
            reduced,
            rank,
            pivots,
        } = self.rref();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = FpMatrix::zeros(p, 0, self.ncols);
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.ncols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = p.neg(reduced.get(r, free));
            }
            basis.push_row(&v).expect("length matches");
        }
        basis
    }

    /// Solves `u · self = v`; returns the coefficients when `v` is in the row space.
    pub fn in_rowspan(&self, v: &FpVector) -> Result<Option<FpVector>> {
        check_same(self.modulus, v.modulus)?;
        check_len(self.ncols, v.len())?;
        let p = self.modulus;
        // Solve self^T · u = v with an augmented elimination.
        let mut aug = FpMatrix::zeros(p, self.ncols, self.nrows + 1);
        for c in 0..self.ncols {
            for r in 0..self.nrows {
                aug.set(c, r, self.get(r, c));
            }
            aug.set(c, self.nrows, v.entries()[c]);
        }
        let Rref {
            reduced, pivots, ..
        } = aug.rref();
        if pivots.last() == Some(&self.nrows) {
            return Ok(None);
        }
        let mut u = vec![0u32; self.nrows];
        for (r, &pc) in pivots.iter().enumerate() {
            u[pc] = reduced.get(r, self.nrows);
        }
        Ok(Some(FpVector {
            modulus: p,
            entries: u,
        }))
    }

    /// True when both row spaces coincide.
    pub fn same_rowspan(&self, other: &FpMatrix) -> Result<bool> {
        check_same(self.modulus, other.modulus)?;
        check_len(self.ncols, other.ncols)?;
        let a = self.rank();
        let b = other.rank();
        Ok(a == b && self.stack(other)?.rank() == a)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.ncols {
            self.data.swap(a * self.ncols + c, b * self.ncols + c);
        }
    }

    fn scale_row(&mut self, r: usize, c: u32) {
        let p = self.modulus;
        for x in &mut self.data[r * self.ncols..(r + 1) * self.ncols] {
            *x = p.mul(*x, c);
        }
    }

    /// `row[dst] += c · row[src]`.
    fn add_scaled_row(&mut self, dst: usize, src: usize, c: u32) {
        let p = self.modulus;
        let n = self.ncols;
        for i in 0..n {
            let s = self.data[src * n + i];
            if s != 0 {
                let d = &mut self.data[dst * n + i];
                *d = p.add(*d, p.mul(s, c));
            }
        }
    }

    pub(crate) fn eliminate_on_columns(&mut self, columns: &[usize]) -> core::result::Result<(), usize> {
        let p = self.modulus;
        for (j, &col) in columns.iter().enumerate() {
            let Some(pivot_row) = (j..self.nrows).find(|&r| self.get(r, col) != 0) else {
                return Err(j);
            };
            self.swap_rows(j, pivot_row);
            let inv = p.inv(self.get(j, col)).expect("pivot is nonzero");
            self.scale_row(j, inv);
            for r in 0..self.nrows {
                if r != j {
                    let factor = self.get(r, col);
                    if factor != 0 {
                        self.add_scaled_row(r, j, p.neg(factor));
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        let p = self.modulus;
        for x in &mut self.data[r * self.ncols..(r + 1) * self.ncols] {
            *x = p.neg(*x);
        }
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.nrows {
            for (i, e) in self.row(r).iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn mat(p: u64, rows: &[&[u32]]) -> FpMatrix {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        FpMatrix::from_rows(fp(p), rows[0].len(), &rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = FpMatrix::identity(fp(5), 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 3);

        let m = mat(5, &[&[1, 1, 1, 1, 1], &[0, 1, 2, 3, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        // Hand elimination: row0 - row1.
        assert_eq!(r.reduced.row(0), &[1, 0, 4, 3, 2]);
        assert_eq!(r.reduced.row(1), &[0, 1, 2, 3, 4]);

        assert_eq!(FpMatrix::zeros(fp(7), 3, 4).rref().rank, 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FpMatrix::identity(fp(5), 4).kernel_basis().nrows(), 0);
        let z = FpMatrix::zeros(fp(3), 1, 4);
        let k = z.kernel_basis();
        assert_eq!(k.nrows(), 4);
        assert_eq!(k.rank(), 4);
    }

    #[test]
    fn rowspan_membership() {
        let p = fp(5);
        let m = mat(5, &[&[1, 1, 1, 1, 1], &[0, 1, 2, 3, 4], &[0, 1, 4, 4, 1]]);
        let v = m.combine(&[2, 1, 0]).unwrap();
        let u = m.in_rowspan(&v).unwrap().unwrap();
        assert_eq!(u.entries(), &[2, 1, 0]);

        let rs2 = mat(5, &[&[1, 1, 1, 1, 1], &[0, 1, 2, 3, 4]]);
        let ones = FpVector::from_i64(p, &[1, 1, 1, 1, 1]);
        assert!(rs2.in_rowspan(&ones).unwrap().is_some());
        let e0 = FpVector::from_i64(p, &[1, 0, 0, 0, 0]);
        assert!(rs2.in_rowspan(&e0).unwrap().is_none());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = FpMatrix::zeros(fp(5), 2, 3);
        let b = FpMatrix::zeros(fp(7), 2, 3);
        assert!(a.stack(&b).is_err());
        assert!(a.mul(&a).is_err());
        let v = FpVector::zeros(fp(5), 4);
        assert!(a.in_rowspan(&v).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = FpMatrix> {
        (prop::sample::select(vec![3u64, 5, 7]), 1usize..6, 1usize..7).prop_flat_map(
            |(p, r, c)| {
                prop::collection::vec(0u32..p as u32, r * c).prop_map(move |data| {
                    let rows: Vec<Vec<u32>> = data.chunks(c).map(|ch| ch.to_vec()).collect();
                    FpMatrix::from_rows(fp(p), c, &rows).unwrap()
                })
            },
        )
    }

    proptest! {
        #[test]
        fn rref_preserves_rowspan(m in arb_matrix()) {
            let r = m.rref();
            prop_assert!(m.same_rowspan(&r.reduced).unwrap());
            for i in 0..m.nrows() {
                prop_assert!(r.reduced.in_rowspan(&m.row_vector(i)).unwrap().is_some());
            }
            prop_assert_eq!(r.pivots.len(), r.rank);
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.nrows(), m.ncols());
            prop_assert_eq!(k.rank(), k.nrows());
            for i in 0..k.nrows() {
                prop_assert!(m.mul_vec(&k.row_vector(i)).unwrap().is_zero());
            }
        }
    }
}
