//! Arithmetic and linear algebra over prime fields GF(p).
//!
//! Entries are `u16` residues reduced after every operation; products are
//! formed in `u32`, so any prime below 2^16 is supported.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u32;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Handle for the field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u16,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p > u16::MAX as u32 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u16 })
    }

    pub fn modulus(self) -> u16 {
        self.p
    }

    pub fn elem(self, value: i64) -> FieldElem {
        FieldElem {
            value: value.rem_euclid(self.p as i64) as u16,
            p: self.p,
        }
    }

    pub fn zero(self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(self) -> FieldElem {
        self.elem(1)
    }

    #[inline]
    pub fn add(self, a: u16, b: u16) -> u16 {
        ((a as u32 + b as u32) % self.p as u32) as u16
    }

    #[inline]
    pub fn sub(self, a: u16, b: u16) -> u16 {
        ((a as u32 + self.p as u32 - b as u32) % self.p as u32) as u16
    }

    #[inline]
    pub fn mul(self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.p as u32) as u16
    }

    #[inline]
    pub fn neg(self, a: u16) -> u16 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(self, base: u16, mut exp: u64) -> u16 {
        let mut acc = 1 % self.p;
        let mut b = base % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: x^(p-2).
    pub fn inv(self, a: u16) -> Result<u16> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }
}

/// An element of GF(p) that remembers its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u16,
    p: u16,
}

impl FieldElem {
    pub fn value(self) -> u16 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn inv(self) -> Result<Self> {
        let value = self.field().inv(self.value)?;
        Ok(Self { value, ..self })
    }

    pub fn pow(self, exp: u64) -> Self {
        Self {
            value: self.field().pow(self.value, exp),
            ..self
        }
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.p, other.p,
            "mixed moduli GF({}) and GF({})",
            self.p, other.p
        );
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: self.field().add(self.value, rhs.value),
            ..self
        }
    }
}

impl Sub for FieldElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: self.field().sub(self.value, rhs.value),
            ..self
        }
    }
}

impl Mul for FieldElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Self {
            value: self.field().mul(self.value, rhs.value),
            ..self
        }
    }
}

impl Neg for FieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: self.field().neg(self.value),
            ..self
        }
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GfMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GfMatrix over GF({}) {}x{}", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl GfMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&v| field.elem(v).value));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from already-reduced residues.
    pub fn from_residues(field: PrimeField, rows: usize, cols: usize, data: Vec<u16>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= field.p) {
            return Err(Error::invalid(format!("entry {bad} not reduced mod {}", field.p)));
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u16 {
        self.field.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u16>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Row vector times matrix: `x · M`.
    pub fn left_mul(&self, x: &[u16]) -> Result<Vec<u16>> {
        if x.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} rows",
                x.len(),
                self.rows
            )));
        }
        let f = self.field;
        let mut out = vec![0u16; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(xr, m));
            }
        }
        Ok(out)
    }

    /// Matrix times column vector: `M · xᵀ`.
    pub fn mul_vec(&self, x: &[u16]) -> Result<Vec<u16>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(0u16, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    pub fn mul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.field.p, other.field.p));
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = GfMatrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let row = other.left_mul(self.row(r))?;
            out.data[r * other.cols..(r + 1) * other.cols].copy_from_slice(&row);
        }
        Ok(out)
    }

    /// Reduced row-echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (GfMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            m.scale_row(lead, inv);
            for r in 0..m.rows {
                let factor = m.get(r, c);
                if r != lead && factor != 0 {
                    m.sub_row_multiple(r, lead, factor);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{x : M · xᵀ = 0}`.
    pub fn nullspace(&self) -> GfMatrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = GfMatrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            basis.data[i * self.cols + fc] = 1;
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.data[i * self.cols + pc] = f.neg(r.get(pr, fc));
            }
        }
        basis
    }

    /// Column-selected copy, in the order given.
    pub fn submatrix_columns(&self, cols: &[usize]) -> Result<GfMatrix> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexError {
                index: bad,
                len: self.cols,
            });
        }
        let mut out = GfMatrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        Ok(out)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn scale_row(&mut self, r: usize, s: u16) {
        let f = self.field;
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = f.mul(*v, s);
        }
    }

    /// `row[target] -= factor * row[source]`
    pub fn sub_row_multiple(&mut self, target: usize, source: usize, factor: u16) {
        let f = self.field;
        for c in 0..self.cols {
            let s = self.get(source, c);
            let t = &mut self.data[target * self.cols + c];
            *t = f.sub(*t, f.mul(factor, s));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_examples() {
        let f = gf(11);
        assert_eq!(f.add(3, 9), 1);
        assert_eq!(f.inv(2).unwrap(), 6);
        assert_eq!(f.pow(2, 10), 1);
        assert_eq!((f.elem(3) + f.elem(9)).value(), 1);
        assert_eq!((f.elem(3) - f.elem(9)).value(), 5);
        assert_eq!((-f.elem(4)).value(), 7);
    }

    #[test]
    fn rejects_composite_and_zero_inverse() {
        assert!(matches!(PrimeField::new(4), Err(Error::NotPrime(4))));
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(gf(7).inv(0), Err(Error::DivisionByZero(7))));
    }

    #[test]
    fn inverses_exhaustive_small_primes() {
        for p in (2..=31).filter(|&p| is_prime(p)) {
            let f = gf(p);
            for x in 1..p as u16 {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), 1, "p={p} x={x}");
            }
        }
    }

    #[test]
    fn identity_rank_and_nullspace() {
        let id = GfMatrix::identity(gf(11), 6);
        assert_eq!(id.rank(), 6);
        assert_eq!(id.nullspace().rows(), 0);
    }

    #[test]
    fn repetition_dual() {
        let m = GfMatrix::from_rows(gf(2), &[[1, 1]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.to_rows(), vec![vec![1, 1]]);
    }

    #[test]
    fn column_selection() {
        let m = GfMatrix::from_rows(gf(5), &[[1, 2, 3], [4, 0, 1]]).unwrap();
        assert_eq!(m.submatrix_columns(&[0, 1, 2]).unwrap(), m);
        let empty = m.submatrix_columns(&[]).unwrap();
        assert_eq!((empty.rows(), empty.cols(), empty.rank()), (2, 0, 0));
        assert_eq!(m.submatrix_columns(&[2, 0]).unwrap().to_rows(), vec![vec![3, 1], vec![1, 4]]);
        assert!(matches!(
            m.submatrix_columns(&[3]),
            Err(Error::IndexError { index: 3, len: 3 })
        ));
    }

    fn arb_matrix() -> impl Strategy<Value = GfMatrix> {
        (prop::sample::select(vec![2u32, 3, 5, 7, 11, 13]), 1usize..7, 1usize..9).prop_flat_map(
            |(p, r, c)| {
                prop::collection::vec(0..p as i64, r * c).prop_map(move |v| {
                    let rows: Vec<Vec<i64>> = v.chunks(c).map(|x| x.to_vec()).collect();
                    GfMatrix::from_rows(gf(p), &rows).unwrap()
                })
            },
        )
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.rows(), m.cols());
            for r in 0..ns.rows() {
                prop_assert!(m.mul_vec(ns.row(r)).unwrap().iter().all(|&v| v == 0));
            }
            prop_assert_eq!(ns.rank(), ns.rows());
        }

        #[test]
        fn rank_invariant_under_row_ops(m in arb_matrix(), a in 0usize..7, b in 0usize..7, s in 1u16..13) {
            let mut n = m.clone();
            let (a, b) = (a % m.rows(), b % m.rows());
            n.swap_rows(a, b);
            let s = s % m.modulus();
            if s != 0 {
                n.scale_row(a, s);
            }
            prop_assert_eq!(n.rank(), m.rank());
        }
    }
}
