//! Dense amplitude arrays over `n` qudits of local dimension `d`.
//!
//! Basis index `i` encodes `(s_1, ..., s_n)` big-endian in base `d`, so `s_1`
//! is the most significant digit: for qubits, `i = 5` is `|00101⟩`.

use crate::error::{Error, Result};
use crate::scalar::{Amplitude, Real};

/// Largest number of amplitudes we are willing to allocate (2^26).
pub const MAX_DENSE_AMPLITUDES: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    n: usize,
    d: usize,
    amps: Vec<T>,
}

pub fn dense_len(n: usize, d: usize) -> Result<usize> {
    let size = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > MAX_DENSE_AMPLITUDES as u128 {
        return Err(Error::TooLarge {
            what: "dense state",
            size,
            budget: MAX_DENSE_AMPLITUDES as u128,
        });
    }
    Ok(size as usize)
}

impl<T: Amplitude> StateVector<T> {
    pub fn new(n: usize, d: usize, amps: Vec<T>) -> Result<Self> {
        if d < 2 {
            return Err(Error::invalid("local dimension must be at least 2"));
        }
        let len = dense_len(n, d)?;
        if amps.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "{} amplitudes for {n} sites of dimension {d}",
                amps.len()
            )));
        }
        Ok(Self { n, d, amps })
    }

    pub fn zeros(n: usize, d: usize) -> Result<Self> {
        let len = dense_len(n, d)?;
        Self::new(n, d, vec![T::zero(); len])
    }

    /// The product state `|s_1 ... s_n⟩` with unit coefficient.
    pub fn basis(n: usize, d: usize, digits: &[usize]) -> Result<Self> {
        let mut sv = Self::zeros(n, d)?;
        let i = sv.index_of(digits)?;
        sv.amps[i] = T::one();
        Ok(sv)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amps(&self) -> &[T] {
        &self.amps
    }

    pub fn amps_mut(&mut self) -> &mut [T] {
        &mut self.amps
    }

    pub fn into_amps(self) -> Vec<T> {
        self.amps
    }

    pub fn amp(&self, i: usize) -> T {
        self.amps[i]
    }

    pub fn amp_at(&self, digits: &[usize]) -> Result<T> {
        Ok(self.amps[self.index_of(digits)?])
    }

    pub fn index_of(&self, digits: &[usize]) -> Result<usize> {
        if digits.len() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "{} digits for {} sites",
                digits.len(),
                self.n
            )));
        }
        digits.iter().try_fold(0usize, |acc, &s| {
            if s >= self.d {
                Err(Error::IndexError { index: s, len: self.d })
            } else {
                Ok(acc * self.d + s)
            }
        })
    }

    pub fn digits(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = i % self.d;
            i /= self.d;
        }
        out
    }

    /// Indices of nonzero amplitudes.
    pub fn support(&self) -> Vec<usize> {
        (0..self.amps.len()).filter(|&i| !self.amps[i].is_zero()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.abs_sqr_f64()).sum()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    /// Rescales to unit norm in floating point.
    pub fn normalized<F: Real>(&self) -> Result<StateVector<F>> {
        let norm = self.norm_sqr();
        if norm == 0.0 {
            return Err(Error::ZeroState);
        }
        let scale = 1.0 / norm.sqrt();
        let amps = self
            .amps
            .iter()
            .map(|a| F::from_f64(a.to_f64().unwrap_or(f64::NAN) * scale).unwrap())
            .collect();
        Ok(StateVector {
            n: self.n,
            d: self.d,
            amps,
        })
    }

    /// Converts each amplitude to another scalar type without rescaling.
    pub fn cast<U: Amplitude>(&self) -> Result<StateVector<U>> {
        let amps = self
            .amps
            .iter()
            .map(|&a| U::from(a).ok_or_else(|| Error::invalid(format!("amplitude {a:?} does not fit"))))
            .collect::<Result<Vec<U>>>()?;
        Ok(StateVector {
            n: self.n,
            d: self.d,
            amps,
        })
    }

    /// Relabels sites: site `j` of the result carries site `perm[j]` of `self`.
    pub fn permute_sites(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::ShapeMismatch("permutation length".into()));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        let weights: Vec<usize> = (0..self.n).map(|j| self.d.pow((self.n - 1 - j) as u32)).collect();
        let mut out = vec![T::zero(); self.amps.len()];
        for (t, slot) in out.iter_mut().enumerate() {
            let digits = self.digits(t);
            let src: usize = (0..self.n).map(|j| digits[j] * weights[perm[j]]).sum();
            *slot = self.amps[src];
        }
        Ok(Self {
            n: self.n,
            d: self.d,
            amps: out,
        })
    }

    /// Cyclic relabeling by `k` places: for `k = 1`,
    /// `|s_1 s_2 ... s_n⟩ → |s_n s_1 ... s_{n-1}⟩`.
    pub fn cyclic_shift(&self, k: usize) -> Self {
        let n = self.n;
        let perm: Vec<usize> = (0..n).map(|j| (j + n - k % n.max(1)) % n).collect();
        self.permute_sites(&perm).expect("rotation is a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_endian_indexing() {
        let sv = StateVector::<i64>::zeros(5, 2).unwrap();
        assert_eq!(sv.digits(5), vec![0, 0, 1, 0, 1]);
        assert_eq!(sv.index_of(&[0, 0, 1, 0, 1]).unwrap(), 5);
        let q = StateVector::<i64>::zeros(4, 3).unwrap();
        assert_eq!(q.index_of(&[1, 2, 0, 2]).unwrap(), 27 + 18 + 2);
    }

    #[test]
    fn shift_moves_last_site_first() {
        let sv = StateVector::<i64>::basis(5, 2, &[1, 0, 0, 0, 0]).unwrap();
        let shifted = sv.cyclic_shift(1);
        assert_eq!(shifted.support(), vec![shifted.index_of(&[0, 1, 0, 0, 0]).unwrap()]);
        let sv = StateVector::<i64>::basis(5, 2, &[0, 0, 0, 0, 1]).unwrap();
        assert_eq!(sv.cyclic_shift(1).support(), vec![16]);
        assert_eq!(sv.cyclic_shift(5), sv);
    }

    #[test]
    fn normalize_and_errors() {
        let sv = StateVector::new(1, 2, vec![3i64, 4]).unwrap();
        let f = sv.normalized::<f64>().unwrap();
        assert!((f.amp(0) - 0.6).abs() < 1e-15);
        assert!(f.is_normalized(1e-12));
        assert!(matches!(
            StateVector::<i64>::zeros(2, 2).unwrap().normalized::<f64>(),
            Err(Error::ZeroState)
        ));
        assert!(StateVector::new(2, 2, vec![1i64; 3]).is_err());
        assert!(matches!(StateVector::<i8>::zeros(30, 2), Err(Error::TooLarge { .. })));
    }
}
