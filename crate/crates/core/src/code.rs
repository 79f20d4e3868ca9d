//! Uniform superpositions over the codewords of a linear code over GF(p).
//!
//! A [`LinearCodeState`] with generator `G` (k × n, full row rank) stands for
//! `p^{-k/2} Σ_{x ∈ GF(p)^k} |x·G⟩`. Its entanglement across `A | B` is
//! `rank(G_A) + rank(G_B) − k` dits, where `G_A` keeps the columns in `A`.

use serde::{Deserialize, Serialize};

use crate::entropy::binomial;
use crate::error::{Error, Result};
use crate::gf::{is_prime, GfMatrix, PrimeField};
use crate::state::{dense_len, StateVector};
use crate::CoeffState;

/// Largest codebook we enumerate (2^26 words).
pub const MAX_CODEWORDS: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearCodeState {
    gen: GfMatrix,
}

impl LinearCodeState {
    /// Wraps a generator matrix; its rows must be linearly independent.
    pub fn new(gen: GfMatrix) -> Result<Self> {
        if gen.rank() != gen.rows() {
            return Err(Error::invalid(format!(
                "generator has {} rows but rank {}",
                gen.rows(),
                gen.rank()
            )));
        }
        Ok(Self { gen })
    }

    /// The code cut out by the parity checks `h · xᵀ = 0`.
    pub fn from_parity_checks(h: &GfMatrix) -> Self {
        Self { gen: h.nullspace() }
    }

    pub fn generator(&self) -> &GfMatrix {
        &self.gen
    }

    pub fn p(&self) -> u16 {
        self.gen.modulus()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn codeword_count(&self) -> u128 {
        (self.p() as u128).pow(self.k() as u32)
    }

    /// Codewords `x·G` with `x` running lexicographically over GF(p)^k.
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        let size = self.codeword_count();
        if size > MAX_CODEWORDS {
            return Err(Error::TooLarge {
                what: "codeword enumeration",
                size,
                budget: MAX_CODEWORDS,
            });
        }
        Ok(Codewords {
            gen: &self.gen,
            digits: vec![0; self.k()],
            word: vec![0; self.n()],
            done: false,
        })
    }

    /// Minimum weight over nonzero codewords, `None` for the zero code.
    pub fn min_hamming_distance(&self) -> Result<Option<usize>> {
        let mut best: Option<usize> = None;
        let mut words = self.codewords()?;
        words.next();
        words.for_each_word(|w| {
            let weight = w.iter().filter(|&&x| x != 0).count();
            if best.is_none_or(|b| weight < b) {
                best = Some(weight);
            }
        });
        Ok(best)
    }

    fn rank_of_columns(&self, cols: &[usize]) -> Result<usize> {
        Ok(self.gen.submatrix_columns(cols)?.rank())
    }

    /// Entanglement entropy of sites `a` (0-based) in dits.
    pub fn code_entropy(&self, a: &[usize]) -> Result<usize> {
        let mut in_a = vec![false; self.n()];
        for &s in a {
            if s >= self.n() {
                return Err(Error::IndexError { index: s, len: self.n() });
            }
            in_a[s] = true;
        }
        let b: Vec<usize> = (0..self.n()).filter(|&s| !in_a[s]).collect();
        let a: Vec<usize> = (0..self.n()).filter(|&s| in_a[s]).collect();
        Ok(self.rank_of_columns(&a)? + self.rank_of_columns(&b)? - self.k())
    }

    /// Whether every balanced cut is maximally entangled, i.e. every `n/2`
    /// columns of the generator are independent.
    pub fn is_ame_code(&self) -> Result<AmeCodeCheck> {
        let (n, k) = (self.n(), self.k());
        if n % 2 != 0 || 2 * k != n {
            return Ok(AmeCodeCheck {
                is_ame: false,
                reason: Some(format!("k = {k} != n/2 for n = {n}")),
                witness: None,
                cuts_checked: 0,
            });
        }
        let half = n / 2;
        let mut idx: Vec<usize> = (0..half).collect();
        let mut checked = 0;
        loop {
            checked += 1;
            if self.rank_of_columns(&idx)? != half {
                return Ok(AmeCodeCheck {
                    is_ame: false,
                    reason: Some("dependent column subset".into()),
                    witness: Some(idx.iter().map(|&s| s + 1).collect()),
                    cuts_checked: checked,
                });
            }
            let Some(i) = (0..half).rev().find(|&i| idx[i] != i + n - half) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..half {
                idx[j] = idx[j - 1] + 1;
            }
        }
        debug_assert_eq!(checked as u128, binomial(n, half));
        Ok(AmeCodeCheck {
            is_ame: true,
            reason: None,
            witness: None,
            cuts_checked: checked,
        })
    }

    /// Dense coefficient vector: 1 on every codeword, 0 elsewhere.
    pub fn dense_statevector(&self) -> Result<CoeffState> {
        let d = self.p() as usize;
        dense_len(self.n(), d)?;
        let mut sv = StateVector::<i64>::zeros(self.n(), d)?;
        let mut words = self.codewords()?;
        let mut err = None;
        words.for_each_word(|w| {
            let digits: Vec<usize> = w.iter().map(|&x| x as usize).collect();
            match sv.index_of(&digits) {
                Ok(i) => sv.amps_mut()[i] = 1,
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(sv),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmeCodeCheck {
    pub is_ame: bool,
    pub reason: Option<String>,
    /// A balanced cut (1-based) whose columns are dependent.
    pub witness: Option<Vec<usize>>,
    pub cuts_checked: usize,
}

/// Odometer over GF(p)^k that updates `x·G` by adding one generator row per
/// digit change.
pub struct Codewords<'a> {
    gen: &'a GfMatrix,
    digits: Vec<u16>,
    word: Vec<u16>,
    done: bool,
}

impl Codewords<'_> {
    fn advance(&mut self) {
        let f = self.gen.field();
        let p = f.modulus();
        for i in (0..self.digits.len()).rev() {
            // Adding row i once moves digit i up by one; the wrap p-1 -> 0
            // adds it p times in total, which is zero.
            let row = self.gen.row(i);
            for (w, &g) in self.word.iter_mut().zip(row) {
                *w = f.add(*w, g);
            }
            self.digits[i] += 1;
            if self.digits[i] < p {
                return;
            }
            self.digits[i] = 0;
        }
        self.done = true;
    }

    /// Visits the remaining codewords without allocating.
    pub fn for_each_word(&mut self, mut f: impl FnMut(&[u16])) {
        while !self.done {
            f(&self.word);
            self.advance();
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = Vec<u16>;

    fn next(&mut self) -> Option<Vec<u16>> {
        if self.done {
            return None;
        }
        let out = self.word.clone();
        self.advance();
        Some(out)
    }
}

/// Extended Reed–Solomon generator over GF(p): column `j < p` is
/// `(1, j, j², ..., j^{k-1})ᵀ` and the last column `(0, ..., 0, 1)ᵀ` is the
/// point at infinity; `n = p + 1`, `k = (p + 1) / 2`.
pub fn rs_generator(p: u32) -> Result<GfMatrix> {
    if p == 2 || !is_prime(p) {
        return Err(Error::UnsupportedPrime(p));
    }
    let f = PrimeField::new(p)?;
    let (n, k) = (p as usize + 1, (p as usize + 1) / 2);
    let mut g = GfMatrix::zeros(f, k, n);
    for j in 0..p as usize {
        for r in 0..k {
            g.set(r, j, f.pow(j as u16, r as u64));
        }
    }
    g.set(k - 1, n - 1, 1);
    Ok(g)
}

pub fn rs_code(p: u32) -> Result<LinearCodeState> {
    LinearCodeState::new(rs_generator(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{platonic, Solid};
    use std::collections::BTreeSet;

    fn d2_code() -> LinearCodeState {
        LinearCodeState::from_parity_checks(&platonic(Solid::Dodecahedron).face_parity_matrix())
    }

    #[test]
    fn rs11_matches_printed_generator() {
        let printed: [[u16; 12]; 6] = [
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
            [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0],
            [0, 1, 4, 9, 5, 3, 3, 5, 9, 4, 1, 0],
            [0, 1, 8, 5, 9, 4, 7, 2, 6, 3, 10, 0],
            [0, 1, 5, 4, 3, 9, 9, 3, 4, 5, 1, 0],
            [0, 1, 10, 1, 1, 1, 10, 10, 10, 1, 10, 1],
        ];
        let g = rs_generator(11).unwrap();
        assert_eq!(g.to_rows(), printed.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
        assert_eq!(g.rank(), 6);
    }

    #[test]
    fn rs_rejects_bad_primes() {
        assert!(matches!(rs_generator(2), Err(Error::UnsupportedPrime(2))));
        assert!(matches!(rs_generator(9), Err(Error::UnsupportedPrime(9))));
    }

    #[test]
    fn rs5_special_columns() {
        let g = rs_generator(5).unwrap();
        assert_eq!((g.rows(), g.cols()), (3, 6));
        assert_eq!((0..3).map(|r| g.get(r, 0)).collect::<Vec<_>>(), vec![1, 0, 0]);
        assert_eq!((0..3).map(|r| g.get(r, 5)).collect::<Vec<_>>(), vec![0, 0, 1]);
    }

    #[test]
    fn parity_check_codes() {
        let f2 = PrimeField::new(2).unwrap();
        let bell = LinearCodeState::from_parity_checks(&GfMatrix::from_rows(f2, &[[1, 1]]).unwrap());
        assert_eq!(bell.k(), 1);
        let words: BTreeSet<Vec<u16>> = bell.codewords().unwrap().collect();
        assert_eq!(words, BTreeSet::from([vec![0, 0], vec![1, 1]]));
        assert!(bell.is_ame_code().unwrap().is_ame);
        let dense = bell.dense_statevector().unwrap();
        assert_eq!(dense.amps(), &[1, 0, 0, 1]);

        let full = LinearCodeState::from_parity_checks(&GfMatrix::identity(f2, 4));
        assert_eq!(full.k(), 0);
        assert_eq!(full.codewords().unwrap().collect::<Vec<_>>(), vec![vec![0; 4]]);
        assert_eq!(full.min_hamming_distance().unwrap(), None);
        assert_eq!(full.code_entropy(&[0, 1]).unwrap(), 0);
    }

    #[test]
    fn dodecahedron_code() {
        let code = d2_code();
        assert_eq!(code.k(), 8);
        let h = platonic(Solid::Dodecahedron).face_parity_matrix();
        let words: Vec<Vec<u16>> = code.codewords().unwrap().collect();
        assert_eq!(words.len(), 256);
        assert_eq!(words.iter().collect::<BTreeSet<_>>().len(), 256);
        for w in &words {
            assert!(h.mul_vec(w).unwrap().iter().all(|&x| x == 0));
        }
        assert_eq!(code.code_entropy(&[0, 1, 2, 3, 4]).unwrap(), 4);
        assert_eq!(code.code_entropy(&[0, 1, 2, 3, 4, 15, 16, 17, 18, 19]).unwrap(), 8);
        assert_eq!(code.code_entropy(&[]).unwrap(), 0);
        let check = code.is_ame_code().unwrap();
        assert!(!check.is_ame);
        assert!(check.reason.unwrap().contains("k = 8"));
    }

    #[test]
    fn dodecahedron_code_distance_by_brute_force() {
        // Independent oracle: scan all 2^20 bit patterns for parity-satisfying words.
        let h = platonic(Solid::Dodecahedron).face_parity_matrix();
        let masks: Vec<u32> = (0..12)
            .map(|r| (0..20).filter(|&c| h.get(r, c) == 1).map(|c| 1u32 << c).sum())
            .collect();
        let brute = (1u32..1 << 20)
            .filter(|x| masks.iter().all(|m| (x & m).count_ones() % 2 == 0))
            .map(|x| x.count_ones() as usize)
            .min();
        assert_eq!(brute, Some(6));
        assert_eq!(d2_code().min_hamming_distance().unwrap(), brute);
    }

    #[test]
    fn rs3_matches_ame43_up_to_relabeling() {
        // Affine relabelings s -> a*s + b (a != 0) on each of the 4 sites.
        let rs: BTreeSet<Vec<usize>> = rs_code(3)
            .unwrap()
            .codewords()
            .unwrap()
            .map(|w| w.iter().map(|&x| x as usize).collect())
            .collect();
        let ame = crate::catalog::ame43();
        let target: BTreeSet<Vec<usize>> = ame.support().into_iter().map(|i| ame.digits(i)).collect();
        assert_eq!(rs.len(), 9);
        let maps: Vec<(usize, usize)> = (1..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        let mut found = false;
        'outer: for m0 in &maps {
            for m1 in &maps {
                for m2 in &maps {
                    for m3 in &maps {
                        let ms = [m0, m1, m2, m3];
                        let image: BTreeSet<Vec<usize>> = rs
                            .iter()
                            .map(|w| w.iter().zip(ms).map(|(&s, &(a, b))| (a * s + b) % 3).collect())
                            .collect();
                        if image == target {
                            found = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn rs11_distance_and_ame() {
        let code = rs_code(11).unwrap();
        assert_eq!(code.codeword_count(), 11u128.pow(6));
        assert_eq!(code.min_hamming_distance().unwrap(), Some(7));
        let check = code.is_ame_code().unwrap();
        assert!(check.is_ame);
        assert_eq!(check.cuts_checked, 924);
        assert!(matches!(code.dense_statevector(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn rs_any_k_columns_independent_by_vandermonde() {
        // Oracle: a k-subset of columns is invertible iff its Vandermonde-type
        // determinant prod_{i<j}(x_j - x_i) is nonzero (the infinity column
        // drops out of the product), which holds for distinct points mod p.
        for p in [3u32, 5, 7, 11, 13] {
            let code = rs_code(p).unwrap();
            let (n, k) = (code.n(), code.k());
            let f = PrimeField::new(p).unwrap();
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let finite: Vec<u16> = idx.iter().filter(|&&c| c < n - 1).map(|&c| c as u16).collect();
                let mut det = 1u16;
                for i in 0..finite.len() {
                    for j in i + 1..finite.len() {
                        det = f.mul(det, f.sub(finite[j], finite[i]));
                    }
                }
                assert_ne!(det, 0);
                assert_eq!(code.generator().submatrix_columns(&idx).unwrap().rank(), k, "p={p} {idx:?}");
                let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }

    #[test]
    fn rank_by_codeword_counting() {
        // Oracle: rank = log_p |row space|, counted by brute-force enumeration.
        let g = rs_generator(11).unwrap();
        let mut seen = std::collections::HashSet::new();
        let mut x = vec![0u16; 6];
        loop {
            seen.insert(g.left_mul(&x).unwrap());
            let Some(i) = (0..6).rev().find(|&i| x[i] != 10) else { break };
            x[i] += 1;
            for v in &mut x[i + 1..] {
                *v = 0;
            }
        }
        assert_eq!(seen.len(), 11usize.pow(6));
    }

    #[test]
    fn code_entropy_symmetry_exhaustive_small() {
        for p in [3u32, 5, 7, 11] {
            let code = rs_code(p).unwrap();
            let n = code.n();
            for mask in 0u32..1 << n {
                let a: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
                let b: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 0).collect();
                let s = code.code_entropy(&a).unwrap();
                assert_eq!(s, code.code_entropy(&b).unwrap());
                assert!(s <= a.len().min(b.len()).min(code.k()));
            }
        }
    }
}
