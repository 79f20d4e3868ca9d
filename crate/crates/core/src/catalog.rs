//! Explicit AME states as exact integer coefficient vectors.
//!
//! Every constructor returns a [`CoeffState`]: the amplitudes are the integer
//! coefficients and the normalization `1/sqrt(sum c^2)` is implicit. Call
//! [`StateVector::normalized`] to get unit-norm floating amplitudes.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::state::StateVector;
use crate::CoeffState;

const COEFFICIENTS: &str = include_str!("../data/coefficients.toml");

#[derive(Debug, Deserialize)]
struct CoefficientFile {
    ame52: Ame52Tables,
    ame62: FlatList,
    ame52_rotation_invariant: RotationTerms,
}

#[derive(Debug, Deserialize)]
struct Ame52Tables {
    table: Vec<(usize, String, String)>,
    flat: Vec<i64>,
}

#[derive(Debug, Deserialize)]
struct FlatList {
    flat: Vec<i64>,
}

#[derive(Debug, Deserialize)]
struct RotationTerms {
    terms: Vec<(String, String)>,
}

fn data() -> &'static CoefficientFile {
    static DATA: OnceLock<CoefficientFile> = OnceLock::new();
    DATA.get_or_init(|| toml::from_str(COEFFICIENTS).expect("embedded coefficient table parses"))
}

fn sign(s: &str) -> i64 {
    match s {
        "+" => 1,
        "-" => -1,
        other => panic!("bad sign `{other}` in coefficient table"),
    }
}

fn bits_index(bits: &str) -> usize {
    usize::from_str_radix(bits, 2).expect("binary label")
}

/// The 5-qubit AME state from its tabulated (index, bits, sign) rows.
pub fn ame52_table1() -> CoeffState {
    let rows = &data().ame52.table;
    let mut amps = vec![0i64; 32];
    for (i, bits, s) in rows {
        assert_eq!(bits_index(bits), *i, "row {i} label mismatch");
        amps[*i] = sign(s);
    }
    StateVector::new(5, 2, amps).expect("32 amplitudes")
}

/// The same 5-qubit state built from its flat coefficient list.
pub fn ame52_flat() -> CoeffState {
    StateVector::new(5, 2, data().ame52.flat.clone()).expect("32 amplitudes")
}

/// Rotation-invariant 5-qubit AME state:
/// `sum over even-parity s of (-1)^(s1 s2 + s2 s3 + s3 s4 + s4 s5 + s5 s1) |s⟩`.
pub fn ame52_rotinv() -> CoeffState {
    let mut sv = StateVector::<i64>::zeros(5, 2).expect("small");
    for i in 0..32 {
        let s = sv.digits(i);
        if s.iter().sum::<usize>() % 2 != 0 {
            continue;
        }
        let eta: usize = (0..5).map(|j| s[j] * s[(j + 1) % 5]).sum();
        sv.amps_mut()[i] = if eta % 2 == 0 { 1 } else { -1 };
    }
    sv
}

/// The rotation-invariant state from its printed 16-term superposition.
pub fn ame52_rotinv_terms() -> CoeffState {
    let mut amps = vec![0i64; 32];
    for (bits, s) in &data().ame52_rotation_invariant.terms {
        amps[bits_index(bits)] = sign(s);
    }
    StateVector::new(5, 2, amps).expect("32 amplitudes")
}

pub fn ame62() -> CoeffState {
    StateVector::new(6, 2, data().ame62.flat.clone()).expect("64 amplitudes")
}

/// Four qutrits: `sum over i, j of |i, j, i+j, i+2j⟩` (mod 3).
pub fn ame43() -> CoeffState {
    let mut sv = StateVector::<i64>::zeros(4, 3).expect("small");
    for i in 0..3 {
        for j in 0..3 {
            let idx = sv.index_of(&[i, j, (i + j) % 3, (i + 2 * j) % 3]).unwrap();
            sv.amps_mut()[idx] = 1;
        }
    }
    sv
}

/// `|0...0⟩ + |1...1⟩` on `n` qubits.
pub fn ghz(n: usize) -> CoeffState {
    let mut sv = StateVector::<i64>::zeros(n, 2).expect("small");
    let last = sv.len() - 1;
    sv.amps_mut()[0] = 1;
    sv.amps_mut()[last] = 1;
    sv
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogState {
    Ame52,
    Ame52Rotinv,
    Ame62,
    Ame43,
}

impl CatalogState {
    pub const ALL: [CatalogState; 4] = [
        CatalogState::Ame52,
        CatalogState::Ame52Rotinv,
        CatalogState::Ame62,
        CatalogState::Ame43,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogState::Ame52 => "ame52",
            CatalogState::Ame52Rotinv => "ame52-rot",
            CatalogState::Ame62 => "ame62",
            CatalogState::Ame43 => "ame43",
        }
    }

    pub fn build(self) -> CoeffState {
        match self {
            CatalogState::Ame52 => ame52_table1(),
            CatalogState::Ame52Rotinv => ame52_rotinv(),
            CatalogState::Ame62 => ame62(),
            CatalogState::Ame43 => ame43(),
        }
    }
}

impl FromStr for CatalogState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogState::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown catalog state `{s}` (ame52, ame52-rot, ame62, ame43)")))
    }
}

/// Coefficient table in the layout `i | s_1 ... s_n | c_i`, one basis state
/// per line, zero coefficients omitted. Unit-modulus coefficients print as
/// `+`/`-`; anything else prints as a signed integer.
pub fn dump_table(sv: &CoeffState) -> String {
    let mut out = String::new();
    let header: Vec<String> = (1..=sv.n()).map(|j| format!("s{j}")).collect();
    writeln!(out, "i\t{}\tc_i", header.join("\t")).unwrap();
    for i in sv.support() {
        let c = sv.amp(i);
        let digits: Vec<String> = sv.digits(i).iter().map(|s| s.to_string()).collect();
        let coeff = match c {
            1 => "+".to_string(),
            -1 => "-".to_string(),
            c => format!("{c:+}"),
        };
        writeln!(out, "{i}\t{}\t{coeff}", digits.join("\t")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_values() {
        let sv = ame52_table1().normalized::<f64>().unwrap();
        let a = 1.0 / 32f64.sqrt();
        assert!((sv.amp(0) - a).abs() < 1e-15);
        assert!((sv.amp(5) + a).abs() < 1e-15);
        assert!((sv.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_presentations_agree() {
        let table = ame52_table1();
        let flat = ame52_flat();
        assert_eq!(table, flat);
        let negatives = |s: &CoeffState| s.amps().iter().filter(|&&c| c < 0).count();
        assert_eq!(negatives(&table), negatives(&flat));
    }

    #[test]
    fn rotinv_values() {
        let sv = ame52_rotinv();
        assert_eq!(sv.support().len(), 16);
        assert_eq!(sv.amp(0), 1);
        assert_eq!(sv.amp(0b11110), -1);
        assert_eq!(sv.amp(0b00001), 0);
        assert_eq!(sv, ame52_rotinv_terms());
        let f = sv.normalized::<f64>().unwrap();
        assert!((f.amp(0) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn rotinv_invariant_table1_not() {
        let rot = ame52_rotinv();
        for k in 1..5 {
            assert_eq!(rot.cyclic_shift(k), rot);
        }
        let t1 = ame52_table1();
        assert_ne!(t1.cyclic_shift(1), t1);
        assert_eq!(t1.cyclic_shift(5), t1);
    }

    #[test]
    fn ame62_values() {
        let sv = ame62();
        assert_eq!(sv.amp(0), -1);
        assert_eq!(sv.amp(3), 1);
        assert!(sv.amps().iter().all(|&c| c == 1 || c == -1));
        let f = sv.normalized::<f64>().unwrap();
        assert!((f.amp(0) + 0.125).abs() < 1e-15);
    }

    #[test]
    fn ame43_values() {
        let sv = ame43();
        assert_eq!(sv.support().len(), 9);
        assert_eq!(sv.amp_at(&[0, 0, 0, 0]).unwrap(), 1);
        assert_eq!(sv.amp_at(&[1, 2, 0, 2]).unwrap(), 1);
        assert_eq!(sv.amp_at(&[0, 0, 0, 1]).unwrap(), 0);
        let f = sv.normalized::<f64>().unwrap();
        assert!((f.amp(0) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn dump_layout() {
        let text = dump_table(&ame52_table1());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 33);
        assert_eq!(lines[0], "i\ts1\ts2\ts3\ts4\ts5\tc_i");
        assert_eq!(lines[6], "5\t0\t0\t1\t0\t1\t-");
    }

    #[test]
    fn names_round_trip() {
        for c in CatalogState::ALL {
            assert_eq!(c.name().parse::<CatalogState>().unwrap(), c);
        }
        assert!("ame99".parse::<CatalogState>().is_err());
    }
}
