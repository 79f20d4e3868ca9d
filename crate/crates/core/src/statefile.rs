//! Binary state files.
//!
//! Layout (all integers little-endian), 16-byte header then amplitudes:
//!
//! | offset | size | field                                             |
//! |--------|------|---------------------------------------------------|
//! | 0      | 4    | magic `b"PAME"`                                   |
//! | 4      | 1    | format version, currently 1                       |
//! | 5      | 1    | encoding: 1 = `i8` coefficients, 2 = `f64`        |
//! | 6      | 2    | local dimension `d` (`u16`)                       |
//! | 8      | 2    | number of sites `n` (`u16`)                       |
//! | 10     | 6    | reserved, zero                                    |
//! | 16     | ...  | `d^n` amplitudes, basis index order (site 1 most significant) |
//!
//! `i8` coefficients are unnormalized; readers normalize on conversion.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::state::dense_len;
use crate::{CoeffState, StateF64};

pub const MAGIC: [u8; 4] = *b"PAME";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Encoding {
    I8 = 1,
    F64 = 2,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StoredState {
    Coefficients(CoeffState),
    Amplitudes(StateF64),
}

impl StoredState {
    pub fn n(&self) -> usize {
        match self {
            StoredState::Coefficients(s) => s.n(),
            StoredState::Amplitudes(s) => s.n(),
        }
    }

    pub fn encoding(&self) -> Encoding {
        match self {
            StoredState::Coefficients(_) => Encoding::I8,
            StoredState::Amplitudes(_) => Encoding::F64,
        }
    }

    /// Normalized double-precision amplitudes.
    pub fn to_f64(&self) -> Result<StateF64> {
        match self {
            StoredState::Coefficients(s) => s.normalized::<f64>(),
            StoredState::Amplitudes(s) => Ok(s.clone()),
        }
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        let (n, d) = match self {
            StoredState::Coefficients(s) => (s.n(), s.d()),
            StoredState::Amplitudes(s) => (s.n(), s.d()),
        };
        let n16 = u16::try_from(n).map_err(|_| Error::Format(format!("{n} sites do not fit the header")))?;
        let d16 = u16::try_from(d).map_err(|_| Error::Format(format!("dimension {d} does not fit the header")))?;
        let mut out = Vec::with_capacity(HEADER_LEN + dense_len(n, d)? * 8);
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.push(self.encoding() as u8);
        out.extend_from_slice(&d16.to_le_bytes());
        out.extend_from_slice(&n16.to_le_bytes());
        out.extend_from_slice(&[0; 6]);
        match self {
            StoredState::Coefficients(s) => {
                for &c in s.amps() {
                    let b = i8::try_from(c).map_err(|_| Error::Format(format!("coefficient {c} does not fit in i8")))?;
                    out.push(b as u8);
                }
            }
            StoredState::Amplitudes(s) => {
                for &a in s.amps() {
                    out.extend_from_slice(&a.to_le_bytes());
                }
            }
        }
        Ok(out)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN {
            return Err(Error::Format("file shorter than the header".into()));
        }
        if bytes[0..4] != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        if bytes[4] != VERSION {
            return Err(Error::Format(format!("unsupported version {}", bytes[4])));
        }
        let d = u16::from_le_bytes([bytes[6], bytes[7]]) as usize;
        let n = u16::from_le_bytes([bytes[8], bytes[9]]) as usize;
        let len = dense_len(n, d)?;
        let body = &bytes[HEADER_LEN..];
        match bytes[5] {
            1 => {
                if body.len() != len {
                    return Err(Error::Format(format!("expected {len} bytes of coefficients, found {}", body.len())));
                }
                let amps = body.iter().map(|&b| b as i8 as i64).collect();
                Ok(StoredState::Coefficients(CoeffState::new(n, d, amps)?))
            }
            2 => {
                if body.len() != len * 8 {
                    return Err(Error::Format(format!("expected {} bytes of amplitudes, found {}", len * 8, body.len())));
                }
                let amps = body
                    .chunks_exact(8)
                    .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
                    .collect();
                Ok(StoredState::Amplitudes(StateF64::new(n, d, amps)?))
            }
            e => Err(Error::Format(format!("unknown encoding {e}"))),
        }
    }
}

pub fn write_state(path: impl AsRef<Path>, state: &StoredState) -> Result<()> {
    fs::write(path, state.to_bytes()?)?;
    Ok(())
}

pub fn read_state(path: impl AsRef<Path>) -> Result<StoredState> {
    StoredState::from_bytes(&fs::read(path)?)
}
