//! Scalar traits shared by the state, contraction and entropy code.
//!
//! Amplitudes come in two flavours. Exact integer coefficient vectors
//! (`i8`/`i32`/`i64`) carry an implicit normalization `1/sqrt(sum c^2)` and
//! are what the catalog and the contraction produce, so sign tables and
//! contraction results stay bit-exact. Floating amplitudes (`f32`/`f64`)
//! are normalized and feed the eigenvalue-based entropy engine.

use std::fmt::Debug;
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, Num, NumCast, ToPrimitive};

/// Anything that can sit in an amplitude array.
pub trait Amplitude:
    Num + NumCast + ToPrimitive + Copy + PartialOrd + Debug + Send + Sync + 'static
{
    fn abs_sqr_f64(self) -> f64 {
        let x = self.to_f64().unwrap_or(f64::NAN);
        x * x
    }
}

impl<T> Amplitude for T where
    T: Num + NumCast + ToPrimitive + Copy + PartialOrd + Debug + Send + Sync + 'static
{
}

/// Floating-point scalars the entropy engine can diagonalize with.
pub trait Real: Amplitude + Float + FromPrimitive + Sum + faer::traits::RealField {
    /// Smallest eigenvalue that still contributes to `-λ log₂ λ`.
    fn default_eig_cutoff() -> Self;
}

impl Real for f64 {
    fn default_eig_cutoff() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn default_eig_cutoff() -> Self {
        1e-6
    }
}
