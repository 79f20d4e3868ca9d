//! Absolutely maximally entangled (AME) states on Platonic solids.
//!
//! Building blocks: prime-field linear algebra ([`gf`]), the five Platonic
//! solids ([`polytope`]), small AME seed states ([`catalog`]), stabilizer-free
//! linear code states ([`code`]), agreement-tensor contraction of face tensors
//! ([`contraction`]) and bipartite entanglement analysis ([`entropy`]).
//!
//! State vectors are generic over the amplitude type. Integer coefficient
//! vectors ([`CoeffState`]) are exact; entropies are computed in a floating
//! [`Real`](scalar::Real) type.

pub mod catalog;
pub mod code;
pub mod contraction;
pub mod entropy;
pub mod error;
pub mod gf;
pub mod polytope;
pub mod report;
pub mod scalar;
pub mod state;
pub mod statefile;

pub use error::{Error, Result};
pub use state::StateVector;

/// Integer coefficients, normalized implicitly.
pub type CoeffState = StateVector<i64>;
pub type StateF64 = StateVector<f64>;
pub type StateF32 = StateVector<f32>;
