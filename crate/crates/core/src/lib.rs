//! Reversible circuits for arithmetic in `GF(2^m)`.
//!
//! Elements are kept in a ghost-bit basis (polynomials modulo
//! `1 + x + ... + x^m`, one redundant bit) or a Gaussian normal basis. In
//! both, squaring permutes coordinates, so the synthesizers turn every
//! Frobenius power into a wire relabeling and spend gates only on products.
//!
//! ```
//! use gf2m_synth::field::FieldSpec;
//! use gf2m_synth::synth::synth_mult;
//!
//! let spec = FieldSpec::ghost_bit(4)?;
//! let mult = synth_mult(&spec)?;
//! let res = mult.circuit.resources();
//! assert_eq!((res.toffoli_count, res.depth, res.qubits), (25, 5, 15));
//! # Ok::<(), gf2m_synth::Error>(())
//! ```

pub mod arith;
pub mod bits;
pub mod circuit;
pub mod cli;
mod error;
pub mod field;
pub mod invert;
pub mod poly;
pub mod synth;
pub mod verify;

pub use bits::Bits;
pub use circuit::{Circuit, Gate, Register, ResourceEstimate, Wire};
pub use error::{Error, ParseError, Result};
pub use field::{FieldSpec, GhostBitField, GnbParams, Representation};
