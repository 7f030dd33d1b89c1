//! Arithmetic of lacunary almost-Newman polynomials.
//!
//! The class `B` consists of the polynomials
//! `-1 + x + x^n + x^m1 + ... + x^ms` whose exponent gaps are at least `n - 1`.
//! This crate computes, for members of that class and for general integer
//! polynomials:
//!
//! * the number of distinct roots modulo a prime ([`fppoly::np_count`]),
//! * the cyclotomic / reciprocal / non-reciprocal split ([`factorsplit`]),
//! * irreducibility bounds for families `d(x) + x^N c(1/x)` ([`schinzel`]),
//! * density statistics over primes ([`stats`]),
//! * closed-form root-count formulas for small trinomials ([`newform`]),
//! * Rényi beta-expansions of unity with exact digit decisions ([`betashift`]).
//!
//! Everything here is pure and `no_std` (with `alloc`). File formats, the
//! command line and parallel sweeps live in the companion `lacunary` crate.

#![no_std]
#![warn(rust_2018_idioms, unused_qualifications)]

extern crate alloc;

pub mod arith;
pub mod betashift;
mod error;
pub mod factorsplit;
pub mod fppoly;
pub mod newform;
pub mod schinzel;
pub mod stats;
pub mod zpoly;

pub use error::{Error, Result};
pub use factorsplit::FactorSplit;
pub use fppoly::FpPoly;
pub use zpoly::{ClassBSpec, IntPoly};
