//! Command line, table reproduction and parallel sweeps on top of
//! [`lacunary_core`].
//!
//! * [`par`]: rayon drivers for prime sweeps, the Conjecture-B rows and the
//!   enumeration of `B^(N)`.
//! * [`reproduce`]: recomputes each reference table and diffs it against
//!   the values embedded from `data/`.
//! * [`cli`]: the `lacunary` binary.

pub mod cli;
pub mod expected;
pub mod par;
pub mod report;
pub mod reproduce;

pub use lacunary_core as core;
