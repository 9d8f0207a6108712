//! Exact computations with characters of the infinite symmetric group.
//!
//! The crate covers the finite-`n` character theory of `S(n)`, Thoma
//! parameters and measures with their H-series, total positivity of
//! Toeplitz sequences, a finite-window model of the Olshanski diagram
//! semigroup, double cosets of the hyperoctahedral pair, and the label
//! calculus (admissibility, mixtures, root dimensions) for irreducible
//! admissible representations.
//!
//! Everything is exact: values are [`Rational`]s or big integers. The only
//! floating point surfaces are the ergodic-limit deviations and the Gram
//! matrix diagnostic [`classify::gram_check`].

pub mod classify;
pub mod cosets;
pub mod diagram;
pub mod distribution;
mod error;
pub mod exec;
pub mod linalg;
pub mod partition;
pub mod permutation;
pub mod random;
pub mod rational;
pub mod symchar;
pub mod thoma;

pub use error::{Error, Result};
pub use exec::Exec;
pub use partition::Partition;
pub use permutation::Permutation;
pub use rational::Rational;
