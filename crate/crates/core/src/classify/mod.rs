//! Labels of irreducible admissible representations: admissibility tests,
//! mixtures, root dimensions and the finite-`n` approximation of Thoma
//! characters by normalized irreducible characters.

mod ergodic;
mod gram;
mod label;
mod mixture;

pub use ergodic::{ergodic_converge, ergodic_converge_with, ergodic_shape, ErgodicPoint};
pub use gram::{gram_check, GramReport};
pub use label::{
    boundary_label, boundary_value, classify, dim_root, is_thoma_measure, mixture_dim, Boundary, Condition,
    PairKind, ReprLabel, Verdict,
};
pub use mixture::{
    mixture, mixture_moment_check, MixtureCheck, MixtureComponent, MixtureOutcome, MixtureSpec,
};
