//! Thoma parameters and measures, moments, H-series, total positivity and
//! the Edrei peel-off.

mod edrei;
mod falsifier;
mod hseries;
mod measure;
mod params;
mod series;
mod tp;

pub use edrei::{edrei_peel, PeelOptions, PeelOutcome, PeelRoute};
pub use falsifier::{
    alt_falsifier, alt_falsifier_with, stirling_brute, stirling_closed, FalsifierValues,
    FALSIFIER_MAX_M,
};
pub use hseries::{
    c_from_h, coherence_check, h_from_moments, h_from_params, m_lambda, mseq_from_params,
    multiplicativity_check, multiplicativity_check_params, sign_transform, CoherenceReport,
    MultiplicativityReport, MULTIPLICATIVITY_MAX,
};
pub use measure::{generalized_moment, MeasureValidity, TestFunction, ThomaMeasure};
pub use params::ThomaParams;
pub use series::PowerSeries;
pub use tp::{
    is_totally_positive, is_totally_positive_with, toeplitz_minor, TpReport, TpWitness,
};

/// Default truncation order for series arithmetic.
pub const DEFAULT_ORDER: usize = 24;
