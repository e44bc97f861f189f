//! Reference laws: joint eigenvalue densities, the smallest-eigenvalue law
//! at `R = n`, soft-edge rescaling and the Tracy-Widom `F_2` evaluator.

pub mod airy;
mod density;
pub mod quadrature;
mod tracy_widom;

pub use airy::{airy_ai, airy_ai_prime, airy_pair};
pub use density::{
    log_joint_density, log_normalization_beta2, pmin_cdf, pmin_exact, tw_rescale,
    JointDensityQuery, LogDensity,
};
pub use tracy_widom::{
    tw2_cdf, tw2_cdf_with_estimate, tw2_moments, tw2_pdf, Tw2Row, Tw2Table, TwGrid,
    DEFAULT_TW_ORDER, TW_S_MAX, TW_S_MIN,
};

/// Mean of the Tracy-Widom `beta = 2` law.
pub const TW2_MEAN: f64 = -1.771_086_807_411_601_6;
/// Variance of the Tracy-Widom `beta = 2` law.
pub const TW2_VARIANCE: f64 = 0.813_194_792_832_186_4;
