mod idempotent;
mod reflection;
mod spectral;
mod suite;
pub mod symmetrizers;

pub use idempotent::{
    contents_for, fusion_idempotent, fusion_step, jm_oracle_idempotent, jm_projector, Idempotent, Method,
};
pub use reflection::{check_reflection_l, check_reflection_y, resolvent, LOperator};
pub use spectral::{mul_left, mul_right, Baxter, Linear};
pub use suite::{
    baxter_suite, complete_system, equivalence_report, reflection_suite, row_tableau, starred_report,
    symmetrizer_report, system_report, SpectralSampler, DEFAULT_SAMPLES,
};
