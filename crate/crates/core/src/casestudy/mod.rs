//! Reproduction of the Chebyshev case study: `P = T̃_6` against
//! `Q = S_1(T̃_2) + S_2(T̃_3)` on `[0, 1]`.

pub mod classification;
pub mod lforms;
mod report;
pub mod sspace;
pub mod systems;

pub use classification::{verify_classification, ClassificationReport};
pub use lforms::compute_l;
pub use report::{run_case_study, CaseStudyReport, Claim};
pub use sspace::{s_space_basis, SSpace};
pub use systems::{assemble_system62, system63_analysis};
