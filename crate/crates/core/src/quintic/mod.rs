//! Quintic casework: the decomposition `z1′z2 − z1z2′ = ω·z²`, the monotone
//! (shared factor) and general (dependent quaternions) helix families, and a
//! classifier that checks the algebraic route against the Lancret test.

mod classify;
mod decompose;
mod generate;
mod lemmas;

pub use classify::{classify_quintic, ClassificationReport, QuinticClass, QuinticKind, QuinticSource};
pub use decompose::{decompose_wronskian_quintic, DecompositionCase, WronskianDecomposition};
pub use generate::{
    general_quintic_from, generate_general_quintic, generate_monotone_quintic, monotone_quintic_from_roots,
    random_quintic, GenParams, Generated,
};
pub use lemmas::{lemma_two_parameters, monotone_test, quaternion_dependence, Dependence, LemmaTwoParameters};
