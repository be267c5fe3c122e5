//! Differential-geometric analysis of polynomial hodographs.

mod cross;
mod frenet;
mod helix;

pub use cross::{cross_norm, is_2ph, is_ph, CrossNorm};
pub use frenet::{frenet_frame, FrenetFrame, RationalVector};
pub use helix::{curvature_torsion, helix_axis, is_helix, CurvatureData, HelixAxis, HelixKind, HelixVerdict};
