//! Exact univariate polynomial algebra over the rationals and the Gaussian rationals.

pub mod gauss;
pub mod gcd;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod sqrt;
pub mod squarefree;

pub use gauss::GaussRat;
pub use gcd::{gcd, monic_euclid_gcd, primitive_part};
pub use poly::{wronskian, Coeff, GaussPoly, Poly, RatPoly};
pub use rat::{parse_rat, rat, rat_sqrt, ratio, Rat};
pub use ratfunc::RationalFunction;
pub use sqrt::{perfect_square_root, ScaledSqrt};
pub use squarefree::{squarefree_decompose, SquarefreeDecomposition};
