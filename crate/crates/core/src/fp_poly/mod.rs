//! Dense polynomials over prime fields, the Cartier coefficient of the
//! Legendre-type deformation data, and the tail-cover polynomials.

mod cartier;
mod poly;
mod tails;

pub use cartier::{binomial_mod, cartier_coefficient, supersingular_lambdas, KummerData, SupersingularReport};
pub use poly::{FpPolynomial, MAX_MODULUS};
pub use tails::{
    ramification_profile, tail_factor_double, tail_polynomial_double, tail_polynomial_single,
    CriticalPoint, RamificationPoint, RamificationProfile,
};
