//! Characteristic-p numerology: tail invariants, lift counts, bad-reduction
//! counts and p-Hurwitz numbers.

mod reduction;
mod tails;

pub use reduction::{
    admissible_reduction_census, bad_count_2cycle, component_degrees, good_degeneration,
    h_tau_star, p_hurwitz_3pt_badtype, p_hurwitz_pure4, single_cycle_bad_general,
    three_point_good_reduction, CensusVariant, GoodDegeneration, ReductionCensus, ReductionCount,
};
pub use tails::{
    n_prime_tau_star, signature_check, tail_aut_orders, tail_invariants, tail_invariants_pair,
    tail_invariants_single, tau_star, wewers_lift_count, AutOrders, Rational, TailInvariants,
};
