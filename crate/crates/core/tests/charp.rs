use hurwitz_core::charp::{
    admissible_reduction_census, bad_count_2cycle, good_degeneration, p_hurwitz_3pt_badtype,
    p_hurwitz_pure4, tail_invariants_single, tau_star, three_point_good_reduction, CensusVariant,
    GoodDegeneration, ReductionCensus, ReductionCount,
};

#[test]
fn census_of_7_3355() {
    let c = admissible_reduction_census(7, [3, 3, 5, 5], CensusVariant::PrimeDegree).unwrap();
    assert_eq!(c.h, 15);
    assert_eq!(c.single_cycle_bad, 5);
    assert_eq!(c.two_cycle_bad, ReductionCount::Exact(2));
    assert_eq!(c.bad, ReductionCount::Exact(7));
    assert_eq!(c.good, ReductionCount::Exact(8));
    assert_eq!(p_hurwitz_pure4(7, [3, 3, 5, 5]).unwrap(), 8);
    assert_eq!(good_degeneration(7, [5, 3, 5, 3]).unwrap(), GoodDegeneration::Yes);
}

#[test]
fn ambiguous_and_bounded_counts_render_as_ranges() {
    let c = admissible_reduction_census(7, [2, 4, 4, 6], CensusVariant::PrimeDegree).unwrap();
    assert_eq!(c.bad.to_string(), "{7|9}");
    assert_eq!(c.good.to_string(), "{3|5}");
    let c = admissible_reduction_census(5, [2, 2, 4, 4], CensusVariant::PrimeDegree).unwrap();
    assert_eq!(c.bad.to_string(), "[3..7]");
}

#[test]
fn census_json_round_trip() {
    let c = admissible_reduction_census(7, [2, 4, 4, 6], CensusVariant::PrimeDegree).unwrap();
    let s = serde_json::to_string(&c).unwrap();
    assert!(s.contains("\"ambiguous\""), "{s}");
    let back: ReductionCensus = serde_json::from_str(&s).unwrap();
    assert_eq!(back, c);
}

#[test]
fn two_cycle_bad_counts() {
    assert_eq!(bad_count_2cycle(7, 2, 3, 4, 7).unwrap(), ReductionCount::Exact(3));
    assert_eq!(bad_count_2cycle(7, 3, 3, 3, 7).unwrap(), ReductionCount::Exact(1));
    assert!(bad_count_2cycle(5, 2, 2, 4, 4).is_err());
    assert_eq!(p_hurwitz_3pt_badtype(7, 2, 3, 4, 7).unwrap(), ReductionCount::Exact(0));
}

#[test]
fn three_point_reduction() {
    assert!(three_point_good_reduction(5, 3, 3, 5, 7).unwrap());
    assert!(three_point_good_reduction(7, 3, 5, 7, 11).unwrap());
    assert!(!three_point_good_reduction(7, 4, 5, 6, 7).unwrap());
    assert!(three_point_good_reduction(5, 3, 3, 4, 7).is_err());
}

#[test]
fn tails_and_tau_star() {
    let t = tail_invariants_single(11, 4).unwrap();
    assert_eq!((t.h, t.m), (7, 10));
    assert_eq!(tau_star(11, 2, 5).unwrap().to_string(), "11:5-2,6,11");
    assert!(tau_star(11, 6, 6).is_err());
}
