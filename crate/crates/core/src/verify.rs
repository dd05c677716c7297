//! The acceptance checks, runnable from the library, the `verify` subcommand
//! and the `acceptance` test target.
//!
//! Each check compares library output against an oracle that does not share
//! code with the computation under test (brute-force enumeration, direct
//! polynomial expansion, exhaustive group censuses), or against the
//! invariants the computation is supposed to satisfy.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::braid::{admissible_enumerate_char0, braid_orbits_with, NodeClass};
use crate::charp::{
    admissible_reduction_census, component_degrees, good_degeneration, h_tau_star,
    n_prime_tau_star, p_hurwitz_pure4, signature_check, tail_aut_orders, tail_invariants_pair,
    tail_invariants_single, tau_star, wewers_lift_count, CensusVariant, GoodDegeneration,
    Rational, ReductionCount, TailInvariants,
};
use crate::error::Result;
use crate::fp_poly::{
    cartier_coefficient, ramification_profile, supersingular_lambdas, tail_factor_double,
    tail_polynomial_double, tail_polynomial_single, CriticalPoint, FpPolynomial, KummerData,
};
use crate::hurwitz::{
    enumerate_factorizations_with, galois_factor, hurwitz_formula, hurwitz_formula_badtype,
    hurwitz_formula_pure4, hurwitz_number_brute_with, monodromy_classify, EnumConfig,
    ExceptionalGroup, MonodromyClass, RamificationType,
};
use crate::perm::data::{m11, m23, pgaml2_16};
use crate::perm::{cycle_type_census, group_analyze, group_analyze_with_cap};
use crate::perm::CycleType;

/// Number of acceptance criteria.
pub const CRITERIA_COUNT: u8 = 11;

const NAMES: [&str; CRITERIA_COUNT as usize] = [
    "pure 4-point formula vs brute force",
    "three-point rigidity",
    "two-cycle formula vs brute force",
    "braid orbits vs admissible taxonomy",
    "monodromy classifier",
    "cycle-type censuses",
    "tail invariants and signatures",
    "characteristic-p census",
    "lift-count identity",
    "Cartier coefficient",
    "tail polynomials",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Include the order-10^7 census of M23.
    pub slow: bool,
    /// Seed for the randomized lift-count check.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { slow: false, seed: 0x5eed }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    /// Summary of what was checked, or the first failures.
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.detail
        )
    }
}

pub fn criterion_name(id: u8) -> Option<&'static str> {
    NAMES.get((id as usize).checked_sub(1)?).copied()
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    (1..=CRITERIA_COUNT).map(|id| run_check(id, opts)).collect()
}

/// Run one criterion; unknown ids report as failures.
pub fn run_check(id: u8, opts: &VerifyOptions) -> CheckOutcome {
    let start = Instant::now();
    let result = match id {
        1 => pure_four_point(),
        2 => three_point_rigidity(),
        3 => two_cycle_formula(),
        4 => braid_consistency(),
        5 => monodromy(),
        6 => censuses(opts.slow),
        7 => tail_invariant_checks(),
        8 => charp_census(),
        9 => lift_count_identity(opts.seed),
        10 => cartier(),
        11 => tail_polynomials(),
        _ => Err(Tally::default()),
    };
    let elapsed: Duration = start.elapsed();
    let (passed, detail) = match result {
        Ok(t) if t.failures.is_empty() => (true, t.summary()),
        Ok(t) | Err(t) => (false, t.failure_summary()),
    };
    CheckOutcome {
        id,
        name: criterion_name(id).unwrap_or("unknown criterion").to_string(),
        passed,
        detail,
        seconds: elapsed.as_secs_f64(),
    }
}

#[derive(Default, Debug)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn ok<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.failures.push(format!("{}: {e}", ctx()));
                None
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn summary(&self) -> String {
        let mut s = format!("{} checks", self.checked);
        for n in &self.notes {
            s.push_str("; ");
            s.push_str(n);
        }
        s
    }

    fn failure_summary(&self) -> String {
        if self.failures.is_empty() {
            return "no checks ran".into();
        }
        let shown: Vec<&str> = self.failures.iter().take(5).map(String::as_str).collect();
        format!(
            "{} of {} checks failed: {}",
            self.failures.len(),
            self.checked,
            shown.join("; ")
        )
    }
}

type Check = std::result::Result<Tally, Tally>;

fn brute_config() -> EnumConfig {
    EnumConfig::default()
}

/// Sorted genus-0 pure-cycle exponent lists of length `r` in degree `d`.
pub fn pure_types(d: usize, r: usize) -> Vec<Vec<usize>> {
    fn extend(d: usize, r: usize, min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = r - cur.len();
        for e in min..=d {
            // every remaining class contributes at least e - 1
            if (e - 1) * slots > left {
                break;
            }
            cur.push(e);
            extend(d, r, e, left - (e - 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d >= 2 && r >= 3 {
        extend(d, r, 2, 2 * d - 2, &mut Vec::new(), &mut out);
    }
    out
}

/// Genus-0 types `(d; e1-e2, e3, e4)` with `e1 <= e2`, `e3 <= e4`.
pub fn two_cycle_types(d: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for e1 in 2..=d {
        for e2 in e1..=d.saturating_sub(e1) {
            for e3 in 2..=d {
                let Some(e4) = (2 * d + 2).checked_sub(e1 + e2 + e3) else { continue };
                if e4 >= e3 && e4 <= d {
                    out.push([e1, e2, e3, e4]);
                }
            }
        }
    }
    out
}

fn odd_primes_up_to(n: usize) -> impl Iterator<Item = usize> {
    (3..=n).filter(|&p| is_prime(p as u64))
}

fn pure4(e: &[usize]) -> [usize; 4] {
    [e[0], e[1], e[2], e[3]]
}

fn pure_four_point() -> Check {
    let mut t = Tally::default();
    let cfg = brute_config();
    let mut types = 0;
    for d in 4..=9 {
        for e in pure_types(d, 4) {
            types += 1;
            let Some(ty) = t.ok(RamificationType::pure_cycle(d, &e), || format!("{d}:{e:?}")) else { continue };
            let Some(brute) = t.ok(hurwitz_number_brute_with(&ty, &cfg), || format!("brute {ty}")) else { continue };
            // the closed form written out directly
            let expected = e.iter().map(|&x| x * (d + 1 - x)).min().unwrap() as u64;
            t.check(brute == expected, || format!("{ty}: brute {brute} ≠ min e(d+1-e) = {expected}"));
            if let Some(f) = t.ok(hurwitz_formula_pure4(d, pure4(&e)), || format!("formula {ty}")) {
                t.check(f == brute, || format!("{ty}: formula {f} ≠ brute {brute}"));
            }
        }
    }
    let h = hurwitz_number_brute_with(&"5:2,2,4,4".parse().unwrap(), &cfg);
    t.check(h == Ok(8), || format!("h(5;2,2,4,4) = {h:?}, expected 8"));
    t.note(format!("{types} types, 4 <= d <= 9"));
    Ok(t)
}

fn three_point_rigidity() -> Check {
    let mut t = Tally::default();
    let cfg = brute_config();
    let mut types = 0;
    for d in 3..=9 {
        for e in pure_types(d, 3) {
            types += 1;
            let Some(ty) = t.ok(RamificationType::pure_cycle(d, &e), || format!("{d}:{e:?}")) else { continue };
            let brute = hurwitz_number_brute_with(&ty, &cfg);
            t.check(brute == Ok(1), || format!("{ty}: brute {brute:?} ≠ 1"));
            let formula = hurwitz_formula(&ty);
            t.check(formula == Ok(1), || format!("{ty}: formula {formula:?} ≠ 1"));
        }
    }
    t.note(format!("{types} triples, d <= 9"));
    Ok(t)
}

fn two_cycle_formula() -> Check {
    let mut t = Tally::default();
    let cfg = brute_config();
    let (mut types, mut top) = (0, 0);
    for d in 4..=9 {
        for [e1, e2, e3, e4] in two_cycle_types(d) {
            types += 1;
            if e4 == d {
                top += 1;
            }
            let Some(ty) = t.ok(RamificationType::two_cycle(d, e1, e2, e3, e4), || {
                format!("({d}; {e1}-{e2}, {e3}, {e4})")
            }) else {
                continue;
            };
            let Some(brute) = t.ok(hurwitz_number_brute_with(&ty, &cfg), || format!("brute {ty}")) else { continue };
            let formula = hurwitz_formula_badtype(d, e1, e2, e3, e4);
            t.check(formula == Ok(brute), || format!("{ty}: formula {formula:?} ≠ brute {brute}"));
        }
    }
    t.note(format!("{types} types, {top} with e4 = d"));
    Ok(t)
}

fn braid_consistency() -> Check {
    let mut t = Tally::default();
    let cfg = brute_config();
    let mut types = 0;
    for d in 4..=9 {
        for e in pure_types(d, 4) {
            types += 1;
            let e = pure4(&e);
            let Some(ty) = t.ok(RamificationType::pure_cycle(d, &e), || format!("{d}:{e:?}")) else { continue };
            let Some(orbits) = t.ok(braid_orbits_with(&ty, &cfg), || format!("orbits {ty}")) else { continue };
            let Some(h) = t.ok(hurwitz_number_brute_with(&ty, &cfg), || format!("brute {ty}")) else { continue };
            let total: usize = orbits.iter().map(|o| o.length).sum();
            t.check(total as u64 == h, || format!("{ty}: orbit lengths sum to {total}, h = {h}"));
            let mut by_node: BTreeMap<NodeClass, u64> = BTreeMap::new();
            for o in &orbits {
                t.check(o.length == o.node.multiplicity(), || {
                    format!("{ty}: orbit with node {} has length {}", o.node, o.length)
                });
                *by_node.entry(o.node).or_default() += 1;
            }
            let Some(rows) = t.ok(admissible_enumerate_char0(d, e), || format!("taxonomy {ty}")) else { continue };
            let subtotal: u64 = rows.iter().map(|r| r.subtotal()).sum();
            t.check(subtotal == h, || format!("{ty}: taxonomy subtotals {subtotal} ≠ h = {h}"));
            let predicted: BTreeMap<NodeClass, u64> = rows.iter().map(|r| (r.node, r.count)).collect();
            t.check(predicted == by_node, || {
                format!("{ty}: taxonomy nodes {predicted:?} ≠ orbit nodes {by_node:?}")
            });
        }
    }
    t.note(format!("{types} types"));
    Ok(t)
}

fn monodromy() -> Check {
    let mut t = Tally::default();
    let cfg = brute_config();
    let mut types = Vec::new();
    for d in 5..=7 {
        for r in 3..=5 {
            for e in pure_types(d, r) {
                types.push(RamificationType::pure_cycle(d, &e));
            }
        }
        if is_prime(d as u64) {
            for [e1, e2, e3, e4] in two_cycle_types(d) {
                types.push(RamificationType::two_cycle(d, e1, e2, e3, e4));
            }
        }
    }
    let mut covers = 0;
    let mut seen_exceptional = (false, false);
    let n_types = types.len();
    for ty in types {
        let Some(ty) = t.ok(ty, || "type construction".into()) else { continue };
        let Some(class) = t.ok(monodromy_classify(&ty), || format!("classify {ty}")) else { continue };
        match class {
            MonodromyClass::Exceptional(ExceptionalGroup::S5OnSixLetters) => seen_exceptional.0 = true,
            MonodromyClass::AffineFp(5) => seen_exceptional.1 = true,
            _ => {}
        }
        let Some(facs) = t.ok(enumerate_factorizations_with(&ty, &cfg), || format!("enumerate {ty}")) else { continue };
        for f in facs {
            covers += 1;
            let Some(report) = t.ok(group_analyze(f.tuple()), || format!("group of {f}")) else { continue };
            t.check(class.matches(&report), || {
                format!("{ty}: predicted {class}, computed order {} for {f}", report.order)
            });
        }
    }
    let six = monodromy_classify(&"6:4,4,5".parse().unwrap());
    t.check(six == Ok(MonodromyClass::Exceptional(ExceptionalGroup::S5OnSixLetters)), || {
        format!("(6;4,4,5) classified as {six:?}")
    });
    let aff = monodromy_classify(&"5:2-2,4,4".parse().unwrap());
    t.check(aff == Ok(MonodromyClass::AffineFp(5)), || format!("(5;2-2,4,4) classified as {aff:?}"));
    t.check(seen_exceptional == (true, true), || "exceptional types missing from the sweep".into());
    t.note(format!("{n_types} types (pure r = 3..5, two-cycle at d = 5, 7), {covers} covers"));
    Ok(t)
}

fn no_element_of_types(t: &mut Tally, label: &str, gens: &[crate::perm::Permutation], bad: &[CycleType]) {
    let Some(census) = t.ok(cycle_type_census(gens, u128::MAX), || format!("census of {label}")) else { return };
    let order: u64 = census.values().sum();
    for c in bad {
        let n = census.get(c).copied().unwrap_or(0);
        t.check(n == 0, || format!("{label} contains {n} elements of type {c}"));
    }
    t.note(format!("{label}: {order} elements"));
}

fn censuses(slow: bool) -> Check {
    let mut t = Tally::default();
    let pgl = pgaml2_16();
    let two_two = CycleType::new(pgl.degree, &[2, 2]).expect("valid cycle type");
    let order = group_analyze(&pgl.generators).map(|r| r.order);
    t.check(order == Ok(16320), || format!("PΓL(2,16) order {order:?}"));
    no_element_of_types(&mut t, "PΓL(2,16)", &pgl.generators, &[two_two]);

    let single_cycles = |d: usize| -> Vec<CycleType> {
        (2..d).map(|e| CycleType::single(d, e).expect("valid cycle type")).collect()
    };
    let m = m11();
    let order = group_analyze(&m.generators).map(|r| r.order);
    t.check(order == Ok(7920), || format!("M11 order {order:?}"));
    no_element_of_types(&mut t, "M11", &m.generators, &single_cycles(m.degree));

    if slow {
        let m = m23();
        let order = group_analyze_with_cap(&m.generators, u128::MAX).map(|r| r.order);
        t.check(order == Ok(10_200_960), || format!("M23 order {order:?}"));
        no_element_of_types(&mut t, "M23", &m.generators, &single_cycles(m.degree));
    } else {
        t.note("M23 skipped (slow)");
    }
    Ok(t)
}

fn tail_triple_ok(inv: &TailInvariants) -> bool {
    let (p, h, m) = (inv.p as u64, inv.h, inv.m);
    (p - 1) % m == 0 && (h < m || (h, m) == (1, 1)) && h.gcd(&m) == 1
}

fn tail_invariant_checks() -> Check {
    let mut t = Tally::default();
    let (mut classes, mut types) = (0, 0);
    for p in odd_primes_up_to(101) {
        let pm1 = p as i64 - 1;
        for e in 2..p {
            classes += 1;
            let Some(inv) = t.ok(tail_invariants_single(p, e), || format!("tail p={p} e={e}")) else { continue };
            t.check(tail_triple_ok(&inv), || format!("p={p} e={e}: (h, m) = ({}, {})", inv.h, inv.m));
            let sigma = Rational::new((p - e) as i64, pm1);
            t.check(inv.sigma == sigma, || format!("p={p} e={e}: σ = {} ≠ {sigma}", inv.sigma));
        }
        for e1 in 2..p {
            for e2 in e1..=p - e1 {
                classes += 1;
                let Some(inv) = t.ok(tail_invariants_pair(p, e1, e2), || format!("tail p={p} {e1}-{e2}")) else {
                    continue;
                };
                t.check(tail_triple_ok(&inv), || {
                    format!("p={p} {e1}-{e2}: (h, m) = ({}, {})", inv.h, inv.m)
                });
                let sigma = Rational::new((p + 1 - e1 - e2) as i64, pm1);
                t.check(inv.sigma == sigma, || format!("p={p} {e1}-{e2}: σ = {} ≠ {sigma}", inv.sigma));
                if e1 + e2 <= p {
                    types += 1;
                    let Some(ts) = t.ok(tau_star(p, e1, e2), || format!("τ* p={p} {e1}-{e2}")) else { continue };
                    t.check(signature_check(p, &ts), || format!("signature fails for {ts}"));
                }
            }
        }
        for e in pure_types(p, 4) {
            types += 1;
            let ty = RamificationType::pure_cycle(p, &e).expect("genus-0 type");
            t.check(signature_check(p, &ty), || format!("signature fails for {ty}"));
        }
        for [e1, e2, e3, e4] in two_cycle_types(p) {
            types += 1;
            let ty = RamificationType::two_cycle(p, e1, e2, e3, e4).expect("genus-0 type");
            t.check(signature_check(p, &ty), || format!("signature fails for {ty}"));
        }
    }
    t.note(format!("{classes} classes, {types} types, p <= 101"));
    Ok(t)
}

fn doubly_even(e: [usize; 4]) -> bool {
    (e[0] + e[1]) % 2 == 0 && e[2] % 2 == 0
}

fn charp_census() -> Check {
    let mut t = Tally::default();
    let cfg = brute_config();
    let (mut types, mut ambiguous, mut oracle) = (0, 0, 0);
    for p in [5usize, 7, 11, 13] {
        for e in pure_types(p, 4) {
            let e = pure4(&e);
            if e[3] >= p {
                continue;
            }
            types += 1;
            let Some(c) = t.ok(admissible_reduction_census(p, e, CensusVariant::PrimeDegree), || {
                format!("census p={p} {e:?}")
            }) else {
                continue;
            };
            let label = format!("({p}; {e:?})");
            let h = e.iter().map(|&x| x * (p + 1 - x)).min().unwrap() as u64;
            t.check(c.h == h, || format!("{label}: census h = {} ≠ {h}", c.h));
            let hp = p_hurwitz_pure4(p, e);
            t.check(hp == Ok(h - p as u64), || format!("{label}: p_hurwitz_pure4 = {hp:?} ≠ h - p"));
            let p64 = p as u64;
            let degeneration = good_degeneration(p, e);
            if (p, e) == (5, [2, 2, 4, 4]) {
                // affine monodromy over the node: only bounds are available
                t.check(matches!(c.bad, ReductionCount::Bounded { .. }), || format!("{label}: bad = {}", c.bad));
                t.check(c.bad.contains(p64) && c.bad.high() < 2 * p64, || format!("{label}: bad = {}", c.bad));
                t.check(c.good.contains(h - p64), || format!("{label}: good = {}", c.good));
            } else if doubly_even(e) && e[0] + e[1] <= p {
                ambiguous += 1;
                let n = (p + 1 - e[0] - e[1]) as u64;
                let expected_bad = ReductionCount::Ambiguous { low: p64, high: p64 + n };
                t.check(c.bad == expected_bad, || format!("{label}: bad = {} ≠ {expected_bad}", c.bad));
                t.check(c.bad.high() < 2 * p64, || format!("{label}: bad {} reaches 2p", c.bad));
                let expected_good = ReductionCount::Ambiguous { low: h - p64 - n, high: h - p64 };
                t.check(c.good == expected_good, || format!("{label}: good = {} ≠ {expected_good}", c.good));
                t.check(degeneration == Ok(GoodDegeneration::Unknown), || format!("{label}: {degeneration:?}"));
            } else {
                // e1 + e2 = p + 1 leaves no two-cycle node, so no ambiguity
                t.check(c.bad == ReductionCount::Exact(p64), || format!("{label}: bad = {} ≠ {p}", c.bad));
                t.check(c.good == ReductionCount::Exact(h - p64), || format!("{label}: good = {}", c.good));
                let expected = if doubly_even(e) { GoodDegeneration::Unknown } else { GoodDegeneration::Yes };
                t.check(degeneration == Ok(expected), || format!("{label}: {degeneration:?}"));
            }

            // independent count from the braid orbits of the enumerated covers
            if p <= 7 {
                oracle += 1;
                let ty = RamificationType::pure_cycle(p, &e).expect("genus-0 type");
                let Some(orbits) = t.ok(braid_orbits_with(&ty, &cfg), || format!("orbits {ty}")) else { continue };
                let mut single_bad = 0u64;
                let mut two_cycle = 0u64;
                for o in &orbits {
                    match o.node {
                        NodeClass::SingleCycle(m) => {
                            if component_degrees(e, m).1 >= p {
                                single_bad += o.length as u64;
                            }
                        }
                        NodeClass::TwoCycle(..) => two_cycle += 1,
                    }
                }
                t.check(single_bad == c.single_cycle_bad, || {
                    format!("{label}: orbits give {single_bad} single-cycle bad, census {}", c.single_cycle_bad)
                });
                t.check(c.two_cycle_bad.high() <= two_cycle, || {
                    format!("{label}: two-cycle bad {} exceeds {two_cycle} orbits", c.two_cycle_bad)
                });
            }
        }
    }
    t.note(format!("{types} types, {ambiguous} ambiguous, {oracle} checked against braid orbits"));
    Ok(t)
}

fn lift_count_identity(seed: u64) -> Check {
    let mut t = Tally::default();
    let cfg = brute_config();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0;
    for p in [5usize, 7, 11, 13] {
        for e1 in 2..p {
            for e2 in e1..=p - e1 {
                let Some(ts) = t.ok(tau_star(p, e1, e2), || format!("τ* p={p} {e1}-{e2}")) else { continue };
                let eps = p + 2 - e1 - e2;
                let Some(h) = t.ok(h_tau_star(p, e1, e2), || format!("h({ts})")) else { continue };
                if p <= 7 {
                    let brute = hurwitz_number_brute_with(&ts, &cfg);
                    t.check(brute == Ok(h), || format!("{ts}: brute {brute:?} ≠ formula {h}"));
                }
                let Some(class) = t.ok(monodromy_classify(&ts), || format!("classify {ts}")) else { continue };
                let Some(gamma) = t.ok(galois_factor(class), || format!("γ({ts})")) else { continue };
                let Some(pair) = t.ok(tail_invariants_pair(p, e1, e2), || format!("pair tail {ts}")) else { continue };
                let Some(eps_aut) = t.ok(tail_aut_orders(p, eps), || format!("ε tail {ts}")) else { continue };
                let eps_h = tail_invariants_single(p, eps).map(|i| i.h).unwrap_or(0);
                for _ in 0..100 {
                    cases += 1;
                    let n: u64 = rng.gen_range(1..=10_000);
                    let aut0: u64 = rng.gen_range(1..=64);
                    let Some(n_prime) = t.ok(n_prime_tau_star(p, e1, e2, n, aut0, gamma), || format!("n' {ts}")) else {
                        continue;
                    };
                    let tails = [(pair.h, aut0), (eps_h, eps_aut.fixing)];
                    let Some(l) = t.ok(wewers_lift_count(p, n_prime, &tails), || format!("L̃ {ts}")) else { continue };
                    let lhs = Rational::from_integer((h * gamma) as i64);
                    let rhs = l * Rational::from_integer(n as i64);
                    t.check(lhs == rhs, || format!("{ts} N={n} aut0={aut0}: h·γ = {lhs} ≠ N·L̃ = {rhs}"));
                }
            }
        }
    }
    t.note(format!("{cases} random (N, aut0) samples"));
    Ok(t)
}

/// Coefficient arrays of `(x - 1)^n` and `(x - λ)^n` by repeated
/// multiplication; the second is indexed `[power of x][power of λ]`.
struct Expansions {
    x_minus_one: Vec<Vec<u64>>,
    x_minus_lambda: Vec<Vec<Vec<u64>>>,
}

impl Expansions {
    fn new(p: u64) -> Self {
        let n = p as usize;
        let mut x_minus_one = vec![vec![1u64]];
        let mut x_minus_lambda = vec![vec![vec![1u64]]];
        for k in 1..n {
            let prev = &x_minus_one[k - 1];
            let mut next = vec![0u64; k + 1];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = (next[i + 1] + c) % p;
                next[i] = (next[i] + p - c) % p;
            }
            x_minus_one.push(next);

            let prev = &x_minus_lambda[k - 1];
            let mut next = vec![vec![0u64; k + 1]; k + 1];
            for (i, row) in prev.iter().enumerate() {
                for (j, &c) in row.iter().enumerate() {
                    next[i + 1][j] = (next[i + 1][j] + c) % p;
                    next[i][j + 1] = (next[i][j + 1] + p - c) % p;
                }
            }
            x_minus_lambda.push(next);
        }
        Expansions { x_minus_one, x_minus_lambda }
    }

    /// Coefficient of `x^p` in `x^{p-a1} (x-1)^{p-1-a2} (x-λ)^{p-1-a3}`,
    /// as coefficients in `λ`.
    fn x_p_coefficient(&self, p: u64, a: [u64; 4]) -> Vec<u64> {
        let a1 = a[0] as usize;
        let left = &self.x_minus_one[(p - 1 - a[1]) as usize];
        let right = &self.x_minus_lambda[(p - 1 - a[2]) as usize];
        let mut out = vec![0u64; p as usize];
        for (i, &c) in left.iter().enumerate().take(a1 + 1) {
            let Some(row) = right.get(a1 - i) else { continue };
            for (j, &b) in row.iter().enumerate() {
                out[j] = (out[j] + c * b) % p;
            }
        }
        out
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn cartier() -> Check {
    let mut t = Tally::default();
    let mut vectors = 0;
    for p in odd_primes_up_to(31) {
        let p = p as u64;
        let exp = Expansions::new(p);
        for a1 in 0..p {
            for a2 in 0..p {
                for a3 in 0..p {
                    let Some(a4) = (2 * (p - 1)).checked_sub(a1 + a2 + a3) else { continue };
                    if a4 > p - 1 {
                        continue;
                    }
                    vectors += 1;
                    let a = [a1, a2, a3, a4];
                    let Some(k) = t.ok(KummerData::new(p, a), || format!("p={p} a={a:?}")) else { continue };
                    let Some(c) = t.ok(cartier_coefficient(&k), || format!("c for p={p} a={a:?}")) else { continue };
                    let sign = if a4 % 2 == 0 { 1 } else { p - 1 };
                    let signed: Vec<u64> = c.coeffs().iter().map(|&x| x * sign % p).collect();
                    let oracle = trim(exp.x_p_coefficient(p, a));
                    t.check(trim(signed) == oracle, || {
                        format!("p={p} a={a:?}: (-1)^a4 c = {} but expansion gives {oracle:?}", c.render("λ"))
                    });
                    t.check(!oracle.is_empty(), || format!("p={p} a={a:?}: x^p coefficient vanishes"));
                }
            }
        }
    }
    let r3 = KummerData::new(3, [1, 1, 1, 1]).and_then(|k| supersingular_lambdas(&k));
    t.check(r3.as_ref().map(|r| r.rational.clone()) == Ok(vec![2]), || format!("p=3 (1,1,1,1): {r3:?}"));
    let r5 = KummerData::new(5, [2, 2, 2, 2]).and_then(|k| cartier_coefficient(&k));
    t.check(r5.as_ref().map(|c| c.roots_in_fp().is_empty()) == Ok(true), || {
        format!("p=5 (2,2,2,2) has F5 roots: {r5:?}")
    });
    t.note(format!("{vectors} exponent vectors, p <= 31"));
    Ok(t)
}

fn point_indices(profile: &crate::fp_poly::RamificationProfile) -> Vec<(CriticalPoint, usize)> {
    profile.points.iter().map(|pt| (pt.location, pt.index)).collect()
}

fn tail_polynomials() -> Check {
    let mut t = Tally::default();
    let (mut doubles, mut singles) = (0, 0);
    for p in odd_primes_up_to(31) {
        let p = p as u64;
        for e in 2..p {
            singles += 1;
            let Some(f) = t.ok(tail_polynomial_single(p, e), || format!("single p={p} e={e}")) else { continue };
            t.check(f.derivative() == FpPolynomial::monomial(p, e % p, e as usize - 1), || {
                format!("p={p} e={e}: F' = {}", f.derivative().render("y"))
            });
            let Some(profile) = t.ok(ramification_profile(&f), || format!("profile p={p} e={e}")) else { continue };
            let got = point_indices(&profile);
            t.check(got == vec![(CriticalPoint::Rational(0), e as usize)] && profile.wild_at_infinity, || {
                format!("p={p} e={e}: profile {got:?}")
            });
        }
        for e1 in 2..p {
            for e2 in e1..=p - e1 {
                doubles += 1;
                let label = format!("p={p} ({e1},{e2})");
                let Some(tilde) = t.ok(tail_factor_double(p, e1, e2), || label.clone()) else { continue };
                t.check(tilde.degree() == Some((p - e1 - e2) as usize) && tilde.leading() == 1, || {
                    format!("{label}: F̃ = {}", tilde.render("y"))
                });
                let Some(f) = t.ok(tail_polynomial_double(p, e1, e2), || label.clone()) else { continue };
                t.check(f.degree() == Some(p as usize), || format!("{label}: deg F = {:?}", f.degree()));
                let target = FpPolynomial::monomial(p, 1, e1 as usize - 1)
                    .mul(&FpPolynomial::linear_root(p, 1).pow(e2 - 1));
                let Some((q, r)) = t.ok(f.derivative().divrem(&target), || label.clone()) else { continue };
                t.check(r.is_zero() && q.degree() == Some(0), || {
                    format!("{label}: F' / y^(e1-1)(y-1)^(e2-1) = {} rem {}", q.render("y"), r.render("y"))
                });
                let Some(profile) = t.ok(ramification_profile(&f), || label.clone()) else { continue };
                let got = point_indices(&profile);
                let expected = vec![
                    (CriticalPoint::Rational(0), e1 as usize),
                    (CriticalPoint::Rational(1), e2 as usize),
                ];
                t.check(got == expected && profile.wild_at_infinity, || format!("{label}: profile {got:?}"));
                let df_deg = f.derivative().degree().unwrap_or(0);
                t.check(profile.total_index() == df_deg, || {
                    format!("{label}: Σ(e-1) = {} ≠ deg F' = {df_deg}", profile.total_index())
                });
            }
        }
    }
    t.note(format!("{singles} single and {doubles} double tails, p <= 31"));
    Ok(t)
}
