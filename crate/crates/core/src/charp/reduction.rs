//! Bad-reduction counts and p-Hurwitz numbers.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::tails::tau_star;
use crate::arith::is_prime;
use crate::braid::{admissible_enumerate_char0, NodeClass};
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_formula_badtype, hurwitz_formula_pure4};

/// A count that is known exactly, known up to a factor `δ ∈ {1, 2}`, or
/// only bounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionCount {
    Exact(u64),
    /// One of exactly two values.
    Ambiguous { low: u64, high: u64 },
    /// Any value in the closed range.
    Bounded { low: u64, high: u64 },
}

impl ReductionCount {
    pub fn low(self) -> u64 {
        match self {
            ReductionCount::Exact(n) => n,
            ReductionCount::Ambiguous { low, .. } | ReductionCount::Bounded { low, .. } => low,
        }
    }

    pub fn high(self) -> u64 {
        match self {
            ReductionCount::Exact(n) => n,
            ReductionCount::Ambiguous { high, .. } | ReductionCount::Bounded { high, .. } => high,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, ReductionCount::Exact(_))
    }

    pub fn contains(self, n: u64) -> bool {
        match self {
            ReductionCount::Exact(v) => v == n,
            ReductionCount::Ambiguous { low, high } => n == low || n == high,
            ReductionCount::Bounded { low, high } => (low..=high).contains(&n),
        }
    }

    /// `self + k`.
    pub fn shift(self, k: u64) -> ReductionCount {
        match self {
            ReductionCount::Exact(n) => ReductionCount::Exact(n + k),
            ReductionCount::Ambiguous { low, high } => ReductionCount::Ambiguous {
                low: low + k,
                high: high + k,
            },
            ReductionCount::Bounded { low, high } => ReductionCount::Bounded {
                low: low + k,
                high: high + k,
            },
        }
    }

    /// `total - self`; errors if `self` can exceed `total`.
    pub fn complement(self, total: u64) -> Result<ReductionCount> {
        if self.high() > total {
            return Err(Error::Precondition(format!(
                "count {self} exceeds the total {total}"
            )));
        }
        Ok(match self {
            ReductionCount::Exact(n) => ReductionCount::Exact(total - n),
            ReductionCount::Ambiguous { low, high } => ReductionCount::Ambiguous {
                low: total - high,
                high: total - low,
            },
            ReductionCount::Bounded { low, high } => ReductionCount::Bounded {
                low: total - high,
                high: total - low,
            },
        })
    }
}

impl fmt::Display for ReductionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionCount::Exact(n) => write!(f, "{n}"),
            ReductionCount::Ambiguous { low, high } => write!(f, "{{{low}|{high}}}"),
            ReductionCount::Bounded { low, high } => write!(f, "[{low}..{high}]"),
        }
    }
}

fn require_prime(p: usize) -> Result<()> {
    if p >= 3 && is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not an odd prime")))
    }
}

/// Whether the doubly-even clause applies: `e1 + e2` and `e3` both even.
fn doubly_even(e1: usize, e2: usize, e3: usize) -> bool {
    (e1 + e2) % 2 == 0 && e3 % 2 == 0
}

/// Number of covers of type `(p; e1-e2, e3, e4)` with bad reduction:
/// `δ (p + 1 - e1 - e2)`, halved when `e1 = e2`, with `δ = 1` unless
/// `e1 + e2` and `e3` are both even, in which case `δ ∈ {1, 2}`.
pub fn bad_count_2cycle(p: usize, e1: usize, e2: usize, e3: usize, e4: usize) -> Result<ReductionCount> {
    require_prime(p)?;
    let (e1, e2) = (e1.min(e2), e1.max(e2));
    let (e3, e4) = (e3.min(e4), e3.max(e4));
    if e1 < 2 || e3 < 2 || e4 > p {
        return Err(Error::Precondition(format!("exponents out of range for p = {p}")));
    }
    if e1 + e2 + e3 + e4 != 2 * p + 2 || e1 + e2 > p {
        return Err(Error::Precondition(format!(
            "({p}; {e1}-{e2}, {e3}, {e4}) is not a genus-0 type with e1 + e2 <= p"
        )));
    }
    if (p, e1, e2, e3, e4) == (5, 2, 2, 4, 4) {
        return Err(Error::Precondition(
            "(5; 2-2, 4, 4) has affine monodromy and is excluded".into(),
        ));
    }
    let mut n = (p + 1 - e1 - e2) as u64;
    if e1 == e2 {
        n /= 2;
    }
    Ok(if doubly_even(e1, e2, e3) {
        ReductionCount::Ambiguous { low: n, high: 2 * n }
    } else {
        ReductionCount::Exact(n)
    })
}

/// `h_p(p; e1-e2, e3, e4) = h - bad`.
pub fn p_hurwitz_3pt_badtype(p: usize, e1: usize, e2: usize, e3: usize, e4: usize) -> Result<ReductionCount> {
    let bad = bad_count_2cycle(p, e1, e2, e3, e4)?;
    let h = hurwitz_formula_badtype(p, e1.min(e2), e1.max(e2), e3, e4)?;
    bad.complement(h)
}

/// A genus-0 three-point cover of type `(d; a, b, c)` with `a, b, c < p`
/// has good reduction at `p` iff `d < p`.
pub fn three_point_good_reduction(d: usize, a: usize, b: usize, c: usize, p: usize) -> Result<bool> {
    require_prime(p)?;
    if [a, b, c].iter().any(|&x| x < 2 || x > d || x >= p) {
        return Err(Error::Precondition(format!(
            "({d}; {a}, {b}, {c}) needs 2 <= e <= d and e < {p}"
        )));
    }
    if a + b + c != 2 * d + 1 {
        return Err(Error::GenusCondition(format!("Σe={} ≠ 2d+1={}", a + b + c, 2 * d + 1)));
    }
    Ok(d < p)
}

/// Sorted exponents of a pure-cycle 4-type of degree `d` with every `e_i < p`.
fn sorted_tame(p: usize, d: usize, e: [usize; 4]) -> Result<[usize; 4]> {
    require_prime(p)?;
    let mut s = e;
    s.sort_unstable();
    if s[0] < 2 || s[3] >= p {
        return Err(Error::Precondition(format!("need 2 <= e_i < p = {p}, got {e:?}")));
    }
    if s.iter().sum::<usize>() != 2 * d + 2 {
        return Err(Error::GenusCondition(format!(
            "Σe={} ≠ 2d+2={}",
            s.iter().sum::<usize>(),
            2 * d + 2
        )));
    }
    Ok(s)
}

/// `h_p(p; e1, .., e4) = min_i e_i (p + 1 - e_i) - p`.
pub fn p_hurwitz_pure4(p: usize, e: [usize; 4]) -> Result<u64> {
    let s = sorted_tame(p, p, e)?;
    Ok(hurwitz_formula_pure4(p, s)? - p as u64)
}

/// Outcome of the degeneration test for a pure-cycle 4-type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoodDegeneration {
    /// Every cover has good degeneration.
    Yes,
    /// Not decided (`e1 + e2` and `e3` both even).
    Unknown,
}

impl fmt::Display for GoodDegeneration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GoodDegeneration::Yes => "true",
            GoodDegeneration::Unknown => "unknown",
        })
    }
}

pub fn good_degeneration(p: usize, e: [usize; 4]) -> Result<GoodDegeneration> {
    let [e1, e2, e3, _] = sorted_tame(p, p, e)?;
    Ok(if doubly_even(e1, e2, e3) {
        GoodDegeneration::Unknown
    } else {
        GoodDegeneration::Yes
    })
}

/// Census variant: the prime-degree statement, or the single-cycle count
/// for an arbitrary degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CensusVariant {
    #[default]
    PrimeDegree,
    GeneralDegree(usize),
}

/// Admissible covers of a pure-cycle 4-type split by reduction behaviour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCensus {
    pub p: usize,
    pub degree: usize,
    pub exponents: [usize; 4],
    pub h: u64,
    /// Bad covers with a single ramified point over the node, with multiplicity.
    pub single_cycle_bad: u64,
    /// Bad covers with a two-cycle node.
    pub two_cycle_bad: ReductionCount,
    pub bad: ReductionCount,
    pub good: ReductionCount,
}

/// Degrees of the two component covers over the node for a single-cycle node `m`.
pub fn component_degrees(e: [usize; 4], m: usize) -> (usize, usize) {
    ((e[0] + e[1] + m - 1) / 2, (m + e[2] + e[3] - 1) / 2)
}

/// Bad single-cycle admissible covers in degree `d >= p`, counted with
/// multiplicity: `(d - p + 1)(d + p + 1 - e3 - e4)` when `d + 1 >= e2 + e3`
/// or `d + 1 - e1 < p`; every such cover otherwise.
pub fn single_cycle_bad_general(p: usize, d: usize, e: [usize; 4]) -> Result<u64> {
    let s = sorted_tame(p, d, e)?;
    if d < p {
        return Ok(0);
    }
    let [e1, e2, e3, e4] = s;
    if d + 1 >= e2 + e3 || d + 1 - e1 < p {
        Ok(((d - p + 1) * (d + p + 1 - e3 - e4)) as u64)
    } else {
        let rows = admissible_enumerate_char0(d, s)?;
        Ok(rows
            .iter()
            .filter(|r| matches!(r.node, NodeClass::SingleCycle(_)))
            .map(|r| r.subtotal())
            .sum())
    }
}

/// Classify the admissible covers of a pure-cycle 4-type by reduction at `p`.
///
/// A single-cycle node `m` gives components of degree `d1 <= d2`; the cover
/// is bad iff `d2 >= p`. Two-cycle nodes contribute `p + 1 - e1 - e2` bad
/// covers, doubled in the doubly-even case where the factor is unknown.
/// For `(5; 2, 2, 4, 4)` only the bound `0 <= bad_2 <= count` is used.
pub fn admissible_reduction_census(p: usize, e: [usize; 4], variant: CensusVariant) -> Result<ReductionCensus> {
    let d = match variant {
        CensusVariant::PrimeDegree => p,
        CensusVariant::GeneralDegree(d) => d,
    };
    let s = sorted_tame(p, d, e)?;
    let [e1, e2, e3, _] = s;
    let rows = admissible_enumerate_char0(d, s)?;
    let h = hurwitz_formula_pure4(d, s)?;
    let mut single_cycle_bad = 0;
    let mut two_cycle_count = 0;
    for row in &rows {
        match row.node {
            NodeClass::SingleCycle(m) => {
                let (d1, d2) = component_degrees(s, m);
                debug_assert!(d1 <= d2);
                if d2 >= p {
                    single_cycle_bad += row.subtotal();
                }
            }
            NodeClass::TwoCycle(..) => two_cycle_count += row.subtotal(),
        }
    }
    let two_cycle_bad = if d < p {
        ReductionCount::Exact(0)
    } else if d > p || (p == 5 && s == [2, 2, 4, 4]) {
        ReductionCount::Bounded {
            low: 0,
            high: two_cycle_count,
        }
    } else {
        // the gluing factor 2 for e1 = e2 cancels the halving of the cover count
        let n = (p + 1 - e1 - e2) as u64;
        if two_cycle_count == 0 {
            ReductionCount::Exact(0)
        } else if doubly_even(e1, e2, e3) {
            ReductionCount::Ambiguous { low: n, high: 2 * n }
        } else {
            ReductionCount::Exact(n)
        }
    };
    let bad = two_cycle_bad.shift(single_cycle_bad);
    let good = bad.complement(h)?;
    Ok(ReductionCensus {
        p,
        degree: d,
        exponents: s,
        h,
        single_cycle_bad,
        two_cycle_bad,
        bad,
        good,
    })
}

/// The tail count `h(τ*)` used in the lift-count identity.
pub fn h_tau_star(p: usize, e1: usize, e2: usize) -> Result<u64> {
    let t = tau_star(p, e1, e2)?;
    let (a, b, c, d) = t.two_cycle_exponents().expect("two-cycle type");
    hurwitz_formula_badtype(p, a, b, c, d)
}
