//! Invariants of primitive tail covers, their automorphism groups, and the
//! lift-count bookkeeping for three-point types with a two-cycle class.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::hurwitz::RamificationType;
use crate::perm::CycleType;

pub type Rational = Ratio<i64>;

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p as u64) && p >= 3 {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not an odd prime")))
    }
}

/// Conductor `h` and prime-to-p inertia order `m` of a tail cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailInvariants {
    pub p: usize,
    pub class: CycleType,
    pub h: u64,
    pub m: u64,
    #[serde(with = "ratio_serde")]
    pub sigma: Rational,
}

mod ratio_serde {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Tail invariants for a single `e`-cycle or a pair `e1-e2` in degree `p`.
///
/// Single cycle: `h = (p - e)/g`, `m = (p - 1)/g` with `g = gcd(p - 1, e - 1)`.
/// Pair: `h = (p + 1 - e1 - e2)/g`, `m = (p - 1)/g` with `g = gcd(p - 1, e1 + e2 - 2)`.
pub fn tail_invariants(p: usize, class: &CycleType) -> Result<TailInvariants> {
    require_prime(p)?;
    if class.degree() != p {
        return Err(Error::DegreeMismatch(class.degree(), p));
    }
    let (num, k) = match *class.lengths() {
        [e] if e == p => {
            return Err(Error::Precondition("a p-cycle has no tail".into()));
        }
        [e] => (p - e, e - 1),
        [e2, e1] if e1 + e2 <= p => (p + 1 - e1 - e2, e1 + e2 - 2),
        _ => {
            return Err(Error::Precondition(format!(
                "tail class must be a single cycle or a pair of cycles, got {class}"
            )))
        }
    };
    let g = (p - 1).gcd(&k);
    let (h, m) = ((num / g) as u64, ((p - 1) / g) as u64);
    Ok(TailInvariants {
        p,
        class: class.clone(),
        h,
        m,
        sigma: Rational::new(h as i64, m as i64),
    })
}

pub fn tail_invariants_single(p: usize, e: usize) -> Result<TailInvariants> {
    tail_invariants(p, &CycleType::single(p, e)?)
}

pub fn tail_invariants_pair(p: usize, e1: usize, e2: usize) -> Result<TailInvariants> {
    tail_invariants(p, &CycleType::new(p, &[e1, e2])?)
}

/// Orders of the automorphism group of a single-cycle tail cover and of its
/// subgroup fixing the ramification point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutOrders {
    pub full: u64,
    pub fixing: u64,
}

pub fn tail_aut_orders(p: usize, e: usize) -> Result<AutOrders> {
    let inv = tail_invariants_single(p, e)?;
    let full = if e % 2 == 1 { (p - e) / 2 } else { p - e } as u64;
    Ok(AutOrders {
        full,
        fixing: inv.h,
    })
}

/// Whether `Σ σ_i = r - 2` over the classes of a type of degree `p`,
/// with `σ = 0` for `p`-cycles.
pub fn signature_check(p: usize, t: &RamificationType) -> bool {
    if t.degree() != p || !(3..=4).contains(&t.len()) {
        return false;
    }
    let mut total = Rational::from_integer(0);
    for c in t.classes() {
        if c.lengths() == [p] {
            continue;
        }
        match tail_invariants(p, c) {
            Ok(inv) => total += inv.sigma,
            Err(_) => return false,
        }
    }
    total == Rational::from_integer(t.len() as i64 - 2)
}

/// `(p - 1)/n' · Π h_i / aut0_i`.
pub fn wewers_lift_count(p: usize, n_prime: Rational, tails: &[(u64, u64)]) -> Result<Rational> {
    if n_prime <= Rational::from_integer(0) {
        return Err(Error::Precondition("n' must be positive".into()));
    }
    let mut value = Rational::from_integer(p as i64 - 1) / n_prime;
    for &(h, aut0) in tails {
        if h == 0 || aut0 == 0 {
            return Err(Error::Precondition("tail data must be positive".into()));
        }
        value *= Rational::new(h as i64, aut0 as i64);
    }
    Ok(value)
}

/// `n'` for `τ* = (p; e1-e2, ε, p)` in terms of the tail count `N`, the
/// point-fixing automorphism order `aut0` of the pair tail, and `γ`:
/// `(1 + δ_{e1,e2}) N (p - 1) / (gcd(p - 1, e1 + e2 - 2) γ aut0)`.
pub fn n_prime_tau_star(p: usize, e1: usize, e2: usize, n: u64, aut0: u64, gamma: u64) -> Result<Rational> {
    if n == 0 || aut0 == 0 || gamma == 0 || e1 + e2 < 2 {
        return Err(Error::Precondition("parameters must be positive".into()));
    }
    let delta = if e1 == e2 { 2 } else { 1 };
    let g = (p - 1).gcd(&(e1 + e2 - 2)) as i64;
    Ok(Rational::new(
        delta * n as i64 * (p as i64 - 1),
        g * gamma as i64 * aut0 as i64,
    ))
}

/// `τ* = (p; e1-e2, p + 2 - e1 - e2, p)`.
pub fn tau_star(p: usize, e1: usize, e2: usize) -> Result<RamificationType> {
    let eps = (p + 2)
        .checked_sub(e1 + e2)
        .filter(|&x| x >= 2)
        .ok_or_else(|| Error::Precondition(format!("e1 + e2 = {} too large for p = {p}", e1 + e2)))?;
    RamificationType::two_cycle(p, e1.min(e2), e1.max(e2), eps, p)
}
