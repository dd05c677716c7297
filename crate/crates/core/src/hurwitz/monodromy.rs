//! Predicted monodromy groups for genus-0 pure-cycle types and for
//! three-point types `(p; e1-e2, e3, e4)` of prime degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::RamificationType;
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::perm::{factorial, Classification, GroupReport};

/// Named groups outside the generic families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionalGroup {
    /// `S_5` acting on six points through `PGL_2(5)`.
    S5OnSixLetters,
}

impl ExceptionalGroup {
    pub fn degree(self) -> usize {
        match self {
            ExceptionalGroup::S5OnSixLetters => 6,
        }
    }

    pub fn order(self) -> u128 {
        match self {
            ExceptionalGroup::S5OnSixLetters => 120,
        }
    }
}

impl fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionalGroup::S5OnSixLetters => f.write_str("S5 on 6 letters"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonodromyClass {
    Symmetric(usize),
    Alternating(usize),
    /// `F_p ⋊ F_p^*` acting on `F_p`.
    AffineFp(usize),
    /// A group between `PSL_2(q)` and `PΓL_2(q)` on the `q + 1` points of the projective line.
    PslFamily(usize),
    Exceptional(ExceptionalGroup),
}

impl MonodromyClass {
    pub fn degree(self) -> usize {
        match self {
            MonodromyClass::Symmetric(d) | MonodromyClass::Alternating(d) | MonodromyClass::AffineFp(d) => d,
            MonodromyClass::PslFamily(q) => q + 1,
            MonodromyClass::Exceptional(g) => g.degree(),
        }
    }

    /// Group order when it is determined by the class.
    pub fn order(self) -> Option<u128> {
        match self {
            MonodromyClass::Symmetric(d) => Some(factorial(d)),
            MonodromyClass::Alternating(d) => Some(factorial(d) / 2),
            MonodromyClass::AffineFp(p) => Some((p * (p - 1)) as u128),
            MonodromyClass::PslFamily(_) => None,
            MonodromyClass::Exceptional(g) => Some(g.order()),
        }
    }

    /// Whether a computed group report is consistent with this class.
    pub fn matches(self, report: &GroupReport) -> bool {
        if !report.is_transitive || report.degree != self.degree() {
            return false;
        }
        match self {
            MonodromyClass::Symmetric(_) => report.classification == Classification::Symmetric,
            MonodromyClass::Alternating(_) => report.classification == Classification::Alternating,
            other => other.order() == Some(report.order),
        }
    }
}

impl fmt::Display for MonodromyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonodromyClass::Symmetric(d) => write!(f, "S{d}"),
            MonodromyClass::Alternating(d) => write!(f, "A{d}"),
            MonodromyClass::AffineFp(p) => write!(f, "F{p} ⋊ F{p}*"),
            MonodromyClass::PslFamily(q) => write!(f, "PSL2({q})-family"),
            MonodromyClass::Exceptional(g) => write!(f, "{g}"),
        }
    }
}

/// Monodromy group of every cover of type `t`.
pub fn monodromy_classify(t: &RamificationType) -> Result<MonodromyClass> {
    let d = t.degree();
    if let Some(mut e) = t.pure_exponents() {
        t.require_genus_zero()?;
        e.sort_unstable();
        if d == 6 && e == [4, 4, 5] {
            return Ok(MonodromyClass::Exceptional(ExceptionalGroup::S5OnSixLetters));
        }
        return Ok(if e.iter().all(|x| x % 2 == 1) {
            MonodromyClass::Alternating(d)
        } else {
            MonodromyClass::Symmetric(d)
        });
    }
    if let Some((e1, e2, e3, e4)) = t.two_cycle_exponents() {
        if !is_prime(d as u64) {
            return Err(Error::Unsupported(format!(
                "{t}: two-cycle types are classified only in prime degree"
            )));
        }
        t.require_genus_zero()?;
        let (lo, hi) = (e3.min(e4), e3.max(e4));
        if d == 5 && (e1, e2, lo, hi) == (2, 2, 4, 4) {
            return Ok(MonodromyClass::AffineFp(5));
        }
        return Ok(if e3 % 2 == 1 && e4 % 2 == 1 && (e1 + e2) % 2 == 0 {
            MonodromyClass::Alternating(d)
        } else {
            MonodromyClass::Symmetric(d)
        });
    }
    Err(Error::Unsupported(format!("{t}: no monodromy classifier for this shape")))
}

/// Index factor from the monodromy: 2 for alternating, 1 for symmetric.
pub fn galois_factor(c: MonodromyClass) -> Result<u64> {
    match c {
        MonodromyClass::Alternating(_) => Ok(2),
        MonodromyClass::Symmetric(_) => Ok(1),
        other => Err(Error::Unsupported(format!("galois factor undefined for {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(s: &str) -> Result<MonodromyClass> {
        monodromy_classify(&s.parse().unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(
            classify("6:4,4,5").unwrap(),
            MonodromyClass::Exceptional(ExceptionalGroup::S5OnSixLetters)
        );
        assert_eq!(classify("6:5,4,4").unwrap().to_string(), "S5 on 6 letters");
        assert_eq!(classify("5:2-2,4,4").unwrap(), MonodromyClass::AffineFp(5));
        assert_eq!(classify("7:3,3,5,5").unwrap(), MonodromyClass::Alternating(7));
        assert_eq!(classify("7:2,4,4,6").unwrap(), MonodromyClass::Symmetric(7));
        assert_eq!(classify("7:3-3,3,7").unwrap(), MonodromyClass::Alternating(7));
        assert_eq!(classify("7:2-3,4,7").unwrap(), MonodromyClass::Symmetric(7));
        assert!(matches!(classify("6:2-2,4,6"), Err(Error::Unsupported(_))));
        assert!(matches!(classify("8:2-2-2,3,8"), Err(Error::Unsupported(_))));
    }

    #[test]
    fn galois_factors() {
        assert_eq!(galois_factor(MonodromyClass::Alternating(7)).unwrap(), 2);
        assert_eq!(galois_factor(MonodromyClass::Symmetric(7)).unwrap(), 1);
        assert!(galois_factor(MonodromyClass::AffineFp(5)).is_err());
    }
}
