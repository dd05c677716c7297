//! Polynomials defining the primitive tail covers and their ramification.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::{check_modulus, inv_mod, FpPolynomial};
use crate::error::{Error, Result};

/// `F(y) = y^p + y^e`.
pub fn tail_polynomial_single(p: u64, e: u64) -> Result<FpPolynomial> {
    check_modulus(p)?;
    if e < 2 || e > p - 1 {
        return Err(Error::Precondition(format!("need 2 <= e <= p - 1, got e = {e}, p = {p}")));
    }
    Ok(FpPolynomial::monomial(p, 1, p as usize).add(&FpPolynomial::monomial(p, 1, e as usize)))
}

/// The monic factor `F̃ = Σ c_i y^i` of degree `p - e1 - e2`, from
/// `c_{i-1} = c_i (e1 + i) / (e1 + e2 + i - 1)` starting at the top.
pub fn tail_factor_double(p: u64, e1: u64, e2: u64) -> Result<FpPolynomial> {
    check_modulus(p)?;
    if e1 < 2 || e2 < e1 || e1 + e2 > p {
        return Err(Error::Precondition(format!(
            "need 2 <= e1 <= e2 and e1 + e2 <= p, got ({e1}, {e2}), p = {p}"
        )));
    }
    let top = (p - e1 - e2) as usize;
    let mut c = vec![0u64; top + 1];
    c[top] = 1;
    for i in (1..=top as u64).rev() {
        // e1 + e2 <= e1 + e2 + i - 1 <= p - 1, so the denominator is a unit
        let den = e1 + e2 + i - 1;
        assert!(den % p != 0, "vanishing denominator {den} mod {p}");
        c[i as usize - 1] = c[i as usize] * ((e1 + i) % p) % p * inv_mod(den, p) % p;
    }
    FpPolynomial::new(p, c)
}

/// `F(y) = y^{e1} (y - 1)^{e2} F̃(y)`, of degree `p`.
pub fn tail_polynomial_double(p: u64, e1: u64, e2: u64) -> Result<FpPolynomial> {
    let tilde = tail_factor_double(p, e1, e2)?;
    Ok(FpPolynomial::monomial(p, 1, e1 as usize)
        .mul(&FpPolynomial::linear_root(p, 1).pow(e2))
        .mul(&tilde))
}

/// Where a finite critical point sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalPoint {
    Rational(u64),
    /// The roots of one irreducible factor of this degree.
    Conjugates { degree: usize },
}

impl fmt::Display for CriticalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalPoint::Rational(a) => write!(f, "y={a}"),
            CriticalPoint::Conjugates { degree } => write!(f, "{degree} conjugate points"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationPoint {
    pub location: CriticalPoint,
    pub index: usize,
    /// Number of geometric points described.
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationProfile {
    pub points: Vec<RamificationPoint>,
    pub wild_at_infinity: bool,
}

impl RamificationProfile {
    /// `Σ (index - 1)` over the finite geometric points.
    pub fn total_index(&self) -> usize {
        self.points.iter().map(|pt| (pt.index - 1) * pt.count).sum()
    }
}

/// Finite ramification of `y ↦ F(y)`: a root of `F'` of multiplicity `k`
/// is a point of index `k + 1`. Infinity is wild iff `deg F = p`.
pub fn ramification_profile(f: &FpPolynomial) -> Result<RamificationProfile> {
    let p = f.modulus();
    let deg = f
        .degree()
        .ok_or_else(|| Error::Precondition("zero polynomial".into()))?;
    if deg as u64 > p {
        return Err(Error::Precondition(format!("degree {deg} exceeds p = {p}")));
    }
    let df = f.derivative();
    if df.is_zero() {
        return Err(Error::Precondition(format!("{} is purely inseparable", f.render("y"))));
    }
    let mut points = Vec::new();
    for (g, k) in df.squarefree_decomposition()? {
        let index = k + 1;
        // unreachable for deg F <= p since then deg F' <= p - 2
        if index as u64 % p == 0 {
            return Err(Error::Unsupported(format!(
                "wild ramification of index {index} at a finite point"
            )));
        }
        let roots = g.roots_in_fp();
        let mut rest = g.clone();
        for &r in &roots {
            rest = rest.div_exact(&FpPolynomial::linear_root(p, r))?;
            points.push(RamificationPoint {
                location: CriticalPoint::Rational(r),
                index,
                count: 1,
            });
        }
        if rest.degree().unwrap_or(0) > 0 {
            for (degree, n) in rest.distinct_degree_factorization()? {
                for _ in 0..n {
                    points.push(RamificationPoint {
                        location: CriticalPoint::Conjugates { degree },
                        index,
                        count: degree,
                    });
                }
            }
        }
    }
    points.sort_by_key(|pt| (pt.location, pt.index));
    Ok(RamificationProfile {
        points,
        wild_at_infinity: deg as u64 == p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(a: u64, index: usize) -> RamificationPoint {
        RamificationPoint {
            location: CriticalPoint::Rational(a),
            index,
            count: 1,
        }
    }

    #[test]
    fn single_tail() {
        let f = tail_polynomial_single(5, 2).unwrap();
        assert_eq!(f.render("y"), "y^2 + y^5");
        assert_eq!(f.derivative(), FpPolynomial::monomial(5, 2, 1));
        let prof = ramification_profile(&f).unwrap();
        assert_eq!(prof.points, vec![rational(0, 2)]);
        assert!(prof.wild_at_infinity);
        assert!(tail_polynomial_single(5, 5).is_err());
    }

    #[test]
    fn double_tail_example() {
        let tilde = tail_factor_double(5, 2, 2).unwrap();
        assert_eq!(tilde.coeffs(), &[2, 1]);
        let f = tail_polynomial_double(5, 2, 2).unwrap();
        assert_eq!(f.degree(), Some(5));
        // y(y - 1) = y^2 - y
        assert_eq!(f.derivative().coeffs(), &[0, 4, 1]);
        let prof = ramification_profile(&f).unwrap();
        assert_eq!(prof.points, vec![rational(0, 2), rational(1, 2)]);
        assert!(prof.wild_at_infinity);
    }

    #[test]
    fn double_tail_derivative_shape() {
        let f = tail_polynomial_double(7, 2, 3).unwrap();
        let shape = FpPolynomial::monomial(7, 1, 1).mul(&FpPolynomial::linear_root(7, 1).pow(2));
        let (q, r) = f.derivative().divrem(&shape).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.degree(), Some(0));
    }

    #[test]
    fn empty_recursion() {
        assert!(tail_factor_double(7, 3, 4).unwrap().is_one());
        let f = tail_polynomial_double(7, 3, 4).unwrap();
        assert_eq!(f, FpPolynomial::monomial(7, 1, 3).mul(&FpPolynomial::linear_root(7, 1).pow(4)));
    }

    #[test]
    fn profile_examples() {
        let f = FpPolynomial::monomial(7, 1, 3);
        let prof = ramification_profile(&f).unwrap();
        assert_eq!(prof.points, vec![rational(0, 3)]);
        assert!(!prof.wild_at_infinity);
        assert!(ramification_profile(&FpPolynomial::monomial(5, 1, 5)).is_err());
        // degree above p is outside the supported range
        let big = FpPolynomial::new(5, vec![0, 0, 0, 0, 0, 1, 1]).unwrap();
        assert!(ramification_profile(&big).is_err());
        // y^3 + y over F_5: F' = 3y^2 + 1 has roots ±sqrt(-1/3) = ±sqrt(3), not in F_5
        let f = FpPolynomial::new(5, vec![0, 1, 0, 1]).unwrap();
        let prof = ramification_profile(&f).unwrap();
        assert_eq!(prof.points.len(), 1);
        assert_eq!(prof.points[0].location, CriticalPoint::Conjugates { degree: 2 });
        assert_eq!(prof.total_index(), 2);
    }
}
