//! Deformation data of the Legendre-type Kummer covers and their Cartier
//! coefficient.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::poly::{check_modulus, FpPolynomial};
use crate::error::{Error, Result};

/// `C(n, k) mod p` by Lucas' theorem; zero when `k > n`.
pub fn binomial_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        r = r * small_binomial(ni, ki, p) % p;
        n /= p;
        k /= p;
    }
    r
}

fn small_binomial(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * super::poly::inv_mod(den, p) % p
}

/// Exponents `a_1..a_4` of `z^{p-1} = x^{a_1} (x-1)^{a_2} (x-λ)^{a_3}`, with
/// `a_4` the exponent at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KummerData {
    pub p: u64,
    pub a: [u64; 4],
}

impl KummerData {
    /// Requires `0 <= a_i <= p - 1` and `Σ a_i = 2(p - 1)`.
    pub fn new(p: u64, a: [u64; 4]) -> Result<Self> {
        check_modulus(p)?;
        if p < 3 {
            return Err(Error::Precondition("need an odd prime".into()));
        }
        if let Some(&x) = a.iter().find(|&&x| x > p - 1) {
            return Err(Error::Precondition(format!("exponent {x} exceeds p - 1 = {}", p - 1)));
        }
        let sum: u64 = a.iter().sum();
        if sum != 2 * (p - 1) {
            return Err(Error::Precondition(format!(
                "exponents sum to {sum}, expected 2(p-1) = {}",
                2 * (p - 1)
            )));
        }
        Ok(KummerData { p, a })
    }

    /// `a_i = p - e_i` for a pure-cycle type `(p; e_1, .., e_4)`.
    pub fn from_pure_type(p: u64, e: [u64; 4]) -> Result<Self> {
        if e.iter().any(|&x| x < 1 || x > p) {
            return Err(Error::Precondition(format!("cycle lengths {e:?} out of range for p = {p}")));
        }
        KummerData::new(p, e.map(|x| p - x))
    }

    /// `(p - 1) / gcd(p - 1, a_1, .., a_4)`.
    pub fn kummer_degree(&self) -> u64 {
        let g = self.a.iter().fold(self.p - 1, |g, &x| g.gcd(&x));
        (self.p - 1) / g
    }
}

/// `c(λ) = Σ_j C(p-1-a_2, a_4-j) C(p-1-a_3, j) λ^j` over
/// `max(0, a_2 + a_4 - (p-1)) <= j <= min(a_4, p-1-a_3)`.
///
/// Up to the sign `(-1)^{a_4}` this is the coefficient of `x^p` in
/// `x^{p-a_1} (x-1)^{p-1-a_2} (x-λ)^{p-1-a_3}`. Outside this range of `j`
/// one of the two binomials vanishes.
pub fn cartier_coefficient(k: &KummerData) -> Result<FpPolynomial> {
    let p = k.p;
    let [_, a2, a3, a4] = k.a;
    let lo = (a2 + a4).saturating_sub(p - 1);
    let hi = a4.min(p - 1 - a3);
    let mut coeffs = vec![0u64; hi as usize + 1];
    for j in lo..=hi {
        coeffs[j as usize] = binomial_mod(p - 1 - a2, a4 - j, p) * binomial_mod(p - 1 - a3, j, p) % p;
    }
    let c = FpPolynomial::new(p, coeffs)?;
    if c.is_zero() {
        return Err(Error::Precondition(format!("Cartier coefficient vanishes for {k:?}")));
    }
    Ok(c)
}

/// Supersingular parameters: roots of `c(λ)` in `F_p \ {0, 1}`, and the
/// degrees of the irreducible factors of `c` without roots in `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupersingularReport {
    pub rational: Vec<u64>,
    /// `(degree, number of irreducible factors of that degree)`, degree >= 2.
    pub extension_factors: Vec<(usize, usize)>,
}

pub fn supersingular_lambdas(k: &KummerData) -> Result<SupersingularReport> {
    let c = cartier_coefficient(k)?;
    let p = k.p;
    let mut extension: std::collections::BTreeMap<usize, usize> = Default::default();
    let mut rational = Vec::new();
    for (g, _) in c.squarefree_decomposition()? {
        let roots = g.roots_in_fp();
        let mut rest = g.clone();
        for &r in &roots {
            rest = rest.div_exact(&FpPolynomial::linear_root(p, r))?;
        }
        rational.extend(roots.into_iter().filter(|&r| r != 0 && r != 1));
        if rest.degree().unwrap_or(0) > 0 {
            for (deg, n) in rest.distinct_degree_factorization()? {
                *extension.entry(deg).or_default() += n;
            }
        }
    }
    rational.sort_unstable();
    rational.dedup();
    Ok(SupersingularReport {
        rational,
        extension_factors: extension.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_matches_direct_binomials() {
        fn exact(n: u64, k: u64) -> u128 {
            if k > n {
                return 0;
            }
            (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
        }
        for p in [2u64, 3, 5, 7, 13] {
            for n in 0..40 {
                for k in 0..45 {
                    assert_eq!(binomial_mod(n, k, p) as u128, exact(n, k) % p as u128, "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn kummer_validation() {
        assert!(KummerData::new(5, [2, 2, 2, 2]).is_ok());
        assert!(KummerData::new(5, [5, 1, 1, 1]).is_err());
        assert!(KummerData::new(5, [2, 2, 2, 1]).is_err());
        assert_eq!(KummerData::new(7, [3, 3, 3, 3]).unwrap().kummer_degree(), 2);
        assert_eq!(KummerData::new(7, [1, 2, 4, 5]).unwrap().kummer_degree(), 6);
        assert_eq!(KummerData::from_pure_type(7, [2, 4, 4, 6]).unwrap().a, [5, 3, 3, 1]);
    }

    #[test]
    fn cartier_examples() {
        let c = cartier_coefficient(&KummerData::new(3, [1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(c.coeffs(), &[1, 1]);
        let c = cartier_coefficient(&KummerData::new(5, [2, 2, 2, 2]).unwrap()).unwrap();
        assert_eq!(c.coeffs(), &[1, 4, 1]);
    }

    #[test]
    fn lower_limit_keeps_terms_when_a2_plus_a4_is_small() {
        // a2 + a4 = 2 < p - 1 = 4: the j = 0 and j = 1 terms are both nonzero
        let c = cartier_coefficient(&KummerData::new(5, [4, 1, 2, 1]).unwrap()).unwrap();
        assert_eq!(c.coeffs(), &[3, 2]);
    }

    #[test]
    fn supersingular_examples() {
        let r = supersingular_lambdas(&KummerData::new(3, [1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(r.rational, vec![2]);
        assert!(r.extension_factors.is_empty());
        let r = supersingular_lambdas(&KummerData::new(5, [2, 2, 2, 2]).unwrap()).unwrap();
        assert!(r.rational.is_empty());
        assert_eq!(r.extension_factors, vec![(2, 1)]);
    }

    #[test]
    fn zero_and_one_are_never_reported() {
        for p in [3u64, 5, 7, 11] {
            for a1 in 0..p {
                for a2 in 0..p {
                    for a3 in 0..p {
                        let Some(a4) = (2 * (p - 1)).checked_sub(a1 + a2 + a3) else { continue };
                        let Ok(k) = KummerData::new(p, [a1, a2, a3, a4]) else { continue };
                        let r = supersingular_lambdas(&k).unwrap();
                        assert!(r.rational.iter().all(|&x| x != 0 && x != 1));
                    }
                }
            }
        }
    }
}
