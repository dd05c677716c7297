use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Largest modulus accepted; products of two residues must fit in `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

pub(crate) fn check_modulus(p: u64) -> Result<()> {
    if p > MAX_MODULUS || !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not a supported prime modulus")));
    }
    Ok(())
}

impl FpPolynomial {
    /// Coefficients are reduced mod `p`.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self::from_reduced(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    /// From signed coefficients, reduced mod `p`.
    pub fn from_signed(p: u64, coeffs: &[i64]) -> Result<Self> {
        check_modulus(p)?;
        let reduced = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
        Ok(Self::from_reduced(p, reduced))
    }

    pub(crate) fn from_reduced(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPolynomial { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPolynomial { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::from_reduced(p, vec![c % p])
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    /// `c · t^k`.
    pub fn monomial(p: u64, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c % p;
        Self::from_reduced(p, coeffs)
    }

    /// `t - a`.
    pub fn linear_root(p: u64, a: u64) -> Self {
        Self::from_reduced(p, vec![(p - a % p) % p, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p).collect();
        Self::from_reduced(self.p, c)
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        Self::from_reduced(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u64) -> Self {
        let k = k % self.p;
        Self::from_reduced(self.p, self.coeffs.iter().map(|&x| x * k % self.p).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        Self::from_reduced(self.p, c)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut r = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &a)| (k as u64 % self.p) * a % self.p)
            .collect();
        Self::from_reduced(self.p, c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % self.p)
    }

    /// Divide by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor);
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Precondition("division by the zero polynomial".into()))?;
        let p = self.p;
        let inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * inv % p;
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - c * b % p) % p;
            }
        }
        rem.truncate(dd);
        Ok((Self::from_reduced(p, quot), Self::from_reduced(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Roots in `F_p` by exhaustive evaluation, ascending.
    pub fn roots_in_fp(&self) -> Vec<u64> {
        if self.is_zero() {
            return (0..self.p).collect();
        }
        (0..self.p).filter(|&x| self.eval(x) == 0).collect()
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: u64) -> usize {
        let lin = Self::linear_root(self.p, a);
        let mut f = self.clone();
        let mut k = 0;
        while !f.is_zero() {
            let (q, r) = f.divrem(&lin).expect("nonzero divisor");
            if !r.is_zero() {
                break;
            }
            f = q;
            k += 1;
        }
        k
    }

    /// `f(t)` with `f = g(t^p)` rewritten as `g(t)`; valid only when every
    /// exponent is a multiple of `p` (coefficients are fixed by Frobenius on `F_p`).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        Self::from_reduced(self.p, c)
    }

    /// Squarefree decomposition of a nonzero polynomial: pairwise coprime monic
    /// squarefree `(g_i, k_i)` with `f = lc · Π g_i^{k_i}`, ascending `k_i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(FpPolynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::Precondition("zero polynomial has no factorization".into()));
        }
        let mut out = Vec::new();
        self.monic().squarefree_into(1, &mut out);
        out.sort_by_key(|(g, k)| (*k, g.coeffs.clone()));
        Ok(out)
    }

    fn squarefree_into(&self, scale: usize, out: &mut Vec<(FpPolynomial, usize)>) {
        if self.degree().unwrap_or(0) == 0 {
            return;
        }
        let d = self.derivative();
        let mut c = self.gcd(&d);
        let mut w = self.div_exact(&c).expect("gcd divides");
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y).expect("gcd divides");
            if z.degree().unwrap_or(0) > 0 {
                out.push((z, i * scale));
            }
            i += 1;
            w = y.clone();
            c = c.div_exact(&y).expect("gcd divides");
        }
        if !c.is_one() {
            c.pth_root().squarefree_into(scale * self.p as usize, out);
        }
    }

    /// `(degree, number of irreducible factors of that degree)` for a
    /// squarefree polynomial.
    pub fn distinct_degree_factorization(&self) -> Result<Vec<(usize, usize)>> {
        if self.is_zero() {
            return Err(Error::Precondition("zero polynomial".into()));
        }
        let mut f = self.monic();
        let p = self.p;
        let x = Self::monomial(p, 1, 1);
        let mut out = Vec::new();
        let mut h = x.rem(&f)?;
        let mut i = 1;
        while f.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod_poly(p, &f)?;
            let g = f.gcd(&h.sub(&x));
            if let Some(gd) = g.degree().filter(|&gd| gd > 0) {
                out.push((i, gd / i));
                f = f.div_exact(&g)?;
                h = h.rem(&f)?;
            }
            i += 1;
        }
        if let Some(fd) = f.degree().filter(|&fd| fd > 0) {
            out.push((fd, 1));
        }
        Ok(out)
    }

    fn pow_mod_poly(&self, mut e: u64, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut r = Self::one(self.p).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(r)
    }

    /// Render with a chosen variable name: ascending powers, zero terms
    /// omitted, unit coefficients suppressed, e.g. `1 + 4*λ + λ^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}*{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, c) => format!("{c}*{var}^{k}"),
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("λ"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(p: u64, c: &[u64]) -> FpPolynomial {
        FpPolynomial::new(p, c.to_vec()).unwrap()
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(poly(5, &[1, 5, 0, 10]).coeffs(), &[1]);
        assert_eq!(poly(5, &[0, 0]).degree(), None);
        assert!(FpPolynomial::new(6, vec![1]).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(5, &[1, 4, 1]).to_string(), "1 + 4*λ + λ^2");
        assert_eq!(poly(3, &[1, 1]).to_string(), "1 + λ");
        assert_eq!(poly(5, &[0, 0, 3]).render("y"), "3*y^2");
        assert_eq!(FpPolynomial::zero(5).to_string(), "0");
    }

    #[test]
    fn derivative_kills_pth_powers() {
        let f = poly(5, &[0, 0, 1, 0, 0, 1]);
        assert_eq!(f.derivative(), poly(5, &[0, 2]));
    }

    #[test]
    fn squarefree_examples() {
        // (t - 1)^2 (t + 1) over F_7
        let f = FpPolynomial::linear_root(7, 1).pow(2).mul(&FpPolynomial::linear_root(7, 6));
        let sf = f.squarefree_decomposition().unwrap();
        assert_eq!(sf, vec![(FpPolynomial::linear_root(7, 6), 1), (FpPolynomial::linear_root(7, 1), 2)]);
        // t^5 + 1 = (t + 1)^5 over F_5
        let g = poly(5, &[1, 0, 0, 0, 0, 1]);
        assert_eq!(g.squarefree_decomposition().unwrap(), vec![(poly(5, &[1, 1]), 5)]);
    }

    #[test]
    fn ddf_examples() {
        // t^2 + 2 is irreducible over F_5 (-2 = 3 is not a square)
        assert_eq!(poly(5, &[2, 0, 1]).distinct_degree_factorization().unwrap(), vec![(2, 1)]);
        // t^2 - 1 splits
        assert_eq!(poly(5, &[4, 0, 1]).distinct_degree_factorization().unwrap(), vec![(1, 2)]);
        // t (t^2 + 2)(t^3 + t + 1) over F_5
        let f = poly(5, &[0, 1]).mul(&poly(5, &[2, 0, 1])).mul(&poly(5, &[1, 1, 0, 1]));
        assert_eq!(
            f.distinct_degree_factorization().unwrap(),
            vec![(1, 1), (2, 1), (3, 1)]
        );
    }

    fn arb_poly(p: u64) -> impl Strategy<Value = FpPolynomial> {
        proptest::collection::vec(0..p, 0..8).prop_map(move |c| FpPolynomial::new(p, c).unwrap())
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_poly(7), b in arb_poly(7)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn squarefree_reassembles(a in arb_poly(5)) {
            prop_assume!(!a.is_zero());
            let parts = a.squarefree_decomposition().unwrap();
            let prod = parts.iter().fold(FpPolynomial::constant(5, a.leading()), |acc, (g, k)| acc.mul(&g.pow(*k as u64)));
            prop_assert_eq!(prod, a);
            for (g, _) in &parts {
                prop_assert!(g.gcd(&g.derivative()).is_one());
            }
        }

        #[test]
        fn eval_is_a_ring_map(a in arb_poly(11), b in arb_poly(11), x in 0u64..11) {
            prop_assert_eq!(a.mul(&b).eval(x), a.eval(x) * b.eval(x) % 11);
            prop_assert_eq!(a.add(&b).eval(x), (a.eval(x) + b.eval(x)) % 11);
        }
    }
}
