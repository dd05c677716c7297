//! Permutations of `{0, .., d-1}`, cycle types, and finite permutation groups.
//!
//! Composition follows one convention everywhere in the crate:
//! `a.compose(&b)` applies `b` first, so `(a * b)(x) = a(b(x))`. A tuple
//! `(g1, .., gr)` has product identity when `g1 * (g2 * (.. * gr))` is the
//! identity.
//!
//! Text I/O uses disjoint-cycle notation with 1-based points, e.g.
//! `(1,2,3)(4,5)`; the identity prints as `()`.

mod group;
pub mod data;

pub use group::{
    cycle_type_census, group_analyze, group_analyze_with_cap, is_transitive, orbit,
    Classification, GroupReport, StabilizerChain, DEFAULT_ORDER_CAP,
};

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported degree; images are stored as bytes.
pub const MAX_DEGREE: usize = 255;

/// A bijection of `{0, .., d-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation {
            images: (0..degree).map(|x| x as u8).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        if d == 0 || d > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree must be in 1..={MAX_DEGREE}, got {d}"
            )));
        }
        let mut seen = vec![false; d];
        for &y in images {
            if y >= d || seen[y] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{d}"
                )));
            }
            seen[y] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&y| y as u8).collect(),
        })
    }

    pub(crate) fn from_bytes_unchecked(images: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree must be in 1..={MAX_DEGREE}, got {degree}"
            )));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in cycle {
                if x >= degree || used[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint cycles on 0..{degree}"
                    )));
                }
                used[x] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    /// Parses 1-based disjoint-cycle notation such as `(1,2,3)(4,5)`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])));
            let Some((inner, tail)) = body else {
                return Err(Error::Parse(format!("malformed cycle notation: {text:?}")));
            };
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|tok| match tok.parse::<usize>() {
                        Ok(v) if v >= 1 => Ok(v - 1),
                        _ => Err(Error::Parse(format!("bad point {tok:?} in {text:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = tail;
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `self * other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        Permutation { images: inv }
    }

    /// `h * self * h^-1`.
    pub fn conjugate_by(&self, h: &Permutation) -> Result<Permutation> {
        if self.degree() != h.degree() {
            return Err(Error::DegreeMismatch(self.degree(), h.degree()));
        }
        let mut out = vec![0u8; self.degree()];
        for x in 0..self.degree() {
            out[h.apply(x)] = h.images[self.apply(x)];
        }
        Ok(Permutation { images: out })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType {
            degree: self.degree(),
            lengths,
        }
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> u128 {
        self.cycles()
            .iter()
            .fold(1u128, |acc, c| num_integer::lcm(acc, c.len() as u128))
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().is_even()
    }

    /// First point moved by the permutation, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&x| self.apply(x) != x)
    }
}

fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&y| {
        let y = y as usize;
        y < images.len() && !std::mem::replace(&mut seen[y], true)
    })
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::compose`] for the checked form.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// `compose(a, b)` maps `x` to `a(b(x))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

pub fn cycle_type(g: &Permutation) -> CycleType {
    g.cycle_type()
}

pub fn centralizer_order(t: &CycleType) -> u128 {
    t.centralizer_order()
}

/// Cycle type of a permutation of degree `d`: the multiset of cycle lengths
/// `>= 2`, stored in decreasing order. Fixed points are implicit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    degree: usize,
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn new(degree: usize, lengths: &[usize]) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidType(format!("degree {degree} out of range")));
        }
        if let Some(bad) = lengths.iter().find(|&&l| l < 2) {
            return Err(Error::InvalidType(format!(
                "cycle length {bad} < 2 (fixed points are implicit)"
            )));
        }
        let moved: usize = lengths.iter().sum();
        if moved > degree {
            return Err(Error::InvalidType(format!(
                "cycle lengths {lengths:?} need {moved} points but degree is {degree}"
            )));
        }
        let mut lengths = lengths.to_vec();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { degree, lengths })
    }

    pub fn identity(degree: usize) -> Self {
        CycleType {
            degree,
            lengths: Vec::new(),
        }
    }

    pub fn single(degree: usize, e: usize) -> Result<Self> {
        CycleType::new(degree, &[e])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Cycle lengths `>= 2`, largest first.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn moved_points(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn fixed_points(&self) -> usize {
        self.degree - self.moved_points()
    }

    pub fn is_single_cycle(&self) -> bool {
        self.lengths.len() == 1
    }

    /// Sum of `(length - 1)`: the contribution to Riemann-Hurwitz.
    pub fn index(&self) -> usize {
        self.lengths.iter().map(|l| l - 1).sum()
    }

    pub fn is_even(&self) -> bool {
        self.index() % 2 == 0
    }

    /// Order of the centralizer of an element of this type in `S_d`:
    /// the product over lengths `l` with multiplicity `k` (fixed points
    /// included as `l = 1`) of `l^k * k!`.
    pub fn centralizer_order(&self) -> u128 {
        let mut all = self.lengths.clone();
        all.extend(std::iter::repeat_n(1, self.fixed_points()));
        let mut order = 1u128;
        let mut i = 0;
        while i < all.len() {
            let l = all[i];
            let k = all[i..].iter().take_while(|&&x| x == l).count();
            order *= (l as u128).pow(k as u32) * factorial(k);
            i += k;
        }
        order
    }

    /// Size of the conjugacy class `d! / |C(g)|`.
    pub fn class_size(&self) -> u128 {
        factorial(self.degree) / self.centralizer_order()
    }

    /// Cycles in decreasing length order on consecutive points starting at 0.
    pub fn canonical_representative(&self) -> Permutation {
        let mut cycles = Vec::with_capacity(self.lengths.len());
        let mut next = 0;
        for &l in &self.lengths {
            cycles.push((next..next + l).collect::<Vec<_>>());
            next += l;
        }
        Permutation::from_cycles(self.degree, &cycles).expect("canonical cycles are disjoint")
    }
}

impl fmt::Display for CycleType {
    /// Lengths joined by `-` (e.g. `3-2`); the identity class prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lengths.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.lengths.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("-"))
    }
}

impl serde::Serialize for CycleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}:{}", self.degree(), self))
    }
}

impl<'de> serde::Deserialize<'de> for CycleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let (deg, body) = s
            .split_once(':')
            .ok_or_else(|| serde::de::Error::custom("expected `degree:lengths`"))?;
        let degree: usize = deg.parse().map_err(serde::de::Error::custom)?;
        let lengths = if body == "1" {
            Vec::new()
        } else {
            body.split('-')
                .map(|x| x.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(serde::de::Error::custom)?
        };
        CycleType::new(degree, &lengths).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Generator data: a degree and a list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl FromStr for GeneratorSet {
    type Err = Error;

    /// Parses the generator file format: `#` comments, a `degree: n` header,
    /// then one permutation per line in 1-based cycle notation.
    fn from_str(text: &str) -> Result<Self> {
        let mut degree = None;
        let mut generators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(value) = line.strip_prefix("degree:") {
                let d = value.trim().parse::<usize>().map_err(|_| {
                    Error::Parse(format!("line {}: bad degree {value:?}", lineno + 1))
                })?;
                degree = Some(d);
                continue;
            }
            let d = degree.ok_or_else(|| {
                Error::Parse(format!(
                    "line {}: permutation before `degree:` header",
                    lineno + 1
                ))
            })?;
            generators.push(Permutation::parse_cycles(line, d)?);
        }
        let degree = degree.ok_or_else(|| Error::Parse("missing `degree:` header".into()))?;
        if generators.is_empty() {
            return Err(Error::Parse("no generators".into()));
        }
        Ok(GeneratorSet { degree, generators })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse_cycles(s, d).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // (0 1) * (1 2): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap());
        assert_eq!(ab.images(), &[1, 2, 0]);
    }

    #[test]
    fn compose_with_identity() {
        let b = p("(1,4,2)(3,5)", 6);
        assert_eq!(Permutation::identity(6).compose(&b).unwrap(), b);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch(3, 4));
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&[0, 3, 1]).is_err());
        assert!(Permutation::from_images(&[]).is_err());
    }

    #[test]
    fn cycle_type_examples() {
        assert!(cycle_type(&Permutation::identity(5)).lengths().is_empty());
        assert_eq!(cycle_type(&p("(1,2,3,4)", 7)).lengths(), &[4]);
        assert_eq!(cycle_type(&p("(1,2)(3,4)", 5)).lengths(), &[2, 2]);
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(CycleType::identity(4).centralizer_order(), 24);
        assert_eq!(CycleType::single(6, 6).unwrap().centralizer_order(), 6);
        assert_eq!(CycleType::new(5, &[2, 2]).unwrap().centralizer_order(), 8);
    }

    #[test]
    fn centralizer_of_22_in_s5_by_brute_force() {
        let g = p("(1,2)(3,4)", 5);
        let count = all_perms(5).iter().filter(|h| (*h * &g) == (&g * *h)).count();
        assert_eq!(count, 8);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let g = p("(1, 3,2)( 4,5)", 6);
        assert_eq!(g.to_string(), "(1,3,2)(4,5)");
        assert_eq!(p("()", 3), Permutation::identity(3));
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 3).is_err());
    }

    #[test]
    fn canonical_representative_layout() {
        let t = CycleType::new(7, &[2, 3]).unwrap();
        assert_eq!(t.canonical_representative().to_string(), "(1,2,3)(4,5)");
        assert_eq!(t.canonical_representative().cycle_type(), t);
    }

    #[test]
    fn generator_file_parsing() {
        let set: GeneratorSet = "# c\ndegree: 5\n(1,2)\n(1,2,3,4,5)\n".parse().unwrap();
        assert_eq!(set.degree, 5);
        assert_eq!(set.generators.len(), 2);
        assert!("(1,2)\n".parse::<GeneratorSet>().is_err());
        assert!("degree: 3\n".parse::<GeneratorSet>().is_err());
    }

    #[test]
    fn class_size_matches_brute_force_count() {
        for d in 1..=7 {
            let perms = all_perms(d);
            let mut counts = std::collections::BTreeMap::new();
            for g in &perms {
                *counts.entry(g.cycle_type()).or_insert(0u128) += 1;
            }
            for (t, n) in counts {
                assert_eq!(t.class_size(), n, "type {t} in S_{d}");
                assert_eq!(factorial(d) / t.centralizer_order(), n);
            }
        }
    }

    pub(crate) fn all_perms(d: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let d = used.len();
            if prefix.len() == d {
                out.push(Permutation::from_images(prefix).unwrap());
                return;
            }
            for x in 0..d {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; d], &mut out);
        out
    }
}
