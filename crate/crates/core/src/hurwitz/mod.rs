//! Ramification types, Hurwitz factorizations, brute-force Hurwitz numbers,
//! the genus-0 closed formulas, and monodromy classification.

mod canonical;
mod enumerate;
mod formulas;
mod monodromy;

pub use canonical::canonical_key;
pub use enumerate::{
    enumerate_factorizations, enumerate_factorizations_with, hurwitz_number_brute,
    hurwitz_number_brute_with, EnumConfig,
};
pub use formulas::{hurwitz_formula, hurwitz_formula_badtype, hurwitz_formula_pure4};
pub use monodromy::{galois_factor, monodromy_classify, ExceptionalGroup, MonodromyClass};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{is_transitive, CycleType, Permutation};

/// `(d; C_1, .., C_r)` with `r >= 3` non-trivial conjugacy classes of `S_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RamificationType {
    degree: usize,
    classes: Vec<CycleType>,
}

impl RamificationType {
    pub fn new(degree: usize, classes: Vec<CycleType>) -> Result<Self> {
        if classes.len() < 3 {
            return Err(Error::InvalidType(format!(
                "need at least 3 branch classes, got {}",
                classes.len()
            )));
        }
        for c in &classes {
            if c.degree() != degree {
                return Err(Error::InvalidType(format!(
                    "class {c} has degree {} but the type has degree {degree}",
                    c.degree()
                )));
            }
            if c.lengths().is_empty() {
                return Err(Error::InvalidType("identity class is not a branch class".into()));
            }
        }
        Ok(RamificationType { degree, classes })
    }

    /// `(d; e_1, .., e_r)` with every class a single cycle.
    pub fn pure_cycle(degree: usize, exponents: &[usize]) -> Result<Self> {
        let classes = exponents
            .iter()
            .map(|&e| CycleType::single(degree, e))
            .collect::<Result<Vec<_>>>()?;
        RamificationType::new(degree, classes)
    }

    /// `(d; e_1-e_2, e_3, e_4)`.
    pub fn two_cycle(degree: usize, e1: usize, e2: usize, e3: usize, e4: usize) -> Result<Self> {
        RamificationType::new(
            degree,
            vec![
                CycleType::new(degree, &[e1, e2])?,
                CycleType::single(degree, e3)?,
                CycleType::single(degree, e4)?,
            ],
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_pure_cycle(&self) -> bool {
        self.classes.iter().all(CycleType::is_single_cycle)
    }

    /// Cycle lengths `e_i` when every class is a single cycle.
    pub fn pure_exponents(&self) -> Option<Vec<usize>> {
        self.is_pure_cycle()
            .then(|| self.classes.iter().map(|c| c.lengths()[0]).collect())
    }

    /// `(e1, e2, e3, e4)` for a type `(d; e1-e2, e3, e4)`: exactly one class
    /// with two cycles (`e1 <= e2`), the other two single cycles in slot order.
    pub fn two_cycle_exponents(&self) -> Option<(usize, usize, usize, usize)> {
        if self.classes.len() != 3 {
            return None;
        }
        let pair_slot = self.classes.iter().position(|c| c.lengths().len() == 2)?;
        let singles: Vec<usize> = self
            .classes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pair_slot)
            .map(|(_, c)| c.is_single_cycle().then(|| c.lengths()[0]))
            .collect::<Option<Vec<_>>>()?;
        let l = self.classes[pair_slot].lengths();
        Some((l[1], l[0], singles[0], singles[1]))
    }

    /// Sum over all classes of `(cycle length - 1)`.
    pub fn total_index(&self) -> usize {
        self.classes.iter().map(CycleType::index).sum()
    }

    pub fn genus(&self) -> Result<usize> {
        genus_of_type(self)
    }

    pub(crate) fn require_genus_zero(&self) -> Result<()> {
        let total = self.total_index();
        let want = 2 * self.degree - 2;
        if total == want {
            return Ok(());
        }
        let msg = match self.pure_exponents() {
            Some(e) => format!(
                "Σe={} ≠ 2d-2+r={}",
                e.iter().sum::<usize>(),
                want + self.classes.len()
            ),
            None => format!("Σ(e-1)={total} ≠ 2d-2={want}"),
        };
        Err(Error::GenusCondition(msg))
    }
}

/// Genus `g` of the covering curve from `2 - 2g = 2d - Σ(e - 1)`.
/// Half-integral or negative values are rejected.
pub fn genus_of_type(t: &RamificationType) -> Result<usize> {
    let twice_g_minus_two = t.total_index() as i64 - 2 * t.degree as i64;
    if twice_g_minus_two % 2 != 0 {
        return Err(Error::InvalidType(format!(
            "{t}: Riemann-Hurwitz gives a half-integral genus"
        )));
    }
    let g = twice_g_minus_two / 2 + 1;
    if g < 0 {
        return Err(Error::InvalidType(format!(
            "{t}: Riemann-Hurwitz gives negative genus {g}"
        )));
    }
    Ok(g as usize)
}

impl fmt::Display for RamificationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.classes.iter().map(|c| c.to_string()).collect();
        write!(f, "{}:{}", self.degree, parts.join(","))
    }
}

impl FromStr for RamificationType {
    type Err = Error;

    /// Compact grammar `d:e1,e2,e3[,e4..]`; a class made of several
    /// disjoint cycles is written with `-`, e.g. `7:3-3,3,7`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (deg, list) = compact
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `d:list`, got {s:?}")))?;
        let degree: usize = deg
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree {deg:?}")))?;
        let classes = list
            .split(',')
            .map(|item| {
                let lengths = item
                    .split('-')
                    .map(|e| {
                        e.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad cycle length {e:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                CycleType::new(degree, &lengths)
            })
            .collect::<Result<Vec<_>>>()?;
        RamificationType::new(degree, classes)
    }
}

impl Serialize for RamificationType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RamificationType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A tuple `(g_1, .., g_r)` with `g_1 * .. * g_r = 1` generating a transitive group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzFactorization {
    tuple: Vec<Permutation>,
}

/// Left-to-right product `g_1 * (g_2 * (.. * g_r))`.
pub fn tuple_product(tuple: &[Permutation]) -> Result<Permutation> {
    let last = tuple
        .last()
        .ok_or_else(|| Error::Precondition("empty tuple".into()))?;
    tuple[..tuple.len() - 1]
        .iter()
        .rev()
        .try_fold(last.clone(), |acc, g| g.compose(&acc))
}

impl HurwitzFactorization {
    pub fn new(tuple: Vec<Permutation>) -> Result<Self> {
        let product = tuple_product(&tuple)?;
        if !product.is_identity() {
            return Err(Error::Precondition(format!(
                "product of the tuple is {product}, not the identity"
            )));
        }
        if !is_transitive(&tuple) {
            return Err(Error::Precondition("tuple generates an intransitive group".into()));
        }
        Ok(HurwitzFactorization { tuple })
    }

    pub(crate) fn from_parts_unchecked(tuple: Vec<Permutation>) -> Self {
        HurwitzFactorization { tuple }
    }

    pub fn degree(&self) -> usize {
        self.tuple[0].degree()
    }

    pub fn tuple(&self) -> &[Permutation] {
        &self.tuple
    }

    pub fn into_tuple(self) -> Vec<Permutation> {
        self.tuple
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuple.is_empty()
    }

    /// Whether `cycle_type(g_i) = C_i` for every slot.
    pub fn has_type(&self, t: &RamificationType) -> bool {
        t.degree() == self.degree()
            && t.len() == self.len()
            && self
                .tuple
                .iter()
                .zip(t.classes())
                .all(|(g, c)| &g.cycle_type() == c)
    }

    pub fn canonical_key(&self) -> Vec<u8> {
        let slices: Vec<&[u8]> = self.tuple.iter().map(Permutation::images).collect();
        canonical_key(&slices, self.degree())
    }

    /// The representative of this factorization's simultaneous-conjugacy class.
    pub fn canonical_form(&self) -> HurwitzFactorization {
        from_key(&self.canonical_key(), self.degree())
    }

    /// Simultaneously conjugate: `(h g_1 h^-1, .., h g_r h^-1)`.
    pub fn conjugate_by(&self, h: &Permutation) -> Result<HurwitzFactorization> {
        let tuple = self
            .tuple
            .iter()
            .map(|g| g.conjugate_by(h))
            .collect::<Result<Vec<_>>>()?;
        Ok(HurwitzFactorization { tuple })
    }

    pub fn is_equivalent(&self, other: &HurwitzFactorization) -> bool {
        self.degree() == other.degree()
            && self.len() == other.len()
            && self.canonical_key() == other.canonical_key()
    }

    pub fn to_record(&self) -> FactorizationRecord {
        FactorizationRecord {
            d: self.degree(),
            tuple: self
                .tuple
                .iter()
                .map(|g| {
                    g.cycles()
                        .into_iter()
                        .map(|c| c.into_iter().map(|x| x + 1).collect())
                        .collect()
                })
                .collect(),
        }
    }

    /// One JSON line: `{"d":7,"tuple":[[[1,2,3],[4,5]],..]}` with 1-based cycles.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let record: FactorizationRecord =
            serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
        record.to_factorization()
    }
}

impl fmt::Display for HurwitzFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tuple.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Serialized form of a factorization (1-based cycles per permutation).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub d: usize,
    pub tuple: Vec<Vec<Vec<usize>>>,
}

impl FactorizationRecord {
    pub fn to_factorization(&self) -> Result<HurwitzFactorization> {
        let tuple = self
            .tuple
            .iter()
            .map(|cycles| {
                let zero_based: Vec<Vec<usize>> = cycles
                    .iter()
                    .map(|c| {
                        c.iter()
                            .map(|&x| {
                                x.checked_sub(1)
                                    .ok_or_else(|| Error::Parse("points are 1-based".into()))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_cycles(self.d, &zero_based)
            })
            .collect::<Result<Vec<_>>>()?;
        HurwitzFactorization::new(tuple)
    }
}

pub(crate) fn from_key(key: &[u8], degree: usize) -> HurwitzFactorization {
    HurwitzFactorization {
        tuple: key
            .chunks(degree)
            .map(|c| Permutation::from_bytes_unchecked(c.to_vec()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t: RamificationType = "5:2,2,4,4".parse().unwrap();
        assert_eq!(t.degree(), 5);
        assert_eq!(t.pure_exponents(), Some(vec![2, 2, 4, 4]));
        assert_eq!(t.to_string(), "5:2,2,4,4");
        let t: RamificationType = "7:3-2,4,7".parse().unwrap();
        assert!(!t.is_pure_cycle());
        assert_eq!(t.two_cycle_exponents(), Some((2, 3, 4, 7)));
        assert_eq!(t.to_string(), "7:3-2,4,7");
        assert!("7:".parse::<RamificationType>().is_err());
        assert!("x:2,2,2".parse::<RamificationType>().is_err());
        assert!("3:2,4,2".parse::<RamificationType>().is_err());
        assert!("3:2,2".parse::<RamificationType>().is_err());
        assert!("3:1,2,2".parse::<RamificationType>().is_err());
    }

    #[test]
    fn genus_examples() {
        let g = |s: &str| genus_of_type(&s.parse().unwrap());
        assert_eq!(g("5:3,3,3,3").unwrap(), 0);
        assert_eq!(g("7:2,4,4,6").unwrap(), 0);
        // 2g - 2 = -10 + 12
        assert_eq!(g("5:5,5,5").unwrap(), 2);
        assert_eq!(g("4:3,3,3").unwrap(), 0);
        assert!(matches!(g("5:2,2,2"), Err(Error::InvalidType(_))));
        assert!(matches!(g("9:2,2,4,4"), Err(Error::InvalidType(_))));
    }

    #[test]
    fn genus_zero_message_names_both_sides() {
        let t: RamificationType = "9:2,2,4,4".parse().unwrap();
        let err = t.require_genus_zero().unwrap_err();
        assert_eq!(err.to_string(), "genus condition violated: Σe=12 ≠ 2d-2+r=20");
    }

    #[test]
    fn factorization_validation() {
        let p = |s: &str| Permutation::parse_cycles(s, 3).unwrap();
        let ok = HurwitzFactorization::new(vec![p("(1,2)"), p("(2,3)"), p("(1,2,3)")]);
        // (1,2)(2,3) = (1,2,3) under apply-right-first; times (1,2,3) is not 1
        assert!(ok.is_err());
        let f = HurwitzFactorization::new(vec![p("(1,2)"), p("(2,3)"), p("(1,3,2)")]).unwrap();
        assert!(f.has_type(&"3:2,2,3".parse().unwrap()));
        let intransitive = HurwitzFactorization::new(vec![p("(1,2)"), p("(1,2)"), p("()")]);
        assert!(intransitive.is_err());
    }

    #[test]
    fn json_line_round_trip() {
        let p = |s: &str| Permutation::parse_cycles(s, 3).unwrap();
        let f = HurwitzFactorization::new(vec![p("(1,2)"), p("(2,3)"), p("(1,3,2)")]).unwrap();
        let line = f.to_json_line();
        assert_eq!(line, r#"{"d":3,"tuple":[[[1,2]],[[2,3]],[[1,3,2]]]}"#);
        assert_eq!(HurwitzFactorization::from_json_line(&line).unwrap(), f);
        assert!(HurwitzFactorization::from_json_line(r#"{"d":3,"tuple":[[[0,1]]]}"#).is_err());
    }
}
