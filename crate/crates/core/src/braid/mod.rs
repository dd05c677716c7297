//! The braid operator `Q3` on 4-tuples, its orbits on Hurwitz classes, the
//! degeneration `λ → ∞` to pairs of three-point covers, and the
//! characteristic-0 taxonomy of admissible covers for pure-cycle 4-types.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hurwitz::{
    enumerate_factorizations_with, hurwitz_formula_pure4, tuple_product, EnumConfig,
    HurwitzFactorization, RamificationType,
};
use crate::perm::Permutation;

/// Monodromy over the node: a single `m`-cycle (`m = 1` for the identity)
/// or a product of two disjoint cycles of lengths `e1 <= e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NodeClass {
    SingleCycle(usize),
    TwoCycle(usize, usize),
}

impl NodeClass {
    /// Multiplicity of an admissible cover with this node: `m` for a single
    /// cycle, 1 otherwise.
    pub fn multiplicity(self) -> usize {
        match self {
            NodeClass::SingleCycle(m) => m,
            NodeClass::TwoCycle(..) => 1,
        }
    }
}

impl fmt::Display for NodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeClass::SingleCycle(m) => write!(f, "m={m}"),
            NodeClass::TwoCycle(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

/// `Q3 · (g1, g2, g3, g4) = (g1 g2 g1 g2^-1 g1^-1, g1 g2 g1^-1, g3, g4)`.
pub fn braid_q3(f: &HurwitzFactorization) -> Result<HurwitzFactorization> {
    let t = f.tuple();
    if t.len() != 4 {
        return Err(Error::Precondition(format!("braid operator needs r = 4, got {}", t.len())));
    }
    let (g1, g2) = (&t[0], &t[1]);
    let g1_inv = g1.inverse();
    let g1g2 = g1 * g2;
    let new1 = &(&(&g1g2 * g1) * &g2.inverse()) * &g1_inv;
    let new2 = &g1g2 * &g1_inv;
    Ok(HurwitzFactorization::from_parts_unchecked(vec![
        new1,
        new2,
        t[2].clone(),
        t[3].clone(),
    ]))
}

/// One `Q3`-orbit on the simultaneous-conjugacy classes of a type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidOrbit {
    /// Canonically least member of the orbit.
    pub representative: HurwitzFactorization,
    pub length: usize,
    pub node: NodeClass,
}

/// Partition the factorizations of a 4-point type into `Q3`-orbits, ordered
/// by representative.
pub fn braid_orbits(t: &RamificationType) -> Result<Vec<BraidOrbit>> {
    braid_orbits_with(t, &EnumConfig::from_env())
}

pub fn braid_orbits_with(t: &RamificationType, cfg: &EnumConfig) -> Result<Vec<BraidOrbit>> {
    if t.len() != 4 {
        return Err(Error::Precondition(format!("braid orbits need r = 4, got {}", t.len())));
    }
    let classes = enumerate_factorizations_with(t, cfg)?;
    let cap = classes.len();
    let members: BTreeSet<Vec<u8>> = classes.iter().map(|f| f.canonical_key()).collect();
    // the successor of each class under Q3, as canonical keys
    let next: Vec<Vec<u8>> = classes
        .par_iter()
        .map(|f| braid_q3(f).map(|g| g.canonical_key()))
        .collect::<Result<_>>()?;
    let index: BTreeMap<&[u8], usize> = members.iter().enumerate().map(|(i, k)| (k.as_slice(), i)).collect();
    let succ: Vec<usize> = next
        .iter()
        .map(|k| {
            index.get(k.as_slice()).copied().ok_or_else(|| {
                Error::Precondition("braid image left the set of enumerated classes".into())
            })
        })
        .collect::<Result<_>>()?;
    let mut seen = vec![false; cap];
    let mut orbits = Vec::new();
    for start in 0..cap {
        if seen[start] {
            continue;
        }
        let mut length = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            length += 1;
            i = succ[i];
            if length > cap {
                return Err(Error::Precondition("braid orbit exceeds the class count".into()));
            }
        }
        if i != start {
            return Err(Error::Precondition("braid operator is not a bijection on classes".into()));
        }
        let representative = classes[start].clone();
        let node = degenerate(&representative)?.node;
        orbits.push(BraidOrbit {
            representative,
            length,
            node,
        });
    }
    Ok(orbits)
}

/// The two three-point covers over the components of the degenerate base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneration {
    /// `(g1, g2, ρ)`
    pub upper: [Permutation; 3],
    /// `(ρ^-1, g3, g4)`
    pub lower: [Permutation; 3],
    pub node: NodeClass,
}

/// Degenerate along `λ → ∞`: `ρ = g3 g4`.
pub fn degenerate(f: &HurwitzFactorization) -> Result<Degeneration> {
    degenerate_tuple(f.tuple())
}

/// As [`degenerate`], for any 4-tuple with product identity (transitivity
/// is not required).
pub fn degenerate_tuple(tuple: &[Permutation]) -> Result<Degeneration> {
    if tuple.len() != 4 {
        return Err(Error::Precondition(format!("degeneration needs r = 4, got {}", tuple.len())));
    }
    if !tuple_product(tuple)?.is_identity() {
        return Err(Error::Precondition("tuple product is not the identity".into()));
    }
    let rho = tuple[2].compose(&tuple[3])?;
    let lengths = rho.cycle_type().lengths().to_vec();
    let node = match lengths.as_slice() {
        [] => NodeClass::SingleCycle(1),
        [m] => NodeClass::SingleCycle(*m),
        [a, b] => NodeClass::TwoCycle(*b, *a),
        _ => {
            return Err(Error::Precondition(format!(
                "node monodromy {rho} is neither a single cycle nor a pair of cycles"
            )))
        }
    };
    let rho_inv = rho.inverse();
    Ok(Degeneration {
        upper: [tuple[0].clone(), tuple[1].clone(), rho],
        lower: [rho_inv, tuple[2].clone(), tuple[3].clone()],
        node,
    })
}

/// One row of the admissible-cover taxonomy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleCoverType {
    pub degree: usize,
    /// Exponents sorted ascending.
    pub exponents: [usize; 4],
    pub node: NodeClass,
    /// Number of distinct admissible covers with this node.
    pub count: u64,
    /// Smoothings per cover.
    pub multiplicity: u64,
}

impl AdmissibleCoverType {
    pub fn subtotal(&self) -> u64 {
        self.count * self.multiplicity
    }
}

/// Which of the two regimes of the taxonomy a sorted type falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Regime {
    /// `d + 1 <= e2 + e3`
    Small,
    /// `d + 1 >= e2 + e3`
    Large,
}

/// Sorted exponents after validating the genus-0 condition.
pub(crate) fn sorted_pure4(d: usize, e: [usize; 4]) -> Result<[usize; 4]> {
    hurwitz_formula_pure4(d, e)?;
    let mut s = e;
    s.sort_unstable();
    Ok(s)
}

/// Admissible single-cycle node lengths `m` and the number of covers with
/// the two-cycle node `e1-e2`, for a regime.
pub(crate) fn regime_data(d: usize, e: [usize; 4], regime: Regime) -> (Vec<usize>, u64) {
    let [e1, e2, e3, e4] = e;
    let hi = 2 * d + 1 - e3 - e4;
    let (lo, count) = match regime {
        Regime::Small => (e2 - e1 + 1, e1 * (d + 1 - e1 - e2)),
        Regime::Large => (e4 - e3 + 1, (e3 + e4 - d - 1) * (d + 1 - e4)),
    };
    ((lo..=hi).step_by(2).collect(), count as u64)
}

/// Regime of a sorted type; on the boundary `d + 1 = e2 + e3` both apply.
pub(crate) fn regime(d: usize, e: [usize; 4]) -> Regime {
    if d < e[1] + e[2] {
        Regime::Small
    } else {
        Regime::Large
    }
}

/// The characteristic-0 admissible covers of `(d; e1, .., e4)` degenerating
/// along `λ → ∞`: one row per single-cycle node `m` and one row for the
/// two-cycle node.
pub fn admissible_enumerate_char0(d: usize, e: [usize; 4]) -> Result<Vec<AdmissibleCoverType>> {
    let s = sorted_pure4(d, e)?;
    let [e1, e2, e3, _] = s;
    let (ms, count) = regime_data(d, s, regime(d, s));
    if d + 1 == e2 + e3 {
        let other = regime_data(d, s, Regime::Large);
        assert_eq!((&ms, count), (&other.0, other.1), "regimes disagree at the boundary");
    }
    let mut rows: Vec<AdmissibleCoverType> = ms
        .into_iter()
        .map(|m| AdmissibleCoverType {
            degree: d,
            exponents: s,
            node: NodeClass::SingleCycle(m),
            count: 1,
            multiplicity: m as u64,
        })
        .collect();
    if count > 0 {
        rows.push(AdmissibleCoverType {
            degree: d,
            exponents: s,
            node: NodeClass::TwoCycle(e1, e2),
            count,
            multiplicity: 1,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorizations(s: &str) -> Vec<HurwitzFactorization> {
        enumerate_factorizations_with(&s.parse().unwrap(), &EnumConfig::default()).unwrap()
    }

    #[test]
    fn disjoint_pair_is_fixed() {
        let p = |s: &str| Permutation::parse_cycles(s, 4).unwrap();
        let (g1, g2, g3) = (p("(1,2)"), p("(3,4)"), p("(2,3)"));
        let g4 = (&(&g1 * &g2) * &g3).inverse();
        let f = HurwitzFactorization::new(vec![g1, g2, g3, g4]).unwrap();
        assert_eq!(braid_q3(&f).unwrap(), f);
    }

    #[test]
    fn q3_preserves_type_and_product() {
        let t: RamificationType = "5:2,2,4,4".parse().unwrap();
        for f in factorizations("5:2,2,4,4") {
            let g = braid_q3(&f).unwrap();
            assert!(g.has_type(&t));
            assert!(HurwitzFactorization::new(g.tuple().to_vec()).is_ok());
            assert_eq!(&g.tuple()[0] * &g.tuple()[1], &f.tuple()[0] * &f.tuple()[1]);
        }
    }

    #[test]
    fn q3_rejects_other_lengths() {
        let f = &factorizations("4:3,3,3")[0];
        assert!(braid_q3(f).is_err());
    }

    #[test]
    fn three_cycle_node_returns_after_three_steps() {
        let f = factorizations("5:2,2,4,4")
            .into_iter()
            .find(|f| degenerate(f).unwrap().node == NodeClass::SingleCycle(3))
            .unwrap();
        let mut g = f.clone();
        for step in 1..=3 {
            g = braid_q3(&g).unwrap();
            assert_eq!(g.is_equivalent(&f), step == 3);
        }
    }

    #[test]
    fn orbit_lengths_for_small_types() {
        let orbits = braid_orbits_with(&"5:2,2,4,4".parse().unwrap(), &EnumConfig::default()).unwrap();
        let mut lengths: Vec<usize> = orbits.iter().map(|o| o.length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![1, 1, 1, 1, 1, 3]);
        let orbits = braid_orbits_with(&"7:2,4,4,6".parse().unwrap(), &EnumConfig::default()).unwrap();
        assert_eq!(orbits.iter().map(|o| o.length).sum::<usize>(), 12);
    }

    #[test]
    fn node_classes_of_examples() {
        let nodes = |s: &str| -> BTreeSet<NodeClass> {
            factorizations(s).iter().map(|f| degenerate(f).unwrap().node).collect()
        };
        assert_eq!(
            nodes("5:2,2,4,4"),
            [NodeClass::SingleCycle(1), NodeClass::SingleCycle(3), NodeClass::TwoCycle(2, 2)].into()
        );
        assert_eq!(
            nodes("7:2,4,4,6"),
            [NodeClass::SingleCycle(3), NodeClass::SingleCycle(5), NodeClass::TwoCycle(2, 4)].into()
        );
    }

    #[test]
    fn degenerate_components_have_product_identity() {
        for f in factorizations("6:3,3,4,4") {
            let dg = degenerate(&f).unwrap();
            assert!(tuple_product(&dg.upper).unwrap().is_identity());
            assert!(tuple_product(&dg.lower).unwrap().is_identity());
        }
    }

    #[test]
    fn degenerate_rejects_three_cycle_node() {
        let p = |s: &str| Permutation::parse_cycles(s, 6).unwrap();
        let rho = p("(1,2)(3,4)(5,6)");
        let tuple = vec![rho.clone(), p("()"), rho.clone(), p("()")];
        assert!(matches!(degenerate_tuple(&tuple), Err(Error::Precondition(_))));
    }

    #[test]
    fn taxonomy_examples() {
        let summary = |d, e| -> Vec<(NodeClass, u64, u64)> {
            admissible_enumerate_char0(d, e)
                .unwrap()
                .iter()
                .map(|r| (r.node, r.count, r.multiplicity))
                .collect()
        };
        use NodeClass::*;
        assert_eq!(
            summary(5, [2, 2, 4, 4]),
            vec![(SingleCycle(1), 1, 1), (SingleCycle(3), 1, 3), (TwoCycle(2, 2), 4, 1)]
        );
        assert_eq!(
            summary(7, [6, 4, 4, 2]),
            vec![(SingleCycle(3), 1, 3), (SingleCycle(5), 1, 5), (TwoCycle(2, 4), 4, 1)]
        );
        let rows = admissible_enumerate_char0(7, [3, 3, 5, 5]).unwrap();
        assert_eq!(rows.iter().map(AdmissibleCoverType::subtotal).sum::<u64>(), 15);
        assert_eq!(rows.len(), 4);
        assert_eq!(
            summary(7, [2, 3, 4, 7]),
            vec![(SingleCycle(4), 1, 4), (TwoCycle(2, 3), 3, 1)]
        );
        assert!(admissible_enumerate_char0(9, [2, 2, 4, 4]).is_err());
    }
}
