use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{factorial, CycleType, Permutation};
use crate::error::{Error, Result};

/// Default cap on group orders accepted by [`group_analyze`].
pub const DEFAULT_ORDER_CAP: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Symmetric,
    Alternating,
    Other(u128),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub degree: usize,
    pub order: u128,
    pub is_transitive: bool,
    pub classification: Classification,
}

/// Base and strong generating set, with base `b_0, b_1, ..` and one
/// transversal per level (`transversals[i][y]` maps `b_i` to `y`).
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    base: Vec<usize>,
    strong_generators: Vec<Permutation>,
    transversals: Vec<Vec<Option<Permutation>>>,
}

impl StabilizerChain {
    /// Deterministic Schreier-Sims.
    pub fn new(generators: &[Permutation]) -> Result<Self> {
        let degree = check_generators(generators)?;
        let mut chain = StabilizerChain {
            degree,
            base: Vec::new(),
            strong_generators: Vec::new(),
            transversals: Vec::new(),
        };
        for g in generators.iter().filter(|g| !g.is_identity()) {
            if chain.strong_generators.contains(g) {
                continue;
            }
            if chain.base.iter().all(|&b| g.apply(b) == b) {
                let moved = g.first_moved_point().expect("non-identity");
                chain.base.push(moved);
            }
            chain.strong_generators.push(g.clone());
        }
        chain.transversals = vec![Vec::new(); chain.base.len()];
        chain.complete();
        Ok(chain)
    }

    fn level_generators(&self, level: usize) -> Vec<&Permutation> {
        let fixed = &self.base[..level];
        self.strong_generators
            .iter()
            .filter(|s| fixed.iter().all(|&b| s.apply(b) == b))
            .collect()
    }

    fn build_transversal(&self, level: usize) -> Vec<Option<Permutation>> {
        let gens = self.level_generators(level);
        let b = self.base[level];
        let mut trans: Vec<Option<Permutation>> = vec![None; self.degree];
        trans[b] = Some(Permutation::identity(self.degree));
        let mut queue = vec![b];
        let mut head = 0;
        while head < queue.len() {
            let y = queue[head];
            head += 1;
            let u = trans[y].clone().expect("orbit point has a transversal");
            for s in &gens {
                let z = s.apply(y);
                if trans[z].is_none() {
                    trans[z] = Some(s.compose_unchecked(&u));
                    queue.push(z);
                }
            }
        }
        trans
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`base.len()` if it went all the way through).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for level in from..self.base.len() {
            let y = g.apply(self.base[level]);
            match &self.transversals[level][y] {
                Some(u) => g = u.inverse().compose_unchecked(&g),
                None => return (g, level),
            }
        }
        (g, self.base.len())
    }

    fn complete(&mut self) {
        if self.base.is_empty() {
            return;
        }
        let mut level = self.base.len() as isize - 1;
        while level >= 0 {
            let i = level as usize;
            self.transversals[i] = self.build_transversal(i);
            let gens: Vec<Permutation> =
                self.level_generators(i).into_iter().cloned().collect();
            let orbit: Vec<usize> = (0..self.degree)
                .filter(|&y| self.transversals[i][y].is_some())
                .collect();
            let mut restart = None;
            'schreier: for &y in &orbit {
                let u_y = self.transversals[i][y].clone().expect("orbit point");
                for s in &gens {
                    let z = s.apply(y);
                    let u_z = self.transversals[i][z].as_ref().expect("orbit is closed");
                    let schreier = u_z.inverse().compose_unchecked(&s.compose_unchecked(&u_y));
                    let (residue, stop) = self.strip(schreier, i + 1);
                    if !residue.is_identity() {
                        if stop == self.base.len() {
                            let moved = residue.first_moved_point().expect("non-identity");
                            self.base.push(moved);
                            self.transversals.push(Vec::new());
                        }
                        self.strong_generators.push(residue);
                        restart = Some(stop);
                        break 'schreier;
                    }
                }
            }
            match restart {
                // levels deeper than `stop` are unaffected by the new generator
                Some(stop) => level = stop as isize,
                None => level -= 1,
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    pub fn order(&self) -> u128 {
        self.transversals
            .iter()
            .map(|t| t.iter().filter(|u| u.is_some()).count() as u128)
            .product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g.clone(), 0).0.is_identity()
    }

    /// Visits every group element exactly once as a product of transversal
    /// elements `u_0 * u_1 * .. * u_k`.
    pub fn for_each_element(&self, mut visit: impl FnMut(&Permutation)) {
        let levels: Vec<Vec<&Permutation>> = self
            .transversals
            .iter()
            .map(|t| t.iter().flatten().collect())
            .collect();
        let mut stack = vec![Permutation::identity(self.degree)];
        fn rec(
            levels: &[Vec<&Permutation>],
            depth: usize,
            stack: &mut Vec<Permutation>,
            visit: &mut dyn FnMut(&Permutation),
        ) {
            if depth == levels.len() {
                visit(stack.last().expect("non-empty"));
                return;
            }
            for u in &levels[depth] {
                let next = stack[depth].compose_unchecked(u);
                stack.push(next);
                rec(levels, depth + 1, stack, visit);
                stack.pop();
            }
        }
        rec(&levels, 0, &mut stack, &mut visit);
    }
}

fn check_generators(generators: &[Permutation]) -> Result<usize> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Precondition("generator list is empty".into()))?;
    let d = first.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != d) {
        return Err(Error::DegreeMismatch(d, g.degree()));
    }
    Ok(d)
}

/// Orbit of `point` under the group generated by `generators`, in BFS order.
pub fn orbit(generators: &[Permutation], point: usize) -> Vec<usize> {
    let Some(d) = generators.first().map(Permutation::degree) else {
        return vec![point];
    };
    let mut seen = vec![false; d];
    seen[point] = true;
    let mut out = vec![point];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for g in generators {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
    }
    out
}

pub fn is_transitive(generators: &[Permutation]) -> bool {
    match generators.first() {
        None => false,
        Some(g) => orbit(generators, 0).len() == g.degree(),
    }
}

pub fn group_analyze(generators: &[Permutation]) -> Result<GroupReport> {
    group_analyze_with_cap(generators, DEFAULT_ORDER_CAP)
}

/// Exact order via a stabilizer chain, transitivity via the orbit of 0,
/// and classification by comparing the order with `d!` and `d!/2`.
pub fn group_analyze_with_cap(generators: &[Permutation], order_cap: u128) -> Result<GroupReport> {
    let chain = StabilizerChain::new(generators)?;
    let order = chain.order();
    if order > order_cap {
        return Err(Error::ResourceGuard(format!(
            "group order {order} exceeds cap {order_cap}"
        )));
    }
    let d = chain.degree();
    let full = factorial(d);
    let classification = if order == full {
        Classification::Symmetric
    } else if d >= 2 && order * 2 == full {
        Classification::Alternating
    } else {
        Classification::Other(order)
    };
    Ok(GroupReport {
        degree: d,
        order,
        is_transitive: is_transitive(generators),
        classification,
    })
}

/// Exact census of cycle types over all elements; fails if the group
/// order exceeds `cap`.
pub fn cycle_type_census(generators: &[Permutation], cap: u128) -> Result<BTreeMap<CycleType, u64>> {
    let chain = StabilizerChain::new(generators)?;
    let order = chain.order();
    if order > cap {
        return Err(Error::ResourceGuard(format!(
            "group order {order} exceeds census cap {cap}"
        )));
    }
    let mut census = BTreeMap::new();
    chain.for_each_element(|g| *census.entry(g.cycle_type()).or_insert(0) += 1);
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse_cycles(s, d).unwrap()
    }

    /// Exhaustive closure: the test oracle for group orders.
    fn closure_order(gens: &[Permutation]) -> usize {
        let d = gens[0].degree();
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = vec![Permutation::identity(d)];
        seen.insert(queue[0].clone());
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = g * &x;
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn s5_from_transposition_and_five_cycle() {
        let r = group_analyze(&[p("(1,2)", 5), p("(1,2,3,4,5)", 5)]).unwrap();
        assert_eq!(r.order, 120);
        assert_eq!(r.classification, Classification::Symmetric);
        assert!(r.is_transitive);
    }

    #[test]
    fn a5_from_two_three_cycles() {
        let gens = [p("(1,2,3)", 5), p("(3,4,5)", 5)];
        assert_eq!(closure_order(&gens), 60);
        let r = group_analyze(&gens).unwrap();
        assert_eq!(r.order, 60);
        assert_eq!(r.classification, Classification::Alternating);
    }

    #[test]
    fn intransitive_group() {
        let r = group_analyze(&[p("(1,2)", 4), p("(3,4)", 4)]).unwrap();
        assert_eq!(r.order, 4);
        assert!(!r.is_transitive);
        assert_eq!(r.classification, Classification::Other(4));
    }

    #[test]
    fn trivial_group() {
        let r = group_analyze(&[Permutation::identity(3)]).unwrap();
        assert_eq!(r.order, 1);
    }

    #[test]
    fn order_cap_is_enforced() {
        let gens = [p("(1,2)", 9), p("(1,2,3,4,5,6,7,8,9)", 9)];
        assert!(matches!(
            group_analyze_with_cap(&gens, 1000),
            Err(Error::ResourceGuard(_))
        ));
        assert!(group_analyze(&[]).is_err());
        assert!(group_analyze(&[p("(1,2)", 3), p("(1,2)", 4)]).is_err());
    }

    #[test]
    fn census_of_s3() {
        let census = cycle_type_census(&[p("(1,2)", 3), p("(1,2,3)", 3)], 1000).unwrap();
        let as_vec: Vec<(String, u64)> =
            census.iter().map(|(t, n)| (t.to_string(), *n)).collect();
        assert_eq!(
            as_vec,
            vec![("1".to_string(), 1), ("2".to_string(), 3), ("3".to_string(), 2)]
        );
        assert!(cycle_type_census(&[p("(1,2)", 3), p("(1,2,3)", 3)], 5).is_err());
    }

    #[test]
    fn chain_elements_are_distinct_and_complete() {
        let gens = [p("(1,2,3,4)", 6), p("(1,5)(2,6)", 6)];
        let chain = StabilizerChain::new(&gens).unwrap();
        let mut seen = HashSet::new();
        chain.for_each_element(|g| {
            assert!(seen.insert(g.clone()));
        });
        assert_eq!(seen.len() as u128, chain.order());
        assert_eq!(seen.len(), closure_order(&gens));
        for g in &seen {
            assert!(chain.contains(g));
        }
    }

    #[test]
    fn order_matches_closure_on_assorted_groups() {
        let cases: Vec<Vec<Permutation>> = vec![
            vec![p("(1,2,3,4,5,6,7)", 7), p("(2,3,5)(4,7,6)", 7)],
            vec![p("(1,2,3,4,5,6)", 6), p("(1,6)(2,5)(3,4)", 6)],
            vec![p("(1,2)(3,4)", 8), p("(5,6,7,8)", 8), p("(1,5)", 8)],
            vec![p("(1,2,3)", 7), p("(4,5,6,7)", 7)],
        ];
        for gens in cases {
            let chain = StabilizerChain::new(&gens).unwrap();
            assert_eq!(chain.order() as usize, closure_order(&gens), "{gens:?}");
        }
    }
}
