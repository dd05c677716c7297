//! Brute-force enumeration of Hurwitz factorizations up to simultaneous
//! conjugation.
//!
//! The slot with the largest class is pinned to its canonical representative
//! `c`, the slot with the next largest class is solved from the product
//! relation, and the remaining slots are searched depth first. The first
//! searched slot only runs over representatives of the orbits of the
//! centralizer `Z(c)` acting by conjugation. Survivors are reduced to a
//! canonical form and collected in an ordered set.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::{canonical_key, from_key, HurwitzFactorization, RamificationType};
use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};

/// Bounds for the brute-force enumerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest degree accepted for general types.
    pub max_degree: usize,
    /// Largest degree accepted when every class is a single cycle.
    pub max_degree_pure_cycle: usize,
    /// Upper limit on the estimated number of search leaves.
    pub max_work: u128,
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_degree: 9,
            max_degree_pure_cycle: 11,
            max_work: 4_000_000_000,
            parallel: true,
        }
    }
}

impl EnumConfig {
    /// Defaults overridden by `HURWITZ_MAX_DEGREE`, `HURWITZ_MAX_DEGREE_PURE`
    /// and `HURWITZ_MAX_WORK` when set.
    pub fn from_env() -> Self {
        let mut cfg = EnumConfig::default();
        let read = |k: &str| std::env::var(k).ok().and_then(|v| v.trim().parse::<u128>().ok());
        if let Some(v) = read("HURWITZ_MAX_DEGREE") {
            cfg.max_degree = v as usize;
        }
        if let Some(v) = read("HURWITZ_MAX_DEGREE_PURE") {
            cfg.max_degree_pure_cycle = v as usize;
        }
        if let Some(v) = read("HURWITZ_MAX_WORK") {
            cfg.max_work = v;
        }
        cfg
    }
}

/// All elements of a conjugacy class, stored contiguously.
struct ClassElements {
    degree: usize,
    data: Vec<u8>,
}

impl ClassElements {
    fn generate(t: &CycleType) -> Self {
        let d = t.degree();
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for &l in t.lengths() {
            match counts.last_mut() {
                Some((len, k)) if *len == l => *k += 1,
                _ => counts.push((l, 1)),
            }
        }
        let mut out = ClassElements {
            degree: d,
            data: Vec::with_capacity(t.class_size() as usize * d),
        };
        let mut images = vec![u8::MAX; d];
        fill(&mut images, &mut counts, t.fixed_points(), &mut out.data);
        out
    }

    fn len(&self) -> usize {
        self.data.len() / self.degree
    }

    fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    fn iter(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks(self.degree)
    }
}

/// Assign the lowest unassigned point either as a fixed point or as the
/// smallest entry of a new cycle; every element is produced exactly once.
fn fill(images: &mut [u8], counts: &mut [(usize, usize)], fixed: usize, out: &mut Vec<u8>) {
    let Some(x) = images.iter().position(|&v| v == u8::MAX) else {
        out.extend_from_slice(images);
        return;
    };
    if fixed > 0 {
        images[x] = x as u8;
        fill(images, counts, fixed - 1, out);
        images[x] = u8::MAX;
    }
    for i in 0..counts.len() {
        let (len, k) = counts[i];
        if k == 0 {
            continue;
        }
        counts[i].1 -= 1;
        let mut cycle = vec![x];
        extend_cycle(images, counts, fixed, out, &mut cycle, len);
        counts[i].1 += 1;
    }
}

fn extend_cycle(
    images: &mut [u8],
    counts: &mut [(usize, usize)],
    fixed: usize,
    out: &mut Vec<u8>,
    cycle: &mut Vec<usize>,
    len: usize,
) {
    if cycle.len() == len {
        for w in 0..len {
            images[cycle[w]] = cycle[(w + 1) % len] as u8;
        }
        fill(images, counts, fixed, out);
        for &c in cycle.iter() {
            images[c] = u8::MAX;
        }
        return;
    }
    for y in cycle[0] + 1..images.len() {
        if images[y] == u8::MAX && !cycle.contains(&y) {
            cycle.push(y);
            extend_cycle(images, counts, fixed, out, cycle, len);
            cycle.pop();
        }
    }
}

/// Generators of the centralizer of the canonical representative of `t`.
fn centralizer_generators(t: &CycleType) -> Vec<Permutation> {
    let d = t.degree();
    let mut gens = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &l in t.lengths() {
        blocks.push((next..next + l).collect());
        next += l;
    }
    for b in &blocks {
        gens.push(Permutation::from_cycles(d, std::slice::from_ref(b)).expect("disjoint"));
    }
    for w in blocks.windows(2) {
        if w[0].len() == w[1].len() {
            let swaps: Vec<Vec<usize>> = w[0].iter().zip(&w[1]).map(|(&a, &b)| vec![a, b]).collect();
            gens.push(Permutation::from_cycles(d, &swaps).expect("disjoint"));
        }
    }
    if d - next >= 2 {
        gens.push(Permutation::from_cycles(d, &[vec![next, next + 1]]).expect("disjoint"));
        gens.push(Permutation::from_cycles(d, &[(next..d).collect()]).expect("disjoint"));
    }
    gens
}

/// Indices of one representative per orbit of `Z(c)` on `class`.
fn orbit_representatives(class: &ClassElements, gens: &[Permutation]) -> Vec<usize> {
    let d = class.degree;
    let index: HashMap<&[u8], usize> = class.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut seen = vec![false; class.len()];
    let mut reps = Vec::new();
    let mut buf = vec![0u8; d];
    for start in 0..class.len() {
        if seen[start] {
            continue;
        }
        reps.push(start);
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let g = class.get(i);
            for h in gens {
                // h g h^-1 maps h(x) to h(g(x))
                let hi = h.images();
                for x in 0..d {
                    buf[hi[x] as usize] = hi[g[x] as usize];
                }
                let j = index[buf.as_slice()];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    reps
}

struct Plan {
    degree: usize,
    slots: usize,
    fixed_slot: usize,
    fixed: Vec<u8>,
    solved_slot: usize,
    solved_type: Vec<usize>,
    split_slot: usize,
    /// slot order for the product `g_{s+1} * .. * g_{s-1}`
    seq: Vec<usize>,
    classes: Vec<Option<ClassElements>>,
}

impl Plan {
    fn build(t: &RamificationType, cfg: &EnumConfig) -> Result<(Plan, Vec<usize>)> {
        let d = t.degree();
        let r = t.len();
        let sizes: Vec<u128> = t.classes().iter().map(CycleType::class_size).collect();
        let mut by_size: Vec<usize> = (0..r).collect();
        by_size.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
        let fixed_slot = by_size[0];
        let solved_slot = by_size[1];
        let split_slot = by_size[2];

        let fixed_type = &t.classes()[fixed_slot];
        let zc = fixed_type.centralizer_order();
        let mut work = sizes[split_slot].div_ceil(zc).max(1);
        for &s in &by_size[3..] {
            work = work.saturating_mul(sizes[s]);
        }
        if work > cfg.max_work {
            return Err(Error::ResourceGuard(format!(
                "search for {t} needs about {work} leaves (limit {})",
                cfg.max_work
            )));
        }

        let classes = (0..r)
            .map(|i| (i != fixed_slot && i != solved_slot).then(|| ClassElements::generate(&t.classes()[i])))
            .collect::<Vec<_>>();
        let reps = orbit_representatives(
            classes[split_slot].as_ref().expect("split slot is searched"),
            &centralizer_generators(fixed_type),
        );
        let seq = (1..r).map(|k| (solved_slot + k) % r).collect();
        let mut solved_type = t.classes()[solved_slot].lengths().to_vec();
        solved_type.sort_unstable();
        Ok((
            Plan {
                degree: d,
                slots: r,
                fixed_slot,
                fixed: fixed_type.canonical_representative().images().to_vec(),
                solved_slot,
                solved_type,
                split_slot,
                seq,
                classes,
            },
            reps,
        ))
    }

    fn run(&self, split_choice: usize) -> BTreeSet<Vec<u8>> {
        let d = self.degree;
        let mut found = BTreeSet::new();
        let mut prefix = vec![vec![0u8; d]; self.seq.len() + 1];
        prefix[0] = (0..d as u8).collect();
        let mut chosen: Vec<&[u8]> = vec![&[]; self.slots];
        self.descend(0, split_choice, &mut prefix, &mut chosen, &mut found);
        found
    }

    fn descend<'a>(
        &'a self,
        k: usize,
        split_choice: usize,
        prefix: &mut Vec<Vec<u8>>,
        chosen: &mut Vec<&'a [u8]>,
        found: &mut BTreeSet<Vec<u8>>,
    ) {
        if k == self.seq.len() {
            self.leaf(&prefix[k], chosen, found);
            return;
        }
        let slot = self.seq[k];
        let candidates: Box<dyn Iterator<Item = &'a [u8]>> = if slot == self.fixed_slot {
            Box::new(std::iter::once(self.fixed.as_slice()))
        } else if slot == self.split_slot {
            let class = self.classes[slot].as_ref().expect("searched");
            Box::new(std::iter::once(class.get(split_choice)))
        } else {
            Box::new(self.classes[slot].as_ref().expect("searched").iter())
        };
        for g in candidates {
            let (lo, hi) = prefix.split_at_mut(k + 1);
            let (p, next) = (&lo[k], &mut hi[0]);
            // next = p * g, apply g first
            for x in 0..self.degree {
                next[x] = p[g[x] as usize];
            }
            chosen[slot] = g;
            self.descend(k + 1, split_choice, prefix, chosen, found);
        }
    }

    fn leaf(&self, product: &[u8], chosen: &[&[u8]], found: &mut BTreeSet<Vec<u8>>) {
        let d = self.degree;
        let fixed_target = d - self.solved_type.iter().sum::<usize>();
        if product.iter().enumerate().filter(|&(i, &v)| i == v as usize).count() != fixed_target {
            return;
        }
        let mut seen = [false; 256];
        let mut lengths = Vec::with_capacity(self.solved_type.len());
        for s in 0..d {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = product[x] as usize;
                len += 1;
            }
            if len > 1 {
                lengths.push(len);
            }
        }
        lengths.sort_unstable();
        if lengths != self.solved_type {
            return;
        }
        let mut solved = vec![0u8; d];
        for (x, &y) in product.iter().enumerate() {
            solved[y as usize] = x as u8;
        }
        let mut full = chosen.to_vec();
        full[self.solved_slot] = &solved;
        if !transitive(&full, d) {
            return;
        }
        found.insert(canonical_key(&full, d));
    }
}

fn transitive(tuple: &[&[u8]], d: usize) -> bool {
    let mut seen = [false; 256];
    let mut stack = [0u8; 256];
    let mut top = 1;
    seen[0] = true;
    let mut count = 1;
    while top > 0 {
        top -= 1;
        let x = stack[top] as usize;
        for g in tuple {
            let y = g[x] as usize;
            if !seen[y] {
                seen[y] = true;
                stack[top] = y as u8;
                top += 1;
                count += 1;
            }
        }
    }
    count == d
}

/// All genus-0 factorizations of type `t` up to simultaneous conjugation,
/// in canonical order, with bounds from the environment.
pub fn enumerate_factorizations(t: &RamificationType) -> Result<Vec<HurwitzFactorization>> {
    enumerate_factorizations_with(t, &EnumConfig::from_env())
}

pub fn enumerate_factorizations_with(
    t: &RamificationType,
    cfg: &EnumConfig,
) -> Result<Vec<HurwitzFactorization>> {
    t.require_genus_zero()?;
    let bound = if t.is_pure_cycle() {
        cfg.max_degree_pure_cycle
    } else {
        cfg.max_degree
    };
    if t.degree() > bound {
        return Err(Error::BoundExceeded {
            degree: t.degree(),
            bound,
        });
    }
    let (plan, reps) = Plan::build(t, cfg)?;
    let keys = if cfg.parallel {
        reps.par_iter()
            .map(|&rep| plan.run(rep))
            .reduce(BTreeSet::new, |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.extend(b);
                a
            })
    } else {
        reps.iter().fold(BTreeSet::new(), |mut acc, &rep| {
            acc.extend(plan.run(rep));
            acc
        })
    };
    Ok(keys
        .into_iter()
        .map(|k| from_key(&k, t.degree()))
        .collect())
}

/// Number of inequivalent factorizations of genus-0 type `t`.
pub fn hurwitz_number_brute(t: &RamificationType) -> Result<u64> {
    hurwitz_number_brute_with(t, &EnumConfig::from_env())
}

pub fn hurwitz_number_brute_with(t: &RamificationType, cfg: &EnumConfig) -> Result<u64> {
    Ok(enumerate_factorizations_with(t, cfg)?.len() as u64)
}
