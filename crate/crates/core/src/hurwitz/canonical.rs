//! Canonical representatives for tuples up to simultaneous conjugation.
//!
//! For a transitive tuple, relabel points in breadth-first order starting
//! from a chosen point, following generators in slot order. Two tuples are
//! simultaneously conjugate iff the lexicographically least relabeling over
//! all start points agrees.

/// Canonical key of a transitive tuple given as image slices of common
/// degree `d`: the concatenated images of the relabeled permutations.
pub fn canonical_key(tuple: &[&[u8]], degree: usize) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    let mut label = vec![u8::MAX; degree];
    let mut order = Vec::with_capacity(degree);
    let mut key = Vec::with_capacity(degree * tuple.len());
    for start in 0..degree {
        relabel_from(tuple, degree, start, &mut label, &mut order);
        if order.len() < degree {
            // not transitive: fall back to the identity labelling
            return tuple.concat();
        }
        key.clear();
        let mut cmp = std::cmp::Ordering::Equal;
        'build: for g in tuple {
            for &x in &order {
                let v = label[g[x as usize] as usize];
                if cmp == std::cmp::Ordering::Equal {
                    if let Some(b) = &best {
                        cmp = v.cmp(&b[key.len()]);
                        if cmp == std::cmp::Ordering::Greater {
                            break 'build;
                        }
                    }
                }
                key.push(v);
            }
        }
        if best.is_none() || cmp == std::cmp::Ordering::Less {
            best = Some(key.clone());
        }
    }
    best.unwrap_or_default()
}

fn relabel_from(tuple: &[&[u8]], degree: usize, start: usize, label: &mut [u8], order: &mut Vec<u8>) {
    label.fill(u8::MAX);
    order.clear();
    label[start] = 0;
    order.push(start as u8);
    let mut head = 0;
    while head < order.len() {
        let x = order[head] as usize;
        head += 1;
        for g in tuple {
            let y = g[x] as usize;
            if label[y] == u8::MAX {
                label[y] = order.len() as u8;
                order.push(y as u8);
            }
        }
    }
    debug_assert!(order.len() <= degree);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use proptest::prelude::*;

    fn key_of(tuple: &[Permutation]) -> Vec<u8> {
        let s: Vec<&[u8]> = tuple.iter().map(Permutation::images).collect();
        canonical_key(&s, tuple[0].degree())
    }

    fn brute_min_conjugate(tuple: &[Permutation]) -> Vec<u8> {
        let d = tuple[0].degree();
        crate::perm::tests::all_perms(d)
            .iter()
            .map(|h| {
                tuple
                    .iter()
                    .flat_map(|g| g.conjugate_by(h).unwrap().images().to_vec())
                    .collect::<Vec<u8>>()
            })
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()
            .concat()
    }

    fn perm_strategy(d: usize) -> impl Strategy<Value = Permutation> {
        Just((0..d).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    #[test]
    fn equal_keys_iff_conjugate_small_degree() {
        // every pair of 3-cycles/transposition pairs in S4 generating a transitive group
        let all = crate::perm::tests::all_perms(4);
        let pairs: Vec<[Permutation; 2]> = all
            .iter()
            .flat_map(|a| all.iter().map(move |b| [a.clone(), b.clone()]))
            .filter(|t| crate::perm::is_transitive(t))
            .collect();
        for t in pairs.iter().step_by(7) {
            for u in pairs.iter().step_by(11) {
                let same = key_of(t) == key_of(u);
                let conj = brute_min_conjugate(t) == brute_min_conjugate(u);
                assert_eq!(same, conj, "{t:?} vs {u:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn key_is_conjugation_invariant(
            a in perm_strategy(6), b in perm_strategy(6), h in perm_strategy(6)
        ) {
            let t = [a, b];
            prop_assume!(crate::perm::is_transitive(&t));
            let u: Vec<Permutation> = t.iter().map(|g| g.conjugate_by(&h).unwrap()).collect();
            prop_assert_eq!(key_of(&t), key_of(&u));
        }
    }
}
