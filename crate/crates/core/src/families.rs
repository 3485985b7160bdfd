//! Standard finite inverse semigroups with fixed element numbering.
//!
//! Semigroups of partial bijections are numbered by rank, then idempotents
//! before non-idempotents, then by graph (the sorted list of pairs `(x, f(x))`).
//! Composition is right to left: `(f·g)(x) = f(g(x))`. For the symmetric
//! inverse monoid on `{1,2}` this gives
//!
//! | id | element    |
//! |----|------------|
//! | 0  | ∅          |
//! | 1  | {1→1}      |
//! | 2  | {2→2}      |
//! | 3  | {1→2}      |
//! | 4  | {2→1}      |
//! | 5  | identity   |
//! | 6  | transposition |

use std::collections::HashMap;

use crate::semigroup::InvSemigroup;

/// A partial map on `0..n`; `None` means undefined.
pub type PartialMap = Vec<Option<usize>>;

pub fn trivial() -> InvSemigroup {
    InvSemigroup::from_table(1, vec![0]).unwrap()
}

/// `{0 < 1 < … < k-1}` under `min`.
pub fn chain(k: usize) -> InvSemigroup {
    InvSemigroup::from_fn(k, |a, b| a.min(b)).unwrap()
}

/// A zero and `k` pairwise orthogonal idempotents `1..=k`.
pub fn antichain_with_zero(k: usize) -> InvSemigroup {
    InvSemigroup::from_fn(k + 1, |a, b| if a == b { a } else { 0 }).unwrap()
}

/// Subsets of an `n`-set under intersection; subset ids are bitmasks.
pub fn powerset(n: usize) -> InvSemigroup {
    InvSemigroup::from_fn(1 << n, |a, b| a & b).unwrap()
}

/// `Z_n` written additively.
pub fn cyclic_group(n: usize) -> InvSemigroup {
    InvSemigroup::from_fn(n, |a, b| (a + b) % n).unwrap()
}

/// `G⁰`: id 0 is the zero, `g` becomes `g + 1`.
pub fn zero_group(group: &InvSemigroup) -> InvSemigroup {
    group.adjoin_zero()
}

/// The Brandt semigroup `B_n`: zero, then idempotents `(i,i)` with ids
/// `1..=n`, then `(i,j)` for `i ≠ j` in lexicographic order.
/// `(i,j)(k,l) = (i,l)` when `j = k` and `0` otherwise.
pub fn brandt(n: usize) -> InvSemigroup {
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k + 1)).collect();
    InvSemigroup::from_fn(pairs.len() + 1, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        let (i, j) = pairs[a - 1];
        let (k, l) = pairs[b - 1];
        if j == k {
            index[&(i, l)]
        } else {
            0
        }
    })
    .unwrap()
}

/// The symmetric inverse monoid `𝒥_n` of all partial bijections of an
/// `n`-set.
pub fn symmetric_inverse_monoid(n: usize) -> InvSemigroup {
    monoid_of_maps(n, partial_bijections(n)).0
}

/// The symmetric group on `n` points.
pub fn symmetric_group(n: usize) -> InvSemigroup {
    let perms = partial_bijections(n)
        .into_iter()
        .filter(|f| f.iter().all(Option::is_some))
        .collect();
    monoid_of_maps(n, perms).0
}

/// `M_n(G⁰)` built without matrices: partial bijections of `n × G` that
/// commute with the right translation action of `G`. Points `(x, g)` are
/// numbered `x * |G| + g`.
pub fn equivariant_partial_bijections(n: usize, group: &InvSemigroup) -> InvSemigroup {
    let order = group.size();
    let points = n * order;
    let maps: Vec<PartialMap> = partial_bijections(points)
        .into_iter()
        .filter(|f| {
            (0..points).all(|p| {
                (0..order).all(|h| {
                    let ph = (p / order) * order + group.mul(p % order, h);
                    f[ph] == f[p].map(|q| (q / order) * order + group.mul(q % order, h))
                })
            })
        })
        .collect();
    monoid_of_maps(points, maps).0
}

/// All partial bijections of `0..n`.
pub fn partial_bijections(n: usize) -> Vec<PartialMap> {
    fn extend(n: usize, x: usize, used: &mut Vec<bool>, cur: &mut PartialMap, out: &mut Vec<PartialMap>) {
        if x == n {
            out.push(cur.clone());
            return;
        }
        cur.push(None);
        extend(n, x + 1, used, cur, out);
        cur.pop();
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                cur.push(Some(y));
                extend(n, x + 1, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// `(f·g)(x) = f(g(x))`.
pub fn compose(f: &PartialMap, g: &PartialMap) -> PartialMap {
    g.iter().map(|&y| y.and_then(|y| f[y])).collect()
}

/// Tabulates a composition-closed set of partial bijections of `0..n`,
/// numbered as described in the module docs. Returns the semigroup and the
/// map behind each id.
pub fn monoid_of_maps(n: usize, mut maps: Vec<PartialMap>) -> (InvSemigroup, Vec<PartialMap>) {
    let key = |f: &PartialMap| {
        let graph: Vec<(usize, usize)> = (0..n).filter_map(|x| f[x].map(|y| (x, y))).collect();
        let idempotent = graph.iter().all(|&(x, y)| x == y);
        (graph.len(), !idempotent, graph)
    };
    maps.sort_by_key(key);
    maps.dedup();
    let index: HashMap<&PartialMap, usize> = maps.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let s = InvSemigroup::from_fn(maps.len(), |a, b| index[&compose(&maps[a], &maps[b])])
        .expect("partial bijections closed under composition form an inverse semigroup");
    (s, maps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(symmetric_inverse_monoid(2).size(), 7);
        assert_eq!(symmetric_inverse_monoid(3).size(), 34);
        assert_eq!(symmetric_group(3).size(), 6);
        assert_eq!(brandt(2).size(), 5);
        assert_eq!(powerset(2).size(), 4);
        assert_eq!(equivariant_partial_bijections(2, &cyclic_group(2)).size(), 17);
        assert_eq!(equivariant_partial_bijections(1, &cyclic_group(2)).size(), 3);
    }

    #[test]
    fn i2_numbering() {
        let (_, maps) = monoid_of_maps(2, partial_bijections(2));
        assert_eq!(
            maps,
            vec![
                vec![None, None],
                vec![Some(0), None],
                vec![None, Some(1)],
                vec![Some(1), None],
                vec![None, Some(0)],
                vec![Some(0), Some(1)],
                vec![Some(1), Some(0)],
            ]
        );
    }

    #[test]
    fn composition_is_right_to_left() {
        let i2 = symmetric_inverse_monoid(2);
        // {2→1} then... (f·g)(x) = f(g(x)): {1→2}·{2→1} = {2→2}
        assert_eq!(i2.mul(3, 4), 2);
        assert_eq!(i2.mul(4, 3), 1);
        assert_eq!(i2.mul(6, 6), 5);
        assert_eq!(i2.identity(), Some(5));
        assert_eq!(i2.inv(3), 4);
    }

    #[test]
    fn brandt_products() {
        let b2 = brandt(2);
        // a = (0,1) has id 3, a⁻¹ = (1,0) has id 4
        assert_eq!(b2.mul(3, 4), 1);
        assert_eq!(b2.mul(4, 3), 2);
        assert_eq!(b2.mul(3, 3), 0);
        assert_eq!(b2.inv(3), 4);
        assert_eq!(b2.identity(), None);
    }
}
