//! Direct isomorphism search between small semigroup tables.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::semigroup::InvSemigroup;
use crate::Elem;

/// Default carrier cap for [`semigroup_iso`].
pub const DEFAULT_SIZE_CAP: usize = 24;

/// Per-element data preserved by every isomorphism.
fn invariants(s: &InvSemigroup) -> Vec<[usize; 7]> {
    let n = s.size();
    s.elements()
        .map(|x| {
            // index and period of the cyclic subsemigroup
            let mut powers = vec![x];
            let period_start = loop {
                let next = s.mul(*powers.last().unwrap(), x);
                if let Some(p) = powers.iter().position(|&y| y == next) {
                    break p;
                }
                powers.push(next);
            };
            [
                s.is_idempotent(x) as usize,
                period_start,
                powers.len() - period_start,
                s.order().down(x).len(),
                s.order().up(x).len(),
                (0..n).filter(|&y| s.mul(y, x) == x).count(),
                (0..n).filter(|&y| s.mul(x, y) == x).count(),
            ]
        })
        .collect()
}

/// An isomorphism `s → t` as an element map, if one exists. Fails with
/// [`Error::SizeCapExceeded`] above `cap` elements.
pub fn semigroup_iso(s: &InvSemigroup, t: &InvSemigroup, cap: usize) -> Result<Option<Vec<Elem>>> {
    for size in [s.size(), t.size()] {
        if size > cap {
            return Err(Error::SizeCapExceeded { size, cap });
        }
    }
    if s.size() != t.size() {
        return Ok(None);
    }
    let (is, it) = (invariants(s), invariants(t));
    let mut ps = is.clone();
    let mut pt = it.clone();
    ps.sort_unstable();
    pt.sort_unstable();
    if ps != pt {
        return Ok(None);
    }
    let gens = s.generating_set();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(s, t, &is, &it, &gens, &mut images))
}

fn search(
    s: &InvSemigroup,
    t: &InvSemigroup,
    is: &[[usize; 7]],
    it: &[[usize; 7]],
    gens: &[Elem],
    images: &mut Vec<Elem>,
) -> Option<Vec<Elem>> {
    let k = images.len();
    let partial = extend(s, t, is, it, &gens[..k], images)?;
    if k == gens.len() {
        return s.is_homomorphism(t, &partial).then_some(partial);
    }
    for y in t.elements() {
        if it[y] != is[gens[k]] || partial.contains(&y) {
            continue;
        }
        images.push(y);
        if let Some(map) = search(s, t, is, it, gens, images) {
            return Some(map);
        }
        images.pop();
    }
    None
}

/// Propagates generator images through right multiplication; `None` on a
/// conflict, a collision or an invariant mismatch.
fn extend(
    s: &InvSemigroup,
    t: &InvSemigroup,
    is: &[[usize; 7]],
    it: &[[usize; 7]],
    gens: &[Elem],
    images: &[Elem],
) -> Option<Vec<Elem>> {
    let mut map = vec![usize::MAX; s.size()];
    let mut used = vec![false; t.size()];
    let mut queue = VecDeque::new();
    let mut set = |x: Elem, y: Elem, map: &mut Vec<Elem>, queue: &mut VecDeque<Elem>| -> bool {
        if map[x] == usize::MAX {
            if used[y] || is[x] != it[y] {
                return false;
            }
            map[x] = y;
            used[y] = true;
            queue.push_back(x);
            true
        } else {
            map[x] == y
        }
    };
    for (&g, &h) in gens.iter().zip(images) {
        if !set(g, h, &mut map, &mut queue) {
            return None;
        }
    }
    while let Some(x) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(images) {
            if !set(s.mul(x, g), t.mul(map[x], h), &mut map, &mut queue) {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn finds_isomorphisms_between_relabelings() {
        let b2 = families::brandt(2);
        let relabeled = b2.relabel(&[4, 2, 0, 1, 3]).unwrap();
        let map = semigroup_iso(&b2, &relabeled, DEFAULT_SIZE_CAP).unwrap().unwrap();
        assert!(b2.is_homomorphism(&relabeled, &map));
    }

    #[test]
    fn separates_non_isomorphic_tables() {
        let z = families::zero_group(&families::cyclic_group(2));
        assert_eq!(semigroup_iso(&z, &families::chain(3), DEFAULT_SIZE_CAP).unwrap(), None);
        assert_eq!(semigroup_iso(&families::brandt(2), &families::powerset(2), 24).unwrap(), None);
        let i2 = families::symmetric_inverse_monoid(2);
        assert!(semigroup_iso(&i2, &i2, 24).unwrap().is_some());
    }

    #[test]
    fn respects_the_cap() {
        let i3 = families::symmetric_inverse_monoid(3);
        assert_eq!(
            semigroup_iso(&i3, &i3, DEFAULT_SIZE_CAP).unwrap_err(),
            Error::SizeCapExceeded { size: 34, cap: 24 }
        );
        assert!(semigroup_iso(&i3, &i3, 40).unwrap().is_some());
    }
}
