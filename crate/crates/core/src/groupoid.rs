//! Finite groupoids given by partial multiplication tables.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::format;
use crate::semigroup::InvSemigroup;
use crate::Elem;

/// Groups above this order are not searched for isomorphisms.
pub const GROUP_ISO_CAP: usize = 64;

/// Groups up to this order get an exact canonical table as signature.
pub const CANONICAL_TABLE_CAP: usize = 16;

/// A finite groupoid: `mul(x, y)` is defined exactly when `d(x) = r(y)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Groupoid {
    size: usize,
    table: Vec<Option<Elem>>,
    inv: Vec<Elem>,
    dom: Vec<Elem>,
    ran: Vec<Elem>,
    identities: Vec<Elem>,
}

impl Groupoid {
    pub fn from_table(size: usize, table: Vec<Option<Elem>>) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::TableShape {
                expected: size * size,
                found: table.len(),
            });
        }
        if let Some(value) = table.iter().flatten().copied().find(|&v| v >= size) {
            return Err(Error::EntryOutOfRange { value, size });
        }
        let mul = |x: Elem, y: Elem| table[x * size + y];
        let bad = |axiom: &'static str, witness: Vec<usize>| Err(Error::NotGroupoid { axiom, witness });

        let identities: Vec<Elem> = (0..size).filter(|&x| mul(x, x) == Some(x)).collect();
        let mut dom = Vec::with_capacity(size);
        let mut ran = Vec::with_capacity(size);
        for x in 0..size {
            let right: Vec<Elem> = identities.iter().copied().filter(|&e| mul(x, e) == Some(x)).collect();
            let left: Vec<Elem> = identities.iter().copied().filter(|&e| mul(e, x) == Some(x)).collect();
            match (right.as_slice(), left.as_slice()) {
                ([d], [r]) => {
                    dom.push(*d);
                    ran.push(*r);
                }
                _ => return bad("identities", vec![x]),
            }
        }
        for x in 0..size {
            for y in 0..size {
                match mul(x, y) {
                    Some(_) if dom[x] != ran[y] => return bad("definedness", vec![x, y]),
                    None if dom[x] == ran[y] => return bad("definedness", vec![x, y]),
                    Some(xy) if dom[xy] != dom[y] || ran[xy] != ran[x] => {
                        return bad("domain and range", vec![x, y])
                    }
                    _ => {}
                }
            }
        }
        for x in 0..size {
            for y in (0..size).filter(|&y| dom[x] == ran[y]) {
                let xy = mul(x, y).unwrap();
                for z in (0..size).filter(|&z| dom[y] == ran[z]) {
                    if mul(xy, z) != mul(x, mul(y, z).unwrap()) {
                        return bad("associativity", vec![x, y, z]);
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(size);
        for x in 0..size {
            match (0..size).find(|&y| mul(x, y) == Some(ran[x]) && mul(y, x) == Some(dom[x])) {
                Some(y) => inv.push(y),
                None => return bad("inverses", vec![x]),
            }
        }
        Ok(Groupoid {
            size,
            table,
            inv,
            dom,
            ran,
            identities,
        })
    }

    /// Parses and validates `.grp` text.
    pub fn parse(text: &str) -> Result<Self> {
        let (size, table) = format::parse_table(text, true)?;
        Self::from_table(size, table)
    }

    pub fn to_grp(&self) -> String {
        format::write_table(self.size, |x, y| self.mul(x, y))
    }

    /// A group viewed as a one-object groupoid.
    pub fn from_group(group: &InvSemigroup) -> Result<Self> {
        if group.idempotents().len() != 1 {
            return Err(Error::NotAGroup("more than one idempotent"));
        }
        let n = group.size();
        Self::from_table(n, group.table().iter().map(|&v| Some(v)).collect())
    }

    /// `n` identities and one arrow between each ordered pair. Arrow
    /// `x → y` (domain `x`, range `y`) has id `y * n + x`.
    pub fn pair(n: usize) -> Self {
        let mut table = Vec::with_capacity(n.pow(4));
        for a in 0..n * n {
            for b in 0..n * n {
                let (ay, ax) = (a / n, a % n);
                let (by, bx) = (b / n, b % n);
                table.push((ax == by).then_some(ay * n + bx));
            }
        }
        Self::from_table(n * n, table).unwrap()
    }

    /// `n` identities and nothing else.
    pub fn discrete(n: usize) -> Self {
        let table = (0..n * n).map(|i| (i / n == i % n).then_some(i / n)).collect();
        Self::from_table(n, table).unwrap()
    }

    /// Arrows of `other` are shifted by `self.size()`.
    pub fn disjoint_union(&self, other: &Groupoid) -> Self {
        let n = self.size + other.size;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(match (x < self.size, y < self.size) {
                    (true, true) => self.mul(x, y),
                    (false, false) => other.mul(x - self.size, y - self.size).map(|v| v + self.size),
                    _ => None,
                });
            }
        }
        Self::from_table(n, table).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.table[x * self.size + y]
    }

    /// Product of a composable word, left to right.
    pub fn product(&self, word: &[Elem]) -> Option<Elem> {
        let (&first, rest) = word.split_first()?;
        rest.iter().try_fold(first, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x]
    }

    #[inline]
    pub fn d(&self, x: Elem) -> Elem {
        self.dom[x]
    }

    #[inline]
    pub fn r(&self, x: Elem) -> Elem {
        self.ran[x]
    }

    pub fn identities(&self) -> &[Elem] {
        &self.identities
    }

    pub fn is_identity(&self, x: Elem) -> bool {
        self.dom[x] == x
    }

    /// Whether this is a group: one identity, every product defined.
    pub fn is_group(&self) -> bool {
        self.identities.len() == 1
    }

    /// The least-id arrow with domain `from` and range `to`.
    pub fn arrow(&self, from: Elem, to: Elem) -> Option<Elem> {
        (0..self.size).find(|&x| self.dom[x] == from && self.ran[x] == to)
    }

    /// Connected components as sorted arrow lists, ordered by least arrow.
    pub fn components(&self) -> Vec<Vec<Elem>> {
        let mut comp_of_identity = vec![usize::MAX; self.size];
        let mut count = 0;
        for &e in &self.identities {
            if comp_of_identity[e] != usize::MAX {
                continue;
            }
            for x in 0..self.size {
                if self.dom[x] == e {
                    comp_of_identity[self.ran[x]] = count;
                }
            }
            count += 1;
        }
        let mut comps = vec![Vec::new(); count];
        for x in 0..self.size {
            comps[comp_of_identity[self.dom[x]]].push(x);
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Every local group trivial.
    pub fn is_principal(&self) -> bool {
        (0..self.size).all(|x| self.dom[x] != self.ran[x] || self.is_identity(x))
    }

    /// The loops at identity `e`, as a group. Element `i` of the result is
    /// the `i`-th loop in id order; the carrier is returned alongside.
    pub fn local_group(&self, e: Elem) -> (Groupoid, Vec<Elem>) {
        let loops: Vec<Elem> = (0..self.size)
            .filter(|&x| self.dom[x] == e && self.ran[x] == e)
            .collect();
        (self.restrict(&loops), loops)
    }

    /// The sub-groupoid on a product-closed subset; arrow `i` is `elems[i]`.
    pub fn restrict(&self, elems: &[Elem]) -> Groupoid {
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i;
        }
        let table = elems
            .iter()
            .flat_map(|&x| elems.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul(x, y).map(|v| index[v]))
            .collect();
        Self::from_table(elems.len(), table).expect("restriction to a closed subset")
    }

    pub fn component_form(&self) -> ComponentForm {
        let components = self
            .components()
            .into_iter()
            .map(|members| {
                let identities: Vec<Elem> = members.iter().copied().filter(|&x| self.is_identity(x)).collect();
                let (group, _) = self.local_group(identities[0]);
                Component {
                    identity_count: identities.len(),
                    group,
                    member_ids: members,
                }
            })
            .collect();
        ComponentForm { components }
    }

    /// Element orders, for groups.
    fn element_orders(&self) -> Vec<usize> {
        let e = self.identities[0];
        (0..self.size)
            .map(|x| {
                let mut p = x;
                let mut k = 1;
                while p != e {
                    p = self.mul(p, x).expect("group product");
                    k += 1;
                }
                k
            })
            .collect()
    }
}

impl fmt::Debug for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Groupoid")
            .field("size", &self.size)
            .field("identities", &self.identities)
            .finish_non_exhaustive()
    }
}

/// One connected component: `identity_count` objects, local group `group`
/// taken at the least-id identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub identity_count: usize,
    pub group: Groupoid,
    pub member_ids: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentForm {
    pub components: Vec<Component>,
}

impl ComponentForm {
    /// Sorted multiset of `(identity_count, group signature)`.
    pub fn signature(&self) -> Vec<(usize, GroupSignature)> {
        let mut sig: Vec<(usize, GroupSignature)> = self
            .components
            .iter()
            .map(|c| (c.identity_count, group_signature(&c.group)))
            .collect();
        sig.sort();
        sig
    }

    /// The disjoint union of the groupoids `X × G × X`, with
    /// `(x, g, y)(y, h, z) = (x, gh, z)`. Within a component, `(x, g, y)` has
    /// offset `(x * |G| + g) * |X| + y`; components follow each other.
    pub fn reconstruct(&self) -> Groupoid {
        self.components
            .iter()
            .map(|c| product_groupoid(c.identity_count, &c.group))
            .reduce(|a, b| a.disjoint_union(&b))
            .unwrap_or_else(|| Groupoid::from_table(0, Vec::new()).unwrap())
    }
}

/// `X × G × X` for `|X| = n`.
pub fn product_groupoid(n: usize, group: &Groupoid) -> Groupoid {
    let g = group.size();
    let id = |x: usize, h: usize, y: usize| (x * g + h) * n + y;
    let size = n * n * g;
    let mut table = Vec::with_capacity(size * size);
    for a in 0..size {
        let (ax, ah, ay) = (a / (g * n), (a / n) % g, a % n);
        for b in 0..size {
            let (bx, bh, by) = (b / (g * n), (b / n) % g, b % n);
            table.push((ay == bx).then(|| id(ax, group.mul(ah, bh).unwrap(), by)));
        }
    }
    Groupoid::from_table(size, table).unwrap()
}

/// Isomorphism-class fingerprint of a group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupSignature {
    /// The least relabeled table; exact for small groups.
    Table(Vec<Elem>),
    /// Sorted element orders; necessary but not sufficient for isomorphism.
    Profile(Vec<usize>),
}

/// Canonical fingerprint: for groups of order at most
/// [`CANONICAL_TABLE_CAP`], the lexicographically least table obtained by
/// labeling elements in breadth-first order from a minimal generating
/// tuple; above that, the sorted element orders.
pub fn group_signature(g: &Groupoid) -> GroupSignature {
    assert!(g.is_group(), "signature of a non-group");
    let n = g.size();
    if n > CANONICAL_TABLE_CAP {
        let mut orders = g.element_orders();
        orders.sort_unstable();
        return GroupSignature::Profile(orders);
    }
    let e = g.identities[0];
    let mut best: Option<Vec<Elem>> = None;
    for k in 0..=n {
        let mut tuple = vec![0; k];
        loop {
            if let Some(labels) = bfs_labels(g, e, &tuple) {
                let mut back = vec![0; n];
                for (x, &l) in labels.iter().enumerate() {
                    back[l] = x;
                }
                let table: Vec<Elem> = (0..n * n)
                    .map(|i| labels[g.mul(back[i / n], back[i % n]).unwrap()])
                    .collect();
                if best.as_ref().map_or(true, |b| table < *b) {
                    best = Some(table);
                }
            }
            if !next_tuple(&mut tuple, n) {
                break;
            }
        }
        if let Some(table) = best {
            return GroupSignature::Table(table);
        }
    }
    unreachable!("the whole group generates itself")
}

/// Labels in order of discovery when multiplying on the right by the
/// generators, or `None` if they do not generate.
fn bfs_labels(g: &Groupoid, e: Elem, gens: &[Elem]) -> Option<Vec<usize>> {
    let n = g.size();
    let mut labels = vec![usize::MAX; n];
    let mut queue = VecDeque::from([e]);
    labels[e] = 0;
    let mut next = 1;
    while let Some(x) = queue.pop_front() {
        for &h in gens {
            let y = g.mul(x, h).unwrap();
            if labels[y] == usize::MAX {
                labels[y] = next;
                next += 1;
                queue.push_back(y);
            }
        }
    }
    (next == n).then_some(labels)
}

fn next_tuple(tuple: &mut [usize], base: usize) -> bool {
    for digit in tuple.iter_mut().rev() {
        *digit += 1;
        if *digit < base {
            return true;
        }
        *digit = 0;
    }
    false
}

/// A readable name: `trivial`, `Z<n>` for cyclic groups, or
/// `order-<n>` otherwise.
pub fn group_name(g: &Groupoid) -> String {
    let n = g.size();
    if n == 1 {
        "trivial".into()
    } else if g.element_orders().contains(&n) {
        format!("Z{n}")
    } else {
        format!("order-{n}")
    }
}

/// A group isomorphism `a → b` as an element map, if one exists.
pub fn group_iso(a: &Groupoid, b: &Groupoid) -> Result<Option<Vec<Elem>>> {
    if !a.is_group() || !b.is_group() {
        return Err(Error::NotAGroup("more than one identity"));
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let n = a.size();
    if n > GROUP_ISO_CAP {
        return Err(Error::Undecided(n));
    }
    let (oa, ob) = (a.element_orders(), b.element_orders());
    let mut pa = oa.clone();
    let mut pb = ob.clone();
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return Ok(None);
    }
    let gens = generators_by_order(a, &oa);
    let mut images = Vec::with_capacity(gens.len());
    Ok(assign(a, b, &oa, &ob, &gens, &mut images))
}

/// Greedy generators, largest order first.
fn generators_by_order(g: &Groupoid, orders: &[usize]) -> Vec<Elem> {
    let mut candidates: Vec<Elem> = (0..g.size()).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let e = g.identities[0];
    let mut gens: Vec<Elem> = Vec::new();
    let mut reached = subgroup(g, e, &gens);
    for x in candidates {
        if !reached[x] {
            gens.push(x);
            reached = subgroup(g, e, &gens);
        }
    }
    gens
}

fn subgroup(g: &Groupoid, e: Elem, gens: &[Elem]) -> Vec<bool> {
    let mut seen = vec![false; g.size()];
    seen[e] = true;
    let mut stack = vec![e];
    while let Some(x) = stack.pop() {
        for &h in gens {
            let y = g.mul(x, h).unwrap();
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

fn assign(
    a: &Groupoid,
    b: &Groupoid,
    oa: &[usize],
    ob: &[usize],
    gens: &[Elem],
    images: &mut Vec<Elem>,
) -> Option<Vec<Elem>> {
    let k = images.len();
    if k > 0 && extend_map(a, b, &gens[..k], images).is_none() {
        return None;
    }
    if k == gens.len() {
        let map = extend_map(a, b, gens, images)?;
        let n = a.size();
        let total = (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y).unwrap()] == b.mul(map[x], map[y]).unwrap()));
        return total.then_some(map);
    }
    for y in 0..b.size() {
        if ob[y] != oa[gens[k]] {
            continue;
        }
        images.push(y);
        if let Some(map) = assign(a, b, oa, ob, gens, images) {
            return Some(map);
        }
        images.pop();
    }
    None
}

/// Extends generator images along right multiplication; fails on a
/// conflict or a collision. The result is total only when `gens`
/// generates `a`.
fn extend_map(a: &Groupoid, b: &Groupoid, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; b.size()];
    let (ea, eb) = (a.identities[0], b.identities[0]);
    map[ea] = eb;
    used[eb] = true;
    let mut queue = VecDeque::from([ea]);
    while let Some(x) = queue.pop_front() {
        for (&h, &hi) in gens.iter().zip(images) {
            let y = a.mul(x, h).unwrap();
            let yi = b.mul(map[x], hi).unwrap();
            if map[y] == usize::MAX {
                if used[yi] {
                    return None;
                }
                map[y] = yi;
                used[yi] = true;
                queue.push_back(y);
            } else if map[y] != yi {
                return None;
            }
        }
    }
    Some(map)
}

/// A groupoid isomorphism `g → h` as an arrow map, if one exists.
///
/// Components are matched by signature and group isomorphism. Inside a
/// matched pair, identities are paired in id order; with `p_i` the least
/// arrow from the base identity to identity `i` (and `q_i` likewise in `h`),
/// an arrow `a` from identity `j` to identity `i` goes to
/// `q_i · φ(p_i⁻¹ a p_j) · q_j⁻¹`.
pub fn groupoid_iso(g: &Groupoid, h: &Groupoid) -> Result<Option<Vec<Elem>>> {
    if g.size() != h.size() {
        return Ok(None);
    }
    let (fg, fh) = (g.component_form(), h.component_form());
    if fg.signature() != fh.signature() {
        return Ok(None);
    }
    let mut used = vec![false; fh.components.len()];
    let mut map = vec![usize::MAX; g.size()];
    for cg in &fg.components {
        let sig = (cg.identity_count, group_signature(&cg.group));
        let mut matched = false;
        for (j, ch) in fh.components.iter().enumerate() {
            if used[j] || (ch.identity_count, group_signature(&ch.group)) != sig {
                continue;
            }
            if let Some(phi) = group_iso(&cg.group, &ch.group)? {
                map_component(g, h, cg, ch, &phi, &mut map);
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    if !is_groupoid_iso(g, h, &map) {
        return Err(Error::VerificationFailed("groupoid isomorphism certificate".into()));
    }
    Ok(Some(map))
}

fn map_component(g: &Groupoid, h: &Groupoid, cg: &Component, ch: &Component, phi: &[Elem], map: &mut [Elem]) {
    let ids_g: Vec<Elem> = cg.member_ids.iter().copied().filter(|&x| g.is_identity(x)).collect();
    let ids_h: Vec<Elem> = ch.member_ids.iter().copied().filter(|&x| h.is_identity(x)).collect();
    let p: Vec<Elem> = ids_g.iter().map(|&x| g.arrow(ids_g[0], x).unwrap()).collect();
    let q: Vec<Elem> = ids_h.iter().map(|&y| h.arrow(ids_h[0], y).unwrap()).collect();
    let (_, loops_g) = g.local_group(ids_g[0]);
    let (_, loops_h) = h.local_group(ids_h[0]);
    let pos = |ids: &[Elem], x: Elem| ids.iter().position(|&i| i == x).unwrap();
    for &a in &cg.member_ids {
        let (i, j) = (pos(&ids_g, g.r(a)), pos(&ids_g, g.d(a)));
        let lp = g.product(&[g.inv(p[i]), a, p[j]]).unwrap();
        let image_loop = loops_h[phi[pos(&loops_g, lp)]];
        map[a] = h.product(&[q[i], image_loop, h.inv(q[j])]).unwrap();
    }
}

/// Whether `map` is a bijection preserving definedness and products.
pub fn is_groupoid_iso(g: &Groupoid, h: &Groupoid, map: &[Elem]) -> bool {
    let n = g.size();
    if h.size() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|x| (0..n).all(|y| g.mul(x, y).map(|v| map[v]) == h.mul(map[x], map[y])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn group(s: &InvSemigroup) -> Groupoid {
        Groupoid::from_group(s).unwrap()
    }

    #[test]
    fn validation_axioms() {
        assert!(Groupoid::parse("n 1\n0\n").is_ok());
        // a single non-identity element with nothing defined
        let err = Groupoid::parse("n 1\n-1\n").unwrap_err();
        assert!(matches!(err, Error::NotGroupoid { axiom: "identities", .. }));
        // two identities whose product is defined
        let err = Groupoid::parse("n 2\n0 0\n1 1\n").unwrap_err();
        assert!(matches!(err, Error::NotGroupoid { .. }));
    }

    #[test]
    fn pair_groupoid_round_trips_through_text() {
        let p = Groupoid::pair(2);
        assert_eq!(p.size(), 4);
        assert_eq!(p.identities(), &[0, 3]);
        assert_eq!(Groupoid::parse(&p.to_grp()).unwrap(), p);
        assert!(p.is_connected() && p.is_principal());
    }

    #[test]
    fn component_forms() {
        let z2 = group(&families::cyclic_group(2));
        let u = z2.disjoint_union(&Groupoid::pair(2));
        let cf = u.component_form();
        assert_eq!(cf.components.len(), 2);
        assert_eq!(cf.components[0].identity_count, 1);
        assert_eq!(cf.components[0].group.size(), 2);
        assert_eq!(cf.components[1].identity_count, 2);
        assert_eq!(cf.components[1].group.size(), 1);
        assert_eq!(Groupoid::discrete(3).component_form().components.len(), 3);
    }

    #[test]
    fn reconstruction_sizes_and_isomorphism() {
        let z2 = group(&families::cyclic_group(2));
        assert_eq!(product_groupoid(2, &z2).size(), 8);
        assert_eq!(product_groupoid(1, &z2).size(), 2);
        let u = z2.disjoint_union(&Groupoid::pair(2)).disjoint_union(&product_groupoid(2, &z2));
        let back = u.component_form().reconstruct();
        assert!(groupoid_iso(&u, &back).unwrap().is_some());
    }

    #[test]
    fn group_isomorphisms() {
        let z4 = group(&families::cyclic_group(4));
        let klein = group(&families::cyclic_group(2).direct_product(&families::cyclic_group(2)));
        assert_eq!(group_iso(&z4, &klein).unwrap(), None);
        let z6 = group(&families::cyclic_group(6));
        let z2z3 = group(&families::cyclic_group(2).direct_product(&families::cyclic_group(3)));
        let phi = group_iso(&z6, &z2z3).unwrap().unwrap();
        assert!(is_groupoid_iso(&z6, &z2z3, &phi));
        let s3 = group(&families::symmetric_group(3));
        assert_eq!(group_iso(&z6, &s3).unwrap(), None);
        assert_eq!(group_signature(&z6), group_signature(&z2z3));
        assert_ne!(group_signature(&z6), group_signature(&s3));
        assert_eq!(group_name(&s3), "order-6");
        assert_eq!(group_name(&z6), "Z6");
    }

    #[test]
    fn groupoid_iso_examples() {
        let z2 = group(&families::cyclic_group(2));
        let pair = Groupoid::pair(2);
        assert_eq!(groupoid_iso(&pair, &pair).unwrap(), Some(vec![0, 1, 2, 3]));
        let other = Groupoid::discrete(2).disjoint_union(&z2);
        assert_eq!(groupoid_iso(&pair, &other).unwrap(), None);
        let (rb2, _) = families::brandt(2).restricted_groupoid();
        assert!(groupoid_iso(&rb2, &pair).unwrap().is_some());
    }

    #[test]
    fn undecided_above_cap() {
        let big = group(&families::cyclic_group(GROUP_ISO_CAP + 1));
        assert_eq!(group_iso(&big, &big).unwrap_err(), Error::Undecided(GROUP_ISO_CAP + 1));
    }
}
