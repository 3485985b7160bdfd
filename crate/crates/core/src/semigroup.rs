use std::fmt;

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::format;
use crate::groupoid::Groupoid;
use crate::order::NaturalOrder;
use crate::Elem;

/// Largest carrier that gets the full lexicographic associativity scan; above
/// this the check runs Light's test against a generating set.
const FULL_SCAN_LIMIT: usize = 64;

/// A finite inverse semigroup presented by its multiplication table.
///
/// Construction validates the table and eagerly computes inverses,
/// idempotents, the zero (if any) and the natural partial order, so every
/// query afterwards is a lookup or a scan.
#[derive(Clone)]
pub struct InvSemigroup {
    size: usize,
    table: Vec<Elem>,
    inv: Vec<Elem>,
    zero: Option<Elem>,
    idempotents: Vec<Elem>,
    is_idempotent: Vec<bool>,
    order: NaturalOrder,
}

/// How two elements sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relations {
    pub compatible: bool,
    pub orthogonal: bool,
    pub meet: Option<Elem>,
    pub join: Option<Elem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fundamental {
    pub fundamental: bool,
    /// A non-idempotent element commuting with every idempotent.
    pub witness: Option<Elem>,
}

/// The maximum idempotent-separating congruence and the quotient by it.
#[derive(Clone, Debug)]
pub struct MuQuotient {
    pub mu: Congruence,
    pub quotient: InvSemigroup,
    pub projection: Vec<Elem>,
}

impl InvSemigroup {
    /// Validates a row-major table of `size * size` entries.
    pub fn from_table(size: usize, table: Vec<Elem>) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::TableShape {
                expected: size * size,
                found: table.len(),
            });
        }
        if let Some(&value) = table.iter().find(|&&v| v >= size) {
            return Err(Error::EntryOutOfRange { value, size });
        }
        check_associative(size, &table)?;

        let mul = |a: Elem, b: Elem| table[a * size + b];
        let mut inv = Vec::with_capacity(size);
        for a in 0..size {
            let mut found = None;
            let mut count = 0;
            for b in 0..size {
                if mul(mul(a, b), a) == a && mul(mul(b, a), b) == b {
                    count += 1;
                    found.get_or_insert(b);
                }
            }
            match (count, found) {
                (1, Some(b)) => inv.push(b),
                _ => return Err(Error::NotInverse { element: a, count }),
            }
        }

        let is_idempotent: Vec<bool> = (0..size).map(|a| mul(a, a) == a).collect();
        let idempotents: Vec<Elem> = (0..size).filter(|&a| is_idempotent[a]).collect();
        for (i, &e) in idempotents.iter().enumerate() {
            for &f in &idempotents[i + 1..] {
                if mul(e, f) != mul(f, e) {
                    return Err(Error::IdempotentsDontCommute(e, f));
                }
            }
        }

        let zero = (0..size).find(|&z| (0..size).all(|x| mul(z, x) == z && mul(x, z) == z));
        let order = NaturalOrder::from_fn(size, |a, b| a == mul(mul(b, inv[a]), a));

        Ok(InvSemigroup {
            size,
            table,
            inv,
            zero,
            idempotents,
            is_idempotent,
            order,
        })
    }

    pub fn from_fn(size: usize, mul: impl Fn(Elem, Elem) -> Elem) -> Result<Self> {
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                table.push(mul(a, b));
            }
        }
        Self::from_table(size, table)
    }

    /// Parses and validates `.ist` text.
    pub fn parse(text: &str) -> Result<Self> {
        let (size, entries) = format::parse_table(text, false)?;
        Self::from_table(size, entries.into_iter().map(|e| e.expect("total table")).collect())
    }

    /// Serializes to `.ist` text.
    pub fn to_ist(&self) -> String {
        format::write_table(self.size, |a, b| Some(self.mul(a, b)))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.size + b]
    }

    /// Product of a nonempty word, left to right.
    pub fn product(&self, word: &[Elem]) -> Elem {
        let (&first, rest) = word.split_first().expect("nonempty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `d(a) = a⁻¹a`.
    #[inline]
    pub fn d(&self, a: Elem) -> Elem {
        self.mul(self.inv[a], a)
    }

    /// `r(a) = aa⁻¹`.
    #[inline]
    pub fn r(&self, a: Elem) -> Elem {
        self.mul(a, self.inv[a])
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    pub fn require_zero(&self) -> Result<Elem> {
        self.zero.ok_or(Error::NoZero)
    }

    pub fn is_zero(&self, a: Elem) -> bool {
        self.zero == Some(a)
    }

    /// The two-sided identity, if `S` is a monoid.
    pub fn identity(&self) -> Option<Elem> {
        (0..self.size).find(|&e| (0..self.size).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    #[inline]
    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.is_idempotent[a]
    }

    pub fn idempotents(&self) -> &[Elem] {
        &self.idempotents
    }

    /// Nonzero elements in id order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size).filter(move |&a| Some(a) != self.zero)
    }

    pub fn order(&self) -> &NaturalOrder {
        &self.order
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.order.leq(a, b)
    }

    pub fn is_compatible(&self, a: Elem, b: Elem) -> bool {
        self.is_idempotent(self.mul(self.inv[a], b)) && self.is_idempotent(self.mul(a, self.inv[b]))
    }

    pub fn is_orthogonal(&self, a: Elem, b: Elem) -> Result<bool> {
        let z = self.require_zero()?;
        Ok(self.mul(self.inv[a], b) == z && self.mul(a, self.inv[b]) == z)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.order.meet_of(&[a, b])
    }

    pub fn join(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.order.join_of(&[a, b])
    }

    pub fn relations(&self, a: Elem, b: Elem) -> Result<Relations> {
        Ok(Relations {
            compatible: self.is_compatible(a, b),
            orthogonal: self.is_orthogonal(a, b)?,
            meet: self.meet(a, b),
            join: self.join(a, b),
        })
    }

    /// Nonzero elements with only the zero strictly below them.
    pub fn atoms(&self) -> Result<Vec<Elem>> {
        let z = self.require_zero()?;
        Ok(self
            .nonzero()
            .filter(|&a| (0..self.size).all(|x| x == a || x == z || !self.leq(x, a)))
            .collect())
    }

    /// The nonzero elements under the product `x·y`, defined when
    /// `d(x) = r(y)`. Arrow `i` of the result is the `i`-th nonzero element.
    pub fn restricted_groupoid(&self) -> (Groupoid, Vec<Elem>) {
        let carrier: Vec<Elem> = self.nonzero().collect();
        let groupoid = self
            .groupoid_on(&carrier)
            .expect("nonzero elements form a groupoid under the restricted product");
        (groupoid, carrier)
    }

    /// The restricted product on an arbitrary subset, checked to be a
    /// groupoid. Arrow `i` is `elems[i]`.
    pub fn groupoid_on(&self, elems: &[Elem]) -> Result<Groupoid> {
        let mut index = vec![usize::MAX; self.size];
        for (i, &a) in elems.iter().enumerate() {
            index[a] = i;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &x in elems {
            for &y in elems {
                if self.d(x) == self.r(y) {
                    let xy = self.mul(x, y);
                    if index[xy] == usize::MAX {
                        return Err(Error::NotGroupoid {
                            axiom: "closure",
                            witness: vec![index[x], index[y]],
                        });
                    }
                    table.push(Some(index[xy]));
                } else {
                    table.push(None);
                }
            }
        }
        Groupoid::from_table(m, table)
    }

    pub fn is_fundamental(&self) -> Fundamental {
        let witness = (0..self.size).find(|&a| {
            !self.is_idempotent(a)
                && self
                    .idempotents
                    .iter()
                    .all(|&e| self.mul(a, e) == self.mul(e, a))
        });
        Fundamental {
            fundamental: witness.is_none(),
            witness,
        }
    }

    /// Munn's test: same domain and range idempotent, and equal conjugation
    /// action on the idempotents.
    pub fn munn_related(&self, a: Elem, b: Elem) -> bool {
        self.d(a) == self.d(b)
            && self.r(a) == self.r(b)
            && self.idempotents.iter().all(|&e| {
                self.product(&[a, e, self.inv[a]]) == self.product(&[b, e, self.inv[b]])
            })
    }

    pub fn mu_and_quotient(&self) -> MuQuotient {
        let mut class_of = vec![usize::MAX; self.size];
        let mut reps: Vec<Elem> = Vec::new();
        for a in 0..self.size {
            match reps.iter().position(|&r| self.munn_related(a, r)) {
                Some(c) => class_of[a] = c,
                None => {
                    class_of[a] = reps.len();
                    reps.push(a);
                }
            }
        }
        let mu = Congruence::from_classes(class_of);
        let (quotient, projection) = mu.quotient(self).expect("the Munn relation is a congruence");
        MuQuotient {
            mu,
            quotient,
            projection,
        }
    }

    /// Blocks of the 𝒟-relation restricted to idempotents, each sorted, in
    /// order of least member.
    pub fn d_relation_idempotents(&self) -> Vec<Vec<Elem>> {
        let mut blocks: Vec<Vec<Elem>> = Vec::new();
        let mut block_of = vec![usize::MAX; self.size];
        for &e in &self.idempotents {
            if block_of[e] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block: Vec<Elem> = Vec::new();
            for x in 0..self.size {
                if self.d(x) == e {
                    let f = self.r(x);
                    if block_of[f] == usize::MAX {
                        block_of[f] = id;
                        block.push(f);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn d_related(&self, e: Elem, f: Elem) -> bool {
        (0..self.size).any(|x| self.d(x) == e && self.r(x) == f)
    }

    /// `S⁰`: a new zero with id 0, existing elements shifted up by one.
    pub fn adjoin_zero(&self) -> InvSemigroup {
        let n = self.size + 1;
        Self::from_fn(n, |a, b| {
            if a == 0 || b == 0 {
                0
            } else {
                self.mul(a - 1, b - 1) + 1
            }
        })
        .expect("adjoining a zero preserves the inverse property")
    }

    /// Componentwise product; the pair `(a, b)` has id `a * |T| + b`.
    pub fn direct_product(&self, other: &InvSemigroup) -> InvSemigroup {
        let m = other.size;
        Self::from_fn(self.size * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
        .expect("a product of inverse semigroups is inverse")
    }

    /// The subsemigroup generated by `gens`, in id order.
    pub fn generated(&self, gens: &[Elem]) -> Vec<Elem> {
        subsemigroup(self.size, &self.table, gens)
    }

    /// A generating set picked greedily in id order.
    pub fn generating_set(&self) -> Vec<Elem> {
        greedy_generators(self.size, &self.table)
    }

    /// Relabels elements: the new id of `a` is `perm[a]`.
    pub fn relabel(&self, perm: &[Elem]) -> Result<InvSemigroup> {
        let mut back = vec![0; self.size];
        for (a, &p) in perm.iter().enumerate() {
            back[p] = a;
        }
        Self::from_fn(self.size, |x, y| perm[self.mul(back[x], back[y])])
    }

    /// Whether `map` is a homomorphism from `self` into `target`.
    pub fn is_homomorphism(&self, target: &InvSemigroup, map: &[Elem]) -> bool {
        map.len() == self.size
            && (0..self.size)
                .all(|a| (0..self.size).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }
}

impl PartialEq for InvSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.table == other.table
    }
}

impl Eq for InvSemigroup {}

impl fmt::Debug for InvSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvSemigroup")
            .field("size", &self.size)
            .field("zero", &self.zero)
            .field("idempotents", &self.idempotents)
            .finish_non_exhaustive()
    }
}

fn subsemigroup(size: usize, table: &[Elem], gens: &[Elem]) -> Vec<Elem> {
    let mut seen = vec![false; size];
    let mut members: Vec<Elem> = Vec::new();
    for &g in gens {
        if !seen[g] {
            seen[g] = true;
            members.push(g);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for &g in gens {
            for p in [table[x * size + g], table[g * size + x]] {
                if !seen[p] {
                    seen[p] = true;
                    members.push(p);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    members
}

fn greedy_generators(size: usize, table: &[Elem]) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut covered = vec![false; size];
    while let Some(next) = (0..size).find(|&a| !covered[a]) {
        gens.push(next);
        for a in subsemigroup(size, table, &gens) {
            covered[a] = true;
        }
    }
    gens
}

fn check_associative(size: usize, table: &[Elem]) -> Result<()> {
    let mul = |a: Elem, b: Elem| table[a * size + b];
    if size <= FULL_SCAN_LIMIT {
        for a in 0..size {
            for b in 0..size {
                let ab = mul(a, b);
                for c in 0..size {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        return Ok(());
    }
    // Light's test: associativity of the triples (x, g, y) for g ranging
    // over a generating set implies associativity everywhere.
    for g in greedy_generators(size, table) {
        for x in 0..size {
            let xg = mul(x, g);
            for y in 0..size {
                if mul(xg, y) != mul(x, mul(g, y)) {
                    return Err(Error::NotAssociative(x, g, y));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn trivial_semigroup() {
        let s = InvSemigroup::parse("n 1\n0\n").unwrap();
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.idempotents(), &[0]);
        assert_eq!(s.atoms().unwrap(), Vec::<Elem>::new());
    }

    #[test]
    fn validation_names_first_witness() {
        // x*y = x is associative but every element is its own and every
        // other element's generalized inverse
        let left_zero = InvSemigroup::from_fn(2, |a, _| a);
        assert_eq!(left_zero.unwrap_err(), Error::NotInverse { element: 0, count: 2 });
        // x*y = 1 - x breaks associativity at (0,0,0)
        let bad = InvSemigroup::from_fn(2, |a, _| 1 - a);
        assert_eq!(bad.unwrap_err(), Error::NotAssociative(0, 0, 0));
        assert!(matches!(
            InvSemigroup::from_table(2, vec![0, 0, 0]),
            Err(Error::TableShape { .. })
        ));
    }

    #[test]
    fn chain_structure() {
        let c = families::chain(3);
        assert_eq!(c.zero(), Some(0));
        assert_eq!(c.idempotents().len(), 3);
        assert_eq!(c.atoms().unwrap(), vec![1]);
        let (g, carrier) = c.restricted_groupoid();
        assert_eq!(carrier, vec![1, 2]);
        assert_eq!(g.identities().len(), 2);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn brandt_relations() {
        let b2 = families::brandt(2);
        let e1 = 1;
        let e2 = 2;
        let rel = b2.relations(e1, e2).unwrap();
        assert!(rel.compatible && rel.orthogonal);
        assert_eq!(rel.meet, Some(0));
        assert_eq!(rel.join, None);
        assert_eq!(b2.d_relation_idempotents(), vec![vec![0], vec![1, 2]]);
        let (g, _) = b2.restricted_groupoid();
        assert_eq!(g.size(), 4);
        assert_eq!(g.identities().len(), 2);
    }

    #[test]
    fn symmetric_inverse_monoid_order_and_atoms() {
        let i2 = families::symmetric_inverse_monoid(2);
        // 3 = {1→2}, 4 = {2→1}, 6 = transposition, 5 = identity
        assert!(i2.leq(3, 6));
        assert!(!i2.leq(3, 5));
        assert_eq!(i2.atoms().unwrap(), vec![1, 2, 3, 4]);
        let rel = i2.relations(1, 2).unwrap();
        assert!(rel.orthogonal);
        assert_eq!(rel.join, Some(5));
        assert_eq!(i2.d_relation_idempotents(), vec![vec![0], vec![1, 2], vec![5]]);
        assert!(i2.is_fundamental().fundamental);
    }

    #[test]
    fn zero_group_is_not_fundamental() {
        let z = families::zero_group(&families::cyclic_group(2));
        let f = z.is_fundamental();
        assert_eq!(f, Fundamental { fundamental: false, witness: Some(2) });
        assert_eq!(z.atoms().unwrap(), vec![1, 2]);
        let mq = z.mu_and_quotient();
        assert_eq!(mq.quotient.size(), 2);
        assert_eq!(mq.projection, vec![0, 1, 1]);
    }

    #[test]
    fn orthogonality_needs_zero() {
        let z2 = families::cyclic_group(2);
        assert_eq!(z2.relations(0, 1).unwrap_err(), Error::NoZero);
        assert_eq!(z2.atoms().unwrap_err(), Error::NoZero);
        let z2_0 = z2.adjoin_zero();
        assert_eq!(z2_0.zero(), Some(0));
        assert_eq!(z2_0.size(), 3);
    }

    #[test]
    fn light_test_agrees_with_full_scan_on_large_table() {
        let i3 = families::symmetric_inverse_monoid(3);
        let big = i3.direct_product(&families::chain(3));
        assert_eq!(big.size(), 102);
        let mut table = big.table().to_vec();
        // break one product of two generators
        let n = big.size();
        let (x, y) = (7, 40);
        table[x * n + y] = (table[x * n + y] + 1) % n;
        assert!(matches!(
            InvSemigroup::from_table(n, table),
            Err(Error::NotAssociative(..) | Error::NotInverse { .. } | Error::IdempotentsDontCommute(..))
        ));
    }

    #[test]
    fn generating_set_generates() {
        let i3 = families::symmetric_inverse_monoid(3);
        let gens = i3.generating_set();
        assert_eq!(i3.generated(&gens).len(), 34);
    }
}
