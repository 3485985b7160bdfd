use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::semigroup::InvSemigroup;
use crate::Elem;

/// An equivalence on the carrier, stored as class ids numbered in order of
/// first appearance, so equal relations have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    /// Normalizes arbitrary class labels.
    pub fn from_classes(labels: Vec<usize>) -> Self {
        let mut renumber: HashMap<usize, usize> = HashMap::new();
        let class_of = labels
            .into_iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(l).or_insert(next)
            })
            .collect();
        Congruence { class_of }
    }

    pub fn equality(size: usize) -> Self {
        Congruence {
            class_of: (0..size).collect(),
        }
    }

    pub fn universal(size: usize) -> Self {
        Congruence {
            class_of: vec![0; size],
        }
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn classes(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (a, &c) in self.class_of.iter().enumerate() {
            out[c].push(a);
        }
        out
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn is_contained_in(&self, other: &Congruence) -> bool {
        let mut image: HashMap<usize, usize> = HashMap::new();
        self.class_of
            .iter()
            .zip(&other.class_of)
            .all(|(&c, &d)| *image.entry(c).or_insert(d) == d)
    }

    /// Left and right compatibility with the multiplication.
    pub fn is_congruence_on(&self, s: &InvSemigroup) -> bool {
        s.elements().all(|a| {
            s.elements().all(|b| {
                !self.related(a, b)
                    || s.elements().all(|c| {
                        self.related(s.mul(c, a), s.mul(c, b)) && self.related(s.mul(a, c), s.mul(b, c))
                    })
            })
        })
    }

    /// The quotient table; class `c` becomes element `c`. Also returns the
    /// projection.
    pub fn quotient(&self, s: &InvSemigroup) -> Result<(InvSemigroup, Vec<Elem>)> {
        if !self.is_congruence_on(s) {
            return Err(Error::NotHomomorphism("relation is not a congruence".into()));
        }
        let reps: Vec<Elem> = self.classes().iter().map(|c| c[0]).collect();
        let q = InvSemigroup::from_fn(reps.len(), |x, y| self.class_of[s.mul(reps[x], reps[y])])?;
        Ok((q, self.class_of.clone()))
    }

    /// Whether distinct idempotents always lie in distinct classes.
    pub fn is_idempotent_separating(&self, s: &InvSemigroup) -> bool {
        let es = s.idempotents();
        es.iter()
            .enumerate()
            .all(|(i, &e)| es[i + 1..].iter().all(|&f| !self.related(e, f)))
    }

    /// The class of the zero.
    pub fn kernel(&self, s: &InvSemigroup) -> Result<Vec<Elem>> {
        let z = s.require_zero()?;
        Ok(s.elements().filter(|&a| self.related(a, z)).collect())
    }

    /// The least congruence containing `self` and the given pairs.
    pub fn join_pairs(&self, s: &InvSemigroup, pairs: &[(Elem, Elem)]) -> Congruence {
        let mut uf = UnionFind::new(s.size());
        for (a, &c) in self.class_of.iter().enumerate() {
            // link every element to the first member of its class
            let first = self.class_of.iter().position(|&d| d == c).unwrap();
            uf.union(a, first);
        }
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        close_under_multiplication(s, &mut uf);
        Congruence::from_classes((0..s.size()).map(|a| uf.find(a)).collect())
    }

    pub fn generated_by(s: &InvSemigroup, pairs: &[(Elem, Elem)]) -> Congruence {
        Congruence::equality(s.size()).join_pairs(s, pairs)
    }

    pub fn join(&self, other: &Congruence, s: &InvSemigroup) -> Congruence {
        let pairs: Vec<(Elem, Elem)> = other
            .classes()
            .iter()
            .flat_map(|c| c.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
            .collect();
        self.join_pairs(s, &pairs)
    }

    /// Every congruence on `s`, found as joins of principal congruences.
    /// Exponential; meant for carriers of a dozen elements or so.
    pub fn enumerate_all(s: &InvSemigroup) -> Vec<Congruence> {
        let n = s.size();
        let mut principal: BTreeSet<Congruence> = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                principal.insert(Congruence::generated_by(s, &[(a, b)]));
            }
        }
        let principal: Vec<Congruence> = principal.into_iter().collect();
        let mut found: BTreeSet<Congruence> = BTreeSet::new();
        found.insert(Congruence::equality(n));
        let mut frontier = vec![Congruence::equality(n)];
        while let Some(c) = frontier.pop() {
            for p in &principal {
                if p.is_contained_in(&c) {
                    continue;
                }
                let j = c.join(p, s);
                if found.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        found.into_iter().collect()
    }
}

fn close_under_multiplication(s: &InvSemigroup, uf: &mut UnionFind) {
    let n = s.size();
    loop {
        let mut changed = false;
        for a in 0..n {
            let ra = uf.find(a);
            if ra == a {
                continue;
            }
            for c in 0..n {
                changed |= uf.union(s.mul(c, a), s.mul(c, ra));
                changed |= uf.union(s.mul(a, c), s.mul(ra, c));
            }
        }
        if !changed {
            break;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, a: usize) -> usize {
        let mut root = a;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = a;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Keeps the smaller root; returns true if two classes merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn normalization() {
        let c = Congruence::from_classes(vec![5, 2, 5, 9]);
        assert_eq!(c.class_of(), &[0, 1, 0, 2]);
        assert_eq!(c.class_count(), 3);
        assert!(Congruence::equality(4).is_contained_in(&c));
        assert!(c.is_contained_in(&Congruence::universal(4)));
        assert!(!c.is_contained_in(&Congruence::equality(4)));
    }

    #[test]
    fn congruences_of_a_chain() {
        // congruences of a 3-chain under min: partitions into intervals
        let c = families::chain(3);
        let all = Congruence::enumerate_all(&c);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|x| x.is_congruence_on(&c)));
    }

    #[test]
    fn generated_congruence_is_closed() {
        let i2 = families::symmetric_inverse_monoid(2);
        // collapsing an atom with 0 kills every non-unit
        let c = Congruence::generated_by(&i2, &[(1, 0)]);
        assert!(c.is_congruence_on(&i2));
        assert_eq!(c.classes(), vec![vec![0, 1, 2, 3, 4], vec![5], vec![6]]);
    }

    #[test]
    fn mu_of_zero_group_is_maximal_idempotent_separating() {
        let z = families::zero_group(&families::cyclic_group(2));
        let mu = z.mu_and_quotient().mu;
        for c in Congruence::enumerate_all(&z) {
            if c.is_idempotent_separating(&z) {
                assert!(c.is_contained_in(&mu));
            }
        }
    }
}
