//! Finite posets given by a dense `leq` matrix: up-sets, down-sets and
//! bounds found by exhaustive scan.

use crate::set::ElemSet;
use crate::Elem;

/// A partial order on `0..size`, stored as a boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalOrder {
    size: usize,
    leq: Vec<bool>,
}

impl NaturalOrder {
    pub(crate) fn from_fn(size: usize, leq: impl Fn(Elem, Elem) -> bool) -> Self {
        let mut m = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                m.push(leq(a, b));
            }
        }
        NaturalOrder { size, leq: m }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    #[inline]
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    /// `a↓`, in increasing id order.
    pub fn down(&self, a: Elem) -> Vec<Elem> {
        (0..self.size).filter(|&x| self.leq(x, a)).collect()
    }

    /// `a↑`, in increasing id order.
    pub fn up(&self, a: Elem) -> Vec<Elem> {
        (0..self.size).filter(|&x| self.leq(a, x)).collect()
    }

    pub fn down_set(&self, a: Elem) -> ElemSet {
        ElemSet::from_elems(self.size, self.down(a))
    }

    pub fn up_set(&self, a: Elem) -> ElemSet {
        ElemSet::from_elems(self.size, self.up(a))
    }

    /// `A↓` for an arbitrary subset.
    pub fn down_closure(&self, set: &ElemSet) -> ElemSet {
        let mut out = ElemSet::new(self.size);
        for x in 0..self.size {
            if set.iter().any(|a| self.leq(x, a)) {
                out.insert(x);
            }
        }
        out
    }

    /// `A↑` for an arbitrary subset.
    pub fn up_closure(&self, set: &ElemSet) -> ElemSet {
        let mut out = ElemSet::new(self.size);
        for x in 0..self.size {
            if set.iter().any(|a| self.leq(a, x)) {
                out.insert(x);
            }
        }
        out
    }

    pub fn is_order_ideal(&self, set: &ElemSet) -> bool {
        set.iter()
            .all(|a| (0..self.size).all(|x| !self.leq(x, a) || set.contains(x)))
    }

    /// Greatest element of `set` that lies below every element of `set`'s
    /// upper-bound set, i.e. the greatest lower bound of the elements in
    /// `items`.
    pub fn meet_of(&self, items: &[Elem]) -> Option<Elem> {
        let lower: Vec<Elem> = (0..self.size)
            .filter(|&x| items.iter().all(|&a| self.leq(x, a)))
            .collect();
        self.greatest(&lower)
    }

    /// Least upper bound of `items`, if one exists.
    pub fn join_of(&self, items: &[Elem]) -> Option<Elem> {
        let upper: Vec<Elem> = (0..self.size)
            .filter(|&x| items.iter().all(|&a| self.leq(a, x)))
            .collect();
        self.least(&upper)
    }

    /// The element of `set` above all the others, if any.
    pub fn greatest(&self, set: &[Elem]) -> Option<Elem> {
        set.iter()
            .copied()
            .find(|&g| set.iter().all(|&x| self.leq(x, g)))
    }

    /// The element of `set` below all the others, if any.
    pub fn least(&self, set: &[Elem]) -> Option<Elem> {
        set.iter()
            .copied()
            .find(|&l| set.iter().all(|&x| self.leq(l, x)))
    }

    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn is_partial_order(&self) -> bool {
        let n = self.size;
        (0..n).all(|a| self.leq(a, a))
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq(a, b) && self.leq(b, a))))
            && (0..n).all(|a| {
                (0..n).all(|b| !self.leq(a, b) || (0..n).all(|c| !self.leq(b, c) || self.leq(a, c)))
            })
    }
}
