//! Boolean inverse semigroups: recognition, relative complements and
//! orthogonal decompositions.

mod bisections;
mod ideals;
mod morphism;

use std::ops::Deref;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::semigroup::InvSemigroup;
use crate::set::ElemSet;
use crate::Elem;

pub use bisections::{k_of_groupoid, theta_iso, KOfGroupoid, ThetaIso};
pub use ideals::{AdditiveIdeal, EpsilonQuotient, IdealClosure, Pencil, ZeroSimplifying};
pub use morphism::{analyze_morphism, is_weakly_meet_preserving, join_failure, Factorization, MorphismAnalysis};

/// Largest carrier this crate will tabulate when building a semigroup.
pub const MAX_TABULATED: usize = 2048;

const NONE: u32 = u32::MAX;

/// Why a semigroup fails to be Boolean. Each variant carries the first
/// witness in id order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BooleanFailure {
    #[error("no zero element")]
    NoZero,
    #[error("compatible pair ({0}, {1}) has no join")]
    MissingJoin(Elem, Elem),
    #[error("{c}*({a} v {b}) differs from {c}*{a} v {c}*{b}")]
    NotLeftDistributive { c: Elem, a: Elem, b: Elem },
    #[error("({a} v {b})*{c} differs from {a}*{c} v {b}*{c}")]
    NotRightDistributive { c: Elem, a: Elem, b: Elem },
    #[error("idempotent {e} has no complement below {f}")]
    NoComplement { e: Elem, f: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanCheck {
    pub boolean: bool,
    pub failure: Option<BooleanFailure>,
}

/// Checks that compatible pairs have joins, that multiplication
/// distributes over them, and that every interval `[0, f]` of idempotents
/// is complemented.
pub fn check_boolean(s: &InvSemigroup) -> BooleanCheck {
    match Tables::build(s) {
        Ok(_) => BooleanCheck {
            boolean: true,
            failure: None,
        },
        Err(f) => BooleanCheck {
            boolean: false,
            failure: Some(f),
        },
    }
}

/// A validated Boolean inverse semigroup with its compatible joins and
/// idempotent complements tabulated.
#[derive(Clone, Debug)]
pub struct BooleanSemigroup {
    base: InvSemigroup,
    tables: Tables,
}

#[derive(Clone, Debug)]
struct Tables {
    zero: Elem,
    /// `joins[a * n + b]` is `a ∨ b` for compatible pairs.
    joins: Vec<u32>,
    idem_index: Vec<u32>,
    /// `complements[i * m + j]` is `f_i ∖ e_j` for `e_j ≤ f_i`.
    complements: Vec<u32>,
}

impl Tables {
    fn build(s: &InvSemigroup) -> Result<Tables, BooleanFailure> {
        let zero = s.zero().ok_or(BooleanFailure::NoZero)?;
        let n = s.size();
        let order = s.order();
        let ups: Vec<ElemSet> = (0..n).map(|a| order.up_set(a)).collect();

        let mut joins = vec![NONE; n * n];
        for a in 0..n {
            joins[a * n + a] = a as u32;
            for b in a + 1..n {
                if !s.is_compatible(a, b) {
                    continue;
                }
                let mut upper = ups[a].clone();
                upper.intersect_with(&ups[b]);
                let least = upper.iter().find(|&u| upper.is_subset(&ups[u]));
                match least {
                    Some(j) => {
                        joins[a * n + b] = j as u32;
                        joins[b * n + a] = j as u32;
                    }
                    None => return Err(BooleanFailure::MissingJoin(a, b)),
                }
            }
        }

        // Distributivity for every element follows from distributivity for
        // a generating set, since compatible pairs stay compatible under
        // multiplication.
        let gens = s.generating_set();
        for a in 0..n {
            for b in a + 1..n {
                let j = joins[a * n + b];
                if j == NONE {
                    continue;
                }
                let j = j as usize;
                for &c in &gens {
                    if s.mul(c, j) as u32 != joins[s.mul(c, a) * n + s.mul(c, b)] {
                        return Err(BooleanFailure::NotLeftDistributive { c, a, b });
                    }
                    if s.mul(j, c) as u32 != joins[s.mul(a, c) * n + s.mul(b, c)] {
                        return Err(BooleanFailure::NotRightDistributive { c, a, b });
                    }
                }
            }
        }

        let es = s.idempotents();
        let m = es.len();
        let mut idem_index = vec![NONE; n];
        for (i, &e) in es.iter().enumerate() {
            idem_index[e] = i as u32;
        }
        let mut complements = vec![NONE; m * m];
        for (j, &e) in es.iter().enumerate() {
            for &g in es {
                if s.mul(e, g) == zero {
                    let f = joins[e * n + g] as usize;
                    let slot = &mut complements[idem_index[f] as usize * m + j];
                    if *slot == NONE {
                        *slot = g as u32;
                    }
                }
            }
        }
        for (i, &f) in es.iter().enumerate() {
            for (j, &e) in es.iter().enumerate() {
                if s.leq(e, f) && complements[i * m + j] == NONE {
                    return Err(BooleanFailure::NoComplement { e, f });
                }
            }
        }
        Ok(Tables {
            zero,
            joins,
            idem_index,
            complements,
        })
    }
}

impl BooleanSemigroup {
    pub fn new(base: InvSemigroup) -> Result<Self> {
        let tables = Tables::build(&base).map_err(Error::NotBoolean)?;
        Ok(BooleanSemigroup { base, tables })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(InvSemigroup::parse(text)?)
    }

    pub fn base(&self) -> &InvSemigroup {
        &self.base
    }

    pub fn into_base(self) -> InvSemigroup {
        self.base
    }

    pub fn zero_id(&self) -> Elem {
        self.tables.zero
    }

    /// The identity, when this is a monoid.
    pub fn top(&self) -> Option<Elem> {
        self.base.identity()
    }

    /// `a ∨ b`; present exactly when `a` and `b` are compatible.
    pub fn join(&self, a: Elem, b: Elem) -> Option<Elem> {
        let j = self.tables.joins[a * self.base.size() + b];
        (j != NONE).then_some(j as Elem)
    }

    /// Join of a finite family; the empty join is the zero.
    pub fn join_all(&self, items: &[Elem]) -> Result<Elem> {
        for (i, &a) in items.iter().enumerate() {
            if let Some(&b) = items[i + 1..].iter().find(|&&b| !self.base.is_compatible(a, b)) {
                return Err(Error::NotCompatible(a, b));
            }
        }
        Ok(items.iter().fold(self.tables.zero, |acc, &a| {
            self.join(acc, a).expect("pairwise compatible family has a join")
        }))
    }

    /// `f ∖ e` for idempotents `e ≤ f`.
    pub fn complement(&self, f: Elem, e: Elem) -> Result<Elem> {
        let (i, j) = (self.tables.idem_index[f], self.tables.idem_index[e]);
        if i == NONE {
            return Err(Error::NotIdempotent(f));
        }
        if j == NONE {
            return Err(Error::NotIdempotent(e));
        }
        let m = self.base.idempotents().len();
        match self.tables.complements[i as usize * m + j as usize] {
            NONE => Err(Error::NotBelow { x: f, y: e }),
            g => Ok(g as Elem),
        }
    }

    /// `x ∖ y = x·(d(x) ∖ d(y))` for `y ≤ x`.
    pub fn relative_complement(&self, x: Elem, y: Elem) -> Result<Elem> {
        if !self.base.leq(y, x) {
            return Err(Error::NotBelow { x, y });
        }
        let c = self.complement(self.base.d(x), self.base.d(y))?;
        Ok(self.base.mul(x, c))
    }

    /// The greatest lower bound; always exists in a finite Boolean inverse
    /// semigroup.
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.base.meet(a, b).expect("binary meets exist")
    }

    /// Replaces each `s_i` by `s_i ∖ ((s_1 ∨ … ∨ s_{i-1}) ∧ s_i)`, giving an
    /// orthogonal family with the same join and `t_i ≤ s_i`.
    pub fn orthogonalize(&self, items: &[Elem]) -> Result<Vec<Elem>> {
        self.join_all(items)?;
        let mut out = Vec::with_capacity(items.len());
        let mut prefix = self.tables.zero;
        for &s in items {
            let overlap = self.meet(prefix, s);
            out.push(self.relative_complement(s, overlap)?);
            prefix = self.join(prefix, s).expect("compatible");
        }
        Ok(out)
    }

    /// Componentwise product; `(a, b)` has id `a * |T| + b`.
    pub fn direct_product(&self, other: &BooleanSemigroup) -> BooleanSemigroup {
        BooleanSemigroup::new(self.base.direct_product(&other.base))
            .expect("a product of Boolean inverse semigroups is Boolean")
    }

    /// Atoms in id order.
    pub fn atoms(&self) -> Vec<Elem> {
        self.base.atoms().expect("has zero")
    }

    /// Atoms below `a`.
    pub fn atoms_below(&self, a: Elem) -> Vec<Elem> {
        self.atoms().into_iter().filter(|&x| self.base.leq(x, a)).collect()
    }
}

impl Deref for BooleanSemigroup {
    type Target = InvSemigroup;

    fn deref(&self) -> &InvSemigroup {
        &self.base
    }
}

impl PartialEq for BooleanSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl Eq for BooleanSemigroup {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn recognizes_examples() {
        assert!(check_boolean(&families::symmetric_inverse_monoid(2)).boolean);
        assert_eq!(
            check_boolean(&families::brandt(2)).failure,
            Some(BooleanFailure::MissingJoin(1, 2))
        );
        assert_eq!(
            check_boolean(&families::chain(3)).failure,
            Some(BooleanFailure::NoComplement { e: 1, f: 2 })
        );
        assert_eq!(check_boolean(&families::cyclic_group(2)).failure, Some(BooleanFailure::NoZero));
        assert!(check_boolean(&families::powerset(3)).boolean);
        assert!(check_boolean(&families::trivial()).boolean);
    }

    #[test]
    fn relative_complements_in_i2() {
        let i2 = BooleanSemigroup::new(families::symmetric_inverse_monoid(2)).unwrap();
        assert_eq!(i2.relative_complement(5, 1).unwrap(), 2);
        assert_eq!(i2.relative_complement(6, 3).unwrap(), 4);
        assert_eq!(i2.relative_complement(6, 6).unwrap(), 0);
        assert_eq!(i2.relative_complement(6, 0).unwrap(), 6);
        assert_eq!(i2.relative_complement(1, 5).unwrap_err(), Error::NotBelow { x: 1, y: 5 });
    }

    #[test]
    fn orthogonalize_examples() {
        let p = BooleanSemigroup::new(families::powerset(2)).unwrap();
        assert_eq!(p.orthogonalize(&[1, 3]).unwrap(), vec![1, 2]);
        assert_eq!(p.orthogonalize(&[1, 2]).unwrap(), vec![1, 2]);
        assert_eq!(p.orthogonalize(&[3]).unwrap(), vec![3]);
        let i2 = BooleanSemigroup::new(families::symmetric_inverse_monoid(2)).unwrap();
        assert_eq!(i2.orthogonalize(&[5, 6]).unwrap_err(), Error::NotCompatible(5, 6));
    }

    #[test]
    fn products() {
        let i2 = BooleanSemigroup::new(families::symmetric_inverse_monoid(2)).unwrap();
        let z = BooleanSemigroup::new(families::zero_group(&families::cyclic_group(2))).unwrap();
        let p = i2.direct_product(&z);
        assert_eq!(p.size(), 21);
        let zz = z.direct_product(&z);
        assert_eq!(zz.size(), 9);
        let t = BooleanSemigroup::new(families::trivial()).unwrap();
        assert_eq!(i2.direct_product(&t), i2);
    }
}
