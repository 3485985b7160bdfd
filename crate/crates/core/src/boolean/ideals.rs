use std::collections::BTreeSet;

use super::morphism::{is_weakly_meet_preserving, join_failure};
use super::BooleanSemigroup;
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::set::ElemSet;
use crate::Elem;

/// A semigroup ideal containing zero and closed under compatible joins.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdditiveIdeal {
    members: ElemSet,
}

impl AdditiveIdeal {
    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn is_subset(&self, other: &AdditiveIdeal) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// `u · seed · v`.
pub type Term = (Elem, Elem, Elem);

/// The least additive ideal containing some seeds, with a derivation of
/// every member as a join of terms `u · seed · v`.
#[derive(Clone, Debug)]
pub struct IdealClosure {
    pub ideal: AdditiveIdeal,
    derivation: Vec<Option<Vec<Term>>>,
}

impl IdealClosure {
    /// Terms whose products join to `a`, if `a` is a member.
    pub fn terms(&self, a: Elem) -> Option<&[Term]> {
        self.derivation[a].as_deref()
    }
}

/// A finite set `X` with `e = ⋁ d(x)` and `r(x) ≤ f` for each `x ∈ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub holds: bool,
    pub pencil: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSimplifying {
    pub holds: bool,
    /// A proper nonzero additive ideal when `holds` is false.
    pub witness: Option<AdditiveIdeal>,
}

#[derive(Clone, Debug)]
pub struct EpsilonQuotient {
    pub congruence: Congruence,
    pub quotient: BooleanSemigroup,
    pub projection: Vec<Elem>,
}

impl BooleanSemigroup {
    /// Closes `seeds` under two-sided multiplication and compatible joins.
    pub fn ideal_closure_with_terms(&self, seeds: &[Elem]) -> IdealClosure {
        let n = self.size();
        let mut derivation: Vec<Option<Vec<Term>>> = vec![None; n];
        let mut members: Vec<Elem> = Vec::new();
        let add = |x: Elem, terms: Vec<Term>, derivation: &mut Vec<Option<Vec<Term>>>, members: &mut Vec<Elem>| {
            if derivation[x].is_none() {
                derivation[x] = Some(terms);
                members.push(x);
            }
        };
        for &a in seeds {
            add(a, vec![(self.r(a), a, self.d(a))], &mut derivation, &mut members);
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            let terms = derivation[x].clone().unwrap();
            for s in 0..n {
                let left = terms.iter().map(|&(u, a, v)| (self.mul(s, u), a, v)).collect();
                add(self.mul(s, x), left, &mut derivation, &mut members);
                let right = terms.iter().map(|&(u, a, v)| (u, a, self.mul(v, s))).collect();
                add(self.mul(x, s), right, &mut derivation, &mut members);
            }
            for k in 0..i {
                let y = members[k];
                if let Some(j) = self.join(x, y) {
                    if derivation[j].is_none() {
                        let mut both: BTreeSet<Term> = terms.iter().copied().collect();
                        both.extend(derivation[y].as_ref().unwrap().iter().copied());
                        add(j, both.into_iter().collect(), &mut derivation, &mut members);
                    }
                }
            }
            i += 1;
        }
        IdealClosure {
            ideal: AdditiveIdeal {
                members: ElemSet::from_elems(n, members),
            },
            derivation,
        }
    }

    /// The least additive ideal containing `seeds`.
    pub fn ideal_closure(&self, seeds: &[Elem]) -> AdditiveIdeal {
        self.ideal_closure_with_terms(seeds).ideal
    }

    /// Checks the additive ideal axioms, naming the first violation.
    pub fn check_additive_ideal(&self, set: &ElemSet) -> Result<AdditiveIdeal> {
        if !set.contains(self.zero_id()) {
            return Err(Error::NotAnIdeal("does not contain zero".into()));
        }
        for a in set.iter() {
            for s in self.elements() {
                if !set.contains(self.mul(s, a)) || !set.contains(self.mul(a, s)) {
                    return Err(Error::NotAnIdeal(format!("not closed under multiplication at ({a}, {s})")));
                }
            }
            for b in set.iter() {
                if let Some(j) = self.join(a, b) {
                    if !set.contains(j) {
                        return Err(Error::NotAnIdeal(format!("join of {a} and {b} is missing")));
                    }
                }
            }
        }
        Ok(AdditiveIdeal { members: set.clone() })
    }

    /// Whether `e` lies in the additive ideal generated by `f`, with a
    /// verified pencil from `e` to `f` when it does.
    pub fn preceq(&self, e: Elem, f: Elem) -> Result<Pencil> {
        for x in [e, f] {
            if !self.is_idempotent(x) {
                return Err(Error::NotIdempotent(x));
            }
            if x == self.zero_id() {
                return Err(Error::ZeroIdempotent(x));
            }
        }
        let closure = self.ideal_closure_with_terms(&[f]);
        let Some(terms) = closure.terms(e) else {
            return Ok(Pencil {
                holds: false,
                pencil: None,
            });
        };
        // e = ⋁ u·f·v; each term t is an idempotent below e and
        // x = f·v·t has d(x) = t and r(x) ≤ f.
        let mut pencil: Vec<Elem> = terms
            .iter()
            .map(|&(u, _, v)| {
                let t = self.product(&[u, f, v]);
                self.product(&[f, v, t])
            })
            .filter(|&x| x != self.zero_id())
            .collect();
        pencil.sort_unstable();
        pencil.dedup();
        self.check_pencil(e, f, &pencil)?;
        Ok(Pencil {
            holds: true,
            pencil: Some(pencil),
        })
    }

    pub fn check_pencil(&self, e: Elem, f: Elem, pencil: &[Elem]) -> Result<()> {
        if let Some(&x) = pencil.iter().find(|&&x| !self.leq(self.r(x), f)) {
            return Err(Error::VerificationFailed(format!("pencil element {x} has range outside {f}")));
        }
        let domains: Vec<Elem> = pencil.iter().map(|&x| self.d(x)).collect();
        if self.join_all(&domains)? != e {
            return Err(Error::VerificationFailed(format!("pencil domains do not join to {e}")));
        }
        Ok(())
    }

    /// Holds when every nonzero idempotent generates all of `S`. Otherwise
    /// the witness is the largest proper ideal generated by one element,
    /// ties going to the least generator.
    pub fn is_zero_simplifying(&self) -> ZeroSimplifying {
        let n = self.size();
        let holds = self
            .idempotents()
            .iter()
            .filter(|&&f| f != self.zero_id())
            .all(|&f| self.ideal_closure(&[f]).len() == n);
        if holds {
            return ZeroSimplifying { holds, witness: None };
        }
        let mut best: Option<AdditiveIdeal> = None;
        for a in self.nonzero() {
            let ideal = self.ideal_closure(&[a]);
            if ideal.len() < n && best.as_ref().map_or(true, |b| ideal.len() > b.len()) {
                best = Some(ideal);
            }
        }
        ZeroSimplifying { holds, witness: best }
    }

    /// Simple in the additive sense: 0-simplifying and fundamental.
    pub fn is_simple(&self) -> bool {
        self.is_zero_simplifying().holds && self.is_fundamental().fundamental
    }

    /// Every additive ideal, ordered by size then members.
    pub fn additive_ideals(&self) -> Vec<AdditiveIdeal> {
        let bottom = self.ideal_closure(&[self.zero_id()]);
        let mut found: BTreeSet<AdditiveIdeal> = BTreeSet::new();
        found.insert(bottom.clone());
        let mut frontier = vec![bottom];
        while let Some(ideal) = frontier.pop() {
            for a in self.elements().filter(|&a| !ideal.contains(a)) {
                let mut seeds = ideal.to_vec();
                seeds.push(a);
                let bigger = self.ideal_closure(&seeds);
                if found.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        let mut all: Vec<AdditiveIdeal> = found.into_iter().collect();
        all.sort_by_key(|i| (i.len(), i.to_vec()));
        all
    }

    /// `(a, b) ∈ ε_I` iff some `c ≤ a, b` has `a ∖ c` and `b ∖ c` in `I`.
    pub fn epsilon_related(&self, ideal: &AdditiveIdeal, a: Elem, b: Elem) -> bool {
        self.elements().any(|c| {
            self.leq(c, a)
                && self.leq(c, b)
                && ideal.contains(self.relative_complement(a, c).unwrap())
                && ideal.contains(self.relative_complement(b, c).unwrap())
        })
    }

    /// The congruence `ε_I`, checked to be an equivalence and compatible
    /// with multiplication.
    pub fn epsilon(&self, ideal: &AdditiveIdeal) -> Result<Congruence> {
        self.check_additive_ideal(ideal.members())?;
        let n = self.size();
        let related: Vec<bool> = (0..n * n)
            .map(|i| self.epsilon_related(ideal, i / n, i % n))
            .collect();
        let labels: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| related[a * n + b]).unwrap())
            .collect();
        for i in 0..n * n {
            if related[i] != (labels[i / n] == labels[i % n]) {
                return Err(Error::VerificationFailed(format!(
                    "epsilon is not an equivalence at ({}, {})",
                    i / n,
                    i % n
                )));
            }
        }
        let congruence = Congruence::from_classes(labels);
        if !congruence.is_congruence_on(self) {
            return Err(Error::VerificationFailed("epsilon is not a congruence".into()));
        }
        Ok(congruence)
    }

    /// `S / ε_I` with its projection, checked to be Boolean, additive with
    /// kernel exactly `I`, and weakly meet preserving.
    pub fn epsilon_quotient(&self, ideal: &AdditiveIdeal) -> Result<EpsilonQuotient> {
        let congruence = self.epsilon(ideal)?;
        let (q, projection) = congruence.quotient(self)?;
        let quotient = BooleanSemigroup::new(q)
            .map_err(|e| Error::VerificationFailed(format!("quotient by epsilon: {e}")))?;
        let kernel: Vec<Elem> = self
            .elements()
            .filter(|&a| projection[a] == quotient.zero_id())
            .collect();
        if kernel != ideal.to_vec() {
            return Err(Error::VerificationFailed("kernel of the epsilon projection".into()));
        }
        if let Some((a, b)) = join_failure(self, &quotient, &projection) {
            return Err(Error::VerificationFailed(format!(
                "epsilon projection does not preserve the join of {a} and {b}"
            )));
        }
        if !is_weakly_meet_preserving(self, &quotient, &projection) {
            return Err(Error::VerificationFailed("epsilon projection is not weakly meet preserving".into()));
        }
        Ok(EpsilonQuotient {
            congruence,
            quotient,
            projection,
        })
    }

    /// Whether `c` is an additive congruence: the quotient is Boolean and
    /// the projection preserves compatible joins.
    pub fn is_additive_congruence(&self, c: &Congruence) -> bool {
        let Ok((q, projection)) = c.quotient(self) else {
            return false;
        };
        match BooleanSemigroup::new(q) {
            Ok(quotient) => join_failure(self, &quotient, &projection).is_none(),
            Err(_) => false,
        }
    }
}
