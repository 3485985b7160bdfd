//! The invariant suite: every law quantified over all applicable tuples of
//! one structure, with a witness tuple on failure.
//!
//! Laws are keyed by short stable names that the command-line report prints.

use std::fmt;

use crate::boolean::{is_weakly_meet_preserving, k_of_groupoid, theta_iso, BooleanSemigroup};
use crate::booleanization::{booleanize, enumerate_filters, filter_groupoid, gamma_extension};
use crate::congruence::Congruence;
use crate::error::Error;
use crate::groupoid::{groupoid_iso, is_groupoid_iso, Groupoid};
use crate::rook::decompose;
use crate::semigroup::InvSemigroup;
use crate::typemon::{
    ideal_triple, mu_type_invariance, o_ideal_model_check, refinement_check, type_monoid, type_via_matrices,
};
use crate::{check_boolean, Elem};

/// Congruence lattices are enumerated exhaustively up to this size.
pub const CONGRUENCE_SCAN_LIMIT: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass { checked: usize },
    Fail { witness: Vec<Elem>, detail: String },
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl LawResult {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail { .. })
    }
}

impl fmt::Display for LawResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass { checked } => write!(f, "pass  {} ({checked} cases)", self.name),
            Outcome::Fail { witness, detail } => write!(f, "FAIL  {} at {witness:?}: {detail}", self.name),
            Outcome::Skipped(why) => write!(f, "skip  {} ({why})", self.name),
        }
    }
}

struct Fail(Vec<Elem>, String);

#[derive(Default)]
struct Counter(usize);

impl Counter {
    fn check(&mut self, ok: bool, witness: &[Elem], detail: &str) -> Result<(), Fail> {
        self.0 += 1;
        if ok {
            Ok(())
        } else {
            Err(Fail(witness.to_vec(), detail.to_string()))
        }
    }
}

fn law(name: &'static str, body: impl FnOnce(&mut Counter) -> Result<(), Fail>) -> LawResult {
    let mut c = Counter::default();
    let outcome = match body(&mut c) {
        Ok(()) => Outcome::Pass { checked: c.0 },
        Err(Fail(witness, detail)) => Outcome::Fail { witness, detail },
    };
    LawResult { name, outcome }
}

fn skipped(name: &'static str, why: impl Into<String>) -> LawResult {
    LawResult {
        name,
        outcome: Outcome::Skipped(why.into()),
    }
}

fn err(e: Error) -> Fail {
    Fail(Vec::new(), e.to_string())
}

/// Laws of an arbitrary finite inverse semigroup.
pub fn semigroup_laws(s: &InvSemigroup) -> Vec<LawResult> {
    let n = s.size();
    let mut out = Vec::new();
    out.push(law("natural-order", |c| {
        for a in 0..n {
            for b in 0..n {
                if s.leq(a, b) {
                    let ok = s.leq(s.d(a), s.d(b)) && s.leq(s.r(a), s.r(b));
                    c.check(ok, &[a, b], "d or r is not monotone")?;
                }
            }
        }
        Ok(())
    }));
    out.push(law("l-and-r-order", |c| {
        for a in 0..n {
            let below = s.order().down(a);
            for &x in &below {
                for &y in &below {
                    if s.d(x) == s.d(y) || s.r(x) == s.r(y) {
                        c.check(x == y, &[x, y, a], "distinct elements below a share d or r")?;
                    }
                }
            }
        }
        Ok(())
    }));
    out.push(law("wedge", |c| {
        for a in 0..n {
            for b in 0..n {
                let m = s.meet(a, b);
                let good_meet = m.is_some_and(|m| {
                    s.d(m) == s.mul(s.d(a), s.d(b)) && s.r(m) == s.mul(s.r(a), s.r(b))
                });
                c.check(s.is_compatible(a, b) == good_meet, &[a, b], "compatibility and meet disagree")?;
                if s.is_compatible(a, b) {
                    let m = m.unwrap();
                    let (ai, bi) = (s.inv(a), s.inv(b));
                    let forms = [s.product(&[a, bi, b]), s.product(&[b, bi, a]), s.product(&[a, ai, b]), s.product(&[b, ai, a])];
                    c.check(forms.iter().all(|&x| x == m), &[a, b], "meet formulas disagree")?;
                }
            }
        }
        Ok(())
    }));
    out.push(law("fish", |c| {
        for a in 0..n {
            for b in a + 1..n {
                let Some(m) = s.meet(a, b) else { continue };
                for x in 0..n {
                    let left = s.meet(s.mul(x, a), s.mul(x, b));
                    c.check(left == Some(s.mul(x, m)), &[x, a, b], "left multiplication does not preserve the meet")?;
                    let right = s.meet(s.mul(a, x), s.mul(b, x));
                    c.check(right == Some(s.mul(m, x)), &[a, b, x], "right multiplication does not preserve the meet")?;
                }
            }
        }
        Ok(())
    }));
    out.push(law("restricted-product", |c| {
        for a in 0..n {
            for b in 0..n {
                let a1 = s.product(&[a, b, s.inv(b)]);
                let b1 = s.product(&[s.inv(a), a, b]);
                let ok = s.leq(a1, a) && s.leq(b1, b) && s.d(a1) == s.r(b1) && s.mul(a1, b1) == s.mul(a, b);
                c.check(ok, &[a, b], "ab is not a restricted product of restrictions")?;
                if s.d(a) != s.r(b) {
                    c.check(a1 != a || b1 != b, &[a, b], "unrestricted product needs a strict restriction")?;
                }
                let mut setwise: Vec<Elem> = s
                    .order()
                    .down(a)
                    .into_iter()
                    .flat_map(|x| s.order().down(b).into_iter().map(move |y| (x, y)))
                    .map(|(x, y)| s.mul(x, y))
                    .collect();
                setwise.sort_unstable();
                setwise.dedup();
                c.check(setwise == s.order().down(s.mul(a, b)), &[a, b], "down-sets do not multiply")?;
            }
        }
        Ok(())
    }));
    out.push(law("d-relation", |c| {
        let blocks = s.d_relation_idempotents();
        let total: usize = blocks.iter().map(Vec::len).sum();
        c.check(total == s.idempotents().len(), &[], "blocks do not partition the idempotents")?;
        for block in &blocks {
            for &e in block {
                for &f in block {
                    c.check(s.d_related(e, f), &[e, f], "a block contains unrelated idempotents")?;
                }
            }
        }
        Ok(())
    }));
    out.push(law("mu", |c| {
        let mq = s.mu_and_quotient();
        c.check(mq.mu.is_congruence_on(s), &[], "mu is not a congruence")?;
        c.check(mq.mu.is_idempotent_separating(s), &[], "mu is not idempotent-separating")?;
        c.check(s.is_homomorphism(&mq.quotient, &mq.projection), &[], "projection is not a homomorphism")?;
        let f = s.is_fundamental();
        c.check(f.fundamental == (mq.mu.class_count() == n), &[], "fundamental flag disagrees with mu")?;
        if n <= CONGRUENCE_SCAN_LIMIT {
            for other in Congruence::enumerate_all(s) {
                if other.is_idempotent_separating(s) {
                    c.check(other.is_contained_in(&mq.mu), &[], "an idempotent-separating congruence escapes mu")?;
                }
            }
        }
        Ok(())
    }));

    let Some(z) = s.zero() else {
        for name in ["atom-idempotent", "oj", "buffs"] {
            out.push(skipped(name, "no zero"));
        }
        return out;
    };
    out.push(law("atom-idempotent", |c| {
        let atoms = s.atoms().map_err(err)?;
        for a in 0..n {
            for b in 0..n {
                if s.d_related(s.d(a), s.d(b)) {
                    c.check(atoms.contains(&a) == atoms.contains(&b), &[a, b], "D-related elements differ on atomicity")?;
                }
            }
        }
        Ok(())
    }));
    let orth = |a: Elem, b: Elem| s.mul(s.inv(a), b) == z && s.mul(a, s.inv(b)) == z;
    out.push(law("oj", |c| {
        for a in 0..n {
            for b in 0..n {
                if orth(a, b) {
                    for x in 0..n {
                        let ok = orth(s.mul(x, a), s.mul(x, b)) && orth(s.mul(a, x), s.mul(b, x));
                        c.check(ok, &[a, b, x], "multiplication breaks orthogonality")?;
                    }
                }
            }
        }
        Ok(())
    }));
    out.push(law("buffs", |c| {
        for a in 0..n {
            for b in 0..n {
                if s.is_compatible(a, b) {
                    let one = orth(a, b);
                    let two = s.mul(s.d(a), s.d(b)) == z;
                    let three = s.mul(s.r(a), s.r(b)) == z;
                    c.check(one == two && two == three, &[a, b], "orthogonality criteria disagree")?;
                }
            }
        }
        Ok(())
    }));
    out
}

/// `x ∖ y` for idempotents `y ≤ x`, found by scanning for the unique
/// idempotent `g ≤ x` with `gy = 0` and `g ∨ y = x`.
fn idempotent_difference(s: &BooleanSemigroup, x: Elem, y: Elem) -> Option<Elem> {
    let z = s.zero_id();
    let mut found = s
        .idempotents()
        .iter()
        .copied()
        .filter(|&g| s.leq(g, x) && s.mul(g, y) == z && s.join(g, y) == Some(x));
    let g = found.next()?;
    found.next().is_none().then_some(g)
}

/// Laws specific to Boolean inverse semigroups.
pub fn boolean_laws(s: &BooleanSemigroup) -> Vec<LawResult> {
    let n = s.size();
    let z = s.zero_id();
    let diff = |x: Elem, y: Elem| s.relative_complement(x, y).expect("y below x");
    let pairs_below: Vec<(Elem, Elem)> = (0..n)
        .flat_map(|x| s.order().down(x).into_iter().map(move |y| (x, y)))
        .collect();
    let orth = |a: Elem, b: Elem| s.is_orthogonal(a, b).unwrap();
    let mut out = Vec::new();

    out.push(law("eggs", |c| {
        let mut families: Vec<Vec<Elem>> = Vec::new();
        for a in 0..n {
            families.push(vec![a]);
            for b in a + 1..n {
                if s.join(a, b).is_none() {
                    continue;
                }
                families.push(vec![a, b]);
                for d in b + 1..n {
                    if s.join_all(&[a, b, d]).is_ok() {
                        families.push(vec![a, b, d]);
                    }
                }
            }
        }
        for fam in &families {
            let j = s.join_all(fam).map_err(err)?;
            for x in 0..n {
                let parts: Vec<Elem> = fam.iter().map(|&a| s.meet(a, x)).collect();
                let rhs = s.join_all(&parts).ok();
                let mut w = fam.clone();
                w.push(x);
                c.check(rhs == Some(s.meet(x, j)), &w, "meet does not distribute over the join")?;
            }
        }
        Ok(())
    }));
    out.push(law("chicken", |c| {
        for &(x, y) in &pairs_below {
            let d = diff(x, y);
            let dd = idempotent_difference(s, s.d(x), s.d(y));
            let rd = idempotent_difference(s, s.r(x), s.r(y));
            c.check(dd == Some(s.d(d)), &[x, y], "d(x \\ y) is not d(x) \\ d(y)")?;
            c.check(rd == Some(s.r(d)), &[x, y], "r(x \\ y) is not r(x) \\ r(y)")?;
            c.check(orth(y, d) && s.join(y, d) == Some(x), &[x, y], "x is not y joined with x \\ y")?;
            for a in s.order().down(x) {
                if orth(a, y) && s.join(y, a) == Some(x) {
                    c.check(a == d, &[x, y, a], "complement below x is not unique")?;
                }
            }
        }
        Ok(())
    }));
    out.push(law("pork", |c| {
        for x in 0..n {
            for y in 0..n {
                let Some(j) = s.join(x, y) else { continue };
                let t = diff(x, s.meet(x, y));
                c.check(orth(t, y) && s.join(t, y) == Some(j), &[x, y], "join is not an orthogonal join")?;
            }
        }
        Ok(())
    }));
    out.push(law("orthogonal", |c| {
        let mut families: Vec<Vec<Elem>> = Vec::new();
        for a in 1..n {
            for b in a + 1..n {
                if a == z || b == z || s.join(a, b).is_none() {
                    continue;
                }
                families.push(vec![a, b]);
                for d in b + 1..n {
                    if d != z && s.join_all(&[a, b, d]).is_ok() {
                        families.push(vec![a, b, d]);
                    }
                }
            }
        }
        for fam in families.iter().filter(|f| !f.contains(&z)) {
            let mut ts = vec![fam[0]];
            let mut prefix = fam[0];
            for &si in &fam[1..] {
                ts.push(diff(si, s.meet(prefix, si)));
                prefix = s.join(prefix, si).unwrap();
            }
            let pairwise = (0..ts.len()).all(|i| (i + 1..ts.len()).all(|j| orth(ts[i], ts[j])));
            let below = ts.iter().zip(fam).all(|(&t, &si)| s.leq(t, si));
            let same = s.join_all(&ts).ok() == s.join_all(fam).ok();
            c.check(pairwise && below && same, fam, "orthogonalized family is wrong")?;
        }
        Ok(())
    }));
    out.push(law("properties-of-setminus(1)", |c| {
        for &(x, y) in &pairs_below {
            c.check(s.inv(diff(x, y)) == diff(s.inv(x), s.inv(y)), &[x, y], "inverse does not commute with \\")?;
        }
        Ok(())
    }));
    out.push(law("properties-of-setminus(2)", |c| {
        for &(x, y) in &pairs_below {
            let d = diff(x, y);
            for a in 0..n {
                c.check(s.mul(a, d) == diff(s.mul(a, x), s.mul(a, y)), &[a, x, y], "left multiplication and \\")?;
                c.check(s.mul(d, a) == diff(s.mul(x, a), s.mul(y, a)), &[x, y, a], "right multiplication and \\")?;
            }
        }
        Ok(())
    }));
    out.push(law("properties-of-setminus(4)", |c| {
        for &(x, y) in &pairs_below {
            for &(u, v) in &pairs_below {
                let lhs = s.mul(diff(x, y), diff(u, v));
                let under = s.join(s.mul(x, v), s.mul(y, u)).ok_or_else(|| {
                    Fail(vec![x, y, u, v], "sv and tu are not compatible".into())
                })?;
                c.check(lhs == diff(s.mul(x, u), under), &[x, y, u, v], "product of differences")?;
            }
        }
        Ok(())
    }));
    out.push(law("properties-of-setminus(5)", |c| {
        for &(x, b) in &pairs_below {
            for a in s.order().down(b) {
                c.check(s.leq(diff(x, b), diff(x, a)), &[a, b, x], "\\ is not antitone")?;
            }
        }
        Ok(())
    }));
    out.push(law("atoms-semisimple", |c| {
        for a in s.nonzero() {
            c.check(s.join_all(&s.atoms_below(a)).ok() == Some(a), &[a], "not the join of the atoms below it")?;
        }
        Ok(())
    }));
    out.push(law("meets-semisimple", |c| {
        for a in 0..n {
            for b in a..n {
                c.check(s.base().meet(a, b).is_some(), &[a, b], "meet does not exist")?;
            }
        }
        Ok(())
    }));
    out.push(law("dichotomy", |c| {
        let atoms = s.atoms();
        c.check(n == 1 || !atoms.is_empty(), &[], "atomless")?;
        for a in s.nonzero() {
            c.check(atoms.iter().any(|&x| s.leq(x, a)), &[a], "no atom below a nonzero element")?;
        }
        Ok(())
    }));
    out
}

/// Structural checks on a semigroup: Booleanization and filters, plus,
/// for Boolean inputs, the duality, decomposition, ideal and type-monoid
/// machinery.
pub fn structure_checks(s: &InvSemigroup) -> Vec<LawResult> {
    let mut out = Vec::new();
    out.push(match booleanize(s) {
        Err(Error::TooLarge { size, limit }) => skipped("booleanization", format!("over {limit} bisections ({size}+)")),
        result => law("booleanization", |c| {
            let b = result.map_err(err)?;
            c.check(true, &[], "")?;
            let g = gamma_extension(&b, &b.beta, b.semigroup()).map_err(err)?;
            let id: Vec<Elem> = b.semigroup().elements().collect();
            c.check(g.map == id && g.unique, &[], "gamma of beta is not the identity")?;
            Ok(())
        }),
    });
    out.push(law("universal-groupoid", |c| {
        let f = enumerate_filters(s);
        c.check(f.all_principal, &[], "a proper filter is not principal")?;
        let nonzero: Vec<Elem> = s.nonzero().collect();
        let g = filter_groupoid(s, &f.proper_filters).map_err(err)?;
        let restricted = s.groupoid_on(&nonzero).map_err(err)?;
        let identity: Vec<Elem> = (0..nonzero.len()).collect();
        c.check(is_groupoid_iso(&restricted, &g, &identity), &[], "x to its up-set is not a groupoid isomorphism")?;
        Ok(())
    }));

    let bs = match BooleanSemigroup::new(s.clone()) {
        Ok(bs) => bs,
        Err(e) => {
            let why = e.to_string();
            out.extend(boolean_only_names().into_iter().map(|name| skipped(name, why.clone())));
            return out;
        }
    };
    out.extend(boolean_laws(&bs));
    out.push(law("discrete-topology", |c| {
        let f = enumerate_filters(s);
        let atoms = bs.atoms();
        c.check(f.ultrafilters.len() == atoms.len(), &[], "ultrafilters and atoms differ in number")?;
        let ups: Vec<_> = atoms.iter().map(|&a| s.order().up_set(a)).collect();
        for (i, &a) in atoms.iter().enumerate() {
            c.check(f.ultrafilters.contains(&ups[i]), &[a], "an atom's up-set is not an ultrafilter")?;
        }
        let g = filter_groupoid(s, &ups).map_err(err)?;
        let a = s.groupoid_on(&atoms).map_err(err)?;
        let identity: Vec<Elem> = (0..atoms.len()).collect();
        c.check(is_groupoid_iso(&a, &g, &identity), &[], "atoms groupoid differs from ultrafilter groupoid")?;
        Ok(())
    }));
    out.push(law("main-finite", |c| {
        let t = theta_iso(&bs).map_err(err)?;
        c.check(t.map.len() == bs.size(), &[], "theta is not total")
    }));
    out.push(law("finite", |c| {
        let d = decompose(&bs).map_err(err)?;
        c.check(d.verified, &[], "decomposition isomorphism failed the table check")
    }));
    out.push(law("noise", |c| {
        let small = bs.size() <= CONGRUENCE_SCAN_LIMIT;
        let additive: Vec<Congruence> = if small {
            Congruence::enumerate_all(s)
                .into_iter()
                .filter(|k| bs.is_additive_congruence(k))
                .collect()
        } else {
            Vec::new()
        };
        for ideal in bs.additive_ideals() {
            let eq = bs.epsilon_quotient(&ideal).map_err(err)?;
            let w = ideal.to_vec();
            c.check(bs.is_additive_congruence(&eq.congruence), &w, "epsilon is not additive")?;
            let kernel = eq.congruence.kernel(s).map_err(err)?;
            c.check(kernel == w, &w, "kernel of epsilon is not the ideal")?;
            c.check(check_boolean(eq.quotient.base()).boolean, &w, "quotient is not Boolean")?;
            let wmp = is_weakly_meet_preserving(&bs, &eq.quotient, &eq.projection);
            c.check(wmp, &w, "projection is not weakly meet preserving")?;
            for k in &additive {
                if k.kernel(s).map_err(err)? == w {
                    c.check(eq.congruence.is_contained_in(k), &w, "epsilon is not the least such congruence")?;
                }
            }
        }
        Ok(())
    }));
    let tm = match type_monoid(&bs) {
        Ok(tm) => tm,
        Err(e) => {
            out.push(LawResult {
                name: "type-semisimple",
                outcome: Outcome::Fail {
                    witness: Vec::new(),
                    detail: e.to_string(),
                },
            });
            return out;
        }
    };
    out.push(law("type-semisimple", |c| c.check(true, &[], "")));
    out.push(law("type-monoid-basics", |c| {
        let r = refinement_check(&tm);
        c.check(r.refinement, &[], "refinement fails")?;
        c.check(r.conical, &[], "not conical")
    }));
    out.push(law("order-isomorphisms", |c| {
        c.check(o_ideal_model_check(), &[], "o-ideal model disagrees with the definition")?;
        let t = ideal_triple(&bs, &tm);
        c.check(t.order_isomorphic, &[], "ideal lattices are not order-isomorphic")?;
        if bs.size() > 1 {
            c.check(t.rank_one_iff_zero_simplifying(), &[], "rank one and 0-simplifying disagree")?;
        }
        Ok(())
    }));
    out.push(law("type-fundamental", |c| {
        c.check(mu_type_invariance(&bs).map_err(err)?, &[], "type monoid changes under the mu quotient")
    }));
    out.push(match type_via_matrices(&bs, &tm, 2) {
        Err(e) => skipped("butterfly", e.to_string()),
        Ok(o) => law("butterfly", |c| {
            c.check(o.classes_match_sum, &[], "matrix classes differ from type sums")?;
            c.check(o.delta_matches_tau, &[], "diagonal embedding differs from D")?;
            c.check(o.orthogonally_separating, &[], "not orthogonally separating")?;
            c.check(o.realizes_small_vectors, &[], "a small type vector is not realized")
        }),
    });
    out
}

fn boolean_only_names() -> Vec<&'static str> {
    vec![
        "eggs",
        "chicken",
        "pork",
        "orthogonal",
        "properties-of-setminus(1)",
        "properties-of-setminus(2)",
        "properties-of-setminus(4)",
        "properties-of-setminus(5)",
        "atoms-semisimple",
        "meets-semisimple",
        "dichotomy",
        "discrete-topology",
        "main-finite",
        "finite",
        "noise",
        "type-semisimple",
        "type-monoid-basics",
        "order-isomorphisms",
        "type-fundamental",
        "butterfly",
    ]
}

/// Every suite that applies to `s`.
pub fn verify_semigroup(s: &InvSemigroup) -> Vec<LawResult> {
    let mut out = semigroup_laws(s);
    out.extend(structure_checks(s));
    out
}

/// Laws of a finite groupoid and of its local bisections.
pub fn groupoid_laws(g: &Groupoid) -> Vec<LawResult> {
    let n = g.size();
    let mut out = Vec::new();
    out.push(law("groupoid-components", |c| {
        let comps = g.components();
        let total: usize = comps.iter().map(Vec::len).sum();
        c.check(total == n, &[], "components do not partition the arrows")?;
        for comp in &comps {
            for &x in comp {
                for &y in comp {
                    let joined = g.arrow(g.r(x), g.d(y)).is_some();
                    c.check(joined, &[x, y], "a component is not connected")?;
                }
            }
        }
        Ok(())
    }));
    out.push(law("component-form", |c| {
        let rebuilt = g.component_form().reconstruct();
        c.check(groupoid_iso(g, &rebuilt).map_err(err)?.is_some(), &[], "reconstruction is not isomorphic")
    }));
    out.push(match k_of_groupoid(g) {
        Err(Error::TooLarge { limit, .. }) => skipped("local-bisections", format!("over {limit} bisections")),
        result => law("local-bisections", |c| {
            let k = result.map_err(err)?;
            let singles: Vec<Elem> = (0..n).map(|x| k.singleton(x)).collect();
            let atoms = k.semigroup.atoms();
            c.check(atoms == singles, &[], "atoms of K(G) are not the singletons")?;
            let a = k.semigroup.groupoid_on(&atoms).map_err(err)?;
            let identity: Vec<Elem> = (0..n).collect();
            c.check(is_groupoid_iso(g, &a, &identity), &[], "atoms groupoid of K(G) is not G")?;
            let t = theta_iso(&k.semigroup).map_err(err)?;
            c.check(t.atoms == atoms, &[], "theta uses different atoms")
        }),
    });
    out
}
