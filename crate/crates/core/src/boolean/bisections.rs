use std::collections::HashMap;

use super::{BooleanSemigroup, MAX_TABULATED};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::semigroup::InvSemigroup;
use crate::set::ElemSet;
use crate::Elem;

/// `K(G)`: the local bisections of a finite groupoid under setwise product.
///
/// Element ids follow the bisections sorted by size, then by their sorted
/// arrow lists, so `∅` is id 0 and the singletons `{x}` are ids `1..=|G|` in
/// arrow order.
#[derive(Clone, Debug)]
pub struct KOfGroupoid {
    pub semigroup: BooleanSemigroup,
    pub bisections: Vec<ElemSet>,
    index: HashMap<ElemSet, Elem>,
}

impl KOfGroupoid {
    /// The id of a local bisection.
    pub fn id_of(&self, set: &ElemSet) -> Option<Elem> {
        self.index.get(set).copied()
    }

    /// Id of the singleton `{x}`.
    pub fn singleton(&self, x: Elem) -> Elem {
        x + 1
    }
}

/// All local bisections, in the id order described on [`KOfGroupoid`].
pub fn local_bisections(g: &Groupoid) -> Result<Vec<ElemSet>> {
    let n = g.size();
    let mut out: Vec<Vec<Elem>> = Vec::new();
    let mut cur: Vec<Elem> = Vec::new();
    let mut used_d = vec![false; n];
    let mut used_r = vec![false; n];
    fn search(
        g: &Groupoid,
        next: Elem,
        cur: &mut Vec<Elem>,
        used_d: &mut [bool],
        used_r: &mut [bool],
        out: &mut Vec<Vec<Elem>>,
    ) -> Result<()> {
        if out.len() > MAX_TABULATED {
            return Err(Error::TooLarge {
                size: out.len(),
                limit: MAX_TABULATED,
            });
        }
        out.push(cur.clone());
        for x in next..g.size() {
            let (d, r) = (g.d(x), g.r(x));
            if used_d[d] || used_r[r] {
                continue;
            }
            used_d[d] = true;
            used_r[r] = true;
            cur.push(x);
            search(g, x + 1, cur, used_d, used_r, out)?;
            cur.pop();
            used_d[d] = false;
            used_r[r] = false;
        }
        Ok(())
    }
    search(g, 0, &mut cur, &mut used_d, &mut used_r, &mut out)?;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out.into_iter().map(|v| ElemSet::from_elems(n, v)).collect())
}

/// Builds `K(G)` and checks it is Boolean.
pub fn k_of_groupoid(g: &Groupoid) -> Result<KOfGroupoid> {
    let bisections = local_bisections(g)?;
    let index: HashMap<ElemSet, Elem> = bisections.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let members: Vec<Vec<Elem>> = bisections.iter().map(ElemSet::to_vec).collect();
    let k = bisections.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &members {
        for b in &members {
            let mut prod = ElemSet::new(g.size());
            for &x in a {
                for &y in b {
                    if let Some(xy) = g.mul(x, y) {
                        prod.insert(xy);
                    }
                }
            }
            table.push(index[&prod]);
        }
    }
    let semigroup = BooleanSemigroup::new(InvSemigroup::from_table(k, table)?)?;
    Ok(KOfGroupoid {
        semigroup,
        bisections,
        index,
    })
}

/// `θ(a) = a↓ ∩ A(S)`, an isomorphism from `S` onto `K` of its atoms
/// groupoid.
#[derive(Clone, Debug)]
pub struct ThetaIso {
    pub atoms: Vec<Elem>,
    /// Arrow `i` is `atoms[i]`.
    pub atoms_groupoid: Groupoid,
    pub k: KOfGroupoid,
    /// `map[a]` is the id of `θ(a)` in `k`.
    pub map: Vec<Elem>,
}

impl ThetaIso {
    /// Atom ids (in `S`) making up `θ(a)`.
    pub fn atoms_of(&self, a: Elem) -> Vec<Elem> {
        self.k.bisections[self.map[a]].iter().map(|i| self.atoms[i]).collect()
    }
}

/// Builds `θ` and verifies it is a bijective homomorphism with
/// `a = ⋁ θ(a)` for every `a`.
pub fn theta_iso(s: &BooleanSemigroup) -> Result<ThetaIso> {
    let atoms = s.atoms();
    let atoms_groupoid = s.groupoid_on(&atoms)?;
    let k = k_of_groupoid(&atoms_groupoid)?;
    let mut map = Vec::with_capacity(s.size());
    for a in s.elements() {
        let below = ElemSet::from_elems(atoms.len(), (0..atoms.len()).filter(|&i| s.leq(atoms[i], a)));
        let id = k
            .id_of(&below)
            .ok_or_else(|| Error::VerificationFailed(format!("atoms below {a} are not a local bisection")))?;
        map.push(id);
    }
    let theta = ThetaIso {
        atoms,
        atoms_groupoid,
        k,
        map,
    };
    verify_theta(s, &theta)?;
    Ok(theta)
}

fn verify_theta(s: &BooleanSemigroup, theta: &ThetaIso) -> Result<()> {
    let fail = |what: String| Err(Error::VerificationFailed(what));
    if theta.k.semigroup.size() != s.size() {
        return fail(format!("|S| = {} but |K| = {}", s.size(), theta.k.semigroup.size()));
    }
    let mut hit = vec![false; s.size()];
    for &m in &theta.map {
        if hit[m] {
            return fail(format!("theta is not injective at {m}"));
        }
        hit[m] = true;
    }
    if !s.is_homomorphism(&theta.k.semigroup, &theta.map) {
        return fail("theta is not multiplicative".into());
    }
    if let Some((a, b)) = super::join_failure(s, &theta.k.semigroup, &theta.map) {
        return fail(format!("theta does not preserve the join of {a} and {b}"));
    }
    for a in s.elements() {
        if s.join_all(&theta.atoms_of(a))? != a {
            return fail(format!("{a} is not the join of the atoms below it"));
        }
    }
    Ok(())
}
