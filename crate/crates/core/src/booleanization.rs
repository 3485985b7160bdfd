//! The Booleanization `B(S) = K(𝒢(S))` of a finite inverse semigroup, its
//! universal property, and filters.

use crate::boolean::{join_failure, k_of_groupoid, BooleanSemigroup, KOfGroupoid};
use crate::error::{Error, Result};
use crate::groupoid::{groupoid_iso, is_groupoid_iso, Groupoid};
use crate::semigroup::InvSemigroup;
use crate::set::ElemSet;
use crate::{check_boolean, Elem};

/// Carriers up to this size get a full subset scan when enumerating filters.
pub const FILTER_SCAN_LIMIT: usize = 12;

#[derive(Clone, Debug)]
pub struct Booleanization {
    /// `S`, or `S⁰` when `S` had no zero (then `a` becomes `a + 1`).
    pub with_zero: InvSemigroup,
    pub zero_adjoined: bool,
    pub groupoid: Groupoid,
    /// Arrow `i` of `groupoid` is element `carrier[i]` of `with_zero`.
    pub carrier: Vec<Elem>,
    pub k: KOfGroupoid,
    /// `beta[a]` is the id in `B(S)` of `a↓ ∖ {0}`, for `a` in the original `S`.
    pub beta: Vec<Elem>,
}

impl Booleanization {
    pub fn semigroup(&self) -> &BooleanSemigroup {
        &self.k.semigroup
    }

    /// `a` in the original semigroup, as an element of `with_zero`.
    fn lift(&self, a: Elem) -> Elem {
        a + self.zero_adjoined as usize
    }

    /// Arrow index of a nonzero element of `with_zero`.
    fn arrow(&self, a: Elem) -> Elem {
        self.carrier.binary_search(&a).expect("nonzero element")
    }

    /// `β` as arrow sets: the nonzero elements below `a`.
    pub fn beta_set(&self, a: Elem) -> Vec<Elem> {
        self.k.bisections[self.beta[a]].iter().map(|i| self.carrier[i]).collect()
    }
}

/// Builds `B(S)` and checks that `β` is injective and that
/// `(a↓)(b↓) = (ab)↓` setwise.
pub fn booleanize(s: &InvSemigroup) -> Result<Booleanization> {
    let zero_adjoined = s.zero().is_none();
    let with_zero = if zero_adjoined { s.adjoin_zero() } else { s.clone() };
    let (groupoid, carrier) = with_zero.restricted_groupoid();
    let k = k_of_groupoid(&groupoid)?;
    let z = with_zero.zero().unwrap();
    let mut b = Booleanization {
        with_zero,
        zero_adjoined,
        groupoid,
        carrier,
        k,
        beta: Vec::new(),
    };
    let mut beta = Vec::with_capacity(s.size());
    for a in s.elements() {
        let la = b.lift(a);
        let below = b.with_zero.order().down(la).into_iter().filter(|&x| x != z).map(|x| b.arrow(x));
        let set = ElemSet::from_elems(b.carrier.len(), below);
        let id = b
            .k
            .id_of(&set)
            .ok_or_else(|| Error::VerificationFailed(format!("{a}↓ is not a local bisection")))?;
        beta.push(id);
    }
    b.beta = beta;

    let mut seen = vec![false; b.k.semigroup.size()];
    for (a, &id) in b.beta.iter().enumerate() {
        if std::mem::replace(&mut seen[id], true) {
            return Err(Error::VerificationFailed(format!("beta is not injective at {a}")));
        }
    }
    if !s.is_homomorphism(b.semigroup(), &b.beta) {
        return Err(Error::VerificationFailed("beta is not multiplicative".into()));
    }
    Ok(b)
}

/// The additive extension `γ: B(S) → T` of a homomorphism `α: S → T`.
#[derive(Clone, Debug)]
pub struct GammaExtension {
    pub map: Vec<Elem>,
    /// Every singleton `{a}` equals `β(a) ∖ ⋁ β(â)` in `B(S)`, so any
    /// additive map agreeing with `α` along `β` agrees with `γ` on the
    /// singletons, which generate under orthogonal joins.
    pub unique: bool,
}

/// `γ({a}) = α(a) ∖ ⋁ α(â)` with `â` the nonzero elements strictly below
/// `a`, and `γ(A) = ⊕_{a∈A} γ({a})`. Checked: `γ ∘ β = α`, `γ` a
/// homomorphism preserving compatible joins, and uniqueness on singletons.
pub fn gamma_extension(b: &Booleanization, alpha: &[Elem], target: &InvSemigroup) -> Result<GammaExtension> {
    let check = check_boolean(target);
    if let Some(f) = check.failure {
        return Err(Error::TargetNotBoolean(f));
    }
    let t = BooleanSemigroup::new(target.clone())?;
    let s_size = b.beta.len();
    if alpha.len() != s_size || alpha.iter().any(|&x| x >= t.size()) {
        return Err(Error::NotHomomorphism("map has the wrong shape".into()));
    }
    // α on S⁰, sending an adjoined zero to the zero of T
    let s0 = &b.with_zero;
    let z = s0.zero().unwrap();
    let mut alpha0 = vec![t.zero_id(); s0.size()];
    for a in 0..s_size {
        alpha0[b.lift(a)] = alpha[a];
    }
    if alpha0[z] != t.zero_id() {
        return Err(Error::NotHomomorphism("zero is not sent to zero".into()));
    }
    for x in s0.elements() {
        for y in s0.elements() {
            if alpha0[s0.mul(x, y)] != t.mul(alpha0[x], alpha0[y]) {
                return Err(Error::NotHomomorphism(format!("not multiplicative at ({x}, {y})")));
            }
        }
    }

    let strictly_below = |a: Elem| -> Vec<Elem> {
        s0.order().down(a).into_iter().filter(|&x| x != a && x != z).collect()
    };
    let singleton_image: Vec<Elem> = b
        .carrier
        .iter()
        .map(|&a| {
            let hat: Vec<Elem> = strictly_below(a).into_iter().map(|x| alpha0[x]).collect();
            let under = t.join_all(&hat)?;
            t.relative_complement(alpha0[a], under)
        })
        .collect::<Result<_>>()?;

    let bs = b.semigroup();
    let mut map = Vec::with_capacity(bs.size());
    for set in &b.k.bisections {
        let parts: Vec<Elem> = set.iter().map(|i| singleton_image[i]).collect();
        for (i, &p) in parts.iter().enumerate() {
            if let Some(&q) = parts[i + 1..].iter().find(|&&q| !t.is_orthogonal(p, q).unwrap()) {
                return Err(Error::VerificationFailed(format!("gamma images {p} and {q} are not orthogonal")));
            }
        }
        map.push(t.join_all(&parts)?);
    }

    for a in 0..s_size {
        if map[b.beta[a]] != alpha[a] {
            return Err(Error::VerificationFailed(format!("gamma after beta differs from alpha at {a}")));
        }
    }
    if !bs.is_homomorphism(&t, &map) {
        return Err(Error::VerificationFailed("gamma is not multiplicative".into()));
    }
    if let Some((x, y)) = join_failure(bs, &t, &map) {
        return Err(Error::VerificationFailed(format!("gamma does not preserve the join of {x} and {y}")));
    }

    let beta0 = |a: Elem| -> Elem {
        let below = s0.order().down(a).into_iter().filter(|&x| x != z).map(|x| b.arrow(x));
        b.k.id_of(&ElemSet::from_elems(b.carrier.len(), below)).unwrap()
    };
    let mut unique = true;
    for (i, &a) in b.carrier.iter().enumerate() {
        let hat: Vec<Elem> = strictly_below(a).into_iter().map(beta0).collect();
        let under = bs.join_all(&hat)?;
        unique &= bs.relative_complement(beta0(a), under)? == b.k.singleton(i);
    }
    Ok(GammaExtension { map, unique })
}

#[derive(Clone, Debug)]
pub struct Filters {
    pub proper_filters: Vec<ElemSet>,
    pub ultrafilters: Vec<ElemSet>,
    pub all_principal: bool,
    /// Whether `all_principal` came from scanning every subset.
    pub exhaustive: bool,
}

/// Upward closed and down-directed.
pub fn is_filter(s: &InvSemigroup, set: &ElemSet) -> bool {
    if set.is_empty() || s.order().up_closure(set) != *set {
        return false;
    }
    let members = set.to_vec();
    members.iter().all(|&a| {
        members
            .iter()
            .all(|&b| members.iter().any(|&c| s.leq(c, a) && s.leq(c, b)))
    })
}

/// Proper filters as principal up-sets `x↑` (`x` nonzero), in id order of
/// `x`, and the maximal ones among them. On carriers up to
/// [`FILTER_SCAN_LIMIT`] every subset is checked to confirm that no other
/// proper filter exists.
pub fn enumerate_filters(s: &InvSemigroup) -> Filters {
    let proper_filters: Vec<ElemSet> = s.nonzero().map(|x| s.order().up_set(x)).collect();
    let mut all_principal = proper_filters.iter().all(|f| is_filter(s, f));
    let exhaustive = s.size() <= FILTER_SCAN_LIMIT;
    if exhaustive {
        for mask in 1u32..(1 << s.size()) {
            let set = ElemSet::from_elems(s.size(), (0..s.size()).filter(|&i| mask >> i & 1 == 1));
            let proper = s.zero().map_or(true, |z| !set.contains(z));
            if proper && is_filter(s, &set) && !proper_filters.contains(&set) {
                all_principal = false;
            }
        }
    }
    let ultrafilters = proper_filters
        .iter()
        .filter(|f| !proper_filters.iter().any(|g| g != *f && f.is_subset(g)))
        .cloned()
        .collect();
    Filters {
        proper_filters,
        ultrafilters,
        all_principal,
        exhaustive,
    }
}

/// The groupoid on a family of filters with `d(F) = (F⁻¹F)↑`,
/// `r(F) = (FF⁻¹)↑`, and `F·G = (FG)↑` when `d(F) = r(G)`, all computed
/// setwise.
pub fn filter_groupoid(s: &InvSemigroup, filters: &[ElemSet]) -> Result<Groupoid> {
    let n = s.size();
    let up = |elems: Vec<Elem>| s.order().up_closure(&ElemSet::from_elems(n, elems));
    let setwise = |f: &ElemSet, g: &ElemSet| -> ElemSet {
        up(f.iter().flat_map(|x| g.iter().map(move |y| s.mul(x, y))).collect())
    };
    let inverse = |f: &ElemSet| ElemSet::from_elems(n, f.iter().map(|x| s.inv(x)));
    let doms: Vec<ElemSet> = filters.iter().map(|f| setwise(&inverse(f), f)).collect();
    let rans: Vec<ElemSet> = filters.iter().map(|f| setwise(f, &inverse(f))).collect();
    let m = filters.len();
    let mut table = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            if doms[i] == rans[j] {
                let p = setwise(&filters[i], &filters[j]);
                let k = filters.iter().position(|f| *f == p).ok_or(Error::NotGroupoid {
                    axiom: "closure",
                    witness: vec![i, j],
                })?;
                table.push(Some(k));
            } else {
                table.push(None);
            }
        }
    }
    Groupoid::from_table(m, table)
}

#[derive(Clone, Debug)]
pub struct BooleanizationIso {
    pub isomorphic: bool,
    /// Arrow map `𝒢(S) → 𝒢(T)`.
    pub groupoid_map: Option<Vec<Elem>>,
    /// The induced map `B(S) → B(T)`, checked to be an isomorphism.
    pub certificate: Option<Vec<Elem>>,
}

/// `B(S) ≅ B(T)` exactly when `𝒢(S) ≅ 𝒢(T)`; when they are, the groupoid
/// isomorphism is pushed forward to bisections and table-checked.
pub fn booleanization_iso(s: &InvSemigroup, t: &InvSemigroup) -> Result<BooleanizationIso> {
    let (bs, bt) = (booleanize(s)?, booleanize(t)?);
    let Some(gmap) = groupoid_iso(&bs.groupoid, &bt.groupoid)? else {
        return Ok(BooleanizationIso {
            isomorphic: false,
            groupoid_map: None,
            certificate: None,
        });
    };
    debug_assert!(is_groupoid_iso(&bs.groupoid, &bt.groupoid, &gmap));
    let mut cert = Vec::with_capacity(bs.semigroup().size());
    for set in &bs.k.bisections {
        let image = ElemSet::from_elems(bt.carrier.len(), set.iter().map(|x| gmap[x]));
        cert.push(bt.k.id_of(&image).ok_or_else(|| {
            Error::VerificationFailed("image of a local bisection is not a local bisection".into())
        })?);
    }
    let mut seen = vec![false; cert.len()];
    let bijective = bs.semigroup().size() == bt.semigroup().size()
        && cert.iter().all(|&c| !std::mem::replace(&mut seen[c], true));
    if !bijective || !bs.semigroup().is_homomorphism(bt.semigroup(), &cert) {
        return Err(Error::VerificationFailed("induced Booleanization isomorphism".into()));
    }
    Ok(BooleanizationIso {
        isomorphic: true,
        groupoid_map: Some(gmap),
        certificate: Some(cert),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::iso::semigroup_iso;

    #[test]
    fn booleanization_sizes() {
        let z2 = booleanize(&families::cyclic_group(2)).unwrap();
        assert_eq!(z2.semigroup().size(), 3);
        assert!(z2.zero_adjoined);
        assert_eq!(z2.beta_set(1), vec![2]);
        let b2 = booleanize(&families::brandt(2)).unwrap();
        assert_eq!(b2.semigroup().size(), 7);
        assert!(semigroup_iso(b2.semigroup(), &families::symmetric_inverse_monoid(2), 24)
            .unwrap()
            .is_some());
        let c = booleanize(&families::chain(3)).unwrap();
        assert_eq!(c.semigroup().size(), 4);
        assert_eq!(c.beta_set(2), vec![1, 2]);
    }

    #[test]
    fn gamma_of_beta_is_the_identity() {
        let b = booleanize(&families::brandt(2)).unwrap();
        let g = gamma_extension(&b, &b.beta, b.semigroup()).unwrap();
        assert_eq!(g.map, (0..7).collect::<Vec<_>>());
        assert!(g.unique);
    }

    #[test]
    fn gamma_on_a_chain() {
        // α(e) = ∅, α(1) = top in the powerset of a point
        let b = booleanize(&families::chain(3)).unwrap();
        let target = families::powerset(1);
        let g = gamma_extension(&b, &[0, 0, 1], &target).unwrap();
        let e_single = b.k.singleton(0);
        let one_single = b.k.singleton(1);
        assert_eq!(g.map[e_single], 0);
        assert_eq!(g.map[one_single], 1);
    }

    #[test]
    fn gamma_rejects_bad_inputs() {
        let b = booleanize(&families::chain(3)).unwrap();
        assert!(matches!(
            gamma_extension(&b, &[0, 0, 0], &families::chain(3)),
            Err(Error::TargetNotBoolean(_))
        ));
        assert!(matches!(
            gamma_extension(&b, &[0, 1, 0], &families::powerset(1)),
            Err(Error::NotHomomorphism(_))
        ));
    }

    #[test]
    fn filters_of_small_examples() {
        let p = enumerate_filters(&families::powerset(2));
        assert_eq!(p.proper_filters.len(), 3);
        assert_eq!(p.ultrafilters.len(), 2);
        assert!(p.all_principal && p.exhaustive);
        let c = enumerate_filters(&families::chain(3));
        assert_eq!(c.proper_filters.len(), 2);
        assert_eq!(c.ultrafilters, vec![ElemSet::from_elems(3, [1, 2])]);
        let z = enumerate_filters(&families::zero_group(&families::cyclic_group(2)));
        assert_eq!(z.ultrafilters.len(), 2);
    }

    #[test]
    fn ultrafilter_groupoid_matches_atoms() {
        let i2 = families::symmetric_inverse_monoid(2);
        let f = enumerate_filters(&i2);
        let g = filter_groupoid(&i2, &f.ultrafilters).unwrap();
        let atoms = i2.groupoid_on(&i2.atoms().unwrap()).unwrap();
        assert!(groupoid_iso(&g, &atoms).unwrap().is_some());
        let all = filter_groupoid(&i2, &f.proper_filters).unwrap();
        assert!(groupoid_iso(&all, &i2.restricted_groupoid().0).unwrap().is_some());
    }

    #[test]
    fn iso_criterion() {
        let yes = booleanization_iso(&families::chain(3), &families::antichain_with_zero(2)).unwrap();
        assert!(yes.isomorphic);
        let no = booleanization_iso(&families::brandt(2), &families::zero_group(&families::cyclic_group(2))).unwrap();
        assert!(!no.isomorphic);
    }
}
