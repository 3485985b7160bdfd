use super::BooleanSemigroup;
use crate::error::{Error, Result};
use crate::set::ElemSet;
use crate::Elem;

/// `θ = φ ∘ ν` with `ν` the projection onto `S / ε_ker θ`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub projection: Vec<Elem>,
    pub quotient: BooleanSemigroup,
    /// `φ`, from the quotient into the target; idempotent-separating.
    pub embedding: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct MorphismAnalysis {
    pub additive: bool,
    /// First compatible pair whose join is not preserved.
    pub join_failure: Option<(Elem, Elem)>,
    pub kernel: Vec<Elem>,
    pub idempotent_separating: bool,
    pub weakly_meet_preserving: bool,
    /// Present when the map is additive.
    pub factorization: Option<Factorization>,
}

/// The first compatible pair `(a, b)` with `θ(a ∨ b) ≠ θ(a) ∨ θ(b)`.
pub fn join_failure(source: &BooleanSemigroup, target: &BooleanSemigroup, map: &[Elem]) -> Option<(Elem, Elem)> {
    for a in source.elements() {
        for b in a + 1..source.size() {
            if let Some(j) = source.join(a, b) {
                if target.join(map[a], map[b]) != Some(map[j]) {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

/// Whenever `t ≤ θ(a), θ(b)` there is some `c ≤ a, b` with `t ≤ θ(c)`.
pub fn is_weakly_meet_preserving(source: &BooleanSemigroup, target: &BooleanSemigroup, map: &[Elem]) -> bool {
    let downs_t: Vec<ElemSet> = target.elements().map(|t| target.order().down_set(t)).collect();
    for a in source.elements() {
        for b in a..source.size() {
            let mut below_both = downs_t[map[a]].clone();
            below_both.intersect_with(&downs_t[map[b]]);
            let mut covered = ElemSet::new(target.size());
            for c in source.elements().filter(|&c| source.leq(c, a) && source.leq(c, b)) {
                covered.union_with(&downs_t[map[c]]);
            }
            if !below_both.is_subset(&covered) {
                return false;
            }
        }
    }
    true
}

/// Classifies a multiplicative, zero-preserving map between Boolean
/// inverse semigroups.
pub fn analyze_morphism(source: &BooleanSemigroup, target: &BooleanSemigroup, map: &[Elem]) -> Result<MorphismAnalysis> {
    if map.len() != source.size() || map.iter().any(|&x| x >= target.size()) {
        return Err(Error::NotHomomorphism("map has the wrong shape".into()));
    }
    for a in source.elements() {
        for b in source.elements() {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(Error::NotMultiplicative(a, b));
            }
        }
    }
    if map[source.zero_id()] != target.zero_id() {
        return Err(Error::NotZeroPreserving);
    }

    let failure = join_failure(source, target, map);
    let kernel: Vec<Elem> = source.elements().filter(|&a| map[a] == target.zero_id()).collect();
    let es = source.idempotents();
    let idempotent_separating = es
        .iter()
        .enumerate()
        .all(|(i, &e)| es[i + 1..].iter().all(|&f| map[e] != map[f]));
    let weakly_meet_preserving = is_weakly_meet_preserving(source, target, map);

    let factorization = if failure.is_none() {
        let ideal = source.check_additive_ideal(&ElemSet::from_elems(source.size(), kernel.iter().copied()))?;
        let eq = source.epsilon_quotient(&ideal)?;
        let mut embedding = vec![usize::MAX; eq.quotient.size()];
        for a in source.elements() {
            let slot = &mut embedding[eq.projection[a]];
            if *slot != usize::MAX && *slot != map[a] {
                return Err(Error::VerificationFailed(format!(
                    "map is not constant on the epsilon class of {a}"
                )));
            }
            *slot = map[a];
        }
        let qe = eq.quotient.idempotents();
        let separating = qe
            .iter()
            .enumerate()
            .all(|(i, &e)| qe[i + 1..].iter().all(|&f| embedding[e] != embedding[f]));
        if !separating || !eq.quotient.is_homomorphism(target, &embedding) {
            return Err(Error::VerificationFailed("factor through the epsilon quotient".into()));
        }
        Some(Factorization {
            projection: eq.projection,
            quotient: eq.quotient,
            embedding,
        })
    } else {
        None
    };

    Ok(MorphismAnalysis {
        additive: failure.is_none(),
        join_failure: failure,
        kernel,
        idempotent_separating,
        weakly_meet_preserving,
        factorization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn identity_morphism() {
        let i2 = BooleanSemigroup::new(families::symmetric_inverse_monoid(2)).unwrap();
        let id: Vec<Elem> = i2.elements().collect();
        let a = analyze_morphism(&i2, &i2, &id).unwrap();
        assert!(a.additive && a.idempotent_separating && a.weakly_meet_preserving);
        assert_eq!(a.kernel, vec![0]);
        assert_eq!(a.factorization.unwrap().quotient.size(), 7);
    }

    #[test]
    fn projection_off_a_product() {
        let i2 = BooleanSemigroup::new(families::symmetric_inverse_monoid(2)).unwrap();
        let z = BooleanSemigroup::new(families::zero_group(&families::cyclic_group(2))).unwrap();
        let p = i2.direct_product(&z);
        let proj: Vec<Elem> = p.elements().map(|x| x / 3).collect();
        let a = analyze_morphism(&p, &i2, &proj).unwrap();
        assert!(a.additive && !a.idempotent_separating && a.weakly_meet_preserving);
        assert_eq!(a.kernel, vec![0, 1, 2]);
    }

    #[test]
    fn mu_projection_of_zero_group() {
        let z = BooleanSemigroup::new(families::zero_group(&families::cyclic_group(2))).unwrap();
        let mq = z.mu_and_quotient();
        let q = BooleanSemigroup::new(mq.quotient).unwrap();
        let a = analyze_morphism(&z, &q, &mq.projection).unwrap();
        assert!(a.additive && a.idempotent_separating);
        assert_eq!(a.kernel, vec![0]);
        assert!(!a.weakly_meet_preserving);
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let p = BooleanSemigroup::new(families::powerset(2)).unwrap();
        assert_eq!(analyze_morphism(&p, &p, &[0, 2, 1, 0]).unwrap_err(), Error::NotMultiplicative(1, 3));
        assert_eq!(analyze_morphism(&p, &p, &[3, 3, 3, 3]).unwrap_err(), Error::NotZeroPreserving);
    }
}
