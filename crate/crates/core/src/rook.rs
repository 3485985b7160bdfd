//! Rook matrices over a Boolean inverse semigroup and the decomposition
//! of a finite Boolean inverse monoid into a product of `M_n(G⁰)`.

use std::collections::HashMap;

use crate::boolean::{theta_iso, BooleanSemigroup, MAX_TABULATED};
use crate::error::{Error, Result};
use crate::families;
use crate::groupoid::{group_name, Groupoid};
use crate::semigroup::InvSemigroup;
use crate::Elem;

/// An `n × n` matrix over some base, row-major. Entries in one row are
/// pairwise `a⁻¹b = 0`; entries in one column are pairwise `ab⁻¹ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookMatrix {
    n: usize,
    entries: Vec<Elem>,
}

impl RookMatrix {
    pub fn new(base: &BooleanSemigroup, n: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(n * n, entries.len()));
        }
        let m = RookMatrix { n, entries };
        m.check(base)?;
        Ok(m)
    }

    fn check(&self, base: &BooleanSemigroup) -> Result<()> {
        let n = self.n;
        let z = base.zero_id();
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                for k in j + 1..n {
                    let b = self.get(i, k);
                    if base.mul(base.inv(a), b) != z {
                        return Err(Error::NotRookMatrix((i, j), (i, k)));
                    }
                }
                for k in i + 1..n {
                    let b = self.get(k, j);
                    if base.mul(a, base.inv(b)) != z {
                        return Err(Error::NotRookMatrix((i, j), (k, j)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zero(base: &BooleanSemigroup, n: usize) -> Self {
        RookMatrix {
            n,
            entries: vec![base.zero_id(); n * n],
        }
    }

    /// The identity matrix; needs a monoid.
    pub fn identity(base: &BooleanSemigroup, n: usize) -> Result<Self> {
        let one = base.top().ok_or(Error::NotMonoid)?;
        let z = base.zero_id();
        Ok(RookMatrix {
            n,
            entries: (0..n * n).map(|k| if k / n == k % n { one } else { z }).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.n + j]
    }

    /// `(A*)_{ij} = (a_{ji})⁻¹`.
    pub fn star(&self, base: &BooleanSemigroup) -> RookMatrix {
        let n = self.n;
        RookMatrix {
            n,
            entries: (0..n * n).map(|k| base.inv(self.get(k % n, k / n))).collect(),
        }
    }

    /// Entrywise natural order.
    pub fn leq(&self, base: &BooleanSemigroup, other: &RookMatrix) -> bool {
        self.entries.iter().zip(&other.entries).all(|(&a, &b)| base.leq(a, b))
    }

    /// Diagonal with idempotent entries.
    pub fn is_diagonal_idempotent(&self, base: &BooleanSemigroup) -> bool {
        let n = self.n;
        (0..n * n).all(|k| {
            let a = self.entries[k];
            if k / n == k % n {
                base.is_idempotent(a)
            } else {
                a == base.zero_id()
            }
        })
    }
}

/// `(AB)_{ij} = ⊕_k a_{ik} b_{kj}`.
pub fn rook_mul(base: &BooleanSemigroup, a: &RookMatrix, b: &RookMatrix) -> Result<RookMatrix> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    let n = a.n;
    let mut entries = Vec::with_capacity(n * n);
    let mut terms = Vec::with_capacity(n);
    for i in 0..n {
        for j in 0..n {
            terms.clear();
            terms.extend((0..n).map(|k| base.mul(a.get(i, k), b.get(k, j))));
            entries.push(base.join_all(&terms)?);
        }
    }
    RookMatrix::new(base, n, entries)
}

/// Every `n × n` rook matrix over `base`, in lexicographic order of entries.
pub fn enumerate_rook_matrices(base: &BooleanSemigroup, n: usize) -> Vec<RookMatrix> {
    fn fill(base: &BooleanSemigroup, n: usize, cur: &mut Vec<Elem>, out: &mut Vec<RookMatrix>) {
        let k = cur.len();
        if k == n * n {
            out.push(RookMatrix { n, entries: cur.clone() });
            return;
        }
        let (i, j) = (k / n, k % n);
        let z = base.zero_id();
        for a in base.elements() {
            let row_ok = (0..j).all(|c| base.mul(base.inv(cur[i * n + c]), a) == z);
            let col_ok = (0..i).all(|r| base.mul(cur[r * n + j], base.inv(a)) == z);
            if row_ok && col_ok {
                cur.push(a);
                fill(base, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    fill(base, n, &mut Vec::with_capacity(n * n), &mut out);
    out
}

/// `G⁰` for a group given as a one-object groupoid; `g` becomes `g + 1`.
pub fn zero_group_of(group: &Groupoid) -> Result<BooleanSemigroup> {
    if !group.is_group() {
        return Err(Error::NotAGroup("more than one identity"));
    }
    let n = group.size();
    let g = InvSemigroup::from_fn(n, |a, b| group.mul(a, b).unwrap())?;
    BooleanSemigroup::new(families::zero_group(&g))
}

/// Number of `n × n` rook matrices over `G⁰`: `Σ_k C(n,k)² k! |G|^k`.
pub fn mn_g0_size(n: usize, group_order: usize) -> usize {
    let mut total: usize = 0;
    let mut binom: usize = 1;
    let mut fact: usize = 1;
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) / k;
            fact *= k;
        }
        total = total.saturating_add(
            binom
                .saturating_mul(binom)
                .saturating_mul(fact)
                .saturating_mul(group_order.saturating_pow(k as u32)),
        );
    }
    total
}

/// `M_n(G⁰)` tabulated.
///
/// A matrix with nonzero entries `g_x` at `(f(x), x)` for a partial
/// bijection `f` is numbered like the partial bijection in
/// [`families`]: by rank, idempotents first, then by the sorted list of
/// `(column, row, label)`. Over the trivial group this reproduces the
/// numbering of the symmetric inverse monoid.
#[derive(Clone, Debug)]
pub struct MnG0 {
    pub n: usize,
    pub base: BooleanSemigroup,
    pub semigroup: BooleanSemigroup,
    pub matrices: Vec<RookMatrix>,
    index: HashMap<RookMatrix, Elem>,
}

impl MnG0 {
    pub fn id_of(&self, m: &RookMatrix) -> Option<Elem> {
        self.index.get(m).copied()
    }
}

/// Sort key: support size, whether the labels are all the identity, then the
/// `(row, column, label)` triples.
type MatrixKey = (usize, bool, Vec<(usize, usize, usize)>);

pub fn build_mn_g0(n: usize, group: &Groupoid) -> Result<MnG0> {
    let size = mn_g0_size(n, group.size());
    if size > MAX_TABULATED {
        return Err(Error::TooLarge {
            size,
            limit: MAX_TABULATED,
        });
    }
    let base = zero_group_of(group)?;
    let g = group.size();
    let identity_label = group.identities()[0] + 1;
    let mut keyed: Vec<(MatrixKey, RookMatrix)> = Vec::with_capacity(size);
    for f in families::partial_bijections(n) {
        let domain: Vec<usize> = (0..n).filter(|&x| f[x].is_some()).collect();
        let mut labels = vec![0; domain.len()];
        loop {
            let mut entries = vec![0; n * n];
            let mut graph = Vec::with_capacity(domain.len());
            for (&x, &l) in domain.iter().zip(&labels) {
                let y = f[x].unwrap();
                entries[y * n + x] = l + 1;
                graph.push((x, y, l + 1));
            }
            let idempotent = graph.iter().all(|&(x, y, l)| x == y && l == identity_label);
            keyed.push(((graph.len(), !idempotent, graph), RookMatrix { n, entries }));
            if !advance(&mut labels, g) {
                break;
            }
        }
    }
    keyed.sort();
    let matrices: Vec<RookMatrix> = keyed.into_iter().map(|(_, m)| m).collect();
    let index: HashMap<RookMatrix, Elem> = matrices.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let k = matrices.len();
    let mut table = Vec::with_capacity(k * k);
    for a in &matrices {
        for b in &matrices {
            table.push(index[&rook_mul(&base, a, b)?]);
        }
    }
    let semigroup = BooleanSemigroup::new(InvSemigroup::from_table(k, table)?)?;
    Ok(MnG0 {
        n,
        base,
        semigroup,
        matrices,
        index,
    })
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// `S ≅ ∏ M_{n_i}(G_i⁰)` with an explicit, table-checked isomorphism.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// `(n_i, G_i)` per atoms-groupoid component, ordered by least atom.
    pub signature: Vec<(usize, Groupoid)>,
    pub factors: Vec<MnG0>,
    /// The product of the factors; a tuple `(m_1, …, m_k)` has mixed-radix
    /// id `(…(m_1·|F_2| + m_2)…)·|F_k| + m_k`.
    pub product: InvSemigroup,
    /// `iso[a]` is the image of `a` in `product`.
    pub iso: Vec<Elem>,
    pub verified: bool,
}

impl Decomposition {
    /// `(n_i, group name)` pairs.
    pub fn signature_names(&self) -> Vec<(usize, String)> {
        self.signature.iter().map(|(n, g)| (*n, group_name(g))).collect()
    }
}

/// The product `∏ M_{n_i}(G_i⁰)` of a signature, with its factors.
pub fn rebuild(signature: &[(usize, Groupoid)]) -> Result<(InvSemigroup, Vec<MnG0>)> {
    let factors: Vec<MnG0> = signature
        .iter()
        .map(|(n, g)| build_mn_g0(*n, g))
        .collect::<Result<_>>()?;
    let size = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.semigroup.size()))
        .unwrap_or(usize::MAX);
    if size > MAX_TABULATED {
        return Err(Error::TooLarge {
            size,
            limit: MAX_TABULATED,
        });
    }
    let product = factors
        .iter()
        .fold(families::trivial(), |acc, f| acc.direct_product(&f.semigroup));
    Ok((product, factors))
}

/// Routes each element through `θ` to a set of atoms, and places every atom
/// `x` of component `i` in factor `i` at (row of `r(x)`, column of `d(x)`)
/// with label `p_r⁻¹ x p_d`, where `p_k` is the least arrow from the
/// component's least identity to its `k`-th identity.
pub fn decompose(s: &BooleanSemigroup) -> Result<Decomposition> {
    if s.top().is_none() {
        return Err(Error::NotMonoid);
    }
    let theta = theta_iso(s)?;
    let a = &theta.atoms_groupoid;
    let form = a.component_form();
    let signature: Vec<(usize, Groupoid)> = form
        .components
        .iter()
        .map(|c| (c.identity_count, c.group.clone()))
        .collect();
    let (product, factors) = rebuild(&signature)?;

    // position of each atom: (component, row, column, label)
    let mut place = vec![(0, 0, 0, 0); a.size()];
    for (ci, c) in form.components.iter().enumerate() {
        let ids: Vec<Elem> = c.member_ids.iter().copied().filter(|&x| a.is_identity(x)).collect();
        let paths: Vec<Elem> = ids.iter().map(|&y| a.arrow(ids[0], y).unwrap()).collect();
        let (_, loops) = a.local_group(ids[0]);
        let pos = |v: &[Elem], x: Elem| v.iter().position(|&y| y == x).unwrap();
        for &x in &c.member_ids {
            let (row, col) = (pos(&ids, a.r(x)), pos(&ids, a.d(x)));
            let l = a.product(&[a.inv(paths[row]), x, paths[col]]).unwrap();
            place[x] = (ci, row, col, pos(&loops, l));
        }
    }

    let mut iso = Vec::with_capacity(s.size());
    for el in s.elements() {
        let mut mats: Vec<RookMatrix> = factors
            .iter()
            .map(|f| RookMatrix::zero(&f.base, f.n))
            .collect();
        for atom in theta.k.bisections[theta.map[el]].iter() {
            let (ci, row, col, label) = place[atom];
            let n = factors[ci].n;
            mats[ci].entries[row * n + col] = label + 1;
        }
        let mut id = 0;
        for (f, m) in factors.iter().zip(&mats) {
            let local = f
                .id_of(m)
                .ok_or_else(|| Error::VerificationFailed(format!("image of {el} is not a rook matrix")))?;
            id = id * f.semigroup.size() + local;
        }
        iso.push(id);
    }

    let mut hit = vec![false; product.size()];
    let bijective = product.size() == s.size() && iso.iter().all(|&t| !std::mem::replace(&mut hit[t], true));
    if !bijective || !s.is_homomorphism(&product, &iso) {
        return Err(Error::VerificationFailed("decomposition isomorphism".into()));
    }
    Ok(Decomposition {
        signature,
        factors,
        product,
        iso,
        verified: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> BooleanSemigroup {
        BooleanSemigroup::new(families::chain(2)).unwrap()
    }

    fn z2() -> Groupoid {
        Groupoid::from_group(&families::cyclic_group(2)).unwrap()
    }

    fn trivial_group() -> Groupoid {
        Groupoid::from_group(&families::trivial()).unwrap()
    }

    #[test]
    fn permutation_matrix_arithmetic() {
        let b = two();
        let a = RookMatrix::new(&b, 2, vec![0, 1, 0, 0]).unwrap();
        let c = RookMatrix::new(&b, 2, vec![0, 0, 1, 0]).unwrap();
        assert_eq!(rook_mul(&b, &a, &c).unwrap().entries(), &[1, 0, 0, 0]);
        let id = RookMatrix::identity(&b, 2).unwrap();
        assert_eq!(rook_mul(&b, &a, &id).unwrap(), a);
        assert!(RookMatrix::new(&b, 2, vec![1, 1, 0, 0]).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let b = two();
        let a = RookMatrix::zero(&b, 2);
        let c = RookMatrix::zero(&b, 3);
        assert_eq!(rook_mul(&b, &a, &c).unwrap_err(), Error::DimensionMismatch(2, 3));
    }

    #[test]
    fn sizes_of_mn_g0() {
        assert_eq!(mn_g0_size(2, 1), 7);
        assert_eq!(mn_g0_size(1, 2), 3);
        assert_eq!(mn_g0_size(2, 2), 17);
        assert_eq!(build_mn_g0(2, &z2()).unwrap().semigroup.size(), 17);
        assert!(matches!(build_mn_g0(6, &trivial_group()), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn mn_over_trivial_group_is_the_symmetric_inverse_monoid() {
        let m = build_mn_g0(2, &trivial_group()).unwrap();
        assert_eq!(*m.semigroup.base(), families::symmetric_inverse_monoid(2));
        let m3 = build_mn_g0(3, &trivial_group()).unwrap();
        assert_eq!(*m3.semigroup.base(), families::symmetric_inverse_monoid(3));
    }

    #[test]
    fn decompositions() {
        let i2 = BooleanSemigroup::new(families::symmetric_inverse_monoid(2)).unwrap();
        let d = decompose(&i2).unwrap();
        assert_eq!(d.signature_names(), vec![(2, "trivial".to_string())]);
        let z = BooleanSemigroup::new(families::zero_group(&families::cyclic_group(2))).unwrap();
        assert_eq!(decompose(&z).unwrap().signature_names(), vec![(1, "Z2".to_string())]);
        let p = decompose(&i2.direct_product(&z)).unwrap();
        let mut names = p.signature_names();
        names.sort();
        assert_eq!(names, vec![(1, "Z2".to_string()), (2, "trivial".to_string())]);
        let b2 = BooleanSemigroup::new(families::powerset(2)).unwrap();
        assert_eq!(decompose(&b2).unwrap().signature.len(), 2);
    }
}
