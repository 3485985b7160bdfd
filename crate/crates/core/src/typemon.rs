//! The type monoid of a finite Boolean inverse monoid, realized as `ℕ^r`.
//!
//! Coordinate `i` counts the atomic idempotents in the `i`-th component of
//! the atoms groupoid, components ordered by least atom id.

use std::collections::{BTreeSet, HashMap};

use crate::boolean::{AdditiveIdeal, BooleanSemigroup};
use crate::error::{Error, Result};
use crate::rook::RookMatrix;
use crate::set::ElemSet;
use crate::Elem;

pub type TypeVector = Vec<usize>;

/// Diagonal idempotent matrices examined by [`type_via_matrices`].
pub const MATRIX_ORACLE_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeMonoid {
    pub rank: usize,
    /// Atoms of each component, components ordered by least atom.
    pub components: Vec<Vec<Elem>>,
    pub idempotents: Vec<Elem>,
    /// `tau[i]` is `τ(idempotents[i])`.
    pub tau: Vec<TypeVector>,
}

impl TypeMonoid {
    pub fn tau_of(&self, e: Elem) -> Option<&TypeVector> {
        self.idempotents.binary_search(&e).ok().map(|i| &self.tau[i])
    }

    /// Distinct values of `τ`, sorted.
    pub fn image(&self) -> Vec<TypeVector> {
        let set: BTreeSet<&TypeVector> = self.tau.iter().collect();
        set.into_iter().cloned().collect()
    }
}

fn add(u: &[usize], v: &[usize]) -> TypeVector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn support(v: &[usize]) -> u32 {
    v.iter().enumerate().filter(|(_, &x)| x > 0).fold(0, |m, (i, _)| m | 1 << i)
}

/// Computes `τ` and checks it: `τ(0) = 0`, additivity on orthogonal pairs,
/// `τ(e) = τ(f)` exactly when `e 𝒟 f`, monotonicity with
/// `τ(f) = τ(e) + τ(f ∖ e)`, and that the image is a lower set.
pub fn type_monoid(s: &BooleanSemigroup) -> Result<TypeMonoid> {
    let atoms = s.atoms();
    let g = s.groupoid_on(&atoms)?;
    let components: Vec<Vec<Elem>> = g
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| atoms[i]).collect())
        .collect();
    let mut component_of = HashMap::new();
    for (i, c) in components.iter().enumerate() {
        for &a in c {
            component_of.insert(a, i);
        }
    }
    let idempotents = s.idempotents().to_vec();
    let tau = idempotents
        .iter()
        .map(|&e| {
            let mut v = vec![0; components.len()];
            for a in s.atoms_below(e) {
                if s.is_idempotent(a) {
                    v[component_of[&a]] += 1;
                }
            }
            v
        })
        .collect();
    let tm = TypeMonoid {
        rank: components.len(),
        components,
        idempotents,
        tau,
    };
    match valuation_failure(s, &tm) {
        Some(what) => Err(Error::VerificationFailed(what)),
        None => Ok(tm),
    }
}

/// The first failed valuation property of `tm`, described.
pub fn valuation_failure(s: &BooleanSemigroup, tm: &TypeMonoid) -> Option<String> {
    let tau = |e: Elem| tm.tau_of(e).expect("idempotent");
    let z = s.zero_id();
    if tau(z).iter().any(|&x| x != 0) {
        return Some("tau(0) is not zero".into());
    }
    let es = &tm.idempotents;
    for &e in es {
        for &f in es {
            if s.mul(e, f) == z {
                let j = s.join(e, f).expect("orthogonal idempotents have a join");
                if *tau(j) != add(tau(e), tau(f)) {
                    return Some(format!("tau is not additive on ({e}, {f})"));
                }
            }
            if s.d_related(e, f) != (tau(e) == tau(f)) {
                return Some(format!("tau and D disagree on ({e}, {f})"));
            }
            if s.leq(e, f) {
                let rest = s.relative_complement(f, e).ok()?;
                if *tau(f) != add(tau(e), tau(rest)) {
                    return Some(format!("tau({f}) is not tau({e}) + tau({f} \\ {e})"));
                }
            }
        }
    }
    let image: BTreeSet<TypeVector> = tm.tau.iter().cloned().collect();
    for v in &image {
        for i in 0..v.len() {
            if v[i] > 0 {
                let mut w = v.clone();
                w[i] -= 1;
                if !image.contains(&w) {
                    return Some(format!("image of tau is not a lower set at {w:?}"));
                }
            }
        }
    }
    None
}

/// A refinement `c` of `a1 + a2 = b1 + b2`: row sums `a`, column sums `b`.
pub fn refine(a1: &[usize], a2: &[usize], b1: &[usize], b2: &[usize]) -> Option<[[TypeVector; 2]; 2]> {
    let r = a1.len();
    let mut c = [[vec![0; r], vec![0; r]], [vec![0; r], vec![0; r]]];
    for k in 0..r {
        if a1[k] + a2[k] != b1[k] + b2[k] {
            return None;
        }
        let c11 = b1[k].saturating_sub(a2[k]);
        if c11 > a1[k].min(b1[k]) {
            return None;
        }
        c[0][0][k] = c11;
        c[0][1][k] = a1[k] - c11;
        c[1][0][k] = b1[k] - c11;
        c[1][1][k] = a2[k] + c11 - b1[k];
    }
    Some(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementCheck {
    pub refinement: bool,
    pub conical: bool,
    /// Equations `a1 + a2 = b1 + b2` among realized vectors that were checked.
    pub equations: usize,
}

/// Refinement over every equation among realized type vectors, and
/// conicality on the same vectors.
pub fn refinement_check(tm: &TypeMonoid) -> RefinementCheck {
    let image = tm.image();
    let mut by_sum: HashMap<TypeVector, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..image.len() {
        for j in 0..image.len() {
            by_sum.entry(add(&image[i], &image[j])).or_default().push((i, j));
        }
    }
    let mut refinement = true;
    let mut equations = 0;
    for pairs in by_sum.values() {
        for &(i, j) in pairs {
            for &(k, l) in pairs {
                equations += 1;
                let ok = refine(&image[i], &image[j], &image[k], &image[l]).is_some_and(|c| {
                    add(&c[0][0], &c[0][1]) == image[i]
                        && add(&c[1][0], &c[1][1]) == image[j]
                        && add(&c[0][0], &c[1][0]) == image[k]
                        && add(&c[0][1], &c[1][1]) == image[l]
                });
                refinement &= ok;
            }
        }
    }
    let conical = by_sum
        .iter()
        .filter(|(sum, _)| sum.iter().all(|&x| x == 0))
        .all(|(_, pairs)| pairs.iter().all(|&(i, j)| image[i].iter().chain(&image[j]).all(|&x| x == 0)));
    RefinementCheck {
        refinement,
        conical,
        equations,
    }
}

#[derive(Clone, Debug)]
pub struct IdealTriple {
    /// Self-conjugate join-closed order ideals of `E(S)`, as sorted id lists.
    pub selfconjugate: Vec<Vec<Elem>>,
    pub additive: Vec<AdditiveIdeal>,
    /// o-ideals of `ℕ^r`, each given by its support coordinates.
    pub o_ideals: Vec<Vec<usize>>,
    /// Index in `selfconjugate` of `E(A)` for each additive ideal `A`.
    pub to_selfconjugate: Vec<usize>,
    /// Index in `o_ideals` of the o-ideal generated by `τ(E(A))`.
    pub to_o_ideal: Vec<usize>,
    pub order_isomorphic: bool,
    pub zero_simplifying: bool,
    pub rank: usize,
}

impl IdealTriple {
    /// 0-simplifying exactly when the type monoid has rank one.
    pub fn rank_one_iff_zero_simplifying(&self) -> bool {
        self.zero_simplifying == (self.rank == 1)
    }
}

fn index_of<T: PartialEq>(items: &[T], x: &T) -> Option<usize> {
    items.iter().position(|y| y == x)
}

/// The three ideal lattices and the order isomorphisms `A ↦ E(A)`,
/// `F ↦ SFS` and `A ↦ supp τ(E(A))`.
pub fn ideal_triple(s: &BooleanSemigroup, tm: &TypeMonoid) -> IdealTriple {
    let es = s.idempotents();
    // in a finite lattice a join-closed order ideal is the down-set of its join
    let selfconjugate: Vec<Vec<Elem>> = es
        .iter()
        .map(|&e| es.iter().copied().filter(|&f| s.leq(f, e)).collect::<Vec<_>>())
        .filter(|f| {
            f.iter()
                .all(|&x| s.elements().all(|a| f.contains(&s.product(&[s.inv(a), x, a]))))
        })
        .collect();
    let additive = s.additive_ideals();
    let r = tm.rank;
    let mut o_ideals: Vec<Vec<usize>> = (0u32..1 << r)
        .map(|m| (0..r).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    o_ideals.sort_by_key(|j| (j.len(), j.clone()));

    let mut ok = true;
    let mut to_selfconjugate = Vec::with_capacity(additive.len());
    let mut to_o_ideal = Vec::with_capacity(additive.len());
    for a in &additive {
        let e_of: Vec<Elem> = es.iter().copied().filter(|&e| a.contains(e)).collect();
        let i = index_of(&selfconjugate, &e_of);
        ok &= i.is_some();
        to_selfconjugate.push(i.unwrap_or(usize::MAX));
        let mask = e_of.iter().fold(0, |m, &e| m | support(tm.tau_of(e).unwrap()));
        let j: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
        to_o_ideal.push(index_of(&o_ideals, &j).unwrap());
    }
    // inverses: F ↦ SFS and J ↦ {a : supp τ(d(a)) ⊆ J}
    let n = s.size();
    for (k, f) in selfconjugate.iter().enumerate() {
        let sfs = ElemSet::from_elems(
            n,
            f.iter()
                .flat_map(|&x| s.elements().flat_map(move |a| s.elements().map(move |b| (a, x, b))))
                .map(|(a, x, b)| s.product(&[a, x, b])),
        );
        ok &= additive
            .iter()
            .position(|a| *a.members() == sfs)
            .is_some_and(|i| to_selfconjugate[i] == k);
    }
    for (k, j) in o_ideals.iter().enumerate() {
        let mask = j.iter().fold(0u32, |m, &i| m | 1 << i);
        let back = ElemSet::from_elems(
            n,
            s.elements().filter(|&a| support(tm.tau_of(s.d(a)).unwrap()) & !mask == 0),
        );
        ok &= additive
            .iter()
            .position(|a| *a.members() == back)
            .is_some_and(|i| to_o_ideal[i] == k);
    }
    ok &= selfconjugate.len() == additive.len() && o_ideals.len() == additive.len();
    for (x, a) in additive.iter().enumerate() {
        for (y, b) in additive.iter().enumerate() {
            let le = a.is_subset(b);
            if ok {
                let (fa, fb) = (&selfconjugate[to_selfconjugate[x]], &selfconjugate[to_selfconjugate[y]]);
                ok &= le == fa.iter().all(|e| fb.contains(e));
                let (ja, jb) = (&o_ideals[to_o_ideal[x]], &o_ideals[to_o_ideal[y]]);
                ok &= le == ja.iter().all(|i| jb.contains(i));
            }
        }
    }
    IdealTriple {
        selfconjugate,
        additive,
        o_ideals,
        to_selfconjugate,
        to_o_ideal,
        order_isomorphic: ok,
        zero_simplifying: s.is_zero_simplifying().holds,
        rank: r,
    }
}

/// Subsets of the box `{0..=bound}^r` that contain 0, are closed under
/// sums landing in the box, and contain both summands of each member, as
/// support sets. Only for boxes of at most 16 points.
pub fn o_ideals_in_box(r: usize, bound: usize) -> Vec<Vec<usize>> {
    let points: Vec<TypeVector> = (0..(bound + 1).pow(r as u32))
        .map(|mut k| {
            (0..r)
                .map(|_| {
                    let d = k % (bound + 1);
                    k /= bound + 1;
                    d
                })
                .collect()
        })
        .collect();
    assert!(points.len() <= 16, "box too large to scan");
    let pos: HashMap<&TypeVector, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut found = Vec::new();
    for mask in 0u32..1 << points.len() {
        let has = |i: usize| mask >> i & 1 == 1;
        if !has(0) {
            continue;
        }
        let closed = (0..points.len()).all(|i| {
            (0..points.len()).all(|j| match pos.get(&add(&points[i], &points[j])) {
                Some(&k) => has(k) == (has(i) && has(j)),
                None => true,
            })
        });
        if closed {
            let supp = (0..points.len()).filter(|&i| has(i)).fold(0, |m, i| m | support(&points[i]));
            found.push((0..r).filter(|&i| supp >> i & 1 == 1).collect::<Vec<_>>());
        }
    }
    found.sort_by_key(|j| (j.len(), j.clone()));
    found
}

/// Whether the support model of o-ideals agrees with the definition on a
/// box of each rank up to 3.
pub fn o_ideal_model_check() -> bool {
    [(1, 4), (2, 2), (3, 1)].into_iter().all(|(r, bound)| {
        let mut model: Vec<Vec<usize>> = (0u32..1 << r)
            .map(|m| (0..r).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        model.sort_by_key(|j| (j.len(), j.clone()));
        o_ideals_in_box(r, bound) == model
    })
}

/// Report of the matrix oracle for the type monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTypeOracle {
    pub n: usize,
    pub idempotent_count: usize,
    pub class_count: usize,
    /// Two diagonal idempotents are 𝒟-related in `M_N(S)` exactly when the
    /// sums of `τ` along their diagonals agree.
    pub classes_match_sum: bool,
    /// `e ↦ diag(e, 0, …)` identifies exactly the 𝒟-classes of `S`.
    pub delta_matches_tau: bool,
    /// `diag(e, 0, …)` and a 𝒟-equivalent copy of `diag(f, 0, …)` can be
    /// made orthogonal, for all idempotents `e, f`.
    pub orthogonally_separating: bool,
    /// Every `v` with `|v|₁ ≤ N` is the class of some diagonal idempotent.
    pub realizes_small_vectors: bool,
}

impl MatrixTypeOracle {
    pub fn holds(&self) -> bool {
        self.classes_match_sum && self.delta_matches_tau && self.orthogonally_separating && self.realizes_small_vectors
    }
}

/// Searches for a rook matrix `A` with `A*A = diag(e)` and `AA* = diag(f)`.
fn d_witness(s: &BooleanSemigroup, e: &[Elem], f: &[Elem], cands: &mut HashMap<(Elem, Elem), Vec<Elem>>) -> Option<Vec<Elem>> {
    let n = e.len();
    let z = s.zero_id();
    for &fi in f {
        for &ej in e {
            cands.entry((ej, fi)).or_insert_with(|| {
                s.elements()
                    .filter(|&a| s.leq(s.d(a), ej) && s.leq(s.r(a), fi))
                    .collect()
            });
        }
    }
    struct Ctx<'a> {
        s: &'a BooleanSemigroup,
        n: usize,
        e: &'a [Elem],
        f: &'a [Elem],
        cands: &'a HashMap<(Elem, Elem), Vec<Elem>>,
        entries: Vec<Elem>,
        col_d: Vec<Elem>,
        row_r: Vec<Elem>,
    }
    fn go(c: &mut Ctx, k: usize) -> bool {
        let n = c.n;
        if k == n * n {
            return c.col_d.iter().zip(c.e).all(|(x, y)| x == y);
        }
        let (i, j) = (k / n, k % n);
        let z = c.s.zero_id();
        for idx in 0..c.cands[&(c.e[j], c.f[i])].len() {
            let a = c.cands[&(c.e[j], c.f[i])][idx];
            let (da, ra) = (c.s.d(a), c.s.r(a));
            if c.s.mul(da, c.col_d[j]) != z || c.s.mul(ra, c.row_r[i]) != z {
                continue;
            }
            let (old_d, old_r) = (c.col_d[j], c.row_r[i]);
            c.col_d[j] = c.s.join(old_d, da).unwrap();
            c.row_r[i] = c.s.join(old_r, ra).unwrap();
            let row_done = j + 1 < n || c.row_r[i] == c.f[i];
            c.entries.push(a);
            if row_done && go(c, k + 1) {
                return true;
            }
            c.entries.pop();
            c.col_d[j] = old_d;
            c.row_r[i] = old_r;
        }
        false
    }
    let mut ctx = Ctx {
        s,
        n,
        e,
        f,
        cands,
        entries: Vec::with_capacity(n * n),
        col_d: vec![z; n],
        row_r: vec![z; n],
    };
    go(&mut ctx, 0).then_some(ctx.entries)
}

/// Brute-force `E(M_N(S))/𝒟` over diagonal idempotent rook matrices,
/// compared against the `ℕ^r` model. Every 𝒟 witness found is re-checked
/// with rook matrix multiplication.
pub fn type_via_matrices(s: &BooleanSemigroup, tm: &TypeMonoid, n: usize) -> Result<MatrixTypeOracle> {
    let es = s.idempotents();
    let count = es
        .len()
        .checked_pow(n as u32)
        .filter(|&c| c <= MATRIX_ORACLE_LIMIT)
        .ok_or(Error::TooLarge {
            size: es.len().saturating_pow(n as u32),
            limit: MATRIX_ORACLE_LIMIT,
        })?;
    let diags: Vec<Vec<Elem>> = (0..count)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let e = es[k % es.len()];
                    k /= es.len();
                    e
                })
                .collect()
        })
        .collect();
    let pos: HashMap<&Vec<Elem>, usize> = diags.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let diag_matrix = |d: &[Elem]| {
        let z = s.zero_id();
        RookMatrix::new(s, n, (0..n * n).map(|k| if k / n == k % n { d[k / n] } else { z }).collect())
    };

    // permuting the diagonal is realized by a permutation-shaped witness,
    // so only sorted diagonals need a search
    let mut class_of = vec![usize::MAX; count];
    let mut reps: Vec<usize> = Vec::new();
    let mut cands = HashMap::new();
    let is_sorted = |d: &[Elem]| d.windows(2).all(|w| w[0] <= w[1]);
    for i in (0..count).filter(|&i| is_sorted(&diags[i])) {
        for (c, &rep) in reps.iter().enumerate() {
            if let Some(entries) = d_witness(s, &diags[i], &diags[rep], &mut cands) {
                let a = RookMatrix::new(s, n, entries)?;
                let star = a.star(s);
                if crate::rook::rook_mul(s, &star, &a)? != diag_matrix(&diags[i])?
                    || crate::rook::rook_mul(s, &a, &star)? != diag_matrix(&diags[rep])?
                {
                    return Err(Error::VerificationFailed("D witness in the matrix oracle".into()));
                }
                class_of[i] = c;
                break;
            }
        }
        if class_of[i] == usize::MAX {
            class_of[i] = reps.len();
            reps.push(i);
        }
    }
    for i in (0..count).filter(|&i| !is_sorted(&diags[i])) {
        let mut sorted = diags[i].clone();
        sorted.sort_unstable();
        class_of[i] = class_of[pos[&sorted]];
    }
    // the permutation shortcut, checked on a sample of unsorted diagonals
    for i in (0..count).filter(|&i| !is_sorted(&diags[i])).take(8) {
        let mut sorted = diags[i].clone();
        sorted.sort_unstable();
        if d_witness(s, &diags[i], &sorted, &mut cands).is_none() {
            return Err(Error::VerificationFailed("diagonal permutation is not a D move".into()));
        }
    }

    let sum = |d: &[Elem]| {
        d.iter()
            .fold(vec![0; tm.rank], |acc, &e| add(&acc, tm.tau_of(e).unwrap()))
    };
    let sums: Vec<TypeVector> = diags.iter().map(|d| sum(d)).collect();
    let mut classes_match_sum = true;
    let mut class_sum: HashMap<usize, &TypeVector> = HashMap::new();
    let mut sum_class: HashMap<&TypeVector, usize> = HashMap::new();
    for i in 0..count {
        classes_match_sum &= **class_sum.entry(class_of[i]).or_insert(&sums[i]) == sums[i];
        classes_match_sum &= *sum_class.entry(&sums[i]).or_insert(class_of[i]) == class_of[i];
    }

    let z = s.zero_id();
    let delta = |e: Elem| -> usize {
        let mut d = vec![z; n];
        d[0] = e;
        pos[&d]
    };
    let mut delta_matches_tau = true;
    let mut orthogonally_separating = n >= 2;
    for &e in es {
        for &f in es {
            let same = class_of[delta(e)] == class_of[delta(f)];
            delta_matches_tau &= same == s.d_related(e, f);
            if n >= 2 {
                let mut moved = vec![z; n];
                moved[1] = f;
                orthogonally_separating &= class_of[pos[&moved]] == class_of[delta(f)];
            }
        }
    }

    let mut realizes_small_vectors = true;
    let mut v = vec![0; tm.rank];
    loop {
        if v.iter().sum::<usize>() <= n {
            realizes_small_vectors &= sum_class.contains_key(&v);
        }
        let Some(i) = (0..tm.rank).find(|&i| v[i] < n) else { break };
        v[i] += 1;
        for x in &mut v[..i] {
            *x = 0;
        }
    }

    Ok(MatrixTypeOracle {
        n,
        idempotent_count: count,
        class_count: reps.len(),
        classes_match_sum,
        delta_matches_tau,
        orthogonally_separating,
        realizes_small_vectors,
    })
}

/// A permutation `p` of coordinates with `a[k][p[i]] = b[k][i]` for all
/// rows `k`.
pub fn coordinate_match(a: &[TypeVector], b: &[TypeVector]) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let r = a.first().map_or(0, Vec::len);
    if b.first().map_or(0, Vec::len) != r {
        return None;
    }
    let column = |m: &[TypeVector], i: usize| m.iter().map(|row| row[i]).collect::<Vec<_>>();
    let mut used = vec![false; r];
    let mut perm = Vec::with_capacity(r);
    for i in 0..r {
        let want = column(b, i);
        let j = (0..r).find(|&j| !used[j] && column(a, j) == want)?;
        used[j] = true;
        perm.push(j);
    }
    Some(perm)
}

/// `τ_{S×T}(e, f)` is `τ_S(e)` followed by `τ_T(f)`, up to reordering
/// coordinates, and the ranks add.
pub fn product_type_check(s: &BooleanSemigroup, t: &BooleanSemigroup) -> Result<bool> {
    let (ts, tt) = (type_monoid(s)?, type_monoid(t)?);
    let p = s.direct_product(t);
    let tp = type_monoid(&p)?;
    if tp.rank != ts.rank + tt.rank {
        return Ok(false);
    }
    let mut concat = Vec::new();
    let mut actual = Vec::new();
    for (i, &e) in ts.idempotents.iter().enumerate() {
        for (j, &f) in tt.idempotents.iter().enumerate() {
            concat.push([ts.tau[i].clone(), tt.tau[j].clone()].concat());
            actual.push(tp.tau_of(e * t.size() + f).cloned().unwrap_or_default());
        }
    }
    Ok(coordinate_match(&actual, &concat).is_some())
}

/// `τ` on `S` and `τ` on `S/μ` agree along the projection, up to
/// reordering coordinates.
pub fn mu_type_invariance(s: &BooleanSemigroup) -> Result<bool> {
    let ts = type_monoid(s)?;
    let mq = s.mu_and_quotient();
    let Ok(q) = BooleanSemigroup::new(mq.quotient) else {
        return Ok(false);
    };
    let tq = type_monoid(&q)?;
    if tq.rank != ts.rank {
        return Ok(false);
    }
    let projected: Vec<TypeVector> = ts
        .idempotents
        .iter()
        .map(|&e| tq.tau_of(mq.projection[e]).cloned().unwrap_or_default())
        .collect();
    Ok(coordinate_match(&projected, &ts.tau).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn boolean(s: crate::InvSemigroup) -> BooleanSemigroup {
        BooleanSemigroup::new(s).unwrap()
    }

    fn z2zero() -> BooleanSemigroup {
        boolean(families::zero_group(&families::cyclic_group(2)))
    }

    #[test]
    fn ranks_and_values() {
        let i2 = boolean(families::symmetric_inverse_monoid(2));
        let t = type_monoid(&i2).unwrap();
        assert_eq!(t.rank, 1);
        assert_eq!(t.tau_of(5), Some(&vec![2]));
        assert_eq!(t.tau_of(1), Some(&vec![1]));
        assert_eq!(t.tau_of(0), Some(&vec![0]));
        let z = type_monoid(&z2zero()).unwrap();
        assert_eq!((z.rank, z.tau_of(1)), (1, Some(&vec![1])));
        let p = i2.direct_product(&z2zero());
        let tp = type_monoid(&p).unwrap();
        assert_eq!(tp.rank, 2);
        // identity (5, 1), z2zero atoms come first
        assert_eq!(tp.tau_of(5 * 3 + 1), Some(&vec![1, 2]));
    }

    #[test]
    fn refinement_examples() {
        let c = refine(&[1], &[1], &[2], &[0]).unwrap();
        assert_eq!(c, [[vec![1], vec![0]], [vec![1], vec![0]]]);
        let c = refine(&[1, 0], &[0, 1], &[1, 1], &[0, 0]).unwrap();
        assert_eq!(c, [[vec![1, 0], vec![0, 0]], [vec![0, 1], vec![0, 0]]]);
        assert_eq!(refine(&[1], &[0], &[0], &[0]), None);
        let i3 = type_monoid(&boolean(families::symmetric_inverse_monoid(3))).unwrap();
        let check = refinement_check(&i3);
        assert!(check.refinement && check.conical);
        assert!(check.equations > 0);
    }

    #[test]
    fn ideal_triples() {
        let i2 = boolean(families::symmetric_inverse_monoid(2));
        let t = ideal_triple(&i2, &type_monoid(&i2).unwrap());
        assert_eq!((t.selfconjugate.len(), t.additive.len(), t.o_ideals.len()), (2, 2, 2));
        assert!(t.order_isomorphic && t.zero_simplifying && t.rank_one_iff_zero_simplifying());
        let p = i2.direct_product(&z2zero());
        let t = ideal_triple(&p, &type_monoid(&p).unwrap());
        assert_eq!(t.additive.len(), 4);
        assert!(t.order_isomorphic && !t.zero_simplifying && t.rank_one_iff_zero_simplifying());
    }

    #[test]
    fn o_ideal_definition() {
        assert_eq!(o_ideals_in_box(1, 4), vec![vec![], vec![0]]);
        assert_eq!(o_ideals_in_box(2, 2).len(), 4);
        assert!(o_ideal_model_check());
    }

    #[test]
    fn matrix_oracle() {
        let z = z2zero();
        let o = type_via_matrices(&z, &type_monoid(&z).unwrap(), 2).unwrap();
        assert_eq!((o.idempotent_count, o.class_count), (4, 3));
        assert!(o.holds(), "{o:?}");
        let i2 = boolean(families::symmetric_inverse_monoid(2));
        let o = type_via_matrices(&i2, &type_monoid(&i2).unwrap(), 2).unwrap();
        assert_eq!(o.class_count, 5);
        assert!(o.holds(), "{o:?}");
    }

    #[test]
    fn products_and_mu() {
        let i2 = boolean(families::symmetric_inverse_monoid(2));
        assert!(product_type_check(&i2, &z2zero()).unwrap());
        assert!(product_type_check(&z2zero(), &z2zero()).unwrap());
        assert!(product_type_check(&i2, &boolean(families::trivial())).unwrap());
        assert!(mu_type_invariance(&z2zero()).unwrap());
        assert!(mu_type_invariance(&i2).unwrap());
        let m = boolean(families::equivariant_partial_bijections(2, &families::cyclic_group(2)));
        assert!(mu_type_invariance(&m).unwrap());
    }
}
