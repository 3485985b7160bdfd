//! Acceptance run: one pass/fail line per criterion, nonzero exit if any
//! criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use biskit::boolean::{is_weakly_meet_preserving, join_failure, theta_iso};
use biskit::booleanization::{booleanization_iso, booleanize, enumerate_filters, filter_groupoid, gamma_extension};
use biskit::congruence::Congruence;
use biskit::corpus;
use biskit::groupoid::groupoid_iso;
use biskit::iso::semigroup_iso;
use biskit::rook::{decompose, rebuild};
use biskit::typemon::{
    coordinate_match, ideal_triple, mu_type_invariance, product_type_check, type_monoid, type_via_matrices,
    valuation_failure,
};
use biskit::verify::{boolean_laws, semigroup_laws, Outcome};
use biskit::{check_boolean, BooleanSemigroup, InvSemigroup};
use biskit_cli::{run, Cli};
use clap::Parser;

const BOOLEAN_CORPUS: [&str; 7] = ["i2", "i3", "z2zero", "z3zero", "powerset2", "i2xz2zero", "m2z2zero"];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn sg(name: &str) -> InvSemigroup {
    corpus::semigroup(name).unwrap_or_else(|| panic!("missing corpus entry {name}"))
}

fn boolean(name: &str) -> BooleanSemigroup {
    BooleanSemigroup::new(sg(name)).unwrap()
}

fn duality_roundtrip() -> Check {
    let mut i3_time = Duration::ZERO;
    for name in BOOLEAN_CORPUS {
        let start = Instant::now();
        let s = boolean(name);
        let t = theta_iso(&s).map_err(|e| format!("{name}: {e}"))?;
        let k = &t.k.semigroup;
        ensure(k.size() == s.size(), format!("{name}: sizes differ"))?;
        let mut seen = vec![false; s.size()];
        for &m in &t.map {
            ensure(!std::mem::replace(&mut seen[m], true), format!("{name}: theta not injective"))?;
        }
        for a in s.elements() {
            for b in s.elements() {
                ensure(t.map[s.mul(a, b)] == k.mul(t.map[a], t.map[b]), format!("{name}: table differs at ({a}, {b})"))?;
            }
        }
        ensure(join_failure(&s, k, &t.map).is_none(), format!("{name}: joins not preserved"))?;
        if name == "i3" {
            i3_time = start.elapsed();
        }
    }
    ensure(i3_time < Duration::from_secs(5), format!("i3 took {i3_time:?}"))?;
    Ok(format!("7 monoids, i3 in {i3_time:.2?}"))
}

fn decomposition() -> Check {
    let i2 = decompose(&boolean("i2")).map_err(|e| e.to_string())?;
    ensure(i2.signature_names() == vec![(2, "trivial".to_string())], "i2 signature")?;
    let m = boolean("m2z2zero");
    ensure(m.size() == 17, "m2z2zero size")?;
    let dm = decompose(&m).map_err(|e| e.to_string())?;
    ensure(dm.signature_names() == vec![(2, "Z2".to_string())], "m2z2zero signature")?;
    for (name, d) in [("i2", &i2), ("m2z2zero", &dm)] {
        ensure(d.verified, format!("{name}: decomposition not verified"))?;
        let (rebuilt, _) = rebuild(&d.signature).map_err(|e| e.to_string())?;
        let iso = semigroup_iso(&rebuilt, &sg(name), 24).map_err(|e| e.to_string())?;
        ensure(iso.is_some(), format!("{name}: rebuilt table is not isomorphic"))?;
    }
    Ok("{(2, trivial)} and {(2, Z2)}, rebuilt tables isomorphic".into())
}

fn booleanization() -> Check {
    let i2 = sg("i2");
    let bb2 = booleanize(&sg("b2")).map_err(|e| e.to_string())?;
    ensure(bb2.semigroup().size() == 7, "B(b2) size")?;
    ensure(semigroup_iso(bb2.semigroup(), &i2, 24).unwrap().is_some(), "B(b2) is not i2")?;
    ensure(booleanize(&sg("chain3")).unwrap().semigroup().size() == 4, "B(chain3) size")?;
    let bz2 = booleanize(&sg("z2-group")).unwrap();
    ensure(semigroup_iso(bz2.semigroup(), &sg("z2zero"), 24).unwrap().is_some(), "B(Z2) is not z2zero")?;

    // every homomorphism b2 -> i2, by enumerating all 7^5 maps
    let b2 = sg("b2");
    let (n, m) = (b2.size(), i2.size());
    let mut homs = 0;
    let mut alpha = vec![0; n];
    for code in 0..m.pow(n as u32) {
        let mut c = code;
        for slot in alpha.iter_mut() {
            *slot = c % m;
            c /= m;
        }
        if alpha[0] != 0 || !b2.is_homomorphism(&i2, &alpha) {
            continue;
        }
        homs += 1;
        let g = gamma_extension(&bb2, &alpha, &i2).map_err(|e| format!("alpha {alpha:?}: {e}"))?;
        for a in 0..n {
            ensure(g.map[bb2.beta[a]] == alpha[a], format!("gamma after beta differs for {alpha:?}"))?;
        }
        ensure(g.unique, format!("uniqueness certificate fails for {alpha:?}"))?;
    }
    ensure(homs > 1, "no homomorphisms found")?;
    Ok(format!("{homs} zero-preserving homomorphisms b2 -> i2 extended uniquely"))
}

fn iso_criterion() -> Check {
    let r = booleanization_iso(&sg("chain3"), &sg("antichain3")).map_err(|e| e.to_string())?;
    ensure(r.isomorphic, "chain3 vs antichain3")?;
    let (a, b) = (booleanize(&sg("chain3")).unwrap(), booleanize(&sg("antichain3")).unwrap());
    ensure(semigroup_iso(a.semigroup(), b.semigroup(), 24).unwrap().is_some(), "direct iso of Booleanizations")?;
    let r = booleanization_iso(&sg("b2"), &sg("z2zero")).map_err(|e| e.to_string())?;
    ensure(!r.isomorphic, "b2 vs z2zero")?;
    let (a, b) = (booleanize(&sg("b2")).unwrap(), booleanize(&sg("z2zero")).unwrap());
    ensure(semigroup_iso(a.semigroup(), b.semigroup(), 24).unwrap().is_none(), "direct iso disagrees")?;
    Ok("chain3 ~ antichain3, b2 !~ z2zero, confirmed directly".into())
}

fn filters() -> Check {
    let mut count = 0;
    for (name, s) in corpus::semigroups() {
        let f = enumerate_filters(&s);
        ensure(f.all_principal, format!("{name}: non-principal filter"))?;
        if !f.exhaustive {
            // no up-closed down-directed set has two minimal elements
            for x in s.nonzero() {
                for y in s.nonzero() {
                    if x != y && !s.leq(x, y) && !s.leq(y, x) {
                        let mut union = s.order().up_set(x);
                        union.union_with(&s.order().up_set(y));
                        let directed = union.iter().any(|c| s.leq(c, x) && s.leq(c, y));
                        ensure(!directed, format!("{name}: {x} and {y} share a filter"))?;
                    }
                }
            }
        }
        if let Ok(bs) = BooleanSemigroup::new(s.clone()) {
            let atoms = bs.atoms();
            ensure(f.ultrafilters.len() == atoms.len(), format!("{name}: ultrafilter count"))?;
            let g = filter_groupoid(&s, &f.ultrafilters).map_err(|e| e.to_string())?;
            let a = s.groupoid_on(&atoms).map_err(|e| e.to_string())?;
            ensure(groupoid_iso(&g, &a).unwrap().is_some(), format!("{name}: ultrafilter groupoid"))?;
        }
        count += 1;
    }
    Ok(format!("{count} semigroups, all filters principal"))
}

/// Additive ideals by scanning every subset of the carrier.
fn additive_ideals_by_subsets(s: &BooleanSemigroup) -> Vec<Vec<usize>> {
    let n = s.size();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let has = |a: usize| mask >> a & 1 == 1;
        if !has(s.zero_id()) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&a| has(a)).collect();
        let ideal = members
            .iter()
            .all(|&a| (0..n).all(|x| has(s.mul(x, a)) && has(s.mul(a, x))));
        let joins = ideal
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| s.join(a, b).map_or(true, has)));
        if joins {
            out.push(members);
        }
    }
    out
}

/// Additive ideals through their idempotents: join-closed order ideals of
/// `E` closed under conjugation, expanded by `a ∈ I` iff `d(a) ∈ I`.
fn additive_ideals_by_idempotents(s: &BooleanSemigroup) -> Vec<Vec<usize>> {
    let es = s.idempotents();
    let mut out = Vec::new();
    for mask in 0u32..1 << es.len() {
        let inside = |e: usize| es.iter().position(|&f| f == e).is_some_and(|i| mask >> i & 1 == 1);
        let ok = inside(s.zero_id())
            && es.iter().filter(|&&e| inside(e)).all(|&e| {
                es.iter().all(|&f| !s.leq(f, e) || inside(f))
                    && es.iter().all(|&f| !inside(f) || s.join(e, f).is_some_and(inside))
                    && s.elements().all(|a| inside(s.product(&[s.inv(a), e, a])))
            });
        if ok {
            out.push(s.elements().filter(|&a| inside(s.d(a))).collect());
        }
    }
    out
}

fn ideals_and_congruences() -> Check {
    let mut ideals_seen = 0;
    let mut names: Vec<&str> = BOOLEAN_CORPUS.to_vec();
    names.push("trivial");
    for name in names {
        let s = boolean(name);
        let mut found: Vec<Vec<usize>> = s.additive_ideals().iter().map(|i| i.to_vec()).collect();
        found.sort();
        let mut oracle = if s.size() <= 21 {
            additive_ideals_by_subsets(&s)
        } else {
            additive_ideals_by_idempotents(&s)
        };
        oracle.sort();
        ensure(found == oracle, format!("{name}: additive ideals differ from the exhaustive scan"))?;
        let additive_congruences: Vec<Congruence> = if s.size() <= 9 {
            Congruence::enumerate_all(&s)
                .into_iter()
                .filter(|c| s.is_additive_congruence(c))
                .collect()
        } else {
            Vec::new()
        };
        for ideal in s.additive_ideals() {
            let eq = s.epsilon_quotient(&ideal).map_err(|e| format!("{name}: {e}"))?;
            let w = ideal.to_vec();
            ensure(s.is_additive_congruence(&eq.congruence), format!("{name} {w:?}: not additive"))?;
            ensure(eq.congruence.kernel(&s).unwrap() == w, format!("{name} {w:?}: kernel"))?;
            ensure(check_boolean(eq.quotient.base()).boolean, format!("{name} {w:?}: quotient"))?;
            ensure(
                is_weakly_meet_preserving(&s, &eq.quotient, &eq.projection),
                format!("{name} {w:?}: weakly meet preserving"),
            )?;
            for c in &additive_congruences {
                if c.kernel(&s).unwrap() == w {
                    ensure(eq.congruence.is_contained_in(c), format!("{name} {w:?}: epsilon not least"))?;
                }
            }
            ideals_seen += 1;
        }
    }
    Ok(format!("{ideals_seen} additive ideals checked"))
}

const REQUIRED_LAWS: [&str; 13] = [
    "l-and-r-order",
    "wedge",
    "fish",
    "oj",
    "buffs",
    "restricted-product",
    "eggs",
    "chicken",
    "pork",
    "orthogonal",
    "properties-of-setminus(1)",
    "properties-of-setminus(2)",
    "properties-of-setminus(4)",
];

fn law_suite() -> Check {
    let mut cases = 0;
    let mut ran = std::collections::BTreeSet::new();
    for (name, s) in corpus::semigroups() {
        let mut results = semigroup_laws(&s);
        if let Ok(bs) = BooleanSemigroup::new(s.clone()) {
            results.extend(boolean_laws(&bs));
        }
        for r in results {
            match r.outcome {
                Outcome::Fail { .. } => return Err(format!("{name}: {r}")),
                Outcome::Pass { checked } => {
                    cases += checked;
                    ran.insert(r.name);
                }
                Outcome::Skipped(_) => {}
            }
        }
    }
    for law in REQUIRED_LAWS {
        ensure(ran.contains(law), format!("{law} never ran"))?;
    }
    Ok(format!("{cases} cases, zero failures"))
}

fn type_monoids() -> Check {
    let rank = |name: &str| type_monoid(&boolean(name)).map(|t| t.rank).map_err(|e| e.to_string());
    ensure(rank("i2")? == 1 && rank("z2zero")? == 1, "rank of i2 or z2zero")?;
    let p = boolean("i2xz2zero");
    let tp = type_monoid(&p).map_err(|e| e.to_string())?;
    ensure(tp.rank == 2, "rank of i2xz2zero")?;
    let top = tp.tau_of(5 * 3 + 1).cloned().unwrap();
    ensure(coordinate_match(std::slice::from_ref(&top), &[vec![2, 1]]).is_some(), format!("tau(1, 1) = {top:?}"))?;
    ensure(product_type_check(&boolean("i2"), &boolean("z2zero")).unwrap(), "product type")?;
    for name in BOOLEAN_CORPUS {
        let s = boolean(name);
        let tm = type_monoid(&s).map_err(|e| format!("{name}: {e}"))?;
        ensure(valuation_failure(&s, &tm).is_none(), format!("{name}: valuation"))?;
        let t = ideal_triple(&s, &tm);
        ensure(t.order_isomorphic, format!("{name}: ideal posets"))?;
        ensure(t.rank_one_iff_zero_simplifying(), format!("{name}: rank one vs 0-simplifying"))?;
        ensure(mu_type_invariance(&s).unwrap(), format!("{name}: mu invariance"))?;
        for n in [2, 3] {
            let o = type_via_matrices(&s, &tm, n).map_err(|e| format!("{name} N={n}: {e}"))?;
            ensure(o.holds(), format!("{name} N={n}: {o:?}"))?;
        }
    }
    Ok(format!("tau(1, 1) = {top:?} in least-atom coordinate order, matrix oracle N = 2, 3"))
}

fn dichotomy() -> Check {
    for name in BOOLEAN_CORPUS.iter().copied().chain(["trivial"]) {
        let s = boolean(name);
        let atoms = s.atoms();
        ensure(s.size() == 1 || !atoms.is_empty(), format!("{name} is atomless"))?;
        for a in s.nonzero() {
            let below: Vec<usize> = atoms.iter().copied().filter(|&x| s.leq(x, a)).collect();
            ensure(s.join_all(&below).ok() == Some(a), format!("{name}: {a} is not the join of its atoms"))?;
        }
    }
    Ok("every nonzero element is the join of the atoms below it".into())
}

fn mutations() -> Check {
    let start = Instant::now();
    let i2 = sg("i2");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut detected = 0;
    for k in 0..49 {
        let mut table = i2.table().to_vec();
        table[k] = (table[k] + 1) % 7;
        let rows: Vec<String> = table
            .chunks(7)
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        let path = dir.path().join(format!("m{k}.ist"));
        std::fs::write(&path, format!("n 7\n{}\n", rows.join("\n"))).map_err(|e| e.to_string())?;
        let cli = Cli::try_parse_from(["biskit", "verify", path.to_str().unwrap()]).unwrap();
        if run(&cli).code == 1 {
            detected += 1;
        }
    }
    let took = start.elapsed();
    ensure(detected == 49, format!("{detected}/49 detected"))?;
    ensure(took < Duration::from_secs(10), format!("took {took:?}"))?;
    Ok(format!("49/49 detected in {took:.2?}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("duality roundtrip", duality_roundtrip),
        ("decomposition", decomposition),
        ("booleanization", booleanization),
        ("isomorphism criterion", iso_criterion),
        ("filters", filters),
        ("ideals and congruences", ideals_and_congruences),
        ("law suite", law_suite),
        ("type monoid", type_monoids),
        ("finite dichotomy", dichotomy),
        ("mutation robustness", mutations),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    let total = start.elapsed();
    println!("{} of 10 criteria passed in {total:.2?}", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
