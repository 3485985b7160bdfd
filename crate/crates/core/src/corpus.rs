//! The bundled example tables, shipped under `corpus/` at the workspace
//! root and compiled in.

use crate::families;
use crate::groupoid::{product_groupoid, Groupoid};
use crate::semigroup::InvSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Semigroup,
    Groupoid,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    /// File name without extension.
    pub name: &'static str,
    pub kind: Kind,
    pub text: &'static str,
}

impl Entry {
    pub fn file_name(&self) -> String {
        match self.kind {
            Kind::Semigroup => format!("{}.ist", self.name),
            Kind::Groupoid => format!("{}.grp", self.name),
        }
    }
}

macro_rules! ist {
    ($name:literal) => {
        Entry {
            name: $name,
            kind: Kind::Semigroup,
            text: include_str!(concat!("../../../corpus/", $name, ".ist")),
        }
    };
}

macro_rules! grp {
    ($name:literal) => {
        Entry {
            name: $name,
            kind: Kind::Groupoid,
            text: include_str!(concat!("../../../corpus/", $name, ".grp")),
        }
    };
}

pub const ENTRIES: &[Entry] = &[
    ist!("trivial"),
    ist!("chain3"),
    ist!("antichain3"),
    ist!("powerset2"),
    ist!("z2-group"),
    ist!("z2zero"),
    ist!("z3zero"),
    ist!("b2"),
    ist!("b2-relabeled"),
    ist!("i2"),
    ist!("i3"),
    ist!("i2xz2zero"),
    ist!("m2z2zero"),
    grp!("trivial"),
    grp!("pair2"),
    grp!("z2"),
    grp!("z2-plus-pair2"),
    grp!("discrete3"),
    grp!("pair2-z2"),
];

/// A bundled semigroup by name.
pub fn semigroup(name: &str) -> Option<InvSemigroup> {
    ENTRIES
        .iter()
        .find(|e| e.kind == Kind::Semigroup && e.name == name)
        .map(|e| InvSemigroup::parse(e.text).expect("bundled tables are valid"))
}

/// A bundled groupoid by name.
pub fn groupoid(name: &str) -> Option<Groupoid> {
    ENTRIES
        .iter()
        .find(|e| e.kind == Kind::Groupoid && e.name == name)
        .map(|e| Groupoid::parse(e.text).expect("bundled tables are valid"))
}

pub fn semigroups() -> impl Iterator<Item = (&'static str, InvSemigroup)> {
    ENTRIES
        .iter()
        .filter(|e| e.kind == Kind::Semigroup)
        .map(|e| (e.name, InvSemigroup::parse(e.text).expect("bundled tables are valid")))
}

pub fn groupoids() -> impl Iterator<Item = (&'static str, Groupoid)> {
    ENTRIES
        .iter()
        .filter(|e| e.kind == Kind::Groupoid)
        .map(|e| (e.name, Groupoid::parse(e.text).expect("bundled tables are valid")))
}

/// The contents every corpus file should have, rebuilt from the families.
pub fn generate() -> Vec<(String, String)> {
    let z2 = families::cyclic_group(2);
    let z2zero = families::zero_group(&z2);
    let i2 = families::symmetric_inverse_monoid(2);
    let b2 = families::brandt(2);
    let semigroups: Vec<(&str, &str, InvSemigroup)> = vec![
        ("trivial", "the one-element semigroup", families::trivial()),
        ("chain3", "the chain 0 < e < 1", families::chain(3)),
        ("antichain3", "two incomparable idempotents over a zero", families::antichain_with_zero(2)),
        ("powerset2", "subsets of {1,2} under intersection, ids are bitmasks", families::powerset(2)),
        ("z2-group", "the cyclic group of order 2, no zero", z2.clone()),
        ("z2zero", "Z2 with a zero adjoined: 0, 1, g", z2zero.clone()),
        ("z3zero", "Z3 with a zero adjoined", families::zero_group(&families::cyclic_group(3))),
        ("b2", "the Brandt semigroup: 0, e1, e2, a, a^-1", b2.clone()),
        ("b2-relabeled", "b2 under the relabeling 0->4, 1->2, 2->0, 3->1, 4->3", b2.relabel(&[4, 2, 0, 1, 3]).unwrap()),
        ("i2", "partial bijections of {1,2}", i2.clone()),
        ("i3", "partial bijections of {1,2,3}", families::symmetric_inverse_monoid(3)),
        ("i2xz2zero", "i2 x z2zero, (a, b) has id 3a + b", i2.direct_product(&z2zero)),
        ("m2z2zero", "2x2 rook matrices over z2zero", families::equivariant_partial_bijections(2, &z2)),
    ];
    let gz2 = Groupoid::from_group(&z2).unwrap();
    let groupoids: Vec<(&str, &str, Groupoid)> = vec![
        ("trivial", "one identity arrow", Groupoid::discrete(1)),
        ("pair2", "the pair groupoid on 2 objects, x -> y has id 2y + x", Groupoid::pair(2)),
        ("z2", "Z2 as a one-object groupoid", gz2.clone()),
        ("z2-plus-pair2", "z2 and pair2 side by side", gz2.disjoint_union(&Groupoid::pair(2))),
        ("discrete3", "three identities", Groupoid::discrete(3)),
        ("pair2-z2", "2 x Z2 x 2", product_groupoid(2, &gz2)),
    ];
    let mut out = Vec::new();
    for (name, about, s) in semigroups {
        out.push((format!("{name}.ist"), format!("# {about}\n{}", s.to_ist())));
    }
    for (name, about, g) in groupoids {
        out.push((format!("{name}.grp"), format!("# {about}\n{}", g.to_grp())));
    }
    out
}
