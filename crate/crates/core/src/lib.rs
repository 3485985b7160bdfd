//! Finite inverse semigroups and Boolean inverse monoids as multiplication
//! tables, with the structure theory that connects them to finite groupoids:
//! natural order and atoms, the restricted groupoid, local bisections,
//! rook-matrix decompositions, Booleanization, filters and type monoids.
//!
//! ```
//! use biskit::{families, BooleanSemigroup};
//!
//! let i2 = BooleanSemigroup::new(families::symmetric_inverse_monoid(2)).unwrap();
//! assert_eq!(i2.atoms().len(), 4);
//! assert!(i2.is_simple());
//! ```

pub mod boolean;
pub mod booleanization;
pub mod congruence;
pub mod corpus;
mod error;
pub mod families;
mod format;
pub mod groupoid;
pub mod iso;
pub mod order;
pub mod rook;
pub mod semigroup;
mod set;
pub mod typemon;
pub mod verify;

/// Elements are dense ids `0..size`.
pub type Elem = usize;

pub use boolean::{check_boolean, BooleanCheck, BooleanFailure, BooleanSemigroup};
pub use congruence::Congruence;
pub use error::{Error, ParseError, Result};
pub use groupoid::{ComponentForm, Groupoid};
pub use order::NaturalOrder;
pub use semigroup::InvSemigroup;
pub use set::ElemSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/tables.md")]
    pub mod tables {}
    #[doc = include_str!("../../../book/src/groupoids.md")]
    pub mod groupoids {}
    #[doc = include_str!("../../../book/src/boolean.md")]
    pub mod boolean {}
    #[doc = include_str!("../../../book/src/rook.md")]
    pub mod rook {}
    #[doc = include_str!("../../../book/src/booleanization.md")]
    pub mod booleanization {}
    #[doc = include_str!("../../../book/src/types.md")]
    pub mod types {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
