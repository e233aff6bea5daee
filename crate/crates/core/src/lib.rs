//! Dessins d'enfants as permutation pairs, finite quotients of the free
//! group `F₂`, and GT-shadows acting on dessins.
//!
//! ```
//! use gt_dessins::{act, Dessin, Permutation, RawShadow};
//!
//! let x = Permutation::parse("(1,4,5,2)(3,6)", Some(6)).unwrap();
//! let y = Permutation::parse("(1,6,3,2)(4,5)", Some(6)).unwrap();
//! let d = Dessin::from_pair(&x, &y).unwrap();
//! let conj = act(&RawShadow::complex_conjugation(), &d).unwrap();
//! assert_eq!(conj.passport(), d.passport());
//! ```

pub mod dessin;
pub mod error;
pub mod group;
pub mod harness;
pub mod io;
pub mod perm;
pub mod quotient;
pub mod shadow;
pub mod word;

pub use dessin::{canonical_form, pair_is_transitive, third_entry, Dessin, Passport};
pub use error::{Error, Result};
pub use group::{commutator, hom_by_images_defined, PermGroup};
pub use harness::{analyze, orbit, orbit_of_shadows, subordinate, InvariantTable, OrbitReport};
pub use perm::{Partition, Permutation};
pub use quotient::{FiniteQuotient, DEFAULT_DERIVED_CAP, DEFAULT_REGULAR_CAP};
pub use shadow::{
    act, act_on_pair, compose, compose_raw, compose_unchecked, enumerate_charming,
    hexagon_one_word, hexagon_two_word, verify, GTShadow, RawShadow, Symmetries,
    VerificationReport,
};
pub use word::{FreeWord, Letter};
