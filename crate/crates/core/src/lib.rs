//! Exact descent algebras for the Weyl groups `W(A_n)`.
//!
//! The crate enumerates `W(A_n) ≅ S_{n+1}` and works with:
//!
//! - distinguished coset representatives `X_K^J` and double coset
//!   representatives ([`cosets`]),
//! - Solomon's descent algebra inside `Z[W]`, with structure constants counted
//!   over double cosets and cross-checked by convolution ([`solomon`]),
//! - the class algebra on W-orbits of subsets of `Π` and its parabolic
//!   analogues ([`class_algebra`]),
//! - induction and restriction between parabolic class algebras
//!   ([`transfer`]),
//! - the parabolic Burnside ring and the comparison maps into it
//!   ([`burnside`]).
//!
//! ```
//! use descent::{class_label, Equivalence, WeylGroup};
//!
//! let g = WeylGroup::new(2).unwrap();
//! let a1 = g.subset(&[1]).unwrap();
//! let class = class_label(a1, g.full(), Equivalence::Full).unwrap();
//! let square = g.class_product(&class, &class).unwrap();
//! assert_eq!(square.terms().len(), 2);
//! ```

pub mod burnside;
pub mod class_algebra;
pub mod cli;
pub mod cosets;
mod error;
mod memo;
pub mod solomon;
pub mod transfer;
pub mod verify;
pub mod weyl;

pub use burnside::{theta, BurnsideElement};
pub use class_algebra::{class_basis, class_label, ClassLabel, ClassVector, Equivalence};
pub use cosets::{CosetRepSet, WeylGroup};
pub use error::{Error, Result};
pub use solomon::{convolve, GroupAlgebraElement};
pub use transfer::TransferContext;
pub use weyl::{class_of, Partition, Permutation, Root, SimpleSubset};
