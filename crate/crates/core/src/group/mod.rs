//! Permutation groups, finite graded matrix groups, wreath products and
//! linear characters.

mod character;
mod matrix_group;
mod perm;
mod wreath;

pub use character::{CharacterSpec, LinearCharacter};
pub use matrix_group::{GradedGroupElement, MatrixGroup};
pub(crate) use perm::combinations;
pub use perm::{composition_shuffles, cycle_type, perm_sign, shuffle_reps, PermGroup, Permutation};
pub use wreath::{build_wreath, perm_group_of_wreath, wreath_sign, WreathElement};

/// Default order cap for the elements of a wreath product.
pub const DEFAULT_WREATH_CAP: usize = 200_000;
