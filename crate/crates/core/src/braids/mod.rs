//! Braid words, free words, the Artin action, permutations and the reduced
//! Burau representation.

pub mod artin;
pub mod burau;
pub mod perm;
pub mod word;

pub use artin::artin_action;
pub use burau::{burau, BurauMatrix};
pub use perm::{cycle_type, is_pure, permutation_of, Permutation};
pub use word::{free_reduce, BraidWord, FreeWord, Letter};
