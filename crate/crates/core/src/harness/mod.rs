//! A desk-scale model of the bi-order on `F_n` built from a braid with
//! positive Burau eigenvalues: Schreier rewriting into `K = ker μ`, Magnus
//! jets, tensor coordinates in an eigenbasis, and randomized invariance
//! checks.

pub mod homology;
pub mod invariance;
pub mod magnus;
pub mod order;
pub mod schreier;
pub mod tensor;

pub use homology::{abelianize_k, burau_compatibility_check, HomologyVector};
pub use invariance::{random_kernel_word, random_word, verify_invariance, HarnessReport};
pub use magnus::{magnus_jet, MagnusJet};
pub use order::{
    build_order_spec, compare, order_sign, FailureMode, OrderSign, OrderSpec, DEFAULT_DEPTH, DEFAULT_TRUNC,
};
pub use schreier::{rewrite_into_k, SchreierGen, SchreierWord};
pub use tensor::{tensor_sign, TensorElement};
