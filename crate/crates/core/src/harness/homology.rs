//! `H_1(K)` as a free `Z[t^±1]`-module of rank `n-1`.
//!
//! The basis is `v_i = [x_i x_{i+1}^{-1}]` and `t` acts by conjugation with
//! `x_1`, so `[z_{i,k}] = -t^k (v_1 + ⋯ + v_{i-1})`.

use std::fmt;

use serde::Serialize;

use super::schreier::{rewrite_into_k, SchreierGen, SchreierWord};
use crate::braids::{artin_action, burau, BraidWord, FreeWord};
use crate::coeff::LaurentPoly;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyVector {
    pub coords: Vec<LaurentPoly>,
}

impl HomologyVector {
    pub fn zero(rank: usize) -> Self {
        HomologyVector { coords: vec![LaurentPoly::zero(); rank.saturating_sub(1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(LaurentPoly::is_zero)
    }

    /// `[z]` for a single generator.
    pub fn of_generator(rank: usize, g: SchreierGen) -> Self {
        let mut h = Self::zero(rank);
        for c in &mut h.coords[..g.index - 1] {
            *c = LaurentPoly::monomial(crate::coeff::int(-1), g.level);
        }
        h
    }

    fn add_scaled(&mut self, other: &HomologyVector, sign: i8) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if sign > 0 {
                *a += b;
            } else {
                *a = &*a - b;
            }
        }
    }
}

impl fmt::Display for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn abelianize_k(word: &SchreierWord) -> HomologyVector {
    let mut h = HomologyVector::zero(word.rank());
    for &(g, s) in word.letters() {
        h.add_scaled(&HomologyVector::of_generator(word.rank(), g), s);
    }
    h
}

/// Checks `[Θ(β)(w)] = [w]·ρ(β)` for a word `w` in `K`.
pub fn burau_compatibility_check(braid: &BraidWord, word: &FreeWord) -> Result<bool> {
    let before = abelianize_k(&rewrite_into_k(word)?);
    let after = abelianize_k(&rewrite_into_k(&artin_action(braid, word)?)?);
    Ok(burau(braid).apply_row(&before.coords) == after.coords)
}
