//! The Artin action of `B_n` on the free group `F_n`.
//!
//! `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes the other
//! generators. Letters act left to right: `artin_action(αβ, w)` equals
//! `artin_action(β, artin_action(α, w))`.

use super::word::{BraidWord, FreeWord, Letter};
use crate::error::{Error, Result};

fn image(braid_letter: Letter, x: Letter, out: &mut FreeWord) {
    let i = braid_letter.index;
    let subst: &[Letter] = &match (braid_letter.sign, x.index) {
        (1, j) if j == i => vec![Letter::pos(i), Letter::pos(i + 1), Letter::neg(i)],
        (1, j) if j == i + 1 => vec![Letter::pos(i)],
        (_, j) if j == i => vec![Letter::pos(i + 1)],
        (_, j) if j == i + 1 => vec![Letter::neg(i + 1), Letter::pos(i), Letter::pos(i + 1)],
        _ => vec![Letter::pos(x.index)],
    };
    if x.sign == 1 {
        for l in subst {
            out.push(*l);
        }
    } else {
        for l in subst.iter().rev() {
            out.push(l.inverse());
        }
    }
}

/// Applies a single braid letter.
pub fn act_letter(l: Letter, w: &FreeWord) -> FreeWord {
    let mut out = FreeWord::identity(w.rank());
    for x in w.letters() {
        image(l, *x, &mut out);
    }
    out
}

pub fn artin_action(braid: &BraidWord, word: &FreeWord) -> Result<FreeWord> {
    if braid.strands() != word.rank() {
        return Err(Error::RankMismatch { braid: braid.strands(), word: word.rank() });
    }
    Ok(braid.letters().iter().fold(word.clone(), |w, l| act_letter(*l, &w)))
}
