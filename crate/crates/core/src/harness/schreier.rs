//! Reidemeister-Schreier rewriting of `K = ker μ` with transversal `{x_1^k}`.
//!
//! `K` is free on `z_{i,k} = x_1^k x_i x_1^{-(k+1)}` for `2 ≤ i ≤ n`, `k ∈ Z`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::braids::{free_reduce, FreeWord, Letter};
use crate::error::{Error, Result};

/// The generator `z_{index, level}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchreierGen {
    pub index: usize,
    pub level: i64,
}

impl SchreierGen {
    pub fn new(index: usize, level: i64) -> Self {
        assert!(index >= 2, "z_{{i,k}} needs i >= 2");
        SchreierGen { index, level }
    }

    /// `x_1^k x_i x_1^{-(k+1)}` as a word of rank `rank`.
    pub fn expand(&self, rank: usize) -> FreeWord {
        let x1_pow =
            |k: i64| std::iter::repeat_n(Letter::new(1, if k < 0 { -1 } else { 1 }), k.unsigned_abs() as usize);
        let mut raw: Vec<Letter> = x1_pow(self.level).collect();
        raw.push(Letter::pos(self.index));
        raw.extend(x1_pow(-(self.level + 1)));
        free_reduce(rank, raw)
    }

    /// The generator after conjugation by `x_1`.
    pub fn shifted(&self, k: i64) -> Self {
        SchreierGen { index: self.index, level: self.level + k }
    }
}

impl fmt::Display for SchreierGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}_{}", self.index, self.level)
    }
}

/// A freely reduced word in the `z_{i,k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchreierWord {
    rank: usize,
    letters: Vec<(SchreierGen, i8)>,
}

impl SchreierWord {
    pub fn identity(rank: usize) -> Self {
        SchreierWord { rank, letters: Vec::new() }
    }

    pub fn from_letters(rank: usize, raw: impl IntoIterator<Item = (SchreierGen, i8)>) -> Self {
        let mut w = Self::identity(rank);
        for (g, s) in raw {
            w.push(g, s);
        }
        w
    }

    pub fn generator(rank: usize, g: SchreierGen) -> Self {
        Self::from_letters(rank, [(g, 1)])
    }

    fn push(&mut self, g: SchreierGen, s: i8) {
        if self.letters.last() == Some(&(g, -s)) {
            self.letters.pop();
        } else {
            self.letters.push((g, s));
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[(SchreierGen, i8)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &SchreierWord) -> SchreierWord {
        Self::from_letters(self.rank, self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> SchreierWord {
        Self::from_letters(self.rank, self.letters.iter().rev().map(|&(g, s)| (g, -s)))
    }

    pub fn commutator(a: &SchreierWord, b: &SchreierWord) -> SchreierWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// The same element written in the `x_i`.
    pub fn expand(&self) -> FreeWord {
        let mut raw = Vec::new();
        for (g, s) in &self.letters {
            let w = g.expand(self.rank);
            if *s > 0 {
                raw.extend_from_slice(w.letters());
            } else {
                raw.extend(w.letters().iter().rev().map(|l| l.inverse()));
            }
        }
        free_reduce(self.rank, raw)
    }
}

impl fmt::Display for SchreierWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|(g, s)| if *s > 0 { g.to_string() } else { format!("{g}^-1") }).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for SchreierWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Rewrites a word with exponent sum zero in the Schreier generators.
pub fn rewrite_into_k(word: &FreeWord) -> Result<SchreierWord> {
    let mu = word.mu();
    if mu != 0 {
        return Err(Error::NonzeroExponentSum(mu));
    }
    let mut out = SchreierWord::identity(word.rank());
    let mut level = 0i64;
    for l in word.letters() {
        match (l.index, l.sign) {
            (1, s) => level += s as i64,
            (i, 1) => {
                out.push(SchreierGen::new(i, level), 1);
                level += 1;
            }
            (i, _) => {
                level -= 1;
                out.push(SchreierGen::new(i, level), -1);
            }
        }
    }
    debug_assert_eq!(level, 0);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(s: &str) -> FreeWord {
        FreeWord::parse(s, 3).unwrap()
    }

    #[test]
    fn examples() {
        let z20 = SchreierWord::generator(3, SchreierGen::new(2, 0));
        assert_eq!(rewrite_into_k(&fw("x2 x1^-1")).unwrap(), z20);
        assert_eq!(rewrite_into_k(&fw("x1 x2^-1")).unwrap(), z20.inverse());
        let z21 = SchreierWord::generator(3, SchreierGen::new(2, 1));
        assert_eq!(rewrite_into_k(&fw("x1 x2 x1^-2")).unwrap(), z21);
        assert_eq!(rewrite_into_k(&fw("x1")), Err(Error::NonzeroExponentSum(1)));
        assert_eq!(z21.to_string(), "z2_1");
    }

    #[test]
    fn round_trip() {
        for s in ["x2 x3^-1 x1 x2^-1 x1^-1 x3", "x1^3 x2^-1 x1^-2 x3^-1 x2 x1^-1 x2", "x3^-2 x1^2"] {
            let w = fw(s);
            assert_eq!(rewrite_into_k(&w).unwrap().expand(), w, "{s}");
        }
    }
}
