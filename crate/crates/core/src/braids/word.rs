//! Braid words and free-group words.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A generator with exponent `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub sign: i8,
}

impl Letter {
    pub fn new(index: usize, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be ±1");
        Self { index, sign }
    }

    pub fn pos(index: usize) -> Self {
        Self { index, sign: 1 }
    }

    pub fn neg(index: usize) -> Self {
        Self { index, sign: -1 }
    }

    pub fn inverse(self) -> Self {
        Self { index: self.index, sign: -self.sign }
    }
}

/// A word in `σ_1, …, σ_{n-1}`; not reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::IndexOutOfRange { index: l.index, strands });
        }
        Ok(Self { strands, letters })
    }

    /// Builds from signed indices: `2` is `σ_2`, `-2` is `σ_2^{-1}`.
    pub fn from_signed(strands: usize, gens: &[i64]) -> Result<Self> {
        let letters = gens
            .iter()
            .map(|&g| {
                if g == 0 {
                    Err(Error::Invalid("generator index 0".into()))
                } else {
                    Ok(Letter::new(g.unsigned_abs() as usize, if g > 0 { 1 } else { -1 }))
                }
            })
            .collect::<Result<_>>()?;
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("valid strands")
    }

    /// `σ_i^e`, for any integer `e`.
    pub fn sigma(strands: usize, index: usize, e: i64) -> Result<Self> {
        let l = Letter::new(index, if e >= 0 { 1 } else { -1 });
        Self::new(strands, vec![l; e.unsigned_abs() as usize])
    }

    /// The half twist `Δ = (σ_1⋯σ_{n-1})(σ_1⋯σ_{n-2})⋯σ_1`.
    pub fn half_twist(strands: usize) -> Self {
        let mut letters = Vec::new();
        for top in (1..strands).rev() {
            letters.extend((1..=top).map(Letter::pos));
        }
        Self::new(strands, letters).expect("valid strands")
    }

    /// The central full twist `Δ²`; for three strands, `(σ_1σ_2σ_1)²`.
    pub fn full_twist(strands: usize) -> Self {
        Self::half_twist(strands).pow(2)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The image under the abelianisation `B_n → Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Integer power; negative powers repeat the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// `g·self·g⁻¹`.
    pub fn conjugate_by(&self, g: &BraidWord) -> BraidWord {
        g.concat(self).concat(&g.inverse())
    }

    /// The same letters viewed in a braid group with more strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        Self::new(strands, self.letters.clone())
    }

    /// Parses `"1 -2 -2 1"` or `"s1 s2^-2 s1"`; `id`, `e` or an empty string
    /// denote the identity. With `strands = None` the count is one more than
    /// the largest index (at least 2).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for (pos, tok) in tokens(text) {
            if matches!(tok, "id" | "e") {
                continue;
            }
            let (index, e) = if let Some(rest) = tok.strip_prefix('s') {
                parse_power(rest, pos + 1)?
            } else {
                let g: i64 = tok.parse().map_err(|_| Error::Parse { pos, msg: format!("bad braid letter '{tok}'") })?;
                if g == 0 {
                    return Err(Error::Parse { pos, msg: "generator index 0".into() });
                }
                (g.unsigned_abs() as usize, g.signum())
            };
            let l = Letter::new(index, if e > 0 { 1 } else { -1 });
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        let inferred = letters.iter().map(|l| l.index + 1).max().unwrap_or(2).max(2);
        Self::new(strands.unwrap_or(inferred), letters)
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

/// Parses `<index>[^<exponent>]`; the exponent may be zero.
fn parse_power(s: &str, pos: usize) -> Result<(usize, i64)> {
    let (idx, exp) = match s.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (s, None),
    };
    let index: usize = idx.parse().map_err(|_| Error::Parse { pos, msg: format!("bad generator index '{idx}'") })?;
    if index == 0 {
        return Err(Error::Parse { pos, msg: "generator index 0".into() });
    }
    let e = match exp {
        None => 1,
        Some(e) => e
            .trim_start_matches('(')
            .trim_end_matches(')')
            .parse()
            .map_err(|_| Error::Parse { pos: pos + idx.len() + 1, msg: format!("bad exponent '{e}'") })?,
    };
    Ok((index, e))
}

fn write_runs(f: &mut fmt::Formatter<'_>, prefix: char, letters: &[Letter]) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let e = (j - i) as i64 * l.sign as i64;
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        write!(f, "{prefix}{}", l.index)?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        write_runs(f, 's', &self.letters)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A freely reduced word in `x_1, …, x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

/// Cancels adjacent inverse pairs. The result does not depend on the order of
/// cancellation.
pub fn free_reduce(rank: usize, raw: impl IntoIterator<Item = Letter>) -> FreeWord {
    let mut w = FreeWord { rank, letters: Vec::new() };
    for l in raw {
        w.push(l);
    }
    w
}

impl FreeWord {
    pub fn new(rank: usize, raw: Vec<Letter>) -> Result<Self> {
        if let Some(l) = raw.iter().find(|l| l.index == 0 || l.index > rank) {
            return Err(Error::IndexOutOfRange { index: l.index, strands: rank });
        }
        Ok(free_reduce(rank, raw))
    }

    pub fn identity(rank: usize) -> Self {
        Self { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, index: usize) -> Self {
        Self::new(rank, vec![Letter::pos(index)]).expect("index in range")
    }

    pub fn from_signed(rank: usize, gens: &[i64]) -> Result<Self> {
        let raw = gens
            .iter()
            .map(|&g| {
                if g == 0 {
                    Err(Error::Invalid("generator index 0".into()))
                } else {
                    Ok(Letter::new(g.unsigned_abs() as usize, if g > 0 { 1 } else { -1 }))
                }
            })
            .collect::<Result<_>>()?;
        Self::new(rank, raw)
    }

    pub(crate) fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub(crate) fn extend_word(&mut self, w: &FreeWord) {
        for l in &w.letters {
            self.push(*l);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// The exponent sum `μ`.
    pub fn mu(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        w.extend_word(other);
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.concat(self).concat(&g.inverse())
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = FreeWord::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            w.extend_word(&base);
        }
        w
    }

    /// Parses `"x1 x2^-1"`; `1`, `id`, `e` or an empty string denote the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut raw = Vec::new();
        for (pos, tok) in tokens(text) {
            if matches!(tok, "1" | "id" | "e") {
                continue;
            }
            let Some(rest) = tok.strip_prefix('x') else {
                return Err(Error::Parse { pos, msg: format!("bad free-group letter '{tok}'") });
            };
            let (index, e) = parse_power(rest, pos + 1)?;
            raw.extend(std::iter::repeat_n(Letter::new(index, if e > 0 { 1 } else { -1 }), e.unsigned_abs() as usize));
        }
        Self::new(rank, raw)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        write_runs(f, 'x', &self.letters)
    }
}

impl Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(s: &str) -> FreeWord {
        FreeWord::parse(s, 3).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert_eq!(fw("x1 x2 x2^-1 x3"), fw("x1 x3"));
        assert!(fw("x1 x1^-1").is_identity());
        assert_eq!(fw("x1 x2 x1^-1 x1 x2^-1"), fw("x1"));
        assert_eq!(fw("x1 x2 x1^-1").mu(), 1);
        assert_eq!(fw("1").mu(), 0);
    }

    #[test]
    fn braid_parsing_and_printing() {
        let a = BraidWord::parse("1 -2 -2 1", None).unwrap();
        let b = BraidWord::parse("s1 s2^-2 s1", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.strands(), 3);
        assert_eq!(a.to_string(), "s1 s2^-2 s1");
        assert_eq!(BraidWord::parse("s4^-3 s3^-3 s2^3 s1^3", None).unwrap().strands(), 5);
        assert_eq!(BraidWord::parse("s1", Some(5)).unwrap().strands(), 5);
        assert_eq!(BraidWord::parse("id", None).unwrap(), BraidWord::identity(2));
        assert_eq!(BraidWord::parse("", Some(3)).unwrap().to_string(), "id");
        assert!(BraidWord::parse("s3", Some(3)).is_err());
        match BraidWord::parse("s1 q2", None) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(BraidWord::parse("s1 s2^-3", None).unwrap().exponent_sum(), -2);
        assert_eq!(BraidWord::full_twist(3).exponent_sum(), 6);
        assert_eq!(BraidWord::full_twist(3).to_string(), "s1 s2 s1^2 s2 s1");
        assert_eq!(BraidWord::identity(3).exponent_sum(), 0);
    }
}
