//! Truncated Magnus expansion `z ↦ 1 + Z` of words in the Schreier generators.
//!
//! Level `j` of a jet is a map from `j`-tuples of generators to integer
//! coefficients. The lowest nonzero level of `jet(w) - 1` is the lower central
//! depth of `w`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::schreier::{SchreierGen, SchreierWord};

pub type Level = BTreeMap<Vec<SchreierGen>, BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnusJet {
    depth: usize,
    levels: Vec<Level>,
}

fn add_into(level: &mut Level, key: Vec<SchreierGen>, c: BigInt) {
    use std::collections::btree_map::Entry;
    match level.entry(key) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl MagnusJet {
    pub fn one(depth: usize) -> Self {
        let mut levels = vec![Level::new(); depth + 1];
        levels[0].insert(Vec::new(), BigInt::one());
        MagnusJet { depth, levels }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn level(&self, j: usize) -> &Level {
        &self.levels[j]
    }

    pub fn is_one(&self) -> bool {
        self.levels[1..].iter().all(BTreeMap::is_empty)
    }

    /// Lowest `j ≥ 1` with a nonzero component.
    pub fn lowest_level(&self) -> Option<usize> {
        (1..=self.depth).find(|&j| !self.levels[j].is_empty())
    }

    /// Right multiplication by `(1 + Z)^{±1}`.
    fn mul_generator(&mut self, g: SchreierGen, sign: i8) {
        let mut next = self.levels.clone();
        for (j, slot) in next.iter_mut().enumerate().take(self.depth + 1).skip(1) {
            // (1 + Z)^{-1} = Σ (-Z)^r
            let max_r = if sign > 0 { 1 } else { j };
            for r in 1..=max_r {
                let c = if sign < 0 && r % 2 == 1 { -BigInt::one() } else { BigInt::one() };
                for (key, v) in &self.levels[j - r] {
                    let mut k = key.clone();
                    k.extend(std::iter::repeat_n(g, r));
                    add_into(slot, k, v * &c);
                }
            }
        }
        self.levels = next;
    }

    pub fn inverse(&self) -> MagnusJet {
        // (1 + X)^{-1} = Σ (-X)^r, truncated.
        let mut x = self.clone();
        x.levels[0].clear();
        let mut out = MagnusJet::one(self.depth);
        let mut power = MagnusJet::one(self.depth);
        for r in 1..=self.depth {
            power = &power * &x;
            for j in 1..=self.depth {
                for (k, v) in &power.levels[j] {
                    let v = if r % 2 == 1 { -v.clone() } else { v.clone() };
                    add_into(&mut out.levels[j], k.clone(), v);
                }
            }
        }
        out
    }
}

impl Mul for &MagnusJet {
    type Output = MagnusJet;

    fn mul(self, rhs: &MagnusJet) -> MagnusJet {
        let depth = self.depth.min(rhs.depth);
        let mut out = MagnusJet { depth, levels: vec![Level::new(); depth + 1] };
        for i in 0..=depth {
            for j in 0..=depth - i {
                for (a, ca) in &self.levels[i] {
                    for (b, cb) in &rhs.levels[j] {
                        let mut k = a.clone();
                        k.extend_from_slice(b);
                        add_into(&mut out.levels[i + j], k, ca * cb);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for MagnusJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for level in &self.levels {
            for (k, c) in level {
                let key: Vec<String> = k.iter().map(|g| g.to_string().replacen('z', "Z", 1)).collect();
                let key = if key.is_empty() { "1".to_string() } else { key.join("⊗") };
                parts.push(if c.is_one() { key } else { format!("{c}·{key}") });
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

pub fn magnus_jet(word: &SchreierWord, depth: usize) -> MagnusJet {
    let mut jet = MagnusJet::one(depth);
    for &(g, s) in word.letters() {
        jet.mul_generator(g, s);
    }
    jet
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize, k: i64) -> SchreierGen {
        SchreierGen::new(i, k)
    }

    #[test]
    fn generator_and_commutator() {
        let w = SchreierWord::generator(3, z(2, 0));
        let j = magnus_jet(&w, 2);
        assert_eq!(j.level(1).get(&vec![z(2, 0)]), Some(&BigInt::one()));
        assert!(j.level(2).is_empty());

        let c = SchreierWord::commutator(&w, &SchreierWord::generator(3, z(3, 0)));
        let j = magnus_jet(&c, 2);
        assert!(j.level(1).is_empty());
        let expected: Level =
            [(vec![z(2, 0), z(3, 0)], BigInt::one()), (vec![z(3, 0), z(2, 0)], -BigInt::one())].into();
        assert_eq!(j.level(2), &expected);
        assert_eq!(j.lowest_level(), Some(2));
    }

    #[test]
    fn inverse_cancels() {
        let w = SchreierWord::from_letters(3, [(z(2, 0), 1), (z(3, 1), -1), (z(2, 0), 1)]);
        for depth in 1..=4 {
            let j = magnus_jet(&w, depth);
            assert!((&j * &magnus_jet(&w.inverse(), depth)).is_one());
            assert_eq!(j.inverse(), magnus_jet(&w.inverse(), depth));
        }
    }
}
