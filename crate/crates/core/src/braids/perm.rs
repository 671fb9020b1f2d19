//! Underlying permutations of braids.

use std::fmt;

use serde::Serialize;

use super::word::BraidWord;

/// A bijection of `{1, …, n}`; `images[j-1]` is the image of `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    /// Nontrivial and trivial cycles, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.apply(j);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The image under `σ_i ↦ (i i+1)`, composing letters left to right.
pub fn permutation_of(braid: &BraidWord) -> Permutation {
    let n = braid.strands();
    // position[j] = where the strand starting at j currently sits
    let mut images: Vec<usize> = (1..=n).collect();
    for l in braid.letters() {
        for p in images.iter_mut() {
            if *p == l.index {
                *p = l.index + 1;
            } else if *p == l.index + 1 {
                *p = l.index;
            }
        }
    }
    Permutation { images }
}

pub fn is_pure(braid: &BraidWord) -> bool {
    permutation_of(braid).is_identity()
}

pub fn cycle_type(braid: &BraidWord) -> Vec<usize> {
    permutation_of(braid).cycle_type()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s, Some(3)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(permutation_of(&b("s1")).to_string(), "(1 2)");
        assert_eq!(cycle_type(&b("s1 s2")), vec![3]);
        assert_eq!(cycle_type(&b("s1 s2 s1 s2")), vec![3]);
        assert!(!is_pure(&b("s1 s2 s1 s2")));
        assert!(is_pure(&b("s1^2 s2^-2")));
        assert!(is_pure(&BraidWord::full_twist(3)));
        assert_eq!(cycle_type(&b("s1")), vec![2, 1]);
        assert!(Permutation::from_images(vec![1, 1]).is_none());
    }
}
