//! Elements of `E^{⊗m}` with finite known support.
//!
//! A tensor element stores coefficients of exponent tuples `(q_1, …, q_m)`
//! together with a lexicographic frontier: every tuple at or above it may
//! carry unknown contributions from truncated factors, so only tuples below
//! the frontier are stored. The sign of an element is the sign of the
//! coefficient of its lex-least tuple.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::coeff::{PuiseuxSeries, Rational, Sign};

pub type Tuple = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    level: usize,
    support: BTreeMap<Tuple, Rational>,
    /// `None` when the element is known exactly.
    frontier: Option<Tuple>,
}

fn min_frontier(a: Option<Tuple>, b: Option<Tuple>) -> Option<Tuple> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Lex lower bound for the unknown part of `f_1 ⊗ ⋯ ⊗ f_m`, or `None` when
/// every factor is exact.
fn simple_frontier(factors: &[PuiseuxSeries]) -> Option<Tuple> {
    let vlb: Vec<Rational> = factors.iter().map(|f| f.valuation_bound().unwrap_or_else(Rational::zero)).collect();
    factors
        .iter()
        .enumerate()
        .filter_map(|(l, f)| {
            f.trunc().map(|t| {
                let mut tuple = vlb.clone();
                tuple[l] = t.clone();
                tuple
            })
        })
        .min()
}

impl TensorElement {
    pub fn zero(level: usize) -> Self {
        TensorElement { level, support: BTreeMap::new(), frontier: None }
    }

    /// An element given by explicit coefficients, known exactly below
    /// `frontier`.
    pub fn from_terms(
        level: usize,
        terms: impl IntoIterator<Item = (Tuple, Rational)>,
        frontier: Option<Tuple>,
    ) -> Self {
        let mut out = TensorElement { level, support: BTreeMap::new(), frontier };
        for (k, c) in terms {
            assert_eq!(k.len(), level, "tuple length must equal the level");
            out.add_term(k, c);
        }
        out
    }

    pub fn simple(coeff: &Rational, factors: &[PuiseuxSeries]) -> Self {
        Self::sum_of_simple(factors.len(), &[(coeff.clone(), factors.to_vec())])
    }

    /// `Σ c · f_1 ⊗ ⋯ ⊗ f_m`, enumerating only tuples below the common
    /// frontier.
    pub fn sum_of_simple(level: usize, terms: &[(Rational, Vec<PuiseuxSeries>)]) -> Self {
        let live: Vec<_> =
            terms.iter().filter(|(c, fs)| !c.is_zero() && !fs.iter().any(PuiseuxSeries::is_exact_zero)).collect();
        let frontier = live.iter().fold(None, |acc, (_, fs)| min_frontier(acc, simple_frontier(fs)));
        let mut out = TensorElement { level, support: BTreeMap::new(), frontier };
        for (c, fs) in live {
            assert_eq!(fs.len(), level, "factor count must equal the level");
            let lists: Vec<Vec<(Rational, Rational)>> =
                fs.iter().map(|f| f.terms().map(|(e, c)| (e, c.clone())).collect()).collect();
            let mut prefix = Vec::with_capacity(level);
            out.expand(&lists, &mut prefix, c.clone(), true);
        }
        out
    }

    fn expand(&mut self, lists: &[Vec<(Rational, Rational)>], prefix: &mut Tuple, coeff: Rational, tight: bool) {
        let r = prefix.len();
        if r == lists.len() {
            if !tight || self.below_frontier(prefix) {
                self.add_term(prefix.clone(), coeff);
            }
            return;
        }
        for (e, c) in &lists[r] {
            let mut still_tight = false;
            if tight {
                if let Some(f) = &self.frontier {
                    match e.cmp(&f[r]) {
                        Ordering::Greater => break,
                        Ordering::Equal => still_tight = true,
                        Ordering::Less => {}
                    }
                }
            }
            prefix.push(e.clone());
            self.expand(lists, prefix, &coeff * c, still_tight);
            prefix.pop();
        }
    }

    fn below_frontier(&self, k: &Tuple) -> bool {
        self.frontier.as_ref().is_none_or(|f| k < f)
    }

    fn add_term(&mut self, k: Tuple, c: Rational) {
        if c.is_zero() || !self.below_frontier(&k) {
            return;
        }
        let slot = self.support.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.support.remove(&k);
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn support(&self) -> &BTreeMap<Tuple, Rational> {
        &self.support
    }

    pub fn frontier(&self) -> Option<&Tuple> {
        self.frontier.as_ref()
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement {
            level: self.level,
            support: BTreeMap::new(),
            frontier: min_frontier(self.frontier.clone(), other.frontier.clone()),
        };
        for (k, c) in self.support.iter().chain(&other.support) {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        let mut out = TensorElement { level: self.level, support: BTreeMap::new(), frontier: self.frontier.clone() };
        for (k, v) in &self.support {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// The lex-least tuple and its coefficient.
    pub fn lowest_term(&self) -> Option<(&Tuple, &Rational)> {
        self.support.iter().next()
    }

    pub fn sign(&self) -> Sign {
        match (self.lowest_term(), &self.frontier) {
            (Some((_, c)), _) => {
                if c.is_positive() {
                    Sign::Positive
                } else {
                    Sign::Negative
                }
            }
            (None, None) => Sign::Zero,
            (None, Some(_)) => Sign::Indeterminate,
        }
    }
}

pub fn tensor_sign(x: &TensorElement) -> Sign {
    x.sign()
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .support
            .iter()
            .map(|(k, c)| {
                let key: Vec<String> = k.iter().map(|e| format!("t^{e}")).collect();
                format!("{c}·({})", key.join("⊗"))
            })
            .collect();
        if let Some(fr) = &self.frontier {
            let key: Vec<String> = fr.iter().map(ToString::to_string).collect();
            parts.push(format!("O({})", key.join(", ")));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rat};

    fn ps(s: &str) -> PuiseuxSeries {
        s.parse().unwrap()
    }

    #[test]
    fn lex_least_decides() {
        let x =
            TensorElement::from_terms(2, [(vec![rat(1, 2), int(-1)], int(2)), (vec![int(1), int(-3)], int(-1))], None);
        assert_eq!(tensor_sign(&x), Sign::Positive);
        assert_eq!(tensor_sign(&TensorElement::zero(2)), Sign::Zero);
    }

    #[test]
    fn simple_products() {
        let x = TensorElement::simple(&int(1), &[ps("1 - t + O(t^3)"), ps("-t^-1 + t")]);
        assert_eq!(x.frontier(), Some(&vec![int(3), int(-1)]));
        assert_eq!(x.support().len(), 4);
        assert_eq!(x.sign(), Sign::Negative);

        let y = TensorElement::simple(&int(1), &[ps("t + O(t^2)"), ps("1 + O(t)")]);
        // (t + O(t^2)) ⊗ (1 + O(t)): the (1, 0) term is known, (1, 1) is not.
        assert_eq!(y.frontier(), Some(&vec![int(1), int(1)]));
        assert_eq!(y.support().len(), 1);
    }

    #[test]
    fn cancellation_to_unknown() {
        let a = TensorElement::simple(&int(1), &[ps("1 + t + O(t^2)"), ps("1")]);
        let b = TensorElement::simple(&int(-1), &[ps("1"), ps("1")]);
        let s = a.add(&b);
        assert_eq!(s.sign(), Sign::Positive);
        let c = TensorElement::simple(&int(-1), &[ps("1 + t"), ps("1")]);
        assert_eq!(a.add(&c).sign(), Sign::Indeterminate);
        let exact = TensorElement::simple(&int(1), &[ps("1 + t"), ps("1")]);
        assert_eq!(exact.add(&c).sign(), Sign::Zero);
    }
}
