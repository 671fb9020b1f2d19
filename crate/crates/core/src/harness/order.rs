//! The bi-order on `F_3` determined by a 3-braid with positive Burau
//! eigenvalues.
//!
//! A word with `μ ≠ 0` is positive iff `μ > 0`. A nontrivial word in `K`
//! lives in some `K_j / K_{j+1} ⊂ H^{⊗j}`; its coordinates in the tensor
//! eigenbasis are elements of `E^{⊗j}`, and the lex-largest nonzero one
//! decides the sign.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::magnus::{magnus_jet, Level};
use super::schreier::{rewrite_into_k, SchreierGen};
use super::tensor::TensorElement;
use crate::braids::{burau, BraidWord, FreeWord};
use crate::coeff::{int, PuiseuxSeries, Rational, Sign, Valued};
use crate::error::{Error, Result};
use crate::spectral::eigen_signature;

pub const DEFAULT_DEPTH: usize = 3;
pub const DEFAULT_TRUNC: i64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderSpec {
    pub braid: BraidWord,
    pub strands: usize,
    /// Ascending in `E`.
    pub eigenvalues: Vec<PuiseuxSeries>,
    /// Row `i` satisfies `r_i ρ(β) = λ_i r_i`, up to an `r_{i-1}` term when
    /// the eigenvalue is repeated.
    pub eigenbasis: Vec<Vec<PuiseuxSeries>>,
    /// The inverse of the eigenbasis matrix.
    pub inverse: Vec<Vec<PuiseuxSeries>>,
    pub repeated: bool,
    pub depth_cap: usize,
    /// Relative precision of every series.
    pub trunc_order: i64,
}

fn vlb(s: &PuiseuxSeries) -> Rational {
    s.valuation_bound().unwrap_or_else(Rational::zero)
}

/// `n / d` with `prec` exponents of relative precision.
fn rel_div(n: &PuiseuxSeries, d: &PuiseuxSeries, prec: &Rational) -> Result<PuiseuxSeries> {
    if n.is_exact_zero() {
        return Ok(PuiseuxSeries::zero());
    }
    let cut = vlb(n) - vlb(d) + prec;
    n.div_to(d, &cut).map_err(|e| match e {
        Error::IndeterminateDivisor => Error::TruncationInsufficient,
        e => e,
    })
}

fn half(s: &PuiseuxSeries) -> PuiseuxSeries {
    s.scale(&Rational::new(1.into(), 2.into()))
}

pub fn build_order_spec(braid: &BraidWord, depth_cap: usize, trunc_order: i64) -> Result<OrderSpec> {
    if braid.strands() != 3 {
        return Err(Error::WrongStrands(braid.strands()));
    }
    let m = burau(braid);
    if !eigen_signature(&m)?.all_positive() {
        return Err(Error::NotAllPositive);
    }
    let prec = int(trunc_order);
    let e = |i, j| PuiseuxSeries::from_laurent(m.get(i, j));
    let (a, b, c, d) = (e(0, 0), e(0, 1), e(1, 0), e(1, 1));
    let one = PuiseuxSeries::one();
    let zero = PuiseuxSeries::zero();

    let (eigenvalues, eigenbasis, repeated) = if b.is_exact_zero() {
        let gap = &d - &a;
        match gap.sign_in_e() {
            Sign::Zero => {
                // a = d: (1, 0) is an eigenrow, (0, 1) completes a triangular basis.
                (vec![a.clone(), d], vec![vec![one.clone(), zero.clone()], vec![zero, one]], true)
            }
            s => {
                let x = rel_div(&c, &gap, &prec)?;
                let first = vec![one.clone(), zero];
                let second = vec![x, one];
                if s == Sign::Positive {
                    (vec![a, d], vec![first, second], false)
                } else {
                    (vec![d, a], vec![second, first], false)
                }
            }
        }
    } else {
        let tr = m.trace();
        let disc = &(&tr * &tr) - &m.det().scale(&int(4));
        let tr = PuiseuxSeries::from_laurent(&tr);
        let row = |lambda: &PuiseuxSeries| -> Result<Vec<PuiseuxSeries>> {
            Ok(vec![rel_div(&(lambda - &d), &b, &prec)?, one.clone()])
        };
        if disc.is_zero() {
            let lambda = half(&tr);
            let eigen = row(&lambda)?;
            (vec![lambda.clone(), lambda], vec![eigen, vec![one.clone(), zero]], true)
        } else {
            let exact = PuiseuxSeries::from_laurent(&disc);
            let root = match exact.sqrt() {
                Err(Error::NotAPerfectSquare) => exact.truncate(&(int(disc.min_exp().unwrap_or(0)) + &prec)).sqrt()?,
                r => r?,
            };
            let lo = half(&(&tr - &root));
            let hi = half(&(&tr + &root));
            let rows = vec![row(&lo)?, row(&hi)?];
            (vec![lo, hi], rows, false)
        }
    };
    for l in &eigenvalues {
        match l.sign_in_e() {
            Sign::Positive => {}
            Sign::Indeterminate => return Err(Error::TruncationInsufficient),
            _ => return Err(Error::NotAllPositive),
        }
    }
    let [[p, q], [r, s]] =
        [[eigenbasis[0][0].clone(), eigenbasis[0][1].clone()], [eigenbasis[1][0].clone(), eigenbasis[1][1].clone()]];
    let det = &(&p * &s) - &(&q * &r);
    let dinv = match det.sign_in_e() {
        Sign::Positive | Sign::Negative => det.inv_to(&(-vlb(&det) + &prec))?,
        _ => return Err(Error::TruncationInsufficient),
    };
    let inverse = vec![vec![&s * &dinv, -&(&q * &dinv)], vec![-&(&r * &dinv), &p * &dinv]];
    Ok(OrderSpec {
        braid: braid.clone(),
        strands: 3,
        eigenvalues,
        eigenbasis,
        inverse,
        repeated,
        depth_cap,
        trunc_order,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FailureMode {
    DepthExceeded,
    Truncation,
}

impl fmt::Display for FailureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureMode::DepthExceeded => "DEPTH_EXCEEDED",
            FailureMode::Truncation => "TRUNCATION",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderSign {
    pub value: Sign,
    /// `0` for words with `μ ≠ 0`, else the lower central level.
    pub level: Option<usize>,
    pub failure: Option<FailureMode>,
}

impl OrderSign {
    fn decided(value: Sign, level: usize) -> Self {
        OrderSign { value, level: Some(level), failure: None }
    }

    fn failed(mode: FailureMode, level: Option<usize>) -> Self {
        OrderSign { value: Sign::Indeterminate, level, failure: Some(mode) }
    }

    pub fn is_determinate(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for OrderSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.failure, self.level) {
            (Some(m), _) => write!(f, "INDETERMINATE ({m})"),
            (None, Some(l)) => write!(f, "{} at level {l}", self.value),
            (None, None) => write!(f, "{}", self.value),
        }
    }
}

impl OrderSpec {
    /// Coordinate `a` of `[z_{i,k}] = -t^k (v_1 + ⋯ + v_{i-1})` in the
    /// eigenbasis.
    fn generator_coordinate(&self, g: SchreierGen, a: usize) -> PuiseuxSeries {
        let mut acc = PuiseuxSeries::zero();
        for row in &self.inverse[..g.index - 1] {
            acc = &acc + &row[a];
        }
        (-&acc).shift(&int(g.level))
    }

    fn coordinate(
        &self,
        level: &Level,
        tuple: &[usize],
        cache: &mut HashMap<(SchreierGen, usize), PuiseuxSeries>,
    ) -> TensorElement {
        let terms: Vec<(Rational, Vec<PuiseuxSeries>)> = level
            .iter()
            .map(|(gens, c)| {
                let factors = gens
                    .iter()
                    .zip(tuple)
                    .map(|(&g, &a)| cache.entry((g, a)).or_insert_with(|| self.generator_coordinate(g, a)).clone())
                    .collect();
                (Rational::from_integer(c.clone()), factors)
            })
            .collect();
        TensorElement::sum_of_simple(tuple.len(), &terms)
    }

    /// Index tuples in `{0, …, n-2}^j`, lex-largest first.
    fn tuples(&self, j: usize) -> impl Iterator<Item = Vec<usize>> {
        let dim = self.strands - 1;
        (0..dim.pow(j as u32)).rev().map(move |code| (0..j).map(|l| code / dim.pow((j - 1 - l) as u32) % dim).collect())
    }

    /// The eigenbasis coordinates of a level-`j` jet component, lex-largest
    /// index tuple first.
    pub fn coordinates(&self, level: &Level, j: usize) -> Vec<(Vec<usize>, TensorElement)> {
        let mut cache = HashMap::new();
        self.tuples(j)
            .map(|t| {
                let x = self.coordinate(level, &t, &mut cache);
                (t, x)
            })
            .collect()
    }

    fn decide(&self, level: &Level, j: usize) -> OrderSign {
        let mut cache = HashMap::new();
        for t in self.tuples(j) {
            match self.coordinate(level, &t, &mut cache).sign() {
                Sign::Zero => continue,
                Sign::Indeterminate => return OrderSign::failed(FailureMode::Truncation, Some(j)),
                s => return OrderSign::decided(s, j),
            }
        }
        OrderSign::failed(FailureMode::Truncation, Some(j))
    }
}

pub fn order_sign(word: &FreeWord, spec: &OrderSpec) -> Result<OrderSign> {
    if word.rank() != spec.strands {
        return Err(Error::RankMismatch { braid: spec.strands, word: word.rank() });
    }
    if word.is_identity() {
        return Err(Error::TrivialWord);
    }
    let mu = word.mu();
    if mu != 0 {
        return Ok(OrderSign::decided(Sign::of_i64(mu), 0));
    }
    let k = rewrite_into_k(word)?;
    let jet = magnus_jet(&k, 1);
    if !jet.level(1).is_empty() {
        return Ok(spec.decide(jet.level(1), 1));
    }
    let jet = magnus_jet(&k, spec.depth_cap);
    Ok(match jet.lowest_level() {
        Some(j) => spec.decide(jet.level(j), j),
        None => OrderSign::failed(FailureMode::DepthExceeded, None),
    })
}

/// The sign of `w_1^{-1} w_2`: positive when `w_1 ≺ w_2`, zero when equal.
pub fn compare(w1: &FreeWord, w2: &FreeWord, spec: &OrderSpec) -> Result<OrderSign> {
    let diff = w1.inverse().concat(w2);
    if diff.is_identity() {
        return Ok(OrderSign { value: Sign::Zero, level: None, failure: None });
    }
    order_sign(&diff, spec)
}

/// `v · M − λ v` for eigenrow `i`, which vanishes up to truncation.
pub fn eigen_residual(spec: &OrderSpec, i: usize) -> Vec<PuiseuxSeries> {
    let m = burau(&spec.braid);
    let v = &spec.eigenbasis[i];
    (0..2)
        .map(|col| {
            let mut acc = -&(&v[col] * &spec.eigenvalues[i]);
            for (r, vr) in v.iter().enumerate() {
                acc = &acc + &(vr * &PuiseuxSeries::from_laurent(m.get(r, col)));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        BraidWord::parse(s, Some(3)).unwrap()
    }

    fn fw(s: &str) -> FreeWord {
        FreeWord::parse(s, 3).unwrap()
    }

    fn ps(s: &str) -> PuiseuxSeries {
        s.parse().unwrap()
    }

    #[test]
    fn sigma1_squared_spec() {
        let spec = build_order_spec(&b("s1^2"), 3, 12).unwrap();
        assert_eq!(spec.eigenvalues, vec![ps("t^2"), ps("1")]);
        assert_eq!(spec.eigenbasis[0], vec![ps("1"), ps("0")]);
        // 1/(1+t) = 1 - t + t^2 - ...
        let x = &spec.eigenbasis[1][0];
        assert_eq!(x.coeff(&int(0)), Some(int(1)));
        assert_eq!(x.coeff(&int(5)), Some(int(-1)));
        assert!(!spec.repeated);
        for i in 0..2 {
            assert!(eigen_residual(&spec, i).iter().all(|r| r.lowest_term().is_none()));
        }
    }

    #[test]
    fn even_even_spec() {
        let spec = build_order_spec(&b("s2^-1 s1 s2^-1 s1"), 3, 16).unwrap();
        assert!(spec.eigenvalues.iter().all(|l| l.sign_in_e() == Sign::Positive));
        for i in 0..2 {
            assert!(eigen_residual(&spec, i).iter().all(|r| r.lowest_term().is_none()), "{i}");
        }
        assert_eq!(build_order_spec(&b("s1"), 3, 16), Err(Error::NotAllPositive));
        let trivial = build_order_spec(&BraidWord::identity(3), 3, 16).unwrap();
        assert!(trivial.repeated);
    }

    #[test]
    fn signs() {
        let spec = build_order_spec(&b("s1^2"), 3, 12).unwrap();
        assert_eq!(order_sign(&fw("x1"), &spec).unwrap(), OrderSign::decided(Sign::Positive, 0));
        assert_eq!(order_sign(&fw("x1 x2^-1"), &spec).unwrap(), OrderSign::decided(Sign::Positive, 1));
        assert_eq!(order_sign(&fw("x2 x1^-1"), &spec).unwrap(), OrderSign::decided(Sign::Negative, 1));
        let comm = FreeWord::commutator(&fw("x1 x2^-1"), &fw("x2 x3^-1"));
        assert_eq!(order_sign(&comm, &spec).unwrap().level, Some(2));
        assert!(order_sign(&comm, &spec).unwrap().is_determinate());
        assert_eq!(order_sign(&FreeWord::identity(3), &spec), Err(Error::TrivialWord));
        assert_eq!(compare(&fw("x2"), &fw("x1"), &spec).unwrap().value, Sign::Positive);
    }
}
