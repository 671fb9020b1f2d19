//! Sturm chains over `Q(t)` evaluated in the real closed field of Puiseux series.
//!
//! Chains are built from the subresultant remainder sequence with Laurent
//! coefficients, each element negated where needed so that it is a positive
//! multiple (in the ordered field) of the classical Sturm element. Sign
//! variations are therefore unchanged.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::UniPoly;
use super::zprs;
use crate::coeff::{int, LaurentPoly, Sign, Valued};
use crate::error::{Error, Result};

pub(crate) type LPoly = Vec<LaurentPoly>;

fn trim(p: &mut LPoly) {
    while p.last().is_some_and(LaurentPoly::is_zero) {
        p.pop();
    }
}

fn derivative(p: &LPoly) -> LPoly {
    let mut d: LPoly = p.iter().enumerate().skip(1).map(|(i, a)| a.scale(&int(i as i64))).collect();
    trim(&mut d);
    d
}

/// Divides out the gcd of the coefficients, normalised to be positive.
fn primitive(p: LPoly) -> LPoly {
    let mut g = LaurentPoly::zero();
    for c in &p {
        g = LaurentPoly::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    // the gcd is normalised to lowest term 1 at t^0; also strip the t-power and
    // rational content of the lowest coefficients
    let min_e = p.iter().filter_map(LaurentPoly::min_exp).min().unwrap_or(0);
    let lowest = p
        .iter()
        .filter(|c| c.min_exp() == Some(min_e))
        .filter_map(|c| c.lowest().cloned())
        .map(|c| num_traits::Signed::abs(&c))
        .min();
    p.into_iter()
        .map(|c| {
            let c = if g.is_one() { c } else { c.div_exact(&g).expect("content divides") };
            let c = c.shift(-min_e);
            match &lowest {
                Some(l) => c.scale(&l.recip()),
                None => c,
            }
        })
        .collect()
}

pub(crate) fn prs_gcd(a: &LPoly, b: &LPoly) -> LPoly {
    let mut x = primitive(a.clone());
    let mut y = primitive(b.clone());
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if y.is_empty() {
        return x;
    }
    let last = zprs::subresultant_prs(zprs::to_zx(&x), zprs::to_zx(&y)).pop().expect("nonempty").0;
    primitive(zprs::from_zx(&last))
}

/// The four points at which chains are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Point {
    NegInf,
    Zero,
    One,
    PosInf,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Point::NegInf => "-inf",
            Point::Zero => "0",
            Point::One => "1",
            Point::PosInf => "+inf",
        })
    }
}

/// Open intervals of the ordered field with endpoints in `{-∞, 0, 1, +∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Interval {
    Positive,
    Negative,
    UnitInterval,
    AboveOne,
    Real,
}

impl Interval {
    pub fn endpoints(self) -> (Point, Point) {
        match self {
            Interval::Positive => (Point::Zero, Point::PosInf),
            Interval::Negative => (Point::NegInf, Point::Zero),
            Interval::UnitInterval => (Point::Zero, Point::One),
            Interval::AboveOne => (Point::One, Point::PosInf),
            Interval::Real => (Point::NegInf, Point::PosInf),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.endpoints();
        write!(f, "({a}, {b})")
    }
}

fn sign_at(p: &LPoly, x: Point) -> Sign {
    let Some(lc) = p.last() else { return Sign::Zero };
    match x {
        Point::Zero => p[0].sign_in_e(),
        Point::One => p.iter().fold(LaurentPoly::zero(), |acc, c| &acc + c).sign_in_e(),
        Point::PosInf => lc.sign_in_e(),
        Point::NegInf => {
            let s = lc.sign_in_e();
            if (p.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// The signed remainder sequence `p, p', …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<LPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Invalid("Sturm chain of the zero polynomial".into()));
        }
        let p0 = primitive(p.cleared());
        let p1 = derivative(&p0);
        let polys = zprs::signed(zprs::subresultant_prs(zprs::to_zx(&p0), zprs::to_zx(&p1)))
            .iter()
            .map(zprs::from_zx)
            .collect();
        Ok(Self { polys })
    }

    pub fn polys(&self) -> Vec<UniPoly> {
        self.polys.iter().map(|p| UniPoly::from_laurent(p.clone())).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn signs_at(&self, x: Point) -> Vec<Sign> {
        self.polys.iter().map(|p| sign_at(p, x)).collect()
    }

    pub fn variations(&self, x: Point) -> Result<usize> {
        let signs = self.signs_at(x);
        if signs.contains(&Sign::Indeterminate) {
            return Err(Error::IndeterminateSign);
        }
        let nz: Vec<Sign> = signs.into_iter().filter(|s| *s != Sign::Zero).collect();
        Ok(nz.windows(2).filter(|w| w[0] != w[1]).count())
    }

    /// Number of distinct roots in the open interval.
    pub fn count(&self, interval: Interval) -> Result<usize> {
        let (a, b) = interval.endpoints();
        for x in [a, b] {
            if matches!(x, Point::Zero | Point::One) && sign_at(&self.polys[0], x) == Sign::Zero {
                return Err(Error::EndpointIsRoot(x.to_string()));
            }
        }
        let (va, vb) = (self.variations(a)?, self.variations(b)?);
        Ok(va.saturating_sub(vb))
    }
}

/// Number of distinct roots of `p` in `interval`.
pub fn count_roots(p: &UniPoly, interval: Interval) -> Result<usize> {
    SturmChain::new(p)?.count(interval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RationalFunction;

    fn up(cs: &[&str]) -> UniPoly {
        UniPoly::from_laurent(cs.iter().map(|s| s.parse().unwrap()).collect())
    }

    #[test]
    fn reciprocal_pair_is_positive() {
        let p = up(&["1", "-t - t^-1", "1"]);
        assert_eq!(count_roots(&p, Interval::Positive).unwrap(), 2);
        assert_eq!(count_roots(&p, Interval::UnitInterval).unwrap(), 1);
        assert_eq!(count_roots(&p, Interval::AboveOne).unwrap(), 1);
        assert_eq!(count_roots(&p, Interval::Negative).unwrap(), 0);
    }

    #[test]
    fn no_real_roots() {
        let p = up(&["1", "0", "1"]);
        for i in [Interval::Real, Interval::Positive, Interval::Negative] {
            assert_eq!(count_roots(&p, i).unwrap(), 0);
        }
        let q = up(&["t^2", "t", "1"]);
        assert_eq!(count_roots(&q, Interval::Real).unwrap(), 0);
    }

    #[test]
    fn endpoint_roots_are_rejected() {
        let p = up(&["-1", "1"]);
        assert_eq!(count_roots(&p, Interval::UnitInterval), Err(Error::EndpointIsRoot("1".into())));
        assert_eq!(count_roots(&p, Interval::Real).unwrap(), 1);
    }

    #[test]
    fn mixed_signs_with_rational_coefficients() {
        // (λ - 2t)(λ + 1/3)(λ - t^-1)
        let f = |c: &str| UniPoly::linear(RationalFunction::from(c.parse::<LaurentPoly>().unwrap()));
        let p = &(&f("2t") * &f("-1/3")) * &f("t^-1");
        assert_eq!(count_roots(&p, Interval::Positive).unwrap(), 2);
        assert_eq!(count_roots(&p, Interval::Negative).unwrap(), 1);
        assert_eq!(count_roots(&p, Interval::UnitInterval).unwrap(), 1);
    }
}
