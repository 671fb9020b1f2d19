//! Laurent polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{int, to_i64, Rational};
use super::sign::{DegMin, Valued};
use super::text;
use crate::error::{Error, Result};

/// A finite sum `Σ c_e t^e` with integer exponents and nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + ExactSizeIterator {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn lowest(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), e.unsigned_abs() as usize)
            };
            acc += c * p;
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power; negative powers only for monomials.
    pub fn powi(&self, n: i64) -> Option<Self> {
        if n >= 0 {
            return Some(self.pow(n as u32));
        }
        let inv = self.inv_monomial()?;
        Some(inv.pow(n.unsigned_abs() as u32))
    }

    /// `(-t)^n`.
    pub fn neg_t_pow(n: i64) -> Self {
        let c = if n.rem_euclid(2) == 0 { int(1) } else { int(-1) };
        Self::monomial(c, n)
    }

    pub fn inv_monomial(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next().expect("one term");
        Some(Self::monomial(c.recip(), -e))
    }

    /// Coefficients of `t^lo, t^(lo+1), …` after shifting the lowest term to `t^0`.
    pub(crate) fn dense(&self) -> (i64, Vec<Rational>) {
        let Some(lo) = self.min_exp() else { return (0, Vec::new()) };
        let hi = self.max_exp().expect("nonempty");
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i64, v: &[Rational]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (lo + i as i64, c.clone())))
    }

    /// Exact quotient in `Q[t^±1]`, if `d` divides `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.inv_monomial() {
            return Some(self * &inv);
        }
        let (la, a) = self.dense();
        let (lb, b) = d.dense();
        let (q, r) = dense_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(la - lb, &q))
    }

    /// Monic-normalised gcd: shifted to lowest exponent 0 with lowest coefficient 1,
    /// hence positive in the ordered field.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() {
            return b.normalized();
        }
        if b.is_zero() {
            return a.normalized();
        }
        if a.is_monomial() || b.is_monomial() {
            return Self::one();
        }
        let mut x = primitive_int(&a.dense().1);
        let mut y = primitive_int(&b.dense().1);
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = primitive_int_prem(&x, &y);
            x = y;
            y = r;
        }
        Self::from_terms(x.into_iter().enumerate().map(|(i, c)| (i as i64, Rational::from_integer(c)))).normalized()
    }

    /// The associate with lowest exponent 0 and lowest coefficient 1.
    pub fn normalized(&self) -> LaurentPoly {
        match (self.min_exp(), self.lowest()) {
            (Some(e), Some(c)) => self.shift(-e).scale(&c.recip()),
            _ => Self::zero(),
        }
    }

    pub fn map_exponents(&self, f: impl Fn(i64) -> i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }
}

/// Integer coefficients with no common factor, up to a rational multiple.
fn primitive_int(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    let g = out.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut out {
            *c /= &g;
        }
    }
    out
}

/// Primitive part of the pseudo-remainder of `a` by `b` over `Z`.
fn primitive_int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    let g = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut r {
            *c /= &g;
        }
    }
    r
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Polynomial long division of dense ascending coefficient vectors.
pub(crate) fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut bb = b.to_vec();
    trim(&mut bb);
    assert!(!bb.is_empty(), "division by zero polynomial");
    if r.len() < bb.len() {
        return (Vec::new(), r);
    }
    let lb = bb.last().expect("nonempty").clone();
    let mut q = vec![Rational::zero(); r.len() - bb.len() + 1];
    for i in (0..q.len()).rev() {
        let c = &r[i + bb.len() - 1] / &lb;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in bb.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.truncate(bb.len() - 1);
    trim(&mut r);
    (q, r)
}

impl Valued for LaurentPoly {
    fn deg_min(&self) -> DegMin {
        match self.min_exp() {
            Some(e) => DegMin::Finite(int(e)),
            None => DegMin::Infinity,
        }
    }

    fn lowest_coeff(&self) -> Option<Rational> {
        Some(self.lowest().cloned().unwrap_or_else(Rational::zero))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ty) => {
        impl std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::render(f, self.terms.iter().map(|(e, c)| (int(*e), c)), None)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parsed = text::parse(s)?;
        if parsed.trunc.is_some() {
            return Err(Error::Parse { pos: 0, msg: "Laurent polynomials are exact; drop O(...)".into() });
        }
        let mut p = LaurentPoly::zero();
        for (e, c) in parsed.terms {
            let Some(e) = to_i64(&e) else {
                return Err(Error::Parse { pos: 0, msg: format!("non-integer exponent {e}") });
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

text::text_serde!(LaurentPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::rat;
    use crate::coeff::sign::Sign;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn deg_min_and_lowest_coeff() {
        let f = lp("-t^-3 + 5 + 2t^2");
        assert_eq!(f.deg_min(), DegMin::Finite(int(-3)));
        assert_eq!(f.lowest_coeff(), Some(int(-1)));
        assert_eq!(LaurentPoly::zero().deg_min(), DegMin::Infinity);
        assert_eq!(LaurentPoly::zero().lowest_coeff(), Some(int(0)));
        assert_eq!(LaurentPoly::neg_t_pow(-4).lowest_coeff(), Some(int(1)));
        assert_eq!(lp("t^-1 - 1").sign_in_e(), Sign::Positive);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&lp("1 + t") * &lp("1 - t"), lp("1 - t^2"));
        assert_eq!(&lp("t^-1 + 2") - &lp("t^-1"), lp("2"));
        assert_eq!(lp("1 - t^3").div_exact(&lp("1 - t")), Some(lp("1 + t + t^2")));
        assert_eq!(lp("1 + t^2").div_exact(&lp("1 + t")), None);
        assert_eq!(lp("t^2 + t^3").div_exact(&lp("t^-1 + 1")), Some(lp("t^3")));
    }

    #[test]
    fn gcd_is_normalised() {
        let a = &lp("1 + t") * &lp("2 - 3t");
        let b = &lp("1 + t") * &lp("t^-4 + 7");
        assert_eq!(LaurentPoly::gcd(&a, &b), lp("1 + t"));
        assert_eq!(LaurentPoly::gcd(&lp("3t^2"), &lp("1 + t")), LaurentPoly::one());
        assert_eq!(LaurentPoly::gcd(&lp("-2 - 2t^2"), &LaurentPoly::zero()), lp("1 + t^2"));
    }

    #[test]
    fn text_round_trip() {
        for s in ["-t^-3 + 5 + 2t^2", "0", "1/2t - 3/4t^7", "-1"] {
            assert_eq!(lp(s).to_string(), s);
        }
        assert!("t^1/2".parse::<LaurentPoly>().is_err());
        assert_eq!(lp("t^2").eval(&rat(1, 2)), rat(1, 4));
    }
}
