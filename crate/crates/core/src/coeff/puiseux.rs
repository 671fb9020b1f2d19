//! Truncated Puiseux series `Σ c_k t^(k/d)`.
//!
//! Each series carries its own cutoff: coefficients at exponents `>= trunc`
//! are unknown, and `trunc = None` marks an exact (finite) series. Arithmetic
//! propagates the tightest cutoff for which every stored coefficient is still
//! correct.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::laurent::{forward_owned, LaurentPoly};
use super::ratfunc::RationalFunction;
use super::rational::{int, lcm_u64, rational_sqrt, Rational};
use super::sign::{DegMin, Sign, Valued};
use super::text;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxSeries {
    ram: u64,
    terms: BTreeMap<i64, Rational>,
    trunc: Option<Rational>,
}

fn min_cut(a: Option<Rational>, b: Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn below(e: &Rational, cut: &Option<Rational>) -> bool {
    cut.as_ref().is_none_or(|c| e < c)
}

impl PuiseuxSeries {
    pub fn zero() -> Self {
        Self { ram: 1, terms: BTreeMap::new(), trunc: None }
    }

    pub fn one() -> Self {
        Self::from_laurent(&LaurentPoly::one())
    }

    /// `O(t^q)`: nothing known below the cutoff.
    pub fn big_o(q: Rational) -> Self {
        Self { ram: 1, terms: BTreeMap::new(), trunc: Some(q) }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        Self { ram: 1, terms: p.terms().map(|(e, c)| (e, c.clone())).collect(), trunc: None }
    }

    pub fn monomial(c: Rational, q: &Rational) -> Self {
        Self::from_terms([(q.clone(), c)], None)
    }

    /// Builds a series from `(exponent, coefficient)` pairs; terms at or above
    /// the cutoff are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Rational)>, trunc: Option<Rational>) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        let mut ram = 1u64;
        for (e, _) in &terms {
            ram = lcm_u64(ram, e.denom().to_u64().expect("exponent denominator fits u64"));
        }
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let k = (e.numer() * BigInt::from(ram) / e.denom()).to_i64().expect("exponent fits i64");
            *map.entry(k).or_insert_with(Rational::zero) += c;
        }
        Self { ram, terms: map, trunc }.normalize()
    }

    /// Expansion of a rational function, exact when the denominator is a monomial.
    pub fn from_ratfunc(f: &RationalFunction, order: &Rational) -> Result<Self> {
        let num = Self::from_laurent(f.num());
        if f.num().is_zero() || f.den().is_monomial() {
            let den = Self::from_laurent(f.den());
            return num.div(&den);
        }
        let vnum = int(f.num().min_exp().expect("nonzero"));
        let inv = Self::from_laurent(f.den()).inv_to(&(order - vnum))?;
        Ok(&num * &inv)
    }

    fn normalize(mut self) -> Self {
        let ram = self.ram;
        let trunc = self.trunc.clone();
        self.terms.retain(|k, c| !c.is_zero() && below(&Rational::new((*k).into(), ram.into()), &trunc));
        let mut g = self.ram;
        for k in self.terms.keys() {
            g = g.gcd(&k.unsigned_abs());
        }
        if g > 1 {
            self.terms = std::mem::take(&mut self.terms).into_iter().map(|(k, c)| (k / g as i64, c)).collect();
            self.ram /= g;
        }
        self
    }

    fn rescaled(&self, ram: u64) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        let f = (ram / self.ram) as i64;
        self.terms.iter().map(move |(k, c)| (k * f, c))
    }

    fn exp(&self, k: i64) -> Rational {
        Rational::new(k.into(), self.ram.into())
    }

    pub fn ramification(&self) -> u64 {
        self.ram
    }

    pub fn trunc(&self) -> Option<&Rational> {
        self.trunc.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.trunc.is_none() && self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Stored terms as `(exponent, coefficient)` in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (self.exp(*k), c))
    }

    pub fn lowest_term(&self) -> Option<(Rational, &Rational)> {
        self.terms.iter().next().map(|(k, c)| (self.exp(*k), c))
    }

    pub fn coeff(&self, q: &Rational) -> Option<Rational> {
        if !below(q, &self.trunc) {
            return None;
        }
        let k = q * int(self.ram as i64);
        if !k.is_integer() {
            return Some(Rational::zero());
        }
        let k = k.to_integer().to_i64()?;
        Some(self.terms.get(&k).cloned().unwrap_or_else(Rational::zero))
    }

    /// Lower bound for the valuation: the lowest stored exponent, else the
    /// cutoff; `None` for exact zero.
    pub fn valuation_bound(&self) -> Option<Rational> {
        match self.lowest_term() {
            Some((e, _)) => Some(e),
            None => self.trunc.clone(),
        }
    }

    pub fn truncate(&self, order: &Rational) -> Self {
        let trunc = min_cut(self.trunc.clone(), Some(order.clone()));
        Self { ram: self.ram, terms: self.terms.clone(), trunc }.normalize()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { ram: self.ram, terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(), trunc: self.trunc.clone() }
    }

    /// Multiplication by `t^q`.
    pub fn shift(&self, q: &Rational) -> Self {
        self * &Self::monomial(Rational::one(), q)
    }

    fn is_exact_monomial(&self) -> bool {
        self.is_exact() && self.terms.len() == 1
    }

    /// Inverse known up to `order` (or less, if truncation forces it).
    pub fn inv_to(&self, order: &Rational) -> Result<Self> {
        if self.is_exact_zero() {
            return Err(Error::DivisionByZero);
        }
        let Some((&k0, c)) = self.terms.iter().next() else {
            return Err(Error::IndeterminateDivisor);
        };
        if self.is_exact_monomial() {
            return Ok(Self { ram: self.ram, terms: BTreeMap::from([(-k0, c.recip())]), trunc: None }.normalize());
        }
        let v = self.exp(k0);
        let mut out = order.clone();
        if let Some(t) = &self.trunc {
            out = out.min(t - &v - &v);
        }
        let d = int(self.ram as i64);
        // indices n with (n - k0)/d < out
        let bound = &out * &d + int(k0);
        let n_max = bound.ceil().to_integer().to_i64().expect("bound fits i64");
        let cinv = c.recip();
        let b: Vec<(usize, Rational)> =
            self.terms.iter().skip(1).map(|(k, a)| ((k - k0) as usize, a * &cinv)).collect();
        let mut w: Vec<Rational> = Vec::new();
        for n in 0..n_max.max(0) as usize {
            if n == 0 {
                w.push(Rational::one());
                continue;
            }
            let mut acc = Rational::zero();
            for (i, bi) in &b {
                if *i > n {
                    break;
                }
                acc -= bi * &w[n - i];
            }
            w.push(acc);
        }
        let terms = w.into_iter().enumerate().map(|(n, wn)| (n as i64 - k0, wn * &cinv)).collect();
        Ok(Self { ram: self.ram, terms, trunc: Some(out) }.normalize())
    }

    /// Inverse; exact only for monomials, otherwise limited by the input's cutoff.
    pub fn inv(&self) -> Result<Self> {
        if self.is_exact_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.is_empty() {
            return Err(Error::IndeterminateDivisor);
        }
        if self.is_exact_monomial() {
            return self.inv_to(&Rational::zero());
        }
        match &self.trunc {
            None => Err(Error::InfiniteExpansion),
            Some(t) => self.inv_to(t),
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_exact_zero() {
            return Err(Error::DivisionByZero);
        }
        if rhs.terms.is_empty() {
            return Err(Error::IndeterminateDivisor);
        }
        if rhs.is_exact_monomial() || !rhs.is_exact() {
            return Ok(self * &rhs.inv()?);
        }
        if self.is_exact_zero() {
            return Ok(Self::zero());
        }
        let Some(t) = &self.trunc else { return Err(Error::InfiniteExpansion) };
        let (v, _) = rhs.lowest_term().expect("nonempty");
        let vlb = self.valuation_bound().expect("not exact zero");
        let inv = rhs.inv_to(&(t - &v - vlb))?;
        Ok(self * &inv)
    }

    /// Quotient of two exact series, expanded up to `order`.
    pub fn div_to(&self, rhs: &Self, order: &Rational) -> Result<Self> {
        match self.valuation_bound() {
            None => Ok(Self::zero()),
            Some(vlb) => {
                let inv = rhs.inv_to(&(order - vlb))?;
                Ok((self * &inv).truncate(order))
            }
        }
    }

    /// The square root with positive lowest coefficient.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_exact_zero() {
            return Ok(Self::zero());
        }
        if self.sign_in_e() != Sign::Positive {
            return Err(Error::NotPositive);
        }
        let (&k0, c) = self.terms.iter().next().expect("positive has a term");
        let Some(root_c) = rational_sqrt(c) else {
            return Err(Error::IrrationalLeadingCoefficient(c.to_string()));
        };
        let cinv = c.recip();
        let b: BTreeMap<usize, Rational> =
            self.terms.iter().skip(1).map(|(k, a)| ((k - k0) as usize, a * &cinv)).collect();
        let (n_count, trunc) = match &self.trunc {
            Some(t) => {
                let v = self.exp(k0);
                let out = &v / int(2) + (t - &v);
                let bound = (t - &v) * int(self.ram as i64);
                (bound.ceil().to_integer().to_usize().unwrap_or(0), Some(out))
            }
            None => {
                let span = (self.terms.keys().next_back().expect("nonempty") - k0) as usize;
                if span % 2 == 1 {
                    return Err(Error::NotAPerfectSquare);
                }
                (span / 2 + 1, None)
            }
        };
        let mut s: Vec<Rational> = Vec::with_capacity(n_count);
        let half = Rational::new(1.into(), 2.into());
        for n in 0..n_count {
            if n == 0 {
                s.push(Rational::one());
                continue;
            }
            let mut acc = b.get(&n).cloned().unwrap_or_else(Rational::zero);
            for i in 1..n {
                acc -= &s[i] * &s[n - i];
            }
            s.push(acc * &half);
        }
        let terms = s.into_iter().enumerate().map(|(n, sn)| (k0 + 2 * n as i64, sn * &root_c)).collect();
        let g = Self { ram: 2 * self.ram, terms, trunc }.normalize();
        if g.is_exact() && &(&g * &g) != self {
            return Err(Error::NotAPerfectSquare);
        }
        Ok(g)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// Substitutes `λ = c·t^q` into `Σ coeffs[i]·λ^i`, giving an exact series.
pub fn evaluate_at_monomial(coeffs: &[LaurentPoly], c: &Rational, q: &Rational) -> PuiseuxSeries {
    let mut terms = Vec::new();
    let mut ci = Rational::one();
    for (i, a) in coeffs.iter().enumerate() {
        let shift = q * int(i as i64);
        for (e, ae) in a.terms() {
            terms.push((int(e) + &shift, ae * &ci));
        }
        ci *= c;
    }
    PuiseuxSeries::from_terms(terms, None)
}

impl Valued for PuiseuxSeries {
    fn deg_min(&self) -> DegMin {
        match self.lowest_term() {
            Some((e, _)) => DegMin::Finite(e),
            None if self.is_exact() => DegMin::Infinity,
            None => DegMin::Indeterminate,
        }
    }

    fn lowest_coeff(&self) -> Option<Rational> {
        match self.lowest_term() {
            Some((_, c)) => Some(c.clone()),
            None if self.is_exact() => Some(Rational::zero()),
            None => None,
        }
    }
}

impl<'a> Add<&'a PuiseuxSeries> for &'a PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn add(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let ram = lcm_u64(self.ram, rhs.ram);
        let mut terms: BTreeMap<i64, Rational> = self.rescaled(ram).map(|(k, c)| (k, c.clone())).collect();
        for (k, c) in rhs.rescaled(ram) {
            *terms.entry(k).or_insert_with(Rational::zero) += c;
        }
        PuiseuxSeries { ram, terms, trunc: min_cut(self.trunc.clone(), rhs.trunc.clone()) }.normalize()
    }
}

impl<'a> Sub<&'a PuiseuxSeries> for &'a PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn sub(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a PuiseuxSeries> for &'a PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return PuiseuxSeries::zero();
        }
        let mut trunc = None;
        if let Some(ta) = &self.trunc {
            trunc = min_cut(trunc, Some(ta + rhs.valuation_bound().expect("nonzero")));
        }
        if let Some(tb) = &rhs.trunc {
            trunc = min_cut(trunc, Some(tb + self.valuation_bound().expect("nonzero")));
        }
        let ram = lcm_u64(self.ram, rhs.ram);
        let cut = trunc.as_ref().map(|t| t * int(ram as i64));
        let b: Vec<(i64, &Rational)> = rhs.rescaled(ram).collect();
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (k1, c1) in self.rescaled(ram) {
            for (k2, c2) in &b {
                let k = k1 + k2;
                if cut.as_ref().is_some_and(|c| int(k).cmp(c) != Ordering::Less) {
                    break;
                }
                *terms.entry(k).or_insert_with(Rational::zero) += c1 * *c2;
            }
        }
        PuiseuxSeries { ram, terms, trunc }.normalize()
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        PuiseuxSeries {
            ram: self.ram,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
            trunc: self.trunc.clone(),
        }
    }
}

forward_owned!(PuiseuxSeries);

impl From<&LaurentPoly> for PuiseuxSeries {
    fn from(p: &LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::render(f, self.terms(), self.trunc.as_ref())
    }
}

impl FromStr for PuiseuxSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parsed = text::parse(s)?;
        Ok(Self::from_terms(parsed.terms, parsed.trunc))
    }
}

text::text_serde!(PuiseuxSeries);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::rat;

    fn ps(s: &str) -> PuiseuxSeries {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunction::new(LaurentPoly::one(), lp("1 + t")).unwrap();
        let s = PuiseuxSeries::from_ratfunc(&f, &int(3)).unwrap();
        assert_eq!(s, ps("1 - t + t^2 + O(t^3)"));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(ps("t^2").sqrt().unwrap(), ps("t"));
        assert_eq!(ps("1 + t + O(t^3)").sqrt().unwrap(), ps("1 + 1/2t - 1/8t^2 + O(t^3)"));
        assert_eq!(ps("t^-2 - 2t^-1 + 1").sqrt().unwrap(), ps("t^-1 - 1"));
        assert_eq!(ps("t").sqrt().unwrap(), ps("t^1/2"));
        assert_eq!(ps("-t").sqrt(), Err(Error::NotPositive));
        assert!(matches!(ps("2t").sqrt(), Err(Error::IrrationalLeadingCoefficient(_))));
        assert_eq!(ps("1 + t").sqrt(), Err(Error::NotAPerfectSquare));
        assert_eq!(ps("O(t^5)").sqrt(), Err(Error::NotPositive));
    }

    #[test]
    fn sqrt_of_odd_valuation_doubles_ramification() {
        let g = ps("t^3 + t^4 + O(t^9)").sqrt().unwrap();
        assert_eq!(g.ramification(), 2);
        assert_eq!(g.trunc(), Some(&rat(15, 2)));
        let sq = &g * &g;
        assert_eq!(sq, ps("t^3 + t^4 + O(t^9)"));
    }

    #[test]
    fn truncation_bookkeeping() {
        let a = ps("t^-1 + 2 + O(t^2)");
        let b = ps("t^3 + O(t^4)");
        let p = &a * &b;
        assert_eq!(p.trunc(), Some(&int(3)));
        assert_eq!(p, ps("t^2 + O(t^3)"));
        let z = ps("O(t^5)");
        assert_eq!(z.sign_in_e(), Sign::Indeterminate);
        assert_eq!(z.deg_min(), DegMin::Indeterminate);
        assert_eq!(&z * &PuiseuxSeries::zero(), PuiseuxSeries::zero());
        assert_eq!((&a + &b).trunc(), Some(&int(2)));
    }

    #[test]
    fn division() {
        let one_plus_t = PuiseuxSeries::from_laurent(&lp("1 + t"));
        assert_eq!(PuiseuxSeries::one().div(&one_plus_t), Err(Error::InfiniteExpansion));
        let q = ps("1 + O(t^4)").div(&one_plus_t).unwrap();
        assert_eq!(q, ps("1 - t + t^2 - t^3 + O(t^4)"));
        assert_eq!(ps("t^2 + O(t^3)").inv().unwrap(), ps("t^-2 + O(t^-1)"));
        assert_eq!(ps("O(t)").inv(), Err(Error::IndeterminateDivisor));
        assert_eq!(PuiseuxSeries::zero().inv(), Err(Error::DivisionByZero));
        let third = PuiseuxSeries::one().div_to(&one_plus_t, &int(2)).unwrap();
        assert_eq!(third, ps("1 - t + O(t^2)"));
    }

    #[test]
    fn evaluation_at_monomials() {
        let coeffs = [LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::one()];
        let v = evaluate_at_monomial(&coeffs, &int(1), &int(1));
        assert_eq!(v, ps("1 + t^2"));
        assert_eq!(v.sign_in_e(), Sign::Positive);
        let w = evaluate_at_monomial(&coeffs, &int(-2), &rat(1, 3));
        assert_eq!(w, ps("1 + 4t^2/3"));
    }

    #[test]
    fn text_round_trip() {
        for s in ["1 - 1/2t^1/2", "t^-1/3 + O(t^2)", "O(t^5)", "0", "3 + O(t)", "O(1)"] {
            assert_eq!(ps(s).to_string(), s);
        }
    }
}
