//! Rational functions in `t`, kept in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;

use super::laurent::{forward_owned, LaurentPoly};
use super::rational::Rational;
use super::sign::{DegMin, Valued};
use super::text;
use crate::error::{Error, Result};

/// `num / den` with the gcd removed and `den` normalised to lowest exponent 0
/// and lowest coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_monomial() {
            (num, den)
        } else {
            let g = LaurentPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let e = den.min_exp().expect("nonzero");
        let c = den.lowest().expect("nonzero").recip();
        Self { num: num.shift(-e).scale(&c), den: den.shift(-e).scale(&c) }
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::canonical(self.num.scale(c), self.den.clone())
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }
}

impl Valued for RationalFunction {
    fn deg_min(&self) -> DegMin {
        match self.num.min_exp() {
            None => DegMin::Infinity,
            Some(e) => DegMin::Finite(Rational::from_integer((e - self.den.min_exp().expect("nonzero")).into())),
        }
    }

    fn lowest_coeff(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        Some(self.num.lowest().expect("nonzero") / self.den.lowest().expect("nonzero"))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from(&self.num * &rhs.num);
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned!(RationalFunction);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(split) = rest.find(")/(") {
                let num: LaurentPoly = rest[..split].parse()?;
                let den_txt = rest[split + 3..]
                    .strip_suffix(')')
                    .ok_or(Error::Parse { pos: s.len(), msg: "expected ')'".into() })?;
                return Self::new(num, den_txt.parse()?);
            }
        }
        Ok(Self::from(s.parse::<LaurentPoly>()?))
    }
}

text::text_serde!(RationalFunction);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::int;
    use crate::coeff::sign::Sign;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_removes_gcd() {
        let f = RationalFunction::new(lp("1 - t^2"), lp("2t + 2t^2")).unwrap();
        assert_eq!(f.num(), &lp("1/2t^-1 - 1/2"));
        assert_eq!(f.den(), &LaurentPoly::one());
        assert_eq!(f.as_laurent(), Some(&lp("1/2t^-1 - 1/2")));
        assert!(RationalFunction::new(lp("1"), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn sign_is_product_of_lowest_signs() {
        let f = RationalFunction::new(lp("-1 + t"), lp("-t^2 + 3t^5")).unwrap();
        assert_eq!(f.sign_in_e(), Sign::Positive);
        assert_eq!(f.deg_min(), DegMin::Finite(int(-2)));
        let g = RationalFunction::new(lp("1"), lp("1 + t")).unwrap();
        assert_eq!((&g * &RationalFunction::from(lp("1 + t"))), RationalFunction::one());
        assert_eq!((&g - &g), RationalFunction::zero());
    }

    #[test]
    fn text_round_trip() {
        let f = RationalFunction::new(lp("1"), lp("1 + t")).unwrap();
        assert_eq!(f.to_string(), "(1)/(1 + t)");
        assert_eq!(f.to_string().parse::<RationalFunction>().unwrap(), f);
    }
}
