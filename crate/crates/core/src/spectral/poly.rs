//! Univariate polynomials in `λ` over `Q(t)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::laurent::forward_owned;
use crate::coeff::{evaluate_at_monomial, int, LaurentPoly, PuiseuxSeries, Rational, RationalFunction, Sign, Valued};
use crate::error::{Error, Result};

/// `Σ coeffs[i]·λ^i` with a nonzero leading coefficient (empty for zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<RationalFunction>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_laurent(coeffs: Vec<LaurentPoly>) -> Self {
        Self::new(coeffs.into_iter().map(RationalFunction::from).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![RationalFunction::one()])
    }

    /// `λ - r`.
    pub fn linear(r: RationalFunction) -> Self {
        Self::new(vec![-r, RationalFunction::one()])
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RationalFunction {
        self.coeffs.get(i).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> Option<&RationalFunction> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(RationalFunction::is_one)
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.lc().ok_or(Error::DivisionByZero)?.inv()?;
        Ok(self.scale(&lc))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, a)| a.scale(&int(i as i64))).collect())
    }

    /// The Laurent coefficients, if every denominator is trivial.
    pub fn laurent_coeffs(&self) -> Option<Vec<LaurentPoly>> {
        self.coeffs.iter().map(|c| c.as_laurent().cloned()).collect()
    }

    /// A multiple by a positive element of `Q(t)` with Laurent coefficients.
    pub fn cleared(&self) -> Vec<LaurentPoly> {
        if let Some(c) = self.laurent_coeffs() {
            return c;
        }
        let mut dens: Vec<&LaurentPoly> = Vec::new();
        for c in &self.coeffs {
            if !c.den().is_one() && !dens.contains(&c.den()) {
                dens.push(c.den());
            }
        }
        // canonical denominators have lowest coefficient 1, so their product is positive
        let d = dens.into_iter().fold(LaurentPoly::one(), |acc, x| &acc * x);
        self.coeffs
            .iter()
            .map(|c| (c.num() * &d).div_exact(c.den()).expect("denominator divides the product"))
            .collect()
    }

    /// Quotient and remainder over `Q(t)`.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.lc().expect("nonzero").inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![RationalFunction::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dj);
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Invalid("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// Monic gcd over `Q(t)`, computed through a primitive remainder sequence.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
        if b.is_zero() {
            return if a.is_zero() { Ok(UniPoly::zero()) } else { a.monic() };
        }
        if a.is_zero() {
            return b.monic();
        }
        let g = super::sturm::prs_gcd(&a.cleared(), &b.cleared());
        UniPoly::from_laurent(g).monic()
    }

    /// Exact value at `λ = c·t^q`; needs Laurent coefficients.
    pub fn evaluate_at_monomial(&self, c: &Rational, q: &Rational) -> Result<PuiseuxSeries> {
        let coeffs =
            self.laurent_coeffs().ok_or_else(|| Error::Invalid("coefficients must be Laurent polynomials".into()))?;
        Ok(evaluate_at_monomial(&coeffs, c, q))
    }

    /// Sign of the value at `λ = c·t^q`.
    pub fn sign_at_monomial(&self, c: &Rational, q: &Rational) -> Sign {
        evaluate_at_monomial(&self.cleared(), c, q).sign_in_e()
    }

    /// `λ^deg · p(1/λ)`.
    pub fn reciprocal(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        UniPoly::new(c)
    }

    pub fn eval(&self, x: &RationalFunction) -> RationalFunction {
        self.coeffs.iter().rev().fold(RationalFunction::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![RationalFunction::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        UniPoly::new(c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

forward_owned!(UniPoly);

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let lam = match i {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{i}"),
            };
            let term = if i > 0 && c.is_one() {
                lam
            } else if i > 0 && (-c).is_one() {
                format!("-{lam}")
            } else {
                format!("({c}){lam}")
            };
            parts.push(term);
        }
        f.write_str(&parts.join(" + "))
    }
}

impl serde::Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
