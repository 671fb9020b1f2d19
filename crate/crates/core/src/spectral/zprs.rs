//! Subresultant remainder sequences over `Z[t]`, on dense coefficient vectors.
//!
//! The Laurent coefficients of a polynomial are brought into `Z[t]` by a
//! positive unit (a power of `t` times a positive integer), so sign
//! information in the ordered field is preserved.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::{LaurentPoly, Rational, Sign};

/// Dense polynomial in `t`, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Zt(Vec<BigInt>);

impl Zt {
    fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Zt(c)
    }

    fn one() -> Self {
        Zt(vec![BigInt::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Sign in the ordering where `t` is a positive infinitesimal.
    fn sign(&self) -> Sign {
        match self.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_positive() => Sign::Positive,
            Some(_) => Sign::Negative,
            None => Sign::Zero,
        }
    }

    fn mul(&self, o: &Zt) -> Zt {
        if self.is_zero() || o.is_zero() {
            return Zt(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Zt::new(out)
    }

    fn sub(&self, o: &Zt) -> Zt {
        let n = self.0.len().max(o.0.len());
        let zero = BigInt::zero();
        Zt::new((0..n).map(|i| self.0.get(i).unwrap_or(&zero) - o.0.get(i).unwrap_or(&zero)).collect())
    }

    fn neg(&self) -> Zt {
        Zt(self.0.iter().map(|c| -c).collect())
    }

    fn pow(&self, k: u32) -> Zt {
        (0..k).fold(Zt::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    fn div_exact(&self, d: &Zt) -> Zt {
        if d.0.len() == 1 && d.0[0].is_one() {
            return self.clone();
        }
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        if r.len() <= dd {
            assert!(r.is_empty(), "inexact division in Z[t]");
            return Zt(Vec::new());
        }
        let lc = &d.0[dd];
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let (c, rem) = r[i + dd].div_rem(lc);
            assert!(rem.is_zero(), "inexact division in Z[t]");
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                r[i + j] -= &c * b;
            }
            q[i] = c;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact division in Z[t]");
        Zt::new(q)
    }
}

/// Polynomial in `x` with `Z[t]` coefficients, lowest degree first.
pub(crate) type Zx = Vec<Zt>;

fn trim(p: &mut Zx) {
    while p.last().is_some_and(Zt::is_zero) {
        p.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem(a: &Zx, b: &Zx) -> Zx {
    let db = b.len() - 1;
    let lcb = b.last().expect("nonzero divisor");
    let mut r = a.clone();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let delta = r.len() - 1 - db;
    let mut steps = 0;
    while r.len() > db {
        let lcr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x = x.mul(lcb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub(&lcr.mul(bj));
        }
        trim(&mut r);
        steps += 1;
    }
    let extra = lcb.pow((delta + 1 - steps) as u32);
    for x in r.iter_mut() {
        *x = x.mul(&extra);
    }
    r
}

/// Clears denominators and negative exponents with a positive unit.
pub(crate) fn to_zx(p: &[LaurentPoly]) -> Zx {
    let min_e = p.iter().filter_map(LaurentPoly::min_exp).min().unwrap_or(0);
    let den = p
        .iter()
        .flat_map(|c| c.terms().map(|(_, r)| r.denom().clone()).collect::<Vec<_>>())
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let mut out: Zx = p
        .iter()
        .map(|c| {
            let len = c.max_exp().map_or(0, |m| (m - min_e + 1) as usize);
            let mut v = vec![BigInt::zero(); len];
            for (e, r) in c.terms() {
                v[(e - min_e) as usize] = r.numer() * (&den / r.denom());
            }
            Zt::new(v)
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn from_zx(p: &Zx) -> Vec<LaurentPoly> {
    p.iter()
        .map(|c| {
            LaurentPoly::from_terms(
                c.0.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(e, x)| (e as i64, Rational::from_integer(x.clone()))),
            )
        })
        .collect()
}

/// The subresultant remainder sequence `a, b, F_2, …` (Brown-Collins). Each
/// element comes with a flag telling whether its negation is a positive
/// multiple of the Sturm element `-rem(S_{i-2}, S_{i-1})`.
pub(crate) fn subresultant_prs(a: Zx, b: Zx) -> Vec<(Zx, bool)> {
    let mut seq = vec![(a, false), (b, false)];
    let mut g = Zt::one();
    let mut h = Zt::one();
    loop {
        let n = seq.len();
        let (u, v) = (&seq[n - 2].0, &seq[n - 1].0);
        if v.is_empty() {
            seq.pop();
            break;
        }
        let delta = u.len() - v.len();
        let r = prem(u, v);
        if r.is_empty() {
            break;
        }
        let divisor = g.mul(&h.pow(delta as u32));
        let next: Zx = r.iter().map(|c| c.div_exact(&divisor)).collect();
        let lc_v = v.last().expect("nonzero").clone();
        // S_{i+1} = -ε_{i-1} · sign(g h^δ / lc^{δ+1}) · F_{i+1}
        let s = g.sign() * if delta % 2 == 1 { h.sign() } else { lc_v.sign() };
        let eps_prev = if seq[n - 2].1 { Sign::Negative } else { Sign::Positive };
        let eps = -(eps_prev * s);
        g = lc_v;
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d as u32).div_exact(&h.pow(d as u32 - 1)),
        };
        seq.push((next, eps == Sign::Negative));
    }
    seq
}

/// Applies the flags from [`subresultant_prs`].
pub(crate) fn signed(seq: Vec<(Zx, bool)>) -> Vec<Zx> {
    seq.into_iter().map(|(f, negate)| if negate { f.iter().map(Zt::neg).collect() } else { f }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zt(c: &[i64]) -> Zt {
        Zt::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn exact_division_round_trip() {
        let a = zt(&[1, -2, 0, 3]);
        let b = zt(&[-4, 1, 5]);
        assert_eq!(a.mul(&b).div_exact(&b), a);
        assert_eq!(zt(&[0, 0, -1]).sign(), Sign::Negative);
    }

    #[test]
    fn laurent_round_trip_up_to_unit() {
        let p = vec![LaurentPoly::from_terms([
            (-2, Rational::new(1.into(), 2.into())),
            (1, Rational::from_integer(3.into())),
        ])];
        let z = to_zx(&p);
        assert_eq!(z, vec![zt(&[1, 0, 0, 6])]);
        assert_eq!(from_zx(&z)[0], p[0].shift(2).scale(&Rational::from_integer(2.into())));
    }
}
