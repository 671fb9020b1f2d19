//! Conjugacy normal forms of 3-braids.
//!
//! Every 3-braid is conjugate to exactly one of
//! - A: `σ_2^{-a_k}σ_1 ⋯ σ_2^{-a_1}σ_1 · Δ^{2d}` (some `a_i > 0`),
//! - B: `σ_1^k · Δ^{2d}`,
//! - C: `σ_2^{-1}σ_1^k · Δ^{2d}` with `k ∈ {-1, -2, -3}`.
//!
//! The class is read off the `PSL(2, Z)` image; `d` then follows from the
//! exponent sum, since `Δ²` has exponent sum 6.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::psl::{sl2_image, Mat2};
use crate::braids::{BraidWord, Letter};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MurasugiForm {
    pub family: Family,
    /// `(a_1, …, a_k)` for A, `[k]` for B and C.
    pub params: Vec<i64>,
    pub d: i64,
}

impl MurasugiForm {
    /// The representative without the twist.
    pub fn base_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        match self.family {
            Family::A => {
                for &a in self.params.iter().rev() {
                    letters.extend(std::iter::repeat_n(Letter::neg(2), a as usize));
                    letters.push(Letter::pos(1));
                }
            }
            Family::B => {
                let k = self.params[0];
                let l = if k >= 0 { Letter::pos(1) } else { Letter::neg(1) };
                letters.extend(std::iter::repeat_n(l, k.unsigned_abs() as usize));
            }
            Family::C => {
                letters.push(Letter::neg(2));
                letters.extend(std::iter::repeat_n(Letter::neg(1), self.params[0].unsigned_abs() as usize));
            }
        }
        BraidWord::new(3, letters).expect("valid 3-braid")
    }

    /// The representative `base · Δ^{2d}`.
    pub fn word(&self) -> BraidWord {
        self.base_word().concat(&BraidWord::full_twist(3).pow(self.d))
    }

    pub fn base_exponent_sum(&self) -> i64 {
        base_exponent_sum(self.family, &self.params)
    }

    /// Equality up to powers of the full twist.
    pub fn same_class(&self, other: &MurasugiForm) -> bool {
        self.family == other.family && self.params == other.params
    }

    /// `k` and `a_1 + ⋯ + a_k` for family A.
    pub fn family_a_parities(&self) -> Option<(i64, i64)> {
        (self.family == Family::A).then(|| (self.params.len() as i64, self.params.iter().sum()))
    }
}

fn base_exponent_sum(family: Family, params: &[i64]) -> i64 {
    match family {
        Family::A => params.len() as i64 - params.iter().sum::<i64>(),
        Family::B => params[0],
        Family::C => params[0] - 1,
    }
}

impl fmt::Display for MurasugiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params.iter().map(i64::to_string).collect();
        write!(f, "{:?}[{}] d={}", self.family, p.join(","), self.d)
    }
}

/// Lexicographically least cyclic rotation.
pub fn least_rotation(v: &[i64]) -> Vec<i64> {
    (0..v.len()).map(|s| [&v[s..], &v[..s]].concat()).min().unwrap_or_default()
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// Period of the continued fraction of the attracting fixed point of a
/// hyperbolic `M` with positive trace, started at an even index and of even
/// length.
fn fixed_point_period(m: &Mat2) -> Vec<BigInt> {
    let t = m.trace();
    let disc = &t * &t - BigInt::from(4);
    let s = disc.sqrt();
    let mut p = &m.a - &m.d;
    let mut q = BigInt::from(2) * &m.c;
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients: Vec<BigInt> = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let period = &quotients[start..];
            let shift = start % 2;
            let mut out: Vec<BigInt> = (0..period.len()).map(|i| period[(i + shift) % period.len()].clone()).collect();
            if out.len() % 2 == 1 {
                out.extend(out.clone());
            }
            return out;
        }
        seen.insert((p.clone(), q.clone()), quotients.len());
        let a = if q.is_positive() { floor_div(&(&p + &s), &q) } else { floor_div(&(&p + &s + 1), &q) };
        let p2 = &a * &q - &p;
        let q2 = (&disc - &p2 * &p2) / &q;
        quotients.push(a);
        p = p2;
        q = q2;
    }
}

fn hyperbolic_params(m: &Mat2) -> Result<Vec<i64>> {
    let period = fixed_point_period(m);
    let mut prim = Mat2::identity();
    for (i, n) in period.iter().enumerate() {
        let g = if i % 2 == 0 { Mat2::l() } else { Mat2::r() };
        let e = n.to_u32().ok_or_else(|| Error::Invalid("continued fraction entry too large".into()))?;
        prim = &prim * &g.pow(e);
    }
    let target = m.trace();
    let mut power = prim.clone();
    let mut r = 1usize;
    while power.trace() < target {
        power = &power * &prim;
        r += 1;
    }
    if power.trace() != target {
        return Err(Error::Invalid("hyperbolic class not reached by the primitive element".into()));
    }
    // cyclic word L^{n0} R^{n1} ⋯ R^{n_last}, repeated r times, rotated to end in L
    let ns: Vec<i64> = period.iter().map(|n| n.to_i64().expect("fits")).collect();
    let mut word: Vec<bool> = Vec::new(); // true = L
    for _ in 0..r {
        for (i, &n) in ns.iter().enumerate() {
            word.extend(std::iter::repeat_n(i % 2 == 0, n as usize));
        }
    }
    let tail = word.iter().rev().take_while(|x| !**x).count();
    word.rotate_right(tail);
    let mut blocks = Vec::new();
    let mut run = 0;
    for x in word {
        if x {
            blocks.push(run);
            run = 0;
        } else {
            run += 1;
        }
    }
    blocks.reverse();
    Ok(least_rotation(&blocks))
}

fn parabolic_k(m: &Mat2) -> i64 {
    let m = if m.trace().is_negative() { m.neg() } else { m.clone() };
    if m.b.is_zero() && m.c.is_zero() {
        return 0;
    }
    let g = m.b.abs().gcd(&m.c.abs());
    let sign = if !m.b.is_zero() { m.b.signum() } else { -m.c.signum() };
    (sign * g).to_i64().expect("parabolic parameter fits i64")
}

pub fn murasugi_normal_form(braid: &BraidWord) -> Result<MurasugiForm> {
    let m = sl2_image(braid)?;
    let t = m.trace();
    let e = braid.exponent_sum();
    let two = BigInt::from(2);
    let (family, params) = if t.abs() > two {
        let m = if t.is_negative() { m.neg() } else { m };
        (Family::A, hyperbolic_params(&m)?)
    } else if t.abs() == two {
        (Family::B, vec![parabolic_k(&m)])
    } else if t.is_zero() {
        (Family::C, vec![-2])
    } else {
        let k = [-1i64, -3].into_iter().find(|k| (e - (k - 1)).rem_euclid(6) == 0).ok_or(Error::NonIntegralTwist)?;
        (Family::C, vec![k])
    };
    let diff = e - base_exponent_sum(family, &params);
    if diff.rem_euclid(6) != 0 {
        return Err(Error::NonIntegralTwist);
    }
    Ok(MurasugiForm { family, params, d: diff / 6 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(s: &str) -> MurasugiForm {
        murasugi_normal_form(&BraidWord::parse(s, Some(3)).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(nf("s2^-1 s1").to_string(), "A[1] d=0");
        assert_eq!(nf("s1 s2^-1").to_string(), "A[1] d=0");
        assert_eq!(nf("s1 s2 s1 s1 s2 s1").to_string(), "B[0] d=1");
        assert_eq!(nf("s1 s2").to_string(), "C[-3] d=1");
        assert_eq!(nf("s1 s2 s1").to_string(), "C[-2] d=1");
        assert_eq!(nf("s1").to_string(), "B[1] d=0");
        assert_eq!(nf("s2^-1").to_string(), "B[-1] d=0");
        assert_eq!(nf("id").to_string(), "B[0] d=0");
    }

    #[test]
    fn family_a_round_trip() {
        for a in [vec![2, 3], vec![1, 0, 4], vec![5], vec![0, 0, 1], vec![1, 2, 1, 3]] {
            let form = MurasugiForm { family: Family::A, params: least_rotation(&a), d: 0 };
            assert_eq!(murasugi_normal_form(&form.base_word()).unwrap(), form, "{a:?}");
            let twisted = MurasugiForm { d: -2, ..form.clone() };
            assert_eq!(murasugi_normal_form(&twisted.word()).unwrap(), twisted);
        }
    }

    #[test]
    fn periodic_round_trip() {
        for k in [-1, -2, -3] {
            for d in [-1, 0, 2] {
                let form = MurasugiForm { family: Family::C, params: vec![k], d };
                assert_eq!(murasugi_normal_form(&form.word()).unwrap(), form);
            }
        }
    }

    #[test]
    fn rotations() {
        assert_eq!(least_rotation(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(least_rotation(&[0, 2, 0, 1]), vec![0, 1, 0, 2]);
    }
}
