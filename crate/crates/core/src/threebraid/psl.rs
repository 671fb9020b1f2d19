//! The image of `B_3` in `SL(2, Z)`: `σ_1 ↦ L`, `σ_2 ↦ [[1,0],[-1,1]]`, so
//! `σ_2⁻¹ ↦ R`. The full twist maps to `-I`, so the centre dies in `PSL(2, Z)`.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braids::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// `[[1,1],[0,1]]`.
    pub fn l() -> Self {
        Self::new(1, 1, 0, 1)
    }

    /// `[[1,0],[1,1]]`.
    pub fn r() -> Self {
        Self::new(1, 0, 1, 1)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn neg(&self) -> Self {
        Self { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    pub fn is_pm_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d && (self.a.is_one() || (-&self.a).is_one())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

/// The `SL(2, Z)` image of a 3-braid.
pub fn sl2_image(braid: &BraidWord) -> Result<Mat2> {
    if braid.strands() != 3 {
        return Err(Error::WrongStrands(braid.strands()));
    }
    let s1 = Mat2::l();
    let s1i = Mat2::new(1, -1, 0, 1);
    let s2 = Mat2::new(1, 0, -1, 1);
    let s2i = Mat2::r();
    Ok(braid.letters().iter().fold(Mat2::identity(), |m, l| {
        let g = match (l.index, l.sign) {
            (1, 1) => &s1,
            (1, _) => &s1i,
            (_, 1) => &s2,
            _ => &s2i,
        };
        &m * g
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_twist_is_minus_identity() {
        let m = sl2_image(&BraidWord::full_twist(3)).unwrap();
        assert_eq!(m, Mat2::identity().neg());
        assert!(m.is_pm_identity());
        let m = sl2_image(&BraidWord::parse("s1 s2^-1", None).unwrap()).unwrap();
        assert_eq!(m, Mat2::new(2, 1, 1, 1));
        assert!(sl2_image(&BraidWord::identity(4)).is_err());
    }
}
