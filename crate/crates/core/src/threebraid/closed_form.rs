//! Closed-form Burau data for family-A braids and the 3-strand eigenvalue
//! signature read off trace, determinant and discriminant.

use serde::Serialize;

use super::normal_form::{Family, MurasugiForm};
use crate::braids::{burau, BraidWord, BurauMatrix};
use crate::coeff::{LaurentPoly, Sign, Valued};
use crate::error::{Error, Result};
use crate::spectral::EigenSignature;

/// `f_a = Σ_{i=0}^{a-1} (-t)^{-i}`.
pub fn f_a(a: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..a as i64).map(|i| (-i, LaurentPoly::neg_t_pow(-i).coeff(-i))))
}

/// `σ_2^{-a_k}σ_1 ⋯ σ_2^{-a_1}σ_1`.
pub fn family_a_word(a: &[i64]) -> Result<BraidWord> {
    if a.is_empty() || a.iter().any(|&x| x < 0) || a.iter().all(|&x| x == 0) {
        return Err(Error::ZeroTuple);
    }
    Ok(MurasugiForm { family: Family::A, params: a.to_vec(), d: 0 }.base_word())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyAClosedForm {
    pub params: Vec<i64>,
    /// `f_{a_i}` for each parameter.
    pub f_a: Vec<LaurentPoly>,
    pub matrix: BurauMatrix,
    /// `deg_min` of each entry.
    pub deg_min: [[Option<i64>; 2]; 2],
    pub trace: LaurentPoly,
    pub det: LaurentPoly,
    pub discriminant: LaurentPoly,
}

pub fn family_a_closed_form(a: &[i64]) -> Result<FamilyAClosedForm> {
    let matrix = burau(&family_a_word(a)?);
    let trace = matrix.trace();
    let det = matrix.det();
    let discriminant = &(&trace * &trace) - &det.scale(&crate::coeff::int(4));
    let dm = |i, j| matrix.get(i, j).min_exp();
    Ok(FamilyAClosedForm {
        params: a.to_vec(),
        f_a: a.iter().map(|&x| f_a(x as u32)).collect(),
        deg_min: [[dm(0, 0), dm(0, 1)], [dm(1, 0), dm(1, 1)]],
        matrix,
        trace,
        det,
        discriminant,
    })
}

/// Signature of a 2×2 Burau matrix from the signs of trace, determinant and
/// discriminant.
pub fn signature_2x2(m: &BurauMatrix) -> Result<EigenSignature> {
    if m.size() != 2 {
        return Err(Error::WrongStrands(m.size() + 1));
    }
    let tr = m.trace();
    let det = m.det();
    let disc = &(&tr * &tr) - &det.scale(&crate::coeff::int(4));
    let st = tr.sign_in_e();
    let sd = det.sign_in_e();
    let real = |positive, negative| EigenSignature { real: 2, positive, negative, nonreal: 0 };
    Ok(match disc.sign_in_e() {
        Sign::Negative => EigenSignature { real: 0, positive: 0, negative: 0, nonreal: 2 },
        Sign::Zero => match st {
            Sign::Positive => real(2, 0),
            Sign::Negative => real(0, 2),
            _ => return Err(Error::Invalid("zero eigenvalue".into())),
        },
        Sign::Positive => match (sd, st) {
            (Sign::Negative, _) => real(1, 1),
            (Sign::Positive, Sign::Positive) => real(2, 0),
            (Sign::Positive, Sign::Negative) => real(0, 2),
            _ => return Err(Error::Invalid("zero eigenvalue".into())),
        },
        Sign::Indeterminate => return Err(Error::IndeterminateSign),
    })
}

pub fn eigenvalue_signature_3braid(braid: &BraidWord) -> Result<EigenSignature> {
    if braid.strands() != 3 {
        return Err(Error::WrongStrands(braid.strands()));
    }
    signature_2x2(&burau(braid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn base_case_matrix() {
        let f4 = f_a(4);
        assert_eq!(f4, lp("-t^-3 + t^-2 - t^-1 + 1"));
        let cf = family_a_closed_form(&[4]).unwrap();
        let corner = LaurentPoly::neg_t_pow(-4);
        let expected =
            BurauMatrix::from_rows(vec![vec![&f4 - &LaurentPoly::t(), f4.clone()], vec![corner.clone(), corner]]);
        assert_eq!(cf.matrix, expected);
        assert_eq!(cf.trace.min_exp(), Some(-4));
    }

    #[test]
    fn determinant_and_corner_sign() {
        assert_eq!(family_a_closed_form(&[1]).unwrap().det, LaurentPoly::one());
        let cf = family_a_closed_form(&[2, 3]).unwrap();
        assert_eq!(cf.matrix.get(1, 1).lowest_coeff(), Some(int(-1)));
        assert_eq!(cf.det, LaurentPoly::neg_t_pow(2 - 5));
        assert_eq!(family_a_closed_form(&[0, 0]), Err(Error::ZeroTuple));
    }

    #[test]
    fn signatures() {
        let sig = |s: &str| eigenvalue_signature_3braid(&BraidWord::parse(s, Some(3)).unwrap()).unwrap();
        assert_eq!((sig("s2^-1 s1").positive, sig("s2^-1 s1").negative), (0, 2));
        assert_eq!(sig("s2^-1 s1 s2^-1 s1").positive, 2);
        assert_eq!((sig("s1 s2 s1").positive, sig("s1 s2 s1").negative), (1, 1));
        assert_eq!(sig("s1 s2").nonreal, 2);
    }
}
