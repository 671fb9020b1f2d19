//! Characteristic polynomials by the Faddeev–LeVerrier recurrence.
//!
//! The recurrence divides only by integers, so the coefficients stay in
//! `Q[t^±1]`.

use super::poly::UniPoly;
use crate::braids::BurauMatrix;
use crate::coeff::{int, LaurentPoly, Rational};

/// `det(λI - M)`, monic.
pub fn char_poly(m: &BurauMatrix) -> UniPoly {
    let n = m.size();
    let mut coeffs = vec![LaurentPoly::zero(); n + 1];
    coeffs[n] = LaurentPoly::one();
    let mut mk = BurauMatrix::identity(n).scale(&Rational::from_integer(0.into()));
    for k in 1..=n {
        let mut rows: Vec<Vec<LaurentPoly>> = (m * &mk).rows().to_vec();
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = &r[i] + &coeffs[n - k + 1];
        }
        mk = BurauMatrix::from_rows(rows);
        coeffs[n - k] = (m * &mk).trace().scale(&(-int(1) / int(k as i64)));
    }
    UniPoly::from_laurent(coeffs)
}
