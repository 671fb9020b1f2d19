//! Square-free decomposition over `Q(t)` (Yun's algorithm).

use super::poly::UniPoly;
use crate::error::{Error, Result};

/// `p = lc(p)·∏ q_j^{e_j}` with monic, square-free, pairwise coprime `q_j`.
pub fn square_free_decompose(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::Invalid("square-free decomposition of zero".into()));
    }
    let p = p.monic()?;
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = UniPoly::gcd(&p, &dp)?;
    let mut b = p.div_exact(&a0)?;
    let c = dp.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = UniPoly::gcd(&b, &d)?;
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a)?;
        let c = d.div_exact(&a)?;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{LaurentPoly, RationalFunction};

    fn lin(s: &str) -> UniPoly {
        UniPoly::linear(RationalFunction::from(s.parse::<LaurentPoly>().unwrap()))
    }

    #[test]
    fn examples() {
        let p = &(&lin("1") * &lin("1")) * &lin("t");
        assert_eq!(square_free_decompose(&p).unwrap(), vec![(lin("t"), 1), (lin("1"), 2)]);
        let q = &lin("t") * &lin("t");
        assert_eq!(square_free_decompose(&q).unwrap(), vec![(lin("t"), 2)]);
        let r = (&lin("t") * &lin("2")).scale(&RationalFunction::from("3t".parse::<LaurentPoly>().unwrap()));
        assert_eq!(square_free_decompose(&r).unwrap(), vec![(&lin("t") * &lin("2"), 1)]);
    }

    #[test]
    fn multiplicities_add_up() {
        let p = &(&(&lin("t") * &lin("t")) * &(&lin("-1") * &lin("-1"))) * &(&lin("-1") * &lin("t^-1"));
        let dec = square_free_decompose(&p).unwrap();
        let total: usize = dec.iter().map(|(q, e)| q.degree().unwrap() * e).sum();
        assert_eq!(total, 6);
        assert_eq!(dec, vec![(lin("t^-1"), 1), (lin("t"), 2), (lin("-1"), 3)]);
    }
}
