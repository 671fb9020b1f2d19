//! Eigenvalue signatures and positivity certificates for Burau matrices.

use serde::Serialize;

use super::charpoly::char_poly;
use super::poly::UniPoly;
use super::sqfree::square_free_decompose;
use super::sturm::{Interval, Point, SturmChain};
use crate::braids::{burau, BraidWord, BurauMatrix};
use crate::coeff::{PuiseuxSeries, Rational, Sign};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Eigenvalue counts in the ordered field, with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EigenSignature {
    pub real: usize,
    pub positive: usize,
    pub negative: usize,
    pub nonreal: usize,
}

impl EigenSignature {
    pub fn degree(&self) -> usize {
        self.real + self.nonreal
    }

    pub fn all_positive(&self) -> bool {
        self.positive == self.degree()
    }
}

/// Sturm data for one square-free factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorAudit {
    pub factor: UniPoly,
    pub multiplicity: usize,
    pub chain_length: usize,
    /// Chain signs at `-∞, 0, 1, +∞`, one character per chain element.
    pub signs: [String; 4],
    pub positive_roots: usize,
    pub negative_roots: usize,
}

fn audit(q: &UniPoly, e: usize) -> Result<FactorAudit> {
    let chain = SturmChain::new(q)?;
    let pts = [Point::NegInf, Point::Zero, Point::One, Point::PosInf];
    let signs = pts.map(|x| chain.signs_at(x).iter().map(|s| s.symbol()).collect::<String>());
    if chain.signs_at(Point::Zero)[0] == Sign::Zero {
        return Err(Error::Invalid("zero eigenvalue".into()));
    }
    Ok(FactorAudit {
        factor: q.clone(),
        multiplicity: e,
        chain_length: chain.len(),
        signs,
        positive_roots: chain.count(Interval::Positive)?,
        negative_roots: chain.count(Interval::Negative)?,
    })
}

fn signature_of(audits: &[FactorAudit], degree: usize) -> EigenSignature {
    let positive: usize = audits.iter().map(|a| a.multiplicity * a.positive_roots).sum();
    let negative: usize = audits.iter().map(|a| a.multiplicity * a.negative_roots).sum();
    let real = positive + negative;
    EigenSignature { real, positive, negative, nonreal: degree - real }
}

fn audits_of(p: &UniPoly) -> Result<Vec<FactorAudit>> {
    square_free_decompose(p)?.iter().map(|(q, e)| audit(q, *e)).collect()
}

pub fn eigen_signature(m: &BurauMatrix) -> Result<EigenSignature> {
    let p = char_poly(m);
    Ok(signature_of(&audits_of(&p)?, m.size()))
}

/// Record that all Burau eigenvalues of a braid are (or are not) positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityCertificate {
    pub braid: BraidWord,
    pub strands: usize,
    pub char_poly: UniPoly,
    pub signature: EigenSignature,
    pub verdict: bool,
    pub sturm: Vec<FactorAudit>,
}

pub fn certify_positive_burau(braid: &BraidWord) -> Result<PositivityCertificate> {
    let m = burau(braid);
    let p = char_poly(&m);
    let sturm = audits_of(&p)?;
    let signature = signature_of(&sturm, m.size());
    Ok(PositivityCertificate {
        braid: braid.clone(),
        strands: braid.strands(),
        char_poly: p,
        verdict: signature.all_positive(),
        signature,
        sturm,
    })
}

/// Certificates for many braids, in input order.
pub fn certify_batch(braids: &[BraidWord], exec: Execution) -> Vec<Result<PositivityCertificate>> {
    exec.map(braids, certify_positive_burau)
}

/// A probe point `λ = c·t^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub c: Rational,
    pub q: Rational,
}

impl Probe {
    /// Parses a single monomial such as `1`, `t^2` or `-3/2t^1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let p: PuiseuxSeries = s.parse()?;
        if !p.is_exact() || p.num_terms() != 1 {
            return Err(Error::Parse { pos: 0, msg: format!("probe '{s}' is not a monomial") });
        }
        let (q, c) = p.lowest_term().expect("one term");
        Ok(Self { c: c.clone(), q })
    }

    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        s.split(',').map(|x| Self::parse(x.trim())).collect()
    }
}

/// Exact values of `p` at the probes; `p` must have Laurent coefficients.
pub fn probe_values(p: &UniPoly, probes: &[Probe]) -> Result<Vec<PuiseuxSeries>> {
    probes.iter().map(|pr| p.evaluate_at_monomial(&pr.c, &pr.q)).collect()
}

pub fn probe_sign_sequence(p: &UniPoly, probes: &[Probe]) -> Vec<Sign> {
    probes.iter().map(|pr| p.sign_at_monomial(&pr.c, &pr.q)).collect()
}

/// Number of sign changes along a probe sequence, ignoring zeros.
pub fn sign_changes(signs: &[Sign]) -> usize {
    let nz: Vec<Sign> = signs.iter().copied().filter(|s| *s != Sign::Zero).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// The lowest term of a probe value as `(coefficient, exponent)`.
pub fn lowest_term(v: &PuiseuxSeries) -> Option<(Rational, Rational)> {
    v.lowest_term().map(|(e, c)| (c.clone(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, Some(n)).unwrap()
    }

    fn sig(s: &str) -> EigenSignature {
        eigen_signature(&burau(&b(s, 3))).unwrap()
    }

    #[test]
    fn three_strand_signatures() {
        assert_eq!(sig("s1"), EigenSignature { real: 2, positive: 1, negative: 1, nonreal: 0 });
        assert_eq!(sig("s1 s2"), EigenSignature { real: 0, positive: 0, negative: 0, nonreal: 2 });
        assert_eq!(sig("s1^2"), EigenSignature { real: 2, positive: 2, negative: 0, nonreal: 0 });
        assert_eq!(sig("id"), EigenSignature { real: 2, positive: 2, negative: 0, nonreal: 0 });
    }

    #[test]
    fn certificates() {
        assert!(certify_positive_burau(&b("s2^-1 s1 s2^-1 s1", 3)).unwrap().verdict);
        assert!(!certify_positive_burau(&b("s1", 3)).unwrap().verdict);
        let c = certify_positive_burau(&b("s4^-3 s3^-3 s2^3 s1^3", 5)).unwrap();
        assert!(c.verdict);
        assert_eq!(c.signature.positive, 4);
    }

    #[test]
    fn probes() {
        let p = crate::spectral::char_poly(&burau(&b("s4^-3 s3^-3 s2^3 s1^3", 5)));
        let probes = Probe::parse_list("1,t^2,t^5").unwrap();
        assert_eq!(probe_sign_sequence(&p, &probes), vec![Sign::Positive, Sign::Negative, Sign::Positive]);
        assert!(Probe::parse("1 + t").is_err());
    }
}
