//! The order-preservation verdict cascade for 3-braids.

use serde::Serialize;

use super::closed_form::eigenvalue_signature_3braid;
use super::normal_form::{murasugi_normal_form, Family, MurasugiForm};
use super::table::{lookup, OpStatus};
use crate::braids::{is_pure, BraidWord};
use crate::error::{Error, Result};
use crate::spectral::{certify_positive_burau, EigenSignature, PositivityCertificate};

pub const PURE_PROVENANCE: &str = "pure braid must be order-preserving (Perron-Rolfsen; KR18 Prop 4.6)";
pub const EVEN_EVEN_PROVENANCE: &str = "even-even theorem: family A with k and a_1+...+a_k even";
pub const NO_RULE_PROVENANCE: &str = "no applicable rule";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpVerdict {
    pub status: OpStatus,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PositivityCertificate>,
}

impl OpVerdict {
    fn new(status: OpStatus, provenance: &str) -> Self {
        OpVerdict { status, provenance: provenance.to_string(), certificate: None }
    }
}

fn check_strands(braid: &BraidWord) -> Result<()> {
    if braid.strands() != 3 {
        return Err(Error::WrongStrands(braid.strands()));
    }
    Ok(())
}

fn verdict_for(braid: &BraidWord, form: &MurasugiForm) -> Result<OpVerdict> {
    if is_pure(braid) {
        return Ok(OpVerdict::new(OpStatus::OrderPreserving, PURE_PROVENANCE));
    }
    if let Some((k, sum)) = form.family_a_parities() {
        if k % 2 == 0 && sum % 2 == 0 {
            let cert = certify_positive_burau(braid)?;
            if cert.verdict {
                let mut v = OpVerdict::new(OpStatus::OrderPreserving, EVEN_EVEN_PROVENANCE);
                v.certificate = Some(cert);
                return Ok(v);
            }
            return Err(Error::Invalid(format!("even-even braid {braid} failed positivity")));
        }
    }
    if let Some((entry, _)) = lookup(form) {
        match entry.status {
            OpStatus::NotOrderPreserving => return Ok(OpVerdict::new(entry.status, entry.citation)),
            OpStatus::OrderPreserving if form.family == Family::C => {
                return Ok(OpVerdict::new(entry.status, entry.citation))
            }
            _ => {}
        }
    }
    Ok(OpVerdict::new(OpStatus::Unknown, NO_RULE_PROVENANCE))
}

pub fn op_verdict(braid: &BraidWord) -> Result<OpVerdict> {
    check_strands(braid)?;
    verdict_for(braid, &murasugi_normal_form(braid)?)
}

/// Verdict for `β²`, which is order-preserving whenever `β` is not periodic.
pub fn square_verdict(braid: &BraidWord) -> Result<OpVerdict> {
    check_strands(braid)?;
    if murasugi_normal_form(braid)?.family == Family::C {
        return Err(Error::PeriodicInput);
    }
    let square = braid.pow(2);
    let v = verdict_for(&square, &murasugi_normal_form(&square)?)?;
    debug_assert_eq!(v.status, OpStatus::OrderPreserving);
    Ok(v)
}

/// Everything the `verdict` command reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub braid: BraidWord,
    pub normal_form: String,
    pub signature: EigenSignature,
    pub status: OpStatus,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PositivityCertificate>,
}

impl VerdictRecord {
    fn build(braid: &BraidWord, v: OpVerdict) -> Result<Self> {
        Ok(VerdictRecord {
            braid: braid.clone(),
            normal_form: murasugi_normal_form(braid)?.to_string(),
            signature: eigenvalue_signature_3braid(braid)?,
            status: v.status,
            provenance: v.provenance,
            certificate: v.certificate,
        })
    }

    pub fn of(braid: &BraidWord) -> Result<Self> {
        Self::build(braid, op_verdict(braid)?)
    }

    /// The record for `β²`.
    pub fn of_square(braid: &BraidWord) -> Result<Self> {
        Self::build(&braid.pow(2), square_verdict(braid)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> OpVerdict {
        op_verdict(&BraidWord::parse(s, Some(3)).unwrap()).unwrap()
    }

    #[test]
    fn cascade_examples() {
        let s1 = v("s1");
        assert_eq!(s1.status, OpStatus::NotOrderPreserving);
        assert_eq!(s1.provenance, "KR18 Prop 4.4");
        let fig8 = v("s1 s2^-1 s1 s2^-1");
        assert_eq!(fig8.status, OpStatus::OrderPreserving);
        assert!(fig8.certificate.as_ref().unwrap().verdict);
        let cube = v("s2^-1 s1 s2^-1 s1 s2^-1 s1");
        assert_eq!((cube.status, cube.provenance.as_str()), (OpStatus::OrderPreserving, PURE_PROVENANCE));
        assert_eq!(v("s2^-1 s1 s2^-2 s1").status, OpStatus::Unknown);
        assert_eq!(v("s1^2").status, OpStatus::OrderPreserving);
        assert_eq!(v("s1 s2 s1").status, OpStatus::OrderPreserving);
        assert_eq!(v("s1 s2 s1 s2 s1 s2 s1").status, OpStatus::NotOrderPreserving);
        assert_eq!(v("s1 s2 s1 s1 s2 s1 s1 s2 s1").status, OpStatus::OrderPreserving);
        assert_eq!(v("s2 s1 s1 s1").status, OpStatus::NotOrderPreserving);
    }

    #[test]
    fn squares() {
        let sq = |s: &str| square_verdict(&BraidWord::parse(s, Some(3)).unwrap());
        assert_eq!(sq("s1 s2^-3").unwrap().status, OpStatus::OrderPreserving);
        assert_eq!(sq("s1^3").unwrap().provenance, PURE_PROVENANCE);
        assert_eq!(sq("s2^-1 s1^-1"), Err(Error::PeriodicInput));
    }
}
