//! Characteristic polynomials, Sturm root counting in the Puiseux field, and
//! positive-eigenvalue certificates.

pub mod certificate;
pub mod charpoly;
pub mod poly;
pub mod sqfree;
pub mod sturm;
mod zprs;

pub use certificate::{
    certify_batch, certify_positive_burau, eigen_signature, probe_sign_sequence, probe_values, sign_changes,
    EigenSignature, FactorAudit, PositivityCertificate, Probe,
};
pub use charpoly::char_poly;
pub use poly::UniPoly;
pub use sqfree::square_free_decompose;
pub use sturm::{count_roots, Interval, Point, SturmChain};
