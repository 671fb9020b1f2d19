//! 3-braids: Murasugi normal forms, family-A closed forms and the
//! order-preservation verdict.

pub mod closed_form;
pub mod normal_form;
pub mod psl;
pub mod table;
pub mod verdict;

pub use closed_form::{eigenvalue_signature_3braid, f_a, family_a_closed_form, family_a_word, FamilyAClosedForm};
pub use normal_form::{murasugi_normal_form, Family, MurasugiForm};
pub use psl::{sl2_image, Mat2};
pub use table::{lookup, OpStatus, TableEntry, KNOWLEDGE_TABLE};
pub use verdict::{op_verdict, square_verdict, OpVerdict, VerdictRecord};
