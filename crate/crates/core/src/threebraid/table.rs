//! Literature facts about 3-braids, kept as data with their citations.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::normal_form::{murasugi_normal_form, MurasugiForm};
use super::psl::sl2_image;
use crate::braids::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OpStatus {
    OrderPreserving,
    NotOrderPreserving,
    Unknown,
}

impl std::fmt::Display for OpStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OpStatus::OrderPreserving => "ORDER_PRESERVING",
            OpStatus::NotOrderPreserving => "NOT_ORDER_PRESERVING",
            OpStatus::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamRange {
    /// A single braid; the parameter is ignored.
    Fixed,
    All,
    AtLeast(i64),
}

/// A braid family `word(k)`, whose `SL(2, Z)` trace is `slope·k + intercept`.
#[derive(Debug, Clone, Copy)]
pub struct TableEntry {
    pub description: &'static str,
    pub status: OpStatus,
    pub citation: &'static str,
    pub range: ParamRange,
    pub slope: i64,
    pub intercept: i64,
    pub word: fn(i64) -> BraidWord,
}

fn s(text: &str) -> BraidWord {
    BraidWord::parse(text, Some(3)).expect("table word")
}

pub const KNOWLEDGE_TABLE: &[TableEntry] = &[
    TableEntry {
        description: "σ1",
        status: OpStatus::NotOrderPreserving,
        citation: "KR18 Prop 4.4",
        range: ParamRange::Fixed,
        slope: 0,
        intercept: 2,
        word: |_| s("s1"),
    },
    TableEntry {
        description: "σ1σ2",
        status: OpStatus::NotOrderPreserving,
        citation: "KR18 Theorem 4.10",
        range: ParamRange::Fixed,
        slope: 0,
        intercept: 1,
        word: |_| s("s1 s2"),
    },
    TableEntry {
        description: "σ1σ2^(-2k-1), k ∈ Z",
        status: OpStatus::NotOrderPreserving,
        citation: "KR18 Theorem 4.12 (k = 0); Johnson-Scherich-Turner 2024, Theorem 7 (all k)",
        range: ParamRange::All,
        slope: 2,
        intercept: 3,
        word: |k| s("s1").concat(&BraidWord::sigma(3, 2, -2 * k - 1).expect("valid")),
    },
    TableEntry {
        description: "σ1σ2σ1^(2k), k ≥ 1",
        status: OpStatus::NotOrderPreserving,
        citation: "KR18 Theorem 6.1",
        range: ParamRange::AtLeast(1),
        slope: -2,
        intercept: 1,
        word: |k| s("s1 s2").concat(&BraidWord::sigma(3, 1, 2 * k).expect("valid")),
    },
    TableEntry {
        description: "(σ1σ2)^2σ1^(2k), k ≥ 1",
        status: OpStatus::NotOrderPreserving,
        citation: "KR18 Theorem 6.3",
        range: ParamRange::AtLeast(1),
        slope: -2,
        intercept: -1,
        word: |k| s("s1 s2 s1 s2").concat(&BraidWord::sigma(3, 1, 2 * k).expect("valid")),
    },
    TableEntry {
        description: "σ1σ2σ1",
        status: OpStatus::OrderPreserving,
        citation: "KR18 Theorem 4.10",
        range: ParamRange::Fixed,
        slope: 0,
        intercept: 0,
        word: |_| s("s1 s2 s1"),
    },
];

impl TableEntry {
    /// Parameters whose member could have `|trace| = t`.
    fn candidates(&self, t: i64) -> Vec<i64> {
        if self.range == ParamRange::Fixed {
            return if self.intercept.abs() == t { vec![0] } else { vec![] };
        }
        let mut out = Vec::new();
        for target in [t, -t] {
            let num = target - self.intercept;
            if num % self.slope == 0 {
                let k = num / self.slope;
                let ok = match self.range {
                    ParamRange::AtLeast(m) => k >= m,
                    _ => true,
                };
                if ok && !out.contains(&k) {
                    out.push(k);
                }
            }
        }
        out
    }

    /// Whether some member is conjugate to `form` up to full twists.
    pub fn contains(&self, form: &MurasugiForm) -> Option<i64> {
        let t = sl2_image(&form.base_word()).ok()?.trace().to_i64()?.abs();
        self.candidates(t)
            .into_iter()
            .find(|&k| murasugi_normal_form(&(self.word)(k)).is_ok_and(|member| member.same_class(form)))
    }
}

/// The first table entry containing `form`.
pub fn lookup(form: &MurasugiForm) -> Option<(&'static TableEntry, i64)> {
    KNOWLEDGE_TABLE.iter().find_map(|e| e.contains(form).map(|k| (e, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traces_match_the_declared_affine_law() {
        for e in KNOWLEDGE_TABLE {
            let ks: Vec<i64> = match e.range {
                ParamRange::Fixed => vec![0],
                ParamRange::All => (-4..=4).collect(),
                ParamRange::AtLeast(m) => (m..m + 5).collect(),
            };
            for k in ks {
                let t = sl2_image(&(e.word)(k)).unwrap().trace();
                assert_eq!(t, (e.slope * k + e.intercept).into(), "{} at k={k}", e.description);
            }
        }
    }

    #[test]
    fn members_are_found_after_conjugation() {
        let g = s("s2 s1^-1 s2^2");
        for k in -3..=3 {
            let member = (KNOWLEDGE_TABLE[2].word)(k).conjugate_by(&g);
            let form = murasugi_normal_form(&member).unwrap();
            assert!(KNOWLEDGE_TABLE[2].contains(&form).is_some(), "k={k}");
        }
        let form = murasugi_normal_form(&s("s1^3")).unwrap();
        assert!(lookup(&form).is_none());
    }
}
