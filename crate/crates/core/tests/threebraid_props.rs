use braidop::braids::{burau, BraidWord, Letter};
use braidop::coeff::{int, LaurentPoly, Sign, Valued};
use braidop::spectral::eigen_signature;
use braidop::threebraid::verdict::EVEN_EVEN_PROVENANCE;
use braidop::threebraid::{
    eigenvalue_signature_3braid, family_a_closed_form, family_a_word, murasugi_normal_form, op_verdict, OpStatus,
};
use proptest::prelude::*;

fn b3(max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1usize..3, any::<bool>()), 0..=max_len).prop_map(|ls| {
        BraidWord::new(3, ls.into_iter().map(|(i, p)| Letter::new(i, if p { 1 } else { -1 })).collect()).unwrap()
    })
}

fn family_a_tuple() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=5, 1..=8).prop_filter("some a_i > 0", |a| a.iter().any(|&x| x > 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_a_conjugacy_invariant(beta in b3(12), g in b3(10)) {
        let nf = murasugi_normal_form(&beta).unwrap();
        prop_assert_eq!(murasugi_normal_form(&beta.conjugate_by(&g)).unwrap(), nf.clone());
        prop_assert_eq!(nf.base_word().exponent_sum() + 6 * nf.d, beta.exponent_sum());
    }

    #[test]
    fn family_a_identities(a in family_a_tuple()) {
        let cf = family_a_closed_form(&a).unwrap();
        let s: i64 = a.iter().sum();
        let k = a.len() as i64;
        let dm = |i, j| cf.matrix.get(i, j).min_exp().unwrap();
        prop_assert_eq!(dm(1, 0), -s);
        prop_assert_eq!(dm(1, 1), -s);
        prop_assert_eq!(cf.matrix.get(1, 1).lowest_coeff(), Some(int(if s % 2 == 0 { 1 } else { -1 })));
        prop_assert_eq!(&cf.det, &LaurentPoly::neg_t_pow(k - s));
        prop_assert_eq!(cf.discriminant.sign_in_e(), Sign::Positive);
        // Each trailing zero exponent contributes a factor -t to the top row.
        let zeros = a.iter().rev().take_while(|&&x| x == 0).count() as i64;
        let top = 1 - s + zeros;
        prop_assert_eq!(dm(0, 0), top);
        prop_assert_eq!(dm(0, 1), top);
    }

    #[test]
    fn parity_rule(a in family_a_tuple()) {
        let w = family_a_word(&a).unwrap();
        let k = a.len() as i64;
        let s: i64 = a.iter().sum();
        let sig = eigenvalue_signature_3braid(&w).unwrap();
        prop_assert_eq!(sig, eigen_signature(&burau(&w)).unwrap());
        let want = match (k % 2 == 0, s % 2 == 0) {
            (true, true) => (2, 0),
            (false, false) => (0, 2),
            _ => (1, 1),
        };
        prop_assert_eq!((sig.positive, sig.negative), want);
    }

    #[test]
    fn even_even_verdicts_carry_certificates(beta in b3(12)) {
        let v = op_verdict(&beta).unwrap();
        if v.provenance == EVEN_EVEN_PROVENANCE {
            prop_assert_eq!(v.status, OpStatus::OrderPreserving);
            prop_assert!(v.certificate.as_ref().is_some_and(|c| c.verdict));
        }
    }
}
