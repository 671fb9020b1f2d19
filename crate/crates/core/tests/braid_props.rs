use braidop::braids::{artin_action, burau, BraidWord, BurauMatrix, FreeWord, Letter};
use braidop::coeff::LaurentPoly;
use proptest::prelude::*;

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len)
        .prop_map(|ls| ls.into_iter().map(|(i, p)| Letter::new(i, if p { 1 } else { -1 })).collect())
}

fn braid_in(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(n, max_len).prop_map(move |ls| BraidWord::new(n, ls).unwrap())
}

fn braid_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=6).prop_flat_map(|n| (braid_in(n, 8), braid_in(n, 8)))
}

fn braid_and_word() -> impl Strategy<Value = (BraidWord, FreeWord)> {
    (2usize..=5).prop_flat_map(|n| {
        let word = prop::collection::vec((1..=n, any::<bool>()), 0..=10).prop_map(move |ls| {
            FreeWord::new(n, ls.into_iter().map(|(i, p)| Letter::new(i, if p { 1 } else { -1 })).collect()).unwrap()
        });
        (braid_in(n, 8), word)
    })
}

fn mat_mul(a: &BurauMatrix, b: &BurauMatrix) -> BurauMatrix {
    let n = a.size();
    BurauMatrix::from_rows(
        (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).fold(LaurentPoly::zero(), |acc, k| &acc + &(a.get(i, k) * b.get(k, j)))).collect()
            })
            .collect(),
    )
}

fn b(n: usize, gens: &[i64]) -> BraidWord {
    BraidWord::from_signed(n, gens).unwrap()
}

fn same_action(x: &BraidWord, y: &BraidWord) -> bool {
    let n = x.strands();
    (1..=n).all(|i| {
        let g = FreeWord::generator(n, i);
        artin_action(x, &g).unwrap() == artin_action(y, &g).unwrap()
    })
}

proptest! {
    #[test]
    fn braid_relations(n in 3usize..=6, i in 1usize..5, j in 1usize..5) {
        prop_assume!(i + 1 < n && j < n);
        let (i, j) = (i as i64, j as i64);
        let lhs = b(n, &[i, i + 1, i]);
        let rhs = b(n, &[i + 1, i, i + 1]);
        prop_assert_eq!(burau(&lhs), burau(&rhs));
        prop_assert!(same_action(&lhs, &rhs));
        if (i - j).abs() >= 2 {
            let (x, y) = (b(n, &[i, j]), b(n, &[j, i]));
            prop_assert_eq!(burau(&x), burau(&y));
            prop_assert!(same_action(&x, &y));
        }
    }

    #[test]
    fn burau_is_a_homomorphism((x, y) in braid_pair()) {
        prop_assert_eq!(burau(&x.concat(&y)), mat_mul(&burau(&x), &burau(&y)));
        prop_assert!(mat_mul(&burau(&x), &burau(&x.inverse())).is_identity());
    }

    #[test]
    fn artin_action_composes_left_to_right((x, w) in braid_and_word(), k in 0usize..8) {
        let y = BraidWord::new(x.strands(), x.letters().iter().rev().take(k).copied().collect()).unwrap();
        let both = artin_action(&x.concat(&y), &w).unwrap();
        prop_assert_eq!(both, artin_action(&y, &artin_action(&x, &w).unwrap()).unwrap());
        prop_assert_eq!(artin_action(&x.inverse(), &artin_action(&x, &w).unwrap()).unwrap(), w);
    }

    #[test]
    fn artin_action_preserves_mu((x, w) in braid_and_word()) {
        prop_assert_eq!(artin_action(&x, &w).unwrap().mu(), w.mu());
    }

    #[test]
    fn burau_determinant((x, _) in braid_pair()) {
        prop_assert_eq!(burau(&x).det(), LaurentPoly::neg_t_pow(x.exponent_sum()));
    }
}
