//! Random generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use braidop::braids::{BraidWord, Letter};
use braidop::coeff::{int, LaurentPoly, Rational};
use braidop::harness::{SchreierGen, SchreierWord};
use num_traits::Zero;
use rand::Rng;

pub fn random_braid(rng: &mut impl Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters =
        (0..len).map(|_| Letter::new(rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    BraidWord::new(strands, letters).unwrap()
}

/// `(a_1, …, a_k)` with `k ≤ 8`, `a_i ≤ 5` and some `a_i > 0`.
pub fn random_family_a_tuple(rng: &mut impl Rng) -> Vec<i64> {
    loop {
        let k = rng.gen_range(1..=8);
        let a: Vec<i64> = (0..k).map(|_| rng.gen_range(0..=5)).collect();
        if a.iter().any(|&x| x > 0) {
            return a;
        }
    }
}

/// `f_a` straight from its defining sum.
pub fn f_a_oracle(a: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for i in 0..a {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc = &acc + &LaurentPoly::monomial(int(sign), -i);
    }
    acc
}

/// The free nilpotent Lie algebra of class 3 on `X_1, X_2, X_3`, in a Hall
/// basis: 3 generators, 3 brackets of weight two, 8 of weight three.
#[derive(Clone, Debug, PartialEq)]
pub struct Lie3(pub [Rational; 14]);

const B2: [(usize, usize); 3] = [(1, 0), (2, 0), (2, 1)];
// [[X_i, X_j], X_k] for the weight-three basis.
const B3: [(usize, usize, usize); 8] =
    [(1, 0, 0), (1, 0, 1), (1, 0, 2), (2, 0, 0), (2, 0, 1), (2, 0, 2), (2, 1, 1), (2, 1, 2)];

impl Lie3 {
    pub fn zero() -> Self {
        Lie3(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn generator(i: usize, sign: i64) -> Self {
        let mut z = Self::zero();
        z.0[i] = int(sign);
        z
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn add(&self, o: &Self, c: &Rational) -> Self {
        Lie3(std::array::from_fn(|i| &self.0[i] + &(&o.0[i] * c)))
    }

    /// Coordinates of `[X_i, X_j]`.
    fn bracket11(i: usize, j: usize) -> Self {
        let mut z = Self::zero();
        if i == j {
            return z;
        }
        let (hi, lo, s) = if i > j { (i, j, 1) } else { (j, i, -1) };
        let idx = B2.iter().position(|&p| p == (hi, lo)).unwrap();
        z.0[3 + idx] = int(s);
        z
    }

    /// Coordinates of `[[X_i, X_j], X_k]` with `i > j`.
    fn bracket21(i: usize, j: usize, k: usize) -> Self {
        let mut z = Self::zero();
        if (i, j, k) == (2, 1, 0) {
            // Jacobi: [[X3,X2],X1] = [[X3,X1],X2] - [[X2,X1],X3]
            z.0[6 + B3.iter().position(|&p| p == (2, 0, 1)).unwrap()] = int(1);
            z.0[6 + B3.iter().position(|&p| p == (1, 0, 2)).unwrap()] = int(-1);
            return z;
        }
        z.0[6 + B3.iter().position(|&p| p == (i, j, k)).unwrap()] = int(1);
        z
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let c = &self.0[i] * &o.0[j];
                if !c.is_zero() {
                    out = out.add(&Self::bracket11(i, j), &c);
                }
            }
        }
        for (b, &(i, j)) in B2.iter().enumerate() {
            for k in 0..3 {
                // [u_2, v_1] + [u_1, v_2] = [u_2, v_1] - [v_2, u_1]
                let c = &(&self.0[3 + b] * &o.0[k]) - &(&o.0[3 + b] * &self.0[k]);
                if !c.is_zero() {
                    out = out.add(&Self::bracket21(i, j, k), &c);
                }
            }
        }
        out
    }

    /// Baker-Campbell-Hausdorff product, exact in class 3.
    pub fn bch(&self, y: &Self) -> Self {
        let xy = self.bracket(y);
        let twelfth = Rational::new(1.into(), 12.into());
        self.add(y, &int(1))
            .add(&xy, &Rational::new(1.into(), 2.into()))
            .add(&self.bracket(&xy), &twelfth)
            .add(&y.bracket(&xy), &-twelfth)
    }
}

/// `true` iff the word is trivial in the free nilpotent group of class 3 on
/// its (at most three) generators.
pub fn nilpotent_trivial(word: &SchreierWord, gens: &[SchreierGen; 3]) -> bool {
    let mut acc = Lie3::zero();
    for &(g, s) in word.letters() {
        let i = gens.iter().position(|&h| h == g).expect("word uses the oracle generators");
        acc = acc.bch(&Lie3::generator(i, s as i64));
    }
    acc.is_zero()
}

pub fn random_schreier_word(rng: &mut impl Rng, gens: &[SchreierGen; 3], max_len: usize) -> SchreierWord {
    let len = rng.gen_range(1..=max_len);
    SchreierWord::from_letters(3, (0..len).map(|_| (gens[rng.gen_range(0..3)], if rng.gen_bool(0.5) { 1 } else { -1 })))
}

/// Words that are often deep in the lower central series.
pub fn random_deep_commutator(rng: &mut impl Rng, gens: &[SchreierGen; 3]) -> SchreierWord {
    let mut w = random_schreier_word(rng, gens, 2);
    let depth = rng.gen_range(2..=4);
    for _ in 1..depth {
        let other = random_schreier_word(rng, gens, 2);
        w = SchreierWord::commutator(&w, &other);
    }
    w
}
