//! Randomized invariance checks for an order spec.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::order::{order_sign, FailureMode, OrderSign, OrderSpec};
use crate::braids::{artin_action, free_reduce, BraidWord, FreeWord, Letter};
use crate::error::Result;
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub braid: BraidWord,
    pub depth_cap: usize,
    pub trunc_order: i64,
    pub samples: usize,
    pub determinate_pass: usize,
    pub determinate_fail: usize,
    pub indeterminate_by_mode: BTreeMap<FailureMode, usize>,
    pub seed: u64,
    /// Up to ten failing checks, for diagnosis.
    pub failures: Vec<String>,
}

impl HarnessReport {
    pub fn indeterminate(&self) -> usize {
        self.indeterminate_by_mode.values().sum()
    }
}

/// A uniformly random reduced word of length `len`.
pub fn random_word(rng: &mut impl Rng, rank: usize, len: usize) -> FreeWord {
    let mut w = FreeWord::identity(rank);
    while w.len() < len {
        let l = Letter::new(rng.gen_range(1..=rank), if rng.gen_bool(0.5) { 1 } else { -1 });
        w = w.concat(&free_reduce(rank, [l]));
    }
    w
}

/// A random word with exponent sum zero.
pub fn random_kernel_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> FreeWord {
    loop {
        let len = rng.gen_range(1..=max_len.max(2));
        let w = random_word(rng, rank, len);
        let mu = w.mu();
        let fix = FreeWord::generator(rank, 1).pow(-mu);
        let w = w.concat(&fix);
        if !w.is_identity() {
            return w;
        }
    }
}

#[derive(Debug, Clone)]
struct Sample {
    word: FreeWord,
    conjugator: FreeWord,
}

fn draw(rng: &mut ChaCha8Rng, rank: usize, max_len: usize, i: usize) -> Sample {
    let word = match i % 4 {
        0 | 1 => loop {
            let len = rng.gen_range(1..=max_len.max(1));
            let w = random_word(rng, rank, len);
            if !w.is_identity() {
                break w;
            }
        },
        2 => random_kernel_word(rng, rank, max_len),
        // Commutators of kernel words sit at level two or deeper.
        _ => loop {
            let half = (max_len / 4).max(2);
            let c = FreeWord::commutator(&random_kernel_word(rng, rank, half), &random_kernel_word(rng, rank, half));
            if !c.is_identity() {
                break c;
            }
        },
    };
    let len = rng.gen_range(1..=3);
    let conjugator = random_word(rng, rank, len);
    Sample { word, conjugator }
}

enum Outcome {
    Pass,
    Fail(String),
    Indeterminate(FailureMode),
}

fn compare_signs(what: &str, w: &FreeWord, base: OrderSign, image: OrderSign) -> Outcome {
    match (base.failure, image.failure) {
        (Some(m), _) | (None, Some(m)) => Outcome::Indeterminate(m),
        _ if base.value == image.value => Outcome::Pass,
        _ => Outcome::Fail(format!("{what}: {w} is {base} but its image is {image}")),
    }
}

fn check(braid: &BraidWord, spec: &OrderSpec, s: &Sample) -> Result<[Outcome; 2]> {
    let base = order_sign(&s.word, spec)?;
    let moved = order_sign(&artin_action(braid, &s.word)?, spec)?;
    let conj = order_sign(&s.word.conjugate_by(&s.conjugator), spec)?;
    Ok([
        compare_signs("braid action", &s.word, base, moved),
        compare_signs(&format!("conjugation by {}", s.conjugator), &s.word, base, conj),
    ])
}

/// Checks that the order of `spec` is invariant under the braid and under
/// conjugation on random words.
pub fn verify_invariance(
    braid: &BraidWord,
    spec: &OrderSpec,
    samples: usize,
    max_len: usize,
    seed: u64,
    exec: Execution,
) -> Result<HarnessReport> {
    let rank = braid.strands();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn: Vec<Sample> = (0..samples).map(|i| draw(&mut rng, rank, max_len, i)).collect();
    let outcomes = exec.map(&drawn, |s| check(braid, spec, s));
    let mut report = HarnessReport {
        braid: braid.clone(),
        depth_cap: spec.depth_cap,
        trunc_order: spec.trunc_order,
        samples,
        determinate_pass: 0,
        determinate_fail: 0,
        indeterminate_by_mode: BTreeMap::new(),
        seed,
        failures: Vec::new(),
    };
    for pair in outcomes {
        for o in pair? {
            match o {
                Outcome::Pass => report.determinate_pass += 1,
                Outcome::Fail(msg) => {
                    report.determinate_fail += 1;
                    if report.failures.len() < 10 {
                        report.failures.push(msg);
                    }
                }
                Outcome::Indeterminate(m) => *report.indeterminate_by_mode.entry(m).or_default() += 1,
            }
        }
    }
    Ok(report)
}
