//! A small catalog of ready-made uninorms used by tests, benchmarks and the
//! command line, plus a generator of random complete ordinal sum
//! specifications with representable summands.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generator::GeneratorSpec;
use crate::operator::{AnnihilatorMode, Operator};
use crate::ordinal::{OrdinalSumUninormSpec, SummandSpec};
use crate::pseudo::PseudoFunction;

pub fn logratio_conjunctive() -> Operator {
    Operator::representable_uninorm(GeneratorSpec::logratio(), AnnihilatorMode::Conjunctive)
        .expect("valid generator")
}

pub fn splitlog_disjunctive() -> Operator {
    Operator::representable_uninorm(GeneratorSpec::splitlog(), AnnihilatorMode::Disjunctive)
        .expect("valid generator")
}

pub fn umin_product_probsum() -> Operator {
    let t = Operator::tnorm_from_generator(GeneratorSpec::product_t()).expect("valid generator");
    let c = Operator::tconorm_from_generator(GeneratorSpec::probsum_c()).expect("valid generator");
    Operator::u_min(t, c, 0.5).expect("valid parts")
}

pub fn umax_product_probsum() -> Operator {
    let t = Operator::tnorm_from_generator(GeneratorSpec::product_t()).expect("valid generator");
    let c = Operator::tconorm_from_generator(GeneratorSpec::probsum_c()).expect("valid generator");
    Operator::u_max(t, c, 0.5).expect("valid parts")
}

pub fn linear_switch_internal() -> Operator {
    let boundary = PseudoFunction::from_points(vec![(0.0, 1.0), (1.0, 0.0)]).expect("decreasing");
    Operator::s_internal(boundary).expect("valid boundary")
}

/// Two nested split-log summands around e = 1/2: frames
/// (0, 1/4, 3/4, 1) and (1/4, 1/2, 1/2, 3/4), both disjunctive.
pub fn nested_splitlog_spec() -> OrdinalSumUninormSpec {
    OrdinalSumUninormSpec::new(
        0.5,
        vec![
            SummandSpec::new(0.0, 0.25, 0.75, 1.0, splitlog_disjunctive()),
            SummandSpec::new(0.25, 0.5, 0.5, 0.75, splitlog_disjunctive()),
        ],
    )
}

pub fn nested_splitlog_sum() -> Operator {
    Operator::ordinal_sum_uninorm(nested_splitlog_spec()).expect("valid spec")
}

/// A random complete ordinal sum specification with 1..=max_k representable
/// summands. Lower intervals partition [0, e] left to right; the k-th lower
/// interval pairs with the k-th upper interval from the top, so the pairing
/// is anti-comonotone and scale values resolve through successors.
pub fn random_complete_spec(seed: u64, max_k: usize) -> OrdinalSumUninormSpec {
    assert!(max_k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e: f64 = rng.gen_range(0.35..=0.65);
    let k = rng.gen_range(1..=max_k);

    let lower = partition(&mut rng, 0.0, e, k);
    let upper = partition(&mut rng, e, 1.0, k);

    let mut summands = Vec::with_capacity(k);
    for i in 0..k {
        let (a, b) = lower[i];
        let (c, d) = upper[k - 1 - i];
        let gen = if rng.gen_bool(0.5) {
            GeneratorSpec::logratio()
        } else {
            GeneratorSpec::splitlog()
        };
        let mode = if rng.gen_bool(0.5) {
            AnnihilatorMode::Conjunctive
        } else {
            AnnihilatorMode::Disjunctive
        };
        let op = Operator::representable_uninorm(gen, mode).expect("valid generator");
        summands.push(SummandSpec::new(a, b, c, d, op));
    }
    OrdinalSumUninormSpec::new(e, summands)
}

pub fn random_complete_sum(seed: u64, max_k: usize) -> Operator {
    Operator::ordinal_sum_uninorm(random_complete_spec(seed, max_k)).expect("spec is complete")
}

/// Split [lo, hi] into k consecutive intervals with random weights, each at
/// least 8% of the span.
fn partition(rng: &mut ChaCha8Rng, lo: f64, hi: f64, k: usize) -> Vec<(f64, f64)> {
    let weights: Vec<f64> = (0..k).map(|_| rng.gen_range(0.08..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let mut out = Vec::with_capacity(k);
    let mut cursor = lo;
    for (i, w) in weights.iter().enumerate() {
        let next = if i == k - 1 {
            hi
        } else {
            cursor + (hi - lo) * w / total
        };
        out.push((cursor, next));
        cursor = next;
    }
    out
}

/// The full catalog: every operator family exercised by the verification
/// suite.
pub fn catalog_uninorms() -> Vec<(&'static str, Operator)> {
    vec![
        ("logratio-conjunctive", logratio_conjunctive()),
        ("splitlog-disjunctive", splitlog_disjunctive()),
        ("umin-product-probsum", umin_product_probsum()),
        ("umax-product-probsum", umax_product_probsum()),
        ("linear-switch-internal", linear_switch_internal()),
        ("nested-splitlog-sum", nested_splitlog_sum()),
        ("random-sum-7", random_complete_sum(7, 2)),
        ("random-sum-11", random_complete_sum(11, 2)),
    ]
}
