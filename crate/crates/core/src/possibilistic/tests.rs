use super::*;
use crate::logic::parse;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn f(text: &str) -> Formula {
    parse(text, None).unwrap()
}

fn base(vocab: &[&str], items: &[(&str, f64)]) -> PossibilisticBase {
    let vocab = Vocabulary::new(vocab.iter().map(|s| s.to_string()).collect());
    let items = items
        .iter()
        .map(|(t, w)| WeightedFormula::new(f(t), *w))
        .collect();
    PossibilisticBase::new(items, vocab).unwrap()
}

fn example1_b1() -> PossibilisticBase {
    base(&["phi", "psi"], &[("psi", 0.9), ("phi", 0.2)])
}

fn example1_b2() -> PossibilisticBase {
    base(&["phi", "psi"], &[("phi | ~psi", 0.8), ("phi", 0.2)])
}

fn example2_b1() -> PossibilisticBase {
    base(
        &["phi", "psi", "xi"],
        &[("phi | psi", 0.9), ("phi", 0.5), ("psi", 0.5), ("xi", 0.1)],
    )
}

fn example2_b2() -> PossibilisticBase {
    base(
        &["phi", "psi", "xi"],
        &[("~phi | ~psi", 0.9), ("~phi", 0.5), ("~psi", 0.5), ("xi", 0.1)],
    )
}

fn at(d: &Distribution, phi: bool, psi: bool) -> f64 {
    // vocab sorted: phi -> bit 0, psi -> bit 1
    let bits = (phi as u64) | ((psi as u64) << 1);
    d.value(Interpretation::from_bits(bits))
}

#[test]
fn distribution_of_empty_base_is_one() {
    let b = PossibilisticBase::empty(Vocabulary::new(vec!["p".into()]));
    let d = b.to_distribution().unwrap();
    assert!(d.values().iter().all(|&v| v == 1.0));
}

#[test]
fn distribution_of_singleton() {
    let b = base(&["p", "q"], &[("p", 0.7)]);
    let d = b.to_distribution().unwrap();
    for m in b.vocabulary().interpretations() {
        let expected = if m.truth(0) { 1.0 } else { 0.3 };
        assert!((d.value(m) - expected).abs() < 1e-12);
    }
}

#[test]
fn distribution_of_example1_b1() {
    let d = example1_b1().to_distribution().unwrap();
    assert!((at(&d, true, true) - 1.0).abs() < 1e-12);
    assert!((at(&d, false, true) - 0.8).abs() < 1e-12);
    assert!((at(&d, true, false) - 0.1).abs() < 1e-12);
    assert!((at(&d, false, false) - 0.1).abs() < 1e-12);
}

#[test]
fn possibility_and_necessity() {
    let vocab = Vocabulary::new(vec!["p".into()]);
    let ones = Distribution::constant(vocab, 1.0).unwrap();
    assert_eq!(ones.possibility(&f("p")).unwrap(), 1.0);
    assert_eq!(ones.possibility(&Formula::Bottom).unwrap(), 0.0);
    assert_eq!(ones.necessity(&f("p")).unwrap(), 0.0);
    assert_eq!(ones.necessity(&Formula::Top).unwrap(), 1.0);

    let d = example1_b1().to_distribution().unwrap();
    assert!((d.possibility(&f("~phi")).unwrap() - 0.8).abs() < 1e-12);
    assert!((d.necessity(&f("phi")).unwrap() - 0.2).abs() < 1e-12);
}

#[test]
fn alpha_cuts_of_example2_b1() {
    let b = example2_b1();
    assert_eq!(b.alpha_cut(0.0, false).len(), 4); // B*
    let cut = b.alpha_cut(0.5, false);
    assert_eq!(cut, vec![f("phi | psi"), f("phi"), f("psi")]);
    let strict = b.alpha_cut(0.5, true);
    assert_eq!(strict, vec![f("phi | psi")]);
}

#[test]
fn inconsistency_degree_examples() {
    assert_eq!(example2_b1().inconsistency_degree().unwrap(), 0.0);
    let union = example2_b1().union(&example2_b2()).unwrap();
    assert!((union.inconsistency_degree().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn graded_entailment() {
    let b2 = example1_b2();
    assert!(b2.pi_entails(&f("phi"), 0.2).unwrap());

    let contradictory = base(&["p"], &[("p", 1.0), ("~p", 1.0)]);
    assert!(!contradictory.pi_entails(&f("p"), 0.5).unwrap());
    assert!(!contradictory.pi_entails(&f("p"), 1.0).unwrap());
}

#[test]
fn entailment_degrees() {
    let b = base(&["p", "q"], &[("p", 0.7)]);
    assert_eq!(b.entailment_degree(&f("q")).unwrap(), 0.0);
    assert_eq!(b.entailment_degree(&f("q | ~q")).unwrap(), 1.0);
    assert!((b.entailment_degree(&f("p | q")).unwrap() - 0.7).abs() < 1e-12);
}

#[test]
fn subsumption() {
    let singleton = base(&["p"], &[("p", 0.4)]);
    let item = singleton.items()[0].clone();
    assert!(!singleton.is_subsumed(&item, false).unwrap());

    let b = base(&["p", "q"], &[("p", 0.9), ("p | q", 0.3)]);
    let weak = b.items()[1].clone();
    assert!(b.is_subsumed(&weak, false).unwrap());
    assert!(b.is_subsumed(&weak, true).unwrap());
}

#[test]
fn normalize_merges_duplicates() {
    let b = base(&["p"], &[("p", 0.4), ("p", 0.7)]);
    let n = b.normalize().unwrap();
    assert_eq!(n.len(), 1);
    assert!((n.items()[0].weight - 0.7).abs() < 1e-12);
}

#[test]
fn normalize_is_identity_on_minimal_bases() {
    let b = base(&["p", "q"], &[("p", 0.9), ("q", 0.3)]);
    assert_eq!(b.normalize().unwrap(), b);
}

#[test]
fn normalize_drops_tautologies_and_subsumed() {
    let b = base(
        &["p", "q"],
        &[("p | ~p", 0.9), ("p", 0.8), ("q", 0.8), ("p | q", 0.5)],
    );
    let n = b.normalize().unwrap();
    assert_eq!(n.classical(), vec![f("p"), f("q")]);
}

#[test]
fn stratified_equivalence() {
    let b = base(&["p", "q"], &[("p", 0.5), ("p | q", 0.3), ("p", 0.5)]);
    assert!(b.equivalent(&b).unwrap());
    assert!(b.equivalent(&b.normalize().unwrap()).unwrap());

    let c1 = base(&["p"], &[("p", 0.5)]);
    let c2 = base(&["p"], &[("p", 0.6)]);
    assert!(!c1.equivalent(&c2).unwrap());
}

#[test]
fn zero_weight_items_are_dropped() {
    let b = base(&["p"], &[("p", 0.0), ("p", 0.5)]);
    assert_eq!(b.len(), 1);
}

// Randomized semantic checks against the distribution-level definitions.

struct Gen {
    rng: StdRng,
}

impl Gen {
    fn vocab(&self) -> Vocabulary {
        Vocabulary::new(vec!["a".into(), "b".into(), "c".into()])
    }

    fn clause(&mut self) -> Formula {
        let vocab = self.vocab();
        let n = self.rng.gen_range(1..=2);
        let lits: Vec<Formula> = (0..n)
            .map(|_| {
                let atom = Formula::atom(
                    vocab.atoms()[self.rng.gen_range(0..vocab.len())].clone(),
                );
                if self.rng.gen_bool(0.5) {
                    Formula::not(atom)
                } else {
                    atom
                }
            })
            .collect();
        Formula::big_or(lits)
    }

    fn base(&mut self) -> PossibilisticBase {
        let n = self.rng.gen_range(1..=4);
        let items = (0..n)
            .map(|_| {
                let w = self.rng.gen_range(1..=10) as f64 / 10.0;
                WeightedFormula::new(self.clause(), w)
            })
            .collect();
        PossibilisticBase::new(items, self.vocab()).unwrap()
    }
}

#[test]
fn soundness_bridge_between_syntax_and_semantics() {
    let mut g = Gen {
        rng: StdRng::seed_from_u64(11),
    };
    for _ in 0..300 {
        let b = g.base();
        let query = g.clause();
        let dist = b.to_distribution().unwrap();
        let inc = b.inconsistency_degree().unwrap();
        for alpha in [0.1, 0.3, 0.5, 0.7, 0.9, 1.0] {
            if !weight::gt(alpha, inc) {
                continue;
            }
            let syntactic = b.pi_entails(&query, alpha).unwrap();
            let semantic = dist.necessity(&query).unwrap() >= alpha - weight::eps();
            assert_eq!(syntactic, semantic, "base {b:?} query {query} alpha {alpha}");
        }
    }
}

#[test]
fn items_are_necessary_at_their_weight() {
    let mut g = Gen {
        rng: StdRng::seed_from_u64(12),
    };
    for _ in 0..300 {
        let b = g.base();
        let dist = b.to_distribution().unwrap();
        for item in b.items() {
            assert!(
                dist.necessity(&item.formula).unwrap() >= item.weight - weight::eps(),
                "item {item:?} in {b:?}"
            );
        }
    }
}

#[test]
fn inconsistency_is_one_minus_height() {
    let mut g = Gen {
        rng: StdRng::seed_from_u64(13),
    };
    for _ in 0..300 {
        let b = g.base();
        let inc = b.inconsistency_degree().unwrap();
        let height = b.to_distribution().unwrap().height();
        assert!(
            (inc - (1.0 - height)).abs() <= weight::eps(),
            "Inc {inc} vs 1-height {} for {b:?}",
            1.0 - height
        );
    }
}

#[test]
fn normalize_preserves_equivalence() {
    let mut g = Gen {
        rng: StdRng::seed_from_u64(14),
    };
    for _ in 0..200 {
        let b = g.base();
        assert!(b.equivalent(&b.normalize().unwrap()).unwrap(), "{b:?}");
    }
}

#[test]
fn degree_monotone_under_extension_in_consistent_regime() {
    let mut g = Gen {
        rng: StdRng::seed_from_u64(15),
    };
    for _ in 0..300 {
        let b = g.base();
        let extra = g.base();
        let bigger = b.union(&extra).unwrap();
        if !weight::eq(
            b.inconsistency_degree().unwrap(),
            bigger.inconsistency_degree().unwrap(),
        ) {
            continue;
        }
        let query = g.clause();
        let d1 = b.entailment_degree(&query).unwrap();
        let d2 = bigger.entailment_degree(&query).unwrap();
        assert!(d2 >= d1 - weight::eps(), "{b:?} + {extra:?} on {query}");
    }
}

#[test]
fn cuts_are_nested() {
    let mut g = Gen {
        rng: StdRng::seed_from_u64(16),
    };
    for _ in 0..100 {
        let b = g.base();
        for &(lo, hi) in &[(0.2, 0.6), (0.1, 0.9), (0.5, 0.5)] {
            let strict_hi = b.alpha_cut(hi, true);
            let at_hi = b.alpha_cut(hi, false);
            let at_lo = b.alpha_cut(lo, false);
            assert!(strict_hi.iter().all(|x| at_hi.contains(x)));
            assert!(at_hi.iter().all(|x| at_lo.contains(x)));
        }
    }
}
