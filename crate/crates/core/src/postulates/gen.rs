//! Seeded random fusion problems for counterexample search.
//!
//! Formulas are small clauses and weights come from a finite grid, which
//! keeps tolerance comparisons exact in practice and weight ladders short.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::logic::{Formula, Vocabulary};
use crate::possibilistic::{PossibilisticBase, WeightedFormula};
use crate::weight;

#[derive(Debug, Clone)]
pub struct RandomBaseSpec {
    pub atom_count: usize,
    pub max_formulas: usize,
    /// Weight grid; must lie in `(0, 1]`.
    pub weight_levels: Vec<f64>,
    pub base_count: usize,
    pub trials: usize,
    pub seed: u64,
}

impl RandomBaseSpec {
    pub fn standard(seed: u64) -> Self {
        RandomBaseSpec {
            atom_count: 3,
            max_formulas: 3,
            weight_levels: (1..=10).map(|i| i as f64 / 10.0).collect(),
            base_count: 2,
            trials: 200,
            seed,
        }
    }
}

/// Deterministic generator of bases over a fixed alphabetic vocabulary.
pub struct ProblemGen {
    spec: RandomBaseSpec,
    rng: StdRng,
    vocab: Vocabulary,
}

impl ProblemGen {
    pub fn new(spec: RandomBaseSpec) -> Self {
        assert!(spec.atom_count >= 1 && spec.atom_count <= 26);
        assert!(spec.max_formulas >= 1);
        assert!(spec
            .weight_levels
            .iter()
            .all(|&w| weight::in_unit(w) && !weight::is_zero(w)));
        let atoms = (0..spec.atom_count)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        let rng = StdRng::seed_from_u64(spec.seed);
        ProblemGen {
            spec,
            rng,
            vocab: Vocabulary::new(atoms),
        }
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn weight(&mut self) -> f64 {
        let levels = &self.spec.weight_levels;
        levels[self.rng.gen_range(0..levels.len())]
    }

    /// A random clause of one or two literals.
    pub fn clause(&mut self) -> Formula {
        let n = self.rng.gen_range(1..=2);
        let lits: Vec<Formula> = (0..n)
            .map(|_| {
                let atom = Formula::atom(
                    self.vocab.atoms()[self.rng.gen_range(0..self.vocab.len())].clone(),
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

    /// A random formula of bounded connective depth over clause leaves.
    pub fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 {
            return self.clause();
        }
        match self.rng.gen_range(0..4) {
            0 => Formula::not(self.formula(depth - 1)),
            1 => Formula::and(self.formula(depth - 1), self.formula(depth - 1)),
            2 => Formula::or(self.formula(depth - 1), self.formula(depth - 1)),
            _ => self.clause(),
        }
    }

    /// A random base whose inconsistency degree is below 1 (each source is
    /// individually usable).
    pub fn base(&mut self) -> PossibilisticBase {
        loop {
            let n = self.rng.gen_range(1..=self.spec.max_formulas);
            let items = (0..n)
                .map(|_| WeightedFormula::new(self.clause(), self.weight()))
                .collect();
            let b = PossibilisticBase::new(items, self.vocab.clone())
                .expect("generated weights lie in the unit interval");
            let inc = b
                .inconsistency_degree()
                .expect("generator vocabulary is below the cap");
            if weight::lt(inc, 1.0) {
                return b;
            }
        }
    }

    /// `base_count` fresh bases.
    pub fn bases(&mut self) -> Vec<PossibilisticBase> {
        (0..self.spec.base_count).map(|_| self.base()).collect()
    }
}
