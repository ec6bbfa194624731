//! Possibilistic bases and their semantics.
//!
//! A base is a finite multiset of `(formula, weight)` items over a shared
//! vocabulary; the weight is a lower bound on the necessity of the formula.
//! The induced possibility distribution ranks interpretations by the
//! highest-weight item they falsify, and graded entailment goes through the
//! base's weight cuts.

mod kb;

pub use kb::{format_kb, parse_kb, KbError};

use thiserror::Error;

use crate::logic::{self, Formula, Interpretation, LogicError, Vocabulary};
use crate::weight;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PossError {
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error("weight {value} is outside [0, 1]")]
    WeightOutOfRange { value: f64 },
    #[error("formula `{formula}` uses atoms outside the base vocabulary")]
    VocabularyMismatch { formula: String },
}

/// One weighted item `(formula, weight)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedFormula {
    pub formula: Formula,
    pub weight: f64,
}

impl WeightedFormula {
    pub fn new(formula: Formula, weight: f64) -> Self {
        WeightedFormula { formula, weight }
    }
}

/// Finite multiset of weighted formulas over a fixed vocabulary.
///
/// Weight-0 items carry no information and are dropped on construction, so
/// every stored item has weight in `(0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PossibilisticBase {
    items: Vec<WeightedFormula>,
    vocab: Vocabulary,
}

impl PossibilisticBase {
    pub fn new(
        items: Vec<WeightedFormula>,
        vocab: Vocabulary,
    ) -> Result<Self, PossError> {
        for item in &items {
            if !weight::in_unit(item.weight) {
                return Err(PossError::WeightOutOfRange { value: item.weight });
            }
            if !vocab.covers(&item.formula) {
                return Err(PossError::VocabularyMismatch {
                    formula: item.formula.to_string(),
                });
            }
        }
        let items = items
            .into_iter()
            .filter(|it| !weight::is_zero(it.weight))
            .map(|it| WeightedFormula::new(it.formula, it.weight.clamp(0.0, 1.0)))
            .collect();
        Ok(PossibilisticBase { items, vocab })
    }

    /// Build a base whose vocabulary is inferred from the formulas.
    pub fn from_items(items: Vec<WeightedFormula>) -> Result<Self, PossError> {
        let vocab = Vocabulary::from_formulas(items.iter().map(|it| &it.formula));
        Self::new(items, vocab)
    }

    pub fn empty(vocab: Vocabulary) -> Self {
        PossibilisticBase {
            items: Vec::new(),
            vocab,
        }
    }

    pub fn items(&self) -> &[WeightedFormula] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    /// The same multiset over a wider vocabulary.
    pub fn with_vocabulary(&self, vocab: &Vocabulary) -> Result<Self, PossError> {
        Self::new(self.items.clone(), vocab.clone())
    }

    /// The classical base `B*` (weights forgotten).
    pub fn classical(&self) -> Vec<Formula> {
        self.items.iter().map(|it| it.formula.clone()).collect()
    }

    /// Multiset union; the vocabulary is the union of both vocabularies.
    pub fn union(&self, other: &PossibilisticBase) -> Result<Self, PossError> {
        let vocab = self.vocab.union(&other.vocab);
        let mut items = self.items.clone();
        items.extend(other.items.iter().cloned());
        Self::new(items, vocab)
    }

    /// Distinct weights present in the base, descending, tolerance-deduped.
    pub fn distinct_weights_desc(&self) -> Vec<f64> {
        weight::distinct_desc(self.items.iter().map(|it| it.weight))
    }

    /// The possibility distribution induced by the base: 1 on
    /// interpretations satisfying everything, otherwise one minus the
    /// largest falsified weight.
    pub fn to_distribution(&self) -> Result<Distribution, PossError> {
        self.vocab.check_cap()?;
        let mut values = Vec::with_capacity(self.vocab.interpretation_count());
        for m in self.vocab.interpretations() {
            let worst = self
                .items
                .iter()
                .filter(|it| !it.formula.eval(m, &self.vocab))
                .map(|it| it.weight)
                .fold(None::<f64>, |acc, w| Some(acc.map_or(w, |a| a.max(w))));
            values.push(match worst {
                None => 1.0,
                Some(w) => 1.0 - w,
            });
        }
        Ok(Distribution {
            vocab: self.vocab.clone(),
            values,
        })
    }

    /// Classical formulas with weight at least `alpha` (strictly greater
    /// when `strict`). Comparisons are tolerance-aware.
    pub fn alpha_cut(&self, alpha: f64, strict: bool) -> Vec<Formula> {
        self.items
            .iter()
            .filter(|it| {
                if strict {
                    weight::gt(it.weight, alpha)
                } else {
                    weight::ge(it.weight, alpha)
                }
            })
            .map(|it| it.formula.clone())
            .collect()
    }

    /// Largest weight whose cut is classically inconsistent; 0 for a
    /// consistent base. Only the finitely many weights present matter, since
    /// cuts change only at those points.
    pub fn inconsistency_degree(&self) -> Result<f64, PossError> {
        for w in self.distinct_weights_desc() {
            let cut = self.alpha_cut(w, false);
            if !logic::is_consistent(&cut, &self.vocab)? {
                return Ok(w);
            }
        }
        Ok(0.0)
    }

    /// Graded entailment: `alpha` must strictly exceed the inconsistency
    /// degree and the `alpha`-cut must classically entail `f`.
    pub fn pi_entails(&self, f: &Formula, alpha: f64) -> Result<bool, PossError> {
        if !weight::gt(alpha, self.inconsistency_degree()?) {
            return Ok(false);
        }
        let cut = self.alpha_cut(alpha, false);
        Ok(logic::entails(&cut, f, &self.vocab)?)
    }

    /// Largest level at which `f` is a graded consequence, probing the
    /// base's weight ladder; 1 for tautologies, 0 when `f` does not follow.
    pub fn entailment_degree(&self, f: &Formula) -> Result<f64, PossError> {
        if logic::is_tautology(f, &self.vocab)? {
            return Ok(1.0);
        }
        for w in self.distinct_weights_desc() {
            if self.pi_entails(f, w)? {
                return Ok(w);
            }
        }
        Ok(0.0)
    }

    /// Subsumption of `item` (which must denote an occurrence in the base
    /// for the non-strict check): the rest of the base at the item's level
    /// already entails the formula.
    pub fn is_subsumed(&self, item: &WeightedFormula, strict: bool) -> Result<bool, PossError> {
        if strict {
            let cut = self.alpha_cut(item.weight, true);
            return Ok(logic::entails(&cut, &item.formula, &self.vocab)?);
        }
        let idx = self
            .items
            .iter()
            .position(|it| it == item)
            .expect("non-strict subsumption needs an item of the base");
        self.is_subsumed_at(idx)
    }

    fn is_subsumed_at(&self, idx: usize) -> Result<bool, PossError> {
        let item = &self.items[idx];
        let rest: Vec<Formula> = self
            .items
            .iter()
            .enumerate()
            .filter(|&(i, it)| i != idx && weight::ge(it.weight, item.weight))
            .map(|(_, it)| it.formula.clone())
            .collect();
        Ok(logic::entails(&rest, &item.formula, &self.vocab)?)
    }

    /// Equivalent base without tautologies, structural duplicates or
    /// subsumed items. Tautology detection is semantic. Never applied
    /// implicitly by fusion.
    pub fn normalize(&self) -> Result<PossibilisticBase, PossError> {
        self.vocab.check_cap()?;
        // Merge structural duplicates, keeping the max weight and the first
        // occurrence's position.
        let mut merged: Vec<WeightedFormula> = Vec::new();
        for item in &self.items {
            if logic::is_tautology(&item.formula, &self.vocab)? {
                continue;
            }
            match merged.iter_mut().find(|it| it.formula == item.formula) {
                Some(existing) => existing.weight = existing.weight.max(item.weight),
                None => merged.push(item.clone()),
            }
        }
        let mut base = PossibilisticBase {
            items: merged,
            vocab: self.vocab.clone(),
        };
        // Drop subsumed items until fixpoint.
        'outer: loop {
            for idx in 0..base.items.len() {
                if base.is_subsumed_at(idx)? {
                    base.items.remove(idx);
                    continue 'outer;
                }
            }
            break;
        }
        Ok(base)
    }

    /// Stratified equivalence: classical equivalence of the cuts at every
    /// level. Cuts are step functions of the level, so it suffices to check
    /// at the union of both weight ladders (plus 0).
    pub fn equivalent(&self, other: &PossibilisticBase) -> Result<bool, PossError> {
        let vocab = self.vocab.union(&other.vocab);
        let mut levels: Vec<f64> = self
            .items
            .iter()
            .chain(other.items.iter())
            .map(|it| it.weight)
            .collect();
        levels.push(0.0);
        for alpha in weight::distinct_desc(levels) {
            let a = self.alpha_cut(alpha, false);
            let b = other.alpha_cut(alpha, false);
            if !logic::equivalent_sets(&a, &b, &vocab)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Total map from interpretations to possibility degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    vocab: Vocabulary,
    values: Vec<f64>,
}

impl Distribution {
    pub fn from_fn(
        vocab: Vocabulary,
        f: impl Fn(Interpretation) -> f64,
    ) -> Result<Self, PossError> {
        vocab.check_cap()?;
        let values: Vec<f64> = vocab.interpretations().map(f).collect();
        for &v in &values {
            if !weight::in_unit(v) {
                return Err(PossError::WeightOutOfRange { value: v });
            }
        }
        Ok(Distribution { vocab, values })
    }

    pub fn constant(vocab: Vocabulary, value: f64) -> Result<Self, PossError> {
        Self::from_fn(vocab, |_| value)
    }

    pub fn vocabulary(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn value(&self, m: Interpretation) -> f64 {
        self.values[m.bits() as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Height of the distribution (max possibility over all worlds).
    pub fn height(&self) -> f64 {
        self.values.iter().cloned().fold(0.0, f64::max)
    }

    /// `max { pi(w) : w model of f }`; 0 for an unsatisfiable formula.
    pub fn possibility(&self, f: &Formula) -> Result<f64, PossError> {
        let ms = logic::models(f, &self.vocab)?;
        Ok(ms
            .into_iter()
            .map(|m| self.value(m))
            .fold(0.0, f64::max))
    }

    /// `N(f) = 1 - Pi(not f)`.
    pub fn necessity(&self, f: &Formula) -> Result<f64, PossError> {
        Ok(1.0 - self.possibility(&Formula::not(f.clone()))?)
    }
}

#[cfg(test)]
mod tests;
