//! Syntactic and semantic fusion of possibilistic bases.
//!
//! The syntactic construction keeps the source formulas with reweighted
//! degrees and adds the disjunctions of formulas taken from different
//! sources; its induced distribution equals the pointwise combination of
//! the source distributions. Fusion never normalizes its output — callers
//! see the raw construction.

use thiserror::Error;

use crate::config;
use crate::logic::{Formula, LogicError, Vocabulary};
use crate::operators::{Operator, OperatorError, DEFAULT_GRID_STEP};
use crate::possibilistic::{Distribution, PossError, PossibilisticBase, WeightedFormula};
use crate::weight;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FusionError {
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Poss(#[from] PossError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("fusion would emit more than {cap} items")]
    ExplosionCap { cap: usize },
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("fusion needs at least one base")]
    NoBases,
    #[error("distributions must share one vocabulary")]
    VocabularyMismatch,
}

/// A fusion instance: the ordered vector of bases, the operator, and
/// optional per-source reliabilities (used by discounted merging).
#[derive(Debug, Clone)]
pub struct FusionProblem {
    pub bases: Vec<PossibilisticBase>,
    pub operator: Operator,
    pub reliabilities: Option<Vec<f64>>,
}

impl FusionProblem {
    pub fn new(bases: Vec<PossibilisticBase>, operator: Operator) -> Self {
        FusionProblem {
            bases,
            operator,
            reliabilities: None,
        }
    }

    /// Union vocabulary of all input bases.
    pub fn vocabulary(&self) -> Vocabulary {
        self.bases
            .iter()
            .fold(Vocabulary::new(Vec::new()), |acc, b| {
                acc.union(b.vocabulary())
            })
    }

    /// Multiset union of the inputs over the shared vocabulary.
    pub fn union_base(&self) -> Result<PossibilisticBase, FusionError> {
        let vocab = self.vocabulary();
        let mut items = Vec::new();
        for b in &self.bases {
            items.extend(b.items().iter().cloned());
        }
        Ok(PossibilisticBase::new(items, vocab)?)
    }
}

/// Which source occurrences formed a fused item: `(base index, item index)`
/// per disjunct.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Provenance {
    pub sources: Vec<(usize, usize)>,
}

/// Raw fusion output: the fused base plus per-item provenance (parallel to
/// `base.items()`).
#[derive(Debug, Clone)]
pub struct FusedBase {
    pub base: PossibilisticBase,
    pub provenance: Vec<Provenance>,
}

/// Disjunction of the chosen formulas in source order, flattening nested
/// disjunctions and dropping structurally duplicate disjuncts.
fn disjoin(formulas: &[&Formula]) -> Formula {
    let mut disjuncts: Vec<Formula> = Vec::new();
    for f in formulas {
        for d in f.disjuncts() {
            if !disjuncts.contains(d) {
                disjuncts.push(d.clone());
            }
        }
    }
    Formula::big_or(disjuncts)
}

fn collect_fused(
    pairs: Vec<(WeightedFormula, Provenance)>,
    vocab: Vocabulary,
) -> Result<FusedBase, FusionError> {
    // Filter before constructing the base so provenance stays parallel.
    let (items, provenance): (Vec<_>, Vec<_>) = pairs
        .into_iter()
        .filter(|(it, _)| !weight::is_zero(it.weight) && it.weight > 0.0)
        .unzip();
    let base = PossibilisticBase::new(items, vocab)?;
    Ok(FusedBase { base, provenance })
}

/// Binary syntactic fusion: the two input bases reweighted, plus the
/// pairwise disjunctions weighted by `1 - (1-a) (+) (1-b)`. Weight-0 items
/// are dropped; no normalization is applied.
pub fn fuse2(
    b1: &PossibilisticBase,
    b2: &PossibilisticBase,
    op: &Operator,
) -> Result<FusedBase, FusionError> {
    op.check_contract(DEFAULT_GRID_STEP)?;
    let vocab = b1.vocabulary().union(b2.vocabulary());
    let mut out = Vec::new();
    for (i, it) in b1.items().iter().enumerate() {
        let w = 1.0 - op.apply(1.0 - it.weight, 1.0);
        out.push((
            WeightedFormula::new(it.formula.clone(), w),
            Provenance {
                sources: vec![(0, i)],
            },
        ));
    }
    for (j, it) in b2.items().iter().enumerate() {
        let w = 1.0 - op.apply(1.0, 1.0 - it.weight);
        out.push((
            WeightedFormula::new(it.formula.clone(), w),
            Provenance {
                sources: vec![(1, j)],
            },
        ));
    }
    for (i, a) in b1.items().iter().enumerate() {
        for (j, b) in b2.items().iter().enumerate() {
            let w = 1.0 - op.apply(1.0 - a.weight, 1.0 - b.weight);
            out.push((
                WeightedFormula::new(disjoin(&[&a.formula, &b.formula]), w),
                Provenance {
                    sources: vec![(0, i), (1, j)],
                },
            ));
        }
    }
    collect_fused(out, vocab)
}

/// N-ary syntactic fusion. For every nonempty subset of sources and every
/// choice of one formula per participating source, emit the disjunction of
/// the chosen formulas weighted by `1 - (+)(x_1, ..., x_n)` where `x_i` is
/// the complement of the chosen weight for participants and 1 otherwise,
/// arguments in base order. For an associative operator the result is
/// stratified-equivalent to folding [`fuse2`].
pub fn fuse_n(problem: &FusionProblem) -> Result<FusedBase, FusionError> {
    let op = &problem.operator;
    let bases = &problem.bases;
    if bases.is_empty() {
        return Err(FusionError::NoBases);
    }
    op.check_contract(DEFAULT_GRID_STEP)?;
    let vocab = problem.vocabulary();

    let cap = config::explosion_cap();
    let mut combos: usize = 1;
    for b in bases {
        combos = combos.saturating_mul(b.len() + 1);
        if combos - 1 > cap {
            return Err(FusionError::ExplosionCap { cap });
        }
    }

    let n = bases.len();
    let mut out = Vec::new();
    // Mixed-radix enumeration over (len + 1) choices per base; digit 0 means
    // the base does not participate.
    let mut digits = vec![0usize; n];
    loop {
        if digits.iter().any(|&d| d > 0) {
            let mut xs = Vec::with_capacity(n);
            let mut chosen = Vec::new();
            let mut sources = Vec::new();
            for (i, &d) in digits.iter().enumerate() {
                if d == 0 {
                    xs.push(1.0);
                } else {
                    let item = &bases[i].items()[d - 1];
                    xs.push(1.0 - item.weight);
                    chosen.push(&item.formula);
                    sources.push((i, d - 1));
                }
            }
            let w = 1.0 - op.nary_apply(&xs)?;
            out.push((
                WeightedFormula::new(disjoin(&chosen), w),
                Provenance { sources },
            ));
        }
        // Advance the counter.
        let mut i = 0;
        loop {
            if i == n {
                return collect_fused(out, vocab);
            }
            digits[i] += 1;
            if digits[i] <= bases[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Pointwise n-ary combination of distributions over a shared vocabulary.
pub fn semantic_fuse(
    dists: &[Distribution],
    op: &Operator,
) -> Result<Distribution, FusionError> {
    let first = dists.first().ok_or(FusionError::NoBases)?;
    let vocab = first.vocabulary().clone();
    if dists.iter().any(|d| d.vocabulary() != &vocab) {
        return Err(FusionError::VocabularyMismatch);
    }
    let mut values = Vec::with_capacity(vocab.interpretation_count());
    for m in vocab.interpretations() {
        let xs: Vec<f64> = dists.iter().map(|d| d.value(m)).collect();
        values.push(op.nary_apply(&xs)?.clamp(0.0, 1.0));
    }
    Distribution::from_fn(vocab, |m| values[m.bits() as usize]).map_err(Into::into)
}

/// Classical result of a merging: formulas strictly above the fused base's
/// inconsistency degree.
pub fn classical_extraction(base: &PossibilisticBase) -> Result<Vec<Formula>, FusionError> {
    let inc = base.inconsistency_degree()?;
    Ok(base.alpha_cut(inc, true))
}

/// Cap the weights of a source at its reliability: items at or above
/// `lambda` drop to `lambda`, the rest keep their weight.
pub fn discount(base: &PossibilisticBase, lambda: f64) -> Result<PossibilisticBase, FusionError> {
    if !weight::in_unit(lambda) {
        return Err(PossError::WeightOutOfRange { value: lambda }.into());
    }
    let items = base
        .items()
        .iter()
        .map(|it| {
            let w = if weight::ge(it.weight, lambda) {
                lambda
            } else {
                it.weight
            };
            WeightedFormula::new(it.formula.clone(), w)
        })
        .collect();
    Ok(PossibilisticBase::new(items, base.vocabulary().clone())?)
}

/// Weighted-min fusion: the union of the discounted bases. Semantically
/// this realizes `min_j max(pi_j(w), 1 - lambda_j)`.
pub fn weighted_min_fuse(
    bases: &[PossibilisticBase],
    lambdas: &[f64],
) -> Result<FusedBase, FusionError> {
    if bases.is_empty() {
        return Err(FusionError::NoBases);
    }
    if bases.len() != lambdas.len() {
        return Err(FusionError::ArityMismatch {
            expected: bases.len(),
            got: lambdas.len(),
        });
    }
    let vocab = bases
        .iter()
        .fold(Vocabulary::new(Vec::new()), |acc, b| {
            acc.union(b.vocabulary())
        });
    let mut pairs = Vec::new();
    for (i, (b, &lambda)) in bases.iter().zip(lambdas).enumerate() {
        let discounted = discount(b, lambda)?;
        // discount never drops items below the zero threshold unless lambda
        // does, so recover item indices by position among retained items.
        let mut kept = 0usize;
        for (j, it) in b.items().iter().enumerate() {
            let w = if weight::ge(it.weight, lambda) {
                lambda
            } else {
                it.weight
            };
            if weight::is_zero(w) || w <= 0.0 {
                continue;
            }
            pairs.push((
                discounted.items()[kept].clone(),
                Provenance {
                    sources: vec![(i, j)],
                },
            ));
            kept += 1;
        }
    }
    collect_fused(pairs, vocab)
}

/// Engine rule for the adaptive operator's mode bit: disjunctive (`h = 1`)
/// exactly when the union of the inputs is fully inconsistent.
pub fn adaptive_h(bases: &[PossibilisticBase]) -> Result<u8, FusionError> {
    let first = bases.first().ok_or(FusionError::NoBases)?;
    let mut union = first.clone();
    for b in &bases[1..] {
        union = union.union(b)?;
    }
    Ok(if weight::lt(union.inconsistency_degree()?, 1.0) {
        0
    } else {
        1
    })
}

/// Lexicographic refinement of `primary` by `tiebreak`: interpretations are
/// ranked by `(primary, tiebreak)` and assigned evenly spaced levels in
/// `(0, 1]`, top rank at 1. Only the ordering of the output is specified.
pub fn dictator_refine(
    primary: &Distribution,
    tiebreak: &Distribution,
) -> Result<Distribution, FusionError> {
    if primary.vocabulary() != tiebreak.vocabulary() {
        return Err(FusionError::VocabularyMismatch);
    }
    let vocab = primary.vocabulary().clone();
    let mut keys: Vec<(f64, f64)> = vocab
        .interpretations()
        .map(|m| (primary.value(m), tiebreak.value(m)))
        .collect();
    keys.sort_by(|a, b| b.partial_cmp(a).expect("finite degrees"));
    keys.dedup_by(|a, b| weight::eq(a.0, b.0) && weight::eq(a.1, b.1));
    let ranks = keys.len() as f64;
    let level_of = |m: crate::logic::Interpretation| {
        let key = (primary.value(m), tiebreak.value(m));
        let rank = keys
            .iter()
            .position(|k| weight::eq(k.0, key.0) && weight::eq(k.1, key.1))
            .expect("every interpretation has a rank");
        (ranks - rank as f64) / ranks
    };
    Distribution::from_fn(vocab, level_of).map_err(Into::into)
}
