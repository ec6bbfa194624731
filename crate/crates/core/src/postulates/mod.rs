//! Empirical checkers for the rational merging postulates on prioritized
//! bases, a seeded counterexample search, and the noticeable-operator
//! report.
//!
//! Each checker fuses the given problem and tests the postulate's
//! post-condition directly. Preconditions (for instance a consistent union,
//! or the documented side conditions of some operators) yield a
//! `NotApplicable` verdict rather than a spurious failure, and the applied
//! condition is recorded in the verdict's notes.

mod gen;
mod table;

pub use gen::{ProblemGen, RandomBaseSpec};
pub use table::{
    expected_table1, fixture_verdict, table1_report, ExpectedCell, Table1Cell, Table1Report,
    TABLE1_OPERATORS, TABLE1_POSTULATES,
};

use std::fmt;
use std::str::FromStr;

use crate::fusion::{fuse2, fuse_n, FusionError, FusionProblem};
use crate::logic::{self, Formula};
use crate::operators::{Operator, OperatorClass};
use crate::possibilistic::{PossibilisticBase, WeightedFormula};
use crate::weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PostulateId {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    Arb,
    Maj,
}

pub const ALL_POSTULATES: [PostulateId; 9] = [
    PostulateId::P1,
    PostulateId::P2,
    PostulateId::P3,
    PostulateId::P4,
    PostulateId::P5,
    PostulateId::P6,
    PostulateId::P7,
    PostulateId::Arb,
    PostulateId::Maj,
];

impl fmt::Display for PostulateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PostulateId::P1 => "P1",
            PostulateId::P2 => "P2",
            PostulateId::P3 => "P3",
            PostulateId::P4 => "P4",
            PostulateId::P5 => "P5",
            PostulateId::P6 => "P6",
            PostulateId::P7 => "P7",
            PostulateId::Arb => "Arb",
            PostulateId::Maj => "Maj",
        };
        write!(f, "{s}")
    }
}

impl FromStr for PostulateId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "p1" => Ok(PostulateId::P1),
            "p2" => Ok(PostulateId::P2),
            "p3" => Ok(PostulateId::P3),
            "p4" => Ok(PostulateId::P4),
            "p5" => Ok(PostulateId::P5),
            "p6" => Ok(PostulateId::P6),
            "p7" => Ok(PostulateId::P7),
            "arb" => Ok(PostulateId::Arb),
            "maj" => Ok(PostulateId::Maj),
            other => Err(format!("unknown postulate `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotApplicable => "not-applicable",
        };
        write!(f, "{s}")
    }
}

/// Outcome of one postulate check: the status, an optional witnessing
/// fusion problem for failures, and notes on any applied side conditions.
#[derive(Debug, Clone)]
pub struct PostulateVerdict {
    pub id: PostulateId,
    pub status: Status,
    pub witness: Option<FusionProblem>,
    pub condition_notes: String,
}

impl PostulateVerdict {
    fn holds(id: PostulateId, notes: impl Into<String>) -> Self {
        PostulateVerdict {
            id,
            status: Status::Holds,
            witness: None,
            condition_notes: notes.into(),
        }
    }

    fn fails(id: PostulateId, witness: FusionProblem, notes: impl Into<String>) -> Self {
        PostulateVerdict {
            id,
            status: Status::Fails,
            witness: Some(witness),
            condition_notes: notes.into(),
        }
    }

    fn na(id: PostulateId, notes: impl Into<String>) -> Self {
        PostulateVerdict {
            id,
            status: Status::NotApplicable,
            witness: None,
            condition_notes: notes.into(),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }
}

const NOTE_UNION_INC: &str =
    "side condition: the union's inconsistency degree must stay below 1";
const NOTE_INC_PRESERVED: &str =
    "side condition: fusion preserves the union's inconsistency degree, which stays below 1";
const NOTE_NO_CERTAIN_CONFLICT: &str =
    "side condition: the repeated base must not contradict fully certain formulas";

/// Fuse a vector of bases. Associative operators are folded two at a time
/// with intermediate simplification, which is stratified-equivalent to the
/// n-ary construction but keeps repeated-base problems tractable;
/// non-associative operators go through the n-ary construction directly.
pub fn fuse_vector(
    bases: &[PossibilisticBase],
    op: &Operator,
) -> Result<PossibilisticBase, FusionError> {
    match bases {
        [] => Err(FusionError::NoBases),
        [one] => Ok(one.clone()),
        [a, b] => Ok(fuse2(a, b, op)?.base),
        rest if op.is_associative() => {
            let mut acc = rest[0].clone();
            for b in &rest[1..] {
                acc = fuse2(&acc, b, op)?.base.normalize()?;
            }
            Ok(acc)
        }
        rest => Ok(fuse_n(&FusionProblem::new(rest.to_vec(), op.clone()))?.base),
    }
}

/// Finite formula family standing in for "all formulas": every source
/// formula, disjunctions of formulas from different bases, plus extras.
fn formula_family(bases: &[PossibilisticBase], extras: &[Formula]) -> Vec<Formula> {
    let mut fam: Vec<Formula> = Vec::new();
    let push = |f: Formula, fam: &mut Vec<Formula>| {
        if !fam.contains(&f) {
            fam.push(f);
        }
    };
    for b in bases {
        for it in b.items() {
            push(it.formula.clone(), &mut fam);
        }
    }
    for (i, b1) in bases.iter().enumerate() {
        for b2 in &bases[i + 1..] {
            for x in b1.items() {
                for y in b2.items() {
                    push(
                        Formula::or(x.formula.clone(), y.formula.clone()),
                        &mut fam,
                    );
                }
            }
        }
    }
    for f in extras {
        push(f.clone(), &mut fam);
    }
    fam
}

/// Base-to-base graded entailment: every item of `right` whose weight
/// exceeds `left`'s inconsistency degree must be entailed by `left` at that
/// weight. Drowned items are skipped.
fn entails_base(
    left: &PossibilisticBase,
    right: &PossibilisticBase,
) -> Result<bool, FusionError> {
    let inc = left.inconsistency_degree()?;
    for it in right.items() {
        if !weight::gt(it.weight, inc) {
            continue;
        }
        let wide = left.with_vocabulary(&left.vocabulary().union(right.vocabulary()))?;
        if !wide.pi_entails(&it.formula, it.weight)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every item of `right` entailed by `left` at its own weight, with no
/// drowning exemption.
fn entails_all_items(
    left: &PossibilisticBase,
    right: &PossibilisticBase,
) -> Result<bool, FusionError> {
    for it in right.items() {
        if !left.pi_entails(&it.formula, it.weight)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The result of merging must stay usable: its inconsistency degree is
/// below 1. Conjunctive operators carry the side condition that the union
/// itself is not fully inconsistent.
pub fn check_p1(problem: &FusionProblem) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::P1;
    let conjunctive = problem
        .operator
        .declared_classes()
        .contains(OperatorClass::Conjunctive);
    let notes = if conjunctive { NOTE_UNION_INC } else { "" };
    if conjunctive {
        let union_inc = problem.union_base()?.inconsistency_degree()?;
        if !weight::lt(union_inc, 1.0) {
            return Ok(PostulateVerdict::na(id, NOTE_UNION_INC));
        }
    }
    let fused = fuse_vector(&problem.bases, &problem.operator)?;
    if weight::lt(fused.inconsistency_degree()?, 1.0) {
        Ok(PostulateVerdict::holds(id, notes))
    } else {
        Ok(PostulateVerdict::fails(id, problem.clone(), notes))
    }
}

/// On a consistent union, merging and union must entail the same formulas
/// (with some positive degree). Checked over a finite formula family.
pub fn check_p2(
    problem: &FusionProblem,
    extras: &[Formula],
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::P2;
    let union = problem.union_base()?;
    if weight::gt(union.inconsistency_degree()?, 0.0) {
        return Ok(PostulateVerdict::na(id, "the union is inconsistent"));
    }
    let fused = fuse_vector(&problem.bases, &problem.operator)?
        .with_vocabulary(&problem.vocabulary())?;
    let family = formula_family(&problem.bases, extras);
    let notes = format!("checked over a finite family of {} formulas", family.len());
    for f in &family {
        let from_fusion = weight::gt(fused.entailment_degree(f)?, 0.0);
        let from_union = weight::gt(union.entailment_degree(f)?, 0.0);
        if from_fusion != from_union {
            return Ok(PostulateVerdict::fails(
                id,
                problem.clone(),
                format!("{notes}; disagreement on `{f}`"),
            ));
        }
    }
    Ok(PostulateVerdict::holds(id, notes))
}

fn match_bases(
    a: &[PossibilisticBase],
    b: &[PossibilisticBase],
    used: &mut [bool],
    i: usize,
) -> Result<bool, FusionError> {
    if i == a.len() {
        return Ok(true);
    }
    for j in 0..b.len() {
        if used[j] {
            continue;
        }
        if a[i].equivalent(&b[j])? {
            used[j] = true;
            if match_bases(a, b, used, i + 1)? {
                return Ok(true);
            }
            used[j] = false;
        }
    }
    Ok(false)
}

/// Syntax independence: equivalent problems (a bijection pairing
/// stratified-equivalent bases) must fuse to stratified-equivalent results.
pub fn check_p3(
    a: &FusionProblem,
    b: &FusionProblem,
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::P3;
    if a.bases.len() != b.bases.len() {
        return Ok(PostulateVerdict::na(id, "problems differ in size"));
    }
    let mut used = vec![false; b.bases.len()];
    if !match_bases(&a.bases, &b.bases, &mut used, 0)? {
        return Ok(PostulateVerdict::na(
            id,
            "no bijection pairs equivalent bases",
        ));
    }
    let fa = fuse_vector(&a.bases, &a.operator)?;
    let fb = fuse_vector(&b.bases, &a.operator)?;
    if fa.equivalent(&fb)? {
        Ok(PostulateVerdict::holds(id, ""))
    } else {
        Ok(PostulateVerdict::fails(id, b.clone(), ""))
    }
}

/// Fairness under conflict: when the two sources disagree, the merging must
/// not swallow either source whole (some item of each side fails to be
/// entailed at its own weight). Applies only to individually consistent
/// sources whose union is inconsistent, so the conflict is between the
/// sources rather than inside one of them.
pub fn check_p4(
    b1: &PossibilisticBase,
    b2: &PossibilisticBase,
    op: &Operator,
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::P4;
    if weight::gt(b1.inconsistency_degree()?, 0.0)
        || weight::gt(b2.inconsistency_degree()?, 0.0)
    {
        return Ok(PostulateVerdict::na(id, "a source is internally inconsistent"));
    }
    let union = b1.union(b2)?;
    if !weight::gt(union.inconsistency_degree()?, 0.0) {
        return Ok(PostulateVerdict::na(id, "the union is consistent"));
    }
    let fused = fuse2(b1, b2, op)?.base;
    let first = entails_all_items(&fused, &b1.with_vocabulary(fused.vocabulary())?)?;
    let second = entails_all_items(&fused, &b2.with_vocabulary(fused.vocabulary())?)?;
    if first || second {
        let side = if first { "first" } else { "second" };
        Ok(PostulateVerdict::fails(
            id,
            FusionProblem::new(vec![b1.clone(), b2.clone()], op.clone()),
            format!("the {side} source is entailed wholesale"),
        ))
    } else {
        Ok(PostulateVerdict::holds(id, ""))
    }
}

fn p5_p6_setup(
    g1: &[PossibilisticBase],
    g2: &[PossibilisticBase],
    op: &Operator,
) -> Result<Option<(PossibilisticBase, PossibilisticBase)>, FusionError> {
    let e1 = fuse_vector(g1, op)?;
    let e2 = fuse_vector(g2, op)?;
    let both = e1.union(&e2)?;
    if weight::gt(both.inconsistency_degree()?, 0.0) {
        return Ok(None);
    }
    let mut all = g1.to_vec();
    all.extend_from_slice(g2);
    let joint = fuse_vector(&all, op)?;
    Ok(Some((both, joint)))
}

fn p5_p6_witness(
    g1: &[PossibilisticBase],
    g2: &[PossibilisticBase],
    op: &Operator,
) -> FusionProblem {
    let mut all = g1.to_vec();
    all.extend_from_slice(g2);
    FusionProblem::new(all, op.clone())
}

/// When the groups' mergings agree, their union must entail the joint
/// merging.
pub fn check_p5(
    g1: &[PossibilisticBase],
    g2: &[PossibilisticBase],
    op: &Operator,
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::P5;
    let notes = format!("group split {} + {}", g1.len(), g2.len());
    match p5_p6_setup(g1, g2, op)? {
        None => Ok(PostulateVerdict::na(id, "the group mergings conflict")),
        Some((both, joint)) => {
            if entails_base(&both, &joint)? {
                Ok(PostulateVerdict::holds(id, notes))
            } else {
                Ok(PostulateVerdict::fails(id, p5_p6_witness(g1, g2, op), notes))
            }
        }
    }
}

/// When the groups' mergings agree, the joint merging must recover their
/// union's content: every pooled formula stays entailed with some positive
/// degree. The degree itself may shrink (averaging dilutes weights by
/// design), so unlike [`check_p5`] this direction is checked at the
/// content level.
pub fn check_p6(
    g1: &[PossibilisticBase],
    g2: &[PossibilisticBase],
    op: &Operator,
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::P6;
    let notes = format!("group split {} + {}", g1.len(), g2.len());
    match p5_p6_setup(g1, g2, op)? {
        None => Ok(PostulateVerdict::na(id, "the group mergings conflict")),
        Some((both, joint)) => {
            let wide = joint.with_vocabulary(&joint.vocabulary().union(both.vocabulary()))?;
            for it in both.items() {
                if !weight::gt(it.weight, joint.inconsistency_degree()?) {
                    continue;
                }
                if !weight::gt(wide.entailment_degree(&it.formula)?, 0.0) {
                    return Ok(PostulateVerdict::fails(
                        id,
                        p5_p6_witness(g1, g2, op),
                        format!("{notes}; `{}` lost", it.formula),
                    ));
                }
            }
            Ok(PostulateVerdict::holds(id, notes))
        }
    }
}

/// Consensus preservation: a formula entailed by both sources with positive
/// degree must survive the merging with positive degree. Reinforcement
/// operators apply their documented side condition unless `footnote` is
/// disabled.
pub fn check_p7_with(
    b1: &PossibilisticBase,
    b2: &PossibilisticBase,
    op: &Operator,
    extras: &[Formula],
    footnote: bool,
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::P7;
    let fused = fuse2(b1, b2, op)?.base;
    let mut notes = String::new();
    if footnote {
        let union_inc = b1.union(b2)?.inconsistency_degree()?;
        let preserved = weight::eq(fused.inconsistency_degree()?, union_inc)
            && weight::lt(union_inc, 1.0);
        if !preserved {
            return Ok(PostulateVerdict::na(id, NOTE_INC_PRESERVED));
        }
        notes = NOTE_INC_PRESERVED.to_string();
    }
    let vocab = fused.vocabulary().clone();
    let wide1 = b1.with_vocabulary(&vocab)?;
    let wide2 = b2.with_vocabulary(&vocab)?;
    for f in formula_family(&[b1.clone(), b2.clone()], extras) {
        let alpha = wide1.entailment_degree(&f)?;
        let beta = wide2.entailment_degree(&f)?;
        if weight::gt(alpha, 0.0)
            && weight::gt(beta, 0.0)
            && !weight::gt(fused.entailment_degree(&f)?, 0.0)
        {
            return Ok(PostulateVerdict::fails(
                id,
                FusionProblem::new(vec![b1.clone(), b2.clone()], op.clone()),
                format!("`{f}` entailed by both sources but lost ({notes})"),
            ));
        }
    }
    Ok(PostulateVerdict::holds(id, notes))
}

/// [`check_p7_with`], applying the side condition exactly for declared
/// reinforcement operators.
pub fn check_p7(
    b1: &PossibilisticBase,
    b2: &PossibilisticBase,
    op: &Operator,
    extras: &[Formula],
) -> Result<PostulateVerdict, FusionError> {
    let footnote = op.declared_classes().contains(OperatorClass::Reinforcement);
    check_p7_with(b1, b2, op, extras, footnote)
}

fn group_with_copies(
    group: &[PossibilisticBase],
    k: &PossibilisticBase,
    n: usize,
) -> Vec<PossibilisticBase> {
    let mut v = group.to_vec();
    v.extend(std::iter::repeat(k.clone()).take(n));
    v
}

/// Arbitration: repeating one source must not change the merging. Checked
/// for every repetition count in `2..=n_max` against the single-copy
/// result.
pub fn check_arb(
    group: &[PossibilisticBase],
    k: &PossibilisticBase,
    op: &Operator,
    n_max: usize,
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::Arb;
    assert!(n_max >= 2, "arbitration needs at least two repetitions");
    let reference = fuse_vector(&group_with_copies(group, k, 1), op)?;
    for n in 2..=n_max {
        let bases = group_with_copies(group, k, n);
        let fused = fuse_vector(&bases, op)?;
        if !fused.equivalent(&reference)? {
            return Ok(PostulateVerdict::fails(
                id,
                FusionProblem::new(bases, op.clone()),
                format!("result changed at {n} repetitions"),
            ));
        }
    }
    Ok(PostulateVerdict::holds(id, format!("checked 2..={n_max} repetitions")))
}

/// Majority: enough repetitions of one source must make its content
/// entailed. The existential repetition count is searched up to `n_max`, so
/// a failing verdict is a bounded negative.
pub fn check_maj(
    group: &[PossibilisticBase],
    k: &PossibilisticBase,
    op: &Operator,
    n_max: usize,
) -> Result<PostulateVerdict, FusionError> {
    let id = PostulateId::Maj;
    let vocab = group
        .iter()
        .fold(k.vocabulary().clone(), |acc, b| acc.union(b.vocabulary()));
    let mut certain: Vec<Formula> = group
        .iter()
        .flat_map(|b| b.items())
        .filter(|it| weight::ge(it.weight, 1.0))
        .map(|it| it.formula.clone())
        .collect();
    certain.extend(k.classical());
    if !logic::is_consistent(&certain, &vocab)? {
        return Ok(PostulateVerdict::na(id, NOTE_NO_CERTAIN_CONFLICT));
    }
    if weight::gt(k.inconsistency_degree()?, 0.0) {
        return Ok(PostulateVerdict::na(id, "the repeated base is inconsistent"));
    }
    for n in 1..=n_max {
        let fused = fuse_vector(&group_with_copies(group, k, n), op)?
            .with_vocabulary(&vocab)?;
        let mut all = true;
        for it in k.items() {
            if !weight::gt(fused.entailment_degree(&it.formula)?, 0.0) {
                all = false;
                break;
            }
        }
        if all {
            return Ok(PostulateVerdict::holds(id, format!("witnessed at {n} repetitions")));
        }
    }
    Ok(PostulateVerdict::fails(
        id,
        FusionProblem::new(group_with_copies(group, k, n_max), op.clone()),
        format!("bounded negative: no repetition count up to {n_max} works"),
    ))
}

/// An equivalent reformulation of a base: simplified, with every formula
/// double-negated.
fn equivalent_variant(b: &PossibilisticBase) -> Result<PossibilisticBase, FusionError> {
    let n = b.normalize()?;
    let items = n
        .items()
        .iter()
        .map(|it| {
            WeightedFormula::new(
                Formula::not(Formula::not(it.formula.clone())),
                it.weight,
            )
        })
        .collect();
    Ok(PossibilisticBase::new(items, b.vocabulary().clone())?)
}

fn search_trial(
    g: &mut ProblemGen,
    id: PostulateId,
    op: &Operator,
    arb_n_max: usize,
    maj_n_max: usize,
) -> Result<PostulateVerdict, FusionError> {
    let bases = g.bases();
    assert!(bases.len() >= 2, "the search needs at least two bases per trial");
    match id {
        PostulateId::P1 => check_p1(&FusionProblem::new(bases, op.clone())),
        PostulateId::P2 => {
            let extras: Vec<Formula> = (0..3).map(|_| g.formula(2)).collect();
            check_p2(&FusionProblem::new(bases, op.clone()), &extras)
        }
        PostulateId::P3 => {
            // Same problem restated: reversed order, simplified bases,
            // double-negated formulas. Assumes a symmetric operator.
            let variant: Vec<PossibilisticBase> = bases
                .iter()
                .rev()
                .map(|b| equivalent_variant(b))
                .collect::<Result<_, _>>()?;
            check_p3(
                &FusionProblem::new(bases, op.clone()),
                &FusionProblem::new(variant, op.clone()),
            )
        }
        PostulateId::P4 => check_p4(&bases[0], &bases[1], op),
        PostulateId::P5 => check_p5(&bases[..1], &bases[1..], op),
        PostulateId::P6 => check_p6(&bases[..1], &bases[1..], op),
        PostulateId::P7 => {
            let extras: Vec<Formula> = (0..3).map(|_| g.formula(2)).collect();
            check_p7(&bases[0], &bases[1], op, &extras)
        }
        PostulateId::Arb => check_arb(&bases[..1], &bases[1], op, arb_n_max),
        PostulateId::Maj => check_maj(&bases[..1], &bases[1], op, maj_n_max),
    }
}

/// [`random_search`] with explicit repetition bounds for the Arb and Maj
/// trials.
pub fn random_search_bounded(
    spec: &RandomBaseSpec,
    id: PostulateId,
    op: &Operator,
    arb_n_max: usize,
    maj_n_max: usize,
) -> Result<PostulateVerdict, FusionError> {
    let mut g = ProblemGen::new(spec.clone());
    let mut applicable = 0usize;
    let mut notes = String::new();
    for trial in 0..spec.trials {
        let v = search_trial(&mut g, id, op, arb_n_max, maj_n_max)?;
        match v.status {
            Status::Fails => {
                let mut v = v;
                v.condition_notes =
                    format!("trial {trial}: {}", v.condition_notes).trim_end_matches(": ").to_string();
                return Ok(v);
            }
            Status::Holds => {
                if notes.is_empty() && !v.condition_notes.is_empty() {
                    notes = v.condition_notes;
                }
                applicable += 1;
            }
            Status::NotApplicable => {
                if notes.is_empty() && !v.condition_notes.is_empty() {
                    notes = v.condition_notes;
                }
            }
        }
    }
    let summary = format!(
        "no violation in {} trials ({applicable} applicable)",
        spec.trials
    );
    let notes = if notes.is_empty() {
        summary
    } else {
        format!("{summary}; {notes}")
    };
    Ok(PostulateVerdict::holds(id, notes))
}

/// Seeded counterexample search: run the checker on random problems and
/// return the first failure, or a holds-on-sample verdict with trial
/// statistics. Arbitration compares up to 4 repetitions, majority searches
/// up to 32 (large enough for slow reinforcement on the weight grid).
pub fn random_search(
    spec: &RandomBaseSpec,
    id: PostulateId,
    op: &Operator,
) -> Result<PostulateVerdict, FusionError> {
    random_search_bounded(spec, id, op, 4, 32)
}
