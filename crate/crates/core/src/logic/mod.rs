//! Propositional language: formulas, interpretations and brute-force
//! classical consequence.
//!
//! Entailment is decided by exhaustive model enumeration over a fixed,
//! finite vocabulary. A hard variable cap ([`crate::config::max_vars`])
//! keeps that tractable; every semantic operation reports a
//! [`LogicError::CapExceeded`] beyond it.

mod parser;

pub use parser::parse;

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

use crate::config;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown atom `{name}` at position {pos}")]
    UnknownAtom { name: String, pos: usize },
    #[error("vocabulary has {vars} atoms, exceeding the cap of {cap}")]
    CapExceeded { vars: usize, cap: usize },
}

/// Propositional formula over named atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bottom,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Conjunction of a list; `Top` for the empty list.
    pub fn big_and(fs: impl IntoIterator<Item = Formula>) -> Formula {
        let mut it = fs.into_iter();
        match it.next() {
            None => Formula::Top,
            Some(first) => it.fold(first, Formula::and),
        }
    }

    /// Disjunction of a list; `Bottom` for the empty list.
    pub fn big_or(fs: impl IntoIterator<Item = Formula>) -> Formula {
        let mut it = fs.into_iter();
        match it.next() {
            None => Formula::Bottom,
            Some(first) => it.fold(first, Formula::or),
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        self.collect_atoms(&mut set);
        set
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(name) => {
                out.insert(name.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Top-level disjuncts, flattening nested `Or` nodes.
    pub fn disjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_disjuncts(&mut out);
        out
    }

    fn collect_disjuncts<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Formula::Or(a, b) => {
                a.collect_disjuncts(out);
                b.collect_disjuncts(out);
            }
            other => out.push(other),
        }
    }

    /// Truth value under `m`. Implication is eliminated on the fly.
    pub fn eval(&self, m: Interpretation, vocab: &Vocabulary) -> bool {
        match self {
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Atom(name) => {
                let idx = vocab
                    .index_of(name)
                    .unwrap_or_else(|| panic!("atom `{name}` outside vocabulary"));
                m.truth(idx)
            }
            Formula::Not(f) => !f.eval(m, vocab),
            Formula::And(a, b) => a.eval(m, vocab) && b.eval(m, vocab),
            Formula::Or(a, b) => a.eval(m, vocab) || b.eval(m, vocab),
            Formula::Implies(a, b) => !a.eval(m, vocab) || b.eval(m, vocab),
        }
    }
}

// Canonical printer: `~ & | ->` with minimal parentheses. `->` is
// right-associative, `&` and `|` associate to the left.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl Formula {
    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(..) => 4,
            Formula::Top | Formula::Bottom | Formula::Atom(..) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        let parens = prec < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Formula::Top => write!(f, "T")?,
            Formula::Bottom => write!(f, "F")?,
            Formula::Atom(name) => write!(f, "{name}")?,
            Formula::Not(inner) => {
                write!(f, "~")?;
                inner.fmt_prec(f, prec)?;
            }
            Formula::And(a, b) => {
                a.fmt_prec(f, prec)?;
                write!(f, " & ")?;
                b.fmt_prec(f, prec + 1)?;
            }
            Formula::Or(a, b) => {
                a.fmt_prec(f, prec)?;
                write!(f, " | ")?;
                b.fmt_prec(f, prec + 1)?;
            }
            Formula::Implies(a, b) => {
                a.fmt_prec(f, prec + 1)?;
                write!(f, " -> ")?;
                b.fmt_prec(f, prec)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Finite, ordered set of atom names. All semantic computations of a
/// multi-base problem run over one shared vocabulary so interpretations
/// align.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    atoms: Vec<String>,
}

impl Vocabulary {
    pub fn new(mut atoms: Vec<String>) -> Self {
        atoms.sort();
        atoms.dedup();
        Vocabulary { atoms }
    }

    pub fn from_formulas<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Self {
        let mut set = BTreeSet::new();
        for f in formulas {
            f.collect_atoms(&mut set);
        }
        Vocabulary {
            atoms: set.into_iter().collect(),
        }
    }

    pub fn union(&self, other: &Vocabulary) -> Vocabulary {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Vocabulary::new(atoms)
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.binary_search_by(|a| a.as_str().cmp(name)).ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub fn covers(&self, f: &Formula) -> bool {
        f.atoms().iter().all(|a| self.contains(a))
    }

    pub fn check_cap(&self) -> Result<(), LogicError> {
        let cap = config::max_vars();
        if self.atoms.len() > cap {
            Err(LogicError::CapExceeded {
                vars: self.atoms.len(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    /// All 2^n interpretations over this vocabulary.
    pub fn interpretations(&self) -> impl Iterator<Item = Interpretation> {
        (0u64..(1u64 << self.atoms.len())).map(Interpretation::from_bits)
    }

    pub fn interpretation_count(&self) -> usize {
        1usize << self.atoms.len()
    }

    fn check_formula(&self, f: &Formula) -> Result<(), LogicError> {
        for name in f.atoms() {
            if !self.contains(&name) {
                return Err(LogicError::UnknownAtom { name, pos: 0 });
            }
        }
        Ok(())
    }
}

/// Total truth assignment over a vocabulary, packed as a bit mask. Bit `i`
/// is the value of the vocabulary's `i`-th atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation {
    bits: u64,
}

impl Interpretation {
    pub fn from_bits(bits: u64) -> Self {
        Interpretation { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn truth(self, atom_index: usize) -> bool {
        (self.bits >> atom_index) & 1 == 1
    }
}

/// Models of `f` over the full vocabulary, by exhaustive enumeration.
pub fn models(f: &Formula, vocab: &Vocabulary) -> Result<Vec<Interpretation>, LogicError> {
    vocab.check_cap()?;
    vocab.check_formula(f)?;
    Ok(vocab.interpretations().filter(|m| f.eval(*m, vocab)).collect())
}

/// True iff every model of the conjunction of `premises` satisfies
/// `conclusion`.
pub fn entails(
    premises: &[Formula],
    conclusion: &Formula,
    vocab: &Vocabulary,
) -> Result<bool, LogicError> {
    vocab.check_cap()?;
    for p in premises {
        vocab.check_formula(p)?;
    }
    vocab.check_formula(conclusion)?;
    Ok(vocab.interpretations().all(|m| {
        !premises.iter().all(|p| p.eval(m, vocab)) || conclusion.eval(m, vocab)
    }))
}

/// True iff the conjunction of `formulas` has at least one model.
pub fn is_consistent(formulas: &[Formula], vocab: &Vocabulary) -> Result<bool, LogicError> {
    vocab.check_cap()?;
    for f in formulas {
        vocab.check_formula(f)?;
    }
    Ok(vocab
        .interpretations()
        .any(|m| formulas.iter().all(|f| f.eval(m, vocab))))
}

pub fn is_tautology(f: &Formula, vocab: &Vocabulary) -> Result<bool, LogicError> {
    vocab.check_cap()?;
    vocab.check_formula(f)?;
    Ok(vocab.interpretations().all(|m| f.eval(m, vocab)))
}

/// Classical equivalence of two formula sets (mutual entailment over the
/// shared vocabulary).
pub fn equivalent_sets(
    fs: &[Formula],
    gs: &[Formula],
    vocab: &Vocabulary,
) -> Result<bool, LogicError> {
    vocab.check_cap()?;
    for f in fs.iter().chain(gs) {
        vocab.check_formula(f)?;
    }
    Ok(vocab.interpretations().all(|m| {
        fs.iter().all(|f| f.eval(m, vocab)) == gs.iter().all(|g| g.eval(m, vocab))
    }))
}

pub fn equivalent(f: &Formula, g: &Formula, vocab: &Vocabulary) -> Result<bool, LogicError> {
    equivalent_sets(std::slice::from_ref(f), std::slice::from_ref(g), vocab)
}
