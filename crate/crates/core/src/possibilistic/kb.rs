//! Text format for possibilistic bases: one `<formula> : <weight>` item per
//! line, `#` starts a comment, blank lines are ignored.

use thiserror::Error;

use super::{PossibilisticBase, WeightedFormula};
use crate::logic::{parse, Vocabulary};
use crate::weight;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KbError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Base(#[from] super::PossError),
}

fn line_err(line: usize, msg: impl Into<String>) -> KbError {
    KbError::Line {
        line,
        msg: msg.into(),
    }
}

/// Parse a knowledge-base file. With a vocabulary, atoms outside it are
/// rejected; otherwise the vocabulary is inferred from the formulas.
pub fn parse_kb(text: &str, vocab: Option<&Vocabulary>) -> Result<PossibilisticBase, KbError> {
    let mut items = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let colon = line
            .rfind(':')
            .ok_or_else(|| line_err(line_no, "expected `<formula> : <weight>`"))?;
        let (formula_text, weight_text) = (line[..colon].trim(), line[colon + 1..].trim());
        if formula_text.is_empty() {
            return Err(line_err(line_no, "missing formula before `:`"));
        }
        let formula = parse(formula_text, vocab)
            .map_err(|e| line_err(line_no, e.to_string()))?;
        let w: f64 = weight_text
            .parse()
            .map_err(|_| line_err(line_no, format!("invalid weight `{weight_text}`")))?;
        if !weight::in_unit(w) {
            return Err(line_err(line_no, format!("weight {w} outside [0, 1]")));
        }
        items.push(WeightedFormula::new(formula, w));
    }
    let base = match vocab {
        Some(v) => PossibilisticBase::new(items, v.clone())?,
        None => PossibilisticBase::from_items(items)?,
    };
    Ok(base)
}

/// Render a base in the knowledge-base text format.
pub fn format_kb(base: &PossibilisticBase) -> String {
    let mut out = String::new();
    for item in base.items() {
        out.push_str(&format!("{} : {}\n", item.formula, item.weight));
    }
    out
}
