//! Combination operators on `[0, 1]` and empirical class checking.
//!
//! Every operator must satisfy the two fusion contract requirements:
//! `1 (+) 1 = 1` and monotonicity in each argument. Class membership
//! (conjunctive, disjunctive, ...) is checked on a finite grid with the
//! global weight tolerance; verdicts carry a violating grid point when one
//! exists.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

use crate::weight;

pub const DEFAULT_GRID_STEP: f64 = 1.0 / 64.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error("unknown operator `{0}`")]
    UnknownName(String),
    #[error("operator `{op}` violates the fusion contract ({what}) at ({a}, {b})")]
    ContractViolation {
        op: String,
        what: String,
        a: f64,
        b: f64,
    },
    #[error("`{op}` is not {expected}, cannot build an adaptive operator")]
    ClassMismatch { op: String, expected: String },
    #[error("no n-ary form is defined for `{0}`")]
    NaryUndefined(String),
    #[error("invalid operator table: {0}")]
    InvalidTable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OperatorClass {
    Conjunctive,
    Disjunctive,
    RegularDisjunctive,
    Idempotent,
    Reinforcement,
    Progressive,
    Averaging,
}

pub const ALL_CLASSES: [OperatorClass; 7] = [
    OperatorClass::Conjunctive,
    OperatorClass::Disjunctive,
    OperatorClass::RegularDisjunctive,
    OperatorClass::Idempotent,
    OperatorClass::Reinforcement,
    OperatorClass::Progressive,
    OperatorClass::Averaging,
];

impl fmt::Display for OperatorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OperatorClass::Conjunctive => "conjunctive",
            OperatorClass::Disjunctive => "disjunctive",
            OperatorClass::RegularDisjunctive => "regular_disjunctive",
            OperatorClass::Idempotent => "idempotent",
            OperatorClass::Reinforcement => "reinforcement",
            OperatorClass::Progressive => "progressive",
            OperatorClass::Averaging => "averaging",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassSet(u8);

impl ClassSet {
    pub fn of(classes: &[OperatorClass]) -> Self {
        let mut s = ClassSet(0);
        for &c in classes {
            s.0 |= 1 << c as u8;
        }
        s
    }

    pub fn contains(self, class: OperatorClass) -> bool {
        self.0 & (1 << class as u8) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = OperatorClass> {
        ALL_CLASSES.into_iter().filter(move |&c| self.contains(c))
    }
}

#[derive(Debug, Clone)]
enum OpKind {
    Min,
    Max,
    Prod,
    Psum,
    Gmean,
    Dgmean,
    Amean,
    Luk,
    VacDisj,
    ZeroReinf,
    Adaptive {
        disjunctive: Box<Operator>,
        reinforcement: Box<Operator>,
        h: u8,
    },
    Table {
        levels: usize,
        values: Vec<f64>,
    },
}

/// A named binary combinator on `[0, 1]` with declared class tags.
#[derive(Debug, Clone)]
pub struct Operator {
    name: String,
    associative: bool,
    declared: ClassSet,
    kind: OpKind,
}

pub const BUILTIN_NAMES: [&str; 10] = [
    "min",
    "max",
    "prod",
    "psum",
    "gmean",
    "dgmean",
    "amean",
    "luk",
    "vac_disj",
    "zero_reinf",
];

impl Operator {
    pub fn builtin(name: &str) -> Result<Operator, OperatorError> {
        use OperatorClass::*;
        let (kind, associative, declared): (OpKind, bool, &[OperatorClass]) = match name {
            "min" => (OpKind::Min, true, &[Conjunctive, Idempotent]),
            "max" => (
                OpKind::Max,
                true,
                &[Disjunctive, RegularDisjunctive, Idempotent],
            ),
            "prod" => (OpKind::Prod, true, &[Conjunctive, Reinforcement, Progressive]),
            "psum" => (OpKind::Psum, true, &[Disjunctive, RegularDisjunctive]),
            "gmean" => (OpKind::Gmean, false, &[Idempotent, Averaging]),
            "dgmean" => (
                OpKind::Dgmean,
                false,
                &[Disjunctive, RegularDisjunctive, Idempotent, Averaging],
            ),
            "amean" => (OpKind::Amean, false, &[Idempotent, Averaging]),
            "luk" => (OpKind::Luk, true, &[Conjunctive, Reinforcement]),
            "vac_disj" => (OpKind::VacDisj, true, &[Disjunctive]),
            "zero_reinf" => (OpKind::ZeroReinf, true, &[Reinforcement]),
            other => return Err(OperatorError::UnknownName(other.into())),
        };
        Ok(Operator {
            name: name.into(),
            associative,
            declared: ClassSet::of(declared),
            kind,
        })
    }

    /// All builtin operators.
    pub fn registry() -> Vec<Operator> {
        BUILTIN_NAMES
            .iter()
            .map(|n| Operator::builtin(n).expect("builtin"))
            .collect()
    }

    /// The adaptive operator `max(min(h, a (+)d b), min(1-h, a (+)r b))`.
    /// With `h = 1` it is the disjunctive side pointwise, with `h = 0` the
    /// reinforcement side.
    pub fn adaptive(
        disjunctive: Operator,
        reinforcement: Operator,
        h: u8,
    ) -> Result<Operator, OperatorError> {
        assert!(h <= 1, "h must be 0 or 1");
        if !disjunctive
            .declared
            .contains(OperatorClass::RegularDisjunctive)
        {
            return Err(OperatorError::ClassMismatch {
                op: disjunctive.name,
                expected: "regular disjunctive".into(),
            });
        }
        if !reinforcement.declared.contains(OperatorClass::Progressive) {
            return Err(OperatorError::ClassMismatch {
                op: reinforcement.name,
                expected: "a progressive reinforcement".into(),
            });
        }
        let chosen = if h == 1 {
            &disjunctive
        } else {
            &reinforcement
        };
        let name = format!(
            "adaptive(h={h}; {}, {})",
            disjunctive.name, reinforcement.name
        );
        Ok(Operator {
            name,
            associative: chosen.associative,
            declared: chosen.declared,
            kind: OpKind::Adaptive {
                disjunctive: Box::new(disjunctive),
                reinforcement: Box::new(reinforcement),
                h,
            },
        })
    }

    /// Load a user operator from a grid table: header `levels=<k>`, then
    /// `(k+1)^2` values row-major over the uniform grid. Evaluation snaps
    /// arguments to the nearest level, which keeps grid monotonicity
    /// meaningful. Declared classes are whatever holds on the table grid.
    pub fn from_table(text: &str) -> Result<Operator, OperatorError> {
        let mut tokens = text.split_whitespace();
        let header = tokens
            .next()
            .ok_or_else(|| OperatorError::InvalidTable("empty input".into()))?;
        let levels: usize = header
            .strip_prefix("levels=")
            .ok_or_else(|| OperatorError::InvalidTable("expected `levels=<k>` header".into()))?
            .parse()
            .map_err(|_| OperatorError::InvalidTable("invalid level count".into()))?;
        // Classification reuses the table grid, and the grid step 1/levels
        // must stay within (0, 0.5].
        if levels < 2 {
            return Err(OperatorError::InvalidTable("levels must be at least 2".into()));
        }
        let expected = (levels + 1) * (levels + 1);
        let values: Vec<f64> = tokens
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|_| OperatorError::InvalidTable(format!("invalid value `{t}`")))
            })
            .collect::<Result<_, _>>()?;
        if values.len() != expected {
            return Err(OperatorError::InvalidTable(format!(
                "expected {expected} values, found {}",
                values.len()
            )));
        }
        if values.iter().any(|v| !weight::in_unit(*v)) {
            return Err(OperatorError::InvalidTable(
                "values must lie in [0, 1]".into(),
            ));
        }
        let mut op = Operator {
            name: "table".into(),
            associative: false,
            declared: ClassSet::default(),
            kind: OpKind::Table { levels, values },
        };
        let report = op.classify(1.0 / levels as f64);
        op.declared = report.holding_classes();
        Ok(op)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_associative(&self) -> bool {
        self.associative
    }

    pub fn declared_classes(&self) -> ClassSet {
        self.declared
    }

    pub fn apply(&self, a: f64, b: f64) -> f64 {
        match &self.kind {
            OpKind::Min => a.min(b),
            OpKind::Max => a.max(b),
            OpKind::Prod => a * b,
            OpKind::Psum => a + b - a * b,
            OpKind::Gmean => (a * b).sqrt(),
            OpKind::Dgmean => 1.0 - ((1.0 - a) * (1.0 - b)).sqrt(),
            OpKind::Amean => (a + b) / 2.0,
            OpKind::Luk => (a + b - 1.0).max(0.0),
            OpKind::VacDisj => 1.0,
            OpKind::ZeroReinf => {
                if weight::is_one(a) && weight::is_one(b) {
                    1.0
                } else {
                    0.0
                }
            }
            OpKind::Adaptive {
                disjunctive,
                reinforcement,
                h,
            } => {
                let hf = *h as f64;
                let d = disjunctive.apply(a, b);
                let r = reinforcement.apply(a, b);
                hf.min(d).max((1.0 - hf).min(r))
            }
            OpKind::Table { levels, values } => {
                let k = *levels as f64;
                let ia = (a.clamp(0.0, 1.0) * k).round() as usize;
                let ib = (b.clamp(0.0, 1.0) * k).round() as usize;
                values[ia * (levels + 1) + ib]
            }
        }
    }

    /// Combine a nonempty vector: left fold for associative operators, the
    /// natural n-ary form for the non-associative builtins.
    pub fn nary_apply(&self, xs: &[f64]) -> Result<f64, OperatorError> {
        assert!(!xs.is_empty(), "n-ary application needs at least one value");
        if xs.len() == 1 {
            return Ok(xs[0]);
        }
        if xs.len() == 2 {
            return Ok(self.apply(xs[0], xs[1]));
        }
        if self.associative {
            return Ok(xs[1..].iter().fold(xs[0], |acc, &x| self.apply(acc, x)));
        }
        let n = xs.len() as f64;
        match &self.kind {
            OpKind::Amean => Ok(xs.iter().sum::<f64>() / n),
            OpKind::Gmean => Ok(xs.iter().product::<f64>().powf(1.0 / n)),
            OpKind::Dgmean => Ok(1.0
                - xs.iter()
                    .map(|&x| 1.0 - x)
                    .product::<f64>()
                    .powf(1.0 / n)),
            OpKind::Adaptive {
                disjunctive,
                reinforcement,
                h,
            } => {
                if *h == 1 {
                    disjunctive.nary_apply(xs)
                } else {
                    reinforcement.nary_apply(xs)
                }
            }
            _ => Err(OperatorError::NaryUndefined(self.name.clone())),
        }
    }

    /// Verify the two fusion contract requirements on a grid.
    pub fn check_contract(&self, grid_step: f64) -> Result<(), OperatorError> {
        if !weight::is_one(self.apply(1.0, 1.0)) {
            return Err(OperatorError::ContractViolation {
                op: self.name.clone(),
                what: "1 (+) 1 = 1".into(),
                a: 1.0,
                b: 1.0,
            });
        }
        let grid = grid_points(grid_step);
        for &a in &grid {
            for &b in &grid {
                let here = self.apply(a, b);
                for (a2, b2) in [(a + grid_step, b), (a, b + grid_step)] {
                    if a2 > 1.0 + weight::eps() || b2 > 1.0 + weight::eps() {
                        continue;
                    }
                    if self.apply(a2.min(1.0), b2.min(1.0)) < here - weight::eps() {
                        return Err(OperatorError::ContractViolation {
                            op: self.name.clone(),
                            what: "monotonicity".into(),
                            a,
                            b,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Test each class definition at every grid point and report verdicts
    /// with witnesses. Also covers the two contract requirements.
    pub fn classify(&self, grid_step: f64) -> OperatorClassReport {
        assert!(
            grid_step > 0.0 && grid_step <= 0.5,
            "grid step must be in (0, 0.5]"
        );
        let grid = grid_points(grid_step);
        let interior: Vec<f64> = grid
            .iter()
            .copied()
            .filter(|&x| !weight::is_zero(x) && !weight::is_one(x))
            .collect();
        let nonzero: Vec<f64> = grid
            .iter()
            .copied()
            .filter(|&x| !weight::is_zero(x))
            .collect();
        let nonone: Vec<f64> = grid
            .iter()
            .copied()
            .filter(|&x| !weight::is_one(x))
            .collect();

        let mut verdicts = BTreeMap::new();

        // Boundary-quantified classes: test along the a=1 and b=1 lines.
        let conjunctive = first_violation(grid.iter().map(|&a| (a, 1.0)), |a, _| {
            weight::eq(self.apply(a, 1.0), a) && weight::eq(self.apply(1.0, a), a)
        });
        verdicts.insert(OperatorClass::Conjunctive, conjunctive);

        let disjunctive = first_violation(grid.iter().map(|&a| (a, 1.0)), |a, _| {
            weight::is_one(self.apply(a, 1.0)) && weight::is_one(self.apply(1.0, a))
        });
        let disjunctive_holds = disjunctive.holds;
        verdicts.insert(OperatorClass::Disjunctive, disjunctive);

        let regular = if !disjunctive_holds {
            verdicts[&OperatorClass::Disjunctive].clone()
        } else {
            first_violation(pairs(&nonone, &nonone), |a, b| {
                !weight::is_one(self.apply(a, b))
            })
        };
        verdicts.insert(OperatorClass::RegularDisjunctive, regular);

        let idempotent = first_violation(grid.iter().map(|&a| (a, a)), |a, _| {
            weight::eq(self.apply(a, a), a)
        });
        verdicts.insert(OperatorClass::Idempotent, idempotent);

        // Strict inequalities only quantify over interior points.
        let reinforcement = first_violation(pairs(&interior, &interior), |a, b| {
            weight::lt(self.apply(a, b), a.min(b))
        });
        let reinforcement_holds = reinforcement.holds;
        verdicts.insert(OperatorClass::Reinforcement, reinforcement);

        // Progressive is a subclass of reinforcement.
        let progressive = if !reinforcement_holds {
            verdicts[&OperatorClass::Reinforcement].clone()
        } else {
            first_violation(pairs(&nonzero, &nonzero), |a, b| {
                !weight::is_zero(self.apply(a, b))
            })
        };
        verdicts.insert(OperatorClass::Progressive, progressive);

        // Between min and max, and distinct from both somewhere.
        let mut averaging = first_violation(pairs(&grid, &grid), |a, b| {
            let v = self.apply(a, b);
            weight::ge(v, a.min(b)) && weight::le(v, a.max(b))
        });
        if averaging.holds {
            let differs_min = pairs(&grid, &grid).any(|(a, b)| !weight::eq(self.apply(a, b), a.min(b)));
            let differs_max = pairs(&grid, &grid).any(|(a, b)| !weight::eq(self.apply(a, b), a.max(b)));
            if !differs_min || !differs_max {
                averaging = ClassVerdict {
                    holds: false,
                    witness: None,
                };
            }
        }
        verdicts.insert(OperatorClass::Averaging, averaging);

        let contract_identity = ClassVerdict {
            holds: weight::is_one(self.apply(1.0, 1.0)),
            witness: if weight::is_one(self.apply(1.0, 1.0)) {
                None
            } else {
                Some((1.0, 1.0))
            },
        };
        let contract_monotone = match self.check_contract(grid_step) {
            Ok(()) => ClassVerdict {
                holds: true,
                witness: None,
            },
            Err(OperatorError::ContractViolation { a, b, .. }) => ClassVerdict {
                holds: false,
                witness: Some((a, b)),
            },
            Err(_) => unreachable!(),
        };

        OperatorClassReport {
            operator: self.name.clone(),
            grid_step,
            verdicts,
            contract_identity,
            contract_monotone,
        }
    }
}

/// Per-class verdict on the evaluation grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassVerdict {
    pub holds: bool,
    /// A grid point violating the class definition, when one was found.
    pub witness: Option<(f64, f64)>,
}

#[derive(Debug, Clone)]
pub struct OperatorClassReport {
    pub operator: String,
    pub grid_step: f64,
    pub verdicts: BTreeMap<OperatorClass, ClassVerdict>,
    pub contract_identity: ClassVerdict,
    pub contract_monotone: ClassVerdict,
}

impl OperatorClassReport {
    pub fn verdict(&self, class: OperatorClass) -> &ClassVerdict {
        &self.verdicts[&class]
    }

    pub fn holding_classes(&self) -> ClassSet {
        let holding: Vec<OperatorClass> = ALL_CLASSES
            .into_iter()
            .filter(|c| self.verdicts[c].holds)
            .collect();
        ClassSet::of(&holding)
    }

    /// True iff the grid verdicts coincide with the operator's declared
    /// classes and both contract checks pass.
    pub fn matches(&self, declared: ClassSet) -> bool {
        self.contract_identity.holds
            && self.contract_monotone.holds
            && ALL_CLASSES
                .into_iter()
                .all(|c| self.verdicts[&c].holds == declared.contains(c))
    }
}

fn grid_points(step: f64) -> Vec<f64> {
    let mut pts = Vec::new();
    let mut x = 0.0;
    while x < 1.0 - 1e-12 {
        pts.push(x);
        x += step;
    }
    pts.push(1.0);
    pts
}

fn pairs<'a>(
    xs: &'a [f64],
    ys: &'a [f64],
) -> impl Iterator<Item = (f64, f64)> + 'a {
    xs.iter()
        .flat_map(move |&a| ys.iter().map(move |&b| (a, b)))
}

fn first_violation(
    points: impl Iterator<Item = (f64, f64)>,
    ok: impl Fn(f64, f64) -> bool,
) -> ClassVerdict {
    for (a, b) in points {
        if !ok(a, b) {
            return ClassVerdict {
                holds: false,
                witness: Some((a, b)),
            };
        }
    }
    ClassVerdict {
        holds: true,
        witness: None,
    }
}
