use std::fmt;

use thiserror::Error;

use super::is_reduced;
use crate::formula::{parse, render, Atom, Formula};

/// Shapes of basic formulas. `P`, `Q`, `R` are variables, not necessarily
/// distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicKind {
    /// `P`
    Var,
    /// `P ⇒ Q`
    ImpVV,
    /// `¬P`
    NotV,
    /// `P ⇒ Q ∧ R`
    ImpVAnd,
    /// `P ⇒ Q ∨ R`
    ImpVOr,
    /// `P ⇒ Q ⇒ R`
    ImpVImp,
    /// `P ⇒ ¬Q`
    ImpVNot,
    /// `P ∧ Q ⇒ R`
    AndImp,
    /// `P ∨ Q ⇒ R`
    OrImp,
    /// `(P ⇒ Q) ⇒ R`
    ImpImp,
    /// `¬P ⇒ R`
    NotImp,
}

impl BasicKind {
    /// The `(P ⇒ E) ⇒ R` family counted by the degree.
    pub fn is_nested_implication(self) -> bool {
        matches!(self, BasicKind::ImpImp | BasicKind::NotImp)
    }
}

/// A reduced formula with its basic shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicFormula {
    formula: Formula,
    kind: BasicKind,
    text: String,
}

impl PartialOrd for BasicFormula {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasicFormula {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.text
            .cmp(&other.text)
            .then_with(|| self.formula.cmp(&other.formula))
    }
}

fn is_var(f: &Formula) -> bool {
    matches!(f, Formula::Var(_))
}

fn both_vars(a: &Formula, b: &Formula) -> bool {
    is_var(a) && is_var(b)
}

/// Classifies `f` as one of the basic shapes, or `None`.
pub fn classify_basic(f: &Formula) -> Option<BasicFormula> {
    let kind = basic_kind(f)?;
    Some(BasicFormula {
        formula: f.clone(),
        kind,
        text: render(f),
    })
}

fn basic_kind(f: &Formula) -> Option<BasicKind> {
    let Formula::Imp(ante, cons) = f else {
        return is_var(f).then_some(BasicKind::Var);
    };
    if is_var(ante) {
        return match &**cons {
            Formula::Var(_) => Some(BasicKind::ImpVV),
            Formula::Bottom => Some(BasicKind::NotV),
            Formula::And(a, b) if both_vars(a, b) => Some(BasicKind::ImpVAnd),
            Formula::Or(a, b) if both_vars(a, b) => Some(BasicKind::ImpVOr),
            Formula::Imp(a, b) if both_vars(a, b) => Some(BasicKind::ImpVImp),
            Formula::Imp(a, b) if is_var(a) && **b == Formula::Bottom => Some(BasicKind::ImpVNot),
            _ => None,
        };
    }
    if !is_var(cons) {
        return None;
    }
    match &**ante {
        Formula::And(a, b) if both_vars(a, b) => Some(BasicKind::AndImp),
        Formula::Or(a, b) if both_vars(a, b) => Some(BasicKind::OrImp),
        Formula::Imp(a, b) if both_vars(a, b) => Some(BasicKind::ImpImp),
        Formula::Imp(a, b) if is_var(a) && **b == Formula::Bottom => Some(BasicKind::NotImp),
        _ => None,
    }
}

impl BasicFormula {
    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn kind(&self) -> BasicKind {
        self.kind
    }

    /// Canonical text, also the sort key.
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn as_var(&self) -> Option<&str> {
        self.formula.as_var()
    }

    /// `(P, E, R)` for a conjunct `(P ⇒ E) ⇒ R`.
    pub fn nested_implication_parts(&self) -> Option<(&str, Atom, &str)> {
        if !self.kind.is_nested_implication() {
            return None;
        }
        let Formula::Imp(ante, r) = &self.formula else {
            return None;
        };
        let Formula::Imp(p, e) = &**ante else {
            return None;
        };
        Some((p.as_var()?, e.as_atom()?, r.as_var()?))
    }

    /// `(P, Q, R)` for a conjunct `P ⇒ Q ∨ R`.
    pub fn disjunctive_parts(&self) -> Option<(&str, &str, &str)> {
        if self.kind != BasicKind::ImpVOr {
            return None;
        }
        let Formula::Imp(p, cons) = &self.formula else {
            return None;
        };
        let Formula::Or(q, r) = &**cons else {
            return None;
        };
        Some((p.as_var()?, q.as_var()?, r.as_var()?))
    }
}

impl fmt::Display for BasicFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoalError {
    #[error("`{0}` is not a basic formula")]
    NotBasic(String),
    #[error("`{0}` is not a variable or `false`")]
    NotAtomic(String),
    #[error("goal must have the form `B1, ..., Bk |- F`")]
    Syntax,
    #[error(transparent)]
    Parse(#[from] crate::formula::ParseError),
}

/// A regular goal `B1 ∧ ... ∧ Bk ⇒ F`. The context is kept sorted by
/// canonical text and free of duplicates; an empty context stands for `⊤`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularFormula {
    context: Vec<BasicFormula>,
    succedent: Atom,
}

/// The components of the termination measure `s = c + d + v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Measure {
    /// Connective occurrences inside the conjuncts.
    pub connectives: usize,
    /// Conjuncts of shape `(P ⇒ E) ⇒ R`.
    pub degree: usize,
    /// Conjuncts that are bare variables.
    pub variables: usize,
}

impl Measure {
    pub fn total(&self) -> usize {
        self.connectives + self.degree + self.variables
    }
}

impl RegularFormula {
    pub fn new<I: IntoIterator<Item = BasicFormula>>(context: I, succedent: Atom) -> RegularFormula {
        let mut context: Vec<BasicFormula> = context.into_iter().collect();
        context.sort();
        context.dedup();
        RegularFormula { context, succedent }
    }

    pub fn from_formulas<I: IntoIterator<Item = Formula>>(
        context: I,
        succedent: Atom,
    ) -> Result<RegularFormula, GoalError> {
        let basics = context
            .into_iter()
            .map(|f| {
                if !is_reduced(&f) {
                    return Err(GoalError::NotBasic(render(&f)));
                }
                classify_basic(&f).ok_or_else(|| GoalError::NotBasic(render(&f)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RegularFormula::new(basics, succedent))
    }

    /// Parses the canonical text `B1, ..., Bk |- F`.
    pub fn parse(text: &str) -> Result<RegularFormula, GoalError> {
        let (ctx, succ) = text.split_once("|-").ok_or(GoalError::Syntax)?;
        let succedent = parse(succ.trim())?;
        let succedent = succedent
            .as_atom()
            .ok_or_else(|| GoalError::NotAtomic(render(&succedent)))?;
        let context = ctx
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(parse)
            .collect::<Result<Vec<_>, _>>()?;
        RegularFormula::from_formulas(context, succedent)
    }

    pub fn context(&self) -> &[BasicFormula] {
        &self.context
    }

    pub fn succedent(&self) -> &Atom {
        &self.succedent
    }

    /// `d`: number of `(P ⇒ E) ⇒ R` conjuncts.
    pub fn degree(&self) -> usize {
        self.context
            .iter()
            .filter(|b| b.kind.is_nested_implication())
            .count()
    }

    pub fn measure(&self) -> Measure {
        Measure {
            connectives: self
                .context
                .iter()
                .map(|b| b.formula.connective_count())
                .sum(),
            degree: self.degree(),
            variables: self.context.iter().filter(|b| b.kind == BasicKind::Var).count(),
        }
    }

    /// The goal as a single formula; just the succedent when the context is empty.
    pub fn to_formula(&self) -> Formula {
        if self.context.is_empty() {
            return self.succedent.to_formula();
        }
        Formula::imp(
            Formula::conjunction(self.context.iter().map(|b| b.formula.clone())),
            self.succedent.to_formula(),
        )
    }

    pub fn contains_conjunct(&self, f: &Formula) -> bool {
        self.context.iter().any(|b| b.formula == *f)
    }

    pub fn variables(&self) -> std::collections::BTreeSet<String> {
        let mut vars = self.to_formula().variables();
        if let Atom::Var(v) = &self.succedent {
            vars.insert(v.clone());
        }
        vars
    }
}

impl fmt::Display for RegularFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.context.iter().map(|b| b.text()).collect();
        if parts.is_empty() {
            write!(f, "|- {}", self.succedent)
        } else {
            write!(f, "{} |- {}", parts.join(", "), self.succedent)
        }
    }
}
