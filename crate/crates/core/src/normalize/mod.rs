//! Normal forms: reduced formulas, basic formulas, regular goals.
//!
//! A formula is *reduced* when `⊤` is not an operand of any connective and
//! `⊥` only appears as the right operand of `⇒`. Regular goals are
//! implications `B1 ∧ ... ∧ Bk ⇒ F` whose conjuncts are pairwise distinct
//! basic formulas and whose succedent is a variable or `⊥`.

mod basic;
mod regularize;

pub use basic::{classify_basic, BasicFormula, BasicKind, GoalError, Measure, RegularFormula};
pub use regularize::{regularize, RegularizationResult};

use crate::formula::Formula;

/// Rewrites away every `⊤` operand and every `⊥` operand other than the
/// right-hand side of `⇒`, preserving equivalence.
pub fn reduce(a: &Formula) -> Formula {
    match a {
        Formula::Var(_) | Formula::Top | Formula::Bottom => a.clone(),
        Formula::And(l, r) => match (reduce(l), reduce(r)) {
            (Formula::Top, x) | (x, Formula::Top) => x,
            (Formula::Bottom, _) | (_, Formula::Bottom) => Formula::Bottom,
            (x, y) => Formula::and(x, y),
        },
        Formula::Or(l, r) => match (reduce(l), reduce(r)) {
            (Formula::Top, _) | (_, Formula::Top) => Formula::Top,
            (Formula::Bottom, x) | (x, Formula::Bottom) => x,
            (x, y) => Formula::or(x, y),
        },
        Formula::Imp(l, r) => match (reduce(l), reduce(r)) {
            (Formula::Top, x) => x,
            (_, Formula::Top) | (Formula::Bottom, _) => Formula::Top,
            (x, y) => Formula::imp(x, y),
        },
    }
}

pub fn is_reduced(a: &Formula) -> bool {
    fn operand_ok(x: &Formula, right_of_imp: bool) -> bool {
        match x {
            Formula::Top => false,
            Formula::Bottom => right_of_imp,
            _ => inner_ok(x),
        }
    }
    fn inner_ok(x: &Formula) -> bool {
        match x {
            Formula::And(l, r) | Formula::Or(l, r) => operand_ok(l, false) && operand_ok(r, false),
            Formula::Imp(l, r) => operand_ok(l, false) && operand_ok(r, true),
            _ => true,
        }
    }
    inner_ok(a)
}
