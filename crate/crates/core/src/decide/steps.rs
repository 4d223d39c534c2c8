//! The individual rewrites on regular goals.

use thiserror::Error;

use crate::formula::{Atom, Formula};
use crate::normalize::{classify_basic, reduce, BasicFormula, BasicKind, RegularFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("`{0}` is not a variable conjunct of the goal")]
    NotAVariableConjunct(String),
    #[error("conjunct {0} does not have the shape (P -> E) -> R")]
    NotNested(usize),
    #[error("conjunct index {0} is out of range")]
    OutOfRange(usize),
    #[error("the goal has variable conjuncts")]
    HasVariableConjuncts,
    #[error("`{variable}` cannot be simplified in `{conjunct}`")]
    NotSimplifiable { variable: String, conjunct: String },
}

/// Outcome of processing one variable conjunct `p` of a goal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseTwo {
    /// `p` is the succedent.
    Closed,
    /// Substituting `⊤` for `p` turned a conjunct into `⊥`.
    Absurd,
    /// `p` occurs in no other conjunct and was removed; a refutation of the
    /// new goal extends by mapping `p` to top.
    Drop(RegularFormula),
    /// `p` was substituted by `⊤` in every other conjunct. When
    /// `drops_variable` is set, `p` itself was also removed and a refutation
    /// extends by mapping it to top.
    Rewrite {
        goal: RegularFormula,
        drops_variable: bool,
    },
    /// `p ⇒ Q ∨ R` was replaced by `Q`, resp. `R`.
    Split(RegularFormula, RegularFormula),
}

fn to_basics(f: &Formula) -> Vec<BasicFormula> {
    f.conjuncts()
        .into_iter()
        .map(|c| classify_basic(c).unwrap_or_else(|| panic!("simplification produced non-basic `{c}`")))
        .collect()
}

/// `b[⊤/p]`, reduced.
pub fn simp_var_step(p: &str, b: &BasicFormula) -> Result<Formula, StepError> {
    let not_simplifiable = || StepError::NotSimplifiable {
        variable: p.to_string(),
        conjunct: b.text().to_string(),
    };
    if b.kind() == BasicKind::Var || !b.formula().contains_var(p) {
        return Err(not_simplifiable());
    }
    if matches!(b.disjunctive_parts(), Some((ante, _, _)) if ante == p) {
        return Err(not_simplifiable());
    }
    Ok(reduce(&b.formula().substitute(p, &Formula::Top)))
}

pub fn case_two_step(r: &RegularFormula, p: &str) -> Result<CaseTwo, StepError> {
    if !r.context().iter().any(|b| b.as_var() == Some(p)) {
        return Err(StepError::NotAVariableConjunct(p.to_string()));
    }
    if r.succedent().as_var() == Some(p) {
        return Ok(CaseTwo::Closed);
    }
    let others: Vec<&BasicFormula> = r
        .context()
        .iter()
        .filter(|b| b.as_var() != Some(p))
        .collect();
    if !others.iter().any(|b| b.formula().contains_var(p)) {
        let goal = RegularFormula::new(others.into_iter().cloned(), r.succedent().clone());
        return Ok(CaseTwo::Drop(goal));
    }

    let split = others
        .iter()
        .position(|b| matches!(b.disjunctive_parts(), Some((ante, _, _)) if ante == p));
    if let Some(i) = split {
        let (_, q, s) = others[i].disjunctive_parts().expect("checked above");
        let branch = |x: &str| {
            let mut context: Vec<BasicFormula> = r.context().iter().filter(|b| *b != others[i]).cloned().collect();
            context.push(classify_basic(&Formula::var(x)).expect("variable"));
            RegularFormula::new(context, r.succedent().clone())
        };
        return Ok(CaseTwo::Split(branch(q), branch(s)));
    }

    let mut context = vec![classify_basic(&Formula::var(p)).expect("variable")];
    for b in others {
        if !b.formula().contains_var(p) {
            context.push(b.clone());
            continue;
        }
        match simp_var_step(p, b)? {
            Formula::Top => {}
            Formula::Bottom => return Ok(CaseTwo::Absurd),
            simplified => context.extend(to_basics(&simplified)),
        }
    }
    let kept = RegularFormula::new(context, r.succedent().clone());
    if kept.measure().total() < r.measure().total() {
        return Ok(CaseTwo::Rewrite {
            goal: kept,
            drops_variable: false,
        });
    }
    // every occurrence of `p` is gone, so it can be dropped as well
    let goal = RegularFormula::new(
        kept.context().iter().filter(|b| b.as_var() != Some(p)).cloned(),
        r.succedent().clone(),
    );
    Ok(CaseTwo::Rewrite {
        goal,
        drops_variable: true,
    })
}

fn nested_parts(r: &RegularFormula, i: usize) -> Result<(&str, Atom, &str), StepError> {
    let b = r.context().get(i).ok_or(StepError::OutOfRange(i))?;
    b.nested_implication_parts().ok_or(StepError::NotNested(i))
}

/// For conjunct `i = (P ⇒ E) ⇒ R` and the rest `K`: the goal `K ∧ P ∧ (E ⇒ R) ⊢ E`,
/// with `E ⇒ R` left out when `E = ⊥`.
pub fn make_subgoal(r: &RegularFormula, i: usize) -> Result<RegularFormula, StepError> {
    if r.measure().variables > 0 {
        return Err(StepError::HasVariableConjuncts);
    }
    let (p, e, rr) = nested_parts(r, i)?;
    let mut context: Vec<BasicFormula> = r
        .context()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, b)| b.clone())
        .collect();
    context.push(classify_basic(&Formula::var(p)).expect("variable"));
    if let Atom::Var(ev) = &e {
        let imp = Formula::imp(Formula::var(ev), Formula::var(rr));
        context.push(classify_basic(&imp).expect("P -> Q is basic"));
    }
    Ok(RegularFormula::new(context, e))
}

/// Replaces conjunct `i = (P ⇒ E) ⇒ R` by `R`. Sound once
/// `make_subgoal(r, i)` is known to be provable.
pub fn apply_simp_imp_imp(r: &RegularFormula, i: usize) -> Result<RegularFormula, StepError> {
    let (_, _, rr) = nested_parts(r, i)?;
    let mut context: Vec<BasicFormula> = r
        .context()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, b)| b.clone())
        .collect();
    context.push(classify_basic(&Formula::var(rr)).expect("variable"));
    Ok(RegularFormula::new(context, r.succedent().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn goal(s: &str) -> RegularFormula {
        RegularFormula::parse(s).unwrap()
    }

    fn basic(s: &str) -> BasicFormula {
        classify_basic(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn simp_var_table() {
        let cases = [
            ("P -> Q", "Q"),
            ("Q -> P", "true"),
            ("~P", "false"),
            ("P -> Q & R", "Q & R"),
            ("X -> P & R", "X -> R"),
            ("P & Q -> R", "Q -> R"),
            ("P | Q -> R", "R"),
            ("X -> P | R", "true"),
            ("P -> Q -> R", "Q -> R"),
            ("X -> P -> R", "X -> R"),
            ("X -> Q -> P", "true"),
            ("P -> ~Q", "~Q"),
            ("X -> ~P", "~X"),
            ("(P -> Q) -> R", "Q -> R"),
            ("(Q -> P) -> R", "R"),
            ("(Q -> X) -> P", "true"),
            ("~P -> Q", "true"),
            ("~Q -> P", "true"),
            ("P -> P & R", "R"),
        ];
        for (b, expected) in cases {
            assert_eq!(
                simp_var_step("P", &basic(b)).unwrap(),
                parse(expected).unwrap(),
                "{b}"
            );
        }
    }

    #[test]
    fn simp_var_preconditions() {
        assert!(simp_var_step("P", &basic("P")).is_err());
        assert!(simp_var_step("P", &basic("Q -> R")).is_err());
        assert!(simp_var_step("P", &basic("P -> Q | R")).is_err());
    }

    #[test]
    fn succedent_in_context_closes() {
        assert_eq!(case_two_step(&goal("P |- P"), "P").unwrap(), CaseTwo::Closed);
        assert!(case_two_step(&goal("P -> Q |- P"), "P").is_err());
    }

    #[test]
    fn isolated_variable_is_dropped() {
        assert_eq!(
            case_two_step(&goal("P, Q -> R |- R"), "P").unwrap(),
            CaseTwo::Drop(goal("Q -> R |- R"))
        );
    }

    #[test]
    fn conjunction_unfolds() {
        let r = goal("_p1, _p1 -> _p2 & _p3, _p2 & _p3 -> _p1 |- P");
        let CaseTwo::Rewrite { goal: g, .. } = case_two_step(&r, "_p1").unwrap() else {
            panic!("expected a rewrite");
        };
        assert!(g.contains_conjunct(&parse("_p2").unwrap()));
        assert!(g.contains_conjunct(&parse("_p3").unwrap()));
        assert!(!g.contains_conjunct(&parse("_p2 & _p3 -> _p1").unwrap()));
        assert!(g.measure().total() < r.measure().total());
    }

    #[test]
    fn peirce_subgoal_simplifies() {
        assert_eq!(
            case_two_step(&goal("P, Q -> P |- Q"), "P").unwrap(),
            CaseTwo::Rewrite {
                goal: goal("P |- Q"),
                drops_variable: false
            }
        );
    }

    #[test]
    fn measure_neutral_rewrite_drops_variable() {
        let r = goal("P, P -> Q |- R");
        assert_eq!(
            case_two_step(&r, "P").unwrap(),
            CaseTwo::Rewrite {
                goal: goal("Q |- R"),
                drops_variable: true
            }
        );
        assert_eq!(case_two_step(&goal("P, ~P |- R"), "P").unwrap(), CaseTwo::Absurd);
    }

    #[test]
    fn disjunction_splits() {
        let r = goal("P, P -> Q | R |- S");
        assert_eq!(
            case_two_step(&r, "P").unwrap(),
            CaseTwo::Split(goal("P, Q |- S"), goal("P, R |- S"))
        );
    }

    #[test]
    fn subgoals() {
        let peirce = goal("(P -> Q) -> P |- P");
        assert_eq!(make_subgoal(&peirce, 0).unwrap(), goal("P, Q -> P |- Q"));
        assert_eq!(make_subgoal(&goal("~P -> R |- false"), 0).unwrap(), goal("P |- false"));
        assert!(make_subgoal(&goal("P, (P -> Q) -> R |- R"), 1).is_err());
        assert!(make_subgoal(&goal("P -> Q |- R"), 0).is_err());
        assert_eq!(
            apply_simp_imp_imp(&goal("(P -> P) -> Q |- Q"), 0).unwrap(),
            goal("Q |- Q")
        );
    }
}
