use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, Element, HeytingAlgebra, Interpretation};
use crate::formula::Formula;
use crate::normalize::RegularFormula;

/// What a counter-model refutes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refuted {
    /// A strong refutation: every conjunct is top, the succedent is not.
    Goal(RegularFormula),
    /// The formula evaluates to a non-top element.
    Formula(Formula),
}

impl Refuted {
    pub fn to_formula(&self) -> Formula {
        match self {
            Refuted::Goal(r) => r.to_formula(),
            Refuted::Formula(a) => a.clone(),
        }
    }
}

impl fmt::Display for Refuted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refuted::Goal(r) => write!(f, "{r}"),
            Refuted::Formula(a) => write!(f, "{a}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerificationFailure {
    #[error("conjunct `{conjunct}` evaluates to {value}, not top")]
    ConjunctNotTop { conjunct: String, value: Element },
    #[error("succedent `{0}` evaluates to top")]
    SuccedentTop(String),
    #[error("formula `{0}` evaluates to top")]
    FormulaTop(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An interpretation in a finite Heyting algebra together with what it
/// refutes. Only constructible through verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterModel {
    interpretation: Interpretation,
    refuted: Refuted,
    value: Element,
}

impl CounterModel {
    /// Checks that `interpretation` refutes `refuted` and records the value.
    pub fn new(interpretation: Interpretation, refuted: Refuted) -> Result<CounterModel, VerificationFailure> {
        let value = check(&interpretation, &refuted)?;
        Ok(CounterModel {
            interpretation,
            refuted,
            value,
        })
    }

    /// A strong refutation of `r` whose verification is left to the caller;
    /// with the context top, the goal's value is the succedent's.
    pub(crate) fn assumed(interpretation: Interpretation, r: &RegularFormula) -> CounterModel {
        let value = interpretation
            .evaluate(&r.succedent().to_formula())
            .unwrap_or_else(|e| panic!("counter-model for `{r}` is incomplete: {e}"));
        CounterModel {
            interpretation,
            refuted: Refuted::Goal(r.clone()),
            value,
        }
    }

    pub fn algebra(&self) -> &HeytingAlgebra {
        self.interpretation.algebra()
    }

    pub fn interpretation(&self) -> &Interpretation {
        &self.interpretation
    }

    pub fn refuted(&self) -> &Refuted {
        &self.refuted
    }

    /// The value of the refuted formula under the interpretation.
    pub fn value(&self) -> &Element {
        &self.value
    }
}

impl fmt::Display for CounterModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} value={}",
            self.algebra(),
            self.interpretation,
            self.value
        )
    }
}

/// Re-evaluates a counter-model from scratch.
pub fn verify_countermodel(m: &CounterModel) -> Result<(), VerificationFailure> {
    check(&m.interpretation, &m.refuted).map(|_| ())
}

/// Evaluates `refuted` under `i`; returns its value if `i` refutes it.
pub fn check(i: &Interpretation, refuted: &Refuted) -> Result<Element, VerificationFailure> {
    let h = i.algebra();
    match refuted {
        Refuted::Goal(r) => {
            for b in r.context() {
                let value = i.evaluate(b.formula())?;
                if !h.is_top(&value) {
                    return Err(VerificationFailure::ConjunctNotTop {
                        conjunct: b.text().to_string(),
                        value,
                    });
                }
            }
            let succ = r.succedent().to_formula();
            if h.is_top(&i.evaluate(&succ)?) {
                return Err(VerificationFailure::SuccedentTop(succ.to_string()));
            }
            Ok(i.evaluate(&r.to_formula())?)
        }
        Refuted::Formula(a) => {
            let value = i.evaluate(a)?;
            if h.is_top(&value) {
                return Err(VerificationFailure::FormulaTop(a.to_string()));
            }
            Ok(value)
        }
    }
}

/// Combines strong refutations of the subgoals into one of `r`: the product
/// interpretation composed with `α`, in `Γ(H_1 × ... × H_d)`.
///
/// Variables a part leaves unassigned take bottom in that component.
pub fn lift_refutation(parts: &[CounterModel], r: &RegularFormula) -> Result<CounterModel, VerificationFailure> {
    let interpretation = lift_interpretation(parts, r)?;
    CounterModel::new(interpretation, Refuted::Goal(r.clone()))
}

pub(crate) fn lift_interpretation(parts: &[CounterModel], r: &RegularFormula) -> Result<Interpretation, AlgebraError> {
    let factors: Vec<HeytingAlgebra> = parts.iter().map(|m| m.algebra().clone()).collect();
    let product = HeytingAlgebra::product(factors)?;
    let lifted = HeytingAlgebra::gamma(product.clone());
    let assignment = r
        .variables()
        .into_iter()
        .map(|v| {
            let components = parts
                .iter()
                .map(|m| {
                    m.interpretation
                        .get(&v)
                        .cloned()
                        .unwrap_or_else(|| m.algebra().bottom())
                })
                .collect();
            let x = product.alpha(&Element::Tuple(components))?;
            Ok((v, x))
        })
        .collect::<Result<_, AlgebraError>>()?;
    Interpretation::new(lifted, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_assignment;
    use crate::formula::parse;

    fn goal(s: &str) -> RegularFormula {
        RegularFormula::parse(s).unwrap()
    }

    fn interp(h: HeytingAlgebra, s: &str) -> Interpretation {
        let a = parse_assignment(&h, s).unwrap();
        Interpretation::new(h, a).unwrap()
    }

    #[test]
    fn goal_verification() {
        let ok = CounterModel::new(
            interp(HeytingAlgebra::Two, "P=t,Q=f"),
            Refuted::Goal(goal("P |- Q")),
        );
        assert!(ok.is_ok());
        let bad = CounterModel::new(
            interp(HeytingAlgebra::Two, "P=t"),
            Refuted::Goal(goal("P |- P")),
        );
        assert_eq!(bad, Err(VerificationFailure::SuccedentTop("P".into())));
        let bad = CounterModel::new(
            interp(HeytingAlgebra::Two, "P=f,Q=f"),
            Refuted::Goal(goal("P |- Q")),
        );
        assert!(matches!(bad, Err(VerificationFailure::ConjunctNotTop { .. })));
    }

    #[test]
    fn peirce_lift() {
        let part = CounterModel::new(
            interp(HeytingAlgebra::Two, "P=t,Q=f"),
            Refuted::Goal(goal("P |- Q")),
        )
        .unwrap();
        let m = lift_refutation(&[part], &goal("(P -> Q) -> P |- P")).unwrap();
        assert_eq!(m.algebra().to_string(), "G(P(B))");
        assert_eq!(m.interpretation().to_string(), "P=*,Q=old(f)");
        assert!(verify_countermodel(&m).is_ok());
    }

    #[test]
    fn lifted_implication_stays_top() {
        let part = CounterModel::new(
            interp(HeytingAlgebra::Two, "P=f,Q=f,R=f"),
            Refuted::Goal(goal("P -> Q |- R")),
        )
        .unwrap();
        let m = lift_refutation(&[part], &goal("P -> Q |- R")).unwrap();
        let v = m.interpretation().evaluate(&parse("P -> Q").unwrap()).unwrap();
        assert!(m.algebra().is_top(&v));
    }
}
