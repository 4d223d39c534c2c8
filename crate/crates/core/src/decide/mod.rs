//! The decision procedure on regular goals.
//!
//! A goal `K ⊢ F` is decided by induction on `s = c + d + v`:
//!
//! * no variable and no `(P ⇒ E) ⇒ R` conjunct: every conjunct is true and
//!   `F` false when all variables are false in `B`;
//! * a variable conjunct `P`: close if `P` is the succedent, otherwise drop,
//!   split a `P ⇒ Q ∨ R`, or substitute `⊤` for `P` elsewhere;
//! * only `(P ⇒ E) ⇒ R` conjuncts left among the non-implications: decide
//!   each subgoal `K ∧ P ∧ (E ⇒ R) ⊢ E`; a provable one lets the conjunct
//!   be replaced by `R`, and if all are refuted their refutations combine
//!   into one of the goal in `Γ(H_1 × ... × H_d)`.
//!
//! Intermediate refutations are built without re-evaluation (lifted models
//! grow quickly); the refutation returned to the caller is always verified.

mod model;
mod steps;
mod trace;

pub use model::{check, lift_refutation, verify_countermodel, CounterModel, Refuted, VerificationFailure};
pub use steps::{apply_simp_imp_imp, case_two_step, make_subgoal, simp_var_step, CaseTwo, StepError};
pub use trace::{Step, Trace};

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{HeytingAlgebra, Interpretation};
use crate::formula::Formula;
use crate::normalize::{regularize, RegularFormula, RegularizationResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Provable,
    Refuted(CounterModel),
}

impl Verdict {
    pub fn is_provable(&self) -> bool {
        matches!(self, Verdict::Provable)
    }

    pub fn counter_model(&self) -> Option<&CounterModel> {
        match self {
            Verdict::Provable => None,
            Verdict::Refuted(m) => Some(m),
        }
    }
}

/// A verdict with the search that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub trace: Trace,
    /// Present when the input was an arbitrary formula.
    pub regularization: Option<RegularizationResult>,
}

/// Decides `a`. A refutation is restated over the variables of `a` and
/// refutes `a` itself.
///
/// # Panics
/// Only on an internal invariant violation (a non-decreasing measure or a
/// counter-model that fails verification).
pub fn decide(a: &Formula) -> Decision {
    let regularization = regularize(a);
    let Decision { verdict, trace, .. } = decide_regular(&regularization.goal);
    let verdict = match verdict {
        Verdict::Provable => Verdict::Provable,
        Verdict::Refuted(m) => {
            let vars = a.variables();
            let i = m.interpretation().restricted_to(&vars);
            let m = CounterModel::new(i, Refuted::Formula(a.clone()))
                .unwrap_or_else(|e| panic!("refutation of the regular goal does not refute `{a}`: {e}"));
            Verdict::Refuted(m)
        }
    };
    Decision {
        verdict,
        trace,
        regularization: Some(regularization),
    }
}

/// Decides a regular goal; a refutation is a strong refutation of `r`.
///
/// # Panics
/// As [`decide`].
pub fn decide_regular(r: &RegularFormula) -> Decision {
    let mut engine = Engine::default();
    let (verdict, trace) = engine.solve(r);
    if let Verdict::Refuted(m) = &verdict {
        if let Err(e) = verify_countermodel(m) {
            panic!("invalid counter-model for `{r}`: {e}");
        }
    }
    Decision {
        verdict,
        trace,
        regularization: None,
    }
}

#[derive(Default)]
struct Engine {
    memo: HashMap<String, Verdict>,
}

/// Restates a refutation of a simpler goal as one of `r`, optionally
/// mapping `top_var` to top.
fn restate(m: &CounterModel, r: &RegularFormula, top_var: Option<&str>) -> Verdict {
    let mut i = m.interpretation().restricted_to(&r.variables());
    if let Some(p) = top_var {
        let top = i.algebra().top();
        i.set(p, top).expect("top belongs to the algebra");
    }
    Verdict::Refuted(CounterModel::assumed(i, r))
}

fn all_false(r: &RegularFormula) -> CounterModel {
    let h = HeytingAlgebra::Two;
    let assignment: BTreeMap<_, _> = r.variables().into_iter().map(|v| (v, h.bottom())).collect();
    CounterModel::assumed(Interpretation::new(h, assignment).expect("valid"), r)
}

impl Engine {
    fn solve(&mut self, r: &RegularFormula) -> (Verdict, Trace) {
        let key = r.to_string();
        if let Some(v) = self.memo.get(&key) {
            return (v.clone(), Trace::new(Step::Memo, r, Vec::new()));
        }
        let (verdict, trace) = self.solve_fresh(r);
        self.memo.insert(key, verdict.clone());
        (verdict, trace)
    }

    fn solve_fresh(&mut self, r: &RegularFormula) -> (Verdict, Trace) {
        if let Some(p) = r.context().iter().find_map(|b| b.as_var()) {
            return self.case_two(r, p);
        }
        if r.degree() == 0 {
            return (Verdict::Refuted(all_false(r)), Trace::new(Step::CaseI, r, Vec::new()));
        }
        self.case_three(r)
    }

    fn case_two(&mut self, r: &RegularFormula, p: &str) -> (Verdict, Trace) {
        let leaf = |step| (Verdict::Provable, Trace::new(step, r, Vec::new()));
        let step = case_two_step(r, p).unwrap_or_else(|e| panic!("case ii on `{r}`: {e}"));
        let (goal, top_var, label) = match step {
            CaseTwo::Closed => return leaf(Step::Closed(p.to_string())),
            CaseTwo::Absurd => return leaf(Step::Absurd(p.to_string())),
            CaseTwo::Drop(g) => (g, Some(p), Step::Drop(p.to_string())),
            CaseTwo::Rewrite {
                goal,
                drops_variable: true,
            } => (goal, Some(p), Step::RewriteDrop(p.to_string())),
            CaseTwo::Rewrite { goal, .. } => (goal, None, Step::Rewrite(p.to_string())),
            CaseTwo::Split(g1, g2) => {
                let (v1, t1) = self.solve(&g1);
                if let Verdict::Refuted(m) = &v1 {
                    let v = restate(m, r, None);
                    return (v, Trace::new(Step::Split(p.to_string()), r, vec![t1]));
                }
                let (v2, t2) = self.solve(&g2);
                let v = match &v2 {
                    Verdict::Provable => Verdict::Provable,
                    Verdict::Refuted(m) => restate(m, r, None),
                };
                return (v, Trace::new(Step::Split(p.to_string()), r, vec![t1, t2]));
            }
        };
        let (v, t) = self.solve(&goal);
        let v = match &v {
            Verdict::Provable => Verdict::Provable,
            Verdict::Refuted(m) => restate(m, r, top_var),
        };
        (v, Trace::new(label, r, vec![t]))
    }

    fn case_three(&mut self, r: &RegularFormula) -> (Verdict, Trace) {
        let nested: Vec<usize> = (0..r.context().len())
            .filter(|&i| r.context()[i].kind().is_nested_implication())
            .collect();
        let mut parts = Vec::with_capacity(nested.len());
        let mut children = Vec::with_capacity(nested.len());
        for i in nested {
            let sub = make_subgoal(r, i).unwrap_or_else(|e| panic!("case iii on `{r}`: {e}"));
            let (v, t) = self.solve(&sub);
            children.push(t);
            match v {
                Verdict::Provable => {
                    let next = apply_simp_imp_imp(r, i).unwrap_or_else(|e| panic!("case iii on `{r}`: {e}"));
                    let (v, t) = self.solve(&next);
                    children.push(t);
                    let v = match &v {
                        Verdict::Provable => Verdict::Provable,
                        Verdict::Refuted(m) => restate(m, r, None),
                    };
                    let label = Step::CaseIIIa(r.context()[i].text().to_string());
                    return (v, Trace::new(label, r, children));
                }
                Verdict::Refuted(m) => parts.push(m),
            }
        }
        let i = model::lift_interpretation(&parts, r).unwrap_or_else(|e| panic!("lifting failed for `{r}`: {e}"));
        (Verdict::Refuted(CounterModel::assumed(i, r)), Trace::new(Step::CaseIIIb, r, children))
    }
}
