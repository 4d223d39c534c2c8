use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::basic::{classify_basic, BasicFormula, RegularFormula};
use super::reduce;
use crate::formula::{Atom, Formula};

/// A regular goal equiprovable with `original`.
///
/// Whenever an interpretation makes the goal's context top, the original's
/// value is below the value of the goal's succedent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularizationResult {
    pub goal: RegularFormula,
    /// Each introduced `_pN` with the subformula it names.
    pub fresh_variables: BTreeMap<String, Formula>,
    /// Introduced variables that do not name a subformula (`Z`, `M`).
    pub auxiliary_variables: Vec<String>,
    pub original: Formula,
    pub reduced: Formula,
}

struct FreshNames<'a> {
    taken: &'a BTreeSet<String>,
    counter: usize,
}

impl FreshNames<'_> {
    fn numbered(&mut self) -> String {
        loop {
            self.counter += 1;
            let name = format!("_p{}", self.counter);
            if !self.taken.contains(&name) {
                return name;
            }
        }
    }

    fn named(&self, stem: &str) -> String {
        if !self.taken.contains(stem) {
            return stem.to_string();
        }
        (1..)
            .map(|i| format!("{stem}{i}"))
            .find(|n| !self.taken.contains(n))
            .expect("unbounded")
    }
}

fn basic(f: Formula) -> BasicFormula {
    classify_basic(&f).unwrap_or_else(|| panic!("unnesting produced non-basic `{f}`"))
}

/// Converts `a` into a regular goal by naming each non-atomic subformula
/// with a fresh variable.
pub fn regularize(a: &Formula) -> RegularizationResult {
    let reduced = reduce(a);
    let taken = a.variables();
    let mut fresh = FreshNames {
        taken: &taken,
        counter: 0,
    };
    let mut result = RegularizationResult {
        goal: RegularFormula::new([], Atom::Bottom),
        fresh_variables: BTreeMap::new(),
        auxiliary_variables: Vec::new(),
        original: a.clone(),
        reduced: reduced.clone(),
    };

    match &reduced {
        Formula::Top => {
            let z = fresh.named("_z");
            result.goal = RegularFormula::new([basic(Formula::var(&z))], Atom::Var(z.clone()));
            result.auxiliary_variables.push(z);
        }
        Formula::Bottom => {
            let m = fresh.named("_m");
            let z = fresh.named("_z");
            result.goal = RegularFormula::new([basic(Formula::var(&m))], Atom::Var(z.clone()));
            result.auxiliary_variables.extend([m, z]);
        }
        Formula::Var(p) => {
            // the succedent is the variable itself so that a refutation of the
            // goal also refutes `a`
            let m = fresh.named("_m");
            result.goal = RegularFormula::new([basic(Formula::var(&m))], Atom::Var(p.clone()));
            result.auxiliary_variables.push(m);
        }
        Formula::Imp(body, succ) if succ.as_atom().is_some() => {
            let succ = succ.as_atom().expect("atomic");
            let context = as_basic_context(body).unwrap_or_else(|| unnest(body, &mut fresh, &mut result));
            result.goal = RegularFormula::new(context, succ);
        }
        _ => {
            let z = fresh.named("_z");
            let body = Formula::imp(reduced.clone(), Formula::var(&z));
            result.auxiliary_variables.push(z.clone());
            let context = as_basic_context(&body).unwrap_or_else(|| unnest(&body, &mut fresh, &mut result));
            result.goal = RegularFormula::new(context, Atom::Var(z));
        }
    }
    result
}

fn as_basic_context(body: &Formula) -> Option<Vec<BasicFormula>> {
    body.conjuncts().into_iter().map(classify_basic).collect()
}

/// `P1 ∧ ⋀ (Pi ⇔ Gi ∘ Hi)` for the distinct non-atomic subformulas of `body`.
fn unnest(body: &Formula, fresh: &mut FreshNames<'_>, result: &mut RegularizationResult) -> Vec<BasicFormula> {
    let subs = body.subformulas();
    let names: HashMap<&Formula, String> = subs.iter().map(|s| (*s, fresh.numbered())).collect();
    let name_of = |f: &Formula| -> Formula {
        match names.get(f) {
            Some(n) => Formula::var(n),
            None => f.clone(),
        }
    };

    let mut context = vec![basic(Formula::var(&names[subs[0]]))];
    for sub in &subs {
        let p = Formula::var(&names[*sub]);
        let rhs = match sub {
            Formula::And(l, r) => Formula::and(name_of(l), name_of(r)),
            Formula::Or(l, r) => Formula::or(name_of(l), name_of(r)),
            Formula::Imp(l, r) => Formula::imp(name_of(l), name_of(r)),
            _ => unreachable!("subformulas are non-atomic"),
        };
        context.push(basic(Formula::imp(p.clone(), rhs.clone())));
        context.push(basic(Formula::imp(rhs, p)));
        result
            .fresh_variables
            .insert(names[*sub].clone(), (*sub).clone());
    }
    context
}
