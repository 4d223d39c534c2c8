//! Propositional formulas over variables, `⊥`, `⊤`, `∧`, `∨` and `⇒`.
//!
//! Negation and equivalence are not constructors: `¬A` is `A ⇒ ⊥` and
//! `A ⇔ B` is `(A ⇒ B) ∧ (B ⇒ A)`. Structural equality is formula identity.

mod parser;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

pub use parser::{parse, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Bottom,
    Top,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

/// A variable or `⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Var(String),
    Bottom,
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bottom)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// Left-nested conjunction of `parts`; `⊤` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// Variables, `⊤` and `⊥` are atomic; everything else has a main connective.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Var(_) | Formula::Top | Formula::Bottom)
    }

    pub fn as_atom(&self) -> Option<Atom> {
        match self {
            Formula::Var(name) => Some(Atom::Var(name.clone())),
            Formula::Bottom => Some(Atom::Bottom),
            _ => None,
        }
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Formula::Var(name) => Some(name),
            _ => None,
        }
    }

    /// Children of a binary node.
    pub fn operands(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Number of `∧`, `∨` and `⇒` occurrences.
    pub fn connective_count(&self) -> usize {
        match self.operands() {
            Some((a, b)) => 1 + a.connective_count() + b.connective_count(),
            None => 0,
        }
    }

    pub fn depth(&self) -> usize {
        match self.operands() {
            Some((a, b)) => 1 + a.depth().max(b.depth()),
            None => 0,
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            Formula::Top | Formula::Bottom => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self {
            Formula::Var(v) => v == name,
            Formula::Top | Formula::Bottom => false,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.contains_var(name) || b.contains_var(name)
            }
        }
    }

    /// `self[replacement/var]`.
    pub fn substitute(&self, var: &str, replacement: &Formula) -> Formula {
        self.map_vars(&|name| (name == var).then(|| replacement.clone()))
    }

    /// Simultaneous substitution `self[A1/X1, ..., Ak/Xk]`.
    pub fn substitute_all(&self, map: &HashMap<String, Formula>) -> Formula {
        self.map_vars(&|name| map.get(name).cloned())
    }

    fn map_vars(&self, f: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Var(name) => f(name).unwrap_or_else(|| self.clone()),
            Formula::Top | Formula::Bottom => self.clone(),
            Formula::And(a, b) => Formula::and(a.map_vars(f), b.map_vars(f)),
            Formula::Or(a, b) => Formula::or(a.map_vars(f), b.map_vars(f)),
            Formula::Imp(a, b) => Formula::imp(a.map_vars(f), b.map_vars(f)),
        }
    }

    /// Structurally distinct non-atomic subformulas, every formula listed
    /// before its own subformulas. On a formula without repeated subterms this
    /// is plain pre-order with the whole formula first.
    pub fn subformulas(&self) -> Vec<&Formula> {
        fn visit<'a>(f: &'a Formula, seen: &mut HashSet<&'a Formula>, post: &mut Vec<&'a Formula>) {
            let Some((left, right)) = f.operands() else {
                return;
            };
            if !seen.insert(f) {
                return;
            }
            // right first, so that the reversed post-order is left-to-right pre-order
            visit(right, seen, post);
            visit(left, seen, post);
            post.push(f);
        }
        let mut seen = HashSet::new();
        let mut post = Vec::new();
        visit(self, &mut seen, &mut post);
        post.reverse();
        post
    }

    /// Flattens nested conjunctions into their conjuncts, left to right.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        match self {
            Formula::And(a, b) => {
                let mut out = a.conjuncts();
                out.extend(b.conjuncts());
                out
            }
            other => vec![other],
        }
    }
}

impl Atom {
    pub fn to_formula(&self) -> Formula {
        match self {
            Atom::Var(name) => Formula::Var(name.clone()),
            Atom::Bottom => Formula::Bottom,
        }
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Atom::Var(name) => Some(name),
            Atom::Bottom => None,
        }
    }
}

impl From<Atom> for Formula {
    fn from(atom: Atom) -> Formula {
        atom.to_formula()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Var(name) => f.write_str(name),
            Atom::Bottom => f.write_str("false"),
        }
    }
}

// Binding strength used for bracket elision.
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Var(_) | Formula::Top | Formula::Bottom => u8::MAX,
        Formula::Imp(_, b) if **b == Formula::Bottom => PREC_UNARY,
        Formula::Imp(..) => PREC_IMP,
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
    }
}

fn write_formula(f: &Formula, min_prec: u8, out: &mut String) {
    let bracket = precedence(f) < min_prec;
    if bracket {
        out.push('(');
    }
    match f {
        Formula::Var(name) => out.push_str(name),
        Formula::Top => out.push_str("true"),
        Formula::Bottom => out.push_str("false"),
        Formula::Imp(a, b) if **b == Formula::Bottom => {
            out.push('~');
            write_formula(a, PREC_UNARY, out);
        }
        Formula::Imp(a, b) => {
            write_formula(a, PREC_IMP + 1, out);
            out.push_str(" -> ");
            write_formula(b, PREC_IMP, out);
        }
        Formula::Or(a, b) => {
            write_formula(a, PREC_OR, out);
            out.push_str(" | ");
            write_formula(b, PREC_OR + 1, out);
        }
        Formula::And(a, b) => {
            write_formula(a, PREC_AND, out);
            out.push_str(" & ");
            write_formula(b, PREC_AND + 1, out);
        }
    }
    if bracket {
        out.push(')');
    }
}

/// ASCII rendering that [`parse`] reads back to the same formula.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(f, 0, &mut out);
    out
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Formula {
        Formula::var(name)
    }

    #[test]
    fn render_elides_right_nested_implication() {
        let f = Formula::imp(v("P"), Formula::imp(v("Q"), v("R")));
        assert_eq!(render(&f), "P -> Q -> R");
        let g = Formula::imp(Formula::imp(v("P"), v("Q")), v("R"));
        assert_eq!(render(&g), "(P -> Q) -> R");
    }

    #[test]
    fn render_negation_sugar() {
        assert_eq!(render(&Formula::not(v("P"))), "~P");
        assert_eq!(render(&Formula::not(Formula::not(v("P")))), "~~P");
        assert_eq!(render(&Formula::not(Formula::and(v("P"), v("Q")))), "~(P & Q)");
    }

    #[test]
    fn render_conjunction_of_disjunction_and_negation() {
        let f = Formula::and(Formula::or(v("P"), v("Q")), Formula::not(v("Q")));
        assert_eq!(render(&f), "(P | Q) & ~Q");
        assert_eq!(parse(&render(&f)).unwrap(), f);
    }

    #[test]
    fn render_left_associative_chains() {
        let f = Formula::and(Formula::and(v("A"), v("B")), v("C"));
        assert_eq!(render(&f), "A & B & C");
        let g = Formula::and(v("A"), Formula::and(v("B"), v("C")));
        assert_eq!(render(&g), "A & (B & C)");
        let h = Formula::or(v("A"), Formula::or(v("B"), v("C")));
        assert_eq!(render(&h), "A | (B | C)");
    }

    #[test]
    fn substitution() {
        let p_imp_q = Formula::imp(v("P"), v("Q"));
        assert_eq!(p_imp_q.substitute("P", &Formula::Top), Formula::imp(Formula::Top, v("Q")));
        let a = Formula::or(v("R"), v("S"));
        assert_eq!(
            Formula::imp(v("P"), v("P")).substitute("P", &a),
            Formula::imp(a.clone(), a.clone())
        );
        assert_eq!(v("Q").substitute("P", &a), v("Q"));
    }

    #[test]
    fn simultaneous_substitution_does_not_cascade() {
        let f = Formula::imp(v("P"), v("Q"));
        let map = HashMap::from([("P".to_string(), v("Q")), ("Q".to_string(), v("P"))]);
        assert_eq!(f.substitute_all(&map), Formula::imp(v("Q"), v("P")));
    }

    #[test]
    fn subformulas_in_pre_order() {
        let body = Formula::and(Formula::or(v("P"), v("Q")), Formula::not(v("Q")));
        let f = Formula::imp(body.clone(), v("Z"));
        let subs = f.subformulas();
        assert_eq!(
            subs,
            vec![
                &f,
                &body,
                &Formula::or(v("P"), v("Q")),
                &Formula::not(v("Q"))
            ]
        );
        assert!(v("P").subformulas().is_empty());
    }

    #[test]
    fn subformulas_share_repeated_shapes() {
        let pq = Formula::imp(v("P"), v("Q"));
        let f = Formula::and(pq.clone(), pq.clone());
        assert_eq!(f.subformulas(), vec![&f, &pq]);
    }

    #[test]
    fn shared_subformula_listed_after_all_its_parents() {
        let pq = Formula::imp(v("P"), v("Q"));
        let f = Formula::and(pq.clone(), Formula::or(pq.clone(), v("R")));
        let subs = f.subformulas();
        let pos = |g: &Formula| subs.iter().position(|s| *s == g).unwrap();
        assert!(pos(&pq) > pos(&Formula::or(pq.clone(), v("R"))));
        assert_eq!(subs.len(), 3);
    }

    #[test]
    fn connective_counts() {
        assert_eq!(v("P").connective_count(), 0);
        assert_eq!(Formula::not(v("P")).connective_count(), 1);
        assert_eq!(
            Formula::imp(Formula::imp(v("P"), v("Q")), v("R")).connective_count(),
            2
        );
        assert_eq!(Formula::Top.connective_count(), 0);
    }

    #[test]
    fn conjuncts_flatten() {
        let f = Formula::and(Formula::and(v("A"), v("B")), Formula::and(v("C"), v("D")));
        assert_eq!(f.conjuncts(), vec![&v("A"), &v("B"), &v("C"), &v("D")]);
        assert_eq!(Formula::conjunction(Vec::new()), Formula::Top);
    }
}
