//! Finite Heyting algebras built structurally from the two-element algebra,
//! finite products, and the co-atom extension `Γ`.
//!
//! Nothing here materializes a carrier unless asked to: operations recurse on
//! the shape of the algebra, so elements of very large algebras (`J_4` and
//! beyond) can be represented and computed with directly.

mod embed;
mod finite;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::formula::Formula;

pub use embed::{embed_diagonal, embed_in_jaskowski, embed_interpretation, jaskowski_level};
pub use finite::{
    check_heyting, enumerate_elements, find_refutation, models, FiniteAlgebra, LawViolation,
    DEFAULT_BUDGET,
};
pub use text::{parse_algebra, parse_assignment, parse_element, TextError};

/// Structural description of a finite Heyting algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HeytingAlgebra {
    /// The two-element Boolean algebra `B`.
    Two,
    /// `Γ(H)`: `H` with a fresh co-atom adjoined.
    Gamma(Box<HeytingAlgebra>),
    /// Direct product of a nonempty list of factors.
    Product(Vec<HeytingAlgebra>),
}

/// An element, shaped like the algebra it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    F,
    T,
    /// An element of the base algebra of a `Γ`.
    Old(Box<Element>),
    /// The co-atom of a `Γ`.
    Star,
    Tuple(Vec<Element>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connective {
    Meet,
    Join,
    Impl,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element `{element}` does not belong to algebra `{algebra}`")]
    MalformedElement { algebra: String, element: String },
    #[error("variable `{0}` is not assigned by the interpretation")]
    Unassigned(String),
    #[error("refusing to enumerate {required} cases (budget {budget})")]
    BudgetExceeded { required: BigUint, budget: u64 },
    #[error("product algebra needs at least one factor")]
    EmptyProduct,
    #[error("algebra `{0}` does not embed in any Jaskowski algebra")]
    NotEmbeddable(String),
}

/// `J_0 = B`, `J_{k+1} = Γ(J_k^{k+1})`.
pub fn jaskowski(k: usize) -> HeytingAlgebra {
    let mut h = HeytingAlgebra::Two;
    for level in 1..=k {
        h = HeytingAlgebra::gamma(HeytingAlgebra::Product(vec![h; level]));
    }
    h
}

impl HeytingAlgebra {
    pub fn gamma(base: HeytingAlgebra) -> HeytingAlgebra {
        HeytingAlgebra::Gamma(Box::new(base))
    }

    pub fn product(factors: Vec<HeytingAlgebra>) -> Result<HeytingAlgebra, AlgebraError> {
        if factors.is_empty() {
            return Err(AlgebraError::EmptyProduct);
        }
        Ok(HeytingAlgebra::Product(factors))
    }

    /// `H^n`.
    pub fn power(&self, n: usize) -> HeytingAlgebra {
        HeytingAlgebra::Product(vec![self.clone(); n])
    }

    pub fn cardinality(&self) -> BigUint {
        match self {
            HeytingAlgebra::Two => BigUint::from(2u32),
            HeytingAlgebra::Gamma(base) => base.cardinality() + 1u32,
            HeytingAlgebra::Product(fs) => fs.iter().map(|f| f.cardinality()).product(),
        }
    }

    pub fn top(&self) -> Element {
        match self {
            HeytingAlgebra::Two => Element::T,
            HeytingAlgebra::Gamma(base) => Element::Old(Box::new(base.top())),
            HeytingAlgebra::Product(fs) => Element::Tuple(fs.iter().map(|f| f.top()).collect()),
        }
    }

    pub fn bottom(&self) -> Element {
        match self {
            HeytingAlgebra::Two => Element::F,
            HeytingAlgebra::Gamma(base) => Element::Old(Box::new(base.bottom())),
            HeytingAlgebra::Product(fs) => {
                Element::Tuple(fs.iter().map(|f| f.bottom()).collect())
            }
        }
    }

    /// Whether `x` is well-formed for this algebra.
    pub fn contains(&self, x: &Element) -> bool {
        match (self, x) {
            (HeytingAlgebra::Two, Element::F | Element::T) => true,
            (HeytingAlgebra::Gamma(_), Element::Star) => true,
            (HeytingAlgebra::Gamma(base), Element::Old(inner)) => base.contains(inner),
            (HeytingAlgebra::Product(fs), Element::Tuple(xs)) => {
                fs.len() == xs.len() && fs.iter().zip(xs).all(|(f, x)| f.contains(x))
            }
            _ => false,
        }
    }

    pub fn check(&self, x: &Element) -> Result<(), AlgebraError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(AlgebraError::MalformedElement {
                algebra: self.to_string(),
                element: x.to_string(),
            })
        }
    }

    /// Assumes `x` is well-formed.
    pub fn is_top(&self, x: &Element) -> bool {
        match (self, x) {
            (HeytingAlgebra::Two, e) => *e == Element::T,
            (HeytingAlgebra::Gamma(base), Element::Old(inner)) => base.is_top(inner),
            (HeytingAlgebra::Gamma(_), _) => false,
            (HeytingAlgebra::Product(fs), Element::Tuple(xs)) => {
                fs.iter().zip(xs).all(|(f, x)| f.is_top(x))
            }
            (HeytingAlgebra::Product(_), _) => false,
        }
    }

    /// `α : H → Γ(H)`, fixing non-top elements and sending top to the co-atom.
    pub fn alpha(&self, x: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        Ok(self.alpha_unchecked(x))
    }

    fn alpha_unchecked(&self, x: &Element) -> Element {
        if self.is_top(x) {
            Element::Star
        } else {
            Element::Old(Box::new(x.clone()))
        }
    }

    pub fn operate(
        &self,
        connective: Connective,
        x: &Element,
        y: &Element,
    ) -> Result<Element, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.op(connective, x, y))
    }

    pub fn meet(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.operate(Connective::Meet, x, y)
    }

    pub fn join(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.operate(Connective::Join, x, y)
    }

    pub fn implies(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.operate(Connective::Impl, x, y)
    }

    /// `x ≤ y` iff `x ⊓ y = x`.
    pub fn leq(&self, x: &Element, y: &Element) -> Result<bool, AlgebraError> {
        Ok(self.meet(x, y)? == *x)
    }

    /// Operation on elements already known to be well-formed.
    pub(crate) fn op(&self, connective: Connective, x: &Element, y: &Element) -> Element {
        match self {
            HeytingAlgebra::Two => {
                let (a, b) = (*x == Element::T, *y == Element::T);
                let r = match connective {
                    Connective::Meet => a && b,
                    Connective::Join => a || b,
                    Connective::Impl => !a || b,
                };
                if r {
                    Element::T
                } else {
                    Element::F
                }
            }
            HeytingAlgebra::Product(fs) => match (x, y) {
                (Element::Tuple(xs), Element::Tuple(ys)) => Element::Tuple(
                    fs.iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(f, (a, b))| f.op(connective, a, b))
                        .collect(),
                ),
                _ => unreachable!("product elements are tuples"),
            },
            HeytingAlgebra::Gamma(base) => gamma_op(base, connective, x, y),
        }
    }

    pub fn evaluate(&self, assignment: &BTreeMap<String, Element>, a: &Formula) -> Result<Element, AlgebraError> {
        Ok(match a {
            Formula::Var(name) => {
                let x = assignment
                    .get(name)
                    .ok_or_else(|| AlgebraError::Unassigned(name.clone()))?;
                self.check(x)?;
                x.clone()
            }
            Formula::Top => self.top(),
            Formula::Bottom => self.bottom(),
            Formula::And(l, r) => self.op(
                Connective::Meet,
                &self.evaluate(assignment, l)?,
                &self.evaluate(assignment, r)?,
            ),
            Formula::Or(l, r) => self.op(
                Connective::Join,
                &self.evaluate(assignment, l)?,
                &self.evaluate(assignment, r)?,
            ),
            Formula::Imp(l, r) => self.op(
                Connective::Impl,
                &self.evaluate(assignment, l)?,
                &self.evaluate(assignment, r)?,
            ),
        })
    }
}

// The Γ(H) tables. Rows and columns are: a non-top old element, the co-atom
// `*`, and top. Old-by-old cells reduce to H's own operation, except join,
// which passes through α.
fn gamma_op(base: &HeytingAlgebra, connective: Connective, x: &Element, y: &Element) -> Element {
    let top = || Element::Old(Box::new(base.top()));
    match (x, y) {
        (Element::Old(a), Element::Old(b)) => match connective {
            Connective::Meet | Connective::Impl => Element::Old(Box::new(base.op(connective, a, b))),
            Connective::Join => {
                if base.is_top(a) || base.is_top(b) {
                    top()
                } else {
                    base.alpha_unchecked(&base.op(Connective::Join, a, b))
                }
            }
        },
        (Element::Star, Element::Star) => match connective {
            Connective::Meet | Connective::Join => Element::Star,
            Connective::Impl => top(),
        },
        (Element::Old(a), Element::Star) => {
            let a_top = base.is_top(a);
            match connective {
                Connective::Meet => {
                    if a_top {
                        Element::Star
                    } else {
                        x.clone()
                    }
                }
                Connective::Join => {
                    if a_top {
                        top()
                    } else {
                        Element::Star
                    }
                }
                Connective::Impl => {
                    if a_top {
                        Element::Star
                    } else {
                        top()
                    }
                }
            }
        }
        (Element::Star, Element::Old(b)) => {
            let b_top = base.is_top(b);
            match connective {
                Connective::Meet => {
                    if b_top {
                        Element::Star
                    } else {
                        y.clone()
                    }
                }
                Connective::Join => {
                    if b_top {
                        top()
                    } else {
                        Element::Star
                    }
                }
                Connective::Impl => y.clone(),
            }
        }
        _ => unreachable!("Γ elements are old(..) or *"),
    }
}

/// An assignment of algebra elements to variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    algebra: HeytingAlgebra,
    assignment: BTreeMap<String, Element>,
}

impl Interpretation {
    pub fn new(
        algebra: HeytingAlgebra,
        assignment: BTreeMap<String, Element>,
    ) -> Result<Interpretation, AlgebraError> {
        for x in assignment.values() {
            algebra.check(x)?;
        }
        Ok(Interpretation {
            algebra,
            assignment,
        })
    }

    pub fn algebra(&self) -> &HeytingAlgebra {
        &self.algebra
    }

    pub fn assignment(&self) -> &BTreeMap<String, Element> {
        &self.assignment
    }

    pub fn get(&self, var: &str) -> Option<&Element> {
        self.assignment.get(var)
    }

    pub fn set(&mut self, var: impl Into<String>, x: Element) -> Result<(), AlgebraError> {
        self.algebra.check(&x)?;
        self.assignment.insert(var.into(), x);
        Ok(())
    }

    /// `v_I(a)`.
    pub fn evaluate(&self, a: &Formula) -> Result<Element, AlgebraError> {
        self.algebra.evaluate(&self.assignment, a)
    }

    pub fn satisfies(&self, a: &Formula) -> Result<bool, AlgebraError> {
        Ok(self.algebra.is_top(&self.evaluate(a)?))
    }

    /// Keeps only the listed variables, assigning bottom to any that were missing.
    pub fn restricted_to<'a, I: IntoIterator<Item = &'a String>>(&self, vars: I) -> Interpretation {
        let assignment = vars
            .into_iter()
            .map(|v| {
                let x = self
                    .assignment
                    .get(v)
                    .cloned()
                    .unwrap_or_else(|| self.algebra.bottom());
                (v.clone(), x)
            })
            .collect();
        Interpretation {
            algebra: self.algebra.clone(),
            assignment,
        }
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(v, x)| format!("{v}={x}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn old(x: Element) -> Element {
        Element::Old(Box::new(x))
    }

    fn tuple(xs: &[Element]) -> Element {
        Element::Tuple(xs.to_vec())
    }

    fn gamma_b2() -> HeytingAlgebra {
        HeytingAlgebra::gamma(HeytingAlgebra::Two.power(2))
    }

    #[test]
    fn jaskowski_shapes_and_cardinalities() {
        assert_eq!(jaskowski(0), HeytingAlgebra::Two);
        assert_eq!(
            jaskowski(1),
            HeytingAlgebra::gamma(HeytingAlgebra::Product(vec![HeytingAlgebra::Two]))
        );
        let cards: Vec<BigUint> = (0..4).map(|k| jaskowski(k).cardinality()).collect();
        assert_eq!(cards, [2u32, 3, 10, 1001].map(BigUint::from).to_vec());
        assert_eq!(
            jaskowski(4).cardinality(),
            BigUint::from(1001u64.pow(4) + 1)
        );
    }

    #[test]
    fn alpha_fixes_non_top_and_sends_top_to_star() {
        let b = HeytingAlgebra::Two;
        assert_eq!(b.alpha(&Element::F).unwrap(), old(Element::F));
        assert_eq!(b.alpha(&Element::T).unwrap(), Element::Star);
        let b2 = b.power(2);
        assert_eq!(b2.alpha(&tuple(&[Element::T, Element::T])).unwrap(), Element::Star);
        assert!(b2.alpha(&Element::T).is_err());
    }

    #[test]
    fn gamma_table_cells() {
        let j1 = jaskowski(1);
        let f = old(tuple(&[Element::F]));
        let t = j1.top();
        assert_eq!(j1.implies(&Element::Star, &f).unwrap(), f);
        assert_eq!(j1.implies(&f, &Element::Star).unwrap(), t);
        assert_eq!(j1.implies(&t, &Element::Star).unwrap(), Element::Star);
        assert_eq!(j1.meet(&Element::Star, &Element::Star).unwrap(), Element::Star);
        assert_eq!(j1.meet(&Element::Star, &t).unwrap(), Element::Star);
        assert_eq!(j1.meet(&Element::Star, &f).unwrap(), f);
        assert_eq!(j1.join(&Element::Star, &f).unwrap(), Element::Star);
        assert_eq!(j1.join(&Element::Star, &t).unwrap(), t);
        assert_eq!(j1.implies(&Element::Star, &Element::Star).unwrap(), t);
    }

    #[test]
    fn join_discrepancy_in_gamma_b2() {
        let h = gamma_b2();
        let tf = tuple(&[Element::T, Element::F]);
        let ft = tuple(&[Element::F, Element::T]);
        assert_eq!(h.join(&old(tf.clone()), &old(ft.clone())).unwrap(), Element::Star);
        let b2 = HeytingAlgebra::Two.power(2);
        assert_eq!(b2.join(&tf, &ft).unwrap(), b2.top());
    }

    #[test]
    fn order_puts_star_just_below_top() {
        let j1 = jaskowski(1);
        let f = old(tuple(&[Element::F]));
        assert!(HeytingAlgebra::Two.leq(&Element::F, &Element::T).unwrap());
        assert!(j1.leq(&f, &Element::Star).unwrap());
        assert!(!j1.leq(&Element::Star, &f).unwrap());
        assert!(j1.leq(&Element::Star, &j1.top()).unwrap());
    }

    #[test]
    fn malformed_elements_rejected() {
        let j1 = jaskowski(1);
        assert!(j1.meet(&Element::F, &Element::Star).is_err());
        assert!(HeytingAlgebra::Two.join(&Element::Star, &Element::T).is_err());
        let b2 = HeytingAlgebra::Two.power(2);
        assert!(b2.contains(&tuple(&[Element::F, Element::T])));
        assert!(!b2.contains(&tuple(&[Element::F])));
        assert!(HeytingAlgebra::product(vec![]).is_err());
    }

    #[test]
    fn evaluate_peirce_in_j1() {
        let j1 = jaskowski(1);
        let peirce = parse("((P -> Q) -> P) -> P").unwrap();
        let i = Interpretation::new(
            j1.clone(),
            BTreeMap::from([
                ("P".to_string(), Element::Star),
                ("Q".to_string(), old(tuple(&[Element::F]))),
            ]),
        )
        .unwrap();
        assert_eq!(i.evaluate(&peirce).unwrap(), Element::Star);
        assert_eq!(i.evaluate(&Formula::Top).unwrap(), j1.top());
        assert!(!i.satisfies(&peirce).unwrap());
    }

    #[test]
    fn evaluate_prelinearity_in_gamma_b2() {
        let h = gamma_b2();
        let f = parse("(P -> Q) | (Q -> P)").unwrap();
        let i = Interpretation::new(
            h,
            BTreeMap::from([
                ("P".to_string(), old(tuple(&[Element::T, Element::F]))),
                ("Q".to_string(), old(tuple(&[Element::F, Element::T]))),
            ]),
        )
        .unwrap();
        assert_eq!(i.evaluate(&f).unwrap(), Element::Star);
    }

    #[test]
    fn evaluate_reports_unassigned() {
        let i = Interpretation::new(HeytingAlgebra::Two, BTreeMap::new()).unwrap();
        assert_eq!(
            i.evaluate(&Formula::var("P")),
            Err(AlgebraError::Unassigned("P".into()))
        );
    }

    #[test]
    fn interpretation_rejects_foreign_elements() {
        let bad = BTreeMap::from([("P".to_string(), Element::Star)]);
        assert!(Interpretation::new(HeytingAlgebra::Two, bad).is_err());
    }
}
