//! Budgeted materialization: element enumeration, operation tables, the
//! Heyting law check, and brute-force validity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;

use super::{AlgebraError, Connective, Element, HeytingAlgebra};
use crate::formula::Formula;

/// Default cap on enumerated cases for brute-force operations.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

fn within_budget(required: BigUint, budget: u64) -> Result<usize, AlgebraError> {
    match u64::try_from(&required) {
        Ok(n) if n <= budget => Ok(n as usize),
        _ => Err(AlgebraError::BudgetExceeded { required, budget }),
    }
}

/// All elements of `h`: for `Γ(H)` the old elements in `H`'s order followed
/// by `*`; for products, lexicographic in the factors.
pub fn enumerate_elements(h: &HeytingAlgebra, budget: u64) -> Result<Vec<Element>, AlgebraError> {
    within_budget(h.cardinality(), budget)?;
    Ok(elements_of(h))
}

fn elements_of(h: &HeytingAlgebra) -> Vec<Element> {
    match h {
        HeytingAlgebra::Two => vec![Element::F, Element::T],
        HeytingAlgebra::Gamma(base) => {
            let mut out: Vec<Element> = elements_of(base)
                .into_iter()
                .map(|x| Element::Old(Box::new(x)))
                .collect();
            out.push(Element::Star);
            out
        }
        HeytingAlgebra::Product(fs) => {
            let mut acc: Vec<Vec<Element>> = vec![Vec::new()];
            for f in fs {
                let xs = elements_of(f);
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        xs.iter().map(move |x| {
                            let mut p = prefix.clone();
                            p.push(x.clone());
                            p
                        })
                    })
                    .collect();
            }
            acc.into_iter().map(Element::Tuple).collect()
        }
    }
}

/// An algebra with its carrier indexed `0..n` and the three operations
/// tabulated. Tables are public so that tests can patch them.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pub elements: Vec<Element>,
    pub top: usize,
    pub bottom: usize,
    pub meet: Vec<usize>,
    pub join: Vec<usize>,
    pub implies: Vec<usize>,
    index: HashMap<Element, usize>,
}

/// First failing law found by [`FiniteAlgebra::check_laws`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub elements: Vec<Element>,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
        write!(f, "{} fails at ({})", self.law, xs.join(", "))
    }
}

impl FiniteAlgebra {
    /// Tabulates `h`; needs `|h|^2` within `budget`.
    pub fn materialize(h: &HeytingAlgebra, budget: u64) -> Result<FiniteAlgebra, AlgebraError> {
        let card = h.cardinality();
        within_budget(&card * &card, budget)?;
        let elements = elements_of(h);
        let n = elements.len();
        let index: HashMap<Element, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let table = |c: Connective| {
            let mut t = Vec::with_capacity(n * n);
            for x in &elements {
                for y in &elements {
                    t.push(index[&h.op(c, x, y)]);
                }
            }
            t
        };
        Ok(FiniteAlgebra {
            top: index[&h.top()],
            bottom: index[&h.bottom()],
            meet: table(Connective::Meet),
            join: table(Connective::Join),
            implies: table(Connective::Impl),
            elements,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn table(&self, c: Connective) -> &[usize] {
        match c {
            Connective::Meet => &self.meet,
            Connective::Join => &self.join,
            Connective::Impl => &self.implies,
        }
    }

    pub fn table_mut(&mut self, c: Connective) -> &mut Vec<usize> {
        match c {
            Connective::Meet => &mut self.meet,
            Connective::Join => &mut self.join,
            Connective::Impl => &mut self.implies,
        }
    }

    #[inline]
    pub fn op(&self, c: Connective, x: usize, y: usize) -> usize {
        self.table(c)[x * self.len() + y]
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.op(Connective::Meet, x, y) == x
    }

    /// Bounded-lattice laws and residuation over all pairs and triples.
    pub fn check_laws(&self) -> Result<(), LawViolation> {
        let n = self.len();
        let fail = |law: &'static str, xs: &[usize]| LawViolation {
            law,
            elements: xs.iter().map(|&i| self.elements[i].clone()).collect(),
        };
        let meet = |x, y| self.op(Connective::Meet, x, y);
        let join = |x, y| self.op(Connective::Join, x, y);
        let imp = |x, y| self.op(Connective::Impl, x, y);
        for x in 0..n {
            if meet(x, x) != x || join(x, x) != x {
                return Err(fail("idempotence", &[x]));
            }
            if meet(x, self.top) != x || join(x, self.bottom) != x {
                return Err(fail("bounds", &[x]));
            }
            for y in 0..n {
                if meet(x, y) != meet(y, x) || join(x, y) != join(y, x) {
                    return Err(fail("commutativity", &[x, y]));
                }
                if meet(x, join(x, y)) != x || join(x, meet(x, y)) != x {
                    return Err(fail("absorption", &[x, y]));
                }
                for z in 0..n {
                    if meet(x, meet(y, z)) != meet(meet(x, y), z)
                        || join(x, join(y, z)) != join(join(x, y), z)
                    {
                        return Err(fail("associativity", &[x, y, z]));
                    }
                    if self.leq(meet(x, y), z) != self.leq(x, imp(y, z)) {
                        return Err(fail("residuation", &[x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    /// `v_I(a)` with variables given as element indices.
    pub fn evaluate(&self, assignment: &HashMap<&str, usize>, a: &Formula) -> usize {
        match a {
            Formula::Var(name) => assignment[name.as_str()],
            Formula::Top => self.top,
            Formula::Bottom => self.bottom,
            Formula::And(l, r) => {
                self.op(Connective::Meet, self.evaluate(assignment, l), self.evaluate(assignment, r))
            }
            Formula::Or(l, r) => {
                self.op(Connective::Join, self.evaluate(assignment, l), self.evaluate(assignment, r))
            }
            Formula::Imp(l, r) => {
                self.op(Connective::Impl, self.evaluate(assignment, l), self.evaluate(assignment, r))
            }
        }
    }
}

/// Checks the Heyting algebra laws on the operations of `h` exhaustively.
pub fn check_heyting(h: &HeytingAlgebra, budget: u64) -> Result<Result<(), LawViolation>, AlgebraError> {
    within_budget(h.cardinality().pow(3), budget)?;
    let tables = FiniteAlgebra::materialize(h, budget)?;
    Ok(tables.check_laws())
}

/// Brute-force `h ⊨ a`: every assignment of the variables of `a` gives top.
/// Needs `|h|^(#vars)` within `budget`.
pub fn models(h: &HeytingAlgebra, a: &Formula, budget: u64) -> Result<bool, AlgebraError> {
    Ok(find_refutation(h, a, budget)?.is_none())
}

/// First assignment (in enumeration order) under which `a` is not top.
pub fn find_refutation(
    h: &HeytingAlgebra,
    a: &Formula,
    budget: u64,
) -> Result<Option<BTreeMap<String, Element>>, AlgebraError> {
    let vars: Vec<String> = a.variables().into_iter().collect();
    let card = h.cardinality();
    within_budget(card.pow(vars.len() as u32), budget)?;

    let square = &card * &card;
    if u64::try_from(&square).is_ok_and(|n| n <= budget) {
        let tables = FiniteAlgebra::materialize(h, budget)?;
        let n = tables.len();
        let mut digits = vec![0usize; vars.len()];
        loop {
            let assignment: HashMap<&str, usize> =
                vars.iter().map(String::as_str).zip(digits.iter().copied()).collect();
            if tables.evaluate(&assignment, a) != tables.top {
                return Ok(Some(
                    vars.iter()
                        .zip(&digits)
                        .map(|(v, &d)| (v.clone(), tables.elements[d].clone()))
                        .collect(),
                ));
            }
            if !advance(&mut digits, n) {
                return Ok(None);
            }
        }
    }

    // carrier too large to tabulate: structural evaluation
    let elements = elements_of(h);
    let mut digits = vec![0usize; vars.len()];
    loop {
        let assignment: BTreeMap<String, Element> = vars
            .iter()
            .zip(&digits)
            .map(|(v, &d)| (v.clone(), elements[d].clone()))
            .collect();
        if !h.is_top(&h.evaluate(&assignment, a)?) {
            return Ok(Some(assignment));
        }
        if !advance(&mut digits, elements.len()) {
            return Ok(None);
        }
    }
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::jaskowski;
    use crate::formula::parse;

    fn old(x: Element) -> Element {
        Element::Old(Box::new(x))
    }

    #[test]
    fn enumerate_small_algebras() {
        assert_eq!(
            enumerate_elements(&HeytingAlgebra::Two, 10).unwrap(),
            vec![Element::F, Element::T]
        );
        assert_eq!(
            enumerate_elements(&jaskowski(1), 10).unwrap(),
            vec![
                old(Element::Tuple(vec![Element::F])),
                old(Element::Tuple(vec![Element::T])),
                Element::Star
            ]
        );
        let j2 = enumerate_elements(&jaskowski(2), 100).unwrap();
        assert_eq!(j2.len(), 10);
        let distinct: std::collections::HashSet<_> = j2.iter().collect();
        assert_eq!(distinct.len(), 10);
        assert!(j2.iter().all(|x| jaskowski(2).contains(x)));
    }

    #[test]
    fn enumerate_refuses_beyond_budget() {
        assert!(matches!(
            enumerate_elements(&jaskowski(3), 1000),
            Err(AlgebraError::BudgetExceeded { .. })
        ));
        assert!(enumerate_elements(&jaskowski(3), 1001).is_ok());
    }

    #[test]
    fn heyting_laws_hold_on_small_algebras() {
        for h in [HeytingAlgebra::Two, jaskowski(1), jaskowski(2)] {
            assert_eq!(check_heyting(&h, DEFAULT_BUDGET).unwrap(), Ok(()), "{h}");
        }
    }

    #[test]
    fn corrupted_implication_table_is_caught() {
        let j1 = jaskowski(1);
        let mut tables = FiniteAlgebra::materialize(&j1, DEFAULT_BUDGET).unwrap();
        let star = tables.index_of(&Element::Star).unwrap();
        let f = tables.index_of(&j1.bottom()).unwrap();
        let n = tables.len();
        let top = tables.top;
        tables.table_mut(Connective::Impl)[star * n + f] = top;
        let violation = tables.check_laws().unwrap_err();
        assert_eq!(violation.law, "residuation");
        assert!(violation.to_string().contains("residuation"));
    }

    #[test]
    fn brute_force_validity() {
        let budget = DEFAULT_BUDGET;
        assert!(models(&HeytingAlgebra::Two, &parse("P | ~P").unwrap(), budget).unwrap());
        let peirce = parse("((P -> Q) -> P) -> P").unwrap();
        assert!(models(&HeytingAlgebra::Two, &peirce, budget).unwrap());
        assert!(!models(&jaskowski(1), &peirce, budget).unwrap());
        let syllogism = parse("(P | Q) & ~Q -> P").unwrap();
        assert!(models(&jaskowski(1), &syllogism, budget).unwrap());
    }

    #[test]
    fn brute_force_budget() {
        let f = parse("P & Q & R -> P").unwrap();
        assert!(models(&jaskowski(2), &f, 1000).is_ok());
        assert!(matches!(
            models(&jaskowski(2), &f, 999),
            Err(AlgebraError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn structural_path_agrees_with_tables() {
        // J_3 cannot be tabulated under the default budget, so this goes structural
        let f = parse("~~P -> P").unwrap();
        let refutation = find_refutation(&jaskowski(3), &f, DEFAULT_BUDGET).unwrap();
        assert!(refutation.is_some());
        let g = parse("P -> ~~P").unwrap();
        assert!(models(&jaskowski(3), &g, DEFAULT_BUDGET).unwrap());
    }
}
