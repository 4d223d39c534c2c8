//! Independent provability check by backward search in a contraction-free
//! sequent calculus (G4ip / LJT).
//!
//! Shares nothing with the normal-form pipeline beyond the [`Formula`] type;
//! it exists to cross-check [`crate::decide`]. Answers yes/no only.

use std::collections::{BTreeSet, HashMap};

use crate::formula::Formula;

/// Whether `a` is provable in intuitionistic propositional logic.
pub fn g4ip_provable(a: &Formula) -> bool {
    Search::default().prove(Vec::new(), a.clone())
}

/// Whether `antecedents ⊢ succedent` is derivable.
pub fn g4ip_sequent(antecedents: &[Formula], succedent: &Formula) -> bool {
    Search::default().prove(antecedents.to_vec(), succedent.clone())
}

#[derive(Default)]
struct Search {
    memo: HashMap<(Vec<Formula>, Formula), bool>,
}

/// A context after all invertible left rules have been applied.
struct Saturated {
    atoms: BTreeSet<String>,
    /// `P ⇒ B` with `P` not among the atoms.
    atom_imps: Vec<(String, Formula)>,
    /// `(C ⇒ D) ⇒ B`.
    imp_imps: Vec<(Formula, Formula, Formula)>,
}

impl Saturated {
    fn formulas(&self) -> Vec<Formula> {
        self.without_imp_imp(usize::MAX)
    }

    fn without_imp_imp(&self, skip: usize) -> Vec<Formula> {
        let mut out: Vec<Formula> = self.atoms.iter().map(Formula::var).collect();
        out.extend(
            self.atom_imps
                .iter()
                .map(|(p, b)| Formula::imp(Formula::var(p), b.clone())),
        );
        out.extend(
            self.imp_imps
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, (c, d, b))| Formula::imp(Formula::imp(c.clone(), d.clone()), b.clone())),
        );
        out
    }
}

enum LeftResult {
    Closed,
    Branch(Formula, Formula, Vec<Formula>),
    Open(Saturated),
}

fn saturate(mut work: Vec<Formula>) -> LeftResult {
    let mut sat = Saturated {
        atoms: BTreeSet::new(),
        atom_imps: Vec::new(),
        imp_imps: Vec::new(),
    };
    loop {
        while let Some(f) = work.pop() {
            match f {
                Formula::Bottom => return LeftResult::Closed,
                Formula::Top => {}
                Formula::Var(p) => {
                    sat.atoms.insert(p);
                }
                Formula::And(a, b) => {
                    work.push(*a);
                    work.push(*b);
                }
                Formula::Or(a, b) => {
                    let mut rest = work;
                    rest.extend(sat.formulas());
                    return LeftResult::Branch(*a, *b, rest);
                }
                Formula::Imp(a, b) => match *a {
                    Formula::Top => work.push(*b),
                    Formula::Bottom => {}
                    Formula::Var(p) => sat.atom_imps.push((p, *b)),
                    Formula::And(c, d) => work.push(Formula::imp(*c, Formula::imp(*d, *b))),
                    Formula::Or(c, d) => {
                        work.push(Formula::imp(*c, (*b).clone()));
                        work.push(Formula::imp(*d, *b));
                    }
                    Formula::Imp(c, d) => sat.imp_imps.push((*c, *d, *b)),
                },
            }
        }
        // modus ponens on atoms
        let (fire, keep): (Vec<_>, Vec<_>) = std::mem::take(&mut sat.atom_imps)
            .into_iter()
            .partition(|(p, _)| sat.atoms.contains(p));
        sat.atom_imps = keep;
        if fire.is_empty() {
            return LeftResult::Open(sat);
        }
        work.extend(fire.into_iter().map(|(_, b)| b));
    }
}

impl Search {
    fn prove(&mut self, ctx: Vec<Formula>, goal: Formula) -> bool {
        let sat = match saturate(ctx) {
            LeftResult::Closed => return true,
            LeftResult::Branch(a, b, rest) => {
                let mut left = rest.clone();
                left.push(a);
                let mut right = rest;
                right.push(b);
                return self.prove(left, goal.clone()) && self.prove(right, goal);
            }
            LeftResult::Open(sat) => sat,
        };

        match goal {
            Formula::Top => return true,
            Formula::Var(ref p) if sat.atoms.contains(p) => return true,
            Formula::And(a, b) => {
                let ctx = sat.formulas();
                return self.prove(ctx.clone(), *a) && self.prove(ctx, *b);
            }
            Formula::Imp(a, b) => {
                let mut ctx = sat.formulas();
                ctx.push(*a);
                return self.prove(ctx, *b);
            }
            _ => {}
        }

        let mut key_ctx = sat.formulas();
        key_ctx.sort();
        let key = (key_ctx, goal.clone());
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let result = self.search_non_invertible(&sat, &goal);
        self.memo.insert(key, result);
        result
    }

    fn search_non_invertible(&mut self, sat: &Saturated, goal: &Formula) -> bool {
        if let Formula::Or(a, b) = goal {
            let ctx = sat.formulas();
            if self.prove(ctx.clone(), (**a).clone()) || self.prove(ctx, (**b).clone()) {
                return true;
            }
        }
        for (i, (c, d, b)) in sat.imp_imps.iter().enumerate() {
            let rest = sat.without_imp_imp(i);
            let mut first = rest.clone();
            first.push(Formula::imp(d.clone(), b.clone()));
            if !self.prove(first, Formula::imp(c.clone(), d.clone())) {
                continue;
            }
            let mut second = rest;
            second.push(b.clone());
            if self.prove(second, goal.clone()) {
                return true;
            }
        }
        false
    }
}
