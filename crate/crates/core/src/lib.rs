//! A decision procedure for intuitionistic propositional logic.
//!
//! Formulas are normalized into regular goals `B1 ∧ ... ∧ Bk ⇒ F` over basic
//! formulas and decided by case analysis on those goals. Every unprovable
//! formula comes back with an explicit refuting interpretation in a finite
//! Heyting algebra built from the two-element algebra by products and the
//! co-atom extension `Γ`, the building blocks of the Jaskowski sequence.

pub mod algebra;
pub mod cli;
pub mod decide;
pub mod formula;
pub mod normalize;
pub mod oracle;
