use std::fmt;

use crate::normalize::RegularFormula;

/// The case applied at a node of the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// No variable and no nested-implication conjunct: refuted in `B`.
    CaseI,
    /// The variable conjunct is the succedent.
    Closed(String),
    /// Simplifying with the variable produced `⊥`.
    Absurd(String),
    Drop(String),
    Rewrite(String),
    /// Rewrite that also removed the variable itself.
    RewriteDrop(String),
    Split(String),
    /// Nested-implication conjunct replaced by its consequent after its
    /// subgoal was proved.
    CaseIIIa(String),
    /// All subgoals refuted; refutations lifted.
    CaseIIIb,
    /// Goal already decided earlier in the same call.
    Memo,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::CaseI => write!(f, "case i"),
            Step::Closed(p) => write!(f, "case ii: {p} is succedent"),
            Step::Absurd(p) => write!(f, "case ii: {p} absurd"),
            Step::Drop(p) => write!(f, "case ii: drop {p}"),
            Step::Rewrite(p) => write!(f, "case ii: rewrite {p}"),
            Step::RewriteDrop(p) => write!(f, "case ii: rewrite and drop {p}"),
            Step::Split(p) => write!(f, "case ii: split {p}"),
            Step::CaseIIIa(b) => write!(f, "case iii(a): {b}"),
            Step::CaseIIIb => write!(f, "case iii(b)"),
            Step::Memo => write!(f, "memo"),
        }
    }
}

/// Tree of decided goals; the measure strictly decreases from each node to
/// its children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub step: Step,
    pub goal: RegularFormula,
    pub measure: usize,
    pub children: Vec<Trace>,
}

impl Trace {
    /// # Panics
    /// If a child's measure is not smaller than the goal's.
    pub fn new(step: Step, goal: &RegularFormula, children: Vec<Trace>) -> Trace {
        let measure = goal.measure().total();
        for child in &children {
            assert!(
                child.measure < measure,
                "measure did not decrease from `{goal}` (s={measure}) to `{}` (s={})",
                child.goal,
                child.measure
            );
        }
        Trace {
            step,
            goal: goal.clone(),
            measure,
            children,
        }
    }

    /// Whether the measure strictly decreases along every edge.
    pub fn is_decreasing(&self) -> bool {
        self.children
            .iter()
            .all(|c| c.measure < self.measure && c.is_decreasing())
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Trace::depth).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Trace::size).sum::<usize>()
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, level: usize) -> fmt::Result {
        writeln!(
            f,
            "{:indent$}[{}] {} s={}",
            "",
            self.step,
            self.goal,
            self.measure,
            indent = 2 * level
        )?;
        for child in &self.children {
            child.write_indented(f, level + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}
