//! Command-line front end.
//!
//! Exit codes: 0 when the formula is provable or the model is a valid
//! counter-model, 1 when it is unprovable or the model is invalid, 2 on
//! usage and parse errors.

use std::collections::BTreeMap;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    embed_interpretation, jaskowski, jaskowski_level, parse_algebra, parse_assignment, AlgebraError,
    FiniteAlgebra, Interpretation, TextError, DEFAULT_BUDGET,
};
use crate::decide::{check, decide, Decision, Refuted, Trace, VerificationFailure};
use crate::formula::{parse, Formula, ParseError};
use crate::normalize::{regularize, GoalError, Measure, RegularFormula};
use crate::oracle::g4ip_provable;

/// Version of the JSON output layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "jaskowski", version, about = "Decide intuitionistic propositional formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide a formula, printing a counter-model if it is unprovable.
    Decide {
        formula: String,
        /// Print the case analysis.
        #[arg(long)]
        trace: bool,
        /// Cross-check the verdict with an independent sequent-calculus prover.
        #[arg(long)]
        oracle: bool,
        /// Also restate the counter-model in a Jaskowski algebra `J_k`.
        #[arg(long)]
        embed: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the reduced form and the regular goal of a formula.
    Normalize {
        formula: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Describe the Jaskowski algebra `J_k`.
    Algebra {
        k: usize,
        /// Print operation tables only if the square of the cardinality is within this bound.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check that an interpretation refutes a formula or a goal `B1, ..., Bk |- F`.
    CheckModel {
        formula: String,
        /// Algebra expression such as `G(P(B))` or `J2`.
        algebra: String,
        /// Assignment such as `P=*,Q=old(f)`.
        assignment: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at column {}: {}", .0.column, .0.message)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Goal(#[from] GoalError),
    #[error(transparent)]
    Text(#[from] TextError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Successful outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Provable, or a valid counter-model.
    Positive,
    /// Unprovable, or not a counter-model.
    Negative,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Positive => 0,
            Outcome::Negative => 1,
        }
    }
}

pub const USAGE_EXIT_CODE: i32 = 2;

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Decide {
            formula,
            trace,
            oracle,
            embed,
            format,
        } => run_decide(&parse(formula)?, *trace, *oracle, *embed, *format, out),
        Command::Normalize { formula, format } => run_normalize(&parse(formula)?, *format, out),
        Command::Algebra { k, budget } => run_algebra(*k, *budget, out),
        Command::CheckModel {
            formula,
            algebra,
            assignment,
        } => run_check_model(formula, algebra, assignment, out),
    }
}

#[derive(Serialize)]
struct Degrees {
    c: usize,
    d: usize,
    v: usize,
    s: usize,
}

impl From<Measure> for Degrees {
    fn from(m: Measure) -> Degrees {
        Degrees {
            c: m.connectives,
            d: m.degree,
            v: m.variables,
            s: m.total(),
        }
    }
}

#[derive(Serialize)]
struct TraceJson {
    case: String,
    goal: String,
    s: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    children: Vec<TraceJson>,
}

impl From<&Trace> for TraceJson {
    fn from(t: &Trace) -> TraceJson {
        TraceJson {
            case: t.step.to_string(),
            goal: t.goal.to_string(),
            s: t.measure,
            children: t.children.iter().map(TraceJson::from).collect(),
        }
    }
}

#[derive(Serialize)]
struct OracleJson {
    provable: bool,
    agrees: bool,
}

#[derive(Serialize)]
struct ModelJson {
    algebra: String,
    assignment: BTreeMap<String, String>,
    value: String,
}

impl ModelJson {
    fn new(i: &Interpretation, value: String) -> ModelJson {
        ModelJson {
            algebra: i.algebra().to_string(),
            assignment: i
                .assignment()
                .iter()
                .map(|(v, x)| (v.clone(), x.to_string()))
                .collect(),
            value,
        }
    }
}

#[derive(Serialize)]
struct DecideJson {
    schema: u32,
    formula: String,
    verdict: &'static str,
    goal: String,
    degrees: Degrees,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    model: Option<ModelJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedded: Option<ModelJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<TraceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleJson>,
}

/// The counter-model restated in `J_k`, `k` at least the goal's degree.
fn embedded(decision: &Decision) -> Result<Option<(usize, Interpretation)>, CliError> {
    let Some(m) = decision.verdict.counter_model() else {
        return Ok(None);
    };
    let d = decision
        .regularization
        .as_ref()
        .map_or(0, |r| r.goal.degree());
    let level = jaskowski_level(m.algebra()).unwrap_or(d);
    let k = d.max(level);
    Ok(Some((k, embed_interpretation(m.interpretation(), k)?)))
}

fn run_decide(
    a: &Formula,
    with_trace: bool,
    with_oracle: bool,
    with_embed: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let decision = decide(a);
    let goal = &decision
        .regularization
        .as_ref()
        .expect("decide records the regularization")
        .goal;
    let provable = decision.verdict.is_provable();
    let oracle = with_oracle.then(|| {
        let p = g4ip_provable(a);
        OracleJson {
            provable: p,
            agrees: p == provable,
        }
    });
    let embedding = if with_embed { embedded(&decision)? } else { None };
    let outcome = if provable {
        Outcome::Positive
    } else {
        Outcome::Negative
    };

    match format {
        Format::Json => {
            let json = DecideJson {
                schema: SCHEMA_VERSION,
                formula: a.to_string(),
                verdict: if provable { "provable" } else { "unprovable" },
                goal: goal.to_string(),
                degrees: goal.measure().into(),
                model: decision
                    .verdict
                    .counter_model()
                    .map(|m| ModelJson::new(m.interpretation(), m.value().to_string())),
                embedded: embedding
                    .as_ref()
                    .map(|(_, i)| -> Result<ModelJson, CliError> {
                        Ok(ModelJson::new(i, i.evaluate(a)?.to_string()))
                    })
                    .transpose()?,
                trace: with_trace.then(|| TraceJson::from(&decision.trace)),
                oracle,
            };
            serde_json::to_writer_pretty(&mut *out, &json)?;
            writeln!(out)?;
        }
        Format::Text => {
            writeln!(out, "{}", if provable { "PROVABLE" } else { "UNPROVABLE" })?;
            if let Some(m) = decision.verdict.counter_model() {
                writeln!(out, "algebra: {}", m.algebra())?;
                writeln!(out, "model: {}", m.interpretation())?;
                writeln!(out, "value: {}", m.value())?;
            }
            let d = Degrees::from(goal.measure());
            writeln!(out, "degrees: c={} d={} v={} s={}", d.c, d.d, d.v, d.s)?;
            if let Some((k, i)) = &embedding {
                writeln!(out, "embedded in J{k}: {}", i)?;
            }
            if let Some(o) = &oracle {
                writeln!(
                    out,
                    "oracle: {} ({})",
                    if o.provable { "provable" } else { "unprovable" },
                    if o.agrees { "agrees" } else { "DISAGREES" }
                )?;
            }
            if with_trace {
                write!(out, "trace:\n{}", decision.trace)?;
            }
        }
    }
    Ok(outcome)
}

#[derive(Serialize)]
struct NormalizeJson {
    schema: u32,
    formula: String,
    reduced: String,
    goal: String,
    degrees: Degrees,
    fresh: BTreeMap<String, String>,
    auxiliary: Vec<String>,
}

fn run_normalize(a: &Formula, format: Format, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let r = regularize(a);
    match format {
        Format::Json => {
            let json = NormalizeJson {
                schema: SCHEMA_VERSION,
                formula: a.to_string(),
                reduced: r.reduced.to_string(),
                goal: r.goal.to_string(),
                degrees: r.goal.measure().into(),
                fresh: r
                    .fresh_variables
                    .iter()
                    .map(|(v, f)| (v.clone(), f.to_string()))
                    .collect(),
                auxiliary: r.auxiliary_variables.clone(),
            };
            serde_json::to_writer_pretty(&mut *out, &json)?;
            writeln!(out)?;
        }
        Format::Text => {
            writeln!(out, "reduced: {}", r.reduced)?;
            writeln!(out, "goal: {}", r.goal)?;
            let d = Degrees::from(r.goal.measure());
            writeln!(out, "degrees: c={} d={} v={} s={}", d.c, d.d, d.v, d.s)?;
            for (v, f) in &r.fresh_variables {
                writeln!(out, "  {v} := {f}")?;
            }
            if !r.auxiliary_variables.is_empty() {
                writeln!(out, "auxiliary: {}", r.auxiliary_variables.join(", "))?;
            }
        }
    }
    Ok(Outcome::Positive)
}

fn write_table(out: &mut dyn Write, name: &str, t: &FiniteAlgebra, table: &[usize]) -> io::Result<()> {
    let labels: Vec<String> = t.elements.iter().map(|x| x.to_string()).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(1);
    writeln!(out, "{name}:")?;
    write!(out, "{:>width$} |", "")?;
    for l in &labels {
        write!(out, " {l:>width$}")?;
    }
    writeln!(out)?;
    for (x, l) in labels.iter().enumerate() {
        write!(out, "{l:>width$} |")?;
        for y in 0..t.len() {
            write!(out, " {:>width$}", labels[table[x * t.len() + y]])?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn run_algebra(k: usize, budget: u64, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let h = jaskowski(k);
    let card = h.cardinality();
    writeln!(out, "J{k} = {h}")?;
    writeln!(out, "cardinality: {card}")?;
    match FiniteAlgebra::materialize(&h, budget) {
        Ok(t) => {
            write_table(out, "meet", &t, &t.meet)?;
            write_table(out, "join", &t, &t.join)?;
            write_table(out, "implies", &t, &t.implies)?;
        }
        Err(AlgebraError::BudgetExceeded { required, budget }) => {
            writeln!(out, "tables omitted: {required} entries exceed the budget of {budget}")?;
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Outcome::Positive)
}

fn run_check_model(formula: &str, algebra: &str, assignment: &str, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let refuted = if formula.contains("|-") {
        Refuted::Goal(RegularFormula::parse(formula)?)
    } else {
        Refuted::Formula(parse(formula)?)
    };
    let h = parse_algebra(algebra)?;
    let i = Interpretation::new(h.clone(), parse_assignment(&h, assignment)?)?;
    match check(&i, &refuted) {
        Ok(value) => {
            writeln!(out, "VALID: {refuted} evaluates to {value} in {h}")?;
            Ok(Outcome::Positive)
        }
        Err(VerificationFailure::Algebra(e)) => Err(e.into()),
        Err(e) => {
            writeln!(out, "INVALID: {e}")?;
            Ok(Outcome::Negative)
        }
    }
}
