//! Formula and goal generators shared by the integration tests.
#![allow(dead_code)]

use jaskowski::formula::{Atom, Formula};
use jaskowski::normalize::{classify_basic, BasicFormula, RegularFormula};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn var_names(n: usize) -> Vec<String> {
    ["P", "Q", "R", "S", "T", "U"][..n].iter().map(|s| s.to_string()).collect()
}

/// Every formula over `atoms` with exactly `n` binary connectives.
pub fn formulas_with(atoms: &[Formula], n: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![atoms.to_vec()];
    for size in 1..=n {
        let mut out = Vec::new();
        for left in 0..size {
            let right = size - 1 - left;
            for a in &by_size[left] {
                for b in &by_size[right] {
                    out.push(Formula::and(a.clone(), b.clone()));
                    out.push(Formula::or(a.clone(), b.clone()));
                    out.push(Formula::imp(a.clone(), b.clone()));
                }
            }
        }
        by_size.push(out);
    }
    by_size.swap_remove(n)
}

/// Every formula over `vars`, `⊤` and `⊥` with at most `max` connectives.
pub fn exhaustive_formulas(vars: usize, max: usize) -> Vec<Formula> {
    let mut atoms: Vec<Formula> = var_names(vars).into_iter().map(Formula::Var).collect();
    atoms.push(Formula::Top);
    atoms.push(Formula::Bottom);
    (0..=max).flat_map(|n| formulas_with(&atoms, n)).collect()
}

/// A random formula of depth at most `depth` over the first `vars` variables.
pub fn random_formula(rng: &mut impl Rng, vars: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            _ => Formula::var(var_names(vars).swap_remove(rng.gen_range(0..vars))),
        };
    }
    let a = random_formula(rng, vars, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::and(a, random_formula(rng, vars, depth - 1)),
        1 => Formula::or(a, random_formula(rng, vars, depth - 1)),
        2 => Formula::imp(a, random_formula(rng, vars, depth - 1)),
        _ => Formula::not(a),
    }
}

/// Every basic formula over the given variables.
pub fn basic_formulas(vars: &[String]) -> Vec<BasicFormula> {
    let v = |s: &String| Formula::var(s);
    let mut out = Vec::new();
    for p in vars {
        out.push(v(p));
        out.push(Formula::not(v(p)));
        for q in vars {
            out.push(Formula::imp(v(p), v(q)));
            out.push(Formula::imp(v(p), Formula::not(v(q))));
            out.push(Formula::imp(Formula::not(v(p)), v(q)));
            for r in vars {
                out.push(Formula::imp(v(p), Formula::and(v(q), v(r))));
                out.push(Formula::imp(v(p), Formula::or(v(q), v(r))));
                out.push(Formula::imp(v(p), Formula::imp(v(q), v(r))));
                out.push(Formula::imp(Formula::and(v(p), v(q)), v(r)));
                out.push(Formula::imp(Formula::or(v(p), v(q)), v(r)));
                out.push(Formula::imp(Formula::imp(v(p), v(q)), v(r)));
            }
        }
    }
    out.iter()
        .map(|f| classify_basic(f).expect("basic by construction"))
        .collect()
}

pub fn succedents(vars: &[String]) -> Vec<Atom> {
    let mut out: Vec<Atom> = vars.iter().cloned().map(Atom::Var).collect();
    out.push(Atom::Bottom);
    out
}

/// Regular goals whose context is a `size`-subset of `basics`.
pub fn goals_of_size(basics: &[BasicFormula], size: usize, succ: &[Atom], out: &mut Vec<RegularFormula>) {
    fn rec(
        basics: &[BasicFormula],
        start: usize,
        left: usize,
        chosen: &mut Vec<BasicFormula>,
        succ: &[Atom],
        out: &mut Vec<RegularFormula>,
    ) {
        if left == 0 {
            for s in succ {
                out.push(RegularFormula::new(chosen.iter().cloned(), s.clone()));
            }
            return;
        }
        for i in start..basics.len() {
            chosen.push(basics[i].clone());
            rec(basics, i + 1, left - 1, chosen, succ, out);
            chosen.pop();
        }
    }
    rec(basics, 0, size, &mut Vec::new(), succ, out);
}

/// A random regular goal with `min..=max` conjuncts and degree at most `max_degree`.
pub fn random_goal(
    rng: &mut impl Rng,
    basics: &[BasicFormula],
    succ: &[Atom],
    min: usize,
    max: usize,
    max_degree: usize,
) -> RegularFormula {
    loop {
        let n = rng.gen_range(min..=max);
        let context: Vec<BasicFormula> = basics.choose_multiple(rng, n).cloned().collect();
        let goal = RegularFormula::new(context, succ.choose(rng).expect("nonempty").clone());
        if goal.degree() <= max_degree {
            return goal;
        }
    }
}
