//! Maps between algebras: the diagonal into `Γ(H^m)` and injective Heyting
//! homomorphisms into the Jaskowski algebras.

use std::collections::BTreeMap;

use super::{jaskowski, AlgebraError, Element, HeytingAlgebra, Interpretation};

/// `x ↦ old((x, ..., x))` for non-top `x`, top to top, into `Γ(H^m)`.
///
/// This is a Heyting homomorphism exactly when top is join-irreducible in `h`.
pub fn embed_diagonal(h: &HeytingAlgebra, m: usize, x: &Element) -> Result<Element, AlgebraError> {
    h.check(x)?;
    if m == 0 {
        return Err(AlgebraError::EmptyProduct);
    }
    let target = HeytingAlgebra::gamma(h.power(m));
    if h.is_top(x) {
        return Ok(target.top());
    }
    Ok(Element::Old(Box::new(Element::Tuple(vec![x.clone(); m]))))
}

fn gamma_factors(base: &HeytingAlgebra) -> &[HeytingAlgebra] {
    match base {
        HeytingAlgebra::Product(fs) => fs,
        other => std::slice::from_ref(other),
    }
}

/// Smallest `k` such that `h` embeds in `J_k` by [`embed_in_jaskowski`];
/// `None` for bare products, whose top is join-reducible.
pub fn jaskowski_level(h: &HeytingAlgebra) -> Option<usize> {
    match h {
        HeytingAlgebra::Two => Some(0),
        HeytingAlgebra::Gamma(base) => {
            let factors = gamma_factors(base);
            let mut level = factors.len().max(1);
            for f in factors {
                level = level.max(jaskowski_level(f)? + 1);
            }
            Some(level)
        }
        HeytingAlgebra::Product(_) => None,
    }
}

/// Image of `x ∈ h` in `J_k`.
///
/// `B` goes to bottom/top. `Γ(H_1 × ... × H_m)` goes into
/// `J_k = Γ(J_{k-1}^k)` factorwise, the last factor repeated to fill the
/// remaining `k - m` coordinates, and `*` to `*`.
pub fn embed_in_jaskowski(h: &HeytingAlgebra, x: &Element, k: usize) -> Result<Element, AlgebraError> {
    h.check(x)?;
    match jaskowski_level(h) {
        Some(level) if level <= k => Ok(embed_unchecked(h, x, k)),
        _ => Err(AlgebraError::NotEmbeddable(h.to_string())),
    }
}

fn embed_unchecked(h: &HeytingAlgebra, x: &Element, k: usize) -> Element {
    match h {
        HeytingAlgebra::Two => {
            let target = jaskowski(k);
            if *x == Element::T {
                target.top()
            } else {
                target.bottom()
            }
        }
        HeytingAlgebra::Gamma(base) => match x {
            Element::Star => Element::Star,
            Element::Old(inner) => {
                let factors = gamma_factors(base);
                let parts: Vec<&Element> = match (&**base, &**inner) {
                    (HeytingAlgebra::Product(_), Element::Tuple(xs)) => xs.iter().collect(),
                    _ => vec![&**inner],
                };
                let mut out: Vec<Element> = factors
                    .iter()
                    .zip(&parts)
                    .map(|(f, p)| embed_unchecked(f, p, k - 1))
                    .collect();
                let last = out.last().cloned().expect("nonempty product");
                out.resize(k, last);
                Element::Old(Box::new(Element::Tuple(out)))
            }
            _ => unreachable!("checked element"),
        },
        HeytingAlgebra::Product(_) => unreachable!("products have no level"),
    }
}

/// Restates `i` in `J_k`.
pub fn embed_interpretation(i: &Interpretation, k: usize) -> Result<Interpretation, AlgebraError> {
    let assignment: BTreeMap<String, Element> = i
        .assignment()
        .iter()
        .map(|(v, x)| Ok((v.clone(), embed_in_jaskowski(i.algebra(), x, k)?)))
        .collect::<Result<_, AlgebraError>>()?;
    Interpretation::new(jaskowski(k), assignment)
}
