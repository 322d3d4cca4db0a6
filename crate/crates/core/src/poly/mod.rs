//! Monomials, polynomials, monomial orders, multigradings, and the
//! expression parser.

mod grading;
mod monomial;
mod order;
mod parser;
mod polynomial;
mod ring;

pub use grading::MultiGrading;
pub use monomial::Monomial;
pub use order::{MonomialOrder, TieBreak};
pub use parser::parse_polynomial;
pub use polynomial::{HomogeneousDegree, Polynomial, Term};
pub use ring::RingContext;

use crate::error::{Error, Result};

/// Enumerates every monomial of the given multidegree, in the canonical
/// exponent-vector order.
///
/// The search is bounded by a heft vector `h`: a monomial of multidegree `e`
/// satisfies `exp(v) <= (h·e) / (h·deg v)` for each variable, so the
/// exponent box to scan is finite. Fails when no heft vector exists.
pub fn monomials_of_multidegree(ring: &RingContext, e: &[i64]) -> Result<Vec<Monomial>> {
    let g = ring.grading();
    if e.len() != g.rows() {
        return Err(Error::InvalidInput(format!(
            "multidegree has {} rows, grading has {}",
            e.len(),
            g.rows()
        )));
    }
    let h = g.heft().ok_or(Error::NoHeftVector)?;
    let dot = |d: &[i64]| -> i64 { d.iter().zip(&h).map(|(a, b)| a * b).sum() };
    let he = dot(e);
    if he < 0 {
        return Ok(Vec::new());
    }
    let n = ring.nvars();
    let bounds: Vec<u32> = (0..n)
        .map(|v| {
            let hv = dot(g.degree_of_var(v));
            debug_assert!(hv > 0);
            u32::try_from(he / hv).unwrap_or(u32::MAX)
        })
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    search(g, e, &bounds, &mut exps, 0, &mut out);
    Ok(out)
}

fn search(
    g: &MultiGrading,
    e: &[i64],
    bounds: &[u32],
    exps: &mut Vec<u32>,
    var: usize,
    out: &mut Vec<Monomial>,
) {
    if var == exps.len() {
        let m = Monomial::from_exponents(exps.clone());
        if g.multidegree(&m) == e {
            out.push(m);
        }
        return;
    }
    for k in 0..=bounds[var] {
        exps[var] = k;
        search(g, e, bounds, exps, var + 1, out);
    }
    exps[var] = 0;
}
