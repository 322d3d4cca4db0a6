//! Monomial orders.

use crate::poly::Monomial;
use std::cmp::Ordering;

/// A total order on monomials, compatible with multiplication and with 1 as
/// the minimum element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Pure lexicographic order with the declared variable sequence.
    Lex,
    /// Graded reverse lexicographic: higher total degree wins; ties are
    /// broken by the smaller exponent in the last differing variable,
    /// scanning right to left.
    Grevlex,
    /// Weight-vector order with a tiebreak. The weight vector must have all
    /// positive entries so that 1 stays minimal.
    Weighted {
        weights: Vec<i64>,
        tiebreak: TieBreak,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    Lex,
    Grevlex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "arity mismatch");
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Weighted { weights, tiebreak } => {
                let wa = weighted_degree(a, weights);
                let wb = weighted_degree(b, weights);
                wa.cmp(&wb).then_with(|| match tiebreak {
                    TieBreak::Lex => cmp_lex(a, b),
                    TieBreak::Grevlex => cmp_grevlex(a, b),
                })
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Weighted { .. } => "weighted",
        }
    }
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (ea, eb) in a.exponents().iter().zip(b.exponents()) {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        other => return other,
    }
    for (ea, eb) in a.exponents().iter().zip(b.exponents()).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            // the monomial with the smaller exponent in the last differing
            // variable is the larger one
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn weighted_degree(m: &Monomial, weights: &[i64]) -> i128 {
    m.exponents()
        .iter()
        .zip(weights)
        .map(|(&e, &w)| e as i128 * w as i128)
        .sum()
}
