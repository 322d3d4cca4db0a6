//! Ring contexts: variable names, grading, and monomial order.

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiGrading};

/// The ambient polynomial ring over the rationals: an ordered list of
/// variable names, a multigrading, and a monomial order.
#[derive(Debug, Clone, PartialEq)]
pub struct RingContext {
    vars: Vec<String>,
    grading: MultiGrading,
    order: MonomialOrder,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new(
        vars: Vec<String>,
        grading: MultiGrading,
        order: MonomialOrder,
    ) -> Result<RingContext> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for v in &vars {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if grading.nvars() != vars.len() {
            return Err(Error::InvalidRing(
                "grading arity does not match variable count".into(),
            ));
        }
        if let MonomialOrder::Weighted { weights, .. } = &order {
            if weights.len() != vars.len() || weights.iter().any(|&w| w <= 0) {
                return Err(Error::InvalidRing(
                    "weight vector must be positive with one weight per variable".into(),
                ));
            }
        }
        Ok(RingContext {
            vars,
            grading,
            order,
        })
    }

    /// A standard-graded grevlex ring with the given variable names.
    pub fn standard(vars: &[&str]) -> Result<RingContext> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let n = vars.len();
        RingContext::new(vars, MultiGrading::standard(n), MonomialOrder::Grevlex)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn grading(&self) -> &MultiGrading {
        &self.grading
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same ring with a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingContext> {
        RingContext::new(self.vars.clone(), self.grading.clone(), order)
    }

    /// Same variables with a different grading.
    pub fn with_grading(&self, grading: MultiGrading) -> Result<RingContext> {
        RingContext::new(self.vars.clone(), grading, self.order.clone())
    }
}
