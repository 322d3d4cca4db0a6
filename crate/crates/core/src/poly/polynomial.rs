//! Multivariate polynomials with exact rational coefficients.
//!
//! A polynomial is a list of terms kept strictly decreasing under the ring's
//! monomial order, with no zero coefficients; the zero polynomial is the
//! empty list. Operations that can disturb the ordering take the order (or
//! the ring) as an argument and restore the canonical form.

use crate::linalg::Rat;
use crate::poly::{Monomial, MonomialOrder, MultiGrading, RingContext};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coef: Rat,
    pub mono: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<Term>,
}

/// Result of a homogeneity check: the zero polynomial is homogeneous of
/// every degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomogeneousDegree {
    Any,
    Exact(Vec<i64>),
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(Rat::one(), nvars)
    }

    pub fn constant(c: Rat, nvars: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term {
                coef: c,
                mono: Monomial::one(nvars),
            }],
        }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Polynomial::from_monomial(Monomial::var(nvars, i))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial {
            terms: vec![Term {
                coef: Rat::one(),
                mono: m,
            }],
        }
    }

    /// Canonicalizes an arbitrary term list: sorts descending, merges equal
    /// monomials, drops zeros.
    pub fn from_terms(mut terms: Vec<Term>, order: &MonomialOrder) -> Self {
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(prev) if prev.mono == t.mono => prev.coef += t.coef,
                _ => {
                    if let Some(prev) = out.last() {
                        if prev.coef.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if let Some(prev) = out.last() {
            if prev.coef.is_zero() {
                out.pop();
            }
        }
        out.retain(|t| !t.coef.is_zero());
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.get(1..).unwrap_or_default().to_vec(),
        }
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|t| t.mono.nvars())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: -t.coef.clone(),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Merge-adds two polynomials sorted under the same order.
    pub fn add(&self, other: &Polynomial, order: &MonomialOrder) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match order.compare(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coef + &b.coef;
                    if !c.is_zero() {
                        out.push(Term {
                            coef: c,
                            mono: a.mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial { terms: out }
    }

    pub fn sub(&self, other: &Polynomial, order: &MonomialOrder) -> Polynomial {
        self.add(&other.neg(), order)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: &t.coef * c,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiplication by a single term preserves the ordering.
    pub fn mul_term(&self, c: &Rat, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: &t.coef * c,
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        self.mul_term(&Rat::one(), m)
    }

    pub fn mul(&self, other: &Polynomial, order: &MonomialOrder) -> Polynomial {
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                acc.push(Term {
                    coef: &a.coef * &b.coef,
                    mono: a.mono.mul(&b.mono),
                });
            }
        }
        Polynomial::from_terms(acc, order)
    }

    pub fn pow(&self, k: u32, order: &MonomialOrder) -> Polynomial {
        match self.nvars() {
            None => {
                if k == 0 {
                    // 0^0 = 1 needs an arity; callers use `Polynomial::one`
                    panic!("pow of the zero polynomial with exponent 0");
                }
                Polynomial::zero()
            }
            Some(n) => {
                let mut acc = Polynomial::one(n);
                for _ in 0..k {
                    acc = acc.mul(self, order);
                }
                acc
            }
        }
    }

    /// Formal partial derivative with respect to variable `var`.
    /// Term-by-term differentiation preserves the ordering.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exponents()[var] > 0)
            .map(|t| {
                let e = t.mono.exponents()[var];
                let mut exps = t.mono.exponents().to_vec();
                exps[var] -= 1;
                Term {
                    coef: &t.coef * Rat::from_integer(e.into()),
                    mono: Monomial::from_exponents(exps),
                }
            })
            .collect();
        Polynomial { terms }
    }

    /// If every term has the same multidegree, returns it; the zero
    /// polynomial is homogeneous of any degree.
    pub fn homogeneous_degree(&self, g: &MultiGrading) -> Option<HomogeneousDegree> {
        let Some(first) = self.terms.first() else {
            return Some(HomogeneousDegree::Any);
        };
        let d = g.multidegree(&first.mono);
        for t in &self.terms[1..] {
            if g.multidegree(&t.mono) != d {
                return None;
            }
        }
        Some(HomogeneousDegree::Exact(d))
    }

    /// The homogeneous components, keyed by multidegree.
    pub fn homogeneous_components(
        &self,
        g: &MultiGrading,
        order: &MonomialOrder,
    ) -> std::collections::BTreeMap<Vec<i64>, Polynomial> {
        let mut parts: std::collections::BTreeMap<Vec<i64>, Vec<Term>> = Default::default();
        for t in &self.terms {
            parts
                .entry(g.multidegree(&t.mono))
                .or_default()
                .push(t.clone());
        }
        parts
            .into_iter()
            .map(|(d, ts)| (d, Polynomial::from_terms(ts, order)))
            .collect()
    }

    /// Evaluates the polynomial at `images`, one polynomial of the target
    /// ring per source variable.
    pub fn substitute(&self, images: &[Polynomial], target: &RingContext) -> Polynomial {
        let order = target.order();
        let mut acc = Polynomial::zero();
        for t in &self.terms {
            assert_eq!(t.mono.nvars(), images.len());
            let mut prod = Polynomial::constant(t.coef.clone(), target.nvars());
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&images[v].pow(e, order), order);
                }
            }
            acc = acc.add(&prod, order);
        }
        acc
    }

    /// Re-embeds into a larger ring; `positions[i]` is the new index of old
    /// variable `i`.
    pub fn embed(&self, target: &RingContext, positions: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coef: t.coef.clone(),
                mono: t.mono.embed(target.nvars(), positions),
            })
            .collect();
        Polynomial::from_terms(terms, target.order())
    }

    /// Renders the polynomial in the grammar accepted by the parser.
    pub fn to_text(&self, ring: &RingContext) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coef.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = t.coef.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || t.mono.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(ring.var_name(v).to_string()),
                    _ => factors.push(format!("{}^{}", ring.var_name(v), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}
