//! Multigradings and heft vectors.
//!
//! A multigrading assigns to each ring variable an integer degree vector of
//! a fixed length `rows`. A heft vector is an integer vector pairing strictly
//! positively with every variable degree; its existence guarantees that each
//! graded piece of the ring is finite-dimensional, which is what the graded
//! enumeration below relies on.

use crate::linalg::{rat, Rat};
use crate::poly::Monomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Integer multigrading: `degrees[v]` is the degree vector of variable `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGrading {
    rows: usize,
    degrees: Vec<Vec<i64>>,
}

impl MultiGrading {
    /// Builds a grading from per-variable degree vectors, all of length `rows`.
    pub fn new(degrees: Vec<Vec<i64>>) -> Self {
        let rows = degrees.first().map_or(1, Vec::len);
        assert!(
            degrees.iter().all(|d| d.len() == rows),
            "all degree vectors must have equal length"
        );
        MultiGrading { rows, degrees }
    }

    /// The standard grading: every variable has degree (1).
    pub fn standard(nvars: usize) -> Self {
        MultiGrading {
            rows: 1,
            degrees: vec![vec![1]; nvars],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree_of_var(&self, v: usize) -> &[i64] {
        &self.degrees[v]
    }

    /// Multidegree of a monomial: the exponent-weighted sum of the variable
    /// degree vectors.
    pub fn multidegree(&self, m: &Monomial) -> Vec<i64> {
        assert_eq!(m.nvars(), self.degrees.len());
        let mut d = vec![0i64; self.rows];
        for (v, &e) in m.exponents().iter().enumerate() {
            for (r, dr) in d.iter_mut().enumerate() {
                *dr += self.degrees[v][r] * e as i64;
            }
        }
        d
    }

    /// Searches for a heft vector `h` with `h · deg(v) > 0` for every
    /// variable. Unit vectors and the all-ones vector are tried first; the
    /// general case runs an exact Fourier–Motzkin feasibility check over the
    /// rationals, scaled to integers.
    pub fn heft(&self) -> Option<Vec<i64>> {
        if self.degrees.is_empty() {
            return Some(vec![1; self.rows.max(1)]);
        }
        let ok = |h: &[i64]| {
            self.degrees.iter().all(|d| {
                d.iter()
                    .zip(h)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum::<i128>()
                    > 0
            })
        };
        for i in 0..self.rows {
            let mut h = vec![0i64; self.rows];
            h[i] = 1;
            if ok(&h) {
                return Some(h);
            }
        }
        let ones = vec![1i64; self.rows];
        if ok(&ones) {
            return Some(ones);
        }
        // h · deg(v) >= 1 for every v is feasible iff strict positivity is
        let constraints: Vec<(Vec<Rat>, Rat)> = self
            .degrees
            .iter()
            .map(|d| (d.iter().map(|&a| rat(a)).collect(), rat(1)))
            .collect();
        let h = fourier_motzkin(constraints, self.rows)?;
        let scaled = scale_to_integers(&h);
        debug_assert!(ok(&scaled));
        Some(scaled)
    }

    /// Grading for a ring extended by an inverse of variable `var`: the new
    /// variable (inserted at `var + 1`) gets the negated degree vector, so
    /// the relation `u * var - 1` stays homogeneous of degree zero.
    pub fn with_inverse_of(&self, var: usize) -> MultiGrading {
        let mut degrees = self.degrees.clone();
        let neg: Vec<i64> = degrees[var].iter().map(|&d| -d).collect();
        degrees.insert(var + 1, neg);
        MultiGrading {
            rows: self.rows,
            degrees,
        }
    }
}

/// Solves the system `c · h >= rhs` (one pair per constraint) by
/// Fourier–Motzkin elimination, producing one exact solution if feasible.
fn fourier_motzkin(constraints: Vec<(Vec<Rat>, Rat)>, nvars: usize) -> Option<Vec<Rat>> {
    if nvars == 0 {
        return if constraints.iter().all(|(_, rhs)| !rhs.is_positive()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let k = nvars - 1;
    // bounds on h_k in terms of the remaining variables:
    //   lower: h_k >= rhs' - c'·h'     upper: h_k <= rhs' - c'·h'
    let mut lowers: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let mut uppers: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let mut rest: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (c, rhs) in constraints {
        let ck = c[k].clone();
        let head: Vec<Rat> = c[..k].to_vec();
        if ck.is_zero() {
            rest.push((head, rhs));
        } else {
            let scaled: Vec<Rat> = head.iter().map(|a| a / &ck).collect();
            let bound = (scaled, rhs / &ck);
            if ck.is_positive() {
                lowers.push(bound);
            } else {
                uppers.push(bound);
            }
        }
    }
    // every (lower, upper) pair induces a constraint on the head variables
    for (cl, rl) in &lowers {
        for (cu, ru) in &uppers {
            let c: Vec<Rat> = cl.iter().zip(cu).map(|(a, b)| a - b).collect();
            rest.push((c, rl - ru));
        }
    }
    let head = fourier_motzkin(rest, k)?;
    let eval = |(c, rhs): &(Vec<Rat>, Rat)| -> Rat {
        let dot: Rat = c.iter().zip(&head).map(|(a, b)| a * b).sum();
        rhs - dot
    };
    let lo = lowers.iter().map(eval).max();
    let hi = uppers.iter().map(eval).min();
    let hk = match (lo, hi) {
        (Some(l), _) => l,
        (None, Some(u)) => u,
        (None, None) => Rat::zero(),
    };
    let mut h = head;
    h.push(hk);
    Some(h)
}

fn scale_to_integers(h: &[Rat]) -> Vec<i64> {
    let mut lcm = BigInt::from(1);
    for x in h {
        lcm = lcm.lcm(x.denom());
    }
    h.iter()
        .map(|x| {
            (x * Rat::from_integer(lcm.clone()))
                .to_integer()
                .to_i64()
                .expect("heft entry out of range")
        })
        .collect()
}
