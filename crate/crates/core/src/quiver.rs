//! Framed three-loop quiver representations and the trace superpotential.
//!
//! A representation with dimension vector `(1, n)` is a triple of `n x n`
//! matrices `X, Y, Z` together with a framing vector `v`. The superpotential
//! is `f(X, Y, Z, v) = tr(X [Y, Z])`; its critical locus consists exactly of
//! the commuting triples, and commuting cyclic triples are the points of the
//! Hilbert scheme of `n` points.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal};
use crate::linalg::{rat, Mat, Rat, RowEchelon};
use crate::poly::Polynomial;
use crate::quotient::{multiplication_matrix, standard_monomials};
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;

/// A framed representation of the three-loop quiver.
#[derive(Debug, Clone, PartialEq)]
pub struct QuiverRep {
    pub n: usize,
    pub x: Mat,
    pub y: Mat,
    pub z: Mat,
    pub v: Vec<Rat>,
}

impl QuiverRep {
    pub fn new(x: Mat, y: Mat, z: Mat, v: Vec<Rat>) -> QuiverRep {
        let n = v.len();
        for m in [&x, &y, &z] {
            assert_eq!((m.rows(), m.cols()), (n, n), "matrix shape mismatch");
        }
        QuiverRep { n, x, y, z, v }
    }

    /// Pseudo-random representation with integer entries in `-9..=9`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> QuiverRep {
        let mat = |rng: &mut R| {
            let mut m = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, rat(rng.gen_range(-9..=9)));
                }
            }
            m
        };
        let x = mat(rng);
        let y = mat(rng);
        let z = mat(rng);
        let v = (0..n).map(|_| rat(rng.gen_range(-9..=9))).collect();
        QuiverRep::new(x, y, z, v)
    }

    pub fn commutes(&self) -> bool {
        self.x.commutator(&self.y).is_zero()
            && self.y.commutator(&self.z).is_zero()
            && self.x.commutator(&self.z).is_zero()
    }
}

/// A one-parameter torus `(t^a, t^b, t^c)` scaling `X, Y, Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusWeights {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl TorusWeights {
    pub const fn new(a: i64, b: i64, c: i64) -> TorusWeights {
        TorusWeights { a, b, c }
    }
}

/// The three torus actions exercised by the verification suite, with the
/// expected semi-invariance weight of the superpotential under each:
/// `(2, 1, -3)` leaves `f` invariant, `(0, 0, 1)` scales it with weight 1,
/// `(1, 1, 0)` with weight 2.
pub fn verification_triples() -> [(TorusWeights, i64); 3] {
    [
        (TorusWeights::new(2, 1, -3), 0),
        (TorusWeights::new(0, 0, 1), 1),
        (TorusWeights::new(1, 1, 0), 2),
    ]
}

/// Multiplication operators on the standard-monomial basis of `S/I`,
/// framed by the class of 1. The resulting triple commutes and is cyclic;
/// both are asserted.
pub fn rep_from_ideal(ideal: &Ideal) -> Result<QuiverRep> {
    let ring = ideal.ring();
    if ring.nvars() != 3 {
        return Err(Error::InvalidInput(
            "quiver representations need a three-variable ring".into(),
        ));
    }
    let gb = buchberger(ideal);
    let qb = standard_monomials(&gb)?;
    let n = qb.colength();
    let var_poly = |v: usize| Polynomial::variable(3, v);
    let x = multiplication_matrix(&qb, &var_poly(0));
    let y = multiplication_matrix(&qb, &var_poly(1));
    let z = multiplication_matrix(&qb, &var_poly(2));
    let mut v = vec![Rat::zero(); n];
    if n > 0 {
        let one = qb
            .index_of(&crate::poly::Monomial::one(3))
            .expect("1 is a standard monomial of a proper ideal");
        v[one] = rat(1);
    }
    let rep = QuiverRep::new(x, y, z, v);
    assert!(rep.commutes(), "multiplication operators must commute");
    assert!(is_cyclic(&rep), "the class of 1 must be a cyclic vector");
    Ok(rep)
}

/// Cyclicity (the stability condition): the span of `v` under repeated
/// application of `X, Y, Z` is the whole space. Words of length below `n`
/// suffice, so the closure loop terminates as soon as nothing new appears.
pub fn is_cyclic(rep: &QuiverRep) -> bool {
    if rep.n == 0 {
        return true;
    }
    let mut span = RowEchelon::new(rep.n);
    if !span.insert(rep.v.clone()) {
        return false; // v = 0
    }
    let mut frontier = vec![rep.v.clone()];
    while span.rank() < rep.n && !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            for m in [&rep.x, &rep.y, &rep.z] {
                let image = m.mul_vec(&w);
                if span.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    span.rank() == rep.n
}

/// The superpotential `tr(X [Y, Z])`.
pub fn superpotential(rep: &QuiverRep) -> Rat {
    if rep.n == 0 {
        return Rat::zero();
    }
    rep.x.mul(&rep.y.commutator(&rep.z)).trace()
}

/// Entry-wise partial derivatives of the superpotential:
/// `(df/dX, df/dY, df/dZ) = ([Y,Z]^T, [Z,X]^T, [X,Y]^T)`, where the `(i,j)`
/// entry of each matrix is the derivative of `f` in the `(i,j)` entry of the
/// corresponding argument. All three vanish iff the triple commutes. The
/// derivative in the framing vector is identically zero and not returned.
pub fn gradient_superpotential(rep: &QuiverRep) -> (Mat, Mat, Mat) {
    (
        rep.y.commutator(&rep.z).transpose(),
        rep.z.commutator(&rep.x).transpose(),
        rep.x.commutator(&rep.y).transpose(),
    )
}

/// Laurent polynomials in one formal variable, used to expand torus-scaled
/// superpotentials exactly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Laurent(BTreeMap<i64, Rat>);

impl Laurent {
    fn monomial(c: Rat, e: i64) -> Laurent {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        Laurent(m)
    }

    fn add_assign(&mut self, other: &Laurent) {
        for (e, c) in &other.0 {
            let entry = self.0.entry(*e).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                self.0.remove(e);
            }
        }
    }

    fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                let term = Laurent::monomial(ca * cb, ea + eb);
                out.add_assign(&term);
            }
        }
        out
    }

    fn neg(&self) -> Laurent {
        Laurent(self.0.iter().map(|(e, c)| (*e, -c.clone())).collect())
    }
}

fn laurent_matrix(m: &Mat, exponent: i64) -> Vec<Vec<Laurent>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| Laurent::monomial(m.at(i, j).clone(), exponent))
                .collect()
        })
        .collect()
}

fn laurent_mat_mul(a: &[Vec<Laurent>], b: &[Vec<Laurent>]) -> Vec<Vec<Laurent>> {
    let n = a.len();
    let mut out = vec![vec![Laurent::default(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for (k, av) in a[i].iter().enumerate() {
                cell.add_assign(&av.mul(&b[k][j]));
            }
        }
    }
    out
}

/// Result of a torus semi-invariance check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusWeightCheck {
    pub holds: bool,
    pub weight: i64,
}

/// Verifies `f(t^a X, t^b Y, t^c Z, v) = t^(a+b+c) f(X, Y, Z, v)` as an
/// exact identity of Laurent polynomials in a formal `t`: the left side is
/// expanded through Laurent-matrix arithmetic, not sampled at values of `t`.
pub fn check_torus_weights(rep: &QuiverRep, w: TorusWeights) -> TorusWeightCheck {
    let weight = w.a + w.b + w.c;
    if rep.n == 0 {
        return TorusWeightCheck {
            holds: true,
            weight,
        };
    }
    let xt = laurent_matrix(&rep.x, w.a);
    let yt = laurent_matrix(&rep.y, w.b);
    let zt = laurent_matrix(&rep.z, w.c);
    let yz = laurent_mat_mul(&yt, &zt);
    let zy = laurent_mat_mul(&zt, &yt);
    let mut comm = yz;
    for (i, row) in comm.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            cell.add_assign(&zy[i][j].neg());
        }
    }
    let prod = laurent_mat_mul(&xt, &comm);
    let mut lhs = Laurent::default();
    for (i, row) in prod.iter().enumerate() {
        lhs.add_assign(&row[i]);
    }
    let rhs = Laurent::monomial(superpotential(rep), weight);
    TorusWeightCheck {
        holds: lhs == rhs,
        weight,
    }
}
