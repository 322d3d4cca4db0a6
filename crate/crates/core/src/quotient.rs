//! Standard monomials, colength, and graded pieces of ideals and quotients.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, GroebnerBasis, Ideal};
use crate::linalg::{Mat, Rat};
use crate::poly::{monomials_of_multidegree, Monomial, MultiGrading, Polynomial};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Safety bound for staircase enumeration.
const MAX_STANDARD_MONOMIALS: usize = 1_000_000;

/// The standard-monomial basis of `S/I`: all monomials outside the
/// leading-term staircase of a Gröbner basis, sorted ascending under the
/// ring's order, together with their multidegrees.
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    gb: GroebnerBasis,
    monomials: Vec<Monomial>,
    bidegrees: Vec<Vec<i64>>,
    index: BTreeMap<Monomial, usize>,
}

impl QuotientBasis {
    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn colength(&self) -> usize {
        self.monomials.len()
    }

    pub fn bidegrees(&self) -> &[Vec<i64>] {
        &self.bidegrees
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a fully reduced polynomial in the standard basis.
    pub fn coords(&self, f: &Polynomial) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.monomials.len()];
        for t in f.terms() {
            let i = self
                .index_of(&t.mono)
                .expect("polynomial is not in normal form");
            v[i] = t.coef.clone();
        }
        v
    }

    /// Coordinates of `normal_form(f)`.
    pub fn reduce_coords(&self, f: &Polynomial) -> Vec<Rat> {
        self.coords(&normal_form(f, &self.gb))
    }

    /// Indices of the standard monomials of one multidegree.
    pub fn indices_of_degree(&self, e: &[i64]) -> Vec<usize> {
        self.bidegrees
            .iter()
            .enumerate()
            .filter(|(_, d)| d.as_slice() == e)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Enumerates the standard monomials of a Gröbner basis.
///
/// Finiteness check: the quotient is finite-dimensional iff for every
/// variable some pure power appears among the leading monomials. The
/// staircase is then explored breadth-first from 1.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<QuotientBasis> {
    let ring = gb.ring();
    let n = ring.nvars();
    let lms: Vec<&Monomial> = gb
        .elements()
        .iter()
        .map(|f| f.leading_monomial().unwrap())
        .collect();
    if lms.iter().any(|lm| lm.is_one()) {
        // unit ideal: the quotient is zero
        return Ok(QuotientBasis {
            gb: gb.clone(),
            monomials: Vec::new(),
            bidegrees: Vec::new(),
            index: BTreeMap::new(),
        });
    }
    for v in 0..n {
        let pure = lms.iter().any(|lm| {
            lm.exponents()
                .iter()
                .enumerate()
                .all(|(w, &e)| if w == v { e > 0 } else { e == 0 })
        });
        if !pure {
            return Err(Error::InfiniteQuotient);
        }
    }

    let reducible = |m: &Monomial| lms.iter().any(|lm| lm.divides(m));
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue: std::collections::VecDeque<Monomial> = [Monomial::one(n)].into();
    while let Some(m) = queue.pop_front() {
        if seen.contains(&m) || reducible(&m) {
            continue;
        }
        if seen.len() >= MAX_STANDARD_MONOMIALS {
            return Err(Error::InfiniteQuotient);
        }
        for v in 0..n {
            queue.push_back(m.mul(&Monomial::var(n, v)));
        }
        seen.insert(m);
    }

    let mut monomials: Vec<Monomial> = seen.into_iter().collect();
    monomials.sort_by(|a, b| ring.order().compare(a, b));
    let grading = ring.grading();
    let bidegrees = monomials.iter().map(|m| grading.multidegree(m)).collect();
    let index = monomials
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    Ok(QuotientBasis {
        gb: gb.clone(),
        monomials,
        bidegrees,
        index,
    })
}

/// The multidegrees of the standard monomials, with multiplicity.
pub fn bidegree_support(qb: &QuotientBasis, grading: &MultiGrading) -> BTreeMap<Vec<i64>, usize> {
    let mut support: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for m in &qb.monomials {
        *support.entry(grading.multidegree(m)).or_insert(0) += 1;
    }
    support
}

/// A graded piece `I_e` in coordinates: the monomial basis of `S_e` and an
/// echelon-normal basis of the subspace cut out by the ideal.
#[derive(Debug, Clone)]
pub(crate) struct GradedPiece {
    /// monomial basis of S_e
    pub monos: Vec<Monomial>,
    /// basis vectors of I_e in `monos` coordinates, kernel normal form
    pub basis: Vec<Vec<Rat>>,
    /// free-column index of each basis vector (its coordinate slot)
    pub free_cols: Vec<usize>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monos.iter().position(|q| q == m)
    }

    /// Expresses a vector of `I_e` (in `monos` coordinates) in the basis.
    /// The echelon normal form makes the coefficients directly readable at
    /// the free columns.
    pub fn in_basis(&self, v: &[Rat]) -> Vec<Rat> {
        let coeffs: Vec<Rat> = self.free_cols.iter().map(|&c| v[c].clone()).collect();
        #[cfg(debug_assertions)]
        {
            let mut check = v.to_vec();
            for (c, b) in coeffs.iter().zip(&self.basis) {
                for (x, y) in check.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
            debug_assert!(
                check.iter().all(Rat::is_zero),
                "vector not in the graded piece"
            );
        }
        coeffs
    }

    pub fn poly_of(
        &self,
        coeffs_in_monos: &[Rat],
        order: &crate::poly::MonomialOrder,
    ) -> Polynomial {
        let terms = self
            .monos
            .iter()
            .zip(coeffs_in_monos)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| crate::poly::Term {
                coef: c.clone(),
                mono: m.clone(),
            })
            .collect();
        Polynomial::from_terms(terms, order)
    }
}

/// Computes `I_e` as the kernel of the normal-form map on the monomial basis
/// of `S_e`. Requires the quotient basis of the same ideal for the target
/// coordinates; the dimension identity `dim I_e = dim S_e - dim (S/I)_e` is
/// asserted as a cross-check.
pub(crate) fn graded_piece(qb: &QuotientBasis, e: &[i64]) -> Result<GradedPiece> {
    let ring = qb.gb.ring();
    let monos = monomials_of_multidegree(ring, e)?;
    let std_of_degree = qb.indices_of_degree(e);
    if monos.is_empty() {
        return Ok(GradedPiece {
            monos,
            basis: Vec::new(),
            free_cols: Vec::new(),
        });
    }
    // rows: standard monomials of degree e; cols: monomials of S_e
    let mut m = Mat::zeros(std_of_degree.len(), monos.len());
    for (j, mono) in monos.iter().enumerate() {
        let nf = normal_form(&Polynomial::from_monomial(mono.clone()), &qb.gb);
        for t in nf.terms() {
            let idx = qb.index_of(&t.mono).expect("normal form not standard");
            let row = std_of_degree
                .iter()
                .position(|&s| s == idx)
                .expect("normal form escaped the graded piece");
            m.set(row, j, t.coef.clone());
        }
    }
    let (basis, free_cols) = m.kernel_basis_with_free_cols();
    assert_eq!(
        basis.len() + std_of_degree.len(),
        monos.len(),
        "graded dimension identity violated"
    );
    Ok(GradedPiece {
        monos,
        basis,
        free_cols,
    })
}

/// Basis of `I ∩ S_e` as polynomials.
pub fn graded_piece_of_ideal(ideal: &Ideal, e: &[i64]) -> Result<Vec<Polynomial>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let gb = buchberger(ideal);
    let qb = standard_monomials(&gb)?;
    let piece = graded_piece(&qb, e)?;
    Ok(piece
        .basis
        .iter()
        .map(|v| piece.poly_of(v, ideal.ring().order()))
        .collect())
}

/// Matrix of multiplication by `f` followed by reduction, acting on the
/// standard-monomial basis of the quotient.
pub fn multiplication_matrix(qb: &QuotientBasis, f: &Polynomial) -> Mat {
    let n = qb.colength();
    let mut m = Mat::zeros(n, n);
    for (j, mono) in qb.monomials().iter().enumerate() {
        let col = qb.reduce_coords(&f.mul_monomial(mono));
        for (i, c) in col.into_iter().enumerate() {
            if !c.is_zero() {
                m.set(i, j, c);
            }
        }
    }
    m
}
