//! Tangent spaces of the Hilbert scheme of points: `dim Hom_S(I, S/I)`.
//!
//! Three independent solvers are provided.
//!
//! * [`hom_dim_graded`] — the bigraded window method. For a homogeneous
//!   ideal with a heft vector, a homogeneous hom of bidegree `d` is a family
//!   of linear maps `I_e -> (S/I)_{e+d}` commuting with multiplication by
//!   each variable; each candidate bidegree yields a finite linear system
//!   whose kernel dimension is the graded piece of Hom. No syzygy modules
//!   are involved.
//! * [`hom_dim_taylor`] — for monomial ideals only: the first syzygies
//!   `(lcm/m_i) e_i - (lcm/m_j) e_j` of the Taylor complex generate all
//!   relations, giving a direct constraint system on generator images.
//! * [`hom_dim_general`] — for arbitrary ideals of finite colength:
//!   generator images over the reduced Gröbner basis, constrained by the
//!   S-pair relations with their tracked division quotients (which generate
//!   the relation module of a Gröbner basis).
//!
//! The module also enumerates the monomial ideals of a given colength in
//! three variables, scans them for the tangent-dimension parity rule, and
//! runs the full verification pipeline for the built-in colength-24
//! counterexample ideal.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, min_gens, normal_form, reduce_with_quotients, Ideal};
use crate::linalg::{Mat, Rat, RowEchelon};
use crate::poly::{
    monomials_of_multidegree, HomogeneousDegree, Monomial, MonomialOrder, MultiGrading, Polynomial,
    RingContext, Term,
};
use crate::quotient::{
    graded_piece, multiplication_matrix, standard_monomials, GradedPiece, QuotientBasis,
};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

/// Dimensions of `Hom(I, S/I)` per bidegree. Zero-dimensional bidegrees are
/// omitted. `torus_row` records which grading row carries the torus weight
/// of a hom (by convention the last row; the weight of a hom of bidegree
/// `d` is `d[torus_row]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHomSummary {
    per_bidegree: BTreeMap<Vec<i64>, usize>,
    total: usize,
    torus_row: usize,
}

impl GradedHomSummary {
    pub fn per_bidegree(&self) -> &BTreeMap<Vec<i64>, usize> {
        &self.per_bidegree
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn torus_row(&self) -> usize {
        self.torus_row
    }
}

/// Sums the per-bidegree dimensions over all bidegrees sharing the value in
/// coordinate `row`.
pub fn weight_marginal(s: &GradedHomSummary, row: usize) -> Result<BTreeMap<i64, usize>> {
    let mut marginal: BTreeMap<i64, usize> = BTreeMap::new();
    for (d, dim) in &s.per_bidegree {
        let Some(&w) = d.get(row) else {
            return Err(Error::InvalidInput(format!(
                "grading row {row} out of range"
            )));
        };
        *marginal.entry(w).or_insert(0) += dim;
    }
    Ok(marginal)
}

/// An element of `Hom(I, S/I)` presented by the images of the ideal's stored
/// generators, each reduced to the standard-monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct HomAssignment {
    pub images: Vec<Polynomial>,
    pub bidegree: Option<Vec<i64>>,
}

// ---------------------------------------------------------------------------
// graded window solver
// ---------------------------------------------------------------------------

struct GradedCtx {
    ideal: Ideal,
    qb: QuotientBasis,
    /// bidegree -> indices of standard monomials of that bidegree
    support: BTreeMap<Vec<i64>, Vec<usize>>,
    minimal: Vec<Polynomial>,
    /// coords of `x_v * w_j` reduced, per variable and standard monomial
    mul_std: Vec<Vec<Vec<Rat>>>,
    pieces: BTreeMap<Vec<i64>, GradedPiece>,
}

/// Unknown-block layout of one candidate bidegree's linear system.
struct Layout {
    /// per source degree `e` in `E_d`: (e, dim I_e, dim (S/I)_{e+d}, offset)
    blocks: Vec<(Vec<i64>, usize, usize, usize)>,
    unknowns: usize,
}

impl Layout {
    fn block(&self, e: &[i64]) -> Option<&(Vec<i64>, usize, usize, usize)> {
        self.blocks.iter().find(|(be, _, _, _)| be == e)
    }
}

impl GradedCtx {
    fn new(ideal: &Ideal) -> Result<GradedCtx> {
        if !ideal.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        let ring = ideal.ring();
        if ring.grading().heft().is_none() {
            return Err(Error::NoHeftVector);
        }
        let gb = buchberger(ideal);
        let qb = standard_monomials(&gb)?;
        let mut support: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (i, d) in qb.bidegrees().iter().enumerate() {
            support.entry(d.clone()).or_default().push(i);
        }
        let minimal = min_gens(ideal)?;
        let n = qb.colength();
        let mut mul_std = Vec::with_capacity(ring.nvars());
        for v in 0..ring.nvars() {
            let xv = Monomial::var(ring.nvars(), v);
            let cols: Vec<Vec<Rat>> = (0..n)
                .map(|j| qb.reduce_coords(&Polynomial::from_monomial(qb.monomials()[j].mul(&xv))))
                .collect();
            mul_std.push(cols);
        }
        Ok(GradedCtx {
            ideal: ideal.clone(),
            qb,
            support,
            minimal,
            mul_std,
            pieces: BTreeMap::new(),
        })
    }

    fn grading(&self) -> &MultiGrading {
        self.ideal.ring().grading()
    }

    fn order(&self) -> &MonomialOrder {
        self.ideal.ring().order()
    }

    /// Candidate hom bidegrees: differences of a support bidegree and a
    /// minimal generator bidegree. Every nonzero graded piece of Hom occurs
    /// among them, because a nonzero hom must move some generator to a
    /// nonzero piece of the quotient.
    fn candidates(&self) -> BTreeSet<Vec<i64>> {
        let grading = self.grading();
        let mut out = BTreeSet::new();
        for g in &self.minimal {
            let Some(HomogeneousDegree::Exact(dg)) = g.homogeneous_degree(grading) else {
                unreachable!("minimal generators are homogeneous");
            };
            for dprime in self.support.keys() {
                out.insert(dprime.iter().zip(&dg).map(|(a, b)| a - b).collect());
            }
        }
        out
    }

    fn piece(&mut self, e: &[i64]) -> Result<&GradedPiece> {
        if !self.pieces.contains_key(e) {
            let p = graded_piece(&self.qb, e)?;
            self.pieces.insert(e.to_vec(), p);
        }
        Ok(&self.pieces[e])
    }

    fn layout(&mut self, d: &[i64]) -> Result<Layout> {
        let degrees: Vec<Vec<i64>> = self.support.keys().cloned().collect();
        let mut blocks = Vec::new();
        let mut offset = 0;
        for dprime in degrees {
            let e: Vec<i64> = dprime.iter().zip(d).map(|(a, b)| a - b).collect();
            let src = self.piece(&e)?.dim();
            let tgt = self.support[&dprime].len();
            if src > 0 && tgt > 0 {
                blocks.push((e, src, tgt, offset));
                offset += src * tgt;
            }
        }
        Ok(Layout {
            blocks,
            unknowns: offset,
        })
    }

    /// Emits all constraint rows of the bidegree-`d` system into `sink`.
    ///
    /// For each variable `v` and each source degree `e` whose image piece
    /// `(S/I)_{e + deg v + d}` is nonzero, every basis element `b` of `I_e`
    /// contributes `phi(x_v b) - x_v phi(b) = 0`; a `phi` value on a piece
    /// outside the layout is zero. Constraints whose value piece vanishes
    /// hold automatically and are skipped.
    fn constraint_rows(
        &mut self,
        d: &[i64],
        layout: &Layout,
        mut sink: impl FnMut(Vec<Rat>),
    ) -> Result<()> {
        let nvars = self.ideal.ring().nvars();
        for v in 0..nvars {
            let deg_v: Vec<i64> = self.grading().degree_of_var(v).to_vec();
            let xv = Monomial::var(nvars, v);
            for (e_tgt, _, tgt_cols, tgt_off) in layout.blocks.clone() {
                // source degree e with e + deg(v) = e_tgt
                let e_src: Vec<i64> = e_tgt.iter().zip(&deg_v).map(|(a, b)| a - b).collect();
                let src_piece = self.piece(&e_src)?.clone();
                if src_piece.dim() == 0 {
                    continue;
                }
                let tgt_piece = self.piece(&e_tgt)?.clone();
                let src_support_deg: Vec<i64> = e_src.iter().zip(d).map(|(a, b)| a + b).collect();
                let tgt_support_deg: Vec<i64> = e_tgt.iter().zip(d).map(|(a, b)| a + b).collect();
                let tgt_slots = self.support[&tgt_support_deg].clone();
                let src_block = layout.block(&e_src).cloned();
                let src_slots = self.support.get(&src_support_deg).cloned();

                for (i, bvec) in src_piece.basis.iter().enumerate() {
                    // express x_v * (i-th basis element of I_{e_src}) in the
                    // basis of I_{e_tgt}
                    let p = src_piece.poly_of(bvec, self.order());
                    let sp = p.mul_monomial(&xv);
                    let mut coords = vec![Rat::zero(); tgt_piece.monos.len()];
                    for t in sp.terms() {
                        let idx = tgt_piece
                            .index_of(&t.mono)
                            .expect("product escaped the graded piece");
                        coords[idx] = t.coef.clone();
                    }
                    let lambda = tgt_piece.in_basis(&coords);

                    for (jp, &tgt_slot) in tgt_slots.iter().enumerate() {
                        let mut row = vec![Rat::zero(); layout.unknowns];
                        let mut nonzero = false;
                        for (k, lam) in lambda.iter().enumerate() {
                            if !lam.is_zero() {
                                row[tgt_off + k * tgt_cols + jp] = lam.clone();
                                nonzero = true;
                            }
                        }
                        if let (Some((_, _, src_cols, src_off)), Some(srcs)) =
                            (&src_block, &src_slots)
                        {
                            for (j, &src_slot) in srcs.iter().enumerate() {
                                let c = &self.mul_std[v][src_slot][tgt_slot];
                                if !c.is_zero() {
                                    row[src_off + i * src_cols + j] -= c;
                                    nonzero = true;
                                }
                            }
                        }
                        if nonzero {
                            sink(row);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn dim_at(&mut self, d: &[i64]) -> Result<usize> {
        let layout = self.layout(d)?;
        if layout.unknowns == 0 {
            return Ok(0);
        }
        let mut ech = RowEchelon::new(layout.unknowns);
        self.constraint_rows(d, &layout, |row| {
            ech.insert(row);
        })?;
        Ok(layout.unknowns - ech.rank())
    }

    /// Kernel basis of the bidegree-`d` system decoded into generator
    /// images over the ideal's stored generators.
    fn basis_at(&mut self, d: &[i64]) -> Result<Vec<HomAssignment>> {
        let layout = self.layout(d)?;
        let gens = self.ideal.generators().to_vec();
        if layout.unknowns == 0 {
            return Ok(Vec::new());
        }
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        self.constraint_rows(d, &layout, |row| rows.push(row))?;
        if rows.is_empty() {
            rows.push(vec![Rat::zero(); layout.unknowns]);
        }
        let kernel = Mat::from_rows(rows).kernel_basis();

        let grading = self.grading().clone();
        let order = self.order().clone();
        let mut out = Vec::new();
        for sol in kernel {
            let mut images = Vec::with_capacity(gens.len());
            for g in &gens {
                let Some(HomogeneousDegree::Exact(eg)) = g.homogeneous_degree(&grading) else {
                    return Err(Error::NonHomogeneous);
                };
                let Some((_, _, cols, off)) = layout.block(&eg).cloned() else {
                    images.push(Polynomial::zero());
                    continue;
                };
                let piece = self.piece(&eg)?.clone();
                let mut coords = vec![Rat::zero(); piece.monos.len()];
                for t in g.terms() {
                    coords[piece.index_of(&t.mono).unwrap()] = t.coef.clone();
                }
                let lambda = piece.in_basis(&coords);
                let value_deg: Vec<i64> = eg.iter().zip(d).map(|(a, b)| a + b).collect();
                let slots = &self.support[&value_deg];
                let mut terms = Vec::new();
                for (k, lam) in lambda.iter().enumerate() {
                    if lam.is_zero() {
                        continue;
                    }
                    for (j, &slot) in slots.iter().enumerate() {
                        let c = lam * &sol[off + k * cols + j];
                        if !c.is_zero() {
                            terms.push(Term {
                                coef: c,
                                mono: self.qb.monomials()[slot].clone(),
                            });
                        }
                    }
                }
                images.push(Polynomial::from_terms(terms, &order));
            }
            out.push(HomAssignment {
                images,
                bidegree: Some(d.to_vec()),
            });
        }
        Ok(out)
    }
}

/// Dimension of `Hom_S(I, S/I)` decomposed by bidegree, for a homogeneous
/// ideal of finite colength whose grading admits a heft vector.
pub fn hom_dim_graded(ideal: &Ideal) -> Result<GradedHomSummary> {
    let mut ctx = GradedCtx::new(ideal)?;
    let mut per_bidegree = BTreeMap::new();
    let mut total = 0;
    for d in ctx.candidates() {
        let dim = ctx.dim_at(&d)?;
        if dim > 0 {
            total += dim;
            per_bidegree.insert(d, dim);
        }
    }
    Ok(GradedHomSummary {
        per_bidegree,
        total,
        torus_row: ideal.ring().grading().rows() - 1,
    })
}

/// Explicit basis of the bidegree-`d` piece of `Hom(I, S/I)`, as images of
/// the ideal's stored generators.
pub fn hom_basis_at(ideal: &Ideal, d: &[i64]) -> Result<Vec<HomAssignment>> {
    GradedCtx::new(ideal)?.basis_at(d)
}

/// Checks that a generator-image assignment extends to an `S`-module map
/// `I -> S/I`: in every relevant bidegree, each linear relation among the
/// monomial multiples of the generators must be satisfied by the
/// corresponding multiples of the images.
pub fn hom_element_check(ideal: &Ideal, a: &HomAssignment) -> Result<bool> {
    if a.images.len() != ideal.generators().len() {
        return Err(Error::InvalidInput(
            "one image per stored generator is required".into(),
        ));
    }
    let ring = ideal.ring();
    let grading = ring.grading();
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let gb = buchberger(ideal);
    let qb = standard_monomials(&gb)?;
    let images: Vec<Polynomial> = a.images.iter().map(|f| normal_form(f, &gb)).collect();

    let gen_degrees: Vec<Vec<i64>> = ideal
        .generators()
        .iter()
        .map(|g| match g.homogeneous_degree(grading) {
            Some(HomogeneousDegree::Exact(d)) => Ok(d),
            _ => Err(Error::NonHomogeneous),
        })
        .collect::<Result<_>>()?;

    // split the assignment into homogeneous pieces of fixed hom bidegree
    let mut per_d: BTreeMap<Vec<i64>, Vec<Polynomial>> = BTreeMap::new();
    for (gi, img) in images.iter().enumerate() {
        for (deg, comp) in img.homogeneous_components(grading, ring.order()) {
            let d: Vec<i64> = deg
                .iter()
                .zip(&gen_degrees[gi])
                .map(|(a, b)| a - b)
                .collect();
            if let Some(expected) = &a.bidegree {
                if &d != expected {
                    return Err(Error::BidegreeMismatch);
                }
            }
            per_d
                .entry(d)
                .or_insert_with(|| vec![Polynomial::zero(); images.len()])[gi] = comp;
        }
    }
    if per_d.is_empty() {
        return Ok(true); // the zero assignment
    }

    let support: BTreeSet<Vec<i64>> = qb.bidegrees().iter().cloned().collect();

    for (d, imgs) in per_d {
        for value_deg in &support {
            // source degree e with (S/I)_{e+d} nonzero; relations in other
            // degrees have zero targets automatically
            let e: Vec<i64> = value_deg.iter().zip(&d).map(|(a, b)| a - b).collect();
            let monos = monomials_of_multidegree(ring, &e)?;
            if monos.is_empty() {
                continue;
            }
            let index: BTreeMap<&Monomial, usize> =
                monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let n = qb.colength();
            let mut plain = RowEchelon::new(monos.len());
            let mut augmented = RowEchelon::new(monos.len() + n);
            for (gi, g) in ideal.generators().iter().enumerate() {
                let diff: Vec<i64> = e.iter().zip(&gen_degrees[gi]).map(|(a, b)| a - b).collect();
                for m in monomials_of_multidegree(ring, &diff)? {
                    let prod = g.mul_monomial(&m);
                    let mut va = vec![Rat::zero(); monos.len()];
                    for t in prod.terms() {
                        va[index[&t.mono]] = t.coef.clone();
                    }
                    let target = qb.reduce_coords(&imgs[gi].mul_monomial(&m));
                    let mut vb = va.clone();
                    vb.extend(target);
                    plain.insert(va);
                    augmented.insert(vb);
                }
            }
            if plain.rank() != augmented.rank() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Taylor-complex solver for monomial ideals
// ---------------------------------------------------------------------------

/// Tangent dimension of a monomial ideal via the Taylor-complex syzygies:
/// unknowns are the generator images, constrained by
/// `(lcm/m_i)·phi(m_i) = (lcm/m_j)·phi(m_j)` for all pairs. Works for any
/// monomial generating set.
pub fn hom_dim_taylor(ideal: &Ideal) -> Result<usize> {
    let mut monos = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        if g.terms().len() != 1 {
            return Err(Error::NonMonomialGenerator);
        }
        monos.push(g.terms()[0].mono.clone());
    }
    let gb = buchberger(ideal);
    let qb = standard_monomials(&gb)?;
    let n = qb.colength();
    let k = monos.len();
    if n == 0 {
        return Ok(0);
    }
    let mut cache: BTreeMap<Monomial, Mat> = BTreeMap::new();
    let mut mul = |mono: &Monomial| -> Mat {
        cache
            .entry(mono.clone())
            .or_insert_with(|| multiplication_matrix(&qb, &Polynomial::from_monomial(mono.clone())))
            .clone()
    };
    let mut ech = RowEchelon::new(k * n);
    for i in 0..k {
        for j in (i + 1)..k {
            let lcm = monos[i].lcm(&monos[j]);
            let a = mul(&monos[i].div(&lcm));
            let b = mul(&monos[j].div(&lcm));
            for r in 0..n {
                let mut row = vec![Rat::zero(); k * n];
                let mut nonzero = false;
                for c in 0..n {
                    let av = a.at(r, c);
                    if !av.is_zero() {
                        row[i * n + c] += av;
                        nonzero = true;
                    }
                    let bv = b.at(r, c);
                    if !bv.is_zero() {
                        row[j * n + c] -= bv;
                        nonzero = true;
                    }
                }
                if nonzero {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(k * n - ech.rank())
}

// ---------------------------------------------------------------------------
// general solver
// ---------------------------------------------------------------------------

/// Tangent dimension of an arbitrary ideal of finite colength, homogeneous
/// or not. Unknowns are the images of the reduced Gröbner basis elements;
/// for each S-pair the division of the S-polynomial is tracked, and the
/// relation `(lcm/lm_i)·e_i - (lcm/lm_j)·e_j - sum_k q_k·e_k` is imposed on
/// the images. These relations generate the full relation module of a
/// Gröbner basis, so the solution space is exactly `Hom_S(I, S/I)`.
pub fn hom_dim_general(ideal: &Ideal) -> Result<usize> {
    let gb = buchberger(ideal);
    let qb = standard_monomials(&gb)?;
    let n = qb.colength();
    let m = gb.elements().len();
    if n == 0 {
        return Ok(0);
    }
    let order = ideal.ring().order().clone();
    let mut cache: BTreeMap<Monomial, Mat> = BTreeMap::new();
    let mut mono_mat = |mono: &Monomial| -> Mat {
        cache
            .entry(mono.clone())
            .or_insert_with(|| multiplication_matrix(&qb, &Polynomial::from_monomial(mono.clone())))
            .clone()
    };

    let mut ech = RowEchelon::new(m * n);
    for i in 0..m {
        for j in (i + 1)..m {
            let li = gb.elements()[i].leading_monomial().unwrap().clone();
            let lj = gb.elements()[j].leading_monomial().unwrap().clone();
            let lcm = li.lcm(&lj);
            let a = mono_mat(&li.div(&lcm));
            let b = mono_mat(&lj.div(&lcm));
            let spair = gb.elements()[i]
                .mul_monomial(&li.div(&lcm))
                .sub(&gb.elements()[j].mul_monomial(&lj.div(&lcm)), &order);
            let (quotients, rem) = reduce_with_quotients(&spair, &gb);
            assert!(rem.is_zero(), "S-pair must reduce to zero over its basis");
            let mut qmats: Vec<Option<Mat>> = vec![None; m];
            for (k, qk) in quotients.iter().enumerate() {
                if qk.is_zero() {
                    continue;
                }
                let mut acc = Mat::zeros(n, n);
                for t in qk.terms() {
                    acc = acc.add(&mono_mat(&t.mono).scale(&t.coef));
                }
                qmats[k] = Some(acc);
            }
            for r in 0..n {
                let mut row = vec![Rat::zero(); m * n];
                let mut nonzero = false;
                for c in 0..n {
                    let av = a.at(r, c);
                    if !av.is_zero() {
                        row[i * n + c] += av;
                        nonzero = true;
                    }
                    let bv = b.at(r, c);
                    if !bv.is_zero() {
                        row[j * n + c] -= bv;
                        nonzero = true;
                    }
                    for (k, qmat) in qmats.iter().enumerate() {
                        if let Some(qm) = qmat {
                            let qv = qm.at(r, c);
                            if !qv.is_zero() {
                                row[k * n + c] -= qv;
                                nonzero = true;
                            }
                        }
                    }
                }
                if nonzero {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(m * n - ech.rank())
}

// ---------------------------------------------------------------------------
// monomial ideal enumeration and parity scan
// ---------------------------------------------------------------------------

type Cell = (u32, u32, u32);

fn addable(cells: &BTreeSet<Cell>, c: Cell) -> bool {
    if cells.contains(&c) {
        return false;
    }
    let (a, b, d) = c;
    (a == 0 || cells.contains(&(a - 1, b, d)))
        && (b == 0 || cells.contains(&(a, b - 1, d)))
        && (d == 0 || cells.contains(&(a, b, d - 1)))
}

/// All finite order ideals of N^3 with exactly `n` cells.
fn downsets(n: usize) -> Vec<BTreeSet<Cell>> {
    let mut level: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
    level.insert([(0, 0, 0)].into_iter().collect());
    for _ in 1..n {
        let mut next: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
        for ds in &level {
            for &(a, b, c) in ds {
                for cand in [(a + 1, b, c), (a, b + 1, c), (a, b, c + 1)] {
                    if addable(ds, cand) {
                        let mut grown = ds.clone();
                        grown.insert(cand);
                        next.insert(grown);
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// The monomial ideal whose staircase is the given order ideal; generators
/// are the minimal monomials outside it.
fn staircase_ideal(ring: &RingContext, cells: &BTreeSet<Cell>) -> Ideal {
    let bound = |axis: fn(&Cell) -> u32| cells.iter().map(axis).max().map_or(0, |m| m + 1);
    let (ba, bb, bc) = (bound(|c| c.0), bound(|c| c.1), bound(|c| c.2));
    let mut gens = Vec::new();
    for a in 0..=ba {
        for b in 0..=bb {
            for c in 0..=bc {
                if addable(cells, (a, b, c)) {
                    gens.push(Polynomial::from_monomial(Monomial::from_exponents(vec![
                        a, b, c,
                    ])));
                }
            }
        }
    }
    Ideal::new(ring.clone(), gens)
}

/// All monomial ideals of colength exactly `n` in three variables
/// (equivalently the plane partitions of `n`), in a deterministic canonical
/// order: lexicographic on the sorted staircase cell lists.
pub fn enumerate_monomial_ideals(n: usize) -> Result<Vec<Ideal>> {
    if n == 0 {
        return Err(Error::InvalidInput("colength must be at least 1".into()));
    }
    let ring = RingContext::standard(&["x", "y", "z"])?;
    Ok(downsets(n)
        .iter()
        .map(|cells| staircase_ideal(&ring, cells))
        .collect())
}

/// One row of a parity scan: a monomial ideal of colength `n` with its
/// tangent dimension computed by both solvers.
#[derive(Debug, Clone)]
pub struct ParityRow {
    pub n: usize,
    pub generators: Vec<String>,
    pub dim_graded: usize,
    pub dim_taylor: usize,
}

impl ParityRow {
    pub fn solvers_agree(&self) -> bool {
        self.dim_graded == self.dim_taylor
    }

    pub fn parity_ok(&self) -> bool {
        self.solvers_agree() && self.dim_graded % 2 == self.n % 2
    }
}

#[derive(Debug, Clone)]
pub struct ParityReport {
    pub max_n: usize,
    /// number of monomial ideals per colength 1..=max_n
    pub counts: Vec<usize>,
    pub rows: Vec<ParityRow>,
}

impl ParityReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(ParityRow::parity_ok)
    }
}

/// Computes the tangent dimension of every monomial ideal of colength up to
/// `n_max` with both the graded solver (standard grading) and the Taylor
/// oracle, recording agreement and the parity of the dimension.
pub fn parity_scan(n_max: usize) -> Result<ParityReport> {
    let mut rows = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=n_max {
        let ideals = enumerate_monomial_ideals(n)?;
        counts.push(ideals.len());
        for ideal in ideals {
            let ring = ideal.ring().clone();
            let generators = ideal
                .generators()
                .iter()
                .map(|g| g.to_text(&ring))
                .collect();
            let dim_graded = hom_dim_graded(&ideal)?.total();
            let dim_taylor = hom_dim_taylor(&ideal)?;
            rows.push(ParityRow {
                n,
                generators,
                dim_graded,
                dim_taylor,
            });
        }
    }
    Ok(ParityReport {
        max_n: n_max,
        counts,
        rows,
    })
}

// ---------------------------------------------------------------------------
// the built-in counterexample pipeline
// ---------------------------------------------------------------------------

/// The bigraded ring `Q[x, y, z]` with variable degrees
/// `(1,2), (2,1), (3,-3)`: the first row is an auxiliary positive grading,
/// the second row carries the torus weights `(2, 1, -3)`.
pub fn counterexample_ring() -> RingContext {
    RingContext::new(
        vec!["x".into(), "y".into(), "z".into()],
        MultiGrading::new(vec![vec![1, 2], vec![2, 1], vec![3, -3]]),
        MonomialOrder::Grevlex,
    )
    .expect("valid ring")
}

/// The ideal `((x^2) + (y, z)^2)^2 + (y^3 - x^3*z)`, built from ideal
/// arithmetic in the bigraded ring.
pub fn counterexample_ideal() -> Ideal {
    counterexample_ideal_with_order(MonomialOrder::Grevlex).expect("valid order")
}

/// Same ideal under a chosen monomial order; every reported quantity is
/// order-independent.
pub fn counterexample_ideal_with_order(order: MonomialOrder) -> Result<Ideal> {
    let ring = counterexample_ring().with_order(order)?;
    let base = Ideal::parse(&ring, &["x^2", "y^2", "y*z", "z^2"]).expect("parse");
    let squared = base.product(&base).expect("same ring");
    let binomial = Ideal::parse(&ring, &["y^3 - x^3*z"]).expect("parse");
    squared.plus(&binomial)
}

/// Outcome of the verification pipeline on one homogeneous ideal.
#[derive(Debug, Clone)]
pub struct VerificationOutcome {
    pub colength: usize,
    pub tangent_total: usize,
    pub weight_marginal: BTreeMap<i64, usize>,
    pub torus_weight0_dim: usize,
    pub parity_violation: bool,
    pub min_gen_count: usize,
    pub summary: GradedHomSummary,
    pub timings_ms: BTreeMap<String, u64>,
}

/// Runs the graded pipeline: minimal generators, colength, graded Hom
/// dimensions, torus-weight marginal. Degenerate inputs (the zero or unit
/// ideal) are rejected.
pub fn verify_pipeline(ideal: &Ideal) -> Result<VerificationOutcome> {
    if ideal.generators().is_empty() {
        return Err(Error::DegenerateIdeal("zero ideal".into()));
    }
    let mut timings = BTreeMap::new();
    let t0 = Instant::now();

    let minimal = min_gens(ideal)?;
    let min_gen_count = minimal.len();
    let reduced = Ideal::new(ideal.ring().clone(), minimal);
    timings.insert("min_gens".into(), t0.elapsed().as_millis() as u64);

    let t1 = Instant::now();
    let gb = buchberger(&reduced);
    timings.insert("groebner".into(), t1.elapsed().as_millis() as u64);

    let t2 = Instant::now();
    let qb = standard_monomials(&gb)?;
    let colength = qb.colength();
    if colength == 0 {
        return Err(Error::DegenerateIdeal("unit ideal".into()));
    }
    timings.insert("quotient".into(), t2.elapsed().as_millis() as u64);

    let t3 = Instant::now();
    let summary = hom_dim_graded(&reduced)?;
    timings.insert("hom_graded".into(), t3.elapsed().as_millis() as u64);

    let marginal = weight_marginal(&summary, summary.torus_row())?;
    let torus_weight0_dim = marginal.get(&0).copied().unwrap_or(0);
    let tangent_total = summary.total();
    let parity_violation = (tangent_total + colength) % 2 == 1;
    timings.insert("total".into(), t0.elapsed().as_millis() as u64);

    Ok(VerificationOutcome {
        colength,
        tangent_total,
        weight_marginal: marginal,
        torus_weight0_dim,
        parity_violation,
        min_gen_count,
        summary,
        timings_ms: timings,
    })
}

/// Runs the pipeline on the built-in counterexample ideal and checks the
/// expected values: colength 24, tangent dimension 99, one-dimensional
/// torus-weight-0 piece, parity violated.
pub fn verify_counterexample() -> Result<VerificationOutcome> {
    let outcome = verify_pipeline(&counterexample_ideal())?;
    let checks: [(&str, i64, i64); 4] = [
        ("colength", 24, outcome.colength as i64),
        ("tangent_total", 99, outcome.tangent_total as i64),
        ("torus_weight0_dim", 1, outcome.torus_weight0_dim as i64),
        ("parity_violation", 1, outcome.parity_violation as i64),
    ];
    for (quantity, expected, got) in checks {
        if expected != got {
            return Err(Error::InvalidInput(format!(
                "verification failed: {quantity} expected {expected}, got {got}"
            )));
        }
    }
    Ok(outcome)
}

/// Colength and tangent dimension of an arbitrary finite-colength ideal,
/// using the graded solver when the ideal is homogeneous with a heft vector
/// and the general solver otherwise.
pub fn tangent_dimension(ideal: &Ideal) -> Result<(usize, usize)> {
    let gb = buchberger(ideal);
    let qb = standard_monomials(&gb)?;
    let graded_possible = ideal.is_homogeneous() && ideal.ring().grading().heft().is_some();
    let dim = if graded_possible {
        hom_dim_graded(ideal)?.total()
    } else {
        hom_dim_general(ideal)?
    };
    Ok((qb.colength(), dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn standard_ring() -> RingContext {
        RingContext::standard(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn taylor_maximal_ideal() {
        let r = standard_ring();
        let i = Ideal::parse(&r, &["x", "y", "z"]).unwrap();
        assert_eq!(hom_dim_taylor(&i).unwrap(), 3);
    }

    #[test]
    fn taylor_colength_two() {
        // S/I = span{1, x}; every pairwise constraint multiplies into the
        // ideal, so all 3*2 unknowns are free
        let r = standard_ring();
        let i = Ideal::parse(&r, &["x^2", "y", "z"]).unwrap();
        assert_eq!(hom_dim_taylor(&i).unwrap(), 6);
    }

    #[test]
    fn taylor_rejects_infinite_colength() {
        let r = standard_ring();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(hom_dim_taylor(&i), Err(Error::InfiniteQuotient));
    }

    #[test]
    fn taylor_rejects_non_monomial() {
        let r = standard_ring();
        let i = Ideal::parse(&r, &["x + y", "y", "z"]).unwrap();
        assert_eq!(hom_dim_taylor(&i), Err(Error::NonMonomialGenerator));
    }

    #[test]
    fn graded_maximal_ideal_bigraded() {
        let ring = counterexample_ring();
        let i = Ideal::parse(&ring, &["x", "y", "z"]).unwrap();
        let s = hom_dim_graded(&i).unwrap();
        assert_eq!(s.total(), 3);
        // homs x->1, y->1, z->1 have bidegrees (-1,-2), (-2,-1), (-3,3)
        let marginal = weight_marginal(&s, 1).unwrap();
        let expected: BTreeMap<i64, usize> = [(-2, 1), (-1, 1), (3, 1)].into_iter().collect();
        assert_eq!(marginal, expected);
        assert_eq!(marginal.get(&0), None);
    }

    #[test]
    fn graded_agrees_with_taylor_small() {
        for n in 1..=3 {
            for ideal in enumerate_monomial_ideals(n).unwrap() {
                let graded = hom_dim_graded(&ideal).unwrap().total();
                let taylor = hom_dim_taylor(&ideal).unwrap();
                assert_eq!(graded, taylor, "mismatch at colength {n}");
            }
        }
    }

    #[test]
    fn general_agrees_on_monomial_ideals() {
        for ideal in enumerate_monomial_ideals(3).unwrap() {
            let general = hom_dim_general(&ideal).unwrap();
            let taylor = hom_dim_taylor(&ideal).unwrap();
            assert_eq!(general, taylor);
        }
    }

    #[test]
    fn graded_and_general_agree_on_random_homogeneous_ideals() {
        // (x,y,z)^3 plus random quadrics is homogeneous with finite
        // colength; the two solvers take entirely different routes
        use rand::SeedableRng;
        let r = standard_ring();
        let cube = {
            let m = Ideal::parse(&r, &["x", "y", "z"]).unwrap();
            m.product(&m).unwrap().product(&m).unwrap()
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(271828);
        for case in 0..5 {
            let mut gens = cube.generators().to_vec();
            for _ in 0..=(case % 2) {
                let q = random_homogeneous_quadric(&r, &mut rng);
                gens.push(q);
            }
            let ideal = Ideal::new(r.clone(), gens);
            let graded = hom_dim_graded(&ideal).unwrap().total();
            let general = hom_dim_general(&ideal).unwrap();
            assert_eq!(graded, general, "case {case}");
        }
    }

    fn random_homogeneous_quadric<R: rand::Rng>(ring: &RingContext, rng: &mut R) -> Polynomial {
        let mut terms = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    if a + b + c == 2 {
                        let coef = crate::linalg::rat(rng.gen_range(-5..=5));
                        terms.push(Term {
                            coef,
                            mono: Monomial::from_exponents(vec![a, b, c]),
                        });
                    }
                }
            }
        }
        Polynomial::from_terms(terms, ring.order())
    }

    #[test]
    fn general_handles_inhomogeneous_complete_intersection() {
        // two reduced points: a smooth point of the Hilbert scheme, so the
        // tangent dimension is 3 * 2
        let r = standard_ring();
        let i = Ideal::parse(&r, &["y", "z", "x^2 - x"]).unwrap();
        assert_eq!(hom_dim_general(&i).unwrap(), 6);
    }

    #[test]
    fn enumeration_counts_match_plane_partitions() {
        let expected = [1usize, 3, 6, 13, 24];
        for (n, want) in expected.iter().enumerate() {
            let got = enumerate_monomial_ideals(n + 1).unwrap().len();
            assert_eq!(got, *want, "colength {}", n + 1);
        }
    }

    #[test]
    fn marginal_row_out_of_range() {
        let ring = counterexample_ring();
        let i = Ideal::parse(&ring, &["x", "y", "z"]).unwrap();
        let s = hom_dim_graded(&i).unwrap();
        assert!(weight_marginal(&s, 2).is_err());
    }

    #[test]
    fn enumeration_rejects_zero() {
        assert!(enumerate_monomial_ideals(0).is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        let ideals = enumerate_monomial_ideals(1).unwrap();
        assert_eq!(ideals.len(), 1);
        assert_eq!(ideals[0].generators().len(), 3);
        let two = enumerate_monomial_ideals(2).unwrap();
        assert_eq!(two.len(), 3);
    }

    #[test]
    fn parity_scan_small() {
        let report = parity_scan(2).unwrap();
        assert_eq!(report.counts, vec![1, 3]);
        assert!(report.all_ok());
        assert_eq!(report.rows[0].dim_graded, 3);
        for row in &report.rows[1..] {
            assert_eq!(row.dim_graded, 6);
        }
    }

    #[test]
    fn hom_element_check_examples() {
        let ring = counterexample_ring();
        let i = Ideal::parse(&ring, &["x", "y", "z"]).unwrap();
        let zero = HomAssignment {
            images: vec![Polynomial::zero(); 3],
            bidegree: None,
        };
        assert!(hom_element_check(&i, &zero).unwrap());
        // x -> 1, y -> 0, z -> 0: all products vanish in the 1-dimensional
        // quotient
        let one = parse_polynomial("1", &ring).unwrap();
        let a = HomAssignment {
            images: vec![one, Polynomial::zero(), Polynomial::zero()],
            bidegree: Some(vec![-1, -2]),
        };
        assert!(hom_element_check(&i, &a).unwrap());
    }

    #[test]
    fn hom_element_check_rejects_non_homs() {
        // for I = (x^2, x y, y^2, z): sending x^2 -> 1 while x y -> 0
        // violates the relation y·(x^2) = x·(x y), since y·1 is nonzero in
        // the quotient
        let r = standard_ring();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2", "z"]).unwrap();
        let one = parse_polynomial("1", &r).unwrap();
        let bad = HomAssignment {
            images: vec![
                one,
                Polynomial::zero(),
                Polynomial::zero(),
                Polynomial::zero(),
            ],
            bidegree: None,
        };
        assert!(!hom_element_check(&i, &bad).unwrap());
    }

    #[test]
    fn graded_basis_elements_pass_the_check() {
        let r = standard_ring();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2", "z"]).unwrap();
        let summary = hom_dim_graded(&i).unwrap();
        let mut seen = 0;
        for d in summary.per_bidegree().keys() {
            for a in hom_basis_at(&i, d).unwrap() {
                assert!(hom_element_check(&i, &a).unwrap());
                seen += 1;
            }
        }
        assert_eq!(seen, summary.total());
        assert_eq!(summary.total(), hom_dim_taylor(&i).unwrap());
    }

    #[test]
    fn pipeline_on_fat_point_respects_parity() {
        // (x, y, z)^2 has colength 4 and an even tangent dimension, so the
        // parity flag stays off
        let r = standard_ring();
        let m = Ideal::parse(&r, &["x", "y", "z"]).unwrap();
        let sq = m.product(&m).unwrap();
        let out = verify_pipeline(&sq).unwrap();
        assert_eq!(out.colength, 4);
        assert_eq!(out.tangent_total % 2, 0);
        assert!(!out.parity_violation);
        assert_eq!(out.tangent_total, hom_dim_taylor(&sq).unwrap());
    }

    #[test]
    fn pipeline_rejects_degenerate_inputs() {
        let r = standard_ring();
        let zero = Ideal::new(r.clone(), vec![]);
        assert!(matches!(
            verify_pipeline(&zero),
            Err(Error::DegenerateIdeal(_))
        ));
        let unit = Ideal::parse(&r, &["1"]).unwrap();
        assert!(matches!(
            verify_pipeline(&unit),
            Err(Error::DegenerateIdeal(_))
        ));
    }

    #[test]
    fn counterexample_generators_expand_correctly() {
        let ideal = counterexample_ideal();
        // 9 distinct monomial products plus the binomial
        assert_eq!(ideal.generators().len(), 10);
        let ring = ideal.ring().clone();
        let y4 = parse_polynomial("y^4", &ring).unwrap();
        assert!(ideal.generators().contains(&y4));
    }

    #[test]
    fn counterexample_redundant_generators() {
        // y^4 = y(y^3 - x^3 z) + x(x^2 y z); y^3 z = z(y^3 - x^3 z) + x(x^2 z^2)
        let ideal = counterexample_ideal();
        let ring = ideal.ring().clone();
        let minimal = min_gens(&ideal).unwrap();
        let texts: Vec<String> = minimal.iter().map(|f| f.to_text(&ring)).collect();
        assert_eq!(minimal.len(), 8, "minimal generators: {texts:?}");
        assert!(!texts.contains(&"y^4".to_string()));
        assert!(!texts.iter().any(|t| t == "y^3*z"));
    }

    #[test]
    fn membership_witness_in_counterexample() {
        // y^3 z = z (y^3 - x^3 z) + x (x^2 z^2)
        let ideal = counterexample_ideal();
        let ring = ideal.ring().clone();
        let f = parse_polynomial("y^3*z", &ring).unwrap();
        assert!(crate::groebner::ideal_member(&f, &ideal));
    }
}
