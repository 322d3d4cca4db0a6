//! Buchberger's algorithm, normal forms, reduced Gröbner bases, ideal
//! predicates, minimal generators of homogeneous ideals, and a
//! variable-inversion helper for computations in localized rings.

use crate::error::{Error, Result};
use crate::linalg::{Rat, RowEchelon};
use crate::poly::{
    monomials_of_multidegree, HomogeneousDegree, Monomial, MonomialOrder, Polynomial, RingContext,
    Term,
};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// An ideal of the polynomial ring, given by generators. Zero generators are
/// dropped at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal {
    ring: RingContext,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: RingContext, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens }
    }

    /// Parses each generator expression in the given ring.
    pub fn parse(ring: &RingContext, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| crate::poly::parse_polynomial(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring.clone(), gens))
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Ideal sum: concatenates generators.
    pub fn plus(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        for g in &other.gens {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// Ideal product: all pairwise products of generators, duplicates
    /// removed.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let order = self.ring.order();
        let mut gens: Vec<Polynomial> = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a.mul(b, order);
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// True when every generator is homogeneous for the ring's grading.
    pub fn is_homogeneous(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.homogeneous_degree(self.ring.grading()).is_some())
    }
}

/// A reduced Gröbner basis: monic elements, pairwise non-divisible leading
/// monomials, each element fully reduced against the others, sorted by
/// leading monomial ascending under the ring's order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: RingContext,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }
}

/// Remainder of multivariate division of `f` by the basis. No term of the
/// result is divisible by any leading monomial of the basis; the map
/// `f -> normal_form(f, gb)` is linear and idempotent.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    divide(f, &gb.elements, gb.ring.order(), false).1
}

/// Division with quotient tracking: returns `(q, r)` with
/// `f = sum q[k] * basis[k] + r` and `r` in normal form.
pub fn reduce_with_quotients(f: &Polynomial, gb: &GroebnerBasis) -> (Vec<Polynomial>, Polynomial) {
    divide(f, &gb.elements, gb.ring.order(), true)
}

fn divide(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
    track: bool,
) -> (Vec<Polynomial>, Polynomial) {
    let mut work = f.clone();
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); basis.len()];
    let mut remainder: Vec<Term> = Vec::new();
    while let Some(lt) = work.leading_term() {
        let lt = lt.clone();
        let hit = basis
            .iter()
            .position(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&lt.mono)));
        match hit {
            Some(k) => {
                let g = &basis[k];
                let glt = g.leading_term().unwrap();
                let c = &lt.coef / &glt.coef;
                let m = glt.mono.div(&lt.mono);
                work = work.sub(&g.mul_term(&c, &m), order);
                if track {
                    quotients[k].push(Term { coef: c, mono: m });
                }
            }
            None => {
                remainder.push(lt);
                work = work.tail();
            }
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|ts| Polynomial::from_terms(ts, order))
        .collect();
    (quotients, Polynomial::from_terms(remainder, order))
}

fn make_monic(f: &Polynomial) -> Polynomial {
    match f.leading_term() {
        Some(lt) if !lt.coef.is_one() => f.scale(&lt.coef.recip()),
        _ => f.clone(),
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let lf = f.leading_term().unwrap();
    let lg = g.leading_term().unwrap();
    let lcm = lf.mono.lcm(&lg.mono);
    let a = f.mul_term(&lf.coef.recip(), &lf.mono.div(&lcm));
    let b = g.mul_term(&lg.coef.recip(), &lg.mono.div(&lcm));
    a.sub(&b, order)
}

/// Computes the unique reduced Gröbner basis under the ring's order.
pub fn buchberger(ideal: &Ideal) -> GroebnerBasis {
    buchberger_with(ideal, true)
}

/// Buchberger's algorithm with the coprime and chain criteria optionally
/// disabled; the result is identical either way, only the amount of work
/// differs. Exposed so tests can cross-check the criteria.
pub fn buchberger_with(ideal: &Ideal, use_criteria: bool) -> GroebnerBasis {
    let ring = ideal.ring.clone();
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = ideal.gens.iter().map(make_monic).collect();

    // pending S-pairs (i, j, lcm) with i < j
    let mut pending: Vec<(usize, usize, Monomial)> = Vec::new();
    let push_pairs =
        |pending: &mut Vec<(usize, usize, Monomial)>, basis: &[Polynomial], j: usize| {
            for i in 0..j {
                let lcm = basis[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[j].leading_monomial().unwrap());
                pending.push((i, j, lcm));
            }
        };
    for j in 0..basis.len() {
        push_pairs(&mut pending, &basis, j);
    }

    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first, then smallest (i, j)
        let mut best = 0;
        for k in 1..pending.len() {
            let (bi, bj, blcm) = &pending[best];
            let (ki, kj, klcm) = &pending[k];
            match order.compare(klcm, blcm) {
                std::cmp::Ordering::Less => best = k,
                std::cmp::Ordering::Equal if (ki, kj) < (bi, bj) => best = k,
                _ => {}
            }
        }
        let (i, j, lcm) = pending.swap_remove(best);

        if use_criteria {
            let li = basis[i].leading_monomial().unwrap();
            let lj = basis[j].leading_monomial().unwrap();
            // coprime leading terms: the S-pair reduces to zero
            if li.coprime(lj) {
                continue;
            }
            // chain criterion: some basis element divides the lcm and both
            // pairs with it have already been handled
            let still_pending = |a: usize, b: usize| {
                let (a, b) = (a.min(b), a.max(b));
                pending.iter().any(|&(p, q, _)| (p, q) == (a, b))
            };
            let chained = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].leading_monomial().unwrap().divides(&lcm)
                    && !still_pending(i, k)
                    && !still_pending(j, k)
            });
            if chained {
                continue;
            }
        }

        let s = s_polynomial(&basis[i], &basis[j], &order);
        let (_, r) = divide(&s, &basis, &order, false);
        if !r.is_zero() {
            basis.push(make_monic(&r));
            push_pairs(&mut pending, &basis, basis.len() - 1);
        }
    }

    GroebnerBasis {
        elements: reduce_basis(basis, &order),
        ring,
    }
}

/// Turns a Gröbner basis into the reduced one: minimal leading monomials,
/// fully inter-reduced, monic, sorted ascending by leading monomial.
fn reduce_basis(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut elems: Vec<Polynomial> = basis.into_iter().filter(|f| !f.is_zero()).collect();
    elems.sort_by(|a, b| {
        order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in elems {
        let lm = f.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|g| g.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(f);
        }
    }
    // inter-reduce tails until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let (_, r) = divide(&minimal[i], &others, order, false);
            let r = make_monic(&r);
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal
}

/// Membership test: `f` lies in the ideal iff its normal form vanishes.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> bool {
    normal_form(f, &buchberger(ideal)).is_zero()
}

/// Two ideals of the same ring are equal iff their reduced Gröbner bases
/// coincide element-wise.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    Ok(buchberger(a).elements == buchberger(b).elements)
}

/// Minimal homogeneous generating set, computed degree by degree: in each
/// multidegree a generator is kept iff it is independent of the span of all
/// monomial multiples of the generators kept in lower degrees (and of the
/// ones kept earlier in the same degree).
pub fn min_gens(ideal: &Ideal) -> Result<Vec<Polynomial>> {
    let ring = &ideal.ring;
    let grading = ring.grading();
    let h = grading.heft().ok_or(Error::NoHeftVector)?;
    let hdot = |e: &[i64]| -> i64 { e.iter().zip(&h).map(|(a, b)| a * b).sum() };

    // group generator indices by multidegree, ordered by (h·e, e)
    let mut classes: BTreeMap<(i64, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for (idx, g) in ideal.gens.iter().enumerate() {
        match g.homogeneous_degree(grading) {
            Some(HomogeneousDegree::Exact(e)) => {
                classes.entry((hdot(&e), e)).or_default().push(idx);
            }
            _ => return Err(Error::NonHomogeneous),
        }
    }

    let mut kept: Vec<(Polynomial, Vec<i64>)> = Vec::new();
    let mut out = Vec::new();
    for ((_, e), members) in classes {
        let monos = monomials_of_multidegree(ring, &e)?;
        let index: BTreeMap<&Monomial, usize> =
            monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let coords = |f: &Polynomial| -> Vec<Rat> {
            let mut v = vec![Rat::zero(); monos.len()];
            for t in f.terms() {
                v[index[&t.mono]] = t.coef.clone();
            }
            v
        };
        let mut span = RowEchelon::new(monos.len());
        for (kg, ke) in &kept {
            let diff: Vec<i64> = e.iter().zip(ke).map(|(a, b)| a - b).collect();
            for m in monomials_of_multidegree(ring, &diff)? {
                span.insert(coords(&kg.mul_monomial(&m)));
            }
        }
        for idx in members {
            let g = &ideal.gens[idx];
            if span.insert(coords(g)) {
                kept.push((g.clone(), e.clone()));
                out.push(g.clone());
            }
        }
    }
    Ok(out)
}

/// A ring extension inverting one variable: the fresh variable `u` is
/// inserted right after the inverted one and carries the negated degree
/// vector, and the relation `u * var - 1` must be appended to any ideal
/// before Gröbner computations in the extended ring.
#[derive(Debug, Clone)]
pub struct Localization {
    pub ring: RingContext,
    /// index of the inverted variable in the extended ring
    pub inverted: usize,
    /// index of the fresh inverse variable
    pub inverse: usize,
    /// the relation `u * var - 1`
    pub relation: Polynomial,
    positions: Vec<usize>,
}

impl Localization {
    /// Re-embeds a polynomial of the original ring.
    pub fn embed(&self, f: &Polynomial) -> Polynomial {
        f.embed(&self.ring, &self.positions)
    }

    /// Embeds an ideal and appends the inversion relation.
    pub fn embed_ideal(&self, ideal: &Ideal) -> Ideal {
        let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| self.embed(g)).collect();
        gens.push(self.relation.clone());
        Ideal::new(self.ring.clone(), gens)
    }
}

/// Builds the localized ring inverting `var`.
pub fn localize_invert(ring: &RingContext, var: &str) -> Result<Localization> {
    let vi = ring
        .var_index(var)
        .ok_or_else(|| Error::InvalidInput(format!("unknown variable `{var}`")))?;
    let mut vars = ring.vars().to_vec();
    let mut fresh = "u".to_string();
    let mut k = 0;
    while vars.contains(&fresh) {
        k += 1;
        fresh = format!("u{k}");
    }
    vars.insert(vi + 1, fresh);
    let grading = ring.grading().with_inverse_of(vi);
    let order = match ring.order() {
        MonomialOrder::Weighted { weights, tiebreak } => {
            let mut w = weights.clone();
            w.insert(vi + 1, w[vi]);
            MonomialOrder::Weighted {
                weights: w,
                tiebreak: *tiebreak,
            }
        }
        other => other.clone(),
    };
    let extended = RingContext::new(vars, grading, order)?;
    let positions: Vec<usize> = (0..ring.nvars())
        .map(|i| if i <= vi { i } else { i + 1 })
        .collect();
    let n = extended.nvars();
    let tu = Monomial::var(n, vi).mul(&Monomial::var(n, vi + 1));
    let relation = Polynomial::from_terms(
        vec![
            Term {
                coef: Rat::one(),
                mono: tu,
            },
            Term {
                coef: -Rat::one(),
                mono: Monomial::one(n),
            },
        ],
        extended.order(),
    );
    Ok(Localization {
        ring: extended,
        inverted: vi,
        inverse: vi + 1,
        relation,
        positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring_xy() -> RingContext {
        RingContext::standard(&["x", "y"]).unwrap()
    }

    fn ring_xyz() -> RingContext {
        RingContext::standard(&["x", "y", "z"]).unwrap()
    }

    fn gb_of(ring: &RingContext, gens: &[&str]) -> GroebnerBasis {
        buchberger(&Ideal::parse(ring, gens).unwrap())
    }

    #[test]
    fn already_reduced_basis() {
        let r = ring_xy();
        let gb = gb_of(&r, &["x", "y"]);
        let texts: Vec<String> = gb.elements().iter().map(|f| f.to_text(&r)).collect();
        // ascending by leading monomial: y < x under grevlex
        assert_eq!(texts, vec!["y", "x"]);
    }

    #[test]
    fn principal_ideal_is_normalized() {
        let r = ring_xy();
        let gb = gb_of(&r, &["3*x^2 - 3*y"]);
        let texts: Vec<String> = gb.elements().iter().map(|f| f.to_text(&r)).collect();
        assert_eq!(texts, vec!["x^2 - y"]);
    }

    #[test]
    fn hand_computed_basis() {
        // S(x^2 - y^2, x y) = -y^3; all further S-pairs reduce to zero
        let r = ring_xy();
        let gb = gb_of(&r, &["x^2 - y^2", "x*y"]);
        let texts: Vec<String> = gb.elements().iter().map(|f| f.to_text(&r)).collect();
        assert_eq!(texts, vec!["x*y", "x^2 - y^2", "y^3"]);
    }

    #[test]
    fn criteria_do_not_change_result() {
        let r = ring_xyz();
        let ideal = Ideal::parse(
            &r,
            &["x^2*y - z", "x*z - y^2", "y*z^2 - x - 1", "x^3 - y*z"],
        )
        .unwrap();
        assert_eq!(
            buchberger_with(&ideal, true).elements,
            buchberger_with(&ideal, false).elements
        );
    }

    #[test]
    fn normal_form_examples() {
        let r = ring_xyz();
        let gb = gb_of(&r, &["x", "y", "z"]);
        let one = parse_polynomial("1", &r).unwrap();
        assert_eq!(normal_form(&one, &gb), one);
        let member = parse_polynomial("x^2 + 3*y*z", &r).unwrap();
        assert!(normal_form(&member, &gb).is_zero());

        let r2 = ring_xy();
        let gb2 = gb_of(&r2, &["x^2 - y"]);
        let f = parse_polynomial("x^2*y", &r2).unwrap();
        assert_eq!(normal_form(&f, &gb2), parse_polynomial("y^2", &r2).unwrap());
    }

    #[test]
    fn division_tracks_exact_quotients() {
        let r = ring_xyz();
        let gb = gb_of(&r, &["x^2 - y", "x*y - z"]);
        let f = parse_polynomial("x^3*y^2 - z + 4*x - 1", &r).unwrap();
        let (q, rem) = reduce_with_quotients(&f, &gb);
        let mut rebuilt = rem.clone();
        for (qk, gk) in q.iter().zip(gb.elements()) {
            rebuilt = rebuilt.add(&qk.mul(gk, r.order()), r.order());
        }
        assert_eq!(rebuilt, f);
        for t in rem.terms() {
            assert!(gb
                .elements()
                .iter()
                .all(|g| !g.leading_monomial().unwrap().divides(&t.mono)));
        }
    }

    #[test]
    fn membership_examples() {
        let r = ring_xyz();
        let g = parse_polynomial("x*y - z^2", &r).unwrap();
        let principal = Ideal::new(r.clone(), vec![g.clone()]);
        assert!(ideal_member(&g, &principal));
        let maximal = Ideal::parse(&r, &["x", "y", "z"]).unwrap();
        let one = parse_polynomial("1", &r).unwrap();
        assert!(!ideal_member(&one, &maximal));
    }

    #[test]
    fn equality_ignores_generator_presentation() {
        let r = ring_xy();
        let a = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = Ideal::parse(&r, &["y", "x", "x + y"]).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
        let c = Ideal::parse(&r, &["x^2"]).unwrap();
        let d = Ideal::parse(&r, &["x"]).unwrap();
        assert!(!ideal_equal(&c, &d).unwrap());
    }

    #[test]
    fn product_identity_and_duplicates() {
        let r = ring_xyz();
        let i = Ideal::parse(&r, &["x^2", "y^2", "y*z", "z^2"]).unwrap();
        let unit = Ideal::parse(&r, &["1"]).unwrap();
        let p = i.product(&unit).unwrap();
        assert!(ideal_equal(&p, &i).unwrap());
        // squaring (x^2, y^2, yz, z^2) gives 10 products, one duplicate y^2 z^2
        let sq = i.product(&i).unwrap();
        assert_eq!(sq.generators().len(), 9);
    }

    #[test]
    fn min_gens_drops_multiples() {
        let r = ring_xyz();
        let i = Ideal::parse(&r, &["x", "x^2", "y"]).unwrap();
        let m = min_gens(&i).unwrap();
        let texts: Vec<String> = m.iter().map(|f| f.to_text(&r)).collect();
        assert_eq!(texts, vec!["x", "y"]);
        let j = Ideal::parse(&r, &["x", "y", "z"]).unwrap();
        assert_eq!(min_gens(&j).unwrap().len(), 3);
    }

    #[test]
    fn min_gens_requires_homogeneous_and_heft() {
        let r = ring_xyz();
        let i = Ideal::parse(&r, &["x^2 + y"]).unwrap();
        assert_eq!(min_gens(&i), Err(Error::NonHomogeneous));
    }

    #[test]
    fn localization_basics() {
        let r = RingContext::standard(&["t", "b"]).unwrap();
        let loc = localize_invert(&r, "t").unwrap();
        assert_eq!(loc.ring.vars(), &["t", "u", "b"]);

        // (t b) with t inverted contains b
        let tb = Ideal::parse(&r, &["t*b"]).unwrap();
        let extended = loc.embed_ideal(&tb);
        let b = parse_polynomial("b", &loc.ring).unwrap();
        assert!(ideal_member(&b, &extended));

        // (t) with t inverted is the unit ideal
        let t = Ideal::parse(&r, &["t"]).unwrap();
        let extended = loc.embed_ideal(&t);
        let one = parse_polynomial("1", &loc.ring).unwrap();
        assert!(ideal_member(&one, &extended));

        // (b^2, t b) with t inverted equals (b)
        let a = loc.embed_ideal(&Ideal::parse(&r, &["b^2", "t*b"]).unwrap());
        let b_ideal = loc.embed_ideal(&Ideal::parse(&r, &["b"]).unwrap());
        assert!(ideal_equal(&a, &b_ideal).unwrap());
    }

    #[test]
    fn localization_picks_a_fresh_inverse_name() {
        let r = RingContext::standard(&["t", "u"]).unwrap();
        let loc = localize_invert(&r, "t").unwrap();
        assert_eq!(loc.ring.vars(), &["t", "u1", "u"]);
        assert_eq!(loc.inverse, 1);
        // the relation stays homogeneous of degree zero
        assert_eq!(
            loc.relation.homogeneous_degree(loc.ring.grading()),
            Some(HomogeneousDegree::Exact(vec![0]))
        );
        assert!(localize_invert(&r, "w").is_err());
    }

    #[test]
    fn mixed_ring_operands_are_rejected() {
        let a = Ideal::parse(&ring_xy(), &["x"]).unwrap();
        let b = Ideal::parse(&ring_xyz(), &["x"]).unwrap();
        assert_eq!(a.plus(&b), Err(Error::RingMismatch));
        assert_eq!(a.product(&b), Err(Error::RingMismatch));
        assert_eq!(ideal_equal(&a, &b), Err(Error::RingMismatch));
    }

    #[test]
    fn weighted_order_is_usable_end_to_end() {
        use crate::poly::TieBreak;
        let r = ring_xy()
            .with_order(MonomialOrder::Weighted {
                weights: vec![3, 1],
                tiebreak: TieBreak::Grevlex,
            })
            .unwrap();
        let gb = gb_of(&r, &["x^2 - y^2", "x*y"]);
        for f in gb.elements() {
            assert!(f.leading_term().unwrap().coef == crate::linalg::rat(1));
        }
        // colength agrees with the grevlex computation of the same ideal
        let grevlex =
            crate::quotient::standard_monomials(&gb_of(&ring_xy(), &["x^2 - y^2", "x*y"]))
                .unwrap()
                .colength();
        let weighted = crate::quotient::standard_monomials(&gb).unwrap().colength();
        assert_eq!(weighted, grevlex);
    }

    #[test]
    fn shuffled_generators_same_reduced_basis() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let r = ring_xyz();
        let gens = [
            "x^2 - y^2",
            "x*y",
            "y^3 - x^3*z",
            "x^2*z - y*z^2",
            "z^3 - x*y*z",
        ];
        let reference = gb_of(&r, &gens);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let mut shuffled: Vec<&str> = gens.to_vec();
            shuffled.shuffle(&mut rng);
            // duplicate one generator for good measure
            shuffled.push(shuffled[0]);
            let gb = gb_of(&r, &shuffled);
            assert_eq!(gb.elements(), reference.elements());
        }
    }

    #[test]
    fn reduced_basis_structural_invariants() {
        use num_traits::One;
        let r = ring_xyz();
        let gb = gb_of(&r, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z", "x^3 - y^3"]);
        let elems = gb.elements();
        for (i, f) in elems.iter().enumerate() {
            let lt = f.leading_term().unwrap();
            assert!(lt.coef.is_one(), "elements are monic");
            for (j, g) in elems.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm = g.leading_monomial().unwrap();
                assert!(!lm.divides(&lt.mono), "leading monomials are minimal");
                for t in f.terms() {
                    assert!(!lm.divides(&t.mono), "tails are fully reduced");
                }
            }
            if i + 1 < elems.len() {
                let next = elems[i + 1].leading_monomial().unwrap();
                assert_eq!(
                    r.order().compare(&lt.mono, next),
                    std::cmp::Ordering::Less,
                    "sorted ascending by leading monomial"
                );
            }
        }
    }

    #[test]
    fn homogeneous_input_gives_homogeneous_basis() {
        let r = ring_xyz();
        let gb = gb_of(&r, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]);
        for f in gb.elements() {
            assert!(f.homogeneous_degree(r.grading()).is_some());
        }
    }
}
