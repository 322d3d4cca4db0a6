//! Symbolic one-form identities for semi-invariant functions.
//!
//! A function `f = t^w * fbar(b_1, ..., b_k)` on `C* x B` is semi-invariant
//! of weight `w` for the torus scaling `t`. Two exact statements about it
//! are verified here with polynomial arithmetic and Gröbner bases:
//!
//! * the splitting `df = chi d(fbar) + fbar d(chi)` of the differential,
//!   checked coefficient-wise (with `t` inverted when `w < 0`, so negative
//!   weights remain polynomial identities);
//! * the critical-locus identity `Z(df) = pr^{-1}(Z(d fbar) ∩ Z(fbar))`,
//!   realized as equality of the defining coefficient ideals in the
//!   localized ring `Q[t, u, b]/(t u - 1)`. For weight zero the identity is
//!   expected to fail in general, and the report also carries the corrected
//!   comparison against `Z(d fbar)` alone.
//!
//! Smooth pullbacks `phi^{-1}(Z(df)) = Z(d(f∘phi))` are checked for the two
//! shapes the crate supports: invertible linear coordinate changes and
//! adjoining free variables.

use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_equal, localize_invert, GroebnerBasis, Ideal};
use crate::linalg::{rat, Mat};
use crate::poly::{Monomial, Polynomial, RingContext, Term};
use rand::Rng;

/// A global one-form `sum coefficients[i] d(var_i)` on affine space.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicOneForm {
    pub coefficients: Vec<Polynomial>,
}

/// Exact differential: one formal partial derivative per ring variable.
pub fn differential(f: &Polynomial, ring: &RingContext) -> SymbolicOneForm {
    SymbolicOneForm {
        coefficients: (0..ring.nvars()).map(|v| f.partial_derivative(v)).collect(),
    }
}

/// A semi-invariant `f = t^w * fbar` presented by its weight and its
/// restriction `fbar` to the slice `t = 1`. The base ring holds only the
/// `b`-variables; `fbar` never involves the torus coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedFunction {
    base: RingContext,
    fbar: Polynomial,
    weight: i64,
}

impl WeightedFunction {
    pub fn new(base: RingContext, fbar: Polynomial, weight: i64) -> Result<WeightedFunction> {
        if base.var_index("t").is_some() {
            return Err(Error::InvalidRing(
                "the name `t` is reserved for the torus coordinate".into(),
            ));
        }
        Ok(WeightedFunction { base, fbar, weight })
    }

    pub fn base(&self) -> &RingContext {
        &self.base
    }

    pub fn fbar(&self) -> &Polynomial {
        &self.fbar
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// The ring `Q[t, b_1, ..., b_k]` and the embedding positions of the
    /// `b`-variables in it.
    fn torus_ring(&self) -> Result<(RingContext, Vec<usize>)> {
        let mut vars = vec!["t".to_string()];
        vars.extend(self.base.vars().iter().cloned());
        let n = vars.len();
        let ring = RingContext::new(
            vars,
            crate::poly::MultiGrading::standard(n),
            self.base.order().clone(),
        )?;
        Ok((ring, (1..n).collect()))
    }
}

/// Verifies the splitting of the differential of `f = t^w * fbar`
/// coefficient-wise: the `dt` coefficient must equal `w t^(w-1) fbar` and
/// the `db_i` coefficients must equal `t^w * d(fbar)/db_i`. The left side
/// is computed by expanding the product first and differentiating after, so
/// the two routes are independent. For `w < 0` the same identity is checked
/// with `t^w` represented as a power of the inverse variable.
pub fn check_splitting_identity(wf: &WeightedFunction) -> Result<bool> {
    let (tring, positions) = wf.torus_ring()?;
    let w = wf.weight;
    if w >= 0 {
        let n = tring.nvars();
        let fbar = wf.fbar.embed(&tring, &positions);
        let tpow = |e: u32| Polynomial::from_monomial(Monomial::var(n, 0).pow(e));
        let f = fbar.mul(&tpow(w as u32), tring.order());
        let df = differential(&f, &tring);
        // dt coefficient
        let expected_t = if w == 0 {
            Polynomial::zero()
        } else {
            fbar.mul(&tpow(w as u32 - 1), tring.order()).scale(&rat(w))
        };
        if df.coefficients[0] != expected_t {
            return Ok(false);
        }
        for (bi, &pos) in positions.iter().enumerate() {
            let expected = wf
                .fbar
                .partial_derivative(bi)
                .embed(&tring, &positions)
                .mul(&tpow(w as u32), tring.order());
            if df.coefficients[pos] != expected {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        // f = u^(-w) * fbar in Q[t, u, b]; chi = u^(-w), d(chi) in du
        let loc = localize_invert(&tring, "t")?;
        let lring = &loc.ring;
        let n = lring.nvars();
        let positions_loc: Vec<usize> = positions.iter().map(|&p| p + 1).collect();
        let fbar = wf.fbar.embed(lring, &positions_loc);
        let upow = |e: u32| Polynomial::from_monomial(Monomial::var(n, loc.inverse).pow(e));
        let f = fbar.mul(&upow((-w) as u32), lring.order());
        let df = differential(&f, lring);
        if !df.coefficients[loc.inverted].is_zero() {
            return Ok(false);
        }
        let expected_u = fbar
            .mul(&upow((-w) as u32 - 1), lring.order())
            .scale(&rat(-w));
        if df.coefficients[loc.inverse] != expected_u {
            return Ok(false);
        }
        for (bi, &pos) in positions_loc.iter().enumerate() {
            let expected = wf
                .fbar
                .partial_derivative(bi)
                .embed(lring, &positions_loc)
                .mul(&upow((-w) as u32), lring.order());
            if df.coefficients[pos] != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusVerdict {
    Equal,
    Unequal,
}

/// Outcome of the critical-locus comparison.
#[derive(Debug, Clone)]
pub struct CriticalLocusReport {
    /// comparison of `(df/dt, df/db) + (tu-1)` against
    /// `(fbar, d fbar/db) + (tu-1)`; `Equal` is the contract for `w != 0`,
    /// while `w = 0` may legitimately report `Unequal`
    pub verdict: LocusVerdict,
    /// for `w = 0` only: the corrected comparison against
    /// `(d fbar/db) + (tu-1)`, which always holds
    pub projection_verdict: Option<LocusVerdict>,
    pub gb_critical: GroebnerBasis,
    pub gb_predicted: GroebnerBasis,
}

/// Compares the critical locus of `f = t^w * fbar` with
/// `pr^{-1}(Z(d fbar) ∩ Z(fbar))` in the localized ring
/// `Q[t, u, b]/(tu - 1)`.
pub fn check_critical_locus_prop(wf: &WeightedFunction) -> Result<CriticalLocusReport> {
    let (tring, positions) = wf.torus_ring()?;
    let loc = localize_invert(&tring, "t")?;
    let lring = loc.ring.clone();
    let n = lring.nvars();
    let positions_loc: Vec<usize> = positions.iter().map(|&p| p + 1).collect();
    let fbar = wf.fbar.embed(&lring, &positions_loc);
    let w = wf.weight;
    // t^e as a monomial of the localized ring, negative powers through u
    let tpow = |e: i64| -> Polynomial {
        let m = if e >= 0 {
            Monomial::var(n, loc.inverted).pow(e as u32)
        } else {
            Monomial::var(n, loc.inverse).pow((-e) as u32)
        };
        Polynomial::from_monomial(m)
    };

    // coefficient ideal of df on C* x B: d/dt (t^w fbar) = w t^(w-1) fbar,
    // d/db_i = t^w d(fbar)/db_i
    let mut j1_gens = Vec::new();
    if w != 0 {
        j1_gens.push(fbar.mul(&tpow(w - 1), lring.order()).scale(&rat(w)));
    }
    let db: Vec<Polynomial> = (0..wf.base.nvars())
        .map(|bi| wf.fbar.partial_derivative(bi).embed(&lring, &positions_loc))
        .collect();
    for d in &db {
        j1_gens.push(d.mul(&tpow(w), lring.order()));
    }
    j1_gens.push(loc.relation.clone());
    let j1 = Ideal::new(lring.clone(), j1_gens);

    let mut j2_gens = vec![fbar.clone()];
    j2_gens.extend(db.iter().cloned());
    j2_gens.push(loc.relation.clone());
    let j2 = Ideal::new(lring.clone(), j2_gens);

    let equal = ideal_equal(&j1, &j2)?;
    let projection_verdict = if w == 0 {
        let mut proj_gens = db.clone();
        proj_gens.push(loc.relation.clone());
        let proj = Ideal::new(lring.clone(), proj_gens);
        Some(if ideal_equal(&j1, &proj)? {
            LocusVerdict::Equal
        } else {
            LocusVerdict::Unequal
        })
    } else {
        None
    };

    Ok(CriticalLocusReport {
        verdict: if equal {
            LocusVerdict::Equal
        } else {
            LocusVerdict::Unequal
        },
        projection_verdict,
        gb_critical: buchberger(&j1),
        gb_predicted: buchberger(&j2),
    })
}

/// A substitution supported by the pullback check: an invertible linear
/// change of coordinates, or an embedding that adjoins free variables.
#[derive(Debug, Clone)]
pub enum PullbackMap {
    Linear {
        target: RingContext,
        images: Vec<Polynomial>,
    },
    Extend {
        target: RingContext,
        positions: Vec<usize>,
    },
}

impl PullbackMap {
    /// An invertible linear coordinate change given by one linear form per
    /// source variable.
    pub fn linear(
        source: &RingContext,
        target: RingContext,
        images: Vec<Polynomial>,
    ) -> Result<PullbackMap> {
        if images.len() != source.nvars() || source.nvars() != target.nvars() {
            return Err(Error::UnsupportedSubstitution(
                "a linear change must be square".into(),
            ));
        }
        let n = target.nvars();
        let mut mat = Mat::zeros(n, n);
        for (i, img) in images.iter().enumerate() {
            for t in img.terms() {
                if t.mono.total_degree() != 1 {
                    return Err(Error::UnsupportedSubstitution(
                        "images must be homogeneous linear forms".into(),
                    ));
                }
                let j = t.mono.exponents().iter().position(|&e| e == 1).unwrap();
                mat.set(i, j, t.coef.clone());
            }
        }
        if mat.rank() != n {
            return Err(Error::UnsupportedSubstitution(
                "the linear change is not invertible".into(),
            ));
        }
        Ok(PullbackMap::Linear { target, images })
    }

    /// The pullback along a projection: the source variables embed into the
    /// target ring by name, and the remaining target variables are free.
    pub fn extend(source: &RingContext, target: RingContext) -> Result<PullbackMap> {
        let positions = source
            .vars()
            .iter()
            .map(|v| {
                target.var_index(v).ok_or_else(|| {
                    Error::UnsupportedSubstitution(format!(
                        "source variable `{v}` is missing from the target ring"
                    ))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(PullbackMap::Extend { target, positions })
    }

    pub fn target(&self) -> &RingContext {
        match self {
            PullbackMap::Linear { target, .. } | PullbackMap::Extend { target, .. } => target,
        }
    }

    fn apply(&self, f: &Polynomial) -> Polynomial {
        match self {
            PullbackMap::Linear { target, images } => f.substitute(images, target),
            PullbackMap::Extend { target, positions } => f.embed(target, positions),
        }
    }
}

/// Verifies `phi^{-1}(Z(df)) = Z(d(f∘phi))` as an equality of coefficient
/// ideals in the target ring.
pub fn check_smooth_pullback(
    f: &Polynomial,
    source: &RingContext,
    map: &PullbackMap,
) -> Result<bool> {
    let target = map.target();
    let substituted: Vec<Polynomial> = differential(f, source)
        .coefficients
        .iter()
        .map(|c| map.apply(c))
        .collect();
    let pulled = map.apply(f);
    let composed = differential(&pulled, target).coefficients;
    ideal_equal(
        &Ideal::new(target.clone(), substituted),
        &Ideal::new(target.clone(), composed),
    )
}

/// Deterministic pseudo-random polynomial for the verification families:
/// up to `max_terms` monomials of total degree at most `max_degree`, with
/// nonzero integer coefficients in `-9..=9`.
pub fn random_polynomial<R: Rng>(
    ring: &RingContext,
    rng: &mut R,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    let n = ring.nvars();
    loop {
        let terms: Vec<Term> = (0..max_terms)
            .map(|_| {
                let mut exps = vec![0u32; n];
                let degree = rng.gen_range(0..=max_degree);
                for _ in 0..degree {
                    exps[rng.gen_range(0..n)] += 1;
                }
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-9..=9);
                }
                Term {
                    coef: rat(c),
                    mono: Monomial::from_exponents(exps),
                }
            })
            .collect();
        let f = Polynomial::from_terms(terms, ring.order());
        if !f.is_zero() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bring(k: usize) -> RingContext {
        let names: Vec<String> = (1..=k).map(|i| format!("b{i}")).collect();
        RingContext::new(
            names,
            crate::poly::MultiGrading::standard(k),
            crate::poly::MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    fn single_b() -> RingContext {
        RingContext::standard(&["b"]).unwrap()
    }

    #[test]
    fn differential_basics() {
        let r = single_b();
        let c = parse_polynomial("5", &r).unwrap();
        assert!(differential(&c, &r).coefficients[0].is_zero());
        let b2 = parse_polynomial("b^2", &r).unwrap();
        assert_eq!(
            differential(&b2, &r).coefficients[0],
            parse_polynomial("2*b", &r).unwrap()
        );
    }

    #[test]
    fn differential_product_rule_case() {
        // d(t b^2) = b^2 dt + 2 t b db
        let r = RingContext::standard(&["t", "b"]).unwrap();
        let f = parse_polynomial("t*b^2", &r).unwrap();
        let df = differential(&f, &r);
        assert_eq!(df.coefficients[0], parse_polynomial("b^2", &r).unwrap());
        assert_eq!(df.coefficients[1], parse_polynomial("2*t*b", &r).unwrap());
    }

    #[test]
    fn splitting_worked_examples() {
        let r = single_b();
        let b2 = parse_polynomial("b^2", &r).unwrap();
        for w in [1, 0, -1, -3] {
            let wf = WeightedFunction::new(r.clone(), b2.clone(), w).unwrap();
            assert!(check_splitting_identity(&wf).unwrap(), "weight {w}");
        }
        let r3 = bring(3);
        let f = parse_polynomial("b1*b2 - b3^3", &r3).unwrap();
        let wf = WeightedFunction::new(r3, f, 2).unwrap();
        assert!(check_splitting_identity(&wf).unwrap());
    }

    #[test]
    fn splitting_random_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for case in 0..25 {
            let k = 1 + case % 3;
            let ring = bring(k);
            let fbar = random_polynomial(&ring, &mut rng, 4, 5);
            for w in [-2i64, -1, 1, 2, 3] {
                let wf = WeightedFunction::new(ring.clone(), fbar.clone(), w).unwrap();
                assert!(check_splitting_identity(&wf).unwrap(), "case {case} w {w}");
            }
        }
    }

    #[test]
    fn leibniz_rule_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let ring = bring(3);
        for _ in 0..20 {
            let f = random_polynomial(&ring, &mut rng, 3, 4);
            let g = random_polynomial(&ring, &mut rng, 3, 4);
            let fg = f.mul(&g, ring.order());
            let dfg = differential(&fg, &ring);
            let df = differential(&f, &ring);
            let dg = differential(&g, &ring);
            for v in 0..3 {
                let expected = f
                    .mul(&dg.coefficients[v], ring.order())
                    .add(&g.mul(&df.coefficients[v], ring.order()), ring.order());
                assert_eq!(dfg.coefficients[v], expected);
            }
        }
    }

    #[test]
    fn critical_locus_weight_one_examples() {
        // fbar = b^2: both ideals collapse to (b, tu - 1)
        let r = single_b();
        let wf = WeightedFunction::new(r.clone(), parse_polynomial("b^2", &r).unwrap(), 1).unwrap();
        let report = check_critical_locus_prop(&wf).unwrap();
        assert_eq!(report.verdict, LocusVerdict::Equal);
        let lring = report.gb_critical.ring().clone();
        let texts: Vec<String> = report
            .gb_critical
            .elements()
            .iter()
            .map(|f| f.to_text(&lring))
            .collect();
        assert_eq!(texts, vec!["b", "t*u - 1"]);

        let r2 = bring(2);
        let wf =
            WeightedFunction::new(r2.clone(), parse_polynomial("b1^2 + b2^2", &r2).unwrap(), 1)
                .unwrap();
        let report = check_critical_locus_prop(&wf).unwrap();
        assert_eq!(report.verdict, LocusVerdict::Equal);
    }

    #[test]
    fn critical_locus_trivial_weight_counterexample() {
        // fbar = b^2 + 1, w = 0: Z(df) = (b) but the predicted ideal is the
        // unit ideal, so the comparison must report unequal, while the
        // projection-only comparison holds
        let r = single_b();
        let wf =
            WeightedFunction::new(r.clone(), parse_polynomial("b^2 + 1", &r).unwrap(), 0).unwrap();
        let report = check_critical_locus_prop(&wf).unwrap();
        assert_eq!(report.verdict, LocusVerdict::Unequal);
        assert_eq!(report.projection_verdict, Some(LocusVerdict::Equal));
    }

    #[test]
    fn critical_locus_random_family_nonzero_weight() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for case in 0..10 {
            let k = 1 + case % 3;
            let ring = bring(k);
            let fbar = random_polynomial(&ring, &mut rng, 3, 4);
            for w in [-2i64, 1, 3] {
                let wf = WeightedFunction::new(ring.clone(), fbar.clone(), w).unwrap();
                let report = check_critical_locus_prop(&wf).unwrap();
                assert_eq!(report.verdict, LocusVerdict::Equal, "case {case} w {w}");
            }
        }
    }

    #[test]
    fn pullback_identity_and_linear_change() {
        let r = RingContext::standard(&["x", "y"]).unwrap();
        let f = parse_polynomial("x^2", &r).unwrap();
        let id = PullbackMap::linear(
            &r,
            r.clone(),
            vec![
                parse_polynomial("x", &r).unwrap(),
                parse_polynomial("y", &r).unwrap(),
            ],
        )
        .unwrap();
        assert!(check_smooth_pullback(&f, &r, &id).unwrap());

        // x -> x + y: coefficient ideals (x) vs (x + y) transported
        let shear = PullbackMap::linear(
            &r,
            r.clone(),
            vec![
                parse_polynomial("x + y", &r).unwrap(),
                parse_polynomial("y", &r).unwrap(),
            ],
        )
        .unwrap();
        assert!(check_smooth_pullback(&f, &r, &shear).unwrap());
    }

    #[test]
    fn pullback_projection() {
        let rb = single_b();
        let rtb = RingContext::standard(&["t", "b"]).unwrap();
        let f = parse_polynomial("b^2", &rb).unwrap();
        let proj = PullbackMap::extend(&rb, rtb).unwrap();
        assert!(check_smooth_pullback(&f, &rb, &proj).unwrap());
    }

    #[test]
    fn pullback_rejects_bad_shapes() {
        let r = RingContext::standard(&["x", "y"]).unwrap();
        let quadratic = vec![
            parse_polynomial("x^2", &r).unwrap(),
            parse_polynomial("y", &r).unwrap(),
        ];
        assert!(matches!(
            PullbackMap::linear(&r, r.clone(), quadratic),
            Err(Error::UnsupportedSubstitution(_))
        ));
        let singular = vec![
            parse_polynomial("x + y", &r).unwrap(),
            parse_polynomial("x + y", &r).unwrap(),
        ];
        assert!(matches!(
            PullbackMap::linear(&r, r.clone(), singular),
            Err(Error::UnsupportedSubstitution(_))
        ));
        let missing = RingContext::standard(&["a"]).unwrap();
        assert!(matches!(
            PullbackMap::extend(&r, missing),
            Err(Error::UnsupportedSubstitution(_))
        ));
    }

    #[test]
    fn reserved_torus_name_rejected() {
        let r = RingContext::standard(&["t", "b"]).unwrap();
        let f = parse_polynomial("b", &r).unwrap();
        assert!(matches!(
            WeightedFunction::new(r, f, 1),
            Err(Error::InvalidRing(_))
        ));
    }
}
