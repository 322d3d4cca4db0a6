//! Command-line front end: ideal input files in, JSON reports out.
//!
//! Exit codes: 0 on success, 1 on a verification or assertion failure
//! (including golden mismatches), 2 on input errors.

mod input;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbtan::groebner::{buchberger, Ideal};
use hilbtan::poly::{parse_polynomial, MonomialOrder, RingContext};
use hilbtan::quiver::{
    check_torus_weights, gradient_superpotential, is_cyclic, rep_from_ideal, superpotential,
    verification_triples, QuiverRep,
};
use hilbtan::tangent::{
    counterexample_ideal_with_order, hom_dim_general, parity_scan, verify_pipeline,
    VerificationOutcome,
};
use hilbtan::theory::{
    check_critical_locus_prop, check_smooth_pullback, check_splitting_identity, random_polynomial,
    LocusVerdict, PullbackMap, WeightedFunction,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use report::{
    compare_golden, GbReport, ParityRowReport, ParityScanReport, QuiverReport, TheoryReport,
    TorusCheckReport, VerificationReport,
};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "hilbtan",
    about = "Exact-arithmetic tangent-space computations on the Hilbert scheme of points",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification pipeline (built-in counterexample ideal, or --input)
    Verify(Common),
    /// Colength and tangent dimension of the ideal in --input
    Tangent(Common),
    /// Reduced Gröbner basis of the ideal in --input
    Gb(Common),
    /// Check tangent parity for all monomial ideals of colength <= N
    ParityScan {
        /// largest colength to scan
        #[arg(long = "max-n")]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Quiver representation checks (built-in ideal, or --input)
    QuiverCheck(Common),
    /// Symbolic semi-invariant identity checks
    TheoryCheck(Common),
}

#[derive(Args)]
struct Common {
    /// ideal input file
    #[arg(long)]
    input: Option<PathBuf>,
    /// monomial order (overrides an order line in the input file)
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// also write the JSON report to this path
    #[arg(long)]
    json: Option<PathBuf>,
    /// compare the report field-wise against a saved golden report
    #[arg(long)]
    golden: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl OrderArg {
    fn order(self) -> MonomialOrder {
        match self {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

enum Failure {
    /// exit code 1
    Verification(String),
    /// exit code 2
    Input(String),
}

impl From<hilbtan::Error> for Failure {
    fn from(e: hilbtan::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_ideal(common: &Common) -> Result<Option<Ideal>, Failure> {
    let Some(path) = &common.input else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let parsed = input::parse_ideal_file(&text, common.order.map(OrderArg::order))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Some(parsed.ideal))
}

fn emit(report: &Value, common: &Common) -> Result<(), Failure> {
    let pretty = serde_json::to_string_pretty(report).expect("report serializes");
    println!("{pretty}");
    if let Some(path) = &common.json {
        std::fs::write(path, pretty.as_bytes())
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    if let Some(path) = &common.golden {
        check_golden(report, path)?;
    }
    Ok(())
}

fn check_golden(report: &Value, path: &Path) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let golden: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    compare_golden(report, &golden).map_err(|keys| {
        Failure::Verification(format!("golden mismatch in fields: {}", keys.join(", ")))
    })
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Verify(common) => cmd_verify(common),
        Command::Tangent(common) => cmd_tangent(common),
        Command::Gb(common) => cmd_gb(common),
        Command::ParityScan { max_n, common } => cmd_parity(max_n, common),
        Command::QuiverCheck(common) => cmd_quiver(common),
        Command::TheoryCheck(common) => cmd_theory(common),
    }
}

fn builtin_ideal(common: &Common) -> Result<Ideal, Failure> {
    let order = common
        .order
        .map(OrderArg::order)
        .unwrap_or(MonomialOrder::Grevlex);
    Ok(counterexample_ideal_with_order(order)?)
}

fn cmd_verify(common: Common) -> Result<(), Failure> {
    let builtin = common.input.is_none();
    let ideal = match load_ideal(&common)? {
        Some(ideal) => ideal,
        None => builtin_ideal(&common)?,
    };
    let outcome = verify_pipeline(&ideal)?;
    let report = VerificationReport::from_outcome(&outcome);
    emit(&serde_json::to_value(&report).unwrap(), &common)?;
    if builtin {
        check_builtin_expectations(&outcome)?;
    }
    Ok(())
}

fn check_builtin_expectations(out: &VerificationOutcome) -> Result<(), Failure> {
    let mut bad = Vec::new();
    if out.colength != 24 {
        bad.push(format!("colength {} != 24", out.colength));
    }
    if out.tangent_total != 99 {
        bad.push(format!("tangent_total {} != 99", out.tangent_total));
    }
    if out.torus_weight0_dim != 1 {
        bad.push(format!("torus_weight0_dim {} != 1", out.torus_weight0_dim));
    }
    if !out.parity_violation {
        bad.push("parity_violation is false".into());
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(bad.join("; ")))
    }
}

fn cmd_tangent(common: Common) -> Result<(), Failure> {
    let Some(ideal) = load_ideal(&common)? else {
        return Err(Failure::Input("tangent requires --input".into()));
    };
    let graded_possible = ideal.is_homogeneous() && ideal.ring().grading().heft().is_some();
    let report = if graded_possible {
        VerificationReport::from_outcome(&verify_pipeline(&ideal)?)
    } else {
        let t0 = Instant::now();
        let gb = buchberger(&ideal);
        let qb = hilbtan::quotient::standard_monomials(&gb)?;
        let colength = qb.colength();
        if colength == 0 {
            return Err(Failure::Input("degenerate ideal: unit ideal".into()));
        }
        let dim = hom_dim_general(&ideal)?;
        let mut timings = BTreeMap::new();
        timings.insert("total".to_string(), t0.elapsed().as_millis() as u64);
        VerificationReport {
            colength: colength as u64,
            tangent_total: dim as u64,
            weight_marginal: BTreeMap::new(),
            torus_weight0_dim: 0,
            parity_violation: (dim + colength) % 2 == 1,
            min_gen_count: None,
            timings,
        }
    };
    emit(&serde_json::to_value(&report).unwrap(), &common)
}

fn cmd_gb(common: Common) -> Result<(), Failure> {
    let Some(ideal) = load_ideal(&common)? else {
        return Err(Failure::Input("gb requires --input".into()));
    };
    let ring = ideal.ring().clone();
    let gb = buchberger(&ideal);
    let report = GbReport {
        order: ring.order().name().to_string(),
        variables: ring.vars().to_vec(),
        basis: gb.elements().iter().map(|f| f.to_text(&ring)).collect(),
    };
    emit(&serde_json::to_value(&report).unwrap(), &common)
}

fn cmd_parity(max_n: usize, common: Common) -> Result<(), Failure> {
    if max_n == 0 {
        return Err(Failure::Input("--max-n must be at least 1".into()));
    }
    let scan = parity_scan(max_n)?;
    let report = ParityScanReport {
        max_n: scan.max_n as u64,
        counts: scan.counts.iter().map(|&c| c as u64).collect(),
        total_ideals: scan.rows.len() as u64,
        all_ok: scan.all_ok(),
        rows: scan
            .rows
            .iter()
            .map(|r| ParityRowReport {
                n: r.n as u64,
                generators: r.generators.clone(),
                dim_graded: r.dim_graded as u64,
                dim_taylor: r.dim_taylor as u64,
                parity_ok: r.parity_ok(),
            })
            .collect(),
    };
    emit(&serde_json::to_value(&report).unwrap(), &common)?;
    if report.all_ok {
        Ok(())
    } else {
        Err(Failure::Verification("parity scan found a mismatch".into()))
    }
}

fn cmd_quiver(common: Common) -> Result<(), Failure> {
    let ideal = match load_ideal(&common)? {
        Some(ideal) => ideal,
        None => builtin_ideal(&common)?,
    };
    let rep = rep_from_ideal(&ideal)?;
    let (gx, gy, gz) = gradient_superpotential(&rep);
    let mut torus_checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (weights, expected) in verification_triples() {
        let mut all_hold = true;
        let reps = 20u64;
        for trial in 0..reps {
            let n = 1 + (trial as usize % 4);
            let random = QuiverRep::random(n, &mut rng);
            let check = check_torus_weights(&random, weights);
            all_hold &= check.holds && check.weight == expected;
        }
        // the representation built from the ideal as well
        let check = check_torus_weights(&rep, weights);
        all_hold &= check.holds && check.weight == expected;
        torus_checks.push(TorusCheckReport {
            scaling: [weights.a, weights.b, weights.c],
            weight: expected,
            random_reps: reps,
            all_hold,
        });
    }
    let commutes = rep.commutes();
    let cyclic = is_cyclic(&rep);
    let superpotential_zero = superpotential(&rep) == hilbtan::linalg::rat(0);
    let gradient_zero = gx.is_zero() && gy.is_zero() && gz.is_zero();
    let all_ok = commutes
        && cyclic
        && superpotential_zero
        && gradient_zero
        && torus_checks.iter().all(|t| t.all_hold);
    let report = QuiverReport {
        dimension: rep.n as u64,
        commutes,
        cyclic,
        superpotential_zero,
        gradient_zero,
        gradient_v_zero: true,
        torus_checks,
        all_ok,
    };
    emit(&serde_json::to_value(&report).unwrap(), &common)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verification("quiver checks failed".into()))
    }
}

fn theory_base_ring(k: usize) -> RingContext {
    let names: Vec<String> = (1..=k).map(|i| format!("b{i}")).collect();
    RingContext::new(
        names,
        hilbtan::poly::MultiGrading::standard(k),
        MonomialOrder::Grevlex,
    )
    .expect("valid ring")
}

fn cmd_theory(common: Common) -> Result<(), Failure> {
    let b1 = RingContext::standard(&["b"]).expect("valid ring");
    let b2 = theory_base_ring(2);
    let b3 = theory_base_ring(3);
    let poly = |ring: &RingContext, s: &str| parse_polynomial(s, ring).expect("worked example");

    // splitting identity on the worked examples
    let splitting_worked = [
        (b1.clone(), "b^2", 1i64),
        (b1.clone(), "b^2", 0),
        (b3.clone(), "b1*b2 - b3^3", 2),
    ];
    let mut splitting_worked_ok = true;
    for (ring, text, w) in &splitting_worked {
        let wf = WeightedFunction::new(ring.clone(), poly(ring, text), *w)?;
        splitting_worked_ok &= check_splitting_identity(&wf)?;
    }

    // splitting identity on the seeded random family
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut splitting_random_ok = true;
    let mut splitting_random_cases = 0u64;
    for case in 0..25usize {
        let ring = theory_base_ring(1 + case % 3);
        let fbar = random_polynomial(&ring, &mut rng, 4, 5);
        for w in [-2i64, -1, 1, 2, 3] {
            let wf = WeightedFunction::new(ring.clone(), fbar.clone(), w)?;
            splitting_random_ok &= check_splitting_identity(&wf)?;
            splitting_random_cases += 1;
        }
    }

    // critical locus: worked examples
    let mut critical_worked_ok = true;
    for (ring, text, w) in [(b1.clone(), "b^2", 1i64), (b2.clone(), "b1^2 + b2^2", 1)] {
        let wf = WeightedFunction::new(ring.clone(), poly(&ring, text), w)?;
        critical_worked_ok &= check_critical_locus_prop(&wf)?.verdict == LocusVerdict::Equal;
    }
    let trivial = WeightedFunction::new(b1.clone(), poly(&b1, "b^2 + 1"), 0)?;
    let trivial_report = check_critical_locus_prop(&trivial)?;
    let trivial_weight_reports_unequal = trivial_report.verdict == LocusVerdict::Unequal
        && trivial_report.projection_verdict == Some(LocusVerdict::Equal);

    // critical locus on the seeded random family
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut critical_random_ok = true;
    let mut critical_random_cases = 0u64;
    for case in 0..25usize {
        let ring = theory_base_ring(1 + case % 3);
        let fbar = random_polynomial(&ring, &mut rng, 4, 5);
        for w in [-2i64, -1, 1, 2, 3] {
            let wf = WeightedFunction::new(ring.clone(), fbar.clone(), w)?;
            critical_random_ok &= check_critical_locus_prop(&wf)?.verdict == LocusVerdict::Equal;
            critical_random_cases += 1;
        }
    }

    // smooth pullbacks: identity, a shear, and a projection
    let rxy = RingContext::standard(&["x", "y"]).expect("valid ring");
    let f = poly(&rxy, "x^2");
    let identity = PullbackMap::linear(&rxy, rxy.clone(), vec![poly(&rxy, "x"), poly(&rxy, "y")])?;
    let shear = PullbackMap::linear(
        &rxy,
        rxy.clone(),
        vec![poly(&rxy, "x + y"), poly(&rxy, "y")],
    )?;
    let rtb = RingContext::standard(&["t", "b"]).expect("valid ring");
    let projection = PullbackMap::extend(&b1, rtb)?;
    let pullback_ok = check_smooth_pullback(&f, &rxy, &identity)?
        && check_smooth_pullback(&f, &rxy, &shear)?
        && check_smooth_pullback(&poly(&b1, "b^2"), &b1, &projection)?;

    let all_ok = splitting_worked_ok
        && splitting_random_ok
        && critical_worked_ok
        && trivial_weight_reports_unequal
        && critical_random_ok
        && pullback_ok;
    let report = TheoryReport {
        splitting_worked_ok,
        splitting_random_cases,
        splitting_random_ok,
        critical_worked_ok,
        trivial_weight_reports_unequal,
        critical_random_cases,
        critical_random_ok,
        pullback_ok,
        all_ok,
    };
    emit(&serde_json::to_value(&report).unwrap(), &common)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verification("theory checks failed".into()))
    }
}
