//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p mahler-measure --test acceptance -- --nocapture`
//! to see the report lines.

use std::time::{Duration, Instant};

use mahler_measure::exact::identities::{
    bernoulli_euler_identity, bernoulli_halving_identity, bernoulli_symmetric_identity, factorial_sum_identity,
    induction_step_identity, monomial_expansion_identity, p_poly_properties, square_lattice_identity, FactorialSum,
    Variant,
};
use mahler_measure::exact::{p_poly_closed, p_poly_recursive};
use mahler_measure::formulas::{evaluate, coefficient_identity, reproduce_tables, Family, FamilySpec, CoefficientIdentity};
use mahler_measure::oracle::{
    li1_log_integral_check, log1p_square_moment_check, reduced_integral, ti2_moment_check, torus_qmc,
};
use mahler_measure::special::{
    combination_value, multiple_polylog, reduce_double_polylog, script_l_3_even_closed, script_l_double, Precision,
    UnitPoint,
};

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {id} [{name}]: {verdict}: {detail}");
    assert!(pass, "criterion {id} [{name}] failed: {detail}");
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed <= limit
}

#[test]
fn criterion_1_table_reproduction() {
    let start = Instant::now();
    let rows = reproduce_tables().expect("every printed row has a valid spec");
    let elapsed = start.elapsed();
    let matched = rows.iter().filter(|r| r.matches).count();
    let mismatched: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches)
        .map(|r| format!("{} (printed {} / computed {})", r.spec, r.printed, r.computed.combination))
        .collect();
    let detail = format!("{matched}/{} rows exact in {elapsed:?}; mismatches: {}", rows.len(), mismatched.join("; "));
    report(1, "table reproduction", matched == rows.len() && within(elapsed, Duration::from_secs(1)), &detail);
}

#[test]
fn criterion_2_identity_suites() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut checked = 0usize;
    let mut check = |label: String, ok: bool| {
        checked += 1;
        if !ok {
            failures.push(label);
        }
    };
    for n in 1..=20u32 {
        for l in 1..=n {
            check(format!("square lattice first ({n},{l})"), square_lattice_identity(n, l, Variant::First).unwrap());
            check(
                format!("bernoulli symmetric first ({n},{l})"),
                bernoulli_symmetric_identity(n, l, Variant::First).unwrap(),
            );
            check(format!("bernoulli euler ({n},{l})"), bernoulli_euler_identity(n, l).unwrap());
        }
        for l in 0..=n {
            check(format!("square lattice second ({n},{l})"), square_lattice_identity(n, l, Variant::Second).unwrap());
            check(
                format!("bernoulli symmetric third ({n},{l})"),
                bernoulli_symmetric_identity(n, l, Variant::Third).unwrap(),
            );
        }
        check(format!("bernoulli symmetric second {n}"), bernoulli_symmetric_identity(n, 0, Variant::Second).unwrap());
        check(format!("factorial sum bernoulli {n}"), factorial_sum_identity(n, FactorialSum::Bernoulli).unwrap());
        check(format!("coefficients ab {n}"), coefficient_identity(n, CoefficientIdentity::Ab).unwrap());
        check(format!("induction first {n}"), induction_step_identity(n, Variant::First).unwrap());
    }
    for n in 0..=20u32 {
        check(format!("factorial sum euler {n}"), factorial_sum_identity(n, FactorialSum::Euler).unwrap());
        check(format!("factorial sum euler shifted {n}"), factorial_sum_identity(n, FactorialSum::EulerShifted).unwrap());
        check(format!("coefficients ba {n}"), coefficient_identity(n, CoefficientIdentity::Ba).unwrap());
        check(format!("induction second {n}"), induction_step_identity(n, Variant::Second).unwrap());
    }
    for k in 0..=40u32 {
        check(format!("P_k recursive = closed {k}"), p_poly_recursive(k) == p_poly_closed(k));
        check(format!("P_k properties {k}"), p_poly_properties(k).all());
        check(format!("bernoulli halving {k}"), bernoulli_halving_identity(k));
        if k >= 1 {
            check(format!("monomial expansion {k}"), monomial_expansion_identity(k).unwrap());
        }
    }
    let elapsed = start.elapsed();
    let detail = format!("{} of {checked} exact checks failed in {elapsed:?}: {:?}", failures.len(), failures);
    report(2, "identity suites", failures.is_empty() && within(elapsed, Duration::from_secs(30)), &detail);
}

#[test]
fn criterion_3_kernel_integral() {
    use mahler_measure::oracle::kernel_integral_check;
    use rand::{Rng, SeedableRng};
    use rayon::prelude::*;

    let start = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let cases: Vec<(f64, f64, u32)> = (0..100)
        .map(|_| {
            let a: f64 = rng.gen_range(0.1..10.0);
            let mut b: f64 = rng.gen_range(0.1..10.0);
            if (a - b).abs() < 1e-3 {
                b += 0.5;
            }
            (a, b, rng.gen_range(0..=6))
        })
        .collect();
    let results: Vec<_> = cases.par_iter().map(|&(a, b, k)| kernel_integral_check(a, b, k).unwrap()).collect();
    let elapsed = start.elapsed();
    let worst = results.iter().map(|c| c.difference() / c.formula.abs().max(1.0)).fold(0.0, f64::max);
    let passed = results.iter().filter(|c| c.agree).count();
    let detail = format!("{passed}/100 within 1e-9, worst scaled difference {worst:.2e}, {elapsed:?}");
    report(3, "kernel integral", passed == 100 && within(elapsed, Duration::from_secs(60)), &detail);
}

#[test]
fn criterion_4_double_polylog_reduction() {
    let prec = Precision::new(15).unwrap();
    let mut worst = 0.0f64;
    let mut cases = 0;
    for w in [3u32, 5, 7, 9] {
        for r in 1..w {
            let s = w - r;
            for rho in [UnitPoint::One, UnitPoint::MinusOne] {
                for sigma in [UnitPoint::One, UnitPoint::MinusOne] {
                    if s == 1 && sigma == UnitPoint::One {
                        continue;
                    }
                    let exact = reduce_double_polylog(r, s, rho, sigma).unwrap();
                    let exact = combination_value(&exact, prec).unwrap().to_f64();
                    let series = multiple_polylog(r, s, rho, sigma, prec).unwrap();
                    let (re, im) = series.to_f64();
                    worst = worst.max((exact - re).abs()).max(im.abs());
                    cases += 1;
                }
            }
        }
    }
    let closed = combination_value(&script_l_3_even_closed(1).unwrap(), prec).unwrap().to_f64();
    let series = script_l_double(3, 2, UnitPoint::One, prec).unwrap().to_f64().0;
    let l32 = (closed - series).abs();
    let detail = format!("{cases} cases, worst difference {worst:.2e}; 93/4 ζ(5) − 7/4 π² ζ(3) vs series {l32:.2e}");
    report(4, "double polylog reduction", worst < 1e-6 && l32 < 1e-6, &detail);
}

#[test]
fn criterion_5_end_to_end_oracle() {
    let start = Instant::now();
    let prec = Precision::new(12).unwrap();
    let value_prec = Precision::new(25).unwrap();
    let mut lines = Vec::new();
    let mut ok = true;
    for family in Family::ALL {
        for n in family.min_transforms()..=4 {
            let spec = FamilySpec::new(family, n).unwrap();
            let closed = evaluate(spec).unwrap().measure(value_prec).unwrap().to_f64();
            let numeric = reduced_integral(spec, prec).unwrap().value;
            let tol = if family == Family::II && n % 2 == 1 { 1e-5 } else { 1e-7 };
            let diff = (closed - numeric).abs();
            ok &= diff <= tol;
            lines.push(format!("{family}/{n}: {diff:.1e}"));
        }
    }
    let elapsed = start.elapsed();
    let detail = format!("{} in {elapsed:?}", lines.join(", "));
    report(5, "end-to-end oracle", ok && within(elapsed, Duration::from_secs(300)), &detail);
}

#[test]
fn criterion_6_torus_qmc() {
    let start = Instant::now();
    let spec = FamilySpec::new(Family::I, 1).unwrap();
    let estimate = torus_qmc(spec, 10_000_000, 42).unwrap();
    let elapsed = start.elapsed();
    let expected = 2.0 * 0.915_965_594_177_219_015 / std::f64::consts::PI;
    let sigmas = (estimate.value - expected).abs() / estimate.error_estimate;
    let detail = format!(
        "value {:.8} vs {expected:.8}, sigma {:.2e}, {sigmas:.2} sigmas, {elapsed:?}",
        estimate.value, estimate.error_estimate
    );
    let pass = estimate.within_sigmas(expected, 3.0)
        && estimate.error_estimate <= 1e-3
        && within(elapsed, Duration::from_secs(60));
    report(6, "torus qmc", pass, &detail);
}

#[test]
fn criterion_7_moment_integrals() {
    let mut lines = Vec::new();
    let mut ok = true;
    for h in 0..=3u32 {
        let mut checks = vec![("log1p", log1p_square_moment_check(h).unwrap()), ("ti2", ti2_moment_check(h).unwrap())];
        if h >= 1 {
            checks.push(("li1", li1_log_integral_check(h).unwrap()));
        }
        for (name, c) in checks {
            ok &= c.agree;
            lines.push(format!("{name}(h={h}) {:.1e}", c.difference() / c.formula.abs().max(1.0)));
        }
    }
    report(7, "moment integrals", ok, &lines.join(", "));
}
