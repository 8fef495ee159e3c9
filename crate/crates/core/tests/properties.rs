//! Algebraic invariants of the public types, checked on random inputs.

use mahler_measure::exact::{int, rat, ExactRational, GaussianRational, PolyQ};
use mahler_measure::formulas::evaluate;
use mahler_measure::oracle::{base_measure_iii, ArgumentMode};
use mahler_measure::{Family, FamilySpec, Precision};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = ExactRational> {
    (-50i64..50, 1i64..30).prop_map(|(p, q)| rat(p, q))
}

fn poly() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(rational(), 0..7).prop_map(PolyQ::from_coeffs)
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn is_normalized(p: &PolyQ) -> bool {
    match p.degree() {
        None => p.coeffs().is_empty(),
        Some(d) => p.coeffs().len() == d + 1 && !p.coeffs()[d].is_zero(),
    }
}

proptest! {
    #[test]
    fn rationals_stay_in_lowest_terms(a in rational(), b in rational()) {
        for q in [&a + &b, &a * &b, &a - &b] {
            prop_assert!(q.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(q.numer(), q.denom()).is_one());
        }
    }

    #[test]
    fn polynomials_stay_normalized(p in poly(), q in poly()) {
        let sum = &p + &q;
        let diff = &p - &p;
        let prod = &p * &q;
        prop_assert!(is_normalized(&sum) && is_normalized(&diff) && is_normalized(&prod));
        prop_assert!(diff.is_zero());
        if let (Some(a), Some(b)) = (p.degree(), q.degree()) {
            prop_assert_eq!(prod.degree(), Some(a + b));
        }
    }

    #[test]
    fn polynomial_evaluation_is_a_ring_map(p in poly(), q in poly(), x in rational()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn gaussian_multiplication(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let i = GaussianRational::i();
        prop_assert_eq!(&(&i * &i) * &a, -a.clone());
    }

    // The odd-n family iii oracle evaluates the base measure at ±i·α; the
    // sign drops out because the measure depends on |α| only.
    #[test]
    fn imaginary_base_measure_ignores_sign(alpha in 0.01f64..20.0) {
        let plus = base_measure_iii(alpha, ArgumentMode::Imaginary);
        let minus = base_measure_iii(-alpha, ArgumentMode::Imaginary);
        prop_assert!((plus - minus).abs() <= 1e-12 * plus.abs().max(1.0));
    }
}

#[test]
fn polynomial_zero_is_canonical() {
    let p = PolyQ::from_coeffs(vec![int(0), int(0)]);
    assert!(p.is_zero());
    assert_eq!(p, PolyQ::zero());
    assert_eq!(p.degree(), None);
}

#[test]
fn closed_form_values_are_positive_measures() {
    let p = Precision::new(20).unwrap();
    for family in Family::ALL {
        for n in family.min_transforms()..=8 {
            let m = evaluate(FamilySpec::new(family, n).unwrap()).unwrap().measure(p).unwrap();
            assert!(m.to_f64() > 0.0, "{family} {n}");
        }
    }
}
