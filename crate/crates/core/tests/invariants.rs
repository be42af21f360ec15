use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use qweyl_core::intlinalg::{
    determinantal_divisors, invariant_factors_from_divisors, smith_normal_form, IntMatrix,
};
use qweyl_core::repverify::{burnside_dim, check_relations, find_isomorphism};
use qweyl_core::sample::{generic_params, rng};
use qweyl_core::weylalg::{multiply, multiply_by_rewriting};
use qweyl_core::{
    build_family, field_new, AlgebraElement, AlgebraSpec, Family, Flavor, Mat, PbwMonomial, Scalar,
};

const CONDUCTORS: [u32; 7] = [1, 2, 3, 4, 5, 6, 12];

fn scalar_in(n: u32, coeffs: &[(i64, i64)]) -> Scalar {
    let ctx = field_new(n);
    let mut s = Scalar::zero(&ctx);
    for (k, &(p, q)) in coeffs.iter().enumerate() {
        let c = &Scalar::from_int(&ctx, p) * &Scalar::from_int(&ctx, q).inv().unwrap();
        s = &s + &(&c * &Scalar::root_of_unity(&ctx, k as i64));
    }
    s
}

/// The scalar evaluated at `exp(2πi/n)`.
fn complex(s: &Scalar) -> (f64, f64) {
    let n = s.conductor() as f64;
    s.coeffs()
        .iter()
        .enumerate()
        .fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap();
            let t = TAU * k as f64 / n;
            (re + c * t.cos(), im + c * t.sin())
        })
}

fn coeff_list() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..6)
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 * (1.0 + b.0.abs()) && (a.1 - b.1).abs() < 1e-6 * (1.0 + b.1.abs())
}

const SPECS: [(Flavor, u32, u32, i64, i64, i64); 5] = [
    (Flavor::A2, 2, 2, 1, 1, 1),
    (Flavor::A2, 2, 3, 3, 2, 0),
    (Flavor::AltA2, 2, 2, 1, 1, 0),
    (Flavor::AltA2, 3, 3, 1, 2, 1),
    (Flavor::A2, 3, 3, 1, 1, 2),
];

fn spec(i: usize) -> AlgebraSpec {
    let (f, l1, l2, e1, e2, el) = SPECS[i];
    AlgebraSpec::new(f, l1, l2, e1, e2, el).unwrap()
}

fn element(spec: &AlgebraSpec, terms: &[([u32; 4], i64)]) -> AlgebraElement {
    AlgebraElement::from_terms(
        spec,
        terms
            .iter()
            .map(|&([a1, b1, a2, b2], c)| (PbwMonomial::new(a1, b1, a2, b2), spec.scalar(c))),
    )
}

fn terms() -> impl Strategy<Value = Vec<([u32; 4], i64)>> {
    prop::collection::vec((prop::array::uniform4(0u32..3), -3i64..=3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_products_match_complex_evaluation(
        ni in 0..CONDUCTORS.len(), a in coeff_list(), b in coeff_list()
    ) {
        let n = CONDUCTORS[ni];
        let (x, y) = (scalar_in(n, &a), scalar_in(n, &b));
        let (cx, cy) = (complex(&x), complex(&y));
        prop_assert!(close(complex(&(&x * &y)), (cx.0 * cy.0 - cx.1 * cy.1, cx.0 * cy.1 + cx.1 * cy.0)));
        prop_assert!(close(complex(&(&x + &y)), (cx.0 + cy.0, cx.1 + cy.1)));
    }

    #[test]
    fn field_axioms(ni in 0..CONDUCTORS.len(), a in coeff_list(), b in coeff_list(), c in coeff_list()) {
        let n = CONDUCTORS[ni];
        let (x, y, z) = (scalar_in(n, &a), scalar_in(n, &b), scalar_in(n, &c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        prop_assert!(Scalar::root_of_unity(x.context(), n as i64).is_one());
    }

    #[test]
    fn smith_form_matches_minors(rows in 1usize..=5, cols in 1usize..=5, seed in prop::collection::vec(-9i64..=9, 25)) {
        let entries: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 5..i * 5 + cols].to_vec()).collect();
        let a = IntMatrix::from_i64(&entries).unwrap();
        let s = smith_normal_form(&a);
        prop_assert_eq!(&s.invariant_factors, &invariant_factors_from_divisors(&determinantal_divisors(&a).unwrap()));
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one() && s.v.determinant().abs().is_one());
        let product: BigInt = s.invariant_factors.iter().product();
        if rows == cols {
            prop_assert_eq!(product.abs(), a.determinant().abs());
        }
    }

    #[test]
    fn product_is_associative_and_matches_rewriting(si in 0..SPECS.len(), a in terms(), b in terms(), c in terms()) {
        let sp = spec(si);
        let (x, y, z) = (element(&sp, &a), element(&sp, &b), element(&sp, &c));
        let xy = multiply(&x, &y).unwrap();
        prop_assert_eq!(&xy, &multiply_by_rewriting(&x, &y));
        prop_assert_eq!(multiply(&xy, &z).unwrap(), multiply(&x, &multiply(&y, &z).unwrap()).unwrap());
    }

    #[test]
    fn modules_are_homomorphisms(si in 0..SPECS.len(), seed in 0u64..1000, a in terms(), b in terms()) {
        let sp = spec(si);
        let family = if sp.flavor() == Flavor::A2 { Family::M1 } else { Family::Alt52 };
        let rep = build_family(&sp, &generic_params(&sp, family, &mut rng(seed))).unwrap();
        let (x, y) = (element(&sp, &a), element(&sp, &b));
        prop_assert_eq!(rep.eval(&multiply(&x, &y).unwrap()), rep.eval(&x).mul(&rep.eval(&y)));
    }

    #[test]
    fn change_of_basis_preserves_everything(seed in 0u64..1000, upper in prop::collection::vec(-2i64..=2, 36)) {
        let sp = spec(1);
        let rep = build_family(&sp, &generic_params(&sp, Family::M5, &mut rng(seed))).unwrap();
        let n = rep.dim();
        let ctx = sp.field();
        let mut p = Mat::identity(ctx, n);
        for i in 0..n {
            for j in i + 1..n {
                p.set(i, j, sp.scalar(upper[(i * n + j) % upper.len()]));
            }
        }
        let moved = rep.rebase(&p, rep.basis().to_vec()).unwrap();
        prop_assert!(check_relations(&moved).iter().all(|r| r.holds));
        prop_assert_eq!(burnside_dim(&moved), n * n);
        let t = find_isomorphism(&rep, &moved).unwrap();
        prop_assert!(t.is_some_and(|t| t.is_invertible()));
    }
}

#[test]
fn zero_matrix_has_zero_invariant_factors() {
    let a = IntMatrix::zeros(3, 2);
    let s = smith_normal_form(&a);
    assert!(s.invariant_factors.iter().all(Zero::is_zero));
    assert_eq!(BigInt::one(), s.u.determinant().abs());
}
