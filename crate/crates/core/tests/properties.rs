//! Property-based checks of the algebraic laws: scalar arithmetic over the
//! dual complex numbers, the total order on dual numbers, conjugation,
//! normalization, and inverse round trips. Laws that hold bitwise in
//! floating point (commutativity, conjugation, ε-annihilation) are asserted
//! exactly; reassociated computations get a scaled tolerance.

use dcmx::cxla::CxMat;
use dcmx::matrix::verify_eigenpair;
use dcmx::{Complex64, DCMatrix, DCVector, DualComplex, DualNumber, Tol};
use proptest::prelude::*;
use std::cmp::Ordering;

fn small() -> impl Strategy<Value = f64> {
    -3.0..3.0f64
}

fn dual_complex() -> impl Strategy<Value = DualComplex> {
    (small(), small(), small(), small())
        .prop_map(|(a, b, c, d)| DualComplex::new(Complex64::new(a, b), Complex64::new(c, d)))
}

fn dual_number() -> impl Strategy<Value = DualNumber> {
    (small(), small()).prop_map(|(s, d)| DualNumber::new(s, d))
}

fn close(a: DualComplex, b: DualComplex, tol: f64) -> bool {
    (a.std - b.std).norm() <= tol && (a.dual - b.dual).norm() <= tol
}

proptest! {
    #[test]
    fn addition_and_multiplication_commute(a in dual_complex(), b in dual_complex()) {
        let s1 = a + b;
        let s2 = b + a;
        prop_assert_eq!(s1.std, s2.std);
        prop_assert_eq!(s1.dual, s2.dual);
        let p1 = a * b;
        let p2 = b * a;
        prop_assert!(close(p1, p2, 1e-13));
    }

    #[test]
    fn multiplication_associates_and_distributes(
        a in dual_complex(), b in dual_complex(), c in dual_complex()
    ) {
        let scale = 1.0 + a.magnitude().std * b.magnitude().std * c.magnitude().std;
        prop_assert!(close((a * b) * c, a * (b * c), 1e-12 * scale));
        prop_assert!(close(a * (b + c), a * b + a * c, 1e-12 * scale));
    }

    #[test]
    fn epsilon_squares_to_zero(a in dual_complex(), b in dual_complex()) {
        // The products of the dual parts never surface.
        let pa = DualComplex::new(Complex64::new(0.0, 0.0), a.dual);
        let pb = DualComplex::new(Complex64::new(0.0, 0.0), b.dual);
        let prod = pa * pb;
        prop_assert_eq!(prod.std, Complex64::new(0.0, 0.0));
        prop_assert_eq!(prod.dual, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn conjugation_is_an_involution_and_antimultiplicative(
        a in dual_complex(), b in dual_complex()
    ) {
        let back = a.conj().conj();
        prop_assert_eq!(back.std, a.std);
        prop_assert_eq!(back.dual, a.dual);
        // (ab)* = a*b* for the commutative dual complex product.
        let lhs = (a * b).conj();
        let rhs = a.conj() * b.conj();
        prop_assert_eq!(lhs.std, rhs.std);
        prop_assert_eq!(lhs.dual, rhs.dual);
    }

    #[test]
    fn appreciable_inverse_round_trips(a in dual_complex()) {
        let tol = Tol::default();
        prop_assume!(a.std.norm() > 0.05);
        let inv = a.inv(&tol).unwrap();
        let one = a * inv;
        prop_assert!(close(one, DualComplex::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)), 1e-10));
    }

    #[test]
    fn order_is_total_and_antisymmetric(a in dual_number(), b in dual_number()) {
        let ab = a.compare(&b);
        let ba = b.compare(&a);
        prop_assert_eq!(ab, ba.reverse());
        if ab == Ordering::Equal {
            prop_assert_eq!(a.std, b.std);
            prop_assert_eq!(a.dual, b.dual);
        }
    }

    #[test]
    fn order_is_transitive(a in dual_number(), b in dual_number(), c in dual_number()) {
        let mut v = [a, b, c];
        v.sort_by(|x, y| x.compare(y));
        prop_assert_ne!(v[0].compare(&v[1]), Ordering::Greater);
        prop_assert_ne!(v[1].compare(&v[2]), Ordering::Greater);
        prop_assert_ne!(v[0].compare(&v[2]), Ordering::Greater);
    }

    #[test]
    fn square_root_squares_back(a in dual_number()) {
        let tol = Tol::default();
        prop_assume!(a.std > 0.01);
        let r = a.sqrt(&tol).unwrap();
        let back = r * r;
        prop_assert!((back.std - a.std).abs() <= 1e-12 * (1.0 + a.std.abs()));
        prop_assert!((back.dual - a.dual).abs() <= 1e-12 * (1.0 + a.dual.abs()));
    }
}

fn matrix_strategy(n: usize) -> impl Strategy<Value = DCMatrix> {
    let entries = proptest::collection::vec(small(), 4 * n * n);
    entries.prop_map(move |v| {
        let std = CxMat::from_fn(n, n, |i, j| {
            Complex64::new(v[2 * (i * n + j)], v[2 * (i * n + j) + 1])
        });
        let base = 2 * n * n;
        let dual = CxMat::from_fn(n, n, |i, j| {
            Complex64::new(v[base + 2 * (i * n + j)], v[base + 2 * (i * n + j) + 1])
        });
        DCMatrix::new(std, dual).unwrap()
    })
}

fn min_sigma(m: &CxMat) -> f64 {
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_transpose_involutes_and_reverses_products(
        a in matrix_strategy(3), b in matrix_strategy(3)
    ) {
        let back = a.conj_transpose().conj_transpose();
        prop_assert!(back.sub(&a).unwrap().norm() == 0.0);
        let lhs = a.matmul(&b).unwrap().conj_transpose();
        let rhs = b.conj_transpose().matmul(&a.conj_transpose()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().norm() <= 1e-12 * (1.0 + a.norm() * b.norm()));
    }

    #[test]
    fn inverse_round_trips(a in matrix_strategy(4)) {
        let tol = Tol::default();
        prop_assume!(min_sigma(a.std()) > 0.1);
        let inv = a.inverse(&tol).unwrap();
        let eye = DCMatrix::identity(4);
        let left = a.matmul(&inv).unwrap().sub(&eye).unwrap().norm();
        let right = inv.matmul(&a).unwrap().sub(&eye).unwrap().norm();
        prop_assert!(left <= 1e-9 && right <= 1e-9, "residuals {left:e}, {right:e}");
    }

    #[test]
    fn normalize_fixes_the_self_inner_product(v in proptest::collection::vec(small(), 12)) {
        let tol = Tol::default();
        let n = 3;
        let std = nalgebra::DVector::from_fn(n, |i, _| Complex64::new(v[2 * i], v[2 * i + 1]));
        let dual = nalgebra::DVector::from_fn(n, |i, _| Complex64::new(v[6 + 2 * i], v[6 + 2 * i + 1]));
        prop_assume!(std.iter().any(|z| z.norm() > 0.1));
        let x = DCVector::new(std, dual).unwrap().normalize(&tol).unwrap();
        let g = x.inner(&x).unwrap();
        prop_assert!((g.std - Complex64::new(1.0, 0.0)).norm() <= 1e-12);
        prop_assert!(g.dual.norm() <= 1e-12);
        // Phase convention: first appreciable entry real nonnegative.
        let lead = x.std().iter().find(|z| z.norm() > 1e-9).unwrap();
        prop_assert!(lead.im.abs() <= 1e-12 && lead.re > 0.0);
    }

    #[test]
    fn verified_eigenpairs_stay_verified_under_scaling(
        diag in proptest::collection::vec((small(), small(), small(), small()), 3),
        c in dual_complex()
    ) {
        let tol = Tol::default();
        prop_assume!(c.std.norm() > 0.05);
        let n = diag.len();
        let std = CxMat::from_fn(n, n, |i, j| if i == j {
            Complex64::new(diag[i].0, diag[i].1)
        } else {
            Complex64::new(0.0, 0.0)
        });
        let dual = CxMat::from_fn(n, n, |i, j| if i == j {
            Complex64::new(diag[i].2, diag[i].3)
        } else {
            Complex64::new(0.0, 0.0)
        });
        let a = DCMatrix::new(std, dual).unwrap();
        for i in 0..n {
            let lambda = DualComplex::new(
                Complex64::new(diag[i].0, diag[i].1),
                Complex64::new(diag[i].2, diag[i].3),
            );
            let e = DCVector::unit(n, i);
            prop_assert!(verify_eigenpair(&a, lambda, &e, &tol).unwrap());
            let scaled = e.scale(c);
            prop_assert!(verify_eigenpair(&a, lambda, &scaled, &tol).unwrap());
        }
    }
}
