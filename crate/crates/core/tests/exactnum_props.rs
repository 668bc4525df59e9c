use btquot::exactnum::{poly_div_exact, BigInteger, BigRational, QPolynomial, QRationalFunction};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(|c| QPolynomial::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = QPolynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = QRationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(a, b)| QRationalFunction::new(a, b).unwrap())
}

fn point() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

proptest! {
    #[test]
    fn exact_division_round_trips(a in poly(), b in nonzero_poly()) {
        let prod = &a * &b;
        prop_assert_eq!(poly_div_exact(&prod, &b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), x in -6i64..=6) {
        let x = BigInteger::from(x);
        prop_assert_eq!((&a * &b).eval_int(&x), a.eval_int(&x) * b.eval_int(&x));
        prop_assert_eq!((&a + &b).eval_int(&x), a.eval_int(&x) + b.eval_int(&x));
    }

    #[test]
    fn rational_functions_form_a_field(f in ratfunc(), g in ratfunc(), h in ratfunc()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f - &f, QRationalFunction::zero());
        if !f.is_zero() {
            prop_assert_eq!(&f / &f, QRationalFunction::one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let f = QRationalFunction::new(a.clone(), b.clone()).unwrap();
        let g = QRationalFunction::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&f, &g);
        let lead = f.denominator().leading_coeff().unwrap().clone();
        prop_assert!(lead > BigInteger::from(0));
    }

    #[test]
    fn ratfunc_evaluation_agrees(f in ratfunc(), g in ratfunc(), x in point()) {
        if let (Some(fx), Some(gx), Some(sx)) = (f.eval(&x), g.eval(&x), (&f * &g).eval(&x)) {
            prop_assert_eq!(sx, fx * gx);
        }
    }
}
