//! Exact arithmetic in `Z[q]` and its fraction field.

mod bracket;
mod poly;
mod rat;

pub use bracket::{factor_as_qbrackets, pretty_poly, pretty_rat, BracketForm};
pub use poly::QPoly;
pub use rat::QRat;

/// `[k]_q`.
pub fn q_integer(k: usize) -> QPoly {
    QPoly::q_integer(k)
}

/// `[k]_q!`.
pub fn q_factorial(k: usize) -> QPoly {
    QPoly::q_factorial(k)
}

/// `num / den` in canonical reduced form.
pub fn qrat_reduce(num: QPoly, den: QPoly) -> crate::Result<QRat> {
    QRat::reduce(num, den)
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(|c| QPoly::from_i64s(&c))
    }

    fn nonzero_poly() -> impl Strategy<Value = QPoly> {
        poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_undoes_multiplication(a in poly(), b in nonzero_poly()) {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn reduce_is_canonical(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
            let r = QRat::reduce(a.clone(), b.clone()).unwrap();
            let scaled = QRat::reduce(&a * &c, &b * &c).unwrap();
            prop_assert_eq!(&r, &scaled);
            let again = QRat::reduce(r.numer().clone(), r.denom().clone()).unwrap();
            prop_assert_eq!(&r, &again);
            prop_assert!(r.numer().gcd(r.denom()).is_constant());
            prop_assert!(r.denom().leading().unwrap() > &0.into());
        }

        #[test]
        fn bracket_form_round_trips(p in nonzero_poly()) {
            if let Some(f) = factor_as_qbrackets(&p) {
                prop_assert_eq!(f.to_poly(), p);
            }
        }

        #[test]
        fn bracket_products_are_recognized(
            s in 1i64..5, a in 0usize..4, ks in prop::collection::vec(2usize..7, 0..4)
        ) {
            let mut p = QPoly::monomial(s, a);
            for &k in &ks {
                p = &p * &q_integer(k);
            }
            let f = factor_as_qbrackets(&p).unwrap();
            prop_assert_eq!(f.to_poly(), p);
        }
    }
}
