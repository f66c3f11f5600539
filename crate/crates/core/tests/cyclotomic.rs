use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use psichar::chartab::Cyclotomic;

fn z(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::zeta(n, k)
}

#[test]
fn basic_identities() {
    assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_int(-1));
    assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(-1));
    assert_eq!(z(6, 1).conductor(), 3);
    assert_eq!(z(12, 1).conductor(), 12);
    assert_eq!(z(12, 3), z(4, 1));
    assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
    let golden = &z(5, 1) + &z(5, 4);
    assert_eq!(golden.conductor(), 5);
    assert_eq!(golden.conj(), golden);
    // (ζ5 + ζ5^4)^2 + (ζ5 + ζ5^4) - 1 = 0
    let lhs = &(&(&golden * &golden) + &golden) - &Cyclotomic::one();
    assert!(lhs.is_zero());
    // sqrt(-3) = 1 + 2ζ3
    let s = &Cyclotomic::one() + &z(3, 1).scale_int(2);
    assert_eq!(&s * &s, Cyclotomic::from_int(-3));
    assert_eq!(s.conductor(), 3);
}

#[test]
fn inverse_and_serialization() {
    let a = &z(7, 1) + &Cyclotomic::from_int(3);
    let inv = a.inverse().unwrap();
    assert_eq!(&a * &inv, Cyclotomic::one());
    let half = Cyclotomic::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
    let b = &a * &half;
    let text = b.serialize();
    assert!(text.contains("1:2"));
    assert_eq!(Cyclotomic::parse(&text).unwrap(), b);
    assert_eq!(Cyclotomic::parse("-1@1").unwrap(), Cyclotomic::from_int(-1));
    assert!(Cyclotomic::parse("0/1@6").is_err());
    assert!(Cyclotomic::parse("1@0").is_err());
    assert!(Cyclotomic::parse("junk").is_err());
}

fn element() -> impl Strategy<Value = Cyclotomic> {
    let conductors = prop::sample::select(vec![1u64, 3, 4, 5, 7, 8, 9, 12, 15, 20, 21, 24]);
    (conductors, prop::collection::vec(-4i64..5, 1..12)).prop_map(|(n, cs)| {
        Cyclotomic::from_int_powers(n, &cs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_laws(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn canonical_form_is_unique(a in element(), k in 1u64..4) {
        // rewriting at a multiple of the conductor and reducing returns the same element
        let m = a.conductor() * [1, 2, 3, 5][k as usize];
        let step = m / a.conductor();
        let mut full = vec![BigRational::from_integer(0.into()); m as usize];
        for (i, c) in a.coeffs().iter().enumerate() {
            full[i * step as usize] = c.clone();
        }
        prop_assert_eq!(Cyclotomic::from_powers(m, full), a.clone());
        prop_assert_eq!(Cyclotomic::parse(&a.serialize()).unwrap(), a);
    }

    #[test]
    fn inverse_is_inverse(a in element()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inverse().unwrap(), Cyclotomic::one());
    }
}
