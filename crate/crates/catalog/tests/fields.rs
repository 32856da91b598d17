use catalog::linear::Mat;
use catalog::Gf;
use proptest::prelude::*;

const FIELDS: &[(u32, u32)] = &[
    (2, 1),
    (3, 1),
    (7, 1),
    (2, 2),
    (2, 3),
    (3, 2),
    (2, 4),
    (5, 2),
    (3, 3),
    (2, 5),
    (7, 2),
];

fn field() -> impl Strategy<Value = Gf> {
    (0..FIELDS.len()).prop_map(|i| Gf::new(FIELDS[i].0, FIELDS[i].1).unwrap())
}

fn with_elems(n: usize) -> impl Strategy<Value = (Gf, Vec<u32>)> {
    field().prop_flat_map(move |k| {
        let q = k.q();
        (Just(k), proptest::collection::vec(0..q, n))
    })
}

proptest! {
    #[test]
    fn field_axioms((k, x) in with_elems(3)) {
        let (a, b, c) = (x[0], x[1], x[2]);
        prop_assert_eq!(k.add(a, b), k.add(b, a));
        prop_assert_eq!(k.mul(a, b), k.mul(b, a));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.add(a, k.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(k.mul(a, k.inv(a)), 1);
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism((k, x) in with_elems(2), e in 0u32..6) {
        let (a, b) = (x[0], x[1]);
        prop_assert_eq!(k.frobenius(k.add(a, b), e), k.add(k.frobenius(a, e), k.frobenius(b, e)));
        prop_assert_eq!(k.frobenius(k.mul(a, b), e), k.mul(k.frobenius(a, e), k.frobenius(b, e)));
        prop_assert_eq!(k.frobenius(a, k.f()), a);
    }

    #[test]
    fn primitive_element_generates(k in field()) {
        prop_assert_eq!(k.mult_order(k.primitive()), k.q() - 1);
        let squares = (1..k.q()).filter(|&a| k.is_square(a)).count() as u32;
        prop_assert_eq!(squares, if k.p() == 2 { k.q() - 1 } else { (k.q() - 1) / 2 });
    }

    #[test]
    fn matrix_inverse_and_determinant((k, x) in with_elems(9)) {
        let m = Mat { n: 3, a: x };
        let d = m.det(&k);
        match m.inverse(&k) {
            Some(inv) => {
                prop_assert!(d != 0);
                prop_assert_eq!(m.mul(&inv, &k), Mat::identity(3));
                prop_assert_eq!(k.mul(d, inv.det(&k)), 1);
            }
            None => prop_assert_eq!(d, 0),
        }
    }

    #[test]
    fn determinant_is_multiplicative((k, x) in with_elems(8)) {
        let a = Mat { n: 2, a: x[..4].to_vec() };
        let b = Mat { n: 2, a: x[4..].to_vec() };
        prop_assert_eq!(a.mul(&b, &k).det(&k), k.mul(a.det(&k), b.det(&k)));
        prop_assert_eq!(a.transpose().det(&k), a.det(&k));
    }
}
