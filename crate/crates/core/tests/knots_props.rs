use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use sympsum_core::calculus::{blocks, blow_up_on_surface, Scalar};
use sympsum_core::knots::{
    distinguish_family, knot_surgery, nonfibered_nonmonic_family, torus_knot, twist_knot, Knot,
    KnotKind,
};

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (2u64..=15, 2u64..=15).prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
}

fn assert_catalog_invariants(k: &Knot) {
    let at_one = k.alexander.eval_at_one();
    assert!(at_one == BigInt::from(1) || at_one == BigInt::from(-1), "{k}");
    assert!(k.alexander.is_symmetric(), "{k}");
    assert!(!k.fibered || k.is_monic(), "{k}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn torus_knot_invariants((p, q) in coprime_pair()) {
        let k = torus_knot(p, q).unwrap();
        assert_catalog_invariants(&k);
        prop_assert_eq!(k.genus, (p - 1) * (q - 1) / 2);
        prop_assert_eq!(k.alexander.span(), Some(2 * k.genus as i64));
        prop_assert_eq!(k.alexander.substitute_square().span(), Some(4 * k.genus as i64));
        prop_assert_eq!(&torus_knot(q, p).unwrap().alexander, &k.alexander);
        prop_assert!(k.fibered && k.is_monic());
    }

    #[test]
    fn non_coprime_rejected(p in 2u64..=15, q in 2u64..=15) {
        prop_assume!(p.gcd(&q) != 1);
        prop_assert!(torus_knot(p, q).is_err());
    }

    #[test]
    fn twist_knot_invariants(m in 1u64..=200) {
        let k = twist_knot(m).unwrap();
        assert_catalog_invariants(&k);
        prop_assert_eq!(k.fibered, m == 1);
        prop_assert_eq!(k.is_monic(), m == 1);
    }

    #[test]
    fn surgery_preserves_numbers(k in 0i64..=40, (p, q) in coprime_pair(), m in 2u64..=30) {
        let base = blow_up_on_surface(&blocks::e2(), &Scalar::from(k), "section").unwrap();
        for knot in [torus_knot(p, q).unwrap(), twist_knot(m).unwrap(), Knot::unknot()] {
            let out = knot_surgery(&base, &knot).unwrap();
            prop_assert_eq!(out.numbers(), base.numbers());
            prop_assert_eq!(out.symplectic, knot.fibered);
            let expected = base.sw.as_ref().unwrap().explicit_part() * &knot.alexander.substitute_square();
            prop_assert_eq!(out.sw.as_ref().unwrap().explicit_part(), &expected);
            let genus = &base.surface("section").unwrap().genus + &Scalar::from(knot.genus as i64);
            prop_assert_eq!(&out.surface("section").unwrap().genus, &genus);
        }
    }

    #[test]
    fn torus_family_ledgers_distinct(i in 1u64..=100, j in 1u64..=100) {
        prop_assume!(i != j);
        let e2 = blocks::e2();
        let a = knot_surgery(&e2, &torus_knot(2, 2 * i + 1).unwrap()).unwrap().sw;
        let b = knot_surgery(&e2, &torus_knot(2, 2 * j + 1).unwrap()).unwrap().sw;
        prop_assert_ne!(a, b);
    }
}

#[test]
fn hundred_torus_knots_pairwise_distinct() {
    let knots: Vec<_> = (1..=100).map(|k| torus_knot(2, 2 * k + 1).unwrap()).collect();
    let r = distinguish_family(&blocks::e2(), &knots).unwrap();
    assert!(r.pairwise_distinct());
    assert_eq!(r.symplectic_count(), 100);
    assert!(r.trivial.is_empty());
}

#[test]
fn mixed_family_partition() {
    let knots = vec![torus_knot(2, 3).unwrap(), twist_knot(2).unwrap()];
    let r = distinguish_family(&blocks::e2(), &knots).unwrap();
    assert_eq!(r.non_symplectic_count(), 1);
    assert_eq!(r.entries[1].knot, KnotKind::Twist { m: 2 });
    assert!(!r.entries[1].monic);
}

#[test]
fn product_differs_from_factors() {
    let a = torus_knot(2, 3).unwrap().alexander;
    let b = torus_knot(2, 7).unwrap().alexander;
    let prod = &a * &b;
    assert_ne!(prod, a);
    assert_ne!(prod, b);
}

#[test]
fn twist_family_distinct_non_monic() {
    let fam = nonfibered_nonmonic_family(50);
    for (i, a) in fam.iter().enumerate() {
        assert!(!a.is_monic() && !a.fibered);
        for b in &fam[i + 1..] {
            assert_ne!(a.alexander, b.alexander);
        }
    }
}
