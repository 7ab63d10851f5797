use proptest::prelude::*;

use quadmon::artin_schreier::as_act;
use quadmon::quad::classify;
use quadmon::{BasisChange, FiniteCommMonoid, QuadAlg, Ring};

fn algebra(k: u64, t: u64, n: u64) -> QuadAlg {
    let r = Ring::modular(k).unwrap();
    QuadAlg::from_ints(&r, t as i64, n as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_commutative_and_disc_multiplicative(
        k in 2u64..40, a in 0u64..40, b in 0u64..40, c in 0u64..40, d in 0u64..40
    ) {
        let s = algebra(k, a, b);
        let t = algebra(k, c, d);
        let st = s.star(&t).unwrap();
        prop_assert_eq!(&st, &t.star(&s).unwrap());
        prop_assert_eq!(st.disc(), &s.disc() * &t.disc());
    }

    #[test]
    fn basis_change_is_compatible_with_product(
        k in 2u64..30, a in 0u64..30, b in 0u64..30, c in 0u64..30, d in 0u64..30,
        u in 0u64..30, r in 0u64..30, v in 0u64..30, q in 0u64..30
    ) {
        let ring = Ring::modular(k).unwrap();
        let (u, v) = (ring.from_int(u as i64), ring.from_int(v as i64));
        prop_assume!(ring.is_unit(&u) && ring.is_unit(&v));
        let g = BasisChange::new(u, ring.from_int(r as i64)).unwrap();
        let h = BasisChange::new(v, ring.from_int(q as i64)).unwrap();
        let s = algebra(k, a, b);
        let t = algebra(k, c, d);
        let lhs = s.apply(&g).unwrap().star(&t.apply(&h).unwrap()).unwrap();
        let rhs = s.star(&t).unwrap().apply(&BasisChange::product(&s, &t, &g, &h)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_by_four_torsion_preserves_disc(k in 1u64..20, a in 0u64..20, b in 0u64..20, m in 0u64..20) {
        let k = 4 * k;
        let ring = Ring::modular(k).unwrap();
        // k/4 * j is 4-torsion
        let m = ring.from_int(((k / 4) * m) as i64);
        let s = algebra(k, a, b);
        prop_assert_eq!(as_act(&s, &m).unwrap().disc(), s.disc());
    }

    #[test]
    fn isomorphism_witness_maps_source_to_target(k in 2u64..12, a in 0u64..12, b in 0u64..12, c in 0u64..12, d in 0u64..12) {
        let s = algebra(k, a, b);
        let t = algebra(k, c, d);
        let cls = classify(s.ring()).unwrap();
        let same = cls.class_of(&s) == cls.class_of(&t);
        match s.isomorphism_to(&t).unwrap() {
            Some(g) => {
                prop_assert!(same);
                prop_assert_eq!(s.apply(&g).unwrap(), t);
            }
            None => prop_assert!(!same),
        }
    }
}

#[test]
fn monoid_json_round_trip() {
    let ring = Ring::parse("Z/3").unwrap();
    let m = classify(&ring).unwrap().monoid().unwrap();
    let text = serde_json::to_string(&m).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["elements", "identity", "table"]);
    let back: FiniteCommMonoid = serde_json::from_str(&text).unwrap();
    assert_eq!(back, m);
    back.validate().unwrap();
}
