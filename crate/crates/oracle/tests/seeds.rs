use catalog::build_named;
use oracle::{brute_m_r, Profile};
use permgroup::rng_from_seed;
use proptest::prelude::*;

const PAIRS: &[(&str, u64)] = &[
    ("A5", 2),
    ("A5", 3),
    ("S5", 2),
    ("A6", 3),
    ("PGL2(7)", 2),
    ("L2(8)", 3),
    ("L3(2)", 7),
    ("L2(11)", 5),
    ("M11", 3),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdict_and_invariants_do_not_depend_on_the_seed(i in 0..PAIRS.len(), seed in any::<u64>()) {
        let (name, r) = PAIRS[i];
        let inst = build_named(name).unwrap();
        let bounds = Profile::named("desk").unwrap().bounds;
        let a = brute_m_r(&inst, r, &bounds, &mut rng_from_seed(seed)).unwrap();
        let b = brute_m_r(&inst, r, &bounds, &mut rng_from_seed(0)).unwrap();
        prop_assert_eq!(a.flags.unique, b.flags.unique);
        let mut oa: Vec<_> = a.members.iter().map(|m| m.order.clone()).collect();
        let mut ob: Vec<_> = b.members.iter().map(|m| m.order.clone()).collect();
        oa.sort();
        ob.sort();
        prop_assert_eq!(oa, ob);
        prop_assert_eq!(a.sylow_order, b.sylow_order);
        prop_assert_eq!(a.r0_order, b.r0_order);
        for inv in &a.invariants {
            prop_assert!(inv.holds, "{} r={} seed={}: {}", name, r, seed, inv.name);
        }
    }
}
