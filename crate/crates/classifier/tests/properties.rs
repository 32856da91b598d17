use classifier::{
    classify, m_or_h_unique, ngr0_unique, or_h_nontrivial, precheck, row_doc, socle_order,
    sporadic, weakly_subnormal_sylow, Family, GroupSpec, OrH, Outcome, ROW_DOCS, SPORADICS,
};
use num_bigint::BigUint;
use numtheory::{is_prime, prime_divisors, r_valuation, PrimePowerQ};
use proptest::prelude::*;

const PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
];
const DECORATIONS: &[&str] = &[
    "1", "d", "f", "d.f", "g", "d.g", "f.g", "t", "full", "f2", "f3", "f5", "d2", "d3",
];

fn lie_family() -> impl Strategy<Value = (Family, u32)> {
    prop_oneof![
        (2u32..=7).prop_map(|n| (Family::L, n)),
        (3u32..=7).prop_map(|n| (Family::U, n)),
        (2u32..=4).prop_map(|k| (Family::Sp, 2 * k)),
        (3u32..=6).prop_map(|k| (Family::OOdd, 2 * k + 1)),
        (4u32..=7).prop_map(|k| (Family::OPlus, 2 * k)),
        (4u32..=7).prop_map(|k| (Family::OMinus, 2 * k)),
        Just((Family::B2Twisted, 0)),
        Just((Family::G2Twisted, 0)),
        Just((Family::F4Twisted, 0)),
        Just((Family::D4Twisted, 0)),
        Just((Family::G2, 0)),
        Just((Family::F4, 0)),
        Just((Family::E6, 0)),
        Just((Family::E6Twisted, 0)),
        Just((Family::E7, 0)),
        Just((Family::E8, 0)),
    ]
}

/// Valid specs only; invalid parameter draws are filtered out.
fn any_spec() -> impl Strategy<Value = GroupSpec> {
    let lie = (
        lie_family(),
        prop::sample::select(&PRIMES[..8]),
        1u32..=6,
        prop::sample::select(DECORATIONS),
    )
        .prop_filter_map("valid Lie-type spec", |((family, n), p, f, deco)| {
            let q = PrimePowerQ::new(p, f).ok()?;
            let spec = GroupSpec::new(family, n, Some(q), Default::default()).ok()?;
            spec.with_outer(deco).ok()
        });
    let alt = (5u32..=40, any::<bool>()).prop_map(|(n, sym)| {
        if sym {
            GroupSpec::sym(n)
        } else {
            GroupSpec::alt(n)
        }
    });
    let spor =
        prop::sample::select(SPORADICS).prop_map(|s| GroupSpec::sporadic(s.name).expect("listed"));
    prop_oneof![4 => lie, 2 => alt, 1 => spor]
}

fn spec_and_prime() -> impl Strategy<Value = (GroupSpec, u64)> {
    (any_spec(), prop::sample::select(PRIMES)).prop_map(|(s, r)| (s, r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn traces_replay((spec, r) in spec_and_prime()) {
        let v = classify(&spec, r).expect("no row pair fires together");
        prop_assert!(v.replay().expect("operands evaluate"));
        let back: classifier::Verdict = serde_json::from_str(&v.to_json()).expect("verdict JSON parses");
        prop_assert_eq!(back, v);
    }

    #[test]
    fn precheck_dominates((spec, r) in spec_and_prime()) {
        if let Some(pre) = precheck(&spec, r).unwrap() {
            prop_assert_eq!(pre.outcome, Outcome::NotUnique);
            prop_assert_eq!(classify(&spec, r).unwrap().outcome, Outcome::NotUnique);
        }
    }

    #[test]
    fn unique_needs_r_dividing_t_and_r_group_quotient((spec, r) in spec_and_prime()) {
        let v = classify(&spec, r).unwrap();
        if v.is_unique() {
            prop_assert!(r_valuation(&spec.socle_order(), r).unwrap().exponent > 0);
            let out = spec.outer.order();
            prop_assert!(prime_divisors(out).iter().all(|&k| k == r));
            let h = v.overgroup.as_ref().unwrap();
            prop_assert!(row_doc(&h.row).is_some(), "undocumented row {}", h.row);
            if let Some(order) = &h.order {
                let order: BigUint = order.parse().unwrap();
                let g = spec.order();
                prop_assert!(&g % &order == BigUint::from(0u32));
                // H contains a Sylow r-subgroup of G.
                prop_assert_eq!(r_valuation(&order, r).unwrap().value, r_valuation(&g, r).unwrap().value);
                prop_assert!(order < g);
            }
        }
    }

    #[test]
    fn corollaries_are_consistent((spec, r) in spec_and_prime()) {
        let unique = classify(&spec, r).unwrap().is_unique();
        let ngr0 = ngr0_unique(&spec, r).unwrap();
        let weak = weakly_subnormal_sylow(&spec, r).unwrap();
        prop_assert!(!ngr0 || unique);
        prop_assert!(!weak || unique);
        if unique {
            let orh = or_h_nontrivial(&spec, r).unwrap();
            prop_assert!(!ngr0 || matches!(orh, OrH::Normalizer(_)));
            if weak {
                prop_assert!(m_or_h_unique(&spec, r).unwrap());
            }
            if let OrH::Normalizer(row) | OrH::Core(row) = &orh {
                prop_assert!(row_doc(row).is_some());
            }
        } else {
            prop_assert!(or_h_nontrivial(&spec, r).is_err());
            prop_assert!(m_or_h_unique(&spec, r).is_err());
        }
    }

    #[test]
    fn weak_subnormality_of_simple_groups_is_the_normalizer_list((spec, r) in spec_and_prime()) {
        let s = spec.normalized_for_corollaries(r);
        if s.outer.is_trivial() && ngr0_unique(&spec, r).unwrap() {
            prop_assert!(weakly_subnormal_sylow(&spec, r).unwrap());
        }
    }

    #[test]
    fn record_round_trips(spec in any_spec()) {
        let back = GroupSpec::from_record(&spec.record()).unwrap();
        prop_assert_eq!(&back, &spec);
        let json = serde_json::to_string(&spec.record()).unwrap();
        let rec: classifier::SpecRecord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(GroupSpec::from_record(&rec).unwrap(), spec);
    }

    #[test]
    fn names_round_trip(spec in any_spec()) {
        if let Ok(parsed) = GroupSpec::parse(&spec.name()) {
            prop_assert_eq!(parsed.order(), spec.order());
        }
    }

    #[test]
    fn group_order_is_socle_times_outer(spec in any_spec()) {
        prop_assert_eq!(spec.order(), socle_order(&spec) * spec.outer.order());
    }
}

#[test]
fn every_row_literal_is_documented() {
    let sources = [
        include_str!("../src/rows/even.rs"),
        include_str!("../src/rows/odd.rs"),
        include_str!("../src/rows/exceptional.rs"),
        include_str!("../src/rows/sporadic.rs"),
        include_str!("../src/rows/normalizer.rs"),
        include_str!("../src/rows/core.rs"),
    ];
    let prefixes = [
        "even:",
        "odd:",
        "exceptional:",
        "sporadic:",
        "normalizer:",
        "core:",
    ];
    let mut seen = 0;
    for src in sources {
        for piece in src.split('"').skip(1).step_by(2) {
            if prefixes.iter().any(|p| piece.starts_with(p)) {
                assert!(row_doc(piece).is_some(), "row {piece} has no documentation");
                seen += 1;
            }
        }
    }
    assert!(seen >= ROW_DOCS.len() - 1);
    let mut ids: Vec<_> = ROW_DOCS.iter().map(|d| d.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), ROW_DOCS.len(), "duplicate row identifiers");
}

#[test]
fn sporadic_orders_factor_over_small_primes() {
    for s in SPORADICS {
        let mut n: BigUint = s.order.parse().unwrap();
        for r in (2..=71u64).filter(|&r| is_prime(r)) {
            let e = r_valuation(&n, r).unwrap().value;
            n /= e;
        }
        assert_eq!(n, BigUint::from(1u32), "{}", s.name);
        assert!(sporadic(s.name).is_some());
    }
}

/// Whenever a normalizer row matches, the main decision is Unique.
#[test]
fn normalizer_rows_imply_unique_on_a_grid() {
    let mut checked = 0;
    for p in [2u64, 3, 5, 7, 11, 13] {
        for f in 1..=6 {
            let q = PrimePowerQ::new(p, f).unwrap();
            for (family, n) in [
                (Family::L, 2),
                (Family::L, 3),
                (Family::L, 5),
                (Family::U, 3),
                (Family::U, 5),
            ] {
                let Ok(base) = GroupSpec::new(family, n, Some(q.clone()), Default::default())
                else {
                    continue;
                };
                for deco in DECORATIONS {
                    let Ok(spec) = base.with_outer(deco) else {
                        continue;
                    };
                    for &r in PRIMES {
                        if ngr0_unique(&spec, r).unwrap() {
                            assert!(classify(&spec, r).unwrap().is_unique());
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 20);
}
