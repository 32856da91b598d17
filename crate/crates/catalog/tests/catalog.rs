use catalog::{
    build, build_named, coprime_semidirect_products, manifest, small_groups, CatalogError, Gf, Tier,
};
use classifier::GroupSpec;
use num_bigint::BigUint;
use permgroup::{intersection, Bounds};

#[test]
fn manifest_instances_match_frozen_degree_and_order() {
    let m = manifest();
    assert_eq!(m.schema, 1);
    for e in m.entries(Tier::Stretch) {
        let g = build_named(&e.name).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        assert_eq!(g.degree(), e.degree, "{}", e.name);
        assert_eq!(g.group.order().to_string(), e.order, "{}", e.name);
    }
}

#[test]
fn desk_tier_has_at_least_fifty_instances() {
    let m = manifest();
    assert!(m.entries(Tier::Desk).count() >= 50);
    assert!(m.entries(Tier::Stretch).count() > m.entries(Tier::Desk).count());
}

#[test]
fn socle_is_normal_with_quotient_of_outer_order() {
    for e in manifest().entries(Tier::Desk) {
        let g = build_named(&e.name).expect("builds");
        assert!(g.socle.is_normal_in(&g.group), "{}", e.name);
        assert_eq!(
            g.group.order() / g.socle.order(),
            BigUint::from(g.spec.outer.order()),
            "{}",
            e.name
        );
        assert!(g.group.is_transitive(), "{}", e.name);
    }
}

#[test]
fn models_are_deterministic() {
    for name in ["L3(4):g", "U3(3):f2", "Sz(8)", "PGL2(25)"] {
        let a = catalog::build_model(&GroupSpec::parse(name).unwrap()).unwrap();
        let b = catalog::build_model(&GroupSpec::parse(name).unwrap()).unwrap();
        assert_eq!(a.socle, b.socle);
        assert_eq!(a.outer, b.outer);
    }
}

#[test]
fn unsupported_families_are_reported() {
    let spec = GroupSpec::parse("E8(2)").unwrap();
    assert!(matches!(build(&spec), Err(CatalogError::Unsupported(_))));
    let spec = GroupSpec::parse("M24").unwrap();
    assert!(matches!(build(&spec), Err(CatalogError::Unsupported(_))));
}

#[test]
fn field_limits_are_enforced() {
    assert!(Gf::new(4, 1).is_err());
    assert!(Gf::new(2, 9).is_err());
    assert!(Gf::new(2, 0).is_err());
}

#[test]
fn defining_polynomials_are_the_expected_ones() {
    assert_eq!(Gf::new(2, 2).unwrap().modulus(), &[1, 1]);
    assert_eq!(Gf::new(2, 3).unwrap().modulus(), &[1, 1, 0]);
    assert_eq!(Gf::new(3, 2).unwrap().modulus(), &[1, 0]);
    assert_eq!(Gf::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0]);
}

#[test]
fn small_group_orders() {
    let expected = [
        ("S3", 6),
        ("C6", 6),
        ("D10", 10),
        ("D12", 12),
        ("D14", 14),
        ("D30", 30),
        ("A4", 12),
        ("S4", 24),
        ("A5", 60),
        ("S5", 120),
        ("A4xC2", 24),
        ("S3xC3", 18),
        ("SL2(3)", 24),
        ("F20", 20),
        ("F21", 21),
        ("2^3:7", 56),
        ("2^3:7:3", 168),
        ("3^2:4", 36),
        ("3^2:8", 72),
        ("2^4:5", 80),
        ("2^4:3", 48),
    ];
    let groups = small_groups().unwrap();
    assert_eq!(groups.len(), expected.len());
    for (name, order) in expected {
        let g = groups
            .iter()
            .find(|g| g.name == name)
            .unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(g.group.size(), order, "{name}");
    }
}

#[test]
fn semidirect_products_are_coprime_splittings() {
    let products = coprime_semidirect_products().unwrap();
    assert!(products.len() >= 6);
    for s in products {
        let (n, k) = (s.normal.size(), s.complement.size());
        assert_eq!(n * k, s.group.size(), "{}", s.name);
        assert_eq!(numtheory_gcd(n, k), 1, "{}", s.name);
        assert!(s.normal.is_normal_in(&s.group), "{}", s.name);
        assert!(s.complement.is_subgroup_of(&s.group), "{}", s.name);
        assert!(intersection(&s.normal, &s.complement, &Bounds::default())
            .unwrap()
            .is_trivial());
    }
}

fn numtheory_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        numtheory_gcd(b, a % b)
    }
}
