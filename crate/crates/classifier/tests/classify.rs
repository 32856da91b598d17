use classifier::{
    classify, m_or_h_unique, maximal_sylow, ngr0_unique, or_h_nontrivial, precheck,
    weakly_subnormal_sylow, ClassifyError, GroupSpec, OrH, Outcome, Verdict,
};

fn g(name: &str) -> GroupSpec {
    GroupSpec::parse(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn run(name: &str, r: u64) -> Verdict {
    classify(&g(name), r).unwrap_or_else(|e| panic!("{name}, r = {r}: {e}"))
}

fn unique_row(name: &str, r: u64) -> (String, String, Option<String>) {
    let v = run(name, r);
    assert_eq!(
        v.outcome,
        Outcome::Unique,
        "{name}, r = {r}: {}",
        v.to_json_pretty()
    );
    let h = v.overgroup.expect("unique verdicts name H");
    (h.row, h.type_string, h.order)
}

#[test]
fn a9_at_3_is_the_wreath_product() {
    let (row, ty, order) = unique_row("A9", 3);
    assert_eq!(row, "odd:A:SrwrSr");
    assert_eq!(ty, "(S_r wr S_r) cap G");
    assert_eq!(order.as_deref(), Some("648"));
}

#[test]
fn a7_at_7_is_not_unique() {
    assert_eq!(run("A7", 7).outcome, Outcome::NotUnique);
}

#[test]
fn a5_at_2_is_a4() {
    let (row, _, order) = unique_row("A5", 2);
    assert_eq!(row, "even:A:point-stabilizer");
    assert_eq!(order.as_deref(), Some("12"));
}

#[test]
fn a6_at_3_is_the_two_block_stabilizer() {
    let (row, _, order) = unique_row("A6", 3);
    assert_eq!(row, "odd:A:SrwrS2");
    assert_eq!(order.as_deref(), Some("36"));
}

#[test]
fn suzuki_8_at_5_is_the_torus_normalizer() {
    let (row, ty, order) = unique_row("Sz(8)", 5);
    assert_eq!(row, "exceptional:2B2:r4:torus");
    assert_eq!(ty, "(q-sqrt(2q)+1):4");
    assert_eq!(order.as_deref(), Some("20"));
}

#[test]
fn m11_at_11_is_l2_11() {
    let (row, ty, order) = unique_row("M11", 11);
    assert_eq!(row, "sporadic:M11:11");
    assert_eq!(ty, "L_2(11)");
    assert_eq!(order.as_deref(), Some("660"));
}

#[test]
fn m23_at_23() {
    let (_, ty, _) = unique_row("M23", 23);
    assert_eq!(ty, "23:11");
}

#[test]
fn pgl2_17_at_2_is_the_split_torus_normalizer() {
    let (row, _, order) = unique_row("PGL2(17)", 2);
    assert_eq!(row, "even:L2:GL1(q)wrS2");
    assert_eq!(order.as_deref(), Some("32"));
}

#[test]
fn precheck_rejects_r0_trivial_and_non_r_quotients() {
    let v = precheck(&g("L2(32):f5"), 5).unwrap().expect("R0 = 1");
    assert_eq!(v.outcome, Outcome::NotUnique);
    let v = precheck(&g("PGL2(9)"), 3).unwrap().expect("G/T = C2");
    assert_eq!(v.outcome, Outcome::NotUnique);
    assert!(precheck(&g("A6"), 3).unwrap().is_none());
}

#[test]
fn non_prime_r_is_rejected() {
    assert!(matches!(
        classify(&g("A5"), 4),
        Err(ClassifyError::NotPrime(4))
    ));
}

#[test]
fn monster_outside_listed_primes_is_out_of_scope() {
    assert_eq!(run("M", 13).outcome, Outcome::OutOfScope);
    assert_eq!(run("M", 71).outcome, Outcome::Unique);
    assert_eq!(run("M", 2).outcome, Outcome::NotUnique);
}

#[test]
fn normalizer_list() {
    assert!(!ngr0_unique(&g("A13"), 13).unwrap());
    assert!(ngr0_unique(&g("L2(8)"), 2).unwrap());
    assert!(ngr0_unique(&g("A29"), 29).unwrap());
}

#[test]
fn weak_subnormality() {
    assert!(weakly_subnormal_sylow(&g("PGL2(17)"), 2).unwrap());
    assert!(weakly_subnormal_sylow(&g("L2(8):f3"), 3).unwrap());
    assert!(!weakly_subnormal_sylow(&g("PSigmaL2(9)"), 2).unwrap());
    assert!(weakly_subnormal_sylow(&g("M10"), 2).unwrap());
    assert!(weakly_subnormal_sylow(&g("L3(2):g"), 2).unwrap());
    assert!(weakly_subnormal_sylow(&g("L3(4):2_3"), 2).unwrap());
}

#[test]
fn o_r_of_h() {
    assert_eq!(or_h_nontrivial(&g("U3(3)"), 7).unwrap(), OrH::No);
    assert!(matches!(
        or_h_nontrivial(&g("A9"), 3).unwrap(),
        OrH::Core(_)
    ));
    assert!(matches!(
        or_h_nontrivial(&g("Sz(8)"), 5).unwrap(),
        OrH::Normalizer(_)
    ));
    assert!(or_h_nontrivial(&g("A7"), 7).is_err());
}

#[test]
fn m_of_o_r_of_h() {
    assert!(m_or_h_unique(&g("L3(3):g"), 2).unwrap());
    assert!(!m_or_h_unique(&g("A9"), 3).unwrap());
    assert!(m_or_h_unique(&g("PGL2(23)"), 2).unwrap());
}

#[test]
fn maximal_sylow_list() {
    assert!(maximal_sylow(&g("PGL2(7)"), 2));
    assert!(maximal_sylow(&g("M10"), 2));
    assert!(!maximal_sylow(&g("A6"), 2));
}
