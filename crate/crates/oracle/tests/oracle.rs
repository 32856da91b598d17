use catalog::{build_named, coprime_semidirect_products, small_groups, Manifest};
use classifier::{ClassifyError, GroupSpec, Outcome};
use oracle::{
    brute_m_r, brute_weak_subnormal, check_coprime_lemma, check_lemma_equiv, check_rfrattini,
    check_unique_overgroup_structure, classifier_side, run_with, ClassifierSide, Filter, Profile,
    RunOptions, Status,
};
use permgroup::{rng_from_seed, Bounds};

fn bounds() -> Bounds {
    Profile::named("desk").unwrap().bounds
}

fn report(name: &str, r: u64) -> oracle::OvergroupReport {
    brute_m_r(
        &build_named(name).unwrap(),
        r,
        &bounds(),
        &mut rng_from_seed(0),
    )
    .unwrap()
}

fn member_orders(name: &str, r: u64) -> Vec<String> {
    report(name, r)
        .members
        .into_iter()
        .map(|m| m.order)
        .collect()
}

#[test]
fn a5_at_two_lies_only_in_a4() {
    assert_eq!(member_orders("A5", 2), ["12"]);
}

#[test]
fn a6_at_three_lies_only_in_the_order_36_subgroup() {
    assert_eq!(member_orders("A6", 3), ["36"]);
}

#[test]
fn l2_11_at_two_has_several_overgroups() {
    assert!(report("L2(11)", 2).members.len() >= 2);
}

#[test]
fn a7_at_seven_is_not_unique() {
    assert!(!report("A7", 7).flags.unique);
}

#[test]
fn m11_at_eleven_lies_only_in_l2_11() {
    assert_eq!(member_orders("M11", 11), ["660"]);
}

#[test]
fn suzuki_8_at_five_lies_in_the_torus_normalizer() {
    let rep = report("Sz(8)", 5);
    assert_eq!(member_orders("Sz(8)", 5), ["20"]);
    assert_eq!(rep.flags.ngr0_unique, Some(true));
}

#[test]
fn reports_are_deterministic_and_invariants_hold() {
    for (name, r) in [("A6", 2), ("PGL2(7)", 2), ("L3(2)", 7), ("U3(3)", 3)] {
        let a = report(name, r);
        assert_eq!(a, report(name, r));
        for inv in &a.invariants {
            assert!(inv.holds, "{name} r={r}: {} fails", inv.name);
        }
    }
}

#[test]
fn weakly_subnormal_sylow_cases() {
    let yes = [
        ("PGL2(7)", 2),
        ("PGL2(17)", 2),
        ("PGL2(31)", 2),
        ("L2(9):t", 2),
        ("L2(9):d2.f2", 2),
        ("L2(8):f3", 3),
        ("L3(2):g", 2),
        ("L3(4):g", 2),
    ];
    for (name, r) in yes {
        let inst = build_named(name).unwrap();
        assert!(
            brute_weak_subnormal(&inst, r, &bounds(), &mut rng_from_seed(0)).unwrap(),
            "{name} r={r}"
        );
    }
    let inst = build_named("PSigmaL2(9)").unwrap();
    assert!(!brute_weak_subnormal(&inst, 2, &bounds(), &mut rng_from_seed(0)).unwrap());
}

#[test]
fn sylow_normalizer_characterizations_agree() {
    for (name, r) in [
        ("L2(8):f3", 3),
        ("PGL2(17)", 2),
        ("L3(2):g", 2),
        ("PGL2(9)", 2),
    ] {
        let inst = build_named(name).unwrap();
        let rep = check_lemma_equiv(&inst, r, &bounds(), &mut rng_from_seed(0)).unwrap();
        assert!(rep.all_agree, "{name} r={r}: {rep:?}");
    }
}

#[test]
fn or_h_overgroups() {
    assert_eq!(report("L3(3):g", 2).flags.m_or_h_unique, Some(true));
    assert_eq!(report("PGL2(23)", 2).flags.m_or_h_unique, Some(true));
    let a9 = report("A9", 3);
    assert!(a9.flags.unique);
    assert_eq!(a9.flags.m_or_h_unique, Some(false));
}

#[test]
fn coprime_action_lemma_in_both_directions() {
    let reports: Vec<_> = coprime_semidirect_products()
        .unwrap()
        .iter()
        .map(|sd| check_coprime_lemma(sd, &bounds(), &mut rng_from_seed(0)).unwrap())
        .collect();
    assert!(reports.len() >= 3);
    for rep in &reports {
        assert!(rep.holds, "{rep:?}");
    }
    assert!(reports.iter().filter(|r| r.unique_overgroup).count() >= 3);
    assert!(reports.iter().filter(|r| !r.unique_overgroup).count() >= 1);
}

#[test]
fn rfrattini_on_small_groups() {
    let groups = small_groups().unwrap();
    assert!(groups.len() >= 10);
    let mut checked = 0;
    for sg in &groups {
        assert!(*sg.group.order() <= 200u32.into());
        for r in oracle::util::prime_divisors(sg.group.order()) {
            let rep =
                check_rfrattini(sg.name, &sg.group, r, &bounds(), &mut rng_from_seed(0)).unwrap();
            assert!(rep.holds, "{rep:?}");
            checked += 1;
        }
    }
    assert!(checked >= 20);
}

#[test]
fn cyclic_six_at_two_has_frattini_part_of_order_two() {
    let c6 = small_groups()
        .unwrap()
        .into_iter()
        .find(|g| g.name == "C6")
        .unwrap();
    let rep = check_rfrattini("C6", &c6.group, 2, &bounds(), &mut rng_from_seed(0)).unwrap();
    assert_eq!(rep.d_order, 2);
    assert!(rep.holds);
}

#[test]
fn unique_overgroup_core_is_the_frattini_part() {
    for sg in small_groups().unwrap() {
        for r in oracle::util::prime_divisors(sg.group.order()) {
            let rep = check_unique_overgroup_structure(
                sg.name,
                &sg.group,
                r,
                &bounds(),
                &mut rng_from_seed(0),
            )
            .unwrap();
            assert!(rep.holds, "{rep:?}");
        }
    }
}

fn tiny_manifest() -> Manifest {
    Manifest::parse(
        r#"
schema = 1
frozen_at = "test"

[[instance]]
name = "A5"
tier = "desk"
degree = 5
order = "60"

[[instance]]
name = "L2(7)"
tier = "desk"
degree = 8
order = "168"

[[instance]]
name = "A6"
tier = "desk"
degree = 6
order = "360"
"#,
    )
    .unwrap()
}

fn options(jobs: usize, filter: Filter) -> RunOptions {
    RunOptions {
        profile: Profile::named("desk").unwrap(),
        jobs,
        seed: 0,
        filter,
    }
}

#[test]
fn harness_agrees_on_small_manifest_independent_of_jobs() {
    let m = tiny_manifest();
    let one = run_with(&m, &options(1, Filter::default()), &classifier_side).unwrap();
    let four = run_with(&m, &options(4, Filter::default()), &classifier_side).unwrap();
    assert!(one.is_clean(), "{}", oracle::summary_table(&one));
    assert_eq!(one.diffs.len(), 9);
    assert_eq!(one.to_json_lines(), four.to_json_lines());
}

#[test]
fn corrupted_classifier_gives_exactly_one_mismatch() {
    let corrupt = |spec: &GroupSpec, r: u64| -> Result<ClassifierSide, ClassifyError> {
        let mut side = classifier_side(spec, r)?;
        if spec.name() == "A5" && r == 5 {
            side.outcome = Outcome::NotUnique;
            side.row = None;
            side.order = None;
        }
        Ok(side)
    };
    let run = run_with(&tiny_manifest(), &options(2, Filter::default()), &corrupt).unwrap();
    let bad: Vec<_> = run
        .diffs
        .iter()
        .filter(|d| d.status == Status::Mismatch)
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!((bad[0].instance.as_str(), bad[0].r), ("A5", 5));
    assert!(!run.is_clean());
}

#[test]
fn filters_select_family_and_prime() {
    let m = tiny_manifest();
    let run = run_with(
        &m,
        &options(2, Filter::parse("family=Alt").unwrap()),
        &classifier_side,
    )
    .unwrap();
    assert_eq!(run.diffs.len(), 6);
    assert!(run.diffs.iter().all(|d| d.instance.starts_with('A')));
    let run = run_with(
        &m,
        &options(2, Filter::parse("family=L,r=7").unwrap()),
        &classifier_side,
    )
    .unwrap();
    assert_eq!(run.diffs.len(), 1);
    assert!(Filter::parse("colour=red").is_err());
    assert!(Filter::parse("r=two").is_err());
}

#[test]
fn manifest_mismatch_is_a_precondition_error() {
    let m = Manifest::parse("schema = 1\nfrozen_at = \"x\"\n[[instance]]\nname = \"A5\"\ntier = \"desk\"\ndegree = 5\norder = \"61\"\n")
        .unwrap();
    let err = run_with(&m, &options(1, Filter::default()), &classifier_side).unwrap_err();
    assert!(matches!(err, oracle::OracleError::Precondition(_)));
}

#[test]
fn profiles_parse_and_bound_the_search() {
    let desk = Profile::named("desk").unwrap();
    let stretch = Profile::named("stretch").unwrap();
    assert!(desk.bounds.max_cosets < stretch.bounds.max_cosets);
    assert!(Profile::named("laptop").is_err());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tight.toml");
    std::fs::write(
        &path,
        "tier = \"desk\"\nmax_seconds_per_pair = 1\n[bounds]\nmax_cosets = 10\nmax_order = 100\nmax_small_order = 10\nmax_normalized_order = 10\n",
    )
    .unwrap();
    let tight = Profile::resolve(path.to_str().unwrap()).unwrap();
    assert_eq!(tight.bounds.max_cosets, 10);
    let err = brute_m_r(
        &build_named("A7").unwrap(),
        2,
        &tight.bounds,
        &mut rng_from_seed(0),
    )
    .unwrap_err();
    assert!(matches!(err, oracle::OracleError::Infeasible(_)), "{err:?}");
}
