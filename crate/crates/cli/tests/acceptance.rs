//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria that cannot hold are listed in `UNATTAINABLE` with the reason;
//! they still print FAIL, and the test fails if any other criterion does.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use catalog::{build_named, coprime_semidirect_products, small_groups};
use classifier::GroupSpec;
use numtheory::{is_prime, is_zsigmondy_exception, ppd, rpart_q_pow, Form, PrimePowerQ, Sign};
use oracle::{
    analyze, brute_m_r, brute_weak_subnormal, check_coprime_lemma, check_rfrattini, Profile,
};
use permgroup::{rng_from_seed, Bounds, PermGroup};
use serde_json::Value;

const UNATTAINABLE: &[(u32, &str)] = &[(
    6,
    "L2(23) at r = 2 has |R| = 8 and several maximal overgroups of R, so there is no H with M(O_2(H)) = {H}",
)];

struct Outcome {
    criterion: u32,
    pass: bool,
    detail: String,
}

fn record(out: &mut Vec<Outcome>, criterion: u32, failures: Vec<String>, ok_detail: String) {
    let pass = failures.is_empty();
    let detail = if pass { ok_detail } else { failures.join("; ") };
    println!(
        "criterion {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    out.push(Outcome {
        criterion,
        pass,
        detail,
    });
}

fn bounds() -> Bounds {
    Profile::named("desk").unwrap().bounds
}

fn valuation(mut n: u128, r: u128) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(r) {
        n /= r;
        v += 1;
    }
    v
}

fn criterion_rpart() -> (Vec<String>, String) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    let primes: Vec<u64> = (2..=31).filter(|&r| is_prime(r)).collect();
    for q in (2..=128u64).filter_map(|q| PrimePowerQ::from_u64(q).ok()) {
        let qq = q.q_u64().unwrap();
        for d in 1..=12u64 {
            for eps in [Sign::Plus, Sign::Minus] {
                let base = if eps == Sign::Plus { qq - 1 } else { qq + 1 };
                for &r in primes.iter().filter(|&&r| base % r == 0) {
                    for form in [Form::MinusEps, Form::PlusEps] {
                        let qd = (qq as u128).pow(d as u32);
                        let lit = match (form, eps) {
                            (Form::MinusEps, Sign::Plus) | (Form::PlusEps, Sign::Minus) => qd - 1,
                            _ => qd + 1,
                        };
                        let got = rpart_q_pow(&q, d, form, eps, r).map(|p| p.exponent);
                        cases += 1;
                        if got.as_ref().ok() != Some(&valuation(lit, r as u128)) {
                            failures.push(format!("q={qq} d={d} {form:?} {eps:?} r={r}: {got:?}"));
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(5) {
        failures.push(format!("took {elapsed:?}"));
    }
    (
        failures,
        format!("{cases} cases, 0 mismatches, {elapsed:.2?}"),
    )
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether `q^d - 1` has a prime divisor not dividing any `q^e - 1`, `e < d`.
fn has_ppd(q: u128, d: u32) -> bool {
    let mut m = q.pow(d) - 1;
    for e in 1..d {
        let x = q.pow(e) - 1;
        loop {
            let g = gcd(m, x);
            if g == 1 {
                break;
            }
            m /= g;
        }
    }
    m > 1
}

fn criterion_zsigmondy() -> (Vec<String>, String) {
    let mut failures = Vec::new();
    let mut empty = BTreeSet::new();
    for q in (2..=128u64).filter_map(|q| PrimePowerQ::from_u64(q).ok()) {
        let qq = q.q_u64().unwrap();
        for d in 2..=12u32 {
            let set = ppd(&q, d).unwrap();
            if set.is_empty() != !has_ppd(qq as u128, d)
                || set.is_empty() != is_zsigmondy_exception(&q, d)
            {
                failures.push(format!("q={qq} d={d}"));
            }
            if set.is_empty() {
                empty.insert((qq, d));
            }
        }
    }
    let expected: BTreeSet<(u64, u32)> = [(2, 6), (3, 2), (7, 2), (31, 2), (127, 2)].into();
    if empty != expected {
        failures.push(format!("empty on {empty:?}"));
    }
    (failures, format!("ppd empty exactly on {empty:?}"))
}

struct VerifyRun {
    stdout: Vec<u8>,
    code: i32,
    elapsed: Duration,
}

fn verify_desk() -> VerifyRun {
    let start = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_unimax"))
        .args(["verify", "--profile", "desk", "--seed", "0", "--jobs", "8"])
        .env_remove("UNIMAX_PROFILE")
        .output()
        .unwrap();
    VerifyRun {
        stdout: o.stdout,
        code: o.status.code().unwrap_or(-1),
        elapsed: start.elapsed(),
    }
}

const REQUIRED: &[&str] = &[
    "A5",
    "A6",
    "A7",
    "A8",
    "A9",
    "A10",
    "S5",
    "S6",
    "S7",
    "S8",
    "S9",
    "S10",
    "L2(4)",
    "L2(5)",
    "L2(7)",
    "L2(8)",
    "L2(9)",
    "L2(11)",
    "L2(13)",
    "L2(16)",
    "L2(17)",
    "L2(19)",
    "L2(23)",
    "L2(25)",
    "L2(27)",
    "L2(31)",
    "L2(32)",
    "PGL2(9)",
    "PSigmaL2(9)",
    "L2(9):t",
    "L2(9):d2.f2",
    "L2(8):f3",
    "L3(2)",
    "L3(2):g",
    "L3(3)",
    "L3(3):g",
    "L3(4)",
    "PGL3(4)",
    "L3(4):g",
    "U3(3)",
    "Sp6(2)",
    "Sz(8)",
    "M11",
];

fn criterion_master(run: &VerifyRun, diffs: &[Value]) -> (Vec<String>, String) {
    let mut failures = Vec::new();
    if run.code != 0 {
        failures.push(format!("verify exited with {}", run.code));
    }
    let instances: BTreeSet<&str> = diffs
        .iter()
        .map(|d| d["instance"].as_str().unwrap())
        .collect();
    if instances.len() < 50 {
        failures.push(format!("only {} instances", instances.len()));
    }
    for name in REQUIRED {
        let canonical = GroupSpec::parse(name).unwrap().name();
        if !instances.contains(canonical.as_str()) {
            failures.push(format!("{name} missing"));
        }
    }
    for d in diffs.iter().filter(|d| d["status"] != "agree") {
        failures.push(format!(
            "{} r={}: {} {}",
            d["instance"], d["r"], d["status"], d["mismatches"]
        ));
    }
    for name in &instances {
        let inst = build_named(name).unwrap();
        let primes: Vec<u64> = oracle::util::prime_divisors(inst.group.order());
        let seen: Vec<u64> = diffs
            .iter()
            .filter(|d| d["instance"] == *name)
            .map(|d| d["r"].as_u64().unwrap())
            .collect();
        if seen != primes {
            failures.push(format!(
                "{name}: primes checked {seen:?}, expected {primes:?}"
            ));
        }
    }
    if run.elapsed >= Duration::from_secs(30 * 60) {
        failures.push(format!("took {:?}", run.elapsed));
    }
    let detail = format!(
        "{} instances, {} pairs, 0 mismatches, {:.1?}",
        instances.len(),
        diffs.len(),
        run.elapsed
    );
    (failures, detail)
}

/// Whether `h` preserves a partition into blocks of `size`, trying the finest
/// block system that joins each pair of points.
fn preserves_blocks(h: &PermGroup, size: usize) -> bool {
    let n = h.degree() as u32;
    let gens = h.generators();
    for a in 0..n {
        for b in a + 1..n {
            // Smallest block system in which a and b share a block.
            let mut parent: Vec<u32> = (0..n).collect();
            fn find(p: &mut [u32], x: u32) -> u32 {
                let mut x = x;
                while p[x as usize] != x {
                    p[x as usize] = p[p[x as usize] as usize];
                    x = p[x as usize];
                }
                x
            }
            let mut queue = vec![(a, b)];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra as usize] = rb;
            while let Some((x, y)) = queue.pop() {
                for g in gens {
                    let (u, v) = (find(&mut parent, g.apply(x)), find(&mut parent, g.apply(y)));
                    if u != v {
                        parent[u as usize] = v;
                        queue.push((g.apply(x), g.apply(y)));
                    }
                }
            }
            let mut counts = vec![0usize; n as usize];
            for x in 0..n {
                counts[find(&mut parent, x) as usize] += 1;
            }
            if counts.iter().all(|&c| c == 0 || c == size) {
                return true;
            }
        }
    }
    false
}

fn members(name: &str, r: u64) -> Vec<PermGroup> {
    let inst = build_named(name).unwrap();
    analyze(&inst, r, &bounds(), &mut rng_from_seed(0))
        .unwrap()
        .members
}

fn classifier_order(name: &str, r: u64) -> Option<String> {
    let v = classifier::classify(&GroupSpec::parse(name).unwrap(), r).unwrap();
    v.overgroup.and_then(|h| h.order)
}

fn criterion_spot_rows() -> (Vec<String>, String) {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    let a5 = members("A5", 2);
    check(
        a5.len() == 1
            && a5[0].size() == 12
            && (0..5).any(|p| a5[0].generators().iter().all(|x| x.apply(p) == p)),
        "A5 r=2: A4",
    );
    let a6 = members("A6", 3);
    check(
        a6.len() == 1 && a6[0].size() == 36 && preserves_blocks(&a6[0], 3),
        "A6 r=3: (S3 wr S2) cap A6",
    );
    let a9 = members("A9", 3);
    check(
        a9.len() == 1 && a9[0].size() == 648 && preserves_blocks(&a9[0], 3),
        "A9 r=3: (S3 wr S3) cap A9",
    );
    check(members("A7", 7).len() >= 2, "A7 r=7: not unique");
    let sz = brute_m_r(
        &build_named("Sz(8)").unwrap(),
        5,
        &bounds(),
        &mut rng_from_seed(0),
    )
    .unwrap();
    check(
        sz.flags.unique && sz.flags.ngr0_unique == Some(true) && sz.members[0].order == "20",
        "Sz(8) r=5: torus normalizer",
    );
    let m11 = members("M11", 11);
    let perfect = m11.len() == 1
        && oracle::util::derived_subgroup(&m11[0], &mut rng_from_seed(0))
            .unwrap()
            .order()
            == m11[0].order();
    check(perfect && m11[0].size() == 660, "M11 r=11: L2(11)");
    for (name, r, order) in [
        ("A5", 2, "12"),
        ("A6", 3, "36"),
        ("A9", 3, "648"),
        ("Sz(8)", 5, "20"),
        ("M11", 11, "660"),
    ] {
        check(
            classifier_order(name, r).as_deref() == Some(order),
            &format!("classifier {name} r={r}"),
        );
    }
    check(classifier_order("A7", 7).is_none(), "classifier A7 r=7");
    (
        failures,
        "A5,2 A6,3 A9,3 A7,7 Sz(8),5 M11,11 by enumeration and classifier".into(),
    )
}

fn criterion_weak_subnormal() -> (Vec<String>, String) {
    let cases = [
        ("PGL2(7)", 2, true),
        ("PGL2(17)", 2, true),
        ("PGL2(31)", 2, true),
        ("L2(9):t", 2, true),
        ("L2(9):d2.f2", 2, true),
        ("L2(8):f3", 3, true),
        ("L3(2):g", 2, true),
        ("L3(4):g", 2, true),
        ("PSigmaL2(9)", 2, false),
    ];
    let mut failures = Vec::new();
    for (name, r, expected) in cases {
        let got = brute_weak_subnormal(
            &build_named(name).unwrap(),
            r,
            &bounds(),
            &mut rng_from_seed(0),
        )
        .unwrap();
        if got != expected {
            failures.push(format!("{name} r={r}: {got}"));
        }
    }
    (failures, format!("{} groups", cases.len()))
}

fn criterion_or_h() -> (Vec<String>, String) {
    let mut failures = Vec::new();
    for (name, r, expected) in [
        ("L3(3):g", 2, true),
        ("L2(23)", 2, true),
        ("PGL2(23)", 2, true),
        ("A9", 3, false),
    ] {
        let rep = brute_m_r(
            &build_named(name).unwrap(),
            r,
            &bounds(),
            &mut rng_from_seed(0),
        )
        .unwrap();
        if !rep.flags.unique {
            failures.push(format!(
                "{name} r={r}: M(R) has {} members, so H is undefined",
                rep.members.len()
            ));
        } else if rep.flags.m_or_h_unique != Some(expected) {
            failures.push(format!(
                "{name} r={r}: M(O_r(H)) = {{H}} is {:?}",
                rep.flags.m_or_h_unique
            ));
        }
    }
    (
        failures,
        "L3(3):g, L2(23), PGL2(23) at r=2 and A9 at r=3".into(),
    )
}

const INVARIANTS: &[&str] = &[
    "unique_nonnormal_sylow_generates",
    "unique_iff_one_rprime_class",
    "unique_forces_r_quotient",
];

fn criterion_properties(diffs: &[Value]) -> (Vec<String>, String) {
    let mut failures = Vec::new();
    let sds = coprime_semidirect_products().unwrap();
    let mut directions = BTreeSet::new();
    for sd in &sds {
        let rep = check_coprime_lemma(sd, &bounds(), &mut rng_from_seed(0)).unwrap();
        directions.insert(rep.unique_overgroup);
        if !rep.holds {
            failures.push(format!("coprime {}", sd.name));
        }
    }
    if sds.len() < 3 || directions.len() < 2 {
        failures.push("coprime checks do not cover both directions".into());
    }
    let mut groups = 0;
    for sg in small_groups().unwrap() {
        let primes = oracle::util::prime_divisors(sg.group.order());
        if sg.group.size() > 200 || primes.len() < 2 {
            continue;
        }
        groups += 1;
        for r in primes {
            let rep =
                check_rfrattini(sg.name, &sg.group, r, &bounds(), &mut rng_from_seed(0)).unwrap();
            if !rep.holds {
                failures.push(format!("rfrattini {} r={r}", sg.name));
            }
        }
    }
    if groups < 10 {
        failures.push(format!("only {groups} small groups"));
    }
    let mut checked = 0;
    for d in diffs {
        for inv in d["oracle"]["invariants"].as_array().into_iter().flatten() {
            if INVARIANTS.contains(&inv["name"].as_str().unwrap()) {
                checked += 1;
                if inv["holds"] != true {
                    failures.push(format!("{} r={} {}", d["instance"], d["r"], inv["name"]));
                }
            }
        }
    }
    (
        failures,
        format!(
            "{} semidirect products, {groups} small groups, {checked} invariant checks",
            sds.len()
        ),
    )
}

#[test]
fn acceptance() {
    let mut out = Vec::new();
    let (f, d) = criterion_rpart();
    record(&mut out, 1, f, d);
    let (f, d) = criterion_zsigmondy();
    record(&mut out, 2, f, d);
    let first = verify_desk();
    let diffs: Vec<Value> = String::from_utf8(first.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let (f, d) = criterion_master(&first, &diffs);
    record(&mut out, 3, f, d);
    let (f, d) = criterion_spot_rows();
    record(&mut out, 4, f, d);
    let (f, d) = criterion_weak_subnormal();
    record(&mut out, 5, f, d);
    let (f, d) = criterion_or_h();
    record(&mut out, 6, f, d);
    let (f, d) = criterion_properties(&diffs);
    record(&mut out, 7, f, d);
    let second = verify_desk();
    let same = !first.stdout.is_empty() && first.stdout == second.stdout;
    let f = if same {
        Vec::new()
    } else {
        vec!["reports differ".to_string()]
    };
    record(
        &mut out,
        8,
        f,
        format!("{} identical bytes", first.stdout.len()),
    );

    for (c, reason) in UNATTAINABLE {
        println!("criterion {c}: known unattainable: {reason}");
    }
    let unexpected: Vec<String> = out
        .iter()
        .filter(|o| !o.pass && !UNATTAINABLE.iter().any(|(c, _)| *c == o.criterion))
        .map(|o| format!("criterion {}: {}", o.criterion, o.detail))
        .collect();
    assert!(unexpected.is_empty(), "{unexpected:?}");
}
