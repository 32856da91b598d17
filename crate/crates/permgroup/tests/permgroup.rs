use std::collections::HashSet;

use num_bigint::BigUint;
use permgroup::*;
use proptest::prelude::*;

fn cyc(n: usize, cycles: &[&[u32]]) -> Perm {
    Perm::from_cycles(n, cycles).unwrap()
}

fn sym(n: usize) -> PermGroup {
    let a: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cyc(n, &[&a]), cyc(n, &[&[0, 1]])]).unwrap()
}

fn alt(n: usize) -> PermGroup {
    let gens = (2..n as u32).map(|k| cyc(n, &[&[0, 1, k]])).collect();
    PermGroup::new(n, gens).unwrap()
}

fn group(n: usize, gens: Vec<Perm>) -> PermGroup {
    PermGroup::new(n, gens).unwrap()
}

/// Closure of a generating set by breadth-first multiplication.
fn naive_closure(n: usize, gens: &[Perm]) -> HashSet<Perm> {
    let mut set = HashSet::new();
    let mut queue = vec![Perm::identity(n)];
    set.insert(Perm::identity(n));
    while let Some(x) = queue.pop() {
        for s in gens {
            let y = x.mul(s);
            if set.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    set
}

/// `PSL₂(p)` on the projective line `{0..p-1, ∞ = p}` for a prime `p`.
fn psl2_prime(p: u32, lambda: u32) -> PermGroup {
    let n = p as usize + 1;
    let inf = p;
    let inv = |t: u32| (1..p).find(|&x| x * t % p == 1).unwrap();
    let map = |f: &dyn Fn(u32) -> u32| Perm::from_images((0..=p).map(f).collect()).unwrap();
    let shift = map(&|t| if t == inf { inf } else { (t + 1) % p });
    let l2 = lambda * lambda % p;
    let scale = map(&|t| if t == inf { inf } else { t * l2 % p });
    let flip = map(&|t| {
        if t == inf {
            0
        } else if t == 0 {
            inf
        } else {
            (p - inv(t)) % p
        }
    });
    group(n, vec![shift, scale, flip])
}

fn bounds() -> Bounds {
    Bounds::default()
}

fn rng() -> GroupRng {
    rng_from_seed(7)
}

#[test]
fn perm_basics() {
    let x = cyc(5, &[&[0, 1, 2]]);
    let y = cyc(5, &[&[1, 3]]);
    assert_eq!(x.mul(&y).apply(0), 3);
    assert_eq!(x.order(), 3);
    assert_eq!(x.pow(3), Perm::identity(5));
    assert_eq!(x.mul(&x.inv()), Perm::identity(5));
    assert_eq!(format!("{x}"), "(0,1,2)");
    assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    assert!(x.is_even());
    assert!(!y.is_even());
}

#[test]
fn build_group_examples() {
    assert_eq!(alt(5).size(), 60);
    assert_eq!(psl2_prime(17, 3).size(), 2448);
    let t = PermGroup::new(5, vec![]).unwrap();
    assert_eq!(t.size(), 1);
    assert!(PermGroup::new(5, vec![Perm::identity(4)]).is_err());
}

#[test]
fn orders_of_symmetric_and_alternating_groups() {
    for n in 3..=10usize {
        let fact: u64 = (1..=n as u64).product();
        assert_eq!(sym(n).size(), fact, "S{n}");
        assert_eq!(alt(n).size(), fact / 2, "A{n}");
    }
}

#[test]
fn orders_of_psl2_prime() {
    for (p, l) in [
        (5u32, 2u32),
        (7, 3),
        (11, 2),
        (13, 2),
        (19, 2),
        (23, 5),
        (29, 2),
        (31, 3),
    ] {
        let expected = p as u64 * (p as u64 * p as u64 - 1) / 2;
        assert_eq!(psl2_prime(p, l).size(), expected, "L2({p})");
    }
}

#[test]
fn known_order_build_is_exact() {
    let g = alt(7);
    let gens = g.generators().to_vec();
    let mut r = rng();
    let h = PermGroup::with_order(7, gens.clone(), &BigUint::from(2520u32), &mut r).unwrap();
    assert_eq!(h.size(), 2520);
    let wrong = PermGroup::with_order(7, gens, &BigUint::from(5040u32), &mut r);
    assert!(matches!(wrong, Err(PermError::TargetNotReached { .. })));
}

#[test]
fn elements_are_distinct_members() {
    let g = sym(5);
    let elems = g.elements();
    let set: HashSet<&Perm> = elems.iter().collect();
    assert_eq!(set.len(), 120);
    assert!(elems.iter().all(|e| g.contains(e)));
}

#[test]
fn sylow_examples() {
    let mut r = rng();
    let s = sylow_subgroup(&alt(5), 2, &bounds(), &mut r).unwrap();
    assert_eq!(s.size(), 4);
    assert_eq!(
        sylow_subgroup(&alt(5), 7, &bounds(), &mut r)
            .unwrap()
            .size(),
        1
    );
    for (n, p) in [(8usize, 2u64), (9, 3), (10, 2), (10, 3), (10, 5), (7, 7)] {
        let g = sym(n);
        let s = sylow_subgroup(&g, p, &bounds(), &mut r).unwrap();
        assert_eq!(s.size(), r_part(g.size(), p), "S{n} p={p}");
        assert!(s.is_subgroup_of(&g));
        assert!(s.is_p_group(p));
    }
}

#[test]
fn normalizer_examples() {
    let mut r = rng();
    let s4 = sym(4);
    let c4 = group(4, vec![cyc(4, &[&[0, 1, 2, 3]])]);
    assert_eq!(normalizer(&s4, &c4, &bounds(), &mut r).unwrap().size(), 8);
    let a5 = alt(5);
    let c5 = group(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]);
    assert_eq!(normalizer(&a5, &c5, &bounds(), &mut r).unwrap().size(), 10);
}

#[test]
fn normalizer_matches_brute_force() {
    let mut r = rng();
    let g = sym(5);
    let elems = g.elements();
    let subgroups = [
        vec![cyc(5, &[&[0, 1]])],
        vec![cyc(5, &[&[0, 1, 2]])],
        vec![cyc(5, &[&[0, 1], &[2, 3]]), cyc(5, &[&[0, 2], &[1, 3]])],
        vec![cyc(5, &[&[0, 1, 2, 3]])],
        vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[3, 4]])],
    ];
    for gens in subgroups {
        let h = group(5, gens);
        let hs: HashSet<Perm> = h.elements().into_iter().collect();
        let brute = elems
            .iter()
            .filter(|t| hs.iter().all(|x| hs.contains(&x.conj(t))))
            .count() as u64;
        assert_eq!(normalizer(&g, &h, &bounds(), &mut r).unwrap().size(), brute);
    }
}

#[test]
fn point_stabilizer_orders() {
    let mut r = rng();
    let g = psl2_prime(13, 2);
    let st = point_stabilizer(&g, 13, &mut r).unwrap();
    assert_eq!(st.size(), 78);
    assert!(st.generators().iter().all(|x| x.apply(13) == 13));
}

#[test]
fn coset_action_kernel_examples() {
    let mut r = rng();
    let s4 = sym(4);
    let s3 = group(4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1]])]);
    let (img, ker) = coset_action_kernel(&s4, &s3, &bounds(), &mut r).unwrap();
    assert_eq!((img.degree(), img.size(), ker.size()), (4, 24, 1));

    let d8 = group(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]);
    let (img, ker) = coset_action_kernel(&s4, &d8, &bounds(), &mut r).unwrap();
    assert_eq!((img.degree(), img.size(), ker.size()), (3, 6, 4));

    let a4 = alt(4);
    let c3 = group(4, vec![cyc(4, &[&[0, 1, 2]])]);
    let (_, ker) = coset_action_kernel(&a4, &c3, &bounds(), &mut r).unwrap();
    assert!(ker.is_trivial());
}

#[test]
fn coset_bound_is_enforced() {
    let g = sym(8);
    let t = PermGroup::trivial(8);
    let tight = Bounds {
        max_cosets: 100,
        ..Bounds::default()
    };
    assert!(matches!(
        CosetSpace::new(&g, &t, &tight),
        Err(PermError::BoundExceeded { .. })
    ));
}

#[test]
fn double_coset_examples() {
    let s3 = sym(3);
    let c2 = group(3, vec![cyc(3, &[&[0, 1]])]);
    let reps = double_coset_reps(&s3, &c2, &bounds()).unwrap();
    assert_eq!(reps.len(), 2);
    assert!(reps[0].is_identity());
    assert_eq!(double_coset_reps(&s3, &s3, &bounds()).unwrap().len(), 1);
}

/// Number of double cosets by collecting the sets `RgR` directly.
fn brute_double_cosets(g: &PermGroup, r: &PermGroup) -> usize {
    let relems = r.elements();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut count = 0;
    for x in g.elements() {
        if seen.contains(&x) {
            continue;
        }
        count += 1;
        for a in &relems {
            for b in &relems {
                seen.insert(a.mul(&x).mul(b));
            }
        }
    }
    count
}

#[test]
fn double_cosets_match_brute_force() {
    let mut r = rng();
    for (g, p) in [
        (alt(5), 2u64),
        (alt(5), 3),
        (sym(5), 2),
        (psl2_prime(7, 3), 2),
        (alt(6), 3),
    ] {
        let s = sylow_subgroup(&g, p, &bounds(), &mut r).unwrap();
        let dc = double_cosets(&g, &s, &bounds()).unwrap();
        assert_eq!(dc.reps.len(), brute_double_cosets(&g, &s));
        let total: usize = dc.sizes.iter().sum();
        assert_eq!(total as u64, g.size() / s.size());
    }
}

#[test]
fn maximal_overgroup_examples() {
    let mut r = rng();
    let a5 = alt(5);
    let p2 = sylow_subgroup(&a5, 2, &bounds(), &mut r).unwrap();
    let m = maximal_overgroups(&a5, &p2, &bounds(), &mut r).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].size(), 12);

    let a7 = alt(7);
    let p7 = sylow_subgroup(&a7, 7, &bounds(), &mut r).unwrap();
    let m = maximal_overgroups(&a7, &p7, &bounds(), &mut r).unwrap();
    assert!(m.len() >= 2);
    assert_eq!(
        conjugacy_classes_of_overgroups(&a7, &p7, &m, &bounds(), &mut r).unwrap(),
        2
    );

    let s3 = sym(3);
    let p3 = sylow_subgroup(&s3, 3, &bounds(), &mut r).unwrap();
    let m = maximal_overgroups(&s3, &p3, &bounds(), &mut r).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].size(), 3);
}

#[test]
fn maximal_sylow_is_its_own_overgroup() {
    let mut r = rng();
    let s3 = sym(3);
    let p2 = sylow_subgroup(&s3, 2, &bounds(), &mut r).unwrap();
    let m = maximal_overgroups(&s3, &p2, &bounds(), &mut r).unwrap();
    assert_eq!(m.len(), 1);
    assert!(m[0].same_group(&p2));
}

#[test]
fn overgroups_are_maximal_and_complete() {
    let mut r = rng();
    for (g, p) in [
        (alt(6), 2u64),
        (sym(5), 3),
        (psl2_prime(11, 2), 2),
        (psl2_prime(13, 2), 3),
        (alt(7), 3),
    ] {
        let s = sylow_subgroup(&g, p, &bounds(), &mut r).unwrap();
        let search = overgroup_search(&g, &s, &bounds(), &mut r).unwrap();
        assert!(search.completeness);
        for h in &search.members {
            assert!(s.is_subgroup_of(h));
            for x in &search.double_cosets.reps {
                if !h.contains(x) {
                    assert_eq!(
                        h.join(std::slice::from_ref(x), &mut r).unwrap().order(),
                        g.order()
                    );
                }
            }
        }
        for (i, a) in search.members.iter().enumerate() {
            for b in search.members.iter().skip(i + 1) {
                assert!(!a.is_subgroup_of(b) && !b.is_subgroup_of(a));
            }
        }
    }
}

/// Maximal subgroups of a group whose subgroups are all 2-generated, from
/// the closures of every pair of elements.
fn brute_maximal_subgroups(g: &PermGroup) -> Vec<HashSet<Perm>> {
    let n = g.degree();
    let elems = g.elements();
    let mut subs: Vec<HashSet<Perm>> = Vec::new();
    for a in &elems {
        for b in &elems {
            let s = naive_closure(n, &[a.clone(), b.clone()]);
            if s.len() as u64 != g.size() && !subs.contains(&s) {
                subs.push(s);
            }
        }
    }
    subs.iter()
        .filter(|s| !subs.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .cloned()
        .collect()
}

#[test]
fn maximal_subgroups_small_examples() {
    let mut r = rng();
    let orders = |g: &PermGroup| {
        let mut v: Vec<u64> = maximal_subgroups_small(g, &bounds(), &mut rng())
            .unwrap()
            .iter()
            .map(|h| h.size())
            .collect();
        v.sort_unstable();
        v
    };
    assert_eq!(orders(&sym(4)), vec![6, 6, 6, 6, 8, 8, 8, 12]);
    assert_eq!(orders(&alt(4)), vec![3, 3, 3, 3, 4]);
    let c6 = group(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]);
    assert_eq!(orders(&c6), vec![2, 3]);
    let c5 = group(5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]);
    assert_eq!(orders(&c5), vec![1]);
    let _ = &mut r;
}

#[test]
fn maximal_subgroups_match_brute_force() {
    for g in [
        sym(4),
        alt(4),
        alt(5),
        group(
            6,
            vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]]), cyc(6, &[&[1, 5], &[2, 4]])],
        ),
    ] {
        let found = maximal_subgroups_small(&g, &bounds(), &mut rng()).unwrap();
        let brute = brute_maximal_subgroups(&g);
        assert_eq!(found.len(), brute.len());
        for h in &found {
            let hs: HashSet<Perm> = h.elements().into_iter().collect();
            assert!(brute.contains(&hs));
        }
    }
}

#[test]
fn cores_and_closures() {
    let mut r = rng();
    let s4 = sym(4);
    assert_eq!(pcore(&s4, 2, &bounds(), &mut r).unwrap().size(), 4);
    assert_eq!(pcore(&s4, 3, &bounds(), &mut r).unwrap().size(), 1);
    let t = group(4, vec![cyc(4, &[&[0, 1]])]);
    assert_eq!(normal_closure(&s4, &t, &mut r).unwrap().size(), 24);
    let v = group(4, vec![cyc(4, &[&[0, 1], &[2, 3]])]);
    assert_eq!(normal_closure(&s4, &v, &mut r).unwrap().size(), 4);
    let d8 = group(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]);
    assert_eq!(core(&s4, &d8, &bounds()).unwrap().size(), 4);
    let reps = CosetSpace::new(&s4, &d8, &bounds())
        .unwrap()
        .reps()
        .to_vec();
    assert_eq!(core_by_reps(&d8, &reps, &bounds()).unwrap().size(), 4);
    assert_eq!(frattini_small(&s4, &bounds(), &mut r).unwrap().size(), 1);
    let c4 = group(4, vec![cyc(4, &[&[0, 1, 2, 3]])]);
    assert_eq!(frattini_small(&c4, &bounds(), &mut r).unwrap().size(), 2);
}

#[test]
fn conjugate_group_has_conjugated_chain() {
    let g = psl2_prime(11, 2);
    let t = cyc(12, &[&[0, 5, 7], &[1, 11]]);
    let h = g.conjugate(&t);
    assert_eq!(h.order(), g.order());
    for x in g.generators() {
        assert!(h.contains(&x.conj(&t)));
    }
    let y = cyc(12, &[&[0, 1]]);
    assert_eq!(h.contains(&y), g.contains(&y.conj(&t.inv())));
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_group_axioms(a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert_eq!(a.mul(&b).inv(), b.inv().mul(&a.inv()));
        prop_assert_eq!(a.mul(&b).conj(&c), a.conj(&c).mul(&b.conj(&c)));
        prop_assert!(a.pow(a.order()).is_identity());
    }

    #[test]
    fn chain_order_matches_closure(gens in prop::collection::vec(arb_perm(6), 1..3), probe in arb_perm(6)) {
        let g = PermGroup::new(6, gens.clone()).unwrap();
        let closure = naive_closure(6, &gens);
        prop_assert_eq!(g.size(), closure.len() as u64);
        prop_assert_eq!(g.contains(&probe), closure.contains(&probe));
        let prod: u64 = g.basic_orbit_lengths().iter().map(|&l| l as u64).product();
        prop_assert_eq!(prod, g.size());
    }

    #[test]
    fn sylow_has_full_r_part(gens in prop::collection::vec(arb_perm(7), 1..3), pi in 0usize..3, seed in 0u64..1000) {
        let p = [2u64, 3, 5][pi];
        let g = PermGroup::new(7, gens).unwrap();
        let mut r = rng_from_seed(seed);
        let s = sylow_subgroup(&g, p, &Bounds::default(), &mut r).unwrap();
        prop_assert_eq!(s.size(), r_part(g.size(), p));
        prop_assert!(s.is_subgroup_of(&g));
    }

    #[test]
    fn random_elements_are_members(seed in 0u64..1000) {
        let g = psl2_prime(13, 2);
        let mut r = rng_from_seed(seed);
        let x = g.random_element(&mut r);
        prop_assert!(g.contains(&x));
    }
}
