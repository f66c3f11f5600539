use psichar::chartab::character_table;
use psichar::plocal::*;
use psichar::verdict::Status;
use psichar::{zoo, FiniteGroup, GroupSpec};

fn group(spec: &str) -> FiniteGroup {
    zoo::build(spec).unwrap()
}

/// Oracle: every p-subgroup of a small group, by closing every subset
/// generated by at most two p-elements, then joining.
fn oracle_p_subgroup_count(g: &FiniteGroup, p: u64) -> usize {
    let p_elems: Vec<u32> = (1..g.order() as u32)
        .filter(|&x| psichar::arith::is_pi_number(g.elem_order(x), &[p]))
        .collect();
    let mut found: std::collections::BTreeSet<Vec<u32>> = Default::default();
    let mut frontier: Vec<psichar::Subgroup> = Vec::new();
    for &x in &p_elems {
        let s = g.generate(&[x]);
        if found.insert(s.elements().to_vec()) {
            frontier.push(s);
        }
    }
    while let Some(s) = frontier.pop() {
        for &x in &p_elems {
            let t = g.join(&s, x);
            if psichar::arith::is_pi_number(t.order(), &[p]) && found.insert(t.elements().to_vec()) {
                frontier.push(t);
            }
        }
    }
    found.len()
}

#[test]
fn poset_counts() {
    let g = group("sym:4");
    let poset = PSubgroupPoset::new(&g, 2, DEFAULT_POSET_CAP).unwrap();
    assert_eq!(poset.len(), 19);
    let stats = poset.stats(&g);
    assert_eq!(stats.subgroups_by_order[&2], 9);
    assert_eq!(stats.subgroups_by_order[&4], 7);
    assert_eq!(stats.subgroups_by_order[&8], 3);
    assert_eq!(PSubgroupPoset::new(&group("sym:3"), 3, 128).unwrap().len(), 1);
    assert_eq!(PSubgroupPoset::new(&group("sym:3"), 2, 128).unwrap().len(), 3);
    for (spec, p) in [("sym:4", 2), ("sym:5", 2), ("alt:5", 2), ("psl:2,7", 2), ("sym:5", 3), ("gl:2,3", 2)] {
        let g = group(spec);
        let poset = PSubgroupPoset::new(&g, p, 128).unwrap();
        assert_eq!(poset.len(), oracle_p_subgroup_count(&g, p), "{spec} p={p}");
    }
}

#[test]
fn cap_is_enforced() {
    let g = group("sym:8");
    assert!(matches!(PSubgroupPoset::new(&g, 2, 64), Err(psichar::Error::PosetCap { sylow: 128, cap: 64 })));
}

#[test]
fn chain_orbits_s3() {
    let g = group("sym:3");
    let poset = PSubgroupPoset::new(&g, 2, 128).unwrap();
    let orbits = poset.chain_orbits(&g, ChainMode::Sp);
    assert_eq!(orbits.len(), 2);
    assert!(orbits[0].is_empty());
    assert_eq!(orbits[0].stabilizer.order(), 6);
    assert_eq!(orbits[1].orbit_size, 3);
    assert_eq!(orbits[1].stabilizer.order(), 2);
}

#[test]
fn normal_chains_are_normal() {
    let g = group("sym:4");
    let poset = PSubgroupPoset::new(&g, 2, 128).unwrap();
    let np = poset.all_chains(ChainMode::Np);
    let sp = poset.all_chains(ChainMode::Sp);
    assert!(np.len() < sp.len());
    for c in &np {
        let top = poset.subgroup(*c.last().unwrap());
        for &i in c {
            assert!(g.is_normal_in(poset.subgroup(i), top));
        }
    }
    // with a Sylow of order p, both complexes are discrete
    let g = group("alt:5");
    let poset = PSubgroupPoset::new(&g, 5, 128).unwrap();
    assert_eq!(poset.all_chains(ChainMode::Np), poset.all_chains(ChainMode::Sp));
    assert!(poset.all_chains(ChainMode::Sp).iter().all(|c| c.len() == 1));
}

#[test]
fn steinberg_fixtures() {
    let g = group("sym:3");
    assert_eq!(steinberg_char(&g, 2, 128).unwrap().to_ints().unwrap(), vec![-2, 0, 1]);
    assert!(steinberg_char(&g, 3, 128).unwrap().is_zero());
    let g = group("cyclic:5");
    assert_eq!(steinberg_char(&g, 2, 128).unwrap(), psichar::chartab::ClassFunction::trivial(&g));
}

#[test]
fn reynolds_fixtures() {
    // N = C_2, Q = N, α trivial on N/Q
    let n = group("cyclic:2");
    let q = n.whole();
    let quotient = n.quotient(&n.whole(), &q).unwrap();
    assert_eq!(reynolds_transform(&n, &q, &quotient, &[1], 2), vec![2, 0]);
    // N = S_4, Q = V_4, α = St_2(S_3)
    let n = group("sym:4");
    let v4 = n.p_core(&n.whole(), 2);
    assert_eq!(v4.order(), 4);
    let quotient = n.quotient(&n.whole(), &v4).unwrap();
    let bar = &quotient.group;
    let st = steinberg_char(bar, 2, 128).unwrap().to_ints().unwrap();
    let cl = bar.classes();
    for k in 0..cl.len() {
        let want = match cl.elem_order(k) {
            1 => -2,
            2 => 0,
            _ => 1,
        };
        assert_eq!(st[k], want);
    }
    let beta = reynolds_transform(&n, &v4, &quotient, &st, 2);
    let ncl = n.classes();
    for k in 0..ncl.len() {
        let want = match ncl.elem_order(k) {
            1 => -8,
            3 => 1,
            _ => 0,
        };
        assert_eq!(beta[k], want);
    }
    // trivial Q truncates to p-regular classes
    let t = n.trivial();
    let quotient = n.quotient(&n.whole(), &t).unwrap();
    let alpha: Vec<i64> = (1..=quotient.group.num_classes() as i64).collect();
    let beta = reynolds_transform(&n, &t, &quotient, &alpha, 3);
    for k in 0..ncl.len() {
        let kb = quotient.group.classes().class_of(quotient.project(ncl.rep(k)));
        let want = if ncl.elem_order(k) % 3 == 0 { 0 } else { alpha[kb] };
        assert_eq!(beta[k], want);
    }
}

#[test]
fn s3_ledger() {
    let g = group("sym:3");
    let ctx = LocalContext::new(&g, 2, 128).unwrap();
    assert_eq!(ctx.steinberg, vec![-2, 0, 1]);
    let q_term = ctx.terms.iter().find(|t| t.subgroup.is_some()).unwrap();
    assert_eq!(q_term.induced_projective, vec![6, 0, 0]);
    assert_eq!(q_term.induced_steinberg, vec![3, 1, 0]);
    assert_eq!(psi_via_local(&g, &ctx.terms), vec![4, 0, 1]);
    let v = check_webb_inversion(&ctx);
    assert_eq!(v.witness["sum"], serde_json::json!([1, 1, 1]));
    let v = check_cor_11_4(&ctx);
    assert_eq!(v.witness["rhs"], serde_json::json!([3, -1, 0]));
}

#[test]
fn all_local_checks_pass() {
    for spec in ["sym:3", "sym:4", "alt:4", "alt:5", "sym:5", "psl:2,7", "cyclic:8", "dihedral:12", "sl:2,3", "psl:2,8"] {
        let g = group(spec);
        let t = character_table(&g).unwrap();
        let s: GroupSpec = spec.parse().unwrap();
        for p in psichar::arith::prime_divisors(g.order()) {
            for v in plocal_checks(&g, p, 128, Some(&s), &t) {
                assert!(!v.failed(), "{spec} p={p}: {} failed: {}", v.id, v.witness);
            }
        }
    }
}

#[test]
fn rank_one_steinberg_character() {
    for (spec, p) in [("psl:2,4", 2), ("psl:2,5", 5), ("psl:2,7", 7), ("psl:2,8", 2), ("psl:2,9", 3)] {
        let g = group(spec);
        let t = character_table(&g).unwrap();
        let s: GroupSpec = spec.parse().unwrap();
        let v = check_thm_11_6(&g, p, Some(&s), &t);
        assert_eq!(v.status, Status::Pass, "{spec}: {}", v.witness);
    }
    let g = group("psl:2,4");
    assert_eq!(rank_one_steinberg(&g, 2).to_ints().unwrap()[0], 4);
    let t = character_table(&g).unwrap();
    let v = check_thm_11_6(&g, 3, Some(&"psl:2,4".parse().unwrap()), &t);
    assert_eq!(v.status, Status::NotApplicable);
}

#[test]
fn cap_overflow_marks_not_applicable() {
    let g = group("sym:4");
    let t = character_table(&g).unwrap();
    let vs = plocal_checks(&g, 2, 4, None, &t);
    assert!(vs.iter().all(|v| v.status == Status::NotApplicable));
}
