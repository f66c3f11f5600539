use psichar::perm::{parse_group_file, FiniteGroup, Permutation};

fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).unwrap()
}

fn group(n: usize, gens: &[&str]) -> FiniteGroup {
    FiniteGroup::new(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
}

fn sym(n: usize) -> FiniteGroup {
    let cyc: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    group(n, &["(1,2)", &format!("({})", cyc.join(","))])
}

fn alt5() -> FiniteGroup {
    group(5, &["(1,2,3)", "(1,2,3,4,5)"])
}

/// Brute-force class sizes: orbit of each element under conjugation by every element.
fn brute_class_sizes(g: &FiniteGroup) -> Vec<u64> {
    let n = g.order() as u32;
    let mut seen = vec![false; n as usize];
    let mut sizes = Vec::new();
    for x in 0..n {
        if seen[x as usize] {
            continue;
        }
        let mut orbit: Vec<u32> = (0..n).map(|y| g.conj(x, y)).collect();
        orbit.sort();
        orbit.dedup();
        for &o in &orbit {
            seen[o as usize] = true;
        }
        sizes.push(orbit.len() as u64);
    }
    sizes.sort();
    sizes
}

#[test]
fn build_group_orders() {
    assert_eq!(group(5, &["(1,2)", "(1,2,3,4,5)"]).order(), 120);
    assert_eq!(FiniteGroup::new(3, vec![]).unwrap().order(), 1);
    assert_eq!(alt5().order(), 60);
    let err = FiniteGroup::new(3, vec![p("(1,2)", 4)]);
    assert!(err.is_err());
}

#[test]
fn bsgs_order_matches_enumeration() {
    let g = sym(5);
    let prod: u64 = g.bsgs().orbit_lengths().iter().product();
    assert_eq!(prod, g.order());
    for gen in g.generators() {
        assert!(g.contains(gen));
    }
    assert!(g.contains(&Permutation::identity(5)));
    assert!(!alt5().contains(&p("(1,2)", 5)));
}

#[test]
fn class_structure() {
    let s3 = sym(3);
    assert_eq!(s3.classes().sizes(), &[1, 3, 2]);
    let c4 = group(4, &["(1,2,3,4)"]);
    assert_eq!(c4.classes().sizes(), &[1, 1, 1, 1]);
    let a5 = alt5();
    assert_eq!(a5.classes().sizes(), &[1, 15, 20, 12, 12]);
    let mut sizes = a5.classes().sizes().to_vec();
    sizes.sort();
    assert_eq!(sizes, brute_class_sizes(&a5));
    let s5 = sym(5);
    let mut sizes = s5.classes().sizes().to_vec();
    sizes.sort();
    assert_eq!(sizes, brute_class_sizes(&s5));
}

#[test]
fn class_invariants() {
    for g in [sym(4), alt5(), sym(5)] {
        let cl = g.classes();
        assert_eq!(cl.sizes().iter().sum::<u64>(), g.order());
        for k in 0..cl.len() {
            assert_eq!(cl.size(k) * cl.centralizer_order(k), g.order());
            assert_eq!(g.centralizer(cl.rep(k)).order(), cl.centralizer_order(k));
            assert_eq!(cl.power(k, 1), k);
            // representative is minimal in its class
            assert_eq!(cl.members(k)[0], cl.rep(k));
        }
    }
}

#[test]
fn centralizers_by_scan() {
    let s4 = sym(4);
    let x = s4.index_of(&p("(1,2)(3,4)", 4)).unwrap();
    assert_eq!(s4.centralizer(x).order(), 8);
    assert_eq!(s4.centralizer(0).order(), 24);
    let s3 = sym(3);
    let x = s3.index_of(&p("(1,2,3)", 3)).unwrap();
    assert_eq!(s3.centralizer(x).order(), 3);
}

#[test]
fn normalizers() {
    let a5 = alt5();
    let s2 = a5.sylow(2);
    assert_eq!(s2.order(), 4);
    assert_eq!(a5.normalizer(&s2).order(), 12);
    assert_eq!(a5.normalizer(&a5.whole()).order(), 60);
    let s3 = sym(3);
    let t = s3.subgroup_of(&[p("(1,2)", 3)]).unwrap();
    assert_eq!(s3.normalizer(&t).order(), 2);
}

#[test]
fn sylow_orders() {
    let s4 = sym(4);
    assert_eq!(s4.sylow(2).order(), 8);
    assert_eq!(s4.sylow(5).order(), 1);
    assert_eq!(alt5().sylow(5).order(), 5);
    assert_eq!(sym(6).sylow(2).order(), 16);
    assert_eq!(sym(6).sylow(3).order(), 9);
}

#[test]
fn pi_parts() {
    let c6 = group(6, &["(1,2,3,4,5,6)"]);
    let g = c6.index_of(&p("(1,2,3,4,5,6)", 6)).unwrap();
    let d = c6.pi_part(g, &[2]);
    assert_eq!(d.pi_part, c6.pow(g, 3));
    assert_eq!(d.pi_prime_part, c6.pow(g, 4));
    let d = c6.pi_part(0, &[2]);
    assert_eq!((d.pi_part, d.pi_prime_part), (0, 0));
    let a5 = alt5();
    let f = a5.index_of(&p("(1,2,3,4,5)", 5)).unwrap();
    let d = a5.pi_part(f, &[2, 3]);
    assert_eq!((d.pi_part, d.pi_prime_part), (0, f));
}

#[test]
fn pi_parts_commute_and_multiply_back() {
    let s5 = sym(5);
    for pi in [vec![2], vec![3], vec![2, 3], vec![5], vec![2, 5]] {
        for x in 0..s5.order() as u32 {
            let d = s5.pi_part(x, &pi);
            assert!(s5.commute(d.pi_part, d.pi_prime_part));
            assert_eq!(s5.mul(d.pi_part, d.pi_prime_part), x);
            assert!(psichar::arith::is_pi_number(s5.elem_order(d.pi_part), &pi));
            assert_eq!(psichar::arith::pi_part(s5.elem_order(d.pi_prime_part), &pi), 1);
        }
    }
}

#[test]
fn pi_element_counts() {
    assert_eq!(sym(4).count_pi_elements(&sym(4).whole(), &[2]), 16);
    let c5 = group(5, &["(1,2,3,4,5)"]);
    assert_eq!(c5.count_pi_elements(&c5.whole(), &[2]), 1);
    assert_eq!(sym(3).count_pi_elements(&sym(3).whole(), &[2]), 4);
}

#[test]
fn normal_complements() {
    let s3 = sym(3);
    assert!(s3.has_normal_pi_complement(&s3.whole(), &[2]));
    let s4 = sym(4);
    assert!(!s4.has_normal_pi_complement(&s4.whole(), &[2]));
    let c5 = group(5, &["(1,2,3,4,5)"]);
    assert!(c5.has_normal_pi_complement(&c5.whole(), &[2]));
}

#[test]
fn subgroup_search() {
    let a5 = alt5();
    let n = a5.normalizer(&a5.sylow(5));
    assert_eq!(n.order(), 10);
    let t = a5.find_subgroup_of_order(&n, 2).unwrap().unwrap();
    assert_eq!(t.order(), 2);
    assert!(t.is_subset(&n));
    assert!(a5.find_subgroup_of_order(&n, 1).unwrap().unwrap().is_trivial());
    let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
    assert!(a4.find_subgroup_of_order(&a4.whole(), 6).unwrap().is_none());
    assert!(a4.find_subgroup_of_order(&a4.whole(), 5).is_err());
}

#[test]
fn quotients() {
    let s4 = sym(4);
    let v4 = s4.subgroup_of(&[p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]).unwrap();
    let q = s4.quotient(&s4.whole(), &v4).unwrap();
    assert_eq!(q.group.order(), 6);
    assert!(!q.group.is_abelian());
    let all = s4.whole();
    assert_eq!(s4.quotient(&all, &all).unwrap().group.order(), 1);
    let c2 = group(2, &["(1,2)"]);
    assert_eq!(c2.quotient(&c2.whole(), &c2.trivial()).unwrap().group.order(), 2);
    let t = s4.subgroup_of(&[p("(1,2)", 4)]).unwrap();
    assert!(s4.quotient(&all, &t).is_err());
}

#[test]
fn quotient_projection_is_homomorphism() {
    let s4 = sym(4);
    let v4 = s4.subgroup_of(&[p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]).unwrap();
    let q = s4.quotient(&s4.whole(), &v4).unwrap();
    for a in 0..24 {
        for b in 0..24 {
            assert_eq!(q.project(s4.mul(a, b)), q.group.mul(q.project(a), q.project(b)));
        }
    }
}

#[test]
fn sections() {
    let s3 = sym(3);
    // classes: identity, transpositions, 3-cycles
    assert_eq!(s3.pi_sections(&[2]), vec![0, 1, 0]);
    let s4 = sym(4);
    let cl = s4.classes();
    let sec = s4.pi_sections(&[2]);
    // size of the 2'-section of y equals [G:C(y)] times the 2-element count of C(y)
    for y in cl.pi_regular(&[2]) {
        let section: u64 = (0..cl.len())
            .filter(|&k| s4.pi_sections(&[3])[k] == y)
            .map(|k| cl.size(k))
            .sum();
        let c = s4.centralizer(cl.rep(y));
        assert_eq!(section, cl.size(y) * s4.count_pi_elements(&c, &[2]));
    }
    assert_eq!(sec.len(), cl.len());
}

#[test]
fn group_file_parsing() {
    let g = parse_group_file("# S_4\n(1,2)\n(1,2,3,4)\n", None).unwrap();
    assert_eq!(g.order(), 24);
    assert!(parse_group_file("(1,2\n", None).is_err());
}
