use num_bigint::BigUint;
use psichar::chartab::{character_table, ClassFunction};
use psichar::psi::*;
use psichar::verdict::Status;
use psichar::{zoo, FiniteGroup, GroupSpec, Permutation};

fn group(spec: &str) -> FiniteGroup {
    zoo::build(spec).unwrap()
}

fn pi(s: &str) -> PiSpec {
    s.parse().unwrap()
}

fn is_pi_order(n: u64, primes: &[u64]) -> bool {
    let mut n = n;
    for &p in primes {
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

fn coprime_to(n: u64, primes: &[u64]) -> bool {
    primes.iter().all(|p| n % p != 0)
}

/// Oracle: scan all elements commuting with each class representative.
fn oracle_centralizer_counts(g: &FiniteGroup, primes: &[u64]) -> Vec<i64> {
    let els = g.elements();
    let cl = g.classes();
    (0..cl.len())
        .map(|k| {
            let y = g.element(cl.rep(k));
            if !coprime_to(y.order(), primes) {
                return 0;
            }
            els.iter()
                .filter(|x| x.then(y) == y.then(x) && is_pi_order(x.order(), primes))
                .count() as i64
        })
        .collect()
}

/// Oracle: raise every permutation to the n-th power and count hits on each
/// class representative.
fn oracle_root_counts(g: &FiniteGroup, n: u64) -> Vec<i64> {
    let cl = g.classes();
    let reps: Vec<&Permutation> = (0..cl.len()).map(|k| g.element(cl.rep(k))).collect();
    let mut counts = vec![0i64; reps.len()];
    for y in g.elements() {
        let z = y.pow((n % y.order()) as i64);
        if let Some(k) = reps.iter().position(|r| **r == z) {
            counts[k] += 1;
        }
    }
    counts
}

fn hall(order: u64, primes: &[u64]) -> u64 {
    let mut h = 1;
    let mut n = order;
    for &p in primes {
        while n % p == 0 {
            n /= p;
            h *= p;
        }
    }
    h
}

#[test]
fn pi_spec_parsing() {
    assert_eq!(pi("3, 2,3").primes(), &[2, 3]);
    assert_eq!(pi("5").single(), Some(5));
    assert_eq!(pi("2,3").to_string(), "2,3");
    assert!("4".parse::<PiSpec>().is_err());
    assert!("".parse::<PiSpec>().is_err());
    assert!("2,x".parse::<PiSpec>().is_err());
}

#[test]
fn psi_fixtures() {
    let cases: &[(&str, &str, &[i64])] = &[
        ("sym:3", "2", &[4, 0, 1]),
        ("sym:3", "3", &[3, 1, 0]),
        ("alt:4", "2", &[4, 0, 1, 1]),
        ("cyclic:4", "2", &[4, 0, 0, 0]),
    ];
    for &(spec, p, want) in cases {
        let g = group(spec);
        let psi = psi_by_centralizer(&g, &pi(p));
        assert_eq!(psi.to_ints().unwrap(), want, "{spec} p={p}");
        assert_eq!(oracle_centralizer_counts(&g, pi(p).primes()), want);
        assert_eq!(psi_by_roots(&g, &pi(p)), psi);
    }
}

#[test]
fn sym5_pi_23() {
    let g = group("sym:5");
    let psi = psi_by_roots(&g, &pi("2,3")).to_ints().unwrap();
    let cl = g.classes();
    for k in 0..cl.len() {
        let want = match cl.elem_order(k) {
            1 => 96,
            5 => 1,
            _ => 0,
        };
        assert_eq!(psi[k], want);
    }
    assert_eq!(psi, oracle_root_counts(&g, 24));
}

#[test]
fn psi_matches_oracles_on_small_groups() {
    for spec in ["sym:4", "alt:5", "dihedral:12", "dicyclic:12", "psl:2,7", "sl:2,5", "cyclic:6*sym:3"] {
        let g = group(spec);
        for p in psichar::arith::prime_divisors(g.order()) {
            let primes = [p];
            let pi = PiSpec::prime(p).unwrap();
            let want = oracle_centralizer_counts(&g, &primes);
            assert_eq!(psi_by_centralizer(&g, &pi).to_ints().unwrap(), want, "{spec} p={p}");
            assert_eq!(oracle_root_counts(&g, hall(g.order(), &primes)), want);
            let q = choose_q(g.order(), p);
            let q_mod = psichar::arith::big_mod(&q, g.exponent());
            assert_eq!(oracle_root_counts(&g, q_mod), want, "{spec} q-th roots");
            assert_eq!(root_count_function(&g, &q).to_ints().unwrap(), want);
        }
    }
}

#[test]
fn choose_q_values() {
    assert_eq!(choose_q(6, 2), BigUint::from(4u32));
    assert_eq!(choose_q(60, 2), BigUint::from(16u32));
    assert_eq!(choose_q(16, 2), BigUint::from(16u32));
    assert_eq!(choose_q(27, 3), BigUint::from(27u32));
    // q ≡ 1 mod |G|_p' and |G|_p | q
    for (order, p) in [(720u64, 2u64), (720, 3), (5616, 13), (2184, 3), (1092, 2)] {
        let q = choose_q(order, p);
        let m = psichar::arith::pi_prime_part(order, &[p]);
        let s = psichar::arith::pi_part(order, &[p]);
        assert_eq!(psichar::arith::big_mod(&q, m), 1 % m);
        assert_eq!(psichar::arith::big_mod(&q, s), 0);
    }
}

#[test]
fn nu_fixtures() {
    let g = group("sym:3");
    let t = character_table(&g).unwrap();
    assert_eq!(nu_coefficients(&g, &t, &pi("2")).unwrap(), vec![1, 1, 1]);
    assert_eq!(nu_coefficients(&g, &t, &pi("3")).unwrap(), vec![1, 0, 1]);
    let g = group("cyclic:15");
    let t = character_table(&g).unwrap();
    let nu = nu_coefficients(&g, &t, &pi("2")).unwrap();
    assert_eq!(nu[0], 1);
    assert!(nu[1..].iter().all(|&v| v == 0));
}

#[test]
fn lambda_fixtures() {
    let g = group("sym:3");
    assert_eq!(lambda_char(&g, &pi("2")).to_ints().unwrap(), vec![6, 0, 3]);
    let g = group("alt:5");
    assert_eq!(lambda_char(&g, &pi("5")).to_ints().unwrap(), vec![60, 4, 3, 0, 0]);
    let g = group("sym:4");
    assert_eq!(lambda_char(&g, &pi("2,3")), ClassFunction::regular(&g));
}

fn verdicts(spec: &str, p: &str) -> Vec<psichar::verdict::Verdict> {
    let g = group(spec);
    let t = character_table(&g).unwrap();
    let s: GroupSpec = spec.parse().unwrap();
    let ctx = PsiContext::new(&g, &t, pi(p), Some(s));
    psi_checks(&ctx)
}

fn status(vs: &[psichar::verdict::Verdict], id: &str) -> Status {
    vs.iter().find(|v| v.id == id).unwrap_or_else(|| panic!("no check {id}")).status
}

#[test]
fn checks_pass_on_small_corpus() {
    for spec in ["sym:3", "sym:4", "alt:4", "alt:5", "cyclic:6", "cyclic:8", "cyclic:15", "dihedral:10", "sl:2,5", "psl:2,7"] {
        let g = group(spec);
        for p in psichar::arith::prime_divisors(g.order()) {
            for v in verdicts(spec, &p.to_string()) {
                assert!(!v.failed(), "{spec} p={p}: {} failed: {}", v.id, v.witness);
            }
        }
    }
    for spec in ["sym:4", "alt:4", "sym:3"] {
        for p in ["2,3", "2,5", "3,5"] {
            for v in verdicts(spec, p) {
                assert!(!v.failed(), "{spec} π={p}: {} failed: {}", v.id, v.witness);
            }
        }
    }
}

#[test]
fn thm_9_1_worked_instance() {
    let vs = verdicts("sym:3", "2");
    let v = vs.iter().find(|v| v.id == "thm_9_1").unwrap();
    assert_eq!(v.status, Status::Pass);
    assert_eq!(v.witness["ind_t"], serde_json::json!(["6", "0", "0"]));
    assert_eq!(v.witness["ind_h"], serde_json::json!(["3", "1", "0"]));
    assert_eq!(v.witness["rhs"], serde_json::json!(["4", "0", "1"]));
    assert_eq!(status(&verdicts("alt:5", "5"), "thm_9_1"), Status::Pass);
    assert_eq!(status(&verdicts("sym:4", "2"), "thm_9_1"), Status::NotApplicable);
}

#[test]
fn thm_8_1_sums() {
    let vs = verdicts("sym:4", "2");
    let v = vs.iter().find(|v| v.id == "thm_8_1").unwrap();
    assert_eq!(v.status, Status::Pass);
    let g = group("sym:4");
    let t = character_table(&g).unwrap();
    // degrees in canonical order are 1,1,2,3,3
    assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
    assert_eq!(v.witness["multiplicities"], serde_json::json!(["2", "2", "1", "3", "3"]));
    let v = verdicts("sym:3", "3");
    let v = v.iter().find(|v| v.id == "thm_8_1").unwrap();
    assert_eq!(v.witness["multiplicities"], serde_json::json!(["2", "0", "2"]));
    assert_eq!(status(&verdicts("alt:5", "2"), "thm_8_1"), Status::NotApplicable);
}

#[test]
fn pi_separability() {
    assert!(is_pi_separable(&group("sym:4"), &[2]));
    assert!(!is_pi_separable(&group("alt:5"), &[2]));
    assert!(is_pi_separable(&group("alt:5"), &[2, 3, 5]));
    assert!(is_pi_separable(&group("sym:5"), &[2, 3, 5]));
    assert!(!is_pi_separable(&group("sym:5"), &[2, 3]));
}

#[test]
fn inflation_cases() {
    assert_eq!(status(&verdicts("sl:2,5", "5"), "central_inflation"), Status::Pass);
    assert_eq!(status(&verdicts("cyclic:6", "2"), "central_inflation"), Status::Pass);
    assert_eq!(status(&verdicts("dicyclic:8", "2"), "central_inflation"), Status::NotApplicable);
}

#[test]
fn corollary_2_4_cases() {
    for (spec, p) in [("cyclic:8", "2"), ("cyclic:15", "2"), ("sym:3", "2")] {
        assert_eq!(status(&verdicts(spec, p), "cor_2_4"), Status::Pass);
    }
    let g = group("cyclic:8");
    assert_eq!(psi_by_centralizer(&g, &pi("2")), ClassFunction::regular(&g));
    let g = group("cyclic:15");
    assert_eq!(psi_by_centralizer(&g, &pi("2")), ClassFunction::trivial(&g));
}

#[test]
fn defect_zero_in_a5() {
    let vs = verdicts("alt:5", "2");
    let v = vs.iter().find(|v| v.id == "defect_zero_multiplicity").unwrap();
    assert_eq!(v.status, Status::Pass);
    let rows = v.witness["defect_zero"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["nu"], rows[0]["restriction_sum"]);
}

#[test]
fn linear_groups_count_unipotents() {
    for (spec, p) in [("psl:2,8", "2"), ("sl:2,7", "7"), ("gl:2,3", "3"), ("psl:2,9", "3")] {
        assert_eq!(status(&verdicts(spec, p), "example_5_2"), Status::Pass, "{spec}");
    }
    assert_eq!(status(&verdicts("psl:2,7", "2"), "example_5_2"), Status::NotApplicable);
}
