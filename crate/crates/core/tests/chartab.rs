use psichar::chartab::{block_distribution, character_table, frac, ClassFunction, Cyclotomic};
use psichar::perm::FiniteGroup;
use psichar::zoo::build;

fn degrees(spec: &str) -> Vec<i64> {
    let g = build(spec).unwrap();
    character_table(&g).unwrap().degrees()
}

#[test]
fn known_degrees() {
    assert_eq!(degrees("sym:3"), vec![1, 1, 2]);
    assert_eq!(degrees("alt:5"), vec![1, 3, 3, 4, 5]);
    assert_eq!(degrees("sym:4"), vec![1, 1, 2, 3, 3]);
    assert_eq!(degrees("psl:2,7"), vec![1, 3, 3, 6, 7, 8]);
    assert_eq!(degrees("sl:2,5"), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(degrees("dicyclic:8"), vec![1, 1, 1, 1, 2]);
    assert_eq!(degrees("alt:6"), vec![1, 5, 5, 8, 8, 9, 10]);
}

#[test]
fn cyclic_four_has_gaussian_values() {
    let g = build("cyclic:4").unwrap();
    let t = character_table(&g).unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 1, 1]);
    let i = Cyclotomic::zeta(4, 1);
    assert!(t.irreducibles().iter().any(|c| c.values().contains(&i)));
}

#[test]
fn alt5_golden_ratio_entries_have_conductor_five() {
    let g = build("alt:5").unwrap();
    let t = character_table(&g).unwrap();
    let conductors: Vec<u64> = t.chi(1).values().iter().map(|v| v.conductor()).collect();
    assert!(conductors.contains(&5));
    assert!(t.serialized().starts_with("CHARTAB v1\ngroup: alt:5\norder: 60\n"));
    assert_eq!(t.serialized().lines().filter(|l| l.starts_with("chi ")).count(), 5);
}

#[test]
fn serialization_is_stable_and_parses_back() {
    let g = build("alt:5").unwrap();
    let a = character_table(&g).unwrap();
    let g2 = build("alt:5").unwrap();
    let b = character_table(&g2).unwrap();
    assert_eq!(a.serialized(), b.serialized());
    assert_eq!(a.hash(), b.hash());
    let again = psichar::chartab::CharacterTable::parse(&g, a.serialized()).unwrap();
    assert_eq!(again.hash(), a.hash());
    let broken = a.serialized().replacen("chi 2:", "chi 9:", 1);
    assert!(psichar::chartab::CharacterTable::parse(&g, &broken).is_err());
}

#[test]
fn inner_products() {
    let s4 = build("sym:4").unwrap();
    let t = character_table(&s4).unwrap();
    for chi in t.irreducibles() {
        assert_eq!(chi.inner(chi, &s4), Cyclotomic::one());
    }
    let s3 = build("sym:3").unwrap();
    let one = ClassFunction::trivial(&s3);
    // restricted to the 2-regular classes (identity, 3-cycles): (1 + 2)/6
    let ip = one.checked_inner(&one, &s3, Some(&[0, 2])).unwrap();
    assert_eq!(ip, frac(1, 2));
    let t2 = s3.generate(&[s3.index_of(&psichar::Permutation::parse("(1,2)", 3).unwrap()).unwrap()]);
    let ind = ClassFunction::induce_trivial(&s3, &t2);
    assert_eq!(ind.to_ints().unwrap(), vec![3, 1, 0]);
    assert_eq!(ind.inner(&one, &s3), Cyclotomic::one());
    let other = ClassFunction::trivial(&s4);
    assert!(one.checked_inner(&other, &s3, None).is_err());
}

/// Brute-force induction: (1/|H|) Σ_{x∈G} f°(x g x^-1).
fn brute_induce(g: &FiniteGroup, h: &psichar::Subgroup, f: &[i64]) -> Vec<i64> {
    let cl = g.classes();
    (0..cl.len())
        .map(|k| {
            let y = cl.rep(k);
            let total: i64 = (0..g.order() as u32)
                .map(|x| {
                    let c = g.conj(y, x);
                    h.position(c).map_or(0, |pos| f[pos])
                })
                .sum();
            total / h.order() as i64
        })
        .collect()
}

#[test]
fn induction_matches_brute_force() {
    let s4 = build("sym:4").unwrap();
    let h = s4.sylow(2);
    let f: Vec<i64> = h.elements().iter().map(|&x| s4.elem_order(x) as i64).collect();
    // f is a class function of H since element order is conjugation invariant
    let ind = ClassFunction::induce_ints(&s4, &h, &f);
    assert_eq!(ind.to_ints().unwrap(), brute_induce(&s4, &h, &f));
    // regular character of the subgroup induces to the regular character
    let s3 = build("sym:3").unwrap();
    let c2 = s3.generate(&[1]);
    let reg: Vec<i64> = c2.elements().iter().map(|&x| if x == 0 { 2 } else { 0 }).collect();
    assert_eq!(ClassFunction::induce_ints(&s3, &c2, &reg), ClassFunction::regular(&s3));
}

#[test]
fn restriction_and_tensor() {
    let a5 = build("alt:5").unwrap();
    let t = character_table(&a5).unwrap();
    let four = t.chi(3);
    assert_eq!(four.tensor(four).degree(), &Cyclotomic::from_int(16));
    let h = a5.sylow(5);
    let res = four.restrict(&a5, &h);
    assert_eq!(res.len(), 5);
    assert_eq!(res[0], Cyclotomic::from_int(4));
}

#[test]
fn adams_operations() {
    let s3 = build("sym:3").unwrap();
    let t = character_table(&s3).unwrap();
    assert_eq!(t.chi(2).adams(&s3, 2).to_ints().unwrap(), vec![2, 2, -1]);
    let e = s3.exponent() as i64;
    assert_eq!(t.chi(2).adams(&s3, e + 1), *t.chi(2));
    let c3 = build("cyclic:3").unwrap();
    let t3 = character_table(&c3).unwrap();
    for chi in t3.irreducibles() {
        assert_eq!(chi.adams(&c3, -1), chi.conj());
    }
}

fn brute_indicator(g: &FiniteGroup, chi: &ClassFunction) -> Cyclotomic {
    let cl = g.classes();
    let mut acc = Cyclotomic::zero();
    for x in 0..g.order() as u32 {
        acc += chi.value(cl.class_of(g.mul(x, x)));
    }
    acc.scale(&num_rational::BigRational::new(1.into(), (g.order() as i64).into()))
}

#[test]
fn frobenius_schur_indicators() {
    let s3 = build("sym:3").unwrap();
    let t = character_table(&s3).unwrap();
    for chi in t.irreducibles() {
        assert_eq!(chi.frobenius_schur(&s3).unwrap(), 1);
        assert_eq!(brute_indicator(&s3, chi), Cyclotomic::one());
    }
    let q8 = build("dicyclic:8").unwrap();
    let t = character_table(&q8).unwrap();
    assert_eq!(t.chi(4).frobenius_schur(&q8).unwrap(), -1);
    assert_eq!(brute_indicator(&q8, t.chi(4)), Cyclotomic::from_int(-1));
    let c3 = build("cyclic:3").unwrap();
    let t = character_table(&c3).unwrap();
    assert_eq!(t.chi(1).frobenius_schur(&c3).unwrap(), 0);
}

const SMALL_CORPUS: &[&str] = &[
    "sym:3", "sym:4", "sym:5", "alt:4", "alt:5", "alt:6", "cyclic:6", "cyclic:8", "dihedral:8", "dihedral:12",
    "dicyclic:8", "psl:2,7", "psl:2,8", "sl:2,3", "sl:2,5", "gl:2,3", "sym:3*cyclic:2",
];

#[test]
fn square_root_count_identity() {
    for spec in SMALL_CORPUS {
        let g = build(spec).unwrap();
        let t = character_table(&g).unwrap();
        let total: i64 = t
            .irreducibles()
            .iter()
            .map(|c| c.frobenius_schur(&g).unwrap() * c.degree().to_i64().unwrap())
            .sum();
        let involutions = (0..g.order() as u32).filter(|&x| g.elem_order(x) == 2).count() as i64;
        assert_eq!(total, involutions + 1, "{spec}");
    }
}

#[test]
fn adams_images_are_generalized_characters() {
    for spec in SMALL_CORPUS {
        let g = build(spec).unwrap();
        let t = character_table(&g).unwrap();
        for n in [2, 3, 5, 16] {
            for chi in t.irreducibles() {
                assert!(t.decompose_int(&g, &chi.adams(&g, n)).is_ok(), "{spec} n={n}");
            }
        }
    }
}

/// Osima: the blocks are the connected components of the relation
/// Σ over p-regular classes of |K| χ(g) conj ψ(g) ≠ 0.
fn osima_blocks(g: &FiniteGroup, t: &psichar::chartab::CharacterTable, p: u64) -> Vec<Vec<usize>> {
    let reg = g.classes().pi_regular(&[p]);
    let r = t.len();
    let mut comp: Vec<usize> = (0..r).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let root = find(c, c[x]);
            c[x] = root;
        }
        c[x]
    }
    for i in 0..r {
        for j in i + 1..r {
            if !t.chi(i).inner_on(t.chi(j), g, Some(&reg)).is_zero() {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..r {
        let root = find(&mut comp, i);
        groups.entry(root).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

#[test]
fn blocks_match_osima_criterion() {
    for spec in SMALL_CORPUS {
        let g = build(spec).unwrap();
        let t = character_table(&g).unwrap();
        for p in psichar::arith::prime_divisors(g.order()).into_iter().chain([7, 11]) {
            let mut ours: Vec<Vec<usize>> =
                block_distribution(&g, &t, p).unwrap().into_iter().map(|b| b.characters).collect();
            ours.sort();
            assert_eq!(ours, osima_blocks(&g, &t, p), "{spec} p={p}");
        }
    }
}

#[test]
fn block_examples() {
    let a5 = build("alt:5").unwrap();
    let t = character_table(&a5).unwrap();
    let blocks = block_distribution(&a5, &t, 2).unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0].characters, vec![0, 1, 2, 4]);
    assert_eq!(blocks[0].defect, 2);
    assert_eq!(blocks[1].characters, vec![3]);
    assert_eq!(blocks[1].defect, 0);
    // the defect-zero character vanishes on 2-singular classes
    let four = t.chi(3);
    for k in 0..a5.num_classes() {
        if a5.classes().elem_order(k) % 2 == 0 {
            assert!(four.value(k).is_zero());
        }
    }
    let s3 = build("sym:3").unwrap();
    let t = character_table(&s3).unwrap();
    assert_eq!(block_distribution(&s3, &t, 3).unwrap().len(), 1);
    let blocks = block_distribution(&s3, &t, 5).unwrap();
    assert_eq!(blocks.len(), 3);
    assert!(blocks.iter().all(|b| b.defect == 0));
}
