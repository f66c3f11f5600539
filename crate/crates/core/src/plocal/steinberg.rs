use crate::chartab::ClassFunction;
use crate::error::Result;
use crate::perm::{FiniteGroup, Quotient, Subgroup};

use super::{ChainMode, PSubgroupPoset};

/// Values of a per-class function of a subgroup copy, listed per element of
/// the subgroup inside `g`.
pub fn on_subgroup_elements(g: &FiniteGroup, h: &Subgroup, copy: &FiniteGroup, per_class: &[i64]) -> Vec<i64> {
    let cl = copy.classes();
    h.elements()
        .iter()
        .map(|&x| per_class[cl.class_of(copy.index_of(g.element(x)).expect("same elements"))])
        .collect()
}

/// Per class of `h`: the number of p-elements of the centralizer.
pub fn p_element_counts(h: &FiniteGroup, p: u64) -> Vec<i64> {
    let cl = h.classes();
    (0..cl.len())
        .map(|k| h.count_pi_elements(&h.centralizer(cl.rep(k)), &[p]) as i64)
        .collect()
}

/// `Σ_σ (-1)^|σ| Ind_{G_σ}^G(1)` over chain orbits, empty chain included.
pub fn steinberg_by_orbits(g: &FiniteGroup, poset: &PSubgroupPoset, mode: ChainMode) -> Vec<i64> {
    let mut acc = vec![0i64; g.num_classes()];
    for orbit in poset.chain_orbits(g, mode) {
        let ind = ClassFunction::induce_trivial(g, &orbit.stabilizer).to_ints().expect("permutation character");
        for (a, v) in acc.iter_mut().zip(ind) {
            *a += orbit.sign() * v;
        }
    }
    acc
}

/// `1 - χ(Δ^x)` for each class representative x, with `Δ^x` the chains fixed by x.
pub fn steinberg_by_fixed_points(g: &FiniteGroup, poset: &PSubgroupPoset, mode: ChainMode) -> Vec<i64> {
    let cl = g.classes();
    (0..cl.len())
        .map(|k| {
            let x = cl.rep(k);
            let mut euler = 0i64;
            poset.for_each_chain(mode, &|i| poset.normalizer(i).contains(x), &mut |c| {
                euler += if c.len() % 2 == 1 { 1 } else { -1 };
            });
            1 - euler
        })
        .collect()
}

pub fn steinberg_char(g: &FiniteGroup, p: u64, cap: u64) -> Result<ClassFunction> {
    let poset = PSubgroupPoset::new(g, p, cap)?;
    Ok(ClassFunction::from_ints(g, &steinberg_by_orbits(g, &poset, ChainMode::Sp)))
}

/// Reynolds transform of a class function `alpha` of `N/Q` (given per class
/// of the quotient group): `|C_Q(y)| α(yQ)` on p-regular y, 0 elsewhere.
/// Returned per class of `n`.
pub fn reynolds_transform(n: &FiniteGroup, q: &Subgroup, quotient: &Quotient, alpha: &[i64], p: u64) -> Vec<i64> {
    let cl = n.classes();
    let qcl = quotient.group.classes();
    (0..cl.len())
        .map(|k| {
            if !cl.is_pi_regular(k, &[p]) {
                return 0;
            }
            let y = cl.rep(k);
            let fixed = q.elements().iter().filter(|&&z| n.commute(y, z)).count() as i64;
            fixed * alpha[qcl.class_of(quotient.project(y))]
        })
        .collect()
}

/// Data for one conjugacy class of p-subgroups Q, including Q = 1.
pub struct LocalTerm {
    /// Poset index of Q, `None` for the trivial subgroup.
    pub subgroup: Option<usize>,
    pub order: u64,
    pub radical: bool,
    pub normalizer: Subgroup,
    /// `Ind_{N(Q)}^G` of the inflated Steinberg character of `N(Q)/Q`.
    pub induced_steinberg: Vec<i64>,
    /// `Ind_{N(Q)}^G` of its Reynolds transform.
    pub induced_projective: Vec<i64>,
}

pub fn local_terms(g: &FiniteGroup, poset: &PSubgroupPoset, cap: u64) -> Result<Vec<LocalTerm>> {
    let p = poset.prime();
    let st = steinberg_by_orbits(g, poset, ChainMode::Sp);
    let trivial_radical = g.p_core(&g.whole(), p).is_trivial();
    let st_proj: Vec<i64> = {
        let cl = g.classes();
        (0..cl.len()).map(|k| if cl.is_pi_regular(k, &[p]) { st[k] } else { 0 }).collect()
    };
    let mut out = vec![LocalTerm {
        subgroup: None,
        order: 1,
        radical: trivial_radical,
        normalizer: g.whole(),
        induced_steinberg: st,
        induced_projective: st_proj,
    }];
    for i in poset.class_representatives() {
        let q_sub = poset.subgroup(i);
        let n_sub = poset.normalizer(i);
        let n = g.subgroup_as_group(n_sub);
        let qs: Vec<_> = q_sub.gens().iter().map(|&x| g.element(x).clone()).collect();
        let q = n.subgroup_of(&qs)?;
        let quotient = n.quotient(&n.whole(), &q)?;
        let bar = &quotient.group;
        let bar_poset = PSubgroupPoset::new(bar, p, cap)?;
        let st_bar = steinberg_by_orbits(bar, &bar_poset, ChainMode::Sp);
        let inflated: Vec<i64> = {
            let cl = n.classes();
            (0..cl.len()).map(|k| st_bar[bar.classes().class_of(quotient.project(cl.rep(k)))]).collect()
        };
        let projective = reynolds_transform(&n, &q, &quotient, &st_bar, p);
        let induce = |per_class: &[i64]| {
            let values = on_subgroup_elements(g, n_sub, &n, per_class);
            ClassFunction::induce_ints(g, n_sub, &values).to_ints().expect("integral induced values")
        };
        out.push(LocalTerm {
            subgroup: Some(i),
            order: q_sub.order(),
            radical: poset.is_radical(i),
            normalizer: n_sub.clone(),
            induced_steinberg: induce(&inflated),
            induced_projective: induce(&projective),
        });
    }
    Ok(out)
}

/// Ψ from the radical-subgroup expansion: `Σ_{Q radical} Ind_{N(Q)}^G P[St_p(N(Q)/Q)]`,
/// with the `Q = 1` term being `St_p(G)`.
pub fn psi_via_local(g: &FiniteGroup, terms: &[LocalTerm]) -> Vec<i64> {
    let mut acc = vec![0i64; g.num_classes()];
    for t in terms {
        if t.subgroup.is_none() || t.radical {
            for (a, v) in acc.iter_mut().zip(&t.induced_projective) {
                *a += v;
            }
        }
    }
    acc
}
