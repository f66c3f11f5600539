use serde_json::json;

use super::*;
use crate::arith;
use crate::chartab::{CharacterTable, ClassFunction};
use crate::error::Result;
use crate::perm::FiniteGroup;
use crate::psi::{psi_by_centralizer, psi_on_subgroup, PiSpec};
use crate::verdict::Verdict;
use crate::zoo::GroupSpec;

/// Ids of the checks produced by [`plocal_checks`], for reporting a cap overflow.
pub const PLOCAL_CHECK_IDS: [&str; 9] = [
    "chain_orbits",
    "steinberg_two_routes",
    "steinberg_np_agreement",
    "steinberg_vanishing",
    "thm_11_1",
    "webb_inversion",
    "thm_11_3",
    "cor_11_4",
    "remark_11_5",
];

pub struct LocalContext<'a> {
    pub g: &'a FiniteGroup,
    pub p: u64,
    pub poset: PSubgroupPoset,
    pub psi: Vec<i64>,
    pub orbits_sp: Vec<ChainOrbit>,
    pub orbits_np: Vec<ChainOrbit>,
    pub steinberg: Vec<i64>,
    pub terms: Vec<LocalTerm>,
}

impl<'a> LocalContext<'a> {
    pub fn new(g: &'a FiniteGroup, p: u64, cap: u64) -> Result<Self> {
        let poset = PSubgroupPoset::new(g, p, cap)?;
        let psi = psi_by_centralizer(g, &PiSpec::prime(p)?).to_ints().expect("Ψ is integer valued");
        let orbits_sp = poset.chain_orbits(g, ChainMode::Sp);
        let orbits_np = poset.chain_orbits(g, ChainMode::Np);
        let steinberg = steinberg_by_orbits(g, &poset, ChainMode::Sp);
        let terms = local_terms(g, &poset, cap)?;
        Ok(LocalContext { g, p, poset, psi, orbits_sp, orbits_np, steinberg, terms })
    }
}

/// All p-local checks; cap overflow turns every one into not-applicable.
pub fn plocal_checks(g: &FiniteGroup, p: u64, cap: u64, spec: Option<&GroupSpec>, table: &CharacterTable) -> Vec<Verdict> {
    let mut out = match LocalContext::new(g, p, cap) {
        Ok(ctx) => vec![
            check_chain_orbits(&ctx),
            check_steinberg_two_routes(&ctx),
            check_steinberg_np_agreement(&ctx),
            check_steinberg_vanishing(&ctx),
            check_thm_11_1(&ctx),
            check_webb_inversion(&ctx),
            check_thm_11_3(&ctx),
            check_cor_11_4(&ctx),
            check_remark_11_5(&ctx),
        ],
        Err(e) => PLOCAL_CHECK_IDS.iter().map(|id| Verdict::not_applicable(id, e.to_string())).collect(),
    };
    out.push(check_thm_11_6(g, p, spec, table));
    out
}

fn add_into(acc: &mut [i64], sign: i64, values: &[i64]) {
    for (a, v) in acc.iter_mut().zip(values) {
        *a += sign * v;
    }
}

/// Orbit sizes account for every chain and match the stabilizer orders.
pub fn check_chain_orbits(ctx: &LocalContext) -> Verdict {
    let order = ctx.g.order();
    let mut ok = true;
    let mut witness = serde_json::Map::new();
    for (mode, orbits) in [("sp", &ctx.orbits_sp), ("np", &ctx.orbits_np)] {
        let direct = ctx.poset.all_chains(if mode == "sp" { ChainMode::Sp } else { ChainMode::Np }).len() as u64 + 1;
        let total: u64 = orbits.iter().map(|o| o.orbit_size).sum();
        let stabilizers_ok = orbits.iter().all(|o| o.orbit_size * o.stabilizer.order() == order);
        ok &= total == direct && stabilizers_ok;
        witness.insert(
            mode.into(),
            json!({ "orbits": orbits.len(), "chains_by_orbits": total, "chains_direct": direct, "stabilizers_ok": stabilizers_ok }),
        );
    }
    Verdict::new("chain_orbits", ok, serde_json::Value::Object(witness))
}

/// Orbit sum and fixed-point Euler characteristic give the same Steinberg
/// character, and it vanishes on p-singular classes.
pub fn check_steinberg_two_routes(ctx: &LocalContext) -> Verdict {
    let fixed = steinberg_by_fixed_points(ctx.g, &ctx.poset, ChainMode::Sp);
    let cl = ctx.g.classes();
    let singular_zero = (0..cl.len()).all(|k| cl.is_pi_regular(k, &[ctx.p]) || ctx.steinberg[k] == 0);
    Verdict::new(
        "steinberg_two_routes",
        fixed == ctx.steinberg && singular_zero,
        json!({ "orbit_sum": ctx.steinberg, "fixed_points": fixed, "vanishes_off_p_regular": singular_zero }),
    )
}

/// The normal-chain complex gives the same Steinberg character by both routes.
pub fn check_steinberg_np_agreement(ctx: &LocalContext) -> Verdict {
    let orbits = steinberg_by_orbits(ctx.g, &ctx.poset, ChainMode::Np);
    let fixed = steinberg_by_fixed_points(ctx.g, &ctx.poset, ChainMode::Np);
    Verdict::new(
        "steinberg_np_agreement",
        orbits == ctx.steinberg && fixed == ctx.steinberg,
        json!({ "np_orbit_sum": orbits, "np_fixed_points": fixed }),
    )
}

pub fn check_steinberg_vanishing(ctx: &LocalContext) -> Verdict {
    let id = "steinberg_vanishing";
    let core = ctx.g.p_core(&ctx.g.whole(), ctx.p);
    if core.is_trivial() {
        return Verdict::not_applicable(id, "O_p(G) = 1");
    }
    Verdict::new(id, ctx.steinberg.iter().all(|&v| v == 0), json!({ "o_p_order": core.order(), "steinberg": ctx.steinberg }))
}

/// The alternating sum of induced permutation characters on non-identity
/// p-elements is zero, in both complexes; the Ψ - 1 version vanishes on
/// p-regular classes.
pub fn check_thm_11_1(ctx: &LocalContext) -> Verdict {
    let (g, p) = (ctx.g, ctx.p);
    let pi = PiSpec::prime(p).expect("prime");
    let cl = g.classes();
    let mut ok = true;
    let mut witness = serde_json::Map::new();
    for (mode, orbits) in [("sp", &ctx.orbits_sp), ("np", &ctx.orbits_np)] {
        let mut perm_sum = vec![0i64; cl.len()];
        let mut psi_sum = vec![0i64; cl.len()];
        for orbit in orbits.iter() {
            let h = &orbit.stabilizer;
            let copy = g.subgroup_as_group(h);
            let counts: Vec<i64> = p_element_counts(&copy, p).into_iter().map(|c| c - 1).collect();
            let x = on_subgroup_elements(g, h, &copy, &counts);
            let ind = ClassFunction::induce_ints(g, h, &x).to_ints().expect("permutation character");
            add_into(&mut perm_sum, orbit.sign(), &ind);
            let psi_minus_one: Vec<i64> = psi_on_subgroup(g, h, &pi).into_iter().map(|v| v - 1).collect();
            let ind = ClassFunction::induce_ints(g, h, &psi_minus_one).to_ints().expect("integral");
            add_into(&mut psi_sum, orbit.sign(), &ind);
        }
        let perm_zero = perm_sum.iter().all(|&v| v == 0);
        let psi_zero = cl.pi_regular(&[p]).into_iter().all(|k| psi_sum[k] == 0);
        ok &= perm_zero && psi_zero;
        witness.insert(mode.into(), json!({ "permutation_sum": perm_sum, "psi_sum": psi_sum }));
    }
    Verdict::new("thm_11_1", ok, serde_json::Value::Object(witness))
}

/// `Σ_{Q/G} Ind_{N(Q)}^G St_p(N(Q)/Q)` is the trivial character.
pub fn check_webb_inversion(ctx: &LocalContext) -> Verdict {
    let mut acc = vec![0i64; ctx.g.num_classes()];
    for t in &ctx.terms {
        add_into(&mut acc, 1, &t.induced_steinberg);
    }
    Verdict::new("webb_inversion", acc.iter().all(|&v| v == 1), json!({ "sum": acc, "terms": ctx.terms.len() }))
}

/// Ψ equals the sum over radical p-subgroups of induced projective Steinberg lifts.
pub fn check_thm_11_3(ctx: &LocalContext) -> Verdict {
    let local = psi_via_local(ctx.g, &ctx.terms);
    let radical: Vec<u64> = ctx.terms.iter().filter(|t| t.subgroup.is_some() && t.radical).map(|t| t.order).collect();
    Verdict::new(
        "thm_11_3",
        local == ctx.psi,
        json!({ "local_sum": local, "psi": ctx.psi, "radical_orders": radical }),
    )
}

/// With `O_p(G) = 1`: `Ψ - 1 = Σ_{Q ≠ 1} Ind_{N(Q)}^G (P[St] - St)`.
pub fn check_cor_11_4(ctx: &LocalContext) -> Verdict {
    let id = "cor_11_4";
    if !ctx.g.p_core(&ctx.g.whole(), ctx.p).is_trivial() {
        return Verdict::not_applicable(id, "O_p(G) ≠ 1");
    }
    let mut rhs = vec![0i64; ctx.g.num_classes()];
    for t in ctx.terms.iter().filter(|t| t.subgroup.is_some()) {
        add_into(&mut rhs, 1, &t.induced_projective);
        add_into(&mut rhs, -1, &t.induced_steinberg);
    }
    let lhs: Vec<i64> = ctx.psi.iter().map(|v| v - 1).collect();
    Verdict::new(id, lhs == rhs, json!({ "psi_minus_one": lhs, "rhs": rhs }))
}

/// Ψ takes value 1 at p-regular y whose centralizer has order prime to p.
pub fn check_remark_11_5(ctx: &LocalContext) -> Verdict {
    let cl = ctx.g.classes();
    let classes: Vec<usize> = cl
        .pi_regular(&[ctx.p])
        .into_iter()
        .filter(|&k| cl.centralizer_order(k) % ctx.p != 0)
        .collect();
    let ok = classes.iter().all(|&k| ctx.psi[k] == 1);
    Verdict::new("remark_11_5", ok, json!({ "classes": classes }))
}

/// `Ind_B^G(1) - 1` for B the normalizer of a Sylow p-subgroup.
pub fn rank_one_steinberg(g: &FiniteGroup, p: u64) -> ClassFunction {
    let b = g.normalizer(&g.sylow(p));
    &ClassFunction::induce_trivial(g, &b) - &ClassFunction::trivial(g)
}

/// For `psl:2,q` in characteristic p: `χ_s = Ind_B(1) - 1` is irreducible of
/// degree `|G|_p`, vanishes off p-regular classes, has `|χ_s(y)| = |C(y)|_p`,
/// agrees with `±St_p(G)`, and `χ_s · conj(χ_s) = Ψ`.
pub fn check_thm_11_6(g: &FiniteGroup, p: u64, spec: Option<&GroupSpec>, table: &CharacterTable) -> Verdict {
    let id = "thm_11_6";
    match spec {
        Some(GroupSpec::Psl(2, q)) if q % p == 0 => {}
        _ => return Verdict::not_applicable(id, "requires psl:2,q with p dividing q"),
    }
    let chi = rank_one_steinberg(g, p);
    let cl = g.classes();
    let vals = chi.to_ints().expect("permutation character minus one");
    let degree_ok = vals[0] as u64 == arith::pi_part(g.order(), &[p]);
    let irreducible = table.position(&chi).is_some();
    let singular_zero = (0..cl.len()).all(|k| cl.is_pi_regular(k, &[p]) || vals[k] == 0);
    let values_ok = cl
        .pi_regular(&[p])
        .into_iter()
        .all(|k| vals[k].unsigned_abs() == arith::pi_part(cl.centralizer_order(k), &[p]));
    let psi = psi_by_centralizer(g, &PiSpec::prime(p).expect("prime"));
    let square = chi.tensor(&chi.conj());
    let square_ok = square == psi;
    let steinberg = match PSubgroupPoset::new(g, p, u64::MAX) {
        Ok(poset) => steinberg_by_orbits(g, &poset, ChainMode::Sp),
        Err(_) => Vec::new(),
    };
    let neg: Vec<i64> = vals.iter().map(|v| -v).collect();
    let sign_ok = steinberg == vals || steinberg == neg;
    Verdict::new(
        id,
        degree_ok && irreducible && singular_zero && values_ok && square_ok && sign_ok,
        json!({
            "chi_s": vals,
            "degree_is_p_part": degree_ok,
            "irreducible": irreducible,
            "vanishes_off_p_regular": singular_zero,
            "values_are_centralizer_p_parts": values_ok,
            "square_is_psi": square_ok,
            "matches_steinberg_up_to_sign": sign_ok,
        }),
    )
}
