use num_bigint::BigUint;
use num_traits::Signed;
use serde_json::json;

use super::{lambda_char, psi_by_centralizer, psi_on_subgroup, root_count_function, root_exponent, nu_values, PiSpec};
use crate::arith;
use crate::chartab::{is_nonneg_int, CharacterTable, ClassFunction, Cyclotomic};
use crate::perm::{FiniteGroup, Subgroup};
use crate::verdict::{strings, Verdict};
use crate::zoo::GroupSpec;

/// Groups above this order skip the centralizer-induction identity.
pub const REMARK_5_1_LIMIT: u64 = 10_000;

/// Everything the Ψ checks share for one `(G, π)` pair.
pub struct PsiContext<'a> {
    pub g: &'a FiniteGroup,
    pub table: &'a CharacterTable,
    pub pi: PiSpec,
    pub spec: Option<GroupSpec>,
    /// `q` for a single prime, `|G|_π` otherwise.
    pub n: BigUint,
    pub psi: ClassFunction,
    pub nu: Vec<Cyclotomic>,
}

impl<'a> PsiContext<'a> {
    pub fn new(g: &'a FiniteGroup, table: &'a CharacterTable, pi: PiSpec, spec: Option<GroupSpec>) -> Self {
        let n = root_exponent(g, &pi);
        let psi = psi_by_centralizer(g, &pi);
        let nu = nu_values(g, table, &n);
        PsiContext { g, table, pi, spec, n, psi, nu }
    }

    pub fn nu_ints(&self) -> Option<Vec<i64>> {
        self.nu.iter().map(|v| v.to_i64()).collect()
    }

    fn primes(&self) -> &[u64] {
        self.pi.primes()
    }
}

/// All Ψ-level checks for the pair, in a fixed order.
pub fn psi_checks(ctx: &PsiContext) -> Vec<Verdict> {
    let mut out = vec![
        check_dual_definition(ctx),
        check_generalized_character(ctx),
        check_remark_3_1(ctx),
        check_galois_symmetry(ctx),
        check_frobenius_divisibility(ctx),
        check_cor_2_4(ctx),
        check_remark_5_1(ctx),
        check_thm_8_1(ctx),
        check_psi_character(ctx),
    ];
    if ctx.pi.single().is_some() {
        out.extend([
            check_defect_zero(ctx),
            check_thm_2_1(ctx),
            check_thm_2_2(ctx),
            check_thm_9_1(ctx),
            check_cor_9_6(ctx),
            check_inflation(ctx),
            check_example_5_2(ctx),
        ]);
    }
    out
}

pub fn check_dual_definition(ctx: &PsiContext) -> Verdict {
    let hall = BigUint::from(arith::pi_part(ctx.g.order(), ctx.primes()));
    let by_hall = root_count_function(ctx.g, &hall);
    let by_q = root_count_function(ctx.g, &ctx.n);
    let ok = by_hall == ctx.psi && by_q == ctx.psi;
    Verdict::new(
        "psi_dual_definition",
        ok,
        json!({
            "centralizer_counts": strings(ctx.psi.values()),
            "roots_hall_exponent": strings(by_hall.values()),
            "roots_q": strings(by_q.values()),
            "hall_exponent": hall.to_string(),
            "q": ctx.n.to_string(),
        }),
    )
}

pub fn check_generalized_character(ctx: &PsiContext) -> Verdict {
    let id = "generalized_character";
    match ctx.nu_ints() {
        Some(nu) => {
            let rebuilt = ctx.table.combine(ctx.g, &nu);
            Verdict::new(id, rebuilt == ctx.psi, json!({ "nu": nu }))
        }
        None => Verdict::new(id, false, json!({ "nu": strings(&ctx.nu) })),
    }
}

pub fn check_remark_3_1(ctx: &PsiContext) -> Verdict {
    let v = ctx.psi.inner(&ClassFunction::trivial(ctx.g), ctx.g);
    Verdict::new("remark_3_1", v == Cyclotomic::one(), json!({ "inner_with_trivial": v.to_string() }))
}

/// Algebraically conjugate characters occur in Ψ equally often.
pub fn check_galois_symmetry(ctx: &PsiContext) -> Verdict {
    let orbits = ctx.table.galois_orbits(ctx.g);
    let bad: Vec<&Vec<usize>> = orbits
        .iter()
        .filter(|o| o.iter().any(|&i| ctx.nu[i] != ctx.nu[o[0]]))
        .collect();
    Verdict::new("galois_symmetry", bad.is_empty(), json!({ "orbits": orbits, "unequal": bad }))
}

/// `|C_G(y)|_π` divides Ψ(y) on π-regular classes.
pub fn check_frobenius_divisibility(ctx: &PsiContext) -> Verdict {
    let cl = ctx.g.classes();
    let values = ctx.psi.to_ints().unwrap_or_default();
    let mut bad = Vec::new();
    for k in cl.pi_regular(ctx.primes()) {
        let d = arith::pi_part(cl.centralizer_order(k), ctx.primes()) as i64;
        if values.get(k).is_none_or(|v| v % d != 0) {
            bad.push(k);
        }
    }
    Verdict::new("frobenius_divisibility", bad.is_empty(), json!({ "failing_classes": bad }))
}

/// Ψ is trivial exactly for π'-groups and regular exactly for π-groups.
pub fn check_cor_2_4(ctx: &PsiContext) -> Verdict {
    let g = ctx.g;
    let trivial = ctx.psi == ClassFunction::trivial(g);
    let regular = ctx.psi == ClassFunction::regular(g);
    let pi_group = arith::is_pi_number(g.order(), ctx.primes());
    let pi_prime_group = arith::pi_part(g.order(), ctx.primes()) == 1;
    Verdict::new(
        "cor_2_4",
        trivial == pi_prime_group && regular == pi_group,
        json!({
            "psi_trivial": trivial,
            "psi_regular": regular,
            "pi_group": pi_group,
            "pi_prime_group": pi_prime_group,
        }),
    )
}

/// Σ over π-regular classes y of `Ind_{C(y)}^G Ψ_{C(y)}` is Λ.
pub fn check_remark_5_1(ctx: &PsiContext) -> Verdict {
    let id = "remark_5_1";
    let g = ctx.g;
    if g.order() > REMARK_5_1_LIMIT {
        return Verdict::not_applicable(id, format!("|G| = {} exceeds {}", g.order(), REMARK_5_1_LIMIT));
    }
    let cl = g.classes();
    let mut sum = ClassFunction::zero(g);
    for k in cl.pi_regular(ctx.primes()) {
        let c = g.centralizer(cl.rep(k));
        let values = psi_on_subgroup(g, &c, &ctx.pi);
        sum = &sum + &ClassFunction::induce_ints(g, &c, &values);
    }
    let lambda = lambda_char(g, &ctx.pi);
    Verdict::new(
        id,
        sum == lambda,
        json!({ "induced_sum": strings(sum.values()), "lambda": strings(lambda.values()) }),
    )
}

/// Chief factors are all π- or π'-groups.
pub fn is_pi_separable(g: &FiniteGroup, pi: &[u64]) -> bool {
    if g.order() == 1 {
        return true;
    }
    let whole = g.whole();
    let n = g.minimal_normal_subgroup(&whole).expect("a nontrivial group has a minimal normal subgroup");
    if !arith::is_pi_number(n.order(), pi) && arith::pi_part(n.order(), pi) != 1 {
        return false;
    }
    let q = g.quotient(&whole, &n).expect("minimal normal subgroup is normal");
    is_pi_separable(&q.group, pi)
}

/// For π-separable G, `⟨Λ, χ⟩ = Σ_{y π-regular} χ(y^-1)` is a non-negative integer.
pub fn check_thm_8_1(ctx: &PsiContext) -> Verdict {
    let id = "thm_8_1";
    let g = ctx.g;
    if !is_pi_separable(g, ctx.primes()) {
        return Verdict::not_applicable(id, "group is not π-separable");
    }
    let cl = g.classes();
    let regular = cl.pi_regular(ctx.primes());
    let lambda = lambda_char(g, &ctx.pi);
    let mut sums = Vec::new();
    let mut ok = true;
    for chi in ctx.table.irreducibles() {
        let mut s = Cyclotomic::zero();
        for &k in &regular {
            s += &chi.value(k).conj();
        }
        let ip = lambda.inner(chi, g);
        ok &= ip == s && is_nonneg_int(&s);
        sums.push(s.to_string());
    }
    Verdict::new(id, ok, json!({ "multiplicities": sums }))
}

/// Conjecture-hunt: every ordinary multiplicity of Ψ is a non-negative integer.
pub fn check_psi_character(ctx: &PsiContext) -> Verdict {
    let bad: Vec<usize> = (0..ctx.nu.len())
        .filter(|&i| !is_nonneg_int(&ctx.nu[i]))
        .collect();
    Verdict::new(
        "psi_is_character",
        bad.is_empty(),
        json!({ "nu": strings(&ctx.nu), "counterexamples": bad }),
    )
}

fn prime(ctx: &PsiContext) -> u64 {
    ctx.pi.single().expect("single-prime check")
}

/// Normal closure of the elements of `g` whose order satisfies `keep`.
fn closure_of(g: &FiniteGroup, keep: impl Fn(u64) -> bool) -> Subgroup {
    let cl = g.classes();
    let reps: Vec<u32> = (0..cl.len()).filter(|&k| keep(cl.elem_order(k))).map(|k| cl.rep(k)).collect();
    g.normal_closure_in(&g.whole(), &reps)
}

fn in_kernel(g: &FiniteGroup, table: &CharacterTable, i: usize, n: &Subgroup) -> bool {
    let cl = g.classes();
    let ker = table.kernel_classes(i);
    n.elements().iter().all(|&x| ker.binary_search(&cl.class_of(x)).is_ok())
}

/// For χ of p-defect zero, `ν(χ) = Σ_{x p-element classes} ⟨Res_{C(x)} χ, 1⟩`.
pub fn check_defect_zero(ctx: &PsiContext) -> Verdict {
    let (g, p) = (ctx.g, prime(ctx));
    let cl = g.classes();
    let sylow = arith::pi_part(g.order(), &[p]);
    let p_classes: Vec<usize> = (0..cl.len()).filter(|&k| arith::is_pi_number(cl.elem_order(k), &[p])).collect();
    let centralizers: Vec<Subgroup> = p_classes.iter().map(|&k| g.centralizer(cl.rep(k))).collect();
    let mut rows = Vec::new();
    let mut ok = true;
    for (i, chi) in ctx.table.irreducibles().iter().enumerate() {
        let d = chi.degree().to_i64().expect("degrees are integers") as u64;
        if arith::pi_part(d, &[p]) != sylow {
            continue;
        }
        let mut rhs = Cyclotomic::zero();
        for c in &centralizers {
            let mut s = Cyclotomic::zero();
            for v in chi.restrict(g, c) {
                s += &v;
            }
            rhs += &s.scale(&num_rational::BigRational::new(1.into(), c.order().into()));
        }
        ok &= rhs == ctx.nu[i];
        rows.push(json!({ "chi": i, "nu": ctx.nu[i].to_string(), "restriction_sum": rhs.to_string() }));
    }
    Verdict::new("defect_zero_multiplicity", ok, json!({ "defect_zero": rows }))
}

/// `-χ(1) < ν(χ) ≤ χ(1)`, with equality exactly when `O^p(G) ≤ ker χ`.
pub fn check_thm_2_1(ctx: &PsiContext) -> Verdict {
    let id = "thm_2_1";
    let (g, p) = (ctx.g, prime(ctx));
    let Some(nu) = ctx.nu_ints() else {
        return Verdict::new(id, false, json!({ "nu": strings(&ctx.nu) }));
    };
    // O^p(G) is generated by the p'-elements
    let op = closure_of(g, |o| arith::pi_part(o, &[p]) == 1);
    let mut bad = Vec::new();
    let mut top = Vec::new();
    for (i, &v) in nu.iter().enumerate() {
        let d = ctx.table.chi(i).degree().to_i64().unwrap();
        let kernel = in_kernel(g, ctx.table, i, &op);
        if kernel {
            top.push(i);
        }
        if !(-d < v && v <= d) || (v == d) != kernel {
            bad.push(i);
        }
    }
    Verdict::new(
        id,
        bad.is_empty(),
        json!({ "nu": nu, "o_p_order": op.order(), "o_p_in_kernel": top, "failing": bad }),
    )
}

/// Characters with `O^{p'}(G)` in the kernel occur in Ψ only as the trivial
/// character, once.
pub fn check_thm_2_2(ctx: &PsiContext) -> Verdict {
    let id = "thm_2_2";
    let (g, p) = (ctx.g, prime(ctx));
    let Some(nu) = ctx.nu_ints() else {
        return Verdict::new(id, false, json!({ "nu": strings(&ctx.nu) }));
    };
    let opp = closure_of(g, |o| arith::is_pi_number(o, &[p]));
    let mut concerned = Vec::new();
    let mut ok = true;
    for (i, &v) in nu.iter().enumerate() {
        if in_kernel(g, ctx.table, i, &opp) {
            concerned.push(i);
            ok &= v == if i == 0 { 1 } else { 0 };
        }
    }
    Verdict::new(id, ok, json!({ "o_p_prime_order": opp.order(), "characters": concerned, "nu": nu }))
}

/// `Ψ = 1 + Ind_T^G(1) - Ind_H^G(1)` when the Sylow subgroup has order p,
/// with every constituent of Ψ occurring in `Ind_T^G(1)`.
pub fn check_thm_9_1(ctx: &PsiContext) -> Verdict {
    let id = "thm_9_1";
    let (g, p) = (ctx.g, prime(ctx));
    if arith::pi_part(g.order(), &[p]) != p {
        return Verdict::not_applicable(id, "Sylow subgroup order is not p");
    }
    let sylow = g.sylow(p);
    let h = g.normalizer(&sylow);
    let t = match g.find_subgroup_of_order(&h, h.order() / p) {
        Ok(Some(t)) => t,
        Ok(None) => return Verdict::new(id, false, json!({ "error": "no complement in the Sylow normalizer" })),
        Err(e) => return Verdict::error(id, &e),
    };
    let ind_t = ClassFunction::induce_trivial(g, &t);
    let ind_h = ClassFunction::induce_trivial(g, &h);
    let rhs = &(&ClassFunction::trivial(g) + &ind_t) - &ind_h;
    let missing: Vec<usize> = (0..ctx.table.len())
        .filter(|&i| {
            let in_psi = ctx.nu[i].to_integer().is_some_and(|v| v.is_positive());
            in_psi && !ind_t.inner(ctx.table.chi(i), g).to_integer().is_some_and(|v| v.is_positive())
        })
        .collect();
    Verdict::new(
        id,
        rhs == ctx.psi && missing.is_empty(),
        json!({
            "normalizer_order": h.order(),
            "complement_order": t.order(),
            "ind_t": strings(ind_t.values()),
            "ind_h": strings(ind_h.values()),
            "rhs": strings(rhs.values()),
            "constituents_missing_from_ind_t": missing,
        }),
    )
}

/// Whether distinct conjugates of `p` meet trivially.
pub fn is_trivial_intersection(g: &FiniteGroup, p: &Subgroup) -> bool {
    let mut seen = rustc_hash::FxHashSet::default();
    seen.insert(p.elements().to_vec());
    for x in 0..g.order() as u32 {
        let c = g.conjugate_subgroup(p, x);
        if !seen.insert(c.elements().to_vec()) {
            continue;
        }
        if c.elements().iter().filter(|&&e| p.contains(e)).count() > 1 {
            return false;
        }
    }
    true
}

/// TI Sylow: `Ψ = 1 + Ind_T^G(1) - Ind_H^G(1)` with `H = N_G(P)` and `T` a
/// Hall p'-subgroup of `H`.
pub fn check_cor_9_6(ctx: &PsiContext) -> Verdict {
    let id = "cor_9_6";
    let (g, p) = (ctx.g, prime(ctx));
    if g.order() % p != 0 {
        return Verdict::not_applicable(id, "p does not divide |G|");
    }
    let sylow = g.sylow(p);
    if !is_trivial_intersection(g, &sylow) {
        return Verdict::not_applicable(id, "Sylow subgroup is not TI");
    }
    let h = g.normalizer(&sylow);
    let t = match g.find_subgroup_of_order(&h, arith::pi_prime_part(h.order(), &[p])) {
        Ok(Some(t)) => t,
        Ok(None) => return Verdict::new(id, false, json!({ "error": "no Hall p'-subgroup in the Sylow normalizer" })),
        Err(e) => return Verdict::error(id, &e),
    };
    let rhs = &(&ClassFunction::trivial(g) + &ClassFunction::induce_trivial(g, &t)) - &ClassFunction::induce_trivial(g, &h);
    Verdict::new(
        id,
        rhs == ctx.psi,
        json!({ "normalizer_order": h.order(), "hall_order": t.order(), "rhs": strings(rhs.values()) }),
    )
}

/// Ψ is inflated from `G/Z` for the p'-part Z of the center.
pub fn check_inflation(ctx: &PsiContext) -> Verdict {
    let id = "central_inflation";
    let (g, p) = (ctx.g, prime(ctx));
    let center = g.center();
    let z: Vec<u32> = center
        .elements()
        .iter()
        .copied()
        .filter(|&x| arith::pi_part(g.elem_order(x), &[p]) == 1)
        .collect();
    if z.len() == 1 {
        return Verdict::not_applicable(id, "center has trivial p'-part");
    }
    let z = g.subgroup_from_elements(z);
    let quotient = match g.quotient(&g.whole(), &z) {
        Ok(q) => q,
        Err(e) => return Verdict::error(id, &e),
    };
    let bar = &quotient.group;
    let psi_bar = psi_by_centralizer(bar, &ctx.pi);
    let cl = g.classes();
    let pulled: Vec<Cyclotomic> = (0..cl.len())
        .map(|k| psi_bar.value(bar.classes().class_of(quotient.project(cl.rep(k)))).clone())
        .collect();
    Verdict::new(
        id,
        pulled == ctx.psi.values(),
        json!({ "central_order": z.order(), "inflated": strings(&pulled) }),
    )
}

/// Linear groups in their defining characteristic: `Ψ(y) = |C_G(y)|_p²`.
pub fn check_example_5_2(ctx: &PsiContext) -> Verdict {
    let id = "example_5_2";
    let (g, p) = (ctx.g, prime(ctx));
    let q = match ctx.spec {
        Some(GroupSpec::Psl(_, q) | GroupSpec::Sl(_, q) | GroupSpec::Gl(_, q)) => q,
        _ => return Verdict::not_applicable(id, "not a linear group"),
    };
    if q % p != 0 {
        return Verdict::not_applicable(id, "p is not the defining characteristic");
    }
    let cl = g.classes();
    let mut bad = Vec::new();
    for k in cl.pi_regular(&[p]) {
        let c = arith::pi_part(cl.centralizer_order(k), &[p]) as i64;
        if ctx.psi.value(k).to_i64() != Some(c * c) {
            bad.push(k);
        }
    }
    Verdict::new(id, bad.is_empty(), json!({ "failing_classes": bad }))
}
