use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::json;

use super::system::BrauerSystem;
use crate::arith;
use crate::chartab::{CharacterTable, ClassFunction, Cyclotomic};
use crate::error::Result;
use crate::linalg::{
    charpoly_q, cmat_from_q, conj_transpose, det_int, identity_c, inverse_q, is_psd_int, matmul_c, q, qmat_from_ints,
    rank_q, solve_c, CMatrix,
};
use crate::perm::FiniteGroup;
use crate::plocal::rank_one_steinberg;
use crate::psi::{lambda_char, nu_coefficients, psi_by_centralizer, psi_on_subgroup, root_count_function, PiSpec};
use crate::verdict::{strings, Verdict};
use crate::zoo::GroupSpec;

/// Check ids produced by [`modular_checks`], in order.
pub const MODULAR_CHECK_IDS: [&str; 11] = [
    "brauer_system",
    "psi_projectivity",
    "phi_star_integrality",
    "thm_6_1",
    "thm_12_1",
    "thm_12_2",
    "section_13",
    "thm_7",
    "thm_15",
    "thm_4_1",
    "block_slices",
];

/// Shared data for the modular checks of one `(G, p)` pair.
pub struct ModularContext<'a> {
    pub g: &'a FiniteGroup,
    pub table: &'a CharacterTable,
    pub p: u64,
    pub spec: Option<GroupSpec>,
    pub psi: ClassFunction,
    /// Ordinary multiplicities `⟨Ψ, χ⟩`.
    pub nu: Vec<i64>,
    pub sys: Option<BrauerSystem>,
}

impl<'a> ModularContext<'a> {
    pub fn new(
        g: &'a FiniteGroup,
        table: &'a CharacterTable,
        p: u64,
        spec: Option<GroupSpec>,
        sys: Option<BrauerSystem>,
    ) -> Result<Self> {
        let pi = PiSpec::prime(p)?;
        let psi = psi_by_centralizer(g, &pi);
        let nu = nu_coefficients(g, table, &pi)?;
        Ok(ModularContext { g, table, p, spec, psi, nu, sys })
    }

    /// `Σ_{χ ∈ b} ⟨Ψ, χ⟩ χ` for block `b`.
    pub fn block_slice(&self, chars: &[usize]) -> ClassFunction {
        let mut coeffs = vec![0; self.table.len()];
        for &i in chars {
            coeffs[i] = self.nu[i];
        }
        self.table.combine(self.g, &coeffs)
    }
}

const NO_DATA: &str = "no decomposition data for this prime";

pub fn modular_checks(ctx: &ModularContext) -> Vec<Verdict> {
    let mut out = Vec::with_capacity(MODULAR_CHECK_IDS.len());
    match &ctx.sys {
        Some(sys) => {
            let mults = psi_multiplicities(ctx.g, sys, &ctx.psi);
            out.push(check_brauer_system(sys));
            out.push(check_psi_projectivity(&mults, sys));
            out.push(check_phi_star_integrality(ctx, sys));
            out.push(check_thm_6_1(ctx, sys, &mults));
            out.push(check_thm_12_1(ctx.g, sys));
            out.push(check_thm_12_2(ctx, sys));
        }
        None => {
            for id in &MODULAR_CHECK_IDS[..6] {
                out.push(Verdict::not_applicable(id, NO_DATA));
            }
        }
    }
    out.push(check_section_13(ctx));
    out.push(check_thm_7(ctx));
    match &ctx.sys {
        Some(sys) => {
            let mults = psi_multiplicities(ctx.g, sys, &ctx.psi);
            out.push(check_thm_15(ctx, sys, &mults));
            out.push(check_thm_4_1(ctx, sys, &mults));
        }
        None => {
            out.push(Verdict::not_applicable("thm_15", NO_DATA));
            out.push(Verdict::not_applicable("thm_4_1", NO_DATA));
        }
    }
    out.push(check_block_slices(ctx));
    out
}

pub fn check_brauer_system(sys: &BrauerSystem) -> Verdict {
    Verdict::new(
        "brauer_system",
        sys.invariants.all_hold(),
        json!({
            "cartan": sys.cartan,
            "decomposition": sys.decomposition,
            "invariants": sys.invariants,
        }),
    )
}

/// `⟨Ψ, φ_i⟩` by three independent routes.
#[derive(Clone, Debug, Serialize)]
pub struct PsiMultiplicities {
    /// Coordinates of Ψ in the Θ basis, `None` when Ψ is outside the span.
    pub theta_solve: Option<Vec<String>>,
    pub phi_star: Vec<String>,
    pub p_element_sum: Vec<String>,
    #[serde(skip)]
    pub values: Option<Vec<i64>>,
}

impl PsiMultiplicities {
    pub fn agree(&self) -> bool {
        self.theta_solve.as_ref() == Some(&self.phi_star) && self.phi_star == self.p_element_sum
    }
}

pub fn psi_multiplicities(g: &FiniteGroup, sys: &BrauerSystem, psi: &ClassFunction) -> PsiMultiplicities {
    let solved = sys.theta_coordinates(g, psi);
    let one = ClassFunction::trivial(g);
    let star: Vec<Cyclotomic> = (0..sys.len()).map(|i| one.inner(&phi_star(g, sys, i), g)).collect();
    let sums = p_element_sums(g, sys);
    let values = solved.as_ref().and_then(|v| v.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>());
    PsiMultiplicities {
        theta_solve: solved.as_deref().map(strings),
        phi_star: strings(&star),
        p_element_sum: strings(&sums),
        values,
    }
}

/// `Σ_{x ∈ G_p/G} ⟨Res_{C(x)} φ_i, 1⟩'`, the inner product over p-regular
/// elements of each p-element centralizer.
fn p_element_sums(g: &FiniteGroup, sys: &BrauerSystem) -> Vec<Cyclotomic> {
    let cl = g.classes();
    let p = sys.prime;
    let mut acc = vec![Cyclotomic::zero(); sys.len()];
    for k in 0..cl.len() {
        if !arith::is_pi_number(cl.elem_order(k), &[p]) {
            continue;
        }
        let c = g.centralizer(cl.rep(k));
        let mut sums = vec![Cyclotomic::zero(); sys.len()];
        for &y in c.elements() {
            if let Some(pos) = sys.regular_position(cl.class_of(y)) {
                for (i, s) in sums.iter_mut().enumerate() {
                    *s += &sys.phi[i][pos];
                }
            }
        }
        let w = BigRational::new(1.into(), c.order().into());
        for (a, s) in acc.iter_mut().zip(&sums) {
            *a += &s.scale(&w);
        }
    }
    acc
}

pub fn check_psi_projectivity(mults: &PsiMultiplicities, sys: &BrauerSystem) -> Verdict {
    let id = "psi_projectivity";
    let trivial_once = mults.values.as_ref().is_some_and(|m| m[sys.trivial] == 1);
    let projective = mults.values.as_ref().is_some_and(|m| m.iter().all(|&v| v >= 0));
    Verdict::new(
        id,
        mults.agree() && trivial_once && projective,
        json!({
            "m": mults.values,
            "routes": mults,
            "routes_agree": mults.agree(),
            "trivial_index": sys.trivial,
            "trivial_multiplicity_one": trivial_once,
            "projective": projective,
        }),
    )
}

/// `φ*(g) = φ(g_{p'})`.
pub fn phi_star(g: &FiniteGroup, sys: &BrauerSystem, i: usize) -> ClassFunction {
    let cl = g.classes();
    ClassFunction::from_fn(g, |k| {
        let y = g.pi_part(cl.rep(k), &[sys.prime]).pi_prime_part;
        let pos = sys.regular_position(cl.class_of(y)).expect("p'-part is p-regular");
        sys.phi[i][pos].clone()
    })
}

pub fn check_phi_star_integrality(ctx: &ModularContext, sys: &BrauerSystem) -> Verdict {
    let mut bad = Vec::new();
    let mut rows = Vec::new();
    for i in 0..sys.len() {
        let star = phi_star(ctx.g, sys, i);
        let coeffs = ctx.table.decompose(ctx.g, &star);
        if let Some(j) = coeffs.iter().position(|c| c.to_i64().is_none()) {
            bad.push(json!({ "brauer": i, "character": j, "value": coeffs[j].to_string() }));
        }
        rows.push(strings(&coeffs));
    }
    Verdict::new("phi_star_integrality", bad.is_empty(), json!({ "decompositions": rows, "non_integral": bad }))
}

/// Gram matrix of the φ*; Ψ is projective exactly when it is non-negative.
pub fn check_thm_6_1(ctx: &ModularContext, sys: &BrauerSystem, mults: &PsiMultiplicities) -> Verdict {
    let l = sys.len();
    let stars: Vec<ClassFunction> = (0..l).map(|i| phi_star(ctx.g, sys, i)).collect();
    let gram: Vec<Vec<Cyclotomic>> =
        (0..l).map(|i| (0..l).map(|j| stars[i].inner(&stars[j], ctx.g)).collect()).collect();
    let gram_ints: Option<Vec<Vec<i64>>> =
        gram.iter().map(|r| r.iter().map(|v| v.to_i64()).collect()).collect();
    let nonneg = gram_ints.as_ref().is_some_and(|m| m.iter().flatten().all(|&v| v >= 0));
    let projective = mults.values.as_ref().is_some_and(|m| m.iter().all(|&v| v >= 0));
    let column_ok = mults.values.as_ref().is_some_and(|m| {
        (0..l).all(|i| gram[sys.trivial][i].to_i64() == Some(m[i]))
    });
    Verdict::new(
        "thm_6_1",
        gram_ints.is_some() && nonneg == projective && column_ok,
        json!({
            "gram": gram.iter().map(|r| strings(r)).collect::<Vec<_>>(),
            "gram_nonnegative": nonneg,
            "projective": projective,
            "trivial_column_is_m": column_ok,
        }),
    )
}

/// One term of the section decomposition, indexed by a p-regular class.
#[derive(Clone, Debug, Serialize)]
pub struct SectionTerm {
    pub class: usize,
    /// Diagonal of D_y from induced Ψ of the centralizer.
    pub induced: Vec<i64>,
    /// Diagonal of D_y from counting section elements in centralizers.
    pub counted: Vec<i64>,
    /// `M_y = Φ D_y Φ⁻¹ C⁻¹`, when integral.
    pub matrix: Option<Vec<Vec<i64>>>,
    /// p-regular classes meeting `C_G(y)`.
    pub classes_meeting: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionMatrices {
    pub terms: Vec<SectionTerm>,
    /// `ΦΦ̄ᵗ`, when integral.
    pub total: Option<Vec<Vec<i64>>>,
}

fn int_matrix(m: &CMatrix) -> Option<Vec<Vec<i64>>> {
    m.iter().map(|r| r.iter().map(|v| v.to_i64()).collect()).collect()
}

fn diag_c(values: &[i64]) -> CMatrix {
    let n = values.len();
    (0..n)
        .map(|i| (0..n).map(|j| Cyclotomic::from_int(if i == j { values[i] } else { 0 })).collect())
        .collect()
}

pub fn section_matrices(g: &FiniteGroup, sys: &BrauerSystem) -> SectionMatrices {
    let cl = g.classes();
    let p = sys.prime;
    let pi = PiSpec::prime(p).expect("prime");
    let l = sys.len();
    // class of the p'-part of every element
    let section: Vec<usize> = (0..g.order() as u32).map(|w| cl.class_of(g.pi_part(w, &[p]).pi_prime_part)).collect();
    let mut counted = vec![vec![0i64; l]; l];
    for (i, &k) in sys.regular_classes.iter().enumerate() {
        for &w in g.centralizer(cl.rep(k)).elements() {
            let s = sys.regular_position(section[w as usize]).expect("p'-part is p-regular");
            counted[s][i] += 1;
        }
    }
    let phi = &sys.phi;
    let phi_inv = solve_c(phi, &identity_c(l)).expect("Φ is invertible");
    let cinv = cmat_from_q(&inverse_q(&qmat_from_ints(&sys.cartan)).expect("C is invertible"));
    let tail = matmul_c(&phi_inv, &cinv);
    let terms = sys
        .regular_classes
        .iter()
        .enumerate()
        .map(|(s, &k)| {
            let c = g.centralizer(cl.rep(k));
            let ind = ClassFunction::induce_ints(g, &c, &psi_on_subgroup(g, &c, &pi));
            let induced: Vec<i64> =
                sys.regular_classes.iter().map(|&j| ind.value(j).to_i64().expect("integral")).collect();
            let m = matmul_c(&matmul_c(phi, &diag_c(&induced)), &tail);
            let mut meets = vec![false; l];
            for &w in c.elements() {
                if let Some(pos) = sys.regular_position(cl.class_of(w)) {
                    meets[pos] = true;
                }
            }
            SectionTerm {
                class: k,
                induced,
                counted: counted[s].clone(),
                matrix: int_matrix(&m),
                classes_meeting: meets.iter().filter(|&&b| b).count(),
            }
        })
        .collect();
    let total = int_matrix(&matmul_c(phi, &conj_transpose(phi)));
    SectionMatrices { terms, total }
}

fn poly_from_roots(roots: &[i64]) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for &r in roots {
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * q(r);
        }
        poly = next;
    }
    poly
}

pub fn check_thm_12_1(g: &FiniteGroup, sys: &BrauerSystem) -> Verdict {
    let l = sys.len();
    let sm = section_matrices(g, sys);
    let mut ok = true;
    let mut diag_sum = vec![0i64; l];
    let mut m_sum = vec![vec![0i64; l]; l];
    let mut rows = Vec::new();
    for t in &sm.terms {
        let routes_agree = t.induced == t.counted;
        for (a, b) in diag_sum.iter_mut().zip(&t.induced) {
            *a += b;
        }
        let (symmetric, nonneg, psd, rank_ok, eigen_ok) = match &t.matrix {
            Some(m) => {
                for i in 0..l {
                    for j in 0..l {
                        m_sum[i][j] += m[i][j];
                    }
                }
                let symmetric = (0..l).all(|i| (0..l).all(|j| m[i][j] == m[j][i]));
                let nonneg = m.iter().flatten().all(|&v| v >= 0);
                let psd = symmetric && is_psd_int(m);
                let rank_ok = rank_q(&qmat_from_ints(m)) == t.classes_meeting;
                let mc = crate::linalg::matmul_q(&qmat_from_ints(m), &qmat_from_ints(&sys.cartan));
                let eigen_ok = charpoly_q(&mc) == poly_from_roots(&t.induced);
                (symmetric, nonneg, psd, rank_ok, eigen_ok)
            }
            None => (false, false, false, false, false),
        };
        let term_ok = routes_agree && symmetric && nonneg && psd && rank_ok && eigen_ok;
        ok &= term_ok;
        rows.push(json!({
            "class": t.class,
            "d_y": t.induced,
            "d_y_counted": t.counted,
            "m_y": t.matrix,
            "classes_meeting": t.classes_meeting,
            "routes_agree": routes_agree,
            "symmetric": symmetric,
            "nonnegative_integral": nonneg,
            "psd": psd,
            "rank_matches": rank_ok,
            "eigenvalues_match": eigen_ok,
        }));
    }
    let y: Vec<i64> = sys.centralizers.iter().map(|&c| c as i64).collect();
    let sum_is_y = diag_sum == y;
    let total_ok = sm.total.as_ref().is_some_and(|m| *m == m_sum && m.iter().flatten().all(|&v| v >= 0));
    Verdict::new(
        "thm_12_1",
        ok && sum_is_y && total_ok,
        json!({
            "terms": rows,
            "sum_d_y_is_y": sum_is_y,
            "m": sm.total,
            "sum_m_y_is_m": total_ok,
        }),
    )
}

/// For `psl:2,q` in characteristic p, the products `χ_s φ_i` form a Z-basis
/// of the projective characters: their Θ-coordinates are unimodular.
pub fn check_thm_12_2(ctx: &ModularContext, sys: &BrauerSystem) -> Verdict {
    let id = "thm_12_2";
    match ctx.spec {
        Some(GroupSpec::Psl(2, q)) if q % ctx.p == 0 => {}
        _ => return Verdict::not_applicable(id, "requires psl:2,q with p dividing q"),
    }
    let g = ctx.g;
    let chi_s = rank_one_steinberg(g, ctx.p);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut failure = None;
    for i in 0..sys.len() {
        let f = ClassFunction::from_fn(g, |k| match sys.regular_position(k) {
            Some(pos) => chi_s.value(k) * &sys.phi[i][pos],
            None => Cyclotomic::zero(),
        });
        let coords = sys.theta_coordinates(g, &f);
        match coords.and_then(|c| c.iter().map(|v| v.to_i64()).collect::<Option<Vec<i64>>>()) {
            Some(r) => rows.push(r),
            None => {
                failure = Some(i);
                break;
            }
        }
    }
    if let Some(i) = failure {
        return Verdict::new(id, false, json!({ "outside_integral_span": i }));
    }
    let det = det_int(&rows);
    let unimodular = det.abs().is_one();
    Verdict::new(id, unimodular, json!({ "a": rows, "det": det.to_string() }))
}

fn klein_four_sylow(g: &FiniteGroup) -> bool {
    let s = g.sylow(2);
    s.order() == 4 && s.elements().iter().all(|&x| g.elem_order(x) <= 2)
}

fn same_up_to_permutation(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut v = p.clone();
                v.insert(i, n - 1);
                out.push(v);
            }
        }
        out
    }
    a.len() == b.len()
        && perms(a.len()).iter().any(|s| (0..a.len()).all(|i| (0..a.len()).all(|j| a[s[i]][s[j]] == b[i][j])))
}

/// Principal Cartan matrices possible for a Klein-four Sylow 2-subgroup.
pub const KLEIN_FOUR_CARTANS: [[[i64; 3]; 3]; 2] = [[[4, 2, 2], [2, 2, 1], [2, 1, 2]], [[2, 1, 1], [1, 2, 1], [1, 1, 2]]];

/// p = 2 with Klein-four Sylow: Ψ counts square roots, real irreducibles
/// have indicator 1, and with data the principal slice is θ of the trivial
/// module and the principal Cartan matrix is one of two shapes.
pub fn check_section_13(ctx: &ModularContext) -> Verdict {
    let id = "section_13";
    if ctx.p != 2 || !klein_four_sylow(ctx.g) {
        return Verdict::not_applicable(id, "requires p = 2 and a Klein-four Sylow 2-subgroup");
    }
    let g = ctx.g;
    let squares = root_count_function(g, &2u32.into());
    let indicators: Vec<i64> = ctx
        .table
        .irreducibles()
        .iter()
        .map(|chi| chi.frobenius_schur(g).expect("indicator of an irreducible"))
        .collect();
    let by_indicator = ctx.table.combine(g, &indicators);
    let square_roots = ctx.psi == squares && ctx.psi == by_indicator;
    let real: Vec<usize> =
        (0..ctx.table.len()).filter(|&i| ctx.table.chi(i).conj() == *ctx.table.chi(i)).collect();
    let real_ok = real.iter().all(|&i| indicators[i] == 1 && ctx.nu[i] == 1);
    let mut witness = json!({
        "psi": strings(ctx.psi.values()),
        "square_roots": strings(squares.values()),
        "indicators": indicators,
        "psi_counts_square_roots": square_roots,
        "real_characters": real,
        "real_indicators_one": real_ok,
    });
    let mut ok = square_roots && real_ok;
    if let Some(sys) = &ctx.sys {
        let slice = ctx.block_slice(&sys.blocks[0]);
        let slice_ok = slice == sys.theta[sys.trivial];
        let principal = sys.principal_brauer();
        let cartan: Vec<Vec<i64>> =
            principal.iter().map(|&i| principal.iter().map(|&j| sys.cartan[i][j]).collect()).collect();
        let normal_complement = g.has_normal_pi_complement(&g.whole(), &[2]);
        let cartan_ok = if normal_complement {
            cartan == vec![vec![4]]
        } else {
            KLEIN_FOUR_CARTANS
                .iter()
                .any(|c| same_up_to_permutation(&cartan, &c.iter().map(|r| r.to_vec()).collect::<Vec<_>>()))
        };
        witness["principal_slice_is_theta_1"] = json!(slice_ok);
        witness["principal_cartan"] = json!(cartan);
        witness["principal_cartan_expected_shape"] = json!(cartan_ok);
        ok &= slice_ok && cartan_ok;
    }
    Verdict::new(id, ok, witness)
}

/// Class of the p-part of each class representative.
fn p_part_classes(g: &FiniteGroup, p: u64) -> Vec<usize> {
    let cl = g.classes();
    (0..cl.len()).map(|k| cl.class_of(g.pi_part(cl.rep(k), &[p]).pi_part)).collect()
}

/// Ψ is a character when every non-identity p-element centralizer has a
/// normal p-complement; with data, the non-principal PIM multiplicities are
/// non-negative; a vanishing principal-block multiplicity forces a constant
/// positive integer value on some non-identity p-section.
pub fn check_thm_7(ctx: &ModularContext) -> Verdict {
    let id = "thm_7";
    let g = ctx.g;
    let p = ctx.p;
    let cl = g.classes();
    let p_classes: Vec<usize> = (1..cl.len()).filter(|&k| arith::is_pi_number(cl.elem_order(k), &[p])).collect();
    if p_classes.is_empty() {
        return Verdict::not_applicable(id, "no non-identity p-elements");
    }
    if let Some(&k) = p_classes.iter().find(|&&k| !g.has_normal_pi_complement(&g.centralizer(cl.rep(k)), &[p])) {
        return Verdict::not_applicable(id, format!("C_G(x) has no normal p-complement for class {k}"));
    }
    let is_character = ctx.nu.iter().all(|&v| v >= 0);
    let principal = crate::chartab::block_distribution(g, ctx.table, p)
        .map(|b| b[0].characters.clone())
        .unwrap_or_default();
    let sections = p_part_classes(g, p);
    let mut strict = Vec::new();
    let mut strict_ok = true;
    for &i in principal.iter().filter(|&&i| i != 0 && ctx.nu[i] == 0) {
        let chi = ctx.table.chi(i);
        let found = p_classes.iter().copied().find(|&x| {
            let members: Vec<usize> = (0..cl.len()).filter(|&k| sections[k] == x).collect();
            let v = chi.value(x);
            v.to_i64().is_some_and(|n| n > 0) && members.iter().all(|&k| chi.value(k) == v)
        });
        strict_ok &= found.is_some();
        strict.push(json!({ "character": i, "section": found }));
    }
    let mut witness = json!({
        "nu": ctx.nu,
        "is_character": is_character,
        "vanishing_principal": strict,
        "sections_constant_positive": strict_ok,
    });
    let mut ok = is_character && strict_ok;
    if let Some(sys) = &ctx.sys {
        let mults = psi_multiplicities(g, sys, &ctx.psi);
        let nonprincipal: Vec<usize> = (0..sys.len()).filter(|&i| sys.brauer_block[i] != 0).collect();
        let np_ok = mults.values.as_ref().is_some_and(|m| nonprincipal.iter().all(|&i| m[i] >= 0));
        witness["nonprincipal_brauer"] = json!(nonprincipal);
        witness["nonprincipal_projective"] = json!(np_ok);
        ok &= np_ok;
    }
    Verdict::new(id, ok, witness)
}

/// Multiplicities of θ_i in Λ and Ψ against the degree bounds.
pub fn check_thm_15(ctx: &ModularContext, sys: &BrauerSystem, mults: &PsiMultiplicities) -> Verdict {
    let g = ctx.g;
    let l = sys.len() as i64;
    let lambda = lambda_char(g, &PiSpec::prime(ctx.p).expect("prime"));
    let coords = sys.theta_coordinates(g, &lambda);
    let sums: Vec<Cyclotomic> = sys.phi.iter().map(|r| r.iter().cloned().sum()).collect();
    let lambda_ints: Option<Vec<i64>> = coords.as_ref().and_then(|c| c.iter().map(|v| v.to_i64()).collect());
    let routes_agree = coords.as_ref() == Some(&sums);
    let degrees: Vec<i64> = (0..sys.len()).map(|i| sys.brauer_degree(i)).collect();
    let lambda_bounds = lambda_ints
        .as_ref()
        .is_some_and(|m| m.iter().zip(&degrees).all(|(&v, &d)| v >= 0 && v <= l * d));
    let lambda_trivial = lambda_ints.as_ref().is_some_and(|m| m[sys.trivial] == l);
    let psi_bounds = mults.values.as_ref().is_some_and(|m| {
        (0..sys.len()).all(|i| m[i] < degrees[i] || (m[i] == degrees[i] && i == sys.trivial))
    });
    let linear_zero = mults
        .values
        .as_ref()
        .is_some_and(|m| (0..sys.len()).all(|i| i == sys.trivial || degrees[i] != 1 || m[i] == 0));
    Verdict::new(
        "thm_15",
        routes_agree && lambda_bounds && lambda_trivial && psi_bounds && linear_zero,
        json!({
            "lambda_multiplicities": lambda_ints,
            "brauer_value_sums": strings(&sums),
            "routes_agree": routes_agree,
            "brauer_degrees": degrees,
            "ell": l,
            "lambda_within_bounds": lambda_bounds,
            "lambda_trivial_is_ell": lambda_trivial,
            "psi_multiplicities": mults.values,
            "psi_within_degrees": psi_bounds,
            "nontrivial_linear_absent": linear_zero,
        }),
    )
}

/// Per block, some PIM occurs in Ψ with non-negative multiplicity, and a block
/// with one Brauer character contributes zero or a projective character.
pub fn check_thm_4_1(ctx: &ModularContext, sys: &BrauerSystem, mults: &PsiMultiplicities) -> Verdict {
    let Some(m) = &mults.values else {
        return Verdict::new("thm_4_1", false, json!({ "error": "Ψ is outside the integral Θ span" }));
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for (b, chars) in sys.blocks.iter().enumerate() {
        let brauer: Vec<usize> = (0..sys.len()).filter(|&i| sys.brauer_block[i] == b).collect();
        let best = brauer.iter().map(|&i| m[i]).max();
        let slice = ctx.block_slice(chars);
        let mut rebuilt = ClassFunction::zero(ctx.g);
        for &i in &brauer {
            rebuilt = &rebuilt + &sys.theta[i].scale_int(m[i]);
        }
        let slice_matches = slice == rebuilt;
        let some_nonneg = best.is_some_and(|v| v >= 0);
        let single_ok = brauer.len() != 1 || slice.is_zero() || m[brauer[0]] >= 0;
        ok &= slice_matches && some_nonneg && single_ok;
        rows.push(json!({
            "characters": chars,
            "brauer": brauer,
            "max_multiplicity": best,
            "slice_in_theta_span": slice_matches,
            "single_brauer_ok": single_ok,
        }));
    }
    Verdict::new("thm_4_1", ok, json!({ "blocks": rows }))
}

/// The block slices of Ψ sum to Ψ and have disjoint ordinary support.
pub fn check_block_slices(ctx: &ModularContext) -> Verdict {
    let id = "block_slices";
    let blocks = match crate::chartab::block_distribution(ctx.g, ctx.table, ctx.p) {
        Ok(b) => b,
        Err(e) => return Verdict::error(id, &e),
    };
    let mut seen = vec![false; ctx.table.len()];
    let mut disjoint = true;
    let mut total = ClassFunction::zero(ctx.g);
    for b in &blocks {
        for &i in &b.characters {
            disjoint &= !std::mem::replace(&mut seen[i], true);
        }
        total = &total + &ctx.block_slice(&b.characters);
    }
    let covers = seen.iter().all(|&s| s);
    let sums = total == ctx.psi;
    Verdict::new(
        id,
        disjoint && covers && sums,
        json!({
            "blocks": blocks.iter().map(|b| &b.characters).collect::<Vec<_>>(),
            "disjoint": disjoint,
            "covers_irr": covers,
            "sum_is_psi": sums,
        }),
    )
}
