//! The π-element counting function Ψ_{1,π,G} and related class functions.

mod checks;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith;
use crate::chartab::{CharacterTable, ClassFunction, Cyclotomic};
use crate::error::{Error, Result};
use crate::perm::FiniteGroup;

pub use checks::*;

/// A nonempty set of primes, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PiSpec {
    primes: Vec<u64>,
}

impl PiSpec {
    pub fn new(mut primes: Vec<u64>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::PrimeSet("empty".into()));
        }
        if let Some(&bad) = primes.iter().find(|&&p| !arith::is_prime(p)) {
            return Err(Error::PrimeSet(format!("{bad} is not prime")));
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(PiSpec { primes })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(vec![p])
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// The prime, when the set has exactly one.
    pub fn single(&self) -> Option<u64> {
        match self.primes[..] {
            [p] => Some(p),
            _ => None,
        }
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }
}

impl FromStr for PiSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let primes = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::PrimeSet(format!("`{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(primes)
    }
}

impl fmt::Display for PiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Ψ from its definition: on a π-regular class, the number of π-elements of
/// the centralizer; zero on π-singular classes.
pub fn psi_by_centralizer(g: &FiniteGroup, pi: &PiSpec) -> ClassFunction {
    let cl = g.classes();
    let values: Vec<i64> = (0..cl.len())
        .map(|k| {
            if cl.is_pi_regular(k, pi.primes()) {
                g.count_pi_elements(&g.centralizer(cl.rep(k)), pi.primes()) as i64
            } else {
                0
            }
        })
        .collect();
    ClassFunction::from_ints(g, &values)
}

/// Number of n-th roots of each class representative, by raising every
/// element of the group to the n-th power.
pub fn root_counts(g: &FiniteGroup, n: &BigUint) -> Vec<u64> {
    let cl = g.classes();
    let n = arith::big_mod(n, g.exponent());
    let mut hits = vec![0u64; cl.len()];
    for y in 0..g.order() as u32 {
        hits[cl.class_of(g.pow(y, n as i64))] += 1;
    }
    hits.iter().zip(cl.sizes()).map(|(h, s)| h / s).collect()
}

pub fn root_count_function(g: &FiniteGroup, n: &BigUint) -> ClassFunction {
    let counts: Vec<i64> = root_counts(g, n).into_iter().map(|c| c as i64).collect();
    ClassFunction::from_ints(g, &counts)
}

/// Ψ as the number of n-th roots with n = |G|_π.
pub fn psi_by_roots(g: &FiniteGroup, pi: &PiSpec) -> ClassFunction {
    root_count_function(g, &BigUint::from(arith::pi_part(g.order(), pi.primes())))
}

/// `q = p^(kt)` with `k` the order of p modulo `|G|_{p'}` and `t ≥ 1` least
/// with `q ≥ |G|_p`. Then `q ≡ 1 (mod |G|_{p'})` and `|G|_p` divides `q`.
pub fn choose_q(order: u64, p: u64) -> BigUint {
    let m = arith::pi_prime_part(order, &[p]);
    let k = if m == 1 { 1 } else { arith::mult_order(p % m, m) };
    let step = BigUint::from(p).pow(k as u32);
    let target = BigUint::from(arith::pi_part(order, &[p]));
    let mut q = step.clone();
    while q < target {
        q *= &step;
    }
    q
}

/// The root exponent used for the decomposition of Ψ: `q` for a single
/// prime, `|G|_π` otherwise.
pub fn root_exponent(g: &FiniteGroup, pi: &PiSpec) -> BigUint {
    match pi.single() {
        Some(p) => choose_q(g.order(), p),
        None => BigUint::from(arith::pi_part(g.order(), pi.primes())),
    }
}

/// `⟨χ^(n), 1⟩` for every irreducible, unreduced.
pub fn nu_values(g: &FiniteGroup, table: &CharacterTable, n: &BigUint) -> Vec<Cyclotomic> {
    let one = ClassFunction::trivial(g);
    table.irreducibles().iter().map(|chi| chi.adams_big(g, n).inner(&one, g)).collect()
}

/// Multiplicities `ν(χ)` of the irreducibles in Ψ, checked to reassemble Ψ.
pub fn nu_coefficients(g: &FiniteGroup, table: &CharacterTable, pi: &PiSpec) -> Result<Vec<i64>> {
    let n = root_exponent(g, pi);
    let nu = nu_values(g, table, &n)
        .into_iter()
        .map(|v| v.to_i64().ok_or_else(|| Error::Internal(format!("non-integral multiplicity {v} in Ψ"))))
        .collect::<Result<Vec<i64>>>()?;
    let psi = psi_by_centralizer(g, pi);
    if table.combine(g, &nu) != psi {
        return Err(Error::Internal("Σ ν(χ)χ differs from Ψ".into()));
    }
    Ok(nu)
}

/// Λ: `|C_G(x)|` on π-regular classes and 0 elsewhere.
pub fn lambda_char(g: &FiniteGroup, pi: &PiSpec) -> ClassFunction {
    let cl = g.classes();
    let values: Vec<i64> = (0..cl.len())
        .map(|k| if cl.is_pi_regular(k, pi.primes()) { cl.centralizer_order(k) as i64 } else { 0 })
        .collect();
    ClassFunction::from_ints(g, &values)
}

/// Ψ of a subgroup, given per element of the subgroup (in its element order).
pub fn psi_on_subgroup(g: &FiniteGroup, h: &crate::Subgroup, pi: &PiSpec) -> Vec<i64> {
    let hg = g.subgroup_as_group(h);
    let psi = psi_by_centralizer(&hg, pi).to_ints().expect("Ψ is integer valued");
    let cl = hg.classes();
    h.elements()
        .iter()
        .map(|&x| {
            let i = hg.index_of(g.element(x)).expect("subgroup copy has the same elements");
            psi[cl.class_of(i)]
        })
        .collect()
}
