//! Exhaustive counts with no character theory, used to audit Ψ.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::{FiniteGroup, Permutation};
use crate::psi::{choose_q, PiSpec};

pub const ORACLE_LIMIT: u64 = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct OracleClass {
    pub representative: String,
    pub order: u64,
    pub size: u64,
    /// Solutions of `y^n = x` with `n = |G|_π`.
    pub roots_hall: u64,
    /// Solutions of `y^q = x`, for a single prime.
    pub roots_q: Option<u64>,
    pub centralizer_order: u64,
    /// π-elements commuting with the representative.
    pub centralizer_pi_elements: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub group: String,
    pub order: u64,
    pub pi: PiSpec,
    pub hall_exponent: u64,
    pub q: Option<String>,
    /// Element order → number of elements.
    pub order_histogram: BTreeMap<u64, u64>,
    pub pi_elements: u64,
    pub classes: Vec<OracleClass>,
}

/// Multiplies permutations directly; only the class representatives are
/// taken from the group.
pub fn oracle(g: &FiniteGroup, pi: &PiSpec) -> Result<OracleReport> {
    if g.order() > ORACLE_LIMIT {
        return Err(Error::TooLarge { order: g.order(), limit: ORACLE_LIMIT });
    }
    let primes = pi.primes();
    let hall = arith::pi_part(g.order(), primes);
    let q = pi.single().map(|p| choose_q(g.order(), p));

    let mut histogram = BTreeMap::new();
    let mut hall_powers: HashMap<Permutation, u64> = HashMap::new();
    let mut q_powers: HashMap<Permutation, u64> = HashMap::new();
    let mut is_pi = Vec::with_capacity(g.elements().len());
    for y in g.elements() {
        let o = y.order();
        *histogram.entry(o).or_insert(0) += 1;
        is_pi.push(arith::is_pi_number(o, primes));
        *hall_powers.entry(power(y, hall % o)).or_insert(0) += 1;
        if let Some(q) = &q {
            *q_powers.entry(power(y, arith::big_mod(q, o))).or_insert(0) += 1;
        }
    }

    let cl = g.classes();
    let classes = (0..cl.len())
        .map(|k| {
            let x = g.element(cl.rep(k));
            let commuting: Vec<usize> =
                (0..g.elements().len()).filter(|&i| x.then(g.element(i as u32)) == g.element(i as u32).then(x)).collect();
            OracleClass {
                representative: x.to_string(),
                order: x.order(),
                size: cl.size(k),
                roots_hall: hall_powers.get(x).copied().unwrap_or(0),
                roots_q: q.as_ref().map(|_| q_powers.get(x).copied().unwrap_or(0)),
                centralizer_order: commuting.len() as u64,
                centralizer_pi_elements: commuting.iter().filter(|&&i| is_pi[i]).count() as u64,
            }
        })
        .collect();
    Ok(OracleReport {
        group: g.label().unwrap_or("").to_string(),
        order: g.order(),
        pi: pi.clone(),
        hall_exponent: hall,
        q: q.map(|q| q.to_string()),
        order_histogram: histogram,
        pi_elements: is_pi.iter().filter(|&&b| b).count() as u64,
        classes,
    })
}

/// `y^e` by square-and-multiply on the permutation itself.
fn power(y: &Permutation, mut e: u64) -> Permutation {
    let mut acc = Permutation::identity(y.degree());
    let mut base = y.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.then(&base);
        }
        base = base.then(&base);
        e >>= 1;
    }
    acc
}
