//! p-blocks of irreducible characters from central characters reduced modulo p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::gfext::{Elem, GfExt};
use super::{CharacterTable, Cyclotomic};
use crate::arith;
use crate::error::{Error, Result};
use crate::perm::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Character indices in canonical order; the principal block comes first.
    pub characters: Vec<usize>,
    /// `d` with `p^d = |G|_p / min_χ χ(1)_p`.
    pub defect: u32,
}

/// Reduction Z[ζ_e] → GF(p^d) sending ζ_e to a primitive m-th root of unity,
/// where m is the p'-part of e.
pub struct Reduction {
    field: GfExt,
    e: u64,
    m: u64,
    powers: Vec<Elem>,
}

impl Reduction {
    pub fn new(p: u64, e: u64) -> Self {
        let m = arith::pi_prime_part(e, &[p]);
        let d = arith::mult_order(p % m.max(1), m.max(1)) as usize;
        let field = GfExt::new(p, d.max(1));
        let eta = field.primitive_root_of_unity(m);
        let mut powers = Vec::with_capacity(m as usize);
        let mut acc = field.one();
        for _ in 0..m {
            powers.push(acc.clone());
            acc = field.mul(&acc, &eta);
        }
        Reduction { field, e, m, powers }
    }

    /// Image of an algebraic integer whose conductor divides e.
    pub fn reduce(&self, v: &Cyclotomic) -> Result<Elem> {
        let n = v.conductor();
        if self.e % n != 0 {
            return Err(Error::Internal(format!("conductor {n} does not divide {}", self.e)));
        }
        let step = self.e / n;
        let p = BigInt::from(self.field.characteristic());
        let mut acc = self.field.zero();
        for (i, c) in v.coeffs().iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::Internal(format!("{v:?} is not an algebraic integer")));
            }
            let c = c.numer().mod_floor(&p).to_u64().unwrap();
            if c == 0 {
                continue;
            }
            let root = &self.powers[((i as u64 * step) % self.m) as usize];
            acc = self.field.add(&acc, &self.field.mul(&self.field.from_int(c), root));
        }
        Ok(acc)
    }
}

/// Central character value `ω_χ(K) = |K| χ(g_K) / χ(1)`.
pub fn central_character(g: &FiniteGroup, table: &CharacterTable, i: usize, k: usize) -> Cyclotomic {
    let chi = table.chi(i);
    let size = g.classes().size(k) as i64;
    let deg = chi.degree().to_i64().unwrap();
    chi.value(k).scale(&num_rational::BigRational::new(size.into(), deg.into()))
}

/// Partition of the irreducibles into p-blocks with their defects.
pub fn block_distribution(g: &FiniteGroup, table: &CharacterTable, p: u64) -> Result<Vec<Block>> {
    let r = table.len();
    let red = Reduction::new(p, g.exponent());
    let mut keys: Vec<Vec<Elem>> = Vec::with_capacity(r);
    for i in 0..r {
        let key = (0..g.num_classes())
            .map(|k| red.reduce(&central_character(g, table, i, k)))
            .collect::<Result<Vec<_>>>()?;
        keys.push(key);
    }
    let sylow = arith::pi_part(g.order(), &[p]);
    let degrees = table.degrees();
    let mut blocks: Vec<Block> = Vec::new();
    let mut assigned = vec![false; r];
    for i in 0..r {
        if assigned[i] {
            continue;
        }
        let members: Vec<usize> = (i..r).filter(|&j| !assigned[j] && keys[j] == keys[i]).collect();
        for &j in &members {
            assigned[j] = true;
        }
        let min_p = members.iter().map(|&j| arith::pi_part(degrees[j] as u64, &[p])).min().unwrap();
        let ratio = sylow / min_p;
        let defect = if ratio <= 1 { 0 } else { arith::factorize(ratio)[0].1 };
        blocks.push(Block { characters: members, defect });
    }
    Ok(blocks)
}

/// Block index of each character.
pub fn block_labels(blocks: &[Block], n: usize) -> Vec<usize> {
    let mut labels = vec![0; n];
    for (b, block) in blocks.iter().enumerate() {
        for &i in &block.characters {
            labels[i] = b;
        }
    }
    labels
}
