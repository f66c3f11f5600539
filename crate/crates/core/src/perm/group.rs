use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;
use sha2::{Digest, Sha256};

use super::classes::ConjugacyClasses;
use super::subgroup::Subgroup;
use super::{Bsgs, Permutation};
use crate::error::{Error, Result};

/// Groups larger than this are refused: every algorithm here works on the
/// explicit element list.
pub const ELEMENT_LIMIT: u64 = 200_000;

/// A finite permutation group with its elements enumerated.
///
/// Elements are indexed by their position in the lexicographically sorted
/// element list, so index 0 is always the identity.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: Bsgs,
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
    orders: Vec<u32>,
    inverses: Vec<u32>,
    gen_index: Vec<u32>,
    exponent: u64,
    content_hash: String,
    classes: OnceLock<ConjugacyClasses>,
    label: Option<String>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl FiniteGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let bsgs = Bsgs::new(degree, &generators);
        let order = bsgs.order().unwrap_or(u128::MAX);
        if order > ELEMENT_LIMIT as u128 {
            return Err(Error::TooLarge { order: order.min(u64::MAX as u128) as u64, limit: ELEMENT_LIMIT });
        }
        let content_hash = hash_generators(degree, &generators);

        // breadth-first closure under right multiplication by generators
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut seen: FxHashMap<Permutation, ()> = FxHashMap::default();
        seen.insert(id, ());
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &generators {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    elements.push(y);
                }
            }
        }
        if elements.len() as u128 != order {
            return Err(Error::Internal(format!(
                "enumerated {} elements but the stabilizer chain gives {order}",
                elements.len()
            )));
        }
        elements.sort();
        let index: FxHashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let gen_index = generators.iter().map(|g| index[g]).collect();
        let exponent = orders.iter().fold(1u64, |acc, &o| crate::arith::lcm(acc, o as u64));
        Ok(FiniteGroup {
            degree,
            generators,
            bsgs,
            elements,
            index,
            orders,
            inverses,
            gen_index,
            exponent,
            content_hash,
            classes: OnceLock::new(),
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.gen_index
    }

    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Hex SHA-256 of the degree and generator list.
    pub fn content_hash(&self) -> &str {
        &self.content_hash
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.bsgs.contains(p)
    }

    #[inline]
    pub fn elem_order(&self, i: u32) -> u64 {
        self.orders[i as usize] as u64
    }

    #[inline]
    pub fn inv(&self, i: u32) -> u32 {
        self.inverses[i as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index[&self.elements[a as usize].then(&self.elements[b as usize])]
    }

    /// `g^-1 x g` on indices.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.index[&self.elements[x as usize].conjugate_by(&self.elements[g as usize])]
    }

    pub fn pow(&self, x: u32, e: i64) -> u32 {
        let o = self.elem_order(x) as i64;
        self.index[&self.elements[x as usize].pow(e.rem_euclid(o))]
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        let (x, y) = (&self.elements[a as usize], &self.elements[b as usize]);
        x.then(y) == y.then(x)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_index;
        g.iter().all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| ConjugacyClasses::compute(self))
    }

    pub fn num_classes(&self) -> usize {
        self.classes().len()
    }

    pub fn whole(&self) -> Subgroup {
        let mut set = FixedBitSet::with_capacity(self.elements.len());
        set.insert_range(..);
        Subgroup::from_parts((0..self.order() as u32).collect(), set, self.gen_index.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        let mut set = FixedBitSet::with_capacity(self.elements.len());
        set.insert(0);
        Subgroup::from_parts(vec![0], set, Vec::new())
    }

    /// The subgroup generated by the given element indices.
    pub fn generate(&self, gens: &[u32]) -> Subgroup {
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut set = FixedBitSet::with_capacity(self.elements.len());
        set.insert(0);
        let mut elems = vec![0u32];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !set.contains(y as usize) {
                    set.insert(y as usize);
                    elems.push(y);
                }
            }
        }
        elems.sort_unstable();
        Subgroup::from_parts(elems, set, gens)
    }

    /// Extend subgroup `h` by one more generator.
    pub fn join(&self, h: &Subgroup, g: u32) -> Subgroup {
        if h.contains(g) {
            return h.clone();
        }
        let mut gens = h.gens().to_vec();
        gens.push(g);
        let mut set = h.bitset().clone();
        let mut elems: Vec<u32> = h.elements().to_vec();
        // closure: new elements arise from multiplying by any generator
        let mut head = 0;
        let mut frontier: Vec<u32> = elems.clone();
        while head < frontier.len() {
            let x = frontier[head];
            head += 1;
            for &s in &gens {
                let y = self.mul(x, s);
                if !set.contains(y as usize) {
                    set.insert(y as usize);
                    elems.push(y);
                    frontier.push(y);
                }
            }
        }
        elems.sort_unstable();
        Subgroup::from_parts(elems, set, gens)
    }

    /// Subgroup from an element set that is already known to be closed.
    pub fn subgroup_from_elements(&self, mut elems: Vec<u32>) -> Subgroup {
        elems.sort_unstable();
        elems.dedup();
        let mut set = FixedBitSet::with_capacity(self.elements.len());
        for &e in &elems {
            set.insert(e as usize);
        }
        // greedy generating set in canonical element order
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for &e in &elems {
            if !cur.contains(e) {
                cur = self.join(&cur, e);
                gens.push(e);
            }
        }
        debug_assert_eq!(cur.order(), elems.len() as u64);
        Subgroup::from_parts(elems, set, gens)
    }

    /// The subgroup generated by the given permutations, which must lie in the group.
    pub fn subgroup_of(&self, perms: &[Permutation]) -> Result<Subgroup> {
        let mut idx = Vec::new();
        for p in perms {
            idx.push(self.index_of(p).ok_or(Error::NotMember)?);
        }
        Ok(self.generate(&idx))
    }

    /// Standalone copy of a subgroup as its own permutation group.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let gens: Vec<Permutation> = h.gens().iter().map(|&g| self.element(g).clone()).collect();
        FiniteGroup::new(self.degree, gens).expect("subgroup of an enumerable group")
    }
}

fn hash_generators(degree: usize, gens: &[Permutation]) -> String {
    let mut h = Sha256::new();
    h.update(format!("degree {degree}\n"));
    for g in gens {
        h.update(g.to_string());
        h.update("\n");
    }
    hex::encode(h.finalize())
}
