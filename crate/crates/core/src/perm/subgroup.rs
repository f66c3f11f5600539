use fixedbitset::FixedBitSet;
use rustc_hash::FxHashSet;

use super::FiniteGroup;
use crate::arith;
use crate::error::{Error, Result};

/// A subgroup of an ambient [`FiniteGroup`], stored as a sorted list of
/// ambient element indices plus a membership bitset.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elems: Vec<u32>,
    set: FixedBitSet,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elems.hash(state)
    }
}

impl Subgroup {
    pub(crate) fn from_parts(elems: Vec<u32>, set: FixedBitSet, gens: Vec<u32>) -> Self {
        Subgroup { elems, set, gens }
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn bitset(&self) -> &FixedBitSet {
        &self.set
    }

    #[inline]
    pub fn contains(&self, e: u32) -> bool {
        self.set.contains(e as usize)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    /// Position of an ambient element inside `elements()`.
    pub fn position(&self, e: u32) -> Option<usize> {
        self.elems.binary_search(&e).ok()
    }
}

/// π-part and π'-part of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartDecomposition {
    pub pi_part: u32,
    pub pi_prime_part: u32,
}

impl FiniteGroup {
    pub fn centralizer(&self, g: u32) -> Subgroup {
        let elems = (0..self.order() as u32).filter(|&x| self.commute(x, g)).collect();
        self.subgroup_from_elements(elems)
    }

    pub fn centralizer_in(&self, h: &Subgroup, g: u32) -> Subgroup {
        let elems = h.elements().iter().copied().filter(|&x| self.commute(x, g)).collect();
        self.subgroup_from_elements(elems)
    }

    /// Does `g` normalize `h`?
    pub fn center(&self) -> Subgroup {
        let gens = self.generator_indices();
        let elems = (0..self.order() as u32).filter(|&x| gens.iter().all(|&g| self.commute(x, g))).collect();
        self.subgroup_from_elements(elems)
    }

    pub fn normalizes(&self, g: u32, h: &Subgroup) -> bool {
        h.gens().iter().all(|&s| h.contains(self.conj(s, g)))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_in(&self.whole(), h)
    }

    pub fn normalizer_in(&self, k: &Subgroup, h: &Subgroup) -> Subgroup {
        let elems = k.elements().iter().copied().filter(|&g| self.normalizes(g, h)).collect();
        self.subgroup_from_elements(elems)
    }

    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.is_subset(k) && k.gens().iter().all(|&g| self.normalizes(g, h))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// Conjugate subgroup `h^g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: u32) -> Subgroup {
        let elems: Vec<u32> = h.elements().iter().map(|&x| self.conj(x, g)).collect();
        let gens: Vec<u32> = h.gens().iter().map(|&x| self.conj(x, g)).collect();
        let mut set = FixedBitSet::with_capacity(self.order() as usize);
        for &e in &elems {
            set.insert(e as usize);
        }
        let mut elems = elems;
        elems.sort_unstable();
        Subgroup::from_parts(elems, set, gens)
    }

    /// Smallest normal subgroup of `k` containing the elements `xs`.
    pub fn normal_closure_in(&self, k: &Subgroup, xs: &[u32]) -> Subgroup {
        let mut h = self.trivial();
        let mut queue: Vec<u32> = xs.to_vec();
        while let Some(x) = queue.pop() {
            if h.contains(x) {
                continue;
            }
            h = self.join(&h, x);
            for &g in k.gens() {
                for &s in h.gens() {
                    let c = self.conj(s, g);
                    if !h.contains(c) {
                        queue.push(c);
                    }
                }
            }
        }
        h
    }

    pub fn pi_part(&self, g: u32, pi: &[u64]) -> PartDecomposition {
        let n = self.elem_order(g);
        let k = arith::pi_part(n, pi);
        let m = n / k;
        // u*k + v*m = 1
        let (_, u, v) = arith::ext_gcd(k as i128, m as i128);
        let pi_part = self.pow(g, (v * m as i128).rem_euclid(n as i128) as i64);
        let pi_prime_part = self.pow(g, (u * k as i128).rem_euclid(n as i128) as i64);
        PartDecomposition { pi_part, pi_prime_part }
    }

    pub fn count_pi_elements(&self, h: &Subgroup, pi: &[u64]) -> u64 {
        h.elements()
            .iter()
            .filter(|&&x| arith::is_pi_number(self.elem_order(x), pi))
            .count() as u64
    }

    /// True iff the π-regular elements of `h` form a subgroup.
    pub fn has_normal_pi_complement(&self, h: &Subgroup, pi: &[u64]) -> bool {
        let regular: Vec<u32> = h
            .elements()
            .iter()
            .copied()
            .filter(|&x| arith::pi_part(self.elem_order(x), pi) == 1)
            .collect();
        if regular.len() as u64 != arith::pi_prime_part(h.order(), pi) {
            return false;
        }
        let set: FxHashSet<u32> = regular.iter().copied().collect();
        regular.iter().all(|&a| regular.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// A Sylow p-subgroup: start from a p-element of largest order and adjoin
    /// normalizing p-elements until the order reaches `|G|_p`.
    pub fn sylow(&self, p: u64) -> Subgroup {
        self.sylow_in(&self.whole(), p)
    }

    pub fn sylow_in(&self, k: &Subgroup, p: u64) -> Subgroup {
        let target = arith::pi_part(k.order(), &[p]);
        let start = k
            .elements()
            .iter()
            .copied()
            .filter(|&x| arith::is_pi_number(self.elem_order(x), &[p]))
            .max_by_key(|&x| (self.elem_order(x), std::cmp::Reverse(x)))
            .unwrap_or(0);
        let mut s = self.generate(&[start]);
        while s.order() < target {
            let n = self.normalizer_in(k, &s);
            let g = n
                .elements()
                .iter()
                .copied()
                .find(|&x| !s.contains(x) && arith::is_pi_number(self.elem_order(x), &[p]))
                .expect("a non-Sylow p-subgroup has a p-element in its normalizer outside it");
            s = self.join(&s, g);
        }
        s
    }

    /// `O_p(k)`: the elements of a Sylow subgroup whose whole `k`-class stays inside it.
    pub fn p_core(&self, k: &Subgroup, p: u64) -> Subgroup {
        let sylow = self.sylow_in(k, p);
        let mut keep = Vec::new();
        for &y in sylow.elements() {
            let mut seen: FxHashSet<u32> = FxHashSet::default();
            seen.insert(y);
            let mut stack = vec![y];
            let mut inside = true;
            while let Some(z) = stack.pop() {
                if !sylow.contains(z) {
                    inside = false;
                    break;
                }
                for &g in k.gens() {
                    let w = self.conj(z, g);
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            if inside {
                keep.push(y);
            }
        }
        self.subgroup_from_elements(keep)
    }

    /// Some subgroup of `h` of order `n`, by exhaustive search over subgroups
    /// whose order divides `n`.
    pub fn find_subgroup_of_order(&self, h: &Subgroup, n: u64) -> Result<Option<Subgroup>> {
        if n == 0 || h.order() % n != 0 {
            return Err(Error::NotDivisor(n));
        }
        let candidates: Vec<u32> = h
            .elements()
            .iter()
            .copied()
            .filter(|&x| x != 0 && n % self.elem_order(x) == 0)
            .collect();
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        let mut stack = vec![self.trivial()];
        while let Some(s) = stack.pop() {
            if s.order() == n {
                return Ok(Some(s));
            }
            let mut next = Vec::new();
            for &c in &candidates {
                if s.contains(c) {
                    continue;
                }
                let t = self.join(&s, c);
                if n % t.order() == 0 && seen.insert(t.elements().to_vec()) {
                    next.push(t);
                }
            }
            // depth first, earliest candidate on top
            stack.extend(next.into_iter().rev());
        }
        Ok(None)
    }

    /// Which class each class's π-part falls in.
    pub fn pi_sections(&self, pi: &[u64]) -> Vec<usize> {
        let cl = self.classes();
        (0..cl.len())
            .map(|k| cl.class_of(self.pi_part(cl.rep(k), pi).pi_part))
            .collect()
    }

    /// Smallest nontrivial normal subgroup contained in `k` and normal in
    /// `k`, found by normal closures of single elements.
    pub fn minimal_normal_subgroup(&self, k: &Subgroup) -> Option<Subgroup> {
        let mut best: Option<Subgroup> = None;
        let mut seen: FxHashSet<u32> = FxHashSet::default();
        for &x in k.elements() {
            if x == 0 || seen.contains(&x) {
                continue;
            }
            let c = self.normal_closure_in(k, &[x]);
            if best.as_ref().is_none_or(|b| c.order() < b.order()) {
                best = Some(c);
            }
            // conjugates of x give the same closure
            let mut stack = vec![x];
            seen.insert(x);
            while let Some(y) = stack.pop() {
                for &g in k.gens() {
                    let z = self.conj(y, g);
                    if seen.insert(z) {
                        stack.push(z);
                    }
                }
            }
        }
        best
    }
}
