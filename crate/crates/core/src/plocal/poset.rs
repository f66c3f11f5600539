use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::{FiniteGroup, Subgroup};

/// Largest Sylow order accepted by default.
pub const DEFAULT_POSET_CAP: u64 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainMode {
    /// All strictly increasing chains.
    Sp,
    /// Chains whose members are all normal in the largest one.
    Np,
}

/// The nontrivial p-subgroups of a group, with inclusion and the conjugation action.
pub struct PSubgroupPoset {
    p: u64,
    subgroups: Vec<Subgroup>,
    /// Strictly larger subgroups containing each subgroup.
    above: Vec<Vec<usize>>,
    /// Image of each subgroup under conjugation by each generator.
    action: Vec<Vec<usize>>,
    normalizers: Vec<Subgroup>,
    radical: Vec<bool>,
    /// Conjugacy class label per subgroup; labels count up from 0.
    class: Vec<usize>,
}

/// A representative chain of one G-orbit of chains.
#[derive(Debug, Clone)]
pub struct ChainOrbit {
    /// Subgroup indices in increasing order; empty for the empty chain.
    pub chain: Vec<usize>,
    pub stabilizer: Subgroup,
    pub orbit_size: u64,
}

impl ChainOrbit {
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.chain.len() % 2 == 0 { 1 } else { -1 }
    }
}

impl PSubgroupPoset {
    pub fn new(g: &FiniteGroup, p: u64, cap: u64) -> Result<Self> {
        let sylow_order = arith::pi_part(g.order(), &[p]);
        if sylow_order > cap {
            return Err(Error::PosetCap { sylow: sylow_order, cap });
        }
        let mut subgroups: Vec<Subgroup> = Vec::new();
        let mut index: FxHashMap<Vec<u32>, usize> = FxHashMap::default();
        if sylow_order > 1 {
            // every subgroup of one Sylow subgroup, by repeated joins
            let sylow = g.sylow(p);
            let mut queue = vec![g.trivial()];
            let mut seen: FxHashMap<Vec<u32>, ()> = FxHashMap::default();
            seen.insert(vec![0], ());
            let mut head = 0;
            while head < queue.len() {
                let s = queue[head].clone();
                head += 1;
                for &x in sylow.elements() {
                    if s.contains(x) {
                        continue;
                    }
                    let t = g.join(&s, x);
                    if seen.insert(t.elements().to_vec(), ()).is_none() {
                        queue.push(t);
                    }
                }
            }
            queue.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
            for s in queue.into_iter().filter(|s| !s.is_trivial()) {
                index.insert(s.elements().to_vec(), subgroups.len());
                subgroups.push(s);
            }
        }

        // close under conjugation, remembering a conjugating element from the class leader
        let gens = g.generator_indices().to_vec();
        let mut class = vec![usize::MAX; subgroups.len()];
        let mut transporter = vec![0u32; subgroups.len()];
        let mut leaders = Vec::new();
        let mut action: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
        let base = subgroups.len();
        for start in 0..base {
            if class[start] != usize::MAX {
                continue;
            }
            let label = leaders.len();
            leaders.push(start);
            class[start] = label;
            transporter[start] = 0;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let i = queue[head];
                head += 1;
                for &s in &gens {
                    let image = g.conjugate_subgroup(&subgroups[i], s);
                    if !index.contains_key(image.elements()) {
                        index.insert(image.elements().to_vec(), subgroups.len());
                        subgroups.push(image);
                        class.push(label);
                        transporter.push(g.mul(transporter[i], s));
                        queue.push(subgroups.len() - 1);
                    } else {
                        let j = index[image.elements()];
                        if class[j] == usize::MAX {
                            class[j] = label;
                            transporter[j] = g.mul(transporter[i], s);
                            queue.push(j);
                        }
                    }
                }
            }
        }
        for (gi, &s) in gens.iter().enumerate() {
            action[gi] = subgroups
                .iter()
                .map(|h| index[g.conjugate_subgroup(h, s).elements()])
                .collect();
        }

        let n = subgroups.len();
        let mut above = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&subgroups[i], &subgroups[j]);
                if a.order() < b.order() && b.order() % a.order() == 0 && a.is_subset(b) {
                    above[i].push(j);
                }
            }
        }

        // normalizers and radical flags per class leader, transported to the rest
        let leader_data: Vec<(Subgroup, bool)> = leaders
            .iter()
            .map(|&i| {
                let n = g.normalizer(&subgroups[i]);
                let radical = g.p_core(&n, p).order() == subgroups[i].order();
                (n, radical)
            })
            .collect();
        let normalizers = (0..n)
            .map(|i| g.conjugate_subgroup(&leader_data[class[i]].0, transporter[i]))
            .collect();
        let radical = (0..n).map(|i| leader_data[class[i]].1).collect();

        Ok(PSubgroupPoset { p, subgroups, above, action, normalizers, radical, class })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn above(&self, i: usize) -> &[usize] {
        &self.above[i]
    }

    pub fn normalizer(&self, i: usize) -> &Subgroup {
        &self.normalizers[i]
    }

    pub fn is_radical(&self, i: usize) -> bool {
        self.radical[i]
    }

    /// Image of subgroup `i` under the generator with position `gen`.
    pub fn act(&self, gen: usize, i: usize) -> usize {
        self.action[gen][i]
    }

    /// One representative per conjugacy class of nontrivial p-subgroups.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut reps = Vec::new();
        let mut seen = vec![false; self.len()];
        for i in 0..self.len() {
            if !seen[self.class[i]] {
                seen[self.class[i]] = true;
                reps.push(i);
            }
        }
        reps
    }

    fn extends(&self, mode: ChainMode, chain: &[usize], top: usize) -> bool {
        match mode {
            ChainMode::Sp => true,
            ChainMode::Np => {
                let t = &self.subgroups[top];
                chain.iter().all(|&c| t.is_subset(&self.normalizers[c]))
            }
        }
    }

    /// Visit every nonempty chain whose members all satisfy `allowed`.
    pub fn for_each_chain(&self, mode: ChainMode, allowed: &dyn Fn(usize) -> bool, f: &mut dyn FnMut(&[usize])) {
        let mut chain = Vec::new();
        for i in 0..self.len() {
            if allowed(i) {
                chain.push(i);
                self.walk(mode, allowed, &mut chain, f);
                chain.pop();
            }
        }
    }

    fn walk(&self, mode: ChainMode, allowed: &dyn Fn(usize) -> bool, chain: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        f(chain);
        let last = *chain.last().unwrap();
        for &j in &self.above[last] {
            if allowed(j) && self.extends(mode, chain, j) {
                chain.push(j);
                self.walk(mode, allowed, chain, f);
                chain.pop();
            }
        }
    }

    pub fn all_chains(&self, mode: ChainMode) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_chain(mode, &|_| true, &mut |c| out.push(c.to_vec()));
        out
    }

    /// Orbit representatives of all chains, the empty chain first.
    pub fn chain_orbits(&self, g: &FiniteGroup, mode: ChainMode) -> Vec<ChainOrbit> {
        let chains = self.all_chains(mode);
        let index: FxHashMap<&[usize], usize> = chains.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
        let mut visited = vec![false; chains.len()];
        let mut orbits = vec![ChainOrbit { chain: Vec::new(), stabilizer: g.whole(), orbit_size: 1 }];
        for start in 0..chains.len() {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let c = &chains[queue[head]];
                head += 1;
                for gen in 0..self.action.len() {
                    let image: Vec<usize> = c.iter().map(|&i| self.action[gen][i]).collect();
                    let j = index[image.as_slice()];
                    if !visited[j] {
                        visited[j] = true;
                        queue.push(j);
                    }
                }
            }
            let chain = chains[start].clone();
            let stabilizer = self.chain_stabilizer(g, &chain);
            orbits.push(ChainOrbit { chain, stabilizer, orbit_size: queue.len() as u64 });
        }
        orbits
    }

    /// Intersection of the normalizers of the chain members.
    pub fn chain_stabilizer(&self, g: &FiniteGroup, chain: &[usize]) -> Subgroup {
        let Some((&first, rest)) = chain.split_first() else {
            return g.whole();
        };
        let mut set = self.normalizers[first].bitset().clone();
        for &c in rest {
            set.intersect_with(self.normalizers[c].bitset());
        }
        g.subgroup_from_elements(set.ones().map(|x| x as u32).collect())
    }

    pub fn stats(&self, g: &FiniteGroup) -> PosetStats {
        let mut by_order = BTreeMap::new();
        for s in &self.subgroups {
            *by_order.entry(s.order()).or_insert(0usize) += 1;
        }
        let orbit_lengths = |mode| {
            let mut m = BTreeMap::new();
            for o in self.chain_orbits(g, mode) {
                *m.entry(o.len()).or_insert(0usize) += 1;
            }
            m
        };
        PosetStats {
            prime: self.p,
            subgroups: self.len(),
            subgroups_by_order: by_order,
            conjugacy_classes: self.class_representatives().len(),
            radical_classes: self.class_representatives().into_iter().filter(|&i| self.radical[i]).count(),
            sp_orbits_by_length: orbit_lengths(ChainMode::Sp),
            np_orbits_by_length: orbit_lengths(ChainMode::Np),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetStats {
    pub prime: u64,
    pub subgroups: usize,
    pub subgroups_by_order: BTreeMap<u64, usize>,
    pub conjugacy_classes: usize,
    pub radical_classes: usize,
    pub sp_orbits_by_length: BTreeMap<usize, usize>,
    pub np_orbits_by_length: BTreeMap<usize, usize>,
}
