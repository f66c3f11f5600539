use super::FiniteGroup;

/// Conjugacy classes in canonical order: by element order, then class size,
/// then lexicographically minimal representative.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    reps: Vec<u32>,
    sizes: Vec<u64>,
    centralizer_orders: Vec<u64>,
    elem_orders: Vec<u64>,
    members: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    /// `power_cycles[k][t]` is the class of `rep_k^t` for `t < order(rep_k)`.
    power_cycles: Vec<Vec<u32>>,
    inverse_class: Vec<u32>,
}

impl ConjugacyClasses {
    pub(crate) fn compute(g: &FiniteGroup) -> Self {
        let n = g.order() as usize;
        let mut raw_class = vec![u32::MAX; n];
        let mut raw_members: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let cid = raw_members.len() as u32;
            raw_class[start] = cid;
            let mut members = vec![start as u32];
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &s in g.generator_indices() {
                    let y = g.conj(x, s);
                    if raw_class[y as usize] == u32::MAX {
                        raw_class[y as usize] = cid;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            raw_members.push(members);
        }
        // the first member of each raw class is its minimal element
        let mut order: Vec<usize> = (0..raw_members.len()).collect();
        order.sort_by_key(|&c| {
            let rep = raw_members[c][0];
            (g.elem_order(rep), raw_members[c].len(), rep)
        });
        let mut remap = vec![0u32; raw_members.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        let members: Vec<Vec<u32>> = order.iter().map(|&c| std::mem::take(&mut raw_members[c])).collect();
        let class_of: Vec<u32> = raw_class.iter().map(|&c| remap[c as usize]).collect();
        let reps: Vec<u32> = members.iter().map(|m| m[0]).collect();
        let sizes: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
        let centralizer_orders = sizes.iter().map(|&s| g.order() / s).collect();
        let elem_orders: Vec<u64> = reps.iter().map(|&r| g.elem_order(r)).collect();
        let power_cycles = reps
            .iter()
            .map(|&r| {
                let p = g.element(r);
                let mut acc = super::Permutation::identity(g.degree());
                let mut out = Vec::new();
                for _ in 0..g.elem_order(r) {
                    out.push(class_of[g.index_of(&acc).unwrap() as usize]);
                    acc = acc.then(p);
                }
                out
            })
            .collect::<Vec<Vec<u32>>>();
        let inverse_class = reps.iter().map(|&r| class_of[g.inv(r) as usize]).collect();
        ConjugacyClasses {
            reps,
            sizes,
            centralizer_orders,
            elem_orders,
            members,
            class_of,
            power_cycles,
            inverse_class,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    pub fn rep(&self, k: usize) -> u32 {
        self.reps[k]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn size(&self, k: usize) -> u64 {
        self.sizes[k]
    }

    pub fn centralizer_orders(&self) -> &[u64] {
        &self.centralizer_orders
    }

    pub fn centralizer_order(&self, k: usize) -> u64 {
        self.centralizer_orders[k]
    }

    pub fn elem_order(&self, k: usize) -> u64 {
        self.elem_orders[k]
    }

    pub fn members(&self, k: usize) -> &[u32] {
        &self.members[k]
    }

    #[inline]
    pub fn class_of(&self, elem: u32) -> usize {
        self.class_of[elem as usize] as usize
    }

    /// Class of `rep_k^n`; any integer exponent.
    pub fn power(&self, k: usize, n: i64) -> usize {
        let cyc = &self.power_cycles[k];
        cyc[n.rem_euclid(cyc.len() as i64) as usize] as usize
    }

    /// Class of `rep_k^n` for an exponent already reduced modulo something
    /// divisible by every element order.
    pub fn power_u(&self, k: usize, n: u64) -> usize {
        let cyc = &self.power_cycles[k];
        cyc[(n % cyc.len() as u64) as usize] as usize
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k] as usize
    }

    /// Indices of classes whose element order is coprime to every prime in `pi`.
    pub fn pi_regular(&self, pi: &[u64]) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| crate::arith::pi_part(self.elem_orders[k], pi) == 1)
            .collect()
    }

    pub fn is_pi_regular(&self, k: usize, pi: &[u64]) -> bool {
        crate::arith::pi_part(self.elem_orders[k], pi) == 1
    }
}
