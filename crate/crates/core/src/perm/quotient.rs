use super::{FiniteGroup, Permutation, Subgroup};
use crate::error::{Error, Result};

/// `N/Q` realized as the action of `N` on the cosets of `Q`.
pub struct Quotient {
    pub group: FiniteGroup,
    /// Indexed by ambient element index; `u32::MAX` outside `N`.
    projection: Vec<u32>,
    coset_of: Vec<u32>,
}

impl Quotient {
    /// Image in the quotient group of an ambient element of `N`.
    pub fn project(&self, x: u32) -> u32 {
        let p = self.projection[x as usize];
        assert!(p != u32::MAX, "element outside the quotiented subgroup");
        p
    }

    pub fn coset_of(&self, x: u32) -> u32 {
        self.coset_of[x as usize]
    }
}

impl FiniteGroup {
    /// Quotient of the subgroup `n` by its normal subgroup `q`.
    pub fn quotient(&self, n: &Subgroup, q: &Subgroup) -> Result<Quotient> {
        if !self.is_normal_in(q, n) {
            return Err(Error::NotNormal);
        }
        let total = self.order() as usize;
        let mut coset_of = vec![u32::MAX; total];
        let mut coset_reps: Vec<u32> = Vec::new();
        for &x in n.elements() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = coset_reps.len() as u32;
            coset_reps.push(x);
            for &y in q.elements() {
                coset_of[self.mul(x, y) as usize] = c;
            }
        }
        let k = coset_reps.len();
        let action = |g: u32| -> Permutation {
            let images = coset_reps.iter().map(|&r| coset_of[self.mul(r, g) as usize]).collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        };
        let gens: Vec<Permutation> = n
            .gens()
            .iter()
            .map(|&g| action(g))
            .filter(|p| !p.is_identity())
            .collect();
        let group = FiniteGroup::new(k, gens)?;
        // breadth-first over n using the homomorphism property
        let mut projection = vec![u32::MAX; total];
        projection[0] = 0;
        let mut queue = vec![0u32];
        let gen_images: Vec<u32> = n
            .gens()
            .iter()
            .map(|&g| group.index_of(&action(g)).expect("generator image"))
            .collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&g, &gi) in n.gens().iter().zip(&gen_images) {
                let y = self.mul(x, g);
                if projection[y as usize] == u32::MAX {
                    projection[y as usize] = group.mul(projection[x as usize], gi);
                    queue.push(y);
                }
            }
        }
        Ok(Quotient { group, projection, coset_of })
    }
}
