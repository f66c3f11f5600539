//! Deterministic Schreier–Sims.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[point as usize] = Some(Permutation::identity(degree));
        Level { point, gens: Vec::new(), orbit: vec![point], transversal }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.point as usize] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c as usize].is_none() {
                    let u = self.transversal[b as usize].as_ref().unwrap().then(s);
                    self.transversal[c as usize] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut bsgs = Bsgs { degree, levels: Vec::new() };
        for g in generators {
            if !bsgs.contains(g) {
                bsgs.extend(0, g.clone());
            }
        }
        bsgs
    }

    fn extend(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let point = g.first_moved_point().expect("non-identity element");
            self.levels.push(Level::new(point, self.degree));
        }
        self.levels[i].gens.push(g);
        self.levels[i].rebuild_orbit();
        // every Schreier generator of this level must sift through the levels below
        let mut k = 0;
        loop {
            let level = &self.levels[i];
            let total = level.orbit.len() * level.gens.len();
            if k >= total {
                break;
            }
            let b = level.orbit[k / level.gens.len()];
            let s = &level.gens[k % level.gens.len()];
            k += 1;
            let ub = level.transversal[b as usize].as_ref().unwrap();
            let c = s.apply(b);
            let uc = level.transversal[c as usize].as_ref().unwrap();
            let schreier = ub.then(s).then(&uc.inverse());
            if schreier.is_identity() {
                continue;
            }
            let (h, depth) = self.sift(&schreier, i + 1);
            if depth < self.levels.len() || !h.is_identity() {
                self.extend(i + 1, h);
            }
        }
    }

    /// Strip `g` starting at `from`; returns the residue and the level where it stopped.
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(level.point);
            match &level.transversal[b as usize] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, depth) = self.sift(g, 0);
        depth == self.levels.len() && h.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.orbit.len() as u64).collect()
    }

    /// Product of fundamental orbit lengths; `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        self.orbit_lengths()
            .iter()
            .try_fold(1u128, |acc, &l| acc.checked_mul(l as u128))
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..=8usize {
            let cyc: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let gens = [p("(1,2)", n), p(&format!("({})", cyc.join(",")), n)];
            let b = Bsgs::new(n, &gens);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(b.order(), Some(fact));
        }
    }

    #[test]
    fn membership() {
        let gens = [p("(1,2,3)", 4), p("(2,3,4)", 4)];
        let b = Bsgs::new(4, &gens);
        assert_eq!(b.order(), Some(12));
        assert!(b.contains(&p("(1,2)(3,4)", 4)));
        assert!(!b.contains(&p("(1,2)", 4)));
    }
}
