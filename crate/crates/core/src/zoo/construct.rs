use super::field::Field;
use super::spec::GroupSpec;
use crate::error::{Error, Result};
use crate::perm::{FiniteGroup, Permutation};

/// Build the permutation group named by `spec`.
pub fn construct(spec: &GroupSpec) -> Result<FiniteGroup> {
    let (degree, gens) = generators(spec)?;
    let g = FiniteGroup::new(degree, gens)?.with_label(spec.to_string());
    let expected = spec.expected_order();
    if g.order() as u128 != expected {
        return Err(Error::Internal(format!("{spec} built with order {} instead of {expected}", g.order())));
    }
    Ok(g)
}

/// Degree and generators for `spec`, without enumerating the group.
pub fn generators(spec: &GroupSpec) -> Result<(usize, Vec<Permutation>)> {
    use GroupSpec::*;
    Ok(match *spec {
        Sym(n) => symmetric(n as usize),
        Alt(n) => alternating(n as usize),
        Cyclic(n) => (n as usize, vec![cycle(n as usize, 0, n as usize)]),
        Dihedral(n) => dihedral(n as usize / 2),
        Dicyclic(n) => dicyclic(n as usize / 4),
        Psl(_, q) => psl2(&Field::new(q)?),
        Sl(_, q) => sl2(&Field::new(q)?),
        Gl(n, q) => gl(n as usize, &Field::new(q)?),
        Product(ref parts) => {
            let mut degree = 0;
            let mut all = Vec::new();
            for part in parts {
                let (d, gens) = generators(part)?;
                all.push((degree, gens));
                degree += d;
            }
            let gens = all
                .into_iter()
                .flat_map(|(offset, gens)| gens.into_iter().map(move |g| (offset, g)))
                .map(|(offset, g)| g.embed(degree, offset))
                .collect();
            (degree, gens)
        }
    })
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let degree = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|g| g.embed(degree, 0))
        .chain(b.generators().iter().map(|g| g.embed(degree, a.degree())))
        .collect();
    FiniteGroup::new(degree, gens)
}

fn cycle(degree: usize, start: usize, len: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in 0..len {
        images[start + i] = (start + (i + 1) % len) as u32;
    }
    Permutation::from_images(images).unwrap()
}

fn swap(degree: usize, a: usize, b: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.swap(a, b);
    Permutation::from_images(images).unwrap()
}

fn symmetric(n: usize) -> (usize, Vec<Permutation>) {
    if n < 2 {
        return (n.max(1), vec![]);
    }
    (n, vec![swap(n, 0, 1), cycle(n, 0, n)])
}

fn alternating(n: usize) -> (usize, Vec<Permutation>) {
    if n < 3 {
        return (n.max(1), vec![]);
    }
    let gens = (2..n)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i as u32]]).unwrap())
        .collect();
    (n, gens)
}

/// Dihedral group of order 2m acting on m points; m = 2 gives the Klein
/// four-group on 4 points and m = 1 the cyclic group of order 2.
fn dihedral(m: usize) -> (usize, Vec<Permutation>) {
    match m {
        1 => (2, vec![swap(2, 0, 1)]),
        2 => (
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        ),
        _ => {
            let reflection: Vec<u32> = (0..m).map(|i| ((m - i) % m) as u32).collect();
            (m, vec![cycle(m, 0, m), Permutation::from_images(reflection).unwrap()])
        }
    }
}

/// Dicyclic group `<a, x | a^(2m) = 1, x^2 = a^m, x^-1 a x = a^-1>` in its
/// regular representation. Element `a^k x^j` is point `k + 2m*j`.
fn dicyclic(m: usize) -> (usize, Vec<Permutation>) {
    let n = 2 * m;
    let point = |k: usize, j: usize| (k % n + n * j) as u32;
    // right multiplication by a and by x
    let mut by_a = vec![0u32; 2 * n];
    let mut by_x = vec![0u32; 2 * n];
    for j in 0..2 {
        for k in 0..n {
            let here = point(k, j) as usize;
            // a^k x^j a = a^(k + (-1)^j) x^j
            by_a[here] = if j == 0 { point(k + 1, 0) } else { point(k + n - 1, 1) };
            // a^k x^j x: x^2 = a^m
            by_x[here] = if j == 0 { point(k, 1) } else { point(k + m, 0) };
        }
    }
    (
        2 * n,
        vec![Permutation::from_images(by_a).unwrap(), Permutation::from_images(by_x).unwrap()],
    )
}

/// PSL(2,q) on the projective line: points `0..q` are field elements, `q` is infinity.
fn psl2(f: &Field) -> (usize, Vec<Permutation>) {
    let q = f.order() as usize;
    let inf = q as u32;
    let mut gens = Vec::new();
    for a in f.additive_basis() {
        // x -> x + a
        let mut t: Vec<u32> = (0..q).map(|x| f.add(x as u16, a) as u32).collect();
        t.push(inf);
        gens.push(Permutation::from_images(t).unwrap());
        // x -> x / (a x + 1)
        let mut l = Vec::with_capacity(q + 1);
        for x in 0..q as u16 {
            let den = f.add(f.mul(a, x), 1);
            l.push(match f.inv(den) {
                Some(d) => f.mul(x, d) as u32,
                None => inf,
            });
        }
        l.push(f.inv(a).unwrap() as u32);
        gens.push(Permutation::from_images(l).unwrap());
    }
    (q + 1, gens)
}

/// Nonzero vectors of GF(q)^n as points; vector with coordinates `v` is
/// point `sum v_i q^i - 1`.
struct VectorSpace<'a> {
    f: &'a Field,
    n: usize,
}

impl VectorSpace<'_> {
    fn points(&self) -> usize {
        (self.f.order() as usize).pow(self.n as u32) - 1
    }

    fn decode(&self, point: usize) -> Vec<u16> {
        let q = self.f.order() as usize;
        let mut v = point + 1;
        (0..self.n)
            .map(|_| {
                let c = (v % q) as u16;
                v /= q;
                c
            })
            .collect()
    }

    fn encode(&self, v: &[u16]) -> u32 {
        let q = self.f.order() as usize;
        (v.iter().rev().fold(0usize, |acc, &c| acc * q + c as usize) - 1) as u32
    }

    /// Permutation induced by `v -> v M` (row vectors).
    fn matrix_action(&self, m: &[Vec<u16>]) -> Permutation {
        let images = (0..self.points())
            .map(|pt| {
                let v = self.decode(pt);
                let w: Vec<u16> = (0..self.n)
                    .map(|j| (0..self.n).fold(0, |acc, i| self.f.add(acc, self.f.mul(v[i], m[i][j]))))
                    .collect();
                self.encode(&w)
            })
            .collect();
        Permutation::from_images(images).expect("invertible matrix")
    }
}

fn identity_matrix(n: usize) -> Vec<Vec<u16>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as u16).collect()).collect()
}

/// Elementary transvections with entries running over the additive basis.
fn transvections(f: &Field, n: usize) -> Vec<Vec<Vec<u16>>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for a in f.additive_basis() {
                let mut m = identity_matrix(n);
                m[i][j] = a;
                out.push(m);
            }
        }
    }
    out
}

fn sl2(f: &Field) -> (usize, Vec<Permutation>) {
    let vs = VectorSpace { f, n: 2 };
    let gens = transvections(f, 2).iter().map(|m| vs.matrix_action(m)).collect();
    (vs.points(), gens)
}

fn gl(n: usize, f: &Field) -> (usize, Vec<Permutation>) {
    let vs = VectorSpace { f, n };
    let mut mats = transvections(f, n);
    let mut d = identity_matrix(n);
    d[0][0] = f.primitive_element();
    mats.push(d);
    let gens = mats
        .iter()
        .map(|m| vs.matrix_action(m))
        .filter(|p| !p.is_identity())
        .collect();
    (vs.points(), gens)
}
