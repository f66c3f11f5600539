use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image list.
///
/// Products compose left to right: `a * b` applies `a` first, then `b`.
/// The derived ordering is lexicographic on the image list, which is the
/// canonical element order used everywhere downstream.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images: images.into_boxed_slice() })
    }

    /// Build from 0-based cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(Error::InvalidPermutation(format!("point out of range in {cycle:?}")));
                }
                if touched[a as usize] {
                    return Err(Error::InvalidPermutation(format!("cycles are not disjoint at {}", a + 1)));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv.into_boxed_slice() }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let mut out = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[j as usize];
        }
        Permutation { images: out.into_boxed_slice() }
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i as u32)
    }

    /// Extend to a larger degree by fixing the new points, after shifting by `offset`.
    pub fn embed(&self, degree: usize, offset: usize) -> Self {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u32;
        }
        Permutation { images: images.into_boxed_slice() }
    }

    /// Parse 1-based cycle notation such as `(1,2)(3,4)`; `()` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidPermutation(format!("cannot parse `{text}`"));
        if s.is_empty() || s == "()" {
            return Ok(Permutation::identity(degree));
        }
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let mut cycle = Vec::new();
            for tok in body[..close].split(',') {
                let v: u32 = tok.parse().map_err(|_| bad())?;
                if v == 0 || v as usize > degree {
                    return Err(Error::InvalidPermutation(format!("point {v} outside 1..={degree}")));
                }
                cycle.push(v - 1);
            }
            cycles.push(cycle);
            rest = &body[close + 1..];
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    /// Smallest degree needed to hold all points mentioned in `text`.
    pub fn max_point(text: &str) -> Option<usize> {
        text.split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
