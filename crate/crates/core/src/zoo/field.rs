//! Finite fields GF(q), q <= 81, by explicit tables.

use crate::arith;
use crate::error::{Error, Result};

pub const MAX_FIELD: u64 = 81;

/// Pinned irreducible polynomials (coefficients low to high, monic leading
/// term omitted). Every one is primitive, so `x` generates the unit group.
fn pinned_modulus(p: u64, a: u32) -> Option<&'static [u64]> {
    Some(match (p, a) {
        (2, 2) => &[1, 1],             // x^2 + x + 1
        (2, 3) => &[1, 1, 0],          // x^3 + x + 1
        (2, 4) => &[1, 1, 0, 0],       // x^4 + x + 1
        (2, 5) => &[1, 0, 1, 0, 0],    // x^5 + x^2 + 1
        (2, 6) => &[1, 1, 0, 1, 1, 0], // x^6 + x^4 + x^3 + x + 1
        (3, 2) => &[2, 2],             // x^2 + 2x + 2
        (3, 3) => &[1, 2, 0],          // x^3 + 2x + 1
        (3, 4) => &[2, 0, 0, 2],       // x^4 + 2x^3 + 2
        (5, 2) => &[2, 4],             // x^2 + 4x + 2
        (7, 2) => &[3, 6],             // x^2 + 6x + 3
        _ => return None,
    })
}

/// GF(q) with elements encoded as integers `0..q`: the base-p digits are the
/// coefficients of a polynomial in the generator `x`.
#[derive(Clone, Debug)]
pub struct Field {
    p: u64,
    degree: u32,
    q: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    primitive: u16,
    modulus: Vec<u64>,
}

impl Field {
    pub fn new(q: u64) -> Result<Self> {
        let (p, a) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD {
            return Err(Error::Unsupported(format!("field of order {q} (limit {MAX_FIELD})")));
        }
        let modulus = if a == 1 { vec![] } else { pinned_modulus(p, a).unwrap().to_vec() };
        let qs = q as usize;
        let digits = |v: u64| -> Vec<u64> { (0..a).map(|i| (v / p.pow(i)) % p).collect() };
        let encode = |d: &[u64]| -> u64 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let s: Vec<u64> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[(x * q + y) as usize] = encode(&s) as u16;
                // schoolbook product then reduce by x^a = -modulus
                let mut prod = vec![0u64; 2 * a as usize];
                for i in 0..a as usize {
                    for j in 0..a as usize {
                        prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
                    }
                }
                for k in (a as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        let t = k - a as usize + i;
                        prod[t] = (prod[t] + (p - m) * c) % p;
                    }
                }
                mul[(x * q + y) as usize] = encode(&prod[..a as usize]) as u16;
            }
        }
        let mut neg = vec![0u16; qs];
        let mut inv = vec![0u16; qs];
        for x in 0..qs {
            for y in 0..qs {
                if add[x * qs + y] == 0 {
                    neg[x] = y as u16;
                }
                if mul[x * qs + y] == 1 {
                    inv[x] = y as u16;
                }
            }
        }
        let mut f = Field { p, degree: a, q, add, mul, neg, inv, primitive: 0, modulus };
        f.primitive = (1..q as u16)
            .find(|&g| f.mult_order(g) == q - 1)
            .expect("finite field unit group is cyclic");
        Ok(f)
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Reduction polynomial, low coefficients first, monic term omitted.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[x as usize * self.q as usize + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.q as usize + y as usize]
    }

    pub fn neg(&self, x: u16) -> u16 {
        self.neg[x as usize]
    }

    pub fn sub(&self, x: u16, y: u16) -> u16 {
        self.add(x, self.neg(y))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: u16) -> Option<u16> {
        (x != 0).then(|| self.inv[x as usize])
    }

    pub fn pow(&self, x: u16, e: u64) -> u16 {
        (0..e).fold(1, |acc, _| self.mul(acc, x))
    }

    pub fn mult_order(&self, x: u16) -> u64 {
        assert!(x != 0);
        let mut k = 1;
        let mut y = x;
        while y != 1 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn primitive_element(&self) -> u16 {
        self.primitive
    }

    /// The additive basis 1, x, .., x^(a-1).
    pub fn additive_basis(&self) -> Vec<u16> {
        (0..self.degree).map(|i| self.p.pow(i) as u16).collect()
    }

    pub fn frobenius(&self, x: u16) -> u16 {
        self.pow(x, self.p)
    }
}
