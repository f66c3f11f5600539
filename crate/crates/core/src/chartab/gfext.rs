//! Extension fields GF(p^d) as polynomials modulo a searched irreducible.

use crate::arith;

#[derive(Clone, Debug)]
pub struct GfExt {
    p: u64,
    d: usize,
    /// Monic modulus, lowest coefficient first, length d + 1.
    modulus: Vec<u64>,
}

pub type Elem = Vec<u64>;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(prod, m, p)
}

fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let lead_inv = arith::inv_mod(m[dm], p).unwrap();
    while a.len() > dm {
        let c = a.pop().unwrap();
        if c == 0 {
            continue;
        }
        let f = c * lead_inv % p;
        let base = a.len() - dm;
        for i in 0..dm {
            a[base + i] = (a[base + i] + p - f * m[i] % p) % p;
        }
    }
    trim(a)
}

fn poly_gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = poly_rem(base.to_vec(), m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

/// Rabin's irreducibility test for a monic polynomial of degree d over F_p.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    let x = vec![0u64, 1];
    let frob = |k: usize| -> Vec<u64> {
        // x^(p^k) mod f by repeated p-th powers
        let mut y = x.clone();
        for _ in 0..k {
            y = poly_powmod(&y, p as u128, f, p);
        }
        y
    };
    let sub_x = |mut y: Vec<u64>| {
        y.resize(y.len().max(2), 0);
        y[1] = (y[1] + p - 1) % p;
        trim(y)
    };
    if !sub_x(frob(d)).is_empty() {
        return false;
    }
    for r in arith::prime_divisors(d as u64) {
        let g = poly_gcd(f.to_vec(), sub_x(frob(d / r as usize)), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl GfExt {
    /// GF(p^d) with the lexicographically first monic irreducible modulus.
    pub fn new(p: u64, d: usize) -> Self {
        if d == 1 {
            return GfExt { p, d, modulus: vec![0, 1] };
        }
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut f: Vec<u64> = (0..d).map(|i| (code / p.pow(i as u32)) % p).collect();
            f.push(1);
            if f[0] != 0 && is_irreducible(&f, p) {
                return GfExt { p, d, modulus: f };
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.d as u32)
    }

    pub fn zero(&self) -> Elem {
        vec![]
    }

    pub fn one(&self) -> Elem {
        vec![1]
    }

    pub fn from_int(&self, v: u64) -> Elem {
        trim(vec![v % self.p])
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let n = a.len().max(b.len());
        let s = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(s)
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        poly_mulmod(a, b, &self.modulus, self.p)
    }

    pub fn pow(&self, a: &Elem, e: u128) -> Elem {
        poly_powmod(a, e, &self.modulus, self.p)
    }

    /// A primitive m-th root of unity, m coprime to p and dividing p^d - 1.
    pub fn primitive_root_of_unity(&self, m: u64) -> Elem {
        let size = self.size();
        assert!((size - 1) % m as u128 == 0, "m must divide the unit group order");
        let primes = arith::prime_divisors(m);
        for code in 1..size {
            let a: Elem = trim((0..self.d).map(|i| ((code / (self.p as u128).pow(i as u32)) % self.p as u128) as u64).collect());
            let y = self.pow(&a, (size - 1) / m as u128);
            if primes.iter().all(|&r| self.pow(&y, (m / r) as u128) != self.one()) {
                return y;
            }
        }
        unreachable!("the unit group is cyclic")
    }
}
