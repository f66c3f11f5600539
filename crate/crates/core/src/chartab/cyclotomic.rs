//! Exact elements of cyclotomic fields Q(ζ_n).
//!
//! An element is stored at its conductor `n` (the smallest `n` with the
//! element in Q(ζ_n), never 2 mod 4) as rational coefficients over the
//! power basis `1, ζ_n, .., ζ_n^(φ(n)-1)`, reduced modulo Φ_n. This form is
//! unique, so equality is structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<BigRational>,
}

type Poly = Arc<Vec<i64>>;

fn phi_cache() -> &'static Mutex<FxHashMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<FxHashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(FxHashMap::default()))
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Poly {
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = poly_div_exact(&num, &den);
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduce a polynomial in ζ_n (arbitrary length; exponents taken mod n) to
/// the power basis of Q(ζ_n).
fn reduce_mod_phi(n: u64, mut full: Vec<BigRational>) -> Vec<BigRational> {
    let n_us = n as usize;
    if full.len() > n_us {
        // ζ^n = 1
        let extra = full.split_off(n_us);
        for (i, c) in extra.into_iter().enumerate() {
            full[i % n_us] += c;
        }
    }
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    if full.len() <= deg {
        full.resize(deg, BigRational::zero());
        return full;
    }
    let terms: Vec<(usize, i64)> = phi[..deg].iter().copied().enumerate().filter(|(_, c)| *c != 0).collect();
    for k in (deg..full.len()).rev() {
        if full[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut full[k]);
        for &(i, pc) in &terms {
            full[k - deg + i] -= &c * rat(pc);
        }
    }
    full.truncate(deg);
    full
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rat(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic { n: 1, coeffs: vec![r] }
    }

    /// ζ_n^k.
    pub fn zeta(n: u64, k: i64) -> Self {
        let mut full = vec![BigRational::zero(); n as usize];
        full[k.rem_euclid(n as i64) as usize] = BigRational::one();
        Self::from_powers(n, full)
    }

    /// Σ coeffs[i] ζ_n^i for any number of coefficients.
    pub fn from_powers(n: u64, full: Vec<BigRational>) -> Self {
        let coeffs = reduce_mod_phi(n, full);
        Cyclotomic { n, coeffs }.canonical()
    }

    pub fn from_int_powers(n: u64, full: &[i64]) -> Self {
        Self::from_powers(n, full.iter().map(|&c| rat(c)).collect())
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        (self.n == 1).then(|| &self.coeffs[0])
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|i| i.to_i64())
    }

    /// All power-basis coordinates are integers, i.e. the element lies in Z[ζ_n].
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as exponents of ζ_m for a multiple m of the conductor.
    fn lift(&self, m: u64) -> Vec<BigRational> {
        debug_assert!(m % self.n == 0);
        let step = (m / self.n) as usize;
        let mut full = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[i * step] = c.clone();
            }
        }
        full
    }

    /// Image under ζ ↦ ζ^r on every root of unity (r coprime to the conductor).
    pub fn galois(&self, r: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        assert!(arith::gcd(r.rem_euclid(n) as u64, self.n) == 1, "Galois exponent must be a unit");
        let mut full = vec![BigRational::zero(); self.n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                full[(i as i64 * r).rem_euclid(n) as usize] += c;
            }
        }
        Self::from_powers(self.n, full)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    /// Multiplicative inverse via the norm: the product of all other Galois conjugates.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.to_rational() {
            return Some(Self::from_rational(r.recip()));
        }
        let mut others = Cyclotomic::one();
        for r in 2..self.n as i64 {
            if arith::gcd(r as u64, self.n) == 1 {
                others = &others * &self.galois(r);
            }
        }
        let norm = (&others * self).to_rational().cloned().expect("norm is rational");
        Some(others.scale(&norm.recip()))
    }

    /// Descend to the conductor of the field the element generates.
    fn canonical(mut self) -> Self {
        loop {
            if self.n == 1 {
                return self;
            }
            let mut moved = false;
            for (p, e) in arith::factorize(self.n) {
                if let Some(smaller) = self.descend(p, e) {
                    self = smaller;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return self;
            }
        }
    }

    /// Try to rewrite the element in Q(ζ_{n/p}).
    fn descend(&self, p: u64, e: u32) -> Option<Self> {
        let n = self.n;
        let m = n / p;
        if e >= 2 {
            // Φ_n(x) = Φ_m(x^p): the power basis splits by residue of the exponent mod p
            let ok = self.coeffs.iter().enumerate().all(|(i, c)| i as u64 % p == 0 || c.is_zero());
            if !ok {
                return None;
            }
            let coeffs = self.coeffs.iter().step_by(p as usize).cloned().collect();
            return Some(Cyclotomic { n: m, coeffs });
        }
        // p exactly divides n: ζ_n = ζ_m^u ζ_p^v with p u + m v = 1,
        // where ζ_m = ζ_n^p and ζ_p = ζ_n^m
        let (_, u, v) = arith::ext_gcd(p as i128, m as i128);
        let u = u.rem_euclid(m as i128) as u64;
        let v = v.rem_euclid(p as i128) as u64;
        let mut parts: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); m as usize]; p as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = k as u64;
            let a = (u * k) % m;
            let b = (v * k) % p;
            parts[b as usize][a as usize] += c;
        }
        // ζ_p^(p-1) = -(1 + ζ_p + .. + ζ_p^(p-2)); 1, .., ζ_p^(p-2) are independent over Q(ζ_m)
        let top = parts.pop().unwrap();
        for part in parts.iter_mut() {
            for (x, t) in part.iter_mut().zip(&top) {
                *x -= t;
            }
        }
        for part in parts.iter().skip(1) {
            if !reduce_mod_phi(m, part.clone()).iter().all(|c| c.is_zero()) {
                return None;
            }
        }
        let base = std::mem::take(&mut parts[0]);
        let coeffs = reduce_mod_phi(m, base);
        Some(Cyclotomic { n: m, coeffs })
    }

    /// Evaluate at a root of unity in a modular ring: `zeta_pow(k)` must return
    /// the image of ζ_n^k for this element's conductor `n`.
    pub fn eval_mod(&self, modulus: u64, zeta_pow: impl Fn(u64, u64) -> u64) -> Result<u64> {
        let mut acc = 0u64;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let num = c.numer().mod_floor(&BigInt::from(modulus)).to_u64().unwrap();
            let den = c.denom().mod_floor(&BigInt::from(modulus)).to_u64().unwrap();
            let inv = arith::inv_mod(den, modulus)
                .ok_or_else(|| Error::Internal(format!("denominator {} not invertible mod {modulus}", c.denom())))?;
            let term = arith::mul_mod(arith::mul_mod(num, inv, modulus), zeta_pow(self.n, i as u64), modulus);
            acc = (acc + term) % modulus;
        }
        Ok(acc)
    }

    /// Canonical text form `c0/c1/..@n`; a non-integral coefficient is written `num:den`.
    pub fn serialize(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}:{}", c.numer(), c.denom())
                }
            })
            .collect();
        format!("{}@{}", parts.join("/"), self.n)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Table(format!("bad cyclotomic `{text}`"));
        let (body, n) = text.trim().rsplit_once('@').ok_or_else(bad)?;
        let n: u64 = n.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        let mut coeffs = Vec::new();
        for tok in body.split('/') {
            let c = match tok.split_once(':') {
                Some((a, b)) => {
                    let a: BigInt = a.parse().map_err(|_| bad())?;
                    let b: BigInt = b.parse().map_err(|_| bad())?;
                    if b.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(a, b)
                }
                None => BigRational::from_integer(tok.parse().map_err(|_| bad())?),
            };
            coeffs.push(c);
        }
        if coeffs.len() as u64 != arith::euler_phi(n) {
            return Err(bad());
        }
        let value = Self::from_powers(n, coeffs);
        if value.serialize() != text.trim() {
            return Err(Error::Table(format!("`{text}` is not in canonical form")));
        }
        Ok(value)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n == rhs.n {
            let coeffs: Vec<BigRational> = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
            if self.n == 1 {
                return Cyclotomic { n: 1, coeffs };
            }
            return Cyclotomic { n: self.n, coeffs }.canonical();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let m = arith::lcm(self.n, rhs.n);
        let mut full = self.lift(m);
        for (x, y) in full.iter_mut().zip(rhs.lift(m)) {
            *x += y;
        }
        Cyclotomic::from_powers(m, full)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(r) = rhs.to_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.to_rational() {
            return rhs.scale(r);
        }
        let m = arith::lcm(self.n, rhs.n);
        let (sa, sb) = ((m / self.n) as usize, (m / rhs.n) as usize);
        let mut full = vec![BigRational::zero(); m as usize];
        let mu = m as usize;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[(i * sa + j * sb) % mu] += a * b;
            }
        }
        Cyclotomic::from_powers(m, full)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.n == 1 && rhs.n == 1 {
            self.coeffs[0] += &rhs.coeffs[0];
        } else {
            *self = &*self + rhs;
        }
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_int(v)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let z = match i {
                0 => String::new(),
                1 => format!("z{}", self.n),
                _ => format!("z{}^{i}", self.n),
            };
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            write!(f, "{z}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}
