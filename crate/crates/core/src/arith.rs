//! Small integer number theory on machine words.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Returns (p, a) when `q = p^a` with `a >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// The part of `n` made of primes in `primes`.
pub fn pi_part(n: u64, primes: &[u64]) -> u64 {
    let mut out = 1;
    let mut n = n;
    for &p in primes {
        while n % p == 0 {
            n /= p;
            out *= p;
        }
    }
    out
}

pub fn pi_prime_part(n: u64, primes: &[u64]) -> u64 {
    n / pi_part(n, primes)
}

pub fn is_pi_number(n: u64, primes: &[u64]) -> bool {
    pi_part(n, primes) == n
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128 % m as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Returns (g, x, y) with a*x + b*y = g.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Multiplicative order of `a` modulo `m` (1 when m == 1).
pub fn mult_order(a: u64, m: u64) -> u64 {
    assert!(gcd(a, m) == 1, "{a} is not a unit mod {m}");
    if m == 1 {
        return 1;
    }
    let mut k = 1;
    let mut x = a % m;
    while x != 1 {
        x = mul_mod(x, a, m);
        k += 1;
    }
    k
}

/// Reduce a big exponent modulo `m`.
pub fn big_mod(n: &BigUint, m: u64) -> u64 {
    (n % BigUint::from(m)).to_u64().expect("residue fits")
}

/// A generator of the cyclic group (Z/pZ)^*.
pub fn primitive_root(p: u64) -> u64 {
    let fs = prime_divisors(p - 1);
    (1..p)
        .find(|&g| fs.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .expect("prime modulus has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_roundtrip() {
        for n in 1..2000u64 {
            let prod: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn parts() {
        assert_eq!(pi_part(24, &[2]), 8);
        assert_eq!(pi_prime_part(24, &[2]), 3);
        assert_eq!(pi_part(60, &[3, 5]), 15);
        assert!(is_pi_number(1, &[7]));
    }

    #[test]
    fn orders_and_inverses() {
        assert_eq!(mult_order(2, 15), 4);
        assert_eq!(mult_order(2, 3), 2);
        assert_eq!(inv_mod(2, 5), Some(3));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
    }
}
