//! Dixon–Schneider: irreducible characters as common eigenvectors of the
//! class multiplication matrices, computed modulo a prime and lifted.

use super::Cyclotomic;
use crate::arith::{self, inv_mod, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::linalg::{charpoly_mod, eval_poly_mod, kernel_mod, rref_mod};
use crate::perm::FiniteGroup;

/// Smallest prime `l ≡ 1 (mod e)` with `l > 2 sqrt(|G|)`.
pub fn working_prime(order: u64, exponent: u64) -> u64 {
    let mut l = exponent + 1;
    loop {
        if (l as u128) * (l as u128) > 4 * order as u128 && arith::is_prime(l) {
            return l;
        }
        l += exponent;
    }
}

/// Column `k` of the class matrix `M_j`: entry `l` counts `x` in class `j`
/// with `x^-1 z_k` in class `l`, so central characters are right eigenvectors.
fn class_matrix(g: &FiniteGroup, j: usize, p: u64) -> Vec<Vec<u64>> {
    let cl = g.classes();
    let r = cl.len();
    let mut m = vec![vec![0u64; r]; r];
    for &x in cl.members(j) {
        let xi = g.inv(x);
        for k in 0..r {
            let l = cl.class_of(g.mul(xi, cl.rep(k)));
            m[l][k] += 1;
        }
    }
    for row in m.iter_mut() {
        for v in row.iter_mut() {
            *v %= p;
        }
    }
    m
}

fn apply(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + mul_mod(a, b, p)) % p))
        .collect()
}

/// Split an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `m` restricted to it.
fn split(basis: &[Vec<u64>], m: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let mut pivots_rows = basis.to_vec();
    let pivots = rref_mod(&mut pivots_rows, p);
    debug_assert_eq!(pivots_rows, basis);
    // restricted matrix in the coordinates given by pivot entries
    let mut a = vec![vec![0u64; d]; d];
    for (i, b) in basis.iter().enumerate() {
        let img = apply(m, b, p);
        for (i2, &pc) in pivots.iter().enumerate() {
            a[i2][i] = img[pc];
        }
    }
    let cp = charpoly_mod(&a, p);
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        if eval_poly_mod(&cp, lambda, p) != 0 {
            continue;
        }
        let mut shifted = a.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = (row[i] + p - lambda) % p;
        }
        let ker = kernel_mod(&shifted, p);
        let mut vecs: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for (ci, b) in c.iter().zip(basis) {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = (*x + mul_mod(*ci, y, p)) % p;
                    }
                }
                v
            })
            .collect();
        rref_mod(&mut vecs, p);
        found += vecs.len();
        out.push(vecs);
        if found == d {
            break;
        }
    }
    if found != d {
        return Err(Error::Table("class matrix is not diagonalizable over the working prime".into()));
    }
    Ok(out)
}

/// Irreducible characters as per-class values, in no particular order.
pub fn irreducible_characters(g: &FiniteGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let cl = g.classes();
    let r = cl.len();
    let order = g.order();
    let e = g.exponent();
    let p = working_prime(order, e);
    let z = pow_mod(arith::primitive_root(p), (p - 1) / e, p);

    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Vec<Vec<u64>>> = Vec::new();
    let full: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    if r == 1 {
        done.push(full[0].clone());
    } else {
        pending.push(full);
    }
    for j in 1..r {
        if pending.is_empty() {
            break;
        }
        let m = class_matrix(g, j, p);
        let mut next = Vec::new();
        for space in pending {
            for piece in split(&space, &m, p)? {
                if piece.len() == 1 {
                    done.push(piece.into_iter().next().unwrap());
                } else {
                    next.push(piece);
                }
            }
        }
        pending = next;
    }
    if !pending.is_empty() || done.len() != r {
        return Err(Error::Table(format!("eigenspace split left {} of {r} characters", done.len())));
    }

    let mut chars = Vec::with_capacity(r);
    for w in done {
        // normalize so the identity class has central character 1
        let s = inv_mod(w[0], p).ok_or_else(|| Error::Table("zero identity entry".into()))?;
        let w: Vec<u64> = w.iter().map(|&x| mul_mod(x, s, p)).collect();
        let mut total = 0u64;
        for l in 0..r {
            let t = mul_mod(w[l], w[cl.inverse_class(l)], p);
            total = (total + mul_mod(t, inv_mod(cl.size(l) % p, p).unwrap(), p)) % p;
        }
        let deg_sq = mul_mod(order % p, inv_mod(total, p).unwrap(), p);
        let degree = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|&d| mul_mod(d, d, p) == deg_sq && d * d <= order)
            .ok_or_else(|| Error::Table("no integral degree".into()))?;
        let values: Vec<u64> = (0..r)
            .map(|l| mul_mod(mul_mod(degree, w[l], p), inv_mod(cl.size(l) % p, p).unwrap(), p))
            .collect();
        chars.push(lift(g, &values, degree, p, z)?);
    }
    Ok(chars)
}

/// Recover exact values from residues: at a class of order `o` the value is
/// Σ_t m_t ζ_o^t where `m_t` counts eigenvalues ζ_o^t and lies in `[0, degree]`.
fn lift(g: &FiniteGroup, values: &[u64], degree: u64, p: u64, z: u64) -> Result<Vec<Cyclotomic>> {
    let cl = g.classes();
    let e = g.exponent();
    (0..cl.len())
        .map(|l| {
            let o = cl.elem_order(l);
            let zo = pow_mod(z, e / o, p);
            let zo_inv = inv_mod(zo, p).unwrap();
            let o_inv = inv_mod(o % p, p).unwrap();
            let mut mult = Vec::with_capacity(o as usize);
            for t in 0..o {
                let step = pow_mod(zo_inv, t, p);
                let mut acc = 0u64;
                let mut root = 1u64;
                for s in 0..o {
                    acc = (acc + mul_mod(values[cl.power(l, s as i64)], root, p)) % p;
                    root = mul_mod(root, step, p);
                }
                let m = mul_mod(acc, o_inv, p);
                if m > degree {
                    return Err(Error::Table(format!("eigenvalue multiplicity {m} exceeds degree {degree}")));
                }
                mult.push(m as i64);
            }
            Ok(Cyclotomic::from_int_powers(o, &mult))
        })
        .collect()
}
