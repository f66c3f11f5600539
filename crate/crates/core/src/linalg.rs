//! Linear algebra over prime fields and over the rationals/cyclotomics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{inv_mod, mul_mod};
use crate::chartab::Cyclotomic;

/// Row-reduce in place over F_p; returns pivot columns.
pub fn rref_mod(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p).unwrap();
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..ncols {
                    let t = mul_mod(f, rows[r][k], p);
                    rows[i][k] = (rows[i][k] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right null space `{x : A x = 0}` over F_p.
pub fn kernel_mod(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut m = a.to_vec();
    let pivots = rref_mod(&mut m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)` over F_p via Hessenberg reduction,
/// coefficients lowest degree first.
pub fn charpoly_mod(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    let sub = |x: u64, y: u64| (x + p - y) % p;
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&i| h[i][c] != 0) else { continue };
        if piv != c + 1 {
            h.swap(piv, c + 1);
            for row in h.iter_mut() {
                row.swap(piv, c + 1);
            }
        }
        let inv = inv_mod(h[c + 1][c], p).unwrap();
        for i in c + 2..n {
            if h[i][c] == 0 {
                continue;
            }
            let f = mul_mod(h[i][c], inv, p);
            for k in 0..n {
                let t = mul_mod(f, h[c + 1][k], p);
                h[i][k] = sub(h[i][k], t);
            }
            for row in h.iter_mut() {
                let t = mul_mod(f, row[i], p);
                row[c + 1] = (row[c + 1] + t) % p;
            }
        }
    }
    // recurrence on leading principal submatrices of the Hessenberg form
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let mut pm = vec![0u64; m + 1];
        // (x - h[m-1][m-1]) * p_{m-1}
        let prev = &polys[m - 1];
        for (i, &c) in prev.iter().enumerate() {
            pm[i + 1] = (pm[i + 1] + c) % p;
            pm[i] = sub(pm[i], mul_mod(h[m - 1][m - 1], c, p));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            let coef = mul_mod(t, h[m - i - 1][m - 1], p);
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                pm[k] = sub(pm[k], mul_mod(coef, c, p));
            }
        }
        polys.push(pm);
    }
    polys.pop().unwrap()
}

pub fn eval_poly_mod(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Dense matrix over the rationals.
pub type QMatrix = Vec<Vec<BigRational>>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qmat_from_ints(m: &[Vec<i64>]) -> QMatrix {
    m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Determinant by fraction-free (Bareiss) elimination on integers.
pub fn det_int(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Inverse of a rational matrix, `None` when singular.
pub fn inverse_q(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let pr = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, pr);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..2 * n {
                    let t = &f * &a[c][k];
                    a[i][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn matmul_q(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Dense matrix over a cyclotomic field.
pub type CMatrix = Vec<Vec<Cyclotomic>>;

pub fn cmat_from_q(m: &QMatrix) -> CMatrix {
    m.iter().map(|r| r.iter().map(|x| Cyclotomic::from_rational(x.clone())).collect()).collect()
}

pub fn matmul_c(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Cyclotomic::zero();
                    for k in 0..inner {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            continue;
                        }
                        acc += &(&row[k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn conj_transpose(m: &CMatrix) -> CMatrix {
    transpose(m).into_iter().map(|r| r.into_iter().map(|x| x.conj()).collect()).collect()
}

/// Solve `A X = B` for square invertible `A` over the cyclotomics by
/// Gauss–Jordan elimination; `None` when `A` is singular.
pub fn solve_c(a: &CMatrix, b: &CMatrix) -> Option<CMatrix> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Cyclotomic>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb.iter()).cloned().collect())
        .collect();
    for c in 0..n {
        let pr = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, pr);
        let inv = aug[c][c].inverse()?;
        for x in aug[c].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for k in c..n + m {
                    if aug[c][k].is_zero() {
                        continue;
                    }
                    let t = &f * &aug[c][k];
                    aug[i][k] = &aug[i][k] - &t;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn identity_c(n: usize) -> CMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| Cyclotomic::from_int((i == j) as i64)).collect())
        .collect()
}

/// All principal minors of a symmetric integer matrix are non-negative.
pub fn is_psd_int(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    assert!(n <= 20, "principal-minor test is exponential");
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect();
        !det_int(&sub).is_negative()
    })
}

/// Leading principal minors all positive.
pub fn is_positive_definite_int(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| {
        let sub: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        det_int(&sub).is_positive()
    })
}

/// Rank of a rational matrix.
pub fn rank_q(m: &QMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, pr);
        for i in r + 1..rows {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in c..cols {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Characteristic polynomial of a rational matrix by Faddeev–LeVerrier,
/// coefficients lowest degree first.
pub fn charpoly_q(m: &QMatrix) -> Vec<BigRational> {
    let n = m.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk: QMatrix = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul_q(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = matmul_q(m, &mk);
        let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -tr / q(k as i64);
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_direct() {
        let p = 101;
        let a = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        let cp = charpoly_mod(&a, p);
        // det(xI - A) = x^3 - 9x^2 + 24x - 18
        assert_eq!(cp, vec![p - 18, 24, p - 9, 1]);
        let aq = qmat_from_ints(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        let cq = charpoly_q(&aq);
        assert_eq!(cq, vec![q(-18), q(24), q(-9), q(1)]);
    }

    #[test]
    fn kernel_and_rank() {
        let p = 7;
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel_mod(&a, p);
        assert_eq!(k.len(), 2);
        for v in k {
            let s: u64 = (0..3).map(|i| a[0][i] * v[i]).sum();
            assert_eq!(s % p, 0);
        }
        assert_eq!(rank_q(&qmat_from_ints(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn determinants() {
        assert_eq!(det_int(&[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]), BigInt::from(4));
        assert_eq!(det_int(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert!(is_psd_int(&[vec![1, 1], vec![1, 1]]));
        assert!(!is_positive_definite_int(&[vec![1, 1], vec![1, 1]]));
        assert!(!is_psd_int(&[vec![1, 2], vec![2, 1]]));
        let inv = inverse_q(&qmat_from_ints(&[vec![2, 1], vec![1, 1]])).unwrap();
        assert_eq!(inv, qmat_from_ints(&[vec![1, -1], vec![-1, 2]]));
    }
}
