//! Exact dense linear algebra: fraction-free determinants, rational solves,
//! and integral left inverses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type QMatrix = Vec<Vec<Q>>;

pub fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_q(m: &[Vec<i64>]) -> QMatrix {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|&x| Q::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// Bareiss determinant with row pivoting.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    det(&to_big(m))
}

/// Leading principal minors D_1, ..., D_n.
pub fn leading_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let sub: IntMatrix = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            det(&sub)
        })
        .collect()
}

/// Minors alternate in sign starting negative. Vacuously true for size 0.
pub fn is_negative_definite(m: &[Vec<BigInt>]) -> bool {
    leading_minors(m).iter().enumerate().all(|(k, d)| {
        if k % 2 == 0 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    })
}

/// Solves A x = b for square nonsingular A.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: QMatrix = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(p, k);
        let piv = m[k][k].clone();
        for j in k..=n {
            m[k][j] = &m[k][j] / &piv;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in k..=n {
                    let v = &m[k][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

pub fn inverse(a: &[Vec<Q>]) -> Option<QMatrix> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Q> = (0..n)
            .map(|i| if i == j { Q::one() } else { Q::zero() })
            .collect();
        cols.push(solve(a, &e)?);
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}

pub fn mat_vec(a: &[Vec<Q>], x: &[Q]) -> Vec<Q> {
    a.iter().map(|r| crate::rational::dot(r, x)).collect()
}

/// For an n×k integer matrix S of rank k whose columns span a primitive
/// sublattice, returns an integer k×n matrix P with P·S = I. Returns None when
/// the column span is not primitive (or rank-deficient).
pub fn integral_left_inverse(s: &[Vec<BigInt>]) -> Option<IntMatrix> {
    let n = s.len();
    let k = if n == 0 { 0 } else { s[0].len() };
    if k > n {
        return None;
    }
    let mut a: IntMatrix = s.to_vec();
    let mut u: IntMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..k {
        // gcd-reduce column c over rows c..n into row c
        loop {
            let nz: Vec<usize> = (c..n).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                return None;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(p, c);
            u.swap(p, c);
            let mut done = true;
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[c][c]);
                for j in 0..k {
                    let v = &f * &a[c][j];
                    a[i][j] -= v;
                }
                for j in 0..n {
                    let v = &f * &u[c][j];
                    u[i][j] -= v;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !a[c][c].abs().is_one() {
            return None;
        }
    }
    // Back-substitute H^{-1} applied to the first k rows of U, H upper triangular, unit diagonal up to sign.
    let mut p: IntMatrix = u[..k].to_vec();
    for r in (0..k).rev() {
        for c in r + 1..k {
            if !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let v = &f * &p[c][j];
                    p[r][j] -= v;
                }
            }
        }
        if a[r][r].is_negative() {
            for x in p[r].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Some(p)
}
