//! Exact determinants.
//!
//! Rational matrices are scaled to integers and eliminated fraction-free
//! (Bareiss), so every intermediate value is a minor of the scaled matrix.
//!
//! Cyclotomic matrices live in a group ring that has zero divisors for
//! composite order, so Gaussian elimination (which must invert pivots) is not
//! available. Instead the characteristic polynomial is computed by the
//! division-free Faddeev-LeVerrier recurrence over integer-scaled entries;
//! the only divisions are by the step index, which are exact for integer
//! matrices over any commutative ring.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::Cyclotomic;
use super::{denominator_lcm, Rational};

/// Default cap on determinant size; configurations at desk scale stay far
/// below it.
pub const DET_SIZE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    NotSquare { rows: usize, row: usize, cols: usize },
    TooLarge { size: usize, cap: usize },
    MixedOrders,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NotSquare { rows, row, cols } => {
                write!(f, "matrix with {rows} rows has {cols} columns in row {row}")
            }
            MatrixError::TooLarge { size, cap } => {
                write!(f, "matrix size {size} exceeds the cap of {cap}")
            }
            MatrixError::MixedOrders => write!(f, "matrix mixes root-of-unity orders"),
        }
    }
}

impl core::error::Error for MatrixError {}

fn check_square<T>(m: &[Vec<T>], cap: usize) -> Result<usize, MatrixError> {
    let n = m.len();
    if n > cap {
        return Err(MatrixError::TooLarge { size: n, cap });
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(MatrixError::NotSquare { rows: n, row: i, cols: row.len() });
        }
    }
    Ok(n)
}

/// Exact determinant of a square rational matrix. The empty matrix has
/// determinant 1.
pub fn det_rational(m: &[Vec<Rational>]) -> Result<Rational, MatrixError> {
    let n = check_square(m, DET_SIZE_CAP)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let scale = denominator_lcm(m.iter().flatten());
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.numer() * (&scale / x.denom()))
                .collect()
        })
        .collect();
    let det = bareiss_det(&mut a);
    Ok(Rational::new(det, num_traits::pow(scale, n)))
}

/// Fraction-free Bareiss elimination over the integers.
fn bareiss_det(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = val;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square matrix over Q[Z/q]. The empty matrix has
/// determinant 1 (of the given fallback order when the matrix is empty).
pub fn det_cyclotomic(m: &[Vec<Cyclotomic>]) -> Result<Cyclotomic, MatrixError> {
    det_cyclotomic_capped(m, DET_SIZE_CAP)
}

pub fn det_cyclotomic_capped(m: &[Vec<Cyclotomic>], cap: usize) -> Result<Cyclotomic, MatrixError> {
    let n = check_square(m, cap)?;
    if n == 0 {
        return Ok(Cyclotomic::one(2));
    }
    let q = m[0][0].order();
    if m.iter().flatten().any(|x| x.order() != q) {
        return Err(MatrixError::MixedOrders);
    }

    // Clear denominators so the recurrence runs over integer coefficients.
    let scale = denominator_lcm(m.iter().flatten().flat_map(|x| x.coeffs().iter()));
    let a: ZMatrix = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    x.coeffs()
                        .iter()
                        .map(|c| c.numer() * (&scale / c.denom()))
                        .collect::<Vec<BigInt>>()
                })
                .collect()
        })
        .collect();

    let det_scaled = faddeev_leverrier_det(&a, q);
    let denom = num_traits::pow(scale, n);
    let coeffs = det_scaled
        .into_iter()
        .map(|c| Rational::new(c, denom.clone()))
        .collect();
    Ok(Cyclotomic::new(q, coeffs).expect("order validated above"))
}

// Elements of Z[x]/(x^q - 1) as plain coefficient vectors; the group-ring
// relation is applied once at the very end by Cyclotomic::new.
type ZElem = Vec<BigInt>;
type ZMatrix = Vec<Vec<ZElem>>;

fn z_zero(q: usize) -> ZElem {
    vec![BigInt::zero(); q]
}

fn z_mul(a: &ZElem, b: &ZElem, q: usize) -> ZElem {
    let mut out = z_zero(q);
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[(i + j) % q] += ai * bj;
        }
    }
    out
}

fn z_add_assign(a: &mut ZElem, b: &ZElem) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// Determinant via the characteristic polynomial: M_1 = I, c_k = -tr(A M_k)/k,
/// M_{k+1} = A M_k + c_k I; det A = (-1)^n c_n. The divisions by k are exact
/// because the c_k are the characteristic coefficients, which are integer
/// polynomials in the entries.
fn faddeev_leverrier_det(a: &ZMatrix, q: usize) -> ZElem {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut m: ZMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = z_zero(q);
                    if i == j {
                        e[0] = BigInt::one();
                    }
                    e
                })
                .collect()
        })
        .collect();
    let mut c_k = z_zero(q);
    for k in 1..=n {
        // am = a * m
        let am: ZMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = z_zero(q);
                        for l in 0..n {
                            let prod = z_mul(&a[i][l], &m[l][j], q);
                            z_add_assign(&mut acc, &prod);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let mut trace = z_zero(q);
        for (i, row) in am.iter().enumerate() {
            z_add_assign(&mut trace, &row[i]);
        }
        let k_big = BigInt::from(k);
        c_k = trace
            .iter()
            .map(|t| {
                let (quot, rem) = num_integer::Integer::div_rem(&(-t), &k_big);
                debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
                quot
            })
            .collect();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            z_add_assign(&mut row[i], &c_k);
        }
    }
    if n % 2 == 1 {
        c_k.iter().map(|c| -c).collect()
    } else {
        c_k
    }
}
