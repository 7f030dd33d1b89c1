use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::{Error, Result};

/// Resultant as the determinant of the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if m == 0 && n == 0 {
        return Ok(BigInt::one());
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    Ok(bareiss(rows))
}

/// Fraction-free Gaussian elimination.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
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

/// `disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::DegreeTooSmall(1));
    }
    if d == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(f, &f.derivative())? / f.leading_coeff();
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn trinomial_discriminants() {
        assert_eq!(discriminant(&p(&[-1, 1, 1])).unwrap(), BigInt::from(5));
        assert_eq!(discriminant(&p(&[-1, 1, 0, 1])).unwrap(), BigInt::from(-31));
        assert_eq!(discriminant(&p(&[-1, 1, 0, 0, 1])).unwrap(), BigInt::from(-283));
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x - 2, x - 5) = 2 - 5
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-5, 1])).unwrap(), BigInt::from(-3));
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[1, 1])).unwrap(), BigInt::zero());
        assert_eq!(discriminant(&p(&[1, 2, 1])).unwrap(), BigInt::zero());
    }
}
