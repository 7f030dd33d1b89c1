use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;
use crate::arith::{divisors, mobius};
use crate::{Error, Result};

/// The `k`-th cyclotomic polynomial.
pub fn cyclotomic(k: u64) -> Result<IntPoly> {
    CyclotomicCache::default().get(k).cloned()
}

/// Memo table of cyclotomic polynomials. Owned by the caller; share one per
/// thread rather than behind a lock.
#[derive(Debug, Default, Clone)]
pub struct CyclotomicCache {
    table: BTreeMap<u64, IntPoly>,
}

impl CyclotomicCache {
    pub fn get(&mut self, k: u64) -> Result<&IntPoly> {
        if k == 0 {
            return Err(Error::InvalidArgument("cyclotomic index must be >= 1".into()));
        }
        Ok(self.table.entry(k).or_insert_with(|| build(k)))
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// `Phi_k = prod_{d | k} (x^d - 1)^mu(k/d)`: multiply the binomials with
/// `mu = +1`, then exactly divide by those with `mu = -1`.
fn build(k: u64) -> IntPoly {
    let k = k as usize;
    let mut num = vec![BigInt::from(1)];
    let mut dens = Vec::new();
    for d in divisors(k as u64) {
        match mobius(k as u64 / d) {
            1 => num = mul_binomial(&num, d as usize),
            -1 => dens.push(d as usize),
            _ => {}
        }
    }
    for d in dens {
        num = div_binomial(&num, d);
    }
    IntPoly::new(num)
}

/// `a * (x^d - 1)`.
fn mul_binomial(a: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + d];
    for (i, c) in a.iter().enumerate() {
        out[i] -= c;
        out[i + d] += c;
    }
    out
}

/// `a / (x^d - 1)`, exact.
fn div_binomial(a: &[BigInt], d: usize) -> Vec<BigInt> {
    // a[i] = q[i - d] - q[i]  =>  q[i] = q[i - d] - a[i]
    let qlen = a.len() - d;
    let mut q = vec![BigInt::zero(); qlen];
    for i in 0..qlen {
        let prev = if i >= d { q[i - d].clone() } else { BigInt::zero() };
        q[i] = prev - &a[i];
    }
    debug_assert!((qlen..a.len()).all(|i| {
        let prev = if i >= d && i - d < qlen { q[i - d].clone() } else { BigInt::zero() };
        prev == a[i]
    }));
    q
}
