use alloc::format;
use alloc::vec::Vec;

use super::IntPoly;
use crate::{Error, Result};

/// Exponent data `(n; m1, ..., ms)` of the class-B polynomial
/// `-1 + x + x^n + x^m1 + ... + x^ms`.
///
/// Construction enforces the gap rule: `m1 - n >= n - 1` and
/// `m_{q+1} - m_q >= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassBSpec {
    n: usize,
    m: Vec<usize>,
}

impl ClassBSpec {
    pub fn new(n: usize, m: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidClassB(format!("n = {n} must be at least 2")));
        }
        let mut prev = n;
        for &mj in &m {
            if mj < prev + n - 1 {
                return Err(Error::InvalidClassB(format!(
                    "exponent {mj} follows {prev} with a gap below n - 1 = {}",
                    n - 1
                )));
            }
            prev = mj;
        }
        Ok(Self { n, m })
    }

    /// The trinomial `-1 + x + x^n`.
    pub fn trinomial(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn degree(&self) -> usize {
        self.m.last().copied().unwrap_or(self.n)
    }

    /// Exponents of the `+1` monomials: `1, n, m1, ..., ms`.
    pub fn exponents(&self) -> Vec<usize> {
        let mut e = Vec::with_capacity(self.m.len() + 2);
        e.push(1);
        e.push(self.n);
        e.extend_from_slice(&self.m);
        e
    }

    pub fn to_poly(&self) -> IntPoly {
        let mut terms: Vec<(usize, i64)> = Vec::with_capacity(self.m.len() + 3);
        terms.push((0, -1));
        terms.extend(self.exponents().into_iter().map(|e| (e, 1)));
        IntPoly::from_terms(&terms)
    }

    /// Recognises a class-B polynomial from its coefficients.
    pub fn from_poly(f: &IntPoly) -> Result<Self> {
        let bad = || Error::InvalidClassB(format!("{f} is not of the form -1 + x + x^n + ..."));
        let c = f.coeffs();
        if c.len() < 3 || c[0] != (-1).into() || c[1] != 1.into() {
            return Err(bad());
        }
        let mut exps = Vec::new();
        for (i, ci) in c.iter().enumerate().skip(2) {
            if *ci == 1.into() {
                exps.push(i);
            } else if *ci != 0.into() {
                return Err(bad());
            }
        }
        let (&n, m) = exps.split_first().ok_or_else(bad)?;
        Self::new(n, m.to_vec())
    }
}

impl core::fmt::Display for ClassBSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "B:n={}", self.n)?;
        if !self.m.is_empty() {
            write!(f, ";m=")?;
            for (i, mj) in self.m.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{mj}")?;
            }
        }
        Ok(())
    }
}
