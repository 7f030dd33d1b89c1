//! Polynomials over `F_p` and the root count `N_p(f)`.
//!
//! `N_p(f)` is the number of *distinct* roots of `f mod p` in `F_p`, obtained
//! as `deg gcd(x^p - x, f mod p)`. A double root counts once, so
//! `N_5(-1 + x + x^2) = 1`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{add_mod, inv_mod, is_prime, mul_mod, reduce_i64, sub_mod};
use crate::zpoly::IntPoly;
use crate::{Error, Result};

/// Polynomial with coefficients in `[0, p)`, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Builds from raw residues, reducing each one.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    /// Coefficientwise reduction of an integer polynomial. Does not check
    /// that `p` is prime.
    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let coeffs = f.coeffs().iter().map(|c| reduce_big(c, p)).collect();
        let mut out = Self { p, coeffs };
        out.trim();
        out
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    pub fn monic(&self) -> Self {
        let Some(&lc) = self.coeffs.last() else {
            return self.clone();
        };
        if lc == 1 {
            return self.clone();
        }
        let inv = inv_mod(lc, self.p);
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            out.push(sub_mod(a, b, self.p));
        }
        let mut f = Self { p: self.p, coeffs: out };
        f.trim();
        f
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        let mut f = Self { p, coeffs: out };
        f.trim();
        f
    }

    /// Remainder modulo a nonzero `m`.
    pub fn rem(&self, m: &Self) -> Self {
        let mut r = self.coeffs.clone();
        rem_in_place(&mut r, &m.coeffs, self.p);
        Self { p: self.p, coeffs: r }
    }

    /// Quotient and remainder modulo a nonzero `m`.
    pub fn div_rem(&self, m: &Self) -> (Self, Self) {
        let p = self.p;
        let dm = m.degree().expect("division by the zero polynomial");
        let Some(n) = self.degree().filter(|&n| n >= dm) else {
            return (Self::zero(p), self.clone());
        };
        let inv = inv_mod(m.coeffs[dm], p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; n - dm + 1];
        for i in (0..=n - dm).rev() {
            let t = mul_mod(r[i + dm], inv, p);
            q[i] = t;
            if t == 0 {
                continue;
            }
            for (j, &mc) in m.coeffs.iter().enumerate() {
                r[i + j] = sub_mod(r[i + j], mul_mod(t, mc, p), p);
            }
        }
        r.truncate(dm);
        let mut rem = Self { p, coeffs: r };
        rem.trim();
        let mut quo = Self { p, coeffs: q };
        quo.trim();
        (quo, rem)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.coeffs.clone();
        let mut b = rhs.coeffs.clone();
        gcd_in_place(&mut a, &mut b, self.p);
        Self { p: self.p, coeffs: a }.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }
}

fn trim_vec(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a <- a mod m` for trimmed `a`, `m` with `m` nonzero.
pub(crate) fn rem_in_place(a: &mut Vec<u64>, m: &[u64], p: u64) {
    let dm = m.len() - 1;
    if a.len() <= dm {
        return;
    }
    let inv = inv_mod(m[dm], p);
    for i in (0..a.len() - dm).rev() {
        let top = a[i + dm];
        if top == 0 {
            continue;
        }
        let t = mul_mod(top, inv, p);
        for (j, &mc) in m.iter().enumerate() {
            if mc != 0 {
                a[i + j] = sub_mod(a[i + j], mul_mod(t, mc, p), p);
            }
        }
    }
    a.truncate(dm);
    trim_vec(a);
}

/// Euclid on trimmed coefficient vectors; leaves the (non-monic) gcd in `a`.
pub(crate) fn gcd_in_place(a: &mut Vec<u64>, b: &mut Vec<u64>, p: u64) {
    trim_vec(a);
    trim_vec(b);
    while !b.is_empty() {
        rem_in_place(a, b, p);
        core::mem::swap(a, b);
    }
}

pub(crate) fn reduce_big(c: &BigInt, p: u64) -> u64 {
    match c.to_i64() {
        Some(v) => reduce_i64(v, p),
        None => {
            let r = c % BigInt::from(p);
            let r = r.to_i64().expect("residue fits");
            reduce_i64(r, p)
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Coefficientwise reduction of `f` modulo the prime `p`.
pub fn reduce(f: &IntPoly, p: u64) -> Result<FpPoly> {
    check_prime(p)?;
    Ok(FpPoly::from_int(f, p))
}

/// `x^p mod f` over `F_p`.
pub fn powmod_x(p: u64, f: &FpPoly) -> Result<FpPoly> {
    match f.degree() {
        None | Some(0) => Err(Error::DegreeTooSmall(1)),
        Some(_) => Ok(FpPoly::x(p).pow_mod(p, f)),
    }
}

/// Number of distinct roots of `f` in `F_p`.
pub fn np_count(f: &IntPoly, p: u64) -> Result<usize> {
    check_prime(p)?;
    np_count_fp(&FpPoly::from_int(f, p))
}

/// [`np_count`] for an already reduced polynomial.
pub fn np_count_fp(f: &FpPoly) -> Result<usize> {
    let p = f.modulus();
    match f.degree() {
        None => Err(Error::VanishesModP(p)),
        Some(0) => Ok(0),
        Some(_) => {
            let xp = powmod_x(p, f)?;
            let h = xp.sub(&FpPoly::x(p));
            let g = if h.is_zero() { f.monic() } else { f.gcd(&h) };
            Ok(g.degree().unwrap_or(0))
        }
    }
}

/// Degrees of the irreducible factors of `f mod p` (distinct-degree
/// factorization), sorted ascending. `f mod p` must be squarefree.
pub fn degree_pattern(f: &IntPoly, p: u64) -> Result<Vec<usize>> {
    check_prime(p)?;
    let fp = FpPoly::from_int(f, p);
    let Some(deg) = fp.degree() else {
        return Err(Error::VanishesModP(p));
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    if fp.gcd(&fp.derivative()).degree() != Some(0) {
        return Err(Error::NotSquarefreeModP(p));
    }
    let x = FpPoly::x(p);
    let mut rest = fp.monic();
    let mut h = x.clone();
    let mut pattern = Vec::new();
    let mut i = 0;
    while let Some(d) = rest.degree() {
        if d < 2 * (i + 1) {
            if d > 0 {
                pattern.push(d);
            }
            break;
        }
        i += 1;
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if let Some(gd) = g.degree().filter(|&gd| gd > 0) {
            pattern.extend(core::iter::repeat_n(i, gd / i));
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
    }
    pattern.sort_unstable();
    Ok(pattern)
}
