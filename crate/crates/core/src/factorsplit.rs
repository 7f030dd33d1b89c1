//! The `f = A * B * C` split into cyclotomic, reciprocal non-cyclotomic and
//! non-reciprocal parts, plus the classical irreducibility rules for
//! trinomials and quadrinomials of class B.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{gcd_u64, large_primes, phi_table};
use crate::fppoly::{gcd_in_place, FpPoly};
use crate::zpoly::{gcd_z, ClassBSpec, CyclotomicCache, IntPoly};
use crate::{Error, Result};

/// Result of [`split_abc`]. `A * B * C == f` up to sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSplit {
    /// `(k, multiplicity)` for each `Phi_k` dividing `f`, by increasing `k`.
    pub cyclotomic: Vec<(u64, u32)>,
    pub a: IntPoly,
    pub b: IntPoly,
    pub c: IntPoly,
    /// `true` iff `B` is constant.
    pub conjecture_b_holds: bool,
}

impl FactorSplit {
    /// `A * B * C`.
    pub fn product(&self) -> IntPoly {
        &(&self.a * &self.b) * &self.c
    }

    /// Cyclotomic indices without multiplicity.
    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.cyclotomic.iter().map(|&(k, _)| k)
    }
}

fn check_input(f: &IntPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term() == 0.into() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// All `(k, mult)` with `Phi_k^mult || f`.
pub fn cyclotomic_indices(f: &IntPoly) -> Result<Vec<(u64, u32)>> {
    cyclotomic_indices_with(f, &mut CyclotomicCache::default())
}

/// [`cyclotomic_indices`] with a caller-owned cache.
///
/// Every cyclotomic factor of `f` also divides `f*`, so the search runs on
/// `R = gcd(f, f*)`: candidates are the `k` with `phi(k) <= deg R`, first
/// screened modulo a prime and then confirmed by exact division.
pub fn cyclotomic_indices_with(
    f: &IntPoly,
    cache: &mut CyclotomicCache,
) -> Result<Vec<(u64, u32)>> {
    check_input(f)?;
    let r = gcd_z(f, &f.reciprocal()?);
    let d = r.deg();
    if d == 0 {
        return Ok(Vec::new());
    }
    // phi(k) >= sqrt(k) for k > 6
    let bound = (d * d).max(6);
    let phi = phi_table(bound);

    let lc = r.leading_coeff();
    let p = large_primes()
        .find(|&p| lc.clone() % p != 0.into())
        .expect("a prime not dividing lc");
    let rp = FpPoly::from_int(&r, p);
    let x = FpPoly::x(p);

    let mut out = Vec::new();
    let mut rest = f.clone();
    for (k, &phik) in phi.iter().enumerate().take(bound + 1).skip(1) {
        let phik = phik as usize;
        if phik > d {
            continue;
        }
        // Phi_k | R forces deg gcd(R, x^k - 1) >= phi(k) modulo p
        let xk = x.pow_mod(k as u64, &rp);
        let mut h = xk.sub(&FpPoly::new(p, vec![1])).coeffs().to_vec();
        let mut rc = rp.coeffs().to_vec();
        gcd_in_place(&mut rc, &mut h, p);
        let g_deg = if rc.is_empty() { d } else { rc.len() - 1 };
        if g_deg < phik {
            continue;
        }
        let phi_k = cache.get(k as u64)?;
        let mut mult = 0u32;
        while let Some(q) = rest.div_exact(phi_k) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((k as u64, mult));
        }
    }
    Ok(out)
}

/// Computes the split `f = A * B * C`.
pub fn split_abc(f: &IntPoly) -> Result<FactorSplit> {
    split_abc_with(f, &mut CyclotomicCache::default())
}

/// [`split_abc`] with a caller-owned cache.
pub fn split_abc_with(f: &IntPoly, cache: &mut CyclotomicCache) -> Result<FactorSplit> {
    let cyclotomic = cyclotomic_indices_with(f, cache)?;
    let mut a = IntPoly::one();
    for &(k, mult) in &cyclotomic {
        a = &a * &cache.get(k)?.pow(mult);
    }
    let f1 = f.div_exact(&a).ok_or_else(|| {
        Error::Invariant(format!("cyclotomic part does not divide {f}"))
    })?;
    let r = gcd_z(&f1, &f1.reciprocal()?);
    let b = if r.is_constant() { IntPoly::one() } else { r.primitive_part() };
    if !b.is_constant() && !cyclotomic_indices_with(&b, cache)?.is_empty() {
        return Err(Error::Invariant(format!("B = {b} still has a cyclotomic factor")));
    }
    let c = f1
        .div_exact(&b)
        .ok_or_else(|| Error::Invariant(format!("B = {b} does not divide {f1}")))?;
    Ok(FactorSplit {
        conjecture_b_holds: b.is_constant(),
        cyclotomic,
        a,
        b,
        c,
    })
}

/// `f` is irreducible iff `gcd(f, f*)` is constant (the non-reciprocal part
/// of a class-B polynomial is irreducible).
pub fn classb_irreducible(spec: &ClassBSpec) -> bool {
    classb_exponents_irreducible(spec.n(), spec.m())
}

/// [`classb_irreducible`] for `-1 + x + x^n + sum x^{m_j}` given by its
/// exponents, which must satisfy the class-B gap rule.
pub fn classb_exponents_irreducible(n: usize, m: &[usize]) -> bool {
    let deg = m.last().copied().unwrap_or(n);
    let mut a = vec![0u64; deg + 1];
    a[0] = SCREEN_PRIME - 1;
    a[1] = 1;
    a[n] += 1;
    for &e in m {
        a[e] += 1;
    }
    // f is monic and f* has leading coefficient -1, so a constant gcd mod p
    // already forces a constant gcd over Z
    let mut b: Vec<u64> = a.iter().rev().copied().collect();
    screen_gcd(&mut a, &mut b);
    if a.len() <= 1 {
        return true;
    }
    if lifted_divisor(&a, n, m) {
        return false;
    }
    let f = ClassBSpec::new(n, m.to_vec()).expect("class-B exponents").to_poly();
    let fs = f.reciprocal().expect("class-B polynomials are nonzero");
    gcd_z(&f, &fs).is_constant()
}

/// Lifts the gcd image `g` (mod `SCREEN_PRIME`) to a monic integer
/// polynomial with symmetric coefficients and tests whether it divides
/// both `f` and `f*` exactly.
fn lifted_divisor(g: &[u64], n: usize, m: &[usize]) -> bool {
    let p = SCREEN_PRIME;
    let inv = crate::arith::inv_mod(g[g.len() - 1], p);
    let lift: Vec<i128> = g
        .iter()
        .map(|&c| {
            let v = crate::arith::mul_mod(c, inv, p);
            if v > p / 2 { v as i128 - p as i128 } else { v as i128 }
        })
        .collect();
    let deg = m.last().copied().unwrap_or(n);
    let mut f = vec![0i128; deg + 1];
    f[0] = -1;
    f[1] = 1;
    f[n] += 1;
    for &e in m {
        f[e] += 1;
    }
    let fs: Vec<i128> = f.iter().rev().copied().collect();
    divides_monic(&lift, f) && divides_monic(&lift, fs)
}

fn divides_monic(g: &[i128], mut f: Vec<i128>) -> bool {
    let dg = g.len() - 1;
    while f.last() == Some(&0) {
        f.pop();
    }
    if f.len() <= dg {
        return f.is_empty();
    }
    for i in (0..f.len() - dg).rev() {
        let t = f[i + dg];
        if t == 0 {
            continue;
        }
        if t.unsigned_abs() > 1 << 60 {
            return false;
        }
        for (j, &c) in g.iter().enumerate() {
            f[i + j] -= t * c;
        }
    }
    f[..dg].iter().all(|&c| c == 0)
}

const SCREEN_PRIME: u64 = 65521;

fn screen_inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, SCREEN_PRIME - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % SCREEN_PRIME;
        }
        base = base * base % SCREEN_PRIME;
        e >>= 1;
    }
    acc
}

/// Euclid modulo the fixed screening prime on trimmed vectors; the gcd is
/// left in `a`.
fn screen_gcd(a: &mut Vec<u64>, b: &mut Vec<u64>) {
    const P: u64 = SCREEN_PRIME;
    while b.last() == Some(&0) {
        b.pop();
    }
    while !b.is_empty() {
        let db = b.len() - 1;
        if a.len() > db {
            let inv = screen_inv(b[db]);
            for i in (0..a.len() - db).rev() {
                let t = a[i + db] * inv % P;
                if t != 0 {
                    for (j, &c) in b.iter().enumerate() {
                        a[i + j] = (a[i + j] + (P - t) * c) % P;
                    }
                }
            }
            a.truncate(db);
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        core::mem::swap(a, b);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelmerVerdict {
    Irreducible,
    /// `Phi_6 = x^2 - x + 1` divides `-1 + x + x^n`.
    SplitsPhi6,
}

/// Selmer's rule for `-1 + x + x^n`: reducible exactly when `n = 5 mod 6`,
/// and then `Phi_6` is the only cyclotomic factor.
pub fn selmer_rule(n: usize) -> Result<SelmerVerdict> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} must be at least 2")));
    }
    Ok(if n % 6 == 5 {
        SelmerVerdict::SplitsPhi6
    } else {
        SelmerVerdict::Irreducible
    })
}

/// Finch-Jones criterion for the quadrinomial `-1 + x + x^n + x^m1`:
/// irreducible iff `m1 != 0 mod 2 e1` and `n != 0 mod 2 e2`, where
/// `e1 = gcd(m1, n - 1)` and `e2 = gcd(n, m1 - 1)`.
pub fn finch_jones(n: usize, m1: usize) -> Result<bool> {
    ClassBSpec::new(n, vec![m1])?;
    let (n, m1) = (n as u64, m1 as u64);
    let e1 = gcd_u64(m1, n - 1);
    let e2 = gcd_u64(n, m1 - 1);
    Ok(m1 % (2 * e1) != 0 && n % (2 * e2) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zpoly::cyclotomic;

    fn terms(e: &[usize]) -> IntPoly {
        let mut t = vec![(0usize, -1i64)];
        t.extend(e.iter().map(|&e| (e, 1)));
        IntPoly::from_terms(&t)
    }

    #[test]
    fn tau_sections_cyclotomic_factors() {
        let s1 = terms(&[1, 12, 31]);
        assert_eq!(cyclotomic_indices(&s1).unwrap(), [(4, 1), (12, 1)]);
        let s5 = terms(&[1, 12, 31, 44, 63, 86, 105]);
        assert_eq!(cyclotomic_indices(&s5).unwrap(), [(3, 1), (4, 1), (12, 1)]);
        assert_eq!(cyclotomic_indices(&terms(&[1, 5])).unwrap(), [(6, 1)]);
    }

    #[test]
    fn split_of_s1() {
        let s1 = terms(&[1, 12, 31]);
        let sp = split_abc(&s1).unwrap();
        assert_eq!(sp.a, &cyclotomic(4).unwrap() * &cyclotomic(12).unwrap());
        assert!(sp.b.is_one());
        assert_eq!(sp.c.deg(), 25);
        assert!(sp.conjecture_b_holds);
        assert_eq!(sp.product(), s1);
    }

    #[test]
    fn split_of_irreducible_trinomial() {
        let f = terms(&[1, 3]);
        let sp = split_abc(&f).unwrap();
        assert!(sp.a.is_one() && sp.b.is_one());
        assert_eq!(sp.c, f);
    }

    #[test]
    fn nontrivial_b_and_multiplicities() {
        let lehmer = IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let phi3 = cyclotomic(3).unwrap();
        let g = IntPoly::from_i64s(&[-1, 1, 0, 1]);
        let f = &(&lehmer * &phi3.pow(2)) * &g;
        let sp = split_abc(&f).unwrap();
        assert_eq!(sp.cyclotomic, [(3, 2)]);
        assert_eq!(sp.b, lehmer);
        assert!(!sp.conjecture_b_holds);
        assert_eq!(sp.c, g);
        assert_eq!(sp.product(), f);
    }

    #[test]
    fn zero_root_rejected() {
        assert_eq!(split_abc(&IntPoly::from_i64s(&[0, 1, 1])), Err(Error::ZeroConstantTerm));
        assert_eq!(split_abc(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn selmer_and_finch_jones() {
        assert_eq!(selmer_rule(12).unwrap(), SelmerVerdict::Irreducible);
        assert_eq!(selmer_rule(5).unwrap(), SelmerVerdict::SplitsPhi6);
        assert_eq!(selmer_rule(11).unwrap(), SelmerVerdict::SplitsPhi6);
        assert!(finch_jones(3, 5).unwrap());
        assert!(!finch_jones(3, 8).unwrap());
        assert!(!finch_jones(4, 7).unwrap());
        assert!(finch_jones(4, 5).is_err());
    }

    #[test]
    fn section_irreducibility() {
        let s2 = ClassBSpec::new(12, vec![31, 44]).unwrap();
        assert!(classb_irreducible(&s2));
        let s5 = ClassBSpec::new(12, vec![31, 44, 63, 86, 105]).unwrap();
        assert!(!classb_irreducible(&s5));
        assert!(classb_irreducible(&ClassBSpec::trinomial(2).unwrap()));
    }
}
