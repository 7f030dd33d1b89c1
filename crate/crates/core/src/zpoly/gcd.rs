use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::arith::{inv_mod, large_primes, mul_mod, sub_mod};
use crate::fppoly::{gcd_in_place, reduce_big};

/// Greatest common divisor in `Z[x]`, normalised to a positive leading
/// coefficient. The content of the result is the gcd of the input contents.
///
/// Modular algorithm: images modulo word-sized primes are lifted by CRT
/// until the symmetric lift stops changing and divides both inputs.
pub fn gcd_z(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() || g.is_zero() {
        return normalise(if f.is_zero() { g.clone() } else { f.clone() });
    }
    let cont = f.content().gcd(&g.content());
    let a = f.primitive_part();
    let b = g.primitive_part();
    if a.is_constant() || b.is_constant() {
        return IntPoly::constant(cont);
    }
    let gamma = a.leading_coeff().gcd(&b.leading_coeff());
    let bad = a.leading_coeff() * b.leading_coeff();

    let mut best_deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut prev: Option<IntPoly> = None;

    for p in large_primes() {
        let big_p = BigInt::from(p);
        if (&bad % &big_p).is_zero() {
            continue;
        }
        let mut ap: Vec<u64> = a.coeffs().iter().map(|c| reduce_big(c, p)).collect();
        let mut bp: Vec<u64> = b.coeffs().iter().map(|c| reduce_big(c, p)).collect();
        gcd_in_place(&mut ap, &mut bp, p);
        let d = ap.len() - 1;
        if d == 0 {
            return IntPoly::constant(cont);
        }
        if d > best_deg {
            continue;
        }
        // scale the monic image so its leading coefficient is gamma mod p
        let lc_inv = inv_mod(ap[d], p);
        let gp = reduce_big(&gamma, p);
        let scale = mul_mod(lc_inv, gp, p);
        let image: Vec<u64> = ap.iter().map(|&c| mul_mod(c, scale, p)).collect();

        if d < best_deg {
            best_deg = d;
            acc = image.iter().map(|&c| BigInt::from(c)).collect();
            modulus = big_p;
            prev = None;
            continue;
        }
        crt_step(&mut acc, &modulus, &image, p);
        modulus *= &big_p;

        let lifted = IntPoly::new(acc.iter().map(|c| symmetric(c, &modulus)).collect());
        if prev.as_ref() == Some(&lifted) {
            let cand = lifted.primitive_part();
            if cand.divides(&a) && cand.divides(&b) {
                return cand.scale(&cont);
            }
        }
        prev = Some(lifted);
    }
    unreachable!("ran out of primes below 2^31")
}

/// `acc <- x` with `x = acc mod modulus` and `x = image mod p`.
fn crt_step(acc: &mut [BigInt], modulus: &BigInt, image: &[u64], p: u64) {
    let m_mod_p = reduce_big(modulus, p);
    let m_inv = inv_mod(m_mod_p, p);
    for (a, &r) in acc.iter_mut().zip(image) {
        let a_mod_p = reduce_big(a, p);
        let t = mul_mod(sub_mod(r, a_mod_p, p), m_inv, p);
        if t != 0 {
            *a += modulus * BigInt::from(t);
        }
    }
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let half: BigInt = m >> 1;
    if c > &half {
        c - m
    } else {
        c.clone()
    }
}

fn normalise(f: IntPoly) -> IntPoly {
    if f.leading_coeff().is_negative() {
        -f
    } else {
        f
    }
}

/// Primitive polynomial remainder sequence gcd. Slower than [`gcd_z`] but
/// independent of it.
pub fn gcd_z_prs(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() || g.is_zero() {
        return normalise(if f.is_zero() { g.clone() } else { f.clone() });
    }
    let cont = f.content().gcd(&g.content());
    let (mut a, mut b) = (f.primitive_part(), g.primitive_part());
    if a.deg() < b.deg() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    if a.is_constant() {
        return IntPoly::constant(cont);
    }
    a.primitive_part().scale(&cont)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn common_factor_recovered() {
        let h = p(&[-1, 1, 1]);
        let f = &h * &p(&[3, 0, 2]);
        let g = &h * &p(&[5, 7]);
        assert_eq!(gcd_z(&f, &g), h);
        assert_eq!(gcd_z_prs(&f, &g), h);
    }

    #[test]
    fn coprime_and_zero_cases() {
        assert!(gcd_z(&p(&[-1, 1, 1]), &p(&[1, 1])).is_one());
        assert_eq!(gcd_z(&IntPoly::zero(), &p(&[2, -4])), p(&[2, -4]).primitive_part().scale(&2.into()));
        assert_eq!(gcd_z(&p(&[3, -6]), &IntPoly::zero()), p(&[-3, 6]));
        assert_eq!(gcd_z(&p(&[4, 8]), &p(&[6, 12])), p(&[2, 4]));
    }

    #[test]
    fn large_coefficients_and_non_monic() {
        let big: BigInt = num_traits::pow(BigInt::from(10), 30) + 7;
        let h = IntPoly::new(alloc::vec![big.clone(), BigInt::from(-3), BigInt::from(5)]);
        let f = &h * &p(&[1, 0, 0, 9]);
        let g = &h * &p(&[-2, 11]);
        assert_eq!(gcd_z(&f, &g), h);
        assert_eq!(gcd_z_prs(&f, &g), h);
    }

    #[test]
    fn class_b_with_cyclotomic_factor() {
        // -1 + x + x^5 = (x^2 - x + 1)(x^3 + x^2 - 1)
        let f = IntPoly::from_terms(&[(0, -1), (1, 1), (5, 1)]);
        let fs = f.reciprocal().unwrap();
        assert_eq!(gcd_z(&f, &fs), p(&[1, -1, 1]));
    }
}
