//! Word-sized modular arithmetic and primality.

/// `a * b mod p`. Uses 64-bit products when `p` fits in 32 bits.
#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        (a * b) % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a.wrapping_add(b);
    if s >= p || s < a {
        s.wrapping_sub(p)
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a.wrapping_add(p).wrapping_sub(b)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    if p == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit values
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inv_mod of a non-unit");
    s0.rem_euclid(p as i128) as u64
}

/// Reduce a signed value into `[0, p)`.
#[inline]
pub fn reduce_i64(v: i64, p: u64) -> u64 {
    (v as i128).rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below `2^31`, in decreasing order. Used for modular images.
pub fn large_primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..(1u64 << 31)).rev().filter(|&n| n % 2 == 1 && is_prime(n))
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn euler_phi(mut k: u64) -> u64 {
    let mut result = k;
    let mut q = 2;
    while q * q <= k {
        if k % q == 0 {
            while k % q == 0 {
                k /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if k > 1 {
        result -= result / k;
    }
    result
}

/// `phi[k]` for `0 <= k <= n` (with `phi[0] = 0`).
pub fn phi_table(n: usize) -> alloc::vec::Vec<u64> {
    let mut phi: alloc::vec::Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            for j in (i..=n).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    phi
}

/// Möbius function.
pub fn mobius(mut k: u64) -> i8 {
    let mut sign = 1i8;
    let mut q = 2;
    while q * q <= k {
        if k % q == 0 {
            k /= q;
            if k % q == 0 {
                return 0;
            }
            sign = -sign;
        }
        q += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(k: u64) -> alloc::vec::Vec<u64> {
    let mut small = alloc::vec::Vec::new();
    let mut large = alloc::vec::Vec::new();
    let mut i = 1;
    while i * i <= k {
        if k % i == 0 {
            small.push(i);
            if i != k / i {
                large.push(k / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        let small: alloc::vec::Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn inverse_and_pow() {
        for p in [2u64, 3, 101, 2_147_483_647] {
            for a in 1..50u64.min(p) {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
        assert_eq!(pow_mod(2, 15, 31), 1);
    }

    #[test]
    fn multiplicative_functions() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(30), 8);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        let table = phi_table(100);
        assert!((1..=100).all(|k| table[k] == euler_phi(k as u64)));
    }

    #[test]
    fn add_sub_wrap_at_top_of_range() {
        let p = 18_446_744_073_709_551_557u64;
        assert_eq!(add_mod(p - 1, p - 1, p), p - 2);
        assert_eq!(sub_mod(0, 1, p), p - 1);
    }
}
