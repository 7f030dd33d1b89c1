use lacunary_core::arith::{divisors, euler_phi};
use lacunary_core::zpoly::{cyclotomic, discriminant, gcd_z, sturm_real_roots};
use lacunary_core::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    poly(max_deg, bound).prop_filter("nonconstant", |f| f.degree().is_some_and(|d| d >= 1))
}

/// Primitive part with a positive leading coefficient.
fn normalize(f: &IntPoly) -> IntPoly {
    let g = f.primitive_part();
    if g.leading_coeff().is_negative() {
        -g
    } else {
        g
    }
}

fn sign_variations(c: &[BigInt]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `p(x + 1)`.
fn taylor_shift(p: &[BigInt]) -> Vec<BigInt> {
    let mut c = p.to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = c[j + 1].clone();
            c[j] += t;
        }
    }
    c
}

/// Roots in `(0, 1)` of a squarefree polynomial, by Descartes' rule on
/// `(1 + x)^d p(1 / (1 + x))` and halving.
fn roots_in_unit(p: &[BigInt]) -> usize {
    let mut rev = p.to_vec();
    rev.reverse();
    match sign_variations(&taylor_shift(&rev)) {
        0 => 0,
        1 => 1,
        _ => {
            let d = p.len() - 1;
            // 2^d p(x / 2) and 2^d p((x + 1) / 2)
            let left: Vec<BigInt> = p.iter().enumerate().map(|(i, c)| c << (d - i)).collect();
            let right = taylor_shift(&left);
            let mid = usize::from(right[0].is_zero());
            roots_in_unit(&left) + roots_in_unit(&right) + mid
        }
    }
}

/// Positive roots of a squarefree `p`, after scaling them into `(0, 1)`.
fn positive_roots(p: &[BigInt]) -> usize {
    let lc = p.last().unwrap().abs();
    let max = p.iter().map(|c| c.abs()).max().unwrap();
    // Cauchy: every root has |x| < 1 + max / |lc| <= 2^k
    let bound = BigInt::one() + max / lc + BigInt::one();
    let k = bound.bits() as usize;
    let scaled: Vec<BigInt> = p.iter().enumerate().map(|(i, c)| c << (k * i)).collect();
    roots_in_unit(&scaled)
}

fn real_roots_by_bisection(f: &IntPoly) -> usize {
    let mut c = f.coeffs().to_vec();
    let zero = usize::from(c[0].is_zero());
    while c[0].is_zero() {
        c.remove(0);
    }
    if c.len() == 1 {
        return zero;
    }
    let neg: Vec<BigInt> =
        c.iter().enumerate().map(|(i, v)| if i % 2 == 1 { -v } else { v.clone() }).collect();
    zero + positive_roots(&c) + positive_roots(&neg)
}

#[test]
fn cyclotomic_degree_and_product() {
    for k in 1..=1000u64 {
        assert_eq!(cyclotomic(k).unwrap().deg() as u64, euler_phi(k), "k = {k}");
    }
    for k in 1..=200u64 {
        let prod = divisors(k).into_iter().fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d).unwrap());
        assert_eq!(prod, IntPoly::x_pow_minus_one(k as usize), "k = {k}");
    }
}

#[test]
fn bisection_oracle_on_known_counts() {
    let cases = [("x^2-2", 2), ("x^2+1", 0), ("x^3-x", 3), ("-1+x+x^2", 2), ("x^5-x-1", 1)];
    for (text, n) in cases {
        assert_eq!(real_roots_by_bisection(&text.parse().unwrap()), n, "{text}");
    }
}

proptest! {
    #[test]
    fn reciprocal_is_an_involution(f in nonconstant(12, 20)) {
        prop_assume!(!f.constant_term().is_zero());
        prop_assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
    }

    #[test]
    fn gcd_scales(f in nonconstant(5, 6), g in nonconstant(5, 6), h in nonconstant(3, 6)) {
        let lhs = gcd_z(&(&f * &h), &(&g * &h));
        let rhs = &h * &gcd_z(&f, &g);
        prop_assert_eq!(normalize(&lhs), normalize(&rhs));
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor(f in nonconstant(8, 5)) {
        prop_assume!(f.deg() >= 2);
        let disc = discriminant(&f).unwrap();
        let g = gcd_z(&f, &f.derivative());
        prop_assert_eq!(disc.is_zero(), !g.is_constant());
    }

    #[test]
    fn squared_factor_zeroes_discriminant(f in nonconstant(4, 5), g in nonconstant(3, 5)) {
        let h = &(&f * &f) * &g;
        prop_assert!(discriminant(&h).unwrap().is_zero());
    }

    #[test]
    fn sturm_matches_bisection(f in nonconstant(10, 9)) {
        prop_assume!(f.deg() >= 2 && !discriminant(&f).unwrap().is_zero());
        prop_assert_eq!(sturm_real_roots(&f), real_roots_by_bisection(&f));
    }

    #[test]
    fn text_round_trip(f in poly(15, 1000)) {
        let text = f.to_string();
        let back: IntPoly = text.parse().unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
    }
}

#[test]
fn sturm_on_200_random_polys() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::SmallRng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 200 {
        let deg = rng.random_range(2..=10);
        let c: Vec<i64> = (0..=deg).map(|_| rng.random_range(-9..=9)).collect();
        let f = IntPoly::from_i64s(&c);
        if f.deg() < 2 || discriminant(&f).unwrap().is_zero() {
            continue;
        }
        assert_eq!(sturm_real_roots(&f), real_roots_by_bisection(&f), "{f}");
        checked += 1;
    }
}
