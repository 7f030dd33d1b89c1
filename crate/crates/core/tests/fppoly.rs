use lacunary_core::fppoly::{degree_pattern, np_count};
use lacunary_core::stats::sieve_primes;
use lacunary_core::zpoly::resultant;
use lacunary_core::{FpPoly, IntPoly};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn brute(c: &[i64], p: u64) -> usize {
    let p = p as i128;
    (0..p)
        .filter(|&x| c.iter().rev().fold(0i128, |acc, &v| (acc * x + v as i128).rem_euclid(p)) == 0)
        .count()
}

fn coeffs(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-50i64..=50, 2..=max_deg + 1).prop_filter("nonconstant", |c| {
        c.iter().skip(1).any(|&v| v != 0)
    })
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(sieve_primes(200))
}

fn vanishes(c: &[i64], p: u64) -> bool {
    c.iter().all(|&v| v.rem_euclid(p as i64) == 0)
}

#[test]
fn brute_force_all_primes_to_200() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::SmallRng::seed_from_u64(11);
    let primes = sieve_primes(200);
    for _ in 0..100 {
        let deg = rng.random_range(1..=12);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.random_range(-30..=30)).collect();
        c[deg] = rng.random_range(1..=30);
        let f = IntPoly::from_i64s(&c);
        for &p in &primes {
            if vanishes(&c, p) {
                continue;
            }
            assert_eq!(np_count(&f, p).unwrap(), brute(&c, p), "{f} mod {p}");
        }
    }
}

proptest! {
    #[test]
    fn matches_brute_force(c in coeffs(12), p in prime()) {
        prop_assume!(!vanishes(&c, p));
        let f = IntPoly::from_i64s(&c);
        let n = np_count(&f, p).unwrap();
        prop_assert_eq!(n, brute(&c, p));
        let deg = FpPoly::from_int(&f, p).degree().unwrap();
        prop_assert!(n <= deg.min(p as usize));
    }

    #[test]
    fn additive_away_from_resultant(a in coeffs(6), b in coeffs(6), p in prime()) {
        let (f, g) = (IntPoly::from_i64s(&a), IntPoly::from_i64s(&b));
        let bad = resultant(&f, &g).unwrap() * f.leading_coeff() * g.leading_coeff();
        prop_assume!(!(bad % BigInt::from(p)).is_zero());
        let fg = &f * &g;
        prop_assert_eq!(
            np_count(&fg, p).unwrap(),
            np_count(&f, p).unwrap() + np_count(&g, p).unwrap()
        );
    }

    #[test]
    fn degree_pattern_accounts_for_degree(c in coeffs(12), p in prime()) {
        let f = IntPoly::from_i64s(&c);
        let fp = FpPoly::from_int(&f, p);
        let deg = fp.degree().unwrap_or(0);
        prop_assume!(deg >= 1 && (p as usize) > deg);
        prop_assume!(fp.gcd(&fp.derivative()).degree() == Some(0));
        let pattern = degree_pattern(&f, p).unwrap();
        prop_assert_eq!(pattern.iter().sum::<usize>(), deg);
        prop_assert_eq!(pattern.iter().filter(|&&d| d == 1).count(), np_count(&f, p).unwrap());
        prop_assert!(pattern.windows(2).all(|w| w[0] <= w[1]));
    }
}
