use lacunary_core::factorsplit::classb_irreducible;
use lacunary_core::stats::{density_p0, density_pmax, prime_sweep, residue_histogram};
use lacunary_core::zpoly::resultant;
use lacunary_core::{ClassBSpec, IntPoly};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn class_b() -> impl Strategy<Value = ClassBSpec> {
    (2usize..=7, prop::collection::vec(0usize..=8, 0..=3)).prop_map(|(n, extra)| {
        let mut m = Vec::new();
        let mut prev = n;
        for e in extra {
            prev += n - 1 + e;
            m.push(prev);
        }
        ClassBSpec::new(n, m).unwrap()
    })
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 2..=5)
        .prop_map(|c| IntPoly::from_i64s(&c))
        .prop_filter("usable", |f| f.deg() >= 1 && !f.constant_term().is_zero() && f.content() == BigInt::one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn densities_sum_to_one(spec in class_b()) {
        let f = spec.to_poly();
        let r = prime_sweep(&f, 3000).unwrap();
        let deg = f.deg();
        let pi = r.entries.len() as u64;
        let middle: u64 = r.count_by_value().iter().filter(|(&v, _)| v != 0 && v != deg).map(|(_, &c)| c).sum();
        let total = density_p0(&f, 3000).unwrap() + density_pmax(&f, 3000).unwrap().0 + Ratio::new(middle, pi);
        prop_assert_eq!(total, Ratio::one());
    }

    #[test]
    fn residue_masses(spec in class_b(), q in 1u64..=7) {
        let f = spec.to_poly();
        let r = prime_sweep(&f, 3000).unwrap();
        let h = residue_histogram(&f, q, 3000, None).unwrap();
        prop_assert_eq!(h.values().sum::<u64>(), r.pi_x() - r.excluded.len() as u64);
        prop_assert!(h.keys().all(|&k| k < q));

        let y = ClassBSpec::trinomial(2).unwrap().to_poly();
        let ry = prime_sweep(&y, 3000).unwrap();
        let hb = residue_histogram(&f, q, 3000, Some(&y)).unwrap();
        let both = r.entries.iter().filter(|(p, _)| ry.entries.iter().any(|(p2, _)| p2 == p)).count();
        prop_assert_eq!(hb.values().sum::<u64>(), both as u64);
    }

    #[test]
    fn kronecker_sum_is_additive(f in small_poly(), g in small_poly()) {
        let fg = &f * &g;
        let bad = resultant(&f, &g).unwrap() * f.leading_coeff() * g.leading_coeff();
        prop_assume!(!bad.is_zero());
        let x = 2000;
        let (rf, rg, rfg) = (prime_sweep(&f, x).unwrap(), prime_sweep(&g, x).unwrap(), prime_sweep(&fg, x).unwrap());
        let get = |r: &lacunary_core::stats::PrimeSweepReport, p: u64| r.entries.iter().find(|e| e.0 == p).map(|e| e.1);
        let mut slack = 0usize;
        for &(p, n) in &rfg.entries {
            let (a, b) = (get(&rf, p), get(&rg, p));
            if (&bad % BigInt::from(p)).is_zero() {
                slack += 1;
                prop_assert!(n <= fg.deg());
                continue;
            }
            prop_assert_eq!(Some(n), a.zip(b).map(|(a, b)| a + b), "p = {}", p);
        }
        let sum = |r: &lacunary_core::stats::PrimeSweepReport| r.entries.iter().map(|e| e.1 as i64).sum::<i64>();
        let gap = (sum(&rfg) - sum(&rf) - sum(&rg)).unsigned_abs() as usize;
        prop_assert!(gap <= slack * fg.deg());
    }
}

#[test]
fn prime_degree_has_p0_witnesses() {
    // 5 and 11 are 5 mod 6, where Phi_6 splits off
    for n in [2usize, 3, 7, 13, 19] {
        let spec = ClassBSpec::trinomial(n).unwrap();
        assert!(classb_irreducible(&spec));
        let r = prime_sweep(&spec.to_poly(), 10_000).unwrap();
        assert!(!r.witnesses(0).is_empty(), "n = {n}");
    }
}
