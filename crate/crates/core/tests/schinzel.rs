use lacunary_core::schinzel::{compute_bounds, GNFamily};
use lacunary_core::{ClassBSpec, IntPoly};
use proptest::prelude::*;

fn class_b() -> impl Strategy<Value = ClassBSpec> {
    (2usize..=8, prop::collection::vec(0usize..=10, 1..=5)).prop_map(|(n, extra)| {
        let mut m = Vec::new();
        let mut prev = n;
        for e in extra {
            prev += n - 1 + e;
            m.push(prev);
        }
        ClassBSpec::new(n, m).unwrap()
    })
}

proptest! {
    #[test]
    fn member_at_top_exponent_is_f(spec in class_b(), pick in 0usize..100) {
        let j = 1 + pick % spec.m().len();
        let fam = GNFamily::from_class_b(&spec, j).unwrap();
        let top = *spec.m().last().unwrap();
        prop_assert_eq!(fam.member(top).unwrap(), spec.to_poly());
    }

    #[test]
    fn bounds_are_ordered(spec in class_b()) {
        let d = spec.to_poly();
        let b = compute_bounds(&IntPoly::one(), &d).unwrap();
        prop_assert!(b.ordering_holds(d.deg()));
    }
}

#[test]
fn n4_grows_with_degree_at_fixed_norm() {
    let n4 = |d: &IntPoly| compute_bounds(&IntPoly::one(), d).unwrap().n4;
    for gap in 0..6 {
        let quads: Vec<u64> = (2..=20)
            .map(|n| n4(&ClassBSpec::new(n, vec![2 * n - 1 + gap]).unwrap().to_poly()))
            .collect();
        assert!(quads.windows(2).all(|w| w[0] < w[1]), "{quads:?}");
    }
    let tris: Vec<(usize, u64)> = (2..=40)
        .map(|n| {
            let d = ClassBSpec::trinomial(n).unwrap().to_poly();
            (n, n4(&d))
        })
        .collect();
    assert!(tris.windows(2).all(|w| w[0].1 < w[1].1), "{tris:?}");
    // linear in deg d once the norm sum is fixed
    let steps: Vec<u64> = tris.windows(2).map(|w| w[1].1 - w[0].1).collect();
    assert!(steps.windows(2).all(|w| w[0] == w[1]), "{steps:?}");
}
