use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{gcd_z, IntPoly};

/// Sturm sequence of `f` with each remainder rescaled by a positive factor.
pub fn sturm_sequence(f: &IntPoly) -> Vec<IntPoly> {
    let mut seq = Vec::new();
    if f.is_zero() {
        return seq;
    }
    seq.push(f.clone());
    let d = f.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_constant() {
            break;
        }
        let mut r = a.pseudo_rem(b);
        // prem multiplies by lc(b)^(deg a - deg b + 1); undo a negative sign
        let k = a.deg() - b.deg() + 1;
        if b.leading_coeff().is_negative() && k % 2 == 1 {
            r = -r;
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let r = r.div_scalar(&c).expect("content divides");
        seq.push(-r);
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for s in signs.filter(|&s| s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of(c: &BigInt) -> Ordering {
    c.sign().cmp(&num_bigint::Sign::NoSign)
}

/// Number of distinct real roots of `f`.
pub fn sturm_real_roots(f: &IntPoly) -> usize {
    let seq = sturm_sequence(f);
    let at_pos = sign_changes(seq.iter().map(|s| sign_of(&s.leading_coeff())));
    let at_neg = sign_changes(seq.iter().map(|s| {
        let lc = sign_of(&s.leading_coeff());
        if s.deg() % 2 == 1 { lc.reverse() } else { lc }
    }));
    at_neg - at_pos
}

/// Number of distinct roots of `f` in the half-open interval `(lo, hi]`.
pub fn count_real_roots_in(f: &IntPoly, lo: &BigRational, hi: &BigRational) -> usize {
    if lo >= hi {
        return 0;
    }
    let seq = sturm_sequence(f);
    let v = |x: &BigRational| {
        sign_changes(seq.iter().map(|s| s.sign_at(x.numer(), x.denom())))
    };
    v(lo) - v(hi)
}

/// `f / gcd(f, f')`, primitive.
pub fn squarefree_part(f: &IntPoly) -> IntPoly {
    if f.is_constant() {
        return f.primitive_part();
    }
    let pf = f.primitive_part();
    let g = gcd_z(&pf, &pf.derivative());
    pf.div_exact(&g).expect("gcd divides").primitive_part()
}

/// Yun's algorithm on the primitive part of `f`: pairs `(a_i, i)` with
/// `pp(f) = prod a_i^i` and each `a_i` squarefree, nonconstant and pairwise
/// coprime. Content is dropped.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let pf = f.primitive_part();
    let df = pf.derivative();
    let a0 = gcd_z(&pf, &df);
    let mut b = pf.div_exact(&a0).expect("gcd divides f");
    let c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd_z(&b, &d);
        b = b.div_exact(&a).expect("divides");
        let c = if d.is_zero() { IntPoly::zero() } else { d.div_exact(&a).expect("divides") };
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a.primitive_part(), i));
        }
        i += 1;
    }
    out
}
