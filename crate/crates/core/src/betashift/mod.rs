//! Rényi beta-expansions of unity for `1 < beta <= (1 + sqrt 5) / 2`.
//!
//! The greedy orbit `r_0 = 1`, `r_i = beta * r_{i-1} - t_i` is kept exactly
//! in `Z[beta]` (reduced modulo the minimal polynomial when it is monic), and
//! each digit `t_i = 1` iff `beta * r_{i-1} >= 1` is decided by an exact sign
//! computation on the isolating interval of `beta`. The digits give the
//! Parry Upper function `-1 + sum t_i x^i`, whose truncations are the
//! class-B sections.

mod algebraic;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::Ratio;
use num_traits::One;

pub use algebraic::{lehmer_poly, lehmer_root, theta_root, AlgebraicReal, MAX_BITS};

use crate::zpoly::IntPoly;
use crate::{Error, Result};

/// Prefix of `d_beta(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaExpansion {
    /// `t_1, t_2, ...`, each 0 or 1.
    pub digits: Vec<u8>,
    /// Positions `i` (1-based) with `t_i = 1`.
    pub exponents: Vec<usize>,
    /// The orbit reached 0 exactly; `digits` is the whole expansion.
    pub finite: bool,
    /// Interval precision (bits) at which each digit was settled.
    pub precision_bits: Vec<u32>,
}

impl BetaExpansion {
    /// `-1 + sum t_i x^i` over the computed digits.
    pub fn parry_polynomial(&self) -> IntPoly {
        let mut terms = vec![(0usize, -1i64)];
        terms.extend(self.exponents.iter().map(|&e| (e, 1)));
        IntPoly::from_terms(&terms)
    }
}

fn golden_check(beta: &mut AlgebraicReal) -> Result<()> {
    let above_one = beta.sign_of(&IntPoly::from_i64s(&[-1, 1]))? == Ordering::Greater;
    let at_most_phi = beta.sign_of(&IntPoly::from_i64s(&[-1, -1, 1]))? != Ordering::Greater;
    if above_one && at_most_phi {
        Ok(())
    } else {
        Err(Error::BetaOutOfDomain(format!("{:.6}", beta.to_f64())))
    }
}

/// First `k` digits of `d_beta(1)` (fewer if the expansion is finite).
pub fn renyi_expansion(beta: &mut AlgebraicReal, k: usize) -> Result<BetaExpansion> {
    renyi_expansion_from(beta, k, 0)
}

/// [`renyi_expansion`] after pre-refining `beta` to `start_bits`. The digits
/// do not depend on `start_bits`.
pub fn renyi_expansion_from(
    beta: &mut AlgebraicReal,
    k: usize,
    start_bits: u32,
) -> Result<BetaExpansion> {
    golden_check(beta)?;
    beta.refine(start_bits);
    let p = beta.minpoly().clone();
    let monic = p.leading_coeff().is_one();
    let reduce = |f: IntPoly| if monic { f.rem_monic(&p) } else { f };
    let one = IntPoly::one();

    let mut out = BetaExpansion {
        digits: Vec::with_capacity(k),
        exponents: Vec::new(),
        finite: false,
        precision_bits: Vec::with_capacity(k),
    };
    let mut r = IntPoly::one();
    for i in 1..=k {
        let br = reduce(r.shift(1));
        let s = reduce(&br - &one);
        let sign = beta.sign_of(&s)?;
        out.precision_bits.push(beta.precision_bits());
        match sign {
            Ordering::Less => {
                out.digits.push(0);
                r = br;
            }
            Ordering::Equal => {
                out.digits.push(1);
                out.exponents.push(i);
                out.finite = true;
                break;
            }
            Ordering::Greater => {
                out.digits.push(1);
                out.exponents.push(i);
                r = s;
            }
        }
    }
    Ok(out)
}

/// Parry's condition on a finite word: every proper tail, padded with
/// zeros to the word's length, is lexicographically smaller than the word.
pub fn parry_admissible(digits: &[u8]) -> bool {
    let n = digits.len();
    (1..n).all(|i| {
        let tail = digits[i..].iter().copied().chain(core::iter::repeat(0));
        tail.take(n).lt(digits.iter().copied())
    })
}

/// `S_j = -1 + x^{e_1} + ... + x^{e_{j+2}}`; `S_0` is the trinomial.
pub fn sections(expansion: &BetaExpansion, j: usize) -> Result<IntPoly> {
    let need = j + 2;
    if expansion.exponents.len() < need {
        return Err(Error::InvalidArgument(format!(
            "section {j} needs {need} nonzero digits, have {}",
            expansion.exponents.len()
        )));
    }
    let mut terms = vec![(0usize, -1i64)];
    terms.extend(expansion.exponents[..need].iter().map(|&e| (e, 1)));
    Ok(IntPoly::from_terms(&terms))
}

/// Consecutive ratios `m_{j+1} / m_j`.
pub fn gap_ratios(exponents: &[usize]) -> Result<Vec<Ratio<u64>>> {
    if exponents.len() < 2 {
        return Err(Error::InvalidArgument("need at least two exponents".into()));
    }
    if exponents.contains(&0) {
        return Err(Error::InvalidArgument("exponents must be positive".into()));
    }
    Ok(exponents
        .windows(2)
        .map(|w| Ratio::new(w[1] as u64, w[0] as u64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn tau_exponents() {
        let mut tau = lehmer_root();
        let e = renyi_expansion(&mut tau, 120).unwrap();
        assert!(!e.finite);
        assert_eq!(e.digits.len(), 120);
        assert_eq!(e.exponents, [1, 12, 31, 44, 63, 86, 105, 118]);
        assert!(parry_admissible(&e.digits));
        let s1 = sections(&e, 1).unwrap();
        assert_eq!(s1, IntPoly::from_terms(&[(0, -1), (1, 1), (12, 1), (31, 1)]));
        assert_eq!(sections(&e, 0).unwrap().deg(), 12);
        assert_eq!(sections(&e, 6).unwrap().deg(), 118);
        assert!(sections(&e, 7).is_err());
    }

    #[test]
    fn theta_inverse_expansions_are_finite() {
        for n in 2..=20 {
            let mut b = theta_root(n).unwrap().inverse().unwrap();
            let e = renyi_expansion(&mut b, 50).unwrap();
            assert!(e.finite, "n = {n}");
            let mut want = vec![0u8; n];
            want[0] = 1;
            want[n - 1] = 1;
            assert_eq!(e.digits, want, "n = {n}");
        }
    }

    #[test]
    fn domain_guard() {
        let mut two = AlgebraicReal::new(
            &IntPoly::from_i64s(&[-2, 1]),
            BigRational::from_integer(BigInt::from(1)),
            BigRational::from_integer(BigInt::from(3)),
        )
        .unwrap();
        assert!(matches!(renyi_expansion(&mut two, 5), Err(Error::BetaOutOfDomain(_))));
        let mut t = theta_root(3).unwrap();
        assert!(renyi_expansion(&mut t, 5).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(parry_admissible(&[1, 0, 0, 1]));
        assert!(parry_admissible(&[1, 1]));
        assert!(!parry_admissible(&[1, 0, 1, 1]));
        assert!(!parry_admissible(&[1, 0, 0, 1, 1]));
    }

    #[test]
    fn ratios() {
        let r = gap_ratios(&[12, 31, 44]).unwrap();
        assert_eq!(r, [Ratio::new(31, 12), Ratio::new(44, 31)]);
        assert_eq!(gap_ratios(&[3, 6, 9]).unwrap(), [Ratio::new(2, 1), Ratio::new(3, 2)]);
        assert!(gap_ratios(&[5]).is_err());
    }
}
