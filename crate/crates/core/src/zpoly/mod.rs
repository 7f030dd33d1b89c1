//! Dense univariate polynomials with arbitrary-precision integer coefficients.

mod classb;
mod cyclotomic;
mod gcd;
mod resultant;
mod sturm;
mod text;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub use classb::ClassBSpec;
pub use cyclotomic::{cyclotomic, CyclotomicCache};
pub use gcd::{gcd_z, gcd_z_prs};
pub use resultant::{discriminant, resultant};
pub use sturm::{
    count_real_roots_in, squarefree_decomposition, squarefree_part, sturm_real_roots,
    sturm_sequence,
};

/// Integer polynomial. `coeffs[i]` is the coefficient of `x^i`; the last
/// stored coefficient is nonzero and the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl core::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds `sum c * x^e` from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for &(e, c) in terms {
            coeffs[e] += c;
        }
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    /// `x^k - 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        Self::from_terms(&[(0, -1), (k, 1)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`; `None` unless all are divisible.
    pub fn div_scalar(&self, k: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// The reciprocal polynomial `x^deg f * f(1/x)`, i.e. the reversed
    /// coefficient vector.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// `f* == f`.
    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn sq_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `f(num/den)` for `den > 0`, computed exactly from the
    /// homogenised value `sum c_i num^i den^(d-i)`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Ordering {
        debug_assert!(den.is_positive());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        match acc.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    /// Coefficients as `i64` if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Exact quotient over `Z`; `None` if `d` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.deg();
        if n < dd {
            return None;
        }
        let lc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    pub fn divides(&self, f: &IntPoly) -> bool {
        f.div_exact(self).is_some()
    }

    /// Pseudo-remainder `lc(d)^(deg f - deg d + 1) * f mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        if n < dd {
            return self.clone();
        }
        let lc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut steps = 0;
        for i in (0..=n - dd).rev() {
            let top = rem[i + dd].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            steps += 1;
            if top.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &top * dc;
            }
        }
        debug_assert_eq!(steps, n - dd + 1);
        rem.truncate(dd);
        Self::new(rem)
    }

    /// Remainder modulo a monic `m` (no pseudo-scaling needed).
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        let dm = m.degree().expect("rem_monic by zero polynomial");
        debug_assert!(m.leading_coeff().is_one());
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        if n < dm {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        for i in (0..=n - dm).rev() {
            let top = rem[i + dm].clone();
            if top.is_zero() {
                continue;
            }
            for (j, mc) in m.coeffs.iter().enumerate() {
                if !mc.is_zero() {
                    rem[i + j] -= &top * mc;
                }
            }
        }
        rem.truncate(dm);
        Self::new(rem)
    }

    /// Folds exponents modulo `k`: the image of `self` in `Z[x]/(x^k - 1)`.
    pub fn fold_mod_x_pow_minus_one(&self, k: usize) -> IntPoly {
        let mut out = vec![BigInt::zero(); k.min(self.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[i % k] += c;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { (&self).$m(&rhs) }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert!((&p(&[3, 2]) * &IntPoly::zero()).is_zero());
        // (-1 + x + x^2)(1 - x + x^2) = -1 + 2x - x^2 + 0x^3 + x^4
        assert_eq!(&p(&[-1, 1, 1]) * &p(&[1, -1, 1]), p(&[-1, 2, -1, 0, 1]));
        assert_eq!(&p(&[1, 2, 3]) - &p(&[1, 2, 3]), IntPoly::zero());
        assert_eq!(&p(&[1, 2]) + &p(&[0, -2, 5]), p(&[1, 0, 5]));
    }

    #[test]
    fn trimmed_and_degree() {
        let f = p(&[1, 0, 0, 0]);
        assert_eq!(f.degree(), Some(0));
        assert_eq!(IntPoly::from_i64s(&[0, 0]).degree(), None);
        assert!(IntPoly::from_i64s(&[0, 0]).coeffs().is_empty());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[-1, 1, 0, 1]).reciprocal().unwrap(), p(&[1, 0, 1, -1]));
        assert!(p(&[1, -1, 1]).is_reciprocal());
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(lehmer.reciprocal().unwrap(), lehmer);
        assert_eq!(IntPoly::zero().reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squared_norm() {
        let f = IntPoly::from_terms(&[(0, -1), (1, 1), (5, 1), (14, 1)]);
        assert_eq!(f.sq_norm(), BigInt::from(4));
        assert_eq!(IntPoly::zero().sq_norm(), BigInt::zero());
        assert_eq!(p(&[3, 2]).sq_norm(), BigInt::from(13));
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(f.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 2])), Some(p(&[2])));
        assert_eq!(p(&[1, 3]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        let f = p(&[1, 2, 3, 4]);
        let d = p(&[1, 2]);
        // 2^3 * f(-1/2) = 8 * (1 - 1 + 3/4 - 1/2) = 2
        assert_eq!(f.pseudo_rem(&d), p(&[2]));
    }

    #[test]
    fn content_and_primitive_part() {
        let f = p(&[-4, 6, -2]);
        assert_eq!(f.content(), BigInt::from(2));
        assert_eq!(f.primitive_part(), p(&[2, -3, 1]));
    }

    #[test]
    fn sign_at_rationals() {
        let f = p(&[-1, 1, 1]); // roots ~0.618, ~-1.618
        assert_eq!(f.sign_at(&BigInt::from(1), &BigInt::from(2)), Ordering::Less);
        assert_eq!(f.sign_at(&BigInt::from(2), &BigInt::from(3)), Ordering::Greater);
        assert_eq!(p(&[-1, 2]).sign_at(&BigInt::from(1), &BigInt::from(2)), Ordering::Equal);
    }

    #[test]
    fn folding_modulo_binomial() {
        let f = IntPoly::from_terms(&[(0, 1), (5, 2), (7, 1)]);
        assert_eq!(f.fold_mod_x_pow_minus_one(3), p(&[1, 1, 2]));
    }
}
