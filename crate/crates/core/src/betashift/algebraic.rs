use alloc::format;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::zpoly::{count_real_roots_in, gcd_z, squarefree_part, sturm_sequence, IntPoly};
use crate::{Error, Result};

/// Refinement ceiling for sign decisions.
pub const MAX_BITS: u32 = 4096;

/// A real algebraic number: a squarefree integer polynomial together with
/// an isolating interval `(lo, hi)` holding exactly one of its roots.
///
/// When the root is rational and a bisection lands on it, the interval
/// collapses to `lo == hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicReal {
    minpoly: IntPoly,
    lo: BigRational,
    hi: BigRational,
    lo_sign: Ordering,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn sign_at(f: &IntPoly, x: &BigRational) -> Ordering {
    f.sign_at(x.numer(), x.denom())
}

impl AlgebraicReal {
    /// Checks that `poly` changes sign across `(lo, hi)` and has a single
    /// root there. `poly` is replaced by its primitive squarefree part.
    pub fn new(poly: &IntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        if poly.is_constant() {
            return Err(Error::DegreeTooSmall(1));
        }
        if lo >= hi {
            return Err(Error::BadInterval(format!("lo = {lo} is not below hi = {hi}")));
        }
        let minpoly = squarefree_part(poly);
        let (sl, sh) = (sign_at(&minpoly, &lo), sign_at(&minpoly, &hi));
        if sl == Ordering::Equal || sh == Ordering::Equal || sl == sh {
            return Err(Error::BadInterval(format!(
                "{minpoly} does not change sign strictly inside ({lo}, {hi})"
            )));
        }
        let count = count_real_roots_in(&minpoly, &lo, &hi);
        if count != 1 {
            return Err(Error::BadInterval(format!("({lo}, {hi}) holds {count} roots of {minpoly}")));
        }
        Ok(Self { minpoly, lo, hi, lo_sign: sl })
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    /// The interval has collapsed onto a rational root.
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Roughly `-log2(hi - lo)`; `u32::MAX` once exact.
    pub fn precision_bits(&self) -> u32 {
        if self.is_exact() {
            return u32::MAX;
        }
        let w = &self.hi - &self.lo;
        let (n, d) = (w.numer().bits(), w.denom().bits());
        d.saturating_sub(n) as u32
    }

    /// Midpoint as an `f64`.
    pub fn to_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigInt::from(2);
        ratio_to_f64(&mid)
    }

    fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / BigInt::from(2);
        match sign_at(&self.minpoly, &mid) {
            Ordering::Equal => {
                self.lo = mid.clone();
                self.hi = mid;
            }
            s if s == self.lo_sign => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    /// Shrinks the interval below `2^-bits`.
    pub fn refine(&mut self, bits: u32) {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        while !self.is_exact() && &self.hi - &self.lo >= target {
            self.bisect();
        }
    }

    /// `1 / self`, isolated by the reversed polynomial.
    pub fn inverse(&self) -> Result<Self> {
        let zero = BigRational::zero();
        let mut a = self.clone();
        if a.lo < zero && zero < a.hi && sign_at(&a.minpoly, &zero) == Ordering::Equal {
            return Err(Error::InvalidArgument("zero has no inverse".into()));
        }
        while !a.is_exact() && a.lo <= zero && zero <= a.hi {
            a.bisect();
        }
        if a.is_exact() {
            if a.lo.is_zero() {
                return Err(Error::InvalidArgument("zero has no inverse".into()));
            }
            let v = a.lo.recip();
            let lin = IntPoly::new(alloc::vec![-v.numer().clone(), v.denom().clone()]);
            return Self::new(&lin, &v - BigInt::one(), &v + BigInt::one());
        }
        let rev = a.minpoly.reciprocal()?.primitive_part();
        Self::new(&rev, a.hi.recip(), a.lo.recip())
    }

    /// Sign of `q(self)`, refining as needed.
    pub fn sign_of(&mut self, q: &IntPoly) -> Result<Ordering> {
        self.sign_of_within(q, MAX_BITS)
    }

    /// [`AlgebraicReal::sign_of`] with an explicit refinement ceiling.
    ///
    /// A zero is detected exactly through `gcd(q, minpoly)`. Otherwise the
    /// interval is refined until it holds no root of `q`, after which the
    /// sign at either endpoint is the answer.
    pub fn sign_of_within(&mut self, q: &IntPoly, max_bits: u32) -> Result<Ordering> {
        if q.is_zero() {
            return Ok(Ordering::Equal);
        }
        if q.is_constant() {
            return Ok(q.leading_coeff().sign().cmp(&num_bigint::Sign::NoSign));
        }
        if self.is_exact() {
            return Ok(sign_at(q, &self.lo));
        }
        let g = gcd_z(q, &self.minpoly);
        if !g.is_constant() && sign_at(&g, &self.lo) != sign_at(&g, &self.hi) {
            return Ok(Ordering::Equal);
        }
        let qs = squarefree_part(q);
        let seq = sturm_sequence(&qs);
        let changes = |x: &BigRational| {
            let mut last = Ordering::Equal;
            let mut n = 0usize;
            for s in seq.iter().map(|s| sign_at(s, x)).filter(|&s| s != Ordering::Equal) {
                if last != Ordering::Equal && s != last {
                    n += 1;
                }
                last = s;
            }
            n
        };
        loop {
            if self.is_exact() {
                return Ok(sign_at(q, &self.lo));
            }
            let s_lo = sign_at(q, &self.lo);
            if s_lo != Ordering::Equal && changes(&self.lo) == changes(&self.hi) {
                return Ok(s_lo);
            }
            if self.precision_bits() >= max_bits {
                return Err(Error::PrecisionExhausted(max_bits));
            }
            self.bisect();
        }
    }

    /// `g(self) == 0` for a divisor `g` of the minimal polynomial.
    fn is_root_of(&self, g: &IntPoly) -> bool {
        if self.is_exact() {
            sign_at(g, &self.lo) == Ordering::Equal
        } else {
            sign_at(g, &self.lo) != sign_at(g, &self.hi)
        }
    }

    /// Total order on real algebraic numbers.
    pub fn cmp_real(&mut self, other: &mut AlgebraicReal) -> Ordering {
        let g = gcd_z(&self.minpoly, &other.minpoly);
        if !g.is_constant() && self.is_root_of(&g) && other.is_root_of(&g) {
            // both are roots of g; equal iff g has a root in the overlap
            let lo = (&self.lo).max(&other.lo).clone();
            let hi = (&self.hi).min(&other.hi).clone();
            if lo <= hi {
                let here = if lo == hi {
                    sign_at(&g, &lo) == Ordering::Equal
                } else {
                    count_real_roots_in(&g, &lo, &hi) > 0 || sign_at(&g, &lo) == Ordering::Equal
                };
                if here {
                    return Ordering::Equal;
                }
            }
        }
        loop {
            if self.hi < other.lo {
                return Ordering::Less;
            }
            if other.hi < self.lo {
                return Ordering::Greater;
            }
            if self.is_exact() && other.is_exact() {
                return self.lo.cmp(&other.lo);
            }
            self.bisect();
            other.bisect();
        }
    }
}

pub(crate) fn ratio_to_f64(x: &BigRational) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    let shift = (n.bits().max(d.bits()) as i64 - 60).max(0) as usize;
    let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
    if df == 0.0 {
        return x.to_f64().unwrap_or(f64::NAN);
    }
    nf / df
}

/// Unique root of `-1 + x + x^n` in `(0, 1)`.
pub fn theta_root(n: usize) -> Result<AlgebraicReal> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n = {n} must be at least 2")));
    }
    let f = IntPoly::from_terms(&[(0, -1), (1, 1), (n, 1)]);
    AlgebraicReal::new(&f, rat(0, 1), rat(1, 1))
}

/// Lehmer's polynomial `x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1`.
pub fn lehmer_poly() -> IntPoly {
    IntPoly::from_i64s(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// Lehmer's number `tau = 1.17628...`, the root of [`lehmer_poly`] in `(1, 2)`.
pub fn lehmer_root() -> AlgebraicReal {
    AlgebraicReal::new(&lehmer_poly(), rat(1, 1), rat(2, 1)).expect("one root in (1, 2)")
}
