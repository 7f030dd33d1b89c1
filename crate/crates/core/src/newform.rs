//! Closed forms for `N_p(-1 + x + x^n)` with `n = 2, 3, 4`: Legendre
//! symbols, representation by binary quadratic forms, and the q-expansions
//! whose coefficients `a_p` determine the counts.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::arith::{is_prime, pow_mod};
use crate::fppoly::np_count;
use crate::stats::density_pmax;
use crate::{ClassBSpec, Error, Result};

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// `(a / p)` by Euler's criterion; `p` an odd prime.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    check_odd_prime(p)?;
    let r = a.rem_euclid(p as i64) as u64;
    Ok(match pow_mod(r, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// `(a / n)` for odd `n > 0` by quadratic reciprocity.
pub fn jacobi(a: i64, n: u64) -> Result<i8> {
    if n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("Jacobi symbol needs odd n, got {n}")));
    }
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}

/// `r + s * i * sqrt(2)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ISqrt2 {
    pub r: i64,
    pub s: i64,
}

impl ISqrt2 {
    pub const ZERO: Self = Self { r: 0, s: 0 };
    pub const ONE: Self = Self { r: 1, s: 0 };

    pub const fn new(r: i64, s: i64) -> Self {
        Self { r, s }
    }

    pub fn rational(&self) -> Option<i64> {
        (self.s == 0).then_some(self.r)
    }
}

impl From<i64> for ISqrt2 {
    fn from(r: i64) -> Self {
        Self { r, s: 0 }
    }
}

impl Add for ISqrt2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.r + o.r, self.s + o.s)
    }
}

impl Sub for ISqrt2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.r - o.r, self.s - o.s)
    }
}

impl Neg for ISqrt2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.r, -self.s)
    }
}

impl Mul for ISqrt2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.r * o.r - 2 * self.s * o.s, self.r * o.s + self.s * o.r)
    }
}

impl fmt::Display for ISqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r, self.s) {
            (r, 0) => write!(f, "{r}"),
            (0, s) => write!(f, "{s}*i*sqrt2"),
            (r, s) if s < 0 => write!(f, "{r}-{}*i*sqrt2", -s),
            (r, s) => write!(f, "{r}+{s}*i*sqrt2"),
        }
    }
}

/// Leading coefficients `a_1, ..., a_len` of `sum a_m q^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<ISqrt2>,
}

/// Level-283 weight-1 coefficients `a_1..a_42` as `(r, s)`.
const LEVEL_283: [(i64, i64); 42] = [
    (1, 0), (0, 1), (0, -1), (-1, 0), (0, -1), (2, 0), (-1, 0), (0, 0), (-1, 0), (2, 0),
    (1, 0), (0, 1), (1, 0), (0, -1), (-2, 0), (-1, 0), (0, 0), (0, -1), (0, 1), (0, 1),
    (0, 1), (0, 1), (-1, 0), (0, 0), (-1, 0), (0, 1), (0, 0), (1, 0), (-1, 0), (0, -2),
    (0, 1), (0, -1), (0, -1), (0, 0), (0, 1), (1, 0), (0, 0), (-2, 0), (0, -1), (0, 0),
    (1, 0), (-2, 0),
];

impl QSeries {
    /// `(q - q^2 - q^3 + q^4) / (1 - q^5)` through `q^len`.
    pub fn golden(len: usize) -> Self {
        const PATTERN: [i64; 5] = [0, 1, -1, -1, 1];
        Self { coeffs: (1..=len).map(|m| PATTERN[m % 5].into()).collect() }
    }

    /// The weight-1 newform of level 283 through `q^42`.
    pub fn level283() -> Self {
        Self { coeffs: LEVEL_283.iter().map(|&(r, s)| ISqrt2::new(r, s)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `a_m` for `1 <= m <= len`.
    pub fn a(&self, m: usize) -> Option<ISqrt2> {
        m.checked_sub(1).and_then(|i| self.coeffs.get(i)).copied()
    }

    /// `a_{rq} = a_r a_q` for all `rq <= len`.
    pub fn is_completely_multiplicative(&self) -> bool {
        self.mult_check(|_, _| true)
    }

    /// `a_{rq} = a_r a_q` for coprime `r, q` with `rq <= len`.
    pub fn is_multiplicative(&self) -> bool {
        self.mult_check(|r, q| crate::arith::gcd_u64(r as u64, q as u64) == 1)
    }

    fn mult_check(&self, want: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.len();
        (2..=n).all(|r| {
            (2..=n / r).all(|q| {
                !want(r, q) || self.a(r * q) == Some(self.a(r).unwrap() * self.a(q).unwrap())
            })
        })
    }

    /// `a_{p^{k+1}} = a_p a_{p^k} - chi(p) a_{p^{k-1}}` for every prime
    /// power within the computed length.
    pub fn satisfies_hecke(&self, chi: impl Fn(u64) -> i64) -> bool {
        let n = self.len();
        (2..=n).filter(|&p| is_prime(p as u64)).all(|p| {
            let ap = self.a(p).unwrap();
            let c = ISqrt2::from(chi(p as u64));
            let (mut prev, mut cur, mut pk) = (ISqrt2::ONE, ap, p);
            while pk * p <= n {
                let next = ap * cur - c * prev;
                if self.a(pk * p) != Some(next) {
                    return false;
                }
                (prev, cur, pk) = (cur, next, pk * p);
            }
            true
        })
    }
}

/// Possible values of `N_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NpConstraint {
    Exactly(usize),
    OneOf(usize, usize),
}

impl NpConstraint {
    pub fn contains(&self, v: usize) -> bool {
        match *self {
            Self::Exactly(a) => v == a,
            Self::OneOf(a, b) => v == a || v == b,
        }
    }
}

impl fmt::Display for NpConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exactly(a) => write!(f, "{a}"),
            Self::OneOf(a, b) => write!(f, "{{{a};{b}}}"),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// `N_p(-1 + x + x^2)`: 1 at `p = 5`, otherwise `1 + (p / 5)`.
pub fn np_formula_n2(p: u64) -> Result<usize> {
    check_prime(p)?;
    Ok(match p % 5 {
        0 => 1,
        1 | 4 => 2,
        _ => 0,
    })
}

/// `N_p(-1 + x + x^3)`: 2 at `p = 31`, 1 when `(p / 31) = -1`, and 0 or 3
/// when `(p / 31) = +1`.
pub fn np_formula_n3(p: u64) -> Result<NpConstraint> {
    check_prime(p)?;
    if p == 31 {
        return Ok(NpConstraint::Exactly(2));
    }
    Ok(match legendre(p as i64, 31)? {
        1 => NpConstraint::OneOf(0, 3),
        _ => NpConstraint::Exactly(1),
    })
}

/// Whether `a x^2 + b xy + c y^2 = p` has an integer solution; the form
/// must be positive definite.
pub fn qform_represents(a: i64, b: i64, c: i64, p: u64) -> Result<bool> {
    let (a, b, c, p) = (a as i128, b as i128, c as i128, p as i128);
    let disc = b * b - 4 * a * c;
    if disc >= 0 || a <= 0 {
        return Err(Error::InvalidArgument(format!(
            "form ({a}, {b}, {c}) is not positive definite"
        )));
    }
    // 4a(ax^2 + bxy + cy^2) = (2ax + by)^2 - disc y^2
    let ymax = isqrt((4 * a * p / -disc) as u128) as i128;
    for y in -ymax..=ymax {
        let rad = disc * y * y + 4 * a * p;
        if rad < 0 {
            continue;
        }
        let s = isqrt(rad as u128) as i128;
        if s * s != rad {
            continue;
        }
        for num in [-b * y + s, -b * y - s] {
            if num % (2 * a) == 0 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = libm::sqrt(n as f64) as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// `N_p(-1 + x + x^4)`: 3 at `p = 283`; 0 or 2 when `(p / 283) = -1`;
/// 0 or 4 when `p = x^2 + xy + 71y^2`; exactly 1 when
/// `p = 7x^2 + 5xy + 11y^2`.
pub fn np_formula_n4(p: u64) -> Result<NpConstraint> {
    check_prime(p)?;
    if p == 283 {
        return Ok(NpConstraint::Exactly(3));
    }
    if legendre(p as i64, 283)? == -1 {
        return Ok(NpConstraint::OneOf(0, 2));
    }
    let principal = qform_represents(1, 1, 71, p)?;
    let other = qform_represents(7, 5, 11, p)?;
    match (principal, other) {
        (true, false) => Ok(NpConstraint::OneOf(0, 4)),
        (false, true) => Ok(NpConstraint::Exactly(1)),
        _ => Err(Error::Invariant(format!(
            "{p} is represented by {} of the two forms",
            if principal { "both" } else { "neither" }
        ))),
    }
}

/// `1 + a_p^2 - (p / 283)` from the level-283 coefficients.
pub fn newform283_value(p: u64) -> Result<usize> {
    check_prime(p)?;
    let series = QSeries::level283();
    let ap = series.a(p as usize).ok_or_else(|| {
        Error::InvalidArgument(format!("a_{p} lies beyond the {} known coefficients", series.len()))
    })?;
    let sq = (ap * ap)
        .rational()
        .ok_or_else(|| Error::Invariant(format!("a_{p}^2 = {} is not rational", ap * ap)))?;
    let v = 1 + sq - legendre(p as i64, 283)? as i64;
    usize::try_from(v).map_err(|_| Error::Invariant(format!("negative count {v} at p = {p}")))
}

/// Whether `N_p(-1 + x + x^4) = 1 + a_p^2 - (p / 283)`.
pub fn newform283_check(p: u64) -> Result<bool> {
    let f = ClassBSpec::trinomial(4)?.to_poly();
    Ok(newform283_value(p)? == np_count(&f, p)?)
}

/// Primes `p <= x` with `N_p(-1 + x + x^7) = 7`.
pub fn n7_max_sweep(x: u64) -> Result<Vec<u64>> {
    Ok(density_pmax(&ClassBSpec::trinomial(7)?.to_poly(), x)?.1)
}
