//! Irreducibility bounds for families `g_N(x) = x^N c(1/x) + d(x)` and the
//! pentanomial sweep behind the Conjecture-B check.
//!
//! With `T = max(deg c, deg d)`, `S = ||c|| + ||d||` (sums of squared
//! coefficients) and `t` the total number of terms:
//!
//! * `N1 = deg c + deg d + 2T log S / log tau` for `T <= 27`, else
//!   `deg c + deg d + T (log 6T)^3 log S`;
//! * `N2 = deg c + exp(5/16 * 2^(S^2)) * (2 + max(2, deg c^2, deg d^2))^S`,
//!   kept as `log10`;
//! * `N3 = deg c + 2 max(5^(4(S+t)-15), T (5^(2(S+t)-8) + 1/4))`, and the
//!   family form with exponents `8S - 15` and `4S - 8`;
//! * `N4 = (1 + deg c + deg d) 2^S`.
//!
//! Real-valued bounds are rounded up.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::betashift::lehmer_root;
use crate::factorsplit::{finch_jones, split_abc_with, FactorSplit};
use crate::zpoly::{gcd_z, squarefree_decomposition, ClassBSpec, CyclotomicCache, IntPoly};
use crate::{Error, Result};

/// `log tau` for Lehmer's number, from a 64-bit isolating interval.
pub fn log_tau() -> f64 {
    let mut tau = lehmer_root();
    tau.refine(64);
    libm::log(tau.to_f64())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchinzelBounds {
    pub n1: u64,
    /// `log10 N2`; `inf` once `2^(S^2)` leaves the `f64` range.
    pub n2_log10: f64,
    pub n3: BigUint,
    pub n3_family: BigUint,
    pub n4: u64,
    /// `max(deg c, deg d)`.
    pub big_t: usize,
    /// Number of terms of `c` plus number of terms of `d`.
    pub terms: usize,
    /// `||c|| + ||d||`.
    pub norm_sum: u64,
}

impl SchinzelBounds {
    /// `N4 <= N3` and every bound exceeds `deg c + deg d`.
    pub fn ordering_holds(&self, deg_sum: usize) -> bool {
        let ds = deg_sum as u64;
        BigUint::from(self.n4) <= self.n3 && self.n1 > ds && self.n4 > ds && self.n3 > BigUint::from(ds)
    }
}

fn check_pair(c: &IntPoly, d: &IntPoly) -> Result<()> {
    for p in [c, d] {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
    }
    Ok(())
}

pub fn compute_bounds(c: &IntPoly, d: &IntPoly) -> Result<SchinzelBounds> {
    check_pair(c, d)?;
    let (dc, dd) = (c.deg(), d.deg());
    let big_t = dc.max(dd);
    let norm_sum = (c.sq_norm() + d.sq_norm())
        .to_u64()
        .ok_or_else(|| Error::Overflow("||c|| + ||d||".into()))?;
    let terms = c.term_count() + d.term_count();
    let s = norm_sum as f64;
    let t = big_t as f64;

    let extra = if big_t <= 27 {
        2.0 * t / log_tau() * libm::log(s)
    } else {
        let l = libm::log(6.0 * t);
        t * l * l * l * libm::log(s)
    };
    let n1 = (dc + dd) as u64 + libm::ceil(extra) as u64;

    let n2_log10 = {
        let e = 5.0 / 16.0 * libm::exp2(s * s);
        let base = (2 + 2usize.max(dc * dc).max(dd * dd)) as f64;
        let ln_big = e + s * libm::log(base);
        if !ln_big.is_finite() {
            f64::INFINITY
        } else {
            // ln(deg c + e^L) = L + ln(1 + deg c e^-L)
            (ln_big + libm::log1p(dc as f64 * libm::exp(-ln_big))) / core::f64::consts::LN_10
        }
    };

    let st = (norm_sum + terms as u64) as i64;
    let n3 = n3_value(dc, big_t, 4 * st - 15, 2 * st - 8);
    let sn = norm_sum as i64;
    let n3_family = n3_value(dc, big_t, 8 * sn - 15, 4 * sn - 8);

    let n4 = (1 + dc + dd) as u64;
    let n4 = u32::try_from(norm_sum)
        .ok()
        .and_then(|e| 2u64.checked_pow(e))
        .and_then(|p| p.checked_mul(n4))
        .ok_or_else(|| Error::Overflow("N4".into()))?;

    Ok(SchinzelBounds { n1, n2_log10, n3, n3_family, n4, big_t, terms, norm_sum })
}

fn pow5(e: i64) -> BigRational {
    let five = BigInt::from(5);
    let p = num_traits::pow(five, e.unsigned_abs() as usize);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `ceil(deg c + 2 max(5^e1, T (5^e2 + 1/4)))`.
fn n3_value(dc: usize, big_t: usize, e1: i64, e2: i64) -> BigUint {
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let a = pow5(e1);
    let b = BigRational::from_integer(BigInt::from(big_t)) * (pow5(e2) + quarter);
    let v = BigRational::from_integer(BigInt::from(dc)) + BigRational::from_integer(2.into()) * a.max(b);
    v.ceil().to_integer().to_biguint().expect("positive")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapellianVerdict {
    NotCapellian,
    PossiblyCapellian,
}

/// Conservative Capellian screen on `R = -d(x) / c(1/x) = -x^{deg c} d / c*`.
///
/// After cancelling common factors, `R = kappa * prod a_i^i / prod b_j^j`
/// with squarefree coprime `a_i`, `b_j`. If the gcd `G` of all exponents is
/// 1, `R` is no `p`-th power and `R` is not four times a fourth power, so the
/// pair is not Capellian. Otherwise the pair is rejected only when `kappa`
/// fails to be a matching power in `Q` for every candidate.
pub fn capellian_check(c: &IntPoly, d: &IntPoly) -> Result<CapellianVerdict> {
    check_pair(c, d)?;
    let num = -&d.shift(c.deg());
    let den = c.reciprocal()?;
    let g = gcd_z(&num, &den);
    let num = num.div_exact(&g).expect("gcd divides");
    let den = den.div_exact(&g).expect("gcd divides");

    let mut g_exp = 0usize;
    for (_, m) in squarefree_decomposition(&num)
        .into_iter()
        .chain(squarefree_decomposition(&den))
    {
        g_exp = g_exp.gcd(&m);
    }
    if g_exp == 1 {
        return Ok(CapellianVerdict::NotCapellian);
    }
    // kappa = (signed content of num) / (signed content of den)
    let signed_content = |f: &IntPoly| {
        let k = f.content();
        if f.leading_coeff().is_negative() { -k } else { k }
    };
    let kappa = BigRational::new(signed_content(&num), signed_content(&den));
    if g_exp == 0 {
        // R is a constant
        return Ok(CapellianVerdict::PossiblyCapellian);
    }
    for p in prime_factors(g_exp) {
        if is_rational_power(&kappa, p as u32) {
            return Ok(CapellianVerdict::PossiblyCapellian);
        }
    }
    if g_exp % 4 == 0 {
        let quarter = -kappa / BigInt::from(4);
        if is_rational_power(&quarter, 4) {
            return Ok(CapellianVerdict::PossiblyCapellian);
        }
    }
    Ok(CapellianVerdict::NotCapellian)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_integer_power(n: &BigInt, p: u32) -> bool {
    if n.is_negative() {
        return p % 2 == 1 && is_integer_power(&-n, p);
    }
    let r = n.nth_root(p);
    num_traits::pow(r, p as usize) == *n
}

fn is_rational_power(x: &BigRational, p: u32) -> bool {
    is_integer_power(x.numer(), p) && is_integer_power(x.denom(), p)
}

/// The family `f_N = d(x) + x^N c(1/x) = d + x^{N - deg c} c*(x)`, of
/// degree `N` once `N > deg d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GNFamily {
    pub c: IntPoly,
    pub d: IntPoly,
}

impl GNFamily {
    pub fn new(c: IntPoly, d: IntPoly) -> Result<Self> {
        check_pair(&c, &d)?;
        Ok(Self { c, d })
    }

    /// Splits a class-B polynomial at its `j`-th hole (between `m_{j-1}`
    /// and `m_j`, with `m_0 = n`), `1 <= j <= s`. Then `member(m_s)` is the
    /// original polynomial.
    pub fn from_class_b(spec: &ClassBSpec, j: usize) -> Result<Self> {
        let m = spec.m();
        if j == 0 || j > m.len() {
            return Err(Error::InvalidArgument(format!("hole index {j} outside 1..={}", m.len())));
        }
        let ms = *m.last().expect("s >= 1");
        let mut d_terms = vec![(0usize, -1i64), (1, 1), (spec.n(), 1)];
        d_terms.extend(m[..j - 1].iter().map(|&e| (e, 1)));
        let c_terms: Vec<(usize, i64)> = m[j - 1..].iter().map(|&e| (ms - e, 1)).collect();
        Self::new(IntPoly::from_terms(&c_terms), IntPoly::from_terms(&d_terms))
    }

    pub fn member(&self, big_n: usize) -> Result<IntPoly> {
        let dc = self.c.deg();
        if big_n < dc {
            return Err(Error::InvalidArgument(format!("N = {big_n} is below deg c = {dc}")));
        }
        Ok(&self.d + &self.c.reciprocal()?.shift(big_n - dc))
    }

    pub fn bounds(&self) -> Result<SchinzelBounds> {
        compute_bounds(&self.c, &self.d)
    }
}

/// One row of the pentanomial sweep for `d = -1 + x + x^n + x^m1`, `c = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub n: usize,
    pub m1: usize,
    pub quad_irreducible: bool,
    pub n4: u64,
    /// Union of cyclotomic indices met for `N` in `[m1 + n - 1, N4]`.
    pub phi_set: BTreeSet<u64>,
    /// `B` trivial for every member.
    pub conj_b: bool,
    pub members: usize,
}

/// Order-independent accumulator for a sweep over `N`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepAcc {
    pub phi_set: BTreeSet<u64>,
    pub all_b_trivial: bool,
    pub members: usize,
}

impl SweepAcc {
    pub fn new() -> Self {
        Self { phi_set: BTreeSet::new(), all_b_trivial: true, members: 0 }
    }

    pub fn add(&mut self, split: &FactorSplit) {
        self.phi_set.extend(split.indices());
        self.all_b_trivial &= split.conjecture_b_holds;
        self.members += 1;
    }

    pub fn merge(mut self, other: SweepAcc) -> SweepAcc {
        self.phi_set.extend(other.phi_set);
        self.all_b_trivial &= other.all_b_trivial;
        self.members += other.members;
        self
    }
}

/// The sweep range `[m1 + n - 1, N4]` and the family for `(n, m1)`.
pub fn sweep_setup(n: usize, m1: usize) -> Result<(GNFamily, core::ops::RangeInclusive<usize>, u64)> {
    let spec = ClassBSpec::new(n, vec![m1])?;
    let fam = GNFamily::new(IntPoly::one(), spec.to_poly())?;
    let n4 = fam.bounds()?.n4;
    let hi = usize::try_from(n4).map_err(|_| Error::Overflow("N4".into()))?;
    Ok((fam, m1 + n - 1..=hi, n4))
}

/// Split of the pentanomial `-1 + x + x^n + x^m1 + x^N`.
pub fn table1_member(fam: &GNFamily, big_n: usize, cache: &mut CyclotomicCache) -> Result<FactorSplit> {
    split_abc_with(&fam.member(big_n)?, cache)
}

/// Sequential sweep for one `(n, m1)`.
pub fn conjecture_b_sweep(n: usize, m1: usize) -> Result<Table1Row> {
    let (fam, range, n4) = sweep_setup(n, m1)?;
    let mut cache = CyclotomicCache::default();
    let mut acc = SweepAcc::new();
    for big_n in range {
        acc.add(&table1_member(&fam, big_n, &mut cache)?);
    }
    finish_row(n, m1, n4, acc)
}

pub fn finish_row(n: usize, m1: usize, n4: u64, acc: SweepAcc) -> Result<Table1Row> {
    Ok(Table1Row {
        n,
        m1,
        quad_irreducible: finch_jones(n, m1)?,
        n4,
        phi_set: acc.phi_set,
        conj_b: acc.all_b_trivial,
        members: acc.members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn example() -> (IntPoly, IntPoly) {
        (IntPoly::one(), IntPoly::from_terms(&[(0, -1), (1, 1), (5, 1), (14, 1)]))
    }

    #[test]
    fn worked_example_bounds() {
        let (c, d) = example();
        let b = compute_bounds(&c, &d).unwrap();
        assert_eq!(b.n1, 292);
        assert_eq!(b.n4, 480);
        assert_eq!(b.n3.to_string(), "596046447753906250");
        assert_eq!(b.n3_family, b.n3);
        assert!((b.n2_log10 - 4_553_919.19).abs() < 0.01, "{}", b.n2_log10);
        assert_eq!((b.big_t, b.terms, b.norm_sum), (14, 5, 5));
        assert!(b.ordering_holds(14));
    }

    #[test]
    fn bounds_reject_zero_constant() {
        let d = IntPoly::from_terms(&[(1, 1), (3, 1)]);
        assert_eq!(compute_bounds(&IntPoly::one(), &d), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn n2_saturates() {
        let c = IntPoly::from_i64s(&[1; 40]);
        let b = compute_bounds(&c, &IntPoly::one()).unwrap();
        assert_eq!(b.norm_sum, 41);
        assert_eq!(b.n4, 40 << 41);
        assert!(b.n2_log10.is_infinite());
    }

    #[test]
    fn capellian_screen() {
        let (c, d) = example();
        assert_eq!(capellian_check(&c, &d).unwrap(), CapellianVerdict::NotCapellian);
        let x4 = IntPoly::from_terms(&[(4, -1)]);
        assert_eq!(capellian_check(&IntPoly::one(), &x4), Err(Error::ZeroConstantTerm));
        let sq = -&IntPoly::from_i64s(&[1, 1]).pow(2);
        assert_eq!(capellian_check(&IntPoly::one(), &sq).unwrap(), CapellianVerdict::PossiblyCapellian);
        // d / c(1/x) = 4 (x+1)^4
        let four = IntPoly::from_i64s(&[1, 1]).pow(4).scale(&BigInt::from(4));
        assert_eq!(capellian_check(&IntPoly::one(), &four).unwrap(), CapellianVerdict::PossiblyCapellian);
        let three = IntPoly::from_i64s(&[1, 1]).pow(2).scale(&BigInt::from(-3));
        assert_eq!(capellian_check(&IntPoly::one(), &three).unwrap(), CapellianVerdict::NotCapellian);
    }

    #[test]
    fn family_reproduces_its_source() {
        let spec = ClassBSpec::new(3, vec![5, 8, 13]).unwrap();
        for j in 1..=3 {
            let fam = GNFamily::from_class_b(&spec, j).unwrap();
            assert_eq!(fam.member(13).unwrap(), spec.to_poly(), "j = {j}");
            assert_eq!(fam.member(20).unwrap().deg(), 20);
        }
        assert!(GNFamily::from_class_b(&spec, 0).is_err());
        assert!(GNFamily::from_class_b(&spec, 4).is_err());
    }

    #[test]
    fn first_table_row() {
        let row = conjecture_b_sweep(3, 5).unwrap();
        assert!(row.quad_irreducible);
        assert_eq!(row.n4, 192);
        assert_eq!(row.phi_set.iter().copied().collect::<Vec<_>>(), [3, 6]);
        assert!(row.conj_b);
        assert_eq!(row.members, 192 - 7 + 1);
    }
}
