//! Sweeps of `N_p(f)` over the primes up to a bound, and the statistics
//! built on them: averages, the densities of `N_p = 0` and `N_p = deg f`,
//! residue histograms, the irreducible proportion of `B^(N)`, and the
//! root-count tables for the trinomials and the sections of `tau`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::One;
use rand::Rng;

use crate::betashift::{lehmer_root, renyi_expansion, sections};
use crate::factorsplit::{classb_exponents_irreducible, classb_irreducible, split_abc_with};
use crate::fppoly::np_count;
use crate::zpoly::{cyclotomic, squarefree_part, sturm_real_roots, CyclotomicCache};
use crate::{ClassBSpec, Error, IntPoly, Result};

/// Primes `<= x`, ascending.
pub fn sieve_primes(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// `N_p(f)` for every prime `p <= x_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSweepReport {
    pub poly_id: String,
    pub x_max: u64,
    /// `(p, N_p)` by increasing `p`.
    pub entries: Vec<(u64, usize)>,
    /// Primes with `f = 0 mod p`.
    pub excluded: Vec<u64>,
}

impl PrimeSweepReport {
    pub fn pi_x(&self) -> u64 {
        (self.entries.len() + self.excluded.len()) as u64
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&(_, n)| n as u64).sum()
    }

    /// `sum N_p / pi(x)`.
    pub fn mean(&self) -> Ratio<u64> {
        Ratio::new(self.total(), self.pi_x().max(1))
    }

    pub fn count_by_value(&self) -> BTreeMap<usize, u64> {
        let mut h = BTreeMap::new();
        for &(_, n) in &self.entries {
            *h.entry(n).or_insert(0) += 1;
        }
        h
    }

    pub fn count_eq(&self, v: usize) -> u64 {
        self.entries.iter().filter(|e| e.1 == v).count() as u64
    }

    /// Primes with `N_p = v`.
    pub fn witnesses(&self, v: usize) -> Vec<u64> {
        self.entries.iter().filter(|e| e.1 == v).map(|e| e.0).collect()
    }

    /// `#{p : N_p = v} / pi(x)`.
    pub fn density(&self, v: usize) -> Ratio<u64> {
        Ratio::new(self.count_eq(v), self.pi_x().max(1))
    }

    /// The same sweep restricted to `p <= x`.
    pub fn truncate(&self, x: u64) -> Self {
        Self {
            poly_id: self.poly_id.clone(),
            x_max: x,
            entries: self.entries.iter().copied().filter(|e| e.0 <= x).collect(),
            excluded: self.excluded.iter().copied().filter(|&p| p <= x).collect(),
        }
    }

    /// Combines sweeps of the same polynomial over disjoint prime sets.
    pub fn merge(mut self, other: Self) -> Self {
        self.x_max = self.x_max.max(other.x_max);
        self.entries.extend(other.entries);
        self.entries.sort_unstable();
        self.excluded.extend(other.excluded);
        self.excluded.sort_unstable();
        self
    }
}

/// Sweeps `f` over the given primes (all assumed `<= x_max`).
pub fn sweep_primes(f: &IntPoly, primes: &[u64], x_max: u64) -> Result<PrimeSweepReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = PrimeSweepReport {
        poly_id: format!("{f}"),
        x_max,
        entries: Vec::with_capacity(primes.len()),
        excluded: Vec::new(),
    };
    for &p in primes {
        match np_count(f, p) {
            Ok(n) => out.entries.push((p, n)),
            Err(Error::VanishesModP(_)) => out.excluded.push(p),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// [`sweep_primes`] over all primes `<= x`.
pub fn prime_sweep(f: &IntPoly, x: u64) -> Result<PrimeSweepReport> {
    if x < 2 {
        return Err(Error::InvalidArgument(format!("x = {x} must be at least 2")));
    }
    sweep_primes(f, &sieve_primes(x), x)
}

/// `(sum_{p <= x} N_p(f)) / pi(x)`; `f` must have content 1.
pub fn kronecker_average(f: &IntPoly, x: u64) -> Result<Ratio<u64>> {
    if !f.is_zero() && !f.content().is_one() {
        return Err(Error::InvalidArgument(format!("{f} does not have content 1")));
    }
    Ok(prime_sweep(f, x)?.mean())
}

/// Proportion of primes `p <= x` with `N_p(f) = 0`.
pub fn density_p0(f: &IntPoly, x: u64) -> Result<Ratio<u64>> {
    Ok(prime_sweep(f, x)?.density(0))
}

/// Proportion of primes `p <= x` with `N_p(f) = deg f`, and those primes.
pub fn density_pmax(f: &IntPoly, x: u64) -> Result<(Ratio<u64>, Vec<u64>)> {
    let r = prime_sweep(f, x)?;
    let d = f.deg();
    Ok((r.density(d), r.witnesses(d)))
}

/// Value histogram of `N_p` at one checkpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiasRow {
    pub x: u64,
    pub hist: BTreeMap<usize, u64>,
    pub pi_x: u64,
}

impl BiasRow {
    pub fn count(&self, v: usize) -> u64 {
        self.hist.get(&v).copied().unwrap_or(0)
    }
}

/// Histograms of `N_p(f)` over `p <= x` for each checkpoint `x`.
pub fn chebyshev_bias(f: &IntPoly, checkpoints: &[u64]) -> Result<Vec<BiasRow>> {
    let Some(&top) = checkpoints.iter().max() else {
        return Ok(Vec::new());
    };
    let full = prime_sweep(f, top.max(2))?;
    Ok(bias_rows(&full, checkpoints))
}

/// [`chebyshev_bias`] from an existing sweep covering every checkpoint.
pub fn bias_rows(full: &PrimeSweepReport, checkpoints: &[u64]) -> Vec<BiasRow> {
    checkpoints
        .iter()
        .map(|&x| {
            let r = full.truncate(x);
            BiasRow { x, hist: r.count_by_value(), pi_x: r.pi_x() }
        })
        .collect()
}

/// Histogram over `Z/qZ` of `N_X(p)`, or of `N_X(p) - N_Y(p)` with a
/// baseline `Y`, for `p <= x`. Primes where either polynomial vanishes are
/// left out.
pub fn residue_histogram(
    f: &IntPoly,
    q: u64,
    x: u64,
    baseline: Option<&IntPoly>,
) -> Result<BTreeMap<u64, u64>> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be at least 1".into()));
    }
    let rx = prime_sweep(f, x)?;
    let ry = baseline.map(|y| prime_sweep(y, x)).transpose()?;
    Ok(residue_counts(&rx, ry.as_ref(), q))
}

/// [`residue_histogram`] from precomputed sweeps over the same primes.
pub fn residue_counts(
    rx: &PrimeSweepReport,
    ry: Option<&PrimeSweepReport>,
    q: u64,
) -> BTreeMap<u64, u64> {
    let base: BTreeMap<u64, usize> =
        ry.map(|r| r.entries.iter().copied().collect()).unwrap_or_default();
    let mut h = BTreeMap::new();
    for &(p, nx) in &rx.entries {
        let diff = match ry {
            None => nx as i64,
            Some(_) => match base.get(&p) {
                Some(&ny) => nx as i64 - ny as i64,
                None => continue,
            },
        };
        *h.entry(diff.rem_euclid(q as i64) as u64).or_insert(0) += 1;
    }
    h
}

/// `(chi(X(C)), chi_c(X(R)))` for `X = {f = 0}`: the numbers of distinct
/// complex and real roots.
pub fn euler_characteristics(f: &IntPoly) -> Result<(usize, usize)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = squarefree_part(f);
    Ok((g.deg(), sturm_real_roots(&g)))
}

/// Irreducible members among a set of class-B polynomials.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ArcTally {
    pub irreducible: u64,
    pub total: u64,
}

impl ArcTally {
    pub fn add(&mut self, other: ArcTally) {
        self.irreducible += other.irreducible;
        self.total += other.total;
    }

    pub fn proportion(&self) -> Ratio<u64> {
        Ratio::new(self.irreducible, self.total.max(1))
    }
}

/// Outcome of [`arc_proportion`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcReport {
    pub n_max: usize,
    pub tally: ArcTally,
    pub exhaustive: bool,
    /// How members were drawn.
    pub measure: String,
}

/// `|B^(N)|`: class-B polynomials of degree at most `N`.
pub fn class_b_count(n_max: usize) -> u128 {
    (2..=n_max).map(|n| class_b_count_for(n_max, n)).sum()
}

/// Members of `B^(N)` with the given `n`.
pub fn class_b_count_for(n_max: usize, n: usize) -> u128 {
    if n < 2 || n > n_max {
        return 0;
    }
    // below[e] = number of admissible continuations after a term x^e
    let mut below = vec![0u128; n_max + 1];
    let mut suffix = vec![0u128; n_max + 2];
    for e in (n..=n_max).rev() {
        let start = e + n - 1;
        below[e] = 1 + if start <= n_max { suffix[start] } else { 0 };
        suffix[e] = suffix[e + 1] + below[e];
    }
    below[n]
}

/// Tallies the class-B polynomial with exponents `(n; prefix)` and every
/// extension of it of degree `<= n_max`, in lexicographic order.
pub fn arc_tally_subtree(n_max: usize, n: usize, prefix: &[usize]) -> Result<ArcTally> {
    let spec = ClassBSpec::new(n, prefix.to_vec())?;
    if spec.degree() > n_max {
        return Ok(ArcTally::default());
    }
    let mut m = prefix.to_vec();
    let mut t = ArcTally::default();
    walk(n_max, n, &mut m, &mut t);
    Ok(t)
}

fn walk(n_max: usize, n: usize, m: &mut Vec<usize>, t: &mut ArcTally) {
    t.total += 1;
    if classb_exponents_irreducible(n, m) {
        t.irreducible += 1;
    }
    let last = m.last().copied().unwrap_or(n);
    for next in last + n - 1..=n_max {
        m.push(next);
        walk(n_max, n, m, t);
        m.pop();
    }
}

/// Description of the sampling measure used by [`arc_sample`].
pub const ARC_SAMPLING_MEASURE: &str =
    "n uniform in [2, N]; gaps uniform in [n-1, 4n]; stop at the first exponent above N";

/// Draws `budget` members of `B^(N)`: `n` uniform in `[2, N]`, then
/// exponents `n + g_1, n + g_1 + g_2, ...` with each gap uniform in
/// `[n - 1, 4n]`, stopping before the first exponent above `N`.
pub fn arc_sample<R: Rng + ?Sized>(n_max: usize, budget: u64, rng: &mut R) -> Result<ArcTally> {
    check_arc(n_max)?;
    let mut t = ArcTally::default();
    for _ in 0..budget {
        let n = rng.random_range(2..=n_max);
        let mut m = Vec::new();
        let mut last = n;
        loop {
            let next = last + rng.random_range(n - 1..=4 * n);
            if next > n_max {
                break;
            }
            m.push(next);
            last = next;
        }
        let spec = ClassBSpec::new(n, m)?;
        t.total += 1;
        if classb_irreducible(&spec) {
            t.irreducible += 1;
        }
    }
    Ok(t)
}

/// Proportion of irreducible polynomials in `B^(N)`: every member when
/// `sample_budget` is `None`, otherwise [`arc_sample`].
pub fn arc_proportion<R: Rng + ?Sized>(
    n_max: usize,
    sample_budget: Option<u64>,
    rng: &mut R,
) -> Result<ArcReport> {
    check_arc(n_max)?;
    Ok(match sample_budget {
        None => {
            let mut tally = ArcTally::default();
            for n in 2..=n_max {
                tally.add(arc_tally_subtree(n_max, n, &[])?);
            }
            ArcReport { n_max, tally, exhaustive: true, measure: "exhaustive".into() }
        }
        Some(b) => ArcReport {
            n_max,
            tally: arc_sample(n_max, b, rng)?,
            exhaustive: false,
            measure: ARC_SAMPLING_MEASURE.into(),
        },
    })
}

fn check_arc(n_max: usize) -> Result<()> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!("N = {n_max} must be at least 2")));
    }
    Ok(())
}

/// `N_p(-1 + x + x^n)` for each prime `p <= pmax` and each `n` in `ns`.
pub fn trinomial_table(pmax: u64, ns: core::ops::RangeInclusive<usize>) -> Result<Vec<(u64, Vec<usize>)>> {
    let polys = ns
        .map(|n| ClassBSpec::trinomial(n).map(|s| s.to_poly()))
        .collect::<Result<Vec<_>>>()?;
    sieve_primes(pmax)
        .into_iter()
        .map(|p| {
            let row = polys.iter().map(|f| np_count(f, p)).collect::<Result<Vec<_>>>()?;
            Ok((p, row))
        })
        .collect()
}

/// One row of [`table2_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Row {
    pub label: String,
    /// The polynomial whose `N_p` is reported.
    pub poly: IntPoly,
    /// Cyclotomic indices removed from the section (empty for the
    /// cyclotomic rows).
    pub removed: Vec<u64>,
    pub values: Vec<usize>,
}

/// `N_p(C_j)` for the non-reciprocal parts `C_j` of the sections
/// `S_0, ..., S_6` of `f_tau`, then `N_p` of `Phi_3`, `Phi_4` and `Phi_12`,
/// for the primes `p <= x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2 {
    pub primes: Vec<u64>,
    pub rows: Vec<Table2Row>,
}

pub fn table2_report(x: u64) -> Result<Table2> {
    let primes = sieve_primes(x);
    let mut tau = lehmer_root();
    let exp = renyi_expansion(&mut tau, 120)?;
    let mut cache = CyclotomicCache::default();
    let counts = |f: &IntPoly| primes.iter().map(|&p| np_count(f, p)).collect::<Result<Vec<_>>>();

    let mut rows = Vec::new();
    for j in 0..=6 {
        let s = sections(&exp, j)?;
        let split = split_abc_with(&s, &mut cache)?;
        rows.push(Table2Row {
            label: format!("{j}"),
            values: counts(&split.c)?,
            removed: split.indices().collect(),
            poly: split.c,
        });
    }
    for k in [3u64, 4, 12] {
        let f = cyclotomic(k)?;
        rows.push(Table2Row {
            label: format!("Np({f})"),
            values: counts(&f)?,
            removed: Vec::new(),
            poly: f,
        });
    }
    Ok(Table2 { primes, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::SmallRng;
    use rand::SeedableRng;

    fn tri(n: usize) -> IntPoly {
        ClassBSpec::trinomial(n).unwrap().to_poly()
    }

    #[test]
    fn sieve() {
        assert_eq!(sieve_primes(101).len(), 26);
        assert_eq!(sieve_primes(10001).len(), 1229);
        assert_eq!(sieve_primes(2), [2]);
        assert!(sieve_primes(1).is_empty());
        assert_eq!(sieve_primes(30), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn golden_quadratic_counts() {
        let rows = chebyshev_bias(&tri(2), &[101, 1001, 10001]).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.count(0), r.count(2), r.pi_x)).collect();
        assert_eq!(got, [(14, 11, 26), (89, 78, 168), (619, 609, 1229)]);
        assert_eq!(kronecker_average(&tri(2), 10001).unwrap(), Ratio::new(1219, 1229));
        assert_eq!(density_p0(&tri(2), 10001).unwrap(), Ratio::new(619, 1229));
        assert_eq!(density_pmax(&tri(2), 101).unwrap().0, Ratio::new(11, 26));
    }

    #[test]
    fn linear_and_split_cases() {
        let lin = IntPoly::from_i64s(&[-1, 1]);
        assert_eq!(kronecker_average(&lin, 1000).unwrap(), Ratio::one());
        assert_eq!(density_p0(&lin, 1000).unwrap(), Ratio::new(0, 1));
        let (_, w) = density_pmax(&IntPoly::from_i64s(&[-1, 0, 1]), 100).unwrap();
        assert_eq!(w, sieve_primes(100)[1..]);
        assert!(kronecker_average(&IntPoly::from_i64s(&[2, 4]), 100).is_err());
    }

    #[test]
    fn excluded_primes() {
        let r = prime_sweep(&IntPoly::from_i64s(&[6, 6]), 20).unwrap();
        assert_eq!(r.excluded, [2, 3]);
        assert_eq!(r.pi_x(), 8);
    }

    #[test]
    fn residues() {
        let h = residue_histogram(&tri(2), 2, 10001, None).unwrap();
        assert_eq!(h.get(&0), Some(&1228));
        assert_eq!(h.get(&1), Some(&1));
        let lin = IntPoly::from_i64s(&[-1, 1]);
        assert_eq!(residue_histogram(&lin, 1, 100, None).unwrap().get(&0), Some(&25));
        let h = residue_histogram(&tri(3), 3, 500, Some(&tri(2))).unwrap();
        assert_eq!(h.values().sum::<u64>(), 95);
    }

    #[test]
    fn euler_chars() {
        assert_eq!(euler_characteristics(&tri(2)).unwrap(), (2, 2));
        assert_eq!(euler_characteristics(&IntPoly::from_i64s(&[1, 0, 1])).unwrap(), (2, 0));
        assert_eq!(euler_characteristics(&tri(12)).unwrap(), (12, 2));
        assert_eq!(
            euler_characteristics(&IntPoly::from_i64s(&[1, -2, 1])).unwrap(),
            (1, 1)
        );
    }

    #[test]
    fn class_b_counts_match_enumeration() {
        for n_max in 2..=14 {
            let mut t = ArcTally::default();
            for n in 2..=n_max {
                let sub = arc_tally_subtree(n_max, n, &[]).unwrap();
                assert_eq!(sub.total as u128, class_b_count_for(n_max, n));
                t.add(sub);
            }
            assert_eq!(t.total as u128, class_b_count(n_max));
        }
        assert_eq!(class_b_count(2), 1);
        // n = 2 alone contributes every subset of {3, ..., N}
        assert_eq!(class_b_count_for(20, 2), 1 << 18);
    }

    #[test]
    fn arc_small() {
        let mut rng = SmallRng::seed_from_u64(7);
        let r = arc_proportion(2, None, &mut rng).unwrap();
        assert_eq!(r.tally, ArcTally { irreducible: 1, total: 1 });
        assert!(arc_proportion(1, None, &mut rng).is_err());
        let s = arc_proportion(40, Some(200), &mut rng).unwrap();
        assert_eq!(s.tally.total, 200);
        assert!(!s.exhaustive);
        assert!(s.tally.irreducible > 0);
    }

    #[test]
    fn trinomial_rows() {
        let t = trinomial_table(13, 2..=4).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t[4], (11, vec![2, 1, 1]));
        assert_eq!(t[5], (13, vec![0, 1, 1]));
    }

    #[test]
    fn table2_spot_values() {
        let t = table2_report(43).unwrap();
        assert_eq!(t.primes.len(), 14);
        let col = |p| t.primes.iter().position(|&q| q == p).unwrap();
        assert_eq!(t.rows[0].values[col(11)], 2);
        assert_eq!(t.rows[5].values[col(29)], 2);
        assert_eq!(t.rows[9].values[col(13)], 4);
        assert_eq!(t.rows[1].removed, [4, 12]);
        assert_eq!(t.rows[5].removed, [3, 4, 12]);
    }
}
