//! Rayon drivers for the sweeps. Every merge is order-independent, so the
//! results do not depend on the number of worker threads.

use lacunary_core::factorsplit::classb_exponents_irreducible;
use lacunary_core::schinzel::{finish_row, sweep_setup, table1_member, SweepAcc, Table1Row};
use lacunary_core::stats::{arc_tally_subtree, sieve_primes, sweep_primes, ArcTally, PrimeSweepReport};
use lacunary_core::zpoly::CyclotomicCache;
use lacunary_core::{IntPoly, Result};
use rayon::prelude::*;

const SHARD: usize = 512;

/// Runs `f` on a pool of `jobs` threads (the rayon default when `None`).
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    match b.build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// `N_p(f)` for all primes `p <= x`, sharded across threads.
pub fn prime_sweep(f: &IntPoly, x: u64) -> Result<PrimeSweepReport> {
    if x < 2 {
        return lacunary_core::stats::prime_sweep(f, x);
    }
    sweep_over(f, &sieve_primes(x), x)
}

/// [`prime_sweep`] over an explicit prime list.
pub fn sweep_over(f: &IntPoly, primes: &[u64], x_max: u64) -> Result<PrimeSweepReport> {
    let empty = sweep_primes(f, &[], x_max)?;
    primes
        .par_chunks(SHARD)
        .map(|shard| sweep_primes(f, shard, x_max))
        .try_reduce(|| empty.clone(), |a, b| Ok(a.merge(b)))
}

/// One Conjecture-B row, parallel over `N`.
pub fn conjecture_b_row(n: usize, m1: usize) -> Result<Table1Row> {
    let (fam, range, n4) = sweep_setup(n, m1)?;
    let acc = range
        .into_par_iter()
        .map_init(CyclotomicCache::default, |cache, big_n| table1_member(&fam, big_n, cache))
        .try_fold(SweepAcc::new, |mut acc, split| {
            acc.add(&split?);
            Ok::<_, lacunary_core::Error>(acc)
        })
        .try_reduce(SweepAcc::new, |a, b| Ok(a.merge(b)))?;
    finish_row(n, m1, n4, acc)
}

/// Tally over all of `B^(N)`. Nodes at depth below two are checked
/// directly and the subtrees below them are handed out as tasks.
pub fn arc_exhaustive(n_max: usize) -> Result<ArcTally> {
    let mut nodes: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut tasks: Vec<(usize, Vec<usize>)> = Vec::new();
    for n in 2..=n_max {
        nodes.push((n, Vec::new()));
        for m1 in 2 * n - 1..=n_max {
            nodes.push((n, vec![m1]));
            for m2 in m1 + n - 1..=n_max {
                tasks.push((n, vec![m1, m2]));
            }
        }
    }
    let direct = nodes
        .par_iter()
        .map(|(n, m)| ArcTally {
            irreducible: classb_exponents_irreducible(*n, m) as u64,
            total: 1,
        })
        .reduce(ArcTally::default, sum);
    let deep = tasks
        .par_iter()
        .map(|(n, m)| arc_tally_subtree(n_max, *n, m))
        .try_reduce(ArcTally::default, |a, b| Ok(sum(a, b)))?;
    Ok(sum(direct, deep))
}

fn sum(mut a: ArcTally, b: ArcTally) -> ArcTally {
    a.add(b);
    a
}
