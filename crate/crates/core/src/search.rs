//! Randomized rank reduction: draw `d` lines, collect every line of the
//! parent set lying in their span, keep the largest collection seen.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::vectors::named_vectors;
use crate::error::{Error, Result};
use crate::linalg::exact_int::{convert_all, dot, Checked, ExactInt, Overflow};
use crate::linalg::{fraction_free, RatMatrix, Rational};
use crate::lineset::{LineSet, ValidationReport};

/// Name and version of the per-run generator; part of the reproducibility
/// contract of [`random_search`].
pub const RNG_NAME: &str = "chacha8-splitmix64-v1";

/// Whole Gram matrix cleared of denominators, shared by every closure test.
pub struct ScaledGram {
    n: usize,
    a: Vec<BigInt>,
    small: Option<Vec<i128>>,
}

impl ScaledGram {
    pub fn new(ls: &LineSet) -> Self {
        let (_, a) = ls.gram().to_scaled_integers();
        let small = convert_all::<i128>(&a).ok();
        Self { n: ls.n(), a, small }
    }

    fn closure_in<T: ExactInt>(&self, a: &[T], subset: &[usize]) -> Checked<Option<Vec<usize>>> {
        let n = self.n;
        let k = subset.len();
        let block: Vec<T> =
            subset.iter().flat_map(|&i| subset.iter().map(move |&j| a[i * n + j].clone())).collect();
        // A_SS R = D I; line j is in the span iff A_jS R A_Sj = D A_jj
        let Some((det, r)) = fraction_free::scaled_inverse_in(&block, k)? else {
            return Ok(None);
        };
        let mut out = Vec::new();
        let mut col = vec![T::zero(); k];
        let mut rx = vec![T::zero(); k];
        for j in 0..n {
            for (c, &s) in col.iter_mut().zip(subset) {
                *c = a[s * n + j].clone();
            }
            for i in 0..k {
                rx[i] = dot(&r[i * k..(i + 1) * k], &col)?;
            }
            let quad = dot(&col, &rx)?;
            if quad == det.mul(&a[j * n + j]).ok_or(Overflow)? {
                out.push(j);
            }
        }
        Ok(Some(out))
    }

    /// Span closure of `subset`, ascending, or `RankDeficient`.
    pub fn closure(&self, subset: &[usize]) -> Result<Vec<usize>> {
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfBounds { index: bad, len: self.n });
        }
        let result = match &self.small {
            Some(a) => match self.closure_in(a, subset) {
                Ok(r) => r,
                Err(Overflow) => self.closure_in(&self.a, subset).expect("BigInt cannot overflow"),
            },
            None => self.closure_in(&self.a, subset).expect("BigInt cannot overflow"),
        };
        result.ok_or_else(|| Error::RankDeficient(subset.to_vec()))
    }
}

/// All lines of `ls` in the span of the `subset` lines, by the projection
/// criterion `G_jS G_SS⁻¹ G_Sj = G_jj`.
pub fn span_closure(ls: &LineSet, subset: &[usize]) -> Result<Vec<usize>> {
    ScaledGram::new(ls).closure(subset)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRun {
    pub run: u64,
    pub seed: u64,
    pub subset: Vec<usize>,
    /// Empty when the drawn subset was dependent.
    pub closure: Vec<usize>,
    pub closure_size: usize,
    pub rank_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub rng: &'static str,
    pub master_seed: u64,
    pub target_rank: usize,
    pub run_count: u64,
    /// Largest closure; earliest run on ties. `None` only if every draw was
    /// dependent.
    pub best: Option<SearchRun>,
    /// closure size -> number of runs; dependent draws count under 0.
    pub histogram: BTreeMap<usize, u64>,
    #[serde(skip)]
    pub runs: Vec<SearchRun>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of run `run` under `master`.
pub fn run_seed(master: u64, run: u64) -> u64 {
    splitmix64(master ^ splitmix64(run))
}

/// The subset drawn by a run: uniform `k`-subset of `0..n`, ascending.
pub fn draw_subset(seed: u64, n: usize, k: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = sample(&mut rng, n, k).into_vec();
    s.sort_unstable();
    s
}

pub fn random_search(ls: &LineSet, target_rank: usize, runs: u64, seed: u64) -> Result<SearchSummary> {
    if target_rank > ls.rank() {
        return Err(Error::DimensionMismatch { expected: ls.rank(), found: target_rank });
    }
    let gram = ScaledGram::new(ls);
    let results: Vec<SearchRun> = (0..runs)
        .into_par_iter()
        .map(|run| {
            let seed = run_seed(seed, run);
            let subset = draw_subset(seed, ls.n(), target_rank);
            let closure = gram.closure(&subset).ok();
            let rank_ok = closure.is_some();
            let closure = closure.unwrap_or_default();
            SearchRun { run, seed, subset, closure_size: closure.len(), closure, rank_ok }
        })
        .collect();
    let mut histogram = BTreeMap::new();
    let mut best: Option<&SearchRun> = None;
    for r in &results {
        *histogram.entry(r.closure_size).or_insert(0) += 1;
        if r.rank_ok && best.is_none_or(|b| r.closure_size > b.closure_size) {
            best = Some(r);
        }
    }
    Ok(SearchSummary {
        rng: RNG_NAME,
        master_seed: seed,
        target_rank,
        run_count: runs,
        best: best.cloned(),
        histogram,
        runs: results,
    })
}

/// Principal sub-configuration with its validation report.
pub fn extract_sublineset(ls: &LineSet, indices: &[usize]) -> Result<(LineSet, ValidationReport)> {
    let sub = ls.subset(indices)?;
    let report = sub.validate();
    Ok((sub, report))
}

/// Integer vectors orthogonal to every member of a coordinate-carrying line
/// set, plus which of the named filter vectors lie in that complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub dimension: usize,
    /// Primitive integer basis from the reduced echelon form.
    pub basis: Vec<Vec<i64>>,
    /// Named vectors `(c, c1, c2, e1-e2, e1-e3, u1, u2)` orthogonal to all
    /// members.
    pub orthogonal_named: Vec<&'static str>,
}

fn primitive_integer(v: &[Rational]) -> Vec<i64> {
    let den = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let g = ints.iter().fold(<BigInt as Zero>::zero(), |g, x| g.gcd(x));
    let g = if Zero::is_zero(&g) { BigInt::from(1) } else { g };
    let sign = ints
        .iter()
        .find(|x| !Zero::is_zero(*x))
        .map_or(1, |x| if Signed::is_negative(x) { -1 } else { 1 });
    ints.iter()
        .map(|x| (x / &g * BigInt::from(sign)).to_i64().expect("complement entry fits in i64"))
        .collect()
}

pub fn complement_report(ls: &LineSet) -> Option<ComplementReport> {
    let coords = ls.coordinates()?;
    let rows: Vec<Vec<Rational>> = coords
        .vectors
        .iter()
        .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let basis: Vec<Vec<i64>> = RatMatrix::from_rows(rows).ok()?.nullspace().iter().map(|v| primitive_integer(v)).collect();
    let dim = coords.vectors.first().map_or(0, Vec::len);
    let orthogonal_named = if dim == 24 {
        named_vectors()
            .into_iter()
            .filter(|(_, u)| coords.vectors.iter().all(|v| v.iter().zip(u).map(|(a, b)| a * b).sum::<i64>() == 0))
            .map(|(name, _)| name)
            .collect()
    } else {
        Vec::new()
    };
    Some(ComplementReport { dimension: basis.len(), basis, orthogonal_named })
}
