//! Saturation test for an equiangular line set.
//!
//! Pick a basis `B` of the span, list every unit vector `v` of the span with
//! `<v, b> = ±α` for all `b` in `B`, join two such vectors when they also
//! meet at ±α, and take `N = |B| + ω`. No equiangular set containing `B`
//! has more than `N` lines, so `N = |X|` certifies that `X` is saturated.
//!
//! A candidate is fixed by its sign pattern `ε` (first entry `+`): its
//! coefficients in the basis are `c = α G_B⁻¹ ε`, and it has unit norm iff
//! `α (ε · c) = 1`. Patterns are walked in Gray-code order so each step
//! changes `c` by one column of `α G_B⁻¹`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Duration;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::clique::{max_clique, CliqueResult, SimpleGraph};
use crate::error::{Error, Result};
use crate::linalg::exact_int::{convert_all, dot, Checked, with_fallback, ExactInt, Overflow};
use crate::linalg::{common_denominator, fraction_free, scale_to_integers, Rational};
use crate::lineset::LineSet;

/// Patterns per work unit and per progress callback.
pub const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    /// `ε_k = <v, b_k> / α`, with `ε_0 = +1`.
    pub sign_pattern: Vec<i8>,
    /// Coordinates of `v` in the basis.
    #[serde(serialize_with = "serialize_rationals")]
    pub coeffs: Vec<Rational>,
}

fn serialize_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl Candidate {
    /// Sort key: patterns ordered lexicographically with `+` before `-`.
    pub fn pattern_key(&self) -> u64 {
        pattern_key(&self.sign_pattern)
    }
}

fn pattern_key(signs: &[i8]) -> u64 {
    signs.iter().fold(0u64, |k, &s| k << 1 | u64::from(s < 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub done: u64,
    pub total: u64,
}

pub type ProgressSink<'a> = &'a (dyn Fn(Progress) + Sync);

/// Picks `rank` lines spanning the set. Without an override this is the
/// leftmost greedy choice; with one, the given indices are checked.
pub fn select_basis(ls: &LineSet, basis: Option<&[usize]>) -> Result<Vec<usize>> {
    let rank = ls.rank();
    if let Some(idx) = basis {
        let in_range = idx.iter().all(|&i| i < ls.n());
        if idx.len() != rank || !in_range || ls.gram().principal_submatrix(idx).rank() != rank {
            return Err(Error::NotABasis(idx.to_vec()));
        }
        return Ok(idx.to_vec());
    }
    let mut kept = Vec::with_capacity(rank);
    for i in 0..ls.n() {
        if kept.len() == rank {
            break;
        }
        kept.push(i);
        if ls.gram().principal_submatrix(&kept).rank() < kept.len() {
            kept.pop();
        }
    }
    Ok(kept)
}

/// `α G_B⁻¹ = M / D` with integer `M` and `D > 0`, plus `α = p / q`.
struct ScaledSystem {
    d: usize,
    m: Vec<BigInt>,
    den: BigInt,
    p: BigInt,
    q: BigInt,
}

impl ScaledSystem {
    fn new(ls: &LineSet, basis: &[usize]) -> Result<Self> {
        let gb = ls.gram().principal_submatrix(basis);
        let d = basis.len();
        let (s, a) = gb.to_scaled_integers();
        let (det, r) = fraction_free::scaled_inverse(&a, d).ok_or(Error::NotABasis(basis.to_vec()))?;
        // G_B⁻¹ = s R / det, so α G_B⁻¹ = p s R / (q det)
        let (p, q) = (ls.angle().numer().clone(), ls.angle().denom().clone());
        let mut m: Vec<BigInt> = r.into_iter().map(|x| x * &s * &p).collect();
        let mut den = &q * det;
        if Signed::is_negative(&den) {
            den = -den;
            m.iter_mut().for_each(|x| *x = -x.clone());
        }
        let g = m.iter().fold(den.clone(), |g, x| g.gcd(x));
        if !g.is_one() && !Zero::is_zero(&g) {
            m.iter_mut().for_each(|x| *x = &*x / &g);
            den /= &g;
        }
        Ok(Self { d, m, den, p, q })
    }
}

struct Hit<T> {
    signs: Vec<i8>,
    y: Vec<T>,
}

/// Scans Gray-code positions `start..end`. `y = M ε` is kept up to date and
/// a pattern is a hit iff `p (ε · y) = q D`.
fn scan_range<T: ExactInt>(
    m: &[T],
    d: usize,
    target: &T,
    p: &T,
    start: u64,
    end: u64,
) -> Checked<Vec<Hit<T>>> {
    let gray = start ^ (start >> 1);
    let mut signs: Vec<i8> = (0..d).map(|k| if k > 0 && gray >> (k - 1) & 1 == 1 { -1 } else { 1 }).collect();
    let eps: Vec<T> = signs.iter().map(|&s| if s > 0 { T::one() } else { T::one().neg().unwrap() }).collect();
    let mut y = Vec::with_capacity(d);
    for i in 0..d {
        y.push(dot(&m[i * d..(i + 1) * d], &eps)?);
    }
    // twice each column, for the sign flips
    let two = T::one().add(&T::one()).ok_or(Overflow)?;
    let cols2: Vec<T> = {
        let mut c = vec![T::zero(); d * d];
        for k in 0..d {
            for i in 0..d {
                c[k * d + i] = m[i * d + k].mul(&two).ok_or(Overflow)?;
            }
        }
        c
    };
    let mut hits = Vec::new();
    let mut t = start;
    loop {
        let mut e_dot_y = T::zero();
        for (s, yi) in signs.iter().zip(&y) {
            e_dot_y = if *s > 0 { e_dot_y.add(yi) } else { e_dot_y.sub(yi) }.ok_or(Overflow)?;
        }
        if p.mul(&e_dot_y).ok_or(Overflow)? == *target {
            hits.push(Hit { signs: signs.clone(), y: y.clone() });
        }
        t += 1;
        if t >= end {
            break;
        }
        let k = t.trailing_zeros() as usize + 1;
        let col = &cols2[k * d..(k + 1) * d];
        if signs[k] > 0 {
            for (yi, c) in y.iter_mut().zip(col) {
                *yi = yi.sub(c).ok_or(Overflow)?;
            }
        } else {
            for (yi, c) in y.iter_mut().zip(col) {
                *yi = yi.add(c).ok_or(Overflow)?;
            }
        }
        signs[k] = -signs[k];
    }
    Ok(hits)
}

fn enumerate_in<T: ExactInt>(sys: &ScaledSystem, progress: Option<ProgressSink<'_>>) -> Checked<Vec<Candidate>> {
    let d = sys.d;
    let m: Vec<T> = convert_all(&sys.m)?;
    let den_t = T::from_big(&sys.den).ok_or(Overflow)?;
    let target = T::from_big(&(&sys.q * &sys.den)).ok_or(Overflow)?;
    let p = T::from_big(&sys.p).ok_or(Overflow)?;
    let total: u64 = 1u64 << (d - 1);
    let chunks = total.div_ceil(CHUNK);
    let done = AtomicU64::new(0);
    let parts: Vec<Vec<Hit<T>>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let hits = scan_range(&m, d, &target, &p, start, end);
            let finished = done.fetch_add(end - start, Ordering::Relaxed) + (end - start);
            if let Some(sink) = progress {
                sink(Progress { done: finished, total });
            }
            hits
        })
        .collect::<Checked<_>>()?;
    let den = den_t.to_big();
    let mut out: Vec<Candidate> = parts
        .into_iter()
        .flatten()
        .map(|h| Candidate {
            coeffs: h.y.iter().map(|yi| Rational::new(yi.to_big(), den.clone())).collect(),
            sign_pattern: h.signs,
        })
        .collect();
    out.sort_by_key(Candidate::pattern_key);
    Ok(out)
}

/// Every unit vector in the span meeting each basis line at ±α, one per
/// antipodal pair (the one with `+α` on the first basis line), in pattern
/// order.
pub fn enumerate_candidates(
    ls: &LineSet,
    basis: &[usize],
    progress: Option<ProgressSink<'_>>,
) -> Result<Vec<Candidate>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    if basis.len() > 63 {
        return Err(Error::DimensionMismatch { expected: 63, found: basis.len() });
    }
    let sys = ScaledSystem::new(ls, basis)?;
    Ok(with_fallback(
        || enumerate_in::<i128>(&sys, progress),
        || enumerate_in::<BigInt>(&sys, progress),
    ))
}

enum PairError {
    Overflow,
    Duplicate(usize, usize),
}

impl From<Overflow> for PairError {
    fn from(_: Overflow) -> Self {
        PairError::Overflow
    }
}

fn graph_in<T: ExactInt>(
    signs: &[Vec<i8>],
    z: &[Vec<BigInt>],
    den: &BigInt,
    p: &BigInt,
    q: &BigInt,
) -> Checked<Result<SimpleGraph>> {
    let n = signs.len();
    let z: Vec<Vec<T>> = z.iter().map(|v| convert_all(v)).collect::<std::result::Result<_, _>>()?;
    let den_t = T::from_big(den).ok_or(Overflow)?;
    let neg_den = den_t.neg().ok_or(Overflow)?;
    // <v_i, v_j> = ±1  <=>  p x = ±q D
    let unit = T::from_big(&(q * den)).ok_or(Overflow)?;
    let neg_unit = unit.neg().ok_or(Overflow)?;
    let p = T::from_big(p).ok_or(Overflow)?;
    let rows: std::result::Result<Vec<Vec<usize>>, PairError> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut adj = Vec::new();
            for (j, zrow) in z.iter().enumerate().skip(i + 1) {
                let mut x = T::zero();
                for (s, zj) in signs[i].iter().zip(zrow) {
                    x = if *s > 0 { x.add(zj) } else { x.sub(zj) }.ok_or(Overflow)?;
                }
                let px = p.mul(&x).ok_or(Overflow)?;
                if px == unit || px == neg_unit {
                    return Err(PairError::Duplicate(i, j));
                }
                if x == den_t || x == neg_den {
                    adj.push(j);
                }
            }
            Ok(adj)
        })
        .collect();
    let rows = match rows {
        Ok(rows) => rows,
        Err(PairError::Overflow) => return Err(Overflow),
        Err(PairError::Duplicate(i, j)) => return Ok(Err(Error::DuplicateLine(i, j))),
    };
    let mut g = SimpleGraph::new(n);
    for (i, row) in rows.into_iter().enumerate() {
        for j in row {
            g.add_edge(i, j);
        }
    }
    Ok(Ok(g))
}

/// Joins two candidates when `<v_i, v_j> = α (ε_i · c_j) = ±α`. Fails if two
/// candidates are the same line.
pub fn build_compatibility_graph(cands: &[Candidate], ls: &LineSet) -> Result<SimpleGraph> {
    if cands.len() < 2 {
        return Ok(SimpleGraph::new(cands.len()));
    }
    let den = common_denominator(cands.iter().flat_map(|c| c.coeffs.iter()));
    let z: Vec<Vec<BigInt>> = cands.iter().map(|c| scale_to_integers(&c.coeffs, &den)).collect();
    let signs: Vec<Vec<i8>> = cands.iter().map(|c| c.sign_pattern.clone()).collect();
    let (p, q) = (ls.angle().numer(), ls.angle().denom());
    with_fallback(
        || graph_in::<i128>(&signs, &z, &den, p, q),
        || graph_in::<BigInt>(&signs, &z, &den, p, q),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub n: usize,
    pub rank: usize,
    pub basis: Vec<usize>,
    pub candidate_count: usize,
    pub clique_number: usize,
    /// Upper bound on any equiangular set containing the chosen basis.
    #[serde(rename = "N")]
    pub upper_bound: usize,
    pub saturated: bool,
    /// False if the clique search hit its time budget.
    pub clique_exact: bool,
    /// Every non-basis input line was found among the candidates and they
    /// are pairwise adjacent.
    pub input_lines_recovered: bool,
}

#[derive(Clone, Default)]
pub struct SaturationOptions<'a> {
    pub basis: Option<Vec<usize>>,
    pub time_budget: Option<Duration>,
    pub progress: Option<ProgressSink<'a>>,
}

#[derive(Debug, Clone)]
pub struct SaturationRun {
    pub report: SaturationReport,
    pub candidates: Vec<Candidate>,
    pub graph: SimpleGraph,
    pub clique: CliqueResult,
}

/// Candidate index of each non-basis line, matched by sign pattern.
fn locate_input_lines(ls: &LineSet, basis: &[usize], cands: &[Candidate]) -> Option<Vec<usize>> {
    let by_key: HashMap<u64, usize> = cands.iter().enumerate().map(|(i, c)| (c.pattern_key(), i)).collect();
    let alpha = ls.angle();
    let mut found = Vec::new();
    for j in (0..ls.n()).filter(|j| !basis.contains(j)) {
        let mut signs = Vec::with_capacity(basis.len());
        for &b in basis {
            let g = ls.gram().get(b, j);
            if g.abs() != *alpha {
                return None;
            }
            signs.push(if g.is_positive() { 1i8 } else { -1 });
        }
        if signs[0] < 0 {
            signs.iter_mut().for_each(|s| *s = -*s);
        }
        found.push(*by_key.get(&pattern_key(&signs))?);
    }
    Some(found)
}

pub fn run_saturation(ls: &LineSet, opts: &SaturationOptions<'_>) -> Result<SaturationRun> {
    let basis = select_basis(ls, opts.basis.as_deref())?;
    let candidates = enumerate_candidates(ls, &basis, opts.progress)?;
    let graph = build_compatibility_graph(&candidates, ls)?;
    let clique = max_clique(&graph, opts.time_budget);
    let upper_bound = basis.len() + clique.size;
    let input_lines_recovered = locate_input_lines(ls, &basis, &candidates)
        .is_some_and(|idx| graph.is_clique(&idx));
    let report = SaturationReport {
        n: ls.n(),
        rank: ls.rank(),
        basis,
        candidate_count: candidates.len(),
        clique_number: clique.size,
        upper_bound,
        saturated: clique.exact && upper_bound == ls.n(),
        clique_exact: clique.exact,
        input_lines_recovered,
    };
    Ok(SaturationRun { report, candidates, graph, clique })
}

pub fn check_saturated(ls: &LineSet, basis: Option<&[usize]>) -> Result<SaturationReport> {
    let opts = SaturationOptions { basis: basis.map(<[usize]>::to_vec), ..Default::default() };
    Ok(run_saturation(ls, &opts)?.report)
}
