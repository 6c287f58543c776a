//! Acceptance gate. Each criterion checks one reproduction target end to end
//! and prints a single `PASS`/`FAIL`/`SKIP` line. Runs without the libtest
//! harness so the verdicts always appear; any failure makes the binary exit 1.
//! Positional arguments filter criteria by name substring.
//!
//! The search seed used by the 56-line check is fixed below. If a code change
//! ever makes it miss, pick a new seed and record the run log; the assertion
//! itself stays.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use equiangular::clique::{max_clique, SimpleGraph};
use equiangular::constructions::{
    asche_72, asche_indices, from_graph6, generate_octads, taylor_90, taylor_basis, taylor_family,
    tremain_28, tremain_even_basis, SrgParams,
};
use equiangular::linalg::{int, rat, RatMatrix, Rational};
use equiangular::lineset::{LineSet, SignMatrix};
use equiangular::saturation::{check_saturated, enumerate_candidates, run_saturation, select_basis, SaturationOptions};
use equiangular::search::{extract_sublineset, random_search, ScaledGram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Master seed for the 56-line span search (5000 runs at rank 18).
const SEARCH_SEED_R18: u64 = 18;
/// Environment variable naming a graph6 file holding SRG(344, 168, 92, 72).
const SRG344_ENV: &str = "EQUIANGULAR_SRG344";

fn verdict(id: u32, title: &str, check: impl FnOnce() -> Result<String, String>) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into()))
    });
    match outcome {
        Ok(detail) => {
            println!("criterion {id} PASS  {title}: {detail}");
            true
        }
        Err(detail) => {
            println!("criterion {id} FAIL  {title}: {detail}");
            false
        }
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_equiangular")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn cli_json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, text) = cli(&full);
    assert_eq!(code, 0, "{args:?} exited {code}");
    serde_json::from_str(&text).expect("valid JSON")
}

fn taylor_table() -> Vec<[u8; 8]> {
    include_str!("../../core/data/taylor90_octads.txt")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let v: Vec<u8> = l.split_whitespace().map(|t| t.parse().unwrap()).collect();
            v.try_into().unwrap()
        })
        .collect()
}

/// `4·1_E - 4e_1 - e_Σ`, built here from scratch.
fn octad_vector(points: &[u8; 8]) -> [i64; 24] {
    let mut v = [-1i64; 24];
    for &p in points {
        v[p as usize - 1] += 4;
    }
    v[0] -= 4;
    v
}

fn criterion_1_octad_lexicode() -> bool {
    verdict(1, "octad lexicode", || {
        let start = Instant::now();
        let listing = cli_json(&["construct", "octads"]);
        let elapsed = start.elapsed();
        let octads: Vec<Vec<u64>> = serde_json::from_value(listing["octads"].clone()).map_err(|e| e.to_string())?;
        ensure(octads.len() == 759, || format!("{} octads", octads.len()))?;
        ensure(octads[0] == (1..=8).collect::<Vec<_>>(), || format!("first {:?}", octads[0]))?;
        let masks: Vec<u32> = octads.iter().map(|o| o.iter().fold(0, |m, &p| m | 1 << (p - 1))).collect();
        for p in 0..24 {
            let through = masks.iter().filter(|&&m| m >> p & 1 == 1).count();
            ensure(through == 253, || format!("point {} lies in {through} octads", p + 1))?;
        }
        for (i, a) in masks.iter().enumerate() {
            for b in &masks[i + 1..] {
                let k = (a & b).count_ones();
                ensure(matches!(k, 0 | 2 | 4), || format!("intersection of size {k}"))?;
            }
        }
        ensure(generate_octads().len() == 759, || "library disagrees with CLI".into())?;
        within(Duration::from_secs(30), elapsed)?;
        Ok(format!("759 octads, first {{1..8}}, 253 per point, |A∩B| ∈ {{0,2,4}}, {elapsed:.2?}"))
    })
}

fn criterion_2_taylor_and_asche() -> bool {
    verdict(2, "Taylor 90 / Asche 72", || {
        let table = taylor_table();
        let fam = taylor_family().map_err(|e| e.to_string())?;
        let rows: Vec<[u8; 8]> = fam.octads.iter().map(|o| o.points()).collect();
        ensure(table.len() == 90 && rows == table, || "octads differ from the table".into())?;

        let ls = taylor_90().map_err(|e| e.to_string())?;
        let vecs: Vec<[i64; 24]> = table.iter().map(octad_vector).collect();
        let gram = RatMatrix::from_fn(90, 90, |i, j| rat(vecs[i].iter().zip(&vecs[j]).map(|(a, b)| a * b).sum(), 80));
        ensure(ls.gram() == &gram, || "Gram differs from the table's octad vectors".into())?;
        ensure(ls.angle() == &rat(1, 5), || format!("angle {}", ls.angle()))?;
        ensure(ls.rank() == 20, || format!("rank {}", ls.rank()))?;
        ensure(ls.validate().passed, || "taylor90 fails validation".into())?;

        let without_3: Vec<usize> = (0..90).filter(|&i| !table[i].contains(&3)).collect();
        ensure(without_3.len() == 72, || format!("{} octads avoid 3", without_3.len()))?;
        ensure(asche_indices(&fam) == without_3, || "asche72 keeps different octads".into())?;
        let asche = asche_72().map_err(|e| e.to_string())?;
        ensure(asche.n() == 72 && asche.gram() == &gram.principal_submatrix(&without_3), || {
            "asche72 is not the restriction".into()
        })?;
        ensure(asche.rank() == 19, || format!("asche rank {}", asche.rank()))?;
        ensure(asche.validate().passed, || "asche72 fails validation".into())?;
        Ok("90 lines = table row for row, rank 20, α 1/5; 72 lines, rank 19, 18 dropped".into())
    })
}

/// The 28 columns in floating point, rebuilt from the circle, bullet and star row lists.
fn tremain_float_columns() -> Vec<[f64; 14]> {
    let circles: [[usize; 6]; 7] = [
        [1, 2, 17, 20, 25, 27],
        [1, 3, 5, 6, 21, 24],
        [5, 7, 9, 10, 25, 28],
        [1, 4, 9, 11, 13, 14],
        [5, 8, 13, 15, 17, 18],
        [9, 12, 17, 19, 21, 22],
        [13, 16, 21, 23, 25, 26],
    ];
    let bullets: [[usize; 6]; 7] = [
        [3, 4, 18, 19, 26, 28],
        [2, 4, 7, 8, 22, 23],
        [6, 8, 11, 12, 26, 27],
        [2, 3, 10, 12, 15, 16],
        [6, 7, 14, 16, 19, 20],
        [10, 11, 18, 20, 23, 24],
        [14, 15, 22, 24, 27, 28],
    ];
    let s = 0.2f64.sqrt();
    let mut cols = vec![[0.0f64; 14]; 28];
    for row in 0..7 {
        for &c in &circles[row] {
            cols[c - 1][row] = s;
        }
        for &c in &bullets[row] {
            cols[c - 1][row] = -s;
        }
    }
    for x in 0..7 {
        for y in 0..4 {
            cols[27 - 4 * x - y][13 - x] = 0.4f64.sqrt();
        }
    }
    cols
}

fn criterion_3_tremain() -> bool {
    verdict(3, "Tremain 28", || {
        let ls = tremain_28();
        ensure((ls.n(), ls.rank()) == (28, 14), || format!("n {}, rank {}", ls.n(), ls.rank()))?;
        ensure(ls.angle() == &rat(1, 5), || format!("angle {}", ls.angle()))?;
        ensure(ls.validate().passed, || "validation failed".into())?;
        let cols = tremain_float_columns();
        let mut worst = 0.0f64;
        for i in 0..28 {
            for j in 0..28 {
                let f: f64 = cols[i].iter().zip(&cols[j]).map(|(a, b)| a * b).sum();
                let g = ls.gram().get(i, j);
                let e = g.numer().to_string().parse::<f64>().unwrap() / g.denom().to_string().parse::<f64>().unwrap();
                worst = worst.max((f - e).abs());
            }
        }
        ensure(worst < 1e-12, || format!("max deviation {worst:e}"))?;
        Ok(format!("28 lines, rank 14, α 1/5, float oracle max deviation {worst:.1e}"))
    })
}

fn criterion_4_saturation_r14() -> bool {
    verdict(4, "saturation in R^14", || {
        let ls = tremain_28();
        let start = Instant::now();
        let opts = SaturationOptions { basis: Some(tremain_even_basis()), ..Default::default() };
        let run = run_saturation(&ls, &opts).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let r = &run.report;
        ensure(r.candidate_count == 378, || format!("{} candidates", r.candidate_count))?;
        ensure(r.clique_number == 14 && r.clique_exact, || format!("ω = {}", r.clique_number))?;
        ensure(r.upper_bound == 28 && r.saturated, || format!("N = {}", r.upper_bound))?;
        within(Duration::from_secs(60), elapsed)?;
        Ok(format!("378 candidates, ω = 14, N = 28, saturated, {elapsed:.2?}"))
    })
}

fn criterion_5_saturation_r20() -> bool {
    verdict(5, "saturation in R^20", || {
        let ls = taylor_90().map_err(|e| e.to_string())?;
        let basis = taylor_basis();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let start = Instant::now();
        let (cands, report) = pool.install(|| {
            let cands = enumerate_candidates(&ls, &basis, None)?;
            let report = check_saturated(&ls, Some(&basis))?;
            Ok::<_, equiangular::Error>((cands, report))
        })
        .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(cands.len() == 70, || format!("{} candidates", cands.len()))?;

        // candidate ε_k·α must equal ±<x_j, b_k> for exactly one non-basis j
        let mut hit = vec![0u32; 90];
        for c in &cands {
            let matches: Vec<usize> = (0..90)
                .filter(|j| !basis.contains(j))
                .filter(|&j| {
                    [1i64, -1].iter().any(|&g| {
                        basis
                            .iter()
                            .zip(&c.sign_pattern)
                            .all(|(&b, &s)| ls.gram().get(b, j) == &(ls.angle() * int(g * i64::from(s))))
                    })
                })
                .collect();
            ensure(matches.len() == 1, || format!("candidate matches {} lines", matches.len()))?;
            hit[matches[0]] += 1;
        }
        ensure(hit.iter().filter(|&&h| h == 1).count() == 70, || "not a bijection onto the 70 lines".into())?;
        ensure(report.upper_bound == 90 && report.saturated, || format!("N = {}", report.upper_bound))?;
        within(Duration::from_secs(600), elapsed)?;
        Ok(format!("2^19 patterns, 70 candidates = the 70 other lines, N = 90, saturated, {elapsed:.2?} on 1 thread"))
    })
}

/// `r(1 - α²)/(1 - rα²)` for α = p/q as a reduced fraction, by integer arithmetic.
fn bound_oracle(r: i64, p: i64, q: i64) -> (i64, i64) {
    let (num, den) = (r * (q * q - p * p), q * q - r * p * p);
    let g = (1..=num.min(den)).rev().find(|g| num % g == 0 && den % g == 0).unwrap();
    (num / g, den / g)
}

fn criterion_6_relative_bounds() -> bool {
    verdict(6, "relative bounds", || {
        let cases: [(i64, i64, i64, u64); 6] =
            [(42, 1, 7, 288), (41, 1, 7, 246), (40, 1, 7, 213), (39, 1, 7, 187), (20, 1, 5, 96), (19, 1, 5, 76)];
        for (r, p, q, floor) in cases {
            let out = cli_json(&["bound", &r.to_string(), &format!("{p}/{q}")]);
            let (num, den) = bound_oracle(r, p, q);
            let exact = if den == 1 { num.to_string() } else { format!("{num}/{den}") };
            ensure(out["bound"] == exact.as_str(), || format!("R({r},{p}/{q}) = {}, oracle {exact}", out["bound"]))?;
            ensure(out["floor"] == floor && (num / den) as u64 == floor, || {
                format!("floor R({r},{p}/{q}) = {}, expected {floor}", out["floor"])
            })?;
        }
        Ok("floors 288, 246, 213, 187 at α 1/7; R(20,1/5) = 96, R(19,1/5) = 76".into())
    })
}

fn criterion_7_span_search_r18() -> bool {
    verdict(7, "span search in R^18", || {
        let ls = asche_72().map_err(|e| e.to_string())?;
        let summary = random_search(&ls, 18, 5000, SEARCH_SEED_R18).map_err(|e| e.to_string())?;
        let best = summary.best.as_ref().ok_or("no full-rank draw")?;
        let hits = summary.histogram.get(&56).copied().unwrap_or(0);
        ensure(best.closure_size == 56, || format!("best closure {} with seed {SEARCH_SEED_R18}", best.closure_size))?;
        let (sub, report) = extract_sublineset(&ls, &best.closure).map_err(|e| e.to_string())?;
        ensure(report.passed && sub.rank() == 18, || format!("extracted rank {}, valid {}", sub.rank(), report.passed))?;
        let sat = check_saturated(&sub, None).map_err(|e| e.to_string())?;
        ensure(sat.saturated && sat.upper_bound == 56, || format!("N = {}", sat.upper_bound))?;
        Ok(format!(
            "seed {SEARCH_SEED_R18}: {hits}/5000 runs reach 56, first at run {}; rank 18, valid, saturated ({} candidates, ω = {})",
            best.run, sat.candidate_count, sat.clique_number
        ))
    })
}

fn criterion_8_srg344_span_search() -> bool {
    let Some(path) = std::env::var_os(SRG344_ENV) else {
        println!("criterion 8 SKIP  SRG(344) span search: set {SRG344_ENV} to a graph6 file to run");
        return true;
    };
    verdict(8, "SRG(344) span search", || {
        let bytes = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.to_string_lossy()))?;
        let expected = SrgParams { n: 344, k: 168, lambda: 92, mu: 72 };
        let import = from_graph6(&bytes, rat(1, 7), Some(expected)).map_err(|e| e.to_string())?;
        ensure(import.warnings.is_empty(), || import.warnings.join("; "))?;
        let ls = import.lineset;
        ensure(ls.validate().passed && ls.n() == 344 && ls.rank() == 43, || {
            format!("n {}, rank {}", ls.n(), ls.rank())
        })?;
        let summary = random_search(&ls, 42, 2000, SEARCH_SEED_R18).map_err(|e| e.to_string())?;
        let best = summary.best.as_ref().map_or(0, |b| b.closure_size);
        ensure(best >= 200, || format!("best closure {best}"))?;
        Ok(format!("344 lines, rank 43; best closure at rank 42 over 2000 runs: {best}"))
    })
}

fn brute_clique_number(adj: &[u32]) -> usize {
    fn grow(adj: &[u32], clique: usize, cand: u32) -> usize {
        let mut best = clique;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.max(grow(adj, clique + 1, rest & adj[v]));
        }
        best
    }
    grow(adj, 0, if adj.is_empty() { 0 } else { u32::MAX >> (32 - adj.len()) })
}

fn sign_system_oracle(ls: &LineSet, basis: &[usize]) -> Vec<Vec<i8>> {
    let gb = ls.gram().principal_submatrix(basis);
    let d = basis.len();
    let mut out = Vec::new();
    for mask in 0u32..1 << (d - 1) {
        let eps: Vec<i8> = (0..d).map(|k| if k > 0 && mask >> (k - 1) & 1 == 1 { -1 } else { 1 }).collect();
        let rhs: Vec<Rational> = eps.iter().map(|&s| ls.angle() * int(i64::from(s))).collect();
        let c = gb.solve(&rhs).unwrap();
        let norm: Rational = c.iter().zip(&rhs).map(|(a, b)| a * b).sum();
        if norm == int(1) {
            out.push(eps);
        }
    }
    out.sort();
    out
}

/// Exact PSD oracle: every principal minor is non-negative.
fn principal_minors_nonnegative(m: &RatMatrix) -> bool {
    let n = m.rows();
    (1u32..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        m.principal_submatrix(&idx).determinant().is_ok_and(|d| d >= int(0))
    })
}

fn criterion_9_property_suites() -> bool {
    verdict(9, "property suites", || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);

        // maximum clique vs exhaustive clique enumeration
        for _ in 0..200 {
            let n = rng.gen_range(0..=20);
            let density = rng.gen_range(0.1..0.9);
            let mut g = SimpleGraph::new(n);
            let mut adj = vec![0u32; n];
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(density) {
                        g.add_edge(u, v);
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    }
                }
            }
            let got = max_clique(&g, None);
            let want = brute_clique_number(&adj);
            ensure(got.exact && got.size == want && g.is_clique(&got.witness), || {
                format!("max_clique {} vs brute force {want} on n = {n}", got.size)
            })?;
        }

        // candidate enumeration vs rational sign-system solve
        let mut sets = 0;
        while sets < 40 {
            let n = rng.gen_range(2..=6);
            let angle = [rat(1, 2), rat(1, 3), rat(1, 5)][rng.gen_range(0..3)].clone();
            let mut signs = vec![0i8; n * n];
            for i in 0..n {
                for j in i + 1..n {
                    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                    signs[i * n + j] = s;
                    signs[j * n + i] = s;
                }
            }
            let ls = LineSet::from_sign_matrix(&SignMatrix::new(n, signs).unwrap(), angle);
            if !ls.is_psd() || ls.rank() > 4 {
                continue;
            }
            let basis = select_basis(&ls, None).map_err(|e| e.to_string())?;
            let mut fast: Vec<Vec<i8>> = enumerate_candidates(&ls, &basis, None)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|c| c.sign_pattern)
                .collect();
            fast.sort();
            ensure(fast == sign_system_oracle(&ls, &basis), || format!("enumeration differs on {:?}", ls.gram()))?;
            sets += 1;
        }

        // span closure: projection criterion vs rank criterion
        let taylor = taylor_90().map_err(|e| e.to_string())?;
        let scaled = ScaledGram::new(&taylor);
        let mut subsets = 0;
        while subsets < 100 {
            let k = rng.gen_range(1..=20);
            let subset = rand::seq::index::sample(&mut rng, 90, k).into_vec();
            if taylor.gram().principal_submatrix(&subset).rank() < k {
                ensure(scaled.closure(&subset).is_err(), || "rank-deficient subset accepted".into())?;
                continue;
            }
            let closure = scaled.closure(&subset).map_err(|e| e.to_string())?;
            for j in 0..90 {
                let mut ext = subset.clone();
                ext.push(j);
                let in_span = taylor.gram().principal_submatrix(&ext).rank() == k;
                ensure(closure.contains(&j) == in_span, || format!("line {j} vs subset {subset:?}"))?;
            }
            subsets += 1;
        }

        // exact PSD vs eigenvalues, exact minors where the eigenvalue is within tolerance
        let mut borderline = 0;
        for _ in 0..100 {
            let n = rng.gen_range(1..=8);
            let k = rng.gen_range(1..=n + 1);
            let b: Vec<i64> = (0..n * k).map(|_| rng.gen_range(-3..=3)).collect();
            let shift = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-2..=2) };
            let entry = |i: usize, j: usize| {
                (0..k).map(|t| b[i * k + t] * b[j * k + t]).sum::<i64>() + if i == j { shift } else { 0 }
            };
            let m = RatMatrix::from_fn(n, n, |i, j| int(entry(i, j)));
            let f = nalgebra::DMatrix::from_fn(n, n, |i, j| entry(i, j) as f64);
            let min_eig = f.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min);
            let exact = m.is_psd().map_err(|e| e.to_string())?;
            if min_eig.abs() <= 1e-9 {
                borderline += 1;
                ensure(exact == principal_minors_nonnegative(&m), || format!("minor oracle disagrees on {m:?}"))?;
            } else {
                ensure(exact == (min_eig > 0.0), || format!("λ_min {min_eig:e}, exact {exact}"))?;
            }
        }
        Ok(format!(
            "200 clique cases, 40 enumeration cases, 100 closure subsets, 100 PSD cases ({borderline} singular, checked by minors)"
        ))
    })
}

fn main() {
    let criteria: [(&str, fn() -> bool); 9] = [
        ("criterion_1_octad_lexicode", criterion_1_octad_lexicode),
        ("criterion_2_taylor_and_asche", criterion_2_taylor_and_asche),
        ("criterion_3_tremain", criterion_3_tremain),
        ("criterion_4_saturation_r14", criterion_4_saturation_r14),
        ("criterion_5_saturation_r20", criterion_5_saturation_r20),
        ("criterion_6_relative_bounds", criterion_6_relative_bounds),
        ("criterion_7_span_search_r18", criterion_7_span_search_r18),
        ("criterion_8_srg344_span_search", criterion_8_srg344_span_search),
        ("criterion_9_property_suites", criterion_9_property_suites),
    ];
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    // keep panic messages out of the verdict lines; they are reported as FAIL
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        if filters.is_empty() || filters.iter().any(|f| name.contains(f.as_str())) {
            failed += usize::from(!check());
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
