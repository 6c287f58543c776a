use std::collections::BTreeMap;
use std::io::{IsTerminal, Write};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use equiangular::constructions::{
    asche_72, from_graph6, generate_octads, taylor_90, tremain_28, Octad,
};
use equiangular::lineset::{from_json, known_bounds, relative_bound, relative_bound_floor, to_json, ValidationReport};
use equiangular::saturation::{run_saturation, Progress, SaturationOptions, SaturationReport};
use equiangular::search::{complement_report, extract_sublineset, random_search, ComplementReport, SearchSummary};
use equiangular::{Error, LineSet};
use serde::Serialize;

use crate::args::{Cli, Command, Construction, ConstructArgs, SaturateArgs, SearchArgs};
use crate::{stdout_io, write_file, CliError, Status};

type Out<'a> = &'a mut (dyn Write + Send);

pub fn run(cli: &Cli, out: Out<'_>) -> Result<Status, CliError> {
    match &cli.command {
        Command::Construct(a) => construct(a, cli.json, out),
        Command::Validate { file } => validate(file, cli.json, out),
        Command::Saturate(a) => with_threads(a.threads, || saturate(a, cli.json, out)),
        Command::Search(a) => with_threads(a.threads, || search(a, cli.json, out)),
        Command::Bound { r, alpha } => bound(*r, alpha, cli.json, out),
        Command::Info { d } => info(*d, cli.json, out),
    }
}

fn with_threads<T>(threads: Option<u32>, f: impl FnOnce() -> Result<T, CliError> + Send) -> Result<T, CliError>
where
    T: Send,
{
    let Some(k) = threads else { return f() };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(k as usize)
        .build()
        .map_err(|e| CliError::usage("--threads", e))?;
    pool.install(f)
}

fn emit_json(out: Out<'_>, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(Error::from)?;
    writeln!(out, "{text}").map_err(stdout_io)
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_lineset(path: &Path) -> Result<LineSet, CliError> {
    Ok(from_json(&read_text(path)?)?)
}

#[derive(Serialize)]
struct ConstructSummary<'a> {
    construction: &'a str,
    n: usize,
    rank: usize,
    angle: String,
    output: String,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct OctadListing {
    count: usize,
    blocks_per_point: Vec<usize>,
    intersection_sizes: Vec<u32>,
    octads: Vec<[u8; 8]>,
}

fn construct(a: &ConstructArgs, json: bool, out: Out<'_>) -> Result<Status, CliError> {
    let (name, built) = match &a.which {
        Construction::Octads => return construct_octads(a.output.as_deref(), json, out),
        Construction::Tremain14 => ("tremain14", (tremain_28(), Vec::new())),
        Construction::Taylor90 => ("taylor90", (taylor_90()?, Vec::new())),
        Construction::Asche72 => ("asche72", (asche_72()?, Vec::new())),
        Construction::FromGraph6 { file, angle, srg } => {
            let bytes = std::fs::read(file)
                .map_err(|source| CliError::Io { path: file.display().to_string(), source })?;
            let import = from_graph6(&bytes, angle.clone(), *srg)?;
            ("from-graph6", (import.lineset, import.warnings))
        }
    };
    let (ls, warnings) = built;
    let Some(path) = &a.output else {
        for w in &warnings {
            eprintln!("warning: {w}");
        }
        write!(out, "{}", to_json(&ls)).map_err(stdout_io)?;
        return Ok(Status::Success);
    };
    write_file(path, &to_json(&ls))?;
    let summary = ConstructSummary {
        construction: name,
        n: ls.n(),
        rank: ls.rank(),
        angle: ls.angle().to_string(),
        output: path.display().to_string(),
        warnings,
    };
    if json {
        emit_json(out, &summary)?;
    } else {
        for w in &summary.warnings {
            eprintln!("warning: {w}");
        }
        writeln!(
            out,
            "{}: {} lines, rank {}, angle {} -> {}",
            summary.construction, summary.n, summary.rank, summary.angle, summary.output
        )
        .map_err(stdout_io)?;
    }
    Ok(Status::Success)
}

fn octad_line(o: &Octad) -> String {
    o.points().iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
}

fn construct_octads(output: Option<&Path>, json: bool, out: Out<'_>) -> Result<Status, CliError> {
    let design = generate_octads();
    let listing = OctadListing {
        count: design.len(),
        blocks_per_point: (1..=24).map(|p| design.blocks_through(p)).collect(),
        intersection_sizes: design.intersection_sizes(),
        octads: design.octads().iter().map(|o| o.points()).collect(),
    };
    let text: String = design.octads().iter().map(|o| octad_line(o) + "\n").collect();
    match output {
        Some(path) => write_file(path, &text)?,
        None if !json => return write!(out, "{text}").map(|_| Status::Success).map_err(stdout_io),
        None => {}
    }
    if json {
        emit_json(out, &listing)?;
    } else {
        let per_point: std::collections::BTreeSet<_> = listing.blocks_per_point.iter().collect();
        writeln!(
            out,
            "{} octads, first {{{}}}, blocks per point {:?}, intersection sizes {:?}",
            listing.count,
            octad_line(&design.octads()[0]).replace(' ', ","),
            per_point,
            listing.intersection_sizes
        )
        .map_err(stdout_io)?;
    }
    Ok(Status::Success)
}

fn print_validation(report: &ValidationReport, out: Out<'_>) -> Result<(), CliError> {
    let w = |out: Out<'_>, s: String| writeln!(out, "{s}").map_err(stdout_io);
    w(out, format!("lines     {}", report.n))?;
    w(out, format!("angle     {}", report.angle))?;
    w(out, format!("rank      {}", report.rank))?;
    for c in &report.checks {
        let status = if c.passed { "ok".to_string() } else { format!("FAILED at {:?}", c.first_offender) };
        w(out, format!("  {:<24}{status}", c.name))?;
    }
    w(out, format!("result    {}", if report.passed { "pass" } else { "fail" }))
}

fn validate(file: &Path, json: bool, out: Out<'_>) -> Result<Status, CliError> {
    let report = load_lineset(file)?.validate();
    if json {
        emit_json(out, &report)?;
    } else {
        print_validation(&report, out)?;
    }
    Ok(if report.passed { Status::Success } else { Status::ValidationFailed })
}

fn progress_printer(total_hint: u64) -> impl Fn(Progress) + Sync {
    let step = (total_hint / 20).max(1);
    let next = AtomicU64::new(step);
    move |p: Progress| {
        let mark = next.load(Ordering::Relaxed);
        if p.done >= mark && next.compare_exchange(mark, mark + step, Ordering::Relaxed, Ordering::Relaxed).is_ok() {
            eprint!("\r{:>3}% of {} sign patterns", p.done * 100 / p.total.max(1), p.total);
            if p.done >= p.total {
                eprintln!();
            }
        }
    }
}

fn saturate(a: &SaturateArgs, json: bool, out: Out<'_>) -> Result<Status, CliError> {
    let ls = load_lineset(&a.file)?;
    let d = a.basis.as_ref().map_or(ls.rank(), |b| b.0.len());
    let work = if d == 0 { Some(1) } else { 1u64.checked_shl(d as u32 - 1).filter(|_| d <= 64) };
    if !a.force && work.is_none_or(|w| w > a.work_ceiling) {
        return Err(CliError::usage(
            "--work-ceiling",
            format!("2^{} sign patterns exceed the ceiling {}; pass --force to run anyway", d.saturating_sub(1), a.work_ceiling),
        ));
    }
    let printer = progress_printer(work.unwrap_or(u64::MAX));
    let show_progress = !json && std::io::stderr().is_terminal();
    let opts = SaturationOptions {
        basis: a.basis.as_ref().map(|b| b.0.clone()),
        time_budget: a.time_limit.map(Duration::from_secs),
        progress: show_progress.then_some(&printer as _),
    };
    let started = Instant::now();
    let result = run_saturation(&ls, &opts).map_err(|e| match e {
        Error::NotABasis(_) | Error::IndexOutOfBounds { .. } | Error::DimensionMismatch { .. } => {
            CliError::usage("--basis", e)
        }
        other => other.into(),
    })?;
    if let Some(path) = &a.export_graph {
        write_file(path, &result.graph.to_dimacs())?;
    }
    let report = &result.report;
    if json {
        emit_json(out, report)?;
    } else {
        print_saturation(report, started.elapsed(), out)?;
    }
    Ok(Status::Success)
}

fn print_saturation(r: &SaturationReport, elapsed: Duration, out: Out<'_>) -> Result<(), CliError> {
    let basis = r.basis.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let clique = if r.clique_exact { r.clique_number.to_string() } else { format!(">= {} (time limit hit)", r.clique_number) };
    let rows = [
        ("lines", r.n.to_string()),
        ("rank", r.rank.to_string()),
        ("basis", basis),
        ("candidates", r.candidate_count.to_string()),
        ("clique number", clique),
        ("N", r.upper_bound.to_string()),
        ("saturated", r.saturated.to_string()),
        ("input lines recovered", r.input_lines_recovered.to_string()),
        ("elapsed", format!("{:.2?}", elapsed)),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<22}{v}").map_err(stdout_io)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SearchOutput<'a> {
    #[serde(flatten)]
    summary: &'a SearchSummary,
    best_validation: Option<ValidationReport>,
    complement: Option<ComplementReport>,
}

fn search(a: &SearchArgs, json: bool, out: Out<'_>) -> Result<Status, CliError> {
    let ls = load_lineset(&a.file)?;
    if a.rank == 0 || a.rank > ls.rank() {
        return Err(CliError::usage("--rank", format!("must be between 1 and the line set's rank {}", ls.rank())));
    }
    let summary = random_search(&ls, a.rank, a.runs, a.seed)?;
    if let Some(path) = &a.csv {
        let mut text = String::from("run,seed,closure_size,rank_ok\n");
        for r in &summary.runs {
            text += &format!("{},{},{},{}\n", r.run, r.seed, r.closure_size, r.rank_ok);
        }
        write_file(path, &text)?;
    }
    let mut best_validation = None;
    let mut complement = None;
    if let Some(best) = &summary.best {
        let (sub, report) = extract_sublineset(&ls, &best.closure)?;
        complement = complement_report(&sub);
        if let Some(path) = &a.emit_best {
            write_file(path, &to_json(&sub))?;
        }
        best_validation = Some(report);
    }
    let output = SearchOutput { summary: &summary, best_validation, complement };
    if json {
        emit_json(out, &output)?;
    } else {
        print_search(&output, out)?;
    }
    Ok(Status::Success)
}

fn print_search(o: &SearchOutput<'_>, out: Out<'_>) -> Result<(), CliError> {
    let s = o.summary;
    let mut lines = vec![
        format!("rng            {}", s.rng),
        format!("seed           {}", s.master_seed),
        format!("runs           {} at rank {}", s.run_count, s.target_rank),
    ];
    match &s.best {
        Some(b) => lines.push(format!("best closure   {} lines (run {}, seed {})", b.closure_size, b.run, b.seed)),
        None => lines.push("best closure   none (every draw was rank-deficient)".into()),
    }
    if let Some(v) = &o.best_validation {
        lines.push(format!("best validates {}", v.passed));
    }
    if let Some(c) = &o.complement {
        lines.push(format!("complement     dimension {}, orthogonal to {:?}", c.dimension, c.orthogonal_named));
        for v in &c.basis {
            lines.push(format!("  {v:?}"));
        }
    }
    lines.push("closure size histogram (0 = rank-deficient draw):".into());
    let hist: &BTreeMap<usize, u64> = &s.histogram;
    for (size, count) in hist {
        lines.push(format!("  {size:>5} {count:>8}"));
    }
    for l in lines {
        writeln!(out, "{l}").map_err(stdout_io)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundOutput {
    r: usize,
    alpha: String,
    bound: String,
    floor: u64,
}

fn bound(r: usize, alpha: &equiangular::Rational, json: bool, out: Out<'_>) -> Result<Status, CliError> {
    let exact = relative_bound(r, alpha).map_err(|e| CliError::usage("<alpha>", e))?;
    let floor = relative_bound_floor(r, alpha).map_err(|e| CliError::usage("<alpha>", e))?;
    let b = BoundOutput { r, alpha: alpha.to_string(), bound: exact.to_string(), floor };
    if json {
        emit_json(out, &b)?;
    } else {
        writeln!(out, "R({}, {}) = {} (floor {})", b.r, b.alpha, b.bound, b.floor).map_err(stdout_io)?;
    }
    Ok(Status::Success)
}

fn info(d: usize, json: bool, out: Out<'_>) -> Result<Status, CliError> {
    let entry = known_bounds(d).map_err(|e| CliError::usage("<d>", e))?;
    if json {
        emit_json(out, &entry)?;
    } else {
        writeln!(out, "N({}) ∈ [{}, {}]", entry.d, entry.lower, entry.upper).map_err(stdout_io)?;
    }
    Ok(Status::Success)
}
