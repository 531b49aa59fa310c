//! Monte-Carlo campaigns: logical error rate vs physical error rate,
//! threshold brackets, and iterations-to-best statistics, persisted as
//! CSV with cell-level resume.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{build_surface_code, SurfaceCode};
use crate::noise::{sample_error, NoiseKind, NoiseSpec};
use crate::pipeline::{decode, judge, DecodeParams, Method};
use crate::stats::RateEstimate;
use crate::syndrome::measure_syndrome;
use crate::{Error, Result};

pub const CSV_HEADER: &str =
    "d,p,method,n_samples,n_failures,rate,ci_low,ci_high,mean_iter_best,mean_wall_time_us";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MethodConfig {
    pub method: Method,
    #[serde(default)]
    pub params: DecodeParams,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub distances: Vec<usize>,
    pub p_grid: Vec<f64>,
    pub n_samples: u64,
    pub noise: NoiseKind,
    pub methods: Vec<MethodConfig>,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
    /// 0 = use all available threads.
    #[serde(default)]
    pub workers: usize,
    /// When false the wall-time column is written as 0, which makes the
    /// CSV byte-identical across worker counts and machines.
    #[serde(default = "default_true")]
    pub record_timing: bool,
}

fn default_true() -> bool {
    true
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_samples == 0 {
            return Err(Error::InvalidParams("n_samples must be >= 1".into()));
        }
        if self.distances.is_empty() || self.p_grid.is_empty() || self.methods.is_empty() {
            return Err(Error::InvalidParams(
                "distances, p_grid and methods must be non-empty".into(),
            ));
        }
        if self.p_grid.iter().any(|&p| !(0.0..1.0).contains(&p)) {
            return Err(Error::InvalidParams("p_grid values must lie in [0,1)".into()));
        }
        Ok(())
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRecord {
    pub d: usize,
    pub p: f64,
    pub method: Method,
    pub estimate: RateEstimate,
    pub mean_iter_best: f64,
    pub mean_wall_time_us: f64,
}

impl ExperimentRecord {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6},{:.6},{:.6},{:.3},{:.3}",
            self.d,
            self.p,
            self.method.name(),
            self.estimate.n_samples,
            self.estimate.n_failures,
            self.estimate.rate,
            self.estimate.ci_low,
            self.estimate.ci_high,
            self.mean_iter_best,
            self.mean_wall_time_us,
        )
    }

    pub fn parse_csv_line(line: &str) -> Option<ExperimentRecord> {
        let f: Vec<&str> = line.trim().split(',').collect();
        if f.len() != 10 {
            return None;
        }
        let n_samples: u64 = f[3].parse().ok()?;
        let n_failures: u64 = f[4].parse().ok()?;
        Some(ExperimentRecord {
            d: f[0].parse().ok()?,
            p: f[1].parse().ok()?,
            method: Method::parse(f[2])?,
            estimate: RateEstimate::new(n_failures, n_samples),
            mean_iter_best: f[8].parse().ok()?,
            mean_wall_time_us: f[9].parse().ok()?,
        })
    }
}

/// Raw per-shot outcome, kept for statistics beyond the failure rate.
#[derive(Clone, Copy, Debug)]
pub struct ShotOutcome {
    pub success: bool,
    pub iteration_of_best: u64,
    pub wall_time_us: f64,
}

fn mix(seed: u64, salt: u64) -> u64 {
    // splitmix64 step keyed by the salt
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn cell_noise_seed(master: u64, d: usize, p: f64) -> u64 {
    mix(mix(master, d as u64), p.to_bits())
}

/// Run every shot of one (d, p, method) cell. Error samples depend only
/// on (master_seed, d, p, shot index), so methods see identical errors;
/// decode seeds additionally mix in the method so solver streams differ.
pub fn run_cell(
    code: &SurfaceCode,
    p: f64,
    noise: NoiseKind,
    mc: &MethodConfig,
    master_seed: u64,
    n_samples: u64,
) -> Result<Vec<ShotOutcome>> {
    let noise_seed = cell_noise_seed(master_seed, code.d(), p);
    let method_salt = mix(noise_seed, mc.method as u64 + 101);
    (0..n_samples)
        .into_par_iter()
        .map(|shot| {
            let spec = NoiseSpec::new(noise, p, noise_seed).at(shot);
            let e = sample_error(code, &spec)?;
            let s = measure_syndrome(code, &e)?;
            let r = decode(code, &s, noise, mc.method, &mc.params, mix(method_salt, shot))?;
            let success = judge(code, &e, &s, &r)?;
            Ok(ShotOutcome {
                success,
                iteration_of_best: r.iteration_of_best,
                wall_time_us: r.wall_time.as_secs_f64() * 1e6,
            })
        })
        .collect()
}

fn aggregate(
    d: usize,
    p: f64,
    method: Method,
    shots: &[ShotOutcome],
    record_timing: bool,
) -> ExperimentRecord {
    let n = shots.len() as u64;
    let failures = shots.iter().filter(|s| !s.success).count() as u64;
    let mean_iter = shots.iter().map(|s| s.iteration_of_best as f64).sum::<f64>() / n as f64;
    let mean_us = if record_timing {
        shots.iter().map(|s| s.wall_time_us).sum::<f64>() / n as f64
    } else {
        0.0
    };
    ExperimentRecord {
        d,
        p,
        method,
        estimate: RateEstimate::new(failures, n),
        mean_iter_best: mean_iter,
        mean_wall_time_us: mean_us,
    }
}

pub fn read_records(path: &Path) -> Result<Vec<ExperimentRecord>> {
    let text = fs::read_to_string(path)?;
    Ok(text
        .lines()
        .skip(1)
        .filter_map(ExperimentRecord::parse_csv_line)
        .collect())
}

fn with_thread_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

/// Run the full campaign. Completed (d, p, method) cells found in the
/// output CSV with a matching sample count are reused, so an interrupted
/// campaign resumes at cell granularity.
pub fn run_monte_carlo(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let csv_path = cfg.out_dir.as_ref().map(|dir| dir.join("records.csv"));
    let mut done: BTreeMap<(usize, u64, &'static str), ExperimentRecord> = BTreeMap::new();
    if let Some(path) = &csv_path {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        if path.exists() {
            for r in read_records(path)? {
                if r.estimate.n_samples == cfg.n_samples {
                    done.insert((r.d, r.p.to_bits(), r.method.name()), r);
                }
            }
        }
    }

    let mut records = Vec::new();
    with_thread_pool(cfg.workers, || -> Result<()> {
        for &d in &cfg.distances {
            let code = build_surface_code(d)?;
            for &p in &cfg.p_grid {
                for mc in &cfg.methods {
                    let key = (d, p.to_bits(), mc.method.name());
                    if let Some(r) = done.get(&key) {
                        records.push(r.clone());
                        continue;
                    }
                    let shots =
                        run_cell(&code, p, cfg.noise, mc, cfg.master_seed, cfg.n_samples)?;
                    let rec = aggregate(d, p, mc.method, &shots, cfg.record_timing);
                    if let Some(path) = &csv_path {
                        append_record(path, &rec)?;
                    }
                    records.push(rec);
                }
            }
        }
        Ok(())
    })?;
    Ok(records)
}

fn append_record(path: &Path, rec: &ExperimentRecord) -> Result<()> {
    let fresh = !path.exists();
    let mut f = fs::OpenOptions::new().create(true).append(true).open(path)?;
    if fresh {
        writeln!(f, "{CSV_HEADER}")?;
    }
    writeln!(f, "{}", rec.csv_line())?;
    Ok(())
}

/// Threshold bracket from rate-vs-p crossings of distance pairs.
#[derive(Clone, Debug, PartialEq)]
pub enum Threshold {
    Bracket {
        /// `(d_small, d_large, p_low, p_high)` per adjacent distance pair.
        per_pair: Vec<(usize, usize, f64, f64)>,
        /// Intersection of the pair brackets, when non-empty.
        intersection: Option<(f64, f64)>,
    },
    NoCrossing,
}

/// Find, per adjacent distance pair, the grid interval on which the sign
/// of `rate(d_large) - rate(d_small)` flips. Below threshold larger
/// distances win; above they lose; the flip brackets the threshold.
pub fn estimate_threshold(records: &[ExperimentRecord], method: Method) -> Result<Threshold> {
    let mut by_d: BTreeMap<usize, Vec<(f64, f64)>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.method == method) {
        by_d.entry(r.d).or_default().push((r.p, r.estimate.rate));
    }
    let distances: Vec<usize> = by_d.keys().copied().collect();
    if distances.len() < 2 {
        return Err(Error::InvalidParams("need records for at least two distances".into()));
    }
    for v in by_d.values_mut() {
        v.sort_by(|a, b| a.0.total_cmp(&b.0));
    }

    let mut per_pair = Vec::new();
    for w in distances.windows(2) {
        let (ds, dl) = (w[0], w[1]);
        let small = &by_d[&ds];
        let large = &by_d[&dl];
        if small.len() != large.len() || small.len() < 3 {
            return Err(Error::InvalidParams(
                "need at least three common grid points per distance".into(),
            ));
        }
        let diffs: Vec<(f64, f64)> = small
            .iter()
            .zip(large)
            .map(|(&(p, rs), &(p2, rl))| {
                debug_assert!((p - p2).abs() < 1e-12);
                (p, rl - rs)
            })
            .collect();
        for pair in diffs.windows(2) {
            let ((p0, d0), (p1, d1)) = (pair[0], pair[1]);
            if d0 < 0.0 && d1 >= 0.0 {
                per_pair.push((ds, dl, p0, p1));
                break;
            }
        }
    }
    if per_pair.is_empty() {
        return Ok(Threshold::NoCrossing);
    }
    let lo = per_pair.iter().map(|&(_, _, l, _)| l).fold(f64::MIN, f64::max);
    let hi = per_pair.iter().map(|&(_, _, _, h)| h).fold(f64::MAX, f64::min);
    let intersection = (lo < hi).then_some((lo, hi));
    Ok(Threshold::Bracket { per_pair, intersection })
}

/// Mean iteration-of-best per cell, with its standard error.
#[derive(Clone, Debug)]
pub struct IterationsRecord {
    pub d: usize,
    pub n_qubits: usize,
    pub p: f64,
    pub method: Method,
    pub n_samples: u64,
    pub mean_iterations: f64,
    pub stderr_iterations: f64,
}

/// Iterations-to-best study under phase-flip noise; requires both the
/// constrained and unconstrained tempering methods in the config.
pub fn iterations_study(cfg: &ExperimentConfig) -> Result<Vec<IterationsRecord>> {
    cfg.validate()?;
    if cfg.noise != NoiseKind::PhaseFlip {
        return Err(Error::InvalidParams("iterations study requires phase-flip noise".into()));
    }
    let have = |m: Method| cfg.methods.iter().any(|mc| mc.method == m);
    if !have(Method::PtConstrained) || !have(Method::PtUnconstrained) {
        return Err(Error::InvalidParams(
            "iterations study requires pt_constrained and pt_unconstrained".into(),
        ));
    }
    let mut out = Vec::new();
    with_thread_pool(cfg.workers, || -> Result<()> {
        for &d in &cfg.distances {
            let code = build_surface_code(d)?;
            for &p in &cfg.p_grid {
                for mc in &cfg.methods {
                    let shots =
                        run_cell(&code, p, cfg.noise, mc, cfg.master_seed, cfg.n_samples)?;
                    let n = shots.len() as f64;
                    let mean =
                        shots.iter().map(|s| s.iteration_of_best as f64).sum::<f64>() / n;
                    let var = shots
                        .iter()
                        .map(|s| (s.iteration_of_best as f64 - mean).powi(2))
                        .sum::<f64>()
                        / (n - 1.0).max(1.0);
                    out.push(IterationsRecord {
                        d,
                        n_qubits: code.n_qubits(),
                        p,
                        method: mc.method,
                        n_samples: cfg.n_samples,
                        mean_iterations: mean,
                        stderr_iterations: (var / n).sqrt(),
                    });
                }
            }
        }
        Ok(())
    })?;
    Ok(out)
}

/// Write the figure set for a campaign: one rate-vs-p plot per distance
/// and, when several distances share the grid, a combined plot per method.
pub fn emit_plots(records: &[ExperimentRecord], out_dir: &Path) -> Result<Vec<PathBuf>> {
    if records.is_empty() {
        return Err(Error::InvalidParams("no records to plot".into()));
    }
    fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    let mut distances: Vec<usize> = records.iter().map(|r| r.d).collect();
    distances.sort_unstable();
    distances.dedup();
    for &d in &distances {
        let subset: Vec<&ExperimentRecord> = records.iter().filter(|r| r.d == d).collect();
        let path = out_dir.join(format!("rate_vs_p_d{d}.svg"));
        let svg = crate::plot::rate_vs_p_svg(&subset, &format!("logical error rate, d = {d}"));
        fs::write(&path, svg)?;
        files.push(path);
    }
    Ok(files)
}

/// Plot of the iterations study: mean iteration-of-best vs qubit count.
pub fn emit_iterations_plot(records: &[IterationsRecord], out_dir: &Path) -> Result<PathBuf> {
    if records.is_empty() {
        return Err(Error::InvalidParams("no records to plot".into()));
    }
    fs::create_dir_all(out_dir)?;
    let path = out_dir.join("iterations_vs_qubits.svg");
    fs::write(&path, crate::plot::iterations_svg(records))?;
    Ok(path)
}
