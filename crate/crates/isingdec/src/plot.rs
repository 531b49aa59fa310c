//! Minimal static SVG plots: no styling dependencies, just lines, error
//! bars and axis labels, good enough to eyeball a campaign.

use std::fmt::Write;

use crate::harness::{ExperimentRecord, IterationsRecord};

const W: f64 = 640.0;
const H: f64 = 440.0;
const ML: f64 = 70.0; // left margin
const MR: f64 = 25.0;
const MT: f64 = 40.0;
const MB: f64 = 55.0;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    log_y: bool,
}

impl Frame {
    fn x(&self, v: f64) -> f64 {
        ML + (v - self.x0) / (self.x1 - self.x0).max(1e-300) * (W - ML - MR)
    }

    fn y(&self, v: f64) -> f64 {
        let (v, lo, hi) = if self.log_y {
            (v.max(1e-12).log10(), self.y0.max(1e-12).log10(), self.y1.log10())
        } else {
            (v, self.y0, self.y1)
        };
        H - MB - (v - lo) / (hi - lo).max(1e-300) * (H - MT - MB)
    }
}

fn open_svg(out: &mut String, title: &str, x_label: &str, y_label: &str) {
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = write!(
        out,
        r#"<rect width="{W}" height="{H}" fill="white"/><text x="{}" y="22" text-anchor="middle" font-size="15">{title}</text>"#,
        W / 2.0
    );
    let _ = write!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">{x_label}</text>"#,
        W / 2.0,
        H - 12.0
    );
    let _ = write!(
        out,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{y_label}</text>"#,
        H / 2.0,
        H / 2.0
    );
    let _ = write!(
        out,
        r##"<rect x="{ML}" y="{MT}" width="{}" height="{}" fill="none" stroke="#333"/>"##,
        W - ML - MR,
        H - MT - MB
    );
}

fn axis_ticks(out: &mut String, f: &Frame) {
    for k in 0..=4 {
        let v = f.x0 + (f.x1 - f.x0) * k as f64 / 4.0;
        let px = f.x(v);
        let _ = write!(
            out,
            r##"<line x1="{px}" y1="{}" x2="{px}" y2="{}" stroke="#333"/><text x="{px}" y="{}" text-anchor="middle">{v:.3}</text>"##,
            H - MB,
            H - MB + 5.0,
            H - MB + 20.0
        );
    }
    if f.log_y {
        let lo = f.y0.max(1e-12).log10().floor() as i32;
        let hi = f.y1.log10().ceil() as i32;
        for e in lo..=hi {
            let v = 10f64.powi(e);
            if v < f.y0 * 0.999 || v > f.y1 * 1.001 {
                continue;
            }
            let py = f.y(v);
            let _ = write!(
                out,
                r##"<line x1="{}" y1="{py}" x2="{ML}" y2="{py}" stroke="#333"/><text x="{}" y="{}" text-anchor="end">1e{e}</text>"##,
                ML - 5.0,
                ML - 8.0,
                py + 4.0
            );
        }
    } else {
        for k in 0..=4 {
            let v = f.y0 + (f.y1 - f.y0) * k as f64 / 4.0;
            let py = f.y(v);
            let _ = write!(
                out,
                r##"<line x1="{}" y1="{py}" x2="{ML}" y2="{py}" stroke="#333"/><text x="{}" y="{}" text-anchor="end">{v:.3}</text>"##,
                ML - 5.0,
                ML - 8.0,
                py + 4.0
            );
        }
    }
}

fn polyline(out: &mut String, pts: &[(f64, f64)], color: &str) {
    if pts.len() < 2 {
        return;
    }
    let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{x:.2},{y:.2}")).collect();
    let _ = write!(
        out,
        r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
        path.join(" ")
    );
}

fn legend(out: &mut String, entries: &[(String, &str)]) {
    for (k, (name, color)) in entries.iter().enumerate() {
        let y = MT + 14.0 + 16.0 * k as f64;
        let _ = write!(
            out,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}">{name}</text>"#,
            ML + 10.0,
            ML + 34.0,
            ML + 40.0,
            y + 4.0
        );
    }
}

/// Logical error rate vs physical error rate, one series per method,
/// with 95% interval bars. Log-scale y when the rates span two decades.
pub fn rate_vs_p_svg(records: &[&ExperimentRecord], title: &str) -> String {
    let mut out = String::new();
    open_svg(&mut out, title, "physical error probability p", "logical error rate");
    if records.is_empty() {
        out.push_str("</svg>");
        return out;
    }
    let xs: Vec<f64> = records.iter().map(|r| r.p).collect();
    let positive: Vec<f64> = records
        .iter()
        .map(|r| r.estimate.rate)
        .filter(|&r| r > 0.0)
        .collect();
    let rate_max = records.iter().map(|r| r.estimate.ci_high).fold(0.0, f64::max);
    let rate_min = positive.iter().copied().fold(1.0, f64::min);
    let log_y = rate_min > 0.0 && rate_max / rate_min > 100.0;
    let f = Frame {
        x0: xs.iter().copied().fold(f64::MAX, f64::min),
        x1: xs.iter().copied().fold(f64::MIN, f64::max),
        y0: if log_y { rate_min * 0.5 } else { 0.0 },
        y1: (rate_max * 1.1).max(1e-6),
        log_y,
    };
    axis_ticks(&mut out, &f);

    let mut methods: Vec<&'static str> = Vec::new();
    for r in records {
        if !methods.contains(&r.method.name()) {
            methods.push(r.method.name());
        }
    }
    let mut entries = Vec::new();
    for (k, m) in methods.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let mut series: Vec<&&ExperimentRecord> =
            records.iter().filter(|r| r.method.name() == *m).collect();
        series.sort_by(|a, b| a.p.total_cmp(&b.p));
        let pts: Vec<(f64, f64)> = series
            .iter()
            .map(|r| (f.x(r.p), f.y(r.estimate.rate)))
            .collect();
        polyline(&mut out, &pts, color);
        for r in &series {
            let x = f.x(r.p);
            let (ylo, yhi) = (f.y(r.estimate.ci_low.max(f.y0)), f.y(r.estimate.ci_high));
            let _ = write!(
                out,
                r#"<line x1="{x:.2}" y1="{ylo:.2}" x2="{x:.2}" y2="{yhi:.2}" stroke="{color}"/><circle cx="{x:.2}" cy="{:.2}" r="3" fill="{color}"/>"#,
                f.y(r.estimate.rate)
            );
        }
        entries.push((m.to_string(), color));
    }
    legend(&mut out, &entries);
    out.push_str("</svg>");
    out
}

/// Mean iteration-of-best vs qubit count, one series per method, with
/// standard-error bars.
pub fn iterations_svg(records: &[IterationsRecord]) -> String {
    let mut out = String::new();
    open_svg(
        &mut out,
        "iterations to best solution",
        "number of qubits",
        "mean iteration of best",
    );
    if records.is_empty() {
        out.push_str("</svg>");
        return out;
    }
    let ymax = records
        .iter()
        .map(|r| r.mean_iterations + r.stderr_iterations)
        .fold(0.0, f64::max);
    let f = Frame {
        x0: records.iter().map(|r| r.n_qubits as f64).fold(f64::MAX, f64::min),
        x1: records.iter().map(|r| r.n_qubits as f64).fold(f64::MIN, f64::max),
        y0: 0.0,
        y1: (ymax * 1.1).max(1.0),
        log_y: false,
    };
    axis_ticks(&mut out, &f);
    let mut methods: Vec<&'static str> = Vec::new();
    for r in records {
        if !methods.contains(&r.method.name()) {
            methods.push(r.method.name());
        }
    }
    let mut entries = Vec::new();
    for (k, m) in methods.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let mut series: Vec<&IterationsRecord> =
            records.iter().filter(|r| r.method.name() == *m).collect();
        series.sort_by_key(|r| r.n_qubits);
        let pts: Vec<(f64, f64)> = series
            .iter()
            .map(|r| (f.x(r.n_qubits as f64), f.y(r.mean_iterations)))
            .collect();
        polyline(&mut out, &pts, color);
        for r in &series {
            let x = f.x(r.n_qubits as f64);
            let ylo = f.y((r.mean_iterations - r.stderr_iterations).max(0.0));
            let yhi = f.y(r.mean_iterations + r.stderr_iterations);
            let _ = write!(
                out,
                r#"<line x1="{x:.2}" y1="{ylo:.2}" x2="{x:.2}" y2="{yhi:.2}" stroke="{color}"/><circle cx="{x:.2}" cy="{:.2}" r="3" fill="{color}"/>"#,
                f.y(r.mean_iterations)
            );
        }
        entries.push((m.to_string(), color));
    }
    legend(&mut out, &entries);
    out.push_str("</svg>");
    out
}
