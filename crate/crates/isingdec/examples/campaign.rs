//! Small Monte-Carlo campaign: logical error rate vs p at d = 3 and 5,
//! annealer against the matching baseline, CSV and SVG written to
//! `target/campaign/`.

use isingdec::harness::{emit_plots, run_monte_carlo, ExperimentConfig, MethodConfig};
use isingdec::noise::NoiseKind;
use isingdec::pipeline::{DecodeParams, Method};
use isingdec::solver::AnnealSchedule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ExperimentConfig {
        distances: vec![3, 5],
        p_grid: vec![0.04, 0.08, 0.12],
        n_samples: 300,
        noise: NoiseKind::Depolarizing,
        methods: vec![
            MethodConfig {
                method: Method::SaUnconstrained,
                params: DecodeParams {
                    anneal: Some(AnnealSchedule::light(64, 10)),
                    ..DecodeParams::default()
                },
            },
            MethodConfig { method: Method::Mwpm, params: DecodeParams::default() },
        ],
        master_seed: 7,
        out_dir: Some("target/campaign".into()),
        workers: 0,
        record_timing: true,
    };
    let records = run_monte_carlo(&cfg)?;
    println!("{}", isingdec::harness::CSV_HEADER);
    for r in &records {
        println!("{}", r.csv_line());
    }
    for f in emit_plots(&records, cfg.out_dir.as_deref().unwrap())? {
        println!("wrote {}", f.display());
    }
    Ok(())
}
