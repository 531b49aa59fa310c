//! Locate the matching decoder's threshold: scan p across the crossing
//! region for d = 3 and 5 and report the bracket where the curves cross.

use isingdec::harness::{
    estimate_threshold, run_monte_carlo, ExperimentConfig, MethodConfig, Threshold,
};
use isingdec::noise::NoiseKind;
use isingdec::pipeline::{DecodeParams, Method};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ExperimentConfig {
        distances: vec![3, 5],
        p_grid: vec![0.10, 0.12, 0.14, 0.16, 0.18, 0.20],
        n_samples: 2000,
        noise: NoiseKind::Depolarizing,
        methods: vec![MethodConfig { method: Method::Mwpm, params: DecodeParams::default() }],
        master_seed: 11,
        out_dir: None,
        workers: 0,
        record_timing: false,
    };
    let records = run_monte_carlo(&cfg)?;
    for r in &records {
        println!("{}", r.csv_line());
    }
    match estimate_threshold(&records, Method::Mwpm)? {
        Threshold::Bracket { per_pair, intersection } => {
            for (ds, dl, lo, hi) in per_pair {
                println!("d={ds} vs d={dl}: crossing in ({lo}, {hi})");
            }
            if let Some((lo, hi)) = intersection {
                println!("threshold bracket: ({lo}, {hi})");
            }
        }
        Threshold::NoCrossing => println!("no crossing found in this grid"),
    }
    Ok(())
}
