//! Iterations-to-best comparison under phase-flip noise: the soft
//! constrained formulation starts from the no-error configuration and
//! settles faster than the unconstrained one as the lattice grows.

use isingdec::harness::{emit_iterations_plot, iterations_study, ExperimentConfig, MethodConfig};
use isingdec::noise::NoiseKind;
use isingdec::pipeline::{DecodeParams, Method};
use isingdec::solver::{InitState, PtParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // temperature ladder in units of the coupling scale
    let pt = PtParams::geometric(8, 150.0, 0.25, 400);
    let mut pt_zeros = pt.clone();
    pt_zeros.init = InitState::Zeros;
    let cfg = ExperimentConfig {
        distances: vec![3, 5, 7],
        p_grid: vec![0.01],
        n_samples: 100,
        noise: NoiseKind::PhaseFlip,
        methods: vec![
            MethodConfig {
                method: Method::PtConstrained,
                params: DecodeParams { pt: Some(pt_zeros), ..DecodeParams::default() },
            },
            MethodConfig {
                method: Method::PtUnconstrained,
                params: DecodeParams { pt: Some(pt), ..DecodeParams::default() },
            },
        ],
        master_seed: 3,
        out_dir: None,
        workers: 0,
        record_timing: false,
    };
    let records = iterations_study(&cfg)?;
    for r in &records {
        println!(
            "d={} ({} qubits) {}: mean iteration of best {:.1} +/- {:.1}",
            r.d, r.n_qubits, r.method.name(), r.mean_iterations, r.stderr_iterations
        );
    }
    let path = emit_iterations_plot(&records, std::path::Path::new("target/campaign"))?;
    println!("wrote {}", path.display());
    Ok(())
}
