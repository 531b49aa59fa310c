//! Check the annealer against the exhaustive minimum-weight decoder on
//! random d=3 depolarizing syndromes: the per-class best energies should
//! map exactly onto the exhaustive per-class minimum weights.

use isingdec::code::build_surface_code;
use isingdec::hamiltonian::depolarizing_weight_from_energy;
use isingdec::noise::{sample_error, NoiseKind, NoiseSpec};
use isingdec::oracle::min_weight_in_class;
use isingdec::pipeline::{decode, DecodeParams, Method};
use isingdec::solver::AnnealSchedule;
use isingdec::syndrome::measure_syndrome;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = build_surface_code(3)?;
    let params = DecodeParams {
        anneal: Some(AnnealSchedule::light(64, 30)),
        ..DecodeParams::default()
    };
    let shots = 100u64;
    let mut hits = 0;
    for i in 0..shots {
        let spec = NoiseSpec::new(NoiseKind::Depolarizing, 0.12, 23).at(i);
        let e = sample_error(&code, &spec)?;
        let s = measure_syndrome(&code, &e)?;
        let r = decode(&code, &s, NoiseKind::Depolarizing, Method::SaUnconstrained, &params, i)?;
        let all_min = r.class_energies.iter().all(|&(label, energy)| {
            let w = depolarizing_weight_from_energy(&code, energy / params.j);
            let (wmin, _) = min_weight_in_class(&code, &s, label).unwrap();
            (w - wmin as f64).abs() < 1e-6
        });
        if all_min {
            hits += 1;
        }
    }
    println!("annealer hit the exhaustive minimum on {hits}/{shots} syndromes");
    Ok(())
}
