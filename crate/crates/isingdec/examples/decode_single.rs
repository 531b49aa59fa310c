//! Decode one sampled depolarizing error at d=5 with every method that
//! handles correlated noise, printing the per-class energies.

use isingdec::code::build_surface_code;
use isingdec::noise::{sample_error, NoiseKind, NoiseSpec};
use isingdec::pipeline::{decode, judge, DecodeParams, Method};
use isingdec::solver::AnnealSchedule;
use isingdec::syndrome::measure_syndrome;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = build_surface_code(5)?;
    let spec = NoiseSpec::new(NoiseKind::Depolarizing, 0.08, 42).at(0);
    let e = sample_error(&code, &spec)?;
    let s = measure_syndrome(&code, &e)?;
    println!(
        "d=5 depolarizing p=0.08: error weight {}, {} face defects, {} vertex defects",
        e.weight(),
        s.face_bits.weight(),
        s.vertex_bits.weight()
    );

    let params = DecodeParams {
        anneal: Some(AnnealSchedule::light(64, 20)),
        ..DecodeParams::default()
    };
    for method in [Method::SaUnconstrained, Method::PtUnconstrained, Method::Mwpm] {
        let r = decode(&code, &s, NoiseKind::Depolarizing, method, &params, 1)?;
        let ok = judge(&code, &e, &s, &r)?;
        println!("\n{}: class {}, success {ok}", method.name(), r.chosen_class.name());
        for (label, energy) in &r.class_energies {
            println!("  energy[{}] = {energy:.1}", label.name());
        }
    }
    Ok(())
}
