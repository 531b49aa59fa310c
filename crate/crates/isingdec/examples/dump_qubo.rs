//! Build the four-body depolarizing model for a sampled d=3 syndrome,
//! reduce it to a QUBO, and print the model in the plain-text format.

use isingdec::code::{build_surface_code, ClassLabel};
use isingdec::hamiltonian::{build_unconstrained_depolarizing, reduce_to_qubo};
use isingdec::noise::{sample_error, NoiseKind, NoiseSpec};
use isingdec::syndrome::measure_syndrome;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = build_surface_code(3)?;
    let spec = NoiseSpec::new(NoiseKind::Depolarizing, 0.15, 5).at(2);
    let e = sample_error(&code, &spec)?;
    let s = measure_syndrome(&code, &e)?;
    let model = build_unconstrained_depolarizing(&code, &s, ClassLabel::I)?;
    println!(
        "# spin model: {} spins, {} terms (max degree {})",
        model.n_spins,
        model.terms.len(),
        model.max_degree()
    );
    let qubo = reduce_to_qubo(&model, 30.0)?;
    println!(
        "# reduced: {} binaries ({} auxiliary), {} quadratic terms",
        qubo.n_vars,
        qubo.aux_bindings.len(),
        qubo.quadratic.len()
    );
    let mut out = std::io::stdout();
    qubo.dump(&mut out)?;
    Ok(())
}
