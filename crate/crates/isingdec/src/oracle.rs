//! Exhaustive minimum-weight decoding and brute-force energy minimization.
//!
//! Stabilizer-group enumeration walks generator subsets in Gray-code order
//! so each step XORs a single generator into the running error. Joint
//! enumeration over both sectors covers `2^(2d(d-1))` elements and is
//! limited to d = 3; single-sector enumeration (`2^(d(d-1))`) reaches
//! d = 5.

use crate::code::{ClassLabel, SurfaceCode};
use crate::hamiltonian::{ErrorType, PolyIsingModel, QuboModel};
use crate::pauli::PauliBitString;
use crate::syndrome::{measure_syndrome, pure_error_with, Routing, Syndrome};
use crate::{Error, Result};

const MAX_GENERATORS: usize = 26;
const MAX_BRUTE_VARS: usize = 26;

fn gray_enumerate_min(
    start: PauliBitString,
    generators: &[PauliBitString],
) -> (usize, PauliBitString) {
    let mut current = start;
    let mut best_weight = current.weight();
    let mut best = current.clone();
    let total: u64 = 1 << generators.len();
    for step in 1..total {
        let bit = step.trailing_zeros() as usize;
        current.compose_assign(&generators[bit]);
        let w = current.weight();
        if w < best_weight {
            best_weight = w;
            best = current.clone();
        }
    }
    (best_weight, best)
}

/// Minimum-weight Pauli in the coset `T . L . <generators>`, enumerating
/// both sectors jointly. Feasible for d = 3.
pub fn min_weight_in_class(
    code: &SurfaceCode,
    s: &Syndrome,
    label: ClassLabel,
) -> Result<(usize, PauliBitString)> {
    min_weight_in_class_routed(code, s, label, Routing::Straight)
}

pub fn min_weight_in_class_routed(
    code: &SurfaceCode,
    s: &Syndrome,
    label: ClassLabel,
    routing: Routing,
) -> Result<(usize, PauliBitString)> {
    let n_gen = code.n_faces() + code.n_vertices();
    if n_gen > MAX_GENERATORS {
        return Err(Error::TooManyVariables(n_gen, MAX_GENERATORS));
    }
    let generators: Vec<PauliBitString> = (0..code.n_vertices())
        .map(|v| code.vertex_stabilizer(v))
        .chain((0..code.n_faces()).map(|f| code.face_stabilizer(f)))
        .collect();
    let start = pure_error_with(code, s, routing).compose(&label.representative(code))?;
    let (w, witness) = gray_enumerate_min(start, &generators);
    debug_assert_eq!(&measure_syndrome(code, &witness)?, s);
    Ok((w, witness))
}

/// Single-sector variant: X errors range over vertex generators, Z errors
/// over face generators. Feasible for d <= 5.
pub fn min_weight_in_class_single(
    code: &SurfaceCode,
    s: &Syndrome,
    label: ClassLabel,
    sector: ErrorType,
) -> Result<(usize, PauliBitString)> {
    let generators: Vec<PauliBitString> = match sector {
        ErrorType::X => (0..code.n_vertices())
            .map(|v| code.vertex_stabilizer(v))
            .collect(),
        ErrorType::Z => (0..code.n_faces())
            .map(|f| code.face_stabilizer(f))
            .collect(),
    };
    if generators.len() > MAX_GENERATORS {
        return Err(Error::TooManyVariables(generators.len(), MAX_GENERATORS));
    }
    let t = crate::syndrome::pure_error(code, s);
    let start = t.compose(&label.representative(code))?;
    Ok(gray_enumerate_min(start, &generators))
}

/// Exact minimum-distance decoding under depolarizing noise: the class
/// whose minimum weight is smallest, ties broken in the fixed order
/// I, L_X, L_Z, L_X L_Z.
pub fn exact_decode(code: &SurfaceCode, s: &Syndrome) -> Result<ClassLabel> {
    let mut best: Option<(usize, ClassLabel)> = None;
    for label in ClassLabel::ALL {
        let (w, _) = min_weight_in_class(code, s, label)?;
        if best.is_none_or(|(bw, _)| w < bw) {
            best = Some((w, label));
        }
    }
    Ok(best.unwrap().1)
}

/// Exact decoding for a single error sector (two candidate classes).
pub fn exact_decode_single(
    code: &SurfaceCode,
    s: &Syndrome,
    sector: ErrorType,
) -> Result<ClassLabel> {
    let classes = match sector {
        ErrorType::X => [ClassLabel::I, ClassLabel::X],
        ErrorType::Z => [ClassLabel::I, ClassLabel::Z],
    };
    let mut best: Option<(usize, ClassLabel)> = None;
    for label in classes {
        let (w, _) = min_weight_in_class_single(code, s, label, sector)?;
        if best.is_none_or(|(bw, _)| w < bw) {
            best = Some((w, label));
        }
    }
    Ok(best.unwrap().1)
}

/// Exact global minimum of a spin polynomial by Gray-code enumeration.
pub fn brute_force_min_ising(model: &PolyIsingModel) -> Result<(f64, Vec<bool>)> {
    if model.n_spins > MAX_BRUTE_VARS {
        return Err(Error::TooManyVariables(model.n_spins, MAX_BRUTE_VARS));
    }
    let n = model.n_spins;
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, (_, idx)) in model.terms.iter().enumerate() {
        for &i in idx {
            touching[i].push(t);
        }
    }
    let mut signs: Vec<f64> = model.terms.iter().map(|(c, _)| *c).collect();
    let mut flips = vec![false; n];
    let mut energy: f64 = model.offset + signs.iter().sum::<f64>();
    let mut best = (energy, flips.clone());
    for step in 1u64..(1 << n) {
        let bit = step.trailing_zeros() as usize;
        flips[bit] ^= true;
        for &t in &touching[bit] {
            energy -= 2.0 * signs[t];
            signs[t] = -signs[t];
        }
        if energy < best.0 - 1e-12 {
            best = (energy, flips.clone());
        }
    }
    Ok(best)
}

/// Exact global minimum of a QUBO by Gray-code enumeration.
pub fn brute_force_min_qubo(model: &QuboModel) -> Result<(f64, Vec<bool>)> {
    if model.n_vars > MAX_BRUTE_VARS {
        return Err(Error::TooManyVariables(model.n_vars, MAX_BRUTE_VARS));
    }
    let n = model.n_vars;
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (&(i, j), &c) in &model.quadratic {
        adj[i].push((j, c));
        adj[j].push((i, c));
    }
    let mut bits = vec![false; n];
    let mut energy = model.offset;
    let mut best = (energy, bits.clone());
    for step in 1u64..(1 << n) {
        let bit = step.trailing_zeros() as usize;
        let mut field = model.linear[bit];
        for &(j, c) in &adj[bit] {
            if bits[j] {
                field += c;
            }
        }
        energy += if bits[bit] { -field } else { field };
        bits[bit] ^= true;
        if energy < best.0 - 1e-12 {
            best = (energy, bits.clone());
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_surface_code, logical_class};
    use crate::hamiltonian::{
        build_unconstrained_depolarizing, depolarizing_weight_from_energy, VarRole,
    };
    use crate::noise::{sample_error, NoiseKind, NoiseSpec};

    #[test]
    fn trivial_syndrome_identity_class() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let (w, witness) = min_weight_in_class(&code, &s, ClassLabel::I).unwrap();
        assert_eq!(w, 0);
        assert!(witness.is_identity());
        assert_eq!(exact_decode(&code, &s).unwrap(), ClassLabel::I);
    }

    #[test]
    fn logical_class_weight_is_distance() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let (w, _) = min_weight_in_class(&code, &s, ClassLabel::X).unwrap();
        assert_eq!(w, 3);
        let (w, _) = min_weight_in_class(&code, &s, ClassLabel::Z).unwrap();
        assert_eq!(w, 3);
    }

    #[test]
    fn weight_one_errors_decoded_exactly() {
        let code = build_surface_code(3).unwrap();
        let n = code.n_qubits();
        let mut count = 0;
        for k in 0..n {
            for e in [
                PauliBitString::single_x(n, k),
                PauliBitString::single_y(n, k),
                PauliBitString::single_z(n, k),
            ] {
                let s = measure_syndrome(&code, &e).unwrap();
                let t = crate::syndrome::pure_error(&code, &s);
                let truth = logical_class(&code, &e.compose(&t).unwrap()).unwrap();
                let mut weights = Vec::new();
                for label in ClassLabel::ALL {
                    weights.push(min_weight_in_class(&code, &s, label).unwrap().0);
                }
                assert_eq!(weights[truth.index()], 1, "{e:?}");
                assert!(weights.iter().all(|&w| w >= 1));
                assert_eq!(exact_decode(&code, &s).unwrap(), truth, "{e:?}");
                count += 1;
            }
        }
        assert_eq!(count, 39);
    }

    #[test]
    fn min_weight_invariant_under_routing() {
        let code = build_surface_code(3).unwrap();
        for i in 0..30u64 {
            let spec = NoiseSpec::new(NoiseKind::Depolarizing, 0.15, 21).at(i);
            let e = sample_error(&code, &spec).unwrap();
            let s = measure_syndrome(&code, &e).unwrap();
            for label in ClassLabel::ALL {
                let (w1, _) =
                    min_weight_in_class_routed(&code, &s, label, Routing::Straight).unwrap();
                let (w2, _) =
                    min_weight_in_class_routed(&code, &s, label, Routing::Dogleg).unwrap();
                assert_eq!(w1, w2);
            }
        }
    }

    #[test]
    fn single_sector_matches_joint_on_pure_z() {
        let code = build_surface_code(3).unwrap();
        for i in 0..20u64 {
            let spec = NoiseSpec::new(NoiseKind::PhaseFlip, 0.2, 5).at(i);
            let e = sample_error(&code, &spec).unwrap();
            let s = measure_syndrome(&code, &e).unwrap();
            for label in [ClassLabel::I, ClassLabel::Z] {
                let (wj, _) = min_weight_in_class(&code, &s, label).unwrap();
                let (ws, _) =
                    min_weight_in_class_single(&code, &s, label, ErrorType::Z).unwrap();
                assert_eq!(wj, ws);
            }
        }
    }

    #[test]
    fn rejects_large_distance() {
        let code = build_surface_code(5).unwrap();
        let s = Syndrome::trivial(&code);
        assert!(min_weight_in_class(&code, &s, ClassLabel::I).is_err());
        // single sector still feasible at d=5
        assert!(min_weight_in_class_single(&code, &s, ClassLabel::I, ErrorType::Z).is_ok());
    }

    #[test]
    fn brute_force_one_variable() {
        let m = PolyIsingModel {
            n_spins: 1,
            // +b in binary form is (1 - sigma)/2
            terms: vec![(-0.5, vec![0])],
            roles: vec![VarRole::ErrorSpin(0)],
            offset: 0.5,
        };
        let (e, flips) = brute_force_min_ising(&m).unwrap();
        assert_eq!(e, 0.0);
        assert_eq!(flips, vec![false]);
    }

    #[test]
    fn brute_force_matches_full_reevaluation() {
        let code = build_surface_code(3).unwrap();
        let e = PauliBitString::single_y(13, 4);
        let s = measure_syndrome(&code, &e).unwrap();
        let m = build_unconstrained_depolarizing(&code, &s, ClassLabel::I).unwrap();
        let (emin, flips) = brute_force_min_ising(&m).unwrap();
        assert!((m.energy(&flips) - emin).abs() < 1e-9);
    }

    #[test]
    fn hamiltonian_minimum_matches_oracle_weight() {
        let code = build_surface_code(3).unwrap();
        for i in 0..50u64 {
            let spec = NoiseSpec::new(NoiseKind::Depolarizing, 0.12, 8).at(i);
            let e = sample_error(&code, &spec).unwrap();
            let s = measure_syndrome(&code, &e).unwrap();
            for label in ClassLabel::ALL {
                let (w, _) = min_weight_in_class(&code, &s, label).unwrap();
                let m = build_unconstrained_depolarizing(&code, &s, label).unwrap();
                let (emin, _) = brute_force_min_ising(&m).unwrap();
                let predicted = depolarizing_weight_from_energy(&code, emin);
                assert!((predicted - w as f64).abs() < 1e-9);
            }
        }
    }
}
