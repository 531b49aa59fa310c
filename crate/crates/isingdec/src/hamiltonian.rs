//! Energy functions for both decoding formulations, plus QUBO reduction.
//!
//! Unconstrained mapping: one spin per stabilizer generator. With
//! `g_k = prod of the generator spins incident on qubit k`, the error
//! reconstructed from any spin configuration automatically satisfies the
//! syndrome, and the energy is an affine function of the error weight:
//!
//! - single-Pauli sector: `N_e = (n_qubits + H) / 2`
//! - depolarizing (X and Z sectors, Y counted once):
//!   `N_e = (3 * n_qubits + H) / 4`
//!
//! Soft-constrained mapping: one spin per qubit; each stabilizer with
//! syndrome `a = +/-1` contributes `-J * a * prod(sigma)` and a field term
//! `-h * sum(sigma)` counts errors.

use crate::code::{ClassLabel, SurfaceCode};
use crate::pauli::PauliBitString;
use crate::syndrome::{pure_error, Syndrome};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Which single-Pauli error sector a model addresses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ErrorType {
    X,
    Z,
}

/// Role of a variable in a model, for reconstruction and inspection.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarRole {
    /// Spin of the Z-type stabilizer on this face (sigma^Z).
    FaceStab(usize),
    /// Spin of the X-type stabilizer on this vertex (sigma^X).
    VertexStab(usize),
    /// Per-qubit error spin of the constrained mapping.
    ErrorSpin(usize),
    /// Auxiliary binary from degree reduction.
    Aux,
}

/// Polynomial Ising model over +/-1 spins, terms up to degree 4.
#[derive(Clone, Debug)]
pub struct PolyIsingModel {
    pub n_spins: usize,
    /// (coefficient, sorted distinct spin indices)
    pub terms: Vec<(f64, Vec<usize>)>,
    pub roles: Vec<VarRole>,
    pub offset: f64,
}

impl PolyIsingModel {
    /// Energy of a spin assignment (`true` = spin -1, matching `b = 1`).
    pub fn energy(&self, flipped: &[bool]) -> f64 {
        assert_eq!(flipped.len(), self.n_spins);
        let mut e = self.offset;
        for (c, idx) in &self.terms {
            let parity = idx.iter().filter(|&&i| flipped[i]).count() % 2;
            e += if parity == 1 { -c } else { *c };
        }
        e
    }

    pub fn max_degree(&self) -> usize {
        self.terms.iter().map(|(_, idx)| idx.len()).max().unwrap_or(0)
    }
}

/// Two-body binary model plus the aux-variable bindings introduced by
/// degree reduction.
#[derive(Clone, Debug)]
pub struct QuboModel {
    pub n_vars: usize,
    pub linear: Vec<f64>,
    /// Keys are ordered pairs (i < j).
    pub quadratic: BTreeMap<(usize, usize), f64>,
    pub offset: f64,
    /// (b_i, b_j, b_aux) triples with b_aux = b_i * b_j enforced by penalty.
    pub aux_bindings: Vec<(usize, usize, usize)>,
    pub alpha: f64,
    pub roles: Vec<VarRole>,
}

impl QuboModel {
    pub fn energy(&self, bits: &[bool]) -> f64 {
        assert_eq!(bits.len(), self.n_vars);
        let mut e = self.offset;
        for (i, &c) in self.linear.iter().enumerate() {
            if bits[i] {
                e += c;
            }
        }
        for (&(i, j), &c) in &self.quadratic {
            if bits[i] && bits[j] {
                e += c;
            }
        }
        e
    }

    pub fn bindings_satisfied(&self, bits: &[bool]) -> bool {
        self.aux_bindings
            .iter()
            .all(|&(i, j, a)| bits[a] == (bits[i] && bits[j]))
    }

    /// Fill aux bits from the primary bits so every binding holds.
    pub fn apply_bindings(&self, bits: &mut [bool]) {
        for &(i, j, a) in &self.aux_bindings {
            bits[a] = bits[i] && bits[j];
        }
    }

    /// Plain-text dump: header comments, then one line per term
    /// (indices then coefficient).
    pub fn dump<W: std::io::Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "# qubo n_vars {}", self.n_vars)?;
        writeln!(w, "# offset {}", self.offset)?;
        for (i, &c) in self.linear.iter().enumerate() {
            if c != 0.0 {
                writeln!(w, "{i} {c}")?;
            }
        }
        for (&(i, j), &c) in &self.quadratic {
            if c != 0.0 {
                writeln!(w, "{i} {j} {c}")?;
            }
        }
        Ok(())
    }
}

fn coupling(tl: &PauliBitString, k: usize, sector: ErrorType) -> f64 {
    let bit = match sector {
        ErrorType::X => tl.has_x(k),
        ErrorType::Z => tl.has_z(k),
    };
    if bit {
        -1.0
    } else {
        1.0
    }
}

/// Single-sector unconstrained model: one spin per vertex stabilizer for X
/// errors (per face stabilizer for Z errors). Per-qubit coupling
/// `J_k = t_k * l_k` from the pure error and the chosen logical; qubits
/// with a single incident stabilizer yield degree-1 terms.
pub fn build_unconstrained_single(
    code: &SurfaceCode,
    s: &Syndrome,
    label: ClassLabel,
    sector: ErrorType,
) -> Result<PolyIsingModel> {
    match sector {
        ErrorType::X if label.cz => {
            return Err(Error::InvalidParams(
                "X-sector model admits classes I and L_X only".into(),
            ))
        }
        ErrorType::Z if label.cx => {
            return Err(Error::InvalidParams(
                "Z-sector model admits classes I and L_Z only".into(),
            ))
        }
        _ => {}
    }
    let t = pure_error(code, s);
    let tl = t.compose(&label.representative(code))?;

    let (n_spins, roles): (usize, Vec<VarRole>) = match sector {
        ErrorType::X => (
            code.n_vertices(),
            (0..code.n_vertices()).map(VarRole::VertexStab).collect(),
        ),
        ErrorType::Z => (
            code.n_faces(),
            (0..code.n_faces()).map(VarRole::FaceStab).collect(),
        ),
    };

    let mut terms = Vec::with_capacity(code.n_qubits());
    for k in 0..code.n_qubits() {
        let neighbors = match sector {
            ErrorType::X => code.qubit_vertex_neighbors(k),
            ErrorType::Z => code.qubit_face_neighbors(k),
        };
        let j_k = coupling(&tl, k, sector);
        let mut idx: Vec<usize> = neighbors.to_vec();
        idx.sort_unstable();
        terms.push((-j_k, idx));
    }

    Ok(PolyIsingModel { n_spins, terms, roles, offset: 0.0 })
}

/// Reconstruct the error encoded by a spin assignment of a single-sector
/// unconstrained model. A flipped spin means the generator is included.
pub fn reconstruct_single(
    code: &SurfaceCode,
    s: &Syndrome,
    label: ClassLabel,
    sector: ErrorType,
    flipped: &[bool],
) -> Result<PauliBitString> {
    let t = pure_error(code, s);
    let mut e = t.compose(&label.representative(code))?;
    match sector {
        ErrorType::X => {
            for k in 0..code.n_qubits() {
                let par = code
                    .qubit_vertex_neighbors(k)
                    .iter()
                    .filter(|&&v| flipped[v])
                    .count()
                    % 2;
                if par == 1 {
                    e.x_bits_mut().flip(k);
                }
            }
        }
        ErrorType::Z => {
            for k in 0..code.n_qubits() {
                let par = code
                    .qubit_face_neighbors(k)
                    .iter()
                    .filter(|&&f| flipped[f])
                    .count()
                    % 2;
                if par == 1 {
                    e.z_bits_mut().flip(k);
                }
            }
        }
    }
    Ok(e)
}

/// Error count from the energy of a single-sector model.
pub fn single_weight_from_energy(code: &SurfaceCode, energy: f64) -> f64 {
    (code.n_qubits() as f64 + energy) / 2.0
}

/// Depolarizing unconstrained model: vertex spins (sigma^X, indices
/// `0..n_vertices`) and face spins (sigma^Z, shifted by `n_vertices`).
/// Each qubit contributes `-J^X g^X - J^Z g^Z - J^X J^Z g^X g^Z` so the
/// energy counts X and Z components with Y errors counted once.
pub fn build_unconstrained_depolarizing(
    code: &SurfaceCode,
    s: &Syndrome,
    label: ClassLabel,
) -> Result<PolyIsingModel> {
    let t = pure_error(code, s);
    let tl = t.compose(&label.representative(code))?;
    let nv = code.n_vertices();
    let n_spins = nv + code.n_faces();
    let roles: Vec<VarRole> = (0..nv)
        .map(VarRole::VertexStab)
        .chain((0..code.n_faces()).map(VarRole::FaceStab))
        .collect();

    let mut terms = Vec::with_capacity(3 * code.n_qubits());
    for k in 0..code.n_qubits() {
        let jx = coupling(&tl, k, ErrorType::X);
        let jz = coupling(&tl, k, ErrorType::Z);
        let mut vx: Vec<usize> = code.qubit_vertex_neighbors(k).to_vec();
        vx.sort_unstable();
        let mut fz: Vec<usize> = code
            .qubit_face_neighbors(k)
            .iter()
            .map(|&f| nv + f)
            .collect();
        fz.sort_unstable();
        let mut quartic = vx.clone();
        quartic.extend_from_slice(&fz);
        terms.push((-jx, vx));
        terms.push((-jz, fz));
        terms.push((-jx * jz, quartic));
    }

    Ok(PolyIsingModel { n_spins, terms, roles, offset: 0.0 })
}

/// Reconstruct `E = T . L . G(sigma)` from a depolarizing-model assignment.
/// The result satisfies the measured syndrome for every assignment.
pub fn reconstruct_depolarizing(
    code: &SurfaceCode,
    s: &Syndrome,
    label: ClassLabel,
    flipped: &[bool],
) -> Result<PauliBitString> {
    let t = pure_error(code, s);
    let mut e = t.compose(&label.representative(code))?;
    let nv = code.n_vertices();
    for k in 0..code.n_qubits() {
        let px = code
            .qubit_vertex_neighbors(k)
            .iter()
            .filter(|&&v| flipped[v])
            .count()
            % 2;
        if px == 1 {
            e.x_bits_mut().flip(k);
        }
        let pz = code
            .qubit_face_neighbors(k)
            .iter()
            .filter(|&&f| flipped[nv + f])
            .count()
            % 2;
        if pz == 1 {
            e.z_bits_mut().flip(k);
        }
    }
    Ok(e)
}

/// Error count (Y counted once) from the depolarizing-model energy.
pub fn depolarizing_weight_from_energy(code: &SurfaceCode, energy: f64) -> f64 {
    (3.0 * code.n_qubits() as f64 + energy) / 4.0
}

/// Soft-constrained phase-flip model: one error spin per qubit. Each
/// vertex stabilizer with syndrome `a` contributes `-J * a * prod(sigma)`
/// over its support; the field `-h * sum(sigma)` counts errors.
pub fn build_constrained_z(
    code: &SurfaceCode,
    s: &Syndrome,
    j: f64,
    h: f64,
) -> Result<PolyIsingModel> {
    if j <= 0.0 || h <= 0.0 {
        return Err(Error::InvalidParams("J and h must be positive".into()));
    }
    let n_spins = code.n_qubits();
    let roles: Vec<VarRole> = (0..n_spins).map(VarRole::ErrorSpin).collect();
    let mut terms = Vec::with_capacity(code.n_vertices() + n_spins);
    for (v, support) in code.vertices().iter().enumerate() {
        let a = if s.vertex_bits.get(v) { -1.0 } else { 1.0 };
        let mut idx = support.clone();
        idx.sort_unstable();
        terms.push((-j * a, idx));
    }
    for k in 0..n_spins {
        terms.push((-h, vec![k]));
    }
    Ok(PolyIsingModel { n_spins, terms, roles, offset: 0.0 })
}

/// Read the Z-error pattern off a constrained-model assignment.
pub fn reconstruct_constrained_z(code: &SurfaceCode, flipped: &[bool]) -> PauliBitString {
    let mut e = PauliBitString::identity(code.n_qubits());
    for (k, &f) in flipped.iter().enumerate() {
        if f {
            e.z_bits_mut().set(k, true);
        }
    }
    e
}

/// Convert a spin polynomial to QUBO form.
///
/// Spins become binaries via `sigma = 1 - 2b`; every degree-3/4 monomial is
/// reduced by substituting variable pairs with auxiliary binaries, each
/// enforced by the penalty `alpha * (b_i b_j - 2 b_j b' - 2 b_i b' + 3 b')`,
/// which is zero exactly when `b' = b_i b_j` and at least `alpha` otherwise.
/// On every assignment satisfying all bindings the QUBO energy equals the
/// input energy, offset included.
pub fn reduce_to_qubo(model: &PolyIsingModel, alpha: f64) -> Result<QuboModel> {
    if alpha <= 0.0 {
        return Err(Error::InvalidParams("alpha must be positive".into()));
    }
    if model.max_degree() > 4 {
        return Err(Error::DegreeTooHigh(model.max_degree()));
    }

    // expand spin terms into a multilinear binary polynomial
    let mut poly: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    let mut offset = model.offset;
    for (c, idx) in &model.terms {
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        let deg = idx.len();
        for subset in 0u32..(1 << deg) {
            let members: Vec<usize> = (0..deg)
                .filter(|b| subset >> b & 1 == 1)
                .map(|b| idx[b])
                .collect();
            let coeff = c * (-2.0f64).powi(members.len() as i32);
            if members.is_empty() {
                offset += coeff;
            } else {
                *poly.entry(members).or_insert(0.0) += coeff;
            }
        }
    }
    poly.retain(|_, c| c.abs() > 1e-12);

    // degree reduction with shared aux bindings
    let n_primary = model.n_spins;
    let mut next_var = n_primary;
    let mut binding_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut aux_bindings: Vec<(usize, usize, usize)> = Vec::new();
    let mut reduced: BTreeMap<Vec<usize>, f64> = BTreeMap::new();

    // process high-degree monomials first: the quartic stabilizer terms
    // then establish one aux per sector pair, and their cubic children
    // reuse those pairs instead of minting cross-sector auxiliaries
    let mut monomials: Vec<(Vec<usize>, f64)> = poly.into_iter().collect();
    monomials.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));

    for (mut members, coeff) in monomials {
        while members.len() > 2 {
            let existing = binding_index.keys().find(|&&(a, b)| {
                members.binary_search(&a).is_ok() && members.binary_search(&b).is_ok()
            });
            let (a, b) = match existing {
                Some(&(a, b)) => (a, b),
                None => {
                    let primaries: Vec<usize> =
                        members.iter().copied().filter(|&m| m < n_primary).collect();
                    if primaries.len() >= 2 {
                        (primaries[0], primaries[1])
                    } else {
                        (members[0], members[1])
                    }
                }
            };
            let aux = *binding_index.entry((a, b)).or_insert_with(|| {
                let id = next_var;
                next_var += 1;
                aux_bindings.push((a, b, id));
                id
            });
            members.retain(|&m| m != a && m != b);
            members.push(aux);
            members.sort_unstable();
        }
        *reduced.entry(members).or_insert(0.0) += coeff;
    }

    let n_vars = next_var;
    let mut linear = vec![0.0; n_vars];
    let mut quadratic: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for (members, coeff) in reduced {
        match members.len() {
            1 => linear[members[0]] += coeff,
            2 => *quadratic.entry((members[0], members[1])).or_insert(0.0) += coeff,
            _ => unreachable!(),
        }
    }

    for &(i, j, a) in &aux_bindings {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        *quadratic.entry((lo, hi)).or_insert(0.0) += alpha;
        *quadratic.entry((i.min(a), i.max(a))).or_insert(0.0) += -2.0 * alpha;
        *quadratic.entry((j.min(a), j.max(a))).or_insert(0.0) += -2.0 * alpha;
        linear[a] += 3.0 * alpha;
    }
    quadratic.retain(|_, c| c.abs() > 1e-12);

    let mut roles = model.roles.clone();
    roles.resize(n_vars, VarRole::Aux);

    Ok(QuboModel {
        n_vars,
        linear,
        quadratic,
        offset,
        aux_bindings,
        alpha,
        roles,
    })
}

/// Spin view of a QUBO assignment restricted to primary variables:
/// `b = 1` corresponds to spin -1 (flipped).
pub fn primary_flips(model: &QuboModel, bits: &[bool]) -> Vec<bool> {
    model
        .roles
        .iter()
        .zip(bits)
        .filter(|(r, _)| !matches!(r, VarRole::Aux))
        .map(|(_, &b)| b)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_surface_code;
    use crate::syndrome::measure_syndrome;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn brute_min_ising(m: &PolyIsingModel) -> f64 {
        let mut best = f64::INFINITY;
        for mask in 0u64..(1 << m.n_spins) {
            let flips: Vec<bool> = (0..m.n_spins).map(|i| mask >> i & 1 == 1).collect();
            best = best.min(m.energy(&flips));
        }
        best
    }

    #[test]
    fn single_trivial_ground_state() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let m = build_unconstrained_single(&code, &s, ClassLabel::I, ErrorType::X).unwrap();
        let zero = vec![false; m.n_spins];
        assert_eq!(m.energy(&zero), -(code.n_qubits() as f64));
        assert_eq!(single_weight_from_energy(&code, m.energy(&zero)), 0.0);
        assert_eq!(brute_min_ising(&m), -13.0);
    }

    #[test]
    fn single_bulk_error_ground_energy() {
        let code = build_surface_code(3).unwrap();
        // center X error: the pure error routes its two face defects to
        // opposite boundaries, so the weight-1 pattern sits in class L_X
        // and class I bottoms out at weight 2
        let e = PauliBitString::single_x(13, 4);
        let s = measure_syndrome(&code, &e).unwrap();
        let m_i = build_unconstrained_single(&code, &s, ClassLabel::I, ErrorType::X).unwrap();
        assert_eq!(brute_min_ising(&m_i), -9.0); // N_e = 2
        let m_x = build_unconstrained_single(&code, &s, ClassLabel::X, ErrorType::X).unwrap();
        assert_eq!(brute_min_ising(&m_x), -11.0); // N_e = 1
    }

    #[test]
    fn single_logical_class_ground_weight_is_distance() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let m = build_unconstrained_single(&code, &s, ClassLabel::X, ErrorType::X).unwrap();
        let ground = brute_min_ising(&m);
        assert_eq!(single_weight_from_energy(&code, ground), 3.0);
    }

    #[test]
    fn single_rejects_mismatched_class() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        assert!(build_unconstrained_single(&code, &s, ClassLabel::Z, ErrorType::X).is_err());
        assert!(build_unconstrained_single(&code, &s, ClassLabel::X, ErrorType::Z).is_err());
    }

    #[test]
    fn depolarizing_trivial_ground_state() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let m = build_unconstrained_depolarizing(&code, &s, ClassLabel::I).unwrap();
        let zero = vec![false; m.n_spins];
        assert_eq!(depolarizing_weight_from_energy(&code, m.energy(&zero)), 0.0);
    }

    #[test]
    fn depolarizing_syndrome_always_satisfied() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in [3usize, 5] {
            let code = build_surface_code(d).unwrap();
            for _ in 0..20 {
                let mut e = PauliBitString::identity(code.n_qubits());
                for k in 0..code.n_qubits() {
                    if rng.gen_bool(0.1) {
                        e.x_bits_mut().set(k, rng.gen_bool(0.7));
                        e.z_bits_mut().set(k, rng.gen_bool(0.7));
                    }
                }
                let s = measure_syndrome(&code, &e).unwrap();
                for label in ClassLabel::ALL {
                    let m = build_unconstrained_depolarizing(&code, &s, label).unwrap();
                    for _ in 0..50 {
                        let flips: Vec<bool> =
                            (0..m.n_spins).map(|_| rng.gen_bool(0.5)).collect();
                        let rec = reconstruct_depolarizing(&code, &s, label, &flips).unwrap();
                        assert_eq!(measure_syndrome(&code, &rec).unwrap(), s);
                    }
                }
            }
        }
    }

    #[test]
    fn depolarizing_energy_weight_affine_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let code = build_surface_code(3).unwrap();
        for _ in 0..20 {
            let mut e = PauliBitString::identity(code.n_qubits());
            for k in 0..code.n_qubits() {
                if rng.gen_bool(0.2) {
                    e.x_bits_mut().set(k, rng.gen_bool(0.6));
                    e.z_bits_mut().set(k, rng.gen_bool(0.6));
                }
            }
            let s = measure_syndrome(&code, &e).unwrap();
            for label in ClassLabel::ALL {
                let m = build_unconstrained_depolarizing(&code, &s, label).unwrap();
                for _ in 0..50 {
                    let flips: Vec<bool> = (0..m.n_spins).map(|_| rng.gen_bool(0.5)).collect();
                    let rec = reconstruct_depolarizing(&code, &s, label, &flips).unwrap();
                    let predicted = depolarizing_weight_from_energy(&code, m.energy(&flips));
                    assert!((predicted - rec.weight() as f64).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn depolarizing_single_y_error_min_weight_one() {
        let code = build_surface_code(3).unwrap();
        let e = PauliBitString::single_y(13, 4);
        let s = measure_syndrome(&code, &e).unwrap();
        let t = pure_error(&code, &s);
        let truth = crate::code::logical_class(&code, &e.compose(&t).unwrap()).unwrap();
        let mut minima = Vec::new();
        for label in ClassLabel::ALL {
            let m = build_unconstrained_depolarizing(&code, &s, label).unwrap();
            minima.push(depolarizing_weight_from_energy(&code, brute_min_ising(&m)));
        }
        let global = minima.iter().cloned().fold(f64::INFINITY, f64::min);
        assert_eq!(global, 1.0);
        assert_eq!(minima[truth.index()], global);
    }

    #[test]
    fn constrained_trivial_ground_state() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let m = build_constrained_z(&code, &s, 20.0, 20.0).unwrap();
        let zero = vec![false; m.n_spins];
        let expected = -20.0 * code.n_vertices() as f64 - 20.0 * code.n_qubits() as f64;
        assert_eq!(m.energy(&zero), expected);
        assert_eq!(brute_min_ising(&m), expected);
    }

    #[test]
    fn constrained_single_z_error_recovered() {
        let code = build_surface_code(3).unwrap();
        let e = PauliBitString::single_z(13, 4);
        let s = measure_syndrome(&code, &e).unwrap();
        let m = build_constrained_z(&code, &s, 20.0, 20.0).unwrap();
        let mut best = (f64::INFINITY, 0u64);
        for mask in 0u64..(1 << 13) {
            let flips: Vec<bool> = (0..13).map(|i| mask >> i & 1 == 1).collect();
            let en = m.energy(&flips);
            if en < best.0 {
                best = (en, mask);
            }
        }
        // ground state is a weight-1 error with the right syndrome
        assert_eq!(best.1.count_ones(), 1);
        let flips: Vec<bool> = (0..13).map(|i| best.1 >> i & 1 == 1).collect();
        let rec = reconstruct_constrained_z(&code, &flips);
        assert_eq!(measure_syndrome(&code, &rec).unwrap(), s);
    }

    #[test]
    fn constrained_violation_cost() {
        // flipping one spin of a satisfied stabilizer adds 2J to that term
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let j = 20.0;
        let h = 1.0;
        let m = build_constrained_z(&code, &s, j, h).unwrap();
        let zero = vec![false; m.n_spins];
        let base = m.energy(&zero);
        for k in 0..m.n_spins {
            let mut flips = zero.clone();
            flips[k] = true;
            let n_violated = code.qubit_vertex_neighbors(k).len() as f64;
            assert!((m.energy(&flips) - base - (2.0 * j * n_violated + 2.0 * h)).abs() < 1e-9);
        }
    }

    #[test]
    fn qubo_degree_two_passthrough() {
        let m = PolyIsingModel {
            n_spins: 3,
            terms: vec![(1.5, vec![0, 1]), (-0.5, vec![2]), (0.25, vec![1, 2])],
            roles: vec![VarRole::ErrorSpin(0); 3],
            offset: 0.75,
        };
        let q = reduce_to_qubo(&m, 10.0).unwrap();
        assert_eq!(q.n_vars, 3);
        assert!(q.aux_bindings.is_empty());
        for mask in 0u32..8 {
            let bits: Vec<bool> = (0..3).map(|i| mask >> i & 1 == 1).collect();
            assert!((q.energy(&bits) - m.energy(&bits)).abs() < 1e-9);
        }
    }

    #[test]
    fn qubo_single_quartic_term() {
        let m = PolyIsingModel {
            n_spins: 4,
            terms: vec![(-1.0, vec![0, 1, 2, 3])],
            roles: vec![VarRole::ErrorSpin(0); 4],
            offset: 0.0,
        };
        // the expansion of the quartic reaches coefficient 16, so the
        // penalty must dominate that to pin the auxiliaries
        let alpha = 20.0;
        let q = reduce_to_qubo(&m, alpha).unwrap();
        assert_eq!(q.n_vars, 6);
        assert_eq!(q.aux_bindings.len(), 2);
        let mut consistent_min = f64::INFINITY;
        for mask in 0u32..64 {
            let bits: Vec<bool> = (0..6).map(|i| mask >> i & 1 == 1).collect();
            let en = q.energy(&bits);
            if q.bindings_satisfied(&bits) {
                let spins: Vec<bool> = bits[..4].to_vec();
                assert!((en - m.energy(&spins)).abs() < 1e-9);
                consistent_min = consistent_min.min(en);
            }
        }
        for mask in 0u32..64 {
            let bits: Vec<bool> = (0..6).map(|i| mask >> i & 1 == 1).collect();
            if !q.bindings_satisfied(&bits) {
                assert!(q.energy(&bits) > consistent_min + 1e-9);
            }
        }
    }

    #[test]
    fn penalty_eight_cases_per_binding() {
        // evaluate the penalty polynomial alone over all 8 assignments
        for (bi, bj, ba) in
            [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
        {
            let alpha = 2.5;
            let val = alpha
                * ((bi * bj) as f64 - 2.0 * (bj * ba) as f64 - 2.0 * (bi * ba) as f64
                    + 3.0 * ba as f64);
            if ba == bi * bj {
                assert_eq!(val, 0.0);
            } else {
                assert!(val >= alpha);
            }
        }
    }

    #[test]
    fn qubo_rejects_degree_five() {
        let m = PolyIsingModel {
            n_spins: 5,
            terms: vec![(1.0, vec![0, 1, 2, 3, 4])],
            roles: vec![VarRole::ErrorSpin(0); 5],
            offset: 0.0,
        };
        assert!(reduce_to_qubo(&m, 1.0).is_err());
    }

    #[test]
    fn qubo_matches_ising_on_consistent_assignments() {
        let code = build_surface_code(3).unwrap();
        let e = PauliBitString::single_y(13, 6);
        let s = measure_syndrome(&code, &e).unwrap();
        let m = build_unconstrained_depolarizing(&code, &s, ClassLabel::I).unwrap();
        let q = reduce_to_qubo(&m, 30.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let mut bits = vec![false; q.n_vars];
            for b in bits.iter_mut().take(m.n_spins) {
                *b = rng.gen_bool(0.5);
            }
            q.apply_bindings(&mut bits);
            let spins: Vec<bool> = bits[..m.n_spins].to_vec();
            assert!((q.energy(&bits) - m.energy(&spins)).abs() < 1e-9);
        }
    }
}
