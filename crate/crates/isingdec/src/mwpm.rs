//! Minimum-weight perfect-matching baseline, X and Z sectors decoded
//! independently. Matching is exact: dynamic programming over defect
//! subsets, with each defect paired to another defect or to its nearest
//! admissible boundary. Instances beyond the subset bound are rejected.

use crate::code::{logical_class, ClassLabel, SurfaceCode};
use crate::pauli::{BitString, PauliBitString};
use crate::syndrome::{measure_syndrome, pure_error, Syndrome};
use crate::{Error, Result};

/// DP memory bound: 2^29 f32 states (~2 GiB) worst case.
pub const MAX_DEFECTS: usize = 29;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sector {
    /// X errors, detected by faces; chains end on the top/bottom boundary.
    XErrors,
    /// Z errors, detected by vertices; chains end on the left/right boundary.
    ZErrors,
}

/// Defect set of one sector with pairwise and boundary distances and the
/// qubit chains realizing them.
#[derive(Clone, Debug)]
pub struct DefectGraph {
    pub sector: Sector,
    pub defects: Vec<usize>,
    pub coords: Vec<(usize, usize)>,
    pub pair_weights: Vec<Vec<usize>>,
    pub boundary_weights: Vec<usize>,
    pub pair_paths: Vec<Vec<BitString>>,
    pub boundary_paths: Vec<BitString>,
}

fn straight_boundary_chain(code: &SurfaceCode, sector: Sector, i: usize, j: usize) -> BitString {
    let d = code.d();
    let span = 2 * d - 1;
    let mut chain = BitString::zeros(code.n_qubits());
    match sector {
        Sector::XErrors => {
            let up = (i + 1) / 2;
            if up <= d - up {
                let mut i = i;
                while i > 0 {
                    chain.flip(code.qubit_at(i - 1, j));
                    i = i.saturating_sub(2);
                }
            } else {
                let mut i = i;
                while i + 1 < span {
                    chain.flip(code.qubit_at(i + 1, j));
                    i += 2;
                }
            }
        }
        Sector::ZErrors => {
            let left = (j + 1) / 2;
            if left <= d - left {
                let mut j = j;
                while j > 0 {
                    chain.flip(code.qubit_at(i, j - 1));
                    j = j.saturating_sub(2);
                }
            } else {
                let mut j = j;
                while j + 1 < span {
                    chain.flip(code.qubit_at(i, j + 1));
                    j += 2;
                }
            }
        }
    }
    chain
}

/// L-shaped chain between two stabilizers of the same sector.
fn pair_chain(
    code: &SurfaceCode,
    sector: Sector,
    a: (usize, usize),
    b: (usize, usize),
) -> BitString {
    let mut chain = BitString::zeros(code.n_qubits());
    let ((i1, j1), (i2, j2)) = (a, b);
    match sector {
        Sector::XErrors => {
            // vertical leg at column j1, then horizontal at row i2
            let (ilo, ihi) = (i1.min(i2), i1.max(i2));
            let mut i = ilo;
            while i < ihi {
                chain.flip(code.qubit_at(i + 1, j1));
                i += 2;
            }
            let (jlo, jhi) = (j1.min(j2), j1.max(j2));
            let mut j = jlo;
            while j < jhi {
                chain.flip(code.qubit_at(i2, j + 1));
                j += 2;
            }
        }
        Sector::ZErrors => {
            let (jlo, jhi) = (j1.min(j2), j1.max(j2));
            let mut j = jlo;
            while j < jhi {
                chain.flip(code.qubit_at(i1, j + 1));
                j += 2;
            }
            let (ilo, ihi) = (i1.min(i2), i1.max(i2));
            let mut i = ilo;
            while i < ihi {
                chain.flip(code.qubit_at(i + 1, j2));
                i += 2;
            }
        }
    }
    chain
}

pub fn build_defect_graph(code: &SurfaceCode, s: &Syndrome, sector: Sector) -> DefectGraph {
    let (defects, coords): (Vec<usize>, Vec<(usize, usize)>) = match sector {
        Sector::XErrors => s
            .face_bits
            .ones()
            .map(|f| (f, code.face_coords(f)))
            .unzip(),
        Sector::ZErrors => s
            .vertex_bits
            .ones()
            .map(|v| (v, code.vertex_coords(v)))
            .unzip(),
    };
    let d = code.d();
    let n = defects.len();
    let mut pair_weights = vec![vec![0usize; n]; n];
    let mut pair_paths = vec![vec![BitString::zeros(code.n_qubits()); n]; n];
    for a in 0..n {
        for b in (a + 1)..n {
            let w = coords[a].0.abs_diff(coords[b].0) / 2 + coords[a].1.abs_diff(coords[b].1) / 2;
            pair_weights[a][b] = w;
            pair_weights[b][a] = w;
            let chain = pair_chain(code, sector, coords[a], coords[b]);
            debug_assert_eq!(chain.weight(), w);
            pair_paths[a][b] = chain.clone();
            pair_paths[b][a] = chain;
        }
    }
    let boundary_weights: Vec<usize> = coords
        .iter()
        .map(|&(i, j)| match sector {
            Sector::XErrors => ((i + 1) / 2).min(d - (i + 1) / 2),
            Sector::ZErrors => ((j + 1) / 2).min(d - (j + 1) / 2),
        })
        .collect();
    let boundary_paths: Vec<BitString> = coords
        .iter()
        .map(|&(i, j)| straight_boundary_chain(code, sector, i, j))
        .collect();
    DefectGraph {
        sector,
        defects,
        coords,
        pair_weights,
        boundary_weights,
        pair_paths,
        boundary_paths,
    }
}

/// A minimum-weight matching: defect index pairs plus boundary-matched
/// defects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub boundary: Vec<usize>,
    pub total_weight: usize,
}

/// Exact minimum over all pairings (defect-defect or defect-boundary) by
/// subset DP. Errors when the defect count exceeds [`MAX_DEFECTS`].
pub fn min_weight_matching(g: &DefectGraph) -> Result<Matching> {
    let n = g.defects.len();
    if n > MAX_DEFECTS {
        return Err(Error::TooManyDefects(n, MAX_DEFECTS));
    }
    if n == 0 {
        return Ok(Matching { pairs: vec![], boundary: vec![], total_weight: 0 });
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut dp = vec![f32::INFINITY; full as usize + 1];
    dp[0] = 0.0;
    for mask in 1..=full {
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut best = dp[rest as usize] + g.boundary_weights[i] as f32;
        let mut others = rest;
        while others != 0 {
            let j = others.trailing_zeros() as usize;
            others &= others - 1;
            let cand = dp[(rest & !(1 << j)) as usize] + g.pair_weights[i][j] as f32;
            if cand < best {
                best = cand;
            }
        }
        dp[mask as usize] = best;
    }

    // reconstruct along the optimal transitions
    let mut pairs = Vec::new();
    let mut boundary = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        if (dp[mask as usize] - (dp[rest as usize] + g.boundary_weights[i] as f32)).abs() < 0.5 {
            boundary.push(g.defects[i]);
            mask = rest;
            continue;
        }
        let mut others = rest;
        let mut matched = None;
        while others != 0 {
            let j = others.trailing_zeros() as usize;
            others &= others - 1;
            let next = rest & !(1 << j);
            if (dp[mask as usize] - (dp[next as usize] + g.pair_weights[i][j] as f32)).abs() < 0.5
            {
                matched = Some(j);
                break;
            }
        }
        let j = matched.expect("dp transition must exist");
        pairs.push((g.defects[i], g.defects[j]));
        mask = rest & !(1 << j);
    }
    Ok(Matching {
        pairs,
        boundary,
        total_weight: dp[full as usize] as usize,
    })
}

/// Correction chain realizing a matching, as a one-sector bit vector.
pub fn matching_correction(g: &DefectGraph, m: &Matching) -> BitString {
    let idx_of = |defect: usize| g.defects.iter().position(|&d| d == defect).unwrap();
    let mut out = BitString::zeros(g.boundary_paths.first().map_or(0, |p| p.len()).max({
        // empty graph: no paths to take the length from
        0
    }));
    if g.defects.is_empty() {
        return out;
    }
    for &(a, b) in &m.pairs {
        out.xor_assign(&g.pair_paths[idx_of(a)][idx_of(b)]);
    }
    for &a in &m.boundary {
        out.xor_assign(&g.boundary_paths[idx_of(a)]);
    }
    out
}

/// Decode both sectors independently and classify the correction.
pub fn mwpm_decode(code: &SurfaceCode, s: &Syndrome) -> Result<(ClassLabel, PauliBitString)> {
    let gx = build_defect_graph(code, s, Sector::XErrors);
    let gz = build_defect_graph(code, s, Sector::ZErrors);
    let mx = min_weight_matching(&gx)?;
    let mz = min_weight_matching(&gz)?;
    let mut correction = PauliBitString::identity(code.n_qubits());
    if !gx.defects.is_empty() {
        correction.x_bits_mut().xor_assign(&matching_correction(&gx, &mx));
    }
    if !gz.defects.is_empty() {
        correction.z_bits_mut().xor_assign(&matching_correction(&gz, &mz));
    }
    debug_assert_eq!(&measure_syndrome(code, &correction)?, s);
    let t = pure_error(code, s);
    let label = logical_class(code, &correction.compose(&t)?)?;
    Ok((label, correction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_surface_code;
    use crate::noise::{sample_error, NoiseKind, NoiseSpec};

    #[test]
    fn trivial_syndrome_empty_graph() {
        let code = build_surface_code(3).unwrap();
        let s = Syndrome::trivial(&code);
        let g = build_defect_graph(&code, &s, Sector::XErrors);
        assert!(g.defects.is_empty());
        let m = min_weight_matching(&g).unwrap();
        assert_eq!(m.total_weight, 0);
        let (label, _) = mwpm_decode(&code, &s).unwrap();
        assert_eq!(label, ClassLabel::I);
    }

    #[test]
    fn single_bulk_x_two_defects_distance_one() {
        let code = build_surface_code(3).unwrap();
        let e = PauliBitString::single_x(13, 4);
        let s = measure_syndrome(&code, &e).unwrap();
        let g = build_defect_graph(&code, &s, Sector::XErrors);
        assert_eq!(g.defects.len(), 2);
        assert_eq!(g.pair_weights[0][1], 1);
        let m = min_weight_matching(&g).unwrap();
        assert_eq!(m.pairs.len(), 1);
        assert_eq!(m.total_weight, 1);
    }

    #[test]
    fn two_x_in_a_row_distance_two() {
        let code = build_surface_code(5).unwrap();
        // two vertically adjacent bulk X errors share a face; endpoints
        // sit two faces apart
        let q1 = code.qubit_at(2, 2);
        let q2 = code.qubit_at(4, 2);
        let mut e = PauliBitString::identity(code.n_qubits());
        e.x_bits_mut().set(q1, true);
        e.x_bits_mut().set(q2, true);
        let s = measure_syndrome(&code, &e).unwrap();
        let g = build_defect_graph(&code, &s, Sector::XErrors);
        assert_eq!(g.defects.len(), 2);
        assert_eq!(g.pair_weights[0][1], 2);
    }

    #[test]
    fn forced_pairing_when_boundaries_far() {
        let code = build_surface_code(7).unwrap();
        let e = PauliBitString::single_x(code.n_qubits(), code.qubit_at(6, 6));
        let s = measure_syndrome(&code, &e).unwrap();
        let g = build_defect_graph(&code, &s, Sector::XErrors);
        let m = min_weight_matching(&g).unwrap();
        assert_eq!(m.pairs.len(), 1);
        assert!(m.boundary.is_empty());
    }

    /// Brute-force minimum matching weight over all pairings/boundary
    /// assignments, used as an independent oracle for small n.
    fn brute_min(g: &DefectGraph) -> usize {
        fn rec(g: &DefectGraph, remaining: &mut Vec<usize>) -> usize {
            let Some(&i) = remaining.first() else { return 0 };
            let mut best = usize::MAX;
            let rest: Vec<usize> = remaining[1..].to_vec();
            {
                let mut r = rest.clone();
                best = best.min(g.boundary_weights[i] + rec(g, &mut r));
            }
            for (pos, &j) in rest.iter().enumerate() {
                let mut r = rest.clone();
                r.remove(pos);
                best = best.min(g.pair_weights[i][j] + rec(g, &mut r));
            }
            best
        }
        let mut remaining: Vec<usize> = (0..g.defects.len()).collect();
        rec(g, &mut remaining)
    }

    #[test]
    fn dp_matches_brute_force_up_to_eight_defects() {
        let code = build_surface_code(5).unwrap();
        let mut checked = 0;
        for i in 0..200u64 {
            let spec = NoiseSpec::new(NoiseKind::BitFlip, 0.08, 31).at(i);
            let e = sample_error(&code, &spec).unwrap();
            let s = measure_syndrome(&code, &e).unwrap();
            let g = build_defect_graph(&code, &s, Sector::XErrors);
            if g.defects.is_empty() || g.defects.len() > 8 {
                continue;
            }
            let m = min_weight_matching(&g).unwrap();
            assert_eq!(m.total_weight, brute_min(&g));
            checked += 1;
        }
        assert!(checked > 50);
    }

    #[test]
    fn correction_reproduces_syndrome() {
        for d in [3usize, 5] {
            let code = build_surface_code(d).unwrap();
            for i in 0..100u64 {
                let spec = NoiseSpec::new(NoiseKind::Depolarizing, 0.1, 17).at(i);
                let e = sample_error(&code, &spec).unwrap();
                let s = measure_syndrome(&code, &e).unwrap();
                let (_, correction) = mwpm_decode(&code, &s).unwrap();
                assert_eq!(measure_syndrome(&code, &correction).unwrap(), s);
            }
        }
    }

    #[test]
    fn weight_one_errors_corrected_at_d3() {
        let code = build_surface_code(3).unwrap();
        let n = code.n_qubits();
        for k in 0..n {
            for e in [
                PauliBitString::single_x(n, k),
                PauliBitString::single_y(n, k),
                PauliBitString::single_z(n, k),
            ] {
                let s = measure_syndrome(&code, &e).unwrap();
                let t = pure_error(&code, &s);
                let truth = logical_class(&code, &e.compose(&t).unwrap()).unwrap();
                let (label, _) = mwpm_decode(&code, &s).unwrap();
                assert_eq!(label, truth, "{e:?}");
            }
        }
    }

    #[test]
    fn sector_independence() {
        let code = build_surface_code(5).unwrap();
        let spec = NoiseSpec::new(NoiseKind::Depolarizing, 0.15, 77).at(3);
        let e = sample_error(&code, &spec).unwrap();
        let s = measure_syndrome(&code, &e).unwrap();
        let gz_before = build_defect_graph(&code, &s, Sector::ZErrors);
        let mz_before = min_weight_matching(&gz_before).unwrap();
        // wipe the X-sector defects; Z-sector result must not change
        let mut s2 = s.clone();
        s2.face_bits = crate::pauli::BitString::zeros(code.n_faces());
        let gz_after = build_defect_graph(&code, &s2, Sector::ZErrors);
        let mz_after = min_weight_matching(&gz_after).unwrap();
        assert_eq!(mz_before, mz_after);
    }
}
