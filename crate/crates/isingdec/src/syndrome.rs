//! Syndrome measurement and deterministic pure-error construction.

use crate::code::SurfaceCode;
use crate::pauli::{BitString, PauliBitString};
use crate::{Error, Result};

/// Stabilizer measurement outcomes. A set bit means outcome -1 (a defect).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Syndrome {
    pub face_bits: BitString,
    pub vertex_bits: BitString,
}

impl Syndrome {
    pub fn trivial(code: &SurfaceCode) -> Self {
        Syndrome {
            face_bits: BitString::zeros(code.n_faces()),
            vertex_bits: BitString::zeros(code.n_vertices()),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.face_bits.is_zero() && self.vertex_bits.is_zero()
    }

    pub fn xor(&self, other: &Syndrome) -> Syndrome {
        let mut out = self.clone();
        out.face_bits.xor_assign(&other.face_bits);
        out.vertex_bits.xor_assign(&other.vertex_bits);
        out
    }
}

/// Measure all stabilizer generators against a Pauli error.
///
/// Faces (Z-type) flag X components, vertices (X-type) flag Z components.
/// Linear under `compose`.
pub fn measure_syndrome(code: &SurfaceCode, e: &PauliBitString) -> Result<Syndrome> {
    if e.n_qubits() != code.n_qubits() {
        return Err(Error::SizeMismatch {
            expected: code.n_qubits(),
            got: e.n_qubits(),
        });
    }
    let mut s = Syndrome::trivial(code);
    for (f, support) in code.faces().iter().enumerate() {
        let parity = support.iter().filter(|&&q| e.has_x(q)).count() % 2;
        s.face_bits.set(f, parity == 1);
    }
    for (v, support) in code.vertices().iter().enumerate() {
        let parity = support.iter().filter(|&&q| e.has_z(q)).count() % 2;
        s.vertex_bits.set(v, parity == 1);
    }
    Ok(s)
}

/// Chain routing policy for `pure_error_with`. `Straight` is the default;
/// `Dogleg` detours through the adjacent stabilizer column/row when one
/// exists, producing a pure error in the same homology class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Routing {
    Straight,
    Dogleg,
}

/// Deterministic pure error `T(S)`: X chains route each flipped face to its
/// nearest top/bottom boundary (ties go top); Z chains route each flipped
/// vertex to its nearest left/right boundary (ties go left). Overlapping
/// segments cancel by XOR.
pub fn pure_error(code: &SurfaceCode, s: &Syndrome) -> PauliBitString {
    pure_error_with(code, s, Routing::Straight)
}

pub fn pure_error_with(code: &SurfaceCode, s: &Syndrome, routing: Routing) -> PauliBitString {
    let d = code.d();
    let span = 2 * d - 1;
    let mut t = PauliBitString::identity(code.n_qubits());

    for f in s.face_bits.ones() {
        let (mut i, mut j) = code.face_coords(f);
        if routing == Routing::Dogleg && j >= 2 {
            // sidestep one column; same boundary, same homology class
            t.x_bits_mut().flip(code.qubit_at(i, j - 1));
            j -= 2;
        }
        let up = (i + 1) / 2;
        let down = d - up;
        if up <= down {
            while i > 0 {
                t.x_bits_mut().flip(code.qubit_at(i - 1, j));
                i = i.saturating_sub(2);
            }
        } else {
            while i + 1 < span {
                t.x_bits_mut().flip(code.qubit_at(i + 1, j));
                i += 2;
            }
        }
    }

    for v in s.vertex_bits.ones() {
        let (mut i, mut j) = code.vertex_coords(v);
        if routing == Routing::Dogleg && i >= 2 {
            t.z_bits_mut().flip(code.qubit_at(i - 1, j));
            i -= 2;
        }
        let left = (j + 1) / 2;
        let right = d - left;
        if left <= right {
            while j > 0 {
                t.z_bits_mut().flip(code.qubit_at(i, j - 1));
                j = j.saturating_sub(2);
            }
        } else {
            while j + 1 < span {
                t.z_bits_mut().flip(code.qubit_at(i, j + 1));
                j += 2;
            }
        }
    }

    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_surface_code;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_has_trivial_syndrome() {
        let code = build_surface_code(3).unwrap();
        let s = measure_syndrome(&code, &PauliBitString::identity(13)).unwrap();
        assert!(s.is_trivial());
    }

    #[test]
    fn single_bulk_x_flips_two_faces() {
        let code = build_surface_code(3).unwrap();
        // qubit 4 at (2,2) is bulk: two face and two vertex neighbors
        let e = PauliBitString::single_x(13, 4);
        let s = measure_syndrome(&code, &e).unwrap();
        assert_eq!(s.face_bits.weight(), 2);
        assert_eq!(s.vertex_bits.weight(), 0);
    }

    #[test]
    fn boundary_x_flips_one_face() {
        let code = build_surface_code(3).unwrap();
        for k in 0..code.n_qubits() {
            if code.qubit_face_neighbors(k).len() == 1 {
                let e = PauliBitString::single_x(13, k);
                let s = measure_syndrome(&code, &e).unwrap();
                assert_eq!(s.face_bits.weight(), 1, "qubit {k}");
            }
        }
    }

    #[test]
    fn pure_error_trivial_syndrome() {
        let code = build_surface_code(3).unwrap();
        let t = pure_error(&code, &Syndrome::trivial(&code));
        assert!(t.is_identity());
    }

    #[test]
    fn pure_error_all_face_patterns_d3() {
        let code = build_surface_code(3).unwrap();
        for pattern in 0u32..64 {
            let mut s = Syndrome::trivial(&code);
            for f in 0..6 {
                s.face_bits.set(f, pattern >> f & 1 == 1);
            }
            for routing in [Routing::Straight, Routing::Dogleg] {
                let t = pure_error_with(&code, &s, routing);
                let back = measure_syndrome(&code, &t).unwrap();
                assert_eq!(back, s, "pattern {pattern:#b} routing {routing:?}");
            }
        }
    }

    #[test]
    fn pure_error_all_vertex_patterns_d3() {
        let code = build_surface_code(3).unwrap();
        for pattern in 0u32..64 {
            let mut s = Syndrome::trivial(&code);
            for v in 0..6 {
                s.vertex_bits.set(v, pattern >> v & 1 == 1);
            }
            let t = pure_error(&code, &s);
            assert_eq!(measure_syndrome(&code, &t).unwrap(), s);
        }
    }

    #[test]
    fn round_trip_random_errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in [3usize, 5, 7] {
            let code = build_surface_code(d).unwrap();
            for _ in 0..2_000 {
                let mut e = PauliBitString::identity(code.n_qubits());
                for k in 0..code.n_qubits() {
                    if rng.gen_bool(0.15) {
                        e.x_bits_mut().set(k, rng.gen_bool(0.5));
                        e.z_bits_mut().set(k, rng.gen_bool(0.5));
                    }
                }
                let s = measure_syndrome(&code, &e).unwrap();
                let t = pure_error(&code, &s);
                assert_eq!(measure_syndrome(&code, &t).unwrap(), s);
            }
        }
    }

    #[test]
    fn syndrome_is_linear() {
        let code = build_surface_code(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let mut p = PauliBitString::identity(code.n_qubits());
            let mut q = PauliBitString::identity(code.n_qubits());
            for k in 0..code.n_qubits() {
                p.x_bits_mut().set(k, rng.gen_bool(0.2));
                p.z_bits_mut().set(k, rng.gen_bool(0.2));
                q.x_bits_mut().set(k, rng.gen_bool(0.2));
                q.z_bits_mut().set(k, rng.gen_bool(0.2));
            }
            let lhs = measure_syndrome(&code, &p.compose(&q).unwrap()).unwrap();
            let rhs = measure_syndrome(&code, &p)
                .unwrap()
                .xor(&measure_syndrome(&code, &q).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
