//! Planar surface code geometry.
//!
//! The code lives on a `(2d-1) x (2d-1)` coordinate grid. Cells `(i, j)`
//! with `i + j` even hold data qubits; cells with `i` odd, `j` even hold
//! Z-type face stabilizers `A_f`; cells with `i` even, `j` odd hold X-type
//! vertex stabilizers `B_v`.
//!
//! Index diagram for `d = 3` (q = qubit, F = face, V = vertex):
//!
//! ```text
//!   j:  0    1    2    3    4
//! i=0  q0   V0   q1   V1   q2
//! i=1  F0   q9   F1   q10  F2
//! i=2  q3   V2   q4   V3   q5
//! i=3  F3   q11  F4   q12  F5
//! i=4  q6   V4   q7   V5   q8
//! ```
//!
//! Qubits on the even sub-lattice (both coordinates even) are numbered
//! first, row-major, then the odd sub-lattice. Faces and vertices are
//! row-major over their own sub-lattices.
//!
//! Orientation convention: the logical Z chain runs left to right along
//! the top row (`L_Z` on qubits 0..d), the logical X chain top to bottom
//! along the left column. X-error chains terminate on the top/bottom
//! boundaries, Z-error chains on the left/right boundaries. All reported
//! results are invariant under the X<->Z lattice duality.

use crate::pauli::{BitString, PauliBitString};
use crate::{Error, Result};

/// Logical equivalence class of a syndrome-free Pauli:
/// `(cx, cz)` flags logical-X and logical-Z content.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ClassLabel {
    pub cx: bool,
    pub cz: bool,
}

impl ClassLabel {
    pub const I: ClassLabel = ClassLabel { cx: false, cz: false };
    pub const X: ClassLabel = ClassLabel { cx: true, cz: false };
    pub const Z: ClassLabel = ClassLabel { cx: false, cz: true };
    pub const XZ: ClassLabel = ClassLabel { cx: true, cz: true };

    /// Fixed comparison order: I, L_X, L_Z, L_X L_Z.
    pub const ALL: [ClassLabel; 4] = [Self::I, Self::X, Self::Z, Self::XZ];

    pub fn xor(self, other: ClassLabel) -> ClassLabel {
        ClassLabel {
            cx: self.cx ^ other.cx,
            cz: self.cz ^ other.cz,
        }
    }

    /// Canonical representative: the product of the stored logical chains.
    pub fn representative(self, code: &SurfaceCode) -> PauliBitString {
        let mut p = PauliBitString::identity(code.n_qubits());
        if self.cx {
            p.compose_assign(code.logical_x());
        }
        if self.cz {
            p.compose_assign(code.logical_z());
        }
        p
    }

    pub fn index(self) -> usize {
        (self.cx as usize) | (self.cz as usize) << 1
    }

    pub fn name(self) -> &'static str {
        match (self.cx, self.cz) {
            (false, false) => "I",
            (true, false) => "L_X",
            (false, true) => "L_Z",
            (true, true) => "L_XZ",
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Distance-`d` planar surface code.
#[derive(Clone, Debug)]
pub struct SurfaceCode {
    d: usize,
    n_qubits: usize,
    faces: Vec<Vec<usize>>,
    vertices: Vec<Vec<usize>>,
    logical_x: PauliBitString,
    logical_z: PauliBitString,
    qubit_face_neighbors: Vec<Vec<usize>>,
    qubit_vertex_neighbors: Vec<Vec<usize>>,
    qubit_coords: Vec<(usize, usize)>,
    face_coords: Vec<(usize, usize)>,
    vertex_coords: Vec<(usize, usize)>,
}

/// Construct the distance-`d` planar surface code. `d` must be odd, >= 3.
pub fn build_surface_code(d: usize) -> Result<SurfaceCode> {
    if d < 3 || d % 2 == 0 {
        return Err(Error::InvalidDistance(d));
    }
    let span = 2 * d - 1;
    let n_qubits = d * d + (d - 1) * (d - 1);

    // even sub-lattice first, then odd, both row-major
    let mut qubit_coords = Vec::with_capacity(n_qubits);
    for i in (0..span).step_by(2) {
        for j in (0..span).step_by(2) {
            qubit_coords.push((i, j));
        }
    }
    for i in (1..span).step_by(2) {
        for j in (1..span).step_by(2) {
            qubit_coords.push((i, j));
        }
    }
    let qubit_at = |i: usize, j: usize| -> usize {
        if i % 2 == 0 {
            (i / 2) * d + j / 2
        } else {
            d * d + (i / 2) * (d - 1) + j / 2
        }
    };

    let neighbors = |i: usize, j: usize| -> Vec<usize> {
        let mut out = Vec::with_capacity(4);
        if i > 0 {
            out.push(qubit_at(i - 1, j));
        }
        if i + 1 < span {
            out.push(qubit_at(i + 1, j));
        }
        if j > 0 {
            out.push(qubit_at(i, j - 1));
        }
        if j + 1 < span {
            out.push(qubit_at(i, j + 1));
        }
        out
    };

    let mut faces = Vec::with_capacity(d * (d - 1));
    let mut face_coords = Vec::with_capacity(d * (d - 1));
    for i in (1..span).step_by(2) {
        for j in (0..span).step_by(2) {
            faces.push(neighbors(i, j));
            face_coords.push((i, j));
        }
    }

    let mut vertices = Vec::with_capacity(d * (d - 1));
    let mut vertex_coords = Vec::with_capacity(d * (d - 1));
    for i in (0..span).step_by(2) {
        for j in (1..span).step_by(2) {
            vertices.push(neighbors(i, j));
            vertex_coords.push((i, j));
        }
    }

    let mut qubit_face_neighbors = vec![Vec::new(); n_qubits];
    for (f, support) in faces.iter().enumerate() {
        for &q in support {
            qubit_face_neighbors[q].push(f);
        }
    }
    let mut qubit_vertex_neighbors = vec![Vec::new(); n_qubits];
    for (v, support) in vertices.iter().enumerate() {
        for &q in support {
            qubit_vertex_neighbors[q].push(v);
        }
    }

    // L_Z: Z along the top row; L_X: X down the left column
    let lz_support: Vec<usize> = (0..span).step_by(2).map(|j| qubit_at(0, j)).collect();
    let lx_support: Vec<usize> = (0..span).step_by(2).map(|i| qubit_at(i, 0)).collect();
    let logical_z = PauliBitString::from_bits(
        BitString::zeros(n_qubits),
        BitString::from_indices(n_qubits, &lz_support),
    );
    let logical_x = PauliBitString::from_bits(
        BitString::from_indices(n_qubits, &lx_support),
        BitString::zeros(n_qubits),
    );

    Ok(SurfaceCode {
        d,
        n_qubits,
        faces,
        vertices,
        logical_x,
        logical_z,
        qubit_face_neighbors,
        qubit_vertex_neighbors,
        qubit_coords,
        face_coords,
        vertex_coords,
    })
}

impl SurfaceCode {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Z-stabilizer supports (qubit index sets), one per face.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// X-stabilizer supports, one per vertex.
    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn logical_x(&self) -> &PauliBitString {
        &self.logical_x
    }

    pub fn logical_z(&self) -> &PauliBitString {
        &self.logical_z
    }

    /// Incident faces of qubit `k` (1 or 2).
    pub fn qubit_face_neighbors(&self, k: usize) -> &[usize] {
        &self.qubit_face_neighbors[k]
    }

    /// Incident vertices of qubit `k` (1 or 2).
    pub fn qubit_vertex_neighbors(&self, k: usize) -> &[usize] {
        &self.qubit_vertex_neighbors[k]
    }

    pub fn qubit_coords(&self, k: usize) -> (usize, usize) {
        self.qubit_coords[k]
    }

    pub fn face_coords(&self, f: usize) -> (usize, usize) {
        self.face_coords[f]
    }

    pub fn vertex_coords(&self, v: usize) -> (usize, usize) {
        self.vertex_coords[v]
    }

    /// Qubit index at grid cell `(i, j)`; requires `i + j` even.
    pub fn qubit_at(&self, i: usize, j: usize) -> usize {
        debug_assert_eq!((i + j) % 2, 0);
        if i % 2 == 0 {
            (i / 2) * self.d + j / 2
        } else {
            self.d * self.d + (i / 2) * (self.d - 1) + j / 2
        }
    }

    /// Face index at grid cell `(i, j)`; requires `i` odd, `j` even.
    pub fn face_at(&self, i: usize, j: usize) -> usize {
        debug_assert!(i % 2 == 1 && j % 2 == 0);
        (i / 2) * self.d + j / 2
    }

    /// Vertex index at grid cell `(i, j)`; requires `i` even, `j` odd.
    pub fn vertex_at(&self, i: usize, j: usize) -> usize {
        debug_assert!(i % 2 == 0 && j % 2 == 1);
        (i / 2) * (self.d - 1) + j / 2
    }

    /// X-type stabilizer generator `B_v` as a Pauli.
    pub fn vertex_stabilizer(&self, v: usize) -> PauliBitString {
        PauliBitString::from_bits(
            BitString::from_indices(self.n_qubits, &self.vertices[v]),
            BitString::zeros(self.n_qubits),
        )
    }

    /// Z-type stabilizer generator `A_f` as a Pauli.
    pub fn face_stabilizer(&self, f: usize) -> PauliBitString {
        PauliBitString::from_bits(
            BitString::zeros(self.n_qubits),
            BitString::from_indices(self.n_qubits, &self.faces[f]),
        )
    }
}

/// Classify a syndrome-free Pauli into one of the four logical classes.
///
/// `cx = <P, L_Z>_sp`, `cz = <P, L_X>_sp`. Errors if `P` has a
/// nontrivial syndrome.
pub fn logical_class(code: &SurfaceCode, p: &PauliBitString) -> Result<ClassLabel> {
    let s = crate::syndrome::measure_syndrome(code, p)?;
    if !s.is_trivial() {
        return Err(Error::NontrivialSyndrome);
    }
    Ok(ClassLabel {
        cx: p.symplectic_product(code.logical_z())? == 1,
        cz: p.symplectic_product(code.logical_x())? == 1,
    })
}
