//! Phase-free Pauli operators in the binary symplectic representation.
//!
//! A Pauli on `n` qubits is a pair of length-`n` bit vectors: `x_bits[k]`
//! set means qubit `k` carries an X component, `z_bits[k]` a Z component,
//! both set means Y. Global phases are dropped; decoding never needs them.

use crate::{Error, Result};

/// Fixed-length bit vector backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitString) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Number of set bits.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of positions set in `self` or `other`.
    pub fn or_weight(&self, other: &BitString) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Parity of the overlap `|self AND other| mod 2`.
    pub fn parity_and(&self, other: &BitString) -> bool {
        let acc: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        acc % 2 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn from_indices(len: usize, idx: &[usize]) -> Self {
        let mut b = BitString::zeros(len);
        for &i in idx {
            b.set(i, true);
        }
        b
    }
}

impl std::fmt::Debug for BitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// An n-qubit Pauli operator, phases omitted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliBitString {
    x_bits: BitString,
    z_bits: BitString,
}

impl PauliBitString {
    pub fn identity(n_qubits: usize) -> Self {
        PauliBitString {
            x_bits: BitString::zeros(n_qubits),
            z_bits: BitString::zeros(n_qubits),
        }
    }

    pub fn from_bits(x_bits: BitString, z_bits: BitString) -> Self {
        assert_eq!(x_bits.len(), z_bits.len());
        PauliBitString { x_bits, z_bits }
    }

    pub fn single_x(n_qubits: usize, k: usize) -> Self {
        let mut p = Self::identity(n_qubits);
        p.x_bits.set(k, true);
        p
    }

    pub fn single_z(n_qubits: usize, k: usize) -> Self {
        let mut p = Self::identity(n_qubits);
        p.z_bits.set(k, true);
        p
    }

    pub fn single_y(n_qubits: usize, k: usize) -> Self {
        let mut p = Self::identity(n_qubits);
        p.x_bits.set(k, true);
        p.z_bits.set(k, true);
        p
    }

    pub fn n_qubits(&self) -> usize {
        self.x_bits.len()
    }

    pub fn x_bits(&self) -> &BitString {
        &self.x_bits
    }

    pub fn z_bits(&self) -> &BitString {
        &self.z_bits
    }

    pub fn x_bits_mut(&mut self) -> &mut BitString {
        &mut self.x_bits
    }

    pub fn z_bits_mut(&mut self) -> &mut BitString {
        &mut self.z_bits
    }

    pub fn has_x(&self, k: usize) -> bool {
        self.x_bits.get(k)
    }

    pub fn has_z(&self, k: usize) -> bool {
        self.z_bits.get(k)
    }

    /// Number of qubits acted on non-trivially; Y counts once.
    pub fn weight(&self) -> usize {
        self.x_bits.or_weight(&self.z_bits)
    }

    pub fn is_identity(&self) -> bool {
        self.x_bits.is_zero() && self.z_bits.is_zero()
    }

    fn check_len(&self, other: &PauliBitString) -> Result<()> {
        if self.n_qubits() != other.n_qubits() {
            return Err(Error::SizeMismatch {
                expected: self.n_qubits(),
                got: other.n_qubits(),
            });
        }
        Ok(())
    }

    /// Product of two Paulis up to phase: bitwise XOR of both components.
    /// `compose(P, P)` is the identity.
    pub fn compose(&self, other: &PauliBitString) -> Result<PauliBitString> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.x_bits.xor_assign(&other.x_bits);
        out.z_bits.xor_assign(&other.z_bits);
        Ok(out)
    }

    pub fn compose_assign(&mut self, other: &PauliBitString) {
        assert_eq!(self.n_qubits(), other.n_qubits());
        self.x_bits.xor_assign(&other.x_bits);
        self.z_bits.xor_assign(&other.z_bits);
    }

    /// Symplectic product `<P.x, Q.z> + <P.z, Q.x> mod 2`.
    /// Returns 1 iff the operators anticommute.
    pub fn symplectic_product(&self, other: &PauliBitString) -> Result<u8> {
        self.check_len(other)?;
        let a = self.x_bits.parity_and(&other.z_bits);
        let b = self.z_bits.parity_and(&other.x_bits);
        Ok((a ^ b) as u8)
    }

    /// Single-qubit Pauli at position `k` as a character.
    pub fn pauli_at(&self, k: usize) -> char {
        match (self.x_bits.get(k), self.z_bits.get(k)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }
}

impl std::fmt::Debug for PauliBitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for k in 0..self.n_qubits() {
            write!(f, "{}", self.pauli_at(k))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_identity_is_noop() {
        let p = PauliBitString::single_x(5, 2);
        let id = PauliBitString::identity(5);
        assert_eq!(id.compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_x_z_gives_y() {
        let x0 = PauliBitString::single_x(3, 0);
        let z0 = PauliBitString::single_z(3, 0);
        let y0 = x0.compose(&z0).unwrap();
        assert_eq!(y0, PauliBitString::single_y(3, 0));
        assert_eq!(y0.weight(), 1);
    }

    #[test]
    fn compose_is_involution() {
        let x0 = PauliBitString::single_x(3, 0);
        assert!(x0.compose(&x0).unwrap().is_identity());
    }

    #[test]
    fn symplectic_anticommuting_pair() {
        let x0 = PauliBitString::single_x(2, 0);
        let z0 = PauliBitString::single_z(2, 0);
        let z1 = PauliBitString::single_z(2, 1);
        assert_eq!(x0.symplectic_product(&z0).unwrap(), 1);
        assert_eq!(x0.symplectic_product(&z1).unwrap(), 0);
    }

    #[test]
    fn length_mismatch_rejected() {
        let p = PauliBitString::identity(3);
        let q = PauliBitString::identity(4);
        assert!(p.compose(&q).is_err());
        assert!(p.symplectic_product(&q).is_err());
    }

    #[test]
    fn weight_counts_y_once() {
        let mut p = PauliBitString::identity(4);
        p.x_bits_mut().set(0, true);
        p.z_bits_mut().set(0, true);
        p.z_bits_mut().set(2, true);
        assert_eq!(p.weight(), 2);
    }
}
