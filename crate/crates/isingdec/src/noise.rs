//! Reproducible i.i.d. single-qubit Pauli noise.
//!
//! Each shot draws from a counter-based substream: the RNG is keyed by
//! `seed` and the ChaCha stream is set to `sample_index`, so parallel
//! Monte Carlo sampling is order-independent.

use crate::code::SurfaceCode;
use crate::pauli::PauliBitString;
use crate::{Error, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    Depolarizing,
    PhaseFlip,
    BitFlip,
}

impl NoiseKind {
    pub fn name(self) -> &'static str {
        match self {
            NoiseKind::Depolarizing => "depolarizing",
            NoiseKind::PhaseFlip => "phase_flip",
            NoiseKind::BitFlip => "bit_flip",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub p: f64,
    pub seed: u64,
    pub sample_index: u64,
}

impl NoiseSpec {
    pub fn new(kind: NoiseKind, p: f64, seed: u64) -> Self {
        NoiseSpec { kind, p, seed, sample_index: 0 }
    }

    pub fn at(mut self, sample_index: u64) -> Self {
        self.sample_index = sample_index;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParams(format!(
                "error probability {} outside [0, 1]",
                self.p
            )));
        }
        Ok(())
    }
}

/// Sample one error. Deterministic in `(seed, sample_index)`.
///
/// Depolarizing: each qubit gets X, Y, or Z with probability `p/3` each.
/// Phase flip: Z with probability `p`; bit flip: X with probability `p`.
pub fn sample_error(code: &SurfaceCode, spec: &NoiseSpec) -> Result<PauliBitString> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(spec.sample_index);
    let mut e = PauliBitString::identity(code.n_qubits());
    for k in 0..code.n_qubits() {
        let r: f64 = rng.gen();
        if r >= spec.p {
            continue;
        }
        match spec.kind {
            NoiseKind::PhaseFlip => e.z_bits_mut().set(k, true),
            NoiseKind::BitFlip => e.x_bits_mut().set(k, true),
            NoiseKind::Depolarizing => match rng.gen_range(0..3u8) {
                0 => e.x_bits_mut().set(k, true),
                1 => e.z_bits_mut().set(k, true),
                _ => {
                    e.x_bits_mut().set(k, true);
                    e.z_bits_mut().set(k, true);
                }
            },
        }
    }
    Ok(e)
}
