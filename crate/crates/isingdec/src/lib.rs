//! Surface-code decoding by Ising-model optimization.
//!
//! The decoding problem is mapped onto Ising/QUBO energy minimization in
//! two formulations: a soft-constrained model with one spin per qubit, and
//! an unconstrained model with one spin per stabilizer generator in which
//! the syndrome condition holds by construction. Both are minimized with
//! simulated annealing or replica-exchange (parallel-tempering) solvers and
//! benchmarked against an exhaustive minimum-weight oracle and a
//! minimum-weight-perfect-matching baseline.
//!
//! See the `examples/` directory for runnable entry points covering each
//! capability; the `isingdec` binary wraps the same operations as
//! subcommands.

pub mod code;
pub mod hamiltonian;
pub mod harness;
pub mod mwpm;
pub mod noise;
pub mod oracle;
pub mod pauli;
pub mod pipeline;
pub mod plot;
pub mod solver;
pub mod stats;
pub mod syndrome;

pub use code::{build_surface_code, logical_class, ClassLabel, SurfaceCode};
pub use noise::{sample_error, NoiseKind, NoiseSpec};
pub use pauli::{BitString, PauliBitString};
pub use syndrome::{measure_syndrome, pure_error, Syndrome};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("bit vector length mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("code distance must be odd and >= 3, got {0}")]
    InvalidDistance(usize),
    #[error("operator has a nontrivial syndrome")]
    NontrivialSyndrome,
    #[error("syndrome does not match the claimed error")]
    SyndromeMismatch,
    #[error("{0} variables exceed the enumeration bound of {1}")]
    TooManyVariables(usize, usize),
    #[error("{0} defects exceed the matching bound of {1}")]
    TooManyDefects(usize, usize),
    #[error("polynomial term of degree {0} exceeds the supported degree 4")]
    DegreeTooHigh(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
