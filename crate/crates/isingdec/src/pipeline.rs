//! End-to-end decoding of a single syndrome by any method, with the
//! uniform success criterion used by the experiment harness.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::code::{logical_class, ClassLabel, SurfaceCode};
use crate::hamiltonian::{
    build_constrained_z, build_unconstrained_depolarizing, build_unconstrained_single, ErrorType,
    PolyIsingModel,
};
use crate::mwpm::mwpm_decode;
use crate::noise::NoiseKind;
use crate::oracle::{exact_decode, exact_decode_single};
use crate::pauli::PauliBitString;
use crate::solver::{
    parallel_tempering_poly, simulated_anneal_poly, AnnealSchedule, InitState, PtParams,
    SolveOutcome,
};
use crate::syndrome::{measure_syndrome, pure_error, Syndrome};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SaUnconstrained,
    PtUnconstrained,
    SaConstrained,
    PtConstrained,
    Exact,
    Mwpm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::SaUnconstrained => "sa_unconstrained",
            Method::PtUnconstrained => "pt_unconstrained",
            Method::SaConstrained => "sa_constrained",
            Method::PtConstrained => "pt_constrained",
            Method::Exact => "exact",
            Method::Mwpm => "mwpm",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        Some(match s {
            "sa_unconstrained" => Method::SaUnconstrained,
            "pt_unconstrained" => Method::PtUnconstrained,
            "sa_constrained" => Method::SaConstrained,
            "pt_constrained" => Method::PtConstrained,
            "exact" => Method::Exact,
            "mwpm" => Method::Mwpm,
            _ => return None,
        })
    }

    pub fn is_constrained(self) -> bool {
        matches!(self, Method::SaConstrained | Method::PtConstrained)
    }
}

/// Parameters for the energy-based methods. `j` scales every coupling of
/// the unconstrained models; `alpha` is the degree-reduction penalty, in
/// units of the coupling scale. The ratio matters: a penalty below ~8x the
/// coupling lets the quadratized ground state break an auxiliary binding,
/// while a much larger one freezes auxiliary-coupled moves early in the
/// anneal and wrecks mobility. Constrained models carry their own `(J, h)`
/// pair and penalty ratio. Solver settings default to the standard
/// schedule / a 128-replica geometric ladder when absent.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct DecodeParams {
    pub j: f64,
    pub alpha: f64,
    pub constrained_j: f64,
    pub constrained_h: f64,
    pub constrained_alpha: f64,
    pub anneal: Option<AnnealSchedule>,
    pub pt: Option<PtParams>,
}

impl Default for DecodeParams {
    fn default() -> Self {
        DecodeParams {
            j: 30.0,
            alpha: 10.0,
            constrained_j: 20.0,
            constrained_h: 20.0,
            constrained_alpha: 10.0,
            anneal: None,
            pt: None,
        }
    }
}

impl DecodeParams {
    fn schedule_for(&self, code: &SurfaceCode, n_vars: usize, init: InitState) -> AnnealSchedule {
        let mut s = self
            .anneal
            .clone()
            .unwrap_or_else(|| AnnealSchedule::table_default(code.n_qubits(), n_vars));
        if self.anneal.is_none() {
            s.init = init;
        }
        s
    }

    /// Default replica ladder, with the temperatures expressed in units
    /// of the coupling scale of the model being solved.
    fn pt_for(&self, scale: f64, init: InitState) -> PtParams {
        let mut p = self
            .pt
            .clone()
            .unwrap_or_else(|| PtParams::geometric(128, 5.0 * scale, 5.0 / scale, 2000));
        if self.pt.is_none() {
            p.init = init;
        }
        p
    }
}

#[derive(Clone, Debug)]
pub struct DecodeResult {
    pub method: Method,
    pub chosen_class: ClassLabel,
    pub class_energies: Vec<(ClassLabel, f64)>,
    pub iteration_of_best: u64,
    pub wall_time: std::time::Duration,
    pub constraint_unsatisfied: bool,
    /// Recovered error pattern, where the method produces one.
    pub correction: Option<PauliBitString>,
}

fn scaled(model: &PolyIsingModel, j: f64) -> PolyIsingModel {
    let mut m = model.clone();
    for (c, _) in &mut m.terms {
        *c *= j;
    }
    m.offset *= j;
    m
}

fn class_seed(seed: u64, class_idx: usize) -> u64 {
    seed ^ (class_idx as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn solve(
    method: Method,
    params: &DecodeParams,
    code: &SurfaceCode,
    model: &PolyIsingModel,
    scale: f64,
    init: InitState,
    seed: u64,
) -> Result<(Vec<bool>, f64, SolveOutcome)> {
    // anneal the cubic/quartic model directly: single-flip dynamics on the
    // quadratized form stall against the reduction penalties, because every
    // spin move then needs a coordinated auxiliary update through an
    // O(alpha) barrier (the exported QUBO form is still available through
    // `reduce_to_qubo` for external annealers)
    let outcome = match method {
        Method::SaUnconstrained | Method::SaConstrained => {
            let sched = params.schedule_for(code, model.n_spins, init);
            simulated_anneal_poly(model, &sched, seed)?
        }
        Method::PtUnconstrained | Method::PtConstrained => {
            let pt = params.pt_for(scale, init);
            parallel_tempering_poly(model, &pt, seed)?
        }
        _ => unreachable!("energy method expected"),
    };
    let flips = outcome.best_assignment.clone();
    let energy = outcome.best_energy;
    Ok((flips, energy, outcome))
}

/// Decode one syndrome. Energy methods build one model per candidate
/// class (four under depolarizing noise, two under single-Pauli noise),
/// solve each with the same budget and distinct seed substreams, and pick
/// the argmin; ties fall to the earlier class in the fixed order I, L_X,
/// L_Z, L_X L_Z. The constrained methods solve a single model over error
/// spins and read the class off the recovered pattern, flagging the
/// result when that pattern fails to reproduce the syndrome.
pub fn decode(
    code: &SurfaceCode,
    s: &Syndrome,
    noise: NoiseKind,
    method: Method,
    params: &DecodeParams,
    seed: u64,
) -> Result<DecodeResult> {
    let start = Instant::now();
    let sector = match noise {
        NoiseKind::Depolarizing => None,
        NoiseKind::BitFlip => Some(ErrorType::X),
        NoiseKind::PhaseFlip => Some(ErrorType::Z),
    };

    match method {
        Method::Exact => {
            let label = match sector {
                None => exact_decode(code, s)?,
                Some(t) => exact_decode_single(code, s, t)?,
            };
            Ok(DecodeResult {
                method,
                chosen_class: label,
                class_energies: vec![],
                iteration_of_best: 0,
                wall_time: start.elapsed(),
                constraint_unsatisfied: false,
                correction: None,
            })
        }
        Method::Mwpm => {
            let (label, correction) = mwpm_decode(code, s)?;
            Ok(DecodeResult {
                method,
                chosen_class: label,
                class_energies: vec![],
                iteration_of_best: 0,
                wall_time: start.elapsed(),
                constraint_unsatisfied: false,
                correction: Some(correction),
            })
        }
        Method::SaConstrained | Method::PtConstrained => {
            if sector != Some(ErrorType::Z) {
                return Err(Error::InvalidParams(
                    "constrained methods support phase-flip noise only".into(),
                ));
            }
            let model = build_constrained_z(code, s, params.constrained_j, params.constrained_h)?;
            let (flips, energy, outcome) = solve(
                method,
                params,
                code,
                &model,
                params.constrained_j,
                InitState::Zeros,
                seed,
            )?;
            let e = crate::hamiltonian::reconstruct_constrained_z(code, &flips);
            let satisfied = &measure_syndrome(code, &e)? == s;
            let chosen_class = if satisfied {
                logical_class(code, &e.compose(&pure_error(code, s))?)?
            } else {
                ClassLabel::I
            };
            Ok(DecodeResult {
                method,
                chosen_class,
                class_energies: vec![(chosen_class, energy)],
                iteration_of_best: outcome.iteration_of_best,
                wall_time: start.elapsed(),
                constraint_unsatisfied: !satisfied,
                correction: satisfied.then_some(e),
            })
        }
        Method::SaUnconstrained | Method::PtUnconstrained => {
            let classes: &[ClassLabel] = match sector {
                None => &ClassLabel::ALL,
                Some(ErrorType::X) => &[ClassLabel::I, ClassLabel::X],
                Some(ErrorType::Z) => &[ClassLabel::I, ClassLabel::Z],
            };
            let mut class_energies = Vec::with_capacity(classes.len());
            let mut best: Option<(f64, ClassLabel, Vec<bool>, u64)> = None;
            for (idx, &label) in classes.iter().enumerate() {
                let model = match sector {
                    None => build_unconstrained_depolarizing(code, s, label)?,
                    Some(t) => build_unconstrained_single(code, s, label, t)?,
                };
                let model = scaled(&model, params.j);
                let (flips, energy, outcome) = solve(
                    method,
                    params,
                    code,
                    &model,
                    params.j,
                    InitState::Random,
                    class_seed(seed, idx),
                )?;
                class_energies.push((label, energy));
                if best.as_ref().is_none_or(|(be, ..)| energy < *be) {
                    best = Some((energy, label, flips, outcome.iteration_of_best));
                }
            }
            let (_, chosen_class, flips, iteration_of_best) = best.unwrap();
            let correction = match sector {
                None => crate::hamiltonian::reconstruct_depolarizing(code, s, chosen_class, &flips)?,
                Some(t) => {
                    crate::hamiltonian::reconstruct_single(code, s, chosen_class, t, &flips)?
                }
            };
            debug_assert_eq!(&measure_syndrome(code, &correction)?, s);
            Ok(DecodeResult {
                method,
                chosen_class,
                class_energies,
                iteration_of_best,
                wall_time: start.elapsed(),
                constraint_unsatisfied: false,
                correction: Some(correction),
            })
        }
    }
}

/// Success test shared by every method: the recovery class must match the
/// class of the true error relative to the same pure error. A flagged
/// constrained result always counts as failure.
pub fn judge(
    code: &SurfaceCode,
    e_true: &PauliBitString,
    s: &Syndrome,
    r: &DecodeResult,
) -> Result<bool> {
    if &measure_syndrome(code, e_true)? != s {
        return Err(Error::SyndromeMismatch);
    }
    if r.constraint_unsatisfied {
        return Ok(false);
    }
    let truth = logical_class(code, &e_true.compose(&pure_error(code, s))?)?;
    Ok(r.chosen_class == truth)
}
