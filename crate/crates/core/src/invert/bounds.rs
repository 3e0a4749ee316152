//! Closed-form resource bounds for the inverter, evaluated exactly as
//! stated, with `L = floor(log2(m - 1))`, `H = HW(m - 1)` and, for normal
//! bases, `T = t + (t mod 2)`.

use std::fmt;

use super::synth_inverter;
use crate::arith::{floor_log2, hamming_weight};
use crate::circuit::ResourceEstimate;
use crate::error::{Error, Result};
use crate::field::{check_ghost_bit_support, gnb_type_valid, FieldSpec, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceBound {
    pub depth: u64,
    /// For normal bases this is the combined gate bound, since gates may be
    /// CNOT or Toffoli.
    pub toffoli: u64,
    /// Only stated separately for ghost-bit.
    pub cnot: Option<u64>,
    pub gates: u64,
    pub qubits: u64,
    pub t_depth: u64,
    pub t_count: u64,
}

fn chain_shape(m: usize) -> Result<(u64, u64)> {
    if m < 3 {
        return Err(Error::DegreeTooSmall(m));
    }
    let e = (m - 1) as u64;
    Ok((floor_log2(e) as u64, hamming_weight(e) as u64))
}

pub fn bounds_ghost(m: usize) -> Result<ResourceBound> {
    if !check_ghost_bit_support(m) {
        return Err(Error::UnsupportedDegree(m));
    }
    let (l, h) = chain_shape(m)?;
    let m = m as u64;
    let toffoli = 2 * l * (m * m + m) + 2 * (h - 1) * (m * m + 2 * m + 1);
    let cnot = 2 * l * (m + 1);
    let (t_depth, t_count) = bounds_t(m as usize, Representation::GhostBit, None)?;
    Ok(ResourceBound {
        depth: 2 * l * (2 * m + 2) + 2 * (h - 1) * (m + 1),
        toffoli,
        cnot: Some(cnot),
        gates: toffoli + cnot,
        qubits: (1 + l) * (m + 1) + (h - 1) * (m + 1),
        t_depth,
        t_count,
    })
}

pub fn bounds_gnb(m: usize, t: usize) -> Result<ResourceBound> {
    if !gnb_type_valid(m, t) {
        return Err(Error::InvalidParams(format!(
            "no type {t} Gaussian normal basis for m = {m}"
        )));
    }
    let (l, h) = chain_shape(m)?;
    let (m64, tt) = (m as u64, (t + t % 2) as u64);
    let gates = 2 * l * (tt * m64 * m64 - m64) + 2 * (h - 1) * (tt * m64 * m64 - m64);
    let (t_depth, t_count) = bounds_t(m, Representation::Gnb, Some(t))?;
    Ok(ResourceBound {
        depth: l * (6 * tt * m64 - 6) + 2 * (h - 1) * (tt * m64 - 1),
        toffoli: gates,
        cnot: None,
        gates,
        qubits: (1 + l) * m64 + (h - 1) * m64,
        t_depth,
        t_count,
    })
}

/// `(T-depth, T-count)` bounds. The normal-basis T-depth carries the
/// coefficient `12H - 6` as stated, although six times the depth bound
/// would give `12H - 12`.
pub fn bounds_t(m: usize, rep: Representation, t: Option<usize>) -> Result<(u64, u64)> {
    let (l, h) = chain_shape(m)?;
    let m64 = m as u64;
    match rep {
        Representation::GhostBit => {
            if !check_ghost_bit_support(m) {
                return Err(Error::UnsupportedDegree(m));
            }
            Ok((
                12 * l * (2 * m64 + 2) + 12 * (h - 1) * (m64 + 1),
                14 * l * (m64 * m64 + m64) + 14 * (h - 1) * (m64 * m64 + 2 * m64 + 1),
            ))
        }
        Representation::Gnb => {
            let t = t.ok_or_else(|| Error::InvalidParams("normal-basis bounds need a type".into()))?;
            if !gnb_type_valid(m, t) {
                return Err(Error::InvalidParams(format!(
                    "no type {t} Gaussian normal basis for m = {m}"
                )));
            }
            let tt = (t + t % 2) as u64;
            let g = tt * m64 * m64 - m64;
            Ok((
                6 * l * (6 * tt * m64 - 6) + (12 * h - 6) * (tt * m64 - 1),
                14 * l * g + 14 * (h - 1) * g,
            ))
        }
    }
}

pub fn bounds_for(spec: &FieldSpec) -> Result<ResourceBound> {
    match spec {
        FieldSpec::GhostBit(f) => bounds_ghost(f.degree()),
        FieldSpec::Gnb(p) => bounds_gnb(p.degree(), p.gnb_type()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub metric: &'static str,
    pub actual: u64,
    pub bound: u64,
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        self.actual <= self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub representation: Representation,
    pub m: usize,
    pub actual: ResourceEstimate,
    pub bound: ResourceBound,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(BoundCheck::passed)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "inverter {} m={}", self.representation, self.m)?;
        for c in &self.checks {
            writeln!(
                f,
                "  {:<8} {:>10} <= {:>10}  {}",
                c.metric,
                c.actual,
                c.bound,
                if c.passed() { "ok" } else { "EXCEEDED" }
            )?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Synthesizes the inverter for `spec` and compares measured resources
/// with the bounds.
pub fn check_bounds(spec: &FieldSpec) -> Result<BoundReport> {
    let bound = bounds_for(spec)?;
    let inverter = synth_inverter(spec)?;
    let actual = inverter.circuit.resources();
    let mut checks = vec![
        BoundCheck {
            metric: "depth",
            actual: actual.depth as u64,
            bound: bound.depth,
        },
        BoundCheck {
            metric: "toffoli",
            actual: actual.toffoli_count as u64,
            bound: bound.toffoli,
        },
    ];
    if let Some(cnot) = bound.cnot {
        checks.push(BoundCheck {
            metric: "cnot",
            actual: actual.cnot_count as u64,
            bound: cnot,
        });
    }
    checks.extend([
        BoundCheck {
            metric: "gates",
            actual: actual.gate_count() as u64,
            bound: bound.gates,
        },
        BoundCheck {
            metric: "qubits",
            actual: actual.qubits as u64,
            bound: bound.qubits,
        },
        BoundCheck {
            metric: "t_depth",
            actual: actual.t_depth as u64,
            bound: bound.t_depth,
        },
        BoundCheck {
            metric: "t_count",
            actual: actual.t_count as u64,
            bound: bound.t_count,
        },
    ]);
    Ok(BoundReport {
        representation: spec.representation(),
        m: spec.degree(),
        actual,
        bound,
        checks,
    })
}
