//! Scheduled adder and multiplier netlists.
//!
//! Multipliers come in two shapes: general (`|a>|b>|x> -> |a>|b>|x + ab>`)
//! and self-power (`|a>|x> -> |a>|x + a a^(2^r)>`), where the Frobenius
//! image is read through a wire permutation rather than a second register.

mod adder;
mod cancel;
mod coloring;
pub(crate) mod ghost;
pub(crate) mod gnb;
mod permutation;

pub use adder::synth_add;
pub use cancel::cancel_pairs;
pub use coloring::{color_circulant_edges, ColoringSchedule, Stage, StageLabel};
pub(crate) use coloring::Emitter;

pub use ghost::{synth_gbb_mult, synth_gbb_self_mult};
pub use gnb::{gnb_self_mult_deltas, synth_gnb_mult, synth_gnb_self_mult};
pub use permutation::WirePermutation;

use crate::circuit::Circuit;
use crate::error::Result;
use crate::field::FieldSpec;

/// A netlist together with the layering its synthesizer intended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScheduledCircuit {
    pub circuit: Circuit,
    pub schedule: ColoringSchedule,
}

pub fn synth_mult(spec: &FieldSpec) -> Result<ScheduledCircuit> {
    match spec {
        FieldSpec::GhostBit(f) => synth_gbb_mult(f.degree()),
        FieldSpec::Gnb(p) => synth_gnb_mult(p),
    }
}

pub fn synth_self_mult(spec: &FieldSpec, r: usize) -> Result<ScheduledCircuit> {
    match spec {
        FieldSpec::GhostBit(f) => synth_gbb_self_mult(f.degree(), r),
        FieldSpec::Gnb(p) => synth_gnb_self_mult(p, r),
    }
}
