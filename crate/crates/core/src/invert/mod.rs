//! Itoh-Tsujii inverter netlists and the closed-form resource bounds they
//! are checked against.
//!
//! Layout: `input`, then `ladder_1..`, then `combine_1..`, with the last
//! written register renamed `output`. The forward pass computes every
//! `b_k` into a fresh register, reading Frobenius powers through wire
//! permutations; the last multiplier writes `b_{m-1}` squared, which is the
//! inverse. Every multiplier but the last is then run backwards.

mod bounds;

pub use bounds::{
    bounds_for, bounds_ghost, bounds_gnb, bounds_t, check_bounds, BoundCheck, BoundReport, ResourceBound,
};

use std::fmt::{self, Write as _};
use std::ops::Range;

use crate::circuit::{Circuit, Gate, Wire};
use crate::error::{Error, Result};
use crate::field::{addition_chain, FieldSpec, InverterPlan};
use crate::synth::{ghost, gnb, Emitter, WirePermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// `b * b^(2^r)` from one register.
    SelfPower { r: usize },
    /// `b * c^(2^s)` from two registers.
    General { frobenius: usize },
    /// CNOT swap of input and output.
    Swap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Uncompute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub direction: Direction,
    /// Register the block writes.
    pub target: String,
    pub gates: Range<usize>,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::Forward => "forward",
            Direction::Uncompute => "uncompute",
        };
        let kind = match self.kind {
            BlockKind::SelfPower { r } => format!("selfmult r={r}"),
            BlockKind::General { frobenius } => format!("mult s={frobenius}"),
            BlockKind::Swap => "swap".to_string(),
        };
        write!(
            f,
            "block {dir} {kind} target={} gates={}..{}",
            self.target, self.gates.start, self.gates.end
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inverter {
    pub circuit: Circuit,
    pub plan: InverterPlan,
    pub blocks: Vec<Block>,
}

impl Inverter {
    pub fn forward_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.direction == Direction::Forward)
    }

    /// Netlist with a `# block ...` comment before each block's gates.
    pub fn to_netlist(&self) -> String {
        let mut out = String::new();
        self.circuit.write_header(&mut out).expect("writing to a String");
        let gates = self.circuit.gates();
        let mut next = 0;
        for block in &self.blocks {
            for g in &gates[next..block.gates.start] {
                writeln!(out, "{g}").expect("writing to a String");
            }
            writeln!(out, "# {block}").expect("writing to a String");
            for g in &gates[block.gates.clone()] {
                writeln!(out, "{g}").expect("writing to a String");
            }
            next = block.gates.end;
        }
        for g in &gates[next..] {
            writeln!(out, "{g}").expect("writing to a String");
        }
        out
    }

    /// Appends three CNOT layers swapping `input` and `output`, giving
    /// `|a>|0..>  -> |a^-1>|0..>|a>`. Not counted by the bounds.
    pub fn swap_into_input(mut self) -> Self {
        let input = self.circuit.register("input").expect("inverter layout").clone();
        let output = self.circuit.register("output").expect("inverter layout").clone();
        let start = self.circuit.len();
        let pairs: Vec<(Wire, Wire)> = (0..input.len).map(|i| (input.wire(i), output.wire(i))).collect();
        for (x, y) in [(0, 1), (1, 0), (0, 1)] {
            for p in &pairs {
                let w = [p.0, p.1];
                self.circuit.push(Gate::cnot(w[x], w[y])).expect("wires in range");
            }
        }
        self.blocks.push(Block {
            kind: BlockKind::Swap,
            direction: Direction::Forward,
            target: "input".into(),
            gates: start..self.circuit.len(),
        });
        self
    }
}

/// Register names in layout order.
fn register_names(plan: &InverterPlan) -> Vec<String> {
    let mut names = vec!["input".to_string()];
    names.extend((1..=plan.ladder_steps.len()).map(|j| format!("ladder_{j}")));
    names.extend((1..=plan.combine_steps.len()).map(|j| format!("combine_{j}")));
    let out = plan.output_register();
    names[out] = "output".into();
    names
}

/// Out-of-place inverter `|a>|0..> -> |a>|a^-1>|0..>` (zero maps to zero).
pub fn synth_inverter(spec: &FieldSpec) -> Result<Inverter> {
    let m = spec.degree();
    if m < 3 {
        return Err(Error::DegreeTooSmall(m));
    }
    let plan = addition_chain(m)?;
    let w = spec.width();
    let names = register_names(&plan);
    let mut circuit = Circuit::new(names.len() * w);
    for (idx, name) in names.iter().enumerate() {
        circuit.add_register(name.as_str(), idx * w, w)?;
    }
    let regs: Vec<_> = names
        .iter()
        .map(|n| circuit.register(n).expect("just added").clone())
        .collect();
    let identity = WirePermutation::identity(w);
    let squared = WirePermutation::frobenius_write(spec, 1);
    let final_target = plan.output_register();
    let out_wires = |target: usize| {
        if target == final_target {
            squared.wires(&regs[target])
        } else {
            identity.wires(&regs[target])
        }
    };

    let mut blocks = Vec::new();
    for step in &plan.ladder_steps {
        let start = circuit.len();
        let a = identity.wires(&regs[step.source]);
        let out = out_wires(step.target);
        let mut em = Emitter::new(&mut circuit, None);
        match spec {
            FieldSpec::GhostBit(_) => ghost::emit_self_mult(&mut em, step.power, &a, &out)?,
            FieldSpec::Gnb(p) => gnb::emit_self_mult(&mut em, p, step.power, &a, &out)?,
        }
        blocks.push(Block {
            kind: BlockKind::SelfPower { r: step.power },
            direction: Direction::Forward,
            target: names[step.target].clone(),
            gates: start..circuit.len(),
        });
    }
    for step in &plan.combine_steps {
        let start = circuit.len();
        let a = identity.wires(&regs[step.accumulator]);
        let b = WirePermutation::frobenius_read(spec, step.operand_frobenius).wires(&regs[step.operand]);
        let out = out_wires(step.target);
        let mut em = Emitter::new(&mut circuit, None);
        match spec {
            FieldSpec::GhostBit(_) => ghost::emit_mult(&mut em, &a, &b, &out)?,
            FieldSpec::Gnb(p) => gnb::emit_mult(&mut em, p, &a, &b, &out)?,
        }
        blocks.push(Block {
            kind: BlockKind::General {
                frobenius: step.operand_frobenius,
            },
            direction: Direction::Forward,
            target: names[step.target].clone(),
            gates: start..circuit.len(),
        });
    }

    let forward = blocks.len();
    for idx in (0..forward - 1).rev() {
        let block = blocks[idx].clone();
        let start = circuit.len();
        let reversed: Vec<Gate> = circuit.gates()[block.gates.clone()].iter().rev().copied().collect();
        circuit.extend(reversed)?;
        blocks.push(Block {
            direction: Direction::Uncompute,
            gates: start..circuit.len(),
            ..block
        });
    }

    Ok(Inverter { circuit, plan, blocks })
}
