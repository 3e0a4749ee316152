//! Simulation-versus-oracle equivalence checks for synthesized netlists.
//!
//! Inputs are located by register name (`input_a`, `input_b`, `input`,
//! `output`), so a netlist read back from disk can be checked as long as it
//! carries its register map. Circuits are simulated 64 inputs at a time.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::Bits;
use crate::circuit::{Circuit, Register};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Largest number of cases an exhaustive run may enumerate.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;
pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_SEED: u64 = 0xB10F;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    Add,
    Mult,
    SelfMult { r: usize },
    Invert,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Add => f.write_str("add"),
            Operation::Mult => f.write_str("mult"),
            Operation::SelfMult { r } => write!(f, "selfmult r={r}"),
            Operation::Invert => f.write_str("invert"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

impl Default for Mode {
    fn default() -> Self {
        Mode::Random {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Register name and value for each input register, then `output`.
    pub inputs: Vec<(String, Bits)>,
    pub reason: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in &self.inputs {
            write!(f, "{name}={v} ")?;
        }
        f.write_str(&self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub operation: Operation,
    pub inputs_tested: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} inputs", self.inputs_tested),
            Some(c) => write!(f, "FAIL after {} inputs: {c}", self.inputs_tested),
        }
    }
}

struct Layout {
    inputs: Vec<Register>,
    output: Register,
    /// Registers that must come back all-zero.
    ancillas: Vec<Register>,
}

fn layout(circuit: &Circuit, spec: &FieldSpec, op: Operation) -> Result<Layout> {
    let find = |name: &str| {
        circuit
            .register(name)
            .cloned()
            .ok_or_else(|| Error::InvalidRegister(format!("netlist has no register {name}")))
    };
    let names: &[&str] = match op {
        Operation::Mult => &["input_a", "input_b"],
        _ => &["input"],
    };
    let inputs = names.iter().map(|n| find(n)).collect::<Result<Vec<_>>>()?;
    let output = find("output")?;
    for r in inputs.iter().chain(std::iter::once(&output)) {
        if r.len != spec.width() {
            return Err(Error::WidthMismatch {
                expected: spec.width(),
                found: r.len,
            });
        }
    }
    let ancillas = if op == Operation::Invert {
        circuit
            .registers()
            .iter()
            .filter(|r| r.name != "input" && r.name != "output")
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    Ok(Layout {
        inputs,
        output,
        ancillas,
    })
}

/// Expected output register given the inputs and the initial output value.
fn check_case(spec: &FieldSpec, op: Operation, inputs: &[Bits], xi: &Bits, got: &Bits) -> Result<Option<String>> {
    let expected = match op {
        Operation::Add => &inputs[0] ^ xi,
        Operation::Mult => &spec.mul(&inputs[0], &inputs[1])? ^ xi,
        Operation::SelfMult { r } => {
            let power = spec.frobenius(&inputs[0], r)?;
            &spec.mul(&inputs[0], &power)? ^ xi
        }
        Operation::Invert => {
            let a = &inputs[0];
            let ok = if spec.is_zero(a)? {
                spec.is_zero(got)?
            } else {
                let product = spec.mul(a, got)?;
                spec.same_element(&product, &spec.one())?
            };
            return Ok((!ok).then(|| format!("output={got} is not the inverse")));
        }
    };
    Ok((expected != *got).then(|| format!("expected output={expected} got={got}")))
}

/// Runs `circuit` on the inputs `mode` selects and compares every output
/// with the field oracle. Input registers must be preserved and, for
/// inverters, every other register must return to zero.
pub fn verify_circuit(circuit: &Circuit, spec: &FieldSpec, op: Operation, mode: Mode) -> Result<VerifyReport> {
    let layout = layout(circuit, spec, op)?;
    let w = spec.width();
    let cases = generate_cases(spec, op, mode, layout.inputs.len())?;

    let mut tested = 0u64;
    for chunk in cases.chunks(64) {
        let mut lanes = vec![0u64; circuit.width()];
        for (lane, (inputs, xi)) in chunk.iter().enumerate() {
            let regs = layout.inputs.iter().zip(inputs).chain(std::iter::once((&layout.output, xi)));
            for (reg, value) in regs {
                for i in 0..w {
                    lanes[reg.start + i] |= (value[i] as u64) << lane;
                }
            }
        }
        circuit.simulate_lanes(&mut lanes)?;
        let read = |reg: &Register, lane: usize| -> Bits {
            reg.range().map(|wire| (lanes[wire] >> lane) & 1 == 1).collect()
        };
        for (lane, (inputs, xi)) in chunk.iter().enumerate() {
            tested += 1;
            let fail = |reason: String| {
                let mut named: Vec<(String, Bits)> = layout
                    .inputs
                    .iter()
                    .zip(inputs)
                    .map(|(r, v)| (r.name.clone(), v.clone()))
                    .collect();
                named.push(("output".into(), xi.clone()));
                Ok(VerifyReport {
                    operation: op,
                    inputs_tested: tested,
                    counterexample: Some(Counterexample { inputs: named, reason }),
                })
            };
            for (reg, value) in layout.inputs.iter().zip(inputs) {
                if read(reg, lane) != *value {
                    return fail(format!("register {} was modified", reg.name));
                }
            }
            if let Some(reg) = layout.ancillas.iter().find(|r| !read(r, lane).is_zero()) {
                return fail(format!("register {} not restored to zero", reg.name));
            }
            let got = read(&layout.output, lane);
            if let Some(reason) = check_case(spec, op, inputs, xi, &got)? {
                return fail(reason);
            }
        }
    }
    Ok(VerifyReport {
        operation: op,
        inputs_tested: tested,
        counterexample: None,
    })
}

type Case = (Vec<Bits>, Bits);

fn generate_cases(spec: &FieldSpec, op: Operation, mode: Mode, n_inputs: usize) -> Result<Vec<Case>> {
    let w = spec.width();
    match mode {
        Mode::Exhaustive => {
            // Inverters are checked on the 2^m field elements. Two-operand
            // multipliers take every (a, b) with the output at zero; the
            // one-operand circuits also range over the initial output.
            let (bits_per_case, with_xi) = match op {
                Operation::Invert => (spec.degree(), false),
                Operation::Mult => (2 * w, false),
                Operation::Add | Operation::SelfMult { .. } => (2 * w, true),
            };
            if bits_per_case > 20 {
                return Err(Error::InvalidParams(format!(
                    "exhaustive run needs 2^{bits_per_case} inputs, limit is 2^20"
                )));
            }
            Ok((0..1u64 << bits_per_case)
                .map(|x| {
                    let inputs = if op == Operation::Invert {
                        vec![spec.element_from_index(x)]
                    } else {
                        (0..n_inputs).map(|k| Bits::from_u64(x >> (k * w), w)).collect()
                    };
                    let xi = if with_xi {
                        Bits::from_u64(x >> (n_inputs * w), w)
                    } else {
                        Bits::zeros(w)
                    };
                    (inputs, xi)
                })
                .collect())
        }
        Mode::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..samples)
                .map(|_| {
                    let inputs: Vec<Bits> = (0..n_inputs).map(|_| Bits::random(w, &mut rng)).collect();
                    let xi = if op == Operation::Invert {
                        Bits::zeros(w)
                    } else {
                        Bits::random(w, &mut rng)
                    };
                    (inputs, xi)
                })
                .collect())
        }
    }
}
