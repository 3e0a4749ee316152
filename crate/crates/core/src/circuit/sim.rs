use super::{Circuit, Gate};
use crate::bits::Bits;
use crate::error::{Error, Result};

impl Circuit {
    /// Runs the circuit on one classical basis state.
    pub fn simulate(&self, input: &[bool]) -> Result<Bits> {
        if input.len() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: input.len(),
            });
        }
        let mut state = input.to_vec();
        for gate in &self.gates {
            match *gate {
                Gate::Cnot { control, target } => {
                    state[target as usize] ^= state[control as usize];
                }
                Gate::Toffoli {
                    controls: [c1, c2],
                    target,
                } => {
                    state[target as usize] ^= state[c1 as usize] & state[c2 as usize];
                }
            }
        }
        Ok(state.into())
    }

    /// Bit-sliced simulation of 64 basis states at once: bit `k` of
    /// `state[w]` is wire `w` in run `k`.
    pub fn simulate_lanes(&self, state: &mut [u64]) -> Result<()> {
        if state.len() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: state.len(),
            });
        }
        for gate in &self.gates {
            match *gate {
                Gate::Cnot { control, target } => {
                    state[target as usize] ^= state[control as usize];
                }
                Gate::Toffoli {
                    controls: [c1, c2],
                    target,
                } => {
                    state[target as usize] ^= state[c1 as usize] & state[c2 as usize];
                }
            }
        }
        Ok(())
    }
}
