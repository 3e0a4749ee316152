use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// `|a>|b> -> |a>|a + b>` on `2w` wires: `w` CNOTs in one layer. Works for
/// either representation since addition is coordinatewise.
pub fn synth_add(width: usize) -> Result<Circuit> {
    if width == 0 {
        return Err(Error::InvalidParams("adder width must be at least 1".into()));
    }
    let mut circuit = Circuit::new(2 * width);
    circuit.add_register("input", 0, width)?;
    circuit.add_register("output", width, width)?;
    circuit.extend((0..width).map(|i| Gate::cnot(i as u32, (width + i) as u32)))?;
    Ok(circuit)
}
