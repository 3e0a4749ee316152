//! Emit a netlist, read it back, and catch a tampered copy.
//!
//!     cargo run --example netlist_round_trip

use gf2m_synth::field::FieldSpec;
use gf2m_synth::synth::synth_mult;
use gf2m_synth::verify::{verify_circuit, Mode, Operation};
use gf2m_synth::{Circuit, Result};

fn main() -> Result<()> {
    let spec = FieldSpec::ghost_bit(4)?;
    let circuit = synth_mult(&spec)?.circuit;
    let text = circuit.to_netlist();
    println!("{}", text.lines().take(8).collect::<Vec<_>>().join("\n"));
    println!("... {} lines", text.lines().count());

    let parsed: Circuit = text.parse()?;
    assert_eq!(parsed, circuit);
    println!("{}", verify_circuit(&parsed, &spec, Operation::Mult, Mode::Exhaustive)?);

    let tampered: String = text.lines().filter(|l| *l != "ccx 0 5 10").map(|l| format!("{l}\n")).collect();
    let bad: Circuit = tampered.parse()?;
    println!("{}", verify_circuit(&bad, &spec, Operation::Mult, Mode::Exhaustive)?);

    match "qubits 3\nccx 0 0 1\n".parse::<Circuit>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}
