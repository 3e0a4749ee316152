//! Itoh-Tsujii inverter: structure, verification and bound check.
//!
//!     cargo run --example inverter -- [gbb|gnb] [m]

use gf2m_synth::field::{FieldSpec, Representation};
use gf2m_synth::invert::{check_bounds, synth_inverter};
use gf2m_synth::verify::{verify_circuit, Mode, Operation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let rep: Representation = args.next().as_deref().unwrap_or("gnb").parse()?;
    let m: usize = args.next().as_deref().unwrap_or("7").parse()?;
    let spec = FieldSpec::new(rep, m)?;

    let inv = synth_inverter(&spec)?;
    println!("chain for m={m}: 2^k terms of m-1 = {:?}", inv.plan.k_list);
    for r in inv.circuit.registers() {
        println!("  reg {} [{}, {})", r.name, r.start, r.start + r.len);
    }
    for b in &inv.blocks {
        println!("  {b}");
    }

    let mode = if m <= 16 { Mode::Exhaustive } else { Mode::default() };
    println!("{}", verify_circuit(&inv.circuit, &spec, Operation::Invert, mode)?);
    println!("{}", check_bounds(&spec)?);
    Ok(())
}
