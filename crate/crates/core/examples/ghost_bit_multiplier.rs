//! Ghost-bit multipliers and their sigma stages.
//!
//!     cargo run --example ghost_bit_multiplier

use gf2m_synth::synth::{synth_gbb_mult, synth_gbb_self_mult, ScheduledCircuit};
use gf2m_synth::Result;

fn show(name: &str, s: &ScheduledCircuit) {
    let r = s.circuit.resources();
    println!(
        "{name}: {} Toffoli, {} CNOT, depth {} (intended {}), {} qubits",
        r.toffoli_count,
        r.cnot_count,
        r.depth,
        s.schedule.intended_depth(),
        r.qubits
    );
}

fn main() -> Result<()> {
    let mult = synth_gbb_mult(4)?;
    show("general m=4", &mult);

    let sp = synth_gbb_self_mult(4, 2)?;
    show("a * a^4, m=4", &sp);
    for stage in &sp.schedule.stages {
        let classes: Vec<String> = stage
            .classes
            .iter()
            .map(|c| c.iter().map(|&g| sp.circuit.gates()[g].to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        println!("  {}: [{}]", stage.label, classes.join("] ["));
    }

    show("a * a (r=0), m=4", &synth_gbb_self_mult(4, 0)?);
    for m in [10, 28, 60] {
        show(&format!("general m={m}"), &synth_gbb_mult(m)?);
    }
    Ok(())
}
