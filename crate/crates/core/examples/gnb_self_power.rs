//! Normal-basis self-power multiplier: circulant edge colouring and the
//! duplicate families that cancel.
//!
//!     cargo run --example gnb_self_power

use gf2m_synth::field::find_gnb_type;
use gf2m_synth::synth::{cancel_pairs, gnb_self_mult_deltas, synth_gnb_mult, synth_gnb_self_mult};
use gf2m_synth::Result;

fn main() -> Result<()> {
    let params = find_gnb_type(5)?;
    let general = synth_gnb_mult(&params)?;
    let summary: Vec<String> = general.circuit.resources().to_string().lines().map(String::from).collect();
    println!("general m=5: {}", summary.join(" "));

    let r = 1;
    println!("\ndelta per k for a * a^2 (none: CNOT family):");
    for (k, delta) in gnb_self_mult_deltas(&params, r) {
        println!("  k={k}: {delta:?}");
    }

    let sp = synth_gnb_self_mult(&params, r)?;
    for stage in &sp.schedule.stages {
        let sizes: Vec<usize> = stage.classes.iter().map(Vec::len).collect();
        println!("  {} color classes {sizes:?}", stage.label);
    }
    let before = sp.circuit.resources();
    let after = cancel_pairs(&sp.circuit).resources();
    println!(
        "\nself-power m=5 r=1: {} gates, depth {}; after cancellation {} gates, depth {}",
        before.gate_count(),
        before.depth,
        after.gate_count(),
        after.depth
    );
    Ok(())
}
