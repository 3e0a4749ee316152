//! Measured inverter resources against the closed-form bounds, with T
//! counts at 7 T gates and T-depth 6 per Toffoli.
//!
//!     cargo run --release --example resource_table -- 163 233

use gf2m_synth::field::{FieldSpec, Representation};
use gf2m_synth::invert::check_bounds;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let degrees = if args.is_empty() { vec![4, 5, 7, 10, 12, 18, 28, 36, 52, 60] } else { args };
    println!(
        "{:>4} {:>4} {:>15} {:>19} {:>11} {:>19} {:>21}",
        "m", "rep", "depth", "gates", "qubits", "t_depth", "t_count"
    );
    for m in degrees {
        for rep in [Representation::GhostBit, Representation::Gnb] {
            let Ok(spec) = FieldSpec::new(rep, m) else { continue };
            let Ok(report) = check_bounds(&spec) else { continue };
            let (a, b) = (&report.actual, &report.bound);
            println!(
                "{m:>4} {rep:>4} {:>15} {:>19} {:>11} {:>19} {:>21} {}",
                format!("{}/{}", a.depth, b.depth),
                format!("{}/{}", a.gate_count(), b.gates),
                format!("{}/{}", a.qubits, b.qubits),
                format!("{}/{}", a.t_depth, b.t_depth),
                format!("{}/{}", a.t_count, b.t_count),
                if report.passed() { "ok" } else { "EXCEEDED" }
            );
        }
    }
}
