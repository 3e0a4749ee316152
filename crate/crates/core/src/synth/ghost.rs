//! Ghost-bit multipliers.
//!
//! With `n = m + 1`, `c_i = sum_j a_j b_{i-j}`. Grouping the `n^2` products
//! by `sigma = (i - 2j) mod n` gives stages in which every `a_j`, every
//! `b_k` and every `c_i` occurs exactly once, so each stage is one layer.

use super::coloring::{ColoringSchedule, Emitter, StageLabel};
use super::ScheduledCircuit;
use crate::arith::pow_mod;
use crate::circuit::{Circuit, Gate, Wire};
use crate::error::{Error, Result};
use crate::field::GhostBitField;

pub(crate) fn emit_mult(em: &mut Emitter<'_>, a: &[Wire], b: &[Wire], out: &[Wire]) -> Result<()> {
    let n = a.len();
    for sigma in 0..n {
        let layer = (0..n)
            .map(|j| {
                let i = (sigma + 2 * j) % n;
                Gate::toffoli(a[j], b[(i + n - j) % n], out[i])
            })
            .collect();
        em.stage(StageLabel::Sigma(sigma), vec![layer])?;
    }
    Ok(())
}

/// `out ^= a * a^(2^r)` for `r` in `0..=m`, with `a` and `out` given as
/// coefficient-to-wire maps.
pub(crate) fn emit_self_mult(em: &mut Emitter<'_>, r: usize, a: &[Wire], out: &[Wire]) -> Result<()> {
    let n = a.len();
    let two_r = pow_mod(2, r as u64, n as u64) as usize;
    if two_r == 1 {
        // a * a = a^2: coefficient i lands on position 2i.
        let layer = (0..n).map(|i| Gate::cnot(a[i], out[2 * i % n])).collect();
        return em.stage(StageLabel::Square, vec![layer]);
    }
    // Coefficient (i - j) of a^(2^r) is a_{(i - j) / 2^r}. The product
    // a_j a_k lands on i = j + 2^r k; stage sigma collects j + k = sigma.
    for sigma in 0..n {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for j in 0..n {
            let k = (sigma + n - j) % n;
            let i = (j + two_r * k) % n;
            if j == k {
                first.push(Gate::cnot(a[j], out[i]));
            } else if j < k {
                first.push(Gate::toffoli(a[j], a[k], out[i]));
            } else {
                second.push(Gate::toffoli(a[j], a[k], out[i]));
            }
        }
        em.stage(StageLabel::Sigma(sigma), vec![first, second])?;
    }
    Ok(())
}

fn layout(m: usize, inputs: &[&str]) -> Result<Circuit> {
    GhostBitField::new(m)?;
    let n = m + 1;
    let mut circuit = Circuit::new((inputs.len() + 1) * n);
    for (idx, name) in inputs.iter().chain(std::iter::once(&"output")).enumerate() {
        circuit.add_register(*name, idx * n, n)?;
    }
    Ok(circuit)
}

fn wires(circuit: &Circuit, name: &str) -> Vec<Wire> {
    let reg = circuit.register(name).expect("register laid out above");
    reg.range().map(|w| w as Wire).collect()
}

/// `|a>|b>|x> -> |a>|b>|x + a b>` on `3(m + 1)` wires: `(m + 1)^2`
/// Toffolis in `m + 1` layers.
pub fn synth_gbb_mult(m: usize) -> Result<ScheduledCircuit> {
    let mut circuit = layout(m, &["input_a", "input_b"])?;
    let (a, b, out) = (
        wires(&circuit, "input_a"),
        wires(&circuit, "input_b"),
        wires(&circuit, "output"),
    );
    let mut schedule = ColoringSchedule::default();
    emit_mult(&mut Emitter::new(&mut circuit, Some(&mut schedule)), &a, &b, &out)?;
    Ok(ScheduledCircuit { circuit, schedule })
}

/// `|a>|x> -> |a>|x + a a^(2^r)>` on `2(m + 1)` wires.
///
/// Unless `2^r = 1 mod (m + 1)`, this is `m^2 + m` Toffolis and `m + 1`
/// CNOTs in `2(m + 1)` layers; otherwise it is a single CNOT layer adding
/// `a^2`.
pub fn synth_gbb_self_mult(m: usize, r: usize) -> Result<ScheduledCircuit> {
    let mut circuit = layout(m, &["input"])?;
    if r > m {
        return Err(Error::ExponentOutOfRange { r, max: m });
    }
    let (a, out) = (wires(&circuit, "input"), wires(&circuit, "output"));
    let mut schedule = ColoringSchedule::default();
    emit_self_mult(&mut Emitter::new(&mut circuit, Some(&mut schedule)), r, &a, &out)?;
    Ok(ScheduledCircuit { circuit, schedule })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits;


    #[test]
    fn m4_counts() {
        let s = synth_gbb_mult(4).unwrap();
        assert_eq!(s.circuit.toffoli_count(), 25);
        assert_eq!(s.circuit.width(), 15);
        assert_eq!(s.circuit.depth().depth, 5);
        assert!(s.schedule.is_valid_for(&s.circuit));
        assert_eq!(s.schedule.intended_depth(), 5);
    }

    #[test]
    fn self_mult_m4_r2() {
        let s = synth_gbb_self_mult(4, 2).unwrap();
        assert_eq!((s.circuit.toffoli_count(), s.circuit.cnot_count()), (20, 5));
        assert_eq!(s.circuit.depth().depth, 10);
        assert!(s.schedule.is_valid_for(&s.circuit));
        assert!(s.schedule.max_colors() <= 2);
    }

    #[test]
    fn degenerate_exponents() {
        for r in [0, 4] {
            let s = synth_gbb_self_mult(4, r).unwrap();
            assert_eq!((s.circuit.toffoli_count(), s.circuit.cnot_count()), (0, 5));
            assert_eq!(s.circuit.depth().depth, 1);
        }
        assert!(matches!(
            synth_gbb_self_mult(4, 5),
            Err(Error::ExponentOutOfRange { r: 5, max: 4 })
        ));
        assert!(synth_gbb_mult(5).is_err());
    }

    #[test]
    fn self_mult_matches_oracle() {
        let field = GhostBitField::new(4).unwrap();
        for r in 0..=4 {
            let s = synth_gbb_self_mult(4, r).unwrap();
            for v in 0..32 {
                let a = Bits::from_u64(v, 5);
                let mut input = a.to_vec();
                input.extend([false; 5]);
                let state = s.circuit.simulate(&input).unwrap();
                let expected = field.mult(&a, &field.frobenius(&a, r).unwrap()).unwrap();
                assert_eq!(&state[5..], &expected[..], "r = {r}, a = {a}");
                assert_eq!(&state[..5], &a[..]);
            }
        }
    }
}
