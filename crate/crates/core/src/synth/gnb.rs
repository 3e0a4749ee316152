//! Gaussian normal basis multipliers.
//!
//! Every term family `(x, y)` of the product contributes
//! `a_{x+i} b_{y+i}` to `c_i` for all `i`. The `m` Toffolis of a family
//! write distinct targets and read each operand coefficient once, so a
//! family is one layer in the general multiplier.

use super::coloring::{color_circulant_edges, ColoringSchedule, Emitter, StageLabel};
use super::ScheduledCircuit;
use crate::circuit::{Circuit, Gate, Wire};
use crate::error::{Error, Result};
use crate::field::GnbParams;

pub(crate) fn emit_mult(
    em: &mut Emitter<'_>,
    params: &GnbParams,
    a: &[Wire],
    b: &[Wire],
    out: &[Wire],
) -> Result<()> {
    let m = params.degree();
    for (idx, (x, y)) in params.product_terms().into_iter().enumerate() {
        let layer = (0..m)
            .map(|i| Gate::toffoli(a[(x + i) % m], b[(y + i) % m], out[i]))
            .collect();
        em.stage(StageLabel::Term(idx + 1), vec![layer])?;
    }
    Ok(())
}

/// `out ^= a * a^(2^r)`. Reading `b = a^(2^r)` turns `b_{y+i}` into
/// `a_{y-r+i}`. A family with `x = y - r` is a CNOT layer; otherwise its
/// gates are edges `{v, v + delta}` of a circulant graph on the `a` wires,
/// which split into cycles and color with at most three classes.
pub(crate) fn emit_self_mult(
    em: &mut Emitter<'_>,
    params: &GnbParams,
    r: usize,
    a: &[Wire],
    out: &[Wire],
) -> Result<()> {
    let m = params.degree();
    for (idx, (x, y)) in params.product_terms().into_iter().enumerate() {
        let label = StageLabel::Term(idx + 1);
        let y = (y + m - r % m) % m;
        if x == y {
            let layer = (0..m).map(|i| Gate::cnot(a[(x + i) % m], out[i])).collect();
            em.stage(label, vec![layer])?;
            continue;
        }
        let delta = (y + m - x) % m;
        let colors = color_circulant_edges(m, delta);
        let mut classes = vec![Vec::new(); 3];
        for v in 0..m {
            let i = (v + m - x) % m;
            classes[colors[v] as usize].push(Gate::toffoli(a[v], a[(v + delta) % m], out[i]));
        }
        em.stage(label, classes)?;
    }
    Ok(())
}

/// `delta = F(p - k) - r - F(k + 1) mod m` for each `k = 1..tm-1` where
/// the two factors differ; `None` marks a CNOT family.
pub fn gnb_self_mult_deltas(params: &GnbParams, r: usize) -> Vec<(usize, Option<usize>)> {
    let m = params.degree();
    (1..params.gnb_type() * m)
        .map(|k| {
            let x = params.f(k + 1);
            let y = (params.f(params.prime() - k) + m - r % m) % m;
            (k, (x != y).then(|| (y + m - x) % m))
        })
        .collect()
}

fn check_params(params: &GnbParams) -> Result<()> {
    let rebuilt = GnbParams::with_u(params.degree(), params.gnb_type(), params.u())?;
    if rebuilt != *params {
        return Err(Error::InvalidParams(format!(
            "F-table for m = {}, t = {} is inconsistent",
            params.degree(),
            params.gnb_type()
        )));
    }
    Ok(())
}

fn layout(m: usize, inputs: &[&str]) -> Result<Circuit> {
    let mut circuit = Circuit::new((inputs.len() + 1) * m);
    for (idx, name) in inputs.iter().chain(std::iter::once(&"output")).enumerate() {
        circuit.add_register(*name, idx * m, m)?;
    }
    Ok(circuit)
}

fn wires(circuit: &Circuit, name: &str) -> Vec<Wire> {
    let reg = circuit.register(name).expect("register laid out above");
    reg.range().map(|w| w as Wire).collect()
}

/// `|a>|b>|x> -> |a>|b>|x + a b>` on `3m` wires with `Tm^2 - m`
/// Toffolis in `Tm - 1` layers, `T = t + (t mod 2)`.
pub fn synth_gnb_mult(params: &GnbParams) -> Result<ScheduledCircuit> {
    check_params(params)?;
    let mut circuit = layout(params.degree(), &["input_a", "input_b"])?;
    let (a, b, out) = (
        wires(&circuit, "input_a"),
        wires(&circuit, "input_b"),
        wires(&circuit, "output"),
    );
    let mut schedule = ColoringSchedule::default();
    emit_mult(&mut Emitter::new(&mut circuit, Some(&mut schedule)), params, &a, &b, &out)?;
    Ok(ScheduledCircuit { circuit, schedule })
}

/// `|a>|x> -> |a>|x + a a^(2^r)>` on `2m` wires, at most three layers per
/// term family.
pub fn synth_gnb_self_mult(params: &GnbParams, r: usize) -> Result<ScheduledCircuit> {
    check_params(params)?;
    let m = params.degree();
    if r > m {
        return Err(Error::ExponentOutOfRange { r, max: m });
    }
    let mut circuit = layout(m, &["input"])?;
    let (a, out) = (wires(&circuit, "input"), wires(&circuit, "output"));
    let mut schedule = ColoringSchedule::default();
    emit_self_mult(&mut Emitter::new(&mut circuit, Some(&mut schedule)), params, r, &a, &out)?;
    Ok(ScheduledCircuit { circuit, schedule })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::find_gnb_type;

    #[test]
    fn m5_general_counts() {
        let params = find_gnb_type(5).unwrap();
        let s = synth_gnb_mult(&params).unwrap();
        assert_eq!(s.circuit.toffoli_count(), 45);
        assert_eq!(s.circuit.depth().depth, 9);
        assert!(s.schedule.is_valid_for(&s.circuit));
    }

    #[test]
    fn m5_delta_table() {
        let params = find_gnb_type(5).unwrap();
        let deltas: Vec<_> = gnb_self_mult_deltas(&params, 1)
            .into_iter()
            .filter_map(|(k, d)| d.map(|d| (k, d)))
            .filter(|(k, _)| [2, 5, 6, 7, 8].contains(k))
            .collect();
        // -3, -1, 1, -2, 1 mod 5
        assert_eq!(deltas, [(2, 2), (5, 4), (6, 1), (7, 3), (8, 1)]);
        let cnot_families: Vec<_> = gnb_self_mult_deltas(&params, 1)
            .into_iter()
            .filter(|(_, d)| d.is_none())
            .map(|(k, _)| k)
            .collect();
        assert_eq!(cnot_families, [3, 9]);
    }

    #[test]
    fn m5_k5_stage_needs_three_colors() {
        let params = find_gnb_type(5).unwrap();
        let s = synth_gnb_self_mult(&params, 1).unwrap();
        let stage = s.schedule.stage(StageLabel::Term(5)).unwrap();
        assert_eq!(stage.classes.len(), 3);
        let mut sub = Circuit::new(s.circuit.width());
        for &g in stage.classes.iter().flatten() {
            sub.push(s.circuit.gates()[g]).unwrap();
        }
        assert_eq!(sub.depth().depth, 3);
        // Terms a_{4+i} a_{3+i} into c_i.
        for i in 0..5u32 {
            assert!(sub.gates().contains(&Gate::toffoli((4 + i) % 5, (3 + i) % 5, 5 + i)));
        }
    }

    #[test]
    fn tampered_params_rejected() {
        let params = find_gnb_type(5).unwrap();
        let mut table = params.f_table().to_vec();
        table.swap(0, 1);
        let broken = GnbParams::from_raw_parts(5, 2, 11, 10, table);
        assert!(matches!(synth_gnb_mult(&broken), Err(Error::InvalidParams(_))));
        assert!(matches!(
            synth_gnb_self_mult(&params, 6),
            Err(Error::ExponentOutOfRange { .. })
        ));
    }
}
