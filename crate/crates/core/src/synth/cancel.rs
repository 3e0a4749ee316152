use std::collections::HashMap;

use crate::circuit::{Circuit, Gate};

/// Removes pairs of identical gates that can be moved next to each other.
///
/// Gates here all XOR a function of their controls into their target, so
/// two of them commute unless one writes a control of the other. A gate
/// cancels against its latest live copy when nothing in between wrote one
/// of its controls or read its target.
pub fn cancel_pairs(circuit: &Circuit) -> Circuit {
    let gates = circuit.gates();
    let mut keep = vec![true; gates.len()];
    let mut live: HashMap<Gate, Vec<usize>> = HashMap::new();
    let mut last_write = vec![None::<usize>; circuit.width()];
    let mut last_read = vec![None::<usize>; circuit.width()];

    for (pos, gate) in gates.iter().enumerate() {
        let copies = live.entry(*gate).or_default();
        if let Some(&earlier) = copies.last() {
            let after = |t: Option<usize>| t.is_some_and(|t| t > earlier);
            let blocked = gate.controls().iter().any(|&c| after(last_write[c as usize]))
                || after(last_read[gate.target() as usize]);
            if !blocked {
                copies.pop();
                keep[earlier] = false;
                keep[pos] = false;
                continue;
            }
        }
        copies.push(pos);
        last_write[gate.target() as usize] = Some(pos);
        for &c in gate.controls() {
            last_read[c as usize] = Some(pos);
        }
    }

    let mut out = circuit.clone();
    out.retain_indices(&keep);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circuit(width: usize, gates: &[Gate]) -> Circuit {
        let mut c = Circuit::new(width);
        c.extend(gates.iter().copied()).unwrap();
        c
    }

    #[test]
    fn adjacent_and_commuting_pairs_cancel() {
        let c = circuit(
            5,
            &[Gate::toffoli(0, 1, 4), Gate::toffoli(2, 3, 4), Gate::toffoli(1, 0, 4)],
        );
        assert_eq!(cancel_pairs(&c).gates(), &[Gate::toffoli(2, 3, 4)]);
    }

    #[test]
    fn blocked_by_write_to_control() {
        let c = circuit(
            5,
            &[Gate::toffoli(0, 1, 4), Gate::cnot(2, 0), Gate::toffoli(0, 1, 4)],
        );
        assert_eq!(cancel_pairs(&c), c);
    }

    #[test]
    fn blocked_by_read_of_target() {
        let c = circuit(5, &[Gate::cnot(0, 4), Gate::cnot(4, 2), Gate::cnot(0, 4)]);
        assert_eq!(cancel_pairs(&c), c);
    }

    #[test]
    fn no_duplicates_unchanged() {
        let c = circuit(4, &[Gate::toffoli(0, 1, 2), Gate::toffoli(0, 1, 3), Gate::cnot(2, 3)]);
        assert_eq!(cancel_pairs(&c), c);
    }

    #[test]
    fn triples_leave_one() {
        let g = Gate::toffoli(0, 1, 2);
        assert_eq!(cancel_pairs(&circuit(3, &[g, g, g])).gates(), &[g]);
    }
}
