use super::Circuit;

/// Layer counts from as-soon-as-possible scheduling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Depth {
    pub depth: usize,
    /// Layers holding at least one Toffoli.
    pub toffoli_depth: usize,
}

impl Circuit {
    /// Layer index of every gate: each gate goes into the first layer after
    /// the last one that touches any of its wires.
    pub fn layers(&self) -> Vec<usize> {
        let mut next_free = vec![0usize; self.width];
        self.gates
            .iter()
            .map(|g| {
                let layer = g.wires().map(|w| next_free[w as usize]).max().unwrap_or(0);
                for w in g.wires() {
                    next_free[w as usize] = layer + 1;
                }
                layer
            })
            .collect()
    }

    pub fn depth(&self) -> Depth {
        let mut has_toffoli: Vec<bool> = Vec::new();
        for (g, layer) in self.gates.iter().zip(self.layers()) {
            if layer >= has_toffoli.len() {
                has_toffoli.resize(layer + 1, false);
            }
            has_toffoli[layer] |= g.is_toffoli();
        }
        Depth {
            depth: has_toffoli.len(),
            toffoli_depth: has_toffoli.iter().filter(|&&t| t).count(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;

    #[test]
    fn empty_and_parallel() {
        let mut c = Circuit::new(4);
        assert_eq!(c.depth(), Depth { depth: 0, toffoli_depth: 0 });
        c.push(Gate::cnot(0, 1)).unwrap();
        c.push(Gate::cnot(2, 3)).unwrap();
        assert_eq!(c.depth(), Depth { depth: 1, toffoli_depth: 0 });
    }

    #[test]
    fn later_gate_cannot_jump_a_shared_wire() {
        let mut c = Circuit::new(5);
        c.push(Gate::toffoli(0, 1, 2)).unwrap();
        c.push(Gate::cnot(2, 3)).unwrap();
        c.push(Gate::cnot(0, 4)).unwrap();
        assert_eq!(c.layers(), [0, 1, 1]);
        assert_eq!(c.depth(), Depth { depth: 2, toffoli_depth: 1 });
    }
}
