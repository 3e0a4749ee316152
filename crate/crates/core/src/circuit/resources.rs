use std::fmt;

use super::Circuit;

/// T gates per Toffoli in the standard Clifford+T decomposition.
pub const T_PER_TOFFOLI: usize = 7;
/// T-depth of that decomposition.
pub const T_DEPTH_PER_TOFFOLI: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ResourceEstimate {
    pub toffoli_count: usize,
    pub cnot_count: usize,
    pub depth: usize,
    pub toffoli_depth: usize,
    pub qubits: usize,
    pub t_count: usize,
    /// `6 * toffoli_depth`.
    pub t_depth: usize,
}

impl ResourceEstimate {
    pub fn gate_count(&self) -> usize {
        self.toffoli_count + self.cnot_count
    }

    /// `6 * depth`, the cruder T-depth estimate that charges every layer.
    pub fn coarse_t_depth(&self) -> usize {
        T_DEPTH_PER_TOFFOLI * self.depth
    }
}

/// One `key=value` line per field.
impl fmt::Display for ResourceEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "toffoli={}", self.toffoli_count)?;
        writeln!(f, "cnot={}", self.cnot_count)?;
        writeln!(f, "depth={}", self.depth)?;
        writeln!(f, "toffoli_depth={}", self.toffoli_depth)?;
        writeln!(f, "qubits={}", self.qubits)?;
        writeln!(f, "t_count={}", self.t_count)?;
        writeln!(f, "t_depth={}", self.t_depth)
    }
}

impl Circuit {
    pub fn resources(&self) -> ResourceEstimate {
        let toffoli_count = self.toffoli_count();
        let depth = self.depth();
        ResourceEstimate {
            toffoli_count,
            cnot_count: self.gates.len() - toffoli_count,
            depth: depth.depth,
            toffoli_depth: depth.toffoli_depth,
            qubits: self.width,
            t_count: T_PER_TOFFOLI * toffoli_count,
            t_depth: T_DEPTH_PER_TOFFOLI * depth.toffoli_depth,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;

    #[test]
    fn cnot_has_no_t_cost() {
        let mut c = Circuit::new(2);
        c.push(Gate::cnot(0, 1)).unwrap();
        let r = c.resources();
        assert_eq!((r.t_count, r.t_depth, r.cnot_count, r.depth), (0, 0, 1, 1));
    }

    #[test]
    fn summary_lines() {
        let mut c = Circuit::new(3);
        c.push(Gate::toffoli(0, 1, 2)).unwrap();
        let text = c.resources().to_string();
        assert_eq!(
            text,
            "toffoli=1\ncnot=0\ndepth=1\ntoffoli_depth=1\nqubits=3\nt_count=7\nt_depth=6\n"
        );
    }
}
