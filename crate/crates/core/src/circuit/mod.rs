//! CNOT/Toffoli netlists.
//!
//! A [`Circuit`] is a fixed number of wires, an ordered gate list and a map
//! of named, disjoint registers. Depth is measured by as-soon-as-possible
//! layering (see [`Circuit::depth`]); simulation is classical since every
//! gate is a permutation of basis states.

mod netlist;
mod resources;
mod schedule;
mod sim;

pub use resources::ResourceEstimate;
pub use schedule::Depth;

use crate::error::{Error, Result};

pub type Wire = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    Cnot { control: Wire, target: Wire },
    /// Controls are kept sorted, lower wire first.
    Toffoli { controls: [Wire; 2], target: Wire },
}

impl Gate {
    pub fn cnot(control: Wire, target: Wire) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn toffoli(c1: Wire, c2: Wire, target: Wire) -> Self {
        Gate::Toffoli {
            controls: [c1.min(c2), c1.max(c2)],
            target,
        }
    }

    pub fn target(&self) -> Wire {
        match *self {
            Gate::Cnot { target, .. } | Gate::Toffoli { target, .. } => target,
        }
    }

    pub fn controls(&self) -> &[Wire] {
        match self {
            Gate::Cnot { control, .. } => std::slice::from_ref(control),
            Gate::Toffoli { controls, .. } => controls,
        }
    }

    pub fn wires(&self) -> impl Iterator<Item = Wire> + '_ {
        self.controls().iter().copied().chain(std::iter::once(self.target()))
    }

    pub fn is_toffoli(&self) -> bool {
        matches!(self, Gate::Toffoli { .. })
    }

    /// Whether the gates act on pairwise-disjoint wires.
    pub fn disjoint(&self, other: &Gate) -> bool {
        self.wires().all(|w| other.wires().all(|v| v != w))
    }

    /// Two XOR-into-target gates commute unless one writes a control of the
    /// other. Shared targets and shared controls are fine.
    pub fn commutes_with(&self, other: &Gate) -> bool {
        !other.controls().contains(&self.target()) && !self.controls().contains(&other.target())
    }

    pub fn validate(&self, width: usize) -> Result<()> {
        let wires: Vec<Wire> = self.wires().collect();
        if let Some(&w) = wires.iter().find(|&&w| w as usize >= width) {
            return Err(Error::InvalidGate(format!(
                "wire {w} out of range for width {width}"
            )));
        }
        for (i, w) in wires.iter().enumerate() {
            if wires[i + 1..].contains(w) {
                return Err(Error::InvalidGate(format!("wire {w} repeated")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Register {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Register {
    pub fn wire(&self, i: usize) -> Wire {
        debug_assert!(i < self.len);
        (self.start + i) as Wire
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
    registers: Vec<Register>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            gates: Vec::new(),
            registers: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    pub fn register(&self, name: &str) -> Option<&Register> {
        self.registers.iter().find(|r| r.name == name)
    }

    pub fn add_register(&mut self, name: impl Into<String>, start: usize, len: usize) -> Result<&Register> {
        let name = name.into();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::InvalidRegister(format!("bad register name {name:?}")));
        }
        if self.register(&name).is_some() {
            return Err(Error::InvalidRegister(format!("duplicate register {name}")));
        }
        if start + len > self.width {
            return Err(Error::InvalidRegister(format!(
                "{name} [{start}, {}) exceeds width {}",
                start + len,
                self.width
            )));
        }
        if let Some(other) = self
            .registers
            .iter()
            .find(|r| r.start < start + len && start < r.start + r.len)
        {
            return Err(Error::InvalidRegister(format!(
                "{name} overlaps {}",
                other.name
            )));
        }
        self.registers.push(Register { name, start, len });
        Ok(self.registers.last().expect("just pushed"))
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend<I: IntoIterator<Item = Gate>>(&mut self, gates: I) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    /// Appends all gates of `other`, which must have the same width.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.width != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    /// The inverse circuit. Both gate kinds are self-inverse, so this is the
    /// gate list reversed.
    pub fn reverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().copied().collect(),
            registers: self.registers.clone(),
        }
    }

    pub fn toffoli_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_toffoli()).count()
    }

    pub fn cnot_count(&self) -> usize {
        self.gates.len() - self.toffoli_count()
    }

    /// Drops the gates in `range`, keeping everything else in order.
    pub fn remove_range(&mut self, range: std::ops::Range<usize>) {
        self.gates.drain(range);
    }

    pub(crate) fn retain_indices(&mut self, keep: &[bool]) {
        let mut it = keep.iter();
        self.gates.retain(|_| *it.next().expect("mask covers every gate"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gate_validation() {
        assert!(Gate::toffoli(0, 0, 1).validate(3).is_err());
        assert!(Gate::cnot(1, 1).validate(3).is_err());
        assert!(Gate::cnot(0, 3).validate(3).is_err());
        assert!(Gate::toffoli(2, 0, 1).validate(3).is_ok());
        assert_eq!(Gate::toffoli(2, 0, 1), Gate::toffoli(0, 2, 1));
    }

    #[test]
    fn commutation_rule() {
        let a = Gate::toffoli(0, 1, 5);
        assert!(a.commutes_with(&Gate::toffoli(2, 3, 5)));
        assert!(a.commutes_with(&Gate::cnot(0, 6)));
        assert!(!a.commutes_with(&Gate::cnot(5, 6)));
        assert!(!a.commutes_with(&Gate::cnot(6, 0)));
    }

    #[test]
    fn registers_must_be_disjoint_and_in_range() {
        let mut c = Circuit::new(10);
        c.add_register("a", 0, 5).unwrap();
        assert!(c.add_register("b", 4, 2).is_err());
        assert!(c.add_register("b", 8, 3).is_err());
        assert!(c.add_register("a", 5, 1).is_err());
        assert!(c.add_register("bad name", 5, 1).is_err());
        c.add_register("b", 5, 5).unwrap();
        assert_eq!(c.register("b").unwrap().wire(2), 7);
    }

    #[test]
    fn reverse_examples() {
        let mut c = Circuit::new(3);
        assert_eq!(c.reverse(), c);
        c.push(Gate::cnot(0, 1)).unwrap();
        c.push(Gate::toffoli(0, 1, 2)).unwrap();
        let r = c.reverse();
        assert_eq!(r.gates(), &[Gate::toffoli(0, 1, 2), Gate::cnot(0, 1)]);
        assert_eq!(r.reverse(), c);
    }

    #[test]
    fn append_requires_same_width() {
        let mut a = Circuit::new(3);
        let b = Circuit::new(4);
        assert!(a.append(&b).is_err());
    }
}
