use std::fmt;

use crate::circuit::{Circuit, Gate};
use crate::error::Result;

/// What a stage of a multiplier computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StageLabel {
    /// Ghost-bit products grouped by index sum `sigma`.
    Sigma(usize),
    /// Normal-basis term family, numbered from 1 in product order.
    Term(usize),
    /// Degenerate self-power product `a * a = a^2`: a single CNOT layer.
    Square,
    /// The CNOT copy of an adder.
    Add,
}

impl fmt::Display for StageLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StageLabel::Sigma(s) => write!(f, "sigma={s}"),
            StageLabel::Term(k) => write!(f, "term={k}"),
            StageLabel::Square => f.write_str("square"),
            StageLabel::Add => f.write_str("add"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub label: StageLabel,
    /// Color classes as indices into the circuit's gate list.
    pub classes: Vec<Vec<usize>>,
}

/// The layering a synthesizer intends: stages run in order, each color
/// class within a stage is one layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColoringSchedule {
    pub stages: Vec<Stage>,
}

impl ColoringSchedule {
    pub fn intended_depth(&self) -> usize {
        self.stages
            .iter()
            .map(|s| s.classes.iter().filter(|c| !c.is_empty()).count())
            .sum()
    }

    pub fn max_colors(&self) -> usize {
        self.stages.iter().map(|s| s.classes.len()).max().unwrap_or(0)
    }

    pub fn stage(&self, label: StageLabel) -> Option<&Stage> {
        self.stages.iter().find(|s| s.label == label)
    }

    /// Every gate is in exactly one class and each class acts on pairwise
    /// disjoint wires.
    pub fn is_valid_for(&self, circuit: &Circuit) -> bool {
        let mut seen = vec![false; circuit.len()];
        let mut used = vec![false; circuit.width()];
        for class in self.stages.iter().flat_map(|s| &s.classes) {
            for &g in class {
                if g >= seen.len() || std::mem::replace(&mut seen[g], true) {
                    return false;
                }
                for w in circuit.gates()[g].wires() {
                    if std::mem::replace(&mut used[w as usize], true) {
                        return false;
                    }
                }
            }
            for &g in class {
                for w in circuit.gates()[g].wires() {
                    used[w as usize] = false;
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Appends gates to a circuit and, optionally, records their color classes.
pub(crate) struct Emitter<'a> {
    pub circuit: &'a mut Circuit,
    pub schedule: Option<&'a mut ColoringSchedule>,
}

impl<'a> Emitter<'a> {
    pub fn new(circuit: &'a mut Circuit, schedule: Option<&'a mut ColoringSchedule>) -> Self {
        Self { circuit, schedule }
    }

    /// Emits one stage, class by class.
    pub fn stage(&mut self, label: StageLabel, classes: Vec<Vec<Gate>>) -> Result<()> {
        let mut recorded = Vec::with_capacity(classes.len());
        for class in classes.into_iter().filter(|c| !c.is_empty()) {
            let start = self.circuit.len();
            self.circuit.extend(class)?;
            recorded.push((start..self.circuit.len()).collect());
        }
        if let Some(schedule) = self.schedule.as_deref_mut() {
            schedule.stages.push(Stage {
                label,
                classes: recorded,
            });
        }
        Ok(())
    }
}

/// Proper edge coloring of the circulant graph with edges
/// `{v, v + delta} (mod m)`, edge identified by `v`.
///
/// The graph splits into cycles along the cosets of `<delta>`. Edges
/// alternate between colors 0 and 1 around each cycle; the closing edge of
/// an odd cycle gets color 2.
pub fn color_circulant_edges(m: usize, delta: usize) -> Vec<u8> {
    assert!(delta % m != 0, "delta must be nonzero mod m");
    let mut color = vec![u8::MAX; m];
    for start in 0..m {
        if color[start] != u8::MAX {
            continue;
        }
        let mut cycle = vec![start];
        let mut v = (start + delta) % m;
        while v != start {
            cycle.push(v);
            v = (v + delta) % m;
        }
        let len = cycle.len();
        for (k, &e) in cycle.iter().enumerate() {
            color[e] = if len % 2 == 1 && k == len - 1 { 2 } else { (k % 2) as u8 };
        }
    }
    color
}
