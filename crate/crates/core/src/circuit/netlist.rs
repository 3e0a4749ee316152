//! Line-oriented text format:
//!
//! ```text
//! qubits <N>
//! reg <name> <start> <len>
//! cx <control> <target>
//! ccx <control1> <control2> <target>
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::fmt;
use std::str::FromStr;

use super::{Circuit, Gate, Wire};
use crate::error::{Error, ParseError};

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::Cnot { control, target } => write!(f, "cx {control} {target}"),
            Gate::Toffoli {
                controls: [c1, c2],
                target,
            } => write!(f, "ccx {c1} {c2} {target}"),
        }
    }
}

impl Circuit {
    /// Header and register lines, without gates.
    pub fn write_header(&self, out: &mut impl fmt::Write) -> fmt::Result {
        writeln!(out, "qubits {}", self.width)?;
        for r in &self.registers {
            writeln!(out, "reg {} {} {}", r.name, r.start, r.len)?;
        }
        Ok(())
    }

    pub fn to_netlist(&self) -> String {
        self.to_string()
    }

    pub fn parse_netlist(text: &str) -> Result<Circuit, ParseError> {
        text.parse()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_header(f)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

fn parse_index(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| ParseError::new(line, format!("bad {what} {token:?}")))
}

fn parse_wire(token: Option<&str>, line: usize, what: &str) -> Result<Wire, ParseError> {
    let v = parse_index(token, line, what)?;
    Wire::try_from(v).map_err(|_| ParseError::new(line, format!("{what} {v} too large")))
}

impl FromStr for Circuit {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut circuit: Option<Circuit> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let keyword = tokens.next().expect("non-empty line");
            let Some(c) = circuit.as_mut() else {
                if keyword != "qubits" {
                    return Err(ParseError::new(line, "expected `qubits <N>` header"));
                }
                let width = parse_index(tokens.next(), line, "qubit count")?;
                if tokens.next().is_some() {
                    return Err(ParseError::new(line, "trailing tokens"));
                }
                circuit = Some(Circuit::new(width));
                continue;
            };
            match keyword {
                "reg" => {
                    let name = tokens
                        .next()
                        .ok_or_else(|| ParseError::new(line, "missing register name"))?;
                    let start = parse_index(tokens.next(), line, "register start")?;
                    let len = parse_index(tokens.next(), line, "register length")?;
                    if tokens.next().is_some() {
                        return Err(ParseError::new(line, "trailing tokens"));
                    }
                    if !c.gates.is_empty() {
                        return Err(ParseError::new(line, "register after gates"));
                    }
                    c.add_register(name, start, len)
                        .map_err(|e| ParseError::new(line, e.to_string()))?;
                }
                "cx" | "ccx" => {
                    let gate = if keyword == "cx" {
                        let control = parse_wire(tokens.next(), line, "control")?;
                        let target = parse_wire(tokens.next(), line, "target")?;
                        Gate::cnot(control, target)
                    } else {
                        let c1 = parse_wire(tokens.next(), line, "control")?;
                        let c2 = parse_wire(tokens.next(), line, "control")?;
                        let target = parse_wire(tokens.next(), line, "target")?;
                        Gate::toffoli(c1, c2, target)
                    };
                    if tokens.next().is_some() {
                        return Err(ParseError::new(line, "trailing tokens"));
                    }
                    c.push(gate).map_err(|e| match e {
                        Error::InvalidGate(reason) => ParseError::new(line, reason),
                        other => ParseError::new(line, other.to_string()),
                    })?;
                }
                "qubits" => return Err(ParseError::new(line, "duplicate header")),
                other => return Err(ParseError::new(line, format!("unknown keyword {other:?}"))),
            }
        }
        circuit.ok_or_else(|| ParseError::new(1, "empty netlist"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only() {
        let c = Circuit::new(3);
        assert_eq!(c.to_netlist(), "qubits 3\n");
        assert_eq!(Circuit::parse_netlist("qubits 3\n").unwrap(), c);
    }

    #[test]
    fn gate_lines() {
        let mut c = Circuit::new(3);
        c.add_register("a", 0, 2).unwrap();
        c.push(Gate::cnot(0, 1)).unwrap();
        c.push(Gate::toffoli(1, 0, 2)).unwrap();
        let text = c.to_netlist();
        assert_eq!(text, "qubits 3\nreg a 0 2\ncx 0 1\nccx 0 1 2\n");
        assert_eq!(text.parse::<Circuit>().unwrap(), c);
    }

    #[test]
    fn comments_and_blank_lines() {
        let c: Circuit = "# generated\n\nqubits 2\n  # gate\ncx 1 0\n".parse().unwrap();
        assert_eq!(c.gates(), &[Gate::cnot(1, 0)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = "qubits 3\nccx 0 0 1\n".parse::<Circuit>().unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.reason.contains("repeated"), "{err}");

        let cases = [
            ("cx 0 1\n", 1),
            ("qubits x\n", 1),
            ("qubits 2\ncx 0 2\n", 2),
            ("qubits 2\ncx 0\n", 2),
            ("qubits 2\ncx 0 1 1\n", 2),
            ("qubits 2\nswap 0 1\n", 2),
            ("qubits 2\nreg a 0 3\n", 2),
            ("qubits 2\ncx 0 1\nreg a 0 1\n", 3),
            ("", 1),
        ];
        for (text, line) in cases {
            let err = text.parse::<Circuit>().unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
        }
    }
}
