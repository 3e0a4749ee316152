//! Command-line front end.
//!
//! ```text
//! gf2m-synth params -m <M>
//! gf2m-synth synth  (add|mult|selfmult|invert) -m <M> [--rep gbb|gnb] [-t <T>] [-r <R>] [--out <PATH>] [--cancel]
//! gf2m-synth verify (add|mult|selfmult|invert) -m <M> [--rep ...] [--in <PATH>] [--exhaustive | --random <N>] [--seed <HEX>]
//! gf2m-synth table  -m 4,5,7,10
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain or usage error,
//! 3 I/O or netlist parse failure.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuit::Circuit;
use crate::error::Error;
use crate::field::{
    check_ghost_bit_support, find_gnb_type, gnb_verify_isomorphism, FieldSpec, GnbParams, Representation,
};
use crate::invert::{bounds_for, synth_inverter};
use crate::synth::{cancel_pairs, synth_add, synth_mult, synth_self_mult};
use crate::verify::{verify_circuit, Mode, Operation, DEFAULT_SAMPLES, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gf2m-synth", version, about = "Reversible GF(2^m) arithmetic circuits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report ghost-bit support and the smallest Gaussian normal basis.
    Params {
        #[arg(short)]
        m: usize,
    },
    /// Write a netlist and print its resource summary.
    Synth {
        op: OpArg,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Remove commuting duplicate gate pairs from multipliers.
        #[arg(long)]
        cancel: bool,
    },
    /// Compare a netlist with the field oracle.
    Verify {
        op: OpArg,
        #[command(flatten)]
        field: FieldArgs,
        /// Netlist to check instead of synthesizing one.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "random")]
        exhaustive: bool,
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, value_parser = parse_hex, value_name = "HEX")]
        seed: Option<u64>,
    },
    /// Measured depth and gate counts next to the closed-form bounds.
    Table {
        #[arg(short, value_delimiter = ',', required = true)]
        m: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Add,
    Mult,
    Selfmult,
    Invert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    Gbb,
    Gnb,
}

impl From<RepArg> for Representation {
    fn from(r: RepArg) -> Self {
        match r {
            RepArg::Gbb => Representation::GhostBit,
            RepArg::Gnb => Representation::Gnb,
        }
    }
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(short)]
    pub m: usize,
    #[arg(long, value_enum, default_value = "gnb")]
    pub rep: RepArg,
    /// Normal basis type; defaults to the smallest available.
    #[arg(short)]
    pub t: Option<usize>,
    /// Frobenius exponent of the self-power multiplier.
    #[arg(short, default_value_t = 1)]
    pub r: usize,
}

impl FieldArgs {
    pub fn spec(&self) -> Result<FieldSpec, Error> {
        match (self.rep, self.t) {
            (RepArg::Gbb, Some(_)) => Err(Error::InvalidParams("-t applies to --rep gnb only".into())),
            (RepArg::Gnb, Some(t)) => GnbParams::with_type(self.m, t).map(FieldSpec::Gnb),
            (rep, None) => FieldSpec::new(rep.into(), self.m),
        }
    }

    fn operation(&self, op: OpArg) -> Operation {
        match op {
            OpArg::Add => Operation::Add,
            OpArg::Mult => Operation::Mult,
            OpArg::Selfmult => Operation::SelfMult { r: self.r },
            OpArg::Invert => Operation::Invert,
        }
    }
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| format!("bad hex seed {s:?}: {e}"))
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Io(format!("netlist {p}")),
            other => Failure::Domain(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_DOMAIN;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_IO
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Params { m } => params(m, out, err),
        Command::Synth {
            op,
            field,
            out: path,
            cancel,
        } => {
            let spec = field.spec()?;
            let netlist = synthesize(&spec, &field, op, cancel)?;
            let circuit = Circuit::parse_netlist(&netlist).map_err(Error::from)?;
            if let Some(path) = path {
                fs::write(&path, &netlist).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            write!(out, "{}", circuit.resources())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            op,
            field,
            input,
            exhaustive,
            random,
            seed,
        } => {
            let spec = field.spec()?;
            let circuit = match &input {
                Some(path) => {
                    let text =
                        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    Circuit::parse_netlist(&text).map_err(Error::from)?
                }
                None => Circuit::parse_netlist(&synthesize(&spec, &field, op, false)?).map_err(Error::from)?,
            };
            let mode = if exhaustive {
                Mode::Exhaustive
            } else {
                Mode::Random {
                    samples: random.unwrap_or(DEFAULT_SAMPLES),
                    seed: seed.unwrap_or(DEFAULT_SEED),
                }
            };
            let operation = field.operation(op);
            match mode {
                Mode::Exhaustive => writeln!(out, "verify {operation} {} m={} exhaustive", spec.representation(), spec.degree())?,
                Mode::Random { samples, seed } => writeln!(
                    out,
                    "verify {operation} {} m={} random={samples} seed={seed:#x}",
                    spec.representation(),
                    spec.degree()
                )?,
            }
            let report = verify_circuit(&circuit, &spec, operation, mode)?;
            writeln!(out, "{report}")?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Table { m } => table(&m, out, err),
    }
}

/// Netlist text; inverters carry `# block` comments.
fn synthesize(spec: &FieldSpec, field: &FieldArgs, op: OpArg, cancel: bool) -> Result<String, Failure> {
    let circuit = match op {
        OpArg::Add => synth_add(spec.width())?,
        OpArg::Mult => synth_mult(spec)?.circuit,
        OpArg::Selfmult => synth_self_mult(spec, field.r)?.circuit,
        OpArg::Invert => {
            if cancel {
                return Err(Error::InvalidParams("--cancel applies to multipliers only".into()).into());
            }
            return Ok(synth_inverter(spec)?.to_netlist());
        }
    };
    Ok(if cancel { cancel_pairs(&circuit) } else { circuit }.to_netlist())
}

fn params(m: usize, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if m < 2 {
        return Err(Error::DegreeTooSmall(m).into());
    }
    writeln!(out, "m={m}")?;
    let ghost = check_ghost_bit_support(m);
    if ghost {
        writeln!(out, "ghost_bit=supported")?;
        writeln!(out, "ghost_bit_width={}", m + 1)?;
    } else {
        writeln!(out, "ghost_bit=unsupported")?;
    }
    match find_gnb_type(m) {
        Ok(p) => {
            writeln!(out, "gnb_type={}", p.gnb_type())?;
            writeln!(out, "gnb_p={}", p.prime())?;
            writeln!(out, "gnb_u={}", p.u())?;
            if m <= 16 {
                let table: Vec<String> = p.f_table().iter().map(usize::to_string).collect();
                writeln!(out, "f_table={}", table.join(","))?;
            }
            if m <= 64 {
                writeln!(out, "gnb_certified={}", gnb_verify_isomorphism(&p)?)?;
            }
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "gnb=none")?;
            writeln!(err, "{e}")?;
            Ok(if ghost { EXIT_OK } else { EXIT_DOMAIN })
        }
    }
}

fn table(ms: &[usize], out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    writeln!(
        out,
        "{:>4} {:>4} {:>3} | {:>9} {:>9} | {:>15} {:>17} | {:>15} {:>19} {:>13}",
        "m", "rep", "t", "add_depth", "add_gates", "mult_depth/bnd", "mult_gates/bnd", "inv_depth/bnd", "inv_gates/bnd", "inv_qubits"
    )?;
    for &m in ms {
        for rep in [Representation::GhostBit, Representation::Gnb] {
            let spec = match FieldSpec::new(rep, m) {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "skipping m={m} {rep}: {e}")?;
                    continue;
                }
            };
            let w = spec.width();
            let add = synth_add(w)?;
            let mult = synth_mult(&spec)?.circuit;
            let (mult_depth_bound, mult_gate_bound) = match &spec {
                FieldSpec::GhostBit(_) => (m + 1, (m + 1) * (m + 1)),
                FieldSpec::Gnb(p) => (p.cost_factor() * m - 1, p.cost_factor() * m * m - m),
            };
            let t = match &spec {
                FieldSpec::Gnb(p) => p.gnb_type().to_string(),
                FieldSpec::GhostBit(_) => "-".into(),
            };
            let inv = if m >= 3 {
                let r = synth_inverter(&spec)?.circuit.resources();
                let b = bounds_for(&spec)?;
                (
                    format!("{}/{}", r.depth, b.depth),
                    format!("{}/{}", r.gate_count(), b.gates),
                    format!("{}/{}", r.qubits, b.qubits),
                )
            } else {
                ("-".into(), "-".into(), "-".into())
            };
            writeln!(
                out,
                "{:>4} {:>4} {:>3} | {:>9} {:>9} | {:>15} {:>17} | {:>15} {:>19} {:>13}",
                m,
                rep,
                t,
                add.depth().depth,
                add.len(),
                format!("{}/{}", mult.depth().depth, mult_depth_bound),
                format!("{}/{}", mult.len(), mult_gate_bound),
                inv.0,
                inv.1,
                inv.2
            )?;
        }
    }
    writeln!(out, "# polynomial basis (cited, not measured): addition depth O(1), gates O(m);")?;
    writeln!(out, "#   multiplication depth O(m), gates O(m^2); extended Euclid inversion depth O(m^2), gates O(m^3)")?;
    writeln!(out, "# ghost-bit and normal basis inversion: depth O(m log m), gates O(m^2 log m)")?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("gf2m-synth").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hex_seeds() {
        assert_eq!(parse_hex("0xB10F"), Ok(0xB10F));
        assert_eq!(parse_hex("7"), Ok(7));
        assert!(parse_hex("zz").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["synth", "frobnicate", "-m", "4"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["synth", "mult", "--rep", "gbb", "-m", "5"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["synth", "mult", "--rep", "gbb", "-m", "4", "-t", "2"]).0, EXIT_DOMAIN);
    }

    #[test]
    fn params_exit_codes() {
        assert_eq!(call(&["params", "-m", "5"]).0, EXIT_OK);
        // m = 8: no ghost-bit basis and no normal basis.
        assert_eq!(call(&["params", "-m", "8"]).0, EXIT_DOMAIN);
    }
}
