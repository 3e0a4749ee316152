//! Classical arithmetic in `GF(2^m)` for the representations the
//! synthesizers target, plus parameter discovery and validation.

mod chain;
mod ghost;
mod gnb;
mod isomorphism;

use std::fmt;
use std::str::FromStr;

pub use chain::{addition_chain, CombineStep, InverterPlan, LadderStep};
pub use ghost::{check_ghost_bit_support, GhostBitField};
pub use gnb::{find_gnb_type, find_gnb_type_bounded, gnb_type_valid, GnbParams, DEFAULT_MAX_TYPE};
pub use isomorphism::{gnb_verify_isomorphism, IsomorphismCheck};

use crate::bits::Bits;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    GhostBit,
    Gnb,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::GhostBit => "gbb",
            Representation::Gnb => "gnb",
        })
    }
}

impl FromStr for Representation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "gbb" | "ghost" | "ghost-bit" => Ok(Representation::GhostBit),
            "gnb" => Ok(Representation::Gnb),
            other => Err(format!("unknown representation {other:?} (expected gbb or gnb)")),
        }
    }
}

/// A validated field representation with its derived tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    GhostBit(GhostBitField),
    Gnb(GnbParams),
}

impl From<GhostBitField> for FieldSpec {
    fn from(f: GhostBitField) -> Self {
        FieldSpec::GhostBit(f)
    }
}

impl From<GnbParams> for FieldSpec {
    fn from(p: GnbParams) -> Self {
        FieldSpec::Gnb(p)
    }
}

impl FieldSpec {
    pub fn ghost_bit(m: usize) -> Result<Self> {
        GhostBitField::new(m).map(Self::GhostBit)
    }

    /// Gaussian normal basis of the smallest available type.
    pub fn gnb(m: usize) -> Result<Self> {
        find_gnb_type(m).map(Self::Gnb)
    }

    pub fn new(rep: Representation, m: usize) -> Result<Self> {
        match rep {
            Representation::GhostBit => Self::ghost_bit(m),
            Representation::Gnb => Self::gnb(m),
        }
    }

    pub fn representation(&self) -> Representation {
        match self {
            FieldSpec::GhostBit(_) => Representation::GhostBit,
            FieldSpec::Gnb(_) => Representation::Gnb,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::GhostBit(f) => f.degree(),
            FieldSpec::Gnb(p) => p.degree(),
        }
    }

    /// Bits per element: `m + 1` for ghost-bit, `m` for normal basis.
    pub fn width(&self) -> usize {
        match self {
            FieldSpec::GhostBit(f) => f.width(),
            FieldSpec::Gnb(p) => p.degree(),
        }
    }

    pub fn one(&self) -> Bits {
        match self {
            FieldSpec::GhostBit(f) => f.one(),
            FieldSpec::Gnb(p) => p.one(),
        }
    }

    pub fn zero(&self) -> Bits {
        Bits::zeros(self.width())
    }

    pub fn mul(&self, a: &Bits, b: &Bits) -> Result<Bits> {
        match self {
            FieldSpec::GhostBit(f) => f.mult(a, b),
            FieldSpec::Gnb(p) => p.mult(a, b),
        }
    }

    pub fn square(&self, a: &Bits) -> Result<Bits> {
        self.frobenius(a, 1)
    }

    /// `a^(2^s)`.
    pub fn frobenius(&self, a: &Bits, s: usize) -> Result<Bits> {
        match self {
            FieldSpec::GhostBit(f) => f.frobenius(a, s),
            FieldSpec::Gnb(p) => p.frobenius(a, s),
        }
    }

    /// Position that coefficient `i` occupies in `a^(2^s)`.
    pub fn frobenius_target(&self, i: usize, s: usize) -> usize {
        match self {
            FieldSpec::GhostBit(f) => f.frobenius_target(i, s),
            FieldSpec::Gnb(p) => (i + s) % p.degree(),
        }
    }

    /// Field equality, which for ghost-bit vectors is equality after
    /// retraction.
    pub fn same_element(&self, a: &Bits, b: &Bits) -> Result<bool> {
        match self {
            FieldSpec::GhostBit(f) => f.same_element(a, b),
            FieldSpec::Gnb(_) => Ok(a == b),
        }
    }

    pub fn is_zero(&self, a: &Bits) -> Result<bool> {
        self.same_element(a, &self.zero())
    }

    /// Canonical vector for element number `index` in `0..2^m`: the raw
    /// bits for a normal basis, the embedded polynomial for ghost-bit.
    pub fn element_from_index(&self, index: u64) -> Bits {
        let m = self.degree();
        let bits = Bits::from_u64(index, m);
        match self {
            FieldSpec::GhostBit(f) => f.embed(&bits).expect("length is m"),
            FieldSpec::Gnb(_) => bits,
        }
    }
}

/// Multiplicative inverse via the Itoh-Tsujii chain; zero maps to zero.
pub fn itoh_tsujii_inverse(spec: &FieldSpec, a: &Bits) -> Result<Bits> {
    let plan = addition_chain(spec.degree())?;
    let mut regs: Vec<Bits> = vec![spec.zero(); plan.register_count()];
    regs[0] = spec.mul(a, &spec.one())?;
    for step in &plan.ladder_steps {
        let src = &regs[step.source];
        let power = spec.frobenius(src, step.power)?;
        regs[step.target] = spec.mul(src, &power)?;
    }
    for step in &plan.combine_steps {
        let operand = spec.frobenius(&regs[step.operand], step.operand_frobenius)?;
        regs[step.target] = spec.mul(&regs[step.accumulator], &operand)?;
    }
    spec.square(&regs[plan.output_register()])
}
