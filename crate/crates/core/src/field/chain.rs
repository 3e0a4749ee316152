//! Itoh-Tsujii addition chain for `a^(-1) = a^(2^m - 2)`.
//!
//! With `b_k = a^(2^k - 1)` and `b_{i+j} = b_i * b_j^(2^i)`, the chain
//! doubles `b_1 -> b_2 -> ... -> b_{2^k1}` and then folds in the remaining
//! binary digits of `m - 1`. The inverse is `b_{m-1}^2`.
//!
//! Registers are numbered as the inverter lays them out: `0` holds the
//! input, `1..=k1` the ladder values `b_{2^j}`, and the rest the combine
//! accumulators.

use crate::arith::{floor_log2, hamming_weight};
use crate::error::{Error, Result};

/// `b_{2^(j+1)} = b_{2^j} * b_{2^j}^(2^(2^j))`, a self-power product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LadderStep {
    pub source: usize,
    pub target: usize,
    /// Frobenius exponent `r = 2^j` of the second factor.
    pub power: usize,
}

/// `b_{s + 2^k} = b_s * (b_{2^k})^(2^s)`, a general product with the
/// second operand read through the `2^s` Frobenius permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CombineStep {
    pub accumulator: usize,
    pub operand: usize,
    /// `s`, the exponent accumulated so far.
    pub operand_frobenius: usize,
    pub target: usize,
    /// `s + 2^k` after this step.
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverterPlan {
    pub m: usize,
    /// Binary expansion exponents of `m - 1`, strictly decreasing.
    pub k_list: Vec<u32>,
    pub ladder_steps: Vec<LadderStep>,
    pub combine_steps: Vec<CombineStep>,
}

impl InverterPlan {
    pub fn multiplications(&self) -> usize {
        self.ladder_steps.len() + self.combine_steps.len()
    }

    /// Number of `w`-wire registers, input included.
    pub fn register_count(&self) -> usize {
        1 + self.ladder_steps.len() + self.combine_steps.len()
    }

    /// Register receiving `b_{m-1}` (written squared by the inverter).
    pub fn output_register(&self) -> usize {
        self.combine_steps
            .last()
            .map(|c| c.target)
            .or_else(|| self.ladder_steps.last().map(|l| l.target))
            .unwrap_or(0)
    }
}

/// The chain for degree `m >= 2`.
pub fn addition_chain(m: usize) -> Result<InverterPlan> {
    if m < 2 {
        return Err(Error::DegreeTooSmall(m));
    }
    let e = (m - 1) as u64;
    let k1 = floor_log2(e);
    let k_list: Vec<u32> = (0..=k1).rev().filter(|&k| (e >> k) & 1 == 1).collect();
    debug_assert_eq!(k_list.len() as u32, hamming_weight(e));

    let ladder_steps = (0..k1 as usize)
        .map(|j| LadderStep {
            source: j,
            target: j + 1,
            power: 1 << j,
        })
        .collect();

    let mut combine_steps = Vec::new();
    let mut accumulator = k1 as usize;
    let mut exponent = 1usize << k1;
    for &k in &k_list[1..] {
        let target = k1 as usize + 1 + combine_steps.len();
        let step = CombineStep {
            accumulator,
            operand: k as usize,
            operand_frobenius: exponent,
            target,
            exponent: exponent + (1 << k),
        };
        combine_steps.push(step);
        accumulator = target;
        exponent = step.exponent;
    }
    debug_assert_eq!(exponent, m - 1);

    Ok(InverterPlan {
        m,
        k_list,
        ladder_steps,
        combine_steps,
    })
}
