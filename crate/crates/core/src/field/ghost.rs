//! Ghost-bit basis: `GF(2^m)` embedded in `GF(2)[x]/(x^(m+1) + 1)`.
//!
//! Requires `m + 1` prime with 2 a generator of `(Z/(m+1))^*`, which is
//! exactly the condition for the all-one polynomial of degree `m` to be
//! irreducible. Elements are `m + 1` bit vectors; a vector and its
//! complement denote the same field element.

use crate::arith::{is_prime, mult_order, pow_mod};
use crate::bits::Bits;
use crate::error::{Error, Result};

/// True iff `m + 1` is prime and 2 has multiplicative order `m` modulo `m + 1`.
pub fn check_ghost_bit_support(m: usize) -> bool {
    let n = m as u64 + 1;
    m >= 2 && is_prime(n) && mult_order(2, n) == Some(m as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostBitField {
    m: usize,
    square_perm: Vec<usize>,
}

impl GhostBitField {
    pub fn new(m: usize) -> Result<Self> {
        if !check_ghost_bit_support(m) {
            return Err(Error::UnsupportedDegree(m));
        }
        let n = m + 1;
        Ok(Self {
            m,
            square_perm: (0..n).map(|i| 2 * i % n).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// Coefficient count, `m + 1`.
    pub fn width(&self) -> usize {
        self.m + 1
    }

    /// `pi(i) = 2i mod (m+1)`: squaring moves coefficient `i` to `pi(i)`.
    pub fn square_perm(&self) -> &[usize] {
        &self.square_perm
    }

    /// Position that coefficient `i` moves to under `a -> a^(2^s)`.
    pub fn frobenius_target(&self, i: usize, s: usize) -> usize {
        let n = self.width() as u64;
        (i as u64 * pow_mod(2, s as u64, n) % n) as usize
    }

    fn check(&self, a: &Bits) -> Result<()> {
        if a.len() == self.width() {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                expected: self.width(),
                found: a.len(),
            })
        }
    }

    /// Polynomial basis (all-one modulus) to ghost-bit: append a zero bit.
    pub fn embed(&self, a: &Bits) -> Result<Bits> {
        if a.len() != self.m {
            return Err(Error::DegreeMismatch {
                expected: self.m,
                found: a.len(),
            });
        }
        Ok(a.iter().copied().chain(std::iter::once(false)).collect())
    }

    /// Ghost-bit to polynomial basis: drop the ghost bit, XOR it into the rest.
    pub fn retract(&self, a: &Bits) -> Result<Bits> {
        self.check(a)?;
        let ghost = a[self.m];
        Ok(a[..self.m].iter().map(|&b| b ^ ghost).collect())
    }

    pub fn square(&self, a: &Bits) -> Result<Bits> {
        self.frobenius(a, 1)
    }

    /// `a^(2^s)`, a pure coefficient permutation.
    pub fn frobenius(&self, a: &Bits, s: usize) -> Result<Bits> {
        self.check(a)?;
        let mut out = Bits::zeros(self.width());
        for (i, &bit) in a.iter().enumerate() {
            out[self.frobenius_target(i, s)] = bit;
        }
        Ok(out)
    }

    /// Cyclic convolution: `c_i = sum_j a_j b_{(i-j) mod (m+1)}`.
    pub fn mult(&self, a: &Bits, b: &Bits) -> Result<Bits> {
        self.check(a)?;
        self.check(b)?;
        let n = self.width();
        let mut out = Bits::zeros(n);
        for (j, _) in a.iter().enumerate().filter(|(_, &bit)| bit) {
            for (k, _) in b.iter().enumerate().filter(|(_, &bit)| bit) {
                out[(j + k) % n] ^= true;
            }
        }
        Ok(out)
    }

    pub fn one(&self) -> Bits {
        Bits::unit(self.width(), 0)
    }

    /// Whether two vectors denote the same field element.
    pub fn same_element(&self, a: &Bits, b: &Bits) -> Result<bool> {
        Ok(self.retract(a)? == self.retract(b)?)
    }
}
