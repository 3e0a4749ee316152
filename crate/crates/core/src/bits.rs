//! Fixed-width coefficient vectors.
//!
//! Index `i` holds the coefficient of `x^i` (polynomial and ghost-bit bases)
//! or of `eta^(2^i)` (normal basis). `Display` prints index 0 first.

use std::fmt;
use std::ops::{BitXor, BitXorAssign, Deref, DerefMut};
use std::str::FromStr;

use rand::Rng;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bits(Vec<bool>);

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Self(vec![false; len])
    }

    pub fn ones(len: usize) -> Self {
        Self(vec![true; len])
    }

    /// The unit vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = true;
        v
    }

    /// Little-endian: bit `i` of `value` becomes coefficient `i`.
    pub fn from_u64(value: u64, len: usize) -> Self {
        Self((0..len).map(|i| i < 64 && (value >> i) & 1 == 1).collect())
    }

    /// Inverse of [`Bits::from_u64`]; only meaningful for `len <= 64`.
    pub fn to_u64(&self) -> u64 {
        self.0
            .iter()
            .take(64)
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        Self((0..len).map(|_| rng.random::<bool>()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| !b)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|&b| !b).collect())
    }

    pub fn into_inner(self) -> Vec<bool> {
        self.0
    }
}

impl Deref for Bits {
    type Target = [bool];

    fn deref(&self) -> &[bool] {
        &self.0
    }
}

impl DerefMut for Bits {
    fn deref_mut(&mut self) -> &mut [bool] {
        &mut self.0
    }
}

impl From<Vec<bool>> for Bits {
    fn from(v: Vec<bool>) -> Self {
        Self(v)
    }
}

impl From<&[bool]> for Bits {
    fn from(v: &[bool]) -> Self {
        Self(v.to_vec())
    }
}

impl<const N: usize> From<[u8; N]> for Bits {
    fn from(v: [u8; N]) -> Self {
        Self(v.iter().map(|&b| b != 0).collect())
    }
}

impl FromIterator<bool> for Bits {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl BitXorAssign<&Bits> for Bits {
    fn bitxor_assign(&mut self, rhs: &Bits) {
        assert_eq!(self.len(), rhs.len(), "xor of vectors with different lengths");
        for (a, &b) in self.0.iter_mut().zip(rhs.iter()) {
            *a ^= b;
        }
    }
}

impl BitXor<&Bits> for &Bits {
    type Output = Bits;

    fn bitxor(self, rhs: &Bits) -> Bits {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({self})")
    }
}

/// Parses a string of `0`/`1` characters; commas, spaces and parentheses are
/// ignored so `(1,0,1,0,0)` and `10100` both work.
impl FromStr for Bits {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("unexpected character {other:?} in bit string")),
            })
            .collect()
    }
}
