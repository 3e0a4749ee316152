//! Polynomials over GF(2) and the polynomial-basis reference field.
//!
//! This is the ground truth the ghost-bit and normal-basis arithmetic is
//! checked against. It shares no code with either of them.

use std::cmp::Ordering;
use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A polynomial over GF(2), coefficients packed little-endian into `u64`
/// limbs. Always normalized: no trailing zero limbs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    limbs: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    /// The monomial `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut p = Self::zero();
        p.set(n, true);
        p
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut p = Self::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b {
                p.set(i, true);
            }
        }
        p
    }

    /// Low 64 coefficients from an integer (bit `i` is the coefficient of `x^i`).
    pub fn from_u64(v: u64) -> Self {
        let mut p = Self { limbs: vec![v] };
        p.normalize();
        p
    }

    pub fn to_bits(&self, len: usize) -> Bits {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|limb| (limb >> (i % 64)) & 1 == 1)
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let (w, b) = (i / 64, i % 64);
        if w >= self.limbs.len() {
            if !value {
                return;
            }
            self.limbs.resize(w + 1, 0);
        }
        if value {
            self.limbs[w] |= 1 << b;
        } else {
            self.limbs[w] &= !(1 << b);
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (a, b) in limbs.iter_mut().zip(&short.limbs) {
            *a ^= b;
        }
        let mut p = Self { limbs };
        p.normalize();
        p
    }

    fn shl(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (w, b) = (n / 64, n % 64);
        let mut limbs = vec![0u64; self.limbs.len() + w + 1];
        for (i, &limb) in self.limbs.iter().enumerate() {
            limbs[i + w] ^= limb << b;
            if b != 0 {
                limbs[i + w + 1] ^= limb >> (64 - b);
            }
        }
        let mut p = Self { limbs };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        let Some(deg) = other.degree() else {
            return acc;
        };
        for i in 0..=deg {
            if other.coeff(i) {
                acc = acc.add(&self.shl(i));
            }
        }
        acc
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let mut quotient = Self::zero();
        let mut rem = self.clone();
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            quotient.set(r - d, true);
            rem = rem.add(&divisor.shl(r - d));
        }
        (quotient, rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one().rem(modulus);
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Inverse modulo `modulus` by the extended Euclidean algorithm.
    pub fn inv_mod(&self, modulus: &Self) -> Option<Self> {
        let (mut old_r, mut r) = (self.rem(modulus), modulus.clone());
        let (mut old_s, mut s) = (Self::one(), Self::zero());
        while !r.is_zero() {
            let (q, rem) = old_r.div_rem(&r);
            old_r = std::mem::replace(&mut r, rem);
            let next_s = old_s.add(&q.mul(&s));
            old_s = std::mem::replace(&mut s, next_s);
        }
        (old_r == Self::one()).then(|| old_s.rem(modulus))
    }

    /// Ben-Or irreducibility test: `gcd(x^(2^i) - x, f) = 1` for
    /// `i = 1..=deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let x = Self::monomial(1).rem(self);
        let mut power = x.clone();
        for _ in 0..n / 2 {
            power = power.mul_mod(&power, self);
            if power.add(&x).gcd(self) != Self::one() {
                return false;
            }
        }
        true
    }

    /// The smallest irreducible polynomial of degree `n`, ordering
    /// candidates by their coefficient vectors read as integers.
    pub fn smallest_irreducible(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        let mut candidate = Self::monomial(n);
        loop {
            if candidate.is_irreducible() {
                return candidate;
            }
            candidate = candidate.increment();
        }
    }

    fn increment(&self) -> Self {
        let mut p = self.clone();
        let mut i = 0;
        while p.coeff(i) {
            p.set(i, false);
            i += 1;
        }
        p.set(i, true);
        p
    }
}

impl PartialOrd for Gf2Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gf2Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let terms: Vec<String> = (0..=deg)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `GF(2)[x]/(f)` with elements as length-`m` coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyField {
    modulus: Gf2Poly,
    m: usize,
}

impl PolyField {
    pub fn new(modulus: Gf2Poly) -> Result<Self> {
        let m = modulus.degree().unwrap_or(0);
        if m < 2 {
            return Err(Error::DegreeTooSmall(m));
        }
        if !modulus.is_irreducible() {
            return Err(Error::InvalidParams(format!("{modulus:?} is reducible")));
        }
        Ok(Self { modulus, m })
    }

    /// The field defined by the all-one polynomial `x^m + ... + x + 1`.
    pub fn all_one(m: usize) -> Result<Self> {
        let modulus = Gf2Poly::from_bits(&vec![true; m + 1]);
        Self::new(modulus).map_err(|_| Error::UnsupportedDegree(m))
    }

    /// The field defined by the smallest irreducible polynomial of degree `m`.
    pub fn smallest(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::DegreeTooSmall(m));
        }
        Self::new(Gf2Poly::smallest_irreducible(m))
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.modulus
    }

    pub fn one(&self) -> Bits {
        Bits::unit(self.m, 0)
    }

    fn check(&self, a: &Bits) -> Result<()> {
        if a.len() == self.m {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                expected: self.m,
                found: a.len(),
            })
        }
    }

    pub fn mul(&self, a: &Bits, b: &Bits) -> Result<Bits> {
        self.check(a)?;
        self.check(b)?;
        let product = Gf2Poly::from_bits(a).mul_mod(&Gf2Poly::from_bits(b), &self.modulus);
        Ok(product.to_bits(self.m))
    }

    /// Multiplicative inverse; zero maps to zero.
    pub fn inverse(&self, a: &Bits) -> Result<Bits> {
        self.check(a)?;
        let p = Gf2Poly::from_bits(a);
        Ok(p.inv_mod(&self.modulus)
            .unwrap_or_else(Gf2Poly::zero)
            .to_bits(self.m))
    }
}
