//! Gaussian normal bases.
//!
//! A type `t` basis for `GF(2^m)` exists when `p = tm + 1` is prime and the
//! index of `<2>` in `(Z/p)^*` is coprime to `m`. Multiplication is driven by
//! the F-table: `F(2^i u^j mod p) = i` with `u` of order `t`.

use crate::arith::{gcd, is_prime, mult_order, pow_mod};
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Default upper limit on the type searched by [`find_gnb_type`].
pub const DEFAULT_MAX_TYPE: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnbParams {
    m: usize,
    t: usize,
    p: usize,
    u: usize,
    /// `f_table[k - 1] = F(k)` for `k = 1..p-1`.
    f_table: Vec<usize>,
}

/// Whether a type-`t` Gaussian normal basis exists for degree `m`.
pub fn gnb_type_valid(m: usize, t: usize) -> bool {
    if m < 2 || t < 1 {
        return false;
    }
    let p = (t * m + 1) as u64;
    if !is_prime(p) {
        return false;
    }
    let ord2 = mult_order(2, p).expect("p is an odd prime");
    gcd((p - 1) / ord2, m as u64) == 1
}

/// Smallest residue of multiplicative order exactly `t` modulo prime `p`.
fn smallest_of_order(t: usize, p: usize) -> Option<usize> {
    (1..p).find(|&u| mult_order(u as u64, p as u64) == Some(t as u64))
}

/// The smallest type with a Gaussian normal basis, searching `t <= 30`.
pub fn find_gnb_type(m: usize) -> Result<GnbParams> {
    find_gnb_type_bounded(m, DEFAULT_MAX_TYPE)
}

pub fn find_gnb_type_bounded(m: usize, max_type: usize) -> Result<GnbParams> {
    if m < 2 {
        return Err(Error::DegreeTooSmall(m));
    }
    let not_found = Error::NoGnbFound { m, max_type };
    if m % 8 == 0 {
        return Err(not_found);
    }
    let t = (1..=max_type).find(|&t| gnb_type_valid(m, t)).ok_or(not_found)?;
    GnbParams::with_type(m, t)
}

impl GnbParams {
    /// Type-`t` parameters with the smallest suitable `u`.
    pub fn with_type(m: usize, t: usize) -> Result<Self> {
        if !gnb_type_valid(m, t) {
            return Err(Error::InvalidParams(format!(
                "no type {t} Gaussian normal basis for m = {m}"
            )));
        }
        let u = smallest_of_order(t, t * m + 1).expect("a cyclic group of order tm has an element of order t");
        Self::with_u(m, t, u)
    }

    /// Builds the parameters for an explicit `u`, validating every condition.
    pub fn with_u(m: usize, t: usize, u: usize) -> Result<Self> {
        if !gnb_type_valid(m, t) {
            return Err(Error::InvalidParams(format!(
                "no type {t} Gaussian normal basis for m = {m}"
            )));
        }
        let p = t * m + 1;
        if u == 0 || u >= p || mult_order(u as u64, p as u64) != Some(t as u64) {
            return Err(Error::InvalidParams(format!(
                "u = {u} does not have order {t} modulo {p}"
            )));
        }
        let mut f_table = vec![usize::MAX; p - 1];
        for j in 0..t {
            let uj = pow_mod(u as u64, j as u64, p as u64);
            for i in 0..m {
                let k = (pow_mod(2, i as u64, p as u64) * uj % p as u64) as usize;
                if f_table[k - 1] != usize::MAX {
                    return Err(Error::InvalidParams(format!(
                        "residue {k} covered twice by (i, j) pairs"
                    )));
                }
                f_table[k - 1] = i;
            }
        }
        Ok(Self { m, t, p, u, f_table })
    }

    /// Assembles parameters without any validation. Intended for negative
    /// tests that need a deliberately broken F-table.
    #[doc(hidden)]
    pub fn from_raw_parts(m: usize, t: usize, p: usize, u: usize, f_table: Vec<usize>) -> Self {
        Self { m, t, p, u, f_table }
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn gnb_type(&self) -> usize {
        self.t
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    pub fn u(&self) -> usize {
        self.u
    }

    /// `t + (t mod 2)`, the effective multiplier cost factor.
    pub fn cost_factor(&self) -> usize {
        self.t + self.t % 2
    }

    /// `F(k)` for `1 <= k <= p - 1`.
    pub fn f(&self, k: usize) -> usize {
        self.f_table[k - 1]
    }

    pub fn f_table(&self) -> &[usize] {
        &self.f_table
    }

    /// The bilinear terms of the product, one entry per term family.
    ///
    /// Each `(x, y)` contributes `a_{x+i} b_{y+i}` to `c_i` for every
    /// `i`, indices mod `m`. The first `tm - 1` entries come from
    /// `k = 1..tm-1`; for odd `t` the `m` extra families follow.
    pub fn product_terms(&self) -> Vec<(usize, usize)> {
        let m = self.m;
        let mut terms: Vec<(usize, usize)> = (1..self.t * m)
            .map(|k| (self.f(k + 1), self.f(self.p - k)))
            .collect();
        if self.t % 2 == 1 {
            for k in 1..=m / 2 {
                terms.push((k - 1, (k - 1 + m / 2) % m));
                terms.push(((k - 1 + m / 2) % m, k - 1));
            }
        }
        terms
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

    pub fn mult(&self, a: &Bits, b: &Bits) -> Result<Bits> {
        self.check(a)?;
        self.check(b)?;
        let m = self.m;
        let terms = self.product_terms();
        Ok((0..m)
            .map(|i| {
                terms
                    .iter()
                    .fold(false, |acc, &(x, y)| acc ^ (a[(x + i) % m] & b[(y + i) % m]))
            })
            .collect())
    }

    /// Squaring is a cyclic right shift: `c_i = a_{i-1}`.
    pub fn square(&self, a: &Bits) -> Result<Bits> {
        self.frobenius(a, 1)
    }

    /// `a^(2^s)`: cyclic right shift by `s`.
    pub fn frobenius(&self, a: &Bits, s: usize) -> Result<Bits> {
        self.check(a)?;
        let m = self.m;
        Ok((0..m).map(|i| a[(i + m - s % m) % m]).collect())
    }

    /// The identity element is Frobenius-fixed, hence all ones.
    pub fn one(&self) -> Bits {
        Bits::ones(self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_table_example_m5() {
        let params = GnbParams::with_u(5, 2, 10).unwrap();
        assert_eq!(params.f_table(), &[0, 1, 3, 2, 4, 4, 2, 3, 1, 0]);
        // The smallest u of order 2 mod 11 is 10, so the search agrees.
        let found = find_gnb_type(5).unwrap();
        assert_eq!((found.gnb_type(), found.prime(), found.u()), (2, 11, 10));
        assert_eq!(found.f_table(), params.f_table());
    }

    #[test]
    fn standard_degrees() {
        for (m, t) in [(163, 4), (233, 2), (283, 6), (409, 4), (571, 10)] {
            assert_eq!(find_gnb_type(m).unwrap().gnb_type(), t, "m = {m}");
        }
    }

    #[test]
    fn each_degree_appears_t_times() {
        for m in [4, 5, 6, 7, 9, 10, 11, 12, 163] {
            let params = find_gnb_type(m).unwrap();
            let mut counts = vec![0; m];
            for &i in params.f_table() {
                counts[i] += 1;
            }
            assert!(counts.iter().all(|&c| c == params.gnb_type()), "m = {m}");
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(find_gnb_type(8), Err(Error::NoGnbFound { .. })));
        assert!(matches!(find_gnb_type(1), Err(Error::DegreeTooSmall(1))));
        assert!(GnbParams::with_u(5, 2, 3).is_err());
        assert!(GnbParams::with_u(5, 3, 1).is_err());
        assert!(GnbParams::with_type(5, 3).is_err());
        assert_eq!(GnbParams::with_type(4, 3).unwrap().u(), 3);
        assert!(matches!(
            find_gnb_type_bounded(163, 3),
            Err(Error::NoGnbFound { m: 163, max_type: 3 })
        ));
    }

    #[test]
    fn m5_term_expansion() {
        // c_i = a_{1+i}b_i + a_{3+i}b_{1+i} + a_{2+i}b_{3+i} + a_{4+i}b_{2+i}
        //     + a_{4+i}b_{4+i} + a_{2+i}b_{4+i} + a_{3+i}b_{2+i}
        //     + a_{1+i}b_{3+i} + a_i b_{1+i}
        let params = find_gnb_type(5).unwrap();
        assert_eq!(
            params.product_terms(),
            [(1, 0), (3, 1), (2, 3), (4, 2), (4, 4), (2, 4), (3, 2), (1, 3), (0, 1)]
        );
    }

    #[test]
    fn squaring_by_multiplication_m5() {
        let params = find_gnb_type(5).unwrap();
        for v in 0..32 {
            let a = Bits::from_u64(v, 5);
            let shifted: Bits = (0..5).map(|i| a[(i + 4) % 5]).collect();
            assert_eq!(params.mult(&a, &a).unwrap(), shifted);
            assert_eq!(params.square(&a).unwrap(), shifted);
            assert_eq!(params.mult(&a, &params.one()).unwrap(), a);
        }
        assert_eq!(
            params.square(&Bits::from([1, 0, 0, 0, 0])).unwrap(),
            Bits::from([0, 1, 0, 0, 0])
        );
    }

    #[test]
    fn odd_type_multiplication_is_commutative() {
        // m = 4 has a type 1 basis (p = 5).
        let params = find_gnb_type(4).unwrap();
        assert_eq!(params.gnb_type(), 1);
        for x in 0..16 {
            for y in 0..16 {
                let (a, b) = (Bits::from_u64(x, 4), Bits::from_u64(y, 4));
                assert_eq!(params.mult(&a, &b).unwrap(), params.mult(&b, &a).unwrap());
            }
        }
    }
}
