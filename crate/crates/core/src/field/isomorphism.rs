//! Certifies the F-table multiplication against an explicit Gauss period
//! construction inside `GF(2^(tm))`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gnb::GnbParams;
use crate::arith::pow_mod;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poly::Gf2Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsomorphismCheck {
    /// Largest `tm` for which the extension field is built explicitly.
    pub max_extension_degree: usize,
    /// Largest `m` for which all `2^m x 2^m` pairs are compared. Above it
    /// only basis pairs are compared, which is already complete because
    /// both products are bilinear.
    pub exhaustive_max_degree: usize,
    /// Random samples per property when falling back to the algebraic suite.
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for IsomorphismCheck {
    fn default() -> Self {
        Self {
            max_extension_degree: 24,
            exhaustive_max_degree: 8,
            random_trials: 100,
            seed: 0xB10F,
        }
    }
}

/// [`IsomorphismCheck::run`] with default settings.
pub fn gnb_verify_isomorphism(params: &GnbParams) -> Result<bool> {
    IsomorphismCheck::default().run(params)
}

impl IsomorphismCheck {
    pub fn run(&self, params: &GnbParams) -> Result<bool> {
        let n = params.gnb_type() * params.degree();
        if n <= self.max_extension_degree && n < 63 {
            self.explicit(params)
        } else {
            self.algebraic(params)
        }
    }

    fn explicit(&self, params: &GnbParams) -> Result<bool> {
        let (m, t, p) = (params.degree(), params.gnb_type(), params.prime());
        let n = t * m;
        let modulus = Gf2Poly::smallest_irreducible(n);
        let group_order = (1u64 << n) - 1;
        if group_order % p as u64 != 0 {
            return Err(Error::ConstructionFailed(format!(
                "{p} does not divide 2^{n} - 1"
            )));
        }
        let cofactor = group_order / p as u64;
        let one = Gf2Poly::one();
        let root = (2..=group_order)
            .map(|g| Gf2Poly::from_u64(g).pow_mod(cofactor, &modulus))
            .find(|candidate| *candidate != one)
            .ok_or_else(|| Error::ConstructionFailed(format!("no primitive {p}-th root of unity")))?;
        if root.pow_mod(p as u64, &modulus) != one {
            return Err(Error::ConstructionFailed("root has the wrong order".into()));
        }

        // eta = sum_j root^(u^j), basis element i is eta^(2^i).
        let eta = (0..t).fold(Gf2Poly::zero(), |acc, j| {
            let e = pow_mod(params.u() as u64, j as u64, p as u64);
            acc.add(&root.pow_mod(e, &modulus))
        });
        let mut basis = Vec::with_capacity(m);
        let mut current = eta;
        for _ in 0..m {
            let next = current.mul_mod(&current, &modulus);
            basis.push(current);
            current = next;
        }
        if !linearly_independent(&basis, n) {
            return Ok(false);
        }

        let image = |a: &Bits| -> Gf2Poly {
            a.iter()
                .zip(&basis)
                .filter(|(&bit, _)| bit)
                .fold(Gf2Poly::zero(), |acc, (_, b)| acc.add(b))
        };
        let agrees = |a: &Bits, b: &Bits| -> Result<bool> {
            let lhs = image(&params.mult(a, b)?);
            let rhs = image(a).mul_mod(&image(b), &modulus);
            Ok(lhs == rhs)
        };

        for i in 0..m {
            for j in 0..m {
                if !agrees(&Bits::unit(m, i), &Bits::unit(m, j))? {
                    return Ok(false);
                }
            }
        }
        if m <= self.exhaustive_max_degree {
            for x in 0..1u64 << m {
                for y in 0..1u64 << m {
                    if !agrees(&Bits::from_u64(x, m), &Bits::from_u64(y, m))? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Commutativity, identity, Frobenius consistency and associativity on
    /// random elements.
    fn algebraic(&self, params: &GnbParams) -> Result<bool> {
        let m = params.degree();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let one = params.one();
        for _ in 0..self.random_trials {
            let a = Bits::random(m, &mut rng);
            let b = Bits::random(m, &mut rng);
            let c = Bits::random(m, &mut rng);
            let ab = params.mult(&a, &b)?;
            if ab != params.mult(&b, &a)?
                || params.mult(&a, &one)? != a
                || params.mult(&a, &a)? != params.square(&a)?
                || params.mult(&ab, &c)? != params.mult(&a, &params.mult(&b, &c)?)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn linearly_independent(vectors: &[Gf2Poly], n: usize) -> bool {
    let mut rows: Vec<u64> = vectors.iter().map(|v| v.to_bits(n).to_u64()).collect();
    let mut rank = 0;
    for bit in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && (*row >> bit) & 1 == 1 {
                *row ^= pivot_row;
            }
        }
        rank += 1;
    }
    rank == vectors.len()
}
