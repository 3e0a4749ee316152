use crate::circuit::{Register, Wire};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Relabeling of a register's coefficient positions.
///
/// `mapping[i]` is the register position that holds (when reading) or
/// receives (when writing) coefficient `i`. Powers of the Frobenius map
/// are free this way: no gates, only different wire indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirePermutation {
    mapping: Vec<usize>,
}

impl WirePermutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &p in &mapping {
            if p >= mapping.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("{mapping:?} is not a bijection")));
            }
        }
        Ok(Self { mapping })
    }

    pub fn identity(len: usize) -> Self {
        Self {
            mapping: (0..len).collect(),
        }
    }

    /// Reads `x^(2^s)` out of a register holding `x`.
    pub fn frobenius_read(spec: &FieldSpec, s: usize) -> Self {
        let w = spec.width();
        let mut mapping = vec![0; w];
        for j in 0..w {
            mapping[spec.frobenius_target(j, s)] = j;
        }
        Self { mapping }
    }

    /// Writes `y^(2^s)` into a register when the circuit produces `y`.
    pub fn frobenius_write(spec: &FieldSpec, s: usize) -> Self {
        Self {
            mapping: (0..spec.width()).map(|i| spec.frobenius_target(i, s)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0; self.mapping.len()];
        for (i, &p) in self.mapping.iter().enumerate() {
            mapping[p] = i;
        }
        Self { mapping }
    }

    /// Wire carrying coefficient `i`, for every `i`.
    pub fn wires(&self, register: &Register) -> Vec<Wire> {
        assert_eq!(register.len, self.mapping.len(), "register width mismatch");
        self.mapping.iter().map(|&p| register.wire(p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits;

    #[test]
    fn rejects_non_bijections() {
        assert!(WirePermutation::new(vec![0, 0, 1]).is_err());
        assert!(WirePermutation::new(vec![0, 3, 1]).is_err());
        let p = WirePermutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.inverse().mapping(), &[1, 2, 0]);
    }

    #[test]
    fn read_map_matches_frobenius() {
        for spec in [FieldSpec::ghost_bit(10).unwrap(), FieldSpec::gnb(7).unwrap()] {
            let x = Bits::from_u64(0b10_1100_1011, spec.width());
            for s in 0..spec.degree() + 2 {
                let read = WirePermutation::frobenius_read(&spec, s);
                let via_read: Bits = read.mapping().iter().map(|&p| x[p]).collect();
                assert_eq!(via_read, spec.frobenius(&x, s).unwrap());

                let write = WirePermutation::frobenius_write(&spec, s);
                let mut via_write = Bits::zeros(spec.width());
                for (i, &p) in write.mapping().iter().enumerate() {
                    via_write[p] = x[i];
                }
                assert_eq!(via_write, spec.frobenius(&x, s).unwrap());
            }
        }
    }
}
