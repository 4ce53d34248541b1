use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::EXPONENT_LIMIT;

/// A monomial as its exponent vector. The unit monomial is all zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// `x_i^e` in a ring with `nvars` variables.
    pub fn var_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(self.divides(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.len(), other.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| match a.checked_add(b) {
                Some(s) if s <= EXPONENT_LIMIT => Ok(s),
                _ => Err(Error::ExponentOverflow {
                    limit: EXPONENT_LIMIT,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, n: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| match a.checked_mul(n) {
                Some(s) if s <= EXPONENT_LIMIT => Ok(s),
                _ => Err(Error::ExponentOverflow {
                    limit: EXPONENT_LIMIT,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)`: the exponents of `self` in excess of `other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Keeps only the coordinates listed in `support`.
    pub fn project(&self, support: &[usize]) -> Monomial {
        Monomial {
            exps: support.iter().map(|&i| self.exps[i]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[1, 1]).divides(&m(&[2, 0])));
        assert!(m(&[3, 2]).divides(&m(&[3, 2])));
        assert!(m(&[1]).try_divides(&m(&[1, 2])).is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(m(&[1, 2]).mul(&m(&[0, 3])).unwrap(), m(&[1, 5]));
        assert_eq!(m(&[4, 1]).quotient_by_gcd(&m(&[2, 3])), m(&[2, 0]));
        assert_eq!(m(&[4, 1]).lcm(&m(&[2, 3])), m(&[4, 3]));
        assert_eq!(m(&[1, 2]).pow(3).unwrap(), m(&[3, 6]));
    }

    #[test]
    fn overflow_is_checked() {
        let big = m(&[EXPONENT_LIMIT, 0]);
        assert!(matches!(
            big.mul(&m(&[1, 0])),
            Err(Error::ExponentOverflow { .. })
        ));
        assert!(m(&[2, 0]).pow(u32::MAX).is_err());
    }
}
