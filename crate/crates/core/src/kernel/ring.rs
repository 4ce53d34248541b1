use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kernel::monomial::Monomial;

/// Largest accepted variable weight. Together with [`crate::kernel::EXPONENT_LIMIT`]
/// this keeps weighted degrees far inside `i64`.
pub const WEIGHT_LIMIT: u32 = 1 << 16;

/// A polynomial ring over a field with positively weighted variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedRing {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl GradedRing {
    pub fn new<S: Into<String>>(names: Vec<S>, weights: Vec<u32>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != weights.len() {
            return Err(Error::InvalidRing(format!(
                "{} variable names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable {name:?}")));
            }
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0 || w > WEIGHT_LIMIT) {
            return Err(Error::InvalidRing(format!(
                "weight {w} outside 1..={WEIGHT_LIMIT}"
            )));
        }
        Ok(Arc::new(GradedRing { names, weights }))
    }

    /// Standard grading: every variable has degree one.
    pub fn standard<S: Into<String>>(names: Vec<S>) -> Result<Arc<Self>> {
        let n = names.len();
        Self::new(names, vec![1; n])
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check(&self, m: &Monomial) -> Result<()> {
        if m.len() == self.nvars() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: m.len(),
            })
        }
    }

    /// Σ exponent·weight. Panics on a dimension mismatch; use
    /// [`GradedRing::try_degree`] for unchecked input.
    pub fn degree(&self, m: &Monomial) -> i64 {
        assert_eq!(m.len(), self.nvars(), "monomial/ring dimension mismatch");
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn try_degree(&self, m: &Monomial) -> Result<i64> {
        self.check(m)?;
        Ok(self.degree(m))
    }

    /// The subring on the variables in `support` (kept in ring order).
    pub fn restrict(&self, support: &[usize]) -> Arc<GradedRing> {
        Arc::new(GradedRing {
            names: support.iter().map(|&i| self.names[i].clone()).collect(),
            weights: support.iter().map(|&i| self.weights[i]).collect(),
        })
    }

    /// Renders a monomial as `X^2*Y`, or `1` for the unit.
    pub fn format(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .zip(&self.names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Two rings are interchangeable when they are the same allocation or structurally equal.
pub fn same_ring(a: &Arc<GradedRing>, b: &Arc<GradedRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
