//! Exact detection of eventually linear integer sequences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extint::ExtInt;

/// `value(n) = slope·n + intercept` for every `n` from `start_n` to the end of the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearLaw {
    pub slope: i64,
    pub intercept: i64,
    pub start_n: i64,
    pub stabilized: bool,
}

impl LinearLaw {
    pub fn eval(&self, n: i64) -> i64 {
        self.slope * n + self.intercept
    }
}

pub const DEFAULT_WINDOW: usize = 3;

/// Finds the longest exact linear tail of `values` (indexed from `first_n`).
///
/// The law is `stabilized` only when that tail has at least `window` points.
/// Otherwise the fields describe the line through the last two finite points,
/// or the last finite value as a constant.
pub fn fit_eventual_linear(values: &[ExtInt], first_n: i64, window: usize) -> LinearLaw {
    let window = window.max(2);
    let len = values.len();
    let n_of = |k: usize| first_n + k as i64;
    let not_stable = |slope: i64, intercept: i64, start_n: i64| LinearLaw {
        slope,
        intercept,
        start_n,
        stabilized: false,
    };
    let Some(last) = values.last().and_then(|v| v.finite()) else {
        let last_finite = values.iter().rev().find_map(|v| v.finite()).unwrap_or(0);
        return not_stable(0, last_finite, n_of(len.saturating_sub(1)));
    };
    if len < 2 {
        return not_stable(0, last, n_of(0));
    }
    let Some(prev) = values[len - 2].finite() else {
        return not_stable(0, last, n_of(len - 1));
    };
    let slope = last - prev;
    let intercept = last - slope * n_of(len - 1);
    let mut start = len - 1;
    while start > 0 && values[start - 1] == ExtInt::Finite(slope * n_of(start - 1) + intercept) {
        start -= 1;
    }
    LinearLaw {
        slope,
        intercept,
        start_n: n_of(start),
        stabilized: len - start >= window,
    }
}

/// The eventual form of `n ↦ min_i (a_i n + b_i)`: least slope, then least
/// intercept among the laws with that slope.
pub fn min_linear_combine(laws: &[(i64, i64)]) -> Result<(i64, i64)> {
    let a = laws.iter().map(|l| l.0).min().ok_or(Error::EmptyLawSet)?;
    let b = laws
        .iter()
        .filter(|l| l.0 == a)
        .map(|l| l.1)
        .min()
        .expect("at least one law has the least slope");
    Ok((a, b))
}
