//! Exact arithmetic on monomials and monomial ideals over a weighted polynomial ring.

mod ideal;
mod monomial;
mod parse;
mod ring;

pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use parse::{parse_monomial, MonomialSyntaxError};
pub use ring::{same_ring, GradedRing, WEIGHT_LIMIT};

use std::sync::Arc;

/// Largest exponent any monomial may carry; exceeding it is an
/// [`crate::Error::ExponentOverflow`], never a wraparound.
pub const EXPONENT_LIMIT: u32 = 1 << 24;

/// Calls `f` on every exponent vector of weighted degree exactly `degree`.
/// Variables are visited in ring order; the enumeration is finite because
/// all weights are positive.
pub fn for_each_monomial_of_degree(
    ring: &GradedRing,
    degree: i64,
    f: &mut dyn FnMut(&Monomial),
) {
    if degree < 0 {
        return;
    }
    let n = ring.nvars();
    let mut exps = vec![0u32; n];
    fn rec(
        w: &[u32],
        i: usize,
        left: i64,
        exps: &mut Vec<u32>,
        f: &mut dyn FnMut(&Monomial),
    ) {
        if i == w.len() {
            if left == 0 {
                f(&Monomial::new(exps.clone()));
            }
            return;
        }
        let wi = w[i] as i64;
        let max = left / wi;
        for e in (0..=max).rev() {
            exps[i] = e as u32;
            rec(w, i + 1, left - e * wi, exps, f);
        }
        exps[i] = 0;
    }
    rec(ring.weights(), 0, degree, &mut exps, f);
}

/// Every monomial of weighted degree at most `bound`, by increasing degree.
pub fn monomials_up_to(ring: &GradedRing, bound: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=bound {
        for_each_monomial_of_degree(ring, d, &mut |m| out.push(m.clone()));
    }
    out
}

/// Weighted degree of `m`, with the dimension check.
pub fn weighted_degree(ring: &GradedRing, m: &Monomial) -> crate::Result<i64> {
    ring.try_degree(m)
}

/// Builds an ideal from monomials written in the text grammar. Intended for
/// tests and examples; panics on malformed input.
pub fn ideal_from_strs(ring: &Arc<GradedRing>, gens: &[&str]) -> MonomialIdeal {
    let gens = gens
        .iter()
        .map(|s| parse_monomial(ring, s).unwrap_or_else(|e| panic!("{s:?}: {e}")))
        .collect();
    MonomialIdeal::minimalize(ring.clone(), gens)
}
