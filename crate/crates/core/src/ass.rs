//! Associated primes of monomial subquotients.
//!
//! Every associated prime of `A/B` is `(B : m)` for a monomial `m ∈ A \ B`
//! and is generated by variables. The main algorithm tests each candidate
//! support `S ⊆ supp(B)` by localizing at the prime on `S` (setting the other
//! variables to 1) and asking whether the maximal ideal of the subring has a
//! nonzero socle in the localized quotient.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::kernel::{monomials_up_to, GradedRing, Monomial, MonomialIdeal};
use crate::quotient::Subquotient;

/// A prime generated by the variables in `support` (the zero ideal when empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        MonomialPrime { support }
    }

    pub fn zero() -> Self {
        MonomialPrime {
            support: Vec::new(),
        }
    }

    /// The maximal homogeneous ideal `(x_1, …, x_d)`.
    pub fn maximal(ring: &GradedRing) -> Self {
        MonomialPrime {
            support: (0..ring.nvars()).collect(),
        }
    }

    /// `Some(p)` when `ideal` is generated by distinct variables (or is zero).
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        let mut support = Vec::with_capacity(ideal.gens().len());
        for g in ideal.gens() {
            let s = g.support();
            if s.len() != 1 || g.exponents()[s[0]] != 1 {
                return None;
            }
            support.push(s[0]);
        }
        Some(MonomialPrime::new(support))
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn to_ideal(&self, ring: std::sync::Arc<GradedRing>) -> MonomialIdeal {
        MonomialIdeal::variables(ring, &self.support)
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.support.iter().all(|i| other.support.contains(i))
    }

    pub fn is_proper_subset_of(&self, other: &MonomialPrime) -> bool {
        self.support.len() < other.support.len() && self.is_subset_of(other)
    }

    /// `ideal ⊆ p`: every generator involves a variable of `p`.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal
            .gens()
            .iter()
            .all(|g| self.support.iter().any(|&i| g.exponents()[i] > 0))
    }

    pub fn var_names(&self, ring: &GradedRing) -> Vec<String> {
        self.support
            .iter()
            .map(|&i| ring.names()[i].clone())
            .collect()
    }

    /// Comma-joined variable names, e.g. `X,Y`; empty for the zero prime.
    pub fn label(&self, ring: &GradedRing) -> String {
        self.var_names(ring).join(",")
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .len()
            .cmp(&other.support.len())
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A canonically sorted set of monomial primes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssSet(BTreeSet<MonomialPrime>);

impl AssSet {
    pub fn new() -> Self {
        AssSet(BTreeSet::new())
    }

    pub fn insert(&mut self, p: MonomialPrime) {
        self.0.insert(p);
    }

    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.0.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &AssSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_names(&self, ring: &GradedRing) -> Vec<Vec<String>> {
        self.0.iter().map(|p| p.var_names(ring)).collect()
    }

    pub fn display(&self, ring: &GradedRing) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|p| format!("({})", p.label(ring)))
            .collect();
        parts.join(";")
    }
}

impl FromIterator<MonomialPrime> for AssSet {
    fn from_iter<T: IntoIterator<Item = MonomialPrime>>(iter: T) -> Self {
        AssSet(iter.into_iter().collect())
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.support)
    }
}

/// Localizes `b` at the monomial prime on `support`.
pub fn restrict_to_support(b: &MonomialIdeal, support: &[usize]) -> MonomialIdeal {
    b.restrict_to_support(support)
}

/// Socle-witness test for the prime on `support`.
pub fn is_associated(q: &Subquotient, support: &[usize]) -> bool {
    if q.is_zero() {
        return false;
    }
    if support.is_empty() {
        return q.den().is_zero();
    }
    let num = q.num().restrict_to_support(support);
    let den = q.den().restrict_to_support(support);
    let max = MonomialIdeal::variables(num.ring().clone(), &(0..support.len()).collect::<Vec<_>>());
    let socle = den
        .colon_ideal(&max)
        .expect("maximal ideal of a nonempty support is nonzero")
        .intersect(&num);
    !socle.is_subset_of(&den)
}

/// `Ass(Q)` by enumerating supports inside `supp(B)`, plus the zero prime.
pub fn ass(q: &Subquotient) -> AssSet {
    let mut out = AssSet::new();
    if q.is_zero() {
        return out;
    }
    if q.den().is_zero() {
        out.insert(MonomialPrime::zero());
        return out;
    }
    let supp = q.den().support();
    let k = supp.len();
    for mask in 1u64..(1u64 << k) {
        let s: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| supp[b]).collect();
        if is_associated(q, &s) {
            out.insert(MonomialPrime::new(s));
        }
    }
    out
}

/// Default witness-degree bound: `deg(lcm(gens A ∪ gens B)) + max weight`.
pub fn default_oracle_bound(q: &Subquotient) -> i64 {
    let ring = q.ring();
    let l = q.num().lcm_of_gens().lcm(&q.den().lcm_of_gens());
    ring.degree(&l) + ring.max_weight() as i64
}

/// Brute force: collect every prime `(B : m)` over monomials `m ∈ A \ B`
/// with unshifted weighted degree at most `degree_bound`.
pub fn ass_oracle(q: &Subquotient, degree_bound: i64) -> AssSet {
    let mut out = AssSet::new();
    for m in monomials_up_to(q.ring(), degree_bound) {
        if let Some(p) = colon_prime(q, &m) {
            out.insert(p);
        }
    }
    out
}

/// `Some(p)` when `m ∈ A \ B` and `(B : m)` is the monomial prime `p`.
pub(crate) fn colon_prime(q: &Subquotient, m: &Monomial) -> Option<MonomialPrime> {
    if !q.num().contains(m) || q.den().contains(m) {
        return None;
    }
    MonomialPrime::from_ideal(&q.den().colon_monomial(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ideal_from_strs;
    use std::sync::Arc;

    fn ring2() -> Arc<GradedRing> {
        GradedRing::standard(vec!["X", "Y"]).unwrap()
    }

    fn p(s: &[usize]) -> MonomialPrime {
        MonomialPrime::new(s.to_vec())
    }

    #[test]
    fn restriction_examples() {
        let r = ring2();
        assert!(restrict_to_support(&ideal_from_strs(&r, &["X^4", "X*Y^3"]), &[1]).is_unit());
        assert_eq!(
            restrict_to_support(&ideal_from_strs(&r, &["X*Y^3"]), &[1]).to_string(),
            "(Y^3)"
        );
    }

    #[test]
    fn powers_of_i_times_m() {
        // I^n M = (X^{an}, X Y^b)/(X Y^b), a = 2, b = 3, n = 2
        let r = ring2();
        let q = Subquotient::new(
            ideal_from_strs(&r, &["X^4", "X*Y^3"]),
            ideal_from_strs(&r, &["X*Y^3"]),
            0,
        )
        .unwrap();
        assert!(is_associated(&q, &[1]));
        assert!(!is_associated(&q, &[0]));
        assert!(!is_associated(&q, &[0, 1]));
        assert_eq!(ass(&q), [p(&[1])].into_iter().collect());
    }

    #[test]
    fn m_mod_i_n_m() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^4", "X*Y^3"]));
        assert!(is_associated(&q, &[0]));
        assert!(is_associated(&q, &[0, 1]));
        assert!(!is_associated(&q, &[1]));
        // a = 1, n = 1: M/IM = R/(X)
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X", "X*Y^3"]));
        assert_eq!(ass(&q), [p(&[0])].into_iter().collect());
    }

    #[test]
    fn free_and_zero_modules() {
        let r = ring2();
        let free = Subquotient::cyclic(MonomialIdeal::zero(r.clone()));
        assert!(is_associated(&free, &[]));
        assert_eq!(ass(&free), [MonomialPrime::zero()].into_iter().collect());
        let zero = Subquotient::cyclic(MonomialIdeal::unit(r.clone()));
        assert!(ass(&zero).is_empty());
        assert!(ass_oracle(&zero, 5).is_empty());
    }

    #[test]
    fn embedded_prime() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^2", "X*Y"]));
        let expected: AssSet = [p(&[0]), p(&[0, 1])].into_iter().collect();
        assert_eq!(ass(&q), expected);
        assert_eq!(ass_oracle(&q, 3), expected);
    }

    #[test]
    fn oracle_on_m() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X*Y^3"]));
        let expected: AssSet = [p(&[0]), p(&[1])].into_iter().collect();
        assert_eq!(ass_oracle(&q, 3), expected);
        assert_eq!(ass(&q), expected);
    }

    #[test]
    fn prime_order() {
        let mut v = vec![p(&[0, 1]), p(&[1]), p(&[]), p(&[0])];
        v.sort();
        assert_eq!(v, vec![p(&[]), p(&[0]), p(&[1]), p(&[0, 1])]);
        assert!(p(&[0]).is_proper_subset_of(&p(&[0, 1])));
        assert!(!p(&[0, 1]).is_proper_subset_of(&p(&[0, 1])));
    }
}
