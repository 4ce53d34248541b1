use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kernel::monomial::Monomial;
use crate::kernel::ring::{same_ring, GradedRing};

/// A monomial ideal held by its minimal generators in canonical order:
/// ascending weighted degree, ties broken by descending lexicographic order of
/// exponent vectors (so `X` precedes `Y`). Structural equality is ideal equality.
///
/// The empty generator list is the zero ideal; `[1]` is the unit ideal.
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    ring: Arc<GradedRing>,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

pub(crate) fn canonical_cmp(ring: &GradedRing, a: &Monomial, b: &Monomial) -> Ordering {
    ring.degree(a)
        .cmp(&ring.degree(b))
        .then_with(|| b.exponents().cmp(a.exponents()))
}

impl MonomialIdeal {
    /// Checked constructor: validates every generator against the ring.
    pub fn new(ring: Arc<GradedRing>, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
        }
        Ok(Self::minimalize(ring, gens))
    }

    /// Drops non-minimal generators and duplicates, then sorts canonically.
    pub fn minimalize(ring: Arc<GradedRing>, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| canonical_cmp(&ring, a, b));
        gens.dedup();
        // A proper divisor has strictly smaller degree, so it is already kept.
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { ring, gens: kept }
    }

    pub fn zero(ring: Arc<GradedRing>) -> Self {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Arc<GradedRing>) -> Self {
        let one = Monomial::one(ring.nvars());
        MonomialIdeal {
            ring,
            gens: vec![one],
        }
    }

    /// The prime `(x_i : i ∈ support)`; the empty support gives the zero ideal.
    pub fn variables(ring: Arc<GradedRing>, support: &[usize]) -> Self {
        let n = ring.nvars();
        let gens = support
            .iter()
            .map(|&i| Monomial::var_power(n, i, 1))
            .collect();
        Self::minimalize(ring, gens)
    }

    pub fn principal(ring: Arc<GradedRing>, m: Monomial) -> Self {
        MonomialIdeal {
            ring,
            gens: vec![m],
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::minimalize(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(Self::minimalize(self.ring.clone(), gens))
    }

    /// `self^n` by repeated multiplication, re-minimalizing after each step.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::minimalize(self.ring.clone(), gens)
    }

    /// `(self : m)`, generated by `g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect();
        Self::minimalize(self.ring.clone(), gens)
    }

    /// `(self : a)` as the intersection of the colons by the generators of `a`.
    pub fn colon_ideal(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        debug_assert!(same_ring(&self.ring, &a.ring));
        let (first, rest) = a.gens.split_first().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first);
        for m in rest {
            if acc.is_zero() {
                break;
            }
            acc = acc.intersect(&self.colon_monomial(m));
        }
        Ok(acc)
    }

    /// `(self : a^∞)`, the stable value of iterated colons.
    pub fn saturate(&self, a: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(a)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `m ∈ √self`: some generator's support lies inside `m`'s support.
    pub fn radical_contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| {
            g.exponents()
                .iter()
                .zip(m.exponents())
                .all(|(&ge, &me)| ge == 0 || me > 0)
        })
    }

    /// lcm of all generators (the unit monomial for the zero ideal).
    pub fn lcm_of_gens(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.ring.nvars()), |acc, g| acc.lcm(g))
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        self.lcm_of_gens().support()
    }

    /// True when some generator is a pure power of `x_i` (the unit counts as `x_i^0`).
    pub fn has_pure_power(&self, i: usize) -> bool {
        self.gens
            .iter()
            .any(|g| g.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
    }

    /// Localizes at the monomial prime on `support`: variables outside it are set to 1
    /// and the result lives over the subring on `support`.
    pub fn restrict_to_support(&self, support: &[usize]) -> MonomialIdeal {
        let ring = self.ring.restrict(support);
        let gens = self.gens.iter().map(|g| g.project(support)).collect();
        Self::minimalize(ring, gens)
    }

    pub fn max_generator_degree(&self) -> Option<i64> {
        self.gens.iter().map(|g| self.ring.degree(g)).max()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::parse_monomial;

    fn ring2() -> Arc<GradedRing> {
        GradedRing::standard(vec!["X", "Y"]).unwrap()
    }

    fn ring3() -> Arc<GradedRing> {
        GradedRing::standard(vec!["X", "Y", "Z"]).unwrap()
    }

    fn id(r: &Arc<GradedRing>, gens: &[&str]) -> MonomialIdeal {
        let gens = gens.iter().map(|s| parse_monomial(r, s).unwrap()).collect();
        MonomialIdeal::new(r.clone(), gens).unwrap()
    }

    fn mono(r: &Arc<GradedRing>, s: &str) -> Monomial {
        parse_monomial(r, s).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let r = ring2();
        assert_eq!(id(&r, &["X^2", "X^2*Y", "Y^3"]), id(&r, &["X^2", "Y^3"]));
        assert!(id(&r, &[]).is_zero());
        assert!(id(&r, &["1", "X"]).is_unit());
        assert_eq!(id(&r, &["Y", "X"]).to_string(), "(X, Y)");
        assert_eq!(id(&r, &["X", "X^2"]), id(&r, &["X"]));
        assert_ne!(id(&r, &["X"]), id(&r, &["X^2"]));
    }

    #[test]
    fn membership() {
        let r = ring2();
        assert!(!id(&r, &["X^3", "X*Y^4"]).contains(&mono(&r, "X*Y^3")));
        assert!(id(&r, &["X^3"]).contains(&mono(&r, "X^4")));
        assert!(!id(&r, &[]).contains(&mono(&r, "1")));
    }

    #[test]
    fn sums_and_products() {
        let r = ring2();
        assert_eq!(id(&r, &["X"]).sum(&id(&r, &["Y"])), id(&r, &["X", "Y"]));
        assert_eq!(id(&r, &["X^2"]).sum(&id(&r, &["X"])), id(&r, &["X"]));
        assert_eq!(
            id(&r, &["X*Y"]).sum(&id(&r, &["X^2", "Y^3"])).gens().len(),
            3
        );
        assert_eq!(
            id(&r, &["X"]).product(&id(&r, &["Y"])).unwrap(),
            id(&r, &["X*Y"])
        );
        let m = id(&r, &["X", "Y"]);
        assert_eq!(m.product(&m).unwrap(), id(&r, &["X^2", "X*Y", "Y^2"]));
        assert!(id(&r, &["X^2", "Y"])
            .product(&id(&r, &[]))
            .unwrap()
            .is_zero());
        let p = id(&r, &["X^2", "Y"]);
        assert_eq!(p.product(&MonomialIdeal::unit(r.clone())).unwrap(), p);
    }

    #[test]
    fn powers() {
        let r = ring2();
        assert_eq!(
            id(&r, &["X", "Y^2"]).power(2).unwrap(),
            id(&r, &["X^2", "X*Y^2", "Y^4"])
        );
        assert!(id(&r, &["X", "Y^2"]).power(0).unwrap().is_unit());
        let r3 = ring3();
        let sq = id(&r3, &["X", "Y^2", "Z^3"]).power(2).unwrap();
        assert_eq!(sq.to_string(), "(X^2, X*Y^2, X*Z^3, Y^4, Y^2*Z^3, Z^6)");
        // (X^2, Y^3)^n is every X^{2i} Y^{3(n-i)}
        let p = id(&r, &["X^2", "Y^3"]).power(4).unwrap();
        let expected: Vec<Monomial> = (0..=4u32)
            .map(|i| Monomial::new(vec![2 * i, 3 * (4 - i)]))
            .collect();
        assert_eq!(p, MonomialIdeal::new(r.clone(), expected).unwrap());
        assert_eq!(p.gens().len(), 5);
    }

    #[test]
    fn intersections() {
        let r = ring2();
        assert_eq!(id(&r, &["X"]).intersect(&id(&r, &["Y"])), id(&r, &["X*Y"]));
        // a = 2, b = 3, n = 1: (X^{an-1}, Y^b) ∩ (X^{an}, X Y^{b-1})
        let lhs = id(&r, &["X", "Y^3"]).intersect(&id(&r, &["X^2", "X*Y^2"]));
        assert_eq!(lhs, id(&r, &["X^2", "X*Y^2", "X*Y^3"]));
        let lhs = id(&r, &["X^5", "Y^3"]).intersect(&id(&r, &["X^6", "X*Y^2"]));
        assert_eq!(lhs, id(&r, &["X^6", "X^5*Y^2", "X*Y^3"]));
        let b = id(&r, &["X^3", "X*Y^4"]);
        assert_eq!(b.intersect(&b), b);
    }

    #[test]
    fn colons() {
        let r = ring2();
        // a = 2, b = 3, n = 2: ((X Y^b) : X^{an} Y^{b-1}) = (Y)
        assert_eq!(
            id(&r, &["X*Y^3"]).colon_monomial(&mono(&r, "X^4*Y^2")),
            id(&r, &["Y"])
        );
        assert_eq!(
            id(&r, &["X^3", "X*Y^4"]).colon_monomial(&mono(&r, "X^2*Y^3")),
            id(&r, &["X", "Y"])
        );
        let b = id(&r, &["X^3", "X*Y^4"]);
        assert_eq!(b.colon_monomial(&mono(&r, "1")), b);
        assert_eq!(
            id(&r, &["X^6", "X*Y^3"])
                .colon_ideal(&id(&r, &["X", "Y"]))
                .unwrap(),
            id(&r, &["X^6", "X^5*Y^2", "X*Y^3"])
        );
        assert_eq!(
            b.colon_ideal(&MonomialIdeal::unit(r.clone())).unwrap(),
            b
        );
        assert_eq!(
            id(&r, &["X^2"]).colon_ideal(&id(&r, &["X"])).unwrap(),
            id(&r, &["X"])
        );
        assert_eq!(
            b.colon_ideal(&MonomialIdeal::zero(r.clone())),
            Err(Error::ColonByZero)
        );
    }

    #[test]
    fn saturations() {
        let r = ring2();
        let m = id(&r, &["X", "Y"]);
        assert_eq!(
            id(&r, &["X^6", "X*Y^3"]).saturate(&m).unwrap(),
            id(&r, &["X"])
        );
        let b = id(&r, &["X^3", "X*Y^4"]);
        assert_eq!(b.saturate(&MonomialIdeal::unit(r.clone())).unwrap(), b);
        assert_eq!(
            id(&r, &["X*Y"]).saturate(&id(&r, &["Y"])).unwrap(),
            id(&r, &["X"])
        );
        assert!(b.saturate(&MonomialIdeal::zero(r.clone())).is_err());
    }

    #[test]
    fn radicals() {
        let r = ring2();
        assert!(id(&r, &["X^3"]).radical_contains(&mono(&r, "X")));
        assert!(!id(&r, &["X*Y"]).radical_contains(&mono(&r, "X")));
        assert!(id(&r, &["X^3", "X*Y^4", "Y^6"]).radical_contains(&mono(&r, "Y^2")));
        assert!(!id(&r, &[]).radical_contains(&mono(&r, "X*Y")));
    }

    #[test]
    fn restriction() {
        let r = ring2();
        assert!(id(&r, &["X^4", "X*Y^3"]).restrict_to_support(&[1]).is_unit());
        let q = id(&r, &["X*Y^3"]).restrict_to_support(&[1]);
        assert_eq!(q.to_string(), "(Y^3)");
        assert_eq!(q.ring().names(), &["Y".to_string()]);
        let b = id(&r, &["X^3", "X*Y^4"]);
        assert_eq!(b.restrict_to_support(&[0, 1]), b);
    }
}
