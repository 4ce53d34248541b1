//! Graded subquotient modules `A/B` with `B ⊆ A` monomial ideals and a degree shift.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::kernel::{for_each_monomial_of_degree, same_ring, GradedRing, Monomial, MonomialIdeal};

/// The graded module `A/B`, read with a shift: the degree-`u` piece is the
/// degree-`(u - shift)` piece of the unshifted quotient, so `shift = h` is `(A/B)(-h)`.
///
/// `A` is kept as given (not reduced modulo `B`); its minimal generators drive `indeg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subquotient {
    num: MonomialIdeal,
    den: MonomialIdeal,
    shift: i64,
}

impl Subquotient {
    pub fn new(num: MonomialIdeal, den: MonomialIdeal, shift: i64) -> Result<Self> {
        if !same_ring(num.ring(), den.ring()) {
            return Err(Error::RingMismatch);
        }
        if !den.is_subset_of(&num) {
            return Err(Error::DenominatorNotContained);
        }
        Ok(Subquotient { num, den, shift })
    }

    /// `R/B`.
    pub fn cyclic(den: MonomialIdeal) -> Self {
        let num = MonomialIdeal::unit(den.ring().clone());
        Subquotient { num, den, shift: 0 }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.num.ring()
    }

    pub fn num(&self) -> &MonomialIdeal {
        &self.num
    }

    pub fn den(&self) -> &MonomialIdeal {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_subset_of(&self.den)
    }

    /// Minimal generators of `A` that survive in the quotient.
    pub fn surviving_gens(&self) -> impl Iterator<Item = &Monomial> {
        self.num.gens().iter().filter(|g| !self.den.contains(g))
    }

    /// Least degree with a nonzero component; `+∞` for the zero module.
    pub fn indeg(&self) -> ExtInt {
        let ring = self.ring();
        self.surviving_gens()
            .map(|g| ring.degree(g))
            .min()
            .map_or(ExtInt::PosInf, |d| ExtInt::Finite(d + self.shift))
    }

    /// Monomials of `A \ B` in (shifted) degree `u`.
    pub fn monomials_in_degree(&self, u: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        for_each_monomial_of_degree(self.ring(), u - self.shift, &mut |m| {
            if self.num.contains(m) && !self.den.contains(m) {
                out.push(m.clone());
            }
        });
        out
    }

    pub fn twist(&self, h: i64) -> Subquotient {
        Subquotient {
            shift: self.shift + h,
            ..self.clone()
        }
    }

    /// `(0 :_Q a)`, i.e. `((B : a) ∩ A)/B`. The zero ideal is rejected with
    /// `colon-by-zero`; its annihilator is the whole module.
    pub fn ann_submodule(&self, a: &MonomialIdeal) -> Result<Subquotient> {
        let num = self.den.colon_ideal(a)?.intersect(&self.num);
        Ok(Subquotient {
            num,
            den: self.den.clone(),
            shift: self.shift,
        })
    }

    /// `Γ_a(Q)`, i.e. `((B : a^∞) ∩ A)/B`.
    pub fn gamma_submodule(&self, a: &MonomialIdeal) -> Result<Subquotient> {
        let num = self.den.saturate(a)?.intersect(&self.num);
        Ok(Subquotient {
            num,
            den: self.den.clone(),
            shift: self.shift,
        })
    }

    /// Finite length test: for each surviving generator `g` of `A` and each
    /// variable `x_i`, some power of `x_i` pushes `g` into `B`.
    pub fn is_artinian(&self) -> bool {
        let n = self.ring().nvars();
        self.surviving_gens().all(|g| {
            let c = self.den.colon_monomial(g);
            (0..n).all(|i| c.has_pure_power(i))
        })
    }

    /// Greatest degree with a nonzero component of an Artinian module; `-∞` for zero.
    pub fn end_artinian(&self) -> Result<ExtInt> {
        if !self.is_artinian() {
            return Err(Error::NotArtinian);
        }
        let ring = self.ring();
        let n = ring.nvars();
        let mut best: Option<i64> = None;
        for g in self.surviving_gens() {
            let c = self.den.colon_monomial(g);
            // bound[i] = least k with x_i^k g ∈ B
            let bound: Vec<u32> = (0..n)
                .map(|i| {
                    c.gens()
                        .iter()
                        .filter(|h| h.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
                        .map(|h| h.exponents()[i])
                        .min()
                        .expect("artinian module has pure powers")
                })
                .collect();
            let mut extra = vec![0u32; n];
            loop {
                let cand = g
                    .mul(&Monomial::new(extra.clone()))
                    .expect("box stays below the exponent limit");
                if !self.den.contains(&cand) {
                    let d = ring.degree(&cand);
                    if best.is_none_or(|b| d > b) {
                        best = Some(d);
                    }
                }
                // odometer over the box extra[i] < bound[i]
                let mut i = 0;
                while i < n {
                    extra[i] += 1;
                    if extra[i] < bound[i] {
                        break;
                    }
                    extra[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        Ok(best.map_or(ExtInt::NegInf, |d| ExtInt::Finite(d + self.shift)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ideal_from_strs, parse_monomial};

    fn ring2() -> Arc<GradedRing> {
        GradedRing::standard(vec!["X", "Y"]).unwrap()
    }

    #[test]
    fn construction() {
        let r = ring2();
        let a = ideal_from_strs(&r, &["X"]);
        let b = ideal_from_strs(&r, &["X^2", "X*Y"]);
        assert!(Subquotient::new(a.clone(), b.clone(), 0).is_ok());
        assert_eq!(
            Subquotient::new(b, a.clone(), 0),
            Err(Error::DenominatorNotContained)
        );
        assert!(Subquotient::new(a.clone(), a, 0).unwrap().is_zero());
    }

    #[test]
    fn zero_test_and_indeg() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X"]));
        assert!(!q.is_zero());
        assert_eq!(q.indeg(), ExtInt::Finite(0));
        let q = Subquotient::new(
            ideal_from_strs(&r, &["X"]),
            ideal_from_strs(&r, &["X^2", "X*Y"]),
            0,
        )
        .unwrap();
        assert!(!q.is_zero());
        assert_eq!(q.indeg(), ExtInt::Finite(1));
        let z = Subquotient::cyclic(MonomialIdeal::unit(r.clone()));
        assert_eq!(z.indeg(), ExtInt::PosInf);
        // I^n M for I = (X^a), M = R/(X Y^b): a = 2, b = 3, n = 3
        let q = Subquotient::new(
            ideal_from_strs(&r, &["X^6", "X*Y^3"]),
            ideal_from_strs(&r, &["X*Y^3"]),
            0,
        )
        .unwrap();
        assert_eq!(q.indeg(), ExtInt::Finite(6));
        assert_eq!(q.twist(5).indeg(), ExtInt::Finite(11));
    }

    #[test]
    fn degree_slices() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X*Y"]));
        let names: Vec<String> = q
            .monomials_in_degree(2)
            .iter()
            .map(|m| r.format(m))
            .collect();
        assert_eq!(names, vec!["X^2", "Y^2"]);
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^3", "X*Y^4"]));
        assert_eq!(q.monomials_in_degree(0).len(), 1);
        let q = Subquotient::new(
            ideal_from_strs(&r, &["X"]),
            ideal_from_strs(&r, &["X^2", "X*Y"]),
            0,
        )
        .unwrap();
        assert_eq!(q.monomials_in_degree(1).len(), 1);
        assert!(q.monomials_in_degree(2).is_empty());
        assert_eq!(q.twist(3).monomials_in_degree(4).len(), 1);
    }

    #[test]
    fn twists_compose() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X*Y"]));
        assert_eq!(q.twist(0), q);
        assert_eq!(q.twist(2).twist(-5), q.twist(-3));
    }

    #[test]
    fn annihilators() {
        let r = ring2();
        // R/(X^{an}, X Y^b) with a = 2, b = 3, n = 1 annihilated by (X, Y)
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^2", "X*Y^3"]));
        let ann = q.ann_submodule(&ideal_from_strs(&r, &["X", "Y"])).unwrap();
        assert_eq!(ann.num(), &ideal_from_strs(&r, &["X^2", "X*Y^2", "X*Y^3"]));
        assert!(ann.num().contains(&parse_monomial(&r, "X*Y^2").unwrap()));
        assert!(q
            .ann_submodule(&MonomialIdeal::unit(r.clone()))
            .unwrap()
            .is_zero());
        // (0 :_M I) = q^b M for M = R/(X Y^b), I = (X^a): b = 3, a = 2
        let m = Subquotient::cyclic(ideal_from_strs(&r, &["X*Y^3"]));
        let ann = m.ann_submodule(&ideal_from_strs(&r, &["X^2"])).unwrap();
        assert_eq!(ann.num(), &ideal_from_strs(&r, &["Y^3"]));
        assert!(!ann.is_zero());
        assert_eq!(
            m.ann_submodule(&MonomialIdeal::zero(r.clone())),
            Err(Error::ColonByZero)
        );
    }

    #[test]
    fn torsion_submodules() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^4", "X*Y^3"]));
        let g = q.gamma_submodule(&ideal_from_strs(&r, &["X", "Y"])).unwrap();
        assert_eq!(g.num(), &ideal_from_strs(&r, &["X"]));
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^3"]));
        let g = q.gamma_submodule(&ideal_from_strs(&r, &["X"])).unwrap();
        assert!(g.num().is_unit());
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X"]));
        assert!(q
            .gamma_submodule(&ideal_from_strs(&r, &["Y"]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn artinian_end() {
        let r = ring2();
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^4", "X*Y", "Y^6"]));
        assert!(q.is_artinian());
        assert_eq!(q.end_artinian().unwrap(), ExtInt::Finite(5));
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X"]));
        assert!(!q.is_artinian());
        assert_eq!(q.end_artinian(), Err(Error::NotArtinian));
        let z = Subquotient::cyclic(MonomialIdeal::unit(r.clone()));
        assert!(z.is_artinian());
        assert_eq!(z.end_artinian().unwrap(), ExtInt::NegInf);
        let q = Subquotient::cyclic(ideal_from_strs(&r, &["X^2", "Y^2"]));
        assert_eq!(q.end_artinian().unwrap(), ExtInt::Finite(2));
        // (X Y) + (X^{d1}, Y^{d2})^n with d1 = 2, d2 = 3, n = 2 ends in degree d2 n - 1
        let i2 = ideal_from_strs(&r, &["X^2", "Y^3"]).power(2).unwrap();
        let q = Subquotient::cyclic(i2.sum(&ideal_from_strs(&r, &["X*Y"])));
        assert_eq!(q.end_artinian().unwrap(), ExtInt::Finite(5));
    }
}
