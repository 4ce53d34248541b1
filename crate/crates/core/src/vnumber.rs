//! v-numbers of monomial subquotients.
//!
//! `v_p(Q)` is the initial degree of `ann_Q(p) / (ann_Q(p) ∩ Γ_V(Q))`, where
//! `V` is the product of the associated primes strictly containing `p`
//! (`V = R` when there are none). For monomial data this is a minimum over the
//! minimal generators of `C = (B : p) ∩ A` that avoid `G = (B : V^∞)`.
//!
//! The oracle searches monomials only. That is complete: if `p = (B : x)` for
//! a homogeneous `x`, write `x` as a combination of monomials `m_1, …, m_r` of
//! the same degree outside `B`. Each `(B : m_i)` is a monomial ideal containing
//! `p`, and `(B : x)` contains `∩_i (B : m_i)`. If every `(B : m_i)` strictly
//! contained `p`, each would contain a monomial `u_i ∉ p`, and `∏ u_i ∉ p`
//! would lie in `(B : x)`. So some `m_i` has `(B : m_i) = p`, in the same degree.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::ass::{ass, colon_prime, AssSet, MonomialPrime};
use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::kernel::{for_each_monomial_of_degree, Monomial, MonomialIdeal};
use crate::quotient::Subquotient;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VReport {
    pub per_prime: BTreeMap<MonomialPrime, i64>,
    pub overall: ExtInt,
    /// A minimal-degree monomial `w ∈ A \ B` with `(B : w) = p`, per prime.
    pub witnesses: BTreeMap<MonomialPrime, Monomial>,
}

impl VReport {
    /// `{"v": …, "per_prime": {"X,Y": …}, "witness": {"X,Y": "X*Y"}}`.
    pub fn to_json(&self, q: &Subquotient) -> Value {
        let ring = q.ring();
        let per: Map<String, Value> = self
            .per_prime
            .iter()
            .map(|(p, v)| (p.label(ring), json!(v)))
            .collect();
        let wit: Map<String, Value> = self
            .witnesses
            .iter()
            .map(|(p, w)| (p.label(ring), json!(ring.format(w))))
            .collect();
        json!({ "v": self.overall, "per_prime": per, "witness": wit })
    }
}

/// `v_p(Q)` together with the generator realizing it.
pub fn v_at_prime_with_witness(
    q: &Subquotient,
    p: &MonomialPrime,
    ass_set: &AssSet,
) -> Result<(i64, Monomial)> {
    if !ass_set.contains(p) {
        return Err(Error::PrimeNotAssociated(p.label(q.ring())));
    }
    let ring = q.ring();
    let c = if p.is_zero() {
        q.num().clone()
    } else {
        q.ann_submodule(&p.to_ideal(ring.clone()))?.num().clone()
    };
    let bigger: Vec<&MonomialPrime> = ass_set.iter().filter(|r| p.is_proper_subset_of(r)).collect();
    let avoid = if bigger.is_empty() {
        q.den().clone()
    } else {
        let mut v = MonomialIdeal::unit(ring.clone());
        for r in bigger {
            v = v.product(&r.to_ideal(ring.clone()))?;
        }
        q.den().saturate(&v)?
    };
    c.gens()
        .iter()
        .filter(|g| !avoid.contains(g))
        .map(|g| (ring.degree(g), g))
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(d, g)| (d + q.shift(), g.clone()))
        .ok_or_else(|| Error::PrimeNotAssociated(p.label(ring)))
}

pub fn v_at_prime(q: &Subquotient, p: &MonomialPrime, ass_set: &AssSet) -> Result<i64> {
    v_at_prime_with_witness(q, p, ass_set).map(|(d, _)| d)
}

/// Per-prime and overall v-numbers; `+∞` for the zero module.
pub fn v(q: &Subquotient) -> Result<VReport> {
    let ass_set = ass(q);
    v_with_ass(q, &ass_set)
}

pub fn v_with_ass(q: &Subquotient, ass_set: &AssSet) -> Result<VReport> {
    let mut per_prime = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for p in ass_set.iter() {
        let (d, w) = v_at_prime_with_witness(q, p, ass_set)?;
        per_prime.insert(p.clone(), d);
        witnesses.insert(p.clone(), w);
    }
    let overall = per_prime
        .values()
        .copied()
        .min()
        .map_or(ExtInt::PosInf, ExtInt::Finite);
    Ok(VReport {
        per_prime,
        overall,
        witnesses,
    })
}

/// Which primes the oracle accepts as a witness colon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeTarget {
    One(MonomialPrime),
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Found {
        degree: i64,
        witness: Monomial,
        prime: MonomialPrime,
    },
    NotFoundBelowBound(i64),
}

impl OracleResult {
    pub fn degree(&self) -> Option<i64> {
        match self {
            OracleResult::Found { degree, .. } => Some(*degree),
            OracleResult::NotFoundBelowBound(_) => None,
        }
    }
}

/// Definitional search: the least-degree monomial `m ∈ A \ B` (unshifted degree
/// at most `degree_bound`) whose colon `(B : m)` is the target prime.
pub fn v_oracle(q: &Subquotient, target: &PrimeTarget, degree_bound: i64) -> OracleResult {
    for d in 0..=degree_bound {
        let mut found: Option<(Monomial, MonomialPrime)> = None;
        for_each_monomial_of_degree(q.ring(), d, &mut |m| {
            if found.is_some() {
                return;
            }
            if let Some(p) = colon_prime(q, m) {
                let ok = match target {
                    PrimeTarget::Any => true,
                    PrimeTarget::One(t) => *t == p,
                };
                if ok {
                    found = Some((m.clone(), p));
                }
            }
        });
        if let Some((witness, prime)) = found {
            return OracleResult::Found {
                degree: d + q.shift(),
                witness,
                prime,
            };
        }
    }
    OracleResult::NotFoundBelowBound(degree_bound)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaEndReport {
    pub v_max: i64,
    pub end_gamma: ExtInt,
    pub holds: bool,
}

/// Compares `v_m(Q)` with `end(Γ_m(Q))` for the maximal ideal `m`; applies
/// only when `m ∈ Ass(Q)`.
pub fn gamma_end_check(q: &Subquotient) -> Result<GammaEndReport> {
    let ring = q.ring();
    let max = MonomialPrime::maximal(ring);
    let ass_set = ass(q);
    if !ass_set.contains(&max) || max.is_zero() {
        return Err(Error::Inapplicable(
            "the maximal homogeneous ideal is not associated".into(),
        ));
    }
    let gamma = q.gamma_submodule(&max.to_ideal(ring.clone()))?;
    let end_gamma = gamma.end_artinian()?;
    let v_max = v_at_prime(q, &max, &ass_set)?;
    Ok(GammaEndReport {
        v_max,
        end_gamma,
        holds: ExtInt::Finite(v_max) <= end_gamma,
    })
}
