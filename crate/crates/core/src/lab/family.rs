//! The three filtration families and their per-`n` invariants.
//!
//! With `M = A₀/B₀`, `N = 𝔞M` and `n ≥ 0`:
//! `IⁿM = (IⁿA₀ + B₀)/B₀` and `IⁿN = (Iⁿ𝔞A₀ + B₀)/B₀`, so every member is a
//! subquotient of `R`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ass::{ass, AssSet, MonomialPrime};
use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::kernel::{same_ring, GradedRing, Monomial, MonomialIdeal};
use crate::quotient::Subquotient;
use crate::vnumber::{v_with_ass, VReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `IⁿM / IⁿN`
    #[serde(rename = "In_mod_InN")]
    InModInN,
    /// `M / IⁿN`
    #[serde(rename = "M_mod_InN")]
    MModInN,
    /// `IⁿM / Iⁿ⁺¹N`
    #[serde(rename = "In_mod_In1N")]
    InModIn1N,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::InModInN => "In_mod_InN",
            FamilyKind::MModInN => "M_mod_InN",
            FamilyKind::InModIn1N => "In_mod_In1N",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "In_mod_InN" => Ok(FamilyKind::InModInN),
            "M_mod_InN" => Ok(FamilyKind::MModInN),
            "In_mod_In1N" => Ok(FamilyKind::InModIn1N),
            other => Err(format!(
                "unknown family kind {other:?} (expected In_mod_InN, M_mod_InN or In_mod_In1N)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub m_num: MonomialIdeal,
    pub m_den: MonomialIdeal,
    pub i: MonomialIdeal,
    /// Reduction ideal; `None` means `J = I`.
    pub j: Option<MonomialIdeal>,
    /// `N = 𝔞M`; the unit ideal gives `N = M`, the zero ideal `N = 0`.
    pub a: MonomialIdeal,
    pub kind: FamilyKind,
    pub n_max: u32,
}

pub const MIN_N_MAX: u32 = 4;

impl FamilySpec {
    pub fn new(
        m_num: MonomialIdeal,
        m_den: MonomialIdeal,
        i: MonomialIdeal,
        j: Option<MonomialIdeal>,
        a: MonomialIdeal,
        kind: FamilyKind,
        n_max: u32,
    ) -> Result<Self> {
        let ring = m_num.ring();
        let all_same = [&m_den, &i, &a]
            .into_iter()
            .chain(j.as_ref())
            .all(|x| same_ring(ring, x.ring()));
        if !all_same {
            return Err(Error::RingMismatch);
        }
        if !m_den.is_subset_of(&m_num) {
            return Err(Error::DenominatorNotContained);
        }
        if i.is_zero() {
            return Err(Error::InvalidFamily("I must be nonzero".into()));
        }
        if let Some(j) = &j {
            if j.is_zero() {
                return Err(Error::InvalidFamily("J must be nonzero".into()));
            }
            if !j.is_subset_of(&i) {
                return Err(Error::NotContained);
            }
        }
        if n_max < MIN_N_MAX {
            return Err(Error::InvalidFamily(format!(
                "n_max must be at least {MIN_N_MAX}"
            )));
        }
        Ok(FamilySpec {
            m_num,
            m_den,
            i,
            j,
            a,
            kind,
            n_max,
        })
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.m_num.ring()
    }

    /// `J`, defaulting to `I`.
    pub fn reduction_ideal(&self) -> &MonomialIdeal {
        self.j.as_ref().unwrap_or(&self.i)
    }

    pub fn with_kind(&self, kind: FamilyKind) -> Self {
        FamilySpec {
            kind,
            ..self.clone()
        }
    }

    pub fn with_n_max(&self, n_max: u32) -> Self {
        FamilySpec {
            n_max,
            ..self.clone()
        }
    }

    /// `M = A₀/B₀`.
    pub fn module(&self) -> Subquotient {
        Subquotient::new(self.m_num.clone(), self.m_den.clone(), 0)
            .expect("validated at construction")
    }

    /// Numerator of `IⁿM`: `IⁿA₀ + B₀`.
    pub fn power_of_m(&self, n: u32) -> Result<MonomialIdeal> {
        Ok(self.i.power(n)?.product(&self.m_num)?.sum(&self.m_den))
    }

    /// Numerator of `IⁿN`: `Iⁿ𝔞A₀ + B₀`.
    pub fn power_of_n(&self, n: u32) -> Result<MonomialIdeal> {
        Ok(self
            .i
            .power(n)?
            .product(&self.a)?
            .product(&self.m_num)?
            .sum(&self.m_den))
    }
}

/// The `n`-th member of the family selected by `spec.kind`.
pub fn family_member(spec: &FamilySpec, n: u32) -> Result<Subquotient> {
    let (num, den) = match spec.kind {
        FamilyKind::InModInN => (spec.power_of_m(n)?, spec.power_of_n(n)?),
        FamilyKind::MModInN => (spec.m_num.clone(), spec.power_of_n(n)?),
        FamilyKind::InModIn1N => (spec.power_of_m(n)?, spec.power_of_n(n + 1)?),
    };
    Subquotient::new(num, den, 0)
}

/// Weighted degrees `d₁ ≤ … ≤ d_c` of the minimal generators.
pub fn generator_degrees(j: &MonomialIdeal) -> Result<Vec<i64>> {
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = j.ring();
    Ok(j.gens().iter().map(|g| ring.degree(g)).collect())
}

/// `(I^{n+1}N :_M I) = IⁿM`, i.e. `(I^{n+1}𝔞A₀ + B₀ : I) ∩ A₀ = IⁿA₀ + B₀`.
pub fn colon_stability(spec: &FamilySpec, n: u32) -> Result<bool> {
    let lhs = spec
        .power_of_n(n + 1)?
        .colon_ideal(&spec.i)?
        .intersect(&spec.m_num);
    Ok(lhs == spec.power_of_m(n)?)
}

/// `(0 :_M u) = 0`.
pub fn annihilator_is_zero(spec: &FamilySpec, u: &MonomialIdeal) -> Result<bool> {
    let ann = spec.module().ann_submodule(u)?;
    Ok(ann.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPoint {
    pub n: u32,
    pub indeg: ExtInt,
    pub v: VReport,
    pub ass: AssSet,
    pub colon_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSeries {
    pub kind: FamilyKind,
    pub points: Vec<SeriesPoint>,
    /// `(0 :_M I) = 0`
    pub ann_i_zero: bool,
    /// `(0 :_M y₁) = 0` for the least-degree generator `y₁` of `J`
    pub ann_y1_zero: bool,
}

impl InvariantSeries {
    pub fn first_n(&self) -> u32 {
        self.points.first().map_or(0, |p| p.n)
    }

    pub fn last_n(&self) -> u32 {
        self.points.last().map_or(0, |p| p.n)
    }

    pub fn indeg_values(&self) -> Vec<ExtInt> {
        self.points.iter().map(|p| p.indeg).collect()
    }

    pub fn v_values(&self) -> Vec<ExtInt> {
        self.points.iter().map(|p| p.v.overall).collect()
    }

    /// `v_p` per point, `+∞` where `p` is not associated.
    pub fn prime_values(&self, p: &MonomialPrime) -> Vec<ExtInt> {
        self.points
            .iter()
            .map(|pt| {
                pt.v.per_prime
                    .get(p)
                    .map_or(ExtInt::PosInf, |&v| ExtInt::Finite(v))
            })
            .collect()
    }

    /// Every prime associated at some point, canonically sorted.
    pub fn all_primes(&self) -> Vec<MonomialPrime> {
        let set: AssSet = self
            .points
            .iter()
            .flat_map(|p| p.ass.iter().cloned())
            .collect();
        set.iter().cloned().collect()
    }

    pub fn point(&self, n: u32) -> Option<&SeriesPoint> {
        self.points.iter().find(|p| p.n == n)
    }
}

pub fn evaluate_point(spec: &FamilySpec, n: u32) -> Result<SeriesPoint> {
    let q = family_member(spec, n)?;
    let ass_set = ass(&q);
    let v = v_with_ass(&q, &ass_set)?;
    Ok(SeriesPoint {
        n,
        indeg: q.indeg(),
        v,
        ass: ass_set,
        colon_stable: colon_stability(spec, n)?,
    })
}

/// Points for `n ∈ lo..=hi`, computed in parallel and returned in order.
pub fn evaluate_points(spec: &FamilySpec, lo: u32, hi: u32) -> Result<Vec<SeriesPoint>> {
    (lo..=hi)
        .into_par_iter()
        .map(|n| evaluate_point(spec, n))
        .collect()
}

/// The `(ann_i_zero, ann_y1_zero)` flags of the underlying module.
pub fn series_flags(spec: &FamilySpec) -> Result<(bool, bool)> {
    let ann_i = annihilator_is_zero(spec, &spec.i)?;
    let j = spec.reduction_ideal();
    let y1: Monomial = j.gens()[0].clone();
    let ann_y1 = annihilator_is_zero(spec, &MonomialIdeal::principal(j.ring().clone(), y1))?;
    Ok((ann_i, ann_y1))
}

/// Invariants of the family for `n = 0..=n_max`.
pub fn evaluate_series(spec: &FamilySpec) -> Result<InvariantSeries> {
    let (ann_i_zero, ann_y1_zero) = series_flags(spec)?;
    Ok(InvariantSeries {
        kind: spec.kind,
        points: evaluate_points(spec, 0, spec.n_max)?,
        ann_i_zero,
        ann_y1_zero,
    })
}
