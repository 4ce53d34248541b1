//! Bounded radical-membership probe for the generators of `J` on the Rees
//! quotients `ℋ = ⊕ IⁿM/IⁿN` and `𝒢 = ⊕ IⁿM/Iⁿ⁺¹N`.
//!
//! Both quotients are generated in Rees degree 0 (each piece is `I` times the
//! previous one), so `y^s` kills the whole module iff it kills the degree-0
//! piece: `y^s A₀ ⊆ I^{s+k}𝔞A₀ + B₀` with `k = 0` for `ℋ` and `k = 1` for `𝒢`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{Monomial, MonomialIdeal};
use crate::lab::family::{generator_degrees, FamilyKind, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReesQuotient {
    /// `R(I,M)/R(I,N)`
    H,
    /// `R(I,M)/R(I,IN)`
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RadicalVerdict {
    /// `y^s` annihilates the module.
    InRadical(u32),
    /// No `s ≤ s_max` worked.
    NotFoundBelow(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProbe {
    pub form: ReesQuotient,
    /// Generators `y₁, …, y_c` of `J` with `d₁ ≤ … ≤ d_c`.
    pub generators: Vec<Monomial>,
    pub degrees: Vec<i64>,
    pub verdicts: Vec<RadicalVerdict>,
    /// 1-based index of the first generator outside the radical.
    pub delta_index: Option<usize>,
    pub delta_degree: Option<i64>,
}

pub const DEFAULT_S_MAX: u32 = 8;

/// Probe on `ℋ` for `In_mod_InN` and on `𝒢` for `In_mod_In1N`. The `M_mod_InN`
/// family has no Rees quotient of its own; use [`rees_probe`] with `G`.
pub fn delta_probe(spec: &FamilySpec, s_max: u32) -> Result<DeltaProbe> {
    let form = match spec.kind {
        FamilyKind::InModInN => ReesQuotient::H,
        FamilyKind::InModIn1N => ReesQuotient::G,
        FamilyKind::MModInN => {
            return Err(Error::UnsupportedKind(
                "M_mod_InN: probe the G form instead".into(),
            ))
        }
    };
    rees_probe(spec, form, s_max)
}

pub fn rees_probe(spec: &FamilySpec, form: ReesQuotient, s_max: u32) -> Result<DeltaProbe> {
    if s_max < 1 {
        return Err(Error::InvalidFamily("s_max must be at least 1".into()));
    }
    if let Some(j) = &spec.j {
        if *j != spec.i {
            return Err(Error::Unsupported(
                "radical probe for a reduction ideal J different from I".into(),
            ));
        }
    }
    let j = spec.reduction_ideal();
    let degrees = generator_degrees(j)?;
    let extra = match form {
        ReesQuotient::H => 0,
        ReesQuotient::G => 1,
    };
    let ring = spec.ring().clone();
    let mut verdicts = Vec::with_capacity(j.gens().len());
    for y in j.gens() {
        let mut verdict = RadicalVerdict::NotFoundBelow(s_max);
        for s in 1..=s_max {
            let ys = MonomialIdeal::principal(ring.clone(), y.pow(s)?);
            let lhs = ys.product(&spec.m_num)?;
            let rhs = spec.power_of_n(s + extra)?;
            if lhs.is_subset_of(&rhs) {
                verdict = RadicalVerdict::InRadical(s);
                break;
            }
        }
        verdicts.push(verdict);
    }
    let delta_index = verdicts
        .iter()
        .position(|v| matches!(v, RadicalVerdict::NotFoundBelow(_)));
    Ok(DeltaProbe {
        form,
        generators: j.gens().to_vec(),
        delta_degree: delta_index.map(|k| degrees[k]),
        delta_index: delta_index.map(|k| k + 1),
        degrees,
        verdicts,
    })
}

/// Least `n ≤ n_probe` with `J·Iⁿ = Iⁿ⁺¹`.
pub fn reduction_check(j: &MonomialIdeal, i: &MonomialIdeal, n_probe: u32) -> Result<Option<u32>> {
    if !j.is_subset_of(i) {
        return Err(Error::NotContained);
    }
    let mut i_n = MonomialIdeal::unit(i.ring().clone());
    for n in 0..=n_probe {
        let next = i_n.product(i)?;
        if j.product(&i_n)? == next {
            return Ok(Some(n));
        }
        i_n = next;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ideal_from_strs, GradedRing};

    #[test]
    fn xyz_probe() {
        let r = GradedRing::standard(vec!["X", "Y", "Z"]).unwrap();
        let spec = FamilySpec::new(
            MonomialIdeal::unit(r.clone()),
            ideal_from_strs(&r, &["X^3", "X*Y^4"]),
            ideal_from_strs(&r, &["X", "Y^2", "Z^3"]),
            None,
            MonomialIdeal::unit(r.clone()),
            FamilyKind::InModIn1N,
            8,
        )
        .unwrap();
        let probe = delta_probe(&spec, 8).unwrap();
        assert_eq!(probe.verdicts[0], RadicalVerdict::InRadical(3));
        assert_eq!(probe.verdicts[1], RadicalVerdict::NotFoundBelow(8));
        assert_eq!(probe.delta_index, Some(2));
        assert_eq!(probe.delta_degree, Some(2));
        assert!(matches!(
            delta_probe(&spec.with_kind(FamilyKind::MModInN), 8),
            Err(Error::UnsupportedKind(_))
        ));
        // With N = M the H quotient is zero: everything is in the radical.
        let h = rees_probe(&spec, ReesQuotient::H, 8).unwrap();
        assert_eq!(h.delta_index, None);
    }

    #[test]
    fn principal_probe() {
        let r = GradedRing::standard(vec!["X", "Y"]).unwrap();
        for a in 1..=3u32 {
            let spec = FamilySpec::new(
                MonomialIdeal::unit(r.clone()),
                ideal_from_strs(&r, &["X*Y^3"]),
                ideal_from_strs(&r, &[&format!("X^{a}")]),
                None,
                MonomialIdeal::unit(r.clone()),
                FamilyKind::InModIn1N,
                6,
            )
            .unwrap();
            let probe = delta_probe(&spec, 6).unwrap();
            assert_eq!(probe.delta_degree, Some(a as i64));
        }
    }

    #[test]
    fn reductions() {
        let r = GradedRing::standard(vec!["X", "Y"]).unwrap();
        let i = ideal_from_strs(&r, &["X^2", "X*Y", "Y^2"]);
        assert_eq!(reduction_check(&i, &i, 5).unwrap(), Some(0));
        let j = ideal_from_strs(&r, &["X^2", "Y^2"]);
        assert_eq!(reduction_check(&j, &i, 5).unwrap(), Some(1));
        let i2 = ideal_from_strs(&r, &["X^2", "Y^2"]);
        let j2 = ideal_from_strs(&r, &["X^2"]);
        assert_eq!(reduction_check(&j2, &i2, 6).unwrap(), None);
        assert_eq!(reduction_check(&i, &j, 3), Err(Error::NotContained));
    }

    #[test]
    fn probe_rejects_proper_reduction() {
        let r = GradedRing::standard(vec!["X", "Y"]).unwrap();
        let spec = FamilySpec::new(
            MonomialIdeal::unit(r.clone()),
            MonomialIdeal::zero(r.clone()),
            ideal_from_strs(&r, &["X^2", "X*Y", "Y^2"]),
            Some(ideal_from_strs(&r, &["X^2", "Y^2"])),
            MonomialIdeal::unit(r.clone()),
            FamilyKind::InModIn1N,
            5,
        )
        .unwrap();
        assert!(matches!(delta_probe(&spec, 4), Err(Error::Unsupported(_))));
    }
}
