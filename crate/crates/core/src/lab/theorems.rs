//! Theorem-compliance report over the three companion families of a spec.
//!
//! `H(n) = IⁿM/IⁿN`, `G(n) = IⁿM/Iⁿ⁺¹N` and `Q(n) = M/IⁿN` are all evaluated,
//! with `Q` one step further so that `G(n) ⊆ Q(n+1)` can be compared up to `n_max`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::ass::{AssSet, MonomialPrime};
use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::kernel::MonomialIdeal;
use crate::lab::family::{evaluate_series, generator_degrees, FamilyKind, FamilySpec, InvariantSeries, SeriesPoint};
use crate::lab::fit::{fit_eventual_linear, LinearLaw, DEFAULT_WINDOW};
use crate::lab::probe::{rees_probe, DeltaProbe, ReesQuotient, DEFAULT_S_MAX};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "INAPPLICABLE")]
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inapplicable => "INAPPLICABLE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremItem {
    pub id: char,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub window: usize,
    pub s_max: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            window: DEFAULT_WINDOW,
            s_max: DEFAULT_S_MAX,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComplianceReport {
    pub degrees: Vec<i64>,
    pub h_probe: Option<DeltaProbe>,
    pub g_probe: Option<DeltaProbe>,
    /// Keys like `"G.v"`, `"H.indeg"`, `"M.v"`.
    pub laws: BTreeMap<String, LinearLaw>,
    pub items: Vec<TheoremItem>,
    pub h: InvariantSeries,
    pub g: InvariantSeries,
    pub m: InvariantSeries,
}

impl ComplianceReport {
    pub fn item(&self, id: char) -> Option<&TheoremItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn verdict(&self, id: char) -> Option<Verdict> {
        self.item(id).map(|i| i.verdict)
    }

    /// No item failed.
    pub fn all_ok(&self) -> bool {
        self.items.iter().all(|i| i.verdict != Verdict::Fail)
    }
}

fn item(id: char, verdict: Verdict, detail: impl Into<String>) -> TheoremItem {
    TheoremItem {
        id,
        verdict,
        detail: detail.into(),
    }
}

fn pass_or_fail(id: char, ok: bool, detail: impl Into<String>) -> TheoremItem {
    item(id, if ok { Verdict::Pass } else { Verdict::Fail }, detail)
}

fn eventually_zero(s: &InvariantSeries, window: usize) -> bool {
    s.points.iter().rev().take(window).all(|p| p.v.overall == ExtInt::PosInf)
}

fn stable_fit(s: &InvariantSeries, values: &[ExtInt], first_n: i64, window: usize, what: &str) -> Result<LinearLaw> {
    let law = fit_eventual_linear(values, first_n, window);
    if !law.stabilized {
        return Err(Error::NotStabilized(format!(
            "{what} of {} up to n = {}",
            s.kind,
            s.last_n()
        )));
    }
    Ok(law)
}

fn contains_i(p: &MonomialPrime, i: &MonomialIdeal) -> bool {
    p.contains_ideal(i)
}

/// Compares `G(n)` with `Q(n+1)` on the primes containing `I`. Returns a
/// failure message, or `None` when every comparison holds. `checked` counts the
/// comparisons made.
fn compare_g_q(g: &SeriesPoint, q: &SeriesPoint, i: &MonomialIdeal, checked: &mut usize) -> Option<String> {
    let n = g.n;
    let ring = i.ring();
    let mut all_contain = !q.ass.is_empty();
    for p in q.ass.iter() {
        if !contains_i(p, i) {
            all_contain = false;
            continue;
        }
        *checked += 1;
        let vq = q.v.per_prime.get(p);
        let vg = g.v.per_prime.get(p);
        if vq != vg {
            return Some(format!(
                "n = {n}: v_{} differs ({:?} vs {:?})",
                p.label(ring),
                vg,
                vq
            ));
        }
    }
    if all_contain {
        *checked += 1;
        if g.v.overall != q.v.overall {
            return Some(format!(
                "n = {n}: v differs ({} vs {})",
                g.v.overall, q.v.overall
            ));
        }
    }
    None
}

/// Runs items (a) to (h). `spec.kind` is ignored: all three families are built
/// from its `A₀`, `B₀`, `I`, `J` and `𝔞`.
pub fn check_theorems(spec: &FamilySpec, opts: CheckOptions) -> Result<ComplianceReport> {
    let window = opts.window.max(2);
    let n_max = spec.n_max;
    if window > n_max as usize + 1 {
        return Err(Error::InvalidFamily(format!(
            "window {window} is longer than the series 0..={n_max}"
        )));
    }
    let degrees = generator_degrees(spec.reduction_ideal())?;
    let h = evaluate_series(&spec.with_kind(FamilyKind::InModInN))?;
    let g = evaluate_series(&spec.with_kind(FamilyKind::InModIn1N))?;
    let m = evaluate_series(&spec.with_kind(FamilyKind::MModInN).with_n_max(n_max + 1))?;
    let probe = |form| match rees_probe(spec, form, opts.s_max) {
        Ok(p) => Ok(Some(p)),
        Err(Error::Unsupported(_)) => Ok(None),
        Err(e) => Err(e),
    };
    let h_probe = probe(ReesQuotient::H)?;
    let g_probe = probe(ReesQuotient::G)?;

    let mut laws = BTreeMap::new();
    let mut items = Vec::new();

    // (a) and (b), per family.
    let mut a_parts = Vec::new();
    let mut a_ok = true;
    let mut b_parts = Vec::new();
    let mut b_ok = true;
    let ring = spec.ring();
    for (tag, s, pr) in [("H", &h, &h_probe), ("G", &g, &g_probe)] {
        if eventually_zero(s, window) {
            a_parts.push(format!("{tag} eventually zero"));
            continue;
        }
        let first = s.first_n() as i64;
        let li = stable_fit(s, &s.indeg_values(), first, window, "indeg")?;
        let lv = stable_fit(s, &s.v_values(), first, window, "v")?;
        laws.insert(format!("{tag}.indeg"), li);
        laws.insert(format!("{tag}.v"), lv);
        let delta = pr.as_ref().map(|p| p.delta_degree);
        let ok = li.slope == lv.slope
            && match delta {
                Some(d) => d == Some(lv.slope),
                None => degrees.contains(&lv.slope),
            };
        a_ok &= ok;
        a_parts.push(format!(
            "{tag}: slope(indeg) = {}, slope(v) = {}, delta_degree = {}",
            li.slope,
            lv.slope,
            match delta {
                Some(Some(d)) => d.to_string(),
                Some(None) => "none".into(),
                None => "unprobed".into(),
            }
        ));

        // (b): constant Ass tail, per-prime laws on it.
        let last_ass = &s.points.last().expect("nonempty series").ass;
        let tail_len = s
            .points
            .iter()
            .rev()
            .take_while(|p| &p.ass == last_ass)
            .count();
        if tail_len < window {
            return Err(Error::NotStabilized(format!(
                "associated primes of {} up to n = {}",
                s.kind,
                s.last_n()
            )));
        }
        let start = s.points.len() - tail_len;
        let allowed: Vec<i64> = match pr.as_ref().and_then(|p| p.delta_index) {
            Some(k) => degrees[k - 1..].to_vec(),
            None => degrees.clone(),
        };
        for p in last_ass.iter() {
            let vals = s.prime_values(p);
            let law = stable_fit(
                s,
                &vals[start..],
                s.points[start].n as i64,
                window,
                &format!("v_{}", p.label(ring)),
            )?;
            let ok = allowed.contains(&law.slope);
            b_ok &= ok;
            b_parts.push(format!("{tag}: v_({}) slope {}", p.label(ring), law.slope));
            laws.insert(format!("{tag}.v_({})", p.label(ring)), law);
        }
    }
    if laws.contains_key("H.v") || laws.contains_key("G.v") {
        items.push(pass_or_fail('a', a_ok, a_parts.join("; ")));
        items.push(pass_or_fail(
            'b',
            b_ok,
            format!("allowed slopes from {:?}; {}", degrees, b_parts.join("; ")),
        ));
    } else {
        items.push(item('a', Verdict::Inapplicable, a_parts.join("; ")));
        items.push(item('b', Verdict::Inapplicable, "no nonzero family"));
    }

    // (c): submodule bounds and the linear upper bound on v(M/IⁿN).
    let m_law = fit_eventual_linear(&m.v_values(), m.first_n() as i64, window);
    if m_law.stabilized {
        laws.insert("M.v".into(), m_law);
    }
    {
        let mut failure = None;
        let pairs = h
            .points
            .iter()
            .map(|p| (p, p.n))
            .chain(g.points.iter().map(|p| (p, p.n + 1)));
        for (sub, qn) in pairs {
            let q = m.point(qn).expect("Q series covers n_max + 1");
            if q.v.overall > sub.v.overall {
                failure = Some(format!("n = {qn}: v(M/IⁿN) = {} exceeds submodule value {}", q.v.overall, sub.v.overall));
                break;
            }
            for (p, &vs) in &sub.v.per_prime {
                match q.v.per_prime.get(p) {
                    Some(&vq) if vq <= vs => {}
                    other => {
                        failure = Some(format!(
                            "n = {qn}: v_({}) of M/IⁿN is {:?}, submodule has {vs}",
                            p.label(ring),
                            other
                        ));
                        break;
                    }
                }
            }
            if failure.is_some() {
                break;
            }
        }
        let bound_slope = laws
            .get("H.v")
            .and_then(|_| h_probe.as_ref().and_then(|p| p.delta_degree))
            .or_else(|| laws.get("G.v").map(|l| l.slope));
        let mut detail = String::new();
        if let Some(d) = bound_slope {
            let e = m
                .points
                .iter()
                .filter(|p| p.n >= 1)
                .filter_map(|p| p.v.overall.finite().map(|v| v - d * p.n as i64))
                .max();
            detail = match e {
                Some(e) => format!("bound slope {d}, e = {e}"),
                None => format!("bound slope {d}"),
            };
            if m_law.stabilized && m_law.slope > d && failure.is_none() {
                failure = Some(format!("slope of v(M/IⁿN) is {} > {d}", m_law.slope));
            }
        }
        items.push(match failure {
            Some(f) => item('c', Verdict::Fail, f),
            None => item('c', Verdict::Pass, detail),
        });
    }

    let tail: Vec<u32> = (n_max + 1 - window as u32..=n_max).collect();
    let i = &spec.i;

    // (d): colon comparison on the tail.
    if !g.ann_i_zero {
        items.push(item('d', Verdict::Inapplicable, "(0 :_M I) ≠ 0"));
    } else {
        let mut failure = None;
        for &n in &tail {
            let full = spec.i.power(n + 1)?.product(&spec.m_num)?.sum(&spec.m_den);
            let lhs = full.colon_ideal(i)?.intersect(&spec.m_num);
            let num = spec.power_of_m(n)?;
            if lhs != num {
                failure = Some(format!("n = {n}: (I^(n+1)M :_M I) ≠ IⁿM"));
                break;
            }
            let den = spec.power_of_n(n + 1)?;
            let q = m.point(n + 1).expect("Q series covers n_max + 1");
            let mut us = vec![i.clone()];
            us.extend(
                q.ass
                    .iter()
                    .filter(|p| contains_i(p, i))
                    .map(|p| MonomialIdeal::variables(spec.ring().clone(), p.support())),
            );
            for u in &us {
                if !den.colon_ideal(u)?.intersect(&spec.m_num).is_subset_of(&num) {
                    failure = Some(format!("n = {n}: (I^(n+1)N :_M {u}) ⊄ IⁿM"));
                    break;
                }
            }
            if failure.is_some() {
                break;
            }
        }
        items.push(match failure {
            Some(f) => item('d', Verdict::Fail, f),
            None => item('d', Verdict::Pass, format!("n = {}..={}", tail[0], n_max)),
        });
    }

    // (e): tail equality of v on primes containing I.
    let ass_agree = |n: u32| -> bool {
        let gp = g.point(n).expect("n in range");
        let qp = m.point(n + 1).expect("n + 1 in range");
        gp.ass == qp.ass
    };
    if !g.ann_i_zero {
        items.push(item('e', Verdict::Inapplicable, "(0 :_M I) ≠ 0"));
    } else if !tail.iter().all(|&n| ass_agree(n)) {
        items.push(item('e', Verdict::Inapplicable, "Ass tails differ"));
    } else {
        let mut checked = 0;
        let failure = tail.iter().find_map(|&n| {
            compare_g_q(g.point(n).unwrap(), m.point(n + 1).unwrap(), i, &mut checked)
        });
        items.push(match failure {
            Some(f) => item('e', Verdict::Fail, f),
            None if checked == 0 => item('e', Verdict::Inapplicable, "no associated prime contains I"),
            None => item('e', Verdict::Pass, format!("{checked} comparisons")),
        });
    }

    // (f): pointwise equality under colon stability.
    {
        let mut checked = 0;
        let mut used = Vec::new();
        let mut failure = None;
        for gp in &g.points {
            let qp = m.point(gp.n + 1).unwrap();
            if !gp.colon_stable || gp.ass != qp.ass || gp.ass.is_empty() {
                continue;
            }
            used.push(gp.n);
            if let Some(f) = compare_g_q(gp, qp, i, &mut checked) {
                failure = Some(f);
                break;
            }
        }
        items.push(match failure {
            Some(f) => item('f', Verdict::Fail, f),
            None if checked == 0 => item('f', Verdict::Inapplicable, "no colon-stable n with matching Ass"),
            None => item('f', Verdict::Pass, format!("n ∈ {used:?}")),
        });
    }

    // (g): leading coefficient d₁.
    {
        let d1 = degrees[0];
        let mut contained_at = None;
        let target = spec.power_of_n(0)?;
        for n0 in 0..=n_max {
            if spec.power_of_m(n0)?.is_subset_of(&target) {
                contained_at = Some(n0);
                break;
            }
        }
        let verdict = if !g.ann_y1_zero {
            item('g', Verdict::Inapplicable, "(0 :_M y₁) ≠ 0")
        } else if d1 < 1 {
            item('g', Verdict::Inapplicable, "d₁ = 0")
        } else if contained_at.is_none() {
            item('g', Verdict::Inapplicable, format!("IⁿM ⊄ N for n ≤ {n_max}"))
        } else if !laws.contains_key("G.v") {
            item('g', Verdict::Inapplicable, "IⁿM/Iⁿ⁺¹N eventually zero")
        } else {
            if !m_law.stabilized {
                return Err(Error::NotStabilized(format!("v of M_mod_InN up to n = {}", m.last_n())));
            }
            let gi = laws["G.indeg"].slope;
            let gv = laws["G.v"].slope;
            let idx = g_probe.as_ref().map(|p| p.delta_index);
            let ok = gi == d1 && gv == d1 && m_law.slope == d1 && idx.is_none_or(|k| k == Some(1));
            pass_or_fail(
                'g',
                ok,
                format!(
                    "d₁ = {d1}; slopes indeg {gi}, v {gv}, v(M/IⁿN) {}; probe index {:?}",
                    m_law.slope,
                    idx.flatten()
                ),
            )
        };
        items.push(verdict);
    }

    // (h): Ass of the submodule families inside Ass(M/IⁿN).
    {
        let sub = |a: &AssSet, b: &AssSet| a.is_subset(b);
        let failure = h
            .points
            .iter()
            .map(|p| (p, p.n))
            .chain(g.points.iter().map(|p| (p, p.n + 1)))
            .find(|(p, qn)| !sub(&p.ass, &m.point(*qn).unwrap().ass))
            .map(|(p, qn)| format!("n = {}: {} ⊄ Ass(M/I^{qn}N)", p.n, p.ass.display(ring)));
        items.push(match failure {
            Some(f) => item('h', Verdict::Fail, f),
            None => item('h', Verdict::Pass, format!("n = 0..={n_max}")),
        });
    }

    Ok(ComplianceReport {
        degrees,
        h_probe,
        g_probe,
        laws,
        items,
        h,
        g,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ideal_from_strs, GradedRing};
    use crate::lab::golden::{principal_family, xyz_family};

    fn show(r: &ComplianceReport) -> String {
        r.items
            .iter()
            .map(|i| format!("({}) {} {}", i.id, i.verdict, i.detail))
            .collect::<Vec<_>>()
            .join("\n")
    }

    #[test]
    fn xyz_report() {
        let r = check_theorems(&xyz_family(), CheckOptions::default()).unwrap();
        assert!(r.all_ok(), "{}", show(&r));
        assert_eq!(r.laws["G.v"].slope, 2);
        assert_eq!(r.verdict('g'), Some(Verdict::Inapplicable));
        assert_eq!(r.verdict('h'), Some(Verdict::Pass));
    }

    #[test]
    fn principal_report() {
        let r = check_theorems(&principal_family(2, 3), CheckOptions::default()).unwrap();
        assert!(r.all_ok(), "{}", show(&r));
        assert_eq!(r.laws["M.v"].slope, 0);
        assert_eq!(r.laws["M.v"].intercept, 3);
    }

    #[test]
    fn proper_submodule_n() {
        let r = GradedRing::standard(vec!["X", "Y", "Z"]).unwrap();
        let spec = FamilySpec::new(
            MonomialIdeal::unit(r.clone()),
            ideal_from_strs(&r, &["X^2*Y"]),
            ideal_from_strs(&r, &["X", "Y^2", "Z"]),
            None,
            ideal_from_strs(&r, &["X", "Z^2"]),
            FamilyKind::InModInN,
            7,
        )
        .unwrap();
        let rep = check_theorems(&spec, CheckOptions::default()).unwrap();
        assert!(rep.all_ok(), "{}", show(&rep));
        assert_eq!(rep.verdict('a'), Some(Verdict::Pass), "{}", show(&rep));
    }

    #[test]
    fn window_longer_than_series() {
        let spec = xyz_family().with_n_max(4);
        let opts = CheckOptions { window: 6, s_max: 4 };
        assert!(matches!(check_theorems(&spec, opts), Err(Error::InvalidFamily(_))));
    }
}
