//! Built-in reference families with known closed forms, and a self-check that
//! recomputes them.

use std::fmt::Debug;
use std::sync::Arc;

use serde::Serialize;

use crate::ass::{AssSet, MonomialPrime};
use crate::error::Result;
use crate::extint::ExtInt;
use crate::kernel::{ideal_from_strs, GradedRing, MonomialIdeal};
use crate::lab::family::{colon_stability, evaluate_series, family_member, FamilyKind, FamilySpec};
use crate::lab::fit::{fit_eventual_linear, DEFAULT_WINDOW};
use crate::lab::probe::{delta_probe, RadicalVerdict, DEFAULT_S_MAX};
use crate::lab::theorems::{check_theorems, CheckOptions, Verdict};
use crate::vnumber::{gamma_end_check, v};

pub const PRINCIPAL_PARAMS: [(u32, u32); 4] = [(1, 1), (1, 3), (2, 3), (3, 2)];
pub const NODE_PARAMS: [(u32, u32); 3] = [(1, 2), (2, 3), (3, 5)];

fn ring_xy() -> Arc<GradedRing> {
    GradedRing::standard(vec!["X", "Y"]).expect("valid ring")
}

/// `M = R/(XY^b)`, `I = (X^a)` over `k[X,Y]`, with `N = M`.
pub fn principal_family(a: u32, b: u32) -> FamilySpec {
    let r = ring_xy();
    FamilySpec::new(
        MonomialIdeal::unit(r.clone()),
        ideal_from_strs(&r, &[&format!("X*Y^{b}")]),
        ideal_from_strs(&r, &[&format!("X^{a}")]),
        None,
        MonomialIdeal::unit(r),
        FamilyKind::MModInN,
        10,
    )
    .expect("valid spec")
}

/// Same data with `N = 0`, so the `In_mod_InN` members are the powers `IⁿM`.
pub fn principal_powers(a: u32, b: u32) -> FamilySpec {
    let spec = principal_family(a, b);
    FamilySpec {
        a: MonomialIdeal::zero(spec.ring().clone()),
        kind: FamilyKind::InModInN,
        ..spec
    }
}

/// `R/(XY)` as a module over `k[X,Y]`, `I = (X^d₁, Y^d₂)`.
pub fn node_family(d1: u32, d2: u32) -> FamilySpec {
    let r = ring_xy();
    FamilySpec::new(
        MonomialIdeal::unit(r.clone()),
        ideal_from_strs(&r, &["X*Y"]),
        ideal_from_strs(&r, &[&format!("X^{d1}"), &format!("Y^{d2}")]),
        None,
        MonomialIdeal::unit(r),
        FamilyKind::MModInN,
        10,
    )
    .expect("valid spec")
}

/// `M = R/(X³, XY⁴)`, `I = (X, Y², Z³)` over `k[X,Y,Z]`, `N = M`.
pub fn xyz_family() -> FamilySpec {
    let r = GradedRing::standard(vec!["X", "Y", "Z"]).expect("valid ring");
    FamilySpec::new(
        MonomialIdeal::unit(r.clone()),
        ideal_from_strs(&r, &["X^3", "X*Y^4"]),
        ideal_from_strs(&r, &["X", "Y^2", "Z^3"]),
        None,
        MonomialIdeal::unit(r),
        FamilyKind::InModIn1N,
        8,
    )
    .expect("valid spec")
}

pub const XYZ_INDEG: [i64; 9] = [0, 1, 2, 4, 7, 10, 12, 14, 16];
pub const XYZ_V: [i64; 9] = [3, 4, 5, 7, 10, 13, 15, 17, 19];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Checks(Vec<GoldenCheck>);

impl Checks {
    fn eq<T: PartialEq + Debug>(&mut self, name: String, got: T, want: T) {
        let passed = got == want;
        let detail = if passed {
            format!("{got:?}")
        } else {
            format!("got {got:?}, expected {want:?}")
        };
        self.0.push(GoldenCheck { name, passed, detail });
    }

    fn truth(&mut self, name: String, ok: bool, detail: String) {
        self.0.push(GoldenCheck {
            name,
            passed: ok,
            detail,
        });
    }
}

fn primes(ps: &[&[usize]]) -> AssSet {
    ps.iter().map(|s| MonomialPrime::new(s.to_vec())).collect()
}

fn fin(v: i64) -> ExtInt {
    ExtInt::Finite(v)
}

fn principal_checks(c: &mut Checks, a: u32, b: u32) -> Result<()> {
    let tag = format!("principal(a={a},b={b})");
    let (p, q, m) = (MonomialPrime::new(vec![0]), MonomialPrime::new(vec![1]), MonomialPrime::new(vec![0, 1]));
    let powers = principal_powers(a, b);
    let spec = principal_family(a, b);
    let (a, b) = (a as i64, b as i64);
    for n in 1..=10u32 {
        let ni = n as i64;
        let inm = family_member(&powers, n)?;
        let r = v(&inm)?;
        c.eq(format!("{tag} n={n} Ass(I^nM)"), crate::ass::ass(&inm), primes(&[&[1]]));
        c.eq(format!("{tag} n={n} indeg(I^nM)"), inm.indeg(), fin(a * ni));
        c.eq(format!("{tag} n={n} v(I^nM)"), r.overall, fin(a * ni + b - 1));
        c.eq(format!("{tag} n={n} v_q(I^nM)"), r.per_prime.get(&q).copied(), Some(a * ni + b - 1));

        let g = family_member(&spec.with_kind(FamilyKind::InModIn1N), n)?;
        c.eq(format!("{tag} n={n} indeg(I^nM/I^n+1M)"), g.indeg(), fin(a * ni));
        c.eq(format!("{tag} n={n} Ass(I^nM/I^n+1M)"), crate::ass::ass(&g), primes(&[&[0, 1]]));
        c.eq(format!("{tag} n={n} v(I^nM/I^n+1M)"), v(&g)?.overall, fin(a * ni + a + b - 2));

        let quo = family_member(&spec, n)?;
        let rq = v(&quo)?;
        if a * ni == 1 {
            c.eq(format!("{tag} n={n} Ass(M/I^nM)"), crate::ass::ass(&quo), primes(&[&[0]]));
            c.eq(format!("{tag} n={n} v_p(M/I^nM)"), rq.per_prime.get(&p).copied(), Some(0));
            c.eq(format!("{tag} n={n} v(M/I^nM)"), rq.overall, fin(0));
        } else {
            c.eq(format!("{tag} n={n} Ass(M/I^nM)"), crate::ass::ass(&quo), primes(&[&[0], &[0, 1]]));
            c.eq(format!("{tag} n={n} v_p(M/I^nM)"), rq.per_prime.get(&p).copied(), Some(b));
            c.eq(format!("{tag} n={n} v_m(M/I^nM)"), rq.per_prime.get(&m).copied(), Some(a * ni + b - 2));
            c.eq(format!("{tag} n={n} v(M/I^nM)"), rq.overall, fin(b));
        }
    }
    Ok(())
}

fn node_checks(c: &mut Checks, d1: u32, d2: u32) -> Result<()> {
    let tag = format!("node(d1={d1},d2={d2})");
    let spec = node_family(d1, d2);
    let (d1, d2) = (d1 as i64, d2 as i64);
    for n in 1..=10u32 {
        let ni = n as i64;
        let q = family_member(&spec, n)?;
        c.eq(format!("{tag} n={n} Ass(R/I^n)"), crate::ass::ass(&q), primes(&[&[0, 1]]));
        // When d₁n = 1 the quotient is R/(X, Y^{d₂n}): the class of 1 is
        // killed by (X, Y^{d₂n}) only, and the socle sits in degree d₂n − 1.
        let want = if d1 * ni == 1 { d2 * ni - 1 } else { d1 * ni - 1 };
        c.eq(format!("{tag} n={n} v(R/I^n)"), v(&q)?.overall, fin(want));
        c.eq(format!("{tag} n={n} end(R/I^n)"), q.end_artinian()?, fin(d2 * ni - 1));
        let ge = gamma_end_check(&q)?;
        c.truth(
            format!("{tag} n={n} v_m <= end(Gamma_m)"),
            ge.holds,
            format!("v_m = {}, end = {}", ge.v_max, ge.end_gamma),
        );
    }
    Ok(())
}

fn xyz_checks(c: &mut Checks) -> Result<()> {
    let tag = "xyz";
    let spec = xyz_family();
    let g = evaluate_series(&spec)?;
    let m = evaluate_series(&spec.with_kind(FamilyKind::MModInN).with_n_max(9))?;
    let want_indeg: Vec<ExtInt> = XYZ_INDEG.iter().map(|&x| fin(x)).collect();
    let want_v: Vec<ExtInt> = XYZ_V.iter().map(|&x| fin(x)).collect();
    c.eq(format!("{tag} indeg(I^nM/I^n+1M), n=0..8"), g.indeg_values(), want_indeg);
    c.eq(format!("{tag} v(I^nM/I^n+1M), n=0..8"), g.v_values(), want_v.clone());
    c.eq(format!("{tag} v(M/I^n+1M), n=0..8"), m.v_values()[1..].to_vec(), want_v);
    let maximal = primes(&[&[0, 1, 2]]);
    for n in 1..=8u32 {
        c.eq(format!("{tag} n={n} Ass(I^nM/I^n+1M)"), g.point(n).unwrap().ass.clone(), maximal.clone());
        c.eq(format!("{tag} n={n} Ass(M/I^nM)"), m.point(n).unwrap().ass.clone(), maximal.clone());
    }
    let stable: Vec<bool> = (0..=6).map(|n| colon_stability(&spec, n)).collect::<Result<_>>()?;
    c.eq(format!("{tag} colon stability n=0..6"), stable, vec![true; 7]);
    c.eq(format!("{tag} (0:_M I) = 0"), g.ann_i_zero, true);

    let li = fit_eventual_linear(&g.indeg_values(), 0, DEFAULT_WINDOW);
    let lv = fit_eventual_linear(&g.v_values(), 0, DEFAULT_WINDOW);
    c.eq(format!("{tag} indeg law (slope, start_n)"), (li.slope, li.start_n, li.stabilized), (2, 5, true));
    c.eq(
        format!("{tag} v law (slope, intercept, start_n)"),
        (lv.slope, lv.intercept, lv.start_n, lv.stabilized),
        (2, 3, 5, true),
    );

    let probe = delta_probe(&spec, DEFAULT_S_MAX)?;
    c.truth(
        format!("{tag} probe: X in radical with s <= 3"),
        matches!(probe.verdicts[0], RadicalVerdict::InRadical(s) if s <= 3),
        format!("{:?}", probe.verdicts[0]),
    );
    c.eq(
        format!("{tag} probe: Y^2 not found"),
        probe.verdicts[1],
        RadicalVerdict::NotFoundBelow(DEFAULT_S_MAX),
    );
    c.eq(format!("{tag} probe: delta_degree"), probe.delta_degree, Some(2));
    Ok(())
}

fn theorem_checks(c: &mut Checks, name: &str, spec: &FamilySpec, expect: &[(char, Verdict)]) -> Result<()> {
    let runs = [
        (spec.clone(), CheckOptions::default()),
        (
            spec.with_n_max(spec.n_max + 4),
            CheckOptions {
                window: DEFAULT_WINDOW + 1,
                ..CheckOptions::default()
            },
        ),
    ];
    for (s, opts) in runs {
        let label = format!("{name} theorems (n_max={}, window={})", s.n_max, opts.window);
        let report = check_theorems(&s, opts)?;
        let failed: Vec<String> = report
            .items
            .iter()
            .filter(|i| i.verdict == Verdict::Fail)
            .map(|i| format!("({}) {}", i.id, i.detail))
            .collect();
        c.truth(format!("{label}: no FAIL"), failed.is_empty(), failed.join("; "));
        for &(id, want) in expect {
            c.eq(format!("{label}: ({id})"), report.verdict(id), Some(want));
        }
    }
    Ok(())
}

/// Recomputes every reference value. Each entry is one assertion.
pub fn verify_golden() -> Result<Vec<GoldenCheck>> {
    let mut c = Checks(Vec::new());
    for (a, b) in PRINCIPAL_PARAMS {
        principal_checks(&mut c, a, b)?;
    }
    for (d1, d2) in NODE_PARAMS {
        node_checks(&mut c, d1, d2)?;
    }
    xyz_checks(&mut c)?;

    use Verdict::*;
    theorem_checks(
        &mut c,
        "xyz",
        &xyz_family(),
        &[('a', Pass), ('d', Pass), ('e', Pass), ('f', Pass), ('g', Inapplicable)],
    )?;
    for (a, b) in PRINCIPAL_PARAMS {
        theorem_checks(
            &mut c,
            &format!("principal(a={a},b={b})"),
            &principal_family(a, b),
            &[('d', Inapplicable), ('e', Inapplicable)],
        )?;
    }
    for (d1, d2) in NODE_PARAMS {
        theorem_checks(
            &mut c,
            &format!("node(d1={d1},d2={d2})"),
            &node_family(d1, d2),
            &[('a', Pass), ('g', Inapplicable)],
        )?;
    }
    Ok(c.0)
}
