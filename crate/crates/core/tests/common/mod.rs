//! Test-side brute force over raw exponent vectors, and random instance
//! generators. Nothing here calls the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use vnum_core::{GradedRing, Monomial, MonomialIdeal, Subquotient};

pub type Exps = Vec<u32>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Exps], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

pub fn mul(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn wdeg(w: &[u32], m: &[u32]) -> i64 {
    w.iter().zip(m).map(|(a, b)| *a as i64 * *b as i64).sum()
}

pub fn raw(i: &MonomialIdeal) -> Vec<Exps> {
    i.gens().iter().map(|g| g.exponents().to_vec()).collect()
}

/// Every exponent vector of weighted degree at most `bound`.
pub fn box_monomials(w: &[u32], bound: i64) -> Vec<Exps> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; w.len()];
    fn rec(w: &[u32], i: usize, left: i64, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == w.len() {
            out.push(cur.clone());
            return;
        }
        let mut e = 0;
        while e as i64 * w[i] as i64 <= left {
            cur[i] = e;
            rec(w, i + 1, left - e as i64 * w[i] as i64, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    if bound >= 0 {
        rec(w, 0, bound, &mut cur, &mut out);
    }
    out
}

/// Keeps only the divisibility-minimal elements.
pub fn minimal(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort();
    gens.dedup();
    let keep: Vec<Exps> = gens
        .iter()
        .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
        .cloned()
        .collect();
    keep
}

pub fn raw_product(a: &[Exps], b: &[Exps]) -> Vec<Exps> {
    minimal(a.iter().flat_map(|x| b.iter().map(move |y| mul(x, y))).collect())
}

pub fn raw_power(a: &[Exps], n: usize, nvars: usize) -> Vec<Exps> {
    let mut acc = vec![vec![0; nvars]];
    for _ in 0..n {
        acc = raw_product(&acc, a);
    }
    acc
}

/// `(B :_R m) = P_S` tested directly: returns `S` when the colon of the
/// monomial `m ∉ B` is generated by variables.
pub fn colon_prime(den: &[Exps], m: &[u32]) -> Option<Vec<usize>> {
    if member(den, m) {
        return None;
    }
    let n = m.len();
    let s: Vec<usize> = (0..n)
        .filter(|&i| {
            let mut x = m.to_vec();
            x[i] += 1;
            member(den, &x)
        })
        .collect();
    // A monomial u free of S with u·m ∈ B may be capped at the largest
    // exponent occurring in B.
    let k = den.iter().flatten().copied().max().unwrap_or(0);
    let mut big = m.to_vec();
    for (i, e) in big.iter_mut().enumerate() {
        if !s.contains(&i) {
            *e += k;
        }
    }
    (!member(den, &big)).then_some(s)
}

/// Associated primes of `A/B` (as supports) with the least witness degree,
/// from all monomials of degree at most `bound` (unshifted).
pub fn brute_ass_v(q: &Subquotient, bound: i64) -> BTreeMap<Vec<usize>, i64> {
    let w = q.ring().weights().to_vec();
    let num = raw(q.num());
    let den = raw(q.den());
    let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for m in box_monomials(&w, bound) {
        if !member(&num, &m) {
            continue;
        }
        if let Some(s) = colon_prime(&den, &m) {
            let d = wdeg(&w, &m) + q.shift();
            let e = out.entry(s).or_insert(d);
            *e = (*e).min(d);
        }
    }
    out
}

pub fn random_ring(r: &mut ChaCha8Rng, max_vars: usize) -> Arc<GradedRing> {
    let n = r.gen_range(1..=max_vars);
    let names = ["X", "Y", "Z", "W"][..n].to_vec();
    let weights = (0..n).map(|_| r.gen_range(1..=2)).collect();
    GradedRing::new(names, weights).unwrap()
}

pub fn random_exps(r: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Exps {
    (0..n).map(|_| r.gen_range(0..=max_exp)).collect()
}

pub fn random_ideal(r: &mut ChaCha8Rng, ring: &Arc<GradedRing>, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let k = r.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| Monomial::new(random_exps(r, ring.nvars(), max_exp)))
        .collect();
    MonomialIdeal::new(ring.clone(), gens).unwrap()
}

/// Up to `max_gens` random monomials inside `outer`; possibly none.
pub fn random_subideal(r: &mut ChaCha8Rng, outer: &MonomialIdeal, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let ring = outer.ring();
    let k = r.gen_range(0..=max_gens);
    let mut gens = Vec::new();
    let mut tries = 0;
    while gens.len() < k && tries < 50 {
        tries += 1;
        let m = Monomial::new(random_exps(r, ring.nvars(), max_exp));
        if outer.contains(&m) {
            gens.push(m);
        }
    }
    MonomialIdeal::new(ring.clone(), gens).unwrap()
}

/// A random `A/B` with `B ⊆ A`, at most four generators each and exponents at most four.
pub fn random_subquotient(r: &mut ChaCha8Rng, ring: &Arc<GradedRing>) -> Subquotient {
    let a = if r.gen_bool(0.3) {
        MonomialIdeal::unit(ring.clone())
    } else {
        random_ideal(r, ring, 4, 4)
    };
    let b = random_subideal(r, &a, 4, 4);
    let shift = r.gen_range(-2..=2);
    Subquotient::new(a, b, shift).unwrap()
}
