//! Cross-oracle verification suites, run by `freeqg verify`.
//!
//! Each suite checks one family of identities up to a word-length bound and
//! reports how many individual checks it ran. Suites run in parallel; the
//! report is ordered by suite name.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{ExactMatrix, GaussianRational};
use crate::fixed_vectors::{random_invertible, w_span_dim, FixedSpace};
use crate::fock::{fock_moment, semicircular_moment};
use crate::fusion::{
    catalan_closed, dim_o, dim_u, fuse, fuse_o, generalized_catalan, j_expand, star_moment,
    FusionElement, OWeight,
};
use crate::pairings::{count_colored, enumerate_colored, enumerate_plain};
use crate::powers::{check_lemma12, check_lemma13, lemma10_extremal, lemma10_trial, random_word_set};
use crate::words::Word;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub pass: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_len: usize,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

type Suite = (&'static str, fn(usize) -> Tally);

const SUITES: &[Suite] = &[
    ("catalan-chain", suite_catalan),
    ("dimensions", suite_dimensions),
    ("fixed-vectors", suite_fixed_vectors),
    ("fusion-ring", suite_fusion_ring),
    ("haar-projector", suite_haar),
    ("j-inverse", suite_j_inverse),
    ("lemma10", suite_lemma10),
    ("moments", suite_moments),
    ("o-fusion", suite_o_fusion),
    ("pairings", suite_pairings),
    ("powers", suite_powers),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Runs every suite with word lengths bounded by `max_len`.
pub fn run_all(max_len: usize) -> VerifyReport {
    let mut suites: Vec<SuiteReport> = SUITES
        .par_iter()
        .map(|&(name, f)| {
            let start = Instant::now();
            let t = f(max_len);
            SuiteReport {
                name,
                pass: t.failures.is_empty(),
                checks: t.checks,
                failures: t.failures,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect();
    suites.sort_by_key(|s| s.name);
    VerifyReport {
        max_len,
        pass: suites.iter().all(|s| s.pass),
        suites,
    }
}

fn suite_moments(max_len: usize) -> Tally {
    let mut t = Tally::default();
    let words = Word::all_up_to(max_len);
    let rows: Vec<(Word, [BigInt; 4])> = words
        .par_iter()
        .map(|w| {
            let vals = [
                star_moment(w),
                generalized_catalan(w),
                BigInt::from(enumerate_colored(w).len()),
                fock_moment(w),
            ];
            (w.clone(), vals)
        })
        .collect();
    for (w, v) in rows {
        t.check(v.iter().all(|x| *x == v[0]), || {
            format!("{w}: J/τ {} recursion {} pairings {} fock {}", v[0], v[1], v[2], v[3])
        });
        if w.len() % 2 == 0 {
            let plain = catalan_closed((w.len() / 2) as u32);
            t.check(v[0] <= plain, || format!("{w}: colored count exceeds {plain}"));
        }
    }
    t
}

fn suite_catalan(max_len: usize) -> Tally {
    let mut t = Tally::default();
    let id2 = ExactMatrix::identity(2);
    for k in 0..=(max_len / 2).min(5) {
        let c = catalan_closed(k as u32);
        let listed = BigInt::from(enumerate_plain(k).len());
        let semi = semicircular_moment(2 * k);
        let span = w_span_dim(&id2, k).map(BigInt::from);
        t.check(listed == c && semi == c && span.as_ref().ok() == Some(&c), || {
            format!("k={k}: closed {c} listed {listed} semicircular {semi} span {span:?}")
        });
    }
    t
}

fn suite_pairings(max_len: usize) -> Tally {
    let mut t = Tally::default();
    for w in Word::all_up_to(max_len) {
        let listed = enumerate_colored(&w);
        t.check(listed.iter().all(|p| p.is_valid()), || format!("{w}: invalid pairing"));
        t.check(BigInt::from(listed.len()) == count_colored(&w), || {
            format!("{w}: enumeration vs interval count")
        });
    }
    t
}

fn suite_fusion_ring(max_len: usize) -> Tally {
    let mut t = Tally::default();
    let l3 = max_len.min(4);
    let words = Word::all_up_to(l3);
    for x in &words {
        let fx = FusionElement::word(x.clone());
        t.check(fuse(x, &Word::empty()) == fx && fuse(&Word::empty(), x) == fx, || {
            format!("unit law fails at {x}")
        });
        for y in &words {
            let xy = fuse(x, y);
            let fy = FusionElement::word(y.clone());
            t.check(xy.involute() == fy.involute().fuse(&fx.involute()), || {
                format!("involution antihomomorphism fails at ({x},{y})")
            });
            for z in &words {
                let fz = FusionElement::word(z.clone());
                t.check(xy.fuse(&fz) == fx.fuse(&fuse(y, z)), || {
                    format!("associativity fails at ({x},{y},{z})")
                });
            }
        }
    }
    let l5 = max_len.min(5);
    let words = Word::all_up_to(l5);
    for x in &words {
        for y in &words {
            let expected = BigInt::from((x == y) as i32);
            t.check(fuse(x, &y.involute()).tau() == expected, || {
                format!("τ({x}⊙{}) ≠ δ", y.involute())
            });
        }
    }
    t
}

fn suite_j_inverse(max_len: usize) -> Tally {
    let mut t = Tally::default();
    for w in Word::all_up_to(max_len.min(6)) {
        let j = j_expand(&w);
        t.check(j.j_inverse() == FusionElement::word(w.clone()), || {
            format!("J⁻¹J ≠ Id at {w}")
        });
        let diff = &j - &FusionElement::word(w.clone());
        t.check(diff.support().all(|v| v.len() < w.len()), || {
            format!("(J−Id)({w}) not strictly shorter")
        });
        t.check(j.is_non_negative(), || format!("J({w}) has a negative coefficient"));
    }
    t
}

fn suite_dimensions(max_len: usize) -> Tally {
    let mut t = Tally::default();
    let words = Word::all_up_to(max_len.min(5));
    for n in [2usize, 3] {
        for x in &words {
            for y in &words {
                let sum: BigInt = fuse(x, y)
                    .support()
                    .map(|w| dim_u(w, n).unwrap())
                    .sum();
                let prod = dim_u(x, n).unwrap() * dim_u(y, n).unwrap();
                t.check(sum == prod, || format!("n={n}: dims of {x}⊙{y}"));
            }
        }
    }
    let ab: Word = "ab".parse().unwrap();
    t.check(dim_u(&ab, 2).ok() == Some(BigInt::from(3)), || "dim r_ab at n=2".into());
    for k in 0..=10u32 {
        t.check(dim_o(OWeight(k), 2).ok() == Some(BigInt::from(k + 1)), || {
            format!("dim_o({k}) at n=2")
        });
    }
    t
}

fn suite_o_fusion(_max_len: usize) -> Tally {
    let mut t = Tally::default();
    for k in 0..=8u32 {
        for s in 0..=8u32 {
            let got: Vec<u32> = fuse_o(OWeight(k), OWeight(s)).iter().map(|w| w.0).collect();
            let expected: Vec<u32> = (k.abs_diff(s)..=k + s).step_by(2).collect();
            t.check(got == expected, || format!("r_{k}⊗r_{s}"));
            for n in [2usize, 3] {
                let sum: BigInt = fuse_o(OWeight(k), OWeight(s))
                    .into_iter()
                    .map(|r| dim_o(r, n).unwrap())
                    .sum();
                let prod = dim_o(OWeight(k), n).unwrap() * dim_o(OWeight(s), n).unwrap();
                t.check(sum == prod, || format!("n={n}: dims of r_{k}⊗r_{s}"));
            }
        }
    }
    t
}

fn suite_fixed_vectors(max_len: usize) -> Tally {
    let mut t = Tally::default();
    let bound = max_len.min(6);
    let mut matrices = vec![(2, ExactMatrix::identity(2)), (3, ExactMatrix::identity(3))];
    for seed in 0..2 {
        matrices.push((2, random_invertible(2, seed)));
        matrices.push((3, random_invertible(3, 100 + seed)));
    }
    for (n, f) in matrices {
        let space = FixedSpace::new(f).expect("invertible");
        let (c1, c2) = space.contractions();
        t.check(
            c1.as_scalar().is_some() && c2.as_scalar().is_some(),
            || format!("n={n}: contraction identities not scalar"),
        );
        let limit = if n == 2 { bound } else { bound.min(4) };
        for w in Word::all_up_to(limit) {
            let c = generalized_catalan(&w);
            let z = space.z_basis(&w).expect("within guardrail");
            t.check(z == space.z_closed_form(&w).expect("within guardrail"), || {
                format!("n={n} {w}: recursion and closed form differ")
            });
            let rank = space.fixed_dim(&w).map(BigInt::from);
            t.check(rank.as_ref().ok() == Some(&c), || {
                format!("n={n} {w}: rank {rank:?} vs C_w {c}")
            });
        }
    }
    t
}

fn suite_haar(max_len: usize) -> Tally {
    let mut t = Tally::default();
    let space = FixedSpace::new(random_invertible(2, 7)).expect("invertible");
    for w in Word::all_up_to(max_len.min(4)) {
        let p = space.haar_projector(&w).expect("projector");
        let p2 = p.mul(&p).expect("square");
        t.check(p2 == p, || format!("{w}: P² ≠ P"));
        t.check(p.adjoint() == p, || format!("{w}: P* ≠ P"));
        let rank = space.fixed_dim(&w).expect("rank");
        t.check(p.trace() == GaussianRational::from_int(rank as i64), || {
            format!("{w}: trace ≠ rank")
        });
    }
    // trace(P_{x·ȳ}) = dim Mor(u^y, u^x) = Σ_v J(x)_v J(y)_v
    let id = FixedSpace::new(ExactMatrix::identity(2)).expect("identity");
    for x in Word::all_up_to(max_len.min(3)) {
        for y in Word::all_up_to(max_len.min(3)) {
            let word = x.concat(&y.involute());
            let p = id.haar_projector(&word).expect("projector");
            let jx = j_expand(&x);
            let jy = j_expand(&y);
            let expected: BigInt = jx.terms().map(|(v, c)| c * jy.coeff(v)).sum();
            let expected = GaussianRational::real(expected.into());
            t.check(p.trace() == expected, || format!("trace P_{word} vs ⟨J({x}),J({y})⟩"));
        }
    }
    t
}

fn suite_powers(max_len: usize) -> Tally {
    let mut t = Tally::default();
    for l in 6..=max_len.max(6).min(10) {
        let r = check_lemma12(l).expect("bound ≥ 6");
        t.check(r.pass, || format!("lemma 12 at L={l}: {:?}", r.witnesses));
    }
    for seed in 0..20 {
        let set = random_word_set(seed, 3, 4);
        t.check(check_lemma13(&set, 8).is_some(), || {
            format!("lemma 13: no N ≤ 8 for {:?}", set.iter().map(|w| w.to_string()).collect::<BTreeSet<_>>())
        });
    }
    t
}

fn suite_lemma10(_max_len: usize) -> Tally {
    let mut t = Tally::default();
    for dim in 2..=8 {
        for delta in [0.1, 1.0 / 3.0, 0.45] {
            let r = lemma10_trial(dim, delta, 1000, 2024).expect("valid delta");
            t.check(r.pass, || format!("d={dim} δ={delta}: ratio {}", r.max_ratio));
        }
    }
    for delta in [0.1, 1.0 / 3.0, 0.45] {
        let r = lemma10_extremal(delta).expect("valid delta");
        t.check(r >= 1.0 - 1e-9, || format!("extremal ratio {r} at δ={delta}"));
    }
    t
}
