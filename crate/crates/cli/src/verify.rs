//! The `verify` sweep: every invariant of the library, checked over the grid
//! of odd primes `p <= p_max` and degrees `f <= f_max`.
//!
//! Each check has its own range cap (brute-force oracles get expensive fast)
//! and is reported by name even when no grid point falls inside it. Grid
//! points run in parallel; results are merged in grid order.

use std::collections::BTreeSet;

use modp_gl2::charcycle::{
    char_cycle, minimal_primes, mult_at_prime, profile_p0_multiplicity, MinimalPrime, ModuleSpec,
    Monomial, MonomialIdeal, Summand,
};
use modp_gl2::diagram::{
    char_injectivity_check, hypothesis_profile, jh_meets_weightset, jh_principal_series,
    serre_weights,
};
use modp_gl2::lattice::{
    exhaustive_max_chain, length_bound, ps_decomposition, quotient_profile, random_nested_pair,
    random_subspace, soc_length, subspace_algebra, Subspace, SubrepProfile, EXHAUSTIVE_CAP,
};
use modp_gl2::oracle;
use modp_gl2::tuples::{
    e_twist, enumerate_d, enumerate_p_ind, j_set, length, weight_of_tuple, AffineTuple,
};
use modp_gl2::weights::{
    char_of_weight, conj_s, count_generic_weights, is_weight_generic, required_genericity,
    weight_s, InertialData, InertialKind, Params, SerreWeight, TheoremId, ToralCharacter,
};
use modp_gl2::{binomial, Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{Check, Report};
use crate::VerifyArgs;

/// Cases seen and the first counterexample, if any.
#[derive(Debug, Default, Clone)]
struct Tally {
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    /// Records a library error as a failed case.
    fn result<T>(&mut self, value: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match value {
            Ok(v) => Some(v),
            Err(e) => {
                self.case(false, || format!("{}: {e}", context()));
                None
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

struct Ctx {
    params: Params,
    /// Smallest prime of the grid; checks that ignore `p` run only there.
    base_p: bool,
    samples: usize,
}

impl Ctx {
    fn p(&self) -> i64 {
        self.params.p() as i64
    }

    fn f(&self) -> usize {
        self.params.f()
    }
}

type CheckFn = fn(&Ctx, &mut ChaCha8Rng) -> Option<Tally>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("weights/char-injective-on-1-generic", char_injective),
    ("weights/boundary-collision", boundary_collision),
    ("weights/conj-s-involution", conj_s_involution),
    ("weights/weight-s-involution", weight_s_involution),
    ("weights/generic-count", generic_count),
    ("weights/thresholds-monotone", thresholds_monotone),
    ("tuples/j-bijection", j_bijection),
    ("tuples/length-counts", length_counts),
    ("tuples/e-twist-parity", e_twist_parity),
    ("tuples/range-validity", range_validity),
    ("tuples/transfer-equals-brute-force", transfer_brute_force),
    ("tuples/intersection-is-identity", intersection),
    ("diagram/level-sizes-binomial", level_sizes),
    ("diagram/jh-meets-weight-set-in-sigma0", jh_meets),
    ("diagram/ext-dim-symmetric", ext_symmetric),
    ("diagram/f1-constituent-is-weight-s", f1_weight_s),
    ("lattice/basis-order-independence", basis_order),
    ("lattice/modular-dimension-law", modular_law),
    ("lattice/length-bound-specializations", bound_specializations),
    ("lattice/soc-strictly-monotone", soc_monotone),
    ("lattice/quotient-by-zero", quotient_by_zero),
    ("lattice/socle-additivity", socle_additivity),
    ("lattice/max-chain-exhaustive", max_chain),
    ("cycles/mult-equals-oracles", mult_oracles),
    ("cycles/additivity", cycle_additivity),
    ("cycles/coefficient-bound", coefficient_bound),
    ("cycles/p0-multiplicity-equals-soc", p0_equals_soc),
    ("cycles/p0-multiplicity-zero-or-one", p0_zero_or_one),
];

fn odd_primes(max: u64) -> Vec<u64> {
    (3..=max)
        .step_by(2)
        .filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

pub fn verify(args: &VerifyArgs) -> Result<Report> {
    if args.p_max < 3 {
        return Err(Error::validation("p-max", "no odd prime in range"));
    }
    if args.f_max == 0 {
        return Err(Error::validation("f-max", "must be at least 1"));
    }
    let primes = odd_primes(args.p_max);
    let grid: Vec<Params> = primes
        .iter()
        .flat_map(|&p| (1..=args.f_max).map(move |f| (p, f)))
        .map(|(p, f)| Params::new(p as i64, f as i64))
        .collect::<Result<_>>()?;

    let per_point: Vec<Vec<Option<Tally>>> = grid
        .par_iter()
        .map(|&params| {
            let ctx = Ctx {
                params,
                base_p: params.p() == primes[0],
                samples: args.samples,
            };
            CHECKS
                .iter()
                .enumerate()
                .map(|(index, (_, check))| {
                    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                    rng.set_stream((params.p() << 24) | ((params.f() as u64) << 8) | index as u64);
                    check(&ctx, &mut rng)
                })
                .collect()
        })
        .collect();

    let mut rep = Report::new("verify");
    rep.param("p_max", args.p_max)
        .param("f_max", args.f_max)
        .param("seed", args.seed)
        .param("samples", args.samples);
    rep.result("primes", primes.clone())
        .result("grid_points", grid.len());
    let mut coverage = serde_json::Map::new();
    for (index, (name, _)) in CHECKS.iter().enumerate() {
        let mut total = Tally::default();
        let mut points = Vec::new();
        for (params, outcomes) in grid.iter().zip(&per_point) {
            if let Some(t) = &outcomes[index] {
                points.push(json!([params.p(), params.f()]));
                total.merge(t.clone());
            }
        }
        coverage.insert(name.to_string(), json!({ "cases": total.cases, "points": points.len() }));
        let witness = match &total.failure {
            Some(w) => json!({ "cases": total.cases, "counterexample": w }),
            None if points.is_empty() => json!({ "cases": 0, "note": "no grid point in range" }),
            None => json!({ "cases": total.cases }),
        };
        rep.check(Check::new(*name, total.failure.is_none(), witness));
    }
    rep.result("coverage", Value::Object(coverage));
    Ok(rep)
}

// ------------------------------------------------------------------ weights

fn random_generic_weight(ctx: &Ctx, rng: &mut ChaCha8Rng) -> SerreWeight {
    let digits: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(1..=ctx.p() - 3)).collect();
    let twist = rng.gen_range(0..ctx.params.modulus() as i64);
    SerreWeight::new(&digits, twist, &ctx.params).expect("in range")
}

fn char_injective(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.p() > 31 || ctx.f() > 2 {
        return None;
    }
    let mut t = Tally::default();
    let collision = oracle::generic_character_collision(1, &ctx.params);
    t.case(collision.is_none(), || {
        let (a, b) = collision.clone().unwrap();
        format!("{a} and {b} share a character")
    });
    Some(t)
}

fn boundary_collision(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    let mut t = Tally::default();
    let f = ctx.f();
    for m in [0, 1, ctx.params.modulus() as i64 - 1] {
        let low = SerreWeight::new(&vec![0; f], m, &ctx.params).ok()?;
        let high = SerreWeight::new(&vec![ctx.p() - 1; f], m, &ctx.params).ok()?;
        let same = char_of_weight(&low, &ctx.params).ok() == char_of_weight(&high, &ctx.params).ok();
        t.case(same, || format!("{low} and {high} differ"));
        if ctx.params.q() <= 100_000 {
            let chi = char_of_weight(&low, &ctx.params).ok()?;
            let found = oracle::weights_with_character(chi, &ctx.params);
            t.case(found == vec![low.clone(), high.clone()], || {
                format!("search found {} weights for {low}", found.len())
            });
        }
    }
    Some(t)
}

fn conj_s_involution(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    let mut t = Tally::default();
    let m = ctx.params.modulus() as i128;
    for _ in 0..ctx.samples {
        let chi = ToralCharacter::new(rng.gen_range(0..m), rng.gen_range(0..m), &ctx.params);
        t.case(conj_s(conj_s(chi)) == chi, || format!("{chi:?}"));
    }
    Some(t)
}

fn weight_s_involution(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.p() < 5 {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let w = random_generic_weight(ctx, rng);
        let Some(ws) = t.result(weight_s(&w, &ctx.params), || format!("weight_s({w})")) else {
            continue;
        };
        let chi = char_of_weight(&w, &ctx.params).ok()?;
        let chi_s = char_of_weight(&ws, &ctx.params).ok()?;
        t.case(chi_s == conj_s(chi) && ws != w, || format!("weight_s({w}) = {ws}"));
        if ctx.params.q() <= 100_000 {
            let found = oracle::weights_with_character(conj_s(chi), &ctx.params);
            t.case(found == vec![ws.clone()], || format!("search for s({w}) found {found:?}"));
            let back = oracle::weights_with_character(conj_s(chi_s), &ctx.params);
            t.case(back == vec![w.clone()], || format!("search for s(s({w})) found {back:?}"));
        }
        if is_weight_generic(&ws, 1, &ctx.params) {
            let back = weight_s(&ws, &ctx.params).ok();
            t.case(back.as_ref() == Some(&w), || format!("s(s({w})) = {back:?}"));
        }
    }
    Some(t)
}

fn generic_count(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.p() > 13 || ctx.f() > 2 {
        return None;
    }
    let mut t = Tally::default();
    for n in 0..=(ctx.params.p() / 2) {
        let closed = count_generic_weights(n, &ctx.params);
        let counted = oracle::count_generic_weights(n, &ctx.params);
        t.case(closed == counted, || format!("n = {n}: {closed} vs {counted}"));
    }
    Some(t)
}

fn thresholds_monotone(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !ctx.base_p {
        return None;
    }
    let v = |id| required_genericity(id, &ctx.params);
    let mut t = Tally::default();
    t.case(
        v(TheoremId::GlobalFiniteLength) >= v(TheoremId::LengthBound)
            && v(TheoremId::LengthBound) >= v(TheoremId::GradedStructure),
        || format!("f = {}", ctx.f()),
    );
    Some(t)
}

// ------------------------------------------------------------------- tuples

fn j_bijection(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.f() > 6 {
        return None;
    }
    let mut t = Tally::default();
    let images: BTreeSet<BTreeSet<usize>> =
        enumerate_d(&ctx.params).iter().map(|l| j_set(l, &ctx.params)).collect();
    t.case(images.len() == 1 << ctx.f(), || format!("{} distinct J-sets", images.len()));
    Some(t)
}

fn length_counts(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.f() > 6 {
        return None;
    }
    let mut t = Tally::default();
    let d = enumerate_d(&ctx.params);
    for l in 0..=ctx.f() {
        let count = d.iter().filter(|lam| length(lam, &ctx.params) == l).count() as u64;
        let want = binomial(ctx.f() as u64, l as u64);
        t.case(count == want, || format!("length {l}: {count} tuples, want {want}"));
    }
    Some(t)
}

fn e_twist_parity(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.p() > 31 || ctx.f() > 4 {
        return None;
    }
    let mut t = Tally::default();
    let tuples: Vec<AffineTuple> = enumerate_d(&ctx.params)
        .into_iter()
        .chain(enumerate_p_ind(&ctx.params))
        .collect();
    for _ in 0..ctx.samples {
        let r: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(-2 * ctx.p()..=2 * ctx.p())).collect();
        for lam in &tuples {
            let ok = e_twist(lam, &r, &ctx.params).is_ok();
            t.case(ok, || format!("{} at {r:?}", lam.display(&ctx.params)));
        }
    }
    Some(t)
}

fn range_validity(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.p() < 5 || ctx.p() > 31 || ctx.f() > 4 {
        return None;
    }
    let mut t = Tally::default();
    let d = enumerate_d(&ctx.params);
    let pi = enumerate_p_ind(&ctx.params);
    for _ in 0..ctx.samples {
        let r: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(1..=ctx.p() - 4)).collect();
        for lam in &d {
            let ok = weight_of_tuple(lam, &r, &ctx.params).is_ok();
            t.case(ok, || format!("D tuple {} at {r:?}", lam.display(&ctx.params)));
        }
        let r: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(1..=ctx.p() - 3)).collect();
        for lam in &pi {
            let ok = weight_of_tuple(lam, &r, &ctx.params).is_ok();
            t.case(ok, || format!("P tuple {} at {r:?}", lam.display(&ctx.params)));
        }
    }
    Some(t)
}

fn transfer_brute_force(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.f() > 6 {
        return None;
    }
    let mut t = Tally::default();
    t.case(enumerate_d(&ctx.params) == oracle::brute_force_d(&ctx.params), || "D".into());
    t.case(enumerate_p_ind(&ctx.params) == oracle::brute_force_p_ind(&ctx.params), || {
        "P_ind".into()
    });
    Some(t)
}

fn intersection(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.f() > 6 {
        return None;
    }
    let mut t = Tally::default();
    t.case(modp_gl2::tuples::check_intersection(&ctx.params), || {
        format!("f = {}", ctx.f())
    });
    Some(t)
}

// ------------------------------------------------------------------ diagram

fn level_sizes(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.p() < 5 || ctx.p() > 31 || ctx.f() > 4 {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let digits: Vec<i64> = loop {
            let d: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(0..=ctx.p() - 3)).collect();
            if d.iter().any(|&x| x != 0) && d.iter().any(|&x| x != ctx.p() - 3) {
                break d;
            }
        };
        let rho = InertialData::new(&digits, InertialKind::ReducibleSplit, 0, &ctx.params).ok()?;
        let Some(w) = t.result(serre_weights(&rho, &ctx.params), || format!("W({digits:?})")) else {
            continue;
        };
        let sizes_ok = w
            .by_length()
            .iter()
            .enumerate()
            .all(|(l, level)| level.len() as u64 == binomial(ctx.f() as u64, l as u64));
        t.case(sizes_ok && w.len() == 1 << ctx.f(), || format!("W({digits:?})"));
        t.case(char_injectivity_check(&w, &ctx.params), || {
            format!("characters of W({digits:?}) collide")
        });
    }
    Some(t)
}

fn jh_meets(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.p() < 5 || ctx.p() > 31 || ctx.f() > 4 {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let digits: Vec<i64> = loop {
            let d: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(1..=ctx.p() - 3)).collect();
            if d.iter().any(|&x| x != ctx.p() - 3) {
                break d;
            }
        };
        let rho = InertialData::new(&digits, InertialKind::ReducibleSplit, 0, &ctx.params).ok()?;
        let s0 = SerreWeight::new(&digits, 0, &ctx.params).ok()?;
        let Some(w) = t.result(serre_weights(&rho, &ctx.params), || format!("W({digits:?})")) else {
            continue;
        };
        let Some(jh) = t.result(jh_principal_series(&s0, &ctx.params), || format!("JH({s0})")) else {
            continue;
        };
        t.case(jh.len() == 1 << ctx.f() && jh.contains(&s0), || {
            format!("JH({s0}) has {} weights", jh.len())
        });
        let meet = jh_meets_weightset(&s0, &w, &ctx.params);
        let Some(meet) = t.result(meet, || format!("JH({s0}) ∩ W")) else {
            continue;
        };
        t.case(meet.len() == 1 && meet.contains(&s0), || {
            format!("JH({s0}) ∩ W has {} weights", meet.len())
        });
    }
    Some(t)
}

fn ext_symmetric(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !ctx.base_p {
        return None;
    }
    let mut t = Tally::default();
    for r in 1..=5 {
        for kind in [InertialKind::ReducibleSplit, InertialKind::Irreducible] {
            let h = hypothesis_profile(r, &ctx.params, kind).ok()?;
            let n = 2 * ctx.f();
            let ok = (0..=n).all(|i| {
                h.ext_dim(i) == h.ext_dim(n - i)
                    && h.ext_dim(i) == binomial(n as u64, i as u64) * r as u64
            }) && h.total_ext == 4u64.pow(ctx.f() as u32) * r as u64;
            t.case(ok, || format!("r = {r}, {}", kind.as_str()));
        }
    }
    Some(t)
}

fn f1_weight_s(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if ctx.f() != 1 || ctx.p() < 5 {
        return None;
    }
    let mut t = Tally::default();
    for r in 1..=ctx.p() - 3 {
        let s0 = SerreWeight::new(&[r], 0, &ctx.params).ok()?;
        let jh = jh_principal_series(&s0, &ctx.params).ok()?;
        let s = weight_s(&s0, &ctx.params).ok()?;
        let others: Vec<&SerreWeight> = jh.iter().filter(|w| **w != s0).collect();
        t.case(others == vec![&s], || format!("JH({s0}) vs {s}"));
    }
    Some(t)
}

// ------------------------------------------------------------------ lattice

const FIELDS: [u32; 3] = [2, 3, 5];

fn lattice_ctx(ctx: &Ctx) -> bool {
    ctx.base_p && ctx.f() <= 3
}

fn random_kind(rng: &mut ChaCha8Rng) -> InertialKind {
    if rng.gen_bool(0.25) {
        InertialKind::Irreducible
    } else {
        InertialKind::ReducibleSplit
    }
}

fn random_pair(ctx: &Ctx, rng: &mut ChaCha8Rng) -> (SubrepProfile, SubrepProfile) {
    let kind = random_kind(rng);
    let field = FIELDS[rng.gen_range(0..FIELDS.len())];
    let r = rng.gen_range(1..=4);
    random_nested_pair(kind, r, field, &ctx.params, rng).expect("valid pair")
}

fn basis_order(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !lattice_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let c = FIELDS[rng.gen_range(0..FIELDS.len())];
        let n = rng.gen_range(1..=4);
        let vs: Vec<Vec<u32>> = (0..rng.gen_range(0..=n + 1))
            .map(|_| (0..n).map(|_| rng.gen_range(0..c)).collect())
            .collect();
        let mut shuffled = vs.clone();
        shuffled.reverse();
        let (a, b) = (Subspace::span(c, n, &vs).ok()?, Subspace::span(c, n, &shuffled).ok()?);
        t.case(a == b, || format!("span of {vs:?} depends on order"));
        let other = random_subspace(c, n, rng).ok()?;
        let s1 = subspace_algebra(&a, &other).ok()?;
        let s2 = subspace_algebra(&other, &b).ok()?;
        t.case(s1.sum == s2.sum && s1.intersection == s2.intersection, || {
            format!("algebra of {vs:?} depends on order")
        });
    }
    Some(t)
}

fn modular_law(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !lattice_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let c = FIELDS[rng.gen_range(0..FIELDS.len())];
        let n = rng.gen_range(1..=4);
        let a = random_subspace(c, n, rng).ok()?;
        let b = random_subspace(c, n, rng).ok()?;
        let alg = subspace_algebra(&a, &b).ok()?;
        t.case(alg.sum.dim() + alg.intersection.dim() == a.dim() + b.dim(), || {
            format!("dims {:?}", alg.dims)
        });
    }
    Some(t)
}

fn bound_specializations(ctx: &Ctx, _rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !lattice_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    let f = ctx.f();
    for r in 1..=4usize {
        for (kind, want) in [
            (InertialKind::ReducibleSplit, r * (f + 1)),
            (InertialKind::Irreducible, r),
        ] {
            let zero = SubrepProfile::zero(kind, r, 3, &ctx.params).ok()?;
            let full = SubrepProfile::full(kind, r, 3, &ctx.params).ok()?;
            let got = length_bound(&full, &zero, &ctx.params).ok()?;
            t.case(got == want as u64, || format!("{} r = {r}: {got}", kind.as_str()));
        }
        let full = SubrepProfile::full(InertialKind::ReducibleSplit, r, 3, &ctx.params).ok()?;
        let ps = ps_decomposition(&full, r, &ctx.params).ok()?;
        t.case(ps.remainder_length_bound == (r * (f - 1)) as u64, || {
            format!("remainder r = {r}: {}", ps.remainder_length_bound)
        });
    }
    Some(t)
}

fn soc_monotone(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !lattice_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let (inner, outer) = random_pair(ctx, rng);
        let (a, b) = (soc_length(&inner, &ctx.params), soc_length(&outer, &ctx.params));
        let ok = if inner == outer { a == b } else { a < b };
        t.case(ok, || format!("{:?} in {:?}: {a} vs {b}", inner.dims(), outer.dims()));
    }
    Some(t)
}

fn quotient_by_zero(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !lattice_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let (_, outer) = random_pair(ctx, rng);
        let zero = SubrepProfile::zero(outer.kind(), outer.rank(), outer.field(), &ctx.params).ok()?;
        let q = quotient_profile(&outer, &zero).ok();
        t.case(q.as_ref() == Some(&outer), || format!("{:?}", outer.dims()));
    }
    Some(t)
}

fn socle_additivity(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !lattice_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let (inner, outer) = random_pair(ctx, rng);
        let Some(q) = t.result(quotient_profile(&outer, &inner), || "quotient".into()) else {
            continue;
        };
        let s = |p: &SubrepProfile| soc_length(p, &ctx.params);
        t.case(s(&inner) + s(&q) == s(&outer), || {
            format!("{:?} in {:?}", inner.dims(), outer.dims())
        });
    }
    Some(t)
}

fn max_chain(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !ctx.base_p || ctx.f() > 2 {
        return None;
    }
    let mut t = Tally::default();
    for field in [2u32, 3] {
        for r in 1..=2usize {
            for kind in [InertialKind::ReducibleSplit, InertialKind::Irreducible] {
                let mut pairs = vec![(
                    SubrepProfile::zero(kind, r, field, &ctx.params).ok()?,
                    SubrepProfile::full(kind, r, field, &ctx.params).ok()?,
                )];
                for _ in 0..ctx.samples.min(5) {
                    pairs.push(random_nested_pair(kind, r, field, &ctx.params, rng).ok()?);
                }
                for (lo, hi) in pairs {
                    let bound = length_bound(&hi, &lo, &ctx.params).ok()?;
                    let max = exhaustive_max_chain(&lo, &hi, EXHAUSTIVE_CAP).ok()?;
                    t.case(max == Some(bound as usize), || {
                        format!("c = {field}, r = {r}: chain {max:?} vs bound {bound}")
                    });
                }
            }
        }
    }
    Some(t)
}

// ------------------------------------------------------------------- cycles

fn cycle_ctx(ctx: &Ctx) -> bool {
    ctx.base_p && ctx.f() <= 3
}

fn random_ideal(f: usize, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let gens = (0..rng.gen_range(0..=4))
        .map(|_| {
            let mut y = vec![0u32; f];
            let mut z = vec![0u32; f];
            for i in 0..f {
                match rng.gen_range(0..3) {
                    0 => y[i] = rng.gen_range(1..=3),
                    1 => z[i] = rng.gen_range(1..=3),
                    _ => {}
                }
            }
            Monomial::new(y, z).expect("one variable per index")
        })
        .collect();
    MonomialIdeal::new(f, gens).expect("consistent f")
}

fn random_proper_ideal(f: usize, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let ideal = random_ideal(f, rng);
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

fn random_module(f: usize, rng: &mut ChaCha8Rng) -> ModuleSpec {
    let summands = (0..rng.gen_range(1..=3))
        .map(|_| Summand::new(random_proper_ideal(f, rng), rng.gen_range(1..=3)).expect("positive"))
        .collect();
    ModuleSpec::direct(summands)
}

fn mult_oracles(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !cycle_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    let primes = minimal_primes(&ctx.params);
    for _ in 0..ctx.samples {
        let ideal = random_proper_ideal(ctx.f(), rng);
        for q in &primes {
            let m = mult_at_prime(&ideal, q).ok();
            let sat = oracle::mult_by_saturation(&ideal, q).ok();
            let std = oracle::mult_by_standard_monomials(&ideal, q);
            t.case(m.is_some() && m == sat && m == Some(std), || {
                format!("m_{q}({ideal}): {m:?}, saturation {sat:?}, counting {std}")
            });
        }
    }
    Some(t)
}

fn cycle_additivity(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !cycle_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let a = random_module(ctx.f(), rng);
        let b = random_module(ctx.f(), rng);
        let za = char_cycle(&a, &ctx.params).ok()?;
        let zb = char_cycle(&b, &ctx.params).ok()?;
        let sum = za.add(&zb).ok()?;
        let direct = char_cycle(&a.direct_sum(&b), &ctx.params).ok()?;
        let filtered = char_cycle(&ModuleSpec::filtered(vec![a, b]), &ctx.params).ok()?;
        t.case(direct == sum && filtered == sum, || format!("{direct} vs {sum}"));
    }
    Some(t)
}

fn coefficient_bound(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !cycle_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let module = random_module(ctx.f(), rng);
        let z = char_cycle(&module, &ctx.params).ok()?;
        let total = module.total_multiplicity();
        t.case(z.coeffs().values().all(|&c| c <= total), || format!("{z} exceeds {total}"));
    }
    Some(t)
}

fn p0_equals_soc(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !lattice_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    for _ in 0..ctx.samples {
        let field = FIELDS[rng.gen_range(0..FIELDS.len())];
        let r = rng.gen_range(1..=4);
        let (inner, outer) =
            random_nested_pair(InertialKind::ReducibleSplit, r, field, &ctx.params, rng).ok()?;
        for prof in [inner, outer] {
            let m = profile_p0_multiplicity(&prof, &ctx.params).ok();
            let soc = soc_length(&prof, &ctx.params);
            t.case(m == Some(soc), || format!("{:?}: {m:?} vs {soc}", prof.dims()));
        }
    }
    Some(t)
}

fn p0_zero_or_one(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Tally> {
    if !cycle_ctx(ctx) {
        return None;
    }
    let mut t = Tally::default();
    let p0 = MinimalPrime::p0(ctx.f());
    for _ in 0..ctx.samples {
        let ideal = random_proper_ideal(ctx.f(), rng);
        let m = mult_at_prime(&ideal, &p0).ok();
        t.case(matches!(m, Some(0 | 1)), || format!("m_p0({ideal}) = {m:?}"));
    }
    Some(t)
}
