//! Invariant suites run by `verlinde-qh selftest`.
//!
//! `Quick` keeps every suite to n ≤ 5 and g ≤ 2; `Full` uses the bounds of
//! the acceptance campaign. Suites are deterministic (fixed RNG seeds).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duality::{m_via_factorization, m_via_gw, rank_level_symmetry_check};
use crate::fusion::{level_reps, FusionRing, RTildeTerm, SuRep};
use crate::lr::{self, Bound};
use crate::quantum::{self, gw_number, gw_twisted, quantum_pieri, shift, unshift, GwQuery, QClass};
use crate::schubert::{CohClass, Partition, Shape, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Check = fn(Level) -> Result<String, String>;

const SUITES: &[(&str, Check)] = &[
    ("schubert.bijection", bijection),
    ("schubert.duality_codim", duality_codim),
    ("schubert.poincare", poincare),
    ("schubert.pairing_permutation", pairing_permutation),
    ("schubert.ring_axioms", classical_ring_axioms),
    ("schubert.diagonal", diagonal),
    ("quantum.classical_limit", classical_limit),
    ("quantum.associativity", quantum_associativity),
    ("quantum.pieri", pieri_consistency),
    ("quantum.shift_round_trip", shift_round_trip),
    ("quantum.fundamental_insertion", fundamental_insertion),
    ("quantum.shift_invariance", shift_invariance),
    ("fusion.symmetry_vacuum_congruence", fusion_basic),
    ("fusion.high_level_stabilization", stabilization),
    ("fusion.witten_homomorphism", witten_homomorphism),
    ("fusion.t_orbits", t_orbits),
    ("fusion.handle_vs_factorization", handle_vs_factorization),
    ("duality.routes", routes),
    ("duality.rank_level", rank_level),
    ("duality.genus_one", genus_one),
    ("duality.gw_equals_fusion", gw_equals_fusion),
    ("duality.route_disagreements", route_disagreements),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run(level: Level) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .map(|(name, f)| run_one(name, *f, level))
        .collect()
}

pub fn run_named(name: &str, level: Level) -> Option<SuiteResult> {
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, f)| run_one(n, *f, level))
}

fn run_one(name: &'static str, f: Check, level: Level) -> SuiteResult {
    let start = Instant::now();
    let outcome = f(level);
    let seconds = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => SuiteResult {
            name,
            passed: true,
            detail,
            seconds,
        },
        Err(detail) => SuiteResult {
            name,
            passed: false,
            detail,
            seconds,
        },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Every shape Gr(r, n) with n ≤ `max_n`.
pub fn shapes_up_to(max_n: usize) -> Vec<Shape> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |r| Shape::from_rn(r, n).unwrap()))
        .collect()
}

fn box_partitions(shape: Shape) -> Vec<Partition> {
    shape
        .subsets()
        .iter()
        .map(|s| shape.lambda_of_subset(s).unwrap())
        .collect()
}

fn bijection(level: Level) -> Result<String, String> {
    let max_n = if level == Level::Quick { 5 } else { 10 };
    let mut count = 0;
    for shape in shapes_up_to(max_n) {
        for s in shape.subsets() {
            let l = shape.lambda_of_subset(&s).map_err(err)?;
            ensure(shape.subset_of_lambda(&l).map_err(err)? == s, || {
                format!("{shape} {s}")
            })?;
            count += 1;
        }
        // conversely from every box partition
        let parts = box_partitions(shape);
        let mut sorted = parts.clone();
        sorted.sort();
        sorted.dedup();
        ensure(sorted.len() == parts.len(), || {
            format!("{shape}: λ not injective")
        })?;
    }
    Ok(format!("{count} subsets, n <= {max_n}"))
}

fn duality_codim(level: Level) -> Result<String, String> {
    let max_n = if level == Level::Quick { 5 } else { 10 };
    for shape in shapes_up_to(max_n) {
        for s in shape.subsets() {
            let d = shape.dual_subset(&s).map_err(err)?;
            ensure(shape.dual_subset(&d).map_err(err)? == s, || {
                format!("{shape} {s}: not an involution")
            })?;
            let sum = shape.codim(&s).map_err(err)? + shape.codim(&d).map_err(err)?;
            ensure(sum == shape.dim(), || {
                format!("{shape} {s}: codim sum {sum}")
            })?;
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn poincare(level: Level) -> Result<String, String> {
    let max_n = if level == Level::Quick { 5 } else { 10 };
    for shape in shapes_up_to(max_n) {
        let mut counts = vec![0usize; shape.dim() + 1];
        for s in shape.subsets() {
            counts[shape.codim(&s).map_err(err)?] += 1;
        }
        let rev: Vec<usize> = counts.iter().rev().copied().collect();
        ensure(counts == rev, || format!("{shape}: {counts:?}"))?;
    }
    Ok(format!("n <= {max_n}"))
}

fn pairing_permutation(level: Level) -> Result<String, String> {
    let max_n = if level == Level::Quick { 5 } else { 8 };
    let mut pairs = 0;
    for shape in shapes_up_to(max_n) {
        let all = shape.subsets();
        for a in &all {
            let ca = shape.codim(a).map_err(err)?;
            for b in &all {
                if ca + shape.codim(b).map_err(err)? != shape.dim() {
                    continue;
                }
                let p = shape
                    .pairing(
                        &CohClass::basis(shape, a.clone()),
                        &CohClass::basis(shape, b.clone()),
                    )
                    .map_err(err)?;
                let expect = if *b == shape.dual_subset(a).map_err(err)? {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                ensure(p == expect, || format!("{shape}: <{a},{b}> = {p}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} complementary pairs, n <= {max_n}"))
}

fn classical_ring_axioms(level: Level) -> Result<String, String> {
    let shapes: &[(usize, usize)] = if level == Level::Quick {
        &[(2, 4), (2, 5)]
    } else {
        &[(2, 4), (2, 5), (3, 6)]
    };
    for &(r, n) in shapes {
        let shape = Shape::from_rn(r, n).map_err(err)?;
        let basis: Vec<CohClass> = shape
            .subsets()
            .into_iter()
            .map(|s| CohClass::basis(shape, s))
            .collect();
        let unit = CohClass::basis(shape, shape.fundamental());
        for a in &basis {
            ensure(
                shape.classical_product(a, &unit).map_err(err)? == *a,
                || format!("{shape}: unit"),
            )?;
            for b in &basis {
                let ab = shape.classical_product(a, b).map_err(err)?;
                ensure(ab == shape.classical_product(b, a).map_err(err)?, || {
                    format!("{shape}: commutativity")
                })?;
                let grade = shape.codim_unchecked(a.terms().next().unwrap().0)
                    + shape.codim_unchecked(b.terms().next().unwrap().0);
                ensure(
                    ab.terms().all(|(s, _)| shape.codim_unchecked(s) == grade),
                    || format!("{shape}: grading"),
                )?;
                for c in &basis {
                    let left = shape.classical_product(&ab, c).map_err(err)?;
                    let right = shape
                        .classical_product(a, &shape.classical_product(b, c).map_err(err)?)
                        .map_err(err)?;
                    ensure(left == right, || format!("{shape}: associativity"))?;
                }
            }
        }
    }
    Ok(format!("{shapes:?} exhaustive"))
}

fn diagonal(level: Level) -> Result<String, String> {
    let max_n = if level == Level::Quick { 5 } else { 7 };
    for shape in shapes_up_to(max_n) {
        ensure(shape.diagonal_decomposition_check(), || format!("{shape}"))?;
    }
    Ok(format!("n <= {max_n}"))
}

fn classical_limit(level: Level) -> Result<String, String> {
    let shapes: &[(usize, usize)] = if level == Level::Quick {
        &[(2, 4), (2, 5)]
    } else {
        &[(2, 4), (2, 5), (3, 6)]
    };
    for &(r, n) in shapes {
        let shape = Shape::from_rn(r, n).map_err(err)?;
        for a in shape.subsets() {
            for b in shape.subsets() {
                let q = quantum::quantum_product(
                    shape,
                    &QClass::basis(shape, a.clone()),
                    &QClass::basis(shape, b.clone()),
                )
                .map_err(err)?;
                let c = shape
                    .classical_product(
                        &CohClass::basis(shape, a.clone()),
                        &CohClass::basis(shape, b.clone()),
                    )
                    .map_err(err)?;
                ensure(q.classical_part() == c, || format!("{shape}: {a} * {b}"))?;
                let grade = shape.codim_unchecked(&a) + shape.codim_unchecked(&b);
                ensure(q.is_zero() || q.degree() == Some(grade), || {
                    format!("{shape}: grading of {a} * {b}")
                })?;
                ensure(q.terms().all(|(_, _, c)| c > &BigInt::zero()), || {
                    format!("{shape}: negative coefficient in {a} * {b}")
                })?;
            }
        }
    }
    Ok(format!("{shapes:?}"))
}

fn quantum_associativity(level: Level) -> Result<String, String> {
    let assoc = |shape: Shape, a: &Subset, b: &Subset, c: &Subset| -> Result<(), String> {
        let (qa, qb, qc) = (
            QClass::basis(shape, a.clone()),
            QClass::basis(shape, b.clone()),
            QClass::basis(shape, c.clone()),
        );
        let left = quantum::quantum_product(
            shape,
            &quantum::quantum_product(shape, &qa, &qb).map_err(err)?,
            &qc,
        )
        .map_err(err)?;
        let right = quantum::quantum_product(
            shape,
            &qa,
            &quantum::quantum_product(shape, &qb, &qc).map_err(err)?,
        )
        .map_err(err)?;
        ensure(left == right, || format!("{shape}: ({a}*{b})*{c}"))
    };
    let mut triples = 0;
    for (r, n) in [(2, 4), (2, 5)] {
        let shape = Shape::from_rn(r, n).map_err(err)?;
        let all = shape.subsets();
        for a in &all {
            for b in &all {
                for c in &all {
                    assoc(shape, a, b, c)?;
                    triples += 1;
                }
            }
        }
    }
    let samples = if level == Level::Quick { 20 } else { 2000 };
    let shape = Shape::from_rn(3, 6).map_err(err)?;
    let all = shape.subsets();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for _ in 0..samples {
        let pick: Vec<&Subset> = (0..3).map(|_| all.choose(&mut rng).unwrap()).collect();
        assoc(shape, pick[0], pick[1], pick[2])?;
        triples += 1;
    }
    Ok(format!("{triples} triples"))
}

fn pieri_consistency(level: Level) -> Result<String, String> {
    let shapes: &[(usize, usize)] = if level == Level::Quick {
        &[(2, 4), (2, 5)]
    } else {
        &[(2, 4), (2, 5), (3, 6)]
    };
    for &(r, n) in shapes {
        let shape = Shape::from_rn(r, n).map_err(err)?;
        for p in 1..=shape.k() {
            let mut row = vec![0; r];
            row[0] = p;
            let special =
                QClass::basis(shape, shape.subset_of_lambda(&Partition(row)).map_err(err)?);
            for lambda in box_partitions(shape) {
                let by_rim_hooks = quantum::quantum_product(
                    shape,
                    &special,
                    &QClass::basis(shape, shape.subset_of_lambda(&lambda).map_err(err)?),
                )
                .map_err(err)?;
                let by_pieri = quantum_pieri(shape, p, &lambda).map_err(err)?;
                ensure(by_rim_hooks == by_pieri, || {
                    format!("{shape}: sigma_{p} * {lambda}")
                })?;
            }
        }
    }
    Ok(format!("{shapes:?}"))
}

fn shift_round_trip(level: Level) -> Result<String, String> {
    let max_n = if level == Level::Quick { 5 } else { 8 };
    for shape in shapes_up_to(max_n) {
        for s in shape.subsets() {
            for d in -1..3 {
                let (j, e) = shift(shape, &s, d).map_err(err)?;
                ensure(
                    unshift(shape, &j, e).map_err(err)? == (s.clone(), d),
                    || format!("{shape} {s} {d}"),
                )?;
                let (i, f) = unshift(shape, &s, d).map_err(err)?;
                ensure(shift(shape, &i, f).map_err(err)? == (s.clone(), d), || {
                    format!("{shape} {s} {d}")
                })?;
            }
        }
    }
    Ok(format!("n <= {max_n}"))
}

/// A random untwisted query of expected dimension 0, or `None` if the draw
/// has no admissible degree.
pub fn random_dimension_zero(
    shape: Shape,
    max_insertions: usize,
    rng: &mut impl Rng,
) -> Option<(Vec<Subset>, i64)> {
    let all = shape.subsets();
    let s = rng.gen_range(1..=max_insertions);
    let ins: Vec<Subset> = (0..s).map(|_| all.choose(rng).unwrap().clone()).collect();
    let total: usize = ins.iter().map(|i| shape.codim_unchecked(i)).sum();
    let excess = total.checked_sub(shape.dim())?;
    (excess % shape.n() == 0).then(|| (ins, (excess / shape.n()) as i64))
}

fn dimension_zero_queries(count: usize, seed: u64) -> Vec<(Shape, Vec<Subset>, i64)> {
    let shapes = [Shape::from_rn(2, 4).unwrap(), Shape::from_rn(2, 5).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let shape = shapes[out.len() % 2];
        if let Some((ins, d)) = random_dimension_zero(shape, 6, &mut rng) {
            out.push((shape, ins, d));
        }
    }
    out
}

fn fundamental_insertion(level: Level) -> Result<String, String> {
    let count = if level == Level::Quick { 30 } else { 200 };
    let mut nonzero = 0;
    for (shape, ins, d) in dimension_zero_queries(count, 82) {
        let base = gw_number(shape, &ins, d).map_err(err)?;
        let mut padded = ins.clone();
        padded.push(shape.fundamental());
        ensure(gw_number(shape, &padded, d).map_err(err)? == base, || {
            format!("{shape} {ins:?} d={d}")
        })?;
        ensure(base >= BigInt::zero(), || {
            format!("{shape} {ins:?}: negative")
        })?;
        if !base.is_zero() {
            nonzero += 1;
        }
    }
    Ok(format!("{count} queries, {nonzero} nonzero"))
}

fn shift_invariance(level: Level) -> Result<String, String> {
    let count = if level == Level::Quick { 30 } else { 100 };
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for (shape, ins, d) in dimension_zero_queries(count, 84) {
        let direct = gw_number(shape, &ins, d).map_err(err)?;
        let j = rng.gen_range(0..ins.len());
        let (moved, e) = shift(shape, &ins[j], d).map_err(err)?;
        let mut shifted = ins.clone();
        shifted[j] = moved;
        let q = GwQuery::new(shape, shifted, e, -1).map_err(err)?;
        ensure(q.expected_dimension() == 0, || {
            format!("{q}: dimension changed")
        })?;
        let via = gw_twisted(&q).map_err(err)?;
        ensure(via == direct, || format!("{q}: {via} != {direct}"))?;
    }
    Ok(format!("{count} queries"))
}

fn fusion_basic(level: Level) -> Result<String, String> {
    let max = if level == Level::Quick { 2 } else { 3 };
    let mut rng = ChaCha8Rng::seed_from_u64(85);
    let mut checked = 0;
    for r in 1..=max {
        for k in 1..=max {
            let ring = FusionRing::new(r, k).map_err(err)?;
            let reps = ring.reps().to_vec();
            for _ in 0..20 {
                let s = rng.gen_range(1..=4);
                let mut list: Vec<SuRep> = (0..s)
                    .map(|_| reps.choose(&mut rng).unwrap().clone())
                    .collect();
                let n0 = ring.fusion_coefficient(&list).map_err(err)?;
                let size: usize = list.iter().map(SuRep::size).sum();
                if !size.is_multiple_of(r) {
                    ensure(n0.is_zero(), || format!("SU({r})_{k} {list:?}: congruence"))?;
                }
                let mut shuffled = list.clone();
                shuffled.shuffle(&mut rng);
                ensure(
                    ring.fusion_coefficient(&shuffled).map_err(err)? == n0,
                    || format!("SU({r})_{k} {list:?}: symmetry"),
                )?;
                list.push(SuRep::trivial(r));
                ensure(ring.fusion_coefficient(&list).map_err(err)? == n0, || {
                    format!("SU({r})_{k} {list:?}: vacuum")
                })?;
                checked += 1;
            }
            for a in &reps {
                for b in &reps {
                    let expect = if *b == a.dual() { 1 } else { 0 };
                    ensure(
                        ring.fusion_coefficient(&[a.clone(), b.clone()])
                            .map_err(err)?
                            == BigInt::from(expect),
                        || format!("SU({r})_{k}: two-point {a} {b}"),
                    )?;
                }
                let expect = if a.is_trivial() { 1 } else { 0 };
                ensure(
                    ring.fusion_coefficient(std::slice::from_ref(a))
                        .map_err(err)?
                        == BigInt::from(expect),
                    || format!("one-point {a}"),
                )?;
            }
        }
    }
    Ok(format!("{checked} random lists, r,k <= {max}"))
}

/// Multiplicity of the trivial SU(r) representation in μ¹ ⊗ ⋯ ⊗ μˢ from
/// GL(r) Littlewood–Richardson expansions.
pub fn classical_invariants(r: usize, reps: &[SuRep]) -> BigInt {
    let mut acc: Vec<(Vec<usize>, BigInt)> = vec![(Vec::new(), BigInt::one())];
    for rep in reps {
        let mut next: std::collections::BTreeMap<Vec<usize>, BigInt> = Default::default();
        for (shape, c) in &acc {
            for (nu, m) in lr::expand(shape, rep.parts(), Bound::rows(r)).iter() {
                *next.entry(nu.clone()).or_default() += c * BigInt::from(*m);
            }
        }
        acc = next.into_iter().collect();
    }
    acc.iter()
        .filter(|(nu, _)| nu.is_empty() || (nu.len() == r && nu.iter().all(|&p| p == nu[0])))
        .map(|(_, c)| c.clone())
        .sum()
}

fn stabilization(level: Level) -> Result<String, String> {
    let cases: &[(usize, usize, usize)] = if level == Level::Quick {
        // (r, max weight level, max s)
        &[(2, 2, 3), (3, 1, 3)]
    } else {
        &[(2, 2, 4), (3, 1, 4), (3, 2, 3)]
    };
    let mut checked = 0;
    for &(r, wmax, smax) in cases {
        let weights = level_reps(r, wmax).map_err(err)?;
        for s in 1..=smax {
            let mut idx = vec![0usize; s];
            loop {
                // nondecreasing index lists only; the coefficient is symmetric
                let list: Vec<SuRep> = idx.iter().map(|&i| weights[i].clone()).collect();
                let k = list.iter().map(SuRep::level).sum::<usize>().max(1);
                let expect = classical_invariants(r, &list);
                let ring = FusionRing::new(r, k).map_err(err)?;
                let got = ring.fusion_coefficient(&list).map_err(err)?;
                ensure(got == expect, || {
                    format!("SU({r}) level {k} {list:?}: {got} vs {expect}")
                })?;
                checked += 1;
                let mut pos = s;
                while pos > 0 && idx[pos - 1] == weights.len() - 1 {
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
                idx[pos - 1] += 1;
                let v = idx[pos - 1];
                for slot in idx.iter_mut().skip(pos) {
                    *slot = v;
                }
            }
        }
    }
    Ok(format!("{checked} lists"))
}

fn witten_homomorphism(level: Level) -> Result<String, String> {
    let shapes: &[(usize, usize)] = if level == Level::Quick {
        &[(2, 4), (2, 5)]
    } else {
        &[(2, 4), (2, 5), (3, 6)]
    };
    for &(r, n) in shapes {
        let ring = FusionRing::new(r, n - r).map_err(err)?;
        let shape = ring.shape();
        for a in shape.subsets() {
            for b in shape.subsets() {
                let prod = quantum::quantum_product(
                    shape,
                    &QClass::basis(shape, a.clone()),
                    &QClass::basis(shape, b.clone()),
                )
                .map_err(err)?;
                let lhs = ring
                    .reduce(&ring.witten_map_q(&prod).map_err(err)?)
                    .map_err(err)?;
                let wa = ring
                    .witten_map(&CohClass::basis(shape, a.clone()))
                    .map_err(err)?;
                let wb = ring
                    .witten_map(&CohClass::basis(shape, b.clone()))
                    .map_err(err)?;
                let rhs = ring
                    .reduce(&ring.rtilde_product(&wa, &wb).map_err(err)?)
                    .map_err(err)?;
                ensure(lhs == rhs, || format!("{shape}: W({a} * {b})"))?;
            }
        }
        // W(ω_K) x^r = 1 × 1 modulo T(u) − u
        let wk = ring.witten_term(&shape.special_k()).map_err(err)?;
        let shifted = RTildeTerm {
            rep: wk.rep.clone(),
            exponent: (wk.exponent + r) % (r * n),
        };
        let one = RTildeTerm {
            rep: SuRep::trivial(r),
            exponent: 0,
        };
        ensure(
            ring.normal_form(&shifted).map_err(err)? == ring.normal_form(&one).map_err(err)?,
            || format!("{shape}: W(K) x^r"),
        )?;
    }
    Ok(format!("{shapes:?}"))
}

fn t_orbits(_level: Level) -> Result<String, String> {
    let mut terms = 0;
    for r in 1..=3 {
        for k in 1..=3 {
            let ring = FusionRing::new(r, k).map_err(err)?;
            let rn = r * (r + k);
            let mut simple = vec![0; r];
            simple[0] = k;
            let simple = SuRep::new(simple).map_err(err)?;
            for rep in ring.reps() {
                for exponent in (0..rn).filter(|e| e % r == rep.size() % r) {
                    let t = RTildeTerm {
                        rep: rep.clone(),
                        exponent,
                    };
                    let found = ring.orbit_box_elements(&t).map_err(err)?;
                    ensure(found.len() == 1, || {
                        format!("SU({r})_{k} {t:?}: {} box elements", found.len())
                    })?;
                    let lambda = &found[0].1;
                    ensure(lambda.fits(r, k), || {
                        format!("{t:?}: {lambda} outside the box")
                    })?;
                    // normalizing the normal form changes nothing
                    let again = RTildeTerm {
                        rep: SuRep::new(lambda.parts().to_vec()).map_err(err)?,
                        exponent: lambda.size() % rn,
                    };
                    ensure(ring.normal_form(&again).map_err(err)? == *lambda, || {
                        format!("{t:?}: idempotence")
                    })?;
                    // T(u) = u · ((k,0,…,0) × x^n)
                    let tu = ring.t_operator(&t).map_err(err)?;
                    let fused = ring.basis_product(rep, &simple).map_err(err)?;
                    let terms_v: Vec<_> = fused.terms().collect();
                    ensure(
                        terms_v.len() == 1 && *terms_v[0].0 == tu.rep && terms_v[0].1.is_one(),
                        || format!("SU({r})_{k}: T({t:?}) vs simple-current product"),
                    )?;
                    terms += 1;
                }
            }
        }
    }
    Ok(format!("{terms} terms, r,k <= 3"))
}

fn handle_vs_factorization(level: Level) -> Result<String, String> {
    let (max, gmax) = if level == Level::Quick {
        (2, 2)
    } else {
        (3, 3)
    };
    for r in 1..=max {
        for k in 1..=max {
            let ring = FusionRing::new(r, k).map_err(err)?;
            for g in 0..=gmax {
                let a = ring.conformal_block_dim(g, &[]).map_err(err)?;
                let b = ring
                    .conformal_block_dim_by_factorization(g, &[])
                    .map_err(err)?;
                ensure(a == b, || format!("SU({r})_{k} g={g}: {a} vs {b}"))?;
            }
        }
    }
    Ok(format!("r,k <= {max}, g <= {gmax}"))
}

fn routes(level: Level) -> Result<String, String> {
    let grid: Vec<(usize, usize, usize)> = if level == Level::Quick {
        vec![
            (1, 1, 1),
            (2, 1, 2),
            (3, 1, 2),
            (2, 2, 2),
            (1, 2, 2),
            (1, 3, 2),
        ]
    } else {
        let mut v = Vec::new();
        for r in 2..=4 {
            for g in 1..=4 {
                v.push((r, 1, g));
            }
        }
        for g in 1..=5 {
            v.push((2, 2, g));
        }
        for (r, k) in [(2, 3), (3, 2)] {
            for g in 1..=3 {
                v.push((r, k, g));
            }
        }
        v
    };
    for &(r, k, g) in &grid {
        let a = m_via_factorization(r, k, g).map_err(err)?;
        let b = m_via_gw(r, k, g).map_err(err)?;
        ensure(a == b, || {
            format!("M({r},{k},{g}): factorization {a}, GW {b}")
        })?;
    }
    Ok(format!("{} (r,k,g) triples", grid.len()))
}

fn rank_level(level: Level) -> Result<String, String> {
    let gmax = if level == Level::Quick { 2 } else { 3 };
    for (r, k) in [(2, 2), (2, 3), (3, 2), (2, 1), (3, 1)] {
        for g in 1..=gmax {
            ensure(rank_level_symmetry_check(r, k, g).map_err(err)?, || {
                format!("({r},{k},{g})")
            })?;
        }
    }
    Ok(format!("g <= {gmax}"))
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

fn genus_one(level: Level) -> Result<String, String> {
    let max = if level == Level::Quick { 3 } else { 4 };
    for r in 1..=max {
        for k in 1..=max {
            let m = m_via_factorization(r, k, 1).map_err(err)?;
            let expect = binomial(r + k - 1, r - 1);
            ensure(m == expect, || {
                format!("M({r},{k},1) = {m}, expected {expect}")
            })?;
        }
    }
    Ok(format!("r,k <= {max}"))
}

/// A random list of subsets with Σ codim ≥ rk and Σ codim ≡ 0 mod r, paired
/// with the twist D making the untwisted-degree query dimension 0.
pub fn random_fusion_query(
    shape: Shape,
    max_insertions: usize,
    rng: &mut impl Rng,
) -> Option<GwQuery> {
    let all = shape.subsets();
    let s = rng.gen_range(1..=max_insertions);
    let ins: Vec<Subset> = (0..s).map(|_| all.choose(rng).unwrap().clone()).collect();
    let total: usize = ins.iter().map(|i| shape.codim_unchecked(i)).sum();
    if total < shape.dim() || !(total - shape.dim()).is_multiple_of(shape.r()) {
        return None;
    }
    let twist = -(((total - shape.dim()) / shape.r()) as i64);
    GwQuery::new(shape, ins, 0, twist).ok()
}

fn gw_equals_fusion(level: Level) -> Result<String, String> {
    let count = if level == Level::Quick { 20 } else { 150 };
    let shapes = [(2, 4), (2, 5), (3, 6)];
    let rings: Vec<FusionRing> = shapes
        .iter()
        .map(|&(r, n)| FusionRing::new(r, n - r))
        .collect::<crate::Result<_>>()
        .map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(87);
    let mut done = 0;
    let mut nonzero = 0;
    while done < count {
        let ring = &rings[done % rings.len()];
        let Some(q) = random_fusion_query(ring.shape(), 6, &mut rng) else {
            continue;
        };
        let gw = gw_twisted(&q).map_err(err)?;
        let reps = q
            .insertions
            .iter()
            .map(|s| ring.rep_of_any_subset(s))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(err)?;
        let n0 = ring.fusion_coefficient(&reps).map_err(err)?;
        ensure(gw == n0, || format!("{q}: GW {gw}, fusion {n0}"))?;
        if !gw.is_zero() {
            nonzero += 1;
        }
        done += 1;
    }
    Ok(format!("{count} lists, {nonzero} nonzero"))
}

fn route_disagreements(_level: Level) -> Result<String, String> {
    let (checks, bad) = quantum::route_stats();
    ensure(bad == 0, || {
        format!("{bad} of {checks} comparisons disagreed")
    })?;
    Ok(format!("{checks} comparisons, 0 disagreements"))
}
