//! M(r, k, g) by two routes.
//!
//! The factorization route takes the genus-g conformal-block dimension
//! N_g^{(k)}(∅) in the level-k fusion ring. The enumerative route sums the
//! twisted invariants ⟨ω_{I¹}, …, ω_{I^g}, ω_{(I¹)'}, …, ω_{(I^g)'}⟩_{0,−k(g−1)}
//! over all g-tuples of r-subsets of [r + k] containing 1.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use rayon::prelude::*;

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::fusion::FusionRing;
use crate::quantum::{gw_twisted, GwQuery};
use crate::schubert::{Shape, Subset};

fn check_genus(g: usize) -> Result<()> {
    if g == 0 {
        Err(Error::Genus { min: 1, got: g })
    } else {
        Ok(())
    }
}

pub fn m_via_factorization(r: usize, k: usize, g: usize) -> Result<BigInt> {
    check_genus(g)?;
    FusionRing::new(r, k)?.conformal_block_dim(g, &[])
}

/// r-subsets of [r + k] containing 1, lexicographically.
pub fn admissible_subsets(shape: Shape) -> Vec<Subset> {
    shape
        .subsets()
        .into_iter()
        .filter(|s| s.contains(1))
        .collect()
}

/// All g-tuples of admissible subsets, first slot most significant.
pub fn tuples(shape: Shape, g: usize) -> Vec<Vec<Subset>> {
    let base = admissible_subsets(shape);
    let count = base.len().pow(g as u32);
    (0..count)
        .map(|mut idx| {
            let mut t = vec![base[0].clone(); g];
            for slot in (0..g).rev() {
                t[slot] = base[idx % base.len()].clone();
                idx /= base.len();
            }
            t
        })
        .collect()
}

/// The twisted query attached to a tuple: insertions I¹…I^g, (I¹)'…(I^g)',
/// degree 0, twist −k(g−1).
pub fn tuple_query(shape: Shape, tuple: &[Subset]) -> Result<GwQuery> {
    let mut ins = tuple.to_vec();
    for s in tuple {
        ins.push(shape.dual_subset(s)?);
    }
    let twist = -((shape.k() * (tuple.len() - 1)) as i64);
    GwQuery::new(shape, ins, 0, twist)
}

pub fn cache_key(query: &GwQuery) -> String {
    let subsets: Vec<String> = query
        .insertions
        .iter()
        .map(|s| {
            s.as_slice()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!(
        "gw_twisted|r={}|n={}|{}|d={}|D={}",
        query.shape.r(),
        query.shape.n(),
        subsets.join(";"),
        query.d,
        query.twist
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleValue {
    pub tuple: Vec<Subset>,
    pub value: BigInt,
}

/// Every summand of the enumerative route, in tuple order. Tuples are
/// evaluated in parallel on the current rayon pool.
pub fn gw_breakdown(
    r: usize,
    k: usize,
    g: usize,
    cache: Option<&Cache>,
) -> Result<Vec<TupleValue>> {
    check_genus(g)?;
    let shape = Shape::new(r, k)?;
    tuples(shape, g)
        .into_par_iter()
        .map(|tuple| {
            let query = tuple_query(shape, &tuple)?;
            let key = cache.map(|_| cache_key(&query));
            if let (Some(c), Some(key)) = (cache, &key) {
                if let Some(v) = c.get(key) {
                    return Ok(TupleValue { tuple, value: v });
                }
            }
            let value = gw_twisted(&query)?;
            if let (Some(c), Some(key)) = (cache, key) {
                c.put(key, &value);
            }
            Ok(TupleValue { tuple, value })
        })
        .collect()
}

pub fn m_via_gw(r: usize, k: usize, g: usize) -> Result<BigInt> {
    Ok(gw_breakdown(r, k, g, None)?
        .into_iter()
        .fold(BigInt::zero(), |acc, t| acc + t.value))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdReport {
    pub r: usize,
    pub k: usize,
    pub g: usize,
    pub m_factorization: BigInt,
    pub m_gw: BigInt,
    pub per_tuple: Option<Vec<TupleValue>>,
    pub agree: bool,
}

pub fn sd_check(
    r: usize,
    k: usize,
    g: usize,
    per_tuple: bool,
    cache: Option<&Cache>,
) -> Result<SdReport> {
    let m_factorization = m_via_factorization(r, k, g)?;
    let breakdown = gw_breakdown(r, k, g, cache)?;
    let m_gw = breakdown
        .iter()
        .fold(BigInt::zero(), |acc, t| acc + &t.value);
    Ok(SdReport {
        r,
        k,
        g,
        agree: m_factorization == m_gw,
        m_factorization,
        m_gw,
        per_tuple: per_tuple.then_some(breakdown),
    })
}

/// M(r, k, g) · k^g = M(k, r, g) · r^g.
pub fn rank_level_symmetry_check(r: usize, k: usize, g: usize) -> Result<bool> {
    let lhs = m_via_factorization(r, k, g)? * BigInt::from(k).pow(g as u32);
    let rhs = m_via_factorization(k, r, g)? * BigInt::from(r).pow(g as u32);
    Ok(lhs == rhs)
}

/// Summands of the enumerative route for r = k = 2 grouped by ℓ, the
/// number of {1,3} entries in the tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandClass {
    pub tuples: usize,
    /// Distinct summand values seen in this class.
    pub values: BTreeSet<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandProfile {
    pub g: usize,
    pub classes: BTreeMap<usize, SummandClass>,
    pub total: BigInt,
}

impl SummandProfile {
    pub fn uniform(&self) -> bool {
        self.classes.values().all(|c| c.values.len() == 1)
    }

    /// Common value of the class, if uniform.
    pub fn value(&self, ell: usize) -> Option<&BigInt> {
        let class = self.classes.get(&ell)?;
        (class.values.len() == 1).then(|| class.values.iter().next().unwrap())
    }
}

pub fn summand_profile(g: usize) -> Result<SummandProfile> {
    let marked: Subset = [1, 3].into();
    let mut classes: BTreeMap<usize, SummandClass> = BTreeMap::new();
    let mut total = BigInt::zero();
    for tv in gw_breakdown(2, 2, g, None)? {
        let ell = tv.tuple.iter().filter(|s| **s == marked).count();
        let class = classes.entry(ell).or_insert_with(|| SummandClass {
            tuples: 0,
            values: BTreeSet::new(),
        });
        class.tuples += 1;
        total += &tv.value;
        class.values.insert(tv.value);
    }
    Ok(SummandProfile { g, classes, total })
}
