//! Small quantum cohomology of Gr(r, n) and (twisted) Gromov–Witten numbers.
//!
//! Quantum products of Schubert classes are obtained from the classical
//! Littlewood–Richardson expansion with at most r rows (unbounded width),
//! then reducing every shape to the r × k box by removing rim hooks of
//! length n. Each removed hook contributes one power of q and the sign
//! (−1)^{r − height}. In beta-number language a hook removal moves a bead
//! from position b to b − n; the hook height is one more than the number
//! of beads jumped over.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lr::{self, Bound};
use crate::schubert::{CohClass, Partition, Shape, Subset};

/// Result of reducing one shape: sign, number of hooks removed, box partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookReduction {
    pub negative: bool,
    pub q_degree: usize,
    pub core: Vec<usize>,
}

/// Reduces a partition with at most `r` rows into the r × (n − r) box by
/// removing n-rim hooks. `None` when the class vanishes in QH*(Gr(r, n)).
pub fn rim_hook_reduce(nu: &[usize], r: usize, n: usize) -> Option<RimHookReduction> {
    if nu.iter().filter(|&&p| p > 0).count() > r {
        return None;
    }
    let mut beads: Vec<usize> = (0..r)
        .map(|a| nu.get(a).copied().unwrap_or(0) + r - 1 - a)
        .collect();
    // two beads on one runner can never both reach the first n positions
    let mut residues: Vec<usize> = beads.iter().map(|b| b % n).collect();
    residues.sort_unstable();
    if residues.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut negative = false;
    let mut q_degree = 0;
    while beads[0] >= n {
        let top = beads[0];
        let target = top - n;
        let jumped = beads[1..].iter().filter(|&&b| b > target).count();
        if (r - 1 - jumped) % 2 == 1 {
            negative = !negative;
        }
        beads[0] = target;
        beads.sort_unstable_by(|a, b| b.cmp(a));
        q_degree += 1;
    }
    let core = beads
        .iter()
        .enumerate()
        .map(|(a, &b)| b - (r - 1 - a))
        .collect();
    Some(RimHookReduction {
        negative,
        q_degree,
        core,
    })
}

/// Integer combination of q^d ω_I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QClass {
    shape: Shape,
    terms: BTreeMap<(Subset, usize), BigInt>,
}

impl QClass {
    pub fn zero(shape: Shape) -> Self {
        QClass {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(shape: Shape, subset: Subset) -> Self {
        Self::monomial(shape, subset, 0)
    }

    pub fn monomial(shape: Shape, subset: Subset, q: usize) -> Self {
        let mut c = QClass::zero(shape);
        c.add_term(subset, q, BigInt::one());
        c
    }

    pub fn from_terms(
        shape: Shape,
        terms: impl IntoIterator<Item = (Subset, usize, BigInt)>,
    ) -> Result<Self> {
        let mut c = QClass::zero(shape);
        for (s, q, x) in terms {
            shape.check(&s)?;
            c.add_term(s, q, x);
        }
        Ok(c)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn add_term(&mut self, subset: Subset, q: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((subset, q)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, subset: &Subset, q: usize) -> BigInt {
        self.terms
            .get(&(subset.clone(), q))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, usize, &BigInt)> {
        self.terms.iter().map(|((s, q), c)| (s, *q, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The q⁰ part as a classical class.
    pub fn classical_part(&self) -> CohClass {
        let mut out = CohClass::zero(self.shape);
        for ((s, q), c) in &self.terms {
            if *q == 0 {
                out.add_term(s.clone(), c.clone());
            }
        }
        out
    }

    /// Image in QH*/(q − 1).
    pub fn at_q_one(&self) -> CohClass {
        let mut out = CohClass::zero(self.shape);
        for ((s, _), c) in &self.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    /// Every term has the same codim + d·n; returns it, or `None` for
    /// zero or inhomogeneous classes.
    pub fn degree(&self) -> Option<usize> {
        let n = self.shape.n();
        let mut it = self
            .terms
            .keys()
            .map(|(s, q)| self.shape.codim_unchecked(s) + q * n);
        let first = it.next()?;
        it.all(|x| x == first).then_some(first)
    }

    fn mul_basis(&self, subset: &Subset, max_q: Option<usize>) -> QClass {
        let mut out = QClass::zero(self.shape);
        for ((s, q), c) in &self.terms {
            for (m, e, x) in basis_product(self.shape, s, subset).iter() {
                let deg = q + e;
                if max_q.is_some_and(|cap| deg > cap) {
                    continue;
                }
                out.add_term(m.clone(), deg, c * x);
            }
        }
        out
    }
}

impl From<CohClass> for QClass {
    fn from(c: CohClass) -> Self {
        let mut out = QClass::zero(c.shape());
        for (s, x) in c.terms() {
            out.add_term(s.clone(), 0, x.clone());
        }
        out
    }
}

type BasisProduct = Arc<Vec<(Subset, usize, BigInt)>>;

static PRODUCTS: LazyLock<RwLock<HashMap<(Shape, Subset, Subset), BasisProduct>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// ω_I ⋆ ω_J as (K, q-degree, coefficient) triples, memoized.
pub fn basis_product(shape: Shape, a: &Subset, b: &Subset) -> BasisProduct {
    let key = if a <= b {
        (shape, a.clone(), b.clone())
    } else {
        (shape, b.clone(), a.clone())
    };
    if let Some(hit) = PRODUCTS.read().unwrap().get(&key) {
        return hit.clone();
    }
    let (r, n) = (shape.r(), shape.n());
    let la = shape.lambda_unchecked(&key.1);
    let lb = shape.lambda_unchecked(&key.2);
    let mut acc: BTreeMap<(Subset, usize), BigInt> = BTreeMap::new();
    for (nu, c) in lr::expand(la.parts(), lb.parts(), Bound::rows(r)).iter() {
        if let Some(red) = rim_hook_reduce(nu, r, n) {
            let coeff = if red.negative {
                -BigInt::from(*c)
            } else {
                BigInt::from(*c)
            };
            *acc.entry((shape.subset_unchecked(&red.core), red.q_degree))
                .or_default() += coeff;
        }
    }
    let computed: BasisProduct = Arc::new(
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((s, q), c)| (s, q, c))
            .collect(),
    );
    PRODUCTS
        .write()
        .unwrap()
        .entry(key)
        .or_insert(computed)
        .clone()
}

pub fn quantum_product(shape: Shape, a: &QClass, b: &QClass) -> Result<QClass> {
    for s in [a.shape, b.shape] {
        if s != shape {
            return Err(Error::ShapeMismatch(shape.r(), shape.n(), s.r(), s.n()));
        }
    }
    let mut out = QClass::zero(shape);
    for ((j, e), cb) in &b.terms {
        let part = a.mul_basis(j, None);
        for ((m, q), x) in part.terms {
            out.add_term(m, q + e, x * cb);
        }
    }
    Ok(out)
}

/// ω_{I¹} ⋆ ⋯ ⋆ ω_{Iˢ}, optionally discarding q-degrees above `max_q`.
pub fn product_of_basis(shape: Shape, factors: &[Subset], max_q: Option<usize>) -> Result<QClass> {
    let mut out = QClass::basis(shape, shape.fundamental());
    for f in factors {
        shape.check(f)?;
        out = out.mul_basis(f, max_q);
    }
    Ok(out)
}

/// r(n−r) + dn − Dr − Σ codim.
pub fn expected_dimension(shape: Shape, insertions: &[Subset], d: i64, twist: i64) -> Result<i64> {
    let mut total = (shape.dim() as i64) + d * shape.n() as i64 - twist * shape.r() as i64;
    for s in insertions {
        total -= shape.codim(s)? as i64;
    }
    Ok(total)
}

/// Untwisted ⟨ω_{I¹}, …, ω_{Iˢ}⟩_{d,0}.
pub fn gw_number(shape: Shape, insertions: &[Subset], d: i64) -> Result<BigInt> {
    if insertions.is_empty() {
        return Err(Error::NoInsertions);
    }
    if expected_dimension(shape, insertions, d, 0)? != 0 || d < 0 {
        return Ok(BigInt::zero());
    }
    let mut padded = insertions.to_vec();
    while padded.len() < 3 {
        padded.push(shape.fundamental());
    }
    let (last, rest) = padded.split_last().expect("nonempty");
    let d = d as usize;
    let prod = product_of_basis(shape, rest, Some(d))?;
    Ok(prod.coeff(&shape.dual_unchecked(last), d))
}

/// Shift of the first insertion: trades one unit of twist for a relabelled
/// subset and possibly one unit of degree.
pub fn shift(shape: Shape, subset: &Subset, d: i64) -> Result<(Subset, i64)> {
    shape.check(subset)?;
    let s = subset.as_slice();
    if s[0] > 1 {
        Ok((Subset(s.iter().map(|i| i - 1).collect()), d))
    } else {
        let mut j: Vec<usize> = s[1..].iter().map(|i| i - 1).collect();
        j.push(shape.n());
        Ok((Subset(j), d - 1))
    }
}

/// Inverse of [`shift`]; raises the twist by one.
pub fn unshift(shape: Shape, subset: &Subset, d: i64) -> Result<(Subset, i64)> {
    shape.check(subset)?;
    let n = shape.n();
    let s = subset.as_slice();
    if s.contains(&n) {
        let mut i = vec![1];
        i.extend(s.iter().filter(|&&j| j != n).map(|j| j + 1));
        Ok((Subset(i), d + 1))
    } else {
        Ok((Subset(s.iter().map(|j| j + 1).collect()), d))
    }
}

static ROUTE_CHECKS: AtomicU64 = AtomicU64::new(0);
static ROUTE_DISAGREEMENTS: AtomicU64 = AtomicU64::new(0);

/// (comparisons made, disagreements seen) by [`gw_twisted`] in this process.
pub fn route_stats() -> (u64, u64) {
    (
        ROUTE_CHECKS.load(Ordering::Relaxed),
        ROUTE_DISAGREEMENTS.load(Ordering::Relaxed),
    )
}

/// A twisted Gromov–Witten number ⟨ω_{I¹}, …, ω_{Iˢ}⟩_{d,D}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwQuery {
    pub shape: Shape,
    pub insertions: Vec<Subset>,
    pub d: i64,
    pub twist: i64,
}

impl GwQuery {
    pub fn new(shape: Shape, insertions: Vec<Subset>, d: i64, twist: i64) -> Result<Self> {
        if insertions.is_empty() {
            return Err(Error::NoInsertions);
        }
        for s in &insertions {
            shape.check(s)?;
        }
        Ok(GwQuery {
            shape,
            insertions,
            d,
            twist,
        })
    }

    pub fn expected_dimension(&self) -> i64 {
        expected_dimension(self.shape, &self.insertions, self.d, self.twist)
            .expect("validated on construction")
    }

    /// Route (a): move the twist into the first insertion by repeated
    /// (un)shifting until D = 0.
    pub fn via_shift(&self) -> Result<BigInt> {
        let mut first = self.insertions[0].clone();
        let mut d = self.d;
        let mut twist = self.twist;
        while twist < 0 {
            (first, d) = unshift(self.shape, &first, d)?;
            twist += 1;
        }
        while twist > 0 {
            (first, d) = shift(self.shape, &first, d)?;
            twist -= 1;
        }
        let mut ins = self.insertions.clone();
        ins[0] = first;
        gw_number(self.shape, &ins, d)
    }

    /// Route (b), D ≤ 0 only: append −D copies of ω_K, K = {1, k+2, …, n},
    /// and evaluate untwisted at degree d − D.
    pub fn via_insertions(&self) -> Result<BigInt> {
        debug_assert!(self.twist <= 0);
        let mut ins = self.insertions.clone();
        let extra = (-self.twist) as usize;
        ins.extend(std::iter::repeat_n(self.shape.special_k(), extra));
        gw_number(self.shape, &ins, self.d - self.twist)
    }
}

impl fmt::Display for GwQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <", self.shape)?;
        for (i, s) in self.insertions.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ">_(d={}, D={})", self.d, self.twist)
    }
}

/// Evaluates a twisted invariant. For D ≤ 0 both the shift route and the
/// ω_K-insertion route are computed and must agree; for D > 0 only the
/// shift route exists.
pub fn gw_twisted(query: &GwQuery) -> Result<BigInt> {
    if query.expected_dimension() != 0 {
        return Ok(BigInt::zero());
    }
    if query.twist > 0 {
        return query.via_shift();
    }
    let shifted = query.via_shift()?;
    let inserted = query.via_insertions()?;
    ROUTE_CHECKS.fetch_add(1, Ordering::Relaxed);
    if shifted != inserted {
        ROUTE_DISAGREEMENTS.fetch_add(1, Ordering::Relaxed);
        return Err(Error::RouteDisagreement {
            query: query.to_string(),
            shift: shifted.to_string(),
            insertion: inserted.to_string(),
        });
    }
    Ok(shifted)
}

/// Quantum Pieri rule for σ_p ⋆ σ_λ, 1 ≤ p ≤ k: classical horizontal strips
/// inside the box, plus q·σ_ν over ν with |ν| = |λ| + p − n and
/// λ_1 − 1 ≥ ν_1 ≥ λ_2 − 1 ≥ ν_2 ≥ ⋯ ≥ λ_r − 1 ≥ ν_r ≥ 0.
pub fn quantum_pieri(shape: Shape, p: usize, lambda: &Partition) -> Result<QClass> {
    shape.check_partition(lambda)?;
    let (r, k, n) = (shape.r(), shape.k(), shape.n());
    let l = lambda.parts();
    let mut out = QClass::zero(shape);

    let lo: Vec<i64> = l.iter().map(|&x| x as i64).collect();
    let hi: Vec<i64> = (0..r)
        .map(|a| if a == 0 { k as i64 } else { l[a - 1] as i64 })
        .collect();
    for mu in bounded_sequences(&lo, &hi, (lambda.size() + p) as i64) {
        out.add_term(shape.subset_unchecked(&mu), 0, BigInt::one());
    }

    let target = (lambda.size() + p) as i64 - n as i64;
    if target >= 0 && l[r - 1] >= 1 {
        let hi: Vec<i64> = l.iter().map(|&x| x as i64 - 1).collect();
        let lo: Vec<i64> = (0..r)
            .map(|a| {
                if a + 1 < r {
                    (l[a + 1] as i64 - 1).max(0)
                } else {
                    0
                }
            })
            .collect();
        for nu in bounded_sequences(&lo, &hi, target) {
            out.add_term(shape.subset_unchecked(&nu), 1, BigInt::one());
        }
    }
    Ok(out)
}

fn bounded_sequences(lo: &[i64], hi: &[i64], total: i64) -> Vec<Vec<usize>> {
    fn go(
        a: usize,
        lo: &[i64],
        hi: &[i64],
        left: i64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if a == lo.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_min: i64 = lo[a + 1..].iter().sum();
        let rest_max: i64 = hi[a + 1..].iter().sum();
        for x in lo[a]..=hi[a] {
            let rem = left - x;
            if rem < rest_min || rem > rest_max {
                continue;
            }
            cur.push(x as usize);
            go(a + 1, lo, hi, rem, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo.iter().zip(hi).all(|(a, b)| a <= b) {
        go(0, lo, hi, total, &mut Vec::new(), &mut out);
    }
    out
}
