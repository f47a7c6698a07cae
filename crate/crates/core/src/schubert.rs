//! Subsets, box partitions and the classical cohomology ring of Gr(r, n).
//!
//! A Schubert class ω_I is indexed by an r-subset I = {i_1 < … < i_r} of
//! [n]. Its partition is λ_a = n − r + a − i_a, which fits in the r × k box,
//! and its codimension is |λ|. Classes are combined with arbitrary-precision
//! integer coefficients and multiplied with Littlewood–Richardson numbers
//! restricted to the box.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lr::{self, Bound};

/// Gr(r, n) with n = r + k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    r: usize,
    k: usize,
}

impl Shape {
    pub fn new(r: usize, k: usize) -> Result<Self> {
        if r == 0 || k == 0 {
            return Err(Error::InvalidShape { r, k });
        }
        Ok(Shape { r, k })
    }

    /// Shape from the (r, n) pair used on the command line and in JSON.
    pub fn from_rn(r: usize, n: usize) -> Result<Self> {
        Shape::new(r, n.saturating_sub(r))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.r + self.k
    }

    /// Complex dimension r·k.
    pub fn dim(&self) -> usize {
        self.r * self.k
    }

    pub fn check(&self, subset: &Subset) -> Result<()> {
        let s = &subset.0;
        let ok = s.len() == self.r
            && s.iter().all(|&i| (1..=self.n()).contains(&i))
            && s.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSubset {
                subset: s.clone(),
                r: self.r,
                n: self.n(),
            })
        }
    }

    pub fn check_partition(&self, lambda: &Partition) -> Result<()> {
        if lambda.0.len() == self.r && lambda.fits(self.r, self.k) {
            Ok(())
        } else {
            Err(Error::PartitionOutOfBox {
                parts: lambda.0.clone(),
                rows: self.r,
                cols: self.k,
            })
        }
    }

    /// All r-subsets of [n] in lexicographic order.
    pub fn subsets(&self) -> Vec<Subset> {
        let (r, n) = (self.r, self.n());
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=r).collect();
        loop {
            out.push(Subset(cur.clone()));
            // advance to the next combination
            let mut a = r;
            while a > 0 && cur[a - 1] == n - r + a {
                a -= 1;
            }
            if a == 0 {
                return out;
            }
            cur[a - 1] += 1;
            for b in a..r {
                cur[b] = cur[b - 1] + 1;
            }
        }
    }

    /// L = {k+1, …, n}, the fundamental class.
    pub fn fundamental(&self) -> Subset {
        Subset((self.k + 1..=self.n()).collect())
    }

    /// {1, …, r}, the point class.
    pub fn point(&self) -> Subset {
        Subset((1..=self.r).collect())
    }

    /// K = {1, k+2, …, n}, whose partition is (k, 0, …, 0).
    pub fn special_k(&self) -> Subset {
        let mut v = vec![1];
        v.extend(self.k + 2..=self.n());
        Subset(v)
    }

    pub fn lambda_of_subset(&self, subset: &Subset) -> Result<Partition> {
        self.check(subset)?;
        Ok(self.lambda_unchecked(subset))
    }

    pub(crate) fn lambda_unchecked(&self, subset: &Subset) -> Partition {
        Partition(
            subset
                .0
                .iter()
                .enumerate()
                .map(|(a, &i)| self.k + a + 1 - i)
                .collect(),
        )
    }

    pub fn subset_of_lambda(&self, lambda: &Partition) -> Result<Subset> {
        self.check_partition(lambda)?;
        Ok(self.subset_unchecked(&lambda.0))
    }

    /// Inverse of [`Shape::lambda_of_subset`] for a length-r slice known to fit the box.
    pub(crate) fn subset_unchecked(&self, lambda: &[usize]) -> Subset {
        Subset(
            (0..self.r)
                .map(|a| self.k + a + 1 - lambda.get(a).copied().unwrap_or(0))
                .collect(),
        )
    }

    /// I' = {n+1−i : i ∈ I}.
    pub fn dual_subset(&self, subset: &Subset) -> Result<Subset> {
        self.check(subset)?;
        Ok(self.dual_unchecked(subset))
    }

    pub(crate) fn dual_unchecked(&self, subset: &Subset) -> Subset {
        let n = self.n();
        Subset(subset.0.iter().rev().map(|&i| n + 1 - i).collect())
    }

    pub fn codim(&self, subset: &Subset) -> Result<usize> {
        self.check(subset)?;
        Ok(self.codim_unchecked(subset))
    }

    pub(crate) fn codim_unchecked(&self, subset: &Subset) -> usize {
        let (r, k) = (self.r, self.k);
        r * k + r * (r + 1) / 2 - subset.0.iter().sum::<usize>()
    }

    fn same(&self, other: Shape) -> Result<()> {
        if *self == other {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(self.r, self.n(), other.r, other.n()))
        }
    }

    /// Product of two basis classes, as (subset, LR coefficient) pairs.
    pub fn classical_basis_product(&self, a: &Subset, b: &Subset) -> Vec<(Subset, u64)> {
        let la = self.lambda_unchecked(a);
        let lb = self.lambda_unchecked(b);
        lr::expand(&la.0, &lb.0, Bound::rect(self.r, self.k))
            .iter()
            .map(|(nu, c)| (self.subset_unchecked(nu), *c))
            .collect()
    }

    pub fn classical_product(&self, a: &CohClass, b: &CohClass) -> Result<CohClass> {
        self.same(a.shape)?;
        self.same(b.shape)?;
        let mut out = CohClass::zero(*self);
        for (i, ca) in &a.terms {
            for (j, cb) in &b.terms {
                let scale = ca * cb;
                for (m, c) in self.classical_basis_product(i, j) {
                    out.add_term(m, &scale * BigInt::from(c));
                }
            }
        }
        Ok(out)
    }

    /// Coefficient of the point class in `a · b`.
    pub fn pairing(&self, a: &CohClass, b: &CohClass) -> Result<BigInt> {
        Ok(self.classical_product(a, b)?.coeff(&self.point()))
    }

    /// Checks that the index set splits by whether 1 ∈ I, and that
    /// Σ_I ω_I ⊗ ω_{I'} acts as the diagonal class under the pairing.
    pub fn diagonal_decomposition_check(&self) -> bool {
        let all = self.subsets();
        let (with_one, without): (Vec<_>, Vec<_>) = all.iter().partition(|s| s.contains(1));
        let mut merged: Vec<&Subset> = with_one.iter().chain(without.iter()).copied().collect();
        merged.sort();
        merged.dedup();
        if merged.len() != all.len() || with_one.len() + without.len() != all.len() {
            return false;
        }

        let basis: Vec<CohClass> = all
            .iter()
            .map(|s| CohClass::basis(*self, s.clone()))
            .collect();
        let codims: Vec<usize> = all.iter().map(|s| self.codim_unchecked(s)).collect();
        let pair = |x: &CohClass, y: &CohClass| self.pairing(x, y).expect("same shape");
        for (j, wj) in basis.iter().enumerate() {
            for (l, wl) in basis.iter().enumerate() {
                if codims[j] + codims[l] != self.dim() {
                    continue;
                }
                let mut sum = BigInt::zero();
                for (i, wi) in basis.iter().enumerate() {
                    if codims[j] + codims[i] != self.dim() {
                        continue;
                    }
                    let wi_dual = CohClass::basis(*self, self.dual_unchecked(&all[i]));
                    sum += pair(wj, wi) * pair(&wi_dual, wl);
                }
                if sum != pair(wj, wl) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.r, self.n())
    }
}

/// A strictly increasing list of indices in [n]; validity against a shape is
/// checked by [`Shape::check`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub(crate) Vec<usize>);

impl Subset {
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        Subset(elements)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }
}

impl From<&[usize]> for Subset {
    fn from(v: &[usize]) -> Self {
        Subset::new(v.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Subset {
    fn from(v: [usize; N]) -> Self {
        Subset::new(v.to_vec())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Weakly decreasing sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub(crate) Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Partition(parts))
        } else {
            Err(Error::Parse(format!("{parts:?} is not weakly decreasing")))
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.0.iter().filter(|&&p| p > 0).count() <= rows
            && self.0.first().is_none_or(|&p| p <= cols)
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(v: [usize; N]) -> Self {
        Partition::new(v.to_vec()).expect("weakly decreasing literal")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Integer combination of Schubert classes of one Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    shape: Shape,
    terms: BTreeMap<Subset, BigInt>,
}

impl CohClass {
    pub fn zero(shape: Shape) -> Self {
        CohClass {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(shape: Shape, subset: Subset) -> Self {
        let mut c = CohClass::zero(shape);
        c.add_term(subset, BigInt::one());
        c
    }

    /// Basis class of a box partition.
    pub fn of_partition(shape: Shape, lambda: &Partition) -> Result<Self> {
        Ok(CohClass::basis(shape, shape.subset_of_lambda(lambda)?))
    }

    pub fn from_terms(
        shape: Shape,
        terms: impl IntoIterator<Item = (Subset, BigInt)>,
    ) -> Result<Self> {
        let mut c = CohClass::zero(shape);
        for (s, x) in terms {
            shape.check(&s)?;
            c.add_term(s, x);
        }
        Ok(c)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn add_term(&mut self, subset: Subset, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(subset) {
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

    pub fn coeff(&self, subset: &Subset) -> BigInt {
        self.terms.get(subset).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(r: usize, n: usize) -> Shape {
        Shape::from_rn(r, n).unwrap()
    }

    #[test]
    fn lambda_examples() {
        let s = gr(2, 4);
        assert_eq!(s.lambda_of_subset(&[1, 3].into()).unwrap(), [2, 1].into());
        assert_eq!(s.lambda_of_subset(&[3, 4].into()).unwrap(), [0, 0].into());
        assert_eq!(s.lambda_of_subset(&[1, 2].into()).unwrap(), [2, 2].into());
    }

    #[test]
    fn subset_examples() {
        assert_eq!(
            gr(2, 4).subset_of_lambda(&[2, 1].into()).unwrap(),
            [1, 3].into()
        );
        assert_eq!(
            gr(2, 4).subset_of_lambda(&[0, 0].into()).unwrap(),
            [3, 4].into()
        );
        assert_eq!(
            gr(3, 6).subset_of_lambda(&[3, 3, 3].into()).unwrap(),
            [1, 2, 3].into()
        );
    }

    #[test]
    fn rejects_bad_input() {
        let s = gr(2, 4);
        assert!(s.lambda_of_subset(&[1, 5].into()).is_err());
        assert!(s.lambda_of_subset(&[1].into()).is_err());
        assert!(s.lambda_of_subset(&Subset(vec![2, 2])).is_err());
        assert!(s.lambda_of_subset(&[0, 2].into()).is_err());
        assert!(s.subset_of_lambda(&[3, 0].into()).is_err());
        assert!(s.subset_of_lambda(&[1, 1, 1].into()).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Shape::new(0, 3).is_err());
        assert!(Shape::from_rn(3, 3).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(gr(2, 4).dual_subset(&[1, 3].into()).unwrap(), [2, 4].into());
        assert_eq!(gr(2, 4).dual_subset(&[1, 2].into()).unwrap(), [3, 4].into());
        assert_eq!(
            gr(3, 6).dual_subset(&[1, 2, 3].into()).unwrap(),
            [4, 5, 6].into()
        );
    }

    #[test]
    fn codim_examples() {
        let s = gr(2, 4);
        assert_eq!(s.codim(&[3, 4].into()).unwrap(), 0);
        assert_eq!(s.codim(&[1, 2].into()).unwrap(), 4);
        assert_eq!(s.codim(&[1, 3].into()).unwrap(), 3);
    }

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let all = gr(2, 4).subsets();
        let expect: Vec<Subset> = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
            .into_iter()
            .map(Subset::from)
            .collect();
        assert_eq!(all, expect);
        assert_eq!(gr(3, 7).subsets().len(), 35);
        assert_eq!(gr(1, 2).subsets().len(), 2);
    }

    #[test]
    fn special_subsets() {
        let s = gr(2, 5);
        assert_eq!(s.fundamental(), [4, 5].into());
        assert_eq!(s.point(), [1, 2].into());
        assert_eq!(s.special_k(), [1, 5].into());
        assert_eq!(s.lambda_of_subset(&s.special_k()).unwrap(), [3, 0].into());
    }

    #[test]
    fn classical_square_of_hyperplane() {
        let s = gr(2, 4);
        let h = CohClass::of_partition(s, &[1, 0].into()).unwrap();
        let sq = s.classical_product(&h, &h).unwrap();
        let expect = CohClass::from_terms(
            s,
            [
                (s.subset_of_lambda(&[2, 0].into()).unwrap(), BigInt::one()),
                (s.subset_of_lambda(&[1, 1].into()).unwrap(), BigInt::one()),
            ],
        )
        .unwrap();
        assert_eq!(sq, expect);
        assert_eq!(s.pairing(&sq, &sq).unwrap(), BigInt::from(2));
    }

    #[test]
    fn classical_product_leaving_box_vanishes() {
        let s = gr(2, 4);
        let a = CohClass::of_partition(s, &[2, 0].into()).unwrap();
        let b = CohClass::of_partition(s, &[1, 1].into()).unwrap();
        assert!(s.classical_product(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn pairing_examples() {
        let s = gr(2, 4);
        let w = |v: [usize; 2]| CohClass::basis(s, v.into());
        assert_eq!(s.pairing(&w([1, 3]), &w([2, 4])).unwrap(), BigInt::one());
        assert_eq!(s.pairing(&w([1, 3]), &w([1, 3])).unwrap(), BigInt::zero());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = CohClass::basis(gr(2, 4), [1, 2].into());
        let b = CohClass::basis(gr(2, 5), [1, 2].into());
        assert!(matches!(
            gr(2, 4).classical_product(&a, &b),
            Err(Error::ShapeMismatch(..))
        ));
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let s = gr(2, 4);
        let mut c = CohClass::basis(s, [1, 2].into());
        c.add_term([1, 2].into(), BigInt::from(-1));
        assert!(c.is_zero());
    }

    #[test]
    fn diagonal_small_shapes() {
        assert!(gr(1, 2).diagonal_decomposition_check());
        assert!(gr(2, 4).diagonal_decomposition_check());
        assert!(gr(2, 5).diagonal_decomposition_check());
    }
}
