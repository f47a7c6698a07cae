//! The SU(r) level-k Verlinde algebra, built from QH*(Gr(r, r+k)) at q = 1.
//!
//! A level-≤k weight μ̄ is represented by the subset I ∋ 1 with
//! λ̄(I) = μ̄. The Witten map sends ω_I to λ̄(I) × x^{codim ω_I} in
//! R̃ ⊂ R(SU(r))_k × R(U(1))_{rn}, and q acts as the cyclic shift T. Since
//! distinct SU weights with a common U(1) exponent lie in distinct T-orbits,
//! the fusion coefficient of η in μ̄ · ν̄ is read off the quantum product
//! ω_I ⋆ ω_J by pushing each term q^d ω_K through T^d.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quantum::{self, QClass};
use crate::schubert::{CohClass, Partition, Shape, Subset};

/// Irreducible SU(r) representation, normalized so the last part is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuRep(Vec<usize>);

impl SuRep {
    /// Normalizes any weakly decreasing sequence by subtracting its last part.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "{parts:?} is not a nonempty weakly decreasing sequence"
            )));
        }
        let last = *parts.last().unwrap();
        Ok(SuRep(parts.into_iter().map(|p| p - last).collect()))
    }

    pub fn trivial(r: usize) -> Self {
        SuRep(vec![0; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// λ₁ − λ_r.
    pub fn level(&self) -> usize {
        self.0[0]
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.0[0] == 0
    }

    /// (μ₁ − μ_r, μ₁ − μ_{r−1}, …, μ₁ − μ₂, 0).
    pub fn dual(&self) -> SuRep {
        let top = self.0[0];
        SuRep(self.0.iter().rev().map(|&m| top - m).collect())
    }
}

impl<const N: usize> From<[usize; N]> for SuRep {
    fn from(v: [usize; N]) -> Self {
        SuRep::new(v.to_vec()).expect("weakly decreasing literal")
    }
}

impl fmt::Display for SuRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Partition(self.0.clone()))
    }
}

/// All SU(r) weights of level ≤ k, lexicographically ordered.
pub fn level_reps(r: usize, k: usize) -> Result<Vec<SuRep>> {
    Shape::new(r, k)?;
    fn go(r: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<SuRep>) {
        if cur.len() == r - 1 {
            let mut v = cur.clone();
            v.push(0);
            out.push(SuRep(v));
            return;
        }
        for x in 0..=cap {
            cur.push(x);
            go(r, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, k, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Integer combination of level-≤k SU(r) representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionElement {
    rank: usize,
    level: usize,
    terms: BTreeMap<SuRep, BigInt>,
}

impl FusionElement {
    pub fn zero(rank: usize, level: usize) -> Self {
        FusionElement {
            rank,
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(rank: usize, level: usize, rep: SuRep) -> Self {
        let mut e = FusionElement::zero(rank, level);
        e.add_term(rep, BigInt::one());
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn add_term(&mut self, rep: SuRep, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(rep) {
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

    pub fn coeff(&self, rep: &SuRep) -> BigInt {
        self.terms.get(rep).cloned().unwrap_or_default()
    }

    pub fn trivial_multiplicity(&self) -> BigInt {
        self.coeff(&SuRep::trivial(self.rank))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuRep, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// λ̄ × x^a in R̃, with a taken mod r·n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RTildeTerm {
    pub rep: SuRep,
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTildeElement {
    terms: BTreeMap<RTildeTerm, BigInt>,
}

impl RTildeElement {
    pub fn zero() -> Self {
        RTildeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, term: RTildeTerm, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(term) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&RTildeTerm, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, term: &RTildeTerm) -> BigInt {
        self.terms.get(term).cloned().unwrap_or_default()
    }
}

/// Fusion ring R(SU(r))_k together with its quantum-cohomology model
/// Gr(r, r + k). Structure constants and handle powers are memoized.
pub struct FusionRing {
    shape: Shape,
    reps: Vec<SuRep>,
    products: RwLock<HashMap<(SuRep, SuRep), Arc<FusionElement>>>,
    handle_powers: Mutex<Vec<FusionElement>>,
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FusionRing(SU({}) level {})",
            self.shape.r(),
            self.shape.k()
        )
    }
}

impl FusionRing {
    pub fn new(r: usize, k: usize) -> Result<Self> {
        let shape = Shape::new(r, k)?;
        Ok(FusionRing {
            shape,
            reps: level_reps(r, k)?,
            products: RwLock::new(HashMap::new()),
            handle_powers: Mutex::new(Vec::new()),
        })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.r()
    }

    pub fn level(&self) -> usize {
        self.shape.k()
    }

    pub fn reps(&self) -> &[SuRep] {
        &self.reps
    }

    pub fn check_rep(&self, rep: &SuRep) -> Result<()> {
        if rep.rank() == self.rank() && rep.level() <= self.level() {
            Ok(())
        } else {
            Err(Error::InvalidRep {
                parts: rep.0.clone(),
                rank: self.rank(),
                level: self.level(),
            })
        }
    }

    /// SU normalization λ̄(I) of the box partition of any subset.
    pub fn rep_of_any_subset(&self, subset: &Subset) -> Result<SuRep> {
        SuRep::new(self.shape.lambda_of_subset(subset)?.parts().to_vec())
    }

    /// λ̄(I) for I ∋ 1; a bijection onto [`level_reps`].
    pub fn rep_of_subset(&self, subset: &Subset) -> Result<SuRep> {
        self.shape.check(subset)?;
        if !subset.contains(1) {
            return Err(Error::MissingOne(subset.as_slice().to_vec()));
        }
        self.rep_of_any_subset(subset)
    }

    /// The unique I ∋ 1 with λ̄(I) = rep.
    pub fn subset_of_rep(&self, rep: &SuRep) -> Result<Subset> {
        self.check_rep(rep)?;
        let lift = self.level() - rep.level();
        Ok(self
            .shape
            .subset_unchecked(&rep.0.iter().map(|p| p + lift).collect::<Vec<_>>()))
    }

    fn rn(&self) -> usize {
        self.shape.r() * self.shape.n()
    }

    fn check_term(&self, term: &RTildeTerm) -> Result<()> {
        self.check_rep(&term.rep)?;
        let r = self.rank();
        if term.exponent >= self.rn() || term.exponent % r != term.rep.size() % r {
            return Err(Error::Congruence {
                exponent: term.exponent,
                size: term.rep.size(),
                rank: r,
            });
        }
        Ok(())
    }

    /// T(λ̄ × x^a) = η̄ × x^{n+a} with η = (k + λ_r, λ₁, …, λ_{r−1}).
    pub fn t_operator(&self, term: &RTildeTerm) -> Result<RTildeTerm> {
        self.check_term(term)?;
        Ok(self.t_unchecked(term))
    }

    fn t_unchecked(&self, term: &RTildeTerm) -> RTildeTerm {
        let l = &term.rep.0;
        let r = l.len();
        let mut eta = Vec::with_capacity(r);
        eta.push(self.level() + l[r - 1]);
        eta.extend_from_slice(&l[..r - 1]);
        RTildeTerm {
            rep: SuRep::new(eta).expect("cyclic shift of a level-k weight"),
            exponent: (term.exponent + self.shape.n()) % self.rn(),
        }
    }

    /// Every element λ̄ × x^{|λ|} of the T-orbit of `term` with λ in the
    /// r × k box, as (T-power, λ). There is exactly one.
    pub fn orbit_box_elements(&self, term: &RTildeTerm) -> Result<Vec<(usize, Partition)>> {
        self.check_term(term)?;
        let (r, k, rn) = (self.rank(), self.level(), self.rn());
        let mut out = Vec::new();
        let mut cur = term.clone();
        for b in 0..r {
            let top = cur.rep.level();
            for lift in 0..=(k - top) {
                if (cur.rep.size() + r * lift) % rn == cur.exponent {
                    out.push((b, Partition(cur.rep.0.iter().map(|p| p + lift).collect())));
                }
            }
            cur = self.t_unchecked(&cur);
        }
        Ok(out)
    }

    /// The box partition representing `term` in R̃/I ≅ R(U(r))_{k,n}.
    pub fn normal_form(&self, term: &RTildeTerm) -> Result<Partition> {
        let mut found = self.orbit_box_elements(term)?;
        assert_eq!(
            found.len(),
            1,
            "T-orbit of {term:?} must have one box element"
        );
        Ok(found.pop().unwrap().1)
    }

    /// Image of R̃ in R(U(r))_{k,n}, written on the Schubert basis via λ ↦ ω_{I(λ)}.
    pub fn reduce(&self, element: &RTildeElement) -> Result<CohClass> {
        let mut out = CohClass::zero(self.shape);
        for (t, c) in element.terms() {
            let lambda = self.normal_form(t)?;
            out.add_term(self.shape.subset_unchecked(lambda.parts()), c.clone());
        }
        Ok(out)
    }

    /// W(ω_I) = λ̄(I) × x^{codim ω_I}.
    pub fn witten_term(&self, subset: &Subset) -> Result<RTildeTerm> {
        Ok(RTildeTerm {
            rep: self.rep_of_any_subset(subset)?,
            exponent: self.shape.codim(subset)? % self.rn(),
        })
    }

    pub fn witten_map(&self, class: &CohClass) -> Result<RTildeElement> {
        let mut out = RTildeElement::zero();
        for (s, c) in class.terms() {
            out.add_term(self.witten_term(s)?, c.clone());
        }
        Ok(out)
    }

    /// Witten map of a quantum class evaluated at q = 1.
    pub fn witten_map_q(&self, class: &QClass) -> Result<RTildeElement> {
        self.witten_map(&class.at_q_one())
    }

    pub fn rtilde_product(&self, a: &RTildeElement, b: &RTildeElement) -> Result<RTildeElement> {
        let mut out = RTildeElement::zero();
        for (ta, ca) in a.terms() {
            self.check_term(ta)?;
            for (tb, cb) in b.terms() {
                self.check_term(tb)?;
                let exponent = (ta.exponent + tb.exponent) % self.rn();
                let scale = ca * cb;
                for (eta, c) in self.basis_product(&ta.rep, &tb.rep)?.terms() {
                    out.add_term(
                        RTildeTerm {
                            rep: eta.clone(),
                            exponent,
                        },
                        &scale * c,
                    );
                }
            }
        }
        Ok(out)
    }

    /// μ̄ · ν̄ in R(SU(r))_k.
    pub fn basis_product(&self, a: &SuRep, b: &SuRep) -> Result<Arc<FusionElement>> {
        self.check_rep(a)?;
        self.check_rep(b)?;
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if let Some(hit) = self.products.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let i = self.subset_of_rep(&key.0)?;
        let j = self.subset_of_rep(&key.1)?;
        let mut out = FusionElement::zero(self.rank(), self.level());
        for (m, d, c) in quantum::basis_product(self.shape, &i, &j).iter() {
            let mut term = self.witten_term(m)?;
            for _ in 0..(d % self.rank()) {
                term = self.t_unchecked(&term);
            }
            out.add_term(term.rep, c.clone());
        }
        let out = Arc::new(out);
        Ok(self
            .products
            .write()
            .unwrap()
            .entry(key)
            .or_insert(out)
            .clone())
    }

    pub fn product(&self, a: &FusionElement, b: &FusionElement) -> Result<FusionElement> {
        for e in [a, b] {
            if e.rank != self.rank() || e.level != self.level() {
                return Err(Error::ShapeMismatch(
                    self.rank(),
                    self.level(),
                    e.rank,
                    e.level,
                ));
            }
        }
        let mut out = FusionElement::zero(self.rank(), self.level());
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                let scale = cx * cy;
                for (eta, c) in self.basis_product(x, y)?.terms() {
                    out.add_term(eta.clone(), &scale * c);
                }
            }
        }
        Ok(out)
    }

    pub fn unit(&self) -> FusionElement {
        FusionElement::basis(self.rank(), self.level(), SuRep::trivial(self.rank()))
    }

    pub fn element(&self, rep: &SuRep) -> Result<FusionElement> {
        self.check_rep(rep)?;
        Ok(FusionElement::basis(self.rank(), self.level(), rep.clone()))
    }

    /// μ̄¹ · μ̄² ⋯ μ̄ˢ (the unit for an empty list).
    pub fn product_of(&self, reps: &[SuRep]) -> Result<FusionElement> {
        let mut acc = self.unit();
        for rep in reps {
            acc = self.product(&acc, &self.element(rep)?)?;
        }
        Ok(acc)
    }

    /// N₀^{(k)}(μ̄¹, …, μ̄ˢ): multiplicity of the trivial representation in
    /// the fusion product.
    pub fn fusion_coefficient(&self, reps: &[SuRep]) -> Result<BigInt> {
        Ok(self.product_of(reps)?.trivial_multiplicity())
    }

    /// h = Σ_ν ν̄ · ν̄*.
    pub fn handle(&self) -> Result<FusionElement> {
        let mut h = FusionElement::zero(self.rank(), self.level());
        for nu in &self.reps {
            for (eta, c) in self.basis_product(nu, &nu.dual())?.terms() {
                h.add_term(eta.clone(), c.clone());
            }
        }
        Ok(h)
    }

    /// h^g, memoized.
    pub fn handle_power(&self, g: usize) -> Result<FusionElement> {
        let mut powers = self.handle_powers.lock().unwrap();
        if powers.is_empty() {
            powers.push(self.unit());
        }
        if powers.len() <= g {
            let h = self.handle()?;
            while powers.len() <= g {
                let next = self.product(powers.last().unwrap(), &h)?;
                powers.push(next);
            }
        }
        Ok(powers[g].clone())
    }

    /// N_g^{(k)}(μ̄¹, …, μ̄ˢ) as the trivial multiplicity of μ̄¹ ⋯ μ̄ˢ · h^g.
    pub fn conformal_block_dim(&self, g: usize, reps: &[SuRep]) -> Result<BigInt> {
        let prod = self.product_of(reps)?;
        Ok(self
            .product(&prod, &self.handle_power(g)?)?
            .trivial_multiplicity())
    }

    /// N_g by repeated factorization, N_g(…) = Σ_ν N_{g−1}(…, ν̄, ν̄*),
    /// down to genus-zero fusion coefficients. Exponential in g.
    pub fn conformal_block_dim_by_factorization(&self, g: usize, reps: &[SuRep]) -> Result<BigInt> {
        if g == 0 {
            return self.fusion_coefficient(reps);
        }
        let mut total = BigInt::zero();
        let mut extended = reps.to_vec();
        for nu in &self.reps {
            extended.push(nu.clone());
            extended.push(nu.dual());
            total += self.conformal_block_dim_by_factorization(g - 1, &extended)?;
            extended.truncate(reps.len());
        }
        Ok(total)
    }
}
