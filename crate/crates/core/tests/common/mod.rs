//! Independent oracles. Nothing here calls into the library's algorithms;
//! only its data types are used for comparison at the call sites.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::PI;

// ---------------------------------------------------------------------------
// Schur polynomials by semistandard tableaux

pub type Poly = BTreeMap<Vec<u32>, i64>;

/// s_λ(x_1, …, x_m) by enumerating semistandard tableaux.
pub fn schur(lambda: &[usize], m: usize) -> Poly {
    let lambda: Vec<usize> = lambda.iter().copied().filter(|&p| p > 0).collect();
    let mut out = Poly::new();
    if lambda.len() > m {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut t: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    fill(&cells, 0, &mut t, m, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], idx: usize, t: &mut Vec<Vec<usize>>, m: usize, out: &mut Poly) {
    if idx == cells.len() {
        let mut e = vec![0u32; m];
        for row in t.iter() {
            for &x in row {
                e[x - 1] += 1;
            }
        }
        *out.entry(e).or_default() += 1;
        return;
    }
    let (i, j) = cells[idx];
    let lo_row = if j > 0 { t[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 1 };
    for x in lo_row.max(lo_col)..=m {
        t[i][j] = x;
        fill(cells, idx + 1, t, m, out);
    }
    t[i][j] = 0;
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly peeling
/// off the lexicographically leading monomial.
pub fn schur_expand(mut p: Poly, m: usize) -> BTreeMap<Vec<usize>, i64> {
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = p.iter().next_back() {
        let nu: Vec<usize> = lead
            .iter()
            .map(|&x| x as usize)
            .filter(|&x| x > 0)
            .collect();
        assert!(nu.windows(2).all(|w| w[0] >= w[1]), "not symmetric");
        for (e, d) in schur(&nu, m) {
            *p.entry(e).or_default() -= c * d;
        }
        p.retain(|_, c| *c != 0);
        out.insert(nu, c);
    }
    out
}

/// c^ν_{λμ} for all ν with at most `m` rows.
pub fn lr_oracle(lambda: &[usize], mu: &[usize], m: usize) -> BTreeMap<Vec<usize>, i64> {
    schur_expand(poly_mul(&schur(lambda, m), &schur(mu, m)), m)
}

// ---------------------------------------------------------------------------
// Quantum Pieri and Giambelli on partitions in an r × k box

pub type QExp = BTreeMap<(Vec<usize>, usize), i64>;

fn ranges(lo: &[usize], hi: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn go(
        lo: &[usize],
        hi: &[usize],
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = cur.len();
        if i == lo.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in lo[i]..=hi[i].min(left) {
            cur.push(v);
            go(lo, hi, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo.iter().zip(hi).all(|(a, b)| a <= b) {
        go(lo, hi, total, &mut Vec::new(), &mut out);
    }
    out
}

/// σ_p ⋆ σ_λ in QH*(Gr(r, r + k)), λ padded to r parts.
pub fn quantum_pieri_oracle(r: usize, k: usize, p: usize, lambda: &[usize]) -> QExp {
    let n = r + k;
    let mut out = QExp::new();
    if p > k {
        return out;
    }
    let size: usize = lambda.iter().sum();
    // classical horizontal strips
    let lo: Vec<usize> = lambda.to_vec();
    let hi: Vec<usize> = (0..r)
        .map(|i| if i == 0 { k } else { lambda[i - 1] })
        .collect();
    for nu in ranges(&lo, &hi, size + p) {
        *out.entry((nu, 0)).or_default() += 1;
    }
    // one q term
    if lambda[r - 1] >= 1 && size + p >= n {
        let lo: Vec<usize> = (0..r)
            .map(|i| {
                if i + 1 < r {
                    lambda[i + 1].saturating_sub(1)
                } else {
                    0
                }
            })
            .collect();
        let hi: Vec<usize> = lambda.iter().map(|&x| x - 1).collect();
        for nu in ranges(&lo, &hi, size + p - n) {
            *out.entry((nu, 1)).or_default() += 1;
        }
    }
    out
}

fn apply_special(r: usize, k: usize, p: usize, x: &QExp) -> QExp {
    let mut out = QExp::new();
    for ((lambda, d), c) in x {
        for ((nu, e), m) in quantum_pieri_oracle(r, k, p, lambda) {
            *out.entry((nu, d + e)).or_default() += c * m;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// σ_λ ⋆ σ_μ via the Giambelli determinant of λ and iterated quantum Pieri.
pub fn quantum_product_oracle(r: usize, k: usize, lambda: &[usize], mu: &[usize]) -> QExp {
    let mut out = QExp::new();
    for (perm, sign) in permutations(r) {
        let mut x = QExp::new();
        x.insert((mu.to_vec(), 0), sign);
        let mut vanished = false;
        for i in 0..r {
            let idx = lambda[i] as i64 + perm[i] as i64 - i as i64;
            if idx < 0 || idx > k as i64 {
                vanished = true;
                break;
            }
            if idx > 0 {
                x = apply_special(r, k, idx as usize, &x);
            }
        }
        if vanished {
            continue;
        }
        for (key, c) in x {
            *out.entry(key).or_default() += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Subset of [r + k] of a partition in the r × k box.
pub fn subset_of(r: usize, k: usize, lambda: &[usize]) -> Vec<usize> {
    (0..r).map(|a| k + a + 1 - lambda[a]).collect()
}

pub fn partition_of(k: usize, subset: &[usize]) -> Vec<usize> {
    subset
        .iter()
        .enumerate()
        .map(|(a, &i)| k + a + 1 - i)
        .collect()
}

/// All partitions in the r × k box, padded to r parts.
pub fn box_partitions(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            go(r, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, k, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(lambda: &[usize], len: usize) -> Vec<usize> {
    (0..len)
        .map(|j| lambda.iter().filter(|&&p| p > j).count())
        .collect()
}

// ---------------------------------------------------------------------------
// Projective space: QH*(P^{n-1}) = Z[h, q] / (h^n − q)

/// h^a ⋆ h^b as (exponent of h, exponent of q).
pub fn projective_product(n: usize, a: usize, b: usize) -> (usize, usize) {
    ((a + b) % n, (a + b) / n)
}

// ---------------------------------------------------------------------------
// PGL_2(F_p): degree-one self-maps of P¹ through three point conditions

/// Number of elements of PGL_2(F_p) taking 0, 1, ∞ to the distinct points
/// a, b, c of P¹(F_p) (∞ encoded as p).
pub fn pgl2_three_point_count(p: u64, a: u64, b: u64, c: u64) -> usize {
    let apply = |m: [u64; 4], x: u64| -> u64 {
        let [a, b, c, d] = m;
        let (num, den) = if x == p {
            (a, c)
        } else {
            ((a * x + b) % p, (c * x + d) % p)
        };
        if den == 0 {
            p
        } else {
            num * pow_mod(den, p - 2, p) % p
        }
    };
    let mut count = 0;
    for a0 in 0..p {
        for b0 in 0..p {
            for c0 in 0..p {
                for d0 in 0..p {
                    let det = (a0 * d0 + p * p - b0 * c0 % p) % p;
                    if det == 0 {
                        continue;
                    }
                    // one representative per scalar class: first nonzero entry is 1
                    let first = [a0, b0, c0, d0].into_iter().find(|&x| x != 0).unwrap();
                    if first != 1 {
                        continue;
                    }
                    let m = [a0, b0, c0, d0];
                    if apply(m, 0) == a && apply(m, 1) == b && apply(m, p) == c {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// SU(2) level-k Clebsch–Gordan truncation, weights as Dynkin labels

pub fn su2_fusion(k: usize, a: usize, b: usize) -> Vec<usize> {
    let hi = (a + b).min(2 * k - a - b);
    let lo = a.abs_diff(b);
    if lo > hi {
        return vec![];
    }
    (lo..=hi).step_by(2).collect()
}

// ---------------------------------------------------------------------------
// Kac–Peterson modular S-matrix for SU(r) at level k, numerically

#[derive(Clone, Copy, Debug)]
struct C(f64, f64);

impl C {
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn scale(self, s: f64) -> C {
        C(self.0 * s, self.1 * s)
    }
    fn div(self, o: C) -> C {
        let d = o.0 * o.0 + o.1 * o.1;
        C(
            (self.0 * o.0 + self.1 * o.1) / d,
            (self.1 * o.0 - self.0 * o.1) / d,
        )
    }
    fn norm2(self) -> f64 {
        self.0 * self.0 + self.1 * self.1
    }
}

/// Level-≤k SU(r) weights as r-part partitions with last part 0.
pub fn su_weights(r: usize, k: usize) -> Vec<Vec<usize>> {
    box_partitions(r, k)
        .into_iter()
        .filter(|l| l[r - 1] == 0)
        .collect()
}

pub struct SMatrix {
    pub weights: Vec<Vec<usize>>,
    s: Vec<Vec<C>>,
}

impl SMatrix {
    pub fn new(r: usize, k: usize) -> Self {
        let weights = su_weights(r, k);
        let h = (k + r) as f64;
        let shifted: Vec<Vec<f64>> = weights
            .iter()
            .map(|l| {
                let v: Vec<f64> = (0..r).map(|a| (l[a] + r - a) as f64).collect();
                let mean = v.iter().sum::<f64>() / r as f64;
                v.into_iter().map(|x| x - mean).collect()
            })
            .collect();
        let perms = permutations(r);
        let mut s: Vec<Vec<C>> = shifted
            .iter()
            .map(|a| {
                shifted
                    .iter()
                    .map(|b| {
                        perms.iter().fold(C(0.0, 0.0), |acc, (w, sign)| {
                            let dot: f64 = (0..r).map(|i| a[w[i]] * b[i]).sum();
                            let theta = -2.0 * PI * dot / h;
                            acc.add(C(theta.cos(), theta.sin()).scale(*sign as f64))
                        })
                    })
                    .collect()
            })
            .collect();
        // unitary normalization with S_00 > 0
        let row0: f64 = s[0].iter().map(|z| z.norm2()).sum::<f64>().sqrt();
        let phase = s[0][0].scale(1.0 / s[0][0].norm2().sqrt());
        let fix = C(1.0, 0.0).div(phase).scale(1.0 / row0);
        for row in s.iter_mut() {
            for z in row.iter_mut() {
                *z = z.mul(fix);
            }
        }
        SMatrix { weights, s }
    }

    fn index(&self, w: &[usize]) -> usize {
        self.weights
            .iter()
            .position(|x| x == w)
            .expect("weight not at this level")
    }

    /// Genus-0 trivial multiplicity of a list of weights.
    pub fn fusion(&self, weights: &[Vec<usize>]) -> i64 {
        let idx: Vec<usize> = weights.iter().map(|w| self.index(w)).collect();
        let mut total = C(0.0, 0.0);
        for sigma in 0..self.weights.len() {
            let mut term = C(1.0, 0.0);
            for &i in &idx {
                term = term.mul(self.s[i][sigma]);
            }
            let s0 = self.s[0][sigma];
            let mut denom = C(1.0, 0.0);
            for _ in 0..(weights.len() as i64 - 2).max(0) {
                denom = denom.mul(s0);
            }
            if weights.len() < 2 {
                for _ in 0..(2 - weights.len()) {
                    term = term.mul(s0);
                }
            }
            total = total.add(term.div(denom));
        }
        assert!(total.1.abs() < 1e-6, "non-real fusion number {total:?}");
        let rounded = total.0.round();
        assert!(
            (total.0 - rounded).abs() < 1e-6,
            "non-integral fusion number {total:?}"
        );
        rounded as i64
    }

    /// Σ_λ S_{0λ}^{2−2g}.
    pub fn verlinde(&self, g: u32) -> f64 {
        self.s[0]
            .iter()
            .map(|z| z.norm2().sqrt().powi(2 - 2 * g as i32))
            .sum()
    }
}

pub fn round_exact(x: f64) -> u64 {
    let r = x.round();
    assert!(
        (x - r).abs() < 1e-6 * r.max(1.0),
        "{x} is not close to an integer"
    );
    r as u64
}
