//! Littlewood–Richardson coefficients by skew-tableau enumeration.
//!
//! `expand(λ, μ, bound)` lists every ν with c^ν_{λμ} ≠ 0 inside `bound`,
//! counting LR fillings of ν/λ with content μ: semistandard, and the
//! reverse reading word (rows top to bottom, each row right to left) is a
//! lattice word. Labels are placed one value at a time as horizontal
//! strips, so only the lattice condition needs an explicit check.
//!
//! Expansions are memoized in a process-wide synchronized cache.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

/// Region that output shapes must fit in. `cols: None` means unbounded width.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bound {
    pub rows: usize,
    pub cols: Option<usize>,
}

impl Bound {
    pub fn rows(rows: usize) -> Self {
        Bound { rows, cols: None }
    }

    pub fn rect(rows: usize, cols: usize) -> Self {
        Bound {
            rows,
            cols: Some(cols),
        }
    }
}

pub type Expansion = Arc<Vec<(Vec<usize>, u64)>>;

type Key = (Vec<usize>, Vec<usize>, Bound);

static CACHE: LazyLock<RwLock<HashMap<Key, Expansion>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

pub(crate) fn trim(parts: &[usize]) -> Vec<usize> {
    let len = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
    parts[..len].to_vec()
}

/// Expansion of s_λ · s_μ restricted to shapes inside `bound`, sorted by shape.
/// Shapes are returned without trailing zeros.
pub fn expand(lambda: &[usize], mu: &[usize], bound: Bound) -> Expansion {
    let (mut a, mut b) = (trim(lambda), trim(mu));
    // enumerate over the smaller content
    if (b.iter().sum::<usize>(), &b) > (a.iter().sum::<usize>(), &a) {
        std::mem::swap(&mut a, &mut b);
    }
    let key = (a, b, bound);
    if let Some(hit) = CACHE.read().unwrap().get(&key) {
        return hit.clone();
    }
    let computed = Arc::new(enumerate(&key.0, &key.1, bound));
    CACHE
        .write()
        .unwrap()
        .entry(key)
        .or_insert(computed)
        .clone()
}

/// Single coefficient c^ν_{λμ} (no bound beyond the number of rows of ν).
pub fn coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let nu = trim(nu);
    let rows = nu.len().max(1);
    expand(lambda, mu, Bound::rows(rows))
        .iter()
        .find(|(shape, _)| *shape == nu)
        .map_or(0, |(_, c)| *c)
}

struct Search<'a> {
    content: &'a [usize],
    bound: Bound,
    shape: Vec<usize>,
    // placed[label][row]
    placed: Vec<Vec<usize>>,
    out: BTreeMap<Vec<usize>, u64>,
}

fn enumerate(lambda: &[usize], mu: &[usize], bound: Bound) -> Vec<(Vec<usize>, u64)> {
    if lambda.len() > bound.rows || mu.len() > bound.rows {
        return Vec::new();
    }
    if let Some(cols) = bound.cols {
        if lambda.first().copied().unwrap_or(0) > cols || mu.first().copied().unwrap_or(0) > cols {
            return Vec::new();
        }
    }
    let mut shape = lambda.to_vec();
    shape.resize(bound.rows, 0);
    let mut search = Search {
        content: mu,
        bound,
        shape,
        placed: vec![vec![0; bound.rows]; mu.len()],
        out: BTreeMap::new(),
    };
    search.place_label(0);
    search.out.into_iter().collect()
}

impl Search<'_> {
    fn place_label(&mut self, label: usize) {
        if label == self.content.len() {
            *self.out.entry(trim(&self.shape)).or_insert(0) += 1;
            return;
        }
        let old = self.shape.clone();
        self.place_row(label, 0, self.content[label], 0, &old);
    }

    /// Distribute `remaining` cells of `label` over rows `row..`, given the
    /// running count `so_far` of this label in rows above `row`.
    fn place_row(
        &mut self,
        label: usize,
        row: usize,
        remaining: usize,
        so_far: usize,
        old: &[usize],
    ) {
        if remaining == 0 {
            self.place_label(label + 1);
            return;
        }
        if row == self.bound.rows {
            return;
        }
        let mut cap = if row == 0 {
            usize::MAX
        } else {
            old[row - 1] - old[row]
        };
        if let Some(cols) = self.bound.cols {
            cap = cap.min(cols - old[row]);
        }
        if label > 0 {
            let prev_above: usize = self.placed[label - 1][..row].iter().sum();
            cap = cap.min(prev_above.saturating_sub(so_far));
        }
        cap = cap.min(remaining);
        for take in (0..=cap).rev() {
            self.shape[row] = old[row] + take;
            self.placed[label][row] = take;
            self.place_row(label, row + 1, remaining - take, so_far + take, old);
        }
        self.shape[row] = old[row];
        self.placed[label][row] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_map(e: &Expansion) -> BTreeMap<Vec<usize>, u64> {
        e.iter().cloned().collect()
    }

    #[test]
    fn box_squares() {
        let e = expand(&[1], &[1], Bound::rect(2, 2));
        assert_eq!(as_map(&e), BTreeMap::from([(vec![1, 1], 1), (vec![2], 1)]));
    }

    #[test]
    fn s21_squared_has_multiplicity_two() {
        assert_eq!(coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(coefficient(&[2, 1], &[2, 1], &[4, 2]), 1);
        assert_eq!(coefficient(&[2, 1], &[2, 1], &[3, 3]), 1);
        assert_eq!(coefficient(&[2, 1], &[2, 1], &[5, 1]), 0);
    }

    #[test]
    fn row_bound_drops_long_columns() {
        let e = expand(&[2], &[1, 1], Bound::rows(2));
        assert_eq!(as_map(&e), BTreeMap::from([(vec![3, 1], 1)]));
    }

    #[test]
    fn empty_factor_is_unit() {
        let e = expand(&[], &[3, 1], Bound::rows(3));
        assert_eq!(as_map(&e), BTreeMap::from([(vec![3, 1], 1)]));
    }

    #[test]
    fn commutes() {
        let a = expand(&[2, 1], &[1, 1], Bound::rows(4));
        let b = expand(&[1, 1], &[2, 1], Bound::rows(4));
        assert_eq!(a, b);
    }
}
