//! Stacked partial permutations parametrizing orbits on
//! `Fl(V+) × Fl(V−) × Gr_r(V)`, their graphs, dimensions and closure order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("rank r = {r} must satisfy 1 <= r <= p + q = {n}")]
    RankOutOfRange { r: usize, n: usize },
    #[error("index {index} out of range 1..={max} on the {side} side")]
    IndexOutOfRange { side: char, index: usize, max: usize },
    #[error("index {index} on the {side} side is used twice")]
    RepeatedIndex { side: char, index: usize },
    #[error("column {0} is zero, so the stacked matrix is rank deficient")]
    ZeroColumn(usize),
    #[error("matrix is not a 0/1 partial permutation: {0}")]
    NotPartialPermutation(String),
    #[error("orbits live in different varieties: {0:?} vs {1:?}")]
    Mismatch((usize, usize, usize), (usize, usize, usize)),
}

/// A column of ω: an edge when both indices are present, a marked point otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitColumn {
    pub plus: Option<usize>,
    pub minus: Option<usize>,
}

impl OrbitColumn {
    pub fn edge(i: usize, j: usize) -> Self {
        OrbitColumn { plus: Some(i), minus: Some(j) }
    }

    pub fn marked_plus(i: usize) -> Self {
        OrbitColumn { plus: Some(i), minus: None }
    }

    pub fn marked_minus(j: usize) -> Self {
        OrbitColumn { plus: None, minus: Some(j) }
    }

    fn key(&self) -> (u8, usize, usize) {
        match (self.plus, self.minus) {
            (Some(i), Some(j)) => (0, i, j),
            (Some(i), None) => (1, i, 0),
            (None, Some(j)) => (2, j, 0),
            (None, None) => (3, 0, 0),
        }
    }
}

impl Ord for OrbitColumn {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for OrbitColumn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical representative ω = (τ₁;τ₂) of an `S_r` class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StackedPartialPermutation {
    p: usize,
    q: usize,
    columns: Vec<OrbitColumn>,
}

impl StackedPartialPermutation {
    pub fn new(p: usize, q: usize, mut columns: Vec<OrbitColumn>) -> Result<Self, OrbitError> {
        let r = columns.len();
        if r == 0 || r > p + q {
            return Err(OrbitError::RankOutOfRange { r, n: p + q });
        }
        let mut used_plus = BTreeSet::new();
        let mut used_minus = BTreeSet::new();
        for (c, col) in columns.iter().enumerate() {
            if col.plus.is_none() && col.minus.is_none() {
                return Err(OrbitError::ZeroColumn(c));
            }
            for (side, idx, max, used) in [('+', col.plus, p, &mut used_plus), ('-', col.minus, q, &mut used_minus)] {
                if let Some(index) = idx {
                    if index == 0 || index > max {
                        return Err(OrbitError::IndexOutOfRange { side, index, max });
                    }
                    if !used.insert(index) {
                        return Err(OrbitError::RepeatedIndex { side, index });
                    }
                }
            }
        }
        columns.sort();
        Ok(StackedPartialPermutation { p, q, columns })
    }

    /// Canonical form of the raw pair of `p × r` and `q × r` 0/1 matrices.
    pub fn canonicalize(tau1: &[Vec<u8>], tau2: &[Vec<u8>]) -> Result<Self, OrbitError> {
        let (p, q) = (tau1.len(), tau2.len());
        let r = tau1.first().or(tau2.first()).map_or(0, |row| row.len());
        if tau1.iter().chain(tau2).any(|row| row.len() != r) {
            return Err(OrbitError::NotPartialPermutation("ragged rows".into()));
        }
        let column_of = |m: &[Vec<u8>], c: usize| -> Result<Option<usize>, OrbitError> {
            let mut hit = None;
            for (i, row) in m.iter().enumerate() {
                match row[c] {
                    0 => {}
                    1 if hit.is_none() => hit = Some(i + 1),
                    1 => return Err(OrbitError::NotPartialPermutation(format!("column {c} has two 1s"))),
                    x => return Err(OrbitError::NotPartialPermutation(format!("entry {x}"))),
                }
            }
            Ok(hit)
        };
        let mut columns = Vec::with_capacity(r);
        for c in 0..r {
            columns.push(OrbitColumn { plus: column_of(tau1, c)?, minus: column_of(tau2, c)? });
        }
        StackedPartialPermutation::new(p, q, columns)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.columns.len()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.p, self.q, self.r())
    }

    pub fn columns(&self) -> &[OrbitColumn] {
        &self.columns
    }

    /// `(τ₁, τ₂)` with columns in canonical order.
    pub fn to_matrices(&self) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
        let r = self.r();
        let mut t1 = vec![vec![0u8; r]; self.p];
        let mut t2 = vec![vec![0u8; r]; self.q];
        for (c, col) in self.columns.iter().enumerate() {
            if let Some(i) = col.plus {
                t1[i - 1][c] = 1;
            }
            if let Some(j) = col.minus {
                t2[j - 1][c] = 1;
            }
        }
        (t1, t2)
    }

    pub fn graph(&self) -> OrbitGraph {
        let mut g = OrbitGraph::default();
        for col in &self.columns {
            match (col.plus, col.minus) {
                (Some(i), Some(j)) => g.edges.push((i, j)),
                (Some(i), None) => g.marked_plus.push(i),
                (None, Some(j)) => g.marked_minus.push(j),
                (None, None) => unreachable!("zero columns are rejected"),
            }
        }
        g.edges.sort_unstable();
        g.marked_plus.sort_unstable();
        g.marked_minus.sort_unstable();
        let plus: BTreeSet<usize> = self.columns.iter().filter_map(|c| c.plus).collect();
        let minus: BTreeSet<usize> = self.columns.iter().filter_map(|c| c.minus).collect();
        g.free_plus = (1..=self.p).filter(|i| !plus.contains(i)).collect();
        g.free_minus = (1..=self.q).filter(|j| !minus.contains(j)).collect();
        g
    }

    /// `r[i][j]` counts marked points and edges supported on `{1..i}⁺ ∪ {1..j}⁻`.
    pub fn rank_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0usize; self.q + 1]; self.p + 1];
        for col in &self.columns {
            let i0 = col.plus.unwrap_or(0);
            let j0 = col.minus.unwrap_or(0);
            for (i, row) in m.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    if i >= i0 && j >= j0 {
                        *x += 1;
                    }
                }
            }
        }
        m
    }

    pub fn indec_decomposition(&self) -> Vec<Indecomposable> {
        let g = self.graph();
        let mut out: Vec<Indecomposable> = Vec::new();
        out.extend(g.marked_plus.iter().map(|&i| Indecomposable::Plus(i)));
        out.extend(g.free_plus.iter().map(|&i| Indecomposable::PlusFree(i)));
        out.extend(g.marked_minus.iter().map(|&j| Indecomposable::Minus(j)));
        out.extend(g.free_minus.iter().map(|&j| Indecomposable::MinusFree(j)));
        out.extend(g.edges.iter().map(|&(i, j)| Indecomposable::Edge(i, j)));
        out.sort();
        out
    }

    /// Combinatorial orbit dimension.
    pub fn dim_orbit(&self) -> usize {
        let rk = self.rank_matrix();
        let hom: usize = self
            .indec_decomposition()
            .iter()
            .map(|ind| match *ind {
                Indecomposable::Plus(i) => rk[i][0],
                Indecomposable::PlusFree(i) => i,
                Indecomposable::Minus(j) => rk[0][j],
                Indecomposable::MinusFree(j) => j,
                Indecomposable::Edge(i, j) => rk[i][j],
            })
            .sum();
        self.p * self.p + self.q * self.q - hom
    }
}

impl fmt::Display for StackedPartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| {
                let s = |x: Option<usize>| x.map_or("_".to_string(), |v| v.to_string());
                format!("{}:{}", s(c.plus), s(c.minus))
            })
            .collect();
        write!(f, "({},{}) {}", self.p, self.q, cols.join(","))
    }
}

/// The graph Γ(ω) split into its vertex classes.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OrbitGraph {
    pub edges: Vec<(usize, usize)>,
    pub marked_plus: Vec<usize>,
    pub marked_minus: Vec<usize>,
    pub free_plus: Vec<usize>,
    pub free_minus: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Indecomposable {
    /// `I⁺_i`
    Plus(usize),
    /// `I′⁺_i`
    PlusFree(usize),
    /// `I⁻_j`
    Minus(usize),
    /// `I′⁻_j`
    MinusFree(usize),
    /// `I_{i,j}`
    Edge(usize, usize),
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indecomposable::Plus(i) => write!(f, "I+_{i}"),
            Indecomposable::PlusFree(i) => write!(f, "I'+_{i}"),
            Indecomposable::Minus(j) => write!(f, "I-_{j}"),
            Indecomposable::MinusFree(j) => write!(f, "I'-_{j}"),
            Indecomposable::Edge(i, j) => write!(f, "I_{{{i},{j}}}"),
        }
    }
}

/// All orbits for `(p, q, r)` in canonical order.
pub fn enumerate_orbits(p: usize, q: usize, r: usize) -> Result<Vec<StackedPartialPermutation>, OrbitError> {
    if r == 0 || r > p + q {
        return Err(OrbitError::RankOutOfRange { r, n: p + q });
    }
    fn plus_side(
        i: usize,
        p: usize,
        q: usize,
        r: usize,
        cols: &mut Vec<OrbitColumn>,
        used_minus: &mut Vec<bool>,
        out: &mut Vec<StackedPartialPermutation>,
    ) {
        if cols.len() > r {
            return;
        }
        if i > p {
            minus_side(1, q, r, cols, used_minus, out, p);
            return;
        }
        plus_side(i + 1, p, q, r, cols, used_minus, out);
        cols.push(OrbitColumn::marked_plus(i));
        plus_side(i + 1, p, q, r, cols, used_minus, out);
        cols.pop();
        for j in 1..=q {
            if !used_minus[j] {
                used_minus[j] = true;
                cols.push(OrbitColumn::edge(i, j));
                plus_side(i + 1, p, q, r, cols, used_minus, out);
                cols.pop();
                used_minus[j] = false;
            }
        }
    }
    fn minus_side(
        j: usize,
        q: usize,
        r: usize,
        cols: &mut Vec<OrbitColumn>,
        used_minus: &mut Vec<bool>,
        out: &mut Vec<StackedPartialPermutation>,
        p: usize,
    ) {
        if cols.len() > r {
            return;
        }
        if j > q {
            if cols.len() == r {
                out.push(StackedPartialPermutation::new(p, q, cols.clone()).expect("valid by construction"));
            }
            return;
        }
        minus_side(j + 1, q, r, cols, used_minus, out, p);
        if !used_minus[j] {
            cols.push(OrbitColumn::marked_minus(j));
            minus_side(j + 1, q, r, cols, used_minus, out, p);
            cols.pop();
        }
    }
    let mut out = Vec::new();
    plus_side(1, p, q, r, &mut Vec::new(), &mut vec![false; q + 1], &mut out);
    out.sort();
    Ok(out)
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of orbits, counted by column types `(edges, marked+, marked−)`.
pub fn orbit_count(p: usize, q: usize, r: usize) -> u128 {
    let mut total = 0;
    for k in 0..=r {
        for s in 0..=r - k {
            let t = r - k - s;
            total += binom(p, k + s) * binom(k + s, k) * binom(q, k + t) * binom(k + t, k) * factorial(k);
        }
    }
    total
}

/// Number of `n × r` partial permutation matrices.
pub fn count_partial_permutations(n: usize, r: usize) -> u128 {
    (0..=n.min(r)).map(|k| binom(n, k) * binom(r, k) * factorial(k)).sum()
}

/// Dimension of `Fl(V+) × Fl(V−) × Gr_r(V)`.
pub fn dim_variety(p: usize, q: usize, r: usize) -> usize {
    p * p.saturating_sub(1) / 2 + q * q.saturating_sub(1) / 2 + r * (p + q - r)
}

/// `ω ≤ ω′` in the closure order: all rank numbers of ω dominate those of ω′.
pub fn closure_leq(a: &StackedPartialPermutation, b: &StackedPartialPermutation) -> Result<bool, OrbitError> {
    if a.dims() != b.dims() {
        return Err(OrbitError::Mismatch(a.dims(), b.dims()));
    }
    let (ra, rb) = (a.rank_matrix(), b.rank_matrix());
    Ok(ra.iter().flatten().zip(rb.iter().flatten()).all(|(x, y)| x >= y))
}

/// Covering pairs `(lower, upper)` of the closure order, as indices into `orbits`.
pub fn hasse_covers(orbits: &[StackedPartialPermutation]) -> Result<Vec<(usize, usize)>, OrbitError> {
    let n = orbits.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = closure_leq(&orbits[i], &orbits[j])?;
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] && !(0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]) {
                covers.push((i, j));
            }
        }
    }
    Ok(covers)
}

/// All `n × n` partial permutations, as `column → row` maps.
pub fn partial_permutations(n: usize) -> Vec<Vec<Option<usize>>> {
    fn go(c: usize, n: usize, used: &mut Vec<bool>, cur: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if c == n {
            out.push(cur.clone());
            return;
        }
        cur.push(None);
        go(c + 1, n, used, cur, out);
        cur.pop();
        for r in 0..n {
            if !used[r] {
                used[r] = true;
                cur.push(Some(r + 1));
                go(c + 1, n, used, cur, out);
                cur.pop();
                used[r] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Fills the empty columns of `tau` with the unused rows in decreasing order.
/// Returns the permutation `w` and the set of filled values.
pub fn complete_to_descent(tau: &[Option<usize>]) -> (Vec<usize>, Vec<usize>) {
    let n = tau.len();
    let used: BTreeSet<usize> = tau.iter().flatten().copied().collect();
    let mut free: Vec<usize> = (1..=n).filter(|x| !used.contains(x)).collect();
    free.reverse();
    let mut it = free.iter();
    let w: Vec<usize> =
        tau.iter().map(|x| x.unwrap_or_else(|| *it.next().expect("as many free rows as columns"))).collect();
    free.sort_unstable();
    (w, free)
}

/// `Σ_{w ∈ S_n}` of the number of decreasing subsequences of `w`, the empty one included.
pub fn count_permutation_descents(n: usize) -> u128 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for w in perms(n - 1) {
            for pos in 0..=w.len() {
                let mut v = w.clone();
                v.insert(pos, n);
                out.push(v);
            }
        }
        out
    }
    perms(n)
        .iter()
        .map(|w| {
            // ending[i] counts nonempty decreasing subsequences ending at i
            let mut ending = vec![0u128; w.len()];
            for i in 0..w.len() {
                ending[i] = 1 + (0..i).filter(|&j| w[j] > w[i]).map(|j| ending[j]).sum::<u128>();
            }
            1 + ending.iter().sum::<u128>()
        })
        .sum()
}
