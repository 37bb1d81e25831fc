//! Partitions, standard tableaux, row insertion and signed Young diagrams.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("label {0} is already present in the tableau")]
    DuplicateEntry(i64),
    #[error("tableaux share the entries {0:?}")]
    OverlappingEntries(Vec<i64>),
    #[error("entries are not exactly 1..{0}")]
    NonContiguous(usize),
    #[error("not a standard tableau: {0}")]
    NotStandard(String),
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("partial bijection is malformed: {0}")]
    BadBijection(String),
    #[error("column counts admit no signed diagram: {0}")]
    InconsistentCounts(String),
}

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, YoungError> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&x| x > 0);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(YoungError::NotPartition(parts))
        }
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&x| x >= c).count()).collect())
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut s, mut t) = (0, 0);
        for i in 0..n {
            s += self.part(i);
            t += other.part(i);
            if s < t {
                return false;
            }
        }
        s == t
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = YoungError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A finite sequence of nonnegative parts; zeros are meaningful.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm_sq(&self) -> usize {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Nonzero parts sorted decreasingly.
    pub fn normalized(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// All compositions of `n` into positive parts.
    pub fn all_positive(n: usize) -> Vec<Composition> {
        fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for k in 1..=rest {
                cur.push(k);
                go(rest - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Rows of distinct integer labels increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct Tableau {
    rows: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, YoungError> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// A single column holding `labels` in increasing order.
    pub fn column(labels: &[i64]) -> Self {
        let mut v = labels.to_vec();
        v.sort_unstable();
        Tableau { rows: v.into_iter().map(|x| vec![x]).collect() }
    }

    fn validate(&self) -> Result<(), YoungError> {
        let mut seen = BTreeSet::new();
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(YoungError::NotStandard(format!("row {i} is empty")));
            }
            if i > 0 && row.len() > self.rows[i - 1].len() {
                return Err(YoungError::NotStandard(format!("row {i} is longer than row {}", i - 1)));
            }
            for (j, &x) in row.iter().enumerate() {
                if !seen.insert(x) {
                    return Err(YoungError::DuplicateEntry(x));
                }
                if j > 0 && row[j - 1] >= x {
                    return Err(YoungError::NotStandard(format!("row {i} not increasing")));
                }
                if i > 0 && self.rows[i - 1][j] >= x {
                    return Err(YoungError::NotStandard(format!("column {j} not increasing")));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entries(&self) -> BTreeSet<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn contains(&self, a: i64) -> bool {
        self.rows.iter().any(|r| r.binary_search(&a).is_ok())
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<i64> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, |r| r.len());
        let rows = (0..width).map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()).collect();
        Tableau { rows }
    }

    /// Inserts `a` in place and returns the row that gained a box.
    pub(crate) fn insert_mut(&mut self, a: i64) -> usize {
        let mut x = a;
        for (i, row) in self.rows.iter_mut().enumerate() {
            let pos = row.partition_point(|&y| y < x);
            if pos == row.len() {
                row.push(x);
                return i;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }

    /// Removes the last box of `row`, which must be a corner, and returns its label.
    pub fn remove_corner(&mut self, row: usize) -> Result<i64, YoungError> {
        let is_corner = row < self.rows.len() && self.rows.get(row + 1).is_none_or(|r| r.len() < self.rows[row].len());
        if !is_corner {
            return Err(YoungError::NotStandard(format!("row {row} has no removable corner")));
        }
        let x = self.rows[row].pop().expect("corner row is nonempty");
        if self.rows[row].is_empty() {
            self.rows.pop();
        }
        Ok(x)
    }

    /// Removes the last box of `row` (which must be a corner) and
    /// reverse-bumps up to the first row; returns the expelled label.
    pub fn reverse_bump(&mut self, row: usize) -> Result<i64, YoungError> {
        let mut x = self.remove_corner(row)?;
        for i in (0..row).rev() {
            let r = &mut self.rows[i];
            let pos = r.partition_point(|&y| y < x) - 1;
            std::mem::swap(&mut r[pos], &mut x);
        }
        Ok(x)
    }
}

impl TryFrom<Vec<Vec<i64>>> for Tableau {
    type Error = YoungError;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self, Self::Error> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<i64>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

/// All standard fillings of `shape` by `1..=|shape|`.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(rows: &mut Vec<Vec<i64>>, lens: &[usize], next: i64, n: i64, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..lens.len() {
            let len = rows[i].len();
            let fits = len < lens[i] && (i == 0 || rows[i - 1].len() > len);
            if fits {
                rows[i].push(next);
                go(rows, lens, next + 1, n, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(&mut rows, shape.parts(), 1, shape.size() as i64, &mut out);
    out
}

/// Partitions `inner` with `inner ⊂· outer` (a column strip removed).
pub fn column_strip_inners(outer: &Partition) -> Vec<Partition> {
    let mut out = vec![Vec::new()];
    for &part in outer.parts() {
        let mut next = Vec::new();
        for cur in &out {
            for x in [part, part - 1] {
                let prev = cur.last().copied().unwrap_or(usize::MAX);
                if x <= prev {
                    let mut v: Vec<usize> = cur.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        out = next;
    }
    let mut res: Vec<Partition> = out.into_iter().map(Partition::from_unsorted).collect();
    res.sort();
    res.dedup();
    res
}

/// Row insertion: `a` bumps the smallest entry of the row exceeding it.
pub fn row_insert(t: &Tableau, a: i64) -> Result<Tableau, YoungError> {
    if t.contains(a) {
        return Err(YoungError::DuplicateEntry(a));
    }
    let mut out = t.clone();
    out.insert_mut(a);
    Ok(out)
}

/// A bijection from a sorted domain onto distinct values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialBijection {
    domain: Vec<i64>,
    values: Vec<i64>,
}

impl PartialBijection {
    /// Pairs are sorted by domain label.
    pub fn new(mut pairs: Vec<(i64, i64)>) -> Result<Self, YoungError> {
        pairs.sort_unstable();
        let domain: Vec<i64> = pairs.iter().map(|p| p.0).collect();
        let values: Vec<i64> = pairs.iter().map(|p| p.1).collect();
        if domain.windows(2).any(|w| w[0] == w[1]) {
            return Err(YoungError::BadBijection("repeated domain label".into()));
        }
        let distinct: BTreeSet<_> = values.iter().collect();
        if distinct.len() != values.len() {
            return Err(YoungError::BadBijection("repeated value".into()));
        }
        Ok(PartialBijection { domain, values })
    }

    /// The permutation of 1..n given in one-line notation.
    pub fn from_one_line(w: &[i64]) -> Result<Self, YoungError> {
        PartialBijection::new(w.iter().enumerate().map(|(i, &v)| (i as i64 + 1, v)).collect())
    }

    pub fn domain(&self) -> &[i64] {
        &self.domain
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn inverse(&self) -> PartialBijection {
        let pairs = self.domain.iter().zip(&self.values).map(|(&d, &v)| (v, d)).collect();
        PartialBijection::new(pairs).expect("inverse of a bijection")
    }
}

/// Insertion and recording tableaux.
pub fn rs(sigma: &PartialBijection) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for (&d, &v) in sigma.domain.iter().zip(&sigma.values) {
        let row = p.insert_mut(v);
        if row == q.rows.len() {
            q.rows.push(vec![d]);
        } else {
            q.rows[row].push(d);
        }
    }
    (p, q)
}

/// Insertion tableau of a word.
pub fn insertion_tableau(word: &[i64]) -> Tableau {
    let mut p = Tableau::empty();
    for &x in word {
        p.insert_mut(x);
    }
    p
}

/// Plactic product: row-insert the reading word of `u` into `t`.
pub fn plactic_product(t: &Tableau, u: &Tableau) -> Result<Tableau, YoungError> {
    let common: Vec<i64> = t.entries().intersection(&u.entries()).copied().collect();
    if !common.is_empty() {
        return Err(YoungError::OverlappingEntries(common));
    }
    let mut out = t.clone();
    for x in u.reading_word() {
        out.insert_mut(x);
    }
    Ok(out)
}

/// Shape-preserving anti-automorphism: reverse and negate the reading word.
pub(crate) fn star(t: &Tableau) -> Tableau {
    let word: Vec<i64> = t.reading_word().iter().rev().map(|x| -x).collect();
    insertion_tableau(&word)
}

/// Schützenberger involution by evacuation.
pub fn schutzenberger(t: &Tableau) -> Result<Tableau, YoungError> {
    let n = t.size();
    let expected: BTreeSet<i64> = (1..=n as i64).collect();
    if t.entries() != expected {
        return Err(YoungError::NonContiguous(n));
    }
    let mut cur: Vec<Vec<Option<i64>>> = t.rows.iter().map(|r| r.iter().map(|&x| Some(x)).collect()).collect();
    let mut out: Vec<Vec<i64>> = t.rows.iter().map(|r| vec![0; r.len()]).collect();
    for k in 1..=n as i64 {
        let (mut i, mut j) = (0usize, 0usize);
        cur[0][0] = None;
        loop {
            let right = cur[i].get(j + 1).copied().flatten();
            let below = cur.get(i + 1).and_then(|r| r.get(j)).copied().flatten();
            match (right, below) {
                (None, None) => break,
                (Some(r), Some(b)) if b < r => {
                    cur[i][j] = Some(b);
                    cur[i + 1][j] = None;
                    i += 1;
                }
                (_, Some(b)) if right.is_none() => {
                    cur[i][j] = Some(b);
                    cur[i + 1][j] = None;
                    i += 1;
                }
                (Some(r), _) => {
                    cur[i][j] = Some(r);
                    cur[i][j + 1] = None;
                    j += 1;
                }
                (None, Some(_)) => unreachable!(),
            }
        }
        out[i][j] = n as i64 + 1 - k;
        cur[i].truncate(j);
        if cur[i].is_empty() {
            cur.truncate(i);
        }
    }
    Tableau::new(out)
}

/// `inner ⊆ outer` and the skew shape has at most one box per row.
pub fn column_strip_leq(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1)
}

/// Number of boxes in the first `c` columns.
pub fn boxes_in_first_columns(lambda: &Partition, c: usize) -> usize {
    lambda.parts().iter().map(|&x| x.min(c)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Sign of the box in (1-based) column `c` of a row led by `self`.
    pub fn at_column(self, c: usize) -> Sign {
        if c % 2 == 1 {
            self
        } else {
            self.flip()
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedRow {
    pub len: usize,
    pub sign: Sign,
}

/// Rows of alternating signs, sorted by length descending then `+` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<SignedRow>", into = "Vec<SignedRow>")]
pub struct SignedYoungDiagram {
    rows: Vec<SignedRow>,
}

impl SignedYoungDiagram {
    pub fn new(rows: Vec<(usize, Sign)>) -> Self {
        Self::from(rows.into_iter().map(|(len, sign)| SignedRow { len, sign }).collect::<Vec<_>>())
    }

    pub fn rows(&self) -> &[SignedRow] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len).collect())
    }

    /// Numbers of `+` and `−` boxes.
    pub fn signature(&self) -> (usize, usize) {
        let plus = self.count_upto(usize::MAX, Sign::Plus);
        let minus = self.count_upto(usize::MAX, Sign::Minus);
        (plus, minus)
    }

    /// Boxes of sign `s` in the first `c` columns.
    pub fn count_upto(&self, c: usize, s: Sign) -> usize {
        self.rows
            .iter()
            .map(|r| {
                let k = r.len.min(c);
                if r.sign == s {
                    k.div_ceil(2)
                } else {
                    k / 2
                }
            })
            .sum()
    }

    /// Cumulative `(+, −)` counts for columns 1..=cmax.
    pub fn column_counts(&self, cmax: usize) -> (Vec<usize>, Vec<usize>) {
        let plus = (1..=cmax).map(|c| self.count_upto(c, Sign::Plus)).collect();
        let minus = (1..=cmax).map(|c| self.count_upto(c, Sign::Minus)).collect();
        (plus, minus)
    }

    /// Every signed diagram with exactly `p` plus and `q` minus boxes.
    pub fn all_of_signature(p: usize, q: usize) -> Vec<SignedYoungDiagram> {
        // a row of length l led by s contributes (ceil, floor) or (floor, ceil)
        let mut kinds = Vec::new();
        for l in 1..=p + q {
            for s in [Sign::Plus, Sign::Minus] {
                let row = SignedRow { len: l, sign: s };
                let d = SignedYoungDiagram { rows: vec![row] };
                let (a, b) = d.signature();
                if a <= p && b <= q {
                    kinds.push((row, a, b));
                }
            }
        }
        fn go(
            kinds: &[(SignedRow, usize, usize)],
            start: usize,
            p: usize,
            q: usize,
            cur: &mut Vec<SignedRow>,
            out: &mut Vec<SignedYoungDiagram>,
        ) {
            if p == 0 && q == 0 {
                out.push(SignedYoungDiagram::from(cur.clone()));
                return;
            }
            for k in start..kinds.len() {
                let (row, a, b) = kinds[k];
                if a <= p && b <= q {
                    cur.push(row);
                    go(kinds, k, p - a, q - b, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&kinds, 0, p, q, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Vec<SignedRow>> for SignedYoungDiagram {
    fn from(mut rows: Vec<SignedRow>) -> Self {
        rows.retain(|r| r.len > 0);
        rows.sort_by(|a, b| b.len.cmp(&a.len).then(a.sign.cmp(&b.sign)));
        SignedYoungDiagram { rows }
    }
}

impl From<SignedYoungDiagram> for Vec<SignedRow> {
    fn from(d: SignedYoungDiagram) -> Self {
        d.rows
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| (1..=r.len).map(|c| r.sign.at_column(c).to_string()).collect()).collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

/// Rebuilds the signed diagram whose cumulative per-column sign counts are
/// `nplus[c-1]`, `nminus[c-1]`; counts past the end are taken as constant.
pub fn signed_diagram_from_column_counts(nplus: &[usize], nminus: &[usize]) -> Result<SignedYoungDiagram, YoungError> {
    if nplus.len() != nminus.len() {
        return Err(YoungError::InconsistentCounts("sequences differ in length".into()));
    }
    let cmax = nplus.len();
    let per_column = |v: &[usize], c: usize| -> Result<usize, YoungError> {
        let prev = if c == 1 { 0 } else { v[c - 2] };
        v[c - 1]
            .checked_sub(prev)
            .ok_or_else(|| YoungError::InconsistentCounts(format!("counts decrease at column {c}")))
    };
    // rows of length >= c led by + and by -
    let mut at_least = vec![(0usize, 0usize); cmax + 2];
    for c in 1..=cmax {
        let (pc, mc) = (per_column(nplus, c)?, per_column(nminus, c)?);
        at_least[c] = if c % 2 == 1 { (pc, mc) } else { (mc, pc) };
    }
    let mut rows = Vec::new();
    for len in 1..=cmax {
        let (a, b) = (at_least[len], at_least[len + 1]);
        let plus = a.0.checked_sub(b.0);
        let minus = a.1.checked_sub(b.1);
        match (plus, minus) {
            (Some(x), Some(y)) => {
                rows.extend(std::iter::repeat_n(SignedRow { len, sign: Sign::Plus }, x));
                rows.extend(std::iter::repeat_n(SignedRow { len, sign: Sign::Minus }, y));
            }
            _ => {
                return Err(YoungError::InconsistentCounts(format!(
                    "more rows reach column {} than column {len}",
                    len + 1
                )))
            }
        }
    }
    Ok(SignedYoungDiagram::from(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(rows: &[&[i64]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<i64>> {
        fn go(cur: &mut Vec<i64>, used: &mut Vec<bool>, out: &mut Vec<Vec<i64>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(i as i64 + 1);
                    go(cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    // evacuation computed as the rectification of the rotated, complemented tableau
    fn evacuation_by_rectification(t: &Tableau) -> Tableau {
        let n = t.size() as i64;
        let word: Vec<i64> = t.rows().iter().flat_map(|r| r.iter().rev().map(move |&x| n + 1 - x)).collect();
        insertion_tableau(&word)
    }

    #[test]
    fn row_insert_examples() {
        assert_eq!(row_insert(&t(&[&[1, 2]]), 3).unwrap(), t(&[&[1, 2, 3]]));
        assert_eq!(row_insert(&Tableau::empty(), 5).unwrap(), t(&[&[5]]));
        assert_eq!(row_insert(&t(&[&[1, 3]]), 2).unwrap(), t(&[&[1, 2], &[3]]));
        assert_eq!(row_insert(&t(&[&[1, 3]]), 3), Err(YoungError::DuplicateEntry(3)));
    }

    #[test]
    fn rs_examples() {
        let id = PartialBijection::from_one_line(&[1, 2, 3]).unwrap();
        assert_eq!(rs(&id), (t(&[&[1, 2, 3]]), t(&[&[1, 2, 3]])));
        let s = PartialBijection::new(vec![(1, 4), (3, 2)]).unwrap();
        assert_eq!(rs(&s), (t(&[&[2], &[4]]), t(&[&[1], &[3]])));
    }

    #[test]
    fn rs_bijective_up_to_six() {
        for n in 1..=6 {
            let mut seen = BTreeSet::new();
            for w in permutations(n) {
                let (a, b) = rs(&PartialBijection::from_one_line(&w).unwrap());
                assert_eq!(a.shape(), b.shape());
                assert!(seen.insert((a, b)));
            }
            // number of pairs of same-shape standard tableaux is n!
            assert_eq!(seen.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn rs_inverse_and_reversal() {
        for n in 1..=5 {
            for w in permutations(n) {
                let sigma = PartialBijection::from_one_line(&w).unwrap();
                let (a, b) = rs(&sigma);
                assert_eq!(rs(&sigma.inverse()), (b, a.clone()));
                let rev: Vec<i64> = w.iter().rev().copied().collect();
                assert_eq!(insertion_tableau(&rev), a.transpose());
            }
        }
    }

    #[test]
    fn plactic_examples() {
        let l = t(&[&[5]]);
        let rs1 = t(&[&[2], &[4]]);
        let lp = t(&[&[1], &[3]]);
        let left = plactic_product(&l, &rs1).unwrap();
        assert_eq!(plactic_product(&left, &lp).unwrap(), t(&[&[1, 3], &[2], &[4], &[5]]));
        assert_eq!(plactic_product(&t(&[&[2]]), &t(&[&[1], &[3]])).unwrap(), t(&[&[1, 3], &[2]]));
        assert_eq!(plactic_product(&lp, &Tableau::empty()).unwrap(), lp);
        assert!(plactic_product(&l, &l).is_err());
    }

    #[test]
    fn schutzenberger_examples() {
        assert_eq!(schutzenberger(&t(&[&[1]])).unwrap(), t(&[&[1]]));
        assert_eq!(schutzenberger(&t(&[&[1, 2]])).unwrap(), t(&[&[1, 2]]));
        assert_eq!(schutzenberger(&t(&[&[1, 2], &[3]])).unwrap(), t(&[&[1, 3], &[2]]));
        assert!(schutzenberger(&t(&[&[1, 3]])).is_err());
    }

    #[test]
    fn schutzenberger_matches_rectification_and_longest_element() {
        for n in 1..=5 {
            for w in permutations(n) {
                let p1 = insertion_tableau(&w);
                let s = schutzenberger(&p1).unwrap();
                assert_eq!(s, evacuation_by_rectification(&p1));
                assert_eq!(schutzenberger(&s).unwrap(), p1);
                let w0w: Vec<i64> = w.iter().map(|&x| n as i64 + 1 - x).collect();
                assert_eq!(insertion_tableau(&w0w), s.transpose());
            }
        }
    }

    #[test]
    fn reverse_bump_undoes_insert() {
        for w in permutations(5) {
            let mut p1 = insertion_tableau(&w[..4]);
            let before = p1.clone();
            let row = p1.insert_mut(w[4]);
            assert_eq!(p1.reverse_bump(row).unwrap(), w[4]);
            assert_eq!(p1, before);
        }
    }

    #[test]
    fn star_preserves_shape_and_reverses_products() {
        let a = t(&[&[1, 4], &[6]]);
        let b = t(&[&[2, 3], &[5]]);
        assert_eq!(star(&a).shape(), a.shape());
        let ab = plactic_product(&a, &b).unwrap();
        assert_eq!(star(&ab), plactic_product(&star(&b), &star(&a)).unwrap());
    }

    #[test]
    fn column_strips() {
        assert!(column_strip_leq(&p(&[1, 1]), &p(&[2, 2])));
        assert!(!column_strip_leq(&p(&[1]), &p(&[3])));
        assert!(column_strip_leq(&p(&[3, 1]), &p(&[3, 1])));
        assert!(column_strip_leq(&Partition::empty(), &p(&[1, 1, 1])));
        assert!(!column_strip_leq(&p(&[2]), &p(&[1, 1])));
    }

    #[test]
    fn boxes_in_columns() {
        assert_eq!(boxes_in_first_columns(&p(&[2, 1]), 1), 2);
        assert_eq!(boxes_in_first_columns(&p(&[3, 1, 1]), 2), 4);
        assert_eq!(boxes_in_first_columns(&p(&[3, 1, 1]), 0), 0);
    }

    #[test]
    fn partition_helpers() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert_eq!(Partition::all_of(5).len(), 7);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Composition::all_positive(4).len(), 8);
    }

    #[test]
    fn signed_diagram_examples() {
        use Sign::*;
        let lam = SignedYoungDiagram::new(vec![(2, Minus), (2, Minus), (1, Plus), (1, Plus), (1, Plus), (1, Minus)]);
        let (a, b) = lam.column_counts(3);
        assert_eq!((a.clone(), b.clone()), (vec![3, 5, 5], vec![3, 3, 3]));
        assert_eq!(signed_diagram_from_column_counts(&a, &b).unwrap(), lam);
        assert_eq!(signed_diagram_from_column_counts(&[0, 0], &[0, 0]).unwrap(), Default::default());
        assert_eq!(
            signed_diagram_from_column_counts(&[1], &[1]).unwrap(),
            SignedYoungDiagram::new(vec![(1, Minus), (1, Plus)])
        );
        assert_eq!(lam.to_string(), "[-+|-+|+|+|+|-]");
        // a second column with more boxes than the first
        assert!(signed_diagram_from_column_counts(&[0, 1], &[0, 1]).is_err());
    }

    #[test]
    fn signed_counts_roundtrip_small_signatures() {
        for n in 0..=7 {
            for p in 0..=n {
                let all = SignedYoungDiagram::all_of_signature(p, n - p);
                for d in &all {
                    assert_eq!(d.signature(), (p, n - p));
                    let (a, b) = d.column_counts(n + 1);
                    assert_eq!(&signed_diagram_from_column_counts(&a, &b).unwrap(), d);
                }
            }
        }
        assert_eq!(SignedYoungDiagram::all_of_signature(1, 1).len(), 3);
    }

    #[test]
    fn json_encodings() {
        let d = SignedYoungDiagram::new(vec![(2, Sign::Plus)]);
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"[{"len":2,"sign":"+"}]"#);
        let tab: Tableau = serde_json::from_str("[[1,3],[2]]").unwrap();
        assert_eq!(tab, t(&[&[1, 3], &[2]]));
        assert!(serde_json::from_str::<Tableau>("[[3,1]]").is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
    }

    fn word_strategy() -> impl Strategy<Value = Vec<i64>> {
        (0usize..7).prop_flat_map(|n| Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle())
    }

    proptest! {
        #[test]
        fn plactic_product_is_associative(w in word_strategy(), i in 0usize..7, j in 0usize..7) {
            let n = w.len();
            let (i, j) = (i.min(n), j.min(n));
            let (i, j) = (i.min(j), i.max(j));
            let a = insertion_tableau(&w[..i]);
            let b = insertion_tableau(&w[i..j]);
            let c = insertion_tableau(&w[j..]);
            let left = plactic_product(&plactic_product(&a, &b).unwrap(), &c).unwrap();
            let right = plactic_product(&a, &plactic_product(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(left, insertion_tableau(&w));
        }

        #[test]
        fn insertion_keeps_tableau_standard(w in word_strategy()) {
            let p1 = insertion_tableau(&w);
            prop_assert!(Tableau::new(p1.rows().to_vec()).is_ok());
            prop_assert_eq!(p1.size(), w.len());
        }
    }
}
