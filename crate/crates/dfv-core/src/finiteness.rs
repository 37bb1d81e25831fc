//! Tits forms on star quivers and finite-type deciders for AIII double flag
//! varieties and type A multiple flag varieties.

use std::fmt;

use num::rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::young::{Composition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinitenessError {
    #[error("compositions have different totals: {0:?}")]
    TotalMismatch(Vec<usize>),
    #[error("composition {0} must have at least one part")]
    EmptyComposition(&'static str),
    #[error("last part of {side} is {found}, expected {expected}")]
    LastPart { side: &'static str, found: usize, expected: usize },
    #[error("need at least one flag")]
    NoFlags,
}

/// Joint flag data `(a, b, c)`: `a = (a', q)`, `b = (b', p)`, `c` a composition of `n = p + q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JointTriple {
    a: Composition,
    b: Composition,
    c: Composition,
}

impl JointTriple {
    pub fn new(a: Composition, b: Composition, c: Composition) -> Result<Self, FinitenessError> {
        if a.is_empty() {
            return Err(FinitenessError::EmptyComposition("a"));
        }
        if b.is_empty() {
            return Err(FinitenessError::EmptyComposition("b"));
        }
        let p: usize = a.parts()[..a.len() - 1].iter().sum();
        let q: usize = b.parts()[..b.len() - 1].iter().sum();
        if p + q != c.total() {
            return Err(FinitenessError::TotalMismatch(vec![p, q, c.total()]));
        }
        let (la, lb) = (a.parts()[a.len() - 1], b.parts()[b.len() - 1]);
        if la != q {
            return Err(FinitenessError::LastPart { side: "a", found: la, expected: q });
        }
        if lb != p {
            return Err(FinitenessError::LastPart { side: "b", found: lb, expected: p });
        }
        Ok(JointTriple { a, b, c })
    }

    /// Completes the flag types `a'` of `V+`, `b'` of `V-` and `c` of `V`.
    pub fn from_flags(a_prime: &Composition, b_prime: &Composition, c: &Composition) -> Result<Self, FinitenessError> {
        let mut a = a_prime.0.clone();
        a.push(b_prime.total());
        let mut b = b_prime.0.clone();
        b.push(a_prime.total());
        JointTriple::new(Composition(a), Composition(b), c.clone())
    }

    pub fn a(&self) -> &Composition {
        &self.a
    }

    pub fn b(&self) -> &Composition {
        &self.b
    }

    pub fn c(&self) -> &Composition {
        &self.c
    }

    pub fn a_prime(&self) -> Composition {
        Composition(self.a.parts()[..self.a.len() - 1].to_vec())
    }

    pub fn b_prime(&self) -> Composition {
        Composition(self.b.parts()[..self.b.len() - 1].to_vec())
    }

    pub fn p(&self) -> usize {
        self.b.parts()[self.b.len() - 1]
    }

    pub fn q(&self) -> usize {
        self.a.parts()[self.a.len() - 1]
    }

    pub fn n(&self) -> usize {
        self.c.total()
    }

    pub fn is_zero(&self) -> bool {
        self.n() == 0
    }

    pub fn swap(&self) -> JointTriple {
        JointTriple { a: self.b.clone(), b: self.a.clone(), c: self.c.clone() }
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        DimensionVector::of_flags(&[self.a.clone(), self.b.clone(), self.c.clone()])
            .expect("totals agree by construction")
    }

    pub fn tits_form(&self) -> Rational64 {
        tits_form(&[self.a.clone(), self.b.clone(), self.c.clone()]).expect("totals agree by construction")
    }

    /// Twice the Tits form, as an integer.
    pub fn tits_form_doubled(&self) -> i64 {
        let n = self.n() as i64;
        (self.a.norm_sq() + self.b.norm_sq() + self.c.norm_sq()) as i64 - n * n
    }

    /// All triples with `p + q = n`, `p, q ≥ 1` and positive parts.
    pub fn all_of(n: usize) -> Vec<JointTriple> {
        let mut out = Vec::new();
        let cs = Composition::all_positive(n);
        for p in 1..n {
            let q = n - p;
            for ap in Composition::all_positive(p) {
                for bp in Composition::all_positive(q) {
                    for c in &cs {
                        out.push(JointTriple::from_flags(&ap, &bp, c).expect("valid"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for JointTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Dimensions at the vertices of a star quiver: the center and, per arm, the
/// proper flag members listed from the tip toward the center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionVector {
    pub center: usize,
    pub arms: Vec<Vec<usize>>,
}

impl DimensionVector {
    pub fn of_flags(flags: &[Composition]) -> Result<Self, FinitenessError> {
        let n = common_total(flags)?;
        let arms = flags
            .iter()
            .map(|a| {
                let mut s = 0;
                let mut arm = Vec::new();
                for &x in &a.parts()[..a.len().saturating_sub(1)] {
                    s += x;
                    arm.push(s);
                }
                arm
            })
            .collect();
        Ok(DimensionVector { center: n, arms })
    }

    /// `Σ x_v² − Σ_{edges} x_u x_v`.
    pub fn tits_form(&self) -> i64 {
        let c = self.center as i64;
        let mut t = c * c;
        for arm in &self.arms {
            for (k, &x) in arm.iter().enumerate() {
                let x = x as i64;
                let next = arm.get(k + 1).map_or(c, |&y| y as i64);
                t += x * x - x * next;
            }
        }
        t
    }
}

fn common_total(flags: &[Composition]) -> Result<usize, FinitenessError> {
    let first = flags.first().ok_or(FinitenessError::NoFlags)?.total();
    if flags.iter().any(|a| a.total() != first) {
        return Err(FinitenessError::TotalMismatch(flags.iter().map(|a| a.total()).collect()));
    }
    Ok(first)
}

/// `½(Σ_j ‖a_j‖² − (N − 2) n²)`.
pub fn tits_form(flags: &[Composition]) -> Result<Rational64, FinitenessError> {
    let n = common_total(flags)? as i64;
    let norms: i64 = flags.iter().map(|a| a.norm_sq() as i64).sum();
    let k = flags.len() as i64;
    Ok(Rational64::new(norms - (k - 2) * n * n, 2))
}

/// All vectors `v` with `0 ≤ v ≤ bound` componentwise, in lexicographic order.
fn boxes(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(bound.len())];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn norm_sq(v: &[usize]) -> i64 {
    v.iter().map(|&x| (x * x) as i64).sum()
}

/// For each total `m`, a vector of minimal norm among `0 ≤ v ≤ bound` summing to `m`.
fn min_norm_by_total(bound: &[usize]) -> Vec<Option<Vec<usize>>> {
    let total: usize = bound.iter().sum();
    let mut best: Vec<Option<Vec<usize>>> = vec![None; total + 1];
    for v in boxes(bound) {
        let m: usize = v.iter().sum();
        let better = match &best[m] {
            None => true,
            Some(w) => norm_sq(&v) < norm_sq(w),
        };
        if better {
            best[m] = Some(v);
        }
    }
    best
}

/// A nonzero summand `μ ≤ t` in the joint semigroup with `(d(μ)|d(μ)) ≤ 0`, if any.
pub fn bruteforce_witness(t: &JointTriple) -> Option<JointTriple> {
    let ap = t.a_prime();
    let bp = t.b_prime();
    let cbest = min_norm_by_total(t.c.parts());
    let a_boxes = boxes(ap.parts());
    let b_boxes = boxes(bp.parts());
    a_boxes.par_iter().find_map_first(|a0| {
        let sa: usize = a0.iter().sum();
        let na = norm_sq(a0);
        b_boxes.iter().find_map(|b0| {
            let sb: usize = b0.iter().sum();
            let m = sa + sb;
            if m == 0 {
                return None;
            }
            let c0 = cbest.get(m)?.as_ref()?;
            let (sa, sb, mi) = (sa as i64, sb as i64, m as i64);
            let v2 = na + sb * sb + norm_sq(b0) + sa * sa + norm_sq(c0) - mi * mi;
            (v2 <= 0).then(|| {
                JointTriple::from_flags(&Composition(a0.clone()), &Composition(b0.clone()), &Composition(c0.clone()))
                    .expect("summand totals agree")
            })
        })
    })
}

/// Every nonzero summand has Tits value at least 1.
pub fn is_finite_bruteforce(t: &JointTriple) -> bool {
    bruteforce_witness(t).is_none()
}

/// The six forbidden summand shapes `(a0'⁺, b0'⁺, c0⁺)`, up to swapping the first two.
pub const FORBIDDEN: [(&[usize], &[usize], &[usize]); 6] = [
    (&[1, 1, 1], &[1, 1, 1], &[2, 2, 2]),
    (&[2, 2], &[1, 1, 1, 1, 1], &[3, 3, 3]),
    (&[1, 1], &[1, 1], &[1, 1, 1, 1]),
    (&[3], &[1, 1, 1, 1, 1], &[2, 2, 2, 2]),
    (&[2], &[1, 1, 1], &[1, 1, 1, 1, 1]),
    (&[3], &[2, 2], &[1, 1, 1, 1, 1, 1, 1]),
];

/// Places the decreasing `pattern` below distinct parts of `target`.
fn place(pattern: &[usize], target: &[usize]) -> Option<Vec<usize>> {
    if pattern.len() > target.len() {
        return None;
    }
    let mut idx: Vec<usize> = (0..target.len()).collect();
    idx.sort_by(|&i, &j| target[j].cmp(&target[i]).then(i.cmp(&j)));
    let mut out = vec![0; target.len()];
    for (k, &x) in pattern.iter().enumerate() {
        if x > target[idx[k]] {
            return None;
        }
        out[idx[k]] = x;
    }
    Some(out)
}

/// Which forbidden shape a summand of `t` realizes, with that summand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenMatch {
    pub pattern: usize,
    pub swapped: bool,
    pub summand: JointTriple,
}

pub fn forbidden_witness(t: &JointTriple) -> Option<ForbiddenMatch> {
    let ap = t.a_prime();
    let bp = t.b_prime();
    for (k, (x, y, z)) in FORBIDDEN.iter().enumerate() {
        let Some(c0) = place(z, t.c.parts()) else {
            continue;
        };
        for swapped in [false, true] {
            let (pa, pb) = if swapped { (y, x) } else { (x, y) };
            if let (Some(a0), Some(b0)) = (place(pa, ap.parts()), place(pb, bp.parts())) {
                let summand = JointTriple::from_flags(&Composition(a0), &Composition(b0), &Composition(c0.clone()))
                    .expect("pattern totals agree");
                return Some(ForbiddenMatch { pattern: k, swapped, summand });
            }
        }
    }
    None
}

/// No summand realizes a forbidden shape.
pub fn is_finite_fast(t: &JointTriple) -> bool {
    forbidden_witness(t).is_none()
}

/// Block data of one parabolic factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorShape {
    pub size: usize,
    pub blocks: usize,
    pub min_part: usize,
}

impl FactorShape {
    pub fn of(a: &Composition) -> Self {
        let parts = a.normalized();
        FactorShape { size: a.total(), blocks: parts.len(), min_part: parts.parts().last().copied().unwrap_or(0) }
    }

    pub fn is_full(&self) -> bool {
        self.blocks <= 1
    }

    pub fn is_maximal(&self) -> bool {
        self.blocks <= 2
    }

    pub fn is_mirabolic(&self) -> bool {
        self.blocks == 2 && self.min_part == 1
    }

    fn is_gl(&self, k: usize) -> bool {
        self.size == k && self.is_full()
    }
}

/// Shape data of `(P, Q1, Q2)` used by the classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParabolicShape {
    pub p: FactorShape,
    pub q1: FactorShape,
    pub q2: FactorShape,
}

impl ParabolicShape {
    pub fn of(t: &JointTriple) -> Self {
        ParabolicShape {
            p: FactorShape::of(&t.c),
            q1: FactorShape::of(&t.a_prime()),
            q2: FactorShape::of(&t.b_prime()),
        }
    }

    fn swapped(&self) -> Self {
        ParabolicShape { p: self.p, q1: self.q2, q2: self.q1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableRow {
    PA1,
    PA2,
    PA3,
    P6,
    P41,
    P42,
    /// `|P| ≤ 4`, any `Q1`, `Q2 = GL_2`.
    P43,
    P31,
    P32,
    P33,
    P34,
    P2,
}

impl TableRow {
    pub const ALL: [TableRow; 12] = [
        TableRow::PA1,
        TableRow::PA2,
        TableRow::PA3,
        TableRow::P6,
        TableRow::P41,
        TableRow::P42,
        TableRow::P43,
        TableRow::P31,
        TableRow::P32,
        TableRow::P33,
        TableRow::P34,
        TableRow::P2,
    ];

    /// Rows not in the published list.
    pub fn is_amendment(self) -> bool {
        self == TableRow::P43
    }

    /// Matches with `Q1`, `Q2` in the given order.
    fn matches_ordered(self, s: &ParabolicShape) -> bool {
        let (lp, minc) = (s.p.blocks, s.p.min_part);
        let (q1, q2) = (s.q1, s.q2);
        match self {
            TableRow::PA1 => q1.is_full() && (q2.is_full() || q2.is_mirabolic()),
            TableRow::PA2 => q2.size == 1,
            TableRow::PA3 => q1.is_maximal() && q2.is_gl(2),
            TableRow::P6 => lp <= 6 && q1.is_maximal() && q2.is_full(),
            TableRow::P41 => lp <= 4 && q1.blocks <= 4 && q2.is_full(),
            TableRow::P42 => lp <= 4 && minc == 1 && q2.is_full(),
            TableRow::P43 => lp <= 4 && q2.is_gl(2),
            TableRow::P31 => lp <= 3 && minc == 1,
            TableRow::P32 => lp <= 3 && minc == 2 && q2.blocks <= 2,
            TableRow::P33 => lp <= 3 && (q2.is_full() || q2.is_mirabolic()),
            TableRow::P34 => lp <= 3 && q1.blocks <= 4 && q2.is_maximal(),
            TableRow::P2 => lp <= 2,
        }
    }

    /// Matches up to switching `Q1` and `Q2`.
    pub fn matches(self, s: &ParabolicShape) -> bool {
        self.matches_ordered(s) || self.matches_ordered(&s.swapped())
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableRow::PA1 => "PA-1",
            TableRow::PA2 => "PA-2",
            TableRow::PA3 => "PA-3",
            TableRow::P6 => "P6",
            TableRow::P41 => "P4-1",
            TableRow::P42 => "P4-2",
            TableRow::P43 => "P4-3",
            TableRow::P31 => "P3-1",
            TableRow::P32 => "P3-2",
            TableRow::P33 => "P3-3",
            TableRow::P34 => "P3-4",
            TableRow::P2 => "P2",
        };
        f.write_str(s)
    }
}

/// All rows matching `shape`, up to switching the `K` factors.
pub fn table_rows(shape: &ParabolicShape) -> Vec<TableRow> {
    TableRow::ALL.into_iter().filter(|r| r.matches(shape)).collect()
}

/// The classification table including the amended row.
pub fn classify_table(shape: &ParabolicShape) -> bool {
    TableRow::ALL.iter().any(|r| r.matches(shape))
}

/// The classification table restricted to the published rows.
pub fn classify_table_published(shape: &ParabolicShape) -> bool {
    TableRow::ALL.iter().any(|r| !r.is_amendment() && r.matches(shape))
}

/// A nonzero summand `d' ≤ d` of a multiple flag with `(d'|d') ≤ 0`, if any.
pub fn multi_flag_witness(flags: &[Composition]) -> Result<Option<Vec<Composition>>, FinitenessError> {
    let n = common_total(flags)?;
    let k = flags.len() as i64;
    // per flag and total m, a bounded vector of minimal norm
    let best: Vec<Vec<Option<Vec<usize>>>> = flags.iter().map(|a| min_norm_by_total(a.parts())).collect();
    let found = (1..=n).find_map(|m| {
        let mut parts = Vec::with_capacity(flags.len());
        let mut norms = 0;
        for b in &best {
            let v = b[m].as_ref()?;
            norms += norm_sq(v);
            parts.push(Composition(v.clone()));
        }
        let mi = m as i64;
        (norms - (k - 2) * mi * mi <= 0).then_some(parts)
    });
    Ok(found)
}

/// Condition (FT) for `G/P1 × … × G/PN` in type A.
pub fn is_finite_multi_flag(flags: &[Composition]) -> Result<bool, FinitenessError> {
    Ok(multi_flag_witness(flags)?.is_none())
}

pub fn is_finite_triple_flag_a(a1: &Composition, a2: &Composition, a3: &Composition) -> Result<bool, FinitenessError> {
    is_finite_multi_flag(&[a1.clone(), a2.clone(), a3.clone()])
}

/// Type A triple flags of finite type, by block counts and block sizes.
pub fn triple_flag_table(a1: &Composition, a2: &Composition, a3: &Composition) -> bool {
    let fs = [a1.normalized(), a2.normalized(), a3.normalized()];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    perms.iter().any(|&[i, j, k]| {
        let (x, y, z): (&Partition, &Partition, &Partition) = (&fs[i], &fs[j], &fs[k]);
        let (lx, ly, lz) = (x.len(), y.len(), z.len());
        let has = |p: &Partition, v: usize| p.parts().contains(&v);
        lx <= 1
            || (lx == 2 && ly == 2)
            || (lx == 2 && ly == 3 && (3..=5).contains(&lz))
            || (lx == 2 && has(x, 2) && ly == 3)
            || (lx == 2 && ly == 3 && has(y, 1))
            || (lx == 2 && has(x, 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[usize]) -> Composition {
        Composition(v.to_vec())
    }

    fn jt(a: &[usize], b: &[usize], cc: &[usize]) -> JointTriple {
        JointTriple::from_flags(&c(a), &c(b), &c(cc)).unwrap()
    }

    #[test]
    fn tits_form_examples() {
        let f = |v: &[&[usize]]| tits_form(&v.iter().map(|x| c(x)).collect::<Vec<_>>()).unwrap();
        assert_eq!(f(&[&[1, 1], &[1, 1], &[1, 1], &[1, 1]]), Rational64::from(0));
        assert_eq!(f(&[&[1, 1, 2], &[1, 1, 2], &[1, 1, 1, 1]]), Rational64::from(0));
        assert_eq!(f(&[&[1, 1], &[1, 1]]), Rational64::from(2));
        assert!(tits_form(&[c(&[1]), c(&[2])]).is_err());
    }

    #[test]
    fn quiver_form_agrees_with_closed_form() {
        for n in 1..=5 {
            for t in JointTriple::all_of(n) {
                let dv = t.dimension_vector();
                assert_eq!(Rational64::from(dv.tits_form()), t.tits_form(), "{t}");
                assert_eq!(2 * dv.tits_form(), t.tits_form_doubled());
            }
        }
    }

    #[test]
    fn dimension_vector_arms_increase() {
        let t = jt(&[1, 2], &[2], &[1, 2, 2]);
        let dv = t.dimension_vector();
        assert_eq!(dv.center, 5);
        assert_eq!(dv.arms, vec![vec![1, 3], vec![2], vec![1, 3]]);
    }

    #[test]
    fn joint_triple_validation() {
        assert!(JointTriple::new(c(&[1, 1]), c(&[1, 1]), c(&[2])).is_ok());
        assert!(JointTriple::new(c(&[1, 2]), c(&[1, 1]), c(&[2])).is_err());
        assert!(JointTriple::new(c(&[1, 1]), c(&[1, 1]), c(&[3])).is_err());
        let t = jt(&[1, 1], &[1, 1], &[1, 1, 1, 1]);
        assert_eq!(t.a(), &c(&[1, 1, 2]));
        assert_eq!((t.p(), t.q(), t.n()), (2, 2, 4));
    }

    #[test]
    fn deciders_on_examples() {
        let smoke = jt(&[1], &[1], &[2]);
        assert!(is_finite_bruteforce(&smoke));
        assert!(is_finite_fast(&smoke));
        let bad = jt(&[1, 1], &[1, 1], &[1, 1, 1, 1]);
        assert!(!is_finite_bruteforce(&bad));
        let w = forbidden_witness(&bad).unwrap();
        assert_eq!(w.pattern, 2);
        assert_eq!(w.summand, bad);
        let w = bruteforce_witness(&bad).unwrap();
        assert!(w.tits_form_doubled() <= 0);
        // the pattern ((2),(1^3),(1^5))
        let t = jt(&[1, 1, 1], &[2], &[1, 1, 1, 1, 1]);
        assert!(!is_finite_fast(&t));
        assert!(!is_finite_bruteforce(&t));
    }

    #[test]
    fn two_part_c_is_finite() {
        for n in 2..=6 {
            for t in JointTriple::all_of(n).into_iter().filter(|t| t.c.len() <= 2) {
                assert!(is_finite_bruteforce(&t), "{t}");
                assert!(is_finite_fast(&t), "{t}");
            }
        }
    }

    #[test]
    fn fast_matches_bruteforce_small() {
        for n in 1..=6 {
            for t in JointTriple::all_of(n) {
                assert_eq!(is_finite_fast(&t), is_finite_bruteforce(&t), "{t}");
            }
        }
    }

    #[test]
    fn zero_parts_do_not_matter() {
        let t = jt(&[1, 1, 1], &[2], &[1, 1, 1, 1, 1]);
        let z = jt(&[1, 0, 1, 1], &[0, 2], &[1, 1, 0, 1, 1, 1]);
        assert_eq!(is_finite_fast(&t), is_finite_fast(&z));
        assert_eq!(is_finite_bruteforce(&t), is_finite_bruteforce(&z));
        assert_eq!(classify_table(&ParabolicShape::of(&t)), classify_table(&ParabolicShape::of(&z)));
        let u = jt(&[2, 1], &[3], &[2, 0, 4]);
        assert!(is_finite_fast(&u) && is_finite_bruteforce(&u));
    }

    #[test]
    fn swap_invariance() {
        for t in JointTriple::all_of(6) {
            let s = t.swap();
            assert_eq!(is_finite_fast(&t), is_finite_fast(&s));
            assert_eq!(is_finite_bruteforce(&t), is_finite_bruteforce(&s));
            assert_eq!(classify_table(&ParabolicShape::of(&t)), classify_table(&ParabolicShape::of(&s)));
        }
    }

    #[test]
    fn table_examples() {
        let s = |c0: &[usize], a: &[usize], b: &[usize]| ParabolicShape::of(&jt(a, b, c0));
        assert!(classify_table(&s(&[3, 3], &[1, 1, 1], &[1, 1, 1])));
        assert!(table_rows(&s(&[3, 3], &[1, 1, 1], &[1, 1, 1])).contains(&TableRow::P2));
        let p6 = s(&[1, 1, 1, 1, 1], &[2, 1], &[2]);
        assert!(table_rows(&p6).contains(&TableRow::P6));
        let t = jt(&[2, 2], &[2, 2], &[2, 2, 2, 2]);
        assert!(!classify_table(&ParabolicShape::of(&t)));
        assert!(!is_finite_bruteforce(&t));
    }

    #[test]
    fn amended_row_covers_the_gap() {
        let t = jt(&[1, 1, 1, 1, 1, 1], &[2], &[2, 2, 2, 2]);
        let sh = ParabolicShape::of(&t);
        assert!(is_finite_bruteforce(&t));
        assert!(!classify_table_published(&sh));
        assert_eq!(table_rows(&sh), vec![TableRow::P43]);
    }

    #[test]
    fn multi_flag_examples() {
        assert!(is_finite_triple_flag_a(&c(&[1, 1]), &c(&[1, 1]), &c(&[1, 1])).unwrap());
        assert!(!is_finite_triple_flag_a(&c(&[1, 1, 1]), &c(&[1, 1, 1]), &c(&[1, 1, 1])).unwrap());
        assert!(!is_finite_multi_flag(&[c(&[1, 1]), c(&[1, 1]), c(&[1, 1]), c(&[1, 1])]).unwrap());
        let w = multi_flag_witness(&[c(&[1, 2]), c(&[2, 1]), c(&[1, 1, 1]), c(&[3])]).unwrap();
        assert!(w.is_none());
        let t = (c(&[2, 2]), c(&[2, 2]), c(&[1, 1, 1, 1]));
        assert_eq!(is_finite_triple_flag_a(&t.0, &t.1, &t.2).unwrap(), triple_flag_table(&t.0, &t.1, &t.2));
    }

    #[test]
    fn multi_flag_matches_table_small() {
        for n in 1..=6 {
            let cs = Composition::all_positive(n);
            for x in &cs {
                for y in &cs {
                    for z in &cs {
                        assert_eq!(
                            is_finite_triple_flag_a(x, y, z).unwrap(),
                            triple_flag_table(x, y, z),
                            "{x} {y} {z}"
                        );
                    }
                }
            }
        }
    }
}
