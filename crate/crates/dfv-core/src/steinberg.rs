//! Combinatorial Steinberg maps on orbits: the symmetrized map `Φ_k`, the
//! generalized Robinson–Schensted bijection and the exotic map `Φ_s`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orbit::{OrbitColumn, OrbitError, StackedPartialPermutation};
use crate::young::{
    boxes_in_first_columns, column_strip_inners, column_strip_leq, insertion_tableau, plactic_product, rs,
    signed_diagram_from_column_counts, standard_tableaux, star, PartialBijection, Partition, Sign, SignedYoungDiagram,
    Tableau, YoungError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinbergError {
    #[error("not an element of the fiber: {0}")]
    InvalidFiber(String),
    #[error("signed diagram reconstruction failed: {0}")]
    Reconstruction(String),
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

/// `(T1, T2; λ′, μ′; ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrsQuintuple {
    pub t1: Tableau,
    pub t2: Tableau,
    pub lambda_prime: Partition,
    pub mu_prime: Partition,
    pub nu: Partition,
}

impl GrsQuintuple {
    /// `(shape T1, shape T2)`.
    pub fn shapes(&self) -> (Partition, Partition) {
        (self.t1.shape(), self.t2.shape())
    }

    /// The chain and size condition relating the five entries to `r`.
    pub fn satisfies_star(&self, r: usize) -> bool {
        let (lam, mu) = self.shapes();
        column_strip_leq(&self.nu, &self.lambda_prime)
            && column_strip_leq(&self.lambda_prime, &lam)
            && column_strip_leq(&self.nu, &self.mu_prime)
            && column_strip_leq(&self.mu_prime, &mu)
            && self.lambda_prime.size() + self.mu_prime.size() == self.nu.size() + r
    }
}

/// The data of Γ(ω) used by every map here.
struct Pieces {
    sigma: PartialBijection,
    marked_plus: Vec<i64>,
    free_plus: Vec<i64>,
    marked_minus: Vec<i64>,
    free_minus: Vec<i64>,
}

fn pieces(w: &StackedPartialPermutation) -> Pieces {
    let g = w.graph();
    let to_i = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    let sigma = PartialBijection::new(g.edges.iter().map(|&(i, j)| (j as i64, i as i64)).collect())
        .expect("edges form a matching");
    Pieces {
        sigma,
        marked_plus: to_i(&g.marked_plus),
        free_plus: to_i(&g.free_plus),
        marked_minus: to_i(&g.marked_minus),
        free_minus: to_i(&g.free_minus),
    }
}

fn product3(a: &Tableau, b: &Tableau, c: &Tableau) -> Tableau {
    let ab = plactic_product(a, b).expect("disjoint vertex labels");
    plactic_product(&ab, c).expect("disjoint vertex labels")
}

pub fn grs(w: &StackedPartialPermutation) -> GrsQuintuple {
    let pc = pieces(w);
    let (rs1, rs2) = rs(&pc.sigma);
    let l = Tableau::column(&pc.marked_plus);
    let m = Tableau::column(&pc.marked_minus);
    let left1 = plactic_product(&l, &rs1).expect("disjoint vertex labels");
    let left2 = plactic_product(&m, &rs2).expect("disjoint vertex labels");
    GrsQuintuple {
        t1: plactic_product(&left1, &Tableau::column(&pc.free_plus)).expect("disjoint vertex labels"),
        t2: plactic_product(&left2, &Tableau::column(&pc.free_minus)).expect("disjoint vertex labels"),
        lambda_prime: left1.shape(),
        mu_prime: left2.shape(),
        nu: rs1.shape(),
    }
}

pub fn phi_k(w: &StackedPartialPermutation) -> (Partition, Partition) {
    let pc = pieces(w);
    let (rs1, rs2) = rs(&pc.sigma);
    let t1 = product3(&Tableau::column(&pc.marked_plus), &rs1, &Tableau::column(&pc.free_plus));
    let t2 = product3(&Tableau::column(&pc.marked_minus), &rs2, &Tableau::column(&pc.free_minus));
    (t1.shape(), t2.shape())
}

fn descending(v: &[i64]) -> impl Iterator<Item = i64> + '_ {
    v.iter().rev().copied()
}

/// One-line words `w_{k,+} ∈ S_p` and `w_{k,−} ∈ S_q`.
pub fn w_k(w: &StackedPartialPermutation) -> (Vec<i64>, Vec<i64>) {
    let pc = pieces(w);
    let inv = pc.sigma.inverse();
    let plus =
        descending(&pc.marked_plus).chain(pc.sigma.values().iter().copied()).chain(descending(&pc.free_plus)).collect();
    let minus =
        descending(&pc.marked_minus).chain(inv.values().iter().copied()).chain(descending(&pc.free_minus)).collect();
    (plus, minus)
}

pub fn phi_k_via_w(w: &StackedPartialPermutation) -> (Partition, Partition) {
    let (plus, minus) = w_k(w);
    (insertion_tableau(&plus).shape(), insertion_tableau(&minus).shape())
}

/// Two-line arrays `w_{s,+}` and `w_{s,−}`, with negative labels for marked points.
pub fn w_s(w: &StackedPartialPermutation) -> (PartialBijection, PartialBijection) {
    let pc = pieces(w);
    let (p, q) = (w.p() as i64, w.q() as i64);
    let inv = pc.sigma.inverse();
    let mut plus: Vec<(i64, i64)> = Vec::new();
    plus.extend(pc.marked_minus.iter().enumerate().map(|(a, &m)| (m, -(a as i64) - 1)));
    plus.extend(pc.sigma.domain().iter().zip(pc.sigma.values()).map(|(&j, &i)| (j, i)));
    plus.extend(descending(&pc.free_plus).enumerate().map(|(c, l)| (q + 1 + c as i64, l)));
    let mut minus: Vec<(i64, i64)> = Vec::new();
    minus.extend(pc.marked_plus.iter().enumerate().map(|(a, &l)| (l, -(a as i64) - 1)));
    minus.extend(inv.domain().iter().zip(inv.values()).map(|(&i, &j)| (i, j)));
    minus.extend(descending(&pc.free_minus).enumerate().map(|(c, m)| (p + 1 + c as i64, m)));
    (PartialBijection::new(plus).expect("distinct labels"), PartialBijection::new(minus).expect("distinct labels"))
}

/// `(λ′, μ′)` entering the odd-column counts of `Φ_s`.
pub fn phi_s_shapes(w: &StackedPartialPermutation) -> (Partition, Partition) {
    let (plus, minus) = w_s(w);
    (rs(&plus).0.shape(), rs(&minus).0.shape())
}

pub fn phi_s(w: &StackedPartialPermutation) -> Result<SignedYoungDiagram, SteinbergError> {
    let g = w.graph();
    let (s, t) = (g.marked_plus.len() as i64, g.marked_minus.len() as i64);
    let (lam, mu) = phi_k(w);
    let (lp, mp) = phi_s_shapes(w);
    let cmax = w.p() + w.q() + 1;
    let mut nplus = Vec::with_capacity(cmax);
    let mut nminus = Vec::with_capacity(cmax);
    for c in 1..=cmax {
        let (a, b) = if c % 2 == 0 {
            (boxes_in_first_columns(&lam, c) as i64, boxes_in_first_columns(&mu, c) as i64)
        } else {
            (s - t + boxes_in_first_columns(&lp, c) as i64, t - s + boxes_in_first_columns(&mp, c) as i64)
        };
        if a < 0 || b < 0 {
            return Err(SteinbergError::Reconstruction(format!("negative count at column {c}")));
        }
        nplus.push(a as usize);
        nminus.push(b as usize);
    }
    let d = signed_diagram_from_column_counts(&nplus, &nminus)
        .map_err(|e| SteinbergError::Reconstruction(e.to_string()))?;
    let even_ok = (2..=cmax).step_by(2).all(|c| {
        d.count_upto(c, Sign::Plus) == boxes_in_first_columns(&lam, c)
            && d.count_upto(c, Sign::Minus) == boxes_in_first_columns(&mu, c)
    });
    if !even_ok || d.signature() != (w.p(), w.q()) {
        return Err(SteinbergError::Reconstruction("even columns disagree with phi_k".into()));
    }
    Ok(d)
}

/// Undoes the insertion of a decreasing word: removes the boxes of `outer ∖ inner`
/// bottom-most first and returns the expelled labels.
fn peel_column_strip(t: &mut Tableau, inner: &Partition) -> Result<Vec<i64>, SteinbergError> {
    let outer = t.shape();
    if !column_strip_leq(inner, &outer) {
        return Err(SteinbergError::InvalidFiber(format!("{inner} is not a column strip inside {outer}")));
    }
    let mut out = Vec::new();
    for row in (0..outer.len()).rev() {
        if outer.part(row) > inner.part(row) {
            out.push(t.reverse_bump(row)?);
        }
    }
    Ok(out)
}

/// Factors `t = C·S·C′` with columns `C`, `C′`, `shape(C·S) = mid`, `shape(S) = core`.
fn factor(t: &Tableau, mid: &Partition, core: &Partition) -> Result<(Vec<i64>, Tableau, Vec<i64>), SteinbergError> {
    let mut left = t.clone();
    let right = peel_column_strip(&mut left, mid)?;
    let mut s = star(&left);
    let negated = peel_column_strip(&mut s, core)?;
    let col = negated.iter().map(|x| -x).collect();
    Ok((col, star(&s), right))
}

pub fn grs_inverse(
    t: &GrsQuintuple,
    p: usize,
    q: usize,
    r: usize,
) -> Result<StackedPartialPermutation, SteinbergError> {
    let expect = |tab: &Tableau, n: usize| tab.entries() == (1..=n as i64).collect();
    if !expect(&t.t1, p) || !expect(&t.t2, q) {
        return Err(SteinbergError::InvalidFiber("tableau entries must be 1..p and 1..q".into()));
    }
    if !t.satisfies_star(r) {
        return Err(SteinbergError::InvalidFiber("chain or size condition fails".into()));
    }
    let (l, mut s1, _) = factor(&t.t1, &t.lambda_prime, &t.nu)?;
    let (m, mut s2, _) = factor(&t.t2, &t.mu_prime, &t.nu)?;
    let mut cols: Vec<OrbitColumn> = Vec::new();
    while !s2.is_empty() {
        let (row, j) = s2
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| (i, *r.last().expect("rows are nonempty")))
            .max_by_key(|&(_, x)| x)
            .expect("nonempty tableau");
        s2.remove_corner(row)?;
        let i = s1.reverse_bump(row)?;
        cols.push(OrbitColumn::edge(i as usize, j as usize));
    }
    cols.extend(l.iter().map(|&i| OrbitColumn::marked_plus(i as usize)));
    cols.extend(m.iter().map(|&j| OrbitColumn::marked_minus(j as usize)));
    let w = StackedPartialPermutation::new(p, q, cols)?;
    if &grs(&w) != t {
        return Err(SteinbergError::InvalidFiber("quintuple is not in the image".into()));
    }
    Ok(w)
}

/// Every quintuple over `(λ, μ)` satisfying the chain condition for `r`.
pub fn fiber(lambda: &Partition, mu: &Partition, r: usize) -> Vec<GrsQuintuple> {
    let t1s = standard_tableaux(lambda);
    let t2s = standard_tableaux(mu);
    let mut out = Vec::new();
    for lp in column_strip_inners(lambda) {
        for nu in column_strip_inners(&lp) {
            for mp in column_strip_inners(mu) {
                if !column_strip_leq(&nu, &mp) || lp.size() + mp.size() != nu.size() + r {
                    continue;
                }
                for a in &t1s {
                    for b in &t2s {
                        out.push(GrsQuintuple {
                            t1: a.clone(),
                            t2: b.clone(),
                            lambda_prime: lp.clone(),
                            mu_prime: mp.clone(),
                            nu: nu.clone(),
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::enumerate_orbits;
    use crate::young::Sign::{Minus, Plus};
    use std::collections::BTreeSet;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tab(rows: &[&[i64]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example_omega() -> StackedPartialPermutation {
        StackedPartialPermutation::new(
            5,
            3,
            vec![
                OrbitColumn::edge(2, 3),
                OrbitColumn::edge(4, 1),
                OrbitColumn::marked_plus(5),
                OrbitColumn::marked_minus(2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn phi_k_example() {
        assert_eq!(phi_k(&example_omega()), (part(&[2, 1, 1, 1]), part(&[2, 1])));
        assert_eq!(phi_k_via_w(&example_omega()), (part(&[2, 1, 1, 1]), part(&[2, 1])));
        let e = StackedPartialPermutation::new(1, 1, vec![OrbitColumn::edge(1, 1)]).unwrap();
        assert_eq!(phi_k(&e), (part(&[1]), part(&[1])));
        let m = StackedPartialPermutation::new(1, 1, vec![OrbitColumn::marked_plus(1)]).unwrap();
        assert_eq!(phi_k_via_w(&m), (part(&[1]), part(&[1])));
    }

    #[test]
    fn phi_k_routes_agree() {
        for p in 0..=4 {
            for q in 0..=4 {
                for r in 1..=p + q {
                    for w in enumerate_orbits(p, q, r).unwrap() {
                        assert_eq!(phi_k(&w), phi_k_via_w(&w), "{w}");
                    }
                }
            }
        }
    }

    #[test]
    fn w_s_example() {
        let (plus, minus) = w_s(&example_omega());
        assert_eq!(plus.domain(), &[1, 2, 3, 4, 5]);
        assert_eq!(plus.values(), &[4, -1, 2, 3, 1]);
        assert_eq!(minus.domain(), &[2, 4, 5]);
        assert_eq!(minus.values(), &[3, 1, -1]);
        assert_eq!(phi_s_shapes(&example_omega()), (part(&[3, 1, 1]), part(&[1, 1, 1])));
    }

    #[test]
    fn phi_s_example() {
        let want = SignedYoungDiagram::new(vec![(2, Minus), (2, Minus), (1, Plus), (1, Plus), (1, Plus), (1, Minus)]);
        assert_eq!(phi_s(&example_omega()).unwrap(), want);
    }

    #[test]
    fn phi_s_family_with_one_minus_vertex() {
        for p in 2..=5 {
            let others = |i: usize| (1..=p).filter(move |&k| k != i).map(OrbitColumn::marked_plus);
            for i in 1..=p {
                let mut cols: Vec<OrbitColumn> = others(i).collect();
                cols.push(OrbitColumn::edge(i, 1));
                let w1 = StackedPartialPermutation::new(p, 1, cols).unwrap();
                let got = phi_s(&w1).unwrap();
                if i == 1 {
                    // the dense orbit
                    let mut rows = vec![(1, Plus); p];
                    rows.push((1, Minus));
                    assert_eq!(got, SignedYoungDiagram::new(rows));
                } else {
                    let mut rows = vec![(1, Plus); p - 1];
                    rows.push((2, Plus));
                    assert_eq!(got, SignedYoungDiagram::new(rows));
                }
                let mut cols: Vec<OrbitColumn> = others(i).collect();
                cols.push(OrbitColumn::marked_minus(1));
                let w2 = StackedPartialPermutation::new(p, 1, cols).unwrap();
                let mut rows = vec![(1, Plus); p - 1];
                rows.push((2, Minus));
                assert_eq!(phi_s(&w2).unwrap(), SignedYoungDiagram::new(rows));
            }
            let w3 = StackedPartialPermutation::new(p, 1, (1..=p).map(OrbitColumn::marked_plus).collect()).unwrap();
            let mut rows = vec![(1, Plus); p - 1];
            rows.push((2, Plus));
            assert_eq!(phi_s(&w3).unwrap(), SignedYoungDiagram::new(rows));
        }
    }

    #[test]
    fn grs_examples() {
        let g = grs(&example_omega());
        assert_eq!(
            g,
            GrsQuintuple {
                t1: tab(&[&[1, 3], &[2], &[4], &[5]]),
                t2: tab(&[&[1, 3], &[2]]),
                lambda_prime: part(&[1, 1, 1]),
                mu_prime: part(&[2, 1]),
                nu: part(&[1, 1]),
            }
        );
        assert_eq!(grs_inverse(&g, 5, 3, 4).unwrap(), example_omega());
        let w = StackedPartialPermutation::new(
            5,
            4,
            vec![
                OrbitColumn::edge(1, 2),
                OrbitColumn::edge(2, 4),
                OrbitColumn::marked_plus(3),
                OrbitColumn::edge(5, 3),
            ],
        )
        .unwrap();
        let g2 = grs(&w);
        assert_eq!(
            g2,
            GrsQuintuple {
                t1: tab(&[&[1, 2, 4], &[3, 5]]),
                t2: tab(&[&[1, 3], &[2], &[4]]),
                lambda_prime: part(&[2, 2]),
                mu_prime: part(&[2, 1]),
                nu: part(&[2, 1]),
            }
        );
        assert_eq!(grs_inverse(&g2, 5, 4, 4).unwrap(), w);
    }

    #[test]
    fn grs_extends_rs() {
        let sigma = [3i64, 1, 4, 2];
        let cols = sigma.iter().enumerate().map(|(j, &i)| OrbitColumn::edge(i as usize, j + 1)).collect();
        let w = StackedPartialPermutation::new(4, 4, cols).unwrap();
        let (p1, q1) = rs(&PartialBijection::from_one_line(&sigma).unwrap());
        let lam = p1.shape();
        assert_eq!(grs(&w), GrsQuintuple { t1: p1, t2: q1, lambda_prime: lam.clone(), mu_prime: lam.clone(), nu: lam });
    }

    #[test]
    fn grs_inverse_rejects_bad_quintuples() {
        let mut g = grs(&example_omega());
        g.nu = part(&[1]);
        assert!(grs_inverse(&g, 5, 3, 4).is_err());
        let g = grs(&example_omega());
        assert!(grs_inverse(&g, 5, 3, 3).is_err());
    }

    #[test]
    fn grs_is_a_bijection_onto_fibers() {
        for p in 0..=3 {
            for q in 0..=3 {
                for r in 1..=p + q {
                    let orbits = enumerate_orbits(p, q, r).unwrap();
                    let images: BTreeSet<GrsQuintuple> = orbits.iter().map(grs).collect();
                    assert_eq!(images.len(), orbits.len());
                    let mut fibers = BTreeSet::new();
                    for lam in Partition::all_of(p) {
                        for mu in Partition::all_of(q) {
                            fibers.extend(fiber(&lam, &mu, r));
                        }
                    }
                    assert_eq!(images, fibers, "({p},{q},{r})");
                    for w in &orbits {
                        let g = grs(w);
                        assert!(g.satisfies_star(r));
                        assert_eq!(g.shapes(), phi_k(w));
                        assert_eq!(&grs_inverse(&g, p, q, r).unwrap(), w);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_s_signature_and_even_columns() {
        for p in 0..=4 {
            for q in 0..=4 {
                for r in 1..=p + q {
                    for w in enumerate_orbits(p, q, r).unwrap() {
                        let d = phi_s(&w).unwrap();
                        assert_eq!(d.signature(), (p, q));
                        assert_eq!(d.shape().size(), p + q);
                    }
                }
            }
        }
    }
}
