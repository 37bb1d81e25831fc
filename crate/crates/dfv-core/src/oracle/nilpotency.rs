//! Randomized harness for the nilpotent projection property: if `y` and its
//! θ-part are nilpotent and one of the cases (A)–(G) holds, the (−θ)-part is
//! nilpotent too; likewise for self-adjoint parts under a bilinear form.

use std::fmt;

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::linalg::{q, RationalMatrix, Q};
use super::split_theta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NilCase {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    Symplectic,
    Orthogonal,
}

impl NilCase {
    pub const ALL: [NilCase; 9] = [
        NilCase::A,
        NilCase::B,
        NilCase::C,
        NilCase::D,
        NilCase::E,
        NilCase::F,
        NilCase::G,
        NilCase::Symplectic,
        NilCase::Orthogonal,
    ];
}

impl fmt::Display for NilCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NilCase::A => "A",
            NilCase::B => "B",
            NilCase::C => "C",
            NilCase::D => "D",
            NilCase::E => "E",
            NilCase::F => "F",
            NilCase::G => "G",
            NilCase::Symplectic => "symplectic",
            NilCase::Orthogonal => "orthogonal",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilError {
    #[error("case {case}: hypothesis violated: {reason}")]
    Precondition { case: NilCase, reason: String },
}

/// Antidiagonal form matrix: symmetric for the orthogonal case, alternating otherwise.
pub fn form_matrix(case: NilCase, n: usize) -> RationalMatrix {
    let mut j = RationalMatrix::zeros(n, n);
    for i in 0..n {
        let sign = if case == NilCase::Symplectic && i >= n / 2 { -1 } else { 1 };
        j[(i, n - 1 - i)] = q(sign);
    }
    j
}

/// Adjoint with respect to `⟨u, v⟩ = uᵀ J v`.
pub fn adjoint(y: &RationalMatrix, j: &RationalMatrix) -> RationalMatrix {
    let jinv = j.inverse().expect("form is nondegenerate");
    &(&jinv * &y.transpose()) * j
}

fn nilpotent(x: &RationalMatrix) -> bool {
    x.is_nilpotent()
}

/// Checks the hypotheses of `case` for `y` and returns whether the conclusion holds.
pub fn nilpotency_case_check(case: NilCase, y: &RationalMatrix, p: usize, q_: usize) -> Result<bool, NilError> {
    let fail = |reason: &str| Err(NilError::Precondition { case, reason: reason.to_string() });
    let n = p + q_;
    if y.rows() != n || y.cols() != n {
        return fail("matrix size is not p + q");
    }
    if matches!(case, NilCase::Symplectic | NilCase::Orthogonal) {
        if case == NilCase::Symplectic && n % 2 == 1 {
            return fail("symplectic forms need even dimension");
        }
        let jm = form_matrix(case, n);
        let ys = adjoint(y, &jm);
        let half = q(1) / q(2);
        let v = (y - &ys).scale(&half);
        let w = (y + &ys).scale(&half);
        if !(y * y).is_zero() {
            return fail("y^2 != 0");
        }
        if !nilpotent(&v) {
            return fail("skew-adjoint part is not nilpotent");
        }
        return Ok(nilpotent(&w));
    }
    let (v, w) = split_theta(y, p);
    if !nilpotent(y) {
        return fail("y is not nilpotent");
    }
    if !nilpotent(&v) {
        return fail("theta part is not nilpotent");
    }
    let a = y.block(0, p, 0, p);
    let d = y.block(p, n, p, n);
    let y3_zero = || y.pow(3).is_zero();
    let ok = match case {
        NilCase::A => (y * y).is_zero(),
        NilCase::B => y3_zero() && y.rank() == 2,
        NilCase::C => y3_zero() && (&a * &a).is_zero() && (&d * &d).is_zero(),
        NilCase::D => y3_zero() && q_ == 2,
        NilCase::E => a.rank() <= 1 && d.is_zero(),
        NilCase::F => q_ == 2 && (&a * &a).is_zero() && d.is_zero(),
        NilCase::G => q_ == 1,
        NilCase::Symplectic | NilCase::Orthogonal => unreachable!(),
    };
    if !ok {
        return fail("case-specific condition fails");
    }
    Ok(nilpotent(&w))
}

#[derive(Debug, Clone)]
pub struct NilInstance {
    pub case: NilCase,
    pub y: RationalMatrix,
    pub p: usize,
    pub q: usize,
}

/// Matrix supported on `(u, v)` with `level[u] < level[v]`, filtered by `allow`.
fn leveled(levels: &[usize], rng: &mut ChaCha8Rng, allow: impl Fn(usize, usize) -> bool) -> RationalMatrix {
    let n = levels.len();
    let mut y = RationalMatrix::zeros(n, n);
    for u in 0..n {
        for v in 0..n {
            if levels[u] < levels[v] && allow(u, v) {
                y[(u, v)] = q(rng.gen_range(-3..=3));
            }
        }
    }
    y
}

fn unimodular(m: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
    let mut k = RationalMatrix::identity(m);
    if m < 2 {
        return k;
    }
    for _ in 0..3 * m {
        let i = rng.gen_range(0..m);
        let j = (i + rng.gen_range(1..m)) % m;
        let f = q(rng.gen_range(-2..=2));
        for c in 0..m {
            let v = &k[(j, c)] * &f;
            k[(i, c)] += v;
        }
    }
    k
}

/// Conjugates by a random element of `GL_p × GL_q`, which preserves every hypothesis.
fn conjugate_by_k(y: &RationalMatrix, p: usize, q_: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
    let k = RationalMatrix::block_diag(&unimodular(p, rng), &unimodular(q_, rng));
    let kinv = k.inverse().expect("unimodular");
    &(&k * y) * &kinv
}

fn random_levels(n: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..count)).collect()
}

/// Draws an instance satisfying the hypotheses of `case` by construction.
pub fn random_instance(case: NilCase, rng: &mut ChaCha8Rng) -> NilInstance {
    let size = |rng: &mut ChaCha8Rng| rng.gen_range(1..=3usize);
    let (p, q_) = match case {
        NilCase::D | NilCase::F => (size(rng), 2),
        NilCase::G => (size(rng) + 1, 1),
        NilCase::Symplectic => (2 * rng.gen_range(1..=3usize), 0),
        NilCase::Orthogonal => (rng.gen_range(2..=6usize), 0),
        // rank 2 needs at least three dimensions
        NilCase::B => (size(rng) + 1, size(rng)),
        _ => (size(rng), size(rng)),
    };
    let n = p + q_;
    let is_plus = |u: usize| u < p;
    let y = match case {
        NilCase::A => leveled(&random_levels(n, 2, rng), rng, |_, _| true),
        NilCase::B => loop {
            // two vectors below the top level, so rank y <= 2
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let mut levels = vec![2; n];
            levels[order[0]] = 0;
            levels[order[1]] = 1;
            let y = leveled(&levels, rng, |_, _| true);
            if y.rank() == 2 {
                break y;
            }
        },
        NilCase::C => {
            let other = if rng.gen_bool(0.5) { 0 } else { 2 };
            let levels: Vec<usize> = (0..n)
                .map(|u| {
                    let coin = rng.gen_bool(0.5);
                    match (is_plus(u), coin) {
                        (true, true) => 0,
                        (true, false) => 2,
                        (false, true) => 1,
                        (false, false) => other,
                    }
                })
                .collect();
            leveled(&levels, rng, |_, _| true)
        }
        NilCase::D => leveled(&random_levels(n, 3, rng), rng, |_, _| true),
        NilCase::E => {
            let levels = random_levels(n, n, rng);
            let mut y = leveled(&levels, rng, |u, v| !(is_plus(u) && is_plus(v)) && is_plus(u) | is_plus(v));
            let t = rng.gen_range(0..=n);
            let (col, row): (Vec<i64>, Vec<i64>) = (0..p)
                .map(|u| {
                    let lo = if levels[u] < t { rng.gen_range(-3..=3) } else { 0 };
                    let hi = if levels[u] >= t { rng.gen_range(-3..=3) } else { 0 };
                    (lo, hi)
                })
                .unzip();
            for u in 0..p {
                for v in 0..p {
                    y[(u, v)] = q(col[u] * row[v]);
                }
            }
            y
        }
        NilCase::F => {
            let levels = random_levels(n, n, rng);
            let t = rng.gen_range(0..=n);
            leveled(&levels, rng, |u, v| match (is_plus(u), is_plus(v)) {
                (true, true) => levels[u] < t && levels[v] >= t,
                (false, false) => false,
                _ => true,
            })
        }
        NilCase::G => leveled(&random_levels(n, n, rng), rng, |_, _| true),
        NilCase::Symplectic | NilCase::Orthogonal => form_instance(case, n, rng),
    };
    let y = if q_ > 0 { conjugate_by_k(&y, p, q_, rng) } else { y };
    NilInstance { case, y, p, q: q_ }
}

/// A nonzero `y` with `Im y ⊆ U ⊆ ker y` for a coordinate subspace `U`
/// and `y − y*` strictly upper triangular.
fn form_instance(case: NilCase, n: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
    let jm = form_matrix(case, n);
    let jinv = jm.inverse().expect("nondegenerate");
    loop {
        let in_u: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let idx = |a: usize, b: usize| a * n + b;
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !(in_u[a] && !in_u[b]) {
                    let mut row = vec![Q::zero(); n * n];
                    row[idx(a, b)] = Q::one();
                    rows.push(row);
                }
            }
        }
        // (y − J⁻¹ yᵀ J)[i][k] = 0 for i >= k
        for i in 0..n {
            for k in 0..=i {
                let mut row = vec![Q::zero(); n * n];
                row[idx(i, k)] += Q::one();
                for a in 0..n {
                    for b in 0..n {
                        let c = &jinv[(i, a)] * &jm[(b, k)];
                        if !c.is_zero() {
                            row[idx(b, a)] -= c;
                        }
                    }
                }
                rows.push(row);
            }
        }
        let k = rows.len();
        let basis = RationalMatrix::from_vec(k, n * n, rows.into_iter().flatten().collect()).nullspace();
        if basis.is_empty() {
            continue;
        }
        let mut y = RationalMatrix::zeros(n, n);
        for v in &basis {
            let c = q(rng.gen_range(-5..=5));
            y = &y + &RationalMatrix::from_vec(n, n, v.clone()).scale(&c);
        }
        if !y.is_zero() {
            return y;
        }
    }
}

/// The 6×6 matrix with nilpotent `y` and `y^θ` whose (−θ)-part is not nilpotent.
pub fn counterexample() -> RationalMatrix {
    let a = RationalMatrix::from_i64(&[vec![0, 1, 0], vec![0, 0, -1], vec![0, 0, 0]]);
    let b = RationalMatrix::from_i64(&[vec![0, 0, 1], vec![0, 0, 0], vec![1, 0, 0]]);
    let mut y = RationalMatrix::zeros(6, 6);
    y.set_block(0, 0, &a);
    y.set_block(0, 3, &RationalMatrix::identity(3));
    y.set_block(3, 0, &b);
    y.set_block(3, 3, &(-&a));
    y
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub y_fourth_power_zero: bool,
    pub theta_cube_zero: bool,
    pub anti_part_nilpotent: bool,
    /// Coefficients of `det(t − y^{−θ})`, constant term first.
    pub anti_charpoly: Vec<Q>,
}

impl CounterexampleReport {
    pub fn confirms(&self) -> bool {
        let mut t6 = vec![Q::zero(); 7];
        t6[6] = Q::one();
        self.y_fourth_power_zero && self.theta_cube_zero && !self.anti_part_nilpotent && self.anti_charpoly != t6
    }
}

pub fn check_counterexample() -> CounterexampleReport {
    let y = counterexample();
    let (theta, anti) = split_theta(&y, 3);
    CounterexampleReport {
        y_fourth_power_zero: y.pow(4).is_zero(),
        theta_cube_zero: theta.pow(3).is_zero(),
        anti_part_nilpotent: anti.is_nilpotent(),
        anti_charpoly: anti.charpoly(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub case: NilCase,
    pub instances: usize,
    pub failures: usize,
    pub precondition_errors: usize,
}

/// Runs `per_case` seeded instances of every case.
pub fn run_suite(seed: u64, per_case: usize) -> Vec<CaseResult> {
    NilCase::ALL
        .iter()
        .enumerate()
        .map(|(ci, &case)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(ci as u64);
            let mut res = CaseResult { case, instances: per_case, failures: 0, precondition_errors: 0 };
            for _ in 0..per_case {
                let inst = random_instance(case, &mut rng);
                match nilpotency_case_check(case, &inst.y, inst.p, inst.q) {
                    Ok(true) => {}
                    Ok(false) => res.failures += 1,
                    Err(_) => res.precondition_errors += 1,
                }
            }
            res
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_case_a() {
        let y = RationalMatrix::from_i64(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(nilpotency_case_check(NilCase::A, &y, 1, 1), Ok(true));
    }

    #[test]
    fn violated_hypotheses_are_errors() {
        let y = RationalMatrix::from_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert!(nilpotency_case_check(NilCase::A, &y, 2, 1).is_err());
        assert!(nilpotency_case_check(NilCase::G, &y, 1, 2).is_err());
        let not_nil = RationalMatrix::identity(2);
        assert!(nilpotency_case_check(NilCase::G, &not_nil, 1, 1).is_err());
        assert!(nilpotency_case_check(NilCase::Symplectic, &RationalMatrix::zeros(3, 3), 3, 0).is_err());
    }

    #[test]
    fn counterexample_is_confirmed() {
        let rep = check_counterexample();
        assert!(rep.y_fourth_power_zero);
        assert!(rep.theta_cube_zero);
        assert!(!rep.anti_part_nilpotent);
        assert!(rep.confirms());
        // satisfies none of the cases
        let y = counterexample();
        for case in [NilCase::A, NilCase::B, NilCase::C, NilCase::D, NilCase::E, NilCase::F, NilCase::G] {
            assert!(nilpotency_case_check(case, &y, 3, 3).is_err(), "{case}");
        }
    }

    #[test]
    fn generated_instances_satisfy_hypotheses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for case in NilCase::ALL {
            for _ in 0..30 {
                let inst = random_instance(case, &mut rng);
                assert_eq!(nilpotency_case_check(case, &inst.y, inst.p, inst.q), Ok(true), "{case}");
            }
        }
    }

    #[test]
    fn adjoint_is_involutive() {
        let y = RationalMatrix::from_i64(&[vec![1, 2, 3, 4], vec![0, 1, 5, 2], vec![7, 1, 0, 0], vec![1, 1, 1, 1]]);
        for case in [NilCase::Symplectic, NilCase::Orthogonal] {
            let j = form_matrix(case, 4);
            assert_eq!(adjoint(&adjoint(&y, &j), &j), y);
        }
    }
}
