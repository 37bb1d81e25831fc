//! Exact linear-algebra realization of conormal directions, Jordan types and
//! hom dimensions. Every combinatorial map in the crate is checked against it.

pub mod linalg;
pub mod nilpotency;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::orbit::{Indecomposable, StackedPartialPermutation};
use crate::young::{signed_diagram_from_column_counts, Partition, SignedYoungDiagram, YoungError};
use linalg::{q, LinearSubspace, RationalMatrix, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix does not have the required block shape: {0}")]
    WrongBlockShape(String),
    #[error("no sampled type dominates the others after resampling")]
    NotGeneric,
    #[error("sampled y violates a structural identity: {0}")]
    Identity(String),
    #[error(transparent)]
    Young(#[from] YoungError),
}

/// Sampling parameters for generic elements of the conormal directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub trials: usize,
    pub bound: i64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { seed: 0, trials: 5, bound: 20 }
    }
}

/// The `(p+q) × r` matrix ω with the `+` rows on top.
pub fn omega_matrix(w: &StackedPartialPermutation) -> RationalMatrix {
    let (t1, t2) = w.to_matrices();
    let rows: Vec<Vec<i64>> = t1.iter().chain(&t2).map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    RationalMatrix::from_i64(&rows)
}

/// Basis of `{y : Im y ⊆ [ω] ⊆ ker y, diagonal blocks strictly upper triangular}`,
/// as vectors of length `n²` in row-major order.
pub fn conormal_basis(w: &StackedPartialPermutation) -> LinearSubspace {
    let (p, n) = (w.p(), w.p() + w.q());
    let om = omega_matrix(w);
    let ann = LinearSubspace::column_span(&om).annihilator();
    let idx = |a: usize, b: usize| a * n + b;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    // y ω = 0
    for c in 0..om.cols() {
        for a in 0..n {
            let mut row = vec![Q::zero(); n * n];
            for b in 0..n {
                row[idx(a, b)] = om[(b, c)].clone();
            }
            rows.push(row);
        }
    }
    // η y = 0 for η spanning the annihilator of [ω]
    for k in 0..ann.rows() {
        for b in 0..n {
            let mut row = vec![Q::zero(); n * n];
            for a in 0..n {
                row[idx(a, b)] = ann[(k, a)].clone();
            }
            rows.push(row);
        }
    }
    for a in 0..n {
        for b in 0..=a {
            if (a < p) == (b < p) {
                let mut row = vec![Q::zero(); n * n];
                row[idx(a, b)] = Q::one();
                rows.push(row);
            }
        }
    }
    let k = rows.len();
    let system = RationalMatrix::from_vec(k, n * n, rows.into_iter().flatten().collect());
    LinearSubspace::span(n * n, &system.nullspace())
}

pub fn basis_matrices(space: &LinearSubspace, n: usize) -> Vec<RationalMatrix> {
    space.basis().iter().map(|v| RationalMatrix::from_vec(n, n, v.clone())).collect()
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(x: &RationalMatrix) -> Result<Partition, OracleError> {
    let n = x.rows();
    if !x.is_square() || !x.is_nilpotent() {
        return Err(OracleError::NotNilpotent);
    }
    // conjugate parts: dim ker x^k − dim ker x^{k−1}
    let mut conj = Vec::new();
    let mut prev = n;
    let mut power = RationalMatrix::identity(n);
    for _ in 0..n {
        power = &power * x;
        let rk = power.rank();
        if prev > rk {
            conj.push(prev - rk);
        }
        prev = rk;
        if rk == 0 {
            break;
        }
    }
    Ok(Partition::new(conj)?.conjugate())
}

/// Signed Jordan type of `x = [[0, b], [c, 0]]` acting on `V+ ⊕ V−`.
pub fn signed_jordan_type(x: &RationalMatrix, p: usize, q: usize) -> Result<SignedYoungDiagram, OracleError> {
    let n = p + q;
    if x.rows() != n || x.cols() != n {
        return Err(OracleError::WrongBlockShape(format!("expected {n}x{n}")));
    }
    if !x.block(0, p, 0, p).is_zero() || !x.block(p, n, p, n).is_zero() {
        return Err(OracleError::WrongBlockShape("diagonal blocks must vanish".into()));
    }
    if !x.is_nilpotent() {
        return Err(OracleError::NotNilpotent);
    }
    let (plus, minus) = signed_kernel_counts(x, p, q);
    Ok(signed_diagram_from_column_counts(&plus, &minus)?)
}

/// `dim ker x^k ∩ V±` for `k = 1..=n`.
fn signed_kernel_counts(x: &RationalMatrix, p: usize, q: usize) -> (Vec<usize>, Vec<usize>) {
    let n = p + q;
    let mut plus = Vec::with_capacity(n);
    let mut minus = Vec::with_capacity(n);
    let mut power = RationalMatrix::identity(n);
    for _ in 0..n {
        power = &power * x;
        plus.push(p - power.block(0, n, 0, p).rank());
        minus.push(q - power.block(0, n, p, n).rank());
    }
    (plus, minus)
}

fn rank_profile(x: &RationalMatrix) -> Vec<usize> {
    let mut out = Vec::new();
    let mut power = RationalMatrix::identity(x.rows());
    for _ in 0..x.rows() {
        power = &power * x;
        out.push(power.rank());
    }
    out
}

fn sample(basis: &[RationalMatrix], n: usize, rng: &mut ChaCha8Rng, bound: i64) -> RationalMatrix {
    let mut y = RationalMatrix::zeros(n, n);
    for b in basis {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            y = &y + &b.scale(&q(c));
        }
    }
    y
}

/// Checks identities every `y ∈ 𝒟_ω` must satisfy.
fn check_sample(y: &RationalMatrix, p: usize) -> Result<(), OracleError> {
    let n = y.rows();
    if !(y * y).is_zero() {
        return Err(OracleError::Identity("y^2 != 0".into()));
    }
    let (theta, anti) = split_theta(y, p);
    if !theta.block(0, p, 0, p).is_strictly_upper() || !theta.block(p, n, p, n).is_strictly_upper() {
        return Err(OracleError::Identity("theta part is not strictly upper triangular".into()));
    }
    let (mut t2, mut a2) = (RationalMatrix::identity(n), RationalMatrix::identity(n));
    let (theta_sq, anti_sq) = (&theta * &theta, &anti * &anti);
    for m in 1..=n.div_ceil(2) {
        t2 = &t2 * &theta_sq;
        a2 = &a2 * &anti_sq;
        let sign = if m % 2 == 0 { q(1) } else { q(-1) };
        if a2 != t2.scale(&sign) {
            return Err(OracleError::Identity(format!("(y^-θ)^{} != (-1)^{m} (y^θ)^{}", 2 * m, 2 * m)));
        }
    }
    Ok(())
}

/// `(y^θ, y^{−θ})`: block-diagonal and block-anti-diagonal parts.
pub fn split_theta(y: &RationalMatrix, p: usize) -> (RationalMatrix, RationalMatrix) {
    let n = y.rows();
    let mut theta = RationalMatrix::zeros(n, n);
    theta.set_block(0, 0, &y.block(0, p, 0, p));
    theta.set_block(p, p, &y.block(p, n, p, n));
    (theta.clone(), y - &theta)
}

/// Runs `trials` seeded samples, keeps the componentwise-maximal profile, and
/// insists it is attained by at least half of them; retries once with a larger bound.
fn generic_max<T, F>(w: &StackedPartialPermutation, s: Sampling, eval: F) -> Result<T, OracleError>
where
    T: Send,
    F: Fn(&RationalMatrix) -> Result<(Vec<usize>, T), OracleError> + Sync,
{
    let n = w.p() + w.q();
    let basis = basis_matrices(&conormal_basis(w), n);
    let trials = s.trials.max(1);
    for (round, bound) in [(0u64, s.bound), (1, s.bound * 10)] {
        let results: Vec<(Vec<usize>, T)> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
                rng.set_stream(round * trials as u64 + t as u64);
                let y = sample(&basis, n, &mut rng, bound);
                check_sample(&y, w.p())?;
                eval(&y)
            })
            .collect::<Result<_, _>>()?;
        let best = (0..results.len())
            .find(|&i| results.iter().all(|(prof, _)| prof.iter().zip(&results[i].0).all(|(a, b)| a <= b)));
        if let Some(i) = best {
            let hits = results.iter().filter(|(prof, _)| *prof == results[i].0).count();
            if 2 * hits >= trials {
                return Ok(results.into_iter().nth(i).expect("index in range").1);
            }
        }
    }
    Err(OracleError::NotGeneric)
}

/// Jordan pair of the θ-part of a generic conormal direction.
pub fn oracle_phi_k(w: &StackedPartialPermutation, s: Sampling) -> Result<(Partition, Partition), OracleError> {
    let (p, n) = (w.p(), w.p() + w.q());
    generic_max(w, s, |y| {
        let a = y.block(0, p, 0, p);
        let d = y.block(p, n, p, n);
        let mut profile = rank_profile(&a);
        profile.extend(rank_profile(&d));
        Ok((profile, (jordan_type(&a)?, jordan_type(&d)?)))
    })
}

/// Signed Jordan type of the (−θ)-part of a generic conormal direction.
pub fn oracle_phi_s(w: &StackedPartialPermutation, s: Sampling) -> Result<SignedYoungDiagram, OracleError> {
    let (p, q) = (w.p(), w.q());
    generic_max(w, s, |y| {
        let (_, x) = split_theta(y, p);
        let lam = signed_jordan_type(&x, p, q)?;
        let (plus, minus) = signed_kernel_counts(&x, p, q);
        let profile = plus.iter().chain(&minus).map(|k| p + q - k).collect();
        Ok((profile, lam))
    })
}

/// `dim {(A, D) upper triangular : (A ⊕ D)[ω] ⊆ [ω]}`.
pub fn hom_dim(w: &StackedPartialPermutation) -> usize {
    let (p, n) = (w.p(), w.p() + w.q());
    let om = omega_matrix(w);
    let ann = LinearSubspace::column_span(&om).annihilator();
    let unknowns: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).filter(|&(a, b)| (a < p) == (b < p)).collect();
    // the unknown E_ab contributes ann[:, a] ⊗ ω[b, :]
    let (k, r) = (ann.rows(), om.cols());
    let mut system = RationalMatrix::zeros(k * r, unknowns.len());
    for (u, &(a, b)) in unknowns.iter().enumerate() {
        for e in 0..k {
            for c in 0..r {
                system[(e * r + c, u)] = &ann[(e, a)] * &om[(b, c)];
            }
        }
    }
    unknowns.len() - system.rank()
}

/// `dim Hom(I, F_ω)` computed as a subspace intersection.
pub fn hom_with_indec(w: &StackedPartialPermutation, ind: Indecomposable) -> usize {
    let (p, n) = (w.p(), w.p() + w.q());
    let unit = |k: usize| {
        let mut v = vec![Q::zero(); n];
        v[k] = Q::one();
        v
    };
    let flags = |i: usize, j: usize| {
        let vs: Vec<Vec<Q>> = (0..i).map(unit).chain((0..j).map(|b| unit(p + b))).collect();
        LinearSubspace::span(n, &vs)
    };
    let space = LinearSubspace::column_span(&omega_matrix(w));
    match ind {
        Indecomposable::Plus(i) => flags(i, 0).intersection_dim(&space),
        Indecomposable::PlusFree(i) => flags(i, 0).dim(),
        Indecomposable::Minus(j) => flags(0, j).intersection_dim(&space),
        Indecomposable::MinusFree(j) => flags(0, j).dim(),
        Indecomposable::Edge(i, j) => flags(i, j).intersection_dim(&space),
    }
}
