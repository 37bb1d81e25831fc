//! The `(Sp_2n, GL_n)` double flag variety inside the `(GL_2n, GL_n × GL_n)` one.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::linalg::RationalMatrix;
use crate::orbit::{enumerate_orbits, OrbitError, StackedPartialPermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CiError {
    #[error("expected p = q = r, got ({0}, {1}, {2})")]
    Shape(usize, usize, usize),
    #[error("completion failed for {omega}: {reason}")]
    Completion { omega: String, reason: &'static str },
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiOrbit {
    pub n: usize,
    pub omega: StackedPartialPermutation,
    pub symmetric: bool,
    pub ambient_dim: usize,
}

fn check_shape(w: &StackedPartialPermutation) -> Result<usize, CiError> {
    let (p, q, r) = w.dims();
    if p != q || q != r {
        return Err(CiError::Shape(p, q, r));
    }
    Ok(p)
}

/// `τ₁ᵀτ₂` as an `n × n` 0/1 matrix.
pub fn gram(w: &StackedPartialPermutation) -> Result<Vec<Vec<u8>>, CiError> {
    let n = check_shape(w)?;
    let cols = w.columns();
    let mut m = vec![vec![0u8; n]; n];
    for (k, a) in cols.iter().enumerate() {
        for (l, b) in cols.iter().enumerate() {
            if a.plus.is_some() && a.plus == b.minus {
                m[k][l] = 1;
            }
        }
    }
    Ok(m)
}

/// `τ₁ᵀτ₂` is symmetric.
pub fn is_symplectic(w: &StackedPartialPermutation) -> Result<bool, CiError> {
    let m = gram(w)?;
    Ok((0..m.len()).all(|k| (0..k).all(|l| m[k][l] == m[l][k])))
}

/// A pair of `n × n` 0/1 matrices stacked as `(top; bottom)`.
pub type MatrixPair = (Vec<Vec<u8>>, Vec<Vec<u8>>);

/// Columns `(ξ₁; ξ₂)` completing `ω`: `(e_i; e_j)` per edge, `(e_i; 0)` per free `+`
/// point and `(0; e_j)` per free `−` point.
pub fn complete_xi(w: &StackedPartialPermutation) -> Result<MatrixPair, CiError> {
    let n = check_shape(w)?;
    let g = w.graph();
    let mut cols: Vec<(Option<usize>, Option<usize>)> = Vec::with_capacity(n);
    cols.extend(g.edges.iter().map(|&(i, j)| (Some(i), Some(j))));
    cols.extend(g.free_plus.iter().map(|&i| (Some(i), None)));
    cols.extend(g.free_minus.iter().map(|&j| (None, Some(j))));
    let fail = |reason| CiError::Completion { omega: w.to_string(), reason };
    if cols.len() != n {
        return Err(fail("wrong number of columns"));
    }
    let mut xi1 = vec![vec![0u8; n]; n];
    let mut xi2 = vec![vec![0u8; n]; n];
    for (c, &(i, j)) in cols.iter().enumerate() {
        if let Some(i) = i {
            xi1[i - 1][c] = 1;
        }
        if let Some(j) = j {
            xi2[j - 1][c] = 1;
        }
    }

    let xi = StackedPartialPermutation::canonicalize(&xi1, &xi2).map_err(|_| fail("not a partial permutation"))?;
    let to_q = |m: &[Vec<u8>]| {
        RationalMatrix::from_i64(&m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect::<Vec<_>>())
    };
    let (t1, t2) = w.to_matrices();
    let (t1, t2, x1, x2) = (to_q(&t1), to_q(&t2), to_q(&xi1), to_q(&xi2));
    let stacked = {
        let mut m = RationalMatrix::zeros(2 * n, n);
        m.set_block(0, 0, &x1);
        m.set_block(n, 0, &x2);
        m
    };
    if xi.r() != n || stacked.rank() != n {
        return Err(fail("completion is not of full rank"));
    }
    let mut gm = RationalMatrix::zeros(2 * n, 2 * n);
    gm.set_block(0, 0, &t1);
    gm.set_block(n, 0, &t2);
    gm.set_block(0, n, &x1);
    gm.set_block(n, n, &(-&x2));
    if gm.rank() != 2 * n {
        return Err(fail("g is singular"));
    }
    let ortho = &(&x1.transpose() * &t1) - &(&x2.transpose() * &t2);
    if !ortho.is_zero() {
        return Err(fail("orthogonality fails"));
    }
    Ok((xi1, xi2))
}

/// The involution `ω ↦ (ξ₂; ξ₁)` in canonical form.
pub fn sigma(w: &StackedPartialPermutation) -> Result<StackedPartialPermutation, CiError> {
    let (xi1, xi2) = complete_xi(w)?;
    Ok(StackedPartialPermutation::canonicalize(&xi2, &xi1)?)
}

/// Orbits of `enumerate_orbits(n, n, n)` with `τ₁ᵀτ₂` symmetric.
pub fn enumerate_ci_orbits(n: usize) -> Result<Vec<CiOrbit>, CiError> {
    let all = enumerate_orbits(n, n, n)?;
    let flags: Vec<bool> = all.par_iter().map(is_symplectic).collect::<Result<_, _>>()?;
    Ok(all
        .into_iter()
        .zip(flags)
        .filter(|(_, s)| *s)
        .map(|(omega, _)| CiOrbit { n, ambient_dim: omega.dim_orbit(), omega, symmetric: true })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::OrbitColumn;

    fn om(n: usize, cols: Vec<OrbitColumn>) -> StackedPartialPermutation {
        StackedPartialPermutation::new(n, n, cols).unwrap()
    }

    #[test]
    fn symmetric_examples() {
        let id = om(3, (1..=3).map(|i| OrbitColumn::edge(i, i)).collect());
        assert!(is_symplectic(&id).unwrap());
        let w = om(2, vec![OrbitColumn::marked_plus(1), OrbitColumn::edge(2, 1)]);
        assert!(!is_symplectic(&w).unwrap());
        let w = om(2, vec![OrbitColumn::edge(1, 2), OrbitColumn::edge(2, 1)]);
        assert!(is_symplectic(&w).unwrap());
        let bad = StackedPartialPermutation::new(2, 2, vec![OrbitColumn::edge(1, 1)]).unwrap();
        assert_eq!(is_symplectic(&bad), Err(CiError::Shape(2, 2, 1)));
    }

    #[test]
    fn completion_examples() {
        let w = om(2, vec![OrbitColumn::marked_plus(1), OrbitColumn::marked_plus(2)]);
        let (x1, x2) = complete_xi(&w).unwrap();
        assert!(x1.iter().flatten().all(|&x| x == 0));
        assert_eq!(x2, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(sigma(&w).unwrap(), w);
        let e = om(1, vec![OrbitColumn::edge(1, 1)]);
        assert_eq!(complete_xi(&e).unwrap(), (vec![vec![1]], vec![vec![1]]));
        assert_eq!(sigma(&e).unwrap(), e);
    }

    #[test]
    fn sigma_fixed_points_are_symmetric() {
        for n in 1..=3 {
            for w in enumerate_orbits(n, n, n).unwrap() {
                let s = sigma(&w).unwrap();
                assert_eq!(sigma(&s).unwrap(), w);
                assert_eq!(s == w, is_symplectic(&w).unwrap(), "{w}");
                let g = gram(&w).unwrap();
                let gt: Vec<Vec<u8>> = (0..n).map(|k| (0..n).map(|l| g[l][k]).collect()).collect();
                assert_eq!(is_symplectic(&w).unwrap(), g == gt);
            }
        }
    }

    #[test]
    fn ci_counts() {
        assert_eq!(enumerate_ci_orbits(1).unwrap().len(), 3);
        let two = enumerate_ci_orbits(2).unwrap();
        assert!(two.iter().all(|o| o.symmetric && o.ambient_dim == o.omega.dim_orbit()));
    }
}
