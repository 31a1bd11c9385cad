//! Dense exact linear algebra over a [`Field`].

use crate::scalar::{dot, Field};

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows end up at the bottom.
pub fn rref<T: Field>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = T::one() / rows[top][col].clone();
        for x in rows[top].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank<T: Field>(rows: &[Vec<T>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : M x = 0}` for a matrix with `ncols` columns.
pub fn nullspace<T: Field>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square nonsingular matrix.
pub fn inverse<T: Field>(m: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let k = m.len();
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < k || pivots[k - 1] >= k {
        return None;
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}

/// `M · v`.
pub fn apply<T: Field>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// `x` as a combination of the columns of `basis` (given as a list of
/// column vectors).
pub fn combine<T: Field>(basis: &[Vec<T>], coeffs: &[T], len: usize) -> Vec<T> {
    let mut out = vec![T::zero(); len];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o = o.clone() + c.clone() * x.clone();
        }
    }
    out
}

/// Coefficients `λ` of the orthogonal projection `Σ λ_i b_i` of `v` onto
/// `span(basis)`. Dependent basis vectors get coefficient zero.
pub fn projection_coefficients<T: Field>(v: &[T], basis: &[Vec<T>]) -> Vec<T> {
    let k = basis.len();
    let mut aug: Vec<Vec<T>> = (0..k)
        .map(|i| {
            let mut row: Vec<T> = (0..k).map(|j| dot(&basis[i], &basis[j])).collect();
            row.push(dot(&basis[i], v));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    let mut lambda = vec![T::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        if p < k {
            lambda[p] = aug[i][k].clone();
        }
    }
    lambda
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`.
pub fn project_out<T: Field>(v: &[T], basis: &[Vec<T>]) -> Vec<T> {
    if basis.is_empty() {
        return v.to_vec();
    }
    let lambda = projection_coefficients(v, basis);
    let proj = combine(basis, &lambda, v.len());
    v.iter().zip(proj).map(|(a, b)| a.clone() - b).collect()
}
