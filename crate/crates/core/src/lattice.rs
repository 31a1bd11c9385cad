//! Integer lattice algorithms: Hermite normal form, kernel bases and lattice
//! comparison.
//!
//! Matrices are lists of rows. A lattice is represented by a list of
//! generating row vectors.

use num_integer::Integer;
use num_traits::Signed;

/// Integer types usable by the lattice routines.
pub trait LatticeInt: Integer + Signed + Clone + std::fmt::Debug {}

impl<T: Integer + Signed + Clone + std::fmt::Debug> LatticeInt for T {}

/// Reduces `rows` to row echelon form using unimodular row operations and
/// applies the same operations to `track`, if given. Returns the pivot
/// columns; rows past `pivots.len()` are zero afterwards.
fn echelonize<I: LatticeInt>(rows: &mut [Vec<I>], mut track: Option<&mut [Vec<I>]>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        // Euclid on column `col` among rows top.. until one nonzero remains.
        loop {
            let mut best: Option<usize> = None;
            for r in top..rows.len() {
                if !rows[r][col].is_zero()
                    && best.is_none_or(|b| rows[r][col].abs() < rows[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            rows.swap(top, b);
            if let Some(t) = track.as_deref_mut() {
                t.swap(top, b);
            }
            let mut done = true;
            for r in top + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[top][col]);
                sub_multiple(rows, r, top, &q);
                if let Some(t) = track.as_deref_mut() {
                    sub_multiple(t, r, top, &q);
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < rows.len() && !rows[top][col].is_zero() {
            pivots.push(col);
            top += 1;
        }
    }
    pivots
}

fn sub_multiple<I: LatticeInt>(rows: &mut [Vec<I>], target: usize, source: usize, q: &I) {
    if q.is_zero() {
        return;
    }
    let src = rows[source].clone();
    for (x, s) in rows[target].iter_mut().zip(src) {
        *x = x.clone() - q.clone() * s;
    }
}

/// Row-style Hermite normal form of the lattice spanned by `generators`.
/// Zero rows are dropped, pivots are positive and entries above each pivot
/// lie in `[0, pivot)`. Two generator sets span the same lattice iff their
/// normal forms are equal.
pub fn hermite_normal_form<I: LatticeInt>(generators: &[Vec<I>]) -> Vec<Vec<I>> {
    let mut rows = generators.to_vec();
    let pivots = echelonize(&mut rows, None);
    rows.truncate(pivots.len());
    for (i, &col) in pivots.iter().enumerate() {
        if rows[i][col].is_negative() {
            for x in rows[i].iter_mut() {
                *x = -x.clone();
            }
        }
        for j in 0..i {
            let q = rows[j][col].div_floor(&rows[i][col]);
            sub_multiple(&mut rows, j, i, &q);
        }
    }
    rows
}

/// A basis of `{x ∈ Z^k : A x = 0}` for an `m × k` matrix `A`.
pub fn kernel_basis<I: LatticeInt>(matrix: &[Vec<I>], ncols: usize) -> Vec<Vec<I>> {
    // Row-reduce Aᵀ while tracking the unimodular transform; transform rows
    // matching zero rows of the reduced Aᵀ span the kernel.
    let mut transposed: Vec<Vec<I>> = (0..ncols)
        .map(|c| matrix.iter().map(|row| row[c].clone()).collect())
        .collect();
    let mut track: Vec<Vec<I>> = (0..ncols)
        .map(|i| {
            (0..ncols)
                .map(|j| if i == j { I::one() } else { I::zero() })
                .collect()
        })
        .collect();
    if matrix.is_empty() {
        return track;
    }
    let rank = echelonize(&mut transposed, Some(&mut track)).len();
    track.split_off(rank)
}

/// Rank of an integer matrix.
pub fn rank<I: LatticeInt>(matrix: &[Vec<I>]) -> usize {
    let mut rows = matrix.to_vec();
    echelonize(&mut rows, None).len()
}

/// True when the rows of `generators` span all of `Z^dim`.
pub fn spans_full_lattice<I: LatticeInt>(generators: &[Vec<I>], dim: usize) -> bool {
    let hnf = hermite_normal_form(generators);
    hnf.len() == dim
        && hnf.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
}

/// Compares the lattices spanned by two generator lists.
pub fn same_lattice<I: LatticeInt>(a: &[Vec<I>], b: &[Vec<I>]) -> bool {
    hermite_normal_form(a) == hermite_normal_form(b)
}
