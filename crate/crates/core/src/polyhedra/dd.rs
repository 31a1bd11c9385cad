//! Double description method for homogeneous cones `{y : A y ≥ 0, E y = 0}`.
//!
//! Equations and the lineality space are eliminated first, so the iterative
//! part always runs on a pointed cone. Adjacency between rays uses the
//! combinatorial zero-set test.

use super::linalg::{combine, inverse, nullspace, rank};
use crate::scalar::{dot, normalize_direction, Field};

/// Extreme rays and a lineality basis of a homogeneous cone.
#[derive(Debug, Clone)]
pub struct ConeGenerators<T> {
    pub rays: Vec<Vec<T>>,
    pub lineality: Vec<Vec<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn new(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray<T> {
    coords: Vec<T>,
    zeros: RowSet,
}

/// Generators of `{y ∈ Q^dim : ineqs·y ≥ 0, eqs·y = 0}`.
pub fn cone_generators<T: Field>(
    ineqs: &[Vec<T>],
    eqs: &[Vec<T>],
    dim: usize,
) -> ConeGenerators<T> {
    // y = N z parametrizes the equation subspace.
    let n_basis: Vec<Vec<T>> = if eqs.is_empty() {
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect()
    } else {
        nullspace(eqs, dim)
    };
    let k = n_basis.len();
    let to_y = |z: &[T]| combine(&n_basis, z, dim);
    if k == 0 {
        return ConeGenerators {
            rays: Vec::new(),
            lineality: Vec::new(),
        };
    }
    let a_z: Vec<Vec<T>> = ineqs
        .iter()
        .map(|row| n_basis.iter().map(|col| dot(row, col)).collect())
        .collect();

    // Lineality ker(A_z); restrict to its orthogonal complement W.
    let lin_z = if a_z.is_empty() {
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect()
    } else {
        nullspace(&a_z, k)
    };
    let lineality: Vec<Vec<T>> = lin_z.iter().map(|l| to_y(l)).collect();
    let w_basis: Vec<Vec<T>> = if lin_z.is_empty() {
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect()
    } else {
        nullspace(&lin_z, k)
    };
    if w_basis.is_empty() {
        return ConeGenerators {
            rays: Vec::new(),
            lineality,
        };
    }
    let a_w: Vec<Vec<T>> = a_z
        .iter()
        .map(|row| w_basis.iter().map(|col| dot(row, col)).collect())
        .collect();

    let rays_w = pointed_extreme_rays(&a_w);
    let rays = rays_w
        .into_iter()
        .map(|w| {
            let z = combine(&w_basis, &w, k);
            normalize_direction(&to_y(&z))
        })
        .collect();
    ConeGenerators { rays, lineality }
}

/// Extreme rays of `{w : A w ≥ 0}` where `A` has full column rank.
fn pointed_extreme_rays<T: Field>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let m = a.len();
    let k = a[0].len();
    debug_assert_eq!(rank(a), k);

    // Initial simplicial cone from the first k independent rows.
    let mut basis_rows: Vec<usize> = Vec::with_capacity(k);
    let mut chosen: Vec<Vec<T>> = Vec::with_capacity(k);
    for (i, row) in a.iter().enumerate() {
        chosen.push(row.clone());
        if rank(&chosen) == chosen.len() {
            basis_rows.push(i);
            if basis_rows.len() == k {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    let inv = inverse(&chosen).expect("independent rows");
    let mut rays: Vec<Ray<T>> = (0..k)
        .map(|j| {
            let coords: Vec<T> = inv.iter().map(|row| row[j].clone()).collect();
            let mut zeros = RowSet::new(m);
            for (jj, &r) in basis_rows.iter().enumerate() {
                if jj != j {
                    zeros.insert(r);
                }
            }
            Ray {
                coords: normalize_direction(&coords),
                zeros,
            }
        })
        .collect();

    for (h, row) in a.iter().enumerate() {
        if basis_rows.contains(&h) {
            continue;
        }
        let values: Vec<T> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();

        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if k >= 2 && common.len() < k - 2 {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != q && common.is_subset(&r.zeros));
                if blocked {
                    continue;
                }
                let vp = values[p].clone();
                let vq = -values[q].clone();
                let coords: Vec<T> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(x, y)| vq.clone() * x.clone() + vp.clone() * y.clone())
                    .collect();
                let mut zeros = common;
                zeros.insert(h);
                fresh.push(Ray {
                    coords: normalize_direction(&coords),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray<T>> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros.insert(h);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    rays.into_iter().map(|r| r.coords).collect()
}
