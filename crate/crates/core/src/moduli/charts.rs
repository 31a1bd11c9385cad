//! Bounded data for the semigroups `A_σ = N⟨p - m : p ∈ P_θ ∩ (m + M)⟩`.
//!
//! Only a finite window is ever inspected, so the verdict is about that
//! window and never about `A_σ` as a whole.

use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;

use super::PThetaData;
use crate::error::{Error, Result};
use crate::polyhedra::{h_to_v, Halfspace};
use crate::{HPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Saturation {
    /// Every point of `σ^∨ ∩ M` with 1-norm at most the bound lies in `A_σ`.
    SaturatedUpToBound,
    /// A point of `σ^∨ ∩ M` within the bound that is not in `A_σ`.
    NotSaturated(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub vertex: Vec<i64>,
    pub bound: u32,
    /// `p - m` for lattice points `p` of `P_θ` in `m + M` with
    /// `‖p - m‖₁ ≤ bound`, sorted.
    pub generators: Vec<Vec<i64>>,
    pub saturation: Saturation,
}

fn to_i64(x: &Rational) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::Certificate(format!("non-integral value {x}")));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Certificate(format!("value {x} out of range")))
}

fn int_rows(rows: &[Halfspace<Rational>]) -> Result<Vec<(Vec<i64>, i64)>> {
    rows.iter()
        .map(|h| {
            Ok((
                h.normal.iter().map(to_i64).collect::<Result<Vec<_>>>()?,
                to_i64(&h.offset)?,
            ))
        })
        .collect()
}

fn idot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer points of `{ |x|₁ ≤ bound }` in dimension `n`.
fn l1_ball(n: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in -left..=left {
            cur.push(x);
            rec(n, left - x.abs(), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Integer points of the box `lo ≤ x ≤ hi` passing `keep`.
fn box_points(lo: &[i64], hi: &[i64], keep: &dyn Fn(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let n = lo.len();
    let mut out = Vec::new();
    let mut cur = lo.to_vec();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return out;
    }
    loop {
        if keep(&cur) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

/// Chart data at the vertex `m` of `P_θ`.
pub fn chart_at_vertex(pt: &PThetaData, m: &[Rational], bound: u32) -> Result<Chart> {
    let group = pt.quiver.group();
    let n = pt.h.dim;
    let vertex: Vec<i64> = m.iter().map(to_i64).collect::<Result<_>>()?;
    let all = int_rows(&pt.h.inequalities)?;
    let tight: Vec<Vec<i64>> = all
        .iter()
        .filter(|(a, b)| idot(a, &vertex) == *b)
        .map(|(a, _)| a.clone())
        .collect();
    // ℓ lies in the interior of the (full-dimensional) normal cone, so it is
    // positive on σ^∨ away from the origin.
    let ell: Vec<i64> = (0..n).map(|i| tight.iter().map(|a| a[i]).sum()).collect();
    let in_dual = |x: &[i64]| tight.iter().all(|a| idot(a, x) >= 0);
    let in_p = |y: &[i64]| {
        let p: Vec<i64> = vertex.iter().zip(y).map(|(a, b)| a + b).collect();
        all.iter().all(|(a, b)| idot(a, &p) >= *b)
    };

    let window: Vec<Vec<i64>> = l1_ball(n, bound as i64)
        .into_iter()
        .filter(|x| group.in_m(x) && in_dual(x))
        .collect();
    let level = window.iter().map(|x| idot(&ell, x)).max().unwrap_or(0);

    // All of σ^∨ ∩ M up to ℓ-level `level`: bound the region by its vertices.
    let region = HPoly::new(
        n,
        tight
            .iter()
            .map(|a| Halfspace::from_ints(a, 0))
            .chain(std::iter::once(Halfspace::from_ints(
                &ell.iter().map(|x| -x).collect::<Vec<_>>(),
                -level,
            )))
            .collect(),
        Vec::new(),
    )?;
    let rv = h_to_v(&region).ok_or(Error::Empty)?;
    if !rv.rays.is_empty() || !rv.lineality.is_empty() {
        return Err(Error::Certificate("chart region is unbounded".into()));
    }
    let lo: Vec<i64> = (0..n)
        .map(|i| {
            rv.vertices
                .iter()
                .map(|v| v[i].floor().to_integer().to_i64().unwrap())
                .min()
                .unwrap()
        })
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| {
            rv.vertices
                .iter()
                .map(|v| v[i].ceil().to_integer().to_i64().unwrap())
                .max()
                .unwrap()
        })
        .collect();
    let mut pts = box_points(&lo, &hi, &|x: &[i64]| {
        group.in_m(x) && in_dual(x) && idot(&ell, x) <= level
    });
    pts.sort_by_key(|x| (idot(&ell, x), x.clone()));

    let gens: Vec<&Vec<i64>> = pts
        .iter()
        .filter(|y| y.iter().any(|&c| c != 0) && in_p(y))
        .collect();
    let gen_set: HashSet<&Vec<i64>> = gens.iter().copied().collect();
    let mut member: HashMap<&Vec<i64>, bool> = HashMap::with_capacity(pts.len());
    for y in &pts {
        let yes = y.iter().all(|&c| c == 0)
            || gen_set.contains(y)
            || gens.iter().any(|g| {
                let rest: Vec<i64> = y.iter().zip(g.iter()).map(|(a, b)| a - b).collect();
                member.get(&rest).copied().unwrap_or(false)
            });
        member.insert(y, yes);
    }

    let saturation = match window
        .iter()
        .find(|x| !member.get(x).copied().unwrap_or(false))
    {
        None => Saturation::SaturatedUpToBound,
        Some(x) => Saturation::NotSaturated(x.clone()),
    };
    let mut generators: Vec<Vec<i64>> = gens
        .into_iter()
        .filter(|g| g.iter().map(|c| c.abs()).sum::<i64>() <= bound as i64)
        .cloned()
        .collect();
    generators.sort();
    Ok(Chart {
        vertex,
        bound,
        generators,
        saturation,
    })
}
