use std::collections::{BTreeSet, VecDeque};

use super::linalg::rank;
use super::{HPolyhedron, Halfspace, VPolyhedron};
use crate::error::{Error, Result};
use crate::lp::{solve, LinearProgram, LpOutcome};
use crate::scalar::{dot, normalize_direction, Field};

/// A cone of a fan, as sorted indices into [`Fan::rays`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FanCone {
    pub rays: Vec<usize>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan<T> {
    pub dim: usize,
    /// Primitive integer generators.
    pub rays: Vec<Vec<T>>,
    /// Every cone of the fan, the zero cone included, sorted by dimension
    /// and then by ray set.
    pub cones: Vec<FanCone>,
    /// Indices into `cones` of the maximal cones, one per vertex.
    pub maximal: Vec<usize>,
    /// The vertex each maximal cone is normal to, parallel to `maximal`.
    pub markers: Vec<Vec<T>>,
}

impl<T: Field> Fan<T> {
    pub fn cone_rays(&self, cone: usize) -> Vec<Vec<T>> {
        self.cones[cone]
            .rays
            .iter()
            .map(|&i| self.rays[i].clone())
            .collect()
    }
}

/// Inner normal fan of a full-dimensional polyhedron given by both of its
/// descriptions. Ray `i` of the fan is the normal of inequality `i` of `h`,
/// so `h` should be irredundant.
pub fn normal_fan<T: Field>(h: &HPolyhedron<T>, v: &VPolyhedron<T>) -> Result<Fan<T>> {
    if !h.equations.is_empty() {
        return Err(Error::NotFullDimensional);
    }
    let tight_vertices = super::vertex_facet_incidence(h, v)?;
    let tight_rays: Vec<BTreeSet<usize>> = v
        .rays
        .iter()
        .map(|r| {
            h.inequalities
                .iter()
                .enumerate()
                .filter(|(_, hs)| dot(&hs.normal, r).is_zero())
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let vertex_sets: Vec<BTreeSet<usize>> = tight_vertices
        .iter()
        .map(|t| t.iter().copied().collect())
        .collect();

    // Closed tight sets are the tight sets of faces; walk upward from the
    // vertices by intersecting with one more generator at a time.
    let closure = |s: &BTreeSet<usize>| -> Option<BTreeSet<usize>> {
        let mut out: Option<BTreeSet<usize>> = None;
        for t in vertex_sets.iter().chain(&tight_rays) {
            if s.is_subset(t) {
                out = Some(match out {
                    None => t.clone(),
                    Some(o) => o.intersection(t).copied().collect(),
                });
            }
        }
        // A face must contain a vertex.
        if !vertex_sets.iter().any(|t| s.is_subset(t)) {
            return None;
        }
        out
    };
    let mut seen: BTreeSet<BTreeSet<usize>> = vertex_sets.iter().cloned().collect();
    let mut queue: VecDeque<BTreeSet<usize>> = seen.iter().cloned().collect();
    while let Some(s) = queue.pop_front() {
        for t in vertex_sets.iter().chain(&tight_rays) {
            if s.is_subset(t) {
                continue;
            }
            let meet: BTreeSet<usize> = s.intersection(t).copied().collect();
            if let Some(c) = closure(&meet) {
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }

    let rays: Vec<Vec<T>> = h
        .inequalities
        .iter()
        .map(|hs| normalize_direction(&hs.normal))
        .collect();
    let mut cones: Vec<FanCone> = seen
        .into_iter()
        .map(|s| {
            let idx: Vec<usize> = s.into_iter().collect();
            let gens: Vec<Vec<T>> = idx.iter().map(|&i| rays[i].clone()).collect();
            FanCone {
                dim: if gens.is_empty() { 0 } else { rank(&gens) },
                rays: idx,
            }
        })
        .collect();
    cones.sort_by(|a, b| (a.dim, &a.rays).cmp(&(b.dim, &b.rays)));
    let maximal = tight_vertices
        .iter()
        .map(|t| {
            cones
                .iter()
                .position(|c| &c.rays == t)
                .expect("vertex cone")
        })
        .collect();
    Ok(Fan {
        dim: h.dim,
        rays,
        cones,
        maximal,
        markers: v.vertices.clone(),
    })
}

/// Index of the cone of `fan` whose relative interior contains `w`.
pub fn locate_cone<T: Field>(fan: &Fan<T>, w: &[T]) -> Result<usize> {
    if w.len() != fan.dim {
        return Err(Error::BadShape(format!(
            "point of length {} for a fan in dimension {}",
            w.len(),
            fan.dim
        )));
    }
    for idx in 0..fan.cones.len() {
        if in_relative_interior(&fan.cone_rays(idx), w)? {
            return Ok(idx);
        }
    }
    Err(Error::OutsideSupport)
}

/// Whether `w = Σ λ_i g_i` with every `λ_i > 0`: maximize `s` subject to
/// that combination, `λ_i ≥ s` and `s ≤ 1`.
fn in_relative_interior<T: Field>(gens: &[Vec<T>], w: &[T]) -> Result<bool> {
    let k = gens.len();
    if k == 0 {
        return Ok(w.iter().all(|x| x.is_zero()));
    }
    let dim = k + 1;
    let unit = |i: usize, c: T| {
        let mut a = vec![T::zero(); dim];
        a[i] = c;
        a
    };
    let mut ineqs = Vec::with_capacity(k + 1);
    for i in 0..k {
        let mut a = unit(i, T::one());
        a[k] = -T::one();
        ineqs.push(Halfspace::new(a, T::zero()));
    }
    ineqs.push(Halfspace::new(unit(k, -T::one()), -T::one()));
    let eqs = (0..w.len())
        .map(|c| {
            let mut a: Vec<T> = gens.iter().map(|g| g[c].clone()).collect();
            a.push(T::zero());
            Halfspace::new(a, w[c].clone())
        })
        .collect();
    let lp = LinearProgram::new(unit(k, -T::one()), HPolyhedron::new(dim, ineqs, eqs)?)?;
    Ok(match solve(&lp)? {
        LpOutcome::Optimal { value, .. } => value.is_negative(),
        _ => false,
    })
}
