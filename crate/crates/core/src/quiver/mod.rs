//! The McKay quiver of a diagonal abelian group action and its incidence
//! data.
//!
//! Vertices are the characters of the group in canonical order. The arrow
//! `a_i^ρ` runs from `ρ·ρ_i` to `ρ`; arrows are stored in blocks by head
//! vertex, and within a block by label.

mod group;
mod kernel;
mod paths;

use std::collections::VecDeque;

pub use group::{AbelianGroupData, Character};
pub use kernel::{kernel_generators_cij, Binomial};
pub use paths::{
    closed_walk_of_kernel_vector, cycle_from_type, directed_path, theta_decompose, walk_end,
    PathVector, WalkStep,
};

use crate::error::{Error, Result};

/// The arrow `a_i^ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    /// Head vertex `ρ` (index in canonical order).
    pub head: usize,
    /// Tail vertex `ρ·ρ_i`.
    pub tail: usize,
    /// Label `i` in `1..=n`.
    pub label: usize,
}

#[derive(Debug, Clone)]
pub struct McKayQuiver {
    group: AbelianGroupData,
    vertices: Vec<Character>,
    arrows: Vec<Arrow>,
}

impl McKayQuiver {
    pub fn new(group: AbelianGroupData) -> Result<Self> {
        let vertices = group.characters();
        let n = group.dim();
        let mut arrows = Vec::with_capacity(vertices.len() * n);
        for (head, rho) in vertices.iter().enumerate() {
            for label in 1..=n {
                let tail = group.index_of(&group.mul(rho, &group.weight(label)));
                arrows.push(Arrow { head, tail, label });
            }
        }
        let quiver = Self {
            group,
            vertices,
            arrows,
        };
        if !quiver.strongly_connected() {
            // Unreachable for validated groups; kept as a consistency check.
            return Err(Error::NonGenerating);
        }
        Ok(quiver)
    }

    pub fn group(&self) -> &AbelianGroupData {
        &self.group
    }

    pub fn vertices(&self) -> &[Character] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Number of vertices `r`.
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Number of arrows `nr`.
    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    /// Column index of `a_label^{vertex}`.
    pub fn arrow_index(&self, vertex: usize, label: usize) -> usize {
        vertex * self.dim() + (label - 1)
    }

    /// Vertex index of `ρ·ρ_label^e` for a vertex index `ρ`.
    pub fn shift(&self, vertex: usize, label: usize, e: i64) -> usize {
        let g = &self.group;
        let c = g.mul(&self.vertices[vertex], &g.pow(&g.weight(label), e));
        g.index_of(&c)
    }

    fn strongly_connected(&self) -> bool {
        let r = self.num_vertices();
        let reach = |forward: bool| {
            let mut seen = vec![false; r];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(v) = queue.pop_front() {
                for a in &self.arrows {
                    let (from, to) = if forward {
                        (a.tail, a.head)
                    } else {
                        (a.head, a.tail)
                    };
                    if from == v && !seen[to] {
                        seen[to] = true;
                        queue.push_back(to);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    /// Matrices `B`, `C` and `D` in canonical column order.
    pub fn incidence(&self) -> IncidenceData {
        let r = self.num_vertices();
        let n = self.dim();
        let cols = self.num_arrows();
        let mut b = vec![vec![0i64; cols]; r];
        let mut d = vec![vec![0i64; cols]; n];
        for (j, a) in self.arrows.iter().enumerate() {
            b[a.head][j] += 1;
            b[a.tail][j] -= 1;
            d[a.label - 1][j] = 1;
        }
        let c = b.iter().chain(d.iter()).cloned().collect();
        IncidenceData { b, c, d }
    }

    /// Checks the relations `b_j^{ρρ_i} b_i^ρ = b_i^{ρρ_j} b_j^ρ` on a 0/1
    /// (or any integer) arrow labelling. Returns the first violated
    /// `(ρ, i, j)`.
    pub fn violated_relation(&self, b: &[i64]) -> Option<(usize, usize, usize)> {
        assert_eq!(b.len(), self.num_arrows());
        let n = self.dim();
        for rho in 0..self.num_vertices() {
            for i in 1..=n {
                for j in i + 1..=n {
                    let lhs =
                        b[self.arrow_index(self.shift(rho, i, 1), j)] * b[self.arrow_index(rho, i)];
                    let rhs =
                        b[self.arrow_index(self.shift(rho, j, 1), i)] * b[self.arrow_index(rho, j)];
                    if lhs != rhs {
                        return Some((rho, i, j));
                    }
                }
            }
        }
        None
    }
}

/// `B` (r × nr), `C` ((r+n) × nr) and `D` (n × nr).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceData {
    pub b: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
