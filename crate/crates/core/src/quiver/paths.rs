use std::collections::VecDeque;

use super::{mat_vec, Character, McKayQuiver};
use crate::error::{Error, Result};

/// One arrow of an undirected walk, traversed with (`forward`) or against
/// its orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStep {
    pub arrow: usize,
    pub forward: bool,
}

/// Signed arrow traversal counts of a walk together with its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathVector {
    pub v: Vec<i64>,
    pub kind: Vec<i64>,
}

impl PathVector {
    fn from_steps(quiver: &McKayQuiver, steps: &[WalkStep]) -> Self {
        let mut v = vec![0i64; quiver.num_arrows()];
        for s in steps {
            v[s.arrow] += if s.forward { 1 } else { -1 };
        }
        Self::from_vector(quiver, v)
    }

    pub fn from_vector(quiver: &McKayQuiver, v: Vec<i64>) -> Self {
        let kind = mat_vec(&quiver.incidence().d, &v);
        Self { v, kind }
    }
}

/// Walks `count` arrows labelled `label` from `start`, forward when
/// `count > 0`. Returns the end vertex.
fn walk_label(
    quiver: &McKayQuiver,
    start: usize,
    label: usize,
    count: i64,
    steps: &mut Vec<WalkStep>,
) -> usize {
    let mut at = start;
    for _ in 0..count.unsigned_abs() {
        if count > 0 {
            // The label-`label` arrow with tail `at` has head `at·ρ_label⁻¹`.
            let head = quiver.shift(at, label, -1);
            steps.push(WalkStep {
                arrow: quiver.arrow_index(head, label),
                forward: true,
            });
            at = head;
        } else {
            steps.push(WalkStep {
                arrow: quiver.arrow_index(at, label),
                forward: false,
            });
            at = quiver.shift(at, label, 1);
        }
    }
    at
}

fn subgroup_closure(quiver: &McKayQuiver, base: &[bool], gen_label: usize) -> Vec<bool> {
    let mut out = base.to_vec();
    let mut queue: VecDeque<usize> = (0..out.len()).filter(|&i| out[i]).collect();
    while let Some(v) = queue.pop_front() {
        let w = quiver.shift(v, gen_label, 1);
        if !out[w] {
            out[w] = true;
            queue.push_back(w);
        }
    }
    out
}

/// A directed path from `from` to `to`.
///
/// The path is built from the lexicographically smallest `m ∈ N^n` with
/// `deg(m) = to⁻¹·from`: `m_1` arrows labelled 1, then `m_2` labelled 2, and
/// so on.
pub fn directed_path(quiver: &McKayQuiver, from: &Character, to: &Character) -> Result<PathVector> {
    let g = quiver.group();
    for c in [from, to] {
        if !g.contains(c) {
            return Err(Error::BadCharacter(c.residues.clone()));
        }
    }
    let start = g.index_of(from);
    let target = g.mul(&g.inv(to), from);
    let n = quiver.dim();
    let r = quiver.num_vertices();

    // suffix[i]: subgroup generated by ρ_{i+1}, .., ρ_n (0-based i).
    let mut suffix = vec![vec![false; r]; n + 1];
    suffix[n][0] = true;
    for i in (0..n).rev() {
        suffix[i] = subgroup_closure(quiver, &suffix[i + 1], i + 1);
    }

    let mut m = vec![0i64; n];
    let mut remaining = g.index_of(&target);
    for i in 0..n {
        let label = i + 1;
        let order = g.character_order(&g.weight(label));
        let mut k = 0;
        while !suffix[i + 1][remaining] {
            remaining = quiver.shift(remaining, label, -1);
            k += 1;
            debug_assert!(k < order, "degree map not onto");
        }
        m[i] = k;
    }

    let mut steps = Vec::new();
    let mut at = start;
    for (i, &mi) in m.iter().enumerate() {
        at = walk_label(quiver, at, i + 1, mi, &mut steps);
    }
    debug_assert_eq!(at, g.index_of(to));
    Ok(PathVector::from_steps(quiver, &steps))
}

/// A closed walk from `base` whose type is exactly `m`; arrows of label `i`
/// are taken consecutively and oriented by the sign of `m_i`. When `m ≥ 0`
/// the walk is directed and its vector is nonnegative.
pub fn cycle_from_type(quiver: &McKayQuiver, base: &Character, m: &[i64]) -> Result<PathVector> {
    let g = quiver.group();
    if !g.contains(base) {
        return Err(Error::BadCharacter(base.residues.clone()));
    }
    if m.len() != quiver.dim() {
        return Err(Error::BadShape(format!(
            "type has length {}, expected {}",
            m.len(),
            quiver.dim()
        )));
    }
    if !g.in_m(m) {
        return Err(Error::NotInM(m.to_vec()));
    }
    let mut steps = Vec::new();
    let mut at = g.index_of(base);
    for (i, &mi) in m.iter().enumerate() {
        at = walk_label(quiver, at, i + 1, mi, &mut steps);
    }
    debug_assert_eq!(at, g.index_of(base));
    Ok(PathVector::from_steps(quiver, &steps))
}

/// Writes `θ` as a nonnegative integer combination `u` of the columns of `B`
/// by repeatedly routing flow along a directed path from a vertex with
/// `θ_ρ < 0` to one with `θ_ρ > 0`.
pub fn theta_decompose(quiver: &McKayQuiver, theta: &[i64]) -> Result<Vec<i64>> {
    let r = quiver.num_vertices();
    if theta.len() != r {
        return Err(Error::BadTheta(format!(
            "expected {r} entries, got {}",
            theta.len()
        )));
    }
    if theta.iter().sum::<i64>() != 0 {
        return Err(Error::BadTheta("entries must sum to zero".into()));
    }
    let vertices = quiver.vertices();
    let mut rest = theta.to_vec();
    let mut u = vec![0i64; quiver.num_arrows()];
    while let Some(neg) = rest.iter().position(|&x| x < 0) {
        let pos = rest
            .iter()
            .position(|&x| x > 0)
            .expect("entries sum to zero");
        let units = rest[pos].min(-rest[neg]);
        let path = directed_path(quiver, &vertices[neg], &vertices[pos])?;
        for (ui, pi) in u.iter_mut().zip(&path.v) {
            *ui += units * pi;
        }
        rest[neg] += units;
        rest[pos] -= units;
    }
    Ok(u)
}

/// Realizes an integer vector `u` with `B u = 0` as the vector of a single
/// closed undirected walk starting and ending at the trivial vertex.
///
/// Returns `None` when `B u ≠ 0`.
pub fn closed_walk_of_kernel_vector(quiver: &McKayQuiver, u: &[i64]) -> Option<Vec<WalkStep>> {
    let r = quiver.num_vertices();
    let arrows = quiver.arrows();
    if mat_vec(&quiver.incidence().b, u).iter().any(|&x| x != 0) {
        return None;
    }

    // Oriented multigraph: |u_a| copies of each arrow, pointing the way the
    // walk traverses it. B u = 0 makes every vertex balanced.
    let mut out_edges: Vec<Vec<(usize, WalkStep)>> = vec![Vec::new(); r];
    for (idx, &ua) in u.iter().enumerate() {
        let a = &arrows[idx];
        let (from, to, forward) = if ua > 0 {
            (a.tail, a.head, true)
        } else {
            (a.head, a.tail, false)
        };
        for _ in 0..ua.unsigned_abs() {
            out_edges[from].push((
                to,
                WalkStep {
                    arrow: idx,
                    forward,
                },
            ));
        }
    }

    // Undirected spanning tree of the quiver rooted at the trivial vertex,
    // used to attach every circuit to the base point.
    let mut parent: Vec<Option<(usize, WalkStep)>> = vec![None; r];
    let mut seen = vec![false; r];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for (idx, a) in arrows.iter().enumerate() {
            let next = if a.tail == v {
                Some((
                    a.head,
                    WalkStep {
                        arrow: idx,
                        forward: true,
                    },
                ))
            } else if a.head == v {
                Some((
                    a.tail,
                    WalkStep {
                        arrow: idx,
                        forward: false,
                    },
                ))
            } else {
                None
            };
            if let Some((w, step)) = next {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, step));
                    queue.push_back(w);
                }
            }
        }
    }
    let path_from_base = |target: usize| {
        let mut steps = Vec::new();
        let mut at = target;
        while let Some((p, step)) = parent[at] {
            steps.push(step);
            at = p;
        }
        steps.reverse();
        steps
    };
    let reversed = |steps: &[WalkStep]| -> Vec<WalkStep> {
        steps
            .iter()
            .rev()
            .map(|s| WalkStep {
                arrow: s.arrow,
                forward: !s.forward,
            })
            .collect()
    };

    let mut walk = Vec::new();
    for start in 0..r {
        while !out_edges[start].is_empty() {
            // Hierholzer from `start`.
            let mut stack: Vec<(usize, Option<WalkStep>)> = vec![(start, None)];
            let mut circuit = Vec::new();
            while let Some(&(v, _)) = stack.last() {
                if let Some((w, step)) = out_edges[v].pop() {
                    stack.push((w, Some(step)));
                } else {
                    let (_, step) = stack.pop().unwrap();
                    if let Some(s) = step {
                        circuit.push(s);
                    }
                }
            }
            circuit.reverse();
            let approach = path_from_base(start);
            walk.extend(approach.iter().copied());
            walk.extend(circuit);
            walk.extend(reversed(&approach));
        }
    }
    Some(walk)
}

/// Follows a walk from `start`, returning the vertex it ends at, or `None`
/// if consecutive steps are not incident.
pub fn walk_end(quiver: &McKayQuiver, start: usize, walk: &[WalkStep]) -> Option<usize> {
    let mut at = start;
    for s in walk {
        let a = &quiver.arrows()[s.arrow];
        let (from, to) = if s.forward {
            (a.tail, a.head)
        } else {
            (a.head, a.tail)
        };
        if from != at {
            return None;
        }
        at = to;
    }
    Some(at)
}
