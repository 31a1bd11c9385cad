//! Bounded property checks behind `mckay check`.

use std::collections::BTreeSet;

use mckay_core::lattice::{kernel_basis, same_lattice};
use mckay_core::moduli::{distinguished_rep, ghilb_theta, TightSetPolicy};
use mckay_core::quiver::{
    closed_walk_of_kernel_vector, cycle_from_type, directed_path, kernel_generators_cij, mat_vec,
    theta_decompose, walk_end, McKayQuiver,
};
use mckay_core::Rational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Number of random parameters fed to the decomposition check.
pub const THETA_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    /// `None` on success, otherwise a description of a counterexample.
    pub witness: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

type Check = fn(&McKayQuiver, u32) -> Option<String>;

const CHECKS: [(&str, Check); 6] = [
    ("kernel-lattice", kernel_lattice),
    ("theta-decomposition", decomposition),
    ("directed-paths", paths),
    ("closed-walks", closed_walks),
    ("cycle-types", cycle_types),
    ("relations", relations),
];

pub fn run(quiver: &McKayQuiver, bound: u32) -> Vec<PropertyResult> {
    CHECKS
        .iter()
        .map(|&(name, f)| PropertyResult {
            name,
            witness: f(quiver, bound),
        })
        .collect()
}

/// The `c_{i,j}^ρ` and an HNF kernel basis of `C` span the same lattice.
fn kernel_lattice(q: &McKayQuiver, _: u32) -> Option<String> {
    let gens = kernel_generators_cij(q);
    let basis = kernel_basis(&q.incidence().c, q.num_arrows());
    if same_lattice(&gens, &basis) {
        None
    } else {
        Some(format!(
            "{} generators, kernel basis {:?}",
            gens.len(),
            basis
        ))
    }
}

/// Every integral `θ` is `Bu` for some `u ≥ 0`.
fn decomposition(q: &McKayQuiver, bound: u32) -> Option<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d636b6179);
    let b = q.incidence().b;
    let spread = i64::from(bound.max(1));
    for _ in 0..THETA_SAMPLES {
        let mut theta: Vec<i64> = (0..q.num_vertices())
            .map(|_| rng.gen_range(-spread..=spread))
            .collect();
        let s: i64 = theta.iter().sum();
        theta[0] -= s;
        match theta_decompose(q, &theta) {
            Ok(u) if u.iter().all(|&x| x >= 0) && mat_vec(&b, &u) == theta => {}
            Ok(u) => return Some(format!("theta {theta:?}: bad decomposition {u:?}")),
            Err(e) => return Some(format!("theta {theta:?}: {e}")),
        }
    }
    None
}

fn paths(q: &McKayQuiver, _: u32) -> Option<String> {
    let b = q.incidence().b;
    for (i, from) in q.vertices().iter().enumerate() {
        for (j, to) in q.vertices().iter().enumerate() {
            let Ok(p) = directed_path(q, from, to) else {
                return Some(format!("no path from vertex {i} to vertex {j}"));
            };
            let mut want = vec![0i64; q.num_vertices()];
            want[j] += 1;
            want[i] -= 1;
            if p.v.iter().any(|&x| x < 0) || mat_vec(&b, &p.v) != want {
                return Some(format!("path {:?} from vertex {i} to vertex {j}", p.v));
            }
        }
    }
    None
}

/// Each generator of `ker_Z(C)` is traversed by one closed walk based at the
/// trivial vertex.
fn closed_walks(q: &McKayQuiver, _: u32) -> Option<String> {
    for c in kernel_generators_cij(q) {
        let Some(walk) = closed_walk_of_kernel_vector(q, &c) else {
            return Some(format!("no closed walk for {c:?}"));
        };
        let mut v = vec![0i64; q.num_arrows()];
        for s in &walk {
            v[s.arrow] += if s.forward { 1 } else { -1 };
        }
        if v != c || walk_end(q, 0, &walk) != Some(0) {
            return Some(format!("walk for {c:?} does not close up"));
        }
    }
    None
}

fn small_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::new(), &mut out);
    out
}

/// Types of nonnegative cycles agree with `N^n ∩ M` up to 1-norm `bound`.
fn cycle_types(q: &McKayQuiver, bound: u32) -> Option<String> {
    let g = q.group();
    let (b, d) = {
        let inc = q.incidence();
        (inc.b, inc.d)
    };
    let mut invariants = BTreeSet::new();
    for m in small_vectors(q.dim(), i64::from(bound)) {
        if !g.in_m(&m) {
            continue;
        }
        for base in q.vertices() {
            match cycle_from_type(q, base, &m) {
                Ok(c)
                    if c.v.iter().all(|&x| x >= 0)
                        && mat_vec(&b, &c.v).iter().all(|&x| x == 0)
                        && mat_vec(&d, &c.v) == m => {}
                _ => {
                    return Some(format!(
                        "no nonnegative cycle of type {m:?} at {:?}",
                        base.residues
                    ))
                }
            }
        }
        invariants.insert(m);
    }
    let mut types = BTreeSet::new();
    for v in small_vectors(q.num_arrows(), i64::from(bound)) {
        if mat_vec(&b, &v).iter().all(|&x| x == 0) {
            let t = mat_vec(&d, &v);
            if !g.in_m(&t) {
                return Some(format!("cycle {v:?} has type {t:?} outside M"));
            }
            types.insert(t);
        }
    }
    if types == invariants {
        None
    } else {
        let diff: Vec<_> = types.symmetric_difference(&invariants).take(3).collect();
        Some(format!("cycle types and invariants differ at {diff:?}"))
    }
}

/// Distinguished representations for the `G`-Hilbert parameter satisfy the
/// quiver relations, and `w = 0` gives all ones.
fn relations(q: &McKayQuiver, _: u32) -> Option<String> {
    let Ok(theta) = ghilb_theta(q.group()) else {
        // Only the all-ones labelling exists for the trivial group.
        return q
            .violated_relation(&vec![1; q.num_arrows()])
            .map(|v| format!("all-ones labelling violates {v:?}"));
    };
    let n = q.dim();
    let mut ws = vec![vec![Rational::zero(); n], vec![Rational::one(); n]];
    for i in 0..n {
        let mut w = vec![Rational::zero(); n];
        w[i] = Rational::one();
        ws.push(w);
    }
    for (k, w) in ws.iter().enumerate() {
        let shown: Vec<String> = w.iter().map(ToString::to_string).collect();
        match distinguished_rep(q, &theta, w, TightSetPolicy::WholeFace) {
            Ok(rep) => {
                if let Some(v) =
                    q.violated_relation(&rep.b.iter().map(|&x| i64::from(x)).collect::<Vec<_>>())
                {
                    return Some(format!("w = ({}): relation {v:?} fails", shown.join(",")));
                }
                if k == 0 && rep.b.iter().any(|&x| x != 1) {
                    return Some(format!("w = 0 gives {:?}", rep.b));
                }
            }
            Err(e) => return Some(format!("w = ({}): {e}", shown.join(","))),
        }
    }
    None
}
