use std::collections::BTreeSet;

use super::dd::cone_generators;
use super::linalg::{combine, project_out, projection_coefficients, rref};
use super::{HPolyhedron, Halfspace, VPolyhedron};
use crate::error::{Error, Result};
use crate::scalar::{dot, normalize_direction, normalize_row, Field};

/// Generator description of `h`, or `None` when `h` is empty.
///
/// Vertices and rays are reduced modulo the lineality space, rays and the
/// lineality basis are primitive integer vectors, and every list is sorted.
pub fn h_to_v<T: Field>(h: &HPolyhedron<T>) -> Option<VPolyhedron<T>> {
    let n = h.dim;
    // Homogenize: y = (t, x), t ≥ 0, a·x - b t ≥ 0, e·x - f t = 0.
    let hom = |hs: &Halfspace<T>| {
        let mut row = Vec::with_capacity(n + 1);
        row.push(-hs.offset.clone());
        row.extend(hs.normal.iter().cloned());
        row
    };
    let mut ineqs: Vec<Vec<T>> = h.inequalities.iter().map(hom).collect();
    let mut t_row = vec![T::zero(); n + 1];
    t_row[0] = T::one();
    ineqs.push(t_row);
    let eqs: Vec<Vec<T>> = h.equations.iter().map(hom).collect();

    let gens = cone_generators(&ineqs, &eqs, n + 1);
    let lineality = canonical_basis(gens.lineality.iter().map(|l| l[1..].to_vec()).collect());

    let mut vertices = BTreeSet::new();
    let mut rays = BTreeSet::new();
    for y in &gens.rays {
        let x = project_out(&y[1..], &lineality);
        if y[0].is_positive() {
            let t = y[0].clone();
            vertices.insert(x.into_iter().map(|c| c / t.clone()).collect::<Vec<T>>());
        } else if x.iter().any(|c| !c.is_zero()) {
            rays.insert(normalize_direction(&x));
        }
    }
    if vertices.is_empty() {
        return None;
    }
    Some(VPolyhedron {
        dim: n,
        vertices: vertices.into_iter().collect(),
        rays: rays.into_iter().collect(),
        lineality,
    })
}

/// Irredundant inequality description of `v`, with implicit equations split
/// off. Rows are scaled so that normals are primitive integer vectors, and
/// inequality normals are reduced modulo the equation normals.
pub fn v_to_h<T: Field>(v: &VPolyhedron<T>) -> HPolyhedron<T> {
    let n = v.dim;
    if v.vertices.is_empty() {
        // 0 ≥ 1
        return HPolyhedron {
            dim: n,
            inequalities: vec![Halfspace::new(vec![T::zero(); n], T::one())],
            equations: Vec::new(),
            irredundant: true,
        };
    }
    // Polar cone of the homogenization: (c0, c) with c0 + c·p ≥ 0 on
    // vertices, c·r ≥ 0 on rays, c·l = 0 on lineality.
    let lift = |head: T, x: &[T]| {
        let mut row = Vec::with_capacity(n + 1);
        row.push(head);
        row.extend(x.iter().cloned());
        row
    };
    let mut ineqs: Vec<Vec<T>> = v.vertices.iter().map(|p| lift(T::one(), p)).collect();
    ineqs.extend(v.rays.iter().map(|r| lift(T::zero(), r)));
    let eqs: Vec<Vec<T>> = v.lineality.iter().map(|l| lift(T::zero(), l)).collect();
    let polar = cone_generators(&ineqs, &eqs, n + 1);

    let equations = canonical_equations(
        polar
            .lineality
            .iter()
            .map(|l| Halfspace::new(l[1..].to_vec(), -l[0].clone()))
            .collect(),
    );
    let eq_normals: Vec<Vec<T>> = equations.iter().map(|e| e.normal.clone()).collect();

    let mut inequalities = BTreeSet::new();
    for ray in &polar.rays {
        let c = &ray[1..];
        let lambda = projection_coefficients(c, &eq_normals);
        let proj = combine(&eq_normals, &lambda, n);
        let normal: Vec<T> = c.iter().zip(proj).map(|(a, b)| a.clone() - b).collect();
        let shift = equations
            .iter()
            .zip(&lambda)
            .fold(T::zero(), |acc, (e, l)| acc + l.clone() * e.offset.clone());
        let offset = -ray[0].clone() - shift;
        if let Some((a, b)) = normalize_row(&normal, &offset) {
            inequalities.insert(Halfspace::new(a, b));
        }
    }
    HPolyhedron {
        dim: n,
        inequalities: inequalities.into_iter().collect(),
        equations,
        irredundant: true,
    }
}

/// Image of `v` under `map` (rows × `v.dim`), in canonical form.
pub fn project<T: Field>(v: &VPolyhedron<T>, map: &[Vec<T>]) -> Result<VPolyhedron<T>> {
    if let Some(row) = map.iter().find(|row| row.len() != v.dim) {
        return Err(Error::BadShape(format!(
            "map has {} columns, polyhedron has dimension {}",
            row.len(),
            v.dim
        )));
    }
    let image = |x: &Vec<T>| -> Vec<T> { map.iter().map(|row| dot(row, x)).collect() };
    let vertices: BTreeSet<Vec<T>> = v.vertices.iter().map(image).collect();
    let mut rays = BTreeSet::new();
    for r in v.rays.iter().chain(&v.lineality) {
        let x = image(r);
        if x.iter().any(|c| !c.is_zero()) {
            rays.insert(normalize_direction(&x));
        }
    }
    // Images of lineality directions are recorded as rays in both signs.
    let mut lineality_rays = Vec::new();
    for l in &v.lineality {
        let x = image(l);
        if x.iter().any(|c| !c.is_zero()) {
            lineality_rays.push(normalize_direction(
                &x.iter().map(|c| -c.clone()).collect::<Vec<_>>(),
            ));
        }
    }
    rays.extend(lineality_rays);
    let img = VPolyhedron {
        dim: map.len(),
        vertices: vertices.into_iter().collect(),
        rays: rays.into_iter().collect(),
        lineality: Vec::new(),
    };
    if img.vertices.is_empty() {
        return Ok(img);
    }
    Ok(h_to_v(&v_to_h(&img)).expect("image of a nonempty polyhedron"))
}

/// For each vertex of `v`, the indices of the inequalities of `h` tight at it.
pub fn vertex_facet_incidence<T: Field>(
    h: &HPolyhedron<T>,
    v: &VPolyhedron<T>,
) -> Result<Vec<Vec<usize>>> {
    v.vertices
        .iter()
        .enumerate()
        .map(|(vi, p)| {
            if let Some(k) = h.equations.iter().position(|e| !e.slack(p).is_zero()) {
                return Err(Error::MismatchedDescriptions(format!(
                    "vertex {vi} violates equation {k}"
                )));
            }
            let mut tight = Vec::new();
            for (k, ineq) in h.inequalities.iter().enumerate() {
                let s = ineq.slack(p);
                if s.is_negative() {
                    return Err(Error::MismatchedDescriptions(format!(
                        "vertex {vi} violates inequality {k}"
                    )));
                }
                if s.is_zero() {
                    tight.push(k);
                }
            }
            Ok(tight)
        })
        .collect()
}

/// Primitive, sorted basis of the span of `vectors` in reduced echelon form.
fn canonical_basis<T: Field>(mut vectors: Vec<Vec<T>>) -> Vec<Vec<T>> {
    if vectors.is_empty() {
        return vectors;
    }
    let pivots = rref(&mut vectors);
    vectors.truncate(pivots.len());
    let mut out: Vec<Vec<T>> = vectors.iter().map(|v| normalize_direction(v)).collect();
    out.sort();
    out
}

fn canonical_equations<T: Field>(eqs: Vec<Halfspace<T>>) -> Vec<Halfspace<T>> {
    if eqs.is_empty() {
        return eqs;
    }
    let mut rows: Vec<Vec<T>> = eqs
        .into_iter()
        .map(|e| {
            let mut r = e.normal;
            r.push(e.offset);
            r
        })
        .collect();
    let pivots = rref(&mut rows);
    let n = rows[0].len() - 1;
    let mut out: Vec<Halfspace<T>> = rows
        .into_iter()
        .take(pivots.len())
        .filter_map(|r| normalize_row(&r[..n], &r[n]).map(|(a, b)| Halfspace::new(a, b)))
        .collect();
    out.sort();
    out
}
