//! Large runs of the lifted pipeline. Slow; run with `--ignored`.

use mckay_core::moduli::{lifted_polyhedron, p_theta, GitParameter, Pipeline};
use mckay_core::polyhedra::h_to_v;
use mckay_core::quiver::{AbelianGroupData, McKayQuiver};

const THETA: [i64; 11] = [1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1];

#[test]
#[ignore]
fn lifted_counts_of_one_eleventh() {
    let q = McKayQuiver::new(AbelianGroupData::cyclic(11, &[1, 2, 8]).unwrap()).unwrap();
    let theta = GitParameter::from_ints(&THETA).unwrap();
    let v = h_to_v(&lifted_polyhedron(&q, theta.integral())).unwrap();
    // Cross-checked with an independent exact double description run.
    // Vertices and rays together number 17581.
    assert_eq!(v.vertices.len(), 16951);
    assert_eq!(v.rays.len(), 630);
    assert_eq!(v.vertices.len() + v.rays.len(), 17581);
}

#[test]
#[ignore]
fn lifted_matches_oracle_for_one_eleventh() {
    let q = McKayQuiver::new(AbelianGroupData::cyclic(11, &[1, 2, 8]).unwrap()).unwrap();
    let theta = GitParameter::from_ints(&THETA).unwrap();
    let a = p_theta(&q, &theta, Pipeline::Lifted).unwrap();
    let b = p_theta(&q, &theta, Pipeline::Oracle).unwrap();
    assert_eq!(a.h, b.h);
    assert_eq!(a.v, b.v);
}
