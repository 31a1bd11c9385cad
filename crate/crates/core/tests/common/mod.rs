#![allow(dead_code)]

use mckay_core::quiver::{AbelianGroupData, McKayQuiver};
use rand::Rng;

pub fn cyclic(r: i64, a: &[i64]) -> McKayQuiver {
    McKayQuiver::new(AbelianGroupData::cyclic(r, a).unwrap()).unwrap()
}

pub fn klein() -> McKayQuiver {
    McKayQuiver::new(AbelianGroupData::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]]).unwrap())
        .unwrap()
}

/// Small groups used across the suites, one of them non-cyclic.
pub fn suite() -> Vec<McKayQuiver> {
    vec![
        cyclic(3, &[1, 1, 1]),
        cyclic(5, &[1, 2]),
        cyclic(7, &[1, 2]),
        cyclic(4, &[1, 3]),
        cyclic(6, &[1, 2, 3]),
        klein(),
    ]
}

/// A random integral vector of length `r` with entries summing to zero.
pub fn random_theta<R: Rng>(rng: &mut R, r: usize, spread: i64) -> Vec<i64> {
    let mut t: Vec<i64> = (0..r).map(|_| rng.gen_range(-spread..=spread)).collect();
    let s: i64 = t.iter().sum();
    t[0] -= s;
    t
}
