//! Properties of P_θ, its fan, and distinguished representations.

mod common;

use std::collections::BTreeSet;

use common::{cyclic, klein, random_theta, suite};
use mckay_core::moduli::{
    d_theta, distinguished_rep, fan_of_y_theta, ghilb_theta, p_theta, GitParameter, Pipeline,
    Saturation, TightSetPolicy,
};
use mckay_core::polyhedra::{locate_cone, Halfspace};
use mckay_core::quiver::{mat_vec, McKayQuiver};
use mckay_core::scalar::from_ints;
use mckay_core::{Error, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(v: &[i64]) -> Vec<Rational> {
    from_ints(v)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn two_paths_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for quiver in suite() {
        let mut thetas = vec![vec![0; quiver.num_vertices()]];
        for _ in 0..3 {
            thetas.push(random_theta(&mut rng, quiver.num_vertices(), 3));
        }
        for t in thetas {
            let theta = GitParameter::from_ints(&t).unwrap();
            let a = p_theta(&quiver, &theta, Pipeline::Lifted).unwrap();
            let b = p_theta(&quiver, &theta, Pipeline::Oracle).unwrap();
            assert_eq!(a.h, b.h, "{} {t:?}", quiver.group().describe());
            assert_eq!(a.v, b.v);
        }
    }
}

#[test]
fn zero_parameter_gives_the_orthant() {
    for quiver in suite() {
        let theta = GitParameter::from_ints(&vec![0; quiver.num_vertices()]).unwrap();
        let pt = p_theta(&quiver, &theta, Pipeline::Oracle).unwrap();
        let n = quiver.dim();
        assert_eq!(pt.v.vertices, vec![vec![Rational::zero(); n]]);
        assert_eq!(pt.h.inequalities.len(), n);
        assert_eq!(d_theta(&quiver, &theta).unwrap(), BigInt::zero());
        let tf = fan_of_y_theta(&pt, Some(4)).unwrap();
        assert_eq!(tf.fan.maximal.len(), 1);
        let chart = &tf.charts.unwrap()[0];
        assert_eq!(chart.saturation, Saturation::SaturatedUpToBound);
        // Generators are N^n ∩ M within the bound.
        assert!(chart
            .generators
            .iter()
            .all(|g| g.iter().all(|&x| x >= 0) && quiver.group().in_m(g)));
    }
}

/// Points `Du` for `u ∈ N^{nr}`, `Bu = θ`, `Σu ≤ bound`.
fn brute_force_points(quiver: &McKayQuiver, theta: &[i64], bound: i64) -> BTreeSet<Vec<i64>> {
    let inc = quiver.incidence();
    let m = quiver.num_arrows();
    let mut out = BTreeSet::new();
    let mut u = vec![0i64; m];
    fn rec(
        i: usize,
        left: i64,
        u: &mut Vec<i64>,
        inc: &mckay_core::quiver::IncidenceData,
        theta: &[i64],
        out: &mut BTreeSet<Vec<i64>>,
    ) {
        if i == u.len() {
            if mat_vec(&inc.b, u) == theta {
                out.insert(mat_vec(&inc.d, u));
            }
            return;
        }
        for x in 0..=left {
            u[i] = x;
            rec(i + 1, left - x, u, inc, theta, out);
        }
        u[i] = 0;
    }
    rec(0, bound, &mut u, &inc, theta, &mut out);
    out
}

#[test]
fn brute_force_hull_matches() {
    let groups = vec![
        cyclic(3, &[1, 2]),
        cyclic(4, &[1, 3]),
        cyclic(5, &[1, 2]),
        cyclic(3, &[1, 1, 1]),
        cyclic(2, &[1, 1]),
        klein(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for quiver in groups {
        assert!(quiver.num_arrows() <= 12);
        for _ in 0..3 {
            let t = random_theta(&mut rng, quiver.num_vertices(), 2);
            let pt = p_theta(
                &quiver,
                &GitParameter::from_ints(&t).unwrap(),
                Pipeline::Oracle,
            )
            .unwrap();
            let bound =
                pt.v.vertices
                    .iter()
                    .map(|v| v.iter().map(|x| x.to_integer()).sum::<BigInt>())
                    .max()
                    .unwrap();
            let bound: i64 = bound.try_into().unwrap();
            let pts = brute_force_points(&quiver, &t, bound);
            for p in &pts {
                assert!(pt.h.contains(&q(p)), "{p:?} outside P_theta");
            }
            for v in &pt.v.vertices {
                let v: Vec<i64> = v
                    .iter()
                    .map(|x| x.to_integer().try_into().unwrap())
                    .collect();
                assert!(pts.contains(&v), "vertex {v:?} not realized");
            }
        }
    }
}

#[test]
fn weight_one_example() {
    let quiver = cyclic(3, &[1, 1, 1]);
    let theta = GitParameter::from_ints(&[-2, 1, 1]).unwrap();
    assert_eq!(d_theta(&quiver, &theta).unwrap(), BigInt::from(3));
    let pt = p_theta(&quiver, &theta, Pipeline::Oracle).unwrap();
    let want: BTreeSet<Halfspace<Rational>> = [
        Halfspace::from_ints(&[1, 1, 1], 3),
        Halfspace::from_ints(&[1, 0, 0], 0),
        Halfspace::from_ints(&[0, 1, 0], 0),
        Halfspace::from_ints(&[0, 0, 1], 0),
    ]
    .into_iter()
    .collect();
    assert_eq!(
        pt.h.inequalities.iter().cloned().collect::<BTreeSet<_>>(),
        want
    );
    let tf = fan_of_y_theta(&pt, Some(6)).unwrap();
    assert_eq!(tf.fan.maximal.len(), 3);
    let diag = tf
        .fan
        .rays
        .iter()
        .position(|r| *r == q(&[1, 1, 1]))
        .unwrap();
    for &m in &tf.fan.maximal {
        assert!(tf.fan.cones[m].rays.contains(&diag));
    }
    for chart in tf.charts.unwrap() {
        assert_eq!(chart.saturation, Saturation::SaturatedUpToBound);
    }
}

#[test]
fn d_theta_is_the_smallest_vertex_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for quiver in suite() {
        let t = random_theta(&mut rng, quiver.num_vertices(), 4);
        let theta = GitParameter::from_ints(&t).unwrap();
        let pt = p_theta(&quiver, &theta, Pipeline::Oracle).unwrap();
        let min =
            pt.v.vertices
                .iter()
                .map(|v| v.iter().fold(Rational::zero(), |a, x| a + x))
                .min()
                .unwrap();
        assert_eq!(
            Rational::from_integer(d_theta(&quiver, &theta).unwrap()),
            min
        );
    }
    let half = GitParameter::new(vec![rat(-1, 2), rat(1, 2), Rational::zero()]).unwrap();
    assert!(matches!(
        d_theta(&cyclic(3, &[1, 1, 1]), &half),
        Err(Error::BadTheta(_))
    ));
}

#[test]
fn zero_w_gives_all_ones() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for quiver in suite().into_iter().chain([cyclic(11, &[1, 2, 8])]) {
        for _ in 0..3 {
            let t = random_theta(&mut rng, quiver.num_vertices(), 5);
            let theta = GitParameter::from_ints(&t).unwrap();
            let rep = distinguished_rep(
                &quiver,
                &theta,
                &vec![Rational::zero(); quiver.dim()],
                TightSetPolicy::WholeFace,
            )
            .unwrap();
            assert!(rep.b.iter().all(|&x| x == 1));
        }
    }
}

#[test]
fn negative_w_and_bad_theta_are_rejected() {
    let quiver = cyclic(5, &[1, 2]);
    let theta = GitParameter::from_ints(&[-4, 1, 1, 1, 1]).unwrap();
    assert!(matches!(
        distinguished_rep(&quiver, &theta, &q(&[1, -1]), TightSetPolicy::WholeFace),
        Err(Error::NegativeW(_))
    ));
    let short = GitParameter::from_ints(&[-1, 1]).unwrap();
    assert!(matches!(
        distinguished_rep(&quiver, &short, &q(&[1, 1]), TightSetPolicy::WholeFace),
        Err(Error::BadTheta(_))
    ));
}

/// Random point in the relative interior of a cone.
fn interior_point<R: Rng>(rng: &mut R, rays: &[Vec<Rational>], n: usize) -> Vec<Rational> {
    let mut w = vec![Rational::zero(); n];
    for r in rays {
        let c = rat(rng.gen_range(1..=9), rng.gen_range(1..=4));
        for (x, y) in w.iter_mut().zip(r) {
            *x += &c * y;
        }
    }
    w
}

#[test]
fn reps_are_functions_of_the_cone() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let cases = vec![
        (
            cyclic(7, &[1, 2]),
            ghilb_theta(cyclic(7, &[1, 2]).group()).unwrap(),
        ),
        (
            cyclic(3, &[1, 1, 1]),
            GitParameter::from_ints(&[-2, 1, 1]).unwrap(),
        ),
        (
            cyclic(6, &[1, 2, 3]),
            GitParameter::from_ints(&[-3, 2, -1, 1, 0, 1]).unwrap(),
        ),
        (klein(), GitParameter::from_ints(&[-3, 1, 1, 1]).unwrap()),
    ];
    for (quiver, theta) in cases {
        let pt = p_theta(&quiver, &theta, Pipeline::Oracle).unwrap();
        let fan = fan_of_y_theta(&pt, None).unwrap().fan;
        let n = quiver.dim();
        for c in 0..fan.cones.len() {
            let rays = fan.cone_rays(c);
            let w1 = interior_point(&mut rng, &rays, n);
            let w2 = interior_point(&mut rng, &rays, n);
            assert_eq!(locate_cone(&fan, &w1).unwrap(), c);
            assert_eq!(locate_cone(&fan, &w2).unwrap(), c);
            let b1 = distinguished_rep(&quiver, &theta, &w1, TightSetPolicy::WholeFace).unwrap();
            let b2 = distinguished_rep(&quiver, &theta, &w2, TightSetPolicy::WholeFace).unwrap();
            assert_eq!(b1.b, b2.b, "cone {c} of {}", quiver.group().describe());

            // Positive rescaling of θ and w changes nothing.
            let lambda = rat(7, 3);
            let scaled_theta =
                GitParameter::new(theta.theta().iter().map(|t| t * &lambda).collect()).unwrap();
            let scaled_w: Vec<Rational> = w1.iter().map(|x| x * rat(5, 2)).collect();
            let b3 =
                distinguished_rep(&quiver, &scaled_theta, &scaled_w, TightSetPolicy::WholeFace)
                    .unwrap();
            assert_eq!(b1.b, b3.b);

            if let Ok(single) =
                distinguished_rep(&quiver, &theta, &w1, TightSetPolicy::SingleOptimizer)
            {
                assert!(b1.tight.iter().all(|k| single.tight.contains(k)));
            }
        }
    }
}

#[test]
fn fan_covers_the_orthant() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let quiver = cyclic(11, &[1, 2, 8]);
    let theta = GitParameter::from_ints(&[1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1]).unwrap();
    let pt = p_theta(&quiver, &theta, Pipeline::Oracle).unwrap();
    let fan = fan_of_y_theta(&pt, None).unwrap().fan;
    for _ in 0..50 {
        let w: Vec<Rational> = (0..3)
            .map(|_| rat(rng.gen_range(0..=20), rng.gen_range(1..=5)))
            .collect();
        locate_cone(&fan, &w).unwrap();
    }
    assert_eq!(
        locate_cone(&fan, &q(&[1, -1, 2])),
        Err(Error::OutsideSupport)
    );

    // Adjacent vertices share exactly a two-dimensional wall.
    for (i, &a) in fan.maximal.iter().enumerate() {
        for &b in &fan.maximal[i + 1..] {
            let common: Vec<usize> = fan.cones[a]
                .rays
                .iter()
                .filter(|r| fan.cones[b].rays.contains(r))
                .copied()
                .collect();
            if common.len() >= 2 {
                let wall = fan
                    .cones
                    .iter()
                    .find(|c| c.rays == common)
                    .expect("wall is a cone");
                assert_eq!(wall.dim, 2);
            }
        }
    }
    let _ = Rational::one();
}
