//! Randomized property tests for the geometric invariants the library
//! relies on: gauge homogeneity, hull metrics ignoring non-extreme
//! points, scale invariance of the selection, membership monotonicity
//! under dilation, and verifier acceptance of genuine certificates.

use nalgebra::DVector;
use proptest::prelude::*;

use sparsehull::corpus::{self, BodyKind};
use sparsehull::geom::VPolytope;
use sparsehull::select::{self, SimplexMode};
use sparsehull::{hull, polar};

fn random_body(seed: u64, dim: usize) -> VPolytope {
    corpus::generate(BodyKind::RandomVpoly, dim, 4 * dim, seed, 0)
        .unwrap()
        .vrep
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gauge_is_positively_homogeneous(
        seed in 1u64..500,
        t in 0.1f64..10.0,
        dir in prop::array::uniform3(-1.0f64..1.0),
    ) {
        let x = DVector::from_column_slice(&dir);
        prop_assume!(x.norm() > 1e-3);
        let q = random_body(seed, 3);
        let g = polar::gauge(&q, &x).unwrap().value;
        let gt = polar::gauge(&q, &(&x * t)).unwrap().value;
        prop_assert!(
            (gt - t * g).abs() <= 1e-7 * (1.0 + t * g),
            "gauge({t}x) = {gt} but t*gauge(x) = {}",
            t * g
        );
    }

    #[test]
    fn hull_metrics_ignore_non_extreme_points(
        seed in 1u64..500,
        a in 0.05f64..0.95,
    ) {
        let q = random_body(seed, 2);
        let vol = hull::volume(q.points()).unwrap();
        let diam = hull::diameter(q.points());
        let mut pts = q.points().to_vec();
        let mid = &pts[0] * a + &pts[1] * (1.0 - a);
        pts.push(mid);
        let vol2 = hull::volume(&pts).unwrap();
        let diam2 = hull::diameter(&pts);
        prop_assert!((vol - vol2).abs() <= 1e-9 * vol.max(1.0));
        prop_assert!((diam - diam2).abs() <= 1e-12 * diam.max(1.0));
    }

    #[test]
    fn selection_is_scale_invariant(
        seed in 1u64..200,
        s in 0.2f64..5.0,
    ) {
        let q = random_body(seed, 2);
        let qs = q.scale(s);
        let cert = select::sparse_approx(&q, SimplexMode::LocalSwap, None).unwrap();
        let cert_s = select::sparse_approx(&qs, SimplexMode::LocalSwap, None).unwrap();
        prop_assert_eq!(&cert.qprime_indices, &cert_s.qprime_indices);
        prop_assert!(
            (cert.factor - cert_s.factor).abs() <= 1e-6 * cert.factor,
            "factor changed under scaling: {} vs {}",
            cert.factor,
            cert_s.factor
        );
    }

    #[test]
    fn dilation_keeps_every_extreme_point_inside(
        seed in 1u64..500,
        mu in 1.0f64..3.0,
    ) {
        let q = random_body(seed, 3);
        let blown = q.scale(mu);
        for p in q.points() {
            prop_assert!(polar::contains(&blown, p, 1e-7).unwrap());
        }
    }

    #[test]
    fn verifier_accepts_genuine_certificates(
        seed in 1u64..300,
        dim in 2usize..4,
        symmetric in any::<bool>(),
    ) {
        let kind = if symmetric {
            BodyKind::RandomSymmetricVpoly
        } else {
            BodyKind::RandomVpoly
        };
        let q = corpus::generate(kind, dim, 4 * dim, seed, 0)
            .unwrap()
            .vrep
            .unwrap();
        let cert = select::sparse_approx(&q, SimplexMode::LocalSwap, None).unwrap();
        let report = select::verify_certificate(&q, &cert).unwrap();
        prop_assert!(report.passed, "first failure: {:?}", report.first_failure);
    }
}
