//! Deterministic generation of test bodies.
//!
//! Every instance is a pure function of `(kind, dim, n, seed, index)`:
//! the stream-capable ChaCha generator is seeded with `seed` and moved to
//! stream `index`, so instance `i` of a run never depends on how many
//! instances were drawn before it, and re-running any subset reproduces
//! the same bodies byte for byte.

use std::fmt;
use std::str::FromStr;

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{HPolytope, Halfspace, VPolytope};
use crate::polar;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BodyKind {
    /// `[-1, 1]^d`; both representations, exact.
    Cube,
    /// `conv{±e_i}`; both representations, exact.
    Cross,
    /// Regular simplex with inradius 1 and centroid at the origin — the
    /// body whose normalized position meets the outer radius `d` exactly.
    SimplexJohn,
    /// `n` halfspaces tangent to the unit sphere in random directions.
    TangentHalfspaces,
    /// `n` random points in the radial band `[0.7, 1.3]`, redrawn until
    /// the origin is strictly interior.
    RandomVpoly,
    /// `n` points in ± pairs from the same radial band; symmetric, origin
    /// interior by construction.
    RandomSymmetricVpoly,
}

impl fmt::Display for BodyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BodyKind::Cube => "cube",
            BodyKind::Cross => "cross",
            BodyKind::SimplexJohn => "simplex-john",
            BodyKind::TangentHalfspaces => "tangent-halfspaces",
            BodyKind::RandomVpoly => "random-vpoly",
            BodyKind::RandomSymmetricVpoly => "random-symmetric-vpoly",
        };
        write!(f, "{s}")
    }
}

impl FromStr for BodyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cube" => BodyKind::Cube,
            "cross" => BodyKind::Cross,
            "simplex-john" => BodyKind::SimplexJohn,
            "tangent-halfspaces" => BodyKind::TangentHalfspaces,
            "random-vpoly" => BodyKind::RandomVpoly,
            "random-symmetric-vpoly" => BodyKind::RandomSymmetricVpoly,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown body kind '{other}' (expected cube, cross, simplex-john, \
                     tangent-halfspaces, random-vpoly, or random-symmetric-vpoly)"
                )))
            }
        })
    }
}

/// One generated body; at least one representation is always present,
/// and the exact families carry both.
#[derive(Debug, Clone)]
pub struct Instance {
    pub kind: BodyKind,
    pub dim: usize,
    pub seed: u64,
    pub index: u64,
    pub hrep: Option<HPolytope>,
    pub vrep: Option<VPolytope>,
}

/// Generates instance `index` of the family `(kind, dim, n, seed)`.
/// `n` is the requested row or point count; the exact bodies ignore it.
pub fn generate(kind: BodyKind, dim: usize, n: usize, seed: u64, index: u64) -> Result<Instance> {
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);

    let (hrep, vrep) = match kind {
        BodyKind::Cube => (Some(cube_hrep(dim)?), Some(cube_vrep(dim)?)),
        BodyKind::Cross => (Some(cross_hrep(dim)?), Some(cross_vrep(dim)?)),
        BodyKind::SimplexJohn => {
            let dirs = simplex_directions(dim);
            let rows = dirs
                .iter()
                .map(|u| Halfspace::new(-u, 1.0))
                .collect::<Result<Vec<_>>>()?;
            let verts = dirs.iter().map(|u| u * dim as f64).collect();
            (
                Some(HPolytope::new(dim, rows)?),
                Some(VPolytope::new(dim, verts)?),
            )
        }
        BodyKind::TangentHalfspaces => {
            let rows = (0..n)
                .map(|_| Halfspace::new(sphere_direction(&mut rng, dim), 1.0))
                .collect::<Result<Vec<_>>>()?;
            (Some(HPolytope::new(dim, rows)?), None)
        }
        BodyKind::RandomVpoly => {
            let mut attempts = 0;
            let v = loop {
                let pts: Vec<DVector<f64>> = (0..n)
                    .map(|_| sphere_direction(&mut rng, dim) * rng.random_range(0.7..1.3))
                    .collect();
                let v = VPolytope::new(dim, pts)?;
                if polar::symmetry_constant(&v, crate::EPS).is_ok() {
                    break v;
                }
                attempts += 1;
                if attempts >= 50 {
                    return Err(Error::Degenerate);
                }
            };
            (None, Some(v))
        }
        BodyKind::RandomSymmetricVpoly => {
            let pairs = n.div_ceil(2);
            let mut attempts = 0;
            let v = loop {
                let mut pts = Vec::with_capacity(2 * pairs);
                for _ in 0..pairs {
                    let p = sphere_direction(&mut rng, dim) * rng.random_range(0.7..1.3);
                    pts.push(p.clone());
                    pts.push(-p);
                }
                let v = VPolytope::new(dim, pts)?;
                if polar::symmetry_constant(&v, crate::EPS).is_ok() {
                    break v;
                }
                attempts += 1;
                if attempts >= 50 {
                    return Err(Error::Degenerate);
                }
            };
            (None, Some(v))
        }
    };

    Ok(Instance {
        kind,
        dim,
        seed,
        index,
        hrep,
        vrep,
    })
}

/// Standard normal via Box-Muller.
pub fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.random_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Uniform direction on the unit sphere.
pub fn sphere_direction(rng: &mut ChaCha8Rng, dim: usize) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(dim, |_, _| gaussian(rng));
        let n = v.norm();
        if n > 1e-6 {
            return v / n;
        }
    }
}

/// `d + 1` unit vectors with pairwise inner product `-1/d` summing to
/// zero: the vertex directions of a regular simplex centered at the
/// origin.  Built by projecting the standard basis of `R^{d+1}` onto the
/// hyperplane orthogonal to the all-ones vector.
pub fn simplex_directions(dim: usize) -> Vec<DVector<f64>> {
    let m = dim + 1;
    let ones = DVector::from_element(m, 1.0 / (m as f64).sqrt());
    // Orthonormal basis of the hyperplane ones^perp via Gram-Schmidt on
    // the first d standard basis vectors.
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut v = DVector::zeros(m);
        v[i] = 1.0;
        let c = v.dot(&ones);
        v -= &ones * c;
        for u in &basis {
            let c = v.dot(u);
            v -= u * c;
        }
        basis.push(v.clone() / v.norm());
    }
    (0..m)
        .map(|i| {
            let mut e = DVector::zeros(m);
            e[i] = 1.0;
            let centered = &e - &ones * e.dot(&ones);
            let coords = DVector::from_fn(dim, |k, _| basis[k].dot(&centered));
            let n = coords.norm();
            coords / n
        })
        .collect()
}

fn cube_hrep(dim: usize) -> Result<HPolytope> {
    let mut rows = Vec::new();
    for i in 0..dim {
        for s in [1.0, -1.0] {
            let mut a = DVector::zeros(dim);
            a[i] = s;
            rows.push(Halfspace::new(a, 1.0)?);
        }
    }
    HPolytope::new(dim, rows)
}

fn cube_vrep(dim: usize) -> Result<VPolytope> {
    let pts = (0..1usize << dim)
        .map(|mask| DVector::from_fn(dim, |i, _| if mask >> i & 1 == 1 { 1.0 } else { -1.0 }))
        .collect();
    VPolytope::new(dim, pts)
}

fn cross_vrep(dim: usize) -> Result<VPolytope> {
    let mut pts = Vec::new();
    for i in 0..dim {
        for s in [1.0, -1.0] {
            let mut p = DVector::zeros(dim);
            p[i] = s;
            pts.push(p);
        }
    }
    VPolytope::new(dim, pts)
}

fn cross_hrep(dim: usize) -> Result<HPolytope> {
    let rows = (0..1usize << dim)
        .map(|mask| {
            let a = DVector::from_fn(dim, |i, _| if mask >> i & 1 == 1 { 1.0 } else { -1.0 });
            Halfspace::new(a, 1.0)
        })
        .collect::<Result<Vec<_>>>()?;
    HPolytope::new(dim, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull;
    use approx::assert_relative_eq;

    #[test]
    fn exact_bodies_have_consistent_representations() {
        for kind in [BodyKind::Cube, BodyKind::Cross, BodyKind::SimplexJohn] {
            for dim in [2, 3] {
                let inst = generate(kind, dim, 0, 1, 0).unwrap();
                let h = inst.hrep.unwrap();
                let v = inst.vrep.unwrap();
                // Every listed vertex satisfies the H-representation
                // tightly, and enumeration recovers exactly the list.
                for p in v.points() {
                    assert!(h.contains(p, 1e-9), "{kind} d={dim}");
                }
                let enumerated = hull::vertices_of_hpolytope(&h, 1e-9).unwrap();
                assert_eq!(enumerated.len(), v.len(), "{kind} d={dim}");
                for p in enumerated.points() {
                    assert!(
                        v.points().iter().any(|q| (p - q).norm() < 1e-7),
                        "{kind} d={dim}: vertex {p:?} not listed"
                    );
                }
            }
        }
    }

    #[test]
    fn simplex_directions_geometry() {
        for d in [2, 3, 4, 6] {
            let dirs = simplex_directions(d);
            assert_eq!(dirs.len(), d + 1);
            let mut sum = DVector::zeros(d);
            for u in &dirs {
                assert_relative_eq!(u.norm(), 1.0, epsilon = 1e-12);
                sum += u;
            }
            assert_relative_eq!(sum.norm(), 0.0, epsilon = 1e-10);
            for i in 0..=d {
                for j in 0..i {
                    assert_relative_eq!(
                        dirs[i].dot(&dirs[j]),
                        -1.0 / d as f64,
                        epsilon = 1e-10
                    );
                }
            }
        }
    }

    #[test]
    fn same_seed_and_index_reproduces_bytes() {
        let a = generate(BodyKind::RandomVpoly, 3, 10, 42, 7).unwrap();
        let b = generate(BodyKind::RandomVpoly, 3, 10, 42, 7).unwrap();
        let (va, vb) = (a.vrep.unwrap(), b.vrep.unwrap());
        for (p, q) in va.points().iter().zip(vb.points()) {
            assert_eq!(p.as_slice(), q.as_slice());
        }
        let c = generate(BodyKind::RandomVpoly, 3, 10, 42, 8).unwrap();
        let vc = c.vrep.unwrap();
        assert!(va.points()[0] != vc.points()[0]);
    }

    #[test]
    fn instance_independent_of_draw_order() {
        // Stream separation: generating index 5 directly equals
        // generating it after other indices were produced.
        let direct = generate(BodyKind::RandomSymmetricVpoly, 3, 12, 9, 5).unwrap();
        for i in 0..5 {
            let _ = generate(BodyKind::RandomSymmetricVpoly, 3, 12, 9, i).unwrap();
        }
        let again = generate(BodyKind::RandomSymmetricVpoly, 3, 12, 9, 5).unwrap();
        let (p, q) = (direct.vrep.unwrap(), again.vrep.unwrap());
        for (x, y) in p.points().iter().zip(q.points()) {
            assert_eq!(x.as_slice(), y.as_slice());
        }
    }

    #[test]
    fn random_bodies_have_interior_origin() {
        for seed in 1..=10 {
            for kind in [BodyKind::RandomVpoly, BodyKind::RandomSymmetricVpoly] {
                let inst = generate(kind, 3, 12, seed, 0).unwrap();
                let v = inst.vrep.unwrap();
                assert!(polar::symmetry_constant(&v, 1e-9).is_ok(), "{kind} seed {seed}");
                for p in v.points() {
                    let r = p.norm();
                    assert!((0.7..=1.3).contains(&r), "radius {r}");
                }
            }
        }
    }

    #[test]
    fn tangent_bodies_are_mostly_bounded_at_desk_counts() {
        let mut bounded = 0;
        for seed in 1..=10 {
            let inst = generate(BodyKind::TangentHalfspaces, 3, 20, seed, 0).unwrap();
            if hull::check_bounded(&inst.hrep.unwrap()).is_ok() {
                bounded += 1;
            }
        }
        assert!(bounded >= 9, "only {bounded}/10 tangent bodies bounded");
    }

    #[test]
    fn kind_round_trips_through_strings() {
        for kind in [
            BodyKind::Cube,
            BodyKind::Cross,
            BodyKind::SimplexJohn,
            BodyKind::TangentHalfspaces,
            BodyKind::RandomVpoly,
            BodyKind::RandomSymmetricVpoly,
        ] {
            assert_eq!(kind.to_string().parse::<BodyKind>().unwrap(), kind);
        }
        assert!("frustum".parse::<BodyKind>().is_err());
    }
}
