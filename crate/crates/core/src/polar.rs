//! Polar duality, gauge functionals, and membership tests for polytopes
//! with the origin in their interior.
//!
//! The polar of `{x : a_i·x <= b_i}` (origin strictly inside, so all
//! `b_i > 0`) is the V-polytope spanned by the points `a_i / b_i`; the
//! polar of `conv{v_1, ..., v_n}` is `{x : v_i·x <= 1}`.  Both directions
//! carry provenance: every output vertex or halfspace remembers which
//! input row or point produced it, which is what lets a selection made on
//! a polar body be pulled back to the primal family it came from.

use nalgebra::{DMatrix, DVector};

use crate::geom::{HPolytope, Halfspace, VPolytope};
use crate::hull;
use crate::lp::{self, LpProblem, Sense};
use crate::{Error, Result};

/// Polar of an H-polytope: vertices plus, for each, the index of the
/// defining halfspace row it came from.
#[derive(Debug, Clone)]
pub struct PolarVertices {
    pub polytope: VPolytope,
    pub source_rows: Vec<usize>,
}

/// Polar of a V-polytope: halfspaces plus, for each, the index of the
/// extreme point it came from.
#[derive(Debug, Clone)]
pub struct PolarHalfspaces {
    pub polytope: HPolytope,
    pub source_points: Vec<usize>,
}

/// Value of the gauge (Minkowski functional) together with a conic
/// combination witnessing it: `sum lambda_i q_i = x` with
/// `sum lambda_i = value`, `lambda_i >= 0`.
#[derive(Debug, Clone)]
pub struct GaugeResult {
    pub value: f64,
    pub witness: Vec<(usize, f64)>,
}

/// Polar dual of an H-polytope with the origin strictly inside.
///
/// Requires every row to keep the origin at distance more than `eps`
/// (i.e. `b_i / |a_i| > eps`); otherwise [`Error::OriginNotInterior`].
pub fn polar_of_hrep(h: &HPolytope, eps: f64) -> Result<PolarVertices> {
    let mut points = Vec::with_capacity(h.len());
    let mut source_rows = Vec::with_capacity(h.len());
    for (i, hs) in h.halfspaces().iter().enumerate() {
        if hs.b() / hs.a().norm() <= eps {
            return Err(Error::OriginNotInterior);
        }
        points.push(hs.a() / hs.b());
        source_rows.push(i);
    }
    Ok(PolarVertices {
        polytope: VPolytope::new(h.dim(), points)?,
        source_rows,
    })
}

/// Polar dual of a V-polytope with the origin in its interior: one
/// halfspace `v·x <= 1` per extreme point of the hull.
///
/// The origin-interior precondition is checked through its dual
/// characterization — the polar must be bounded — and violation yields
/// [`Error::OriginNotInterior`].
pub fn polar_of_vrep(v: &VPolytope, _eps: f64) -> Result<PolarHalfspaces> {
    let hull = hull::convex_hull(v.points())?;
    let mut rows = Vec::new();
    let mut source_points = Vec::new();
    for &i in &hull.extreme_indices {
        rows.push(Halfspace::new(v.points()[i].clone(), 1.0)?);
        source_points.push(i);
    }
    let polytope = HPolytope::new(v.dim(), rows)?;
    match hull::check_bounded(&polytope) {
        Ok(()) => {}
        Err(Error::Unbounded) => return Err(Error::OriginNotInterior),
        Err(e) => return Err(e),
    }
    Ok(PolarHalfspaces {
        polytope,
        source_points,
    })
}

/// Gauge of `x` with respect to `conv(points of q)`:
/// `inf {t > 0 : x in t*Q}`, computed as the LP
/// `min sum(lambda)` subject to `sum lambda_i q_i = x`, `lambda >= 0`.
///
/// Fails with [`Error::Infeasible`] when `x` is outside the cone spanned
/// by the points (then no scaling of `Q` ever reaches `x`).
pub fn gauge(q: &VPolytope, x: &DVector<f64>) -> Result<GaugeResult> {
    let d = q.dim();
    if x.len() != d {
        return Err(Error::Dimension {
            expected: d,
            got: x.len(),
        });
    }
    if x.norm() == 0.0 {
        return Ok(GaugeResult {
            value: 0.0,
            witness: Vec::new(),
        });
    }
    let n = q.len();
    let mut e = DMatrix::zeros(d, n);
    for (j, p) in q.points().iter().enumerate() {
        e.set_column(j, p);
    }
    let sol = LpProblem::new(Sense::Minimize, DVector::from_element(n, 1.0))
        .with_eq(e, x.clone())?
        .all_nonneg()
        .solve()
        .into_result()?;
    let value = sol.objective;
    let witness = sol
        .x
        .iter()
        .enumerate()
        .filter(|(_, &l)| l > 1e-12 * (1.0 + value))
        .map(|(i, &l)| (i, l))
        .collect();
    Ok(GaugeResult { value, witness })
}

/// Whether `x` lies in `conv(points of q)`, with slack `eps` on the
/// distance: the LP minimizes the L1 distance from `x` to the hull, and
/// membership means that distance is at most `eps * (1 + |x|)`.
///
/// This is a genuine convex-combination test and stays correct when the
/// origin is not inside `q` (where a gauge comparison would not).
pub fn contains(q: &VPolytope, x: &DVector<f64>, eps: f64) -> Result<bool> {
    let d = q.dim();
    if x.len() != d {
        return Err(Error::Dimension {
            expected: d,
            got: x.len(),
        });
    }
    let n = q.len();
    // Variables: lambda (n), r_minus (d), r_plus (d), all >= 0.
    // Constraints: Q lambda + r_minus - r_plus = x ; sum lambda = 1.
    // Objective: minimize sum(r_minus + r_plus)  (the L1 residual).
    let nv = n + 2 * d;
    let mut e = DMatrix::zeros(d + 1, nv);
    let mut f = DVector::zeros(d + 1);
    for (j, p) in q.points().iter().enumerate() {
        for i in 0..d {
            e[(i, j)] = p[i];
        }
        e[(d, j)] = 1.0;
    }
    for i in 0..d {
        e[(i, n + i)] = 1.0;
        e[(i, n + d + i)] = -1.0;
    }
    for i in 0..d {
        f[i] = x[i];
    }
    f[d] = 1.0;
    let mut c = DVector::zeros(nv);
    for i in n..nv {
        c[i] = 1.0;
    }
    let sol = LpProblem::new(Sense::Minimize, c)
        .with_eq(e, f)?
        .all_nonneg()
        .solve()
        .into_result()?;
    Ok(sol.objective <= eps * (1.0 + x.norm()))
}

/// The least `lambda` with `Q ⊆ -lambda*Q`, for a polytope with the
/// origin in its interior: the maximum of `gauge(Q, -v)` over the extreme
/// points `v` of `Q`.  Always at least 1 (a body cannot fit inside a
/// strictly shrunk reflection of itself).
///
/// Fails with [`Error::OriginNotInterior`] when some facet of the hull
/// passes within `eps` of the origin.
pub fn symmetry_constant(q: &VPolytope, eps: f64) -> Result<f64> {
    let hull = hull::convex_hull(q.points())?;
    for f in &hull.facets {
        if f.offset <= eps {
            return Err(Error::OriginNotInterior);
        }
    }
    let mut lambda: f64 = 0.0;
    for &i in &hull.extreme_indices {
        let g = gauge(q, &(-&q.points()[i]))?;
        lambda = lambda.max(g.value);
    }
    Ok(lambda)
}

/// Convenience: membership via [`lp::basic_feasible_solution`] on the
/// convex-combination system, returning the combination itself.  Useful
/// when the caller needs the weights, not only a yes/no.
pub fn convex_combination(q: &VPolytope, x: &DVector<f64>, eps: f64) -> Result<Vec<(usize, f64)>> {
    let d = q.dim();
    let n = q.len();
    let mut e = DMatrix::zeros(d + 1, n);
    let mut f = DVector::zeros(d + 1);
    for (j, p) in q.points().iter().enumerate() {
        for i in 0..d {
            e[(i, j)] = p[i];
        }
        e[(d, j)] = 1.0;
    }
    for i in 0..d {
        f[i] = x[i];
    }
    f[d] = 1.0;
    let bs = lp::basic_feasible_solution(&e, &f, eps)?;
    Ok(bs
        .support
        .iter()
        .map(|&i| (i, bs.x[i]))
        .collect())
}
