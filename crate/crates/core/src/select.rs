//! Sparse vertex selection with a re-checkable containment certificate.
//!
//! Given a polytope `Q = conv{q_1, ..., q_n}` with the origin interior
//! and `Q ⊆ -lambda Q`, the pipeline picks at most `2d` of the `q_i` so
//! that the body `Q'` they span satisfies `Q ⊆ -(lambda + 2) d Q'`:
//!
//! 1. choose `d` vertices `v_1, ..., v_d` maximizing `|det(v_1 ... v_d)|`
//!    (the volume of the simplex `conv{0, v_1, ..., v_d}`), either
//!    exhaustively or by single-exchange local search — either way, no
//!    single exchange can grow the determinant, which traps every point
//!    of `Q` in the parallelotope `P = {sum beta_i v_i : |beta_i| <= 1}`;
//! 2. shoot a ray from the origin opposite the vertex mean
//!    `u = (1/d) sum v_i` to the boundary point `y`;
//! 3. express `y` as a convex combination of at most `d` vertices on a
//!    facet containing it;
//! 4. the selection is the union of the simplex vertices and the
//!    combination's support.
//!
//! Every geometric fact the guarantee rests on is recorded in a
//! [`SelectionCertificate`] and can be re-established from scratch by
//! [`verify_certificate`], which never trusts the construction: it
//! re-checks the convex-combination weights, the parallelotope trap, the
//! shifted-simplex inclusion, the coverage of the ray point, and the
//! final containment factor, reporting the first check that fails.

use std::fmt;

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};

use crate::geom::{HPolytope, Halfspace, VPolytope};
use crate::hull;
use crate::polar;
use crate::{Error, Result};

/// Strategy for the maximum-determinant simplex search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexMode {
    /// Scan all `C(n, d)` vertex subsets; ties resolve to the first in
    /// lexicographic index order.
    GlobalExhaustive,
    /// Greedy seed plus best-improvement single exchanges until no swap
    /// grows `|det|`; single-exchange optimality is exactly what the
    /// parallelotope trap needs.
    LocalSwap,
}

impl fmt::Display for SimplexMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplexMode::GlobalExhaustive => write!(f, "global-exhaustive"),
            SimplexMode::LocalSwap => write!(f, "local-swap"),
        }
    }
}

impl std::str::FromStr for SimplexMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "global-exhaustive" | "exhaustive" => SimplexMode::GlobalExhaustive,
            "local-swap" | "swap" => SimplexMode::LocalSwap,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown simplex mode '{other}' (expected global-exhaustive or local-swap)"
                )))
            }
        })
    }
}

#[derive(Debug, Clone)]
pub struct SimplexChoice {
    /// Indices into the input point list of the nonzero simplex vertices.
    pub indices: Vec<usize>,
    /// Volume of `conv{0, v_1, ..., v_d}`, i.e. `|det| / d!`.
    pub volume: f64,
    pub mode: SimplexMode,
}

#[derive(Debug, Clone)]
pub struct BoundaryPoint {
    /// The boundary point on the ray from the origin through `direction`.
    pub y: DVector<f64>,
    /// Mean of the simplex vertices.
    pub u: DVector<f64>,
    /// Set when `u` was numerically zero and the ray direction fell back
    /// to `-v_1`.  (With linearly independent `v_i` the mean cannot
    /// vanish exactly, so this guards conditioning, not geometry.)
    pub used_fallback_direction: bool,
    /// `gauge(Q, direction)`; `y = direction / gauge`.
    pub gauge_value: f64,
}

#[derive(Debug, Clone)]
pub struct CaratheodorySelection {
    /// Indices into the input point list, support of the combination.
    pub indices: Vec<usize>,
    /// Convex weights aligned with `indices`.
    pub weights: Vec<f64>,
    /// Set when no facet through `y` yielded a combination and the solve
    /// ran over all extreme points instead (support may then reach d+1).
    pub used_facet_fallback: bool,
}

/// The full, re-checkable record of one selection run.
#[derive(Debug, Clone)]
pub struct SelectionCertificate {
    pub dim: usize,
    /// Reflection constant the guarantee was issued for (at least the
    /// measured one).
    pub lambda_used: f64,
    /// Measured least `lambda` with `Q ⊆ -lambda Q`.
    pub lambda_measured: f64,
    /// The certified containment factor `(lambda_used + 2) * dim`.
    pub factor: f64,
    pub simplex: SimplexChoice,
    pub boundary: BoundaryPoint,
    pub caratheodory: CaratheodorySelection,
    /// Sorted union of simplex and combination indices; at most `2 dim`.
    pub qprime_indices: Vec<usize>,
}

/// Identifies the first verification step a certificate fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    /// Combination weights are nonnegative, sum to one, reproduce `y`,
    /// and all recorded indices are consistent.
    WeightsValid,
    /// The selection has at most `2 dim` distinct valid indices and the
    /// simplex indices are part of it.
    SelectionSize,
    /// `y` lies on the boundary of `Q` on the ray opposite `u`.
    BoundaryOnBoundary,
    /// Every extreme point of `Q` lies in the parallelotope of the
    /// simplex vectors.
    ExtremesInParallelotope,
    /// Every parallelotope corner lies in the shifted reflected simplex
    /// `{sum gamma_i v_i : gamma_i <= 1, sum gamma_i >= -dim}`.
    ParallelotopeInShiftedSimplex,
    /// The origin and the pulled-back mean `-u / lambda` lie in `Q'`.
    CenterCovered,
    /// Every extreme point `w` of `Q` satisfies `-w / factor ∈ Q'`.
    ContainmentFactor,
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckId::WeightsValid => "weights-valid",
            CheckId::SelectionSize => "selection-size",
            CheckId::BoundaryOnBoundary => "boundary-on-boundary",
            CheckId::ExtremesInParallelotope => "extremes-in-parallelotope",
            CheckId::ParallelotopeInShiftedSimplex => "parallelotope-in-shifted-simplex",
            CheckId::CenterCovered => "center-covered",
            CheckId::ContainmentFactor => "containment-factor",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub passed: bool,
    pub first_failure: Option<CheckId>,
    /// Outcome of every check, in evaluation order.
    pub details: Vec<(CheckId, bool)>,
}

/// Membership and residual tolerance used by certificate verification.
pub const VERIFY_TOL: f64 = 1e-7;

/// Finds `d` extreme points maximizing the determinant volume of the
/// simplex they span with the origin.
pub fn max_simplex(q: &VPolytope, mode: SimplexMode) -> Result<SimplexChoice> {
    let d = q.dim();
    let hull = hull::convex_hull(q.points())?;
    let ext = &hull.extreme_indices;
    if ext.len() < d {
        return Err(Error::Degenerate);
    }
    let factorial: f64 = (1..=d).map(|k| k as f64).product();
    let det_of = |subset: &[usize]| -> f64 {
        let mut m = DMatrix::zeros(d, d);
        for (k, &i) in subset.iter().enumerate() {
            m.set_column(k, &q.points()[i]);
        }
        m.determinant().abs()
    };

    let indices = match mode {
        SimplexMode::GlobalExhaustive => {
            let mut best: Option<(f64, Vec<usize>)> = None;
            for subset in ext.iter().copied().combinations(d) {
                let v = det_of(&subset);
                let better = match &best {
                    None => true,
                    Some((bv, _)) => v > bv * (1.0 + 1e-12),
                };
                if better {
                    best = Some((v, subset));
                }
            }
            best.expect("at least one subset").1
        }
        SimplexMode::LocalSwap => local_swap_simplex(q, ext, d)?,
    };

    let volume = det_of(&indices) / factorial;
    if volume <= 0.0 {
        return Err(Error::Degenerate);
    }
    Ok(SimplexChoice {
        indices,
        volume,
        mode,
    })
}

fn local_swap_simplex(q: &VPolytope, ext: &[usize], d: usize) -> Result<Vec<usize>> {
    // Greedy seed: largest point, then largest residual off the span.
    let mut chosen: Vec<usize> = Vec::with_capacity(d);
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for _ in 0..d {
        let mut best: Option<(f64, usize)> = None;
        for &i in ext {
            if chosen.contains(&i) {
                continue;
            }
            let mut r = q.points()[i].clone();
            for u in &basis {
                let c = r.dot(u);
                r -= u * c;
            }
            let len = r.norm();
            if best.as_ref().map(|(l, _)| len > *l).unwrap_or(true) {
                best = Some((len, i));
            }
        }
        let (len, i) = best.ok_or(Error::Degenerate)?;
        if len <= 1e-12 {
            return Err(Error::Degenerate);
        }
        let mut r = q.points()[i].clone();
        for u in &basis {
            let c = r.dot(u);
            r -= u * c;
        }
        basis.push(r.clone() / r.norm());
        chosen.push(i);
    }
    chosen.sort_unstable();

    // Best-improvement exchanges: replacing slot k by w scales |det| by
    // |(V^{-1} w)_k|.
    for _ in 0..10_000 {
        let mut vmat = DMatrix::zeros(d, d);
        for (k, &i) in chosen.iter().enumerate() {
            vmat.set_column(k, &q.points()[i]);
        }
        let inv = vmat.lu().try_inverse().ok_or(Error::Degenerate)?;
        let mut best: Option<(f64, usize, usize)> = None;
        for &w in ext {
            if chosen.contains(&w) {
                continue;
            }
            let coords = &inv * &q.points()[w];
            for k in 0..d {
                let ratio = coords[k].abs();
                let better = match &best {
                    None => ratio > 1.0 + 1e-12,
                    Some((br, _, _)) => ratio > br * (1.0 + 1e-12),
                };
                if better {
                    best = Some((ratio, k, w));
                }
            }
        }
        match best {
            Some((_, k, w)) => {
                chosen[k] = w;
                chosen.sort_unstable();
            }
            None => return Ok(chosen),
        }
    }
    Err(Error::IterationLimit)
}

/// The parallelotope `{sum beta_i v_i : |beta_i| <= 1}` of the chosen
/// simplex vectors, in both representations.
pub struct Parallelotope {
    pub vrep: VPolytope,
    pub hrep: HPolytope,
}

pub fn parallelotope(q: &VPolytope, simplex: &SimplexChoice) -> Result<Parallelotope> {
    let d = q.dim();
    let mut vmat = DMatrix::zeros(d, d);
    for (k, &i) in simplex.indices.iter().enumerate() {
        vmat.set_column(k, &q.points()[i]);
    }
    let inv = vmat.clone().lu().try_inverse().ok_or(Error::Degenerate)?;

    let corners = (0..1usize << d)
        .map(|mask| {
            let mut x = DVector::zeros(d);
            for (k, &i) in simplex.indices.iter().enumerate() {
                let sign = if mask >> k & 1 == 1 { 1.0 } else { -1.0 };
                x += &q.points()[i] * sign;
            }
            x
        })
        .collect();

    let mut rows = Vec::with_capacity(2 * d);
    for k in 0..d {
        let normal = inv.row(k).transpose();
        rows.push(Halfspace::new(normal.clone(), 1.0)?);
        rows.push(Halfspace::new(-normal, 1.0)?);
    }
    Ok(Parallelotope {
        vrep: VPolytope::new(d, corners)?,
        hrep: HPolytope::new(d, rows)?,
    })
}

/// Boundary point of `Q` hit by the ray from the origin opposite the
/// simplex vertex mean.
pub fn boundary_point(q: &VPolytope, simplex: &SimplexChoice) -> Result<BoundaryPoint> {
    let d = q.dim();
    let mut u = DVector::zeros(d);
    for &i in &simplex.indices {
        u += &q.points()[i];
    }
    u /= d as f64;

    let scale = simplex
        .indices
        .iter()
        .map(|&i| q.points()[i].norm())
        .fold(0.0, f64::max);
    let used_fallback_direction = u.norm() <= 1e-12 * (1.0 + scale);
    let direction = if used_fallback_direction {
        -&q.points()[simplex.indices[0]]
    } else {
        -&u
    };

    let g = polar::gauge(q, &direction)?;
    if g.value <= 0.0 {
        return Err(Error::Degenerate);
    }
    Ok(BoundaryPoint {
        y: direction / g.value,
        u,
        used_fallback_direction,
        gauge_value: g.value,
    })
}

/// Expresses the boundary point as a convex combination of few extreme
/// points: the solve is restricted to the vertices of one facet through
/// `y` (support at most `d` there), falling back to all extreme points
/// when no facet solve succeeds.
pub fn caratheodory_select(q: &VPolytope, y: &DVector<f64>) -> Result<CaratheodorySelection> {
    let hull = hull::convex_hull(q.points())?;
    let scale = 1.0 + y.norm();

    // Facets through y, lexicographically smallest vertex list first.
    let mut on: Vec<&hull::Facet> = hull
        .facets
        .iter()
        .filter(|f| (f.normal.dot(y) - f.offset).abs() <= VERIFY_TOL * scale)
        .collect();
    on.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    for facet in on {
        if let Ok(combo) = combination_over(q, &facet.vertices, y) {
            return Ok(CaratheodorySelection {
                indices: combo.0,
                weights: combo.1,
                used_facet_fallback: false,
            });
        }
    }
    let combo = combination_over(q, &hull.extreme_indices, y)?;
    Ok(CaratheodorySelection {
        indices: combo.0,
        weights: combo.1,
        used_facet_fallback: true,
    })
}

/// Basic feasible convex combination of `y` over the given point indices;
/// tiny weights are dropped and the rest renormalized, with the residual
/// re-checked afterwards.
fn combination_over(
    q: &VPolytope,
    allowed: &[usize],
    y: &DVector<f64>,
) -> Result<(Vec<usize>, Vec<f64>)> {
    let sub = q.subset(allowed)?;
    let combo = polar::convex_combination(&sub, y, crate::EPS)?;
    let mut indices = Vec::new();
    let mut weights = Vec::new();
    let mut total = 0.0;
    for (local, w) in combo {
        if w > 1e-12 {
            indices.push(allowed[local]);
            weights.push(w);
            total += w;
        }
    }
    if total <= 0.0 {
        return Err(Error::Degenerate);
    }
    for w in &mut weights {
        *w /= total;
    }
    let mut rebuilt = DVector::zeros(q.dim());
    for (&i, &w) in indices.iter().zip(&weights) {
        rebuilt += &q.points()[i] * w;
    }
    if (rebuilt - y).norm() > 1e-8 * (1.0 + y.norm()) {
        return Err(Error::Degenerate);
    }
    let mut order: Vec<usize> = (0..indices.len()).collect();
    order.sort_by_key(|&k| indices[k]);
    Ok((
        order.iter().map(|&k| indices[k]).collect(),
        order.iter().map(|&k| weights[k]).collect(),
    ))
}

/// Runs the full selection pipeline and returns a verified certificate.
///
/// `lambda`: optional caller-supplied reflection constant; the issued
/// guarantee uses the larger of this and the measured constant.  The
/// certificate has already passed [`verify_certificate`]; a construction
/// whose certificate fails verification is reported as
/// [`Error::Verification`] with the failing check.
pub fn sparse_approx(
    q: &VPolytope,
    mode: SimplexMode,
    lambda: Option<f64>,
) -> Result<SelectionCertificate> {
    let d = q.dim();
    let lambda_measured = polar::symmetry_constant(q, crate::EPS)?;
    let lambda_used = match lambda {
        Some(l) => l.max(lambda_measured),
        None => lambda_measured,
    };

    let simplex = max_simplex(q, mode)?;
    let boundary = boundary_point(q, &simplex)?;
    let caratheodory = caratheodory_select(q, &boundary.y)?;

    let qprime_indices: Vec<usize> = simplex
        .indices
        .iter()
        .chain(caratheodory.indices.iter())
        .copied()
        .sorted()
        .dedup()
        .collect();

    let cert = SelectionCertificate {
        dim: d,
        lambda_used,
        lambda_measured,
        factor: (lambda_used + 2.0) * d as f64,
        simplex,
        boundary,
        caratheodory,
        qprime_indices,
    };
    let report = verify_certificate(q, &cert)?;
    match report.first_failure {
        None => Ok(cert),
        Some(id) => Err(Error::Verification(id)),
    }
}

/// Re-establishes every claim of a certificate against the polytope it
/// was issued for.  Nothing from the construction is trusted: all
/// memberships are decided by fresh LP solves, and the simplex system is
/// re-factorized.  All checks run; `first_failure` is the earliest
/// failing one in the order of the [`CheckId`] variants.
pub fn verify_certificate(q: &VPolytope, cert: &SelectionCertificate) -> Result<CheckReport> {
    let d = q.dim();
    let n = q.len();
    let mut details: Vec<(CheckId, bool)> = Vec::new();

    // --- weights reproduce y as a convex combination -----------------
    let weights_ok = {
        let c = &cert.caratheodory;
        let mut ok = c.indices.len() == c.weights.len()
            && !c.indices.is_empty()
            && c.indices.iter().all(|&i| i < n)
            && c.weights.iter().all(|&w| w >= -1e-12)
            && (c.weights.iter().sum::<f64>() - 1.0).abs() <= 1e-9;
        if ok {
            let mut rebuilt = DVector::zeros(d);
            for (&i, &w) in c.indices.iter().zip(&c.weights) {
                rebuilt += &q.points()[i] * w;
            }
            ok = (rebuilt - &cert.boundary.y).norm()
                <= VERIFY_TOL * (1.0 + cert.boundary.y.norm());
        }
        ok
    };
    details.push((CheckId::WeightsValid, weights_ok));

    // --- selection size and index integrity --------------------------
    let size_ok = {
        let s = &cert.qprime_indices;
        s.len() <= 2 * d
            && s.windows(2).all(|w| w[0] < w[1])
            && s.iter().all(|&i| i < n)
            && cert.simplex.indices.len() == d
            && cert.simplex.indices.iter().all(|i| s.contains(i))
            && cert.caratheodory.indices.iter().all(|i| s.contains(i))
    };
    details.push((CheckId::SelectionSize, size_ok));

    // --- boundary point sits on the boundary, on the right ray -------
    let boundary_ok = (|| {
        let b = &cert.boundary;
        let mut u = DVector::zeros(d);
        for &i in &cert.simplex.indices {
            if i >= n {
                return false;
            }
            u += &q.points()[i];
        }
        u /= d as f64;
        if (&u - &b.u).norm() > VERIFY_TOL * (1.0 + u.norm()) {
            return false;
        }
        let direction = if b.used_fallback_direction {
            if u.norm() > 1e-9 * (1.0 + q.points()[cert.simplex.indices[0]].norm()) {
                return false;
            }
            -&q.points()[cert.simplex.indices[0]]
        } else {
            -&u
        };
        let dn = direction.norm();
        let yn = b.y.norm();
        if dn <= 0.0 || yn <= 0.0 {
            return false;
        }
        if (&direction / dn - &b.y / yn).norm() > 1e-7 {
            return false;
        }
        match polar::gauge(q, &b.y) {
            Ok(g) => (g.value - 1.0).abs() <= VERIFY_TOL,
            Err(_) => false,
        }
    })();
    details.push((CheckId::BoundaryOnBoundary, boundary_ok));

    // The remaining checks need the simplex system; if it cannot even be
    // factorized they all fail.
    let vmat_inv = {
        let mut vmat = DMatrix::zeros(d, d);
        if cert.simplex.indices.len() == d && cert.simplex.indices.iter().all(|&i| i < n) {
            for (k, &i) in cert.simplex.indices.iter().enumerate() {
                vmat.set_column(k, &q.points()[i]);
            }
            vmat.lu().try_inverse()
        } else {
            None
        }
    };

    let hull = hull::convex_hull(q.points())?;

    let parallelotope_ok = match &vmat_inv {
        Some(inv) => hull.extreme_indices.iter().all(|&i| {
            let beta = inv * &q.points()[i];
            beta.amax() <= 1.0 + VERIFY_TOL
        }),
        None => false,
    };
    details.push((CheckId::ExtremesInParallelotope, parallelotope_ok));

    let shifted_ok = match &vmat_inv {
        Some(inv) => (0..1usize << d).all(|mask| {
            let mut corner = DVector::zeros(d);
            for (k, &i) in cert.simplex.indices.iter().enumerate() {
                let sign = if mask >> k & 1 == 1 { 1.0 } else { -1.0 };
                corner += &q.points()[i] * sign;
            }
            let gamma = inv * corner;
            gamma.iter().all(|&g| g <= 1.0 + VERIFY_TOL)
                && gamma.sum() >= -(d as f64) - VERIFY_TOL
        }),
        None => false,
    };
    details.push((CheckId::ParallelotopeInShiftedSimplex, shifted_ok));

    let qprime = q.subset(&cert.qprime_indices)?;

    let center_ok = (|| {
        let origin = DVector::zeros(d);
        if !polar::contains(&qprime, &origin, VERIFY_TOL).unwrap_or(false) {
            return false;
        }
        if cert.lambda_used <= 0.0 {
            return false;
        }
        let pulled = -&cert.boundary.u / cert.lambda_used;
        polar::contains(&qprime, &pulled, VERIFY_TOL).unwrap_or(false)
    })();
    details.push((CheckId::CenterCovered, center_ok));

    let factor_ok = cert.factor > 0.0
        && hull.extreme_indices.iter().all(|&i| {
            let target = -&q.points()[i] / cert.factor;
            polar::contains(&qprime, &target, VERIFY_TOL).unwrap_or(false)
        });
    details.push((CheckId::ContainmentFactor, factor_ok));

    let first_failure = details.iter().find(|(_, ok)| !ok).map(|(id, _)| *id);
    Ok(CheckReport {
        passed: first_failure.is_none(),
        first_failure,
        details,
    })
}
