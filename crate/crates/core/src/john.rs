//! Maximal inscribed ellipsoids (John ellipsoids) of bounded H-polytopes,
//! and the affine normalization that sandwiches a body between the unit
//! ball and `d` times the unit ball.
//!
//! The ellipsoid `{c + E u : |u| <= 1}` (E symmetric positive definite)
//! lies inside `{x : a_i·x <= b_i}` exactly when `|E a_i| + a_i·c <= b_i`
//! for every row.  Maximizing `log det E` under those constraints is a
//! convex problem; it is solved here with a standard log-barrier
//! interior-point method: minimize
//! `phi_t = -t log det E - sum_i log(b_i - a_i·c - |E a_i|)`
//! by damped Newton steps over `(c, E)`, multiplying `t` by a fixed
//! factor once each inner problem is solved.  The barrier term keeps every
//! iterate strictly feasible, so the result is always a genuinely
//! inscribed ellipsoid, with optimality controlled by the final `t`.

use nalgebra::{Cholesky, DMatrix, DVector};

use crate::geom::{AffineMap, Ellipsoid, HPolytope};
use crate::hull;
use crate::{Error, Result};

/// Hard cap on damped Newton steps across all barrier stages.
pub const MAX_NEWTON_STEPS: usize = 200;

/// Inner solves run until the Newton decrement satisfies
/// `lambda^2 / 2 <= NEWTON_TOL` (stage suboptimality is then about
/// `lambda^2`, far below the outer duality gap), or until the barrier
/// value stops improving relative to its own floating-point resolution —
/// at large barrier parameters the decrement bottoms out on roundoff
/// noise before reaching any fixed absolute threshold.
const NEWTON_TOL: f64 = 1e-11;

/// Stage progress guard: relative improvement of the barrier value below
/// this ends the stage.
const STAGE_REL_TOL: f64 = 1e-12;

/// Barrier parameter growth factor per stage.
const T_GROWTH: f64 = 20.0;

/// Outer stop: the duality gap of the barrier subproblem is at most
/// `m / t`, so iterate until `m / t` falls below this.
const GAP_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct InscribedEllipsoid {
    pub ellipsoid: Ellipsoid,
    /// Worst row slack ratio `(b_i - a_i·c) / |E a_i|`; at least 1 means
    /// the ellipsoid is certifiably inside the polytope.
    pub quality: f64,
    pub log_det: f64,
    pub newton_steps: usize,
}

#[derive(Debug, Clone)]
pub struct JohnPosition {
    /// The body mapped so that its maximal inscribed ellipsoid becomes the
    /// unit ball: `B ⊆ body ⊆ d·B` up to solver tolerance.
    pub body: HPolytope,
    /// The map that was applied to the input.
    pub map: AffineMap,
    /// Worst row slack ratio of the unit ball inside `body`.
    pub quality: f64,
}

/// Computes the maximal-volume ellipsoid inscribed in a bounded
/// H-polytope with nonempty interior.
///
/// # Errors
///
/// [`Error::EmptyInterior`] when no ball of positive radius fits,
/// [`Error::Unbounded`] for unbounded inputs, [`Error::IterationLimit`]
/// if the Newton budget is exhausted before the target gap.
pub fn maximal_inscribed_ellipsoid(h: &HPolytope) -> Result<InscribedEllipsoid> {
    let d = h.dim();
    let hn = h.normalized();
    let m = hn.len();

    let (c0, r0) = match hull::chebyshev_center(&hn) {
        Ok(v) => v,
        Err(Error::Infeasible) => return Err(Error::EmptyInterior),
        Err(e) => return Err(e),
    };
    let b_scale = 1.0
        + hn.halfspaces()
            .iter()
            .map(|hs| hs.b().abs())
            .fold(0.0, f64::max);
    if r0 <= 1e-10 * b_scale {
        return Err(Error::EmptyInterior);
    }
    hull::check_bounded(&hn)?;

    // Rows as a matrix; all unit norm after normalization.
    let a = {
        let mut a = DMatrix::zeros(m, d);
        for (i, hs) in hn.halfspaces().iter().enumerate() {
            for j in 0..d {
                a[(i, j)] = hs.a()[j];
            }
        }
        a
    };
    let b = DVector::from_fn(m, |i, _| hn.halfspaces()[i].b());

    let mut c = c0;
    let mut e_mat = DMatrix::identity(d, d) * (0.9 * r0);

    // Directions: d center coordinates, then the orthonormal basis of
    // symmetric matrices (diagonal units and the symmetrized off-diagonal
    // pairs scaled by 1/sqrt(2)).
    let sym_dirs: Vec<(usize, usize)> = (0..d)
        .flat_map(|p| (p..d).map(move |q| (p, q)))
        .collect();
    let n_dirs = d + sym_dirs.len();

    let mut steps = 0usize;
    let mut t = 1.0;
    loop {
        // Inner Newton loop for the current barrier parameter.
        let mut phi_prev = f64::INFINITY;
        loop {
            let state = BarrierState::evaluate(&a, &b, &c, &e_mat, t)
                .expect("iterates stay strictly feasible");
            if phi_prev - state.phi <= STAGE_REL_TOL * (1.0 + state.phi.abs()) {
                break;
            }
            phi_prev = state.phi;
            let (grad, hess) = state.grad_hess(&a, &sym_dirs, t);

            let dir = solve_spd(&hess, &(-&grad))?;
            let decrement = -grad.dot(&dir);
            if decrement / 2.0 <= NEWTON_TOL {
                break;
            }
            if steps >= MAX_NEWTON_STEPS {
                return Err(Error::IterationLimit);
            }
            steps += 1;

            let (dc, de) = unpack_direction(&dir, d, &sym_dirs);
            let mut alpha = 1.0;
            let mut accepted = false;
            for _ in 0..60 {
                let c_try = &c + &dc * alpha;
                let e_try = &e_mat + &de * alpha;
                if let Some(phi_try) = BarrierState::phi(&a, &b, &c_try, &e_try, t) {
                    if phi_try <= state.phi + 0.25 * alpha * grad.dot(&dir) {
                        c = c_try;
                        e_mat = e_try;
                        accepted = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            if !accepted {
                break; // no further progress at this stage
            }
        }
        if m as f64 / t < GAP_TOL {
            break;
        }
        t *= T_GROWTH;
        let _ = n_dirs;
    }

    let quality = slack_ratio(&a, &b, &c, &e_mat);
    let log_det = Cholesky::new(e_mat.clone())
        .map(|ch| 2.0 * ch.l().diagonal().iter().map(|x| x.ln()).sum::<f64>())
        .ok_or(Error::Degenerate)?;
    Ok(InscribedEllipsoid {
        ellipsoid: Ellipsoid::new(c, e_mat)?,
        quality,
        log_det,
        newton_steps: steps,
    })
}

/// Maps a bounded H-polytope so that its maximal inscribed ellipsoid
/// becomes the unit ball centered at the origin.
pub fn to_john_position(h: &HPolytope) -> Result<JohnPosition> {
    let sol = maximal_inscribed_ellipsoid(h)?;
    let e_inv = sol
        .ellipsoid
        .shape()
        .clone()
        .lu()
        .try_inverse()
        .ok_or(Error::Degenerate)?;
    let shift = -&e_inv * sol.ellipsoid.center();
    let map = AffineMap::new(e_inv, shift)?;
    let body = map.apply_h(h)?.normalized();
    let quality = body
        .halfspaces()
        .iter()
        .map(|hs| hs.b())
        .fold(f64::INFINITY, f64::min);
    Ok(JohnPosition {
        body,
        map,
        quality,
    })
}

/// Radius of the smallest origin-centered ball containing the polytope,
/// computed exactly from its vertices.
pub fn outer_radius_by_vertices(h: &HPolytope) -> Result<f64> {
    let v = hull::vertices_of_hpolytope(h, crate::EPS)?;
    Ok(v.points().iter().map(|p| p.norm()).fold(0.0, f64::max))
}

fn slack_ratio(a: &DMatrix<f64>, b: &DVector<f64>, c: &DVector<f64>, e_mat: &DMatrix<f64>) -> f64 {
    let m = a.nrows();
    let mut worst = f64::INFINITY;
    for i in 0..m {
        let ai = a.row(i).transpose();
        let reach = (e_mat * &ai).norm();
        if reach > 0.0 {
            worst = worst.min((b[i] - ai.dot(c)) / reach);
        }
    }
    worst
}

struct BarrierState {
    phi: f64,
    slacks: DVector<f64>,
    norms: DVector<f64>,
    units: Vec<DVector<f64>>,
    e_inv: DMatrix<f64>,
}

impl BarrierState {
    /// Barrier value, or `None` when `(c, E)` is infeasible (E not
    /// positive definite or some slack nonpositive).
    fn phi(
        a: &DMatrix<f64>,
        b: &DVector<f64>,
        c: &DVector<f64>,
        e_mat: &DMatrix<f64>,
        t: f64,
    ) -> Option<f64> {
        let ch = Cholesky::new(e_mat.clone())?;
        let log_det = 2.0 * ch.l().diagonal().iter().map(|x| x.ln()).sum::<f64>();
        let m = a.nrows();
        let mut phi = -t * log_det;
        for i in 0..m {
            let ai = a.row(i).transpose();
            let s = b[i] - ai.dot(c) - (e_mat * &ai).norm();
            if s <= 0.0 {
                return None;
            }
            phi -= s.ln();
        }
        Some(phi)
    }

    fn evaluate(
        a: &DMatrix<f64>,
        b: &DVector<f64>,
        c: &DVector<f64>,
        e_mat: &DMatrix<f64>,
        t: f64,
    ) -> Option<Self> {
        let ch = Cholesky::new(e_mat.clone())?;
        let log_det = 2.0 * ch.l().diagonal().iter().map(|x| x.ln()).sum::<f64>();
        let e_inv = ch.inverse();
        let m = a.nrows();
        let mut slacks = DVector::zeros(m);
        let mut norms = DVector::zeros(m);
        let mut units = Vec::with_capacity(m);
        let mut phi = -t * log_det;
        for i in 0..m {
            let ai = a.row(i).transpose();
            let y = e_mat * &ai;
            let n = y.norm();
            let s = b[i] - ai.dot(c) - n;
            if s <= 0.0 || n <= 0.0 {
                return None;
            }
            slacks[i] = s;
            norms[i] = n;
            units.push(y / n);
            phi -= s.ln();
        }
        Some(Self {
            phi,
            slacks,
            norms,
            units,
            e_inv,
        })
    }

    /// Gradient and Hessian of the barrier over the direction basis
    /// (center coordinates first, then symmetric matrix directions).
    fn grad_hess(
        &self,
        a: &DMatrix<f64>,
        sym_dirs: &[(usize, usize)],
        t: f64,
    ) -> (DVector<f64>, DMatrix<f64>) {
        let d = a.ncols();
        let m = a.nrows();
        let nd = d + sym_dirs.len();
        let mut grad = DVector::zeros(nd);
        let mut hess = DMatrix::zeros(nd, nd);

        // -t log det part: gradient -t <E^{-1}, M_k>, Hessian
        // t tr(E^{-1} M_k E^{-1} M_l); zero in the center block.
        for (ki, &(p, q)) in sym_dirs.iter().enumerate() {
            let k = d + ki;
            grad[k] -= t * frob_with_basis(&self.e_inv, p, q);
            // P = E^{-1} M_k E^{-1}, then entry (k, l) = <P, M_l>.
            let pmat = sandwich_basis(&self.e_inv, p, q);
            for (li, &(r, s)) in sym_dirs.iter().enumerate() {
                let l = d + li;
                hess[(k, l)] += t * frob_with_basis(&pmat, r, s);
            }
        }

        // Barrier rows.
        for i in 0..m {
            let ai = a.row(i).transpose();
            let s = self.slacks[i];
            let u = &self.units[i];
            let n = self.norms[i];

            // delta_k = d(-s_i) along direction k.
            let mut delta = DVector::zeros(nd);
            for k in 0..d {
                delta[k] = ai[k];
            }
            // r_k = M_k a_i; store for the curvature part.
            let mut rvecs: Vec<DVector<f64>> = Vec::with_capacity(sym_dirs.len());
            for (ki, &(p, q)) in sym_dirs.iter().enumerate() {
                let r = basis_times_vec(p, q, &ai, d);
                delta[d + ki] = u.dot(&r);
                rvecs.push(r);
            }

            for k in 0..nd {
                grad[k] += delta[k] / s;
            }
            // delta delta^T / s^2 and the norm curvature
            // (r_k·r_l - (u·r_k)(u·r_l)) / (s n) on the symmetric block.
            for k in 0..nd {
                for l in 0..nd {
                    hess[(k, l)] += delta[k] * delta[l] / (s * s);
                }
            }
            for (ki, rk) in rvecs.iter().enumerate() {
                let urk = u.dot(rk);
                for (li, rl) in rvecs.iter().enumerate() {
                    let cur = (rk.dot(rl) - urk * u.dot(rl)) / (s * n);
                    hess[(d + ki, d + li)] += cur;
                }
            }
        }
        (grad, hess)
    }
}

/// `<X, M_{pq}>` for the orthonormal symmetric basis element.
fn frob_with_basis(x: &DMatrix<f64>, p: usize, q: usize) -> f64 {
    if p == q {
        x[(p, p)]
    } else {
        std::f64::consts::SQRT_2 * 0.5 * (x[(p, q)] + x[(q, p)])
    }
}

/// `X M_{pq} X` for symmetric `X`.
fn sandwich_basis(x: &DMatrix<f64>, p: usize, q: usize) -> DMatrix<f64> {
    let d = x.nrows();
    let xp = x.column(p);
    let xq = x.column(q);
    let mut out = DMatrix::zeros(d, d);
    if p == q {
        for i in 0..d {
            for j in 0..d {
                out[(i, j)] = xp[i] * xp[j];
            }
        }
    } else {
        let c = std::f64::consts::FRAC_1_SQRT_2;
        for i in 0..d {
            for j in 0..d {
                out[(i, j)] = c * (xp[i] * xq[j] + xq[i] * xp[j]);
            }
        }
    }
    out
}

/// `M_{pq} v` for the orthonormal symmetric basis element.
fn basis_times_vec(p: usize, q: usize, v: &DVector<f64>, d: usize) -> DVector<f64> {
    let mut out = DVector::zeros(d);
    if p == q {
        out[p] = v[p];
    } else {
        let c = std::f64::consts::FRAC_1_SQRT_2;
        out[p] = c * v[q];
        out[q] = c * v[p];
    }
    out
}

fn unpack_direction(
    dir: &DVector<f64>,
    d: usize,
    sym_dirs: &[(usize, usize)],
) -> (DVector<f64>, DMatrix<f64>) {
    let dc = DVector::from_fn(d, |i, _| dir[i]);
    let mut de = DMatrix::zeros(d, d);
    for (ki, &(p, q)) in sym_dirs.iter().enumerate() {
        let v = dir[d + ki];
        if p == q {
            de[(p, p)] += v;
        } else {
            let c = std::f64::consts::FRAC_1_SQRT_2;
            de[(p, q)] += c * v;
            de[(q, p)] += c * v;
        }
    }
    (dc, de)
}

/// Solves `H x = rhs` for symmetric positive definite `H`, with a jitter
/// retry and an LU fallback for borderline conditioning.
fn solve_spd(h: &DMatrix<f64>, rhs: &DVector<f64>) -> Result<DVector<f64>> {
    if let Some(ch) = Cholesky::new(h.clone()) {
        return Ok(ch.solve(rhs));
    }
    let n = h.nrows();
    let jitter = 1e-12 * (h.trace().abs() / n as f64 + 1.0);
    let mut hj = h.clone();
    for i in 0..n {
        hj[(i, i)] += jitter;
    }
    if let Some(ch) = Cholesky::new(hj.clone()) {
        return Ok(ch.solve(rhs));
    }
    hj.lu().solve(rhs).ok_or(Error::Degenerate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Halfspace;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn box_hrep(half_widths: &[f64]) -> HPolytope {
        let d = half_widths.len();
        let mut rows = Vec::new();
        for i in 0..d {
            for s in [1.0, -1.0] {
                let mut a = DVector::zeros(d);
                a[i] = s;
                rows.push(Halfspace::new(a, half_widths[i]).unwrap());
            }
        }
        HPolytope::new(d, rows).unwrap()
    }

    #[test]
    fn cube_ellipsoid_is_unit_ball() {
        let sol = maximal_inscribed_ellipsoid(&box_hrep(&[1.0, 1.0, 1.0])).unwrap();
        assert!(sol.quality >= 1.0 - 1e-9, "quality {}", sol.quality);
        assert_relative_eq!(sol.ellipsoid.center().norm(), 0.0, epsilon = 1e-7);
        assert_relative_eq!(sol.log_det, 0.0, epsilon = 1e-7);
        let s = sol.ellipsoid.quadratic_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert_relative_eq!(s[(i, j)], want, epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn box_ellipsoid_matches_half_widths() {
        let sol = maximal_inscribed_ellipsoid(&box_hrep(&[2.0, 1.0, 0.5])).unwrap();
        let s = sol.ellipsoid.quadratic_matrix();
        for (i, w) in [2.0, 1.0, 0.5].iter().enumerate() {
            assert_relative_eq!(s[(i, i)], w * w, max_relative = 1e-6);
        }
        assert_relative_eq!(sol.ellipsoid.center().norm(), 0.0, epsilon = 1e-6);
    }

    #[test]
    fn translated_box_recovers_center() {
        let shift = DVector::from_column_slice(&[3.0, -2.0]);
        let base = box_hrep(&[1.5, 0.5]);
        let rows: Vec<Halfspace> = base
            .halfspaces()
            .iter()
            .map(|hs| Halfspace::new(hs.a().clone(), hs.b() + hs.a().dot(&shift)).unwrap())
            .collect();
        let h = HPolytope::new(2, rows).unwrap();
        let sol = maximal_inscribed_ellipsoid(&h).unwrap();
        assert_relative_eq!((sol.ellipsoid.center() - &shift).norm(), 0.0, epsilon = 1e-6);
    }

    #[test]
    fn regular_triangle_ellipsoid_is_incircle() {
        // Circumradius 1, inradius 1/2; by symmetry the maximal ellipse is
        // the incircle.
        let h = 3.0_f64.sqrt() / 2.0;
        let verts = [[0.0, 1.0], [-h, -0.5], [h, -0.5]];
        let mut rows = Vec::new();
        for k in 0..3 {
            let p = DVector::from_column_slice(&verts[k]);
            let q = DVector::from_column_slice(&verts[(k + 1) % 3]);
            let edge = &q - &p;
            let mut normal = DVector::from_column_slice(&[edge[1], -edge[0]]);
            if normal.dot(&p) < 0.0 {
                normal = -normal;
            }
            let b = normal.dot(&p);
            rows.push(Halfspace::new(normal, b).unwrap());
        }
        let sol = maximal_inscribed_ellipsoid(&HPolytope::new(2, rows).unwrap()).unwrap();
        assert_relative_eq!(sol.ellipsoid.center().norm(), 0.0, epsilon = 1e-5);
        assert_relative_eq!(sol.log_det, (0.25f64).ln(), epsilon = 1e-5);
    }

    #[test]
    fn general_triangle_ellipsoid_is_midpoint_ellipse() {
        // The maximal-area ellipse inscribed in a triangle touches the
        // edge midpoints; its center is the centroid and its area is
        // pi * Area / (3 sqrt 3).
        let rows = vec![
            Halfspace::from_slice(&[0.0, -1.0], 0.0).unwrap(),
            Halfspace::from_slice(&[-3.0, 1.0], 0.0).unwrap(),
            Halfspace::from_slice(&[1.0, 1.0], 4.0).unwrap(),
        ];
        let h = HPolytope::new(2, rows).unwrap();
        let sol = maximal_inscribed_ellipsoid(&h).unwrap();
        let centroid = DVector::from_column_slice(&[5.0 / 3.0, 1.0]);
        assert_relative_eq!((sol.ellipsoid.center() - &centroid).norm(), 0.0, epsilon = 1e-4);
        let want_det = 6.0 / (3.0 * 3.0_f64.sqrt());
        assert_relative_eq!(sol.log_det, want_det.ln(), max_relative = 1e-5);
    }

    #[test]
    fn ellipsoid_is_affine_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let h = box_hrep(&[1.0, 1.0, 1.0]);
        let base = maximal_inscribed_ellipsoid(&h).unwrap();
        for _ in 0..5 {
            // Well-conditioned random linear map: clamp singular values.
            let raw = DMatrix::<f64>::from_fn(3, 3, |_, _| rng.random_range(-1.0..1.0));
            let svd = raw.svd(true, true);
            let u = svd.u.clone().unwrap();
            let vt = svd.v_t.clone().unwrap();
            let sig = DMatrix::from_diagonal(&DVector::from_fn(3, |i, _| {
                svd.singular_values[i].clamp(0.7, 1.5)
            }));
            let lin = &u * sig * &vt;
            let shift = DVector::<f64>::from_fn(3, |_, _| rng.random_range(-1.0..1.0));
            let map = AffineMap::new(lin.clone(), shift.clone()).unwrap();

            let sol = maximal_inscribed_ellipsoid(&map.apply_h(&h).unwrap()).unwrap();
            let want_center = map.apply(base.ellipsoid.center());
            let want_shape = &lin * base.ellipsoid.quadratic_matrix() * lin.transpose();
            assert_relative_eq!(
                (sol.ellipsoid.center() - want_center).norm(),
                0.0,
                epsilon = 1e-5
            );
            let got_shape = sol.ellipsoid.quadratic_matrix();
            assert_relative_eq!(
                (&got_shape - &want_shape).norm(),
                0.0,
                epsilon = 1e-4 * want_shape.norm()
            );
        }
    }

    #[test]
    fn john_position_sandwiches_random_tangent_body() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..5 {
            let mut rows = Vec::new();
            for _ in 0..10 {
                let mut u = DVector::<f64>::from_fn(3, |_, _| {
                    let u1: f64 = rng.random_range(1e-12..1.0);
                    let u2: f64 = rng.random_range(0.0..1.0);
                    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
                });
                u /= u.norm();
                rows.push(Halfspace::new(u, rng.random_range(0.5..1.5)).unwrap());
            }
            let h = HPolytope::new(3, rows).unwrap();
            if hull::check_bounded(&h).is_err() {
                continue;
            }
            let pos = to_john_position(&h).unwrap();
            assert!(pos.quality >= 1.0 - 1e-6, "quality {}", pos.quality);
            let outer = outer_radius_by_vertices(&pos.body).unwrap();
            assert!(outer <= 3.0 + 1e-4, "outer radius {outer}");
        }
    }

    #[test]
    fn john_position_of_simplex_reaches_outer_bound() {
        // A regular simplex is the extreme case: the outer radius in the
        // normalized position is exactly d.
        let rows = vec![
            Halfspace::from_slice(&[0.0, -1.0], 1.0).unwrap(),
            Halfspace::from_slice(&[3.0_f64.sqrt() / 2.0, 0.5], 1.0).unwrap(),
            Halfspace::from_slice(&[-3.0_f64.sqrt() / 2.0, 0.5], 1.0).unwrap(),
        ];
        let h = HPolytope::new(2, rows).unwrap();
        let pos = to_john_position(&h).unwrap();
        let outer = outer_radius_by_vertices(&pos.body).unwrap();
        assert_relative_eq!(outer, 2.0, max_relative = 1e-5);
    }

    #[test]
    fn degenerate_inputs_error() {
        // Empty interior: a slab squeezed to a plane.
        let h = HPolytope::new(
            2,
            vec![
                Halfspace::from_slice(&[1.0, 0.0], 0.0).unwrap(),
                Halfspace::from_slice(&[-1.0, 0.0], 0.0).unwrap(),
                Halfspace::from_slice(&[0.0, 1.0], 1.0).unwrap(),
                Halfspace::from_slice(&[0.0, -1.0], 1.0).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(
            maximal_inscribed_ellipsoid(&h),
            Err(Error::EmptyInterior)
        ));

        let open = HPolytope::new(
            2,
            vec![Halfspace::from_slice(&[1.0, 0.0], 1.0).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            maximal_inscribed_ellipsoid(&open),
            Err(Error::Unbounded)
        ));
    }
}
