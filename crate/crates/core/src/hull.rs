//! Convex hull machinery for small dimensions: facet enumeration by
//! gift-wrapping, extreme-point identification, volume by fan
//! triangulation, diameter, Chebyshev centers, and vertex enumeration of
//! H-polytopes.
//!
//! The facet enumeration is a breadth-first search over the facet graph.
//! An initial facet is found by rotating a supporting hyperplane around a
//! growing flat of hull points (the classical wrapping step); every further
//! facet is reached by rotating a known facet's hyperplane about one of its
//! ridges until it first touches the point set.  Ridges of a facet are
//! found recursively: the facet's points are projected into its hyperplane
//! and hulled in dimension `d - 1`, with dimension 1 as the base case.
//! Non-simplicial facets come out naturally (a facet's vertex list is
//! "every input point on its hyperplane"), which keeps cubes and other
//! degenerate-in-general-position inputs exact.
//!
//! All of this is intended for desk-scale inputs (`d <= 8`, at most a few
//! hundred points); nothing here is output-sensitive in the qhull sense.

use std::collections::BTreeMap;

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};

use crate::geom::{HPolytope, VPolytope};
use crate::lp::{LpProblem, LpStatus, Sense};
use crate::{Error, Result};

/// Absolute coplanarity tolerance (scaled by `1 + max |point|`): a point
/// belongs to a facet's hyperplane when its distance to the plane, measured
/// with a unit normal, is below this.
pub const COPLANAR_TOL: f64 = 1e-8;

/// One facet of a hull: every input point lying on its supporting
/// hyperplane (sorted), plus the outward unit normal and offset
/// (`normal·x = offset` on the plane, `normal·x <= offset` inside).
#[derive(Debug, Clone)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: DVector<f64>,
    pub offset: f64,
}

#[derive(Debug, Clone)]
pub struct HullResult {
    /// Indices of the points that are vertices (0-faces) of the hull,
    /// sorted ascending.
    pub extreme_indices: Vec<usize>,
    pub facets: Vec<Facet>,
}

impl HullResult {
    /// Distinct ridges (as sorted vertex-index lists); mostly useful for
    /// combinatorial checks such as Euler's formula.
    pub fn ridge_count(&self, points: &[DVector<f64>], dim: usize) -> Result<usize> {
        let mut keys = std::collections::BTreeSet::new();
        for f in &self.facets {
            for r in facet_ridges(points, f, dim)? {
                keys.insert(r.vertices);
            }
        }
        Ok(keys.len())
    }
}

/// Computes the facets and extreme points of `conv(points)`.
///
/// # Errors
///
/// [`Error::Degenerate`] when the points do not span the full dimension,
/// [`Error::InvalidInput`] for dimension 0 or above 8, or when tolerance
/// trouble leaves the facet graph inconsistent.
pub fn convex_hull(points: &[DVector<f64>]) -> Result<HullResult> {
    if points.is_empty() {
        return Err(Error::InvalidInput("empty point list".into()));
    }
    let dim = points[0].len();
    if dim == 0 || dim > 8 {
        return Err(Error::InvalidInput(format!(
            "hull supports dimensions 1..=8, got {dim}"
        )));
    }
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::Dimension {
            expected: dim,
            got: points.iter().map(|p| p.len()).find(|&l| l != dim).unwrap(),
        });
    }

    let scale = point_scale(points);
    let (unique, rep) = dedup_points(points, 1e-9 * scale);
    let raw = hull_in_dim(&unique, dim)?;

    Ok(HullResult {
        extreme_indices: raw.extreme_indices.iter().map(|&i| rep[i]).sorted().collect(),
        facets: raw
            .facets
            .into_iter()
            .map(|f| Facet {
                vertices: f.vertices.iter().map(|&i| rep[i]).sorted().collect(),
                normal: f.normal,
                offset: f.offset,
            })
            .collect(),
    })
}

/// Lebesgue volume of `conv(points)` via a fan triangulation from an
/// interior point: each facet is triangulated (recursively, inside its own
/// hyperplane) and every cell `conv(z, facet simplex)` contributes
/// `|det| / d!`.
pub fn volume(points: &[DVector<f64>]) -> Result<f64> {
    let dim = points.first().map(|p| p.len()).unwrap_or(0);
    if dim == 1 {
        let lo = points.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
        let hi = points.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max);
        return Ok(hi - lo);
    }
    let hull = convex_hull(points)?;
    let mut z = DVector::zeros(dim);
    for &i in &hull.extreme_indices {
        z += &points[i];
    }
    z /= hull.extreme_indices.len() as f64;

    let factorial: f64 = (1..=dim).map(|k| k as f64).product();
    let mut total = 0.0;
    for facet in &hull.facets {
        for cell in triangulate_facet(points, facet, dim)? {
            let mut m = DMatrix::zeros(dim, dim);
            for (k, &vi) in cell.iter().enumerate() {
                m.set_column(k, &(&points[vi] - &z));
            }
            total += m.determinant().abs() / factorial;
        }
    }
    Ok(total)
}

/// Maximum pairwise Euclidean distance.  Restricting to extreme points
/// would give the same value (the farthest pair is always extreme), so the
/// plain scan over the given points doubles as its own ground truth.
pub fn diameter(points: &[DVector<f64>]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            best = best.max((&points[i] - &points[j]).norm());
        }
    }
    best
}

/// Chebyshev center: the center and radius of a largest ball inside the
/// polytope.  Fails with [`Error::Infeasible`] on an empty polytope and
/// [`Error::Unbounded`] when the radius grows without bound.
pub fn chebyshev_center(h: &HPolytope) -> Result<(DVector<f64>, f64)> {
    let d = h.dim();
    let m = h.len();
    if m == 0 {
        return Err(Error::Unbounded);
    }
    // Variables (x, r): maximize r subject to a_i·x + |a_i| r <= b_i.
    let mut a = DMatrix::zeros(m, d + 1);
    let mut b = DVector::zeros(m);
    for (i, hs) in h.halfspaces().iter().enumerate() {
        for j in 0..d {
            a[(i, j)] = hs.a()[j];
        }
        a[(i, d)] = hs.a().norm();
        b[i] = hs.b();
    }
    let mut c = DVector::zeros(d + 1);
    c[d] = 1.0;
    let mut lower = vec![None; d + 1];
    lower[d] = Some(0.0);
    let sol = LpProblem::new(Sense::Maximize, c)
        .with_ub(a, b)?
        .with_lower(lower)?
        .solve()
        .into_result()?;
    let center = DVector::from_fn(d, |i, _| sol.x[i]);
    Ok((center, sol.x[d]))
}

/// Returns `Ok(())` if the polytope is bounded, [`Error::Unbounded`] if any
/// coordinate direction is unbounded (which for a polyhedron is exhaustive:
/// a recession direction has a nonzero coordinate), [`Error::Infeasible`]
/// if it is empty.
pub fn check_bounded(h: &HPolytope) -> Result<()> {
    let d = h.dim();
    let m = h.len();
    let mut a = DMatrix::zeros(m, d);
    let mut b = DVector::zeros(m);
    for (i, hs) in h.halfspaces().iter().enumerate() {
        for j in 0..d {
            a[(i, j)] = hs.a()[j];
        }
        b[i] = hs.b();
    }
    for j in 0..d {
        for sign in [1.0, -1.0] {
            let mut c = DVector::zeros(d);
            c[j] = sign;
            let sol = LpProblem::new(Sense::Maximize, c)
                .with_ub(a.clone(), b.clone())?
                .solve();
            match sol.status {
                LpStatus::Optimal => {}
                LpStatus::Unbounded => return Err(Error::Unbounded),
                LpStatus::Infeasible => return Err(Error::Infeasible),
                LpStatus::IterationLimit => return Err(Error::IterationLimit),
            }
        }
    }
    Ok(())
}

/// Enumerates the vertices of a bounded H-polytope by solving every
/// `d`-subset of (unit-normalized) bounding hyperplanes, keeping solutions
/// that satisfy all rows within tolerance, deduplicated.
///
/// Boundedness is established first via LPs in the coordinate directions;
/// an unbounded input yields [`Error::Unbounded`].
pub fn vertices_of_hpolytope(h: &HPolytope, eps: f64) -> Result<VPolytope> {
    check_bounded(h)?;
    let d = h.dim();
    let hn = h.normalized();
    let m = hn.len();

    let n_subsets = binomial(m, d);
    if n_subsets > 20_000_000 {
        return Err(Error::BudgetExceeded(n_subsets));
    }

    // Vertex coordinates inherit the conditioning of the active plane
    // subset, so the feasibility and dedup slacks are looser than the
    // drive-by tolerance `eps`.
    let feas_tol = eps.max(1e-9) * 100.0;

    let mut verts: Vec<DVector<f64>> = Vec::new();
    for subset in (0..m).combinations(d) {
        let mut a = DMatrix::zeros(d, d);
        let mut b = DVector::zeros(d);
        for (k, &i) in subset.iter().enumerate() {
            for j in 0..d {
                a[(k, j)] = hn.halfspaces()[i].a()[j];
            }
            b[k] = hn.halfspaces()[i].b();
        }
        let lu = a.lu();
        if lu.determinant().abs() < 1e-10 {
            continue;
        }
        let Some(x) = lu.solve(&b) else { continue };
        let slack = feas_tol * (1.0 + x.norm());
        if hn.halfspaces().iter().any(|hs| hs.eval(&x) > slack) {
            continue;
        }
        if verts.iter().any(|v| (v - &x).norm() <= slack) {
            continue;
        }
        verts.push(x);
    }
    if verts.is_empty() {
        return Err(Error::Degenerate);
    }
    VPolytope::new(d, verts)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

// ---------------------------------------------------------------------------
// Internals: the wrapping search itself, on deduplicated local indices.

fn point_scale(points: &[DVector<f64>]) -> f64 {
    1.0 + points.iter().map(|p| p.amax()).fold(0.0, f64::max)
}

/// Removes near-duplicate points; returns the unique list plus, for each
/// unique point, the index of its first occurrence in the original list.
fn dedup_points(points: &[DVector<f64>], tol: f64) -> (Vec<DVector<f64>>, Vec<usize>) {
    let mut unique: Vec<DVector<f64>> = Vec::new();
    let mut rep = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !unique.iter().any(|u| (u - p).norm() <= tol) {
            unique.push(p.clone());
            rep.push(i);
        }
    }
    (unique, rep)
}

struct RawHull {
    extreme_indices: Vec<usize>,
    facets: Vec<Facet>,
}

struct Ridge {
    /// Sorted indices of the points on the ridge's affine hull.
    vertices: Vec<usize>,
    /// Unit direction orthogonal to the ridge inside the facet's
    /// hyperplane, pointing away from the facet.
    outward_in_plane: DVector<f64>,
}

fn hull_in_dim(pts: &[DVector<f64>], dim: usize) -> Result<RawHull> {
    if dim == 1 {
        return hull_dim1(pts);
    }
    if pts.len() < dim + 1 {
        return Err(Error::Degenerate);
    }
    let scale = point_scale(pts);
    let on_plane_tol = COPLANAR_TOL * scale;

    // Inputs that do not span the space fail here, cleanly, instead of
    // deep inside the wrapping search.
    let diffs: Vec<DVector<f64>> = pts[1..].iter().map(|p| p - &pts[0]).collect();
    if rank_with_tol(&diffs, 1e-9 * scale) < dim {
        return Err(Error::Degenerate);
    }

    let first = initial_facet(pts, dim, scale)?;

    let mut facets: Vec<Facet> = Vec::new();
    let mut facet_keys: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    // Ridge key -> number of incident facets found so far.
    let mut ridge_seen: BTreeMap<Vec<usize>, u8> = BTreeMap::new();
    // Pending pivots: (facet index, ridge).
    let mut queue: Vec<(usize, Ridge)> = Vec::new();

    let push_facet = |facet: Facet,
                          facets: &mut Vec<Facet>,
                          facet_keys: &mut BTreeMap<Vec<usize>, usize>,
                          ridge_seen: &mut BTreeMap<Vec<usize>, u8>,
                          queue: &mut Vec<(usize, Ridge)>|
     -> Result<()> {
        if facet_keys.contains_key(&facet.vertices) {
            return Ok(());
        }
        let idx = facets.len();
        facet_keys.insert(facet.vertices.clone(), idx);
        let ridges = facet_ridges(pts, &facet, dim)?;
        facets.push(facet);
        for ridge in ridges {
            let count = ridge_seen.entry(ridge.vertices.clone()).or_insert(0);
            *count += 1;
            if *count == 1 {
                queue.push((idx, ridge));
            }
        }
        Ok(())
    };

    push_facet(first, &mut facets, &mut facet_keys, &mut ridge_seen, &mut queue)?;

    while let Some((facet_idx, ridge)) = queue.pop() {
        if ridge_seen.get(&ridge.vertices).copied().unwrap_or(0) >= 2 {
            continue; // partner already found from the other side
        }
        let facet = &facets[facet_idx];
        let base = &pts[ridge.vertices[0]];
        let (normal, _) = pivot_plane(pts, &facet.normal, &ridge.outward_in_plane, base, scale)
            .ok_or_else(|| {
                Error::InvalidInput("hull wrapping found an open ridge (degenerate input?)".into())
            })?;
        let offset: f64 = ridge
            .vertices
            .iter()
            .map(|&i| normal.dot(&pts[i]))
            .sum::<f64>()
            / ridge.vertices.len() as f64;
        let verts: Vec<usize> = (0..pts.len())
            .filter(|&i| (normal.dot(&pts[i]) - offset).abs() <= on_plane_tol)
            .collect();
        let new_facet = Facet {
            vertices: verts,
            normal,
            offset,
        };
        push_facet(
            new_facet,
            &mut facets,
            &mut facet_keys,
            &mut ridge_seen,
            &mut queue,
        )?;
    }

    if ridge_seen.values().any(|&c| c != 2) {
        return Err(Error::InvalidInput(
            "hull facet graph inconsistent (each ridge must join exactly two facets)".into(),
        ));
    }

    // A point is extreme iff its incident facet normals span the space.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); pts.len()];
    for (fi, f) in facets.iter().enumerate() {
        for &v in &f.vertices {
            incident[v].push(fi);
        }
    }
    let mut extreme_indices = Vec::new();
    for (i, fs) in incident.iter().enumerate() {
        if fs.len() < dim {
            continue;
        }
        let normals: Vec<DVector<f64>> = fs.iter().map(|&fi| facets[fi].normal.clone()).collect();
        if rank_with_tol(&normals, 1e-7) == dim {
            extreme_indices.push(i);
        }
    }
    if extreme_indices.len() < dim + 1 {
        return Err(Error::Degenerate);
    }

    Ok(RawHull {
        extreme_indices,
        facets,
    })
}

fn hull_dim1(pts: &[DVector<f64>]) -> Result<RawHull> {
    if pts.len() < 2 {
        return Err(Error::Degenerate);
    }
    let mut imin = 0;
    let mut imax = 0;
    for (i, p) in pts.iter().enumerate() {
        if p[0] < pts[imin][0] {
            imin = i;
        }
        if p[0] > pts[imax][0] {
            imax = i;
        }
    }
    if pts[imax][0] - pts[imin][0] <= 0.0 {
        return Err(Error::Degenerate);
    }
    Ok(RawHull {
        extreme_indices: vec![imin.min(imax), imin.max(imax)],
        facets: vec![
            Facet {
                vertices: vec![imin],
                normal: DVector::from_column_slice(&[-1.0]),
                offset: -pts[imin][0],
            },
            Facet {
                vertices: vec![imax],
                normal: DVector::from_column_slice(&[1.0]),
                offset: pts[imax][0],
            },
        ],
    })
}

/// Finds one facet by the classical wrapping construction: start from a
/// supporting hyperplane touching the lexicographically smallest point and
/// rotate it about a growing flat of touched points until the flat reaches
/// dimension `d - 1`.
fn initial_facet(pts: &[DVector<f64>], dim: usize, scale: f64) -> Result<Facet> {
    let i0 = (0..pts.len())
        .min_by(|&a, &b| lex_cmp(&pts[a], &pts[b]))
        .expect("nonempty");
    let p0 = pts[i0].clone();

    let mut normal = DVector::zeros(dim);
    normal[0] = -1.0;
    // Orthonormal basis of the flat's linear part (directions inside the
    // current touching face).
    let mut flat_basis: Vec<DVector<f64>> = Vec::new();

    for _ in 0..dim - 1 {
        // Choose the rotation direction w: orthogonal to flat and normal,
        // pointing toward the point with the largest such component.
        let mut best: Option<(f64, DVector<f64>)> = None;
        for q in pts {
            let mut r = q - &p0;
            for u in &flat_basis {
                let c = r.dot(u);
                r -= u * c;
            }
            let c = r.dot(&normal);
            r -= &normal * c;
            let len = r.norm();
            if best.as_ref().map(|(l, _)| len > *l).unwrap_or(true) {
                best = Some((len, r));
            }
        }
        let (len, w_raw) = best.expect("nonempty");
        if len <= 1e-9 * scale {
            return Err(Error::Degenerate);
        }
        let w = w_raw / len;

        let (new_normal, contact) = pivot_plane(pts, &normal, &w, &p0, scale)
            .ok_or_else(|| Error::InvalidInput("wrapping pivot found no contact point".into()))?;
        normal = new_normal;

        // Extend the flat with the contact point.
        let mut r = &pts[contact] - &p0;
        for u in &flat_basis {
            let c = r.dot(u);
            r -= u * c;
        }
        let c = r.dot(&normal);
        r -= &normal * c;
        let len = r.norm();
        if len <= 1e-12 * scale {
            return Err(Error::InvalidInput(
                "wrapping contact point degenerate with current flat".into(),
            ));
        }
        flat_basis.push(r / len);
    }

    let offset = normal.dot(&p0);
    let on_plane_tol = COPLANAR_TOL * scale;
    let vertices: Vec<usize> = (0..pts.len())
        .filter(|&i| (normal.dot(&pts[i]) - offset).abs() <= on_plane_tol)
        .collect();
    Ok(Facet {
        vertices,
        normal,
        offset,
    })
}

/// Rotates the supporting hyperplane with unit normal `n` through `base`
/// toward direction `w` (unit, orthogonal to `n`) until it first touches a
/// point off the current plane.  All points must satisfy
/// `n·(q - base) <= 0` up to noise.  The rotated normal is
/// `cos(θ)·n + sin(θ)·w`; a point q is reached at the angle where
/// `cos(θ)·α_q + sin(θ)·β_q = 0`, i.e. `θ_q = atan2(-α_q, β_q)`, which
/// covers the full half-turn (β_q of either sign).  Points already on the
/// plane with positive `w`-component count as touched at θ = 0 — that is
/// the flat-extension case of the initial-facet construction.  Returns the
/// new unit normal and the smallest-index first contact.
fn pivot_plane(
    pts: &[DVector<f64>],
    n: &DVector<f64>,
    w: &DVector<f64>,
    base: &DVector<f64>,
    scale: f64,
) -> Option<(DVector<f64>, usize)> {
    let tol = COPLANAR_TOL * scale;
    let mut best: Option<(f64, usize)> = None;
    for (i, q) in pts.iter().enumerate() {
        let diff = q - base;
        let alpha = n.dot(&diff);
        let beta = w.dot(&diff);
        if alpha > -tol && beta <= tol {
            // On the current plane moving away from the rotation, or on
            // the hinge itself: never a contact.
            continue;
        }
        let theta = (-alpha).max(0.0).atan2(beta);
        let better = match best {
            None => true,
            Some((tb, _)) => theta < tb - 1e-12,
        };
        if better {
            best = Some((theta, i));
        }
    }
    let (theta, idx) = best?;
    let mut new_normal = n * theta.cos() + w * theta.sin();
    new_normal /= new_normal.norm();
    Some((new_normal, idx))
}

/// Ridges of a facet: hull the facet's points inside its own hyperplane
/// (one dimension down) and lift each sub-facet back.
fn facet_ridges(pts: &[DVector<f64>], facet: &Facet, dim: usize) -> Result<Vec<Ridge>> {
    let base = &pts[facet.vertices[0]];
    let basis = plane_basis(pts, facet, dim)?;
    let projected: Vec<DVector<f64>> = facet
        .vertices
        .iter()
        .map(|&v| {
            DVector::from_fn(dim - 1, |k, _| basis[k].dot(&(&pts[v] - base)))
        })
        .collect();
    let sub = hull_in_dim(&projected, dim - 1)?;
    Ok(sub
        .facets
        .into_iter()
        .map(|g| {
            let mut vertices: Vec<usize> =
                g.vertices.iter().map(|&i| facet.vertices[i]).collect();
            vertices.sort_unstable();
            let mut outward = DVector::zeros(dim);
            for k in 0..dim - 1 {
                outward += &basis[k] * g.normal[k];
            }
            Ridge {
                vertices,
                outward_in_plane: outward,
            }
        })
        .collect())
}

/// Orthonormal basis of a facet's hyperplane (linear part), built from the
/// facet's own points.
fn plane_basis(pts: &[DVector<f64>], facet: &Facet, dim: usize) -> Result<Vec<DVector<f64>>> {
    let base = &pts[facet.vertices[0]];
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for &v in &facet.vertices[1..] {
        if basis.len() == dim - 1 {
            break;
        }
        let mut r = &pts[v] - base;
        let c = r.dot(&facet.normal);
        r -= &facet.normal * c;
        for u in &basis {
            let c = r.dot(u);
            r -= u * c;
        }
        let len = r.norm();
        if len > 1e-9 * point_scale(pts) {
            basis.push(r / len);
        }
    }
    if basis.len() != dim - 1 {
        return Err(Error::InvalidInput(
            "facet does not span its hyperplane".into(),
        ));
    }
    Ok(basis)
}

/// Triangulates one facet into `(d-1)`-simplices (index lists of length
/// `d` into the point array) by recursing inside its hyperplane.
fn triangulate_facet(pts: &[DVector<f64>], facet: &Facet, dim: usize) -> Result<Vec<Vec<usize>>> {
    let base = &pts[facet.vertices[0]];
    let basis = plane_basis(pts, facet, dim)?;
    let projected: Vec<DVector<f64>> = facet
        .vertices
        .iter()
        .map(|&v| DVector::from_fn(dim - 1, |k, _| basis[k].dot(&(&pts[v] - base))))
        .collect();
    let local = triangulate_full(&projected, dim - 1)?;
    Ok(local
        .into_iter()
        .map(|cell| cell.into_iter().map(|i| facet.vertices[i]).collect())
        .collect())
}

/// Triangulates `conv(pts)` (full-dimensional in `dim`) into simplices by
/// fanning from its first extreme point over the facets that do not contain
/// it.
fn triangulate_full(pts: &[DVector<f64>], dim: usize) -> Result<Vec<Vec<usize>>> {
    if dim == 1 {
        let mut imin = 0;
        let mut imax = 0;
        for (i, p) in pts.iter().enumerate() {
            if p[0] < pts[imin][0] {
                imin = i;
            }
            if p[0] > pts[imax][0] {
                imax = i;
            }
        }
        return Ok(vec![vec![imin, imax]]);
    }
    let hull = hull_in_dim(pts, dim)?;
    let apex = hull.extreme_indices[0];
    let mut cells = Vec::new();
    for facet in &hull.facets {
        if facet.vertices.contains(&apex) {
            continue;
        }
        for sub in triangulate_facet(pts, facet, dim)? {
            let mut cell = Vec::with_capacity(dim + 1);
            cell.push(apex);
            cell.extend(sub);
            cells.push(cell);
        }
    }
    Ok(cells)
}

fn lex_cmp(a: &DVector<f64>, b: &DVector<f64>) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.partial_cmp(y) {
            Some(std::cmp::Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    std::cmp::Ordering::Equal
}

/// Rank of a set of vectors via Gram-Schmidt with a residual cutoff.
fn rank_with_tol(vectors: &[DVector<f64>], tol: f64) -> usize {
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for v in vectors {
        let mut r = v.clone();
        for u in &basis {
            let c = r.dot(u);
            r -= u * c;
        }
        let len = r.norm();
        if len > tol {
            basis.push(r / len);
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Halfspace;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vecs(rows: &[&[f64]]) -> Vec<DVector<f64>> {
        rows.iter().map(|r| DVector::from_column_slice(r)).collect()
    }

    fn cube_points(dim: usize) -> Vec<DVector<f64>> {
        (0..1usize << dim)
            .map(|mask| {
                DVector::from_fn(dim, |i, _| if mask >> i & 1 == 1 { 1.0 } else { -1.0 })
            })
            .collect()
    }

    fn cross_points(dim: usize) -> Vec<DVector<f64>> {
        let mut pts = Vec::new();
        for i in 0..dim {
            for s in [1.0, -1.0] {
                let mut p = DVector::zeros(dim);
                p[i] = s;
                pts.push(p);
            }
        }
        pts
    }

    #[test]
    fn square_hull() {
        let pts = vecs(&[&[1.0, 1.0], &[-1.0, 1.0], &[-1.0, -1.0], &[1.0, -1.0]]);
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.extreme_indices, vec![0, 1, 2, 3]);
        assert_eq!(hull.facets.len(), 4);
        for f in &hull.facets {
            assert_eq!(f.vertices.len(), 2);
            // Outward unit normal supports all points.
            for p in &pts {
                assert!(f.normal.dot(p) <= f.offset + 1e-9);
            }
        }
    }

    #[test]
    fn interior_and_duplicate_points_are_not_extreme() {
        let pts = vecs(&[
            &[1.0, 1.0],
            &[-1.0, 1.0],
            &[0.1, -0.2], // interior
            &[-1.0, -1.0],
            &[1.0, -1.0],
            &[1.0, 1.0], // duplicate of point 0
        ]);
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.extreme_indices, vec![0, 1, 3, 4]);
    }

    #[test]
    fn collinear_boundary_point_is_not_extreme() {
        // Midpoint of an edge lies on one facet only; its incident normals
        // have rank 1 < 2.
        let pts = vecs(&[
            &[1.0, 1.0],
            &[-1.0, 1.0],
            &[-1.0, -1.0],
            &[1.0, -1.0],
            &[1.0, 0.0],
        ]);
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.extreme_indices, vec![0, 1, 2, 3]);
        // The right edge facet carries the midpoint in its vertex list.
        let right = hull
            .facets
            .iter()
            .find(|f| f.normal[0] > 0.9)
            .expect("facet with normal +e1");
        assert_eq!(right.vertices, vec![0, 3, 4]);
    }

    #[test]
    fn cube_hull_3d() {
        let pts = cube_points(3);
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.extreme_indices.len(), 8);
        assert_eq!(hull.facets.len(), 6);
        for f in &hull.facets {
            assert_eq!(f.vertices.len(), 4);
        }
        assert_relative_eq!(volume(&pts).unwrap(), 8.0, epsilon = 1e-9);
        assert_relative_eq!(diameter(&pts), 2.0 * 3.0_f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn cross_polytope_3d() {
        let pts = cross_points(3);
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.extreme_indices.len(), 6);
        assert_eq!(hull.facets.len(), 8);
        assert_relative_eq!(volume(&pts).unwrap(), 8.0 / 6.0, epsilon = 1e-9);
    }

    #[test]
    fn cube_and_cross_4d() {
        let cube = cube_points(4);
        let hull = convex_hull(&cube).unwrap();
        assert_eq!(hull.facets.len(), 8);
        for f in &hull.facets {
            assert_eq!(f.vertices.len(), 8);
        }
        assert_relative_eq!(volume(&cube).unwrap(), 16.0, epsilon = 1e-8);

        let cross = cross_points(4);
        let hull = convex_hull(&cross).unwrap();
        assert_eq!(hull.facets.len(), 16);
        assert_relative_eq!(volume(&cross).unwrap(), 16.0 / 24.0, epsilon = 1e-9);
    }

    #[test]
    fn simplex_volume_4d() {
        let mut pts = vec![DVector::zeros(4)];
        for i in 0..4 {
            let mut p = DVector::zeros(4);
            p[i] = 1.0;
            pts.push(p);
        }
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.facets.len(), 5);
        assert_relative_eq!(volume(&pts).unwrap(), 1.0 / 24.0, epsilon = 1e-12);
    }

    #[test]
    fn sphere_points_euler_formula() {
        // 50 random points on the unit sphere: all extreme, and the facet
        // graph satisfies V - E + F = 2.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let pts: Vec<DVector<f64>> = (0..50)
            .map(|_| {
                let v = DVector::<f64>::from_fn(3, |_, _| {
                    // Box-Muller from two uniforms.
                    let u1: f64 = rng.random_range(1e-12..1.0);
                    let u2: f64 = rng.random_range(0.0..1.0);
                    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
                });
                &v / v.norm()
            })
            .collect();
        let hull = convex_hull(&pts).unwrap();
        let v = hull.extreme_indices.len();
        let f = hull.facets.len();
        let e = hull.ridge_count(&pts, 3).unwrap();
        assert_eq!(v, 50);
        assert_eq!(v + f, e + 2, "V={v} E={e} F={f}");
    }

    #[test]
    fn volume_invariances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pts: Vec<DVector<f64>> = (0..12)
            .map(|_| DVector::<f64>::from_fn(3, |_, _| rng.random_range(-1.0..1.0)))
            .collect();
        let vol = volume(&pts).unwrap();
        assert!(vol > 0.0);

        // Permutation of the list.
        let mut perm = pts.clone();
        perm.reverse();
        assert_relative_eq!(volume(&perm).unwrap(), vol, max_relative = 1e-9);

        // A rotation (Householder-free: use a simple orthogonal matrix).
        let theta: f64 = 0.7;
        let rot = DMatrix::from_row_slice(
            3,
            3,
            &[
                theta.cos(),
                -theta.sin(),
                0.0,
                theta.sin(),
                theta.cos(),
                0.0,
                0.0,
                0.0,
                1.0,
            ],
        );
        let rotated: Vec<DVector<f64>> = pts.iter().map(|p| &rot * p).collect();
        assert_relative_eq!(volume(&rotated).unwrap(), vol, max_relative = 1e-9);

        // Scaling by t multiplies volume by t^3.
        let scaled: Vec<DVector<f64>> = pts.iter().map(|p| p * 1.7).collect();
        assert_relative_eq!(volume(&scaled).unwrap(), vol * 1.7f64.powi(3), max_relative = 1e-9);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        // Three collinear points in the plane.
        let pts = vecs(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0]]);
        assert!(matches!(convex_hull(&pts), Err(Error::Degenerate)));
        // Too few points to span.
        let pts = vecs(&[&[0.0, 0.0], &[1.0, 0.0]]);
        assert!(matches!(convex_hull(&pts), Err(Error::Degenerate)));
    }

    #[test]
    fn diameter_of_extremes_matches_full_cloud() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut pts: Vec<DVector<f64>> = (0..20)
            .map(|_| DVector::<f64>::from_fn(3, |_, _| rng.random_range(-1.0..1.0)))
            .collect();
        // Sprinkle in points well inside the hull (midpoints).
        for i in 0..10 {
            let mid = (&pts[i] + &pts[i + 1]) * 0.5;
            pts.push(mid * 0.9);
        }
        let hull = convex_hull(&pts).unwrap();
        let ext: Vec<DVector<f64>> = hull.extreme_indices.iter().map(|&i| pts[i].clone()).collect();
        assert_relative_eq!(diameter(&ext), diameter(&pts), epsilon = 1e-12);
    }

    fn cube_hrep(dim: usize) -> HPolytope {
        let mut rows = Vec::new();
        for i in 0..dim {
            for s in [1.0, -1.0] {
                let mut a = DVector::zeros(dim);
                a[i] = s;
                rows.push(Halfspace::new(a, 1.0).unwrap());
            }
        }
        HPolytope::new(dim, rows).unwrap()
    }

    #[test]
    fn cube_vertex_enumeration() {
        let h = cube_hrep(3);
        let v = vertices_of_hpolytope(&h, 1e-9).unwrap();
        assert_eq!(v.len(), 8);
        for p in v.points() {
            assert!(p.iter().all(|&c| (c.abs() - 1.0).abs() <= 1e-9));
        }
        assert_relative_eq!(volume(v.points()).unwrap(), 8.0, epsilon = 1e-9);
    }

    #[test]
    fn cross_vertex_enumeration_handles_degenerate_corners() {
        // The octahedron {sum |x_i| <= 1}: every vertex lies on 4 of the 8
        // planes, so many subsets resolve to the same point; dedup must
        // leave exactly 6 vertices.
        let mut rows = Vec::new();
        for mask in 0..8u32 {
            let a = DVector::from_fn(3, |i, _| if mask >> i & 1 == 1 { 1.0 } else { -1.0 });
            rows.push(Halfspace::new(a, 1.0).unwrap());
        }
        let h = HPolytope::new(3, rows).unwrap();
        let v = vertices_of_hpolytope(&h, 1e-9).unwrap();
        assert_eq!(v.len(), 6);
        assert_relative_eq!(volume(v.points()).unwrap(), 8.0 / 6.0, epsilon = 1e-9);
    }

    #[test]
    fn unbounded_hpolytope_detected() {
        let h = HPolytope::new(
            2,
            vec![Halfspace::from_slice(&[1.0, 0.0], 1.0).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            vertices_of_hpolytope(&h, 1e-9),
            Err(Error::Unbounded)
        ));
    }

    #[test]
    fn chebyshev_center_of_box() {
        let h = cube_hrep(3);
        let (c, r) = chebyshev_center(&h).unwrap();
        assert_relative_eq!(c.norm(), 0.0, epsilon = 1e-9);
        assert_relative_eq!(r, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn hull_of_enumerated_vertices_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        // Random bounded polytope: tangent planes to the unit sphere.
        let mut rows = Vec::new();
        for _ in 0..14 {
            let mut u = DVector::<f64>::from_fn(3, |_, _| {
                let u1: f64 = rng.random_range(1e-12..1.0);
                let u2: f64 = rng.random_range(0.0..1.0);
                (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
            });
            u /= u.norm();
            rows.push(Halfspace::new(u, 1.0).unwrap());
        }
        let h = HPolytope::new(3, rows).unwrap();
        let v = vertices_of_hpolytope(&h, 1e-9).unwrap();
        // Every enumerated vertex is extreme in the hull, and all facets of
        // the hull are supported by input rows.
        let hull = convex_hull(v.points()).unwrap();
        assert_eq!(hull.extreme_indices.len(), v.len());
        for f in &hull.facets {
            let matches_row = h.halfspaces().iter().any(|hs| {
                let a = hs.a() / hs.a().norm();
                (&a - &f.normal).norm() < 1e-6 && (hs.b() / hs.a().norm() - f.offset).abs() < 1e-6
            });
            assert!(matches_row, "hull facet not among input rows");
        }
    }
}
