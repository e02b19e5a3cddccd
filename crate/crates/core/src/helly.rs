//! Subfamily selection for finite halfspace families: from the `n`
//! halfspaces cutting out a bounded body `K`, keep at most `2d` whose
//! intersection `K_sigma` is provably close to `K` — diameter inflated by
//! at most `2 d^2` and volume by an explicit dimension-only constant.
//!
//! The pipeline: normalize and deduplicate the family; move `K` to the
//! position where its maximal inscribed ellipsoid is the unit ball (so
//! the body sits between `B` and `d B`); pass to the polar, whose
//! vertices are exactly the family's rows; run the sparse vertex
//! selection there; pull the selected vertices back to row indices.  The
//! containment guarantee `Q ⊆ -(lambda+2) d Q'` on the polar side
//! transfers to `K_sigma ⊆ -(lambda+2) d K` in the normalized position,
//! which pins both the diameter and the volume of `K_sigma`.

use nalgebra::DVector;

use crate::geom::{HPolytope, VPolytope};
use crate::hull;
use crate::john;
use crate::lp::{LpProblem, LpStatus, Sense};
use crate::polar;
use crate::select::{self, SelectionCertificate, SimplexMode};
use crate::{Error, Result};

/// A halfspace family with unit normals, near-duplicate rows merged, and
/// the merge recorded: `provenance[k]` lists every original row index
/// that collapsed into kept row `k` (first entry = first occurrence).
#[derive(Debug, Clone)]
pub struct NormalizedFamily {
    pub polytope: HPolytope,
    pub provenance: Vec<Vec<usize>>,
}

/// Outcome of the subfamily selection.
#[derive(Debug, Clone)]
pub struct HellyReport {
    pub dim: usize,
    /// Selected original row indices, sorted; at most `2 dim`.
    pub sigma: Vec<usize>,
    /// Measured reflection constant of the polar body in the normalized
    /// position (at most `dim` up to solver tolerance).
    pub lambda_tilde: f64,
    pub diam_k: f64,
    pub diam_sigma: f64,
    /// Guaranteed ceiling: `2 dim^2 * diam_k`.
    pub diam_bound: f64,
    pub vol_k: f64,
    pub vol_sigma: f64,
    /// Guaranteed ceiling: `volume_ratio_constant(dim) * vol_k`.
    pub vol_bound: f64,
    /// The polar-side selection certificate (indices refer to rows of the
    /// normalized family).
    pub certificate: SelectionCertificate,
    /// Independent re-check that every vertex of the selected body, in
    /// the normalized position, lies in `-(lambda+2) d` times the body.
    pub containment_transfer_ok: bool,
    /// For `dim <= 4`: the scaled parallelotope times its polar stays
    /// under the squared ball volume (a volume-product sanity check that
    /// the volume ceiling rests on); `None` above dimension 4.
    pub santalo_ok: Option<bool>,
}

/// Unit-normalizes rows and merges near-duplicates (same direction and
/// offset within `eps`), keeping first occurrences and recording every
/// merge.  Fails with [`Error::EmptyInterior`] when no ball of positive
/// radius fits and [`Error::Unbounded`] when the body is unbounded.
pub fn normalize_family(h: &HPolytope, eps: f64) -> Result<NormalizedFamily> {
    let hn = h.normalized();
    match hull::chebyshev_center(&hn) {
        Ok((_, r)) => {
            let b_scale = 1.0
                + hn.halfspaces()
                    .iter()
                    .map(|hs| hs.b().abs())
                    .fold(0.0, f64::max);
            if r <= 1e-10 * b_scale {
                return Err(Error::EmptyInterior);
            }
        }
        Err(Error::Infeasible) => return Err(Error::EmptyInterior),
        Err(e) => return Err(e),
    }
    hull::check_bounded(&hn)?;

    let mut kept: Vec<crate::geom::Halfspace> = Vec::new();
    let mut provenance: Vec<Vec<usize>> = Vec::new();
    for (i, hs) in hn.halfspaces().iter().enumerate() {
        let mut merged = false;
        for (k, existing) in kept.iter().enumerate() {
            if (existing.a() - hs.a()).norm() <= eps && (existing.b() - hs.b()).abs() <= eps {
                provenance[k].push(i);
                merged = true;
                break;
            }
        }
        if !merged {
            kept.push(hs.clone());
            provenance.push(vec![i]);
        }
    }
    Ok(NormalizedFamily {
        polytope: HPolytope::new(h.dim(), kept)?,
        provenance,
    })
}

/// Rows whose removal does not change the body, found by one LP each:
/// maximize `a_i·x` under all other rows — if the maximum stays at most
/// `b_i`, row `i` is redundant.  Returns the pruned polytope and the
/// kept original row indices.  Not part of the selection pipeline; the
/// guarantee does not need it.
pub fn prune_redundant(h: &HPolytope, eps: f64) -> Result<(HPolytope, Vec<usize>)> {
    let hn = h.normalized();
    let m = hn.len();
    let d = hn.dim();
    let mut kept_rows = Vec::new();
    let mut kept_idx = Vec::new();
    for i in 0..m {
        let others: Vec<usize> = (0..m).filter(|&j| j != i).collect();
        let mut a = nalgebra::DMatrix::zeros(others.len(), d);
        let mut b = DVector::zeros(others.len());
        for (r, &j) in others.iter().enumerate() {
            for c in 0..d {
                a[(r, c)] = hn.halfspaces()[j].a()[c];
            }
            b[r] = hn.halfspaces()[j].b();
        }
        let sol = LpProblem::new(Sense::Maximize, hn.halfspaces()[i].a().clone())
            .with_ub(a, b)?
            .solve();
        let redundant = match sol.status {
            LpStatus::Optimal => sol.objective <= hn.halfspaces()[i].b() + eps,
            LpStatus::Unbounded => false,
            LpStatus::Infeasible => return Err(Error::Infeasible),
            LpStatus::IterationLimit => return Err(Error::IterationLimit),
        };
        if !redundant {
            kept_rows.push(h.halfspaces()[i].clone());
            kept_idx.push(i);
        }
    }
    Ok((HPolytope::new(d, kept_rows)?, kept_idx))
}

/// The explicit dimension constant bounding `vol(K_sigma) / vol(K)`:
/// `pi^{d/2} d^{5d/2} / (sqrt(d!) Gamma(d/2 + 1))`.
pub fn volume_ratio_constant(d: usize) -> f64 {
    let df = d as f64;
    let factorial: f64 = (1..=d).map(|k| k as f64).product();
    std::f64::consts::PI.powf(df / 2.0) * df.powf(2.5 * df)
        / (factorial.sqrt() * gamma_half(d + 2))
}

/// `Gamma(k / 2)` for positive integer `k`, by the recursion
/// `Gamma(x + 1) = x Gamma(x)` from `Gamma(1/2) = sqrt(pi)` and
/// `Gamma(1) = 1`.
pub fn gamma_half(k: usize) -> f64 {
    assert!(k >= 1);
    let mut val = if k % 2 == 1 {
        std::f64::consts::PI.sqrt()
    } else {
        1.0
    };
    let mut x = if k % 2 == 1 { 0.5 } else { 1.0 };
    while x + 0.5 < k as f64 / 2.0 + 0.25 {
        val *= x;
        x += 1.0;
    }
    val
}

/// Volume of the unit ball in dimension `d`.
pub fn ball_volume(d: usize) -> f64 {
    std::f64::consts::PI.powf(d as f64 / 2.0) / gamma_half(d + 2)
}

/// Selects at most `2d` of the family's halfspaces with certified
/// diameter and volume control.
pub fn helly_subset(h: &HPolytope, mode: SimplexMode) -> Result<HellyReport> {
    let d = h.dim();
    if d < 2 {
        return Err(Error::InvalidInput(
            "subfamily selection needs dimension at least 2".into(),
        ));
    }
    let family = normalize_family(h, crate::EPS)?;

    // Normalized position: maximal inscribed ellipsoid becomes the unit
    // ball, so the polar of the body is well-rounded.
    let pos = john::to_john_position(&family.polytope)?;
    let q = polar::polar_of_hrep(&pos.body, crate::EPS)?;

    let cert = select::sparse_approx(&q.polytope, mode, None)?;

    // Pull the selected polar vertices back to family rows, then to the
    // first original row of each merged group.
    let family_rows: Vec<usize> = cert
        .qprime_indices
        .iter()
        .map(|&i| q.source_rows[i])
        .collect();
    let mut sigma: Vec<usize> = family_rows
        .iter()
        .map(|&k| family.provenance[k][0])
        .collect();
    sigma.sort_unstable();
    sigma.dedup();

    // Metrics in the original coordinates.
    let k_vertices = hull::vertices_of_hpolytope(h, crate::EPS)?;
    let diam_k = hull::diameter(k_vertices.points());
    let vol_k = hull::volume(k_vertices.points())?;

    let sigma_rows: Vec<crate::geom::Halfspace> = sigma
        .iter()
        .map(|&i| h.halfspaces()[i].clone())
        .collect();
    let k_sigma = HPolytope::new(d, sigma_rows)?;
    let ks_vertices = hull::vertices_of_hpolytope(&k_sigma, crate::EPS)?;
    let diam_sigma = hull::diameter(ks_vertices.points());
    let vol_sigma = hull::volume(ks_vertices.points())?;

    // Independent containment re-check in the normalized position.
    let factor = cert.factor;
    let sigma_tilde_rows: Vec<crate::geom::Halfspace> = cert
        .qprime_indices
        .iter()
        .map(|&i| pos.body.halfspaces()[q.source_rows[i]].clone())
        .collect();
    let k_sigma_tilde = HPolytope::new(d, sigma_tilde_rows)?;
    let containment_transfer_ok = match hull::vertices_of_hpolytope(&k_sigma_tilde, crate::EPS) {
        Ok(vs) => vs
            .points()
            .iter()
            .all(|v| pos.body.contains(&(-v / factor), select::VERIFY_TOL)),
        Err(_) => false,
    };

    let santalo_ok = if d <= 4 {
        Some(santalo_product_check(&q.polytope, &cert, d)?)
    } else {
        None
    };

    Ok(HellyReport {
        dim: d,
        sigma,
        lambda_tilde: cert.lambda_measured,
        diam_k,
        diam_sigma,
        diam_bound: 2.0 * (d as f64).powi(2) * diam_k,
        vol_k,
        vol_sigma,
        vol_bound: volume_ratio_constant(d) * vol_k,
        certificate: cert,
        containment_transfer_ok,
        santalo_ok,
    })
}

/// The volume ceiling rests on the scaled parallelotope
/// `P' = P / (2 d^2)` having a volume product with its polar below the
/// squared ball volume.  For small dimensions this is cheap to check
/// outright from the hulls.
fn santalo_product_check(q: &VPolytope, cert: &SelectionCertificate, d: usize) -> Result<bool> {
    let p = select::parallelotope(q, &cert.simplex)?;
    let s = 1.0 / (2.0 * (d as f64).powi(2));
    let scaled: Vec<DVector<f64>> = p.vrep.points().iter().map(|c| c * s).collect();
    let vol_p = hull::volume(&scaled)?;

    let polar_body = polar::polar_of_hrep(&p.hrep.scale(s), crate::EPS)?;
    let vol_polar = hull::volume(polar_body.polytope.points())?;

    let ball_sq = ball_volume(d).powi(2);
    Ok(vol_p * vol_polar <= ball_sq * (1.0 + 1e-9))
}
