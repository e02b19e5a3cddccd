//! Independent brute-force checks used to validate the constructive
//! pipeline from the outside: exact containment factors, exhaustive
//! subset baselines, certificate mutation testing, and Monte Carlo
//! volume estimation.  Nothing here shares code paths with the
//! selection logic it audits beyond the basic LP and hull primitives.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{HPolytope, VPolytope};
use crate::select::{self, SelectionCertificate};
use crate::{hull, polar, Error, Result};

/// Enumeration budget for brute-force subset searches.
pub const SUBSET_BUDGET: u128 = 10_000_000;

/// The smallest `mu >= 0` with `Q ⊆ -mu * Q'`, computed as the maximum
/// over extreme points `w` of `Q` of the gauge of `-Q'` at `w`.  Errors
/// with `OriginNotInterior` when no finite factor exists, which for a
/// `Q` with the origin interior happens exactly when `Q'` does not also
/// have the origin interior.
pub fn min_containment_factor(q: &VPolytope, qprime: &VPolytope) -> Result<f64> {
    if q.dim() != qprime.dim() {
        return Err(Error::Dimension {
            expected: q.dim(),
            got: qprime.dim(),
        });
    }
    let neg = qprime.negate();
    let hull = hull::convex_hull(q.points())?;
    let mut mu: f64 = 0.0;
    for &i in &hull.extreme_indices {
        match polar::gauge(&neg, &q.points()[i]) {
            Ok(g) => mu = mu.max(g.value),
            Err(Error::Infeasible) => return Err(Error::OriginNotInterior),
            Err(e) => return Err(e),
        }
    }
    Ok(mu)
}

/// What a brute-force halfspace-subset search optimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetScore {
    Diameter,
    Volume,
}

/// Result of a brute-force subset search: the best subset found (in
/// colexicographic order, first winner kept on ties) and its score.
#[derive(Debug, Clone)]
pub struct SubsetSearch {
    pub indices: Vec<usize>,
    pub score: f64,
    pub enumerated: u128,
}

/// Exhaustively searches all `k`-subsets of the rows of `h` for the one
/// whose induced body minimizes the requested score.  Subsets whose
/// body is unbounded score infinity.  Fails with `BudgetExceeded` when
/// `C(m, k)` passes the enumeration budget.
pub fn best_halfspace_subset(
    h: &HPolytope,
    k: usize,
    score: SubsetScore,
) -> Result<SubsetSearch> {
    best_halfspace_subset_with_budget(h, k, score, SUBSET_BUDGET)
}

/// As [`best_halfspace_subset`] with an explicit enumeration budget.
pub fn best_halfspace_subset_with_budget(
    h: &HPolytope,
    k: usize,
    score: SubsetScore,
    budget: u128,
) -> Result<SubsetSearch> {
    let m = h.len();
    let k = k.min(m);
    check_budget(m, k, budget)?;
    let mut best: Option<SubsetSearch> = None;
    let mut enumerated = 0u128;
    for subset in colex_subsets(m, k) {
        enumerated += 1;
        let rows = subset
            .iter()
            .map(|&i| h.halfspaces()[i].clone())
            .collect::<Vec<_>>();
        let sub = HPolytope::new(h.dim(), rows)?;
        let s = subset_body_score(&sub, score)?;
        if best.as_ref().map_or(true, |b| s < b.score) {
            best = Some(SubsetSearch {
                indices: subset,
                score: s,
                enumerated: 0,
            });
        }
    }
    let mut out = best.ok_or(Error::InvalidInput("empty subset search".into()))?;
    out.enumerated = enumerated;
    Ok(out)
}

fn subset_body_score(sub: &HPolytope, score: SubsetScore) -> Result<f64> {
    if hull::check_bounded(sub).is_err() {
        return Ok(f64::INFINITY);
    }
    let verts = match hull::vertices_of_hpolytope(sub, crate::EPS) {
        Ok(v) => v,
        Err(Error::Degenerate) => return Ok(f64::INFINITY),
        Err(e) => return Err(e),
    };
    Ok(match score {
        SubsetScore::Diameter => hull::diameter(verts.points()),
        SubsetScore::Volume => hull::volume(verts.points())?,
    })
}

/// Exhaustively searches all `k`-subsets of the points of `q` for the
/// one minimizing the containment factor `mu` with
/// `Q ⊆ -mu * conv(subset)`.  Subsets admitting no finite factor score
/// infinity.
pub fn best_vertex_subset(q: &VPolytope, k: usize) -> Result<SubsetSearch> {
    best_vertex_subset_with_budget(q, k, SUBSET_BUDGET)
}

/// As [`best_vertex_subset`] with an explicit enumeration budget.
pub fn best_vertex_subset_with_budget(q: &VPolytope, k: usize, budget: u128) -> Result<SubsetSearch> {
    let n = q.len();
    let k = k.min(n);
    check_budget(n, k, budget)?;
    let hull = hull::convex_hull(q.points())?;
    let extremes: Vec<usize> = hull.extreme_indices.clone();
    let mut best: Option<SubsetSearch> = None;
    let mut enumerated = 0u128;
    for subset in colex_subsets(n, k) {
        enumerated += 1;
        let qprime = q.subset(&subset)?;
        let neg = qprime.negate();
        let mut mu: f64 = 0.0;
        for &i in &extremes {
            match polar::gauge(&neg, &q.points()[i]) {
                Ok(g) => mu = mu.max(g.value),
                Err(Error::Infeasible) => {
                    mu = f64::INFINITY;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if best.as_ref().map_or(true, |b| mu < b.score) {
            best = Some(SubsetSearch {
                indices: subset,
                score: mu,
                enumerated: 0,
            });
        }
    }
    let mut out = best.ok_or(Error::InvalidInput("empty subset search".into()))?;
    out.enumerated = enumerated;
    Ok(out)
}

fn check_budget(n: usize, k: usize, budget: u128) -> Result<()> {
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if c > budget {
            return Err(Error::BudgetExceeded(c));
        }
    }
    Ok(())
}

/// Iterates `k`-subsets of `0..n` in colexicographic order: the subset
/// whose largest differing element is smaller comes first.
fn colex_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n {
        Some((0..k).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let s = current.as_mut().unwrap();
        // Colex successor: bump the lowest position that can move
        // without colliding with the one above it, resetting everything
        // below to the bottom.
        let mut i = 0;
        loop {
            if i == k {
                current = None;
                break;
            }
            let cap = if i + 1 < k { s[i + 1] } else { n };
            if s[i] + 1 < cap {
                s[i] += 1;
                for j in 0..i {
                    s[j] = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    })
}

/// One mutation applied to a certificate, with the oracle's judgment of
/// whether the mutated claim is still geometrically true and the
/// verifier's accept/reject decision on it.
#[derive(Debug, Clone)]
pub struct MutationOutcome {
    pub description: String,
    /// Whether the mutated certificate still makes a true containment
    /// claim, decided by the brute-force factor oracle.
    pub claim_still_true: bool,
    pub verifier_accepted: bool,
}

impl MutationOutcome {
    /// A mutation is *applicable* when it actually falsifies the claim;
    /// those are the ones a sound verifier must reject.
    pub fn applicable(&self) -> bool {
        !self.claim_still_true
    }
    pub fn soundness_violated(&self) -> bool {
        self.applicable() && self.verifier_accepted
    }
}

/// Applies a family of certificate mutations — dropping each selected
/// index, shrinking the claimed factor, and perturbing the boundary
/// point — and records, for each, the oracle's truth judgment and the
/// verifier's decision.  A sound verifier never accepts a mutation
/// whose claim the oracle refutes.
pub fn mutate_and_check(q: &VPolytope, cert: &SelectionCertificate) -> Result<Vec<MutationOutcome>> {
    let mut outcomes = Vec::new();
    let slack = 1e-6;

    // Drop each selected index in turn.
    for (pos, &idx) in cert.qprime_indices.iter().enumerate() {
        let mut c = cert.clone();
        c.qprime_indices.remove(pos);
        let truth = if c.qprime_indices.is_empty() {
            false
        } else {
            let qprime = q.subset(&c.qprime_indices)?;
            match min_containment_factor(q, &qprime) {
                Ok(mu) => mu <= c.factor * (1.0 + slack),
                Err(Error::OriginNotInterior) => false,
                Err(e) => return Err(e),
            }
        };
        outcomes.push(MutationOutcome {
            description: format!("drop selected index {idx}"),
            claim_still_true: truth,
            verifier_accepted: select::verify_certificate(q, &c)?.passed,
        });
    }

    // Shrink the claimed factor: halving can leave the claim true on
    // bodies the selection covers generously, so the oracle decides
    // applicability; a tenth is below the universal floor of 1 and is
    // always a falsification.
    for (label, shrink) in [("halve claimed factor", 2.0), ("shrink claimed factor to a tenth", 10.0)]
    {
        let mut c = cert.clone();
        c.factor /= shrink;
        let qprime = q.subset(&c.qprime_indices)?;
        let truth = match min_containment_factor(q, &qprime) {
            Ok(mu) => mu <= c.factor * (1.0 + slack),
            Err(Error::OriginNotInterior) => false,
            Err(e) => return Err(e),
        };
        outcomes.push(MutationOutcome {
            description: label.into(),
            claim_still_true: truth,
            verifier_accepted: select::verify_certificate(q, &c)?.passed,
        });
    }

    // Perturb the boundary point well past the verification tolerance;
    // the claim that it lies on the boundary and reproduces from the
    // stated data becomes false regardless of geometry.
    {
        let mut c = cert.clone();
        let scale = c.boundary.y.norm().max(1.0);
        let mut bump = DVector::zeros(q.dim());
        bump[0] = 1e-3 * scale;
        c.boundary.y += bump;
        outcomes.push(MutationOutcome {
            description: "perturb boundary point".into(),
            claim_still_true: false,
            verifier_accepted: select::verify_certificate(q, &c)?.passed,
        });
    }

    Ok(outcomes)
}

/// Monte Carlo volume estimate of a bounded body: rejection sampling
/// from the vertex bounding box.  Returns `(estimate, standard_error)`;
/// deterministic in `(samples, seed)`.
pub fn monte_carlo_volume(h: &HPolytope, samples: u64, seed: u64) -> Result<(f64, f64)> {
    if samples == 0 {
        return Err(Error::InvalidInput("need at least one sample".into()));
    }
    let verts = hull::vertices_of_hpolytope(h, crate::EPS)?;
    let d = h.dim();
    let mut lo = DVector::from_element(d, f64::INFINITY);
    let mut hi = DVector::from_element(d, f64::NEG_INFINITY);
    for p in verts.points() {
        for i in 0..d {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let box_vol: f64 = (0..d).map(|i| hi[i] - lo[i]).product();
    if !(box_vol > 0.0) {
        return Ok((0.0, 0.0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    let mut x = DVector::zeros(d);
    for _ in 0..samples {
        for i in 0..d {
            x[i] = rng.random_range(lo[i]..hi[i]);
        }
        if h.contains(&x, 0.0) {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    let est = box_vol * p;
    let stderr = box_vol * (p * (1.0 - p) / samples as f64).sqrt();
    Ok((est, stderr))
}
