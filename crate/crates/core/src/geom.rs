//! Core geometric types: halfspaces, polytopes in both representations,
//! invertible affine maps, and ellipsoids.
//!
//! Conventions:
//! * a halfspace is the point set `{x : a·x <= b}` and is stored exactly as
//!   given (unnormalized); predicates that need a scale-free answer divide
//!   by `|a|` internally,
//! * all types are immutable once constructed and all operations are pure,
//! * constructors validate invariants and return [`Error`] on bad input
//!   rather than producing a value that later operations cannot trust.

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

/// One closed halfspace `{x : a·x <= b}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    a: DVector<f64>,
    b: f64,
}

impl Halfspace {
    /// Builds the halfspace `{x : a·x <= b}`.  The normal must be nonzero
    /// with finite entries.
    pub fn new(a: DVector<f64>, b: f64) -> Result<Self> {
        if !a.iter().all(|v| v.is_finite()) || !b.is_finite() {
            return Err(Error::InvalidInput("non-finite halfspace data".into()));
        }
        if a.norm() == 0.0 {
            return Err(Error::InvalidInput("zero halfspace normal".into()));
        }
        Ok(Halfspace { a, b })
    }

    /// Convenience constructor from a slice.
    pub fn from_slice(a: &[f64], b: f64) -> Result<Self> {
        Self::new(DVector::from_column_slice(a), b)
    }

    pub fn a(&self) -> &DVector<f64> {
        &self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    /// `a·x - b`; nonpositive inside.
    pub fn eval(&self, x: &DVector<f64>) -> f64 {
        self.a.dot(x) - self.b
    }

    /// `(a·x - b) / |a|`: the signed Euclidean distance from `x` to the
    /// boundary hyperplane, negative inside.
    pub fn signed_distance(&self, x: &DVector<f64>) -> f64 {
        self.eval(x) / self.a.norm()
    }

    /// The same halfspace with `|a| = 1`.
    pub fn normalized(&self) -> Halfspace {
        let n = self.a.norm();
        Halfspace {
            a: &self.a / n,
            b: self.b / n,
        }
    }
}

/// Intersection of finitely many halfspaces (an H-polyhedron; boundedness is
/// a property some operations require and check, not a construction
/// invariant).
#[derive(Debug, Clone, PartialEq)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        for h in &halfspaces {
            if h.dim() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: h.dim(),
                });
            }
        }
        Ok(HPolytope { dim, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    /// Membership with slack `eps` on the Euclidean distance to each
    /// bounding hyperplane (so the test is invariant under row rescaling).
    pub fn contains(&self, x: &DVector<f64>, eps: f64) -> bool {
        self.halfspaces.iter().all(|h| h.signed_distance(x) <= eps)
    }

    /// Largest signed distance from `x` to any bounding hyperplane
    /// (nonpositive iff `x` lies in the polytope).
    pub fn max_violation(&self, x: &DVector<f64>) -> f64 {
        self.halfspaces
            .iter()
            .map(|h| h.signed_distance(x))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The reflection `-P = {x : -x in P}`, i.e. each row `(a, b)` becomes
    /// `(-a, b)`.
    pub fn negate(&self) -> HPolytope {
        HPolytope {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| Halfspace {
                    a: -&h.a,
                    b: h.b,
                })
                .collect(),
        }
    }

    /// Every row rescaled to a unit normal.
    pub fn normalized(&self) -> HPolytope {
        HPolytope {
            dim: self.dim,
            halfspaces: self.halfspaces.iter().map(Halfspace::normalized).collect(),
        }
    }

    /// The dilate `t * P` for `t > 0`: rows `(a, t b)`.
    pub fn scale(&self, t: f64) -> HPolytope {
        HPolytope {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| Halfspace {
                    a: h.a.clone(),
                    b: h.b * t,
                })
                .collect(),
        }
    }
}

/// Convex hull of finitely many points.  The list may contain interior or
/// duplicate points; operations that need the extreme points compute them.
#[derive(Debug, Clone, PartialEq)]
pub struct VPolytope {
    dim: usize,
    points: Vec<DVector<f64>>,
}

impl VPolytope {
    pub fn new(dim: usize, points: Vec<DVector<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInput("empty point list".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: p.len(),
                });
            }
            if !p.iter().all(|v| v.is_finite()) {
                return Err(Error::InvalidInput("non-finite point".into()));
            }
        }
        Ok(VPolytope { dim, points })
    }

    pub fn from_rows(dim: usize, rows: &[&[f64]]) -> Result<Self> {
        Self::new(
            dim,
            rows.iter().map(|r| DVector::from_column_slice(r)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[DVector<f64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The reflection `-Q = conv{-q_i}`.
    pub fn negate(&self) -> VPolytope {
        VPolytope {
            dim: self.dim,
            points: self.points.iter().map(|p| -p).collect(),
        }
    }

    /// The dilate `t * Q = conv{t q_i}`.
    pub fn scale(&self, t: f64) -> VPolytope {
        VPolytope {
            dim: self.dim,
            points: self.points.iter().map(|p| p * t).collect(),
        }
    }

    /// The sub-polytope spanned by the points at the given indices.
    pub fn subset(&self, indices: &[usize]) -> Result<VPolytope> {
        let points = indices
            .iter()
            .map(|&i| {
                self.points
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidInput(format!("point index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        VPolytope::new(self.dim, points)
    }
}

/// Invertible affine map `x -> L x + s`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    linear: DMatrix<f64>,
    shift: DVector<f64>,
    // Cached inverse of the linear part; existence is the construction
    // invariant, so keeping it here lets apply_h/inverse stay infallible.
    inv_linear: DMatrix<f64>,
}

impl AffineMap {
    /// Builds `x -> linear·x + shift`.  Fails unless the linear part is
    /// square, matches the shift, and is invertible (smallest singular value
    /// above `1e-12 * max(1, largest singular value)`).
    pub fn new(linear: DMatrix<f64>, shift: DVector<f64>) -> Result<Self> {
        let d = shift.len();
        if linear.nrows() != d || linear.ncols() != d {
            return Err(Error::Dimension {
                expected: d,
                got: linear.nrows().max(linear.ncols()),
            });
        }
        if !linear.iter().all(|v| v.is_finite()) || !shift.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("non-finite affine map data".into()));
        }
        let svd = linear.clone().svd(false, false);
        let smax = svd.singular_values.max();
        let smin = svd.singular_values.min();
        if smin <= 1e-12 * smax.max(1.0) {
            return Err(Error::InvalidInput(
                "affine map has (numerically) singular linear part".into(),
            ));
        }
        let inv_linear = linear
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidInput("linear part is not invertible".into()))?;
        Ok(AffineMap {
            linear,
            shift,
            inv_linear,
        })
    }

    pub fn identity(dim: usize) -> Self {
        AffineMap {
            linear: DMatrix::identity(dim, dim),
            shift: DVector::zeros(dim),
            inv_linear: DMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn linear(&self) -> &DMatrix<f64> {
        &self.linear
    }

    pub fn shift(&self) -> &DVector<f64> {
        &self.shift
    }

    pub fn apply(&self, x: &DVector<f64>) -> DVector<f64> {
        &self.linear * x + &self.shift
    }

    /// The inverse map `y -> L^{-1}(y - s)`.
    pub fn inverse(&self) -> AffineMap {
        AffineMap {
            linear: self.inv_linear.clone(),
            shift: -(&self.inv_linear * &self.shift),
            inv_linear: self.linear.clone(),
        }
    }

    /// Image of a V-polytope: map every point.
    pub fn apply_v(&self, q: &VPolytope) -> Result<VPolytope> {
        if q.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: q.dim(),
            });
        }
        VPolytope::new(q.dim(), q.points().iter().map(|p| self.apply(p)).collect())
    }

    /// Image of an H-polytope.  A row `{a·x <= b}` maps to
    /// `{a'·x <= b + a'·s}` with `a' = L^{-T} a`, since
    /// `a·L^{-1}(x - s) <= b` rearranges to exactly that.
    pub fn apply_h(&self, p: &HPolytope) -> Result<HPolytope> {
        if p.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: p.dim(),
            });
        }
        let rows = p
            .halfspaces()
            .iter()
            .map(|h| {
                let a_new = self.inv_linear.transpose() * h.a();
                let b_new = h.b() + a_new.dot(&self.shift);
                Halfspace::new(a_new, b_new)
            })
            .collect::<Result<Vec<_>>>()?;
        HPolytope::new(p.dim(), rows)
    }
}

/// Ellipsoid `{c + E u : |u| <= 1}` with `E` symmetric positive definite.
#[derive(Debug, Clone, PartialEq)]
pub struct Ellipsoid {
    center: DVector<f64>,
    shape: DMatrix<f64>,
}

impl Ellipsoid {
    /// Builds the ellipsoid; `shape` must be symmetric (up to a relative
    /// `1e-8`, then symmetrized exactly) and positive definite.
    pub fn new(center: DVector<f64>, shape: DMatrix<f64>) -> Result<Self> {
        let d = center.len();
        if shape.nrows() != d || shape.ncols() != d {
            return Err(Error::Dimension {
                expected: d,
                got: shape.nrows().max(shape.ncols()),
            });
        }
        let asym = (&shape - shape.transpose()).norm();
        if asym > 1e-8 * shape.norm().max(1.0) {
            return Err(Error::InvalidInput("ellipsoid shape is not symmetric".into()));
        }
        let shape = (&shape + shape.transpose()) * 0.5;
        if shape.clone().cholesky().is_none() {
            return Err(Error::InvalidInput(
                "ellipsoid shape is not positive definite".into(),
            ));
        }
        Ok(Ellipsoid { center, shape })
    }

    pub fn ball(dim: usize, radius: f64, center: DVector<f64>) -> Result<Self> {
        Self::new(center, DMatrix::identity(dim, dim) * radius)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> &DVector<f64> {
        &self.center
    }

    pub fn shape(&self) -> &DMatrix<f64> {
        &self.shape
    }

    /// `det E`, the volume of the ellipsoid relative to the unit ball.
    pub fn det(&self) -> f64 {
        self.shape.determinant()
    }

    /// Membership: `|E^{-1}(x - c)| <= 1 + eps`.
    pub fn contains(&self, x: &DVector<f64>, eps: f64) -> bool {
        let diff = x - &self.center;
        match self.shape.clone().lu().solve(&diff) {
            Some(u) => u.norm() <= 1.0 + eps,
            None => false,
        }
    }

    /// The quadratic-form matrix `E E^T` of the region
    /// `{x : (x-c)^T (E E^T)^{-1} (x-c) <= 1}`.  Two ellipsoids are equal as
    /// point sets iff their centers and quadratic forms agree, which makes
    /// this the right object to compare under affine maps.
    pub fn quadratic_matrix(&self) -> DMatrix<f64> {
        &self.shape * self.shape.transpose()
    }
}
