//! Sparse vertex selection for convex polytopes, with certificates that can be
//! re-checked independently of the code that produced them.
//!
//! The library is organized around two pipelines:
//!
//! * **Vertex sparsification.** Given a polytope `Q = conv(q_1, ..., q_n)`
//!   with the origin in its interior, [`select::sparse_approx`] picks at most
//!   `2d` of its vertices so that `Q` is contained in `-(lambda + 2) d` times
//!   the hull `Q'` of the selected vertices, where `lambda` bounds the
//!   asymmetry of `Q` about the origin.  The selection comes with a
//!   [`select::SelectionCertificate`] whose claims are re-established from
//!   scratch by [`select::verify_certificate`].
//!
//! * **Subfamily selection for halfspace intersections.** Given a family of
//!   halfspaces with bounded, full-dimensional intersection `K`,
//!   [`helly::helly_subset`] picks at most `2d` of them whose intersection
//!   `K_sigma` has diameter at most `2 d^2 * diam K` and volume within an
//!   explicit dimension-dependent factor of `vol K`.  The route goes through
//!   the maximum-volume inscribed ellipsoid ([`john`]), polarity
//!   ([`polar`]), and the vertex sparsifier above.
//!
//! Supporting modules: a dense simplex LP solver ([`lp`]), exact convex hull
//! machinery for small dimensions ([`hull`]), brute-force ground-truth
//! oracles ([`oracle`]), seeded instance generators ([`corpus`]), and JSON
//! schemas for every artifact ([`io`]).
//!
//! Everything is dense `f64`; the code targets desk-scale inputs (dimension
//! up to about 6, tens of halfspaces or vertices) where exhaustive checks
//! are still feasible.

pub mod corpus;
pub mod geom;
pub mod helly;
pub mod hull;
pub mod io;
pub mod john;
pub mod lp;
pub mod oracle;
pub mod polar;
pub mod select;

/// Default absolute tolerance for geometric predicates (membership slack,
/// dedup distance, near-zero snapping).  Operations that need a different
/// scale-specific tolerance take it as an explicit argument; CLI entry
/// points thread a single user-overridable value through.
pub const EPS: f64 = 1e-9;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate input (not full-dimensional)")]
    Degenerate,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron has empty interior")]
    EmptyInterior,
    #[error("origin is not interior to the body")]
    OriginNotInterior,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("iteration limit reached without convergence")]
    IterationLimit,
    #[error("subset budget exceeded: {0} candidate subsets")]
    BudgetExceeded(u128),
    #[error("certificate verification failed: {0}")]
    Verification(select::CheckId),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
