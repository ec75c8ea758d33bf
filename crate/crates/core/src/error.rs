use thiserror::Error;

/// Errors produced by curve construction, metric evaluation and the
/// geodesic solvers.
#[derive(Error, Debug)]
pub enum Error {
    #[error("num_controls {num_controls} must be at least degree + 1 = {}", degree + 1)]
    TooFewControls { degree: usize, num_controls: usize },

    #[error("point {0} lies outside the basis domain")]
    PointOutsideDomain(f64),

    #[error("derivative order {order} exceeds spline degree {degree}")]
    DerivativeOrder { order: usize, degree: usize },

    #[error("no contour: image has no foreground pixels")]
    NoContour,

    #[error("degenerate polyline: {0}")]
    DegeneratePolyline(String),

    #[error("curve fit failed to produce a regular curve after {0} smoothing retries")]
    FitNotRegular(usize),

    #[error("invalid metric parameters: {0}")]
    InvalidMetricParams(String),

    #[error("curve is singular: min |c_theta| = {min_speed:.3e} below threshold {threshold:.3e}")]
    SingularCurve { min_speed: f64, threshold: f64 },

    #[error("reparametrization violates the diffeomorphism condition at knot interval {0}")]
    ReparamInfeasible(usize),

    #[error("line search failed at iteration {iter} (objective {objective:.6e})")]
    LineSearchFailed { iter: usize, objective: f64 },

    #[error("discrete exponential failed at step {step}: {reason}")]
    ShootingFailed { step: usize, reason: String },

    #[error("linear system is singular: {0}")]
    SingularSystem(String),

    #[error("distance matrix incomplete: {failed} of {total} pairs failed, first failure ({i},{j}): {first}")]
    DistanceMatrixIncomplete {
        failed: usize,
        total: usize,
        i: usize,
        j: usize,
        first: String,
    },

    #[error("{0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
