//! B-spline bases (uniform periodic and clamped), collocation matrices,
//! Greville abscissas and per-interval Gauss-Legendre quadrature grids.
//!
//! Periodic bases live on [0, 2*pi] with all knots of multiplicity one and
//! control indices wrapping modulo `num_controls`; clamped bases live on
//! [0, 1] with full-multiplicity end knots. Evaluating a spline (or any of
//! its derivatives) at a set of points is a multiplication of the
//! corresponding collocation matrix with the vector of control points.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use std::f64::consts::PI;

pub const TWO_PI: f64 = 2.0 * PI;

/// Flavor of a spline basis: periodic on [0, 2*pi] or clamped on [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Periodic,
    Clamped,
}

/// A univariate B-spline basis of fixed degree on a uniform knot sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineBasis {
    degree: usize,
    num_controls: usize,
    kind: BasisKind,
    /// Clamped: the full clamped knot vector of length `num_controls + degree + 1`.
    /// Periodic: the uniform knot sequence extended by `degree` spans on both
    /// sides of [0, 2*pi] so that every evaluation span sees a plain local
    /// knot window.
    knots: Vec<f64>,
}

impl SplineBasis {
    /// Builds a uniform basis. Periodic bases use `num_controls` knot spans
    /// of width `2*pi/num_controls`; clamped bases use `num_controls - degree`
    /// interior spans with end knots of multiplicity `degree + 1`.
    pub fn new(degree: usize, num_controls: usize, kind: BasisKind) -> Result<Self> {
        if num_controls < degree + 1 {
            return Err(Error::TooFewControls {
                degree,
                num_controls,
            });
        }
        let knots = match kind {
            BasisKind::Periodic => {
                let dt = TWO_PI / num_controls as f64;
                (0..=num_controls + 2 * degree)
                    .map(|k| (k as f64 - degree as f64) * dt)
                    .collect()
            }
            BasisKind::Clamped => {
                let spans = num_controls - degree;
                let mut knots = Vec::with_capacity(num_controls + degree + 1);
                knots.extend(std::iter::repeat(0.0).take(degree + 1));
                for i in 1..spans {
                    knots.push(i as f64 / spans as f64);
                }
                knots.extend(std::iter::repeat(1.0).take(degree + 1));
                knots
            }
        };
        Ok(Self {
            degree,
            num_controls,
            kind,
            knots,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_controls(&self) -> usize {
        self.num_controls
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn domain(&self) -> (f64, f64) {
        match self.kind {
            BasisKind::Periodic => (0.0, TWO_PI),
            BasisKind::Clamped => (0.0, 1.0),
        }
    }

    pub fn domain_len(&self) -> f64 {
        let (a, b) = self.domain();
        b - a
    }

    /// Number of knot spans covering the domain.
    pub fn num_intervals(&self) -> usize {
        match self.kind {
            BasisKind::Periodic => self.num_controls,
            BasisKind::Clamped => self.num_controls - self.degree,
        }
    }

    pub fn interval_bounds(&self, i: usize) -> (f64, f64) {
        let w = self.domain_len() / self.num_intervals() as f64;
        (i as f64 * w, (i + 1) as f64 * w)
    }

    /// Evaluates the `degree + 1` basis functions that do not vanish at `x`,
    /// together with their derivatives up to order `n_ders`.
    ///
    /// Returns `(first, ders)` where the nonzero functions have control
    /// indices `first + l` for `l = 0..=degree` (reduced modulo
    /// `num_controls` for periodic bases; `control_index` does this) and
    /// `ders[k][l]` is the k-th derivative of function `first + l`.
    pub fn eval_nonzero(&self, x: f64, n_ders: usize) -> Result<(isize, Vec<Vec<f64>>)> {
        if n_ders > self.degree {
            return Err(Error::DerivativeOrder {
                order: n_ders,
                degree: self.degree,
            });
        }
        let p = self.degree;
        let (span, x) = match self.kind {
            BasisKind::Periodic => {
                let x = x.rem_euclid(TWO_PI);
                let dt = TWO_PI / self.num_controls as f64;
                let m = ((x / dt) as usize).min(self.num_controls - 1);
                // extended knot index: span [m*dt, (m+1)*dt) starts at knot m + p
                (m + p, x)
            }
            BasisKind::Clamped => {
                let eps = 1e-12;
                if !(-eps..=1.0 + eps).contains(&x) {
                    return Err(Error::PointOutsideDomain(x));
                }
                let x = x.clamp(0.0, 1.0);
                let spans = self.num_controls - p;
                let m = ((x * spans as f64) as usize).min(spans - 1);
                (m + p, x)
            }
        };
        let ders = ders_basis_funs(span, x, p, n_ders, &self.knots);
        // control index of the first nonzero function
        let first = span as isize - p as isize
            - match self.kind {
                BasisKind::Periodic => p as isize,
                BasisKind::Clamped => 0,
            };
        Ok((first, ders))
    }

    /// Maps an unwrapped local control offset to a valid control index.
    pub fn control_index(&self, raw: isize) -> usize {
        match self.kind {
            BasisKind::Periodic => raw.rem_euclid(self.num_controls as isize) as usize,
            BasisKind::Clamped => raw as usize,
        }
    }

    /// Collocation matrix: entry (m, j) is the `deriv_order`-th derivative of
    /// basis function j at `points[m]`. Evaluating a spline at the points is
    /// `matrix * controls`.
    pub fn collocation_matrix(&self, points: &[f64], deriv_order: usize) -> Result<DMatrix<f64>> {
        let mut mat = DMatrix::zeros(points.len(), self.num_controls);
        for (row, &x) in points.iter().enumerate() {
            let (first, ders) = self.eval_nonzero(x, deriv_order)?;
            for (l, &v) in ders[deriv_order].iter().enumerate() {
                let j = self.control_index(first + l as isize);
                mat[(row, j)] += v;
            }
        }
        Ok(mat)
    }

    /// Greville abscissas: knot averages at which a spline with controls
    /// equal to the abscissas reproduces the identity map. Periodic values
    /// are wrapped into [0, 2*pi).
    pub fn greville(&self) -> Vec<f64> {
        let p = self.degree;
        match self.kind {
            BasisKind::Clamped => (0..self.num_controls)
                .map(|i| {
                    if p == 0 {
                        0.5 * (self.knots[i] + self.knots[i + 1])
                    } else {
                        self.knots[i + 1..=i + p].iter().sum::<f64>() / p as f64
                    }
                })
                .collect(),
            BasisKind::Periodic => {
                let dt = TWO_PI / self.num_controls as f64;
                (0..self.num_controls)
                    .map(|j| {
                        let xi = dt * (j as f64 + (p as f64 + 1.0) / 2.0);
                        xi.rem_euclid(TWO_PI)
                    })
                    .collect()
            }
        }
    }

    /// Gauss-Legendre quadrature with `order` points per knot interval.
    pub fn quadrature(&self, order: usize) -> QuadratureGrid {
        assert!(order >= 1, "quadrature order must be at least 1");
        let (ref_nodes, ref_weights) = gauss_legendre(order);
        let n_int = self.num_intervals();
        let mut nodes = Vec::with_capacity(n_int * order);
        let mut weights = Vec::with_capacity(n_int * order);
        for i in 0..n_int {
            let (a, b) = self.interval_bounds(i);
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            for k in 0..order {
                nodes.push(mid + half * ref_nodes[k]);
                weights.push(half * ref_weights[k]);
            }
        }
        QuadratureGrid {
            nodes,
            weights,
            order,
        }
    }

    /// Default quadrature: `degree + 1` points per interval.
    pub fn default_quadrature(&self) -> QuadratureGrid {
        self.quadrature(self.degree + 1)
    }
}

/// Quadrature nodes and weights grouped per knot interval; the weights sum
/// to the length of the basis domain.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
}

impl QuadratureGrid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.weights
            .iter()
            .zip(values)
            .map(|(w, v)| w * v)
            .sum()
    }
}

/// Basis functions and derivatives that do not vanish on the span starting
/// at knot index `span` (the de Boor recursion, derivatives included).
/// `ders[k][j]` is the k-th derivative of the j-th nonzero function.
fn ders_basis_funs(span: usize, x: f64, p: usize, n_ders: usize, knots: &[f64]) -> Vec<Vec<f64>> {
    let n = n_ders.min(p);
    let mut ndu = vec![vec![0.0; p + 1]; p + 1];
    let mut left = vec![0.0; p + 1];
    let mut right = vec![0.0; p + 1];
    ndu[0][0] = 1.0;
    for j in 1..=p {
        left[j] = x - knots[span + 1 - j];
        right[j] = knots[span + j] - x;
        let mut saved = 0.0;
        for r in 0..j {
            ndu[j][r] = right[r + 1] + left[j - r];
            let temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }
    let mut ders = vec![vec![0.0; p + 1]; n_ders + 1];
    for j in 0..=p {
        ders[0][j] = ndu[j][p];
    }
    if n == 0 {
        return ders;
    }
    let mut a = [vec![0.0; p + 1], vec![0.0; p + 1]];
    for r in 0..=p {
        let (mut s1, mut s2) = (0usize, 1usize);
        a[0][0] = 1.0;
        for k in 1..=n {
            let mut d = 0.0;
            let rk = r as isize - k as isize;
            let pk = p - k;
            if r >= k {
                a[s2][0] = a[s1][0] / ndu[pk + 1][rk as usize];
                d = a[s2][0] * ndu[rk as usize][pk];
            }
            let j1 = if rk >= -1 { 1 } else { (-rk) as usize };
            let j2 = if r as isize - 1 <= pk as isize {
                k - 1
            } else {
                p - r
            };
            for j in j1..=j2 {
                a[s2][j] =
                    (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][(rk + j as isize) as usize];
                d += a[s2][j] * ndu[(rk + j as isize) as usize][pk];
            }
            if r <= pk {
                a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
                d += a[s2][k] * ndu[r][pk];
            }
            ders[k][r] = d;
            std::mem::swap(&mut s1, &mut s2);
        }
    }
    let mut factor = p as f64;
    for k in 1..=n {
        for j in 0..=p {
            ders[k][j] *= factor;
        }
        factor *= (p - k) as f64;
    }
    ders
}

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
/// Exact for polynomials of degree up to `2 * n - 1`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-based initial guess, refined by Newton iteration.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (_, d) = legendre_with_deriv(n, x);
                dp = d;
                break;
            }
        }
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = if (x * x - 1.0).abs() < 1e-300 {
        // endpoints never arise for interior Gauss nodes
        0.0
    } else {
        n as f64 * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, d)
}
