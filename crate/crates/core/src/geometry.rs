//! Lines at allowed angles, the two-line intersection solver and the plane
//! isometries used by the symmetry checks.

use crate::error::{Error, Result};
use crate::numeric::{angle_sub, Angle, Point, Tolerance};

/// The line `base + t·(cos dir + i sin dir)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub base: Point,
    pub dir: Angle,
}

impl Line {
    pub fn new(base: Point, dir: Angle) -> Self {
        Self { base, dir }
    }

    /// Signed perpendicular offset of the line from the origin.
    pub fn offset(&self) -> f64 {
        Point::direction(self.dir).cross(&self.base)
    }

    /// Distance from `p` to the line.
    pub fn distance_to(&self, p: &Point) -> f64 {
        Point::direction(self.dir).cross(&(*p - self.base)).abs()
    }

    pub fn same_as(&self, other: &Line, tol: &Tolerance) -> bool {
        self.dir.approx_eq(&other.dir, tol) && other.distance_to(&self.base) < tol.eps_point
    }
}

/// Intersection `[[p,q]]_{α,β}` of the line through `p` at angle `alpha`
/// with the line through `q` at angle `beta`.
///
/// Solves `p + r·e^{iα} = q + s·e^{iβ}` for `r`; the system determinant is
/// `sin(β − α)`.
pub fn intersect(p: Point, q: Point, alpha: Angle, beta: Angle, tol: &Tolerance) -> Result<Point> {
    if alpha.approx_eq(&beta, tol) {
        return Err(Error::ParallelLines);
    }
    let u = Point::direction(alpha);
    let v = Point::direction(beta);
    let det = u.cross(&v);
    let exact = alpha.is_rational() && beta.is_rational();
    if !exact && det.abs() < tol.eps_scalar {
        return Err(Error::NearParallel(det.abs()));
    }
    let w = q - p;
    let r = w.cross(&v) / det;
    Ok(p + u * r)
}

/// Real part of the point where the line through `q` at angle `beta`
/// meets the real axis.
pub fn project_to_real(q: Point, beta: Angle, tol: &Tolerance) -> Result<f64> {
    if beta.is_zero() {
        return if q.im.abs() < tol.eps_point {
            Ok(q.re)
        } else {
            Err(Error::ParallelLines)
        };
    }
    let (c, s) = beta.cos_sin();
    Ok(q.re - q.im * c / s)
}

/// Rotation by `theta` radians about `center`.
pub fn rotate(p: Point, theta: f64, center: Point) -> Point {
    let (s, c) = theta.sin_cos();
    let d = p - center;
    center + Point::new(c * d.re - s * d.im, s * d.re + c * d.im)
}

/// Reflection across the line through the origin at `axis_angle` radians.
pub fn reflect(p: Point, axis_angle: f64) -> Point {
    let (s, c) = (2.0 * axis_angle).sin_cos();
    Point::new(c * p.re + s * p.im, s * p.re - c * p.im)
}

/// Image of the direction `eta` under reflection across the axis `theta`:
/// `2θ − η` modulo π.
pub fn reflect_angle(eta: Angle, theta: Angle) -> Angle {
    angle_sub(theta.times(2), eta)
}

/// Plane isometries fixing the structure's point group or lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Isometry {
    Rotation {
        theta: f64,
        center: Point,
    },
    /// Reflection across a line through the origin.
    Reflection {
        axis_angle: f64,
    },
    Translation {
        by: Point,
    },
}

impl Isometry {
    pub fn apply(&self, p: Point) -> Point {
        match *self {
            Isometry::Rotation { theta, center } => rotate(p, theta, center),
            Isometry::Reflection { axis_angle } => reflect(p, axis_angle),
            Isometry::Translation { by } => p + by,
        }
    }

    /// Determinant of the linear part.
    pub fn determinant(&self) -> f64 {
        match *self {
            Isometry::Rotation { theta, .. } => {
                let (s, c) = theta.sin_cos();
                c * c + s * s
            }
            Isometry::Reflection { axis_angle } => {
                let (s, c) = (2.0 * axis_angle).sin_cos();
                -c * c - s * s
            }
            Isometry::Translation { .. } => 1.0,
        }
    }
}
