//! Scalar kernel: angles modulo π, tolerances and complex-plane points.
//!
//! Angles come in two flavours. [`Angle::RationalPi`] stores `num/den · π`
//! exactly and all arithmetic between two such angles stays exact.
//! [`Angle::Real`] carries a radian value and is compared with
//! [`Tolerance::eps_angle`]. Both are kept reduced into `[0, π)`.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;
const SQRT2_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Equality thresholds used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerance {
    /// Radians.
    pub eps_angle: f64,
    /// Euclidean distance in the plane.
    pub eps_point: f64,
    /// Dimensionless (determinants, lattice coordinates).
    pub eps_scalar: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_angle: 1e-10,
            eps_point: 1e-9,
            eps_scalar: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("eps_angle", self.eps_angle),
            ("eps_point", self.eps_point),
            ("eps_scalar", self.eps_scalar),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidTolerance(format!(
                    "{name} must be finite and > 0, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// An angle modulo π.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", try_from = "RawAngle")]
pub enum Angle {
    /// `num/den · π` in lowest terms with `0 <= num < den`.
    RationalPi { num: i64, den: i64 },
    /// Radians in `[0, π)`.
    Real { radians: f64 },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RawAngle {
    RationalPi { num: i64, den: i64 },
    Real { radians: f64 },
}

impl TryFrom<RawAngle> for Angle {
    type Error = Error;

    fn try_from(raw: RawAngle) -> Result<Self> {
        match raw {
            RawAngle::RationalPi { num, den } => Angle::rational_pi(num, den),
            RawAngle::Real { radians } => normalize_angle(radians),
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduce a radian value into `[0, π)`.
fn reduce_radians(raw: f64) -> f64 {
    let r = raw.rem_euclid(PI);
    // rem_euclid can round up to exactly π for tiny negative inputs
    if r >= PI || PI - r < 4.0 * f64::EPSILON {
        0.0
    } else {
        r
    }
}

/// Normalize a finite radian value into `[0, π)`.
pub fn normalize_angle(raw: f64) -> Result<Angle> {
    if !raw.is_finite() {
        return Err(Error::InvalidAngle(format!("non-finite radians {raw}")));
    }
    Ok(Angle::Real {
        radians: reduce_radians(raw),
    })
}

impl Angle {
    pub const ZERO: Angle = Angle::RationalPi { num: 0, den: 1 };
    pub const HALF_PI: Angle = Angle::RationalPi { num: 1, den: 2 };

    /// `num/den · π` reduced modulo π into lowest terms.
    pub fn rational_pi(num: i64, den: i64) -> Result<Angle> {
        if den == 0 {
            return Err(Error::InvalidAngle("zero denominator".into()));
        }
        Ok(Self::from_ratio(num as i128, den as i128))
    }

    fn from_ratio(num: i128, den: i128) -> Angle {
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        num = num.rem_euclid(den);
        let g = gcd(num, den).max(1);
        num /= g;
        den /= g;
        if num == 0 {
            den = 1;
        }
        Angle::RationalPi {
            num: num as i64,
            den: den as i64,
        }
    }

    /// `π/n`.
    pub fn pi_over(n: i64) -> Angle {
        Self::from_ratio(1, n as i128)
    }

    /// Radian value in `[0, π)`.
    pub fn radians(&self) -> f64 {
        match *self {
            Angle::RationalPi { num, den } => num as f64 * PI / den as f64,
            Angle::Real { radians } => radians,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Angle::RationalPi { .. })
    }

    pub fn is_zero(&self) -> bool {
        match *self {
            Angle::RationalPi { num, .. } => num == 0,
            Angle::Real { radians } => radians == 0.0,
        }
    }

    /// `(cos, sin)` of the represented angle. Bit-exact for the standard
    /// angles with denominators 1, 2, 3, 4 and 6.
    pub fn cos_sin(&self) -> (f64, f64) {
        angle_cos_sin(*self)
    }

    /// Distance to `other` measured on the circle of circumference π.
    pub fn distance(&self, other: &Angle) -> f64 {
        let d = (self.radians() - other.radians()).abs();
        d.min(PI - d)
    }

    /// Exact for two rational angles, within `eps_angle` otherwise.
    pub fn approx_eq(&self, other: &Angle, tol: &Tolerance) -> bool {
        match (self, other) {
            (Angle::RationalPi { num: a, den: b }, Angle::RationalPi { num: c, den: d }) => {
                a == c && b == d
            }
            _ => self.distance(other) < tol.eps_angle,
        }
    }

    /// Half of the representative in `[0, π)`, so the result is in `[0, π/2)`.
    pub fn half(&self) -> Angle {
        match *self {
            Angle::RationalPi { num, den } => Self::from_ratio(num as i128, 2 * den as i128),
            Angle::Real { radians } => Angle::Real {
                radians: radians / 2.0,
            },
        }
    }

    /// Ordering by radian value; exact between rational angles.
    pub fn cmp_value(&self, other: &Angle) -> Ordering {
        match (self, other) {
            (Angle::RationalPi { num: a, den: b }, Angle::RationalPi { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.radians().total_cmp(&other.radians()),
        }
    }

    /// Multiply by an integer modulo π.
    pub fn times(&self, k: i64) -> Angle {
        match *self {
            Angle::RationalPi { num, den } => {
                Self::from_ratio(num as i128 * k as i128, den as i128)
            }
            Angle::Real { radians } => Angle::Real {
                radians: reduce_radians(radians * k as f64),
            },
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Angle::RationalPi { num: 0, .. } => write!(f, "0"),
            Angle::RationalPi { num: 1, den: 1 } => write!(f, "pi"),
            Angle::RationalPi { num: 1, den } => write!(f, "pi/{den}"),
            Angle::RationalPi { num, den: 1 } => write!(f, "{num}pi"),
            Angle::RationalPi { num, den } => write!(f, "{num}pi/{den}"),
            Angle::Real { radians } => write!(f, "rad:{radians}"),
        }
    }
}

impl std::str::FromStr for Angle {
    type Err = Error;

    /// Parses `0`, `pi`, `Api`, `pi/B`, `Api/B` (exact) or `rad:<float>`.
    fn from_str(s: &str) -> Result<Angle> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad angle '{s}'"));
        if let Some(r) = s.strip_prefix("rad:") {
            let v: f64 = r.trim().parse().map_err(|_| bad())?;
            return normalize_angle(v);
        }
        if s == "0" {
            return Ok(Angle::ZERO);
        }
        let (lhs, den) = match s.split_once('/') {
            Some((l, d)) => (l, d.parse::<i64>().map_err(|_| bad())?),
            None => (s, 1),
        };
        let num = match lhs.strip_suffix("pi").ok_or_else(bad)? {
            "" => 1,
            "-" => -1,
            n => n.parse::<i64>().map_err(|_| bad())?,
        };
        if den <= 0 {
            return Err(bad());
        }
        Angle::rational_pi(num, den)
    }
}

/// `(cos, sin)` of an angle. `sin >= 0` because angles live in `[0, π)`.
pub fn angle_cos_sin(a: Angle) -> (f64, f64) {
    match a {
        Angle::RationalPi { num, den } => match (num, den) {
            (0, 1) => (1.0, 0.0),
            (1, 2) => (0.0, 1.0),
            (1, 3) => (0.5, SQRT3_2),
            (2, 3) => (-0.5, SQRT3_2),
            (1, 4) => (SQRT2_2, SQRT2_2),
            (3, 4) => (-SQRT2_2, SQRT2_2),
            (1, 6) => (SQRT3_2, 0.5),
            (5, 6) => (-SQRT3_2, 0.5),
            _ => {
                let r = a.radians();
                (r.cos(), r.sin())
            }
        },
        Angle::Real { radians } => (radians.cos(), radians.sin()),
    }
}

/// Sum modulo π. Exact when both operands are rational.
pub fn angle_add(a: Angle, b: Angle) -> Angle {
    match (a, b) {
        (Angle::RationalPi { num: n1, den: d1 }, Angle::RationalPi { num: n2, den: d2 }) => {
            Angle::from_ratio(
                n1 as i128 * d2 as i128 + n2 as i128 * d1 as i128,
                d1 as i128 * d2 as i128,
            )
        }
        _ => Angle::Real {
            radians: reduce_radians(a.radians() + b.radians()),
        },
    }
}

/// Difference modulo π. Exact when both operands are rational.
pub fn angle_sub(a: Angle, b: Angle) -> Angle {
    angle_add(a, -b)
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        angle_add(self, rhs)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        angle_sub(self, rhs)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        match self {
            Angle::RationalPi { num, den } => Angle::from_ratio(-(num as i128), den as i128),
            Angle::Real { radians } => Angle::Real {
                radians: reduce_radians(-radians),
            },
        }
    }
}

/// A point of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub re: f64,
    pub im: f64,
}

impl Point {
    pub const ZERO: Point = Point { re: 0.0, im: 0.0 };
    pub const ONE: Point = Point { re: 1.0, im: 0.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// Fails on NaN or infinite coordinates.
    pub fn checked(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Self { re, im })
        } else {
            Err(Error::InvalidPoint)
        }
    }

    /// `cos θ + i sin θ`.
    pub fn unit(theta: f64) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    /// Unit vector in the direction of an angle.
    pub fn direction(a: Angle) -> Self {
        let (c, s) = a.cos_sin();
        Self::new(c, s)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn norm(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (*self - *other).norm()
    }

    pub fn approx_eq(&self, other: &Point, tol: &Tolerance) -> bool {
        self.dist(other) < tol.eps_point
    }

    pub fn dot(&self, other: &Point) -> f64 {
        self.re * other.re + self.im * other.im
    }

    /// z-component of the planar cross product.
    pub fn cross(&self, other: &Point) -> f64 {
        self.re * other.im - self.im * other.re
    }

    /// Complex multiplication.
    pub fn cmul(&self, other: &Point) -> Point {
        Point::new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.re, -self.im)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.re * k, self.im * k)
    }
}

impl Mul<Point> for f64 {
    type Output = Point;
    fn mul(self, p: Point) -> Point {
        p * self
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rp(n: i64, d: i64) -> Angle {
        Angle::rational_pi(n, d).unwrap()
    }

    #[test]
    fn rational_reduction_modulo_pi() {
        assert_eq!(rp(4, 3), rp(1, 3));
        assert_eq!(rp(1, 1), Angle::ZERO);
        assert_eq!(rp(-1, 4), rp(3, 4));
        assert_eq!(rp(2, 4), Angle::RationalPi { num: 1, den: 2 });
        assert_eq!(rp(3, -6), Angle::RationalPi { num: 1, den: 2 });
        assert!(Angle::rational_pi(1, 0).is_err());
    }

    #[test]
    fn normalize_real_values() {
        assert_eq!(normalize_angle(PI).unwrap(), Angle::Real { radians: 0.0 });
        let a = normalize_angle((2.0f64).atan()).unwrap();
        assert!((a.radians() - 1.107_148_717_794_09).abs() < 1e-12);
        let shifted = normalize_angle((2.0f64).atan() + 3.0 * PI).unwrap();
        assert!(a.approx_eq(&shifted, &Tolerance::default()));
        assert!(normalize_angle(f64::NAN).is_err());
        assert!(normalize_angle(f64::INFINITY).is_err());
        let tiny = normalize_angle(-1e-300).unwrap().radians();
        assert!((0.0..PI).contains(&tiny));
    }

    #[test]
    fn arcsin_example_angle() {
        let raw = (2.0 * 5f64.sqrt() / 5.0).asin();
        let a = normalize_angle(raw).unwrap();
        assert!((a.radians() - 1.107_148_7).abs() < 1e-7);
        let (c, s) = a.cos_sin();
        assert!((c - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        assert!((s - 2.0 / 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn standard_angle_constants() {
        assert_eq!(rp(1, 3).cos_sin(), (0.5, 3f64.sqrt() / 2.0));
        assert_eq!(Angle::ZERO.cos_sin(), (1.0, 0.0));
        assert_eq!(rp(1, 2).cos_sin(), (0.0, 1.0));
        assert_eq!(rp(5, 6).cos_sin().1, 0.5);
    }

    #[test]
    fn exact_addition_and_subtraction() {
        assert_eq!(rp(1, 3) + rp(2, 3), Angle::ZERO);
        assert_eq!(rp(1, 4) + rp(1, 2), rp(3, 4));
        assert_eq!(rp(1, 5) - rp(2, 5), rp(4, 5));
        assert_eq!(rp(1, 5).times(2), rp(2, 5));
        assert_eq!(rp(3, 5).half(), rp(3, 10));
        assert!((rp(1, 4) + Angle::Real { radians: 0.5 }).radians() - (PI / 4.0 + 0.5) < 1e-15);
    }

    #[test]
    fn mixed_comparison_uses_tolerance() {
        let tol = Tolerance::default();
        let r = Angle::Real {
            radians: PI / 3.0 + 1e-12,
        };
        assert!(r.approx_eq(&rp(1, 3), &tol));
        assert!(rp(1, 3).approx_eq(&r, &tol));
        let near_pi = Angle::Real {
            radians: PI - 1e-12,
        };
        assert!(near_pi.approx_eq(&Angle::ZERO, &tol));
    }

    #[test]
    fn json_encoding() {
        let a = rp(2, 3);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"kind":"rational_pi","num":2,"den":3}"#);
        assert_eq!(serde_json::from_str::<Angle>(&s).unwrap(), a);
        let r: Angle = serde_json::from_str(r#"{"kind":"real","radians":4.0}"#).unwrap();
        assert!((r.radians() - (4.0 - PI)).abs() < 1e-15);
        let unreduced: Angle =
            serde_json::from_str(r#"{"kind":"rational_pi","num":8,"den":6}"#).unwrap();
        assert_eq!(unreduced, rp(1, 3));
        assert!(
            serde_json::from_str::<Angle>(r#"{"kind":"rational_pi","num":1,"den":0}"#).is_err()
        );
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::default().validate().is_ok());
        let bad = Tolerance {
            eps_point: 0.0,
            ..Tolerance::default()
        };
        assert!(bad.validate().is_err());
    }

    fn any_angle() -> impl Strategy<Value = Angle> {
        prop_oneof![
            (-50i64..50, 1i64..30).prop_map(|(n, d)| Angle::rational_pi(n, d).unwrap()),
            (-10.0f64..10.0).prop_map(|r| normalize_angle(r).unwrap()),
        ]
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("0".parse::<Angle>().unwrap(), Angle::ZERO);
        assert_eq!(
            "pi/3".parse::<Angle>().unwrap(),
            Angle::rational_pi(1, 3).unwrap()
        );
        assert_eq!(
            " 2pi/3".parse::<Angle>().unwrap(),
            Angle::rational_pi(2, 3).unwrap()
        );
        assert_eq!("pi".parse::<Angle>().unwrap(), Angle::ZERO);
        assert_eq!("3pi/2".parse::<Angle>().unwrap(), Angle::HALF_PI);
        assert_eq!(
            "-pi/4".parse::<Angle>().unwrap(),
            Angle::rational_pi(3, 4).unwrap()
        );
        assert_eq!(
            "rad:1.25".parse::<Angle>().unwrap(),
            Angle::Real { radians: 1.25 }
        );
        for bad in [
            "", "pi/0", "pi/-2", "x", "2p", "rad:", "rad:nan", "1/2", "pi/3/2",
        ] {
            assert!(bad.parse::<Angle>().is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn display_parses_back(a in any_angle()) {
            prop_assert_eq!(a.to_string().parse::<Angle>().unwrap(), a);
        }

        #[test]
        fn add_then_sub_roundtrips(a in any_angle(), b in any_angle()) {
            let back = angle_sub(angle_add(a, b), b);
            prop_assert!(back.approx_eq(&a, &Tolerance::default()));
            if a.is_rational() && b.is_rational() {
                prop_assert_eq!(back, a);
            }
        }

        #[test]
        fn normalization_is_idempotent_and_periodic(raw in -100.0f64..100.0, k in -20i32..20) {
            let tol = Tolerance::default();
            let a = normalize_angle(raw).unwrap();
            prop_assert!((0.0..PI).contains(&a.radians()));
            prop_assert_eq!(normalize_angle(a.radians()).unwrap(), a);
            let shifted = normalize_angle(raw + k as f64 * PI).unwrap();
            prop_assert!(shifted.approx_eq(&a, &tol));
        }

        #[test]
        fn pythagorean_identity(a in any_angle()) {
            let (c, s) = a.cos_sin();
            prop_assert!((c * c + s * s - 1.0).abs() < 1e-9);
            prop_assert!(s >= 0.0);
        }

        #[test]
        fn rational_roundtrips_losslessly(n in -100i64..100, d in 1i64..100) {
            let a = Angle::rational_pi(n, d).unwrap();
            let back: Angle = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
