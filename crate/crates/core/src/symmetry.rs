//! Symmetry classification of origami structures.
//!
//! Three directions give a lattice and one of the wallpaper groups p2, cmm
//! or p6m, decided by how many of the triangle angles coincide. More
//! directions give a dense set, and only the point group is classified:
//! a rotation by θ (resp. a reflection across θ) is a symmetry exactly when
//! the angle set is closed under `α ↦ α + θ` (resp. `α ↦ 2θ − α`) and the
//! image `e^{iθ}` (resp. `e^{2iθ}`) of the seed point 1 lies in `M(U)`.
//! Membership in a dense `M(U)` is only semi-decidable, so those results are
//! certified up to a search depth.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::construction::{
    is_lattice_point, lattice_basis, AngleSet, Bbox, OrigamiGenerator, DEFAULT_CAP,
};
use crate::error::{Error, Result};
use crate::geometry::reflect_angle;
use crate::numeric::{angle_add, angle_sub, Angle, Point, Tolerance};

/// Default depth for bounded membership searches.
pub const DEFAULT_MAX_DEPTH: u32 = 3;

/// Interior angles `(α, ρ, γ)` of the tiling triangles of `{0, α, β}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleAngles {
    pub alpha: Angle,
    pub rho: Angle,
    pub gamma: Angle,
}

impl TriangleAngles {
    fn pairs(&self) -> [(Angle, Angle); 3] {
        [
            (self.alpha, self.gamma),
            (self.alpha, self.rho),
            (self.gamma, self.rho),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallpaperClass {
    P2,
    Cmm,
    P6m,
}

impl WallpaperClass {
    pub fn name(&self) -> &'static str {
        match self {
            WallpaperClass::P2 => "p2",
            WallpaperClass::Cmm => "cmm",
            WallpaperClass::P6m => "p6m",
        }
    }

    pub fn point_group(&self) -> PointGroup {
        match self {
            WallpaperClass::P2 => PointGroup::Cyclic(2),
            WallpaperClass::Cmm => PointGroup::KleinFour,
            WallpaperClass::P6m => PointGroup::Dihedral(6),
        }
    }
}

impl fmt::Display for WallpaperClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Point group of an origami structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointGroup {
    /// Rotations only, of order `n`.
    Cyclic(u32),
    /// Symmetries of a regular `n`-gon (order `2n`).
    Dihedral(u32),
    /// `Z/2Z × Z/2Z`.
    KleinFour,
}

impl PointGroup {
    /// `KleinFour` viewed as the dihedral group of order 4.
    pub fn as_dihedral(&self) -> PointGroup {
        match self {
            PointGroup::KleinFour => PointGroup::Dihedral(2),
            g => *g,
        }
    }

    pub fn rotation_order(&self) -> u32 {
        match *self {
            PointGroup::Cyclic(n) | PointGroup::Dihedral(n) => n,
            PointGroup::KleinFour => 2,
        }
    }

    pub fn has_reflections(&self) -> bool {
        !matches!(self, PointGroup::Cyclic(_))
    }
}

impl fmt::Display for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointGroup::Cyclic(n) => write!(f, "C_{n}"),
            PointGroup::Dihedral(n) => write!(f, "D_{n}"),
            PointGroup::KleinFour => write!(f, "C2xC2"),
        }
    }
}

impl FromStr for PointGroup {
    type Err = Error;

    /// Accepts `C2xC2`, `V4`, `C6`, `C_6`, `Z6`, `D4`, `D_4`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if matches!(
            lower.as_str(),
            "c2xc2" | "z2xz2" | "v4" | "klein" | "kleinfour"
        ) {
            return Ok(PointGroup::KleinFour);
        }
        let bad = || Error::Parse(format!("unknown group '{s}'"));
        let (head, rest) = lower.split_at(1.min(lower.len()));
        let n: u32 = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        match head {
            "c" | "z" => Ok(PointGroup::Cyclic(n)),
            "d" => Ok(PointGroup::Dihedral(n)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    /// Follows from a classification theorem covering the input.
    Proven,
    /// Membership witnesses were searched up to this depth.
    DepthCertified(u32),
}

impl Serialize for Certification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Certification::Proven => s.serialize_str("proven"),
            Certification::DepthCertified(depth) => {
                #[derive(Serialize)]
                struct Depth {
                    depth: u32,
                }
                Depth { depth: *depth }.serialize(s)
            }
        }
    }
}

/// Outcome of a membership query `p ∈ M(U)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// Found; the depth is where the search located it (`None` when
    /// membership is proven from lattice coordinates alone).
    Member { depth: Option<u32> },
    /// Proven absent (3-angle lattice case).
    NotMember,
    /// Not found in `M_k(U)` for any `k` up to the given depth.
    NotFoundUpTo(u32),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

fn three(angle_set: &AngleSet) -> Result<(Angle, Angle)> {
    match angle_set.angles() {
        [_, a, b] => Ok((*a, *b)),
        other => Err(Error::WrongArity {
            expected: 3,
            got: other.len(),
        }),
    }
}

/// `(α, β − α, π − β)` for `U = {0, α, β}`.
pub fn triangle_angles(angle_set: &AngleSet) -> Result<TriangleAngles> {
    let (alpha, beta) = three(angle_set)?;
    Ok(TriangleAngles {
        alpha,
        rho: angle_sub(beta, alpha),
        gamma: angle_sub(Angle::ZERO, beta),
    })
}

/// Number of coinciding pairs among the triangle angles (0, 1 or 3).
pub fn equality_count(t: &TriangleAngles, tol: &Tolerance) -> usize {
    t.pairs()
        .iter()
        .filter(|(a, b)| a.approx_eq(b, tol))
        .count()
}

/// True when a Real-valued triangle-angle comparison falls within two
/// orders of magnitude of `eps_angle`, so the class may flip under a
/// different tolerance.
pub fn wallpaper_ambiguous(angle_set: &AngleSet, tol: &Tolerance) -> Result<bool> {
    let t = triangle_angles(angle_set)?;
    Ok(t.pairs().iter().any(|(a, b)| {
        let d = a.distance(b);
        !(a.is_rational() && b.is_rational()) && d > tol.eps_angle * 1e-2 && d < tol.eps_angle * 1e2
    }))
}

/// p2, cmm or p6m from the number of equal triangle angles.
pub fn classify_wallpaper(angle_set: &AngleSet, tol: &Tolerance) -> Result<WallpaperClass> {
    let t = triangle_angles(angle_set)?;
    match equality_count(&t, tol) {
        0 => Ok(WallpaperClass::P2),
        1 => Ok(WallpaperClass::Cmm),
        // Two equal pairs force the third; a count of 2 only arises from
        // tolerance non-transitivity and is flagged by `wallpaper_ambiguous`.
        _ => Ok(WallpaperClass::P6m),
    }
}

fn push_axis(axes: &mut Vec<Angle>, a: Angle, tol: &Tolerance) {
    if !axes.iter().any(|b| b.approx_eq(&a, tol)) {
        axes.push(a);
    }
}

/// Reflection axes of a 3-angle structure, sorted in `[0, π)`.
///
/// `α = γ` gives `{0, π/2}`, `α = ρ` gives `{(α+ρ)/2, (α+ρ+π)/2}` and
/// `ρ = γ` gives `{α/2, (α+π)/2}`.
pub fn reflection_axes_3(angle_set: &AngleSet, tol: &Tolerance) -> Result<Vec<Angle>> {
    let t = triangle_angles(angle_set)?;
    let mut axes = Vec::new();
    let mut add_pair = |axis: Angle| {
        push_axis(&mut axes, axis, tol);
        push_axis(&mut axes, angle_add(axis, Angle::HALF_PI), tol);
    };
    if t.alpha.approx_eq(&t.gamma, tol) {
        add_pair(Angle::ZERO);
    }
    if t.alpha.approx_eq(&t.rho, tol) {
        // α + ρ = β < π, so halving the representative is exact.
        add_pair(angle_add(t.alpha, t.rho).half());
    }
    if t.rho.approx_eq(&t.gamma, tol) {
        add_pair(t.alpha.half());
    }
    axes.sort_by(|a, b| a.cmp_value(b));
    Ok(axes)
}

/// `α + θ ∈ U` for every `α ∈ U` (modulo π).
pub fn angle_set_rotation_closed(angle_set: &AngleSet, theta: Angle, tol: &Tolerance) -> bool {
    angle_set
        .angles()
        .iter()
        .all(|&a| angle_set.contains(&angle_add(a, theta), tol))
}

/// `2θ − α ∈ U` for every `α ∈ U` (modulo π), `θ` the axis angle.
pub fn angle_set_reflection_closed(angle_set: &AngleSet, axis: Angle, tol: &Tolerance) -> bool {
    angle_set
        .angles()
        .iter()
        .all(|&a| angle_set.contains(&reflect_angle(a, axis), tol))
}

/// Bounded membership search shared across several queries.
struct WitnessSearch {
    generator: OrigamiGenerator,
    max_depth: u32,
}

impl WitnessSearch {
    fn new(angle_set: &AngleSet, bbox: Bbox, max_depth: u32, tol: &Tolerance) -> Result<Self> {
        Ok(Self {
            generator: OrigamiGenerator::new(angle_set, Some(bbox), Some(DEFAULT_CAP), tol)?,
            max_depth,
        })
    }

    fn locate(&mut self, p: &Point) -> Membership {
        loop {
            if let Some(d) = self.generator.find(p) {
                return Membership::Member { depth: Some(d) };
            }
            if self.generator.depth() >= self.max_depth {
                return Membership::NotFoundUpTo(self.max_depth);
            }
            self.generator.step();
        }
    }
}

/// Whether `p ∈ M(U)`.
///
/// Three angles: decided from the lattice coordinates of `p`; a located
/// depth is attached when a boxed search finds `p` (the depth is an upper
/// bound on the true one since the box hides outside points). More angles:
/// searched in `M_k(U)` for `k <= max_depth` within a box around 0, 1 and `p`.
pub fn point_in_m(
    p: Point,
    angle_set: &AngleSet,
    max_depth: u32,
    tol: &Tolerance,
) -> Result<Membership> {
    angle_set.require_at_least(3)?;
    let bbox = Bbox::around(&[Point::ZERO, Point::ONE, p], 1.0)?;
    if angle_set.len() == 3 {
        let basis = lattice_basis(angle_set, tol)?;
        if !is_lattice_point(p, &basis, tol.eps_scalar) {
            return Ok(Membership::NotMember);
        }
        let margin = 2.0 * basis.tau.norm().max(1.0);
        let bbox = Bbox::around(&[Point::ZERO, Point::ONE, p], margin)?;
        let mut gen = OrigamiGenerator::new(angle_set, Some(bbox), Some(DEFAULT_CAP), tol)?;
        const LATTICE_SEARCH_LIMIT: u32 = 64;
        while gen.depth() < LATTICE_SEARCH_LIMIT {
            if let Some(d) = gen.find(&p) {
                return Ok(Membership::Member { depth: Some(d) });
            }
            if gen.step() == 0 {
                break;
            }
        }
        return Ok(Membership::Member {
            depth: gen.find(&p),
        });
    }
    let mut search = WitnessSearch::new(angle_set, bbox, max_depth, tol)?;
    Ok(search.locate(&p))
}

/// Point group of `{0, π/n, …, (n−1)π/n}`: `D_{2n}` for odd `n`, `D_n` for even `n`.
pub fn uniform_point_group(n: u32) -> Result<PointGroup> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "uniform set needs n >= 3, got {n}"
        )));
    }
    Ok(if n % 2 == 1 {
        PointGroup::Dihedral(2 * n)
    } else {
        PointGroup::Dihedral(n)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassificationKind {
    Wallpaper,
    PointGroup,
}

/// Full classification result.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub input: AngleSet,
    pub kind: ClassificationKind,
    pub wallpaper: Option<WallpaperClass>,
    pub point_group: PointGroup,
    pub rotation_order: u32,
    /// Axes through the origin, sorted in `[0, π)`.
    pub reflection_axes: Vec<Angle>,
    pub certification: Certification,
    /// A Real-angle equality decision sat close to the tolerance.
    pub ambiguous: bool,
}

impl Classification {
    /// `p2`/`cmm`/`p6m` for wallpaper results, `C_n`/`D_n`/`C2xC2` otherwise.
    pub fn class_name(&self) -> String {
        match self.wallpaper {
            Some(w) => w.name().to_string(),
            None => self.point_group.to_string(),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            input: &'a AngleSet,
            kind: ClassificationKind,
            class: String,
            point_group: String,
            rotation_order: u32,
            reflection_axes: Vec<f64>,
            certification: Certification,
            ambiguous: bool,
        }
        Json {
            input: &self.input,
            kind: self.kind,
            class: self.class_name(),
            point_group: self.point_group.to_string(),
            rotation_order: self.rotation_order,
            reflection_axes: self.reflection_axes.iter().map(Angle::radians).collect(),
            certification: self.certification,
            ambiguous: self.ambiguous,
        }
        .serialize(s)
    }
}

/// Wallpaper classification for three angles, point group otherwise.
pub fn classify(angle_set: &AngleSet, max_depth: u32, tol: &Tolerance) -> Result<Classification> {
    angle_set.require_at_least(3)?;
    if angle_set.len() == 3 {
        let class = classify_wallpaper(angle_set, tol)?;
        Ok(Classification {
            kind: ClassificationKind::Wallpaper,
            wallpaper: Some(class),
            ..point_group_of_three(angle_set, tol)?
        })
    } else {
        classify_point_group(angle_set, max_depth, tol)
    }
}

fn point_group_of_three(angle_set: &AngleSet, tol: &Tolerance) -> Result<Classification> {
    let class = classify_wallpaper(angle_set, tol)?;
    let group = class.point_group();
    Ok(Classification {
        input: angle_set.clone(),
        kind: ClassificationKind::PointGroup,
        wallpaper: None,
        point_group: group,
        rotation_order: group.rotation_order(),
        reflection_axes: reflection_axes_3(angle_set, tol)?,
        certification: Certification::Proven,
        ambiguous: wallpaper_ambiguous(angle_set, tol)?,
    })
}

/// `{θ0 + kπ/n : 0 <= k < n}` modulo π, sorted.
fn axes_from(first: Angle, rotation_order: u32, tol: &Tolerance) -> Vec<Angle> {
    let step = Angle::pi_over(rotation_order as i64);
    let mut axes = Vec::new();
    let mut a = first;
    for _ in 0..rotation_order {
        push_axis(&mut axes, a, tol);
        a = angle_add(a, step);
    }
    axes.sort_by(|a, b| a.cmp_value(b));
    axes
}

/// Point group of `U`.
///
/// Uniform sets and 3-angle sets are decided by theorem. Other sets go
/// through the closure criteria with witnesses searched up to `max_depth`.
pub fn classify_point_group(
    angle_set: &AngleSet,
    max_depth: u32,
    tol: &Tolerance,
) -> Result<Classification> {
    angle_set.require_at_least(3)?;
    if let Some(n) = angle_set.uniform_order() {
        let group = uniform_point_group(n as u32)?;
        let order = group.rotation_order();
        return Ok(Classification {
            input: angle_set.clone(),
            kind: ClassificationKind::PointGroup,
            wallpaper: None,
            point_group: group,
            rotation_order: order,
            reflection_axes: axes_from(Angle::ZERO, order, tol),
            certification: Certification::Proven,
            ambiguous: false,
        });
    }
    if angle_set.len() == 3 {
        return point_group_of_three(angle_set, tol);
    }
    classify_point_group_by_search(angle_set, max_depth, tol)
}

/// Smallest `q <= max_q` with `θ = pπ/q` for some integer `p`.
fn pi_denominator(theta: &Angle, max_q: usize, tol: &Tolerance) -> Option<u32> {
    match *theta {
        Angle::RationalPi { den, .. } => Some(den as u32),
        Angle::Real { radians } => (1..=max_q as u32).find(|&q| {
            let x = q as f64 * radians / PI;
            (x - x.round()).abs() * PI < tol.eps_angle * q as f64
        }),
    }
}

/// Closure-criteria classification without the uniform-set and 3-angle
/// shortcuts. Always `DepthCertified`.
pub fn classify_point_group_by_search(
    angle_set: &AngleSet,
    max_depth: u32,
    tol: &Tolerance,
) -> Result<Classification> {
    angle_set.require_at_least(3)?;
    let bbox = Bbox::new(-2.0, -2.0, 2.0, 2.0)?;
    let mut search = WitnessSearch::new(angle_set, bbox, max_depth, tol)?;

    // 0 + θ ∈ U, so rotation candidates are the nonzero angles of U.
    let mut rotation_order = 2;
    for theta in angle_set.angles().iter().filter(|a| !a.is_zero()) {
        if !angle_set_rotation_closed(angle_set, *theta, tol) {
            continue;
        }
        let Some(q) = pi_denominator(theta, angle_set.len(), tol) else {
            continue;
        };
        if search.locate(&Point::direction(*theta)).is_member() {
            // θ = pπ/q together with the half turn generates rotations by π/q.
            rotation_order = 2 * q;
            break;
        }
    }

    // 2θ − 0 ∈ U, so the doubled axis angle is itself in U.
    let mut first_axis = None;
    for doubled in angle_set.angles() {
        let axis = doubled.half();
        if !angle_set_reflection_closed(angle_set, axis, tol) {
            continue;
        }
        if search.locate(&Point::direction(*doubled)).is_member() {
            first_axis = Some(axis);
            break;
        }
    }

    let (group, axes) = match first_axis {
        Some(axis) => {
            let group = if rotation_order == 2 {
                PointGroup::KleinFour
            } else {
                PointGroup::Dihedral(rotation_order)
            };
            (group, axes_from(axis, rotation_order, tol))
        }
        None => (PointGroup::Cyclic(rotation_order), Vec::new()),
    };
    Ok(Classification {
        input: angle_set.clone(),
        kind: ClassificationKind::PointGroup,
        wallpaper: None,
        point_group: group,
        rotation_order,
        reflection_axes: axes,
        certification: Certification::DepthCertified(max_depth),
        ambiguous: false,
    })
}

/// An angle set whose point group is `target`.
///
/// `C2xC2`: `{0, π/4, π/2}`. `C_n` (even `n`): the multiples of `π/n`
/// together with `π/(4n) + kπ/n` for even `k`. `D_{2m}` (odd `m`): the
/// uniform set with `m` directions. `D_n` (other even `n`): the uniform set
/// with `n` directions.
pub fn inverse_construct(target: PointGroup) -> Result<AngleSet> {
    let unreachable = || Error::UnreachableGroup(target.to_string());
    match target {
        PointGroup::KleinFour | PointGroup::Dihedral(2) => {
            Ok([Angle::ZERO, Angle::pi_over(4), Angle::HALF_PI]
                .into_iter()
                .collect_set())
        }
        PointGroup::Cyclic(n) if n >= 2 && n % 2 == 0 => {
            let n = n as i64;
            let mut angles: Vec<Angle> = (0..n)
                .map(|k| Angle::rational_pi(k, n).expect("n > 0"))
                .collect();
            // π/(4n) + kπ/n = (4k + 1)π/(4n)
            angles.extend(
                (0..n)
                    .step_by(2)
                    .map(|k| Angle::rational_pi(4 * k + 1, 4 * n).expect("n > 0")),
            );
            Ok(angles.into_iter().collect_set())
        }
        PointGroup::Dihedral(n) if n >= 6 && n % 4 == 2 => AngleSet::uniform(n as usize / 2),
        PointGroup::Dihedral(n) if n >= 4 && n % 2 == 0 => AngleSet::uniform(n as usize),
        _ => Err(unreachable()),
    }
}

trait CollectSet {
    fn collect_set(self) -> AngleSet;
}

impl<I: Iterator<Item = Angle>> CollectSet for I {
    fn collect_set(self) -> AngleSet {
        AngleSet::new(self, &Tolerance::default()).expect("constructed sets contain 0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(n: i64, d: i64) -> Angle {
        Angle::rational_pi(n, d).unwrap()
    }

    fn set(v: &[Angle]) -> AngleSet {
        AngleSet::new(v.iter().copied(), &Tolerance::default()).unwrap()
    }

    fn p2_set() -> AngleSet {
        let raw = (2.0 * 5f64.sqrt() / 5.0).asin();
        set(&[
            Angle::ZERO,
            crate::numeric::normalize_angle(raw).unwrap(),
            rp(1, 2),
        ])
    }

    fn p6_set() -> AngleSet {
        set(&[
            Angle::ZERO,
            rp(1, 4),
            rp(1, 3),
            rp(7, 12),
            rp(2, 3),
            rp(11, 12),
        ])
    }

    #[test]
    fn triangle_angle_examples() {
        let t = triangle_angles(&AngleSet::uniform(3).unwrap()).unwrap();
        assert_eq!((t.alpha, t.rho, t.gamma), (rp(1, 3), rp(1, 3), rp(1, 3)));
        let t = triangle_angles(&set(&[Angle::ZERO, rp(1, 4), rp(1, 2)])).unwrap();
        assert_eq!((t.alpha, t.rho, t.gamma), (rp(1, 4), rp(1, 4), rp(1, 2)));
        let t = triangle_angles(&set(&[Angle::ZERO, rp(2, 7), rp(5, 9)])).unwrap();
        let sum = t.alpha.radians() + t.rho.radians() + t.gamma.radians();
        assert!((sum - PI).abs() < 1e-12);
        assert!(matches!(
            triangle_angles(&AngleSet::uniform(4).unwrap()),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn wallpaper_examples() {
        let tol = Tolerance::default();
        assert_eq!(
            classify_wallpaper(&p2_set(), &tol).unwrap(),
            WallpaperClass::P2
        );
        assert_eq!(
            classify_wallpaper(&set(&[Angle::ZERO, rp(1, 4), rp(1, 2)]), &tol).unwrap(),
            WallpaperClass::Cmm
        );
        assert_eq!(
            classify_wallpaper(&AngleSet::uniform(3).unwrap(), &tol).unwrap(),
            WallpaperClass::P6m
        );
        assert!(!wallpaper_ambiguous(&p2_set(), &tol).unwrap());
    }

    #[test]
    fn near_tolerance_is_flagged() {
        let tol = Tolerance::default();
        let u = set(&[
            Angle::ZERO,
            Angle::Real {
                radians: PI / 4.0 + 5e-10,
            },
            rp(1, 2),
        ]);
        assert!(wallpaper_ambiguous(&u, &tol).unwrap());
    }

    #[test]
    fn axes_examples() {
        let tol = Tolerance::default();
        let cmm = reflection_axes_3(&set(&[Angle::ZERO, rp(1, 4), rp(1, 2)]), &tol).unwrap();
        assert_eq!(cmm, vec![rp(1, 4), rp(3, 4)]);
        assert!(reflection_axes_3(&p2_set(), &tol).unwrap().is_empty());
        let hex = reflection_axes_3(&AngleSet::uniform(3).unwrap(), &tol).unwrap();
        assert_eq!(hex, (0..6).map(|k| rp(k, 6)).collect::<Vec<_>>());
        // α = γ: α = π/5, β = 4π/5
        let iso = reflection_axes_3(&set(&[Angle::ZERO, rp(1, 5), rp(4, 5)]), &tol).unwrap();
        assert_eq!(iso, vec![Angle::ZERO, rp(1, 2)]);
        // ρ = γ: α = π/5, β = 3π/5
        let iso = reflection_axes_3(&set(&[Angle::ZERO, rp(1, 5), rp(3, 5)]), &tol).unwrap();
        assert_eq!(iso, vec![rp(1, 10), rp(3, 5)]);
    }

    #[test]
    fn closure_checks() {
        let tol = Tolerance::default();
        assert!(angle_set_rotation_closed(
            &AngleSet::uniform(5).unwrap(),
            rp(1, 5),
            &tol
        ));
        let cmm = set(&[Angle::ZERO, rp(1, 4), rp(1, 2)]);
        assert!(!angle_set_rotation_closed(&cmm, rp(1, 4), &tol));
        assert!(angle_set_rotation_closed(&p2_set(), Angle::ZERO, &tol));
        assert!(angle_set_reflection_closed(&cmm, rp(1, 4), &tol));
        assert!(!angle_set_reflection_closed(&cmm, Angle::ZERO, &tol));
    }

    #[test]
    fn membership_examples() {
        let tol = Tolerance::default();
        let hex = AngleSet::uniform(3).unwrap();
        let tau = Point::new(0.5, 3f64.sqrt() / 2.0);
        assert_eq!(
            point_in_m(tau, &hex, 3, &tol).unwrap(),
            Membership::Member { depth: Some(1) }
        );
        assert_eq!(
            point_in_m(Point::new(1.0 / 3.0, 0.0), &hex, 3, &tol).unwrap(),
            Membership::NotMember
        );
        let far = Point::new(7.0, 0.0) + tau * -5.0;
        assert!(point_in_m(far, &hex, 3, &tol).unwrap().is_member());
        let five = AngleSet::uniform(5).unwrap();
        match point_in_m(Point::unit(PI / 5.0), &five, 2, &tol).unwrap() {
            Membership::Member { depth: Some(d) } => assert!(d <= 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(point_in_m(tau, &set(&[Angle::ZERO, rp(1, 2)]), 2, &tol).is_err());
    }

    #[test]
    fn uniform_groups() {
        assert_eq!(uniform_point_group(5).unwrap(), PointGroup::Dihedral(10));
        assert_eq!(uniform_point_group(4).unwrap(), PointGroup::Dihedral(4));
        assert_eq!(uniform_point_group(3).unwrap(), PointGroup::Dihedral(6));
        assert!(uniform_point_group(2).is_err());
    }

    #[test]
    fn point_group_examples() {
        let tol = Tolerance::default();
        let c = classify_point_group(&AngleSet::uniform(4).unwrap(), 3, &tol).unwrap();
        assert_eq!(c.point_group, PointGroup::Dihedral(4));
        assert_eq!(c.certification, Certification::Proven);
        assert_eq!(
            c.reflection_axes,
            vec![Angle::ZERO, rp(1, 4), rp(1, 2), rp(3, 4)]
        );

        let c = classify_point_group(&set(&[Angle::ZERO, rp(1, 4), rp(1, 2)]), 3, &tol).unwrap();
        assert_eq!(c.point_group, PointGroup::KleinFour);
        assert_eq!(c.certification, Certification::Proven);

        let c = classify_point_group(&p6_set(), 3, &tol).unwrap();
        assert_eq!(c.point_group, PointGroup::Cyclic(6));
        assert!(c.reflection_axes.is_empty());
        assert_eq!(c.certification, Certification::DepthCertified(3));
    }

    #[test]
    fn search_agrees_with_uniform_theorems() {
        let tol = Tolerance::default();
        for n in 3..=8u32 {
            let u = AngleSet::uniform(n as usize).unwrap();
            let c = classify_point_group_by_search(&u, 3, &tol).unwrap();
            assert_eq!(c.point_group, uniform_point_group(n).unwrap(), "n = {n}");
            assert_eq!(c.rotation_order % 2, 0);
            for axis in &c.reflection_axes {
                assert!(angle_set_reflection_closed(&u, *axis, &tol));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            inverse_construct(PointGroup::KleinFour).unwrap(),
            set(&[Angle::ZERO, rp(1, 4), rp(1, 2)])
        );
        assert_eq!(
            inverse_construct(PointGroup::Dihedral(10)).unwrap(),
            AngleSet::uniform(5).unwrap()
        );
        assert_eq!(
            inverse_construct(PointGroup::Cyclic(3)),
            Err(Error::UnreachableGroup("C_3".into()))
        );
        assert!(inverse_construct(PointGroup::Dihedral(5)).is_err());
        let c4 = inverse_construct(PointGroup::Cyclic(4)).unwrap();
        assert_eq!(
            c4.angles(),
            &[
                Angle::ZERO,
                rp(1, 16),
                rp(1, 4),
                rp(1, 2),
                rp(9, 16),
                rp(3, 4)
            ]
        );
    }

    #[test]
    fn inverse_round_trips() {
        let tol = Tolerance::default();
        let mut targets = vec![PointGroup::KleinFour];
        for n in (2..=12).step_by(2) {
            targets.push(PointGroup::Cyclic(n));
        }
        for n in (4..=12).step_by(2) {
            targets.push(PointGroup::Dihedral(n));
        }
        for g in targets {
            let u = inverse_construct(g).unwrap();
            let c = classify_point_group(&u, 2, &tol).unwrap();
            assert_eq!(c.point_group, g, "{u:?}");
        }
    }

    #[test]
    fn group_names() {
        assert_eq!(
            "C2xC2".parse::<PointGroup>().unwrap(),
            PointGroup::KleinFour
        );
        assert_eq!("C6".parse::<PointGroup>().unwrap(), PointGroup::Cyclic(6));
        assert_eq!(
            "D_10".parse::<PointGroup>().unwrap(),
            PointGroup::Dihedral(10)
        );
        assert!("X4".parse::<PointGroup>().is_err());
        assert!("D".parse::<PointGroup>().is_err());
        assert_eq!(PointGroup::KleinFour.as_dihedral(), PointGroup::Dihedral(2));
        assert_eq!(PointGroup::Dihedral(4).to_string(), "D_4");
    }

    #[test]
    fn classification_json() {
        let tol = Tolerance::default();
        let c = classify(&AngleSet::uniform(3).unwrap(), 3, &tol).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v["class"], "p6m");
        assert_eq!(v["kind"], "wallpaper");
        assert_eq!(v["certification"], "proven");
        assert_eq!(v["rotation_order"], 6);
        assert_eq!(v["reflection_axes"].as_array().unwrap().len(), 6);
        let c = classify(&p6_set(), 2, &tol).unwrap();
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v["class"], "C_6");
        assert_eq!(v["certification"]["depth"], 2);
    }
}
