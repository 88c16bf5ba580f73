//! Iterated origami closure `M_k(U)`, the initial intersections and their
//! real-axis projections, and the lattice description of the 3-angle case.
//!
//! `M_k(U)` is the set of intersections `[[p,q]]_{α,β}` with `p, q` in
//! `M_{k−1}(U)` and `α ≠ β` in `U`. Equivalently it is the set of pairwise
//! intersections of non-parallel lines at allowed angles through the points
//! of `M_{k−1}(U)`. The generator works on that line arrangement: lines are
//! deduplicated per direction by their signed offset from the origin, and a
//! new level only intersects pairs in which at least one line is new.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{intersect, project_to_real};
use crate::numeric::{Angle, Point, Tolerance};

/// Default point cap for dense angle sets.
pub const DEFAULT_CAP: usize = 200_000;

/// Sorted, deduplicated set of directions containing 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct AngleSet {
    angles: Vec<Angle>,
}

impl AngleSet {
    pub fn new(angles: impl IntoIterator<Item = Angle>, tol: &Tolerance) -> Result<Self> {
        let mut sorted: Vec<Angle> = angles.into_iter().collect();
        sorted.sort_by(|a, b| a.cmp_value(b));
        let mut out: Vec<Angle> = Vec::with_capacity(sorted.len());
        for a in sorted {
            // Rational angles win over equal Real ones so exactness is kept.
            match out.iter_mut().find(|b| b.approx_eq(&a, tol)) {
                Some(b) => {
                    if !b.is_rational() && a.is_rational() {
                        *b = a;
                    }
                }
                None => out.push(a),
            }
        }
        // A Real angle just below π sorts last but equals 0.
        if let Some(last) = out.last() {
            if out.len() > 1 && last.approx_eq(&out[0], tol) {
                out.pop();
            }
        }
        if !out
            .iter()
            .any(|a| a.is_zero() || a.approx_eq(&Angle::ZERO, tol))
        {
            return Err(Error::MissingZeroAngle);
        }
        Ok(Self { angles: out })
    }

    /// `{0, π/n, …, (n−1)π/n}`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("uniform set needs n >= 1".into()));
        }
        Ok(Self {
            angles: (0..n as i64)
                .map(|k| Angle::rational_pi(k, n as i64).expect("nonzero denominator"))
                .collect(),
        })
    }

    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn contains(&self, a: &Angle, tol: &Tolerance) -> bool {
        self.angles.iter().any(|b| b.approx_eq(a, tol))
    }

    pub fn all_rational(&self) -> bool {
        self.angles.iter().all(Angle::is_rational)
    }

    /// `Some(n)` when the set is exactly `{kπ/n : 0 <= k < n}` in rational form.
    pub fn uniform_order(&self) -> Option<usize> {
        let n = self.angles.len();
        if n == 0 || !self.all_rational() {
            return None;
        }
        let expected = AngleSet::uniform(n).ok()?;
        (expected.angles == self.angles).then_some(n)
    }

    pub(crate) fn require_at_least(&self, min: usize) -> Result<()> {
        if self.len() < min {
            Err(Error::TooFewAngles(self.len()))
        } else {
            Ok(())
        }
    }
}

impl<'de> Deserialize<'de> for AngleSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let angles = Vec::<Angle>::deserialize(d)?;
        AngleSet::new(angles, &Tolerance::default()).map_err(serde::de::Error::custom)
    }
}

/// Axis-aligned rectangle `[min.re, max.re] × [min.im, max.im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bbox {
    pub min: Point,
    pub max: Point,
}

impl Bbox {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        let ok = [x0, y0, x1, y1].iter().all(|v| v.is_finite()) && x1 > x0 && y1 > y0;
        if !ok {
            return Err(Error::InvalidBbox(format!(
                "need finite x0 < x1 and y0 < y1, got [{x0}, {x1}] x [{y0}, {y1}]"
            )));
        }
        Ok(Self {
            min: Point::new(x0, y0),
            max: Point::new(x1, y1),
        })
    }

    /// Smallest box containing `points`, grown by `margin` on every side.
    pub fn around(points: &[Point], margin: f64) -> Result<Self> {
        let mut it = points.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidBbox("no points".into()))?;
        let (mut lo, mut hi) = (*first, *first);
        for p in it {
            lo = Point::new(lo.re.min(p.re), lo.im.min(p.im));
            hi = Point::new(hi.re.max(p.re), hi.im.max(p.im));
        }
        Bbox::new(
            lo.re - margin,
            lo.im - margin,
            hi.re + margin,
            hi.im + margin,
        )
    }

    pub fn width(&self) -> f64 {
        self.max.re - self.min.re
    }

    pub fn height(&self) -> f64 {
        self.max.im - self.min.im
    }

    /// Inclusive containment with slack `eps`.
    pub fn contains(&self, p: &Point, eps: f64) -> bool {
        p.re >= self.min.re - eps
            && p.re <= self.max.re + eps
            && p.im >= self.min.im - eps
            && p.im <= self.max.im + eps
    }

    /// Parameter interval of `origin + t·dir` inside the box (`dir` a unit vector).
    pub fn clip_line(&self, origin: Point, dir: Point, eps: f64) -> Option<(f64, f64)> {
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for (o, d, min, max) in [
            (origin.re, dir.re, self.min.re - eps, self.max.re + eps),
            (origin.im, dir.im, self.min.im - eps, self.max.im + eps),
        ] {
            if d.abs() < 1e-15 {
                if o < min || o > max {
                    return None;
                }
            } else {
                let (a, b) = ((min - o) / d, (max - o) / d);
                lo = lo.max(a.min(b));
                hi = hi.min(a.max(b));
            }
        }
        (lo <= hi).then_some((lo, hi))
    }
}

/// Tolerance-aware point set: grid hash with cell size `eps_point` and
/// 3×3 neighbour probing.
#[derive(Debug, Clone, Default)]
pub struct PointIndex {
    cells: HashMap<(i64, i64), Vec<usize>>,
    points: Vec<Point>,
    eps: f64,
}

impl PointIndex {
    pub fn new(eps: f64) -> Self {
        Self {
            cells: HashMap::new(),
            points: Vec::new(),
            eps,
        }
    }

    fn cell(&self, p: &Point) -> (i64, i64) {
        (
            (p.re / self.eps).round() as i64,
            (p.im / self.eps).round() as i64,
        )
    }

    /// Index of a stored point within `eps` of `p`.
    pub fn find(&self, p: &Point) -> Option<usize> {
        let (cx, cy) = self.cell(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(cx + dx, cy + dy)) {
                    if let Some(&i) = ids.iter().find(|&&i| self.points[i].dist(p) < self.eps) {
                        return Some(i);
                    }
                }
            }
        }
        None
    }

    /// Inserts `p` unless a point within `eps` exists; returns the new index.
    pub fn insert(&mut self, p: Point) -> Option<usize> {
        if self.find(&p).is_some() {
            return None;
        }
        let i = self.points.len();
        let c = self.cell(&p);
        self.points.push(p);
        self.cells.entry(c).or_default().push(i);
        Some(i)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

/// A point of a snapshot with the level at which it first appeared.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoundPoint {
    pub re: f64,
    pub im: f64,
    pub depth_found: u32,
}

impl FoundPoint {
    pub fn point(&self) -> Point {
        Point::new(self.re, self.im)
    }
}

/// Points of `M_k(U)` (optionally restricted to a box and capped).
#[derive(Debug, Clone)]
pub struct OrigamiSnapshot {
    pub angle_set: AngleSet,
    pub depth: u32,
    pub bbox: Option<Bbox>,
    pub truncated: bool,
    points: Vec<FoundPoint>,
    index: PointIndex,
}

impl OrigamiSnapshot {
    /// Assembles a snapshot from stored points, dropping near-duplicates.
    pub fn from_points(
        angle_set: AngleSet,
        depth: u32,
        bbox: Option<Bbox>,
        truncated: bool,
        points: impl IntoIterator<Item = FoundPoint>,
        tol: &Tolerance,
    ) -> Self {
        let mut index = PointIndex::new(tol.eps_point);
        let mut kept = Vec::new();
        for fp in points {
            if index.insert(fp.point()).is_some() {
                kept.push(fp);
            }
        }
        Self {
            angle_set,
            depth,
            bbox,
            truncated,
            points: kept,
            index,
        }
    }

    pub fn points(&self) -> &[FoundPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Level at which a point within `eps_point` of `p` was found.
    pub fn find(&self, p: &Point) -> Option<u32> {
        self.index.find(p).map(|i| self.points[i].depth_found)
    }
}

#[derive(Debug, Clone, Copy)]
struct LineEntry {
    offset: f64,
    level: u32,
}

/// Lines of one direction, deduplicated by offset.
#[derive(Debug, Clone)]
struct LineFamily {
    dir: Point,
    normal: Point,
    lines: Vec<LineEntry>,
    buckets: HashMap<i64, Vec<usize>>,
    eps: f64,
}

impl LineFamily {
    fn new(angle: Angle, eps: f64) -> Self {
        let dir = Point::direction(angle);
        Self {
            dir,
            normal: Point::new(-dir.im, dir.re),
            lines: Vec::new(),
            buckets: HashMap::new(),
            eps,
        }
    }

    fn add_through(&mut self, p: &Point, level: u32) {
        let offset = self.dir.cross(p);
        let key = (offset / self.eps).round() as i64;
        for k in key - 1..=key + 1 {
            if let Some(ids) = self.buckets.get(&k) {
                if ids
                    .iter()
                    .any(|&i| (self.lines[i].offset - offset).abs() < self.eps)
                {
                    return;
                }
            }
        }
        self.buckets.entry(key).or_default().push(self.lines.len());
        self.lines.push(LineEntry { offset, level });
    }

    /// Offsets sorted ascending, split into (all, added at `level`).
    fn sorted_offsets(&self, level: u32) -> (Vec<f64>, Vec<f64>) {
        let mut all: Vec<f64> = self.lines.iter().map(|l| l.offset).collect();
        let mut fresh: Vec<f64> = self
            .lines
            .iter()
            .filter(|l| l.level == level)
            .map(|l| l.offset)
            .collect();
        all.sort_by(f64::total_cmp);
        fresh.sort_by(f64::total_cmp);
        (all, fresh)
    }
}

/// Intersections of one line `(a, d1)` with the lines of offsets `others`
/// in family `b`, restricted to the box if any. The flag reports pruning.
fn intersect_with_family(
    a: &LineFamily,
    d1: f64,
    b: &LineFamily,
    others: &[f64],
    bbox: Option<&Bbox>,
    eps: f64,
) -> (Vec<Point>, bool) {
    let det = a.dir.cross(&b.dir);
    let cos_ab = a.dir.dot(&b.dir);
    let base = a.normal * d1;
    let at = |d2: f64| {
        let t = (d1 * cos_ab - d2) / det;
        base + a.dir * t
    };
    let Some(bbox) = bbox else {
        return (others.iter().map(|&d2| at(d2)).collect(), false);
    };
    let Some((t_lo, t_hi)) = bbox.clip_line(base, a.dir, eps) else {
        return (Vec::new(), !others.is_empty());
    };
    // d2 is affine in t along line a.
    let (e1, e2) = (d1 * cos_ab - t_lo * det, d1 * cos_ab - t_hi * det);
    let slack = eps * (1.0 + det.abs());
    let (lo, hi) = (e1.min(e2) - slack, e1.max(e2) + slack);
    let start = others.partition_point(|&d| d < lo);
    let end = others.partition_point(|&d| d <= hi);
    let mut pruned = start > 0 || end < others.len();
    let mut out = Vec::with_capacity(end - start);
    for &d2 in &others[start..end] {
        let z = at(d2);
        if bbox.contains(&z, eps) {
            out.push(z);
        } else {
            pruned = true;
        }
    }
    (out, pruned)
}

/// Level-by-level evaluation of `M_k(U)`.
#[derive(Debug, Clone)]
pub struct OrigamiGenerator {
    angle_set: AngleSet,
    bbox: Option<Bbox>,
    cap: Option<usize>,
    tol: Tolerance,
    index: PointIndex,
    found: Vec<FoundPoint>,
    families: Vec<LineFamily>,
    depth: u32,
    truncated: bool,
}

impl OrigamiGenerator {
    pub fn new(
        angle_set: &AngleSet,
        bbox: Option<Bbox>,
        cap: Option<usize>,
        tol: &Tolerance,
    ) -> Result<Self> {
        angle_set.require_at_least(3)?;
        if angle_set.len() > 3 && bbox.is_none() && cap.is_none() {
            return Err(Error::Unbounded(angle_set.len()));
        }
        if cap == Some(0) {
            return Err(Error::OutOfRange("point cap must be positive".into()));
        }
        let mut gen = Self {
            angle_set: angle_set.clone(),
            bbox,
            cap,
            tol: *tol,
            index: PointIndex::new(tol.eps_point),
            found: Vec::new(),
            families: angle_set
                .angles()
                .iter()
                .map(|&a| LineFamily::new(a, tol.eps_point))
                .collect(),
            depth: 0,
            truncated: false,
        };
        for seed in [Point::ZERO, Point::ONE] {
            if bbox.is_some_and(|b| !b.contains(&seed, tol.eps_point)) {
                gen.truncated = true;
            }
            // Seeds anchor every line family even when the box excludes them.
            gen.index.insert(seed);
            gen.found.push(FoundPoint {
                re: seed.re,
                im: seed.im,
                depth_found: 0,
            });
            for fam in &mut gen.families {
                fam.add_through(&seed, 0);
            }
        }
        Ok(gen)
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.found.len()
    }

    pub fn is_empty(&self) -> bool {
        self.found.is_empty()
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn cap_reached(&self) -> bool {
        self.cap.is_some_and(|c| self.found.len() >= c)
    }

    /// Level at which a point within `eps_point` of `p` was found.
    pub fn find(&self, p: &Point) -> Option<u32> {
        self.index.find(p).map(|i| self.found[i].depth_found)
    }

    /// Computes the next level. Returns the number of new points.
    pub fn step(&mut self) -> usize {
        let prev = self.depth;
        let level = prev + 1;
        let eps = self.tol.eps_point;
        let bbox = self.bbox;
        let offsets: Vec<(Vec<f64>, Vec<f64>)> = self
            .families
            .iter()
            .map(|f| f.sorted_offsets(prev))
            .collect();

        let mut jobs = Vec::new();
        for a in 0..self.families.len() {
            for b in a + 1..self.families.len() {
                // new(a) × all(b), then old(a) × new(b)
                for &d1 in &offsets[a].1 {
                    jobs.push((a, b, d1, false));
                }
                if !offsets[b].1.is_empty() {
                    let fresh_a = &offsets[a].1;
                    for &d1 in &offsets[a].0 {
                        if fresh_a.binary_search_by(|x| x.total_cmp(&d1)).is_err() {
                            jobs.push((a, b, d1, true));
                        }
                    }
                }
            }
        }

        let families = &self.families;
        let results: Vec<(Vec<Point>, bool)> = jobs
            .par_iter()
            .map(|&(a, b, d1, only_new)| {
                let others = if only_new {
                    &offsets[b].1
                } else {
                    &offsets[b].0
                };
                intersect_with_family(&families[a], d1, &families[b], others, bbox.as_ref(), eps)
            })
            .collect();

        let mut added = Vec::new();
        'outer: for (points, pruned) in results {
            self.truncated |= pruned;
            for p in points {
                if self.index.find(&p).is_some() {
                    continue;
                }
                if self.cap_reached() {
                    self.truncated = true;
                    break 'outer;
                }
                self.index.insert(p);
                self.found.push(FoundPoint {
                    re: p.re,
                    im: p.im,
                    depth_found: level,
                });
                added.push(p);
            }
        }
        for p in &added {
            for fam in &mut self.families {
                fam.add_through(p, level);
            }
        }
        self.depth = level;
        added.len()
    }

    pub fn snapshot(&self) -> OrigamiSnapshot {
        let eps = self.tol.eps_point;
        let points = self
            .found
            .iter()
            .filter(|fp| self.bbox.is_none_or(|b| b.contains(&fp.point(), eps)))
            .copied();
        OrigamiSnapshot::from_points(
            self.angle_set.clone(),
            self.depth,
            self.bbox,
            self.truncated,
            points,
            &self.tol,
        )
    }
}

/// `M_depth(U)`, restricted to `bbox` and capped at `cap` points when given.
pub fn generate(
    angle_set: &AngleSet,
    depth: u32,
    bbox: Option<Bbox>,
    cap: Option<usize>,
    tol: &Tolerance,
) -> Result<OrigamiSnapshot> {
    if depth == 0 {
        return Err(Error::OutOfRange("depth must be at least 1".into()));
    }
    let mut gen = OrigamiGenerator::new(angle_set, bbox, cap, tol)?;
    for _ in 0..depth {
        gen.step();
    }
    Ok(gen.snapshot())
}

/// `S = {[[0,1]]_{α,β} : α < β in U}`, deduplicated, in pair order.
pub fn initial_intersections(angle_set: &AngleSet, tol: &Tolerance) -> Result<Vec<Point>> {
    angle_set.require_at_least(2)?;
    let angles = angle_set.angles();
    let mut index = PointIndex::new(tol.eps_point);
    let mut out = Vec::new();
    for (k, &alpha) in angles.iter().enumerate() {
        for &beta in &angles[k + 1..] {
            let p = intersect(Point::ZERO, Point::ONE, alpha, beta, tol)?;
            if index.insert(p).is_some() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// `P`: projections of the points of `S` onto the real axis along every
/// nonzero angle of `U`, deduplicated and sorted.
pub fn projections(s: &[Point], angle_set: &AngleSet, tol: &Tolerance) -> Result<Vec<f64>> {
    if s.is_empty() {
        return Err(Error::OutOfRange(
            "empty set of initial intersections".into(),
        ));
    }
    let mut out: Vec<f64> = Vec::new();
    for &beta in angle_set.angles().iter().filter(|a| !a.is_zero()) {
        for &q in s {
            let x = project_to_real(q, beta, tol)?;
            if !out.iter().any(|y| (y - x).abs() < tol.eps_scalar) {
                out.push(x);
            }
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Basis `(1, τ)` of the lattice `M(U) = Z + Zτ` for a 3-angle set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub tau: Point,
}

/// `τ = [[0,1]]_{α,β}` for `U = {0, α, β}`.
pub fn lattice_basis(angle_set: &AngleSet, tol: &Tolerance) -> Result<LatticeBasis> {
    let [_, alpha, beta] = angle_set.angles() else {
        return Err(Error::WrongArity {
            expected: 3,
            got: angle_set.len(),
        });
    };
    let tau = intersect(Point::ZERO, Point::ONE, *alpha, *beta, tol)?;
    Ok(LatticeBasis { tau })
}

/// Real `(m, n)` with `p = m + n·τ`.
pub fn lattice_coords(p: Point, basis: &LatticeBasis) -> (f64, f64) {
    let n = p.im / basis.tau.im;
    (p.re - n * basis.tau.re, n)
}

/// Whether `(m, n)` are both integers within `eps`.
pub fn is_lattice_point(p: Point, basis: &LatticeBasis, eps: f64) -> bool {
    let (m, n) = lattice_coords(p, basis);
    (m - m.round()).abs() < eps && (n - n.round()).abs() < eps
}

/// More than three directions make `M(U)` dense in the plane.
pub fn is_dense(angle_set: &AngleSet) -> Result<bool> {
    angle_set.require_at_least(3)?;
    Ok(angle_set.len() > 3)
}

/// Module generators `S` and ring generators `P`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingDescription {
    pub initial_intersections: Vec<Point>,
    pub projections: Vec<f64>,
}

pub fn ring_description(angle_set: &AngleSet, tol: &Tolerance) -> Result<RingDescription> {
    angle_set.require_at_least(3)?;
    let s = initial_intersections(angle_set, tol)?;
    let p = projections(&s, angle_set, tol)?;
    Ok(RingDescription {
        initial_intersections: s,
        projections: p,
    })
}
