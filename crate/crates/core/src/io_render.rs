//! Point export (JSON/CSV) and SVG rendering of the origami structure: the
//! lines at every allowed angle through every generated point.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::construction::{AngleSet, Bbox, FoundPoint, OrigamiSnapshot};
use crate::error::{Error, Result};
use crate::numeric::{Point, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub stroke_width: f64,
    pub point_radius: f64,
    /// Stroke colour per angle index, cycled when shorter than the angle set.
    pub palette: Vec<String>,
    pub width_px: u32,
    pub height_px: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            stroke_width: 1.0,
            point_radius: 2.5,
            palette: [
                "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
            ]
            .map(String::from)
            .to_vec(),
            width_px: 600,
            height_px: 600,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::OutOfRange(format!("render style: {msg}")));
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            return bad("stroke width must be positive");
        }
        if !(self.point_radius.is_finite() && self.point_radius > 0.0) {
            return bad("point radius must be positive");
        }
        if self.palette.is_empty() {
            return bad("palette is empty");
        }
        if self.width_px < 64 || self.height_px < 64 {
            return bad("pixel dimensions must be at least 64");
        }
        Ok(())
    }
}

/// A distinct structure line: angle index plus signed offset from the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureLine {
    pub angle_index: usize,
    pub offset: f64,
}

/// Distinct lines `L_{p,α}` through the snapshot points, sorted by
/// `(angle index, offset)`. Offsets closer than `eps_scalar` are merged.
pub fn structure_lines(snapshot: &OrigamiSnapshot, tol: &Tolerance) -> Vec<StructureLine> {
    let mut out = Vec::new();
    for (angle_index, &a) in snapshot.angle_set.angles().iter().enumerate() {
        let dir = Point::direction(a);
        let mut offsets: Vec<f64> = snapshot
            .points()
            .iter()
            .map(|p| dir.cross(&p.point()))
            .collect();
        offsets.sort_by(f64::total_cmp);
        let mut last: Option<f64> = None;
        for d in offsets {
            if last.is_some_and(|l| d - l < tol.eps_scalar) {
                continue;
            }
            last = Some(d);
            out.push(StructureLine {
                angle_index,
                offset: d,
            });
        }
    }
    out
}

/// SVG drawing of the structure lines clipped to `bbox` and the points
/// inside it. Output is byte-stable for identical inputs.
pub fn render_svg(
    snapshot: &OrigamiSnapshot,
    bbox: &Bbox,
    style: &RenderStyle,
    tol: &Tolerance,
) -> Result<String> {
    if snapshot.is_empty() {
        return Err(Error::EmptyRender);
    }
    style.validate()?;
    let (w, h) = (style.width_px as f64, style.height_px as f64);
    // imaginary axis points up
    let to_px = |p: Point| {
        (
            (p.re - bbox.min.re) / bbox.width() * w,
            (bbox.max.im - p.im) / bbox.height() * h,
        )
    };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">",
        style.width_px, style.height_px
    );
    let angles = snapshot.angle_set.angles();
    for line in structure_lines(snapshot, tol) {
        let dir = Point::direction(angles[line.angle_index]);
        let base = Point::new(-dir.im, dir.re) * line.offset;
        let Some((t0, t1)) = bbox.clip_line(base, dir, 0.0) else {
            continue;
        };
        if t1 - t0 <= tol.eps_point {
            continue;
        }
        let (x1, y1) = to_px(base + dir * t0);
        let (x2, y2) = to_px(base + dir * t1);
        let color = &style.palette[line.angle_index % style.palette.len()];
        let _ = writeln!(
            svg,
            "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{color}\" stroke-width=\"{}\"/>",
            style.stroke_width
        );
    }
    let mut inside: Vec<Point> = snapshot
        .points()
        .iter()
        .map(FoundPoint::point)
        .filter(|p| bbox.contains(p, tol.eps_point))
        .collect();
    inside.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    for p in inside {
        let (cx, cy) = to_px(p);
        let _ = writeln!(
            svg,
            "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{}\" fill=\"#000000\"/>",
            style.point_radius
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(Error::Parse(format!("unknown format '{other}'"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SnapshotDoc {
    angle_set: AngleSet,
    depth: u32,
    truncated: bool,
    points: Vec<FoundPoint>,
}

fn sorted_points(points: &[FoundPoint]) -> Vec<FoundPoint> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| {
        a.depth_found
            .cmp(&b.depth_found)
            .then(a.re.total_cmp(&b.re))
            .then(a.im.total_cmp(&b.im))
    });
    pts
}

/// Points sorted by `(depth_found, re, im)` as JSON or CSV.
pub fn export_points(snapshot: &OrigamiSnapshot, format: ExportFormat) -> Result<String> {
    let points = sorted_points(snapshot.points());
    match format {
        ExportFormat::Json => {
            let doc = SnapshotDoc {
                angle_set: snapshot.angle_set.clone(),
                depth: snapshot.depth,
                truncated: snapshot.truncated,
                points,
            };
            let mut s =
                serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        ExportFormat::Csv => points_to_csv(&points),
    }
}

fn points_to_csv(points: &[FoundPoint]) -> Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    if points.is_empty() {
        wtr.write_record(["re", "im", "depth_found"])
            .map_err(|e| Error::Parse(e.to_string()))?;
    }
    for p in points {
        wtr.serialize(p).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = wtr.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Reads a snapshot written by [`export_points`] in JSON form.
pub fn parse_snapshot_json(text: &str, tol: &Tolerance) -> Result<OrigamiSnapshot> {
    let doc: SnapshotDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    for p in &doc.points {
        Point::checked(p.re, p.im)?;
    }
    Ok(OrigamiSnapshot::from_points(
        doc.angle_set,
        doc.depth,
        None,
        doc.truncated,
        doc.points,
        tol,
    ))
}

/// Reads point rows written by [`export_points`] in CSV form.
pub fn parse_points_csv(text: &str) -> Result<Vec<FoundPoint>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    rdr.deserialize()
        .map(|row| {
            let p: FoundPoint = row.map_err(|e| Error::Parse(e.to_string()))?;
            Point::checked(p.re, p.im)?;
            Ok(p)
        })
        .collect()
}

/// CSV text for already-parsed rows, in export order.
pub fn export_point_rows_csv(points: &[FoundPoint]) -> Result<String> {
    points_to_csv(&sorted_points(points))
}
