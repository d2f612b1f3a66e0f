use std::f64::consts::{PI, TAU};
use std::fmt::Write;
use std::str::FromStr;

use super::{Drawing, DrawingDocument, PlanarDrawing, SphericalDrawing};
use crate::sphere::{UnitVec3, Vec3};

const SIZE: f64 = 512.0;
const RADIUS: f64 = 240.0;
const MIN_SAMPLES: usize = 64;

const STYLE: &str = ".sphere{fill:none;stroke:#bbb}\
.edge{fill:none;stroke:#222;stroke-width:1.5}\
.edge.hidden{stroke:#999;stroke-dasharray:4 3}\
.vertex{fill:#000}\
.vertex.hidden{fill:#fff;stroke:#999}\
.label{font:12px sans-serif;fill:#444}";

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Projection {
    /// Orthographic view from outside the sphere looking along `-view`.
    Orthographic { view: UnitVec3 },
    /// Planar drawings as drawn; spherical drawings in longitude/latitude.
    Planar,
}

impl FromStr for Projection {
    type Err = String;

    /// `planar`, `orthographic`, `orthographic:z`, `orthographic:-x` or
    /// `orthographic:x,y,z`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "planar" {
            return Ok(Projection::Planar);
        }
        let axis = match s.strip_prefix("orthographic") {
            Some("") => "z",
            Some(rest) => rest
                .strip_prefix(':')
                .ok_or_else(|| format!("bad projection `{s}`"))?,
            None => return Err(format!("unknown projection `{s}`")),
        };
        let (neg, name) = match axis.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, axis),
        };
        let v = match name {
            "x" => UnitVec3::X,
            "y" => UnitVec3::Y,
            "z" => UnitVec3::Z,
            _ => {
                let parts: Vec<f64> = axis
                    .split(',')
                    .map(|p| p.trim().parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| format!("bad view axis `{axis}`: {e}"))?;
                let [x, y, z] = parts[..] else {
                    return Err(format!("view axis `{axis}` needs three components"));
                };
                return UnitVec3::from_xyz(x, y, z)
                    .filter(|u| u.vec().norm().is_finite())
                    .map(|view| Projection::Orthographic { view })
                    .ok_or_else(|| format!("view axis `{axis}` is zero"));
            }
        };
        Ok(Projection::Orthographic {
            view: if neg { -v } else { v },
        })
    }
}

fn num(x: f64) -> String {
    format!("{x:.3}")
}

fn header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
}

fn vertex(out: &mut String, v: usize, x: f64, y: f64, hidden: bool) {
    let class = if hidden { "vertex hidden" } else { "vertex" };
    let _ = writeln!(
        out,
        r#"<circle class="{class}" cx="{}" cy="{}" r="3.500"/>"#,
        num(x),
        num(y)
    );
    let _ = writeln!(
        out,
        r#"<text class="label" x="{}" y="{}">{v}</text>"#,
        num(x + 5.0),
        num(y - 5.0)
    );
}

fn path_data(runs: &[Vec<(f64, f64)>]) -> String {
    let mut d = String::new();
    for run in runs.iter().filter(|r| r.len() >= 2) {
        for (i, &(x, y)) in run.iter().enumerate() {
            if !d.is_empty() {
                d.push(' ');
            }
            d.push(if i == 0 { 'M' } else { 'L' });
            d.push_str(&num(x));
            d.push(' ');
            d.push_str(&num(y));
        }
    }
    d
}

fn path(out: &mut String, class: &str, runs: &[Vec<(f64, f64)>]) {
    let d = path_data(runs);
    if !d.is_empty() {
        let _ = writeln!(out, r#"<path class="{class}" d="{d}"/>"#);
    }
}

fn samples(len: f64) -> usize {
    MIN_SAMPLES.max((len / (PI / 128.0)).ceil() as usize)
}

/// Deterministic SVG rendering of a drawing document.
pub fn render_svg(doc: &DrawingDocument, projection: Projection) -> String {
    match (&doc.drawing, projection) {
        (Drawing::Spherical(d), Projection::Orthographic { view }) => orthographic(d, view),
        (Drawing::Spherical(d), Projection::Planar) => equirectangular(d),
        (Drawing::Planar(d), _) => planar(d),
    }
}

fn orthographic(d: &SphericalDrawing, view: UnitVec3) -> String {
    let up = if view.z().abs() < 0.9 { UnitVec3::Z } else { UnitVec3::Y };
    let right = up.cross(view).normalized(0.0).expect("up not parallel to view");
    let screen_up = view.vec().cross(right.vec());
    let c = SIZE / 2.0;
    let project = |p: Vec3| (c + RADIUS * p.dot(right.vec()), c - RADIUS * p.dot(screen_up));
    let visible = |p: Vec3| p.dot(view.vec()) >= -1e-12;

    let mut out = String::new();
    header(&mut out, SIZE, SIZE);
    let _ = writeln!(
        out,
        r#"<circle class="sphere" cx="{c}" cy="{c}" r="{r}"/>"#,
        c = num(c),
        r = num(RADIUS)
    );
    for arc in d.arcs() {
        let k = samples(arc.length());
        let mut front: Vec<Vec<(f64, f64)>> = Vec::new();
        let mut back: Vec<Vec<(f64, f64)>> = Vec::new();
        let mut prev: Option<bool> = None;
        for i in 0..=k {
            let p = arc.point_at(i as f64 / k as f64).vec();
            let vis = visible(p);
            let xy = project(p);
            if prev != Some(vis) {
                // start a new run, overlapping the last point of the previous one
                let runs = if vis { &mut front } else { &mut back };
                let mut run = Vec::new();
                if i > 0 {
                    let q = arc.point_at((i - 1) as f64 / k as f64).vec();
                    run.push(project(q));
                }
                runs.push(run);
            }
            let runs = if vis { &mut front } else { &mut back };
            runs.last_mut().expect("run started").push(xy);
            prev = Some(vis);
        }
        path(&mut out, "edge", &front);
        path(&mut out, "edge hidden", &back);
    }
    for (v, p) in d.positions().iter().enumerate() {
        let (x, y) = project(p.vec());
        vertex(&mut out, v, x, y, !visible(p.vec()));
    }
    out.push_str("</svg>\n");
    out
}

fn equirectangular(d: &SphericalDrawing) -> String {
    let margin = 16.0;
    let w = SIZE - 2.0 * margin;
    let h = w / 2.0;
    let project = |p: Vec3| {
        let lon = p.y.atan2(p.x);
        let lat = p.z.clamp(-1.0, 1.0).asin();
        (
            margin + (lon + PI) / TAU * w,
            margin + (PI / 2.0 - lat) / PI * h,
        )
    };
    let mut out = String::new();
    header(&mut out, SIZE, h + 2.0 * margin);
    let _ = writeln!(
        out,
        r#"<rect class="sphere" x="{m}" y="{m}" width="{}" height="{}"/>"#,
        num(w),
        num(h),
        m = num(margin)
    );
    for arc in d.arcs() {
        let k = samples(arc.length());
        let mut runs: Vec<Vec<(f64, f64)>> = vec![Vec::new()];
        let mut prev_lon: Option<f64> = None;
        for i in 0..=k {
            let p = arc.point_at(i as f64 / k as f64).vec();
            let lon = p.y.atan2(p.x);
            if prev_lon.is_some_and(|q| (lon - q).abs() > PI) {
                runs.push(Vec::new());
            }
            runs.last_mut().expect("nonempty").push(project(p));
            prev_lon = Some(lon);
        }
        path(&mut out, "edge", &runs);
    }
    for (v, p) in d.positions().iter().enumerate() {
        let (x, y) = project(p.vec());
        vertex(&mut out, v, x, y, false);
    }
    out.push_str("</svg>\n");
    out
}

fn planar(d: &PlanarDrawing) -> String {
    let margin = 32.0;
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in d.positions() {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let scale = (SIZE - 2.0 * margin) / span;
    let project = |x: f64, y: f64| (margin + (x - x0) * scale, SIZE - margin - (y - y0) * scale);
    let mut out = String::new();
    header(&mut out, SIZE, SIZE);
    for &(u, v) in d.graph().edges() {
        let (a, b) = (d.positions()[u], d.positions()[v]);
        let (ax, ay) = project(a.x, a.y);
        let (bx, by) = project(b.x, b.y);
        let _ = writeln!(
            out,
            r#"<line class="edge" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(ax),
            num(ay),
            num(bx),
            num(by)
        );
    }
    for (v, p) in d.positions().iter().enumerate() {
        let (x, y) = project(p.x, p.y);
        vertex(&mut out, v, x, y, false);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{build_spherical_drawing, fixtures, Meta};
    use crate::graph::Graph;
    use crate::Tolerances;

    fn upper_triangle() -> DrawingDocument {
        let pts = vec![
            UnitVec3::from_xyz(1.0, 0.0, 1.0).unwrap(),
            UnitVec3::from_xyz(0.0, 1.0, 1.0).unwrap(),
            UnitVec3::from_xyz(-1.0, -1.0, 1.0).unwrap(),
        ];
        let d = build_spherical_drawing(Graph::cycle(3), pts, vec![false; 3], &Tolerances::default()).unwrap();
        DrawingDocument::spherical(d, Meta::default())
    }

    #[test]
    fn triangle_element_counts() {
        let svg = render_svg(&upper_triangle(), "orthographic:z".parse().unwrap());
        assert_eq!(svg.matches("<path class=\"edge\"").count(), 3);
        assert_eq!(svg.matches("<path class=\"edge hidden\"").count(), 0);
        assert_eq!(svg.matches("class=\"vertex\"").count(), 3);
        let first = svg.lines().find(|l| l.starts_with("<path")).unwrap();
        assert!(first.matches('L').count() >= MIN_SAMPLES);
    }

    #[test]
    fn hidden_side_is_dashed() {
        let svg = render_svg(&upper_triangle(), "orthographic:-z".parse().unwrap());
        assert_eq!(svg.matches("<path class=\"edge hidden\"").count(), 3);
        assert_eq!(svg.matches("class=\"vertex hidden\"").count(), 3);
    }

    #[test]
    fn pentagram_lines_and_determinism() {
        let doc = DrawingDocument::planar(fixtures::pentagram(), Meta::default());
        let a = render_svg(&doc, Projection::Planar);
        assert_eq!(a.matches("<line ").count(), 5);
        assert_eq!(a, render_svg(&doc, Projection::Planar));
        let b = render_svg(&upper_triangle(), Projection::Planar);
        assert_eq!(b.matches("<path class=\"edge\"").count(), 3);
    }

    #[test]
    fn projection_parsing() {
        assert_eq!("planar".parse::<Projection>().unwrap(), Projection::Planar);
        assert_eq!(
            "orthographic".parse::<Projection>().unwrap(),
            Projection::Orthographic { view: UnitVec3::Z }
        );
        assert!("orthographic:1,0".parse::<Projection>().is_err());
        assert!("orthographic:0,0,0".parse::<Projection>().is_err());
        assert!("mercator".parse::<Projection>().is_err());
        let Projection::Orthographic { view } = "orthographic:0,3,4".parse().unwrap() else {
            panic!()
        };
        assert!((view.z() - 0.8).abs() < 1e-12);
    }
}
