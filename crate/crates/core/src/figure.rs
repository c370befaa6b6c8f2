//! Planar pictures of the closure generators of `I_{3,t}`.
//!
//! Every generator has total degree `2t`, so the points lie on a triangle.
//! A point `a` is drawn at barycentric coordinates `λ_j = 1 - a_j / t`,
//! which puts the vertex `e_i` at corner `i`.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::closure::closure_generators;
use crate::error::{Error, Result};
use crate::family::{family_ideal, FamilyParams};
use crate::ideal::ExponentVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Vertex,
    Interior,
}

impl PointKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PointKind::Vertex => "vertex",
            PointKind::Interior => "interior",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigurePoint {
    pub exps: ExponentVector,
    pub kind: PointKind,
    /// Position in the unit-side equilateral triangle.
    pub x: f64,
    pub y: f64,
}

const CORNERS: [(f64, f64); 3] = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.866_025_403_784_438_6)];

/// The closure generators of `I_{n,t}` placed in the plane; only `n = 3`.
pub fn figure_points(n: usize, t: u64) -> Result<Vec<FigurePoint>> {
    if n != 3 {
        return Err(Error::Usage(format!(
            "figures are planar and need n = 3, got {n}"
        )));
    }
    let p = FamilyParams::new(n, t)?;
    let closure = closure_generators(&family_ideal(p))?;
    let tf = t as f64;
    Ok(closure
        .gens()
        .iter()
        .map(|a| {
            let kind = if a.coords().iter().any(|c| c.bits() == 0) {
                PointKind::Vertex
            } else {
                PointKind::Interior
            };
            let (mut x, mut y) = (0.0, 0.0);
            for (j, c) in a.coords().iter().enumerate() {
                let lambda = 1.0 - c.to_f64().unwrap_or(f64::INFINITY) / tf;
                x += lambda * CORNERS[j].0;
                y += lambda * CORNERS[j].1;
            }
            FigurePoint {
                exps: a.clone(),
                kind,
                x,
                y,
            }
        })
        .collect())
}

pub fn render_csv(points: &[FigurePoint]) -> String {
    let mut out = String::from("x1,x2,x3,kind,px,py\n");
    for p in points {
        let c = p.exps.coords();
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{:.6}",
            c[0],
            c[1],
            c[2],
            p.kind.as_str(),
            p.x,
            p.y
        );
    }
    out
}

pub fn render_svg(points: &[FigurePoint], t: u64) -> String {
    const SIZE: f64 = 400.0;
    const MARGIN: f64 = 40.0;
    let to_screen = |x: f64, y: f64| (MARGIN + x * SIZE, MARGIN + (CORNERS[2].1 - y) * SIZE);
    let width = SIZE + 2.0 * MARGIN;
    let height = CORNERS[2].1 * SIZE + 2.0 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, "  <title>closure generators of I_(3,{t})</title>");
    let corners: Vec<String> = CORNERS
        .iter()
        .map(|&(x, y)| {
            let (sx, sy) = to_screen(x, y);
            format!("{sx:.2},{sy:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"  <polygon points="{}" fill="#eef3fb" stroke="#345" stroke-width="1.5"/>"##,
        corners.join(" ")
    );
    for p in points {
        let (sx, sy) = to_screen(p.x, p.y);
        let (r, fill) = match p.kind {
            PointKind::Vertex => (6.0, "#c0392b"),
            PointKind::Interior => (4.0, "#2c3e50"),
        };
        let _ = writeln!(
            out,
            r#"  <circle cx="{sx:.2}" cy="{sy:.2}" r="{r}" fill="{fill}"><title>{}</title></circle>"#,
            p.exps
        );
    }
    out.push_str("</svg>\n");
    out
}
