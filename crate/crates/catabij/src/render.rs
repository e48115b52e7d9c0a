//! Deterministic text and SVG renderings.

use std::fmt::Write;

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::fans::fans;
use crate::format::Object;
use crate::polygon::PolygonSubdivision;
use crate::tableau::SkewTableau;

/// ASCII rendering: paths as a slash/backslash mountain profile, tableaux as
/// an aligned grid with dots off the diagram, subdivisions as a chord
/// summary plus the fan decomposition when the chords triangulate.
pub fn render_ascii(object: &Object) -> String {
    match object {
        Object::Path(p) => ascii_path(p),
        Object::Tableau(t) => ascii_tableau(t),
        Object::Subdivision(s) => ascii_subdivision(s),
    }
}

fn ascii_path(p: &DyckPath) -> String {
    let mut heights = Vec::with_capacity(p.steps().len());
    let mut h = 0usize;
    let mut max = 0usize;
    for step in p.steps() {
        heights.push(h);
        match step {
            Step::Up => h += 1,
            Step::Down => h -= 1,
        }
        max = max.max(h);
    }
    let mut out = String::new();
    for level in (0..max).rev() {
        for (k, step) in p.steps().iter().enumerate() {
            let ch = match step {
                Step::Up if heights[k] == level => '/',
                Step::Down if heights[k] == level + 1 => '\\',
                _ => ' ',
            };
            out.push(ch);
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out.pop();
    out
}

fn ascii_tableau(t: &SkewTableau) -> String {
    let width = t.cell_count().to_string().len();
    let mut out = String::new();
    for (r, row) in t.rows().iter().enumerate() {
        if r > 0 {
            out.push('\n');
        }
        for (c, v) in row.iter().enumerate() {
            if c > 0 {
                out.push(' ');
            }
            match v {
                Some(v) => write!(out, "{v:>width$}").unwrap(),
                None => write!(out, "{:>width$}", ".").unwrap(),
            }
        }
    }
    out
}

fn ascii_subdivision(s: &PolygonSubdivision) -> String {
    let mut out = format!("{}-gon, {} chord(s):", s.n(), s.chord_count());
    for c in s.chords() {
        write!(out, " {c}").unwrap();
    }
    if s.is_triangulation() {
        let fan_list = fans(s).expect("triangulation");
        out.push_str("\nfans:");
        for f in &fan_list {
            write!(out, " {}@{}", f.size(), f.origin).unwrap();
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SvgStyle {
    #[default]
    Plain,
    /// Shade each fan of a triangulation in its own tone.
    Fans,
}

const CANVAS: f64 = 420.0;
const RADIUS: f64 = 170.0;
const FAN_TONES: [&str; 8] = [
    "#fff3e0", "#ffe0b2", "#ffcc80", "#ffb74d", "#ffa726", "#ff9800", "#fb8c00", "#f57c00",
];

/// SVG rendering of a subdivision (polygon on a circle, straight chords,
/// optional fan shading) or a path (mountain polyline). Tableaux have no
/// SVG form.
pub fn render_svg(object: &Object, style: SvgStyle) -> Result<String> {
    match object {
        Object::Subdivision(s) => svg_subdivision(s, style),
        Object::Path(p) => Ok(svg_path(p)),
        Object::Tableau(_) => Err(Error::UnsupportedRender(
            "tableaux render as text; SVG covers subdivisions and paths".into(),
        )),
    }
}

/// Vertex 1 sits at the top and labels run counter-clockwise, as in the
/// polygon figures.
fn vertex_position(k: usize, n: usize) -> (f64, f64) {
    let angle =
        std::f64::consts::FRAC_PI_2 + (k - 1) as f64 * 2.0 * std::f64::consts::PI / n as f64;
    let c = CANVAS / 2.0;
    (c + RADIUS * angle.cos(), c - RADIUS * angle.sin())
}

fn svg_subdivision(s: &PolygonSubdivision, style: SvgStyle) -> Result<String> {
    let n = s.n();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {CANVAS} {CANVAS}" width="{CANVAS}" height="{CANVAS}">"#
    )
    .unwrap();

    if style == SvgStyle::Fans {
        if !s.is_triangulation() {
            return Err(Error::UnsupportedRender(
                "fan shading needs a triangulation".into(),
            ));
        }
        for (k, fan) in fans(s)?.iter().enumerate() {
            let mut points = String::new();
            let (x, y) = vertex_position(fan.origin, n);
            write!(points, "{x:.2},{y:.2}").unwrap();
            for &w in &fan.corners {
                let (x, y) = vertex_position(w, n);
                write!(points, " {x:.2},{y:.2}").unwrap();
            }
            writeln!(
                out,
                r#"  <polygon points="{points}" fill="{}" stroke="none"/>"#,
                FAN_TONES[k % FAN_TONES.len()]
            )
            .unwrap();
        }
    }

    let mut boundary = String::new();
    for k in 1..=n {
        let (x, y) = vertex_position(k, n);
        if k > 1 {
            boundary.push(' ');
        }
        write!(boundary, "{x:.2},{y:.2}").unwrap();
    }
    writeln!(
        out,
        r#"  <polygon points="{boundary}" fill="none" stroke="black" stroke-width="1.5"/>"#
    )
    .unwrap();

    for c in s.chords() {
        let (x1, y1) = vertex_position(c.lo(), n);
        let (x2, y2) = vertex_position(c.hi(), n);
        writeln!(
            out,
            r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1"/>"#
        )
        .unwrap();
    }

    for k in 1..=n {
        let (x, y) = vertex_position(k, n);
        let (lx, ly) = {
            let c = CANVAS / 2.0;
            (c + (x - c) * 1.12, c + (y - c) * 1.12)
        };
        writeln!(
            out,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-size="14" text-anchor="middle" dominant-baseline="middle">{k}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn svg_path(p: &DyckPath) -> String {
    let unit = 24.0;
    let margin = 20.0;
    let len = p.steps().len();
    let mut h = 0usize;
    let mut max = 0usize;
    let mut heights = Vec::with_capacity(len + 1);
    heights.push(0);
    for step in p.steps() {
        match step {
            Step::Up => h += 1,
            Step::Down => h -= 1,
        }
        heights.push(h);
        max = max.max(h);
    }
    let width = margin * 2.0 + unit * len as f64;
    let height = margin * 2.0 + unit * max as f64;
    let base = margin + unit * max as f64;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.0} {height:.0}" width="{width:.0}" height="{height:.0}">"#
    )
    .unwrap();
    writeln!(
        out,
        r##"  <line x1="{margin:.2}" y1="{base:.2}" x2="{:.2}" y2="{base:.2}" stroke="#bbbbbb" stroke-width="1"/>"##,
        width - margin
    )
    .unwrap();
    let mut points = String::new();
    for (k, &h) in heights.iter().enumerate() {
        if k > 0 {
            points.push(' ');
        }
        write!(
            points,
            "{:.2},{:.2}",
            margin + unit * k as f64,
            base - unit * h as f64
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"  <polyline points="{points}" fill="none" stroke="black" stroke-width="2"/>"#
    )
    .unwrap();
    for (k, &h) in heights.iter().enumerate() {
        writeln!(
            out,
            r#"  <circle cx="{:.2}" cy="{:.2}" r="3" fill="black"/>"#,
            margin + unit * k as f64,
            base - unit * h as f64
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mountain_profile_of_a_double_peak() {
        let p = Object::Path("UUDD".parse().unwrap());
        assert_eq!(render_ascii(&p), " /\\\n/  \\");
    }

    #[test]
    fn tableau_grid_aligns_columns() {
        let t = crate::nom::unnom(
            &crate::nom::NomincreasingPartition::new(
                [&[1usize][..], &[2, 3], &[4], &[5, 6, 8], &[7, 9, 10]]
                    .iter()
                    .map(|s| s.iter().copied().collect())
                    .collect(),
            )
            .unwrap(),
            4,
            2,
            4,
        )
        .unwrap();
        let text = render_ascii(&Object::Tableau(t));
        assert_eq!(text.lines().count(), 6);
        assert_eq!(text.lines().next().unwrap(), " .  .  1");
        assert_eq!(text.lines().last().unwrap(), "10  .  .");
    }

    #[test]
    fn subdivision_summary_lists_fans() {
        let t = PolygonSubdivision::new(
            12,
            [
                (2, 4),
                (2, 7),
                (2, 12),
                (4, 7),
                (5, 7),
                (7, 9),
                (7, 10),
                (7, 11),
                (7, 12),
            ],
        )
        .unwrap();
        let text = render_ascii(&Object::Subdivision(t));
        assert!(text.contains("12-gon, 9 chord(s)"));
        assert!(text.ends_with("fans: 1@1 3@2 1@4 1@5 4@7"));
    }

    #[test]
    fn svg_of_the_twelve_gon_has_fans_and_chords() {
        let t = PolygonSubdivision::new(
            12,
            [
                (2, 4),
                (2, 7),
                (2, 12),
                (4, 7),
                (5, 7),
                (7, 9),
                (7, 10),
                (7, 11),
                (7, 12),
            ],
        )
        .unwrap();
        let svg = render_svg(&Object::Subdivision(t.clone()), SvgStyle::Fans).unwrap();
        assert_eq!(svg.matches("<line").count(), 9);
        assert_eq!(svg.matches("<polygon").count(), 5 + 1);
        assert_eq!(svg.matches("<text").count(), 12);
        // Deterministic output for a fixed input.
        assert_eq!(
            svg,
            render_svg(&Object::Subdivision(t), SvgStyle::Fans).unwrap()
        );
    }

    #[test]
    fn svg_rejects_fan_shading_off_triangulations() {
        let d = PolygonSubdivision::new(6, [(1, 3)]).unwrap();
        assert!(matches!(
            render_svg(&Object::Subdivision(d), SvgStyle::Fans),
            Err(Error::UnsupportedRender(_))
        ));
    }

    #[test]
    fn svg_of_a_path_is_a_polyline() {
        let svg = render_svg(&Object::Path("UUDD".parse().unwrap()), SvgStyle::Plain).unwrap();
        assert!(svg.contains("<polyline"));
        assert_eq!(svg.matches("<circle").count(), 5);
    }

    #[test]
    fn tableaux_have_no_svg_form() {
        let t = SkewTableau::from_rows(2, 0, 2, vec![vec![Some(1)], vec![Some(2)]]).unwrap();
        assert!(matches!(
            render_svg(&Object::Tableau(t), SvgStyle::Plain),
            Err(Error::UnsupportedRender(_))
        ));
    }
}
