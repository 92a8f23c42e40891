//! CSV, JSON and SVG renderings of `B_n`.
//!
//! Every format lists points in `(re, im)` lexicographic order and is a
//! pure function of the point set, the render settings and the crate
//! version.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bset::enumerate_b;
use crate::error::Result;
use crate::gaussint::GaussInt;
use crate::wseq::oct_spec;

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
    Svg,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            "svg" => Ok(ExportFormat::Svg),
            other => Err(format!("unknown format {other:?} (expected csv, json or svg)")),
        }
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Default)]
pub enum PointStyle {
    #[default]
    Square,
    Disc,
}

impl FromStr for PointStyle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "square" => Ok(PointStyle::Square),
            "disc" => Ok(PointStyle::Disc),
            other => Err(format!("unknown point style {other:?} (expected square or disc)")),
        }
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    scale: u32,
    pub point_style: PointStyle,
    pub include_octagon_outline: bool,
}

impl RenderSpec {
    /// `None` when `scale` is zero.
    pub fn new(scale: u32, point_style: PointStyle, include_octagon_outline: bool) -> Option<Self> {
        (scale >= 1).then_some(RenderSpec { scale, point_style, include_octagon_outline })
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { scale: 8, point_style: PointStyle::Square, include_octagon_outline: false }
    }
}

pub fn to_csv(points: &[GaussInt]) -> String {
    points.iter().fold(String::new(), |mut out, z| {
        let _ = writeln!(out, "{},{}", z.re, z.im);
        out
    })
}

pub fn to_json(points: &[GaussInt]) -> String {
    let pairs: Vec<[i64; 2]> = points.iter().map(|z| [z.re, z.im]).collect();
    let mut out = serde_json::to_string(&pairs).expect("integer pairs always serialize");
    out.push('\n');
    out
}

/// One glyph per point, real axis to the right and imaginary axis up. The
/// view box is the `Oct_n` bounding square plus one lattice unit of margin.
pub fn to_svg(n: u32, points: &[GaussInt], spec: &RenderSpec) -> Result<String> {
    let oct = oct_spec(n)?;
    let s = i64::from(spec.scale);
    let extent = (oct.box_bound as i64 + 1) * s;
    let side = 2 * extent;
    let glyph = 0.8 * s as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side}" height="{side}" viewBox="{} {} {side} {side}">"#,
        -extent, -extent
    );
    let _ = writeln!(out, "<!-- mineuclid {}: B_{n}, {} points -->", env!("CARGO_PKG_VERSION"), points.len());
    if spec.include_octagon_outline {
        let corners: Vec<String> =
            oct.vertices().iter().map(|&(x, y)| format!("{},{}", x * s, -y * s)).collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="none" stroke="#888888" stroke-width="{:.2}"/>"##,
            corners.join(" "),
            s as f64 / 8.0
        );
    }
    let _ = writeln!(out, r##"<g fill="#1f3a93">"##);
    for z in points {
        let (cx, cy) = (z.re * s, -z.im * s);
        match spec.point_style {
            PointStyle::Square => {
                let _ = writeln!(
                    out,
                    r#"<rect x="{:.2}" y="{:.2}" width="{glyph:.2}" height="{glyph:.2}"/>"#,
                    cx as f64 - glyph / 2.0,
                    cy as f64 - glyph / 2.0
                );
            }
            PointStyle::Disc => {
                let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="{:.2}"/>"#, glyph / 2.0);
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

pub fn export(n: u32, format: ExportFormat, spec: &RenderSpec) -> Result<String> {
    let points = enumerate_b(n)?;
    Ok(match format {
        ExportFormat::Csv => to_csv(&points),
        ExportFormat::Json => to_json(&points),
        ExportFormat::Svg => to_svg(n, &points, spec)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_of_b0() {
        assert_eq!(export(0, ExportFormat::Csv, &RenderSpec::default()).unwrap(), "-1,0\n0,-1\n0,0\n0,1\n1,0\n");
    }

    #[test]
    fn json_of_b0() {
        assert_eq!(
            export(0, ExportFormat::Json, &RenderSpec::default()).unwrap(),
            "[[-1,0],[0,-1],[0,0],[0,1],[1,0]]\n"
        );
        let b1 = export(1, ExportFormat::Json, &RenderSpec::default()).unwrap();
        let parsed: Vec<[i64; 2]> = serde_json::from_str(&b1).unwrap();
        assert_eq!(parsed.len(), 17);
    }

    #[test]
    fn svg_glyphs_and_outline() {
        let plain = export(2, ExportFormat::Svg, &RenderSpec::default()).unwrap();
        assert_eq!(plain.matches("<rect").count(), 49);
        assert!(!plain.contains("<polygon"));
        assert!(plain.contains(r#"viewBox="-40 -40 80 80""#));
        let spec = RenderSpec::new(3, PointStyle::Disc, true).unwrap();
        let fancy = export(2, ExportFormat::Svg, &spec).unwrap();
        assert_eq!(fancy.matches("<circle").count(), 49);
        assert_eq!(fancy.matches("<polygon").count(), 1);
        assert!(fancy.starts_with("<svg") && fancy.ends_with("</svg>\n"));
    }

    #[test]
    fn zero_scale_is_rejected() {
        assert!(RenderSpec::new(0, PointStyle::Square, false).is_none());
    }

    #[test]
    fn format_names() {
        assert_eq!("svg".parse::<ExportFormat>(), Ok(ExportFormat::Svg));
        assert!("png".parse::<ExportFormat>().is_err());
        assert_eq!("disc".parse::<PointStyle>(), Ok(PointStyle::Disc));
    }
}
