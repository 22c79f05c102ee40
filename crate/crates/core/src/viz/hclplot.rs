use crate::color::{format_hex, Hcl, HexCode};
use crate::error::{Error, Result};
use crate::palette::{sample, sample_hcl, PaletteKind, PaletteSpec};

use super::spectrum::left_axis_max;
use super::svg::{Body, Size, SvgDocument};

const WIDTH: f64 = 500.0;
const HEIGHT: f64 = 500.0;
const PLOT_LEFT: f64 = 60.0;
const PLOT_RIGHT: f64 = 470.0;
const PLOT_TOP: f64 = 30.0;
const PLOT_BOTTOM: f64 = 440.0;
/// Raster resolution in chroma and luminance units.
pub const RASTER_STEP: f64 = 2.0;
const POINT_RADIUS: f64 = 6.0;

/// One painted background cell, centred on `(c, l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterCell {
    pub h: f64,
    pub c: f64,
    pub l: f64,
    pub color: HexCode,
}

/// Hue as a piecewise-linear function of luminance through the palette's
/// trajectory points, held constant beyond the ends.
#[derive(Debug, Clone)]
pub struct HueByLuminance {
    knots: Vec<(f64, f64)>,
}

impl HueByLuminance {
    pub fn new(points: &[Hcl]) -> Self {
        let mut knots: Vec<(f64, f64)> = points.iter().map(|p| (p.l, p.h)).collect();
        knots.sort_by(|a, b| a.0.total_cmp(&b.0));
        knots.dedup_by(|b, a| a.0 == b.0);
        HueByLuminance { knots }
    }

    pub fn at(&self, l: f64) -> f64 {
        let (first, last) = (self.knots[0], self.knots[self.knots.len() - 1]);
        if l <= first.0 {
            return first.1;
        }
        if l >= last.0 {
            return last.1;
        }
        let k = self.knots.partition_point(|(kl, _)| *kl <= l);
        let ((l0, h0), (l1, h1)) = (self.knots[k - 1], self.knots[k]);
        h0 + (h1 - h0) * (l - l0) / (l1 - l0)
    }
}

fn check(spec: &PaletteSpec, n: usize) -> Result<()> {
    if spec.kind != PaletteKind::Sequential {
        return Err(Error::UnsupportedKind(spec.kind.to_string()));
    }
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "an HCL path plot needs at least two colors, got {n}"
        )));
    }
    spec.validate()
}

/// Chroma axis upper bound shared by the raster and the overlay.
fn chroma_axis(points: &[Hcl]) -> f64 {
    left_axis_max(points.iter().map(|p| p.c))
}

/// Background cells of the chroma-luminance plane that are inside the sRGB
/// gamut without clamping, colored at `(H(l), c, l)`.
pub fn gamut_raster(spec: &PaletteSpec, n: usize) -> Result<Vec<RasterCell>> {
    check(spec, n)?;
    let points = sample_hcl(spec, n)?;
    let hue = HueByLuminance::new(&points);
    let c_max = chroma_axis(&points);
    let cols = (c_max / RASTER_STEP).round() as usize;
    let rows = (100.0 / RASTER_STEP).round() as usize;
    let mut cells = Vec::new();
    for row in 0..rows {
        let l = (row as f64 + 0.5) * RASTER_STEP;
        let h = hue.at(l);
        for col in 0..cols {
            let c = (col as f64 + 0.5) * RASTER_STEP;
            let rgb = Hcl::new(h, c, l).to_srgb();
            if rgb.in_gamut() {
                cells.push(RasterCell {
                    h,
                    c,
                    l,
                    color: format_hex(rgb)?,
                });
            }
        }
    }
    Ok(cells)
}

/// Chroma and luminance of the `n` sampled hex colors.
pub fn hcl_path_points(spec: &PaletteSpec, n: usize) -> Result<Vec<(HexCode, Hcl)>> {
    check(spec, n)?;
    Ok(sample(spec, n)?
        .colors
        .into_iter()
        .map(|c| {
            let hcl = c.to_hcl();
            (c, hcl)
        })
        .collect())
}

/// Palette path in the chroma-luminance plane over the gamut slice the path
/// passes through.
pub fn hclplot(spec: &PaletteSpec, n: usize, size: Option<Size>) -> Result<SvgDocument> {
    let cells = gamut_raster(spec, n)?;
    let points = hcl_path_points(spec, n)?;
    let c_max = chroma_axis(&sample_hcl(spec, n)?);

    let x_at = |c: f64| PLOT_LEFT + (PLOT_RIGHT - PLOT_LEFT) * c / c_max;
    let y_at = |l: f64| PLOT_BOTTOM - (PLOT_BOTTOM - PLOT_TOP) * l / 100.0;
    let cell_w = x_at(RASTER_STEP) - x_at(0.0);
    let cell_h = y_at(0.0) - y_at(RASTER_STEP);

    let mut body = Body::default();
    for cell in &cells {
        body.rect(
            x_at(cell.c - RASTER_STEP / 2.0),
            y_at(cell.l + RASTER_STEP / 2.0),
            cell_w,
            cell_h,
            cell.color.as_str(),
        );
    }
    body.frame(
        PLOT_LEFT,
        PLOT_TOP,
        PLOT_RIGHT - PLOT_LEFT,
        PLOT_BOTTOM - PLOT_TOP,
    );

    let mut tick = 0.0;
    while tick <= c_max {
        let x = x_at(tick);
        body.line(x, PLOT_BOTTOM, x, PLOT_BOTTOM + 5.0, "#000000");
        body.text(x, PLOT_BOTTOM + 18.0, 11.0, "middle", &format!("{tick}"));
        tick += 20.0;
    }
    let mut tick = 0.0;
    while tick <= 100.0 {
        let y = y_at(tick);
        body.line(PLOT_LEFT - 5.0, y, PLOT_LEFT, y, "#000000");
        body.text(PLOT_LEFT - 8.0, y + 4.0, 11.0, "end", &format!("{tick}"));
        tick += 20.0;
    }
    body.text(
        (PLOT_LEFT + PLOT_RIGHT) / 2.0,
        HEIGHT - 20.0,
        12.0,
        "middle",
        "Chroma",
    );
    body.text(20.0, PLOT_TOP - 10.0, 12.0, "start", "Luminance");

    let path: Vec<(f64, f64)> = points.iter().map(|(_, p)| (x_at(p.c), y_at(p.l))).collect();
    body.polyline("path", &path, "#000000");
    for ((color, _), (x, y)) in points.iter().zip(&path) {
        body.circle(*x, *y, POINT_RADIUS, color.as_str());
    }
    Ok(SvgDocument::new(WIDTH, HEIGHT, body.finish(), size))
}
