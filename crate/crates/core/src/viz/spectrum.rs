use crate::error::{Error, Result};
use crate::palette::Palette;

use super::svg::{Body, Size, SvgDocument};

const WIDTH: f64 = 500.0;
const HEIGHT: f64 = 500.0;
const PLOT_LEFT: f64 = 60.0;
const PLOT_RIGHT: f64 = 440.0;
const PLOT_TOP: f64 = 40.0;
const PLOT_BOTTOM: f64 = 400.0;
const STRIP_TOP: f64 = 420.0;
const STRIP_HEIGHT: f64 = 40.0;

pub const HUE_STROKE: &str = "#B2182B";
pub const CHROMA_STROKE: &str = "#1B7837";
pub const LUMINANCE_STROKE: &str = "#000000";

/// HCL coordinates of a palette's colors, hue unwrapped.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSeries {
    pub hue: Vec<f64>,
    pub chroma: Vec<f64>,
    pub luminance: Vec<f64>,
}

/// Shifts each hue by a multiple of 360 so consecutive values differ by at
/// most 180 degrees.
pub fn unwrap_hues(hues: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(hues.len());
    for &h in hues {
        match out.last() {
            None => out.push(h),
            Some(&prev) => {
                let d = (h - prev).rem_euclid(360.0);
                let d = if d > 180.0 { d - 360.0 } else { d };
                out.push(prev + d);
            }
        }
    }
    out
}

pub fn spectrum_series(palette: &Palette) -> SpectrumSeries {
    let hcl: Vec<_> = palette.colors.iter().map(|c| c.to_hcl()).collect();
    let hue: Vec<f64> = hcl.iter().map(|c| c.h).collect();
    SpectrumSeries {
        hue: unwrap_hues(&hue),
        chroma: hcl.iter().map(|c| c.c).collect(),
        luminance: hcl.iter().map(|c| c.l).collect(),
    }
}

/// Axis upper bound for chroma and luminance: at least 100, rounded up to
/// a multiple of 20.
pub(crate) fn left_axis_max(values: impl Iterator<Item = f64>) -> f64 {
    let max = values.fold(100.0, f64::max);
    (max / 20.0).ceil() * 20.0
}

/// Hue axis range: padded to multiples of 30, at least 60 wide.
fn hue_axis(hues: &[f64]) -> (f64, f64) {
    let lo = hues.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = hues.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut lo = (lo / 30.0).floor() * 30.0;
    let mut hi = (hi / 30.0).ceil() * 30.0;
    if hi - lo < 60.0 {
        let mid = ((lo + hi) / 2.0 / 30.0).round() * 30.0;
        lo = mid - 30.0;
        hi = mid + 30.0;
    }
    (lo, hi)
}

/// Hue, chroma and luminance traces over palette position, with a swatch
/// strip underneath. Chroma and luminance use the left axis, hue the right.
pub fn specplot(palette: &Palette, size: Option<Size>) -> Result<SvgDocument> {
    if palette.len() < 2 {
        return Err(Error::InvalidInput(
            "a spectrum plot needs at least two colors".into(),
        ));
    }
    let series = spectrum_series(palette);
    let n = palette.len();
    let left_max = left_axis_max(series.chroma.iter().chain(&series.luminance).cloned());
    let (hue_lo, hue_hi) = hue_axis(&series.hue);

    let x_at = |k: usize| PLOT_LEFT + (PLOT_RIGHT - PLOT_LEFT) * k as f64 / (n - 1) as f64;
    let y_left = |v: f64| PLOT_BOTTOM - (PLOT_BOTTOM - PLOT_TOP) * v / left_max;
    let y_hue = |h: f64| PLOT_BOTTOM - (PLOT_BOTTOM - PLOT_TOP) * (h - hue_lo) / (hue_hi - hue_lo);

    let mut body = Body::default();
    body.frame(
        PLOT_LEFT,
        PLOT_TOP,
        PLOT_RIGHT - PLOT_LEFT,
        PLOT_BOTTOM - PLOT_TOP,
    );

    let mut tick = 0.0;
    while tick <= left_max {
        let y = y_left(tick);
        body.line(PLOT_LEFT - 5.0, y, PLOT_LEFT, y, "#000000");
        body.text(PLOT_LEFT - 8.0, y + 4.0, 11.0, "end", &format!("{tick}"));
        tick += 20.0;
    }
    let hue_step = if hue_hi - hue_lo > 180.0 { 60.0 } else { 30.0 };
    let mut tick = hue_lo;
    while tick <= hue_hi {
        let y = y_hue(tick);
        body.line(PLOT_RIGHT, y, PLOT_RIGHT + 5.0, y, "#000000");
        body.text(PLOT_RIGHT + 8.0, y + 4.0, 11.0, "start", &format!("{tick}"));
        tick += hue_step;
    }
    body.text(20.0, 25.0, 12.0, "start", "Chroma / Luminance");
    body.text(WIDTH - 20.0, 25.0, 12.0, "end", "Hue");

    let trace = |values: &[f64], y: &dyn Fn(f64) -> f64| -> Vec<(f64, f64)> {
        values
            .iter()
            .enumerate()
            .map(|(k, v)| (x_at(k), y(*v)))
            .collect()
    };
    body.polyline(
        "luminance",
        &trace(&series.luminance, &y_left),
        LUMINANCE_STROKE,
    );
    body.polyline("chroma", &trace(&series.chroma, &y_left), CHROMA_STROKE);
    body.polyline("hue", &trace(&series.hue, &y_hue), HUE_STROKE);

    let legend = [
        ("Hue", HUE_STROKE),
        ("Chroma", CHROMA_STROKE),
        ("Luminance", LUMINANCE_STROKE),
    ];
    for (k, (label, stroke)) in legend.iter().enumerate() {
        let x = PLOT_LEFT + 10.0 + 110.0 * k as f64;
        body.line(x, PLOT_TOP - 12.0, x + 20.0, PLOT_TOP - 12.0, stroke);
        body.text(x + 25.0, PLOT_TOP - 8.0, 11.0, "start", label);
    }

    let w = (PLOT_RIGHT - PLOT_LEFT) / n as f64;
    for (k, color) in palette.colors.iter().enumerate() {
        body.rect(
            PLOT_LEFT + k as f64 * w,
            STRIP_TOP,
            w,
            STRIP_HEIGHT,
            color.as_str(),
        );
    }
    Ok(SvgDocument::new(WIDTH, HEIGHT, body.finish(), size))
}
