//! Heatmap demo on synthetic two-dimensional count data.

use crate::cvd::CvdKind;
use crate::error::{Error, Result};
use crate::ops::{desaturate, simulate_cvd};
use crate::palette::Palette;

use super::svg::{Body, Size, SvgDocument};

pub const GRID_SIZE: usize = 20;
pub const DEMO_POINTS: usize = 2000;
pub const DEFAULT_SEED: u64 = 1;

/// Numerical Recipes LCG: `state = 1664525 * state + 1013904223 (mod 2^32)`.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u32,
}

impl Lcg {
    pub const MULTIPLIER: u32 = 1_664_525;
    pub const INCREMENT: u32 = 1_013_904_223;

    pub fn new(seed: u64) -> Self {
        Lcg {
            state: (seed & 0xFFFF_FFFF) as u32,
        }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        self.state
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        f64::from(self.next_u32()) / 4_294_967_296.0
    }
}

/// 20x20 counts; row 0 is the bottom row of the heatmap.
#[derive(Debug, Clone, PartialEq)]
pub struct DemoGrid {
    pub counts: Vec<Vec<f64>>,
    pub seed: u64,
}

impl DemoGrid {
    /// Bins 2000 correlated points drawn from the LCG. Each coordinate is a
    /// mean of three uniforms, and `y` leans on `x`, which gives a single
    /// elongated blob.
    pub fn from_seed(seed: u64) -> Self {
        let mut rng = Lcg::new(seed);
        let mut mean3 = || (rng.next_f64() + rng.next_f64() + rng.next_f64()) / 3.0;
        let mut counts = vec![vec![0.0; GRID_SIZE]; GRID_SIZE];
        let bin = |v: f64| ((v * GRID_SIZE as f64) as usize).min(GRID_SIZE - 1);
        for _ in 0..DEMO_POINTS {
            let x = mean3();
            let y = 0.6 * x + 0.4 * mean3();
            counts[bin(y)][bin(x)] += 1.0;
        }
        DemoGrid { counts, seed }
    }

    pub fn new(counts: Vec<Vec<f64>>, seed: u64) -> Result<Self> {
        if counts.is_empty()
            || counts
                .iter()
                .any(|r| r.len() != counts[0].len() || r.is_empty())
        {
            return Err(Error::InvalidInput(
                "demo grid must be a non-empty rectangle".into(),
            ));
        }
        if counts.iter().flatten().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidInput(
                "demo grid counts must be finite and non-negative".into(),
            ));
        }
        Ok(DemoGrid { counts, seed })
    }

    fn range(&self) -> (f64, f64) {
        self.counts
            .iter()
            .flatten()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(*v), hi.max(*v))
            })
    }

    /// Class index in `0..classes` for each cell, by equal-width bins
    /// between the minimum and maximum count.
    pub fn classes(&self, classes: usize) -> Vec<Vec<usize>> {
        let (lo, hi) = self.range();
        self.counts
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        if hi <= lo {
                            0
                        } else {
                            (((v - lo) / (hi - lo) * classes as f64) as usize).min(classes - 1)
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

const CELL: f64 = 14.0;
const PANEL_MARGIN: f64 = 10.0;

/// Heatmap of `grid` with one color per equal-width count class.
pub fn demoplot_heatmap(
    palette: &Palette,
    grid: &DemoGrid,
    size: Option<Size>,
) -> Result<SvgDocument> {
    if palette.len() < 2 {
        return Err(Error::InvalidInput(
            "a heatmap needs at least two colors".into(),
        ));
    }
    let classes = grid.classes(palette.len());
    let rows = classes.len();
    let cols = classes[0].len();
    let mut body = Body::default();
    for (r, row) in classes.iter().enumerate() {
        let y = PANEL_MARGIN + (rows - 1 - r) as f64 * CELL;
        for (c, class) in row.iter().enumerate() {
            let x = PANEL_MARGIN + c as f64 * CELL;
            body.rect(x, y, CELL, CELL, palette.colors[*class].as_str());
        }
    }
    let w = 2.0 * PANEL_MARGIN + cols as f64 * CELL;
    let h = 2.0 * PANEL_MARGIN + rows as f64 * CELL;
    Ok(SvgDocument::new(w, h, body.finish(), size))
}

/// Panels arranged in a grid with column titles above and row labels on the
/// left. Every row must have the same number of panels.
pub fn panel_grid(
    panels: &[Vec<SvgDocument>],
    column_titles: &[&str],
    row_labels: &[&str],
    size: Option<Size>,
) -> Result<SvgDocument> {
    let cols = panels.first().map_or(0, Vec::len);
    if cols == 0 || panels.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput(
            "panel grid must be a non-empty rectangle".into(),
        ));
    }
    let pw = panels.iter().flatten().map(|p| p.width).fold(0.0, f64::max);
    let ph = panels
        .iter()
        .flatten()
        .map(|p| p.height)
        .fold(0.0, f64::max);
    let (label_w, title_h) = (150.0, 30.0);

    let mut body = Body::default();
    for (c, title) in column_titles.iter().enumerate().take(cols) {
        body.text(label_w + (c as f64 + 0.5) * pw, 20.0, 14.0, "middle", title);
    }
    for (r, row) in panels.iter().enumerate() {
        let y = title_h + r as f64 * ph;
        if let Some(label) = row_labels.get(r) {
            body.text(label_w - 8.0, y + ph / 2.0, 13.0, "end", label);
        }
        for (c, panel) in row.iter().enumerate() {
            body.raw(&panel.nested(label_w + c as f64 * pw, y));
        }
    }
    let w = label_w + cols as f64 * pw;
    let h = title_h + panels.len() as f64 * ph;
    Ok(SvgDocument::new(w, h, body.finish(), size))
}

/// Each palette as a row of three heatmaps: original colors, full deutan
/// simulation and full desaturation.
pub fn cvd_comparison(
    rows: &[(&str, Palette)],
    grid: &DemoGrid,
    size: Option<Size>,
) -> Result<SvgDocument> {
    let mut panels = Vec::with_capacity(rows.len());
    for (_, palette) in rows {
        let deutan = Palette::new(
            palette.label.clone(),
            simulate_cvd(&palette.colors, CvdKind::Deutan, 1.0)?,
        )?;
        let gray = Palette::new(palette.label.clone(), desaturate(&palette.colors, 1.0)?)?;
        panels.push(vec![
            demoplot_heatmap(palette, grid, None)?,
            demoplot_heatmap(&deutan, grid, None)?,
            demoplot_heatmap(&gray, grid, None)?,
        ]);
    }
    let labels: Vec<&str> = rows.iter().map(|(l, _)| *l).collect();
    panel_grid(
        &panels,
        &["Original", "Deuteranope", "Desaturated"],
        &labels,
        size,
    )
}
