//! Deterministic SVG diagnostics: swatch grids, spectrum plots,
//! chroma-luminance path plots and heatmap demos.
//!
//! Output depends only on the inputs. Coordinates go through [`svg::num`],
//! so the same call always produces the same bytes.

mod demo;
mod figures;
mod hclplot;
mod spectrum;
pub mod svg;
mod swatch;

pub use demo::{
    cvd_comparison, demoplot_heatmap, panel_grid, DemoGrid, Lcg, DEFAULT_SEED, DEMO_POINTS,
    GRID_SIZE,
};
pub use figures::{cvd_demo, rainbow_vs_hcl, viridis_swatches, viridis_variants, VIRIDIS_TITLE};
pub use hclplot::{
    gamut_raster, hcl_path_points, hclplot, HueByLuminance, RasterCell, RASTER_STEP,
};
pub use spectrum::{specplot, spectrum_series, unwrap_hues, SpectrumSeries};
pub use svg::{Size, SvgDocument};
pub use swatch::{swatchplot, SwatchSet};
