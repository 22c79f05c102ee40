//! The standard diagnostic figures built from the bundled registry.

use crate::error::Result;
use crate::palette::{
    rainbow_hsv, sample, NamedPaletteRegistry, Palette, PaletteSpec, SpecOverrides,
};

use super::demo::{cvd_comparison, DemoGrid};
use super::svg::{Size, SvgDocument};
use super::swatch::{swatchplot, SwatchSet};

pub const VIRIDIS_TITLE: &str = "Viridis (and altered versions of it)";

/// Viridis by name, by hand, with a triangular chroma path (`cmax = 90`,
/// `c2 = 20`) and with a smaller hue range (`h1 = 200`).
pub fn viridis_variants(
    registry: &NamedPaletteRegistry,
) -> Result<Vec<(&'static str, PaletteSpec)>> {
    let by_name = registry.get("viridis", &SpecOverrides::default())?;
    let by_hand = PaletteSpec::sequential([300.0, 75.0], [40.0, 95.0], [15.0, 90.0], [1.0, 1.1]);
    let triangular = registry.get(
        "viridis",
        &SpecOverrides {
            cmax: Some(90.0),
            c2: Some(20.0),
            ..Default::default()
        },
    )?;
    let smaller_hue = registry.get(
        "viridis",
        &SpecOverrides {
            h1: Some(200.0),
            ..Default::default()
        },
    )?;
    Ok(vec![
        ("By name", by_name),
        ("By hand", by_hand),
        ("With triangular chroma", triangular),
        ("With smaller hue range", smaller_hue),
    ])
}

/// Swatches of the four viridis variants at `n` colors each.
pub fn viridis_swatches(
    registry: &NamedPaletteRegistry,
    n: usize,
    size: Option<Size>,
) -> Result<SvgDocument> {
    let mut set = SwatchSet::new(VIRIDIS_TITLE);
    for (label, spec) in viridis_variants(registry)? {
        set = set.row(label, sample(&spec, n)?);
    }
    swatchplot(&[set], size)
}

/// Reversed HSV rainbow (hues 0 to 2/3) and reversed Blue-Yellow, both at
/// `n` colors.
pub fn rainbow_vs_hcl(
    registry: &NamedPaletteRegistry,
    n: usize,
) -> Result<Vec<(&'static str, Palette)>> {
    let rainbow = rainbow_hsv(n, 0.0, 2.0 / 3.0, true)?;
    let mut blue_yellow = registry.get("blue-yellow", &SpecOverrides::default())?;
    blue_yellow.reverse = true;
    Ok(vec![
        ("Rainbow", rainbow),
        ("HCL (Blue-Yellow)", sample(&blue_yellow, n)?),
    ])
}

/// Heatmaps of the rainbow and Blue-Yellow palettes under normal vision,
/// deuteranopia and desaturation.
pub fn cvd_demo(
    registry: &NamedPaletteRegistry,
    n: usize,
    grid: &DemoGrid,
    size: Option<Size>,
) -> Result<SvgDocument> {
    cvd_comparison(&rainbow_vs_hcl(registry, n)?, grid, size)
}
