//! Trajectory formulas and sampling.

use crate::color::{format_hex, Hcl, HexCode, Hsv};
use crate::error::{Error, Result};

use super::{Palette, PaletteKind, PaletteSpec};

/// Position along a sequential path: `1` is the first color, `0` the last.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PathIndex(f64);

impl PathIndex {
    pub fn new(i: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&i) {
            Ok(PathIndex(i))
        } else {
            Err(Error::InvalidInput(format!(
                "path index {i} is outside [0, 1]"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Signed position along a diverging path: `1` is the end of the `h1` arm,
/// `-1` the end of the `h2` arm, `0` the neutral.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DivergingIndex(f64);

impl DivergingIndex {
    pub fn new(t: f64) -> Result<Self> {
        if (-1.0..=1.0).contains(&t) {
            Ok(DivergingIndex(t))
        } else {
            Err(Error::InvalidInput(format!(
                "diverging index {t} is outside [-1, 1]"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

fn require_kind(spec: &PaletteSpec, kind: PaletteKind) -> Result<()> {
    if spec.kind == kind {
        Ok(())
    } else {
        Err(Error::spec(
            "kind",
            format!("expected a {kind} spec, got {}", spec.kind),
        ))
    }
}

/// `from - u * (from - to)`, returning `to` itself at `u = 1`.
fn toward(from: f64, to: f64, u: f64) -> f64 {
    if u == 1.0 {
        to
    } else {
        from - u * (from - to)
    }
}

/// Chroma along `u = i^p1`: linear from `c2` (u = 0) to `c1` (u = 1), or a
/// triangle through `cmax` at the knot `j`.
fn chroma(u: f64, c1: f64, c2: f64, cmax: Option<f64>) -> f64 {
    let Some(cmax) = cmax else {
        return toward(c2, c1, u);
    };
    let (rise, fall) = ((cmax - c2).abs(), (cmax - c1).abs());
    if rise + fall == 0.0 {
        return cmax;
    }
    let j = rise / (rise + fall);
    if u <= j {
        if j == 0.0 {
            c2
        } else {
            c2 + (cmax - c2) * u / j
        }
    } else {
        toward(cmax, c1, (u - j) / (1.0 - j))
    }
}

fn sequential_unchecked(spec: &PaletteSpec, i: f64) -> Hcl {
    let (h1, h2) = (spec.h1, spec.h2_or_default());
    let (l1, l2) = (spec.l1, spec.l2_or_default());
    let h = toward(h2, h1, i);
    let l = toward(l2, l1, i.powf(spec.p2_or_default()));
    let c = chroma(i.powf(spec.p1), spec.c1, spec.c2_or_default(), spec.cmax);
    Hcl::new(h, c, l)
}

fn diverging_unchecked(spec: &PaletteSpec, t: f64) -> Hcl {
    let a = t.abs();
    let (l1, l2) = (spec.l1, spec.l2_or_default());
    let c = chroma(a.powf(spec.p1), spec.c1, 0.0, spec.cmax);
    let l = toward(l2, l1, a.powf(spec.p2_or_default()));
    let h = if t >= 0.0 {
        spec.h1
    } else {
        spec.h2_or_default()
    };
    Hcl::new(h, c, l)
}

fn qualitative_unchecked(spec: &PaletteSpec, k: usize, n: usize) -> Hcl {
    let h = if n <= 1 {
        spec.h1
    } else {
        let n_f = n as f64;
        let h2 = spec.h2.unwrap_or(spec.h1 + 360.0 * (n_f - 1.0) / n_f);
        spec.h1 + (k as f64 / (n_f - 1.0)) * (h2 - spec.h1)
    };
    Hcl::new(h, spec.c1, spec.l1)
}

pub fn sequential_path(spec: &PaletteSpec, i: PathIndex) -> Result<Hcl> {
    require_kind(spec, PaletteKind::Sequential)?;
    spec.validate()?;
    Ok(sequential_unchecked(spec, i.get()))
}

pub fn diverging_path(spec: &PaletteSpec, t: DivergingIndex) -> Result<Hcl> {
    require_kind(spec, PaletteKind::Diverging)?;
    spec.validate()?;
    Ok(diverging_unchecked(spec, t.get()))
}

pub fn qualitative_path(spec: &PaletteSpec, k: usize, n: usize) -> Result<Hcl> {
    require_kind(spec, PaletteKind::Qualitative)?;
    spec.validate()?;
    if n == 0 {
        return Err(Error::InvalidCount(0));
    }
    if k >= n {
        return Err(Error::InvalidInput(format!(
            "color index {k} is out of range for {n} colors"
        )));
    }
    Ok(qualitative_unchecked(spec, k, n))
}

/// The `n` trajectory points in output order (reverse applied), before any
/// gamut handling.
pub fn sample_hcl(spec: &PaletteSpec, n: usize) -> Result<Vec<Hcl>> {
    if n == 0 {
        return Err(Error::InvalidCount(0));
    }
    spec.validate()?;
    let step = |k: usize| {
        if n == 1 {
            0.0
        } else {
            k as f64 / (n - 1) as f64
        }
    };
    let mut points: Vec<Hcl> = (0..n)
        .map(|k| match spec.kind {
            PaletteKind::Sequential => sequential_unchecked(spec, 1.0 - step(k)),
            PaletteKind::Diverging => diverging_unchecked(spec, 1.0 - 2.0 * step(k)),
            PaletteKind::Qualitative => qualitative_unchecked(spec, k, n),
        })
        .collect();
    if spec.reverse {
        points.reverse();
    }
    Ok(points)
}

/// Samples `n` hex colors from the spec.
///
/// With `fixup` set out-of-gamut colors are clamped per channel in sRGB;
/// without it they are an error.
pub fn sample(spec: &PaletteSpec, n: usize) -> Result<Palette> {
    let colors = sample_hcl(spec, n)?
        .into_iter()
        .enumerate()
        .map(|(index, hcl)| hcl_to_hex(hcl, spec.fixup).map_err(|_| Error::OutOfGamut { index }))
        .collect::<Result<Vec<_>>>()?;
    Palette::new(spec.label(), colors)
}

pub(crate) fn hcl_to_hex(hcl: Hcl, fixup: bool) -> Result<HexCode> {
    let rgb = hcl.to_srgb();
    format_hex(if fixup { rgb.clamped() } else { rgb })
}

/// The classic fully saturated HSV rainbow, hues from `start` to `end` as
/// fractions of the color wheel.
pub fn rainbow_hsv(n: usize, start: f64, end: f64, reverse: bool) -> Result<Palette> {
    if n == 0 {
        return Err(Error::InvalidCount(0));
    }
    for (what, v) in [("start", start), ("end", end)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::InvalidInput(format!(
                "rainbow {what} {v} is outside [0, 1]"
            )));
        }
    }
    let mut colors = (0..n)
        .map(|k| {
            let frac = if n == 1 {
                start
            } else {
                start + k as f64 * (end - start) / (n - 1) as f64
            };
            format_hex(Hsv::new(360.0 * frac, 1.0, 1.0).to_srgb().clamped())
        })
        .collect::<Result<Vec<_>>>()?;
    if reverse {
        colors.reverse();
    }
    Palette::new("Rainbow", colors)
}
