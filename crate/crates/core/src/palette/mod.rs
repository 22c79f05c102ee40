//! HCL palette specifications and the palettes sampled from them.

mod path;
mod registry;

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::color::HexCode;
use crate::error::{Error, Result};

pub use path::{
    diverging_path, qualitative_path, rainbow_hsv, sample, sample_hcl, sequential_path,
    DivergingIndex, PathIndex,
};
pub use registry::{normalize_name, NamedPaletteRegistry, DEFAULT_REGISTRY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PaletteKind {
    Qualitative,
    Sequential,
    Diverging,
}

impl PaletteKind {
    pub const ALL: [PaletteKind; 3] = [
        PaletteKind::Qualitative,
        PaletteKind::Sequential,
        PaletteKind::Diverging,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PaletteKind::Qualitative => "qualitative",
            PaletteKind::Sequential => "sequential",
            PaletteKind::Diverging => "diverging",
        }
    }
}

impl fmt::Display for PaletteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PaletteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "qualitative" => Ok(PaletteKind::Qualitative),
            "sequential" => Ok(PaletteKind::Sequential),
            "diverging" => Ok(PaletteKind::Diverging),
            other => Err(Error::spec(
                "kind",
                format!("expected qualitative, sequential or diverging, got {other:?}"),
            )),
        }
    }
}

fn default_power() -> f64 {
    1.0
}

fn default_true() -> bool {
    true
}

/// A path through HCL space.
///
/// The first color of a sequential palette sits at `(h1, c1, l1)` and the
/// last at `(h2, c2, l2)`. Diverging palettes use `h1` and `h2` for their two
/// arms and meet at a neutral of luminance `l2`. Qualitative palettes keep
/// `c1` and `l1` fixed and step the hue from `h1` towards `h2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaletteSpec {
    pub kind: PaletteKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub h1: f64,
    #[serde(default)]
    pub h2: Option<f64>,
    pub c1: f64,
    #[serde(default)]
    pub c2: Option<f64>,
    #[serde(default)]
    pub cmax: Option<f64>,
    pub l1: f64,
    #[serde(default)]
    pub l2: Option<f64>,
    #[serde(default = "default_power")]
    pub p1: f64,
    #[serde(default)]
    pub p2: Option<f64>,
    #[serde(default)]
    pub reverse: bool,
    #[serde(default = "default_true")]
    pub fixup: bool,
}

impl PaletteSpec {
    /// A spec with only the required parameters set; every optional one is
    /// absent, `p1 = 1`, `fixup` on.
    pub fn new(kind: PaletteKind, h1: f64, c1: f64, l1: f64) -> Self {
        PaletteSpec {
            kind,
            name: None,
            h1,
            h2: None,
            c1,
            c2: None,
            cmax: None,
            l1,
            l2: None,
            p1: 1.0,
            p2: None,
            reverse: false,
            fixup: true,
        }
    }

    /// Sequential spec from `[h1, h2]`, `[c1, c2]`, `[l1, l2]`, `[p1, p2]`.
    pub fn sequential(h: [f64; 2], c: [f64; 2], l: [f64; 2], power: [f64; 2]) -> Self {
        PaletteSpec {
            h2: Some(h[1]),
            c2: Some(c[1]),
            l2: Some(l[1]),
            p1: power[0],
            p2: Some(power[1]),
            ..PaletteSpec::new(PaletteKind::Sequential, h[0], c[0], l[0])
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("custom")
    }

    pub fn h2_or_default(&self) -> f64 {
        self.h2.unwrap_or(self.h1)
    }

    /// End chroma; diverging palettes always end on the neutral.
    pub fn c2_or_default(&self) -> f64 {
        match self.kind {
            PaletteKind::Diverging => 0.0,
            _ => self.c2.unwrap_or(0.0),
        }
    }

    pub fn l2_or_default(&self) -> f64 {
        self.l2.unwrap_or(self.l1)
    }

    pub fn p2_or_default(&self) -> f64 {
        self.p2.unwrap_or(self.p1)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = |field: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::spec(field, format!("{v} is not a finite number")))
            }
        };
        finite("h1", self.h1)?;
        finite("c1", self.c1)?;
        finite("l1", self.l1)?;
        finite("p1", self.p1)?;
        for (field, v) in [
            ("h2", self.h2),
            ("c2", self.c2),
            ("cmax", self.cmax),
            ("l2", self.l2),
            ("p2", self.p2),
        ] {
            if let Some(v) = v {
                finite(field, v)?;
            }
        }

        for (field, v) in [("l1", Some(self.l1)), ("l2", self.l2)] {
            if let Some(v) = v {
                if !(0.0..=100.0).contains(&v) {
                    return Err(Error::spec(field, format!("{v} is outside [0, 100]")));
                }
            }
        }
        for (field, v) in [("c1", Some(self.c1)), ("c2", self.c2), ("cmax", self.cmax)] {
            if let Some(v) = v {
                if v < 0.0 {
                    return Err(Error::spec(field, format!("{v} is negative")));
                }
            }
        }
        for (field, v) in [("p1", Some(self.p1)), ("p2", self.p2)] {
            if let Some(v) = v {
                if v <= 0.0 {
                    return Err(Error::spec(field, format!("{v} must be positive")));
                }
            }
        }
        if let Some(cmax) = self.cmax {
            let ends = self.c1.max(self.c2_or_default());
            if cmax < ends {
                return Err(Error::spec(
                    "cmax",
                    format!("{cmax} is below the end-point chroma {ends}"),
                ));
            }
        }
        Ok(())
    }

    pub fn apply(&self, overrides: &SpecOverrides) -> PaletteSpec {
        let mut spec = self.clone();
        let o = overrides;
        if let Some(v) = o.h1 {
            spec.h1 = v;
        }
        if let Some(v) = o.c1 {
            spec.c1 = v;
        }
        if let Some(v) = o.l1 {
            spec.l1 = v;
        }
        if let Some(v) = o.p1 {
            spec.p1 = v;
        }
        spec.h2 = o.h2.or(spec.h2);
        spec.c2 = o.c2.or(spec.c2);
        spec.cmax = o.cmax.or(spec.cmax);
        spec.l2 = o.l2.or(spec.l2);
        spec.p2 = o.p2.or(spec.p2);
        spec
    }

    /// Settings listing with keys in a fixed order:
    /// name, kind, h1, h2, c1, c2, cmax, l1, l2, p1, p2, reverse, fixup.
    pub fn describe(&self) -> String {
        let opt = |v: Option<f64>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
        let mut out = String::new();
        let _ = writeln!(out, "name: {}", self.name.as_deref().unwrap_or("none"));
        let _ = writeln!(out, "kind: {}", self.kind);
        let _ = writeln!(out, "h1: {}", self.h1);
        let _ = writeln!(out, "h2: {}", opt(self.h2));
        let _ = writeln!(out, "c1: {}", self.c1);
        let _ = writeln!(out, "c2: {}", opt(self.c2));
        let _ = writeln!(out, "cmax: {}", opt(self.cmax));
        let _ = writeln!(out, "l1: {}", self.l1);
        let _ = writeln!(out, "l2: {}", opt(self.l2));
        let _ = writeln!(out, "p1: {}", self.p1);
        let _ = writeln!(out, "p2: {}", opt(self.p2));
        let _ = writeln!(out, "reverse: {}", self.reverse);
        let _ = writeln!(out, "fixup: {}", self.fixup);
        out
    }
}

/// Scalar overrides applied on top of a stored spec.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SpecOverrides {
    pub h1: Option<f64>,
    pub h2: Option<f64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub cmax: Option<f64>,
    pub l1: Option<f64>,
    pub l2: Option<f64>,
    pub p1: Option<f64>,
    pub p2: Option<f64>,
}

impl SpecOverrides {
    pub const KEYS: [&'static str; 9] = ["h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2"];

    pub fn is_empty(&self) -> bool {
        *self == SpecOverrides::default()
    }

    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        let slot = match key {
            "h1" => &mut self.h1,
            "h2" => &mut self.h2,
            "c1" => &mut self.c1,
            "c2" => &mut self.c2,
            "cmax" => &mut self.cmax,
            "l1" => &mut self.l1,
            "l2" => &mut self.l2,
            "p1" => &mut self.p1,
            "p2" => &mut self.p2,
            other => {
                return Err(Error::spec(
                    other,
                    format!(
                        "unknown parameter; expected one of {}",
                        Self::KEYS.join(", ")
                    ),
                ))
            }
        };
        *slot = Some(value);
        Ok(())
    }

    /// Parses one `key=value` assignment.
    pub fn set_assignment(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment.split_once('=').ok_or_else(|| {
            Error::InvalidInput(format!(
                "override {assignment:?} is not of the form key=value"
            ))
        })?;
        let key = key.trim();
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::spec(key, format!("{:?} is not a number", value.trim())))?;
        self.set(key, value)
    }
}

/// Ordered hex colors with a label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Palette {
    pub label: String,
    pub colors: Vec<HexCode>,
}

impl Palette {
    pub fn new(label: impl Into<String>, colors: Vec<HexCode>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::InvalidCount(0));
        }
        Ok(Palette {
            label: label.into(),
            colors,
        })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn reversed(mut self) -> Self {
        self.colors.reverse();
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn viridis() -> PaletteSpec {
        PaletteSpec::sequential([300.0, 75.0], [40.0, 95.0], [15.0, 90.0], [1.0, 1.1])
            .with_name("Viridis")
    }

    #[test]
    fn describe_lists_parameters() {
        let text = viridis().describe();
        assert!(text.contains("h1: 300\n"), "{text}");
        assert!(text.contains("p2: 1.1\n"), "{text}");
        assert!(text.contains("cmax: none\n"), "{text}");
        assert_eq!(text, viridis().describe());
        let keys: Vec<&str> = text.lines().map(|l| l.split(':').next().unwrap()).collect();
        assert_eq!(
            keys,
            [
                "name", "kind", "h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2", "reverse",
                "fixup"
            ]
        );
    }

    #[test]
    fn validation_rejects_low_cmax() {
        let mut spec = viridis();
        spec.cmax = Some(10.0);
        let err = spec.validate().unwrap_err();
        assert_eq!(err.field(), Some("cmax"));
        spec.cmax = Some(95.0);
        spec.validate().unwrap();
    }

    #[test]
    fn validation_ranges() {
        let mut spec = viridis();
        spec.l2 = Some(101.0);
        assert_eq!(spec.validate().unwrap_err().field(), Some("l2"));
        let mut spec = viridis();
        spec.c1 = -1.0;
        assert_eq!(spec.validate().unwrap_err().field(), Some("c1"));
        let mut spec = viridis();
        spec.p2 = Some(0.0);
        assert_eq!(spec.validate().unwrap_err().field(), Some("p2"));
        let mut spec = viridis();
        spec.h1 = f64::NAN;
        assert_eq!(spec.validate().unwrap_err().field(), Some("h1"));
    }

    #[test]
    fn overrides_replace_scalars_only() {
        let mut o = SpecOverrides::default();
        o.set_assignment("cmax=90").unwrap();
        o.set_assignment(" c2 = 20 ").unwrap();
        let spec = viridis().apply(&o);
        assert_eq!(spec.cmax, Some(90.0));
        assert_eq!(spec.c2, Some(20.0));
        assert_eq!(spec.h1, 300.0);
        assert!(o.set_assignment("hue=3").is_err());
        assert!(o.set_assignment("h1").is_err());
        assert!(o.set_assignment("h1=abc").is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!(
            " Sequential".parse::<PaletteKind>().unwrap(),
            PaletteKind::Sequential
        );
        assert!("rainbow".parse::<PaletteKind>().is_err());
    }
}
