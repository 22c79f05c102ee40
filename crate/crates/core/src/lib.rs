//! Perceptual color toolkit: HCL palettes, color-vision-deficiency
//! simulation, contrast checks and SVG diagnostics.
//!
//! ```
//! use colortool_core::palette::{sample, NamedPaletteRegistry, SpecOverrides};
//!
//! let registry = NamedPaletteRegistry::builtin();
//! let viridis = registry.get("viridis", &SpecOverrides::default()).unwrap();
//! let palette = sample(&viridis, 7).unwrap();
//! assert_eq!(palette.colors[0].as_str(), "#4B0055");
//! ```

pub mod color;
pub mod cvd;
pub mod error;
pub mod ops;
pub mod palette;
pub mod viz;

pub use color::{Hcl, HexCode, Hsv, LinearRgb, Luv, Srgb, Xyz};
pub use cvd::CvdKind;
pub use error::{Error, Result};
pub use palette::{Palette, PaletteKind, PaletteSpec};
