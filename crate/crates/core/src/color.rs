//! Color coordinates and the conversions between them.
//!
//! The conversion chain is
//!
//! ```text
//! hex <-> sRGB <-> linear RGB <-> XYZ (D65) <-> CIELUV <-> HCL
//!          ^
//!          +----> HSV
//! ```
//!
//! XYZ is scaled so that the reference white has `y = 100`. All conversions
//! are plain functions on `Copy` values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Gamma-encoded sRGB, channels nominally in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Srgb {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

/// Linear-light sRGB primaries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearRgb {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

/// CIE XYZ tristimulus values, white has `y = 100`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Xyz {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// CIE 1976 L*u*v*.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Luv {
    pub l: f64,
    pub u: f64,
    pub v: f64,
}

/// Polar CIELUV: hue in degrees, chroma, luminance.
///
/// Hue is stored as given and only interpreted modulo 360.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hcl {
    pub h: f64,
    pub c: f64,
    pub l: f64,
}

/// Hexcone HSV, hue in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hsv {
    pub h: f64,
    pub s: f64,
    pub v: f64,
}

/// Reference white tristimulus values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhitePoint {
    pub xn: f64,
    pub yn: f64,
    pub zn: f64,
}

/// D65, 2° observer.
pub const D65: WhitePoint = WhitePoint {
    xn: 95.047,
    yn: 100.0,
    zn: 108.883,
};

/// Published sRGB/D65 matrix. Its middle row sums to 1.0000001, so linear
/// white would sit slightly off the D65 chromaticity.
const RGB_TO_XYZ_PUBLISHED: [[f64; 3]; 3] = [
    [0.4124564, 0.3575761, 0.1804375],
    [0.2126729, 0.7151522, 0.0721750],
    [0.0193339, 0.1191920, 0.9503041],
];

/// Linear sRGB to XYZ (D65), unit scale. Rows one and three are scaled by
/// the middle row's sum so that linear white is exactly proportional to
/// [`D65`] and grays land on the achromatic axis.
pub const RGB_TO_XYZ: [[f64; 3]; 3] = white_balanced(RGB_TO_XYZ_PUBLISHED);

const fn white_balanced(m: [[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let s = m[1][0] + m[1][1] + m[1][2];
    [
        [m[0][0] * s, m[0][1] * s, m[0][2] * s],
        m[1],
        [m[2][0] * s, m[2][1] * s, m[2][2] * s],
    ]
}

/// Exact inverse of [`RGB_TO_XYZ`].
pub const XYZ_TO_RGB: [[f64; 3]; 3] = invert3(RGB_TO_XYZ);

const fn invert3(m: [[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let a = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    let b = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    let c = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    let det = m[0][0] * a + m[0][1] * b + m[0][2] * c;
    [
        [
            a / det,
            (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det,
            (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det,
        ],
        [
            b / det,
            (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det,
            (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det,
        ],
        [
            c / det,
            (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det,
            (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det,
        ],
    ]
}

pub(crate) fn mul3(m: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

// (6/29)^3 and (29/3)^3
const LUV_EPSILON: f64 = 216.0 / 24389.0;
const LUV_KAPPA: f64 = 24389.0 / 27.0;

/// Slack allowed when deciding whether a channel is in `[0, 1]`.
pub const GAMUT_TOLERANCE: f64 = 1e-9;

fn in_unit(x: f64) -> bool {
    (-GAMUT_TOLERANCE..=1.0 + GAMUT_TOLERANCE).contains(&x)
}

fn check_finite(what: &str, v: [f64; 3]) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidColor(format!(
            "{what} has a non-finite channel: {v:?}"
        )))
    }
}

fn decode_channel(u: f64) -> f64 {
    let a = u.abs();
    let lin = if a <= 0.04045 {
        a / 12.92
    } else {
        ((a + 0.055) / 1.055).powf(2.4)
    };
    lin.copysign(u)
}

fn encode_channel(u: f64) -> f64 {
    let a = u.abs();
    let enc = if a <= 0.04045 / 12.92 {
        a * 12.92
    } else {
        1.055 * a.powf(1.0 / 2.4) - 0.055
    };
    enc.copysign(u)
}

impl Srgb {
    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        Srgb { r, g, b }
    }

    pub fn channels(self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }

    pub fn is_finite(self) -> bool {
        self.channels().iter().all(|c| c.is_finite())
    }

    pub fn in_gamut(self) -> bool {
        self.channels().into_iter().all(in_unit)
    }

    pub fn to_linear(self) -> LinearRgb {
        LinearRgb {
            r: decode_channel(self.r),
            g: decode_channel(self.g),
            b: decode_channel(self.b),
        }
    }

    /// Per-channel clamp into `[0, 1]`.
    pub fn clamped(self) -> Srgb {
        Srgb {
            r: self.r.clamp(0.0, 1.0),
            g: self.g.clamp(0.0, 1.0),
            b: self.b.clamp(0.0, 1.0),
        }
    }

    pub fn to_hsv(self) -> Hsv {
        let max = self.r.max(self.g).max(self.b);
        let min = self.r.min(self.g).min(self.b);
        let delta = max - min;
        let s = if max > 0.0 { delta / max } else { 0.0 };
        let h = if delta == 0.0 {
            0.0
        } else if max == self.r {
            60.0 * ((self.g - self.b) / delta).rem_euclid(6.0)
        } else if max == self.g {
            60.0 * ((self.b - self.r) / delta + 2.0)
        } else {
            60.0 * ((self.r - self.g) / delta + 4.0)
        };
        Hsv { h, s, v: max }
    }

    pub fn to_hcl(self) -> Hcl {
        self.to_linear().to_xyz().to_luv(D65).to_hcl()
    }

    pub fn to_hex(self) -> Result<HexCode> {
        format_hex(self)
    }
}

impl LinearRgb {
    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        LinearRgb { r, g, b }
    }

    pub fn channels(self) -> [f64; 3] {
        [self.r, self.g, self.b]
    }

    pub fn in_gamut(self) -> bool {
        self.channels().into_iter().all(in_unit)
    }

    pub fn to_srgb(self) -> Srgb {
        Srgb {
            r: encode_channel(self.r),
            g: encode_channel(self.g),
            b: encode_channel(self.b),
        }
    }

    pub fn to_xyz(self) -> Xyz {
        let [x, y, z] = mul3(&RGB_TO_XYZ, self.channels());
        Xyz {
            x: x * 100.0,
            y: y * 100.0,
            z: z * 100.0,
        }
    }

    pub fn clamped(self) -> LinearRgb {
        LinearRgb {
            r: self.r.clamp(0.0, 1.0),
            g: self.g.clamp(0.0, 1.0),
            b: self.b.clamp(0.0, 1.0),
        }
    }
}

impl Xyz {
    pub fn to_linear(self) -> LinearRgb {
        let [r, g, b] = mul3(
            &XYZ_TO_RGB,
            [self.x / 100.0, self.y / 100.0, self.z / 100.0],
        );
        LinearRgb { r, g, b }
    }

    pub fn to_luv(self, w: WhitePoint) -> Luv {
        let denom = self.x + 15.0 * self.y + 3.0 * self.z;
        if self.y <= 0.0 || denom == 0.0 {
            return Luv {
                l: 0.0,
                u: 0.0,
                v: 0.0,
            };
        }
        let yr = self.y / w.yn;
        let l = if yr > LUV_EPSILON {
            116.0 * yr.cbrt() - 16.0
        } else {
            LUV_KAPPA * yr
        };
        let wdenom = w.xn + 15.0 * w.yn + 3.0 * w.zn;
        let (un, vn) = (4.0 * w.xn / wdenom, 9.0 * w.yn / wdenom);
        let (up, vp) = (4.0 * self.x / denom, 9.0 * self.y / denom);
        Luv {
            l,
            u: 13.0 * l * (up - un),
            v: 13.0 * l * (vp - vn),
        }
    }
}

impl Luv {
    pub fn to_xyz(self, w: WhitePoint) -> Xyz {
        if self.l <= 0.0 {
            return Xyz {
                x: 0.0,
                y: 0.0,
                z: 0.0,
            };
        }
        let y = if self.l > LUV_KAPPA * LUV_EPSILON {
            w.yn * ((self.l + 16.0) / 116.0).powi(3)
        } else {
            w.yn * self.l / LUV_KAPPA
        };
        let wdenom = w.xn + 15.0 * w.yn + 3.0 * w.zn;
        let (un, vn) = (4.0 * w.xn / wdenom, 9.0 * w.yn / wdenom);
        let up = self.u / (13.0 * self.l) + un;
        let vp = self.v / (13.0 * self.l) + vn;
        if vp == 0.0 {
            return Xyz { x: 0.0, y, z: 0.0 };
        }
        Xyz {
            x: y * 9.0 * up / (4.0 * vp),
            y,
            z: y * (12.0 - 3.0 * up - 20.0 * vp) / (4.0 * vp),
        }
    }

    pub fn to_hcl(self) -> Hcl {
        let c = self.u.hypot(self.v);
        let h = if c <= 1e-9 {
            0.0
        } else {
            let deg = self.v.atan2(self.u).to_degrees();
            let deg = if deg < 0.0 { deg + 360.0 } else { deg };
            if deg >= 360.0 {
                0.0
            } else {
                deg
            }
        };
        Hcl { h, c, l: self.l }
    }
}

impl Hcl {
    pub const fn new(h: f64, c: f64, l: f64) -> Self {
        Hcl { h, c, l }
    }

    pub fn to_luv(self) -> Luv {
        let rad = self.h.rem_euclid(360.0).to_radians();
        Luv {
            l: self.l,
            u: self.c * rad.cos(),
            v: self.c * rad.sin(),
        }
    }

    /// HCL to gamma-encoded sRGB without any gamut handling.
    pub fn to_srgb(self) -> Srgb {
        self.to_linear().to_srgb()
    }

    pub fn to_linear(self) -> LinearRgb {
        self.to_luv().to_xyz(D65).to_linear()
    }
}

impl Hsv {
    pub const fn new(h: f64, s: f64, v: f64) -> Self {
        Hsv { h, s, v }
    }

    pub fn to_srgb(self) -> Srgb {
        let h = self.h.rem_euclid(360.0) / 60.0;
        let c = self.v * self.s;
        let x = c * (1.0 - ((h % 2.0) - 1.0).abs());
        let m = self.v - c;
        let (r, g, b) = match h as u32 {
            0 => (c, x, 0.0),
            1 => (x, c, 0.0),
            2 => (0.0, c, x),
            3 => (0.0, x, c),
            4 => (x, 0.0, c),
            _ => (c, 0.0, x),
        };
        Srgb {
            r: r + m,
            g: g + m,
            b: b + m,
        }
    }
}

/// `#RRGGBB` with uppercase digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexCode(String);

impl HexCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_srgb(&self) -> Srgb {
        let byte = |i: usize| u8::from_str_radix(&self.0[i..i + 2], 16).unwrap_or(0);
        Srgb {
            r: f64::from(byte(1)) / 255.0,
            g: f64::from(byte(3)) / 255.0,
            b: f64::from(byte(5)) / 255.0,
        }
    }

    /// The three 8-bit channel values.
    pub fn bytes(&self) -> [u8; 3] {
        let byte = |i: usize| u8::from_str_radix(&self.0[i..i + 2], 16).unwrap_or(0);
        [byte(1), byte(3), byte(5)]
    }

    pub fn to_hcl(&self) -> Hcl {
        self.to_srgb().to_hcl()
    }
}

impl fmt::Display for HexCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for HexCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hex(s).and_then(format_hex)
    }
}

impl AsRef<str> for HexCode {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl Serialize for HexCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for HexCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Checked entry points. The methods above assume finite input; these validate.

pub fn srgb_to_linear(c: Srgb) -> Result<LinearRgb> {
    check_finite("sRGB color", c.channels())?;
    Ok(c.to_linear())
}

pub fn linear_to_srgb(c: LinearRgb) -> Result<Srgb> {
    check_finite("linear RGB color", c.channels())?;
    Ok(c.to_srgb())
}

pub fn linear_to_xyz(c: LinearRgb) -> Result<Xyz> {
    check_finite("linear RGB color", c.channels())?;
    Ok(c.to_xyz())
}

pub fn xyz_to_linear(c: Xyz) -> Result<LinearRgb> {
    check_finite("XYZ color", [c.x, c.y, c.z])?;
    Ok(c.to_linear())
}

pub fn xyz_to_luv(c: Xyz, w: WhitePoint) -> Luv {
    c.to_luv(w)
}

pub fn luv_to_xyz(c: Luv, w: WhitePoint) -> Xyz {
    c.to_xyz(w)
}

pub fn luv_to_hcl(c: Luv) -> Hcl {
    c.to_hcl()
}

pub fn hcl_to_luv(c: Hcl) -> Luv {
    c.to_luv()
}

pub fn hsv_to_srgb(c: Hsv) -> Srgb {
    c.to_srgb()
}

pub fn srgb_to_hsv(c: Srgb) -> Hsv {
    c.to_hsv()
}

pub fn fixup_gamut(c: Srgb) -> Srgb {
    c.clamped()
}

/// Parses `#RRGGBB`, case-insensitive.
pub fn parse_hex(text: &str) -> Result<Srgb> {
    let err = |position: usize, reason: &str| Error::HexParse {
        text: text.to_string(),
        position,
        reason: reason.to_string(),
    };
    if !text.starts_with('#') {
        return Err(err(0, "expected leading '#'"));
    }
    let chars: Vec<char> = text.chars().collect();
    if chars.len() != 7 {
        return Err(err(
            chars.len().min(7),
            &format!("expected 7 characters, found {}", chars.len()),
        ));
    }
    if let Some((pos, ch)) = chars
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, ch)| !ch.is_ascii_hexdigit())
    {
        return Err(err(pos, &format!("{ch:?} is not a hex digit")));
    }
    let byte = |i: usize| u8::from_str_radix(&text[i..i + 2], 16).map(f64::from);
    // all digits were checked above
    let (r, g, b) = (byte(1).unwrap(), byte(3).unwrap(), byte(5).unwrap());
    Ok(Srgb::new(r / 255.0, g / 255.0, b / 255.0))
}

/// Formats an in-gamut color as `#RRGGBB`, rounding half to even.
pub fn format_hex(c: Srgb) -> Result<HexCode> {
    if !c.is_finite() {
        return Err(Error::InvalidColor(format!("non-finite channel in {c:?}")));
    }
    if !c.in_gamut() {
        return Err(Error::InvalidColor(format!(
            "({:.6}, {:.6}, {:.6}) is outside the sRGB gamut",
            c.r, c.g, c.b
        )));
    }
    let to_byte = |x: f64| (x.clamp(0.0, 1.0) * 255.0).round_ties_even() as u8;
    Ok(HexCode(format!(
        "#{:02X}{:02X}{:02X}",
        to_byte(c.r),
        to_byte(c.g),
        to_byte(c.b)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn transfer_function_fixed_points() {
        let black = srgb_to_linear(Srgb::new(0.0, 0.0, 0.0)).unwrap();
        assert_eq!(black.channels(), [0.0; 3]);
        let white = srgb_to_linear(Srgb::new(1.0, 1.0, 1.0)).unwrap();
        for ch in white.channels() {
            assert_abs_diff_eq!(ch, 1.0, epsilon = 1e-15);
        }
        let back = linear_to_srgb(LinearRgb::new(1.0, 1.0, 1.0)).unwrap();
        for ch in back.channels() {
            assert_abs_diff_eq!(ch, 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn transfer_function_midgray() {
        // ((0.5 + 0.055) / 1.055)^2.4
        let expected = (0.555f64 / 1.055).powf(2.4);
        assert_abs_diff_eq!(expected, 0.21404, epsilon = 1e-5);
        let lin = srgb_to_linear(Srgb::new(0.5, 0.5, 0.5)).unwrap();
        assert_abs_diff_eq!(lin.r, 0.21404, epsilon = 1e-5);
        let back = linear_to_srgb(LinearRgb::new(0.21404, 0.21404, 0.21404)).unwrap();
        assert_abs_diff_eq!(back.g, 0.5, epsilon = 1e-5);
    }

    #[test]
    fn transfer_function_sign_symmetric() {
        let lin = Srgb::new(-0.5, 1.2, -0.01).to_linear();
        assert_abs_diff_eq!(lin.r, -Srgb::new(0.5, 0.0, 0.0).to_linear().r);
        assert!(lin.g > 1.0);
        assert_abs_diff_eq!(lin.b, -0.01 / 12.92);
    }

    #[test]
    fn non_finite_is_rejected() {
        assert!(matches!(
            srgb_to_linear(Srgb::new(f64::NAN, 0.0, 0.0)),
            Err(Error::InvalidColor(_))
        ));
        assert!(linear_to_srgb(LinearRgb::new(0.0, f64::INFINITY, 0.0)).is_err());
        assert!(linear_to_xyz(LinearRgb::new(0.0, 0.0, f64::NAN)).is_err());
        assert!(xyz_to_linear(Xyz {
            x: f64::NAN,
            y: 0.0,
            z: 0.0
        })
        .is_err());
    }

    #[test]
    fn linear_white_is_d65() {
        let w = linear_to_xyz(LinearRgb::new(1.0, 1.0, 1.0)).unwrap();
        assert_abs_diff_eq!(w.x, 95.047, epsilon = 0.01);
        assert_abs_diff_eq!(w.y, 100.0, epsilon = 0.01);
        assert_abs_diff_eq!(w.z, 108.883, epsilon = 0.01);
        let k = linear_to_xyz(LinearRgb::new(0.0, 0.0, 0.0)).unwrap();
        assert_eq!([k.x, k.y, k.z], [0.0; 3]);
    }

    #[test]
    fn middle_row_is_published() {
        assert_eq!(RGB_TO_XYZ[1], [0.2126729, 0.7151522, 0.0721750]);
        for i in [0, 2] {
            for j in 0..3 {
                assert!((RGB_TO_XYZ[i][j] - RGB_TO_XYZ_PUBLISHED[i][j]).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn grays_are_achromatic() {
        for k in 0..=255u8 {
            let v = f64::from(k) / 255.0;
            let hcl = Srgb::new(v, v, v).to_hcl();
            assert!(hcl.c < 1e-6, "gray {k}: {hcl:?}");
        }
    }

    fn mul_matrices(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
        let cols = [0, 1, 2].map(|j| [b[0][j], b[1][j], b[2][j]]);
        a.map(|row| cols.map(|col| row.iter().zip(col).map(|(x, y)| x * y).sum()))
    }

    #[test]
    fn inverse_matrix_is_inverse() {
        let product = mul_matrices(&RGB_TO_XYZ, &XYZ_TO_RGB);
        for (i, row) in product.iter().enumerate() {
            for (j, dot) in row.iter().enumerate() {
                let id = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(*dot, id, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn white_point_maps_to_l100() {
        let luv = xyz_to_luv(
            Xyz {
                x: D65.xn,
                y: D65.yn,
                z: D65.zn,
            },
            D65,
        );
        assert_abs_diff_eq!(luv.l, 100.0, epsilon = 1e-9);
        assert_abs_diff_eq!(luv.u, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(luv.v, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn black_and_degenerate_xyz() {
        let zero = xyz_to_luv(
            Xyz {
                x: 0.0,
                y: 0.0,
                z: 0.0,
            },
            D65,
        );
        assert_eq!((zero.l, zero.u, zero.v), (0.0, 0.0, 0.0));
        let back = luv_to_xyz(
            Luv {
                l: 0.0,
                u: 30.0,
                v: -20.0,
            },
            D65,
        );
        assert_eq!((back.x, back.y, back.z), (0.0, 0.0, 0.0));
    }

    #[test]
    fn pure_red_in_luv() {
        // Oracle: CIE formulas on the sRGB red column, X and Z rows scaled by
        // the luminance row sum.
        let s = 0.2126729 + 0.7151522 + 0.0721750;
        let (x, y, z) = (41.24564 * s, 21.26729, 1.93339 * s);
        let l = 116.0 * (y / 100.0f64).cbrt() - 16.0;
        let dn = 95.047 + 1500.0 + 3.0 * 108.883;
        let d = x + 15.0 * y + 3.0 * z;
        let u = 13.0 * l * (4.0 * x / d - 4.0 * 95.047 / dn);
        let v = 13.0 * l * (9.0 * y / d - 900.0 / dn);
        assert_abs_diff_eq!(l, 53.24, epsilon = 0.05);
        assert_abs_diff_eq!(u, 175.05, epsilon = 0.05);
        assert_abs_diff_eq!(v, 37.75, epsilon = 0.05);

        let luv = Srgb::new(1.0, 0.0, 0.0).to_linear().to_xyz().to_luv(D65);
        assert_abs_diff_eq!(luv.l, l, epsilon = 1e-9);
        assert_abs_diff_eq!(luv.u, u, epsilon = 1e-9);
        assert_abs_diff_eq!(luv.v, v, epsilon = 1e-9);
    }

    #[test]
    fn polar_axes() {
        let h = luv_to_hcl(Luv {
            l: 50.0,
            u: 10.0,
            v: 0.0,
        });
        assert_eq!((h.h, h.c, h.l), (0.0, 10.0, 50.0));
        let h = luv_to_hcl(Luv {
            l: 50.0,
            u: 0.0,
            v: 10.0,
        });
        assert_abs_diff_eq!(h.h, 90.0, epsilon = 1e-12);
        assert_eq!((h.c, h.l), (10.0, 50.0));
        let h = luv_to_hcl(Luv {
            l: 50.0,
            u: 0.0,
            v: 0.0,
        });
        assert_eq!((h.h, h.c, h.l), (0.0, 0.0, 50.0));
        let h = luv_to_hcl(Luv {
            l: 50.0,
            u: 0.0,
            v: -10.0,
        });
        assert_abs_diff_eq!(h.h, 270.0, epsilon = 1e-12);
    }

    #[test]
    fn hsv_examples() {
        assert_eq!(
            hsv_to_srgb(Hsv::new(0.0, 1.0, 1.0)),
            Srgb::new(1.0, 0.0, 0.0)
        );
        assert_eq!(
            hsv_to_srgb(Hsv::new(240.0, 1.0, 1.0)),
            Srgb::new(0.0, 0.0, 1.0)
        );
        let y = hsv_to_srgb(Hsv::new(60.0, 0.5, 1.0));
        assert_abs_diff_eq!(y.r, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(y.g, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(y.b, 0.5, epsilon = 1e-12);
        let back = srgb_to_hsv(y);
        assert_abs_diff_eq!(back.h, 60.0, epsilon = 1e-12);
        assert_abs_diff_eq!(back.s, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(back.v, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn hex_examples() {
        assert_eq!(parse_hex("#FF0000").unwrap(), Srgb::new(1.0, 0.0, 0.0));
        assert_eq!(parse_hex("#ff0000").unwrap(), Srgb::new(1.0, 0.0, 0.0));
        assert_eq!(
            format_hex(Srgb::new(1.0, 1.0, 1.0)).unwrap().as_str(),
            "#FFFFFF"
        );
        let rt = format_hex(parse_hex("#4B0055").unwrap()).unwrap();
        assert_eq!(rt.as_str(), "#4B0055");
        assert_eq!("#4b0055".parse::<HexCode>().unwrap().as_str(), "#4B0055");
    }

    #[test]
    fn hex_rounding_ties_to_even() {
        // 0.5 / 255 steps: 128.5 -> 128, 127.5 -> 128
        let c = Srgb::new(128.5 / 255.0, 127.5 / 255.0, 0.0);
        assert_eq!(format_hex(c).unwrap().bytes(), [128, 128, 0]);
    }

    #[test]
    fn hex_parse_errors_report_position() {
        match parse_hex("#12G456") {
            Err(Error::HexParse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_hex("#12345"), Err(Error::HexParse { .. })));
        assert!(matches!(
            parse_hex("123456"),
            Err(Error::HexParse { position: 0, .. })
        ));
        assert!(parse_hex("#1234567").is_err());
        assert!(parse_hex("#12345é").is_err());
    }

    #[test]
    fn format_rejects_out_of_gamut() {
        assert!(format_hex(Srgb::new(1.2, 0.0, 0.0)).is_err());
        assert!(format_hex(Srgb::new(f64::NAN, 0.0, 0.0)).is_err());
    }

    #[test]
    fn fixup_examples() {
        assert_eq!(
            fixup_gamut(Srgb::new(1.2, 0.5, -0.1)),
            Srgb::new(1.0, 0.5, 0.0)
        );
        let g = Srgb::new(0.3, 0.3, 0.3);
        assert_eq!(fixup_gamut(g), g);
    }

    #[test]
    fn dark_green_needs_fixup() {
        let raw = Hcl::new(120.0, 90.0, 15.0).to_srgb();
        assert!(!raw.in_gamut(), "expected out of gamut: {raw:?}");
        let fixed = fixup_gamut(raw);
        assert!(fixed.channels().iter().all(|c| (0.0..=1.0).contains(c)));
    }
}
