//! Operations on lists of hex colors: deficiency simulation, desaturation,
//! lightening/darkening and WCAG contrast.

use crate::color::{format_hex, mul3, parse_hex, Hcl, HexCode, LinearRgb, Srgb};
use crate::cvd::{cvd_matrix, CvdKind};
use crate::error::{Error, Result};

fn parse_all<S: AsRef<str>>(colors: &[S]) -> Result<Vec<Srgb>> {
    colors
        .iter()
        .enumerate()
        .map(|(i, c)| parse_hex(c.as_ref()).map_err(|e| e.at(i)))
        .collect()
}

fn from_hcl(hcl: Hcl) -> Result<HexCode> {
    format_hex(hcl.to_srgb().clamped())
}

fn check_amount(amount: f64, lo: f64) -> Result<()> {
    if (lo..=1.0).contains(&amount) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "amount {amount} is outside [{lo}, 1]"
        )))
    }
}

/// Applies the deficiency matrix in linear RGB and clamps the result.
pub fn simulate_cvd<S: AsRef<str>>(
    colors: &[S],
    kind: CvdKind,
    severity: f64,
) -> Result<Vec<HexCode>> {
    let m = cvd_matrix(kind, severity)?;
    parse_all(colors)?
        .into_iter()
        .map(|rgb| {
            let [r, g, b] = mul3(&m, rgb.to_linear().channels());
            format_hex(LinearRgb::new(r, g, b).clamped().to_srgb().clamped())
        })
        .collect()
}

/// Scales HCL chroma by `1 - amount`.
pub fn desaturate<S: AsRef<str>>(colors: &[S], amount: f64) -> Result<Vec<HexCode>> {
    check_amount(amount, 0.0)?;
    parse_all(colors)?
        .into_iter()
        .map(|rgb| {
            let hcl = rgb.to_hcl();
            from_hcl(Hcl::new(hcl.h, hcl.c * (1.0 - amount), hcl.l))
        })
        .collect()
}

/// Positive amounts move luminance proportionally towards 100, negative
/// amounts towards 0. Hue and chroma are kept, except at `L = 100` where
/// the gamut has no chroma left.
pub fn adjust_luminance<S: AsRef<str>>(colors: &[S], amount: f64) -> Result<Vec<HexCode>> {
    check_amount(amount, -1.0)?;
    parse_all(colors)?
        .into_iter()
        .map(|rgb| from_hcl(adjust_hcl(rgb.to_hcl(), amount)))
        .collect()
}

pub(crate) fn adjust_hcl(hcl: Hcl, amount: f64) -> Hcl {
    let l = if amount >= 0.0 {
        hcl.l + amount * (100.0 - hcl.l)
    } else {
        hcl.l * (1.0 + amount)
    };
    let c = if l >= 100.0 { 0.0 } else { hcl.c };
    Hcl::new(hcl.h, c, l.clamp(0.0, 100.0))
}

/// WCAG 2.x relative luminance.
pub fn relative_luminance(color: &str) -> Result<f64> {
    let lin = parse_hex(color)?.to_linear();
    Ok(0.2126 * lin.r + 0.7152 * lin.g + 0.0722 * lin.b)
}

/// WCAG contrast ratio, in `[1, 21]`.
pub fn contrast_ratio(a: &str, b: &str) -> Result<f64> {
    let ya = relative_luminance(a).map_err(|e| e.at(0))?;
    let yb = relative_luminance(b).map_err(|e| e.at(1))?;
    let (hi, lo) = if ya >= yb { (ya, yb) } else { (yb, ya) };
    Ok((hi + 0.05) / (lo + 0.05))
}

/// HCL luminance of each color.
pub fn luminance_profile<S: AsRef<str>>(colors: &[S]) -> Result<Vec<f64>> {
    Ok(parse_all(colors)?
        .into_iter()
        .map(|rgb| rgb.to_hcl().l)
        .collect())
}

/// True when the values strictly increase or strictly decrease.
pub fn is_strictly_monotone(values: &[f64]) -> bool {
    let up = values.windows(2).all(|w| w[1] > w[0]);
    let down = values.windows(2).all(|w| w[1] < w[0]);
    up || down
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn hexes(list: &[HexCode]) -> Vec<&str> {
        list.iter().map(HexCode::as_str).collect()
    }

    fn max_step(a: &HexCode, b: &str) -> i32 {
        let b: HexCode = b.parse().unwrap();
        a.bytes()
            .iter()
            .zip(b.bytes())
            .map(|(x, y)| (*x as i32 - y as i32).abs())
            .max()
            .unwrap()
    }

    const SAMPLE: [&str; 5] = ["#4B0055", "#FF0000", "#00FF00", "#777777", "#FDE333"];

    #[test]
    fn severity_zero_is_identity() {
        for kind in CvdKind::ALL {
            let out = simulate_cvd(&SAMPLE, kind, 0.0).unwrap();
            assert_eq!(hexes(&out), SAMPLE);
        }
    }

    #[test]
    fn white_stays_white() {
        for kind in CvdKind::ALL {
            for s in [0.25, 0.5, 1.0] {
                let out = simulate_cvd(&["#FFFFFF"], kind, s).unwrap();
                assert!(max_step(&out[0], "#FFFFFF") <= 1, "{kind} {s}: {}", out[0]);
            }
        }
    }

    #[test]
    fn parse_errors_carry_index() {
        let err = simulate_cvd(&["#FFFFFF", "#GG0000"], CvdKind::Deutan, 1.0).unwrap_err();
        assert!(matches!(err, Error::AtIndex { index: 1, .. }), "{err:?}");
        assert!(simulate_cvd(&["#FFFFFF"], CvdKind::Deutan, 2.0).is_err());
    }

    #[test]
    fn desaturate_examples() {
        let same = desaturate(&SAMPLE, 0.0).unwrap();
        for (out, inp) in same.iter().zip(SAMPLE) {
            assert!(max_step(out, inp) <= 1);
        }
        let gray = desaturate(&["#FF0000"], 1.0).unwrap();
        let [r, g, b] = gray[0].bytes();
        assert!(r.max(g).max(b) - r.min(g).min(b) <= 1, "{}", gray[0]);

        let once = desaturate(&SAMPLE, 1.0).unwrap();
        let twice = desaturate(&once, 1.0).unwrap();
        assert_eq!(once, twice);
        assert!(desaturate(&SAMPLE, 1.5).is_err());
    }

    #[test]
    fn adjust_luminance_examples() {
        let same = adjust_luminance(&SAMPLE, 0.0).unwrap();
        for (out, inp) in same.iter().zip(SAMPLE) {
            assert!(max_step(out, inp) <= 1);
        }
        let white = adjust_luminance(&SAMPLE, 1.0).unwrap();
        assert!(white.iter().all(|c| c.as_str() == "#FFFFFF"), "{white:?}");
        let black = adjust_luminance(&SAMPLE, -1.0).unwrap();
        assert!(black.iter().all(|c| c.as_str() == "#000000"), "{black:?}");
        assert!(adjust_luminance(&SAMPLE, -1.5).is_err());
    }

    #[test]
    fn adjust_keeps_hue() {
        let hcl = Hcl::new(123.0, 30.0, 50.0);
        for amount in [-0.9, -0.3, 0.2, 0.7] {
            let out = adjust_hcl(hcl, amount);
            assert_eq!(out.h, hcl.h);
            assert_eq!(out.c, hcl.c);
        }
    }

    #[test]
    fn luminance_examples() {
        assert_abs_diff_eq!(relative_luminance("#FFFFFF").unwrap(), 1.0, epsilon = 1e-12);
        assert_eq!(relative_luminance("#000000").unwrap(), 0.0);
        assert_abs_diff_eq!(
            relative_luminance("#FF0000").unwrap(),
            0.2126,
            epsilon = 1e-4
        );
    }

    #[test]
    fn contrast_examples() {
        assert_abs_diff_eq!(
            contrast_ratio("#FFFFFF", "#000000").unwrap(),
            21.0,
            epsilon = 1e-9
        );
        assert_eq!(contrast_ratio("#4B0055", "#4B0055").unwrap(), 1.0);
        // 0x77 linearizes to ((119/255 + 0.055) / 1.055)^2.4
        let y = ((119.0 / 255.0 + 0.055) / 1.055f64).powf(2.4);
        let expected = 1.05 / (y + 0.05);
        let got = contrast_ratio("#777777", "#FFFFFF").unwrap();
        assert_abs_diff_eq!(got, expected, epsilon = 1e-9);
        assert_abs_diff_eq!(got, 4.48, epsilon = 0.02);
        assert!(contrast_ratio("#FFFFFF", "nope").is_err());
    }

    #[test]
    fn monotone_helper() {
        assert!(is_strictly_monotone(&[1.0, 2.0, 3.0]));
        assert!(is_strictly_monotone(&[3.0, 2.0, 1.0]));
        assert!(!is_strictly_monotone(&[1.0, 3.0, 2.0]));
        assert!(!is_strictly_monotone(&[1.0, 1.0]));
        assert!(is_strictly_monotone(&[5.0]));
    }
}
