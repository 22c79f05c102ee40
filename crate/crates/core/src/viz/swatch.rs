use crate::error::{Error, Result};
use crate::palette::Palette;

use super::svg::{Body, Size, SvgDocument};

/// Layout metrics, in view-box units.
pub const SWATCH_WIDTH: f64 = 800.0;
pub const SWATCH_LABEL_COLUMN: f64 = 180.0;
pub const SWATCH_MARGIN: f64 = 10.0;
pub const SWATCH_TITLE_HEIGHT: f64 = 26.0;
pub const SWATCH_ROW_HEIGHT: f64 = 30.0;
pub const SWATCH_ROW_GAP: f64 = 6.0;

/// A titled group of labelled palettes.
#[derive(Debug, Clone, PartialEq)]
pub struct SwatchSet {
    pub title: String,
    pub rows: Vec<(String, Palette)>,
}

impl SwatchSet {
    pub fn new(title: impl Into<String>) -> Self {
        SwatchSet {
            title: title.into(),
            rows: Vec::new(),
        }
    }

    pub fn row(mut self, label: impl Into<String>, palette: Palette) -> Self {
        self.rows.push((label.into(), palette));
        self
    }
}

/// One band of equal-width rectangles per palette, label on the left and
/// the set title above.
pub fn swatchplot(sets: &[SwatchSet], size: Option<Size>) -> Result<SvgDocument> {
    if sets.is_empty() {
        return Err(Error::InvalidInput(
            "swatchplot needs at least one set".into(),
        ));
    }
    if let Some(set) = sets.iter().find(|s| s.rows.is_empty()) {
        return Err(Error::InvalidInput(format!(
            "swatch set {:?} has no rows",
            set.title
        )));
    }
    let band_x = SWATCH_MARGIN + SWATCH_LABEL_COLUMN;
    let band_w = SWATCH_WIDTH - band_x - SWATCH_MARGIN;

    let mut body = Body::default();
    let mut y = SWATCH_MARGIN;
    for set in sets {
        body.text(SWATCH_MARGIN, y + 18.0, 16.0, "start", &set.title);
        y += SWATCH_TITLE_HEIGHT;
        for (label, palette) in &set.rows {
            body.text(
                band_x - 8.0,
                y + SWATCH_ROW_HEIGHT / 2.0 + 5.0,
                13.0,
                "end",
                label,
            );
            let w = band_w / palette.len() as f64;
            for (k, color) in palette.colors.iter().enumerate() {
                body.rect(
                    band_x + k as f64 * w,
                    y,
                    w,
                    SWATCH_ROW_HEIGHT,
                    color.as_str(),
                );
            }
            y += SWATCH_ROW_HEIGHT + SWATCH_ROW_GAP;
        }
    }
    let height = y + SWATCH_MARGIN - SWATCH_ROW_GAP;
    Ok(SvgDocument::new(SWATCH_WIDTH, height, body.finish(), size))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn palette(colors: &[&str]) -> Palette {
        Palette::new("p", colors.iter().map(|c| c.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn one_row_three_rects() {
        let set = SwatchSet::new("t").row("a", palette(&["#FF0000", "#00FF00", "#0000FF"]));
        let svg = swatchplot(&[set], None).unwrap().to_string();
        assert_eq!(svg.matches("<rect").count(), 3);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(swatchplot(&[], None).is_err());
        assert!(swatchplot(&[SwatchSet::new("empty")], None).is_err());
    }

    #[test]
    fn rows_may_differ_in_length() {
        let set = SwatchSet::new("t")
            .row("a", palette(&["#FF0000"]))
            .row("b", palette(&["#FF0000", "#00FF00"]));
        let svg = swatchplot(&[set], None).unwrap().to_string();
        assert_eq!(svg.matches("<rect").count(), 3);
    }

    #[test]
    fn labels_are_escaped() {
        let set = SwatchSet::new("A & B").row("<x>", palette(&["#FF0000"]));
        let svg = swatchplot(&[set], None).unwrap().to_string();
        assert!(svg.contains("A &amp; B"));
        assert!(svg.contains("&lt;x&gt;"));
    }
}
