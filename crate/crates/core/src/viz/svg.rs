use std::fmt::{self, Write as _};

/// A standalone SVG 1.1 document.
///
/// `view_width`/`view_height` are the coordinate system the body was drawn
/// in; `width`/`height` are the rendered size and may differ, in which case
/// the viewer scales the drawing.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgDocument {
    pub width: f64,
    pub height: f64,
    view_width: f64,
    view_height: f64,
    body: String,
}

/// Requested output size in pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Size {
    pub width: f64,
    pub height: f64,
}

impl SvgDocument {
    pub(crate) fn new(view_width: f64, view_height: f64, body: String, size: Option<Size>) -> Self {
        let size = size.unwrap_or(Size {
            width: view_width,
            height: view_height,
        });
        SvgDocument {
            width: size.width,
            height: size.height,
            view_width,
            view_height,
            body,
        }
    }

    /// The document body without the XML prolog, positioned at `(x, y)`,
    /// for nesting inside another document.
    pub(crate) fn nested(&self, x: f64, y: f64) -> String {
        format!(
            "<svg x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n{}</svg>\n",
            num(x),
            num(y),
            num(self.width),
            num(self.height),
            num(self.view_width),
            num(self.view_height),
            self.body
        )
    }

    pub fn body(&self) -> &str {
        &self.body
    }
}

impl fmt::Display for SvgDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>"
        )?;
        writeln!(
            f,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" font-family=\"sans-serif\">",
            num(self.width),
            num(self.height),
            num(self.view_width),
            num(self.view_height)
        )?;
        f.write_str(&self.body)?;
        writeln!(f, "</svg>")
    }
}

/// Coordinates are rounded to two decimals and printed in the shortest
/// form that round-trips (`12.5`, `3`, `-0.25`).
pub fn num(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

pub(crate) fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Small append-only builder for SVG elements.
#[derive(Debug, Default)]
pub(crate) struct Body(String);

impl Body {
    pub fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str) {
        let _ = writeln!(
            self.0,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
            num(x),
            num(y),
            num(w),
            num(h),
            fill
        );
    }

    pub fn frame(&mut self, x: f64, y: f64, w: f64, h: f64) {
        let _ = writeln!(
            self.0,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>",
            num(x),
            num(y),
            num(w),
            num(h)
        );
    }

    pub fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, stroke: &str) {
        let _ = writeln!(
            self.0,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"1\"/>",
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            stroke
        );
    }

    pub fn polyline(&mut self, id: &str, points: &[(f64, f64)], stroke: &str) {
        let pts: Vec<String> = points
            .iter()
            .map(|(x, y)| format!("{},{}", num(*x), num(*y)))
            .collect();
        let _ = writeln!(
            self.0,
            "<polyline id=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
            id,
            pts.join(" "),
            stroke
        );
    }

    pub fn circle(&mut self, cx: f64, cy: f64, r: f64, fill: &str) {
        let _ = writeln!(
            self.0,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"#000000\" stroke-width=\"1\"/>",
            num(cx),
            num(cy),
            num(r),
            fill
        );
    }

    /// `anchor` is one of `start`, `middle`, `end`.
    pub fn text(&mut self, x: f64, y: f64, size: f64, anchor: &str, text: &str) {
        let _ = writeln!(
            self.0,
            "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"{}\">{}</text>",
            num(x),
            num(y),
            num(size),
            anchor,
            escape(text)
        );
    }

    pub fn raw(&mut self, fragment: &str) {
        self.0.push_str(fragment);
    }

    pub fn finish(self) -> String {
        self.0
    }
}
