//! Golden SVGs for the standard figures. Set `UPDATE_GOLDEN=1` to rewrite
//! the files after an intentional layout change.

use std::path::PathBuf;

use colortool_core::palette::{sample, sample_hcl, NamedPaletteRegistry, PaletteSpec};
use colortool_core::viz::{
    cvd_demo, gamut_raster, hclplot, specplot, spectrum_series, swatchplot, viridis_swatches,
    viridis_variants, DemoGrid, SvgDocument, SwatchSet, DEFAULT_SEED,
};
use colortool_core::{HexCode, PaletteKind};

fn golden(name: &str, doc: &SvgDocument) -> String {
    let text = doc.to_string();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() || !path.exists() {
        std::fs::write(&path, &text).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert!(text == expected, "{name} differs from {}", path.display());
    text
}

fn well_formed(text: &str) -> roxmltree::Document<'_> {
    roxmltree::Document::parse(text).expect("well-formed XML")
}

fn fills<'a>(doc: &'a roxmltree::Document<'_>, tag: &str) -> Vec<&'a str> {
    doc.descendants()
        .filter(|n| n.has_tag_name(tag))
        .filter_map(|n| n.attribute("fill"))
        .filter(|f| *f != "none")
        .collect()
}

fn polyline(doc: &roxmltree::Document<'_>, id: &str) -> Vec<(f64, f64)> {
    let node = doc
        .descendants()
        .find(|n| n.attribute("id") == Some(id))
        .unwrap();
    node.attribute("points")
        .unwrap()
        .split(' ')
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect()
}

fn pal4() -> PaletteSpec {
    viridis_variants(&NamedPaletteRegistry::builtin()).unwrap()[3]
        .1
        .clone()
}

#[test]
fn viridis_swatch_grid() {
    let reg = NamedPaletteRegistry::builtin();
    let doc = viridis_swatches(&reg, 7, None).unwrap();
    let text = golden("viridis_swatches.svg", &doc);
    assert_eq!(text, viridis_swatches(&reg, 7, None).unwrap().to_string());

    let xml = well_formed(&text);
    let rects = fills(&xml, "rect");
    assert_eq!(rects.len(), 28);
    let labels: Vec<&str> = xml
        .descendants()
        .filter(|n| n.has_tag_name("text"))
        .filter_map(|n| n.text())
        .collect();
    assert_eq!(
        labels,
        [
            "Viridis (and altered versions of it)",
            "By name",
            "By hand",
            "With triangular chroma",
            "With smaller hue range"
        ]
    );
    // by name and by hand agree
    assert_eq!(rects[0..7], rects[7..14]);
    assert_eq!(rects[0], "#4B0055");
    assert_eq!(rects[6], "#FDE333");
}

#[test]
fn spectrum_of_smaller_hue_range() {
    let palette = sample(&pal4(), 7).unwrap();
    let doc = specplot(&palette, None).unwrap();
    let text = golden("pal4_specplot.svg", &doc);
    let xml = well_formed(&text);

    let series = spectrum_series(&palette);
    assert!((series.hue[0] - 200.0).abs() < 15.0, "{:?}", series.hue);
    assert!((series.hue[6] - 75.0).abs() < 5.0, "{:?}", series.hue);
    assert!(series.luminance.windows(2).all(|w| w[1] > w[0]));
    assert_eq!(polyline(&xml, "hue").len(), 7);
    assert_eq!(polyline(&xml, "chroma").len(), 7);
    assert_eq!(
        fills(&xml, "rect"),
        palette
            .colors
            .iter()
            .map(HexCode::as_str)
            .collect::<Vec<_>>()
    );
}

#[test]
fn spectrum_shows_triangular_peak() {
    let spec = viridis_variants(&NamedPaletteRegistry::builtin()).unwrap()[2]
        .1
        .clone();
    let trajectory: Vec<f64> = sample_hcl(&spec, 7).unwrap().iter().map(|p| p.c).collect();
    let peak = trajectory.iter().cloned().fold(f64::MIN, f64::max);
    assert!(
        peak >= 75.0 && peak > trajectory[0] && peak > trajectory[6],
        "{trajectory:?}"
    );

    // hex colors are gamut clipped, so the plotted peak is lower but still interior
    let palette = sample(&spec, 7).unwrap();
    let chroma = spectrum_series(&palette).chroma;
    let max = chroma.iter().cloned().fold(f64::MIN, f64::max);
    assert!(max > chroma[0] && max > chroma[6], "{chroma:?}");
    // the polyline's highest point is interior as well
    let text = specplot(&palette, None).unwrap().to_string();
    let xml = well_formed(&text);
    let ys: Vec<f64> = polyline(&xml, "chroma").iter().map(|p| p.1).collect();
    let top = ys.iter().cloned().fold(f64::MAX, f64::min);
    assert!(top < ys[0] && top < ys[6]);
}

#[test]
fn hcl_path_of_smaller_hue_range() {
    let spec = pal4();
    let doc = hclplot(&spec, 7, None).unwrap();
    let text = golden("pal4_hclplot.svg", &doc);
    let xml = well_formed(&text);

    let circles = fills(&xml, "circle");
    let palette = sample(&spec, 7).unwrap();
    assert_eq!(
        circles,
        palette
            .colors
            .iter()
            .map(HexCode::as_str)
            .collect::<Vec<_>>()
    );
    assert_eq!(polyline(&xml, "path").len(), 7);

    let raster: Vec<String> = gamut_raster(&spec, 7)
        .unwrap()
        .into_iter()
        .map(|c| c.color.as_str().to_string())
        .collect();
    for fill in fills(&xml, "rect") {
        assert!(raster.iter().any(|r| r == fill), "{fill}");
    }
}

#[test]
fn raster_cells_are_in_gamut() {
    for spec in [
        pal4(),
        PaletteSpec::sequential([260.0, 0.0], [80.0, 10.0], [30.0, 95.0], [1.0, 1.5]),
    ] {
        let cells = gamut_raster(&spec, 7).unwrap();
        assert!(!cells.is_empty());
        for cell in cells {
            let rgb = colortool_core::Hcl::new(cell.h, cell.c, cell.l).to_srgb();
            assert!(rgb.in_gamut(), "{cell:?}");
        }
    }
}

#[test]
fn achromatic_path_sits_on_zero_chroma() {
    let spec = PaletteSpec::sequential([0.0, 0.0], [0.0, 0.0], [20.0, 90.0], [1.0, 1.0]);
    let text = hclplot(&spec, 5, None).unwrap().to_string();
    let xml = well_formed(&text);
    let xs: Vec<f64> = polyline(&xml, "path").iter().map(|p| p.0).collect();
    assert_eq!(xs.len(), 5);
    assert!(xs.iter().all(|x| *x == xs[0]), "{xs:?}");
    let circle_xs: Vec<&str> = xml
        .descendants()
        .filter(|n| n.has_tag_name("circle"))
        .filter_map(|n| n.attribute("cx"))
        .collect();
    assert!(circle_xs.iter().all(|x| x.parse::<f64>().unwrap() == xs[0]));
}

#[test]
fn rainbow_and_blue_yellow_heatmaps() {
    let reg = NamedPaletteRegistry::builtin();
    let grid = DemoGrid::from_seed(DEFAULT_SEED);
    let doc = cvd_demo(&reg, 7, &grid, None).unwrap();
    let text = golden("cvd_demo.svg", &doc);
    assert_eq!(
        text,
        cvd_demo(&reg, 7, &DemoGrid::from_seed(DEFAULT_SEED), None)
            .unwrap()
            .to_string()
    );
    let xml = well_formed(&text);
    let panels = xml
        .root_element()
        .children()
        .filter(|n| n.has_tag_name("svg"))
        .count();
    assert_eq!(panels, 6);
    assert_eq!(fills(&xml, "rect").len(), 6 * 400);
}

#[test]
fn fills_come_from_the_palette() {
    let reg = NamedPaletteRegistry::builtin();
    for spec in reg.specs() {
        let palette = sample(spec, 9).unwrap();
        let members: Vec<&str> = palette.colors.iter().map(HexCode::as_str).collect();
        let set = SwatchSet::new(spec.label()).row(spec.label(), palette.clone());
        for text in [
            swatchplot(&[set], None).unwrap().to_string(),
            specplot(&palette, None).unwrap().to_string(),
        ] {
            let xml = well_formed(&text);
            for fill in fills(&xml, "rect") {
                assert!(members.contains(&fill), "{} {fill}", spec.label());
            }
        }
        if spec.kind == PaletteKind::Sequential {
            let text = hclplot(spec, 9, None).unwrap().to_string();
            let xml = well_formed(&text);
            for fill in fills(&xml, "circle") {
                assert!(members.contains(&fill));
            }
        }
    }
}
