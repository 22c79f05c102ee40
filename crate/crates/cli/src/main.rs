//! `colortool`: HCL palettes, color conversion, CVD simulation and SVG
//! diagnostics from the command line.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on
//! success, 1 when the input data is rejected and 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use colortool_core::color::{parse_hex, D65};
use colortool_core::ops::{
    adjust_luminance, contrast_ratio, desaturate, is_strictly_monotone, luminance_profile,
    simulate_cvd,
};
use colortool_core::palette::{
    rainbow_hsv, sample, NamedPaletteRegistry, Palette, PaletteSpec, SpecOverrides,
};
use colortool_core::viz::{
    cvd_comparison, cvd_demo, hclplot, specplot, swatchplot, viridis_swatches, DemoGrid, Size,
    SvgDocument, SwatchSet, DEFAULT_SEED,
};
use colortool_core::{CvdKind, Error, Hcl, HexCode, Hsv, LinearRgb, Luv, PaletteKind, Srgb, Xyz};
use colortool_service::RegistryEntry;

const REGISTRY_ENV: &str = "COLORTOOL_REGISTRY";

#[derive(Parser)]
#[command(
    name = "colortool",
    version,
    about = "Perceptual HCL color palettes and diagnostics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a palette as hex codes
    Palette(PaletteCmd),
    /// Convert colors between color spaces
    Convert(ConvertCmd),
    /// Color vision deficiency, desaturation and lightening
    Simulate(SimulateCmd),
    /// Contrast ratios and luminance checks
    Assess {
        #[command(subcommand)]
        check: AssessCmd,
    },
    /// Swatch grid SVG
    Swatch(SwatchCmd),
    /// Hue/chroma/luminance spectrum SVG
    Spec(SpecCmd),
    /// Chroma-luminance path SVG for a sequential palette
    Hclplot(PlotCmd),
    /// Heatmap demo under normal vision, deuteranopia and desaturation
    Demo(DemoCmd),
    /// Inspect the palette registry
    Registry {
        #[command(subcommand)]
        action: RegistryCmd,
    },
    /// Run the HTTP service
    Serve(ServeCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Qualitative,
    Sequential,
    Diverging,
    /// Fully saturated HSV rainbow
    Rainbow,
}

#[derive(Args)]
struct SpecArgs {
    /// Palette family
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Registry palette name (case, spaces and dashes are ignored)
    #[arg(long)]
    name: Option<String>,
    /// Number of colors
    #[arg(short, default_value_t = 7)]
    n: usize,
    /// Parameter override such as `h1=200` or `cmax=90` (repeatable)
    #[arg(long = "override", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Reverse the color order
    #[arg(long)]
    reverse: bool,
    /// Report out-of-gamut colors instead of clamping them
    #[arg(long)]
    no_fixup: bool,
    /// Rainbow start, as a fraction of the hue circle
    #[arg(long, default_value_t = 0.0)]
    start: f64,
    /// Rainbow end, as a fraction of the hue circle
    #[arg(long)]
    end: Option<f64>,
}

#[derive(Args)]
struct SizeArgs {
    /// Output width in pixels
    #[arg(long)]
    width: Option<f64>,
    /// Output height in pixels
    #[arg(long)]
    height: Option<f64>,
    /// Write the SVG here and print the path instead of the document
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PaletteCmd {
    #[command(flatten)]
    spec: SpecArgs,
    /// JSON array output
    #[arg(long, conflicts_with_all = ["csv", "settings"])]
    json: bool,
    /// Comma-separated output on one line
    #[arg(long, conflicts_with = "settings")]
    csv: bool,
    /// Print the resolved parameters instead of colors
    #[arg(long)]
    settings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    Hex,
    Srgb,
    Linear,
    Xyz,
    Luv,
    Hcl,
    Hsv,
}

#[derive(Args)]
struct ConvertCmd {
    #[arg(long, value_enum)]
    from: Space,
    #[arg(long, value_enum)]
    to: Space,
    /// Clamp to the sRGB gamut when converting to hex
    #[arg(long)]
    fixup: bool,
    /// Hex codes, or comma-separated triples such as `300,40,15`
    #[arg(required = true, allow_hyphen_values = true)]
    colors: Vec<String>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("operation").required(true).args(["cvd", "desaturate", "adjust"])))]
struct SimulateCmd {
    /// Deficiency to simulate
    #[arg(long, value_enum)]
    cvd: Option<CvdArg>,
    /// Severity in [0, 1]
    #[arg(long, default_value_t = 1.0, requires = "cvd")]
    severity: f64,
    /// Scale chroma by 1 - AMOUNT
    #[arg(long, value_name = "AMOUNT")]
    desaturate: Option<f64>,
    /// Lighten (AMOUNT > 0) or darken (AMOUNT < 0), AMOUNT in [-1, 1]
    #[arg(long, value_name = "AMOUNT", allow_hyphen_values = true)]
    adjust: Option<f64>,
    /// JSON array output
    #[arg(long)]
    json: bool,
    #[arg(required = true)]
    colors: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CvdArg {
    Deutan,
    Protan,
    Tritan,
}

impl From<CvdArg> for CvdKind {
    fn from(c: CvdArg) -> Self {
        match c {
            CvdArg::Deutan => CvdKind::Deutan,
            CvdArg::Protan => CvdKind::Protan,
            CvdArg::Tritan => CvdKind::Tritan,
        }
    }
}

#[derive(Subcommand)]
enum AssessCmd {
    /// WCAG contrast ratio of two colors
    Contrast { a: String, b: String },
    /// Whether HCL luminance is strictly monotone, followed by the values
    MonotoneLuminance {
        #[arg(required = true)]
        colors: Vec<String>,
    },
}

#[derive(Args)]
struct SwatchCmd {
    /// `Label=name;key=value;...`, one per row; defaults to viridis and
    /// three altered versions
    #[arg(long = "row", value_name = "ROW")]
    rows: Vec<String>,
    /// Set title
    #[arg(long, default_value = "Palettes")]
    title: String,
    /// Colors per row
    #[arg(short, default_value_t = 7)]
    n: usize,
    #[command(flatten)]
    size: SizeArgs,
}

#[derive(Args)]
struct SpecCmd {
    #[command(flatten)]
    spec: SpecArgs,
    /// Plot these hex colors instead of a named or specified palette
    #[arg(long, num_args = 1.., value_name = "HEX")]
    colors: Vec<String>,
    #[command(flatten)]
    size: SizeArgs,
}

#[derive(Args)]
struct PlotCmd {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    size: SizeArgs,
}

#[derive(Args)]
struct DemoCmd {
    /// Palette to show; defaults to the reversed rainbow against reversed
    /// Blue-Yellow
    #[command(flatten)]
    spec: SpecArgs,
    /// Seed for the synthetic count data
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    size: SizeArgs,
}

#[derive(Subcommand)]
enum RegistryCmd {
    /// Palette names grouped by kind
    List {
        #[arg(long)]
        json: bool,
    },
    /// Resolved parameters of one palette
    Show { name: String },
}

#[derive(Args)]
struct ServeCmd {
    #[arg(long, default_value_t = 8080)]
    port: u16,
    /// Directory of static studio assets served at `/`
    #[arg(long = "static", value_name = "DIR")]
    static_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(&e, Error::UnknownPalette { suggestions, .. } if suggestions.is_empty()) {
                eprintln!("hint: `colortool registry list` shows the available palettes");
            }
            ExitCode::from(1)
        }
    }
}

/// Registry from `$COLORTOOL_REGISTRY` if set, else the bundled one.
fn registry() -> Result<NamedPaletteRegistry, Error> {
    match std::env::var_os(REGISTRY_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Error::InvalidInput(format!(
                    "cannot read {}: {e}",
                    PathBuf::from(&path).display()
                ))
            })?;
            NamedPaletteRegistry::parse(&text)
        }
        None => Ok(NamedPaletteRegistry::builtin()),
    }
}

fn normalize_hex(text: &str) -> String {
    let t = text.trim().trim_matches(|c| c == '\'' || c == '"');
    if t.starts_with('#') {
        t.to_string()
    } else {
        format!("#{t}")
    }
}

fn hex_args(colors: &[String]) -> Result<Vec<HexCode>, Error> {
    colors
        .iter()
        .enumerate()
        .map(|(index, c)| normalize_hex(c).parse().map_err(|e: Error| e.at(index)))
        .collect()
}

fn overrides(assignments: &[String]) -> Result<SpecOverrides, Error> {
    let mut o = SpecOverrides::default();
    for a in assignments {
        o.set_assignment(a)?;
    }
    Ok(o)
}

fn palette_kind(kind: KindArg) -> Option<PaletteKind> {
    match kind {
        KindArg::Qualitative => Some(PaletteKind::Qualitative),
        KindArg::Sequential => Some(PaletteKind::Sequential),
        KindArg::Diverging => Some(PaletteKind::Diverging),
        KindArg::Rainbow => None,
    }
}

/// The spec named or described by the arguments, `None` for the rainbow.
fn resolve_spec(args: &SpecArgs, reg: &NamedPaletteRegistry) -> Result<Option<PaletteSpec>, Error> {
    let o = overrides(&args.overrides)?;
    let kind = match args.kind {
        Some(KindArg::Rainbow) => return Ok(None),
        Some(k) => palette_kind(k),
        None => None,
    };
    let mut spec = match (&args.name, kind) {
        (Some(name), _) => {
            let spec = reg.get(name, &o)?;
            if let Some(kind) = kind.filter(|k| *k != spec.kind) {
                return Err(Error::InvalidInput(format!(
                    "palette {:?} is {}, not {kind}",
                    spec.label(),
                    spec.kind
                )));
            }
            spec
        }
        (None, Some(kind)) => {
            let need = |v: Option<f64>, key: &str| {
                v.ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "a custom {kind} palette needs --override {key}=VALUE (or use --name)"
                    ))
                })
            };
            let spec = PaletteSpec::new(
                kind,
                need(o.h1, "h1")?,
                need(o.c1, "c1")?,
                need(o.l1, "l1")?,
            )
            .apply(&o);
            spec.validate()?;
            spec
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "give a palette --name, or --kind with --override h1=.. c1=.. l1=..".into(),
            ))
        }
    };
    spec.reverse = args.reverse;
    spec.fixup = !args.no_fixup;
    Ok(Some(spec))
}

fn resolve_palette(args: &SpecArgs, reg: &NamedPaletteRegistry) -> Result<Palette, Error> {
    match resolve_spec(args, reg)? {
        Some(spec) => sample(&spec, args.n),
        None => rainbow_hsv(args.n, args.start, args.end.unwrap_or(1.0), args.reverse),
    }
}

fn size(args: &SizeArgs, doc_w: f64, doc_h: f64) -> Option<Size> {
    match (args.width, args.height) {
        (None, None) => None,
        (Some(w), Some(h)) => Some(Size {
            width: w,
            height: h,
        }),
        (Some(w), None) => Some(Size {
            width: w,
            height: w * doc_h / doc_w,
        }),
        (None, Some(h)) => Some(Size {
            width: h * doc_w / doc_h,
            height: h,
        }),
    }
}

/// Renders once at the natural size, then again if a size was requested.
fn emit(
    args: &SizeArgs,
    render: impl Fn(Option<Size>) -> Result<SvgDocument, Error>,
) -> Result<String, Error> {
    let natural = render(None)?;
    let doc = match size(args, natural.width, natural.height) {
        Some(s) => render(Some(s))?,
        None => natural,
    };
    for (what, v) in [("width", doc.width), ("height", doc.height)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::InvalidInput(format!("{what} must be positive")));
        }
    }
    let text = doc.to_string();
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| {
                Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(format!("{}\n", path.display()))
        }
        None => Ok(text),
    }
}

fn lines(colors: &[HexCode]) -> String {
    colors.iter().map(|c| format!("{c}\n")).collect()
}

fn json_list(colors: &[HexCode]) -> String {
    // a list of strings always serializes
    format!("{}\n", serde_json::to_string(colors).unwrap())
}

fn triple(v: [f64; 3]) -> String {
    format!("{:.4} {:.4} {:.4}", v[0], v[1], v[2])
}

fn parse_triple(text: &str) -> Result<[f64; 3], Error> {
    let parts: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    let bad = || Error::InvalidColor(format!("{text:?} is not a triple such as 300,40,15"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [0.0f64; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| bad())?;
        if !slot.is_finite() {
            return Err(bad());
        }
    }
    Ok(out)
}

fn to_srgb(space: Space, text: &str) -> Result<Srgb, Error> {
    if space == Space::Hex {
        return parse_hex(&normalize_hex(text));
    }
    let [a, b, c] = parse_triple(text)?;
    Ok(match space {
        Space::Hex => unreachable!(),
        Space::Srgb => Srgb::new(a, b, c),
        Space::Linear => LinearRgb::new(a, b, c).to_srgb(),
        Space::Xyz => Xyz { x: a, y: b, z: c }.to_linear().to_srgb(),
        Space::Luv => Luv { l: a, u: b, v: c }.to_xyz(D65).to_linear().to_srgb(),
        Space::Hcl => Hcl::new(a, b, c).to_srgb(),
        Space::Hsv => Hsv::new(a, b, c).to_srgb(),
    })
}

fn from_srgb(space: Space, c: Srgb, fixup: bool) -> Result<String, Error> {
    Ok(match space {
        Space::Hex => {
            let c = if fixup { c.clamped() } else { c };
            c.to_hex()?.to_string()
        }
        Space::Srgb => triple(c.channels()),
        Space::Linear => triple(c.to_linear().channels()),
        Space::Xyz => {
            let x = c.to_linear().to_xyz();
            triple([x.x, x.y, x.z])
        }
        Space::Luv => {
            let l = c.to_linear().to_xyz().to_luv(D65);
            triple([l.l, l.u, l.v])
        }
        Space::Hcl => {
            let h = c.to_hcl();
            triple([h.h, h.c, h.l])
        }
        Space::Hsv => {
            let h = c.to_hsv();
            triple([h.h, h.s, h.v])
        }
    })
}

/// `Label=name;key=value;...`
fn parse_row(row: &str, reg: &NamedPaletteRegistry, n: usize) -> Result<(String, Palette), Error> {
    let mut parts = row.split(';');
    let head = parts.next().unwrap_or_default();
    let (label, name) = head.split_once('=').ok_or_else(|| {
        Error::InvalidInput(format!(
            "row {row:?} is not of the form Label=name;key=value"
        ))
    })?;
    let assignments: Vec<String> = parts
        .filter(|p| !p.trim().is_empty())
        .map(str::to_string)
        .collect();
    let spec = reg.get(name.trim(), &overrides(&assignments)?)?;
    Ok((label.trim().to_string(), sample(&spec, n)?))
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Palette(cmd) => {
            let reg = registry()?;
            if cmd.settings {
                return match resolve_spec(&cmd.spec, &reg)? {
                    Some(spec) => Ok(spec.describe()),
                    None => Err(Error::InvalidInput(
                        "the rainbow has no HCL settings".into(),
                    )),
                };
            }
            let palette = resolve_palette(&cmd.spec, &reg)?;
            Ok(if cmd.json {
                json_list(&palette.colors)
            } else if cmd.csv {
                let items: Vec<&str> = palette.colors.iter().map(HexCode::as_str).collect();
                format!("{}\n", items.join(","))
            } else {
                lines(&palette.colors)
            })
        }
        Command::Convert(cmd) => {
            let mut out = String::new();
            for (index, text) in cmd.colors.iter().enumerate() {
                let line = to_srgb(cmd.from, text)
                    .and_then(|c| from_srgb(cmd.to, c, cmd.fixup))
                    .map_err(|e| e.at(index))?;
                let _ = writeln!(out, "{line}");
            }
            Ok(out)
        }
        Command::Simulate(cmd) => {
            let colors = hex_args(&cmd.colors)?;
            let result = if let Some(kind) = cmd.cvd {
                simulate_cvd(&colors, kind.into(), cmd.severity)?
            } else if let Some(amount) = cmd.desaturate {
                desaturate(&colors, amount)?
            } else {
                // clap guarantees one of the three
                adjust_luminance(&colors, cmd.adjust.unwrap_or(0.0))?
            };
            Ok(if cmd.json {
                json_list(&result)
            } else {
                lines(&result)
            })
        }
        Command::Assess { check } => match check {
            AssessCmd::Contrast { a, b } => {
                let ratio = contrast_ratio(&normalize_hex(&a), &normalize_hex(&b))?;
                Ok(format!("{ratio:.2}\n"))
            }
            AssessCmd::MonotoneLuminance { colors } => {
                let ls = luminance_profile(&hex_args(&colors)?)?;
                let verdict = if is_strictly_monotone(&ls) {
                    "yes"
                } else {
                    "no"
                };
                let values: Vec<String> = ls.iter().map(|l| format!("{l:.2}")).collect();
                Ok(format!("{verdict}\n{}\n", values.join(" ")))
            }
        },
        Command::Swatch(cmd) => {
            let reg = registry()?;
            if cmd.rows.is_empty() {
                return emit(&cmd.size, |s| viridis_swatches(&reg, cmd.n, s));
            }
            let mut set = SwatchSet::new(cmd.title.clone());
            for row in &cmd.rows {
                let (label, palette) = parse_row(row, &reg, cmd.n)?;
                set = set.row(label, palette);
            }
            emit(&cmd.size, |s| swatchplot(std::slice::from_ref(&set), s))
        }
        Command::Spec(cmd) => {
            let palette = if cmd.colors.is_empty() {
                resolve_palette(&cmd.spec, &registry()?)?
            } else {
                Palette::new("custom", hex_args(&cmd.colors)?)?
            };
            emit(&cmd.size, |s| specplot(&palette, s))
        }
        Command::Hclplot(cmd) => {
            let reg = registry()?;
            let spec = resolve_spec(&cmd.spec, &reg)?
                .ok_or_else(|| Error::UnsupportedKind("rainbow".into()))?;
            emit(&cmd.size, |s| hclplot(&spec, cmd.spec.n, s))
        }
        Command::Demo(cmd) => {
            let reg = registry()?;
            let grid = DemoGrid::from_seed(cmd.seed);
            if cmd.spec.name.is_none() && cmd.spec.kind.is_none() {
                return emit(&cmd.size, |s| cvd_demo(&reg, cmd.spec.n, &grid, s));
            }
            let palette = resolve_palette(&cmd.spec, &reg)?;
            let label = palette.label.clone();
            emit(&cmd.size, |s| {
                cvd_comparison(&[(label.as_str(), palette.clone())], &grid, s)
            })
        }
        Command::Registry { action } => {
            let reg = registry()?;
            match action {
                RegistryCmd::List { json: true } => {
                    let entries: Vec<RegistryEntry> = reg
                        .specs()
                        .map(|spec| RegistryEntry {
                            name: spec.label().to_string(),
                            kind: spec.kind,
                            spec: spec.clone(),
                        })
                        .collect();
                    serde_json::to_string_pretty(&entries)
                        .map(|s| s + "\n")
                        .map_err(|e| Error::InvalidInput(e.to_string()))
                }
                RegistryCmd::List { json: false } => {
                    let mut out = String::new();
                    for kind in PaletteKind::ALL {
                        let _ = writeln!(out, "{kind}:");
                        for spec in reg.by_kind(kind) {
                            let _ = writeln!(out, "  {}", spec.label());
                        }
                    }
                    Ok(out)
                }
                RegistryCmd::Show { name } => {
                    Ok(reg.get(&name, &SpecOverrides::default())?.describe())
                }
            }
        }
        Command::Serve(cmd) => {
            let reg = registry()?;
            tracing_subscriber::fmt()
                .with_env_filter(
                    tracing_subscriber::EnvFilter::try_from_default_env()
                        .unwrap_or_else(|_| "info".into()),
                )
                .with_writer(std::io::stderr)
                .init();
            let runtime = tokio::runtime::Runtime::new()
                .map_err(|e| Error::InvalidInput(format!("cannot start runtime: {e}")))?;
            runtime
                .block_on(colortool_service::serve(cmd.port, reg, cmd.static_dir))
                .map_err(|e| Error::InvalidInput(format!("server error: {e}")))?;
            Ok(String::new())
        }
    }
}
