//! HTTP/JSON front end for the palette toolkit.
//!
//! | route                   | body            | response            |
//! |-------------------------|-----------------|---------------------|
//! | `GET /api/registry`     |                 | `[{name, kind, spec}]` |
//! | `POST /api/render`      | [`RenderRequest`] | [`RenderResponse`]  |
//! | `POST /api/plot/swatch` | [`RenderRequest`] | `image/svg+xml`     |
//! | `POST /api/plot/spec`   | [`RenderRequest`] | `image/svg+xml`     |
//! | `POST /api/plot/hcl`    | [`RenderRequest`] | `image/svg+xml`     |
//!
//! Invalid requests get `400 {"error", "field"}`; an HCL plot of a
//! non-sequential spec gets 422. The service holds no state between
//! requests.

use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use colortool_core::ops::{desaturate, luminance_profile, simulate_cvd};
use colortool_core::palette::{sample, NamedPaletteRegistry};
use colortool_core::viz::{hclplot, specplot, swatchplot, SvgDocument, SwatchSet};
use colortool_core::{CvdKind, Error, HexCode, Palette, PaletteKind, PaletteSpec};
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, CorsLayer};
use tower_http::services::ServeDir;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvdRequest {
    pub kind: CvdKind,
    pub severity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderRequest {
    pub spec: PaletteSpec,
    pub n: usize,
    #[serde(default)]
    pub cvd: Option<CvdRequest>,
    #[serde(default)]
    pub desaturate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderResponse {
    pub colors: Vec<HexCode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cvd_colors: Option<Vec<HexCode>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub desaturated_colors: Option<Vec<HexCode>>,
    pub luminance: Vec<f64>,
    pub settings: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegistryEntry {
    pub name: String,
    pub kind: PaletteKind,
    pub spec: PaletteSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
    pub field: Option<String>,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: ErrorBody,
}

impl ApiError {
    fn bad_request(error: String, field: Option<String>) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            body: ErrorBody { error, field },
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnsupportedKind(_) => StatusCode::UNPROCESSABLE_ENTITY,
            _ => StatusCode::BAD_REQUEST,
        };
        ApiError {
            status,
            body: ErrorBody {
                field: e.field().map(str::to_string),
                error: e.to_string(),
            },
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

/// Name of the field a serde error complains about, if it says.
fn serde_field(message: &str) -> Option<String> {
    let start = message.find('`')? + 1;
    let len = message[start..].find('`')?;
    message
        .starts_with("missing field")
        .then(|| message[start..start + len].to_string())
}

fn parse_request(body: &[u8]) -> Result<RenderRequest, ApiError> {
    let req: RenderRequest = serde_json::from_slice(body).map_err(|e| {
        let message = e.to_string();
        ApiError::bad_request(
            format!("invalid request body: {message}"),
            serde_field(&message),
        )
    })?;
    if req.n == 0 {
        return Err(Error::InvalidCount(0).into());
    }
    req.spec.validate()?;
    Ok(req)
}

pub fn render(req: &RenderRequest) -> Result<RenderResponse, Error> {
    let palette = sample(&req.spec, req.n)?;
    let cvd_colors = req
        .cvd
        .as_ref()
        .map(|c| simulate_cvd(&palette.colors, c.kind, c.severity))
        .transpose()?;
    let desaturated_colors = req
        .desaturate
        .map(|amount| desaturate(&palette.colors, amount))
        .transpose()?;
    Ok(RenderResponse {
        luminance: luminance_profile(&palette.colors)?,
        settings: req.spec.describe(),
        colors: palette.colors,
        cvd_colors,
        desaturated_colors,
    })
}

pub fn plot(kind: &str, req: &RenderRequest) -> Result<SvgDocument, Error> {
    match kind {
        "swatch" => {
            let palette = sample(&req.spec, req.n)?;
            let mut set = SwatchSet::new(req.spec.label()).row("Original", palette.clone());
            if let Some(c) = &req.cvd {
                let colors = simulate_cvd(&palette.colors, c.kind, c.severity)?;
                set = set.row(
                    c.kind.to_string(),
                    Palette::new(palette.label.clone(), colors)?,
                );
            }
            if let Some(amount) = req.desaturate {
                let colors = desaturate(&palette.colors, amount)?;
                set = set.row("Desaturated", Palette::new(palette.label.clone(), colors)?);
            }
            swatchplot(&[set], None)
        }
        "spec" => specplot(&sample(&req.spec, req.n)?, None),
        "hcl" => hclplot(&req.spec, req.n, None),
        other => Err(Error::InvalidInput(format!(
            "unknown plot type {other:?}; expected swatch, spec or hcl"
        ))),
    }
}

async fn registry_handler(
    State(registry): State<Arc<NamedPaletteRegistry>>,
) -> Json<Vec<RegistryEntry>> {
    Json(
        registry
            .specs()
            .map(|spec| RegistryEntry {
                name: spec.label().to_string(),
                kind: spec.kind,
                spec: spec.clone(),
            })
            .collect(),
    )
}

async fn render_handler(body: Bytes) -> Result<Json<RenderResponse>, ApiError> {
    let req = parse_request(&body)?;
    Ok(Json(render(&req)?))
}

async fn plot_handler(Path(kind): Path<String>, body: Bytes) -> Result<Response, ApiError> {
    let req = parse_request(&body)?;
    let svg = plot(&kind, &req)?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg.to_string()).into_response())
}

fn is_local_origin(origin: &HeaderValue) -> bool {
    let Ok(origin) = origin.to_str() else {
        return false;
    };
    let host = origin
        .strip_prefix("http://")
        .or_else(|| origin.strip_prefix("https://"))
        .unwrap_or("");
    let host = host.rsplit_once(':').map_or(host, |(h, port)| {
        if port.chars().all(|c| c.is_ascii_digit()) {
            h
        } else {
            host
        }
    });
    matches!(host, "localhost" | "127.0.0.1" | "[::1]")
}

/// The API routes, CORS for local origins, and optionally static files
/// from `static_dir` for everything else.
pub fn router(registry: NamedPaletteRegistry, static_dir: Option<PathBuf>) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(AllowOrigin::predicate(|origin, _| is_local_origin(origin)))
        .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    let api = Router::new()
        .route("/api/registry", get(registry_handler))
        .route("/api/render", post(render_handler))
        .route("/api/plot/{kind}", post(plot_handler))
        .with_state(Arc::new(registry));
    let app = match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    };
    app.layer(cors)
}

/// Serves [`router`] on `127.0.0.1:port` until the process is stopped.
pub async fn serve(
    port: u16,
    registry: NamedPaletteRegistry,
    static_dir: Option<PathBuf>,
) -> std::io::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(registry, static_dir)).await
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_origins() {
        for ok in [
            "http://localhost:5173",
            "http://127.0.0.1",
            "https://localhost",
        ] {
            assert!(is_local_origin(&HeaderValue::from_static(ok)), "{ok}");
        }
        for bad in ["http://example.com", "http://localhost.evil.com", "null"] {
            assert!(!is_local_origin(&HeaderValue::from_static(bad)), "{bad}");
        }
    }

    #[test]
    fn missing_field_is_named() {
        assert_eq!(
            serde_field("missing field `h1` at line 1 column 20").as_deref(),
            Some("h1")
        );
        assert_eq!(serde_field("expected value at line 1 column 1"), None);
    }
}
