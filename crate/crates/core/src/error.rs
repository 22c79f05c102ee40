use thiserror::Error;

/// Errors produced by the color, palette, ops and viz modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid color: {0}")]
    InvalidColor(String),

    #[error("cannot parse hex color {text:?} at position {position}: {reason}")]
    HexParse {
        text: String,
        position: usize,
        reason: String,
    },

    #[error("color #{index}: {source}")]
    AtIndex {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid palette parameter `{field}`: {message}")]
    InvalidSpec { field: String, message: String },

    #[error("invalid count {0}: at least one color is required")]
    InvalidCount(usize),

    #[error("severity {0} is outside [0, 1]")]
    InvalidSeverity(f64),

    #[error("color {index} of the palette is outside the sRGB gamut and fixup is disabled")]
    OutOfGamut { index: usize },

    #[error("unknown palette {name:?}{}", suggestion_suffix(.suggestions))]
    UnknownPalette {
        name: String,
        suggestions: Vec<String>,
    },

    #[error("registry line {line}: {message}")]
    Registry { line: usize, message: String },

    #[error("{0}")]
    InvalidInput(String),

    #[error("{0} palettes are not supported here")]
    UnsupportedKind(String),
}

fn suggestion_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!("; did you mean {}?", suggestions.join(", "))
    }
}

impl Error {
    pub(crate) fn spec(field: &str, message: impl Into<String>) -> Self {
        Error::InvalidSpec {
            field: field.to_string(),
            message: message.into(),
        }
    }

    pub fn at(self, index: usize) -> Self {
        Error::AtIndex {
            index,
            source: Box::new(self),
        }
    }

    /// Name of the offending palette parameter, for field-level reporting.
    pub fn field(&self) -> Option<&str> {
        match self {
            Error::InvalidSpec { field, .. } => Some(field),
            Error::InvalidCount(_) => Some("n"),
            Error::InvalidSeverity(_) => Some("severity"),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
