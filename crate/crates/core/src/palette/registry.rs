use crate::error::{Error, Result};

use super::{PaletteKind, PaletteSpec, SpecOverrides};

/// The registry shipped with the crate.
pub const DEFAULT_REGISTRY: &str = include_str!("../../data/registry.txt");

const FIELDS: [&str; 11] = [
    "kind", "name", "h1", "h2", "c1", "c2", "cmax", "l1", "l2", "p1", "p2",
];

/// Lowercase, with spaces, dashes and underscores removed.
pub fn normalize_name(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace() && *c != '-' && *c != '_')
        .flat_map(char::to_lowercase)
        .collect()
}

/// Named palette specs in file order.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedPaletteRegistry {
    entries: Vec<(String, PaletteSpec)>,
}

impl NamedPaletteRegistry {
    pub fn builtin() -> Self {
        // covered by tests; the bundled file is static
        Self::parse(DEFAULT_REGISTRY).expect("bundled registry is valid")
    }

    /// Parses the `kind | name | h1 | ... | p2` record format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(String, PaletteSpec)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let spec =
                parse_record(trimmed).map_err(|message| Error::Registry { line, message })?;
            let key = normalize_name(spec.label());
            if entries.iter().any(|(k, _)| *k == key) {
                return Err(Error::Registry {
                    line,
                    message: format!("duplicate palette name {:?}", spec.label()),
                });
            }
            entries.push((key, spec));
        }
        Ok(NamedPaletteRegistry { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn specs(&self) -> impl Iterator<Item = &PaletteSpec> {
        self.entries.iter().map(|(_, spec)| spec)
    }

    pub fn by_kind(&self, kind: PaletteKind) -> impl Iterator<Item = &PaletteSpec> {
        self.specs().filter(move |s| s.kind == kind)
    }

    pub fn lookup(&self, name: &str) -> Option<&PaletteSpec> {
        let key = normalize_name(name);
        self.entries
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, spec)| spec)
    }

    /// Stored spec with `overrides` applied and validated.
    pub fn get(&self, name: &str, overrides: &SpecOverrides) -> Result<PaletteSpec> {
        let stored = self.lookup(name).ok_or_else(|| Error::UnknownPalette {
            name: name.to_string(),
            suggestions: self.suggestions(name),
        })?;
        let spec = stored.apply(overrides);
        spec.validate()?;
        Ok(spec)
    }

    /// Names within edit distance 2 of `name`, closest first.
    pub fn suggestions(&self, name: &str) -> Vec<String> {
        let key = normalize_name(name);
        let mut scored: Vec<(usize, &str)> = self
            .entries
            .iter()
            .map(|(k, spec)| (strsim::levenshtein(&key, k), spec.label()))
            .filter(|(d, _)| *d <= 2)
            .collect();
        scored.sort();
        scored.into_iter().map(|(_, n)| n.to_string()).collect()
    }
}

fn parse_record(line: &str) -> std::result::Result<PaletteSpec, String> {
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    if fields.len() != FIELDS.len() {
        return Err(format!(
            "expected {} '|'-separated fields ({}), found {}",
            FIELDS.len(),
            FIELDS.join(" | "),
            fields.len()
        ));
    }
    let kind: PaletteKind = fields[0].parse().map_err(|e: Error| e.to_string())?;
    let name = fields[1];
    if name.is_empty() {
        return Err("palette name is empty".to_string());
    }
    let number = |idx: usize| -> std::result::Result<Option<f64>, String> {
        let text = fields[idx];
        if text.is_empty() {
            return Ok(None);
        }
        text.parse::<f64>()
            .map(Some)
            .map_err(|_| format!("field `{}`: {text:?} is not a number", FIELDS[idx]))
    };
    let required = |idx: usize| -> std::result::Result<f64, String> {
        number(idx)?.ok_or_else(|| format!("field `{}` is required", FIELDS[idx]))
    };
    let spec = PaletteSpec {
        kind,
        name: Some(name.to_string()),
        h1: required(2)?,
        h2: number(3)?,
        c1: required(4)?,
        c2: number(5)?,
        cmax: number(6)?,
        l1: required(7)?,
        l2: number(8)?,
        p1: number(9)?.unwrap_or(1.0),
        p2: number(10)?,
        reverse: false,
        fixup: true,
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_has_required_entries() {
        let reg = NamedPaletteRegistry::builtin();
        for name in ["Viridis", "Blue-Yellow", "Dark 3", "Blue-Red"] {
            assert!(reg.lookup(name).is_some(), "missing {name}");
        }
        assert_eq!(
            reg.lookup("blue yellow").unwrap().kind,
            PaletteKind::Sequential
        );
        assert_eq!(reg.lookup("dark_3").unwrap().kind, PaletteKind::Qualitative);
        assert_eq!(reg.lookup("BLUE-RED").unwrap().kind, PaletteKind::Diverging);
        for kind in PaletteKind::ALL {
            assert!(reg.by_kind(kind).count() > 0);
        }
    }

    #[test]
    fn viridis_matches_hand_spec() {
        let reg = NamedPaletteRegistry::builtin();
        let spec = reg.get("viridis", &SpecOverrides::default()).unwrap();
        let hand = PaletteSpec::sequential([300.0, 75.0], [40.0, 95.0], [15.0, 90.0], [1.0, 1.1])
            .with_name("Viridis");
        assert_eq!(spec, hand);
    }

    #[test]
    fn overrides_leave_stored_entry_alone() {
        let reg = NamedPaletteRegistry::builtin();
        let o = SpecOverrides {
            h1: Some(200.0),
            ..Default::default()
        };
        let spec = reg.get("viridis", &o).unwrap();
        assert_eq!(spec.h1, 200.0);
        assert_eq!(spec.h2, Some(75.0));
        assert_eq!(reg.lookup("viridis").unwrap().h1, 300.0);
    }

    #[test]
    fn invalid_override_is_rejected() {
        let reg = NamedPaletteRegistry::builtin();
        let o = SpecOverrides {
            cmax: Some(10.0),
            ..Default::default()
        };
        assert_eq!(reg.get("viridis", &o).unwrap_err().field(), Some("cmax"));
    }

    #[test]
    fn typo_suggests_nearest() {
        let reg = NamedPaletteRegistry::builtin();
        match reg.get("virids", &SpecOverrides::default()) {
            Err(Error::UnknownPalette { suggestions, .. }) => {
                assert_eq!(suggestions.first().map(String::as_str), Some("Viridis"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = reg.get("virids", &SpecOverrides::default()).unwrap_err();
        assert!(err.to_string().contains("did you mean Viridis"), "{err}");
        assert!(reg.suggestions("zzzzzzzzzz").is_empty());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "# header\n\nsequential | A | 1 | 2 | 3 | 4 | | 5 | 6 | 1 | 1\nsequential | B | x | 2 | 3 | 4 | | 5 | 6 | 1 | 1\n";
        match NamedPaletteRegistry::parse(text) {
            Err(Error::Registry { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("h1"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }

        let short = "sequential | A | 1 | 2\n";
        assert!(matches!(
            NamedPaletteRegistry::parse(short),
            Err(Error::Registry { line: 1, .. })
        ));
        let missing = "sequential | A | 1 | 2 | | 4 | | 5 | 6 | 1 | 1\n";
        let err = NamedPaletteRegistry::parse(missing).unwrap_err();
        assert!(err.to_string().contains("`c1` is required"), "{err}");
        let dup =
            "qualitative | A | 0 | | 1 | | | 5 | | |\nqualitative | a | 0 | | 1 | | | 5 | | |\n";
        assert!(matches!(
            NamedPaletteRegistry::parse(dup),
            Err(Error::Registry { line: 2, .. })
        ));
        let bad_cmax = "sequential | A | 1 | 2 | 50 | 4 | 10 | 5 | 6 | 1 | 1\n";
        assert!(NamedPaletteRegistry::parse(bad_cmax).is_err());
        let bad_kind = "cyclic | A | 1 | 2 | 50 | 4 | | 5 | 6 | 1 | 1\n";
        assert!(NamedPaletteRegistry::parse(bad_kind).is_err());
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_name("Blue-Yellow 2"), "blueyellow2");
        assert_eq!(normalize_name(" dark_3 "), "dark3");
    }
}
