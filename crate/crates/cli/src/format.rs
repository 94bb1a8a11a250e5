//! Family file formats.
//!
//! Two encodings are accepted:
//!
//! - a JSON document `{"domain": [...], "states": [[...], ...]}`;
//! - a compact line format with an optional `domain: a,b,c` header and one
//!   state per line, items separated by commas and `-` for the empty state.
//!   Blank lines and lines starting with `#` are ignored. Without a header
//!   the domain is every item mentioned, in order of first appearance.
//!   A `ground: ...` header narrows the ground set below the domain; it is
//!   only written for families with an empty ground, such as trivial
//!   children.
//!
//! Both are written in canonical state order.

use std::sync::Arc;

use learnspace::{ItemDomain, SetFamily, StateSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Family(#[from] learnspace::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Lines,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub domain: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    pub states: Vec<Vec<String>>,
}

impl FamilyDocument {
    /// Document over the family's ground items, states in canonical order.
    pub fn from_family(family: &SetFamily) -> Self {
        let family = family.compact();
        let domain = family.domain();
        let ground = (family.ground() != domain.full()).then(|| {
            family
                .ground_names()
                .into_iter()
                .map(String::from)
                .collect()
        });
        FamilyDocument {
            domain: domain.items().to_vec(),
            ground,
            states: family
                .iter()
                .map(|s| domain.names(s).into_iter().map(String::from).collect())
                .collect(),
        }
    }

    pub fn to_family(&self) -> Result<Parsed, FormatError> {
        let domain = Arc::new(ItemDomain::new(self.domain.iter().cloned())?);
        let states = self
            .states
            .iter()
            .map(|names| domain.state(names))
            .collect::<Result<Vec<StateSet>, _>>()?;
        let ground = match &self.ground {
            Some(names) => domain.state(names)?,
            None => domain.full(),
        };
        build(domain, ground, states)
    }
}

/// A parsed family plus any non-fatal warnings.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub family: SetFamily,
    pub warnings: Vec<String>,
}

fn build(
    domain: Arc<ItemDomain>,
    ground: StateSet,
    states: Vec<StateSet>,
) -> Result<Parsed, FormatError> {
    let listed = states.len();
    let family = SetFamily::with_ground(domain, ground, states)?;
    let mut warnings = Vec::new();
    if family.len() < listed {
        warnings.push(format!(
            "{} duplicate state(s) collapsed",
            listed - family.len()
        ));
    }
    Ok(Parsed { family, warnings })
}

pub fn parse_family(text: &str) -> Result<Parsed, FormatError> {
    if text.trim_start().starts_with('{') {
        let doc: FamilyDocument = serde_json::from_str(text)?;
        doc.to_family()
    } else {
        parse_lines(text)
    }
}

fn split_items(body: &str, line: usize) -> Result<Vec<&str>, FormatError> {
    let body = body.trim();
    if body == "-" || body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(str::trim)
        .map(|item| {
            if item.is_empty() {
                Err(FormatError::Malformed {
                    line,
                    message: "empty item name".into(),
                })
            } else {
                Ok(item)
            }
        })
        .collect()
}

fn parse_lines(text: &str) -> Result<Parsed, FormatError> {
    let mut declared: Option<Vec<&str>> = None;
    let mut ground: Option<(usize, Vec<&str>)> = None;
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("domain:") {
            if declared.is_some() || !rows.is_empty() {
                return Err(FormatError::Malformed {
                    line,
                    message: "domain header must come once, before any state".into(),
                });
            }
            declared = Some(split_items(rest, line)?);
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("ground:") {
            if ground.is_some() || !rows.is_empty() {
                return Err(FormatError::Malformed {
                    line,
                    message: "ground header must come once, before any state".into(),
                });
            }
            ground = Some((line, split_items(rest, line)?));
            continue;
        }
        rows.push((line, split_items(trimmed, line)?));
    }

    let names: Vec<&str> = match declared {
        Some(names) => names,
        None => {
            let mut seen = Vec::new();
            for (_, items) in &rows {
                for item in items {
                    if !seen.contains(item) {
                        seen.push(*item);
                    }
                }
            }
            seen
        }
    };
    let domain = Arc::new(ItemDomain::new(names)?);
    let lookup = |line: usize, items: &[&str]| {
        domain.state(items).map_err(|e| FormatError::Malformed {
            line,
            message: e.to_string(),
        })
    };
    let ground = match &ground {
        Some((line, items)) => lookup(*line, items)?,
        None => domain.full(),
    };
    let states = rows
        .iter()
        .map(|(line, items)| lookup(*line, items))
        .collect::<Result<Vec<_>, _>>()?;
    build(domain, ground, states)
}

pub fn serialize_family(family: &SetFamily, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = FamilyDocument::from_family(family);
            let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
            out.push('\n');
            out
        }
        Format::Lines => {
            let family = family.compact();
            let domain = family.domain();
            let mut out = format!("domain: {}\n", domain.items().join(","));
            if family.ground() != domain.full() {
                let names = family.ground_names();
                let names = if names.is_empty() {
                    "-".to_string()
                } else {
                    names.join(",")
                };
                out.push_str(&format!("ground: {names}\n"));
            }
            for s in family.iter() {
                if s.is_empty() {
                    out.push_str("-\n");
                } else {
                    out.push_str(&domain.names(s).join(","));
                    out.push('\n');
                }
            }
            out
        }
    }
}
