//! Facet-list documents.
//!
//! Text format: one facet per line as whitespace-separated vertex labels. A
//! token starting with `#` starts a comment. Two comment lines are read as a
//! header:
//!
//! ```text
//! # name: torus7
//! # dimension: 2
//! 0 1 3
//! 0 2 3
//! ```
//!
//! The JSON mirror is `{"name": …, "dimension_hint": …, "facets": [[…], …]}`
//! where labels may be strings or integers. Input whose first non-blank
//! character is `{` is read as JSON.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::error::TopologyError;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("input contains no facets")]
    Empty,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("invalid JSON facet document: {0}")]
    Json(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// Parsed document header plus the complex it describes.
#[derive(Clone, Debug)]
pub struct ParsedDocument {
    pub name: Option<String>,
    pub dimension_hint: Option<isize>,
    pub complex: SimplicialComplex,
    pub warnings: Vec<String>,
}

/// Serialized form of the JSON mirror.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetListDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension_hint: Option<isize>,
    pub facets: Vec<Vec<Label>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Integer(i64),
    Text(String),
}

impl Label {
    fn into_string(self) -> String {
        match self {
            Label::Integer(i) => i.to_string(),
            Label::Text(s) => s,
        }
    }
}

pub fn parse_facets(text: &str) -> Result<ParsedDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_text(text: &str) -> Result<ParsedDocument, ParseError> {
    let mut name = None;
    let mut dimension_hint = None;
    let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(v) = comment.strip_prefix("name:") {
                name = Some(v.trim().to_string());
            } else if let Some(v) = comment.strip_prefix("dimension:") {
                dimension_hint =
                    Some(
                        v.trim()
                            .parse::<isize>()
                            .map_err(|_| ParseError::Malformed {
                                line,
                                message: format!("bad dimension header `{}`", v.trim()),
                            })?,
                    );
            }
            continue;
        }
        let labels: Vec<String> = trimmed
            .split_whitespace()
            .take_while(|t| !t.starts_with('#'))
            .map(str::to_string)
            .collect();
        if labels.is_empty() {
            continue;
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ParseError::Malformed {
                line,
                message: format!("label `{}` repeated within one facet", w[0]),
            });
        }
        rows.push((line, labels));
    }
    build(name, dimension_hint, rows)
}

fn parse_json(text: &str) -> Result<ParsedDocument, ParseError> {
    let doc: FacetListDocument =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let rows = doc
        .facets
        .into_iter()
        .enumerate()
        .map(|(i, f)| (i + 1, f.into_iter().map(Label::into_string).collect()))
        .collect::<Vec<(usize, Vec<String>)>>();
    for (idx, labels) in &rows {
        if labels.is_empty() {
            return Err(ParseError::Json(format!("facet {idx} is empty")));
        }
    }
    build(doc.name, doc.dimension_hint, rows)
}

fn build(
    name: Option<String>,
    dimension_hint: Option<isize>,
    rows: Vec<(usize, Vec<String>)>,
) -> Result<ParsedDocument, ParseError> {
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }
    for (line, labels) in &rows {
        if let Some(bad) = labels
            .iter()
            .find(|l| crate::complex::validate_label(l).is_err())
        {
            return Err(ParseError::Malformed {
                line: *line,
                message: format!("invalid label `{bad}`"),
            });
        }
    }
    let (complex, dropped) =
        SimplicialComplex::from_labeled_facets_reporting(rows.into_iter().map(|(_, l)| l))?;
    let mut warnings: Vec<String> = dropped
        .iter()
        .map(|f| format!("ignored {{{}}}: it is a face of another facet", f.join(",")))
        .collect();
    if let Some(hint) = dimension_hint {
        if hint != complex.dim() {
            warnings.push(format!(
                "dimension header says {hint} but the facets span dimension {}",
                complex.dim()
            ));
        }
    }
    Ok(ParsedDocument {
        name,
        dimension_hint,
        complex,
        warnings,
    })
}

/// Deterministic text form: header comments, then facets in label order.
pub fn serialize_facets(k: &SimplicialComplex, name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out.push_str(&format!("# name: {name}\n"));
    }
    out.push_str(&format!("# dimension: {}\n", k.dim()));
    for f in k.facet_labels() {
        out.push_str(&f.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_document(k: &SimplicialComplex, name: Option<&str>) -> FacetListDocument {
    FacetListDocument {
        name: name.map(str::to_string),
        dimension_hint: Some(k.dim()),
        facets: k
            .facet_labels()
            .into_iter()
            .map(|f| f.into_iter().map(Label::Text).collect())
            .collect(),
    }
}

pub fn serialize_facets_json(k: &SimplicialComplex, name: Option<&str>) -> String {
    let mut s = serde_json::to_string_pretty(&to_document(k, name)).expect("plain data");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_form;
    use crate::generate::generate;

    #[test]
    fn two_triangles_sharing_an_edge() {
        let doc = parse_facets("a b c\na b d\n").unwrap();
        assert_eq!(doc.complex.f_vector(), vec![4, 5, 2]);
        assert!(doc.warnings.is_empty());
    }

    #[test]
    fn integer_labels_make_a_cycle() {
        let doc = parse_facets("1 2\n2 3\n3 1\n").unwrap();
        assert_eq!(
            canonical_form(&doc.complex),
            canonical_form(&generate("cycle:3").unwrap())
        );
    }

    #[test]
    fn faces_listed_as_facets_are_dropped_with_warning() {
        let with = parse_facets("a b c\nb c\n").unwrap();
        let without = parse_facets("a b c\n").unwrap();
        assert_eq!(with.complex, without.complex);
        assert_eq!(with.warnings.len(), 1);
    }

    #[test]
    fn header_and_comments() {
        let doc =
            parse_facets("# name: demo\n# dimension: 1\n\n0 1 # trailing\n# note\n1 2\n").unwrap();
        assert_eq!(doc.name.as_deref(), Some("demo"));
        assert_eq!(doc.dimension_hint, Some(1));
        assert_eq!(doc.complex.facets().len(), 2);
        let mismatch = parse_facets("# dimension: 3\n0 1\n").unwrap();
        assert_eq!(mismatch.warnings.len(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_facets(""), Err(ParseError::Empty)));
        assert!(matches!(
            parse_facets("# only comments\n"),
            Err(ParseError::Empty)
        ));
        match parse_facets("0 1\n2 2 3\n") {
            Err(ParseError::Malformed { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_facets("# dimension: two\n0 1\n") {
            Err(ParseError::Malformed { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_mirror() {
        let doc = parse_facets(r#"{"name": "c3", "facets": [[1, 2], ["2", 3], [3, 1]]}"#).unwrap();
        assert_eq!(doc.name.as_deref(), Some("c3"));
        assert_eq!(doc.complex.f_vector(), vec![3, 3]);
        assert!(matches!(
            parse_facets("{\"facets\": 3}"),
            Err(ParseError::Json(_))
        ));
        assert!(matches!(
            parse_facets(r#"{"facets": []}"#),
            Err(ParseError::Empty)
        ));

        let k = generate("torus7").unwrap();
        let back = parse_facets(&serialize_facets_json(&k, Some("t"))).unwrap();
        assert_eq!(back.complex, k);
    }

    #[test]
    fn text_round_trip_is_exact() {
        let k = generate("wedge_spheres:2,2").unwrap();
        let text = serialize_facets(&k, Some("w"));
        let back = parse_facets(&text).unwrap();
        assert_eq!(back.complex, k);
        assert_eq!(serialize_facets(&back.complex, Some("w")), text);
    }
}
