//! Text formats for the three object kinds.
//!
//! Compact: a Dyck path is the raw `U`/`D` string; a tableau is a
//! `skyt a i b` header followed by the grid rows with `.` for cells off the
//! diagram; a subdivision is `poly n` followed by the comma-separated,
//! canonically sorted chords. Structured: one self-describing JSON record
//! `{kind, params, payload}` per object (schema in `docs/`).

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::polygon::PolygonSubdivision;
use crate::tableau::SkewTableau;

/// Any of the three object kinds, for format- and CLI-level plumbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Tableau(SkewTableau),
    Path(DyckPath),
    Subdivision(PolygonSubdivision),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Tableau(_) => "skyt",
            Object::Path(_) => "dyck",
            Object::Subdivision(_) => "poly",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Compact,
    Structured,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "compact" => Ok(Format::Compact),
            "structured" => Ok(Format::Structured),
            other => Err(Error::SyntaxError {
                line: 1,
                col: 1,
                msg: format!("unknown format {other:?} (expected compact or structured)"),
            }),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum Record {
    #[serde(rename = "skyt")]
    Skyt {
        params: SkytParams,
        payload: Vec<Vec<Option<usize>>>,
    },
    #[serde(rename = "dyck")]
    Dyck {
        params: DyckParams,
        payload: Vec<String>,
    },
    #[serde(rename = "poly")]
    Poly {
        params: PolyParams,
        payload: Vec<(usize, usize)>,
    },
}

#[derive(Serialize, Deserialize)]
struct SkytParams {
    a: usize,
    i: usize,
    b: usize,
}

#[derive(Serialize, Deserialize)]
struct DyckParams {
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct PolyParams {
    n: usize,
}

pub fn serialize_object(object: &Object, format: Format) -> String {
    match format {
        Format::Compact => match object {
            Object::Tableau(t) => t.to_string(),
            Object::Path(p) => p.to_string(),
            Object::Subdivision(s) => s.to_string(),
        },
        Format::Structured => {
            let record = match object {
                Object::Tableau(t) => Record::Skyt {
                    params: SkytParams {
                        a: t.a(),
                        i: t.i(),
                        b: t.b(),
                    },
                    payload: t.rows().to_vec(),
                },
                Object::Path(p) => Record::Dyck {
                    params: DyckParams { n: p.semi_length() },
                    payload: p
                        .steps()
                        .iter()
                        .map(|s| match s {
                            crate::dyck::Step::Up => "U".to_string(),
                            crate::dyck::Step::Down => "D".to_string(),
                        })
                        .collect(),
                },
                Object::Subdivision(s) => Record::Poly {
                    params: PolyParams { n: s.n() },
                    payload: s.chords().iter().map(|c| (c.lo(), c.hi())).collect(),
                },
            };
            serde_json::to_string(&record).expect("records serialize")
        }
    }
}

pub fn parse_object(text: &str, format: Format) -> Result<Object> {
    match format {
        Format::Compact => parse_compact(text),
        Format::Structured => parse_structured(text),
    }
}

fn parse_compact(text: &str) -> Result<Object> {
    let trimmed = text.trim_end();
    let mut lines = trimmed.lines();
    let first = lines.next().unwrap_or("");
    let head = first.split_whitespace().next().unwrap_or("");
    match head {
        "skyt" => parse_tableau(first, lines),
        "poly" => parse_subdivision(first, lines),
        _ => {
            if trimmed.is_empty() {
                return Err(Error::SyntaxError {
                    line: 1,
                    col: 1,
                    msg: "empty input".into(),
                });
            }
            if lines.next().is_some() {
                return Err(Error::SyntaxError {
                    line: 2,
                    col: 1,
                    msg: "a path is a single line of U and D".into(),
                });
            }
            Ok(Object::Path(first.trim().parse()?))
        }
    }
}

fn header_numbers(line: &str, want: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != want + 1 {
        return Err(Error::SyntaxError {
            line: 1,
            col: 1,
            msg: format!("header needs {want} parameters, got {}", fields.len() - 1),
        });
    }
    fields[1..]
        .iter()
        .enumerate()
        .map(|(k, f)| {
            f.parse().map_err(|_| Error::SyntaxError {
                line: 1,
                col: k + 2,
                msg: format!("expected a number, found {f:?}"),
            })
        })
        .collect()
}

fn parse_tableau<'a>(first: &str, lines: impl Iterator<Item = &'a str>) -> Result<Object> {
    let params = header_numbers(first, 3)?;
    let (a, i, b) = (params[0], params[1], params[2]);
    if a < 2 || b < 2 {
        return Err(Error::ShapeMismatch(format!(
            "parameters require a >= 2 and b >= 2, got (a={a}, i={i}, b={b})"
        )));
    }
    let mut rows = Vec::new();
    for (k, line) in lines.enumerate() {
        let mut row = Vec::new();
        for (c, field) in line.split_whitespace().enumerate() {
            if field == "." {
                row.push(None);
            } else {
                let v = field.parse().map_err(|_| Error::SyntaxError {
                    line: k + 2,
                    col: c + 1,
                    msg: format!("expected a number or '.', found {field:?}"),
                })?;
                row.push(Some(v));
            }
        }
        if row.len() != i + 1 {
            return Err(Error::SyntaxError {
                line: k + 2,
                col: 1,
                msg: format!("row has {} cells, need {}", row.len(), i + 1),
            });
        }
        rows.push(row);
    }
    if rows.len() != a + b - 2 {
        return Err(Error::SyntaxError {
            line: rows.len() + 1,
            col: 1,
            msg: format!("{} grid rows, need {}", rows.len(), a + b - 2),
        });
    }
    Ok(Object::Tableau(SkewTableau::from_rows(a, i, b, rows)?))
}

fn parse_subdivision<'a>(first: &str, mut lines: impl Iterator<Item = &'a str>) -> Result<Object> {
    let params = header_numbers(first, 1)?;
    let n = params[0];
    let mut chords = Vec::new();
    if let Some(line) = lines.next() {
        for (k, field) in line.split(',').enumerate() {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let parts: Vec<&str> = field.split('-').collect();
            let parsed: Option<(usize, usize)> = match parts.as_slice() {
                [p, q] => p.parse().ok().zip(q.parse().ok()),
                _ => None,
            };
            let Some((p, q)) = parsed else {
                return Err(Error::SyntaxError {
                    line: 2,
                    col: k + 1,
                    msg: format!("expected a chord like 2-4, found {field:?}"),
                });
            };
            chords.push((p, q));
        }
    }
    if lines.next().is_some() {
        return Err(Error::SyntaxError {
            line: 3,
            col: 1,
            msg: "a subdivision has a header line and one chord line".into(),
        });
    }
    Ok(Object::Subdivision(PolygonSubdivision::new(n, chords)?))
}

fn parse_structured(text: &str) -> Result<Object> {
    let record: Record = serde_json::from_str(text).map_err(|e| Error::SyntaxError {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    match record {
        Record::Skyt { params, payload } => Ok(Object::Tableau(SkewTableau::from_rows(
            params.a, params.i, params.b, payload,
        )?)),
        Record::Dyck { params, payload } => {
            let mut steps = Vec::with_capacity(payload.len());
            for (k, s) in payload.iter().enumerate() {
                match s.as_str() {
                    "U" => steps.push(crate::dyck::Step::Up),
                    "D" => steps.push(crate::dyck::Step::Down),
                    other => {
                        return Err(Error::SyntaxError {
                            line: 1,
                            col: k + 1,
                            msg: format!("step must be \"U\" or \"D\", found {other:?}"),
                        })
                    }
                }
            }
            let path = DyckPath::new(steps)?;
            if path.semi_length() != params.n {
                return Err(Error::SyntaxError {
                    line: 1,
                    col: 1,
                    msg: format!(
                        "declared n={} but the path has n={}",
                        params.n,
                        path.semi_length()
                    ),
                });
            }
            Ok(Object::Path(path))
        }
        Record::Poly { params, payload } => Ok(Object::Subdivision(PolygonSubdivision::new(
            params.n, payload,
        )?)),
    }
}
