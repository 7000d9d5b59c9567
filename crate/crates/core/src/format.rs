//! Text and JSON serialization of multigraphs.
//!
//! The MGR text format:
//!
//! ```text
//! # optional comment lines
//! n 5
//! e 0 1 3
//! e 0 4 3
//! ```
//!
//! Serialized output lists one `e` line per adjacent pair with `u < v`, sorted
//! by `(u, v)`, with LF line endings. The JSON form is
//! `{"n": 5, "edges": [[0, 1, 3], ...]}` with the same ordering.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn serialize(g: &Multigraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for p in g.pairs() {
        out.push_str(&format!("e {} {} {}\n", p.u, p.v, p.mult));
    }
    out
}

pub fn parse(text: &str) -> Result<Multigraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<u64> = fields
            .map(|f| {
                f.parse::<u64>().map_err(|_| Error::Syntax {
                    line,
                    message: format!("expected a non-negative integer, found `{f}`"),
                })
            })
            .collect::<Result<_>>()?;
        match (tag, nums.as_slice()) {
            ("n", [count]) => {
                if n.is_some() {
                    return Err(Error::Syntax {
                        line,
                        message: "duplicate `n` line".into(),
                    });
                }
                n = Some(*count as usize);
            }
            ("e", [u, v, m]) => {
                if n.is_none() {
                    return Err(Error::Syntax {
                        line,
                        message: "`e` line before `n` line".into(),
                    });
                }
                let m = u32::try_from(*m).map_err(|_| Error::Syntax {
                    line,
                    message: "multiplicity too large".into(),
                })?;
                edges.push((*u as usize, *v as usize, m));
            }
            ("n", _) => {
                return Err(Error::Syntax {
                    line,
                    message: "expected `n <count>`".into(),
                })
            }
            ("e", _) => {
                return Err(Error::Syntax {
                    line,
                    message: "expected `e <u> <v> <mult>`".into(),
                })
            }
            (other, _) => {
                return Err(Error::Syntax {
                    line,
                    message: format!("unknown record `{other}`"),
                })
            }
        }
    }
    let n = n.ok_or_else(|| Error::Syntax {
        line: text.lines().count() + 1,
        message: "missing `n <count>` line".into(),
    })?;
    Multigraph::build(n, &edges)
}

/// JSON form of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u64; 3]>,
}

impl From<&Multigraph> for GraphJson {
    fn from(g: &Multigraph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g
                .pairs()
                .iter()
                .map(|p| [p.u as u64, p.v as u64, p.mult as u64])
                .collect(),
        }
    }
}

impl TryFrom<GraphJson> for Multigraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let edges = j
            .edges
            .iter()
            .map(|&[u, v, m]| {
                let m = u32::try_from(m)
                    .map_err(|_| Error::BadParameter("multiplicity too large".into()))?;
                Ok((u as usize, v as usize, m))
            })
            .collect::<Result<Vec<_>>>()?;
        Multigraph::build(j.n, &edges)
    }
}

pub fn to_json(g: &Multigraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json is serializable")
}

pub fn from_json(text: &str) -> Result<Multigraph> {
    let j: GraphJson = serde_json::from_str(text)?;
    j.try_into()
}

/// Accepts either the JSON form (first non-blank character `{`) or MGR text.
pub fn parse_any(text: &str) -> Result<Multigraph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        parse(text)
    }
}
