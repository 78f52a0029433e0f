//! Group definition files.
//!
//! ```text
//! # S3
//! degree 3
//! (0 1 2)
//! (0 1)
//! ```
//!
//! The first non-comment line must be `degree N`; every later line is one
//! generator in disjoint-cycle notation. Blank lines and `#` comments are
//! skipped.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| parse_err(format!("expected `degree N`, found {line:?}")))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("bad degree {:?}", rest.trim())))?;
                if n == 0 {
                    return Err(parse_err("degree must be positive".into()));
                }
                degree = Some(n);
            }
            Some(n) => {
                let g = Perm::parse_cycles(n, line).map_err(|e| {
                    parse_err(match e {
                        Error::Input(m) => m,
                        other => other.to_string(),
                    })
                })?;
                gens.push(g);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `degree N` line".into(),
    })?;
    PermGroup::new(degree, gens)
}

/// Inverse of [`parse_group_file`].
pub fn emit_group_file(g: &PermGroup) -> String {
    g.to_definition_text()
}
