//! The group file format:
//!
//! ```text
//! # comment
//! n: 12
//! generators: [(1,2,3,4,5,6)(7,8,9,10,11,12), (1,9)(2,10)(3,7)(4,8)(5,11)(6,12)]
//! ```
//!
//! The generator list may span several lines and entries may be quoted.

use thiserror::Error;

use crate::group::{GroupError, PermGroup};
use crate::perm::{parse_perm, Perm, PermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("generator {index}: {source}")]
    Generator { index: usize, source: PermError },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile, GroupFileError> {
        let mut degree: Option<usize> = None;
        let mut gens_text: Option<String> = None;
        let mut open: Option<(usize, String)> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if let Some((_, buf)) = open.as_mut() {
                buf.push(' ');
                buf.push_str(line);
                if line.contains(']') {
                    gens_text = open.take().map(|(_, b)| b);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| GroupFileError::Syntax {
                line: line_no,
                msg: "expected `key: value`".into(),
            })?;
            match key.trim() {
                "n" => {
                    let v = value.trim().parse::<usize>().map_err(|_| GroupFileError::Syntax {
                        line: line_no,
                        msg: format!("`{}` is not a degree", value.trim()),
                    })?;
                    degree = Some(v);
                }
                "generators" => {
                    let v = value.trim().to_string();
                    if !v.starts_with('[') {
                        return Err(GroupFileError::Syntax {
                            line: line_no,
                            msg: "generators must be a bracketed list".into(),
                        });
                    }
                    if v.contains(']') {
                        gens_text = Some(v);
                    } else {
                        open = Some((line_no, v));
                    }
                }
                other => {
                    return Err(GroupFileError::Syntax {
                        line: line_no,
                        msg: format!("unknown field `{other}`"),
                    })
                }
            }
        }
        if let Some((line, _)) = open {
            return Err(GroupFileError::Syntax {
                line,
                msg: "unterminated generator list".into(),
            });
        }
        let degree = degree.ok_or(GroupFileError::Missing("n"))?;
        if degree == 0 {
            return Err(GroupFileError::Generator {
                index: 0,
                source: PermError::ZeroDegree,
            });
        }
        let body = gens_text.ok_or(GroupFileError::Missing("generators"))?;
        let inner = body
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or(GroupFileError::Syntax {
                line: 0,
                msg: "generators must be a bracketed list".into(),
            })?;
        let generators = split_top_level(inner)
            .into_iter()
            .enumerate()
            .map(|(index, s)| {
                let s = s.trim().trim_matches('"');
                parse_perm(s, degree).map_err(|source| GroupFileError::Generator { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupFile { degree, generators })
    }

    pub fn group(&self, cap: usize) -> Result<PermGroup, GroupFileError> {
        Ok(PermGroup::closure(self.degree, &self.generators, cap)?)
    }

    pub fn render(g: &PermGroup) -> String {
        format!(
            "n: {}\ngenerators: [{}]\n",
            g.degree(),
            g.generator_strings().join(", ")
        )
    }
}

/// Splits on commas outside parentheses; empty entries are dropped.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().filter(|p| !p.trim().is_empty()).collect()
}
