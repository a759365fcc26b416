//! The line-based quiver description format.
//!
//! ```text
//! quiver
//! vertex 1
//! vertex 2
//! arrow a 1 2
//! relation a b
//! end
//! ```
//!
//! `#` starts a comment. Blank lines are ignored.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::{
    check_gentle, resolve_relations, AlgebraError, GentlePresentation, GentleReport, Quiver,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A parsed quiver with relations; not yet checked for gentleness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub relations: BTreeSet<(usize, usize)>,
}

impl QuiverFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        let mut relations = Vec::new();
        let (mut opened, mut closed) = (false, false);
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| FormatError::Syntax {
                line: n + 1,
                message: message.to_string(),
            };
            if closed {
                return Err(err("content after `end`"));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match (opened, tokens.as_slice()) {
                (false, ["quiver"]) => opened = true,
                (false, _) => return Err(err("expected `quiver`")),
                (true, ["vertex", id]) => vertices.push(id.to_string()),
                (true, ["arrow", id, s, t]) => {
                    arrows.push((id.to_string(), s.to_string(), t.to_string()))
                }
                (true, ["relation", a, b]) => relations.push((a.to_string(), b.to_string())),
                (true, ["end"]) => closed = true,
                (true, [kw, ..]) => return Err(err(&format!("unexpected `{kw}`"))),
                (true, []) => unreachable!("blank lines are skipped"),
            }
        }
        if !opened {
            return Err(FormatError::Missing("quiver"));
        }
        if !closed {
            return Err(FormatError::Missing("end"));
        }
        let quiver = Quiver::new(vertices, arrows)?;
        let relations = resolve_relations(
            &quiver,
            relations.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        Ok(QuiverFile { quiver, relations })
    }

    pub fn report(&self) -> Result<GentleReport, AlgebraError> {
        check_gentle(&self.quiver, &self.relations)
    }

    /// The presentation, failing with the report when not gentle.
    pub fn presentation(&self) -> Result<GentlePresentation, AlgebraError> {
        let report = self.report()?;
        if !report.is_gentle() {
            return Err(AlgebraError::NotGentle(report));
        }
        GentlePresentation::new(self.quiver.clone(), self.relations.clone())
    }
}

pub fn presentation_text(p: &GentlePresentation) -> String {
    let q = p.quiver();
    let mut out = String::from("quiver\n");
    for v in q.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            a.id,
            q.vertex(a.source),
            q.vertex(a.target)
        ));
    }
    for (a, b) in p.relation_ids() {
        out.push_str(&format!("relation {a} {b}\n"));
    }
    out.push_str("end\n");
    out
}
