//! The line-based graph file format.
//!
//! ```text
//! # comment
//! vertex a
//! vertex b
//! edge a b      # plain edge [a,b]: a and b commute
//! arrow a b     # oriented edge [a,b>: b a b^-1 = a^-1 (the target b dominates)
//! ```
//!
//! Lines are `vertex <name>`, `edge <u> <v>`, `arrow <origin> <target>`,
//! blank, or comments starting with `#` (also allowed after a declaration).
//! Parsing either yields a validated graph or a positioned error.

use std::fmt;

use thiserror::Error;

use crate::graph::{GraphBuilder, GraphError, MixedGraph};

/// A parse failure with its 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct GraphParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl GraphParseError {
    fn new(line: usize, column: usize, message: impl fmt::Display) -> Self {
        GraphParseError { line, column, message: message.to_string() }
    }
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let code = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices() {
        if c.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((b + 1, &code[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((b + 1, &code[b..]));
    }
    out
}

/// Parses the text format into a validated [`MixedGraph`].
pub fn parse_graph(text: &str) -> Result<MixedGraph, GraphParseError> {
    let mut builder = GraphBuilder::new();
    let mut last_line = 1;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        last_line = lineno;
        let tokens = tokens_with_columns(line);
        let Some(&(kw_col, keyword)) = tokens.first() else {
            continue;
        };
        let args = &tokens[1..];
        let expect_args = |n: usize| -> Result<(), GraphParseError> {
            if args.len() == n {
                Ok(())
            } else {
                Err(GraphParseError::new(
                    lineno,
                    kw_col,
                    format!("`{keyword}` takes {n} argument{}", if n == 1 { "" } else { "s" }),
                ))
            }
        };
        // Maps builder errors onto the argument they complain about.
        let position = |err: &GraphError| -> usize {
            let culprit = match err {
                GraphError::BadIdentifier { name }
                | GraphError::DuplicateVertex { name }
                | GraphError::UnknownVertex { name }
                | GraphError::SelfLoop { name } => Some(name.as_str()),
                _ => None,
            };
            culprit
                .and_then(|name| args.iter().find(|(_, t)| *t == name))
                .map(|&(col, _)| col)
                .unwrap_or(kw_col)
        };
        let result = match keyword {
            "vertex" => {
                expect_args(1)?;
                builder.vertex(args[0].1)
            }
            "edge" => {
                expect_args(2)?;
                builder.plain_edge(args[0].1, args[1].1)
            }
            "arrow" => {
                expect_args(2)?;
                builder.arrow(args[0].1, args[1].1)
            }
            other => {
                return Err(GraphParseError::new(
                    lineno,
                    kw_col,
                    format!("expected `vertex`, `edge`, or `arrow`, found `{other}`"),
                ));
            }
        };
        if let Err(err) = result {
            return Err(GraphParseError::new(lineno, position(&err), err));
        }
    }
    builder
        .finish()
        .map_err(|err| GraphParseError::new(last_line, 1, err))
}

/// Renders a graph back into the text format; parsing the result yields an
/// equal graph.
pub fn format_graph(g: &MixedGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str("vertex ");
        out.push_str(v.as_str());
        out.push('\n');
    }
    for edge in g.edges() {
        match edge {
            crate::graph::Edge::Plain(u, v) => {
                out.push_str("edge ");
                out.push_str(u.as_str());
                out.push(' ');
                out.push_str(v.as_str());
            }
            crate::graph::Edge::Oriented(e) => {
                out.push_str("arrow ");
                out.push_str(e.origin.as_str());
                out.push(' ');
                out.push_str(e.target.as_str());
            }
        }
        out.push('\n');
    }
    out
}
