//! Plain-text edge lists.
//!
//! ```text
//! tournament 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The header is `digraph <n>` or `tournament <n>`, followed by one `<u> <v>`
//! line per edge `u -> v`. Writers emit edges sorted by `(u, v)` with LF line
//! endings, so equal graphs serialise to identical bytes.

use std::fmt::Write as _;
use std::io::{self, BufRead};

use thiserror::Error;

use crate::graph::{Digraph, GraphError, Tournament};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Digraph(Digraph),
    Tournament(Tournament),
}

impl GraphFile {
    pub fn as_digraph(&self) -> &Digraph {
        match self {
            GraphFile::Digraph(g) => g,
            GraphFile::Tournament(t) => t,
        }
    }

    fn header(&self) -> &'static str {
        match self {
            GraphFile::Digraph(_) => "digraph",
            GraphFile::Tournament(_) => "tournament",
        }
    }

    pub fn to_text(&self) -> String {
        let g = self.as_digraph();
        let mut out = format!("{} {}\n", self.header(), g.order());
        for (u, v) in g.edges() {
            writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Self::read(text.as_bytes())
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self, FormatError> {
        let mut lines = reader.lines().enumerate();
        let (kind, n) = match lines.next() {
            Some((_, line)) => parse_header(&line?)?,
            None => return Err(syntax(1, "missing header")),
        };
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(' ');
            let (u, v) = match (fields.next(), fields.next(), fields.next()) {
                (Some(u), Some(v), None) => (parse_vertex(idx + 1, u)?, parse_vertex(idx + 1, v)?),
                _ => return Err(syntax(idx + 1, "expected '<u> <v>'")),
            };
            edges.push((u, v));
        }
        let g = Digraph::from_edges(n, edges)?;
        Ok(match kind {
            Kind::Digraph => GraphFile::Digraph(g),
            Kind::Tournament => GraphFile::Tournament(Tournament::try_from(g)?),
        })
    }
}

enum Kind {
    Digraph,
    Tournament,
}

fn syntax(line: usize, message: &str) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.to_string(),
    }
}

fn parse_header(line: &str) -> Result<(Kind, usize), FormatError> {
    let (kind, n) = line
        .split_once(' ')
        .ok_or_else(|| syntax(1, "expected '<digraph|tournament> <n>'"))?;
    let kind = match kind {
        "digraph" => Kind::Digraph,
        "tournament" => Kind::Tournament,
        other => return Err(syntax(1, &format!("unknown graph kind '{other}'"))),
    };
    let n = n
        .parse()
        .map_err(|_| syntax(1, &format!("bad vertex count '{n}'")))?;
    Ok((kind, n))
}

fn parse_vertex(line: usize, field: &str) -> Result<usize, FormatError> {
    field
        .parse()
        .map_err(|_| syntax(line, &format!("bad vertex '{field}'")))
}
