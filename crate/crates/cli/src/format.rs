//! Line-oriented text formats for geometries (`pasch 1`) and maps
//! (`paschmap 1`).
//!
//! Both formats allow `#` comments, blank lines, and LF or CRLF endings on
//! input. Serialization is canonical: no comments, single spaces, LF, and
//! triples in lexicographic index order.

use std::fmt::Write as _;
use std::sync::Arc;

use pasch_core::{Geometry, GeometryMap, StructureError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unsupported version {0}")]
    Version(String),
    #[error("expected `{expected}`, found `{found}`")]
    Expected { expected: &'static str, found: String },
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("malformed line")]
    Malformed,
    #[error("invalid count `{0}`")]
    BadCount(String),
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("triple count mismatch")]
    TripleCount,
    #[error("pair count mismatch")]
    PairCount,
    #[error("duplicate triple")]
    DuplicateTriple,
    #[error("duplicate source element {0}")]
    DuplicateSource(String),
    #[error("source element {0} unmapped")]
    Unmapped(String),
    #[error("unexpected end of input")]
    Eof,
    #[error(transparent)]
    Structure(StructureError),
}

/// A parse failure, with the 1-based line it refers to when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub kind: ParseErrorKind,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(line) => write!(f, "{} at line {line}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line: Some(line), kind }
}

/// Content lines as (1-based line number, tokens), comments and blanks dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

struct Lines<'a, I: Iterator<Item = (usize, Vec<&'a str>)>> {
    inner: std::iter::Peekable<I>,
    last: usize,
}

impl<'a, I: Iterator<Item = (usize, Vec<&'a str>)>> Lines<'a, I> {
    fn next(&mut self) -> Result<(usize, Vec<&'a str>), ParseError> {
        match self.inner.next() {
            Some((n, t)) => {
                self.last = n;
                Ok((n, t))
            }
            None => Err(err(self.last + 1, ParseErrorKind::Eof)),
        }
    }

    fn peek_directive(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|(_, t)| t[0])
    }

    /// `<directive> <args...>`, requiring the given directive name.
    fn directive(&mut self, name: &'static str) -> Result<(usize, Vec<&'a str>), ParseError> {
        let (n, t) = self.next()?;
        if t[0] != name {
            let kind = if KNOWN.contains(&t[0]) {
                ParseErrorKind::Expected { expected: name, found: t[0].to_string() }
            } else {
                ParseErrorKind::UnknownDirective(t[0].to_string())
            };
            return Err(err(n, kind));
        }
        Ok((n, t[1..].to_vec()))
    }
}

const KNOWN: [&str; 9] = ["pasch", "name", "elements", "identity", "triples", "paschmap", "source", "target", "pairs"];

fn parse_count(line: usize, args: &[&str]) -> Result<usize, ParseError> {
    match args {
        [c] => c.parse().map_err(|_| err(line, ParseErrorKind::BadCount(c.to_string()))),
        _ => Err(err(line, ParseErrorKind::Malformed)),
    }
}

fn check_version(line: usize, args: &[&str]) -> Result<(), ParseError> {
    match args {
        ["1"] => Ok(()),
        [v] => Err(err(line, ParseErrorKind::Version(v.to_string()))),
        _ => Err(err(line, ParseErrorKind::Malformed)),
    }
}

pub fn parse_geometry(text: &str) -> Result<Geometry, ParseError> {
    let mut lines = Lines { inner: content_lines(text).peekable(), last: 0 };
    let (n, args) = lines.directive("pasch")?;
    check_version(n, &args)?;

    let mut name = None;
    if lines.peek_directive() == Some("name") {
        let (n, args) = lines.directive("name")?;
        match args.as_slice() {
            [token] => name = Some(token.to_string()),
            _ => return Err(err(n, ParseErrorKind::Malformed)),
        }
    }

    let (n, args) = lines.directive("elements")?;
    if args.is_empty() {
        return Err(err(n, ParseErrorKind::Malformed));
    }
    let mut labels: Vec<String> = Vec::with_capacity(args.len());
    for tok in args {
        if labels.iter().any(|l| l == tok) {
            return Err(err(n, ParseErrorKind::DuplicateElement(tok.to_string())));
        }
        labels.push(tok.to_string());
    }
    let index = |line: usize, tok: &str| {
        labels
            .iter()
            .position(|l| l == tok)
            .ok_or_else(|| err(line, ParseErrorKind::UnknownElement(tok.to_string())))
    };

    let (n, args) = lines.directive("identity")?;
    let identity = match args.as_slice() {
        [tok] => index(n, tok)?,
        _ => return Err(err(n, ParseErrorKind::Malformed)),
    };

    let (count_line, args) = lines.directive("triples")?;
    let count = parse_count(count_line, &args)?;
    let mut triples = Vec::with_capacity(count);
    let mut seen = std::collections::HashSet::with_capacity(count);
    for (n, toks) in lines.inner.by_ref() {
        if triples.len() == count {
            return Err(err(n, ParseErrorKind::TripleCount));
        }
        let [a, b, c] = toks.as_slice() else {
            return Err(if KNOWN.contains(&toks[0]) {
                err(n, ParseErrorKind::TripleCount)
            } else {
                err(n, ParseErrorKind::Malformed)
            });
        };
        let t = [index(n, a)?, index(n, b)?, index(n, c)?];
        if !seen.insert(t) {
            return Err(err(n, ParseErrorKind::DuplicateTriple));
        }
        triples.push(t);
    }
    if triples.len() != count {
        return Err(err(count_line, ParseErrorKind::TripleCount));
    }
    let g = Geometry::new(labels, identity, triples).map_err(|e| ParseError { line: None, kind: ParseErrorKind::Structure(e) })?;
    Ok(match name {
        Some(name) => g.with_name(name),
        None => g,
    })
}

pub fn serialize_geometry(g: &Geometry) -> String {
    let mut out = String::from("pasch 1\n");
    if let Some(name) = g.name().filter(|n| !n.is_empty() && !n.contains('#') && !n.chars().any(char::is_whitespace)) {
        writeln!(out, "name {name}").unwrap();
    }
    writeln!(out, "elements {}", g.labels().join(" ")).unwrap();
    writeln!(out, "identity {}", g.label(g.identity())).unwrap();
    writeln!(out, "triples {}", g.delta().len()).unwrap();
    for t in g.delta() {
        writeln!(out, "{} {} {}", g.label(t[0]), g.label(t[1]), g.label(t[2])).unwrap();
    }
    out
}

/// A parsed map file before its geometries are loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDocument {
    pub source: String,
    pub target: String,
    /// `(line, source label, target label)`
    pub pairs: Vec<(usize, String, String)>,
}

pub fn parse_map(text: &str) -> Result<MapDocument, ParseError> {
    let mut lines = Lines { inner: content_lines(text).peekable(), last: 0 };
    let (n, args) = lines.directive("paschmap")?;
    check_version(n, &args)?;
    let mut path = |name: &'static str| -> Result<String, ParseError> {
        let (n, args) = lines.directive(name)?;
        match args.as_slice() {
            [p] => Ok(p.to_string()),
            _ => Err(err(n, ParseErrorKind::Malformed)),
        }
    };
    let source = path("source")?;
    let target = path("target")?;
    let (pairs_line, args) = lines.directive("pairs")?;
    let count = parse_count(pairs_line, &args)?;
    let mut pairs = Vec::with_capacity(count);
    for (n, toks) in lines.inner.by_ref() {
        if pairs.len() == count {
            return Err(err(n, ParseErrorKind::PairCount));
        }
        let [a, b] = toks.as_slice() else {
            return Err(err(n, ParseErrorKind::Malformed));
        };
        pairs.push((n, a.to_string(), b.to_string()));
    }
    if pairs.len() != count {
        return Err(err(pairs_line, ParseErrorKind::PairCount));
    }
    Ok(MapDocument { source, target, pairs })
}

impl MapDocument {
    /// Builds the map against loaded geometries. Flags stay unchecked.
    pub fn resolve(&self, source: Arc<Geometry>, target: Arc<Geometry>) -> Result<GeometryMap, ParseError> {
        let mut table: Vec<Option<usize>> = vec![None; source.len()];
        for (line, a, b) in &self.pairs {
            let x = source.index_of(a).ok_or_else(|| err(*line, ParseErrorKind::UnknownElement(a.clone())))?;
            let y = target.index_of(b).ok_or_else(|| err(*line, ParseErrorKind::UnknownElement(b.clone())))?;
            if table[x].replace(y).is_some() {
                return Err(err(*line, ParseErrorKind::DuplicateSource(a.clone())));
            }
        }
        let table = table
            .iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| ParseError { line: None, kind: ParseErrorKind::Unmapped(source.label(x).to_string()) }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GeometryMap::new(source, target, table).expect("table built from valid indices"))
    }
}

pub fn serialize_map(f: &GeometryMap, source_path: &str, target_path: &str) -> String {
    let mut out = String::from("paschmap 1\n");
    writeln!(out, "source {source_path}").unwrap();
    writeln!(out, "target {target_path}").unwrap();
    writeln!(out, "pairs {}", f.table().len()).unwrap();
    for (x, &y) in f.table().iter().enumerate() {
        writeln!(out, "{} {}", f.source().label(x), f.target().label(y)).unwrap();
    }
    out
}
