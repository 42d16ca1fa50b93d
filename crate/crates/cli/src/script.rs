//! The line-oriented analysis language.
//!
//! ```text
//! ring semigroup 4 9 10
//! ideal I = t^8, t^9, t^10
//! ideal J = t^8
//! check gorenstein-G I J
//! ```

use graded_core::presentation::Algebra;
use graded_core::{parse_element, Error, Field, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDecl {
    Semigroup(Vec<u32>),
    Quotient { variables: Vec<String>, relations: Vec<Vec<u32>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub generators: Vec<String>,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    CheckGorenstein { ideal: String, reduction: String },
    CheckQuasiGorenstein { ideal: String, reduction: String },
    AnalyzeFiltration { ideal: String, reduction: Option<String> },
    Present { algebra: Algebra, ideal: String },
}

impl Command {
    pub fn text(&self) -> String {
        match self {
            Command::CheckGorenstein { ideal, reduction } => format!("check gorenstein-G {ideal} {reduction}"),
            Command::CheckQuasiGorenstein { ideal, reduction } => {
                format!("check quasi-gorenstein {ideal} {reduction}")
            }
            Command::AnalyzeFiltration { ideal, reduction: Some(j) } => format!("analyze filtration {ideal} {j}"),
            Command::AnalyzeFiltration { ideal, reduction: None } => format!("analyze filtration {ideal}"),
            Command::Present { algebra, ideal } => {
                let a = match algebra {
                    Algebra::Graded => "G",
                    Algebra::Fiber => "F",
                };
                format!("present {a} {ideal}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisScript {
    pub ring: RingDecl,
    pub ideals: Vec<IdealDecl>,
    pub commands: Vec<Command>,
}

impl AnalysisScript {
    /// Declarations plus commands.
    pub fn len(&self) -> usize {
        1 + self.ideals.len() + self.commands.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ideal(&self, name: &str) -> Option<&IdealDecl> {
        self.ideals.iter().find(|d| d.name == name)
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated words of one line with their 1-based columns.
struct Words<'a> {
    line: usize,
    text: &'a str,
    words: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Words<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        let mut words = Vec::new();
        let mut start = None;
        for (i, ch) in text.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    words.push((s, &text[s..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            words.push((s, &text[s..]));
        }
        Words { line, text, words, pos: 0 }
    }

    fn column(&self) -> usize {
        match self.words.get(self.pos) {
            Some((c, _)) => c + 1,
            None => self.text.trim_end().len() + 1,
        }
    }

    fn next(&mut self, expected: &str) -> Result<(usize, &'a str)> {
        match self.words.get(self.pos) {
            Some(&(c, w)) => {
                self.pos += 1;
                Ok((c + 1, w))
            }
            None => Err(err(self.line, self.column(), format!("expected {expected}, found end of line"))),
        }
    }

    fn keyword(&mut self, options: &[&str]) -> Result<&'a str> {
        let expected = options.iter().map(|o| format!("`{o}`")).collect::<Vec<_>>().join(" or ");
        let (col, w) = self.next(&expected)?;
        if options.contains(&w) {
            Ok(w)
        } else {
            Err(err(self.line, col, format!("expected {expected}, found `{w}`")))
        }
    }

    fn name(&mut self) -> Result<(usize, &'a str)> {
        let (col, w) = self.next("a name")?;
        if is_identifier(w) {
            Ok((col, w))
        } else {
            Err(err(self.line, col, format!("expected a name, found `{w}`")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.words.len()
    }

    fn finish(&self) -> Result<()> {
        match self.words.get(self.pos) {
            None => Ok(()),
            Some((c, w)) => Err(err(self.line, c + 1, format!("expected end of line, found `{w}`"))),
        }
    }

    /// The unparsed remainder of the line and its starting column.
    fn rest(&self) -> (usize, &'a str) {
        match self.words.get(self.pos) {
            Some(&(c, _)) => (c + 1, &self.text[c..]),
            None => (self.column(), ""),
        }
    }
}

fn is_identifier(w: &str) -> bool {
    let mut chars = w.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Splits a comma-separated list, returning each trimmed item and its column.
fn split_list(start: usize, text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((start + offset + lead, piece.trim()));
        offset += piece.len() + 1;
    }
    out
}

/// Parses `x^2*y` over the given variables.
pub fn parse_monomial(text: &str, variables: &[String], line: usize, column: usize) -> Result<Vec<u32>> {
    let mut exps = vec![0u32; variables.len()];
    if text == "1" {
        return Ok(exps);
    }
    let mut offset = 0;
    for factor in text.split('*') {
        let col = column + offset;
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .parse()
                    .map_err(|_| err(line, col + n.len() + 1, format!("expected an exponent, found `{e}`")))?;
                (n, e)
            }
            None => (factor, 1),
        };
        match variables.iter().position(|v| v == name) {
            Some(i) => exps[i] += exp,
            None if name.is_empty() => return Err(err(line, col, "expected a variable")),
            None => return Err(err(line, col, format!("expected a variable, found `{name}`"))),
        }
        offset += factor.len() + 1;
    }
    Ok(exps)
}

/// Parses a script, reporting the first error with its line and column.
pub fn parse_script(text: &str) -> Result<AnalysisScript> {
    let mut ring: Option<RingDecl> = None;
    let mut ideals: Vec<IdealDecl> = Vec::new();
    let mut commands = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut words = Words::new(line, body);
        if words.at_end() {
            continue;
        }
        let head = words.keyword(&["ring", "ideal", "check", "analyze", "present"])?;
        if head != "ring" && ring.is_none() {
            return Err(err(line, 1, "expected a `ring` declaration before this line"));
        }
        match head {
            "ring" => {
                if ring.is_some() {
                    return Err(err(line, 1, "ring is already declared"));
                }
                ring = Some(parse_ring(&mut words)?);
            }
            "ideal" => {
                let (col, name) = words.name()?;
                if ideals.iter().any(|d| d.name == name) {
                    return Err(err(line, col, format!("ideal `{name}` is already declared")));
                }
                words.keyword(&["="])?;
                let (start, rest) = words.rest();
                let items = split_list(start, rest);
                let mut generators = Vec::new();
                for (c, item) in items {
                    if item.is_empty() {
                        return Err(err(line, c, "expected a ring element"));
                    }
                    check_element(ring.as_ref().unwrap(), item, line, c)?;
                    generators.push(item.to_string());
                }
                ideals.push(IdealDecl { name: name.to_string(), generators, line });
            }
            "check" => {
                let kind = words.keyword(&["gorenstein-G", "quasi-gorenstein"])?;
                let ideal = reference(&mut words, &ideals)?;
                let reduction = reference(&mut words, &ideals)?;
                words.finish()?;
                commands.push(if kind == "gorenstein-G" {
                    Command::CheckGorenstein { ideal, reduction }
                } else {
                    Command::CheckQuasiGorenstein { ideal, reduction }
                });
            }
            "analyze" => {
                words.keyword(&["filtration"])?;
                let ideal = reference(&mut words, &ideals)?;
                let reduction = if words.at_end() { None } else { Some(reference(&mut words, &ideals)?) };
                words.finish()?;
                commands.push(Command::AnalyzeFiltration { ideal, reduction });
            }
            _ => {
                let which = words.keyword(&["G", "F"])?;
                let ideal = reference(&mut words, &ideals)?;
                words.finish()?;
                let algebra = if which == "G" { Algebra::Graded } else { Algebra::Fiber };
                commands.push(Command::Present { algebra, ideal });
            }
        }
    }
    let ring = ring.ok_or_else(|| err(text.lines().count().max(1), 1, "expected a `ring` declaration"))?;
    Ok(AnalysisScript { ring, ideals, commands })
}

fn reference(words: &mut Words, ideals: &[IdealDecl]) -> Result<String> {
    let (_, name) = words.name()?;
    if ideals.iter().any(|d| d.name == name) {
        Ok(name.to_string())
    } else {
        Err(Error::UnknownName(name.to_string()))
    }
}

fn parse_ring(words: &mut Words) -> Result<RingDecl> {
    let line = words.line;
    match words.keyword(&["semigroup", "quotient"])? {
        "semigroup" => {
            let mut gens = Vec::new();
            while !words.at_end() {
                let (col, w) = words.next("a generator")?;
                let g: u32 = w
                    .parse()
                    .ok()
                    .filter(|&g| g > 0)
                    .ok_or_else(|| err(line, col, format!("expected a positive integer, found `{w}`")))?;
                gens.push(g);
            }
            if gens.is_empty() {
                return Err(err(line, words.column(), "expected a positive integer"));
            }
            Ok(RingDecl::Semigroup(gens))
        }
        _ => {
            let mut variables: Vec<String> = Vec::new();
            loop {
                let (col, w) = words.next("a variable or `mod`")?;
                if w == "mod" {
                    break;
                }
                if !is_identifier(w) || variables.iter().any(|v| v == w) {
                    return Err(err(line, col, format!("expected a new variable or `mod`, found `{w}`")));
                }
                variables.push(w.to_string());
            }
            if variables.is_empty() {
                return Err(err(line, words.column(), "expected at least one variable before `mod`"));
            }
            let (start, rest) = words.rest();
            let mut relations = Vec::new();
            for (c, item) in split_list(start, rest) {
                if item.is_empty() {
                    return Err(err(line, c, "expected a monomial"));
                }
                relations.push(parse_monomial(item, &variables, line, c)?);
            }
            Ok(RingDecl::Quotient { variables, relations })
        }
    }
}

fn check_element(ring: &RingDecl, item: &str, line: usize, column: usize) -> Result<()> {
    match ring {
        RingDecl::Semigroup(_) => parse_element(item, Field::Rational).map(|_| ()).map_err(|e| match e {
            Error::Parse { column: c, message, .. } => err(line, column + c - 1, message),
            other => other,
        }),
        RingDecl::Quotient { variables, .. } => parse_monomial(item, variables, line, column).map(|_| ()),
    }
}
