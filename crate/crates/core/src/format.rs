//! Text format for algebra definitions.
//!
//! ```text
//! algebra <name>
//! size <n>
//! labels <l0> ... <l{n-1}>
//! bot <label>
//! top <label>
//! mul            # n rows of n labels, row i column j = (element i) op (element j)
//! imp
//! meet           # optional
//! join           # optional
//! end
//! ```
//!
//! `#` starts a comment. A corpus file is a sequence of such records.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{AlgebraTables, Element, FiniteMtlAlgebra};
use crate::error::MtlError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("line {line}: {source}")]
    Construct {
        line: usize,
        #[source]
        source: MtlError,
    },
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize_line(raw: &str) -> Vec<Token<'_>> {
    let content = match raw.find('#') {
        Some(i) => &raw[..i],
        None => raw,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &content[s..i],
                    col: content[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &content[s..],
            col: content[..s].chars().count() + 1,
        });
    }
    out
}

#[derive(Default)]
struct Record {
    name: Option<String>,
    size: Option<usize>,
    labels: Option<Vec<String>>,
    bot: Option<String>,
    top: Option<String>,
    tables: [Option<Vec<Vec<usize>>>; 4],
    start_line: usize,
}

const BLOCKS: [&str; 4] = ["mul", "imp", "meet", "join"];

struct Parser<'a> {
    lines: Vec<(usize, Vec<Token<'a>>)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, tokenize_line(l)))
            .filter(|(_, toks)| !toks.is_empty())
            .collect();
        Parser { lines, pos: 0 }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.lines.len()
    }

    fn last_line(&self) -> usize {
        self.lines.last().map(|l| l.0).unwrap_or(1)
    }

    fn record(&mut self) -> Result<FiniteMtlAlgebra, ParseError> {
        let mut rec = Record {
            start_line: self.lines[self.pos].0,
            ..Default::default()
        };
        loop {
            let Some((line, toks)) = self.lines.get(self.pos).cloned() else {
                return Err(syntax(self.last_line() + 1, 1, "missing `end`"));
            };
            self.pos += 1;
            let head = toks[0];
            let args = &toks[1..];
            let one_arg = |what: &str| -> Result<&'a str, ParseError> {
                match args {
                    [t] => Ok(t.text),
                    [] => Err(syntax(
                        line,
                        head.col,
                        format!("`{what}` needs one argument"),
                    )),
                    [_, extra, ..] => Err(syntax(line, extra.col, "unexpected token")),
                }
            };
            match head.text {
                "algebra" => {
                    if rec.name.is_some() {
                        return Err(syntax(line, head.col, "duplicate `algebra` line"));
                    }
                    rec.name = Some(one_arg("algebra")?.to_string());
                }
                "size" => {
                    if rec.size.is_some() {
                        return Err(syntax(line, head.col, "duplicate `size` line"));
                    }
                    let t = one_arg("size")?;
                    let n: usize = t
                        .parse()
                        .map_err(|_| syntax(line, args[0].col, format!("bad size {t:?}")))?;
                    if !(2..=64).contains(&n) {
                        return Err(syntax(
                            line,
                            args[0].col,
                            format!("size {n} outside 2..=64"),
                        ));
                    }
                    rec.size = Some(n);
                }
                "labels" => {
                    if rec.labels.is_some() {
                        return Err(syntax(line, head.col, "duplicate `labels` line"));
                    }
                    let n = rec
                        .size
                        .ok_or_else(|| syntax(line, head.col, "`labels` before `size`"))?;
                    if args.len() != n {
                        return Err(syntax(
                            line,
                            head.col,
                            format!("expected {n} labels, found {}", args.len()),
                        ));
                    }
                    let mut labels: Vec<String> = Vec::with_capacity(n);
                    for t in args {
                        if labels.iter().any(|l| l == t.text) {
                            return Err(syntax(
                                line,
                                t.col,
                                format!("duplicate label {:?}", t.text),
                            ));
                        }
                        labels.push(t.text.to_string());
                    }
                    rec.labels = Some(labels);
                }
                "bot" | "top" => {
                    let slot = if head.text == "bot" {
                        &mut rec.bot
                    } else {
                        &mut rec.top
                    };
                    if slot.is_some() {
                        return Err(syntax(
                            line,
                            head.col,
                            format!("duplicate `{}` line", head.text),
                        ));
                    }
                    let v = match args {
                        [t] => t.text.to_string(),
                        _ => return Err(syntax(line, head.col, "expected exactly one label")),
                    };
                    *slot = Some(v);
                }
                "mul" | "imp" | "meet" | "join" => {
                    if !args.is_empty() {
                        return Err(syntax(line, args[0].col, "block header takes no arguments"));
                    }
                    let idx = BLOCKS.iter().position(|b| *b == head.text).unwrap();
                    if rec.tables[idx].is_some() {
                        return Err(syntax(
                            line,
                            head.col,
                            format!("duplicate `{}` block", head.text),
                        ));
                    }
                    let labels = rec
                        .labels
                        .as_ref()
                        .ok_or_else(|| syntax(line, head.col, "table before `labels`"))?;
                    let n = labels.len();
                    let mut rows = Vec::with_capacity(n);
                    for r in 0..n {
                        let Some((row_line, row)) = self.lines.get(self.pos).cloned() else {
                            return Err(syntax(
                                self.last_line() + 1,
                                1,
                                format!("`{}` block ends after {r} of {n} rows", head.text),
                            ));
                        };
                        self.pos += 1;
                        if row.len() != n {
                            return Err(syntax(
                                row_line,
                                1,
                                format!(
                                    "`{}` row {} has {} entries, expected {n}",
                                    head.text,
                                    r + 1,
                                    row.len()
                                ),
                            ));
                        }
                        let mut vals = Vec::with_capacity(n);
                        for t in &row {
                            let v = labels.iter().position(|l| l == t.text).ok_or_else(|| {
                                syntax(row_line, t.col, format!("unknown label {:?}", t.text))
                            })?;
                            vals.push(v);
                        }
                        rows.push(vals);
                    }
                    rec.tables[idx] = Some(rows);
                }
                "end" => {
                    if !args.is_empty() {
                        return Err(syntax(line, args[0].col, "unexpected token after `end`"));
                    }
                    return finish(rec, line);
                }
                other => {
                    return Err(syntax(
                        line,
                        head.col,
                        format!("unknown directive {other:?}"),
                    ));
                }
            }
        }
    }
}

fn finish(rec: Record, end_line: usize) -> Result<FiniteMtlAlgebra, ParseError> {
    let missing = |what: &str| syntax(end_line, 1, format!("missing required `{what}`"));
    let name = rec.name.ok_or_else(|| missing("algebra"))?;
    rec.size.ok_or_else(|| missing("size"))?;
    let labels = rec.labels.ok_or_else(|| missing("labels"))?;
    let find = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| syntax(end_line, 1, format!("unknown label {l:?}")))
    };
    let bot = find(&rec.bot.ok_or_else(|| missing("bot"))?)?;
    let top = find(&rec.top.ok_or_else(|| missing("top"))?)?;
    let [mul, imp, meet, join] = rec.tables;
    let tables = AlgebraTables {
        name,
        labels,
        bot,
        top,
        mul: mul.ok_or_else(|| missing("mul"))?,
        imp: imp.ok_or_else(|| missing("imp"))?,
        meet,
        join,
    };
    FiniteMtlAlgebra::construct(tables).map_err(|source| ParseError::Construct {
        line: rec.start_line,
        source,
    })
}

/// Parses exactly one algebra record.
pub fn parse_algebra(text: &str) -> Result<FiniteMtlAlgebra, ParseError> {
    let mut p = Parser::new(text);
    if p.at_end() {
        return Err(syntax(1, 1, "empty input"));
    }
    let a = p.record()?;
    if !p.at_end() {
        let (line, toks) = &p.lines[p.pos];
        return Err(syntax(*line, toks[0].col, "trailing content after `end`"));
    }
    Ok(a)
}

/// Parses a corpus: zero or more algebra records.
pub fn parse_corpus(text: &str) -> Result<Vec<FiniteMtlAlgebra>, ParseError> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    while !p.at_end() {
        out.push(p.record()?);
    }
    Ok(out)
}

/// Serializes an algebra. Lattice tables are written only when `with_lattice` is set.
pub fn serialize(a: &FiniteMtlAlgebra, with_lattice: bool) -> String {
    let mut s = String::new();
    let n = a.size();
    let _ = writeln!(
        s,
        "algebra {}",
        if a.name().is_empty() {
            "unnamed"
        } else {
            a.name()
        }
    );
    let _ = writeln!(s, "size {n}");
    let _ = writeln!(s, "labels {}", a.labels().join(" "));
    let _ = writeln!(s, "bot {}", a.label(a.bot()));
    let _ = writeln!(s, "top {}", a.label(a.top()));
    let mut block = |title: &str, op: fn(&FiniteMtlAlgebra, Element, Element) -> Element| {
        let _ = writeln!(s, "{title}");
        for x in a.elements() {
            let row: Vec<&str> = a.elements().map(|y| a.label(op(a, x, y))).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
    };
    block("mul", FiniteMtlAlgebra::mul);
    block("imp", FiniteMtlAlgebra::imp);
    if with_lattice {
        block("meet", FiniteMtlAlgebra::meet);
        block("join", FiniteMtlAlgebra::join);
    }
    s.push_str("end\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a4_parses_with_derived_lattice() {
        let a = parse_algebra(fixtures::source("a4")).unwrap();
        assert_eq!(a.size(), 4);
        assert_eq!(a.name(), "a4");
        let e = |l| a.element(l).unwrap();
        assert_eq!(a.mul(e("a"), e("a")), e("0"));
        assert_eq!(a.imp(e("b"), e("0")), e("a"));
        assert_eq!(a.meet(e("a"), e("b")), e("a"));
        assert!(a.check().valid());
    }

    #[test]
    fn short_row_reports_its_line() {
        let text = "algebra t\nsize 4\nlabels 0 a b 1\nbot 0\ntop 1\nmul\n0 0 0 0\n0 0 0\n";
        match parse_algebra(text) {
            Err(ParseError::Syntax { line, msg, .. }) => {
                assert_eq!(line, 8);
                assert!(msg.contains("3 entries"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_label_reports_column() {
        let text =
            "algebra t\nsize 2\nlabels 0 1\nbot 0\ntop 1\nmul\n0 0\n0 q\nimp\n1 1\n0 1\nend\n";
        match parse_algebra(text) {
            Err(ParseError::Syntax { line, col, msg }) => {
                assert_eq!((line, col), (8, 3));
                assert!(msg.contains("unknown label"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_and_missing_blocks() {
        let dup =
            "algebra t\nsize 2\nlabels 0 1\nbot 0\ntop 1\nmul\n0 0\n0 1\nmul\n0 0\n0 1\nend\n";
        assert!(matches!(
            parse_algebra(dup),
            Err(ParseError::Syntax { line: 9, .. })
        ));
        let missing = "algebra t\nsize 2\nlabels 0 1\nbot 0\ntop 1\nmul\n0 0\n0 1\nend\n";
        match parse_algebra(missing) {
            Err(ParseError::Syntax { msg, .. }) => assert!(msg.contains("imp")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn comments_and_corpus_records() {
        let mut text = String::from("# canon: 00\n");
        text.push_str(fixtures::source("a4"));
        text.push_str("# canon: 01\n");
        text.push_str(fixtures::source("b4"));
        let all = parse_corpus(&text).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].name(), "b4");
    }

    #[test]
    fn serialize_round_trips_every_fixture() {
        for name in fixtures::NAMES {
            let a = fixtures::load(name);
            for lattice in [false, true] {
                let b = parse_algebra(&serialize(&a, lattice)).unwrap();
                assert_eq!(a.tables(), b.tables(), "{name}");
            }
        }
    }
}
