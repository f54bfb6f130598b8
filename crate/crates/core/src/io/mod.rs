//! The `.ea` text format, Hasse-diagram export and JSON reports.
//!
//! A document is line oriented; `#` starts a comment:
//!
//! ```text
//! effectalgebra c2
//! elements 0 a 1
//! zero 0
//! one 1
//! sum a a 1
//! ```
//!
//! Sums are symmetric and `0 ⊕ x = x` is implied, so neither needs to be
//! written out.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::algebra::{EffectAlgebra, RawTable};
use crate::error::{Error, Result};

mod report;

pub use report::{analyze, report_json, Analysis, Flags, TopologySummary, Topologies};

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices().chain(std::iter::once((code.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &code[s..i],
                    col: code[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

fn parse_error(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

/// Parses a document into a table with zero sums injected and every sum
/// recorded in both argument orders. The table is not validated.
pub fn parse_ea(text: &str) -> Result<RawTable> {
    let mut name: Option<String> = None;
    let mut names: Option<Vec<String>> = None;
    let mut zero = None;
    let mut one = None;
    let mut sums: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    let mut last_line = 0;

    for (k, line) in text.lines().enumerate() {
        let ln = k + 1;
        last_line = ln;
        let toks = tokens(line);
        let Some((head, args)) = toks.split_first() else {
            continue;
        };
        let arity = |want: usize| -> Result<()> {
            if args.len() == want {
                Ok(())
            } else {
                let col = args.get(want).map_or(head.col, |t| t.col);
                Err(parse_error(
                    ln,
                    col,
                    format!("`{}` takes {want} argument(s), found {}", head.text, args.len()),
                ))
            }
        };
        let lookup = |t: &Token| -> Result<usize> {
            let known = names
                .as_ref()
                .ok_or_else(|| parse_error(ln, t.col, "`elements` must come before this line"))?;
            known
                .iter()
                .position(|n| n == t.text)
                .ok_or_else(|| parse_error(ln, t.col, format!("unknown element `{}`", t.text)))
        };
        let once = |seen: bool| -> Result<()> {
            if seen {
                Err(parse_error(ln, head.col, format!("duplicate `{}` line", head.text)))
            } else {
                Ok(())
            }
        };
        match head.text {
            "effectalgebra" => {
                once(name.is_some())?;
                arity(1)?;
                name = Some(args[0].text.to_string());
            }
            "elements" => {
                once(names.is_some())?;
                if args.is_empty() {
                    return Err(parse_error(ln, head.col, "`elements` needs at least one name"));
                }
                let mut list: Vec<String> = Vec::new();
                for t in args {
                    if list.iter().any(|n| n == t.text) {
                        return Err(parse_error(ln, t.col, format!("duplicate element `{}`", t.text)));
                    }
                    list.push(t.text.to_string());
                }
                names = Some(list);
            }
            "zero" => {
                once(zero.is_some())?;
                arity(1)?;
                zero = Some(lookup(&args[0])?);
            }
            "one" => {
                once(one.is_some())?;
                arity(1)?;
                one = Some(lookup(&args[0])?);
            }
            "sum" => {
                arity(3)?;
                let (a, b, c) = (lookup(&args[0])?, lookup(&args[1])?, lookup(&args[2])?);
                for key in [(a, b), (b, a)] {
                    match sums.get(&key) {
                        Some(&(prev, _)) if prev != c => return Err(Error::ConflictingSum { line: ln }),
                        Some(_) => {}
                        None => {
                            sums.insert(key, (c, ln));
                        }
                    }
                }
            }
            other => {
                return Err(parse_error(ln, head.col, format!("unknown directive `{other}`")));
            }
        }
    }

    let eof = last_line + 1;
    let name = name.ok_or_else(|| parse_error(eof, 1, "missing `effectalgebra` line"))?;
    let names = names.ok_or_else(|| parse_error(eof, 1, "missing `elements` line"))?;
    let zero = zero.ok_or_else(|| parse_error(eof, 1, "missing `zero` line"))?;
    let one = one.ok_or_else(|| parse_error(eof, 1, "missing `one` line"))?;

    let mut raw = RawTable::new(name, names, zero, one);
    for x in 0..raw.size() {
        if let Some(&(c, line)) = sums.get(&(zero, x)) {
            if c != x {
                return Err(Error::ConflictingSum { line });
            }
        }
    }
    raw.add_zero_sums();
    for (&(a, b), &(c, _)) in &sums {
        raw.sums.insert((a, b), c);
    }
    Ok(raw)
}

/// Canonical text of a table: elements in index order, then one `sum` line
/// per unordered pair (lexicographically smaller name first), sorted.
/// Sums with zero are left out unless they deviate from `0 ⊕ x = x`.
pub fn serialize_raw(raw: &RawTable) -> String {
    let name = |x: usize| raw.names[x].as_str();
    let title = if raw.name.is_empty() || raw.name.contains(char::is_whitespace) || raw.name.contains('#') {
        raw.name.split_whitespace().collect::<Vec<_>>().join("_").replace('#', "_")
    } else {
        raw.name.clone()
    };
    let title = if title.is_empty() { "unnamed".to_string() } else { title };

    let lines: BTreeSet<(&str, &str, &str)> = raw
        .sums
        .iter()
        .filter(|&(&(a, b), &c)| !((a == raw.zero && c == b) || (b == raw.zero && c == a)))
        .map(|(&(a, b), &c)| {
            let (x, y) = if name(a) <= name(b) { (name(a), name(b)) } else { (name(b), name(a)) };
            (x, y, name(c))
        })
        .collect();

    let mut out = String::new();
    writeln!(out, "effectalgebra {title}").unwrap();
    writeln!(out, "elements {}", raw.names.join(" ")).unwrap();
    writeln!(out, "zero {}", name(raw.zero)).unwrap();
    writeln!(out, "one {}", name(raw.one)).unwrap();
    for (a, b, c) in lines {
        writeln!(out, "sum {a} {b} {c}").unwrap();
    }
    out
}

pub fn serialize_ea(e: &EffectAlgebra) -> String {
    serialize_raw(&e.to_raw())
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The Hasse diagram as a DOT digraph, drawn bottom to top. Sharp elements
/// get a double border (only when the order is a lattice, where sharpness
/// is defined).
pub fn export_dot(e: &EffectAlgebra) -> String {
    let sharp = e.sharp_set().ok();
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", dot_escape(e.name())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for x in 0..e.size() {
        let mark = if sharp.is_some_and(|s| s.contains(x)) { ", peripheries=2" } else { "" };
        writeln!(out, "  n{x} [label=\"{}\"{mark}];", dot_escape(e.element_name(x))).unwrap();
    }
    for (a, b) in e.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
