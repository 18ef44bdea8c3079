//! Text formats.
//!
//! Decorated graph file:
//!
//! ```text
//! # comments run to end of line
//! gens: a b c
//! a: (b c)        # j_a, disjoint 2-cycles
//! b: id           # omitted lines also mean id
//! ```
//!
//! Permutation group file, one involutive generator per line on points
//! `1, 2, ..`:
//!
//! ```text
//! a = (1 3)
//! b = (1 2)(3 4)
//! ```

use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::group::CubeGroup;
use crate::label::{GeneratorLabel, LabelSet};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

/// Splits on whitespace and parentheses, yielding 1-based columns.
fn tokenize(text: &str, column0: usize) -> Vec<(usize, Token<'_>)> {
    let mut spans: Vec<(usize, Token<'_>)> = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        let boundary = c == '(' || c == ')' || c.is_whitespace();
        if boundary {
            if let Some(s) = start.take() {
                spans.push((s, Token::Word(&text[s..i])));
            }
            match c {
                '(' => spans.push((i, Token::Open)),
                ')' => spans.push((i, Token::Close)),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        spans.push((s, Token::Word(&text[s..])));
    }
    spans
        .into_iter()
        .map(|(byte, t)| (column0 + text[..byte].chars().count(), t))
        .collect()
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses `id` or a run of parenthesized cycles into lists of raw names.
fn parse_cycles(line: usize, text: &str, column0: usize) -> Result<Vec<Vec<(usize, &str)>>> {
    let tokens = tokenize(text, column0);
    match tokens.as_slice() {
        [] => return Err(parse_error(line, column0, "expected `id` or cycles")),
        [(_, Token::Word("id"))] => return Ok(Vec::new()),
        _ => {}
    }
    let mut cycles = Vec::new();
    let mut iter = tokens.into_iter();
    while let Some((col, tok)) = iter.next() {
        if tok != Token::Open {
            return Err(parse_error(line, col, "expected `(`"));
        }
        let mut cycle = Vec::new();
        loop {
            match iter.next() {
                Some((c, Token::Word(w))) => cycle.push((c, w)),
                Some((_, Token::Close)) => break,
                Some((c, Token::Open)) => return Err(parse_error(line, c, "nested `(`")),
                None => return Err(parse_error(line, col, "unclosed `(`")),
            }
        }
        if cycle.is_empty() {
            return Err(parse_error(line, col, "empty cycle"));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Strips a trailing comment, returning the content.
fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("")
}

/// Column (1-based) of the first non-space character.
fn indent(raw: &str) -> usize {
    raw.chars().take_while(|c| c.is_whitespace()).count() + 1
}

pub fn parse_decorated_graph(doc: &str) -> Result<DecoratedGraph> {
    let mut labels: Option<LabelSet> = None;
    let mut involutions: Vec<Option<Permutation>> = Vec::new();
    for (i, raw) in doc.lines().enumerate() {
        let line = i + 1;
        let text = content(raw);
        if text.trim().is_empty() {
            continue;
        }
        let col = indent(text);
        let Some((head, rest)) = text.split_once(':') else {
            return Err(parse_error(line, col, "expected `<label>: ...`"));
        };
        let rest_col = head.chars().count() + 2;
        let head = head.trim();
        let Some(labels) = labels.as_ref() else {
            if head != "gens" {
                return Err(parse_error(line, col, "first line must be `gens: <label> ...`"));
            }
            let names = rest
                .split_whitespace()
                .map(GeneratorLabel::new)
                .collect::<Result<Vec<_>>>()?;
            if names.is_empty() {
                return Err(parse_error(line, rest_col, "no generators declared"));
            }
            let set = LabelSet::new(names)?;
            involutions = vec![None; set.len()];
            labels = Some(set);
            continue;
        };
        if head == "gens" {
            return Err(parse_error(line, col, "repeated `gens:` header"));
        }
        let s = labels.index_of(head)?;
        if involutions[s].is_some() {
            return Err(parse_error(line, col, format!("`{head}` defined twice")));
        }
        let n = labels.len();
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in parse_cycles(line, rest, rest_col)? {
            if cycle.len() != 2 {
                return Err(parse_error(line, cycle[0].0, "cycles must have exactly two members"));
            }
            let mut pts = [0; 2];
            for (k, &(_, name)) in cycle.iter().enumerate() {
                let t = labels.index_of(name)?;
                if t == s {
                    return Err(Error::SelfCycle {
                        line,
                        label: name.to_string(),
                    });
                }
                if std::mem::replace(&mut used[t], true) {
                    return Err(Error::NonDisjointCycles {
                        line,
                        label: name.to_string(),
                    });
                }
                pts[k] = t;
            }
            images.swap(pts[0], pts[1]);
        }
        involutions[s] = Some(Permutation::from_images(images).expect("disjoint transpositions"));
    }
    let labels = labels.ok_or_else(|| parse_error(1, 1, "missing `gens:` header"))?;
    let n = labels.len();
    let involutions = involutions
        .into_iter()
        .map(|j| j.unwrap_or_else(|| Permutation::identity(n)))
        .collect();
    DecoratedGraph::new(labels, involutions)
}

/// Canonical text form: header, then one line per generator with cycles
/// sorted by least member (in label order).
pub fn serialize_decorated_graph(g: &DecoratedGraph) -> String {
    let names: Vec<&str> = g.labels().names().iter().map(GeneratorLabel::as_str).collect();
    let mut out = format!("gens: {}\n", names.join(" "));
    for s in 0..g.rank() {
        out.push_str(&format!("{}: {}\n", names[s], g.format_involution(s)));
    }
    out
}

/// Generators read from a permutation group file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroupSpec {
    pub labels: LabelSet,
    /// Permutations of `0..degree` (file point `k` is index `k-1`).
    pub generators: Vec<Permutation>,
    pub degree: usize,
}

pub fn parse_perm_group(doc: &str) -> Result<PermGroupSpec> {
    let mut names = Vec::new();
    let mut cycle_lists = Vec::new();
    let mut degree = 0;
    for (i, raw) in doc.lines().enumerate() {
        let line = i + 1;
        let text = content(raw);
        if text.trim().is_empty() {
            continue;
        }
        let Some((head, rest)) = text.split_once('=') else {
            return Err(parse_error(line, indent(text), "expected `<label> = <cycles>`"));
        };
        let rest_col = head.chars().count() + 2;
        names.push(GeneratorLabel::new(head.trim())?);
        let mut cycles = Vec::new();
        let mut used = std::collections::HashSet::new();
        for cycle in parse_cycles(line, rest, rest_col)? {
            let mut pts = Vec::with_capacity(cycle.len());
            for (col, w) in cycle {
                let p: usize = w
                    .parse()
                    .ok()
                    .filter(|&p| p > 0)
                    .ok_or_else(|| parse_error(line, col, format!("`{w}` is not a positive integer")))?;
                if !used.insert(p) {
                    return Err(Error::NonDisjointCycles {
                        line,
                        label: w.to_string(),
                    });
                }
                degree = degree.max(p);
                pts.push(p - 1);
            }
            cycles.push(pts);
        }
        cycle_lists.push(cycles);
    }
    let labels = LabelSet::new(names)?;
    let generators = cycle_lists
        .into_iter()
        .map(|cycles| {
            let mut images: Vec<usize> = (0..degree).collect();
            for c in cycles {
                for k in 0..c.len() {
                    images[c[k]] = c[(k + 1) % c.len()];
                }
            }
            Permutation::from_images(images).expect("disjoint cycles")
        })
        .collect();
    Ok(PermGroupSpec {
        labels,
        generators,
        degree,
    })
}

/// Name of the vertex `g_T`, e.g. `{}` or `{a,c}`.
pub fn vertex_name(labels: &LabelSet, subset: u32) -> String {
    format!("{{{}}}", labels.format_subset(subset))
}

/// Cayley graph in Graphviz DOT, vertices named by their subsets.
pub fn cayley_dot(group: &CubeGroup) -> String {
    let labels = group.labels();
    let mut out = String::from("graph cayley {\n");
    for mask in 0..1u32 << group.rank() {
        out.push_str(&format!("  \"{}\";\n", vertex_name(labels, mask)));
    }
    for &(u, v, s) in group.cayley().edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
            vertex_name(labels, group.subset(u)),
            vertex_name(labels, group.subset(v)),
            labels.name(s)
        ));
    }
    out.push_str("}\n");
    out
}
