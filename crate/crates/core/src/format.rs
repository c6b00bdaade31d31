//! Text formats.
//!
//! * Edge list: first line `n m`, then `m` lines `u v` (0-based).
//! * Labels: one bit string per line; edges join labels at Hamming distance 1.
//! * Complex: first line `n`, then one facet per line as 1-based elements,
//!   `-` for the empty facet.
//!
//! Blank lines and `#` comments are ignored by every parser.

use std::fmt::Write;

use crate::asc::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::BinaryLabel;
use crate::partial_cube::{LabelledPartialCube, Reduction};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                parse_err(
                    line,
                    format!("expected a non-negative integer, found {t:?}"),
                )
            })
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let nums = parse_numbers(hline, header)?;
    let [n, m] = nums[..] else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    let mut g = Graph::new(n);
    let mut seen = 0;
    let mut last_line = hline;
    for (line, content) in lines {
        last_line = line;
        let nums = parse_numbers(line, content)?;
        let [u, v] = nums[..] else {
            return Err(parse_err(line, "edge must be `u v`"));
        };
        g.add_edge(u, v)
            .map_err(|e| parse_err(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(
            last_line,
            format!("header announces {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("string write");
    }
    out
}

/// Bit strings, one per vertex; constant coordinates are dropped.
pub fn parse_labels(text: &str) -> Result<Reduction> {
    let mut labels = Vec::new();
    let mut len = None;
    for (line, content) in content_lines(text) {
        let l: BinaryLabel = content
            .parse()
            .map_err(|_| parse_err(line, format!("expected a bit string, found {content:?}")))?;
        match len {
            None => len = Some(l.len()),
            Some(k) if k != l.len() => {
                return Err(parse_err(
                    line,
                    format!("label has length {}, expected {k}", l.len()),
                ))
            }
            _ => {}
        }
        labels.push(l);
    }
    if labels.is_empty() {
        return Err(parse_err(1, "no labels"));
    }
    LabelledPartialCube::from_labels(labels)
}

pub fn write_labels(cube: &LabelledPartialCube) -> String {
    let mut out = String::new();
    for l in cube.labels() {
        writeln!(out, "{l}").expect("string write");
    }
    out
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing ground size"))?;
    let nums = parse_numbers(hline, header)?;
    let [n] = nums[..] else {
        return Err(parse_err(hline, "header must be the ground size `n`"));
    };
    let mut facets = Vec::new();
    for (line, content) in lines {
        if content == "-" {
            facets.push(Vec::new());
            continue;
        }
        let elems = parse_numbers(line, content)?;
        let facet = elems
            .iter()
            .map(|&e| {
                if e == 0 || e > n {
                    Err(parse_err(line, format!("element {e} outside 1..={n}")))
                } else {
                    Ok(e - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        facets.push(facet);
    }
    SimplicialComplex::from_facets(n, &facets)
}

pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", complex.ground_size());
    for f in complex.facets() {
        if f.is_empty() {
            out.push_str("-\n");
        } else {
            let elems: Vec<String> = f.iter().map(|e| (e + 1).to_string()).collect();
            writeln!(out, "{}", elems.join(" ")).expect("string write");
        }
    }
    out
}

/// Graphviz output; `names[v]` replaces the vertex index when given.
pub fn write_dot(g: &Graph, names: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match names {
            Some(ns) => writeln!(out, "  {v} [label=\"{}\"];", ns[v]),
            None => writeln!(out, "  {v};"),
        }
        .expect("string write");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("string write");
    }
    out.push_str("}\n");
    out
}
