//! Plain-text files: colorings, Berge-cycles, graphs and generator schemes.
//!
//! Coloring:
//! ```text
//! n r k
//! c_0 c_1 ... c_{C(n,r)-1}
//! ```
//! with single spaces and a trailing newline, colors in colex edge order.
//!
//! Cycle: core vertices on line 1, edge indices on line 2, an optional color
//! on line 3.
//!
//! Graph: the vertex count on the first line, then one `u v` pair per line.
//! Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;
use std::path::Path;

use berge_core::harness::Scheme;
use berge_core::{BergeCycle, Color, Coloring, Graph, HyperParams};

use crate::{Error, Result};

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(line, format!("{what}: expected a decimal number, found {tok:?}")));
    }
    tok.parse().map_err(|_| bad(line, format!("{what}: {tok} out of range")))
}

fn strict_fields(s: &str, line: usize) -> Result<Vec<&str>> {
    let fields: Vec<&str> = s.split(' ').collect();
    if fields.iter().any(|f| f.is_empty()) {
        return Err(bad(line, "fields must be separated by single spaces"));
    }
    Ok(fields)
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let Some(body) = text.strip_suffix('\n') else {
        return Err(bad(0, "missing trailing newline"));
    };
    let lines: Vec<&str> = body.split('\n').collect();
    if lines.len() != 2 {
        return Err(bad(lines.len().min(3), format!("expected 2 lines, found {}", lines.len())));
    }
    let head = strict_fields(lines[0], 1)?;
    if head.len() != 3 {
        return Err(bad(1, format!("expected \"n r k\", found {} fields", head.len())));
    }
    let n: usize = number(head[0], 1, "n")?;
    let r: usize = number(head[1], 1, "r")?;
    let k: u8 = number(head[2], 1, "k")?;
    let params = HyperParams::new(n, r, k)?;
    let m = params.edge_count();
    let fields = strict_fields(lines[1], 2)?;
    if fields.len() as u64 != m {
        return Err(bad(2, format!("expected {m} colors, found {}", fields.len())));
    }
    let mut colors = Vec::with_capacity(fields.len());
    for (i, tok) in fields.iter().enumerate() {
        let c: Color = number(tok, 2, "color")?;
        if c == 0 || c > k {
            return Err(bad(2, format!("color {c} of edge {i} outside 1..={k}")));
        }
        colors.push(c);
    }
    Ok(Coloring::new(params, colors)?)
}

pub fn format_coloring(c: &Coloring) -> String {
    let p = c.params();
    let mut out = format!("{} {} {}\n", p.n(), p.r(), p.k());
    for (i, col) in c.colors().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{col}").unwrap();
    }
    out.push('\n');
    out
}

pub fn parse_cycle(text: &str) -> Result<BergeCycle> {
    let lines: Vec<&str> = text.lines().collect();
    let lines = match lines.iter().rposition(|l| !l.trim().is_empty()) {
        Some(last) => &lines[..=last],
        None => return Err(bad(1, "empty cycle file")),
    };
    if !(2..=3).contains(&lines.len()) {
        return Err(bad(lines.len(), format!("expected 2 or 3 lines, found {}", lines.len())));
    }
    let list = |i: usize, what: &str| -> Result<Vec<u64>> {
        lines[i].split_whitespace().map(|t| number(t, i + 1, what)).collect()
    };
    let core: Vec<usize> = list(0, "core vertex")?.into_iter().map(|v| v as usize).collect();
    let edges = list(1, "edge index")?;
    if core.len() != edges.len() {
        return Err(bad(2, format!("{} core vertices but {} edges", core.len(), edges.len())));
    }
    let color = match lines.get(2).map(|l| l.trim()) {
        None | Some("") => None,
        Some(t) => Some(number::<Color>(t, 3, "color")?),
    };
    Ok(BergeCycle::new(core, edges, color))
}

pub fn format_cycle(c: &BergeCycle) -> String {
    let join = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
    let mut out = join(&mut c.core.iter().map(|v| v.to_string()));
    out.push('\n');
    out.push_str(&join(&mut c.edges.iter().map(|e| e.to_string())));
    out.push('\n');
    if let Some(col) = c.color {
        writeln!(out, "{col}").unwrap();
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, head) = rows.next().ok_or_else(|| bad(1, "empty graph file"))?;
    let n: usize = number(head, first, "vertex count")?;
    let mut edges = Vec::new();
    for (line, l) in rows {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(bad(line, format!("expected \"u v\", found {l:?}")));
        }
        let u: usize = number(toks[0], line, "vertex")?;
        let v: usize = number(toks[1], line, "vertex")?;
        if u >= n || v >= n || u == v {
            return Err(bad(line, format!("bad edge {u} {v} for {n} vertices")));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// `uniform:C`, `random:SEED`, `partition:L0,L1,...` (one label per vertex)
/// or `digits:D0D1...` (single-digit colors) / `digits:D0,D1,...`.
pub fn parse_scheme(s: &str) -> Result<Scheme> {
    let (name, arg) = s.split_once(':').ok_or_else(|| bad(0, format!("scheme {s:?} lacks ':'")))?;
    let list = |a: &str| -> Result<Vec<Color>> {
        if a.contains(',') {
            a.split(',').map(|t| number(t.trim(), 0, "color")).collect()
        } else {
            a.chars().map(|ch| number(&ch.to_string(), 0, "digit")).collect()
        }
    };
    match name {
        "uniform" => Ok(Scheme::Uniform(number(arg, 0, "color")?)),
        "random" => Ok(Scheme::Random { seed: number(arg, 0, "seed")? }),
        "partition" => Ok(Scheme::VertexPartition { labels: list(arg)? }),
        "digits" => Ok(Scheme::Digits(list(arg)?)),
        other => Err(bad(0, format!("unknown scheme {other:?}"))),
    }
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn write_string(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn read_coloring(path: &Path) -> Result<Coloring> {
    parse_coloring(&read_to_string(path)?)
}
