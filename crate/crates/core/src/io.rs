//! Text formats: delimited matrices, edge lists and point lists.

use crate::error::{invalid, Error, Result};
use crate::generators::{ColoredPointSet, PointSet2D, SimpleGraph};
use crate::matrix::IntMatrix;
use crate::rescale::RealMatrix;

/// A parsed matrix: integral when every field is an integer literal.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedMatrix {
    Int(IntMatrix),
    Real(RealMatrix),
}

impl ParsedMatrix {
    pub fn into_real(self) -> RealMatrix {
        match self {
            ParsedMatrix::Int(a) => RealMatrix::from(&a),
            ParsedMatrix::Real(r) => r,
        }
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty fields of a line with their 1-based character columns. Commas,
/// semicolons, tabs and runs of spaces all separate fields.
fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        let sep = ch == ',' || ch == ';' || ch.is_whitespace();
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &line[s..pos]));
                start = None;
            }
            (false, None) => start = Some(pos),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, f)| (line[..s].chars().count() + 1, f)).collect()
}

/// Content lines with their 1-based numbers; blank lines and `#` comments are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        (!line.trim().is_empty()).then_some((i + 1, line))
    })
}

/// Parses a CSV, TSV or whitespace-separated numeric matrix.
pub fn parse_matrix(text: &str) -> Result<ParsedMatrix> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut ints: Option<Vec<Vec<i64>>> = Some(Vec::new());
    let mut width = None;
    for (ln, line) in content_lines(text) {
        let fs = fields(line);
        if let Some(w) = width {
            if fs.len() != w {
                let col = fs.get(w).map_or(line.chars().count() + 1, |f| f.0);
                return Err(parse_err(ln, col, format!("expected {w} fields, found {}", fs.len())));
            }
        }
        width = Some(fs.len());
        let mut row = Vec::with_capacity(fs.len());
        let mut irow = Vec::with_capacity(fs.len());
        for &(col, f) in &fs {
            let x: f64 = f
                .parse()
                .map_err(|_| parse_err(ln, col, format!("not a number: {f:?}")))?;
            if !x.is_finite() {
                return Err(parse_err(ln, col, format!("non-finite value {f:?}")));
            }
            row.push(x);
            if ints.is_some() {
                match f.parse::<i64>() {
                    Ok(v) => irow.push(v),
                    Err(_) => ints = None,
                }
            }
        }
        rows.push(row);
        if let Some(iv) = ints.as_mut() {
            iv.push(irow);
        }
    }
    if rows.is_empty() {
        return Err(parse_err(1, 1, "no matrix rows"));
    }
    match ints {
        Some(iv) => Ok(ParsedMatrix::Int(IntMatrix::new(iv)?)),
        None => Ok(ParsedMatrix::Real(RealMatrix::new(rows)?)),
    }
}

/// Parses an integer matrix, rejecting fractional entries.
pub fn parse_int_matrix(text: &str) -> Result<IntMatrix> {
    match parse_matrix(text)? {
        ParsedMatrix::Int(a) => Ok(a),
        ParsedMatrix::Real(r) => r
            .to_int()
            .ok_or_else(|| invalid("matrix has non-integer entries")),
    }
}

pub fn write_csv(a: &IntMatrix) -> String {
    let mut out = String::new();
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(i64::to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn parse_field<T: std::str::FromStr>(ln: usize, (col, f): (usize, &str), what: &str) -> Result<T> {
    f.parse()
        .map_err(|_| parse_err(ln, col, format!("expected {what}, found {f:?}")))
}

/// One `u v` pair per line, vertices numbered from 1. The vertex count is
/// `vertices` if given, otherwise the largest endpoint.
pub fn parse_edge_list(text: &str, vertices: Option<usize>) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    for (ln, line) in content_lines(text) {
        let fs = fields(line);
        if fs.len() != 2 {
            return Err(parse_err(ln, 1, format!("expected two vertices, found {} fields", fs.len())));
        }
        let u: usize = parse_field(ln, fs[0], "a vertex number")?;
        let v: usize = parse_field(ln, fs[1], "a vertex number")?;
        if u == 0 || v == 0 {
            let col = if u == 0 { fs[0].0 } else { fs[1].0 };
            return Err(parse_err(ln, col, "vertices are numbered from 1"));
        }
        edges.push((u, v));
    }
    let n = vertices.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0));
    SimpleGraph::from_one_based(n, &edges)
}

/// Points as `x y` or `x y b|w` lines.
pub fn parse_point_lines(text: &str) -> Result<Vec<((i64, i64), Option<char>)>> {
    let mut out = Vec::new();
    for (ln, line) in content_lines(text) {
        let fs = fields(line);
        if !(2..=3).contains(&fs.len()) {
            return Err(parse_err(ln, 1, format!("expected `x y [b|w]`, found {} fields", fs.len())));
        }
        let x = parse_field(ln, fs[0], "an integer coordinate")?;
        let y = parse_field(ln, fs[1], "an integer coordinate")?;
        let color = match fs.get(2) {
            None => None,
            Some(&(_, "b" | "B")) => Some('b'),
            Some(&(_, "w" | "W")) => Some('w'),
            Some(&(col, f)) => return Err(parse_err(ln, col, format!("colour must be b or w, found {f:?}"))),
        };
        out.push(((x, y), color));
    }
    Ok(out)
}

/// Uncoloured point list; colour tags, if any, are ignored.
pub fn parse_point_set(text: &str) -> Result<PointSet2D> {
    Ok(PointSet2D::new(parse_point_lines(text)?.into_iter().map(|p| p.0).collect()))
}

/// Coloured point list; every line needs a `b` or `w` tag.
pub fn parse_colored_points(text: &str) -> Result<ColoredPointSet> {
    let (mut black, mut white) = (Vec::new(), Vec::new());
    for (i, (p, color)) in parse_point_lines(text)?.into_iter().enumerate() {
        match color {
            Some('b') => black.push(p),
            Some(_) => white.push(p),
            None => return Err(invalid(format!("point {} has no colour tag", i + 1))),
        }
    }
    ColoredPointSet::new(black, white)
}
