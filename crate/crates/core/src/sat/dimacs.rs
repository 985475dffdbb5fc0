//! DIMACS CNF text export and import, plus model parsing for external solvers.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::sat::cnf::{Assignment, Cnf, Lit};

/// Renders `cnf` as `p cnf V C` followed by one zero-terminated clause per line.
pub fn export_dimacs(cnf: &Cnf) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {} {}", cnf.num_vars(), cnf.num_clauses());
    for clause in cnf.clauses() {
        for lit in clause {
            let _ = write!(out, "{} ", lit.dimacs());
        }
        out.push_str("0\n");
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
}

/// Parses DIMACS CNF text. Comment lines (`c`) and `%` trailers are ignored;
/// clauses may span lines.
pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let mut cnf: Option<(Cnf, usize)> = None;
    let mut pending: Vec<Lit> = Vec::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            if cnf.is_some() {
                return Err(parse_error(lineno, 1, "duplicate problem line"));
            }
            let fields: Vec<(usize, &str)> = tokens(line).collect();
            if fields.len() != 4 || fields[0].1 != "p" || fields[1].1 != "cnf" {
                return Err(parse_error(lineno, 1, "expected `p cnf <vars> <clauses>`"));
            }
            let num = |(col, t): (usize, &str)| {
                t.parse::<u32>()
                    .map_err(|_| parse_error(lineno, col, format!("invalid count {t:?}")))
            };
            let vars = num(fields[2])?;
            let clauses = num(fields[3])? as usize;
            cnf = Some((Cnf::new(vars), clauses));
            continue;
        }
        let Some((formula, _)) = cnf.as_mut() else {
            return Err(parse_error(lineno, 1, "clause before problem line"));
        };
        for (col, tok) in tokens(line) {
            let x: i32 = tok
                .parse()
                .map_err(|_| parse_error(lineno, col, format!("invalid literal {tok:?}")))?;
            match Lit::from_dimacs(x) {
                None => {
                    formula
                        .add_clause(&pending)
                        .map_err(|e| parse_error(lineno, col, e.to_string()))?;
                    pending.clear();
                }
                Some(l) => {
                    if l.var() > formula.num_vars() {
                        return Err(parse_error(
                            lineno,
                            col,
                            format!("variable {} exceeds declared count {}", l.var(), formula.num_vars()),
                        ));
                    }
                    pending.push(l);
                }
            }
        }
    }
    let Some((formula, declared)) = cnf else {
        return Err(parse_error(last_line.max(1), 1, "missing problem line"));
    };
    if !pending.is_empty() {
        return Err(parse_error(last_line, 1, "last clause is not terminated by 0"));
    }
    if formula.num_clauses() != declared {
        return Err(parse_error(
            last_line.max(1),
            1,
            format!("declared {declared} clauses, found {}", formula.num_clauses()),
        ));
    }
    Ok(formula)
}

/// Reads a solver model over `num_vars` variables.
///
/// Accepts the competition format (`s SATISFIABLE` plus `v` lines), bare
/// literal lines, and `SAT`/`UNSAT` headers. An unsatisfiability verdict gives
/// `Ok(None)`. Variables never mentioned default to false.
pub fn import_model(text: &str, num_vars: u32) -> Result<Option<Assignment>> {
    let mut assignment = Assignment::all_false(num_vars);
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        match trimmed {
            "s UNSATISFIABLE" | "UNSAT" | "UNSATISFIABLE" => return Ok(None),
            "s SATISFIABLE" | "SAT" | "SATISFIABLE" => continue,
            _ => {}
        }
        if trimmed.starts_with('s') {
            return Err(parse_error(lineno, 1, format!("unknown status line {trimmed:?}")));
        }
        let skip_v = trimmed.starts_with('v');
        for (col, tok) in tokens(line).skip(usize::from(skip_v)) {
            let x: i32 = tok
                .parse()
                .map_err(|_| parse_error(lineno, col, format!("invalid literal {tok:?}")))?;
            let Some(lit) = Lit::from_dimacs(x) else {
                continue;
            };
            if lit.var() > num_vars {
                return Err(parse_error(
                    lineno,
                    col,
                    format!("variable {} exceeds {num_vars}", lit.var()),
                ));
            }
            assignment.set(lit.var(), lit.is_positive());
        }
    }
    Ok(Some(assignment))
}

/// Renders a model as a single `v` line, the inverse of [`import_model`].
pub fn export_model(assignment: &Assignment) -> String {
    let mut out = String::from("s SATISFIABLE\nv");
    for (v, &value) in assignment.values().iter().enumerate() {
        let x = v as i64 + 1;
        let _ = write!(out, " {}", if value { x } else { -x });
    }
    out.push_str(" 0\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_format() {
        let mut f = Cnf::new(1);
        f.add_clause(&[Lit::pos(1)]).unwrap();
        assert_eq!(export_dimacs(&f), "p cnf 1 1\n1 0\n");
        assert_eq!(export_dimacs(&Cnf::new(2)), "p cnf 2 0\n");
        let mut g = Cnf::new(3);
        g.add_clause(&[Lit::neg(1), Lit::pos(3)]).unwrap();
        assert_eq!(export_dimacs(&g), "p cnf 3 1\n-1 3 0\n");
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let text = "c hello\np cnf 3 2\n-1 3 0\n2\n -3 0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.num_clauses(), 2);
        assert_eq!(parse_dimacs(&export_dimacs(&f)).unwrap(), f);

        let err = parse_dimacs("p cnf 2 1\n1 x 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 3,
                message: "invalid literal \"x\"".into()
            }
        );
        assert!(matches!(parse_dimacs("1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("p cnf 1 1\n3 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_dimacs("p cnf 1 2\n1 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n1\n").is_err());
    }

    #[test]
    fn model_formats() {
        let a = import_model("s SATISFIABLE\nv 1 -2\nv 3 0\n", 3).unwrap().unwrap();
        assert_eq!(a.values(), &[true, false, true]);
        let b = import_model("SAT\n-1 2 0\n", 2).unwrap().unwrap();
        assert_eq!(b.values(), &[false, true]);
        assert_eq!(import_model("s UNSATISFIABLE\n", 2).unwrap(), None);
        assert!(matches!(
            import_model("v 1 9 0\n", 2),
            Err(Error::Parse { line: 1, column: 5, .. })
        ));
        assert_eq!(import_model(&export_model(&a), 3).unwrap().unwrap(), a);
    }
}
