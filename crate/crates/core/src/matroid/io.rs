//! Line-oriented text formats for matroids and graphs.
//!
//! Bases file:
//!
//! ```text
//! # U_{2,3}
//! n 3
//! b 0 1
//! b 0 2
//! b 1 2
//! ```
//!
//! A bare `b` line is the empty basis. Graph file: `v <count>` followed by one
//! `e <u> <w>` line per edge. `#` starts a comment anywhere on a line.

use std::fmt::Write;

use super::{Graph, Matroid, Subset, Validation, MAX_GROUND};
use crate::error::{Error, Result};

fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn parse_index(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found {tok:?}"),
    })
}

fn one_arg(line: usize, toks: &[&str]) -> Result<usize> {
    match toks {
        [_, v] => parse_index(line, v),
        _ => Err(Error::Parse {
            line,
            message: format!("`{}` takes exactly one argument", toks[0]),
        }),
    }
}

pub fn parse_bases(text: &str, validation: Validation) -> Result<Matroid> {
    let mut size: Option<usize> = None;
    let mut bases = Vec::new();
    for (line, toks) in tokens(text) {
        match toks[0] {
            "n" => {
                if size.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate `n` line".into(),
                    });
                }
                let n = one_arg(line, &toks)?;
                if n > MAX_GROUND {
                    return Err(Error::GroundTooLarge {
                        size: n,
                        max: MAX_GROUND,
                    });
                }
                size = Some(n);
            }
            "b" => {
                let n = size.ok_or(Error::Parse {
                    line,
                    message: "`b` line before `n` line".into(),
                })?;
                let mut b = Subset::EMPTY;
                for tok in &toks[1..] {
                    let e = parse_index(line, tok)?;
                    if e >= n {
                        return Err(Error::Parse {
                            line,
                            message: format!("element {e} outside ground set of size {n}"),
                        });
                    }
                    b = b.with(e);
                }
                bases.push(b);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown directive {other:?}"),
                })
            }
        }
    }
    let size = size.ok_or(Error::Parse {
        line: 0,
        message: "missing `n` line".into(),
    })?;
    Matroid::from_bases(size, bases, validation)
}

pub fn write_bases(m: &Matroid) -> String {
    let mut out = format!("n {}\n", m.size());
    for b in m.bases() {
        out.push('b');
        for e in b.elements() {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    for (line, toks) in tokens(text) {
        match toks[0] {
            "v" => {
                if vertices.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate `v` line".into(),
                    });
                }
                vertices = Some(one_arg(line, &toks)?);
            }
            "e" => {
                let v = vertices.ok_or(Error::Parse {
                    line,
                    message: "`e` line before `v` line".into(),
                })?;
                let [_, a, b] = toks[..] else {
                    return Err(Error::Parse {
                        line,
                        message: "`e` takes exactly two vertices".into(),
                    });
                };
                let (a, b) = (parse_index(line, a)?, parse_index(line, b)?);
                if a >= v || b >= v {
                    return Err(Error::Parse {
                        line,
                        message: format!("vertex out of range for {v} vertices"),
                    });
                }
                edges.push((a, b));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown directive {other:?}"),
                })
            }
        }
    }
    let vertices = vertices.ok_or(Error::Parse {
        line: 0,
        message: "missing `v` line".into(),
    })?;
    Ok(Graph::new(vertices, edges))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("v {}\n", g.vertices);
    for (a, b) in &g.edges {
        writeln!(out, "e {a} {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let text = "# triangle\nn 3  # three elements\nb 0 1\nb 0 2\n\nb 1 2\n";
        let m = parse_bases(text, Validation::Full).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn empty_basis_line() {
        let m = parse_bases("n 2\nb\n", Validation::Full).unwrap();
        assert_eq!(m.rank(), 0);
        assert_eq!(m.loops(), m.ground());
    }

    #[test]
    fn round_trips() {
        let m = Graph::complete(4).matroid().unwrap();
        assert_eq!(parse_bases(&write_bases(&m), Validation::Full).unwrap(), m);
        let g = Graph::complete_bipartite(2, 3);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let t = Matroid::trivial();
        assert_eq!(parse_bases(&write_bases(&t), Validation::Full).unwrap(), t);
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_bases("n 3\nb 0 x\n", Validation::Full),
            Err(Error::Parse {
                line: 2,
                message: "expected a non-negative integer, found \"x\"".into()
            })
        );
        assert!(matches!(
            parse_bases("b 0\n", Validation::Full),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bases("n 2\nb 0 5\n", Validation::Full),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_bases("", Validation::Full),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_bases("n 2\nq\n", Validation::Full),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("v 3\ne 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("v 3\ne 0 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn invalid_bases_rejected() {
        let text = "n 4\nb 0 1\nb 2 3\n";
        assert!(matches!(
            parse_bases(text, Validation::Full),
            Err(Error::InvalidBases(_))
        ));
    }
}
