//! Plain-text diagram format.
//!
//! ```text
//! # B3
//! vertices 3
//! edge 0 1
//! edge 1 2 mult=2 dir=1>2
//! pin 2
//! ```
//!
//! `dir=U>V` names the longer vertex `U`. It is required when the
//! multiplicity is even and ignored when it is odd.

use crate::diagram::{Diagram, Edge};
use crate::error::{Error, Result};

pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut pins = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let args: Vec<&str> = words.collect();
        let int = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| err(format!("expected a vertex index, got {s:?}")))
        };
        match keyword {
            "vertices" => {
                if n.is_some() {
                    return Err(err("vertex count declared twice".into()));
                }
                let [count] = args[..] else {
                    return Err(err("usage: vertices N".into()));
                };
                n = Some(int(count)?);
            }
            "edge" => {
                if args.len() < 2 {
                    return Err(err("usage: edge U V [mult=M] [dir=U>V]".into()));
                }
                let (u, v) = (int(args[0])?, int(args[1])?);
                let mut mult = 1u32;
                let mut dir: Option<(usize, usize)> = None;
                for opt in &args[2..] {
                    if let Some(m) = opt.strip_prefix("mult=") {
                        mult = m
                            .parse()
                            .map_err(|_| err(format!("bad multiplicity {m:?}")))?;
                    } else if let Some(d) = opt.strip_prefix("dir=") {
                        let (a, b) = d
                            .split_once('>')
                            .ok_or_else(|| err(format!("bad direction {d:?}, expected U>V")))?;
                        dir = Some((int(a)?, int(b)?));
                    } else {
                        return Err(err(format!("unknown edge option {opt:?}")));
                    }
                }
                let edge = match dir {
                    Some((a, b)) => {
                        if (a, b) != (u, v) && (a, b) != (v, u) {
                            return Err(err(format!(
                                "direction {a}>{b} does not match edge {u} {v}"
                            )));
                        }
                        if mult.is_multiple_of(2) {
                            Edge::multiple(a, b, mult)
                        } else {
                            Edge {
                                u,
                                v,
                                multiplicity: mult,
                                directed: false,
                            }
                        }
                    }
                    None => Edge {
                        u,
                        v,
                        multiplicity: mult,
                        directed: false,
                    },
                };
                edges.push(edge);
            }
            "pin" => {
                let [p] = args[..] else {
                    return Err(err("usage: pin P".into()));
                };
                pins.push(int(p)?);
            }
            other => return Err(err(format!("unknown declaration {other:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing `vertices N` declaration".into(),
    })?;
    Diagram::new(n, edges, pins)
}

/// Writes a diagram back in the text format.
pub fn write_diagram(d: &Diagram) -> String {
    let mut out = String::new();
    if let Some(name) = d.name() {
        out.push_str(&format!("# {name}\n"));
    }
    out.push_str(&format!("vertices {}\n", d.n_vertices()));
    for e in d.edges() {
        out.push_str(&format!("edge {} {}", e.u, e.v));
        if e.multiplicity != 1 {
            out.push_str(&format!(" mult={}", e.multiplicity));
        }
        if e.directed && e.is_even() {
            out.push_str(&format!(" dir={}>{}", e.u, e.v));
        }
        out.push('\n');
    }
    for p in d.pinned() {
        out.push_str(&format!("pin {p}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_b3_with_pin() {
        let d = parse_diagram(
            "# comment\nvertices 3\nedge 0 1\nedge 1 2 mult=2 dir=1>2  # arrow\npin 2\n",
        )
        .unwrap();
        assert_eq!(d.n_vertices(), 3);
        assert_eq!(d.edges()[1], Edge::arrow(1, 2));
        assert_eq!(d.pinned(), vec![2]);
    }

    #[test]
    fn even_edge_needs_direction() {
        let e = parse_diagram("vertices 2\nedge 0 1 mult=2\n").unwrap_err();
        assert!(matches!(e, Error::UndirectedEvenEdge { .. }));
    }

    #[test]
    fn direction_on_odd_edge_is_ignored() {
        let d = parse_diagram("vertices 2\nedge 0 1 mult=3 dir=1>0\n").unwrap();
        assert!(!d.edges()[0].directed);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_diagram("vertices 2\n\nedge 0 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(parse_diagram("edge 0 1\n").is_err());
        assert!(matches!(
            parse_diagram("vertices 2\nloop 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn round_trip() {
        let d = Diagram::builder(4)
            .path(0..3)
            .multiple(3, 2, 4)
            .pin(0)
            .build()
            .unwrap();
        assert_eq!(parse_diagram(&write_diagram(&d)).unwrap(), d);
    }
}
