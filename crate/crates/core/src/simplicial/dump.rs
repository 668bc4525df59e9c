//! Line-oriented text format for complexes:
//!
//! ```text
//! simplicial v1
//! v <id> <label>
//! s <dim> <id> <vid> <vid> ...
//! ```
//!
//! Vertices come first in id order, then simplices of dimension >= 1 in
//! (dimension, id) order. A vertex without a label is written with label `-`.

use std::fmt::Write;

use super::complex::{
    build_complex, Complex, ComplexSpec, SimplexId, SimplexSpec, VertexId, VertexSpec,
};
use super::SimplicialError;

pub const DUMP_HEADER: &str = "simplicial v1";

pub fn to_dump(x: &Complex) -> String {
    let mut out = String::new();
    writeln!(out, "{DUMP_HEADER}").unwrap();
    for v in &x.vertices {
        writeln!(out, "v {} {}", v.id.0, v.label.as_deref().unwrap_or("-")).unwrap();
    }
    for (d, layer) in x.layers.iter().enumerate().skip(1) {
        for rec in layer {
            write!(out, "s {d} {}", rec.id.0).unwrap();
            for &v in &rec.verts {
                write!(out, " {}", x.vertices[v].id.0).unwrap();
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_dump(text: &str) -> Result<Complex, SimplicialError> {
    let err = |line: usize, message: &str| SimplicialError::Parse {
        line,
        message: message.to_owned(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.next() {
        Some((_, DUMP_HEADER)) => {}
        _ => return Err(err(1, "missing `simplicial v1` header")),
    }
    let mut spec = ComplexSpec::default();
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let num = |s: Option<&str>| -> Result<u64, SimplicialError> {
            s.ok_or_else(|| err(no, "missing field"))?
                .parse()
                .map_err(|_| err(no, "bad integer"))
        };
        match fields.next() {
            Some("v") => {
                let id = num(fields.next())?;
                let label = fields.next().ok_or_else(|| err(no, "missing label"))?;
                if fields.next().is_some() {
                    return Err(err(no, "trailing fields"));
                }
                spec.vertices.push(VertexSpec {
                    id: VertexId(id),
                    label: (label != "-").then(|| label.to_owned()),
                });
            }
            Some("s") => {
                let dim = num(fields.next())? as usize;
                let id = num(fields.next())?;
                let verts = fields
                    .map(|f| f.parse().map(VertexId).map_err(|_| err(no, "bad integer")))
                    .collect::<Result<Vec<_>, _>>()?;
                if dim == 0 || verts.len() != dim + 1 {
                    return Err(err(no, "vertex count does not match dimension"));
                }
                spec.simplices.push(SimplexSpec {
                    id: SimplexId(id),
                    vertices: verts,
                });
            }
            _ => return Err(err(no, "unknown record type")),
        }
    }
    build_complex(&spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_is_ordered() {
        let mut s = ComplexSpec::default();
        s.vertex(2, None).vertex(0, Some("a")).vertex(1, Some("b"));
        s.simplex(5, &[2, 1])
            .simplex(1, &[0, 1])
            .simplex(0, &[0, 2]);
        s.simplex(3, &[0, 1, 2]).simplex(1, &[0, 1, 2]);
        let x = build_complex(&s).unwrap();
        let text = to_dump(&x);
        assert_eq!(
            text,
            "simplicial v1\nv 0 a\nv 1 b\nv 2 -\ns 1 0 0 2\ns 1 1 0 1\ns 1 5 1 2\ns 2 1 0 1 2\ns 2 3 0 1 2\n"
        );
        let back = parse_dump(&text).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_dump("").is_err());
        assert!(parse_dump("simplicial v2\n").is_err());
        assert!(matches!(
            parse_dump("simplicial v1\nv 0 a\nv 1 b\ns 2 0 0 1\n"),
            Err(SimplicialError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_dump("simplicial v1\nv 0 a\nv 1 b\nv 2 c\ns 2 0 0 1 2\n"),
            Err(SimplicialError::ClosureViolation { .. })
        ));
    }
}
