use super::{Builder, LinearHypergraph};
use crate::error::{Error, Result};

fn is_token_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-')
}

/// Parses the line-oriented hypergraph format.
///
/// `#` lines are comments, blank lines are skipped, an optional `n=<int>`
/// line overrides `n`, and every other line is one edge of whitespace
/// separated vertex tokens.
pub fn parse_hypergraph(text: &str) -> Result<LinearHypergraph> {
    let mut builder = Builder::default();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut header: Option<usize> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(value) = line.strip_prefix("n=") {
            if header.is_some() {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "duplicate n= header".into(),
                });
            }
            let n: usize = value.trim().parse().map_err(|_| Error::Syntax {
                line: line_no,
                message: format!("invalid header value {value:?}"),
            })?;
            if n == 0 {
                return Err(Error::Syntax {
                    line: line_no,
                    message: "n must be positive".into(),
                });
            }
            header = Some(n);
            continue;
        }
        let mut edge = Vec::new();
        for token in line.split_whitespace() {
            if !token.chars().all(is_token_char) {
                return Err(Error::Syntax {
                    line: line_no,
                    message: format!("invalid vertex token {token:?}"),
                });
            }
            let v = builder.intern(token);
            if edge.contains(&v) {
                return Err(Error::DuplicateVertex {
                    line: line_no,
                    vertex: token.to_string(),
                });
            }
            edge.push(v);
        }
        edges.push(edge);
    }

    if edges.is_empty() {
        return Err(Error::Syntax {
            line: text.lines().count().max(1),
            message: "no edges".into(),
        });
    }
    let n = header.unwrap_or(edges.len());
    LinearHypergraph::new(n, builder.names, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tri3() {
        let h = parse_hypergraph("a b c\na d e\nb d f").unwrap();
        assert_eq!(h.vertices().len(), 6);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.n(), 3);
    }

    #[test]
    fn first_appearance_order_and_sorted_edges() {
        let h = parse_hypergraph("c a\nb a").unwrap();
        assert_eq!(h.vertices(), &["c", "a", "b"]);
        assert_eq!(h.edges(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn duplicate_vertex_in_edge() {
        assert_eq!(
            parse_hypergraph("a a b"),
            Err(Error::DuplicateVertex {
                line: 1,
                vertex: "a".into()
            })
        );
    }

    #[test]
    fn identical_edges_parse() {
        assert!(parse_hypergraph("a b\na b").is_ok());
    }

    #[test]
    fn comments_blank_lines_and_header() {
        let h = parse_hypergraph("# tiny\n\nn=4\na b\n  # indented comment\nc d\n").unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        match parse_hypergraph("a b\nc $d") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_hypergraph("n=2\nn=3\na") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_hypergraph("n=x\na"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_hypergraph("# nothing\n"), Err(Error::Syntax { .. })));
    }
}
