//! Text input: an edge list with an `n m` header, or a family spec such as
//! `cycle:5`.

use thiserror::Error;

use crate::graph::{family, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: expected header \"n m\", got {text:?}")]
    Header { line: usize, text: String },
    #[error("line {line}: expected edge \"u v\", got {text:?}")]
    Edge { line: usize, text: String },
    #[error("header promises {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn two_numbers(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

/// Parses either input format. Text containing `:` is a family spec;
/// anything else is an edge list where `#` starts a comment.
pub fn parse_input(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((line, first)) = lines.next() else {
        return Err(ParseError::Empty);
    };
    if first.contains(':') {
        if let Some((line, extra)) = lines.next() {
            return Err(ParseError::Header {
                line,
                text: extra.to_string(),
            });
        }
        return Ok(family(first)?);
    }
    let (n, m) = two_numbers(first).ok_or_else(|| ParseError::Header {
        line,
        text: first.to_string(),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        edges.push(two_numbers(l).ok_or_else(|| ParseError::Edge {
            line,
            text: l.to_string(),
        })?);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list() {
        let g = parse_input("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        let g = parse_input("# square\n  4 4 \n0 1 # first\n\n1\t2\n2 3\n3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        assert_eq!(parse_input("3 0").unwrap(), Graph::empty(3).unwrap());
    }

    #[test]
    fn family_spec() {
        assert_eq!(parse_input("cycle:5").unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(parse_input("  cycle:5 # pentagon\n").unwrap(), Graph::cycle(5).unwrap());
        assert!(parse_input("cycle:5\ncycle:6").is_err());
        assert!(matches!(parse_input("cycle:x"), Err(ParseError::Graph(_))));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_input("4 1\n0 5"),
            Err(ParseError::Graph(GraphError::EndpointOutOfRange { u: 0, v: 5, n: 4 }))
        );
        assert_eq!(parse_input("3 1\n1 1"), Err(ParseError::Graph(GraphError::Loop(1))));
        assert_eq!(parse_input(""), Err(ParseError::Empty));
        assert_eq!(parse_input("# only\n"), Err(ParseError::Empty));
        assert!(matches!(parse_input("four 1\n0 1"), Err(ParseError::Header { line: 1, .. })));
        assert!(matches!(parse_input("4\n0 1"), Err(ParseError::Header { .. })));
        assert!(matches!(parse_input("4 1\n0 1 2"), Err(ParseError::Edge { line: 2, .. })));
        assert!(matches!(parse_input("4 2\n0 1"), Err(ParseError::EdgeCount { expected: 2, found: 1 })));
        assert!(matches!(parse_input("4 -1"), Err(ParseError::Header { .. })));
    }
}
