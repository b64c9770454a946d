//! Text interchange: whitespace edge lists and graph6 words.
//!
//! Both readers normalize edges to lexicographic (u, v) order before
//! building the graph, so edge ids — and therefore every downstream
//! report — are independent of the input encoding.

use crate::graph::Graph;
use serde::Serialize;
use std::collections::HashSet;
use std::error::Error;
use std::fmt;

/// Reader failure, pointing at the 1-based input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    ExpectedInteger { token: String },
    WrongTokenCount { found: usize },
    SelfLoop { v: usize },
    DuplicateEdge { u: usize, v: usize },
    /// graph6 byte outside the printable 63..=126 range.
    Graph6BadCharacter { byte: u8 },
    /// graph6 word length does not match its declared vertex count.
    Graph6MalformedWidth,
    /// Nonzero bits after the last adjacency bit.
    Graph6TrailingBits,
    /// The 36-bit size form (n > 258047) is out of scope.
    Graph6SizeUnsupported,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::ExpectedInteger { token } => {
                write!(f, "expected a vertex id, found {token:?}")
            }
            ParseErrorKind::WrongTokenCount { found } => {
                write!(f, "expected two fields \"u v\", found {found}")
            }
            ParseErrorKind::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            ParseErrorKind::DuplicateEdge { u, v } => {
                write!(f, "duplicate edge ({u}, {v})")
            }
            ParseErrorKind::Graph6BadCharacter { byte } => {
                write!(f, "graph6 byte {byte} is outside the printable range 63..=126")
            }
            ParseErrorKind::Graph6MalformedWidth => {
                write!(f, "graph6 word length does not match its vertex count")
            }
            ParseErrorKind::Graph6TrailingBits => {
                write!(f, "graph6 padding bits are not zero")
            }
            ParseErrorKind::Graph6SizeUnsupported => {
                write!(f, "graph6 words for more than 258047 vertices are not supported")
            }
        }
    }
}

impl Error for ParseError {}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(line_no, ParseErrorKind::WrongTokenCount { found: tokens.len() }));
    }
    let number = |token: &str| {
        token.parse::<usize>().map_err(|_| {
            err(line_no, ParseErrorKind::ExpectedInteger { token: token.to_string() })
        })
    };
    Ok((number(tokens[0])?, number(tokens[1])?))
}

/// Parses a whitespace edge list: one `u v` pair per line, `#` starting a
/// comment, blank lines ignored. A first line `n m` is taken as a header
/// declaring the vertex count iff `n >= 1`, `m` equals the number of edge
/// lines that follow, and every following endpoint is below `n`; otherwise
/// the first line is an edge like any other. Without a header the vertex
/// count is one past the largest endpoint. Loops and duplicates are
/// rejected with the offending line number.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    // (1-based physical line, content after comment stripping)
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    if lines.is_empty() {
        return Ok(Graph::new(0, &[]).expect("empty graph"));
    }

    let header = {
        let (line_no, first) = lines[0];
        match parse_pair(line_no, first) {
            Ok((n, m)) if n >= 1 && m == lines.len() - 1 => {
                let fits = lines[1..].iter().all(|&(no, s)| {
                    matches!(parse_pair(no, s), Ok((u, v)) if u < n && v < n)
                });
                if fits {
                    Some(n)
                } else {
                    None
                }
            }
            _ => None,
        }
    };

    let data = if header.is_some() { &lines[1..] } else { &lines[..] };
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(data.len());
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for &(line_no, s) in data {
        let (a, b) = parse_pair(line_no, s)?;
        if a == b {
            return Err(err(line_no, ParseErrorKind::SelfLoop { v: a }));
        }
        let pair = (a.min(b), a.max(b));
        if !seen.insert(pair) {
            return Err(err(line_no, ParseErrorKind::DuplicateEdge { u: pair.0, v: pair.1 }));
        }
        edges.push(pair);
    }
    let n = header
        .unwrap_or_else(|| edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0));
    edges.sort_unstable();
    Ok(Graph::new(n, &edges).expect("validated above"))
}

/// Writes a graph back as an edge list with an `n m` header line (empty
/// string for the vertexless graph), inverse to `parse_edge_list`.
pub fn format_edge_list(g: &Graph) -> String {
    if g.n() == 0 {
        return String::new();
    }
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_OFFSET: u8 = 63;
const G6_MAX_SHORT: usize = 62;
const G6_MAX_WIDE: usize = 258047;

/// Decodes one graph6 word: a size prefix (one byte for n <= 62, `~` plus
/// three bytes for n <= 258047) followed by the upper-triangular adjacency
/// bitmap read column by column, six bits per byte, offset by 63.
pub fn parse_graph6(word: &str) -> Result<Graph, ParseError> {
    parse_graph6_at_line(word, 1)
}

fn parse_graph6_at_line(word: &str, line_no: usize) -> Result<Graph, ParseError> {
    let fail = |kind| Err(err(line_no, kind));
    let bytes = word.as_bytes();
    let sixbit = |b: u8| -> Result<usize, ParseError> {
        if (G6_OFFSET..=126).contains(&b) {
            Ok((b - G6_OFFSET) as usize)
        } else {
            Err(err(line_no, ParseErrorKind::Graph6BadCharacter { byte: b }))
        }
    };

    if bytes.is_empty() {
        return fail(ParseErrorKind::Graph6MalformedWidth);
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return fail(ParseErrorKind::Graph6SizeUnsupported);
        }
        if bytes.len() < 4 {
            return fail(ParseErrorKind::Graph6MalformedWidth);
        }
        let n = (sixbit(bytes[1])? << 12) | (sixbit(bytes[2])? << 6) | sixbit(bytes[3])?;
        (n, &bytes[4..])
    } else {
        (sixbit(bytes[0])?, &bytes[1..])
    };

    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return fail(ParseErrorKind::Graph6MalformedWidth);
    }
    let mut edges = Vec::new();
    let mut k = 0usize; // index into the column-major bit stream
    let bit_at = |k: usize| -> Result<bool, ParseError> {
        let v = sixbit(body[k / 6])?;
        Ok(v >> (5 - k % 6) & 1 == 1)
    };
    for j in 1..n {
        for i in 0..j {
            if bit_at(k)? {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in nbits..body.len() * 6 {
        if bit_at(pad)? {
            return fail(ParseErrorKind::Graph6TrailingBits);
        }
    }
    edges.sort_unstable();
    Ok(Graph::new(n, &edges).expect("column-major pairs are distinct and in range"))
}

/// The graph is too large for the supported graph6 size prefixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Graph6SizeError {
    pub n: usize,
}

impl fmt::Display for Graph6SizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices exceed the supported graph6 range of {}", self.n, G6_MAX_WIDE)
    }
}

impl Error for Graph6SizeError {}

/// Encodes a graph as one graph6 word, inverse to `parse_graph6`.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6SizeError> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= G6_MAX_SHORT {
        out.push(G6_OFFSET + n as u8);
    } else if n <= G6_MAX_WIDE {
        out.push(126);
        out.push(G6_OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(G6_OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(G6_OFFSET + (n & 0x3f) as u8);
    } else {
        return Err(Graph6SizeError { n });
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(G6_OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(G6_OFFSET + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("all bytes are printable ASCII"))
}

/// Parses a stream of graph6 words, one per line, skipping blank lines and
/// an optional `>>graph6<<` banner.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut graphs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
        }
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6_at_line(line, i + 1)?);
    }
    Ok(graphs)
}

/// How `parse_auto` read the text, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    EdgeList,
    Graph6,
}

/// Reads either supported format, deciding by shape: a first data line
/// with internal whitespace is an edge list (one graph), anything else is
/// a stream of graph6 words.
pub fn parse_auto(text: &str) -> Result<(Vec<Graph>, InputKind), ParseError> {
    let first = text
        .lines()
        .map(|raw| raw.split('#').next().unwrap_or("").trim())
        .find(|s| !s.is_empty() && *s != ">>graph6<<");
    match first {
        None => Ok((Vec::new(), InputKind::EdgeList)),
        Some(line) if line.split_whitespace().nth(1).is_some() => {
            Ok((vec![parse_edge_list(text)?], InputKind::EdgeList))
        }
        Some(_) => Ok((parse_graph6_stream(text)?, InputKind::Graph6)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{all_graphs, complete_bipartite, cycle, path, star};

    /// Same graph with edge ids renumbered to lexicographic order, the
    /// form every parser emits.
    fn lex(g: &Graph) -> Graph {
        let mut edges = g.edges().to_vec();
        edges.sort_unstable();
        Graph::new(g.n(), &edges).unwrap()
    }

    #[test]
    fn parses_plain_edge_list() {
        let g = parse_edge_list("0 1\n1 2\n2 3").unwrap();
        assert_eq!(g, path(4));
    }

    #[test]
    fn loop_and_duplicate_are_line_numbered() {
        let e = parse_edge_list("0 0").unwrap_err();
        assert_eq!(e, err(1, ParseErrorKind::SelfLoop { v: 0 }));

        let e = parse_edge_list("0 1\n1 0").unwrap_err();
        assert_eq!(e, err(2, ParseErrorKind::DuplicateEdge { u: 0, v: 1 }));
        assert_eq!(e.to_string(), "line 2: duplicate edge (0, 1)");
    }

    #[test]
    fn header_declares_vertex_count() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g, path(4));

        // Header with zero edges: isolated vertices.
        let g = parse_edge_list("5 0").unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));

        // Header may be larger than any endpoint needs.
        let g = parse_edge_list("7 1\n0 1").unwrap();
        assert_eq!((g.n(), g.m()), (7, 1));
    }

    #[test]
    fn first_line_that_fails_header_rules_is_an_edge() {
        // Count mismatch: "3 5" cannot be a header for one edge line.
        let g = parse_edge_list("3 5\n0 1").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edges(), &[(0, 1), (3, 5)]);

        // Endpoint not below the would-be n: both lines are edges.
        let g = parse_edge_list("2 1\n0 5").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edges(), &[(0, 5), (1, 2)]);
    }

    #[test]
    fn comments_blanks_and_spacing_are_ignored() {
        let text = "  # a path\n\n 0    1 # first\n1 2\n\n# done\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn empty_text_is_the_empty_graph() {
        let g = parse_edge_list("").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        let g = parse_edge_list("# nothing\n\n").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn malformed_lines_are_rejected() {
        let e = parse_edge_list("0 1\n0 1 2").unwrap_err();
        assert_eq!(e, err(2, ParseErrorKind::WrongTokenCount { found: 3 }));

        let e = parse_edge_list("0 x").unwrap_err();
        assert_eq!(e, err(1, ParseErrorKind::ExpectedInteger { token: "x".to_string() }));

        let e = parse_edge_list("0 1\n2").unwrap_err();
        assert_eq!(e, err(2, ParseErrorKind::WrongTokenCount { found: 1 }));
    }

    #[test]
    fn edge_ids_are_input_order_independent() {
        let a = parse_edge_list("2 1\n0 2\n0 1").unwrap();
        let b = parse_edge_list("0 1\n0 2\n1 2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn edge_list_round_trips() {
        for g in [
            path(4),
            star(4),
            cycle(6),
            Graph::new(0, &[]).unwrap(),
            Graph::new(5, &[]).unwrap(),
            Graph::new(7, &[(0, 1), (2, 3)]).unwrap(), // trailing isolated vertices
        ] {
            let back = parse_edge_list(&format_edge_list(&g)).unwrap();
            assert_eq!(back, lex(&g));
        }
    }

    #[test]
    fn decodes_known_graph6_words() {
        let k5 = parse_graph6("D~{").unwrap();
        assert_eq!((k5.n(), k5.m()), (5, 10));
        assert!((0..5).all(|v| k5.degree(v) == 4));
        assert_eq!(encode_graph6(&k5).unwrap(), "D~{");

        assert_eq!(encode_graph6(&cycle(5)).unwrap(), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), lex(&cycle(5)));

        let one = parse_graph6("@").unwrap();
        assert_eq!((one.n(), one.m()), (1, 0));
        let zero = parse_graph6("?").unwrap();
        assert_eq!((zero.n(), zero.m()), (0, 0));

        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
    }

    #[test]
    fn round_trips_small_graphs() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                let word = encode_graph6(&g).unwrap();
                assert_eq!(parse_graph6(&word).unwrap(), g, "word {word:?}");
            }
        }
    }

    #[test]
    fn round_trips_wide_size_prefix() {
        let g = path(100);
        let word = encode_graph6(&g).unwrap();
        assert!(word.starts_with('~'));
        assert_eq!(parse_graph6(&word).unwrap(), g);

        let edgeless = Graph::new(63, &[]).unwrap();
        let word = encode_graph6(&edgeless).unwrap();
        assert!(word.starts_with('~'));
        assert_eq!(parse_graph6(&word).unwrap(), edgeless);

        // 62 vertices is the last size with a single-byte prefix.
        let last_short = encode_graph6(&Graph::new(62, &[]).unwrap()).unwrap();
        assert_eq!(last_short.as_bytes()[0], b'}');
        assert_eq!(parse_graph6(&last_short).unwrap().n(), 62);
    }

    #[test]
    fn rejects_malformed_graph6() {
        let kind = |w: &str| parse_graph6(w).unwrap_err().kind;
        assert_eq!(kind(""), ParseErrorKind::Graph6MalformedWidth);
        assert_eq!(kind("D"), ParseErrorKind::Graph6MalformedWidth);
        assert_eq!(kind("D~{~"), ParseErrorKind::Graph6MalformedWidth);
        assert_eq!(kind("~?"), ParseErrorKind::Graph6MalformedWidth);
        assert_eq!(kind("~~????"), ParseErrorKind::Graph6SizeUnsupported);
        assert_eq!(kind("A "), ParseErrorKind::Graph6BadCharacter { byte: b' ' });
        assert_eq!(kind("AO"), ParseErrorKind::Graph6TrailingBits);
    }

    #[test]
    fn reads_graph6_streams() {
        let words = ">>graph6<<\nDhc\n\nD~{\n";
        let graphs = parse_graph6_stream(words).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0], lex(&cycle(5)));
        assert_eq!(graphs[1].m(), 10);

        let e = parse_graph6_stream("Dhc\nD\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn both_formats_yield_identical_graphs() {
        for g in [path(4), cycle(5), star(4), complete_bipartite(3, 3)] {
            let via_text = parse_edge_list(&format_edge_list(&g)).unwrap();
            let via_word = parse_graph6(&encode_graph6(&g).unwrap()).unwrap();
            assert_eq!(via_text, via_word);
            assert_eq!(via_text, lex(&g));
        }
    }

    #[test]
    fn auto_detection_picks_the_right_reader() {
        let (gs, kind) = parse_auto("0 1\n1 2\n2 3").unwrap();
        assert_eq!(kind, InputKind::EdgeList);
        assert_eq!(gs, vec![path(4)]);

        let (gs, kind) = parse_auto("Dhc\nD~{").unwrap();
        assert_eq!(kind, InputKind::Graph6);
        assert_eq!(gs.len(), 2);

        let (gs, kind) = parse_auto(">>graph6<<\nDhc").unwrap();
        assert_eq!(kind, InputKind::Graph6);
        assert_eq!(gs, vec![lex(&cycle(5))]);

        let (gs, _) = parse_auto("").unwrap();
        assert!(gs.is_empty());
    }
}
