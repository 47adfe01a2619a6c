//! Text formats: graph6 encode/decode, a plain edge-list format, and DOT
//! output. Decoders are strict and reject malformed input instead of
//! guessing, since they sit on the untrusted-input boundary.

use crate::graph::SimpleGraph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Encodes a graph in graph6 format.
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Decodes a single graph6 string. A leading `>>graph6<<` header and
/// surrounding whitespace are tolerated; everything else is strict: byte
/// range, exact length, and zero padding bits are all checked.
pub fn from_graph6(s: &str) -> Result<SimpleGraph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err("empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(format!("byte {} out of range at position {}", b, i)));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6_err("vertex counts above 258047 are not supported"));
        }
        if bytes.len() < 4 {
            return Err(g6_err("truncated vertex count"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > 64 {
        return Err(Error::TooLarge { n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(g6_err(format!(
            "edge section has {} bytes, expected {}",
            body.len(),
            expect
        )));
    }
    let mut g = SimpleGraph::empty(n)?;
    let mut idx = 0usize;
    let mut edges = Vec::new();
    for &b in body {
        let group = b - 63;
        for k in (0..6).rev() {
            let bit = (group >> k) & 1;
            if idx < nbits {
                if bit == 1 {
                    edges.push(idx);
                }
            } else if bit == 1 {
                return Err(g6_err("nonzero padding bits"));
            }
            idx += 1;
        }
    }
    let mut pos = 0usize;
    let mut it = edges.iter().peekable();
    'outer: for v in 1..n {
        for u in 0..v {
            match it.peek() {
                Some(&&e) if e == pos => {
                    g = g.with_edge(u, v)?;
                    it.next();
                }
                Some(_) => {}
                None => break 'outer,
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Decodes a whitespace-separated stream of graph6 strings, for example one
/// per line. A `>>graph6<<` header before the first graph is tolerated.
pub fn parse_graph6_stream(s: &str) -> Result<Vec<SimpleGraph>> {
    let s = s.trim_start();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    s.split_whitespace().map(from_graph6).collect()
}

fn el_err(msg: impl Into<String>) -> Error {
    Error::EdgeList(msg.into())
}

/// Parses the plain edge-list format: a `n m` line followed by exactly `m`
/// lines `u v`. Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(s: &str) -> Result<SimpleGraph> {
    let mut lines = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| el_err("missing header line"))?;
    let mut parts = head.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| el_err("missing vertex count"))?
        .parse()
        .map_err(|_| el_err(format!("bad vertex count in {:?}", head)))?;
    let m: usize = parts
        .next()
        .ok_or_else(|| el_err("missing edge count"))?
        .parse()
        .map_err(|_| el_err(format!("bad edge count in {:?}", head)))?;
    if parts.next().is_some() {
        return Err(el_err(format!("trailing tokens in header {:?}", head)));
    }
    if n > 64 {
        return Err(Error::TooLarge { n });
    }
    if m > n * n.saturating_sub(1) / 2 {
        return Err(el_err(format!(
            "{} edges cannot fit in a simple graph on {} vertices",
            m, n
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref() {
        if edges.len() == m {
            return Err(el_err(format!("unexpected extra line {:?}", line)));
        }
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .ok_or_else(|| el_err("empty edge line"))?
            .parse()
            .map_err(|_| el_err(format!("bad endpoint in {:?}", line)))?;
        let v: usize = parts
            .next()
            .ok_or_else(|| el_err(format!("missing endpoint in {:?}", line)))?
            .parse()
            .map_err(|_| el_err(format!("bad endpoint in {:?}", line)))?;
        if parts.next().is_some() {
            return Err(el_err(format!("trailing tokens in {:?}", line)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(el_err(format!(
            "header promises {} edges, found {}",
            m,
            edges.len()
        )));
    }
    SimpleGraph::from_edges(n, &edges)
}

/// Writes the edge-list format parsed by [`parse_edge_list`].
pub fn format_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Writes the graph as DOT for external layout tools.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", name);
    for v in 0..g.n() {
        out.push_str(&format!("  {};\n", v));
    }
    for e in g.edges() {
        out.push_str(&format!("  {} -- {};\n", e.u, e.v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&SimpleGraph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&SimpleGraph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&SimpleGraph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&SimpleGraph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&SimpleGraph::cycle(4).unwrap()), "Cl");
    }

    #[test]
    fn known_decoding_five_vertices() {
        // independently computed: DQc is the 5-vertex graph with edges
        // 0-2, 0-4, 1-3, 3-4
        let g = from_graph6("DQc").unwrap();
        let expect =
            SimpleGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g, expect);
        assert_eq!(to_graph6(&expect), "DQc");
    }

    #[test]
    fn roundtrip_various() {
        let graphs = vec![
            SimpleGraph::empty(0).unwrap(),
            SimpleGraph::empty(7).unwrap(),
            SimpleGraph::complete(7).unwrap(),
            SimpleGraph::cycle(9).unwrap(),
            SimpleGraph::complete_bipartite(3, 3).unwrap(),
            SimpleGraph::complete(13).unwrap(),
        ];
        for g in graphs {
            let s = to_graph6(&g);
            assert_eq!(from_graph6(&s).unwrap(), g, "roundtrip of {}", s);
        }
    }

    #[test]
    fn large_count_header() {
        let g = SimpleGraph::empty(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap().n(), 63);
        let g = SimpleGraph::complete(64).unwrap();
        let s = to_graph6(&g);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap().n(), 3);
        let list = parse_graph6_stream(">>graph6<<\nBw\nA_\n").unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list[0].n(), 3);
        assert_eq!(list[1].n(), 2);
    }

    #[test]
    fn strict_rejections() {
        assert!(from_graph6("").is_err());
        // byte below 63
        assert!(from_graph6("B!").is_err());
        // byte above 126
        assert!(from_graph6("B\u{7f}").is_err());
        // truncated edge section
        assert!(from_graph6("D").is_err());
        // extra bytes
        assert!(from_graph6("Bww").is_err());
        // nonzero padding: K3 has 3 real bits, low 3 bits must be clear
        let with_pad = String::from_utf8(vec![b'B', 63 + 0b111001]).unwrap();
        assert!(from_graph6(&with_pad).is_err());
        // 65 vertices
        assert!(matches!(
            from_graph6("~?@@"),
            Err(Error::TooLarge { n: 65 })
        ));
        // eight-byte count form
        assert!(from_graph6("~~?????").is_err());
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = SimpleGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        let text = format_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_accepts_comments() {
        let text = "# small test\n4 2\n\n0 1\n# middle\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_rejections() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3").is_err());
        assert!(parse_edge_list("3 1 9\n0 1\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n0 1 2\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("3 1\n0 5\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n0 1\n").is_err());
    }

    #[test]
    fn dot_output_shape() {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let dot = to_dot(&g, "p3");
        assert!(dot.starts_with("graph p3 {"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 -- 2;"));
        assert!(dot.ends_with("}\n"));
    }
}
