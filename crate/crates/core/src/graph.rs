//! Directed graph model and the plain-text node/link list formats.
//!
//! Two plain-text formats are understood:
//!
//! * the link list, one record per source: `<src>. <t1> <t2> ... ,` where an
//!   empty target list (`33. ,`) marks a dangling node;
//! * the node list, one record per node: `<index> <name>,` in ascending index
//!   order.
//!
//! Whitespace, including line breaks, is insignificant between tokens of the
//! link list. All indices are 1-based in text and JSON; in memory nodes are
//! addressed by their 0-based position.

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// External (1-based) node identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(usize);

impl NodeId {
    pub fn new(one_based: usize) -> Option<Self> {
        (one_based >= 1).then_some(NodeId(one_based))
    }

    pub fn from_index(index: usize) -> Self {
        NodeId(index + 1)
    }

    /// The 1-based value used in files and reports.
    pub fn get(self) -> usize {
        self.0
    }

    /// 0-based position in memory.
    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unweighted directed graph with labelled nodes.
///
/// Out-lists keep the order in which targets were given; duplicate targets
/// are collapsed on construction. Self-loops are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    labels: Vec<String>,
    out_links: Vec<Vec<usize>>,
}

impl DirectedGraph {
    /// Graph with `n` nodes, no links, and labels `"1"`..`"n"`.
    pub fn with_nodes(n: usize) -> Self {
        DirectedGraph {
            labels: default_labels(n),
            out_links: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 0-based out-lists.
    pub fn from_adjacency(labels: Vec<String>, out_links: Vec<Vec<usize>>) -> Result<Self> {
        if labels.len() != out_links.len() {
            return Err(Error::Dimension {
                expected: out_links.len(),
                got: labels.len(),
            });
        }
        let n = labels.len();
        let mut cleaned = Vec::with_capacity(n);
        for (src, targets) in out_links.into_iter().enumerate() {
            let mut seen = HashSet::with_capacity(targets.len());
            let mut list = Vec::with_capacity(targets.len());
            for t in targets {
                if t >= n {
                    return Err(Error::Range {
                        record: src + 1,
                        index: t + 1,
                        n,
                    });
                }
                if seen.insert(t) {
                    list.push(t);
                }
            }
            cleaned.push(list);
        }
        Ok(DirectedGraph {
            labels,
            out_links: cleaned,
        })
    }

    /// Builds a graph from 0-based `(src, dst)` pairs with default labels.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out_links = vec![Vec::new(); n];
        for &(s, t) in edges {
            if s >= n {
                return Err(Error::Range {
                    record: s + 1,
                    index: s + 1,
                    n,
                });
            }
            out_links[s].push(t);
        }
        Self::from_adjacency(default_labels(n), out_links)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.out_links.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn out_links(&self, node: usize) -> &[usize] {
        &self.out_links[node]
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.out_links[node].len()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for targets in &self.out_links {
            for &t in targets {
                deg[t] += 1;
            }
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.out_links.iter().map(Vec::len).collect()
    }

    pub fn link_count(&self) -> usize {
        self.out_links.iter().map(Vec::len).sum()
    }

    pub fn has_link(&self, src: usize, dst: usize) -> bool {
        self.out_links[src].contains(&dst)
    }

    /// All links as 0-based `(src, dst)` pairs, grouped by source.
    pub fn links(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_links
            .iter()
            .enumerate()
            .flat_map(|(s, ts)| ts.iter().map(move |&t| (s, t)))
    }

    /// Nodes with no outgoing link, ascending.
    pub fn dangling(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.out_links[i].is_empty())
            .collect()
    }

    /// The graph with every link `a -> b` replaced by `b -> a`.
    pub fn reverse(&self) -> DirectedGraph {
        let mut rev = vec![Vec::new(); self.n()];
        for (s, t) in self.links() {
            rev[t].push(s);
        }
        DirectedGraph {
            labels: self.labels.clone(),
            out_links: rev,
        }
    }

    /// Equality of the link sets, ignoring out-list order and labels.
    pub fn same_adjacency(&self, other: &DirectedGraph) -> bool {
        if self.n() != other.n() {
            return false;
        }
        self.out_links.iter().zip(&other.out_links).all(|(a, b)| {
            let mut a = a.clone();
            let mut b = b.clone();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        })
    }

    pub(crate) fn out_links_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.out_links
    }

    /// JSON interchange form with 1-based link endpoints.
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            labels: self.labels.clone(),
            links: self.links().map(|(s, t)| [s + 1, t + 1]).collect(),
        }
    }

    pub fn from_json(doc: &GraphJson) -> Result<Self> {
        if doc.labels.len() != doc.n {
            return Err(Error::Dimension {
                expected: doc.n,
                got: doc.labels.len(),
            });
        }
        let mut out_links = vec![Vec::new(); doc.n];
        for &[s, t] in &doc.links {
            for idx in [s, t] {
                if idx == 0 || idx > doc.n {
                    return Err(Error::Range {
                        record: s,
                        index: idx,
                        n: doc.n,
                    });
                }
            }
            out_links[s - 1].push(t - 1);
        }
        Self::from_adjacency(doc.labels.clone(), out_links)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text)?;
        Self::from_json(&doc)
    }
}

/// `{"n": int, "labels": [string], "links": [[src, target], ...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub labels: Vec<String>,
    pub links: Vec<[usize; 2]>,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Tok {
    Num(usize),
    Dot,
    Comma,
}

fn tokenize_links(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut toks = Vec::new();
    let mut line = 1;
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() => {}
            '.' => toks.push((Tok::Dot, line)),
            ',' => toks.push((Tok::Comma, line)),
            '0'..='9' => {
                let mut end = pos + 1;
                while let Some(&(p, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = p + 1;
                    chars.next();
                }
                let value = text[pos..end].parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("number too large: {}", &text[pos..end]),
                })?;
                toks.push((Tok::Num(value), line));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(toks)
}

/// Raw records `(line, source, targets)` of a link list, 1-based.
fn link_records(text: &str) -> Result<Vec<(usize, usize, Vec<usize>)>> {
    let toks = tokenize_links(text)?;
    let mut records = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        let (tok, line) = toks[i];
        let src = match tok {
            Tok::Num(v) => v,
            _ => {
                return Err(Error::Parse {
                    line,
                    message: "expected source node number".into(),
                })
            }
        };
        match toks.get(i + 1) {
            Some((Tok::Dot, _)) => {}
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("missing dot after source {src}"),
                })
            }
        }
        i += 2;
        let mut targets = Vec::new();
        loop {
            match toks.get(i) {
                Some((Tok::Comma, _)) => {
                    i += 1;
                    break;
                }
                Some((Tok::Num(_), _)) if matches!(toks.get(i + 1), Some((Tok::Dot, _))) => {
                    return Err(Error::Parse {
                        line,
                        message: format!("missing terminal comma in record for source {src}"),
                    });
                }
                Some((Tok::Num(t), _)) => {
                    targets.push(*t);
                    i += 1;
                }
                Some((Tok::Dot, l)) => {
                    return Err(Error::Parse {
                        line: *l,
                        message: format!("unexpected dot in record for source {src}"),
                    })
                }
                None => {
                    return Err(Error::Parse {
                        line,
                        message: format!("missing terminal comma in record for source {src}"),
                    })
                }
            }
        }
        records.push((line, src, targets));
    }
    Ok(records)
}

/// Parses a link list for a graph with `n` declared nodes.
///
/// Sources that have no record get an empty out-list. Labels default to the
/// node numbers.
pub fn parse_link_list(text: &str, n: usize) -> Result<DirectedGraph> {
    let records = link_records(text)?;
    build_from_records(records, n)
}

/// Like [`parse_link_list`] with `n` taken as the largest index mentioned.
pub fn parse_link_list_inferred(text: &str) -> Result<DirectedGraph> {
    let records = link_records(text)?;
    let n = records
        .iter()
        .flat_map(|(_, s, ts)| std::iter::once(*s).chain(ts.iter().copied()))
        .max()
        .unwrap_or(0);
    build_from_records(records, n)
}

fn build_from_records(records: Vec<(usize, usize, Vec<usize>)>, n: usize) -> Result<DirectedGraph> {
    let mut out_links: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, src, targets) in records {
        if src == 0 || src > n {
            return Err(Error::Range {
                record: src,
                index: src,
                n,
            });
        }
        if let Some(&bad) = targets.iter().find(|&&t| t == 0 || t > n) {
            return Err(Error::Range {
                record: src,
                index: bad,
                n,
            });
        }
        let slot = &mut out_links[src - 1];
        if slot.is_some() {
            return Err(Error::Parse {
                line,
                message: format!("duplicate record for source {src}"),
            });
        }
        *slot = Some(targets.into_iter().map(|t| t - 1).collect());
    }
    let out_links = out_links
        .into_iter()
        .map(Option::unwrap_or_default)
        .collect();
    DirectedGraph::from_adjacency(default_labels(n), out_links)
}

/// Parses a node list into labels ordered by index.
///
/// A record ends at a comma. Two relaxations cover hand-edited lists: a
/// record also ends where the next line starts with the following index, and
/// the final record may end with a period instead of a comma.
pub fn parse_node_list(text: &str) -> Result<Vec<String>> {
    let mut labels: Vec<String> = Vec::new();
    let mut open: Option<(usize, Vec<&str>)> = None;
    let mut last_line = 0;

    let tokens: Vec<(usize, bool, &str)> = text
        .lines()
        .enumerate()
        .flat_map(|(ln, l)| {
            l.split_whitespace()
                .enumerate()
                .map(move |(k, w)| (ln + 1, k == 0, w))
        })
        .collect();
    let total = tokens.len();

    for (pos, (line, first_on_line, word)) in tokens.into_iter().enumerate() {
        last_line = line;
        let expected = labels.len() + 1;
        if let Some((rec_line, words)) = &mut open {
            let starts_next = first_on_line
                && !words.is_empty()
                && word.trim_end_matches(',').parse::<usize>() == Ok(expected + 1);
            if !starts_next {
                let is_last = pos + 1 == total;
                if let Some(w) = word.strip_suffix(',') {
                    if !w.is_empty() {
                        words.push(w);
                    }
                    labels.push(finish_label(*rec_line, words)?);
                    open = None;
                } else if let (true, Some(w)) = (is_last, word.strip_suffix('.')) {
                    if !w.is_empty() {
                        words.push(w);
                    }
                    labels.push(finish_label(*rec_line, words)?);
                    open = None;
                } else {
                    words.push(word);
                }
                continue;
            }
            labels.push(finish_label(*rec_line, words)?);
        }
        let expected = labels.len() + 1;
        match word.parse::<usize>() {
            Ok(idx) if idx == expected => open = Some((line, Vec::new())),
            Ok(idx) => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected node index {expected}, found {idx}"),
                })
            }
            Err(_) => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected node index {expected}, found {word:?}"),
                })
            }
        }
    }
    if open.is_some() {
        return Err(Error::Parse {
            line: last_line,
            message: "missing terminal comma".into(),
        });
    }
    Ok(labels)
}

fn finish_label(line: usize, words: &[&str]) -> Result<String> {
    if words.is_empty() {
        return Err(Error::Parse {
            line,
            message: "empty node name".into(),
        });
    }
    Ok(words.join(" "))
}

/// Serializes the graph's links in the link-list format.
pub fn to_link_list(g: &DirectedGraph) -> String {
    let mut out = String::new();
    for src in 0..g.n() {
        let targets: Vec<String> = g
            .out_links(src)
            .iter()
            .map(|t| (t + 1).to_string())
            .collect();
        let _ = writeln!(out, "{}. {},", src + 1, targets.join(" "));
    }
    out
}

pub fn to_node_list(labels: &[String]) -> String {
    let mut out = String::new();
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "{} {},", i + 1, l);
    }
    out
}
