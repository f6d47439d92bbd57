//! Simple undirected graphs, the named families used as ground truth, and
//! BFS distances.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::exact::rational::rat;
use crate::exact::RationalMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is disconnected (vertex {unreached} unreachable from 0)")]
    Disconnected { unreached: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: expected `u v`, got `{text}`")]
    Parse { line: usize, text: String },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    /// Parses `u v` lines (0-indexed). Blank lines and `#` comments are skipped;
    /// the vertex count is one more than the largest index seen.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = || GraphError::Parse {
                line: lineno + 1,
                text: line.to_owned(),
            };
            let mut parts = line.split_whitespace();
            let u: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(parse_err)?;
            let v: usize = parts.next().and_then(|t| t.parse().ok()).ok_or_else(parse_err)?;
            if parts.next().is_some() {
                return Err(parse_err());
            }
            edges.push((u, v));
        }
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::from_edges(n, edges)
    }

    /// Graph on `vertices` with an edge wherever `adjacent` holds.
    fn from_relation<T>(vertices: &[T], adjacent: impl Fn(&T, &T) -> bool) -> Self {
        let n = vertices.len();
        let adj = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && adjacent(&vertices[i], &vertices[j]))
                    .collect()
            })
            .collect();
        Self { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are reached");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances by BFS from every vertex.
    pub fn distances(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        let rows: Vec<Vec<Option<usize>>> = (0..self.vertex_count()).into_par_iter().map(|s| self.bfs(s)).collect();
        rows.into_iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(v, d)| d.ok_or(GraphError::Disconnected { unreached: v }))
                    .collect()
            })
            .collect()
    }

    pub fn adjacency_matrix(&self) -> RationalMatrix {
        let n = self.vertex_count();
        RationalMatrix::from_fn(n, n, |i, j| rat(i64::from(self.adj[i].binary_search(&j).is_ok())))
    }

    pub fn distance_matrix(&self) -> Result<RationalMatrix, GraphError> {
        let dist = self.distances()?;
        let n = self.vertex_count();
        Ok(RationalMatrix::from_fn(n, n, |i, j| rat(dist[i][j] as i64)))
    }
}

/// 0/1 matrix of pairs at distance exactly `i`.
pub fn distance_indicator(dist: &[Vec<usize>], i: usize) -> RationalMatrix {
    let n = dist.len();
    RationalMatrix::from_fn(n, n, |u, v| rat(i64::from(dist[u][v] == i)))
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Cycle(usize),
    Petersen,
    Hamming { d: usize, q: usize },
    Johnson { n: usize, m: usize },
    CompleteMultipartite { parts: usize, size: usize },
    Hypercube(usize),
}

impl Family {
    pub fn parse(name: &str, params: &[usize]) -> Result<Self, GraphError> {
        let bad = |family: &'static str, expected: &str| GraphError::InvalidParams {
            family,
            reason: format!("expected {expected}, got {params:?}"),
        };
        let family = match name.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "cycle" => match params {
                &[n] => Family::Cycle(n),
                _ => return Err(bad("cycle", "one parameter n")),
            },
            "petersen" => match params {
                [] => Family::Petersen,
                _ => return Err(bad("petersen", "no parameters")),
            },
            "hamming" => match params {
                &[d, q] => Family::Hamming { d, q },
                _ => return Err(bad("hamming", "two parameters d,q")),
            },
            "johnson" => match params {
                &[n, m] => Family::Johnson { n, m },
                _ => return Err(bad("johnson", "two parameters n,m")),
            },
            "complete_multipartite" | "multipartite" => match params {
                &[parts, size] => Family::CompleteMultipartite { parts, size },
                _ => return Err(bad("complete_multipartite", "two parameters m,b")),
            },
            "hypercube" | "cube" => match params {
                &[d] => Family::Hypercube(d),
                _ => return Err(bad("hypercube", "one parameter d")),
            },
            _ => return Err(GraphError::UnknownFamily(name.to_owned())),
        };
        family.check()?;
        Ok(family)
    }

    fn check(&self) -> Result<(), GraphError> {
        let invalid = |family, reason: &str| {
            Err(GraphError::InvalidParams {
                family,
                reason: reason.to_owned(),
            })
        };
        match *self {
            Family::Cycle(n) if n < 3 => invalid("cycle", "need n >= 3"),
            Family::Hamming { d, q } if d < 1 || q < 2 => invalid("hamming", "need d >= 1 and q >= 2"),
            Family::Johnson { n, m } if m == 0 || m >= n => invalid("johnson", "need 1 <= m < n"),
            Family::CompleteMultipartite { parts, size } if parts < 2 || size < 1 => {
                invalid("complete_multipartite", "need m >= 2 and b >= 1")
            }
            Family::Hypercube(d) if d < 1 => invalid("hypercube", "need d >= 1"),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Graph {
        match *self {
            Family::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid"),
            Family::Petersen => {
                let pairs = subsets(5, 2);
                Graph::from_relation(&pairs, |x, y| x.iter().all(|e| !y.contains(e)))
            }
            Family::Hamming { d, q } => {
                let words = words(d, q);
                Graph::from_relation(&words, |x, y| x.iter().zip(y).filter(|(a, b)| a != b).count() == 1)
            }
            Family::Hypercube(d) => Family::Hamming { d, q: 2 }.build(),
            Family::Johnson { n, m } => {
                let sets = subsets(n, m);
                Graph::from_relation(&sets, |x, y| x.iter().filter(|e| y.contains(e)).count() == m - 1)
            }
            Family::CompleteMultipartite { parts, size } => {
                let labels: Vec<usize> = (0..parts * size).map(|v| v / size).collect();
                Graph::from_relation(&labels, |x, y| x != y)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Petersen => write!(f, "petersen"),
            Family::Hamming { d, q } => write!(f, "hamming({d},{q})"),
            Family::Johnson { n, m } => write!(f, "johnson({n},{m})"),
            Family::CompleteMultipartite { parts, size } => write!(f, "complete_multipartite({parts},{size})"),
            Family::Hypercube(d) => write!(f, "hypercube({d})"),
        }
    }
}

/// Accepts `name` or `name(p1,p2)`.
impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, params) = match s.split_once('(') {
            Some((name, rest)) => (name, rest.trim_end_matches(')')),
            None => (s, ""),
        };
        let params = parse_params(params).map_err(|_| GraphError::InvalidParams {
            family: "family",
            reason: format!("cannot parse parameters in `{s}`"),
        })?;
        Family::parse(name, &params)
    }
}

/// Comma separated nonnegative integers; empty input gives no parameters.
pub fn parse_params(text: &str) -> Result<Vec<usize>, std::num::ParseIntError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| t.trim().parse()).collect()
}

/// Shorthand for `Family::parse(name, params)?.build()`.
pub fn build_family(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    Ok(Family::parse(name, params)?.build())
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

fn words(d: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..q).map(move |s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}
