//! Simple graphs on vertices `1..=n`, and the graphs attached to a Dyck word.

mod bipartite;
mod chromatic;
mod qt;

pub use bipartite::{strip_isolated, word_to_bipartite, BipartiteGraph};
pub use chromatic::{
    chromatic_number, chromatic_polynomial, co_chromatic, deletion_contraction, forest_chromatic,
};
pub use qt::{graph_to_word, recognize_qt, word_to_graph, QtDecomposition};

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::dyck::{squares_below, turning_squares, DyckWord};
use crate::TooLarge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {v}")]
    Loop { v: usize },
    #[error("not quasi-threshold: component {witness:?} has no dominating vertex")]
    NotQuasiThreshold { witness: Vec<usize> },
    #[error(transparent)]
    TooLarge(#[from] TooLarge),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple undirected graph with vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Graph { adj: vec![BTreeSet::new(); n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..n).map(|u| (u, u + 1)))
    }

    /// `K_{1,n-1}` with centre `1`.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (2..=n).map(|v| (1, v)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(GraphError::VertexOutOfRange { v: x, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop { v: u });
        }
        self.adj[u - 1].insert(v);
        self.adj[v - 1].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.range(i + 2..).map(move |&v| (i + 1, v)))
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n() && self.adj[u - 1].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Connected components of the subgraph induced on `vertices`, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let inside: BTreeSet<usize> = vertices.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in &inside {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if inside.contains(&v) && seen.insert(v) {
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (1..=self.n()).collect();
        self.components_within(&all)
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n()
    }

    /// Clique number by Bron–Kerbosch with pivoting; `n` at most 128.
    pub fn clique_number(&self) -> usize {
        assert!(self.n() <= 128, "clique_number supports at most 128 vertices");
        let masks: Vec<u128> = self
            .adj
            .iter()
            .map(|nb| nb.iter().fold(0u128, |m, &v| m | 1 << (v - 1)))
            .collect();
        fn bk(masks: &[u128], size: usize, mut p: u128, mut x: u128, best: &mut usize) {
            if p == 0 {
                if x == 0 {
                    *best = (*best).max(size);
                }
                return;
            }
            if size + p.count_ones() as usize <= *best {
                return;
            }
            let pivot = (p | x).trailing_zeros() as usize;
            let mut cand = p & !masks[pivot];
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                bk(masks, size + 1, p & masks[v], x & masks[v], best);
                p &= !(1 << v);
                x |= 1 << v;
            }
        }
        let full = if self.n() == 128 { u128::MAX } else { (1u128 << self.n()) - 1 };
        let mut best = 0;
        bk(&masks, 0, full, 0, &mut best);
        best
    }

    /// Parses the edge-list format: a header `n <count>`, then one `u v` pair
    /// per line; `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut graph: Option<Graph> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| GraphError::Parse { line: line_no, msg: msg.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (&mut graph, fields.as_slice()) {
                (None, ["n", count]) => {
                    let n = count.parse().map_err(|_| parse_err("bad vertex count"))?;
                    graph = Some(Graph::new(n)?);
                }
                (None, _) => return Err(parse_err("expected header `n <count>`")),
                (Some(g), [u, v]) => {
                    let u = u.parse().map_err(|_| parse_err("bad vertex"))?;
                    let v = v.parse().map_err(|_| parse_err("bad vertex"))?;
                    g.add_edge(u, v)?;
                }
                (Some(_), _) => return Err(parse_err("expected `u v`")),
            }
        }
        graph.ok_or(GraphError::Parse { line: 0, msg: "missing header".into() })
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// The clique-union graph: `i ~ j` iff the square `(i, j)` lies below the path
/// and above the diagonal.
pub fn word_to_clique_union(w: &DyckWord) -> Graph {
    Graph::from_edges(w.n(), squares_below(w).into_iter().map(|s| (s.col, s.row)))
        .expect("squares below the path lie inside the box")
}

/// One vertex interval `col..=row` per turning square, in column order.
pub fn clique_cover_from_turns(w: &DyckWord) -> Vec<RangeInclusive<usize>> {
    turning_squares(w).into_iter().map(|s| s.col..=s.row).collect()
}
