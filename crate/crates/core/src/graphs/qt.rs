//! Quasi-threshold graphs: built from `K_1` by adding dominating vertices and
//! taking disjoint unions. Dyck words encode them through nesting.

use serde_json::{json, Value};

use super::{Graph, GraphError};
use crate::dyck::{DyckWord, Letter};
use crate::poly::Polynomial;

/// A construction term for a quasi-threshold graph, with vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QtDecomposition {
    /// `K_1` on the given vertex.
    Leaf(usize),
    /// `child + K_1`, the new vertex adjacent to everything in `child`.
    Dom { vertex: usize, child: Box<QtDecomposition> },
    /// Disjoint union of at least two connected terms.
    Union(Vec<QtDecomposition>),
}

impl QtDecomposition {
    fn union_of(mut parts: Vec<QtDecomposition>) -> QtDecomposition {
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            QtDecomposition::Union(parts)
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            QtDecomposition::Leaf(_) => 1,
            QtDecomposition::Dom { child, .. } => child.vertex_count() + 1,
            QtDecomposition::Union(parts) => parts.iter().map(Self::vertex_count).sum(),
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices(&self, out: &mut Vec<usize>) {
        match self {
            QtDecomposition::Leaf(v) => out.push(*v),
            QtDecomposition::Dom { vertex, child } => {
                out.push(*vertex);
                child.collect_vertices(out);
            }
            QtDecomposition::Union(parts) => parts.iter().for_each(|p| p.collect_vertices(out)),
        }
    }

    /// Evaluates the term on `n` labeled vertices.
    pub fn to_graph(&self, n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        self.add_edges(&mut g)?;
        Ok(g)
    }

    fn add_edges(&self, g: &mut Graph) -> Result<(), GraphError> {
        match self {
            QtDecomposition::Leaf(_) => Ok(()),
            QtDecomposition::Dom { vertex, child } => {
                for v in child.vertices() {
                    g.add_edge(*vertex, v)?;
                }
                child.add_edges(g)
            }
            QtDecomposition::Union(parts) => parts.iter().try_for_each(|p| p.add_edges(g)),
        }
    }

    pub fn chromatic_number(&self) -> usize {
        match self {
            QtDecomposition::Leaf(_) => 1,
            QtDecomposition::Dom { child, .. } => child.chromatic_number() + 1,
            QtDecomposition::Union(parts) => parts.iter().map(Self::chromatic_number).max().unwrap_or(0),
        }
    }

    /// `χ(K_1) = q`, `χ(G + K_1)(q) = q·χ_G(q-1)`, unions multiply.
    pub fn chromatic_polynomial(&self) -> Polynomial {
        match self {
            QtDecomposition::Leaf(_) => Polynomial::var(),
            QtDecomposition::Dom { child, .. } => &Polynomial::var() * &child.chromatic_polynomial().shift_arg(-1),
            QtDecomposition::Union(parts) => parts
                .iter()
                .fold(Polynomial::one(), |acc, p| &acc * &p.chromatic_polynomial()),
        }
    }

    /// Canonical word: union parts ordered by vertex count, then by rendered word.
    pub fn canonical_word(&self) -> String {
        match self {
            QtDecomposition::Leaf(_) => "xD".to_string(),
            QtDecomposition::Dom { child, .. } => format!("x{}D", child.canonical_word()),
            QtDecomposition::Union(parts) => {
                let mut rendered: Vec<(usize, String)> =
                    parts.iter().map(|p| (p.vertex_count(), p.canonical_word())).collect();
                rendered.sort();
                rendered.into_iter().map(|(_, s)| s).collect()
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            QtDecomposition::Leaf(v) => json!({ "leaf": v }),
            QtDecomposition::Dom { vertex, child } => json!({ "dom": child.to_json(), "vertex": vertex }),
            QtDecomposition::Union(parts) => json!({ "union": parts.iter().map(Self::to_json).collect::<Vec<_>>() }),
        }
    }
}

/// `G_w`: the `i`-th `x` is vertex `i`; `x w' D` adds a vertex dominating
/// `G_{w'}`, concatenation is disjoint union.
pub fn word_to_graph(w: &DyckWord) -> (Graph, QtDecomposition) {
    let n = w.n();
    let mut frames: Vec<(usize, Vec<QtDecomposition>)> = vec![(0, Vec::new())];
    let mut next = 1;
    for l in w.symbols() {
        match l {
            Letter::X => {
                frames.push((next, Vec::new()));
                next += 1;
            }
            Letter::D => {
                let (vertex, kids) = frames.pop().expect("validated Dyck word");
                let term = if kids.is_empty() {
                    QtDecomposition::Leaf(vertex)
                } else {
                    QtDecomposition::Dom { vertex, child: Box::new(QtDecomposition::union_of(kids)) }
                };
                frames.last_mut().expect("validated Dyck word").1.push(term);
            }
        }
    }
    let (_, top) = frames.pop().unwrap();
    let term = QtDecomposition::union_of(top);

    // Vertex i dominates exactly the x's nested inside its matching pair.
    let mut g = Graph::new(n).expect("n >= 1");
    for (i, (open, close)) in w.matching_pairs().into_iter().enumerate() {
        let inner = (close - open - 1) / 2;
        for j in 1..=inner {
            g.add_edge(i + 1, i + 1 + j).expect("labels in range");
        }
    }
    (g, term)
}

/// Decomposes `g` into components and dominating vertices. Among several
/// dominating vertices the lowest label is peeled first.
pub fn recognize_qt(g: &Graph) -> Result<QtDecomposition, GraphError> {
    let all: Vec<usize> = (1..=g.n()).collect();
    decompose(g, &all)
}

fn decompose(g: &Graph, vertices: &[usize]) -> Result<QtDecomposition, GraphError> {
    let comps = g.components_within(vertices);
    let parts = comps
        .iter()
        .map(|c| decompose_connected(g, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QtDecomposition::union_of(parts))
}

fn decompose_connected(g: &Graph, comp: &[usize]) -> Result<QtDecomposition, GraphError> {
    if comp.len() == 1 {
        return Ok(QtDecomposition::Leaf(comp[0]));
    }
    // `comp` is sorted; peeled ancestors are still present in `g`.
    let inside_degree = |v: usize| g.neighbors(v).iter().filter(|u| comp.binary_search(u).is_ok()).count();
    let universal = comp
        .iter()
        .copied()
        .find(|&v| inside_degree(v) == comp.len() - 1)
        .ok_or_else(|| GraphError::NotQuasiThreshold { witness: comp.to_vec() })?;
    let rest: Vec<usize> = comp.iter().copied().filter(|&v| v != universal).collect();
    Ok(QtDecomposition::Dom { vertex: universal, child: Box::new(decompose(g, &rest)?) })
}

/// The canonical Dyck word `w(G)` of a quasi-threshold graph.
pub fn graph_to_word(g: &Graph) -> Result<DyckWord, GraphError> {
    let term = recognize_qt(g)?;
    Ok(term.canonical_word().parse().expect("canonical words are Dyck words"))
}
