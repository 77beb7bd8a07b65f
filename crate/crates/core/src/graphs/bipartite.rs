use std::collections::BTreeSet;

use crate::dyck::{board_above, DyckWord};

/// A bipartite graph with labeled classes `X` (left) and `Y` (right).
/// An edge `(i, j)` joins `x_i` and `y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<usize>,
    right: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    /// Panics if an edge endpoint is not among the given labels.
    pub fn new(left: Vec<usize>, right: Vec<usize>, edges: BTreeSet<(usize, usize)>) -> BipartiteGraph {
        for &(i, j) in &edges {
            assert!(left.contains(&i) && right.contains(&j), "edge ({i},{j}) outside vertex classes");
        }
        BipartiteGraph { left, right, edges }
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Isolated vertices as `(left labels, right labels)`.
    pub fn isolated(&self) -> (Vec<usize>, Vec<usize>) {
        let used_l: BTreeSet<usize> = self.edges.iter().map(|e| e.0).collect();
        let used_r: BTreeSet<usize> = self.edges.iter().map(|e| e.1).collect();
        (
            self.left.iter().copied().filter(|v| !used_l.contains(v)).collect(),
            self.right.iter().copied().filter(|v| !used_r.contains(v)).collect(),
        )
    }

    pub fn min_degree(&self) -> usize {
        let deg = |side: &[usize], pick: fn(&(usize, usize)) -> usize| {
            side.iter()
                .map(|&v| self.edges.iter().filter(|e| pick(e) == v).count())
                .min()
                .unwrap_or(usize::MAX)
        };
        deg(&self.left, |e| e.0).min(deg(&self.right, |e| e.1))
    }
}

/// `Γ_w`: `x_i ~ y_j` iff the square `(i, j)` belongs to the board above the path.
pub fn word_to_bipartite(w: &DyckWord) -> BipartiteGraph {
    let n = w.n();
    let edges = board_above(w).squares().into_iter().map(|s| (s.col, s.row)).collect();
    BipartiteGraph { left: (1..=n).collect(), right: (1..=n).collect(), edges }
}

/// Removes isolated vertices. Returns the stripped graph together with the
/// number of isolated right vertices `ℓ` and isolated left vertices `m`.
///
/// For `Γ_w` these are `y_1..y_ℓ` and `x_{n-m+1}..x_n`, where `ℓ` is the
/// leading run of `x`s and `m` the trailing run of `D`s in `w`.
pub fn strip_isolated(g: &BipartiteGraph) -> (BipartiteGraph, usize, usize) {
    let (iso_l, iso_r) = g.isolated();
    let left = g.left.iter().copied().filter(|v| !iso_l.contains(v)).collect();
    let right = g.right.iter().copied().filter(|v| !iso_r.contains(v)).collect();
    (BipartiteGraph { left, right, edges: g.edges.clone() }, iso_r.len(), iso_l.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{all_words, parse_word};

    #[test]
    fn running_example() {
        let g = word_to_bipartite(&parse_word("xxDxxDxDDD").unwrap());
        assert_eq!(g.left().len(), 5);
        assert_eq!(g.edges().iter().copied().collect::<Vec<_>>(), vec![(1, 3), (1, 4), (1, 5), (2, 5)]);
        assert_eq!(g.isolated(), (vec![3, 4, 5], vec![1, 2]));
        let (s, ell, m) = strip_isolated(&g);
        assert_eq!((s.left(), s.right(), ell, m), (&[1, 2][..], &[3, 4, 5][..], 2, 3));
        assert_eq!(s.min_degree(), 1);
    }

    #[test]
    fn tiny_words() {
        let (s, ell, m) = strip_isolated(&word_to_bipartite(&parse_word("xD").unwrap()));
        assert_eq!((s.order(), ell, m), (0, 1, 1));
        let (s, ell, m) = strip_isolated(&word_to_bipartite(&parse_word("xDxD").unwrap()));
        assert_eq!((s.left(), s.right(), ell, m), (&[1][..], &[2][..], 1, 1));
        assert!(word_to_bipartite(&parse_word("xxDD").unwrap()).edges().is_empty());
    }

    #[test]
    fn isolated_sets_follow_the_runs() {
        for n in 1..=8 {
            for w in all_words(n) {
                let (iso_l, iso_r) = word_to_bipartite(&w).isolated();
                let (ell, m) = (w.leading_xs(), w.trailing_ds());
                assert_eq!(iso_r, (1..=ell).collect::<Vec<_>>(), "{w}");
                assert_eq!(iso_l, (n - m + 1..=n).collect::<Vec<_>>(), "{w}");
            }
        }
    }
}
