//! Named graph families used for sweeps, and their seeded random generators.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::counting::{stirling_from_chromatic, stirling_rook, CountError, CountSeq};
use crate::dyck::{random_word, DyckWord};
use crate::graphs::{forest_chromatic, graph_to_word, word_to_graph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Empty,
    Path,
    Star,
    Forest,
    RandomQt,
    Complete,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Empty => "empty",
            FamilyKind::Path => "path",
            FamilyKind::Star => "star",
            FamilyKind::Forest => "forest",
            FamilyKind::RandomQt => "random-qt",
            FamilyKind::Complete => "complete",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "empty" => FamilyKind::Empty,
            "path" => FamilyKind::Path,
            "star" => FamilyKind::Star,
            "forest" => FamilyKind::Forest,
            "random-qt" | "randomqt" => FamilyKind::RandomQt,
            "complete" => FamilyKind::Complete,
            _ => return Err(FamilyError::UnknownKind(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownKind(String),
    #[error("bad family spec {0:?}; expected kind:n")]
    BadSpec(String),
    #[error("family size must be at least 1")]
    ZeroSize,
    #[error("component count {components} outside 1..={n}")]
    BadComponents { components: usize, n: usize },
}

/// Component count for forests: fixed, or `⌈√n⌉`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Components {
    Fixed(usize),
    SqrtCeil,
}

impl Components {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Components::Fixed(k) => k,
            Components::SqrtCeil => (1..=n).find(|k| k * k >= n).unwrap_or(1),
        }
    }
}

impl FromStr for Components {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "sqrt" {
            return Ok(Components::SqrtCeil);
        }
        s.parse().map(Components::Fixed).map_err(|_| format!("bad component count {s:?}"))
    }
}

/// A member of a family: kind, size, and the knobs random kinds need.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub components: Option<usize>,
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> FamilySpec {
        FamilySpec { kind, n, components: None, seed: 0 }
    }

    /// Parses `kind:n`.
    pub fn parse(s: &str) -> Result<FamilySpec, FamilyError> {
        let (kind, n) = s.split_once(':').ok_or_else(|| FamilyError::BadSpec(s.to_string()))?;
        let n: usize = n.parse().map_err(|_| FamilyError::BadSpec(s.to_string()))?;
        FamilySpec::new(kind.parse()?, n).validated()
    }

    pub fn with_components(mut self, k: usize) -> FamilySpec {
        self.components = Some(k);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> FamilySpec {
        self.seed = seed;
        self
    }

    pub fn validated(self) -> Result<FamilySpec, FamilyError> {
        if self.n == 0 {
            return Err(FamilyError::ZeroSize);
        }
        if let Some(k) = self.components {
            if k == 0 || k > self.n {
                return Err(FamilyError::BadComponents { components: k, n: self.n });
            }
        }
        Ok(self)
    }

    fn forest_components(&self) -> usize {
        self.components.unwrap_or(1)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// The graph itself.
    pub fn graph(&self) -> Graph {
        match self.kind {
            FamilyKind::Empty => Graph::new(self.n).unwrap(),
            FamilyKind::Path => Graph::path(self.n).unwrap(),
            FamilyKind::Star => Graph::star(self.n).unwrap(),
            FamilyKind::Complete => Graph::complete(self.n).unwrap(),
            FamilyKind::Forest => random_forest(self.n, self.forest_components(), &mut self.rng()),
            FamilyKind::RandomQt => word_to_graph(&random_word(self.n, &mut self.rng())).0,
        }
    }

    /// A quasi-threshold graph co-chromatic with this member, as its word.
    /// Forests and paths map to a star on `n - k + 1` vertices plus `k - 1`
    /// isolated vertices.
    pub fn representative_word(&self) -> DyckWord {
        match self.kind {
            FamilyKind::Empty => DyckWord::empty_graph(self.n),
            FamilyKind::Complete => DyckWord::complete_graph(self.n),
            FamilyKind::Star => graph_to_word(&Graph::star(self.n).unwrap()).unwrap(),
            FamilyKind::RandomQt => random_word(self.n, &mut self.rng()),
            FamilyKind::Path | FamilyKind::Forest => {
                let k = if self.kind == FamilyKind::Path { 1 } else { self.forest_components() };
                let star = Graph::star(self.n - k + 1).unwrap();
                let mut text = graph_to_word(&star).unwrap().render();
                text.push_str(&"xD".repeat(k - 1));
                text.parse().expect("concatenated Dyck words")
            }
        }
    }

    /// The Stirling sequence by the scalable route: the closed-form chromatic
    /// polynomial for acyclic kinds, rooks on the representative word otherwise.
    pub fn stirling(&self) -> Result<CountSeq, CountError> {
        match self.kind {
            FamilyKind::Path => stirling_from_chromatic(&forest_chromatic(self.n, 1), self.n),
            FamilyKind::Forest => stirling_from_chromatic(&forest_chromatic(self.n, self.forest_components()), self.n),
            _ => Ok(stirling_rook(&self.representative_word())),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind.as_str(), self.n)
    }
}

/// Number of labeled forests on `m` vertices with `j` trees, for all
/// `m <= n`, `j <= k`: the tree holding the lowest vertex has some size `s`,
/// chosen in `C(m-1, s-1)` ways and shaped in `s^(s-2)` ways.
fn forest_counts(n: usize, k: usize) -> Vec<Vec<BigUint>> {
    let binom = binomials(n);
    let trees: Vec<BigUint> = (0..=n)
        .map(|s| if s <= 2 { BigUint::one() } else { BigUint::from(s).pow(s as u32 - 2) })
        .collect();
    let mut f = vec![vec![BigUint::zero(); k + 1]; n + 1];
    f[0][0] = BigUint::one();
    for m in 1..=n {
        for j in 1..=k.min(m) {
            f[m][j] = (1..=m - j + 1).map(|s| &binom[m - 1][s - 1] * &trees[s] * &f[m - s][j - 1]).sum();
        }
    }
    f
}

fn binomials(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let row = (0..=m)
            .map(|i| match i {
                0 => BigUint::one(),
                _ if i == m => BigUint::one(),
                _ => &prev[i - 1] + &prev[i],
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Uniform on `0..bound` by rejection from random bytes.
fn uniform_below<R: Rng + ?Sized>(bound: &BigUint, rng: &mut R) -> BigUint {
    let bits = bound.bits();
    let mut bytes = vec![0u8; bits.div_ceil(8) as usize];
    loop {
        rng.fill_bytes(&mut bytes);
        if !bits.is_multiple_of(8) {
            let last = bytes.len() - 1;
            bytes[last] &= (1u8 << (bits % 8)) - 1;
        }
        let x = BigUint::from_bytes_le(&bytes);
        if &x < bound {
            return x;
        }
    }
}

/// Tree on `0..size` encoded by a Prüfer sequence of length `size - 2`.
fn prufer_decode(seq: &[usize], size: usize) -> Vec<(usize, usize)> {
    if size < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; size];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..size).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(size - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// A uniformly random labeled forest on `n` vertices with exactly `k` trees.
///
/// Peels one tree at a time: the tree containing the lowest remaining vertex
/// gets its size with probability proportional to the number of forests
/// completing it, a uniform set of companions, and a uniform shape from a
/// Prüfer sequence.
pub fn random_forest<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    assert!(n >= 1 && (1..=n).contains(&k));
    let counts = forest_counts(n, k);
    let binom = binomials(n);
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut edges = Vec::with_capacity(n - k);
    for j in (1..=k).rev() {
        let m = remaining.len();
        let mut target = uniform_below(&counts[m][j], rng);
        let mut size = 0;
        for s in 1..=m - j + 1 {
            let shapes = if s <= 2 { BigUint::one() } else { BigUint::from(s).pow(s as u32 - 2) };
            let weight = &binom[m - 1][s - 1] * shapes * &counts[m - s][j - 1];
            if target < weight {
                size = s;
                break;
            }
            target -= weight;
        }
        let mut members = vec![remaining[0]];
        let picked = sample(rng, m - 1, size - 1).into_vec();
        members.extend(picked.iter().map(|&i| remaining[i + 1]));
        let seq: Vec<usize> = (0..size.saturating_sub(2)).map(|_| rng.random_range(0..size)).collect();
        edges.extend(prufer_decode(&seq, size).into_iter().map(|(a, b)| (members[a], members[b])));
        remaining.retain(|v| !members.contains(v));
    }
    Graph::from_edges(n, edges).expect("labels in 1..=n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::stirling_enumerate;
    use crate::Caps;

    #[test]
    fn parse_specs() {
        assert_eq!(FamilySpec::parse("empty:3").unwrap(), FamilySpec::new(FamilyKind::Empty, 3));
        assert!(matches!(FamilySpec::parse("empty"), Err(FamilyError::BadSpec(_))));
        assert!(matches!(FamilySpec::parse("cube:3"), Err(FamilyError::UnknownKind(_))));
        assert_eq!(FamilySpec::parse("star:0"), Err(FamilyError::ZeroSize));
        let bad = FamilySpec::new(FamilyKind::Forest, 4).with_components(5).validated();
        assert_eq!(bad, Err(FamilyError::BadComponents { components: 5, n: 4 }));
        assert_eq!(Components::SqrtCeil.resolve(100), 10);
        assert_eq!(Components::SqrtCeil.resolve(101), 11);
    }

    #[test]
    fn representative_words() {
        assert_eq!(FamilySpec::parse("empty:3").unwrap().representative_word().render(), "xDxDxD");
        assert_eq!(FamilySpec::parse("star:5").unwrap().representative_word().render(), "xxDxDxDxDD");
        let f = FamilySpec::new(FamilyKind::Forest, 6).with_components(2);
        assert_eq!(f.representative_word().render(), "xxDxDxDxDDxD");
    }

    #[test]
    fn forests_have_requested_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1usize..=40 {
            for k in [1, 2, n.div_ceil(2), n].into_iter().filter(|&k| k <= n) {
                let g = random_forest(n, k, &mut rng);
                assert!(g.is_forest());
                assert_eq!(g.components().len(), k);
            }
        }
    }

    #[test]
    fn forest_counts_known_values() {
        let f = forest_counts(6, 6);
        // Cayley: n^(n-2) trees; forests on 4 vertices with 2 trees: 4·3 + 3.
        assert_eq!(f[5][1], BigUint::from(125u32));
        assert_eq!(f[4][2], BigUint::from(15u32));
        assert_eq!(f[6][6], BigUint::one());
        let total: BigUint = (1..=4).map(|j| &f[4][j]).sum();
        assert_eq!(total, BigUint::from(38u32));
    }

    #[test]
    fn forests_are_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut seen = std::collections::HashMap::new();
        for _ in 0..15_000 {
            *seen.entry(random_forest(4, 2, &mut rng).edges()).or_insert(0usize) += 1;
        }
        assert_eq!(seen.len(), 15);
        for (edges, c) in seen {
            assert!((850..=1150).contains(&c), "{edges:?}: {c}");
        }
    }

    #[test]
    fn forest_generation_is_seeded() {
        let spec = FamilySpec::new(FamilyKind::Forest, 30).with_components(4).with_seed(99);
        assert_eq!(spec.graph(), spec.graph());
        assert_ne!(spec.graph(), spec.with_seed(100).graph());
    }

    #[test]
    fn family_stirling_matches_enumeration() {
        let caps = Caps::default();
        for spec in [
            FamilySpec::parse("empty:6").unwrap(),
            FamilySpec::parse("path:7").unwrap(),
            FamilySpec::parse("star:6").unwrap(),
            FamilySpec::parse("complete:5").unwrap(),
            FamilySpec::new(FamilyKind::Forest, 9).with_components(3).with_seed(4),
            FamilySpec::new(FamilyKind::RandomQt, 9).with_seed(4),
        ] {
            let fast = spec.stirling().unwrap();
            let slow = stirling_enumerate(&spec.graph(), &caps).unwrap();
            assert_eq!(fast.values(), slow.values(), "{spec}");
            assert_eq!(stirling_rook(&spec.representative_word()).values(), slow.values(), "{spec}");
        }
    }
}
