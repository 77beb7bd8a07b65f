use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{CountError, CountSeq, Method};
use crate::dyck::DyckWord;
use crate::graphs::{strip_isolated, word_to_bipartite, BipartiteGraph, Graph};
use crate::{Caps, TooLarge};

type Counts = Vec<BigUint>;

fn add_shifted(base: &mut Counts, other: &Counts) {
    if base.len() < other.len() + 1 {
        base.resize(other.len() + 1, BigUint::zero());
    }
    for (k, v) in other.iter().enumerate() {
        base[k + 1] += v;
    }
}

fn check_edges(edges: usize, caps: &Caps) -> Result<(), CountError> {
    if edges > caps.matching_edges {
        return Err(TooLarge { what: "matching edges", size: edges, cap: caps.matching_edges }.into());
    }
    Ok(())
}

/// Matching numbers `m_0, m_1, ...` of a bipartite graph, by the edge
/// recursion `m_k(G) = m_k(G - e) + m_{k-1}(G - u - v)`.
///
/// The pivot edge is incident to a vertex of maximum degree. Residual graphs
/// are memoized on a relabeling-invariant key: left rows as bitmasks over
/// the nonisolated right vertices, sorted.
pub fn matching_numbers(g: &BipartiteGraph, caps: &Caps) -> Result<CountSeq, CountError> {
    check_edges(g.edges().len(), caps)?;
    if g.right().len() > 128 {
        return Err(TooLarge { what: "matching right class", size: g.right().len(), cap: 128 }.into());
    }
    let rows: Vec<u128> = g
        .left()
        .iter()
        .map(|&i| {
            g.right()
                .iter()
                .enumerate()
                .filter(|&(_, &j)| g.edges().contains(&(i, j)))
                .fold(0u128, |m, (pos, _)| m | 1 << pos)
        })
        .collect();
    let mut memo = HashMap::new();
    let mut counts = bip_count(canonical(rows), &mut memo, caps.matching_states)?;
    let max = g.left().len().min(g.right().len());
    counts.resize(max + 1, BigUint::zero());
    CountSeq::new(Method::Matching, counts)
}

fn canonical(rows: Vec<u128>) -> Vec<u128> {
    let used = rows.iter().fold(0u128, |m, r| m | r);
    let mut out: Vec<u128> = rows
        .into_iter()
        .filter(|&r| r != 0)
        .map(|r| {
            let (mut packed, mut bit, mut cols) = (0u128, 0u32, used);
            while cols != 0 {
                let c = cols.trailing_zeros();
                if r >> c & 1 == 1 {
                    packed |= 1 << bit;
                }
                bit += 1;
                cols &= cols - 1;
            }
            packed
        })
        .collect();
    out.sort_unstable();
    out
}

fn bip_count(rows: Vec<u128>, memo: &mut HashMap<Vec<u128>, Counts>, budget: usize) -> Result<Counts, CountError> {
    if rows.is_empty() {
        return Ok(vec![BigUint::one()]);
    }
    if let Some(c) = memo.get(&rows) {
        return Ok(c.clone());
    }
    if memo.len() >= budget {
        return Err(TooLarge { what: "matching memo states", size: memo.len() + 1, cap: budget }.into());
    }
    let width = 128 - rows.iter().fold(0u128, |m, r| m | r).leading_zeros() as usize;
    let col_deg: Vec<u32> = (0..width).map(|c| rows.iter().filter(|&&r| r >> c & 1 == 1).count() as u32).collect();
    let (row_best, row_deg) = rows.iter().enumerate().map(|(i, r)| (i, r.count_ones())).max_by_key(|p| p.1).unwrap();
    let (col_best, col_max) = col_deg.iter().copied().enumerate().max_by_key(|p| p.1).unwrap();
    let (i, j) = if row_deg >= col_max {
        (row_best, rows[row_best].trailing_zeros() as usize)
    } else {
        (rows.iter().position(|&r| r >> col_best & 1 == 1).unwrap(), col_best)
    };

    let mut minus_edge = rows.clone();
    minus_edge[i] &= !(1u128 << j);
    let mut minus_ends: Vec<u128> = rows.clone();
    minus_ends.remove(i);
    for r in &mut minus_ends {
        *r &= !(1u128 << j);
    }

    let mut out = bip_count(canonical(minus_edge), memo, budget)?;
    let with = bip_count(canonical(minus_ends), memo, budget)?;
    add_shifted(&mut out, &with);
    memo.insert(rows, out.clone());
    Ok(out)
}

/// Matching numbers of a general graph (at most 128 vertices), by the same
/// edge recursion memoized on the set of remaining vertices.
pub fn graph_matching_numbers(g: &Graph, caps: &Caps) -> Result<CountSeq, CountError> {
    check_edges(g.edge_count(), caps)?;
    let n = g.n();
    if n > 128 {
        return Err(TooLarge { what: "matching vertices", size: n, cap: 128 }.into());
    }
    let adj: Vec<u128> = (1..=n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1 << (u - 1)))
        .collect();
    let mut memo = HashMap::new();
    let mut counts = gen_count(adj, &mut memo, caps.matching_states)?;
    counts.resize(n / 2 + 1, BigUint::zero());
    CountSeq::new(Method::Matching, counts)
}

/// `cur[v]` is the residual neighbourhood of `v`; removed vertices are never
/// referenced again.
fn gen_count(cur: Vec<u128>, memo: &mut HashMap<Vec<u128>, Counts>, budget: usize) -> Result<Counts, CountError> {
    let Some(u) = (0..cur.len()).filter(|&v| cur[v] != 0).max_by_key(|&v| cur[v].count_ones()) else {
        return Ok(vec![BigUint::one()]);
    };
    if let Some(c) = memo.get(&cur) {
        return Ok(c.clone());
    }
    if memo.len() >= budget {
        return Err(TooLarge { what: "matching memo states", size: memo.len() + 1, cap: budget }.into());
    }
    let v = cur[u].trailing_zeros() as usize;

    let mut minus_edge = cur.clone();
    minus_edge[u] &= !(1u128 << v);
    minus_edge[v] &= !(1u128 << u);
    let mut minus_ends = cur.clone();
    let gone = !((1u128 << u) | (1u128 << v));
    minus_ends[u] = 0;
    minus_ends[v] = 0;
    for m in &mut minus_ends {
        *m &= gone;
    }

    let mut out = gen_count(minus_edge, memo, budget)?;
    let with = gen_count(minus_ends, memo, budget)?;
    add_shifted(&mut out, &with);
    memo.insert(cur, out.clone());
    Ok(out)
}

/// `S_w(k) = m_{n-k}(Γ_w)`, computed on `Γ_w` with isolated vertices removed.
pub fn stirling_matching(w: &DyckWord, caps: &Caps) -> Result<CountSeq, CountError> {
    let n = w.n();
    let (stripped, _, _) = strip_isolated(&word_to_bipartite(w));
    let m = matching_numbers(&stripped, caps)?;
    let values = (0..=n).map(|k| m.get(n - k)).collect();
    CountSeq::new(Method::Matching, values)
}
