use num_bigint::BigUint;

use super::{CountError, CountSeq, Method};
use crate::graphs::Graph;
use crate::{Caps, TooLarge};

/// `{G brace k}` for every `k`, by walking the restricted-growth strings of
/// `V(G)` and keeping only those whose blocks are independent. Vertex `v` may
/// join an existing block only if it has no neighbour there, so invalid
/// partitions are pruned as soon as they arise.
pub fn stirling_enumerate(g: &Graph, caps: &Caps) -> Result<CountSeq, CountError> {
    let n = g.n();
    let cap = caps.enumerate_vertices.min(20);
    if n > cap {
        return Err(TooLarge { what: "enumeration vertices", size: n, cap }.into());
    }
    // Only earlier neighbours matter when vertex v is placed.
    let earlier: Vec<u32> = (1..=n)
        .map(|v| g.neighbors(v).range(..v).fold(0u32, |m, &u| m | 1 << (u - 1)))
        .collect();
    let mut counts = vec![0u64; n + 1];
    let mut blocks = Vec::with_capacity(n);
    place(0, &earlier, &mut blocks, &mut counts);
    CountSeq::new(Method::Enumerate, counts.into_iter().map(BigUint::from).collect())
}

fn place(v: usize, earlier: &[u32], blocks: &mut Vec<u32>, counts: &mut [u64]) {
    if v == earlier.len() {
        counts[blocks.len()] += 1;
        return;
    }
    for b in 0..blocks.len() {
        if blocks[b] & earlier[v] == 0 {
            blocks[b] |= 1 << v;
            place(v + 1, earlier, blocks, counts);
            blocks[b] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    place(v + 1, earlier, blocks, counts);
    blocks.pop();
}
