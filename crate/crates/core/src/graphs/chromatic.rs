use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{recognize_qt, Graph, GraphError};
use crate::poly::Polynomial;
use crate::{Caps, TooLarge};

/// `q^k (q-1)^(n-k)`, the chromatic polynomial of every forest on `n`
/// vertices with `k` components.
pub fn forest_chromatic(n: usize, components: usize) -> Polynomial {
    assert!(components <= n);
    &Polynomial::monomial(components) * &Polynomial::from_i64s(&[-1, 1]).pow(n - components)
}

/// Chromatic polynomial. Quasi-threshold graphs use the structural rule and
/// forests the closed form, both uncapped; anything else goes through
/// deletion–contraction, limited to `caps.chromatic_vertices`.
pub fn chromatic_polynomial(g: &Graph, caps: &Caps) -> Result<Polynomial, GraphError> {
    if let Ok(term) = recognize_qt(g) {
        return Ok(term.chromatic_polynomial());
    }
    if g.is_forest() {
        return Ok(forest_chromatic(g.n(), g.components().len()));
    }
    deletion_contraction(g, caps.chromatic_vertices)
}

/// Least `q >= 1` with `χ_G(q) > 0`.
pub fn chromatic_number(g: &Graph, caps: &Caps) -> Result<usize, GraphError> {
    if let Ok(term) = recognize_qt(g) {
        return Ok(term.chromatic_number());
    }
    let p = chromatic_polynomial(g, caps)?;
    Ok((1..=g.n())
        .find(|&q| p.eval(&BigInt::from(q)).is_positive())
        .expect("χ_G(n) = n! > 0 for any n-vertex graph"))
}

pub fn co_chromatic(g: &Graph, h: &Graph, caps: &Caps) -> Result<bool, GraphError> {
    Ok(chromatic_polynomial(g, caps)? == chromatic_polynomial(h, caps)?)
}

/// Plain deletion–contraction `χ_G = χ_{G-e} - χ_{G/e}`, memoized on the
/// compacted adjacency of each residual graph.
pub fn deletion_contraction(g: &Graph, max_vertices: usize) -> Result<Polynomial, GraphError> {
    let n = g.n();
    if n > max_vertices || n > 32 {
        return Err(TooLarge { what: "deletion-contraction vertices", size: n, cap: max_vertices.min(32) }.into());
    }
    let adj: Vec<u32> = (1..=n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << (u - 1)))
        .collect();
    let mut memo = HashMap::new();
    Ok(dc(adj, &mut memo))
}

fn compact(adj: &[u32], alive: u32) -> Vec<u32> {
    let idx: Vec<usize> = (0..adj.len()).filter(|&i| alive >> i & 1 == 1).collect();
    idx.iter()
        .map(|&i| {
            idx.iter()
                .enumerate()
                .filter(|&(_, &j)| adj[i] >> j & 1 == 1)
                .fold(0u32, |m, (k, _)| m | 1 << k)
        })
        .collect()
}

fn dc(adj: Vec<u32>, memo: &mut HashMap<Vec<u32>, Polynomial>) -> Polynomial {
    let n = adj.len();
    let edges: usize = adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2;
    if edges == 0 {
        return Polynomial::monomial(n);
    }
    if edges == n * (n - 1) / 2 {
        return Polynomial::falling_factorial(n);
    }
    if let Some(p) = memo.get(&adj) {
        return p.clone();
    }

    // Split off the component of vertex 0 when the graph is disconnected.
    let mut comp = 1u32;
    loop {
        let grown = (0..n).filter(|&i| comp >> i & 1 == 1).fold(comp, |m, i| m | adj[i]);
        if grown == comp {
            break;
        }
        comp = grown;
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let result = if comp != full {
        let a = dc(compact(&adj, comp), memo);
        let b = dc(compact(&adj, full & !comp), memo);
        &a * &b
    } else {
        let u = (0..n).max_by_key(|&i| adj[i].count_ones()).unwrap();
        let v = adj[u].trailing_zeros() as usize;
        let mut deleted = adj.clone();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        // Contract v into u.
        let mut contracted = deleted.clone();
        contracted[u] |= deleted[v];
        for (w, m) in contracted.iter_mut().enumerate() {
            if deleted[v] >> w & 1 == 1 {
                *m |= 1 << u;
            }
        }
        contracted[u] &= !(1 << u);
        let contracted = compact(&contracted, full & !(1 << v));
        &dc(deleted, memo) - &dc(contracted, memo)
    };
    memo.insert(adj, result.clone());
    result
}
