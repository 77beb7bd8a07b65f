use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{CountSeq, Method};
use crate::dyck::{board_above, DyckWord, FerrersBoard};

/// Rook numbers `r_0..=r_n` of a Ferrers board.
///
/// Columns are taken shortest first. Their row sets are nested, so `k - 1`
/// rooks in earlier columns always block exactly `k - 1` rows of a column of
/// height `h`, leaving `h - (k - 1)` free squares for the `k`-th rook.
pub fn rook_numbers(b: &FerrersBoard) -> CountSeq {
    let mut heights = b.heights().to_vec();
    heights.sort_unstable();
    let mut r = vec![BigUint::zero(); b.n() + 1];
    r[0] = BigUint::one();
    for (placed, &h) in heights.iter().enumerate() {
        for k in (1..=(placed + 1).min(h).min(b.n())).rev() {
            let free = h - (k - 1);
            let add = &r[k - 1] * free;
            r[k] += add;
        }
    }
    CountSeq::new(Method::Rook, r).expect("r_0 = 1")
}

/// `S_w(k) = r_{n-k}(B_w)`.
pub fn stirling_rook(w: &DyckWord) -> CountSeq {
    rook_numbers(&board_above(w)).reversed()
}
