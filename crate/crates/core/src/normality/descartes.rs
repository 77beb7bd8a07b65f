//! Positive-root counting by Descartes' rule of signs and bisection.
//!
//! The polynomial is scaled so that its positive roots lie in `(0, 1)`, then
//! intervals are split in half until each has sign-variation count `0` or
//! `1` after the Möbius map `x -> 1/(x+1)`, where the count is exact. Only
//! integer shifts and additions are needed. For squarefree inputs this
//! always terminates; a repeated root makes it split forever, so the search
//! is bounded by a node budget.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::Polynomial;

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for x in c {
        let s = if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `p(x + 1)` in place.
fn taylor_shift_one(c: &mut [BigInt]) {
    let d = c.len() - 1;
    for i in 0..d {
        for j in (i..d).rev() {
            let (lo, hi) = c.split_at_mut(j + 1);
            lo[j] += &hi[0];
        }
    }
}

/// Sign variations of `(x+1)^d p(1/(x+1))`, which bound the roots in `(0, 1)`.
fn unit_interval_variations(c: &[BigInt]) -> usize {
    let mut r: Vec<BigInt> = c.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    sign_variations(&r)
}

/// Removes a common power of two.
fn reduce(c: &mut [BigInt]) {
    let shift = c.iter().filter(|x| !x.is_zero()).filter_map(|x| x.trailing_zeros()).min().unwrap_or(0);
    if shift > 0 {
        for x in c.iter_mut() {
            *x >>= shift;
        }
    }
}

/// Divides out `(x - 1)` as often as it divides; returns the multiplicity.
fn strip_unit_root(c: &mut Vec<BigInt>) -> usize {
    let mut m = 0;
    while c.len() > 1 && c.iter().fold(BigInt::zero(), |s, a| s + a).is_zero() {
        // Synthetic division by x - 1, from the top.
        let mut q = vec![BigInt::zero(); c.len() - 1];
        let mut carry = BigInt::zero();
        for i in (1..c.len()).rev() {
            carry += &c[i];
            q[i - 1] = carry.clone();
        }
        *c = q;
        m += 1;
    }
    m
}

/// Positive real roots found by bisection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PositiveRoots {
    /// Counted with multiplicity.
    pub total: usize,
    pub distinct: usize,
}

/// Exact positive real roots, or `None` if the node budget runs out.
/// Requires `p(0) != 0`.
///
/// Roots that land exactly on a bisection point are divided out with their
/// multiplicity; any other repeated root keeps splitting until the budget
/// is spent.
pub fn count_positive_roots(p: &Polynomial, budget: usize) -> Option<PositiveRoots> {
    let d = p.degree()?;
    assert!(!p.coeff(0).is_zero(), "root at zero must be divided out first");
    let mut found = PositiveRoots { total: 0, distinct: 0 };
    if d == 0 {
        return Some(found);
    }
    // Fujiwara: every root has |z| <= 2 max_i |a_{d-i} / a_d|^(1/i) < 2^k.
    let lead = p.leading().bits() as i64;
    let k = (1..=d)
        .filter(|&i| !p.coeff(d - i).is_zero())
        .map(|i| (p.coeff(d - i).bits() as i64 - lead + 1).div_euclid(i as i64) + 1)
        .max()
        .unwrap_or(0)
        .max(0) as usize
        + 2;
    let mut root: Vec<BigInt> = p.coeffs().iter().enumerate().map(|(i, c)| c << (k * i)).collect();
    reduce(&mut root);
    let mut stack = vec![root];
    let mut nodes = 0;
    while let Some(c) = stack.pop() {
        nodes += 1;
        if nodes > budget {
            return None;
        }
        match unit_interval_variations(&c) {
            0 => {}
            1 => {
                found.total += 1;
                found.distinct += 1;
            }
            _ => {
                // 2^d p(x/2) covers (0, 1/2); its shift by one covers (1/2, 1).
                let d = c.len() - 1;
                let mut left: Vec<BigInt> = c.iter().enumerate().map(|(i, a)| a << (d - i)).collect();
                let m = strip_unit_root(&mut left);
                if m > 0 {
                    found.total += m;
                    found.distinct += 1;
                }
                let mut right = left.clone();
                taylor_shift_one(&mut right);
                reduce(&mut left);
                reduce(&mut right);
                stack.push(left);
                stack.push(right);
            }
        }
    }
    Some(found)
}
