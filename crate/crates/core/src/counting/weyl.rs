use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{CountError, CountSeq, Method};
use crate::dyck::{DyckWord, Letter};

/// A normally ordered element `Σ c_{a,b} x^a D^b` of the Weyl algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylState {
    terms: BTreeMap<(usize, usize), BigUint>,
}

impl WeylState {
    pub fn one() -> WeylState {
        WeylState { terms: BTreeMap::from([((0, 0), BigUint::one())]) }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigUint> {
        &self.terms
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigUint {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// `x · self`.
    fn left_x(&self) -> WeylState {
        WeylState { terms: self.terms.iter().map(|(&(a, b), c)| ((a + 1, b), c.clone())).collect() }
    }

    /// `D · self`, using `D x^a = x^a D + a x^(a-1)`.
    fn left_d(&self) -> WeylState {
        let mut out: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            *out.entry((a, b + 1)).or_default() += c;
            if a > 0 {
                *out.entry((a - 1, b)).or_default() += c * BigUint::from(a);
            }
        }
        out.retain(|_, c| !c.is_zero());
        WeylState { terms: out }
    }
}

/// Normal form of an arbitrary word over `{x, D}`, built right to left.
pub fn normal_order(word: &[Letter]) -> WeylState {
    word.iter().rev().fold(WeylState::one(), |acc, l| match l {
        Letter::X => acc.left_x(),
        Letter::D => acc.left_d(),
    })
}

/// `S_w(k)`, the coefficient of `x^k D^k` in the normal order of `w`.
pub fn stirling_weyl(w: &DyckWord) -> Result<CountSeq, CountError> {
    let state = normal_order(w.symbols());
    let n = w.n();
    let mut values = vec![BigUint::zero(); n + 1];
    for (&(a, b), c) in state.terms() {
        if a != b || a > n {
            return Err(CountError::InternalInconsistency(format!(
                "Dyck word {w} has off-diagonal term x^{a} D^{b}"
            )));
        }
        values[a] = c.clone();
    }
    CountSeq::new(Method::Weyl, values)
}
