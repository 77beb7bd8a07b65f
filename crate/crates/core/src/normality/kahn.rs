use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::ratio_string;
use crate::counting::matching_numbers;
use crate::dyck::DyckWord;
use crate::graphs::{strip_isolated, word_to_bipartite, word_to_graph};
use crate::Caps;

/// Size data of the stripped matching graph `Γ'` attached to a word, the
/// quantities a matching-sequence normality argument needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahnCheck {
    /// Semilength of the word, i.e. vertex count of `G_w`.
    pub f: usize,
    /// Leading run of `x`s (isolated right vertices of `Γ_w`).
    pub ell: usize,
    /// Trailing run of `D`s (isolated left vertices of `Γ_w`).
    pub m: usize,
    pub chi: usize,
    /// Order of `Γ'`: `2f - ℓ - m`.
    pub v: usize,
    /// Matching number of `Γ'`: `f - χ`.
    pub nu: usize,
    /// `2ν / v`, absent when `Γ'` is empty.
    pub ratio: Option<BigRational>,
    /// `χ / f`.
    pub g: BigRational,
    /// Matching number read off the matching sequence, when within caps.
    pub nu_oracle: Option<usize>,
}

impl KahnCheck {
    /// `2f - 2χ <= v <= 2f`.
    pub fn sandwich_holds(&self) -> bool {
        2 * self.f - 2 * self.chi <= self.v && self.v <= 2 * self.f
    }

    pub fn is_degenerate(&self) -> bool {
        self.v == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "f": self.f,
            "ell": self.ell,
            "m": self.m,
            "chi": self.chi,
            "v": self.v,
            "nu": self.nu,
            "ratio": self.ratio.as_ref().map(ratio_string),
            "g": ratio_string(&self.g),
            "nu_oracle": self.nu_oracle,
        })
    }
}

pub fn kahn_check(w: &DyckWord, caps: &Caps) -> KahnCheck {
    let f = w.n();
    let (stripped, ell, m) = strip_isolated(&word_to_bipartite(w));
    let (_, term) = word_to_graph(w);
    let chi = term.chromatic_number();
    let v = 2 * f - ell - m;
    debug_assert_eq!(v, stripped.order());
    let nu = f - chi;
    let ratio = (v > 0).then(|| BigRational::new(BigInt::from(2 * nu), BigInt::from(v)));
    let g = BigRational::new(BigInt::from(chi), BigInt::from(f));
    let nu_oracle = matching_numbers(&stripped, caps).ok().map(|s| s.highest_nonzero());
    KahnCheck { f, ell, m, chi, v, nu, ratio, g, nu_oracle }
}
