//! Graph Stirling sequences `k ↦ {G brace k}` by five independent routes.

mod enumerate;
mod matching;
mod rook;
mod weyl;

pub use enumerate::stirling_enumerate;
pub use matching::{graph_matching_numbers, matching_numbers, stirling_matching};
pub use rook::{rook_numbers, stirling_rook};
pub use weyl::{normal_order, stirling_weyl, WeylState};

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dyck::DyckWord;
use crate::graphs::{word_to_clique_union, word_to_graph, GraphError};
use crate::poly::Polynomial;
use crate::{Caps, TooLarge};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error(transparent)]
    TooLarge(#[from] TooLarge),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("sequence has no positive entry")]
    AllZero,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("division by {k}! leaves a remainder; not a chromatic polynomial")]
    NonIntegralResult { k: usize },
    #[error("negative count at k = {k}; not a chromatic polynomial")]
    NegativeResult { k: usize },
    #[error("bad sequence JSON: {0}")]
    Json(String),
}

/// Which route produced a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Enumerate,
    Weyl,
    Rook,
    Matching,
    Chromatic,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Enumerate, Method::Weyl, Method::Rook, Method::Matching, Method::Chromatic];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Enumerate => "enumerate",
            Method::Weyl => "weyl",
            Method::Rook => "rook",
            Method::Matching => "matching",
            Method::Chromatic => "chromatic",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// A finite nonnegative sequence `a_0, ..., a_n`, zero outside that range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeq {
    values: Vec<BigUint>,
    method: Method,
}

#[derive(Serialize, Deserialize)]
struct CountSeqJson {
    n: usize,
    method: String,
    values: Vec<String>,
}

impl CountSeq {
    pub fn new(method: Method, values: Vec<BigUint>) -> Result<CountSeq, CountError> {
        if values.iter().all(Zero::is_zero) {
            return Err(CountError::AllZero);
        }
        Ok(CountSeq { values, method })
    }

    pub fn from_u64s(method: Method, values: &[u64]) -> Result<CountSeq, CountError> {
        CountSeq::new(method, values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Largest index stored.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.values.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.values.iter().sum()
    }

    pub fn lowest_nonzero(&self) -> usize {
        self.values.iter().position(|v| !v.is_zero()).expect("nonzero sequence")
    }

    pub fn highest_nonzero(&self) -> usize {
        self.values.iter().rposition(|v| !v.is_zero()).expect("nonzero sequence")
    }

    /// Same values, different provenance.
    pub fn with_method(mut self, method: Method) -> CountSeq {
        self.method = method;
        self
    }

    /// `b_k = a_{n-k}`.
    pub fn reversed(&self) -> CountSeq {
        let mut values = self.values.clone();
        values.reverse();
        CountSeq { values, method: self.method }
    }

    /// `b_k = a_{k-t}`.
    pub fn shifted(&self, t: usize) -> CountSeq {
        let mut values = vec![BigUint::zero(); t];
        values.extend(self.values.iter().cloned());
        CountSeq { values, method: self.method }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CountSeqJson {
            n: self.n(),
            method: self.method.as_str().to_string(),
            values: self.values.iter().map(ToString::to_string).collect(),
        })
        .expect("plain struct serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CountSeq, CountError> {
        let raw: CountSeqJson = serde_json::from_value(v.clone()).map_err(|e| CountError::Json(e.to_string()))?;
        let method = raw.method.parse().map_err(CountError::Json)?;
        let values = raw
            .values
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(|e| CountError::Json(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if values.len() != raw.n + 1 {
            return Err(CountError::Json(format!("n = {} but {} values", raw.n, values.len())));
        }
        CountSeq::new(method, values)
    }
}

/// `{G brace k} = (1/k!) Σ_i (-1)^i C(k,i) χ_G(k-i)` for `k = 0..=n`.
pub fn stirling_from_chromatic(p: &Polynomial, n: usize) -> Result<CountSeq, CountError> {
    let evals: Vec<BigInt> = (0..=n).map(|q| p.eval(&BigInt::from(q))).collect();
    let mut values = Vec::with_capacity(n + 1);
    let mut factorial = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            factorial *= k;
        }
        let mut binom = BigInt::one();
        let mut sum = BigInt::zero();
        for i in 0..=k {
            let term = &binom * &evals[k - i];
            if i % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            binom = binom * (k - i) / (i + 1);
        }
        // Always exact for integer coefficients; kept as a consistency check.
        let (quot, rem) = sum.div_rem(&factorial);
        if !rem.is_zero() {
            return Err(CountError::NonIntegralResult { k });
        }
        if quot.is_negative() {
            return Err(CountError::NegativeResult { k });
        }
        let (_, mag) = quot.into_parts();
        values.push(mag);
    }
    CountSeq::new(Method::Chromatic, values)
}

/// `χ(q) = Σ_k s_k q(q-1)...(q-k+1)`.
pub fn chromatic_from_stirling(s: &CountSeq) -> Polynomial {
    let mut falling = Polynomial::one();
    let mut out = Polynomial::zero();
    for (k, v) in s.values().iter().enumerate() {
        if k > 0 {
            falling = &falling * &Polynomial::from_i64s(&[-(k as i64 - 1), 1]);
        }
        if !v.is_zero() {
            out = &out + &falling.scale(&BigInt::from_biguint(Sign::Plus, v.clone()));
        }
    }
    out
}

/// The Stirling sequence of a quasi-threshold word via its structural
/// chromatic polynomial.
pub fn stirling_chromatic(w: &DyckWord) -> Result<CountSeq, CountError> {
    let (_, term) = word_to_graph(w);
    stirling_from_chromatic(&term.chromatic_polynomial(), w.n())
}

/// The individual computations compared by [`cross_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// Partition enumeration on `G_w`.
    EnumerateG,
    /// Partition enumeration on the clique-union graph `H_w`.
    EnumerateH,
    Weyl,
    Rook,
    Matching,
    Chromatic,
}

impl Route {
    pub const ALL: [Route; 6] =
        [Route::EnumerateG, Route::EnumerateH, Route::Weyl, Route::Rook, Route::Matching, Route::Chromatic];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::EnumerateG => "enumerate(G_w)",
            Route::EnumerateH => "enumerate(H_w)",
            Route::Weyl => "weyl",
            Route::Rook => "rook",
            Route::Matching => "matching",
            Route::Chromatic => "chromatic",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of running every route on one word.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub word: DyckWord,
    /// The rook sequence, which every other route is compared against.
    pub reference: CountSeq,
    pub results: Vec<(Route, Result<CountSeq, CountError>)>,
    /// First route and index at which a computed sequence differs from the reference.
    pub divergence: Option<(Route, usize)>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.divergence.is_none() && !self.results.iter().any(|(_, r)| matches!(r, Err(e) if !matches!(e, CountError::TooLarge(_))))
    }

    /// Routes skipped because a cap was exceeded.
    pub fn skipped(&self) -> Vec<Route> {
        self.results
            .iter()
            .filter(|(_, r)| matches!(r, Err(CountError::TooLarge(_))))
            .map(|(route, _)| *route)
            .collect()
    }
}

fn first_difference(a: &CountSeq, b: &CountSeq) -> Option<usize> {
    let len = a.values().len().max(b.values().len());
    (0..len).find(|&k| a.get(k) != b.get(k))
}

pub fn run_route(route: Route, w: &DyckWord, caps: &Caps) -> Result<CountSeq, CountError> {
    match route {
        Route::EnumerateG => stirling_enumerate(&word_to_graph(w).0, caps),
        Route::EnumerateH => stirling_enumerate(&word_to_clique_union(w), caps),
        Route::Weyl => stirling_weyl(w),
        Route::Rook => Ok(stirling_rook(w)),
        Route::Matching => stirling_matching(w, caps),
        Route::Chromatic => stirling_chromatic(w),
    }
}

pub fn cross_check(w: &DyckWord, caps: &Caps) -> CrossCheck {
    let reference = stirling_rook(w);
    let results: Vec<_> = Route::ALL.iter().map(|&r| (r, run_route(r, w, caps))).collect();
    let divergence = results.iter().find_map(|(route, res)| match res {
        Ok(seq) => first_difference(&reference, seq).map(|k| (*route, k)),
        Err(_) => None,
    });
    CrossCheck { word: w.clone(), reference, results, divergence }
}
