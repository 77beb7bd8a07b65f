//! Exact graph Stirling numbers.
//!
//! `{G brace k}` counts the partitions of the vertex set of `G` into `k`
//! nonempty independent sets. For quasi-threshold graphs (and anything
//! co-chromatic with one) the same sequence is produced by five unrelated
//! routes, all implemented here over arbitrary-precision integers:
//!
//! * direct partition enumeration ([`counting::stirling_enumerate`]),
//! * normal ordering in the Weyl algebra `Dx = xD + 1` ([`counting::stirling_weyl`]),
//! * non-attacking rooks on a Ferrers board ([`counting::stirling_rook`]),
//! * matchings of a bipartite graph ([`counting::stirling_matching`]),
//! * inversion of the chromatic polynomial ([`counting::stirling_from_chromatic`]).
//!
//! [`normality`] treats a sequence as a histogram and reports exact moments,
//! the Kolmogorov distance to the standard normal, and exact real-rootedness
//! of its generating polynomial.

pub mod counting;
pub mod dyck;
pub mod family;
pub mod graphs;
pub mod normality;
pub mod poly;

pub use counting::{CountError, CountSeq, CrossCheck, Method};
pub use dyck::{DyckError, DyckWord, FerrersBoard, Letter, SquareLabel};
pub use family::{FamilyKind, FamilySpec};
pub use graphs::{BipartiteGraph, Graph, GraphError, QtDecomposition};
pub use normality::{HistogramStats, KahnCheck, NormalityError, NormalityReport, RootVerdict};
pub use poly::Polynomial;

use thiserror::Error;

/// Environment variable naming the default resource-cap profile.
pub const CAPS_ENV: &str = "GRAPHSTIRLING_CAPS";

/// A computation would exceed its configured resource cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: size {size} exceeds cap {cap}")]
pub struct TooLarge {
    pub what: &'static str,
    pub size: usize,
    pub cap: usize,
}

/// Size limits for the exponential-time routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Vertex limit for partition enumeration.
    pub enumerate_vertices: usize,
    /// Vertex limit for deletion–contraction on general graphs.
    pub chromatic_vertices: usize,
    /// Edge limit for the matching recursion.
    pub matching_edges: usize,
    /// Memo-table limit for the matching recursion.
    pub matching_states: usize,
    /// Degree limit for the exact real-rootedness decision.
    pub sturm_degree: usize,
}

impl Caps {
    pub const fn small() -> Caps {
        Caps {
            enumerate_vertices: 10,
            chromatic_vertices: 10,
            matching_edges: 60,
            matching_states: 100_000,
            sturm_degree: 60,
        }
    }

    pub const fn desk() -> Caps {
        Caps {
            enumerate_vertices: 13,
            chromatic_vertices: 14,
            matching_edges: 400,
            matching_states: 2_000_000,
            sturm_degree: 200,
        }
    }

    pub const fn large() -> Caps {
        Caps {
            enumerate_vertices: 15,
            chromatic_vertices: 18,
            matching_edges: 2_000,
            matching_states: 20_000_000,
            sturm_degree: 600,
        }
    }

    pub fn from_profile(name: &str) -> Option<Caps> {
        match name {
            "small" => Some(Caps::small()),
            "desk" => Some(Caps::desk()),
            "large" => Some(Caps::large()),
            _ => None,
        }
    }

    /// Reads [`CAPS_ENV`]; unset or unknown values fall back to `desk`.
    pub fn from_env() -> Caps {
        std::env::var(CAPS_ENV)
            .ok()
            .and_then(|v| Caps::from_profile(v.trim()))
            .unwrap_or_default()
    }
}

impl Default for Caps {
    fn default() -> Caps {
        Caps::desk()
    }
}
