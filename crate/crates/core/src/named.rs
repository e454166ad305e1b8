//! The table of named small graphs.
//!
//! The two-boundary graphs `b0`, `b1`, `b1^2`, `b2L`, `b2R` and the
//! three-boundary graphs `gamma1..gamma3`, `t2L`, `t2R`, `c2L`, `c2R`, `c2`
//! are the standard small cases every verification table quotes.
//!
//! Realization choices that are not forced by the defining pictures are
//! pinned by factorization identities instead:
//!
//! * `t2R` is the chain summand of inserting a wedge into a wedge at the
//!   first boundary position, `t2L` the chain summand at the second;
//! * `b2L` is the quotient of `t2L` by its left boundary pair, `b2R` the
//!   quotient of `t2R` by its right boundary pair, so the superscript names
//!   the boundary point carrying the chain's free leg;
//! * `c2L = gamma2 * gamma3` and `c2R = gamma1 * gamma2`;
//! * `c2` is the symmetric chain whose bottom wedge spans the outer boundary
//!   points and whose free leg lands on the middle one. Its two labelings
//!   differ by a sign; the table picks the one with the left leg on the
//!   chain edge.

use crate::graph::{AdmissibleGraph, GraphError, Target};

/// Names accepted wherever a graph string is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphName {
    B0,
    B1,
    B1Sq,
    B2L,
    B2R,
    Gamma1,
    Gamma2,
    Gamma3,
    T2L,
    T2R,
    C2L,
    C2R,
    C2,
}

impl GraphName {
    pub const ALL: [GraphName; 13] = [
        GraphName::B0,
        GraphName::B1,
        GraphName::B1Sq,
        GraphName::B2L,
        GraphName::B2R,
        GraphName::Gamma1,
        GraphName::Gamma2,
        GraphName::Gamma3,
        GraphName::T2L,
        GraphName::T2R,
        GraphName::C2L,
        GraphName::C2R,
        GraphName::C2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            GraphName::B0 => "b0",
            GraphName::B1 => "b1",
            GraphName::B1Sq => "b1^2",
            GraphName::B2L => "b2L",
            GraphName::B2R => "b2R",
            GraphName::Gamma1 => "gamma1",
            GraphName::Gamma2 => "gamma2",
            GraphName::Gamma3 => "gamma3",
            GraphName::T2L => "t2L",
            GraphName::T2R => "t2R",
            GraphName::C2L => "c2L",
            GraphName::C2R => "c2R",
            GraphName::C2 => "c2",
        }
    }

    pub fn parse(text: &str) -> Option<GraphName> {
        let t = text.trim();
        GraphName::ALL
            .into_iter()
            .find(|name| name.label().eq_ignore_ascii_case(t))
    }

    /// The pinned labeled realization.
    pub fn graph(self) -> AdmissibleGraph {
        use Target::{Boundary as B, Internal as V};
        let (m, legs): (usize, Vec<[Target; 2]>) = match self {
            GraphName::B0 => (2, vec![]),
            GraphName::B1 => (2, vec![[B(0), B(1)]]),
            GraphName::B1Sq => (2, vec![[B(0), B(1)], [B(0), B(1)]]),
            GraphName::B2L => (2, vec![[B(0), V(1)], [B(0), B(1)]]),
            GraphName::B2R => (2, vec![[V(1), B(1)], [B(0), B(1)]]),
            GraphName::Gamma1 => (3, vec![[B(1), B(2)]]),
            GraphName::Gamma2 => (3, vec![[B(0), B(2)]]),
            GraphName::Gamma3 => (3, vec![[B(0), B(1)]]),
            GraphName::T2L => (3, vec![[B(0), V(1)], [B(1), B(2)]]),
            GraphName::T2R => (3, vec![[V(1), B(2)], [B(0), B(1)]]),
            GraphName::C2L => (3, vec![[B(0), B(2)], [B(0), B(1)]]),
            GraphName::C2R => (3, vec![[B(1), B(2)], [B(0), B(2)]]),
            GraphName::C2 => (3, vec![[V(1), B(1)], [B(0), B(2)]]),
        };
        AdmissibleGraph::new(m, legs).expect("named graphs are well formed")
    }
}

/// Looks up a named graph by alias.
pub fn named(name: &str) -> Result<AdmissibleGraph, GraphError> {
    GraphName::parse(name)
        .map(GraphName::graph)
        .ok_or_else(|| GraphError::UnknownName(name.to_string()))
}
