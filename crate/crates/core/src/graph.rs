//! Admissible graphs and their canonical forms.
//!
//! An admissible graph has `m >= 1` boundary vertices sitting on an ordered
//! line and `n >= 0` internal vertices. Boundary vertices emit no edges;
//! every internal vertex emits exactly two, one labeled left and one labeled
//! right. The directed graph has no circuit. Isomorphisms fix the boundary
//! pointwise and preserve the left/right labeling; switching the two legs of
//! a single vertex acts as multiplication by -1 on the orientation class.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("leg of internal vertex {vertex} points at {target} which is out of range")]
    MalformedTarget { vertex: usize, target: String },
    #[error("internal vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("boundary position {position} out of range 1..={count}")]
    PositionOutOfRange { position: usize, count: usize },
    #[error("boundary counts differ: {0} vs {1}")]
    BoundaryMismatch(usize, usize),
    #[error("operation is defined for exactly 3 boundary vertices, got {0}")]
    NotThreeBoundary(usize),
    #[error("combination mixes boundary counts")]
    MixedBoundary,
    #[error("insertion data lands two legs on one internal vertex")]
    NonInjectiveLanding,
    #[error("projected search space {projected} exceeds resource guard {bound} (set PRELIE_MAX_NODES to raise it)")]
    ResourceGuard { projected: u128, bound: u128 },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Which subclass of admissible graphs an operation works in.
///
/// `Constant` allows no internal-to-internal edge at all; `Linear` allows
/// each internal vertex at most one incoming edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClassKind {
    Constant,
    Linear,
}

impl GraphClassKind {
    pub fn label(self) -> &'static str {
        match self {
            GraphClassKind::Constant => "constant",
            GraphClassKind::Linear => "linear",
        }
    }
}

/// Head of a leg: a boundary vertex or an internal vertex, both 0-based.
///
/// The derived order (boundary targets before internal targets, each sorted
/// by index) is the total order underlying every canonical form in the
/// crate; changing it would silently change canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Boundary(usize),
    Internal(usize),
}

/// The two legs of an internal vertex, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LegSide {
    Left,
    Right,
}

impl LegSide {
    pub const BOTH: [LegSide; 2] = [LegSide::Left, LegSide::Right];

    pub fn index(self) -> usize {
        match self {
            LegSide::Left => 0,
            LegSide::Right => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            LegSide::Left => "L",
            LegSide::Right => "R",
        }
    }
}

/// A labeled admissible graph. Immutable after construction.
///
/// The derived `Ord` compares the boundary count and then the leg table
/// lexicographically (vertex by vertex, left leg before right leg); this is
/// the fixed total order on encodings used by canonicalization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleGraph {
    boundary_count: usize,
    legs: Vec<[Target; 2]>,
}

impl AdmissibleGraph {
    /// Builds a graph from its leg table, checking only that every target
    /// index is in range. Class invariants are checked by [`Self::validate`].
    pub fn new(boundary_count: usize, legs: Vec<[Target; 2]>) -> Result<Self, GraphError> {
        if boundary_count == 0 {
            return Err(GraphError::MalformedTarget {
                vertex: 0,
                target: "graph needs at least one boundary vertex".into(),
            });
        }
        let n = legs.len();
        for (v, pair) in legs.iter().enumerate() {
            for t in pair {
                let ok = match *t {
                    Target::Boundary(b) => b < boundary_count,
                    Target::Internal(i) => i < n,
                };
                if !ok {
                    return Err(GraphError::MalformedTarget {
                        vertex: v,
                        target: format!("{t:?}"),
                    });
                }
            }
        }
        Ok(Self {
            boundary_count,
            legs,
        })
    }

    /// The edgeless graph on `m` boundary vertices.
    pub fn edgeless(boundary_count: usize) -> Self {
        Self::new(boundary_count, Vec::new()).expect("positive boundary count")
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_count
    }

    pub fn internal_count(&self) -> usize {
        self.legs.len()
    }

    pub fn legs(&self) -> &[[Target; 2]] {
        &self.legs
    }

    pub fn leg(&self, vertex: usize, side: LegSide) -> Target {
        self.legs[vertex][side.index()]
    }

    /// Number of edges from internal vertices into internal vertex `v`.
    pub fn internal_in_degree(&self, v: usize) -> usize {
        self.legs
            .iter()
            .flatten()
            .filter(|t| **t == Target::Internal(v))
            .count()
    }

    /// True when the directed graph has no circuit.
    pub fn is_acyclic(&self) -> bool {
        // Colors: 0 unvisited, 1 on stack, 2 done. Only internal edges matter.
        let n = self.internal_count();
        let mut color = vec![0u8; n];
        fn visit(g: &AdmissibleGraph, v: usize, color: &mut [u8]) -> bool {
            color[v] = 1;
            for t in g.legs[v] {
                if let Target::Internal(w) = t {
                    match color[w] {
                        0 => {
                            if !visit(g, w, color) {
                                return false;
                            }
                        }
                        1 => return false,
                        _ => {}
                    }
                }
            }
            color[v] = 2;
            true
        }
        (0..n).all(|v| color[v] != 0 || visit(self, v, &mut color))
    }

    /// Checks the class invariants for `kind`: two distinct leg targets per
    /// vertex, no circuit, and the in-degree (linear) or boundary-only
    /// (constant) restriction.
    pub fn validate(&self, kind: GraphClassKind) -> bool {
        for pair in &self.legs {
            if pair[0] == pair[1] {
                return false;
            }
        }
        if !self.is_acyclic() {
            return false;
        }
        match kind {
            GraphClassKind::Constant => self
                .legs
                .iter()
                .flatten()
                .all(|t| matches!(t, Target::Boundary(_))),
            GraphClassKind::Linear => {
                (0..self.internal_count()).all(|v| self.internal_in_degree(v) <= 1)
            }
        }
    }

    /// The graph with internal vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.legs.len());
        let mut legs = vec![[Target::Boundary(0); 2]; self.legs.len()];
        for (v, pair) in self.legs.iter().enumerate() {
            legs[perm[v]] = pair.map(|t| match t {
                Target::Internal(i) => Target::Internal(perm[i]),
                b => b,
            });
        }
        Self {
            boundary_count: self.boundary_count,
            legs,
        }
    }

    /// Minimal relabeling of the internal vertices under the fixed total
    /// order. Idempotent and invariant under internal relabelings.
    pub fn canonicalize(&self) -> Self {
        let mut best: Option<Self> = None;
        for_each_permutation(self.internal_count(), |perm| {
            let candidate = self.relabeled(perm);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        });
        best.unwrap_or_else(|| self.clone())
    }

    /// Boundary-fixing, label-preserving isomorphism test.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.boundary_count == other.boundary_count
            && self.internal_count() == other.internal_count()
            && self.canonicalize() == other.canonicalize()
    }

    /// Order of the group of boundary-fixing, label-preserving automorphisms.
    pub fn aut_order(&self) -> u64 {
        let mut count = 0u64;
        for_each_permutation(self.internal_count(), |perm| {
            if self.relabeled(perm) == *self {
                count += 1;
            }
        });
        count
    }

    /// Swaps the left and right legs of internal vertex `v`. An involution.
    pub fn negate_at(&self, v: usize) -> Result<Self, GraphError> {
        if v >= self.internal_count() {
            return Err(GraphError::VertexOutOfRange(v));
        }
        let mut legs = self.legs.clone();
        legs[v] = [legs[v][1], legs[v][0]];
        Ok(Self {
            boundary_count: self.boundary_count,
            legs,
        })
    }

    /// The signed orientation class of the graph.
    ///
    /// Minimizes over all internal relabelings combined with all leg flips;
    /// the sign is the parity of the flips used, and the class is zero
    /// exactly when some odd flip set composed with a relabeling maps the
    /// graph to itself.
    pub fn normalize(&self) -> SignedClass {
        let mut best: Option<(Self, u8)> = None;
        let mut zero_at_min = false;
        for_each_permutation(self.internal_count(), |perm| {
            let mut candidate = self.relabeled(perm);
            // For a fixed relabeling the leg pairs occupy disjoint encoding
            // blocks, so flipping each vertex to its smaller orientation
            // yields the minimum for that relabeling.
            let mut parity = 0u8;
            let mut tie = false;
            for pair in candidate.legs.iter_mut() {
                let flipped = [pair[1], pair[0]];
                match flipped.cmp(pair) {
                    Ordering::Less => {
                        *pair = flipped;
                        parity ^= 1;
                    }
                    Ordering::Equal => tie = true,
                    Ordering::Greater => {}
                }
            }
            match &best {
                None => {
                    best = Some((candidate, parity));
                    zero_at_min = tie;
                }
                Some((b, p)) => match candidate.cmp(b) {
                    Ordering::Less => {
                        best = Some((candidate, parity));
                        zero_at_min = tie;
                    }
                    Ordering::Equal => {
                        if tie || parity != *p {
                            zero_at_min = true;
                        }
                    }
                    Ordering::Greater => {}
                },
            }
        });
        let (representative, parity) = best.unwrap_or_else(|| (self.clone(), 0));
        if zero_at_min {
            SignedClass::Zero
        } else {
            SignedClass::Class {
                sign: if parity == 0 { 1 } else { -1 },
                representative,
            }
        }
    }

    /// Boundary vertices reachable from internal vertex `v`.
    pub fn boundary_reach(&self, v: usize) -> Vec<usize> {
        let mut seen_internal = vec![false; self.internal_count()];
        let mut seen_boundary = vec![false; self.boundary_count];
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            if seen_internal[u] {
                continue;
            }
            seen_internal[u] = true;
            for t in self.legs[u] {
                match t {
                    Target::Boundary(b) => seen_boundary[b] = true,
                    Target::Internal(w) => stack.push(w),
                }
            }
        }
        (0..self.boundary_count)
            .filter(|&b| seen_boundary[b])
            .collect()
    }
}

impl fmt::Display for AdmissibleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::grammar::graph_string(self))
    }
}

/// An orientation class: a canonical representative with a sign, or the
/// zero class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignedClass {
    Zero,
    Class {
        sign: i8,
        representative: AdmissibleGraph,
    },
}

impl SignedClass {
    pub fn is_zero(&self) -> bool {
        matches!(self, SignedClass::Zero)
    }

    pub fn sign(&self) -> Option<i8> {
        match self {
            SignedClass::Zero => None,
            SignedClass::Class { sign, .. } => Some(*sign),
        }
    }

    pub fn representative(&self) -> Option<&AdmissibleGraph> {
        match self {
            SignedClass::Zero => None,
            SignedClass::Class { representative, .. } => Some(representative),
        }
    }

    /// True when both classes span the same line, ignoring sign.
    pub fn same_line(&self, other: &SignedClass) -> bool {
        match (self, other) {
            (SignedClass::Zero, SignedClass::Zero) => true,
            (
                SignedClass::Class {
                    representative: a, ..
                },
                SignedClass::Class {
                    representative: b, ..
                },
            ) => a == b,
            _ => false,
        }
    }
}

/// Calls `f` with every permutation of `0..n`, as an old-index-to-new-index
/// table.
pub(crate) fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    fn rec<F: FnMut(&[usize])>(k: usize, placement: &mut Vec<usize>, perm: &mut Vec<usize>, f: &mut F) {
        let n = placement.len();
        if k == n {
            for (pos, &old) in placement.iter().enumerate() {
                perm[old] = pos;
            }
            f(perm);
            return;
        }
        for i in k..n {
            placement.swap(k, i);
            rec(k + 1, placement, perm, f);
            placement.swap(k, i);
        }
    }
    let mut placement: Vec<usize> = (0..n).collect();
    let mut perm = vec![0usize; n];
    rec(0, &mut placement, &mut perm, &mut f);
}
