//! Boundary insertion and the graded internal composition.
//!
//! Inserting `inner` at boundary position `i` of `outer` replaces that
//! boundary vertex by a disjoint copy of `inner` (boundary renumbered in
//! order) and redistributes the incoming legs over `inner`'s vertices in
//! every possible way, with landings on internal vertices injective. Each
//! landing map is one item of insertion data; the insertion is the sum of
//! the normalized results, truncated to the chosen graph class.

use crate::combination::{Coeff, GraphCombination};
use crate::graph::{
    AdmissibleGraph, GraphClassKind, GraphError, LegSide, SignedClass, Target,
};

/// Boundary grading: one less than the boundary count. Additive under
/// composition.
pub fn boundary_degree(g: &AdmissibleGraph) -> usize {
    g.boundary_count() - 1
}

/// The legs of `outer` arriving at 1-based boundary position `i`, in
/// (vertex, side) order.
pub fn incoming_legs(
    outer: &AdmissibleGraph,
    position: usize,
) -> Result<Vec<(usize, LegSide)>, GraphError> {
    if position == 0 || position > outer.boundary_count() {
        return Err(GraphError::PositionOutOfRange {
            position,
            count: outer.boundary_count(),
        });
    }
    let wanted = Target::Boundary(position - 1);
    let mut legs = Vec::new();
    for v in 0..outer.internal_count() {
        for side in LegSide::BOTH {
            if outer.leg(v, side) == wanted {
                legs.push((v, side));
            }
        }
    }
    Ok(legs)
}

/// One landing map: where each incoming leg of the replaced boundary vertex
/// lands among the vertices of the inner graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionData<'a> {
    pub outer: &'a AdmissibleGraph,
    /// 1-based boundary position of `outer` being replaced.
    pub position: usize,
    pub inner: &'a AdmissibleGraph,
    /// Targets in `inner`'s own indexing, aligned with
    /// [`incoming_legs`]`(outer, position)`.
    pub landing: Vec<Target>,
}

impl InsertionData<'_> {
    /// Landing maps must send distinct legs to distinct internal vertices.
    pub fn is_valid(&self) -> bool {
        let mut used = vec![false; self.inner.internal_count()];
        for t in &self.landing {
            if let Target::Internal(v) = t {
                if used[*v] {
                    return false;
                }
                used[*v] = true;
            }
        }
        true
    }

    /// The labeled graph this landing map produces, before normalization.
    ///
    /// Internal vertices are the outer ones followed by the inner ones; the
    /// replaced boundary vertex becomes `inner`'s boundary run, and the
    /// outer boundary vertices after it shift right.
    pub fn raw_graph(&self) -> Result<AdmissibleGraph, GraphError> {
        if !self.is_valid() {
            return Err(GraphError::NonInjectiveLanding);
        }
        let legs_in = incoming_legs(self.outer, self.position)?;
        if legs_in.len() != self.landing.len() {
            return Err(GraphError::NonInjectiveLanding);
        }
        let pos = self.position - 1;
        let n1 = self.outer.internal_count();
        let m2 = self.inner.boundary_count();
        let outer_boundary = |b: usize| {
            if b < pos {
                Target::Boundary(b)
            } else {
                Target::Boundary(b + m2 - 1)
            }
        };
        let inner_target = |t: Target| match t {
            Target::Boundary(b) => Target::Boundary(pos + b),
            Target::Internal(v) => Target::Internal(n1 + v),
        };

        let mut legs = Vec::with_capacity(n1 + self.inner.internal_count());
        for (v, pair) in self.outer.legs().iter().enumerate() {
            let mut mapped = [Target::Boundary(0); 2];
            for side in LegSide::BOTH {
                let t = pair[side.index()];
                mapped[side.index()] = match t {
                    Target::Boundary(b) if b == pos => {
                        let slot = legs_in
                            .iter()
                            .position(|&(w, s)| (w, s) == (v, side))
                            .expect("leg listed");
                        inner_target(self.landing[slot])
                    }
                    Target::Boundary(b) => outer_boundary(b),
                    internal => internal,
                };
            }
            legs.push(mapped);
        }
        for pair in self.inner.legs() {
            legs.push(pair.map(inner_target));
        }
        AdmissibleGraph::new(
            self.outer.boundary_count() + m2 - 1,
            legs,
        )
    }
}

/// The normalized class of one landing map; zero when the result
/// self-negates.
pub fn apply_insertion(data: &InsertionData<'_>) -> Result<SignedClass, GraphError> {
    Ok(data.raw_graph()?.normalize())
}

/// All landing maps with injective internal part, in deterministic order.
pub fn enumerate_insertion_data<'a>(
    outer: &'a AdmissibleGraph,
    position: usize,
    inner: &'a AdmissibleGraph,
) -> Result<Vec<InsertionData<'a>>, GraphError> {
    let legs = incoming_legs(outer, position)?;
    let mut targets: Vec<Target> = (0..inner.boundary_count()).map(Target::Boundary).collect();
    targets.extend((0..inner.internal_count()).map(Target::Internal));

    fn rec(
        slot: usize,
        total: usize,
        targets: &[Target],
        landing: &mut Vec<Target>,
        used: &mut [bool],
        out: &mut Vec<Vec<Target>>,
    ) {
        if slot == total {
            out.push(landing.clone());
            return;
        }
        for &t in targets {
            if let Target::Internal(v) = t {
                if used[v] {
                    continue;
                }
                used[v] = true;
            }
            landing.push(t);
            rec(slot + 1, total, targets, landing, used, out);
            landing.pop();
            if let Target::Internal(v) = t {
                used[v] = false;
            }
        }
    }
    let mut landings = Vec::new();
    let mut landing = Vec::with_capacity(legs.len());
    let mut used = vec![false; inner.internal_count()];
    rec(0, legs.len(), &targets, &mut landing, &mut used, &mut landings);
    Ok(landings
        .into_iter()
        .map(|landing| InsertionData {
            outer,
            position,
            inner,
            landing,
        })
        .collect())
}

/// Sum over all insertion data whose result stays in `kind`, multiplicities
/// accumulated on canonical classes with signs from normalization.
pub fn insert_at_in(
    kind: GraphClassKind,
    outer: &AdmissibleGraph,
    position: usize,
    inner: &AdmissibleGraph,
) -> Result<GraphCombination, GraphError> {
    let mut result = GraphCombination::new();
    for data in enumerate_insertion_data(outer, position, inner)? {
        let raw = data.raw_graph()?;
        if !raw.validate(kind) {
            continue;
        }
        result.add_graph(&raw, Coeff::new(1, 1));
    }
    Ok(result)
}

/// [`insert_at_in`] in the linear class, the class every insertion sweep
/// works in by default.
pub fn insert_at(
    outer: &AdmissibleGraph,
    position: usize,
    inner: &AdmissibleGraph,
) -> Result<GraphCombination, GraphError> {
    insert_at_in(GraphClassKind::Linear, outer, position, inner)
}

/// Bilinear extension of the alternating-position insertion sum: inserting
/// a combination whose terms all have boundary count `m'` contributes
/// position `i` with sign `(-1)^((i-1) * (m'-1))`.
pub fn compose_in(
    kind: GraphClassKind,
    x: &GraphCombination,
    y: &GraphCombination,
) -> Result<GraphCombination, GraphError> {
    let Some(m_inner) = y.uniform_boundary_count()? else {
        return Ok(GraphCombination::new());
    };
    let mut result = GraphCombination::new();
    for (gy, cy) in y.iter() {
        for (gx, cx) in x.iter() {
            for position in 1..=gx.boundary_count() {
                let sign = if (position - 1) * (m_inner - 1) % 2 == 1 {
                    -Coeff::new(1, 1)
                } else {
                    Coeff::new(1, 1)
                };
                let term = insert_at_in(kind, gx, position, gy)?;
                result.add_scaled(&term, *cx * *cy * sign);
            }
        }
    }
    Ok(result)
}

/// [`compose_in`] in the linear class.
pub fn compose(
    x: &GraphCombination,
    y: &GraphCombination,
) -> Result<GraphCombination, GraphError> {
    compose_in(GraphClassKind::Linear, x, y)
}
