//! Normal subgraphs, boundary factorization, the unique-factorization sweep
//! and orbit-stabilizer multiplicity checks.
//!
//! A subgraph sitting on an adjacent boundary pair is normal when collapsing
//! it to a single boundary point leaves an admissible graph. For a graph
//! with three boundary points the maximal normal subgraph on the leftmost or
//! rightmost pair is unique and consists exactly of the internal vertices
//! all of whose directed paths terminate in that pair, so it is computed by
//! reachability rather than search.

use std::collections::BTreeMap;

use crate::combination::Coeff;
use crate::enumerate::enumerate;
use crate::graph::{AdmissibleGraph, GraphClassKind, GraphError, Target};
use crate::grammar::graph_string;
use crate::insertion::{enumerate_insertion_data, insert_at};

/// Which adjacent boundary pair a factorization collapses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSide {
    Left,
    Right,
}

impl FactorSide {
    pub fn label(self) -> &'static str {
        match self {
            FactorSide::Left => "left",
            FactorSide::Right => "right",
        }
    }

    /// The 1-based insertion position that reverses this collapse.
    pub fn position(self) -> usize {
        match self {
            FactorSide::Left => 1,
            FactorSide::Right => 2,
        }
    }

    fn pair(self, boundary_count: usize) -> [usize; 2] {
        match self {
            FactorSide::Left => [0, 1],
            FactorSide::Right => [boundary_count - 2, boundary_count - 1],
        }
    }
}

/// A boundary factorization: the normal subgraph on the chosen pair and the
/// quotient collapsing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryFactorization {
    pub side: FactorSide,
    pub alpha: AdmissibleGraph,
    pub quotient: AdmissibleGraph,
}

/// Is the induced subgraph on `subset` and the chosen boundary pair normal?
///
/// Checks that the subgraph is total (legs of members stay inside) and that
/// the collapse is admissible (no outside vertex sends both legs into the
/// collapsed region, which would create parallel legs).
pub fn is_normal_subgraph(g: &AdmissibleGraph, subset: &[usize], side: FactorSide) -> bool {
    let pair = side.pair(g.boundary_count());
    let n = g.internal_count();
    let mut member = vec![false; n];
    for &v in subset {
        if v >= n {
            return false;
        }
        member[v] = true;
    }
    let inside = |t: Target| match t {
        Target::Boundary(b) => pair.contains(&b),
        Target::Internal(v) => member[v],
    };
    for (v, legs) in g.legs().iter().enumerate() {
        let pair_inside = legs.map(inside);
        if member[v] {
            if !pair_inside[0] || !pair_inside[1] {
                return false;
            }
        } else if pair_inside[0] && pair_inside[1] {
            return false;
        }
    }
    true
}

/// The unique maximal normal subgraph on the chosen pair of a three-boundary
/// graph, with its quotient. Collapsing the left pair yields boundary
/// (collapsed, old 3); collapsing the right pair yields (old 1, collapsed).
pub fn boundary_factor(
    g: &AdmissibleGraph,
    side: FactorSide,
) -> Result<BoundaryFactorization, GraphError> {
    if g.boundary_count() != 3 {
        return Err(GraphError::NotThreeBoundary(g.boundary_count()));
    }
    let pair = side.pair(3);
    let n = g.internal_count();
    let in_alpha: Vec<bool> = (0..n)
        .map(|v| g.boundary_reach(v).iter().all(|b| pair.contains(b)))
        .collect();

    let members: Vec<usize> = (0..n).filter(|&v| in_alpha[v]).collect();
    let alpha_index: BTreeMap<usize, usize> = members
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let alpha_legs: Vec<[Target; 2]> = members
        .iter()
        .map(|&v| {
            g.legs()[v].map(|t| match t {
                Target::Boundary(b) => Target::Boundary(if b == pair[0] { 0 } else { 1 }),
                Target::Internal(w) => Target::Internal(alpha_index[&w]),
            })
        })
        .collect();
    let alpha = AdmissibleGraph::new(2, alpha_legs)?;

    let rest: Vec<usize> = (0..n).filter(|&v| !in_alpha[v]).collect();
    let rest_index: BTreeMap<usize, usize> = rest
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    let collapsed = match side {
        FactorSide::Left => Target::Boundary(0),
        FactorSide::Right => Target::Boundary(1),
    };
    let quotient_legs: Vec<[Target; 2]> = rest
        .iter()
        .map(|&v| {
            g.legs()[v].map(|t| match t {
                Target::Boundary(b) if pair.contains(&b) => collapsed,
                Target::Boundary(_) => match side {
                    FactorSide::Left => Target::Boundary(1),
                    FactorSide::Right => Target::Boundary(0),
                },
                Target::Internal(w) if in_alpha[w] => collapsed,
                Target::Internal(w) => Target::Internal(rest_index[&w]),
            })
        })
        .collect();
    let quotient = AdmissibleGraph::new(2, quotient_legs)?;

    Ok(BoundaryFactorization {
        side,
        alpha,
        quotient,
    })
}

/// One unique-factorization failure.
#[derive(Debug, Clone)]
pub struct UfViolation {
    pub outer: String,
    pub inner: String,
    pub position: usize,
    pub summand: String,
    pub alpha: String,
    pub quotient: String,
}

/// Result of [`unique_factorization_sweep`].
#[derive(Debug, Clone)]
pub struct UfSweep {
    pub max_order: usize,
    pub checked: usize,
    pub violations: Vec<UfViolation>,
}

/// For every pair of two-boundary classes with total order at most
/// `max_order` and both insertion positions, checks that every summand's
/// boundary factorization recovers the operands.
pub fn unique_factorization_sweep(max_order: usize) -> Result<UfSweep, GraphError> {
    let sets: Vec<_> = (0..=max_order)
        .map(|k| enumerate(k, 2, GraphClassKind::Linear))
        .collect::<Result<_, _>>()?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for i in 0..=max_order {
        for j in 0..=max_order - i {
            for outer in &sets[i].classes {
                for inner in &sets[j].classes {
                    for side in [FactorSide::Left, FactorSide::Right] {
                        let position = side.position();
                        let combo = insert_at(&outer.graph, position, &inner.graph)?;
                        for (summand, _) in combo.iter() {
                            checked += 1;
                            let fr = boundary_factor(summand, side)?;
                            let ok = fr
                                .alpha
                                .normalize()
                                .same_line(&inner.graph.normalize())
                                && fr
                                    .quotient
                                    .normalize()
                                    .same_line(&outer.graph.normalize());
                            if !ok {
                                violations.push(UfViolation {
                                    outer: graph_string(&outer.graph),
                                    inner: graph_string(&inner.graph),
                                    position,
                                    summand: graph_string(summand),
                                    alpha: graph_string(&fr.alpha),
                                    quotient: graph_string(&fr.quotient),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(UfSweep {
        max_order,
        checked,
        violations,
    })
}

/// Multiplicity of one insertion summand against the symmetry-group
/// prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// Number of insertion data whose labeled result is isomorphic to the
    /// target.
    pub multiplicity: u64,
    pub aut_outer: u64,
    pub aut_inner: u64,
    pub aut_target: u64,
    /// `aut_outer * aut_inner / aut_target`.
    pub formula: Coeff,
    /// Direct count equals the formula (vacuously true at multiplicity 0).
    pub agrees: bool,
}

/// Counts the insertion data producing `target` and compares the count with
/// the orbit-stabilizer prediction.
pub fn insertion_orbit_report(
    outer: &AdmissibleGraph,
    position: usize,
    inner: &AdmissibleGraph,
    target: &AdmissibleGraph,
) -> Result<OrbitReport, GraphError> {
    let target_canonical = target.canonicalize();
    let mut multiplicity = 0u64;
    for data in enumerate_insertion_data(outer, position, inner)? {
        if data.raw_graph()?.canonicalize() == target_canonical {
            multiplicity += 1;
        }
    }
    let aut_outer = outer.aut_order();
    let aut_inner = inner.aut_order();
    let aut_target = target.aut_order();
    let formula = Coeff::new((aut_outer * aut_inner) as i64, aut_target as i64);
    let agrees = multiplicity == 0 || Coeff::from_integer(multiplicity as i64) == formula;
    Ok(OrbitReport {
        multiplicity,
        aut_outer,
        aut_inner,
        aut_target,
        formula,
        agrees,
    })
}

/// Result of [`orbit_sweep`].
#[derive(Debug, Clone)]
pub struct OrbitSweep {
    pub max_order: usize,
    pub checked: usize,
    pub violations: Vec<String>,
}

/// Sweeps every insertion at combined order up to `max_order`, grouping the
/// insertion data by labeled result class; every group size must equal the
/// orbit-stabilizer prediction.
pub fn orbit_sweep(max_order: usize) -> Result<OrbitSweep, GraphError> {
    let sets: Vec<_> = (0..=max_order)
        .map(|k| enumerate(k, 2, GraphClassKind::Linear))
        .collect::<Result<_, _>>()?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for i in 0..=max_order {
        for j in 0..=max_order - i {
            for outer in &sets[i].classes {
                for inner in &sets[j].classes {
                    for position in [1, 2] {
                        let mut groups: BTreeMap<AdmissibleGraph, u64> = BTreeMap::new();
                        for data in
                            enumerate_insertion_data(&outer.graph, position, &inner.graph)?
                        {
                            let raw = data.raw_graph()?;
                            if !raw.validate(GraphClassKind::Linear) {
                                continue;
                            }
                            *groups.entry(raw.canonicalize()).or_insert(0) += 1;
                        }
                        for (class, count) in groups {
                            checked += 1;
                            let product = outer.aut * inner.aut;
                            let aut_class = class.aut_order();
                            if product % aut_class != 0 || product / aut_class != count {
                                violations.push(format!(
                                    "{} o_{} {} -> {}: count {} vs {}/{}",
                                    graph_string(&outer.graph),
                                    position,
                                    graph_string(&inner.graph),
                                    graph_string(&class),
                                    count,
                                    product,
                                    aut_class
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(OrbitSweep {
        max_order,
        checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::product;
    use crate::named::named;

    fn gamma_square(i: usize) -> AdmissibleGraph {
        let g = named(&format!("gamma{i}")).unwrap();
        product(&g, &g)
            .unwrap()
            .representative()
            .unwrap()
            .clone()
    }

    #[test]
    fn normal_subgraph_examples() {
        // The empty subgraph over the left pair of two wedges on (2,3).
        let g1sq = gamma_square(1);
        assert!(is_normal_subgraph(&g1sq, &[], FactorSide::Left));
        assert!(!is_normal_subgraph(&g1sq, &[0], FactorSide::Left));
        assert!(!is_normal_subgraph(&g1sq, &[0, 1], FactorSide::Left));

        // In gamma2 * gamma3, the wedge on (1,2) is normal over the left pair.
        let c2l = named("c2L").unwrap();
        let wedge12: Vec<usize> = (0..2)
            .filter(|&v| c2l.boundary_reach(v) == vec![0, 1])
            .collect();
        assert_eq!(wedge12.len(), 1);
        assert!(is_normal_subgraph(&c2l, &wedge12, FactorSide::Left));
        assert!(!is_normal_subgraph(&c2l, &[], FactorSide::Left));
    }

    #[test]
    fn factor_requires_three_boundary_points() {
        let err = boundary_factor(&named("b1").unwrap(), FactorSide::Left);
        assert!(matches!(err, Err(GraphError::NotThreeBoundary(2))));
    }

    #[test]
    fn factor_of_the_edgeless_graph() {
        let fr = boundary_factor(&AdmissibleGraph::edgeless(3), FactorSide::Left).unwrap();
        assert_eq!(fr.alpha, named("b0").unwrap());
        assert_eq!(fr.quotient, named("b0").unwrap());
    }

    #[test]
    fn factor_of_gamma1_squared() {
        let fr = boundary_factor(&gamma_square(1), FactorSide::Left).unwrap();
        assert_eq!(fr.alpha, named("b0").unwrap());
        assert!(fr.quotient.is_isomorphic(&named("b1^2").unwrap()));

        let fr = boundary_factor(&gamma_square(1), FactorSide::Right).unwrap();
        assert!(fr.alpha.is_isomorphic(&named("b1^2").unwrap()));
        assert_eq!(fr.quotient, named("b0").unwrap());
    }

    #[test]
    fn factor_of_the_symmetric_chain() {
        let c2 = named("c2").unwrap();
        let left = boundary_factor(&c2, FactorSide::Left).unwrap();
        assert_eq!(left.alpha, named("b0").unwrap());
        assert!(left
            .quotient
            .normalize()
            .same_line(&named("b2L").unwrap().normalize()));

        let right = boundary_factor(&c2, FactorSide::Right).unwrap();
        assert_eq!(right.alpha, named("b0").unwrap());
        assert!(right
            .quotient
            .normalize()
            .same_line(&named("b2R").unwrap().normalize()));
    }

    #[test]
    fn factor_of_the_chains_matches_the_named_quotients() {
        let t2l = named("t2L").unwrap();
        let left = boundary_factor(&t2l, FactorSide::Left).unwrap();
        assert_eq!(left.alpha, named("b0").unwrap());
        assert_eq!(left.quotient, named("b2L").unwrap());
        let right = boundary_factor(&t2l, FactorSide::Right).unwrap();
        assert!(right.alpha.is_isomorphic(&named("b1").unwrap()));
        assert!(right.quotient.is_isomorphic(&named("b1").unwrap()));

        let t2r = named("t2R").unwrap();
        let right = boundary_factor(&t2r, FactorSide::Right).unwrap();
        assert_eq!(right.alpha, named("b0").unwrap());
        assert_eq!(right.quotient, named("b2R").unwrap());
        let left = boundary_factor(&t2r, FactorSide::Left).unwrap();
        assert!(left.alpha.is_isomorphic(&named("b1").unwrap()));
        assert!(left.quotient.is_isomorphic(&named("b1").unwrap()));
    }

    #[test]
    fn alpha_is_the_unique_maximal_normal_subgraph() {
        // Subset-enumeration oracle over every linear class in G_{n,3},
        // n <= 3: the reachability set is normal, and every normal subset
        // is contained in it.
        for n in 0..=3 {
            let set = enumerate(n, 3, GraphClassKind::Linear).unwrap();
            for entry in &set.classes {
                let g = &entry.graph;
                for side in [FactorSide::Left, FactorSide::Right] {
                    let fr = boundary_factor(g, side).unwrap();
                    let pair = side.pair(3);
                    let expected: Vec<usize> = (0..g.internal_count())
                        .filter(|&v| g.boundary_reach(v).iter().all(|b| pair.contains(b)))
                        .collect();
                    assert!(is_normal_subgraph(g, &expected, side), "{g}");
                    assert_eq!(fr.alpha.internal_count(), expected.len());
                    for bits in 0u32..(1 << g.internal_count()) {
                        let subset: Vec<usize> = (0..g.internal_count())
                            .filter(|v| bits & (1 << v) != 0)
                            .collect();
                        if is_normal_subgraph(g, &subset, side) {
                            assert!(
                                subset.iter().all(|v| expected.contains(v)),
                                "normal subset {subset:?} outside alpha in {g}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quotients_validate_and_reinsert() {
        // Re-inserting alpha into the quotient at the collapse position
        // recovers the graph with positive coefficient, except when the
        // quotient is itself a zero class: then the insertion sum pairs
        // each landing with its flipped relabeling and cancels exactly.
        for n in 0..=3 {
            let set = enumerate(n, 3, GraphClassKind::Linear).unwrap();
            for entry in &set.classes {
                for side in [FactorSide::Left, FactorSide::Right] {
                    let fr = boundary_factor(&entry.graph, side).unwrap();
                    assert!(fr.alpha.validate(GraphClassKind::Linear));
                    assert!(fr.quotient.validate(GraphClassKind::Linear));
                    let combo =
                        insert_at(&fr.quotient, side.position(), &fr.alpha).unwrap();
                    let c = combo.coefficient_of(&entry.graph);
                    let degenerate = fr.quotient.normalize().is_zero()
                        || fr.alpha.normalize().is_zero();
                    if degenerate {
                        assert_eq!(c, Coeff::new(0, 1), "{} {:?}", entry.graph, side);
                    } else {
                        assert!(c > Coeff::new(0, 1), "{} {:?}", entry.graph, side);
                    }
                }
            }
        }
    }

    #[test]
    fn path_lemma_holds_on_enumerated_two_boundary_classes() {
        for n in 0..=4 {
            let set = enumerate(n, 2, GraphClassKind::Linear).unwrap();
            for entry in &set.classes {
                for v in 0..entry.graph.internal_count() {
                    assert_eq!(
                        entry.graph.boundary_reach(v),
                        vec![0, 1],
                        "vertex {v} of {}",
                        entry.graph
                    );
                }
            }
        }
    }

    #[test]
    fn unique_factorization_has_no_violations_at_low_order() {
        for max_order in [0, 2] {
            let sweep = unique_factorization_sweep(max_order).unwrap();
            assert!(
                sweep.violations.is_empty(),
                "violations: {:?}",
                sweep.violations
            );
        }
        assert!(unique_factorization_sweep(2).unwrap().checked > 20);
    }

    #[test]
    fn orbit_report_examples() {
        // Two symmetric landings of the wedge pair.
        let report = insertion_orbit_report(
            &named("b1^2").unwrap(),
            1,
            &named("b0").unwrap(),
            &named("c2R").unwrap(),
        )
        .unwrap();
        assert_eq!(report.multiplicity, 2);
        assert_eq!(report.formula, Coeff::new(2, 1));
        assert!(report.agrees);

        let report = insertion_orbit_report(
            &named("b1").unwrap(),
            1,
            &named("b1").unwrap(),
            &named("t2R").unwrap(),
        )
        .unwrap();
        assert_eq!(report.multiplicity, 1);
        assert!(report.agrees);

        // Zero-coefficient query.
        let report = insertion_orbit_report(
            &named("b1").unwrap(),
            1,
            &named("b1").unwrap(),
            &gamma_square(1),
        )
        .unwrap();
        assert_eq!(report.multiplicity, 0);
        assert!(report.agrees);
    }

    #[test]
    fn orbit_report_constant_products() {
        // b1^(r+s) into b1^t landing on the wedge product: the count is the
        // binomial, which equals (r+s)! t! / (r! s! t!).
        for (r, s, t) in [(1, 1, 0), (2, 1, 1), (1, 2, 2)] {
            let outer = wedge_power(r + s);
            let inner = wedge_power(t);
            let target = gamma_product(r, s, t);
            let report = insertion_orbit_report(&outer, 1, &inner, &target).unwrap();
            assert_eq!(report.multiplicity, binomial(r + s, s), "{r},{s},{t}");
            assert!(report.agrees);
        }
    }

    fn wedge_power(k: usize) -> AdmissibleGraph {
        let legs = vec![[Target::Boundary(0), Target::Boundary(1)]; k];
        AdmissibleGraph::new(2, legs).unwrap()
    }

    fn gamma_product(r: usize, s: usize, t: usize) -> AdmissibleGraph {
        let mut legs = Vec::new();
        legs.extend(vec![[Target::Boundary(1), Target::Boundary(2)]; r]);
        legs.extend(vec![[Target::Boundary(0), Target::Boundary(2)]; s]);
        legs.extend(vec![[Target::Boundary(0), Target::Boundary(1)]; t]);
        AdmissibleGraph::new(3, legs).unwrap()
    }

    fn binomial(n: usize, k: usize) -> u64 {
        let mut result = 1u64;
        for i in 0..k {
            result = result * (n - i) as u64 / (i + 1) as u64;
        }
        result
    }

    #[test]
    fn orbit_sweep_is_clean_at_order_two() {
        let sweep = orbit_sweep(2).unwrap();
        assert!(sweep.violations.is_empty(), "{:?}", sweep.violations);
        assert!(sweep.checked > 30);
    }
}
