//! Finite formal sums of signed classes with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::graph::{AdmissibleGraph, GraphError, SignedClass};
use crate::grammar::graph_string;

/// Exact rational coefficient.
pub type Coeff = Ratio<i64>;

/// A linear combination of orientation classes. Keys are canonical class
/// representatives; zero classes and zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphCombination {
    terms: BTreeMap<AdmissibleGraph, Coeff>,
}

impl GraphCombination {
    pub fn new() -> Self {
        Self::default()
    }

    /// The combination `c * g`, for any labeled graph `g`.
    pub fn from_graph(g: &AdmissibleGraph, c: Coeff) -> Self {
        let mut result = Self::new();
        result.add_graph(g, c);
        result
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AdmissibleGraph, &Coeff)> {
        self.terms.iter()
    }

    /// Adds `c * g`, folding the sign of `g`'s normalization into the
    /// coefficient. Zero classes are dropped.
    pub fn add_graph(&mut self, g: &AdmissibleGraph, c: Coeff) {
        self.add_class(g.normalize(), c);
    }

    pub fn add_class(&mut self, class: SignedClass, c: Coeff) {
        let SignedClass::Class {
            sign,
            representative,
        } = class
        else {
            return;
        };
        let signed = if sign < 0 { -c } else { c };
        if signed.is_zero() {
            return;
        }
        match self.terms.entry(representative) {
            Entry::Vacant(slot) => {
                slot.insert(signed);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += signed;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (g, c) in &other.terms {
            self.add_graph(g, *c);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: Coeff) {
        if factor.is_zero() {
            return;
        }
        for (g, c) in &other.terms {
            self.add_graph(g, *c * factor);
        }
    }

    pub fn scaled(&self, factor: Coeff) -> Self {
        let mut result = Self::new();
        result.add_scaled(self, factor);
        result
    }

    /// The coefficient of the class of `g`, sign-adjusted; zero if `g` is
    /// absent or its class vanishes.
    pub fn coefficient_of(&self, g: &AdmissibleGraph) -> Coeff {
        match g.normalize() {
            SignedClass::Zero => Coeff::zero(),
            SignedClass::Class {
                sign,
                representative,
            } => {
                let c = self
                    .terms
                    .get(&representative)
                    .copied()
                    .unwrap_or_else(Coeff::zero);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Boundary counts present among the terms; combinations mixing counts
    /// cannot be inserted as a unit.
    pub fn uniform_boundary_count(&self) -> Result<Option<usize>, GraphError> {
        let mut result = None;
        for g in self.terms.keys() {
            match result {
                None => result = Some(g.boundary_count()),
                Some(m) if m == g.boundary_count() => {}
                Some(_) => return Err(GraphError::MixedBoundary),
            }
        }
        Ok(result)
    }

    /// JSON array of `{"coeff": "p/q", "graph": "<canonical string>"}` in
    /// canonical-string order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries: Vec<(String, Coeff)> = self
            .terms
            .iter()
            .map(|(g, c)| (graph_string(g), *c))
            .collect();
        entries.sort();
        serde_json::Value::Array(
            entries
                .into_iter()
                .map(|(graph, coeff)| {
                    serde_json::json!({
                        "coeff": coeff.to_string(),
                        "graph": graph,
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for GraphCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut entries: Vec<(String, Coeff)> = self
            .terms
            .iter()
            .map(|(g, c)| (graph_string(g), *c))
            .collect();
        entries.sort();
        for (i, (graph, coeff)) in entries.iter().enumerate() {
            if i > 0 {
                f.write_str(if coeff.is_negative() { " - " } else { " + " })?;
            } else if coeff.is_negative() {
                f.write_str("-")?;
            }
            let magnitude = if coeff.is_negative() { -coeff } else { *coeff };
            if magnitude.is_one() {
                write!(f, "{graph}")?;
            } else {
                write!(f, "{magnitude}*{graph}")?;
            }
        }
        Ok(())
    }
}

impl Add for &GraphCombination {
    type Output = GraphCombination;

    fn add(self, rhs: &GraphCombination) -> GraphCombination {
        let mut result = self.clone();
        result.add_assign(rhs);
        result
    }
}

impl Sub for &GraphCombination {
    type Output = GraphCombination;

    fn sub(self, rhs: &GraphCombination) -> GraphCombination {
        let mut result = self.clone();
        result.add_scaled(rhs, -Coeff::one());
        result
    }
}

impl Neg for &GraphCombination {
    type Output = GraphCombination;

    fn neg(self) -> GraphCombination {
        self.scaled(-Coeff::one())
    }
}
