//! The shared graph text grammar.
//!
//! ```text
//! graph  := "G" INT "," INT ";" (vertex (";" vertex)*)?
//! vertex := "v" INT ":L->" target ",R->" target
//! target := "b" INT | "v" INT
//! ```
//!
//! The header carries the internal count and the boundary count, in that
//! order; `b1 = G1,2;v1:L->b1,R->b2`. Whitespace is insignificant. Vertex
//! and boundary indices are 1-based in the text and 0-based in memory.
//! Serialization applied to a canonical graph is the canonical string; the
//! parser accepts any well-formed labeling.

use crate::graph::{AdmissibleGraph, GraphError, Target};

/// Serializes a graph; the exact inverse of [`parse_graph`] on its image.
pub fn graph_string(g: &AdmissibleGraph) -> String {
    let mut out = format!("G{},{};", g.internal_count(), g.boundary_count());
    let vertex = |t: Target| match t {
        Target::Boundary(b) => format!("b{}", b + 1),
        Target::Internal(v) => format!("v{}", v + 1),
    };
    let parts: Vec<String> = g
        .legs()
        .iter()
        .enumerate()
        .map(|(v, pair)| {
            format!(
                "v{}:L->{},R->{}",
                v + 1,
                vertex(pair[0]),
                vertex(pair[1])
            )
        })
        .collect();
    out.push_str(&parts.join(";"));
    out
}

struct Cursor {
    // Characters with their positions in the original text, whitespace
    // dropped so errors still point into the input as written.
    chars: Vec<(usize, char)>,
    at: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            at: 0,
        }
    }

    fn position(&self) -> usize {
        self.chars
            .get(self.at)
            .map(|(p, _)| *p)
            .unwrap_or_else(|| self.chars.last().map(|(p, _)| p + 1).unwrap_or(0))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|(_, c)| *c)
    }

    fn error(&self, message: impl Into<String>) -> GraphError {
        GraphError::Parse {
            position: self.position(),
            message: message.into(),
        }
    }

    fn expect(&mut self, wanted: char) -> Result<(), GraphError> {
        match self.peek() {
            Some(c) if c == wanted => {
                self.at += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{wanted}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{wanted}`, found end of input"))),
        }
    }

    fn expect_str(&mut self, wanted: &str) -> Result<(), GraphError> {
        for c in wanted.chars() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn integer(&mut self) -> Result<usize, GraphError> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if self.at == start {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.at].iter().map(|(_, c)| *c).collect();
        digits
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn target(&mut self) -> Result<Target, GraphError> {
        match self.peek() {
            Some('b') => {
                self.at += 1;
                let i = self.integer()?;
                if i == 0 {
                    return Err(self.error("boundary indices are 1-based"));
                }
                Ok(Target::Boundary(i - 1))
            }
            Some('v') => {
                self.at += 1;
                let i = self.integer()?;
                if i == 0 {
                    return Err(self.error("vertex indices are 1-based"));
                }
                Ok(Target::Internal(i - 1))
            }
            _ => Err(self.error("expected a target `b<i>` or `v<j>`")),
        }
    }
}

/// Parses the grammar above. Syntax problems produce position-annotated
/// [`GraphError::Parse`]; targets out of the declared ranges produce
/// [`GraphError::MalformedTarget`], keeping validation failures apart from
/// syntax failures.
pub fn parse_graph(text: &str) -> Result<AdmissibleGraph, GraphError> {
    let mut cur = Cursor::new(text);
    cur.expect('G')?;
    let n = cur.integer()?;
    cur.expect(',')?;
    let m = cur.integer()?;
    if m == 0 {
        return Err(cur.error("boundary count must be positive"));
    }
    cur.expect(';')?;
    let mut legs = Vec::with_capacity(n);
    for v in 0..n {
        if v > 0 {
            cur.expect(';')?;
        }
        cur.expect('v')?;
        let idx = cur.integer()?;
        if idx != v + 1 {
            return Err(cur.error(format!("expected vertex v{}, found v{idx}", v + 1)));
        }
        cur.expect_str(":L->")?;
        let left = cur.target()?;
        cur.expect_str(",R->")?;
        let right = cur.target()?;
        legs.push([left, right]);
    }
    if cur.peek().is_some() {
        return Err(cur.error("trailing input after the last vertex"));
    }
    AdmissibleGraph::new(m, legs)
}
