//! Vertex labelings, induced arc labelings, and the lambda triple.

use std::fmt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A `{0,1}` assignment to vertices, stored dense (one bit per vertex).
///
/// Friendliness is a predicate, not an invariant: non-friendly labelings
/// occur as intermediate search states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    bits: Vec<bool>,
}

impl VertexLabeling {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// All-zero labeling on `n` vertices.
    pub fn zeros(n: usize) -> Self {
        Self { bits: vec![false; n] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Label of vertex `v` as 0 or 1.
    pub fn label(&self, v: usize) -> u8 {
        u8::from(self.bits[v])
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn zeros_count(&self) -> usize {
        self.len() - self.ones()
    }

    /// The complementary labeling: every bit flipped.
    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    /// True iff the 0-count and 1-count differ by at most 1.
    pub fn is_friendly(&self) -> bool {
        self.zeros_count().abs_diff(self.ones()) <= 1
    }
}

/// An induced `{-1, 0, +1}` labeling of a digraph's arcs, index-aligned with
/// the host arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeling {
    labels: Vec<i8>,
}

impl ArcLabeling {
    pub fn new(labels: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&x| !(-1..=1).contains(&x)) {
            return Err(Error::InvalidArgument(format!("arc label {bad} outside {{-1, 0, 1}}")));
        }
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[i8] {
        &self.labels
    }

    /// Counts of +1, -1, 0 labels.
    pub fn lambda(&self) -> LambdaTriple {
        let mut t = LambdaTriple::new(0, 0, 0);
        for &x in &self.labels {
            match x {
                1 => t.alpha += 1,
                -1 => t.beta += 1,
                _ => t.gamma += 1,
            }
        }
        t
    }
}

/// Counts `(alpha, beta, gamma)` of arcs labeled +1, -1, 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LambdaTriple {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl LambdaTriple {
    pub fn new(alpha: usize, beta: usize, gamma: usize) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn total(&self) -> usize {
        self.alpha + self.beta + self.gamma
    }

    /// The triple with alpha and beta exchanged (reversal/complement image).
    pub fn swapped(&self) -> Self {
        Self::new(self.beta, self.alpha, self.gamma)
    }

    /// Largest pairwise difference among the three counts.
    pub fn spread(&self) -> usize {
        let hi = self.alpha.max(self.beta).max(self.gamma);
        let lo = self.alpha.min(self.beta).min(self.gamma);
        hi - lo
    }

    /// True iff all pairwise differences are at most 1.
    pub fn is_balanced(&self) -> bool {
        self.spread() <= 1
    }

    /// The three counts in sorted order, for multiset comparisons.
    pub fn sorted(&self) -> [usize; 3] {
        let mut v = [self.alpha, self.beta, self.gamma];
        v.sort_unstable();
        v
    }
}

impl fmt::Display for LambdaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.alpha, self.beta, self.gamma)
    }
}

fn check_lengths(d: &Digraph, f: &VertexLabeling) -> Result<()> {
    if d.vertex_count() != f.len() {
        return Err(Error::DimensionMismatch(format!(
            "labeling has {} bits but the digraph has {} vertices",
            f.len(),
            d.vertex_count()
        )));
    }
    Ok(())
}

/// The induced arc labeling: arc `(u, v)` gets `f(v) - f(u)`.
pub fn induce_arc_labeling(d: &Digraph, f: &VertexLabeling) -> Result<ArcLabeling> {
    check_lengths(d, f)?;
    let labels = d
        .arcs()
        .iter()
        .map(|&(t, h)| f.label(h) as i8 - f.label(t) as i8)
        .collect();
    ArcLabeling::new(labels)
}

/// Counts of +1/-1/0 in the induced arc labeling.
pub fn lambda(d: &Digraph, f: &VertexLabeling) -> Result<LambdaTriple> {
    check_lengths(d, f)?;
    let mut t = LambdaTriple::new(0, 0, 0);
    for &(tail, head) in d.arcs() {
        match f.label(head) as i8 - f.label(tail) as i8 {
            1 => t.alpha += 1,
            -1 => t.beta += 1,
            _ => t.gamma += 1,
        }
    }
    Ok(t)
}

/// True iff `f` is friendly and the induced arc label counts have all
/// pairwise differences at most 1.
pub fn is_23_cordial_pair(d: &Digraph, f: &VertexLabeling) -> Result<bool> {
    Ok(f.is_friendly() && lambda(d, f)?.is_balanced())
}

/// A digraph together with a vertex labeling of matching length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    graph: Digraph,
    labeling: VertexLabeling,
}

impl LabeledDigraph {
    pub fn new(graph: Digraph, labeling: VertexLabeling) -> Result<Self> {
        if graph.vertex_count() != labeling.len() {
            return Err(Error::DimensionMismatch(format!(
                "labeling has {} bits but the digraph has {} vertices",
                labeling.len(),
                graph.vertex_count()
            )));
        }
        Ok(Self { graph, labeling })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn labeling(&self) -> &VertexLabeling {
        &self.labeling
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn lambda(&self) -> LambdaTriple {
        lambda(&self.graph, &self.labeling).expect("lengths match by construction")
    }

    pub fn arc_labels(&self) -> ArcLabeling {
        induce_arc_labeling(&self.graph, &self.labeling).expect("lengths match by construction")
    }

    pub fn is_23_cordial(&self) -> bool {
        self.labeling.is_friendly() && self.lambda().is_balanced()
    }

    /// Same graph, complemented labeling.
    pub fn complemented(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            labeling: self.labeling.complement(),
        }
    }

    /// Reversed graph, same labeling.
    pub fn reversed(&self) -> Self {
        Self {
            graph: self.graph.reverse(),
            labeling: self.labeling.clone(),
        }
    }
}
