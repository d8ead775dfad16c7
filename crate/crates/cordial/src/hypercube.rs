//! Oriented hypercubes under a fixed vertex and edge numbering.
//!
//! Vertex `v` of `Q_n` is the integer whose binary digit `i` is the
//! coordinate along axis `i`. Edges are numbered axis-major: for axis `i`
//! from 0 to n-1, for each vertex `u` with bit `i` clear in increasing
//! order, edge `{u, u ^ (1 << i)}`. Orientation bit 0 means the arc runs
//! low endpoint to high endpoint.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::labeling::{LabeledDigraph, LambdaTriple, VertexLabeling};

/// Hard upper bound on cube dimension. Keeps every shift in the edge and
/// vertex arithmetic inside `usize` range; anything near the bound is far
/// beyond allocatable scale anyway.
pub const MAX_DIMENSION: usize = 32;

/// Number of vertices of `Q_n`.
pub fn vertex_count(dimension: usize) -> usize {
    1 << dimension
}

/// Number of edges of `Q_n`, i.e. `n * 2^(n-1)`.
pub fn edge_count(dimension: usize) -> usize {
    dimension << (dimension - 1)
}

/// Endpoints `(low, high)` of edge `index` in the canonical order.
pub fn edge_endpoints(dimension: usize, index: usize) -> (usize, usize) {
    let per_axis = 1 << (dimension - 1);
    let axis = index / per_axis;
    let rank = index % per_axis;
    // low endpoint: insert a zero bit at position `axis` into `rank`
    let low = ((rank >> axis) << (axis + 1)) | (rank & ((1 << axis) - 1));
    (low, low | (1 << axis))
}

/// Canonical index of the edge along `axis` whose low endpoint is `low`.
pub fn edge_index(dimension: usize, axis: usize, low: usize) -> usize {
    let per_axis = 1 << (dimension - 1);
    let rank = ((low >> (axis + 1)) << axis) | (low & ((1 << axis) - 1));
    axis * per_axis + rank
}

/// All edges of `Q_n` in canonical order.
pub fn edge_list(dimension: usize) -> Vec<(usize, usize)> {
    (0..edge_count(dimension)).map(|e| edge_endpoints(dimension, e)).collect()
}

/// An orientation of `Q_n`: one bit per edge under the canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedHypercube {
    dimension: usize,
    bits: Vec<bool>,
}

impl OrientedHypercube {
    pub fn new(dimension: usize, bits: Vec<bool>) -> Result<Self> {
        if dimension == 0 || dimension > MAX_DIMENSION {
            return Err(Error::InvalidArgument(format!(
                "dimension must be in 1..={MAX_DIMENSION}, got {dimension}"
            )));
        }
        if bits.len() != edge_count(dimension) {
            return Err(Error::DimensionMismatch(format!(
                "Q_{dimension} has {} edges but {} orientation bits were given",
                edge_count(dimension),
                bits.len()
            )));
        }
        Ok(Self { dimension, bits })
    }

    /// The all-zero (every arc low-to-high) orientation.
    pub fn all_low_to_high(dimension: usize) -> Result<Self> {
        Self::new(dimension, vec![false; edge_count(dimension)])
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertex_count(&self) -> usize {
        vertex_count(self.dimension)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.len()
    }

    pub fn orientation_bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, edge: usize) -> bool {
        self.bits[edge]
    }

    /// Expansion to a digraph: arc `k` joins the endpoints of edge `k`,
    /// directed per orientation bit `k`.
    pub fn to_digraph(&self) -> Digraph {
        let arcs = self
            .bits
            .iter()
            .enumerate()
            .map(|(e, &rev)| {
                let (lo, hi) = edge_endpoints(self.dimension, e);
                if rev {
                    (hi, lo)
                } else {
                    (lo, hi)
                }
            })
            .collect();
        Digraph::new(self.vertex_count(), arcs).expect("hypercube expansion is a valid digraph")
    }

    /// Recognize a digraph as an oriented hypercube. The arc list may be in
    /// any order but must cover every `Q_n` edge exactly once.
    pub fn from_digraph(d: &Digraph) -> Result<Self> {
        let vc = d.vertex_count();
        if vc < 2 || !vc.is_power_of_two() {
            return Err(Error::Structure(format!(
                "vertex count {vc} is not a power of two at least 2"
            )));
        }
        let n = vc.trailing_zeros() as usize;
        if d.arc_count() != edge_count(n) {
            return Err(Error::Structure(format!(
                "Q_{n} has {} edges but the digraph has {} arcs",
                edge_count(n),
                d.arc_count()
            )));
        }
        let mut bits: Vec<Option<bool>> = vec![None; edge_count(n)];
        for &(t, h) in d.arcs() {
            let diff = t ^ h;
            if !diff.is_power_of_two() {
                return Err(Error::Structure(format!("arc ({t}, {h}) is not a hypercube edge")));
            }
            let axis = diff.trailing_zeros() as usize;
            let slot = &mut bits[edge_index(n, axis, t.min(h))];
            if slot.is_some() {
                return Err(Error::Structure(format!("edge {{{t}, {h}}} appears more than once")));
            }
            *slot = Some(t > h);
        }
        let bits = bits
            .into_iter()
            .map(|b| b.expect("arc count equals edge count and all edges are distinct"))
            .collect();
        Self::new(n, bits)
    }

    /// The orientation with every edge reversed.
    pub fn reversed(&self) -> Self {
        Self {
            dimension: self.dimension,
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }
}

/// An oriented hypercube together with a vertex labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledCube {
    cube: OrientedHypercube,
    labeling: VertexLabeling,
}

impl LabeledCube {
    pub fn new(cube: OrientedHypercube, labeling: VertexLabeling) -> Result<Self> {
        if labeling.len() != cube.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "labeling has {} bits but Q_{} has {} vertices",
                labeling.len(),
                cube.dimension(),
                cube.vertex_count()
            )));
        }
        Ok(Self { cube, labeling })
    }

    pub fn cube(&self) -> &OrientedHypercube {
        &self.cube
    }

    pub fn labeling(&self) -> &VertexLabeling {
        &self.labeling
    }

    pub fn dimension(&self) -> usize {
        self.cube.dimension()
    }

    pub fn to_labeled_digraph(&self) -> LabeledDigraph {
        LabeledDigraph::new(self.cube.to_digraph(), self.labeling.clone())
            .expect("lengths match by construction")
    }

    /// Recognize a labeled digraph as a labeled oriented hypercube.
    pub fn from_labeled_digraph(l: &LabeledDigraph) -> Result<Self> {
        Self::new(OrientedHypercube::from_digraph(l.graph())?, l.labeling().clone())
    }

    pub fn lambda(&self) -> LambdaTriple {
        self.to_labeled_digraph().lambda()
    }
}
