//! Directed and undirected graph values.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A finite directed graph: a vertex count and an ordered arc list.
///
/// Invariants enforced at construction: no self-loops, no duplicate arcs,
/// every endpoint below `vertex_count`. Digons (a pair `(u, v)`, `(v, u)`)
/// are allowed here; operations restricted to digon-free digraphs check
/// [`Digraph::is_digon_free`] themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(tail, head) in &arcs {
            if tail == head {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {tail}")));
            }
            if tail >= vertex_count || head >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "arc ({tail}, {head}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if !seen.insert((tail, head)) {
                return Err(Error::InvalidGraph(format!("duplicate arc ({tail}, {head})")));
            }
        }
        Ok(Self { vertex_count, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// The arc-reversed digraph: arc `(u, v)` becomes `(v, u)`, per-index.
    pub fn reverse(&self) -> Self {
        Self {
            vertex_count: self.vertex_count,
            arcs: self.arcs.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }

    /// True iff no pair `(u, v)`, `(v, u)` is simultaneously present.
    pub fn is_digon_free(&self) -> bool {
        let present: HashSet<(usize, usize)> = self.arcs.iter().copied().collect();
        self.arcs.iter().all(|&(t, h)| !present.contains(&(h, t)))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, h)| h == v).count()
    }

    /// Total degree (in + out) of a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.in_degree(v) + self.out_degree(v)
    }
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The induced subgraph on the non-isolated vertices, ids remapped to
    /// `0..m` preserving order.
    pub fn without_isolated_vertices(&self) -> Self {
        let kept: Vec<usize> = (0..self.vertex_count).filter(|&v| self.degree(v) > 0).collect();
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        Self {
            vertex_count: kept.len(),
            edges: self.edges.iter().map(|&(u, v)| (index[u], index[v])).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_rejects_self_loop() {
        assert!(matches!(Digraph::new(2, vec![(1, 1)]), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn constructor_rejects_duplicate_arc() {
        assert!(matches!(
            Digraph::new(3, vec![(0, 1), (0, 1)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn constructor_rejects_out_of_range_endpoint() {
        assert!(matches!(Digraph::new(2, vec![(0, 2)]), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn reverse_swaps_single_arc() {
        let d = Digraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(d.reverse().arcs(), &[(1, 0)]);
    }

    #[test]
    fn reverse_is_an_involution() {
        let d = Digraph::new(4, vec![(0, 1), (2, 3), (3, 1), (1, 2)]).unwrap();
        assert_eq!(d.reverse().reverse(), d);
    }

    #[test]
    fn digon_detected() {
        let d = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert!(!d.is_digon_free());
    }

    #[test]
    fn empty_arc_list_is_digon_free() {
        let d = Digraph::new(3, vec![]).unwrap();
        assert!(d.is_digon_free());
    }

    #[test]
    fn isolated_vertex_reduction() {
        let g = UndirectedGraph::new(7, vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        let reduced = g.without_isolated_vertices();
        assert_eq!(reduced.vertex_count(), 6);
        assert_eq!(reduced.edges(), &[(0, 1), (2, 3), (4, 5)]);
    }
}
