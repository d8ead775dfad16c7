//! The phi agreement-count calculus and cube-of-cubes assemblies: join
//! labeled cubes along vertex bijections, fix the inter-cube arcs whose
//! induced label is forced to 0, and orient the remaining free edges to
//! balance the lambda triple.

use std::collections::{BTreeMap, BTreeSet};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hypercube::{edge_index, edge_list, LabeledCube};
use crate::labeling::{LabeledDigraph, LambdaTriple, VertexLabeling};

/// A bijection between two equal-sized vertex sets, stored as the forward
/// image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexBijection {
    forward: Vec<usize>,
}

impl VertexBijection {
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut hit = vec![false; n];
        for &t in &forward {
            if t >= n || hit[t] {
                return Err(Error::InvalidArgument(format!(
                    "{forward:?} is not a bijection onto 0..{n}"
                )));
            }
            hit[t] = true;
        }
        Ok(Self { forward })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            forward: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn map(&self, v: usize) -> usize {
        self.forward[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Self {
        let mut back = vec![0; self.forward.len()];
        for (v, &t) in self.forward.iter().enumerate() {
            back[t] = v;
        }
        Self { forward: back }
    }
}

/// Number of vertices whose labels agree across the bijection:
/// `|{v : f1(v) = f2(b(v))}|`.
pub fn phi(l1: &LabeledDigraph, l2: &LabeledDigraph, b: &VertexBijection) -> Result<usize> {
    if l1.vertex_count() != l2.vertex_count() || b.len() != l1.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "phi over vertex sets of sizes {}, {} with a bijection of length {}",
            l1.vertex_count(),
            l2.vertex_count(),
            b.len()
        )));
    }
    Ok((0..l1.vertex_count())
        .filter(|&v| l1.labeling().label(v) == l2.labeling().label(b.map(v)))
        .count())
}

/// A named labeled cube in an ordered set, tagged with the base cube it is
/// derived from (complements share their base's bijections).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaEntry {
    pub name: String,
    pub base: String,
    pub cube: LabeledDigraph,
}

impl GammaEntry {
    pub fn new(name: &str, base: &str, cube: LabeledDigraph) -> Self {
        Self {
            name: name.to_string(),
            base: base.to_string(),
            cube,
        }
    }
}

/// Bijections keyed by unordered base-name pair.
pub type BijectionTable = BTreeMap<(String, String), VertexBijection>;

/// The full phi matrix over an ordered set of labeled cubes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiMatrix {
    pub names: Vec<String>,
    pub values: Vec<Vec<usize>>,
}

fn lookup_bijection(table: &BijectionTable, a: &str, b: &str) -> Result<VertexBijection> {
    if let Some(bij) = table.get(&(a.to_string(), b.to_string())) {
        return Ok(bij.clone());
    }
    if let Some(bij) = table.get(&(b.to_string(), a.to_string())) {
        return Ok(bij.inverse());
    }
    Err(Error::Configuration(format!(
        "no bijection registered for the pair ({a}, {b})"
    )))
}

/// Evaluate phi for every ordered pair of the given cubes, using each
/// pair's registered base bijection.
pub fn phi_table(entries: &[GammaEntry], table: &BijectionTable) -> Result<PhiMatrix> {
    let mut values = Vec::with_capacity(entries.len());
    for row in entries {
        let mut line = Vec::with_capacity(entries.len());
        for col in entries {
            let bij = lookup_bijection(table, &row.base, &col.base)?;
            line.push(phi(&row.cube, &col.cube, &bij)?);
        }
        values.push(line);
    }
    Ok(PhiMatrix {
        names: entries.iter().map(|e| e.name.clone()).collect(),
        values,
    })
}

/// A slot of a cube arrangement: which registered cube sits at this
/// meta-vertex, and whether its labeling is complemented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotRef {
    pub cube: String,
    pub complemented: bool,
}

/// A meta-arc of a cube arrangement: drawn direction plus the name of the
/// vertex bijection along which the inter-cube edges are drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaArcSpec {
    pub reversed: bool,
    pub bijection: String,
}

/// A meta-hypercube whose vertices are labeled cubes and whose meta-arcs
/// carry vertex bijections. `meta_arcs[e]` describes meta-edge `e` of
/// `Q_meta_dimension` under the canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeArrangement {
    pub meta_dimension: usize,
    pub slots: Vec<SlotRef>,
    pub meta_arcs: Vec<MetaArcSpec>,
    pub bijection_table: BTreeMap<String, VertexBijection>,
    pub cubes: BTreeMap<String, LabeledDigraph>,
}

impl CubeArrangement {
    /// The common slot-cube dimension, after checking every invariant.
    pub fn validate(&self) -> Result<usize> {
        let j = self.meta_dimension;
        if j == 0 || j > 16 {
            return Err(Error::InvalidArgument(format!(
                "meta dimension must be in 1..=16, got {j}"
            )));
        }
        if self.slots.len() != 1 << j {
            return Err(Error::Structure(format!(
                "meta-cube Q_{j} needs {} slots, got {}",
                1usize << j,
                self.slots.len()
            )));
        }
        let expected_arcs = j << (j - 1);
        if self.meta_arcs.len() != expected_arcs {
            return Err(Error::Structure(format!(
                "meta-cube Q_{j} has {expected_arcs} edges, got {} meta-arcs",
                self.meta_arcs.len()
            )));
        }
        let mut dim = None;
        for slot in &self.slots {
            let cube = self
                .cubes
                .get(&slot.cube)
                .ok_or_else(|| Error::Configuration(format!("slot cube {:?} is not registered", slot.cube)))?;
            let k = LabeledCube::from_labeled_digraph(cube)?.dimension();
            match dim {
                None => dim = Some(k),
                Some(d) if d != k => {
                    return Err(Error::Structure(format!(
                        "slot cubes have mixed dimensions {d} and {k}"
                    )))
                }
                _ => {}
            }
        }
        let k = dim.expect("meta dimension is positive, so there is at least one slot");
        for arc in &self.meta_arcs {
            let bij = self
                .bijection_table
                .get(&arc.bijection)
                .ok_or_else(|| Error::Configuration(format!("bijection {:?} is not registered", arc.bijection)))?;
            if bij.len() != 1 << k {
                return Err(Error::DimensionMismatch(format!(
                    "bijection {:?} has length {}, slot cubes have {} vertices",
                    arc.bijection,
                    bij.len(),
                    1usize << k
                )));
            }
        }
        Ok(k)
    }

    /// The labeled cube occupying a slot, with the complement applied.
    pub fn slot_cube(&self, index: usize) -> Result<LabeledDigraph> {
        let slot = &self.slots[index];
        let cube = self
            .cubes
            .get(&slot.cube)
            .ok_or_else(|| Error::Configuration(format!("slot cube {:?} is not registered", slot.cube)))?;
        Ok(if slot.complemented { cube.complemented() } else { cube.clone() })
    }
}

/// A labeled cube whose arcs are split into fixed arcs (orientation
/// decided) and free edges (both endpoint labels differ, so either
/// orientation induces a nonzero label).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrientedCube {
    dimension: usize,
    labeling: VertexLabeling,
    fixed_arcs: Vec<(usize, usize)>,
    free_edges: Vec<(usize, usize)>,
    inter_slot_zero_count: usize,
}

impl PartialOrientedCube {
    /// Build and validate: the fixed arcs plus free edges must cover the
    /// standard `Q_dimension` edge set exactly once, and every free edge
    /// must join oppositely labeled vertices. Free edges are stored in
    /// canonical edge order.
    pub fn new(
        dimension: usize,
        labeling: VertexLabeling,
        fixed_arcs: Vec<(usize, usize)>,
        free_edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        Self::with_zero_count(dimension, labeling, fixed_arcs, free_edges, 0)
    }

    fn with_zero_count(
        dimension: usize,
        labeling: VertexLabeling,
        fixed_arcs: Vec<(usize, usize)>,
        mut free_edges: Vec<(usize, usize)>,
        inter_slot_zero_count: usize,
    ) -> Result<Self> {
        if dimension == 0 || dimension > crate::hypercube::MAX_DIMENSION {
            return Err(Error::InvalidArgument(format!(
                "dimension must be in 1..={}, got {dimension}",
                crate::hypercube::MAX_DIMENSION
            )));
        }
        if labeling.len() != 1 << dimension {
            return Err(Error::DimensionMismatch(format!(
                "labeling has {} bits but Q_{dimension} has {} vertices",
                labeling.len(),
                1usize << dimension
            )));
        }
        for &(u, v) in &free_edges {
            if u >= labeling.len() || v >= labeling.len() {
                return Err(Error::Structure(format!("free edge ({u}, {v}) out of range")));
            }
            if labeling.label(u) == labeling.label(v) {
                return Err(Error::Structure(format!(
                    "free edge ({u}, {v}) joins equally labeled vertices"
                )));
            }
        }
        let mut covered = BTreeSet::new();
        for &(u, v) in fixed_arcs.iter().chain(free_edges.iter()) {
            if u == v || !covered.insert((u.min(v), u.max(v))) {
                return Err(Error::Structure(format!(
                    "edge {{{u}, {v}}} is degenerate or covered twice"
                )));
            }
        }
        let expected: BTreeSet<(usize, usize)> = edge_list(dimension).into_iter().collect();
        if covered != expected {
            return Err(Error::Structure(format!(
                "arcs and free edges do not form the edge set of Q_{dimension}"
            )));
        }
        free_edges.sort_by_key(|&(u, v)| {
            let axis = (u ^ v).trailing_zeros() as usize;
            edge_index(dimension, axis, u.min(v))
        });
        Ok(Self {
            dimension,
            labeling,
            fixed_arcs,
            free_edges,
            inter_slot_zero_count,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn labeling(&self) -> &VertexLabeling {
        &self.labeling
    }

    pub fn fixed_arcs(&self) -> &[(usize, usize)] {
        &self.fixed_arcs
    }

    /// Free edges as `(low, high)` pairs in canonical edge order.
    pub fn free_edges(&self) -> &[(usize, usize)] {
        &self.free_edges
    }

    pub fn free_edge_count(&self) -> usize {
        self.free_edges.len()
    }

    /// Fixed inter-slot arcs labeled 0 (reported by `assemble`; 0 for
    /// hand-built partial cubes).
    pub fn inter_slot_zero_count(&self) -> usize {
        self.inter_slot_zero_count
    }

    /// Lambda over the fixed arcs only.
    pub fn fixed_lambda(&self) -> LambdaTriple {
        let mut t = LambdaTriple::new(0, 0, 0);
        for &(tail, head) in &self.fixed_arcs {
            match self.labeling.label(head) as i8 - self.labeling.label(tail) as i8 {
                1 => t.alpha += 1,
                -1 => t.beta += 1,
                _ => t.gamma += 1,
            }
        }
        t
    }
}

/// Join the arrangement's slot cubes into one partially oriented cube of
/// dimension `meta_dimension + k`. Big-cube vertex `m * 2^k + v` is local
/// vertex `v` of the slot at meta-vertex `m`. Intra-slot arcs keep their
/// slot orientations; inter-slot edges joining equal-labeled vertices
/// become fixed 0-labeled arcs oriented per the meta-arc direction; the
/// rest become free edges.
pub fn assemble(arr: &CubeArrangement) -> Result<PartialOrientedCube> {
    let k = arr.validate()?;
    let j = arr.meta_dimension;
    let base = 1usize << k;
    let slots: Vec<LabeledDigraph> = (0..arr.slots.len())
        .map(|i| arr.slot_cube(i))
        .collect::<Result<_>>()?;

    let mut label_bits = Vec::with_capacity(base << j);
    for slot in &slots {
        label_bits.extend_from_slice(slot.labeling().bits());
    }
    let labeling = VertexLabeling::new(label_bits);

    let mut fixed_arcs = Vec::new();
    for (m, slot) in slots.iter().enumerate() {
        let offset = m * base;
        fixed_arcs.extend(slot.graph().arcs().iter().map(|&(t, h)| (offset + t, offset + h)));
    }

    let mut free_edges = Vec::new();
    let mut inter_zeros = 0;
    for (e, (meta_low, meta_high)) in edge_list(j).into_iter().enumerate() {
        let spec = &arr.meta_arcs[e];
        let (from, to) = if spec.reversed {
            (meta_high, meta_low)
        } else {
            (meta_low, meta_high)
        };
        let bij = &arr.bijection_table[&spec.bijection];
        for v in 0..base {
            let tail = from * base + v;
            let head = to * base + bij.map(v);
            if labeling.label(tail) == labeling.label(head) {
                fixed_arcs.push((tail, head));
                inter_zeros += 1;
            } else {
                free_edges.push((tail.min(head), tail.max(head)));
            }
        }
    }

    PartialOrientedCube::with_zero_count(j + k, labeling, fixed_arcs, free_edges, inter_zeros)
}

/// Orient every free edge so the final triple has all pairwise differences
/// at most 1. Free edges are processed in canonical edge order and oriented
/// to induce +1 until the +1 quota is met, then to induce -1. If no quota
/// balances the triple, the error carries the closest achievable one.
pub fn balance_free_arcs(p: &PartialOrientedCube) -> Result<LabeledDigraph> {
    let fixed = p.fixed_lambda();
    let free = p.free_edge_count();

    let mut best: Option<(usize, usize, LambdaTriple)> = None;
    for plus in 0..=free {
        let candidate = LambdaTriple::new(fixed.alpha + plus, fixed.beta + free - plus, fixed.gamma);
        let key = (candidate.spread(), plus);
        if best.is_none() || key < (best.as_ref().unwrap().0, best.as_ref().unwrap().1) {
            best = Some((candidate.spread(), plus, candidate));
        }
    }
    let (spread, quota, triple) = best.expect("at least one quota exists");
    if spread > 1 {
        return Err(Error::Infeasible { best: triple });
    }

    let mut arcs = p.fixed_arcs().to_vec();
    for (i, &(low, high)) in p.free_edges().iter().enumerate() {
        let zero_end = if p.labeling().label(low) == 0 { low } else { high };
        let one_end = low + high - zero_end;
        if i < quota {
            arcs.push((zero_end, one_end)); // induced label +1
        } else {
            arcs.push((one_end, zero_end)); // induced label -1
        }
    }
    let graph = Digraph::new(p.labeling().len(), arcs)?;
    LabeledDigraph::new(graph, p.labeling().clone())
}
