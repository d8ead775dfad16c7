//! Serialization formats and exports.
//!
//! Two JSON document shapes describe labeled graphs:
//!
//! * expanded form, `{"vertices": [{"id": 0, "label": 1}, ...],
//!   "arcs": [[tail, head], ...]}` — preserves arc order exactly;
//! * compact cube form, `{"dim": n, "orientation": "<hex>",
//!   "labels": "<hex>"}` — orientation bits over the canonical edge order,
//!   label bits over vertex ids.
//!
//! Hex strings read as one number whose bit `k` is vector entry `k`
//! (most significant digit first, fixed width `ceil(len/4)`).
//! Arrangement documents mirror [`CubeArrangement`] field for field, with
//! bijections inlined as permutation arrays and slot cubes either inlined
//! or named after a fixture cube.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::compose::{CubeArrangement, MetaArcSpec, SlotRef, VertexBijection};
use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::hypercube::{LabeledCube, OrientedHypercube};
use crate::labeling::{LabeledDigraph, VertexLabeling};
use crate::search::ClassificationReport;

/// Render a bit vector as fixed-width hex, most significant digit first.
pub fn bits_to_hex(bits: &[bool]) -> String {
    let digits = bits.len().div_ceil(4).max(1);
    let mut out = String::with_capacity(digits);
    for d in (0..digits).rev() {
        let mut nibble = 0u8;
        for i in 0..4 {
            let k = 4 * d + i;
            if k < bits.len() && bits[k] {
                nibble |= 1 << i;
            }
        }
        out.push(char::from_digit(nibble as u32, 16).expect("nibble is below 16"));
    }
    out
}

/// Parse fixed-width hex back into exactly `len` bits.
pub fn hex_to_bits(s: &str, len: usize) -> Result<Vec<bool>> {
    let digits = len.div_ceil(4).max(1);
    if s.len() != digits {
        return Err(Error::Parse(format!(
            "hex field {s:?} has {} digits, expected {digits} for {len} bits",
            s.len()
        )));
    }
    let mut bits = vec![false; len];
    for (pos, c) in s.chars().enumerate() {
        let nibble = c
            .to_digit(16)
            .ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?} in {s:?}")))?
            as usize;
        let d = digits - 1 - pos;
        for i in 0..4 {
            let k = 4 * d + i;
            if nibble >> i & 1 == 1 {
                if k >= len {
                    return Err(Error::Parse(format!(
                        "hex field {s:?} sets bit {k}, beyond the {len}-bit vector"
                    )));
                }
                bits[k] = true;
            }
        }
    }
    Ok(bits)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: usize,
    pub label: u8,
}

/// Expanded labeled-digraph document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LabeledDigraphDoc {
    pub vertices: Vec<VertexDoc>,
    pub arcs: Vec<[usize; 2]>,
}

impl LabeledDigraphDoc {
    pub fn from_labeled(l: &LabeledDigraph) -> Self {
        Self {
            vertices: (0..l.vertex_count())
                .map(|v| VertexDoc {
                    id: v,
                    label: l.labeling().label(v),
                })
                .collect(),
            arcs: l.graph().arcs().iter().map(|&(t, h)| [t, h]).collect(),
        }
    }

    pub fn into_labeled(self) -> Result<LabeledDigraph> {
        let n = self.vertices.len();
        let mut labels = vec![None; n];
        for v in &self.vertices {
            if v.id >= n {
                return Err(Error::Parse(format!("vertex id {} outside 0..{n}", v.id)));
            }
            if v.label > 1 {
                return Err(Error::Parse(format!("vertex {} has label {}, expected 0 or 1", v.id, v.label)));
            }
            if labels[v.id].replace(v.label != 0).is_some() {
                return Err(Error::Parse(format!("vertex id {} listed twice", v.id)));
            }
        }
        let bits = labels
            .into_iter()
            .map(|b| b.expect("ids are distinct and in range, so all slots are filled"))
            .collect();
        let graph = Digraph::new(n, self.arcs.iter().map(|&[t, h]| (t, h)).collect())
            .map_err(|e| Error::Parse(e.to_string()))?;
        LabeledDigraph::new(graph, VertexLabeling::new(bits))
    }
}

/// Compact cube document. `labels` is absent for orientation-only cubes
/// (classification representatives).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CubeDoc {
    pub dim: usize,
    pub orientation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<String>,
}

impl CubeDoc {
    pub fn from_cube(h: &OrientedHypercube) -> Self {
        Self {
            dim: h.dimension(),
            orientation: bits_to_hex(h.orientation_bits()),
            labels: None,
        }
    }

    pub fn from_labeled_cube(l: &LabeledCube) -> Self {
        Self {
            dim: l.dimension(),
            orientation: bits_to_hex(l.cube().orientation_bits()),
            labels: Some(bits_to_hex(l.labeling().bits())),
        }
    }

    pub fn into_cube(&self) -> Result<OrientedHypercube> {
        if self.dim == 0 || self.dim > crate::hypercube::MAX_DIMENSION {
            return Err(Error::Parse(format!(
                "dim must be in 1..={}, got {}",
                crate::hypercube::MAX_DIMENSION,
                self.dim
            )));
        }
        let bits = hex_to_bits(&self.orientation, crate::hypercube::edge_count(self.dim))?;
        OrientedHypercube::new(self.dim, bits)
    }

    pub fn into_labeled_cube(&self) -> Result<LabeledCube> {
        let cube = self.into_cube()?;
        let labels = self
            .labels
            .as_ref()
            .ok_or_else(|| Error::Parse("cube document carries no labels".into()))?;
        let bits = hex_to_bits(labels, cube.vertex_count())?;
        LabeledCube::new(cube, VertexLabeling::new(bits))
    }
}

/// Undirected graph document for orientability queries.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct UndirectedGraphDoc {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
}

impl UndirectedGraphDoc {
    pub fn from_graph(g: &UndirectedGraph) -> Self {
        Self {
            vertex_count: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn into_graph(self) -> Result<UndirectedGraph> {
        UndirectedGraph::new(
            self.vertex_count,
            self.edges.iter().map(|&[u, v]| (u, v)).collect(),
        )
        .map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SlotDoc {
    pub cube: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complemented: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MetaArcDoc {
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub reversed: bool,
    pub bijection: String,
}

/// Arrangement document: slots, meta-arcs in canonical meta-edge order,
/// bijections as permutation arrays, slot cubes inline or by fixture name.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    pub meta_dimension: usize,
    pub slots: Vec<SlotDoc>,
    pub meta_arcs: Vec<MetaArcDoc>,
    #[serde(default)]
    pub bijection_table: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub cubes: BTreeMap<String, LabeledDigraphDoc>,
}

impl ArrangementDoc {
    pub fn from_arrangement(a: &CubeArrangement) -> Self {
        Self {
            meta_dimension: a.meta_dimension,
            slots: a
                .slots
                .iter()
                .map(|s| SlotDoc {
                    cube: s.cube.clone(),
                    complemented: s.complemented,
                })
                .collect(),
            meta_arcs: a
                .meta_arcs
                .iter()
                .map(|m| MetaArcDoc {
                    reversed: m.reversed,
                    bijection: m.bijection.clone(),
                })
                .collect(),
            bijection_table: a
                .bijection_table
                .iter()
                .map(|(name, b)| (name.clone(), b.as_slice().to_vec()))
                .collect(),
            cubes: a
                .cubes
                .iter()
                .map(|(name, c)| (name.clone(), LabeledDigraphDoc::from_labeled(c)))
                .collect(),
        }
    }

    /// Resolve into a [`CubeArrangement`]. Slot cubes not inlined are
    /// looked up among the fixture cubes; a bijection named `identity`
    /// that is not inlined is materialized at the slot-cube size, and
    /// other missing bijection names fall back to the fixture table.
    pub fn into_arrangement(self) -> Result<CubeArrangement> {
        let mut cubes: BTreeMap<String, LabeledDigraph> = BTreeMap::new();
        for (name, doc) in self.cubes {
            cubes.insert(name, doc.into_labeled()?);
        }
        for slot in &self.slots {
            if !cubes.contains_key(&slot.cube) {
                let fixture = fixtures::cube(&slot.cube).ok_or_else(|| {
                    Error::Parse(format!(
                        "slot cube {:?} is neither inlined nor a fixture cube",
                        slot.cube
                    ))
                })?;
                cubes.insert(slot.cube.clone(), fixture);
            }
        }
        let slot_vertices = self
            .slots
            .first()
            .and_then(|s| cubes.get(&s.cube))
            .map(|c| c.vertex_count())
            .unwrap_or(0);
        let mut bijections: BTreeMap<String, VertexBijection> = BTreeMap::new();
        for (name, forward) in self.bijection_table {
            bijections.insert(name, VertexBijection::new(forward).map_err(|e| Error::Parse(e.to_string()))?);
        }
        for arc in &self.meta_arcs {
            if !bijections.contains_key(&arc.bijection) {
                let resolved = if arc.bijection == "identity" {
                    VertexBijection::identity(slot_vertices)
                } else {
                    fixtures::bijection(&arc.bijection).ok_or_else(|| {
                        Error::Parse(format!(
                            "bijection {:?} is neither inlined nor a fixture bijection",
                            arc.bijection
                        ))
                    })?
                };
                bijections.insert(arc.bijection.clone(), resolved);
            }
        }
        Ok(CubeArrangement {
            meta_dimension: self.meta_dimension,
            slots: self
                .slots
                .into_iter()
                .map(|s| SlotRef {
                    cube: s.cube,
                    complemented: s.complemented,
                })
                .collect(),
            meta_arcs: self
                .meta_arcs
                .into_iter()
                .map(|m| MetaArcSpec {
                    reversed: m.reversed,
                    bijection: m.bijection,
                })
                .collect(),
            bijection_table: bijections,
            cubes,
        })
    }
}

/// Classification report document; representatives are orientation-only
/// compact cubes in lexicographic order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClassificationReportDoc {
    pub dimension: usize,
    pub total_orientations: u64,
    pub isomorphism_class_count: usize,
    pub non_cordial_class_representatives: Vec<CubeDoc>,
}

impl ClassificationReportDoc {
    pub fn from_report(r: &ClassificationReport) -> Self {
        Self {
            dimension: r.dimension,
            total_orientations: r.total_orientations,
            isomorphism_class_count: r.isomorphism_class_count,
            non_cordial_class_representatives: r
                .non_cordial_class_representatives
                .iter()
                .map(CubeDoc::from_cube)
                .collect(),
        }
    }
}

fn parse_error(e: &serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn sniff(text: &str) -> Result<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| parse_error(&e))
}

/// Parse either labeled-graph document shape into a [`LabeledDigraph`];
/// compact cube documents expand under the canonical arc order.
pub fn parse_labeled_digraph(text: &str) -> Result<LabeledDigraph> {
    let value = sniff(text)?;
    let object = value
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    if object.contains_key("dim") {
        let doc: CubeDoc = serde_json::from_str(text).map_err(|e| parse_error(&e))?;
        Ok(doc.into_labeled_cube()?.to_labeled_digraph())
    } else if object.contains_key("vertices") {
        let doc: LabeledDigraphDoc = serde_json::from_str(text).map_err(|e| parse_error(&e))?;
        doc.into_labeled()
    } else {
        Err(Error::Parse(
            "expected a \"vertices\"/\"arcs\" document or a \"dim\"/\"orientation\"/\"labels\" document".into(),
        ))
    }
}

pub fn parse_undirected_graph(text: &str) -> Result<UndirectedGraph> {
    let doc: UndirectedGraphDoc = serde_json::from_str(text).map_err(|e| parse_error(&e))?;
    doc.into_graph()
}

pub fn parse_arrangement(text: &str) -> Result<CubeArrangement> {
    let doc: ArrangementDoc = serde_json::from_str(text).map_err(|e| parse_error(&e))?;
    doc.into_arrangement()
}

pub fn to_json_pretty<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize without error")
}

/// DOT export: one node statement per vertex carrying its label, one edge
/// statement per arc carrying the induced arc label.
pub fn to_dot(l: &LabeledDigraph, name: &str) -> String {
    let arc_labels = l.arc_labels();
    let mut out = format!("digraph {name} {{\n");
    for v in 0..l.vertex_count() {
        out.push_str(&format!("  v{v} [label=\"{}\"];\n", l.labeling().label(v)));
    }
    for (&(t, h), &g) in l.graph().arcs().iter().zip(arc_labels.labels()) {
        out.push_str(&format!("  v{t} -> v{h} [label=\"{g}\"];\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip() {
        let bits: Vec<bool> = [1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1].iter().map(|&b| b != 0).collect();
        let hex = bits_to_hex(&bits);
        assert_eq!(hex, "b99");
        assert_eq!(hex_to_bits(&hex, 12).unwrap(), bits);
    }

    #[test]
    fn hex_rejects_bad_width_and_digits() {
        assert!(hex_to_bits("ff", 12).is_err());
        assert!(hex_to_bits("zzz", 12).is_err());
        // a 5-bit vector uses 2 digits; the top 3 bits of the leading digit must be clear
        assert!(hex_to_bits("ff", 5).is_err());
        assert_eq!(hex_to_bits("1f", 5).unwrap(), vec![true; 5]);
    }

    #[test]
    fn labeled_digraph_doc_round_trip() {
        let l = crate::fixtures::cube_c3();
        let doc = LabeledDigraphDoc::from_labeled(&l);
        assert_eq!(doc.clone().into_labeled().unwrap(), l);
        let text = to_json_pretty(&doc);
        assert_eq!(parse_labeled_digraph(&text).unwrap(), l);
    }

    #[test]
    fn cube_doc_round_trip() {
        let l = crate::fixtures::cube_c3();
        let cube = LabeledCube::from_labeled_digraph(&l).unwrap();
        let doc = CubeDoc::from_labeled_cube(&cube);
        assert_eq!(doc.into_labeled_cube().unwrap(), cube);
    }

    #[test]
    fn arrangement_doc_round_trip() {
        let a = crate::fixtures::arrangement_fig5_4d();
        let doc = ArrangementDoc::from_arrangement(&a);
        assert_eq!(doc.into_arrangement().unwrap(), a);
    }

    #[test]
    fn parse_reports_line_and_column() {
        let err = parse_labeled_digraph("{\n  \"vertices\": [,]\n}").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicate_vertex_ids() {
        let text = r#"{"vertices": [{"id": 0, "label": 0}, {"id": 0, "label": 1}], "arcs": []}"#;
        assert!(parse_labeled_digraph(text).is_err());
    }

    #[test]
    fn dot_has_one_edge_statement_per_arc() {
        let l = crate::fixtures::cube_c3();
        let dot = to_dot(&l, "c3");
        assert_eq!(dot.matches(" -> ").count(), 12);
        assert!(dot.contains("v0 -> v1 [label=\"-1\"];"));
    }
}
