//! The figure library: labeled cubes C1, C2, C3, A, B, V, the named vertex
//! bijections between them, and the four published cube arrangements.
//!
//! Vertices are numbered in each figure's own drawing order (`a1..a8` maps
//! to `0..7`; for V, the order is s1, b3, s3, v1, b1, v2, s2, b2). Arc
//! lists keep the figures' drawing order. Every transcription is pinned by
//! a lambda test below.

use std::collections::BTreeMap;

use crate::compose::{
    assemble, balance_free_arcs, BijectionTable, CubeArrangement, GammaEntry, MetaArcSpec,
    SlotRef, VertexBijection,
};
use crate::digraph::Digraph;
use crate::labeling::{LabeledDigraph, VertexLabeling};

fn labeled(vertex_count: usize, arcs: &[(usize, usize)], labels: &[u8]) -> LabeledDigraph {
    let graph = Digraph::new(vertex_count, arcs.to_vec()).expect("fixture arc list");
    let labeling = VertexLabeling::new(labels.iter().map(|&b| b != 0).collect());
    LabeledDigraph::new(graph, labeling).expect("fixture labeling length")
}

/// The 1-dimensional cordial cube: a single arc from a 0 to a 1.
pub fn cube_c1() -> LabeledDigraph {
    labeled(2, &[(0, 1)], &[0, 1])
}

/// The 2-dimensional cordial cube with lambda (1,1,2).
pub fn cube_c2() -> LabeledDigraph {
    labeled(4, &[(0, 1), (1, 3), (2, 3), (2, 0)], &[1, 1, 0, 0])
}

const Q3_FIGURE_ARCS: [(usize, usize); 12] = [
    (0, 1),
    (3, 2),
    (2, 0),
    (1, 3),
    (4, 5),
    (5, 7),
    (7, 6),
    (6, 4),
    (0, 4),
    (1, 5),
    (2, 6),
    (3, 7),
];

/// The 3-dimensional cordial cube with lambda (4,4,4); the base of the
/// doubling construction. Also called C in the dimension-7 assembly.
pub fn cube_c3() -> LabeledDigraph {
    labeled(8, &Q3_FIGURE_ARCS, &[1, 0, 0, 1, 1, 0, 0, 1])
}

/// Cordial cube A: same orientation as C3, different labeling.
pub fn cube_a() -> LabeledDigraph {
    labeled(8, &Q3_FIGURE_ARCS, &[0, 1, 0, 1, 1, 0, 1, 0])
}

/// Cordial cube B: differs from A's orientation on one edge.
pub fn cube_b() -> LabeledDigraph {
    labeled(
        8,
        &[
            (0, 1),
            (3, 2),
            (2, 0),
            (1, 3),
            (4, 5),
            (7, 5),
            (7, 6),
            (6, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
        &[1, 0, 1, 1, 0, 1, 0, 0],
    )
}

/// The oriented cube V: three vertices of out-degree 3 and two of
/// in-degree 3, and no friendly labeling makes it cordial. The figure
/// carries no labeling, so the fixture stores all zeros as a placeholder.
pub fn cube_v() -> LabeledDigraph {
    labeled(
        8,
        &[
            (1, 0),
            (2, 3),
            (0, 2),
            (1, 3),
            (4, 5),
            (7, 5),
            (7, 6),
            (4, 6),
            (4, 0),
            (1, 5),
            (6, 2),
            (7, 3),
        ],
        &[0; 8],
    )
}

/// The named cube fixtures, in a stable order.
pub const CUBE_NAMES: [&str; 6] = ["C1", "C2", "C3", "A", "B", "V"];

pub fn cube(name: &str) -> Option<LabeledDigraph> {
    match name {
        "C1" => Some(cube_c1()),
        "C2" => Some(cube_c2()),
        "C3" | "C" => Some(cube_c3()),
        "A" => Some(cube_a()),
        "B" => Some(cube_b()),
        "V" => Some(cube_v()),
        _ => None,
    }
}

/// The named bijection fixtures. The figures draw inter-cube edges between
/// same-positioned vertices, so every named bijection is the identity on
/// fixture vertex indices.
pub const BIJECTION_NAMES: [&str; 4] = ["identity", "AB", "AC", "BC"];

pub fn bijection(name: &str) -> Option<VertexBijection> {
    match name {
        "identity" | "AB" | "AC" | "BC" => Some(VertexBijection::identity(8)),
        _ => None,
    }
}

/// The ordered set gamma = [Abar, A, Bbar, B, Cbar, C] used by the
/// dimension-7 assembly and its phi table.
pub fn gamma_set() -> Vec<GammaEntry> {
    let a = cube_a();
    let b = cube_b();
    let c = cube_c3();
    vec![
        GammaEntry::new("Abar", "A", a.complemented()),
        GammaEntry::new("A", "A", a),
        GammaEntry::new("Bbar", "B", b.complemented()),
        GammaEntry::new("B", "B", b),
        GammaEntry::new("Cbar", "C", c.complemented()),
        GammaEntry::new("C", "C", c),
    ]
}

/// Bijections for every unordered base pair over {A, B, C}; complemented
/// cubes share their base pair's bijection.
pub fn bijection_table() -> BijectionTable {
    let mut table = BijectionTable::new();
    for (x, y) in [
        ("A", "A"),
        ("B", "B"),
        ("C", "C"),
        ("A", "B"),
        ("A", "C"),
        ("B", "C"),
    ] {
        table.insert((x.to_string(), y.to_string()), VertexBijection::identity(8));
    }
    table
}

fn meta_arcs(count: usize) -> Vec<MetaArcSpec> {
    vec![
        MetaArcSpec {
            reversed: false,
            bijection: "identity".to_string(),
        };
        count
    ]
}

fn slot(cube: &str, complemented: bool) -> SlotRef {
    SlotRef {
        cube: cube.to_string(),
        complemented,
    }
}

/// The 4D assembly of cubes A and B: 2 inter-cube zeros, 6 free edges.
pub fn arrangement_fig5_4d() -> CubeArrangement {
    let mut cubes = BTreeMap::new();
    cubes.insert("A".to_string(), cube_a());
    cubes.insert("B".to_string(), cube_b());
    let mut bijections = BTreeMap::new();
    bijections.insert("identity".to_string(), VertexBijection::identity(8));
    CubeArrangement {
        meta_dimension: 1,
        slots: vec![slot("A", false), slot("B", false)],
        meta_arcs: meta_arcs(1),
        bijection_table: bijections,
        cubes,
    }
}

fn six_d(slots: Vec<SlotRef>) -> CubeArrangement {
    let mut cubes = BTreeMap::new();
    cubes.insert("A".to_string(), cube_a());
    cubes.insert("B".to_string(), cube_b());
    cubes.insert("C".to_string(), cube_c3());
    let mut bijections = BTreeMap::new();
    bijections.insert("identity".to_string(), VertexBijection::identity(8));
    CubeArrangement {
        meta_dimension: 3,
        slots,
        meta_arcs: meta_arcs(12),
        bijection_table: bijections,
        cubes,
    }
}

/// First 6D assembly: gamma cubes on the meta-cube with inter-cube zero
/// total 32 of 96.
pub fn arrangement_fig8a_6d() -> CubeArrangement {
    six_d(vec![
        slot("A", true),
        slot("C", true),
        slot("A", false),
        slot("A", true),
        slot("C", false),
        slot("C", false),
        slot("A", true),
        slot("C", true),
    ])
}

/// Second 6D assembly, also with inter-cube zero total 32 of 96.
pub fn arrangement_fig8b_6d() -> CubeArrangement {
    six_d(vec![
        slot("B", true),
        slot("A", true),
        slot("B", false),
        slot("C", true),
        slot("B", false),
        slot("A", true),
        slot("B", true),
        slot("C", false),
    ])
}

/// The 7D assembly: the two balanced 6D cubes joined vertex-for-vertex,
/// giving 22 inter-cube zeros of 64.
pub fn arrangement_fig9_7d() -> CubeArrangement {
    let six_a = balance_free_arcs(&assemble(&arrangement_fig8a_6d()).expect("fixture assembly"))
        .expect("fixture balancing");
    let six_b = balance_free_arcs(&assemble(&arrangement_fig8b_6d()).expect("fixture assembly"))
        .expect("fixture balancing");
    let mut cubes = BTreeMap::new();
    cubes.insert("fig8a_6D_balanced".to_string(), six_a);
    cubes.insert("fig8b_6D_balanced".to_string(), six_b);
    let mut bijections = BTreeMap::new();
    bijections.insert("identity".to_string(), VertexBijection::identity(64));
    CubeArrangement {
        meta_dimension: 1,
        slots: vec![slot("fig8a_6D_balanced", false), slot("fig8b_6D_balanced", false)],
        meta_arcs: meta_arcs(1),
        bijection_table: bijections,
        cubes,
    }
}

pub const ARRANGEMENT_NAMES: [&str; 4] = ["fig5_4D", "fig8a_6D", "fig8b_6D", "fig9_7D"];

pub fn arrangement(name: &str) -> Option<CubeArrangement> {
    match name {
        "fig5_4D" => Some(arrangement_fig5_4d()),
        "fig8a_6D" => Some(arrangement_fig8a_6d()),
        "fig8b_6D" => Some(arrangement_fig8b_6d()),
        "fig9_7D" => Some(arrangement_fig9_7d()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::LambdaTriple;

    #[test]
    fn lambda_pins_match_the_figures() {
        assert_eq!(cube_c1().lambda(), LambdaTriple::new(1, 0, 0));
        assert_eq!(cube_c2().lambda(), LambdaTriple::new(1, 1, 2));
        assert_eq!(cube_c3().lambda(), LambdaTriple::new(4, 4, 4));
        assert_eq!(cube_a().lambda(), LambdaTriple::new(4, 4, 4));
        assert_eq!(cube_b().lambda(), LambdaTriple::new(4, 4, 4));
    }

    #[test]
    fn arc_labels_of_cube_c3_match_the_drawing() {
        let labels = cube_c3().arc_labels();
        assert_eq!(labels.labels(), &[-1, -1, 1, 1, -1, 1, -1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn arc_labels_of_cubes_a_and_b_match_the_drawings() {
        assert_eq!(
            cube_a().arc_labels().labels(),
            &[1, -1, 0, 0, -1, 0, 1, 0, 1, -1, 1, -1]
        );
        assert_eq!(
            cube_b().arc_labels().labels(),
            &[-1, 0, 0, 1, 1, 1, 0, 0, -1, 1, -1, -1]
        );
    }

    #[test]
    fn cube_v_degree_pattern_matches_the_drawing() {
        let v = cube_v();
        let g = v.graph();
        let out3: Vec<usize> = (0..8).filter(|&x| g.out_degree(x) == 3).collect();
        let in3: Vec<usize> = (0..8).filter(|&x| g.in_degree(x) == 3).collect();
        // b1, b2, b3 are fixture vertices 4, 7, 1; v1, v2 are 3, 5
        assert_eq!(out3, vec![1, 4, 7]);
        assert_eq!(in3, vec![3, 5]);
    }

    #[test]
    fn cordial_pair_examples() {
        assert!(cube_c1().is_23_cordial());
        assert!(cube_c3().is_23_cordial());
        // friendly labeling with twelve arcs split (6, 6, 0) fails on balance
        let mut arcs: Vec<(usize, usize)> = (1..=6).map(|v| (0, v)).collect();
        arcs.extend((7..=12).map(|v| (13, v)));
        let graph = Digraph::new(14, arcs).unwrap();
        let mut bits = vec![false; 14];
        for v in (1..=6).chain([13]) {
            bits[v] = true;
        }
        let f = VertexLabeling::new(bits);
        assert!(f.is_friendly());
        assert_eq!(
            crate::labeling::lambda(&graph, &f).unwrap(),
            crate::labeling::LambdaTriple::new(6, 6, 0)
        );
        assert!(!crate::labeling::is_23_cordial_pair(&graph, &f).unwrap());
    }

    #[test]
    fn all_cube_fixtures_are_friendly_except_placeholder_v() {
        for name in ["C1", "C2", "C3", "A", "B"] {
            assert!(cube(name).unwrap().labeling().is_friendly(), "{name}");
        }
        assert!(!cube_v().labeling().is_friendly());
    }

    #[test]
    fn fixture_lookup_covers_the_published_names() {
        for name in CUBE_NAMES {
            assert!(cube(name).is_some());
        }
        for name in ARRANGEMENT_NAMES {
            assert!(arrangement(name).is_some());
        }
        for name in BIJECTION_NAMES {
            assert!(bijection(name).is_some());
        }
        assert!(cube("Z").is_none());
    }
}
