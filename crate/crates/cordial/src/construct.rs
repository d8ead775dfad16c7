//! The inductive doubling construction: grow a cordially labeled oriented
//! hypercube from dimension 3 to any dimension divisible by 3.
//!
//! One doubling step places two copies of a labeled cube side by side along
//! a new highest axis and joins like vertices by connector arcs from copy 0
//! to copy 1. With a complemented second copy every connector picks up an
//! induced label of +1 or -1; with an identical second copy every connector
//! is labeled 0. Three steps per triple of dimensions, in the order
//! complement, complement, identity, keep the triple balanced.

use crate::error::{Error, Result};
use crate::fixtures;
use crate::hypercube::{edge_count, LabeledCube, OrientedHypercube};
use crate::labeling::{LabeledDigraph, VertexLabeling};

/// How the second copy of a doubling step is labeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoublingMode {
    /// Second copy carries the complemented labeling; connectors pick up
    /// labels +1 and -1 in equal number when the base labeling is friendly
    /// on an even vertex set.
    ComplementConnector,
    /// Second copy is labeled identically; all connectors are labeled 0.
    IdentityConnector,
}

/// The dimension-3 base of the construction: the figure cube C3, with
/// lambda (4,4,4).
pub fn base_cube() -> LabeledDigraph {
    fixtures::cube_c3()
}

/// One doubling step on cube form. The new axis is the current highest
/// axis, so copy-1 vertex ids are copy-0 ids plus `2^k`.
pub fn double_cube(l: &LabeledCube, mode: DoublingMode) -> LabeledCube {
    let k = l.dimension();
    let n = k + 1;
    let per_axis = 1usize << (k - 1);
    let mut bits = Vec::with_capacity(edge_count(n));
    for axis in 0..k {
        // both copies keep the original orientation; under the canonical
        // order the new axis block is the old block for copy 0 followed by
        // the same block for copy 1
        let block = &l.cube().orientation_bits()[axis * per_axis..(axis + 1) * per_axis];
        bits.extend_from_slice(block);
        bits.extend_from_slice(block);
    }
    // connector arcs run copy 0 to copy 1, i.e. low to high along axis k
    bits.extend(std::iter::repeat_n(false, 1 << k));
    let cube = OrientedHypercube::new(n, bits).expect("doubled bit vector has the right length");

    let mut labels = l.labeling().bits().to_vec();
    match mode {
        DoublingMode::ComplementConnector => labels.extend(l.labeling().complement().bits()),
        DoublingMode::IdentityConnector => labels.extend(l.labeling().bits()),
    }
    LabeledCube::new(cube, VertexLabeling::new(labels)).expect("doubled labeling has the right length")
}

/// One doubling step on a labeled digraph over an oriented hypercube.
pub fn double(l: &LabeledDigraph, mode: DoublingMode) -> Result<LabeledDigraph> {
    let cube = LabeledCube::from_labeled_digraph(l)?;
    Ok(double_cube(&cube, mode).to_labeled_digraph())
}

/// A cordially labeled oriented `Q_n` for any `n >= 3` divisible by 3, with
/// lambda `(n*2^(n-1)/3, n*2^(n-1)/3, n*2^(n-1)/3)`: the base cube followed
/// by (complement, complement, identity) doubling triples.
pub fn construct_cordial(n: usize) -> Result<LabeledDigraph> {
    if n < 3 || !n.is_multiple_of(3) {
        return Err(Error::InvalidArgument(format!(
            "dimension must be a positive multiple of 3, got {n}"
        )));
    }
    if n > crate::hypercube::MAX_DIMENSION {
        return Err(Error::InvalidArgument(format!(
            "dimension {n} exceeds the supported bound {}",
            crate::hypercube::MAX_DIMENSION
        )));
    }
    let mut cube = LabeledCube::from_labeled_digraph(&base_cube())
        .expect("the base cube fixture is an oriented hypercube");
    let mut k = 3;
    while k < n {
        cube = double_cube(&cube, DoublingMode::ComplementConnector);
        cube = double_cube(&cube, DoublingMode::ComplementConnector);
        cube = double_cube(&cube, DoublingMode::IdentityConnector);
        k += 3;
    }
    Ok(cube.to_labeled_digraph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::labeling::LambdaTriple;

    #[test]
    fn base_cube_pins() {
        let base = base_cube();
        assert_eq!(base.lambda(), LambdaTriple::new(4, 4, 4));
        assert!(base.labeling().is_friendly());
        assert!(base.graph().is_digon_free());
    }

    #[test]
    fn complement_double_from_base() {
        let doubled = double(&base_cube(), DoublingMode::ComplementConnector).unwrap();
        assert_eq!(doubled.lambda(), LambdaTriple::new(12, 12, 8));
        let twice = double(&doubled, DoublingMode::ComplementConnector).unwrap();
        assert_eq!(twice.lambda(), LambdaTriple::new(32, 32, 16));
    }

    #[test]
    fn identity_double_doubles_plus_minus_and_adds_zero_connectors() {
        let mut l = base_cube();
        for _ in 0..2 {
            let before = l.lambda();
            let k = LabeledCube::from_labeled_digraph(&l).unwrap().dimension();
            let after = double(&l, DoublingMode::IdentityConnector).unwrap();
            assert_eq!(
                after.lambda(),
                LambdaTriple::new(2 * before.alpha, 2 * before.beta, 2 * before.gamma + (1 << k))
            );
            l = after;
        }
    }

    #[test]
    fn construct_rejects_bad_dimensions() {
        for n in [0, 1, 2, 4, 5, 7, 8, 10, 36] {
            assert!(matches!(construct_cordial(n), Err(Error::InvalidArgument(_))));
        }
    }

    #[test]
    fn construct_three_is_the_base_cube_content() {
        let built = construct_cordial(3).unwrap();
        assert_eq!(built.lambda(), LambdaTriple::new(4, 4, 4));
        let built_cube = LabeledCube::from_labeled_digraph(&built).unwrap();
        let base = LabeledCube::from_labeled_digraph(&base_cube()).unwrap();
        assert_eq!(built_cube, base);
    }

    #[test]
    fn construct_six_reaches_the_balanced_triple() {
        let l = construct_cordial(6).unwrap();
        assert_eq!(l.lambda(), LambdaTriple::new(64, 64, 64));
        assert!(l.is_23_cordial());
        for v in 0..l.vertex_count() {
            assert_eq!(l.graph().degree(v), 6);
        }
    }

    #[test]
    fn double_rejects_non_hypercubes() {
        let square = Digraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let l = LabeledDigraph::new(square, VertexLabeling::zeros(4)).unwrap();
        assert!(matches!(
            double(&l, DoublingMode::IdentityConnector),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn construction_is_deterministic() {
        assert_eq!(construct_cordial(6).unwrap(), construct_cordial(6).unwrap());
    }
}
