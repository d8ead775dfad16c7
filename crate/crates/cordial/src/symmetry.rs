//! The automorphism group of `Q_n`: coordinate permutations composed with
//! coordinate flips (the hyperoctahedral group, order `n! * 2^n`).

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypercube::{edge_count, edge_endpoints, edge_index, OrientedHypercube};
use crate::labeling::VertexLabeling;

/// An automorphism of `Q_n`: axis `i` maps to axis `axis_perm[i]`, then the
/// coordinates selected by `flip_mask` are inverted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    axis_perm: Vec<usize>,
    flip_mask: usize,
}

impl SignedPermutation {
    pub fn new(axis_perm: Vec<usize>, flip_mask: usize) -> Result<Self> {
        let n = axis_perm.len();
        let mut hit = vec![false; n];
        for &a in &axis_perm {
            if a >= n || hit[a] {
                return Err(Error::InvalidArgument(format!(
                    "{axis_perm:?} is not a permutation of 0..{n}"
                )));
            }
            hit[a] = true;
        }
        if flip_mask >> n != 0 {
            return Err(Error::InvalidArgument(format!(
                "flip mask {flip_mask:#x} has bits beyond axis {n}"
            )));
        }
        Ok(Self { axis_perm, flip_mask })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            axis_perm: (0..n).collect(),
            flip_mask: 0,
        }
    }

    pub fn dimension(&self) -> usize {
        self.axis_perm.len()
    }

    pub fn axis_perm(&self) -> &[usize] {
        &self.axis_perm
    }

    pub fn flip_mask(&self) -> usize {
        self.flip_mask
    }

    /// Image of a vertex: coordinate `i` of `v` becomes coordinate
    /// `axis_perm[i]`, then the flip mask is xored in.
    pub fn map_vertex(&self, v: usize) -> usize {
        let mut w = 0;
        for (i, &j) in self.axis_perm.iter().enumerate() {
            if (v >> i) & 1 == 1 {
                w |= 1 << j;
            }
        }
        w ^ self.flip_mask
    }

    /// Every element of the group, axis permutations in lexicographic order,
    /// flip masks in increasing order within each permutation.
    pub fn all(n: usize) -> Vec<Self> {
        (0..n)
            .permutations(n)
            .flat_map(|perm| {
                (0..1usize << n).map(move |mask| Self {
                    axis_perm: perm.clone(),
                    flip_mask: mask,
                })
            })
            .collect()
    }

    /// Induced action on canonical edge indices. Edge `e` maps to
    /// `perm[e]`; its orientation bit is xored with `flip[e]` (set exactly
    /// when the image arc runs high endpoint to low endpoint).
    pub(crate) fn edge_action(&self) -> EdgeAction {
        let n = self.dimension();
        let m = edge_count(n);
        let mut perm = vec![0; m];
        let mut flip = vec![false; m];
        for e in 0..m {
            let (low, high) = edge_endpoints(n, e);
            let axis = (low ^ high).trailing_zeros() as usize;
            let image_axis = self.axis_perm[axis];
            let image = self.map_vertex(low);
            // `low` has bit `axis` clear, so bit `image_axis` of its image
            // is exactly the flip bit of that axis.
            let flips = (image >> image_axis) & 1 == 1;
            let image_low = image & !(1 << image_axis);
            perm[e] = edge_index(n, image_axis, image_low);
            flip[e] = flips;
        }
        EdgeAction { perm, flip }
    }

    /// Apply to an oriented hypercube of matching dimension.
    pub fn apply(&self, h: &OrientedHypercube) -> Result<OrientedHypercube> {
        if self.dimension() != h.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "signed permutation on {} axes applied to Q_{}",
                self.dimension(),
                h.dimension()
            )));
        }
        let action = self.edge_action();
        Ok(action.apply(h))
    }

    /// Push a labeling through the vertex map: `result(sigma(v)) = f(v)`.
    pub fn map_labeling(&self, f: &VertexLabeling) -> Result<VertexLabeling> {
        if f.len() != 1 << self.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "labeling has {} bits but the map acts on {} vertices",
                f.len(),
                1 << self.dimension()
            )));
        }
        let mut bits = vec![false; f.len()];
        for v in 0..f.len() {
            bits[self.map_vertex(v)] = f.bits()[v];
        }
        Ok(VertexLabeling::new(bits))
    }
}

/// Precomputed edge-level form of a signed permutation.
pub(crate) struct EdgeAction {
    pub perm: Vec<usize>,
    pub flip: Vec<bool>,
}

impl EdgeAction {
    pub fn apply(&self, h: &OrientedHypercube) -> OrientedHypercube {
        let mut bits = vec![false; h.edge_count()];
        for (e, &b) in h.orientation_bits().iter().enumerate() {
            bits[self.perm[e]] = b ^ self.flip[e];
        }
        OrientedHypercube::new(h.dimension(), bits).expect("action preserves edge count")
    }

    /// Packed form over at most 16 edges, for tight enumeration loops.
    pub fn packed(&self) -> (Vec<usize>, u16) {
        let mut mask = 0u16;
        for (e, &f) in self.flip.iter().enumerate() {
            if f {
                mask |= 1 << e;
            }
        }
        (self.perm.clone(), mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn group_order_is_factorial_times_power_of_two() {
        assert_eq!(SignedPermutation::all(1).len(), 2);
        assert_eq!(SignedPermutation::all(2).len(), 8);
        assert_eq!(SignedPermutation::all(3).len(), 48);
    }

    #[test]
    fn identity_fixes_everything() {
        let id = SignedPermutation::identity(3);
        for v in 0..8 {
            assert_eq!(id.map_vertex(v), v);
        }
        let h = OrientedHypercube::new(3, (0..12).map(|e| e % 2 == 0).collect()).unwrap();
        assert_eq!(id.apply(&h).unwrap(), h);
    }

    #[test]
    fn rejects_bad_permutations() {
        assert!(SignedPermutation::new(vec![0, 0], 0).is_err());
        assert!(SignedPermutation::new(vec![0, 2], 0).is_err());
        assert!(SignedPermutation::new(vec![0, 1], 4).is_err());
    }

    /// The edge action must agree with relabeling the expanded digraph
    /// vertex by vertex.
    #[test]
    fn edge_action_matches_vertex_relabeling() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=4usize {
            let elements = SignedPermutation::all(n);
            for _ in 0..40 {
                let bits: Vec<bool> = (0..edge_count(n)).map(|_| rng.gen()).collect();
                let h = OrientedHypercube::new(n, bits).unwrap();
                let sigma = &elements[rng.gen_range(0..elements.len())];
                let image = sigma.apply(&h).unwrap();
                let mut expected: Vec<(usize, usize)> = h
                    .to_digraph()
                    .arcs()
                    .iter()
                    .map(|&(t, u)| (sigma.map_vertex(t), sigma.map_vertex(u)))
                    .collect();
                let mut got = image.to_digraph().arcs().to_vec();
                expected.sort_unstable();
                got.sort_unstable();
                assert_eq!(expected, got);
            }
        }
    }
}
