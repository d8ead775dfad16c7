//! Brute-force and symmetry-reduced search: the cordiality oracle, the
//! exhaustive classification of small oriented hypercubes up to
//! isomorphism, (2,3)-orientability of undirected graphs, and seeded
//! random exploration of larger orientation spaces.

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::hypercube::{edge_count, OrientedHypercube};
use crate::labeling::{is_23_cordial_pair, VertexLabeling};
use crate::symmetry::SignedPermutation;

/// Largest exhaustive classification dimension: `Q_3` has 4096 orientations
/// and a group of order 48; `Q_4` already has `2^32` orientations.
pub const MAX_CLASSIFY_DIMENSION: usize = 3;

/// Default work budget for orientability searches (orientations times
/// friendly labelings).
pub const DEFAULT_ORIENTATION_BUDGET: u64 = 1 << 24;

/// Every friendly labeling of `n` vertices: 1-sets as combinations in
/// lexicographic order; for odd `n` the `floor(n/2)` one-count is
/// enumerated before the `ceil(n/2)` one-count.
pub fn friendly_labelings(vertex_count: usize) -> impl Iterator<Item = VertexLabeling> {
    let counts = if vertex_count.is_multiple_of(2) {
        vec![vertex_count / 2]
    } else {
        vec![vertex_count / 2, vertex_count / 2 + 1]
    };
    counts.into_iter().flat_map(move |k| {
        (0..vertex_count).combinations(k).map(move |ones| {
            let mut bits = vec![false; vertex_count];
            for v in ones {
                bits[v] = true;
            }
            VertexLabeling::new(bits)
        })
    })
}

/// Number of friendly labelings of `n` vertices, saturating on overflow.
pub fn friendly_labeling_count(vertex_count: usize) -> u64 {
    fn binomial(n: usize, k: usize) -> u64 {
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
            if acc > u64::MAX as u128 {
                return u64::MAX;
            }
        }
        acc as u64
    }
    let half = binomial(vertex_count, vertex_count / 2);
    if vertex_count.is_multiple_of(2) {
        half
    } else {
        half.saturating_mul(2)
    }
}

/// Result of an exhaustive cordiality search: the first friendly labeling
/// that works, if any, plus how many labelings were examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<VertexLabeling>,
    pub examined: u64,
}

impl SearchOutcome {
    pub fn is_cordial(&self) -> bool {
        self.witness.is_some()
    }
}

/// Exhaustive cordiality oracle over all friendly labelings of a
/// digon-free digraph. A `None` witness is an exhaustion certificate: every
/// friendly labeling was examined.
pub fn find_cordial_labeling(d: &Digraph) -> Result<SearchOutcome> {
    if !d.is_digon_free() {
        return Err(Error::Domain(
            "cordiality search is defined on digon-free digraphs".into(),
        ));
    }
    let mut examined = 0;
    for f in friendly_labelings(d.vertex_count()) {
        examined += 1;
        if is_23_cordial_pair(d, &f)? {
            return Ok(SearchOutcome {
                witness: Some(f),
                examined,
            });
        }
    }
    Ok(SearchOutcome {
        witness: None,
        examined,
    })
}

/// The lexicographically minimal orientation bit-vector in the orbit of
/// `h` under all `n! * 2^n` signed permutations. Equal canonical forms
/// certify isomorphic oriented hypercubes.
pub fn canonical_form(h: &OrientedHypercube) -> OrientedHypercube {
    SignedPermutation::all(h.dimension())
        .iter()
        .map(|sigma| sigma.apply(h).expect("matching dimensions"))
        .min()
        .expect("the group is never empty")
}

/// Precomputed group actions packed for masks of at most 16 edges.
fn packed_actions(dimension: usize) -> Vec<(Vec<usize>, u16)> {
    SignedPermutation::all(dimension)
        .iter()
        .map(|sigma| sigma.edge_action().packed())
        .collect()
}

fn canonical_mask(mask: u16, edges: usize, actions: &[(Vec<usize>, u16)]) -> u16 {
    actions
        .iter()
        .map(|(perm, flips)| {
            let flipped = mask ^ flips;
            let mut image = 0u16;
            for (e, &target) in perm.iter().enumerate().take(edges) {
                image |= ((flipped >> e) & 1) << target;
            }
            (mask_lex_key(image, edges), image)
        })
        .min()
        .expect("the group is never empty")
        .1
}

fn mask_to_cube(dimension: usize, mask: u16) -> OrientedHypercube {
    let bits = (0..edge_count(dimension)).map(|e| (mask >> e) & 1 == 1).collect();
    OrientedHypercube::new(dimension, bits).expect("mask width matches edge count")
}

/// Reading a mask as a bit vector (edge 0 first) for comparisons: numeric
/// order on keys matches lexicographic order on bit vectors.
fn mask_lex_key(mask: u16, edges: usize) -> u16 {
    let mut key = 0u16;
    for e in 0..edges {
        key = (key << 1) | ((mask >> e) & 1);
    }
    key
}

fn check_classification_dimension(dimension: usize) -> Result<()> {
    if dimension == 0 || dimension > MAX_CLASSIFY_DIMENSION {
        return Err(Error::InvalidArgument(format!(
            "exhaustive classification covers dimensions 1..={MAX_CLASSIFY_DIMENSION}, got {dimension}"
        )));
    }
    Ok(())
}

fn enumerate_class_masks(dimension: usize, jobs: usize) -> Result<Vec<u16>> {
    check_classification_dimension(dimension)?;
    let edges = edge_count(dimension);
    let total: u64 = 1 << edges;
    let actions = packed_actions(dimension);
    let workers = jobs.max(1).min(total as usize);

    // contiguous ranges by high bits; each worker canonicalizes locally and
    // the merge deduplicates, so the result is independent of the split
    let chunk = total.div_ceil(workers as u64);
    let mut reps: Vec<u16> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let actions = &actions;
                scope.spawn(move || {
                    let lo = w as u64 * chunk;
                    let hi = total.min(lo + chunk);
                    let mut local = std::collections::HashSet::new();
                    for mask in lo..hi {
                        local.insert(canonical_mask(mask as u16, edges, actions));
                    }
                    local
                })
            })
            .collect();
        let mut merged = std::collections::HashSet::new();
        for handle in handles {
            merged.extend(handle.join().expect("enumeration worker panicked"));
        }
        merged.into_iter().collect()
    });
    reps.sort_by_key(|&m| mask_lex_key(m, edges));
    Ok(reps)
}

/// All isomorphism classes of oriented `Q_dimension`, one canonical
/// representative each, in lexicographic order of the orientation bits.
pub fn enumerate_classes(dimension: usize) -> Result<Vec<OrientedHypercube>> {
    enumerate_classes_parallel(dimension, 1)
}

/// Same as [`enumerate_classes`], splitting the orientation space over
/// `jobs` workers. The result is identical for every worker count.
pub fn enumerate_classes_parallel(dimension: usize, jobs: usize) -> Result<Vec<OrientedHypercube>> {
    Ok(enumerate_class_masks(dimension, jobs)?
        .into_iter()
        .map(|m| mask_to_cube(dimension, m))
        .collect())
}

/// Outcome of classifying every orientation of `Q_dimension` up to
/// isomorphism by cordiality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub dimension: usize,
    pub total_orientations: u64,
    pub isomorphism_class_count: usize,
    pub non_cordial_class_representatives: Vec<OrientedHypercube>,
}

/// Visit all `2^(n*2^(n-1))` orientations, reduce them to isomorphism
/// classes, and run the cordiality oracle on one representative per class.
pub fn classify_cordiality(dimension: usize, jobs: usize) -> Result<ClassificationReport> {
    let reps = enumerate_classes_parallel(dimension, jobs)?;
    let mut non_cordial = Vec::new();
    for rep in &reps {
        if !find_cordial_labeling(&rep.to_digraph())?.is_cordial() {
            non_cordial.push(rep.clone());
        }
    }
    Ok(ClassificationReport {
        dimension,
        total_orientations: 1 << edge_count(dimension),
        isomorphism_class_count: reps.len(),
        non_cordial_class_representatives: non_cordial,
    })
}

/// Options for [`find_23_orientation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientationSearchOptions {
    /// Keep isolated vertices instead of reducing to the subgraph induced
    /// by non-isolated vertices.
    pub keep_isolated: bool,
    /// Refuse searches whose orientations-times-labelings work estimate
    /// exceeds this.
    pub budget: u64,
}

impl Default for OrientationSearchOptions {
    fn default() -> Self {
        Self {
            keep_isolated: false,
            budget: DEFAULT_ORIENTATION_BUDGET,
        }
    }
}

/// Exhaustive (2,3)-orientability search: every orientation of the edge
/// set crossed with every friendly labeling. Isolated vertices are removed
/// first unless `keep_isolated` is set; the witness refers to the graph
/// actually searched.
pub fn find_23_orientation(
    g: &UndirectedGraph,
    options: &OrientationSearchOptions,
) -> Result<Option<(Digraph, VertexLabeling)>> {
    let reduced = if options.keep_isolated {
        g.clone()
    } else {
        g.without_isolated_vertices()
    };
    let edges = reduced.edge_count();
    if edges >= 63 {
        return Err(Error::Budget(format!("{edges} edges exceed the enumerable range")));
    }
    let orientations: u64 = 1 << edges;
    let work = orientations.saturating_mul(friendly_labeling_count(reduced.vertex_count()));
    if work > options.budget {
        return Err(Error::Budget(format!(
            "estimated {work} orientation-labeling pairs exceed the budget of {}",
            options.budget
        )));
    }
    for mask in 0..orientations {
        let arcs: Vec<(usize, usize)> = reduced
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if (mask >> i) & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        let d = Digraph::new(reduced.vertex_count(), arcs)?;
        for f in friendly_labelings(reduced.vertex_count()) {
            if is_23_cordial_pair(&d, &f)? {
                return Ok(Some((d, f)));
            }
        }
    }
    Ok(None)
}

/// Three disjoint edges on vertices 0..6 plus `n - 6` isolated vertices.
pub fn x_graph(n: usize) -> Result<UndirectedGraph> {
    if n < 6 {
        return Err(Error::InvalidArgument(format!(
            "the X graph family starts at 6 vertices, got {n}"
        )));
    }
    UndirectedGraph::new(n, vec![(0, 1), (2, 3), (4, 5)])
}

/// Outcome of seeded random exploration of an orientation space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExploreReport {
    pub dimension: usize,
    pub seed: u64,
    pub samples: u64,
    /// Samples with a cordial labeling found.
    pub cordial: u64,
    /// Samples exhaustively shown non-cordial (only when `exhaustive`).
    pub non_cordial: u64,
    /// Samples where the labeling sampling found nothing (no verdict).
    pub undecided: u64,
    /// Whether per-sample verdicts used the exhaustive oracle.
    pub exhaustive: bool,
    /// Up to four non-cordial examples, in discovery order.
    pub non_cordial_examples: Vec<OrientedHypercube>,
}

/// Labeling spaces at or below this size are searched exhaustively per
/// sample; beyond it, random friendly labelings are tried instead.
const EXPLORE_EXHAUSTIVE_LIMIT: u64 = 20_000;

/// Sample random orientations of `Q_dimension` and look for cordial
/// labelings. For dimensions up to 4 each verdict is exhaustive; beyond
/// that, `attempts` random friendly labelings are tried per sample and a
/// miss is reported as undecided. Deterministic for a fixed seed.
pub fn explore(dimension: usize, samples: u64, attempts: u64, seed: u64) -> Result<ExploreReport> {
    if dimension == 0 || dimension > 16 {
        return Err(Error::InvalidArgument(format!(
            "exploration covers dimensions 1..=16, got {dimension}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices = 1usize << dimension;
    let exhaustive = friendly_labeling_count(vertices) <= EXPLORE_EXHAUSTIVE_LIMIT;
    let mut report = ExploreReport {
        dimension,
        seed,
        samples,
        cordial: 0,
        non_cordial: 0,
        undecided: 0,
        exhaustive,
        non_cordial_examples: Vec::new(),
    };
    for _ in 0..samples {
        let bits: Vec<bool> = (0..edge_count(dimension)).map(|_| rng.gen()).collect();
        let h = OrientedHypercube::new(dimension, bits)?;
        let d = h.to_digraph();
        if exhaustive {
            if find_cordial_labeling(&d)?.is_cordial() {
                report.cordial += 1;
            } else {
                report.non_cordial += 1;
                if report.non_cordial_examples.len() < 4 {
                    report.non_cordial_examples.push(h);
                }
            }
        } else {
            let mut found = false;
            for _ in 0..attempts {
                let ones = sample(&mut rng, vertices, vertices / 2);
                let mut bits = vec![false; vertices];
                for v in ones {
                    bits[v] = true;
                }
                if is_23_cordial_pair(&d, &VertexLabeling::new(bits))? {
                    found = true;
                    break;
                }
            }
            if found {
                report.cordial += 1;
            } else {
                report.undecided += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::labeling::{lambda, LambdaTriple};

    #[test]
    fn friendly_counts() {
        assert_eq!(friendly_labelings(8).count(), 70);
        assert_eq!(friendly_labelings(7).count(), 70);
        assert_eq!(friendly_labelings(6).count(), 20);
        assert_eq!(friendly_labeling_count(8), 70);
        assert_eq!(friendly_labeling_count(7), 70);
    }

    #[test]
    fn cube_v_has_no_cordial_labeling() {
        let outcome = find_cordial_labeling(fixtures::cube_v().graph()).unwrap();
        assert!(outcome.witness.is_none());
        assert_eq!(outcome.examined, 70);
    }

    #[test]
    fn reversed_cube_v_has_no_cordial_labeling() {
        let outcome = find_cordial_labeling(&fixtures::cube_v().graph().reverse()).unwrap();
        assert!(outcome.witness.is_none());
        assert_eq!(outcome.examined, 70);
    }

    #[test]
    fn base_cube_orientation_admits_a_witness() {
        let d = fixtures::cube_c3().graph().clone();
        let outcome = find_cordial_labeling(&d).unwrap();
        let witness = outcome.witness.expect("C3's orientation is cordial");
        assert!(is_23_cordial_pair(&d, &witness).unwrap());
    }

    #[test]
    fn digons_are_rejected() {
        let d = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert!(matches!(find_cordial_labeling(&d), Err(Error::Domain(_))));
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_constant() {
        let h = OrientedHypercube::new(3, (0..12).map(|e| e % 5 < 2).collect()).unwrap();
        let canon = canonical_form(&h);
        assert_eq!(canonical_form(&canon), canon);
        for sigma in SignedPermutation::all(3).iter().step_by(7) {
            assert_eq!(canonical_form(&sigma.apply(&h).unwrap()), canon);
        }
    }

    #[test]
    fn all_zero_orientation_is_its_own_canonical_form() {
        let h = OrientedHypercube::all_low_to_high(2).unwrap();
        assert_eq!(canonical_form(&h), h);
    }

    #[test]
    fn class_counts_for_small_dimensions() {
        assert_eq!(enumerate_classes(1).unwrap().len(), 1);
        assert_eq!(enumerate_classes(2).unwrap().len(), 4);
        assert_eq!(enumerate_classes(3).unwrap().len(), 112);
    }

    #[test]
    fn enumeration_is_independent_of_worker_count() {
        let single = enumerate_classes_parallel(3, 1).unwrap();
        for jobs in [2, 3, 8] {
            assert_eq!(enumerate_classes_parallel(3, jobs).unwrap(), single);
        }
    }

    /// The packed enumeration path must select the same representatives as
    /// the public canonicalization.
    #[test]
    fn enumeration_representatives_agree_with_canonical_form() {
        for dim in 1..=3 {
            let reps = enumerate_classes(dim).unwrap();
            for rep in &reps {
                assert_eq!(&canonical_form(rep), rep);
            }
            let mut rng = rand::rngs::StdRng::seed_from_u64(dim as u64);
            for _ in 0..20 {
                let bits = (0..edge_count(dim)).map(|_| rng.gen()).collect();
                let h = OrientedHypercube::new(dim, bits).unwrap();
                assert!(reps.contains(&canonical_form(&h)));
            }
        }
    }

    #[test]
    fn classification_rejects_large_dimensions() {
        assert!(matches!(enumerate_classes(4), Err(Error::InvalidArgument(_))));
        assert!(matches!(classify_cordiality(0, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn dimension_one_has_one_cordial_class() {
        let report = classify_cordiality(1, 1).unwrap();
        assert_eq!(report.total_orientations, 2);
        assert_eq!(report.isomorphism_class_count, 1);
        assert!(report.non_cordial_class_representatives.is_empty());
    }

    #[test]
    fn x_graph_shape() {
        let x6 = x_graph(6).unwrap();
        assert_eq!(x6.vertex_count(), 6);
        assert_eq!(x6.edges(), &[(0, 1), (2, 3), (4, 5)]);
        let x7 = x_graph(7).unwrap();
        assert_eq!(x7.vertex_count(), 7);
        assert_eq!(x7.edge_count(), 3);
        assert!(matches!(x_graph(5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn x6_is_not_orientable_and_x7_depends_on_the_convention() {
        let options = OrientationSearchOptions::default();
        assert!(find_23_orientation(&x_graph(6).unwrap(), &options).unwrap().is_none());
        // under the reduction convention X7 collapses to X6
        assert!(find_23_orientation(&x_graph(7).unwrap(), &options).unwrap().is_none());
        let keep = OrientationSearchOptions {
            keep_isolated: true,
            ..options
        };
        let (d, f) = find_23_orientation(&x_graph(7).unwrap(), &keep)
            .unwrap()
            .expect("X7 with its isolated vertex kept is orientable");
        assert_eq!(d.vertex_count(), 7);
        assert!(f.is_friendly());
        assert_eq!(lambda(&d, &f).unwrap(), LambdaTriple::new(1, 1, 1));
    }

    #[test]
    fn single_edge_is_orientable() {
        let k2 = UndirectedGraph::new(2, vec![(0, 1)]).unwrap();
        let (d, f) = find_23_orientation(&k2, &OrientationSearchOptions::default())
            .unwrap()
            .expect("one arc between a 0 and a 1");
        // the one arc runs between a 0 and a 1, so lambda is a permutation
        // of (1,0,0)
        assert!(is_23_cordial_pair(&d, &f).unwrap());
        assert_eq!(lambda(&d, &f).unwrap().sorted(), [0, 0, 1]);
    }

    #[test]
    fn budget_refusal() {
        let edges: Vec<(usize, usize)> = (0..14).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = UndirectedGraph::new(28, edges).unwrap();
        let tight = OrientationSearchOptions {
            keep_isolated: false,
            budget: 1000,
        };
        assert!(matches!(find_23_orientation(&g, &tight), Err(Error::Budget(_))));
    }

    #[test]
    fn explore_is_deterministic_under_seed() {
        let a = explore(3, 16, 8, 42).unwrap();
        let b = explore(3, 16, 8, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.cordial + a.non_cordial + a.undecided, 16);
        assert!(a.exhaustive);
    }
}
