//! Cross-checking oracles, kept independent of the library's
//! canonicalization path: explicit vertex image tables over a plain sorted
//! edge list instead of the axis-major edge algebra.

use std::collections::HashMap;

/// All permutations of `0..n`, generated recursively.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Orbit count of `Q_n` orientations under the hyperoctahedral group by
/// Burnside's lemma. A group element, acting on undirected edges with a
/// low/high swap flag per edge, fixes `2^(cycle count)` orientation
/// vectors when every edge cycle carries an even number of swaps, and none
/// otherwise.
pub fn burnside_orientation_classes(n: usize) -> u64 {
    let vertices = 1usize << n;
    let mut edges = Vec::new();
    for u in 0..vertices {
        for axis in 0..n {
            let v = u ^ (1 << axis);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    let index: HashMap<(usize, usize), usize> =
        edges.iter().copied().enumerate().map(|(k, e)| (e, k)).collect();

    let mut fixed_total: u64 = 0;
    let mut order: u64 = 0;
    for perm in permutations(n) {
        for mask in 0..vertices {
            order += 1;
            let image: Vec<usize> = (0..vertices)
                .map(|v| {
                    let mut w = 0;
                    for (i, &j) in perm.iter().enumerate() {
                        if (v >> i) & 1 == 1 {
                            w |= 1 << j;
                        }
                    }
                    w ^ mask
                })
                .collect();
            let mut edge_perm = vec![0usize; edges.len()];
            let mut swapped = vec![false; edges.len()];
            for (k, &(u, v)) in edges.iter().enumerate() {
                let (a, b) = (image[u], image[v]);
                edge_perm[k] = index[&(a.min(b), a.max(b))];
                swapped[k] = a > b;
            }
            let mut seen = vec![false; edges.len()];
            let mut cycles = 0u32;
            let mut all_even = true;
            for start in 0..edges.len() {
                if seen[start] {
                    continue;
                }
                cycles += 1;
                let mut parity = false;
                let mut e = start;
                while !seen[e] {
                    seen[e] = true;
                    parity ^= swapped[e];
                    e = edge_perm[e];
                }
                all_even &= !parity;
            }
            if all_even {
                fixed_total += 1u64 << cycles;
            }
        }
    }
    fixed_total / order
}
