//! Shared helpers for integration tests: a brute-force isomorphism oracle
//! that is independent of the canonical-form machinery, and a small
//! deterministic RNG so test inputs are reproducible without extra deps.

// each test binary compiles this module separately and uses a subset of it
#![allow(dead_code)]

use dedeck::Graph;

/// Exhaustive isomorphism test by backtracking over degree-compatible vertex
/// bijections. Complete for the small orders used in tests.
pub fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let n = a.order();
    // map vertices of `a` in descending degree order so collisions surface early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &order, 0, &mut image, &mut used)
}

fn extend(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'candidates: for w in 0..b.order() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        for &u in &order[..depth] {
            if a.has_edge(v, u) != b.has_edge(w, image[u]) {
                continue 'candidates;
            }
        }
        image[v] = w;
        used[w] = true;
        if extend(a, b, order, depth + 1, image, used) {
            return true;
        }
        image[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// xorshift64* — deterministic, seedable, no dependency.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform value in 0..bound (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }

    pub fn random_graph(&mut self, n: usize, edge_percent: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if self.below(100) < edge_percent {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    pub fn random_permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, self.below(i + 1));
        }
        p
    }
}
