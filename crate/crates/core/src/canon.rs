//! Canonical labeling via iterative degree refinement plus
//! individualization-and-refinement backtracking.
//!
//! The canonical form of a graph is the lexicographically smallest graph6
//! encoding over all labelings that survive the refinement tree. Discovered
//! automorphisms prune branches that can only repeat already-seen labelings,
//! which keeps stars and other orbit-heavy graphs from going factorial.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::graph6;

/// A graph's canonical key: the graph6 string of its canonically relabeled copy.
///
/// Two graphs are isomorphic iff their canonical forms are equal; the `Ord`
/// on keys is the byte order used everywhere decks are serialized.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    key: String,
}

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.key
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.key).expect("canonical keys are valid graph6")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.key)
    }
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    CanonicalForm {
        key: graph6::encode(&g.relabeled(&lab)),
    }
}

/// True iff `a` and `b` are isomorphic.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Canonical forms of the connected components, sorted (useful for tie-breaking
/// and for recognising unions in tests).
pub fn component_profiles(g: &Graph) -> Vec<CanonicalForm> {
    let mut out: Vec<CanonicalForm> = g
        .components()
        .iter()
        .map(|comp| {
            let mut h = Graph::empty(comp.len()).unwrap();
            for (i, &u) in comp.iter().enumerate() {
                for (j, &v) in comp.iter().enumerate().skip(i + 1) {
                    if g.has_edge(u, v) {
                        h.add_edge(i, j).unwrap();
                    }
                }
            }
            canonical_form(&h)
        })
        .collect();
    out.sort();
    out
}

/// A labeling `lab[old] = new` sending `g` to its canonical representative.
fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    // initial partition: degree classes, ascending
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let mut cells: Vec<Vec<usize>> = by_degree.into_values().collect();
    refine(g, &mut cells);

    let mut search = Search {
        g,
        n,
        best_enc: u128::MAX,
        best_lab: Vec::new(),
        best_inv: Vec::new(),
        gens: Vec::new(),
    };
    search.explore(cells, &mut Vec::new());
    search.best_lab
}

/// Refines an ordered partition to equitability. Each pass splits every cell by
/// the multiset of neighbor colors, encoded as a packed signature (4 bits per
/// color class — sound because both cell count and degrees stay below 16).
/// Sub-cells are ordered by ascending signature, so the resulting ordered
/// partition is isomorphism-invariant.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.order();
    let mut color = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v] = ci;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig = 0u64;
                for u in g.neighbors(v) {
                    sig += 1 << (4 * color[u]);
                }
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                split = true;
            }
            next.extend(groups.into_values());
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_enc: u128,
    best_lab: Vec<usize>,
    best_inv: Vec<usize>,
    /// Automorphisms discovered from equal-encoding leaves.
    gens: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(ti) = cells.iter().position(|c| c.len() > 1) else {
            self.visit_leaf(&cells);
            return;
        };
        let cell = cells[ti].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            let mut child = cells.clone();
            child[ti] = vec![v];
            child.insert(ti + 1, cell.iter().copied().filter(|&u| u != v).collect());
            refine(self.g, &mut child);
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn visit_leaf(&mut self, cells: &[Vec<usize>]) {
        let mut lab = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            lab[cell[0]] = pos;
        }
        let enc = encode_u128(self.g, &lab);
        if enc < self.best_enc || self.best_lab.is_empty() {
            self.best_enc = enc;
            self.best_inv = vec![0; self.n];
            for (v, &pos) in lab.iter().enumerate() {
                self.best_inv[pos] = v;
            }
            self.best_lab = lab;
        } else if enc == self.best_enc {
            // two labelings with identical encodings compose to an automorphism
            let auto: Vec<usize> = (0..self.n).map(|v| self.best_inv[lab[v]]).collect();
            if auto.iter().enumerate().any(|(v, &w)| v != w) && !self.gens.contains(&auto) {
                debug_assert!(is_automorphism(self.g, &auto));
                self.gens.push(auto);
            }
        }
    }

    /// True iff `v` is in the orbit of an already-explored sibling under the
    /// subgroup generated by automorphisms fixing `prefix` pointwise. Skipping
    /// such `v` is sound: its subtree is the image of the sibling's.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        if explored.is_empty() || self.gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for gen in &self.gens {
            if prefix.iter().all(|&b| gen[b] == b) {
                for (x, &gx) in gen.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, gx));
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Packs the relabeled adjacency triangle into a u128 so that numeric order
/// equals lexicographic order of the graph6 bit sequence (first bit = MSB).
fn encode_u128(g: &Graph, lab: &[usize]) -> u128 {
    let mut enc = 0u128;
    for (u, v) in g.edges() {
        let (i, j) = if lab[u] < lab[v] {
            (lab[u], lab[v])
        } else {
            (lab[v], lab[u])
        };
        enc |= 1 << (127 - (j * (j - 1) / 2 + i));
    }
    enc
}

fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}
