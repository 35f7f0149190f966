use crate::error::Error;

/// Hard upper bound on graph order. Everything downstream (refinement signatures,
/// triangle encodings, exhaustive searches) is sized against this.
pub const VERTEX_CAP: usize = 16;

/// A simple undirected graph on vertices `0..order`, stored as adjacency bitmasks.
///
/// Construction enforces [`VERTEX_CAP`], so all other operations are capacity-safe.
/// Equality is *labeled* equality; use [`crate::canon::is_isomorphic`] for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u32>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, Error> {
        if order > VERTEX_CAP {
            return Err(Error::TooManyVertices(order));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.order).filter(move |u| mask & (1 << u) != 0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in (u + 1)..self.order {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree of an edge: `deg(u) + deg(v) - 2`.
    pub fn edge_degree(&self, u: usize, v: usize) -> Result<usize, Error> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        Ok(self.degree(u) + self.degree(v) - 2)
    }

    /// The edge-card `self - (u, v)`: same vertex set, one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, Error> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, Error> {
        let order = self.order + other.order;
        let mut g = Graph::empty(order)?;
        g.adj[..self.order].copy_from_slice(&self.adj);
        for v in 0..other.order {
            g.adj[self.order + v] = other.adj[v] << self.order;
        }
        Ok(g)
    }

    /// The image of `self` under `lab`, where `lab[old] = new` is a permutation.
    pub fn relabeled(&self, lab: &[usize]) -> Graph {
        debug_assert_eq!(lab.len(), self.order);
        let mut g = Graph {
            order: self.order,
            adj: vec![0; self.order],
        };
        for (u, v) in self.edges() {
            g.adj[lab[u]] |= 1 << lab[v];
            g.adj[lab[v]] |= 1 << lab[u];
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u32 << start;
            loop {
                let mut grown = comp;
                for v in 0..self.order {
                    if comp & (1 << v) != 0 {
                        grown |= self.adj[v];
                    }
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push((0..self.order).filter(|v| comp & (1 << v) != 0).collect());
        }
        out
    }

    /// True iff the graph is acyclic.
    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order
    }

    /// True iff the graph is a tree together with any number of isolated vertices
    /// (at most one component carries edges, and that component is acyclic).
    pub fn is_tree_plus_isolates(&self) -> bool {
        self.is_forest() && self.components().iter().filter(|c| c.len() > 1).count() <= 1
    }

    /// Degree sequence, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, E={:?})", self.order, self.edges())
    }
}
