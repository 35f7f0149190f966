//! Constructors for the tree families under study (brooms, double-brooms and
//! their subdivisions, the counterexample graphs G1–G5), plus the textual
//! family-spec language used by the CLI.

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;

/// Parameters of a double-broom D_{m,n,p}: a p-vertex path with m extra leaves
/// on the left end and n on the right. Held normalized: m, n >= 1 and p >= 2
/// (a zero leaf count folds into a longer path via D_{0,n,p} = D_{1,n,p-1}).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DoubleBroomParams {
    m: usize,
    n: usize,
    p: usize,
}

impl DoubleBroomParams {
    pub fn new(m: usize, n: usize, p: usize) -> Result<Self, Error> {
        if p < 2 {
            return Err(Error::BadParameters(format!("path length {p} < 2")));
        }
        if m == 0 && n == 0 {
            return Err(Error::BadParameters("no leaves on either end".into()));
        }
        if (m == 0 || n == 0) && p == 2 {
            return Err(Error::BadParameters(
                "one end has no leaves and the path cannot absorb it (p = 2)".into(),
            ));
        }
        // D_{0,n,p} = D_{1,n,p-1} for p > 2, and symmetrically
        let (m, n, p) = if m == 0 {
            (1, n, p - 1)
        } else if n == 0 {
            (m, 1, p - 1)
        } else {
            (m, n, p)
        };
        Ok(DoubleBroomParams { m, n, p })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn order(&self) -> usize {
        self.m + self.n + self.p
    }

    /// (min(m,n), max(m,n), p) — the closed forms are symmetric in m and n.
    pub fn sorted(&self) -> (usize, usize, usize) {
        (self.m.min(self.n), self.m.max(self.n), self.p)
    }
}

impl std::fmt::Display for DoubleBroomParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D({},{},{})", self.m, self.n, self.p)
    }
}

/// Parameters of D^{s,t}_{m,n,p}: one left leaf edge subdivided s times and one
/// right leaf edge subdivided t times.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SubdividedParams {
    base: DoubleBroomParams,
    s: usize,
    t: usize,
}

impl SubdividedParams {
    pub fn new(m: usize, n: usize, p: usize, s: usize, t: usize) -> Result<Self, Error> {
        // checked against the raw counts, before zero-normalization shuffles them
        if s >= 1 && m == 0 {
            return Err(Error::BadParameters(
                "s >= 1 but there is no left leaf edge".into(),
            ));
        }
        if t >= 1 && n == 0 {
            return Err(Error::BadParameters(
                "t >= 1 but there is no right leaf edge".into(),
            ));
        }
        Ok(SubdividedParams {
            base: DoubleBroomParams::new(m, n, p)?,
            s,
            t,
        })
    }

    pub fn base(&self) -> DoubleBroomParams {
        self.base
    }

    pub fn order(&self) -> usize {
        self.base.order() + self.s + self.t
    }
}

/// The path P_p.
pub fn path(p: usize) -> Result<Graph, Error> {
    if p < 1 {
        return Err(Error::BadParameters(
            "path needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(p, (1..p).map(|v| (v - 1, v)))
}

/// The star K_{1,m} (m = 0 gives K_1).
pub fn star(m: usize) -> Result<Graph, Error> {
    Graph::from_edges(m + 1, (1..=m).map(|v| (0, v)))
}

/// The cycle C_l.
pub fn cycle(l: usize) -> Result<Graph, Error> {
    if l < 3 {
        return Err(Error::BadParameters(format!("cycle length {l} < 3")));
    }
    Graph::from_edges(l, (0..l).map(|v| (v, (v + 1) % l)))
}

/// The broom B_{m,a}: a path on vertices 0..a with m extra leaves on vertex 0.
pub fn broom(m: usize, a: usize) -> Result<Graph, Error> {
    if a < 1 {
        return Err(Error::BadParameters(
            "broom path needs at least one vertex".into(),
        ));
    }
    let path_edges = (1..a).map(|v| (v - 1, v));
    let leaf_edges = (0..m).map(move |i| (0, a + i));
    Graph::from_edges(m + a, path_edges.chain(leaf_edges))
}

/// D_{m,n,p}: path on vertices 0..p, m leaves on vertex 0, n leaves on p-1.
pub fn double_broom(params: DoubleBroomParams) -> Result<Graph, Error> {
    let (m, n, p) = (params.m, params.n, params.p);
    let path_edges = (1..p).map(|v| (v - 1, v));
    let left = (0..m).map(move |i| (0, p + i));
    let right = (0..n).map(move |i| (p - 1, p + m + i));
    Graph::from_edges(m + n + p, path_edges.chain(left).chain(right))
}

/// D^{s,t}_{m,n,p}: as [`double_broom`] but one left leaf hangs at the end of a
/// chain of s extra vertices, and one right leaf at the end of t extra ones.
pub fn subdivided_double_broom(params: SubdividedParams) -> Result<Graph, Error> {
    let (m, n, p) = (params.base.m, params.base.n, params.base.p);
    let (s, t) = (params.s, params.t);
    let mut edges: Vec<(usize, usize)> = (1..p).map(|v| (v - 1, v)).collect();
    let mut next = p;
    let mut attach = |edges: &mut Vec<(usize, usize)>, hub: usize, leaves: usize, subdiv: usize| {
        for _ in 0..leaves.saturating_sub(usize::from(subdiv > 0)) {
            edges.push((hub, next));
            next += 1;
        }
        if subdiv > 0 {
            // hub - c_1 - ... - c_subdiv - leaf
            let mut prev = hub;
            for _ in 0..=subdiv {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    };
    attach(&mut edges, 0, m, s);
    attach(&mut edges, p - 1, n, t);
    Graph::from_edges(m + n + p + s + t, edges)
}

/// The counterexample graphs from the adern upper-bound proofs. G2, G3 and G5
/// include their isolated vertex; G1 does not (callers form G1+K_1 themselves).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Counterexample {
    /// C_4 with m leaves on each of two opposite cycle vertices.
    G1 { m: usize },
    /// C_{p+2} + K_1 with n-1 leaves on one cycle vertex.
    G2 { n: usize, p: usize },
    /// D_{2,n,p} + K_1 with a left leaf joined to the vertex at distance 3.
    G3 { n: usize, p: usize },
    /// C_{p-1} + B_{m,2} with m-1 leaves on one cycle vertex.
    G4 { m: usize, p: usize },
    /// C_{p+1} + K_1 with m leaves on each of two cycle vertices that share a
    /// neighbor.
    G5 { m: usize, p: usize },
}

pub fn counterexample(which: Counterexample) -> Result<Graph, Error> {
    let domain = |what: &str| Err(Error::BadParameters(what.into()));
    match which {
        Counterexample::G1 { m } => {
            if m < 1 {
                return domain("G1 needs m >= 1");
            }
            let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
            edges.extend((0..m).map(|i| (0, 4 + i)));
            edges.extend((0..m).map(|i| (2, 4 + m + i)));
            Graph::from_edges(4 + 2 * m, edges)
        }
        Counterexample::G2 { n, p } => {
            if n < 1 || p < 2 {
                return domain("G2 needs n >= 1 and p >= 2");
            }
            let l = p + 2;
            let mut edges: Vec<(usize, usize)> = (0..l).map(|v| (v, (v + 1) % l)).collect();
            edges.extend((0..n - 1).map(|i| (0, l + 1 + i)));
            Graph::from_edges(l + 1 + (n - 1), edges) // vertex l is the K_1
        }
        Counterexample::G3 { n, p } => {
            if n < 1 || p < 4 {
                return domain("G3 needs n >= 1 and p >= 4");
            }
            let base = double_broom(DoubleBroomParams::new(2, n, p)?)?;
            let mut g = base.disjoint_union(&Graph::empty(1)?)?;
            // left leaf p sits at distance 3 from path vertex 2
            g.add_edge(p, 2)?;
            Ok(g)
        }
        Counterexample::G4 { m, p } => {
            if m < 1 || p < 4 {
                return domain("G4 needs m >= 1 and p >= 4");
            }
            let l = p - 1;
            let mut edges: Vec<(usize, usize)> = (0..l).map(|v| (v, (v + 1) % l)).collect();
            // B_{m,2}: path (l, l+1) with m leaves on vertex l
            edges.push((l, l + 1));
            edges.extend((0..m).map(|i| (l, l + 2 + i)));
            edges.extend((0..m - 1).map(|i| (0, l + 2 + m + i)));
            Graph::from_edges(l + m + 2 + (m - 1), edges)
        }
        Counterexample::G5 { m, p } => {
            if m < 1 || p < 2 {
                return domain("G5 needs m >= 1 and p >= 2");
            }
            let l = p + 1;
            let mut edges: Vec<(usize, usize)> = (0..l).map(|v| (v, (v + 1) % l)).collect();
            // cycle vertices 0 and 2 share the neighbor 1; vertex l is the K_1
            edges.extend((0..m).map(|i| (0, l + 1 + i)));
            edges.extend((0..m).map(|i| (2, l + 1 + m + i)));
            Graph::from_edges(l + 1 + 2 * m, edges)
        }
    }
}

/// Parses the family mini-language: terms `dbroom:m,n,p`, `sdbroom:m,n,p,s,t`,
/// `broom:m,a`, `cycle:l`, `path:p`, `star:m`, `k1`, `g1:m`, `g2:n,p`,
/// `g3:n,p`, `g4:m,p`, `g5:m,p`, joined by `+` for disjoint unions.
/// Whitespace is ignored.
pub fn parse_family(spec: &str) -> Result<Graph, Error> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |reason: String| Error::BadSpec {
        spec: spec.to_string(),
        reason,
    };
    if compact.is_empty() {
        return Err(bad("empty spec".into()));
    }
    let mut graph = Graph::empty(0)?;
    for term in compact.split('+') {
        let (name, args) = match term.split_once(':') {
            Some((name, rest)) => {
                let args = rest
                    .split(',')
                    .map(|a| {
                        a.parse::<usize>()
                            .map_err(|_| bad(format!("bad number {a:?}")))
                    })
                    .collect::<Result<Vec<usize>, Error>>()?;
                (name, args)
            }
            None => (term, Vec::new()),
        };
        let wrong_arity = |want: usize| bad(format!("{name} takes {want} argument(s)"));
        let next = match (name, args.as_slice()) {
            ("dbroom", &[m, n, p]) => double_broom(DoubleBroomParams::new(m, n, p)?)?,
            ("dbroom", _) => return Err(wrong_arity(3)),
            ("sdbroom", &[m, n, p, s, t]) => {
                subdivided_double_broom(SubdividedParams::new(m, n, p, s, t)?)?
            }
            ("sdbroom", _) => return Err(wrong_arity(5)),
            ("broom", &[m, a]) => broom(m, a)?,
            ("broom", _) => return Err(wrong_arity(2)),
            ("cycle", &[l]) => cycle(l)?,
            ("cycle", _) => return Err(wrong_arity(1)),
            ("path", &[p]) => path(p)?,
            ("path", _) => return Err(wrong_arity(1)),
            ("star", &[m]) => star(m)?,
            ("star", _) => return Err(wrong_arity(1)),
            ("k1", &[]) => Graph::empty(1)?,
            ("k1", _) => return Err(wrong_arity(0)),
            ("g1", &[m]) => counterexample(Counterexample::G1 { m })?,
            ("g1", _) => return Err(wrong_arity(1)),
            ("g2", &[n, p]) => counterexample(Counterexample::G2 { n, p })?,
            ("g3", &[n, p]) => counterexample(Counterexample::G3 { n, p })?,
            ("g4", &[m, p]) => counterexample(Counterexample::G4 { m, p })?,
            ("g5", &[m, p]) => counterexample(Counterexample::G5 { m, p })?,
            ("g2" | "g3" | "g4" | "g5", _) => return Err(wrong_arity(2)),
            _ => {
                return Err(bad(format!("unknown family {name:?}")));
            }
        };
        graph = graph.disjoint_union(&next)?;
    }
    Ok(graph)
}

/// Parses either a family spec or a raw graph6 string. Family syntax is tried
/// first; a term that is no known family falls through to graph6 (the alphabets
/// cannot collide: ':', '+' and digits are outside the graph6 byte range).
pub fn parse_spec(spec: &str) -> Result<Graph, Error> {
    match parse_family(spec) {
        Ok(g) => Ok(g),
        Err(family_err) => {
            let looks_like_family = spec.contains(':') || spec.contains('+') || spec.trim() == "k1";
            if looks_like_family {
                return Err(family_err);
            }
            graph6::decode(spec.trim()).map_err(|g6_err| Error::BadSpec {
                spec: spec.to_string(),
                reason: format!("neither a family ({family_err}) nor graph6 ({g6_err})"),
            })
        }
    }
}
