//! Degree-associated edge decks: the multiset of cards (G - e, d(e)) where
//! d(e) = deg(u) + deg(v) - 2 is the degree of the deleted edge e = uv.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::Error;
use crate::families::DoubleBroomParams;
use crate::graph::Graph;

/// One degree-associated edge card: the edge-deleted graph (vertices kept,
/// canonically labeled) together with the deleted edge's degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Decard {
    pub card: CanonicalForm,
    pub missing_degree: usize,
}

/// A multiset of decards, keyed by card and degree.
pub type DecardMultiset = BTreeMap<Decard, usize>;

/// The full degree-associated edge deck of a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dedeck {
    entries: DecardMultiset,
    source_order: usize,
    source_size: usize,
}

impl Dedeck {
    /// Computes the dedeck of `g`. Errors if `g` has no edges (an empty deck
    /// determines nothing, and the notion is undefined there).
    pub fn of(g: &Graph) -> Result<Self, Error> {
        if g.size() == 0 {
            return Err(Error::EmptyDedeck);
        }
        let mut entries = DecardMultiset::new();
        for (u, v) in g.edges() {
            let decard = Decard {
                card: canonical_form(&g.without_edge(u, v)?),
                missing_degree: g.edge_degree(u, v)?,
            };
            *entries.entry(decard).or_insert(0) += 1;
        }
        Ok(Dedeck {
            entries,
            source_order: g.order(),
            source_size: g.size(),
        })
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn source_size(&self) -> usize {
        self.source_size
    }

    /// Total number of cards (with multiplicity); equals the source size.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// Number of distinct decard classes.
    pub fn class_count(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicity(&self, decard: &Decard) -> usize {
        self.entries.get(decard).copied().unwrap_or(0)
    }

    /// Iterates classes in sorted order as (decard, multiplicity).
    pub fn iter(&self) -> impl Iterator<Item = (&Decard, usize)> {
        self.entries.iter().map(|(d, &m)| (d, m))
    }

    pub fn to_multiset(&self) -> DecardMultiset {
        self.entries.clone()
    }

    /// One line per class: `<graph6> <degree> <multiplicity>`, sorted by card
    /// key and then degree.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (decard, mult) in self.iter() {
            out.push_str(&format!(
                "{} {} {}\n",
                decard.card, decard.missing_degree, mult
            ));
        }
        out
    }
}

/// True if every class of `small` appears in `big` with at least the same
/// multiplicity.
pub fn multiset_contains(big: &Dedeck, small: &DecardMultiset) -> bool {
    small
        .iter()
        .all(|(decard, &count)| big.multiplicity(decard) >= count)
}

/// Size of the largest common sub-multiset of two dedecks.
pub fn multiset_intersection_size(a: &Dedeck, b: &Dedeck) -> usize {
    a.iter()
        .map(|(decard, mult)| mult.min(b.multiplicity(decard)))
        .sum()
}

/// Position of a tree edge: leaf edges touch a degree-1 vertex, middle edges
/// have both endpoints of degree 2, hub edges everything else.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeClass {
    Leaf,
    Middle,
    Hub,
}

/// Classifies an edge of a tree (isolated extra vertices are tolerated).
pub fn classify_edge(g: &Graph, e: (usize, usize)) -> Result<EdgeClass, Error> {
    if !g.is_tree_plus_isolates() {
        return Err(Error::NotATree);
    }
    let d = g.edge_degree(e.0, e.1)?;
    Ok(if g.degree(e.0) == 1 || g.degree(e.1) == 1 {
        EdgeClass::Leaf
    } else if d == 2 {
        EdgeClass::Middle
    } else {
        EdgeClass::Hub
    })
}

/// Number of middle edges of D_{m,n,p}: the p-1 path edges minus the hub
/// edges ({v0,v1} when m >= 2, {v_{p-2},v_{p-1}} when n >= 2, which coincide
/// for p = 2).
pub fn middle_decard_count(params: &DoubleBroomParams) -> usize {
    let (m, n, p) = (params.m(), params.n(), params.p());
    let hubs = if p == 2 {
        usize::from(m + n > 2)
    } else {
        usize::from(m >= 2) + usize::from(n >= 2)
    };
    (p - 1) - hubs
}
