//! Reconstruction machinery: rebuilding candidate graphs from a decard by
//! adding one edge of the recorded degree, and enumerating all confusers of a
//! target (non-isomorphic graphs sharing part of its dedeck).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::deck::{Decard, DecardMultiset, Dedeck};
use crate::error::Error;
use crate::graph::Graph;

/// All graphs (up to isomorphism, as canonical representatives sorted by key)
/// obtained from `card` by joining one non-adjacent pair with degree sum `d`.
pub fn extensions(card: &Graph, d: usize) -> Vec<Graph> {
    extensions_keyed(card, d).into_values().collect()
}

fn extensions_keyed(card: &Graph, d: usize) -> BTreeMap<CanonicalForm, Graph> {
    let mut found = BTreeMap::new();
    for u in 0..card.order() {
        for v in u + 1..card.order() {
            if card.has_edge(u, v) || card.degree(u) + card.degree(v) != d {
                continue;
            }
            let mut h = card.clone();
            h.add_edge(u, v).expect("pair checked non-adjacent");
            if let Entry::Vacant(slot) = found.entry(canonical_form(&h)) {
                let canonical = slot.key().to_graph();
                slot.insert(canonical);
            }
        }
    }
    found
}

/// The uniqueness condition behind the one-card reconstruction lemma: the edge
/// e = uv qualifies when d(e) = 0, or when {u, v} is the only non-adjacent
/// pair of G - e whose degrees sum to d(e). A decard whose deleted edge
/// qualifies can only be completed back to G itself.
pub fn lemma1_holds(g: &Graph, e: (usize, usize)) -> Result<bool, Error> {
    let d = g.edge_degree(e.0, e.1)?;
    if d == 0 {
        return Ok(true);
    }
    let card = g.without_edge(e.0, e.1)?;
    let own = (e.0.min(e.1), e.0.max(e.1));
    for u in 0..card.order() {
        for v in u + 1..card.order() {
            if (u, v) != own && !card.has_edge(u, v) && card.degree(u) + card.degree(v) == d {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One confuser: a graph H, not isomorphic to the target, that some decard of
/// the target also reconstructs to. `restriction` lists, per target decard
/// class (in [`ConfuserSet::classes`] order), how many cards of that class H's
/// own dedeck holds; `overlap` is the size of the largest common sub-multiset
/// of the two dedecks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Confuser {
    pub key: CanonicalForm,
    pub overlap: usize,
    pub restriction: Vec<usize>,
}

/// Every confuser of a target graph, with the target's decard classes fixed in
/// sorted order so sub-multisets can be handled as plain count vectors.
#[derive(Clone, Debug)]
pub struct ConfuserSet {
    target: CanonicalForm,
    classes: Vec<(Decard, usize)>,
    members: Vec<Confuser>,
}

impl ConfuserSet {
    pub fn target(&self) -> &CanonicalForm {
        &self.target
    }

    /// The target's decard classes with multiplicities, sorted.
    pub fn classes(&self) -> &[(Decard, usize)] {
        &self.classes
    }

    /// Confusers sorted by canonical key.
    pub fn members(&self) -> &[Confuser] {
        &self.members
    }

    /// Total number of cards in the target's dedeck.
    pub fn total(&self) -> usize {
        self.classes.iter().map(|(_, m)| m).sum()
    }

    /// Converts a sub-multiset of the target's dedeck into a per-class count
    /// vector, rejecting anything that is not contained in the dedeck.
    pub fn count_vector(&self, sub: &DecardMultiset) -> Result<Vec<usize>, Error> {
        let mut counts = vec![0usize; self.classes.len()];
        for (decard, &count) in sub {
            match self.classes.iter().position(|(c, _)| c == decard) {
                Some(i) if count <= self.classes[i].1 => counts[i] = count,
                _ => return Err(Error::NotSubMultiset),
            }
        }
        Ok(counts)
    }

    /// True if no confuser's dedeck contains the given count vector.
    pub fn vector_determines(&self, counts: &[usize]) -> bool {
        self.members.iter().all(|c| {
            counts
                .iter()
                .zip(&c.restriction)
                .any(|(&want, &have)| have < want)
        })
    }

    /// True if the sub-multiset `sub` of the target's dedeck pins down the
    /// target: no confuser's dedeck contains it too.
    pub fn determines(&self, sub: &DecardMultiset) -> Result<bool, Error> {
        Ok(self.vector_determines(&self.count_vector(sub)?))
    }
}

/// Enumerates all confusers of `g`: every graph on the same vertex count that
/// shares at least one decard with `g` arises as a one-edge extension of one
/// of `g`'s own cards, so walking extensions of every class finds them all.
pub fn confusers(g: &Graph) -> Result<ConfuserSet, Error> {
    let deck = Dedeck::of(g)?;
    let target = canonical_form(g);
    let classes: Vec<(Decard, usize)> = deck.iter().map(|(d, m)| (d.clone(), m)).collect();
    let mut members: BTreeMap<CanonicalForm, Confuser> = BTreeMap::new();
    for (decard, _) in &classes {
        let card = decard.card.to_graph();
        for (key, h) in extensions_keyed(&card, decard.missing_degree) {
            if key == target || members.contains_key(&key) {
                continue;
            }
            let hdeck = Dedeck::of(&h)?;
            let restriction: Vec<usize> =
                classes.iter().map(|(c, _)| hdeck.multiplicity(c)).collect();
            let overlap: usize = classes
                .iter()
                .zip(&restriction)
                .map(|((_, m), r)| m.min(r))
                .sum();
            debug_assert!(overlap >= 1, "extension of a card must share that card");
            members.insert(
                key.clone(),
                Confuser {
                    key,
                    overlap,
                    restriction,
                },
            );
        }
    }
    Ok(ConfuserSet {
        target,
        classes,
        members: members.into_values().collect(),
    })
}
