//! The degree-associated edge-reconstruction numbers: dern (fewest decards
//! that pin the graph down) and adern (fewest k such that every k decards do).

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::deck::{Decard, DecardMultiset};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6;
use crate::reconstruct::{confusers, Confuser, ConfuserSet};

/// True if the sub-multiset `sub` of g's dedeck determines g among all graphs
/// of the same order. Errors with [`Error::NotSubMultiset`] if `sub` is not
/// contained in the dedeck.
pub fn determines(g: &Graph, sub: &DecardMultiset) -> Result<bool, Error> {
    confusers(g)?.determines(sub)
}

/// dern(g), the size of a smallest determining sub-multiset of the dedeck.
pub fn dern(g: &Graph) -> Result<usize, Error> {
    Ok(recon_report(g)?.dern)
}

/// adern(g) = 1 + the largest dedeck overlap with any confuser (1 if none).
pub fn adern(g: &Graph) -> Result<usize, Error> {
    Ok(recon_report(g)?.adern)
}

/// The confuser achieving the largest dedeck overlap, or None if g has no
/// confusers at all (then adern = 1). Ties resolve to the smallest canonical
/// key.
pub fn max_overlap(g: &Graph) -> Result<Option<(CanonicalForm, usize)>, Error> {
    let cs = confusers(g)?;
    Ok(best_confuser(&cs).map(|c| (c.key.clone(), c.overlap)))
}

fn best_confuser(cs: &ConfuserSet) -> Option<&Confuser> {
    let mut best: Option<&Confuser> = None;
    for c in cs.members() {
        // strict comparison keeps the first (smallest-key) member among ties
        if best.is_none_or(|b| c.overlap > b.overlap) {
            best = Some(c);
        }
    }
    best
}

/// Both reconstruction numbers of one graph, with certifying witnesses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReconReport {
    pub target: CanonicalForm,
    pub dern: usize,
    pub adern: usize,
    /// A smallest determining sub-multiset, as (decard, count) with count > 0.
    pub witness_determining_set: Vec<(Decard, usize)>,
    /// A confuser of maximum overlap, if any confuser exists.
    pub witness_confuser: Option<(CanonicalForm, usize)>,
}

/// Computes dern, adern and witnesses in one confuser enumeration.
pub fn recon_report(g: &Graph) -> Result<ReconReport, Error> {
    report_from_confusers(&confusers(g)?)
}

/// As [`recon_report`], reusing an already-computed confuser set.
pub fn report_from_confusers(cs: &ConfuserSet) -> Result<ReconReport, Error> {
    let total = cs.total();
    if let Some(bad) = cs.members().iter().find(|c| c.overlap == total) {
        return Err(Error::NotReconstructible {
            confuser: bad.key.to_string(),
        });
    }
    let best = best_confuser(cs);
    let adern = best.map_or(1, |c| c.overlap + 1);
    let witness_confuser = best.map(|c| (c.key.clone(), c.overlap));
    let caps: Vec<usize> = cs.classes().iter().map(|&(_, m)| m).collect();
    let (dern, witness) = (1..=total)
        .find_map(|k| first_determining_vector(cs, &caps, k).map(|v| (k, v)))
        .expect("the full dedeck determines g whenever no overlap is total");
    let witness_determining_set = cs
        .classes()
        .iter()
        .zip(&witness)
        .filter(|&(_, &count)| count > 0)
        .map(|((decard, _), &count)| (decard.clone(), count))
        .collect();
    Ok(ReconReport {
        target: cs.target().clone(),
        dern,
        adern,
        witness_determining_set,
        witness_confuser,
    })
}

/// First (in ascending lexicographic order) count vector of weight `k` within
/// the per-class caps that determines the target, if one exists.
fn first_determining_vector(cs: &ConfuserSet, caps: &[usize], k: usize) -> Option<Vec<usize>> {
    let spare: Vec<usize> = {
        // spare[i] = caps[i] + caps[i+1] + ... ; used to prune short branches
        let mut acc = vec![0; caps.len() + 1];
        for i in (0..caps.len()).rev() {
            acc[i] = acc[i + 1] + caps[i];
        }
        acc
    };
    fn rec(
        cs: &ConfuserSet,
        caps: &[usize],
        spare: &[usize],
        vector: &mut Vec<usize>,
        remaining: usize,
    ) -> bool {
        let i = vector.len();
        if i == caps.len() {
            return remaining == 0 && cs.vector_determines(vector);
        }
        if spare[i] < remaining {
            return false;
        }
        for take in 0..=caps[i].min(remaining) {
            vector.push(take);
            if rec(cs, caps, spare, vector, remaining - take) {
                return true;
            }
            vector.pop();
        }
        false
    }
    let mut vector = Vec::with_capacity(caps.len());
    rec(cs, caps, &spare, &mut vector, k).then_some(vector)
}

/// Serialization shape of a [`ReconReport`]; all graphs as graph6 keys.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ReportWire {
    pub target: String,
    pub dern: usize,
    pub adern: usize,
    pub witness_set: Vec<(String, usize, usize)>,
    pub witness_confuser: Option<(String, usize)>,
}

impl ReconReport {
    pub fn wire(&self) -> ReportWire {
        ReportWire {
            target: self.target.to_string(),
            dern: self.dern,
            adern: self.adern,
            witness_set: self
                .witness_determining_set
                .iter()
                .map(|(d, count)| (d.card.to_string(), d.missing_degree, *count))
                .collect(),
            witness_confuser: self
                .witness_confuser
                .as_ref()
                .map(|(key, overlap)| (key.to_string(), *overlap)),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.wire()).expect("report serializes");
        text.push('\n');
        text
    }

    /// Rebuilds a report from its wire form, re-validating that every graph6
    /// string is a canonical key.
    pub fn from_wire(wire: &ReportWire) -> Result<Self, Error> {
        let recanon = |text: &str| -> Result<CanonicalForm, Error> {
            let key = canonical_form(&graph6::decode(text)?);
            if key.as_str() == text {
                Ok(key)
            } else {
                Err(Error::BadGraph6 {
                    text: text.to_string(),
                    reason: "not a canonical key".into(),
                })
            }
        };
        Ok(ReconReport {
            target: recanon(&wire.target)?,
            dern: wire.dern,
            adern: wire.adern,
            witness_determining_set: wire
                .witness_set
                .iter()
                .map(|(card, degree, count)| {
                    Ok((
                        Decard {
                            card: recanon(card)?,
                            missing_degree: *degree,
                        },
                        *count,
                    ))
                })
                .collect::<Result<_, Error>>()?,
            witness_confuser: wire
                .witness_confuser
                .as_ref()
                .map(|(key, overlap)| Ok((recanon(key)?, *overlap)))
                .transpose()?,
        })
    }
}
