//! Odd hole and odd antihole search, and perfection through their absence.

use serde::{Deserialize, Serialize};

use super::PrimeGraphOf;
use crate::arith::Integer;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced odd cycle of length at least 5 (hole), or the complement of one (antihole).
///
/// `cycle` lists the vertices in cyclic order; for an antihole the order is
/// the cycle order in the complement graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoleCertificate<T: Integer> {
    pub kind: HoleKind,
    pub cycle: Vec<T>,
}

impl<T: Integer> HoleCertificate<T> {
    pub fn new(kind: HoleKind, cycle: Vec<T>) -> Result<Self> {
        let k = cycle.len();
        if k < 5 || k.is_multiple_of(2) {
            return Err(Error::Validation(format!(
                "certificate cycle length {k} is not an odd number >= 5"
            )));
        }
        let mut sorted = cycle.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != k {
            return Err(Error::Validation(
                "certificate cycle repeats a vertex".into(),
            ));
        }
        Ok(HoleCertificate { kind, cycle })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Replays the certificate: consecutive vertices adjacent, every other pair
    /// non-adjacent, in `g` for a hole and in the complement for an antihole.
    pub fn validates(&self, g: &PrimeGraphOf<T>) -> bool {
        let k = self.cycle.len();
        if k < 5 || k.is_multiple_of(2) || !self.cycle.iter().all(|&v| g.contains(v)) {
            return false;
        }
        let want_edge = self.kind == HoleKind::Hole;
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (self.cycle[i], self.cycle[j]);
                if a == b {
                    return false;
                }
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                let edge = g.has_edge(a, b);
                if consecutive != (edge == want_edge) {
                    return false;
                }
            }
        }
        true
    }
}

struct HoleSearch<'a, T: Integer> {
    g: &'a PrimeGraphOf<T>,
    path: Vec<usize>,
    on_path: Vec<bool>,
}

impl<T: Integer> HoleSearch<'_, T> {
    /// Extends the chordless path `self.path`, whose first vertex is its minimum.
    fn extend(&mut self) -> Option<Vec<usize>> {
        let g = self.g;
        let start = self.path[0];
        let last = *self.path.last().unwrap();
        let k = self.path.len();
        for x in start + 1..g.order() {
            if self.on_path[x] || !g.adjacent_idx(last, x) {
                continue;
            }
            let interior = if k > 2 { &self.path[1..k - 1] } else { &[][..] };
            if interior.iter().any(|&p| g.adjacent_idx(p, x)) {
                continue;
            }
            if k >= 2 && g.adjacent_idx(start, x) {
                // x closes a chordless cycle of length k + 1.
                if k + 1 >= 5 && (k + 1) % 2 == 1 {
                    let mut cycle = self.path.clone();
                    cycle.push(x);
                    return Some(cycle);
                }
                continue;
            }
            self.path.push(x);
            self.on_path[x] = true;
            let found = self.extend();
            self.path.pop();
            self.on_path[x] = false;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn search_hole<T: Integer>(g: &PrimeGraphOf<T>) -> Option<Vec<T>> {
    let n = g.order();
    let mut search = HoleSearch {
        g,
        path: Vec::with_capacity(n),
        on_path: vec![false; n],
    };
    for start in 0..n {
        search.path.clear();
        search.path.push(start);
        search.on_path[start] = true;
        let found = search.extend();
        search.on_path[start] = false;
        if let Some(cycle) = found {
            return Some(cycle.into_iter().map(|i| g.vertices()[i]).collect());
        }
    }
    None
}

/// Some induced odd cycle of length at least 5, if one exists.
///
/// Cycles are enumerated as chordless paths rooted at their smallest vertex,
/// extended in ascending label order; the first odd one found is returned,
/// so the certificate is deterministic. Triangles are never reported.
pub fn find_odd_hole<T: Integer>(g: &PrimeGraphOf<T>) -> Option<HoleCertificate<T>> {
    search_hole(g).map(|cycle| HoleCertificate {
        kind: HoleKind::Hole,
        cycle,
    })
}

/// Some odd antihole of length at least 5: an odd hole of the complement.
pub fn find_odd_antihole<T: Integer>(g: &PrimeGraphOf<T>) -> Option<HoleCertificate<T>> {
    search_hole(&g.complement()).map(|cycle| HoleCertificate {
        kind: HoleKind::Antihole,
        cycle,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Perfection<T: Integer> {
    pub perfect: bool,
    pub certificate: Option<HoleCertificate<T>>,
}

/// Perfection via the absence of odd holes and odd antiholes. Holes are
/// searched first; an imperfect verdict always carries a certificate.
pub fn is_perfect<T: Integer>(g: &PrimeGraphOf<T>) -> Perfection<T> {
    let certificate = find_odd_hole(g).or_else(|| find_odd_antihole(g));
    Perfection {
        perfect: certificate.is_none(),
        certificate,
    }
}
