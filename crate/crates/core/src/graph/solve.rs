//! Exact clique, independence and chromatic numbers by branch and bound on
//! vertex bitmasks, plus the brute-force perfection oracle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::PrimeGraphOf;
use crate::arith::Integer;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the exact solvers.
pub const SOLVER_CAP: usize = 24;

/// Largest vertex count accepted by [`is_perfect_by_definition`].
pub const ORACLE_CAP: usize = 12;

/// Bitmask view of a graph: bit `j` of `adj[i]` is set iff `i ~ j`.
struct Masks {
    n: usize,
    adj: Vec<u32>,
}

impl Masks {
    fn new<T: Integer>(g: &PrimeGraphOf<T>, cap: usize) -> Result<Self> {
        let n = g.order();
        if n > cap {
            return Err(Error::capacity("vertex count", n, cap));
        }
        let adj = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| g.adjacent_idx(i, j))
                    .fold(0u32, |m, j| m | (1 << j))
            })
            .collect();
        Ok(Masks { n, adj })
    }

    fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }
}

fn labels<T: Integer>(g: &PrimeGraphOf<T>, mut mask: u32) -> Vec<T> {
    let mut out = Vec::new();
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        out.push(g.vertices()[i]);
        mask &= mask - 1;
    }
    out
}

fn grow_clique(m: &Masks, current: u32, candidates: u32, best: &mut u32) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    let mut cand = candidates;
    while cand != 0 {
        if current.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u32 << v;
        grow_clique(m, current | bit, cand & m.adj[v], best);
        cand &= !bit;
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

fn max_clique_mask(m: &Masks) -> u32 {
    let mut best = 0;
    grow_clique(m, 0, m.all(), &mut best);
    best
}

/// A maximum clique, as ascending labels.
pub fn maximum_clique<T: Integer>(g: &PrimeGraphOf<T>) -> Result<Vec<T>> {
    let m = Masks::new(g, SOLVER_CAP)?;
    Ok(labels(g, max_clique_mask(&m)))
}

/// ω(g). The graph with no vertices has clique number 0.
pub fn clique_number<T: Integer>(g: &PrimeGraphOf<T>) -> Result<usize> {
    maximum_clique(g).map(|c| c.len())
}

pub fn maximum_independent_set<T: Integer>(g: &PrimeGraphOf<T>) -> Result<Vec<T>> {
    maximum_clique(&g.complement())
}

/// α(g), computed as ω of the complement.
pub fn independence_number<T: Integer>(g: &PrimeGraphOf<T>) -> Result<usize> {
    clique_number(&g.complement())
}

/// An optimal proper coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringResult<T: Integer> {
    pub chi: usize,
    pub assignment: BTreeMap<T, usize>,
}

impl<T: Integer> ColoringResult<T> {
    /// Checks that the assignment covers `g`, is proper, and uses exactly `chi` colors.
    /// Minimality is not re-derived here.
    pub fn is_proper_for(&self, g: &PrimeGraphOf<T>) -> bool {
        let covers = self.assignment.len() == g.order()
            && g.vertices().iter().all(|v| self.assignment.contains_key(v));
        let proper = g
            .edges()
            .iter()
            .all(|(a, b)| self.assignment.get(a) != self.assignment.get(b));
        let mut used: Vec<usize> = self.assignment.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        let exact = used.len() == self.chi && used.iter().all(|&c| c < self.chi);
        covers && proper && exact
    }
}

struct Colorer<'a> {
    m: &'a Masks,
    order: Vec<usize>,
    colors: Vec<usize>,
    k: usize,
}

impl Colorer<'_> {
    // `used` colors so far; a new vertex may take any of them or the next fresh one.
    fn place(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let mut forbidden = 0u32;
        for &u in &self.order[..pos] {
            if self.m.adj[v] & (1 << u) != 0 {
                forbidden |= 1 << self.colors[u];
            }
        }
        for c in 0..(used + 1).min(self.k) {
            if forbidden & (1 << c) == 0 {
                self.colors[v] = c;
                if self.place(pos + 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
}

/// χ(g) with a witnessing coloring. Colors are numbered in order of first use
/// over ascending labels.
pub fn chromatic_number<T: Integer>(g: &PrimeGraphOf<T>) -> Result<ColoringResult<T>> {
    let m = Masks::new(g, SOLVER_CAP)?;
    if m.n == 0 {
        return Ok(ColoringResult {
            chi: 0,
            assignment: BTreeMap::new(),
        });
    }
    // Start from a maximum clique so the lower bound is placed first.
    let clique = max_clique_mask(&m);
    let mut order: Vec<usize> = (0..m.n).filter(|&v| clique & (1 << v) != 0).collect();
    let mut rest: Vec<usize> = (0..m.n).filter(|&v| clique & (1 << v) == 0).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(m.adj[v].count_ones()));
    order.extend(rest);

    let mut k = clique.count_ones() as usize;
    loop {
        let mut colorer = Colorer {
            m: &m,
            order: order.clone(),
            colors: vec![0; m.n],
            k,
        };
        if colorer.place(0, 0) {
            return Ok(ColoringResult {
                chi: k,
                assignment: canonical_assignment(g, &colorer.colors),
            });
        }
        k += 1;
    }
}

fn canonical_assignment<T: Integer>(g: &PrimeGraphOf<T>, colors: &[usize]) -> BTreeMap<T, usize> {
    let mut relabel: Vec<Option<usize>> = vec![None; colors.len()];
    let mut next = 0;
    let mut out = BTreeMap::new();
    for (i, &c) in colors.iter().enumerate() {
        let c = *relabel[c].get_or_insert_with(|| {
            next += 1;
            next - 1
        });
        out.insert(g.vertices()[i], c);
    }
    out
}

/// Perfection straight from the definition: ω = χ on every induced subgraph.
///
/// Both numbers are tabulated over all 2^n vertex subsets by dynamic
/// programming, independently of the branch-and-bound solvers and of the
/// hole search.
pub fn is_perfect_by_definition<T: Integer>(g: &PrimeGraphOf<T>) -> Result<bool> {
    let m = Masks::new(g, ORACLE_CAP)?;
    let size = 1usize << m.n;
    let mut omega = vec![0u8; size];
    let mut independent = vec![true; size];
    let mut chi = vec![0u8; size];
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let nbrs = m.adj[v] as usize;
        omega[s] = omega[rest].max(1 + omega[rest & nbrs]);
        independent[s] = independent[rest] && rest & nbrs == 0;

        // Some color class of an optimal coloring of s contains v.
        let pool = rest & !nbrs;
        let mut best = u8::MAX;
        let mut sub = pool;
        loop {
            let class = sub | (1 << v);
            if independent[class] {
                best = best.min(1 + chi[s & !class]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & pool;
        }
        chi[s] = best;
        if omega[s] != chi[s] {
            return Ok(false);
        }
    }
    Ok(true)
}
