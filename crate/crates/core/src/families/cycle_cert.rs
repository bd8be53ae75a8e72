//! Arithmetic certificates for odd cycles in the complement of a character graph.
//!
//! A certificate names a prime `u` of the cycle and an exponent `alpha` such
//! that, walking the cycle from `u`, the remaining primes alternate between odd
//! divisors of `u^alpha + 1` and odd divisors of `u^alpha - 1`. Only this
//! divisibility pattern is checked; nothing is claimed about a group.

use serde::{Deserialize, Serialize};

use super::Psl2Spec;
use crate::arith::{checked_pow, Integer};
use crate::degrees::PrimeSetOf;
use crate::error::{Error, Result};
use crate::graph::PrimeGraphOf;

/// Largest exponent tried when no `(p, m)` hint is given.
pub const ALPHA_SEARCH_BOUND: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupVariant {
    #[serde(rename = "SL2")]
    Sl2,
    #[serde(rename = "PSL2")]
    Psl2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Psl2CycleCertificate<T: Integer> {
    pi: PrimeSetOf<T>,
    u: T,
    alpha: u32,
    variant: GroupVariant,
    ordering: Vec<T>,
}

impl<T: Integer> Psl2CycleCertificate<T> {
    /// Checks the structural invariants: `|pi|` odd and at least 3, `u` in
    /// `pi`, `alpha >= 1`, and `ordering` a rearrangement of `pi - {u}`.
    /// Divisibility is left to [`check_cycle_certificate`].
    pub fn new(
        pi: PrimeSetOf<T>,
        u: T,
        alpha: u32,
        variant: GroupVariant,
        ordering: Vec<T>,
    ) -> Result<Self> {
        if pi.len() < 3 || pi.len().is_multiple_of(2) {
            return Err(Error::Validation(format!(
                "|pi| = {} is not odd and >= 3",
                pi.len()
            )));
        }
        if !pi.contains(u) {
            return Err(Error::Validation(format!("u = {u} is not in pi = {pi}")));
        }
        if alpha == 0 {
            return Err(Error::Validation("alpha must be positive".into()));
        }
        let mut sorted = ordering.clone();
        sorted.sort();
        if sorted != pi.without(u).to_vec() {
            return Err(Error::Validation(format!(
                "ordering {ordering:?} is not an arrangement of pi - {{{u}}}"
            )));
        }
        Ok(Psl2CycleCertificate {
            pi,
            u,
            alpha,
            variant,
            ordering,
        })
    }

    pub fn pi(&self) -> &PrimeSetOf<T> {
        &self.pi
    }

    pub fn u(&self) -> T {
        self.u
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn variant(&self) -> GroupVariant {
        self.variant
    }

    pub fn ordering(&self) -> &[T] {
        &self.ordering
    }
}

/// True iff the ordering alternates between odd divisors of `u^alpha + 1` and
/// odd divisors of `u^alpha - 1`, in either phase. The ordering has even
/// length, so the alternation closes around `u`.
pub fn check_cycle_certificate<T: Integer>(cert: &Psl2CycleCertificate<T>) -> bool {
    let two = T::from(2u8).unwrap();
    let Some(power) = checked_pow(cert.u, cert.alpha) else {
        return false;
    };
    let Some(plus) = power.checked_add(&T::one()) else {
        return false;
    };
    let minus = power - T::one();
    if !cert.ordering.len().is_multiple_of(2) || cert.ordering.iter().any(|&r| r % two == T::zero())
    {
        return false;
    }
    let divides = |r: T, n: T| n % r == T::zero();
    let phase = |first: T, second: T| {
        cert.ordering
            .iter()
            .enumerate()
            .all(|(i, &r)| divides(r, if i % 2 == 0 { first } else { second }))
    };
    phase(plus, minus) || phase(minus, plus)
}

/// The vertices of `pi` in cycle order starting at `start`, when the
/// complement of `g` restricted to `pi` is a single cycle.
fn complement_cycle_order<T: Integer>(g: &PrimeGraphOf<T>, pi: &[T], start: T) -> Option<Vec<T>> {
    let c = g.induced(pi).ok()?.complement();
    if c.order() < 3 || c.connected_components().len() != 1 {
        return None;
    }
    if c.vertices().iter().any(|&v| c.neighbors(v).len() != 2) {
        return None;
    }
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = c.neighbors(start)[0];
    while cur != start {
        order.push(cur);
        let next = c.neighbors(cur).into_iter().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// True when `pi` induces a cycle (of any length >= 3) in the complement of `g`.
pub fn is_complement_cycle<T: Integer>(g: &PrimeGraphOf<T>, pi: &[T]) -> bool {
    pi.first()
        .is_some_and(|&s| complement_cycle_order(g, pi, s).is_some())
}

/// The certificate for `(u, alpha)` whose ordering follows the complement
/// cycle on `pi` from `u`, without checking divisibility. `None` when `pi`
/// does not induce a cycle in the complement.
pub fn cycle_certificate_for<T: Integer>(
    g: &PrimeGraphOf<T>,
    pi: &PrimeSetOf<T>,
    u: T,
    alpha: u32,
) -> Result<Option<Psl2CycleCertificate<T>>> {
    let members = pi.to_vec();
    if let Some(bad) = members.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::Domain(format!("{bad} is not a vertex of the graph")));
    }
    if !pi.contains(u) {
        return Err(Error::Domain(format!("u = {u} is not in pi = {pi}")));
    }
    match complement_cycle_order(g, &members, u) {
        Some(order) => Psl2CycleCertificate::new(
            pi.clone(),
            u,
            alpha,
            GroupVariant::Psl2,
            order[1..].to_vec(),
        )
        .map(Some),
        None => Ok(None),
    }
}

/// Searches for a passing certificate for the complement cycle on `pi`.
///
/// With a hint only `(u, alpha) = (p, m)` is tried; otherwise every `u` in
/// `pi` (ascending) with `1 <= alpha <= 64`. The ordering is the cycle order
/// starting next to `u`. Returns `None` when `pi` does not induce a cycle in
/// the complement or no pair passes.
pub fn find_certificate_for_cycle<T: Integer>(
    g: &PrimeGraphOf<T>,
    pi: &PrimeSetOf<T>,
    hint: Option<&Psl2Spec<T>>,
) -> Result<Option<Psl2CycleCertificate<T>>> {
    if pi.len() <= 1 || pi.len().is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "|pi| = {} must be odd and greater than 1",
            pi.len()
        )));
    }
    let members = pi.to_vec();
    if let Some(bad) = members.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::Domain(format!("{bad} is not a vertex of the graph")));
    }
    if !is_complement_cycle(g, &members) {
        return Ok(None);
    }
    let candidates: Vec<(T, u32)> = match hint {
        Some(spec) => vec![(spec.p(), spec.m())],
        None => members
            .iter()
            .flat_map(|&u| (1..=ALPHA_SEARCH_BOUND).map(move |a| (u, a)))
            .collect(),
    };
    for (u, alpha) in candidates {
        if !pi.contains(u) {
            continue;
        }
        let order = complement_cycle_order(g, &members, u).expect("checked above");
        let cert = Psl2CycleCertificate::new(
            pi.clone(),
            u,
            alpha,
            GroupVariant::Psl2,
            order[1..].to_vec(),
        )?;
        if check_cycle_certificate(&cert) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Every odd-size vertex set (size >= 3) inducing a cycle in the complement of `g`.
/// Exhaustive over subsets; intended for the small graphs of the generated families.
pub fn odd_complement_cycles<T: Integer>(g: &PrimeGraphOf<T>) -> Result<Vec<PrimeSetOf<T>>> {
    let n = g.order();
    if n > crate::graph::SOLVER_CAP {
        return Err(Error::capacity("vertex count", n, crate::graph::SOLVER_CAP));
    }
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let k = mask.count_ones();
        if k < 3 || k % 2 == 0 {
            continue;
        }
        let subset: Vec<T> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| g.vertices()[i])
            .collect();
        if is_complement_cycle(g, &subset) {
            out.push(PrimeSetOf::new(subset).expect("vertices are prime"));
        }
    }
    out.sort();
    Ok(out)
}
