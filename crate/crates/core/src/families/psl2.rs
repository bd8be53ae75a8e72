use std::fmt;

use serde::Serialize;

use crate::arith::{checked_pow, is_power_of_two, prime_power, Integer};
use crate::degrees::{prime_support, PrimeSetOf};
use crate::error::{Error, Result};
use crate::graph::PrimeGraphOf;

/// Parameters of `PSL2(q)` with `q = p^m >= 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Psl2Spec<T: Integer> {
    p: T,
    m: u32,
    q: T,
}

/// Which branch of the structure description a given `q` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Psl2Case {
    /// `q` even: three complete components `{2}`, `π(q-1)`, `π(q+1)`.
    Even,
    /// `q > 5` odd with `q-1` or `q+1` a power of two: `{p}` plus a complete graph on `π(q²-1)`.
    OddComplete,
    /// `q > 5` odd otherwise: `{p}` plus `2` joined to the cliques `M` and `P`.
    OddSplit,
    /// `q = 5`, not covered by the structure description.
    OutsideHypotheses,
}

impl<T: Integer> Psl2Spec<T> {
    pub fn new(q: T) -> Result<Self> {
        let four = T::from(4u8).unwrap();
        if q < four {
            return Err(Error::Domain(format!("q = {q} is below 4")));
        }
        let (p, m) =
            prime_power(q).ok_or_else(|| Error::Domain(format!("q = {q} is not a prime power")))?;
        Ok(Psl2Spec { p, m, q })
    }

    pub fn from_parts(p: T, m: u32) -> Result<Self> {
        let q = checked_pow(p, m)
            .ok_or_else(|| Error::capacity("q = p^m", format!("{p}^{m}"), T::max_value()))?;
        let spec = Self::new(q)?;
        if spec.p != p || spec.m != m {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(spec)
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn case(&self) -> Psl2Case {
        let one = T::one();
        if self.p == T::from(2u8).unwrap() {
            Psl2Case::Even
        } else if self.q == T::from(5u8).unwrap() {
            Psl2Case::OutsideHypotheses
        } else if is_power_of_two(self.q - one) || is_power_of_two(self.q + one) {
            Psl2Case::OddComplete
        } else {
            Psl2Case::OddSplit
        }
    }

    /// `π(q-1)`.
    pub fn minus_primes(&self) -> PrimeSetOf<T> {
        prime_support(self.q - T::one())
    }

    /// `π(q+1)`.
    pub fn plus_primes(&self) -> PrimeSetOf<T> {
        prime_support(self.q + T::one())
    }

    /// `M = π(q-1) - {2}`.
    pub fn odd_minus_primes(&self) -> PrimeSetOf<T> {
        self.minus_primes().without(T::from(2u8).unwrap())
    }

    /// `P = π(q+1) - {2}`.
    pub fn odd_plus_primes(&self) -> PrimeSetOf<T> {
        self.plus_primes().without(T::from(2u8).unwrap())
    }
}

impl<T: Integer> fmt::Display for Psl2Spec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PSL2({})", self.q)
    }
}

fn clique<T: Integer>(primes: &PrimeSetOf<T>) -> PrimeGraphOf<T> {
    PrimeGraphOf::complete(primes.iter()).expect("prime supports are prime")
}

/// The character graph of `PSL2(q)`, assembled case by case from its known
/// component structure rather than from a degree set.
///
/// `q = 5` yields the edgeless graph on `{2, 3, 5}`, the same graph as `q = 4`.
pub fn psl2_graph<T: Integer>(spec: &Psl2Spec<T>) -> PrimeGraphOf<T> {
    let two = PrimeSetOf::new([T::from(2u8).unwrap()]).unwrap();
    let isolated_p = || PrimeGraphOf::edgeless([spec.p()]).unwrap();
    let union = |a: PrimeGraphOf<T>, b: PrimeGraphOf<T>| {
        a.disjoint_union(&b)
            .expect("components are pairwise disjoint")
    };
    match spec.case() {
        Psl2Case::Even => {
            let g = union(clique(&two), clique(&spec.minus_primes()));
            union(g, clique(&spec.plus_primes()))
        }
        Psl2Case::OddComplete => {
            let rest = spec.minus_primes().union(&spec.plus_primes());
            union(isolated_p(), clique(&rest))
        }
        Psl2Case::OddSplit => {
            let sides = union(
                clique(&spec.odd_minus_primes()),
                clique(&spec.odd_plus_primes()),
            );
            let hub = clique(&two).join(&sides).expect("2 lies outside M and P");
            union(isolated_p(), hub)
        }
        Psl2Case::OutsideHypotheses => PrimeGraphOf::edgeless(
            spec.minus_primes()
                .union(&spec.plus_primes())
                .iter()
                .chain([spec.p()]),
        )
        .unwrap(),
    }
}

/// Every prime power `q` with `lo <= q <= hi` and `q >= 4`, ascending.
pub fn prime_powers_in<T: Integer>(lo: T, hi: T) -> Vec<Psl2Spec<T>> {
    let mut out = Vec::new();
    let mut q = lo.max(T::from(4u8).unwrap());
    while q <= hi {
        if let Ok(spec) = Psl2Spec::new(q) {
            out.push(spec);
        }
        if q == T::max_value() {
            break;
        }
        q = q + T::one();
    }
    out
}
