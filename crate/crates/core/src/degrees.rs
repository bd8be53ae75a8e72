//! Character-degree sets and the prime graph they induce.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{distinct_prime_factors, Integer};
use crate::error::{Error, Result};
use crate::graph::PrimeGraphOf;

/// A set of primes, ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSetOf<T: Integer>(BTreeSet<T>);

impl<T: Integer> PrimeSetOf<T> {
    /// Rejects non-prime members.
    pub fn new(primes: impl IntoIterator<Item = T>) -> Result<Self> {
        let set: BTreeSet<T> = primes.into_iter().collect();
        if let Some(bad) = set.iter().find(|&&p| !crate::arith::is_prime(p)) {
            return Err(Error::Validation(format!("{bad} is not prime")));
        }
        Ok(PrimeSetOf(set))
    }

    pub fn iter(&self) -> impl Iterator<Item = T> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: T) -> bool {
        self.0.contains(&p)
    }

    pub fn to_vec(&self) -> Vec<T> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        PrimeSetOf(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        PrimeSetOf(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        PrimeSetOf(self.0.difference(&other.0).copied().collect())
    }

    pub fn without(&self, p: T) -> Self {
        let mut s = self.0.clone();
        s.remove(&p);
        PrimeSetOf(s)
    }
}

impl<T: Integer> fmt::Display for PrimeSetOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// The distinct primes dividing `n`; empty for `n = 1`.
pub fn prime_support<T: Integer>(n: T) -> PrimeSetOf<T> {
    PrimeSetOf(distinct_prime_factors(n).into_iter().collect())
}

/// A named set of character degrees: nonempty, positive, deduplicated, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSetOf<T: Integer> {
    name: String,
    degrees: Vec<T>,
}

impl<T: Integer> DegreeSetOf<T> {
    pub fn new(name: impl Into<String>, degrees: impl IntoIterator<Item = T>) -> Result<Self> {
        let set: BTreeSet<T> = degrees.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Validation("degree set is empty".into()));
        }
        if set.contains(&T::zero()) {
            return Err(Error::Validation(
                "degree 0 is not a character degree".into(),
            ));
        }
        Ok(DegreeSetOf {
            name: name.into(),
            degrees: set.into_iter().collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degrees(&self) -> &[T] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// True for `{1}`, the only degree set an abelian group can have.
    pub fn is_trivial(&self) -> bool {
        self.degrees == [T::one()]
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// ρ: every prime dividing some degree.
    pub fn rho(&self) -> PrimeSetOf<T> {
        PrimeSetOf(
            self.degrees
                .iter()
                .flat_map(|&d| distinct_prime_factors(d))
                .collect(),
        )
    }

    /// Δ: vertices ρ, with `p ~ q` iff `pq` divides some degree.
    pub fn character_graph(&self) -> PrimeGraphOf<T> {
        let mut g = PrimeGraphOf::empty(self.rho().iter());
        for &d in &self.degrees {
            let support = distinct_prime_factors(d);
            for (k, &p) in support.iter().enumerate() {
                for &q in &support[k + 1..] {
                    let (i, j) = (g.index_of(p).unwrap(), g.index_of(q).unwrap());
                    g.link(i, j);
                }
            }
        }
        g
    }

    /// A degree divisible by `p * q`, if any.
    pub fn edge_witness(&self, p: T, q: T) -> Option<T> {
        let pq = p.checked_mul(&q)?;
        self.degrees.iter().copied().find(|&d| d % pq == T::zero())
    }

    /// `{ x * y }` over all pairs; the degree set of a direct product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let mut out = BTreeSet::new();
        for &x in &self.degrees {
            for &y in &other.degrees {
                let xy = x.checked_mul(&y).ok_or_else(|| {
                    Error::capacity("degree product", format!("{x} * {y}"), T::max_value())
                })?;
                out.insert(xy);
            }
        }
        Self::new(format!("{}x{}", self.name, other.name), out)
    }
}

impl<T: Integer> fmt::Display for DegreeSetOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{}: {{{}}}", self.name, items.join(","))
    }
}

pub fn rho<T: Integer>(d: &DegreeSetOf<T>) -> PrimeSetOf<T> {
    d.rho()
}

pub fn character_graph<T: Integer>(d: &DegreeSetOf<T>) -> PrimeGraphOf<T> {
    d.character_graph()
}

pub fn product_degrees<T: Integer>(
    a: &DegreeSetOf<T>,
    b: &DegreeSetOf<T>,
) -> Result<DegreeSetOf<T>> {
    a.product(b)
}

/// The product graph assembled from its factors: the complete graph on the
/// shared primes `F`, joined with each factor's graph restricted to its
/// primes outside `F`.
pub fn join_formula<T: Integer>(g: &PrimeGraphOf<T>, h: &PrimeGraphOf<T>) -> PrimeGraphOf<T> {
    let shared: Vec<T> = g
        .vertices()
        .iter()
        .copied()
        .filter(|&v| h.contains(v))
        .collect();
    let g_rest: Vec<T> = g
        .vertices()
        .iter()
        .copied()
        .filter(|v| !shared.contains(v))
        .collect();
    let h_rest: Vec<T> = h
        .vertices()
        .iter()
        .copied()
        .filter(|v| !shared.contains(v))
        .collect();
    let core = PrimeGraphOf::empty(shared.iter().copied()).complement();
    let left = g.induced(&g_rest).expect("residual lies inside g");
    let right = h.induced(&h_rest).expect("residual lies inside h");
    core.join(&left)
        .and_then(|j| j.join(&right))
        .expect("shared and residual vertex sets are disjoint by construction")
}

/// [`join_formula`] applied to the character graphs of two degree sets.
pub fn join_formula_graph<T: Integer>(a: &DegreeSetOf<T>, b: &DegreeSetOf<T>) -> PrimeGraphOf<T> {
    join_formula(&a.character_graph(), &b.character_graph())
}
