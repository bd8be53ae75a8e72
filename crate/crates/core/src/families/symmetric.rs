//! Degrees of the symmetric group via the hook length formula.

use crate::arith::Integer;
use crate::degrees::DegreeSetOf;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`sn_degrees`].
pub const MAX_SN: usize = 20;

/// A partition of `n`: a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Validation("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Validation(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&r| r > j).count())
                .collect(),
        )
    }

    /// Hook lengths `arm + leg + 1`, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let cols = self.conjugate();
        let mut out = Vec::with_capacity(self.n());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = cols.0[j] - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// `n! / ∏ hooks`, the dimension of the matching irreducible representation.
    pub fn hook_degree<T: Integer>(&self) -> Result<T> {
        let n = self.n();
        let fact = factorial::<T>(n)?;
        let hooks = self
            .hook_lengths()
            .into_iter()
            .try_fold(T::one(), |acc, h| acc.checked_mul(&T::from(h).unwrap()))
            .expect("hook product divides n!");
        debug_assert!(fact % hooks == T::zero());
        Ok(fact / hooks)
    }
}

pub fn factorial<T: Integer>(n: usize) -> Result<T> {
    (1..=n).try_fold(T::one(), |acc, k| {
        T::from(k)
            .and_then(|k| acc.checked_mul(&k))
            .ok_or_else(|| Error::capacity("n!", format!("{n}!"), T::max_value()))
    })
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `cd(S_n)` for `1 <= n <= 20`, named `S<n>`.
pub fn sn_degrees<T: Integer>(n: usize) -> Result<DegreeSetOf<T>> {
    if n == 0 || n > MAX_SN {
        return Err(Error::capacity("n", n, format!("1..={MAX_SN}")));
    }
    let degrees = partitions(n)
        .iter()
        .map(|p| p.hook_degree::<T>())
        .collect::<Result<Vec<T>>>()?;
    DegreeSetOf::new(format!("S{n}"), degrees)
}
