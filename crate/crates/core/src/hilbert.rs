//! Hilbert functions of Artinian monomial quotients and Macaulay
//! representations of integers.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, MonomialIdeal};

/// `binom(k, i)`, or `None` if it does not fit in a `u128`.
pub fn binomial(k: u64, i: u64) -> Option<u128> {
    if i > k {
        return Some(0);
    }
    let i = i.min(k - i);
    let mut acc: u128 = 1;
    for t in 1..=u128::from(i) {
        // acc * (k - i + t) is divisible by t: it is t * binom(k - i + t, t).
        acc = acc.checked_mul(u128::from(k - i) + t)? / t;
    }
    Some(acc)
}

/// `dim_K S_j = binom(n - 1 + j, j)`; zero for negative `j`.
pub fn hilbert_s(n: usize, j: i64) -> u64 {
    if j < 0 {
        return 0;
    }
    let j = j as u64;
    let v = binomial(n as u64 - 1 + j, j).expect("binomial overflow");
    u64::try_from(v).expect("dim S_j fits in u64")
}

/// `H(S/I, 0), H(S/I, 1), …` up to the last nonzero value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HilbertVector {
    values: Vec<u64>,
}

impl HilbertVector {
    /// Trailing zeros are dropped.
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        Self { values }
    }

    /// `H(S/I, j)`, zero past the end.
    pub fn get(&self, j: usize) -> u64 {
        self.values.get(j).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest degree with a nonzero value.
    pub fn socle_degree(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    /// `dim_K S/I`.
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// `min { j : H(j) <= j }`.
    pub fn threshold(&self) -> usize {
        (0..)
            .find(|&j| self.get(j) <= j as u64)
            .expect("vector is finite")
    }
}

impl From<Vec<u64>> for HilbertVector {
    fn from(values: Vec<u64>) -> Self {
        Self::new(values)
    }
}

impl fmt::Display for HilbertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Hilbert function of `S/I` by counting standard monomials degree by degree.
pub fn hilbert_function(ideal: &MonomialIdeal) -> Result<HilbertVector> {
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let n = ideal.num_vars();
    let mut values = Vec::new();
    for j in 0.. {
        let count = monomials_of_degree(n, j)
            .iter()
            .filter(|u| !ideal.contains(u))
            .count() as u64;
        if count == 0 {
            break;
        }
        values.push(count);
    }
    Ok(HilbertVector::new(values))
}

/// `a = binom(k(d), d) + … + binom(k(1), 1)` with `k(d) > … > k(1) >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub value: u64,
    pub degree: usize,
    /// `k(d), k(d-1), …, k(1)`.
    pub coefficients: Vec<u64>,
}

impl MacaulayRep {
    /// `Σ binom(k(i), i)`.
    pub fn evaluate(&self) -> u128 {
        self.terms()
            .map(|(k, i)| binomial(k, i).expect("binomial overflow"))
            .sum()
    }

    /// `a^[d] = Σ binom(k(i) - 1, i - 1)`, zero whenever `k(i) - 1 < i - 1`.
    pub fn lower(&self) -> u64 {
        let sum: u128 = self
            .terms()
            .filter(|&(k, _)| k > 0)
            .map(|(k, i)| binomial(k - 1, i - 1).expect("binomial overflow"))
            .sum();
        u64::try_from(sum).expect("a^[d] <= a")
    }

    /// `a^<d> = Σ binom(k(i) + 1, i + 1)`, the largest possible next value
    /// of a Hilbert function that takes the value `a` in degree `d`.
    pub fn upper(&self) -> Option<u64> {
        self.terms()
            .try_fold(0u128, |acc, (k, i)| {
                acc.checked_add(binomial(k + 1, i + 1)?)
            })
            .and_then(|s| u64::try_from(s).ok())
    }

    fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.coefficients
            .iter()
            .zip((1..=self.degree as u64).rev())
            .map(|(&k, i)| (k, i))
    }
}

/// Greedy `d`-th Macaulay representation of `a`.
pub fn macaulay_rep(a: u64, d: usize) -> MacaulayRep {
    assert!(d >= 1, "Macaulay representation needs d >= 1");
    let mut rest = u128::from(a);
    let mut coefficients = Vec::with_capacity(d);
    for i in (1..=d as u64).rev() {
        let k = largest_k_with_binomial_at_most(i, rest);
        rest -= binomial(k, i).expect("bounded by rest");
        coefficients.push(k);
    }
    debug_assert_eq!(rest, 0);
    MacaulayRep {
        value: a,
        degree: d,
        coefficients,
    }
}

/// `max { k : binom(k, i) <= bound }`; at least `i - 1` since `binom(i-1, i) = 0`.
fn largest_k_with_binomial_at_most(i: u64, bound: u128) -> u64 {
    if i == 1 {
        return u64::try_from(bound).expect("bound comes from a u64");
    }
    let fits = |k: u64| binomial(k, i).is_some_and(|b| b <= bound);
    let mut lo = i - 1;
    let mut step = 1u64;
    while fits(lo + step) {
        lo += step;
        step *= 2;
    }
    // fits(lo) and !fits(lo + step)
    let mut hi = lo + step;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `a^<d>`, or `None` past `u64::MAX`.
pub fn macaulay_upper(a: u64, d: usize) -> Option<u64> {
    macaulay_rep(a, d).upper()
}

/// `a^[d]`.
pub fn macaulay_lower(a: u64, d: usize) -> u64 {
    macaulay_rep(a, d).lower()
}
