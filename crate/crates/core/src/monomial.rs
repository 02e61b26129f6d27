//! Monomials, monomial ideals and the exchange-closure predicates
//! (stable, strongly stable, Borel-fixed, lexsegment).
//!
//! Variables are numbered `x_1 > x_2 > … > x_n`; internally the exponent of
//! `x_i` lives at index `i - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Polynomial ring `K[x_1, …, x_n]` described by its variable names and the
/// characteristic of `K` (0 or a prime).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    characteristic: u64,
}

impl Ring {
    /// Ring with default variable names `x1, …, xn`.
    pub fn new(n: usize, characteristic: u64) -> Result<Self> {
        Self::with_names((1..=n).map(|i| format!("x{i}")).collect(), characteristic)
    }

    pub fn with_names(names: Vec<String>, characteristic: u64) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        Ok(Self {
            names,
            characteristic,
        })
    }

    /// Shorthand for tests and examples: names given as one string, e.g. `"x y z"`.
    pub fn named(names: &str, characteristic: u64) -> Result<Self> {
        Self::with_names(
            names.split_whitespace().map(str::to_owned).collect(),
            characteristic,
        )
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Same variables, different characteristic.
    pub fn with_characteristic(&self, characteristic: u64) -> Result<Self> {
        Self::with_names(self.names.clone(), characteristic)
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.num_vars(), i)
    }

    /// Parses a monomial in this ring from an exponent vector, checking its length.
    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial> {
        if exps.len() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: exps.len(),
            });
        }
        Ok(Monomial::new(exps.to_vec()))
    }

    /// Renders `u` as `x^2*y`, or `1` for the unit monomial.
    pub fn fmt_monomial(&self, u: &Monomial) -> String {
        let parts: Vec<String> = u
            .exponents()
            .iter()
            .zip(&self.names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| {
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_owned()
        } else {
            parts.join("*")
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent vector of a monomial.
///
/// The derived `Ord` is the canonical output order: by degree, then
/// lexicographically descending (`x^2` before `x*y` before `y^2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn unit(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        Self::pure_power(n, i, 1)
    }

    /// `x_i^e`, 1-based.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        assert!((1..=n).contains(&i), "variable index {i} out of 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = e;
        Self { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// `m(u)`: largest index `i` with `x_i | u`; 0 for the unit monomial.
    pub fn max_var(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1)
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// If `u` is a pure power `x_i^e` with `e > 0`, returns `i` (1-based).
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (support.next(), support.next()) {
            (Some((i, _)), None) => Some(i + 1),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// `x_i^t · u`, 1-based.
    pub fn mul_var_pow(&self, i: usize, t: u32) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps[i - 1] = exps[i - 1].checked_add(t).ok_or(Error::Overflow)?;
        Ok(Monomial { exps })
    }

    pub fn mul_var(&self, i: usize) -> Result<Monomial> {
        self.mul_var_pow(i, 1)
    }

    /// `(x_i / x_k)^t · u`, or `None` when `x_k^t` does not divide `u`.
    pub fn exchange(&self, i: usize, k: usize, t: u32) -> Option<Monomial> {
        if self.exps[k - 1] < t {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[k - 1] -= t;
        exps[i - 1] = exps[i - 1].checked_add(t)?;
        Some(Monomial { exps })
    }

    /// Lexicographic order with `x_1 > x_2 > … > x_n`, ignoring degree.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `j` in `n` variables, lexicographically descending.
pub fn monomials_of_degree(n: usize, j: u64) -> Vec<Monomial> {
    fn fill(exps: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = left;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=left).rev() {
            exps[pos] = e;
            fill(exps, pos + 1, left - e, out);
        }
        exps[pos] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let j = u32::try_from(j).expect("degree fits in u32");
    fill(&mut vec![0; n], 0, j, &mut out);
    out
}

/// Which side of `S_j = I_j ⊕ (S/I)_j` a degree basis describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Ideal,
    Quotient,
}

/// Monomial ideal stored through its minimal generating set `G(I)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `monomials`, reduced to `G(I)` and
    /// sorted canonically.
    pub fn minimalize<I>(monomials: I, ring: &Ring) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let n = ring.num_vars();
        let mut all: Vec<Monomial> = Vec::new();
        for u in monomials {
            if u.num_vars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: u.num_vars(),
                });
            }
            all.push(u);
        }
        all.sort();
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::new();
        for u in all {
            // Divisors have degree at most deg(u), so they were seen first.
            if !gens.iter().any(|g| g.divides(&u)) {
                gens.push(u);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            gens,
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(ring: &Ring, exps: &[&[u32]]) -> Result<Self> {
        let monos = exps
            .iter()
            .map(|e| ring.monomial(e))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(monos, ring)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    /// `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// `G(I)_j`.
    pub fn gens_of_degree(&self, j: u64) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == j)
    }

    pub fn max_generator_degree(&self) -> Option<u64> {
        self.gens.last().map(Monomial::degree)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Monomials of degree `j` in `I` or in the complement, lexicographically
    /// descending.
    pub fn degree_basis(&self, j: u64, part: Part) -> Vec<Monomial> {
        let want = part == Part::Ideal;
        monomials_of_degree(self.num_vars(), j)
            .into_iter()
            .filter(|u| self.contains(u) == want)
            .collect()
    }

    /// Some power of every variable lies in `I`.
    pub fn is_m_primary(&self) -> bool {
        let mut seen = vec![false; self.num_vars()];
        for g in &self.gens {
            if g.is_unit() {
                return true;
            }
            if let Some(i) = g.pure_power_var() {
                seen[i - 1] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `(x_i / x_{m(u)}) u ∈ I` for all `u ∈ G(I)`, `i < m(u)`.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            let m = u.max_var();
            (1..m).all(|i| u.exchange(i, m, 1).is_some_and(|v| self.contains(&v)))
        })
    }

    /// `(x_i / x_k) u ∈ I` for all `u ∈ G(I)`, `x_k | u`, `i < k`.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            (1..=self.num_vars())
                .filter(|&k| u.exponent(k) > 0)
                .all(|k| (1..k).all(|i| u.exchange(i, k, 1).is_some_and(|v| self.contains(&v))))
        })
    }

    /// Borel-fixedness in the characteristic of the ideal's ring.
    pub fn is_borel_fixed(&self) -> bool {
        self.is_borel_fixed_in_char(self.ring.characteristic())
    }

    /// Borel-fixedness over a field of characteristic `p`.
    ///
    /// For `p = 0` this is strong stability. For prime `p`, every generator
    /// `u` with `x_k`-exponent `ν` must satisfy `(x_i / x_k)^t u ∈ I` for all
    /// `i < k` and all `1 ≤ t ≤ ν` with `binom(ν, t) ≢ 0 (mod p)`.
    pub fn is_borel_fixed_in_char(&self, p: u64) -> bool {
        if p == 0 {
            return self.is_strongly_stable();
        }
        self.gens.iter().all(|u| {
            (1..=self.num_vars()).all(|k| {
                let nu = u.exponent(k);
                (1..=nu)
                    .filter(|&t| lucas_nonzero(u64::from(nu), u64::from(t), p))
                    .all(|t| (1..k).all(|i| u.exchange(i, k, t).is_some_and(|v| self.contains(&v))))
            })
        })
    }

    /// In every degree up to the largest generator degree, `I_j` is an
    /// initial segment of `S_j` in lexicographic order.
    pub fn is_lexsegment(&self) -> bool {
        let Some(top) = self.max_generator_degree() else {
            return true;
        };
        (0..=top).all(|j| {
            let mut inside = true;
            for u in monomials_of_degree(self.num_vars(), j) {
                let c = self.contains(&u);
                if c && !inside {
                    return false;
                }
                inside = c;
            }
            true
        })
    }
}

/// Lucas: `binom(nu, t) mod p` is nonzero iff every base-`p` digit of `t`
/// is at most the matching digit of `nu`.
fn lucas_nonzero(mut nu: u64, mut t: u64, p: u64) -> bool {
    while t > 0 {
        if t % p > nu % p {
            return false;
        }
        t /= p;
        nu /= p;
    }
    true
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| self.ring.fmt_monomial(g))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
