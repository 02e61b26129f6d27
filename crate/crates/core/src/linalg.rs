//! Exact rank and determinant of integer matrices, over `Q` or `GF(p)`.
//!
//! Over `Q` the elimination is fraction-free (Bareiss), first in checked
//! `i128` and, if an intermediate overflows, again in `BigInt`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::is_prime;

/// Coefficient field of the quotient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// `Q` for characteristic 0, `GF(p)` otherwise.
    pub fn of_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(Self::Rationals)
        } else {
            Self::prime(c)
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Self::Rationals => 0,
            Self::Prime(p) => p,
        }
    }

    /// Canonical representative of an integer in this field's prime ring
    /// (identity over `Q`).
    pub fn reduce(self, v: &BigInt) -> BigInt {
        match self {
            Self::Rationals => v.clone(),
            Self::Prime(p) => {
                let p = BigInt::from(p);
                ((v % &p) + &p) % &p
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => write!(f, "Q"),
            Self::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigInt) {
        self.entries[r * self.cols + c] += v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Rank over the given field.
    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Rationals => self.rank_rational(),
            FieldSpec::Prime(p) => self.rank_mod(p),
        }
    }

    pub fn rank_rational(&self) -> usize {
        if let Some(r) = self.partial_monomial_rank(|v| !v.is_zero()) {
            return r;
        }
        self.bareiss().0
    }

    pub fn rank_mod(&self, p: u64) -> usize {
        let pb = BigInt::from(p);
        if let Some(r) = self.partial_monomial_rank(|v| !(v % &pb).is_zero()) {
            return r;
        }
        let mut a: Vec<u64> = self
            .entries
            .iter()
            .map(|v| {
                FieldSpec::Prime(p)
                    .reduce(v)
                    .to_u64()
                    .expect("reduced below p")
            })
            .collect();
        gauss_mod(&mut a, self.rows, self.cols, p)
    }

    /// Determinant over `Z` of a square matrix.
    pub fn determinant(&self) -> BigInt {
        assert!(
            self.is_square(),
            "determinant of a {}x{} matrix",
            self.rows,
            self.cols
        );
        if self.rows == 0 {
            return BigInt::one();
        }
        let (rank, det) = self.bareiss();
        if rank < self.rows {
            BigInt::zero()
        } else {
            det
        }
    }

    /// When every row and every column holds at most one nonzero entry the
    /// rank is the number of nonzero entries. `None` if the shape is denser.
    fn partial_monomial_rank(&self, nonzero: impl Fn(&BigInt) -> bool) -> Option<usize> {
        let mut row_used = vec![false; self.rows];
        let mut count = 0;
        for c in 0..self.cols {
            let mut in_col = 0;
            for (r, used) in row_used.iter_mut().enumerate() {
                if nonzero(self.get(r, c)) {
                    in_col += 1;
                    if in_col > 1 || *used {
                        return None;
                    }
                    *used = true;
                }
            }
            count += in_col;
        }
        Some(count)
    }

    /// `(rank, signed last pivot)`; the pivot is the determinant when the
    /// matrix is square of full rank.
    fn bareiss(&self) -> (usize, BigInt) {
        let small: Option<Vec<i128>> = self.entries.iter().map(ToPrimitive::to_i128).collect();
        if let Some(mut a) = small {
            if let Some((rank, det)) = bareiss_in_place(&mut a, self.rows, self.cols) {
                return (rank, BigInt::from(det));
            }
        }
        let mut a = self.entries.clone();
        bareiss_in_place(&mut a, self.rows, self.cols).expect("BigInt arithmetic cannot overflow")
    }
}

trait Exact: Clone + PartialEq {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn negated(&self) -> Self;
    /// `(a * b - c * d) / e`, exact; `None` on overflow.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn negated(&self) -> Self {
        -self
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let ab = a.checked_mul(*b)?;
        let cd = c.checked_mul(*d)?;
        let diff = ab.checked_sub(cd)?;
        debug_assert_eq!(diff % e, 0);
        Some(diff / e)
    }
}

impl Exact for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let diff = a * b - c * d;
        debug_assert!(Zero::is_zero(&(&diff % e)));
        Some(diff / e)
    }
}

/// Fraction-free row echelon reduction. Returns `(rank, ±last pivot)`.
fn bareiss_in_place<T: Exact>(a: &mut [T], rows: usize, cols: usize) -> Option<(usize, T)> {
    let mut prev = T::unit();
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_nil()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
            negate = !negate;
        }
        let pivot = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let lead = a[i * cols + c].clone();
            // Row i only gets rescaled by pivot / prev; nothing to do when that is 1.
            if lead.is_nil() && pivot == prev {
                continue;
            }
            for j in c + 1..cols {
                let v = T::cross_div(&pivot, &a[i * cols + j], &lead, &a[rank * cols + j], &prev)?;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = T::nil();
        }
        prev = pivot;
        rank += 1;
    }
    let det = if negate { prev.negated() } else { prev };
    Some((rank, det))
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn gauss_mod(a: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(piv * cols + j, rank * cols + j);
        }
        let inv = pow_mod(a[rank * cols + c], p - 2, p);
        for j in c..cols {
            a[rank * cols + j] = mul_mod(a[rank * cols + j], inv, p);
        }
        for i in 0..rows {
            if i == rank {
                continue;
            }
            let f = a[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mul_mod(f, a[rank * cols + j], p);
                a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}
