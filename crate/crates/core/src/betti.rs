//! Graded Betti numbers of stable ideals and the socle of `S/I`.
//!
//! The Eliahou–Kervaire formula gives the whole table for stable ideals;
//! the socle route gives only the last column `β_{n-1,·}` but works for
//! every m-primary monomial ideal.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hilbert::{binomial, hilbert_function};
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal};

/// `β_{i,j}(I)` keyed by homological index `i` and internal degree `j`.
/// Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    num_vars: usize,
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            entries: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// `β_{i,j}`.
    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_{i,i+row}`, i.e. the entry shown in row `row`, column `i` of the diagram.
    pub fn get_shifted(&self, i: usize, row: u64) -> u64 {
        self.get(i, i as u64 + row)
    }

    pub fn add(&mut self, i: usize, j: u64, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    /// Nonzero entries `((i, j), β_{i,j})` ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Row indices `j - i` that carry a nonzero entry.
    pub fn rows(&self) -> Vec<u64> {
        let mut rows: Vec<u64> = self.entries.keys().map(|&(i, j)| j - i as u64).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    /// Column `i` as a map from row to `β_{i,i+row}`.
    pub fn column(&self, i: usize) -> BTreeMap<u64, u64> {
        self.entries
            .iter()
            .filter(|(&(ii, _), _)| ii == i)
            .map(|(&(_, j), &v)| (j - i as u64, v))
            .collect()
    }

    /// Diagram with rows `j` and columns `i = 0..n-1`, `-` for zero:
    ///
    /// ```text
    ///    0 1 2
    /// 2: 2 1 -
    /// 3: 2 3 1
    /// ```
    pub fn diagram(&self) -> String {
        let rows = self.rows();
        let cols = self.num_vars.max(1);
        let cell = |row: u64, i: usize| match self.get_shifted(i, row) {
            0 => "-".to_owned(),
            v => v.to_string(),
        };
        let label_width = rows.iter().map(|r| r.to_string().len()).max().unwrap_or(1) + 1;
        let widths: Vec<usize> = (0..cols)
            .map(|i| {
                rows.iter()
                    .map(|&r| cell(r, i).len())
                    .chain(std::iter::once(i.to_string().len()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:label_width$}", "");
        for (i, w) in widths.iter().enumerate() {
            let _ = write!(out, " {i:>w$}");
        }
        out.push('\n');
        for &r in &rows {
            let _ = write!(out, "{:>label_width$}", format!("{r}:"));
            for (i, w) in widths.iter().enumerate() {
                let _ = write!(out, " {:>w$}", cell(r, i));
            }
            out.push('\n');
        }
        out
    }
}

/// Eliahou–Kervaire: `β_{i,i+j}(I) = Σ_{u ∈ G(I)_j} binom(m(u) - 1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_stable() {
        return Err(Error::NotStable(format!(
            "the Eliahou-Kervaire formula needs a stable ideal, got {ideal}"
        )));
    }
    let mut table = BettiTable::new(ideal.num_vars());
    for u in ideal.gens() {
        let m = u.max_var() as u64;
        for i in 0..m {
            let b = binomial(m - 1, i).expect("small binomial");
            table.add(i as usize, i + u.degree(), b as u64);
        }
    }
    Ok(table)
}

/// Monomial basis of `Soc(S/I) = { f : x_i f ∈ I for all i }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleBasis {
    pub monomials: Vec<Monomial>,
    /// `dim Soc(S/I)_j` for `j = 0..=socle degree`.
    pub dims: Vec<u64>,
}

impl SocleBasis {
    pub fn dim(&self, j: usize) -> u64 {
        self.dims.get(j).copied().unwrap_or(0)
    }
}

pub fn socle_basis(ideal: &MonomialIdeal) -> Result<SocleBasis> {
    let h = hilbert_function(ideal)?;
    let n = ideal.num_vars();
    let mut monomials = Vec::new();
    let mut dims = vec![0; h.len()];
    for (j, dim) in dims.iter_mut().enumerate() {
        for u in monomials_of_degree(n, j as u64) {
            if ideal.contains(&u) {
                continue;
            }
            let annihilated = (1..=n).all(|i| u.mul_var(i).is_ok_and(|v| ideal.contains(&v)));
            if annihilated {
                monomials.push(u);
                *dim += 1;
            }
        }
    }
    Ok(SocleBasis { monomials, dims })
}

/// `j ↦ β_{n-1,n+j}(I) = dim Soc(S/I)_j`, nonzero entries only.
pub fn last_betti_column(ideal: &MonomialIdeal) -> Result<BTreeMap<usize, u64>> {
    let socle = socle_basis(ideal)?;
    Ok(socle
        .dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(j, &d)| (j, d))
        .collect())
}

/// The last column of a Betti table, re-keyed by socle degree
/// (`β_{n-1,n+j}` under key `j`).
pub fn last_column_by_socle_degree(table: &BettiTable) -> BTreeMap<usize, u64> {
    let n = table.num_vars();
    table
        .entries()
        .filter(|&((i, _), _)| i + 1 == n)
        .map(|((_, j), v)| ((j - n as u64) as usize, v))
        .collect()
}
