//! Closed-form Lefschetz criteria: Betti-number conditions for stable
//! ideals, and Hilbert-function conditions for Gotzmann and lexsegment
//! ideals.

use std::fmt;

use crate::betti::{ek_betti, last_betti_column, BettiTable};
use crate::error::{Error, Result};
use crate::hilbert::{binomial, macaulay_lower, HilbertVector};
use crate::lex::lex_ideal_from_hilbert;
use crate::monomial::{MonomialIdeal, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// `β_{n-1,n-1+j} = β_{0,j}` for all `j > d`.
    CwlB,
    /// `β_{i,i+j} = binom(n-1, i) β_{0,j}` for all `j > d` and all `i`.
    CwlC,
    /// `m(u) = n` for every generator of degree `> d`.
    Star,
    /// `H(j)^[j] = H(j-1)` for `0 < j < t`.
    GotzmannWlp,
    /// `H(1) <= 2`, or `H(t) <= 2` together with the Gotzmann chain.
    LexSlp,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::CwlB => "betti (b)",
            Criterion::CwlC => "betti (c)",
            Criterion::Star => "generators (*)",
            Criterion::GotzmannWlp => "gotzmann chain",
            Criterion::LexSlp => "lex strong",
        })
    }
}

/// One violated equation: at `index` (a degree), optionally in `column`
/// (a homological index), `lhs` differs from `rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub column: Option<usize>,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub holds: bool,
    /// `min { j : β_{n-1,n-1+j} > 0 }` for the Betti criteria.
    pub d: Option<usize>,
    /// `min { j : H(j) <= j }` for the Hilbert criteria.
    pub t: Option<usize>,
    pub failures: Vec<Failure>,
}

impl CriterionReport {
    fn from_failures(
        criterion: Criterion,
        d: Option<usize>,
        t: Option<usize>,
        failures: Vec<Failure>,
    ) -> Self {
        Self {
            criterion,
            holds: failures.is_empty(),
            d,
            t,
            failures,
        }
    }
}

/// Which of the three equivalent Betti-side conditions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BettiCondition {
    B,
    C,
    Star,
}

/// Weak Lefschetz for an m-primary stable ideal, read off its graded Betti
/// numbers or its generators.
pub fn cwl_wlp_criterion(ideal: &MonomialIdeal, which: BettiCondition) -> Result<CriterionReport> {
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    if !ideal.is_stable() {
        return Err(Error::NotStable(format!(
            "the Betti criterion is only certified for componentwise linear ideals, and only stable \
             ones can be recognised without generic initial ideals; {ideal} is not stable"
        )));
    }
    let n = ideal.num_vars();
    let table = ek_betti(ideal)?;
    let d = last_column_start(&table, n);
    let d_from_gens = ideal
        .gens()
        .iter()
        .filter(|u| u.max_var() == n)
        .map(|u| u.degree() as usize)
        .min();
    assert_eq!(
        d, d_from_gens,
        "Eliahou-Kervaire last column disagrees with the generators"
    );
    let d = d.expect("an m-primary ideal has a pure power of x_n");
    let top = ideal.max_generator_degree().unwrap_or(0) as usize;

    let failures = match which {
        BettiCondition::B => (d + 1..=top)
            .filter_map(|j| {
                let lhs = table.get_shifted(n - 1, j as u64);
                let rhs = table.get_shifted(0, j as u64);
                (lhs != rhs).then_some(Failure {
                    index: j,
                    column: None,
                    lhs,
                    rhs,
                })
            })
            .collect(),
        BettiCondition::C => (d + 1..=top)
            .flat_map(|j| {
                let table = &table;
                (0..n).filter_map(move |i| {
                    let lhs = table.get_shifted(i, j as u64);
                    let scale = binomial(n as u64 - 1, i as u64).expect("small binomial") as u64;
                    let rhs = scale * table.get_shifted(0, j as u64);
                    (lhs != rhs).then_some(Failure {
                        index: j,
                        column: Some(i),
                        lhs,
                        rhs,
                    })
                })
            })
            .collect(),
        BettiCondition::Star => ideal
            .gens()
            .iter()
            .filter(|u| u.degree() as usize > d && u.max_var() != n)
            .map(|u| Failure {
                index: u.degree() as usize,
                column: None,
                lhs: u.max_var() as u64,
                rhs: n as u64,
            })
            .collect(),
    };
    let criterion = match which {
        BettiCondition::B => Criterion::CwlB,
        BettiCondition::C => Criterion::CwlC,
        BettiCondition::Star => Criterion::Star,
    };
    Ok(CriterionReport::from_failures(
        criterion,
        Some(d),
        None,
        failures,
    ))
}

/// Row of the first nonzero entry in column `n - 1`.
fn last_column_start(table: &BettiTable, n: usize) -> Option<usize> {
    table.column(n - 1).keys().next().map(|&r| r as usize)
}

/// Condition (b) evaluated for any m-primary monomial ideal, with the last
/// Betti column taken from the socle and `β_{0,j} = |G(I)_j|`.
///
/// This only evaluates the equation. Without stability it says nothing
/// about the Lefschetz property.
pub fn condition_b_from_socle(ideal: &MonomialIdeal) -> Result<CriterionReport> {
    let column = last_betti_column(ideal)?;
    // Socle degree s sits in row s + 1.
    let row = |j: usize| {
        j.checked_sub(1)
            .and_then(|s| column.get(&s))
            .copied()
            .unwrap_or(0)
    };
    let d = column.keys().next().map(|&s| s + 1);
    let top = column
        .keys()
        .map(|&s| s + 1)
        .chain(ideal.max_generator_degree().map(|g| g as usize))
        .max()
        .unwrap_or(0);
    let failures = match d {
        None => Vec::new(),
        Some(d) => (d + 1..=top)
            .filter_map(|j| {
                let lhs = row(j);
                let rhs = ideal.gens_of_degree(j as u64).count() as u64;
                (lhs != rhs).then_some(Failure {
                    index: j,
                    column: None,
                    lhs,
                    rhs,
                })
            })
            .collect(),
    };
    Ok(CriterionReport::from_failures(
        Criterion::CwlB,
        d,
        None,
        failures,
    ))
}

/// Rejects vectors that are not the Hilbert function of any Artinian
/// quotient, by attempting the lexsegment construction.
fn ensure_feasible(h: &HilbertVector) -> Result<()> {
    let n = h.get(1).max(1) as usize;
    let ring = Ring::new(n, 0)?;
    lex_ideal_from_hilbert(h, &ring).map(|_| ())
}

fn gotzmann_chain(h: &HilbertVector, t: usize) -> Vec<Failure> {
    (1..t)
        .filter_map(|j| {
            let lhs = macaulay_lower(h.get(j), j);
            let rhs = h.get(j - 1);
            (lhs != rhs).then_some(Failure {
                index: j,
                column: None,
                lhs,
                rhs,
            })
        })
        .collect()
}

/// Weak Lefschetz for an m-primary Gotzmann ideal with Hilbert function `h`.
pub fn gotzmann_wlp_criterion(h: &HilbertVector) -> Result<CriterionReport> {
    ensure_feasible(h)?;
    let t = h.threshold();
    Ok(CriterionReport::from_failures(
        Criterion::GotzmannWlp,
        None,
        Some(t),
        gotzmann_chain(h, t),
    ))
}

/// Strong Lefschetz for the lexsegment ideal with Hilbert function `h`.
pub fn lex_slp_criterion(h: &HilbertVector) -> Result<CriterionReport> {
    ensure_feasible(h)?;
    let t = h.threshold();
    if h.get(1) <= 2 {
        return Ok(CriterionReport::from_failures(
            Criterion::LexSlp,
            None,
            Some(t),
            Vec::new(),
        ));
    }
    let mut failures = Vec::new();
    if h.get(t) > 2 {
        failures.push(Failure {
            index: t,
            column: None,
            lhs: h.get(t),
            rhs: 2,
        });
    }
    failures.extend(gotzmann_chain(h, t));
    Ok(CriterionReport::from_failures(
        Criterion::LexSlp,
        None,
        Some(t),
        failures,
    ))
}
