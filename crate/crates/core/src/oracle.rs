//! Ground-truth Lefschetz decisions by exact rank of multiplication maps
//! `(S/I)_j -> (S/I)_{j+k}`, `f ↦ l^k f`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::betti::socle_basis;
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, HilbertVector};
use crate::linalg::{FieldSpec, Matrix};
use crate::monomial::{Monomial, MonomialIdeal, Part, Ring};

/// Upper end of the coefficient range for random linear forms over `Q`.
pub const RATIONAL_COEFFICIENT_BOUND: i64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Weak,
    Strong,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Weak => "weak",
            Mode::Strong => "strong",
        })
    }
}

/// `l = a_1 x_1 + … + a_n x_n` with integer coefficients. Over `Q` this
/// loses nothing, since rank is invariant under scaling `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coefficients: Vec<BigInt>,
}

impl LinearForm {
    pub fn new<T: Into<BigInt>>(coefficients: Vec<T>) -> Self {
        Self {
            coefficients: coefficients.into_iter().map(Into::into).collect(),
        }
    }

    /// `x_i`, 1-based.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut c = vec![0i64; n];
        c[i - 1] = 1;
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    fn validate(&self, n: usize, field: FieldSpec) -> Result<()> {
        if self.coefficients.len() != n {
            return Err(Error::InvalidLinearForm(format!(
                "{} coefficients for {n} variables",
                self.coefficients.len()
            )));
        }
        if self.coefficients.iter().all(|c| field.reduce(c).is_zero()) {
            return Err(Error::InvalidLinearForm(format!(
                "the form is zero over {field}"
            )));
        }
        Ok(())
    }

    /// Renders the form with the ring's variable names, e.g. `x + 2*y - z`.
    pub fn fmt_in(&self, ring: &Ring) -> String {
        let mut out = String::new();
        for (c, name) in self.coefficients.iter().zip(ring.names()) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let term = if mag.is_one() {
                name.clone()
            } else {
                format!("{mag}*{name}")
            };
            if out.is_empty() {
                out = if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                };
            } else {
                out.push_str(&format!(" {sign} {term}"));
            }
        }
        if out.is_empty() {
            "0".to_owned()
        } else {
            out
        }
    }

    /// Expansion of `l^k` as exponent vector ↦ integer coefficient.
    fn power(&self, k: usize) -> BTreeMap<Vec<u32>, BigInt> {
        let n = self.coefficients.len();
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::from([(vec![0; n], BigInt::one())]);
        for _ in 0..k {
            let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            for (e, c) in &acc {
                for (i, a) in self.coefficients.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut f = e.clone();
                    f[i] += 1;
                    *next.entry(f).or_insert_with(BigInt::zero) += c * a;
                }
            }
            acc = next;
        }
        acc
    }
}

/// Rank of one multiplication map against its maximal possible rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapCheck {
    pub source_degree: usize,
    pub power: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl MapCheck {
    pub fn required(&self) -> usize {
        self.source_dim.min(self.target_dim)
    }

    pub fn has_max_rank(&self) -> bool {
        self.rank == self.required()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Confidence {
    Exact,
    /// Failure observed for `trials` random forms; a general form might still work.
    Probabilistic {
        trials: usize,
    },
}

/// How a verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// A caller-supplied linear form.
    GivenElement,
    /// Stable or Borel-fixed ideal: `x_n` decides the property.
    LastVariable,
    /// Random linear forms.
    RandomSearch { trials: usize },
    /// A socle monomial of degree `degree` kills every `l^power` on a map
    /// that would have to be injective.
    SocleObstruction {
        monomial: Monomial,
        degree: usize,
        power: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzVerdict {
    pub holds: bool,
    pub mode: Mode,
    pub field: FieldSpec,
    /// The form whose maps are recorded in `evidence`.
    pub element: Option<LinearForm>,
    /// Every checked `(k, j)` in increasing order of `k`, then `j`.
    pub evidence: Vec<MapCheck>,
    pub confidence: Confidence,
    pub strategy: Strategy,
}

impl LefschetzVerdict {
    /// The lowest `(k, j)` map without maximal rank.
    pub fn first_failure(&self) -> Option<&MapCheck> {
        self.evidence.iter().find(|c| !c.has_max_rank())
    }
}

/// Quotient bases and target lookups for one ideal.
struct QuotientBases {
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl QuotientBases {
    fn new(ideal: &MonomialIdeal, h: &HilbertVector) -> Self {
        let bases: Vec<Vec<Monomial>> = (0..h.len())
            .map(|j| ideal.degree_basis(j as u64, Part::Quotient))
            .collect();
        let index = bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, u)| (u, i)).collect())
            .collect();
        Self { bases, index }
    }

    fn basis(&self, j: usize) -> &[Monomial] {
        self.bases.get(j).map_or(&[], Vec::as_slice)
    }

    fn matrix(
        &self,
        power: &BTreeMap<Vec<u32>, BigInt>,
        j: usize,
        k: usize,
        field: FieldSpec,
    ) -> Matrix {
        let source = self.basis(j);
        let target = self.basis(j + k);
        let mut m = Matrix::zeros(target.len(), source.len());
        if target.is_empty() {
            return m;
        }
        let lookup = &self.index[j + k];
        for (col, u) in source.iter().enumerate() {
            for (e, c) in power {
                let v = u
                    .checked_mul(&Monomial::new(e.clone()))
                    .expect("exponent overflow");
                // Monomials outside the basis lie in I and vanish.
                if let Some(&row) = lookup.get(&v) {
                    m.add_to(row, col, c);
                }
            }
        }
        if let FieldSpec::Prime(_) = field {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let v = field.reduce(m.get(r, c));
                    m.set(r, c, v);
                }
            }
        }
        m
    }
}

/// Matrix of `f ↦ l^k f` from `(S/I)_j` to `(S/I)_{j+k}` in the standard
/// monomial bases (columns: source, rows: target).
pub fn mult_matrix(
    ideal: &MonomialIdeal,
    l: &LinearForm,
    j: usize,
    k: usize,
    field: FieldSpec,
) -> Result<Matrix> {
    let h = hilbert_function(ideal)?;
    l.validate(ideal.num_vars(), field)?;
    let bases = QuotientBases::new(ideal, &h);
    Ok(bases.matrix(&l.power(k), j, k, field))
}

/// The `(k, j)` pairs whose maps decide the property; all others have a
/// zero source or target.
fn degree_pairs(mode: Mode, socle_degree: Option<usize>) -> Vec<(usize, usize)> {
    let Some(top) = socle_degree else {
        return Vec::new();
    };
    let max_k = match mode {
        Mode::Weak => top.min(1),
        Mode::Strong => top,
    };
    (1..=max_k)
        .flat_map(|k| (0..=top - k).map(move |j| (k, j)))
        .collect()
}

fn check_element(
    h: &HilbertVector,
    bases: &QuotientBases,
    l: &LinearForm,
    mode: Mode,
    field: FieldSpec,
) -> (bool, Vec<MapCheck>) {
    let pairs = degree_pairs(mode, h.socle_degree());
    let max_k = pairs.iter().map(|p| p.0).max().unwrap_or(0);
    let powers: Vec<BTreeMap<Vec<u32>, BigInt>> = (0..=max_k).map(|k| l.power(k)).collect();
    let evidence: Vec<MapCheck> = pairs
        .par_iter()
        .map(|&(k, j)| {
            let m = bases.matrix(&powers[k], j, k, field);
            MapCheck {
                source_degree: j,
                power: k,
                source_dim: m.cols(),
                target_dim: m.rows(),
                rank: m.rank(field),
            }
        })
        .collect();
    let holds = evidence.iter().all(MapCheck::has_max_rank);
    (holds, evidence)
}

/// Checks one specific linear form.
pub fn is_lefschetz_element(
    ideal: &MonomialIdeal,
    l: &LinearForm,
    mode: Mode,
    field: FieldSpec,
) -> Result<LefschetzVerdict> {
    let h = hilbert_function(ideal)?;
    l.validate(ideal.num_vars(), field)?;
    let bases = QuotientBases::new(ideal, &h);
    let (holds, evidence) = check_element(&h, &bases, l, mode, field);
    Ok(LefschetzVerdict {
        holds,
        mode,
        field,
        element: Some(l.clone()),
        evidence,
        confidence: Confidence::Exact,
        strategy: Strategy::GivenElement,
    })
}

/// Decides whether `S/I` has the property for a general linear form.
///
/// Stable and Borel-fixed ideals are decided exactly by `x_n`. Otherwise
/// `trials` seeded random forms are tried; a success is a certificate, a
/// failure is exact only when a socle obstruction exists.
pub fn decide_lefschetz(
    ideal: &MonomialIdeal,
    mode: Mode,
    field: FieldSpec,
    trials: usize,
    seed: u64,
) -> Result<LefschetzVerdict> {
    let h = hilbert_function(ideal)?;
    let n = ideal.num_vars();
    let bases = QuotientBases::new(ideal, &h);

    if ideal.is_stable() || ideal.is_borel_fixed_in_char(field.characteristic()) {
        let l = LinearForm::variable(n, n);
        let (holds, evidence) = check_element(&h, &bases, &l, mode, field);
        return Ok(LefschetzVerdict {
            holds,
            mode,
            field,
            element: Some(l),
            evidence,
            confidence: Confidence::Exact,
            strategy: Strategy::LastVariable,
        });
    }
    if trials == 0 {
        return Err(Error::NoTrials);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..trials {
        let l = random_form(&mut rng, n, field);
        let (holds, evidence) = check_element(&h, &bases, &l, mode, field);
        if holds {
            return Ok(LefschetzVerdict {
                holds,
                mode,
                field,
                element: Some(l),
                evidence,
                confidence: Confidence::Exact,
                strategy: Strategy::RandomSearch { trials },
            });
        }
        last = Some((l, evidence));
    }
    let (l, evidence) = last.expect("trials > 0");
    let (confidence, strategy) = match socle_obstruction(ideal, &h, mode)? {
        Some(obstruction) => (Confidence::Exact, obstruction),
        None => (
            Confidence::Probabilistic { trials },
            Strategy::RandomSearch { trials },
        ),
    };
    Ok(LefschetzVerdict {
        holds: false,
        mode,
        field,
        element: Some(l),
        evidence,
        confidence,
        strategy,
    })
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> LinearForm {
    let coefficients: Vec<BigInt> = (0..n)
        .map(|_| match field {
            FieldSpec::Rationals => BigInt::from(rng.gen_range(1..=RATIONAL_COEFFICIENT_BOUND)),
            FieldSpec::Prime(p) => BigInt::from(rng.gen_range(1..p)),
        })
        .collect();
    LinearForm { coefficients }
}

/// A socle monomial `u` of degree `j` below the socle degree satisfies
/// `l^k u ∈ I` for every `l`, so whenever `H(j) <= H(j+k)` the map needs to
/// be injective and never is.
fn socle_obstruction(
    ideal: &MonomialIdeal,
    h: &HilbertVector,
    mode: Mode,
) -> Result<Option<Strategy>> {
    let socle = socle_basis(ideal)?;
    let pairs = degree_pairs(mode, h.socle_degree());
    for (k, j) in pairs {
        if h.get(j) > h.get(j + k) {
            continue;
        }
        if let Some(u) = socle.monomials.iter().find(|u| u.degree() == j as u64) {
            return Ok(Some(Strategy::SocleObstruction {
                monomial: u.clone(),
                degree: j,
                power: k,
            }));
        }
    }
    Ok(None)
}
