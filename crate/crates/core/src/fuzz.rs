//! Randomized cross-checks of the closed-form criteria against the rank
//! oracle and of the Betti and Hilbert computations against each other.
//!
//! Instance `i` uses seed `seed + i`; everything it reports depends on that
//! seed only, so a counterexample is reproduced by its seed or by re-running
//! the printed ideal file.

use std::fmt;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::betti::{ek_betti, last_betti_column, last_column_by_socle_degree, BettiTable};
use crate::criteria::{
    cwl_wlp_criterion, gotzmann_wlp_criterion, lex_slp_criterion, BettiCondition,
};
use crate::error::Result;
use crate::generate::{random_lexsegment, random_stable};
use crate::hilbert::{hilbert_function, hilbert_s, macaulay_lower, HilbertVector};
use crate::lex::{is_gotzmann, lex_ideal_of};
use crate::linalg::FieldSpec;
use crate::monomial::{MonomialIdeal, Part, Ring};
use crate::oracle::{decide_lefschetz, Mode};
use crate::parse::print_ideal_file;

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub vars: RangeInclusive<usize>,
    pub max_deg: u32,
    pub stable_count: usize,
    pub lex_count: usize,
    pub seed: u64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            vars: 2..=5,
            max_deg: 6,
            stable_count: 500,
            lex_count: 300,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Stable,
    Lexsegment,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Stable => "stable",
            Family::Lexsegment => "lexsegment",
        })
    }
}

/// A named check that failed on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub family: Family,
    pub seed: u64,
    pub ideal: MonomialIdeal,
    pub violations: Vec<Violation>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} instance, seed {}", self.family, self.seed)?;
        for v in &self.violations {
            writeln!(f, "# {}: {}", v.check, v.detail)?;
        }
        f.write_str(&print_ideal_file(&self.ideal).unwrap_or_default())
    }
}

/// Oracle outcomes seen, so a run can show both verdicts were exercised.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub weak_holds: usize,
    pub weak_fails: usize,
    pub strong_holds: usize,
    pub strong_fails: usize,
    /// Weak holds while strong fails.
    pub weak_only: usize,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            weak_holds: self.weak_holds + o.weak_holds,
            weak_fails: self.weak_fails + o.weak_fails,
            strong_holds: self.strong_holds + o.strong_holds,
            strong_fails: self.strong_fails + o.strong_fails,
            weak_only: self.weak_only + o.weak_only,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct FuzzReport {
    pub stable_checked: usize,
    pub lex_checked: usize,
    pub stable_tally: Tally,
    pub lex_tally: Tally,
    /// Sorted by family, then seed.
    pub counterexamples: Vec<Counterexample>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.stable_tally;
        writeln!(
            f,
            "stable ideals:     {:>5} checked, weak holds {} / fails {}",
            self.stable_checked, t.weak_holds, t.weak_fails
        )?;
        let t = &self.lex_tally;
        writeln!(
            f,
            "lexsegment ideals: {:>5} checked, weak holds {} / fails {}, strong holds {} / fails {}, weak only {}",
            self.lex_checked, t.weak_holds, t.weak_fails, t.strong_holds, t.strong_fails, t.weak_only
        )?;
        writeln!(f, "counterexamples:   {:>5}", self.counterexamples.len())?;
        for c in &self.counterexamples {
            writeln!(f)?;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Number of variables and degree bound for one instance.
fn instance_shape(config: &FuzzConfig, seed: u64, family: Family) -> (usize, u32, f64) {
    let salt = match family {
        Family::Stable => 0x5eed_0001,
        Family::Lexsegment => 0x5eed_0002,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
    let n = rng.gen_range(config.vars.clone());
    let d = rng.gen_range(1..=config.max_deg.max(1));
    let density = rng.gen_range(0.1..=0.5);
    (n, d, density)
}

pub fn run_fuzz(config: &FuzzConfig) -> FuzzReport {
    assert!(
        *config.vars.start() >= 1 && !config.vars.is_empty(),
        "need at least one variable"
    );
    let stable: Vec<(Tally, Option<Counterexample>)> = (0..config.stable_count as u64)
        .into_par_iter()
        .map(|i| {
            let seed = config.seed.wrapping_add(i);
            let (n, d, density) = instance_shape(config, seed, Family::Stable);
            let ring = Ring::new(n, 0).expect("n >= 1");
            let ideal = random_stable(&ring, d, density, seed);
            run_instance(Family::Stable, seed, ideal, check_stable)
        })
        .collect();
    let lex: Vec<(Tally, Option<Counterexample>)> = (0..config.lex_count as u64)
        .into_par_iter()
        .map(|i| {
            let seed = config.seed.wrapping_add(i);
            let (n, d, _) = instance_shape(config, seed, Family::Lexsegment);
            let ring = Ring::new(n, 0).expect("n >= 1");
            let ideal = random_lexsegment(&ring, d, seed);
            run_instance(Family::Lexsegment, seed, ideal, check_lexsegment)
        })
        .collect();

    let mut report = FuzzReport {
        stable_checked: stable.len(),
        lex_checked: lex.len(),
        ..FuzzReport::default()
    };
    for (tally, c) in stable {
        report.stable_tally = report.stable_tally.merge(tally);
        report.counterexamples.extend(c);
    }
    for (tally, c) in lex {
        report.lex_tally = report.lex_tally.merge(tally);
        report.counterexamples.extend(c);
    }
    report
}

type Checker = fn(&MonomialIdeal) -> Result<(Tally, Vec<Violation>)>;

fn run_instance(
    family: Family,
    seed: u64,
    ideal: MonomialIdeal,
    check: Checker,
) -> (Tally, Option<Counterexample>) {
    let (tally, violations) = match check(&ideal) {
        Ok(r) => r,
        Err(e) => (
            Tally::default(),
            vec![Violation {
                check: "no error",
                detail: e.to_string(),
            }],
        ),
    };
    let c = (!violations.is_empty()).then_some(Counterexample {
        family,
        seed,
        ideal,
        violations,
    });
    (tally, c)
}

fn push(out: &mut Vec<Violation>, ok: bool, check: &'static str, detail: impl FnOnce() -> String) {
    if !ok {
        out.push(Violation {
            check,
            detail: detail(),
        });
    }
}

/// Every check that applies to an m-primary stable ideal.
pub fn check_stable(ideal: &MonomialIdeal) -> Result<(Tally, Vec<Violation>)> {
    let mut out = Vec::new();
    push(
        &mut out,
        ideal.is_stable() && ideal.is_m_primary(),
        "generator class",
        || "generated ideal is not stable and m-primary".into(),
    );
    if !out.is_empty() {
        return Ok((Tally::default(), out));
    }
    let b = cwl_wlp_criterion(ideal, BettiCondition::B)?;
    let c = cwl_wlp_criterion(ideal, BettiCondition::C)?;
    let star = cwl_wlp_criterion(ideal, BettiCondition::Star)?;
    let oracle = decide_lefschetz(ideal, Mode::Weak, FieldSpec::Rationals, 1, 0)?;
    push(
        &mut out,
        b.holds == c.holds && c.holds == star.holds,
        "betti conditions agree",
        || format!("(b) {}, (c) {}, (*) {}", b.holds, c.holds, star.holds),
    );
    push(
        &mut out,
        b.holds == oracle.holds,
        "betti criterion matches oracle",
        || format!("criterion {}, oracle {}", b.holds, oracle.holds),
    );

    let table = ek_betti(ideal)?;
    let from_table = last_column_by_socle_degree(&table);
    let from_socle = last_betti_column(ideal)?;
    push(
        &mut out,
        from_table == from_socle,
        "last column equals socle",
        || format!("betti {from_table:?}, socle {from_socle:?}"),
    );

    let h = hilbert_function(ideal)?;
    if let Some(t) = alternating_sum_mismatch(&table, &h) {
        out.push(Violation {
            check: "alternating sum",
            detail: format!("Hilbert function and Betti numbers disagree in degree {t}"),
        });
    }

    let tally = Tally {
        weak_holds: usize::from(oracle.holds),
        weak_fails: usize::from(!oracle.holds),
        ..Tally::default()
    };
    Ok((tally, out))
}

/// First degree `t` where `H(S/I, t) != H(S, t) - Σ (-1)^i β_{i,j} H(S, t - j)`.
pub fn alternating_sum_mismatch(table: &BettiTable, h: &HilbertVector) -> Option<usize> {
    let n = table.num_vars();
    let top = table
        .entries()
        .map(|((_, j), _)| j as usize)
        .max()
        .unwrap_or(0);
    let last = top + h.len() + n;
    (0..=last).find(|&t| {
        let mut rhs = i128::from(hilbert_s(n, t as i64));
        for ((i, j), b) in table.entries() {
            let term = i128::from(b) * i128::from(hilbert_s(n, t as i64 - j as i64));
            rhs += if i % 2 == 0 { -term } else { term };
        }
        rhs != i128::from(h.get(t))
    })
}

/// Every check that applies to an m-primary lexsegment ideal.
pub fn check_lexsegment(ideal: &MonomialIdeal) -> Result<(Tally, Vec<Violation>)> {
    let mut out = Vec::new();
    push(
        &mut out,
        ideal.is_lexsegment() && ideal.is_m_primary(),
        "generator class",
        || "generated ideal is not lexsegment and m-primary".into(),
    );
    if !out.is_empty() {
        return Ok((Tally::default(), out));
    }
    let h = hilbert_function(ideal)?;
    let lex = lex_ideal_of(ideal)?;
    push(&mut out, &lex == ideal, "lex round trip", || {
        format!("lex ideal is {lex}")
    });
    push(
        &mut out,
        is_gotzmann(ideal)?,
        "lex ideals are gotzmann",
        String::new,
    );

    let weak = decide_lefschetz(ideal, Mode::Weak, FieldSpec::Rationals, 1, 0)?;
    let strong = decide_lefschetz(ideal, Mode::Strong, FieldSpec::Rationals, 1, 0)?;
    let gotzmann = gotzmann_wlp_criterion(&h)?;
    let lex_strong = lex_slp_criterion(&h)?;
    push(
        &mut out,
        gotzmann.holds == weak.holds,
        "gotzmann criterion matches oracle",
        || {
            format!(
                "criterion {}, oracle {} for h = {h}",
                gotzmann.holds, weak.holds
            )
        },
    );
    push(
        &mut out,
        lex_strong.holds == strong.holds,
        "lex strong criterion matches oracle",
        || {
            format!(
                "criterion {}, oracle {} for h = {h}",
                lex_strong.holds, strong.holds
            )
        },
    );
    if let Some(j) = last_variable_count_mismatch(ideal, &h) {
        out.push(Violation {
            check: "last variable count",
            detail: format!("degree {j}"),
        });
    }

    let tally = Tally {
        weak_holds: usize::from(weak.holds),
        weak_fails: usize::from(!weak.holds),
        strong_holds: usize::from(strong.holds),
        strong_fails: usize::from(!strong.holds),
        weak_only: usize::from(weak.holds && !strong.holds),
    };
    Ok((tally, out))
}

/// First `j > 0` with `I_j != 0` where the number of monomials `u ∈ I_j`
/// with `m(u) = n` differs from `H(S, j-1) - H(S/I, j)^[j]`.
pub fn last_variable_count_mismatch(ideal: &MonomialIdeal, h: &HilbertVector) -> Option<usize> {
    let n = ideal.num_vars();
    (1..=h.len() + 1).find(|&j| {
        let basis = ideal.degree_basis(j as u64, Part::Ideal);
        if basis.is_empty() {
            return false;
        }
        let count = basis.iter().filter(|u| u.max_var() == n).count() as u64;
        i128::from(count)
            != i128::from(hilbert_s(n, j as i64 - 1)) - i128::from(macaulay_lower(h.get(j), j))
    })
}
