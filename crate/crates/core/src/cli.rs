//! The `lefschetz` command line: argument parsing, the subcommands, and
//! their text reports. Each command returns its output and exit code
//! instead of printing, so it can be driven from tests and examples.
//!
//! Exit codes: 0 ok, 1 usage or parse error, 2 precondition refused,
//! 3 fuzz counterexample.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::betti::{ek_betti, last_betti_column, socle_basis};
use crate::criteria::{
    condition_b_from_socle, cwl_wlp_criterion, gotzmann_wlp_criterion, lex_slp_criterion,
    BettiCondition, CriterionReport,
};
use crate::error::Error;
use crate::fuzz::{run_fuzz, FuzzConfig};
use crate::hilbert::hilbert_function;
use crate::lex::{gotzmann_profile, is_gotzmann, lex_ideal_of};
use crate::linalg::FieldSpec;
use crate::monomial::MonomialIdeal;
use crate::oracle::{
    decide_lefschetz, is_lefschetz_element, mult_matrix, Confidence, LefschetzVerdict, LinearForm,
    Mode, Strategy,
};
use crate::parse::{parse_element, parse_field, parse_ideal_file, print_ideal_file};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Self {
            stdout,
            stderr,
            code,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self::fail(EXIT_USAGE, String::new(), message.into())
    }

    fn refused(stdout: String, e: &Error) -> Self {
        Self::fail(EXIT_REFUSED, stdout, format!("refused: {e}\n"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Lefschetz properties of monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class flags, Hilbert function and socle.
    Analyze(FileArgs),
    /// Graded Betti diagram of a stable ideal.
    Betti(FileArgs),
    /// Hilbert function of the quotient.
    Hilbert(FileArgs),
    /// Lexsegment ideal with the same Hilbert function, and the Gotzmann test.
    Lex(FileArgs),
    /// Weak Lefschetz property.
    Wlp(LefschetzArgs),
    /// Strong Lefschetz property.
    Slp(LefschetzArgs),
    /// Weak or strong Lefschetz property, chosen by `--mode`.
    Lefschetz {
        #[arg(long, value_enum, default_value_t = ModeArg::Weak)]
        mode: ModeArg,
        #[command(flatten)]
        args: LefschetzArgs,
    },
    /// Cross-check the criteria against the rank oracle on random ideals.
    Fuzz(FuzzArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Weak,
    Strong,
}

#[derive(Debug, Args)]
struct FileArgs {
    /// Ideal file, or `-` for standard input.
    file: PathBuf,
    /// Override the characteristic declared in the file.
    #[arg(long = "char")]
    characteristic: Option<u64>,
}

#[derive(Debug, Args)]
struct LefschetzArgs {
    #[command(flatten)]
    file: FileArgs,
    /// `q` or `gf:<p>`; defaults to the ring's characteristic.
    #[arg(long)]
    field: Option<String>,
    /// Coefficients `a1,...,an` of a specific linear form to test.
    #[arg(long, allow_hyphen_values = true)]
    element: Option<String>,
    /// Random forms tried for ideals that are neither stable nor Borel-fixed.
    #[arg(long, default_value_t = 8)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct FuzzArgs {
    /// Number of variables; all of 2..=5 when omitted.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 6)]
    max_deg: u32,
    /// Instances per family (stable and lexsegment).
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    match cli.command {
        Command::Fuzz(a) => cmd_fuzz(a.n, a.max_deg, a.count, a.seed),
        Command::Analyze(f) => with_ideal(&f, |i| cmd_analyze(&i)),
        Command::Betti(f) => with_ideal(&f, |i| cmd_betti(&i)),
        Command::Hilbert(f) => with_ideal(&f, |i| cmd_hilbert(&i)),
        Command::Lex(f) => with_ideal(&f, |i| cmd_lex(&i)),
        Command::Wlp(a) => lefschetz_command(&a, Mode::Weak),
        Command::Slp(a) => lefschetz_command(&a, Mode::Strong),
        Command::Lefschetz { mode, args } => lefschetz_command(
            &args,
            match mode {
                ModeArg::Weak => Mode::Weak,
                ModeArg::Strong => Mode::Strong,
            },
        ),
    }
}

fn load(file: &FileArgs) -> std::result::Result<MonomialIdeal, Outcome> {
    let text = if file.file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(&file.file)
    }
    .map_err(|e| Outcome::usage(format!("cannot read {}: {e}\n", file.file.display())))?;
    let (_, ideal) = parse_ideal_file(&text)
        .map_err(|e| Outcome::usage(format!("{}:{e}\n", file.file.display())))?;
    match file.characteristic {
        None => Ok(ideal),
        Some(c) => {
            in_characteristic(&ideal, c).map_err(|e| Outcome::usage(format!("--char: {e}\n")))
        }
    }
}

/// The same generators over a ring of another characteristic.
pub fn in_characteristic(ideal: &MonomialIdeal, c: u64) -> crate::Result<MonomialIdeal> {
    let ring = ideal.ring().with_characteristic(c)?;
    MonomialIdeal::minimalize(ideal.gens().iter().cloned(), &ring)
}

fn with_ideal(file: &FileArgs, f: impl FnOnce(MonomialIdeal) -> Outcome) -> Outcome {
    match load(file) {
        Ok(i) => f(i),
        Err(o) => o,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn header(out: &mut String, ideal: &MonomialIdeal) {
    let r = ideal.ring();
    let _ = writeln!(
        out,
        "ring:   {} (char {})",
        r.names().join(" "),
        r.characteristic()
    );
    let _ = writeln!(out, "ideal:  {ideal}");
}

pub fn cmd_analyze(ideal: &MonomialIdeal) -> Outcome {
    let mut out = String::new();
    header(&mut out, ideal);
    let c = ideal.ring().characteristic();
    let _ = writeln!(out, "generators: {}", ideal.gens().len());
    let primary = ideal.is_m_primary();
    let gotzmann = if primary {
        is_gotzmann(ideal).ok().map_or("?", yes_no)
    } else {
        "n/a"
    };
    for (name, flag) in [
        ("m-primary", yes_no(primary)),
        ("stable", yes_no(ideal.is_stable())),
        ("strongly stable", yes_no(ideal.is_strongly_stable())),
        ("Borel-fixed", yes_no(ideal.is_borel_fixed())),
        ("lexsegment", yes_no(ideal.is_lexsegment())),
        ("Gotzmann", gotzmann),
    ] {
        let _ = writeln!(out, "  {name:<16} {flag}");
    }
    if c != 0 {
        let _ = writeln!(out, "  (Borel-fixed is tested in characteristic {c})");
    }
    if !primary {
        let _ = writeln!(out, "hilbert: quotient is infinite dimensional");
        return Outcome::ok(out);
    }
    let h = hilbert_function(ideal).expect("m-primary");
    let _ = writeln!(out, "hilbert: {h}");
    let socle = socle_basis(ideal).expect("m-primary");
    let dims: Vec<String> = socle
        .dims
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(j, d)| format!("{d} in degree {j}"))
        .collect();
    let _ = writeln!(out, "socle:   {}", dims.join(", "));
    let names: Vec<String> = socle
        .monomials
        .iter()
        .map(|u| ideal.ring().fmt_monomial(u))
        .collect();
    let _ = writeln!(out, "socle basis: {}", names.join(", "));
    Outcome::ok(out)
}

pub fn cmd_betti(ideal: &MonomialIdeal) -> Outcome {
    let mut out = String::new();
    match ek_betti(ideal) {
        Ok(table) => {
            out.push_str(&table.diagram());
            Outcome::ok(out)
        }
        Err(e) => {
            let n = ideal.num_vars();
            if let Ok(column) = last_betti_column(ideal) {
                let _ = writeln!(out, "last column from the socle:");
                for (s, v) in column {
                    let _ = writeln!(out, "  beta_{},{} = {v}", n - 1, n + s);
                }
            }
            Outcome::refused(out, &e)
        }
    }
}

pub fn cmd_hilbert(ideal: &MonomialIdeal) -> Outcome {
    match hilbert_function(ideal) {
        Ok(h) => {
            let mut out = String::new();
            let _ = writeln!(out, "{h}");
            let terms: Vec<String> = h
                .values()
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(j, v)| match j {
                    0 => v.to_string(),
                    1 => format!("{v}t"),
                    _ => format!("{v}t^{j}"),
                })
                .collect();
            let _ = writeln!(out, "series: {}", terms.join(" + "));
            let _ = writeln!(out, "length: {}", h.total());
            if let Some(s) = h.socle_degree() {
                let _ = writeln!(out, "socle degree: {s}");
            }
            Outcome::ok(out)
        }
        Err(e) => Outcome::refused(String::new(), &e),
    }
}

pub fn cmd_lex(ideal: &MonomialIdeal) -> Outcome {
    let lex = match lex_ideal_of(ideal) {
        Ok(l) => l,
        Err(e) => return Outcome::refused(String::new(), &e),
    };
    let mut out = String::new();
    out.push_str(&print_ideal_file(&lex).expect("lex ideal of an m-primary ideal is nonzero"));
    let profile = gotzmann_profile(ideal).expect("m-primary");
    let _ = writeln!(out, "# j  dim S_1 L_j  dim S_1 I_j");
    for (j, l, own) in &profile {
        let mark = if l == own { "" } else { "  <" };
        let _ = writeln!(out, "# {j:>2} {l:>12} {own:>12}{mark}");
    }
    let gotzmann = profile.iter().all(|(_, l, own)| l == own);
    let _ = writeln!(out, "# Gotzmann: {}", yes_no(gotzmann));
    Outcome::ok(out)
}

fn lefschetz_command(a: &LefschetzArgs, mode: Mode) -> Outcome {
    let ideal = match load(&a.file) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let field = match &a.field {
        None => FieldSpec::of_characteristic(ideal.ring().characteristic()),
        Some(text) => parse_field(text),
    };
    let field = match field {
        Ok(f) => f,
        Err(e) => return Outcome::usage(format!("--field: {e}\n")),
    };
    if a.field.is_some()
        && a.file
            .characteristic
            .is_some_and(|c| c != field.characteristic())
    {
        return Outcome::usage("--char and --field name different characteristics\n");
    }
    let ideal = match in_characteristic(&ideal, field.characteristic()) {
        Ok(i) => i,
        Err(e) => return Outcome::usage(format!("{e}\n")),
    };
    let element = match &a.element {
        None => None,
        Some(text) => match parse_element(text, ideal.num_vars()) {
            Ok(l) => Some(l),
            Err(e) => return Outcome::usage(format!("--element: {e}\n")),
        },
    };
    cmd_lefschetz(&ideal, mode, field, element.as_ref(), a.trials, a.seed)
}

/// Verdict, evidence table, and the criteria that apply to `ideal`.
pub fn cmd_lefschetz(
    ideal: &MonomialIdeal,
    mode: Mode,
    field: FieldSpec,
    element: Option<&LinearForm>,
    trials: usize,
    seed: u64,
) -> Outcome {
    let verdict = match element {
        Some(l) => is_lefschetz_element(ideal, l, mode, field),
        None => decide_lefschetz(ideal, mode, field, trials, seed),
    };
    let verdict = match verdict {
        Ok(v) => v,
        Err(e @ (Error::InvalidLinearForm(_) | Error::NoTrials)) => {
            return Outcome::usage(format!("{e}\n"))
        }
        Err(e) => return Outcome::refused(String::new(), &e),
    };
    let mut out = String::new();
    header(&mut out, ideal);
    write_verdict(&mut out, ideal, &verdict);
    write_criteria(&mut out, ideal, &verdict, element.is_some());
    Outcome::ok(out)
}

fn write_verdict(out: &mut String, ideal: &MonomialIdeal, v: &LefschetzVerdict) {
    let ring = ideal.ring();
    let l = v
        .element
        .as_ref()
        .map_or("-".to_owned(), |l| l.fmt_in(ring));
    let _ = writeln!(out, "{} Lefschetz over {}, element {l}", v.mode, v.field);
    let how = match &v.strategy {
        Strategy::GivenElement => "given element".to_owned(),
        Strategy::LastVariable => "last variable (stable or Borel-fixed ideal)".to_owned(),
        Strategy::RandomSearch { trials } => format!("random linear forms, up to {trials} trials"),
        Strategy::SocleObstruction { monomial, degree, power } => format!(
            "random search failed; socle monomial {} of degree {degree} is killed by every l^{power}",
            ring.fmt_monomial(monomial)
        ),
    };
    let confidence = match v.confidence {
        Confidence::Exact => "exact".to_owned(),
        Confidence::Probabilistic { trials } => format!("probabilistic, {trials} trials"),
    };
    let _ = writeln!(out, "strategy: {how} ({confidence})");
    let _ = writeln!(out, "   k   j  source  target  rank  max");
    for c in &v.evidence {
        let _ = writeln!(
            out,
            "{:>4}{:>4}{:>8}{:>8}{:>6}  {}",
            c.power,
            c.source_degree,
            c.source_dim,
            c.target_dim,
            c.rank,
            if c.has_max_rank() { "yes" } else { "NO" }
        );
    }
    match v.first_failure() {
        None => {
            let _ = writeln!(out, "verdict: holds");
        }
        Some(c) => {
            let _ = writeln!(
                out,
                "verdict: fails at j={} (k={}): rank {} < {}",
                c.source_degree,
                c.power,
                c.rank,
                c.required()
            );
            if c.source_dim == c.target_dim {
                if let Some(l) = &v.element {
                    let m = mult_matrix(ideal, l, c.source_degree, c.power, FieldSpec::Rationals)
                        .expect("checked above");
                    let det = m.determinant();
                    let note = match v.field {
                        FieldSpec::Prime(p) if !det.is_zero() => {
                            format!("{det}, which is 0 in GF({p})")
                        }
                        _ => det.to_string(),
                    };
                    let _ = writeln!(
                        out,
                        "note: the map is square; its integer determinant is {note}"
                    );
                }
            }
        }
    }
}

/// Criteria whose hypotheses hold for `ideal`.
pub fn applicable_criteria(ideal: &MonomialIdeal, mode: Mode) -> Vec<CriterionReport> {
    let mut reports = Vec::new();
    if !ideal.is_m_primary() {
        return reports;
    }
    let h = hilbert_function(ideal).expect("m-primary");
    match mode {
        Mode::Weak => {
            if ideal.is_stable() {
                for which in [BettiCondition::B, BettiCondition::C, BettiCondition::Star] {
                    reports.extend(cwl_wlp_criterion(ideal, which).ok());
                }
            }
            if ideal.is_lexsegment() || is_gotzmann(ideal).unwrap_or(false) {
                reports.extend(gotzmann_wlp_criterion(&h).ok());
            }
        }
        Mode::Strong => {
            if ideal.is_lexsegment() {
                reports.extend(lex_slp_criterion(&h).ok());
            }
        }
    }
    reports
}

fn write_criteria(out: &mut String, ideal: &MonomialIdeal, v: &LefschetzVerdict, given: bool) {
    let reports = applicable_criteria(ideal, v.mode);
    if reports.is_empty() {
        let _ = writeln!(out, "criteria: none apply");
        if v.mode == Mode::Weak && !ideal.is_stable() {
            if let Ok(r) = condition_b_from_socle(ideal) {
                let _ = writeln!(
                    out,
                    "uncertified: betti (b) from the socle {} (the ideal is not stable, so this says nothing)",
                    if r.holds { "holds" } else { "fails" }
                );
            }
        }
        return;
    }
    let _ = writeln!(out, "criteria:");
    for r in &reports {
        let mut line = format!(
            "  {:<16} {}",
            r.criterion.to_string(),
            if r.holds { "holds" } else { "fails" }
        );
        if let Some(d) = r.d {
            let _ = write!(line, "  d={d}");
        }
        if let Some(t) = r.t {
            let _ = write!(line, "  t={t}");
        }
        if let Some(f) = r.failures.first() {
            let at = match f.column {
                Some(i) => format!("j={} i={i}", f.index),
                None => format!("j={}", f.index),
            };
            let _ = write!(line, "  first failure {at}: {} != {}", f.lhs, f.rhs);
        }
        let _ = writeln!(out, "{line}");
    }
    let agree = reports.iter().all(|r| r.holds == v.holds);
    let banner = if agree { "AGREE" } else { "DISAGREE" };
    let scope = if given {
        " (verdict is for the given element only)"
    } else {
        ""
    };
    let _ = writeln!(out, "{banner}{scope}");
}

pub fn cmd_fuzz(n: Option<usize>, max_deg: u32, count: usize, seed: u64) -> Outcome {
    if n == Some(0) || max_deg == 0 {
        return Outcome::usage("--n and --max-deg must be positive\n");
    }
    let config = FuzzConfig {
        vars: n.map_or(2..=5, |n| n..=n),
        max_deg,
        stable_count: count,
        lex_count: count,
        seed,
    };
    let report = run_fuzz(&config);
    let text = report.to_string();
    if report.passed() {
        Outcome::ok(text)
    } else {
        Outcome::fail(EXIT_COUNTEREXAMPLE, text, "counterexample found\n".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        parse_ideal_file(text).unwrap().1
    }

    const CI: &str = "ring x y z; char 0; ideal x^2, y^2, z^2;";
    const EXAMPLE_I: &str = "ring x y z; char 0; ideal x^2, x*y, y^3, y^2*z, x*z^3, y*z^3, z^4;";

    #[test]
    fn betti_diagram_for_stable_input() {
        let i = ideal("ring x y z; char 0; ideal x^2, x*y, y^2, x*z^2, y*z^2, z^3;");
        let o = cmd_betti(&i);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("0 1 2"));
    }

    #[test]
    fn betti_refuses_non_stable_with_fallback() {
        let o = cmd_betti(&ideal("ring x y; char 0; ideal x^3, x^2*y, y^3;"));
        assert_eq!(o.code, EXIT_REFUSED);
        assert!(o.stdout.contains("beta_1,4 = 1"), "{}", o.stdout);
        assert!(o.stdout.contains("beta_1,5 = 1"), "{}", o.stdout);
        assert!(o.stderr.starts_with("refused"));
    }

    #[test]
    fn given_element_in_characteristic_two() {
        let i = in_characteristic(&ideal(CI), 2).unwrap();
        let l = LinearForm::new(vec![1, 1, 1]);
        let o = cmd_lefschetz(&i, Mode::Weak, FieldSpec::Prime(2), Some(&l), 8, 0);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("fails at j=1"), "{}", o.stdout);
        assert!(
            o.stdout.contains("determinant is -2, which is 0 in GF(2)"),
            "{}",
            o.stdout
        );
    }

    #[test]
    fn criteria_banner() {
        let i = ideal(EXAMPLE_I);
        let o = cmd_lefschetz(&i, Mode::Weak, FieldSpec::Rationals, None, 8, 0);
        assert!(o.stdout.contains("betti (b)"));
        assert!(o.stdout.contains("AGREE"), "{}", o.stdout);
        assert!(!o.stdout.contains("DISAGREE"));
        let o = cmd_lefschetz(&ideal(CI), Mode::Weak, FieldSpec::Rationals, None, 8, 0);
        assert!(o.stdout.contains("criteria: none apply"));
        let w = ideal(
            "ring w x y z; char 0; ideal w^2, w*x, w*y, w*z, x^2, y^2, x*y*z, x*z^2, y*z^2, z^3;",
        );
        let o = cmd_lefschetz(&w, Mode::Weak, FieldSpec::Rationals, None, 8, 0);
        assert!(o.stdout.contains("verdict: fails at j=1"));
        assert!(
            o.stdout
                .contains("uncertified: betti (b) from the socle holds"),
            "{}",
            o.stdout
        );
    }

    #[test]
    fn refusals_and_usage_codes() {
        let open = ideal("ring x y; char 0; ideal x;");
        assert_eq!(cmd_hilbert(&open).code, EXIT_REFUSED);
        assert_eq!(cmd_lex(&open).code, EXIT_REFUSED);
        assert_eq!(cmd_analyze(&open).code, EXIT_OK);
        assert_eq!(run(["lefschetz", "nope"]).code, EXIT_USAGE);
        assert_eq!(
            run(["lefschetz", "hilbert", "/nonexistent/file"]).code,
            EXIT_USAGE
        );
        assert_eq!(run(["lefschetz", "--help"]).code, EXIT_OK);
        assert_eq!(cmd_fuzz(Some(0), 3, 1, 0).code, EXIT_USAGE);
    }

    #[test]
    fn analyze_and_hilbert_reports() {
        let o = cmd_analyze(&ideal(CI));
        assert!(o.stdout.contains("hilbert: 1 3 3 1"));
        assert!(o.stdout.contains("socle basis: x*y*z"));
        let o = cmd_hilbert(&ideal(CI));
        assert!(
            o.stdout
                .starts_with("1 3 3 1\nseries: 1 + 3t + 3t^2 + 1t^3"),
            "{}",
            o.stdout
        );
    }

    #[test]
    fn lex_output_parses() {
        let o = cmd_lex(&ideal(CI));
        let (_, l) = parse_ideal_file(&o.stdout).unwrap();
        assert!(l.is_lexsegment());
        assert!(o.stdout.contains("# Gotzmann: no"));
    }

    #[test]
    fn small_fuzz_passes() {
        let o = cmd_fuzz(Some(3), 4, 20, 0);
        assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    }
}
