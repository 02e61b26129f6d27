//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use lefschetz::fuzz::{run_fuzz, FuzzConfig, FuzzReport};
use lefschetz::*;
use num_bigint::BigInt;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn parse(text: &str) -> MonomialIdeal {
    parse_ideal_file(text).unwrap().1
}

fn h(i: &MonomialIdeal) -> Vec<u64> {
    hilbert_function(i).unwrap().values().to_vec()
}

fn complete_intersection_in_char_two() -> Outcome {
    let i = parse("ring x y z; char 0; ideal x^2, y^2, z^2;");
    ensure!(h(&i) == [1, 3, 3, 1], "hilbert {:?}", h(&i));
    let l = LinearForm::new(vec![1, 1, 1]);
    let gf2 = is_lefschetz_element(&i, &l, Mode::Weak, FieldSpec::Prime(2)).unwrap();
    ensure!(!gf2.holds, "x+y+z is weak Lefschetz over GF(2)");
    let q = is_lefschetz_element(&i, &l, Mode::Strong, FieldSpec::Rationals).unwrap();
    ensure!(q.holds, "x+y+z is not strong Lefschetz over Q");
    let det = mult_matrix(&i, &l, 1, 1, FieldSpec::Rationals)
        .unwrap()
        .determinant();
    ensure!(
        det == BigInt::from(2) || det == BigInt::from(-2),
        "determinant {det}"
    );
    Ok(format!(
        "weak fails over GF(2), strong holds over Q, det = {det}"
    ))
}

const I: &str = "ring x y z; char 0; ideal x^2, x*y, y^3, y^2*z, x*z^3, y*z^3, z^4;";
const I_PRIME: &str = "ring x y z; char 0; ideal x^2, x*y, y^3, x*z^2, y^2*z^2, y*z^3, z^4;";

fn two_ideals_with_one_hilbert_function() -> Outcome {
    let (i, ip) = (parse(I), parse(I_PRIME));
    ensure!(
        i.is_strongly_stable() && ip.is_strongly_stable(),
        "not strongly stable"
    );
    ensure!(
        h(&i) == [1, 3, 4, 3] && h(&ip) == [1, 3, 4, 3],
        "hilbert {:?} {:?}",
        h(&i),
        h(&ip)
    );
    let diagram = ek_betti(&i).unwrap().diagram();
    ensure!(
        diagram == "   0 1 2\n2: 2 1 -\n3: 2 3 1\n4: 3 6 3\n",
        "diagram\n{diagram}"
    );
    let z = LinearForm::variable(3, 3);
    for mode in [Mode::Weak, Mode::Strong] {
        let v = decide_lefschetz(&i, mode, FieldSpec::Rationals, 8, 0).unwrap();
        ensure!(
            v.holds && v.element.as_ref() == Some(&z),
            "first ideal, {mode}: {v:?}"
        );
    }
    let weak = decide_lefschetz(&ip, Mode::Weak, FieldSpec::Rationals, 8, 0).unwrap();
    ensure!(weak.holds, "second ideal fails weak");
    let strong = decide_lefschetz(&ip, Mode::Strong, FieldSpec::Rationals, 8, 0).unwrap();
    let first = strong.first_failure().map(|c| (c.source_degree, c.power));
    ensure!(
        !strong.holds && first == Some((1, 2)),
        "second ideal strong: {first:?}"
    );
    ensure!(
        is_gotzmann(&i).unwrap() && is_gotzmann(&ip).unwrap(),
        "not Gotzmann"
    );
    ensure!(lex_ideal_of(&i).unwrap() == ip, "lex ideal differs");
    Ok("diagram exact; strong fails at j=1, k=2 for the lexsegment ideal".into())
}

fn stability_is_load_bearing() -> Outcome {
    let w = parse(
        "ring w x y z; char 0; ideal w^2, w*x, w*y, w*z, x^2, y^2, x*y*z, x*z^2, y*z^2, z^3;",
    );
    ensure!(h(&w) == [1, 4, 4], "hilbert {:?}", h(&w));
    let socle: Vec<String> = socle_basis(&w)
        .unwrap()
        .monomials
        .iter()
        .map(|u| w.ring().fmt_monomial(u))
        .collect();
    ensure!(
        socle == ["w", "x*y", "x*z", "y*z", "z^2"],
        "socle {socle:?}"
    );
    ensure!(
        last_betti_column(&w).unwrap() == BTreeMap::from([(1, 1), (2, 4)]),
        "last column"
    );
    ensure!(w.gens_of_degree(3).count() == 4, "|G(I)_3|");
    let oracle = decide_lefschetz(&w, Mode::Weak, FieldSpec::Rationals, 8, 0).unwrap();
    ensure!(
        !oracle.holds && oracle.confidence == Confidence::Exact,
        "oracle {oracle:?}"
    );
    ensure!(
        condition_b_from_socle(&w).unwrap().holds,
        "Betti equality fails"
    );

    let c = parse("ring x y; char 0; ideal x^3, x^2*y, y^3;");
    ensure!(h(&c) == [1, 2, 3, 1], "hilbert {:?}", h(&c));
    ensure!(
        last_betti_column(&c).unwrap() == BTreeMap::from([(2, 1), (3, 1)]),
        "beta_1,4 and beta_1,5"
    );
    let oracle = decide_lefschetz(&c, Mode::Weak, FieldSpec::Rationals, 8, 0).unwrap();
    ensure!(oracle.holds, "oracle fails");
    ensure!(
        !condition_b_from_socle(&c).unwrap().holds,
        "Betti equality holds"
    );
    Ok("both disagreements observed".into())
}

fn borel_fixed_but_not_strongly_stable() -> Outcome {
    let r = Ring::named("x1 x2 x3", 2).unwrap();
    let gens = monomials_of_degree(3, 4)
        .into_iter()
        .filter(|u| u.exponent(3) < 2)
        .chain([Monomial::new(vec![2, 0, 2]), Monomial::new(vec![0, 2, 2])]);
    let i = MonomialIdeal::minimalize(gens, &r).unwrap();
    ensure!(i.is_stable(), "not stable");
    ensure!(
        i.is_borel_fixed() && i.is_borel_fixed_in_char(2),
        "not Borel-fixed"
    );
    ensure!(!i.is_strongly_stable(), "strongly stable");
    Ok(format!("{i}"))
}

fn violations(report: &FuzzReport, checks: &[&str]) -> usize {
    report
        .counterexamples
        .iter()
        .flat_map(|c| &c.violations)
        .filter(|v| checks.contains(&v.check))
        .count()
}

fn describe_failures(report: &FuzzReport) -> String {
    report
        .counterexamples
        .iter()
        .take(3)
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn criteria_agree_with_oracle(report: &FuzzReport) -> Outcome {
    ensure!(
        report.stable_checked >= 500 && report.lex_checked >= 300,
        "too few instances"
    );
    let bad = violations(
        report,
        &[
            "generator class",
            "no error",
            "betti conditions agree",
            "betti criterion matches oracle",
            "gotzmann criterion matches oracle",
            "lex strong criterion matches oracle",
            "lex round trip",
            "lex ideals are gotzmann",
        ],
    );
    ensure!(bad == 0, "{bad} violations\n{}", describe_failures(report));
    let (s, l) = (report.stable_tally, report.lex_tally);
    ensure!(
        s.weak_fails > 0 && l.weak_fails > 0 && l.weak_only > 0,
        "a verdict class was never exercised"
    );
    Ok(format!(
        "{} stable (weak fails {}), {} lexsegment (weak fails {}, strong fails {}, weak only {})",
        report.stable_checked,
        s.weak_fails,
        report.lex_checked,
        l.weak_fails,
        l.strong_fails,
        l.weak_only
    ))
}

fn betti_cross_validation(report: &FuzzReport) -> Outcome {
    let bad = violations(report, &["last column equals socle", "alternating sum"]);
    ensure!(bad == 0, "{bad} violations\n{}", describe_failures(report));
    Ok(format!("{} stable ideals", report.stable_checked))
}

fn last_variable_counts(report: &FuzzReport) -> Outcome {
    let bad = violations(report, &["last variable count"]);
    ensure!(bad == 0, "{bad} violations\n{}", describe_failures(report));
    Ok(format!("{} lexsegment ideals", report.lex_checked))
}

/// Every `a = Σ binom(k_i, i)` with `k_d > … > k_j >= j >= 1` and `a <= bound`.
fn enumerate(d: u64, bound: u128) -> Vec<(u128, Vec<u64>)> {
    fn go(
        i: u64,
        below: Option<u64>,
        sum: u128,
        prefix: &mut Vec<u64>,
        bound: u128,
        out: &mut Vec<(u128, Vec<u64>)>,
    ) {
        let mut k = i;
        while below.is_none_or(|b| k < b) {
            let s = sum + binomial(k, i).unwrap();
            if s > bound {
                break;
            }
            prefix.push(k);
            out.push((s, prefix.clone()));
            if i > 1 {
                go(i - 1, Some(k), s, prefix, bound, out);
            }
            prefix.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(d, None, 0, &mut Vec::new(), bound, &mut out);
    out
}

fn macaulay_arithmetic() -> Outcome {
    const BOUND: u64 = 10_000;
    for d in 1..=10usize {
        let mut reps: Vec<Vec<Vec<u64>>> = vec![Vec::new(); BOUND as usize + 1];
        for (a, seq) in enumerate(d as u64, u128::from(BOUND)) {
            reps[a as usize].push(seq);
        }
        reps[0].push(Vec::new());
        for a in 0..=BOUND {
            let found = &reps[a as usize];
            ensure!(
                found.len() == 1,
                "a={a} d={d}: {} representations",
                found.len()
            );
            let ours = macaulay_rep(a, d);
            ensure!(ours.evaluate() == u128::from(a), "a={a} d={d}: round trip");
            let nonzero: Vec<u64> = ours
                .coefficients
                .iter()
                .zip((1..=d as u64).rev())
                .filter(|&(&k, i)| k >= i)
                .map(|(&k, _)| k)
                .collect();
            ensure!(
                nonzero == found[0],
                "a={a} d={d}: {nonzero:?} vs {:?}",
                found[0]
            );
        }
    }
    Ok("all a <= 10000, d <= 10".into())
}

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() {
    let start = std::time::Instant::now();
    let report = run_fuzz(&FuzzConfig::default());
    let checks: Vec<(&str, Check)> = vec![
        (
            "(x^2,y^2,z^2): Lefschetz depends on the characteristic",
            Box::new(complete_intersection_in_char_two),
        ),
        (
            "strongly stable pair with Hilbert function 1 3 4 3",
            Box::new(two_ideals_with_one_hilbert_function),
        ),
        (
            "non-stable controls: Betti equality and oracle disagree",
            Box::new(stability_is_load_bearing),
        ),
        (
            "stable and Borel-fixed in char 2, not strongly stable",
            Box::new(borel_fixed_but_not_strongly_stable),
        ),
        (
            "criteria agree with the rank oracle on random ideals",
            Box::new(|| criteria_agree_with_oracle(&report)),
        ),
        (
            "Betti numbers against socle and Hilbert function",
            Box::new(|| betti_cross_validation(&report)),
        ),
        (
            "last-variable counts in lexsegment ideals",
            Box::new(|| last_variable_counts(&report)),
        ),
        (
            "Macaulay representations: round trip and uniqueness",
            Box::new(macaulay_arithmetic),
        ),
    ];
    let mut failed = 0;
    for (k, (name, check)) in checks.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {}  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} passed in {:.1?}",
        checks.len() - failed,
        checks.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
