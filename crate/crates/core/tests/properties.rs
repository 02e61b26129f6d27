use lefschetz::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::strategy::Strategy;

fn ring(n: usize) -> Ring {
    Ring::new(n, 0).unwrap()
}

fn shape() -> impl Strategy<Value = (usize, u32, f64, u64)> {
    (1usize..=4, 1u32..=4, 0.1f64..0.6, any::<u64>())
}

/// All representations `a = Σ binom(k_i, i)`, `k_d > … > k_j >= j >= 1`,
/// with `a <= bound`, as (value, sequence) pairs.
fn enumerate_macaulay(d: u64, bound: u128) -> Vec<(u128, Vec<u64>)> {
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

#[test]
fn macaulay_representation_is_the_unique_one() {
    let bound = 2000u64;
    for d in 1..=6usize {
        let mut seen = vec![Vec::new(); bound as usize + 1];
        for (a, seq) in enumerate_macaulay(d as u64, u128::from(bound)) {
            seen[a as usize].push(seq);
        }
        for a in 1..=bound {
            let reps = &seen[a as usize];
            assert_eq!(reps.len(), 1, "a={a} d={d}: {reps:?}");
            let ours = macaulay_rep(a, d);
            assert_eq!(ours.evaluate(), u128::from(a));
            let nonzero: Vec<u64> = ours
                .coefficients
                .iter()
                .zip((1..=d as u64).rev())
                .filter(|&(&k, i)| k >= i)
                .map(|(&k, _)| k)
                .collect();
            assert_eq!(&nonzero, &reps[0], "a={a} d={d}");
            let lower: u128 = reps[0]
                .iter()
                .zip((1..=d as u64).rev())
                .map(|(&k, i)| binomial(k - 1, i - 1).unwrap())
                .sum();
            assert_eq!(u128::from(macaulay_lower(a, d)), lower);
        }
    }
}

#[test]
fn macaulay_upper_is_the_largest_feasible_growth() {
    // Over three variables, h = (1, 3, a, b) is feasible exactly for b <= a^<2>.
    let r = ring(3);
    for a in 1..=6u64 {
        let bound = macaulay_upper(a, 2).unwrap();
        let feasible =
            |b: u64| lex_ideal_from_hilbert(&HilbertVector::new(vec![1, 3, a, b]), &r).is_ok();
        assert!(feasible(bound), "a={a}");
        assert!(!feasible(bound + 1), "a={a}");
    }
}

#[test]
fn stable_gotzmann_ideals_share_betti_numbers_with_their_lex_ideal() {
    let mut nontrivial = 0;
    for seed in 0..400 {
        let i = random_stable(&ring(3), 4, 0.4, seed);
        if !is_gotzmann(&i).unwrap() {
            continue;
        }
        let l = lex_ideal_of(&i).unwrap();
        assert_eq!(ek_betti(&i).unwrap(), ek_betti(&l).unwrap(), "{i}");
        nontrivial += usize::from(i != l);
    }
    assert!(nontrivial > 0);
}

#[test]
fn gotzmann_ideals_share_the_last_betti_column_with_their_lex_ideal() {
    let mut found = 0;
    for seed in 0..400 {
        let i = random_ideal(&ring(3), 3, 0.5, Closure::None, seed);
        if i.is_stable() || !is_gotzmann(&i).unwrap() {
            continue;
        }
        let l = lex_ideal_of(&i).unwrap();
        assert_eq!(
            last_betti_column(&i).unwrap(),
            last_betti_column(&l).unwrap(),
            "{i}"
        );
        found += 1;
    }
    assert!(found > 0);
}

#[test]
fn negative_controls_disagree() {
    let (_, w) = parse_ideal_file(
        "ring w x y z; char 0; ideal w^2, w*x, w*y, w*z, x^2, y^2, x*y*z, x*z^2, y*z^2, z^3;",
    )
    .unwrap();
    assert!(condition_b_from_socle(&w).unwrap().holds);
    assert!(
        !decide_lefschetz(&w, Mode::Weak, FieldSpec::Rationals, 8, 0)
            .unwrap()
            .holds
    );

    let (_, c) = parse_ideal_file("ring x y; char 0; ideal x^3, x^2*y, y^3;").unwrap();
    assert!(!condition_b_from_socle(&c).unwrap().holds);
    assert!(
        decide_lefschetz(&c, Mode::Weak, FieldSpec::Rationals, 8, 0)
            .unwrap()
            .holds
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_implications((n, d, density, seed) in shape()) {
        for closure in [Closure::None, Closure::Stable, Closure::StronglyStable] {
            let i = random_ideal(&ring(n), d, density, closure, seed);
            if i.is_lexsegment() {
                prop_assert!(i.is_strongly_stable());
            }
            if i.is_strongly_stable() {
                prop_assert!(i.is_stable());
                for p in [2, 3, 5] {
                    prop_assert!(i.is_borel_fixed_in_char(p));
                }
            }
            prop_assert_eq!(i.is_borel_fixed(), i.is_strongly_stable());
        }
        let l = random_lexsegment(&ring(n), d, seed);
        prop_assert!(l.is_lexsegment());
    }

    #[test]
    fn lex_ideal_round_trip((n, d, density, seed) in shape()) {
        let i = random_ideal(&ring(n), d, density, Closure::None, seed);
        let h = hilbert_function(&i).unwrap();
        let l = lex_ideal_of(&i).unwrap();
        prop_assert!(l.is_lexsegment());
        prop_assert_eq!(hilbert_function(&l).unwrap(), h);
        prop_assert_eq!(lex_ideal_of(&l).unwrap(), l.clone());
        prop_assert!(is_gotzmann(&l).unwrap());
    }

    #[test]
    fn lex_ideal_has_the_smallest_shadow((n, d, density, seed) in shape()) {
        let i = random_ideal(&ring(n), d, density, Closure::None, seed);
        let l = lex_ideal_of(&i).unwrap();
        for j in 0..=u64::from(d) + 1 {
            prop_assert!(shadow_dimension(&l, j) <= shadow_dimension(&i, j));
        }
    }

    #[test]
    fn last_column_matches_socle((n, d, density, seed) in shape()) {
        let i = random_stable(&ring(n), d, density, seed);
        let table = ek_betti(&i).unwrap();
        prop_assert_eq!(last_column_by_socle_degree(&table), last_betti_column(&i).unwrap());
        prop_assert_eq!(lefschetz::fuzz::alternating_sum_mismatch(&table, &hilbert_function(&i).unwrap()), None);
    }

    #[test]
    fn rank_is_invariant_under_scaling(
        (n, d, density, seed) in shape(),
        coeffs in prop::collection::vec(-20i64..=20, 4),
        scale in prop_oneof![-7i64..=-1, 1i64..=7],
    ) {
        let i = random_ideal(&ring(n), d.min(3), density, Closure::None, seed);
        let c = &coeffs[..n];
        prop_assume!(c.iter().any(|&a| a != 0));
        let l = LinearForm::new(c.to_vec());
        let scaled = LinearForm::new(c.iter().map(|&a| BigInt::from(a * scale)).collect());
        let a = is_lefschetz_element(&i, &l, Mode::Strong, FieldSpec::Rationals).unwrap();
        let b = is_lefschetz_element(&i, &scaled, Mode::Strong, FieldSpec::Rationals).unwrap();
        prop_assert_eq!(a.evidence, b.evidence);
    }

    #[test]
    fn last_variable_is_the_least_generic_form_on_stable_ideals((n, d, density, seed) in shape()) {
        let i = random_stable(&ring(n), d, density, seed);
        let xn = is_lefschetz_element(&i, &LinearForm::variable(n, n), Mode::Strong, FieldSpec::Rationals).unwrap();
        let coeffs: Vec<i64> = (0..n as i64).map(|k| 1000 + 17 * k * k + (seed % 97) as i64).collect();
        let general = is_lefschetz_element(&i, &LinearForm::new(coeffs), Mode::Strong, FieldSpec::Rationals).unwrap();
        for (a, b) in xn.evidence.iter().zip(&general.evidence) {
            prop_assert!(a.rank <= b.rank);
        }
        let weak_xn = xn.evidence.iter().filter(|c| c.power == 1).all(MapCheck::has_max_rank);
        let weak_general = general.evidence.iter().filter(|c| c.power == 1).all(MapCheck::has_max_rank);
        prop_assert_eq!(weak_xn, weak_general);
    }

    #[test]
    fn parse_print_round_trip((n, d, density, seed) in shape(), c in prop_oneof![Just(0u64), Just(2), Just(7)]) {
        let r = Ring::new(n, c).unwrap();
        let i = random_ideal(&r, d, density, Closure::None, seed);
        let text = print_ideal_file(&i).unwrap();
        let (r2, j) = parse_ideal_file(&text).unwrap();
        prop_assert_eq!(r2, r);
        prop_assert_eq!(j, i);
    }
}
