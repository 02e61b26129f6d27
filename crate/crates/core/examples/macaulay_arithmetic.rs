//! Macaulay representations `a = binom(k(d), d) + … + binom(k(1), 1)` and
//! the derived values `a^[d]` and `a^<d>`.
//!
//! cargo run --example macaulay_arithmetic -- 4 2

use lefschetz::{macaulay_rep, macaulay_upper};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer"));
    let pairs: Vec<(u64, usize)> = match (args.next(), args.next()) {
        (Some(a), Some(d)) => vec![(a, d as usize)],
        _ => vec![(4, 2), (3, 3), (10, 2), (100, 4), (9999, 10)],
    };
    for (a, d) in pairs {
        let rep = macaulay_rep(a, d);
        let terms: Vec<String> = rep
            .coefficients
            .iter()
            .zip((1..=d).rev())
            .filter(|&(&k, i)| k >= i as u64)
            .map(|(k, i)| format!("C({k},{i})"))
            .collect();
        let upper = macaulay_upper(a, d).map_or("overflow".into(), |u| u.to_string());
        println!(
            "{a} = {}  (d={d})   a^[d] = {}   a^<d> = {upper}",
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            },
            rep.lower()
        );
    }
}
