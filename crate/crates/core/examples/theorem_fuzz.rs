//! Cross-checks the closed-form criteria against the rank oracle on random
//! stable and lexsegment ideals.
//!
//! cargo run --release --example theorem_fuzz -- [seed] [stable count] [lex count]

use lefschetz::fuzz::{run_fuzz, FuzzConfig};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("numeric argument"));
    let mut config = FuzzConfig::default();
    if let Some(seed) = args.next() {
        config.seed = seed;
    }
    if let Some(count) = args.next() {
        config.stable_count = count as usize;
    }
    if let Some(count) = args.next() {
        config.lex_count = count as usize;
    }
    let start = std::time::Instant::now();
    let report = run_fuzz(&config);
    print!("{report}");
    println!("elapsed: {:.2?}", start.elapsed());
    if !report.passed() {
        std::process::exit(3);
    }
}
