//! Lexsegment ideals from Hilbert functions, the Gotzmann test, and the
//! Hilbert-function criteria for weak and strong Lefschetz.
//!
//! cargo run --example gotzmann_lex -- 1,3,4,3

use lefschetz::{
    decide_lefschetz, gotzmann_profile, gotzmann_wlp_criterion, lex_ideal_from_hilbert,
    lex_slp_criterion, FieldSpec, HilbertVector, Mode, Ring,
};

fn main() -> lefschetz::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,3,4,3".into());
    let h = HilbertVector::new(
        arg.split(',')
            .map(|v| v.trim().parse().expect("integer"))
            .collect(),
    );
    let ring = Ring::new(h.get(1).max(1) as usize, 0)?;
    let lex = lex_ideal_from_hilbert(&h, &ring)?;
    println!("h = {h}");
    println!("L = {lex}");
    println!(" j  |S_1 L_j|");
    for (j, l, _) in gotzmann_profile(&lex)? {
        println!("{j:>2}  {l:>8}");
    }
    let weak = gotzmann_wlp_criterion(&h)?;
    let strong = lex_slp_criterion(&h)?;
    let weak_oracle = decide_lefschetz(&lex, Mode::Weak, FieldSpec::Rationals, 1, 0)?;
    let strong_oracle = decide_lefschetz(&lex, Mode::Strong, FieldSpec::Rationals, 1, 0)?;
    println!("t = {}", weak.t.unwrap_or(0));
    println!(
        "weak:   criterion {}, oracle {}",
        weak.holds, weak_oracle.holds
    );
    println!(
        "strong: criterion {}, oracle {}",
        strong.holds, strong_oracle.holds
    );
    Ok(())
}
