//! Graded Betti numbers of stable ideals, and the socle view of the last
//! column for ideals that are not stable.
//!
//! cargo run --example betti_diagrams

use lefschetz::{ek_betti, hilbert_function, last_betti_column, lex_ideal_of, parse_ideal_file};

fn main() -> lefschetz::Result<()> {
    let (_, i) =
        parse_ideal_file("ring x y z; char 0; ideal x^2, x*y, y^3, y^2*z, x*z^3, y*z^3, z^4;")?;
    let lex = lex_ideal_of(&i)?;
    println!("H(S/I) = {}", hilbert_function(&i)?);
    for (name, ideal) in [("I", &i), ("I^lex", &lex)] {
        println!("\n{name} = {ideal}");
        print!("{}", ek_betti(ideal)?.diagram());
    }

    let (_, c) = parse_ideal_file("ring x y; char 0; ideal x^3, x^2*y, y^3;")?;
    println!("\n{c} is not stable: {}", ek_betti(&c).unwrap_err());
    let n = c.num_vars();
    for (s, v) in last_betti_column(&c)? {
        println!("  socle degree {s}: beta_{},{} = {v}", n - 1, n + s);
    }
    Ok(())
}
