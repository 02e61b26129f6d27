//! Reads an ideal file and prints the same reports as the command line.
//!
//! cargo run --example parse_and_analyze -- path/to/ideal.txt

use lefschetz::cli::{cmd_analyze, cmd_betti, cmd_lefschetz};
use lefschetz::{parse_ideal_file, FieldSpec, Mode};

const DEFAULT: &str = "# a stable ideal that is not strongly stable
ring x y z;
char 0;
ideal x^2, x*y, y^2, y*z, x*z^2, z^3;
";

fn main() -> lefschetz::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => DEFAULT.to_owned(),
    };
    let (ring, ideal) = parse_ideal_file(&text)?;
    let field = FieldSpec::of_characteristic(ring.characteristic())?;
    print!("{}", cmd_analyze(&ideal).stdout);
    println!();
    let betti = cmd_betti(&ideal);
    print!("{}{}", betti.stdout, betti.stderr);
    for mode in [Mode::Weak, Mode::Strong] {
        println!();
        print!("{}", cmd_lefschetz(&ideal, mode, field, None, 8, 0).stdout);
    }
    Ok(())
}
