//! Seeded random ideals of each class, printed in the file format.
//!
//! cargo run --example random_ideals -- [seed]

use lefschetz::{
    print_ideal_file, random_ideal, random_lexsegment, random_stable, random_strongly_stable,
    Closure, Ring,
};

fn main() -> lefschetz::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map_or(0, |s| s.parse().expect("integer seed"));
    let ring = Ring::named("x y z", 0)?;
    let ideals = [
        ("monomial", random_ideal(&ring, 3, 0.3, Closure::None, seed)),
        ("stable", random_stable(&ring, 3, 0.3, seed)),
        (
            "strongly stable",
            random_strongly_stable(&ring, 3, 0.3, seed),
        ),
        ("lexsegment", random_lexsegment(&ring, 3, seed)),
    ];
    for (name, ideal) in ideals {
        println!(
            "# {name}: stable {}, strongly stable {}, lexsegment {}",
            ideal.is_stable(),
            ideal.is_strongly_stable(),
            ideal.is_lexsegment()
        );
        println!("{}", print_ideal_file(&ideal).expect("nonzero ideal"));
    }
    Ok(())
}
