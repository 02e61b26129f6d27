//! The same ideal and the same linear form, over Q and over small primes.
//!
//! cargo run --example characteristic_dependence

use lefschetz::{is_lefschetz_element, mult_matrix, parse_ideal_file, FieldSpec, LinearForm, Mode};

fn main() -> lefschetz::Result<()> {
    let (ring, ideal) = parse_ideal_file("ring x y z; char 0; ideal x^2, y^2, z^2;")?;
    let l = LinearForm::new(vec![1, 1, 1]);
    println!("S/I with I = {ideal}, l = {}", l.fmt_in(&ring));

    let m = mult_matrix(&ideal, &l, 1, 1, FieldSpec::Rationals)?;
    println!(
        "l : (S/I)_1 -> (S/I)_2 has integer determinant {}",
        m.determinant()
    );

    for field in [
        FieldSpec::Rationals,
        FieldSpec::prime(2)?,
        FieldSpec::prime(3)?,
        FieldSpec::prime(5)?,
    ] {
        for mode in [Mode::Weak, Mode::Strong] {
            let v = is_lefschetz_element(&ideal, &l, mode, field)?;
            let at = v
                .first_failure()
                .map(|c| format!(" (fails at j={}, k={})", c.source_degree, c.power))
                .unwrap_or_default();
            println!(
                "{:>6} {mode:<6} {}{at}",
                field.to_string(),
                if v.holds { "holds" } else { "fails" }
            );
        }
    }
    Ok(())
}
