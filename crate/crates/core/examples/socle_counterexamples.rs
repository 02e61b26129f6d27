//! Two ideals that are not stable, where the Betti-number equation and the
//! weak Lefschetz property point in opposite directions.
//!
//! cargo run --example socle_counterexamples

use lefschetz::{
    condition_b_from_socle, decide_lefschetz, hilbert_function, parse_ideal_file, socle_basis,
    FieldSpec, Mode,
};

fn main() -> lefschetz::Result<()> {
    for text in [
        "ring w x y z; char 0; ideal w^2, w*x, w*y, w*z, x^2, y^2, x*y*z, x*z^2, y*z^2, z^3;",
        "ring x y; char 0; ideal x^3, x^2*y, y^3;",
    ] {
        let (ring, ideal) = parse_ideal_file(text)?;
        let socle = socle_basis(&ideal)?;
        let names: Vec<String> = socle
            .monomials
            .iter()
            .map(|u| ring.fmt_monomial(u))
            .collect();
        let equation = condition_b_from_socle(&ideal)?;
        let verdict = decide_lefschetz(&ideal, Mode::Weak, FieldSpec::Rationals, 8, 0)?;
        println!("{ideal}");
        println!("  stable:            {}", ideal.is_stable());
        println!("  hilbert:           {}", hilbert_function(&ideal)?);
        println!("  socle:             {}", names.join(", "));
        println!(
            "  Betti equation:    {}",
            if equation.holds { "holds" } else { "fails" }
        );
        for f in &equation.failures {
            println!(
                "    row {}: last column {} vs generators {}",
                f.index, f.lhs, f.rhs
            );
        }
        println!(
            "  weak Lefschetz:    {} ({:?})",
            verdict.holds, verdict.confidence
        );
    }
    Ok(())
}
