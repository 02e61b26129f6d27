//! Lexsegment ideals with a prescribed Hilbert function, and the Gotzmann test.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, hilbert_s, HilbertVector};
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal, Part, Ring};

/// The unique lexsegment ideal `L` with `H(S/L) = h`.
///
/// Degree by degree, `L_j` is the lex-largest `dim S_j - h[j]` monomials;
/// the construction fails at the first degree where that count is negative
/// or where `L_j` does not contain `S_1 L_{j-1}`.
pub fn lex_ideal_from_hilbert(h: &HilbertVector, ring: &Ring) -> Result<MonomialIdeal> {
    let n = ring.num_vars();
    let mut gens: Vec<Monomial> = Vec::new();
    let mut previous: Vec<Monomial> = Vec::new();
    for j in 0usize.. {
        let all = monomials_of_degree(n, j as u64);
        let dim = hilbert_s(n, j as i64);
        let want = h.get(j);
        if want > dim {
            return Err(Error::InfeasibleHilbert {
                degree: j,
                reason: "value exceeds dim S_j",
                deficit: want - dim,
            });
        }
        let size = (dim - want) as usize;
        let shadow = upper_shadow(&previous);
        let segment: BTreeSet<&Monomial> = all[..size].iter().collect();
        let missing = shadow.iter().filter(|u| !segment.contains(u)).count();
        if missing > 0 {
            return Err(Error::InfeasibleHilbert {
                degree: j,
                reason: "segment does not contain the shadow of the previous degree",
                deficit: missing as u64,
            });
        }
        gens.extend(all[..size].iter().filter(|u| !shadow.contains(*u)).cloned());
        if want == 0 {
            if h.len() > j {
                // S_j ⊆ L forces every later degree to vanish too.
                let first = (j + 1..h.len())
                    .find(|&k| h.get(k) > 0)
                    .expect("h has no trailing zeros");
                return Err(Error::InfeasibleHilbert {
                    degree: first,
                    reason: "value after the quotient has already vanished",
                    deficit: h.get(first),
                });
            }
            break;
        }
        previous = all[..size].to_vec();
    }
    MonomialIdeal::minimalize(gens, ring)
}

/// `I^lex`: the lexsegment ideal with the same Hilbert function as `I`.
pub fn lex_ideal_of(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    lex_ideal_from_hilbert(&hilbert_function(ideal)?, ideal.ring())
}

/// `S_1 · V` for a set `V` of monomials of one degree.
fn upper_shadow(v: &[Monomial]) -> BTreeSet<Monomial> {
    v.iter()
        .flat_map(|u| (1..=u.num_vars()).map(move |i| u.mul_var(i).expect("exponent overflow")))
        .collect()
}

/// `dim_K S_1 I_j`, counted as monomials.
pub fn shadow_dimension(ideal: &MonomialIdeal, j: u64) -> usize {
    upper_shadow(&ideal.degree_basis(j, Part::Ideal)).len()
}

/// `dim S_1 (I^lex)_j == dim S_1 I_j` for every `j` up to one past the socle degree.
pub fn is_gotzmann(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(gotzmann_profile(ideal)?
        .iter()
        .all(|&(_, lex, own)| lex == own))
}

/// `(j, dim S_1 (I^lex)_j, dim S_1 I_j)` for `j = 0..=socle degree + 1`.
pub fn gotzmann_profile(ideal: &MonomialIdeal) -> Result<Vec<(u64, usize, usize)>> {
    let lex = lex_ideal_of(ideal)?;
    let top = hilbert_function(ideal)?.len() as u64;
    Ok((0..=top)
        .map(|j| (j, shadow_dimension(&lex, j), shadow_dimension(ideal, j)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variable_lex_ideal() {
        let r = Ring::named("x y", 0).unwrap();
        let l = lex_ideal_from_hilbert(&HilbertVector::new(vec![1, 2, 1]), &r).unwrap();
        assert_eq!(l.to_string(), "(x^2, x*y, y^3)");
        assert_eq!(hilbert_function(&l).unwrap().values(), &[1, 2, 1]);
    }

    #[test]
    fn lex_of_field_is_maximal_ideal() {
        let r = Ring::named("x y z", 0).unwrap();
        let l = lex_ideal_from_hilbert(&HilbertVector::new(vec![1]), &r).unwrap();
        assert_eq!(l.to_string(), "(x, y, z)");
    }

    #[test]
    fn empty_vector_gives_unit_ideal() {
        let r = Ring::named("x y", 0).unwrap();
        let l = lex_ideal_from_hilbert(&HilbertVector::default(), &r).unwrap();
        assert_eq!(l.gens(), &[Monomial::unit(2)]);
    }

    #[test]
    fn infeasible_vectors_report_degree() {
        let r = Ring::named("x y", 0).unwrap();
        let too_big = lex_ideal_from_hilbert(&HilbertVector::new(vec![1, 3]), &r).unwrap_err();
        assert_eq!(
            too_big,
            Error::InfeasibleHilbert {
                degree: 1,
                reason: "value exceeds dim S_j",
                deficit: 1
            }
        );
        // (1, 1, 2): after a single linear form survives, at most one quadric can.
        let growth = lex_ideal_from_hilbert(&HilbertVector::new(vec![1, 1, 2]), &r).unwrap_err();
        assert!(matches!(
            growth,
            Error::InfeasibleHilbert {
                degree: 2,
                deficit: 1,
                ..
            }
        ));
        let gap = lex_ideal_from_hilbert(&HilbertVector::new(vec![1, 0, 1]), &r).unwrap_err();
        assert!(matches!(gap, Error::InfeasibleHilbert { degree: 2, .. }));
    }

    #[test]
    fn lex_of_complete_intersection() {
        let r = Ring::named("x y z", 0).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
        let l = lex_ideal_of(&i).unwrap();
        assert_eq!(l.to_string(), "(x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4)");
        assert_eq!(hilbert_function(&l).unwrap().values(), &[1, 3, 3, 1]);
        assert!(l.is_lexsegment());
        assert!(!is_gotzmann(&i).unwrap());
    }

    #[test]
    fn lex_ideals_are_gotzmann() {
        let r = Ring::named("x y z", 0).unwrap();
        let l = lex_ideal_from_hilbert(&HilbertVector::new(vec![1, 3, 4, 3]), &r).unwrap();
        assert!(is_gotzmann(&l).unwrap());
        assert_eq!(lex_ideal_of(&l).unwrap(), l);
    }
}
