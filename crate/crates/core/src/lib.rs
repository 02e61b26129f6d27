//! Weak and strong Lefschetz properties of Artinian monomial algebras
//! `S/I`, `S = K[x_1, …, x_n]`.
//!
//! The property is decided two ways: exactly, by the ranks of the maps
//! `(S/I)_j -> (S/I)_{j+k}` given by powers of a linear form
//! ([`oracle`]), and through closed-form criteria on Betti numbers and
//! Hilbert functions ([`criteria`]) for stable and lexsegment ideals.
//! [`fuzz`] checks the two against each other on random ideals.
//!
//! ```
//! use lefschetz::{decide_lefschetz, parse_ideal_file, FieldSpec, Mode};
//!
//! let (_, ideal) = parse_ideal_file("ring x y z; char 0; ideal x^2, y^2, z^2;").unwrap();
//! let strong = decide_lefschetz(&ideal, Mode::Strong, FieldSpec::Rationals, 8, 0).unwrap();
//! assert!(strong.holds);
//!
//! let weak = decide_lefschetz(&ideal, Mode::Weak, FieldSpec::Prime(2), 8, 0).unwrap();
//! assert!(!weak.holds);
//! ```

pub mod betti;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod fuzz;
pub mod generate;
pub mod hilbert;
pub mod lex;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod parse;

pub use betti::{
    ek_betti, last_betti_column, last_column_by_socle_degree, socle_basis, BettiTable, SocleBasis,
};
pub use criteria::{
    condition_b_from_socle, cwl_wlp_criterion, gotzmann_wlp_criterion, lex_slp_criterion,
    BettiCondition, Criterion, CriterionReport, Failure,
};
pub use error::{Error, Result};
pub use generate::{
    random_ideal, random_lexsegment, random_stable, random_strongly_stable, Closure,
};
pub use hilbert::{
    binomial, hilbert_function, hilbert_s, macaulay_lower, macaulay_rep, macaulay_upper,
    HilbertVector, MacaulayRep,
};
pub use lex::{
    gotzmann_profile, is_gotzmann, lex_ideal_from_hilbert, lex_ideal_of, shadow_dimension,
};
pub use linalg::{FieldSpec, Matrix};
pub use monomial::{monomials_of_degree, Monomial, MonomialIdeal, Part, Ring};
pub use oracle::{
    decide_lefschetz, is_lefschetz_element, mult_matrix, Confidence, LefschetzVerdict, LinearForm,
    MapCheck, Mode, Strategy,
};
pub use parse::{parse_element, parse_field, parse_ideal_file, print_ideal_file};
