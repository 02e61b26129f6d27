//! Seeded random m-primary monomial ideals for property tests.
//!
//! An ideal is grown from random seed monomials of degree `1..=max_deg`,
//! closed under exchange moves, and made m-primary in degree `max_deg + 1`.
//! The same parameters and seed always give the same ideal.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hilbert::{hilbert_function, macaulay_lower, macaulay_upper, HilbertVector};
use crate::lex::lex_ideal_from_hilbert;
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal, Ring};

pub const DEFAULT_DENSITY: f64 = 0.3;

/// Which exchange moves the seed set is closed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    /// No closure: arbitrary monomial ideals.
    None,
    /// `u ↦ (x_i / x_{m(u)}) u`.
    Stable,
    /// `u ↦ (x_i / x_k) u` for every `x_k | u`.
    StronglyStable,
}

pub fn random_strongly_stable(ring: &Ring, max_deg: u32, density: f64, seed: u64) -> MonomialIdeal {
    random_ideal(ring, max_deg, density, Closure::StronglyStable, seed)
}

pub fn random_stable(ring: &Ring, max_deg: u32, density: f64, seed: u64) -> MonomialIdeal {
    random_ideal(ring, max_deg, density, Closure::Stable, seed)
}

/// Random m-primary monomial ideal.
///
/// For each degree `1..=max_deg`, each of `n` draws adds a uniformly random
/// monomial of that degree with probability `density`. With a closure, pure
/// powers `x_i^(max_deg+1)` are added for the variables lacking one and the
/// set is closed, which already forces `m^(max_deg+1) ⊆ I`. Without a
/// closure `m^(max_deg+1)` is added directly so the socle degree stays at
/// most `max_deg`.
pub fn random_ideal(
    ring: &Ring,
    max_deg: u32,
    density: f64,
    closure: Closure,
    seed: u64,
) -> MonomialIdeal {
    assert!(max_deg >= 1, "max_deg must be at least 1");
    assert!(
        density > 0.0 && density <= 1.0,
        "density must lie in (0, 1]"
    );
    let n = ring.num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seeds: Vec<Monomial> = Vec::new();
    for d in 1..=u64::from(max_deg) {
        let pool = monomials_of_degree(n, d);
        for _ in 0..n {
            if rng.gen_bool(density) {
                seeds.push(pool.choose(&mut rng).expect("nonempty").clone());
            }
        }
    }
    let cap = max_deg + 1;
    match closure {
        Closure::None => seeds.extend(monomials_of_degree(n, u64::from(cap))),
        Closure::Stable | Closure::StronglyStable => {
            for i in 1..=n {
                if !seeds.iter().any(|u| u.pure_power_var() == Some(i)) {
                    seeds.push(Monomial::pure_power(n, i, cap));
                }
            }
            seeds = close(seeds, closure);
        }
    }
    MonomialIdeal::minimalize(seeds, ring).expect("monomials built in this ring")
}

fn close(seeds: Vec<Monomial>, closure: Closure) -> Vec<Monomial> {
    let mut seen: BTreeSet<Monomial> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Monomial> = seeds.into();
    while let Some(u) = queue.pop_front() {
        let n = u.num_vars();
        let sources: Vec<usize> = match closure {
            Closure::None => Vec::new(),
            Closure::Stable => vec![u.max_var()].into_iter().filter(|&m| m > 0).collect(),
            Closure::StronglyStable => (1..=n).filter(|&k| u.exponent(k) > 0).collect(),
        };
        for k in sources {
            for i in 1..k {
                let v = u.exchange(i, k, 1).expect("x_k divides u");
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Random m-primary lexsegment ideal with socle degree at most `max_deg`.
///
/// Half the seeds take the Hilbert function of a random monomial ideal,
/// the other half sample it directly (see [`random_hilbert_function`]).
pub fn random_lexsegment(ring: &Ring, max_deg: u32, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let h = if rng.gen_bool(0.5) {
        let density = rng.gen_range(0.15..=0.6);
        let base = random_ideal(ring, max_deg, density, Closure::None, seed);
        hilbert_function(&base).expect("base ideal is m-primary")
    } else {
        random_hilbert_function(ring.num_vars(), max_deg, &mut rng)
    };
    lex_ideal_from_hilbert(&h, ring).expect("Hilbert function of an actual quotient")
}

/// A random Hilbert function of an Artinian quotient of `K[x_1..x_n]`,
/// zero past `max_deg`.
///
/// `h(1)` is uniform in `1..=n`; each later value is drawn below the
/// Macaulay bound `h(j-1)^<j-1>`, either uniformly or as the smallest value
/// whose lower bound `h(j)^[j]` still reaches `h(j-1)`.
pub fn random_hilbert_function(n: usize, max_deg: u32, rng: &mut impl Rng) -> HilbertVector {
    let mut h = vec![1u64, rng.gen_range(1..=n as u64)];
    for j in 2..=max_deg as usize {
        let prev = h[j - 1];
        let bound = macaulay_upper(prev, j - 1).expect("small degrees");
        let next = if rng.gen_bool(0.5) {
            rng.gen_range(0..=bound)
        } else {
            (0..=bound)
                .find(|&a| macaulay_lower(a, j) >= prev)
                .unwrap_or(bound)
        };
        if next == 0 {
            break;
        }
        h.push(next);
    }
    h.truncate(max_deg as usize + 1);
    HilbertVector::new(h)
}
