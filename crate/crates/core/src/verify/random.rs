//! Seeded random rationals and polynomials of bounded height.

use rand::Rng;

use crate::clifford::{Blade, Multivector};
use crate::poly::{CliffordPoly, LatticeParams, MultiIndex};
use crate::rational::{rat, Rational};

/// A nonzero rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 4`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let p = rng.gen_range(-5i64..=5);
        if p != 0 {
            return rat(p, rng.gen_range(1i64..=4));
        }
    }
}

/// A Clifford-valued polynomial with up to `terms` random terms of degree `≤ degree`.
pub fn random_poly<R: Rng>(rng: &mut R, params: &LatticeParams, degree: u32, terms: usize) -> CliffordPoly {
    let n = params.n();
    let monomials = MultiIndex::up_to_degree(n, degree);
    let blades = Blade::all(n);
    let mut p = CliffordPoly::zero(params);
    for _ in 0..terms {
        let alpha = monomials[rng.gen_range(0..monomials.len())].clone();
        let blade = blades[rng.gen_range(0..blades.len())];
        p.add_term(alpha, &Multivector::term(n, blade, random_rational(rng)));
    }
    p
}

/// A scalar polynomial with up to `terms` random terms of degree `≤ degree`.
pub fn random_scalar_poly<R: Rng>(rng: &mut R, params: &LatticeParams, degree: u32, terms: usize) -> CliffordPoly {
    let n = params.n();
    let monomials = MultiIndex::up_to_degree(n, degree);
    let mut p = CliffordPoly::zero(params);
    for _ in 0..terms {
        let alpha = monomials[rng.gen_range(0..monomials.len())].clone();
        p.add_term(alpha, &Multivector::scalar(n, random_rational(rng)));
    }
    p
}
