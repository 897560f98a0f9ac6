//! Pochhammer symbols and the coefficients `γ_s`.
//!
//! `γ_s` is evaluated along three independent routes: the direct finite sum,
//! the `s`-term truncation of `₂F₁(-s-n-1, -s; -2s-n+2; 1)`, and the
//! differential form `[₀F₁(-2s-n+2; ∂_t) t^s]_{t=1}` applied to an explicit
//! polynomial in `t`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Rising factorial `(a)_r = a(a+1)⋯(a+r-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, r: u32) -> Rational {
    let mut acc = Rational::one();
    let mut f = a.clone();
    for _ in 0..r {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

/// Index `i < r` of the first vanishing factor `a + i` of `(a)_r`.
pub fn pochhammer_zero_index(a: &Rational, r: u32) -> Option<u32> {
    (0..r).find(|&i| (a + int(i as i64)).is_zero())
}

pub fn binomial(s: u32, r: u32) -> Rational {
    if r > s {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..r {
        acc = acc * int((s - i) as i64) / int((i + 1) as i64);
    }
    acc
}

fn lower_parameter(s: u32, n: usize) -> Rational {
    int(-2 * s as i64 - n as i64 + 2)
}

fn singular(what: &'static str, s: u32, n: usize, index: u32) -> Error {
    Error::Singular { what, s, n, index }
}

/// `γ_s = Σ_{r=0}^s (-1)^r (-s-n-1)_r / (-2s-n+2)_r · C(s, r)`.
pub fn gamma_s(s: u32, n: usize) -> Result<Rational> {
    let a = int(-(s as i64) - n as i64 - 1);
    let c = lower_parameter(s, n);
    if let Some(i) = pochhammer_zero_index(&c, s) {
        return Err(singular("(-2s-n+2)_r", s, n, i));
    }
    let mut total = Rational::zero();
    for r in 0..=s {
        let sign = if r % 2 == 0 { int(1) } else { int(-1) };
        total += sign * pochhammer(&a, r) / pochhammer(&c, r) * binomial(s, r);
    }
    Ok(total)
}

/// `Σ_{r=0}^{terms-1} (a)_r (b)_r / (c)_r · z^r / r!`.
pub fn hyp2f1_truncated(a: &Rational, b: &Rational, c: &Rational, z: &Rational, terms: u32) -> Result<Rational, u32> {
    let mut total = Rational::zero();
    // running term t_r, updated by the ratio t_{r+1}/t_r
    let mut term = Rational::one();
    for r in 0..terms {
        total += &term;
        let denom_factor = c + int(r as i64);
        if r + 1 < terms {
            if denom_factor.is_zero() {
                return Err(r);
            }
            term = term * (a + int(r as i64)) * (b + int(r as i64)) / denom_factor * z / int((r + 1) as i64);
        }
    }
    Ok(total)
}

/// `γ_s` as the `(s+1)`-term truncation of `₂F₁(-s-n-1, -s; -2s-n+2; 1)`.
pub fn gamma_2f1(s: u32, n: usize) -> Result<Rational> {
    let a = int(-(s as i64) - n as i64 - 1);
    let b = int(-(s as i64));
    let c = lower_parameter(s, n);
    hyp2f1_truncated(&a, &b, &c, &int(1), s + 1).map_err(|i| singular("₂F₁ lower parameter", s, n, i))
}

/// Polynomial in one formal variable, coefficients by ascending power.
#[derive(Debug, Clone, PartialEq, Eq)]
struct UniPoly(Vec<Rational>);

impl UniPoly {
    fn monomial(k: u32) -> Self {
        let mut v = vec![Rational::zero(); k as usize + 1];
        v[k as usize] = Rational::one();
        UniPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn derivative(&self) -> Self {
        UniPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    fn eval(&self, t: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }
}

/// `[₀F₁(c; ∂_t) t^s]_{t=1}` with `c = -2s-n+2`, computed by applying
/// `Σ_r ∂_t^r / ((c)_r r!)` to `t^s` until the derivatives vanish.
pub fn gamma_0f1(s: u32, n: usize) -> Result<Rational> {
    let c = lower_parameter(s, n);
    let mut deriv = UniPoly::monomial(s);
    let mut image = UniPoly(vec![Rational::zero(); s as usize + 1]);
    let mut r = 0u32;
    while !deriv.is_zero() {
        let denom = pochhammer(&c, r) * pochhammer(&int(1), r);
        if denom.is_zero() {
            let i = pochhammer_zero_index(&c, r).expect("zero Pochhammer has a zero factor");
            return Err(singular("₀F₁ lower parameter", s, n, i));
        }
        for (k, coeff) in deriv.0.iter().enumerate() {
            image.0[k] += coeff / &denom;
        }
        deriv = deriv.derivative();
        r += 1;
    }
    Ok(image.eval(&int(1)))
}

/// Outcome of comparing the three routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Consistency {
    /// All three routes agree.
    Ok,
    /// Some route hit a vanishing Pochhammer factor.
    Singular { index: u32 },
    /// The routes disagree.
    Mismatch,
}

impl Consistency {
    pub fn label(&self) -> &'static str {
        match self {
            Consistency::Ok => "ok",
            Consistency::Singular { .. } => "singular",
            Consistency::Mismatch => "mismatch",
        }
    }
}

/// One row of a `γ_s` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRow {
    pub s: u32,
    pub n: usize,
    pub direct: Option<Rational>,
    pub hypergeometric_2f1: Option<Rational>,
    pub differential_0f1: Option<Rational>,
    pub consistency: Consistency,
}

pub fn gamma_row(s: u32, n: usize) -> GammaRow {
    let results = [gamma_s(s, n), gamma_2f1(s, n), gamma_0f1(s, n)];
    let singular_index = results.iter().find_map(|r| match r {
        Err(Error::Singular { index, .. }) => Some(*index),
        _ => None,
    });
    let [direct, f21, f01] = results.map(|r| r.ok());
    let consistency = match singular_index {
        Some(index) => Consistency::Singular { index },
        None if direct == f21 && f21 == f01 => Consistency::Ok,
        None => Consistency::Mismatch,
    };
    GammaRow {
        s,
        n,
        direct,
        hypergeometric_2f1: f21,
        differential_0f1: f01,
        consistency,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(2), 3), int(24));
        assert_eq!(pochhammer(&int(-3), 2), int(6));
        assert_eq!(pochhammer(&int(-2), 4), int(0));
        assert_eq!(pochhammer_zero_index(&int(-2), 4), Some(2));
        assert_eq!(pochhammer_zero_index(&int(-2), 2), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 4), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn gamma_examples() {
        for n in 1..=5 {
            assert_eq!(gamma_s(0, n).unwrap(), int(1));
        }
        // 1 + (-1)(-4)/(-2) = 1 - 2
        assert_eq!(gamma_s(1, 2).unwrap(), int(-1));
    }

    /// Brute-force oracle: term-by-term with explicit products, no shared helpers.
    fn gamma_oracle(s: i64, n: i64) -> Rational {
        let mut total = Rational::zero();
        for r in 0..=s {
            let mut num = int(1);
            let mut den = int(1);
            for i in 0..r {
                num *= int(-s - n - 1 + i);
                den *= int(-2 * s - n + 2 + i);
            }
            let mut choose = int(1);
            for i in 0..r {
                choose = choose * int(s - i) / int(i + 1);
            }
            let sign = if r % 2 == 0 { 1 } else { -1 };
            total += int(sign) * num / den * choose;
        }
        total
    }

    #[test]
    fn direct_and_2f1_agree_with_oracle() {
        for n in 1..=5 {
            for s in 0..=20u32 {
                let expected = gamma_oracle(s as i64, n as i64);
                assert_eq!(gamma_s(s, n).unwrap(), expected, "direct s={s} n={n}");
                assert_eq!(gamma_2f1(s, n).unwrap(), expected, "2F1 s={s} n={n}");
            }
        }
    }

    /// [₀F₁(c; ∂_t) t^s]_{t=1} = Σ_r C(s,r)/(c)_r, summed here by hand.
    #[test]
    fn differential_route_matches_its_own_oracle() {
        for n in 1..=5i64 {
            for s in 0..=12i64 {
                let mut expected = Rational::zero();
                for r in 0..=s {
                    let mut den = int(1);
                    let mut choose = int(1);
                    for i in 0..r {
                        den *= int(-2 * s - n + 2 + i);
                        choose = choose * int(s - i) / int(i + 1);
                    }
                    expected += choose / den;
                }
                assert_eq!(gamma_0f1(s as u32, n as usize).unwrap(), expected);
            }
        }
    }

    #[test]
    fn differential_route_disagrees_at_s1_n2() {
        // Σ_r C(1,r)/(-2)_r = 1 - 1/2
        assert_eq!(gamma_0f1(1, 2).unwrap(), rat(1, 2));
        assert_eq!(gamma_row(1, 2).consistency, Consistency::Mismatch);
        assert_eq!(gamma_row(0, 3).consistency, Consistency::Ok);
    }

    #[test]
    fn singular_pairs_are_reported() {
        // n = 0 is outside the lattice dimensions but exercises the check:
        // s = 1 gives c = 0, so (c)_1 vanishes at factor 0.
        match gamma_s(1, 0) {
            Err(Error::Singular { index, s, .. }) => assert_eq!((index, s), (0, 1)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            gamma_row(1, 0).consistency,
            Consistency::Singular { index: 0 }
        ));
    }
}
