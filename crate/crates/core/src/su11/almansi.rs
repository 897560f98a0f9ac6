//! Almansi-type reconstruction
//! `m_s = Σ_{r=0}^s c_{r,s} ((1/h)W_h^±)^r (E_h^+ - E_h^-)^r w_s`
//! with `c_{0,s} = 1`, `c_{r+1,s} = c_{r,s} / ((r+1)(-2s-n+r+2))`.
//!
//! The candidate is checked against the joint eigenvalue equations and
//! compared with `γ_s·w_s`; both outcomes are recorded, not enforced.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{apply, euler_difference};
use crate::ops::euler;
use crate::poly::{CliffordPoly, Sign};
use crate::rational::{int, Rational};

use super::hypergeometric::gamma_s;
use super::{proportionality, raising_operator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmansiRecord {
    pub s: u32,
    pub sign: Sign,
    /// `c_{0,s}, ..., c_{s,s}`.
    pub coefficients: Vec<Rational>,
    pub candidate: CliffordPoly,
    pub passes_plus: bool,
    pub passes_minus: bool,
    /// `γ_s`, or `None` when its defining sum is singular.
    pub gamma: Option<Rational>,
    /// The `c` with `candidate = c·w_s`, if any.
    pub ratio_to_input: Option<Rational>,
    pub matches_gamma: bool,
}

impl AlmansiRecord {
    pub fn verified(&self) -> bool {
        self.passes_plus && self.passes_minus && self.matches_gamma
    }
}

pub fn almansi_coefficients(s: u32, n: usize) -> Result<Vec<Rational>> {
    let mut c = vec![Rational::one()];
    for r in 0..s {
        let denom = int((r + 1) as i64) * int(-2 * s as i64 - n as i64 + r as i64 + 2);
        if denom.is_zero() {
            return Err(Error::Singular {
                what: "Almansi coefficient recursion",
                s,
                n,
                index: r + 1,
            });
        }
        let next = c.last().expect("nonempty") / denom;
        c.push(next);
    }
    Ok(c)
}

pub fn almansi_reconstruct(s: u32, sign: Sign, w_s: &CliffordPoly) -> Result<AlmansiRecord> {
    let params = w_s.params();
    let n = params.n();
    let eigen = euler(w_s, sign)?.sub(&w_s.scale(&int(s as i64)));
    if !eigen.is_zero() {
        return Err(Error::Precondition {
            message: format!("input is not an eigenfunction of E_h^{sign} with eigenvalue {s}"),
            residual: Box::new(eigen),
        });
    }
    let coefficients = almansi_coefficients(s, n)?;
    let raise = raising_operator(params, sign);
    let lower = euler_difference();
    let mut candidate = CliffordPoly::zero(params);
    let mut lowered = w_s.clone();
    for (r, c) in coefficients.iter().enumerate() {
        if r > 0 {
            lowered = apply(&lower, &lowered)?;
        }
        let mut term = lowered.clone();
        for _ in 0..r {
            term = apply(&raise, &term)?;
        }
        candidate.add_scaled(&term, c);
    }
    let target = int(s as i64);
    let passes_plus = euler(&candidate, Sign::Plus)? == candidate.scale(&target);
    let passes_minus = euler(&candidate, Sign::Minus)? == candidate.scale(&target);
    let gamma = gamma_s(s, n).ok();
    let ratio_to_input = proportionality(&candidate, w_s);
    let matches_gamma = gamma.as_ref().is_some_and(|g| candidate == w_s.scale(g));
    Ok(AlmansiRecord {
        s,
        sign,
        coefficients,
        candidate,
        passes_plus,
        passes_minus,
        gamma,
        ratio_to_input,
        matches_gamma,
    })
}
