//! The semigroup `𝔼_h(t) = exp(t(E_h^- - E_h^+))` on polynomials.
//!
//! `E_h^- - E_h^+` strictly lowers the degree, so the exponential is a finite
//! sum. The truncation is re-checked at runtime: the first omitted term must
//! vanish.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr::apply;
use crate::ops::euler;
use crate::poly::{pow, CliffordPoly, LatticeParams, Sign};
use crate::rational::{int, Rational};
use crate::su11::raising_operator;

/// A polynomial in a formal time variable `t` with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimePoly {
    params: LatticeParams,
    coeffs: BTreeMap<u32, CliffordPoly>,
}

impl TimePoly {
    pub fn zero(params: &LatticeParams) -> Self {
        TimePoly {
            params: params.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(p: &CliffordPoly) -> Self {
        let mut g = TimePoly::zero(p.params());
        g.add_term(0, p);
        g
    }

    pub fn params(&self) -> &LatticeParams {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero coefficients by ascending power of `t`.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &CliffordPoly)> {
        self.coeffs.iter().map(|(k, p)| (*k, p))
    }

    pub fn coeff(&self, power: u32) -> CliffordPoly {
        self.coeffs
            .get(&power)
            .cloned()
            .unwrap_or_else(|| CliffordPoly::zero(&self.params))
    }

    /// Degree in `t`; the zero time polynomial has degree `-1`.
    pub fn t_degree(&self) -> i64 {
        self.coeffs.keys().next_back().map_or(-1, |&k| k as i64)
    }

    pub fn add_term(&mut self, power: u32, p: &CliffordPoly) {
        let entry = self
            .coeffs
            .entry(power)
            .or_insert_with(|| CliffordPoly::zero(&self.params));
        entry.add_assign(p);
        if entry.is_zero() {
            self.coeffs.remove(&power);
        }
    }

    pub fn add(&self, other: &TimePoly) -> TimePoly {
        let mut out = self.clone();
        for (k, p) in other.coeffs() {
            out.add_term(k, p);
        }
        out
    }

    pub fn sub(&self, other: &TimePoly) -> TimePoly {
        let mut out = self.clone();
        for (k, p) in other.coeffs() {
            out.add_term(k, &p.neg());
        }
        out
    }

    /// Value at a rational time.
    pub fn eval(&self, t: &Rational) -> CliffordPoly {
        let mut out = CliffordPoly::zero(&self.params);
        for (k, p) in self.coeffs() {
            out.add_scaled(p, &pow(t, k));
        }
        out
    }

    /// Term-wise `∂_t`.
    pub fn dt(&self) -> TimePoly {
        let mut out = TimePoly::zero(&self.params);
        for (k, p) in self.coeffs() {
            if k > 0 {
                out.add_term(k - 1, &p.scale(&int(k as i64)));
            }
        }
        out
    }

    /// Applies a spatial operator coefficient-wise.
    pub fn map(&self, f: impl Fn(&CliffordPoly) -> Result<CliffordPoly>) -> Result<TimePoly> {
        let mut out = TimePoly::zero(&self.params);
        for (k, p) in self.coeffs() {
            out.add_term(k, &f(p)?);
        }
        Ok(out)
    }
}

/// `(E_h^- - E_h^+) p`.
pub fn lowering(p: &CliffordPoly) -> Result<CliffordPoly> {
    Ok(euler(p, Sign::Minus)?.sub(&euler(p, Sign::Plus)?))
}

/// Coefficients `lowering^r(p) / r!` for `r = 0..=deg p`, after checking that
/// `lowering^{deg p + 1}(p) = 0`.
fn nilpotent_terms(p: &CliffordPoly) -> Result<Vec<CliffordPoly>> {
    let bound = p.degree().max(0) as u32 + 1;
    let mut terms = Vec::new();
    let mut cur = p.clone();
    let mut fact = Rational::one();
    for r in 0..bound {
        if r > 0 {
            fact *= int(r as i64);
        }
        terms.push(cur.scale(&fact.recip()));
        cur = lowering(&cur)?;
    }
    if !cur.is_zero() {
        return Err(Error::Structural {
            message: format!("lowering^{bound} of a degree {} polynomial is nonzero", bound - 1),
            residual: Some(Box::new(cur)),
        });
    }
    Ok(terms)
}

/// `𝔼_h(t) p` at a rational time (negative times included).
pub fn semigroup_apply(t: &Rational, p: &CliffordPoly) -> Result<CliffordPoly> {
    Ok(semigroup_trajectory(p)?.eval(t))
}

/// `𝔼_h(t) p` as a polynomial in `t`.
pub fn semigroup_trajectory(p: &CliffordPoly) -> Result<TimePoly> {
    let mut g = TimePoly::zero(p.params());
    for (r, term) in nilpotent_terms(p)?.iter().enumerate() {
        g.add_term(r as u32, term);
    }
    Ok(g)
}

/// Residuals of the Cauchy problem
/// `∂_t g + E_h^+ g - E_h^- g = 0`, `g(0) = f`, `E_h^+ g = E_h^- g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CauchyReport {
    pub pde_residual: TimePoly,
    pub initial_slice: CliffordPoly,
    pub constraint_residual: TimePoly,
}

impl CauchyReport {
    pub fn solves_pde(&self) -> bool {
        self.pde_residual.is_zero()
    }

    pub fn satisfies_constraint(&self) -> bool {
        self.constraint_residual.is_zero()
    }
}

pub fn cauchy_verify(g: &TimePoly) -> Result<CauchyReport> {
    let constraint_residual = g.map(|p| Ok(euler(p, Sign::Plus)?.sub(&euler(p, Sign::Minus)?)))?;
    let pde_residual = g.dt().add(&constraint_residual);
    Ok(CauchyReport {
        pde_residual,
        initial_slice: g.coeff(0),
        constraint_residual,
    })
}

/// Outcome of checking one operator identity on a polynomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub basis_size: usize,
    pub failures: usize,
    /// Largest absolute coefficient over all residuals.
    pub max_residual: Rational,
    /// First basis element with nonzero residual, and that residual.
    pub counterexample: Option<(CliffordPoly, CliffordPoly)>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

pub(crate) fn max_abs_coeff(p: &CliffordPoly) -> Rational {
    p.terms()
        .flat_map(|(_, mv)| mv.terms().map(|(_, c)| c.abs()))
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Checks `lhs(p) = rhs(p)` on every element of `basis`.
pub fn check_identity(
    name: &str,
    basis: &[CliffordPoly],
    lhs: impl Fn(&CliffordPoly) -> Result<CliffordPoly>,
    rhs: impl Fn(&CliffordPoly) -> Result<CliffordPoly>,
) -> Result<IdentityCheck> {
    let mut check = IdentityCheck {
        name: name.to_string(),
        basis_size: basis.len(),
        failures: 0,
        max_residual: Rational::zero(),
        counterexample: None,
    };
    for p in basis {
        let residual = lhs(p)?.sub(&rhs(p)?);
        if residual.is_zero() {
            continue;
        }
        check.failures += 1;
        let m = max_abs_coeff(&residual);
        if m > check.max_residual {
            check.max_residual = m;
        }
        if check.counterexample.is_none() {
            check.counterexample = Some((p.clone(), residual));
        }
    }
    Ok(check)
}

/// The two intertwining identities of `𝔼_h(t)` on the basis of degree `≤ d`:
///
/// - `(t E_h^- + (1-t) E_h^+) 𝔼_h(t) = 𝔼_h(t) E_h^+`
/// - `((1/h)W_h^+ - t(E_h^+ + E_h^- + nI)) 𝔼_h(t) = 𝔼_h(t) (1/h)W_h^+`
pub fn intertwine_verify(params: &LatticeParams, t: &Rational, d: u32) -> Result<Vec<IdentityCheck>> {
    let basis = CliffordPoly::basis(params, d);
    let one_minus_t = Rational::one() - t;
    let euler_mix = check_identity(
        "euler",
        &basis,
        |p| {
            let g = semigroup_apply(t, p)?;
            Ok(euler(&g, Sign::Minus)?
                .scale(t)
                .add(&euler(&g, Sign::Plus)?.scale(&one_minus_t)))
        },
        |p| semigroup_apply(t, &euler(p, Sign::Plus)?),
    )?;
    let raise = raising_operator(params, Sign::Plus);
    let n = int(params.n() as i64);
    let raising = check_identity(
        "raising",
        &basis,
        |p| {
            let g = semigroup_apply(t, p)?;
            let grading = euler(&g, Sign::Plus)?.add(&euler(&g, Sign::Minus)?).add(&g.scale(&n));
            Ok(apply(&raise, &g)?.sub(&grading.scale(t)))
        },
        |p| semigroup_apply(t, &apply(&raise, p)?),
    )?;
    Ok(vec![euler_mix, raising])
}

/// `𝔼_h(t+τ) = 𝔼_h(t)𝔼_h(τ)` and `𝔼_h(-t)𝔼_h(t) = I` on the basis of degree `≤ d`.
pub fn semigroup_property_verify(
    params: &LatticeParams,
    t: &Rational,
    tau: &Rational,
    d: u32,
) -> Result<Vec<IdentityCheck>> {
    let basis = CliffordPoly::basis(params, d);
    let sum = t + tau;
    let law = check_identity(
        "composition",
        &basis,
        |p| semigroup_apply(&sum, p),
        |p| semigroup_apply(t, &semigroup_apply(tau, p)?),
    )?;
    let neg = -t.clone();
    let inverse = check_identity(
        "inverse",
        &basis,
        |p| semigroup_apply(&neg, &semigroup_apply(t, p)?),
        |p| Ok(p.clone()),
    )?;
    Ok(vec![law, inverse])
}
