//! Joint eigenspaces `{p : E_h^+ p = E_h^- p = s·p, deg p ≤ d}`.
//!
//! Both Euler operators act on coefficients as scalars, so the computation
//! runs on scalar polynomials; the Clifford-valued eigenspace is the tensor
//! product of the returned basis with all blades.

use num_traits::Zero;

use crate::clifford::Blade;
use crate::error::Result;
use crate::linalg::{nullspace, Matrix};
use crate::ops::euler;
use crate::poly::{CliffordPoly, LatticeParams, MultiIndex, Sign};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBasis {
    pub degree: u32,
    pub eigenvalue: u32,
    /// Scalar polynomials, each normalized so its first nonzero coefficient
    /// in monomial order is `1`.
    pub basis: Vec<CliffordPoly>,
}

impl EigenBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

/// Scalar coefficient vector of `p` against `monomials`.
pub(crate) fn scalar_coords(p: &CliffordPoly, monomials: &[MultiIndex]) -> Vec<Rational> {
    monomials.iter().map(|a| p.coeff(a).coeff(Blade::SCALAR)).collect()
}

pub(crate) fn from_coords(params: &LatticeParams, monomials: &[MultiIndex], v: &[Rational]) -> CliffordPoly {
    let mut p = CliffordPoly::zero(params);
    for (a, c) in monomials.iter().zip(v) {
        if !c.is_zero() {
            p.add_assign(&CliffordPoly::scalar_monomial(params, a.clone(), c.clone()));
        }
    }
    p
}

/// Matrix of `E_h^sign - s·I` on the scalar monomials of degree `≤ d`.
fn shifted_euler_matrix(params: &LatticeParams, monomials: &[MultiIndex], sign: Sign, s: u32) -> Result<Matrix> {
    let mut m = Matrix::zeros(monomials.len(), monomials.len());
    for (col, alpha) in monomials.iter().enumerate() {
        let basis = CliffordPoly::scalar_monomial(params, alpha.clone(), int(1));
        let image = euler(&basis, sign)?.sub(&basis.scale(&int(s as i64)));
        for (row, v) in scalar_coords(&image, monomials).into_iter().enumerate() {
            m.set(row, col, v);
        }
    }
    Ok(m)
}

pub fn eigenspace(params: &LatticeParams, d: u32, s: u32) -> Result<EigenBasis> {
    let monomials = MultiIndex::up_to_degree(params.n(), d);
    let plus = shifted_euler_matrix(params, &monomials, Sign::Plus, s)?;
    let minus = shifted_euler_matrix(params, &monomials, Sign::Minus, s)?;
    let basis = nullspace(&plus.vstack(&minus))
        .into_iter()
        .map(|v| {
            let lead = v.iter().find(|c| !c.is_zero()).cloned().expect("nonzero kernel vector");
            let v: Vec<Rational> = v.iter().map(|c| c / &lead).collect();
            from_coords(params, &monomials, &v)
        })
        .collect();
    Ok(EigenBasis {
        degree: d,
        eigenvalue: s,
        basis,
    })
}
