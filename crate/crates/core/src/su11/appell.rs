//! Appell sequences `m_s = λ_s (M_h^±)^s 1` for the Dirac operators `D_h^∓`.
//!
//! The normalization `λ_s` is computed, not assumed: with `u_s = (M_h^±)^s 1`,
//! each `D_h^∓ u_s` is checked to be `c_s u_{s-1}` and then
//! `λ_s = Π_{q≤s} q / c_q` makes `D_h^∓ m_s = s m_{s-1}` hold exactly.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ops::{dirac, raise};
use crate::poly::{CliffordPoly, LatticeParams, Sign};
use crate::rational::{int, Rational};

use super::proportionality;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppellSequence {
    /// `+` pairs `M_h^+` with `D_h^-`; `-` pairs `M_h^-` with `D_h^+`.
    pub sign: Sign,
    /// `λ_0, ..., λ_{s_max}`.
    pub lambdas: Vec<Rational>,
    /// `c_1, ..., c_{s_max}` with `D_h^∓ u_s = c_s u_{s-1}`.
    pub ratios: Vec<Rational>,
    /// `m_0, ..., m_{s_max}`.
    pub terms: Vec<CliffordPoly>,
}

pub fn build_appell(params: &LatticeParams, sign: Sign, s_max: u32) -> Result<AppellSequence> {
    let lowering = sign.flip();
    let mut raw = vec![CliffordPoly::one(params)];
    let mut ratios = Vec::new();
    let mut lambdas = vec![Rational::one()];
    for s in 1..=s_max {
        let u = raise(raw.last().expect("nonempty"), sign)?;
        let image = dirac(&u, lowering)?;
        let prev = &raw[s as usize - 1];
        let c = proportionality(&image, prev).ok_or_else(|| Error::Structural {
            message: format!("D_h^{lowering} u_{s} is not a multiple of u_{}", s - 1),
            residual: Some(Box::new(image.clone())),
        })?;
        if c.is_zero() {
            return Err(Error::Structural {
                message: format!("normalization impossible: c_{s} = 0"),
                residual: None,
            });
        }
        let lambda = lambdas.last().expect("nonempty") * int(s as i64) / &c;
        ratios.push(c);
        lambdas.push(lambda);
        raw.push(u);
    }
    let terms = raw.iter().zip(&lambdas).map(|(u, l)| u.scale(l)).collect();
    Ok(AppellSequence {
        sign,
        lambdas,
        ratios,
        terms,
    })
}

/// `exp(t D_h^±) p = Σ_r t^r/r! (D_h^±)^r p`, a finite sum because `D_h^±`
/// lowers the degree.
pub fn exp_dirac(t: &Rational, p: &CliffordPoly, sign: Sign) -> Result<CliffordPoly> {
    let mut out = p.clone();
    let mut cur = p.clone();
    let mut coeff = Rational::one();
    let mut r = 0i64;
    loop {
        cur = dirac(&cur, sign)?;
        if cur.is_zero() {
            return Ok(out);
        }
        r += 1;
        coeff = coeff * t / int(r);
        out.add_scaled(&cur, &coeff);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Multivector;
    use crate::rational::rat;
    use crate::su11::hypergeometric::binomial;

    #[test]
    fn zeroth_term() {
        let params = LatticeParams::standard(2).unwrap();
        let a = build_appell(&params, Sign::Plus, 0).unwrap();
        assert_eq!(a.lambdas, vec![int(1)]);
        assert_eq!(a.terms, vec![CliffordPoly::one(&params)]);
    }

    /// D_h^-(e1 (x1 + h/2)) = e1 e1 = -1, so c_1 = -1 and m_1 = -e1 (x1 + h/2).
    #[test]
    fn first_term_in_one_dimension() {
        let h = rat(1, 3);
        let params = LatticeParams::new(1, h.clone(), int(1), int(0)).unwrap();
        let a = build_appell(&params, Sign::Plus, 1).unwrap();
        assert_eq!(a.ratios, vec![int(-1)]);
        assert_eq!(a.lambdas[1], int(-1));
        let e1 = Multivector::generator(1, 1).unwrap();
        let half = CliffordPoly::constant(&params, Multivector::scalar(1, &h / int(2)));
        let expected = CliffordPoly::var(&params, 1).unwrap().add(&half).left_mul(&e1).neg();
        assert_eq!(a.terms[1], expected);
    }

    #[test]
    fn appell_property_and_binomial_expansion() {
        for n in 1..=2 {
            let params = LatticeParams::new(n, rat(1, 2), int(2), rat(1, 3)).unwrap();
            for sign in [Sign::Plus, Sign::Minus] {
                let a = build_appell(&params, sign, 4).unwrap();
                for s in 1..a.terms.len() {
                    let lhs = dirac(&a.terms[s], sign.flip()).unwrap();
                    assert_eq!(lhs, a.terms[s - 1].scale(&int(s as i64)));
                }
                let t = rat(-2, 3);
                for s in 0..a.terms.len() {
                    let mut expected = CliffordPoly::zero(&params);
                    for r in 0..=s {
                        let c = binomial(s as u32, r as u32) * crate::poly::pow(&t, r as u32);
                        expected.add_scaled(&a.terms[s - r], &c);
                    }
                    assert_eq!(exp_dirac(&t, &a.terms[s], sign.flip()).unwrap(), expected);
                }
            }
        }
    }
}
