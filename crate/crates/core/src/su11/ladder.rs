//! Ladder bases `w_s = ((1/h)W_h^±)^s m_0`.

use crate::error::{Error, Result};
use crate::expr::{apply, euler_difference};
use crate::ops::euler;
use crate::poly::{CliffordPoly, LatticeParams, Sign};
use crate::rational::{int, Rational};

use super::{proportionality, raising_operator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderBasis {
    pub sign: Sign,
    pub seed: CliffordPoly,
    /// `w_0, ..., w_{s_max}`.
    pub terms: Vec<CliffordPoly>,
}

/// Checks `E_h^+ m_0 = E_h^- m_0 = 0`, returning the first nonzero image.
pub(crate) fn check_joint_kernel(m0: &CliffordPoly) -> Result<()> {
    for s in [Sign::Plus, Sign::Minus] {
        let image = euler(m0, s)?;
        if !image.is_zero() {
            return Err(Error::Precondition {
                message: format!("seed is not in the kernel of E_h^{s}"),
                residual: Box::new(image),
            });
        }
    }
    Ok(())
}

/// Builds `w_0..w_{s_max}` from a seed in the joint kernel of `E_h^±` and
/// checks `E_h^± w_s = s·w_s` exactly for the matching sign.
pub fn build_ladder(sign: Sign, m0: &CliffordPoly, s_max: u32) -> Result<LadderBasis> {
    check_joint_kernel(m0)?;
    let raise = raising_operator(m0.params(), sign);
    let mut terms = vec![m0.clone()];
    for s in 1..=s_max {
        let next = apply(&raise, terms.last().expect("nonempty"))?;
        let residual = euler(&next, sign)?.sub(&next.scale(&int(s as i64)));
        if !residual.is_zero() {
            return Err(Error::Structural {
                message: format!("w_{s} is not an eigenfunction of E_h^{sign} with eigenvalue {s}"),
                residual: Some(Box::new(residual)),
            });
        }
        terms.push(next);
    }
    Ok(LadderBasis {
        sign,
        seed: m0.clone(),
        terms,
    })
}

/// The constant `c(s, n)` in `(E_h^+ - E_h^-) w_s = c(s, n) w_{s-1}`, with
/// flags for the two candidate closed forms `s(s+n+1)` and `s(s+n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoweringRecord {
    pub s: u32,
    pub n: usize,
    /// `None` when the image is not a multiple of `w_{s-1}`.
    pub constant: Option<Rational>,
    pub matches_s_s_plus_n_plus_1: bool,
    pub matches_s_s_plus_n_minus_1: bool,
}

pub fn lowering_constants(params: &LatticeParams, sign: Sign, s_max: u32) -> Result<Vec<LoweringRecord>> {
    let ladder = build_ladder(sign, &CliffordPoly::one(params), s_max)?;
    let lower = euler_difference();
    let n = params.n();
    let mut out = Vec::new();
    for s in 1..=s_max {
        let image = apply(&lower, &ladder.terms[s as usize])?;
        let constant = proportionality(&image, &ladder.terms[s as usize - 1]);
        let (si, ni) = (s as i64, n as i64);
        let plus_one = int(si * (si + ni + 1));
        let derived = int(si * (si + ni - 1));
        out.push(LoweringRecord {
            s,
            n,
            matches_s_s_plus_n_plus_1: constant.as_ref() == Some(&plus_one),
            matches_s_s_plus_n_minus_1: constant.as_ref() == Some(&derived),
            constant,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Multivector;
    use crate::rational::rat;

    #[test]
    fn trivial_ladder() {
        let params = LatticeParams::standard(3).unwrap();
        let one = CliffordPoly::one(&params);
        let l = build_ladder(Sign::Plus, &one, 0).unwrap();
        assert_eq!(l.terms, vec![one]);
    }

    #[test]
    fn first_rung_in_one_dimension() {
        let h = rat(2, 3);
        let params = LatticeParams::new(1, h.clone(), int(1), int(0)).unwrap();
        let l = build_ladder(Sign::Plus, &CliffordPoly::one(&params), 1).unwrap();
        let half = CliffordPoly::constant(&params, Multivector::scalar(1, &h / int(2)));
        let expected = CliffordPoly::var(&params, 1).unwrap().add(&half).scale(&h.recip());
        assert_eq!(l.terms[1], expected);
        assert_eq!(euler(&l.terms[1], Sign::Plus).unwrap(), expected);
    }

    #[test]
    fn seed_outside_kernel_rejected() {
        let params = LatticeParams::standard(2).unwrap();
        let x1 = CliffordPoly::var(&params, 1).unwrap();
        match build_ladder(Sign::Minus, &x1, 2) {
            Err(Error::Precondition { residual, .. }) => assert!(!residual.is_zero()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn eigenvalues_hold_for_both_signs() {
        for n in 1..=3 {
            let params = LatticeParams::new(n, rat(1, 2), rat(3, 2), rat(-1, 4)).unwrap();
            for sign in [Sign::Plus, Sign::Minus] {
                let l = build_ladder(sign, &CliffordPoly::one(&params), 5).unwrap();
                assert_eq!(l.terms.len(), 6);
                for (s, w) in l.terms.iter().enumerate() {
                    assert_eq!(w.degree(), s as i64);
                }
            }
        }
    }

    #[test]
    fn lowering_constant_table() {
        let params = LatticeParams::standard(2).unwrap();
        let rows = lowering_constants(&params, Sign::Plus, 4).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.constant.is_some()));
    }
}
