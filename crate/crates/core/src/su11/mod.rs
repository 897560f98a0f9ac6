//! The su(1,1) ladder structure on Clifford-valued polynomials.
//!
//! `(1/h)W_h^±` raise, `E_h^+ - E_h^-` lowers, and `E_h^± + (n/2)I` grades.
//! Everything here is built from exact operator application; closed forms
//! quoted in the literature are compared against, never assumed.

pub mod almansi;
pub mod appell;
pub mod casimir;
pub mod decompose;
pub mod eigen;
pub mod hypergeometric;
pub mod ladder;

use num_traits::Zero;

use crate::expr::{scaled_weight_sum, OperatorExpr};
use crate::ops::WeightKind;
use crate::poly::{CliffordPoly, LatticeParams, Sign};
use crate::rational::Rational;

pub use almansi::{almansi_reconstruct, AlmansiRecord};
pub use appell::{build_appell, exp_dirac, AppellSequence};
pub use casimir::{casimir_apply, casimir_operator, casimir_table, CasimirRecord, CasimirTable};
pub use decompose::{fourier_decompose, reconstruct, Component};
pub use eigen::{eigenspace, EigenBasis};
pub use hypergeometric::{gamma_0f1, gamma_2f1, gamma_row, gamma_s, pochhammer, Consistency, GammaRow};
pub use ladder::{build_ladder, lowering_constants, LadderBasis, LoweringRecord};

/// `(1/h) W_h^±`.
pub fn raising_operator(params: &LatticeParams, sign: Sign) -> OperatorExpr {
    scaled_weight_sum(params.n(), WeightKind::from_sign(sign), params.h())
}

/// The `c` with `p = c·q`, if one exists. Zero `p` gives `Some(0)`; nonzero
/// `p` against zero `q` gives `None`.
pub fn proportionality(p: &CliffordPoly, q: &CliffordPoly) -> Option<Rational> {
    if p.is_zero() {
        return Some(Rational::zero());
    }
    let (alpha, mv) = q.terms().next()?;
    let (blade, qc) = mv.terms().next()?;
    let c = p.coeff(alpha).coeff(blade) / qc;
    if c.is_zero() {
        return None;
    }
    (q.scale(&c) == *p).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn proportionality_cases() {
        let params = LatticeParams::standard(2).unwrap();
        let x1 = CliffordPoly::var(&params, 1).unwrap();
        let x2 = CliffordPoly::var(&params, 2).unwrap();
        assert_eq!(proportionality(&x1.scale(&rat(-3, 2)), &x1), Some(rat(-3, 2)));
        assert_eq!(proportionality(&x1, &x2), None);
        assert_eq!(proportionality(&x1.add(&x2), &x1), None);
        assert_eq!(proportionality(&CliffordPoly::zero(&params), &x1), Some(int(0)));
        assert_eq!(proportionality(&x1, &CliffordPoly::zero(&params)), None);
    }
}
