//! Finite-difference operators on the lattice `hZ^n`.
//!
//! Every function here acts exactly on a [`CliffordPoly`]. Operators built
//! from the weight `w(t) = mu·t + b` use the identity
//! `mu⁻¹ w(x_j + δ) = x_j + δ + b/mu`, so no division by `mu` survives past
//! the offset.

use crate::clifford::{check_axis, Multivector};
use crate::error::{Error, Result};
use crate::poly::{CliffordPoly, Sign};
use crate::rational::Rational;

/// Which multiplication operator built from the weight `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// `W_j = mu⁻¹ w(x_j)`.
    Center,
    /// `W_h^{+j} = mu⁻¹ w(x_j + h/2) T_h^{+j}`.
    Plus,
    /// `W_h^{-j} = mu⁻¹ w(x_j - h/2) T_h^{-j}`.
    Minus,
}

impl WeightKind {
    pub fn sign(self) -> Option<Sign> {
        match self {
            WeightKind::Center => None,
            WeightKind::Plus => Some(Sign::Plus),
            WeightKind::Minus => Some(Sign::Minus),
        }
    }

    pub fn from_sign(sign: Sign) -> Self {
        match sign {
            Sign::Plus => WeightKind::Plus,
            Sign::Minus => WeightKind::Minus,
        }
    }
}

/// `∂_h^{+j} p = (p(x + h e_j) - p(x)) / h`, `∂_h^{-j} p = (p(x) - p(x - h e_j)) / h`.
pub fn fdiff(p: &CliffordPoly, j: usize, dir: Sign) -> Result<CliffordPoly> {
    let shifted = p.shift(j, dir)?;
    let inv_h = p.params().h().recip();
    let diff = match dir {
        Sign::Plus => shifted.sub(p),
        Sign::Minus => p.sub(&shifted),
    };
    Ok(diff.scale(&inv_h))
}

/// `mu⁻¹ w(x_j ± h/2)` times `p`, with no shift.
fn weight_factor(p: &CliffordPoly, j: usize, sign: Option<Sign>) -> CliffordPoly {
    let params = p.params();
    let offset = params.weight_offset(&params.half_step(sign));
    p.mul_linear(j, &offset)
}

/// `W_j p`, `W_h^{+j} p` or `W_h^{-j} p`.
pub fn weight(p: &CliffordPoly, j: usize, kind: WeightKind) -> Result<CliffordPoly> {
    check_axis(j, p.n())?;
    Ok(match kind.sign() {
        None => weight_factor(p, j, None),
        Some(s) => weight_factor(&p.shift(j, s)?, j, Some(s)),
    })
}

/// `D_h^± = Σ_j e_j ∂_h^{±j}` with left Clifford multiplication.
pub fn dirac(p: &CliffordPoly, sign: Sign) -> Result<CliffordPoly> {
    let n = p.n();
    let mut out = CliffordPoly::zero_shared(p.shared_params().clone());
    for j in 1..=n {
        let ej = Multivector::generator(j, n)?;
        out.add_assign(&fdiff(p, j, sign)?.left_mul(&ej));
    }
    Ok(out)
}

/// `E_h^± = Σ_j mu⁻¹ w(x_j ± h/2) ∂_h^{±j}`.
pub fn euler(p: &CliffordPoly, sign: Sign) -> Result<CliffordPoly> {
    let mut out = CliffordPoly::zero_shared(p.shared_params().clone());
    for j in 1..=p.n() {
        out.add_assign(&weight_factor(&fdiff(p, j, sign)?, j, Some(sign)));
    }
    Ok(out)
}

/// `E_h^+ = Σ_j W_h^{+j} ∂_h^{-j}` and `E_h^- = Σ_j W_h^{-j} ∂_h^{+j}`; the
/// composed form that must agree with [`euler`].
pub fn euler_composed(p: &CliffordPoly, sign: Sign) -> Result<CliffordPoly> {
    let mut out = CliffordPoly::zero_shared(p.shared_params().clone());
    for j in 1..=p.n() {
        let d = fdiff(p, j, sign.flip())?;
        out.add_assign(&weight(&d, j, WeightKind::from_sign(sign))?);
    }
    Ok(out)
}

/// `M_h^± = Σ_j e_j W_h^{±j}`.
pub fn raise(p: &CliffordPoly, sign: Sign) -> Result<CliffordPoly> {
    let n = p.n();
    let mut out = CliffordPoly::zero_shared(p.shared_params().clone());
    for j in 1..=n {
        let ej = Multivector::generator(j, n)?;
        out.add_assign(&weight(p, j, WeightKind::from_sign(sign))?.left_mul(&ej));
    }
    Ok(out)
}

/// `S_jk^{±h} = mu⁻¹ w(x_j ± h/2) ∂_h^{±k} - mu⁻¹ w(x_k ± h/2) ∂_h^{±j}`.
pub fn angular(p: &CliffordPoly, j: usize, k: usize, sign: Sign) -> Result<CliffordPoly> {
    check_axis(j, p.n())?;
    check_axis(k, p.n())?;
    if j == k {
        return Err(Error::domain(format!("angular momentum needs j ≠ k, got j = k = {j}")));
    }
    let a = weight_factor(&fdiff(p, k, sign)?, j, Some(sign));
    let b = weight_factor(&fdiff(p, j, sign)?, k, Some(sign));
    Ok(a.sub(&b))
}

/// Multiplication by the coordinate `x_j` (continuum calculus).
pub fn mul_coordinate(p: &CliffordPoly, j: usize) -> Result<CliffordPoly> {
    check_axis(j, p.n())?;
    Ok(p.mul_linear(j, &Rational::from_integer(0.into())))
}

/// Continuum angular momentum `L_jk = x_j ∂_{x_k} - x_k ∂_{x_j}`.
pub fn continuum_angular(p: &CliffordPoly, j: usize, k: usize) -> Result<CliffordPoly> {
    let a = mul_coordinate(&p.derivative(k)?, j)?;
    let b = mul_coordinate(&p.derivative(j)?, k)?;
    Ok(a.sub(&b))
}

/// The Sheffer map `Ψ_x: Π x_j^{α_j} ↦ Π (W_h^{±j})^{α_j} 1`, extended linearly.
///
/// The `W_h^{±j}` for different `j` commute, so the product order is
/// immaterial. Only scalar-blade input is accepted.
pub fn sheffer_map(p: &CliffordPoly, sign: Sign) -> Result<CliffordPoly> {
    if !p.is_scalar() {
        return Err(Error::domain("Sheffer map is defined on scalar polynomials only"));
    }
    let kind = WeightKind::from_sign(sign);
    let mut out = CliffordPoly::zero_shared(p.shared_params().clone());
    for (alpha, mv) in p.terms() {
        let mut image = CliffordPoly::constant(p.params(), mv.clone());
        for (j, &a) in alpha.0.iter().enumerate() {
            for _ in 0..a {
                image = weight(&image, j + 1, kind)?;
            }
        }
        out.add_assign(&image);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Blade;
    use crate::poly::{LatticeParams, MultiIndex};
    use crate::rational::{int, rat};

    fn x(p: &LatticeParams, j: usize) -> CliffordPoly {
        CliffordPoly::var(p, j).unwrap()
    }

    fn c(p: &LatticeParams, v: Rational) -> CliffordPoly {
        CliffordPoly::constant(p, Multivector::scalar(p.n(), v))
    }

    /// ((x+h)² - x²)/h and (x² - (x-h)²)/h, expanded by hand.
    #[test]
    fn fdiff_examples() {
        let h = rat(2, 3);
        let p = LatticeParams::new(1, h.clone(), int(1), int(0)).unwrap();
        let x1 = x(&p, 1);
        assert_eq!(fdiff(&x1, 1, Sign::Plus).unwrap(), CliffordPoly::one(&p));
        let sq = x1.mul(&x1);
        assert_eq!(
            fdiff(&sq, 1, Sign::Plus).unwrap(),
            x1.scale(&int(2)).add(&c(&p, h.clone()))
        );
        assert_eq!(fdiff(&sq, 1, Sign::Minus).unwrap(), x1.scale(&int(2)).sub(&c(&p, h)));
        assert!(fdiff(&sq, 2, Sign::Plus).is_err());
    }

    #[test]
    fn weight_examples() {
        let h = rat(1, 2);
        let p = LatticeParams::new(1, h.clone(), int(1), int(0)).unwrap();
        let one = CliffordPoly::one(&p);
        let half = &h / int(2);
        assert_eq!(
            weight(&one, 1, WeightKind::Plus).unwrap(),
            x(&p, 1).add(&c(&p, half.clone()))
        );
        assert_eq!(weight(&one, 1, WeightKind::Center).unwrap(), x(&p, 1));
        assert_eq!(weight(&one, 1, WeightKind::Minus).unwrap(), x(&p, 1).sub(&c(&p, half)));

        // w(t) = 3t + 1: mu⁻¹ w(x + h/2) = x + h/2 + 1/3
        let q = LatticeParams::new(1, h.clone(), int(3), int(1)).unwrap();
        let expected = x(&q, 1).add(&c(&q, rat(1, 4) + rat(1, 3)));
        assert_eq!(weight(&CliffordPoly::one(&q), 1, WeightKind::Plus).unwrap(), expected);
    }

    #[test]
    fn dirac_examples() {
        let p2 = LatticeParams::standard(2).unwrap();
        assert!(dirac(&CliffordPoly::one(&p2), Sign::Plus).unwrap().is_zero());
        let e1 = Multivector::generator(1, 2).unwrap();
        assert_eq!(dirac(&x(&p2, 1), Sign::Plus).unwrap(), CliffordPoly::constant(&p2, e1));

        let p1 = LatticeParams::standard(1).unwrap();
        let e1 = Multivector::generator(1, 1).unwrap();
        let q = x(&p1, 1).left_mul(&e1);
        assert_eq!(dirac(&q, Sign::Minus).unwrap(), c(&p1, int(-1)));
    }

    #[test]
    fn euler_examples() {
        let h = rat(1, 3);
        let p = LatticeParams::new(1, h.clone(), int(1), int(0)).unwrap();
        assert!(euler(&CliffordPoly::one(&p), Sign::Plus).unwrap().is_zero());
        // (x + h/2)/h is an eigenfunction of E_h^+ with eigenvalue 1
        let f = x(&p, 1).add(&c(&p, &h / int(2))).scale(&h.recip());
        assert_eq!(euler(&f, Sign::Plus).unwrap(), f);
        let expected = x(&p, 1).sub(&c(&p, &h / int(2)));
        assert_eq!(euler(&x(&p, 1), Sign::Minus).unwrap(), expected);
    }

    #[test]
    fn euler_forms_agree() {
        for n in 1..=3 {
            let p = LatticeParams::new(n, rat(3, 7), rat(-2, 5), rat(1, 3)).unwrap();
            for alpha in MultiIndex::up_to_degree(n, 4) {
                let m = CliffordPoly::scalar_monomial(&p, alpha, int(1));
                for s in [Sign::Plus, Sign::Minus] {
                    assert_eq!(euler(&m, s).unwrap(), euler_composed(&m, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn raise_examples() {
        let h = rat(1, 2);
        let p1 = LatticeParams::new(1, h.clone(), int(1), int(0)).unwrap();
        let e1 = Multivector::generator(1, 1).unwrap();
        let expected = x(&p1, 1).add(&c(&p1, &h / int(2))).left_mul(&e1);
        assert_eq!(raise(&CliffordPoly::one(&p1), Sign::Plus).unwrap(), expected);
        assert!(raise(&CliffordPoly::zero(&p1), Sign::Minus).unwrap().is_zero());
        let p2 = LatticeParams::standard(2).unwrap();
        let sq = x(&p2, 1).mul(&x(&p2, 1));
        assert_eq!(raise(&sq, Sign::Plus).unwrap().degree(), 3);
    }

    #[test]
    fn angular_examples() {
        let h = rat(1, 2);
        let p = LatticeParams::new(2, h.clone(), int(1), int(0)).unwrap();
        let expected = x(&p, 1).add(&c(&p, &h / int(2)));
        assert_eq!(angular(&x(&p, 2), 1, 2, Sign::Plus).unwrap(), expected);
        assert!(angular(&CliffordPoly::one(&p), 1, 2, Sign::Plus).unwrap().is_zero());
        let xy = x(&p, 1).mul(&x(&p, 2));
        for s in [Sign::Plus, Sign::Minus] {
            assert_eq!(angular(&xy, 1, 2, s).unwrap(), angular(&xy, 2, 1, s).unwrap().neg());
        }
        assert!(angular(&xy, 1, 1, Sign::Plus).is_err());
        assert!(angular(&xy, 1, 3, Sign::Plus).is_err());
    }

    /// Ψ(x²) = W(W 1) computed straight from the weight/shift definitions:
    /// W 1 = x + h/2, then W(x + h/2) = (x + h/2)(x + h + h/2).
    #[test]
    fn sheffer_examples() {
        let h = rat(2, 5);
        let p = LatticeParams::new(1, h.clone(), int(1), int(0)).unwrap();
        let one = CliffordPoly::one(&p);
        assert_eq!(sheffer_map(&one, Sign::Plus).unwrap(), one);
        let w1 = x(&p, 1).add(&c(&p, &h / int(2)));
        assert_eq!(sheffer_map(&x(&p, 1), Sign::Plus).unwrap(), w1);
        let second = x(&p, 1).add(&c(&p, &h * rat(3, 2)));
        let sq = x(&p, 1).mul(&x(&p, 1));
        assert_eq!(sheffer_map(&sq, Sign::Plus).unwrap(), w1.mul(&second));

        let e12 = Blade::from_indices(&[1], 1).unwrap();
        assert!(sheffer_map(&x(&p, 1).with_blade(e12), Sign::Plus).is_err());
    }
}
