//! Clifford-valued polynomials in `x_1, ..., x_n` and their lattice parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::clifford::{check_axis, check_dim, Blade, Multivector};
use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};

/// Direction of a shift or difference, and the `±` label carried by most
/// operators in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn factor(self) -> Rational {
        match self {
            Sign::Plus => Rational::one(),
            Sign::Minus => -Rational::one(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Lattice data: dimension `n`, mesh width `h > 0`, and the weight
/// `w(t) = mu·t + b` with `mu ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeParams {
    n: usize,
    h: Rational,
    mu: Rational,
    b: Rational,
}

impl LatticeParams {
    pub fn new(n: usize, h: Rational, mu: Rational, b: Rational) -> Result<Self> {
        check_dim(n)?;
        if !h.is_positive() {
            return Err(Error::domain(format!(
                "mesh width must be positive, got {}",
                format_rational(&h)
            )));
        }
        if mu.is_zero() {
            return Err(Error::domain("mu must be nonzero"));
        }
        Ok(LatticeParams { n, h, mu, b })
    }

    /// `h = 1`, `w(t) = t`.
    pub fn standard(n: usize) -> Result<Self> {
        Self::new(n, int(1), int(1), int(0))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Same `h, mu, b` in another dimension.
    pub fn with_dim(&self, n: usize) -> Result<Self> {
        Self::new(n, self.h.clone(), self.mu.clone(), self.b.clone())
    }

    /// `w(t) = mu·t + b`.
    pub fn w(&self, t: &Rational) -> Rational {
        &self.mu * t + &self.b
    }

    /// The constant `c` with `mu⁻¹ w(x_j + delta) = x_j + c`.
    pub fn weight_offset(&self, delta: &Rational) -> Rational {
        delta + &self.b / &self.mu
    }

    /// `h/2`, `0` or `-h/2` as used by `W_h^{+j}`, `W_j`, `W_h^{-j}`.
    pub fn half_step(&self, sign: Option<Sign>) -> Rational {
        match sign {
            None => Rational::zero(),
            Some(s) => s.factor() * &self.h / int(2),
        }
    }
}

/// Exponent vector `α = (α_1, ..., α_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// `x_j` (1-based).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut a = vec![0; n];
        a[j - 1] = 1;
        MultiIndex(a)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All multi-indices of length `n` with total degree ≤ `d`, ordered by
    /// degree and then lexicographically descending (`x_1` before `x_2`).
    pub fn up_to_degree(n: usize, d: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for deg in 0..=d {
            let mut cur = vec![0; n];
            fill(&mut cur, 0, deg, &mut out);
        }
        out
    }
}

fn fill(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(MultiIndex(cur.clone()));
        return;
    }
    for a in (0..=remaining).rev() {
        cur[pos] = a;
        fill(cur, pos + 1, remaining - a, out);
    }
    cur[pos] = 0;
}

/// An element of `R[x_1..x_n] ⊗ Cl_{0,n}` with exact coefficients.
///
/// Terms map monomials to nonzero multivector coefficients. The lattice
/// parameters travel with the polynomial because every operator in the crate
/// needs them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordPoly {
    params: Arc<LatticeParams>,
    terms: BTreeMap<MultiIndex, Multivector>,
}

impl CliffordPoly {
    pub fn zero(params: &LatticeParams) -> Self {
        Self::zero_shared(Arc::new(params.clone()))
    }

    pub(crate) fn zero_shared(params: Arc<LatticeParams>) -> Self {
        CliffordPoly {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn empty_like(&self) -> Self {
        Self::zero_shared(self.params.clone())
    }

    pub fn constant(params: &LatticeParams, value: Multivector) -> Self {
        Self::monomial(params, MultiIndex::zero(params.n()), value)
    }

    /// The scalar polynomial `1`.
    pub fn one(params: &LatticeParams) -> Self {
        Self::constant(params, Multivector::one(params.n()))
    }

    pub fn monomial(params: &LatticeParams, alpha: MultiIndex, coeff: Multivector) -> Self {
        assert_eq!(alpha.len(), params.n(), "multi-index length must equal n");
        assert_eq!(coeff.dim(), params.n(), "coefficient dimension must equal n");
        let mut p = Self::zero(params);
        p.add_term(alpha, &coeff);
        p
    }

    /// Scalar monomial `c · x^α`.
    pub fn scalar_monomial(params: &LatticeParams, alpha: MultiIndex, c: Rational) -> Self {
        let n = params.n();
        Self::monomial(params, alpha, Multivector::scalar(n, c))
    }

    /// The coordinate function `x_j`.
    pub fn var(params: &LatticeParams, j: usize) -> Result<Self> {
        check_axis(j, params.n())?;
        Ok(Self::scalar_monomial(params, MultiIndex::unit(params.n(), j), int(1)))
    }

    pub fn params(&self) -> &LatticeParams {
        &self.params
    }

    pub(crate) fn shared_params(&self) -> &Arc<LatticeParams> {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Multivector)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Multivector {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.n()))
    }

    /// Total degree; the zero polynomial has degree `-1`.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|a| a.degree() as i64).max().unwrap_or(-1)
    }

    /// Whether every coefficient lives in the scalar blade.
    pub fn is_scalar(&self) -> bool {
        self.terms.values().all(Multivector::is_scalar)
    }

    pub fn add_term(&mut self, alpha: MultiIndex, coeff: &Multivector) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&alpha) {
            Some(existing) => {
                existing.add_assign(coeff);
                if existing.is_zero() {
                    self.terms.remove(&alpha);
                }
            }
            None => {
                self.terms.insert(alpha, coeff.clone());
            }
        }
    }

    fn add_blade_term(&mut self, alpha: &MultiIndex, blade: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        let n = self.n();
        let entry = self.terms.entry(alpha.clone()).or_insert_with(|| Multivector::zero(n));
        entry.add_term(blade, c);
        if entry.is_zero() {
            self.terms.remove(alpha);
        }
    }

    pub fn add_scaled(&mut self, other: &CliffordPoly, factor: &Rational) {
        self.check_compatible(other);
        if factor.is_zero() {
            return;
        }
        for (alpha, mv) in &other.terms {
            for (blade, c) in mv.terms() {
                self.add_blade_term(alpha, blade, c * factor);
            }
        }
    }

    pub fn add_assign(&mut self, other: &CliffordPoly) {
        self.add_scaled(other, &Rational::one());
    }

    pub fn sub_assign(&mut self, other: &CliffordPoly) {
        self.add_scaled(other, &-Rational::one());
    }

    pub fn add(&self, other: &CliffordPoly) -> CliffordPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &CliffordPoly) -> CliffordPoly {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> CliffordPoly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> CliffordPoly {
        let mut out = self.empty_like();
        out.add_scaled(self, factor);
        out
    }

    fn check_compatible(&self, other: &CliffordPoly) {
        assert!(
            Arc::ptr_eq(&self.params, &other.params) || self.params == other.params,
            "polynomials carry different lattice parameters"
        );
    }

    /// Left multiplication of every coefficient by a multivector.
    pub fn left_mul(&self, m: &Multivector) -> CliffordPoly {
        assert_eq!(m.dim(), self.n());
        let mut out = self.empty_like();
        for (alpha, mv) in &self.terms {
            out.add_term(alpha.clone(), &m.mul_unchecked(mv));
        }
        out
    }

    /// Polynomial product with the geometric product on coefficients.
    pub fn mul(&self, other: &CliffordPoly) -> CliffordPoly {
        self.check_compatible(other);
        let mut out = self.empty_like();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b), &x.mul_unchecked(y));
            }
        }
        out
    }

    /// Multiplication by the linear factor `(x_j + offset)`.
    pub(crate) fn mul_linear(&self, j: usize, offset: &Rational) -> CliffordPoly {
        let mut out = self.empty_like();
        for (alpha, mv) in &self.terms {
            let mut raised = alpha.clone();
            raised.0[j - 1] += 1;
            out.add_term(raised, mv);
            if !offset.is_zero() {
                out.add_term(alpha.clone(), &mv.scale(offset));
            }
        }
        out
    }

    /// Replaces `x_j` by `x_j + delta`, expanding binomially.
    pub(crate) fn translate(&self, j: usize, delta: &Rational) -> CliffordPoly {
        if delta.is_zero() {
            return self.clone();
        }
        let mut out = self.empty_like();
        for (alpha, mv) in &self.terms {
            let a = alpha.0[j - 1];
            let mut binom = BigInt::one();
            // (x + δ)^a = Σ_i C(a, i) δ^(a-i) x^i
            for i in (0..=a).rev() {
                let k = a - i;
                let factor = Rational::from_integer(binom.clone()) * pow(delta, k);
                let mut beta = alpha.clone();
                beta.0[j - 1] = i;
                out.add_term(beta, &mv.scale(&factor));
                // C(a, k+1) = C(a, k)·(a-k)/(k+1)
                binom = binom * BigInt::from(a - k) / BigInt::from(k + 1);
            }
        }
        out
    }

    /// `(T_h^{±j} p)(x) = p(x ± h e_j)`.
    pub fn shift(&self, j: usize, dir: Sign) -> Result<CliffordPoly> {
        check_axis(j, self.n())?;
        Ok(self.translate(j, &(dir.factor() * self.params.h())))
    }

    /// Evaluates at the lattice point `x = h·k`.
    pub fn eval(&self, k: &[i64]) -> Result<Multivector> {
        if k.len() != self.n() {
            return Err(Error::domain(format!(
                "lattice point has {} coordinates, expected {}",
                k.len(),
                self.n()
            )));
        }
        let xs: Vec<Rational> = k.iter().map(|&kj| int(kj) * self.params.h()).collect();
        Ok(self.eval_at(&xs))
    }

    /// Evaluates at an arbitrary rational point.
    pub fn eval_at(&self, xs: &[Rational]) -> Multivector {
        let mut out = Multivector::zero(self.n());
        for (alpha, mv) in &self.terms {
            let mut v = Rational::one();
            for (x, &a) in xs.iter().zip(&alpha.0) {
                v *= pow(x, a);
            }
            out.add_scaled(mv, &v);
        }
        out
    }

    /// Formal partial derivative `∂/∂x_j` (continuum calculus).
    pub fn derivative(&self, j: usize) -> Result<CliffordPoly> {
        check_axis(j, self.n())?;
        let mut out = self.empty_like();
        for (alpha, mv) in &self.terms {
            let a = alpha.0[j - 1];
            if a == 0 {
                continue;
            }
            let mut beta = alpha.clone();
            beta.0[j - 1] -= 1;
            out.add_term(beta, &mv.scale(&int(a as i64)));
        }
        Ok(out)
    }

    /// The scalar polynomial multiplying blade `e_J`.
    /// Every `x^α e_A` with `|α| ≤ d`, monomials outermost.
    pub fn basis(params: &LatticeParams, d: u32) -> Vec<CliffordPoly> {
        let n = params.n();
        let blades = Blade::all(n);
        MultiIndex::up_to_degree(n, d)
            .into_iter()
            .flat_map(|alpha| {
                blades.iter().map(move |&b| {
                    CliffordPoly::monomial(params, alpha.clone(), Multivector::term(n, b, Rational::one()))
                })
            })
            .collect()
    }

    pub fn blade_component(&self, blade: Blade) -> CliffordPoly {
        let mut out = self.empty_like();
        let n = self.n();
        for (alpha, mv) in &self.terms {
            let c = mv.coeff(blade);
            if !c.is_zero() {
                out.add_term(alpha.clone(), &Multivector::scalar(n, c));
            }
        }
        out
    }

    /// Blades that occur with a nonzero coefficient somewhere.
    pub fn blades(&self) -> Vec<Blade> {
        let mut v: Vec<Blade> = self.terms.values().flat_map(|mv| mv.terms().map(|(b, _)| b)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Scalar polynomial `q` placed on blade `e_J`: `q · e_J`.
    pub fn with_blade(&self, blade: Blade) -> CliffordPoly {
        debug_assert!(self.is_scalar());
        let mut out = self.empty_like();
        for (alpha, mv) in &self.terms {
            out.add_blade_term(alpha, blade, mv.coeff(Blade::SCALAR));
        }
        out
    }
}

pub(crate) fn pow(x: &Rational, k: u32) -> Rational {
    num_traits::pow(x.clone(), k as usize)
}

impl fmt::Display for CliffordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (alpha, mv) in &self.terms {
            for (blade, c) in mv.terms() {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{}", format_rational(c))?;
                for (j, &a) in alpha.0.iter().enumerate() {
                    match a {
                        0 => {}
                        1 => write!(f, "·x{}", j + 1)?,
                        _ => write!(f, "·x{}^{}", j + 1, a)?,
                    }
                }
                if blade != Blade::SCALAR {
                    write!(f, "·{blade}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn params(n: usize, h: Rational) -> LatticeParams {
        LatticeParams::new(n, h, int(1), int(0)).unwrap()
    }

    fn x(p: &LatticeParams, j: usize) -> CliffordPoly {
        CliffordPoly::var(p, j).unwrap()
    }

    fn c(p: &LatticeParams, v: Rational) -> CliffordPoly {
        CliffordPoly::constant(p, Multivector::scalar(p.n(), v))
    }

    #[test]
    fn params_validation() {
        assert!(LatticeParams::new(2, int(0), int(1), int(0)).is_err());
        assert!(LatticeParams::new(2, int(-1), int(1), int(0)).is_err());
        assert!(LatticeParams::new(2, int(1), int(0), int(0)).is_err());
        assert!(LatticeParams::new(0, int(1), int(1), int(0)).is_err());
        let p = LatticeParams::new(2, rat(1, 2), int(3), int(5)).unwrap();
        // mu⁻¹ w(x + h/2) = x + h/2 + b/mu
        assert_eq!(p.weight_offset(&p.half_step(Some(Sign::Plus))), rat(1, 4) + rat(5, 3));
    }

    #[test]
    fn eval_examples() {
        let p1 = params(1, rat(1, 2));
        assert_eq!(x(&p1, 1).eval(&[3]).unwrap(), Multivector::scalar(1, rat(3, 2)));
        assert_eq!(CliffordPoly::one(&p1).eval(&[-7]).unwrap(), Multivector::one(1));

        let p2 = params(2, int(1));
        let e1 = Multivector::generator(1, 2).unwrap();
        let e2 = Multivector::generator(2, 2).unwrap();
        let mut q = CliffordPoly::monomial(&p2, MultiIndex(vec![2, 0]), e1.clone());
        q.add_assign(&CliffordPoly::monomial(&p2, MultiIndex(vec![0, 1]), e2.clone()));
        let mut expected = e1;
        expected.add_scaled(&e2, &int(2));
        assert_eq!(q.eval(&[1, 2]).unwrap(), expected);
        assert!(q.eval(&[1]).is_err());
    }

    #[test]
    fn shift_examples() {
        let h = rat(1, 3);
        let p = params(2, h.clone());
        let x1 = x(&p, 1);
        assert_eq!(x1.shift(1, Sign::Plus).unwrap(), x1.add(&c(&p, h.clone())));
        let sq = x1.mul(&x1);
        let expected = sq.add(&x1.scale(&(int(2) * &h))).add(&c(&p, &h * &h));
        assert_eq!(sq.shift(1, Sign::Plus).unwrap(), expected);
        assert_eq!(x(&p, 2).shift(1, Sign::Minus).unwrap(), x(&p, 2));
        assert!(x1.shift(3, Sign::Plus).is_err());
    }

    #[test]
    fn shift_round_trip_on_monomials() {
        for n in 1..=3 {
            let p = LatticeParams::new(n, rat(2, 5), int(1), int(0)).unwrap();
            for alpha in MultiIndex::up_to_degree(n, 6) {
                let m = CliffordPoly::scalar_monomial(&p, alpha, int(1));
                for j in 1..=n {
                    let back = m.shift(j, Sign::Plus).unwrap().shift(j, Sign::Minus).unwrap();
                    assert_eq!(back, m);
                }
            }
        }
    }

    #[test]
    fn degree_conventions() {
        let p = params(2, int(1));
        assert_eq!(CliffordPoly::zero(&p).degree(), -1);
        assert_eq!(CliffordPoly::one(&p).degree(), 0);
        assert_eq!(x(&p, 1).mul(&x(&p, 2)).degree(), 2);
    }

    #[test]
    fn monomial_enumeration() {
        let m = MultiIndex::up_to_degree(2, 2);
        let v: Vec<Vec<u32>> = m.into_iter().map(|a| a.0).collect();
        assert_eq!(
            v,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        // C(d + n, n) monomials
        assert_eq!(MultiIndex::up_to_degree(3, 4).len(), 35);
    }

    #[test]
    fn derivative_and_components() {
        let p = params(2, int(1));
        let x1 = x(&p, 1);
        let cube = x1.mul(&x1).mul(&x1);
        assert_eq!(cube.derivative(1).unwrap(), x1.mul(&x1).scale(&int(3)));
        assert!(cube.derivative(2).unwrap().is_zero());

        let e12 = Blade::from_indices(&[1, 2], 2).unwrap();
        let q = x1.with_blade(e12);
        assert_eq!(q.blades(), vec![e12]);
        assert_eq!(q.blade_component(e12), x1);
        assert!(q.blade_component(Blade::SCALAR).is_zero());
    }
}
