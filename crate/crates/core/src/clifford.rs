//! The Clifford algebra of signature `(0, n)`.
//!
//! Generators `e_1, ..., e_n` satisfy `e_j e_k + e_k e_j = -2 δ_jk`, so every
//! generator squares to `-1`. A basis blade `e_J = e_{j1} ... e_{jr}` with
//! `j1 < ... < jr` is stored as a bitset; bit `j - 1` marks `e_j`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};

/// Largest supported dimension.
pub const MAX_DIM: usize = 16;

/// A canonical basis blade, encoded as a bitset over generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    /// The scalar blade (empty index set).
    pub const SCALAR: Blade = Blade(0);

    /// The blade `e_j` (1-based).
    pub fn generator(j: usize, n: usize) -> Result<Blade> {
        check_axis(j, n)?;
        Ok(Blade(1 << (j - 1)))
    }

    /// Builds a blade from a strictly increasing list of 1-based indices.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Blade> {
        let mut bits = 0u32;
        let mut prev = 0;
        for &j in indices {
            check_axis(j, n)?;
            if j <= prev {
                return Err(Error::domain(format!(
                    "blade indices must be strictly increasing, got {indices:?}"
                )));
            }
            prev = j;
            bits |= 1 << (j - 1);
        }
        Ok(Blade(bits))
    }

    pub fn from_bits(bits: u32) -> Blade {
        Blade(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// 1-based generator indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Whether every index lies in `1..=n`.
    pub fn fits(self, n: usize) -> bool {
        n >= 32 || self.0 >> n == 0
    }

    /// All `2^n` blades, ordered by grade and then by index list.
    pub fn all(n: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..1u32 << n).map(Blade).collect();
        v.sort();
        v
    }
}

// Grade first, then lexicographic on the sorted index list.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for j in self.indices() {
            write!(f, "{j}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_axis(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n {
        Err(Error::domain(format!("axis {j} out of range 1..={n}")))
    } else {
        Ok(())
    }
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        Err(Error::domain(format!("dimension {n} out of range 1..={MAX_DIM}")))
    } else {
        Ok(())
    }
}

/// Sign and blade of `e_A e_B` with no range checks.
pub(crate) fn blade_product_unchecked(a: Blade, b: Blade) -> (i8, Blade) {
    // Pairs (i in a, j in b) with i > j each need one transposition.
    let mut swaps = 0u32;
    let mut x = a.0 >> 1;
    while x != 0 {
        swaps += (x & b.0).count_ones();
        x >>= 1;
    }
    // Each shared index contributes e_j e_j = -1.
    swaps += (a.0 & b.0).count_ones();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// Geometric product of two basis blades: `e_A e_B = sign · e_{A Δ B}`.
pub fn blade_product(a: Blade, b: Blade, n: usize) -> Result<(i8, Blade)> {
    for blade in [a, b] {
        if !blade.fits(n) {
            return Err(Error::domain(format!("blade {blade} has an index above n = {n}")));
        }
    }
    Ok(blade_product_unchecked(a, b))
}

/// An element of `Cl_{0,n}` with exact coefficients. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    n: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(n: usize) -> Self {
        Multivector {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, value: Rational) -> Self {
        Self::term(n, Blade::SCALAR, value)
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    /// `coeff · e_blade`. Panics if the blade does not fit in dimension `n`.
    pub fn term(n: usize, blade: Blade, coeff: Rational) -> Self {
        assert!(blade.fits(n), "blade {blade} does not fit n = {n}");
        let mut m = Self::zero(n);
        m.add_term(blade, coeff);
        m
    }

    /// The generator `e_j`.
    pub fn generator(j: usize, n: usize) -> Result<Self> {
        Ok(Self::term(n, Blade::generator(j, n)?, Rational::one()))
    }

    /// The grade-1 element `Σ_j x_j e_j`.
    pub fn vector(components: &[Rational]) -> Self {
        let n = components.len();
        let mut m = Self::zero(n);
        for (j, c) in components.iter().enumerate() {
            m.add_term(Blade(1 << j), c.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    /// Whether only the scalar blade is present (zero counts as scalar).
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == Blade::SCALAR)
    }

    /// Whether every stored blade has grade exactly `g`.
    pub fn is_grade(&self, g: u32) -> bool {
        self.terms.keys().all(|b| b.grade() == g)
    }

    pub fn add_term(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn add_assign(&mut self, other: &Multivector) {
        debug_assert_eq!(self.n, other.n);
        for (b, c) in &other.terms {
            self.add_term(*b, c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Multivector, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(*b, c * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.n);
        out.add_scaled(self, factor);
        out
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &Multivector) -> Multivector {
        let mut out = Multivector::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (sign, blade) = blade_product_unchecked(*a, *b);
                let p = x * y;
                out.add_term(blade, if sign < 0 { -p } else { p });
            }
        }
        out
    }

    /// Grade-`g` part.
    pub fn grade_part(&self, g: u32) -> Multivector {
        Multivector {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == g)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }
}

/// Geometric product, the bilinear extension of [`blade_product`].
pub fn mv_mul(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    if a.n != b.n {
        return Err(Error::domain(format!(
            "multivector dimensions differ: {} vs {}",
            a.n, b.n
        )));
    }
    Ok(a.mul_unchecked(b))
}

/// `B(x, y) = -(xy + yx) / 2` for grade-1 `x` and `y`; equals `Σ_j x_j y_j`.
pub fn bilinear_form(x: &Multivector, y: &Multivector) -> Result<Rational> {
    if !x.is_grade(1) || !y.is_grade(1) {
        return Err(Error::domain("bilinear form needs grade-1 arguments"));
    }
    let mut sym = mv_mul(x, y)?;
    sym.add_assign(&mv_mul(y, x)?);
    if !sym.is_scalar() {
        return Err(Error::Structural {
            message: "xy + yx has a non-scalar part".into(),
            residual: None,
        });
    }
    Ok(sym.coeff(Blade::SCALAR) * rat(-1, 2))
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *b == Blade::SCALAR {
                write!(f, "{}", format_rational(c))?;
            } else {
                write!(f, "({}){}", format_rational(c), b)?;
            }
        }
        Ok(())
    }
}
