//! Operators as data.
//!
//! An [`OperatorExpr`] is a tree of primitive lattice operators combined by
//! composition, sums, scaling, powers and commutators. Trees are evaluated by
//! [`apply`] and have a round-trippable s-expression text form:
//!
//! ```text
//! expr := id
//!       | (shift S J) | (fdiff S J) | (weight J) | (weight S J)
//!       | (dirac S) | (euler S) | (raise S) | (angular S J K)
//!       | (compose EXPR EXPR) | (sum EXPR*) | (scale RATIONAL EXPR)
//!       | (power EXPR K) | (commutator EXPR EXPR)
//! S := + | -        J, K, := positive integers        RATIONAL := p | p/q
//! ```
//!
//! `(compose A B)` applies `B` first. `(sum)` is the zero operator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ops::{self, WeightKind};
use crate::poly::{CliffordPoly, Sign};
use crate::rational::{format_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    Shift { axis: usize, sign: Sign },
    FDiff { axis: usize, sign: Sign },
    Weight { axis: usize, kind: WeightKind },
    Dirac(Sign),
    Euler(Sign),
    Raise(Sign),
    Angular { j: usize, k: usize, sign: Sign },
}

impl Primitive {
    pub fn apply(&self, p: &CliffordPoly) -> Result<CliffordPoly> {
        match *self {
            Primitive::Shift { axis, sign } => p.shift(axis, sign),
            Primitive::FDiff { axis, sign } => ops::fdiff(p, axis, sign),
            Primitive::Weight { axis, kind } => ops::weight(p, axis, kind),
            Primitive::Dirac(s) => ops::dirac(p, s),
            Primitive::Euler(s) => ops::euler(p, s),
            Primitive::Raise(s) => ops::raise(p, s),
            Primitive::Angular { j, k, sign } => ops::angular(p, j, k, sign),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorExpr {
    Identity,
    Primitive(Primitive),
    /// `Compose(a, b)` is `a ∘ b`.
    Compose(Box<OperatorExpr>, Box<OperatorExpr>),
    Sum(Vec<OperatorExpr>),
    Scale(Rational, Box<OperatorExpr>),
    Power(Box<OperatorExpr>, u32),
    Commutator(Box<OperatorExpr>, Box<OperatorExpr>),
}

impl OperatorExpr {
    pub fn identity() -> Self {
        OperatorExpr::Identity
    }

    pub fn zero() -> Self {
        OperatorExpr::Sum(Vec::new())
    }

    pub fn shift(sign: Sign, axis: usize) -> Self {
        OperatorExpr::Primitive(Primitive::Shift { axis, sign })
    }

    pub fn fdiff(sign: Sign, axis: usize) -> Self {
        OperatorExpr::Primitive(Primitive::FDiff { axis, sign })
    }

    pub fn weight(kind: WeightKind, axis: usize) -> Self {
        OperatorExpr::Primitive(Primitive::Weight { axis, kind })
    }

    pub fn dirac(sign: Sign) -> Self {
        OperatorExpr::Primitive(Primitive::Dirac(sign))
    }

    pub fn euler(sign: Sign) -> Self {
        OperatorExpr::Primitive(Primitive::Euler(sign))
    }

    pub fn raise(sign: Sign) -> Self {
        OperatorExpr::Primitive(Primitive::Raise(sign))
    }

    pub fn angular(sign: Sign, j: usize, k: usize) -> Self {
        OperatorExpr::Primitive(Primitive::Angular { j, k, sign })
    }

    pub fn scalar(c: Rational) -> Self {
        OperatorExpr::Scale(c, Box::new(OperatorExpr::Identity))
    }

    pub fn scaled(self, c: Rational) -> Self {
        OperatorExpr::Scale(c, Box::new(self))
    }

    pub fn pow(self, k: u32) -> Self {
        OperatorExpr::Power(Box::new(self), k)
    }

    pub fn then(self, first: OperatorExpr) -> Self {
        OperatorExpr::Compose(Box::new(self), Box::new(first))
    }

    pub fn commutator(a: OperatorExpr, b: OperatorExpr) -> Self {
        OperatorExpr::Commutator(Box::new(a), Box::new(b))
    }

    pub fn sum(terms: Vec<OperatorExpr>) -> Self {
        OperatorExpr::Sum(terms)
    }

    /// `Σ_{j=1}^n f(j)`.
    pub fn sum_over_axes(n: usize, f: impl Fn(usize) -> OperatorExpr) -> Self {
        OperatorExpr::Sum((1..=n).map(f).collect())
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        match self {
            OperatorExpr::Sum(mut v) if !v.is_empty() => {
                v.push(rhs);
                OperatorExpr::Sum(v)
            }
            lhs => OperatorExpr::Sum(vec![lhs, rhs]),
        }
    }
}

impl Neg for OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.scaled(-Rational::one())
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        self + (-rhs)
    }
}

/// `a * b` is the composition `a ∘ b`.
impl Mul for OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: OperatorExpr) -> OperatorExpr {
        self.then(rhs)
    }
}

/// Evaluates `expr` on `p` by structural recursion. Commutators are always
/// evaluated as `A(Bp) - B(Ap)`; nothing is simplified symbolically.
pub fn apply(expr: &OperatorExpr, p: &CliffordPoly) -> Result<CliffordPoly> {
    match expr {
        OperatorExpr::Identity => Ok(p.clone()),
        OperatorExpr::Primitive(prim) => prim.apply(p),
        OperatorExpr::Compose(a, b) => apply(a, &apply(b, p)?),
        OperatorExpr::Sum(terms) => {
            let mut out = p.empty_like();
            for t in terms {
                out.add_assign(&apply(t, p)?);
            }
            Ok(out)
        }
        OperatorExpr::Scale(c, a) => {
            if c.is_zero() {
                return Ok(p.empty_like());
            }
            Ok(apply(a, p)?.scale(c))
        }
        OperatorExpr::Power(a, k) => {
            let mut cur = p.clone();
            for _ in 0..*k {
                if cur.is_zero() {
                    break;
                }
                cur = apply(a, &cur)?;
            }
            Ok(cur)
        }
        OperatorExpr::Commutator(a, b) => {
            let ab = apply(a, &apply(b, p)?)?;
            let ba = apply(b, &apply(a, p)?)?;
            Ok(ab.sub(&ba))
        }
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Primitive::Shift { axis, sign } => write!(f, "(shift {sign} {axis})"),
            Primitive::FDiff { axis, sign } => write!(f, "(fdiff {sign} {axis})"),
            Primitive::Weight { axis, kind } => match kind.sign() {
                None => write!(f, "(weight {axis})"),
                Some(s) => write!(f, "(weight {s} {axis})"),
            },
            Primitive::Dirac(s) => write!(f, "(dirac {s})"),
            Primitive::Euler(s) => write!(f, "(euler {s})"),
            Primitive::Raise(s) => write!(f, "(raise {s})"),
            Primitive::Angular { j, k, sign } => write!(f, "(angular {sign} {j} {k})"),
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::Identity => f.write_str("id"),
            OperatorExpr::Primitive(p) => write!(f, "{p}"),
            OperatorExpr::Compose(a, b) => write!(f, "(compose {a} {b})"),
            OperatorExpr::Sum(terms) => {
                f.write_str("(sum")?;
                for t in terms {
                    write!(f, " {t}")?;
                }
                f.write_str(")")
            }
            OperatorExpr::Scale(c, a) => write!(f, "(scale {} {a})", format_rational(c)),
            OperatorExpr::Power(a, k) => write!(f, "(power {a} {k})"),
            OperatorExpr::Commutator(a, b) => write!(f, "(commutator {a} {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn tokenize(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn read_sexp(tokens: &[String], pos: &mut usize) -> Result<Sexp> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::parse("$", "unexpected end of operator expression"))?;
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos).map(String::as_str) {
                    None => return Err(Error::parse("$", "unbalanced '('")),
                    Some(")") => {
                        *pos += 1;
                        return Ok(Sexp::List(items));
                    }
                    Some(_) => items.push(read_sexp(tokens, pos)?),
                }
            }
        }
        ")" => Err(Error::parse("$", "unexpected ')'")),
        atom => Ok(Sexp::Atom(atom.to_string())),
    }
}

fn atom(s: &Sexp) -> Result<&str> {
    match s {
        Sexp::Atom(a) => Ok(a),
        Sexp::List(_) => Err(Error::parse("$", "expected an atom, found a list")),
    }
}

fn sign_arg(s: &Sexp) -> Result<Sign> {
    let a = atom(s)?;
    Sign::parse(a).ok_or_else(|| Error::parse("$", format!("expected + or -, got {a:?}")))
}

fn axis_arg(s: &Sexp) -> Result<usize> {
    let a = atom(s)?;
    match a.parse::<usize>() {
        Ok(v) if v >= 1 && !a.starts_with('0') => Ok(v),
        _ => Err(Error::parse("$", format!("expected a positive axis index, got {a:?}"))),
    }
}

fn arity(head: &str, args: &[Sexp], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::parse(
            "$",
            format!("{head} takes {n} argument(s), got {}", args.len()),
        ));
    }
    Ok(())
}

fn build(s: &Sexp) -> Result<OperatorExpr> {
    let items = match s {
        Sexp::Atom(a) if a == "id" => return Ok(OperatorExpr::Identity),
        Sexp::Atom(a) => return Err(Error::parse("$", format!("unknown operator atom {a:?}"))),
        Sexp::List(items) => items,
    };
    let (head, args) = items.split_first().ok_or_else(|| Error::parse("$", "empty list"))?;
    let head = atom(head)?;
    use OperatorExpr as E;
    Ok(match head {
        "shift" => {
            arity(head, args, 2)?;
            E::shift(sign_arg(&args[0])?, axis_arg(&args[1])?)
        }
        "fdiff" => {
            arity(head, args, 2)?;
            E::fdiff(sign_arg(&args[0])?, axis_arg(&args[1])?)
        }
        "weight" => match args.len() {
            1 => E::weight(WeightKind::Center, axis_arg(&args[0])?),
            2 => E::weight(WeightKind::from_sign(sign_arg(&args[0])?), axis_arg(&args[1])?),
            k => return Err(Error::parse("$", format!("weight takes 1 or 2 arguments, got {k}"))),
        },
        "dirac" | "euler" | "raise" => {
            arity(head, args, 1)?;
            let s = sign_arg(&args[0])?;
            match head {
                "dirac" => E::dirac(s),
                "euler" => E::euler(s),
                _ => E::raise(s),
            }
        }
        "angular" => {
            arity(head, args, 3)?;
            E::angular(sign_arg(&args[0])?, axis_arg(&args[1])?, axis_arg(&args[2])?)
        }
        "compose" => {
            arity(head, args, 2)?;
            build(&args[0])?.then(build(&args[1])?)
        }
        "commutator" => {
            arity(head, args, 2)?;
            E::commutator(build(&args[0])?, build(&args[1])?)
        }
        "sum" => E::Sum(args.iter().map(build).collect::<Result<_>>()?),
        "scale" => {
            arity(head, args, 2)?;
            let c = parse_rational(atom(&args[0])?)?;
            build(&args[1])?.scaled(c)
        }
        "power" => {
            arity(head, args, 2)?;
            let k = atom(&args[1])?;
            let k = k
                .parse::<u32>()
                .map_err(|_| Error::parse("$", format!("expected a nonnegative power, got {k:?}")))?;
            build(&args[0])?.pow(k)
        }
        other => return Err(Error::parse("$", format!("unknown operator {other:?}"))),
    })
}

impl FromStr for OperatorExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s);
        let mut pos = 0;
        let sexp = read_sexp(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::parse("$", "trailing input after operator expression"));
        }
        build(&sexp)
    }
}

/// `(1/h)·W_h^+`, `(1/h)·W_h^-` or `(1/h)·W` as sums over axes.
pub fn scaled_weight_sum(n: usize, kind: WeightKind, h: &Rational) -> OperatorExpr {
    OperatorExpr::sum_over_axes(n, |j| OperatorExpr::weight(kind, j)).scaled(h.recip())
}

/// `E_h^+ - E_h^-`.
pub fn euler_difference() -> OperatorExpr {
    OperatorExpr::euler(Sign::Plus) - OperatorExpr::euler(Sign::Minus)
}

/// `E_h^± + (n/2) I`.
pub fn shifted_euler(sign: Sign, n: usize) -> OperatorExpr {
    OperatorExpr::euler(sign) + OperatorExpr::scalar(int(n as i64) / int(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{LatticeParams, MultiIndex};
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn weyl_heisenberg_example() {
        let params = LatticeParams::new(2, rat(1, 3), int(2), int(1)).unwrap();
        for alpha in MultiIndex::up_to_degree(2, 3) {
            let p = CliffordPoly::scalar_monomial(&params, alpha, int(1));
            for j in 1..=2 {
                for k in 1..=2 {
                    let e = OperatorExpr::commutator(
                        OperatorExpr::fdiff(Sign::Plus, j),
                        OperatorExpr::weight(WeightKind::Minus, k),
                    );
                    let expected = if j == k { p.clone() } else { p.empty_like() };
                    assert_eq!(apply(&e, &p).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn trivial_evaluations() {
        let params = LatticeParams::standard(2).unwrap();
        let p = CliffordPoly::var(&params, 1).unwrap();
        let a = OperatorExpr::euler(Sign::Plus);
        assert_eq!(apply(&a.clone().pow(0), &p).unwrap(), p);
        assert_eq!(apply(&OperatorExpr::Identity, &p).unwrap(), p);
        assert!(apply(&(a.clone() - a), &p).unwrap().is_zero());
        assert!(apply(&OperatorExpr::zero(), &p).unwrap().is_zero());
    }

    #[test]
    fn primitive_errors_propagate() {
        let params = LatticeParams::standard(2).unwrap();
        let p = CliffordPoly::one(&params);
        assert!(apply(&OperatorExpr::fdiff(Sign::Plus, 3), &p).is_err());
        assert!(apply(&OperatorExpr::angular(Sign::Plus, 1, 1), &p).is_err());
    }

    #[test]
    fn text_form_round_trip() {
        let s = "(commutator (fdiff + 1) (weight - 2))";
        let e: OperatorExpr = s.parse().unwrap();
        assert_eq!(e.to_string(), s);
        let s = "(sum (scale -1/2 (power (euler +) 3)) (compose (raise -) (dirac +)) (weight 1) (angular + 1 2) (shift - 2) id (sum))";
        let e: OperatorExpr = s.parse().unwrap();
        assert_eq!(e.to_string(), s);
    }

    #[test]
    fn text_form_errors() {
        for bad in [
            "",
            "(",
            "(fdiff + 1",
            "(fdiff * 1)",
            "(fdiff + 0)",
            "(weight + 1 2)",
            "(scale 2/4 id)",
            "(power id -1)",
            "(bogus)",
            "id id",
            "()",
            ")",
        ] {
            assert!(bad.parse::<OperatorExpr>().is_err(), "{bad:?} should fail");
        }
    }

    fn arb_sign() -> impl Strategy<Value = Sign> {
        prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
    }

    fn arb_expr() -> impl Strategy<Value = OperatorExpr> {
        let leaf = prop_oneof![
            Just(OperatorExpr::Identity),
            (arb_sign(), 1usize..4).prop_map(|(s, j)| OperatorExpr::shift(s, j)),
            (arb_sign(), 1usize..4).prop_map(|(s, j)| OperatorExpr::fdiff(s, j)),
            (1usize..4).prop_map(|j| OperatorExpr::weight(WeightKind::Center, j)),
            (arb_sign(), 1usize..4).prop_map(|(s, j)| OperatorExpr::weight(WeightKind::from_sign(s), j)),
            arb_sign().prop_map(OperatorExpr::dirac),
            arb_sign().prop_map(OperatorExpr::euler),
            arb_sign().prop_map(OperatorExpr::raise),
            (arb_sign(), 1usize..4, 1usize..4).prop_map(|(s, j, k)| OperatorExpr::angular(s, j, k)),
        ];
        leaf.prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.then(b)),
                prop::collection::vec(inner.clone(), 0..3).prop_map(OperatorExpr::Sum),
                (-20i64..20, 1i64..9, inner.clone()).prop_map(|(p, q, a)| a.scaled(rat(p, q))),
                (inner.clone(), 0u32..4).prop_map(|(a, k)| a.pow(k)),
                (inner.clone(), inner).prop_map(|(a, b)| OperatorExpr::commutator(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(e in arb_expr()) {
            let text = e.to_string();
            let back: OperatorExpr = text.parse().unwrap();
            prop_assert_eq!(back, e);
        }
    }
}
