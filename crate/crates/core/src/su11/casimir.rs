//! Series realizations of the Casimir operator.
//!
//! `π^±(K_h) = (E_h^± + (n/2)I)(E_h^± + (n/2 - 1)I) - ((1/h)W_h^±)(E_h^+ - E_h^-)`.

use crate::error::Result;
use crate::expr::{apply, euler_difference, shifted_euler, OperatorExpr};
use crate::poly::{CliffordPoly, LatticeParams, Sign};
use crate::rational::{int, Rational};

use super::ladder::build_ladder;
use super::{proportionality, raising_operator};

pub fn casimir_operator(params: &LatticeParams, series: Sign) -> OperatorExpr {
    let n = params.n();
    let grade = shifted_euler(series, n);
    let grade_minus_one = grade.clone() - OperatorExpr::scalar(int(1));
    (grade * grade_minus_one) - (raising_operator(params, series) * euler_difference())
}

pub fn casimir_apply(p: &CliffordPoly, series: Sign) -> Result<CliffordPoly> {
    apply(&casimir_operator(p.params(), series), p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirRecord {
    pub s: u32,
    pub n: usize,
    /// `κ` with `π^±(K_h) w_s = κ w_s`, or `None` if `w_s` is not an eigenvector.
    pub kappa: Option<Rational>,
    /// `n²/4 - n/2 - 2s`.
    pub label: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirTable {
    pub series: Sign,
    pub records: Vec<CasimirRecord>,
    /// Whether `κ` exists and is the same for every `s`.
    pub constant_in_s: bool,
}

impl CasimirTable {
    pub fn value(&self) -> Option<&Rational> {
        if self.constant_in_s {
            self.records.first().and_then(|r| r.kappa.as_ref())
        } else {
            None
        }
    }

    /// The `s` for which the label `n²/4 - n/2 - 2s` equals the computed `κ`.
    pub fn label_matches(&self) -> Vec<u32> {
        self.records
            .iter()
            .filter(|r| r.kappa.as_ref() == Some(&r.label))
            .map(|r| r.s)
            .collect()
    }
}

pub fn label(s: u32, n: usize) -> Rational {
    let n = int(n as i64);
    &n * &n / int(4) - n / int(2) - int(2 * s as i64)
}

/// `κ(s, n)` on the ladder `w_s = ((1/h)W_h^±)^s 1`, `s = 0..=s_max`.
pub fn casimir_table(params: &LatticeParams, series: Sign, s_max: u32) -> Result<CasimirTable> {
    let ladder = build_ladder(series, &CliffordPoly::one(params), s_max)?;
    let op = casimir_operator(params, series);
    let mut records = Vec::new();
    for (s, w) in ladder.terms.iter().enumerate() {
        let image = apply(&op, w)?;
        records.push(CasimirRecord {
            s: s as u32,
            n: params.n(),
            kappa: proportionality(&image, w),
            label: label(s as u32, params.n()),
        });
    }
    let first = records.first().and_then(|r| r.kappa.clone());
    let constant_in_s = first.is_some() && records.iter().all(|r| r.kappa == first);
    Ok(CasimirTable {
        series,
        records,
        constant_in_s,
    })
}
