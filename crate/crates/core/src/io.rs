//! Canonical JSON forms for multivectors, polynomials and time polynomials.
//!
//! Keys are emitted in sorted order, blades as sorted index arrays, terms in
//! the crate's canonical monomial order, and rationals as `"p/q"` strings.
//! Two equal values therefore always serialize to identical bytes.
//!
//! Parsing is strict: non-reduced rationals, zero coefficients, duplicate
//! terms, out-of-range blade indices and negative exponents are rejected with
//! the JSON path of the offending value.

use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::evolution::TimePoly;
use crate::poly::{CliffordPoly, LatticeParams, MultiIndex};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct BladeTermJson {
    pub blade: Vec<i64>,
    pub coeff: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct MultivectorJson {
    pub n: i64,
    pub terms: Vec<BladeTermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ParamsJson {
    pub b: String,
    pub h: String,
    pub mu: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct PolyTermJson {
    pub alpha: Vec<i64>,
    pub coeff: Vec<BladeTermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct PolyJson {
    pub n: i64,
    pub params: ParamsJson,
    pub terms: Vec<PolyTermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct TimeTermJson {
    pub power: i64,
    pub poly: PolyJson,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct TimePolyJson {
    pub t_coeffs: Vec<TimeTermJson>,
}

fn blade_terms_to_json(m: &Multivector) -> Vec<BladeTermJson> {
    m.terms()
        .map(|(b, c)| BladeTermJson {
            blade: b.indices().into_iter().map(|j| j as i64).collect(),
            coeff: format_rational(c),
        })
        .collect()
}

pub(crate) fn multivector_to_json(m: &Multivector) -> MultivectorJson {
    MultivectorJson {
        n: m.dim() as i64,
        terms: blade_terms_to_json(m),
    }
}

pub(crate) fn params_to_json(p: &LatticeParams) -> ParamsJson {
    ParamsJson {
        b: format_rational(p.b()),
        h: format_rational(p.h()),
        mu: format_rational(p.mu()),
    }
}

pub(crate) fn poly_to_json(p: &CliffordPoly) -> PolyJson {
    PolyJson {
        n: p.n() as i64,
        params: params_to_json(p.params()),
        terms: p
            .terms()
            .map(|(alpha, mv)| PolyTermJson {
                alpha: alpha.0.iter().map(|&a| a as i64).collect(),
                coeff: blade_terms_to_json(mv),
            })
            .collect(),
    }
}

fn rational_at(s: &str, path: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(path, message),
        other => other,
    })
}

fn dim_at(n: i64, path: &str) -> Result<usize> {
    let n = usize::try_from(n).map_err(|_| Error::parse(path, format!("dimension {n} is negative")))?;
    crate::clifford::check_dim(n).map_err(|e| Error::parse(path, e.to_string()))?;
    Ok(n)
}

fn blade_terms_from_json(terms: &[BladeTermJson], n: usize, path: &str) -> Result<Multivector> {
    let mut m = Multivector::zero(n);
    let mut seen = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let here = format!("{path}[{i}]");
        let mut idx = Vec::with_capacity(t.blade.len());
        for (k, &j) in t.blade.iter().enumerate() {
            if j < 1 || j as u64 > n as u64 {
                return Err(Error::parse(
                    format!("{here}.blade[{k}]"),
                    format!("blade index {j} out of range 1..={n}"),
                ));
            }
            idx.push(j as usize);
        }
        let blade = Blade::from_indices(&idx, n).map_err(|e| Error::parse(format!("{here}.blade"), e.to_string()))?;
        if seen.contains(&blade) {
            return Err(Error::parse(format!("{here}.blade"), "duplicate blade"));
        }
        seen.push(blade);
        let c = rational_at(&t.coeff, &format!("{here}.coeff"))?;
        if c == Rational::from_integer(0.into()) {
            return Err(Error::parse(
                format!("{here}.coeff"),
                "zero coefficients are not stored",
            ));
        }
        m.add_term(blade, c);
    }
    Ok(m)
}

pub(crate) fn multivector_from_json(raw: &MultivectorJson) -> Result<Multivector> {
    let n = dim_at(raw.n, "$.n")?;
    blade_terms_from_json(&raw.terms, n, "$.terms")
}

pub(crate) fn params_from_json(raw: &ParamsJson, n: usize, path: &str) -> Result<LatticeParams> {
    let h = rational_at(&raw.h, &format!("{path}.h"))?;
    let mu = rational_at(&raw.mu, &format!("{path}.mu"))?;
    let b = rational_at(&raw.b, &format!("{path}.b"))?;
    LatticeParams::new(n, h, mu, b).map_err(|e| Error::parse(path, e.to_string()))
}

pub(crate) fn poly_from_json(raw: &PolyJson, path: &str) -> Result<CliffordPoly> {
    let n = dim_at(raw.n, &format!("{path}.n"))?;
    let params = params_from_json(&raw.params, n, &format!("{path}.params"))?;
    let mut p = CliffordPoly::zero(&params);
    let mut seen = std::collections::BTreeSet::new();
    for (i, t) in raw.terms.iter().enumerate() {
        let here = format!("{path}.terms[{i}]");
        if t.alpha.len() != n {
            return Err(Error::parse(
                format!("{here}.alpha"),
                format!("expected {n} exponents, got {}", t.alpha.len()),
            ));
        }
        let mut alpha = Vec::with_capacity(n);
        for (k, &a) in t.alpha.iter().enumerate() {
            let a = u32::try_from(a).map_err(|_| {
                Error::parse(
                    format!("{here}.alpha[{k}]"),
                    format!("exponent {a} must be a nonnegative integer"),
                )
            })?;
            alpha.push(a);
        }
        let alpha = MultiIndex(alpha);
        if !seen.insert(alpha.clone()) {
            return Err(Error::parse(format!("{here}.alpha"), "duplicate monomial"));
        }
        if t.coeff.is_empty() {
            return Err(Error::parse(format!("{here}.coeff"), "empty coefficient"));
        }
        let mv = blade_terms_from_json(&t.coeff, n, &format!("{here}.coeff"))?;
        p.add_term(alpha, &mv);
    }
    Ok(p)
}

pub(crate) fn time_poly_to_json(g: &TimePoly) -> TimePolyJson {
    let mut t_coeffs: Vec<TimeTermJson> = g
        .coeffs()
        .map(|(k, p)| TimeTermJson {
            power: k as i64,
            poly: poly_to_json(p),
        })
        .collect();
    if t_coeffs.is_empty() {
        t_coeffs.push(TimeTermJson {
            power: 0,
            poly: poly_to_json(&CliffordPoly::zero(g.params())),
        });
    }
    TimePolyJson { t_coeffs }
}

pub(crate) fn time_poly_from_json(raw: &TimePolyJson) -> Result<TimePoly> {
    let first = raw
        .t_coeffs
        .first()
        .ok_or_else(|| Error::parse("$.t_coeffs", "at least one coefficient is required"))?;
    let first = poly_from_json(&first.poly, "$.t_coeffs[0].poly")?;
    let mut g = TimePoly::zero(first.params());
    let mut seen = std::collections::BTreeSet::new();
    for (i, t) in raw.t_coeffs.iter().enumerate() {
        let here = format!("$.t_coeffs[{i}]");
        let power = u32::try_from(t.power).map_err(|_| {
            Error::parse(
                format!("{here}.power"),
                format!("power {} must be a nonnegative integer", t.power),
            )
        })?;
        if !seen.insert(power) {
            return Err(Error::parse(format!("{here}.power"), "duplicate power"));
        }
        let p = poly_from_json(&t.poly, &format!("{here}.poly"))?;
        if p.params() != first.params() {
            return Err(Error::parse(
                format!("{here}.poly.params"),
                "parameters differ from the first coefficient",
            ));
        }
        g.add_term(power, &p);
    }
    Ok(g)
}

fn from_str_with_path<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." {
            "$".to_string()
        } else {
            format!("$.{path}")
        };
        Error::parse(path, e.into_inner().to_string())
    })
}

/// Pretty JSON with a trailing newline. Keys come out sorted.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Canonical JSON for a multivector.
pub fn multivector_to_string(m: &Multivector) -> String {
    to_pretty(&multivector_to_json(m))
}

pub fn multivector_from_str(text: &str) -> Result<Multivector> {
    multivector_from_json(&from_str_with_path(text)?)
}

/// Canonical JSON for a polynomial.
pub fn poly_to_string(p: &CliffordPoly) -> String {
    to_pretty(&poly_to_json(p))
}

pub fn poly_from_str(text: &str) -> Result<CliffordPoly> {
    poly_from_json(&from_str_with_path(text)?, "$")
}

/// Canonical JSON for a time polynomial. The zero time polynomial is written
/// as a single zero coefficient of power 0.
pub fn time_poly_to_string(g: &TimePoly) -> String {
    to_pretty(&time_poly_to_json(g))
}

/// A time polynomial as a JSON value, for nesting in larger documents.
pub fn time_poly_value(g: &TimePoly) -> serde_json::Value {
    serde_json::to_value(time_poly_to_json(g)).expect("serializable")
}

/// Lattice parameters as `{"b", "h", "mu", "n"}`.
pub fn params_value(p: &LatticeParams) -> serde_json::Value {
    let raw = params_to_json(p);
    serde_json::json!({"b": raw.b, "h": raw.h, "mu": raw.mu, "n": p.n()})
}

pub fn time_poly_from_str(text: &str) -> Result<TimePoly> {
    time_poly_from_json(&from_str_with_path(text)?)
}

/// A polynomial as a JSON value, for nesting in larger documents.
pub fn poly_value(p: &CliffordPoly) -> serde_json::Value {
    serde_json::to_value(poly_to_json(p)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn sample(params: &LatticeParams) -> CliffordPoly {
        let n = params.n();
        let e1 = Multivector::generator(1, n).unwrap();
        let mut p = CliffordPoly::monomial(params, MultiIndex::unit(n, 1), e1);
        p.add_term(MultiIndex::zero(n), &Multivector::scalar(n, rat(-3, 4)));
        p
    }

    #[test]
    fn zero_polynomial_form() {
        let params = LatticeParams::standard(2).unwrap();
        let s = poly_to_string(&CliffordPoly::zero(&params));
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["terms"], serde_json::json!([]));
    }

    #[test]
    fn documented_example_parses() {
        let text = r#"{"n": 2, "params": {"h": "1", "mu": "1", "b": "0"}, "terms": [{"alpha": [1,0], "coeff": [{"blade": [], "coeff": "1"}]}]}"#;
        let p = poly_from_str(text).unwrap();
        let params = LatticeParams::standard(2).unwrap();
        assert_eq!(p, CliffordPoly::var(&params, 1).unwrap());
    }

    #[test]
    fn round_trip_and_sorted_keys() {
        let params = LatticeParams::new(2, rat(1, 2), int(3), rat(-1, 5)).unwrap();
        let p = sample(&params);
        let s = poly_to_string(&p);
        assert_eq!(poly_from_str(&s).unwrap(), p);
        let b = s.find("\"b\"").unwrap();
        let h = s.find("\"h\"").unwrap();
        let mu = s.find("\"mu\"").unwrap();
        assert!(b < h && h < mu);
        assert!(s.find("\"n\"").unwrap() < s.find("\"params\"").unwrap());
    }

    #[test]
    fn rejects_non_canonical_rational_with_path() {
        let text = r#"{"n": 1, "params": {"h": "1", "mu": "1", "b": "0"}, "terms": [{"alpha": [1], "coeff": [{"blade": [], "coeff": "2/4"}]}]}"#;
        match poly_from_str(text) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "$.terms[0].coeff[0].coeff"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_blades_and_exponents() {
        let bad_blade = r#"{"n": 1, "params": {"h": "1", "mu": "1", "b": "0"}, "terms": [{"alpha": [1], "coeff": [{"blade": [2], "coeff": "1"}]}]}"#;
        match poly_from_str(bad_blade) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "$.terms[0].coeff[0].blade[0]"),
            other => panic!("unexpected {other:?}"),
        }
        let neg = r#"{"n": 1, "params": {"h": "1", "mu": "1", "b": "0"}, "terms": [{"alpha": [-1], "coeff": [{"blade": [], "coeff": "1"}]}]}"#;
        match poly_from_str(neg) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "$.terms[0].alpha[0]"),
            other => panic!("unexpected {other:?}"),
        }
        let zero_h = r#"{"n": 1, "params": {"h": "0", "mu": "1", "b": "0"}, "terms": []}"#;
        assert!(matches!(poly_from_str(zero_h), Err(Error::Parse { .. })));
        assert!(matches!(poly_from_str("{not json"), Err(Error::Parse { .. })));
        let wrong_type = r#"{"n": "two", "params": {"h": "1", "mu": "1", "b": "0"}, "terms": []}"#;
        match poly_from_str(wrong_type) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "$.n"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn multivector_json() {
        let text = r#"{"n": 3, "terms": [{"blade": [1,3], "coeff": "3/4"}]}"#;
        let m = multivector_from_str(text).unwrap();
        let blade = Blade::from_indices(&[1, 3], 3).unwrap();
        assert_eq!(m, Multivector::term(3, blade, rat(3, 4)));
        assert_eq!(multivector_from_str(&multivector_to_string(&m)).unwrap(), m);
        assert!(multivector_from_str(r#"{"n": 3, "terms": [{"blade": [3,1], "coeff": "1"}]}"#).is_err());
    }

    #[test]
    fn time_poly_json() {
        let params = LatticeParams::new(2, rat(1, 3), int(2), rat(1, 2)).unwrap();
        let p = sample(&params);
        let mut g = TimePoly::constant(&p);
        g.add_term(2, &p.scale(&rat(-1, 2)));
        let s = time_poly_to_string(&g);
        assert_eq!(time_poly_from_str(&s).unwrap(), g);
        let zero = TimePoly::zero(&params);
        let z = time_poly_to_string(&zero);
        assert!(z.contains("\"power\": 0"));
        assert_eq!(time_poly_from_str(&z).unwrap(), zero);
        assert!(time_poly_from_str(r#"{"t_coeffs": []}"#).is_err());
        let dup = format!(
            r#"{{"t_coeffs": [{{"power": 1, "poly": {q}}}, {{"power": 1, "poly": {q}}}]}}"#,
            q = poly_to_string(&p)
        );
        match time_poly_from_str(&dup) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "$.t_coeffs[1].power"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
