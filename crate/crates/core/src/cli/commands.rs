//! One function per subcommand. Each returns the artifact text plus, when an
//! identity or residual check failed, the reason to exit with code 1.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use cliflat::evolution::{cauchy_verify, semigroup_trajectory};
use cliflat::io::{params_value, poly_from_str, poly_value, time_poly_value, to_pretty};
use cliflat::su11::{build_appell, build_ladder, casimir_table, fourier_decompose, gamma_row, lowering_constants};
use cliflat::verify::{registry_list, run_suite};
use cliflat::{format_rational, parse_rational, CliffordPoly, Rational, Sign};

use super::config::{parse_count, CliConfig};
use super::{Failure, Format, Usage};

pub struct Artifact {
    pub text: String,
    pub failure: Option<String>,
}

impl Artifact {
    fn ok(text: String) -> Self {
        Artifact { text, failure: None }
    }
}

fn format_for(cfg: &CliConfig, default: Format, allowed: &[Format], command: &str) -> Result<Format, Usage> {
    let f = cfg.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Usage(format!("`{command}` does not support --format {f}")))
    }
}

fn opt_rational(r: Option<&Rational>) -> Value {
    r.map_or(Value::Null, |r| Value::String(format_rational(r)))
}

fn csv_cell(r: Option<&Rational>) -> String {
    r.map(format_rational).unwrap_or_default()
}

fn read_poly(path: &Path) -> Result<CliffordPoly, Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?;
    poly_from_str(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

pub fn verify(cfg: &CliConfig, suite: &str) -> Result<Artifact, Failure> {
    let format = format_for(cfg, Format::Json, &[Format::Json, Format::Csv, Format::Text], "verify")?;
    let ids: Vec<String> = suite.split(',').map(|s| s.trim().to_string()).collect();
    if ids.iter().any(String::is_empty) {
        return Err(Usage("empty relation id in --suite".into()).into());
    }
    let report = run_suite(&ids, &[cfg.params()?], cfg.degree, cfg.seed).map_err(|e| Failure::Usage(e.to_string()))?;
    let text = match format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut s = String::from("id,status\n");
            for r in &report.results {
                writeln!(s, "{},{}", r.id, r.status.as_str()).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.results {
                writeln!(s, "{:<28} {}", r.id, r.status.as_str()).unwrap();
            }
            s
        }
    };
    let failed: Vec<&str> = report
        .results
        .iter()
        .filter(|r| r.status.is_failure())
        .map(|r| r.id.as_str())
        .collect();
    let failure = (!failed.is_empty()).then(|| format!("failing relations: {}", failed.join(", ")));
    Ok(Artifact { text, failure })
}

pub fn gamma(cfg: &CliConfig, s_max: Option<&str>, n_max: Option<&str>, table: &str) -> Result<Artifact, Failure> {
    let format = format_for(cfg, Format::Csv, &[Format::Json, Format::Csv, Format::Text], "gamma")?;
    let (s_default, n_default) = match table {
        "gamma" => (20, 5),
        "casimir" => (6, 3),
        other => return Err(Usage(format!("unknown table `{other}` (expected gamma or casimir)")).into()),
    };
    let s_max = s_max.map(parse_count).transpose()?.unwrap_or(s_default) as u32;
    let n_max = n_max.map(parse_count).transpose()?.unwrap_or(n_default) as usize;
    if table == "gamma" {
        Ok(Artifact::ok(gamma_table(format, s_max, n_max)))
    } else {
        casimir(cfg, format, s_max, n_max)
    }
}

fn gamma_table(format: Format, s_max: u32, n_max: usize) -> String {
    let rows: Vec<_> = (1..=n_max)
        .flat_map(|n| (0..=s_max).map(move |s| gamma_row(s, n)))
        .collect();
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "s": r.s,
                        "n": r.n,
                        "value": opt_rational(r.direct.as_ref()),
                        "hypergeometric_2f1": opt_rational(r.hypergeometric_2f1.as_ref()),
                        "differential_0f1": opt_rational(r.differential_0f1.as_ref()),
                        "consistency": r.consistency.label(),
                    })
                })
                .collect();
            to_pretty(&json!({"table": "gamma", "rows": rows}))
        }
        Format::Csv => {
            let mut s = String::from("s,n,value,hypergeometric_2f1,differential_0f1,consistency\n");
            for r in &rows {
                writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    r.s,
                    r.n,
                    csv_cell(r.direct.as_ref()),
                    csv_cell(r.hypergeometric_2f1.as_ref()),
                    csv_cell(r.differential_0f1.as_ref()),
                    r.consistency.label()
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                writeln!(
                    s,
                    "gamma_{}(n={}) = {}  [{}]",
                    r.s,
                    r.n,
                    csv_cell(r.direct.as_ref()),
                    r.consistency.label()
                )
                .unwrap();
            }
            s
        }
    }
}

fn casimir(cfg: &CliConfig, format: Format, s_max: u32, n_max: usize) -> Result<Artifact, Failure> {
    let base = cfg.params()?;
    let mut tables = Vec::new();
    for n in 1..=n_max {
        tables.push(casimir_table(&base.with_dim(n)?, Sign::Plus, s_max)?);
    }
    let consistency = |constant: bool| if constant { "constant" } else { "varies" };
    let text = match format {
        Format::Json => {
            let rows: Vec<Value> = tables
                .iter()
                .flat_map(|t| {
                    t.records.iter().map(move |r| {
                        json!({
                            "s": r.s,
                            "n": r.n,
                            "value": opt_rational(r.kappa.as_ref()),
                            "label_n2_4_minus_n_2_minus_2s": format_rational(&r.label),
                            "consistency": consistency(t.constant_in_s),
                        })
                    })
                })
                .collect();
            to_pretty(&json!({"table": "casimir", "params": params_value(&base), "rows": rows}))
        }
        Format::Csv => {
            let mut s = String::from("s,n,value,label_n2_4_minus_n_2_minus_2s,consistency\n");
            for t in &tables {
                for r in &t.records {
                    writeln!(
                        s,
                        "{},{},{},{},{}",
                        r.s,
                        r.n,
                        csv_cell(r.kappa.as_ref()),
                        format_rational(&r.label),
                        consistency(t.constant_in_s)
                    )
                    .unwrap();
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for t in &tables {
                let n = t.records.first().map_or(0, |r| r.n);
                let value = t.value().map(format_rational).unwrap_or_else(|| "not constant".into());
                writeln!(
                    s,
                    "n={n}: kappa = {value}, label matches at s in {:?}",
                    t.label_matches()
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Artifact::ok(text))
}

pub fn appell(cfg: &CliConfig, s_max: u32, sign: Sign) -> Result<Artifact, Failure> {
    let format = format_for(cfg, Format::Json, &[Format::Json, Format::Csv, Format::Text], "appell")?;
    let params = cfg.params()?;
    let seq = build_appell(&params, sign, s_max)?;
    let ratio = |s: usize| if s == 0 { None } else { seq.ratios.get(s - 1) };
    let text = match format {
        Format::Json => {
            let terms: Vec<Value> = (0..seq.terms.len())
                .map(|s| {
                    json!({
                        "s": s,
                        "lambda": format_rational(&seq.lambdas[s]),
                        "ratio": opt_rational(ratio(s)),
                        "m": poly_value(&seq.terms[s]),
                    })
                })
                .collect();
            to_pretty(&json!({"params": params_value(&params), "sign": sign.to_string(), "terms": terms}))
        }
        Format::Csv => {
            let mut s = String::from("s,n,lambda,ratio\n");
            for k in 0..seq.terms.len() {
                writeln!(
                    s,
                    "{},{},{},{}",
                    k,
                    params.n(),
                    format_rational(&seq.lambdas[k]),
                    csv_cell(ratio(k))
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (k, m) in seq.terms.iter().enumerate() {
                writeln!(s, "lambda_{k} = {}  m_{k} = {m}", format_rational(&seq.lambdas[k])).unwrap();
            }
            s
        }
    };
    Ok(Artifact::ok(text))
}

pub fn ladder(cfg: &CliConfig, s_max: u32, sign: Sign) -> Result<Artifact, Failure> {
    let format = format_for(cfg, Format::Json, &[Format::Json, Format::Csv, Format::Text], "ladder")?;
    let params = cfg.params()?;
    let basis = build_ladder(sign, &CliffordPoly::one(&params), s_max)?;
    let lowering = lowering_constants(&params, sign, s_max)?;
    let kappa = casimir_table(&params, sign, s_max)?;
    let text = match format {
        Format::Json => {
            let w: Vec<Value> = basis
                .terms
                .iter()
                .enumerate()
                .map(|(s, p)| json!({"s": s, "poly": poly_value(p)}))
                .collect();
            let low: Vec<Value> = lowering
                .iter()
                .map(|r| {
                    json!({
                        "s": r.s,
                        "n": r.n,
                        "constant": opt_rational(r.constant.as_ref()),
                        "matches_s_s_plus_n_plus_1": r.matches_s_s_plus_n_plus_1,
                        "matches_s_s_plus_n_minus_1": r.matches_s_s_plus_n_minus_1,
                    })
                })
                .collect();
            let cas: Vec<Value> = kappa
                .records
                .iter()
                .map(|r| json!({"s": r.s, "n": r.n, "kappa": opt_rational(r.kappa.as_ref())}))
                .collect();
            to_pretty(&json!({
                "params": params_value(&params),
                "sign": sign.to_string(),
                "w": w,
                "lowering": low,
                "casimir": cas,
            }))
        }
        Format::Csv => {
            let mut s = String::from("s,n,lowering_constant,kappa\n");
            for (k, r) in kappa.records.iter().enumerate() {
                let c = if k == 0 {
                    None
                } else {
                    lowering[k - 1].constant.as_ref()
                };
                writeln!(s, "{},{},{},{}", r.s, r.n, csv_cell(c), csv_cell(r.kappa.as_ref())).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (k, p) in basis.terms.iter().enumerate() {
                writeln!(s, "w_{k} = {p}").unwrap();
            }
            for r in &lowering {
                writeln!(s, "c({}, {}) = {}", r.s, r.n, csv_cell(r.constant.as_ref())).unwrap();
            }
            s
        }
    };
    Ok(Artifact::ok(text))
}

pub fn decompose(cfg: &CliConfig, input: &Path, sign: Sign) -> Result<Artifact, Failure> {
    let format = format_for(cfg, Format::Json, &[Format::Json, Format::Text], "decompose")?;
    let p = read_poly(input)?;
    let components = fourier_decompose(&p, sign, None)?;
    let text = match format {
        Format::Json => {
            let comps: Vec<Value> = components
                .iter()
                .map(|c| json!({"s": c.s, "r": c.r, "seed": poly_value(&c.seed), "value": poly_value(&c.value)}))
                .collect();
            to_pretty(&json!({
                "params": params_value(p.params()),
                "sign": sign.to_string(),
                "input": poly_value(&p),
                "components": comps,
            }))
        }
        _ => {
            let mut s = String::new();
            for c in &components {
                writeln!(s, "(s={}, r={}): {}", c.s, c.r, c.value).unwrap();
            }
            s
        }
    };
    Ok(Artifact::ok(text))
}

pub fn evolve(cfg: &CliConfig, input: &Path, t: &str) -> Result<Artifact, Failure> {
    let format = format_for(cfg, Format::Json, &[Format::Json, Format::Text], "evolve")?;
    let t = parse_rational(t).map_err(|_| Usage(format!("--t: `{t}` is not an exact rational")))?;
    let f = read_poly(input)?;
    let trajectory = semigroup_trajectory(&f)?;
    let report = cauchy_verify(&trajectory)?;
    let value = trajectory.eval(&t);
    let initial = report.initial_slice.sub(&f);
    let mut problems = Vec::new();
    if !report.solves_pde() {
        problems.push("nonzero PDE residual");
    }
    if !initial.is_zero() {
        problems.push("initial slice differs from the input");
    }
    let text = match format {
        Format::Json => to_pretty(&json!({
            "t": format_rational(&t),
            "input": poly_value(&f),
            "trajectory": time_poly_value(&trajectory),
            "value": poly_value(&value),
            "residuals": {
                "pde": time_poly_value(&report.pde_residual),
                "initial": poly_value(&initial),
                "constraint": time_poly_value(&report.constraint_residual),
            },
            "solves_pde": report.solves_pde(),
            "satisfies_constraint": report.satisfies_constraint(),
        })),
        _ => {
            let mut s = String::new();
            writeln!(s, "g({}) = {value}", format_rational(&t)).unwrap();
            writeln!(s, "pde residual zero: {}", report.solves_pde()).unwrap();
            writeln!(s, "initial residual zero: {}", initial.is_zero()).unwrap();
            writeln!(s, "constraint residual zero: {}", report.satisfies_constraint()).unwrap();
            s
        }
    };
    Ok(Artifact {
        text,
        failure: (!problems.is_empty()).then(|| problems.join(", ")),
    })
}

pub fn list_relations(cfg: &CliConfig) -> Result<Artifact, Failure> {
    let format = format_for(cfg, Format::Text, &[Format::Json, Format::Text], "list-relations")?;
    let list = registry_list();
    let text = match format {
        Format::Json => {
            let rows: Vec<Value> = list
                .iter()
                .map(|(id, citation, description)| json!({"id": id, "citation": citation, "description": description}))
                .collect();
            to_pretty(&json!({"relations": rows}))
        }
        _ => {
            let mut s = String::new();
            for (id, _, description) in &list {
                writeln!(s, "{id:<28} {description}").unwrap();
            }
            s
        }
    };
    Ok(Artifact::ok(text))
}
