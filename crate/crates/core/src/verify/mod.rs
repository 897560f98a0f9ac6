//! A registry of named identities, each checked exactly on the full
//! monomial-blade basis of bounded degree plus seeded random polynomials.
//!
//! Over an exact field, agreement on a spanning set of the degree-bounded
//! space certifies a linear operator identity on that whole space.
//!
//! Statuses:
//!
//! - `pass`: every residual is the zero polynomial.
//! - `fail`: some residual is nonzero; the first such input is attached.
//! - `singular`: a zero denominator prevented evaluation.
//! - `adjudicated`: the relation compares several candidate closed forms and
//!   reports which one holds; it never fails a run.
//! - `error`: evaluation raised an unexpected error; fails a run.

pub mod random;
mod registry;

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expr::{apply, OperatorExpr};
use crate::io::{params_value, poly_value};
use crate::poly::{CliffordPoly, LatticeParams, MultiIndex};

pub use random::{random_poly, random_rational, random_scalar_poly};
pub use registry::registry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Adjudicated,
    Singular,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Adjudicated => "adjudicated",
            Status::Singular => "singular",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    /// Whether this status makes a run unsuccessful.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::Error)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Which sub-identity failed, e.g. `[∂+1, W-1] = I`.
    pub label: String,
    pub input: CliffordPoly,
    pub residual: CliffordPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    /// Tables or adjudication data produced by the relation.
    pub detail: Option<Value>,
    /// Error message for `singular` and `error` outcomes.
    pub message: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            counterexample: None,
            detail: None,
            message: None,
        }
    }

    pub fn fail(cex: Counterexample) -> Self {
        Outcome {
            status: Status::Fail,
            counterexample: Some(cex),
            ..Outcome::pass()
        }
    }

    pub fn adjudicated(detail: Value) -> Self {
        Outcome {
            status: Status::Adjudicated,
            detail: Some(detail),
            ..Outcome::pass()
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn from_counterexample(cex: Option<Counterexample>) -> Self {
        cex.map_or_else(Outcome::pass, Outcome::fail)
    }

    fn from_error(e: Error) -> Self {
        let status = match e {
            Error::Singular { .. } => Status::Singular,
            _ => Status::Error,
        };
        let mut out = Outcome {
            status,
            message: Some(e.to_string()),
            ..Outcome::pass()
        };
        if let Error::Precondition { residual, .. }
        | Error::Decomposition { residual, .. }
        | Error::Structural {
            residual: Some(residual),
            ..
        } = e
        {
            out.status = Status::Fail;
            out.counterexample = Some(Counterexample {
                label: out.message.clone().unwrap_or_default(),
                input: CliffordPoly::zero(residual.params()),
                residual: *residual,
            });
        }
        out
    }
}

/// Everything a relation needs for one parameter set.
pub struct Ctx {
    pub params: LatticeParams,
    pub degree: u32,
    pub seed: u64,
    basis: Vec<CliffordPoly>,
    samples: Vec<CliffordPoly>,
}

/// Number of seeded random polynomials added to the basis.
pub const SAMPLES: usize = 3;

impl Ctx {
    pub fn new(params: &LatticeParams, degree: u32, seed: u64) -> Self {
        let mut ctx = Ctx {
            params: params.clone(),
            degree,
            seed,
            basis: CliffordPoly::basis(params, degree),
            samples: Vec::new(),
        };
        let mut rng = ctx.rng("samples");
        ctx.samples = (0..SAMPLES).map(|_| random_poly(&mut rng, params, degree, 4)).collect();
        ctx
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn basis(&self) -> &[CliffordPoly] {
        &self.basis
    }

    pub fn samples(&self) -> &[CliffordPoly] {
        &self.samples
    }

    /// Basis followed by samples.
    pub fn inputs(&self) -> Vec<&CliffordPoly> {
        self.basis.iter().chain(&self.samples).collect()
    }

    /// Scalar monomials of degree `≤ d`.
    pub fn scalar_basis(&self) -> Vec<CliffordPoly> {
        MultiIndex::up_to_degree(self.n(), self.degree)
            .into_iter()
            .map(|a| CliffordPoly::scalar_monomial(&self.params, a, crate::rational::int(1)))
            .collect()
    }

    /// A generator determined by the run seed, the dimension and `salt`.
    pub fn rng(&self, salt: &str) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(fnv1a(salt.as_bytes()) ^ (self.n() as u64).rotate_left(48));
        rng
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// An operator identity `lhs = rhs` with a printable label.
#[derive(Debug, Clone)]
pub struct Identity {
    pub label: String,
    pub lhs: OperatorExpr,
    pub rhs: OperatorExpr,
}

impl Identity {
    pub fn new(label: impl Into<String>, lhs: OperatorExpr, rhs: OperatorExpr) -> Self {
        Identity {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

/// First input (in order) with a nonzero residual. Inputs are evaluated in
/// parallel; the result does not depend on scheduling.
pub fn first_failure<'a, I, F>(label: &str, inputs: I, residual: F) -> Result<Option<Counterexample>>
where
    I: IntoParallelIterator<Item = &'a CliffordPoly>,
    I::Iter: IndexedParallelIterator,
    F: Fn(&CliffordPoly) -> Result<CliffordPoly> + Sync,
{
    let found = inputs
        .into_par_iter()
        .map(|p| residual(p).map(|r| (p, r)))
        .filter(|r| r.as_ref().map_or(true, |(_, r)| !r.is_zero()))
        .find_first(|_| true);
    match found {
        None => Ok(None),
        Some(Err(e)) => Err(e),
        Some(Ok((p, r))) => Ok(Some(Counterexample {
            label: label.to_string(),
            input: p.clone(),
            residual: r,
        })),
    }
}

/// Checks every identity on every input of `ctx`.
pub fn check_identities(ctx: &Ctx, identities: &[Identity]) -> Result<Outcome> {
    let inputs = ctx.inputs();
    for id in identities {
        let cex = first_failure(&id.label, inputs.par_iter().copied(), |p| {
            Ok(apply(&id.lhs, p)?.sub(&apply(&id.rhs, p)?))
        })?;
        if let Some(cex) = cex {
            return Ok(Outcome::fail(cex));
        }
    }
    Ok(Outcome::pass())
}

/// Which of several candidate right sides match `lhs` on every input.
pub fn adjudicate(ctx: &Ctx, lhs: &OperatorExpr, candidates: &[(String, OperatorExpr)]) -> Result<Value> {
    let inputs = ctx.inputs();
    let mut rows = Vec::new();
    let mut holding = Vec::new();
    for (name, rhs) in candidates {
        let cex = first_failure(name, inputs.par_iter().copied(), |p| {
            Ok(apply(lhs, p)?.sub(&apply(rhs, p)?))
        })?;
        if cex.is_none() {
            holding.push(name.clone());
        }
        rows.push(json!({
            "candidate": name,
            "expression": rhs.to_string(),
            "holds": cex.is_none(),
            "counterexample": cex.as_ref().map(counterexample_json),
        }));
    }
    Ok(json!({
        "lhs": lhs.to_string(),
        "candidates": rows,
        "holding": holding,
        "unique": holding.len() == 1,
    }))
}

pub type CheckFn = dyn Fn(&Ctx) -> Result<Outcome> + Send + Sync;

#[derive(Clone)]
pub struct Relation {
    pub id: String,
    pub citation: String,
    pub description: String,
    pub check: Arc<CheckFn>,
}

impl Relation {
    pub fn new(
        id: impl Into<String>,
        citation: impl Into<String>,
        description: impl Into<String>,
        check: impl Fn(&Ctx) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Relation {
            id: id.into(),
            citation: citation.into(),
            description: description.into(),
            check: Arc::new(check),
        }
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Relation").field("id", &self.id).finish_non_exhaustive()
    }
}

/// `(id, citation, description)` in registry order.
pub fn registry_list() -> Vec<(String, String, String)> {
    registry()
        .into_iter()
        .map(|r| (r.id, r.citation, r.description))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationResult {
    pub id: String,
    pub citation: String,
    pub status: Status,
    /// One outcome per parameter set, in input order.
    pub runs: Vec<(LatticeParams, Outcome)>,
}

impl RelationResult {
    fn first_counterexample(&self) -> Option<(&LatticeParams, &Counterexample)> {
        self.runs
            .iter()
            .find_map(|(p, o)| o.counterexample.as_ref().map(|c| (p, c)))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: Vec<String>,
    pub params: Vec<LatticeParams>,
    pub degree: u32,
    pub seed: u64,
    pub results: Vec<RelationResult>,
}

fn counterexample_json(c: &Counterexample) -> Value {
    json!({
        "identity": c.label,
        "input": poly_value(&c.input),
        "residual": poly_value(&c.residual),
    })
}

impl Report {
    /// No `fail` or `error` statuses.
    pub fn passed(&self) -> bool {
        !self.results.iter().any(|r| r.status.is_failure())
    }

    pub fn result(&self, id: &str) -> Option<&RelationResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn to_value(&self) -> Value {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                let counterexample = r.first_counterexample().map(|(p, c)| {
                    let mut v = counterexample_json(c);
                    v["params"] = params_value(p);
                    v
                });
                let details: Vec<Value> = r
                    .runs
                    .iter()
                    .filter(|(_, o)| o.detail.is_some() || o.message.is_some())
                    .map(|(p, o)| {
                        json!({
                            "params": params_value(p),
                            "status": o.status.as_str(),
                            "value": o.detail,
                            "message": o.message,
                        })
                    })
                    .collect();
                json!({
                    "id": r.id,
                    "citation": r.citation,
                    "status": r.status.as_str(),
                    "counterexample": counterexample,
                    "detail": if details.is_empty() { Value::Null } else { Value::Array(details) },
                })
            })
            .collect();
        json!({
            "header": "exact evaluation on every monomial-blade basis element of degree <= degree, plus seeded random polynomials",
            "suite": self.suite,
            "params": {
                "degree": self.degree,
                "seed": self.seed,
                "lattice": self.params.iter().map(params_value).collect::<Vec<_>>(),
            },
            "results": results,
        })
    }

    /// Canonical pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        crate::io::to_pretty(&self.to_value())
    }
}

/// Runs `relations` for every parameter set. Relations run in parallel; the
/// report keeps the given order.
pub fn run_relations(relations: &[Relation], params: &[LatticeParams], degree: u32, seed: u64) -> Report {
    let contexts: Vec<Ctx> = params.iter().map(|p| Ctx::new(p, degree, seed)).collect();
    let results = relations
        .par_iter()
        .map(|rel| {
            let runs: Vec<(LatticeParams, Outcome)> = contexts
                .iter()
                .map(|ctx| {
                    let outcome = (rel.check)(ctx).unwrap_or_else(Outcome::from_error);
                    (ctx.params.clone(), outcome)
                })
                .collect();
            let status = runs.iter().map(|(_, o)| o.status).max().unwrap_or(Status::Pass);
            RelationResult {
                id: rel.id.clone(),
                citation: rel.citation.clone(),
                status,
                runs,
            }
        })
        .collect();
    Report {
        suite: relations.iter().map(|r| r.id.clone()).collect(),
        params: params.to_vec(),
        degree,
        seed,
        results,
    }
}

/// Runs the registry entries named in `ids` (or all of them for `["all"]`),
/// in registry order.
pub fn run_suite(ids: &[String], params: &[LatticeParams], degree: u32, seed: u64) -> Result<Report> {
    Ok(run_relations(&select(ids)?, params, degree, seed))
}

/// Registry entries named in `ids`; `"all"` selects everything.
pub fn select(ids: &[String]) -> Result<Vec<Relation>> {
    let all = registry();
    if ids.iter().any(|i| i == "all") {
        return Ok(all);
    }
    for id in ids {
        if !all.iter().any(|r| &r.id == id) {
            return Err(Error::domain(format!("unknown relation id `{id}`")));
        }
    }
    Ok(all.into_iter().filter(|r| ids.contains(&r.id)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_numerous() {
        let list = registry_list();
        assert!(list.len() >= 20);
        let mut ids: Vec<_> = list.iter().map(|r| r.0.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), list.len());
    }

    #[test]
    fn unknown_id_is_rejected() {
        assert!(select(&["nope".to_string()]).is_err());
    }

    #[test]
    fn injected_false_relation_fails_with_counterexample() {
        let bad = Relation::new("bogus", "none", "E+ = E-", |ctx| {
            check_identities(
                ctx,
                &[Identity::new(
                    "E+ = E-",
                    OperatorExpr::euler(crate::Sign::Plus),
                    OperatorExpr::euler(crate::Sign::Minus),
                )],
            )
        });
        let params = LatticeParams::standard(1).unwrap();
        let report = run_relations(&[bad], &[params], 2, 0);
        assert!(!report.passed());
        let (_, cex) = report.results[0].first_counterexample().unwrap();
        let again = apply(&OperatorExpr::euler(crate::Sign::Plus), &cex.input)
            .unwrap()
            .sub(&apply(&OperatorExpr::euler(crate::Sign::Minus), &cex.input).unwrap());
        assert_eq!(again, cex.residual);
        assert!(!again.is_zero());
    }
}
