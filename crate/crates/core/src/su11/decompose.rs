//! Fourier decomposition `p = Σ_{s,r} ((1/h)W_h^±)^r q_{s,r}` with
//! `q_{s,r}` in the joint eigenspace for eigenvalue `s - r`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expr::apply;
use crate::linalg::{solve, Matrix, Solve};
use crate::poly::{CliffordPoly, MultiIndex, Sign};

use super::eigen::{eigenspace, scalar_coords};
use super::raising_operator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub s: u32,
    pub r: u32,
    /// The joint eigenvector `q_{s,r}` (eigenvalue `s - r`).
    pub seed: CliffordPoly,
    /// `((1/h)W_h^±)^r q_{s,r}`.
    pub value: CliffordPoly,
}

struct Candidate {
    s: u32,
    r: u32,
    seed: CliffordPoly,
    raised: CliffordPoly,
}

fn candidates(p: &CliffordPoly, sign: Sign, max_degree: u32) -> Result<Vec<Candidate>> {
    let params = p.params();
    let raise = raising_operator(params, sign);
    let mut out = Vec::new();
    for k in 0..=max_degree {
        for r in 0..=(max_degree - k) {
            for q in eigenspace(params, max_degree - r, k)?.basis {
                let mut raised = q.clone();
                for _ in 0..r {
                    raised = apply(&raise, &raised)?;
                }
                out.push(Candidate {
                    s: k + r,
                    r,
                    seed: q,
                    raised,
                });
            }
        }
    }
    Ok(out)
}

/// Decomposes `p` blade by blade. `max_degree` defaults to `deg p`.
pub fn fourier_decompose(p: &CliffordPoly, sign: Sign, max_degree: Option<u32>) -> Result<Vec<Component>> {
    let deg = p.degree().max(0) as u32;
    let max_degree = max_degree.unwrap_or(deg);
    if (deg as u64) > max_degree as u64 && !p.is_zero() {
        return Err(Error::domain(format!("degree {deg} exceeds the bound {max_degree}")));
    }
    let monomials = MultiIndex::up_to_degree(p.n(), max_degree);
    let cands = candidates(p, sign, max_degree)?;
    let mut a = Matrix::zeros(monomials.len(), cands.len());
    for (col, c) in cands.iter().enumerate() {
        for (row, v) in scalar_coords(&c.raised, &monomials).into_iter().enumerate() {
            a.set(row, col, v);
        }
    }
    let mut acc: BTreeMap<(u32, u32), (CliffordPoly, CliffordPoly)> = BTreeMap::new();
    for blade in p.blades() {
        let target = p.blade_component(blade);
        let b = scalar_coords(&target, &monomials);
        let x = match solve(&a, &b) {
            Solve::Solved { x, .. } => x,
            Solve::Inconsistent => {
                return Err(Error::Decomposition {
                    message: format!("blade {blade} component is outside the span of raised eigenvectors"),
                    residual: Box::new(target.with_blade(blade)),
                });
            }
        };
        for (c, xi) in cands.iter().zip(&x) {
            if xi.is_zero() {
                continue;
            }
            let entry = acc
                .entry((c.s, c.r))
                .or_insert_with(|| (CliffordPoly::zero(p.params()), CliffordPoly::zero(p.params())));
            entry.0.add_assign(&c.seed.with_blade(blade).scale(xi));
            entry.1.add_assign(&c.raised.with_blade(blade).scale(xi));
        }
    }
    let components: Vec<Component> = acc
        .into_iter()
        .filter(|(_, (_, v))| !v.is_zero())
        .map(|((s, r), (seed, value))| Component { s, r, seed, value })
        .collect();
    let residual = p.sub(&reconstruct(p, &components));
    if !residual.is_zero() {
        return Err(Error::Decomposition {
            message: "components do not sum to the input".into(),
            residual: Box::new(residual),
        });
    }
    Ok(components)
}

pub fn reconstruct(template: &CliffordPoly, components: &[Component]) -> CliffordPoly {
    let mut out = CliffordPoly::zero(template.params());
    for c in components {
        out.add_assign(&c.value);
    }
    out
}
