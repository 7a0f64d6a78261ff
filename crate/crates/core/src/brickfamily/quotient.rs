use serde::Serialize;

use super::FamilyError;
use crate::bqa::{BoundAlgebra, Cycle};
use crate::exactla::fdalg::enumerate_span;
use crate::exactla::{Field, Matrix};
use crate::rep::{socle, top, Representation};
use crate::tautilt::projective_rep;

/// Hyperplanes tried exhaustively over a finite field, at most.
const HYPERPLANE_BUDGET: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Minimality {
    /// Every admissible quotient was compared.
    Certified,
    /// Only a heuristic set of candidates was compared.
    Uncertified,
}

/// A quotient of the projective at the cycle base in which the target
/// simple occurs exactly once.
#[derive(Clone, Debug)]
pub struct MinimalQuotient<F: Field> {
    pub rep: Representation<F>,
    /// Quiver vertex whose simple occurs once (and is the socle).
    pub target: usize,
    pub minimality: Minimality,
}

/// Largest submodule of `p` whose part at `t` lies in `ker(functional)`,
/// as column spans per vertex.
fn largest_sub_below<F: Field>(alg: &BoundAlgebra<F>, p: &Representation<F>, t: usize, functional: &[F::Elem]) -> Vec<Matrix<F>> {
    let f = alg.field();
    let phi = Matrix::from_vec(f, 1, functional.len(), functional.to_vec());
    (0..alg.num_vertices())
        .map(|v| {
            let d = p.dim_at(v);
            let rows = alg
                .paths_between(v, t)
                .iter()
                .map(|&b| phi.mul(&p.act_basis(alg, b)))
                .fold(Matrix::zeros(f, 0, d), |acc, r| acc.vstack(&r));
            Matrix::from_columns(f, d, &rows.kernel_basis())
        })
        .collect()
}

/// Smallest quotient `P/W` of the projective at the cycle's base vertex in
/// which the simple at cycle position `target_position` occurs exactly once.
///
/// Any such `W` meets the target vertex in a hyperplane `H`, and the
/// largest submodule meeting it inside `H` gives the smallest quotient for
/// that `H`. So the minimum runs over hyperplanes: a single one when the
/// target space is a line, all of them over a small finite field, and the
/// coordinate hyperplanes and their pairwise sums otherwise (reported as
/// uncertified).
pub fn minimal_quotient<F: Field>(
    alg: &BoundAlgebra<F>,
    cycle: &Cycle,
    target_position: usize,
) -> Result<MinimalQuotient<F>, FamilyError> {
    let f = alg.field();
    let base = cycle.vertex_at(1);
    let t = cycle.vertex_at(target_position);
    let p = projective_rep(alg, base);
    let d = p.dim_at(t);
    if d == 0 {
        return Err(FamilyError::QuotientNotFound(format!("the projective at {} vanishes at {}", alg.quiver().vertex(base), alg.quiver().vertex(t))));
    }

    let mut candidates: Vec<Vec<F::Elem>> = Vec::new();
    let unit = |k: usize| (0..d).map(|i| if i == k { f.one() } else { f.zero() }).collect::<Vec<_>>();
    let hyperplanes = f.order().map(|q| (q.pow(d as u32) - 1) / (q - 1));
    let minimality = if d == 1 {
        candidates.push(unit(0));
        Minimality::Certified
    } else if let Some(count) = hyperplanes.filter(|&c| c <= HYPERPLANE_BUDGET) {
        // functionals normalised so the last nonzero entry is one
        let q = f.order().unwrap();
        let basis: Vec<Vec<F::Elem>> = (0..d).map(unit).collect();
        for v in enumerate_span(f, &basis, q) {
            if v.iter().rev().find(|x| !f.is_zero(x)).is_some_and(|x| f.is_one(x)) {
                candidates.push(v);
            }
        }
        debug_assert_eq!(candidates.len() as u64, count);
        Minimality::Certified
    } else {
        for k in 0..d {
            candidates.push(unit(k));
        }
        for k in 0..d {
            for l in k + 1..d {
                candidates.push(unit(k).iter().zip(unit(l)).map(|(a, b)| f.add(a, &b)).collect());
            }
        }
        Minimality::Uncertified
    };

    let mut best: Option<Representation<F>> = None;
    for phi in &candidates {
        let spans = largest_sub_below(alg, &p, t, phi);
        let u = p.quotient(alg, &spans).rep;
        if best.as_ref().is_none_or(|b| u.total_dim() < b.total_dim()) {
            best = Some(u);
        }
    }
    let rep = best.expect("at least one candidate");
    if rep.dim_at(t) != 1 {
        return Err(FamilyError::QuotientNotFound("target multiplicity is not one".into()));
    }
    let soc = socle(alg, &rep).rep;
    let hd = top(alg, &rep).rep;
    let simple_at = |r: &Representation<F>, v: usize| r.total_dim() == 1 && r.dim_at(v) == 1;
    if !simple_at(&soc, t) || !simple_at(&hd, base) {
        return Err(FamilyError::QuotientNotFound(format!(
            "socle dims {:?} and top dims {:?} are not the expected simples",
            soc.dims(),
            hd.dims()
        )));
    }
    Ok(MinimalQuotient { rep, target: t, minimality })
}
