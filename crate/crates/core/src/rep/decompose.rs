use serde::Serialize;

use super::hom::{end_algebra, HomSpace};
use super::structure::socle;
use super::{Morphism, RepError, Representation};
use crate::bqa::BoundAlgebra;
use crate::exactla::{Field, Matrix};

/// What the endomorphism ring says about a nonzero representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Indecomposability {
    /// `End/rad` is the ground field.
    Indecomposable,
    Decomposable,
    /// `End/rad` has dimension `degree > 1` and no idempotent was found:
    /// indecomposable over this field but not absolutely.
    FieldExtension { degree: usize },
}

enum Split<F: Field> {
    Local,
    FieldExtension(usize),
    Parts(Representation<F>, Representation<F>),
}

fn split<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Result<Split<F>, RepError> {
    let (end, space) = end_algebra(alg, m);
    if end.dim() <= 1 {
        return Ok(Split::Local);
    }
    let rad = end.radical()?;
    if rad.len() + 1 == end.dim() {
        return Ok(Split::Local);
    }
    let quot = end.quotient(&rad);
    let Some(e_bar) = quot.algebra.split_idempotent() else {
        return Ok(Split::FieldExtension(quot.algebra.dim()));
    };
    let lifted = quot.lift.mul_vec(&e_bar);
    let e = end.lift_idempotent(&lifted);
    let e = Morphism::combine(&space.basis, &e, m, m);
    let f = alg.field();
    let spans = |comp: bool| -> Vec<Matrix<F>> {
        e.maps()
            .iter()
            .map(|ev| {
                let g = if comp { Matrix::identity(f, ev.rows()).sub(ev) } else { ev.clone() };
                if g.cols() == 0 {
                    g
                } else {
                    g.column_space()
                }
            })
            .collect()
    };
    let a = m.sub(alg, spans(false))?.rep;
    let b = m.sub(alg, spans(true))?.rep;
    Ok(Split::Parts(a, b))
}

pub fn is_indecomposable<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Result<Indecomposability, RepError> {
    if m.is_zero() {
        return Err(RepError::ZeroRepresentation);
    }
    Ok(match split(alg, m)? {
        Split::Local => Indecomposability::Indecomposable,
        Split::FieldExtension(degree) => Indecomposability::FieldExtension { degree },
        Split::Parts(..) => Indecomposability::Decomposable,
    })
}

/// `End(M)` is one-dimensional.
pub fn is_brick<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Result<bool, RepError> {
    if m.is_zero() {
        return Err(RepError::ZeroRepresentation);
    }
    Ok(HomSpace::new(alg, m, m).dim() == 1)
}

/// Indecomposable summands, up to isomorphism and order.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub summands: Vec<Representation<F>>,
    /// Degrees of `End/rad` for summands that are only indecomposable
    /// over this field.
    pub field_extensions: Vec<usize>,
}

pub fn decompose<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Result<Decomposition<F>, RepError> {
    let mut out = Decomposition { summands: Vec::new(), field_extensions: Vec::new() };
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split(alg, &x)? {
            Split::Local => out.summands.push(x),
            Split::FieldExtension(d) => {
                out.field_extensions.push(d);
                out.summands.push(x);
            }
            Split::Parts(a, b) => {
                stack.push(b);
                stack.push(a);
            }
        }
    }
    Ok(out)
}

/// For representations with local endomorphism rings: some composite of
/// basis morphisms `X -> Y -> X` is invertible exactly when `X` and `Y`
/// are isomorphic, since non-invertible endomorphisms form the radical.
pub fn indecomposables_isomorphic<F: Field>(alg: &BoundAlgebra<F>, x: &Representation<F>, y: &Representation<F>) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    let there = HomSpace::new(alg, x, y);
    if there.dim() == 0 {
        return false;
    }
    let back = HomSpace::new(alg, y, x);
    there.basis.iter().any(|f| back.basis.iter().any(|g| g.compose(f).is_iso()))
}

/// Isomorphism test by matching indecomposable summands.
pub fn is_isomorphic<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> Result<bool, RepError> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m == n {
        return Ok(true);
    }
    let dm = decompose(alg, m)?.summands;
    let dn = decompose(alg, n)?.summands;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for x in &dm {
        let hit = (0..dn.len()).find(|&j| !used[j] && indecomposables_isomorphic(alg, x, &dn[j]));
        match hit {
            Some(j) => used[j] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Socle condition for bricks: the socle is multiplicity free and none of
/// its simple factors occurs again in `M / soc M`. At a socle vertex `v`
/// this means `dim M_v = 1`.
pub fn brick_criterion_socle<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Result<bool, RepError> {
    if is_indecomposable(alg, m)? == Indecomposability::Decomposable {
        return Err(RepError::NotIndecomposable);
    }
    let soc = socle(alg, m).rep;
    Ok((0..alg.num_vertices()).all(|v| match soc.dim_at(v) {
        0 => true,
        1 => m.dim_at(v) == 1,
        _ => false,
    }))
}
