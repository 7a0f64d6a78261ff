//! Symmetric algebra test: a trace-like functional (vanishing on all
//! commutators) whose bilinear form `(x, y) -> f(xy)` is nondegenerate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::BoundAlgebra;
use crate::exactla::sparse::{collect_sparse, SparseEchelon};
use crate::exactla::{Field, Matrix};

/// Grid points evaluated before giving up on a negative answer.
const GRID_BUDGET: u128 = 4096;
const RANDOM_TRIES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("symmetry undecided: no nondegenerate witness after {tries} random points (seed {seed}) and the exhaustive grid has {grid} points")]
pub struct SymmetryUndecided {
    pub seed: u64,
    pub tries: usize,
    pub grid: String,
}

/// Gram matrices `G_l[i][j] = f_l(b_i b_j)` for a basis `f_l` of the
/// functionals vanishing on commutators.
pub fn trace_form_grams<F: Field>(alg: &BoundAlgebra<F>) -> Vec<Matrix<F>> {
    let f = alg.field();
    let dim = alg.dim();
    let mut ech = SparseEchelon::new(f);
    for i in 0..dim {
        for j in i + 1..dim {
            let ij = alg.mul_basis(i, j).iter().cloned();
            let ji = alg.mul_basis(j, i).iter().map(|(k, x)| (*k, f.neg(x)));
            let row = collect_sparse(f, ij.chain(ji));
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    let functionals = ech.kernel(dim);
    functionals
        .iter()
        .map(|func| {
            let mut coeff = vec![f.zero(); dim];
            for (k, c) in func {
                coeff[*k] = c.clone();
            }
            let mut g = Matrix::zeros(f, dim, dim);
            for i in 0..dim {
                for j in 0..dim {
                    let v = alg.mul_basis(i, j).iter().fold(f.zero(), |acc, (k, x)| f.add(&acc, &f.mul(x, &coeff[*k])));
                    g.set(i, j, v);
                }
            }
            g
        })
        .collect()
}

fn combination<F: Field>(f: F, grams: &[Matrix<F>], t: &[F::Elem]) -> Matrix<F> {
    let n = grams[0].rows();
    let mut m = Matrix::zeros(f, n, n);
    for (g, c) in grams.iter().zip(t) {
        if !f.is_zero(c) {
            m = m.add(&g.scale(c));
        }
    }
    m
}

/// Decides symmetry of the algebra.
///
/// `det(sum t_l G_l)` is a polynomial of degree at most `rank G_l` in each
/// `t_l`. A nonzero value at any point proves symmetry. If it vanishes on
/// the grid `prod {0..rank G_l}` it vanishes identically, which proves the
/// opposite; when that grid is too large the answer is undecided.
pub fn is_symmetric<F: Field>(alg: &BoundAlgebra<F>, seed: u64) -> Result<bool, SymmetryUndecided> {
    let f = alg.field();
    let dim = alg.dim();
    let grams = trace_form_grams(alg);
    if grams.is_empty() {
        return Ok(false);
    }
    // the generic form has rank at most that of all Gram columns together
    let stacked = grams.iter().skip(1).fold(grams[0].clone(), |acc, g| acc.hstack(g));
    if stacked.rank() < dim {
        return Ok(false);
    }
    let nondegenerate = |t: &[F::Elem]| combination(f, &grams, t).rank() == dim;

    let ones = vec![f.one(); grams.len()];
    if nondegenerate(&ones) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIES {
        let t: Vec<F::Elem> = (0..grams.len())
            .map(|_| match f.order() {
                Some(q) => f.nth(rng.gen_range(0..q)),
                None => f.from_i64(rng.gen_range(-1_000_000..=1_000_000)),
            })
            .collect();
        if nondegenerate(&t) {
            return Ok(true);
        }
    }

    // per-variable value sets: {0..rank} when that many distinct elements
    // exist, otherwise the whole (finite) field
    let sizes: Vec<u64> = grams
        .iter()
        .map(|g| {
            let want = g.rank() as u64 + 1;
            match f.order() {
                Some(q) => want.min(q),
                None => want,
            }
        })
        .collect();
    let total = sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s as u128));
    let undecided = || SymmetryUndecided {
        seed,
        tries: RANDOM_TRIES + 1,
        grid: total.map_or("more than 2^128".into(), |t| t.to_string()),
    };
    let Some(total) = total.filter(|&t| t <= GRID_BUDGET) else {
        return Err(undecided());
    };
    for mut idx in 0..total {
        let t: Vec<F::Elem> = sizes
            .iter()
            .map(|&s| {
                let v = (idx % s as u128) as u64;
                idx /= s as u128;
                f.nth(v)
            })
            .collect();
        if nondegenerate(&t) {
            return Ok(true);
        }
    }
    Ok(false)
}
