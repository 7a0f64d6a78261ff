use crate::bqa::BoundAlgebra;
use crate::exactla::{Field, Matrix};
use crate::rep::{Morphism, Representation};

/// `P(i) = e_i A`: the space at `j` has the basis paths `i -> j`, and an
/// arrow acts by extending paths on the right.
pub fn projective_rep<F: Field>(alg: &BoundAlgebra<F>, i: usize) -> Representation<F> {
    let f = alg.field();
    let q = alg.quiver();
    let n = q.num_vertices();
    let dims: Vec<usize> = (0..n).map(|j| alg.paths_between(i, j).len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, ar)| {
            let src = alg.paths_between(i, ar.source);
            let tgt = alg.paths_between(i, ar.target);
            let mut m = Matrix::zeros(f, tgt.len(), src.len());
            for (c, &b) in src.iter().enumerate() {
                for (k, x) in alg.step(b, a) {
                    let r = tgt.binary_search(k).expect("extension stays in e_i A");
                    m.set(r, c, x.clone());
                }
            }
            m
        })
        .collect();
    Representation::new(alg, dims, maps).unwrap()
}

/// `I(i) = D(A e_i)`: the space at `v` is dual to the paths `v -> i`, and
/// an arrow `a : v -> w` acts as the transpose of `y -> a y` from paths
/// `w -> i` to paths `v -> i`.
pub fn injective_rep<F: Field>(alg: &BoundAlgebra<F>, i: usize) -> Representation<F> {
    let f = alg.field();
    let q = alg.quiver();
    let n = q.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| alg.paths_between(v, i).len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, ar)| {
            let from = alg.paths_between(ar.target, i);
            let to = alg.paths_between(ar.source, i);
            // matrix of y -> a y, rows indexed by paths v -> i
            let mut left = Matrix::zeros(f, to.len(), from.len());
            for (c, &y) in from.iter().enumerate() {
                for (k, x) in alg.left_arrow(a, y) {
                    let r = to.binary_search(&k).expect("left multiple stays in A e_i");
                    left.set(r, c, x);
                }
            }
            left.transpose()
        })
        .collect();
    Representation::new(alg, dims, maps).unwrap()
}

/// Direct sum of projectives, one `P(v)` per listed vertex.
pub fn projective_sum<F: Field>(alg: &BoundAlgebra<F>, vertices: &[usize]) -> Representation<F> {
    let parts: Vec<_> = vertices.iter().map(|&v| projective_rep(alg, v)).collect();
    Representation::direct_sum(alg, &parts)
}

/// The regular representation `A = P(1) + ... + P(n)`.
pub fn regular_rep<F: Field>(alg: &BoundAlgebra<F>) -> Representation<F> {
    projective_sum(alg, &(0..alg.num_vertices()).collect::<Vec<_>>())
}

/// The morphism `P(i) -> M` sending `e_i` to `x` in `M_i`.
pub fn from_projective<F: Field>(alg: &BoundAlgebra<F>, i: usize, m: &Representation<F>, x: &[F::Elem]) -> Morphism<F> {
    let f = alg.field();
    let maps = (0..alg.num_vertices())
        .map(|j| {
            let paths = alg.paths_between(i, j);
            let cols: Vec<Vec<F::Elem>> = paths.iter().map(|&b| m.act_basis(alg, b).mul_vec(x)).collect();
            Matrix::from_columns(f, m.dim_at(j), &cols)
        })
        .collect();
    Morphism::new(maps)
}
