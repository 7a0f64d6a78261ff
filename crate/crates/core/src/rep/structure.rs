use super::hom::HomSpace;
use super::representation::{Quot, Representation, Sub};
use crate::bqa::BoundAlgebra;
use crate::exactla::sparse::sparse_from_dense;
use crate::exactla::{Field, Matrix, SparseEchelon};

/// Elements killed by every arrow, i.e. by the radical of the algebra.
pub fn socle<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Sub<F> {
    let f = alg.field();
    let q = alg.quiver();
    let spans = (0..q.num_vertices())
        .map(|v| {
            let d = m.dim_at(v);
            let outgoing: Vec<usize> = q.arrows_from(v).collect();
            if outgoing.is_empty() || d == 0 {
                return Matrix::identity(f, d);
            }
            let stacked = outgoing.iter().skip(1).fold(m.map(outgoing[0]).clone(), |acc, &a| acc.vstack(m.map(a)));
            Matrix::from_columns(f, d, &stacked.kernel_basis())
        })
        .collect();
    m.sub(alg, spans).expect("socle is a subrepresentation")
}

/// Sum of the images of all arrows.
pub fn radical<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Sub<F> {
    m.sub(alg, radical_spans(alg, m)).expect("radical is a subrepresentation")
}

fn radical_spans<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Vec<Matrix<F>> {
    let f = alg.field();
    let q = alg.quiver();
    (0..q.num_vertices())
        .map(|v| {
            let d = m.dim_at(v);
            let images = q.arrows_into(v).fold(Matrix::zeros(f, d, 0), |acc, a| acc.hstack(m.map(a)));
            if images.cols() == 0 {
                images
            } else {
                images.column_space()
            }
        })
        .collect()
}

pub fn top<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> Quot<F> {
    m.quotient(alg, &radical_spans(alg, m))
}

/// Whether `n` is a quotient of a direct sum of copies of `m`: the
/// evaluation map from `m` tensored with `Hom(m, n)` onto `n` is onto at
/// every vertex.
pub fn in_fac<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> bool {
    let f = alg.field();
    let hom = HomSpace::new(alg, m, n);
    (0..alg.num_vertices()).all(|v| {
        let d = n.dim_at(v);
        if d == 0 {
            return true;
        }
        let mut span = SparseEchelon::new(f);
        for g in &hom.basis {
            for c in g.at(v).columns() {
                span.insert(sparse_from_dense(f, &c));
                if span.rank() == d {
                    return true;
                }
            }
        }
        false
    })
}
