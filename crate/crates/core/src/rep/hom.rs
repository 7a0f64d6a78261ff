use super::{Morphism, Representation};
use crate::bqa::BoundAlgebra;
use crate::exactla::sparse::{collect_sparse, SparseEchelon};
use crate::exactla::{FdAlgebra, Field, Matrix};

/// `Hom(M, N)` as the solution space of the intertwining equations.
///
/// Unknowns are the entries of all `f_v`, row-major, vertex after vertex.
/// Each basis morphism has a one at its own free unknown and zeros at the
/// other free unknowns, so the coordinates of any morphism are its values
/// at the free unknowns.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub basis: Vec<Morphism<F>>,
    free: Vec<usize>,
    offsets: Vec<usize>,
    source_dims: Vec<usize>,
}

impl<F: Field> HomSpace<F> {
    pub fn new(alg: &BoundAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> Self {
        let f = alg.field();
        let q = alg.quiver();
        let nv = q.num_vertices();
        let mut offsets = Vec::with_capacity(nv + 1);
        let mut total = 0;
        for v in 0..nv {
            offsets.push(total);
            total += m.dim_at(v) * n.dim_at(v);
        }
        offsets.push(total);
        let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dim_at(v) + c;

        let mut ech = SparseEchelon::new(f);
        for (a, ar) in q.arrows().iter().enumerate() {
            let (s, t) = (ar.source, ar.target);
            let (pm, pn) = (m.map(a), n.map(a));
            // (f_t phi^M - phi^N f_s)[r, c] = 0
            for r in 0..n.dim_at(t) {
                for c in 0..m.dim_at(s) {
                    let mut terms = Vec::new();
                    for k in 0..m.dim_at(t) {
                        let x = pm.get(k, c);
                        if !f.is_zero(x) {
                            terms.push((var(t, r, k), x.clone()));
                        }
                    }
                    for k in 0..n.dim_at(s) {
                        let x = pn.get(r, k);
                        if !f.is_zero(x) {
                            terms.push((var(s, k, c), f.neg(x)));
                        }
                    }
                    let row = collect_sparse(f, terms);
                    if !row.is_empty() {
                        ech.insert(row);
                    }
                }
            }
        }
        let kernel = ech.kernel(total);
        let free: Vec<usize> = (0..total).filter(|&c| !ech.is_pivot(c)).collect();
        let basis = kernel
            .iter()
            .map(|vec| {
                let mut flat = vec![f.zero(); total];
                for (i, x) in vec {
                    flat[*i] = x.clone();
                }
                unflatten(f, &flat, &offsets, m.dims(), n.dims())
            })
            .collect();
        HomSpace { basis, free, offsets, source_dims: m.dims().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a morphism in `basis`.
    pub fn coords(&self, g: &Morphism<F>) -> Vec<F::Elem> {
        self.free
            .iter()
            .map(|&i| {
                let v = self.offsets.partition_point(|&o| o <= i) - 1;
                let local = i - self.offsets[v];
                let cols = self.source_dims[v];
                g.at(v).get(local / cols, local % cols).clone()
            })
            .collect()
    }
}

fn unflatten<F: Field>(f: F, flat: &[F::Elem], offsets: &[usize], src: &[usize], tgt: &[usize]) -> Morphism<F> {
    let maps = (0..src.len())
        .map(|v| Matrix::from_vec(f, tgt[v], src[v], flat[offsets[v]..offsets[v + 1]].to_vec()))
        .collect();
    Morphism::new(maps)
}

pub fn hom_basis<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> Vec<Morphism<F>> {
    HomSpace::new(alg, m, n).basis
}

pub fn hom_dim<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> usize {
    HomSpace::new(alg, m, n).dim()
}

/// `End(M)` with the product `(g, h) -> g after h`, and its basis.
pub fn end_algebra<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> (FdAlgebra<F>, HomSpace<F>) {
    let space = HomSpace::new(alg, m, m);
    let d = space.dim();
    let mut table = Vec::with_capacity(d * d);
    for g in &space.basis {
        for h in &space.basis {
            table.push(space.coords(&g.compose(h)));
        }
    }
    let one = space.coords(&Morphism::identity(m));
    (FdAlgebra::new(alg.field(), d, table, one), space)
}
