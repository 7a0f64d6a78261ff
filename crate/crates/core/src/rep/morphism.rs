use super::representation::{Quot, Representation, Sub};
use crate::bqa::BoundAlgebra;
use crate::exactla::{Field, Matrix};

/// One matrix per vertex, `f_v : M_v -> N_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<F: Field> {
    maps: Vec<Matrix<F>>,
}

impl<F: Field> Morphism<F> {
    pub fn new(maps: Vec<Matrix<F>>) -> Self {
        Morphism { maps }
    }

    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        let f = source.field();
        let maps = source.dims().iter().zip(target.dims()).map(|(&s, &t)| Matrix::zeros(f, t, s)).collect();
        Morphism { maps }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        Morphism { maps: m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect() }
    }

    pub fn at(&self, v: usize) -> &Matrix<F> {
        &self.maps[v]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Morphism<F> {
        Morphism { maps: self.maps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    /// Intertwines the arrow maps of `source` and `target`.
    pub fn is_morphism(&self, alg: &BoundAlgebra<F>, source: &Representation<F>, target: &Representation<F>) -> bool {
        alg.quiver().arrows().iter().enumerate().all(|(a, ar)| {
            self.maps[ar.target].mul(source.map(a)) == target.map(a).mul(&self.maps[ar.source])
        })
    }

    /// Sum of `coeffs[i] * basis[i]`.
    pub fn combine(basis: &[Morphism<F>], coeffs: &[F::Elem], source: &Representation<F>, target: &Representation<F>) -> Self {
        let f = source.field();
        let mut out = Morphism::zero(source, target);
        for (m, c) in basis.iter().zip(coeffs) {
            if !f.is_zero(c) {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn kernel(&self, alg: &BoundAlgebra<F>, source: &Representation<F>) -> Sub<F> {
        let f = source.field();
        let spans = self
            .maps
            .iter()
            .zip(source.dims())
            .map(|(m, &d)| {
                let k = m.kernel_basis();
                Matrix::from_columns(f, d, &k)
            })
            .collect();
        source.sub(alg, spans).expect("kernels are subrepresentations")
    }

    pub fn image(&self, alg: &BoundAlgebra<F>, target: &Representation<F>) -> Sub<F> {
        let f = target.field();
        let spans = self
            .maps
            .iter()
            .zip(target.dims())
            .map(|(m, &d)| if m.cols() == 0 { Matrix::zeros(f, d, 0) } else { m.column_space() })
            .collect();
        target.sub(alg, spans).expect("images are subrepresentations")
    }

    pub fn cokernel(&self, alg: &BoundAlgebra<F>, target: &Representation<F>) -> Quot<F> {
        target.quotient(alg, &self.maps)
    }
}
