//! Finite-dimensional associative algebras given by structure constants.
//!
//! Used for endomorphism rings: radical, semisimple quotient, minimal
//! polynomials and idempotents.

use super::field::Field;
use super::matrix::Matrix;
use super::poly::Poly;

#[derive(Clone, Debug)]
pub struct FdAlgebra<F: Field> {
    field: F,
    dim: usize,
    /// `table[i * dim + j]` holds the coordinates of `b_i * b_j`.
    table: Vec<Vec<F::Elem>>,
    one: Vec<F::Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FdAlgebraError {
    #[error("radical computation in characteristic {0} needs a search over {1} elements, above the budget")]
    RadicalBudget(u64, String),
}

/// `A / I` together with the maps relating coordinates.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub algebra: FdAlgebra<F>,
    /// Columns are lifts (in `A`-coordinates) of the quotient basis.
    pub lift: Matrix<F>,
    /// Sends `A`-coordinates to quotient coordinates.
    pub projection: Matrix<F>,
}

impl<F: Field> FdAlgebra<F> {
    pub fn new(field: F, dim: usize, table: Vec<Vec<F::Elem>>, one: Vec<F::Elem>) -> Self {
        assert_eq!(table.len(), dim * dim);
        assert_eq!(one.len(), dim);
        FdAlgebra { field, dim, table, one }
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn one(&self) -> &[F::Elem] {
        &self.one
    }

    pub fn zero_elem(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_elem(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.zero_elem();
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = self.zero_elem();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, t) in self.table[i * self.dim + j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(x, c)).collect()
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    /// Matrix of `x -> a x` in the basis.
    pub fn left_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(a, &self.basis_elem(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x -> x a` in the basis.
    pub fn right_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(&self.basis_elem(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn is_unit(&self, a: &[F::Elem]) -> bool {
        self.left_mult(a).rank() == self.dim
    }

    pub fn eval_poly(&self, p: &Poly<F>, a: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.zero_elem();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, a), &self.scale(&self.one, c));
        }
        acc
    }

    pub fn min_poly(&self, a: &[F::Elem]) -> Poly<F> {
        let f = self.field;
        let mut powers = vec![self.one.clone()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            let m = Matrix::from_columns(f, self.dim, &powers);
            if let Some(x) = m.solve(&next) {
                let mut c: Vec<F::Elem> = x.iter().map(|v| f.neg(v)).collect();
                c.push(f.one());
                return Poly::new(f, c);
            }
            powers.push(next);
        }
    }

    /// `{x : tr(L_{x b_j}) = 0 for all j}`. Equal to the radical in
    /// characteristic zero and always containing it.
    pub fn trace_kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field;
        let mut gram = Matrix::zeros(f, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let t = self.left_mult(&self.table[i * self.dim + j].clone()).trace();
                gram.set(j, i, t);
            }
        }
        gram.kernel_basis()
    }

    /// Spans `I, I^2, ...` until zero or stable; true when `I^k = 0`.
    pub fn is_nilpotent_subspace(&self, basis: &[Vec<F::Elem>]) -> bool {
        let f = self.field;
        let mut current: Vec<Vec<F::Elem>> = basis.to_vec();
        let mut prev_dim = usize::MAX;
        loop {
            if current.is_empty() {
                return true;
            }
            let m = Matrix::from_columns(f, self.dim, &current);
            let space = m.column_space();
            let d = space.cols();
            if d == 0 {
                return true;
            }
            if d >= prev_dim {
                return false;
            }
            prev_dim = d;
            let cols = space.columns();
            current = cols.iter().flat_map(|x| basis.iter().map(move |y| (x, y))).map(|(x, y)| self.mul(x, y)).collect();
        }
    }

    pub fn is_nilpotent_elem(&self, a: &[F::Elem]) -> bool {
        let mut p = a.to_vec();
        for _ in 0..=self.dim {
            if self.is_zero(&p) {
                return true;
            }
            p = self.mul(&p, a);
        }
        self.is_zero(&p)
    }

    /// Jacobson radical.
    ///
    /// Characteristic zero uses the trace form. In characteristic `p` the
    /// trace kernel is accepted when it is nilpotent; otherwise the radical
    /// is the span of elements `x` of the trace kernel with `x A` nil,
    /// found by enumerating the kernel and the algebra (desk-sized only).
    pub fn radical(&self) -> Result<Vec<Vec<F::Elem>>, FdAlgebraError> {
        let tk = self.trace_kernel();
        if self.field.characteristic() == 0 || self.is_nilpotent_subspace(&tk) {
            return Ok(tk);
        }
        let q = self.field.order().unwrap();
        let budget: u128 = 1 << 22;
        let cost = (q as u128).checked_pow((tk.len() + self.dim) as u32);
        if cost.is_none_or(|c| c > budget) {
            return Err(FdAlgebraError::RadicalBudget(q, format!("{q}^{}", tk.len() + self.dim)));
        }
        let all_a: Vec<Vec<F::Elem>> = enumerate_span(self.field, &self.identity_basis(), q);
        let mut found: Vec<Vec<F::Elem>> = Vec::new();
        for x in enumerate_span(self.field, &tk, q) {
            if self.is_zero(&x) {
                continue;
            }
            if all_a.iter().all(|y| self.is_nilpotent_elem(&self.mul(&x, y))) {
                found.push(x);
            }
        }
        if found.is_empty() {
            return Ok(vec![]);
        }
        let m = Matrix::from_columns(self.field, self.dim, &found);
        Ok(m.column_space().columns())
    }

    fn identity_basis(&self) -> Vec<Vec<F::Elem>> {
        (0..self.dim).map(|i| self.basis_elem(i)).collect()
    }

    /// Quotient by a two-sided ideal given by a basis.
    pub fn quotient(&self, ideal: &[Vec<F::Elem>]) -> Quotient<F> {
        let f = self.field;
        let ideal_m = if ideal.is_empty() {
            Matrix::zeros(f, self.dim, 0)
        } else {
            Matrix::from_columns(f, self.dim, ideal).column_space()
        };
        let comp = ideal_m.complement_columns();
        let k = ideal_m.cols();
        let change = ideal_m.hstack(&comp).inverse().expect("basis of the whole space");
        let projection = change.submatrix(k..self.dim, 0..self.dim);
        let qd = comp.cols();
        let lifts = comp.columns();
        let mut table = Vec::with_capacity(qd * qd);
        for a in &lifts {
            for b in &lifts {
                table.push(projection.mul_vec(&self.mul(a, b)));
            }
        }
        let one = projection.mul_vec(&self.one);
        Quotient { algebra: FdAlgebra::new(f, qd, table, one), lift: comp, projection }
    }

    /// Searches a semisimple algebra for an idempotent other than 0 and 1.
    ///
    /// Candidates are basis elements, pairwise sums and differences and
    /// pairwise products. For a candidate whose minimal polynomial has a
    /// proper factor `h`, `z = h(x)` is a nonzero zero divisor; solving
    /// `z w z = z` (possible in a semisimple algebra) gives the idempotent
    /// `w z`.
    pub fn split_idempotent(&self) -> Option<Vec<F::Elem>> {
        if self.dim <= 1 {
            return None;
        }
        let f = self.field;
        let basis = self.identity_basis();
        let mut cands: Vec<Vec<F::Elem>> = basis.clone();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                cands.push(self.add(&basis[i], &basis[j]));
                cands.push(self.sub(&basis[i], &basis[j]));
                cands.push(self.add(&basis[i], &self.scale(&basis[j], &f.from_i64(2))));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                cands.push(self.mul(&basis[i], &basis[j]));
            }
        }
        for x in cands {
            let mu = self.min_poly(&x);
            let Some(h) = mu.proper_factor() else { continue };
            let z = self.eval_poly(&h, &x);
            if self.is_zero(&z) || self.is_unit(&z) {
                continue;
            }
            let sys = self.left_mult(&z).mul(&self.right_mult(&z));
            let Some(w) = sys.solve(&z) else { continue };
            let e = self.mul(&w, &z);
            if !self.is_zero(&e) && e != self.one && self.mul(&e, &e) == e {
                return Some(e);
            }
        }
        None
    }

    /// Turns `a` with `a^2 - a` nilpotent into an idempotent.
    pub fn lift_idempotent(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field;
        let mut e = a.to_vec();
        for _ in 0..64 {
            let e2 = self.mul(&e, &e);
            if e2 == e {
                return e;
            }
            let e3 = self.mul(&e2, &e);
            e = self.sub(&self.scale(&e2, &f.from_i64(3)), &self.scale(&e3, &f.from_i64(2)));
        }
        panic!("idempotent lifting did not converge: a^2 - a is not nilpotent");
    }
}

/// Every element of the span of `basis` over a finite field of order `q`.
pub(crate) fn enumerate_span<F: Field>(f: F, basis: &[Vec<F::Elem>], q: u64) -> Vec<Vec<F::Elem>> {
    let n = basis.first().map_or(0, |b| b.len());
    let mut out = vec![vec![f.zero(); n]];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * q as usize);
        for v in &out {
            for c in 0..q {
                let c = f.nth(c);
                next.push(v.iter().zip(b).map(|(x, y)| f.add(x, &f.mul(&c, y))).collect());
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    /// Full matrix algebra M_n with matrix units as basis.
    fn matrix_algebra<F: Field>(f: F, n: usize) -> FdAlgebra<F> {
        let d = n * n;
        let mut table = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let (a, b) = (i / n, i % n);
                let (c, e) = (j / n, j % n);
                let mut v = vec![f.zero(); d];
                if b == c {
                    v[a * n + e] = f.one();
                }
                table.push(v);
            }
        }
        let mut one = vec![f.zero(); d];
        for k in 0..n {
            one[k * n + k] = f.one();
        }
        FdAlgebra::new(f, d, table, one)
    }

    /// Upper triangular 2x2 matrices: basis e11, e12, e22.
    fn upper_triangular<F: Field>(f: F) -> FdAlgebra<F> {
        let (z, o) = (f.zero(), f.one());
        let v = |a: [&F::Elem; 3]| a.iter().map(|x| (*x).clone()).collect::<Vec<_>>();
        let table = vec![
            v([&o, &z, &z]), v([&z, &o, &z]), v([&z, &z, &z]),
            v([&z, &z, &z]), v([&z, &z, &z]), v([&z, &o, &z]),
            v([&z, &z, &z]), v([&z, &z, &z]), v([&z, &z, &o]),
        ];
        FdAlgebra::new(f, 3, table, v([&o, &z, &o]))
    }

    #[test]
    fn radical_of_triangular() {
        let a = upper_triangular(Rationals);
        let r = a.radical().unwrap();
        assert_eq!(r.len(), 1);
        let q = a.quotient(&r);
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.split_idempotent().is_some());

        let f3 = PrimeField::new(3).unwrap();
        let a = upper_triangular(f3);
        assert_eq!(a.radical().unwrap().len(), 1);
    }

    #[test]
    fn matrix_algebra_is_semisimple_and_splits() {
        let m = matrix_algebra(Rationals, 2);
        assert!(m.radical().unwrap().is_empty());
        let e = m.split_idempotent().unwrap();
        assert_eq!(m.mul(&e, &e), e);
        // char 2 divides the trace of the identity of M_2, so the trace
        // kernel is not the radical there
        let f2 = PrimeField::new(2).unwrap();
        let m2 = matrix_algebra(f2, 2);
        assert!(m2.radical().unwrap().is_empty());
    }

    #[test]
    fn field_extension_has_no_idempotent() {
        // Q(i) = Q[t]/(t^2 + 1), basis 1, i
        let f = Rationals;
        let (z, o, m) = (f.zero(), f.one(), f.from_i64(-1));
        let table = vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()], vec![z.clone(), o.clone()], vec![m, z.clone()]];
        let a = FdAlgebra::new(f, 2, table, vec![o, z]);
        assert!(a.radical().unwrap().is_empty());
        assert!(a.split_idempotent().is_none());
    }

    #[test]
    fn min_poly_and_lift() {
        let a = upper_triangular(Rationals);
        let e11 = a.basis_elem(0);
        assert_eq!(a.min_poly(&e11).degree(), Some(2));
        let almost = a.add(&e11, &a.basis_elem(1));
        let e = a.lift_idempotent(&almost);
        assert_eq!(a.mul(&e, &e), e);
    }
}
