use super::{Morphism, RepError};
use crate::bqa::{BoundAlgebra, Path};
use crate::exactla::{Field, Matrix};

/// A representation: one vector space `k^d` per vertex and one matrix per
/// arrow, of shape `dim(target) x dim(source)`.
///
/// A path `a1.a2...ak` acts as the product `phi(ak) ... phi(a1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<F: Field> {
    field: F,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

/// A subrepresentation together with its inclusion.
#[derive(Clone, Debug)]
pub struct Sub<F: Field> {
    pub rep: Representation<F>,
    pub inclusion: Morphism<F>,
}

/// A quotient representation together with its projection.
#[derive(Clone, Debug)]
pub struct Quot<F: Field> {
    pub rep: Representation<F>,
    pub projection: Morphism<F>,
}

impl<F: Field> Representation<F> {
    pub fn new(alg: &BoundAlgebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, RepError> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(RepError::ShapeMismatch(format!(
                "expected {} dimensions and {} maps, got {} and {}",
                q.num_vertices(),
                q.num_arrows(),
                dims.len(),
                maps.len()
            )));
        }
        for (a, m) in maps.iter().enumerate() {
            let ar = q.arrow(a);
            if m.shape() != (dims[ar.target], dims[ar.source]) {
                return Err(RepError::ShapeMismatch(format!(
                    "map of arrow {} is {}x{}, expected {}x{}",
                    ar.id,
                    m.rows(),
                    m.cols(),
                    dims[ar.target],
                    dims[ar.source]
                )));
            }
        }
        Ok(Representation { field: alg.field(), dims, maps })
    }

    pub fn zero(alg: &BoundAlgebra<F>) -> Self {
        let q = alg.quiver();
        let maps = (0..q.num_arrows()).map(|_| Matrix::zeros(alg.field(), 0, 0)).collect();
        Representation { field: alg.field(), dims: vec![0; q.num_vertices()], maps }
    }

    pub fn simple(alg: &BoundAlgebra<F>, v: usize) -> Self {
        let q = alg.quiver();
        let mut dims = vec![0; q.num_vertices()];
        dims[v] = 1;
        let maps = q.arrows().iter().map(|a| Matrix::zeros(alg.field(), dims[a.target], dims[a.source])).collect();
        Representation { field: alg.field(), dims, maps }
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn map(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }
    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn set_map(&mut self, a: usize, m: Matrix<F>) {
        assert_eq!(m.shape(), self.maps[a].shape());
        self.maps[a] = m;
    }

    /// Vertices with a nonzero space.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn eval_path(&self, p: &Path) -> Matrix<F> {
        let mut m = Matrix::identity(self.field, self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of basis element `b` of the algebra, `M_s(b) -> M_t(b)`.
    pub fn act_basis(&self, alg: &BoundAlgebra<F>, b: usize) -> Matrix<F> {
        self.eval_path(alg.basis_path(b))
    }

    /// Every relation generator acts as zero.
    pub fn check_relations(&self, alg: &BoundAlgebra<F>) -> bool {
        self.first_violated_relation(alg).is_none()
    }

    pub fn first_violated_relation(&self, alg: &BoundAlgebra<F>) -> Option<usize> {
        let f = self.field;
        alg.relations().iter().position(|r| {
            let (s, t) = (r.source(), r.target());
            let mut sum = Matrix::zeros(f, self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                sum = sum.add(&self.eval_path(p).scale(c));
            }
            !sum.is_zero()
        })
    }

    pub fn composition_factors(&self) -> Vec<(usize, usize)> {
        self.support().into_iter().map(|v| (v, self.dims[v])).collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(alg: &BoundAlgebra<F>, parts: &[Representation<F>]) -> Self {
        let f = alg.field();
        let q = alg.quiver();
        let n = q.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, ar)| {
                let mut m = Matrix::zeros(f, dims[ar.target], dims[ar.source]);
                let (mut r, mut c) = (0, 0);
                for p in parts {
                    m.set_block(r, c, &p.maps[a]);
                    r += p.dims[ar.target];
                    c += p.dims[ar.source];
                }
                m
            })
            .collect();
        Representation { field: f, dims, maps }
    }

    /// Subrepresentation spanned at each vertex by the columns of `spans[v]`
    /// (independent columns, jointly closed under the arrow maps).
    pub fn sub(&self, alg: &BoundAlgebra<F>, spans: Vec<Matrix<F>>) -> Result<Sub<F>, RepError> {
        let f = self.field;
        let q = alg.quiver();
        let dims: Vec<usize> = spans.iter().map(|m| m.cols()).collect();
        let mut maps = Vec::with_capacity(q.num_arrows());
        for (a, ar) in q.arrows().iter().enumerate() {
            let image = self.maps[a].mul(&spans[ar.source]);
            let x = if dims[ar.source] == 0 {
                Matrix::zeros(f, dims[ar.target], 0)
            } else if dims[ar.target] == 0 {
                if !image.is_zero() {
                    return Err(RepError::NotSubrepresentation(ar.id.clone()));
                }
                Matrix::zeros(f, 0, dims[ar.source])
            } else {
                spans[ar.target].solve_matrix(&image).ok_or_else(|| RepError::NotSubrepresentation(ar.id.clone()))?
            };
            maps.push(x);
        }
        let rep = Representation { field: f, dims, maps };
        Ok(Sub { rep, inclusion: Morphism::new(spans) })
    }

    /// Quotient by the subrepresentation spanned by the columns of `spans[v]`.
    pub fn quotient(&self, alg: &BoundAlgebra<F>, spans: &[Matrix<F>]) -> Quot<F> {
        let f = self.field;
        let q = alg.quiver();
        let n = q.num_vertices();
        let mut comps = Vec::with_capacity(n);
        let mut projs = Vec::with_capacity(n);
        for v in 0..n {
            let w = if spans[v].cols() == 0 { Matrix::zeros(f, self.dims[v], 0) } else { spans[v].column_space() };
            let c = w.complement_columns();
            let k = w.cols();
            let full = w.hstack(&c);
            let inv = if self.dims[v] == 0 { Matrix::zeros(f, 0, 0) } else { full.inverse().expect("basis") };
            projs.push(inv.submatrix(k..self.dims[v], 0..self.dims[v]));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(|c| c.cols()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, ar)| projs[ar.target].mul(&self.maps[a]).mul(&comps[ar.source]))
            .collect();
        Quot { rep: Representation { field: f, dims, maps }, projection: Morphism::new(projs) }
    }

    /// Change of basis at every vertex: the new map for `a` is
    /// `bases[t]^-1 phi(a) bases[s]`.
    pub fn conjugate(&self, alg: &BoundAlgebra<F>, bases: &[Matrix<F>]) -> Self {
        let q = alg.quiver();
        let invs: Vec<Matrix<F>> = bases.iter().map(|b| if b.rows() == 0 { b.clone() } else { b.inverse().expect("invertible") }).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, ar)| invs[ar.target].mul(&self.maps[a]).mul(&bases[ar.source]))
            .collect();
        Representation { field: self.field, dims: self.dims.clone(), maps }
    }
}
