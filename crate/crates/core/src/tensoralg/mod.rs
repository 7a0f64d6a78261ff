//! Bound quiver presentation of `A ⊗ B` from presentations of `A` and `B`.
//!
//! Vertices are pairs `(a,b)`. Arrows are horizontal `(alpha,b)` running
//! `(s(alpha),b) -> (t(alpha),b)`, or vertical `(a,beta)` running
//! `(a,s(beta)) -> (a,t(beta))`. The ideal is generated by the relations
//! of `A` copied along every vertex of `B`, those of `B` along every vertex
//! of `A`, and one commutativity square per pair of arrows.

use crate::bqa::{BoundAlgebra, BqaError, Path, Quiver, Relation};
use crate::exactla::Field;

/// Index arithmetic for the product quiver. Vertex `(i, j)` has index
/// `i * |B_0| + j`; horizontal arrows come first, then vertical ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    pub a_vertices: usize,
    pub b_vertices: usize,
    pub a_arrows: usize,
    pub b_arrows: usize,
}

impl TensorIndex {
    pub fn new(a: &Quiver, b: &Quiver) -> Self {
        TensorIndex {
            a_vertices: a.num_vertices(),
            b_vertices: b.num_vertices(),
            a_arrows: a.num_arrows(),
            b_arrows: b.num_arrows(),
        }
    }

    pub fn vertex(&self, i: usize, j: usize) -> usize {
        i * self.b_vertices + j
    }

    /// Inverse of [`TensorIndex::vertex`].
    pub fn split_vertex(&self, v: usize) -> (usize, usize) {
        (v / self.b_vertices, v % self.b_vertices)
    }

    pub fn horizontal(&self, alpha: usize, j: usize) -> usize {
        alpha * self.b_vertices + j
    }

    pub fn vertical(&self, i: usize, beta: usize) -> usize {
        self.a_arrows * self.b_vertices + i * self.b_arrows + beta
    }
}

pub fn product_quiver(a: &Quiver, b: &Quiver) -> Quiver {
    let mut q = Quiver::new();
    for va in a.vertices() {
        for vb in b.vertices() {
            q.add_vertex(&format!("({va},{vb})")).unwrap();
        }
    }
    let ix = TensorIndex::new(a, b);
    for al in a.arrows() {
        for (j, vb) in b.vertices().iter().enumerate() {
            q.add_arrow(&format!("({},{vb})", al.id), ix.vertex(al.source, j), ix.vertex(al.target, j)).unwrap();
        }
    }
    for (i, va) in a.vertices().iter().enumerate() {
        for be in b.arrows() {
            q.add_arrow(&format!("({va},{})", be.id), ix.vertex(i, be.source), ix.vertex(i, be.target)).unwrap();
        }
    }
    q
}

/// Arrow-by-arrow lift of an `A`-path into the row of `B`-vertex `j`.
pub fn lift_path_horizontal(ix: &TensorIndex, p: &Path, j: usize) -> Path {
    Path {
        source: ix.vertex(p.source, j),
        target: ix.vertex(p.target, j),
        arrows: p.arrows.iter().map(|&a| ix.horizontal(a, j)).collect(),
    }
}

/// Arrow-by-arrow lift of a `B`-path into the column of `A`-vertex `i`.
pub fn lift_path_vertical(ix: &TensorIndex, i: usize, p: &Path) -> Path {
    Path {
        source: ix.vertex(i, p.source),
        target: ix.vertex(i, p.target),
        arrows: p.arrows.iter().map(|&b| ix.vertical(i, b)).collect(),
    }
}

/// The commutativity square for `alpha` in `A` and `beta` in `B`:
/// `(alpha, s(beta)) (t(alpha), beta) - (s(alpha), beta) (alpha, t(beta))`.
pub fn commutativity_relation<F: Field>(
    f: F,
    ix: &TensorIndex,
    a: &Quiver,
    b: &Quiver,
    alpha: usize,
    beta: usize,
) -> Relation<F> {
    let (al, be) = (a.arrow(alpha), b.arrow(beta));
    let start = ix.vertex(al.source, be.source);
    let end = ix.vertex(al.target, be.target);
    let first = Path {
        source: start,
        target: end,
        arrows: vec![ix.horizontal(alpha, be.source), ix.vertical(al.target, beta)],
    };
    let second = Path {
        source: start,
        target: end,
        arrows: vec![ix.vertical(al.source, beta), ix.horizontal(alpha, be.target)],
    };
    Relation::new(f, vec![(f.one(), first), (f.from_i64(-1), second)]).expect("distinct parallel paths")
}

pub fn tensor_product_algebra<F: Field>(a: &BoundAlgebra<F>, b: &BoundAlgebra<F>) -> Result<BoundAlgebra<F>, BqaError> {
    let f = a.field();
    if f != b.field() {
        return Err(BqaError::FieldMismatch(f.spec(), b.field().spec()));
    }
    let (qa, qb) = (a.quiver(), b.quiver());
    let ix = TensorIndex::new(qa, qb);
    let mut rels = Vec::new();
    for r in a.relations() {
        for j in 0..qb.num_vertices() {
            let terms = r.terms.iter().map(|(c, p)| (c.clone(), lift_path_horizontal(&ix, p, j))).collect();
            rels.push(Relation { terms });
        }
    }
    for i in 0..qa.num_vertices() {
        for r in b.relations() {
            let terms = r.terms.iter().map(|(c, p)| (c.clone(), lift_path_vertical(&ix, i, p))).collect();
            rels.push(Relation { terms });
        }
    }
    for alpha in 0..qa.num_arrows() {
        for beta in 0..qb.num_arrows() {
            rels.push(commutativity_relation(f, &ix, qa, qb, alpha, beta));
        }
    }
    BoundAlgebra::build(f, product_quiver(qa, qb), rels, a.bound() + b.bound())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;
    use crate::fixtures;

    const Q: Rationals = Rationals;

    #[test]
    fn example_product_shape() {
        let (a, b) = (fixtures::example_a(Q), fixtures::example_b(Q));
        let t = tensor_product_algebra(&a, &b).unwrap();
        assert_eq!(t.quiver().num_vertices(), 6);
        assert_eq!(t.quiver().num_arrows(), 12);
        assert_eq!(t.dim(), 72);
        assert_eq!(t.quiver().vertex(0), "(1,1')");
        assert_eq!(t.quiver().arrow(0).id, "(alpha1,1')");
        assert_eq!(t.quiver().arrow(6).id, "(1,beta1)");
    }

    #[test]
    fn lifts() {
        let (a, b) = (fixtures::example_a(Q), fixtures::example_b(Q));
        let ix = TensorIndex::new(a.quiver(), b.quiver());
        let t = tensor_product_algebra(&a, &b).unwrap();
        let p = Path::from_ids(a.quiver(), &["alpha1", "alpha2"]).unwrap();
        let l = lift_path_horizontal(&ix, &p, 0);
        assert_eq!(l.display(t.quiver()), "(alpha1,1').(alpha2,1')");
        assert_eq!(lift_path_horizontal(&ix, &Path::trivial(0), 2).display(t.quiver()), "e((1,3'))");
        let p = Path::from_ids(b.quiver(), &["beta1", "beta2"]).unwrap();
        assert_eq!(lift_path_vertical(&ix, 1, &p).display(t.quiver()), "(2,beta1).(2,beta2)");
    }

    #[test]
    fn squares_commute() {
        let (a, b) = (fixtures::example_a(Q), fixtures::example_b(Q));
        let ix = TensorIndex::new(a.quiver(), b.quiver());
        let t = tensor_product_algebra(&a, &b).unwrap();
        for alpha in 0..2 {
            for beta in 0..3 {
                let r = commutativity_relation(Q, &ix, a.quiver(), b.quiver(), alpha, beta);
                assert_eq!(t.path_nf(&r.terms[0].1), t.path_nf(&r.terms[1].1));
                assert!(!t.path_nf(&r.terms[0].1).is_empty());
            }
        }
    }

    #[test]
    fn unit_factor() {
        let a = fixtures::example_b(Q);
        let t = tensor_product_algebra(&a, &fixtures::point(Q)).unwrap();
        assert_eq!(t.dim(), a.dim());
        assert_eq!(t.quiver().num_arrows(), a.quiver().num_arrows());
        assert_eq!(t.cartan_matrix(), a.cartan_matrix());
    }

    #[test]
    fn field_mismatch() {
        // prime fields share one type, so the modulus is checked at runtime
        let a = fixtures::example_a(crate::exactla::PrimeField::new(5).unwrap());
        let b = fixtures::example_a(crate::exactla::PrimeField::new(7).unwrap());
        assert!(matches!(tensor_product_algebra(&a, &b), Err(BqaError::FieldMismatch(..))));
    }
}
