//! Quivers, paths, relations and bound quiver algebras `kQ/I`.

mod algebra;
mod cycle;
mod path;
mod quiver;
mod symmetric;

pub use algebra::BoundAlgebra;
pub use cycle::{find_minimal_nonzero_cycle, Cycle};
pub use path::{paths_of_length, Path, Relation};
pub use quiver::{Arrow, Quiver};
pub use symmetric::{is_symmetric, trace_form_grams, SymmetryUndecided};

use crate::exactla::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BqaError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("paths do not compose: {0}")]
    NotComposable(String),
    #[error("relation has no nonzero term")]
    EmptyRelation,
    #[error("relation terms are not parallel paths")]
    RelationNotParallel,
    #[error("nilpotency bound must be at least 1")]
    ZeroBound,
    #[error("not admissible within bound {bound}: a path of length {bound} is nonzero (raise the bound or add relations)")]
    NotAdmissible { bound: usize },
    #[error("{0} paths below the bound exceed the enumeration limit")]
    TooLarge(usize),
    #[error("algebras are over different fields ({0} and {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
}

pub fn has_multiple_arrow(q: &Quiver) -> bool {
    q.has_multiple_arrow()
}

pub fn is_connected(q: &Quiver) -> bool {
    q.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Field, PrimeField, Rationals};
    use crate::fixtures;

    const Q: Rationals = Rationals;

    #[test]
    fn example_dimensions() {
        let a = fixtures::example_a(Q);
        let b = fixtures::example_b(Q);
        assert_eq!(a.dim(), 6);
        assert_eq!(b.dim(), 12);
        assert_eq!(fixtures::dual_numbers(Q).dim(), 2);
        assert_eq!(a.dimension_by_truncation().unwrap(), 6);
        assert_eq!(b.dimension_by_truncation().unwrap(), 12);
        assert_eq!(b.cartan_matrix(), vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn multiplication_examples() {
        let a = fixtures::example_a(Q);
        let q = a.quiver();
        let e1 = a.idempotent(0);
        assert_eq!(a.multiply(&e1, &e1), e1);
        let el = |ids: &[&str]| a.to_dense(&a.path_nf(&Path::from_ids(q, ids).unwrap()));
        assert_eq!(a.multiply(&el(&["alpha1"]), &el(&["alpha2"])), el(&["alpha1", "alpha2"]));
        assert!(a.multiply(&el(&["alpha1", "alpha2"]), &el(&["alpha1"])).iter().all(|x| x.is_zero()));
        let sum: Vec<_> = (0..2).map(|v| a.idempotent(v)).fold(a.zero_element(), |acc, e| {
            acc.iter().zip(&e).map(|(x, y)| Q.add(x, y)).collect()
        });
        assert_eq!(sum, a.one());
    }

    #[test]
    fn associativity_and_unit() {
        for alg in [fixtures::example_b(Q), fixtures::tensor_example(Q)] {
            let d = alg.dim();
            let basis: Vec<_> = (0..d).map(|i| alg.to_dense(&vec![(i, Q.one())])).collect();
            for x in basis.iter().step_by(3) {
                assert_eq!(alg.multiply(&alg.one(), x), *x);
                assert_eq!(alg.multiply(x, &alg.one()), *x);
                for y in basis.iter().step_by(5) {
                    for z in basis.iter().step_by(7) {
                        let l = alg.multiply(&alg.multiply(x, y), z);
                        let r = alg.multiply(x, &alg.multiply(y, z));
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_degree_relations_use_truncation() {
        // one loop x with x^2 = x^3 and x^3 = 0 gives k[x]/(x^2)
        let q = Quiver::from_parts(&["1"], &[("x", "1", "1")]).unwrap();
        let p = |n: usize| Path::new(&q, 0, vec![0; n]).unwrap();
        let r1 = Relation::new(Q, vec![(Q.one(), p(2)), (Q.from_i64(-1), p(3))]).unwrap();
        let r2 = Relation::monomial(Q, p(3));
        let alg = BoundAlgebra::build(Q, q, vec![r1, r2], 3).unwrap();
        assert_eq!(alg.dim(), 2);
    }

    #[test]
    fn not_admissible_without_enough_relations() {
        let q = Quiver::from_parts(&["1"], &[("x", "1", "1")]).unwrap();
        let r = BoundAlgebra::build(Q, q, vec![], 4);
        assert_eq!(r.err(), Some(BqaError::NotAdmissible { bound: 4 }));
    }

    #[test]
    fn minimal_cycles() {
        let a = fixtures::example_a(Q);
        let c = find_minimal_nonzero_cycle(&a).unwrap();
        assert_eq!(c.ids(a.quiver()), vec!["alpha1", "alpha2"]);
        let b = fixtures::example_b(Q);
        let c = find_minimal_nonzero_cycle(&b).unwrap();
        assert_eq!(c.ids(b.quiver()), vec!["beta1", "beta2", "beta3"]);
        assert_eq!(c.vertex_at(1), 0);
        assert_eq!(c.vertex_at(4), 0);
        assert!(find_minimal_nonzero_cycle(&fixtures::dual_numbers(Q)).is_none());
        // N(3,2): the 3-cycle is zero
        assert!(find_minimal_nonzero_cycle(&fixtures::nakayama(Q, 3, 2, "a", "")).is_none());
    }

    #[test]
    fn minimal_cycle_is_minimal_by_exhaustion() {
        for alg in [fixtures::example_a(Q), fixtures::example_b(Q), fixtures::nakayama(Q, 3, 5, "a", "")] {
            let c = find_minimal_nonzero_cycle(&alg).unwrap();
            let q = alg.quiver();
            let all: Vec<usize> = (0..q.num_arrows()).collect();
            for len in 2..c.len() {
                for p in paths_of_length(q, &all, len) {
                    if p.source == p.target && p.arrows.iter().all(|&a| !q.arrow(a).is_loop()) {
                        assert!(alg.path_is_zero(&p));
                    }
                }
            }
            assert!(!alg.path_is_zero(&c.path(q)));
        }
    }

    #[test]
    fn symmetry() {
        assert_eq!(is_symmetric(&fixtures::dual_numbers(Q), 0), Ok(true));
        assert_eq!(is_symmetric(&fixtures::path_a2(Q), 0), Ok(false));
        assert_eq!(is_symmetric(&fixtures::example_a(Q), 0), Ok(true));
        assert_eq!(is_symmetric(&fixtures::example_b(Q), 0), Ok(true));
        // N(2,2) is self-injective but not symmetric
        assert_eq!(is_symmetric(&fixtures::nakayama(Q, 2, 2, "a", ""), 0), Ok(false));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(is_symmetric(&fixtures::example_a(f5), 0), Ok(true));
        assert_eq!(is_symmetric(&fixtures::kronecker(f5), 0), Ok(false));
    }

    #[test]
    fn opposite_has_same_dimension() {
        let b = fixtures::example_b(Q);
        assert_eq!(b.opposite().dim(), 12);
        let k = fixtures::kronecker(Q);
        assert_eq!(k.opposite().quiver().arrow(0).source, 1);
    }
}
