//! Small algebras used by tests, the command line and the demo.

use crate::bqa::{paths_of_length, BoundAlgebra, Path, Quiver, Relation};
use crate::exactla::Field;
use crate::tensoralg::tensor_product_algebra;

fn build<F: Field>(f: F, q: Quiver, rels: Vec<Relation<F>>, bound: usize) -> BoundAlgebra<F> {
    BoundAlgebra::build(f, q, rels, bound).expect("fixture algebras are admissible")
}

fn zero_paths<F: Field>(f: F, q: &Quiver, arrows: &[usize], len: usize) -> Vec<Relation<F>> {
    paths_of_length(q, arrows, len).into_iter().map(|p| Relation::monomial(f, p)).collect()
}

/// Nakayama algebra `N(n, len)`: the cyclic quiver `1 -> 2 -> ... -> n -> 1`
/// with every path of length `len` zero. Arrow `{prefix}i` starts at
/// vertex `i`; vertex ids carry `suffix`.
pub fn nakayama<F: Field>(f: F, n: usize, len: usize, prefix: &str, suffix: &str) -> BoundAlgebra<F> {
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(&format!("{i}{suffix}")).unwrap();
    }
    for i in 0..n {
        q.add_arrow(&format!("{prefix}{}", i + 1), i, (i + 1) % n).unwrap();
    }
    let all: Vec<usize> = (0..n).collect();
    let rels = zero_paths(f, &q, &all, len);
    build(f, q, rels, len)
}

/// `N(2,3)` with arrows `alpha1: 1 -> 2`, `alpha2: 2 -> 1`.
pub fn example_a<F: Field>(f: F) -> BoundAlgebra<F> {
    nakayama(f, 2, 3, "alpha", "")
}

/// `N(3,4)` with arrows `beta1, beta2, beta3` on vertices `1', 2', 3'`.
pub fn example_b<F: Field>(f: F) -> BoundAlgebra<F> {
    nakayama(f, 3, 4, "beta", "'")
}

pub fn tensor_example<F: Field>(f: F) -> BoundAlgebra<F> {
    tensor_product_algebra(&example_a(f), &example_b(f)).unwrap()
}

/// `k[x]/(x^2)`.
pub fn dual_numbers<F: Field>(f: F) -> BoundAlgebra<F> {
    let q = Quiver::from_parts(&["1"], &[("x", "1", "1")]).unwrap();
    let rels = vec![Relation::monomial(f, Path::from_ids(&q, &["x", "x"]).unwrap())];
    build(f, q, rels, 2)
}

/// Path algebra of `1 -> 2`.
pub fn path_a2<F: Field>(f: F) -> BoundAlgebra<F> {
    let q = Quiver::from_parts(&["1", "2"], &[("a", "1", "2")]).unwrap();
    build(f, q, vec![], 2)
}

/// Path algebra of `1 -> 2 -> 3`.
pub fn path_a3<F: Field>(f: F) -> BoundAlgebra<F> {
    let q = Quiver::from_parts(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    build(f, q, vec![], 3)
}

/// Kronecker algebra `1 => 2`.
pub fn kronecker<F: Field>(f: F) -> BoundAlgebra<F> {
    let q = Quiver::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
    build(f, q, vec![], 2)
}

/// Path algebra of the `D4` quiver with three arrows into the centre.
pub fn path_d4<F: Field>(f: F) -> BoundAlgebra<F> {
    let q = Quiver::from_parts(&["1", "2", "3", "4"], &[("a", "1", "4"), ("b", "2", "4"), ("c", "3", "4")]).unwrap();
    build(f, q, vec![], 2)
}

/// The one-vertex algebra `k`.
pub fn point<F: Field>(f: F) -> BoundAlgebra<F> {
    build(f, Quiver::from_parts(&["1"], &[]).unwrap(), vec![], 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    #[test]
    fn fixture_dimensions() {
        let f = Rationals;
        assert_eq!(path_a2(f).dim(), 3);
        assert_eq!(path_a3(f).dim(), 6);
        assert_eq!(kronecker(f).dim(), 4);
        assert_eq!(path_d4(f).dim(), 7);
        assert_eq!(point(f).dim(), 1);
        assert_eq!(nakayama(f, 3, 5, "a", "").dim(), 15);
    }
}
