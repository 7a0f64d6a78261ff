use proptest::prelude::*;
use qalg::bqa::BoundAlgebra;
use qalg::exactla::{Field, Matrix, PrimeField, Rationals};
use qalg::fixtures;
use qalg::rep::*;
use qalg::tautilt::{injective_rep, projective_rep};

const Q: Rationals = Rationals;

#[test]
fn simple_reps() {
    let b = fixtures::example_b(Q);
    let t1 = simple_rep(&b, 0);
    assert_eq!(t1.dims(), &[1, 0, 0]);
    assert!(t1.check_relations(&b));
    assert_eq!(hom_dim(&b, &t1, &t1), 1);
    assert_eq!(hom_dim(&b, &t1, &simple_rep(&b, 1)), 0);
}

#[test]
fn projective_of_three_cycle() {
    let b = fixtures::example_b(Q);
    let p1 = projective_rep(&b, 0);
    assert_eq!(p1.dims(), &[2, 1, 1]);
    assert!(p1.check_relations(&b));
    assert_eq!(hom_dim(&b, &p1, &p1), 2);
    assert_eq!(socle(&b, &p1).rep.dims(), &[1, 0, 0]);
    assert_eq!(top(&b, &p1).rep.dims(), &[1, 0, 0]);
    assert_eq!(radical(&b, &p1).rep.dims(), &[1, 1, 1]);
    assert_eq!(composition_factors(&p1), vec![(0, 2), (1, 1), (2, 1)]);
    assert!(!is_brick(&b, &p1).unwrap());
    assert_eq!(is_indecomposable(&b, &p1).unwrap(), Indecomposability::Indecomposable);
    assert!(!brick_criterion_socle(&b, &p1).unwrap());
    assert_eq!(decompose(&b, &p1).unwrap().summands.len(), 1);
}

#[test]
fn uniserial_quotient_passes_socle_criterion() {
    let b = fixtures::example_b(Q);
    let p1 = projective_rep(&b, 0);
    let soc = socle(&b, &p1);
    let u = p1.quotient(&b, soc.inclusion.maps()).rep;
    assert_eq!(u.dims(), &[1, 1, 1]);
    assert!(brick_criterion_socle(&b, &u).unwrap());
    assert!(is_brick(&b, &u).unwrap());
    assert!(brick_criterion_socle(&b, &simple_rep(&b, 2)).unwrap());
}

#[test]
fn injectives_of_symmetric_algebra_match_projectives() {
    let b = fixtures::example_b(Q);
    for i in 0..3 {
        let inj = injective_rep(&b, i);
        assert!(inj.check_relations(&b));
        assert!(is_isomorphic(&b, &inj, &projective_rep(&b, i)).unwrap());
        assert_eq!(socle(&b, &inj).rep.dims().iter().sum::<usize>(), 1);
        assert_eq!(socle(&b, &inj).rep.dim_at(i), 1);
    }
}

#[test]
fn sums_split_and_match() {
    let a = fixtures::example_a(Q);
    let s1 = simple_rep(&a, 0);
    let s2 = simple_rep(&a, 1);
    let s = direct_sum(&a, &[s1.clone(), s2.clone()]);
    let d = decompose(&a, &s).unwrap();
    assert_eq!(d.summands.len(), 2);
    let ss = direct_sum(&a, &[s1.clone(), s1.clone()]);
    assert_eq!(hom_dim(&a, &ss, &ss), 4);
    assert_eq!(is_indecomposable(&a, &ss).unwrap(), Indecomposability::Decomposable);
    assert!(!is_isomorphic(&a, &s1, &s2).unwrap());
    let p = projective_rep(&a, 0);
    let mixed = direct_sum(&a, &[p.clone(), s2.clone(), p.clone()]);
    let parts = decompose(&a, &mixed).unwrap().summands;
    assert_eq!(parts.len(), 3);
    assert!(is_isomorphic(&a, &direct_sum(&a, &parts), &mixed).unwrap());
}

#[test]
fn in_fac_examples() {
    let a2 = fixtures::path_a2(Q);
    let s1 = simple_rep(&a2, 0);
    let s2 = simple_rep(&a2, 1);
    assert!(in_fac(&a2, &s1, &s1));
    assert!(!in_fac(&a2, &s2, &s1));
    let reg = direct_sum(&a2, &[projective_rep(&a2, 0), projective_rep(&a2, 1)]);
    assert!(in_fac(&a2, &reg, &s1));
    assert!(in_fac(&a2, &reg, &s2));
}

#[test]
fn field_extension_is_flagged() {
    // Kronecker representation k^2 => k^2 with maps I and a rotation: its
    // endomorphisms are Q(i), which has no idempotents over Q
    let k = fixtures::kronecker(Q);
    let rot = Matrix::from_i64(Q, &[&[0, -1], &[1, 0]]);
    let m = Representation::new(&k, vec![2, 2], vec![Matrix::identity(Q, 2), rot]).unwrap();
    assert_eq!(hom_dim(&k, &m, &m), 2);
    assert_eq!(is_indecomposable(&k, &m).unwrap(), Indecomposability::FieldExtension { degree: 2 });
    // over GF(5) the rotation diagonalises and the module splits
    let f5 = PrimeField::new(5).unwrap();
    let k5 = fixtures::kronecker(f5);
    let rot5 = Matrix::from_i64(f5, &[&[0, -1], &[1, 0]]);
    let m5 = Representation::new(&k5, vec![2, 2], vec![Matrix::identity(f5, 2), rot5]).unwrap();
    assert_eq!(is_indecomposable(&k5, &m5).unwrap(), Indecomposability::Decomposable);
    assert_eq!(decompose(&k5, &m5).unwrap().summands.len(), 2);
}

#[test]
fn shape_mismatch() {
    let a2 = fixtures::path_a2(Q);
    let r = Representation::new(&a2, vec![1, 1], vec![Matrix::zeros(Q, 2, 1)]);
    assert!(matches!(r, Err(RepError::ShapeMismatch(_))));
}

fn random_rep(alg: &BoundAlgebra<Rationals>, dims: &[usize], entries: &[i64]) -> Representation<Rationals> {
    let mut it = entries.iter().cycle();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            Matrix::from_vec(Q, r, c, (0..r * c).map(|_| Q.from_i64(*it.next().unwrap())).collect())
        })
        .collect();
    Representation::new(alg, dims.to_vec(), maps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_is_additive(d in proptest::collection::vec(0usize..3, 8), e in proptest::collection::vec(-2i64..3, 1..40)) {
        let d4 = fixtures::path_d4(Q);
        let m = random_rep(&d4, &d[0..4], &e);
        let n = random_rep(&d4, &d[4..8], &e[e.len() / 2..]);
        let s = direct_sum(&d4, &[m.clone(), n.clone()]);
        prop_assert_eq!(hom_dim(&d4, &m, &s), hom_dim(&d4, &m, &m) + hom_dim(&d4, &m, &n));
        for g in hom_basis(&d4, &m, &n) {
            prop_assert!(g.is_morphism(&d4, &m, &n));
        }
    }

    #[test]
    fn socle_splits_composition_factors(d in proptest::collection::vec(0usize..3, 4), e in proptest::collection::vec(-2i64..3, 1..40)) {
        let d4 = fixtures::path_d4(Q);
        let m = random_rep(&d4, &d, &e);
        let soc = socle(&d4, &m);
        let rest = m.quotient(&d4, soc.inclusion.maps()).rep;
        for v in 0..4 {
            prop_assert_eq!(m.dim_at(v), soc.rep.dim_at(v) + rest.dim_at(v));
        }
        prop_assert!(soc.inclusion.is_morphism(&d4, &soc.rep, &m));
    }

    #[test]
    fn decompose_then_sum_is_isomorphic(d in proptest::collection::vec(1usize..3, 4), e in proptest::collection::vec(-1i64..2, 1..30)) {
        let d4 = fixtures::path_d4(Q);
        let m = random_rep(&d4, &d, &e);
        let parts = decompose(&d4, &m).unwrap().summands;
        for p in &parts {
            prop_assert_eq!(is_indecomposable(&d4, p).unwrap(), Indecomposability::Indecomposable);
        }
        prop_assert!(is_isomorphic(&d4, &direct_sum(&d4, &parts), &m).unwrap());
    }
}
