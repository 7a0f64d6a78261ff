use std::path::PathBuf;

use qalg::bqa::BoundAlgebra;
use qalg::cli::*;
use qalg::exactla::{Field, FieldSpec, Rationals};
use qalg::fixtures;
use qalg::rep::Representation;

const Q: Rationals = Rationals;

fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn load(name: &str) -> AnyAlgebra {
    parse_algebra(&data(name), None).unwrap()
}

fn rational(a: AnyAlgebra) -> BoundAlgebra<Rationals> {
    match a {
        AnyAlgebra::Rational(a) => a,
        AnyAlgebra::Prime(_) => panic!("expected Q"),
    }
}

fn same_algebra<F: Field>(a: &BoundAlgebra<F>, b: &BoundAlgebra<F>) {
    assert_eq!(a.quiver(), b.quiver());
    assert_eq!(a.basis(), b.basis());
    assert_eq!(a.bound(), b.bound());
    assert_eq!(a.relations(), b.relations());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            assert_eq!(a.mul_basis(i, j), b.mul_basis(i, j));
        }
    }
}

fn opts() -> Options {
    Options::default()
}

fn names(n: &[&str]) -> Vec<String> {
    n.iter().map(|s| s.to_string()).collect()
}

#[test]
fn data_files_match_fixtures() {
    same_algebra(&rational(load("exampleA.alg")), &fixtures::example_a(Q));
    same_algebra(&rational(load("exampleB.alg")), &fixtures::example_b(Q));
    same_algebra(&rational(load("local.alg")), &fixtures::dual_numbers(Q));
    assert_eq!(load("exampleA_gf5.alg").field(), FieldSpec::Prime(5));
}

#[test]
fn round_trip_is_exact() {
    for name in ["exampleA.alg", "exampleB.alg", "point.alg", "local.alg", "a2.alg", "kronecker.alg", "commutative_square.alg", "exampleB_gf7.alg"] {
        match load(name) {
            AnyAlgebra::Rational(a) => same_algebra(&a, &rational(parse_algebra(&serialize_algebra(&a), None).unwrap())),
            AnyAlgebra::Prime(a) => match parse_algebra(&serialize_algebra(&a), None).unwrap() {
                AnyAlgebra::Prime(b) => same_algebra(&a, &b),
                _ => panic!("field changed"),
            },
        }
    }
    let t = qalg::tensoralg::tensor_product_algebra(&fixtures::example_a(Q), &fixtures::example_b(Q)).unwrap();
    same_algebra(&t, &rational(parse_algebra(&serialize_algebra(&t), None).unwrap()));
}

#[test]
fn relation_syntax() {
    let a = rational(load("commutative_square.alg"));
    let q = a.quiver();
    let r1 = parse_relation(Q, q, "a.b - c.d").unwrap();
    let r2 = parse_relation(Q, q, "1 * a.b + -1 * c.d").unwrap();
    let r3 = parse_relation(Q, q, "-c.d+a.b").unwrap();
    assert_eq!(r1, r2);
    assert_eq!(r1.terms.len(), 2);
    assert_eq!(r3.terms.len(), 2);
    let half = parse_relation(Q, q, "1/2 * a.b - 3/2 * c.d").unwrap();
    assert_eq!(half.terms[0].0, Q.parse("1/2").unwrap());
    assert!(parse_relation(Q, q, "a.b c.d").is_err());
    assert!(parse_relation(Q, q, "a.c").is_err());
    assert!(parse_relation(Q, q, "a.b - c").is_err());
    assert!(parse_relation(Q, q, "a.b - a.b").is_err());
    assert!(parse_relation(Q, q, "e(1) - e(1)").is_err());
    assert!(parse_relation(Q, q, "2 * e(1)").is_ok());
}

#[test]
fn parse_errors_carry_line_numbers() {
    let cases = [
        ("field Q\nvertex 1\narrow a: 1 -> 9\nbound 2\n", 3, "unknown vertex"),
        ("vertex 1 2\n\n# comment\nfoo bar\n", 4, "unknown keyword"),
        ("vertex 1\narrow x: 1 -> 1\nrelation x.y\nbound 2\n", 3, "unknown arrow"),
        ("vertex 1\nvertex 1\nbound 1\n", 2, "duplicate vertex"),
        ("field GF(4)\nvertex 1\nbound 1\n", 1, "unknown field"),
        ("vertex 1\nbound two\n", 2, "expected a number"),
        ("vertex a.b\nbound 1\n", 1, "invalid vertex id"),
    ];
    for (text, line, msg) in cases {
        let e = parse_algebra(text, None).unwrap_err();
        assert_eq!(e.line, line, "{text}");
        assert!(e.message.contains(msg), "{}", e.message);
    }
    let e = parse_algebra("vertex 1\narrow x: 1 -> 1\n", None).unwrap_err();
    assert!(e.message.contains("missing `bound`"));
    let e = parse_algebra("vertex 1\narrow x: 1 -> 1\nbound 3\n", None).unwrap_err();
    assert!(e.message.contains("not admissible"));
}

#[test]
fn field_override_replaces_the_field_line() {
    let a = parse_algebra(&data("exampleA.alg"), Some(FieldSpec::Prime(3))).unwrap();
    assert_eq!(a.field(), FieldSpec::Prime(3));
    assert!(a.to_text().starts_with("field GF(3)\n"));
}

#[test]
fn representation_files() {
    let a = fixtures::path_a2(Q);
    let text = "field Q\ndim 1 2\ndim 2 1\nmap a 1x2: 1 -1\n";
    let m = parse_rep(&a, text).unwrap();
    assert_eq!(m.dims(), &[2, 1]);
    let again = parse_rep(&a, &serialize_rep(&a, &m)).unwrap();
    assert_eq!(m, again);
    // unlisted maps are zero
    let z = parse_rep(&a, "dim 1 1\ndim 2 1\n").unwrap();
    assert!(z.map(0).is_zero());
    let e = parse_rep(&a, "dim 1 1\ndim 2 1\nmap a 2x1: 1 ; 1\n").unwrap_err();
    assert_eq!(e.line, 3);
    let e = parse_rep(&a, "field GF(3)\n").unwrap_err();
    assert_eq!(e.line, 1);
    // relations are enforced
    let d = fixtures::dual_numbers(Q);
    assert!(parse_rep(&d, "dim 1 2\nmap x 2x2: 0 1 ; 0 0\n").is_ok());
    let e = parse_rep(&d, "dim 1 2\nmap x 2x2: 0 1 ; 1 0\n").unwrap_err();
    assert!(e.message.contains("does not hold"));
    assert_eq!(Representation::<Rationals>::zero(&d), parse_rep(&d, "").unwrap());
}

#[test]
fn tensor_command() {
    let out = tensor(&load("exampleA.alg"), &load("exampleB.alg"), &names(&["exampleA.alg", "exampleB.alg"]), opts()).unwrap();
    assert_eq!(out.summary, "72 = 6 * 12");
    assert_eq!(out.status, Status::Definite);
    let report: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(report["result"]["vertices"], 6);
    assert_eq!(report["result"]["arrows"], 12);
    assert_eq!(report["result"]["horizontal_relations"], 6);
    assert_eq!(report["result"]["vertical_relations"], 6);
    assert_eq!(report["result"]["commutativity_relations"], 6);
    assert_eq!(report["seed"], 0);
    assert!(report.get("timing_ms").is_none());
    let t = rational(parse_algebra(out.artifact.as_ref().unwrap(), None).unwrap());
    assert_eq!(t.dim(), 72);

    // tensoring with a point changes nothing but names
    let out = tensor(&load("exampleA.alg"), &load("point.alg"), &[], opts()).unwrap();
    let t = rational(parse_algebra(out.artifact.as_ref().unwrap(), None).unwrap());
    let a = fixtures::example_a(Q);
    assert_eq!(t.dim(), a.dim());
    assert_eq!(t.cartan_matrix(), a.cartan_matrix());

    let e = tensor(&load("exampleA_gf5.alg"), &load("exampleB_gf7.alg"), &[], opts()).unwrap_err();
    assert!(matches!(e, CommandError::FieldMismatch(_, _)));
    let e = tensor(&load("exampleA.alg"), &load("exampleB_gf7.alg"), &[], opts()).unwrap_err();
    assert!(matches!(e, CommandError::FieldMismatch(_, _)));
}

#[test]
fn certify_command() {
    let out = certify(&load("exampleA.alg"), &load("exampleB.alg"), None, &[], opts()).unwrap();
    assert_eq!(out.status, Status::Definite);
    let r: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(r["result"]["verdict"], "tau-tilting-infinite");
    assert_eq!(r["result"]["evidence"]["members"].as_array().unwrap().len(), 3);

    let out = certify(&load("local.alg"), &load("exampleA.alg"), None, &[], opts()).unwrap();
    assert_eq!(out.status, Status::Inconclusive);
    assert!(out.report.contains("hypothesis violated: local factor"));

    let out = certify(&load("kronecker.alg"), &load("exampleA.alg"), None, &[], opts()).unwrap();
    assert_eq!(out.status, Status::Definite);
    assert!(out.report.contains("multiple-arrow"));

    let ls = names(&["5", "7"]);
    let out = certify(&load("exampleA.alg"), &load("exampleB.alg"), Some(&ls), &[], opts()).unwrap();
    assert!(out.report.contains("\"parameter\": \"7\""));
    let bad = names(&["1", "x"]);
    assert!(matches!(
        certify(&load("exampleA.alg"), &load("exampleB.alg"), Some(&bad), &[], opts()),
        Err(CommandError::BadParameter(_))
    ));
}

#[test]
fn sttilt_command() {
    let out = sttilt(&load("local.alg"), 10_000, &[], opts()).unwrap();
    assert_eq!(out.status, Status::Definite);
    let r: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(r["result"]["nodes"], 2);
    assert_eq!(r["result"]["complete"], true);

    let out = sttilt(&load("a2.alg"), 10_000, &[], opts()).unwrap();
    let r: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(r["result"]["nodes"], 5);
    assert_eq!(r["result"]["hasse"].as_array().unwrap().len(), 5);
    assert_eq!(out.artifact.unwrap().matches("->").count(), 5);

    let out = sttilt(&load("kronecker.alg"), 12, &[], opts()).unwrap();
    assert_eq!(out.status, Status::Inconclusive);
    assert_eq!(out.summary, "possibly τ-tilting infinite (cap exceeded)");
}

#[test]
fn poset_compare_command() {
    let out = poset_compare(&load("a2.alg"), &load("local.alg"), 10_000, &[], opts()).unwrap();
    assert_eq!(out.status, Status::Definite);
    assert!(out.summary.starts_with("not isomorphic"));

    let t = tensor(&load("exampleA.alg"), &load("local.alg"), &[], opts()).unwrap();
    let t = parse_algebra(t.artifact.as_ref().unwrap(), None).unwrap();
    let out = poset_compare(&load("exampleA.alg"), &t, 10_000, &[], opts()).unwrap();
    assert_eq!(out.summary, "isomorphic (6 vs 6 pairs)");
    let r: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(r["result"]["witness"].as_array().unwrap().len(), 6);

    let out = poset_compare(&load("kronecker.alg"), &load("a2.alg"), 20, &[], opts()).unwrap();
    assert_eq!(out.status, Status::Inconclusive);
    assert!(out.report.contains("\"verdict\": \"incomplete\""));
}

#[test]
fn module_command() {
    let out = module(&load("a2.alg"), "dim 1 1\ndim 2 1\nmap a 1x1: 1\n", &[], opts()).unwrap();
    let r: serde_json::Value = serde_json::from_str(&out.report).unwrap();
    assert_eq!(r["result"]["brick"], true);
    assert_eq!(r["result"]["tau_rigid"], true);
    assert_eq!(r["result"]["top_g_vector"], serde_json::json!([1, 0]));
    assert!(module(&load("a2.alg"), "dim 1 x\n", &[], opts()).is_err());
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let a = load("exampleA.alg");
        let b = load("exampleB.alg");
        [
            tensor(&a, &b, &[], opts()).unwrap().report,
            certify(&a, &b, None, &[], Options { seed: 17, timing: false }).unwrap().report,
            sttilt(&a, 100, &[], opts()).unwrap().report,
        ]
    };
    assert_eq!(run(), run());
    let timed = sttilt(&load("a2.alg"), 100, &[], Options { seed: 1, timing: true }).unwrap();
    assert!(timed.report.contains("timing_ms"));
    assert!(timed.report.contains("\"seed\": 1"));
}
