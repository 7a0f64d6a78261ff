use qalg_web::{member_json, sttilt_json, tensor_json};

const A: &str = include_str!("../../../data/exampleA.alg");
const B: &str = include_str!("../../../data/exampleB.alg");
const A2: &str = include_str!("../../../data/a2.alg");

#[test]
fn tensor_export() {
    let v: serde_json::Value = serde_json::from_str(&tensor_json(A, B).unwrap()).unwrap();
    assert_eq!(v["summary"], "72 = 6 * 12");
    assert!(v["algebra"].as_str().unwrap().contains("arrow (alpha1,1')"));
    assert!(tensor_json("vertex 1\n", B).is_err());
}

#[test]
fn member_export() {
    let v: serde_json::Value = serde_json::from_str(&member_json(A, B, "2").unwrap()).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 1, 1, 1, 0, 1]));
    assert_eq!(v["brick"], true);
    assert!(v["maps"].as_array().unwrap().iter().any(|m| m["rows"] == serde_json::json!([["2"]])));
    assert!(member_json(A, B, "0").is_err());
    assert!(member_json(A, B, "abc").is_err());
}

#[test]
fn sttilt_export() {
    let v: serde_json::Value = serde_json::from_str(&sttilt_json(A2, 100).unwrap()).unwrap();
    assert_eq!(v["report"]["result"]["nodes"], 5);
    assert!(v["dot"].as_str().unwrap().starts_with("digraph"));
}
