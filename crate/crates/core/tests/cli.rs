use std::process::Command;

use serde_json::Value;

fn hsymb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hsymb")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn validator() -> jsonschema::Validator {
    let text = include_str!("../schema/hsymb.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = hsymb(&full);
    assert_eq!(code, 0, "{:?}: {}", args, err);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn every_json_document_matches_the_schema() {
    let v = validator();
    let cases: Vec<Vec<&str>> = vec![
        vec!["coproduct", "Li[3,1](1,2,3)"],
        vec!["coproduct", "ILi[1,3](1,2,3) - 2 log(1)", "--sort", "Hbar"],
        vec!["inv", "ILi[1,3](1,2,3)"],
        vec!["symbol", "Li[2,1](1,2,3)"],
        vec!["form", "Li[1,1](1,2,3)"],
        vec!["varmatrix", "--weights", "2,1", "--what", "V"],
        vec!["varmatrix", "--weights", "1,1", "--what", "V", "--sort", "Hbar"],
        vec!["varmatrix", "--weights", "2,1", "--what", "Omega"],
        vec!["varmatrix", "--weights", "2,1", "--what", "omega"],
        vec!["varmatrix", "--weights", "2,1", "--what", "omegahat"],
        vec!["varmatrix", "--weights", "2,1", "--what", "Vhat"],
        vec!["varmatrix", "--weights", "2,1", "--what", "wV"],
        vec!["varmatrix", "--weights", "2,1", "--what", "blocks"],
        vec!["verify", "--suite", "golden"],
    ];
    for args in cases {
        let doc = json_of(&args);
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{:?}: {:?}", args, errors);
    }
}

#[test]
fn schema_rejects_malformed_documents() {
    let v = validator();
    let bad: Value = serde_json::json!({"type": "element", "sort": "H", "terms": [{"coeff": {"num": "1"}, "factors": []}]});
    assert!(!v.is_valid(&bad));
    let bad: Value = serde_json::json!({"type": "form", "degree": 1, "terms": [{"coeff": {"num": "1", "den": "1"}, "factors": [], "basis": [{"d": "w", "i": 1, "j": 1}]}]});
    assert!(!v.is_valid(&bad));
}

#[test]
fn variation_matrix_in_latex() {
    let (code, out, _) = hsymb(&["varmatrix", "--weights", "2,1", "--what", "V", "--format", "latex"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.trim().lines().filter(|l| l.contains('&')).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[5].starts_with("[x_{1},x_{2}]_{2,1} & [x_{1}]_{2} & "));
    assert!(rows[4].contains("[x_{1}]_0 + [x_{2}]_0"));
}

#[test]
fn form_in_text() {
    let (code, out, _) = hsymb(&["form", "Li[1,1](1,2,3)"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        "-1/2*u1*dv1_2 + 1/2*v1*dv1_2 - 1/2*v1*dv2 + 1/2*v1_2*du1 - 1/2*v1_2*dv1 + 1/2*v1_2*dv2 + 1/2*v2*dv1 - 1/2*v2*dv1_2"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(hsymb(&["verify", "--suite", "varmatrix"]).0, 0);
    assert_eq!(hsymb(&["verify", "--suite", "nonsense"]).0, 2);
    assert_eq!(hsymb(&["form", "Li[2](2,1)"]).0, 2);
    assert_eq!(hsymb(&["coproduct", "ILi[2](1,2)"]).0, 2);
    assert_eq!(hsymb(&["varmatrix"]).0, 2);
    assert_eq!(hsymb(&["frobnicate"]).0, 2);
}

#[test]
fn output_is_deterministic_and_diagnostics_go_to_stderr() {
    let a = hsymb(&["verify", "--suite", "structural", "--seed", "7", "--format", "json"]);
    let b = hsymb(&["verify", "--suite", "structural", "--seed", "7", "--format", "json"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert!(a.2.contains("wall time"));
    assert!(!a.1.contains("wall time"));
}
