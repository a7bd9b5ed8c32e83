use atiyah_cli::{parse_expression, run, EXIT_OK, EXIT_USAGE, REPORT_SCHEMA};
use atiyah_kring::TorsionContext;
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("atiyah").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = invoke(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn tensor_uses_multiplication_rule() {
    let (code, out, _) = invoke(&["tensor", "--torsion", "0", "F_2 * F_3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "F_2 + F_4");
}

#[test]
fn text_and_json_agree() {
    let expr = "(L*F_2 + F_3)^3";
    let (_, text, _) = invoke(&["tensor", expr, "--torsion", "3"]);
    let value = json(&["tensor", expr, "--torsion", "3"]);
    assert_eq!(value["result"].as_str().unwrap(), text.trim());
    let reparsed = parse_expression(text.trim())
        .unwrap()
        .evaluate(TorsionContext::new(3))
        .unwrap();
    let direct = parse_expression(expr)
        .unwrap()
        .evaluate(TorsionContext::new(3))
        .unwrap();
    assert_eq!(reparsed, direct);
    assert_eq!(value["rank"], "125");
}

#[test]
fn negative_power() {
    let (code, out, _) = invoke(&["power", "L^2*F_2", "-3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "2*L^-6*F_2 + L^-6*F_4");
}

#[test]
fn classify_json_report() {
    let value = json(&["classify", "--rank", "2", "--torsion", "4"]);
    assert_eq!(value["krull_dim"], 1);
    assert_eq!(value["group"]["name"], "mu_4 x Ga");
    assert_eq!(value["group"]["dim"], 1);
    assert_eq!(value["presentation"]["modulus"], 2);
    assert_eq!(value["correspondence"], true);
    assert!(value["minimality_note"].is_string());

    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    assert!(validator.is_valid(&value));
    assert!(validator.is_valid(&json(&["p1", "2", "-3"])));
    let mut broken = value.clone();
    broken["krull_dim"] = Value::from(-1);
    assert!(!validator.is_valid(&broken));
}

#[test]
fn verify_reports_agreement() {
    let (code, out, _) = invoke(&["verify", "--rmax", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "oracle agreement 21/21 pairs");
}

#[test]
fn grid_and_express() {
    let value = json(&["grid", "--rmax", "3", "--nmax", "4"]);
    assert_eq!(value["rows"].as_array().unwrap().len(), 15);
    assert_eq!(value["all_hold"], true);

    let (code, out, _) = invoke(&["express", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "[F_5] = x^4 - 3x^2 + 1, x = [F_2]");
    let value = json(&["express", "5", "--chain", "odd"]);
    assert_eq!(value["polynomial"], "x^2 - x - 1");
}

#[test]
fn sset_lists_enumeration() {
    let value = json(&["sset", "--rank", "2", "--torsion", "1", "--bound", "3"]);
    let listed: Vec<&str> = value["enumerated"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(listed, ["O", "F_2", "F_3", "F_4"]);
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, err) = invoke(&["tensor", "F_0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("F index must be >= 1"));
    assert_eq!(invoke(&["classify"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["classify", "--rank", "0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["express", "4", "--chain", "odd"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn out_flag_writes_report() {
    let dir = std::env::temp_dir().join(format!("atiyah-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) = invoke(&[
        "classify",
        "--rank",
        "3",
        "--torsion",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let value: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["presentation"]["generators"][0], "[F_3]");
    std::fs::remove_dir_all(dir).unwrap();
}
