use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn charone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charone")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json_of(args: &[&str]) -> Value {
    let out = charone(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Checks the keywords used by the shipped schemas.
fn validate(v: &Value, s: &Value) -> Result<(), String> {
    let Some(s) = s.as_object() else { return Ok(()) };
    if let Some(t) = s.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_i64() || v.is_u64(),
            "number" => v.is_number(),
            "boolean" => v.is_boolean(),
            _ => false,
        };
        if !ok {
            return Err(format!("{v} is not of type {t}"));
        }
    }
    if let Some(c) = s.get("const") {
        if v != c {
            return Err(format!("{v} != {c}"));
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            return Err(format!("{v} not in {e:?}"));
        }
    }
    if let (Some(min), Some(x)) = (s.get("minimum").and_then(Value::as_f64), v.as_f64()) {
        if x < min {
            return Err(format!("{x} < {min}"));
        }
    }
    if let Some(alts) = s.get("anyOf").and_then(Value::as_array) {
        if !alts.iter().any(|a| validate(v, a).is_ok()) {
            return Err(format!("{v} matches no alternative"));
        }
    }
    if let Some(alts) = s.get("oneOf").and_then(Value::as_array) {
        let n = alts.iter().filter(|a| validate(v, a).is_ok()).count();
        if n != 1 {
            return Err(format!("{v} matches {n} alternatives"));
        }
    }
    if let Some(obj) = v.as_object() {
        for key in s.get("required").and_then(Value::as_array).into_iter().flatten() {
            let key = key.as_str().unwrap();
            if !obj.contains_key(key) {
                return Err(format!("missing {key}"));
            }
        }
        let props = s.get("properties").and_then(Value::as_object);
        for (k, x) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => validate(x, sub)?,
                None => match s.get("additionalProperties") {
                    Some(Value::Bool(false)) => return Err(format!("unexpected key {k}")),
                    Some(sub) => validate(x, sub)?,
                    None => {}
                },
            }
        }
    }
    if let Some(items) = v.as_array() {
        if let Some(min) = s.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < min {
                return Err("too few items".into());
            }
        }
        if let Some(max) = s.get("maxItems").and_then(Value::as_u64) {
            if items.len() as u64 > max {
                return Err("too many items".into());
            }
        }
        if let Some(sub) = s.get("items") {
            for x in items {
                validate(x, sub)?;
            }
        }
    }
    Ok(())
}

#[test]
fn eval_prints_canonical_form() {
    let out = charone(&["eval", "(q^1(x)q^0 + q^0(x)q^1)^2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "q^0(x)q^2 + q^1(x)q^1 + q^2(x)q^0");
}

#[test]
fn syntax_errors_exit_with_2() {
    let out = charone(&["eval", "sigma(2,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 8"));
    assert_eq!(charone(&["eval", "mu(q^1)"]).status.code(), Some(2));
    assert_eq!(charone(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn eval_json_matches_schemas() {
    let v = json_of(&["eval", "sigma(6,4)", "--json"]);
    validate(&v["value"], &schema("staircase")).unwrap();
    let v = json_of(&["eval", "gamma(sigma(6,4))", "--json"]);
    validate(&v["value"], &schema("polygon")).unwrap();
    let v = json_of(&["eval", "mu(sigma(6,4))", "--json"]);
    validate(&v["value"], &schema("zmin")).unwrap();
    assert_eq!(v["value"]["exp"], 4);
    let v = json_of(&["reduce", "q^0(x)q^3 + q^2(x)q^2 + q^3(x)q^0", "--json"]);
    validate(&v, &schema("polygon")).unwrap();
    assert_eq!(v["extremes"], serde_json::json!([[0, 3], [3, 0]]));
}

#[test]
fn json_inputs_are_accepted() {
    let dir = std::env::temp_dir().join(format!("charone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.json");
    std::fs::write(&path, r#"{"corners": [[0, 2], [1, 1], [2, 0]]}"#).unwrap();
    let out = charone(&["eval", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "q^0(x)q^2 + q^1(x)q^1 + q^2(x)q^0");
    let out = charone(&["congruent", path.to_str().unwrap(), r#"{"corners": [[0, 2], [2, 0]]}"#]);
    assert_eq!(stdout(&out).lines().next(), Some("true"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn congruence() {
    let x = "q^0(x)q^6 + q^2(x)q^2 + q^6(x)q^0";
    let y = "q^0(x)q^6 + q^1(x)q^5 + q^2(x)q^2 + q^4(x)q^1 + q^6(x)q^0";
    let v = json_of(&["congruent", x, y, "--json"]);
    assert_eq!(v["congruent"], true);
    validate(&v["witness"], &schema("staircase")).unwrap();
    let out = charone(&["congruent", "q^1(x)q^0", "q^0(x)q^2", "--slope", "2"]);
    assert_eq!(stdout(&out).trim(), "true");
    let out = charone(&["congruent", "q^1(x)q^0", "q^0(x)q^2", "--slope", "sqrt2"]);
    assert_eq!(stdout(&out).trim(), "false");
    let out = charone(&["congruent", "q^13(x)q^0", "q^0(x)q^17", "--slope", "cf:1,2,2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compose_outputs() {
    let v = json_of(&["compose", "--lhs", "sqrt2", "--rhs", "sqrt3"]);
    validate(&v, &schema("compose")).unwrap();
    assert_eq!(v["result"], "psi");
    assert_eq!(v["eps_slope"], "0/1");
    assert_eq!(v["slope"].as_str().unwrap().parse::<charone::Slope>().unwrap(), charone::Slope::sqrt(6).unwrap());
    let v = json_of(&["compose", "--lhs", "sqrt2", "--rhs", "(0+1*sqrt(2))/2"]);
    validate(&v, &schema("compose")).unwrap();
    assert_eq!((v["result"].as_str(), v["slope"].as_str()), (Some("id-eps"), Some("1/1")));
    let v = json_of(&["compose", "--lhs", "sqrt2", "--rhs", "sqrt8"]);
    assert_eq!((v["result"].as_str(), v["slope"].as_str()), (Some("id-eps-psi"), Some("4/1")));
    let v = json_of(&["compose", "--lhs", "2/3", "--rhs", "3/4"]);
    assert_eq!((v["result"].as_str(), v["slope"].as_str()), (Some("psi"), Some("1/2")));
    assert_eq!(charone(&["compose", "--lhs", "cf:1,2,2", "--rhs", "2"]).status.code(), Some(2));
}

#[test]
fn points_commands() {
    assert_eq!(stdout(&charone(&["points", "iso", "2^inf*3", "2^inf*5^2"])).trim(), "true");
    assert_eq!(stdout(&charone(&["points", "iso", "2^inf", "3^inf"])).trim(), "false");
    assert_eq!(stdout(&charone(&["points", "member", "2^inf", "3/8"])).trim(), "true");
    assert_eq!(stdout(&charone(&["points", "member", "2^inf", "1/3"])).trim(), "false");
    assert_eq!(stdout(&charone(&["points", "theta", "7"])).trim(), "7^inf");
    assert_eq!(stdout(&charone(&["points", "theta", "generic"])).trim(), "base");
    assert_eq!(stdout(&charone(&["points", "decompose", "7/12"])).trim(), "0 + 1/2^2 + 1/3");
    assert_eq!(charone(&["points", "theta", "6"]).status.code(), Some(2));
    let a: charone::Supernatural = "3*2^inf".parse().unwrap();
    validate(&serde_json::to_value(&a).unwrap(), &schema("supernatural")).unwrap();
    validate(&serde_json::to_value(charone::Supernatural::base_point()).unwrap(), &schema("supernatural")).unwrap();
}

#[test]
fn zeta_check_exit_codes() {
    let v = json_of(&["zeta", "check", "--u0", "3", "--width", "0.2", "-K", "100", "--json"]);
    validate(&v, &schema("report")).unwrap();
    assert!(v["relative_discrepancy"].as_f64().unwrap() < 5e-2);
    let out = charone(&["zeta", "check", "-K", "100", "--assert", "--tol", "1e-3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = charone(&["zeta", "check", "-K", "5", "--assert", "--tol", "1e-6"]);
    assert_eq!(out.status.code(), Some(3));
    let out = charone(&["zeta", "check", "--u0", "1.1", "--width", "0.2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = charone(&["zeta", "check", "--zeros", "/nonexistent/zeros.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let out = charone(&["zeta", "check", "--pmax", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn slope_schema() {
    for s in ["sqrt2", "3/7", "cf:1,2,2,2", "(1+1*sqrt(5))/2"] {
        let slope: charone::Slope = s.parse().unwrap();
        validate(&serde_json::to_value(&slope).unwrap(), &schema("slope")).unwrap();
    }
    assert!(validate(&serde_json::json!({"kind": "rational", "num": 1}), &schema("slope")).is_err());
}
