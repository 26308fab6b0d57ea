use std::process::{Command, Output};

use serde_json::Value;

fn superindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superindex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_series_ahat() {
    let out = superindex(&["eval", "series", "Ahat", "--order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1 - 1/24 t^2 + 7/5760 t^4");
}

#[test]
fn eval_tau_orientation() {
    let out = superindex(&["eval", "tau", "--type", "0,1,1", "--chain", "Theta"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn eval_tau_chain_separator() {
    let out = superindex(&["eval", "tau", "--type", "2,0,0", "--chain", "1 | 1 | 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn eval_pn_zero() {
    let out = superindex(&["eval", "pn", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn eval_pn_methods_agree() {
    let graphs = superindex(&["eval", "pn", "--n", "2", "--type", "4,1,1", "--average"]);
    let direct = superindex(&["eval", "pn", "--n", "2", "--type", "4,1,1", "--average", "--method", "direct"]);
    assert_eq!(stdout(&graphs), stdout(&direct));
    assert!(stdout(&graphs).contains("x2^2"));
}

#[test]
fn eval_rhs_n0() {
    let out = superindex(&["eval", "rhs", "--type", "0,1,1"]);
    assert_eq!(stdout(&out).trim(), "-1");
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["eval", "series", "Nope", "--order", "4"][..],
        &["eval", "tau", "--type", "0,1,1", "--chain", "Theta*"],
        &["eval", "tau", "--type", "0,1,1", "--chain", "Theta | 1"],
        &["verify", "bernoulli", "--type", "3,1,1"],
        &["verify", "algebra", "--type", "2,2,1"],
        &["verify", "nope"],
        &["verify", "local-index", "--n", "99"],
    ] {
        let out = superindex(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_bernoulli_passes() {
    let out = superindex(&["verify", "bernoulli"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let line = text
        .lines()
        .skip_while(|l| !l.starts_with("PASS bernoulli.cycle-integral.I2"))
        .nth(1)
        .unwrap();
    assert_eq!(line.trim(), "value:    -1/3");
}

#[test]
fn failing_check_exits_1() {
    let out = superindex(&["verify", "local-index", "--n", "1", "--type", "2,1,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL local-index.(2|1,1).n1.closed-form"));
}

#[test]
fn json_is_deterministic_and_written_to_out() {
    let dir = std::env::temp_dir().join(format!("superindex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let paths = [dir.join("a.json"), dir.join("b.json")];
    for p in &paths {
        superindex(&["verify", "all", "--type", "2,1,1", "--seed", "42", "--json", "--out", p.to_str().unwrap()]);
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    std::fs::remove_dir_all(&dir).ok();
    let report: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(report["seed"], 42);
    assert_eq!(report["type"], "(2|1,1)");
}

/// Checks the subset of JSON Schema the published schema uses.
fn conforms(value: &Value, schema: &Value) -> Result<(), String> {
    if let Some(ty) = schema.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(v) => v.iter().filter_map(Value::as_str).collect(),
            _ => return Err("bad type keyword".into()),
        };
        let actual = match value {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) if n.is_u64() || n.is_i64() => "integer",
            Value::Number(_) => "number",
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        if !allowed.contains(&actual) {
            return Err(format!("{value} is not of type {ty}"));
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{value} not in enum"));
        }
    }
    if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_f64), value.as_f64()) {
        if x < min {
            return Err(format!("{x} below minimum"));
        }
    }
    if let (Some(min), Some(s)) = (schema.get("minLength").and_then(Value::as_u64), value.as_str()) {
        if (s.chars().count() as u64) < min {
            return Err(format!("{s:?} too short"));
        }
    }
    if let Value::Object(map) = value {
        let props = schema.get("properties").and_then(Value::as_object);
        for key in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !map.contains_key(key.as_str().unwrap()) {
                return Err(format!("missing {key}"));
            }
        }
        for (k, v) in map {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => conforms(v, sub).map_err(|e| format!("{k}: {e}"))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("unexpected property {k}"))
                }
                None => {}
            }
        }
    }
    if let (Value::Array(items), Some(sub)) = (value, schema.get("items")) {
        for (i, item) in items.iter().enumerate() {
            conforms(item, sub).map_err(|e| format!("[{i}] {e}"))?;
        }
    }
    Ok(())
}

#[test]
fn json_report_matches_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../schema/report.schema.json")).unwrap();
    let out = superindex(&["verify", "genera", "--json"]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    conforms(&report, &schema).unwrap();

    let mut broken = report.clone();
    broken["checks"][0].as_object_mut().unwrap().remove("anchor");
    assert!(conforms(&broken, &schema).is_err());
}
