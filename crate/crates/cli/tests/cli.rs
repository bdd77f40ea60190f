use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn pseudopal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudopal"))
        .args(args)
        .env_remove("PSEUDOPAL_MAX_LEN")
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pseudopal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(args: &[&str]) -> Vec<String> {
    let o = pseudopal(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o).lines().map(str::to_owned).collect()
}

fn schema() -> Value {
    let text = include_str!("../schema/report.schema.json");
    serde_json::from_str(text).unwrap()
}

/// Enough of JSON Schema for the shipped report schema.
fn validate(schema: &Value, v: &Value, path: &str) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{path}: {what}"));
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => return fail("bad type keyword"),
        };
        let ok = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_u64() || v.is_i64(),
            "number" => v.is_number(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            _ => false,
        });
        if !ok {
            return fail(&format!("expected {types:?}, got {v}"));
        }
    }
    if let Some(e) = schema.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            return fail(&format!("{v} not in {e:?}"));
        }
    }
    if let Some(c) = schema.get("const") {
        if c != v {
            return fail(&format!("{v} != {c}"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_f64) {
        if v.as_f64().is_some_and(|x| x < min) {
            return fail("below minimum");
        }
    }
    if let Some(obj) = v.as_object() {
        for key in schema
            .get("required")
            .and_then(Value::as_array)
            .into_iter()
            .flatten()
        {
            let key = key.as_str().unwrap();
            if !obj.contains_key(key) {
                return fail(&format!("missing {key}"));
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, value) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(sub) => validate(sub, value, &format!("{path}.{key}"))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return fail(&format!("unexpected property {key}"))
                }
                None => {}
            }
        }
    }
    for sub in schema
        .get("allOf")
        .and_then(Value::as_array)
        .into_iter()
        .flatten()
    {
        validate(sub, v, path)?;
    }
    if let Some(cond) = schema.get("if") {
        if validate(cond, v, path).is_ok() {
            if let Some(then) = schema.get("then") {
                validate(then, v, path)?;
            }
        }
    }
    Ok(())
}

fn json_report(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = pseudopal(&full);
    let report: Value =
        serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    validate(&schema(), &report, "$").unwrap_or_else(|e| panic!("{args:?}: {e}\n{report:#}"));
    report
}

#[test]
fn validator_rejects_bad_reports() {
    let s = schema();
    let good = serde_json::json!({
        "command": "closure", "inputs": {}, "result": {}, "evidence": "exact", "version": "0"
    });
    assert!(validate(&s, &good, "$").is_ok());
    let mut bad = good.clone();
    bad["evidence"] = "maybe".into();
    assert!(validate(&s, &bad, "$").is_err());
    let mut scoped = good.clone();
    scoped["evidence"] = "prefix-scoped".into();
    assert!(validate(&s, &scoped, "$").is_err());
    let mut analyze = good;
    analyze["command"] = "analyze".into();
    assert!(validate(&s, &analyze, "$").is_err());
}

#[test]
fn documented_examples() {
    assert_eq!(
        lines(&["closure", "--tau", "a:b,b:a", "--word", "aaba"]),
        ["aababb"]
    );
    assert_eq!(
        lines(&[
            "fixpoint",
            "--family",
            "E",
            "--alphabet",
            "ab",
            "--length",
            "6"
        ]),
        ["abbaab"]
    );
    assert_eq!(
        lines(&[
            "slope",
            "--directive-from-fixpoint",
            "R",
            "--n",
            "1",
            "--terms",
            "8"
        ]),
        ["0,2,1,2,1,2,1,1,1"]
    );
}

#[test]
fn pal_and_companion() {
    assert_eq!(
        lines(&["pal", "--tau", "H", "--directive", "abc"]),
        ["abcacbabca"]
    );
    assert_eq!(lines(&["pal", "--directive", "abc"]), ["abacaba"]);
    assert_eq!(
        lines(&[
            "pal",
            "--tau",
            "a:a,b:c,c:b",
            "--directive",
            "(abc)^w",
            "--length",
            "10",
            "--verify"
        ]),
        ["abcacbabca"]
    );
    assert_eq!(
        lines(&["fixpoint", "--family", "E", "--length", "15", "--companion"]),
        ["ababaababaababa"]
    );
    let o = pseudopal(&["pal", "--tau", "E", "--directive", "aa", "--length", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exhausted"));
}

#[test]
fn fixpoint_round_trips_through_verify() {
    for (family, tau, n) in [
        ("R", "R", "2"),
        ("E", "E", "1"),
        ("H", "H", "3"),
        ("trivial", "R", "1"),
    ] {
        let word = lines(&["fixpoint", "--family", family, "--n", n, "--length", "500"]).remove(0);
        let o = with_stdin(&["verify", "--tau", tau, "--input", "-"], &word);
        assert!(o.status.success(), "{family}");
        assert_eq!(stdout(&o).trim(), "consistent");
    }
    let o = pseudopal(&["verify", "--tau", "E", "--word", "aabb"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "inconsistent\nfirst_mismatch=2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(pseudopal(&["closure", "--nope"]).status.code(), Some(64));
    assert_eq!(pseudopal(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(pseudopal(&["--help"]).status.code(), Some(0));
    let o = pseudopal(&["fixpoint", "--family", "E", "--n", "2", "--length", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n = 1"));
    assert_eq!(
        pseudopal(&["closure", "--tau", "a:b,b:c", "--word", "ab"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pseudopal(&["slope", "--directive", "ba"]).status.code(),
        Some(2)
    );
    assert_eq!(
        pseudopal(&[
            "analyze",
            "complexity",
            "--n",
            "9",
            "--input",
            "/nonexistent/file"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn length_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_pseudopal"))
        .args(["fixpoint", "--family", "R", "--length", "1000"])
        .env("PSEUDOPAL_MAX_LEN", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PSEUDOPAL_MAX_LEN"));
}

#[test]
fn long_words_are_digested_unless_raw() {
    let short = lines(&["fixpoint", "--family", "R", "--length", "4096"]);
    assert_eq!(short[0].len(), 4096);
    let long = lines(&["fixpoint", "--family", "R", "--length", "5000"]);
    assert!(long[0].starts_with("length=5000 sha256="), "{}", long[0]);
    let raw = lines(&["--raw", "fixpoint", "--family", "R", "--length", "5000"]);
    assert_eq!(raw[0].len(), 5000);
    assert!(raw[0].starts_with(&short[0]));
    let report = json_report(&["fixpoint", "--family", "R", "--length", "5000"]);
    assert_eq!(report["result"]["word"]["length"], 5000);
    assert_eq!(
        report["result"]["word"]["sha256"].as_str().unwrap().len(),
        64
    );
}

#[test]
fn every_command_emits_a_valid_report() {
    let dir = std::env::temp_dir().join(format!("pseudopal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s.txt");
    let word = lines(&["fixpoint", "--family", "E", "--length", "100"]).remove(0);
    std::fs::write(&path, format!("{word}\n")).unwrap();
    let input = path.to_str().unwrap();

    let r = json_report(&["closure", "--tau", "E", "--word", "aaba"]);
    assert_eq!(r["result"]["word"], "aababb");
    json_report(&[
        "pal",
        "--tau",
        "E",
        "--directive",
        "a(ab)^w",
        "--length",
        "40",
    ]);
    let r = json_report(&["fixpoint", "--family", "H", "--n", "2", "--length", "12"]);
    assert_eq!(r["result"]["n"], 2);
    json_report(&["verify", "--tau", "E", "--input", input]);

    let r = json_report(&["analyze", "balance", "--input", input]);
    assert_eq!(r["result"]["balanced"], false);
    assert_eq!(r["witness"]["heavy"], "aa");
    assert_eq!(r["witness"]["light"], "bb");
    assert_eq!(r["witness"]["letter"], "a");
    let r = json_report(&["analyze", "powers", "--k", "5", "--input", input]);
    assert_eq!(r["result"]["power_free"]["free"], true);
    json_report(&["analyze", "complexity", "--n", "3", "--input", input]);
    let r = json_report(&["analyze", "freq", "--input", input]);
    assert_eq!(r["result"]["frequencies"]["a"], "1/2");
    let r = json_report(&["analyze", "period", "--input", input]);
    assert_eq!(
        (r["evidence"].as_str(), r["analyzed_length"].as_u64()),
        (Some("prefix-scoped"), Some(100))
    );
    json_report(&["analyze", "palprefix", "--input", input]);

    let r = json_report(&[
        "slope",
        "--directive",
        "aabab",
        "--terms",
        "3",
        "--convergent",
        "3",
    ]);
    assert_eq!(r["result"]["quotients"], serde_json::json!([0, 3, 1, 1]));
    assert_eq!(r["result"]["convergent"]["value"], "2/7");
    let r = json_report(&["slope", "--directive", "(ab)^w", "--terms", "4"]);
    assert_eq!(r["result"]["sturm"]["form"], "two");
    let r = json_report(&[
        "selfcheck",
        "--seed",
        "3",
        "--sequences",
        "20",
        "--cases",
        "20",
    ]);
    assert_eq!(r["result"]["passed"], true);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn provisional_quotient_is_opt_in() {
    assert_eq!(
        lines(&["slope", "--directive", "aabaaa", "--terms", "2"]),
        ["0,3,1"]
    );
    assert_eq!(
        pseudopal(&["slope", "--directive", "aabaaa", "--terms", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lines(&[
            "slope",
            "--directive",
            "aabaaa",
            "--terms",
            "3",
            "--include-provisional"
        ]),
        ["0,3,1,3"]
    );
}

#[test]
fn selfcheck_is_seeded() {
    let a = lines(&[
        "selfcheck",
        "--seed",
        "11",
        "--sequences",
        "30",
        "--cases",
        "30",
    ]);
    assert!(a.iter().all(|l| l.starts_with("PASS")), "{a:?}");
    assert_eq!(
        a,
        lines(&[
            "selfcheck",
            "--seed",
            "11",
            "--sequences",
            "30",
            "--cases",
            "30"
        ])
    );
}
