use std::io::Write;
use std::process::{Command, Output, Stdio};

fn circtdc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circtdc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_circtdc"))
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
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn chidt_nine_agrees() {
    let out = circtdc(&["chidt", "9", "--exact", "--construct", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["version"], 1);
    assert_eq!(v["command"]["name"], "chidt");
    let row = &v["results"][0];
    assert_eq!(row["formula"]["value"], 4);
    assert_eq!(row["formula"]["source"], "formula");
    assert_eq!(row["construction"]["classes"]["value"], 4);
    assert_eq!(row["construction"]["classes"]["source"], "construction");
    assert_eq!(row["exact"]["value"]["value"], 4);
    assert_eq!(row["exact"]["value"]["source"], "exact-search");
    assert_eq!(v["summary"]["disagreements"], 0);
}

#[test]
fn chidt_twelve_exact() {
    let out = circtdc(&["chidt", "12", "--exact", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["exact"]["value"]["value"], 6);
}

#[test]
fn chidt_reduced_pair() {
    let out = circtdc(&["chidt", "7", "2", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("C_7(1,3)") && text.contains("formula 4"),
        "{text}"
    );
}

#[test]
fn sweep_single_row() {
    let out = circtdc(&["sweep", "6", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 1);
    assert_eq!(v["results"][0]["formula"]["value"], 2);
}

#[test]
fn sweep_hundred_constructions() {
    let out = circtdc(&["sweep", "6", "100", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 96);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn sweep_exit_two_on_disagreement() {
    // The exact value at n = 18 is below the closed form.
    let out = circtdc(&["sweep", "17", "18", "--exact-up-to", "18", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        json(&out)["summary"]["disagreeing"],
        serde_json::json!([18])
    );
}

#[test]
fn invariants_with_oracle() {
    let out = circtdc(&["invariants", "12", "--oracle", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let inv = v["results"][0]["invariants"].as_array().unwrap();
    let values: Vec<_> = inv[..3]
        .iter()
        .map(|e| e["oracle"]["value"].as_u64().unwrap())
        .collect();
    assert_eq!(values, [6, 2, 4]);
    assert!(inv[..3].iter().all(|e| e["agree"] == true));
}

#[test]
fn invariants_above_limit_are_closed_forms_only() {
    let out = circtdc(&["invariants", "30", "--oracle", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let inv = &v["results"][0]["invariants"][0];
    assert_eq!(inv["formula"]["value"], 15);
    assert!(inv["oracle"].is_null());
    assert!(inv["refused"].is_string());
}

#[test]
fn invariants_on_arbitrary_set() {
    let out = circtdc(&["invariants", "10", "--set", "1,4", "--oracle", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["results"][0]["invariants"][0]["formula"].is_null());
}

#[test]
fn verify_coloring_tables() {
    let out = with_stdin(
        &["verify-coloring", "8", "-f", "-", "--json"],
        "[[1,3,5,7],[2,4,6,8]]",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["report"]["tdc"], true);

    let out = with_stdin(
        &["verify-coloring", "9", "-f", "-", "--json"],
        "1 8\n2 9\n3 5 7\n4 6\n",
    );
    assert_eq!(json(&out)["results"][0]["report"]["tdc"], true);

    let out = with_stdin(
        &["verify-coloring", "9", "-f", "-", "--json"],
        "[[1,3,5],[2,4,6],[7,8,9]]",
    );
    let v = json(&out);
    assert_eq!(v["results"][0]["report"]["tdc"], false);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_coloring_input_errors() {
    let out = with_stdin(&["verify-coloring", "9", "-f", "-"], "1 2\n3 q\n");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2, column 3"), "{err}");

    let out = with_stdin(&["verify-coloring", "4", "-f", "-"], "[[1,2],[2,3,4]]");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("vertex 2"), "{err}");
}

#[test]
fn construct_and_reduce() {
    let out = circtdc(&["construct", "12", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"][0]["classes"]["value"], 6);

    let out = circtdc(&["reduce", "7", "2", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["results"][0]["vertex_map"]["image"],
        serde_json::json!([4, 1, 5, 2, 6, 3, 7])
    );
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(circtdc(&["chidt", "5"]).status.code(), Some(1));
    assert_eq!(circtdc(&["chidt", "10", "2", "6"]).status.code(), Some(1));
    assert_eq!(circtdc(&["reduce", "12", "4", "3"]).status.code(), Some(1));
    assert_eq!(circtdc(&["sweep", "9", "7"]).status.code(), Some(1));
    assert_eq!(circtdc(&["nonsense"]).status.code(), Some(1));
    assert_eq!(circtdc(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_flags_the_first_row() {
    let out = circtdc(&["table", "6", "20", "--csv"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().nth(1), Some("6,2,2,3,2,2,false"));
}
