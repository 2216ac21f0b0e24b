use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn zforce(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zforce")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let o = zforce(args);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn temp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("zforce-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn sun8_is_sharp() {
    let (v, code) = json(&["analyze", "sun(8)", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["bounds"]["lower"], 8);
    assert_eq!(v["bounds"]["effective_upper"], 8);
    assert_eq!(v["zero_forcing"]["value"], 8);
    assert_eq!(v["passed"], true);
}

#[test]
fn report_keys_are_ordered() {
    let o = zforce(&["analyze", "cycle(6)", "--json"]);
    let text = stdout(&o);
    let keys =
        ["\"source\"", "\"graph6\"", "\"outerplanar\"", "\"bounds\"", "\"zero_forcing\"", "\"strategy\"", "\"passed\""];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn k4_is_declined_with_its_z() {
    let (v, code) = json(&["analyze", "C~", "--json"]);
    assert_eq!(code, 1);
    assert!(v["outerplanar"]["reason"].as_str().unwrap().starts_with("crossing chords"));
    assert_eq!(v["zero_forcing"]["value"], 3);
    assert!(v["audit"].as_array().unwrap().is_empty());
}

#[test]
fn strategy_on_hexagon() {
    let (v, code) = json(&["analyze", "cycle(6)", "--strategy", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["strategy"]["size"], 2);
    assert!(v["zero_forcing"].is_null());
}

#[test]
fn fractional_formula_is_exact() {
    // Pentagonal trunk with two triangle leaves hanging off it.
    let dir = temp_dir("frac");
    let file = dir.join("g.edges");
    let mut text = String::from("n 11\n");
    for i in 0..11 {
        text.push_str(&format!("{i} {}\n", (i + 1) % 11));
    }
    text.push_str("0 2\n2 4\n0 4\n5 7\n7 9\n5 9\n");
    std::fs::write(&file, text).unwrap();
    let (v, _) = json(&["analyze", file.to_str().unwrap(), "--json"]);
    assert_eq!(v["bounds"]["formula"], serde_json::json!({"num": 11, "den": 2}));
}

#[test]
fn unparseable_input_exits_1() {
    let o = zforce(&["analyze", "not a graph!"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--family", "random-outerplanar", "--n", "12", "--chords", "4", "--seed", "9", "--count", "5"];
    let a = stdout(&zforce(&args));
    assert_eq!(a, stdout(&zforce(&args)));
    assert_eq!(a.lines().count(), 5);
    // Each line is a separate seed.
    let lines: Vec<&str> = a.lines().collect();
    assert!(lines.windows(2).any(|w| w[0] != w[1]));
}

#[test]
fn gen_sun_has_2k_vertices() {
    let line = stdout(&zforce(&["gen", "--family", "sun", "--k", "7"]));
    let (v, _) = json(&["analyze", line.trim(), "--json", "--strategy"]);
    assert_eq!(v["n"], 14);
    assert_eq!(v["bounds"]["lower"], 7);
}

#[test]
fn dot_sun3_marks_three_seeds() {
    let dot = stdout(&zforce(&["export-dot", "sun(3)", "--color-zfs"]));
    assert_eq!(dot.matches("#4a90d9").count(), 3);
    assert_eq!(dot.matches("xlabel").count(), 3);
}

#[test]
fn dot_hexagon_shape() {
    let dot = stdout(&zforce(&["export-dot", "cycle(6)"]));
    assert_eq!(dot.matches(" -- ").count(), 6);
    let nodes =
        dot.lines().filter(|l| l.trim_start().chars().next().is_some_and(|c| c.is_ascii_digit()) && !l.contains("--"));
    assert_eq!(nodes.count(), 6);
}

#[test]
fn dot_diamond_is_all_foliage() {
    let dot = stdout(&zforce(&["export-dot", "C}", "--color-decomposition"]));
    assert_eq!(dot.matches("#8fd18f").count(), 4, "{dot}");
    assert!(!dot.contains("#b5835a"));
}

#[test]
fn empty_batch_passes() {
    let dir = temp_dir("empty");
    let file = dir.join("empty.g6");
    std::fs::write(&file, "# nothing here\n").unwrap();
    let o = zforce(&["batch", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn fixture_table_matches() {
    let table = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/table.g6");
    let (v, code) = json(&["batch", table, "--json"]);
    assert_eq!(code, 0, "{v:#}");
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r["expected_z"]["matches"] == true));
    assert_eq!(v["summary"]["declined"], 6);
}

#[test]
fn batch_mismatch_and_parse_errors() {
    let dir = temp_dir("mixed");
    let file = dir.join("c.g6");
    std::fs::write(&file, "Cl 2 square\n!!\n").unwrap();
    assert_eq!(zforce(&["batch", file.to_str().unwrap()]).status.code(), Some(1));
    std::fs::write(&file, "Cl 3 square\n").unwrap();
    assert_eq!(zforce(&["batch", file.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = zforce(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("ok")).count(), 12);
}

#[test]
fn selftest_reads_a_fixture_directory() {
    let dir = temp_dir("fixtures");
    std::fs::write(dir.join("c5.edges"), "# z = 2\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let o = zforce(&["selftest", "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(dir.join("c5.edges"), "# z = 3\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    assert_eq!(zforce(&["selftest", "--fixtures", dir.to_str().unwrap()]).status.code(), Some(2));
}
