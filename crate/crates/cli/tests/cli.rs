use std::process::{Command, Output};

fn ocrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ocrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gtable_json_grid() {
    let o = ocrc(&["gtable", "--n", "10", "--upto", "9", "--format", "json"]);
    assert!(o.status.success());
    let grid: Vec<Vec<String>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(grid.len(), 10);
    assert_eq!(
        grid[0],
        ["1", "1", "-1", "2", "-5", "14", "-42", "132", "-429", "1430"]
    );
    assert_eq!(grid[3][1], "4");
    assert_eq!(grid[5][1], "6");
}

#[test]
fn tphi_passes() {
    let o = ocrc(&["check", "tphi", "--max-genus", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PASS (1 rows)\n"));
}

#[test]
fn gluing_is_deterministic() {
    let a = ocrc(&[
        "check",
        "gluing",
        "--max-d",
        "5",
        "--max-k",
        "4",
        "--format",
        "csv",
        "--verbose",
    ]);
    let b = ocrc(&[
        "check",
        "gluing",
        "--max-d",
        "5",
        "--max-k",
        "4",
        "--format",
        "csv",
        "--verbose",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("check,monomial,lhs,rhs,pass\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ocrc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ocrc(&["check", "nothing"]).status.code(), Some(2));
    assert_eq!(ocrc(&["gtable", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(
        ocrc(&["hodge", "--series", "--order", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn potential_csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("ocrc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orb.csv");
    let o = ocrc(&[
        "potential",
        "orbifold",
        "--max-winding",
        "1",
        "--max-boundary",
        "1",
        "--order",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("monomial,re,im\n"));
    assert!(text.contains("w1,1/2,0\n"));
    assert!(text.contains("z^4,1/96,0\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hodge_json_values_are_fractions() {
    let o = ocrc(&["hodge", "--max-genus", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["value"], "1/4");
    assert_eq!(v[2]["mbar"][0], 1);
}

#[test]
fn small_closed_and_open_checks() {
    let o = ocrc(&[
        "check",
        "ccrc",
        "--max-tree-edges",
        "2",
        "--max-label",
        "2",
        "--order",
        "4",
        "--max-winding",
        "2",
        "--degree",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = ocrc(&[
        "check",
        "ocrc",
        "--max-winding",
        "2",
        "--max-boundary",
        "2",
        "--order",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
