use std::process::{Command, Output};

fn eisring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eisring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn divmod_lines() {
    let o = eisring(&["divmod", "--alpha", "10,0", "--modulus", "-6,5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q=-1,0 r=4,5 lift=10,0\n");
    let o = eisring(&["divmod", "--alpha", "10,1", "--modulus", "4,6"]);
    assert_eq!(stdout(&o), "q=-1,-2 r=2,3 lift=10,1\n");
    let o = eisring(&["divmod", "--alpha", "0,0", "--modulus", "1,0"]);
    assert_eq!(stdout(&o), "q=0,0 r=0,0 lift=0,0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(
        eisring(&["divmod", "--alpha", "1,0", "--modulus", "0,0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        eisring(&["divmod", "--alpha", "1;0", "--modulus", "2,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        eisring(&["verify", "--suite", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        eisring(&["residue-table", "--modulus", "6,0", "--out", "svg"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        eisring(&["residue-table", "--modulus", "240,90"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn residue_tables() {
    let o = eisring(&["residue-table", "--modulus", "6,0", "--out", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 37);
    assert_eq!(lines[0], "x,y,re_rep_a,re_rep_b");
    assert_eq!(lines[5], "4,0,-2,0");
    let o = eisring(&["residue-table", "--modulus", "-6,5", "--out", "csv"]);
    assert_eq!(stdout(&o).lines().nth(7), Some("6,0,0,5"));
    let o = eisring(&["residue-table", "--modulus", "1,0", "--out", "csv"]);
    assert_eq!(stdout(&o), "x,y,re_rep_a,re_rep_b\n0,0,0,0\n");
    let o = eisring(&["residue-table", "--modulus", "6,0", "--out", "json"]);
    assert!(stdout(&o).contains("\"schema\": \"eisring/v1\""));
}

#[test]
fn energy_table_rows() {
    let o = eisring(&["energy-table", "--builtin", "--out", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 24);
    assert!(text.contains("2,0,2,0,4,0.85,0.75,1.00,0.75,1.00,0.75"));
    assert!(text.contains("16,6,16,18,292,6.54,6.00,48.67,40.57,8.35,6.63"));
}

#[test]
fn energy_table_check_reports_mismatches() {
    let o = eisring(&["energy-table", "--builtin", "--check"]);
    // seven- and nine-point Gaussian rows do not match their reference cells
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("size 49") && err.contains("size 81"));
}

#[test]
fn energy_table_from_pairs_file() {
    let dir = std::env::temp_dir().join(format!("eisring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("pairs.csv");
    std::fs::write(&good, "# g, e\n2,0,2,0\n-5,12,-7,8\n").unwrap();
    let o = eisring(&[
        "energy-table",
        "--pairs",
        good.to_str().unwrap(),
        "--out",
        "csv",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 3);
    let bad = dir.join("bad.csv");
    std::fs::write(&bad, "2,3,2,0\n").unwrap();
    let o = eisring(&["energy-table", "--pairs", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn partitions() {
    let o = eisring(&[
        "partition",
        "--modulus",
        "-6,5",
        "--factors",
        "7",
        "--out",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let kids = v["tree"]["children"].as_array().unwrap();
    assert_eq!(kids.len(), 7);
    assert!(kids
        .iter()
        .all(|k| k["min_d2"] == 7 && k["points"].as_array().unwrap().len() == 13));

    let o = eisring(&[
        "partition",
        "--modulus",
        "6,0",
        "--factors",
        "2",
        "--out",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["tree"]["children"].as_array().unwrap().len(), 4);
    assert!(v["tree"]["children"]
        .as_array()
        .unwrap()
        .iter()
        .all(|k| k["min_d2"] == 4));

    let o = eisring(&["partition", "--modulus", "6,0", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["tree"]["children"].as_array().unwrap().is_empty());

    let o = eisring(&[
        "partition",
        "--modulus",
        "6,0",
        "--factors",
        "2",
        "--out",
        "svg",
    ]);
    let svg = stdout(&o);
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<circle").count(), 36);
}

#[test]
fn constellation_outputs() {
    let o = eisring(&[
        "constellation",
        "--kind",
        "gaussian",
        "--modulus",
        "2,0",
        "--out",
        "csv",
    ]);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = eisring(&["constellation", "--modulus", "-7,8", "--out", "svg"]);
    assert_eq!(stdout(&o).matches("<circle").count(), 169);
    let a = eisring(&["constellation", "--modulus", "6,12", "--out", "json"]);
    let b = eisring(&["constellation", "--modulus", "6,12", "--out", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_suites() {
    let o = eisring(&["verify", "--suite", "roundtrip", "--samples", "0"]);
    assert!(o.status.success());
    let o = eisring(&["verify", "--suite", "primitivity"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = eisring(&["verify", "--suite", "table5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("6 of 138 cells differ"));
}

#[test]
fn span_listing() {
    let o = eisring(&[
        "span",
        "--modulus",
        "2,0",
        "--length",
        "2",
        "--gen",
        "1,0;1,0",
        "--out",
        "csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("1+ρ,1+ρ"));
}
