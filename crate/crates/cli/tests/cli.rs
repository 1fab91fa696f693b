use std::io::Write;
use std::process::{Command, Output, Stdio};

use maxai::{enumerate_all, MaxAiRecord, RecordRow};

fn maxai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxai"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = maxai(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> String {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxai"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_lists_56_functions_at_14() {
    let csv = stdout(&["enumerate", "-n", "14", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 57);
    assert_eq!(lines[0], "n,case,p0,params,triple,svv,weight");
    assert!(lines[1].contains(",000000001111111,"));
    let text = stdout(&["enumerate", "-n", "14"]);
    assert!(text.contains("SVV: v_f(0)...v_f(14)"));
    assert_eq!(text.lines().filter(|l| l.contains("item")).count(), 56);
}

#[test]
fn odd_or_zero_n_is_a_usage_error() {
    for n in ["3", "0"] {
        assert_eq!(maxai(&["enumerate", "-n", n]).status.code(), Some(2));
    }
    assert_eq!(maxai(&["ai", "--svv", "01x"]).status.code(), Some(2));
    assert_eq!(maxai(&["bogus"]).status.code(), Some(2));
}

#[test]
fn oversized_oracle_input_is_a_capacity_error() {
    let svv = "0".repeat(20);
    assert_eq!(maxai(&["ai", "--svv", &svv]).status.code(), Some(3));
    assert_eq!(
        maxai(&["verify", "-n", "14", "--exhaustive"]).status.code(),
        Some(3)
    );
}

#[test]
fn ai_reports_immunity() {
    assert!(stdout(&["ai", "--svv", "000000011111111"]).starts_with("AI = 7\n"));
    assert!(stdout(&["ai", "--svv", "00011"]).starts_with("AI = 2\n"));
    assert!(stdout(&["ai", "--svv", "00000"]).starts_with("AI = 0\n"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["ai", "--svv", "00011", "--format", "json"])).unwrap();
    assert_eq!(json["ai"], 2);
}

#[test]
fn sets_prints_partition_and_exempt_set() {
    let out = stdout(&["sets", "-n", "14"]);
    assert!(out.contains("A_0 = {7}"));
    assert!(out.contains("A_1 = {0, 2, 4, 6, 8, 10, 12, 14}"));
    assert!(out.contains("A_2 = {1, 5, 9, 13}"));
    assert!(out.contains("A_3 = {3, 11}"));
    assert!(out.contains("B = {0, 1, 3, 11, 13, 14}"));
}

#[test]
fn convert_round_trips() {
    assert_eq!(stdout(&["convert", "--svv", "001"]), "001\n");
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    for _ in 0..40 {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let n = 1 + (state % 20) as usize;
        let s: String = (0..=n)
            .map(|i| {
                if (state >> (i + 5)) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        let sanf = stdout(&["convert", "--svv", &s]);
        assert_eq!(with_stdin(&["convert", "--sanf", "-"], &sanf).trim(), s);
    }
}

#[test]
fn classify_names_the_family() {
    assert!(stdout(&["classify", "--svv", "000000011110111"]).starts_with("item2"));
    assert!(stdout(&["classify", "--svv", "000000011111110"]).starts_with("item3 p0=0"));
    assert_eq!(
        stdout(&["classify", "--svv", "000000000000000"]),
        "not max-AI\n"
    );
}

#[test]
fn csv_and_json_parse_back_losslessly() {
    let expected = enumerate_all(14).unwrap();
    let csv = stdout(&["enumerate", "-n", "14", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let from_csv: Vec<MaxAiRecord> = reader
        .deserialize::<RecordRow>()
        .map(|r| MaxAiRecord::try_from(r.unwrap()).unwrap())
        .collect();
    assert_eq!(from_csv, expected);

    let json = stdout(&["enumerate", "-n", "14", "--format", "json"]);
    let rows: Vec<RecordRow> = serde_json::from_str(&json).unwrap();
    let from_json: Vec<MaxAiRecord> = rows.into_iter().map(|r| r.try_into().unwrap()).collect();
    assert_eq!(from_json, expected);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["enumerate", "-n", "30", "--format", "json"][..],
        &[
            "verify", "-n", "8", "--sample", "60", "--seed", "5", "--format", "json",
        ][..],
    ] {
        assert_eq!(maxai(args).stdout, maxai(args).stdout);
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("maxai-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n6.csv");
    stdout(&[
        "enumerate",
        "-n",
        "6",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 21);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_passes_and_catches_faults() {
    let out = stdout(&["verify", "-n", "8", "--exhaustive"]);
    assert!(out.contains("24/512 max-AI, sets equal"));
    assert!(
        stdout(&["verify", "-n", "2", "--to", "6", "--exhaustive"])
            .lines()
            .count()
            == 3
    );
    assert!(stdout(&["verify", "-n", "8", "--sample", "50"]).contains("all pass"));

    for mode in [&["--exhaustive"][..], &["--sample", "20"][..]] {
        let mut args = vec!["verify", "-n", "8", "--inject-fault", "1"];
        args.extend_from_slice(mode);
        let out = maxai(&args);
        assert_eq!(out.status.code(), Some(1), "{mode:?}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("first counterexample: 010001111"));
    }
}
