use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcount"))
        .args(args)
        .env_remove("BRAIDCOUNT_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Vec<serde_json::Value> {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn normalize_examples() {
    assert_eq!(
        stdout(&["--format", "csv", "normalize", "s1 s2 s1"]),
        "input,coset,tag,form,j,k,b1,ell\ns1 s2 s1,a,power_of_delta,power_of_delta ell=1,,,,1\n"
    );
    assert_eq!(
        json(&["normalize", "s1^2"])[0]["form"],
        "j=1 k=2 b1=ε ell=0"
    );
    assert_eq!(
        json(&["normalize", "s1 s2"])[0]["form"],
        "j=2 k=-1 b1=ε ell=1"
    );
}

#[test]
fn parse_errors_exit_two_with_column() {
    for args in [
        &["normalize", "s1 s3"][..],
        &["syllables", "a1 b2"],
        &["bounds", "--word", "a1^"],
        &["report", "lambda", "--Y", "600*log(8"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("column"),
            "{args:?}"
        );
    }
}

#[test]
fn bad_parameters_exit_two() {
    for args in [
        &["count", "tuples", "--X", "-3"][..],
        &["count", "words", "--X", "1000000000001"],
        &["count", "classes", "--pairs", "0"],
        &["count", "tuples", "--X", "9", "--workers", "0"],
        &["report", "lambda", "--Y", "100"],
        &["verify", "--suite", "nothing"],
        &["--format", "xml", "normalize", "s1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bounds_examples() {
    let rows = json(&["bounds", "--word", "a1 A2"]);
    assert_eq!(rows[0]["lower_log_arg"], "9");
    assert_eq!(rows[0]["upper_log_arg"], "16");
    assert_eq!(rows[0]["exact_zero"], false);

    let rows = json(&["bounds", "--braid", "s1^7 D^3"]);
    assert_eq!(rows[0]["exact_zero"], true);

    let rows = json(&["bounds", "--word", "a1^4"]);
    assert_eq!(rows[0]["exact_zero"], true);
    assert_eq!(rows[1]["quantity"], "entropy");
    assert!(rows[1]["lower_value"].is_null());
    assert!(rows[1]["omitted_reason"]
        .as_str()
        .unwrap()
        .contains("fewer than two syllables"));

    let rows = json(&["bounds", "--word", "a1^2 A2^2"]);
    assert_eq!(rows[1]["exact_zero"], false);
    assert!(rows[1]["omitted_reason"].is_null());
}

#[test]
fn count_examples() {
    let rows = json(&["count", "tuples", "--X", "9"]);
    assert_eq!(rows[0]["exact"], "4");
    assert!(rows[0]["bound"].as_str().unwrap().starts_with("6.24"));
    assert_eq!(rows[0]["satisfied"], true);

    let rows = json(&["count", "words", "--X", "3"]);
    assert_eq!(rows[0]["exact"], "4");
    assert_eq!(rows[0]["bound"], "13.5");
    assert_eq!(rows[0]["satisfied"], true);

    let rows = json(&["count", "classes", "--pairs", "2"]);
    assert_eq!(rows[0]["exact"], "6");
    assert_eq!(rows[0]["bound"], "4");
    assert_eq!(rows[0]["satisfied"], true);
}

#[test]
fn csv_columns_match_json_keys() {
    for args in [
        &["count", "tuples", "--X", "100"][..],
        &["bounds", "--word", "a1 A2"],
        &["syllables", "a1^3 a2 a1"],
        &["report", "entropy", "--Y", "600*pi*log(8)"],
        &["theta", "s1^3 s2^2"],
    ] {
        let rows = json(args);
        let keys: Vec<&str> = rows[0]
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        let mut csv_args = vec!["--format", "csv"];
        csv_args.extend_from_slice(args);
        let text = stdout(&csv_args);
        let mut header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
        header.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(header, keys, "{args:?}");
        assert_eq!(text.lines().count(), rows.len() + 1);
    }
}

#[test]
fn output_is_byte_identical_across_runs_and_workers() {
    let a = stdout(&["count", "tuples", "--X", "123456", "--workers", "1"]);
    let b = stdout(&["count", "tuples", "--X", "123456", "--workers", "5"]);
    let c = stdout(&["count", "tuples", "--X", "123456"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn reports() {
    let r = &json(&["report", "lambda", "--Y", "600*log(8)"])[0];
    assert_eq!(r["index"], 2);
    assert_eq!(r["paper_bound"], "2.0");
    assert_eq!(r["satisfied"], true);
    let r = &json(&["report", "entropy", "--Y", "600*pi*log(8)"])[0];
    assert_eq!(r["index"], 2);
    assert_eq!(r["class_count"], "6");
    assert_eq!(r["satisfied"], true);
}

#[test]
fn theta_of_a_half_twist_power_is_reported() {
    let r = &json(&["theta", "D^3"])[0];
    assert!(r["theta"].is_null());
    assert!(r["reason"].is_string());
    assert_eq!(json(&["theta", "s1^3 s2^2 D"])[0]["theta"], "a1 a2");
}

#[test]
fn precision_comes_from_the_environment() {
    let args = ["bounds", "--word", "a1 A2"];
    let base = stdout(&args);
    let out = Command::new(env!("CARGO_BIN_EXE_braidcount"))
        .args(args)
        .env("BRAIDCOUNT_PRECISION", "512")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), base);
    let out = Command::new(env!("CARGO_BIN_EXE_braidcount"))
        .args(args)
        .env("BRAIDCOUNT_PRECISION", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "--suite", "braid"][..],
        &[
            "verify",
            "--suite",
            "counting",
            "--max-x",
            "2000",
            "--max-len",
            "10",
        ],
        &[
            "verify",
            "--suite",
            "classes",
            "--pairs",
            "3",
            "--conj-len",
            "4",
        ],
        &["verify", "--suite", "words", "--max-len", "4"],
    ] {
        let rows = json(args);
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r["passed"] == true), "{args:?}");
    }
}

#[test]
fn plain_format_has_a_header_line() {
    let text = stdout(&["--format", "plain", "syllables", "a1^3 a2 a1 A2"]);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("index  kind"));
    assert_eq!(lines.count(), 3);
}
