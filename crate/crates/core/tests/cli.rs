use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-identity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn series_from_the_enumerator() {
    let o = run(&[
        "series", "--n", "0", "--j", "15", "--source", "oracle", "--format", "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let want = "1*a^0*b^0*q^0 + 1*a^1*b^0*q^1 + 1*a^1*b^0*q^2 + 1*a^2*b^0*q^3 + 1*a^0*b^1*q^4 \
                + 1*a^0*b^1*q^5 + 1*a^1*b^1*q^5 + 2*a^1*b^1*q^6 + 1*a^1*b^1*q^7 + 1*a^2*b^1*q^7 \
                + 1*a^2*b^1*q^8 + 1*a^0*b^2*q^9 + 1*a^1*b^2*q^10 + 1*a^1*b^2*q^11 + 1*a^2*b^2*q^12\n";
    assert_eq!(stdout(&o), want);
    let rec = run(&["series", "--n", "0", "--j", "15", "--source", "recurrence"]);
    assert_eq!(stdout(&rec), want);
}

#[test]
fn series_json_and_base_case() {
    let o = run(&["series", "--n", "0", "--j", "1", "--format", "json"]);
    assert_eq!(stdout(&o), "[[\"1\",0,0,0],[\"1\",1,0,1]]\n");
    let o = run(&["series", "--n", "-1", "--j", "7"]);
    assert_eq!(stdout(&o), "1*a^0*b^0*q^0\n");
}

#[test]
fn lemma1_suite_prints_fourteen_passing_lines() {
    let o = run(&["verify", "--suite", "lemma1", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 14);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["identity", "ms", "n", "pass", "residual_terms"]);
        assert_eq!(v["pass"], true);
        assert_eq!(v["residual_terms"], 0);
    }
    assert!(lines[0].starts_with(r#"{"identity":"J","n":0,"#));
    assert!(lines[13].starts_with(r#"{"identity":"K","n":6,"#));
}

#[test]
fn failing_suite_exits_one_with_diff_on_stderr() {
    let o = run(&["verify", "--suite", "lemma3", "--n-max", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with(r#"{"identity":"lemma3","n":0,"pass":false,"residual_terms":19,"#));
    assert!(out.lines().nth(1).unwrap().contains(r#""pass":true"#));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("1*a^1*b^1*q^0"));
}

#[test]
fn counts_table_contains_the_six_row() {
    let o = run(&["counts", "--side", "B", "--n-max", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("mu,nu,N,count\n"));
    assert!(out.lines().any(|l| l == "1,1,6,2"));
    let json = run(&["counts", "--side", "A", "--n-max", "2", "--format", "json"]);
    assert_eq!(
        stdout(&json),
        "[[0,0,0,\"1\"],[1,0,1,\"1\"],[1,0,2,\"1\"]]\n"
    );
}

#[test]
fn general_and_product() {
    let o = run(&[
        "general", "--lambda", "5", "--k", "3", "--a", "3", "--extra", "b0-533", "--n-max", "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("7,3,3\n"));
    let p = run(&["product", "--q-max", "3"]);
    assert_eq!(
        stdout(&p),
        "1*a^0*b^0*q^0 + 1*a^1*b^0*q^1 + 1*a^1*b^0*q^2 + 1*a^2*b^0*q^3\n"
    );
}

#[test]
fn bad_flags_exit_two() {
    for args in [
        &["verify", "--bogus"][..],
        &["verify", "--suite", "nothing"],
        &["series", "--n", "0", "--j", "16"],
        &["series", "--n", "7", "--j", "0", "--source", "oracle"],
        &[
            "general", "--lambda", "4", "--k", "3", "--a", "3", "--extra", "b0-533", "--n-max", "3",
        ],
        &[
            "general", "--lambda", "0", "--k", "3", "--a", "3", "--n-max", "3",
        ],
        &["counts", "--side", "C", "--n-max", "3"],
        &["verify", "--suite", "theorem3", "--n-max", "3"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn identical_invocations_give_identical_output() {
    for args in [
        &["counts", "--side", "B", "--n-max", "20"][..],
        &["series", "--n", "2", "--j", "9", "--format", "json"],
        &["product", "--q-max", "40"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let strip = |o: Output| -> Vec<String> {
        stdout(&o)
            .lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("ms");
                v.to_string()
            })
            .collect()
    };
    let a = strip(run(&["verify", "--suite", "link", "--n-max", "4"]));
    assert_eq!(a.len(), 4);
    assert_eq!(
        a,
        strip(run(&["verify", "--suite", "link", "--n-max", "4"]))
    );
}
