use std::process::{Command, Output};

fn faro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_faro"))
        .args(args)
        .env("FARO_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = faro(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn period_of(family: &str, cards: &str) -> String {
    let text = stdout(&["period", "--family", family, "--cards", cards]);
    text.lines()
        .find_map(|l| l.strip_prefix("period: "))
        .unwrap()
        .to_string()
}

#[test]
fn table_csv_matches_golden() {
    let golden = include_str!("golden/table64.csv");
    assert_eq!(
        stdout(&["table", "--max-cards", "64", "--format", "csv"]),
        golden
    );
}

#[test]
fn table_rejects_odd_maximum() {
    assert_eq!(faro(&["table", "--max-cards", "63"]).status.code(), Some(2));
    assert_eq!(faro(&["table", "--max-cards", "0"]).status.code(), Some(2));
}

#[test]
fn table_json_has_three_rows() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["table", "--max-cards", "10", "--format", "json"])).unwrap();
    assert_eq!(v["cards"], serde_json::json!([2, 4, 6, 8, 10]));
    assert_eq!(v["rows"][0]["periods"][4], 10);
    assert_eq!(v["rows"][1]["periods"][4], 6);
    assert_eq!(v["rows"][2]["periods"][4], 9);
}

#[test]
fn period_examples() {
    assert_eq!(period_of("in", "52"), "52");
    assert_eq!(period_of("monge-h2", "54"), "53");
    assert_eq!(period_of("in", "2"), "2");
    assert_eq!(period_of("out", "52"), "8");
}

#[test]
fn period_reports_oracle_and_skips_it_for_big_decks() {
    let small = stdout(&["period", "--family", "in", "--cards", "52"]);
    assert!(small.contains("oracle: 52"), "{small}");
    let big = stdout(&["period", "--family", "in", "--cards", "1024"]);
    assert!(big.contains("oracle: skipped"), "{big}");
    assert!(big.contains("period: 20"), "{big}");
}

#[test]
fn period_generalized_and_odd() {
    let text = stdout(&["period", "--family", "gen-in", "--cards", "27", "-k", "3"]);
    assert!(text.contains("period: 6"), "{text}");
    let text = stdout(&["period", "--family", "odd-first", "--cards", "5"]);
    assert!(text.contains("period: 4"), "{text}");
}

#[test]
fn period_json_key_order_is_stable() {
    let text = stdout(&[
        "period", "--family", "in", "--cards", "8", "--format", "json",
    ]);
    let keys: Vec<&str> = text
        .lines()
        .filter_map(|l| l.trim().split_once(':').map(|(k, _)| k.trim_matches('"')))
        .collect();
    assert_eq!(
        keys,
        [
            "family",
            "cards",
            "packets",
            "period",
            "oracle",
            "color_period"
        ]
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        faro(&["period", "--family", "in", "--cards", "7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        faro(&["period", "--family", "nope", "--cards", "8"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        faro(&["period", "--family", "in", "--cards", "8", "-k", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        faro(&["plan", "move", "--card", "1", "--to", "2", "--cards", "24"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(faro(&[]).status.code(), Some(2));
}

#[test]
fn orbit_examples() {
    let text = stdout(&["orbits", "--family", "in", "--cards", "54", "--base", "1"]);
    assert!(text.lines().any(|l| l == "11: 11 22 33 44"), "{text}");
    let text = stdout(&["orbits", "--family", "out", "--cards", "32"]);
    assert!(text.lines().any(|l| l == "1: 1 2 4 8 16"), "{text}");
    let text = stdout(&["orbits", "--family", "in", "--cards", "6", "--power", "0"]);
    assert_eq!(text, "1: 1\n2: 2\n3: 3\n4: 4\n5: 5\n6: 6\n");
}

#[test]
fn orbit_traversal_follows_the_cycle() {
    let sorted = stdout(&["orbits", "--family", "out", "--cards", "32", "--base", "0"]);
    let walked = stdout(&["orbits", "--family", "out", "--cards", "32", "--traversal"]);
    assert!(sorted.lines().any(|l| l == "3: 3 6 12 17 24"), "{sorted}");
    assert!(walked.lines().any(|l| l == "3: 3 6 12 24 17"), "{walked}");
}

#[test]
fn plan_examples() {
    let out = faro(&["plan", "move", "--card", "19", "--to", "7", "--cards", "32"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "plan: IOIOO\ntrajectory: 19 6 12 25 19 7\n"
    );
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("not minimal"));
    assert_eq!(
        stdout(&["plan", "move", "--card", "5", "--to", "5", "--cards", "32"]),
        "plan: \ntrajectory: 5\n"
    );
    assert_eq!(
        stdout(&["plan", "bottom-to", "--to", "7", "--cards", "32"]),
        "plan: III\ntrajectory: 0 1 3 7\n"
    );
}

#[test]
fn boundary_plans_reach_their_targets() {
    let last = |text: String| {
        text.lines()
            .find_map(|l| l.strip_prefix("trajectory: "))
            .and_then(|t| t.split(' ').next_back())
            .unwrap()
            .to_string()
    };
    for i in 0..32 {
        let s = i.to_string();
        assert_eq!(
            last(stdout(&["plan", "bottom-to", "--to", &s, "--cards", "32"])),
            s
        );
        assert_eq!(
            last(stdout(&["plan", "top-to", "--to", &s, "--cards", "32"])),
            s
        );
        assert_eq!(
            last(stdout(&[
                "plan",
                "to-bottom",
                "--card",
                &s,
                "--cards",
                "32"
            ])),
            "0"
        );
        assert_eq!(
            last(stdout(&["plan", "to-top", "--card", &s, "--cards", "32"])),
            "31"
        );
    }
    assert_eq!(
        last(stdout(&[
            "plan",
            "bottom-to",
            "--to",
            "17",
            "--cards",
            "52"
        ])),
        "17"
    );
}

#[test]
fn simulate_examples() {
    let text = stdout(&["simulate", "--family", "in", "--cards", "8", "--steps", "1"]);
    assert_eq!(text, "1 2 3 4 5 6 7 8\n5 1 6 2 7 3 8 4\n");
    let text = stdout(&["simulate", "--family", "in", "--cards", "8", "--steps", "6"]);
    assert_eq!(text.lines().last(), Some("1 2 3 4 5 6 7 8"));
    let text = stdout(&[
        "simulate", "--family", "monge-h4", "--cards", "6", "--steps", "0",
    ]);
    assert_eq!(text, "0 1 2 3 4 5\n");
}
