use std::process::{Command, Output};

fn epiword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epiword")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_prefixes() {
    for (args, expected) in [
        (vec!["--directive", "seed=;pre=;per=01"], "0100101001"),
        (vec!["--periodic", "01"], "0101010101"),
        (vec!["--example3"], "0110220110"),
        (vec!["--fixed-point", "0:01,1:0"], "0100101001"),
    ] {
        let mut all = vec!["gen"];
        all.extend(args);
        all.extend(["--n", "10"]);
        let out = epiword(&all);
        assert!(out.status.success(), "{all:?}");
        assert_eq!(stdout(&out).trim_end(), expected, "{all:?}");
    }
}

#[test]
fn projection_and_s_operator() {
    let out = epiword(&["project", "--directive", "per=012", "--subset", "1", "--n", "7"]);
    assert_eq!(stdout(&out).trim_end(), "BABBBAB");
    let out = epiword(&["s-op", "--word", "0110"]);
    assert_eq!(stdout(&out).trim_end(), "101");
    let out = epiword(&["s-op", "--word", "101", "--preimage", "0"]);
    assert_eq!(stdout(&out).trim_end(), "0110");
}

#[test]
fn exit_codes() {
    assert_eq!(epiword(&["check-morphism", "--morphism", "0:0100,1:01011,2:010111"]).status.code(), Some(0));
    let out = epiword(&["check-morphism", "--morphism", "0:110100110010,1:1", "--radius", "11"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    let not_rich =
        ["analyze", "--example3", "--morphism", "0:0100,1:01011,2:010111", "--depth", "5000", "--max-len", "12"];
    assert_eq!(epiword(&not_rich).status.code(), Some(1));
    assert_eq!(epiword(&["analyze", "--directive", "per=012", "--depth", "5000"]).status.code(), Some(0));
    assert_eq!(epiword(&["reproduce", "no-such-experiment"]).status.code(), Some(2));
    assert_eq!(epiword(&["gen", "--directive", "pre=01", "--n", "5"]).status.code(), Some(2));
    assert_eq!(epiword(&["gen", "--n", "5"]).status.code(), Some(2));
    assert_eq!(epiword(&["project", "--directive", "per=01", "--n", "5"]).status.code(), Some(2));
    assert_eq!(epiword(&["defect", "--periodic", "01", "--checkpoints", "9,3"]).status.code(), Some(2));
    assert_eq!(epiword(&["sweep", "--k", "2"]).status.code(), Some(2));
    let ternary = epiword(&["sweep", "--k", "3", "--samples", "2", "--depth", "1000"]);
    assert_eq!(ternary.status.code(), Some(0));
    assert!(stdout(&ternary).starts_with("# experiment: theorem2\n"));
    let not_closed = epiword(&["h-rich", "--periodic", "0010", "--nmax", "5", "--depth", "400"]);
    assert_eq!(not_closed.status.code(), Some(1));
    assert!(stdout(&not_closed).contains("closed-under-H"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["reproduce", "theorem2", "--format", "jsonl"];
    let a = epiword(&args);
    let b = epiword(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let sweep = ["sweep", "--k", "4", "--samples", "2", "--depth", "2000", "--format", "csv"];
    assert_eq!(epiword(&sweep).stdout, epiword(&sweep).stdout);
}

#[test]
fn config_file_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.cfg");
    std::fs::write(&config, "# defect run\nperiodic = 001\ncheckpoints = 10,100\nformat = csv\n").unwrap();
    let out_path = dir.path().join("out.csv");
    let out = epiword(&[
        "defect",
        "--config",
        config.to_str().unwrap(),
        "--checkpoints",
        "10,20",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(out_path).unwrap();
    assert_eq!(text, "depth,defect\n10,0\n20,0\n");
}

#[test]
fn h_rich_report() {
    let out = epiword(&[
        "h-rich",
        "--directive",
        "per=012",
        "--subset",
        "0",
        "--preimage",
        "1",
        "--nmax",
        "12",
        "--depth",
        "4000",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("h-rich"));
}
